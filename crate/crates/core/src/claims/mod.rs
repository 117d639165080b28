//! Closed-form index formulas as reviewable data.
//!
//! Every displayed case of every theorem is one record in `data/claims.txt`,
//! together with the class-size and edge-count tables stated in the proofs.
//! [`verify`] checks the formulas against witness colourings, the φ engine
//! and the oracle; [`report`] renders the outcome.

pub mod expr;
mod report;
mod verify;

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::coloring::{PhiVariant, WitnessKind};
use crate::error::{Error, LoadIssue, Result};
use crate::exact::Rational;
use crate::graph::Family;
use crate::indices::Index;
use expr::{Form, Poly};

pub use report::{report, Report};
pub use verify::{assign_verdict, verify, ClaimResult, M4Std, Reference, Request, Semantics, Verdict};

/// Theorem identifiers in the order they appear in the data file.
pub const THEOREMS: [&str; 8] = ["2.1", "2.2", "3.1", "3.2", "4.1", "4.2", "5.1", "5.2"];

/// Denominators that occur in the printed formulas.
pub const DENOMINATORS: [i64; 5] = [1, 2, 3, 8, 18];

const BUILTIN: &str = include_str!("../../data/claims.txt");

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Condition {
    Even,
    Odd,
    Mod3(u8),
}

impl Condition {
    pub fn holds(self, n: u32) -> bool {
        match self {
            Condition::Even => n.is_multiple_of(2),
            Condition::Odd => n % 2 == 1,
            Condition::Mod3(r) => n % 3 == r as u32,
        }
    }

    /// The conditions that together cover every n, for the split `self`
    /// belongs to.
    fn siblings(self) -> Vec<Condition> {
        match self {
            Condition::Even | Condition::Odd => vec![Condition::Even, Condition::Odd],
            Condition::Mod3(_) => (0..3).map(Condition::Mod3).collect(),
        }
    }
}

impl fmt::Display for Condition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Condition::Even => f.write_str("even"),
            Condition::Odd => f.write_str("odd"),
            Condition::Mod3(r) => write!(f, "mod3={r}"),
        }
    }
}

impl FromStr for Condition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "even" => Ok(Condition::Even),
            "odd" => Ok(Condition::Odd),
            "mod3=0" => Ok(Condition::Mod3(0)),
            "mod3=1" => Ok(Condition::Mod3(1)),
            "mod3=2" => Ok(Condition::Mod3(2)),
            _ => Err(Error::Unknown {
                what: "condition",
                value: s.to_string(),
            }),
        }
    }
}

/// Which text a claim was read from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Reading {
    /// The formula as printed in the result.
    Statement,
    /// The value computed in the argument, where it differs from the statement.
    Proof,
    /// The printed variant label taken at face value.
    Literal,
}

impl Reading {
    pub fn name(self) -> &'static str {
        match self {
            Reading::Statement => "statement",
            Reading::Proof => "proof",
            Reading::Literal => "literal",
        }
    }
}

impl FromStr for Reading {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Reading::Statement, Reading::Proof, Reading::Literal]
            .into_iter()
            .find(|r| r.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "reading",
                value: s.to_string(),
            })
    }
}

/// One displayed case of one theorem part: `(c2·n² + c1·n + c0) / den`
/// whenever `condition` holds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Claim {
    pub family: Family,
    pub variant: PhiVariant,
    pub index: Index,
    pub condition: Condition,
    /// `[c0, c1, c2]`
    pub numerator: [i64; 3],
    pub denominator: i64,
    /// `Thm 2.1(i)`
    pub source: String,
    /// `2.1`
    pub theorem: String,
    /// `(i)`
    pub part: String,
    pub display: String,
    pub reading: Reading,
    pub note: String,
    pub line: usize,
}

impl Claim {
    pub fn formula(&self) -> Poly {
        let den = self.denominator;
        Poly::new(self.numerator.iter().map(|&c| Rational::new(c, den)).collect())
    }

    /// `(i) even`
    pub fn case(&self) -> String {
        format!("{} {}", self.part, self.condition)
    }

    /// The formula printed back in the given form.
    pub fn render(&self, form: Form) -> String {
        expr::render(&self.numerator, self.denominator, form)
    }

    /// The form in which the formula was printed, if either form reproduces
    /// the display text up to whitespace.
    pub fn printed_form(&self) -> Option<Form> {
        let want = strip_ws(&self.display);
        [Form::Expanded, Form::Factored]
            .into_iter()
            .find(|&f| strip_ws(&self.render(f)) == want)
    }

    /// Matches a selector such as `2.1`, `5.1(i)` or `all`.
    pub fn selected_by(&self, selector: &str) -> bool {
        selector == "all"
            || selector == self.theorem
            || selector == format!("{}{}", self.theorem, self.part)
    }

    /// The data-file line this claim was loaded from, normalised.
    pub fn to_record(&self) -> String {
        let [c0, c1, c2] = self.numerator;
        format!(
            "{} {} {} {} {c2} {c1} {c0} {} | {} | {} | {} | {}",
            self.family,
            self.variant,
            self.index,
            self.condition,
            self.denominator,
            self.source,
            self.display,
            self.reading.name(),
            self.note
        )
    }
}

/// Value of the claim at `n`.
pub fn evaluate(claim: &Claim, n: u32) -> Result<Rational> {
    if n < 3 || !claim.condition.holds(n) {
        return Err(Error::ConditionMismatch {
            condition: claim.condition.to_string(),
            n,
        });
    }
    Ok(claim.formula().eval(n as i64))
}

/// Class sizes and cross-class edge counts stated for one witness colouring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessTable {
    pub family: Family,
    pub variant: PhiVariant,
    pub condition: Condition,
    pub kind: WitnessKind,
    pub source: String,
    /// `theta[j-1]` is the stated size of class `j`; `None` when not stated.
    pub theta: Option<Vec<Poly>>,
    /// `(t, s, η_ts)` for the stated entries only, `t < s`, 1-based.
    pub eta: Vec<(usize, usize, Poly)>,
    pub note: String,
    pub line: usize,
}

impl WitnessTable {
    pub fn theta_at(&self, n: u32) -> Option<Vec<Rational>> {
        self.theta
            .as_ref()
            .map(|t| t.iter().map(|p| p.eval(n as i64)).collect())
    }

    pub fn eta_at(&self, n: u32) -> Vec<(usize, usize, Rational)> {
        self.eta
            .iter()
            .map(|(t, s, p)| (*t, *s, p.eval(n as i64)))
            .collect()
    }

    /// Index to pass to the witness constructor so that it selects the
    /// colouring this table describes.
    pub fn representative_index(&self) -> Index {
        match self.kind {
            WitnessKind::Main => Index::M1,
            WitnessKind::SecondZagreb => Index::M2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimSet {
    pub claims: Vec<Claim>,
    pub tables: Vec<WitnessTable>,
}

impl ClaimSet {
    pub fn builtin() -> ClaimSet {
        ClaimSet::parse(BUILTIN).expect("shipped claims data is well formed")
    }

    pub fn parse(text: &str) -> Result<ClaimSet> {
        let mut issues = Vec::new();
        let mut claims = Vec::new();
        let mut tables = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line = i + 1;
            let content = raw.trim();
            if content.is_empty() || content.starts_with('#') {
                continue;
            }
            let parsed = if content.starts_with("table ") {
                parse_table(content, line).map(|t| tables.push(t))
            } else {
                parse_claim(content, line).map(|c| claims.push(c))
            };
            if let Err(message) = parsed {
                issues.push(LoadIssue { line, message });
            }
        }
        issues.extend(partition_issues(&claims));
        if issues.is_empty() {
            Ok(ClaimSet { claims, tables })
        } else {
            Err(Error::ClaimsLoad(issues))
        }
    }
}

/// Every claim shipped with the crate, in data-file order.
pub fn builtin_claims() -> Vec<Claim> {
    ClaimSet::builtin().claims
}

fn strip_ws(s: &str) -> String {
    s.chars().filter(|c| !c.is_whitespace()).collect()
}

fn split_fields(content: &str, want: usize) -> std::result::Result<Vec<&str>, String> {
    let fields: Vec<&str> = content.split('|').map(str::trim).collect();
    if fields.len() != want {
        return Err(format!("expected {want} `|`-separated fields, found {}", fields.len()));
    }
    Ok(fields)
}

fn parse_source(source: &str) -> std::result::Result<(String, String), String> {
    let rest = source
        .strip_prefix("Thm ")
        .ok_or_else(|| format!("source `{source}` does not cite a theorem"))?;
    let open = rest.find('(').ok_or_else(|| format!("source `{source}` has no part"))?;
    let (theorem, part) = rest.split_at(open);
    if !THEOREMS.contains(&theorem) {
        return Err(format!("unknown theorem `{theorem}`"));
    }
    if !["(i)", "(ii)", "(iii)", "(iv)"].contains(&part) {
        return Err(format!("unknown part `{part}`"));
    }
    Ok((theorem.to_string(), part.to_string()))
}

fn part_of(index: Index) -> &'static str {
    match index {
        Index::M1 => "(i)",
        Index::M2 => "(ii)",
        Index::M3 => "(iii)",
        Index::M4 => "(iv)",
    }
}

fn parse_claim(content: &str, line: usize) -> std::result::Result<Claim, String> {
    let fields = split_fields(content, 5)?;
    let head: Vec<&str> = fields[0].split_whitespace().collect();
    if head.len() != 8 {
        return Err(format!("expected 8 leading columns, found {}", head.len()));
    }
    let err = |e: Error| e.to_string();
    let family: Family = head[0].parse().map_err(err)?;
    let variant: PhiVariant = head[1].parse().map_err(err)?;
    let index: Index = head[2].parse().map_err(err)?;
    let condition: Condition = head[3].parse().map_err(err)?;
    let mut ints = [0i64; 4];
    for (slot, text) in ints.iter_mut().zip(&head[4..8]) {
        *slot = text
            .parse()
            .map_err(|_| format!("`{text}` is not an integer coefficient"))?;
    }
    let [c2, c1, c0, denominator] = ints;
    if !DENOMINATORS.contains(&denominator) {
        return Err(format!("denominator {denominator} is not one of {DENOMINATORS:?}"));
    }
    let source = fields[1].to_string();
    let (theorem, part) = parse_source(&source)?;
    if part != part_of(index) {
        return Err(format!("part {part} does not belong to index {index}"));
    }
    let reading: Reading = fields[3].parse().map_err(err)?;
    let claim = Claim {
        family,
        variant,
        index,
        condition,
        numerator: [c0, c1, c2],
        denominator,
        source,
        theorem,
        part,
        display: fields[2].to_string(),
        reading,
        note: fields[4].to_string(),
        line,
    };
    let shown = expr::parse(&claim.display).map_err(err)?;
    if shown != claim.formula() {
        return Err(format!(
            "display `{}` does not equal the coefficients {}",
            claim.display,
            claim.render(Form::Expanded)
        ));
    }
    if claim.printed_form().is_none() {
        return Err(format!(
            "display `{}` is not reproduced by printing the coefficients (`{}`)",
            claim.display,
            claim.render(Form::Expanded)
        ));
    }
    Ok(claim)
}

fn parse_table(content: &str, line: usize) -> std::result::Result<WitnessTable, String> {
    let fields = split_fields(content, 5)?;
    let head: Vec<&str> = fields[0].split_whitespace().collect();
    if head.len() != 5 {
        return Err(format!("expected 5 leading table columns, found {}", head.len()));
    }
    let err = |e: Error| e.to_string();
    let family: Family = head[1].parse().map_err(err)?;
    let variant: PhiVariant = head[2].parse().map_err(err)?;
    let condition: Condition = head[3].parse().map_err(err)?;
    let kind = match head[4] {
        "main" => WitnessKind::Main,
        "second_zagreb" => WitnessKind::SecondZagreb,
        other => return Err(format!("unknown colouring `{other}`")),
    };
    let theta_text = fields[2]
        .strip_prefix("theta=")
        .ok_or("third field must start with `theta=`")?;
    let theta = if theta_text == "-" {
        None
    } else {
        Some(
            theta_text
                .split(',')
                .map(|e| expr::parse(e).map_err(err))
                .collect::<std::result::Result<Vec<_>, _>>()?,
        )
    };
    let eta_text = fields[3]
        .strip_prefix("eta=")
        .ok_or("fourth field must start with `eta=`")?;
    let mut eta = Vec::new();
    if eta_text != "-" {
        for entry in eta_text.split_whitespace() {
            let (pair, value) = entry
                .split_once(':')
                .ok_or_else(|| format!("eta entry `{entry}` lacks `:`"))?;
            let digits: Vec<usize> = pair
                .chars()
                .map(|c| c.to_digit(10).map(|d| d as usize))
                .collect::<Option<_>>()
                .ok_or_else(|| format!("bad class pair `{pair}`"))?;
            match digits[..] {
                [t, s] if 1 <= t && t < s => eta.push((t, s, expr::parse(value).map_err(err)?)),
                _ => return Err(format!("bad class pair `{pair}`")),
            }
        }
    }
    Ok(WitnessTable {
        family,
        variant,
        condition,
        kind,
        source: fields[1].to_string(),
        theta,
        eta,
        note: fields[4].to_string(),
        line,
    })
}

/// Conditions within one formula group must cover every n exactly once.
fn partition_issues(claims: &[Claim]) -> Vec<LoadIssue> {
    type Key = (Family, PhiVariant, Index, String, Reading);
    let mut groups: BTreeMap<Key, Vec<&Claim>> = BTreeMap::new();
    for c in claims {
        groups
            .entry((c.family, c.variant, c.index, c.theorem.clone(), c.reading))
            .or_default()
            .push(c);
    }
    let mut issues = Vec::new();
    for group in groups.values() {
        let mut have: Vec<Condition> = group.iter().map(|c| c.condition).collect();
        have.sort();
        let want = group[0].condition.siblings();
        if have != want {
            let c = group[0];
            issues.push(LoadIssue {
                line: c.line,
                message: format!(
                    "{} {} {} ({}) conditions {:?} do not partition the integers",
                    c.family,
                    c.variant,
                    c.index,
                    c.reading.name(),
                    have.iter().map(|h| h.to_string()).collect::<Vec<_>>()
                ),
            });
        }
    }
    issues
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::int;

    fn find<'a>(claims: &'a [Claim], source: &str, cond: Condition, reading: Reading) -> &'a Claim {
        claims
            .iter()
            .find(|c| c.source == source && c.condition == cond && c.reading == reading)
            .unwrap()
    }

    #[test]
    fn shipped_table_has_every_case() {
        let claims = builtin_claims();
        let statement = claims.iter().filter(|c| c.reading == Reading::Statement).count();
        assert_eq!(statement, 72);
        assert_eq!(claims.iter().filter(|c| c.reading == Reading::Literal).count(), 12);
        assert_eq!(claims.iter().filter(|c| c.reading == Reading::Proof).count(), 4);
        for t in THEOREMS {
            for index in Index::ALL {
                assert!(claims.iter().any(|c| c.theorem == t && c.index == index));
            }
        }
    }

    #[test]
    fn spot_transcriptions() {
        let claims = builtin_claims();
        let c = find(&claims, "Thm 2.1(i)", Condition::Even, Reading::Statement);
        assert_eq!((c.family, c.variant, c.numerator, c.denominator), (Family::Flower, PhiVariant::Minus, [9, 5, 0], 1));
        let c = find(&claims, "Thm 4.1(iv)", Condition::Mod3(1), Reading::Statement);
        assert_eq!((c.numerator, c.denominator), ([-92, 94, 16], 18));
        let c = find(&claims, "Thm 5.2(i)", Condition::Odd, Reading::Statement);
        assert_eq!((c.variant, c.numerator, c.denominator), (PhiVariant::Plus, [20, 27, 0], 1));
    }

    #[test]
    fn evaluation_examples() {
        let claims = builtin_claims();
        let c = find(&claims, "Thm 2.1(i)", Condition::Even, Reading::Statement);
        assert_eq!(evaluate(c, 6).unwrap(), int(39));
        let c = find(&claims, "Thm 5.1(i)", Condition::Even, Reading::Statement);
        assert_eq!(evaluate(c, 4).unwrap(), Rational::new(145, 2));
        let c = find(&claims, "Thm 4.1(ii)", Condition::Mod3(0), Reading::Statement);
        assert_eq!(evaluate(c, 6).unwrap(), int(136));
        assert!(matches!(evaluate(c, 7), Err(Error::ConditionMismatch { .. })));
    }

    #[test]
    fn reversal_invariant_parts_agree() {
        let claims = builtin_claims();
        let minus = find(&claims, "Thm 2.1(iii)", Condition::Even, Reading::Statement);
        let plus = find(&claims, "Thm 2.2(iii)", Condition::Even, Reading::Statement);
        for n in [4, 6, 8] {
            assert_eq!(evaluate(minus, n).unwrap(), evaluate(plus, n).unwrap());
        }
    }

    #[test]
    fn every_record_round_trips() {
        let set = ClaimSet::builtin();
        let lines: Vec<&str> = BUILTIN.lines().collect();
        for c in &set.claims {
            assert_eq!(strip_ws(&c.to_record()), strip_ws(lines[c.line - 1]), "line {}", c.line);
            assert!(c.source.starts_with(&format!("Thm {}", c.theorem)));
            let form = c.printed_form().unwrap();
            assert_eq!(strip_ws(&c.render(form)), strip_ws(&c.display));
        }
    }

    #[test]
    fn conditions_partition_within_groups() {
        assert!(partition_issues(&builtin_claims()).is_empty());
    }

    #[test]
    fn only_the_relabelled_closed_sunflower_result_has_literal_rows() {
        for c in builtin_claims().iter().filter(|c| c.reading == Reading::Literal) {
            assert_eq!(c.theorem, "4.2");
            assert_eq!(c.variant, PhiVariant::Minus);
        }
    }

    #[test]
    fn malformed_records_are_listed() {
        let text = "\
flower minus m1 even 0 5 9 1 | Thm 2.1(i) | 5n+9 | statement |
flower minus m1 odd 0 5 21 7 | Thm 2.1(i) | 5n+21 | statement |
flower minus m2 even 0 13 0 1 | Thm 2.1(ii) | 13n+1 | statement |
flower minus m2 odd 0 13 16 1 | Thm 2.1(ii)
";
        match ClaimSet::parse(text) {
            Err(Error::ClaimsLoad(issues)) => {
                let lines: Vec<usize> = issues.iter().map(|i| i.line).collect();
                assert!(lines.contains(&2) && lines.contains(&3) && lines.contains(&4));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn missing_case_is_reported() {
        let text = "flower minus m1 even 0 5 9 1 | Thm 2.1(i) | 5n+9 | statement |\n";
        assert!(matches!(ClaimSet::parse(text), Err(Error::ClaimsLoad(_))));
    }

    #[test]
    fn selectors() {
        let claims = builtin_claims();
        let c = find(&claims, "Thm 5.1(i)", Condition::Even, Reading::Statement);
        assert!(c.selected_by("5.1") && c.selected_by("5.1(i)") && c.selected_by("all"));
        assert!(!c.selected_by("5.1(ii)") && !c.selected_by("5.2"));
    }

    #[test]
    fn tables_parse() {
        let set = ClaimSet::builtin();
        assert_eq!(set.tables.len(), 17);
        let t = &set.tables[1];
        assert_eq!(t.theta_at(5).unwrap(), vec![int(5), int(4), int(1), int(1)]);
        assert_eq!(t.eta_at(5)[0], (1, 2, int(7)));
    }
}
