use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use super::{evaluate, Claim};
use crate::budget::Budget;
use crate::coloring::{chromatic_number, phi_minus, phi_plus, witness, Coloring, PhiVariant};
use crate::error::{Error, Result};
use crate::exact::Rational;
use crate::graph::{build, Family, FamilySpec, Graph};
use crate::indices::{bundle, profile, Index, IndexBundle};
use crate::oracle::{extrema, permutation_optimum, Goal, Objective};

/// What a claimed value is compared against.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Semantics {
    /// Extremum over all proper χ-colourings.
    Oracle,
    /// Extremum over relabelings of the φ-engine partition.
    Permutation,
    /// Value of the explicit construction.
    Witness,
}

impl Semantics {
    pub fn name(self) -> &'static str {
        match self {
            Semantics::Oracle => "oracle",
            Semantics::Permutation => "permutation",
            Semantics::Witness => "witness",
        }
    }
}

impl fmt::Display for Semantics {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Semantics {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        [Semantics::Oracle, Semantics::Permutation, Semantics::Witness]
            .into_iter()
            .find(|m| m.name() == s)
            .ok_or_else(|| Error::Unknown {
                what: "semantics",
                value: s.to_string(),
            })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    #[serde(rename = "NONINTEGER")]
    NonInteger,
    NoWitness,
    /// The reference value was not computed because of the size budget.
    Skipped,
}

impl Verdict {
    pub const ALL: [Verdict; 5] = [
        Verdict::Match,
        Verdict::Mismatch,
        Verdict::NonInteger,
        Verdict::NoWitness,
        Verdict::Skipped,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Verdict::Match => "MATCH",
            Verdict::Mismatch => "MISMATCH",
            Verdict::NonInteger => "NONINTEGER",
            Verdict::NoWitness => "NO_WITNESS",
            Verdict::Skipped => "SKIPPED",
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Reference value under the chosen semantics, or why there is none.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Reference {
    Value(Rational),
    NoWitness,
    Skipped,
}

/// Verdict for one row, from the value tuple alone.
pub fn assign_verdict(
    index: Index,
    claimed: Rational,
    reference: Reference,
    witness: Option<Rational>,
) -> Verdict {
    if index.is_integral() && !claimed.is_integer() {
        return Verdict::NonInteger;
    }
    let reference = match reference {
        Reference::Value(v) => v,
        Reference::NoWitness => return Verdict::NoWitness,
        Reference::Skipped => return Verdict::Skipped,
    };
    if claimed != reference {
        return Verdict::Mismatch;
    }
    match witness {
        None => Verdict::NoWitness,
        Some(w) if w != claimed => Verdict::Mismatch,
        Some(_) => Verdict::Match,
    }
}

/// Standard (unhalved) total irregularity of the colourings behind an `m4` row.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct M4Std {
    pub witness: Option<u64>,
    pub phi: Option<u64>,
    pub oracle: Option<u64>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClaimResult {
    pub claim: Claim,
    pub n: u32,
    pub chi: u32,
    pub claimed: Rational,
    pub witness: Option<Rational>,
    pub phi: Option<Rational>,
    pub oracle: Option<Rational>,
    pub permutation: Option<Rational>,
    pub m4_std: Option<M4Std>,
    pub verdict: Verdict,
    /// Colouring attaining the reference value, kept for MISMATCH rows.
    pub reference_coloring: Option<Coloring>,
    /// n below the range the formulas are stated for.
    pub experimental: bool,
}

/// Which claims to check, on which graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Request {
    /// Theorem selectors such as `2.1` or `5.1(i)`; `all` or empty selects all.
    pub theorems: Vec<String>,
    /// Families to build, each with its values of n.
    pub scope: Vec<(Family, Vec<u32>)>,
    pub semantics: Semantics,
}

impl Request {
    /// Every family, each over the same values of n.
    pub fn uniform(theorems: Vec<String>, n_values: Vec<u32>, semantics: Semantics) -> Request {
        let scope = [
            Family::Flower,
            Family::Sunflower,
            Family::ClosedSunflower,
            Family::Blossom,
        ]
        .into_iter()
        .map(|f| (f, n_values.clone()))
        .collect();
        Request {
            theorems,
            scope,
            semantics,
        }
    }
}

const N_MIN: u32 = 4;

/// Checks the selected claims. Rows come in data-file order, then by n.
pub fn verify(claims: &[Claim], request: &Request, budget: Budget) -> Result<Vec<ClaimResult>> {
    for sel in &request.theorems {
        if sel != "all" && !claims.iter().any(|c| c.selected_by(sel)) {
            return Err(Error::Unknown {
                what: "theorem",
                value: sel.clone(),
            });
        }
    }
    let selected: Vec<(usize, &Claim)> = claims
        .iter()
        .enumerate()
        .filter(|(_, c)| request.theorems.is_empty() || request.theorems.iter().any(|s| c.selected_by(s)))
        .collect();
    if selected.is_empty() {
        return Err(Error::EmptySelection("no claims selected".into()));
    }
    if request.scope.iter().all(|(_, ns)| ns.is_empty()) {
        return Err(Error::EmptySelection("no families or values of n".into()));
    }
    let mut jobs: Vec<(FamilySpec, Vec<(usize, &Claim)>)> = Vec::new();
    for &(family, ref ns) in &request.scope {
        for &n in ns {
            let spec = FamilySpec::new(family, n)?;
            let rows: Vec<(usize, &Claim)> = selected
                .iter()
                .copied()
                .filter(|(_, c)| c.family == family && c.condition.holds(n))
                .collect();
            if !rows.is_empty() {
                jobs.push((spec, rows));
            }
        }
    }
    if jobs.is_empty() {
        return Err(Error::EmptySelection(
            "the selected claims do not apply to the requested families".into(),
        ));
    }
    let per_job: Vec<Vec<(usize, ClaimResult)>> = jobs
        .par_iter()
        .map(|(spec, rows)| {
            let mut ctx = Context::new(*spec, request.semantics, budget)?;
            rows.iter()
                .map(|&(pos, claim)| Ok((pos, ctx.check(claim)?)))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<_>>()?;
    let mut all: Vec<(usize, ClaimResult)> = per_job.into_iter().flatten().collect();
    all.sort_by_key(|(pos, r)| (*pos, r.n));
    Ok(all.into_iter().map(|(_, r)| r).collect())
}

fn goal_for(variant: PhiVariant) -> Goal {
    match variant {
        PhiVariant::Minus => Goal::Min,
        PhiVariant::Plus => Goal::Max,
    }
}

fn absorb_budget<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded { .. }) | Err(Error::TooManyClasses(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// Everything computed once per (family, n).
struct Context {
    spec: FamilySpec,
    graph: Graph,
    chi: u32,
    semantics: Semantics,
    budget: Budget,
    phi: HashMap<PhiVariant, Option<(Coloring, IndexBundle)>>,
    witnesses: HashMap<(PhiVariant, Index), Option<(Coloring, IndexBundle)>>,
    oracle: HashMap<(Objective, Goal), Option<(Rational, Coloring)>>,
}

impl Context {
    fn new(spec: FamilySpec, semantics: Semantics, budget: Budget) -> Result<Context> {
        let graph = build(spec)?;
        let chi = chromatic_number(&graph);
        Ok(Context {
            spec,
            graph,
            chi,
            semantics,
            budget,
            phi: HashMap::new(),
            witnesses: HashMap::new(),
            oracle: HashMap::new(),
        })
    }

    fn phi(&mut self, variant: PhiVariant) -> Result<Option<(Coloring, IndexBundle)>> {
        if let Some(hit) = self.phi.get(&variant) {
            return Ok(hit.clone());
        }
        let coloring = match variant {
            PhiVariant::Minus => phi_minus(&self.graph, self.chi, self.budget),
            PhiVariant::Plus => phi_plus(&self.graph, self.chi, self.budget),
        };
        let entry = match absorb_budget(coloring)? {
            Some(c) => {
                let b = bundle(&self.graph, &c)?;
                Some((c, b))
            }
            None => None,
        };
        self.phi.insert(variant, entry.clone());
        Ok(entry)
    }

    fn witness(&mut self, variant: PhiVariant, index: Index) -> Result<Option<(Coloring, IndexBundle)>> {
        if let Some(hit) = self.witnesses.get(&(variant, index)) {
            return Ok(hit.clone());
        }
        let entry = match witness(self.spec, variant, index) {
            Ok(c) => {
                let b = bundle(&self.graph, &c)?;
                Some((c, b))
            }
            Err(Error::NoWitness(_)) => None,
            Err(e) => return Err(e),
        };
        self.witnesses.insert((variant, index), entry.clone());
        Ok(entry)
    }

    fn oracle(&mut self, objective: Objective, goal: Goal) -> Result<Option<(Rational, Coloring)>> {
        if let Some(hit) = self.oracle.get(&(objective, goal)) {
            return Ok(hit.clone());
        }
        let found = absorb_budget(extrema(&self.graph, self.chi, objective, goal, self.budget))?
            .flatten()
            .map(|e| (e.value, e.witness));
        self.oracle.insert((objective, goal), found.clone());
        Ok(found)
    }

    fn check(&mut self, claim: &Claim) -> Result<ClaimResult> {
        let n = self.spec.n;
        let claimed = evaluate(claim, n)?;
        let objective = Objective::for_index(claim.index);
        let goal = goal_for(claim.variant);
        let wit = self.witness(claim.variant, claim.index)?;
        let phi = self.phi(claim.variant)?;

        let mut oracle = None;
        let mut permutation = None;
        let (reference, reference_coloring) = match self.semantics {
            Semantics::Oracle => match self.oracle(objective, goal)? {
                Some((v, c)) => {
                    oracle = Some((v, c.clone()));
                    (Reference::Value(v), Some(c))
                }
                None => (Reference::Skipped, None),
            },
            Semantics::Permutation => {
                let best = match &phi {
                    Some((c, _)) => {
                        let p = profile(&self.graph, c)?;
                        absorb_budget(permutation_optimum(&p, objective, goal))?
                            .map(|(v, perm)| c.map_colors(&perm).map(|relabeled| (v, relabeled)))
                            .transpose()?
                    }
                    None => None,
                };
                match best {
                    Some((v, c)) => {
                        permutation = Some(v);
                        (Reference::Value(v), Some(c))
                    }
                    None => (Reference::Skipped, None),
                }
            }
            Semantics::Witness => match &wit {
                Some((c, b)) => (Reference::Value(b.value(claim.index)), Some(c.clone())),
                None => (Reference::NoWitness, None),
            },
        };

        let witness_value = wit.as_ref().map(|(_, b)| b.value(claim.index));
        let verdict = assign_verdict(claim.index, claimed, reference, witness_value);
        let m4_std = (claim.index == Index::M4).then(|| M4Std {
            witness: wit.as_ref().map(|(_, b)| b.m4_std),
            phi: phi.as_ref().map(|(_, b)| b.m4_std),
            oracle: oracle.as_ref().map(|(_, c)| {
                bundle(&self.graph, c).map(|b| b.m4_std).expect("oracle colourings are proper")
            }),
        });
        Ok(ClaimResult {
            claim: claim.clone(),
            n,
            chi: self.chi,
            claimed,
            witness: witness_value,
            phi: phi.as_ref().map(|(_, b)| b.value(claim.index)),
            oracle: oracle.map(|(v, _)| v),
            permutation,
            m4_std,
            verdict,
            reference_coloring: if verdict == Verdict::Mismatch {
                reference_coloring
            } else {
                None
            },
            experimental: n < N_MIN,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::claims::builtin_claims;
    use crate::exact::int;

    fn run(theorems: &[&str], ns: Vec<u32>, semantics: Semantics) -> Vec<ClaimResult> {
        let req = Request::uniform(theorems.iter().map(|s| s.to_string()).collect(), ns, semantics);
        verify(&builtin_claims(), &req, Budget::default()).unwrap()
    }

    #[test]
    fn verdict_is_a_function_of_the_values() {
        let v = |c: Rational, r: Reference, w: Option<Rational>| assign_verdict(Index::M1, c, r, w);
        assert_eq!(v(int(29), Reference::Value(int(29)), Some(int(29))), Verdict::Match);
        assert_eq!(v(int(29), Reference::Value(int(30)), Some(int(29))), Verdict::Mismatch);
        assert_eq!(v(int(29), Reference::Value(int(29)), Some(int(31))), Verdict::Mismatch);
        assert_eq!(v(int(29), Reference::Value(int(29)), None), Verdict::NoWitness);
        assert_eq!(v(int(29), Reference::NoWitness, None), Verdict::NoWitness);
        assert_eq!(v(int(29), Reference::Skipped, Some(int(29))), Verdict::Skipped);
        assert_eq!(
            v(Rational::new(145, 2), Reference::Value(int(85)), Some(int(85))),
            Verdict::NonInteger
        );
        assert_eq!(
            assign_verdict(Index::M4, Rational::new(7, 2), Reference::Value(Rational::new(7, 2)), Some(Rational::new(7, 2))),
            Verdict::Match
        );
    }

    #[test]
    fn flower_minus_at_four() {
        let rows = run(&["2.1"], vec![4], Semantics::Oracle);
        assert_eq!(rows.len(), 4);
        assert!(rows.iter().all(|r| r.verdict == Verdict::Match), "{rows:#?}");
        assert_eq!(rows[0].oracle, Some(int(29)));
    }

    #[test]
    fn blossom_first_part_is_half_integral() {
        let rows = run(&["5.1(i)"], vec![4, 6], Semantics::Witness);
        let statement: Vec<_> = rows
            .iter()
            .filter(|r| r.claim.reading == super::super::Reading::Statement)
            .collect();
        assert_eq!(statement.len(), 2);
        assert!(statement.iter().all(|r| r.verdict == Verdict::NonInteger));
        assert_eq!(statement[0].claimed, Rational::new(145, 2));
        assert_eq!(statement[0].witness, Some(int(85)));
    }

    #[test]
    fn match_rows_agree_everywhere() {
        for r in run(&["all"], vec![4, 5], Semantics::Oracle) {
            if r.verdict == Verdict::Match {
                assert_eq!(r.witness, Some(r.claimed));
                assert_eq!(r.oracle, Some(r.claimed));
            }
        }
    }

    #[test]
    fn rows_are_ordered_by_record_then_n() {
        let rows = run(&["3.1"], vec![7, 4, 5, 6], Semantics::Witness);
        let keys: Vec<(usize, u32)> = rows.iter().map(|r| (r.claim.line, r.n)).collect();
        let mut sorted = keys.clone();
        sorted.sort();
        assert_eq!(keys, sorted);
        assert_eq!(rows.len(), 16);
    }

    #[test]
    fn witness_semantics_without_construction() {
        let rows = run(&["5.2"], vec![4], Semantics::Witness);
        assert!(rows.iter().all(|r| matches!(r.verdict, Verdict::NoWitness | Verdict::NonInteger)));
    }

    #[test]
    fn selection_errors() {
        let claims = builtin_claims();
        let empty = Request {
            theorems: vec![],
            scope: vec![],
            semantics: Semantics::Witness,
        };
        assert!(matches!(verify(&claims, &empty, Budget::default()), Err(Error::EmptySelection(_))));
        let unknown = Request::uniform(vec!["9.9".into()], vec![4], Semantics::Witness);
        assert!(matches!(verify(&claims, &unknown, Budget::default()), Err(Error::Unknown { .. })));
        let off_family = Request {
            theorems: vec!["2.1".into()],
            scope: vec![(Family::Blossom, vec![4])],
            semantics: Semantics::Witness,
        };
        assert!(matches!(verify(&claims, &off_family, Budget::default()), Err(Error::EmptySelection(_))));
    }

    #[test]
    fn small_n_rows_are_experimental() {
        let rows = run(&["2.1(i)"], vec![3, 4], Semantics::Witness);
        assert_eq!(rows.len(), 2);
        for r in rows {
            assert_eq!(r.experimental, r.n == 3);
        }
    }

    #[test]
    fn budget_marks_rows_skipped() {
        let req = Request::uniform(vec!["2.1(i)".into()], vec![4], Semantics::Oracle);
        let rows = verify(&builtin_claims(), &req, Budget::new(5)).unwrap();
        assert_eq!(rows[0].verdict, Verdict::Skipped);
        assert_eq!(rows[0].oracle, None);
    }
}
