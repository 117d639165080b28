use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, FromArgMatches, Parser, Subcommand, ValueEnum};
use serde_json::json;

use chromind_core::claims::{self, report, verify, Request, Semantics, THEOREMS};
use chromind_core::coloring::{chromatic_number, ensure_proper, phi_minus, phi_plus, witness, PhiVariant};
use chromind_core::exact::{show, RationalJson};
use chromind_core::indices::{bundle, Index};
use chromind_core::oracle::{extrema, Goal, Objective};
use chromind_core::{build, Budget, Error, Family, FamilySpec};

#[derive(Parser)]
#[command(name = "chromind", version, about = "Chromatic Zagreb and irregularity indices of wheel-derived graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print a family member as DOT or JSON.
    Gen {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Emit::Json)]
        emit: Emit,
    },
    /// Colour a family member and print its four indices.
    Indices {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        n: u32,
        #[arg(long, value_enum, default_value_t = Variant::Minus)]
        variant: Variant,
        /// Use the explicit construction behind this index instead of the φ engine.
        #[arg(long, value_enum)]
        witness: Option<IndexArg>,
        /// Palette size for the φ engine (default: the chromatic number).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Exhaustive extremum of one index over all proper colourings.
    Oracle {
        #[arg(long, value_parser = parse_family)]
        family: Family,
        #[arg(long, value_parser = clap::value_parser!(u32).range(3..))]
        n: u32,
        #[arg(long, value_enum)]
        index: ObjectiveArg,
        #[arg(long, value_enum)]
        goal: GoalArg,
        /// Palette size (default: the chromatic number).
        #[arg(long)]
        k: Option<u32>,
    },
    /// Check the closed-form claims and print a report.
    Verify {
        /// Comma-separated theorem ids, optionally with a part (`5.1(i)`), or `all`.
        #[arg(long, default_value = "all")]
        theorems: String,
        /// Values of n: `4..8` (inclusive), `5` or `4,6,8`.
        #[arg(long, default_value = "4..7", value_parser = parse_n_values)]
        n: NValues,
        #[arg(long, value_enum, default_value_t = SemanticsArg::Oracle)]
        semantics: SemanticsArg,
        /// Directory receiving report.json and report.txt.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Print the JSON report instead of the table.
        #[arg(long)]
        json: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Emit {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum Variant {
    Minus,
    Plus,
}

impl From<Variant> for PhiVariant {
    fn from(v: Variant) -> Self {
        match v {
            Variant::Minus => PhiVariant::Minus,
            Variant::Plus => PhiVariant::Plus,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum IndexArg {
    M1,
    M2,
    M3,
    M4,
}

impl From<IndexArg> for Index {
    fn from(i: IndexArg) -> Self {
        match i {
            IndexArg::M1 => Index::M1,
            IndexArg::M2 => Index::M2,
            IndexArg::M3 => Index::M3,
            IndexArg::M4 => Index::M4,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum ObjectiveArg {
    M1,
    M2,
    M3,
    #[value(name = "m4_paper", alias = "m4")]
    M4Paper,
    #[value(name = "m4_std")]
    M4Std,
}

impl From<ObjectiveArg> for Objective {
    fn from(o: ObjectiveArg) -> Self {
        match o {
            ObjectiveArg::M1 => Objective::M1,
            ObjectiveArg::M2 => Objective::M2,
            ObjectiveArg::M3 => Objective::M3,
            ObjectiveArg::M4Paper => Objective::M4Paper,
            ObjectiveArg::M4Std => Objective::M4Std,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum GoalArg {
    Min,
    Max,
}

#[derive(Clone, Copy, ValueEnum)]
enum SemanticsArg {
    Oracle,
    Permutation,
    Witness,
}

impl From<SemanticsArg> for Semantics {
    fn from(s: SemanticsArg) -> Self {
        match s {
            SemanticsArg::Oracle => Semantics::Oracle,
            SemanticsArg::Permutation => Semantics::Permutation,
            SemanticsArg::Witness => Semantics::Witness,
        }
    }
}

#[derive(Clone, Debug)]
struct NValues(Vec<u32>);

fn parse_family(s: &str) -> Result<Family, String> {
    s.parse::<Family>().map_err(|e| e.to_string())
}

fn parse_n_values(s: &str) -> Result<NValues, String> {
    let bad = || format!("`{s}` is not a value list like 4..8, 5 or 4,6,8");
    let mut out = Vec::new();
    for part in s.split(',') {
        let part = part.trim();
        if let Some((lo, hi)) = part.split_once("..") {
            let hi = hi.strip_prefix('=').unwrap_or(hi);
            let lo: u32 = lo.trim().parse().map_err(|_| bad())?;
            let hi: u32 = hi.trim().parse().map_err(|_| bad())?;
            if lo > hi {
                return Err(bad());
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad())?);
        }
    }
    if let Some(&small) = out.iter().find(|&&n| n < 3) {
        return Err(format!("n = {small} is too small (need n >= 3)"));
    }
    out.sort_unstable();
    out.dedup();
    Ok(NValues(out))
}

fn after_help() -> String {
    let families: Vec<&str> = Family::ALL.iter().map(|f| f.name()).collect();
    format!(
        "Families: {}\nTheorems: {}\n\nExit codes: 0 ok, 1 runtime error, 2 usage error, 3 size budget exceeded.\n\
         The vertex budget defaults to 25 and is read from CHROMIND_BUDGET_VERTICES.",
        families.join(", "),
        THEOREMS.join(", ")
    )
}

fn main() -> ExitCode {
    let help = after_help();
    let mut command = Cli::command().after_help(help.clone());
    for sub in ["gen", "indices", "oracle", "verify"] {
        command = command.mut_subcommand(sub, |c| c.after_help(help.clone()));
    }
    let matches = command.get_matches();
    let cli = match Cli::from_arg_matches(&matches) {
        Ok(cli) => cli,
        Err(e) => e.exit(),
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded { .. } => ExitCode::from(3),
                Error::InvalidN(_) | Error::Unknown { .. } | Error::EmptySelection(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}

/// Writes to stdout. A closed pipe ends the process quietly.
fn write_out(text: &str) -> chromind_core::Result<()> {
    let mut out = io::stdout().lock();
    match out.write_all(text.as_bytes()).and_then(|_| out.flush()) {
        Ok(()) => Ok(()),
        Err(e) if e.kind() == io::ErrorKind::BrokenPipe => std::process::exit(0),
        Err(e) => Err(Error::Io(format!("cannot write to stdout: {e}"))),
    }
}

fn print_json(value: &serde_json::Value) -> chromind_core::Result<()> {
    let mut text = serde_json::to_string_pretty(value).expect("JSON serialises");
    text.push('\n');
    write_out(&text)
}

fn run(command: Command) -> chromind_core::Result<()> {
    let budget = Budget::from_env();
    match command {
        Command::Gen { family, n, emit } => {
            let g = build(FamilySpec::new(family, n)?)?;
            match emit {
                Emit::Dot => write_out(&g.to_dot())?,
                Emit::Json => print_json(&serde_json::to_value(g.to_document()).expect("document serialises"))?,
            }
        }
        Command::Indices {
            family,
            n,
            variant,
            witness: construction,
            k,
        } => {
            let spec = FamilySpec::new(family, n)?;
            let g = build(spec)?;
            let coloring = match construction {
                Some(index) => witness(spec, variant.into(), index.into())?,
                None => {
                    let k = k.unwrap_or_else(|| chromatic_number(&g));
                    match PhiVariant::from(variant) {
                        PhiVariant::Minus => phi_minus(&g, k, budget)?,
                        PhiVariant::Plus => phi_plus(&g, k, budget)?,
                    }
                }
            };
            ensure_proper(&g, &coloring)?;
            print_json(&serde_json::to_value(bundle(&g, &coloring)?).expect("bundle serialises"))?;
        }
        Command::Oracle {
            family,
            n,
            index,
            goal,
            k,
        } => {
            let g = build(FamilySpec::new(family, n)?)?;
            budget.check(g.vertex_count())?;
            let chi = chromatic_number(&g);
            let k = k.unwrap_or(chi);
            let goal = match goal {
                GoalArg::Min => Goal::Min,
                GoalArg::Max => Goal::Max,
            };
            let objective = Objective::from(index);
            let found = extrema(&g, k, objective, goal, budget)?.ok_or(Error::Infeasible { k, chi })?;
            print_json(&json!({
                "family": family.name(),
                "n": n,
                "k": k,
                "index": objective.name(),
                "goal": goal,
                "value": RationalJson::from(found.value),
                "value_text": show(found.value),
                "coloring": found.witness,
            }))?;
        }
        Command::Verify {
            theorems,
            n,
            semantics,
            out,
            json,
        } => {
            let selectors: Vec<String> = theorems
                .split(',')
                .map(|s| s.trim().to_string())
                .filter(|s| !s.is_empty())
                .collect();
            let semantics = Semantics::from(semantics);
            let request = Request::uniform(selectors, n.0, semantics);
            let rows = verify(&claims::builtin_claims(), &request, budget)?;
            let doc = report(rows, semantics);
            if let Some(dir) = out {
                let write = |name: &str, body: &str| {
                    fs::create_dir_all(&dir)
                        .and_then(|_| fs::write(dir.join(name), body))
                        .map_err(|e| Error::Io(format!("cannot write {}: {e}", dir.join(name).display())))
                };
                write("report.json", &doc.to_json())?;
                write("report.txt", &doc.to_table())?;
            }
            if json {
                write_out(&doc.to_json())?;
            } else {
                write_out(&doc.to_table())?;
            }
        }
    }
    Ok(())
}
