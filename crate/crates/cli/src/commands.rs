use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use linemap_core::constraints::{
    build_constraints, canonical_r3_forms, construct_sharp_map, example_r3_map, fifth_direction_refutation,
    line_degree_failures, pattern_rows, sharp_r4_map, twisted_r4_map, ConverseReport,
};
use linemap_core::lab::{
    check_family, exhaustive_bijection_search, recover_diagonal_form, recover_plane_form, CheckMode,
    DEFAULT_POINT_BUDGET, DEFAULT_SEARCH_BUDGET,
};
use linemap_core::multiaffine::tabulate_with_budget;
use linemap_core::projective::{decide_projective_linear, ProjDecision, ProjTable};
use linemap_core::scalar_props::{
    ratio_criterion_implies_additive, verify_add1str, verify_diag2str, verify_mult_identity_lemmas, Companion,
};
use linemap_core::{Error, FieldSpec, FiniteMapTable, LineFamily, MultiAffineMap, Result, Vector};

use crate::dirs;

#[derive(Parser, Debug)]
#[command(name = "linemap", version, about = "Exact checks for maps that carry line families onto lines")]
pub struct Cli {
    /// Report path (standard output when omitted).
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
    /// Resource guard for enumerations (points, candidates or permutations, per command).
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check that every line of a direction family is mapped into or onto a line.
    VerifyFamily {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        map: Option<PathBuf>,
        #[arg(long)]
        table: Option<PathBuf>,
        /// Directions inline (`e1,e2;1,1,-1`, `v` = all ones) or `@file`.
        #[arg(long)]
        dirs: String,
        /// `rational` or `p:P`; a rational map is reduced mod P.
        #[arg(long)]
        field: Option<String>,
        #[arg(long, default_value = "onto")]
        mode: String,
    },
    /// Recover the diagonal or plane normal form of a finite table.
    RecoverForm {
        #[arg(long, conflicts_with = "table", required_unless_present = "table")]
        map: Option<PathBuf>,
        #[arg(long)]
        table: Option<PathBuf>,
        #[arg(long, value_enum)]
        form: Form,
        /// Family for the diagonal form (defaults to the axes).
        #[arg(long)]
        dirs: Option<String>,
        #[arg(long)]
        field: Option<String>,
    },
    /// Emit the linear constraint system on multiaffine coefficients.
    Constraints {
        #[arg(long)]
        n: usize,
        /// Alias for --out.
        #[arg(long)]
        emit: Option<PathBuf>,
        /// Emit only the pattern rows.
        #[arg(long)]
        pattern: bool,
    },
    /// Build the triangular sharp map in an even dimension.
    ConstructSharp {
        #[arg(long)]
        dim: usize,
    },
    /// Emit a built-in map in the map file format.
    Example {
        #[arg(long, value_enum)]
        name: ExampleName,
        /// Parameter of the canonical forms.
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Test whether the line through 0 along `(a, b, 1)` is bent by a map of three variables.
    RefuteFifth {
        #[arg(long)]
        map: PathBuf,
        #[arg(long)]
        u: String,
        #[arg(long)]
        field: Option<String>,
    },
    /// Decide whether a table on PG(n, p) is induced by a projective-linear map.
    DecideProj {
        #[arg(long)]
        table: PathBuf,
    },
    /// Enumerate every bijection of (Z_p)^n carrying a family onto lines.
    Exhaust {
        #[arg(long)]
        p: u32,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        dirs: String,
        #[arg(long, default_value = "onto")]
        mode: String,
        /// Include every surviving table in the report.
        #[arg(long)]
        tables: bool,
    },
    /// Exhaustive checks of the scalar-function lemmas over Z_p.
    ScalarLemmas {
        #[arg(long)]
        p: u32,
        #[arg(long, value_enum)]
        lemma: Lemma,
        /// Base point for diag2str and add1str.
        #[arg(long, default_value = "1,1")]
        x0: String,
    },
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Form {
    Diagonal,
    Plane,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum ExampleName {
    R3,
    Canonical1,
    Canonical2,
    SharpR4,
    TwistedR4,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
pub enum Lemma {
    Ratio,
    MultId,
    F2Id,
    Diag2str,
    Add1str,
}

/// A report and whether every check passed.
#[derive(Debug)]
pub struct Outcome {
    pub report: Value,
    pub ok: bool,
    emit: Option<PathBuf>,
}

impl Outcome {
    fn new(report: Value, ok: bool) -> Outcome {
        Outcome { report, ok, emit: None }
    }

    pub fn write(&self, out: Option<&Path>) -> Result<()> {
        let mut text = serde_json::to_string_pretty(&self.report).expect("reports serialize");
        text.push('\n');
        match out.or(self.emit.as_deref()) {
            Some(path) => std::fs::write(path, text)
                .map_err(|e| Error::Input(format!("cannot write {}: {e}", path.display()))),
            None => std::io::stdout()
                .write_all(text.as_bytes())
                .map_err(|e| Error::Internal(format!("cannot write to standard output: {e}"))),
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Input(format!("cannot read {}: {e}", path.display())))
}

pub fn parse_field(s: &str) -> Result<FieldSpec> {
    match s.trim() {
        "rational" | "q" | "Q" => Ok(FieldSpec::RATIONAL),
        other => {
            let p = other
                .strip_prefix("p:")
                .and_then(|p| p.parse::<u64>().ok())
                .ok_or_else(|| Error::Input(format!("bad field {other:?} (expected rational or p:P)")))?;
            FieldSpec::prime(p)
        }
    }
}

fn parse_mode(s: &str) -> Result<CheckMode> {
    s.parse()
}

fn budget_usize(b: Option<u64>, default: usize) -> usize {
    b.map_or(default, |b| usize::try_from(b).unwrap_or(usize::MAX))
}

fn load_map(path: &Path, field: Option<FieldSpec>) -> Result<MultiAffineMap> {
    let map = MultiAffineMap::from_json_str(&read(path)?)?;
    match field {
        None => Ok(map),
        Some(f) if f == map.field() => Ok(map),
        Some(f) if map.field().is_rational() => map.reduce_into(f),
        Some(_) => Err(Error::Input("a prime-field map cannot be moved to another field".into())),
    }
}

/// A finite table from `--table`, or from `--map` tabulated over a prime field.
fn load_table(map: Option<&Path>, table: Option<&Path>, field: Option<FieldSpec>, budget: usize) -> Result<FiniteMapTable> {
    match (map, table) {
        (_, Some(t)) => {
            if field.is_some() {
                return Err(Error::Input("--field applies to --map only".into()));
            }
            FiniteMapTable::from_json_str(&read(t)?)
        }
        (Some(m), None) => {
            let map = load_map(m, field)?;
            if map.field().is_rational() {
                return Err(Error::Input("tabulating a map needs a prime field (use --field p:P)".into()));
            }
            tabulate_with_budget(&map, budget)
        }
        (None, None) => Err(Error::Input("either --map or --table is required".into())),
    }
}

fn family(text: &str, n: usize) -> Result<LineFamily> {
    LineFamily::new(n, dirs::parse(&dirs::load(text)?, n)?)
}

pub fn run(cli: Cli) -> Result<Outcome> {
    let budget = cli.budget;
    match cli.command {
        Command::VerifyFamily { map, table, dirs: d, field, mode } => {
            let field = field.as_deref().map(parse_field).transpose()?;
            let mode = parse_mode(&mode)?;
            let text = dirs::load(&d)?;
            let points = budget_usize(budget, DEFAULT_POINT_BUDGET);
            if let Some(m) = map.as_deref() {
                let map = load_map(m, field)?;
                if map.field().is_rational() {
                    let directions = dirs::parse(&text, map.n())?;
                    LineFamily::new(map.n(), directions.clone())?;
                    let report = ConverseReport {
                        failures: line_degree_failures(&map, &directions, points)?,
                        directions,
                    };
                    return Ok(Outcome::new(report.to_json(), report.ok()));
                }
            }
            let t = load_table(map.as_deref(), table.as_deref(), field, points)?;
            let fam = LineFamily::new(t.n(), dirs::parse(&text, t.n())?)?;
            let report = check_family(&t, &fam, mode)?;
            Ok(Outcome::new(report.to_json(), report.ok))
        }
        Command::RecoverForm { map, table, form, dirs: d, field } => {
            let field = field.as_deref().map(parse_field).transpose()?;
            let text = d.as_deref().map(dirs::load).transpose()?;
            let t = load_table(map.as_deref(), table.as_deref(), field, budget_usize(budget, DEFAULT_POINT_BUDGET))?;
            let value = match form {
                Form::Diagonal => {
                    let fam = match text {
                        Some(text) => LineFamily::new(t.n(), dirs::parse(&text, t.n())?)?,
                        None => LineFamily::axes(FieldSpec::RATIONAL, t.n()),
                    };
                    serde_json::to_value(recover_diagonal_form(&t, &fam)?)
                }
                Form::Plane => {
                    if text.is_some() {
                        return Err(Error::Input("the plane form always uses the axes".into()));
                    }
                    let pf = recover_plane_form(&t)?;
                    let mut v = serde_json::to_value(&pf).expect("forms serialize");
                    v["separable"] = json!(pf.is_separable());
                    Ok(v)
                }
            }
            .expect("forms serialize");
            Ok(Outcome::new(value, true))
        }
        Command::Constraints { n, emit, pattern } => {
            let system = if pattern { pattern_rows(n)? } else { build_constraints(n)? };
            let mut report = system.to_json();
            report["solution_dimension"] = json!(system.solution_dimension());
            Ok(Outcome { emit, ..Outcome::new(report, true) })
        }
        Command::ConstructSharp { dim } => Ok(Outcome::new(construct_sharp_map(dim)?.map.to_json(), true)),
        Command::Example { name, alpha, field } => {
            let field = field.as_deref().map(parse_field).transpose()?.unwrap_or(FieldSpec::RATIONAL);
            let alpha = field.parse(&alpha).map_err(|e| Error::Input(e.to_string()))?;
            let map = match name {
                ExampleName::R3 => example_r3_map(field),
                ExampleName::Canonical1 => canonical_r3_forms(&alpha, 1)?,
                ExampleName::Canonical2 => canonical_r3_forms(&alpha, 2)?,
                ExampleName::SharpR4 => sharp_r4_map(field),
                ExampleName::TwistedR4 => twisted_r4_map(field),
            };
            Ok(Outcome::new(map.to_json(), true))
        }
        Command::RefuteFifth { map, u, field } => {
            let field = field.as_deref().map(parse_field).transpose()?;
            let map = load_map(&map, field)?;
            let f = map.field();
            let entries = u
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(|t| {
                    FieldSpec::RATIONAL
                        .parse(t)
                        .and_then(|s| s.reduce_into(f))
                        .map_err(|e| Error::Input(e.to_string()))
                })
                .collect::<Result<Vec<_>>>()?;
            let u = Vector::new(f, entries)?;
            let refuted = fifth_direction_refutation(&map, &u)?;
            Ok(Outcome::new(json!({"direction": u.to_json(), "refuted": refuted}), !refuted))
        }
        Command::DecideProj { table } => {
            let t = ProjTable::from_json_str(&read(&table)?)?;
            let report = match decide_projective_linear(&t)? {
                ProjDecision::Linear(m) => json!({"decision": "linear", "matrix": m.to_json()}),
                ProjDecision::NotLinear { frame, witness } => json!({
                    "decision": "not-linear",
                    "frame": frame.iter().map(|&i| t.space().point(i)).collect::<Vec<_>>(),
                    "witness": t.space().point(witness),
                }),
                ProjDecision::NoFrame => json!({"decision": "no-frame"}),
            };
            let ok = report["decision"] == "linear";
            Ok(Outcome::new(report, ok))
        }
        Command::Exhaust { p, n, dirs: d, mode, tables } => {
            let mode = parse_mode(&mode)?;
            let fam = family(&d, n)?;
            let found = exhaustive_bijection_search(p, n, &fam, mode, budget.unwrap_or(DEFAULT_SEARCH_BUDGET))?;
            let mut report = json!({"p": p, "n": n, "family": fam.to_string(), "count": found.len()});
            if n == 2 && fam.len() == 2 && fam.residues(p)? == vec![vec![1, 0], vec![0, 1]] {
                let forms = found.iter().map(recover_plane_form).collect::<Result<Vec<_>>>()?;
                report["separable"] = json!(forms.iter().filter(|f| f.is_separable()).count());
            }
            if tables {
                report["tables"] = found.iter().map(FiniteMapTable::to_json).collect();
            }
            Ok(Outcome::new(report, true))
        }
        Command::ScalarLemmas { p, lemma, x0 } => {
            let x0 = dirs::parse_residues(&x0)?;
            let (report, ok) = match lemma {
                Lemma::Ratio => {
                    let r = ratio_criterion_implies_additive(p, budget.unwrap_or(120))?;
                    (serde_json::to_value(&r), r.characterizes)
                }
                Lemma::MultId | Lemma::F2Id => {
                    let c = if matches!(lemma, Lemma::MultId) { Companion::Shifted } else { Companion::Scaled };
                    let r = verify_mult_identity_lemmas(p, c)?;
                    (serde_json::to_value(&r), r.only_identity && r.brute_force_agrees != Some(false))
                }
                Lemma::Diag2str => {
                    let r = verify_diag2str(p, 2, &x0, budget.unwrap_or(14_400))?;
                    (serde_json::to_value(&r), r.only_identity)
                }
                Lemma::Add1str => {
                    let r = verify_add1str(p, 2, &x0, budget.unwrap_or(625))?;
                    (serde_json::to_value(&r), r.all_pass)
                }
            };
            Ok(Outcome::new(report.expect("reports serialize"), ok))
        }
    }
}
