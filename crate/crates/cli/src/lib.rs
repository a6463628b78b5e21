//! Command dispatch for the `z2fixed` tool.
//!
//! [`run`] parses arguments, executes one command and renders the result
//! either as text or, with `--json`, as a single JSON document. It never
//! touches the process streams, so tests can drive it directly.

use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use anyhow::{anyhow, bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use z2fixed::classify::{
    conner_floyd_count, enumerate_three_classes, generate_four, generate_three, lattice_i,
    lower_bound, min_fixed_points, recognize_four, recognize_three, FourPointStructure,
    OrbitMethod, ThreePointStructure,
};
use z2fixed::cobordism::{
    delta_diagonal, delta_product, is_bounding, omega, prime_tangent_set, sigma_map, tdks_batch,
    tdks_f_hat_with,
};
use z2fixed::f2algebra::{Automorphism, Character, SymFnExpr};
use z2fixed::io::{self, Structure};
use z2fixed::skeleton::{
    builtin_rpn, edge_bound_check, enumerate_skeletons, validate_fixed_data, ColoredSkeleton,
    FixedData, IsoMode,
};
use z2fixed::Limits;

#[derive(Parser, Debug)]
#[command(
    name = "z2fixed",
    version,
    about = "Fixed-point data of (Z/2)^k-actions with isolated fixed points"
)]
pub struct Cli {
    /// Print one JSON document instead of text.
    #[arg(long, global = true)]
    pub json: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Check fixed data, or a skeleton if the file has edges.
    Validate { file: PathBuf },
    /// Cancel equal vertex multisets in pairs.
    Prime {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Whether the action bounds (the prime tangent set is empty).
    Bounding { file: PathBuf },
    /// Test whether the localized sum of a symmetric function is a polynomial.
    Tdks {
        file: PathBuf,
        /// Symmetric function such as `e2*e3+m[2,1]`.
        #[arg(long, conflicts_with = "batch", required_unless_present = "batch")]
        f: Option<String>,
        /// Test 1 and every m[lambda] with |lambda| up to this degree.
        #[arg(long)]
        batch: Option<usize>,
    },
    /// Operations producing new fixed data.
    Op {
        #[command(subcommand)]
        op: OpCommand,
    },
    /// Canonical examples.
    Gen {
        #[command(subcommand)]
        gen: GenCommand,
    },
    /// Recognize three- or four-point fixed data and print its parameters.
    Recognize { file: PathBuf },
    /// Enumerate the skeletons compatible with fixed data.
    Skeletons {
        file: PathBuf,
        /// Group the skeletons into isomorphism classes.
        #[arg(long)]
        dedupe: bool,
        /// Isomorphism notion used by --dedupe.
        #[arg(long, value_enum, default_value_t = IsoArg::Underlying)]
        iso: IsoArg,
        /// Write one Graphviz file per skeleton into this directory.
        #[arg(long)]
        dot: Option<PathBuf>,
    },
    /// Cobordism classes of three-point actions.
    Classes {
        #[command(subcommand)]
        which: ClassesCommand,
    },
    /// Lower bound on the number of fixed points.
    Bound {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// Least number of fixed points, where known.
    Minfix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        k: u64,
    },
    /// The lattice of admissible multiplicity vectors for four points.
    Lattice {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: usize,
        #[arg(long)]
        t: u64,
    },
    /// Number of monomials of (r1 r2 + r2 r3 + r3 r1)^m.
    CountCf {
        #[arg(long)]
        m: u64,
    },
}

#[derive(Subcommand, Debug)]
pub enum OpCommand {
    /// i-fold diagonal product.
    Delta {
        #[arg(long)]
        i: usize,
        /// Repeat each multiset i times instead (i a power of two).
        #[arg(long)]
        diagonal: bool,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Doubling with one more Z/2 factor.
    Omega {
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Relabel characters by an automorphism given by its rows, e.g. `10,11`.
    Sigma {
        #[arg(long)]
        matrix: String,
        file: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum GenCommand {
    /// The standard action on RP^n with its skeleton.
    Rpn {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Three-point data of dimension 2^ell.
    Three {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u32,
        /// Comma-separated basis beta_1..beta_{k-1},gamma (default: standard).
        #[arg(long)]
        basis: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Four-point data of dimension 3*2^ell + sum(v).
    Four {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u32,
        /// Comma-separated multiplicities; empty means all zero.
        #[arg(long, default_value = "")]
        v: String,
        /// Comma-separated basis beta_1..beta_{k-2},gamma,delta (default: standard).
        #[arg(long)]
        basis: Option<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand, Debug)]
pub enum ClassesCommand {
    /// Orbit of the standard three-point data under GL(k, F_2).
    Three {
        #[arg(long)]
        k: usize,
        #[arg(long)]
        ell: u32,
        #[arg(long, value_enum, default_value_t = MethodArg::Auto)]
        method: MethodArg,
    },
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum IsoArg {
    Underlying,
    Colored,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Auto,
    Brute,
    Generators,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail,
    Value,
}

impl Verdict {
    fn name(self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail => "fail",
            Verdict::Value => "value",
        }
    }
}

/// What a command produced: a verdict, a structured payload, and the text
/// shown without `--json`.
#[derive(Clone, Debug)]
pub struct CommandReport {
    pub command: &'static str,
    pub verdict: Verdict,
    pub details: Value,
    pub text: String,
}

impl CommandReport {
    fn new(
        command: &'static str,
        verdict: Verdict,
        details: Value,
        text: impl Into<String>,
    ) -> Self {
        CommandReport {
            command,
            verdict,
            details,
            text: text.into(),
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self.verdict {
            Verdict::Pass | Verdict::Value => 0,
            Verdict::Fail => 1,
        }
    }

    pub fn to_json(&self) -> Value {
        json!({"command": self.command, "verdict": self.verdict.name(), "details": self.details})
    }
}

/// Rendered result of one invocation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

/// Exit status for malformed input and every other error.
pub const EXIT_ERROR: i32 = 2;

pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let args: Vec<OsString> = args.into_iter().map(Into::into).collect();
    let json_mode = args.iter().any(|a| a == "--json");
    let cli = match Cli::try_parse_from(&args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { 0 };
            let rendered = e.render().to_string();
            return if code == 0 {
                Outcome {
                    stdout: rendered,
                    stderr: String::new(),
                    code,
                }
            } else if json_mode {
                let doc = json!({"verdict": "error", "error": rendered.trim_end()});
                Outcome {
                    stdout: format!("{doc}\n"),
                    stderr: String::new(),
                    code,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: rendered,
                    code,
                }
            };
        }
    };
    match dispatch(&cli) {
        Ok(report) => {
            let stdout = if cli.json {
                format!(
                    "{}\n",
                    serde_json::to_string_pretty(&report.to_json()).expect("json values serialize")
                )
            } else {
                report.text.clone()
            };
            Outcome {
                stdout,
                stderr: String::new(),
                code: report.exit_code(),
            }
        }
        Err(e) => {
            let msg = format!("{e:#}");
            if cli.json {
                let doc = json!({"verdict": "error", "error": msg});
                Outcome {
                    stdout: format!("{doc}\n"),
                    stderr: String::new(),
                    code: EXIT_ERROR,
                }
            } else {
                Outcome {
                    stdout: String::new(),
                    stderr: format!("error: {msg}\n"),
                    code: EXIT_ERROR,
                }
            }
        }
    }
}

pub fn dispatch(cli: &Cli) -> Result<CommandReport> {
    let limits = Limits::default();
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Prime { file, out } => {
            let d = load(file)?;
            let p = prime_tangent_set(&d).into_data();
            emit_data("prime", &p, out.as_deref())
        }
        Command::Bounding { file } => {
            let d = load(file)?;
            let bounds = is_bounding(&d);
            let size = prime_tangent_set(&d).len();
            let text = if bounds {
                "bounds: the prime tangent set is empty\n".to_string()
            } else {
                format!("does not bound: {size} vertex multisets survive\n")
            };
            Ok(CommandReport::new(
                "bounding",
                Verdict::Value,
                json!({"bounding": bounds, "prime_size": size}),
                text,
            ))
        }
        Command::Tdks { file, f, batch } => tdks(file, f.as_deref(), *batch, &limits),
        Command::Op { op } => operation(op, &limits),
        Command::Gen { gen } => generate(gen),
        Command::Recognize { file } => recognize(file),
        Command::Skeletons {
            file,
            dedupe,
            iso,
            dot,
        } => skeletons(file, *dedupe, *iso, dot.as_deref(), &limits),
        Command::Classes {
            which: ClassesCommand::Three { k, ell, method },
        } => classes(*k, *ell, *method, &limits),
        Command::Bound { n, k } => {
            let b = lower_bound(*n, *k)?;
            Ok(CommandReport::new(
                "bound",
                Verdict::Value,
                json!({"n": n, "k": k, "bound": b}),
                format!("{b}\n"),
            ))
        }
        Command::Minfix { n, k } => {
            let r = min_fixed_points(*n, *k)?;
            let text = match r.value {
                Some(v) => format!("{v} ({})\n", r.source),
                None => format!("unknown, at least {}\n", r.lower_bound),
            };
            let details = json!({
                "n": n, "k": k, "value": r.value, "source": r.source.to_string(), "lower_bound": r.lower_bound,
            });
            Ok(CommandReport::new("minfix", Verdict::Value, details, text))
        }
        Command::Lattice { k, ell, t } => {
            let vs = lattice_i(*k, *ell, *t, &limits)?;
            let mut text = String::new();
            for v in &vs {
                let parts: Vec<String> = v.iter().map(u64::to_string).collect();
                let _ = writeln!(text, "({})", parts.join(","));
            }
            let _ = writeln!(text, "{} vectors", vs.len());
            Ok(CommandReport::new(
                "lattice",
                Verdict::Value,
                json!({"count": vs.len(), "vectors": vs}),
                text,
            ))
        }
        Command::CountCf { m } => {
            let c = conner_floyd_count(*m, &limits)?;
            Ok(CommandReport::new(
                "count-cf",
                Verdict::Value,
                json!({"m": m, "count": c}),
                format!("{c}\n"),
            ))
        }
    }
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))
}

fn load(path: &Path) -> Result<FixedData> {
    Ok(io::load_fixed_data(path)?)
}

fn data_value(d: &FixedData) -> Value {
    serde_json::from_str(&io::fixed_data_to_json(d)).expect("canonical text is json")
}

fn skeleton_value(g: &ColoredSkeleton) -> Value {
    serde_json::from_str(&io::skeleton_to_json(g)).expect("canonical text is json")
}

fn emit_data(command: &'static str, d: &FixedData, out: Option<&Path>) -> Result<CommandReport> {
    if let Some(path) = out {
        io::store_fixed_data(path, d)?;
    }
    Ok(CommandReport::new(
        command,
        Verdict::Value,
        data_value(d),
        io::fixed_data_to_json(d),
    ))
}

fn validate(file: &Path) -> Result<CommandReport> {
    let text = read(file)?;
    if io::has_edges(&text) {
        let g = io::skeleton_from_json(&text).with_context(|| file.display().to_string())?;
        let report = g.validate();
        let bound = edge_bound_check(&g);
        let issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
        let violations: Vec<Value> = bound
            .violations
            .iter()
            .map(|v| json!({"u": v.u, "v": v.v, "count": v.count}))
            .collect();
        let ok = report.is_valid() && bound.passed();
        let mut out = String::from(if ok {
            "valid skeleton\n"
        } else {
            "invalid skeleton\n"
        });
        for i in &issues {
            let _ = writeln!(out, "  {i}");
        }
        for v in &bound.violations {
            let _ = writeln!(
                out,
                "  {}-{} joined by {} edges, bound {}",
                v.u, v.v, v.count, bound.bound
            );
        }
        let details = json!({
            "kind": "skeleton", "valid": report.is_valid(), "issues": issues,
            "edge_bound": {"bound": bound.bound, "violations": violations},
        });
        return Ok(CommandReport::new(
            "validate",
            if ok { Verdict::Pass } else { Verdict::Fail },
            details,
            out,
        ));
    }
    let d = io::fixed_data_from_json(&text).with_context(|| file.display().to_string())?;
    let report = validate_fixed_data(&d);
    let issues: Vec<String> = report.issues.iter().map(ToString::to_string).collect();
    let mut out = String::from(if report.is_valid() {
        "valid fixed data\n"
    } else {
        "invalid fixed data\n"
    });
    for i in &issues {
        let _ = writeln!(out, "  {i}");
    }
    let details = json!({
        "kind": "fixed_data", "valid": report.is_valid(), "issues": issues,
        "first_failing_vertex": report.first_failing_vertex(),
    });
    let verdict = if report.is_valid() {
        Verdict::Pass
    } else {
        Verdict::Fail
    };
    Ok(CommandReport::new("validate", verdict, details, out))
}

fn tdks(
    file: &Path,
    f: Option<&str>,
    batch: Option<usize>,
    limits: &Limits,
) -> Result<CommandReport> {
    let d = load(file)?;
    if let Some(expr) = f {
        let f: SymFnExpr = expr.parse()?;
        let verdict = tdks_f_hat_with(&d, &f, limits)?;
        let text = format!("{verdict}\n");
        let v = if verdict.is_polynomial() {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        let mut details = io::verdict_to_value(&verdict);
        details["f"] = json!(f.to_string());
        return Ok(CommandReport::new("tdks", v, details, text));
    }
    let dmax = batch.ok_or_else(|| anyhow!("either --f or --batch is required"))?;
    let r = tdks_batch(&d, Some(dmax), limits)?;
    let (verdict, failure, text) = match &r.failure {
        None => (
            Verdict::Pass,
            Value::Null,
            format!("pass: {} functions up to degree {dmax}\n", r.checked),
        ),
        Some(fail) => (
            Verdict::Fail,
            json!({"f": fail.f.to_string(), "witness": {"form": fail.form.to_string(), "stage": fail.stage}}),
            format!(
                "fail at f = {}: division by {} at step {}\n",
                fail.f, fail.form, fail.stage
            ),
        ),
    };
    let details = json!({"dmax": r.dmax, "checked": r.checked, "failure": failure});
    Ok(CommandReport::new("tdks", verdict, details, text))
}

fn operation(op: &OpCommand, limits: &Limits) -> Result<CommandReport> {
    match op {
        OpCommand::Delta {
            i,
            diagonal,
            file,
            out,
        } => {
            let d = load(file)?;
            let r = if *diagonal {
                delta_diagonal(&d, *i)?
            } else {
                delta_product(&d, *i, limits)?
            };
            emit_data("op delta", &r, out.as_deref())
        }
        OpCommand::Omega { file, out } => {
            emit_data("op omega", &omega(&load(file)?)?, out.as_deref())
        }
        OpCommand::Sigma { matrix, file, out } => {
            let m: Automorphism = matrix.parse()?;
            emit_data("op sigma", &sigma_map(&load(file)?, &m)?, out.as_deref())
        }
    }
}

fn parse_chars(list: &str) -> Result<Vec<Character>> {
    list.split(',')
        .map(|s| Ok(s.trim().parse::<Character>()?))
        .collect()
}

fn parse_counts(list: &str) -> Result<Vec<u64>> {
    if list.trim().is_empty() || list.trim() == "()" {
        return Ok(Vec::new());
    }
    list.trim_matches(|c| c == '(' || c == ')')
        .split(',')
        .map(|s| {
            s.trim()
                .parse::<u64>()
                .with_context(|| format!("bad multiplicity {s:?}"))
        })
        .collect()
}

fn generate(gen: &GenCommand) -> Result<CommandReport> {
    match gen {
        GenCommand::Rpn { n, out } => {
            let (_, g) = builtin_rpn(*n)?;
            if let Some(path) = out {
                io::store_skeleton(path, &g)?;
            }
            Ok(CommandReport::new(
                "gen rpn",
                Verdict::Value,
                skeleton_value(&g),
                io::skeleton_to_json(&g),
            ))
        }
        GenCommand::Three { k, ell, basis, out } => {
            let s = match basis {
                Some(b) => ThreePointStructure::new(*k, *ell, parse_chars(b)?)?,
                None => ThreePointStructure::standard(*k, *ell)?,
            };
            emit_data("gen three", &generate_three(&s)?, out.as_deref())
        }
        GenCommand::Four {
            k,
            ell,
            v,
            basis,
            out,
        } => {
            let v = parse_counts(v)?;
            let s = match basis {
                Some(b) => FourPointStructure::new(*k, *ell, parse_chars(b)?, v)?,
                None => FourPointStructure::standard(*k, *ell, v)?,
            };
            emit_data("gen four", &generate_four(&s)?, out.as_deref())
        }
    }
}

fn recognize(file: &Path) -> Result<CommandReport> {
    let d = load(file)?;
    let labels = |order: &[usize]| -> Vec<String> {
        order
            .iter()
            .map(|&i| d.vertices()[i].label.clone())
            .collect()
    };
    let found = match d.len() {
        3 => recognize_three(&d).map(|r| (Structure::Three(r.structure), labels(&r.order))),
        4 => recognize_four(&d).map(|r| (Structure::Four(r.structure), labels(&r.order))),
        _ => None,
    };
    Ok(match found {
        Some((s, roles)) => {
            let mut details = io::structure_to_value(&s);
            details["roles"] = json!(roles);
            let text = format!(
                "{}\nroles: {}\n",
                io::structure_to_value(&s),
                roles.join(" ")
            );
            CommandReport::new("recognize", Verdict::Pass, details, text)
        }
        None => CommandReport::new(
            "recognize",
            Verdict::Fail,
            json!({"recognized": false, "vertices": d.len()}),
            "not a three- or four-point structure\n",
        ),
    })
}

fn skeletons(
    file: &Path,
    dedupe: bool,
    iso: IsoArg,
    dot: Option<&Path>,
    limits: &Limits,
) -> Result<CommandReport> {
    let d = load(file)?;
    let e = enumerate_skeletons(&d, limits)?;
    let mut text = format!(
        "{} skeletons ({} disconnected candidates discarded)\n",
        e.skeletons.len(),
        e.disconnected_discarded
    );
    for (i, g) in e.skeletons.iter().enumerate() {
        let _ = writeln!(text, "{}: {g}", i + 1);
    }
    let mut details = json!({
        "count": e.skeletons.len(),
        "disconnected_discarded": e.disconnected_discarded,
        "skeletons": e.skeletons.iter().map(|g| skeleton_value(g)["edges"].clone()).collect::<Vec<_>>(),
    });
    if dedupe {
        let mode = match iso {
            IsoArg::Underlying => IsoMode::Underlying,
            IsoArg::Colored => IsoMode::Colored,
        };
        let classes: Vec<Vec<usize>> = e
            .classes(mode)?
            .into_iter()
            .map(|c| c.into_iter().map(|i| i + 1).collect())
            .collect();
        let _ = writeln!(text, "{} isomorphism classes", classes.len());
        for c in &classes {
            let members: Vec<String> = c.iter().map(usize::to_string).collect();
            let _ = writeln!(text, "  {{{}}}", members.join(","));
        }
        details["classes"] = json!(classes);
    }
    if let Some(dir) = dot {
        std::fs::create_dir_all(dir).with_context(|| format!("cannot create {}", dir.display()))?;
        let mut files = Vec::new();
        for (i, g) in e.skeletons.iter().enumerate() {
            let name = format!("skeleton-{}", i + 1);
            let path = dir.join(format!("{name}.dot"));
            std::fs::write(&path, g.to_dot(&name))
                .with_context(|| format!("cannot write {}", path.display()))?;
            files.push(path.display().to_string());
        }
        let _ = writeln!(text, "wrote {} DOT files to {}", files.len(), dir.display());
        details["dot_files"] = json!(files);
    }
    Ok(CommandReport::new(
        "skeletons",
        Verdict::Value,
        details,
        text,
    ))
}

fn classes(k: usize, ell: u32, method: MethodArg, limits: &Limits) -> Result<CommandReport> {
    let method = match method {
        MethodArg::Auto => OrbitMethod::Auto,
        MethodArg::Brute => OrbitMethod::BruteForce,
        MethodArg::Generators => OrbitMethod::Generators,
    };
    let classes = enumerate_three_classes(k, ell, method, limits)?;
    let mut text = String::new();
    for (i, d) in classes.iter().enumerate() {
        let sets: Vec<String> = d.vertices().iter().map(|v| v.chars.to_string()).collect();
        let _ = writeln!(text, "{}: {}", i + 1, sets.join(" "));
    }
    let _ = writeln!(text, "{} classes", classes.len());
    let details = json!({
        "k": k,
        "ell": ell,
        "count": classes.len(),
        "classes": classes.iter().map(data_value).collect::<Vec<_>>(),
    });
    if classes.is_empty() {
        bail!("no classes found");
    }
    Ok(CommandReport::new(
        "classes three",
        Verdict::Value,
        details,
        text,
    ))
}
