//! Command-line front end. [`run`] takes the argument vector and the output
//! streams and returns the process exit code: 0 when everything passed, 1
//! when a verification failed, 2 for usage and input errors.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use num_traits::Signed;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{determinant, permanent, snf, ExactMatrix, SnfResult};
use crate::plane::{
    class_action, macmahon_count, matching_count_by_permanent,
    quotient_structures, symmetry_count, verify_bijection, verify_det_identity, BoxSpec, SymmetryClass,
    ENUMERATION_LIMIT,
};
use crate::report::VerificationReport;
use crate::ring::{hilbert_function, restricted_up_map, up_map, up_map_matrix, ActionKind, RingSpec};
use crate::schur::{
    inverse_lr_decompose, is_legal, lr_expand, minor_for_shape, verify_toeplitz_lemma,
    Partition, SkewShape,
};
use crate::suites::{run_suite, Suite, SuiteConfig, DEFAULT_SEED, DEFAULT_TRIALS};
use crate::theorems::{build_mr, verify_containment, verify_multinomial, verify_snf_theorem, verify_symbolic, SnfPart};

#[derive(Parser, Debug)]
#[command(name = "lefschetz", version, about = "Exact Smith forms, plane partitions and Schur minors")]
pub struct Cli {
    /// Seed for randomized checks.
    #[arg(long, global = true, env = "LEFSCHETZ_SEED", default_value_t = DEFAULT_SEED)]
    pub seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    /// Write the report here instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    /// Number of random trials.
    #[arg(long, global = true, default_value_t = DEFAULT_TRIALS)]
    pub trials: usize,
    /// Largest box volume for brute-force enumeration.
    #[arg(long, global = true, default_value_t = ENUMERATION_LIMIT)]
    pub limit: u32,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Hilbert function of the ring with the given caps.
    Hilbert {
        #[arg(required = true)]
        caps: Vec<u32>,
    },
    /// Matrix of multiplication by the sum of the variables.
    Upmap {
        #[arg(required = true)]
        caps: Vec<u32>,
        #[arg(short)]
        r: u32,
    },
    /// Smith normal form.
    Snf(SnfArgs),
    /// Count plane partitions in a box, optionally within a symmetry class.
    Count {
        /// Class number 1-10 or abbreviation (pp, cspp, tcpp, cstcpp, ...).
        class: String,
        a: u32,
        b: u32,
        c: u32,
        #[arg(long, value_enum, default_value_t = Method::Det)]
        method: Method,
    },
    /// Skew Schur function tools.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Run one verification.
    #[command(subcommand)]
    Verify(VerifyCommand),
    /// Run a named verification sweep.
    Grid {
        #[arg(value_parser = parse_suite)]
        suite: Suite,
    },
}

#[derive(Args, Debug)]
pub struct SnfArgs {
    /// Up-map of the ring with these caps; needs -r.
    #[arg(long, num_args = 1.., required_unless_present_any = ["mr", "file"], conflicts_with_all = ["mr", "file"])]
    upmap: Option<Vec<u32>>,
    /// Binomial matrix M_r(A, B, C): A B C R.
    #[arg(long, num_args = 4, value_names = ["A", "B", "C", "R"], conflicts_with = "file")]
    mr: Option<Vec<u32>>,
    /// JSON matrix {"rows","cols","entries"} or whitespace-separated rows.
    #[arg(long)]
    file: Option<PathBuf>,
    /// Degree of the up-map.
    #[arg(short, requires = "upmap")]
    r: Option<u32>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Det,
    Perm,
    Brute,
    Formula,
}

#[derive(Subcommand, Debug)]
pub enum SchurCommand {
    /// Littlewood-Richardson expansion of a skew shape such as 5,3/1.
    Expand { shape: String },
    /// Whether a skew shape is (k, c)-legal, with its minor if so.
    Legal {
        shape: String,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        n: usize,
    },
    /// Write S_nu as a combination of (k, c)-legal skew Schur functions.
    Decompose {
        nu: String,
        #[arg(long)]
        c: usize,
        #[arg(long)]
        n: usize,
    },
}

#[derive(Subcommand, Debug)]
pub enum VerifyCommand {
    /// Smith-form theorem on three caps.
    Thm1 {
        #[arg(long, value_parser = parse_part)]
        part: ThmPart,
        #[arg(long, num_args = 1.., required = true)]
        caps: Vec<u32>,
    },
    /// Toeplitz lemma on the given h_1..h_n, or on --trials random ones.
    Toeplitz {
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        h: Option<Vec<i64>>,
    },
    /// Matching / plane-partition bijection on one box.
    Bijection { a: u32, b: u32, c: u32 },
    /// Determinant of the (restricted) middle map against the class count.
    Det { class: String, a: u32, b: u32, c: u32 },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ThmPart {
    Snf(SnfPart),
    Symbolic,
    Multinomial,
    Containment,
}

fn parse_part(s: &str) -> std::result::Result<ThmPart, String> {
    match s {
        "symbolic" => Ok(ThmPart::Symbolic),
        "multinomial" => Ok(ThmPart::Multinomial),
        "containment" => Ok(ThmPart::Containment),
        _ => s.parse().map(ThmPart::Snf).map_err(|e: Error| e.to_string()),
    }
}

fn parse_suite(s: &str) -> std::result::Result<Suite, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

/// What a command produced, in all three renderings.
struct Output {
    json: Value,
    text: String,
    header: Vec<String>,
    rows: Vec<Vec<String>>,
    passed: bool,
}

impl Output {
    fn value(json: Value, text: String, header: &[&str], rows: Vec<Vec<String>>) -> Self {
        Self {
            json,
            text,
            header: header.iter().map(ToString::to_string).collect(),
            rows,
            passed: true,
        }
    }

    fn scalar(name: &str, x: &BigInt) -> Self {
        Self::value(
            json!({ name: x.to_string() }),
            format!("{x}\n"),
            &[name],
            vec![vec![x.to_string()]],
        )
    }

    fn reports(reports: Vec<VerificationReport>) -> Self {
        let passed = reports.iter().all(|r| r.passed);
        let mut text = String::new();
        let mut rows = Vec::new();
        for r in &reports {
            let params = Value::Object(r.params.clone()).to_string();
            let ok = r.cases.iter().filter(|c| c.passed).count();
            text.push_str(&format!(
                "{} {}: {} ({}/{})\n",
                r.theorem,
                params,
                if r.passed { "PASS" } else { "FAIL" },
                ok,
                r.cases.len()
            ));
            for c in &r.cases {
                let case_params = c
                    .params
                    .iter()
                    .map(|(k, v)| format!("{k}={}", plain(v)))
                    .collect::<Vec<_>>()
                    .join(" ");
                text.push_str(&format!(
                    "  {case_params}: expected [{}] actual [{}] {}{}\n",
                    c.expected.join(", "),
                    c.actual.join(", "),
                    if c.passed { "ok" } else { "FAIL" },
                    c.note.as_deref().map(|n| format!(" ({n})")).unwrap_or_default()
                ));
                rows.push(vec![
                    r.theorem.clone(),
                    params.clone(),
                    Value::Object(c.params.clone()).to_string(),
                    c.expected.join(" "),
                    c.actual.join(" "),
                    c.passed.to_string(),
                    c.note.clone().unwrap_or_default(),
                ]);
            }
        }
        Self {
            json: serde_json::to_value(&reports).expect("reports serialize"),
            text,
            header: ["theorem", "params", "case", "expected", "actual", "passed", "note"]
                .iter()
                .map(ToString::to_string)
                .collect(),
            rows,
            passed,
        }
    }

    fn render(&self, format: Format) -> Result<Vec<u8>> {
        match format {
            Format::Text => Ok(self.text.clone().into_bytes()),
            Format::Json => {
                let mut s = serde_json::to_string_pretty(&self.json).expect("json value");
                s.push('\n');
                Ok(s.into_bytes())
            }
            Format::Csv => {
                let mut w = csv::WriterBuilder::new()
                    .quote_style(csv::QuoteStyle::Always)
                    .from_writer(Vec::new());
                let io = |e: csv::Error| Error::Construction(format!("csv: {e}"));
                w.write_record(&self.header).map_err(io)?;
                for row in &self.rows {
                    w.write_record(row).map_err(io)?;
                }
                w.into_inner().map_err(|e| Error::Construction(format!("csv: {e}")))
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn tuple(xs: &[BigInt]) -> String {
    let inner: Vec<String> = xs.iter().map(ToString::to_string).collect();
    format!("({})", inner.join(", "))
}

fn snf_output(s: &SnfResult) -> Output {
    let non_units = s.non_units();
    Output::value(
        json!({
            "entries": s.entries.iter().map(ToString::to_string).collect::<Vec<_>>(),
            "rank": s.rank,
            "non_units": non_units.iter().map(ToString::to_string).collect::<Vec<_>>(),
        }),
        format!("{}\n", tuple(&s.entries)),
        &["index", "entry"],
        s.entries
            .iter()
            .enumerate()
            .map(|(i, x)| vec![(i + 1).to_string(), x.to_string()])
            .collect(),
    )
}

fn read_matrix(path: &PathBuf) -> Result<ExactMatrix> {
    let text = fs::read_to_string(path).map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    if text.trim_start().starts_with('{') {
        return serde_json::from_str(&text).map_err(|e| Error::Parse(format!("{}: {e}", path.display())));
    }
    let rows = text
        .lines()
        .filter(|l| !l.trim().is_empty())
        .map(|l| {
            l.split(|ch: char| ch.is_whitespace() || ch == ',')
                .filter(|t| !t.is_empty())
                .map(|t| t.parse::<BigInt>().map_err(|e| Error::Parse(format!("{t:?}: {e}"))))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    if rows.iter().any(|r| r.len() != cols) {
        return Err(Error::Parse("rows have different lengths".into()));
    }
    ExactMatrix::from_entries(rows.len(), cols, rows.into_iter().flatten().collect())
}

fn count(cls: SymmetryClass, bx: BoxSpec, method: Method, limit: u32) -> Result<BigInt> {
    cls.check(bx)?;
    let spec = bx.ring();
    let m = bx.middle();
    match (method, cls) {
        (Method::Brute, _) => symmetry_count(bx, cls, limit),
        (Method::Formula, SymmetryClass::PP) => Ok(macmahon_count(bx)),
        (Method::Formula, _) => Err(Error::Constraint(format!("no product formula is implemented for {cls}"))),
        (Method::Det, SymmetryClass::PP) => Ok(determinant(&up_map_matrix(&spec, m)?)?.abs()),
        (Method::Perm, SymmetryClass::PP) => permanent(&up_map_matrix(&spec, m)?),
        (_, _) => {
            let action = class_action(cls)
                .ok_or_else(|| Error::Constraint(format!("no determinant identity is known for {cls}")))?;
            let restricted = restricted_up_map(&spec, m, action)?;
            match method {
                Method::Det => Ok(determinant(&restricted)?.abs()),
                _ if action.kind == ActionKind::CycleSwap => Ok(permanent(&restricted)?.abs()),
                _ => matching_count_by_permanent(&quotient_structures(bx, action)?),
            }
        }
    }
}

fn execute(cli: &Cli) -> Result<Output> {
    let cfg = SuiteConfig {
        seed: cli.seed,
        trials: cli.trials,
    };
    match &cli.command {
        Command::Hilbert { caps } => {
            let spec = RingSpec::new(caps.clone())?;
            let h = hilbert_function(&spec);
            let hs: Vec<String> = h.iter().map(ToString::to_string).collect();
            Ok(Output::value(
                json!({"caps": caps, "h": hs}),
                format!("{}\n", hs.join(" ")),
                &["r", "h"],
                hs.iter().enumerate().map(|(r, x)| vec![r.to_string(), x.clone()]).collect(),
            ))
        }
        Command::Upmap { caps, r } => {
            let spec = RingSpec::new(caps.clone())?;
            let lm = up_map(&spec, *r)?;
            let cols: Vec<String> = lm.col_labels.iter().map(ToString::to_string).collect();
            let mut text = format!("columns: {}\n", cols.join(" "));
            let mut rows = Vec::new();
            for (i, label) in lm.row_labels.iter().enumerate() {
                let entries: Vec<String> = lm.matrix.row(i).iter().map(ToString::to_string).collect();
                text.push_str(&format!("{label}: {}\n", entries.join(" ")));
                let mut row = vec![label.to_string()];
                row.extend(entries);
                rows.push(row);
            }
            let mut header = vec!["row"];
            header.extend(cols.iter().map(String::as_str));
            Ok(Output::value(serde_json::to_value(&lm).expect("serializable"), text, &header, rows))
        }
        Command::Snf(args) => {
            let m = if let Some(caps) = &args.upmap {
                let r = args
                    .r
                    .ok_or_else(|| Error::Parse("--upmap needs -r".into()))?;
                up_map_matrix(&RingSpec::new(caps.clone())?, r)?
            } else if let Some(v) = &args.mr {
                build_mr(v[0], v[1], v[2], v[3])?
            } else if let Some(path) = &args.file {
                read_matrix(path)?
            } else {
                unreachable!("clap requires one source")
            };
            Ok(snf_output(&snf(&m)))
        }
        Command::Count { class, a, b, c, method } => {
            let cls: SymmetryClass = class.parse()?;
            let bx = BoxSpec::new(*a, *b, *c)?;
            Ok(Output::scalar("count", &count(cls, bx, *method, cli.limit)?))
        }
        Command::Schur(sc) => schur(sc),
        Command::Verify(v) => {
            let reports = match v {
                VerifyCommand::Thm1 { part, caps } => {
                    let spec = RingSpec::new(caps.clone())?;
                    vec![match part {
                        ThmPart::Snf(p) => verify_snf_theorem(*p, &spec)?,
                        ThmPart::Symbolic => verify_symbolic(&spec)?,
                        ThmPart::Multinomial => verify_multinomial(&spec)?,
                        ThmPart::Containment => {
                            let top = spec.middle().unwrap_or(0);
                            verify_containment(&spec, 0..=top)?
                        }
                    }]
                }
                VerifyCommand::Toeplitz { h: Some(h) } => {
                    let h: Vec<BigInt> = h.iter().map(|&x| BigInt::from(x)).collect();
                    vec![verify_toeplitz_lemma(&h)?]
                }
                VerifyCommand::Toeplitz { h: None } => crate::suites::toeplitz_random(cfg.seed, cfg.trials)?,
                VerifyCommand::Bijection { a, b, c } => vec![verify_bijection(BoxSpec::new(*a, *b, *c)?)?],
                VerifyCommand::Det { class, a, b, c } => {
                    vec![verify_det_identity(BoxSpec::new(*a, *b, *c)?, class.parse()?)?]
                }
            };
            Ok(Output::reports(reports))
        }
        Command::Grid { suite } => Ok(Output::reports(run_suite(*suite, &cfg)?)),
    }
}

fn schur(sc: &SchurCommand) -> Result<Output> {
    match sc {
        SchurCommand::Expand { shape } => {
            let s: SkewShape = shape.parse()?;
            let terms: Vec<(Partition, u64)> = lr_expand(&s).into_iter().rev().collect();
            let text: String = terms.iter().map(|(p, m)| format!("{m} {p}\n")).collect();
            Ok(Output::value(
                json!({
                    "shape": s,
                    "terms": terms.iter().map(|(p, m)| json!({"partition": p, "multiplicity": m.to_string()})).collect::<Vec<_>>(),
                }),
                text,
                &["partition", "multiplicity"],
                terms.iter().map(|(p, m)| vec![p.to_string(), m.to_string()]).collect(),
            ))
        }
        SchurCommand::Legal { shape, c, n } => {
            let s: SkewShape = shape.parse()?;
            let legal = is_legal(&s, s.rows(), *c, *n)?;
            let minor = if legal { Some(minor_for_shape(&s, *c, *n)?) } else { None };
            let text = match &minor {
                Some((rows, cols)) => format!("legal: rows {rows:?} cols {cols:?}\n"),
                None => "not legal\n".to_string(),
            };
            Ok(Output::value(
                json!({"shape": s, "k": s.rows(), "c": c, "n": n, "legal": legal, "minor": minor.as_ref().map(|(r, c)| json!({"rows": r, "cols": c}))}),
                text,
                &["shape", "legal"],
                vec![vec![s.to_string(), legal.to_string()]],
            ))
        }
        SchurCommand::Decompose { nu, c, n } => {
            let p: Partition = nu.parse()?;
            let combo = inverse_lr_decompose(&p, p.len(), *c, *n)?;
            Ok(Output::value(
                json!({"nu": p, "c": c, "n": n, "terms": combo}),
                format!("{combo}\n"),
                &["shape", "coeff"],
                combo.terms.iter().map(|(s, k)| vec![s.to_string(), k.to_string()]).collect(),
            ))
        }
    }
}

fn exit_code_for(e: &Error) -> i32 {
    match e {
        Error::Construction(_) | Error::NotPerfectMatching(_) => 1,
        _ => 2,
    }
}

/// Parses `args` (including the program name), runs the command and writes
/// the report to `out` (or the `--output` file) and diagnostics to `err`.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let target: &mut dyn Write = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let output = match execute(&cli) {
        Ok(o) => o,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return exit_code_for(&e);
        }
    };
    let bytes = match output.render(cli.format) {
        Ok(b) => b,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            return 1;
        }
    };
    let written = match &cli.output {
        Some(path) => fs::write(path, &bytes).map_err(|e| format!("{}: {e}", path.display())),
        None => out.write_all(&bytes).map_err(|e| e.to_string()),
    };
    if let Err(e) = written {
        let _ = writeln!(err, "error: {e}");
        return 2;
    }
    if output.passed {
        0
    } else {
        1
    }
}
