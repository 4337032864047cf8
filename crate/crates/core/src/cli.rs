//! Command-line front end. Exit codes: 0 ok, 1 mismatch, 2 usage, 3 no recipe.

use std::fmt;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use crate::abacus::{beta_delta, beta_sequence, gamma, gamma_delta, marked_abacus, p_core_with_beads, render_abacus};
use crate::blocks::{blocks_char0, blocks_charp, Char0Param};
use crate::decomposition::{decompose, CharpParam, DecompRequest, Method, Regime};
use crate::diagram::{AlgebraElement, Diagram};
use crate::error::Error;
use crate::labeled::LabeledMatrix;
use crate::partition::Partition;
use crate::rep::field::is_prime;
use crate::rep::oracle::{OracleConfig, DEFAULT_BOUND};
use crate::verify::{run_suite, Suite};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "partalg", version, about = "Blocks and decomposition matrices of partition algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Abacus, runner counts and core of a partition
    Abacus {
        /// e.g. `5,4`, or `-` for the empty partition
        partition: Partition,
        #[arg(long)]
        beads: usize,
        #[arg(long)]
        p: usize,
        /// Adds the marker runner and the marked counts
        #[arg(long, allow_hyphen_values = true)]
        delta: Option<i64>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Product of two diagrams, e.g. `"1 -2 | 2 -1"`
    Multiply {
        a: String,
        b: String,
        #[arg(long)]
        n: usize,
        /// Print as an algebra element with a Laurent coefficient
        #[arg(long)]
        symbolic: bool,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Block decomposition of the labels
    Blocks {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        regime: RegimeArgs,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Decomposition matrix by recipe, by brute force, or both
    Decomp {
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        regime: RegimeArgs,
        #[arg(long, value_enum, default_value_t = MethodArg::Theorem)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        #[command(flatten)]
        oracle: OracleArgs,
    },
    /// Run the acceptance checks
    Verify {
        #[arg(long, value_enum, default_value_t = SuiteArg::All)]
        suite: SuiteArg,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Args, Debug)]
pub struct RegimeArgs {
    /// Characteristic of the field (an odd prime)
    #[arg(long, conflicts_with = "char0")]
    pub p: Option<usize>,
    /// Work over the rationals
    #[arg(long)]
    pub char0: bool,
    /// An integer, `x` for the generator of F_{p^2}, or `ss` for a
    /// non-integral parameter in characteristic 0
    #[arg(long, allow_hyphen_values = true)]
    pub delta: DeltaArg,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Largest cell module dimension the oracle accepts
    #[arg(long, default_value_t = DEFAULT_BOUND)]
    pub bound: usize,
    #[arg(long)]
    pub jobs: Option<usize>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DeltaArg {
    Int(i64),
    X,
    Ss,
}

impl FromStr for DeltaArg {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "x" => Ok(DeltaArg::X),
            "ss" => Ok(DeltaArg::Ss),
            _ => s.parse().map(DeltaArg::Int).map_err(|_| format!("bad parameter {s:?}: expected an integer, x or ss")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Theorem,
    Oracle,
    Both,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum SuiteArg {
    Core,
    Paper,
    All,
}

/// A failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: i32,
    pub message: String,
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

fn usage(message: impl Into<String>) -> Failure {
    Failure { code: EXIT_USAGE, message: message.into() }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::UnsupportedCase(_) => EXIT_UNSUPPORTED,
            Error::MalformedPartition(_)
            | Error::MalformedDiagram(_)
            | Error::Parse(_)
            | Error::SizeMismatch(..)
            | Error::BeadCountTooSmall { .. }
            | Error::LabelTooLarge { .. }
            | Error::InvalidField(_)
            | Error::DeskScaleExceeded { .. } => EXIT_USAGE,
            _ => EXIT_MISMATCH,
        };
        Failure { code, message: e.to_string() }
    }
}

impl RegimeArgs {
    pub fn regime(&self) -> Result<Regime, Failure> {
        match (self.char0, self.p, self.delta) {
            (true, _, DeltaArg::Int(d)) => Ok(Regime::Char0(Char0Param::Integral(d))),
            (true, _, DeltaArg::Ss) => Ok(Regime::Char0(Char0Param::NonIntegral)),
            (true, _, DeltaArg::X) => Err(usage("x needs a prime p")),
            (false, None, _) => Err(usage("give --p or --char0")),
            (false, Some(p), _) if p < 3 || !is_prime(p) => Err(usage(format!("p = {p} is not an odd prime"))),
            (false, Some(p), DeltaArg::Int(d)) => Ok(Regime::CharP { p, delta: CharpParam::Residue(d) }),
            (false, Some(p), DeltaArg::X) => Ok(Regime::CharP { p, delta: CharpParam::Outside }),
            (false, Some(_), DeltaArg::Ss) => Err(usage("ss is only meaningful with --char0")),
        }
    }
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn main_with<I, T>(args: I, out: &mut dyn std::io::Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match run(cli.command, out) {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {f}");
            f.code
        }
    }
}

fn emit(out: &mut dyn std::io::Write, text: &str) -> Result<(), Failure> {
    writeln!(out, "{}", text.trim_end()).map_err(|e| Failure { code: EXIT_MISMATCH, message: e.to_string() })
}

fn join(v: &[usize]) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

pub fn run(command: Command, out: &mut dyn std::io::Write) -> Result<i32, Failure> {
    match command {
        Command::Abacus { partition, beads, p, delta, format } => {
            if p < 2 {
                return Err(usage("p must be at least 2"));
            }
            let beta = beta_sequence(&partition, beads)?;
            let g = gamma(&partition, beads, p)?;
            let core = p_core_with_beads(&partition, p, beads)?;
            let marked = match delta {
                Some(d) => Some((beta_delta(&partition, beads, d)?, marked_abacus(&partition, beads, d, p)?, gamma_delta(&partition, beads, d, p)?)),
                None => None,
            };
            if format == Format::Json {
                let mut v = json!({
                    "partition": partition, "beads": beads, "p": p,
                    "beta": beta.values(), "gamma": g.counts, "core": core,
                });
                if let Some((bd, m, gd)) = &marked {
                    v["delta"] = json!(delta);
                    v["beta_delta"] = json!(bd);
                    v["abacus"] = json!(m);
                    v["gamma_delta"] = json!(gd.counts);
                }
                return emit(out, &serde_json::to_string_pretty(&v).expect("plain data")).map(|_| EXIT_OK);
            }
            let mut text = format!("beta: {}\n", join(beta.values()));
            match &marked {
                Some((bd, m, gd)) => {
                    let bd: Vec<String> = bd.iter().map(|x| x.to_string()).collect();
                    text += &format!("beta_delta: {}\n{}\n", bd.join(","), m.render());
                    text += &format!("marker runner: {}\ngamma: ({})\ngamma_delta: ({})\n", m.marker, join(&g.counts), join(&gd.counts));
                }
                None => {
                    text += &format!("{}\ngamma: ({})\n", render_abacus(&partition, beads, p)?, join(&g.counts));
                }
            }
            text += &format!("core: {core:?}");
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Multiply { a, b, n, symbolic, format } => {
            let x = Diagram::parse(&a, n)?;
            let y = Diagram::parse(&b, n)?;
            let (z, loops) = x.multiply(&y)?;
            let text = match format {
                Format::Json => serde_json::to_string_pretty(&json!({ "delta_power": loops, "diagram": z })).expect("plain data"),
                _ if symbolic => AlgebraElement::from_diagram(x).mul(&AlgebraElement::from_diagram(y))?.to_string(),
                _ => format!("δ^{loops} * {z}"),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Blocks { n, regime, format } => {
            let b = match regime.regime()? {
                Regime::Char0(d) => blocks_char0(n, d)?,
                Regime::CharP { delta: CharpParam::Outside, .. } => {
                    return Err(usage("blocks needs an integer parameter"));
                }
                Regime::CharP { p, delta: CharpParam::Residue(d) } => blocks_charp(n, p, d)?,
            };
            let text = match format {
                Format::Json => b.to_json(),
                _ => b.to_string(),
            };
            emit(out, &text)?;
            Ok(EXIT_OK)
        }
        Command::Decomp { n, regime, method, format, oracle } => {
            let regime = regime.regime()?;
            let cfg = OracleConfig { seed: oracle.seed, bound: oracle.bound, jobs: oracle.jobs, ..Default::default() };
            let method = match method {
                MethodArg::Theorem => Method::Theorem,
                MethodArg::Oracle => Method::Oracle,
                MethodArg::Both => Method::Both,
            };
            let req = DecompRequest { n, regime, method };
            let render = |m: &LabeledMatrix| match format {
                Format::Text => m.to_string(),
                Format::Json => m.to_json(),
                Format::Csv => m.to_csv(),
            };
            match decompose(&req, &cfg) {
                Ok(ms) if method == Method::Both => {
                    emit(out, &format!("THEOREM\n{}", render(&ms[0])))?;
                    emit(out, &format!("ORACLE\n{}", render(&ms[1])))?;
                    let diff = ms[0].diff(&ms[1]);
                    emit(out, &format!("DIFF\n{}", if diff.is_empty() { "none".to_string() } else { diff.join("\n") }))?;
                    Ok(if diff.is_empty() { EXIT_OK } else { EXIT_MISMATCH })
                }
                Ok(ms) => {
                    emit(out, &render(&ms[0]))?;
                    Ok(EXIT_OK)
                }
                Err(Error::UnsupportedCase(msg)) if method == Method::Both => {
                    let only = decompose(&DecompRequest { method: Method::Oracle, ..req }, &cfg)?;
                    emit(out, &format!("ORACLE\n{}", render(&only[0])))?;
                    eprintln!("no recipe applies ({msg}); only the oracle result is available");
                    Ok(EXIT_UNSUPPORTED)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Verify { suite, seed, format } => {
            let suite = match suite {
                SuiteArg::Core => Suite::Core,
                SuiteArg::Paper => Suite::Paper,
                SuiteArg::All => Suite::All,
            };
            let results = run_suite(suite, seed);
            if format == Format::Json {
                emit(out, &serde_json::to_string_pretty(&results).expect("plain data"))?;
            } else {
                for r in &results {
                    let status = if r.passed { "PASS" } else { "FAIL" };
                    let mut line = format!("criterion {:>2} {status} {:>8.2}s  {}", r.id, r.seconds, r.name);
                    if !r.passed {
                        line += &format!(": {}", r.detail);
                    }
                    emit(out, &line)?;
                }
            }
            Ok(if results.iter().all(|r| r.passed) { EXIT_OK } else { EXIT_MISMATCH })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::blocks::BlockDecomposition;

    fn run_args(args: &[&str]) -> (i32, String) {
        let mut out = Vec::new();
        let code = main_with(std::iter::once("partalg").chain(args.iter().copied()), &mut out);
        (code, String::from_utf8(out).unwrap())
    }

    #[test]
    fn abacus_outputs() {
        let (code, text) = run_args(&["abacus", "5,4", "--beads", "10", "--p", "5"]);
        assert_eq!(code, 0);
        assert!(text.contains("gamma: (2,2,3,1,2)"), "{text}");
        assert!(text.contains("core: (3,1)"));
        let (_, text) = run_args(&["abacus", "-", "--beads", "3", "--p", "3", "--delta", "2"]);
        assert!(text.contains("marker runner: 2") && text.contains("gamma_delta: (1,1,2)"), "{text}");
        let (_, text) = run_args(&["abacus", "2,1", "--beads", "7", "--p", "5", "--delta", "6"]);
        assert!(text.contains("marker runner: 0"));
        assert_eq!(run_args(&["abacus", "3,x", "--beads", "3", "--p", "3"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["abacus", "3,1", "--beads", "3", "--p", "3"]).0, EXIT_USAGE);
    }

    #[test]
    fn multiply_outputs() {
        let (code, text) = run_args(&["multiply", "1 | 2 3 -3 | 4 -1 | 5 -5 | -2 | -4", "1 3 -3 -4 | 2 -1 | 4 | 5 -2 -5", "--n", "5"]);
        assert_eq!(code, 0);
        assert_eq!(text.trim(), format!("δ^1 * {}", Diagram::parse("1 | 2 3 4 -3 -4 | 5 -2 -5 | -1", 5).unwrap()));
        let (_, text) = run_args(&["multiply", "1 -1 | 2 -2", "1 -1 | 2 -2", "--n", "2"]);
        assert_eq!(text.trim(), "δ^0 * 1 -1 | 2 -2");
        assert_eq!(run_args(&["multiply", "1 -1 | 2 -2 | 3 -3", "1 -1 | 2 -2", "--n", "2"]).0, EXIT_USAGE);
    }

    #[test]
    fn blocks_outputs() {
        let (code, text) = run_args(&["blocks", "--n", "3", "--p", "3", "--delta", "2", "--format", "json"]);
        assert_eq!(code, 0);
        let b = BlockDecomposition::from_json(&text).unwrap();
        assert_eq!(b.classes.len(), 3);
        let (_, text) = run_args(&["blocks", "--n", "4", "--char0", "--delta", "4"]);
        assert!(text.contains("{(1), (4)}"), "{text}");
        let (_, text) = run_args(&["blocks", "--n", "4", "--p", "3", "--delta", "1", "--format", "json"]);
        let b = BlockDecomposition::from_json(&text).unwrap();
        assert!(b.same_class(&"1".parse().unwrap(), &"2,2".parse().unwrap()));
        assert_eq!(run_args(&["blocks", "--n", "3", "--p", "4", "--delta", "1"]).0, EXIT_USAGE);
        assert_eq!(run_args(&["blocks", "--n", "3", "--p", "3", "--delta", "ss"]).0, EXIT_USAGE);
    }

    #[test]
    fn decomp_exit_codes() {
        let (code, text) = run_args(&["decomp", "--n", "3", "--p", "3", "--delta", "2", "--method", "both"]);
        assert_eq!(code, 0, "{text}");
        assert!(text.contains("DIFF\nnone"));
        assert_eq!(run_args(&["decomp", "--n", "4", "--p", "3", "--delta", "1", "--method", "theorem"]).0, EXIT_UNSUPPORTED);
        assert_eq!(run_args(&["decomp", "--n", "4", "--p", "5", "--delta", "2", "--method", "both"]).0, 0);
        let (code, text) = run_args(&["decomp", "--n", "2", "--p", "3", "--delta", "x", "--format", "json"]);
        assert_eq!(code, 0);
        let m = LabeledMatrix::from_json(&text).unwrap();
        assert_eq!(m.field.ext, 2);
        let (code, text) = run_args(&["decomp", "--n", "3", "--char0", "--delta", "ss", "--method", "both"]);
        assert_eq!(code, 0, "{text}");
    }

    #[test]
    fn oracle_output_is_reproducible() {
        let args = ["decomp", "--n", "3", "--p", "3", "--delta", "1", "--method", "oracle", "--seed", "5", "--format", "json"];
        let (_, a) = run_args(&args);
        let (_, b) = run_args(&args);
        assert_eq!(a, b);
        let mut with_jobs = args.to_vec();
        with_jobs.extend(["--jobs", "2"]);
        assert_eq!(run_args(&with_jobs).1, a);
    }

    #[test]
    fn verify_core_runs() {
        let (code, text) = run_args(&["verify", "--suite", "core", "--seed", "7", "--format", "json"]);
        assert_eq!(code, 0, "{text}");
        let v: serde_json::Value = serde_json::from_str(&text).unwrap();
        assert_eq!(v.as_array().unwrap().len(), 5);
    }
}
