//! Command-line front end. [`run_command`] does all the work and returns the
//! exit code with the text to print, so it can be driven from tests.

mod corpus;
mod output;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use crate::algebra::TPoly;
use crate::engine::IndexVector;
use crate::hall_littlewood::{mul_hl, p_from_q_coefficient, pieri_hl, straighten_hl};
use crate::oracle::{self, OracleReport};
use crate::partition::Partition;
use crate::schur::{mul_schur, pieri_schur, straighten_schur, SchurSum};
use crate::universal::{mul_uc, UCIndex, UCSum};
use crate::{Error, HLSum};

pub use corpus::{parse_corpus, run_corpus, run_corpus_source, CorpusCase};
pub use output::{Basis, Format, Key, Rendered};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MISMATCH: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INTERNAL: i32 = 3;

/// Corpus of worked examples shipped with the crate.
pub const WORKED_EXAMPLES: &str = include_str!("../../corpus/worked_examples.jsonl");

#[derive(Debug, Parser)]
#[command(name = "symfunc", about = "Exact structure constants for Schur, Hall-Littlewood and universal characters")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Debug, Subcommand)]
enum Cmd {
    /// Straighten an integer index vector into the basis.
    Straighten(Opts),
    /// Expand a product of two basis elements.
    Mul(Opts),
    /// Multiply by the one-row element of degree --r.
    Pieri(Opts),
    /// One structure constant: coefficient of --la (and --mu2) in a product.
    Coeff(Opts),
    /// Compare the operator formulas with the oracles up to --bound.
    OracleCheck(Opts),
    /// Run a golden corpus file.
    Corpus(Opts),
    /// Run the built-in corpus and small oracle sweeps.
    Selftest(Opts),
}

#[derive(Clone, Debug)]
struct IntList(Vec<i64>);

fn parse_int_list(s: &str) -> Result<IntList, String> {
    if s.is_empty() {
        return Ok(IntList(Vec::new()));
    }
    s.split(',')
        .map(|p| p.parse::<i64>().map_err(|_| format!("'{p}' is not an integer")))
        .collect::<Result<_, _>>()
        .map(IntList)
}

#[derive(Debug, Args)]
struct Opts {
    #[arg(long, value_enum, default_value = "schur")]
    basis: Basis,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    mu: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    nu: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    alpha: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    la: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    mu2: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    eta: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    tau: Option<IntList>,
    #[arg(long, value_parser = parse_int_list, allow_hyphen_values = true)]
    nu2: Option<IntList>,
    #[arg(long)]
    r: Option<usize>,
    #[arg(long, allow_hyphen_values = true)]
    t_eval: Option<i64>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    #[arg(long)]
    bound: Option<usize>,
    #[arg(long)]
    corpus: Option<PathBuf>,
    /// Report Hall-Littlewood constants in the P basis instead of Q.
    #[arg(long)]
    pbasis: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Mismatch(String),
    Internal(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Internal(e)
    }
}

type Outcome = Result<String, Failure>;

/// Runs one command line (without the program name).
pub fn run_command<S: AsRef<str>>(argv: &[S]) -> (i32, String) {
    let full = std::iter::once("symfunc").chain(argv.iter().map(|s| s.as_ref()));
    let cli = match Cli::try_parse_from(full) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            return (code, e.to_string().trim_end().to_string());
        }
    };
    let result = match &cli.cmd {
        Cmd::Straighten(o) => straighten(o).and_then(|r| emit(r, o)),
        Cmd::Mul(o) => mul(o).and_then(|r| emit(r, o)),
        Cmd::Pieri(o) => pieri(o).and_then(|r| emit(r, o)),
        Cmd::Coeff(o) => coeff(o).and_then(|r| emit(r, o)),
        Cmd::OracleCheck(o) => oracle_check(o),
        Cmd::Corpus(o) => match &o.corpus {
            Some(path) => return run_corpus(path),
            None => Err(Failure::Usage("corpus requires --corpus PATH".into())),
        },
        Cmd::Selftest(_) => selftest(),
    };
    match result {
        Ok(out) => (EXIT_OK, out),
        Err(Failure::Usage(m)) => (EXIT_USAGE, format!("error: {m}")),
        Err(Failure::Mismatch(m)) => (EXIT_MISMATCH, m),
        Err(Failure::Internal(e)) => (EXIT_INTERNAL, format!("internal error: {e}")),
    }
}

fn emit(r: Rendered, o: &Opts) -> Outcome {
    let r = match o.t_eval {
        Some(t) => r.eval_at(t),
        None => r,
    };
    Ok(r.render(o.format)?)
}

fn vector(flag: &str, v: &Option<IntList>) -> Result<Vec<i64>, Failure> {
    v.as_ref()
        .map(|l| l.0.clone())
        .ok_or_else(|| Failure::Usage(format!("missing --{flag}")))
}

fn partition(flag: &str, v: &Option<IntList>) -> Result<Partition, Failure> {
    let parts = vector(flag, v)?;
    Partition::new(&parts).map_err(|e| Failure::Usage(format!("--{flag}: {e}")))
}

/// Like [`partition`], but an absent flag means the empty partition.
fn partition_or_empty(flag: &str, v: &Option<IntList>) -> Result<Partition, Failure> {
    match v {
        None => Ok(Partition::empty()),
        Some(_) => partition(flag, v),
    }
}

fn uc_operands(o: &Opts) -> Result<(UCIndex, UCIndex), Failure> {
    let a = UCIndex::new(partition_or_empty("mu", &o.mu)?, partition_or_empty("eta", &o.eta)?);
    let b_la = match &o.tau {
        Some(_) => partition("tau", &o.tau)?,
        None => partition_or_empty("nu", &o.nu)?,
    };
    let b = UCIndex::new(b_la, partition_or_empty("nu2", &o.nu2)?);
    Ok((a, b))
}

fn schur_rendered(s: &SchurSum) -> Rendered {
    Rendered::new(Basis::Schur, s.terms().map(|(la, c)| (Key::Part(la.clone()), TPoly::constant(c.clone()))))
}

fn hl_rendered(s: &HLSum) -> Rendered {
    Rendered::new(Basis::Hl, s.terms().map(|(la, c)| (Key::Part(la.clone()), c.clone())))
}

fn uc_rendered(s: &UCSum) -> Rendered {
    Rendered::new(Basis::Uc, s.terms().map(|(k, c)| (Key::Pair(k.clone()), TPoly::constant(c.clone()))))
}

fn straighten(o: &Opts) -> Result<Rendered, Failure> {
    let alpha = IndexVector::new(vector("alpha", &o.alpha)?);
    match o.basis {
        Basis::Schur => {
            let terms = straighten_schur(&alpha).map(|(s, la)| (Key::Part(la), TPoly::constant(s)));
            Ok(Rendered::new(Basis::Schur, terms))
        }
        Basis::Hl => Ok(hl_rendered(&straighten_hl(&alpha)?)),
        Basis::Uc => {
            let eta = IndexVector::new(o.eta.as_ref().map(|l| l.0.clone()).unwrap_or_default());
            let terms = match (straighten_schur(&alpha), straighten_schur(&eta)) {
                (Some((s1, la)), Some((s2, mu))) => Some((Key::Pair(UCIndex::new(la, mu)), TPoly::constant(s1 * s2))),
                _ => None,
            };
            Ok(Rendered::new(Basis::Uc, terms))
        }
    }
}

fn mul(o: &Opts) -> Result<Rendered, Failure> {
    match o.basis {
        Basis::Schur => Ok(schur_rendered(&mul_schur(&partition("mu", &o.mu)?, &partition("nu", &o.nu)?)?)),
        Basis::Hl => {
            let (mu, nu) = (partition("mu", &o.mu)?, partition("nu", &o.nu)?);
            let q = mul_hl(&mu, &nu)?;
            if !o.pbasis {
                return Ok(hl_rendered(&q));
            }
            let terms = q
                .terms()
                .map(|(la, c)| Ok((Key::Part(la.clone()), p_from_q_coefficient(c, &mu, &nu, la)?)))
                .collect::<Result<Vec<_>, Error>>()?;
            Ok(Rendered::new(Basis::Hl, terms))
        }
        Basis::Uc => {
            let (a, b) = uc_operands(o)?;
            Ok(uc_rendered(&mul_uc(&a, &b)?))
        }
    }
}

fn pieri(o: &Opts) -> Result<Rendered, Failure> {
    let r = o.r.ok_or_else(|| Failure::Usage("missing --r".into()))?;
    match o.basis {
        Basis::Schur => Ok(schur_rendered(&pieri_schur(&partition("mu", &o.mu)?, r)?)),
        Basis::Hl => Ok(hl_rendered(&pieri_hl(&partition("mu", &o.mu)?, r)?)),
        Basis::Uc => {
            let a = UCIndex::new(partition_or_empty("mu", &o.mu)?, partition_or_empty("eta", &o.eta)?);
            let row = Partition::new(&[r as i64]).map_err(|e| Failure::Usage(format!("--r: {e}")))?;
            Ok(uc_rendered(&mul_uc(&a, &UCIndex::new(row, Partition::empty()))?))
        }
    }
}

fn coeff(o: &Opts) -> Result<Rendered, Failure> {
    match o.basis {
        Basis::Schur => {
            let la = partition("la", &o.la)?;
            let c = mul_schur(&partition("mu", &o.mu)?, &partition("nu", &o.nu)?)?.coeff(&la);
            Ok(Rendered::single(Basis::Schur, Key::Part(la), TPoly::constant(c)))
        }
        Basis::Hl => {
            let (mu, nu, la) = (partition("mu", &o.mu)?, partition("nu", &o.nu)?, partition("la", &o.la)?);
            let mut c = mul_hl(&mu, &nu)?.coeff(&la);
            if o.pbasis {
                c = p_from_q_coefficient(&c, &mu, &nu, &la)?;
            }
            Ok(Rendered::single(Basis::Hl, Key::Part(la), c))
        }
        Basis::Uc => {
            let (a, b) = uc_operands(o)?;
            let key = UCIndex::new(partition("la", &o.la)?, partition_or_empty("mu2", &o.mu2)?);
            let c = mul_uc(&a, &b)?.coeff(&key);
            Ok(Rendered::single(Basis::Uc, Key::Pair(key), TPoly::constant(c)))
        }
    }
}

/// Sweeps for one basis; `bound` must not exceed the basis maximum.
pub fn oracle_reports(basis: Basis, bound: usize) -> Result<Vec<OracleReport>, Error> {
    Ok(match basis {
        Basis::Schur => vec![
            oracle::check_schur_tableaux(bound)?,
            oracle::check_schur_x_expansion(bound.min(6))?,
        ],
        Basis::Hl => vec![
            oracle::check_hl_x_expansion(bound)?,
            oracle::check_hl_pieri_psi(bound, 4)?,
            oracle::check_t0_degeneration(bound)?,
        ],
        Basis::Uc => vec![
            oracle::check_uc_koike(bound)?,
            oracle::check_uc_xy(bound.min(oracle::MAX_BOUND_UC_XY))?,
        ],
    })
}

fn oracle_check(o: &Opts) -> Outcome {
    let max = match o.basis {
        Basis::Schur => oracle::MAX_BOUND_SCHUR,
        Basis::Hl => oracle::MAX_BOUND_HL,
        Basis::Uc => oracle::MAX_BOUND_UC,
    };
    let bound = o.bound.unwrap_or(max);
    if bound > max {
        return Err(Failure::Usage(format!("--bound {bound} exceeds the maximum {max} for basis {}", o.basis.name())));
    }
    let reports = oracle_reports(o.basis, bound)?;
    let text = reports.iter().map(|r| r.to_string()).collect::<Vec<_>>().join("\n");
    if reports.iter().all(OracleReport::passed) {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}

fn selftest() -> Outcome {
    let (code, mut text) = run_corpus_source(WORKED_EXAMPLES);
    let mut ok = code == EXIT_OK;
    for basis in [Basis::Schur, Basis::Hl, Basis::Uc] {
        for r in oracle_reports(basis, 3)? {
            ok &= r.passed();
            text.push('\n');
            text.push_str(&r.to_string());
        }
    }
    if ok {
        Ok(text)
    } else {
        Err(Failure::Mismatch(text))
    }
}
