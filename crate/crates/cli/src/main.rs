//! `primediff`: Hamilton paths, cycles and 2-factors in prime difference
//! graphs, from the command line.

use std::io::{self, Read, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use primediff::factors::{self, FactorError, TwoFactorSpec};
use primediff::generators::{self, GeneratorError};
use primediff::json::{DecodeError, Witness};
use primediff::oracle::{self, OracleConfig, OracleError};
use primediff::paths::{self, PathError};
use primediff::primes::{self, PrimePair};
use primediff::{Interval, Vertex, Violation};

#[derive(Parser)]
#[command(
    name = "primediff",
    version,
    about = "Witnesses for prime difference graphs"
)]
struct Cli {
    /// Emit witness JSON (one document per line) instead of plain sequences.
    #[arg(long, global = true)]
    json: bool,

    /// Largest order the brute-force oracle will accept [env: ORACLE_MAX_ORDER].
    #[arg(long, global = true, value_name = "N")]
    oracle_max_order: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hamilton path of G_N from A to B.
    Path { n: Vertex, a: Vertex, b: Vertex },
    /// Hamilton cycle of G_N, optionally through a given edge.
    Cycle {
        n: Vertex,
        #[arg(long, value_name = "A,B", value_delimiter = ',')]
        through: Option<Vec<Vertex>>,
    },
    /// 2-factor of G_N with the given cycle lengths.
    TwoFactor {
        n: Vertex,
        #[arg(long, value_name = "L1,L2,...")]
        lengths: String,
    },
    /// Hamilton cycle (or, with --path, path) using only differences 2 and 3.
    Diff23 {
        n: Vertex,
        #[arg(long)]
        path: bool,
    },
    /// Hamilton cycles generated by prime pairs summing to N.
    TwoPrime {
        n: Vertex,
        #[arg(long, value_name = "P,Q", value_delimiter = ',')]
        pair: Option<Vec<u64>>,
    },
    /// Pairwise edge-disjoint Hamilton cycles of G_N.
    Disjoint { n: Vertex },
    /// Smallest K-term arithmetic progression of primes.
    Ap {
        k: usize,
        /// Bound on the first term and on the common difference.
        #[arg(long, default_value_t = 10_000)]
        limit: u64,
    },
    /// Endpoint pairs of G_N with no Hamilton path.
    Exceptions {
        n: Vertex,
        /// Use exhaustive search instead of the constructions.
        #[arg(long)]
        oracle: bool,
    },
    /// Hamilton path of G_N from A to B by exhaustive search.
    OraclePath { n: Vertex, a: Vertex, b: Vertex },
    /// Check a witness JSON document read from standard input.
    Verify,
}

/// A failed command: exit code, error kind and human-readable detail.
struct Failure {
    code: u8,
    kind: &'static str,
    detail: serde_json::Value,
}

impl Failure {
    fn infeasible(detail: impl ToString) -> Self {
        Failure {
            code: 1,
            kind: "infeasible",
            detail: json!(detail.to_string()),
        }
    }

    fn usage(detail: impl ToString) -> Self {
        Failure {
            code: 2,
            kind: "usage",
            detail: json!(detail.to_string()),
        }
    }

    fn internal(detail: impl ToString) -> Self {
        Failure {
            code: 1,
            kind: "internal",
            detail: json!(detail.to_string()),
        }
    }
}

impl From<PathError> for Failure {
    fn from(e: PathError) -> Self {
        match e {
            PathError::Infeasible { .. } | PathError::UnsupportedOrder { .. } => {
                Failure::infeasible(e)
            }
            PathError::SelfCheck(_) => Failure::internal(e),
            _ => Failure::usage(e),
        }
    }
}

impl From<FactorError> for Failure {
    fn from(e: FactorError) -> Self {
        match e {
            FactorError::Infeasible { .. } => Failure::infeasible(e),
            FactorError::InvalidSpec(_) => Failure::usage(e),
            FactorError::Path(p) => p.into(),
            FactorError::SelfCheck(_) => Failure::internal(e),
        }
    }
}

impl From<GeneratorError> for Failure {
    fn from(e: GeneratorError) -> Self {
        match e {
            GeneratorError::Infeasible { .. } | GeneratorError::NotFound { .. } => {
                Failure::infeasible(e)
            }
            GeneratorError::OrderTooSmall { .. } | GeneratorError::BadPair { .. } => {
                Failure::usage(e)
            }
            GeneratorError::Path(p) => p.into(),
            GeneratorError::SelfCheck(_) => Failure::internal(e),
        }
    }
}

impl From<OracleError> for Failure {
    fn from(e: OracleError) -> Self {
        match e {
            OracleError::OrderExceedsCap { .. } => Failure {
                code: 1,
                kind: "resource_limit",
                detail: json!(e.to_string()),
            },
            _ => Failure::usage(e),
        }
    }
}

impl From<DecodeError> for Failure {
    fn from(e: DecodeError) -> Self {
        Failure {
            code: 1,
            kind: "malformed",
            detail: json!(e.to_string()),
        }
    }
}

fn violation(v: Violation) -> Failure {
    Failure {
        code: 1,
        kind: "violation",
        detail: json!(v.to_string()),
    }
}

fn plain(seq: &[Vertex]) -> String {
    seq.iter()
        .map(Vertex::to_string)
        .collect::<Vec<_>>()
        .join(" ")
}

fn document(witness: &Witness, ok: bool) -> String {
    let mut doc = witness.to_document();
    doc.ok = Some(ok);
    serde_json::to_string(&doc).expect("witness documents always serialise")
}

fn render(witness: Witness, json: bool) -> String {
    if json {
        return document(&witness, true);
    }
    match &witness {
        Witness::Path(w) => plain(w.sequence()),
        Witness::Cycle(w) => plain(w.sequence()),
        Witness::TwoFactor(w) => w
            .cycles()
            .iter()
            .map(|c| plain(c))
            .collect::<Vec<_>>()
            .join(" | "),
    }
}

fn oracle_config(cli: &Cli) -> Result<OracleConfig, Failure> {
    let mut config = OracleConfig::from_env().map_err(Failure::usage)?;
    if let Some(cap) = cli.oracle_max_order {
        config.max_order = cap;
    }
    Ok(config)
}

fn pair_list(pairs: &[(Vertex, Vertex)]) -> String {
    pairs
        .iter()
        .map(|(a, b)| format!("({a},{b})"))
        .collect::<Vec<_>>()
        .join(" ")
}

fn run(cli: &Cli, stdin: impl FnOnce() -> io::Result<String>) -> Result<Vec<String>, Failure> {
    let json = cli.json;
    let one = |w: Witness| Ok(vec![render(w, json)]);
    match &cli.command {
        Command::Path { n, a, b } => one(paths::hamilton_path(*n, *a, *b)?.into()),
        Command::Cycle { n, through } => {
            let cycle = match through.as_deref() {
                Some(&[u, v]) => paths::hamilton_cycle_through_edge(*n, (u, v))?,
                Some(_) => return Err(Failure::usage("--through takes exactly two vertices")),
                None => paths::hamilton_cycle(*n)?,
            };
            one(cycle.into())
        }
        Command::TwoFactor { n, lengths } => {
            let parsed: TwoFactorSpec = lengths.parse()?;
            let spec = TwoFactorSpec::with_order(*n, parsed.lengths().to_vec())?;
            one(factors::two_factor(&spec)?.into())
        }
        Command::Diff23 { n, path } => {
            if *path {
                one(generators::path_diff23(*n)?.into())
            } else {
                one(generators::cycle_diff23(*n)?.into())
            }
        }
        Command::TwoPrime { n, pair } => {
            let pairs = match pair.as_deref() {
                Some(&[p, q]) => vec![PrimePair::new(p, q).ok_or_else(|| {
                    Failure::usage(format!("{p} and {q} are not two distinct primes"))
                })?],
                Some(_) => return Err(Failure::usage("--pair takes exactly two primes")),
                None => primes::prime_pair_decompositions(u64::from(*n)),
            };
            if pairs.is_empty() {
                return Err(Failure::infeasible(format!(
                    "{n} is not a sum of two distinct primes"
                )));
            }
            pairs
                .into_iter()
                .map(|pair| Ok(render(generators::cycle_two_primes(*n, pair)?.into(), json)))
                .collect()
        }
        Command::Disjoint { n } => {
            let family = generators::edge_disjoint_cycles(*n)?;
            if family.is_fallback() {
                eprintln!("note: no generator applies to {n}; using a generic Hamilton cycle");
            }
            Ok(family
                .cycles
                .into_iter()
                .map(|c| render(c.into(), json))
                .collect())
        }
        Command::Ap { k, limit } => {
            let progression =
                primes::prime_arithmetic_progression(*k, *limit).ok_or_else(|| {
                    Failure::infeasible(format!(
                    "no {k}-term prime progression with first term and difference up to {limit}"
                ))
                })?;
            Ok(vec![if json {
                json!({ "k": k, "progression": progression }).to_string()
            } else {
                progression
                    .iter()
                    .map(u64::to_string)
                    .collect::<Vec<_>>()
                    .join(" ")
            }])
        }
        Command::Exceptions { n, oracle: brute } => {
            let pairs: Vec<(Vertex, Vertex)> = if *brute {
                let config = oracle_config(cli)?;
                oracle::brute_infeasible_pairs(&config, *n)?
            } else {
                paths::infeasible_pairs(*n)?
                    .into_iter()
                    .map(|p| (p.n1(), p.n2()))
                    .collect()
            };
            Ok(vec![if json {
                json!({ "n": n, "infeasible": pairs }).to_string()
            } else {
                pair_list(&pairs)
            }])
        }
        Command::OraclePath { n, a, b } => {
            let config = oracle_config(cli)?;
            let interval = Interval::first(*n).map_err(Failure::usage)?;
            match oracle::brute_hamilton_path(&config, interval, *a, *b)? {
                Some(w) => one(w.into()),
                None => Err(Failure::infeasible(format!(
                    "G_{n} has no Hamilton path from {a} to {b}"
                ))),
            }
        }
        Command::Verify => {
            let text = stdin().map_err(|e| Failure::usage(format!("reading stdin: {e}")))?;
            let witness = Witness::from_json(&text)?;
            match witness.verify() {
                Ok(()) => Ok(vec![if json {
                    document(&witness, true)
                } else {
                    "ok".to_string()
                }]),
                Err(v) => {
                    if json {
                        println!("{}", document(&witness, false));
                    }
                    Err(violation(v))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let read_stdin = || {
        let mut text = String::new();
        io::stdin().read_to_string(&mut text).map(|_| text)
    };
    match run(&cli, read_stdin) {
        Ok(lines) => {
            let mut out = io::stdout().lock();
            for line in lines {
                if writeln!(out, "{line}").is_err() {
                    return ExitCode::from(1);
                }
            }
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!(
                "{}",
                json!({ "error": failure.kind, "detail": failure.detail })
            );
            ExitCode::from(failure.code)
        }
    }
}
