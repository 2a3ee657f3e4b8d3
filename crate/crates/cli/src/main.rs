use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use gspin_core::clifford::{CliffordContext, Multivector, MultivectorJson};
use gspin_core::conjugacy::TorusPointJson;
use gspin_core::satake::{Rep, StoreRecord};
use gspin_core::weights::{default_eta, AffineConeJson};
use gspin_core::{Quadratic, Scalar};
use gspin_kit::{execute, exit, render_text, CliError, CliResult, Request, DEFAULT_SEED};

/// Exact computations for GSpin(2n+1)-valued parameters.
#[derive(Parser)]
#[command(name = "gspin-kit", version)]
struct Cli {
    /// Print machine-readable JSON reports.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomized checks.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compare two torus points under every conjugacy criterion.
    Conj {
        /// Inline JSON `{"n":2,"c":"6","a":["2","3"]}` or a file containing it.
        #[arg(long)]
        t1: String,
        /// Second point, same format as `--t1`.
        #[arg(long)]
        t2: String,
    },
    /// Euler polynomials of every record in a store.
    Lfactor {
        /// JSONL parameter store.
        #[arg(long)]
        store: PathBuf,
        /// Representation: `spin` or `std`.
        #[arg(long, default_value = "spin")]
        rep: Rep,
    },
    /// Truncated partial L-value over a store.
    Lsum {
        /// JSONL parameter store.
        #[arg(long)]
        store: PathBuf,
        /// Rational point `s`, e.g. `3` or `7/2`.
        #[arg(long, allow_hyphen_values = true)]
        s: String,
        /// Only records with q <= cutoff contribute.
        #[arg(long, default_value_t = u64::MAX)]
        cutoff: u64,
        /// Representation: `spin` or `std`.
        #[arg(long, default_value = "spin")]
        rep: Rep,
        /// Shift by n(n+1)/4 along the similitude.
        #[arg(long)]
        c_normalize: bool,
    },
    /// Hodge-Tate predicates.
    Weights {
        #[command(subcommand)]
        command: WeightsCommand,
    },
    /// Small-slope bound and cone admissibility.
    Classicality {
        /// Rank n of GSp(2n).
        #[arg(long)]
        n: usize,
        /// GSp weight `c,k1,...,kn`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        w: Vec<String>,
        /// Valuation v(beta), rational.
        #[arg(long, allow_hyphen_values = true)]
        vbeta: String,
        /// Exponents `c,a1,...,an`; defaults to `0,1,...,n`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        eta: Option<Vec<i64>>,
        /// Cone JSON `{"functionals":[[...]],"thresholds":["..."]}` or a file containing it.
        #[arg(long)]
        cone: Option<String>,
    },
    /// G2 torus points inside Spin7.
    G2 {
        #[command(subcommand)]
        command: G2Command,
    },
    /// Clifford algebra arithmetic.
    Clifford {
        #[command(subcommand)]
        command: CliffordCommand,
    },
    /// JSONL parameter stores.
    Store {
        #[command(subcommand)]
        command: StoreCommand,
    },
}

#[derive(Subcommand)]
enum WeightsCommand {
    /// Regularity, HT1 and HT2 for a cocharacter `(c0; mu)`.
    Check {
        /// Rank n.
        #[arg(long)]
        n: usize,
        /// Coordinates `mu_1,...,mu_n`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        mu: Vec<i64>,
        /// Similitude coordinate, rational.
        #[arg(long, default_value = "0", allow_hyphen_values = true)]
        c0: String,
    },
    /// Hodge cocharacter of a dominant GSp weight `c,k1,...,kn`.
    Hodge {
        /// Rank n.
        #[arg(long)]
        n: usize,
        /// Coordinates `c,k1,...,kn`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lambda: Vec<i64>,
    },
}

#[derive(Subcommand)]
enum G2Command {
    /// Embedding, traces and the 8 = 7 + 1 restriction for `(x, y)`.
    Check {
        /// Rational or quadratic `a+b*sqrt(d)`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        /// Same format as `--x`.
        #[arg(long, allow_hyphen_values = true)]
        y: String,
    },
}

#[derive(Subcommand)]
enum CliffordCommand {
    /// Products `ab`, `ba` and the anticommutator.
    Mul {
        /// Rank n: 2n+1 generators.
        #[arg(long)]
        n: usize,
        /// JSON multivector or a sum of monomials such as `e1`, `2*e1*e3 + 1/2`.
        #[arg(long, allow_hyphen_values = true)]
        a: String,
        /// Same format as `--a`.
        #[arg(long, allow_hyphen_values = true)]
        b: String,
    },
    /// Spinor norm and GSpin membership.
    Norm {
        /// Rank n: 2n+1 generators.
        #[arg(long)]
        n: usize,
        /// Multivector, same format as in `clifford mul`.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
    },
    /// The torus element `(c; a)`.
    Torus {
        /// Similitude scalar c.
        #[arg(long, allow_hyphen_values = true)]
        c: String,
        /// Entries `a1,...,an`.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        a: Vec<String>,
    },
    /// Randomized check of `v^2 = Q(v)` and associativity.
    Check {
        /// Rank n: 2n+1 generators.
        #[arg(long)]
        n: usize,
        /// Random vectors and triples to test.
        #[arg(long, default_value_t = 100)]
        samples: usize,
    },
}

#[derive(Subcommand)]
enum StoreCommand {
    /// Validate a store file.
    Validate {
        /// JSONL parameter store.
        #[arg(long)]
        store: PathBuf,
    },
    /// Append validated records to a store.
    Ingest {
        /// JSONL store to append to.
        #[arg(long)]
        store: PathBuf,
        /// JSONL records to add.
        #[arg(long)]
        input: PathBuf,
    },
}

fn read(path: &Path) -> CliResult<String> {
    fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
}

/// Inline JSON when the argument starts with `{`, a file path otherwise.
fn inline_or_file(arg: &str) -> CliResult<String> {
    if arg.trim_start().starts_with('{') {
        Ok(arg.to_owned())
    } else {
        read(Path::new(arg))
    }
}

fn parse_json<T: serde::de::DeserializeOwned>(what: &str, arg: &str) -> CliResult<T> {
    serde_json::from_str(&inline_or_file(arg)?).map_err(|e| CliError::Usage(format!("{what}: {e}")))
}

fn read_records(path: &Path) -> CliResult<Vec<StoreRecord>> {
    read(path)?
        .lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| {
            serde_json::from_str(l)
                .map_err(|e| CliError::Usage(format!("{}: line {}: {e}", path.display(), i + 1)))
        })
        .collect()
}

/// A JSON multivector, or `+`-separated monomials `coef*e_i*e_j` with 1-based indices.
fn parse_multivector(n: usize, arg: &str) -> CliResult<MultivectorJson> {
    if arg.trim_start().starts_with('{') {
        let j: MultivectorJson = parse_json("multivector", arg)?;
        if j.n != n {
            return Err(CliError::Usage(format!(
                "multivector has n = {}, expected {n}",
                j.n
            )));
        }
        return Ok(j);
    }
    let ctx = CliffordContext::shared(n)?;
    let mut total = Multivector::<Quadratic>::zero(&ctx);
    for term in arg.split('+').map(str::trim) {
        if term.is_empty() {
            return Err(CliError::Usage(format!("empty term in {arg:?}")));
        }
        let mut x = Multivector::one(&ctx);
        for factor in term.split('*').map(str::trim) {
            let next = match factor.strip_prefix('e') {
                Some(idx) => {
                    let i: usize = idx
                        .parse()
                        .map_err(|_| CliError::Usage(format!("bad generator {factor:?}")))?;
                    if i == 0 || i > ctx.dim_v() {
                        return Err(CliError::Usage(format!(
                            "generator e{i} outside e1..e{}",
                            ctx.dim_v()
                        )));
                    }
                    Multivector::generator(&ctx, i - 1)
                }
                None => Multivector::scalar(&ctx, Quadratic::parse_exact(factor)?),
            };
            x = x.mul(&next)?;
        }
        total = total.add(&x)?;
    }
    Ok(total.to_json())
}

fn build_request(cli: &Cli) -> CliResult<Request> {
    Ok(match &cli.command {
        Command::Conj { t1, t2 } => Request::Conj {
            t1: parse_json::<TorusPointJson>("--t1", t1)?,
            t2: parse_json::<TorusPointJson>("--t2", t2)?,
        },
        Command::Lfactor { store, rep } => Request::Lfactor {
            rep: *rep,
            records: read_records(store)?,
        },
        Command::Lsum {
            store,
            s,
            cutoff,
            rep,
            c_normalize,
        } => Request::Lsum {
            rep: *rep,
            s: s.clone(),
            cutoff: *cutoff,
            c_normalized: *c_normalize,
            records: read_records(store)?,
        },
        Command::Weights {
            command: WeightsCommand::Check { n, mu, c0 },
        } => Request::WeightsCheck {
            n: *n,
            c0: c0.clone(),
            mu: mu.clone(),
        },
        Command::Weights {
            command: WeightsCommand::Hodge { n, lambda },
        } => Request::WeightsHodge {
            n: *n,
            lambda: lambda.clone(),
        },
        Command::Classicality {
            n,
            w,
            vbeta,
            eta,
            cone,
        } => Request::Classicality {
            n: *n,
            w: w.clone(),
            vbeta: vbeta.clone(),
            eta: eta.clone().unwrap_or_else(|| default_eta(*n)),
            cone: cone
                .as_deref()
                .map(|c| parse_json::<AffineConeJson>("--cone", c))
                .transpose()?,
        },
        Command::G2 {
            command: G2Command::Check { x, y },
        } => Request::G2Check {
            x: x.clone(),
            y: y.clone(),
        },
        Command::Clifford { command } => match command {
            CliffordCommand::Mul { n, a, b } => Request::CliffordMul {
                a: parse_multivector(*n, a)?,
                b: parse_multivector(*n, b)?,
            },
            CliffordCommand::Norm { n, x } => Request::CliffordNorm {
                x: parse_multivector(*n, x)?,
            },
            CliffordCommand::Torus { c, a } => Request::CliffordTorus {
                c: c.clone(),
                a: a.clone(),
            },
            CliffordCommand::Check { n, samples } => Request::CliffordCheck {
                n: *n,
                samples: *samples,
                seed: cli.seed,
            },
        },
        Command::Store {
            command: StoreCommand::Validate { store },
        } => Request::StoreValidate {
            records: read_records(store)?,
        },
        Command::Store {
            command: StoreCommand::Ingest { store, input },
        } => Request::StoreIngest {
            existing: if store.exists() {
                read_records(store)?
            } else {
                Vec::new()
            },
            incoming: read_records(input)?,
        },
    })
}

fn append_records(path: &Path, records: &[StoreRecord]) -> CliResult<()> {
    let io = |e: std::io::Error| CliError::Io(format!("{}: {e}", path.display()));
    let mut f = fs::OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(io)?;
    for r in records {
        let line = serde_json::to_string(r).expect("records serialize");
        writeln!(f, "{line}").map_err(io)?;
    }
    Ok(())
}

fn configure_threads() -> CliResult<()> {
    let Ok(v) = std::env::var("GSPIN_KIT_THREADS") else {
        return Ok(());
    };
    let n: usize = v.parse().ok().filter(|&n| n > 0).ok_or_else(|| {
        CliError::Usage(format!(
            "GSPIN_KIT_THREADS must be a positive integer, got {v:?}"
        ))
    })?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| CliError::Usage(format!("thread pool: {e}")))
}

fn run(cli: &Cli) -> CliResult<i32> {
    configure_threads()?;
    let req = build_request(cli)?;
    let report = execute(&req)?;
    if let (
        Command::Store {
            command: StoreCommand::Ingest { store, .. },
        },
        Request::StoreIngest { incoming, .. },
    ) = (&cli.command, &req)
    {
        append_records(store, incoming)?;
    }
    let text = if cli.json {
        report.to_json() + "\n"
    } else {
        render_text(&report)
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    Ok(match report.result.disagreement() {
        Some(msg) => {
            eprintln!("internal criterion disagreement: {msg}");
            exit::DISAGREEMENT
        }
        None => exit::OK,
    })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let code = match run(&cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    };
    ExitCode::from(code as u8)
}
