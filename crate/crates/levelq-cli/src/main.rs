//! Command-line front end: JSON in, JSON out, deterministic seeding.
//!
//! Every command writes a single JSON object to stdout — compact with
//! `--json`, pretty-printed otherwise — so reruns with identical
//! arguments are bit-identical. Exit codes: 0 success, 1 usage,
//! 2 validation, 3 internal inconsistency or specialization failure.

use std::path::{Path, PathBuf};
use std::sync::Arc;

use clap::{Parser, Subcommand};
use levelq::ff::Field;
use levelq::homology::{self, Cycle, CycleJson};
use levelq::macaulay;
use levelq::matroid;
use levelq::monalg::{self, MonomialAlgebra, MuStrategy};
use levelq::reduction::{self, ThetaSpec};
use levelq::scomplex::{self, SimplicialComplex};
use levelq::verify;
use levelq::Error;
use serde::Deserialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "levelq",
    version,
    about = "Level-quotient Hilbert functions, complementary vectors and \
             Gorenstein certificates of simplicial complexes"
)]
struct Cli {
    /// Field characteristic p (prime).
    #[arg(long = "char", global = true, default_value_t = 2)]
    characteristic: u64,
    /// Field extension degree m: the working field is GF(p^m).
    #[arg(long = "ext", global = true, default_value_t = 16)]
    extension: u32,
    /// Base seed; multi-trial runs use seed, seed+1, ...
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Number of seeds for rank certification.
    #[arg(long, global = true, default_value_t = 3)]
    trials: usize,
    /// Path to a theta JSON file (default: generic).
    #[arg(long, global = true)]
    theta: Option<PathBuf>,
    /// Emit compact JSON instead of the pretty rendering.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// f- and h-vector of a complex.
    Hvec { complex: String },
    /// Reduced Betti numbers over GF(p).
    Betti { complex: String },
    /// Certified h̄-, ḡ- and c̄-vectors (entrywise max over seeds).
    Hbar { complex: String },
    /// Gorenstein-quotient Hilbert function of a functional.
    Gorenstein {
        complex: String,
        /// Cycle JSON path; defaults to the good cycle found by search.
        #[arg(long)]
        cycle: Option<PathBuf>,
    },
    /// Rank of the Lefschetz form at degree q.
    Lefschetz {
        complex: String,
        #[arg(long)]
        q: usize,
        /// Power of the linear form; defaults to d - 2q.
        #[arg(long)]
        e: Option<usize>,
        #[arg(long)]
        cycle: Option<PathBuf>,
    },
    /// Search for a good cycle and print its certificate.
    Findmu { complex: String },
    /// M-vector check.
    Mvec(SeqArgs),
    /// Sum-of-M-vectors check.
    Summvec(SeqArgs),
    /// Module bound check (needs --s).
    Modbound {
        #[command(flatten)]
        seq: SeqArgs,
        /// Number of module generators.
        #[arg(long)]
        s: Option<u64>,
    },
    /// Ratio-chain check.
    Atchain(SeqArgs),
    /// Log-concavity and ultra log-concavity (needs --d).
    Concavity {
        #[command(flatten)]
        seq: SeqArgs,
        #[arg(long)]
        d: Option<u32>,
    },
    /// Build a complex with prescribed complementary vector.
    Construct {
        /// Target vector, comma separated.
        #[arg(long, value_delimiter = ',')]
        a: Vec<i64>,
        /// Polytope boundary Q: generator name or complex JSON path.
        #[arg(long)]
        q: String,
    },
    /// Monomial-algebra operations.
    Monalg {
        ideal: PathBuf,
        #[arg(long, default_value = "hilbert")]
        op: MonalgOp,
        /// Truncation degree for --op truncate.
        #[arg(long)]
        m: Option<usize>,
        /// Search strategy for --op gorenstein-max.
        #[arg(long, default_value = "exhaustive")]
        strategy: Strategy,
        /// Random functionals to try with --strategy random.
        #[arg(long, default_value_t = 128)]
        mu_trials: usize,
    },
    /// Scan pure O-sequences for complementary-vector violations.
    PureScan {
        #[arg(long)]
        nvars: usize,
        #[arg(long)]
        maxdeg: usize,
    },
    /// Exhaustive matroid search for a target h-vector.
    MatroidSearch {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        r: usize,
        #[arg(long, value_delimiter = ',')]
        target: Vec<i64>,
    },
    /// Run the bundled verification suite.
    VerifyPaper,
}

#[derive(clap::Args)]
struct SeqArgs {
    /// Sequence JSON path ({"sequence": [...], ...}).
    file: Option<PathBuf>,
    /// Inline sequence, comma separated.
    #[arg(long, value_delimiter = ',')]
    seq: Option<Vec<i64>>,
}

#[derive(Clone, clap::ValueEnum)]
enum MonalgOp {
    Hilbert,
    Socle,
    Truncate,
    Extension,
    GorensteinMax,
}

#[derive(Clone, clap::ValueEnum)]
enum Strategy {
    Exhaustive,
    Random,
}

/// Sequence file format: `{"sequence": [...], "check": "...", "s": 3, "d": 5}`.
#[derive(Deserialize)]
struct SeqFile {
    sequence: Vec<i64>,
    #[serde(default)]
    #[allow(dead_code)]
    check: Option<String>,
    #[serde(default)]
    s: Option<u64>,
    #[serde(default)]
    d: Option<u32>,
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    match run(cli) {
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e}");
            std::process::exit(match e {
                Error::Validation(_) => 2,
                Error::Inconsistency(_) | Error::Specialization(_) => 3,
            });
        }
    }
}

fn read_file(path: &Path) -> Result<String, Error> {
    std::fs::read_to_string(path)
        .map_err(|e| Error::validation(format!("cannot read {}: {e}", path.display())))
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str, what: &str) -> Result<T, Error> {
    serde_json::from_str(text).map_err(|e| Error::validation(format!("bad {what} JSON: {e}")))
}

/// A complex argument is either `gen:<name>` or a JSON file path.
fn load_complex(arg: &str) -> Result<SimplicialComplex, Error> {
    if let Some(name) = arg.strip_prefix("gen:") {
        return scomplex::generate(&scomplex::parse_generator(name)?);
    }
    parse_json(&read_file(Path::new(arg))?, "complex")
}

fn load_theta(path: &Option<PathBuf>) -> Result<ThetaSpec, Error> {
    match path {
        None => Ok(ThetaSpec::Generic),
        Some(p) => parse_json(&read_file(p)?, "theta"),
    }
}

fn load_seq(args: &SeqArgs) -> Result<(Vec<i64>, Option<u64>, Option<u32>), Error> {
    match (&args.seq, &args.file) {
        (Some(seq), _) => Ok((seq.clone(), None, None)),
        (None, Some(path)) => {
            let f: SeqFile = parse_json(&read_file(path)?, "sequence")?;
            Ok((f.sequence, f.s, f.d))
        }
        (None, None) => Err(Error::validation("supply a sequence file or --seq")),
    }
}

fn emit(compact: bool, value: &Value) {
    if compact {
        println!("{value}");
    } else {
        println!(
            "{}",
            serde_json::to_string_pretty(value).expect("serializable")
        );
    }
}

fn to_value<T: serde::Serialize>(v: &T) -> Value {
    serde_json::to_value(v).expect("serializable")
}

fn run(cli: Cli) -> Result<i32, Error> {
    let field = || -> Result<Arc<Field>, Error> {
        Ok(Arc::new(Field::new(cli.characteristic, cli.extension)?))
    };
    match &cli.command {
        Command::Hvec { complex } => {
            let c = load_complex(complex)?;
            let (f, h) = c.f_and_h();
            emit(cli.json, &json!({ "f": f.entries(), "h": h.entries() }));
        }
        Command::Betti { complex } => {
            let c = load_complex(complex)?;
            let b = homology::betti(&c, cli.characteristic)?;
            emit(
                cli.json,
                &json!({ "p": cli.characteristic, "betti": b.entries() }),
            );
        }
        Command::Hbar { complex } => {
            let c = load_complex(complex)?;
            let theta = load_theta(&cli.theta)?;
            let rep = reduction::hbar_certified(&c, field()?, &theta, cli.seed, cli.trials)?;
            emit(cli.json, &to_value(&rep));
        }
        Command::Gorenstein { complex, cycle } => {
            let c = load_complex(complex)?;
            let theta = load_theta(&cli.theta)?;
            let model = reduction::build_model(&c, field()?, &theta, cli.seed)?;
            let phi = match cycle {
                Some(path) => {
                    let j: CycleJson = parse_json(&read_file(path)?, "cycle")?;
                    let cy = Cycle::from_json(&c, &j)?;
                    reduction::cycle_functional(&model, &cy)?
                }
                None => {
                    let cycles = homology::top_cycle_basis(&c, cli.characteristic)?;
                    reduction::find_good_cycle(&model, &cycles, 0)?.functional
                }
            };
            let g = reduction::gorenstein_hilbert(&model, &phi)?;
            emit(
                cli.json,
                &json!({ "gorenstein": g.entries(), "seed": cli.seed }),
            );
        }
        Command::Lefschetz {
            complex,
            q,
            e,
            cycle,
        } => {
            let c = load_complex(complex)?;
            let theta = load_theta(&cli.theta)?;
            let model = reduction::build_model(&c, field()?, &theta, cli.seed)?;
            let d = model.d();
            if 2 * q > d && e.is_none() {
                return Err(Error::validation(format!("q={q} exceeds d/2 = {}/2", d)));
            }
            let e = e.unwrap_or(d - 2 * q);
            let phi = match cycle {
                Some(path) => {
                    let j: CycleJson = parse_json(&read_file(path)?, "cycle")?;
                    let cy = Cycle::from_json(&c, &j)?;
                    reduction::cycle_functional(&model, &cy)?
                }
                None => {
                    let cycles = homology::top_cycle_basis(&c, cli.characteristic)?;
                    reduction::find_good_cycle(&model, &cycles, 0)?.functional
                }
            };
            let rank = reduction::lefschetz_rank(&model, &phi, *q, e)?;
            emit(
                cli.json,
                &json!({ "q": q, "e": e, "rank": rank, "seed": cli.seed }),
            );
        }
        Command::Findmu { complex } => {
            let c = load_complex(complex)?;
            let theta = load_theta(&cli.theta)?;
            let explicit = matches!(theta, ThetaSpec::Explicit { .. });
            let model = reduction::build_model(&c, field()?, &theta, cli.seed)?;
            let cycles = homology::top_cycle_basis(&c, cli.characteristic)?;
            match reduction::find_good_cycle(&model, &cycles, 0) {
                Ok(good) => emit(cli.json, &to_value(&good.certificate)),
                // With an explicit (non-generic) theta an unreachable
                // target is an input property, not an internal failure.
                Err(Error::Specialization(msg)) if explicit => {
                    return Err(Error::Validation(msg));
                }
                Err(e) => return Err(e),
            }
        }
        Command::Mvec(args) => {
            let (seq, _, _) = load_seq(args)?;
            let (ok, violation) = macaulay::is_m_vector(&seq);
            emit(
                cli.json,
                &json!({ "check": "mvec", "sequence": seq, "ok": ok, "violation": violation }),
            );
        }
        Command::Summvec(args) => {
            let (seq, _, _) = load_seq(args)?;
            let ok = macaulay::is_sum_of_m_vectors(&seq);
            emit(
                cli.json,
                &json!({ "check": "summvec", "sequence": seq, "ok": ok }),
            );
        }
        Command::Modbound { seq, s } => {
            let (sequence, file_s, _) = load_seq(seq)?;
            let s = s
                .or(file_s)
                .ok_or_else(|| Error::validation("modbound needs --s"))?;
            if s == 0 {
                return Err(Error::validation("--s must be positive"));
            }
            let (ok, violation) = macaulay::module_bound_ok(&sequence, s);
            emit(
                cli.json,
                &json!({ "check": "modbound", "s": s, "sequence": sequence, "ok": ok,
                         "violation": violation }),
            );
        }
        Command::Atchain(args) => {
            let (seq, _, _) = load_seq(args)?;
            let (ok, violation) = macaulay::at_chain_check(&seq)?;
            emit(
                cli.json,
                &json!({ "check": "atchain", "sequence": seq, "ok": ok, "violation": violation }),
            );
        }
        Command::Concavity { seq, d } => {
            let (sequence, _, file_d) = load_seq(seq)?;
            let d = d
                .or(file_d)
                .unwrap_or(sequence.len().saturating_sub(1) as u32);
            let rep = macaulay::concavity_checks(&sequence, d);
            emit(
                cli.json,
                &json!({ "check": "concavity", "d": d, "sequence": sequence,
                         "log_concave": rep.log_concave,
                         "ultra_log_concave": rep.ultra_log_concave }),
            );
        }
        Command::Construct { a, q } => {
            let q_complex = load_complex(q)?;
            let built = scomplex::construct_from_sum_of_m(a, &q_complex)?;
            emit(cli.json, &to_value(&built));
        }
        Command::Monalg {
            ideal,
            op,
            m,
            strategy,
            mu_trials,
        } => {
            let alg: MonomialAlgebra = parse_json(&read_file(ideal)?, "ideal")?;
            match op {
                MonalgOp::Hilbert => {
                    let h = alg.hilbert()?;
                    emit(cli.json, &json!({ "hilbert": h.entries() }));
                }
                MonalgOp::Socle => {
                    let rep = alg.socle_level()?;
                    emit(
                        cli.json,
                        &json!({ "socle": rep.socle, "is_level": rep.is_level,
                                 "top_degree": rep.top_degree }),
                    );
                }
                MonalgOp::Truncate => {
                    let m = m.ok_or_else(|| Error::validation("truncate needs --m"))?;
                    let t = alg.truncate(m)?;
                    emit(cli.json, &to_value(&t));
                }
                MonalgOp::Extension => {
                    let h = alg.hilbert()?;
                    let ext = monalg::trivial_extension_hilbert(h.entries())?;
                    emit(
                        cli.json,
                        &json!({ "hilbert": h.entries(), "extension": ext.entries() }),
                    );
                }
                MonalgOp::GorensteinMax => {
                    let f = field()?;
                    let strat = match strategy {
                        Strategy::Exhaustive => MuStrategy::Exhaustive,
                        Strategy::Random => MuStrategy::Random {
                            trials: *mu_trials,
                            seed: cli.seed,
                        },
                    };
                    let rep = monalg::gorenstein_quotient_max(&alg, &f, strat)?;
                    emit(
                        cli.json,
                        &json!({ "max_ranks": rep.per_degree_max,
                                 "structural_bound": rep.structural_bound,
                                 "tested": rep.tested }),
                    );
                }
            }
        }
        Command::PureScan { nvars, maxdeg } => {
            let rep = monalg::conjecture_pure_scan(*nvars, *maxdeg)?;
            emit(cli.json, &to_value(&rep));
        }
        Command::MatroidSearch { n, r, target } => {
            let found = matroid::search_h(*n, *r, target)?;
            match found {
                Some(m) => {
                    let h = m.independence_h()?;
                    emit(
                        cli.json,
                        &json!({ "found": true, "matroid": to_value(&m), "h": h.entries(),
                                 "coloop_free": m.is_coloop_free() }),
                    );
                }
                None => emit(cli.json, &json!({ "found": false })),
            }
        }
        Command::VerifyPaper => {
            let reports = verify::run_all(cli.seed);
            let all_passed = reports.iter().all(|r| r.passed);
            let coverage = verify::module_coverage(&reports);
            let summary: Vec<String> = reports
                .iter()
                .map(|r| {
                    format!(
                        "criterion {:2} ({}): {} ({} ms, budget {} ms)",
                        r.id,
                        r.name,
                        if r.passed { "PASS" } else { "FAIL" },
                        r.millis,
                        r.budget_millis
                    )
                })
                .collect();
            let coverage_json: Vec<Value> = coverage
                .iter()
                .map(|(m, t)| json!({ "module": m, "covered": t }))
                .collect();
            emit(
                cli.json,
                &json!({ "all_passed": all_passed, "summary": summary,
                         "coverage": coverage_json, "criteria": to_value(&reports) }),
            );
            if !all_passed {
                return Ok(3);
            }
        }
    }
    Ok(0)
}
