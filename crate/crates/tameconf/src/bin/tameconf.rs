//! Command-line front end: every engine operation with JSON output and a
//! stable exit-code contract.
//!
//! Exit codes: 0 = success / check passed; 1 = definite negative
//! (obstructed, not a QR matrix, verification failure); 2 = bounded
//! search exhausted or status unknown; 3 = usage error.

use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::process::ExitCode;
use tameconf::corpus::{self, EntryOutcome, EntryStatus};
use tameconf::cycabelian::{
    realize_abelian_general, realize_matrix_odd, realize_split, reciprocity_check, DecompMatrix,
    ReciprocityInstance, SearchOutcome,
};
use tameconf::signmatrix::{self, SignMatrix};
use tameconf::smallgroup::{
    catalog, enumerate_configs, known_obstruction, perm_to_cycles, resolve_words, Subgroup,
    TameConfig, Verdict,
};

#[derive(Parser)]
#[command(
    name = "tameconf",
    about = "Decide, construct and verify minimal tame ramification/decomposition configurations over Q",
    disable_help_subcommand = true
)]
struct Cli {
    /// Emit a machine-readable JSON report on stdout.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sign-matrix operations: the QR criterion, prime search, census.
    Qr {
        #[command(subcommand)]
        op: QrOp,
    },
    /// Finite-group operations: enumeration, rank, obstruction screen.
    Group {
        #[command(subcommand)]
        op: GroupOp,
    },
    /// Abelian realization searches and the reciprocity check.
    Abelian {
        #[command(subcommand)]
        op: AbelianOp,
    },
    /// Corpus verification.
    Verify {
        #[command(subcommand)]
        op: VerifyOp,
    },
}

#[derive(Subcommand)]
enum QrOp {
    /// Decide whether a sign matrix is a QR matrix.
    Check {
        /// Matrix text: rows split by ';', entries by ',', e.g. "0,-1;-1,0".
        #[arg(long)]
        matrix: String,
    },
    /// Search for the least prime tuple realizing a sign matrix.
    Find {
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 10_000)]
        bound: u64,
    },
    /// Count permutation classes of sign matrices and QR matrices.
    Census {
        #[arg(long)]
        s: usize,
    },
}

#[derive(Args)]
struct ConfigArgs {
    /// Catalog group name (e.g. D8, C4xC2, PSL(2,7), or C2xC6).
    #[arg(long)]
    group: String,
    /// Inertia generator word, one per index (e.g. --t x1 --t y).
    #[arg(long = "t")]
    t: Vec<String>,
    /// Decomposition generator words, comma-separated per index
    /// (e.g. --z x1 --z "y,x1^2").
    #[arg(long = "z")]
    z: Vec<String>,
}

#[derive(Subcommand)]
enum GroupOp {
    /// List all configurations of a catalog group up to equivalence.
    Enumerate {
        #[arg(long)]
        group: String,
    },
    /// Minimal number of normal generators.
    Rank {
        #[arg(long)]
        group: String,
    },
    /// Apply every known obstruction predicate to a configuration.
    Obstruction(ConfigArgs),
}

#[derive(Subcommand)]
enum AbelianOp {
    /// Realize the split configuration on (Z/nZ)^s.
    RealizeSplit {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        s: usize,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Realize a decomposition matrix over Z/nZ (n odd).
    RealizeMatrix {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        matrix: String,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Realize an arbitrary configuration on an abelian group.
    RealizeConfig {
        #[command(flatten)]
        config: ConfigArgs,
        #[arg(long, default_value_t = 1_000_000)]
        bound: u64,
    },
    /// Check the unit-scaling reciprocity statement on one instance.
    Reciprocity {
        #[arg(long)]
        n: u64,
        #[arg(long)]
        p: u64,
        #[arg(long = "l")]
        ls: Vec<u64>,
        /// Optional explicit reference root of unity (selects the prime
        /// above p on the Kummer side).
        #[arg(long)]
        zeta: Option<u64>,
    },
}

#[derive(Subcommand)]
enum VerifyOp {
    /// Verify every corpus entry.
    Corpus {
        /// Path to a corpus file; the bundled corpus when absent.
        #[arg(long)]
        corpus: Option<std::path::PathBuf>,
        /// Worker threads (affects speed only, never output).
        #[arg(long, default_value_t = 1)]
        threads: usize,
    },
    /// Verify a single corpus entry by id.
    Entry {
        #[arg(long)]
        id: String,
        #[arg(long)]
        corpus: Option<std::path::PathBuf>,
    },
}

/// Exit-code contract of the CLI.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Outcome {
    Pass,
    Negative,
    Exhausted,
    Usage,
}

impl Outcome {
    fn code(self) -> u8 {
        match self {
            Outcome::Pass => 0,
            Outcome::Negative => 1,
            Outcome::Exhausted => 2,
            Outcome::Usage => 3,
        }
    }

    fn label(self) -> &'static str {
        match self {
            Outcome::Pass => "pass",
            Outcome::Negative => "negative",
            Outcome::Exhausted => "exhausted",
            Outcome::Usage => "usage-error",
        }
    }
}

struct Report {
    command: Vec<String>,
    outcome: Outcome,
    detail: serde_json::Value,
    human: String,
}

fn main() -> ExitCode {
    let started = std::time::Instant::now();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(err) => {
            // help/version requests are not usage errors
            use clap::error::ErrorKind;
            if matches!(err.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = err.print();
                return ExitCode::SUCCESS;
            }
            eprintln!("{err}");
            return ExitCode::from(3);
        }
    };
    let json = cli.json;
    let report = match run(cli.command) {
        Ok(report) => report,
        Err(e) => Report {
            command: vec![],
            outcome: Outcome::Usage,
            detail: json!({ "error": e.to_string() }),
            human: format!("error: {e}"),
        },
    };
    // write without panicking when stdout closes early (e.g. piped to head)
    use std::io::Write;
    let mut out = std::io::stdout();
    if json {
        let doc = json!({
            "command": report.command,
            "outcome": report.outcome.label(),
            "detail": report.detail,
            "timing_ms": started.elapsed().as_secs_f64() * 1000.0,
        });
        let _ = writeln!(
            out,
            "{}",
            serde_json::to_string_pretty(&doc).expect("serializable")
        );
    } else {
        let _ = writeln!(out, "{}", report.human);
    }
    ExitCode::from(report.outcome.code())
}

fn run(command: Command) -> tameconf::Result<Report> {
    match command {
        Command::Qr { op } => run_qr(op),
        Command::Group { op } => run_group(op),
        Command::Abelian { op } => run_abelian(op),
        Command::Verify { op } => run_verify(op),
    }
}

fn diagonal_text(diag: &[i64]) -> String {
    let inner: Vec<String> = diag.iter().map(|d| d.to_string()).collect();
    format!("({})", inner.join(","))
}

fn run_qr(op: QrOp) -> tameconf::Result<Report> {
    match op {
        QrOp::Check { matrix } => {
            let m = SignMatrix::parse(&matrix)?;
            let verdict = signmatrix::qr_test(&m);
            let reason = format!("diagonal of S^2 = {}", diagonal_text(&verdict.diagonal));
            let outcome = if verdict.is_qr {
                Outcome::Pass
            } else {
                Outcome::Negative
            };
            let human = if verdict.is_qr {
                format!("QR matrix (k = {}); {reason}", verdict.k.unwrap())
            } else {
                format!("not a QR matrix; {reason}")
            };
            Ok(Report {
                command: vec!["qr".into(), "check".into(), matrix],
                outcome,
                detail: json!({
                    "is_qr": verdict.is_qr,
                    "k": verdict.k,
                    "diagonal": verdict.diagonal,
                    "reason": reason,
                }),
                human,
            })
        }
        QrOp::Find { matrix, bound } => {
            let m = SignMatrix::parse(&matrix)?;
            match signmatrix::find_primes_for_sign_matrix(&m, bound) {
                Some(primes) => Ok(Report {
                    command: vec!["qr".into(), "find".into(), matrix, bound.to_string()],
                    outcome: Outcome::Pass,
                    detail: json!({ "primes": primes }),
                    human: format!(
                        "least realizing primes: {}",
                        primes
                            .iter()
                            .map(|p| p.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                }),
                None => Ok(Report {
                    command: vec!["qr".into(), "find".into(), matrix, bound.to_string()],
                    outcome: Outcome::Exhausted,
                    detail: json!({ "primes": null, "bound": bound }),
                    human: format!("no realizing tuple with primes <= {bound}"),
                }),
            }
        }
        QrOp::Census { s } => {
            let c = signmatrix::census(s)?;
            Ok(Report {
                command: vec!["qr".into(), "census".into(), s.to_string()],
                outcome: Outcome::Pass,
                detail: json!({
                    "s": s,
                    "sign_classes": c.sign_classes,
                    "qr_classes": c.qr_classes,
                }),
                human: format!(
                    "s = {s}: {} sign-matrix classes, {} QR classes",
                    c.sign_classes, c.qr_classes
                ),
            })
        }
    }
}

fn build_config(args: &ConfigArgs) -> tameconf::Result<TameConfig> {
    let cg = catalog(&args.group)?;
    let g = cg.group.as_ref();
    if args.t.len() != args.z.len() || args.t.is_empty() {
        return Err(tameconf::Error::invalid(
            "provide matching nonempty --t/--z lists",
        ));
    }
    let pairs = args
        .t
        .iter()
        .zip(&args.z)
        .map(|(tw, zw)| {
            let t = Subgroup::generated(g, &resolve_words(g, &cg.named, tw)?);
            let z = Subgroup::generated(g, &resolve_words(g, &cg.named, zw)?);
            Ok((t, z))
        })
        .collect::<tameconf::Result<Vec<_>>>()?;
    TameConfig::new(cg.group.clone(), pairs)
}

fn subgroup_json(cfg: &TameConfig, sub: &Subgroup) -> serde_json::Value {
    let cycles: Option<Vec<String>> = cfg.group().perms().map(|perms| {
        sub.elems()
            .iter()
            .map(|&x| perm_to_cycles(&perms[x as usize]))
            .collect()
    });
    json!({
        "order": sub.order(),
        "elements": sub.elems(),
        "cycles": cycles,
    })
}

fn config_json(cfg: &TameConfig) -> serde_json::Value {
    let pairs: Vec<serde_json::Value> = cfg
        .pairs()
        .iter()
        .map(|(t, z)| {
            json!({
                "t": subgroup_json(cfg, t),
                "z": subgroup_json(cfg, z),
            })
        })
        .collect();
    json!(pairs)
}

fn run_group(op: GroupOp) -> tameconf::Result<Report> {
    match op {
        GroupOp::Enumerate { group } => {
            let cg = catalog(&group)?;
            let configs = enumerate_configs(&cg.group)?;
            let listed: Vec<serde_json::Value> = configs.iter().map(config_json).collect();
            let human = {
                let mut lines = vec![format!(
                    "{} configurations for {group} up to equivalence:",
                    configs.len()
                )];
                for (i, c) in configs.iter().enumerate() {
                    let orders: Vec<String> = c
                        .pairs()
                        .iter()
                        .map(|(t, z)| format!("(|T|={}, |Z|={})", t.order(), z.order()))
                        .collect();
                    lines.push(format!("  {}: {}", i + 1, orders.join("  ")));
                }
                lines.join("\n")
            };
            Ok(Report {
                command: vec!["group".into(), "enumerate".into(), group],
                outcome: Outcome::Pass,
                detail: json!({ "count": configs.len(), "configs": listed }),
                human,
            })
        }
        GroupOp::Rank { group } => {
            let cg = catalog(&group)?;
            let rank = cg.group.rank();
            Ok(Report {
                command: vec!["group".into(), "rank".into(), group.clone()],
                outcome: Outcome::Pass,
                detail: json!({ "group": group, "order": cg.group.order(), "rank": rank }),
                human: format!("rank({group}) = {rank} (order {})", cg.group.order()),
            })
        }
        GroupOp::Obstruction(args) => {
            let cfg = build_config(&args)?;
            let verdict = known_obstruction(&cfg)?;
            let (outcome, human) = match &verdict {
                Verdict::Obstructed(reason) => {
                    (Outcome::Negative, format!("obstructed: {reason}"))
                }
                Verdict::SplitOnly => (
                    Outcome::Negative,
                    "obstructed: only split configurations are realizable for this group"
                        .to_string(),
                ),
                Verdict::NoKnownObstruction => {
                    (Outcome::Pass, "no known obstruction".to_string())
                }
            };
            Ok(Report {
                command: vec!["group".into(), "obstruction".into(), args.group.clone()],
                outcome,
                detail: json!({
                    "verdict": verdict,
                    "config": config_json(&cfg),
                }),
                human,
            })
        }
    }
}

fn search_report(command: Vec<String>, outcome: SearchOutcome, bound: u64) -> Report {
    match outcome.certificate {
        Some(cert) => {
            let human = format!(
                "realized with primes {} ({} candidates examined); certificate verified",
                cert.primes
                    .iter()
                    .map(|p| p.to_string())
                    .collect::<Vec<_>>()
                    .join(", "),
                outcome.examined
            );
            Report {
                command,
                outcome: Outcome::Pass,
                detail: json!({
                    "certificate": cert,
                    "examined": outcome.examined,
                }),
                human,
            }
        }
        None => Report {
            command,
            outcome: Outcome::Exhausted,
            detail: json!({
                "certificate": null,
                "examined": outcome.examined,
                "bound": bound,
            }),
            human: format!(
                "search exhausted at bound {bound} after {} candidates; no witness found (this is not a nonexistence proof)",
                outcome.examined
            ),
        },
    }
}

fn run_abelian(op: AbelianOp) -> tameconf::Result<Report> {
    match op {
        AbelianOp::RealizeSplit { n, s, bound } => {
            let out = realize_split(n, s, bound)?;
            Ok(search_report(
                vec![
                    "abelian".into(),
                    "realize-split".into(),
                    n.to_string(),
                    s.to_string(),
                    bound.to_string(),
                ],
                out,
                bound,
            ))
        }
        AbelianOp::RealizeMatrix { n, matrix, bound } => {
            let m = DecompMatrix::parse(n, &matrix)?;
            let out = realize_matrix_odd(&m, bound)?;
            Ok(search_report(
                vec![
                    "abelian".into(),
                    "realize-matrix".into(),
                    n.to_string(),
                    matrix,
                    bound.to_string(),
                ],
                out,
                bound,
            ))
        }
        AbelianOp::RealizeConfig { config, bound } => {
            let cfg = build_config(&config)?;
            let out = realize_abelian_general(&cfg, bound)?;
            Ok(search_report(
                vec![
                    "abelian".into(),
                    "realize-config".into(),
                    config.group.clone(),
                    bound.to_string(),
                ],
                out,
                bound,
            ))
        }
        AbelianOp::Reciprocity { n, p, ls, zeta } => {
            let inst = match zeta {
                Some(z) => ReciprocityInstance::with_reference_root(n, p, ls.clone(), z)?,
                None => ReciprocityInstance::new(n, p, ls.clone())?,
            };
            let holds = reciprocity_check(&inst)?;
            let a = inst.kummer_exponents()?;
            let b = inst.cyclotomic_indices()?;
            Ok(Report {
                command: vec![
                    "abelian".into(),
                    "reciprocity".into(),
                    n.to_string(),
                    p.to_string(),
                ],
                outcome: if holds {
                    Outcome::Pass
                } else {
                    Outcome::Negative
                },
                detail: json!({
                    "holds": holds,
                    "kummer_exponents": a,
                    "cyclotomic_indices": b,
                    "reference_root": inst.reference_root(),
                }),
                human: if holds {
                    format!("reciprocity holds: {a:?} and {b:?} agree up to a unit mod {n}")
                } else {
                    "reciprocity FAILED (this would contradict the theorem)".to_string()
                },
            })
        }
    }
}

fn load_corpus_arg(path: &Option<std::path::PathBuf>) -> tameconf::Result<corpus::Corpus> {
    match path {
        Some(p) => corpus::load_corpus(p),
        None => Ok(corpus::bundled_corpus()),
    }
}

fn run_verify(op: VerifyOp) -> tameconf::Result<Report> {
    match op {
        VerifyOp::Corpus {
            corpus: path,
            threads,
        } => {
            let corpus = load_corpus_arg(&path)?;
            let reports = corpus::verify_corpus(&corpus, threads)?;
            let all_ok = reports.iter().all(|r| r.acceptable());
            let lines: Vec<String> = reports
                .iter()
                .map(|r| {
                    let mark = match &r.outcome {
                        EntryOutcome::Pass => "pass".to_string(),
                        EntryOutcome::Unknown => "unknown".to_string(),
                        EntryOutcome::Fail(d) => format!("FAIL: {d}"),
                        EntryOutcome::IndexObstruction(p) => {
                            format!("INDEX OBSTRUCTION at {p}")
                        }
                    };
                    format!("  {:<10} {}", r.id, mark)
                })
                .collect();
            let passed = reports
                .iter()
                .filter(|r| matches!(r.outcome, EntryOutcome::Pass))
                .count();
            let unknown = reports
                .iter()
                .filter(|r| matches!(r.outcome, EntryOutcome::Unknown))
                .count();
            Ok(Report {
                command: vec!["verify".into(), "corpus".into()],
                outcome: if all_ok {
                    Outcome::Pass
                } else {
                    Outcome::Negative
                },
                detail: json!({
                    "entries": reports,
                    "passed": passed,
                    "unknown": unknown,
                    "total": reports.len(),
                }),
                human: format!(
                    "{}\n{} of {} entries verified, {} unknown",
                    lines.join("\n"),
                    passed,
                    reports.len(),
                    unknown
                ),
            })
        }
        VerifyOp::Entry { id, corpus: path } => {
            let corpus = load_corpus_arg(&path)?;
            let entry = corpus
                .entries
                .iter()
                .find(|e| e.id == id)
                .ok_or_else(|| tameconf::Error::invalid(format!("no entry with id {id:?}")))?;
            let report = corpus::verify_entry(entry)?;
            let outcome = match (&report.outcome, entry.status) {
                (EntryOutcome::Pass, _) => Outcome::Pass,
                (EntryOutcome::Unknown, EntryStatus::Unknown) => Outcome::Exhausted,
                _ => Outcome::Negative,
            };
            let human = match &report.outcome {
                EntryOutcome::Pass => format!("{id}: verified"),
                EntryOutcome::Unknown => format!("{id}: status unknown (nothing to verify)"),
                EntryOutcome::Fail(d) => format!("{id}: FAILED: {d}"),
                EntryOutcome::IndexObstruction(p) => {
                    format!("{id}: index obstruction at {p}")
                }
            };
            Ok(Report {
                command: vec!["verify".into(), "entry".into(), id],
                outcome,
                detail: json!({ "report": report }),
                human,
            })
        }
    }
}
