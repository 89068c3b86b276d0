//! `garside` — word problem, right-reversing, lcms, and Garside families
//! for right-complemented monoid presentations.
//!
//! Exit codes: 0 for any definite answer (including "no common multiple"
//! and "not complete"), 2 for unknown/exhausted/diverged outcomes, 1 for
//! input errors.

mod output;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use garside::{
    certify, compute_minimal_garside, export_trace_dot, family_table, parse_presentation,
    reverse, reverse_traced, CertificateStatus, ClassifierLimits, ClassifierSession,
    ClosureLimits, CubeStatus, GarsideError, PairClass, Presentation, Preset,
    ReversingOutcome, RightComplementTable, Word, WordProblem,
};

const EXIT_OK: u8 = 0;
const EXIT_INPUT: u8 = 1;
const EXIT_UNKNOWN: u8 = 2;

/// Environment variable supplying the default reversing step budget.
const BUDGET_ENV: &str = "GARSIDE_BUDGET";
const DEFAULT_BUDGET: u64 = 100_000;

#[derive(Parser)]
#[command(
    name = "garside",
    about = "Right-reversing, lcm computation, and minimal Garside families",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Source {
    /// Built-in presentation (A2, A3, B3, A2t, A3t, A4t, B3t, C2t, C3t, G2t, D4t)
    #[arg(long, value_name = "NAME", conflicts_with = "file")]
    preset: Option<String>,
    /// Presentation file (generators: + relations:/coxeter: sections)
    #[arg(long, value_name = "PATH")]
    file: Option<PathBuf>,
}

impl Source {
    fn load(&self) -> Result<Presentation, String> {
        match (&self.preset, &self.file) {
            (Some(name), None) => {
                let preset = Preset::parse(name).map_err(|e| e.to_string())?;
                Ok(preset.presentation())
            }
            (None, Some(path)) => {
                let text = fs::read_to_string(path)
                    .map_err(|e| format!("{}: {e}", path.display()))?;
                parse_presentation(&text).map_err(|e| format!("{}: {e}", path.display()))
            }
            _ => Err("exactly one of --preset or --file is required".to_string()),
        }
    }
}

#[derive(Args)]
struct ClassifierArgs {
    /// Cap on classifier frames before giving up
    #[arg(long, value_name = "N")]
    max_pairs: Option<u64>,
    /// Cap on classifier recursion depth
    #[arg(long, value_name = "N")]
    max_depth: Option<usize>,
}

impl ClassifierArgs {
    fn limits(&self) -> ClassifierLimits {
        let mut limits = ClassifierLimits::default();
        if self.max_pairs.is_some() {
            limits.max_pairs = self.max_pairs;
        }
        if let Some(depth) = self.max_depth {
            limits.max_depth = depth;
        }
        limits
    }
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether two words represent the same element
    Eq {
        #[command(flatten)]
        source: Source,
        u: String,
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// List the left- or right-divisors of a word
    Divisors {
        #[command(flatten)]
        source: Source,
        word: String,
        /// "right" (default) or "left"
        #[arg(long, default_value = "right")]
        side: String,
        #[arg(long)]
        json: bool,
    },
    /// Compute the left-gcd of two words
    Gcd {
        #[command(flatten)]
        source: Source,
        u: String,
        v: String,
        #[arg(long)]
        json: bool,
    },
    /// Brute-force shortest common right-multiple search (independent of
    /// reversing)
    OracleLcm {
        #[command(flatten)]
        source: Source,
        u: String,
        v: String,
        /// Length bound; defaults to 2(|u|+|v|)
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
        #[arg(long)]
        json: bool,
    },
    /// Right-reverse a signed word (apostrophe marks an inverse letter)
    Reverse {
        #[command(flatten)]
        source: Source,
        word: String,
        /// Step budget (default from GARSIDE_BUDGET or 100000)
        #[arg(long, value_name = "N")]
        budget: Option<u64>,
        /// Include the step-by-step trace
        #[arg(long)]
        trace: bool,
        /// Write the reversing grid as DOT to this path
        #[arg(long, value_name = "FILE")]
        dot: Option<PathBuf>,
        #[arg(long)]
        json: bool,
    },
    /// Classify a pair: complement, eventually periodic, or failing
    Classify {
        #[command(flatten)]
        source: Source,
        u: String,
        v: String,
        #[command(flatten)]
        classifier: ClassifierArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compute the right-lcm of two words, or report that none exists
    Lcm {
        #[command(flatten)]
        source: Source,
        u: String,
        v: String,
        #[command(flatten)]
        classifier: ClassifierArgs,
        #[arg(long)]
        json: bool,
    },
    /// Certify completeness of right-reversing via the θ-cube condition
    Certify {
        #[command(flatten)]
        source: Source,
        #[command(flatten)]
        classifier: ClassifierArgs,
        #[arg(long)]
        json: bool,
    },
    /// Compute the minimal Garside family
    Garside {
        #[command(flatten)]
        source: Source,
        /// Cap on element word length
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
        /// Cap on family size
        #[arg(long, value_name = "N")]
        max_family: Option<usize>,
        #[command(flatten)]
        classifier: ClassifierArgs,
        #[arg(long)]
        json: bool,
    },
    /// Tabulate (|E|, |F|) over several presets
    Table {
        /// Preset names; defaults to A2t A3t B3t C2t C3t G2t
        presets: Vec<String>,
        #[arg(long, value_name = "N")]
        max_len: Option<usize>,
        #[arg(long, value_name = "N")]
        max_family: Option<usize>,
        #[command(flatten)]
        classifier: ClassifierArgs,
        #[arg(long)]
        json: bool,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    ExitCode::from(EXIT_OK)
                }
                _ => {
                    eprint!("{e}");
                    ExitCode::from(EXIT_INPUT)
                }
            };
        }
    };
    match dispatch(cli.command) {
        Ok(code) => ExitCode::from(code),
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(EXIT_INPUT)
        }
    }
}

fn parse_word(p: &Presentation, s: &str) -> Result<Word, String> {
    p.alphabet().parse_word(s).map_err(|e| e.to_string())
}

fn emit<T: serde::Serialize>(doc: &T) {
    println!("{}", serde_json::to_string(doc).expect("documents serialize"));
}

fn budget_or_env(budget: Option<u64>) -> u64 {
    budget
        .or_else(|| std::env::var(BUDGET_ENV).ok().and_then(|v| v.parse().ok()))
        .unwrap_or(DEFAULT_BUDGET)
}

fn closure_limits(
    max_len: Option<usize>,
    max_family: Option<usize>,
    classifier: &ClassifierArgs,
) -> ClosureLimits {
    let mut limits = ClosureLimits {
        classifier: classifier.limits(),
        ..ClosureLimits::default()
    };
    if let Some(n) = max_len {
        limits.max_element_length = n;
    }
    if let Some(n) = max_family {
        limits.max_family_size = n;
    }
    limits
}

fn dispatch(command: Command) -> Result<u8, String> {
    match command {
        Command::Eq { source, u, v, json } => {
            let p = source.load()?;
            let mut wp = WordProblem::new(&p).map_err(|e| e.to_string())?;
            let (wu, wv) = (parse_word(&p, &u)?, parse_word(&p, &v)?);
            let equal = wp.words_equal(&wu, &wv);
            if json {
                emit(&output::EqDoc {
                    command: "eq".into(),
                    u: p.alphabet().render_word(&wu),
                    v: p.alphabet().render_word(&wv),
                    equal,
                });
            } else {
                println!("{}", if equal { "equal" } else { "not equal" });
            }
            Ok(EXIT_OK)
        }
        Command::Divisors {
            source,
            word,
            side,
            json,
        } => {
            let p = source.load()?;
            let mut wp = WordProblem::new(&p).map_err(|e| e.to_string())?;
            let w = parse_word(&p, &word)?;
            let set = match side.as_str() {
                "right" => wp.right_divisors(&w),
                "left" => wp.left_divisors(&w),
                other => return Err(format!("unknown side `{other}`; use left or right")),
            };
            let rendered: Vec<String> =
                set.iter().map(|d| p.alphabet().render_word(d)).collect();
            if json {
                emit(&output::DivisorsDoc {
                    command: "divisors".into(),
                    word: p.alphabet().render_word(&w),
                    side,
                    count: rendered.len(),
                    divisors: rendered,
                });
            } else {
                println!("{} {side}-divisors:", rendered.len());
                for d in rendered {
                    println!("{d}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Gcd { source, u, v, json } => {
            let p = source.load()?;
            let mut wp = WordProblem::new(&p).map_err(|e| e.to_string())?;
            let (wu, wv) = (parse_word(&p, &u)?, parse_word(&p, &v)?);
            let gcd = wp.left_gcd(&wu, &wv).map_err(|e| e.to_string())?;
            if json {
                emit(&output::GcdDoc {
                    command: "gcd".into(),
                    u: p.alphabet().render_word(&wu),
                    v: p.alphabet().render_word(&wv),
                    gcd: p.alphabet().render_word(&gcd),
                });
            } else {
                println!("{}", p.alphabet().render_word(&gcd));
            }
            Ok(EXIT_OK)
        }
        Command::OracleLcm {
            source,
            u,
            v,
            max_len,
            json,
        } => {
            let p = source.load()?;
            let mut wp = WordProblem::new(&p).map_err(|e| e.to_string())?;
            let (wu, wv) = (parse_word(&p, &u)?, parse_word(&p, &v)?);
            let bound = max_len.unwrap_or(2 * (wu.len() + wv.len()));
            let result = wp.oracle_common_multiple(&wu, &wv, bound);
            if json {
                emit(&output::OracleLcmDoc {
                    command: "oracle-lcm".into(),
                    u: p.alphabet().render_word(&wu),
                    v: p.alphabet().render_word(&wv),
                    max_len: bound,
                    multiple: result.as_ref().map(|m| p.alphabet().render_word(m)),
                });
            } else {
                match &result {
                    Some(m) => println!("{}", p.alphabet().render_word(m)),
                    None => println!("no common multiple of length <= {bound}"),
                }
            }
            Ok(EXIT_OK)
        }
        Command::Reverse {
            source,
            word,
            budget,
            trace: want_trace,
            dot,
            json,
        } => {
            let p = source.load()?;
            let table = RightComplementTable::derive(&p).map_err(|e| e.to_string())?;
            let alpha = p.alphabet();
            let w = alpha.parse_signed(&word).map_err(|e| e.to_string())?;
            let budget = Some(budget_or_env(budget));
            let (outcome, trace) = if want_trace || dot.is_some() {
                let (outcome, trace) = reverse_traced(&w, &table, budget);
                (outcome, Some(trace))
            } else {
                (reverse(&w, &table, budget), None)
            };
            if let (Some(path), Some(trace)) = (&dot, &trace) {
                fs::write(path, export_trace_dot(trace, alpha))
                    .map_err(|e| format!("{}: {e}", path.display()))?;
            }
            let trace_docs = trace.filter(|_| want_trace).map(|t| {
                t.steps
                    .iter()
                    .map(|s| output::TraceStepDoc {
                        position: s.position,
                        s: alpha.name(s.s).to_string(),
                        t: alpha.name(s.t).to_string(),
                        replacement: alpha.render_signed(&s.replacement),
                    })
                    .collect::<Vec<_>>()
            });
            let (label, code) = match &outcome {
                ReversingOutcome::Irreducible { .. } => ("irreducible", EXIT_OK),
                ReversingOutcome::Stuck { .. } => ("stuck", EXIT_OK),
                ReversingOutcome::Exhausted { .. } => ("exhausted", EXIT_UNKNOWN),
            };
            let split = match &outcome {
                ReversingOutcome::Irreducible { word, .. } => word.as_positive_negative(),
                _ => None,
            };
            if json {
                emit(&output::ReverseDoc {
                    command: "reverse".into(),
                    input: alpha.render_signed(&w),
                    outcome: label.to_string(),
                    word: alpha.render_signed(outcome.word()),
                    steps: outcome.steps(),
                    positive: split.as_ref().map(|(p_, _)| alpha.render_word(p_)),
                    negative: split.as_ref().map(|(_, n)| alpha.render_word(n)),
                    stuck: match &outcome {
                        ReversingOutcome::Stuck { s, t, position, .. } => Some(output::StuckDoc {
                            s: alpha.name(*s).to_string(),
                            t: alpha.name(*t).to_string(),
                            position: *position,
                        }),
                        _ => None,
                    },
                    trace: trace_docs,
                });
            } else {
                if let Some(steps) = &trace_docs {
                    for (i, s) in steps.iter().enumerate() {
                        println!(
                            "step {}: ({}; {}) at {} -> {}",
                            i + 1,
                            s.s,
                            s.t,
                            s.position,
                            s.replacement
                        );
                    }
                }
                println!(
                    "{label} after {} steps: {}",
                    outcome.steps(),
                    alpha.render_signed(outcome.word())
                );
                if let Some((pos, neg)) = &split {
                    println!(
                        "complements: positive {} negative {}",
                        alpha.render_word(pos),
                        alpha.render_word(neg)
                    );
                }
            }
            Ok(code)
        }
        Command::Classify {
            source,
            u,
            v,
            classifier,
            json,
        } => {
            let p = source.load()?;
            let table = RightComplementTable::derive(&p).map_err(|e| e.to_string())?;
            let alpha = p.alphabet();
            let (wu, wv) = (parse_word(&p, &u)?, parse_word(&p, &v)?);
            let mut session = ClassifierSession::new(&table, classifier.limits());
            let class = session.classify(&wu, &wv);
            let stats = session.stats();
            let (verdict, code) = match &class {
                PairClass::Complement { .. } => ("complement", EXIT_OK),
                PairClass::EventuallyPeriodic { .. } => ("eventually-periodic", EXIT_OK),
                PairClass::Failing { .. } => ("failing", EXIT_OK),
                PairClass::Exhausted => ("exhausted", EXIT_UNKNOWN),
            };
            if json {
                emit(&output::ClassifyDoc {
                    command: "classify".into(),
                    u: alpha.render_word(&wu),
                    v: alpha.render_word(&wv),
                    verdict: verdict.to_string(),
                    u_prime: match &class {
                        PairClass::Complement { u_prime, .. } => {
                            Some(alpha.render_word(u_prime))
                        }
                        _ => None,
                    },
                    v_prime: match &class {
                        PairClass::Complement { v_prime, .. } => {
                            Some(alpha.render_word(v_prime))
                        }
                        _ => None,
                    },
                    stuck: match &class {
                        PairClass::Failing { s, t } => {
                            Some((alpha.name(*s).to_string(), alpha.name(*t).to_string()))
                        }
                        _ => None,
                    },
                    periodic: match &class {
                        PairClass::EventuallyPeriodic {
                            periodic,
                            cycle_steps,
                        } => Some(output::PeriodicDoc {
                            u: alpha.render_word(&periodic.u),
                            v: alpha.render_word(&periodic.v),
                            cycle_steps: *cycle_steps,
                        }),
                        _ => None,
                    },
                    pairs_visited: stats.pairs_visited,
                });
            } else {
                match &class {
                    PairClass::Complement { u_prime, v_prime } => println!(
                        "complement: u' = {}, v' = {}",
                        alpha.render_word(u_prime),
                        alpha.render_word(v_prime)
                    ),
                    PairClass::EventuallyPeriodic {
                        periodic,
                        cycle_steps,
                    } => println!(
                        "eventually-periodic: witness ({}, {}) recurring after {} steps",
                        alpha.render_word(&periodic.u),
                        alpha.render_word(&periodic.v),
                        cycle_steps
                    ),
                    PairClass::Failing { s, t } => {
                        println!("failing: theta({}, {}) undefined", alpha.name(*s), alpha.name(*t))
                    }
                    PairClass::Exhausted => println!("exhausted: no answer within limits"),
                }
            }
            Ok(code)
        }
        Command::Lcm {
            source,
            u,
            v,
            classifier,
            json,
        } => {
            let p = source.load()?;
            let table = RightComplementTable::derive(&p).map_err(|e| e.to_string())?;
            let alpha = p.alphabet();
            let (wu, wv) = (parse_word(&p, &u)?, parse_word(&p, &v)?);
            let limits = classifier.limits();
            let certified = certify(&p, limits)
                .map_err(|e| e.to_string())?
                .is_complete();
            let mut session = ClassifierSession::new(&table, limits);
            let class = session.classify(&wu, &wv);
            let (status, lcm, code) = match &class {
                PairClass::Complement { v_prime, .. } => {
                    let m = wu.concat(v_prime);
                    if certified {
                        ("lcm", Some(m), EXIT_OK)
                    } else {
                        // A common multiple for sure; minimality is
                        // conditional on completeness.
                        ("conditional-lcm", Some(m), EXIT_OK)
                    }
                }
                PairClass::Exhausted => ("unknown", None, EXIT_UNKNOWN),
                _ if certified => ("no-common-multiple", None, EXIT_OK),
                _ => ("unknown", None, EXIT_UNKNOWN),
            };
            if json {
                emit(&output::LcmDoc {
                    command: "lcm".into(),
                    u: alpha.render_word(&wu),
                    v: alpha.render_word(&wv),
                    status: status.to_string(),
                    lcm: lcm.as_ref().map(|m| alpha.render_word(m)),
                    certified_complete: certified,
                    periodic: match &class {
                        PairClass::EventuallyPeriodic {
                            periodic,
                            cycle_steps,
                        } => Some(output::PeriodicDoc {
                            u: alpha.render_word(&periodic.u),
                            v: alpha.render_word(&periodic.v),
                            cycle_steps: *cycle_steps,
                        }),
                        _ => None,
                    },
                    stuck: match &class {
                        PairClass::Failing { s, t } => {
                            Some((alpha.name(*s).to_string(), alpha.name(*t).to_string()))
                        }
                        _ => None,
                    },
                });
            } else {
                match (&lcm, status) {
                    (Some(m), "lcm") => println!("{}", alpha.render_word(m)),
                    (Some(m), _) => println!(
                        "{} (conditional: presentation not certified complete)",
                        alpha.render_word(m)
                    ),
                    (None, "no-common-multiple") => println!("no common right-multiple"),
                    _ => println!("unknown"),
                }
            }
            Ok(code)
        }
        Command::Certify {
            source,
            classifier,
            json,
        } => {
            let p = source.load()?;
            let cert = certify(&p, classifier.limits()).map_err(|e| e.to_string())?;
            let alpha = p.alphabet();
            let counts = |status: CubeStatus| {
                cert.reports.iter().filter(|r| r.status == status).count()
            };
            let (status, failing, code) = match &cert.status {
                CertificateStatus::Complete => ("complete", None, EXIT_OK),
                CertificateStatus::NotCube(u, v, w) => (
                    "not-cube",
                    Some((
                        alpha.name(*u).to_string(),
                        alpha.name(*v).to_string(),
                        alpha.name(*w).to_string(),
                    )),
                    EXIT_OK,
                ),
                CertificateStatus::NotNoetherianCertified => {
                    ("not-noetherian-certified", None, EXIT_OK)
                }
                CertificateStatus::Unknown => ("unknown", None, EXIT_UNKNOWN),
            };
            if json {
                emit(&output::CertifyDoc {
                    command: "certify".into(),
                    status: status.to_string(),
                    failing_triple: failing,
                    triples_checked: cert.reports.len(),
                    holds_defined: counts(CubeStatus::HoldsDefined),
                    holds_undefined: counts(CubeStatus::HoldsUndefined),
                    fails: counts(CubeStatus::Fails),
                    unknown: counts(CubeStatus::Unknown),
                });
            } else {
                println!(
                    "{status}: {} triples ({} hold defined, {} hold undefined, {} fail, {} unknown)",
                    cert.reports.len(),
                    counts(CubeStatus::HoldsDefined),
                    counts(CubeStatus::HoldsUndefined),
                    counts(CubeStatus::Fails),
                    counts(CubeStatus::Unknown),
                );
                if let Some((u, v, w)) = &failing {
                    println!("first failing triple: ({u}, {v}, {w})");
                }
            }
            Ok(code)
        }
        Command::Garside {
            source,
            max_len,
            max_family,
            classifier,
            json,
        } => {
            let p = source.load()?;
            let limits = closure_limits(max_len, max_family, &classifier);
            match compute_minimal_garside(&p, &limits) {
                Ok(family) => {
                    let alpha = p.alphabet();
                    let elements: Vec<String> = family
                        .elements
                        .iter()
                        .map(|w| alpha.render_word(w))
                        .collect();
                    let extremals: Vec<String> = family
                        .extremals
                        .iter()
                        .map(|w| alpha.render_word(w))
                        .collect();
                    if json {
                        emit(&output::GarsideDoc {
                            command: "garside".into(),
                            element_count: elements.len(),
                            extremal_count: extremals.len(),
                            generations: family.stats.generations(),
                            elements,
                            extremals,
                        });
                    } else {
                        println!(
                            "minimal Garside family: {} elements, {} extremal",
                            family.elements.len(),
                            family.extremals.len()
                        );
                        println!("extremals: {}", extremals.join(" "));
                    }
                    Ok(EXIT_OK)
                }
                Err(GarsideError::Diverged {
                    reason,
                    partial_size,
                    ..
                }) => {
                    eprintln!("diverged: {reason} ({partial_size} elements so far)");
                    Ok(EXIT_UNKNOWN)
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Command::Table {
            presets,
            max_len,
            max_family,
            classifier,
            json,
        } => {
            let names = if presets.is_empty() {
                vec![
                    "A2t".to_string(),
                    "A3t".to_string(),
                    "B3t".to_string(),
                    "C2t".to_string(),
                    "C3t".to_string(),
                    "G2t".to_string(),
                ]
            } else {
                presets
            };
            let presets: Vec<Preset> = names
                .iter()
                .map(|n| Preset::parse(n).map_err(|e| e.to_string()))
                .collect::<Result<_, String>>()?;
            let limits = closure_limits(max_len, max_family, &classifier);
            let rows = family_table(&presets, &limits);
            let mut any_failed = false;
            let row_docs: Vec<output::TableRowDoc> = rows
                .iter()
                .map(|row| match &row.outcome {
                    Ok((e, f)) => output::TableRowDoc {
                        preset: row.preset.name().to_string(),
                        extremal_count: Some(*e),
                        element_count: Some(*f),
                        error: None,
                    },
                    Err(err) => {
                        any_failed = true;
                        output::TableRowDoc {
                            preset: row.preset.name().to_string(),
                            extremal_count: None,
                            element_count: None,
                            error: Some(err.to_string()),
                        }
                    }
                })
                .collect();
            if json {
                emit(&output::TableDoc {
                    command: "table".into(),
                    rows: row_docs,
                });
            } else {
                println!("{:<6} {:>6} {:>6}  {}", "type", "|E|", "|F|", "time");
                for (row, doc) in rows.iter().zip(&row_docs) {
                    match (&doc.extremal_count, &doc.element_count) {
                        (Some(e), Some(f)) => println!(
                            "{:<6} {:>6} {:>6}  {:.2?}",
                            doc.preset, e, f, row.elapsed
                        ),
                        _ => println!(
                            "{:<6} {:>6} {:>6}  {}",
                            doc.preset,
                            "-",
                            "-",
                            doc.error.as_deref().unwrap_or("error")
                        ),
                    }
                }
            }
            Ok(if any_failed { EXIT_UNKNOWN } else { EXIT_OK })
        }
    }
}
