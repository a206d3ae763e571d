//! argument grammar and command dispatch.  `run` is a pure function from
//! argv (plus the filesystem and SHIFTLAB_SEED) to an outcome, so the whole
//! surface is testable without spawning processes.

use std::io::Read;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};
use shiftlab_core::{
    betti_ahh, betti_ek, betti_koszul, combinatorial_shift, enumerate_stable_complexes,
    exterior_shift, gin_exterior, gin_symmetric, random_stable_complex, symmetric_shift,
    verify_complex, Complex, FieldSpec, ShiftOrder, VerificationReport, DEFAULT_TRIALS,
};

use crate::doc::{
    complex_of, ideal_of, parse_doc, BettiDoc, ComplexDoc, IdealDoc, ReportDoc, SummaryDoc,
    TraceDoc,
};
use crate::explore::{explore, ExploreDoc, ExploreMode};
use crate::render;

#[derive(Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// exit codes: 0 success, 1 verification failure, 2 usage or input error
const EXIT_VERIFICATION: i32 = 1;
const EXIT_USAGE: i32 = 2;

#[derive(Parser)]
#[command(
    name = "shiftlab",
    about = "betti tables of squarefree monomial ideals and the three shifted complexes",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    /// closed-form count for stable ideals
    Ek,
    /// closed-form count for squarefree stable ideals
    Ahh,
    /// homology ranks over an explicit field
    Koszul,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Mode {
    /// combinatorial: sweep elementary swaps to a fixed point
    C,
    /// symmetric: generic initial ideal, then stretch to squarefree
    S,
    /// exterior: generic initial ideal among wedges
    E,
}

#[derive(Subcommand)]
enum Command {
    /// graded betti numbers of an ideal or of a complex's nonface ideal
    Betti {
        /// file path, inline json, or - for stdin
        input: String,
        #[arg(long, value_enum)]
        method: Method,
        /// field descriptor (koszul only): q, f:<p>, f:<p>^<k>
        #[arg(long, default_value = "q")]
        field: String,
        /// degree cap for the koszul route
        #[arg(long)]
        cap: Option<u32>,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// shifted complex of a complex
    Shift {
        /// file path, inline json, or - for stdin
        input: String,
        #[arg(long, value_enum)]
        mode: Mode,
        /// field descriptor (modes s and e)
        #[arg(long, default_value = "q")]
        field: String,
        /// seed for the coordinate change (modes s and e); falls back to
        /// SHIFTLAB_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// independent coordinate changes that must agree (modes s and e)
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        /// sweep order (mode c): canonical or random:<seed>
        #[arg(long, default_value = "canonical")]
        order: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// stability flags of an ideal or of a complex's nonface ideal
    Classify {
        /// file path, inline json, or - for stdin
        input: String,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// generic initial ideal of an ideal or of a complex's nonface ideal
    Gin {
        /// file path, inline json, or - for stdin
        input: String,
        /// compute among wedges instead of polynomials
        #[arg(long)]
        exterior: bool,
        #[arg(long, default_value = "q")]
        field: String,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, default_value_t = DEFAULT_TRIALS)]
        trials: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// list every stable complex on n vertices
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// run all betti routes over a corpus and compare the tables
    Verify {
        #[arg(long)]
        n: usize,
        /// every stable complex on n vertices (the default)
        #[arg(long)]
        exhaustive: bool,
        /// this many seeded random complexes instead
        #[arg(long, conflicts_with = "exhaustive")]
        random: Option<usize>,
        /// comma-separated field descriptors
        #[arg(long, default_value = "q")]
        fields: String,
        #[arg(long)]
        seed: Option<u64>,
        /// worker threads; the output does not depend on this
        #[arg(long, default_value_t = 1)]
        jobs: usize,
        /// compare the shifted tables entrywise instead of running the
        /// harness; observational only, always exits 0.  random mode then
        /// samples from all complexes, stable or not
        #[arg(long)]
        explore_inequality: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
}

/// input or computation problem; the message already names the error
#[derive(Debug)]
struct CmdError(String);

impl<E: std::fmt::Display> From<E> for CmdError {
    fn from(e: E) -> CmdError {
        CmdError(e.to_string())
    }
}

pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let rendered = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: rendered,
                    stderr: String::new(),
                },
                _ => Outcome {
                    code: EXIT_USAGE,
                    stdout: String::new(),
                    stderr: rendered,
                },
            };
        }
    };
    dispatch(cli.command)
}

fn dispatch(command: Command) -> Outcome {
    let result = match command {
        Command::Betti { input, method, field, cap, format } => {
            cmd_betti(&input, method, &field, cap, format)
        }
        Command::Shift { input, mode, field, seed, trials, order, format } => {
            cmd_shift(&input, mode, &field, seed, trials, &order, format)
        }
        Command::Classify { input, format } => cmd_classify(&input, format),
        Command::Gin { input, exterior, field, seed, trials, format } => {
            cmd_gin(&input, exterior, &field, seed, trials, format)
        }
        Command::Enumerate { n, format } => cmd_enumerate(n, format),
        Command::Verify {
            n,
            exhaustive: _,
            random,
            fields,
            seed,
            jobs,
            explore_inequality,
            format,
        } => cmd_verify(n, random, &fields, seed, jobs, explore_inequality, format),
    };
    match result {
        Ok(outcome) => outcome,
        Err(CmdError(msg)) => Outcome {
            code: EXIT_USAGE,
            stdout: String::new(),
            stderr: format!("{}\n", msg),
        },
    }
}

fn ok(stdout: String) -> Result<Outcome, CmdError> {
    Ok(Outcome { code: 0, stdout, stderr: String::new() })
}

/// '-' is stdin, a leading '{' is an inline document, anything else a path
fn read_input(arg: &str) -> Result<String, CmdError> {
    if arg == "-" {
        let mut buf = String::new();
        std::io::stdin()
            .read_to_string(&mut buf)
            .map_err(|e| CmdError(format!("stdin: {}", e)))?;
        Ok(buf)
    } else if arg.trim_start().starts_with('{') {
        Ok(arg.to_string())
    } else {
        std::fs::read_to_string(arg).map_err(|e| CmdError(format!("{}: {}", arg, e)))
    }
}

fn parse_field(descriptor: &str) -> Result<FieldSpec, CmdError> {
    descriptor.trim().parse::<FieldSpec>().map_err(CmdError::from)
}

fn parse_fields(list: &str) -> Result<Vec<FieldSpec>, CmdError> {
    let fields: Result<Vec<FieldSpec>, CmdError> =
        list.split(',').filter(|s| !s.trim().is_empty()).map(parse_field).collect();
    let fields = fields?;
    if fields.is_empty() {
        return Err(CmdError(String::from("at least one field descriptor is required")));
    }
    Ok(fields)
}

/// --seed wins, then SHIFTLAB_SEED, then 0; a malformed variable is an
/// error rather than a silent 0
fn resolve_seed(flag: Option<u64>, env: Option<String>) -> Result<u64, CmdError> {
    if let Some(s) = flag {
        return Ok(s);
    }
    match env {
        None => Ok(0),
        Some(text) => text
            .parse::<u64>()
            .map_err(|_| CmdError(format!("SHIFTLAB_SEED: {:?} is not a u64", text))),
    }
}

fn seed_from(flag: Option<u64>) -> Result<u64, CmdError> {
    resolve_seed(flag, std::env::var("SHIFTLAB_SEED").ok())
}

fn parse_order(s: &str) -> Result<ShiftOrder, CmdError> {
    if s == "canonical" {
        Ok(ShiftOrder::Canonical)
    } else if let Some(rest) = s.strip_prefix("random:") {
        let seed: u64 = rest
            .parse()
            .map_err(|_| CmdError(format!("order: {:?} is not a u64 seed", rest)))?;
        Ok(ShiftOrder::Random(seed))
    } else {
        Err(CmdError(String::from("order must be canonical or random:<seed>")))
    }
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("documents serialize");
    s.push('\n');
    s
}

fn cmd_betti(
    input: &str,
    method: Method,
    field: &str,
    cap: Option<u32>,
    format: Format,
) -> Result<Outcome, CmdError> {
    let ideal = ideal_of(&parse_doc(&read_input(input)?)?)?;
    let table = match method {
        Method::Ek => betti_ek(&ideal)?,
        Method::Ahh => betti_ahh(&ideal)?,
        Method::Koszul => betti_koszul(&ideal, &parse_field(field)?, cap)?,
    };
    match format {
        Format::Text => ok(render::betti_text(&table)),
        Format::Json => ok(json_line(&BettiDoc::from_table(&table))),
    }
}

/// shift output: the shifted complex, plus the sweep trace in mode c
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ShiftOutcomeDoc {
    pub complex: ComplexDoc,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub trace: Option<TraceDoc>,
}

fn cmd_shift(
    input: &str,
    mode: Mode,
    field: &str,
    seed: Option<u64>,
    trials: usize,
    order: &str,
    format: Format,
) -> Result<Outcome, CmdError> {
    let complex = complex_of(&parse_doc(&read_input(input)?)?)?;
    let (shifted, trace) = match mode {
        Mode::C => {
            let (s, t) = combinatorial_shift(&complex, &parse_order(order)?)?;
            (s, Some(t))
        }
        Mode::S => (
            symmetric_shift(&complex, &parse_field(field)?, seed_from(seed)?, trials)?,
            None,
        ),
        Mode::E => (
            exterior_shift(&complex, &parse_field(field)?, seed_from(seed)?, trials)?,
            None,
        ),
    };
    match format {
        Format::Text => {
            let mut out = render::complex_text(&shifted);
            if let Some(t) = &trace {
                out.push_str(&render::trace_text(t));
            }
            ok(out)
        }
        Format::Json => ok(json_line(&ShiftOutcomeDoc {
            complex: ComplexDoc::from_complex(&shifted),
            trace: trace.as_ref().map(TraceDoc::from_trace),
        })),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassifyDoc {
    pub stable: bool,
    pub strongly_stable: bool,
    pub squarefree: bool,
    pub squarefree_stable: bool,
    pub squarefree_strongly_stable: bool,
}

fn cmd_classify(input: &str, format: Format) -> Result<Outcome, CmdError> {
    let ideal = ideal_of(&parse_doc(&read_input(input)?)?)?;
    let r = ideal.classify();
    match format {
        Format::Text => ok(render::classify_text(&r)),
        Format::Json => ok(json_line(&ClassifyDoc {
            stable: r.stable,
            strongly_stable: r.strongly_stable,
            squarefree: r.squarefree,
            squarefree_stable: r.squarefree_stable,
            squarefree_strongly_stable: r.squarefree_strongly_stable,
        })),
    }
}

fn cmd_gin(
    input: &str,
    exterior: bool,
    field: &str,
    seed: Option<u64>,
    trials: usize,
    format: Format,
) -> Result<Outcome, CmdError> {
    let ideal = ideal_of(&parse_doc(&read_input(input)?)?)?;
    let field = parse_field(field)?;
    let seed = seed_from(seed)?;
    let gin = if exterior {
        gin_exterior(&ideal, &field, seed, trials)?
    } else {
        gin_symmetric(&ideal, &field, seed, trials)?
    };
    match format {
        Format::Text => ok(render::ideal_text(&gin)),
        Format::Json => ok(json_line(&IdealDoc::from_ideal(&gin))),
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EnumerationDoc {
    pub n: usize,
    pub count: usize,
    pub complexes: Vec<ComplexDoc>,
}

fn cmd_enumerate(n: usize, format: Format) -> Result<Outcome, CmdError> {
    let corpus = enumerate_stable_complexes(n)?;
    match format {
        Format::Text => {
            let mut out = format!("{} stable complexes on {} vertices\n", corpus.len(), n);
            for c in &corpus {
                out.push_str(&c.canonical_id());
                out.push('\n');
            }
            ok(out)
        }
        Format::Json => ok(json_line(&EnumerationDoc {
            n,
            count: corpus.len(),
            complexes: corpus.iter().map(ComplexDoc::from_complex).collect(),
        })),
    }
}

fn derived_seed(seed: u64, salt: u64) -> u64 {
    seed.wrapping_add(0x9e37_79b9_7f4a_7c15u64.wrapping_mul(salt + 1))
}

/// chunked fan-out over scoped threads; reports come back in corpus order,
/// so the output is independent of the job count
fn reports_for(
    corpus: &[Complex],
    fields: &[FieldSpec],
    seed: u64,
    jobs: usize,
) -> Vec<VerificationReport> {
    let jobs = jobs.max(1).min(corpus.len().max(1));
    let chunk = corpus.len().div_ceil(jobs).max(1);
    let mut out = Vec::with_capacity(corpus.len());
    std::thread::scope(|scope| {
        let mut handles = Vec::new();
        for (ci, slice) in corpus.chunks(chunk).enumerate() {
            let base = ci * chunk;
            handles.push(scope.spawn(move || {
                slice
                    .iter()
                    .enumerate()
                    .map(|(k, c)| verify_complex(c, fields, derived_seed(seed, (base + k) as u64)))
                    .collect::<Vec<_>>()
            }));
        }
        for h in handles {
            out.extend(h.join().expect("verification worker panicked"));
        }
    });
    out
}

fn cmd_verify(
    n: usize,
    random: Option<usize>,
    fields: &str,
    seed: Option<u64>,
    jobs: usize,
    explore_inequality: bool,
    format: Format,
) -> Result<Outcome, CmdError> {
    let fields = parse_fields(fields)?;
    let seed = seed_from(seed)?;

    if explore_inequality {
        let mode = match random {
            Some(count) => ExploreMode::Random { count },
            None => ExploreMode::Exhaustive,
        };
        let doc: ExploreDoc = explore(n, &mode, &fields[0], seed)?;
        return match format {
            Format::Text => ok(crate::explore::explore_text(&doc)),
            Format::Json => ok(json_line(&doc)),
        };
    }

    let (corpus, mode_name) = match random {
        Some(count) => {
            let cs: Result<Vec<Complex>, _> = (0..count)
                .map(|i| random_stable_complex(n, seed.wrapping_add(i as u64)))
                .collect();
            (cs?, format!("random({})", count))
        }
        None => (enumerate_stable_complexes(n)?, String::from("exhaustive")),
    };

    let reports = reports_for(&corpus, &fields, seed, jobs);
    let total = reports.len();
    let mut statuses = std::collections::BTreeMap::new();
    let mut failures = Vec::new();
    for r in reports {
        statuses.insert(r.id().to_string(), r.passed());
        if !r.passed() {
            failures.push(r);
        }
    }
    let passes = total - failures.len();
    let code = if failures.is_empty() { 0 } else { EXIT_VERIFICATION };
    let field_names: Vec<String> = fields.iter().map(FieldSpec::descriptor).collect();

    let stdout = match format {
        Format::Json => json_line(&SummaryDoc {
            n,
            mode: mode_name,
            total,
            passes,
            statuses,
            failures: failures.iter().map(ReportDoc::from_report).collect(),
        }),
        Format::Text => {
            let mut out = format!("{}/{} pass\n", passes, total);
            out.push_str(&format!(
                "n: {}, mode: {}, fields: {}\n",
                n,
                mode_name,
                field_names.join(", ")
            ));
            for f in &failures {
                out.push('\n');
                out.push_str(&render::report_text(f));
            }
            out
        }
    };
    Ok(Outcome { code, stdout, stderr: String::new() })
}
