//! Command-line front end for lexsegment power resolutions.
//!
//! Exit status: 0 success, 1 a check failed, 2 bad input, 3 budget exceeded.

use std::fmt::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use lexres::export::{to_json, to_macaulay2, to_text};
use lexres::lexsegment::{classify, enumerate_lexsegment, CompletelyLexVerdict, LinearForm};
use lexres::parse::parse_monomial;
use lexres::pipeline::{resolve_quotients, Instance};
use lexres::quotients::QuotientStatus;
use lexres::resolution::ResolutionComplex;
use lexres::verify::{verify_all, VerificationReport, DEFAULT_NODE_BUDGET};
use lexres::{Error, Monomial, RingContext};

#[derive(Parser)]
#[command(name = "lexres", version, about = "Minimal free resolutions of powers of lexsegment ideals")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the lexsegment L(u, v)
    Gen(Job),
    /// Completely-lexsegment and linear-quotient classification
    Classify(Job),
    /// Minimal generators of I^k in increasing revlex order
    Power(Job),
    /// The sets set(m) of the linear quotient order
    Quotients(Job),
    /// Build the resolution of S/I^k
    Resolve(Job),
    /// Run every consistency check on the resolution
    Verify(Job),
    /// Write the resolution as JSON (default), text or a Macaulay2 script
    Export(Job),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    M2,
}

#[derive(Args)]
struct Job {
    /// Number of variables
    #[arg(long)]
    n: usize,
    /// Lex-larger endpoint, e.g. x1x3 or x1*x4^2
    #[arg(long)]
    u: String,
    /// Lex-smaller endpoint
    #[arg(long)]
    v: String,
    /// Power of the ideal
    #[arg(long, default_value_t = 1, value_parser = clap::value_parser!(u32).range(1..))]
    k: u32,
    /// Number of iterated shadows checked by `classify` (defaults to n)
    #[arg(long)]
    depth: Option<u32>,
    /// Seed for the random rank trials
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of random rank trials
    #[arg(long, default_value_t = 5)]
    trials: usize,
    #[arg(long, value_enum)]
    format: Option<Format>,
    /// Write the output here instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Use the generic decomposition function; required for specs outside
    /// the linear-quotient pattern
    #[arg(long)]
    oracle_g: bool,
    /// Stop `classify` after the first shadow and assume it persists
    #[arg(long)]
    first_shadow_persistence: bool,
}

/// Command output together with whether every check it ran passed.
struct Outcome {
    text: String,
    pass: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Outcome { text, pass: true }
    }
}

fn exit_code(err: &Error) -> u8 {
    match err {
        Error::BudgetExceeded { .. } => 3,
        Error::NotLinearQuotients { .. }
        | Error::NotRegular { .. }
        | Error::ClosedFormMismatch { .. }
        | Error::ClosedFormNotGenerator(_)
        | Error::BarDegreeBound(_) => 1,
        _ => 2,
    }
}

fn pretty(value: &serde_json::Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("json values serialize");
    s.push('\n');
    s
}

fn monomial_list(ms: &[Monomial]) -> String {
    ms.iter().map(|m| format!("{m}\n")).collect()
}

fn m2_ideal(n: usize, gens: &[Monomial]) -> String {
    let gens: Vec<String> = gens.iter().map(lexres::export::m2_monomial).collect();
    format!("R = QQ[x_1..x_{n}];\nI = ideal({});\n", gens.join(", "))
}

fn gen(job: &Job, format: Format) -> lexres::Result<Outcome> {
    let ctx = RingContext::new(job.n)?;
    let (u, v) = (parse_monomial(&job.u, &ctx)?, parse_monomial(&job.v, &ctx)?);
    let segment = enumerate_lexsegment(&u, &v)?;
    Ok(Outcome::ok(match format {
        Format::Text => monomial_list(&segment),
        Format::Json => pretty(&json!({ "n": job.n, "u": u, "v": v, "lexsegment": segment })),
        Format::M2 => m2_ideal(job.n, &segment),
    }))
}

fn classify_cmd(job: &Job, inst: &Instance, format: Format) -> lexres::Result<Outcome> {
    let depth = job.depth.unwrap_or(job.n as u32);
    let c = classify(&inst.spec, depth, job.first_shadow_persistence)?;
    let text = match format {
        Format::Json => pretty(&json!({
            "n": job.n,
            "u": inst.spec.u(),
            "v": inst.spec.v(),
            "normalization": inst.normalization,
            "completely_lex": c.completely_lex,
            "linear_form": c.linear_form,
            "notes": c.notes,
        })),
        _ => {
            let mut out = String::new();
            let _ = writeln!(out, "L({}, {}) in n = {}", inst.spec.u(), inst.spec.v(), job.n);
            let _ = writeln!(out, "normalization: {:?}", inst.normalization);
            let cl = match &c.completely_lex {
                CompletelyLexVerdict::Yes => "yes (first shadow persistence assumed)".to_string(),
                CompletelyLexVerdict::No { shadow, witness } => format!("no (shadow {shadow} misses {witness})"),
                CompletelyLexVerdict::UnknownAtDepth { depth } => format!("unknown beyond depth {depth}"),
            };
            let _ = writeln!(out, "completely lexsegment: {cl}");
            let lf = match c.linear_form {
                LinearForm::Yes { l } => format!("yes, l = {l}"),
                LinearForm::No => "no".into(),
            };
            let _ = writeln!(out, "linear-quotient pattern: {lf}");
            out
        }
    };
    Ok(Outcome::ok(text))
}

fn power(job: &Job, inst: &Instance, format: Format) -> lexres::Result<Outcome> {
    let qs = inst.quotients(job.k)?;
    let gens = qs.generators();
    Ok(Outcome::ok(match format {
        Format::Text => monomial_list(gens),
        Format::Json => pretty(&json!({
            "n": job.n,
            "k": job.k,
            "order": lexres::export::ORDER_NAME,
            "generators": gens,
        })),
        Format::M2 => m2_ideal(job.n, gens),
    }))
}

fn quotients(job: &Job, inst: &Instance, format: Format) -> lexres::Result<Outcome> {
    let qs = inst.quotients(job.k)?;
    let pass = qs.is_linear();
    let failure = match qs.status() {
        QuotientStatus::Linear => None,
        QuotientStatus::Failure { index, witness } => Some((*index, witness.clone())),
    };
    let text = match format {
        Format::Json => pretty(&json!({
            "n": job.n,
            "k": job.k,
            "order": lexres::export::ORDER_NAME,
            "generators": qs.generators(),
            "sets": qs.sets(),
            "linear": pass,
            "failure": failure.as_ref().map(|(i, w)| json!({ "index": i, "witness": w })),
        })),
        Format::Text => {
            let mut out = String::new();
            for (i, (m, s)) in qs.generators().iter().zip(qs.sets()).enumerate() {
                let _ = writeln!(out, "u{}  {m}  {s}", i + 1);
            }
            if let Some((i, w)) = failure {
                let _ = writeln!(out, "not linear: colon at u{} has minimal generator {w}", i + 1);
            }
            out
        }
        Format::M2 => m2_ideal(job.n, qs.generators()),
    };
    Ok(Outcome { text, pass })
}

fn build(job: &Job, inst: &Instance) -> lexres::Result<ResolutionComplex> {
    let qs = inst.quotients(job.k)?;
    qs.require_linear()?;
    resolve_quotients(qs, job.oracle_g)
}

fn render(rc: &ResolutionComplex, format: Format) -> String {
    match format {
        Format::Json => {
            let mut s = to_json(rc);
            s.push('\n');
            s
        }
        Format::Text => to_text(rc),
        Format::M2 => to_macaulay2(rc),
    }
}

fn verify_text(r: &VerificationReport) -> String {
    let verdict = |b: bool| if b { "pass" } else { "FAIL" };
    let mut out = String::new();
    for (i, c) in r.compose.iter().enumerate() {
        let _ = writeln!(out, "compose d{i}*d{}: {}", i + 1, verdict(*c));
    }
    let _ = writeln!(out, "minimality: {}", verdict(r.minimality));
    let _ = writeln!(out, "homogeneity: {}", verdict(r.homogeneity));
    match &r.set_lemmas {
        None => out.push_str("set lemmas: pass\n"),
        Some(v) => {
            let _ = writeln!(out, "set lemmas: FAIL ({:?} at u{}, s = {})", v.lemma, v.gen + 1, v.s);
        }
    }
    let _ = writeln!(out, "decomposition regularity: {}", serde_json::to_string(&r.regularity).unwrap());
    let _ = writeln!(out, "euler characteristic: {}", r.euler.euler);
    let _ = writeln!(out, "hilbert numerator:    {}", r.euler.hilbert);
    let _ = writeln!(out, "euler = hilbert: {}", verdict(r.euler.pass));
    for (j, t) in r.rank.trials.iter().enumerate() {
        let ranks: Vec<String> = t.ranks.iter().map(|r| r.to_string()).collect();
        let _ = writeln!(out, "rank trial {}: ranks ({}) {}", j + 1, ranks.join(", "), verdict(t.pass));
    }
    let _ = writeln!(out, "overall: {}", verdict(r.pass()));
    out
}

fn verify(job: &Job, inst: &Instance, format: Format) -> lexres::Result<Outcome> {
    let rc = build(job, inst)?;
    let report = verify_all(&rc, job.seed, job.trials, DEFAULT_NODE_BUDGET)?;
    let text = match format {
        Format::Json => pretty(&serde_json::to_value(&report).expect("report serializes")),
        Format::Text => verify_text(&report),
        Format::M2 => to_macaulay2(&rc),
    };
    Ok(Outcome { text, pass: report.pass() })
}

fn run(command: &Command) -> lexres::Result<(Outcome, &Job)> {
    let (job, default) = match command {
        Command::Export(job) => (job, Format::Json),
        Command::Gen(job)
        | Command::Classify(job)
        | Command::Power(job)
        | Command::Quotients(job)
        | Command::Resolve(job)
        | Command::Verify(job) => (job, Format::Text),
    };
    let format = job.format.unwrap_or(default);
    if let Command::Gen(job) = command {
        return Ok((gen(job, format)?, job));
    }
    let inst = Instance::parse(job.n, &job.u, &job.v)?;
    let outcome = match command {
        Command::Classify(_) => classify_cmd(job, &inst, format)?,
        Command::Power(_) => power(job, &inst, format)?,
        Command::Quotients(_) => quotients(job, &inst, format)?,
        Command::Resolve(_) | Command::Export(_) => Outcome::ok(render(&build(job, &inst)?, format)),
        Command::Verify(_) => verify(job, &inst, format)?,
        Command::Gen(_) => unreachable!(),
    };
    Ok((outcome, job))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli.command) {
        Ok((outcome, job)) => {
            match &job.out {
                Some(path) => {
                    if let Err(e) = std::fs::write(path, &outcome.text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{}", outcome.text),
            }
            if outcome.pass {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code(&e))
        }
    }
}
