//! Command-line front end: certification runs, ledger dumps, quotient-model
//! printing, and golden-corpus regeneration.
//!
//! Exit codes: 0 when every non-skipped check passes, 1 on any check
//! failure, 2 on configuration errors.  Every flag can also be supplied via
//! an environment variable with the same name uppercased and prefixed
//! `PRYMDEC_` (command-line values win).

use clap::{Args, Parser, Subcommand};
use prymdec::cyclo::Cyclo;
use prymdec::poly::MPoly;
use prymdec::rat::parse_q;
use prymdec::report::{self, CheckStatus, RunOptions};
use prymdec::{decomp, golden, quotients, vars};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "prymdec",
    version,
    about = "Exact verification of the decomposition of a family of Prym varieties"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run the certification suite and print one line per check.
    #[command(name = "verify-paper")]
    VerifyPaper(CommonOpts),
    /// Print the decomposition ledger of one degree as JSON.
    Decompose(CommonOpts),
    /// Print one quotient-curve model in canonical polynomial form.
    Quotient {
        #[command(flatten)]
        common: CommonOpts,
        /// Which quotient: alpha|x, xtilde, etilde, beta|y, ytilde,
        /// sigma|z, ztilde, or w4.
        #[arg(long, env = "PRYMDEC_WHICH")]
        which: String,
    },
    /// Write (or rewrite) the golden snapshot corpus.
    Build(CommonOpts),
    /// Run the certification suite and emit the full JSON report.
    Report(CommonOpts),
}

#[derive(Args, Clone)]
struct CommonOpts {
    /// Single curve degree (shorthand for --range N..N).
    #[arg(long, env = "PRYMDEC_N")]
    n: Option<u32>,
    /// Inclusive degree range A..B.
    #[arg(long, env = "PRYMDEC_RANGE")]
    range: Option<String>,
    /// Parameter specializations, e.g. a2=1,a3=0.
    #[arg(long, env = "PRYMDEC_PARAMS")]
    params: Option<String>,
    /// Cyclotomic display level override for printed coefficients.
    #[arg(long, env = "PRYMDEC_LEVEL")]
    level: Option<u32>,
    /// Also run the generalizable identity families out to degree 12/16.
    #[arg(long, env = "PRYMDEC_EXTENDED")]
    extended: bool,
    /// Write the JSON report to this path.
    #[arg(long, env = "PRYMDEC_JSON")]
    json: Option<PathBuf>,
    /// Parallelism degree (0 = one worker per core).
    #[arg(long, env = "PRYMDEC_JOBS")]
    jobs: Option<usize>,
    /// Cost budget of the per-degree smoothness scan.
    #[arg(long, env = "PRYMDEC_BUDGET")]
    budget: Option<u32>,
}

/// A configuration error (exit code 2).
struct ConfigError(String);

impl CommonOpts {
    /// The inclusive degree range: `--n` wins over `--range`, default 4..8.
    fn resolve_range(&self) -> Result<(u32, u32), ConfigError> {
        if self.n.is_some() && self.range.is_some() {
            return Err(ConfigError("give either --n or --range, not both".into()));
        }
        let (lo, hi) = match (self.n, &self.range) {
            (Some(n), _) => (n, n),
            (None, Some(r)) => parse_range(r)?,
            (None, None) => (4, 8),
        };
        if lo < 4 {
            return Err(ConfigError(format!("the family starts at degree 4, got {lo}")));
        }
        if lo > hi {
            return Err(ConfigError(format!("empty degree range {lo}..{hi}")));
        }
        Ok((lo, hi))
    }

    /// The single degree of a one-degree command.
    fn resolve_n(&self) -> Result<u32, ConfigError> {
        let (lo, hi) = self.resolve_range()?;
        if lo != hi {
            return Err(ConfigError("this command takes a single degree; use --n".into()));
        }
        Ok(lo)
    }

    fn run_options(&self) -> Result<RunOptions, ConfigError> {
        let range = self.resolve_range()?;
        let params = match &self.params {
            Some(s) => parse_params(s)?,
            None => Vec::new(),
        };
        report::validate_params(&params, range).map_err(ConfigError)?;
        let budget = self.budget.unwrap_or(256);
        if budget == 0 {
            return Err(ConfigError("budget must be positive".into()));
        }
        Ok(RunOptions {
            range,
            params,
            extended: self.extended,
            budget,
            jobs: self.jobs.unwrap_or(0),
        })
    }
}

fn parse_range(s: &str) -> Result<(u32, u32), ConfigError> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| ConfigError(format!("range must look like A..B, got `{s}`")))?;
    let b = b.strip_prefix('=').unwrap_or(b);
    let lo = a.trim().parse::<u32>().map_err(|e| ConfigError(format!("bad range start: {e}")))?;
    let hi = b.trim().parse::<u32>().map_err(|e| ConfigError(format!("bad range end: {e}")))?;
    Ok((lo, hi))
}

fn parse_params(s: &str) -> Result<Vec<(u32, prymdec::rat::Q)>, ConfigError> {
    let mut out = Vec::new();
    for piece in s.split(',').filter(|p| !p.trim().is_empty()) {
        let (name, value) = piece
            .split_once('=')
            .ok_or_else(|| ConfigError(format!("parameter must look like a2=1, got `{piece}`")))?;
        let name = name.trim();
        let index = name
            .strip_prefix('a')
            .and_then(|d| d.parse::<u32>().ok())
            .ok_or_else(|| ConfigError(format!("unknown parameter name `{name}`")))?;
        let q = parse_q(value.trim())
            .map_err(|e| ConfigError(format!("bad value for {name}: {e}")))?;
        out.push((index, q));
    }
    Ok(out)
}

fn status_str(s: CheckStatus) -> &'static str {
    match s {
        CheckStatus::Pass => "pass",
        CheckStatus::PassWithErrata => "pass-with-errata",
        CheckStatus::Fail => "fail",
        CheckStatus::Skipped => "skipped",
    }
}

/// Render a polynomial with every cyclotomic coefficient forced to display
/// level `level` (same canonical format otherwise).
fn render_at_level(p: &MPoly, level: u32) -> Result<String, String> {
    if p.is_zero() {
        return Ok("0".to_string());
    }
    let mut out = String::new();
    let terms: Vec<(&prymdec::poly::Mono, &Cyclo)> = p.terms().collect();
    for (m, c) in terms.into_iter().rev() {
        let constant_term = m.is_unit();
        match c.as_q() {
            Some(q) => {
                use num_traits::{One, Signed};
                let mag = q.abs();
                if out.is_empty() {
                    if q.is_negative() {
                        out.push('-');
                    }
                } else if q.is_negative() {
                    out.push_str(" - ");
                } else {
                    out.push_str(" + ");
                }
                if constant_term {
                    out.push_str(&prymdec::rat::fmt_q(&mag));
                } else {
                    if !One::is_one(&mag) {
                        out.push_str(&prymdec::rat::fmt_q(&mag));
                        out.push('*');
                    }
                    out.push_str(&m.to_string());
                }
            }
            None => {
                if !out.is_empty() {
                    out.push_str(" + ");
                }
                out.push_str(&c.fmt_at_level(level)?);
                if !constant_term {
                    out.push('*');
                    out.push_str(&m.to_string());
                }
            }
        }
    }
    Ok(out)
}

fn write_json_if_requested(opts: &CommonOpts, report: &report::Report) -> Result<(), ConfigError> {
    if let Some(path) = &opts.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| ConfigError(format!("cannot write {}: {e}", path.display())))?;
    }
    Ok(())
}

fn cmd_verify_paper(opts: &CommonOpts) -> Result<ExitCode, ConfigError> {
    let run = report::run(&opts.run_options()?);
    for c in &run.checks {
        let prefix = if c.n == 0 { "[family]".to_string() } else { format!("[n={}]", c.n) };
        match (&c.status, &c.witness) {
            (CheckStatus::Fail, Some(w)) => {
                println!("{prefix} {}: {} ({w})", c.id, status_str(c.status))
            }
            _ => println!("{prefix} {}: {}", c.id, status_str(c.status)),
        }
    }
    let s = &run.summary;
    println!(
        "{} checks: {} pass, {} pass-with-errata, {} skipped, {} fail",
        s.total, s.pass, s.pass_with_errata, s.skipped, s.fail
    );
    write_json_if_requested(opts, &run)?;
    Ok(if run.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_report(opts: &CommonOpts) -> Result<ExitCode, ConfigError> {
    let run = report::run(&opts.run_options()?);
    match &opts.json {
        Some(_) => write_json_if_requested(opts, &run)?,
        None => println!("{}", run.to_json()),
    }
    Ok(if run.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn cmd_decompose(opts: &CommonOpts) -> Result<ExitCode, ConfigError> {
    let n = opts.resolve_n()?;
    match decomp::build_ledger(n) {
        Ok(ledger) => {
            println!("{}", ledger.to_json());
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("ledger construction failed: {e}");
            Ok(ExitCode::from(1))
        }
    }
}

fn cmd_quotient(opts: &CommonOpts, which: &str) -> Result<ExitCode, ConfigError> {
    let n = opts.resolve_n()?;
    let name = match which {
        "alpha" | "x" => format!("x{n}"),
        "xtilde" => format!("xtilde{n}"),
        "etilde" => format!("etilde{n}"),
        "beta" | "y" => format!("y{n}"),
        "ytilde" => format!("ytilde{n}"),
        "sigma" | "z" => format!("z{n}"),
        "ztilde" => format!("ztilde{n}"),
        "w" | "wtilde" | "w4" => "wtilde4".to_string(),
        other => return Err(ConfigError(format!("unknown quotient `{other}`"))),
    };
    let models = quotients::models_for(n)
        .map_err(|e| ConfigError(format!("no models at degree {n}: {e}")))?;
    let model = models
        .into_iter()
        .find(|m| m.name == name)
        .ok_or_else(|| ConfigError(format!("model `{name}` does not exist at degree {n}")))?;

    let mut equation = model.equation;
    if let Some(s) = &opts.params {
        let params = parse_params(s)?;
        for (i, _) in &params {
            if *i < vars::PARAM_MIN || *i > n / 2 {
                return Err(ConfigError(format!(
                    "parameter a{i} is not a coefficient of the degree-{n} member"
                )));
            }
        }
        equation = equation.specialize(&params);
    }
    let rendered = match opts.level {
        Some(level) => render_at_level(&equation, level).map_err(ConfigError)?,
        None => equation.to_string(),
    };
    println!("# model: {}", model.name);
    println!("# genus: {}", model.genus);
    println!("{rendered}");
    Ok(ExitCode::SUCCESS)
}

fn cmd_build(opts: &CommonOpts) -> Result<ExitCode, ConfigError> {
    let degrees: Vec<u32> = match (opts.n, &opts.range) {
        (None, None) => golden::CORPUS_DEGREES.to_vec(),
        _ => {
            let (lo, hi) = opts.resolve_range()?;
            (lo..=hi).collect()
        }
    };
    let root = golden::corpus_root();
    for n in degrees {
        let written = golden::write_corpus_at(&root, n)
            .map_err(|e| ConfigError(format!("degree {n}: {e}")))?;
        for path in written {
            println!("wrote {}", path.display());
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match &cli.command {
        Command::VerifyPaper(opts) => cmd_verify_paper(opts),
        Command::Decompose(opts) => cmd_decompose(opts),
        Command::Quotient { common, which } => cmd_quotient(common, which),
        Command::Build(opts) => cmd_build(opts),
        Command::Report(opts) => cmd_report(opts),
    };
    match outcome {
        Ok(code) => code,
        Err(ConfigError(msg)) => {
            eprintln!("configuration error: {msg}");
            ExitCode::from(2)
        }
    }
}
