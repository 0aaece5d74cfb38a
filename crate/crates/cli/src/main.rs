//! `superhook`: compute expansions and specializations, run the
//! verification suites and draw decorated trees.

mod output;
mod registry;

use std::io::{self, BufRead, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;
use superhook::combinat::PackedWord;
use superhook::oracle::{self, Bounds, CheckReport};
use superhook::render::RenderFormat;
use superhook::wqsym;
use thiserror::Error;

use output::SCHEMA;

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] superhook::Error),
    #[error("unknown formula '{0}' (try `superhook list`)")]
    UnknownFormula(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] io::Error),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Latex,
    Ascii,
    Text,
}

#[derive(Parser)]
#[command(name = "superhook", version, about = "Superization maps and (q,t)-hook formulas")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a formula on objects given as arguments, or on stdin lines when none are given.
    ///
    /// Two-argument formulas take `a;b`, for instance `634;125`.
    Compute {
        formula: String,
        objects: Vec<String>,
        /// Evaluation mode, or `all` to print every mode.
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Run a verification suite (or `all`); exits nonzero on any mismatch.
    Verify {
        suite: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_regions: Option<usize>,
        #[arg(long)]
        alphabet_size: Option<usize>,
        #[arg(long)]
        max_degree: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Draw a decorated tree.
    Render {
        formula: String,
        objects: Vec<String>,
        #[arg(long)]
        mode: Option<String>,
        #[arg(long, value_enum, default_value = "ascii")]
        format: Format,
    },
    /// Counting sequences: regular signed packed words and convolution profiles.
    Sequences {
        /// Largest size for the regular signed packed word counts.
        #[arg(long, default_value_t = 4)]
        max_n: usize,
        /// Largest maximal letter of the factors in the profiles.
        #[arg(long, default_value_t = 3)]
        max_letter: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// List the registered formulas and suites.
    List,
}

fn objects(given: Vec<String>) -> Result<Vec<String>, CliError> {
    if !given.is_empty() {
        return Ok(given);
    }
    let mut out = Vec::new();
    for line in io::stdin().lock().lines() {
        let line = line?;
        let line = line.trim();
        if !line.is_empty() && !line.starts_with('#') {
            out.push(line.to_string());
        }
    }
    Ok(out)
}

fn compute(formula: &str, inputs: Vec<String>, mode: Option<&str>, format: Format, out: &mut impl Write) -> Result<bool, CliError> {
    let mut ok = true;
    for input in objects(inputs)? {
        let c = registry::compute(formula, &input, mode)?;
        ok &= c.consistent();
        match format {
            Format::Json => writeln!(out, "{}", c.json(formula, &input))?,
            Format::Latex => writeln!(out, "{}", c.latex())?,
            Format::Ascii | Format::Text => writeln!(out, "{}", c.text(formula, &input))?,
        }
    }
    Ok(ok)
}

fn render(formula: &str, inputs: Vec<String>, mode: Option<&str>, format: Format, out: &mut impl Write) -> Result<bool, CliError> {
    for input in objects(inputs)? {
        let tree = registry::render(formula, &input, mode)?;
        match format {
            Format::Json => {
                let v = json!({
                    "schema": SCHEMA,
                    "formula": formula,
                    "input": input,
                    "factors": tree.factors_latex(),
                    "ascii": tree.render(RenderFormat::Ascii),
                    "latex": tree.render(RenderFormat::Latex),
                });
                writeln!(out, "{v}")?;
            }
            Format::Latex => writeln!(out, "{}", tree.render(RenderFormat::Latex))?,
            Format::Ascii | Format::Text => write!(out, "{}", tree.render(RenderFormat::Ascii))?,
        }
    }
    Ok(true)
}

fn verify(suite: &str, bounds: &Bounds, format: Format, out: &mut impl Write) -> Result<bool, CliError> {
    let reports: Vec<CheckReport> = oracle::run_suite(suite, bounds)?;
    let passed = reports.iter().all(|r| r.passed);
    match format {
        Format::Json => {
            let v = json!({
                "schema": SCHEMA,
                "suite": suite,
                "bounds": {
                    "alphabet_size": bounds.alphabet_size,
                    "max_degree": bounds.max_degree,
                    "max_n": bounds.max_n,
                    "max_regions": bounds.max_regions,
                    "seed": bounds.seed,
                },
                "passed": passed,
                "reports": reports,
            });
            writeln!(out, "{}", serde_json::to_string_pretty(&v).expect("serializable report"))?;
        }
        Format::Latex => return Err(CliError::Usage("verify reports are json or text".into())),
        Format::Ascii | Format::Text => {
            for r in &reports {
                writeln!(out, "{r}")?;
            }
            writeln!(out, "{suite}: {}", if passed { "PASS" } else { "FAIL" })?;
        }
    }
    Ok(passed)
}

fn sequences(max_n: usize, max_letter: usize, format: Format, out: &mut impl Write) -> Result<bool, CliError> {
    let regular: Vec<usize> = (0..=max_n).map(wqsym::regular_signed_count).collect();
    // words of M_u M_v graded by max(u) + max(v) - max(w), counted and compared with the closed form
    let mut profiles = Vec::new();
    let mut ok = true;
    for a1 in 1..=max_letter {
        for a2 in 1..=max_letter {
            let u = PackedWord::new((1..=a1).collect())?;
            let v = PackedWord::new((1..=a2).collect())?;
            let counted = wqsym::convolution_max_profile(&u, &v);
            let closed: Vec<usize> = (0..=a1.min(a2)).map(|d| wqsym::delannoy_term(a1, a2, d)).collect();
            ok &= counted == closed;
            profiles.push((a1, a2, counted));
        }
    }
    match format {
        Format::Json => {
            let p: Vec<_> = profiles.iter().map(|(a1, a2, t)| json!({ "a1": a1, "a2": a2, "terms": t })).collect();
            let v = json!({ "schema": SCHEMA, "regular_signed_packed_words": regular, "convolution_profiles": p, "closed_form_agrees": ok });
            writeln!(out, "{v}")?;
        }
        Format::Latex => return Err(CliError::Usage("sequences are json or text".into())),
        Format::Ascii | Format::Text => {
            let r: Vec<String> = regular.iter().map(|x| x.to_string()).collect();
            writeln!(out, "regular signed packed words: {}", r.join(", "))?;
            for (a1, a2, t) in &profiles {
                let t: Vec<String> = t.iter().map(|x| x.to_string()).collect();
                writeln!(out, "a1={a1} a2={a2}: {}", t.join(", "))?;
            }
        }
    }
    Ok(ok)
}

fn list(out: &mut impl Write) -> Result<bool, CliError> {
    writeln!(out, "compute:")?;
    for (name, kind, what) in registry::FORMULAS {
        writeln!(out, "  {name:<22} {kind:<14} {what}")?;
    }
    writeln!(out, "render:")?;
    for (name, kind, what) in registry::RENDERINGS {
        writeln!(out, "  {name:<22} {kind:<14} {what}")?;
    }
    writeln!(out, "verify:")?;
    for s in oracle::SUITES {
        writeln!(out, "  {s}")?;
    }
    writeln!(out, "  all")?;
    Ok(true)
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match cli.command {
        Command::Compute { formula, objects, mode, format } => compute(&formula, objects, mode.as_deref(), format, &mut out),
        Command::Render { formula, objects, mode, format } => render(&formula, objects, mode.as_deref(), format, &mut out),
        Command::Verify { suite, max_n, max_regions, alphabet_size, max_degree, seed, format } => {
            let d = Bounds::default();
            let bounds = Bounds {
                alphabet_size: alphabet_size.unwrap_or(d.alphabet_size),
                max_degree: max_degree.unwrap_or(d.max_degree),
                max_n: max_n.unwrap_or(d.max_n),
                max_regions: max_regions.unwrap_or(d.max_regions),
                seed: seed.unwrap_or(d.seed),
            };
            verify(&suite, &bounds, format, &mut out)
        }
        Command::Sequences { max_n, max_letter, format } => sequences(max_n, max_letter, format, &mut out),
        Command::List => list(&mut out),
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        // a closed pipe (e.g. `| head`) is not an error
        Err(CliError::Io(e)) if e.kind() == io::ErrorKind::BrokenPipe => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("superhook: {e}");
            ExitCode::from(2)
        }
    }
}
