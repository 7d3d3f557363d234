use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use fza_core::oracle::{self, Verdict};
use fza_core::{format, transforms, Limits, Machine, Value};
use serde_json::json;

#[derive(Parser)]
#[command(
    name = "fza",
    version,
    about = "Evaluate, convert and compare max-min fuzzy automata"
)]
struct Cli {
    #[command(flatten)]
    limits: LimitArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct LimitArgs {
    /// Largest distribution set an evaluation or conversion may build
    #[arg(long, global = true, value_name = "N")]
    max_set_size: Option<usize>,
    /// Runs the oracle may explore per string
    #[arg(long, global = true, value_name = "N")]
    max_runs: Option<u64>,
    /// Strings an enumeration may visit
    #[arg(long, global = true, value_name = "N")]
    max_strings: Option<u64>,
}

impl LimitArgs {
    fn resolve(&self) -> Limits {
        let d = Limits::default();
        Limits {
            max_set_size: self.max_set_size.unwrap_or(d.max_set_size),
            max_runs: self.max_runs.unwrap_or(d.max_runs),
            max_strings: self.max_strings.unwrap_or(d.max_strings),
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Check that a machine file is well formed
    Validate { file: PathBuf },
    /// Print the degree to which a string is accepted
    #[command(group = clap::ArgGroup::new("string").required(true).args(["input", "empty"]))]
    Eval {
        file: PathBuf,
        /// Whitespace-separated symbols
        #[arg(long)]
        input: Option<String>,
        /// Evaluate the empty string
        #[arg(long)]
        empty: bool,
        /// Use the run-enumeration oracle and check it against the recursive semantics
        #[arg(long)]
        oracle: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Convert an nfa into an equivalent dfa
    Determinize {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Convert an enfa into an equivalent nfa
    RmEpsilon {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
        /// Drop every distribution contained in another one of the same transition
        #[arg(long)]
        prune: bool,
    },
    /// Convert an enfa into an equivalent dfa
    Compile {
        file: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Compare two machines on every string up to a length bound
    Equiv {
        left: PathBuf,
        right: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
    /// Tabulate the language up to a length bound
    Language {
        file: PathBuf,
        #[arg(long, value_name = "N")]
        max_len: usize,
        /// Omit strings with degree 0
        #[arg(long)]
        nonzero: bool,
        /// Print the empty string as <eps> instead of ε
        #[arg(long)]
        ascii: bool,
        #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
        format: OutputFormat,
    },
}

fn load(path: &Path) -> Result<Machine> {
    let text =
        fs::read_to_string(path).with_context(|| format!("cannot read {}", path.display()))?;
    format::parse(&text).with_context(|| path.display().to_string())
}

fn emit(machine: &Machine, output: Option<&Path>) -> Result<()> {
    let text = format::serialize(machine);
    match output {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("cannot write {}", path.display()))
        }
        None => Ok(io::stdout().write_all(text.as_bytes())?),
    }
}

fn tokens(input: Option<&str>) -> Result<Vec<String>> {
    let Some(input) = input else {
        return Ok(Vec::new());
    };
    let tokens: Vec<String> = input.split_whitespace().map(str::to_owned).collect();
    if tokens.is_empty() {
        bail!("--input is blank; use --empty for the empty string");
    }
    Ok(tokens)
}

fn show(input: &[String], ascii: bool) -> String {
    match (input.is_empty(), ascii) {
        (false, _) => input.join(" "),
        (true, false) => "ε".to_owned(),
        (true, true) => "<eps>".to_owned(),
    }
}

fn eval(machine: &Machine, input: &[String], use_oracle: bool, limits: &Limits) -> Result<Value> {
    let degree = machine.evaluator(*limits)?.degree(input)?;
    if use_oracle {
        let checked = oracle::run_degree(machine, input, limits)?;
        if checked != degree {
            bail!("oracle degree {checked} disagrees with recursive degree {degree}");
        }
    }
    Ok(degree)
}

fn report_verdict(verdict: &Verdict, fmt: OutputFormat) -> ExitCode {
    if fmt == OutputFormat::Json {
        let cx = verdict.counterexample.as_ref().map(|c| {
            json!({ "input": c.input, "left": c.left.to_string(), "right": c.right.to_string() })
        });
        let body = json!({
            "equivalent": verdict.is_equivalent(),
            "max_len": verdict.bound,
            "counterexample": cx,
        });
        println!("{body}");
    } else {
        match &verdict.counterexample {
            None => println!("equivalent up to {}", verdict.bound),
            Some(c) => println!(
                "not equivalent: {}\t{}\t{}",
                show(&c.input, false),
                c.left,
                c.right
            ),
        }
    }
    if verdict.is_equivalent() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run(cli: Cli) -> Result<ExitCode> {
    let limits = cli.limits.resolve();
    match cli.command {
        Command::Validate { file } => {
            let m = load(&file)?;
            println!(
                "ok: {}, |Q|={}, |Σ|={}",
                m.kind(),
                m.states().len(),
                m.alphabet().len()
            );
        }
        Command::Eval {
            file,
            input,
            empty: _,
            oracle,
            format,
        } => {
            let m = load(&file)?;
            let input = tokens(input.as_deref())?;
            let degree = eval(&m, &input, oracle, &limits)?;
            match format {
                OutputFormat::Text => println!("{degree}"),
                OutputFormat::Json => {
                    println!(
                        "{}",
                        json!({ "input": input, "degree": degree.to_string() })
                    )
                }
            }
        }
        Command::Determinize { file, output } => {
            let nfa = load(&file)?.into_nfa()?;
            emit(&transforms::determinize(&nfa).into(), output.as_deref())?;
        }
        Command::RmEpsilon {
            file,
            output,
            prune,
        } => {
            let enfa = load(&file)?.into_enfa()?;
            let mut nfa = transforms::eliminate_epsilon_with(&enfa, &limits)?;
            if prune {
                nfa = transforms::prune_nfa(&nfa);
            }
            emit(&nfa.into(), output.as_deref())?;
        }
        Command::Compile { file, output } => {
            let enfa = load(&file)?.into_enfa()?;
            emit(
                &transforms::compile_with(&enfa, &limits)?.into(),
                output.as_deref(),
            )?;
        }
        Command::Equiv {
            left,
            right,
            max_len,
            format,
        } => {
            let (l, r) = (load(&left)?, load(&right)?);
            let verdict = oracle::equiv_up_to(&l, &r, max_len, &limits)?;
            return Ok(report_verdict(&verdict, format));
        }
        Command::Language {
            file,
            max_len,
            nonzero,
            ascii,
            format,
        } => {
            let m = load(&file)?;
            let rows: Vec<_> = oracle::enumerate_language(&m, max_len, &limits)?
                .into_iter()
                .filter(|e| !(nonzero && e.degree.is_zero()))
                .collect();
            let mut out = io::stdout().lock();
            match format {
                OutputFormat::Text => {
                    for e in &rows {
                        writeln!(out, "{}\t{}", show(&e.input, ascii), e.degree)?;
                    }
                }
                OutputFormat::Json => writeln!(out, "{}", serde_json::to_string(&rows)?)?,
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    run(cli).unwrap_or_else(|e| {
        eprintln!("error: {e:#}");
        ExitCode::from(2)
    })
}
