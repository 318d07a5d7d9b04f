//! `mt`: command-line front end for scenes, queries and law suites.
//!
//! Exit codes: 0 true or pass, 1 false or fail, 2 unknown, 3 diagnostic.
//! Usage errors count as diagnostics.

use std::fs;
use std::io::{self, IsTerminal};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use mereotopo::dsl::{
    eval_text, parse_scene, render_svg, repl, run_suite, Diagnostic, Scene, SuiteName, SuiteOptions, SvgOptions,
    EXIT_DIAGNOSTIC, EXIT_TRUE,
};
use mereotopo::geom::Budget;

#[derive(Parser)]
#[command(name = "mt", version, about = "Mereotopology scenes, queries and law suites")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Parse a scene file and print it in canonical form.
    Parse { file: PathBuf },
    /// Evaluate one query against a scene.
    Eval {
        file: PathBuf,
        #[arg(short = 'q', long = "query")]
        query: String,
        /// Subdivision depth for region part-of.
        #[arg(long, default_value_t = 12)]
        budget: u32,
    },
    /// Run a law suite: mereo, regopen, geometry or kuratowski-all.
    Check {
        suite: String,
        #[arg(long, default_value_t = 100)]
        cases: usize,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 12)]
        budget: u32,
    },
    /// Draw a scene as SVG.
    Render {
        file: PathBuf,
        /// Output path; standard output when omitted.
        #[arg(short = 'o', long = "output")]
        output: Option<PathBuf>,
        #[arg(long, default_value_t = 480)]
        width: u32,
        #[arg(long)]
        no_labels: bool,
    },
    /// Read queries from standard input, one per line.
    Repl {
        file: PathBuf,
        #[arg(long, default_value_t = 12)]
        budget: u32,
    },
}

fn code(c: i32) -> ExitCode {
    ExitCode::from(c as u8)
}

fn diagnostic(origin: &str, d: &Diagnostic) -> ExitCode {
    eprintln!("{origin}:{}:{}", d.line, d.column);
    eprintln!("{d}");
    code(EXIT_DIAGNOSTIC)
}

fn failure(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    code(EXIT_DIAGNOSTIC)
}

fn load(path: &Path) -> Result<Scene, ExitCode> {
    let text = fs::read_to_string(path).map_err(|e| failure(format!("{}: {e}", path.display())))?;
    parse_scene(&text).map_err(|d| diagnostic(&path.display().to_string(), &d))
}

fn run(cmd: Command) -> Result<ExitCode, ExitCode> {
    match cmd {
        Command::Parse { file } => {
            print!("{}", load(&file)?);
            Ok(code(EXIT_TRUE))
        }
        Command::Eval { file, query, budget } => {
            let scene = load(&file)?;
            let e = eval_text(&scene, &query, budget).map_err(|d| diagnostic("query", &d))?;
            println!("{e}");
            Ok(code(e.exit_code()))
        }
        Command::Check {
            suite,
            cases,
            seed,
            budget,
        } => {
            let name: SuiteName = suite.parse().map_err(failure)?;
            let budget = Budget::new(budget).map_err(failure)?;
            if cases == 0 {
                return Err(failure("cases must be at least 1"));
            }
            let report = run_suite(name, &SuiteOptions { cases, seed, budget });
            println!("{report}");
            Ok(code(report.exit_code()))
        }
        Command::Render {
            file,
            output,
            width,
            no_labels,
        } => {
            let scene = load(&file)?;
            let opts = SvgOptions {
                width,
                labels: !no_labels,
                ..SvgOptions::default()
            };
            let svg = render_svg(&scene, &opts);
            match output {
                Some(out) => fs::write(&out, svg).map_err(|e| failure(format!("{}: {e}", out.display())))?,
                None => print!("{svg}"),
            }
            Ok(code(EXIT_TRUE))
        }
        Command::Repl { file, budget } => {
            let scene = load(&file)?;
            let stdin = io::stdin();
            let prompt = stdin.is_terminal().then_some("mt> ");
            repl(&scene, budget, stdin.lock(), io::stdout().lock(), prompt).map_err(failure)?;
            Ok(code(EXIT_TRUE))
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { code(EXIT_DIAGNOSTIC) } else { code(EXIT_TRUE) };
        }
    };
    run(cli.command).unwrap_or_else(|c| c)
}
