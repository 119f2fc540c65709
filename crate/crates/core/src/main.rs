use clap::{Args, Parser, Subcommand};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;
use workbench::cli::{emit_report, load_workspace, run, Command, Format, Theorem, What};
use workbench::suites::Bounds;
use workbench::Error;

/// Checks and translates finite monads, internal categories and T-categories.
#[derive(Parser)]
#[command(name = "workbench", version)]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Args)]
struct Common {
    /// Workspace documents, merged in order
    files: Vec<PathBuf>,
    /// Longest word kept by the list monad
    #[arg(long, default_value_t = 4)]
    grade_bound: usize,
    /// Largest probe set used by law checks
    #[arg(long, default_value_t = 3)]
    probe_size: usize,
    #[arg(long, value_enum, default_value_t = Format::Plain)]
    format: Format,
    /// Write the report here instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Certify every structure in the workspace, or the one named
    Validate {
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        common: Common,
    },
    /// Cartesianness certificate of a monad (a workspace name, or identity,
    /// maybe, writer, list)
    Certify {
        #[arg(long)]
        monad: String,
        #[command(flatten)]
        common: Common,
    },
    /// Translate a structure and add the result to the workspace
    Translate {
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        input: String,
        /// Name of the result; defaults to INPUT-THEOREM
        #[arg(long = "as")]
        as_name: Option<String>,
        #[arg(long)]
        monad: Option<String>,
        /// Save the extended workspace as a document
        #[arg(long)]
        save: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Count structures up to a size bound
    Enumerate {
        #[arg(long, value_enum)]
        what: What,
        #[arg(long, default_value_t = 2)]
        objects: usize,
        #[arg(long, default_value_t = 3)]
        arrows: usize,
        #[arg(long, default_value_t = 2)]
        size: usize,
        /// Category or T-category to enumerate over
        #[arg(long)]
        over: Option<String>,
        #[arg(long)]
        monad: Option<String>,
        /// List the structures as well as counting them
        #[arg(long)]
        list: bool,
        #[command(flatten)]
        common: Common,
    },
    /// Run an acceptance suite, or all of them
    Suite {
        #[arg(long)]
        name: Option<String>,
        #[command(flatten)]
        common: Common,
    },
}

fn input_error(e: impl std::fmt::Display) -> ExitCode {
    eprintln!("workbench: {e}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (cmd, common, save) = match cli.command {
        Cmd::Validate { name, common } => (Command::Validate { name }, common, None),
        Cmd::Certify { monad, common } => (Command::Certify { monad }, common, None),
        Cmd::Translate { theorem, input, as_name, monad, save, common } => {
            (Command::Translate { theorem, input, as_name, monad }, common, save)
        }
        Cmd::Enumerate { what, objects, arrows, size, over, monad, list, common } => {
            (Command::Enumerate { what, objects, arrows, size, over, monad, list }, common, None)
        }
        Cmd::Suite { name, common } => (Command::Suite { name }, common, None),
    };
    let bounds = Bounds { grade_bound: common.grade_bound, probe_size: common.probe_size };
    let start = Instant::now();
    let mut ws = match load_workspace(&common.files, &bounds) {
        Ok(ws) => ws,
        Err(e) => return input_error(e),
    };
    let mut report = match run(&cmd, &mut ws, &bounds) {
        Ok(r) => r,
        Err(e @ (Error::Law { .. } | Error::NotA { .. } | Error::Precondition(_))) => {
            eprintln!("workbench: {e}");
            return ExitCode::from(1);
        }
        Err(e) => return input_error(e),
    };
    report.elapsed = Some(start.elapsed());
    if let Some(path) = save {
        let doc = ws.to_document();
        let text = serde_json::to_string_pretty(&doc).expect("documents serialize") + "\n";
        if let Err(e) = std::fs::write(&path, text) {
            return input_error(format!("{}: {e}", path.display()));
        }
    }
    let text = emit_report(&report, common.format);
    match &common.out {
        Some(p) => {
            if let Err(e) = std::fs::write(p, &text) {
                return input_error(format!("{}: {e}", p.display()));
            }
        }
        None => print!("{text}"),
    }
    eprintln!("finished in {:.2}s", report.elapsed.unwrap_or_default().as_secs_f64());
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}
