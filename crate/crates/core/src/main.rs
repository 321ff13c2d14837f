use std::fs;
use std::net::TcpListener;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use structedit::forest::Document;
use structedit::session::{replay, serve, trace_jsonl};

#[derive(Parser)]
#[command(name = "structedit", version, about = "Multi-cursor structural editor for MiniScript")]
struct Cli {
    #[command(subcommand)]
    command: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Replay a command script against a source file.
    Run {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        script: PathBuf,
        /// Write one JSON snapshot per step here.
        #[arg(long)]
        trace: Option<PathBuf>,
        /// Write the final text here instead of stdout.
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Serve editing sessions over line-delimited JSON.
    Serve {
        #[arg(long)]
        port: u16,
    },
    /// Pretty-print a source file.
    Fmt {
        #[arg(long)]
        input: PathBuf,
    },
}

fn read(path: &PathBuf) -> Result<String, String> {
    fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))
}

fn write(path: &PathBuf, text: &str) -> Result<(), String> {
    fs::write(path, text).map_err(|e| format!("{}: {e}", path.display()))
}

fn run(cli: Cli) -> Result<(), (u8, String)> {
    let io = |e: String| (1, e);
    match cli.command {
        Cmd::Run { input, script, trace, output } => {
            let source = read(&input).map_err(io)?;
            let script = read(&script).map_err(io)?;
            let result = replay(&source, &script).map_err(|e| (2, e.to_string()))?;
            if let Some(t) = trace {
                write(&t, &trace_jsonl(&result.trace)).map_err(io)?;
            }
            match output {
                Some(o) => write(&o, &result.text).map_err(io)?,
                None => print!("{}", result.text),
            }
        }
        Cmd::Serve { port } => {
            let listener = TcpListener::bind(("127.0.0.1", port)).map_err(|e| (1, e.to_string()))?;
            eprintln!("listening on {}", listener.local_addr().map_err(|e| (1, e.to_string()))?);
            serve(listener).map_err(|e| (1, e.to_string()))?;
        }
        Cmd::Fmt { input } => {
            let source = read(&input).map_err(io)?;
            let doc = Document::parse(&source).map_err(|d| {
                (1, d.iter().map(|d| d.to_string()).collect::<Vec<_>>().join("\n"))
            })?;
            print!("{}", doc.text());
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err((code, msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
