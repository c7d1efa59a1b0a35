use std::io::{self, BufRead, IsTerminal, Write};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use qtower::cli::{exit_status, load_tower, run_script, OutputMode, Session, Settings, DEFAULT_PRECISION};
use qtower::Tower;

#[derive(Parser)]
#[command(name = "qtower", version, about = "Exact arithmetic in towers of real quadratic extensions of Q")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct SessionFlags {
    /// Tower file to preload.
    #[arg(long)]
    tower: Option<String>,
    /// Working precision in bits for decimal output.
    #[arg(long, default_value_t = DEFAULT_PRECISION)]
    precision: u32,
    /// Output mode: coords, decimal or both.
    #[arg(long, default_value = "both", value_parser = parse_mode)]
    mode: OutputMode,
}

fn parse_mode(s: &str) -> Result<OutputMode, String> {
    s.parse().map_err(|e: qtower::Error| e.to_string())
}

#[derive(Subcommand)]
enum Command {
    /// Interactive session; errors are reported and the session continues.
    Repl {
        #[command(flatten)]
        flags: SessionFlags,
    },
    /// Run a script of commands, stopping at the first error.
    Run {
        script: String,
        #[command(flatten)]
        flags: SessionFlags,
        /// Do not echo commands.
        #[arg(long)]
        quiet: bool,
    },
    /// Constructibility verdict for a rational cubic, e.g. "[-2, 0, 0, 1]".
    Verdict { poly: String },
    /// Rational Root Theorem candidates for a rational cubic.
    Rrt { poly: String },
    /// Evaluate an expression in a tower.
    Eval {
        expr: String,
        #[command(flatten)]
        flags: SessionFlags,
    },
}

fn session(flags: &SessionFlags) -> Result<Session, ExitCode> {
    let tower = match &flags.tower {
        Some(path) => load_tower(path).map_err(|e| {
            eprintln!("{}", e.render());
            ExitCode::from(2)
        })?,
        None => Tower::rationals(),
    };
    Ok(Session::new(
        tower,
        Settings {
            precision: flags.precision.max(1),
            mode: flags.mode,
        },
    ))
}

fn one_shot(mut session: Session, command: &str) -> ExitCode {
    match session.execute(command) {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("{}", e.render());
            ExitCode::from(exit_status(&e) as u8)
        }
    }
}

fn repl(mut session: Session) -> ExitCode {
    let stdin = io::stdin();
    let interactive = stdin.is_terminal();
    let mut out = io::stdout();
    loop {
        if interactive {
            let _ = write!(out, "qtower> ");
            let _ = out.flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) => return ExitCode::SUCCESS,
            Ok(_) => {}
            Err(e) => {
                eprintln!("IoError: {e}");
                return ExitCode::from(2);
            }
        }
        let line = line.trim();
        if line == "quit" || line == "exit" {
            return ExitCode::SUCCESS;
        }
        match session.execute(line) {
            Ok(text) if text.is_empty() => {}
            Ok(text) => println!("{text}"),
            Err(e) => println!("{}", e.render()),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Repl { flags } => match session(&flags) {
            Ok(s) => repl(s),
            Err(code) => code,
        },
        Command::Run {
            script,
            flags,
            quiet,
        } => {
            let text = match std::fs::read_to_string(&script) {
                Ok(t) => t,
                Err(e) => {
                    eprintln!("IoError: cannot read {script}: {e}");
                    return ExitCode::from(2);
                }
            };
            let mut s = match session(&flags) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let (status, transcript) = run_script(&mut s, &text, quiet);
            print!("{transcript}");
            ExitCode::from(status as u8)
        }
        Command::Verdict { poly } => one_shot(Session::default(), &format!("verdict {poly}")),
        Command::Rrt { poly } => one_shot(Session::default(), &format!("rrt {poly}")),
        Command::Eval { expr, flags } => match session(&flags) {
            Ok(s) => one_shot(s, &format!("eval {expr}")),
            Err(code) => code,
        },
    }
}
