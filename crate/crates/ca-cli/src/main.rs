use std::io::{BufRead, IsTerminal, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use ca_cli::session::{check_source, laws_report, run_source, Session};
use ca_kernel::{parse_type, resolve_type};

#[derive(Parser)]
#[command(name = "ca", version, about = "A small computer-algebra language: exact carriers, partial evaluation, and an object-oriented code generator")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Interactive session
    Repl,
    /// Execute a program file
    Run { file: PathBuf },
    /// Parse and type-check a program file without running it
    Check { file: PathBuf },
    /// Lower a program to object-oriented classes
    Emit {
        file: PathBuf,
        /// Output path (stdout if omitted)
        #[arg(short, long)]
        out: Option<PathBuf>,
    },
    /// Check every law a type claims on seeded random samples
    Laws {
        r#type: String,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn read(path: &Path) -> Result<String, ExitCode> {
    std::fs::read_to_string(path).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        ExitCode::from(2)
    })
}

fn repl() -> ExitCode {
    let stdin = std::io::stdin();
    let interactive = stdin.is_terminal();
    let mut session = Session::new();
    loop {
        if interactive {
            print!("ca> ");
            let _ = std::io::stdout().flush();
        }
        let mut line = String::new();
        match stdin.lock().read_line(&mut line) {
            Ok(0) | Err(_) => break,
            Ok(_) => {}
        }
        let step = session.step(&line);
        for text in &step.out {
            println!("{text}");
        }
        for err in &step.errors {
            eprintln!("{err}");
        }
        if step.quit {
            break;
        }
    }
    ExitCode::SUCCESS
}

fn main() -> ExitCode {
    match Cli::parse().cmd {
        Cmd::Repl => repl(),
        Cmd::Run { file } => {
            let source = match read(&file) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let outcome = run_source(&source);
            print!("{}", outcome.out);
            match outcome.first_error {
                None => ExitCode::SUCCESS,
                Some(err) => {
                    eprintln!("{err}");
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Check { file } => {
            let source = match read(&file) {
                Ok(s) => s,
                Err(code) => return code,
            };
            match check_source(&source) {
                Ok(_) => ExitCode::SUCCESS,
                Err(err) => {
                    eprintln!("{err}");
                    ExitCode::from(1)
                }
            }
        }
        Cmd::Emit { file, out } => {
            let source = match read(&file) {
                Ok(s) => s,
                Err(code) => return code,
            };
            let session = match check_source(&source) {
                Ok(s) => s,
                Err(err) => {
                    eprintln!("{err}");
                    return ExitCode::from(1);
                }
            };
            let text = session.emit_program();
            match out {
                None => {
                    print!("{text}");
                    ExitCode::SUCCESS
                }
                Some(path) => match std::fs::write(&path, text) {
                    Ok(()) => ExitCode::SUCCESS,
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        ExitCode::from(2)
                    }
                },
            }
        }
        Cmd::Laws { r#type, seed } => {
            let report = parse_type(&r#type)
                .and_then(|ty| resolve_type(&ty))
                .and_then(|tag| laws_report(&tag, seed));
            match report {
                Ok(lines) => {
                    for line in lines {
                        println!("{line}");
                    }
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
    }
}
