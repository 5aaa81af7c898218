use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use lff::suites::{lookup, run_suite, SuiteOptions, SUITES};
use lff::{parse_session, run, Style};

#[derive(Parser)]
#[command(name = "lff", version, about = "Exact local L-factors for GL(n)")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the commands of a session file.
    Run { file: PathBuf },
    /// Run a verification suite by name or number, or `all`.
    VerifySuite {
        name: String,
        #[arg(long)]
        max_n: Option<u32>,
        #[arg(long)]
        jobs: Option<usize>,
    },
    /// Print a session file in canonical form.
    Fmt { file: PathBuf },
}

fn read(file: &PathBuf) -> Result<String, ExitCode> {
    std::fs::read_to_string(file).map_err(|e| {
        eprintln!("error: {}: {e}", file.display());
        ExitCode::from(2)
    })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let style = Style::from_env();
    match cli.cmd {
        Cmd::Run { file } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(c) => return c,
            };
            let session = match parse_session(&text) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    return ExitCode::from(2);
                }
            };
            let report = run(&session, &style);
            print!("{}", report.text);
            if report.ok() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Cmd::Fmt { file } => {
            let text = match read(&file) {
                Ok(t) => t,
                Err(c) => return c,
            };
            match parse_session(&text) {
                Ok(s) => {
                    print!("{s}");
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {}: {e}", file.display());
                    ExitCode::from(2)
                }
            }
        }
        Cmd::VerifySuite { name, max_n, jobs } => {
            let ids: Vec<u8> = if name == "all" {
                SUITES.iter().map(|s| s.0).collect()
            } else {
                match lookup(&name) {
                    Some((id, _)) => vec![id],
                    None => {
                        let names: Vec<&str> = SUITES.iter().map(|s| s.1).collect();
                        eprintln!("error: unknown suite `{name}` (known: {}, all)", names.join(", "));
                        return ExitCode::from(2);
                    }
                }
            };
            let pool = match rayon::ThreadPoolBuilder::new().num_threads(jobs.unwrap_or(0)).build() {
                Ok(p) => p,
                Err(e) => {
                    eprintln!("error: {e}");
                    return ExitCode::from(2);
                }
            };
            let opts = SuiteOptions { max_n };
            let mut ok = true;
            for id in ids {
                let out = pool.install(|| run_suite(id, &opts)).expect("known suite");
                let tag = if out.passed() { style.pass("PASS") } else { style.fail("FAIL") };
                println!("{tag} suite {} ({}): {} cases, {} failures", out.id, out.name, out.cases, out.failures.len());
                for n in &out.notes {
                    println!("  note: {n}");
                }
                for f in out.failures.iter().take(20) {
                    println!("  {f}");
                }
                ok &= out.passed();
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
    }
}
