use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use cartan_qec::classifier::classify;
use cartan_qec::code::build_code;
use cartan_qec::io::{
    cartanion_from_json, code_from_json, code_to_json, parse_error_list, read_with,
};
use cartan_qec::oracle;
use cartan_qec::search::{search_code, Strategy};
use cartan_qec::selftest;
use cartan_qec::verifier::{check_correctable, syndrome_table, verdict_scope};
use cartan_qec::{BitString, Error, QuantumCode, SeedOrigin};

const EXIT_OK: u8 = 0;
const EXIT_NEGATIVE: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_VIOLATION: u8 = 3;

#[derive(Parser)]
#[command(
    name = "cartan-qec",
    version,
    about = "Build, verify, classify and search Cartanion-derived quantum codes"
)]
struct Cli {
    /// Worker threads for parallel search (1 = sequential).
    #[arg(long, global = true, env = "CARTAN_QEC_WORKERS", default_value_t = 1)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code JSON from a Cartanion JSON and coset labels.
    Build {
        #[arg(long)]
        cartanion: PathBuf,
        /// Comma-separated labels, the first being all zeros.
        #[arg(long, value_delimiter = ',', required = true)]
        labels: Vec<String>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Print the syndrome table and correctability verdict.
    Verify {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        errors: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Print the type, subgroup flags and linearity of a code.
    Classify {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Search Cartanions for a code correcting an error set.
    Search {
        #[arg(long)]
        errors: PathBuf,
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum, default_value_t = StrategyArg::Exhaustive)]
        strategy: StrategyArg,
        #[arg(long, default_value_t = 100_000)]
        budget: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Write the code JSON here; otherwise it goes to stdout and the
        /// transcript to stderr.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Map an observed syndrome to the error and codeword that produced it.
    Diagnose {
        #[arg(long)]
        code: PathBuf,
        #[arg(long)]
        errors: PathBuf,
        #[arg(long)]
        syndrome: String,
    },
    /// Run the built-in theorem checks and print TAP output.
    Selftest {
        #[arg(long, default_value_t = 5)]
        max_width: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum StrategyArg {
    Exhaustive,
    Random,
}

enum Failure {
    Usage(String),
    Violation(String),
}

impl From<String> for Failure {
    fn from(msg: String) -> Self {
        Failure::Usage(msg)
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Internal(_) => Failure::Violation(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

fn load_code(path: &Path) -> Result<QuantumCode, String> {
    read_with(path, code_from_json)
}

fn write_or_print(out: Option<&Path>, text: &str) -> Result<(), String> {
    match out {
        Some(p) => {
            std::fs::write(p, format!("{text}\n")).map_err(|e| format!("{}: {e}", p.display()))
        }
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

/// Oracle confirmation line for a verdict, or a note when it cannot run.
fn oracle_line(code: &QuantumCode, errs: &cartan_qec::ErrorSet) -> Result<String, Failure> {
    if code.width() > oracle::MAX_PAIRWISE_WIDTH {
        return Ok(format!(
            "oracle skipped: width {} exceeds the oracle cap of {}",
            code.width(),
            oracle::MAX_PAIRWISE_WIDTH
        ));
    }
    if code.seed().origin() == SeedOrigin::CartanionDerived {
        let r = oracle::check_theorem3(code, errs)?;
        if !r.passed() {
            return Err(Failure::Violation(format!(
                "orthogonality check failed: {r}"
            )));
        }
        Ok(format!("oracle: orthogonality matches labels ({r})"))
    } else {
        let r = oracle::report_theorem3(code, errs)?;
        Ok(format!(
            "oracle (report only, {} seed): {r}",
            code.seed().origin()
        ))
    }
}

fn run(cli: Cli) -> Result<u8, Failure> {
    match cli.command {
        Command::Build {
            cartanion,
            labels,
            out,
        } => {
            let c = read_with(&cartanion, cartanion_from_json)?;
            let labels = labels
                .iter()
                .map(|l| BitString::parse(l, c.width()))
                .collect::<Result<Vec<_>, _>>()?;
            let code = build_code(&c, &labels)?;
            write_or_print(out.as_deref(), &code_to_json(&code))?;
            Ok(EXIT_OK)
        }
        Command::Verify { code, errors, json } => {
            let code = load_code(&code)?;
            let errs = read_with(&errors, parse_error_list)?;
            let table = syndrome_table(&code, &errs)?;
            let verdict = check_correctable(&code, &errs)?;
            let oracle_note = oracle_line(&code, &errs)?;
            if json {
                let rows: Vec<_> = (0..table.rows())
                    .flat_map(|i| (0..table.columns()).map(move |j| (i, j)))
                    .map(|(i, j)| {
                        json!({
                            "i": i,
                            "j": j,
                            "error": errs.get(i).to_string(),
                            "codeword_spinor": code.codeword_spinors()[j].to_string(),
                            "label": table.entry(i, j).to_string(),
                        })
                    })
                    .collect();
                let doc = json!({
                    "table": rows,
                    "verdict": verdict,
                    "summary": verdict.to_string(),
                    "scope": verdict_scope(&code),
                    "oracle": oracle_note,
                });
                println!("{}", serde_json::to_string_pretty(&doc).expect("json"));
            } else {
                println!("i\tj\terror\tcodeword_spinor\tlabel");
                for i in 0..table.rows() {
                    for j in 0..table.columns() {
                        println!(
                            "{i}\t{j}\t{}\t{}\t{}",
                            errs.get(i),
                            code.codeword_spinors()[j],
                            table.entry(i, j)
                        );
                    }
                }
                println!("# {oracle_note}");
                println!("verdict\t{verdict}\t{}", verdict_scope(&code));
            }
            Ok(if verdict.is_correctable() {
                EXIT_OK
            } else {
                EXIT_NEGATIVE
            })
        }
        Command::Classify { code, json } => {
            let code = load_code(&code)?;
            let class = classify(&code);
            if json {
                println!("{}", serde_json::to_string_pretty(&class).expect("json"));
            } else {
                println!("{class}");
            }
            Ok(EXIT_OK)
        }
        Command::Search {
            errors,
            k,
            strategy,
            budget,
            seed,
            out,
        } => {
            let errs = read_with(&errors, parse_error_list)?;
            let strategy = match strategy {
                StrategyArg::Exhaustive => Strategy::Exhaustive,
                StrategyArg::Random => Strategy::Random { budget, seed },
            };
            let found = match search_code(&errs, k, strategy, cli.workers) {
                Ok(found) => found,
                Err(e @ Error::NotFound { .. }) => {
                    println!("not-found\t{e}");
                    return Ok(EXIT_NEGATIVE);
                }
                Err(e) => return Err(e.into()),
            };
            let verdict = check_correctable(&found.code, &errs)?;
            if !verdict.is_correctable() {
                return Err(Failure::Violation(format!(
                    "search returned a code with verdict {verdict}"
                )));
            }
            let transcript = format!(
                "candidate\t{}\ngreedy_k\t{}\ngenerators\t{}\nverdict\t{verdict}\n# {}",
                found.candidate_index,
                found.max_k,
                found
                    .code
                    .cartanion()
                    .generators()
                    .iter()
                    .map(|g| g.to_string())
                    .collect::<Vec<_>>()
                    .join(","),
                oracle_line(&found.code, &errs)?
            );
            let doc = code_to_json(&found.code);
            match out {
                Some(path) => {
                    write_or_print(Some(&path), &doc)?;
                    println!("{transcript}");
                }
                None => {
                    println!("{doc}");
                    eprintln!("{transcript}");
                }
            }
            Ok(EXIT_OK)
        }
        Command::Diagnose {
            code,
            errors,
            syndrome,
        } => {
            let code = load_code(&code)?;
            let errs = read_with(&errors, parse_error_list)?;
            let observed = BitString::parse(&syndrome, code.width())?;
            let verdict = check_correctable(&code, &errs)?;
            if !verdict.is_correctable() {
                println!("uncorrectable\t{verdict}");
                return Ok(EXIT_NEGATIVE);
            }
            match cartan_qec::diagnose(&code, &errs, &observed) {
                Ok((i, j)) => {
                    println!("error\t{i}\t{}", errs.get(i));
                    println!("codeword\t{j}\t{}", code.codeword_spinors()[j]);
                    println!("correction\t{}", errs.get(i));
                    Ok(EXIT_OK)
                }
                Err(e @ Error::UnknownSyndrome(_)) => {
                    println!("unknown-syndrome\t{e}");
                    Ok(EXIT_NEGATIVE)
                }
                Err(e) => Err(e.into()),
            }
        }
        Command::Selftest { max_width } => {
            let results = selftest::run(max_width);
            print!("{}", selftest::tap(&results));
            Ok(if results.iter().all(|r| r.passed()) {
                EXIT_OK
            } else {
                EXIT_VIOLATION
            })
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { EXIT_OK });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(EXIT_USAGE)
        }
        Err(Failure::Violation(msg)) => {
            eprintln!("internal violation: {msg}");
            ExitCode::from(EXIT_VIOLATION)
        }
    }
}
