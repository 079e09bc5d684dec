use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use matroid_t1::cotangent::{dim_t1, t1_table};
use matroid_t1::io::{
    complex_to_json, entry_json, entry_tsv, parse_complex, parse_table, table_to_json,
    table_to_tsv, tsv_header,
};
use matroid_t1::matroid::{
    is_discrete, is_matroid_circuit_elimination, is_matroid_exchange, is_matroid_unique_min,
};
use matroid_t1::recognition::{formula_discrepancies, matroid_witness_via_t1};
use matroid_t1::reconstruction::reconstruct;
use matroid_t1::verify::run_all;
use matroid_t1::{MultiDegree, SimplicialComplex};

/// Graded T¹ dimensions of Stanley–Reisner rings, matroid recognition and reconstruction.
#[derive(Debug, Parser)]
#[command(name = "matroid-t1", version)]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print the T¹ table, or the dimension at one degree.
    T1 {
        complex: PathBuf,
        /// Degree as "A;b", e.g. "1;2,3" or ";4,5".
        #[arg(long, value_parser = parse_degree)]
        degree: Option<MultiDegree>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
    /// Decide whether a complex is a matroid.
    IsMatroid {
        complex: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Exchange)]
        method: Method,
    },
    /// Degrees where the circuit formula disagrees with the graph count.
    Discrepancies { complex: PathBuf },
    /// Rebuild a matroid from its T¹ table.
    Reconstruct { table: PathBuf },
    /// DISCRETE, RIGID, or NONRIGID with the first nonzero degree.
    Rigidity { complex: PathBuf },
    /// Minimal nonfaces, one per line.
    Circuits { complex: PathBuf },
    /// Check every invariant over all complexes on at most `max_n` vertices.
    Census {
        #[arg(long)]
        max_n: usize,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Format {
    Json,
    Tsv,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum Method {
    Exchange,
    Circuits,
    UniqueMin,
    T1,
}

fn parse_degree(text: &str) -> Result<MultiDegree, String> {
    text.parse().map_err(|e: matroid_t1::Error| e.to_string())
}

#[derive(Debug)]
enum Failure {
    Domain(matroid_t1::Error),
    Read(PathBuf, std::io::Error),
}

impl From<matroid_t1::Error> for Failure {
    fn from(e: matroid_t1::Error) -> Self {
        Failure::Domain(e)
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Read(path.to_path_buf(), e))
}

fn load_complex(path: &Path) -> Result<SimplicialComplex, Failure> {
    Ok(parse_complex(&read(path)?)?)
}

fn set_json(s: matroid_t1::VertexSet) -> String {
    serde_json::to_string(&s).expect("vertex sets serialize")
}

/// Runs one command; `Ok(false)` means it completed but reported a failure.
fn execute(command: Command) -> Result<bool, Failure> {
    match command {
        Command::T1 {
            complex,
            degree,
            format,
        } => {
            let delta = load_complex(&complex)?;
            match (degree, format) {
                (Some(d), Format::Json) => println!("{}", entry_json(&d, dim_t1(&delta, d)?)),
                (Some(d), Format::Tsv) => {
                    println!("{}\n{}", tsv_header(), entry_tsv(&d, dim_t1(&delta, d)?))
                }
                (None, Format::Json) => print!("{}", table_to_json(&t1_table(&delta)?)),
                (None, Format::Tsv) => print!("{}", table_to_tsv(&t1_table(&delta)?)),
            }
        }
        Command::IsMatroid { complex, method } => {
            let delta = load_complex(&complex)?;
            let verdict = match method {
                Method::Exchange => is_matroid_exchange(&delta)?.to_string(),
                Method::Circuits => is_matroid_circuit_elimination(&delta)?.to_string(),
                Method::UniqueMin => is_matroid_unique_min(&delta)?.to_string(),
                Method::T1 => match matroid_witness_via_t1(&delta)? {
                    None => "true".to_string(),
                    Some(v) => format!("false (witness vertex {v})"),
                },
            };
            println!("{verdict}");
        }
        Command::Discrepancies { complex } => {
            for d in formula_discrepancies(&load_complex(&complex)?)? {
                println!(
                    "{{\"A\":{},\"b\":{},\"graph_dim\":{},\"formula_dim\":{}}}",
                    set_json(d.degree.positive()),
                    set_json(d.degree.negative()),
                    d.graph_dim,
                    d.formula_dim
                );
            }
        }
        Command::Reconstruct { table } => {
            let rebuilt = reconstruct(&parse_table(&read(&table)?)?)?;
            println!("{}", complex_to_json(&rebuilt));
        }
        Command::Rigidity { complex } => {
            let delta = load_complex(&complex)?;
            let table = t1_table(&delta)?;
            match table.first() {
                Some((d, dim)) => println!("NONRIGID {}", entry_json(d, *dim)),
                None if is_matroid_exchange(&delta)? && is_discrete(&delta)? => {
                    println!("DISCRETE")
                }
                None => println!("RIGID"),
            }
        }
        Command::Circuits { complex } => {
            for c in load_complex(&complex)?.minimal_nonfaces()? {
                println!("{}", set_json(c));
            }
        }
        Command::Census { max_n } => {
            let reports = run_all(max_n)?;
            let mut all_passed = true;
            for report in &reports {
                if report.passed() {
                    println!("PASS {} ({} instances)", report.name, report.instances);
                } else {
                    all_passed = false;
                    println!(
                        "FAIL {} ({} of {} instances)",
                        report.name,
                        report.violations.len(),
                        report.instances
                    );
                    for v in report.violations.iter().take(5) {
                        println!("  {v}");
                    }
                }
            }
            return Ok(all_passed);
        }
    }
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(threads) = cli.threads {
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
        {
            eprintln!("error[Threads]: {e}");
            return ExitCode::from(2);
        }
    }
    match execute(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Domain(e)) => {
            eprintln!("error[{}]: {e}", e.code());
            ExitCode::from(1)
        }
        Err(Failure::Read(path, e)) => {
            eprintln!("error[Read]: {}: {e}", path.display());
            ExitCode::from(1)
        }
    }
}
