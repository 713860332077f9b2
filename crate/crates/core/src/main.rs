//! `ci-hamilton`: invariants of complete intersections and circle-action
//! obstruction checks from the command line.
//!
//! Exit codes: 0 on success / all checks passed, 1 when a check failed,
//! 2 on invalid input. Data goes to stdout, diagnostics to stderr. The
//! environment variable `CI_HAMILTON_THREADS` caps scan parallelism.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use ci_hamilton::error::Error;
use ci_hamilton::hamiltonian::{enumerate_fixed_point_data, EnumerationBounds};
use ci_hamilton::intersection::{BettiProfile, CompleteIntersection};
use ci_hamilton::report::InvariantsReport;
use ci_hamilton::scan::{self, ScanBranch, ScanRequest};
use ci_hamilton::verify::{run_verification, FixedPointDocument};

#[derive(Parser)]
#[command(
    name = "ci-hamilton",
    version,
    about = "Topological invariants of smooth complete intersections and the circle-action \
             obstructions they decide"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Invariants and verdicts for one complete intersection
    Invariants {
        /// Complex dimension
        n: u32,
        /// Hypersurface degrees (degree-1 entries are dropped)
        degrees: Vec<u32>,
        /// Emit machine-readable JSON instead of text
        #[arg(long)]
        json: bool,
    },
    /// Classify every normalized multidegree in a range
    Scan {
        /// Branch: 0 checks dimensions 8k, 4 checks dimensions 8k+4
        #[arg(long = "dim-mod8", value_parser = parse_dim_mod8)]
        dim_mod8: ScanBranch,
        /// Largest complex dimension to include
        #[arg(long)]
        max_n: u32,
        /// Largest number of hypersurfaces
        #[arg(long)]
        max_r: u32,
        /// Largest hypersurface degree
        #[arg(long)]
        max_degree: u32,
        /// Emit JSON
        #[arg(long, conflicts_with = "csv")]
        json: bool,
        /// Emit CSV
        #[arg(long)]
        csv: bool,
    },
    /// Check fixed-point data from a JSON document against its target
    VerifyFixedPoints {
        /// Path to the document
        file: PathBuf,
        /// Emit JSON
        #[arg(long)]
        json: bool,
    },
    /// Enumerate fixed-point data consistent with a target profile
    Enumerate(EnumerateArgs),
}

#[derive(Args)]
struct EnumerateArgs {
    /// Complex dimension of a complete intersection target
    #[arg(long, conflicts_with = "betti")]
    n: Option<u32>,
    /// Degrees of the complete intersection target
    #[arg(long, value_delimiter = ',', requires = "n")]
    degrees: Vec<u32>,
    /// Explicit target Betti numbers b_0,...,b_2m
    #[arg(long, value_delimiter = ',')]
    betti: Option<Vec<u64>>,
    /// Cap on components per solution (default: the number the target's
    /// even Betti numbers add up to)
    #[arg(long)]
    max_components: Option<usize>,
    /// Search submanifold components too, not just isolated points
    #[arg(long)]
    allow_positive_dim: bool,
    /// Emit JSON
    #[arg(long)]
    json: bool,
}

fn parse_dim_mod8(raw: &str) -> Result<ScanBranch, String> {
    raw.parse::<u8>()
        .ok()
        .and_then(ScanBranch::from_dim_mod8)
        .ok_or_else(|| "expected 0 or 4".to_string())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {}", err);
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Invariants { n, degrees, json } => {
            let ci = CompleteIntersection::new(n, degrees)?;
            let report = InvariantsReport::for_intersection(&ci);
            if json {
                println!("{}", to_json(&report));
            } else {
                print!("{}", report.render_text());
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Scan {
            dim_mod8,
            max_n,
            max_r,
            max_degree,
            json,
            csv,
        } => {
            let request = ScanRequest {
                branch: dim_mod8,
                max_n,
                max_r,
                max_degree,
            };
            let result = scan_pool()?.install(|| scan::run_scan(&request));
            if json {
                println!("{}", to_json(&result));
            } else if csv {
                print!("{}", scan::format_csv(&result));
                eprintln!("{}", scan::summary_line(&result, request.branch));
            } else {
                print!("{}", scan::format_table(&result, request.branch));
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::VerifyFixedPoints { file, json } => {
            let text = std::fs::read_to_string(&file)
                .map_err(|e| Error::ParseError(format!("cannot read {}: {}", file.display(), e)))?;
            let document = FixedPointDocument::from_json(&text)?;
            let report = run_verification(&document)?;
            if json {
                println!("{}", to_json(&report));
            } else {
                print_verification_text(&report);
            }
            Ok(if report.all_pass() {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            })
        }
        Command::Enumerate(args) => run_enumerate(args),
    }
}

/// Build the rayon pool for scans, honoring `CI_HAMILTON_THREADS`.
fn scan_pool() -> Result<rayon::ThreadPool, Error> {
    let threads = match std::env::var("CI_HAMILTON_THREADS") {
        Ok(raw) => match raw.parse::<usize>() {
            Ok(v) if v >= 1 => Some(v),
            _ => {
                return Err(Error::ParseError(format!(
                    "CI_HAMILTON_THREADS must be a positive integer, got {:?}",
                    raw
                )))
            }
        },
        Err(_) => None,
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads.unwrap_or(0))
        .build()
        .map_err(|e| Error::ParseError(format!("cannot build thread pool: {}", e)))
}

fn run_enumerate(args: EnumerateArgs) -> Result<ExitCode, Error> {
    let target = match (&args.betti, args.n) {
        (Some(betti), _) => BettiProfile::new(betti.clone())?,
        (None, Some(n)) => CompleteIntersection::new(n, args.degrees.clone())?.betti_profile(),
        (None, None) => {
            return Err(Error::InvalidBettiProfile(
                "specify a target with --betti or with --n/--degrees".to_string(),
            ))
        }
    };
    let even_sum: u64 = target.betti().iter().step_by(2).sum();
    let max_components = match args.max_components {
        Some(m) => m,
        None => usize::try_from(even_sum).unwrap_or(usize::MAX),
    };
    const COMPONENT_CAP: usize = 100_000;
    if max_components > COMPONENT_CAP {
        return Err(Error::IndexOutOfRange(format!(
            "search needs up to {} components, above the cap {}; pass a smaller --max-components",
            max_components, COMPONENT_CAP
        )));
    }
    let bounds = EnumerationBounds {
        max_components,
        allow_positive_dim: args.allow_positive_dim,
    };
    let result = enumerate_fixed_point_data(&target, &bounds);
    if result.truncated {
        eprintln!(
            "warning: search truncated at {} components; results may be partial",
            bounds.max_components
        );
    }
    if args.json {
        #[derive(serde::Serialize)]
        struct EnumerationOut<'a> {
            target: &'a BettiProfile,
            solutions: &'a [ci_hamilton::hamiltonian::FixedPointData],
            count: usize,
            truncated: bool,
        }
        println!(
            "{}",
            to_json(&EnumerationOut {
                target: &target,
                solutions: &result.solutions,
                count: result.solutions.len(),
                truncated: result.truncated,
            })
        );
    } else {
        for solution in &result.solutions {
            println!("{}", solution);
        }
        println!(
            "count: {}{}",
            result.solutions.len(),
            if result.truncated { " (truncated)" } else { "" }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn print_verification_text(report: &ci_hamilton::verify::VerificationReport) {
    println!("target: {}", report.target);
    if report.localisation.passes() {
        println!("betti localisation: pass");
    } else {
        println!("betti localisation: FAIL");
        for (degree, residual) in report.localisation.mismatches() {
            println!("  residual at degree {}: {}", degree, residual);
        }
    }
    for check in &report.component_checks {
        println!(
            "component check for {}: {}",
            check.component,
            if check.pass { "pass" } else { "FAIL" }
        );
    }
    println!(
        "sigma = {}, alternating sum = {}",
        report.fixed_point_signature, report.alternating_even_sum
    );
    match report.signature_identity.status() {
        ci_hamilton::hamiltonian::SignatureIdentityStatus::Verified => {
            println!("signature identity: verified");
        }
        ci_hamilton::hamiltonian::SignatureIdentityStatus::IdentityFails => {
            println!("signature identity: FAIL");
        }
        ci_hamilton::hamiltonian::SignatureIdentityStatus::NotApplicable { reason } => {
            println!("signature identity: not applicable ({})", reason);
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("reports always serialize")
}
