use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hyperspectra::spectral::DEFAULT_TOL;
use hyperspectra::Hypergraph;
use hyperspectra_verify::commands::{self, FamilyArgs};
use hyperspectra_verify::registry::{registry, verify, Params};
use hyperspectra_verify::report::{emit_report, Format};
use hyperspectra_verify::Result;

#[derive(Parser)]
#[command(
    name = "hyperspectra",
    version,
    about = "Spectral radius of linear uniform hypergraphs"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Generate a named family as hypergraph JSON.
    Gen {
        /// path, cycle, star, td, uc, ulc, bc, b2c, t1c, t2c
        family: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        /// Pendant bundle `position:count` (td, uc); repeatable.
        #[arg(long, value_parser = parse_pair)]
        attach: Vec<(usize, usize)>,
        /// Positional pendant counts (ulc, bc, b2c, t1c, t2c), comma separated.
        #[arg(long, value_delimiter = ',')]
        counts: Vec<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// λ₁ by power iteration.
    Radius {
        file: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Full adjacency spectrum.
    Spectrum { file: PathBuf },
    /// Exact characteristic polynomial of (m−1)A.
    Charpoly { file: PathBuf },
    /// Apply an edge operation and report λ₁ before and after.
    Transform {
        file: PathBuf,
        /// move | release | spread
        #[arg(long)]
        op: String,
        /// move: `to src:edge …`; release: `edge [vertex]`; spread: `src:edge:target …`
        #[arg(long, num_args = 1.., allow_hyphen_values = true)]
        args: Vec<String>,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Quotient matrix of an (equitable) partition.
    Quotient {
        file: PathBuf,
        /// JSON list of vertex-id lists.
        #[arg(long)]
        partition: PathBuf,
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tol: f64,
    },
    /// Evaluate a closed form or bound.
    Formula {
        id: String,
        #[arg(long)]
        m: usize,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
    },
    /// Run a registry check (exit 0 pass, 1 fail, 2 hypotheses unmet).
    Verify {
        #[arg(required_unless_present = "list")]
        id: Option<String>,
        #[arg(long)]
        list: bool,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        d: Option<usize>,
        #[arg(long)]
        l: Option<usize>,
        #[arg(long)]
        tol: Option<f64>,
        #[arg(long)]
        margin: Option<f64>,
        /// Largest k enumerated exhaustively.
        #[arg(long)]
        budget: Option<usize>,
        /// Kernel size of structured candidate classes beyond the budget.
        #[arg(long)]
        kernel: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, default_value = "json")]
        format: Format,
    },
}

fn parse_pair(s: &str) -> std::result::Result<(usize, usize), String> {
    let (a, b) = s
        .split_once(':')
        .ok_or_else(|| format!("expected position:count, got `{s}`"))?;
    Ok((
        a.parse().map_err(|e| format!("{e}"))?,
        b.parse().map_err(|e| format!("{e}"))?,
    ))
}

fn load(path: &Path) -> Result<Hypergraph> {
    Ok(Hypergraph::from_json(&fs::read_to_string(path)?)?)
}

fn write(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(p) => fs::write(p, text)?,
        None => println!("{text}"),
    }
    Ok(())
}

fn pretty(v: &serde_json::Value) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)?)
}

fn run(cli: Cli) -> Result<u8> {
    match cli.cmd {
        Cmd::Gen {
            family,
            m,
            k,
            d,
            l,
            attach,
            counts,
            out,
        } => {
            let h = commands::generate(
                &family,
                &FamilyArgs {
                    m,
                    k,
                    d,
                    l,
                    attach,
                    counts,
                },
            )?;
            write(out.as_deref(), &h.to_json())?;
        }
        Cmd::Radius { file, tol } => {
            println!("{}", pretty(&commands::radius(&load(&file)?, tol)?)?)
        }
        Cmd::Spectrum { file } => println!("{}", pretty(&commands::spectrum(&load(&file)?)?)?),
        Cmd::Charpoly { file } => println!("{}", pretty(&commands::charpoly(&load(&file)?)?)?),
        Cmd::Transform {
            file,
            op,
            args,
            tol,
            out,
        } => {
            let op = commands::parse_operation(&op, &args)?;
            let v = commands::transform(&load(&file)?, &op, tol)?;
            write(out.as_deref(), &pretty(&v)?)?;
        }
        Cmd::Quotient {
            file,
            partition,
            tol,
        } => {
            let parts: Vec<Vec<usize>> = serde_json::from_str(&fs::read_to_string(partition)?)?;
            println!(
                "{}",
                pretty(&commands::quotient(&load(&file)?, parts, tol)?)?
            );
        }
        Cmd::Formula { id, m, k, d, l } => {
            println!("{}", pretty(&commands::formula(&id, m, k, d, l)?)?)
        }
        Cmd::Verify { list: true, .. } => {
            for e in registry() {
                println!("{:<12} {}", e.id, e.claim);
            }
        }
        Cmd::Verify {
            id,
            m,
            k,
            d,
            l,
            tol,
            margin,
            budget,
            kernel,
            out,
            format,
            ..
        } => {
            let id = id.expect("clap requires id without --list");
            let params = Params {
                m,
                k,
                d,
                l,
                tol,
                margin,
                budget,
                kernel,
            };
            let report = verify(&id, &params)?;
            write(out.as_deref(), &emit_report(&report, format)?)?;
            if out.is_some() {
                eprintln!("{}: {:?}", report.theorem_id, report.status);
            }
            return Ok(report.status.exit_code() as u8);
        }
    }
    Ok(0)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
