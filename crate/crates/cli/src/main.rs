mod cache;
mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use relhom::relhom::Level;

#[derive(Parser, Debug)]
#[command(name = "relhom", version, about = "Exact relative homological algebra over bound quiver algebras")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
    /// Algebra file.
    #[arg(long, global = true)]
    pub algebra: Option<PathBuf>,
    /// Level of the test class: a natural number or `inf`.
    #[arg(long, global = true)]
    pub n: Option<Level>,
    /// Ext degree.
    #[arg(long, global = true)]
    pub i: Option<usize>,
    /// Largest total dimension of enumerated indecomposables.
    #[arg(long, global = true, default_value_t = 6, value_parser = clap::value_parser!(u64).range(1..))]
    pub dim_bound: u64,
    /// Resolution length cutoff.
    #[arg(long, global = true, default_value_t = 16)]
    pub cutoff: usize,
    #[arg(long, global = true)]
    pub module: Option<PathBuf>,
    #[arg(long, global = true)]
    pub module2: Option<PathBuf>,
    /// Short exact sequence file.
    #[arg(long, global = true)]
    pub seq: Option<PathBuf>,
    #[arg(long, global = true)]
    pub complex: Option<PathBuf>,
    /// One `VERDICT` record per line, nothing else.
    #[arg(long, global = true)]
    pub machine: bool,
    #[arg(long, global = true)]
    pub cache_dir: Option<PathBuf>,
    /// Drop redundant summands from precovers.
    #[arg(long, global = true)]
    pub minimize_precovers: bool,
}

#[derive(Subcommand, Debug, Clone)]
pub enum Command {
    /// Global dimension.
    Gldim,
    /// Little finitistic dimension over the inventory.
    Fpd,
    /// List the indecomposable inventory.
    Indecs,
    /// Projective dimension of `--module`.
    Pd,
    /// Injective dimension of `--module`.
    Id,
    /// dim Ext^i(--module, --module2).
    Ext,
    /// Relative projective dimension.
    Npd,
    /// Relative injective dimension.
    Nid,
    /// dim of relative Ext^i(--module, --module2).
    Next,
    /// Whether `--seq` is relatively exact.
    Nexact,
    /// Whether `--module` is relatively projective.
    Nproj,
    /// Relative projective resolution of `--module`.
    Nresolve,
    /// Relative infimum, supremum and exactness of `--complex`.
    Cinfo,
    /// Relative projective dimension of `--complex`.
    Cnpd,
    /// Relative injective dimension of `--complex`.
    Cnid,
    /// Vanishing of the relative singularity category.
    Sing,
    /// Closure of the relative projectives under kernels of epimorphisms.
    Closure,
    /// Finiteness comparison on the standard triangular gluings.
    Recollement,
    /// Run a theorem verification suite.
    Verify {
        #[arg(long, value_enum)]
        theorem: Theorem,
    },
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Theorem {
    FpdEquiv,
    PdBounds,
    Cfpn,
    Cfin,
    ExtOracle,
    Euler,
    N0Degeneracy,
    RecollementCorollary,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(out) => {
            for line in out.lines() {
                println!("{line}");
            }
            ExitCode::from(out.exit_code() as u8)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}
