use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "setinc", version, about = "Exact spectra and symmetries of set-inclusion graphs G(n,k,l)")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// The triple `(n, k, l)`: k-subsets and l-subsets of `{1, …, n}`.
#[derive(Debug, Clone, Copy, Args)]
pub struct Triple {
    /// Size of the ground set
    pub n: u32,
    /// Size of the smaller subsets
    pub k: u32,
    /// Size of the larger subsets
    pub l: u32,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print the exact spectrum of G(n,k,l) or of its line graph
    Spectrum {
        #[command(flatten)]
        params: Triple,
        /// Use the line graph
        #[arg(long)]
        line: bool,
        #[arg(long, value_enum, default_value_t = SpectrumFormat::Table)]
        format: SpectrumFormat,
    },
    /// Compare the exact spectrum with a numeric eigensolver on the explicit graph
    Verify {
        #[command(flatten)]
        params: Triple,
        #[arg(long)]
        line: bool,
        /// Relative tolerance, scaled by max(1, largest |eigenvalue|)
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Largest matrix handed to the eigensolver
        #[arg(long, env = "SETINC_MAX_VERTICES", default_value_t = 2000)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
        /// Add this amount to the largest numeric eigenvalue (negative control)
        #[arg(long, hide = true)]
        perturb: Option<f64>,
    },
    /// Describe the automorphism group, optionally checking its order by search
    Aut {
        #[command(flatten)]
        params: Triple,
        /// Count automorphisms by exhaustive search and compare
        #[arg(long)]
        brute_force: bool,
        /// Largest graph the exhaustive search will accept
        #[arg(long, env = "SETINC_BRUTE_FORCE_CAP", default_value_t = 40)]
        cap: usize,
        /// Also check this many random ground-set permutations act as automorphisms
        #[arg(long, default_value_t = 0)]
        samples: usize,
        /// Seed for --samples
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Largest graph built for --samples
        #[arg(long, env = "SETINC_MAX_BUILD_VERTICES", default_value_t = 1_000_000)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Count orbits of the automorphism group on vertices, edges or arcs
    Orbits {
        #[command(flatten)]
        params: Triple,
        #[arg(long, value_enum)]
        on: Target,
        /// Largest graph that will be built
        #[arg(long, env = "SETINC_MAX_BUILD_VERTICES", default_value_t = 1_000_000)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
    /// Write the graph as an edge list, graph6 or Graphviz dot
    Export {
        #[command(flatten)]
        params: Triple,
        #[arg(long)]
        line: bool,
        #[arg(long, value_enum, default_value_t = GraphFormat::Edgelist)]
        format: GraphFormat,
        /// Output file; standard output when absent
        #[arg(long)]
        out: Option<PathBuf>,
        /// Largest graph that will be built
        #[arg(long, env = "SETINC_MAX_BUILD_VERTICES", default_value_t = 1_000_000)]
        max_vertices: usize,
    },
    /// Johnson scheme on k-subsets of [n]: intersection numbers, or a full check
    Scheme {
        n: u32,
        k: u32,
        /// Verify the scheme identities by explicit matrix products
        #[arg(long)]
        check: bool,
        /// Largest relation matrix dimension for --check
        #[arg(long, env = "SETINC_MAX_VERTICES", default_value_t = 2000)]
        max_vertices: usize,
        #[arg(long, value_enum, default_value_t = ReportFormat::Text)]
        format: ReportFormat,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum SpectrumFormat {
    Table,
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ReportFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    Vertices,
    Edges,
    Arcs,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum GraphFormat {
    Edgelist,
    Graph6,
    Dot,
}
