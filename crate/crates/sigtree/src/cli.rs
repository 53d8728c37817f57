//! `sigtree` command line.
//!
//! Exit codes: 0 on success, 1 on usage or internal errors, 2 when a
//! verification finds a maximiser other than the predicted one or a
//! non-increasing double-star chain.

use std::ffi::OsString;
use std::io::Write;
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use sigtree_core::search::{chain_strictly_increasing, CHAIN_GAP_TOL};
use sigtree_core::{
    balance_witness, double_star_chain, enumerate_tree_classes, hill_climb, spectrum,
    SignedCompleteGraph, Tree,
};

use crate::io::{format_prufer, read_edge_list, tree_from_prufer};
use crate::report::{
    chain_csv, enumerate_csv, search_csv, search_text, sweep_csv, sweep_text, trace_csv,
    trace_json_lines, BalanceRecord, ChainRecord, EnumerateRecord, SearchRecord, SpectrumRecord,
    SweepRow,
};
use crate::sweep::{sweep, verify};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_DISCOVERY: i32 = 2;

/// Each climb step may evaluate O(n⁴) candidate moves.
const CLIMB_MAX_ORDER: usize = 30;

#[derive(Debug, Parser)]
#[command(name = "sigtree", version, about = "Index of signed complete graphs whose negative edges form a spanning tree")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Write output here instead of standard output.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
    Text,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
pub struct TreeInput {
    /// Prüfer sequence, comma separated (n = length + 2).
    #[arg(long)]
    pub prufer: Option<String>,
    /// Edge-list file: `n` on the first line, then one `u v` pair per line.
    #[arg(long)]
    pub edges: Option<PathBuf>,
}

impl TreeInput {
    fn load(&self) -> Result<Tree> {
        match (&self.prufer, &self.edges) {
            (Some(p), None) => tree_from_prufer(p).context("--prufer"),
            (None, Some(path)) => read_edge_list(path).context("--edges"),
            _ => bail!("give exactly one of --prufer and --edges"),
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Spectrum of (K_n, T⁻).
    Spectrum(TreeInput),
    /// Balance of (K_n, T⁻) with a bipartition or a negative triangle.
    Balance(TreeInput),
    /// Exhaustive maximum-index search over trees with k leaves.
    Verify {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
    },
    /// Verify every valid k for each n in a range.
    Sweep {
        #[arg(long = "n-min")]
        n_min: usize,
        #[arg(long = "n-max")]
        n_max: usize,
    },
    /// Index along the double-star chain T_(s,t), s + t = n - 2.
    Chain {
        #[arg(long)]
        n: usize,
    },
    /// Hill climb over sign rotations from a random tree with k leaves.
    Climb {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: usize,
        /// Seed for the random start.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long = "max-steps", default_value_t = 10_000)]
        max_steps: usize,
    },
    /// Free-tree classes on n vertices, optionally only those with k leaves.
    Enumerate {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
    },
}

/// Parses `argv` (program name first), runs the command and returns the exit code.
pub fn run<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = e.print();
            return code;
        }
    };
    match execute(&cli) {
        Ok((text, code)) => match emit(&cli, &text) {
            Ok(()) => code,
            Err(e) => {
                eprintln!("sigtree: {e:#}");
                EXIT_ERROR
            }
        },
        Err(e) => {
            eprintln!("sigtree: {e:#}");
            EXIT_ERROR
        }
    }
}

fn emit(cli: &Cli, text: &str) -> Result<()> {
    match &cli.out {
        Some(path) => {
            std::fs::write(path, text).with_context(|| format!("writing {}", path.display()))
        }
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes())?;
            stdout.flush()?;
            Ok(())
        }
    }
}

fn json<T: serde::Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

/// Rendered output plus exit code.
pub fn execute(cli: &Cli) -> Result<(String, i32)> {
    let format = cli.format;
    match &cli.command {
        Command::Spectrum(input) => {
            let tree = input.load()?;
            let spec = spectrum(&SignedCompleteGraph::from_tree(&tree))?;
            let rec = SpectrumRecord::from(&spec);
            let text = match format {
                Format::Json => json(&rec)?,
                Format::Csv => {
                    let mut s = String::from("index,value\n");
                    for (i, v) in rec.values.iter().enumerate() {
                        s.push_str(&format!("{},{}\n", i + 1, v));
                    }
                    s
                }
                Format::Text => format!(
                    "n={}\nlambda1={}\nlambdan={}\nradius={}\nvalues={}\n",
                    rec.n,
                    rec.lambda1,
                    rec.lambdan,
                    rec.radius,
                    rec.values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(" ")
                ),
            };
            Ok((text, EXIT_OK))
        }
        Command::Balance(input) => {
            let tree = input.load()?;
            let rec = BalanceRecord::new(tree.n(), &balance_witness(&SignedCompleteGraph::from_tree(&tree)));
            let text = match format {
                Format::Json => json(&rec)?,
                Format::Csv => format!(
                    "n,balanced,witness\n{},{},{}\n",
                    rec.n,
                    rec.balanced,
                    witness_str(&rec)
                ),
                Format::Text => format!(
                    "balanced={}\n{}\n",
                    rec.balanced,
                    if rec.balanced {
                        format!("side={}", witness_str(&rec))
                    } else {
                        format!("negative_triangle={}", witness_str(&rec))
                    }
                ),
            };
            Ok((text, EXIT_OK))
        }
        Command::Verify { n, k } => {
            let v = verify(*n, *k)?;
            let rec = v.record();
            let text = match format {
                Format::Json => json(&rec)?,
                Format::Csv => search_csv(std::slice::from_ref(&rec))?,
                Format::Text => search_text(&rec),
            };
            Ok((text, if v.is_discovery() { EXIT_DISCOVERY } else { EXIT_OK }))
        }
        Command::Sweep { n_min, n_max } => {
            let results = sweep(*n_min, *n_max, false)?;
            let records: Vec<SearchRecord> = results.iter().map(|v| v.record()).collect();
            let rows: Vec<SweepRow> = records.iter().map(SweepRow::from).collect();
            let text = match format {
                Format::Json => json(&rows)?,
                Format::Csv => sweep_csv(&rows)?,
                Format::Text => sweep_text(&rows),
            };
            let code = if results.iter().any(|v| v.is_discovery()) {
                EXIT_DISCOVERY
            } else {
                EXIT_OK
            };
            Ok((text, code))
        }
        Command::Chain { n } => {
            let chain = double_star_chain(*n)?;
            let rows: Vec<ChainRecord> = chain.iter().map(ChainRecord::from).collect();
            let text = match format {
                Format::Json => json(&rows)?,
                Format::Csv => chain_csv(&rows)?,
                Format::Text => rows
                    .iter()
                    .map(|r| format!("T({},{}) lambda1={}\n", r.s, r.t, r.lambda1))
                    .collect(),
            };
            let code = if chain_strictly_increasing(&chain, CHAIN_GAP_TOL) {
                EXIT_OK
            } else {
                EXIT_DISCOVERY
            };
            Ok((text, code))
        }
        Command::Climb {
            n,
            k,
            seed,
            max_steps,
        } => {
            if *n > CLIMB_MAX_ORDER {
                bail!("climb supports n up to {CLIMB_MAX_ORDER}, got {n}");
            }
            let mut rng = ChaCha8Rng::seed_from_u64(*seed);
            let start = Tree::random_with_leaves(*n, *k, &mut rng)?;
            let outcome = hill_climb(*n, *k, &start, *max_steps)?;
            let text = match format {
                Format::Json => trace_json_lines(&outcome)?,
                Format::Csv => trace_csv(&outcome)?,
                Format::Text => {
                    let mut s = format!(
                        "start prufer={} lambda1={}\n",
                        format_prufer(&sigtree_core::prufer_encode(&start)),
                        outcome.start_lambda1
                    );
                    for step in &outcome.trace {
                        s.push_str(&format!("{:>4} {} lambda1={}\n", step.step, step.mv, step.lambda1));
                    }
                    s.push_str(&format!(
                        "final prufer={} lambda1={} local_max={}\n",
                        format_prufer(&sigtree_core::prufer_encode(&outcome.tree)),
                        outcome.lambda1,
                        outcome.local_max
                    ));
                    s
                }
            };
            Ok((text, EXIT_OK))
        }
        Command::Enumerate { n, k } => {
            let classes = match k {
                Some(k) => sigtree_core::enumerate_with_leaves(*n, *k)?,
                None => enumerate_tree_classes(*n)?,
            };
            let rows: Vec<EnumerateRecord> = classes.iter().map(EnumerateRecord::from).collect();
            let text = match format {
                Format::Json => json(&rows)?,
                Format::Csv => enumerate_csv(&rows)?,
                Format::Text => rows
                    .iter()
                    .map(|r| format!("{:>2} {:<24} {}\n", r.leaf_count, r.prufer, r.canonical_code))
                    .collect(),
            };
            Ok((text, EXIT_OK))
        }
    }
}

fn witness_str(rec: &BalanceRecord) -> String {
    let list: Vec<usize> = match (&rec.side, &rec.negative_triangle) {
        (Some(side), _) => side.clone(),
        (None, Some(t)) => t.to_vec(),
        (None, None) => Vec::new(),
    };
    list.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}
