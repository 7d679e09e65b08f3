//! Command-line front end: argument types, subcommand runners and output.

pub mod commands;
pub mod error;
pub mod record;
pub mod sweep;

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use num_bigint::BigInt;
use serde_json::Value;
use ulrich_core::{DivisorClass, Genericity};

pub use error::{CliError, CliResult};
pub use record::{Num, Record};
pub use sweep::{run_sweep, IntRange, SweepOutput, SweepSpec};

#[derive(Debug, Parser)]
#[command(
    name = "ulrich",
    version,
    about = "Ulrich line bundles and special rank-2 Ulrich bundles on ruled surfaces"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Aligned columns instead of one JSON object per line.
    #[arg(long, global = true)]
    pub table: bool,

    /// Write output here instead of stdout.
    #[arg(long, global = true, value_name = "FILE")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args, Clone)]
pub struct SurfaceArgs {
    #[arg(long, allow_hyphen_values = true)]
    pub g: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub e: BigInt,
}

#[derive(Debug, Args, Clone)]
pub struct PolarizedArgs {
    #[command(flatten)]
    pub surface: SurfaceArgs,
    #[arg(long, allow_hyphen_values = true)]
    pub a: BigInt,
    #[arg(long, allow_hyphen_values = true)]
    pub b: BigInt,
}

impl PolarizedArgs {
    fn key(&self) -> [&BigInt; 4] {
        [&self.surface.g, &self.surface.e, &self.a, &self.b]
    }
}

#[derive(Debug, Args, Clone, Copy)]
pub struct FlagArgs {
    /// Assume the rank-2 bundle is general in moduli.
    #[arg(long)]
    pub generic_bundle: bool,
    /// Assume the base curve is general in moduli.
    #[arg(long)]
    pub generic_curve: bool,
}

impl From<FlagArgs> for Genericity {
    fn from(f: FlagArgs) -> Self {
        Genericity {
            bundle: f.generic_bundle,
            curve: f.generic_curve,
        }
    }
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Existence of Ulrich line bundles for h = aC0 + bf.
    Verdict {
        #[command(flatten)]
        pol: PolarizedArgs,
        #[command(flatten)]
        flags: FlagArgs,
    },
    /// The two candidate Ulrich classes.
    Classes {
        #[command(flatten)]
        pol: PolarizedArgs,
    },
    /// Ulrich dual 3h + K - D of D = da C0 + db f.
    Dual {
        #[command(flatten)]
        pol: PolarizedArgs,
        #[arg(long, allow_hyphen_values = true)]
        da: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        db: BigInt,
    },
    /// Chern data and construction of special rank-2 Ulrich bundles.
    Rank2 {
        #[command(flatten)]
        pol: PolarizedArgs,
    },
    /// Exact brute-force search on a Hirzebruch surface F_e.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        e: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        a: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        b: BigInt,
        #[arg(long, default_value_t = 12)]
        grid_limit: u32,
    },
    /// Verdicts over a grid; each of --g --e --a --b takes `n`, `lo..hi` or `lo:hi`.
    Sweep {
        #[arg(long, allow_hyphen_values = true)]
        g: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        e: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        a: IntRange,
        #[arg(long, allow_hyphen_values = true)]
        b: IntRange,
        #[command(flatten)]
        flags: FlagArgs,
        /// Add a rank-2 construction summary to each row's notes.
        #[arg(long)]
        rank2: bool,
    },
    /// Segre strata U_{r',s}(r, d).
    Strata {
        #[arg(long)]
        g: BigInt,
        #[arg(long)]
        r: BigInt,
        #[arg(long, allow_hyphen_values = true)]
        d: BigInt,
        #[arg(long)]
        r_prime: BigInt,
    },
    /// Theta target of S^(a-1)E, or of a rank r degree d bundle with --r --d.
    Theta {
        #[arg(long)]
        g: BigInt,
        #[arg(long, allow_hyphen_values = true, required_unless_present = "r")]
        e: Option<BigInt>,
        #[arg(long, required_unless_present = "r")]
        a: Option<BigInt>,
        #[arg(long, requires = "d")]
        r: Option<BigInt>,
        #[arg(long, allow_hyphen_values = true, requires = "r")]
        d: Option<BigInt>,
        #[command(flatten)]
        flags: FlagArgs,
    },
}

/// Everything a run prints: the records plus any stderr diagnostics.
#[derive(Debug, Default)]
pub struct RunOutput {
    pub rows: Vec<Value>,
    pub diagnostics: Vec<String>,
}

pub fn execute(command: &Command) -> CliResult<RunOutput> {
    let rows = match command {
        Command::Verdict { pol, flags } => commands::cmd_verdict(pol.key(), (*flags).into())?,
        Command::Classes { pol } => commands::cmd_classes(pol.key())?,
        Command::Dual { pol, da, db } => {
            commands::cmd_dual(pol.key(), &DivisorClass::new(da.clone(), db.clone()))?
        }
        Command::Rank2 { pol } => commands::cmd_rank2(pol.key())?,
        Command::Oracle {
            e,
            a,
            b,
            grid_limit,
        } => commands::cmd_oracle(e, a, b, *grid_limit)?,
        Command::Sweep {
            g,
            e,
            a,
            b,
            flags,
            rank2,
        } => {
            let out = run_sweep(&SweepSpec {
                g: *g,
                e: *e,
                a: *a,
                b: *b,
                flags: (*flags).into(),
                rank2: *rank2,
            })?;
            let diagnostics = out
                .skipped
                .iter()
                .map(|(reason, n)| format!("skipped {n} rows: {reason}"))
                .collect();
            return Ok(RunOutput {
                rows: out
                    .rows
                    .iter()
                    .map(|r| serde_json::to_value(r).expect("records serialize"))
                    .collect(),
                diagnostics,
            });
        }
        Command::Strata { g, r, d, r_prime } => commands::cmd_strata(g, r, d, r_prime)?,
        Command::Theta {
            g,
            e,
            a,
            r,
            d,
            flags,
        } => match (r, d, e, a) {
            (Some(r), Some(d), _, _) => commands::cmd_theta_raw(g, r, d)?,
            (_, _, Some(e), Some(a)) => commands::cmd_theta(g, e, a, (*flags).into())?,
            _ => {
                return Err(CliError::Usage(
                    "theta needs --e and --a, or --r and --d".into(),
                ))
            }
        },
    };
    Ok(RunOutput {
        rows,
        diagnostics: Vec::new(),
    })
}

/// Newline-terminated JSON lines, or an aligned table.
pub fn render(rows: &[Value], table: bool) -> String {
    if table {
        return record::render_table(rows);
    }
    let mut s = String::new();
    for row in rows {
        s.push_str(&record::to_line(row));
        s.push('\n');
    }
    s
}

/// Runs a parsed command line and returns the process exit code.
pub fn run(cli: &Cli) -> i32 {
    let result = execute(&cli.command).and_then(|out| {
        let text = render(&out.rows, cli.table);
        match &cli.out {
            Some(path) => std::fs::write(path, text)?,
            None => std::io::stdout().lock().write_all(text.as_bytes())?,
        }
        Ok(out.diagnostics)
    });
    match result {
        Ok(diagnostics) => {
            for d in diagnostics {
                eprintln!("{d}");
            }
            0
        }
        Err(err) => {
            eprintln!("error: {err}");
            err.exit_code()
        }
    }
}
