//! `bispinor`: verification suite, parameter sweeps and state inspection
//! for spin-parity entanglement of Dirac bispinors.
//!
//! Exit codes: 0 success, 1 failed verification check, 2 usage or I/O error.

use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};

use bispinor::{Convention, Sign, Vec3};
use bispinor_cli::state::{build_report, render_text, Family, StateSpec};
use bispinor_cli::sweep::{GridParam, Quantity, SweepSpec};
use bispinor_cli::{checks, sweep};

#[derive(Parser)]
#[command(
    name = "bispinor",
    about = "Spin-parity entanglement of Dirac bispinors: verify invariants, sweep parameters, print states",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run every registered invariant check and report pass/fail.
    Verify {
        /// Seed for all randomized sampling.
        #[arg(long, default_value_t = 7)]
        seed: u64,
        /// Random samples per check.
        #[arg(long, default_value_t = 100)]
        samples: u32,
        /// Emit the report as JSON instead of a table.
        #[arg(long)]
        json: bool,
        /// Fault injection: add noise of this magnitude to the boost operator
        /// in the consistency-relation check (self-test of the suite).
        #[arg(long, default_value_t = 0.0)]
        perturb: f64,
    },
    /// Evaluate a quantity over a parameter grid and write CSV.
    Sweep {
        #[command(flatten)]
        state: StateArgs,
        /// Quantity: concurrence | purity | trace_power | bloch_norms.
        #[arg(long)]
        quantity: String,
        /// Grid parameter: eta | q | angle (default: q for bell_mix, eta otherwise).
        #[arg(long)]
        param: Option<String>,
        /// Comma-separated grid values, e.g. "0,0.3,0.6931".
        #[arg(long)]
        grid: String,
        /// Exponent n for trace_power.
        #[arg(long, default_value_t = 2)]
        power: u32,
        /// Output file ("-" for stdout).
        #[arg(long)]
        out: PathBuf,
    },
    /// Print one state: density matrix, Bloch decomposition, quantifiers.
    State {
        #[command(flatten)]
        state: StateArgs,
        /// Output format: text | json.
        #[arg(long, default_value = "text")]
        format: String,
    },
}

#[derive(Args)]
struct StateArgs {
    /// Family: free | magnetic | parity_mix | helicity_mix | bell_mix.
    #[arg(long)]
    family: String,
    /// Normalization convention: hermitian | covariant.
    #[arg(long, default_value = "hermitian")]
    convention: String,
    /// Particle mass (natural units).
    #[arg(long, default_value_t = 1.0)]
    mass: f64,
    /// Magnetic moment coupling μ.
    #[arg(long, default_value_t = 0.3)]
    mu: f64,
    /// Magnetic field magnitude |B|.
    #[arg(long, default_value_t = 1.0)]
    bmag: f64,
    /// Spin quantization axis for the free family: x|y|z or "a,b,c".
    #[arg(long, default_value = "x")]
    spin_axis: String,
    /// Field direction for the magnetic families.
    #[arg(long, default_value = "z")]
    field_axis: String,
    /// Boost direction.
    #[arg(long, default_value = "z")]
    boost_axis: String,
    /// Boost rapidity η (fixed value when not the sweep parameter).
    #[arg(long, default_value_t = std::f64::consts::LN_2)]
    eta: f64,
    /// Mixture weight q (fixed value when not the sweep parameter).
    #[arg(long, default_value_t = 0.5)]
    q: f64,
    /// Angle between boost direction and the reference axis (overrides
    /// --boost-axis when nonzero).
    #[arg(long, default_value_t = 0.0)]
    angle: f64,
    /// Parity / energy branch: plus | minus.
    #[arg(long, default_value = "plus")]
    sign: String,
    /// Spin label: 1 | 2.
    #[arg(long, default_value_t = 1)]
    s: u8,
}

fn parse_axis(s: &str) -> Result<Vec3, String> {
    let v = match s {
        "x" | "+x" => Vec3::X,
        "y" | "+y" => Vec3::Y,
        "z" | "+z" => Vec3::Z,
        "-x" => -Vec3::X,
        "-y" => -Vec3::Y,
        "-z" => -Vec3::Z,
        other => {
            let parts: Vec<&str> = other.split(',').collect();
            if parts.len() != 3 {
                return Err(format!("axis must be x|y|z or 'a,b,c', got '{other}'"));
            }
            let mut comp = [0.0f64; 3];
            for (slot, raw) in comp.iter_mut().zip(parts.iter()) {
                *slot = raw
                    .trim()
                    .parse::<f64>()
                    .map_err(|e| format!("bad axis component '{raw}': {e}"))?;
            }
            Vec3::new(comp[0], comp[1], comp[2])
        }
    };
    v.normalized().map_err(|e| e.to_string())
}

fn parse_convention(s: &str) -> Result<Convention, String> {
    match s {
        "hermitian" => Ok(Convention::Hermitian),
        "covariant" => Ok(Convention::Covariant),
        other => Err(format!(
            "unknown convention '{other}' (expected hermitian or covariant)"
        )),
    }
}

fn parse_sign(s: &str) -> Result<Sign, String> {
    match s {
        "plus" | "+" => Ok(Sign::Plus),
        "minus" | "-" => Ok(Sign::Minus),
        other => Err(format!("unknown sign '{other}' (expected plus or minus)")),
    }
}

fn parse_grid(s: &str) -> Result<Vec<f64>, String> {
    s.split(',')
        .map(|raw| {
            raw.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad grid value '{raw}': {e}"))
        })
        .collect()
}

impl StateArgs {
    fn to_spec(&self) -> Result<StateSpec, String> {
        Ok(StateSpec {
            family: Family::parse(&self.family)?,
            convention: parse_convention(&self.convention)?,
            mass: self.mass,
            mu: self.mu,
            bmag: self.bmag,
            spin_axis: parse_axis(&self.spin_axis)?,
            field_axis: parse_axis(&self.field_axis)?,
            boost_axis: parse_axis(&self.boost_axis)?,
            eta: self.eta,
            q: self.q,
            angle: self.angle,
            sign: parse_sign(&self.sign)?,
            s: self.s,
        })
    }
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match cli.command {
        Command::Verify {
            seed,
            samples,
            json,
            perturb,
        } => {
            if samples < 1 {
                return usage_error("--samples must be at least 1");
            }
            let report = checks::run_all(seed, samples, perturb);
            if json {
                match serde_json::to_string_pretty(&report) {
                    Ok(text) => println!("{text}"),
                    Err(e) => return usage_error(&format!("cannot serialize report: {e}")),
                }
            } else {
                print!("{}", report.table());
            }
            if report.all_passed {
                ExitCode::SUCCESS
            } else {
                if !json {
                    eprintln!("failed checks: {}", report.failed_names().join(", "));
                }
                ExitCode::from(1)
            }
        }
        Command::Sweep {
            state,
            quantity,
            param,
            grid,
            power,
            out,
        } => {
            let base = match state.to_spec() {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let quantity = match Quantity::parse(&quantity) {
                Ok(q) => q,
                Err(e) => return usage_error(&e),
            };
            let param = match param {
                Some(raw) => match GridParam::parse(&raw) {
                    Ok(p) => p,
                    Err(e) => return usage_error(&e),
                },
                None => GridParam::default_for(base.family),
            };
            let grid = match parse_grid(&grid) {
                Ok(g) => g,
                Err(e) => return usage_error(&e),
            };
            let spec = SweepSpec {
                base,
                quantity,
                param,
                grid,
                power,
            };
            let rows = match sweep::run(&spec) {
                Ok(rows) => rows,
                Err(e) => return usage_error(&e),
            };
            let csv = sweep::to_csv(&rows);
            if out.as_os_str() == "-" {
                print!("{csv}");
            } else if let Err(e) = std::fs::File::create(&out)
                .and_then(|mut f| f.write_all(csv.as_bytes()))
            {
                return usage_error(&format!("cannot write {}: {e}", out.display()));
            }
            ExitCode::SUCCESS
        }
        Command::State { state, format } => {
            let spec = match state.to_spec() {
                Ok(s) => s,
                Err(e) => return usage_error(&e),
            };
            let report = match build_report(&spec) {
                Ok(r) => r,
                Err(e) => return usage_error(&e),
            };
            match format.as_str() {
                "text" => print!("{}", render_text(&report)),
                "json" => match serde_json::to_string_pretty(&report) {
                    Ok(text) => println!("{text}"),
                    Err(e) => return usage_error(&format!("cannot serialize report: {e}")),
                },
                other => return usage_error(&format!("unknown format '{other}'")),
            }
            ExitCode::SUCCESS
        }
    }
}
