use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Args, Parser, Subcommand};

use junction_core::waveguide::WaveguideConfig;
use junction_spectra::commands::{
    cmd_bound_states_single, cmd_bound_states_sweep, cmd_resonances, cmd_transmission,
    cmd_waveguide_cutoffs, cmd_waveguide_dispersion, cmd_waveguide_sectors, TransmissionPlan,
};
use junction_spectra::sweep::SweepSpec;
use junction_spectra::verify::{run as run_verify, Level};
use junction_spectra::{CliError, Model, TransmissionPreset, DEFAULT_SEED};

/// Exact spectra of the 1D barrier-well junction: transmission surfaces,
/// transparency resonances, bound states and the slab-waveguide mapping,
/// every closed form cross-checked against a transfer-matrix oracle.
#[derive(Parser)]
#[command(name = "junction-spectra", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputOpts {
    /// Write to a file instead of stdout
    #[arg(long)]
    out: Option<PathBuf>,
    /// Emit JSON lines instead of CSV
    #[arg(long)]
    json: bool,
    /// Significant digits for numeric columns
    #[arg(long, default_value_t = 17)]
    precision: usize,
}

#[derive(Subcommand)]
enum Command {
    /// Transmission T(eta, sigma) over a grid (columns: eta,sigma,T[,T_oracle,abs_diff])
    Transmission {
        /// eta sweep: MIN..MAX/COUNT[/log] or a single value
        #[arg(long)]
        eta: Option<SweepSpec>,
        /// sigma sweep
        #[arg(long)]
        sigma: Option<SweepSpec>,
        #[arg(long, value_enum, default_value_t = Model::Closed)]
        model: Model,
        /// Max tolerated |T_closed - T_oracle| under --model both
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        /// Named grid replacing --eta/--sigma
        #[arg(long, value_enum)]
        preset: Option<TransmissionPreset>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Transparency levels tan(sigma) = tanh(sigma) (columns: n,sigma_n,residual,T_n,jump_ratio_sq)
    Resonances {
        /// How many levels, starting at n = 1
        #[arg(long, default_value_t = 10)]
        count: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Bound states (columns: sigma,n,zeta[,residual,oracle_zeta,diff])
    BoundStates {
        /// Single strength: full table with the oracle cross-check
        #[arg(long, conflicts_with = "sweep")]
        sigma: Option<f64>,
        /// Strength sweep: branch data sigma,n,zeta
        #[arg(long)]
        sweep: Option<SweepSpec>,
        /// fig4 preset: sweep 0.05..15/300
        #[arg(long, conflicts_with_all = ["sigma", "sweep"])]
        preset: Option<BoundStatePreset>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// TE slab-waveguide maps for the antisymmetric step layer
    Waveguide {
        /// Layer half-width
        #[arg(long, default_value_t = 1.0)]
        a: f64,
        /// Background permittivity
        #[arg(long = "eps-b", default_value_t = 2.25)]
        eps_b: f64,
        /// Permittivity modulation amplitude
        #[arg(long = "eps-m", default_value_t = 1.0)]
        eps_m: f64,
        /// fig6 preset: pins a = 1, eps_b = 2.25, eps_m = 1
        #[arg(long, value_enum, conflicts_with_all = ["a", "eps_b", "eps_m"])]
        preset: Option<WaveguidePreset>,
        #[command(subcommand)]
        what: WaveguideCommand,
    },
    /// Run the oracle cross-check suite; exit 0 iff every check passes
    Verify {
        #[arg(long, value_enum, default_value_t = LevelArg::Quick)]
        level: LevelArg,
        /// Seed for the randomized property checks
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum BoundStatePreset {
    /// Branch curves zeta_n(sigma) swept to sigma = 15 in steps of 0.05
    Fig4,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum WaveguidePreset {
    /// The spectral-plane dataset: cutoffs, dispersion branches and sectors
    /// for the reference layer (a = 1, eps_b = 2.25, eps_m = 1)
    Fig6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
enum LevelArg {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum WaveguideCommand {
    /// Cut-off points (columns: n,k_n,q_n0); they sit on q = k sqrt(eps_b)
    Cutoffs {
        #[arg(long, default_value_t = 4)]
        count: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Guided branches q_n(k) (columns: n,k,q; q empty below cutoff)
    Dispersion {
        /// Branch indices
        #[arg(long, value_delimiter = ',', default_values_t = [0usize, 1, 2, 3])]
        n: Vec<usize>,
        /// k sweep
        #[arg(long, default_value = "0.05..16/320")]
        k: SweepSpec,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Continuum transmission below line 1 (columns: k,q,sector,T)
    Sectors {
        #[arg(long, default_value = "0.1..16/160")]
        k: SweepSpec,
        #[arg(long, default_value = "0.1..24/240")]
        q: SweepSpec,
        #[command(flatten)]
        output: OutputOpts,
    },
}

fn open_output(opts: &OutputOpts) -> io::Result<Box<dyn Write>> {
    Ok(match &opts.out {
        Some(path) => Box::new(BufWriter::new(File::create(path)?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Transmission {
            eta,
            sigma,
            model,
            tol,
            preset,
            output,
        } => {
            let plan = TransmissionPlan::resolve(preset, eta.as_ref(), sigma.as_ref())?;
            let out = open_output(&output)?;
            cmd_transmission(&plan, model, tol, out, output.json, output.precision)
        }
        Command::Resonances { count, output } => {
            let out = open_output(&output)?;
            cmd_resonances(count, out, output.json, output.precision)
        }
        Command::BoundStates {
            sigma,
            sweep,
            preset,
            output,
        } => {
            let out = open_output(&output)?;
            match (sigma, sweep, preset) {
                (Some(s), None, None) => {
                    cmd_bound_states_single(s, out, output.json, output.precision)
                }
                (None, Some(spec), None) => {
                    cmd_bound_states_sweep(&spec, out, output.json, output.precision)
                }
                (None, None, Some(BoundStatePreset::Fig4)) => {
                    let spec = SweepSpec::linear(0.05, 15.0, 300);
                    cmd_bound_states_sweep(&spec, out, output.json, output.precision)
                }
                _ => Err(CliError::Usage(
                    "bound-states needs exactly one of --sigma, --sweep, --preset".into(),
                )),
            }
        }
        Command::Waveguide {
            a,
            eps_b,
            eps_m,
            preset,
            what,
        } => {
            let config = match preset {
                Some(WaveguidePreset::Fig6) => WaveguideConfig::new(1.0, 2.25, 1.0)?,
                None => WaveguideConfig::new(a, eps_b, eps_m)?,
            };
            if !config.sector_ii_exists() {
                eprintln!(
                    "warning: eps_b <= eps_m, the low-permittivity side does not propagate \
                     (no sector II)"
                );
            }
            match what {
                WaveguideCommand::Cutoffs { count, output } => {
                    let out = open_output(&output)?;
                    cmd_waveguide_cutoffs(&config, count, out, output.json, output.precision)
                }
                WaveguideCommand::Dispersion { n, k, output } => {
                    let out = open_output(&output)?;
                    cmd_waveguide_dispersion(&config, &n, &k, out, output.json, output.precision)
                }
                WaveguideCommand::Sectors { k, q, output } => {
                    let out = open_output(&output)?;
                    cmd_waveguide_sectors(&config, &k, &q, out, output.json, output.precision)
                }
            }
        }
        Command::Verify { level, seed } => {
            let level = match level {
                LevelArg::Quick => Level::Quick,
                LevelArg::Full => Level::Full,
            };
            let started = Instant::now();
            let results = run_verify(level, seed);
            let failed = results.iter().filter(|r| !r.pass).count();
            for r in &results {
                println!(
                    "check {:<22} {}  ({})",
                    r.name,
                    if r.pass { "PASS" } else { "FAIL" },
                    r.detail
                );
            }
            println!(
                "{} checks, {} failed, {:.2}s",
                results.len(),
                failed,
                started.elapsed().as_secs_f64()
            );
            if failed > 0 {
                return Err(CliError::VerifyFailed {
                    failed,
                    total: results.len(),
                });
            }
            Ok(())
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
