use crate::format::Format;
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "blowup", version, about = "Self-similar blow-up profiles for NLS with a point nonlinearity")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Tabulate σ(h) over an evenly spaced range of h⁻¹.
    Sweep(SweepArgs),
    /// Solve for σ at one h.
    SolveSigma(SolveSigmaArgs),
    /// Solve for h with σ(h) = σ_c(p).
    SolveH(SolveHArgs),
    /// Sample the profile φ, η on a symmetric grid.
    Profile(ProfileArgs),
    /// Run the invariant groups and report pass/fail per group.
    Verify(VerifyArgs),
    /// Compare the turning-point asymptotics of v against quadrature.
    Asymptotics(AsymptoticsArgs),
}

#[derive(Debug, Args)]
pub struct Output {
    /// Output path, "-" for stdout.
    #[arg(long, default_value = "-")]
    pub out: String,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    #[arg(long, default_value_t = 0.1)]
    pub h_inv_min: f64,
    #[arg(long, default_value_t = 6.0)]
    pub h_inv_max: f64,
    #[arg(long, default_value_t = 60)]
    pub steps: usize,
    /// Residual tolerance on the phase equation.
    #[arg(long, default_value_t = blowup_core::solver::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SolveSigmaArgs {
    #[arg(long)]
    pub h: f64,
    #[arg(long, default_value_t = blowup_core::solver::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct SolveHArgs {
    #[arg(long)]
    pub p: f64,
    #[arg(long, default_value_t = blowup_core::solver::DEFAULT_TOL)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
#[command(group(clap::ArgGroup::new("entry").required(true).args(["p", "h"])))]
pub struct ProfileArgs {
    /// Nonlinearity power (> 3); h follows from σ(h) = σ_c(p).
    #[arg(long)]
    pub p: Option<f64>,
    /// Blow-up rate; p follows from σ_c(p) = σ(h).
    #[arg(long)]
    pub h: Option<f64>,
    #[arg(long, default_value_t = 50.0)]
    pub z_max: f64,
    /// Grid points per half-line, geometric from 1e-3 to z-max.
    #[arg(long, default_value_t = 400)]
    pub samples: usize,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-12)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Level {
    Fast,
    Full,
}

#[derive(Debug, Args)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Level::Fast)]
    pub level: Level,
    /// Shift σ off the root in the jump group (negative control).
    #[arg(long, default_value_t = 0.0, allow_negative_numbers = true)]
    pub perturb_sigma: f64,
    #[command(flatten)]
    pub output: Output,
}

#[derive(Debug, Args)]
pub struct AsymptoticsArgs {
    #[arg(long)]
    pub h: f64,
    /// Largest x; defaults to twice the turning point 2h^{−1/2}.
    #[arg(long)]
    pub z_max: Option<f64>,
    #[arg(long, default_value_t = 40)]
    pub samples: usize,
    /// Relative quadrature tolerance.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[command(flatten)]
    pub output: Output,
}

fn positive(name: &str, x: f64) -> Result<(), String> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(format!("--{name} must be a positive finite number, got {x}"))
    }
}

fn tolerance(x: f64) -> Result<(), String> {
    if x > 0.0 && x < 1e-2 {
        Ok(())
    } else {
        Err(format!("--tol must lie in (0, 1e-2), got {x}"))
    }
}

impl SweepArgs {
    pub fn validate(&self) -> Result<(), String> {
        positive("h-inv-min", self.h_inv_min)?;
        positive("h-inv-max", self.h_inv_max)?;
        if self.h_inv_max <= self.h_inv_min {
            return Err("--h-inv-max must exceed --h-inv-min".into());
        }
        if self.steps < 2 {
            return Err("--steps must be at least 2".into());
        }
        tolerance(self.tol)
    }
}

impl SolveSigmaArgs {
    pub fn validate(&self) -> Result<(), String> {
        positive("h", self.h)?;
        tolerance(self.tol)
    }
}

impl SolveHArgs {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.p.is_finite() && self.p > 3.0) {
            return Err(format!("--p must exceed 3, got {}", self.p));
        }
        tolerance(self.tol)
    }
}

impl ProfileArgs {
    pub fn validate(&self) -> Result<(), String> {
        if let Some(p) = self.p {
            if !(p.is_finite() && p > 3.0) {
                return Err(format!("--p must exceed 3, got {p}"));
            }
        }
        if let Some(h) = self.h {
            positive("h", h)?;
        }
        positive("z-max", self.z_max)?;
        if self.z_max <= 1e-2 {
            return Err("--z-max must exceed 1e-2".into());
        }
        if self.samples < 3 {
            return Err("--samples must be at least 3".into());
        }
        tolerance(self.tol)
    }
}

impl VerifyArgs {
    pub fn validate(&self) -> Result<(), String> {
        if !self.perturb_sigma.is_finite() {
            return Err("--perturb-sigma must be finite".into());
        }
        Ok(())
    }
}

impl AsymptoticsArgs {
    pub fn validate(&self) -> Result<(), String> {
        positive("h", self.h)?;
        if let Some(z) = self.z_max {
            positive("z-max", z)?;
        }
        if self.samples < 1 {
            return Err("--samples must be at least 1".into());
        }
        tolerance(self.tol)
    }
}
