//! Discrete spectrum of the barrier-well junction.
//!
//! Binding parameters `zeta` (energy `-zeta^2`) solve a secular equation
//! whose printed form carries `tan(alpha)` poles and divisions by `zeta`,
//! `alpha`, `beta`. Multiplying through by `2 zeta alpha beta cos(alpha)
//! cosh(beta)` and dividing out the smooth positive factors `alpha beta`
//! and `cosh(beta)` leaves an expression in `zeta`, the squared arguments
//! and the even-analytic helpers with no pole and no exponential growth —
//! safe to scan and bisect, and small enough at a converged root for an
//! absolute residual bound to mean something. The reformulation shares
//! its zero set and sign with the original on `0 < zeta < sigma` (up to
//! the `cosh(beta)` factor it equals the transfer-matrix mismatch of
//! [`crate::transfer`] identically); a candidate filter still re-checks
//! the original form near `cos(alpha) = 0` in case a pole degenerately
//! collides with the multiplier's zero.
//!
//! The n-th branch `zeta_n(sigma)` emerges from zero exactly at the n-th
//! transparency level `sigma_n`, which is why the state count between
//! consecutive levels is `N + 1`.

use crate::bisect::{bisect, scan_roots};
use crate::error::{Error, Result};
use crate::junction::{self, AuxiliaryPair};
use crate::transfer::{cos_sqrt, sinc_sqrt};
use crate::SIGMA_MAX;

/// One bound state of the junction at strength `sigma`. Index `n` names
/// the threshold `sigma_n` the state emerged from: the deepest-bound state
/// (largest `zeta`) is `n = 0`, born at `sigma_0 = 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BoundState {
    pub n: usize,
    pub zeta: f64,
    pub sigma: f64,
}

/// The trace of one branch `zeta_n(sigma)` over a strength sweep.
#[derive(Debug, Clone, PartialEq)]
pub struct SpectrumCurve {
    pub n: usize,
    /// `(sigma, zeta)` samples, ascending in sigma, starting at the first
    /// sweep point past the branch threshold.
    pub samples: Vec<(f64, f64)>,
}

/// Number of grid points for the sign-change scan in [`bound_states`].
const SCAN_POINTS: usize = 2000;

fn residual_unchecked(zeta: f64, sigma: f64) -> f64 {
    let pair = AuxiliaryPair::bound(zeta, sigma);
    let (asq, bsq) = (pair.alpha_sq, pair.beta_sq);
    let ca = cos_sqrt(asq); // cos(alpha)
    let sa = sinc_sqrt(asq); // sin(alpha)/alpha
    let tb = sinc_sqrt(-bsq) / cos_sqrt(-bsq); // tanh(beta)/beta, bounded
    2.0 * zeta.powi(3) * sa * tb + zeta * zeta * (sa + ca * tb) + 2.0 * zeta * ca - asq * sa
        + bsq * ca * tb
}

/// The secular equation exactly as printed, poles and all. Only used to
/// vet scan candidates that land too close to a `cos(alpha)` zero.
fn original_form(zeta: f64, sigma: f64) -> f64 {
    let alpha = (sigma * sigma - zeta * zeta).sqrt();
    let beta = (sigma * sigma + zeta * zeta).sqrt();
    (zeta * zeta / (alpha * beta)) * alpha.tan() * beta.tanh()
        + 0.5 * zeta * (alpha.tan() / alpha + beta.tanh() / beta)
        + 1.0
        - (alpha * alpha.tan() - beta * beta.tanh()) / (2.0 * zeta)
}

/// Pole-free residual of the secular equation; zero exactly at the bound
/// states, normalized so that a converged root leaves less than 1e-10
/// behind. Rejects `zeta` outside the open interval `(0, sigma)`, where
/// `alpha` would turn imaginary.
pub fn bound_state_residual(zeta: f64, sigma: f64) -> Result<f64> {
    if !sigma.is_finite() || sigma <= 0.0 {
        return Err(Error::InvalidStrength(sigma));
    }
    if !zeta.is_finite() || zeta <= 0.0 || zeta >= sigma {
        return Err(Error::ZetaOutOfRange { zeta, sigma });
    }
    Ok(residual_unchecked(zeta, sigma))
}

/// True unless the candidate sits on a degenerate `cos(alpha) = 0` point
/// that is not a root of the original equation.
fn is_genuine_root(zeta: f64, sigma: f64) -> bool {
    let alpha = (sigma * sigma - zeta * zeta).max(0.0).sqrt();
    if alpha.cos().abs() > 1e-8 {
        // away from the tan poles the multiplier is nonzero, so a zero of
        // the reformulation is a zero of the original equation
        return true;
    }
    let d = 1e-6 * sigma;
    let probes = [zeta - d, zeta + d];
    probes
        .iter()
        .any(|&z| z > 0.0 && z < sigma && original_form(z, sigma).abs() < 1e3)
}

fn scan_bound_roots(sigma: f64, points: usize) -> Vec<f64> {
    let lo = 1e-9 * sigma;
    let hi = sigma * (1.0 - 1e-12);
    scan_roots(|z| residual_unchecked(z, sigma), lo, hi, points)
        .into_iter()
        .filter(|&z| is_genuine_root(z, sigma))
        .collect()
}

/// All bound states at strength `sigma`, ascending in `zeta`; the largest
/// `zeta` carries index 0. Roots come from a 2000-point sign-change scan
/// of the pole-free residual plus bisection; a 4x finer rescan guards
/// against unresolved root pairs.
pub fn bound_states(sigma: f64) -> Result<Vec<BoundState>> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::InvalidStrength(sigma));
    }
    if sigma > SIGMA_MAX {
        return Err(Error::StrengthOutOfRange(sigma));
    }
    if sigma == 0.0 {
        return Ok(Vec::new());
    }
    let roots = scan_bound_roots(sigma, SCAN_POINTS);
    let refined = scan_bound_roots(sigma, 4 * (SCAN_POINTS - 1) + 1);
    if refined.len() != roots.len() {
        return Err(Error::GridTooCoarse {
            step: sigma / (SCAN_POINTS - 1) as f64,
            coarse: roots.len(),
            refined: refined.len(),
        });
    }
    let count = roots.len();
    Ok(roots
        .into_iter()
        .enumerate()
        .map(|(i, zeta)| BoundState {
            n: count - 1 - i,
            zeta,
            sigma,
        })
        .collect())
}

/// `N + 1` for `sigma_N < sigma < sigma_{N+1}`: the states `n = 0..=N`
/// exist. Computed from the resonance levels alone; errors out within
/// 1e-9 of a threshold, where the count is ill-defined.
pub fn count_bound_states(sigma: f64) -> Result<usize> {
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::InvalidStrength(sigma));
    }
    if sigma > SIGMA_MAX {
        return Err(Error::StrengthOutOfRange(sigma));
    }
    if sigma == 0.0 {
        return Ok(0);
    }
    let mut count = 1; // the n = 0 state exists for every sigma > 0
    for n in 1.. {
        let level = junction::resonance_levels(n)[n - 1].sigma;
        if (sigma - level).abs() < 1e-9 {
            return Err(Error::ThresholdProximity(sigma));
        }
        if level > sigma {
            break;
        }
        count += 1;
    }
    Ok(count)
}

/// Residual of the small-`zeta` threshold equation
/// `alpha tan(alpha) - beta tanh(beta) = 2 zeta`.
///
/// At `zeta = 0` this is `sigma (tan sigma - tanh sigma)`, vanishing
/// exactly at the transparency levels: cut-off and transparency strengths
/// coincide. Intended for `0 <= zeta << sigma`.
pub fn threshold_residual(sigma: f64, zeta: f64) -> f64 {
    let alpha = (sigma * sigma - zeta * zeta).sqrt();
    let beta = (sigma * sigma + zeta * zeta).sqrt();
    alpha * alpha.tan() - beta * beta.tanh() - 2.0 * zeta
}

/// Smallest positive root of [`threshold_residual`] at fixed `sigma`,
/// if the scan up to `zeta_max` finds one.
pub fn threshold_root(sigma: f64, zeta_max: f64) -> Option<f64> {
    let lo = 1e-9 * sigma;
    let mut prev = lo;
    let mut f_prev = threshold_residual(sigma, prev);
    let n = 4000;
    for i in 1..=n {
        let z = lo + (zeta_max - lo) * i as f64 / n as f64;
        let f = threshold_residual(sigma, z);
        if f_prev == 0.0 {
            return Some(prev);
        }
        if f != 0.0 && (f_prev > 0.0) != (f > 0.0) {
            return Some(bisect(|z| threshold_residual(sigma, z), prev, z));
        }
        prev = z;
        f_prev = f;
    }
    None
}

/// Sweep `sigma` from `step` to `sigma_max` and collect every branch
/// `zeta_n(sigma)` by its emergence index. Reports a branch crossing if
/// two roots at one sigma approach within bisection resolution (none is
/// expected for this junction).
pub fn spectrum_curves(sigma_max: f64, step: f64) -> Result<Vec<SpectrumCurve>> {
    if !step.is_finite() || step <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "sweep step must be positive, got {step}"
        )));
    }
    if !sigma_max.is_finite() || sigma_max < step || sigma_max > SIGMA_MAX {
        return Err(Error::InvalidArgument(format!(
            "sigma_max must lie in [step, {SIGMA_MAX}], got {sigma_max}"
        )));
    }
    let n_steps = (sigma_max / step + 1e-9).floor() as usize;
    let mut curves: Vec<SpectrumCurve> = Vec::new();
    for k in 1..=n_steps {
        let sigma = k as f64 * step;
        let states = bound_states(sigma)?;
        for pair in states.windows(2) {
            if pair[1].zeta - pair[0].zeta < 1e-10 * sigma {
                return Err(Error::BranchCrossing(sigma));
            }
        }
        for s in states {
            if curves.len() <= s.n {
                curves.resize_with(s.n + 1, || SpectrumCurve {
                    n: 0,
                    samples: Vec::new(),
                });
                for (i, c) in curves.iter_mut().enumerate() {
                    c.n = i;
                }
            }
            curves[s.n].samples.push((sigma, s.zeta));
        }
    }
    Ok(curves)
}
