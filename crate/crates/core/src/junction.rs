//! Closed-form analytics of the barrier-well junction.
//!
//! The transmission through the unit-width junction depends only on the
//! dimensionless pair `(eta, sigma)` via `alpha^2 = sigma^2 + eta^2` and
//! `beta^2 = sigma^2 - eta^2`. Every trigonometric/hyperbolic factor is
//! evaluated through the even-analytic helpers of [`crate::transfer`]
//! applied to the squared arguments, so the `eta > sigma` sector and the
//! `eta = sigma` line need no case split: the formula continues itself.
//!
//! In the `eta -> 0` limit the junction turns opaque except at strengths
//! solving `tan(sigma) = tanh(sigma)`, where a finite transmission
//! `1 - tanh^4(sigma)` survives together with a finite squared jump
//! `(1 - tanh^2)/(1 + tanh^2)` of the wavefunction across `x = 0`.

use crate::bisect::bisect;
use crate::error::{Error, Result};
use crate::transfer::{cos_sqrt, sinc_sqrt};
use crate::SIGMA_MAX;

/// The squared auxiliary arguments `alpha^2`, `beta^2`. Stored as squares:
/// `beta^2` may be negative (above-barrier sector) and nothing downstream
/// ever needs the square roots themselves.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AuxiliaryPair {
    pub alpha_sq: f64,
    pub beta_sq: f64,
}

impl AuxiliaryPair {
    /// Scattering convention: `alpha^2 = sigma^2 + eta^2`,
    /// `beta^2 = sigma^2 - eta^2`.
    pub fn scattering(eta: f64, sigma: f64) -> Self {
        AuxiliaryPair {
            alpha_sq: sigma * sigma + eta * eta,
            beta_sq: sigma * sigma - eta * eta,
        }
    }

    /// Bound-state convention, roles flipped: `alpha^2 = sigma^2 - zeta^2`,
    /// `beta^2 = sigma^2 + zeta^2`.
    pub fn bound(zeta: f64, sigma: f64) -> Self {
        AuxiliaryPair {
            alpha_sq: sigma * sigma - zeta * zeta,
            beta_sq: sigma * sigma + zeta * zeta,
        }
    }
}

/// A transparency level: the n-th positive root of `tan s = tanh s`
/// together with its limiting transmission and squared jump ratio.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResonanceLevel {
    pub n: usize,
    pub sigma: f64,
    /// `lim_{eta->0} T(eta, sigma_n) = 1 - tanh^4(sigma_n)`.
    pub transmission: f64,
    /// `|psi_barrier / psi_well|^2 = (1 - tanh^2)/(1 + tanh^2) < 1`.
    pub jump_ratio_sq: f64,
}

/// Transmission coefficient of the junction at `E = eta^2`.
///
/// The `eta^-2` term is evaluated as `(bracket/eta)^2` with the bracket
/// formed first; `eta = 0` itself is rejected — the limit is the caller's
/// job via small eta.
pub fn transmission_closed_form(eta: f64, sigma: f64) -> Result<f64> {
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::NonPositiveEta(eta));
    }
    if !sigma.is_finite() || sigma < 0.0 {
        return Err(Error::InvalidStrength(sigma));
    }
    if sigma > SIGMA_MAX {
        return Err(Error::StrengthOutOfRange(sigma));
    }
    let pair = AuxiliaryPair::scattering(eta, sigma);
    let (asq, bsq) = (pair.alpha_sq, pair.beta_sq);
    let ca = cos_sqrt(asq); // cos(alpha)
    let sa = sinc_sqrt(asq); // sin(alpha)/alpha
    let cb = cos_sqrt(-bsq); // cosh(beta), continued across beta^2 = 0
    let sb = sinc_sqrt(-bsq); // sinh(beta)/beta, continued

    let b1 = ca * cb - asq * sa * sb; // cos a cosh b - (a/b) sin a sinh b
    let b2 = ca * cb + bsq * sa * sb; // cos a cosh b + (b/a) sin a sinh b
    let b3 = sa * cb + ca * sb; // sin(a)/a cosh b + cos a sinh(b)/b
    let b4 = asq * sa * cb - bsq * ca * sb; // a sin a cosh b - b cos a sinh b
    let b4_over_eta = b4 / eta;
    Ok(4.0 / (2.0 + b1 * b1 + b2 * b2 + eta * eta * b3 * b3 + b4_over_eta * b4_over_eta))
}

/// Limiting transmission `1 - tanh^4(sigma)` at a transparency level.
///
/// Factored as `sech^2 (1 + tanh^2)` so the tiny values at large sigma
/// keep full relative accuracy instead of cancelling against 1.
pub fn resonance_transmission(sigma: f64) -> f64 {
    let t2 = sigma.tanh().powi(2);
    let sech2 = (1.0 / sigma.cosh()).powi(2);
    sech2 * (1.0 + t2)
}

/// Squared jump `|psi_barrier/psi_well|^2 = (1 - tanh^2)/(1 + tanh^2)`,
/// always below 1: the density steps *down* from well side to barrier side.
pub fn jump_ratio_sq(sigma: f64) -> f64 {
    let t2 = sigma.tanh().powi(2);
    let sech2 = (1.0 / sigma.cosh()).powi(2);
    sech2 / (1.0 + t2)
}

/// The first `n_max` transparency levels, in order.
///
/// `g(s) = tan s - tanh s` has exactly one zero in each pole-free bracket
/// `(n pi, n pi + pi/2)`: `g < 0` at the left end and `g -> +infinity` at
/// the pole, with `g' = sec^2 - sech^2 > 0` in between. The trivial root
/// `sigma_0 = 0` is excluded.
pub fn resonance_levels(n_max: usize) -> Vec<ResonanceLevel> {
    use std::f64::consts::{FRAC_PI_2, PI};
    (1..=n_max)
        .map(|n| {
            let lo = n as f64 * PI;
            // stay strictly left of the tan pole; the root sits near
            // n pi + pi/4, far from both ends
            let hi = lo + FRAC_PI_2 - 1e-9;
            let sigma = bisect(|s| s.tan() - s.tanh(), lo, hi);
            ResonanceLevel {
                n,
                sigma,
                transmission: resonance_transmission(sigma),
                jump_ratio_sq: jump_ratio_sq(sigma),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    // frozen from 60-digit arithmetic
    const SIGMA_1: f64 = 3.9266023120479188;
    const SIGMA_2: f64 = 7.0685827456287321;
    const T_1: f64 = 3.1032148715542851e-3;
    const T_2: f64 = 5.7995696040171168e-6;
    const JUMP_1: f64 = 7.7700980045965449e-4;

    #[test]
    fn zero_strength_is_transparent() {
        for eta in [1e-3, 0.5, 1.0, 7.0, 19.0] {
            let t = transmission_closed_form(eta, 0.0).unwrap();
            assert_relative_eq!(t, 1.0, epsilon = 1e-13);
        }
    }

    #[test]
    fn frozen_transmission_spots() {
        let cases = [
            (15.0, 10.0, 0.8634953393560694),
            (1.0, 2.0, 0.045523950306181098),
            (0.5, 3.0, 9.7880880037593466e-4),
            (2.0, 2.0, 0.43214907274900725),
            (0.1, 1.0, 0.077321918183236999),
            (3.0, 4.0, 0.010122407916547812),
            (7.0, 7.0, 0.06743386261410192),
            (1e-2, 0.5, 0.18518757601867786),
            (1e-3, SIGMA_1, 0.0031032144403573859),
        ];
        for (eta, sigma, expect) in cases {
            let t = transmission_closed_form(eta, sigma).unwrap();
            assert_relative_eq!(t, expect, max_relative = 1e-11);
        }
    }

    #[test]
    fn high_energy_profile_matches_fig_2b_shape() {
        // plateau near unity well above the junction strength...
        assert!(transmission_closed_form(15.0, 1.0).unwrap() > 0.999);
        assert!(transmission_closed_form(15.0, 8.0).unwrap() > 0.98);
        // ...with big variations close to eta = sigma
        let near = transmission_closed_form(15.0, 14.0).unwrap();
        let at = transmission_closed_form(15.0, 15.0).unwrap();
        assert!(near - at > 0.3, "near {near}, at {at}");
        assert!(transmission_closed_form(15.0, 16.0).unwrap() < 1e-4);
    }

    #[test]
    fn continuous_across_the_eta_equals_sigma_line() {
        for sigma in [2.0, SIGMA_1, 10.0, 19.5] {
            let below = transmission_closed_form(sigma * (1.0 - 1e-7), sigma).unwrap();
            let above = transmission_closed_form(sigma * (1.0 + 1e-7), sigma).unwrap();
            assert!((below - above).abs() < 1e-6, "sigma {sigma}");
        }
    }

    #[test]
    fn small_eta_limit_at_resonance() {
        let t = transmission_closed_form(1e-4, SIGMA_1).unwrap();
        assert!((t - T_1).abs() < 1e-10);
    }

    #[test]
    fn small_eta_off_resonance_is_opaque() {
        for sigma in [2.0, 5.0, 9.0] {
            assert!(transmission_closed_form(1e-4, sigma).unwrap() < 1e-4);
        }
    }

    #[test]
    fn rejects_bad_arguments() {
        assert!(transmission_closed_form(0.0, 1.0).is_err());
        assert!(transmission_closed_form(-1.0, 1.0).is_err());
        assert!(transmission_closed_form(1.0, -1.0).is_err());
        assert!(transmission_closed_form(1.0, 26.0).is_err());
    }

    #[test]
    fn resonance_levels_match_frozen_roots() {
        let levels = resonance_levels(10);
        assert_eq!(levels.len(), 10);
        assert_relative_eq!(levels[0].sigma, SIGMA_1, epsilon = 1e-12);
        assert_relative_eq!(levels[1].sigma, SIGMA_2, epsilon = 1e-12);
        for l in &levels {
            assert!(
                (l.sigma.tan() - l.sigma.tanh()).abs() < 1e-12,
                "n = {}",
                l.n
            );
        }
        // asymptote: tanh -> 1 makes sigma_n -> (4n+1) pi/4 exponentially fast
        let asymptote = 41.0 * std::f64::consts::PI / 4.0;
        assert!((levels[9].sigma - asymptote).abs() < 1e-12);
        // spacing approaches pi
        for w in levels.windows(2).skip(4) {
            assert!((w[1].sigma - w[0].sigma - std::f64::consts::PI).abs() < 1e-10);
        }
        // strictly increasing
        for w in levels.windows(2) {
            assert!(w[1].sigma > w[0].sigma);
        }
    }

    #[test]
    fn resonance_brackets_hold_exactly_one_sign_change() {
        use std::f64::consts::{FRAC_PI_2, PI};
        let g = |s: f64| s.tan() - s.tanh();
        for n in 1..=6 {
            let lo = n as f64 * PI;
            let hi = lo + FRAC_PI_2 - 1e-9;
            let mut changes = 0;
            let mut prev = g(lo);
            for i in 1..=20_000 {
                let s = lo + (hi - lo) * i as f64 / 20_000.0;
                let cur = g(s);
                if (prev > 0.0) != (cur > 0.0) {
                    changes += 1;
                }
                prev = cur;
            }
            assert_eq!(changes, 1, "bracket n = {n}");
        }
    }

    #[test]
    fn limiting_transmission_values() {
        assert_relative_eq!(resonance_transmission(1e-8), 1.0, epsilon = 1e-14);
        assert_relative_eq!(resonance_transmission(SIGMA_1), T_1, max_relative = 1e-13);
        assert_relative_eq!(resonance_transmission(SIGMA_2), T_2, max_relative = 1e-13);
        // consistency with the naive form where it is well conditioned
        let naive = 1.0 - SIGMA_1.tanh().powi(4);
        assert_relative_eq!(resonance_transmission(SIGMA_1), naive, epsilon = 1e-15);
    }

    #[test]
    fn jump_ratio_values() {
        assert_relative_eq!(jump_ratio_sq(1e-8), 1.0, epsilon = 1e-14);
        assert_relative_eq!(jump_ratio_sq(SIGMA_1), JUMP_1, max_relative = 1e-13);
        for s in [0.1, 0.5, 1.0, 3.0, 10.0, 20.0] {
            assert!(jump_ratio_sq(s) < 1.0, "sigma {s}");
            assert!(jump_ratio_sq(s) > 0.0);
        }
    }

    #[test]
    fn peak_heights_decrease_with_n() {
        let levels = resonance_levels(6);
        for w in levels.windows(2) {
            assert!(w[1].transmission < w[0].transmission);
        }
    }
}
