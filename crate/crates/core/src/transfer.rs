//! Exact transfer-matrix solver for piecewise-constant potentials.
//!
//! A region of constant height propagates the real pair `(psi, psi')`
//! across its width by a 2x2 matrix with unit determinant. The entries are
//! written through the even-analytic helpers [`cos_sqrt`] and [`sinc_sqrt`]
//! of the squared argument `u = (E - V) w^2`, so energies above, at and
//! below a slab top share one formula with no branch to cross. Composing
//! the slab and delta matrices in order solves any [`PiecewisePotential`]
//! exactly at fixed energy; scattering amplitudes and bound states follow
//! from matching plane or decaying waves at the support edges.
//!
//! Everything here is the brute-force oracle for the closed forms in
//! [`crate::junction`] and [`crate::spectrum`].

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::potential::{DeltaScatterer, PiecewisePotential, Slab};

/// `cos(sqrt(u))` for `u >= 0`, continued to `cosh(sqrt(-u))` below zero.
/// Entire in `u`, which is what removes the branch ambiguity at `E = V`.
pub fn cos_sqrt(u: f64) -> f64 {
    if u >= 0.0 {
        u.sqrt().cos()
    } else {
        (-u).sqrt().cosh()
    }
}

/// `sin(sqrt(u))/sqrt(u)` continued through `u = 0` (value 1) and to
/// `sinh(sqrt(-u))/sqrt(-u)` for negative `u`.
pub fn sinc_sqrt(u: f64) -> f64 {
    if u.abs() < 1e-4 {
        // series: 1 - u/6 + u^2/120, next term is below 1 ulp here
        return 1.0 + u * (-1.0 / 6.0 + u / 120.0);
    }
    if u > 0.0 {
        let r = u.sqrt();
        r.sin() / r
    } else {
        let r = (-u).sqrt();
        r.sinh() / r
    }
}

/// Real 2x2 matrix propagating `(psi, psi')` from the left edge of a region
/// to its right edge at fixed energy. Composition preserves the unit
/// determinant (the Wronskian).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransferMatrix {
    pub m11: f64,
    pub m12: f64,
    pub m21: f64,
    pub m22: f64,
}

impl TransferMatrix {
    pub const IDENTITY: TransferMatrix = TransferMatrix {
        m11: 1.0,
        m12: 0.0,
        m21: 0.0,
        m22: 1.0,
    };

    /// Apply `self` first, `next` second: returns `next * self`.
    pub fn then(self, next: TransferMatrix) -> TransferMatrix {
        TransferMatrix {
            m11: next.m11 * self.m11 + next.m12 * self.m21,
            m12: next.m11 * self.m12 + next.m12 * self.m22,
            m21: next.m21 * self.m11 + next.m22 * self.m21,
            m22: next.m21 * self.m12 + next.m22 * self.m22,
        }
    }

    pub fn det(&self) -> f64 {
        self.m11 * self.m22 - self.m12 * self.m21
    }

    fn apply(&self, psi: Complex64, dpsi: Complex64) -> (Complex64, Complex64) {
        (
            self.m11 * psi + self.m12 * dpsi,
            self.m21 * psi + self.m22 * dpsi,
        )
    }
}

fn propagator(width: f64, height: f64, energy: f64) -> TransferMatrix {
    let u = (energy - height) * width * width;
    let c = cos_sqrt(u);
    let s = sinc_sqrt(u);
    TransferMatrix {
        m11: c,
        m12: width * s,
        m21: -(energy - height) * width * s,
        m22: c,
    }
}

/// Exact propagator for `psi'' = (V - E) psi` across one slab.
pub fn slab_matrix(slab: &Slab, energy: f64) -> TransferMatrix {
    propagator(slab.width(), slab.height(), energy)
}

/// A point scatterer leaves `psi` alone and kicks `psi'` by `g psi`.
pub fn delta_matrix(d: &DeltaScatterer) -> TransferMatrix {
    TransferMatrix {
        m11: 1.0,
        m12: 0.0,
        m21: d.strength(),
        m22: 1.0,
    }
}

/// Walk the support left to right, handing each piece (partial slabs split
/// at interior delta positions, then the deltas themselves) to `visit`.
fn walk<F: FnMut(Piece)>(potential: &PiecewisePotential, mut visit: F) {
    let deltas = potential.deltas();
    let mut di = 0;
    let mut x = potential.x_left();
    for slab in potential.slabs() {
        let x_end = x + slab.width();
        while di < deltas.len() && deltas[di].position() <= x_end {
            let d = deltas[di];
            if d.position() > x {
                visit(Piece::Segment {
                    width: d.position() - x,
                    height: slab.height(),
                });
                x = d.position();
            }
            visit(Piece::Delta(d));
            di += 1;
        }
        if x_end > x {
            visit(Piece::Segment {
                width: x_end - x,
                height: slab.height(),
            });
        }
        x = x_end;
    }
    // deltas on the right edge of an empty support
    while di < deltas.len() {
        visit(Piece::Delta(deltas[di]));
        di += 1;
    }
}

enum Piece {
    Segment { width: f64, height: f64 },
    Delta(DeltaScatterer),
}

/// Ordered product of slab and delta matrices over the whole support.
pub fn total_matrix(potential: &PiecewisePotential, energy: f64) -> TransferMatrix {
    let mut m = TransferMatrix::IDENTITY;
    walk(potential, |piece| {
        let next = match piece {
            Piece::Segment { width, height } => propagator(width, height, energy),
            Piece::Delta(d) => delta_matrix(&d),
        };
        m = m.then(next);
    });
    m
}

/// Scattering data at energy `eta^2`: amplitudes for both incidence sides
/// plus the flux transmission/reflection probabilities.
#[derive(Debug, Clone, Copy)]
pub struct ScatteringResult {
    pub eta: f64,
    pub t_left: Complex64,
    pub r_left: Complex64,
    pub t_right: Complex64,
    pub r_right: Complex64,
    /// `|t|^2`; identical for both incidence sides.
    pub transmission: f64,
    /// `|r|^2 = 1 - T`.
    pub reflection: f64,
}

struct Matching {
    a: f64,
    b: f64,
    den: Complex64,
    n_left: Complex64,
    n_right: Complex64,
}

fn matching(potential: &PiecewisePotential, eta: f64) -> Result<Matching> {
    if !eta.is_finite() || eta <= 0.0 {
        return Err(Error::NonPositiveEta(eta));
    }
    let m = total_matrix(potential, eta * eta);
    Ok(Matching {
        a: potential.x_left(),
        b: potential.x_right(),
        den: Complex64::new(eta * eta * m.m12 - m.m21, eta * (m.m11 + m.m22)),
        n_left: Complex64::new(-(eta * eta * m.m12 + m.m21), eta * (m.m11 - m.m22)),
        n_right: Complex64::new(eta * eta * m.m12 + m.m21, eta * (m.m11 - m.m22)),
    })
}

/// Match `e^{i eta x} + r e^{-i eta x}` on the left against `t e^{i eta x}`
/// on the right (and mirrored for right incidence) through the total
/// matrix at energy `eta^2`. `T` is computed in ratio form `4 eta^2/|D|^2`,
/// never as a difference of large squares.
pub fn scatter(potential: &PiecewisePotential, eta: f64) -> Result<ScatteringResult> {
    let m = matching(potential, eta)?;
    let den_sq = m.den.norm_sqr();
    let t = Complex64::new(0.0, 2.0 * eta) * Complex64::from_polar(1.0, eta * (m.a - m.b)) / m.den;
    let r_left = -Complex64::from_polar(1.0, 2.0 * eta * m.a) * m.n_left / m.den;
    let r_right = Complex64::from_polar(1.0, -2.0 * eta * m.b) * m.n_right / m.den;
    Ok(ScatteringResult {
        eta,
        t_left: t,
        r_left,
        t_right: t,
        r_right,
        transmission: 4.0 * eta * eta / den_sq,
        reflection: m.n_left.norm_sqr() / den_sq,
    })
}

/// Which side the unit-amplitude wave comes in from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Incidence {
    Left,
    Right,
}

/// Value of the left-incidence scattering solution at `x`, normalized to
/// unit incident amplitude; piecewise-exact propagation from the left edge.
pub fn evaluate_scattering_wavefunction(
    potential: &PiecewisePotential,
    eta: f64,
    x: f64,
) -> Result<Complex64> {
    evaluate_scattering_wavefunction_incident(potential, eta, x, Incidence::Left)
}

/// Same, for either incidence side. The two solutions share `|t|` but probe
/// the junction from opposite directions, which matters at finite `eta`.
pub fn evaluate_scattering_wavefunction_incident(
    potential: &PiecewisePotential,
    eta: f64,
    x: f64,
    incidence: Incidence,
) -> Result<Complex64> {
    let m = matching(potential, eta)?;
    let i_eta = Complex64::new(0.0, eta);
    let (mut psi, mut dpsi) = match incidence {
        Incidence::Left => {
            let r = -Complex64::from_polar(1.0, 2.0 * eta * m.a) * m.n_left / m.den;
            if x <= m.a {
                let inc = Complex64::from_polar(1.0, eta * x);
                return Ok(inc + r * Complex64::from_polar(1.0, -eta * x));
            }
            if x >= m.b {
                let t = Complex64::new(0.0, 2.0 * eta)
                    * Complex64::from_polar(1.0, eta * (m.a - m.b))
                    / m.den;
                return Ok(t * Complex64::from_polar(1.0, eta * x));
            }
            let inc = Complex64::from_polar(1.0, eta * m.a);
            let refl = r * Complex64::from_polar(1.0, -eta * m.a);
            (inc + refl, i_eta * (inc - refl))
        }
        Incidence::Right => {
            let t = Complex64::new(0.0, 2.0 * eta) * Complex64::from_polar(1.0, eta * (m.a - m.b))
                / m.den;
            if x <= m.a {
                return Ok(t * Complex64::from_polar(1.0, -eta * x));
            }
            if x >= m.b {
                let r = Complex64::from_polar(1.0, -2.0 * eta * m.b) * m.n_right / m.den;
                return Ok(
                    Complex64::from_polar(1.0, -eta * x) + r * Complex64::from_polar(1.0, eta * x)
                );
            }
            // transmitted wave t e^{-i eta x} below the support, propagated up
            let psi = t * Complex64::from_polar(1.0, -eta * m.a);
            (psi, -i_eta * psi)
        }
    };

    // propagate (psi, psi') from the left edge to x through partial pieces
    let mut cur = m.a;
    let energy = eta * eta;
    walk(potential, |piece| match piece {
        Piece::Segment { width, height } => {
            if cur >= x {
                return;
            }
            let w = width.min(x - cur);
            let (p, d) = propagator(w, height, energy).apply(psi, dpsi);
            psi = p;
            dpsi = d;
            cur += width;
        }
        Piece::Delta(d) => {
            if cur < x {
                dpsi += d.strength() * psi;
            }
        }
    });
    Ok(psi)
}

/// Binding parameter `zeta = sqrt(-E) > 0` of a negative-energy state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BindingParameter(f64);

impl BindingParameter {
    pub fn new(zeta: f64) -> Result<Self> {
        if !zeta.is_finite() || zeta <= 0.0 {
            return Err(Error::InvalidZeta(zeta));
        }
        Ok(BindingParameter(zeta))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// `F(zeta) = m21 + zeta (m11 + m22) + zeta^2 m12` at energy `-zeta^2`.
/// Zero exactly when the decaying tails `e^{zeta x}` and `e^{-zeta x}`
/// match through the support: a bound state.
pub fn bound_state_mismatch(potential: &PiecewisePotential, zeta: BindingParameter) -> f64 {
    let z = zeta.value();
    let m = total_matrix(potential, -z * z);
    m.m21 + z * (m.m11 + m.m22) + z * z * m.m12
}

const SCAN_ZETA_MIN: f64 = 1e-6;
const SCAN_STEP_FRACTION: f64 = 1e-3;

/// All roots of [`bound_state_mismatch`] in `(1e-6, zeta_max)`, by a
/// sign-change scan at step `1e-3 * zeta_max` plus bisection, returned
/// ascending. A 4x finer rescan guards against two roots hiding in one
/// grid cell; a count mismatch is reported as [`Error::GridTooCoarse`].
pub fn find_bound_states_numeric(
    potential: &PiecewisePotential,
    zeta_max: f64,
) -> Result<Vec<BindingParameter>> {
    if !zeta_max.is_finite() || zeta_max <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "zeta_max must be positive and finite, got {zeta_max}"
        )));
    }
    if zeta_max <= SCAN_ZETA_MIN {
        return Ok(Vec::new());
    }
    let f = |z: f64| {
        let m = total_matrix(potential, -z * z);
        m.m21 + z * (m.m11 + m.m22) + z * z * m.m12
    };
    let n = (1.0 / SCAN_STEP_FRACTION) as usize + 1;
    let roots = crate::bisect::scan_roots(f, SCAN_ZETA_MIN, zeta_max, n);
    let refined = crate::bisect::scan_roots(f, SCAN_ZETA_MIN, zeta_max, 4 * (n - 1) + 1);
    if refined.len() != roots.len() {
        return Err(Error::GridTooCoarse {
            step: SCAN_STEP_FRACTION * zeta_max,
            coarse: roots.len(),
            refined: refined.len(),
        });
    }
    Ok(roots.into_iter().map(BindingParameter).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::potential::{build_barrier_well, build_double_delta, Strength};
    use approx::assert_relative_eq;

    fn pot(x_left: f64, slabs: &[(f64, f64)], deltas: &[(f64, f64)]) -> PiecewisePotential {
        PiecewisePotential::new(
            x_left,
            slabs
                .iter()
                .map(|&(w, h)| Slab::new(w, h).unwrap())
                .collect(),
            deltas
                .iter()
                .map(|&(p, g)| DeltaScatterer::new(p, g).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn helper_values() {
        assert_eq!(cos_sqrt(0.0), 1.0);
        assert_eq!(sinc_sqrt(0.0), 1.0);
        let pi2 = std::f64::consts::PI.powi(2);
        assert_relative_eq!(cos_sqrt(pi2), -1.0, epsilon = 1e-15);
        // cosh(sqrt(3)) and sinh(sqrt(3))/sqrt(3), frozen from 60-digit arithmetic
        assert_relative_eq!(cos_sqrt(-3.0), 2.9145774401759282, epsilon = 1e-15);
        assert_relative_eq!(sinc_sqrt(-3.0), 1.580586563566668, epsilon = 1e-15);
        // series / direct crossover is seamless
        for u in [-1.1e-4f64, -0.9e-4, 0.9e-4, 1.1e-4] {
            let direct = if u > 0.0 {
                u.sqrt().sin() / u.sqrt()
            } else {
                (-u).sqrt().sinh() / (-u).sqrt()
            };
            assert_relative_eq!(sinc_sqrt(u), direct, epsilon = 1e-14);
        }
    }

    #[test]
    fn free_slab_at_zero_energy() {
        let m = slab_matrix(&Slab::new(1.0, 0.0).unwrap(), 0.0);
        assert_eq!((m.m11, m.m12, m.m21, m.m22), (1.0, 1.0, 0.0, 1.0));
    }

    #[test]
    fn half_wavelength_slab() {
        let e = std::f64::consts::PI.powi(2);
        let m = slab_matrix(&Slab::new(1.0, 0.0).unwrap(), e);
        assert_relative_eq!(m.m11, -1.0, epsilon = 1e-14);
        assert!(m.m12.abs() < 1e-15);
        assert!(m.m21.abs() < 1e-14);
        assert_relative_eq!(m.m22, -1.0, epsilon = 1e-14);
    }

    #[test]
    fn tunneling_slab_entries() {
        let m = slab_matrix(&Slab::new(1.0, 4.0).unwrap(), 1.0);
        assert_relative_eq!(m.m11, 2.9145774401759282, epsilon = 1e-14);
        assert_relative_eq!(m.m12, 1.580586563566668, epsilon = 1e-14);
        assert_relative_eq!(m.m21, 3.0 * 1.580586563566668, epsilon = 1e-14);
        assert_relative_eq!(m.det(), 1.0, epsilon = 1e-14);
    }

    #[test]
    fn delta_matrix_definition_and_additivity() {
        let id = delta_matrix(&DeltaScatterer::new(0.0, 0.0).unwrap());
        assert_eq!(id, TransferMatrix::IDENTITY);
        let half = delta_matrix(&DeltaScatterer::new(0.0, 0.5).unwrap());
        assert_eq!(
            (half.m11, half.m12, half.m21, half.m22),
            (1.0, 0.0, 0.5, 1.0)
        );
        let g = delta_matrix(&DeltaScatterer::new(0.0, 0.75).unwrap());
        let h = delta_matrix(&DeltaScatterer::new(0.0, -0.25).unwrap());
        let combined = g.then(h);
        assert_eq!(combined.m21, 0.5);
        assert_eq!(combined.m11, 1.0);
    }

    #[test]
    fn total_matrix_of_free_stack_is_single_free_slab() {
        let split = pot(0.0, &[(0.7, 0.0), (1.3, 0.0)], &[]);
        let whole = pot(0.0, &[(2.0, 0.0)], &[]);
        for e in [-3.0, 0.0, 2.5, 40.0] {
            let a = total_matrix(&split, e);
            let b = total_matrix(&whole, e);
            assert_relative_eq!(a.m11, b.m11, epsilon = 1e-13);
            assert_relative_eq!(a.m12, b.m12, epsilon = 1e-13);
            assert_relative_eq!(a.m21, b.m21, epsilon = 1e-13, max_relative = 1e-13);
            assert_relative_eq!(a.m22, b.m22, epsilon = 1e-13);
        }
    }

    #[test]
    fn scatter_free_is_transparent() {
        let r = scatter(&PiecewisePotential::free(), 1.0).unwrap();
        assert_relative_eq!(r.transmission, 1.0, epsilon = 1e-14);
        assert!(r.reflection < 1e-14);
    }

    #[test]
    fn scatter_single_delta_closed_form() {
        // T = 1/(1 + (g/2 eta)^2); g = 2, eta = 1 gives exactly 1/2
        let p = pot(0.0, &[], &[(0.0, 2.0)]);
        let r = scatter(&p, 1.0).unwrap();
        assert_relative_eq!(r.transmission, 0.5, epsilon = 1e-14);
        assert_relative_eq!(r.transmission + r.reflection, 1.0, epsilon = 1e-14);
    }

    #[test]
    fn scatter_rejects_nonpositive_eta() {
        let p = PiecewisePotential::free();
        assert!(matches!(scatter(&p, 0.0), Err(Error::NonPositiveEta(_))));
        assert!(scatter(&p, -1.0).is_err());
    }

    #[test]
    fn barrier_well_transmission_frozen_spot() {
        let p = build_barrier_well(Strength::new(10.0).unwrap()).unwrap();
        let r = scatter(&p, 15.0).unwrap();
        assert_relative_eq!(r.transmission, 0.8634953393560694, epsilon = 1e-12);
    }

    #[test]
    fn wavefunction_free_is_plane_wave() {
        let psi = evaluate_scattering_wavefunction(&PiecewisePotential::free(), 1.0, 0.0).unwrap();
        assert_relative_eq!(psi.re, 1.0, epsilon = 1e-14);
        assert!(psi.im.abs() < 1e-14);
    }

    #[test]
    fn wavefunction_matches_transmitted_asymptotics() {
        // the value propagated to the right edge must equal t e^{i eta b}
        let p = build_barrier_well(Strength::new(3.0).unwrap()).unwrap();
        for eta in [0.3, 1.0, 4.0] {
            let s = scatter(&p, eta).unwrap();
            let at_edge = evaluate_scattering_wavefunction(&p, eta, 1.0).unwrap();
            let expect = s.t_left * Complex64::from_polar(1.0, eta);
            assert!((at_edge - expect).norm() < 1e-12, "eta {eta}");
        }
    }

    #[test]
    fn wavefunction_is_continuous_across_pieces() {
        let p = pot(-1.0, &[(1.0, 5.0), (1.0, -2.0)], &[(0.0, 1.5)]);
        for x in [-1.0, -0.4, 0.0, 0.3, 1.0] {
            let lo = evaluate_scattering_wavefunction(&p, 2.0, x - 1e-9).unwrap();
            let hi = evaluate_scattering_wavefunction(&p, 2.0, x + 1e-9).unwrap();
            assert!((lo - hi).norm() < 1e-7);
        }
    }

    #[test]
    fn jump_ratio_from_both_incidence_sides() {
        // sigma_1 and its Eq.-(6) squared jump, frozen from 60-digit arithmetic
        let sigma_1 = 3.9266023120479188;
        let jump = 7.7700980045965449e-4;
        let p = build_barrier_well(Strength::new(sigma_1).unwrap()).unwrap();

        // right incidence converges fast: already inside 1e-3 at eta = 1e-3
        let eta = 1e-3;
        let pb =
            evaluate_scattering_wavefunction_incident(&p, eta, -1.0, Incidence::Right).unwrap();
        let pw = evaluate_scattering_wavefunction_incident(&p, eta, 1.0, Incidence::Right).unwrap();
        let ratio = (pb.norm() / pw.norm()).powi(2);
        assert!((ratio - jump).abs() / jump < 1e-3, "right ratio {ratio}");
        assert!(ratio < 1.0);

        // left incidence carries an O(eta^2) offset that is large relative
        // to the tiny limit; it reaches 1e-3 relative around eta = 1e-5
        let eta = 1e-5;
        let pb = evaluate_scattering_wavefunction(&p, eta, -1.0).unwrap();
        let pw = evaluate_scattering_wavefunction(&p, eta, 1.0).unwrap();
        let ratio = (pb.norm() / pw.norm()).powi(2);
        assert!((ratio - jump).abs() / jump < 1e-3, "left ratio {ratio}");
    }

    #[test]
    fn off_resonance_junction_reflects_at_small_eta() {
        let p = build_barrier_well(Strength::new(2.0).unwrap()).unwrap();
        let pb = evaluate_scattering_wavefunction(&p, 1e-3, -1.0).unwrap();
        let pw = evaluate_scattering_wavefunction(&p, 1e-3, 1.0).unwrap();
        assert!(pb.norm() < 1e-2);
        assert!(pw.norm() < 1e-2);
    }

    #[test]
    fn double_delta_forms_a_node_at_origin() {
        let p = build_double_delta(Strength::new(3.0).unwrap()).unwrap();
        let r = scatter(&p, 1e-3).unwrap();
        assert!(r.transmission < 1e-4);
        let at0 = evaluate_scattering_wavefunction(&p, 1e-3, 0.0).unwrap();
        assert!(at0.norm() < 1e-2);
    }

    #[test]
    fn mismatch_free_line_has_no_roots() {
        let p = pot(0.0, &[(2.0, 0.0)], &[]);
        for z in [0.1, 1.0, 5.0] {
            let f = bound_state_mismatch(&p, BindingParameter::new(z).unwrap());
            assert!(f > 0.0);
        }
        assert!(find_bound_states_numeric(&p, 10.0).unwrap().is_empty());
        assert!(find_bound_states_numeric(&PiecewisePotential::free(), 10.0)
            .unwrap()
            .is_empty());
    }

    #[test]
    fn single_attractive_delta_bound_state() {
        // strength -2g binds at zeta = g
        let g = 1.5;
        let p = pot(0.0, &[], &[(0.0, -2.0 * g)]);
        let roots = find_bound_states_numeric(&p, 5.0).unwrap();
        assert_eq!(roots.len(), 1);
        assert_relative_eq!(roots[0].value(), g, epsilon = 1e-9);
    }

    #[test]
    fn junction_bound_state_counts() {
        let p15 = build_barrier_well(Strength::new(15.0).unwrap()).unwrap();
        assert_eq!(find_bound_states_numeric(&p15, 15.0).unwrap().len(), 5);

        let sigma = 3.9266023120479188 + 0.05;
        let p = build_barrier_well(Strength::new(sigma).unwrap()).unwrap();
        let roots = find_bound_states_numeric(&p, sigma).unwrap();
        assert_eq!(roots.len(), 2);
        // the newly emerged state is still small; frozen values
        assert_relative_eq!(roots[0].value(), 0.17853879457935663, epsilon = 1e-9);
        assert_relative_eq!(roots[1].value(), 3.3331079586497432, epsilon = 1e-9);
    }

    #[test]
    fn rejects_invalid_binding_parameter() {
        assert!(BindingParameter::new(0.0).is_err());
        assert!(BindingParameter::new(-1.0).is_err());
        assert!(find_bound_states_numeric(&PiecewisePotential::free(), 0.0).is_err());
    }
}
