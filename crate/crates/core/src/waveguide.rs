//! TE modes of the antisymmetric dielectric step layer.
//!
//! A layer of half-width `a` raises the permittivity by `eps_m` on one side
//! of its midplane and lowers it by `eps_m` on the other, inside a
//! background `eps_b`. For TE waves `E(x) e^{iqz}` the transverse problem
//! is the barrier-well junction with `sigma = k a sqrt(eps_m)`; the offset
//! of `q^2` from `k^2 eps_b` plays the energy: below the line
//! `q = k sqrt(eps_b)` the mode scatters through the layer with
//! `eta = a sqrt(k^2 eps_b - q^2)`, above it the mode is guided with
//! `zeta = a sqrt(q^2 - k^2 eps_b)`. Guided branches detach from the
//! continuum exactly at the transparency strengths, so cut-off and
//! transparency frequencies coincide.

use crate::error::{Error, Result};
use crate::junction::{self, transmission_closed_form};
use crate::spectrum;
use crate::SIGMA_MAX;

/// Slab geometry and permittivity profile: background `eps_b`, modulation
/// amplitude `eps_m`, half-width `a`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WaveguideConfig {
    a: f64,
    eps_b: f64,
    eps_m: f64,
}

impl WaveguideConfig {
    /// All three parameters must be positive. A profile with
    /// `eps_m >= eps_b` is accepted — the junction math is unchanged —
    /// but it has no sector II; check [`Self::sector_ii_exists`].
    pub fn new(a: f64, eps_b: f64, eps_m: f64) -> Result<Self> {
        for (name, value) in [("a", a), ("eps_b", eps_b), ("eps_m", eps_m)] {
            if !value.is_finite() || value <= 0.0 {
                return Err(Error::InvalidWaveguideParam { name, value });
            }
        }
        Ok(WaveguideConfig { a, eps_b, eps_m })
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn eps_b(&self) -> f64 {
        self.eps_b
    }

    pub fn eps_m(&self) -> f64 {
        self.eps_m
    }

    /// Whether the low-permittivity side still propagates (`eps_b > eps_m`),
    /// i.e. whether the continuum splits into sectors I and II at all.
    pub fn sector_ii_exists(&self) -> bool {
        self.eps_b > self.eps_m
    }
}

/// A point of the `(k, q)` spectral plane.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ModePoint {
    pub k: f64,
    pub q: f64,
}

impl ModePoint {
    pub fn new(k: f64, q: f64) -> Result<Self> {
        if !k.is_finite() || !q.is_finite() || k < 0.0 || q < 0.0 {
            return Err(Error::InvalidModePoint { k, q });
        }
        Ok(ModePoint { k, q })
    }
}

/// Where a mode point lands after the junction mapping.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Regime {
    /// `q^2 < k^2 eps_b`: the layer is probed at `E = eta^2`.
    Scattering { eta: f64 },
    /// `q^2 > k^2 eps_b`: candidate guided mode with binding `zeta`.
    Guided { zeta: f64 },
    /// On the line `q = k sqrt(eps_b)` to rounding accuracy.
    Threshold,
}

/// Junction parameters equivalent to a mode point: `sigma^2 = k^2 a^2 eps_m`
/// plus the regime classification.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MappedParameters {
    pub sigma: f64,
    pub regime: Regime,
}

/// Continuum sector of a scattering point: I is `eta < sigma` (between
/// lines 1 and 2), II is `eta > sigma` (below line 2).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sector {
    I,
    II,
    Boundary,
}

impl std::fmt::Display for Sector {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Sector::I => write!(f, "I"),
            Sector::II => write!(f, "II"),
            Sector::Boundary => write!(f, "boundary"),
        }
    }
}

/// Transverse transmission of a continuum mode point, with its sector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TransverseTransmission {
    pub eta: f64,
    pub sigma: f64,
    pub sector: Sector,
    pub transmission: f64,
}

/// A cut-off point `(k_n, q_n0)` on the line `q = k sqrt(eps_b)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CutoffPoint {
    pub n: usize,
    pub k: f64,
    pub q: f64,
}

/// One sample of a dispersion curve; `q` is `None` below cut-off.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DispersionSample {
    pub k: f64,
    pub q: Option<f64>,
}

// Relative slack for deciding that q^2 == k^2 eps_b. A handful of ulps:
// wide enough to absorb the rounding of q = k*sqrt(eps_b), far too narrow
// to misfile any physical point.
const THRESHOLD_SLACK: f64 = 32.0 * f64::EPSILON;

/// Map a `(k, q)` point onto junction parameters.
pub fn map_parameters(config: &WaveguideConfig, point: &ModePoint) -> MappedParameters {
    let sigma = point.k * config.a * config.eps_m.sqrt();
    let kk = point.k * point.k * config.eps_b;
    let qq = point.q * point.q;
    let disc = kk - qq;
    let regime = if disc.abs() <= THRESHOLD_SLACK * (kk + qq) {
        Regime::Threshold
    } else if disc > 0.0 {
        Regime::Scattering {
            eta: config.a * disc.sqrt(),
        }
    } else {
        Regime::Guided {
            zeta: config.a * (-disc).sqrt(),
        }
    };
    MappedParameters { sigma, regime }
}

/// The first `n_max` cut-off points: `k_n = sigma_n / (a sqrt(eps_m))`,
/// `q_n0 = (sigma_n / a) sqrt(eps_b / eps_m)`; all on `q = k sqrt(eps_b)`.
pub fn cutoff_points(config: &WaveguideConfig, n_max: usize) -> Vec<CutoffPoint> {
    junction::resonance_levels(n_max)
        .into_iter()
        .map(|level| CutoffPoint {
            n: level.n,
            k: level.sigma / (config.a * config.eps_m.sqrt()),
            q: level.sigma / config.a * (config.eps_b / config.eps_m).sqrt(),
        })
        .collect()
}

/// The guided branch `q_n(k) = sqrt(k^2 eps_b + zeta_n^2/a^2)` sampled at
/// the given ascending wave numbers; samples below the branch cut-off get
/// `q = None`. Errors if no sample is above cut-off at all.
pub fn dispersion_curve(
    config: &WaveguideConfig,
    n: usize,
    k_samples: &[f64],
) -> Result<Vec<DispersionSample>> {
    for w in k_samples.windows(2) {
        if w[1] < w[0] {
            return Err(Error::InvalidArgument(
                "k samples must be sorted ascending".into(),
            ));
        }
    }
    let cutoff_sigma = if n == 0 {
        0.0
    } else {
        junction::resonance_levels(n)[n - 1].sigma
    };
    let mut out = Vec::with_capacity(k_samples.len());
    let mut any = false;
    for &k in k_samples {
        if !k.is_finite() || k < 0.0 {
            return Err(Error::InvalidModePoint { k, q: 0.0 });
        }
        let sigma = k * config.a * config.eps_m.sqrt();
        if sigma > SIGMA_MAX {
            return Err(Error::StrengthOutOfRange(sigma));
        }
        if sigma <= cutoff_sigma || sigma == 0.0 {
            out.push(DispersionSample { k, q: None });
            continue;
        }
        let zeta = spectrum::bound_states(sigma)?
            .into_iter()
            .find(|s| s.n == n)
            .map(|s| s.zeta);
        match zeta {
            Some(z) => {
                any = true;
                let q = (k * k * config.eps_b + z * z / (config.a * config.a)).sqrt();
                out.push(DispersionSample { k, q: Some(q) });
            }
            None => out.push(DispersionSample { k, q: None }),
        }
    }
    if !any {
        return Err(Error::EmptyCurve(n));
    }
    Ok(out)
}

/// Transverse transmission of a continuum point, classified into sector I
/// (`eta < sigma`) or II (`eta > sigma`); points on line 2 get the
/// boundary flag. Guided and threshold points are rejected.
pub fn transverse_transmission(
    config: &WaveguideConfig,
    point: &ModePoint,
) -> Result<TransverseTransmission> {
    let mapped = map_parameters(config, point);
    let eta = match mapped.regime {
        Regime::Scattering { eta } => eta,
        _ => {
            return Err(Error::NotScattering {
                k: point.k,
                q: point.q,
            })
        }
    };
    let sigma = mapped.sigma;
    let beta_sq = sigma * sigma - eta * eta;
    let sector = if beta_sq.abs() <= THRESHOLD_SLACK * (sigma * sigma + eta * eta) {
        Sector::Boundary
    } else if beta_sq > 0.0 {
        Sector::I
    } else {
        Sector::II
    };
    Ok(TransverseTransmission {
        eta,
        sigma,
        sector,
        transmission: transmission_closed_form(eta, sigma)?,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    const SIGMA_1: f64 = 3.9266023120479188;

    fn config() -> WaveguideConfig {
        WaveguideConfig::new(1.0, 2.25, 1.0).unwrap()
    }

    #[test]
    fn mapping_examples() {
        let m = map_parameters(&config(), &ModePoint::new(2.0, 1.0).unwrap());
        assert_relative_eq!(m.sigma, 2.0, epsilon = 1e-15);
        match m.regime {
            Regime::Scattering { eta } => {
                assert_relative_eq!(eta, 8.0f64.sqrt(), epsilon = 1e-14)
            }
            other => panic!("expected scattering, got {other:?}"),
        }

        let m = map_parameters(&config(), &ModePoint::new(2.0, 4.0).unwrap());
        match m.regime {
            Regime::Guided { zeta } => assert_relative_eq!(zeta, 7.0f64.sqrt(), epsilon = 1e-14),
            other => panic!("expected guided, got {other:?}"),
        }

        let q = 2.0 * 2.25f64.sqrt();
        let m = map_parameters(&config(), &ModePoint::new(2.0, q).unwrap());
        assert_eq!(m.regime, Regime::Threshold);
    }

    #[test]
    fn mapping_inverts_on_each_regime() {
        let cfg = WaveguideConfig::new(0.7, 3.1, 1.4).unwrap();
        for (k, q) in [(1.0, 0.3), (2.0, 3.0), (5.0, 8.0), (4.0, 7.04)] {
            let p = ModePoint::new(k, q).unwrap();
            let m = map_parameters(&cfg, &p);
            let k_back = m.sigma / (cfg.a() * cfg.eps_m().sqrt());
            assert_relative_eq!(k_back, k, max_relative = 1e-12);
            let q_back = match m.regime {
                Regime::Scattering { eta } => {
                    (k_back * k_back * cfg.eps_b() - eta * eta / (cfg.a() * cfg.a())).sqrt()
                }
                Regime::Guided { zeta } => {
                    (k_back * k_back * cfg.eps_b() + zeta * zeta / (cfg.a() * cfg.a())).sqrt()
                }
                Regime::Threshold => k_back * cfg.eps_b().sqrt(),
            };
            assert_relative_eq!(q_back, q, max_relative = 1e-12);
        }
    }

    #[test]
    fn cutoffs_sit_on_line_one() {
        let points = cutoff_points(&config(), 4);
        assert_eq!(points.len(), 4);
        assert_relative_eq!(points[0].k, SIGMA_1, epsilon = 1e-12);
        assert_relative_eq!(points[0].q, 5.8899034680718782, epsilon = 1e-12);
        for p in &points {
            assert_relative_eq!(p.q / p.k, 2.25f64.sqrt(), max_relative = 1e-14);
        }
        // cut-off strengths are exactly the transparency levels
        let cfg = config();
        let levels = junction::resonance_levels(4);
        for (p, l) in points.iter().zip(&levels) {
            let sigma = p.k * cfg.a() * cfg.eps_m().sqrt();
            assert_relative_eq!(sigma, l.sigma, epsilon = 1e-14);
        }
    }

    #[test]
    fn cutoff_scales_with_geometry() {
        let cfg = WaveguideConfig::new(2.0, 4.0, 0.25).unwrap();
        let p = cutoff_points(&cfg, 1)[0];
        // k_1 = sigma_1/(a sqrt(eps_m)) = sigma_1
        assert_relative_eq!(p.k, SIGMA_1, epsilon = 1e-12);
        assert_relative_eq!(p.q / p.k, 2.0, epsilon = 1e-14);
    }

    #[test]
    fn dispersion_touches_line_one_at_cutoff() {
        let ks = [SIGMA_1 + 1e-4];
        let s = dispersion_curve(&config(), 1, &ks).unwrap();
        let q = s[0].q.unwrap();
        let line1 = ks[0] * 1.5;
        assert!(q > line1);
        assert!(q - line1 < 1e-6, "gap {}", q - line1);
    }

    #[test]
    fn dispersion_frozen_sample() {
        // n = 0 branch at k = 4: zeta_0(4) and q from 60-digit arithmetic
        let s = dispersion_curve(&config(), 0, &[4.0]).unwrap();
        assert_relative_eq!(s[0].q.unwrap(), 6.8759022851900035, epsilon = 1e-9);
    }

    #[test]
    fn dispersion_marks_below_cutoff_and_reports_empty() {
        let s = dispersion_curve(&config(), 1, &[1.0, SIGMA_1 + 0.5]).unwrap();
        assert_eq!(s[0].q, None);
        assert!(s[1].q.is_some());

        assert!(matches!(
            dispersion_curve(&config(), 1, &[0.5, 1.0]),
            Err(Error::EmptyCurve(1))
        ));
        assert!(dispersion_curve(&config(), 0, &[2.0, 1.0]).is_err()); // unsorted
    }

    #[test]
    fn dispersion_stays_above_line_one() {
        let ks: Vec<f64> = (1..=40).map(|i| 4.0 + 0.2 * i as f64).collect();
        let line = 1.5;
        for n in 0..=1 {
            for s in dispersion_curve(&config(), n, &ks).unwrap() {
                if let Some(q) = s.q {
                    assert!(q > s.k * line);
                }
            }
        }
    }

    #[test]
    fn transverse_sectors_and_boundary() {
        let cfg = config();
        // on line 2: q = k sqrt(eps_b - eps_m) -> eta = sigma
        let k = 3.0;
        let q = k * (2.25f64 - 1.0).sqrt();
        let t = transverse_transmission(&cfg, &ModePoint::new(k, q).unwrap()).unwrap();
        assert_eq!(t.sector, Sector::Boundary);
        assert_relative_eq!(t.eta, t.sigma, max_relative = 1e-12);

        // between lines 1 and 2: sector I
        let t = transverse_transmission(&cfg, &ModePoint::new(3.0, 4.0).unwrap()).unwrap();
        assert_eq!(t.sector, Sector::I);
        // below line 2: sector II
        let t = transverse_transmission(&cfg, &ModePoint::new(3.0, 1.0).unwrap()).unwrap();
        assert_eq!(t.sector, Sector::II);
    }

    #[test]
    fn transmission_near_cutoff_approaches_the_resonance_limit() {
        let cfg = config();
        let k1 = SIGMA_1;
        // q just below the line: eta = 1e-3
        let q = (k1 * k1 * 2.25 - 1e-6).sqrt();
        let t = transverse_transmission(&cfg, &ModePoint::new(k1, q).unwrap()).unwrap();
        let t1 = junction::resonance_transmission(SIGMA_1);
        assert!((t.transmission - t1).abs() < 1e-8);
    }

    #[test]
    fn vanishing_modulation_is_transparent() {
        let cfg = WaveguideConfig::new(1.0, 2.25, 1e-12).unwrap();
        let t = transverse_transmission(&cfg, &ModePoint::new(2.0, 1.0).unwrap()).unwrap();
        assert!(t.transmission > 1.0 - 1e-8);
    }

    #[test]
    fn guided_and_threshold_points_are_rejected() {
        let cfg = config();
        assert!(matches!(
            transverse_transmission(&cfg, &ModePoint::new(2.0, 4.0).unwrap()),
            Err(Error::NotScattering { .. })
        ));
        let q = 2.0 * 2.25f64.sqrt();
        assert!(transverse_transmission(&cfg, &ModePoint::new(2.0, q).unwrap()).is_err());
    }

    #[test]
    fn config_validation_and_sector_ii_flag() {
        assert!(WaveguideConfig::new(0.0, 1.0, 1.0).is_err());
        assert!(WaveguideConfig::new(1.0, -1.0, 1.0).is_err());
        assert!(WaveguideConfig::new(1.0, 1.0, f64::NAN).is_err());
        assert!(config().sector_ii_exists());
        // eps_m >= eps_b is allowed but has no sector II
        let cfg = WaveguideConfig::new(1.0, 1.0, 2.0).unwrap();
        assert!(!cfg.sector_ii_exists());
        assert!(ModePoint::new(-1.0, 0.0).is_err());
    }
}
