//! The oracle cross-check suite behind `junction-spectra verify`.
//!
//! Every closed form ships with an independent route to the same number:
//! the transfer-matrix solver, dense scans, or the wavefunction itself.
//! Each check compares the two routes at a pinned tolerance and reports
//! one pass/fail line. `quick` trims grid sizes and case counts; `full`
//! runs everything at acceptance scale.

use junction_core::junction::{jump_ratio_sq, resonance_levels, transmission_closed_form};
use junction_core::potential::{
    build_barrier_well, build_double_delta, DeltaScatterer, PiecewisePotential, Slab, Strength,
};
use junction_core::spectrum::{bound_states, count_bound_states, threshold_root};
use junction_core::transfer::{
    evaluate_scattering_wavefunction, evaluate_scattering_wavefunction_incident,
    find_bound_states_numeric, scatter, total_matrix, Incidence,
};
use junction_core::waveguide::{
    cutoff_points, dispersion_curve, map_parameters, transverse_transmission, ModePoint, Regime,
    Sector, WaveguideConfig,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Level {
    Quick,
    Full,
}

#[derive(Debug)]
pub struct CheckResult {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

fn check(name: &'static str, pass: bool, detail: String) -> CheckResult {
    CheckResult { name, pass, detail }
}

fn barrier_well(sigma: f64) -> PiecewisePotential {
    build_barrier_well(Strength::new(sigma).unwrap()).unwrap()
}

// frozen reference roots of tan s = tanh s (60-digit bisection)
const SIGMA_1: f64 = 3.9266023120479188;
const SIGMA_2: f64 = 7.0685827456287321;

fn oracle_grid(level: Level) -> CheckResult {
    let n = if level == Level::Quick { 60 } else { 200 };
    let mut max_diff: f64 = 0.0;
    for i in 1..=n {
        let eta = 20.0 * i as f64 / n as f64;
        for j in 0..n {
            let sigma = 20.0 * j as f64 / (n - 1) as f64;
            let closed = transmission_closed_form(eta, sigma).unwrap();
            let oracle = scatter(&barrier_well(sigma), eta).unwrap().transmission;
            max_diff = max_diff.max((closed - oracle).abs());
        }
    }
    // the eta = sigma diagonal, where the helpers change branch
    for j in 1..=n {
        let s = 20.0 * j as f64 / n as f64;
        let closed = transmission_closed_form(s, s).unwrap();
        let oracle = scatter(&barrier_well(s), s).unwrap().transmission;
        max_diff = max_diff.max((closed - oracle).abs());
    }
    check(
        "oracle-grid",
        max_diff <= 1e-10,
        format!("{n}x{n} grid + diagonal, max |T_closed - T_oracle| = {max_diff:.3e} (tol 1e-10)"),
    )
}

fn resonance_residuals() -> CheckResult {
    let levels = resonance_levels(10);
    let max_residual = levels
        .iter()
        .map(|l| (l.sigma.tan() - l.sigma.tanh()).abs())
        .fold(0.0f64, f64::max);
    let asymptote_gap = (levels[9].sigma - 41.0 * std::f64::consts::PI / 4.0).abs();
    let frozen_gap = (levels[0].sigma - SIGMA_1)
        .abs()
        .max((levels[1].sigma - SIGMA_2).abs());
    let pass = max_residual < 1e-12 && asymptote_gap < 1e-12 && frozen_gap < 1e-9;
    check(
        "resonance-residuals",
        pass,
        format!(
            "max |tan - tanh| = {max_residual:.2e}, |sigma_10 - 41pi/4| = {asymptote_gap:.2e}, \
             frozen-root gap = {frozen_gap:.2e}"
        ),
    )
}

fn transparency_limit(level: Level) -> CheckResult {
    let n = if level == Level::Quick { 2 } else { 5 };
    let mut worst_ratio_low = f64::INFINITY;
    let mut worst_ratio_high: f64 = 0.0;
    let mut worst_final: f64 = 0.0;
    for l in resonance_levels(n) {
        let errs: Vec<f64> = [1e-2, 1e-3, 1e-4]
            .iter()
            .map(|&eta| (transmission_closed_form(eta, l.sigma).unwrap() - l.transmission).abs())
            .collect();
        worst_final = worst_final.max(errs[2]);
        for w in errs.windows(2) {
            let r = w[0] / w[1];
            worst_ratio_low = worst_ratio_low.min(r);
            worst_ratio_high = worst_ratio_high.max(r);
        }
    }
    let pass = worst_final < 1e-6 && worst_ratio_low > 50.0 && worst_ratio_high < 200.0;
    check(
        "transparency-limit",
        pass,
        format!(
            "n = 1..{n}: decade ratios in [{worst_ratio_low:.1}, {worst_ratio_high:.1}] \
             (want ~100), final error {worst_final:.2e} (tol 1e-6)"
        ),
    )
}

fn reflecting_wall() -> CheckResult {
    let worst = [2.0, 5.0, 9.0]
        .iter()
        .map(|&s| transmission_closed_form(1e-4, s).unwrap())
        .fold(0.0f64, f64::max);
    check(
        "reflecting-wall",
        worst < 1e-4,
        format!("off-resonance T(1e-4, sigma) max = {worst:.3e} (tol 1e-4)"),
    )
}

fn patil_contrast() -> CheckResult {
    let dd = build_double_delta(Strength::new(3.0).unwrap()).unwrap();
    let t_dd = scatter(&dd, 1e-3).unwrap().transmission;
    let node = evaluate_scattering_wavefunction(&dd, 1e-3, 0.0)
        .unwrap()
        .norm();
    let t_bw = scatter(&barrier_well(SIGMA_1), 1e-3).unwrap().transmission;
    let pass = t_dd < 1e-4 && node < 1e-2 && t_bw > 3e-3;
    check(
        "patil-contrast",
        pass,
        format!(
            "double-delta T = {t_dd:.2e} with |psi(0)| = {node:.2e} (node), \
             junction T at sigma_1 = {t_bw:.3e} (transparent)"
        ),
    )
}

fn jump_ratio_check() -> CheckResult {
    let p = barrier_well(SIGMA_1);
    let jump = jump_ratio_sq(SIGMA_1);
    let pb = evaluate_scattering_wavefunction_incident(&p, 1e-3, -1.0, Incidence::Right).unwrap();
    let pw = evaluate_scattering_wavefunction_incident(&p, 1e-3, 1.0, Incidence::Right).unwrap();
    let ratio = (pb.norm() / pw.norm()).powi(2);
    let rel = (ratio - jump).abs() / jump;
    check(
        "jump-ratio",
        rel < 1e-3 && ratio < 1.0,
        format!(
            "|psi_b/psi_w|^2 = {ratio:.6e} vs (1-tanh^2)/(1+tanh^2) = {jump:.6e}, rel {rel:.2e}"
        ),
    )
}

fn bound_count() -> CheckResult {
    let mut ok = count_bound_states(15.0).unwrap() == 5;
    let mut detail = format!("count(15) = {}", count_bound_states(15.0).unwrap());
    for sigma in [1.0, 5.0, 10.0, 15.0, 20.0] {
        let n_count = count_bound_states(sigma).unwrap();
        let n_roots = bound_states(sigma).unwrap().len();
        if n_count != n_roots {
            ok = false;
            detail.push_str(&format!(
                ", mismatch at sigma {sigma}: {n_count} vs {n_roots}"
            ));
        }
    }
    check("bound-count", ok, detail)
}

fn bound_oracle(level: Level) -> CheckResult {
    let sigmas: &[f64] = if level == Level::Quick {
        &[5.0, 15.0]
    } else {
        &[1.0, 5.0, 10.0, 15.0]
    };
    let mut worst: f64 = 0.0;
    let mut ok = true;
    for &sigma in sigmas {
        let closed = bound_states(sigma).unwrap();
        let numeric = find_bound_states_numeric(&barrier_well(sigma), sigma).unwrap();
        if closed.len() != numeric.len() {
            ok = false;
            continue;
        }
        for (c, n) in closed.iter().zip(&numeric) {
            worst = worst.max((c.zeta - n.value()).abs());
        }
    }
    check(
        "bound-oracle",
        ok && worst < 1e-9,
        format!("closed-form vs transfer-matrix roots, max gap {worst:.2e} (tol 1e-9)"),
    )
}

fn threshold_consistency() -> CheckResult {
    let mut worst: f64 = 0.0;
    for sigma_n in [SIGMA_1, SIGMA_2] {
        let sigma = sigma_n + 0.02;
        let full = bound_states(sigma).unwrap()[0].zeta;
        let asym = threshold_root(sigma, 0.5).unwrap();
        worst = worst.max((full - asym).abs() / full);
    }
    check(
        "threshold-consistency",
        worst < 0.05,
        format!("small-root agreement at sigma_n + 0.02: rel {worst:.3e} (tol 5%)"),
    )
}

fn waveguide_map(level: Level) -> CheckResult {
    let cfg = WaveguideConfig::new(1.0, 2.25, 1.0).unwrap();
    let sqrt_eb = 2.25f64.sqrt();

    let mut line_gap: f64 = 0.0;
    for p in cutoff_points(&cfg, 6) {
        line_gap = line_gap.max((p.q / p.k - sqrt_eb).abs() / sqrt_eb);
    }

    let mut cont_gap: f64 = 0.0;
    for n in [1usize, 2] {
        let k_n = resonance_levels(n)[n - 1].sigma;
        let k = k_n + 1e-4;
        let q = dispersion_curve(&cfg, n, &[k]).unwrap()[0].q.unwrap();
        cont_gap = cont_gap.max(q - k * sqrt_eb);
    }

    let n = if level == Level::Quick { 30 } else { 100 };
    let mut sector_ok = true;
    for i in 1..=n {
        let k = 12.0 * i as f64 / n as f64;
        for j in 1..=n {
            let q = 17.9 * j as f64 / n as f64;
            let point = ModePoint::new(k, q).unwrap();
            let mapped = map_parameters(&cfg, &point);
            if let Regime::Scattering { eta } = mapped.regime {
                let t = transverse_transmission(&cfg, &point).unwrap();
                let beta_sq = mapped.sigma * mapped.sigma - eta * eta;
                let consistent = match t.sector {
                    Sector::I => beta_sq > 0.0,
                    Sector::II => beta_sq < 0.0,
                    Sector::Boundary => beta_sq.abs() < 1e-10 * mapped.sigma * mapped.sigma,
                };
                sector_ok &= consistent;
            }
        }
    }

    let pass = line_gap < 1e-12 && cont_gap < 1e-6 && sector_ok;
    check(
        "waveguide-map",
        pass,
        format!(
            "cutoffs off line 1 by {line_gap:.2e} rel (tol 1e-12), dispersion gap at cutoff \
             {cont_gap:.2e} (tol 1e-6), sectors consistent on {n}x{n} grid: {sector_ok}"
        ),
    )
}

/// Random slab stacks kept inside the dynamic range where the absolute
/// Wronskian tolerance is meaningful (product of per-slab growth < 100).
pub fn random_stack(rng: &mut ChaCha8Rng, max_amp: f64) -> (PiecewisePotential, f64) {
    loop {
        let n = rng.random_range(1..=10);
        let slabs: Vec<(f64, f64)> = (0..n)
            .map(|_| (rng.random_range(0.05..0.5), rng.random_range(-100.0..100.0)))
            .collect();
        let energy = rng.random_range(-100.0..100.0);
        let amp: f64 = slabs
            .iter()
            .map(|&(w, h)| {
                let kappa_sq = h - energy;
                let grow = if kappa_sq > 0.0 {
                    (kappa_sq.sqrt() * w).exp()
                } else {
                    1.0
                };
                grow * (1.0 + (energy - h).abs().sqrt().max(1.0))
            })
            .product();
        if amp > max_amp {
            continue;
        }
        let x_left = rng.random_range(-1.0..1.0);
        let n_deltas = rng.random_range(0..=2);
        let width: f64 = slabs.iter().map(|s| s.0).sum();
        let deltas: Vec<DeltaScatterer> = (0..n_deltas)
            .map(|_| {
                DeltaScatterer::new(
                    x_left + rng.random_range(0.0..1.0) * width,
                    rng.random_range(-8.0..8.0),
                )
                .unwrap()
            })
            .collect();
        let potential = PiecewisePotential::new(
            x_left,
            slabs
                .iter()
                .map(|&(w, h)| Slab::new(w, h).unwrap())
                .collect(),
            deltas,
        )
        .unwrap();
        return (potential, energy);
    }
}

fn mirrored(p: &PiecewisePotential) -> PiecewisePotential {
    PiecewisePotential::new(
        -p.x_right(),
        p.slabs()
            .iter()
            .rev()
            .map(|s| Slab::new(s.width(), s.height()).unwrap())
            .collect(),
        p.deltas()
            .iter()
            .map(|d| DeltaScatterer::new(-d.position(), d.strength()).unwrap())
            .collect(),
    )
    .unwrap()
}

fn property_suite(level: Level, seed: u64) -> Vec<CheckResult> {
    let cases = if level == Level::Quick { 100 } else { 1000 };
    let mut results = Vec::new();

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut worst: f64 = 0.0;
    for _ in 0..cases {
        let (p, e) = random_stack(&mut rng, 100.0);
        worst = worst.max((total_matrix(&p, e).det() - 1.0).abs());
    }
    results.push(check(
        "wronskian",
        worst < 1e-12,
        format!("{cases} stacks, max |det - 1| = {worst:.2e} (tol 1e-12)"),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x1);
    let mut worst: f64 = 0.0;
    for _ in 0..cases {
        let (p, _) = random_stack(&mut rng, 1e6);
        let eta = rng.random_range(0.05..10.0);
        let r = scatter(&p, eta).unwrap();
        worst = worst.max((r.transmission + r.reflection - 1.0).abs());
    }
    results.push(check(
        "flux",
        worst < 1e-12,
        format!("{cases} stacks, max |T + R - 1| = {worst:.2e} (tol 1e-12)"),
    ));

    // moderate growth only: the absolute 1e-14 comparison of two
    // independently rounded products cannot survive resonant spikes of
    // huge stacks
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x2);
    let mut worst: f64 = 0.0;
    for _ in 0..cases {
        let (p, _) = random_stack(&mut rng, 1e4);
        let eta = rng.random_range(0.3..10.0);
        let left = scatter(&p, eta).unwrap().transmission;
        let right = scatter(&mirrored(&p), eta).unwrap().transmission;
        worst = worst.max((left - right).abs());
    }
    results.push(check(
        "side-symmetry",
        worst < 1e-14,
        format!("{cases} stacks, max |T_left - T_right| = {worst:.2e} (tol 1e-14)"),
    ));

    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ 0x3);
    let mut worst: f64 = 0.0;
    for _ in 0..cases {
        let (p, e) = random_stack(&mut rng, 300.0);
        let idx = rng.random_range(0..p.slabs().len());
        let frac = rng.random_range(0.1..0.9);
        let mut slabs = Vec::new();
        for (i, s) in p.slabs().iter().enumerate() {
            if i == idx {
                slabs.push(Slab::new(s.width() * frac, s.height()).unwrap());
                slabs.push(Slab::new(s.width() * (1.0 - frac), s.height()).unwrap());
            } else {
                slabs.push(*s);
            }
        }
        let split = PiecewisePotential::new(p.x_left(), slabs, p.deltas().to_vec()).unwrap();
        let a = total_matrix(&p, e);
        let b = total_matrix(&split, e);
        let diff = (a.m11 - b.m11)
            .abs()
            .max((a.m12 - b.m12).abs())
            .max((a.m21 - b.m21).abs())
            .max((a.m22 - b.m22).abs());
        worst = worst.max(diff);
    }
    results.push(check(
        "slab-splitting",
        worst < 1e-12,
        format!("{cases} stacks, max entry change under splitting = {worst:.2e} (tol 1e-12)"),
    ));

    results
}

pub fn run(level: Level, seed: u64) -> Vec<CheckResult> {
    let mut results = vec![
        oracle_grid(level),
        resonance_residuals(),
        transparency_limit(level),
        reflecting_wall(),
        patil_contrast(),
        jump_ratio_check(),
        bound_count(),
        bound_oracle(level),
        threshold_consistency(),
        waveguide_map(level),
    ];
    results.extend(property_suite(level, seed));
    results
}
