//! Piecewise-constant potentials with point scatterers.
//!
//! Everything lives in the unit-width convention: the junction slabs have
//! width 1 and heights `+-sigma^2`, the double-delta pair sits at `x = -+1`
//! with strengths `+-sigma^2/2`. Geometry is validated at construction so
//! the solvers can assume well-formed input; values are immutable
//! afterwards and safe to share across threads.

use crate::error::{Error, Result};
use crate::SIGMA_MAX;

/// Dimensionless interaction strength `sigma >= 0`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Strength(f64);

impl Strength {
    pub fn new(sigma: f64) -> Result<Self> {
        if !sigma.is_finite() || sigma < 0.0 {
            return Err(Error::InvalidStrength(sigma));
        }
        Ok(Strength(sigma))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// A constant-height region of positive width.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Slab {
    width: f64,
    height: f64,
}

impl Slab {
    pub fn new(width: f64, height: f64) -> Result<Self> {
        if !width.is_finite() || width <= 0.0 {
            return Err(Error::InvalidSlabWidth(width));
        }
        if !height.is_finite() {
            return Err(Error::InvalidSlabHeight(height));
        }
        Ok(Slab { width, height })
    }

    pub fn width(self) -> f64 {
        self.width
    }

    pub fn height(self) -> f64 {
        self.height
    }
}

/// Point scatterer `strength * delta(x - position)`: the wavefunction stays
/// continuous while its derivative jumps by `strength * psi(position)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DeltaScatterer {
    position: f64,
    strength: f64,
}

impl DeltaScatterer {
    pub fn new(position: f64, strength: f64) -> Result<Self> {
        if !position.is_finite() {
            return Err(Error::InvalidLeftEdge(position));
        }
        if !strength.is_finite() {
            return Err(Error::InvalidDeltaStrength(strength));
        }
        Ok(DeltaScatterer { position, strength })
    }

    pub fn position(self) -> f64 {
        self.position
    }

    pub fn strength(self) -> f64 {
        self.strength
    }
}

/// Contiguous slabs starting at `x_left` plus point scatterers on the
/// support; the potential is identically zero outside `[x_left, x_right]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PiecewisePotential {
    x_left: f64,
    slabs: Vec<Slab>,
    deltas: Vec<DeltaScatterer>,
}

impl PiecewisePotential {
    /// Slabs are laid out contiguously from `x_left`; deltas may sit
    /// anywhere on the closed support, including its edges.
    pub fn new(x_left: f64, slabs: Vec<Slab>, deltas: Vec<DeltaScatterer>) -> Result<Self> {
        if !x_left.is_finite() {
            return Err(Error::InvalidLeftEdge(x_left));
        }
        let x_right = x_left + slabs.iter().map(|s| s.width()).sum::<f64>();
        for d in &deltas {
            if d.position() < x_left || d.position() > x_right {
                return Err(Error::DeltaOutsideSupport {
                    position: d.position(),
                    x_left,
                    x_right,
                });
            }
        }
        let mut deltas = deltas;
        deltas.sort_by(|a, b| a.position().total_cmp(&b.position()));
        Ok(PiecewisePotential {
            x_left,
            slabs,
            deltas,
        })
    }

    /// The free line: empty support at the origin.
    pub fn free() -> Self {
        PiecewisePotential {
            x_left: 0.0,
            slabs: Vec::new(),
            deltas: Vec::new(),
        }
    }

    pub fn x_left(&self) -> f64 {
        self.x_left
    }

    pub fn x_right(&self) -> f64 {
        self.x_left + self.support_width()
    }

    pub fn support_width(&self) -> f64 {
        self.slabs.iter().map(|s| s.width()).sum()
    }

    pub fn slabs(&self) -> &[Slab] {
        &self.slabs
    }

    /// Sorted by position.
    pub fn deltas(&self) -> &[DeltaScatterer] {
        &self.deltas
    }
}

fn check_strength(sigma: Strength) -> Result<f64> {
    let s = sigma.value();
    if s > SIGMA_MAX {
        return Err(Error::StrengthOutOfRange(s));
    }
    Ok(s)
}

/// The barrier-well junction: height `+sigma^2` on `(-1, 0)` immediately
/// followed by `-sigma^2` on `(0, 1)`, barrier first along increasing x.
pub fn build_barrier_well(sigma: Strength) -> Result<PiecewisePotential> {
    let s = check_strength(sigma)?;
    PiecewisePotential::new(
        -1.0,
        vec![Slab::new(1.0, s * s)?, Slab::new(1.0, -s * s)?],
        Vec::new(),
    )
}

/// The double-delta pair `sigma^2 [delta(x+1) - delta(x-1)] / 2`: strength
/// `+sigma^2/2` at `x = -1` and `-sigma^2/2` at `x = +1`, zero in between.
/// This is the regularization family that vanishes in the vicinity of the
/// origin, the one that ends up totally reflecting.
pub fn build_double_delta(sigma: Strength) -> Result<PiecewisePotential> {
    let s = check_strength(sigma)?;
    let deltas = if s == 0.0 {
        Vec::new()
    } else {
        vec![
            DeltaScatterer::new(-1.0, s * s / 2.0)?,
            DeltaScatterer::new(1.0, -s * s / 2.0)?,
        ]
    };
    PiecewisePotential::new(-1.0, vec![Slab::new(2.0, 0.0)?], deltas)
}
