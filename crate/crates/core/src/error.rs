use thiserror::Error;

/// Errors shared by all modules of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("interaction strength must be finite and non-negative, got {0}")]
    InvalidStrength(f64),
    #[error("interaction strength {0} exceeds the supported range sigma <= 25")]
    StrengthOutOfRange(f64),
    #[error("slab width must be positive and finite, got {0}")]
    InvalidSlabWidth(f64),
    #[error("slab height must be finite, got {0}")]
    InvalidSlabHeight(f64),
    #[error("delta scatterer strength must be finite, got {0}")]
    InvalidDeltaStrength(f64),
    #[error("potential left edge must be finite, got {0}")]
    InvalidLeftEdge(f64),
    #[error("delta scatterer at x = {position} lies outside the support [{x_left}, {x_right}]")]
    DeltaOutsideSupport {
        position: f64,
        x_left: f64,
        x_right: f64,
    },
    #[error(
        "eta must be positive and finite, got {0}; the eta -> 0 limit is evaluated by callers"
    )]
    NonPositiveEta(f64),
    #[error("binding parameter zeta must be positive and finite, got {0}")]
    InvalidZeta(f64),
    #[error("zeta = {zeta} lies outside the open interval (0, {sigma})")]
    ZetaOutOfRange { zeta: f64, sigma: f64 },
    #[error(
        "root scan too coarse: refined scan found {refined} sign changes where the \
         step-{step} grid found {coarse}"
    )]
    GridTooCoarse {
        step: f64,
        coarse: usize,
        refined: usize,
    },
    #[error("sigma = {0} is within 1e-9 of a resonance threshold; the state count is degenerate")]
    ThresholdProximity(f64),
    #[error("two bound-state branches approach within bisection tolerance at sigma = {0}")]
    BranchCrossing(f64),
    #[error("dispersion branch n = {0} has no samples above cutoff in the requested k range")]
    EmptyCurve(usize),
    #[error("point (k = {k}, q = {q}) is not in the scattering regime; use a dispersion curve")]
    NotScattering { k: f64, q: f64 },
    #[error("waveguide parameter {name} must be positive and finite, got {value}")]
    InvalidWaveguideParam { name: &'static str, value: f64 },
    #[error("mode point must have finite non-negative coordinates, got (k = {k}, q = {q})")]
    InvalidModePoint { k: f64, q: f64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

pub type Result<T> = std::result::Result<T, Error>;
