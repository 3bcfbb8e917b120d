use thiserror::Error;

/// Unified error type for every fallible operation in the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// Binary series operation with operands over different rings.
    #[error("coefficient ring mismatch: {left} vs {right}")]
    RingMismatch { left: String, right: String },

    /// Series inversion (or negative power) requires a unit constant term.
    #[error("series has a non-unit constant term and cannot be inverted")]
    NonUnitConstantTerm,

    /// Residue rings require a modulus of at least 2.
    #[error("invalid modulus {modulus}: residue rings require modulus >= 2")]
    InvalidModulus { modulus: u64 },

    /// Dissection residue class must satisfy `residue < step` with `step > 0`.
    #[error("dissection residue {residue} is not a residue class mod {step}")]
    DissectResidueOutOfRange { step: usize, residue: usize },

    /// Real loci of K3 surfaces have even Euler characteristic.
    #[error("odd Euler characteristic {euler_real}: real K3 loci have even Euler characteristic")]
    OddEulerCharacteristic { euler_real: i64 },

    /// Euler characteristic outside the realizable window [-18, 20].
    #[error("Euler characteristic {euler_real} is outside the realizable range -18..=20")]
    EulerCharacteristicOutOfRange { euler_real: i64 },

    /// Verification entry points refuse exploratory (non-realizable)
    /// topologies; series construction does not.
    #[error("Euler characteristic {euler_real} does not come from a real K3 surface; verification refuses exploratory topologies")]
    UnrealizableTopology { euler_real: i64 },

    /// Argument that must be a positive index was zero.
    #[error("{context} requires a positive index")]
    PositiveIndexRequired { context: &'static str },

    /// Interpolation exponent must lie strictly between 0 and 1.
    #[error("interpolation exponent {alpha} is outside the open interval (0, 1)")]
    AlphaOutOfRange { alpha: f64 },

    /// Growth constants in the convolution rule must be positive.
    #[error("growth constants must be positive, got a = {a}, b = {b}")]
    NonPositiveGrowthConstant { a: f64, b: f64 },

    /// The balanced (Euler characteristic 0) real count vanishes in odd
    /// degrees, so no growth prediction is defined there.
    #[error("no growth prediction at odd index {n}: the balanced real count vanishes identically in odd degrees")]
    ZeroEulerOddIndex { n: u64 },

    /// The refined lower bound needs `2k + w >= 0`.
    #[error("inconsistent curve counts: {known_negative} known negative curves contradict Welschinger invariant {welschinger}")]
    InconsistentCurveCounts { known_negative: u64, welschinger: i64 },

    /// The modular-function congruence is only asserted mod 16 and mod 9.
    #[error("unsupported modulus {modulus}: the modular-function congruence is checked mod 16 and mod 9 only")]
    UnsupportedJModulus { modulus: u64 },
}
