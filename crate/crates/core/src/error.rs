use thiserror::Error;

/// Errors shared by every module of the crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("invalid Krawtchouk parameters n={n}, q={q}, l={ell}: need n >= 1, q >= 2, l <= n")]
    InvalidKrawtchoukParams { n: u32, q: u32, ell: u32 },

    #[error("argument x={x} outside the integer lattice [0, {n}]")]
    ArgOutOfRange { x: u32, n: u32 },

    #[error("recurrence order k={k} outside [1, {n}]")]
    OrderOutOfRange { k: u32, n: u32 },

    #[error("value vector has {got} entries, expected {expected}")]
    LengthMismatch { got: usize, expected: usize },

    #[error("invalid Hamming graph spec n={n}, l={ell}: need 1 <= l <= n and n <= 63")]
    InvalidGraphSpec { n: u32, ell: u32 },

    #[error("n={n} exceeds the brute-force cap {cap}")]
    BruteforceCapExceeded { n: u32, cap: u32 },

    #[error("family eigenvalue formula divided inexactly at weight r={weight}")]
    InexactEigenvalueDivision { weight: u32 },

    #[error("character sums disagree within weight class r={weight}")]
    WeightClassMismatch { weight: u32 },

    #[error("spectrum has no entries")]
    EmptySpectrum,

    #[error("spectral quantum bound needs lambda_min < 0")]
    NoNegativeEigenvalue,

    #[error("family parameter t must be >= 1")]
    FamilyIndexZero,

    #[error("invalid {family} parameters n={n}, l={ell}: {reason}")]
    InvalidFamilyParams {
        family: &'static str,
        n: u32,
        ell: u32,
        reason: &'static str,
    },

    #[error("colour index alpha={alpha} outside [0, {d})")]
    AlphaOutOfRange { alpha: u32, d: u32 },

    #[error("vertex mask {x:#x} has bits at or above position {n}")]
    VertexOutOfRange { x: u64, n: u32 },

    #[error("exhaustive pair enumeration refused: 2^{n} vertices exceeds cap {cap}")]
    ExhaustiveCapExceeded { n: u32, cap: u64 },

    #[error("colour bound withheld: {reason}")]
    CertificationNotPassed { reason: String },
}
