//! Explicit projector systems that colour Hamming graphs, and their
//! numerical certification.
//!
//! For a vertex x (a binary vector, zero-padded to length d) and a colour
//! alpha in 0..d, the projector is the d x d matrix
//!
//! ```text
//! P_x^alpha(i, j) = (1/d) * zeta_d^{(j-i) alpha} * (-1)^{x_i + x_j}
//! ```
//!
//! with zeta_d a primitive d-th root of unity. Three parameter families are
//! supported, each giving one colouring construction:
//!
//! * `hadamard`: n divisible by 4, l = n/2, d = n (no padding);
//! * `4t-1`: n = 4t-1, l = 2t, d = n+1 (one padded coordinate);
//! * `half-plus`: l even, l >= n/2, d = 2l (padded to length d).
//!
//! Certification checks, with max-entry-norm residuals against a tolerance:
//! each P is Hermitian and idempotent, the d projectors of one vertex are
//! mutually orthogonal and sum to the identity, and adjacent vertices share
//! no colour (P_x^alpha P_y^alpha = 0 whenever d(x, y) = l). The binding
//! scalar behind edge orthogonality, sum_k (-1)^{x_k + y_k} = d - 2l = 0,
//! is checked as an exact integer, so the only inexact ingredient is the
//! root-of-unity phase.
//!
//! Edge pairs can be enumerated three ways. Conjugating by the diagonal
//! sign matrix D_z carries P_x^alpha to P_{x xor z}^alpha without changing
//! entry moduli, so the residual of a pair (x, y) equals that of
//! (0, x xor y); the translation-reduced strategy therefore covers every
//! edge orbit with one weight-l difference vector each. Exhaustive and
//! seeded randomized enumerations are available as cross-checks.

mod matrix;

pub use matrix::ComplexMatrix;

use std::collections::BTreeSet;
use std::f64::consts::TAU;
use std::fmt;

use num_bigint::BigInt;
use num_complex::Complex64;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha12Rng;

use crate::bits::weight_masks;
use crate::error::Error;
use crate::spectra::random_weight_mask;

/// Largest vertex count 2^n for which exhaustive edge enumeration runs.
pub const EXHAUSTIVE_VERTEX_CAP: u64 = 4096;

/// Residual budget used throughout: entries are 1/d times roots of unity and
/// residuals accumulate over d-term sums, so the budget scales with d.
pub fn default_tolerance(d: u32) -> f64 {
    1e-9 * f64::from(d)
}

/// The three colouring constructions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    Hadamard,
    FourTMinusOne,
    HalfPlus,
}

impl Family {
    pub fn tag(&self) -> &'static str {
        match self {
            Family::Hadamard => "hadamard",
            Family::FourTMinusOne => "4t-1",
            Family::HalfPlus => "half-plus",
        }
    }

    /// The adjacency distance implied by n, for families that fix it.
    pub fn implied_ell(&self, n: u32) -> Option<u32> {
        match self {
            Family::Hadamard => (n >= 4 && n.is_multiple_of(4)).then_some(n / 2),
            Family::FourTMinusOne => (n % 4 == 3).then(|| n.div_ceil(2)),
            Family::HalfPlus => None,
        }
    }

    /// Validates (n, l) against the family invariants and returns the
    /// projector dimension d (= the number of colours).
    pub fn validate(&self, n: u32, ell: u32) -> Result<u32, Error> {
        let fail = |reason: &'static str| Error::InvalidFamilyParams {
            family: self.tag(),
            n,
            ell,
            reason,
        };
        if n == 0 || n > 31 {
            return Err(fail("need 1 <= n <= 31"));
        }
        match self {
            Family::Hadamard => {
                if !n.is_multiple_of(4) {
                    return Err(fail("n must be divisible by 4"));
                }
                if ell * 2 != n {
                    return Err(fail("l must equal n/2"));
                }
                Ok(n)
            }
            Family::FourTMinusOne => {
                if n % 4 != 3 {
                    return Err(fail("n must be congruent to 3 mod 4"));
                }
                if ell * 2 != n + 1 {
                    return Err(fail("l must equal (n+1)/2"));
                }
                Ok(n + 1)
            }
            Family::HalfPlus => {
                if ell == 0 || ell > n {
                    return Err(fail("need 1 <= l <= n"));
                }
                if !ell.is_multiple_of(2) {
                    return Err(fail("l must be even"));
                }
                if 2 * ell < n {
                    return Err(fail("need l >= n/2"));
                }
                Ok(2 * ell)
            }
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl std::str::FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "hadamard" => Ok(Family::Hadamard),
            "4t-1" => Ok(Family::FourTMinusOne),
            "half-plus" => Ok(Family::HalfPlus),
            other => Err(format!(
                "unknown family '{other}' (expected hadamard, 4t-1, or half-plus)"
            )),
        }
    }
}

/// The projector family of one vertex: parameters plus the vertex mask.
///
/// The vertex is stored unpadded (bit k of `x` is coordinate x_k, k < n);
/// the zero padding up to length d is applied when a projector is built.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProjectorSystem {
    pub family: Family,
    pub n: u32,
    pub ell: u32,
    /// Projector dimension = number of colours.
    pub d: u32,
    pub x: u64,
}

impl ProjectorSystem {
    pub fn new(family: Family, n: u32, ell: u32, x: u64) -> Result<Self, Error> {
        let d = family.validate(n, ell)?;
        if x >> n != 0 {
            return Err(Error::VertexOutOfRange { x, n });
        }
        Ok(Self { family, n, ell, d, x })
    }

    pub fn hadamard(n: u32, x: u64) -> Result<Self, Error> {
        Self::new(Family::Hadamard, n, n / 2, x)
    }

    pub fn four_t_minus_one(n: u32, x: u64) -> Result<Self, Error> {
        Self::new(Family::FourTMinusOne, n, n.div_ceil(2), x)
    }

    pub fn half_plus(n: u32, ell: u32, x: u64) -> Result<Self, Error> {
        Self::new(Family::HalfPlus, n, ell, x)
    }
}

/// (-1)^{x_k} over the padded coordinates; bits at or above n are zero.
fn coordinate_sign(x: u64, k: u32) -> f64 {
    if (x >> k) & 1 == 0 {
        1.0
    } else {
        -1.0
    }
}

fn roots_of_unity(d: u32) -> Vec<Complex64> {
    (0..d)
        .map(|m| Complex64::from_polar(1.0, TAU * f64::from(m) / f64::from(d)))
        .collect()
}

fn build_with_roots(d: u32, x: u64, alpha: u32, roots: &[Complex64]) -> ComplexMatrix {
    let scale = 1.0 / f64::from(d);
    ComplexMatrix::from_fn(d as usize, |i, j| {
        let phase_index =
            (j as i64 - i as i64) * i64::from(alpha) % i64::from(d) + i64::from(d);
        let sign = coordinate_sign(x, i as u32) * coordinate_sign(x, j as u32);
        roots[(phase_index % i64::from(d)) as usize] * (scale * sign)
    })
}

/// Builds P_x^alpha for the system's vertex. Every entry has modulus 1/d
/// and the diagonal is constantly 1/d, so the trace is exactly 1.
pub fn build_projector(sys: &ProjectorSystem, alpha: u32) -> Result<ComplexMatrix, Error> {
    if alpha >= sys.d {
        return Err(Error::AlphaOutOfRange {
            alpha,
            d: sys.d,
        });
    }
    Ok(build_with_roots(sys.d, sys.x, alpha, &roots_of_unity(sys.d)))
}

/// Residuals of one certification run. A field is `None` when the
/// corresponding check was not part of the run (the vertex-local checks and
/// the edge check are produced by different operations and merged by the
/// caller).
#[derive(Debug, Clone, PartialEq)]
pub struct CertificationReport {
    pub family: Family,
    pub n: u32,
    pub ell: u32,
    pub d: u32,
    /// max |P - P*| over all colours.
    pub hermitian: Option<f64>,
    /// max |P^2 - P| over all colours.
    pub idempotent: Option<f64>,
    /// max |P_x^a P_x^b| over colour pairs a != b.
    pub orthogonality: Option<f64>,
    /// |sum_a P_x^a - I|.
    pub completeness: Option<f64>,
    /// max |P_x^a P_y^a| over enumerated edges (x, y) and all colours.
    pub edge_orthogonality: Option<f64>,
    /// max |sum_k (-1)^{x_k+y_k}| over enumerated edges; exact integer,
    /// zero whenever d = 2l.
    pub scalar_identity_max: Option<i64>,
    pub tol: f64,
    pub pass: bool,
    pub strategy: Option<PairStrategy>,
    pub systems_checked: u32,
    pub pairs_checked: u64,
}

impl CertificationReport {
    fn passes(&self) -> bool {
        let within = |r: &Option<f64>| r.is_none_or(|v| v <= self.tol);
        within(&self.hermitian)
            && within(&self.idempotent)
            && within(&self.orthogonality)
            && within(&self.completeness)
            && within(&self.edge_orthogonality)
            && self.scalar_identity_max.is_none_or(|s| s == 0)
    }
}

fn empty_report(family: Family, n: u32, ell: u32, d: u32, tol: f64) -> CertificationReport {
    CertificationReport {
        family,
        n,
        ell,
        d,
        hermitian: None,
        idempotent: None,
        orthogonality: None,
        completeness: None,
        edge_orthogonality: None,
        scalar_identity_max: None,
        tol,
        pass: false,
        strategy: None,
        systems_checked: 0,
        pairs_checked: 0,
    }
}

/// Certifies that the d projectors of one vertex form a complete orthogonal
/// system: Hermitian idempotents, pairwise orthogonal, summing to I.
pub fn certify_complete_system(sys: &ProjectorSystem, tol: f64) -> CertificationReport {
    let mut report = certify_system_residuals(sys, tol);
    report.systems_checked = 1;
    report.pass = report.passes();
    report
}

fn certify_system_residuals(sys: &ProjectorSystem, tol: f64) -> CertificationReport {
    let d = sys.d;
    let roots = roots_of_unity(d);
    let projectors: Vec<ComplexMatrix> = (0..d)
        .map(|alpha| build_with_roots(d, sys.x, alpha, &roots))
        .collect();

    let mut hermitian: f64 = 0.0;
    let mut idempotent: f64 = 0.0;
    let mut orthogonality: f64 = 0.0;
    let mut sum = ComplexMatrix::zeros(d as usize);
    for (a, p) in projectors.iter().enumerate() {
        hermitian = hermitian.max(p.hermitian_residual());
        idempotent = idempotent.max(p.mul(p).max_abs_diff(p));
        sum.add_assign(p);
        // P_b P_a = (P_a P_b)* entrywise, so a < b covers both orders
        for q in &projectors[a + 1..] {
            orthogonality = orthogonality.max(p.mul(q).max_abs());
        }
    }
    let completeness = sum.max_abs_diff(&ComplexMatrix::identity(d as usize));

    let mut report = empty_report(sys.family, sys.n, sys.ell, d, tol);
    report.hermitian = Some(hermitian);
    report.idempotent = Some(idempotent);
    report.orthogonality = Some(orthogonality);
    report.completeness = Some(completeness);
    report
}

/// Runs [`certify_complete_system`] over several vertices and aggregates the
/// worst residual of each check.
pub fn certify_complete_system_sampled(
    family: Family,
    n: u32,
    ell: u32,
    vertices: &[u64],
    tol: f64,
) -> Result<CertificationReport, Error> {
    let d = family.validate(n, ell)?;
    let mut aggregate = empty_report(family, n, ell, d, tol);
    for &x in vertices {
        let sys = ProjectorSystem::new(family, n, ell, x)?;
        let single = certify_system_residuals(&sys, tol);
        let merge = |acc: &mut Option<f64>, v: Option<f64>| {
            *acc = match (*acc, v) {
                (Some(a), Some(b)) => Some(a.max(b)),
                (None, b) => b,
                (a, None) => a,
            }
        };
        merge(&mut aggregate.hermitian, single.hermitian);
        merge(&mut aggregate.idempotent, single.idempotent);
        merge(&mut aggregate.orthogonality, single.orthogonality);
        merge(&mut aggregate.completeness, single.completeness);
        aggregate.systems_checked += 1;
    }
    aggregate.pass = aggregate.systems_checked > 0 && aggregate.passes();
    Ok(aggregate)
}

/// Deterministic vertex sample for certification: always contains the zero
/// and all-ones vertices, topped up with seeded random vertices. Returns all
/// 2^n vertices when `count` covers them.
pub fn sample_vertices(n: u32, count: u32, seed: u64) -> Vec<u64> {
    let total = 1u64 << n;
    if u64::from(count) >= total {
        return (0..total).collect();
    }
    let mut chosen = BTreeSet::new();
    chosen.insert(0);
    chosen.insert(total - 1);
    let mut rng = ChaCha12Rng::seed_from_u64(seed);
    while (chosen.len() as u32) < count.max(2) {
        chosen.insert(rng.random_range(0..total));
    }
    chosen.into_iter().collect()
}

/// How edge pairs are enumerated for the edge-orthogonality check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairStrategy {
    /// One pair (0, y) per translation orbit: y runs over all weight-l
    /// vectors. Equivalent in residual to the full edge set, because
    /// diagonal sign conjugation maps (x, y) to (0, x xor y) without
    /// changing entry moduli.
    TranslationReduced,
    /// `pairs` uniformly random edges from the given seed.
    Randomized { pairs: u64, seed: u64 },
    /// Every edge; refused above [`EXHAUSTIVE_VERTEX_CAP`] vertices.
    Exhaustive,
}

impl fmt::Display for PairStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PairStrategy::TranslationReduced => f.write_str("translation-reduced"),
            PairStrategy::Randomized { pairs, seed } => {
                write!(f, "randomized(pairs={pairs},seed={seed})")
            }
            PairStrategy::Exhaustive => f.write_str("exhaustive"),
        }
    }
}

/// Certifies P_x^alpha P_y^alpha = 0 for vertex pairs at distance l,
/// enumerated per `strategy`, and the exact scalar identity
/// sum_k (-1)^{x_k+y_k} = 0 behind it.
pub fn certify_edge_orthogonality(
    family: Family,
    n: u32,
    ell: u32,
    tol: f64,
    strategy: PairStrategy,
) -> Result<CertificationReport, Error> {
    let d = family.validate(n, ell)?;
    let roots = roots_of_unity(d);

    let mut worst_entry: f64 = 0.0;
    let mut worst_scalar: i64 = 0;
    let mut pairs_checked: u64 = 0;
    let mut check_pair = |x: u64, y: u64| {
        let distance = (x ^ y).count_ones();
        let scalar = i64::from(d) - 2 * i64::from(distance);
        worst_scalar = worst_scalar.max(scalar.abs());
        for alpha in 0..d {
            let px = build_with_roots(d, x, alpha, &roots);
            let py = build_with_roots(d, y, alpha, &roots);
            worst_entry = worst_entry.max(px.mul(&py).max_abs());
        }
        pairs_checked += 1;
    };

    match strategy {
        PairStrategy::TranslationReduced => {
            for y in weight_masks(n, ell) {
                check_pair(0, y);
            }
        }
        PairStrategy::Exhaustive => {
            let total = 1u64 << n;
            if total > EXHAUSTIVE_VERTEX_CAP {
                return Err(Error::ExhaustiveCapExceeded {
                    n,
                    cap: EXHAUSTIVE_VERTEX_CAP,
                });
            }
            for x in 0..total {
                for s in weight_masks(n, ell) {
                    let y = x ^ s;
                    if x < y {
                        check_pair(x, y);
                    }
                }
            }
        }
        PairStrategy::Randomized { pairs, seed } => {
            let mut rng = ChaCha12Rng::seed_from_u64(seed);
            let mask = (1u64 << n) - 1;
            for _ in 0..pairs {
                let x = rng.random::<u64>() & mask;
                let y = x ^ random_weight_mask(&mut rng, n, ell);
                check_pair(x, y);
            }
        }
    }

    let mut report = empty_report(family, n, ell, d, tol);
    report.edge_orthogonality = Some(worst_entry);
    report.scalar_identity_max = Some(worst_scalar);
    report.strategy = Some(strategy);
    report.pairs_checked = pairs_checked;
    report.pass = pairs_checked > 0 && report.passes();
    Ok(report)
}

/// The number of colours d as a certified upper bound on chi_q.
///
/// Demands a passing complete-system report and a passing edge report for
/// the same parameters; anything less is refused rather than returned as a
/// bound.
pub fn chi_q_upper_from_colouring(
    system: &CertificationReport,
    edges: &CertificationReport,
) -> Result<BigInt, Error> {
    let refuse = |reason: &str| Error::CertificationNotPassed {
        reason: reason.into(),
    };
    if (system.family, system.n, system.ell, system.d)
        != (edges.family, edges.n, edges.ell, edges.d)
    {
        return Err(refuse("reports describe different systems"));
    }
    if system.completeness.is_none() || system.orthogonality.is_none() {
        return Err(refuse("complete-system residuals missing"));
    }
    if edges.edge_orthogonality.is_none() {
        return Err(refuse("edge-orthogonality residual missing"));
    }
    if !system.pass {
        return Err(refuse("complete-system certification did not pass"));
    }
    if !edges.pass {
        return Err(refuse("edge-orthogonality certification did not pass"));
    }
    Ok(BigInt::from(system.d))
}
