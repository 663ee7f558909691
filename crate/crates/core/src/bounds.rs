//! Spectral chromatic bounds, classical and quantum, in exact rationals.
//!
//! For a graph on N vertices with m edges, adjacency eigenvalues
//! lambda_1 >= ... >= lambda_N, Laplacian eigenvalues theta_i and signless
//! Laplacian eigenvalues delta_i, the classical chromatic number satisfies
//!
//! ```text
//! chi >= 1 + max{ lambda_1/|lambda_N|, 2m/(2m - N delta_N),
//!                 lambda_1/(lambda_1 - delta_1 + theta_1),
//!                 n+/n-, n-/n+, S+/S-, S-/S+ }
//! ```
//!
//! where n+/n- count eigenvalues by sign and S+/S- sum their squares, all
//! with multiplicity. The quantum chromatic number keeps the first term:
//! chi_q >= 1 + lambda_1/|lambda_N|.
//!
//! Hamming graphs are C(n, l)-regular, so the Laplacian quantities follow
//! from the adjacency spectrum directly: theta_1 = k - lambda_N,
//! delta_1 = k + lambda_1 = 2k, delta_N = k + lambda_N. Terms whose
//! denominator is zero or negative are flagged not-applicable and excluded
//! from the max rather than guessed at.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::Error;
use crate::spectra::{spectrum_closed_form, HammingGraphSpec, WeightSpectrum};

/// One candidate term of the classical bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundTerm {
    pub name: &'static str,
    /// Exact value; `None` when the term is not applicable.
    pub value: Option<BigRational>,
    pub applicable: bool,
}

/// An exact value together with the tag of the result that justifies it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProvenancedValue {
    pub value: BigInt,
    pub provenance: String,
}

/// Every spectral quantity entering the chromatic bounds, exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BoundReport {
    pub spec: HammingGraphSpec,
    pub vertex_count: BigInt,
    /// Degree k = C(n, l).
    pub degree: BigInt,
    /// m = 2^{n-1} k.
    pub edge_count: BigInt,
    pub lambda_1: BigInt,
    pub lambda_n: BigInt,
    /// theta_1 = k - lambda_n.
    pub theta_1: BigInt,
    /// delta_1 = k + lambda_1 = 2k.
    pub delta_1: BigInt,
    /// delta_n = k + lambda_n.
    pub delta_n: BigInt,
    pub n_plus: BigInt,
    pub n_minus: BigInt,
    pub s_plus: BigInt,
    pub s_minus: BigInt,
    pub terms: Vec<BoundTerm>,
    pub classical_lower: BigRational,
    pub quantum_lower: BigRational,
    pub quantum_upper: Option<ProvenancedValue>,
    pub exact_chi_q: Option<ProvenancedValue>,
}

enum BoundTermValue {
    Applicable(BigRational),
    NotApplicable,
}

fn ratio(numerator: BigInt, denominator: BigInt) -> BoundTermValue {
    if denominator.is_positive() {
        BoundTermValue::Applicable(BigRational::new(numerator, denominator))
    } else {
        BoundTermValue::NotApplicable
    }
}

impl BoundTermValue {
    fn into_term(self, name: &'static str) -> BoundTerm {
        match self {
            BoundTermValue::Applicable(value) => BoundTerm {
                name,
                value: Some(value),
                applicable: true,
            },
            BoundTermValue::NotApplicable => BoundTerm {
                name,
                value: None,
                applicable: false,
            },
        }
    }
}

/// Evaluates every term of the classical bound for a Hamming-graph spectrum
/// and attaches the chromatic verdict where one is known.
pub fn classical_bound(ws: &WeightSpectrum) -> Result<BoundReport, Error> {
    if ws.entries.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let spec = ws.spec;
    let vertex_count = spec.vertex_count();
    let degree = spec.degree();
    let edge_count = &vertex_count * &degree / BigInt::from(2);

    let extremes = ws.lambda_extremes();
    let lambda_1 = extremes.lambda_max;
    let lambda_n = extremes.lambda_min;
    let theta_1 = &degree - &lambda_n;
    let delta_1 = &degree + &lambda_1;
    let delta_n = &degree + &lambda_n;

    let mut n_plus = BigInt::zero();
    let mut n_minus = BigInt::zero();
    let mut s_plus = BigInt::zero();
    let mut s_minus = BigInt::zero();
    for entry in &ws.entries {
        let square = &entry.eigenvalue * &entry.eigenvalue * &entry.multiplicity;
        if entry.eigenvalue.is_positive() {
            n_plus += &entry.multiplicity;
            s_plus += square;
        } else if entry.eigenvalue.is_negative() {
            n_minus += &entry.multiplicity;
            s_minus += square;
        }
    }

    let two_m = BigInt::from(2) * &edge_count;
    let terms = vec![
        ratio(lambda_1.clone(), -lambda_n.clone()).into_term("lambda_1/|lambda_n|"),
        ratio(two_m.clone(), &two_m - &vertex_count * &delta_n).into_term("2m/(2m - n*delta_n)"),
        ratio(lambda_1.clone(), &lambda_1 - &delta_1 + &theta_1)
            .into_term("lambda_1/(lambda_1 - delta_1 + theta_1)"),
        ratio(n_plus.clone(), n_minus.clone()).into_term("n+/n-"),
        ratio(n_minus.clone(), n_plus.clone()).into_term("n-/n+"),
        ratio(s_plus.clone(), s_minus.clone()).into_term("S+/S-"),
        ratio(s_minus.clone(), s_plus.clone()).into_term("S-/S+"),
    ];

    let best = terms
        .iter()
        .filter_map(|t| t.value.as_ref())
        .max()
        .cloned()
        .ok_or(Error::NoNegativeEigenvalue)?;
    let classical_lower = BigRational::one() + best;
    let quantum_lower = quantum_lower_bound(ws)?;

    let (quantum_upper, exact_chi_q) = match chi_q_verdict(&spec) {
        ChiQVerdict::Exact { value, provenance } => (
            Some(ProvenancedValue {
                value: value.clone(),
                provenance: provenance.clone(),
            }),
            Some(ProvenancedValue { value, provenance }),
        ),
        ChiQVerdict::Interval {
            upper, provenance, ..
        } => (
            Some(ProvenancedValue {
                value: upper,
                provenance,
            }),
            None,
        ),
        ChiQVerdict::LowerBoundOnly { .. } => (None, None),
    };

    Ok(BoundReport {
        spec,
        vertex_count,
        degree,
        edge_count,
        lambda_1,
        lambda_n,
        theta_1,
        delta_1,
        delta_n,
        n_plus,
        n_minus,
        s_plus,
        s_minus,
        terms,
        classical_lower,
        quantum_lower,
        quantum_upper,
        exact_chi_q,
    })
}

/// The spectral quantum bound 1 + lambda_1/|lambda_n|, exactly.
///
/// Rejects spectra without a negative eigenvalue (edgeless cases), where the
/// bound is meaningless.
pub fn quantum_lower_bound(ws: &WeightSpectrum) -> Result<BigRational, Error> {
    if ws.entries.is_empty() {
        return Err(Error::EmptySpectrum);
    }
    let extremes = ws.lambda_extremes();
    if !extremes.lambda_min.is_negative() {
        return Err(Error::NoNegativeEigenvalue);
    }
    Ok(BigRational::one() + BigRational::new(extremes.lambda_max, -extremes.lambda_min))
}

/// What is known about chi_q of one Hamming graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ChiQVerdict {
    /// The exact value is known.
    Exact { value: BigInt, provenance: String },
    /// Known to lie in [lower, upper]; the lower end is the spectral
    /// quantum bound and may be fractional.
    Interval {
        lower: BigRational,
        upper: BigInt,
        provenance: String,
    },
    /// Only the spectral lower bound is known; no upper bound exists in
    /// the supported results and none is invented.
    LowerBoundOnly {
        lower: BigRational,
        provenance: String,
    },
}

impl ChiQVerdict {
    pub fn exact_value(&self) -> Option<&BigInt> {
        match self {
            ChiQVerdict::Exact { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn provenance(&self) -> &str {
        match self {
            ChiQVerdict::Exact { provenance, .. }
            | ChiQVerdict::Interval { provenance, .. }
            | ChiQVerdict::LowerBoundOnly { provenance, .. } => provenance,
        }
    }
}

/// Classifies a Hamming graph into the known chi_q results:
///
/// * l odd: bipartite, chi_q = 2;
/// * n = 4t, l = 2t: chi_q = n;
/// * n = 4t-1, l = 2t: chi_q = n+1;
/// * l even with 2l >= n: the interval [1 + lambda_1/|lambda_n|, 2l];
/// * l even with 2l < n: spectral lower bound only (no upper bound is
///   known in this range, and none is invented).
pub fn chi_q_verdict(spec: &HammingGraphSpec) -> ChiQVerdict {
    let (n, ell) = (spec.n, spec.ell);
    if ell % 2 == 1 {
        return ChiQVerdict::Exact {
            value: BigInt::from(2),
            provenance: "bipartite".into(),
        };
    }
    if n % 4 == 0 && 2 * ell == n {
        return ChiQVerdict::Exact {
            value: BigInt::from(n),
            provenance: "theorem-1.1".into(),
        };
    }
    if n % 4 == 3 && 2 * ell == n + 1 {
        return ChiQVerdict::Exact {
            value: BigInt::from(n + 1),
            provenance: "theorem-3.2".into(),
        };
    }
    let lower = quantum_lower_bound(&spectrum_closed_form(spec))
        .expect("Hamming graphs with l >= 1 have a negative eigenvalue");
    if 2 * ell >= n {
        let provenance = if n % 4 == 2 && 2 * ell == n + 2 {
            "proposition-3.6"
        } else {
            "lemma-2.4+theorem-3.5"
        };
        return ChiQVerdict::Interval {
            lower,
            upper: BigInt::from(2 * ell),
            provenance: provenance.into(),
        };
    }
    ChiQVerdict::LowerBoundOnly {
        lower,
        provenance: "open-question: no upper bound known when 2l < n".into(),
    }
}
