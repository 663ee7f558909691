//! Serializable report types behind the machine-readable output formats.
//!
//! JSON is the schema-stable surface: keys are lower snake case, exact
//! integers and rationals are decimal strings ("p" or "p/q") so nothing is
//! squeezed through 53-bit floats, and every bound or verdict carries the
//! provenance tag of the result that justifies it. Each type round-trips
//! through serde unchanged.

use hamspec::bounds::{BoundReport, ChiQVerdict};
use hamspec::colouring::CertificationReport;
use hamspec::products::{ProductChiQVerdict, ProductGraph, ProductVerdict};
use hamspec::spectra::HammingGraphSpec;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct KrawReport {
    pub n: u32,
    pub q: u32,
    pub l: u32,
    pub x: u32,
    pub value: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TableReport {
    pub n: u32,
    /// rows[r][l] = lambda_l(r), decimal strings.
    pub rows: Vec<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TermReport {
    pub name: String,
    /// `None` when the term is not applicable for this spectrum.
    pub value: Option<String>,
    pub applicable: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct TaggedValue {
    pub value: String,
    pub provenance: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum VerdictReport {
    Exact {
        value: String,
        provenance: String,
    },
    Interval {
        lower: String,
        upper: String,
        provenance: String,
    },
    LowerBoundOnly {
        lower: String,
        provenance: String,
    },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundsReport {
    pub n: u32,
    pub l: u32,
    pub vertex_count: String,
    pub degree: String,
    pub edge_count: String,
    pub lambda_1: String,
    pub lambda_n: String,
    pub theta_1: String,
    pub delta_1: String,
    pub delta_n: String,
    pub n_plus: String,
    pub n_minus: String,
    pub s_plus: String,
    pub s_minus: String,
    pub terms: Vec<TermReport>,
    pub classical_lower: String,
    pub quantum_lower: String,
    pub quantum_upper: Option<TaggedValue>,
    pub exact_chi_q: Option<TaggedValue>,
    pub verdict: VerdictReport,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub hermitian: Option<f64>,
    pub idempotent: Option<f64>,
    pub orthogonality: Option<f64>,
    pub completeness: Option<f64>,
    pub edge_orthogonality: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub family: String,
    pub n: u32,
    pub l: u32,
    pub d: u32,
    pub tol: f64,
    pub seed: u64,
    pub strategy: String,
    pub systems_checked: u32,
    pub pairs_checked: u64,
    pub residuals: ResidualReport,
    pub scalar_identity_max: i64,
    /// The certified colour count; present only when both phases passed.
    pub colours: Option<String>,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GraphRef {
    pub n: u32,
    pub l: u32,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ProductVerdictReport {
    Exact { value: String },
    Interval { lower: String, upper: Option<String> },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ProductReport {
    pub left: GraphRef,
    pub right: GraphRef,
    pub lambda_max: String,
    pub lambda_min: String,
    pub distinct_eigenvalues: usize,
    pub multiplicity_total: String,
    pub ratio_left: String,
    pub ratio_right: String,
    pub verdict: ProductVerdictReport,
    pub justification: Vec<String>,
}

impl From<&ChiQVerdict> for VerdictReport {
    fn from(verdict: &ChiQVerdict) -> Self {
        match verdict {
            ChiQVerdict::Exact { value, provenance } => VerdictReport::Exact {
                value: value.to_string(),
                provenance: provenance.clone(),
            },
            ChiQVerdict::Interval {
                lower,
                upper,
                provenance,
            } => VerdictReport::Interval {
                lower: lower.to_string(),
                upper: upper.to_string(),
                provenance: provenance.clone(),
            },
            ChiQVerdict::LowerBoundOnly { lower, provenance } => VerdictReport::LowerBoundOnly {
                lower: lower.to_string(),
                provenance: provenance.clone(),
            },
        }
    }
}

pub fn bounds_report(report: &BoundReport, verdict: &ChiQVerdict) -> BoundsReport {
    let tagged = |v: &Option<hamspec::bounds::ProvenancedValue>| {
        v.as_ref().map(|pv| TaggedValue {
            value: pv.value.to_string(),
            provenance: pv.provenance.clone(),
        })
    };
    BoundsReport {
        n: report.spec.n,
        l: report.spec.ell,
        vertex_count: report.vertex_count.to_string(),
        degree: report.degree.to_string(),
        edge_count: report.edge_count.to_string(),
        lambda_1: report.lambda_1.to_string(),
        lambda_n: report.lambda_n.to_string(),
        theta_1: report.theta_1.to_string(),
        delta_1: report.delta_1.to_string(),
        delta_n: report.delta_n.to_string(),
        n_plus: report.n_plus.to_string(),
        n_minus: report.n_minus.to_string(),
        s_plus: report.s_plus.to_string(),
        s_minus: report.s_minus.to_string(),
        terms: report
            .terms
            .iter()
            .map(|t| TermReport {
                name: t.name.to_string(),
                value: t.value.as_ref().map(|v| v.to_string()),
                applicable: t.applicable,
            })
            .collect(),
        classical_lower: report.classical_lower.to_string(),
        quantum_lower: report.quantum_lower.to_string(),
        quantum_upper: tagged(&report.quantum_upper),
        exact_chi_q: tagged(&report.exact_chi_q),
        verdict: verdict.into(),
    }
}

/// Merges the two certification phases into the emitted report.
pub fn certify_report(
    system: &CertificationReport,
    edges: &CertificationReport,
    colours: Option<String>,
    seed: u64,
) -> CertifyReport {
    CertifyReport {
        family: system.family.tag().to_string(),
        n: system.n,
        l: system.ell,
        d: system.d,
        tol: system.tol,
        seed,
        strategy: edges
            .strategy
            .map(|s| s.to_string())
            .unwrap_or_else(|| "none".to_string()),
        systems_checked: system.systems_checked,
        pairs_checked: edges.pairs_checked,
        residuals: ResidualReport {
            hermitian: system.hermitian,
            idempotent: system.idempotent,
            orthogonality: system.orthogonality,
            completeness: system.completeness,
            edge_orthogonality: edges.edge_orthogonality,
        },
        scalar_identity_max: edges.scalar_identity_max.unwrap_or(0),
        colours,
        pass: system.pass && edges.pass,
    }
}

pub fn product_report(graph: &ProductGraph, verdict: &ProductChiQVerdict) -> ProductReport {
    let graph_ref = |spec: &HammingGraphSpec| GraphRef {
        n: spec.n,
        l: spec.ell,
    };
    ProductReport {
        left: graph_ref(&graph.left),
        right: graph_ref(&graph.right),
        lambda_max: graph.lambda_max().to_string(),
        lambda_min: graph.lambda_min().to_string(),
        distinct_eigenvalues: graph.spectrum.len(),
        multiplicity_total: graph.multiplicity_total().to_string(),
        ratio_left: verdict.ratio_left.to_string(),
        ratio_right: verdict.ratio_right.to_string(),
        verdict: match &verdict.verdict {
            ProductVerdict::Exact { value } => ProductVerdictReport::Exact {
                value: value.to_string(),
            },
            ProductVerdict::Interval { lower, upper } => ProductVerdictReport::Interval {
                lower: lower.to_string(),
                upper: upper.as_ref().map(|u| u.to_string()),
            },
        },
        justification: verdict.justification.clone(),
    }
}

/// Quotes a CSV field only when it needs it.
pub fn csv_field(value: &str) -> String {
    if value.contains(',') || value.contains('"') || value.contains('\n') {
        format!("\"{}\"", value.replace('"', "\"\""))
    } else {
        value.to_string()
    }
}
