//! JSON report shapes. Big integers are decimal strings.

use opprank_core::jantzen::ResolutionStatus;
use opprank_core::{TypeSet, Weight};
use serde::Serialize;

pub const SCHEMA: &str = "opprank/1";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Verdict {
    Match,
    Mismatch,
    UnresolvedPrediction,
    GeometryUnsupported,
}

impl Verdict {
    pub fn exit_code(self) -> i32 {
        match self {
            Verdict::Match => 0,
            Verdict::Mismatch => 2,
            Verdict::UnresolvedPrediction => 3,
            Verdict::GeometryUnsupported => 4,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ResolutionSummary {
    pub status: ResolutionStatus,
    pub depth: usize,
    pub chain: Vec<Weight>,
    /// `dim L(λ)` at the prime.
    pub dim: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TypeACheck {
    pub nvars: u32,
    pub degree: u64,
    pub truncated_poly_dim: String,
    pub agrees: Option<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Prediction {
    pub lambda_opp: Weight,
    pub lambda_at_prime: Weight,
    pub twist_order: Option<u32>,
    /// `t / e`: the power applied to the prime-field dimension.
    pub steinberg_exponent: u32,
    pub resolution: ResolutionSummary,
    pub predicted_rank: Option<String>,
    pub type_a_check: Option<TypeACheck>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FormStats {
    pub kind: String,
    pub gram: Vec<Vec<u8>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeometryStats {
    pub cotype_j: TypeSet,
    pub cotype_k: TypeSet,
    pub ambient_dim: usize,
    pub nrows: usize,
    pub ncols: usize,
    pub w_star_length: usize,
    pub row_sum: u64,
    pub form: Option<FormStats>,
    pub matrix_file: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectrumResult {
    pub size: usize,
    pub q: u64,
    pub max_exp: u32,
    pub ok: bool,
    pub exponents: Vec<u32>,
    /// `q^a` for each exponent.
    pub eigenvalues: Vec<String>,
    pub zero_eigenvalue: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Header {
    pub schema: &'static str,
    pub command: &'static str,
}

impl Header {
    pub fn new(command: &'static str) -> Header {
        Header {
            schema: SCHEMA,
            command,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PredictReport {
    #[serde(flatten)]
    pub header: Header,
    pub system: String,
    pub cotype: TypeSet,
    pub p: u64,
    pub t: u32,
    pub q: u64,
    pub prediction: Prediction,
    pub notes: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    #[serde(flatten)]
    pub header: Header,
    pub system: String,
    pub cotype: TypeSet,
    pub p: u64,
    pub t: u32,
    pub q: u64,
    pub prediction: Prediction,
    pub geometry: Option<GeometryStats>,
    pub measured_rank: Option<String>,
    pub spectrum: Option<SpectrumResult>,
    pub verdict: Verdict,
    pub notes: Vec<String>,
}

impl VerifyReport {
    /// `MATCH` iff both ranks are present and equal.
    pub fn decide(
        prediction: &Prediction,
        geometry_supported: bool,
        measured: Option<&String>,
    ) -> Verdict {
        if !geometry_supported {
            return Verdict::GeometryUnsupported;
        }
        match (&prediction.predicted_rank, measured) {
            (None, _) => Verdict::UnresolvedPrediction,
            (Some(a), Some(b)) if a == b => Verdict::Match,
            _ => Verdict::Mismatch,
        }
    }
}
