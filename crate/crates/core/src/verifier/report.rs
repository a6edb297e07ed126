use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::fraction::{round_sig12, Fraction};
use crate::vertex_set::VertexSet;

/// Which inequality a report concerns.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Theorem {
    /// `Φ²/2 <= 1 - λ₂`
    CheegerLower,
    /// `1 - λ₂ <= 2Φ`
    CheegerUpper,
    /// `τ <= dΦ` when `Φ <= 1/d²`
    Thm12Conditional,
    /// `τ <= d²Φ`
    Thm12Unconditional,
    /// `Φ <= dτ`
    Thm13,
    /// `τ²/(2d⁴) <= 1 - λ₂`
    Cor14GeneralLower,
    /// `1 - λ₂ <= 2dτ`
    Cor14GeneralUpper,
    /// `τ²/(2d²) <= 1 - λ₂` when `Φ <= 1/d²`
    Cor14ConditionalLower,
    /// some conductance minimizer induces a connected subgraph (`1 <= count`)
    Lemma23,
    /// `0 < τ <= 1` with a nonempty largest remaining component
    Remark21,
    /// `0 < Φ <= 1`
    Remark22,
    /// `Σ |Cut(C_i, V - C_i)| <= d|S|`
    ProofFact1,
    /// `|V - S - T| + 1 <= Σ |C_i|`
    ProofFact2,
}

impl Theorem {
    pub const ALL: [Theorem; 13] = [
        Theorem::CheegerLower,
        Theorem::CheegerUpper,
        Theorem::Thm12Conditional,
        Theorem::Thm12Unconditional,
        Theorem::Thm13,
        Theorem::Cor14GeneralLower,
        Theorem::Cor14GeneralUpper,
        Theorem::Cor14ConditionalLower,
        Theorem::Lemma23,
        Theorem::Remark21,
        Theorem::Remark22,
        Theorem::ProofFact1,
        Theorem::ProofFact2,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Theorem::CheegerLower => "cheeger_lower",
            Theorem::CheegerUpper => "cheeger_upper",
            Theorem::Thm12Conditional => "thm12_conditional",
            Theorem::Thm12Unconditional => "thm12_unconditional",
            Theorem::Thm13 => "thm13",
            Theorem::Cor14GeneralLower => "cor14_general_lower",
            Theorem::Cor14GeneralUpper => "cor14_general_upper",
            Theorem::Cor14ConditionalLower => "cor14_conditional_lower",
            Theorem::Lemma23 => "lemma23",
            Theorem::Remark21 => "remark21",
            Theorem::Remark22 => "remark22",
            Theorem::ProofFact1 => "proof_fact1",
            Theorem::ProofFact2 => "proof_fact2",
        }
    }

    /// Whether equality cases of this check belong in the strictness audit.
    /// The connected-minimizer check is an existence claim and the proof facts are intermediate
    /// counting identities that are tight on most graphs.
    pub fn audited(self) -> bool {
        !matches!(self, Theorem::Lemma23 | Theorem::ProofFact1 | Theorem::ProofFact2)
    }
}

/// One side of an inequality.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Quantity {
    Exact(Fraction),
    Real(f64),
}

impl Quantity {
    pub fn to_f64(self) -> f64 {
        match self {
            Quantity::Exact(f) => f.to_f64(),
            Quantity::Real(x) => x,
        }
    }

    pub fn exact(self) -> Option<Fraction> {
        match self {
            Quantity::Exact(f) => Some(f),
            Quantity::Real(_) => None,
        }
    }
}

impl From<Fraction> for Quantity {
    fn from(f: Fraction) -> Self {
        Quantity::Exact(f)
    }
}

impl From<u64> for Quantity {
    fn from(n: u64) -> Self {
        Quantity::Exact(Fraction::from_int(n))
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Quantity", 3)?;
        let exact = self.exact();
        s.serialize_field("num", &exact.map(Fraction::numer))?;
        s.serialize_field("den", &exact.map(Fraction::denom))?;
        s.serialize_field("real", &round_sig12(self.to_f64()))?;
        s.end()
    }
}

/// Outcome of checking `lhs <= rhs` on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TheoremReport {
    pub theorem: Theorem,
    pub graph_id: String,
    pub n: usize,
    pub m: usize,
    pub d: Option<usize>,
    pub lhs: Quantity,
    pub rhs: Quantity,
    pub holds: bool,
    pub strict_holds: bool,
    /// `rhs - lhs`.
    pub slack: f64,
    pub witnesses: Vec<VertexSet>,
}

/// `(holds, strict_holds)` for `lhs <= rhs`: exact when both sides are
/// exact, otherwise within absolute tolerance `tol`.
pub(crate) fn compare(lhs: Quantity, rhs: Quantity, tol: f64) -> (bool, bool) {
    match (lhs, rhs) {
        (Quantity::Exact(l), Quantity::Exact(r)) => (l <= r, l < r),
        _ => {
            let (l, r) = (lhs.to_f64(), rhs.to_f64());
            (l <= r + tol, l < r - tol)
        }
    }
}
