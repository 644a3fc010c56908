use super::DegenError;
use crate::exactla::Subspace;
use crate::graphcore::{LevelStructure, Multigraph};

/// Integer weights `d_v`, strictly increasing across the parts of the
/// ordered partition they induce. The torus acts by `x_v = t^{-d_v}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightAssignment {
    d: Vec<i64>,
}

impl WeightAssignment {
    pub fn new(d: Vec<i64>) -> Self {
        Self { d }
    }

    /// `d_v = a·h(v) + b`; requires `a > 0`.
    pub fn affine(l: &LevelStructure, a: i64, b: i64) -> Self {
        assert!(a > 0, "weights must increase with the level");
        Self {
            d: l.levels().iter().map(|&h| a * h as i64 + b).collect(),
        }
    }

    /// `d_v = h(v)`.
    pub fn standard(l: &LevelStructure) -> Self {
        Self::affine(l, 1, 0)
    }

    pub fn values(&self) -> &[i64] {
        &self.d
    }

    /// The ordered partition by level sets of `d`.
    pub fn induced_partition(&self) -> LevelStructure {
        LevelStructure::from_levels(&self.d)
    }

    /// `w(a) = d(tail a)` for every arrow.
    pub fn arrow_weights(&self, g: &Multigraph) -> Vec<i64> {
        g.arrows().iter().map(|a| self.d[a.tail]).collect()
    }
}

/// The family `t ↦ x(t)·W`, with coordinate `j` scaled by `t^{-weights[j]}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentSubspace {
    pub base: Subspace,
    pub weights: Vec<i64>,
}

impl LaurentSubspace {
    pub fn new(base: Subspace, weights: Vec<i64>) -> Result<Self, DegenError> {
        if weights.len() != base.ambient_dim() {
            return Err(DegenError::LengthMismatch {
                expected: base.ambient_dim(),
                found: weights.len(),
            });
        }
        Ok(Self { base, weights })
    }

    /// A subspace of the arrow space of `g` scaled through the tails' weights.
    pub fn on_arrows(
        g: &Multigraph,
        base: Subspace,
        d: &WeightAssignment,
    ) -> Result<Self, DegenError> {
        Self::new(base, d.arrow_weights(g))
    }
}
