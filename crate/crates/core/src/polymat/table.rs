use std::fmt;

use super::PolyError;
use crate::exactla::Rational;
use crate::graphcore::VertexSet;

/// Largest ground set a dense table is built for.
pub const DEFAULT_TABLE_BOUND: usize = 12;

/// A set function on `{0, …, n-1}`, stored densely by subset bitmask.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SetFunction {
    n: usize,
    values: Vec<Rational>,
}

impl SetFunction {
    pub fn new(n: usize, values: Vec<Rational>) -> Result<Self, PolyError> {
        if values.len() != 1 << n {
            return Err(PolyError::TableSize {
                expected: 1 << n,
                found: values.len(),
            });
        }
        Ok(Self { n, values })
    }

    pub fn from_fn(n: usize, mut f: impl FnMut(VertexSet) -> Rational) -> Self {
        let values = (0..1u64 << n)
            .map(|bits| f(VertexSet::from_bits(bits)))
            .collect();
        Self { n, values }
    }

    /// The modular function `I ↦ Σ_{i∈I} q_i`.
    pub fn modular(q: &[Rational]) -> Self {
        Self::from_fn(q.len(), |set| set.iter().map(|i| q[i].clone()).sum())
    }

    pub fn zero(n: usize) -> Self {
        Self::from_fn(n, |_| Rational::ZERO)
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn ground(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn value(&self, set: VertexSet) -> &Rational {
        &self.values[set.bits() as usize]
    }

    pub fn values(&self) -> &[Rational] {
        &self.values
    }

    /// The value on the whole ground set.
    pub fn range(&self) -> &Rational {
        self.value(self.ground())
    }

    /// `η*(I) = η(V) − η(V ∖ I)`.
    pub fn adjoint(&self) -> Self {
        let full = self.ground();
        Self::from_fn(self.n, |set| {
            self.range() - self.value(full.difference(set))
        })
    }

    /// Second differences `η(I+i) + η(I+j) − η(I+i+j) − η(I)` over all
    /// `I` and `i < j` outside `I`; these are all nonnegative exactly when
    /// the function is submodular.
    fn second_differences(&self) -> impl Iterator<Item = Rational> + '_ {
        let n = self.n;
        (0..1u64 << n).flat_map(move |bits| {
            let outside: Vec<usize> = (0..n).filter(|&i| bits >> i & 1 == 0).collect();
            let mut out = Vec::new();
            for (a, &i) in outside.iter().enumerate() {
                for &j in &outside[a + 1..] {
                    let (bi, bj) = (1u64 << i, 1u64 << j);
                    let v = |b: u64| &self.values[b as usize];
                    out.push(&(v(bits | bi) + v(bits | bj)) - &(v(bits | bi | bj) + v(bits)));
                }
            }
            out
        })
    }

    pub fn is_normalized(&self) -> bool {
        self.values[0].is_zero()
    }

    pub fn is_submodular(&self) -> bool {
        self.is_normalized() && self.second_differences().all(|d| !d.is_negative())
    }

    pub fn is_supermodular(&self) -> bool {
        self.is_normalized()
            && self
                .second_differences()
                .all(|d| d.is_zero() || d.is_negative())
    }

    pub fn is_modular(&self) -> bool {
        self.is_normalized() && self.second_differences().all(|d| d.is_zero())
    }

    pub fn is_nondecreasing(&self) -> bool {
        (0..1u64 << self.n).all(|bits| {
            (0..self.n)
                .filter(|&i| bits >> i & 1 == 0)
                .all(|i| self.values[(bits | 1 << i) as usize] >= self.values[bits as usize])
        })
    }

    pub fn is_nonnegative(&self) -> bool {
        self.values.iter().all(|x| !x.is_negative())
    }

    pub fn is_integer_valued(&self) -> bool {
        self.values.iter().all(Rational::is_integer)
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &SetFunction) -> bool {
        self.n == other.n && self.values.iter().zip(&other.values).all(|(a, b)| a <= b)
    }
}

impl fmt::Debug for SetFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (bits, v) in self.values.iter().enumerate() {
            m.entry(&VertexSet::from_bits(bits as u64), v);
        }
        m.finish()
    }
}
