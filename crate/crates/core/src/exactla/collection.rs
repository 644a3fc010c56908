use rand::Rng;
use serde::Serialize;

use super::{LinAlgError, Rational, RationalMatrix};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LabeledVector {
    pub label: String,
    pub values: Vec<Rational>,
}

impl LabeledVector {
    pub fn new(label: impl Into<String>, values: Vec<Rational>) -> Self {
        Self {
            label: label.into(),
            values,
        }
    }

    /// Coordinates where the vector is nonzero, ascending.
    pub fn support(&self) -> Vec<usize> {
        self.values
            .iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, _)| i)
            .collect()
    }
}

/// A finite labeled family of vectors in `Q^n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VectorCollection {
    ambient_dim: usize,
    vectors: Vec<LabeledVector>,
}

impl VectorCollection {
    pub fn new(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            vectors: Vec::new(),
        }
    }

    pub fn push(&mut self, label: impl Into<String>, values: Vec<Rational>) {
        assert_eq!(values.len(), self.ambient_dim, "vector length mismatch");
        self.vectors.push(LabeledVector::new(label, values));
    }

    /// A vector equal to the characteristic function of `support`.
    pub fn push_indicator(&mut self, label: impl Into<String>, support: &[usize]) {
        let mut values = vec![Rational::ZERO; self.ambient_dim];
        for &i in support {
            values[i] = Rational::ONE;
        }
        self.push(label, values);
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }

    pub fn vectors(&self) -> &[LabeledVector] {
        &self.vectors
    }

    pub fn extend(&mut self, other: &VectorCollection) {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        self.vectors.extend(other.vectors.iter().cloned());
    }

    /// Drops the vector at `index`.
    pub fn without(&self, index: usize) -> VectorCollection {
        let mut out = self.clone();
        out.vectors.remove(index);
        out
    }

    /// Union of the supports.
    pub fn support(&self) -> Vec<usize> {
        let mut seen = vec![false; self.ambient_dim];
        for v in &self.vectors {
            for i in v.support() {
                seen[i] = true;
            }
        }
        (0..self.ambient_dim).filter(|&i| seen[i]).collect()
    }

    /// Supports are nonempty and pairwise disjoint, i.e. they partition the
    /// union of the supports.
    pub fn is_set_theoretically_independent(&self) -> bool {
        let mut seen = vec![false; self.ambient_dim];
        for v in &self.vectors {
            let s = v.support();
            if s.is_empty() {
                return false;
            }
            for i in s {
                if std::mem::replace(&mut seen[i], true) {
                    return false;
                }
            }
        }
        true
    }

    pub fn as_matrix(&self) -> RationalMatrix {
        RationalMatrix::from_rows(
            self.ambient_dim,
            self.vectors.iter().map(|v| v.values.clone()).collect(),
        )
    }

    pub fn rank(&self) -> usize {
        self.as_matrix().rank()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SetTheoreticReport {
    pub sti_1: bool,
    pub sti_2: bool,
    /// `None` unless both collections are set-theoretically independent.
    pub related: Option<bool>,
    pub properly_unrelated: Option<bool>,
}

/// Decides relatedness of two set-theoretically independent collections.
///
/// Whenever `[Φ'] = [Ψ']`, the union `Φ' ∪ Ψ'` is closed under support
/// overlap, so it is a union of connected components of the bipartite
/// overlap graph whose two sides cover the same coordinates ("balanced"
/// components). The collections are related iff a balanced component exists,
/// and properly unrelated iff the only possible choice is everything, i.e.
/// there is no balanced component or exactly one that contains every vector.
pub fn set_theoretic_checks(
    c1: &VectorCollection,
    c2: &VectorCollection,
) -> Result<SetTheoreticReport, LinAlgError> {
    if c1.ambient_dim != c2.ambient_dim {
        return Err(LinAlgError::DimensionMismatch {
            left: c1.ambient_dim,
            right: c2.ambient_dim,
        });
    }
    let sti_1 = c1.is_set_theoretically_independent();
    let sti_2 = c2.is_set_theoretically_independent();
    if !(sti_1 && sti_2) {
        return Ok(SetTheoreticReport {
            sti_1,
            sti_2,
            related: None,
            properly_unrelated: None,
        });
    }

    let n = c1.ambient_dim;
    let (k1, k2) = (c1.len(), c2.len());
    // owner[side][coord] = index of the vector covering coord on that side.
    let mut owner = [vec![usize::MAX; n], vec![usize::MAX; n]];
    for (side, coll) in [c1, c2].into_iter().enumerate() {
        for (j, v) in coll.vectors.iter().enumerate() {
            for i in v.support() {
                owner[side][i] = j;
            }
        }
    }

    // Union-find over k1 + k2 nodes; vertices of c2 are offset by k1.
    let mut parent: Vec<usize> = (0..k1 + k2).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..n {
        let (a, b) = (owner[0][i], owner[1][i]);
        if a != usize::MAX && b != usize::MAX {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, k1 + b));
            parent[ra] = rb;
        }
    }
    // A component is unbalanced if some coordinate is covered by only one side.
    let mut balanced = vec![true; k1 + k2];
    for i in 0..n {
        match (owner[0][i], owner[1][i]) {
            (usize::MAX, usize::MAX) => {}
            (a, usize::MAX) => {
                let r = find(&mut parent, a);
                balanced[r] = false;
            }
            (usize::MAX, b) => {
                let r = find(&mut parent, k1 + b);
                balanced[r] = false;
            }
            _ => {}
        }
    }
    // Components must draw from both sides; this also keeps zero vectors out.
    let mut sides = vec![[false; 2]; k1 + k2];
    for x in 0..k1 + k2 {
        let r = find(&mut parent, x);
        sides[r][usize::from(x >= k1)] = true;
    }
    for r in 0..k1 + k2 {
        if sides[r] != [true, true] {
            balanced[r] = false;
        }
    }
    let mut roots: Vec<usize> = (0..k1 + k2).map(|x| find(&mut parent, x)).collect();
    let all_roots = roots.clone();
    roots.sort_unstable();
    roots.dedup();
    let balanced_roots: Vec<usize> = roots.into_iter().filter(|&r| balanced[r]).collect();

    let related = !balanced_roots.is_empty();
    let properly_unrelated = match balanced_roots.as_slice() {
        [] => true,
        [only] => all_roots.iter().all(|r| r == only),
        _ => false,
    };
    Ok(SetTheoreticReport {
        sti_1,
        sti_2,
        related: Some(related),
        properly_unrelated: Some(properly_unrelated),
    })
}

/// A set-theoretically independent collection: coordinates are dealt into
/// disjoint blocks, each block carries one vector with nonzero entries.
pub fn random_sti_collection<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    tag: &str,
) -> VectorCollection {
    let blocks = rng.gen_range(1..=n);
    let owner: Vec<Option<usize>> = (0..n)
        .map(|_| rng.gen_bool(0.85).then(|| rng.gen_range(0..blocks)))
        .collect();
    let mut c = VectorCollection::new(n);
    for b in 0..blocks {
        let values: Vec<Rational> = owner
            .iter()
            .map(|&o| {
                if o == Some(b) {
                    let x = rng.gen_range(1..=4) * if rng.gen_bool(0.5) { 1 } else { -1 };
                    Rational::from_integer(x)
                } else {
                    Rational::ZERO
                }
            })
            .collect();
        if values.iter().any(|x| !x.is_zero()) {
            c.push(format!("{tag}{b}"), values);
        }
    }
    c
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit(n: usize, supp: &[(usize, i64)]) -> Vec<Rational> {
        let mut v = vec![Rational::ZERO; n];
        for &(i, x) in supp {
            v[i] = x.into();
        }
        v
    }

    /// Exhaustive search over pairs of nonempty subcollections.
    fn brute_force(c1: &VectorCollection, c2: &VectorCollection) -> (bool, bool) {
        let union_of = |c: &VectorCollection, mask: u32| {
            let mut s: Vec<usize> = c
                .vectors()
                .iter()
                .enumerate()
                .filter(|(j, _)| mask >> j & 1 == 1)
                .flat_map(|(_, v)| v.support())
                .collect();
            s.sort_unstable();
            s
        };
        let full1 = (1u32 << c1.len()) - 1;
        let full2 = (1u32 << c2.len()) - 1;
        let (mut related, mut proper) = (false, true);
        for m1 in 1..=full1 {
            for m2 in 1..=full2 {
                if union_of(c1, m1) == union_of(c2, m2) {
                    related = true;
                    if m1 != full1 || m2 != full2 {
                        proper = false;
                    }
                }
            }
        }
        (related, proper)
    }

    #[test]
    fn disjoint_supports_are_unrelated() {
        let mut c1 = VectorCollection::new(3);
        c1.push("e1", unit(3, &[(0, 1)]));
        c1.push("e2", unit(3, &[(1, 1)]));
        let mut c2 = VectorCollection::new(3);
        c2.push("e3", unit(3, &[(2, 1)]));
        let r = set_theoretic_checks(&c1, &c2).unwrap();
        assert!(r.sti_1 && r.sti_2);
        assert_eq!(r.related, Some(false));
        assert_eq!(r.properly_unrelated, Some(true));
    }

    #[test]
    fn whole_matches_whole_only() {
        let mut c1 = VectorCollection::new(2);
        c1.push("e1+e2", unit(2, &[(0, 1), (1, 1)]));
        let mut c2 = VectorCollection::new(2);
        c2.push("e1", unit(2, &[(0, 1)]));
        c2.push("e2", unit(2, &[(1, 1)]));
        let r = set_theoretic_checks(&c1, &c2).unwrap();
        assert_eq!(r.related, Some(true));
        assert_eq!(r.properly_unrelated, Some(true));
    }

    #[test]
    fn two_balanced_blocks_are_not_properly_unrelated() {
        let mut c1 = VectorCollection::new(2);
        c1.push("a", unit(2, &[(0, 1)]));
        c1.push("b", unit(2, &[(1, 2)]));
        let mut c2 = VectorCollection::new(2);
        c2.push("a'", unit(2, &[(0, -1)]));
        c2.push("b'", unit(2, &[(1, 5)]));
        let r = set_theoretic_checks(&c1, &c2).unwrap();
        assert_eq!(r.related, Some(true));
        assert_eq!(r.properly_unrelated, Some(false));
    }

    #[test]
    fn overlapping_supports_are_not_sti() {
        let mut c1 = VectorCollection::new(2);
        c1.push("a", unit(2, &[(0, 1), (1, 1)]));
        c1.push("b", unit(2, &[(1, 1)]));
        let c2 = VectorCollection::new(2);
        let r = set_theoretic_checks(&c1, &c2).unwrap();
        assert!(!r.sti_1 && r.sti_2);
        assert_eq!(r.related, None);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        assert!(
            set_theoretic_checks(&VectorCollection::new(2), &VectorCollection::new(3)).is_err()
        );
    }

    #[test]
    fn component_rule_agrees_with_exhaustive_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let n = rng.gen_range(1..=7);
            let make = |rng: &mut rand_chacha::ChaCha8Rng| {
                let mut label = vec![usize::MAX; n];
                let blocks = rng.gen_range(1..=n);
                for l in label.iter_mut() {
                    if rng.gen_bool(0.8) {
                        *l = rng.gen_range(0..blocks);
                    }
                }
                let mut c = VectorCollection::new(n);
                for b in 0..blocks {
                    let supp: Vec<(usize, i64)> = (0..n)
                        .filter(|&i| label[i] == b)
                        .map(|i| (i, rng.gen_range(1..=3)))
                        .collect();
                    if !supp.is_empty() {
                        c.push(format!("v{b}"), unit(n, &supp));
                    }
                }
                c
            };
            let c1 = make(&mut rng);
            let c2 = make(&mut rng);
            if c1.is_empty() || c2.is_empty() {
                continue;
            }
            let r = set_theoretic_checks(&c1, &c2).unwrap();
            let (related, proper) = brute_force(&c1, &c2);
            assert_eq!(r.related, Some(related), "{c1:?} {c2:?}");
            assert_eq!(r.properly_unrelated, Some(proper), "{c1:?} {c2:?}");
        }
    }
}
