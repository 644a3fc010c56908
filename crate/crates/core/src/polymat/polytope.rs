use super::{PolyError, SetFunction};
use crate::exactla::Rational;
use crate::graphcore::VertexSet;

/// Largest ground set for which greedy vertex enumeration runs over all orderings.
pub const DEFAULT_VERTEX_BOUND: usize = 8;

/// The base polytope `{q : q(I) ≤ η(I) for all I, q(V) = η(V)}` of a
/// submodular `η`, held by its vertex set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BasePolytope {
    /// Distinct vertices, sorted lexicographically.
    pub vertices: Vec<Vec<Rational>>,
    pub table: SetFunction,
}

/// `q(I) = Σ_{i∈I} q_i`.
pub fn point_value(q: &[Rational], set: VertexSet) -> Rational {
    set.iter().map(|i| q[i].clone()).sum()
}

/// The greedy vertex for the ordering `order`: each element receives the
/// increment of `η` along the prefix chain.
pub fn greedy_vertex(table: &SetFunction, order: &[usize]) -> Vec<Rational> {
    let mut q = vec![Rational::ZERO; table.ground_size()];
    let mut prefix = VertexSet::EMPTY;
    for &i in order {
        let before = table.value(prefix).clone();
        prefix.insert(i);
        q[i] = table.value(prefix) - &before;
    }
    q
}

/// Visits every permutation of `0..n` (Heap's algorithm).
pub fn for_each_permutation(n: usize, mut visit: impl FnMut(&[usize])) {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut c = vec![0usize; n];
    visit(&perm);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            visit(&perm);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

impl BasePolytope {
    /// Whether `q` satisfies every defining inequality and the equation.
    pub fn contains(&self, q: &[Rational]) -> bool {
        let n = self.table.ground_size();
        q.len() == n
            && (0..1u64 << n).all(|bits| {
                let set = VertexSet::from_bits(bits);
                point_value(q, set) <= *self.table.value(set)
            })
            && point_value(q, self.table.ground()) == *self.table.range()
    }

    pub fn vertex_index(&self, q: &[Rational]) -> Option<usize> {
        self.vertices.binary_search_by(|v| v.as_slice().cmp(q)).ok()
    }

    pub fn has_vertex(&self, q: &[Rational]) -> bool {
        self.vertex_index(q).is_some()
    }

    /// Indices of the vertices maximizing `Σ w_i q_i`.
    pub fn argmax(&self, weights: &[Rational]) -> Vec<usize> {
        let score =
            |q: &[Rational]| -> Rational { q.iter().zip(weights).map(|(a, b)| a * b).sum() };
        let scores: Vec<Rational> = self.vertices.iter().map(|q| score(q)).collect();
        let Some(best) = scores.iter().max() else {
            return Vec::new();
        };
        scores
            .iter()
            .enumerate()
            .filter(|(_, s)| *s == best)
            .map(|(i, _)| i)
            .collect()
    }
}

pub fn base_polytope(table: &SetFunction, bound: usize) -> Result<BasePolytope, PolyError> {
    let n = table.ground_size();
    if n > bound {
        return Err(PolyError::BoundExceeded {
            what: "vertex enumeration",
            size: n,
            bound,
        });
    }
    if !table.is_submodular() {
        return Err(PolyError::NotSubmodular);
    }
    let mut vertices = Vec::new();
    for_each_permutation(n, |order| vertices.push(greedy_vertex(table, order)));
    vertices.sort();
    vertices.dedup();
    let p = BasePolytope {
        vertices,
        table: table.clone(),
    };
    if let Some(bad) = p.vertices.iter().position(|q| !p.contains(q)) {
        return Err(PolyError::VertexOutside { index: bad });
    }
    Ok(p)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn heap_permutations_are_distinct_and_complete() {
        for n in 0..=5 {
            let mut seen = Vec::new();
            for_each_permutation(n, |p| seen.push(p.to_vec()));
            let total = seen.len();
            seen.sort();
            seen.dedup();
            assert_eq!(seen.len(), total);
            assert_eq!(total, (1..=n).product::<usize>());
        }
    }

    #[test]
    fn modular_polytope_is_a_point() {
        let q: Vec<Rational> = [3, 0, -1]
            .iter()
            .map(|&x| Rational::from_integer(x))
            .collect();
        let p = base_polytope(&SetFunction::modular(&q), 8).unwrap();
        assert_eq!(p.vertices, vec![q]);
    }

    #[test]
    fn rejects_non_submodular_and_oversized() {
        let t = SetFunction::from_fn(2, |s| Rational::from_integer((s.len() * s.len()) as i64));
        assert_eq!(base_polytope(&t, 8), Err(PolyError::NotSubmodular));
        assert!(matches!(
            base_polytope(&SetFunction::zero(9), 8),
            Err(PolyError::BoundExceeded { .. })
        ));
    }

    #[test]
    fn uniform_rank_one_gives_simplex() {
        let t = SetFunction::from_fn(3, |s| Rational::from_integer(i64::from(!s.is_empty())));
        let p = base_polytope(&t, 8).unwrap();
        assert_eq!(p.vertices.len(), 3);
        assert!(p
            .vertices
            .iter()
            .all(|q| q.iter().filter(|x| x.is_one()).count() == 1));
    }
}
