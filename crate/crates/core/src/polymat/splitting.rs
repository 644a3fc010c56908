use serde::Serialize;

use super::{PolyError, SetFunction};
use crate::exactla::Rational;
use crate::graphcore::LevelStructure;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Modularity {
    Supermodular,
    Submodular,
}

/// The splitting `μ_π = Σ_n μ_{F_n/F_{n−1}}` along the chain of `l`, where
/// `μ_{F_n/F_{n−1}}(I) = μ((I ∩ F_n) ∪ F_{n−1}) − μ(F_{n−1})`.
///
/// Submodular input is split by conjugating with the adjoint.
pub fn splitting(
    t: &SetFunction,
    l: &LevelStructure,
    kind: Modularity,
) -> Result<SetFunction, PolyError> {
    if t.ground_size() != l.vertex_count() {
        return Err(PolyError::GroundMismatch {
            left: t.ground_size(),
            right: l.vertex_count(),
        });
    }
    Ok(match kind {
        Modularity::Supermodular => split_supermodular(t, l),
        Modularity::Submodular => split_supermodular(&t.adjoint(), l).adjoint(),
    })
}

fn split_supermodular(t: &SetFunction, l: &LevelStructure) -> SetFunction {
    let chain: Vec<_> = (0..=l.depth()).map(|n| l.at_or_below(n)).collect();
    SetFunction::from_fn(t.ground_size(), |set| {
        let mut total = Rational::ZERO;
        for n in 1..=l.depth() {
            let prev = chain[n - 1];
            total += &(t.value(set.intersection(chain[n]).union(prev)) - t.value(prev));
        }
        total
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphcore::enumerate_ordered_partitions;

    fn cardinality_square(n: usize) -> SetFunction {
        SetFunction::from_fn(n, |s| Rational::from_integer((s.len() * s.len()) as i64))
    }

    #[test]
    fn trivial_partition_is_the_identity() {
        let t = cardinality_square(3);
        let l = LevelStructure::trivial(3);
        assert_eq!(splitting(&t, &l, Modularity::Supermodular).unwrap(), t);
        assert_eq!(
            splitting(&t.adjoint(), &l, Modularity::Submodular).unwrap(),
            t.adjoint()
        );
    }

    #[test]
    fn modular_functions_are_fixed() {
        let q: Vec<Rational> = [2, -1, 0, 7]
            .iter()
            .map(|&x| Rational::from_integer(x))
            .collect();
        let t = SetFunction::modular(&q);
        for l in enumerate_ordered_partitions(4, 8).unwrap() {
            assert_eq!(splitting(&t, &l, Modularity::Supermodular).unwrap(), t);
        }
    }

    #[test]
    fn splitting_preserves_supermodularity_and_range() {
        let t = cardinality_square(4);
        for l in enumerate_ordered_partitions(4, 8).unwrap() {
            let s = splitting(&t, &l, Modularity::Supermodular).unwrap();
            assert!(s.is_supermodular());
            assert_eq!(s.range(), t.range());
        }
    }

    #[test]
    fn mismatched_ground_set_is_an_error() {
        let t = cardinality_square(3);
        assert!(splitting(&t, &LevelStructure::trivial(2), Modularity::Supermodular).is_err());
    }
}
