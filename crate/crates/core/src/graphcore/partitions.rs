use super::{GraphError, LevelStructure, VertexSet};

pub const DEFAULT_PARTITION_BOUND: usize = 8;

/// Every ordered partition of `{0, …, n-1}`, each exactly once.
///
/// Parts are chosen front to back: the first part is any nonempty subset,
/// followed by an ordered partition of the rest.
pub fn enumerate_ordered_partitions(
    n: usize,
    bound: usize,
) -> Result<Vec<LevelStructure>, GraphError> {
    if n > bound {
        return Err(GraphError::BoundExceeded {
            what: "ordered-partition enumeration",
            size: n,
            bound,
        });
    }
    if n == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    let mut stack = Vec::new();
    extend(VertexSet::full(n), &mut stack, &mut |parts| {
        out.push(LevelStructure::from_parts(n, parts).expect("valid partition"));
    });
    Ok(out)
}

fn extend(remaining: VertexSet, parts: &mut Vec<VertexSet>, emit: &mut impl FnMut(&[VertexSet])) {
    if remaining.is_empty() {
        emit(parts);
        return;
    }
    let bits = remaining.bits();
    // Nonempty submasks of `remaining`, descending.
    let mut sub = bits;
    while sub != 0 {
        parts.push(VertexSet::from_bits(sub));
        extend(VertexSet::from_bits(bits & !sub), parts, emit);
        parts.pop();
        sub = (sub - 1) & bits;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    /// Fubini numbers by `a(n) = Σ_{k=1}^{n} C(n,k) a(n-k)`.
    fn fubini(n: usize) -> u64 {
        let mut a = vec![1u64; n + 1];
        for m in 1..=n {
            let mut binom = 1u64;
            let mut total = 0;
            for k in 1..=m {
                binom = binom * (m - k + 1) as u64 / k as u64;
                total += binom * a[m - k];
            }
            a[m] = total;
        }
        a[n]
    }

    /// Independent count: surjections onto `1..=r` by brute force over all level maps.
    fn brute_force_count(n: usize) -> usize {
        let mut count = 0;
        let total = n.pow(n as u32);
        for code in 0..total {
            let mut x = code;
            let mut used = vec![false; n];
            for _ in 0..n {
                used[x % n] = true;
                x /= n;
            }
            let r = used.iter().filter(|&&u| u).count();
            if used[..r].iter().all(|&u| u) {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn small_counts() {
        assert_eq!(enumerate_ordered_partitions(1, 8).unwrap().len(), 1);
        assert_eq!(enumerate_ordered_partitions(3, 8).unwrap().len(), 13);
        assert_eq!(enumerate_ordered_partitions(4, 8).unwrap().len(), 75);
        assert_eq!(brute_force_count(3), 13);
        assert_eq!(fubini(4), 75);
    }

    #[test]
    fn counts_follow_the_fubini_recurrence_without_duplicates() {
        for n in 1..=6 {
            let all = enumerate_ordered_partitions(n, 8).unwrap();
            assert_eq!(all.len() as u64, fubini(n));
            assert_eq!(all.len(), brute_force_count(n));
            let distinct: HashSet<_> = all.iter().map(|l| l.levels().to_vec()).collect();
            assert_eq!(distinct.len(), all.len());
        }
    }

    #[test]
    fn bound_is_enforced() {
        assert!(enumerate_ordered_partitions(9, 8).is_err());
        assert!(enumerate_ordered_partitions(5, 4).is_err());
    }
}
