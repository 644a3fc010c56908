//! Rank computations over a small prime field, used only as a cross-check of
//! the rational routines.

use super::RationalMatrix;

pub(crate) fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, p);
        }
        base = mul_mod(base, base, p);
        exp >>= 1;
    }
    acc
}

/// Inverse by Fermat; `p` must be prime and `a` nonzero mod `p`.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

/// Rank of `m` reduced modulo the prime `p`, or `None` if some entry has a
/// denominator divisible by `p`.
pub fn rank_mod_p(m: &RationalMatrix, p: u64) -> Option<usize> {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a = Vec::with_capacity(rows * cols);
    for x in m.entries() {
        a.push(x.mod_prime(p)?);
    }
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows).find(|&r| a[r * cols + col] != 0) else {
            continue;
        };
        for k in 0..cols {
            a.swap(rank * cols + k, pivot * cols + k);
        }
        let inv = inv_mod(a[rank * cols + col], p);
        for k in 0..cols {
            a[rank * cols + k] = mul_mod(a[rank * cols + k], inv, p);
        }
        for r in 0..rows {
            if r == rank {
                continue;
            }
            let factor = a[r * cols + col];
            if factor == 0 {
                continue;
            }
            for k in 0..cols {
                let sub = mul_mod(factor, a[rank * cols + k], p);
                a[r * cols + k] = (a[r * cols + k] + p - sub) % p;
            }
        }
        rank += 1;
    }
    Some(rank)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rank_mod_small_prime_can_drop() {
        // det = 6: full rank over Q and mod 5, rank-deficient mod 2 and 3.
        let m = RationalMatrix::from_i64_rows(&[vec![2, 0], vec![0, 3]]);
        assert_eq!(m.rank(), 2);
        assert_eq!(rank_mod_p(&m, 5), Some(2));
        assert_eq!(rank_mod_p(&m, 3), Some(1));
        assert_eq!(rank_mod_p(&m, 2), Some(1));
    }

    #[test]
    fn denominators_divisible_by_p_are_rejected() {
        let m = RationalMatrix::from_rows(1, vec![vec![super::super::Rational::new(1, 7)]]);
        assert_eq!(rank_mod_p(&m, 7), None);
        assert_eq!(rank_mod_p(&m, 11), Some(1));
    }
}
