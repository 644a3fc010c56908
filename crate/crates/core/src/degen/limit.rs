use super::{DegenError, LaurentSubspace};
use crate::exactla::{Rational, RationalMatrix, Subspace};

/// Largest number of maximal minors the Plücker oracle will expand.
pub const PLUCKER_BOUND: u64 = 100_000;

/// `lim_{t→0} x(t)·W`, from initial forms.
///
/// Columns are ordered by decreasing weight, so after reduction each row's
/// pivot carries the largest weight on its support. Scaling by `t^{-d}`
/// makes exactly the coordinates of that weight dominate; the leading form
/// keeps them. Distinct pivots keep the leading forms independent.
pub fn initial_space_limit(ls: &LaurentSubspace) -> Subspace {
    let n = ls.base.ambient_dim();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&j| (std::cmp::Reverse(ls.weights[j]), j));
    let permuted = Subspace::row_space(&ls.base.basis().select_columns(&order));
    let mut forms = Vec::with_capacity(permuted.dim());
    for (row, &p) in permuted.basis().row_iter().zip(permuted.pivots()) {
        let top = ls.weights[order[p]];
        let mut form = vec![Rational::ZERO; n];
        for (k, x) in row.iter().enumerate() {
            if ls.weights[order[k]] == top {
                form[order[k]] = x.clone();
            }
        }
        forms.push(form);
    }
    Subspace::span(n, forms)
}

fn binomial(n: usize, k: usize) -> u64 {
    (0..k).fold(1u64, |acc, i| {
        acc.saturating_mul((n - i) as u64) / (i as u64 + 1)
    })
}

/// Visits the `k`-subsets of `0..n` in lexicographic order.
fn for_each_subset(n: usize, k: usize, mut visit: impl FnMut(&[usize])) {
    let mut s: Vec<usize> = (0..k).collect();
    if k > n {
        return;
    }
    loop {
        visit(&s);
        let Some(i) = (0..k).rev().find(|&i| s[i] != i + n - k) else {
            return;
        };
        s[i] += 1;
        for j in i + 1..k {
            s[j] = s[j - 1] + 1;
        }
    }
}

/// The same limit through Plücker coordinates: the minor on columns `S` of
/// the scaled basis is `det(B_S)·t^{-Σ_S d}`; the limit keeps the minors of
/// least valuation, and a basis is read back off the first nonzero one.
pub fn plucker_limit_oracle(ls: &LaurentSubspace) -> Result<Subspace, DegenError> {
    let n = ls.base.ambient_dim();
    let m = ls.base.dim();
    let count = binomial(n, m);
    if count > PLUCKER_BOUND {
        return Err(DegenError::BoundExceeded {
            what: "Plücker coordinates",
            size: count,
            bound: PLUCKER_BOUND,
        });
    }
    if m == 0 {
        return Ok(Subspace::zero(n));
    }
    let basis = ls.base.basis();
    let mut minors: Vec<(Vec<usize>, Rational, i64)> = Vec::new();
    for_each_subset(n, m, |s| {
        let det = basis.select_columns(s).determinant();
        if !det.is_zero() {
            minors.push((s.to_vec(), det, s.iter().map(|&j| ls.weights[j]).sum()));
        }
    });
    // Least valuation ⇔ largest total weight.
    let best = minors
        .iter()
        .map(|(_, _, w)| *w)
        .max()
        .expect("a basis has a nonzero minor");
    let limit: std::collections::HashMap<Vec<usize>, Rational> = minors
        .into_iter()
        .filter(|(_, _, w)| *w == best)
        .map(|(s, d, _)| (s, d))
        .collect();

    let pivot = limit.keys().min().expect("nonempty").clone();
    let p0 = limit[&pivot].clone();
    // p(tuple) for an unsorted tuple, via the sign of its sorting permutation.
    let coordinate = |tuple: &[usize]| -> Rational {
        let mut t = tuple.to_vec();
        let mut sign = Rational::ONE;
        for i in 0..t.len() {
            for j in 0..t.len() - 1 - i {
                if t[j] > t[j + 1] {
                    t.swap(j, j + 1);
                    sign = -sign;
                }
            }
        }
        if t.windows(2).any(|w| w[0] == w[1]) {
            return Rational::ZERO;
        }
        limit.get(&t).map_or(Rational::ZERO, |p| &sign * p)
    };
    let mut rows = Vec::with_capacity(m);
    for i in 0..m {
        let row: Vec<Rational> = (0..n)
            .map(|j| {
                let mut tuple = pivot.clone();
                tuple[i] = j;
                &coordinate(&tuple) / &p0
            })
            .collect();
        rows.push(row);
    }
    Ok(Subspace::row_space(&RationalMatrix::from_rows(n, rows)))
}
