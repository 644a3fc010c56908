use std::fmt;

use super::Rational;

/// Dense row-major matrix of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            data: vec![Rational::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, Rational::ONE);
        }
        m
    }

    /// Builds a matrix from row vectors; `cols` is needed so that a matrix
    /// with no rows still knows its width.
    pub fn from_rows(cols: usize, rows: Vec<Vec<Rational>>) -> Self {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for row in rows {
            assert_eq!(row.len(), cols, "row length mismatch");
            data.extend(row);
        }
        Self {
            rows: n,
            cols,
            data,
        }
    }

    pub fn from_i64_rows(rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        Self::from_rows(
            cols,
            rows.iter()
                .map(|r| r.iter().map(|&x| Rational::from(x)).collect())
                .collect(),
        )
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, value: Rational) {
        self.data[r * self.cols + c] = value;
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Rational]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn entries(&self) -> &[Rational] {
        &self.data
    }

    pub fn to_rows(&self) -> Vec<Vec<Rational>> {
        self.row_iter().map(<[Rational]>::to_vec).collect()
    }

    pub fn push_row(&mut self, row: &[Rational]) {
        assert_eq!(row.len(), self.cols, "row length mismatch");
        self.data.extend_from_slice(row);
        self.rows += 1;
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// The submatrix keeping only the listed columns, in the given order.
    pub fn select_columns(&self, cols: &[usize]) -> Self {
        let mut data = Vec::with_capacity(self.rows * cols.len());
        for r in 0..self.rows {
            let row = self.row(r);
            data.extend(cols.iter().map(|&c| row[c].clone()));
        }
        Self {
            rows: self.rows,
            cols: cols.len(),
            data,
        }
    }

    pub fn mul_vec(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols);
        self.row_iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, b)| !a.is_zero() && !b.is_zero())
                    .map(|(a, b)| a * b)
                    .sum()
            })
            .collect()
    }

    /// Row-vector times matrix: `Σ_i coeffs[i] · row_i`.
    pub fn combine_rows(&self, coeffs: &[Rational]) -> Vec<Rational> {
        assert_eq!(coeffs.len(), self.rows);
        let mut out = vec![Rational::ZERO; self.cols];
        for (c, row) in coeffs.iter().zip(self.row_iter()) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                if !x.is_zero() {
                    *o += &(c * x);
                }
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        rref(self).1
    }

    /// Exact determinant by fraction-carrying elimination. Panics if not square.
    pub fn determinant(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        let mut a = self.data.clone();
        let mut det = Rational::ONE;
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !a[r * n + col].is_zero()) else {
                return Rational::ZERO;
            };
            if pivot != col {
                for k in 0..n {
                    a.swap(col * n + k, pivot * n + k);
                }
                det = -det;
            }
            let p = a[col * n + col].clone();
            det *= &p;
            for r in col + 1..n {
                if a[r * n + col].is_zero() {
                    continue;
                }
                let factor = &a[r * n + col] / &p;
                for k in col..n {
                    if a[col * n + k].is_zero() {
                        continue;
                    }
                    let sub = &factor * &a[col * n + k];
                    a[r * n + k] -= &sub;
                }
            }
        }
        det
    }
}

impl fmt::Debug for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.row_iter()).finish()
    }
}

/// Gauss-Jordan elimination in place on `data` (row-major, `rows × cols`).
/// Returns the pivot columns; rows `0..pivots.len()` hold the reduced rows.
pub(crate) fn rref_in_place(data: &mut [Rational], rows: usize, cols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut lead = 0;
    for col in 0..cols {
        if lead == rows {
            break;
        }
        let Some(pivot) = (lead..rows).find(|&r| !data[r * cols + col].is_zero()) else {
            continue;
        };
        if pivot != lead {
            for k in 0..cols {
                data.swap(lead * cols + k, pivot * cols + k);
            }
        }
        let p = data[lead * cols + col].clone();
        if !p.is_one() {
            let inv = p.recip();
            for k in col..cols {
                if !data[lead * cols + k].is_zero() {
                    data[lead * cols + k] *= &inv;
                }
            }
        }
        for r in 0..rows {
            if r == lead || data[r * cols + col].is_zero() {
                continue;
            }
            let factor = data[r * cols + col].clone();
            for k in col..cols {
                if data[lead * cols + k].is_zero() {
                    continue;
                }
                let sub = &factor * &data[lead * cols + k];
                data[r * cols + k] -= &sub;
            }
        }
        pivots.push(col);
        lead += 1;
    }
    pivots
}

/// The reduced row-echelon form with zero rows dropped, and the rank.
pub fn rref(m: &RationalMatrix) -> (RationalMatrix, usize) {
    let (reduced, pivots) = rref_with_pivots(m);
    let rank = pivots.len();
    (reduced, rank)
}

pub(crate) fn rref_with_pivots(m: &RationalMatrix) -> (RationalMatrix, Vec<usize>) {
    let mut data = m.data.clone();
    let pivots = rref_in_place(&mut data, m.rows, m.cols);
    data.truncate(pivots.len() * m.cols);
    (
        RationalMatrix {
            rows: pivots.len(),
            cols: m.cols,
            data,
        },
        pivots,
    )
}

/// Basis vectors of the right kernel read off a reduced matrix, one per free
/// column (not yet canonicalized).
pub(crate) fn kernel_vectors(reduced: &RationalMatrix, pivots: &[usize]) -> Vec<Vec<Rational>> {
    let cols = reduced.cols;
    let mut is_pivot = vec![false; cols];
    for &p in pivots {
        is_pivot[p] = true;
    }
    (0..cols)
        .filter(|&c| !is_pivot[c])
        .map(|free| {
            let mut v = vec![Rational::ZERO; cols];
            v[free] = Rational::ONE;
            for (i, &p) in pivots.iter().enumerate() {
                let x = reduced.get(i, free);
                if !x.is_zero() {
                    v[p] = -x;
                }
            }
            v
        })
        .collect()
}
