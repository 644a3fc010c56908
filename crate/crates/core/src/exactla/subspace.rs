use super::matrix::{kernel_vectors, rref_in_place, rref_with_pivots};
use super::{LinAlgError, Rational, RationalMatrix};

/// A subspace of `Q^n` held by its reduced row-echelon basis.
///
/// The RREF basis of a subspace is unique, so structural equality is
/// subspace equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient_dim: usize,
    basis: RationalMatrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RationalMatrix::zeros(0, ambient_dim),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: RationalMatrix::identity(ambient_dim),
            pivots: (0..ambient_dim).collect(),
        }
    }

    /// Span of the rows of `m`.
    pub fn row_space(m: &RationalMatrix) -> Self {
        let (basis, pivots) = rref_with_pivots(m);
        Self {
            ambient_dim: m.cols(),
            basis,
            pivots,
        }
    }

    pub fn span<I, V>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = V>,
        V: AsRef<[Rational]>,
    {
        let mut m = RationalMatrix::zeros(0, ambient_dim);
        for v in vectors {
            m.push_row(v.as_ref());
        }
        Self::row_space(&m)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn basis(&self) -> &RationalMatrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    /// Membership test by reduction against the RREF basis.
    pub fn contains(&self, v: &[Rational]) -> bool {
        assert_eq!(v.len(), self.ambient_dim);
        let mut residual = v.to_vec();
        for (i, &p) in self.pivots.iter().enumerate() {
            let c = residual[p].clone();
            if c.is_zero() {
                continue;
            }
            for (r, b) in residual.iter_mut().zip(self.basis.row(i)) {
                if !b.is_zero() {
                    *r -= &(&c * b);
                }
            }
        }
        residual.iter().all(Rational::is_zero)
    }

    pub fn is_subspace_of(&self, other: &Subspace) -> bool {
        self.ambient_dim == other.ambient_dim
            && self.dim() <= other.dim()
            && self.basis.row_iter().all(|row| other.contains(row))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::DimensionMismatch {
                left: self.ambient_dim,
                right: other.ambient_dim,
            });
        }
        Ok(Self::span(
            self.ambient_dim,
            self.basis.row_iter().chain(other.basis.row_iter()),
        ))
    }

    fn check_coords(&self, coords: &[usize]) -> Result<(), LinAlgError> {
        if let Some(&bad) = coords.iter().find(|&&c| c >= self.ambient_dim) {
            return Err(LinAlgError::IndexOutOfRange {
                index: bad,
                bound: self.ambient_dim,
            });
        }
        Ok(())
    }

    /// Image under the coordinate projection onto `coords`, taken in the
    /// given order; the result lives in `Q^{coords.len()}`.
    pub fn project_image(&self, coords: &[usize]) -> Result<Subspace, LinAlgError> {
        self.check_coords(coords)?;
        Ok(Subspace::row_space(&self.basis.select_columns(coords)))
    }

    /// Dimension of [`Subspace::project_image`], without building the basis.
    pub fn projected_rank(&self, coords: &[usize]) -> Result<usize, LinAlgError> {
        self.check_coords(coords)?;
        let m = self.basis.select_columns(coords);
        let (rows, cols) = (m.rows(), m.cols());
        let mut data = m.entries().to_vec();
        Ok(rref_in_place(&mut data, rows, cols).len())
    }

    /// The vectors of `self` that vanish on every coordinate in `coords`:
    /// the kernel of the projection onto `coords`, in the original ambient space.
    pub fn kernel_of_projection(&self, coords: &[usize]) -> Result<Subspace, LinAlgError> {
        self.check_coords(coords)?;
        // Coefficient vectors c with c · basis|coords = 0.
        let restricted = self.basis.select_columns(coords).transpose();
        let (reduced, pivots) = rref_with_pivots(&restricted);
        let coeffs = kernel_vectors(&reduced, &pivots);
        Ok(Subspace::span(
            self.ambient_dim,
            coeffs.iter().map(|c| self.basis.combine_rows(c)),
        ))
    }
}

/// Right kernel `{x : m x = 0}` as a canonical subspace of `Q^{cols}`.
pub fn kernel(m: &RationalMatrix) -> Subspace {
    let (reduced, pivots) = rref_with_pivots(m);
    let vectors = kernel_vectors(&reduced, &pivots);
    Subspace::span(m.cols(), vectors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(rows: &[Vec<i64>]) -> RationalMatrix {
        RationalMatrix::from_i64_rows(rows)
    }

    #[test]
    fn kernel_of_zero_matrix_is_everything() {
        let k = kernel(&RationalMatrix::zeros(2, 5));
        assert_eq!(k, Subspace::full(5));
    }

    #[test]
    fn kernel_of_full_rank_square_is_zero() {
        let k = kernel(&q(&[vec![2, 1], vec![1, 1]]));
        assert_eq!(k, Subspace::zero(2));
    }

    #[test]
    fn kernel_vectors_are_annihilated() {
        let m = q(&[vec![1, 1, 0, 2], vec![0, 1, -1, 1]]);
        let k = kernel(&m);
        assert_eq!(k.dim(), 2);
        for row in k.basis().row_iter() {
            assert!(m.mul_vec(row).iter().all(Rational::is_zero));
        }
    }

    #[test]
    fn projection_extremes() {
        let w = Subspace::row_space(&q(&[vec![1, 0, 2], vec![0, 1, 1]]));
        assert_eq!(w.project_image(&[0, 1, 2]).unwrap(), w);
        assert_eq!(w.project_image(&[]).unwrap().dim(), 0);
        assert_eq!(
            w.kernel_of_projection(&[0, 1, 2]).unwrap(),
            Subspace::zero(3)
        );
        assert_eq!(w.kernel_of_projection(&[]).unwrap(), w);
        assert!(w.project_image(&[3]).is_err());
    }

    #[test]
    fn kernel_of_projection_example() {
        // span{(1,1,0), (0,0,1)}: the vectors vanishing on coordinate 0 are span{(0,0,1)}.
        let w = Subspace::row_space(&q(&[vec![1, 1, 0], vec![0, 0, 1]]));
        let k = w.kernel_of_projection(&[0]).unwrap();
        assert_eq!(k, Subspace::row_space(&q(&[vec![0, 0, 1]])));
        assert_eq!(w.project_image(&[0]).unwrap().dim(), 1);
    }

    fn small_matrix() -> impl Strategy<Value = RationalMatrix> {
        (1usize..5, 1usize..6).prop_flat_map(|(r, c)| {
            proptest::collection::vec(-2i64..=2, r * c).prop_map(move |xs| {
                RationalMatrix::from_rows(
                    c,
                    xs.chunks(c)
                        .map(|ch| ch.iter().map(|&x| x.into()).collect())
                        .collect(),
                )
            })
        })
    }

    proptest! {
        #[test]
        fn rref_is_idempotent(m in small_matrix()) {
            let (r1, rank1) = super::super::rref(&m);
            let (r2, rank2) = super::super::rref(&r1);
            prop_assert_eq!(rank1, rank2);
            prop_assert_eq!(r1, r2);
        }

        #[test]
        fn rank_nullity_for_projections(m in small_matrix(), mask in 0u32..64) {
            let w = Subspace::row_space(&m);
            let coords: Vec<usize> = (0..m.cols()).filter(|c| mask >> c & 1 == 1).collect();
            let image = w.project_image(&coords).unwrap();
            let kernel = w.kernel_of_projection(&coords).unwrap();
            prop_assert_eq!(image.dim() + kernel.dim(), w.dim());
            prop_assert_eq!(w.projected_rank(&coords).unwrap(), image.dim());
            prop_assert!(kernel.is_subspace_of(&w));
        }

        #[test]
        fn kernel_dimension_is_cols_minus_rank(m in small_matrix()) {
            let k = kernel(&m);
            prop_assert_eq!(k.dim() + m.rank(), m.cols());
        }

        #[test]
        fn subspace_equality_is_span_equality(m in small_matrix()) {
            let w = Subspace::row_space(&m);
            // Re-spanning by a shuffled, rescaled basis gives the same canonical form.
            let mut rows = w.basis().to_rows();
            rows.reverse();
            for row in &mut rows {
                for x in row.iter_mut() {
                    *x = &*x * &Rational::from(-3);
                }
            }
            prop_assert_eq!(Subspace::span(m.cols(), &rows), w);
        }
    }
}
