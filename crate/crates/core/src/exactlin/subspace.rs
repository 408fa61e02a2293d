//! Subspaces of `Q^n` in canonical reduced row-echelon form.

use super::matrix::{is_zero_vector, unit_vector, Matrix, Vector};
use super::scalar::Scalar;
use super::LinAlgError;
use num_traits::Zero;
use std::fmt;

/// A subspace of `Q^ambient_dim`, stored as the nonzero rows of a reduced
/// row-echelon basis matrix. Two subspaces are equal iff their bases are
/// equal entry for entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Matrix,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::zeros(0, ambient_dim),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Subspace {
            ambient_dim,
            basis: Matrix::identity(ambient_dim),
        }
    }

    /// Row space of `m`.
    pub fn row_space(m: &Matrix) -> Self {
        let (r, pivots) = m.rref();
        let k = pivots.len();
        Subspace {
            ambient_dim: m.cols(),
            basis: Matrix::from_fn(k, m.cols(), |i, j| r[(i, j)].clone()),
        }
    }

    /// Span of the given vectors. Panics if a vector has the wrong length.
    pub fn span(ambient_dim: usize, vectors: &[Vector]) -> Self {
        if vectors.is_empty() {
            return Self::zero(ambient_dim);
        }
        for v in vectors {
            assert_eq!(v.len(), ambient_dim, "vector length != ambient dimension");
        }
        Self::row_space(&Matrix::from_fn(vectors.len(), ambient_dim, |r, c| {
            vectors[r][c].clone()
        }))
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(ambient_dim: usize, indices: &[usize]) -> Self {
        let vs: Vec<Vector> = indices.iter().map(|&i| unit_vector(ambient_dim, i)).collect();
        Self::span(ambient_dim, &vs)
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.rows()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient_dim
    }

    /// Canonical basis matrix (rows are basis vectors).
    pub fn basis_matrix(&self) -> &Matrix {
        &self.basis
    }

    pub fn basis(&self) -> Vec<Vector> {
        self.basis.to_rows()
    }

    /// `ambient_dim × dim` matrix whose columns are the basis vectors.
    pub fn embedding(&self) -> Matrix {
        self.basis.transpose()
    }

    fn pivots(&self) -> Vec<usize> {
        (0..self.dim())
            .map(|r| {
                (0..self.ambient_dim)
                    .find(|&c| !self.basis[(r, c)].is_zero())
                    .expect("rref rows are nonzero")
            })
            .collect()
    }

    /// Coordinates of `v` with respect to the canonical basis, or `None` when
    /// `v` is not in the subspace.
    pub fn coordinates(&self, v: &[Scalar]) -> Option<Vector> {
        assert_eq!(v.len(), self.ambient_dim);
        // In RREF the coordinate on row r is the entry of v at that row's pivot.
        let coords: Vector = self.pivots().iter().map(|&p| v[p].clone()).collect();
        let mut rebuilt = vec![Scalar::zero(); self.ambient_dim];
        for (r, c) in coords.iter().enumerate() {
            super::matrix::axpy(&mut rebuilt, c, self.basis.row(r));
        }
        (rebuilt.as_slice() == v).then_some(coords)
    }

    pub fn contains_vector(&self, v: &[Scalar]) -> bool {
        is_zero_vector(v) || self.coordinates(v).is_some()
    }

    fn check_ambient(&self, other: &Subspace) -> Result<(), LinAlgError> {
        if self.ambient_dim != other.ambient_dim {
            return Err(LinAlgError::DimensionMismatch(format!(
                "subspaces of Q^{} and Q^{}",
                self.ambient_dim, other.ambient_dim
            )));
        }
        Ok(())
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool, LinAlgError> {
        self.check_ambient(other)?;
        Ok(other.basis().iter().all(|v| self.contains_vector(v)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        Ok(Subspace::row_space(&self.basis.vstack(&other.basis)))
    }

    pub fn intersection(&self, other: &Subspace) -> Result<Subspace, LinAlgError> {
        self.check_ambient(other)?;
        let both = self.annihilator().sum(&other.annihilator())?;
        Ok(both.annihilator())
    }

    /// `{x : u·x = 0 for all u in self}` under the standard dot product.
    pub fn annihilator(&self) -> Subspace {
        super::kernel(&self.basis)
    }

    /// A coordinate complement `w` with `self ⊕ w = Q^n`: the span of the
    /// standard basis vectors at the non-pivot positions.
    pub fn complement(&self) -> Subspace {
        let pivots = self.pivots();
        let free: Vec<usize> = (0..self.ambient_dim).filter(|c| !pivots.contains(c)).collect();
        Subspace::coordinate(self.ambient_dim, &free)
    }

    /// Image of the subspace under a linear map `m` (acting on columns).
    pub fn image_under(&self, m: &Matrix) -> Subspace {
        assert_eq!(m.cols(), self.ambient_dim);
        let images: Vec<Vector> = self.basis().iter().map(|v| m.mul_vec(v)).collect();
        Subspace::span(m.rows(), &images)
    }

    pub fn is_invariant_under(&self, m: &Matrix) -> bool {
        self.basis().iter().all(|v| self.contains_vector(&m.mul_vec(v)))
    }

    /// Matrix of `m` restricted to this (m-invariant) subspace, in the
    /// canonical basis. Returns `None` when the subspace is not invariant.
    pub fn restrict(&self, m: &Matrix) -> Option<Matrix> {
        let cols: Option<Vec<Vector>> = self
            .basis()
            .iter()
            .map(|v| self.coordinates(&m.mul_vec(v)))
            .collect();
        let cols = cols?;
        Some(Matrix::from_columns(self.dim(), &cols))
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in Q^{}: {:?})", self.dim(), self.ambient_dim, self.basis)
    }
}
