use super::algebra::HomAlgebra;
use super::checks::{check_quadratic, QuadraticReport};
use super::HomAlgError;
use crate::exactlin::{dot, kernel, Matrix, Scalar, Subspace};
use std::fmt;

/// A symmetric bilinear form on `K^n`, given by its Gram matrix.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BilinearForm {
    gram: Matrix,
}

impl BilinearForm {
    pub fn new(gram: Matrix) -> Result<Self, HomAlgError> {
        if !gram.is_square() {
            return Err(HomAlgError::DimensionMismatch("Gram matrix is not square".into()));
        }
        if !gram.is_symmetric() {
            return Err(HomAlgError::NotSymmetric);
        }
        Ok(BilinearForm { gram })
    }

    pub fn zero(n: usize) -> Self {
        BilinearForm { gram: Matrix::zeros(n, n) }
    }

    pub fn identity(n: usize) -> Self {
        BilinearForm { gram: Matrix::identity(n) }
    }

    /// The hyperbolic form pairing `K^n` with its dual on `K^n ⊕ K^n`.
    pub fn hyperbolic(n: usize) -> Self {
        let i = Matrix::identity(n);
        let z = Matrix::zeros(n, n);
        BilinearForm {
            gram: z.hstack(&i).vstack(&i.hstack(&z)),
        }
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn gram(&self) -> &Matrix {
        &self.gram
    }

    pub fn eval(&self, x: &[Scalar], y: &[Scalar]) -> Scalar {
        dot(x, &self.gram.mul_vec(y))
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.gram.is_invertible()
    }

    /// Whether `B(f x, y) = B(x, f y)`.
    pub fn is_symmetric_map(&self, f: &Matrix) -> bool {
        &self.gram * f == &f.transpose() * &self.gram
    }

    /// Whether `B(f x, y) = −B(x, f y)`.
    pub fn is_skew_map(&self, f: &Matrix) -> bool {
        &self.gram * f == -&(&f.transpose() * &self.gram)
    }

    /// `{x : B(x, s) = 0 for all s in sub}`.
    pub fn orthogonal(&self, sub: &Subspace) -> Subspace {
        kernel(&(sub.basis_matrix() * &self.gram))
    }

    /// Gram matrix of the restriction to `sub` in its canonical basis.
    pub fn restrict(&self, sub: &Subspace) -> BilinearForm {
        let e = sub.embedding();
        BilinearForm {
            gram: &(&e.transpose() * &self.gram) * &e,
        }
    }

    pub fn is_nondegenerate_on(&self, sub: &Subspace) -> bool {
        self.restrict(sub).is_nondegenerate()
    }

    /// The form `(x, y) ↦ B(f x, y)`; fails unless the result is symmetric.
    pub fn twisted_by(&self, f: &Matrix) -> Result<BilinearForm, HomAlgError> {
        BilinearForm::new(&f.transpose() * &self.gram)
    }

    /// The same form in the basis given by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> BilinearForm {
        BilinearForm {
            gram: &(&p.transpose() * &self.gram) * p,
        }
    }

    pub fn orthogonal_sum(&self, other: &BilinearForm) -> BilinearForm {
        BilinearForm {
            gram: Matrix::block_diag(&[&self.gram, &other.gram]),
        }
    }

    pub fn scale(&self, c: &Scalar) -> BilinearForm {
        BilinearForm { gram: self.gram.scale(c) }
    }
}

impl fmt::Debug for BilinearForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BilinearForm({:?})", self.gram)
    }
}

/// A Hom-Lie algebra with a validated invariant, nondegenerate,
/// α-symmetric form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticHomAlgebra {
    algebra: HomAlgebra,
    form: BilinearForm,
}

impl QuadraticHomAlgebra {
    pub fn new(algebra: HomAlgebra, form: BilinearForm) -> Result<Self, HomAlgError> {
        let report = check_quadratic(&algebra, &form)?;
        if !report.passed() {
            return Err(HomAlgError::NotQuadratic(Box::new(report)));
        }
        Ok(QuadraticHomAlgebra { algebra, form })
    }

    pub fn algebra(&self) -> &HomAlgebra {
        &self.algebra
    }

    pub fn form(&self) -> &BilinearForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.algebra.dim()
    }

    pub fn alpha(&self) -> &Matrix {
        self.algebra.alpha()
    }

    pub fn into_parts(self) -> (HomAlgebra, BilinearForm) {
        (self.algebra, self.form)
    }

    /// Rechecks the quadratic axioms (useful after external edits).
    pub fn report(&self) -> QuadraticReport {
        check_quadratic(&self.algebra, &self.form).expect("dimensions agree by construction")
    }

    pub fn change_basis(&self, p: &Matrix) -> Result<Self, HomAlgError> {
        Ok(QuadraticHomAlgebra {
            algebra: self.algebra.change_basis(p)?,
            form: self.form.change_basis(p),
        })
    }

    pub fn orthogonal_sum(&self, other: &QuadraticHomAlgebra) -> Self {
        QuadraticHomAlgebra {
            algebra: self.algebra.direct_sum(&other.algebra),
            form: self.form.orthogonal_sum(&other.form),
        }
    }

    /// The nondegenerate ideal `sub` as a quadratic algebra in its own right.
    pub fn restrict(&self, sub: &Subspace) -> Option<Self> {
        let algebra = self.algebra.restrict(sub)?;
        QuadraticHomAlgebra::new(algebra, self.form.restrict(sub)).ok()
    }
}

impl fmt::Debug for QuadraticHomAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("QuadraticHomAlgebra")
            .field("algebra", &self.algebra)
            .field("form", &self.form)
            .finish()
    }
}
