use super::HomAlgError;
use crate::exactlin::{Matrix, Scalar};
use num_traits::Zero;

/// `(V, ρ, β)`: one action matrix per basis vector of the algebra and a
/// twist on the module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Representation {
    rho: Vec<Matrix>,
    beta: Matrix,
}

impl Representation {
    pub fn new(rho: Vec<Matrix>, beta: Matrix) -> Result<Self, HomAlgError> {
        let m = beta.rows();
        if !beta.is_square() {
            return Err(HomAlgError::DimensionMismatch("beta is not square".into()));
        }
        if let Some(i) = rho.iter().position(|r| r.rows() != m || r.cols() != m) {
            return Err(HomAlgError::DimensionMismatch(format!(
                "action matrix {i} is not {m}x{m}"
            )));
        }
        Ok(Representation { rho, beta })
    }

    /// The zero action of an `n`-dimensional algebra.
    pub fn zero(algebra_dim: usize, beta: Matrix) -> Result<Self, HomAlgError> {
        let m = beta.rows();
        Representation::new(vec![Matrix::zeros(m, m); algebra_dim], beta)
    }

    pub fn algebra_dim(&self) -> usize {
        self.rho.len()
    }

    pub fn module_dim(&self) -> usize {
        self.beta.rows()
    }

    pub fn rho(&self, i: usize) -> &Matrix {
        &self.rho[i]
    }

    pub fn rhos(&self) -> &[Matrix] {
        &self.rho
    }

    pub fn beta(&self) -> &Matrix {
        &self.beta
    }

    /// `ρ(x) = Σ x_i ρ(x_i)`.
    pub fn rho_of(&self, x: &[Scalar]) -> Matrix {
        let m = self.module_dim();
        let mut acc = Matrix::zeros(m, m);
        for (c, r) in x.iter().zip(&self.rho) {
            if !c.is_zero() {
                acc = &acc + &r.scale(c);
            }
        }
        acc
    }
}
