//! Exact rational linear algebra.
//!
//! Everything else in the crate is built on these primitives: dense matrices
//! over `Q`, canonical subspaces, linear solving, Fitting powers and rational
//! eigenspaces.

mod matrix;
mod poly;
pub mod scalar;
mod subspace;

pub use matrix::{axpy, dot, is_zero_vector, unit_vector, vec_scale, vec_sub, zero_vector, Matrix, Vector};
pub use poly::{char_poly, Poly};
pub use scalar::{format_scalar, frac, int, parse_scalar, Scalar};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("linear system has no solution")]
    NoSolution,
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
}

fn require_square(a: &Matrix) -> Result<(), LinAlgError> {
    if a.is_square() {
        Ok(())
    } else {
        Err(LinAlgError::NotSquare {
            rows: a.rows(),
            cols: a.cols(),
        })
    }
}

/// Null space `{x : a·x = 0}`.
pub fn kernel(a: &Matrix) -> Subspace {
    let n = a.cols();
    let (r, pivots) = a.rref();
    let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
    let vectors: Vec<Vector> = free
        .iter()
        .map(|&f| {
            let mut v = zero_vector(n);
            v[f] = scalar::one();
            for (row, &p) in pivots.iter().enumerate() {
                v[p] = -r[(row, f)].clone();
            }
            v
        })
        .collect();
    Subspace::span(n, &vectors)
}

/// Column space of `a`.
pub fn image(a: &Matrix) -> Subspace {
    Subspace::row_space(&a.transpose())
}

/// Some `x` with `a·x = b`, column by column.
pub fn solve_linear(a: &Matrix, b: &Matrix) -> Result<Matrix, LinAlgError> {
    if a.rows() != b.rows() {
        return Err(LinAlgError::DimensionMismatch(format!(
            "coefficient matrix has {} rows, right-hand side has {}",
            a.rows(),
            b.rows()
        )));
    }
    let n = a.cols();
    let (r, pivots) = a.hstack(b).rref();
    if pivots.iter().any(|&p| p >= n) {
        return Err(LinAlgError::NoSolution);
    }
    let mut x = Matrix::zeros(n, b.cols());
    for (row, &p) in pivots.iter().enumerate() {
        for c in 0..b.cols() {
            x[(p, c)] = r[(row, n + c)].clone();
        }
    }
    Ok(x)
}

/// Solves a single system `a·x = b` for a vector right-hand side.
pub fn solve_vector(a: &Matrix, b: &[Scalar]) -> Result<Vector, LinAlgError> {
    let rhs = Matrix::from_columns(b.len(), &[b.to_vec()]);
    Ok(solve_linear(a, &rhs)?.column(0))
}

/// Result of [`kernel_image_power`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FittingPowers {
    /// Least `n ≥ 1` with `ker aⁿ = ker aⁿ⁺¹`.
    pub stable_n: usize,
    pub kernel: Subspace,
    pub image: Subspace,
    /// `a^stable_n`.
    pub power: Matrix,
}

/// Fitting decomposition data of a square matrix.
pub fn kernel_image_power(a: &Matrix) -> Result<FittingPowers, LinAlgError> {
    require_square(a)?;
    let mut n = 1;
    let mut power = a.clone();
    let mut ker = kernel(&power);
    loop {
        let next = &power * a;
        let next_ker = kernel(&next);
        if next_ker == ker {
            break;
        }
        power = next;
        ker = next_ker;
        n += 1;
    }
    Ok(FittingPowers {
        stable_n: n,
        image: image(&power),
        kernel: ker,
        power,
    })
}

/// Rational eigenvalues of `a` (increasing) with their eigenspaces.
pub fn rational_eigenpairs(a: &Matrix) -> Result<Vec<(Scalar, Subspace)>, LinAlgError> {
    require_square(a)?;
    let n = a.rows();
    let roots = char_poly(a).rational_roots();
    Ok(roots
        .into_iter()
        .map(|lambda| {
            let shifted = a - &Matrix::scalar(n, &lambda);
            (lambda, kernel(&shifted))
        })
        .collect())
}

/// Checks `a·x == b` exactly.
pub fn verify_solution(a: &Matrix, x: &Matrix, b: &Matrix) -> bool {
    a.checked_mul(x).map(|ax| &ax == b).unwrap_or(false)
}

/// True when the square matrix is nilpotent (`a^dim = 0`).
pub fn is_nilpotent(a: &Matrix) -> bool {
    a.is_square() && a.pow(a.rows()).is_zero()
}
