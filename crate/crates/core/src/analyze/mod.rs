//! Structural analysis: centers, centroids, ideals, decompositions,
//! simplicity, solvability, trace forms and recognition of double
//! extensions.

mod decompose;
mod recognize;
mod simple;

pub use decompose::{decompose_irreducible, decompose_with_subspaces, fitting_decomposition, FittingSplit};
pub use recognize::{recognize_double_extension, verify_centerless_involution, DoubleExtensionWitness};
pub use simple::{simplicity_verdict, SimplicityVerdict, SIMPLICITY_SEED};

use crate::build::BuildError;
use crate::exactlin::{is_nilpotent, kernel, LinAlgError, Matrix, Scalar, Subspace, Vector};
use crate::homalg::{multiplicativity_witness, BilinearForm, HomAlgError, HomAlgebra, QuadraticHomAlgebra};
use num_traits::Zero;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalyzeError {
    #[error("subspace is not an ideal")]
    NotAnIdeal,
    #[error("twist is not multiplicative at {0:?}")]
    NotMultiplicative((usize, usize)),
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("twist is not an involution")]
    NotInvolutive,
    #[error("center is trivial")]
    CenterTrivial,
    #[error("twist has no rational eigenvector in the center")]
    NoRationalCentralEigenvector,
    #[error("no isotropic rational central eigenvector")]
    NoIsotropicCentralVector,
    #[error("reconstruction failed: {0}")]
    ReconstructionFailed(String),
    #[error("precondition failed: {0}")]
    PreconditionFailed(String),
    #[error("result failed verification: {0}")]
    VerificationFailed(String),
    #[error(transparent)]
    HomAlg(#[from] HomAlgError),
    #[error(transparent)]
    LinAlg(#[from] LinAlgError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

pub(crate) fn require_multiplicative(g: &HomAlgebra) -> Result<(), AnalyzeError> {
    match multiplicativity_witness(g) {
        Some(p) => Err(AnalyzeError::NotMultiplicative(p)),
        None => Ok(()),
    }
}

/// `{x : [x, y] = 0 for all y}`.
pub fn center(g: &HomAlgebra) -> Subspace {
    let n = g.dim();
    // Row (j, k), column i holds the k-th coordinate of [x_i, x_j].
    let m = Matrix::from_fn(n * n, n, |r, i| g.structure(i, r / n)[r % n].clone());
    kernel(&m)
}

/// The centroid `{θ : θ[x, y] = [θ x, y]}` as a subspace of the `n²`-dimensional
/// space of matrices flattened row by row (`θ[r][c]` at index `r·n + c`).
pub fn centroid(g: &HomAlgebra) -> Subspace {
    let n = g.dim();
    let nn = n * n;
    let mut rows: Vec<Vector> = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let c = g.structure(i, j);
            for k in 0..n {
                let mut row = vec![Scalar::zero(); nn];
                for (r, crk) in c.iter().enumerate() {
                    if !crk.is_zero() {
                        row[k * n + r] += crk;
                    }
                }
                for r in 0..n {
                    let crj = &g.structure(r, j)[k];
                    if !crj.is_zero() {
                        row[r * n + i] -= crj;
                    }
                }
                if row.iter().any(|x| !x.is_zero()) {
                    rows.push(row);
                }
            }
        }
    }
    if rows.is_empty() {
        return Subspace::full(nn);
    }
    kernel(&Matrix::from_rows(rows).expect("rows have equal length"))
}

/// A centroid basis as matrices.
pub fn centroid_matrices(g: &HomAlgebra) -> Vec<Matrix> {
    let n = g.dim();
    centroid(g)
        .basis()
        .into_iter()
        .map(|v| Matrix::from_fn(n, n, |r, c| v[r * n + c].clone()))
        .collect()
}

/// Smallest subspace containing `seed` and invariant under every matrix in
/// `gens`.
pub(crate) fn spin(gens: &[Matrix], seed: &Subspace) -> Subspace {
    let n = seed.ambient_dim();
    let mut cur = seed.clone();
    loop {
        if cur.is_full() {
            return cur;
        }
        let basis = cur.basis();
        let mut vecs = basis.clone();
        for v in &basis {
            for m in gens {
                vecs.push(m.mul_vec(v));
            }
        }
        let next = Subspace::span(n, &vecs);
        if next.dim() == cur.dim() {
            return cur;
        }
        cur = next;
    }
}

/// The adjoint matrices together with the twist.
pub(crate) fn ideal_generators(g: &HomAlgebra) -> Vec<Matrix> {
    let mut gens: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i)).collect();
    gens.push(g.alpha().clone());
    gens
}

/// Smallest ideal containing `seed`: closed under every `ad(x_i)` and `α`.
pub fn ideal_closure(g: &HomAlgebra, seed: &Subspace) -> Subspace {
    spin(&ideal_generators(g), seed)
}

pub fn is_ideal(g: &HomAlgebra, s: &Subspace) -> bool {
    &ideal_closure(g, s) == s
}

/// `I⊥` for an ideal `I` of a quadratic algebra.
pub fn orthogonal_ideal(q: &QuadraticHomAlgebra, i: &Subspace) -> Result<Subspace, AnalyzeError> {
    let g = q.algebra();
    if !is_ideal(g, i) {
        return Err(AnalyzeError::NotAnIdeal);
    }
    let perp = q.form().orthogonal(i);
    if !is_ideal(g, &perp) {
        return Err(AnalyzeError::VerificationFailed("orthogonal is not an ideal".into()));
    }
    if perp.dim() + i.dim() != q.dim() {
        return Err(AnalyzeError::VerificationFailed("orthogonal has the wrong dimension".into()));
    }
    Ok(perp)
}

fn bracket_span(g: &HomAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    let mut vecs = Vec::new();
    for u in a.basis() {
        for v in b.basis() {
            vecs.push(g.bracket(&u, &v));
        }
    }
    Subspace::span(g.dim(), &vecs)
}

/// `span [a, b]` for two subspaces.
pub fn bracket_of_subspaces(g: &HomAlgebra, a: &Subspace, b: &Subspace) -> Subspace {
    bracket_span(g, a, b)
}

/// Whether the derived series of `i` (default: all of `g`) reaches zero.
pub fn is_solvable(g: &HomAlgebra, i: Option<&Subspace>) -> Result<bool, AnalyzeError> {
    let n = g.dim();
    let mut cur = match i {
        Some(s) => {
            if s.ambient_dim() != n {
                return Err(HomAlgError::DimensionMismatch("subspace has the wrong ambient dimension".into()).into());
            }
            if !s.contains(&bracket_span(g, s, s))? {
                return Err(AnalyzeError::NotSubalgebra);
            }
            s.clone()
        }
        None => Subspace::full(n),
    };
    for _ in 0..=n {
        if cur.is_zero() {
            return Ok(true);
        }
        let next = bracket_span(g, &cur, &cur);
        if next == cur {
            return Ok(false);
        }
        cur = next;
    }
    Ok(cur.is_zero())
}

/// `B(x, y) = tr(ad x ∘ ad y)`; the Killing form when the bracket is Lie.
pub fn trace_form(g: &HomAlgebra) -> BilinearForm {
    let ads: Vec<Matrix> = (0..g.dim()).map(|i| g.ad(i)).collect();
    let gram = Matrix::from_fn(g.dim(), g.dim(), |i, j| (&ads[i] * &ads[j]).trace());
    BilinearForm::new(gram).expect("trace form is symmetric")
}

/// The Lie algebra `(g, [θ x, θ y])` of an involutive multiplicative algebra.
pub fn associated_lie(g: &HomAlgebra) -> Result<HomAlgebra, AnalyzeError> {
    if !g.alpha().pow(2).is_identity() {
        return Err(AnalyzeError::NotInvolutive);
    }
    require_multiplicative(g)?;
    let theta = g.alpha();
    Ok(g.precompose_bracket(theta, theta).with_alpha(Matrix::identity(g.dim()))?)
}

/// Solvable radical of an involutive multiplicative algebra, computed as the
/// Killing-orthogonal of the derived ideal of the associated Lie algebra.
pub fn radical_involutive(g: &HomAlgebra) -> Result<Subspace, AnalyzeError> {
    let lie = associated_lie(g)?;
    let killing = trace_form(&lie);
    let rad = killing.orthogonal(&lie.derived_ideal());
    if !rad.is_invariant_under(g.alpha()) {
        return Err(AnalyzeError::VerificationFailed("radical is not twist-invariant".into()));
    }
    if !is_ideal(g, &rad) {
        return Err(AnalyzeError::VerificationFailed("radical is not an ideal".into()));
    }
    if !is_solvable(g, Some(&rad))? {
        return Err(AnalyzeError::VerificationFailed("radical is not solvable".into()));
    }
    Ok(rad)
}

/// Whether `α` restricted to the invariant subspace `s` is nilpotent.
pub(crate) fn nilpotent_on(alpha: &Matrix, s: &Subspace) -> bool {
    match s.restrict(alpha) {
        Some(m) => s.is_zero() || is_nilpotent(&m),
        None => false,
    }
}

/// Whether `α` restricted to the invariant subspace `s` is invertible.
pub(crate) fn invertible_on(alpha: &Matrix, s: &Subspace) -> bool {
    match s.restrict(alpha) {
        Some(m) => s.is_zero() || m.is_invertible(),
        None => false,
    }
}

#[cfg(test)]
mod tests;
