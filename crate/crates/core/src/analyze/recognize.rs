use super::{center, require_multiplicative, AnalyzeError};
use crate::build::{double_extension_1d, ExtensionData1D};
use crate::exactlin::scalar::{lex_cmp, rational_sqrt};
use crate::exactlin::{frac, rational_eigenpairs, unit_vector, Matrix, Scalar, Subspace, Vector};
use crate::homalg::{multiplicativity_witness, BilinearForm, HomAlgebra, QuadraticHomAlgebra};
use num_traits::{One, Zero};

/// A quadratic algebra written as a one-dimensional double extension: in the
/// basis `(b, v_basis, e)` it equals `double_extension_1d(base, data)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DoubleExtensionWitness {
    /// Isotropic central eigenvector of the twist.
    pub e_vec: Vector,
    /// Isotropic vector with `B(e, b) = 1`.
    pub b_vec: Vector,
    /// `(span{e, b})⊥`.
    pub v_basis: Subspace,
    pub data: ExtensionData1D,
    pub base: QuadraticHomAlgebra,
    /// Columns `b`, the basis of `v_basis`, then `e`.
    pub change_of_basis: Matrix,
}

fn isotropic_in(form: &BilinearForm, vectors: &[Vector]) -> Option<Vector> {
    if let Some(v) = vectors.iter().find(|v| form.eval(v, v).is_zero()) {
        return Some(v.clone());
    }
    for (i, u) in vectors.iter().enumerate() {
        for w in &vectors[i + 1..] {
            // B(u + c w, u + c w) = a + 2 b c + d c²
            let a = form.eval(u, u);
            let b = form.eval(u, w);
            let d = form.eval(w, w);
            let disc = &b * &b - &a * &d;
            if let Some(s) = rational_sqrt(&disc) {
                let c = (-&b + s) / &d;
                let v: Vector = u.iter().zip(w).map(|(x, y)| x + &c * y).collect();
                return Some(v);
            }
        }
    }
    None
}

fn tail(v: &[Scalar], m: usize) -> Vector {
    v[1..=m].to_vec()
}

/// Writes a multiplicative quadratic algebra with nonzero center as a
/// double extension of a quadratic algebra of dimension two less, choosing
/// the central eigenvector whose eigenvalue is least in (numerator,
/// denominator) order.
pub fn recognize_double_extension(q: &QuadraticHomAlgebra) -> Result<DoubleExtensionWitness, AnalyzeError> {
    let n = q.dim();
    let g = q.algebra();
    require_multiplicative(g)?;
    if n < 3 {
        return Err(AnalyzeError::PreconditionFailed(format!("dimension {n} is below 3")));
    }
    let z = center(g);
    if z.is_zero() {
        return Err(AnalyzeError::CenterTrivial);
    }
    let az = z
        .restrict(g.alpha())
        .ok_or_else(|| AnalyzeError::PreconditionFailed("center is not twist-invariant".into()))?;
    let mut pairs = rational_eigenpairs(&az)?;
    if pairs.is_empty() {
        return Err(AnalyzeError::NoRationalCentralEigenvector);
    }
    pairs.sort_by(|x, y| lex_cmp(&x.0, &y.0));
    let emb = z.embedding();
    let form = q.form();
    let e = pairs
        .iter()
        .find_map(|(_, space)| {
            let vecs: Vec<Vector> = space.basis().iter().map(|v| emb.mul_vec(v)).collect();
            isotropic_in(form, &vecs)
        })
        .ok_or(AnalyzeError::NoIsotropicCentralVector)?;

    let ge = form.gram().mul_vec(&e);
    let k = ge
        .iter()
        .position(|x| !x.is_zero())
        .ok_or_else(|| AnalyzeError::ReconstructionFailed("form is degenerate".into()))?;
    let scale = Scalar::one() / &ge[k];
    let b0: Vector = unit_vector(n, k).into_iter().map(|x| x * &scale).collect();
    let shift = form.eval(&b0, &b0) * frac(1, 2);
    let b: Vector = b0.iter().zip(&e).map(|(x, y)| x - &shift * y).collect();
    let v_basis = form.orthogonal(&Subspace::span(n, &[e.clone(), b.clone()]));

    let mut cols = vec![b.clone()];
    cols.extend(v_basis.basis());
    cols.push(e.clone());
    let p = Matrix::from_columns(n, &cols);
    let qq = q
        .change_basis(&p)
        .map_err(|err| AnalyzeError::ReconstructionFailed(err.to_string()))?;
    let m = n - 2;
    let h = qq.algebra();
    let a = h.alpha();
    let mut brackets = Vec::new();
    for s in 0..m {
        for t in s + 1..m {
            brackets.push((s, t, tail(h.structure(1 + s, 1 + t), m)));
        }
    }
    let inner: Vec<usize> = (1..=m).collect();
    let alpha_v = a.submatrix(&inner, &inner);
    let gram_v = qq.form().gram().submatrix(&inner, &inner);
    let delta_cols: Vec<Vector> = (0..m).map(|s| tail(h.structure(0, 1 + s), m)).collect();
    let data = ExtensionData1D {
        derivation: Matrix::from_columns(m, &delta_cols),
        offset: tail(&a.column(0), m),
        eigenvalue: a[(m + 1, m + 1)].clone(),
        e_component: a[(m + 1, 0)].clone(),
    };
    let rebuild = || -> Result<(QuadraticHomAlgebra, QuadraticHomAlgebra), String> {
        let algebra = HomAlgebra::from_brackets(m, &brackets, alpha_v).map_err(|e| e.to_string())?;
        let form_v = BilinearForm::new(gram_v).map_err(|e| e.to_string())?;
        let base = QuadraticHomAlgebra::new(algebra, form_v).map_err(|e| e.to_string())?;
        let rebuilt = double_extension_1d(&base, &data).map_err(|e| e.to_string())?;
        Ok((base, rebuilt))
    };
    let (base, rebuilt) = rebuild().map_err(AnalyzeError::ReconstructionFailed)?;
    if rebuilt.algebra() != qq.algebra() || rebuilt.form() != qq.form() {
        return Err(AnalyzeError::ReconstructionFailed("rebuilt algebra differs".into()));
    }
    Ok(DoubleExtensionWitness {
        e_vec: e,
        b_vec: b,
        v_basis,
        data,
        base,
        change_of_basis: p,
    })
}

/// Whether `α² = id` for a multiplicative quadratic algebra with invertible
/// twist and trivial center.
pub fn verify_centerless_involution(q: &QuadraticHomAlgebra) -> Result<bool, AnalyzeError> {
    let g = q.algebra();
    if let Some(p) = multiplicativity_witness(g) {
        return Err(AnalyzeError::PreconditionFailed(format!("twist is not multiplicative at {p:?}")));
    }
    if !g.alpha().is_invertible() {
        return Err(AnalyzeError::PreconditionFailed("twist is not invertible".into()));
    }
    if !center(g).is_zero() {
        return Err(AnalyzeError::PreconditionFailed("center is nonzero".into()));
    }
    Ok(g.alpha().pow(2).is_identity())
}
