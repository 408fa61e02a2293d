//! Axiom and condition checks. Every check runs over basis tuples in
//! lexicographic order and reports the first violation it finds.

use super::algebra::{AssocAlgebra, HomAlgebra};
use super::form::BilinearForm;
use super::rep::Representation;
use super::HomAlgError;
use crate::exactlin::{axpy, dot, is_nilpotent, is_zero_vector, unit_vector, zero_vector, Matrix, Vector};

/// A failing triple together with the nonzero value it produced.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JacobiWitness {
    pub triple: (usize, usize, usize),
    pub residual: Vector,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HomLieReport {
    pub skew: bool,
    pub hom_jacobi: bool,
    pub skew_witness: Option<(usize, usize)>,
    pub jacobi_witness: Option<JacobiWitness>,
}

impl HomLieReport {
    pub fn passed(&self) -> bool {
        self.skew && self.hom_jacobi
    }
}

fn check_index(g: &HomAlgebra, idx: usize) -> Result<(), HomAlgError> {
    if idx >= g.dim() {
        Err(HomAlgError::IndexOutOfRange { index: idx, dim: g.dim() })
    } else {
        Ok(())
    }
}

/// `Σ_cyclic [t x_i, [x_j, x_k]]` for a twist `t`.
fn twisted_jacobiator(g: &HomAlgebra, t: &Matrix, i: usize, j: usize, k: usize) -> Vector {
    let n = g.dim();
    let mut out = zero_vector(n);
    for (a, b, c) in [(i, j, k), (j, k, i), (k, i, j)] {
        let term = g.bracket(&t.column(a), g.structure(b, c));
        axpy(&mut out, &crate::exactlin::scalar::one(), &term);
    }
    out
}

fn first_jacobi_failure(g: &HomAlgebra, t: &Matrix) -> Option<JacobiWitness> {
    let n = g.dim();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let r = twisted_jacobiator(g, t, i, j, k);
                if !is_zero_vector(&r) {
                    return Some(JacobiWitness { triple: (i, j, k), residual: r });
                }
            }
        }
    }
    None
}

/// Coefficients of `[α x_i, [x_j, x_k]] + [α x_j, [x_k, x_i]] + [α x_k, [x_i, x_j]]`.
pub fn jacobiator(g: &HomAlgebra, i: usize, j: usize, k: usize) -> Result<Vector, HomAlgError> {
    for idx in [i, j, k] {
        check_index(g, idx)?;
    }
    Ok(twisted_jacobiator(g, g.alpha(), i, j, k))
}

/// The classical Jacobiator (twist replaced by the identity).
pub fn classical_jacobiator(g: &HomAlgebra, i: usize, j: usize, k: usize) -> Result<Vector, HomAlgError> {
    for idx in [i, j, k] {
        check_index(g, idx)?;
    }
    Ok(twisted_jacobiator(g, &Matrix::identity(g.dim()), i, j, k))
}

pub fn check_hom_lie(g: &HomAlgebra) -> HomLieReport {
    let n = g.dim();
    let mut skew_witness = None;
    'outer: for i in 0..n {
        for j in i..n {
            let sum: Vector = g.structure(i, j).iter().zip(g.structure(j, i)).map(|(a, b)| a + b).collect();
            if !is_zero_vector(&sum) {
                skew_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    // Cyclic sums over triples with a repeated index vanish by skew-symmetry,
    // so strictly increasing triples suffice.
    let jacobi_witness = first_jacobi_failure(g, g.alpha());
    HomLieReport {
        skew: skew_witness.is_none(),
        hom_jacobi: jacobi_witness.is_none(),
        skew_witness,
        jacobi_witness,
    }
}

/// First triple violating the ordinary Jacobi identity, ignoring α.
pub fn classical_jacobi_witness(g: &HomAlgebra) -> Option<JacobiWitness> {
    first_jacobi_failure(g, &Matrix::identity(g.dim()))
}

/// Whether the bracket alone satisfies the Jacobi identity.
pub fn is_lie_bracket(g: &HomAlgebra) -> bool {
    classical_jacobi_witness(g).is_none()
}

/// First pair with `α[x_i, x_j] ≠ [α x_i, α x_j]`.
pub fn multiplicativity_witness(g: &HomAlgebra) -> Option<(usize, usize)> {
    endomorphism_witness(g, g.alpha())
}

/// First pair with `f[x_i, x_j] ≠ [f x_i, f x_j]`.
pub fn endomorphism_witness(g: &HomAlgebra, f: &Matrix) -> Option<(usize, usize)> {
    let n = g.dim();
    let cols = f.columns();
    for i in 0..n {
        for j in i + 1..n {
            if f.mul_vec(g.structure(i, j)) != g.bracket(&cols[i], &cols[j]) {
                return Some((i, j));
            }
        }
    }
    None
}

pub fn is_multiplicative(g: &HomAlgebra) -> bool {
    multiplicativity_witness(g).is_none()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum AlphaTag {
    General,
    Multiplicative,
    Regular,
    Involutive,
    Nilpotent,
}

impl AlphaTag {
    pub fn name(self) -> &'static str {
        match self {
            AlphaTag::General => "general",
            AlphaTag::Multiplicative => "multiplicative",
            AlphaTag::Regular => "regular",
            AlphaTag::Involutive => "involutive",
            AlphaTag::Nilpotent => "nilpotent",
        }
    }
}

/// Properties of the twist map. `regular` means invertible and
/// multiplicative; the tag is the most specific class that applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct AlphaClass {
    pub tag: AlphaTag,
    pub multiplicative: bool,
    pub invertible: bool,
    pub regular: bool,
    pub involutive: bool,
    pub nilpotent: bool,
}

pub fn classify_alpha(g: &HomAlgebra) -> AlphaClass {
    let a = g.alpha();
    let multiplicative = is_multiplicative(g);
    let invertible = a.is_invertible();
    let involutive = a.pow(2).is_identity();
    let nilpotent = is_nilpotent(a);
    let regular = invertible && multiplicative;
    let tag = if !multiplicative {
        AlphaTag::General
    } else if involutive {
        AlphaTag::Involutive
    } else if regular {
        AlphaTag::Regular
    } else if nilpotent {
        AlphaTag::Nilpotent
    } else {
        AlphaTag::Multiplicative
    };
    AlphaClass {
        tag,
        multiplicative,
        invertible,
        regular,
        involutive,
        nilpotent,
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct QuadraticReport {
    pub symmetric: bool,
    pub nondegenerate: bool,
    pub invariant: bool,
    pub alpha_symmetric: bool,
    /// First `(i, j, k)` with `B([x_i, x_j], x_k) ≠ B(x_i, [x_j, x_k])`.
    pub invariance_witness: Option<(usize, usize, usize)>,
    /// First `(i, j)` with `B(α x_i, x_j) ≠ B(x_i, α x_j)`.
    pub alpha_symmetry_witness: Option<(usize, usize)>,
}

impl QuadraticReport {
    pub fn passed(&self) -> bool {
        self.symmetric && self.nondegenerate && self.invariant && self.alpha_symmetric
    }
}

fn same_dim(g: &HomAlgebra, b: &BilinearForm) -> Result<(), HomAlgError> {
    if g.dim() != b.dim() {
        return Err(HomAlgError::DimensionMismatch(format!(
            "algebra has dimension {}, form has dimension {}",
            g.dim(),
            b.dim()
        )));
    }
    Ok(())
}

pub fn check_quadratic(g: &HomAlgebra, b: &BilinearForm) -> Result<QuadraticReport, HomAlgError> {
    same_dim(g, b)?;
    let n = g.dim();
    let gram = b.gram();
    // gb[i][j] = row of values B([x_i, x_j], x_k) over k.
    let gb: Vec<Vec<Vector>> = (0..n)
        .map(|i| (0..n).map(|j| gram.mul_vec(g.structure(i, j))).collect())
        .collect();
    let mut invariance_witness = None;
    'outer: for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                if gb[i][j][k] != gb[j][k][i] {
                    invariance_witness = Some((i, j, k));
                    break 'outer;
                }
            }
        }
    }
    let ga = gram * g.alpha();
    let mut alpha_symmetry_witness = None;
    'outer2: for i in 0..n {
        for j in 0..n {
            if ga[(j, i)] != ga[(i, j)] {
                alpha_symmetry_witness = Some((i, j));
                break 'outer2;
            }
        }
    }
    Ok(QuadraticReport {
        symmetric: gram.is_symmetric(),
        nondegenerate: b.is_nondegenerate(),
        invariant: invariance_witness.is_none(),
        alpha_symmetric: alpha_symmetry_witness.is_none(),
        invariance_witness,
        alpha_symmetry_witness,
    })
}

/// First triple violating `B([x, y], γ z) = −B(γ y, [x, z])`.
pub fn hom_quadratic_witness(
    g: &HomAlgebra,
    b: &BilinearForm,
    gamma: &Matrix,
) -> Result<Option<(usize, usize, usize)>, HomAlgError> {
    same_dim(g, b)?;
    let n = g.dim();
    if gamma.rows() != n || gamma.cols() != n {
        return Err(HomAlgError::DimensionMismatch("gamma has the wrong size".into()));
    }
    let g_gamma = b.gram() * gamma;
    let cols = g_gamma.columns();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = dot(g.structure(i, j), &cols[k]);
                let rhs = -dot(&cols[j], g.structure(i, k));
                if lhs != rhs {
                    return Ok(Some((i, j, k)));
                }
            }
        }
    }
    Ok(None)
}

pub fn check_hom_quadratic(g: &HomAlgebra, b: &BilinearForm, gamma: &Matrix) -> Result<bool, HomAlgError> {
    Ok(hom_quadratic_witness(g, b, gamma)?.is_none())
}

/// First pair violating `ρ([x, y]) β = ρ(α x) ρ(y) − ρ(α y) ρ(x)`.
pub fn representation_witness(g: &HomAlgebra, r: &Representation) -> Result<Option<(usize, usize)>, HomAlgError> {
    if r.algebra_dim() != g.dim() {
        return Err(HomAlgError::DimensionMismatch(format!(
            "representation of a {}-dimensional algebra used with a {}-dimensional one",
            r.algebra_dim(),
            g.dim()
        )));
    }
    let n = g.dim();
    let alpha_cols = g.alpha().columns();
    let rho_alpha: Vec<Matrix> = alpha_cols.iter().map(|c| r.rho_of(c)).collect();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = &r.rho_of(g.structure(i, j)) * r.beta();
            let rhs = &(&rho_alpha[i] * r.rho(j)) - &(&rho_alpha[j] * r.rho(i));
            if lhs != rhs {
                return Ok(Some((i, j)));
            }
        }
    }
    Ok(None)
}

pub fn check_representation(g: &HomAlgebra, r: &Representation) -> Result<bool, HomAlgError> {
    Ok(representation_witness(g, r)?.is_none())
}

/// First triple violating `α([[x, y], z]) = [x, [α y, z]] − [y, [α x, z]]`.
pub fn coadjoint_witness(g: &HomAlgebra) -> Option<(usize, usize, usize)> {
    let n = g.dim();
    let alpha = g.alpha();
    let cols = alpha.columns();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = alpha.mul_vec(&g.bracket(g.structure(i, j), &unit_vector(n, k)));
                let a = g.bracket(&unit_vector(n, i), &g.bracket(&cols[j], &unit_vector(n, k)));
                let b = g.bracket(&unit_vector(n, j), &g.bracket(&cols[i], &unit_vector(n, k)));
                let rhs: Vector = a.iter().zip(&b).map(|(p, q)| p - q).collect();
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn check_coadjoint_condition(g: &HomAlgebra) -> bool {
    coadjoint_witness(g).is_none()
}

/// First triple violating `μ(α x, μ(y, z)) = μ(μ(x, y), α z)`.
pub fn hom_associativity_witness(a: &AssocAlgebra) -> Option<(usize, usize, usize)> {
    let n = a.dim();
    let cols = a.alpha().columns();
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let lhs = a.product(&cols[i], a.structure(j, k));
                let rhs = a.product(a.structure(i, j), &cols[k]);
                if lhs != rhs {
                    return Some((i, j, k));
                }
            }
        }
    }
    None
}

pub fn check_hom_associative(a: &AssocAlgebra) -> bool {
    hom_associativity_witness(a).is_none()
}

/// The commutator algebra `[x, y] = μ(x, y) − μ(y, x)` with the same twist.
pub fn commutator_hom_lie(a: &AssocAlgebra) -> Result<HomAlgebra, HomAlgError> {
    if let Some(triple) = hom_associativity_witness(a) {
        return Err(HomAlgError::NotHomAssociative { triple });
    }
    let n = a.dim();
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let v: Vector = a.structure(i, j).iter().zip(a.structure(j, i)).map(|(p, q)| p - q).collect();
            if !is_zero_vector(&v) {
                brackets.push((i, j, v));
            }
        }
    }
    HomAlgebra::from_brackets(n, &brackets, a.alpha().clone())
}

/// Why a linear map fails to be a morphism of Hom-Lie algebras.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MorphismWitness {
    /// `f[x_i, x_j] ≠ [f x_i, f x_j]'`.
    Bracket(usize, usize),
    /// `f α x_i ≠ α' f x_i`.
    Twist(usize),
}

pub fn morphism_witness(g: &HomAlgebra, h: &HomAlgebra, f: &Matrix) -> Result<Option<MorphismWitness>, HomAlgError> {
    if f.cols() != g.dim() || f.rows() != h.dim() {
        return Err(HomAlgError::DimensionMismatch(format!(
            "map is {}x{}, expected {}x{}",
            f.rows(),
            f.cols(),
            h.dim(),
            g.dim()
        )));
    }
    let n = g.dim();
    let cols = f.columns();
    for i in 0..n {
        for j in i + 1..n {
            if f.mul_vec(g.structure(i, j)) != h.bracket(&cols[i], &cols[j]) {
                return Ok(Some(MorphismWitness::Bracket(i, j)));
            }
        }
    }
    let left = f * g.alpha();
    let right = h.alpha() * f;
    for i in 0..n {
        if left.column(i) != right.column(i) {
            return Ok(Some(MorphismWitness::Twist(i)));
        }
    }
    Ok(None)
}

pub fn check_morphism(g: &HomAlgebra, h: &HomAlgebra, f: &Matrix) -> Result<bool, HomAlgError> {
    Ok(morphism_witness(g, h, f)?.is_none())
}

/// Whether the invertible map `phi: V → V'` satisfies
/// `ρ'(x_i) φ = φ ρ(x_i)` for all `i` and `φ β = β' φ`.
pub fn check_representation_isomorphism(
    r: &Representation,
    r2: &Representation,
    phi: &Matrix,
) -> Result<bool, HomAlgError> {
    if r.algebra_dim() != r2.algebra_dim() || phi.cols() != r.module_dim() || phi.rows() != r2.module_dim() {
        return Err(HomAlgError::DimensionMismatch("representations and map do not fit together".into()));
    }
    if !phi.is_invertible() {
        return Ok(false);
    }
    let intertwines = (0..r.algebra_dim()).all(|i| r2.rho(i) * phi == phi * r.rho(i));
    Ok(intertwines && phi * r.beta() == r2.beta() * phi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::int;

    fn v(xs: &[i64]) -> Vector {
        xs.iter().map(|&x| int(x)).collect()
    }

    // [x1,x2] = a x1 + b x3, [x1,x3] = c x2, [x2,x3] = d x1 + 2a x3
    fn ex12(a: i64, b: i64, c: i64, d: i64, alpha: Matrix) -> HomAlgebra {
        HomAlgebra::from_brackets(
            3,
            &[(0, 1, v(&[a, 0, b])), (0, 2, v(&[0, c, 0])), (1, 2, v(&[d, 0, 2 * a]))],
            alpha,
        )
        .unwrap()
    }

    #[test]
    fn ex12_residual_with_identity_twist() {
        let g = ex12(1, 2, 3, 4, Matrix::identity(3));
        assert_eq!(jacobiator(&g, 0, 1, 2).unwrap(), v(&[0, 3, 0]));
        let report = check_hom_lie(&g);
        assert!(report.skew && !report.hom_jacobi);
        assert_eq!(report.jacobi_witness.unwrap().triple, (0, 1, 2));
    }

    #[test]
    fn ex12_with_stated_twist_is_hom_lie() {
        let g = ex12(1, 2, 3, 4, Matrix::diagonal(&[int(1), int(2), int(2)]));
        assert!(check_hom_lie(&g).passed());
    }

    #[test]
    fn jacobiator_index_out_of_range() {
        let g = HomAlgebra::abelian(Matrix::identity(2));
        assert!(matches!(jacobiator(&g, 0, 1, 2), Err(HomAlgError::IndexOutOfRange { index: 2, dim: 2 })));
    }

    #[test]
    fn identity_twist_classifies_fully() {
        let c = classify_alpha(&HomAlgebra::abelian(Matrix::identity(2)));
        assert!(c.multiplicative && c.regular && c.involutive && !c.nilpotent);
        assert_eq!(c.tag, AlphaTag::Involutive);
    }

    #[test]
    fn zero_twist_is_nilpotent() {
        let c = classify_alpha(&HomAlgebra::abelian(Matrix::zeros(2, 2)));
        assert_eq!(c.tag, AlphaTag::Nilpotent);
        assert!(!c.regular);
    }

    #[test]
    fn zero_form_is_degenerate() {
        let g = HomAlgebra::abelian(Matrix::identity(2));
        let r = check_quadratic(&g, &BilinearForm::zero(2)).unwrap();
        assert!(r.symmetric && r.invariant && r.alpha_symmetric && !r.nondegenerate);
    }

    #[test]
    fn hom_quadratic_on_abelian_always_holds() {
        let g = HomAlgebra::abelian(Matrix::identity(2));
        let gamma = Matrix::from_i64(2, 2, &[1, 5, 0, 7]);
        assert!(check_hom_quadratic(&g, &BilinearForm::identity(2), &gamma).unwrap());
    }

    #[test]
    fn zero_product_is_hom_associative() {
        let a = AssocAlgebra::new(vec![vec![v(&[0, 0]); 2]; 2], Matrix::from_i64(2, 2, &[1, 2, 3, 4])).unwrap();
        assert!(check_hom_associative(&a));
        assert!(commutator_hom_lie(&a).unwrap().is_abelian());
    }

    #[test]
    fn zero_representation_is_valid() {
        let g = ex12(1, 2, 3, 4, Matrix::diagonal(&[int(1), int(2), int(2)]));
        let r = Representation::zero(3, Matrix::from_i64(2, 2, &[0, 1, 1, 0])).unwrap();
        assert!(check_representation(&g, &r).unwrap());
    }

    #[test]
    fn morphism_identity_and_zero() {
        let g = ex12(1, 0, 1, 0, Matrix::identity(3));
        assert!(check_morphism(&g, &g, &Matrix::identity(3)).unwrap());
        assert!(check_morphism(&g, &g, &Matrix::zeros(3, 3)).unwrap());
        assert!(check_morphism(&g, &g, &Matrix::zeros(2, 3)).is_err());
    }

    #[test]
    fn from_brackets_rejects_bad_entries() {
        let id = Matrix::identity(2);
        assert!(matches!(
            HomAlgebra::from_brackets(2, &[(1, 1, v(&[1, 0]))], id.clone()),
            Err(HomAlgError::NotSkew { .. })
        ));
        assert!(matches!(
            HomAlgebra::from_brackets(2, &[(0, 1, v(&[1, 0])), (0, 1, v(&[0, 1]))], id.clone()),
            Err(HomAlgError::DuplicateBracket { .. })
        ));
        assert!(matches!(
            HomAlgebra::from_brackets(2, &[(0, 2, v(&[1, 0]))], id),
            Err(HomAlgError::IndexOutOfRange { .. })
        ));
    }
}
