//! Parameterized fixtures and deterministic random instances.

mod random;

pub use random::{random_instance, random_unimodular, InstanceKind};

use crate::analyze::trace_form;
use crate::build::{omega_map, quadratic_yau_twist, tstar_extension, BuildError};
use crate::exactlin::{frac, int, unit_vector, zero_vector, Matrix, Scalar, Vector};
use crate::homalg::{AssocAlgebra, HomAlgError, HomAlgebra, QuadraticHomAlgebra};
use num_traits::{One, Zero};
use thiserror::Error;

/// Registered fixture names.
pub const FIXTURE_NAMES: &[&str] = &[
    "ex_1_2",
    "jackson_sl2",
    "sl_n_transpose",
    "swap_double",
    "filiform",
    "two_nilpotent",
    "assoc_A",
    "heis3",
    "abelian",
    "sl2",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FixtureId {
    pub name: String,
    pub params: Vec<Scalar>,
}

impl FixtureId {
    pub fn new(name: &str, params: Vec<Scalar>) -> Self {
        FixtureId {
            name: name.to_string(),
            params,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Fixture {
    Hom(HomAlgebra),
    Quadratic(QuadraticHomAlgebra),
    Assoc(AssocAlgebra),
}

impl Fixture {
    /// The underlying Hom-Lie algebra, if any.
    pub fn algebra(&self) -> Option<&HomAlgebra> {
        match self {
            Fixture::Hom(g) => Some(g),
            Fixture::Quadratic(q) => Some(q.algebra()),
            Fixture::Assoc(_) => None,
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Fixture::Hom(g) => g.dim(),
            Fixture::Quadratic(q) => q.dim(),
            Fixture::Assoc(a) => a.dim(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown fixture `{0}`")]
    UnknownFixture(String),
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error(transparent)]
    HomAlg(#[from] HomAlgError),
    #[error(transparent)]
    Build(#[from] BuildError),
}

fn bad(msg: impl Into<String>) -> CatalogError {
    CatalogError::BadParams(msg.into())
}

fn count_param(p: &Scalar, what: &str, min: usize) -> Result<usize, CatalogError> {
    if !p.is_integer() {
        return Err(bad(format!("{what} must be an integer")));
    }
    let n: i64 = p.to_integer().try_into().map_err(|_| bad(format!("{what} is too large")))?;
    if n < min as i64 || n > 64 {
        return Err(bad(format!("{what} must lie in {min}..=64")));
    }
    Ok(n as usize)
}

fn expect_params(id: &FixtureId, min: usize, max: usize) -> Result<(), CatalogError> {
    let k = id.params.len();
    if k < min || k > max {
        return Err(bad(format!("{} takes {min} to {max} parameters, got {k}", id.name)));
    }
    Ok(())
}

fn vec_of(n: usize, entries: &[(usize, Scalar)]) -> Vector {
    let mut v = zero_vector(n);
    for (i, c) in entries {
        v[*i] = c.clone();
    }
    v
}

/// `[x1, x2] = a x1 + b x3`, `[x1, x3] = c x2`, `[x2, x3] = d x1 + 2a x3`,
/// `α = diag(1, 2, 2)`.
pub fn ex_1_2(a: &Scalar, b: &Scalar, c: &Scalar, d: &Scalar) -> HomAlgebra {
    let brackets = vec![
        (0, 1, vec_of(3, &[(0, a.clone()), (2, b.clone())])),
        (0, 2, vec_of(3, &[(1, c.clone())])),
        (1, 2, vec_of(3, &[(0, d.clone()), (2, a * int(2))])),
    ];
    HomAlgebra::from_brackets(3, &brackets, Matrix::diagonal(&[int(1), int(2), int(2)])).expect("valid table")
}

/// Jackson `sl2`: `[x1, x2] = −2q x2`, `[x1, x3] = 2 x3`,
/// `[x2, x3] = −(1 + q)/2 x1`, `α = diag(q, q², q)`.
pub fn jackson_sl2(q: &Scalar) -> Result<HomAlgebra, CatalogError> {
    if q.is_zero() {
        return Err(bad("q must be nonzero"));
    }
    let half = frac(1, 2);
    let brackets = vec![
        (0, 1, vec_of(3, &[(1, q * int(-2))])),
        (0, 2, vec_of(3, &[(2, int(2))])),
        (1, 2, vec_of(3, &[(0, -(Scalar::one() + q) * half)])),
    ];
    let alpha = Matrix::diagonal(&[q.clone(), q * q, q.clone()]);
    Ok(HomAlgebra::from_brackets(3, &brackets, alpha)?)
}

/// `sl_n` on the basis `H_1, …, H_{n−1}` (`H_k = E_kk − E_{k+1,k+1}`) followed
/// by the `E_ij`, `i ≠ j`, in lexicographic order; `α = id`.
pub fn sl_n(n: usize) -> Result<HomAlgebra, CatalogError> {
    if n < 2 {
        return Err(bad("n must be at least 2"));
    }
    let basis = sl_n_basis(n);
    let dim = basis.len();
    let mut brackets = Vec::new();
    for i in 0..dim {
        for j in i + 1..dim {
            let c = basis[i].commutator(&basis[j]);
            let v = sl_n_coords(&c);
            if v.iter().any(|x| !x.is_zero()) {
                brackets.push((i, j, v));
            }
        }
    }
    Ok(HomAlgebra::from_brackets(dim, &brackets, Matrix::identity(dim))?)
}

fn sl_n_basis(n: usize) -> Vec<Matrix> {
    let mut out = Vec::new();
    for k in 0..n - 1 {
        let mut m = Matrix::zeros(n, n);
        m[(k, k)] = int(1);
        m[(k + 1, k + 1)] = int(-1);
        out.push(m);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                let mut m = Matrix::zeros(n, n);
                m[(i, j)] = int(1);
                out.push(m);
            }
        }
    }
    out
}

fn sl_n_coords(m: &Matrix) -> Vector {
    let n = m.rows();
    let mut v = Vec::with_capacity(n * n - 1);
    let mut acc = Scalar::zero();
    for k in 0..n - 1 {
        acc += &m[(k, k)];
        v.push(acc.clone());
    }
    for i in 0..n {
        for j in 0..n {
            if i != j {
                v.push(m[(i, j)].clone());
            }
        }
    }
    v
}

/// The involution `x ↦ −ᵗx` of `sl_n` in the basis of [`sl_n`].
pub fn transpose_involution(n: usize) -> Matrix {
    let cols: Vec<Vector> = sl_n_basis(n)
        .iter()
        .map(|b| sl_n_coords(&(-&b.transpose())))
        .collect();
    Matrix::from_columns(n * n - 1, &cols)
}

/// `sl_n` with its Killing form and `α = id`.
pub fn sl_n_killing(n: usize) -> Result<QuadraticHomAlgebra, CatalogError> {
    let g = sl_n(n)?;
    let k = trace_form(&g);
    Ok(QuadraticHomAlgebra::new(g, k)?)
}

/// `sl2` with basis `h, e, f`, Killing form and `α = id`.
pub fn sl2() -> QuadraticHomAlgebra {
    sl_n_killing(2).expect("sl2 is quadratic")
}

/// `(sl_n, θ ∘ [ , ], θ, K(θ ·, ·))` for `θ(x) = −ᵗx`.
pub fn sl_n_transpose(n: usize) -> Result<QuadraticHomAlgebra, CatalogError> {
    let q = sl_n_killing(n)?;
    Ok(quadratic_yau_twist(&q, &transpose_involution(n))?)
}

/// `L = sl_n × sl_n` with the swap `(x, y) ↦ (y, x)`.
pub fn sl_n_pair_with_swap(n: usize) -> Result<(QuadraticHomAlgebra, Matrix), CatalogError> {
    let q = sl_n_killing(n)?;
    let pair = q.orthogonal_sum(&q);
    let d = q.dim();
    let swap = Matrix::from_fn(2 * d, 2 * d, |r, c| if (r + d) % (2 * d) == c { int(1) } else { int(0) });
    Ok((pair, swap))
}

/// `L_θ` for `L = sl_n × sl_n` and the swap `θ`, with the twisted Killing
/// form.
pub fn swap_twisted_sl_n(n: usize) -> Result<QuadraticHomAlgebra, CatalogError> {
    let (pair, swap) = sl_n_pair_with_swap(n)?;
    Ok(quadratic_yau_twist(&pair, &swap)?)
}

/// `T*(L)` twisted by `Ω = θ ⊕ ᵗθ` for `L = sl_n × sl_n` and the swap `θ`.
pub fn swap_double(n: usize) -> Result<QuadraticHomAlgebra, CatalogError> {
    let (pair, swap) = sl_n_pair_with_swap(n)?;
    let t = tstar_extension(pair.algebra())?;
    Ok(quadratic_yau_twist(&t, &omega_map(&swap))?)
}

/// Filiform Lie algebra on `x_0, …, x_n` with `[x_0, x_i] = x_{i+1}` and the
/// automorphism `x_0 ↦ x_0 + λ x_n`, `x_i ↦ x_i` as twist.
pub fn filiform(n: usize, lambda: &Scalar) -> Result<HomAlgebra, CatalogError> {
    if n < 1 {
        return Err(bad("n must be at least 1"));
    }
    let dim = n + 1;
    let brackets: Vec<_> = (1..n).map(|i| (0, i, unit_vector(dim, i + 1))).collect();
    let mut alpha = Matrix::identity(dim);
    alpha[(n, 0)] = lambda.clone();
    Ok(HomAlgebra::from_brackets(dim, &brackets, alpha)?)
}

/// `g = V ⊕ Z` with `[v_{2i}, v_{2i+1}] = z_{i mod dim_z}` and
/// `α(v + z) = v + λ(v) + z`. `lambda` is `dim_z × dim_v`.
pub fn two_nilpotent(dim_v: usize, dim_z: usize, lambda: &Matrix) -> Result<HomAlgebra, CatalogError> {
    if dim_v < 2 || dim_v % 2 != 0 {
        return Err(bad("dim_v must be even and at least 2"));
    }
    if dim_z < 1 || dim_z > dim_v / 2 {
        return Err(bad("dim_z must lie in 1..=dim_v/2"));
    }
    if lambda.rows() != dim_z || lambda.cols() != dim_v {
        return Err(bad("λ must be a dim_z × dim_v matrix"));
    }
    if lambda.is_zero() {
        return Err(bad("λ must be nonzero"));
    }
    let dim = dim_v + dim_z;
    let brackets: Vec<_> = (0..dim_v / 2)
        .map(|i| (2 * i, 2 * i + 1, unit_vector(dim, dim_v + i % dim_z)))
        .collect();
    let mut alpha = Matrix::identity(dim);
    for r in 0..dim_z {
        for c in 0..dim_v {
            alpha[(dim_v + r, c)] = lambda[(r, c)].clone();
        }
    }
    Ok(HomAlgebra::from_brackets(dim, &brackets, alpha)?)
}

/// The commutative associative algebra on `e, f, h, t` with `ee = f`,
/// `ef = fe = h`, `eh = he = t`, `ff = t` and twist `θ(e) = e + q t`.
pub fn assoc_a(q: &Scalar) -> Result<AssocAlgebra, CatalogError> {
    if q.is_zero() {
        return Err(bad("q must be nonzero"));
    }
    let products = vec![
        (0, 0, unit_vector(4, 1)),
        (0, 1, unit_vector(4, 2)),
        (1, 0, unit_vector(4, 2)),
        (0, 2, unit_vector(4, 3)),
        (2, 0, unit_vector(4, 3)),
        (1, 1, unit_vector(4, 3)),
    ];
    let mut theta = Matrix::identity(4);
    theta[(3, 0)] = q.clone();
    Ok(AssocAlgebra::from_products(4, &products, theta)?)
}

/// `[x1, x2] = x3`, `α = id`.
pub fn heis3() -> HomAlgebra {
    HomAlgebra::from_brackets(3, &[(0, 1, unit_vector(3, 2))], Matrix::identity(3)).expect("valid table")
}

pub fn abelian(n: usize) -> HomAlgebra {
    HomAlgebra::abelian(Matrix::identity(n))
}

/// Builds a registered fixture.
///
/// Parameters: `ex_1_2 a b c d`; `jackson_sl2 q`; `sl_n_transpose n`;
/// `swap_double n [twisted]` (a nonzero second parameter gives `L_θ` instead
/// of the twisted `T*(L)`); `filiform n λ`; `two_nilpotent dim_v dim_z
/// [λ entries]`; `assoc_A q`; `heis3`; `abelian n`; `sl2`.
pub fn emit(id: &FixtureId) -> Result<Fixture, CatalogError> {
    let p = &id.params;
    match id.name.as_str() {
        "ex_1_2" => {
            expect_params(id, 4, 4)?;
            Ok(Fixture::Hom(ex_1_2(&p[0], &p[1], &p[2], &p[3])))
        }
        "jackson_sl2" => {
            expect_params(id, 1, 1)?;
            Ok(Fixture::Hom(jackson_sl2(&p[0])?))
        }
        "sl_n_transpose" => {
            expect_params(id, 1, 1)?;
            Ok(Fixture::Quadratic(sl_n_transpose(count_param(&p[0], "n", 2)?)?))
        }
        "swap_double" => {
            expect_params(id, 0, 2)?;
            let n = match p.first() {
                Some(x) => count_param(x, "n", 2)?,
                None => 2,
            };
            let twisted = p.get(1).is_some_and(|x| !x.is_zero());
            if twisted {
                Ok(Fixture::Quadratic(swap_twisted_sl_n(n)?))
            } else {
                Ok(Fixture::Quadratic(swap_double(n)?))
            }
        }
        "filiform" => {
            expect_params(id, 2, 2)?;
            Ok(Fixture::Hom(filiform(count_param(&p[0], "n", 1)?, &p[1])?))
        }
        "two_nilpotent" => {
            expect_params(id, 2, usize::MAX)?;
            let dv = count_param(&p[0], "dim_v", 2)?;
            let dz = count_param(&p[1], "dim_z", 1)?;
            let lambda = if p.len() == 2 {
                let mut l = Matrix::zeros(dz, dv);
                l[(0, 0)] = int(1);
                l
            } else if p.len() == 2 + dz * dv {
                Matrix::from_fn(dz, dv, |r, c| p[2 + r * dv + c].clone())
            } else {
                return Err(bad("two_nilpotent needs dim_z·dim_v entries for λ"));
            };
            Ok(Fixture::Hom(two_nilpotent(dv, dz, &lambda)?))
        }
        "assoc_A" => {
            expect_params(id, 1, 1)?;
            Ok(Fixture::Assoc(assoc_a(&p[0])?))
        }
        "heis3" => {
            expect_params(id, 0, 0)?;
            Ok(Fixture::Hom(heis3()))
        }
        "abelian" => {
            expect_params(id, 1, 1)?;
            Ok(Fixture::Hom(abelian(count_param(&p[0], "n", 1)?)))
        }
        "sl2" => {
            expect_params(id, 0, 0)?;
            Ok(Fixture::Quadratic(sl2()))
        }
        other => Err(CatalogError::UnknownFixture(other.to_string())),
    }
}

/// Conventional basis labels for a fixture of the given dimension.
pub fn basis_names(id: &FixtureId, dim: usize) -> Vec<String> {
    let numbered = |start: usize| (0..dim).map(|i| format!("x{}", i + start)).collect();
    match id.name.as_str() {
        "ex_1_2" | "jackson_sl2" | "heis3" | "abelian" => numbered(1),
        "filiform" => numbered(0),
        "sl2" => vec!["h".into(), "e".into(), "f".into()],
        "assoc_A" => vec!["e".into(), "f".into(), "h".into(), "t".into()],
        _ => numbered(1),
    }
}
