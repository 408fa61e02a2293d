use super::HomAlgError;
use crate::exactlin::{axpy, is_zero_vector, unit_vector, zero_vector, Matrix, Scalar, Subspace, Vector};
use num_traits::Zero;
use std::fmt;

/// A bilinear product on `K^n` stored as a full structure tensor:
/// `table[i * n + j]` holds the coordinates of `x_i · x_j`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub(crate) struct Table {
    n: usize,
    data: Vec<Vector>,
}

impl Table {
    pub(crate) fn zeros(n: usize) -> Self {
        Table {
            n,
            data: vec![zero_vector(n); n * n],
        }
    }

    pub(crate) fn get(&self, i: usize, j: usize) -> &Vector {
        &self.data[i * self.n + j]
    }

    pub(crate) fn set(&mut self, i: usize, j: usize, v: Vector) {
        self.data[i * self.n + j] = v;
    }

    /// Product of two coordinate vectors, extended bilinearly.
    pub(crate) fn apply(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        let mut out = zero_vector(self.n);
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                axpy(&mut out, &(xi * yj), self.get(i, j));
            }
        }
        out
    }

    /// Matrix of left multiplication by `x_i`.
    pub(crate) fn left(&self, i: usize) -> Matrix {
        let cols: Vec<Vector> = (0..self.n).map(|j| self.get(i, j).clone()).collect();
        Matrix::from_columns(self.n, &cols)
    }

    /// `f ∘ μ` for a linear map `f`.
    pub(crate) fn compose_after(&self, f: &Matrix) -> Table {
        Table {
            n: self.n,
            data: self.data.iter().map(|v| f.mul_vec(v)).collect(),
        }
    }

    /// `μ(f x, g y)` for linear maps `f`, `g`.
    pub(crate) fn precompose(&self, f: &Matrix, g: &Matrix) -> Table {
        let n = self.n;
        let fc = f.columns();
        let gc = g.columns();
        let mut t = Table::zeros(n);
        for i in 0..n {
            for j in 0..n {
                t.set(i, j, self.apply(&fc[i], &gc[j]));
            }
        }
        t
    }

    /// Structure tensor in the basis given by the columns of `p` (invertible).
    pub(crate) fn change_basis(&self, p: &Matrix, p_inv: &Matrix) -> Table {
        self.precompose(p, p).compose_after(p_inv)
    }

    pub(crate) fn is_zero(&self) -> bool {
        self.data.iter().all(|v| is_zero_vector(v))
    }

    /// Restriction to a subspace closed under the product, in its canonical basis.
    pub(crate) fn restrict(&self, s: &Subspace) -> Option<Table> {
        let basis = s.basis();
        let k = basis.len();
        let mut t = Table::zeros(k);
        for (i, u) in basis.iter().enumerate() {
            for (j, v) in basis.iter().enumerate() {
                t.set(i, j, s.coordinates(&self.apply(u, v))?);
            }
        }
        Some(t)
    }

    /// Block sum with another table (products between the blocks vanish).
    pub(crate) fn direct_sum(&self, other: &Table) -> Table {
        let n = self.n + other.n;
        let mut t = Table::zeros(n);
        for i in 0..self.n {
            for j in 0..self.n {
                let mut v = self.get(i, j).clone();
                v.resize(n, Scalar::zero());
                t.set(i, j, v);
            }
        }
        for i in 0..other.n {
            for j in 0..other.n {
                let mut v = zero_vector(self.n);
                v.extend(other.get(i, j).iter().cloned());
                t.set(self.n + i, self.n + j, v);
            }
        }
        t
    }
}

/// A Hom-Lie candidate `(g, [ , ], α)` on `K^n` with a skew-symmetric bracket.
///
/// Only skew-symmetry is enforced on construction; the Hom-Jacobi identity is
/// checked separately by [`super::check_hom_lie`].
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct HomAlgebra {
    table: Table,
    alpha: Matrix,
}

impl HomAlgebra {
    /// Builds from a full tensor `c[i][j][k]`, rejecting tensors that are not
    /// skew-symmetric.
    pub fn new(tensor: Vec<Vec<Vector>>, alpha: Matrix) -> Result<Self, HomAlgError> {
        let n = alpha.rows();
        if !alpha.is_square() {
            return Err(HomAlgError::DimensionMismatch("alpha is not square".into()));
        }
        if tensor.len() != n || tensor.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(HomAlgError::DimensionMismatch(format!(
                "bracket tensor is not {n}x{n}x{n}"
            )));
        }
        let mut table = Table::zeros(n);
        for i in 0..n {
            for j in 0..n {
                let sum: Vector = tensor[i][j].iter().zip(&tensor[j][i]).map(|(a, b)| a + b).collect();
                if !is_zero_vector(&sum) {
                    return Err(HomAlgError::NotSkew { i, j });
                }
                table.set(i, j, tensor[i][j].clone());
            }
        }
        Ok(HomAlgebra { table, alpha })
    }

    /// Builds from the brackets `[x_i, x_j]` with `i < j`; the rest follows
    /// by skew-symmetry or is zero.
    pub fn from_brackets(
        dim: usize,
        brackets: &[(usize, usize, Vector)],
        alpha: Matrix,
    ) -> Result<Self, HomAlgError> {
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(HomAlgError::DimensionMismatch(format!(
                "alpha is {}x{}, expected {dim}x{dim}",
                alpha.rows(),
                alpha.cols()
            )));
        }
        let mut table = Table::zeros(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in brackets {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(HomAlgError::IndexOutOfRange { index: i.max(j), dim });
            }
            if i >= j {
                return Err(HomAlgError::NotSkew { i, j });
            }
            if v.len() != dim {
                return Err(HomAlgError::DimensionMismatch(format!(
                    "bracket [x{i}, x{j}] has {} coordinates, expected {dim}",
                    v.len()
                )));
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(HomAlgError::DuplicateBracket { i, j });
            }
            table.set(i, j, v.clone());
            table.set(j, i, v.iter().map(|c| -c).collect());
        }
        Ok(HomAlgebra { table, alpha })
    }

    /// Abelian algebra with the given twist.
    pub fn abelian(alpha: Matrix) -> Self {
        HomAlgebra {
            table: Table::zeros(alpha.rows()),
            alpha,
        }
    }

    pub fn dim(&self) -> usize {
        self.table.n
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    /// Coordinates of `[x_i, x_j]`.
    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        self.table.get(i, j)
    }

    /// Full tensor `c[i][j][k]`.
    pub fn tensor(&self) -> Vec<Vec<Vector>> {
        let n = self.dim();
        (0..n).map(|i| (0..n).map(|j| self.table.get(i, j).clone()).collect()).collect()
    }

    /// Nonzero brackets `[x_i, x_j]` with `i < j`.
    pub fn sparse_brackets(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                let v = self.table.get(i, j);
                if !is_zero_vector(v) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn bracket(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.table.apply(x, y)
    }

    /// Matrix of `ad(x_i) = [x_i, ·]`.
    pub fn ad(&self, i: usize) -> Matrix {
        self.table.left(i)
    }

    /// Matrix of `ad(x)` for an arbitrary element.
    pub fn ad_of(&self, x: &[Scalar]) -> Matrix {
        let n = self.dim();
        let cols: Vec<Vector> = (0..n).map(|j| self.bracket(x, &unit_vector(n, j))).collect();
        Matrix::from_columns(n, &cols)
    }

    pub fn is_abelian(&self) -> bool {
        self.table.is_zero()
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self, HomAlgError> {
        if alpha.rows() != self.dim() || alpha.cols() != self.dim() {
            return Err(HomAlgError::DimensionMismatch("replacement alpha has the wrong size".into()));
        }
        Ok(HomAlgebra {
            table: self.table.clone(),
            alpha,
        })
    }

    /// Same twist, bracket `f ∘ [ , ]`.
    pub fn compose_bracket(&self, f: &Matrix) -> Self {
        HomAlgebra {
            table: self.table.compose_after(f),
            alpha: self.alpha.clone(),
        }
    }

    /// Same twist, bracket `[f x, g y]`.
    pub fn precompose_bracket(&self, f: &Matrix, g: &Matrix) -> Self {
        HomAlgebra {
            table: self.table.precompose(f, g),
            alpha: self.alpha.clone(),
        }
    }

    /// The same algebra expressed in the basis formed by the columns of `p`.
    pub fn change_basis(&self, p: &Matrix) -> Result<Self, HomAlgError> {
        if p.rows() != self.dim() || !p.is_square() {
            return Err(HomAlgError::DimensionMismatch("change of basis has the wrong size".into()));
        }
        let p_inv = p.inverse().ok_or(HomAlgError::Singular)?;
        Ok(HomAlgebra {
            table: self.table.change_basis(p, &p_inv),
            alpha: &(&p_inv * &self.alpha) * p,
        })
    }

    /// Restriction to a subspace closed under the bracket and α, in the
    /// subspace's canonical basis.
    pub fn restrict(&self, s: &Subspace) -> Option<Self> {
        Some(HomAlgebra {
            table: self.table.restrict(s)?,
            alpha: s.restrict(&self.alpha)?,
        })
    }

    /// Direct sum with the bracket vanishing between the summands.
    pub fn direct_sum(&self, other: &HomAlgebra) -> Self {
        HomAlgebra {
            table: self.table.direct_sum(&other.table),
            alpha: Matrix::block_diag(&[&self.alpha, &other.alpha]),
        }
    }

    /// `span [g, g]`.
    pub fn derived_ideal(&self) -> Subspace {
        let n = self.dim();
        Subspace::span(n, &self.table.data)
    }
}

impl fmt::Debug for HomAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("HomAlgebra")
            .field("dim", &self.dim())
            .field("brackets", &self.sparse_brackets())
            .field("alpha", &self.alpha)
            .finish()
    }
}

/// `(A, μ, α)` with an arbitrary bilinear product.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct AssocAlgebra {
    table: Table,
    alpha: Matrix,
}

impl AssocAlgebra {
    pub fn new(tensor: Vec<Vec<Vector>>, alpha: Matrix) -> Result<Self, HomAlgError> {
        let n = alpha.rows();
        if !alpha.is_square() {
            return Err(HomAlgError::DimensionMismatch("alpha is not square".into()));
        }
        if tensor.len() != n || tensor.iter().any(|row| row.len() != n || row.iter().any(|v| v.len() != n)) {
            return Err(HomAlgError::DimensionMismatch(format!("product tensor is not {n}x{n}x{n}")));
        }
        let mut table = Table::zeros(n);
        for (i, row) in tensor.into_iter().enumerate() {
            for (j, v) in row.into_iter().enumerate() {
                table.set(i, j, v);
            }
        }
        Ok(AssocAlgebra { table, alpha })
    }

    /// Builds from the nonzero products `x_i · x_j`.
    pub fn from_products(dim: usize, products: &[(usize, usize, Vector)], alpha: Matrix) -> Result<Self, HomAlgError> {
        if alpha.rows() != dim || alpha.cols() != dim {
            return Err(HomAlgError::DimensionMismatch("alpha has the wrong size".into()));
        }
        let mut table = Table::zeros(dim);
        let mut seen = vec![false; dim * dim];
        for (i, j, v) in products {
            let (i, j) = (*i, *j);
            if i >= dim || j >= dim {
                return Err(HomAlgError::IndexOutOfRange { index: i.max(j), dim });
            }
            if v.len() != dim {
                return Err(HomAlgError::DimensionMismatch(format!("product x{i}x{j} has the wrong length")));
            }
            if std::mem::replace(&mut seen[i * dim + j], true) {
                return Err(HomAlgError::DuplicateBracket { i, j });
            }
            table.set(i, j, v.clone());
        }
        Ok(AssocAlgebra { table, alpha })
    }

    pub fn dim(&self) -> usize {
        self.table.n
    }

    pub fn alpha(&self) -> &Matrix {
        &self.alpha
    }

    pub fn product(&self, x: &[Scalar], y: &[Scalar]) -> Vector {
        self.table.apply(x, y)
    }

    pub fn structure(&self, i: usize, j: usize) -> &Vector {
        self.table.get(i, j)
    }

    /// Nonzero products `x_i · x_j`.
    pub fn sparse_products(&self) -> Vec<(usize, usize, Vector)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let v = self.table.get(i, j);
                if !is_zero_vector(v) {
                    out.push((i, j, v.clone()));
                }
            }
        }
        out
    }

    pub fn with_alpha(&self, alpha: Matrix) -> Result<Self, HomAlgError> {
        if alpha.rows() != self.dim() || alpha.cols() != self.dim() {
            return Err(HomAlgError::DimensionMismatch("replacement alpha has the wrong size".into()));
        }
        Ok(AssocAlgebra {
            table: self.table.clone(),
            alpha,
        })
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (i + 1..n).all(|j| self.table.get(i, j) == self.table.get(j, i)))
    }

    /// Ordinary associativity `(xy)z = x(yz)` on basis triples.
    pub fn is_associative(&self) -> bool {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let xy = self.table.get(i, j);
                for k in 0..n {
                    let left = self.table.apply(xy, &unit_vector(n, k));
                    let right = self.table.apply(&unit_vector(n, i), self.table.get(j, k));
                    if left != right {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// `{x : x·y = y·x = 0 for all y}`.
    pub fn annihilator(&self) -> Subspace {
        let n = self.dim();
        let blocks: Vec<Matrix> = (0..n)
            .flat_map(|j| {
                let right: Vec<Vector> = (0..n).map(|i| self.table.get(i, j).clone()).collect();
                let left: Vec<Vector> = (0..n).map(|i| self.table.get(j, i).clone()).collect();
                [Matrix::from_columns(n, &right), Matrix::from_columns(n, &left)]
            })
            .collect();
        let stacked = blocks.iter().fold(Matrix::zeros(0, n), |acc, b| acc.vstack(b));
        crate::exactlin::kernel(&stacked)
    }

    /// Whether the linear map is a morphism of the product.
    pub fn is_product_morphism(&self, f: &Matrix) -> bool {
        let n = self.dim();
        let cols = f.columns();
        (0..n).all(|i| (0..n).all(|j| f.mul_vec(self.table.get(i, j)) == self.table.apply(&cols[i], &cols[j])))
    }
}

impl fmt::Debug for AssocAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("AssocAlgebra")
            .field("dim", &self.dim())
            .field("products", &self.sparse_products())
            .field("alpha", &self.alpha)
            .finish()
    }
}
