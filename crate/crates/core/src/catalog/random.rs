//! Seeded random instances.
//!
//! Every instance is a direct sum of blocks followed by a random unimodular
//! change of basis:
//!
//! * `lie`: `sl2`, `heis3`, filiform algebras and abelian blocks, `α = id`;
//! * `hom_lie`: the same Lie blocks Yau-twisted by a block-diagonal
//!   endomorphism (inner automorphisms and involutions of `sl2`, diagonal
//!   endomorphisms of filiform blocks, arbitrary maps on abelian blocks);
//! * `quadratic`: orthogonal sums of `sl2` twisted by a conjugated involution,
//!   abelian blocks with a diagonal form and a diagonal (possibly singular)
//!   or nilpotent symmetric twist, and `Ω`-twisted `T*` extensions of
//!   filiform algebras;
//! * `involutive_quadratic`: as `quadratic` with every block twist an
//!   involution.
//!
//! All outputs are multiplicative.

use super::{filiform, heis3, sl2, transpose_involution, CatalogError, Fixture};
use crate::build::{omega_extension, quadratic_yau_twist, yau_twist};
use crate::exactlin::{frac, int, Matrix, Scalar};
use crate::homalg::{BilinearForm, HomAlgebra, QuadraticHomAlgebra};
use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::fmt;
use std::str::FromStr;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum InstanceKind {
    Lie,
    HomLie,
    Quadratic,
    InvolutiveQuadratic,
}

impl InstanceKind {
    pub fn name(self) -> &'static str {
        match self {
            InstanceKind::Lie => "lie",
            InstanceKind::HomLie => "hom_lie",
            InstanceKind::Quadratic => "quadratic",
            InstanceKind::InvolutiveQuadratic => "involutive_quadratic",
        }
    }
}

impl fmt::Display for InstanceKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for InstanceKind {
    type Err = CatalogError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lie" => Ok(InstanceKind::Lie),
            "hom_lie" => Ok(InstanceKind::HomLie),
            "quadratic" => Ok(InstanceKind::Quadratic),
            "involutive_quadratic" => Ok(InstanceKind::InvolutiveQuadratic),
            other => Err(CatalogError::BadParams(format!("unknown instance kind `{other}`"))),
        }
    }
}

fn nonzero_small(rng: &mut ChaCha8Rng) -> Scalar {
    let mut n = 0;
    while n == 0 {
        n = rng.gen_range(-4..=4);
    }
    frac(n, rng.gen_range(1..=3))
}

fn sign(rng: &mut ChaCha8Rng) -> Scalar {
    if rng.gen_bool(0.5) {
        int(1)
    } else {
        int(-1)
    }
}

/// A product of random integer elementary matrices and a permutation;
/// determinant `±1`.
pub fn random_unimodular(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    let mut m = Matrix::identity(n);
    if n < 2 {
        return m;
    }
    for _ in 0..2 * n {
        let i = rng.gen_range(0..n);
        let mut j = rng.gen_range(0..n - 1);
        if j >= i {
            j += 1;
        }
        let c = int(*[-2, -1, 1, 2].choose(rng).expect("nonempty"));
        let mut e = Matrix::identity(n);
        e[(i, j)] = c;
        m = &e * &m;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    Matrix::from_fn(n, n, |r, c| m[(perm[r], c)].clone())
}

/// `exp(t ad e) exp(s ad f)` on `sl2` in the basis `h, e, f`.
fn sl2_inner(rng: &mut ChaCha8Rng) -> Matrix {
    let g = sl2();
    let exp_nil = |a: &Matrix| {
        let half = frac(1, 2);
        &(&Matrix::identity(3) + a) + &(a * a).scale(&half)
    };
    let t = frac(rng.gen_range(-2..=2), rng.gen_range(1..=2));
    let s = frac(rng.gen_range(-2..=2), rng.gen_range(1..=2));
    let ae = g.algebra().ad(1).scale(&t);
    let af = g.algebra().ad(2).scale(&s);
    &exp_nil(&ae) * &exp_nil(&af)
}

/// A conjugate of `x ↦ −ᵗx` or of `diag(1, −1, −1)` by an inner automorphism.
fn sl2_involution(rng: &mut ChaCha8Rng) -> Matrix {
    let base = if rng.gen_bool(0.5) {
        transpose_involution(2)
    } else {
        Matrix::diagonal(&[int(1), int(-1), int(-1)])
    };
    let phi = sl2_inner(rng);
    let inv = phi.inverse().expect("exponentials are invertible");
    &(&phi * &base) * &inv
}

/// `x_0 ↦ a x_0`, `x_1 ↦ b x_1`, `x_{i+1} ↦ a · (scale of x_i) x_{i+1}`.
fn filiform_diagonal(n: usize, a: &Scalar, b: &Scalar) -> Matrix {
    let mut d = vec![a.clone(), b.clone()];
    for i in 2..=n {
        let next = &d[i - 1] * a;
        d.push(next);
    }
    Matrix::diagonal(&d)
}

/// Sign involution of a filiform algebra: `x_0 ↦ −x_0`, `x_1 ↦ ±x_1`,
/// alternating afterwards.
fn filiform_involution(rng: &mut ChaCha8Rng, n: usize) -> Matrix {
    filiform_diagonal(n, &int(-1), &sign(rng))
}

enum LieBlock {
    Sl2,
    Heis,
    Filiform(usize),
    Abelian(usize),
}

impl LieBlock {
    fn algebra(&self) -> HomAlgebra {
        match self {
            LieBlock::Sl2 => sl2().algebra().clone(),
            LieBlock::Heis => heis3(),
            LieBlock::Filiform(n) => filiform(*n, &Scalar::zero())
                .expect("n is at least 1")
                .with_alpha(Matrix::identity(n + 1))
                .expect("square"),
            LieBlock::Abelian(k) => super::abelian(*k),
        }
    }

    fn endomorphism(&self, rng: &mut ChaCha8Rng) -> Matrix {
        match self {
            LieBlock::Sl2 => match rng.gen_range(0..4) {
                0 => Matrix::zeros(3, 3),
                1 => sl2_involution(rng),
                _ => sl2_inner(rng),
            },
            LieBlock::Heis => {
                let a = frac(rng.gen_range(-2..=2), 1);
                let b = frac(rng.gen_range(-2..=2), 1);
                let mut m = filiform_diagonal(2, &a, &b);
                if rng.gen_bool(0.5) {
                    m[(2, 0)] = nonzero_small(rng);
                }
                m
            }
            LieBlock::Filiform(n) => {
                let a = frac(rng.gen_range(-2..=2), 1);
                let b = frac(rng.gen_range(-2..=2), 1);
                filiform_diagonal(*n, &a, &b)
            }
            LieBlock::Abelian(k) => Matrix::from_fn(*k, *k, |_, _| frac(rng.gen_range(-2..=2), 1)),
        }
    }
}

fn lie_blocks(rng: &mut ChaCha8Rng, dim: usize) -> Vec<LieBlock> {
    let mut out = Vec::new();
    let mut left = dim;
    while left > 0 {
        let mut options: Vec<LieBlock> = vec![LieBlock::Abelian(rng.gen_range(1..=left.min(2)))];
        if left >= 3 {
            options.push(LieBlock::Sl2);
            options.push(LieBlock::Heis);
        }
        if left >= 4 {
            options.push(LieBlock::Filiform(rng.gen_range(3..left.min(6))));
        }
        let pick = options.swap_remove(rng.gen_range(0..options.len()));
        left -= match &pick {
            LieBlock::Sl2 | LieBlock::Heis => 3,
            LieBlock::Filiform(n) => n + 1,
            LieBlock::Abelian(k) => *k,
        };
        out.push(pick);
    }
    out
}

fn sum_algebras(blocks: &[HomAlgebra]) -> HomAlgebra {
    let mut it = blocks.iter();
    let first = it.next().expect("at least one block").clone();
    it.fold(first, |acc, b| acc.direct_sum(b))
}

fn quadratic_block(rng: &mut ChaCha8Rng, left: usize, involutive: bool) -> QuadraticHomAlgebra {
    let mut choices = vec![0];
    if left >= 3 {
        choices.extend([1, 1]);
    }
    if left >= 6 {
        choices.push(2);
    }
    match *choices.choose(rng).expect("nonempty") {
        1 => {
            let theta = sl2_involution(rng);
            let scaled = sl2();
            let c = nonzero_small(rng);
            let q = QuadraticHomAlgebra::new(scaled.algebra().clone(), scaled.form().scale(&c)).expect("scaled Killing form");
            quadratic_yau_twist(&q, &theta).expect("involutions of sl2 are symmetric automorphisms")
        }
        2 => {
            let n = if left >= 8 && rng.gen_bool(0.5) { 3 } else { 2 };
            let g = filiform(n, &Scalar::zero()).expect("valid").with_alpha(Matrix::identity(n + 1)).expect("square");
            let a = if involutive {
                filiform_involution(rng, n)
            } else {
                let mut a = Matrix::identity(n + 1);
                a[(n, 0)] = nonzero_small(rng);
                a
            };
            omega_extension(&g, &a).expect("center condition holds")
        }
        _ => {
            let k = rng.gen_range(1..=left.min(3));
            if !involutive && k == 2 && rng.gen_bool(0.3) {
                // Hyperbolic plane with a nilpotent symmetric twist.
                let form = BilinearForm::hyperbolic(1);
                let alpha = Matrix::from_i64(2, 2, &[0, 0, 1, 0]);
                return QuadraticHomAlgebra::new(HomAlgebra::abelian(alpha), form).expect("symmetric twist");
            }
            let gram = Matrix::diagonal(&(0..k).map(|_| nonzero_small(rng)).collect::<Vec<_>>());
            let diag: Vec<Scalar> = (0..k)
                .map(|_| {
                    if involutive {
                        sign(rng)
                    } else if rng.gen_bool(0.2) {
                        Scalar::zero()
                    } else {
                        nonzero_small(rng)
                    }
                })
                .collect();
            let form = BilinearForm::new(gram).expect("diagonal");
            QuadraticHomAlgebra::new(HomAlgebra::abelian(Matrix::diagonal(&diag)), form).expect("diagonal twist")
        }
    }
}

fn quadratic_instance(rng: &mut ChaCha8Rng, dim: usize, involutive: bool) -> QuadraticHomAlgebra {
    let mut left = dim;
    let mut acc: Option<QuadraticHomAlgebra> = None;
    while left > 0 {
        let block = quadratic_block(rng, left, involutive);
        left -= block.dim();
        acc = Some(match acc {
            None => block,
            Some(a) => a.orthogonal_sum(&block),
        });
    }
    acc.expect("dim is positive")
}

/// A deterministic instance of the given kind and dimension (`dim ≥ 1`).
pub fn random_instance(seed: u64, dim: usize, kind: InstanceKind) -> Result<Fixture, CatalogError> {
    if dim == 0 {
        return Err(CatalogError::BadParams("dimension must be at least 1".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let out = match kind {
        InstanceKind::Lie | InstanceKind::HomLie => {
            let blocks = lie_blocks(&mut rng, dim);
            let lie = sum_algebras(&blocks.iter().map(LieBlock::algebra).collect::<Vec<_>>());
            let g = if kind == InstanceKind::HomLie {
                let endos: Vec<Matrix> = blocks.iter().map(|b| b.endomorphism(&mut rng)).collect();
                let refs: Vec<&Matrix> = endos.iter().collect();
                yau_twist(&lie, &Matrix::block_diag(&refs))?
            } else {
                lie
            };
            let p = random_unimodular(&mut rng, dim);
            Fixture::Hom(g.change_basis(&p)?)
        }
        InstanceKind::Quadratic | InstanceKind::InvolutiveQuadratic => {
            let q = quadratic_instance(&mut rng, dim, kind == InstanceKind::InvolutiveQuadratic);
            let p = random_unimodular(&mut rng, dim);
            Fixture::Quadratic(q.change_basis(&p)?)
        }
    };
    Ok(out)
}
