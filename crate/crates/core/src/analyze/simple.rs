use super::{ideal_generators, spin};
use crate::exactlin::{frac, rational_eigenpairs, unit_vector, Matrix, Scalar, Subspace, Vector};
use crate::homalg::HomAlgebra;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed of the pseudorandom schedule used by [`simplicity_verdict`].
pub const SIMPLICITY_SEED: u64 = 0x484F4D21;

/// Largest dimension for which the associative envelope is computed.
const ENVELOPE_MAX_DIM: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    Simple,
    /// A proper nonzero ideal. For an abelian algebra with no such ideal the
    /// witness is the zero derived ideal.
    NotSimple(Subspace),
    /// No certificate found within the budget.
    Unknown,
}

fn random_vector(rng: &mut ChaCha8Rng, n: usize) -> Vector {
    (0..n).map(|_| frac(rng.gen_range(-5..=5), rng.gen_range(1..=3))).collect()
}

fn is_proper(s: &Subspace) -> bool {
    !s.is_zero() && !s.is_full()
}

/// Dimension of the associative algebra generated by `gens` and the
/// identity, stopping early at `n²`.
fn envelope_dim(gens: &[Matrix], n: usize) -> usize {
    let full = n * n;
    let mut rows: Vec<(usize, Vector)> = Vec::new();
    let mut queue = vec![Matrix::identity(n)];
    let flatten = |m: &Matrix| -> Vector { m.entries().to_vec() };
    let insert = |rows: &mut Vec<(usize, Vector)>, mut v: Vector| -> bool {
        for (p, row) in rows.iter() {
            if !v[*p].is_zero() {
                let c = v[*p].clone();
                for (x, r) in v.iter_mut().zip(row) {
                    if !r.is_zero() {
                        *x -= &c * r;
                    }
                }
            }
        }
        match v.iter().position(|x| !x.is_zero()) {
            None => false,
            Some(p) => {
                let inv = Scalar::one() / &v[p];
                for x in v.iter_mut() {
                    *x *= &inv;
                }
                rows.push((p, v));
                true
            }
        }
    };
    insert(&mut rows, flatten(&queue[0]));
    while let Some(a) = queue.pop() {
        for g in gens {
            let prod = g * &a;
            if insert(&mut rows, flatten(&prod)) {
                if rows.len() == full {
                    return full;
                }
                queue.push(prod);
            }
        }
    }
    rows.len()
}

/// Three-valued simplicity test.
///
/// Seeds (basis vectors, rational twist eigenvectors, the derived ideal and
/// `budget` pseudorandom vectors) are saturated to ideals; a proper one is
/// returned as a witness. Simplicity is certified when the operators `ad(x_i)`
/// and `α` generate the full matrix algebra, or by Norton's irreducibility
/// test on an element of that algebra with a one-dimensional eigenspace.
pub fn simplicity_verdict(g: &HomAlgebra, budget: usize) -> SimplicityVerdict {
    let n = g.dim();
    if n == 0 {
        return SimplicityVerdict::Unknown;
    }
    let gens = ideal_generators(g);
    let mut rng = ChaCha8Rng::seed_from_u64(SIMPLICITY_SEED);
    let mut seeds: Vec<Subspace> = (0..n).map(|k| Subspace::span(n, &[unit_vector(n, k)])).collect();
    if let Ok(pairs) = rational_eigenpairs(g.alpha()) {
        for (_, space) in pairs {
            seeds.extend(space.basis().into_iter().map(|v| Subspace::span(n, &[v])));
        }
    }
    let derived = g.derived_ideal();
    seeds.extend(derived.basis().into_iter().map(|v| Subspace::span(n, &[v])));
    seeds.push(derived.clone());
    for _ in 0..budget {
        seeds.push(Subspace::span(n, &[random_vector(&mut rng, n)]));
    }
    for s in &seeds {
        let c = spin(&gens, s);
        if is_proper(&c) {
            return SimplicityVerdict::NotSimple(c);
        }
    }
    if derived.is_zero() {
        return SimplicityVerdict::NotSimple(derived);
    }
    if n <= ENVELOPE_MAX_DIM && envelope_dim(&gens, n) == n * n {
        return SimplicityVerdict::Simple;
    }
    let transposed: Vec<Matrix> = gens.iter().map(Matrix::transpose).collect();
    let mut trials: Vec<Matrix> = gens.clone();
    for _ in 0..budget {
        let mut m = Matrix::zeros(n, n);
        for x in &gens {
            let c = frac(rng.gen_range(-3..=3), 1);
            m = &m + &x.scale(&c);
        }
        let k = rng.gen_range(0..gens.len());
        trials.push(&m * &gens[k]);
        trials.push(m);
    }
    for t in &trials {
        let Ok(pairs) = rational_eigenpairs(t) else { continue };
        for (lambda, space) in pairs {
            if space.dim() != 1 {
                continue;
            }
            let shifted = t - &Matrix::scalar(n, &lambda);
            let v = spin(&gens, &space);
            if is_proper(&v) {
                return SimplicityVerdict::NotSimple(v);
            }
            let dual_kernel = crate::exactlin::kernel(&shifted.transpose());
            let w = spin(&transposed, &dual_kernel);
            if is_proper(&w) {
                let u = w.annihilator();
                if is_proper(&u) && spin(&gens, &u) == u {
                    return SimplicityVerdict::NotSimple(u);
                }
                continue;
            }
            return SimplicityVerdict::Simple;
        }
    }
    SimplicityVerdict::Unknown
}
