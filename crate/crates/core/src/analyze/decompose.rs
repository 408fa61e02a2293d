use super::{bracket_of_subspaces, center, ideal_closure, invertible_on, is_ideal, nilpotent_on, require_multiplicative, AnalyzeError};
use crate::exactlin::{kernel_image_power, rational_eigenpairs, unit_vector, Subspace};
use crate::homalg::{is_multiplicative, QuadraticHomAlgebra};
use num_traits::Zero;

/// `g = I ⊕ J` with `α` nilpotent on `I = ker αⁿ` and invertible on
/// `J = im αⁿ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FittingSplit {
    pub i_part: Subspace,
    pub j_part: Subspace,
    /// Power at which the kernels stabilize.
    pub n: usize,
}

/// Fitting decomposition of a multiplicative quadratic algebra, with every
/// claimed property rechecked.
pub fn fitting_decomposition(q: &QuadraticHomAlgebra) -> Result<FittingSplit, AnalyzeError> {
    let g = q.algebra();
    require_multiplicative(g)?;
    let fp = kernel_image_power(g.alpha())?;
    let split = FittingSplit {
        i_part: fp.kernel,
        j_part: fp.image,
        n: fp.stable_n,
    };
    let fail = |m: &str| Err(AnalyzeError::VerificationFailed(m.into()));
    let (i, j) = (&split.i_part, &split.j_part);
    if !i.intersection(j)?.is_zero() || i.dim() + j.dim() != q.dim() {
        return fail("parts do not span the algebra");
    }
    if !is_ideal(g, i) || !is_ideal(g, j) {
        return fail("parts are not ideals");
    }
    if !bracket_of_subspaces(g, i, j).is_zero() {
        return fail("parts do not commute");
    }
    let b = q.form();
    if i.basis().iter().any(|x| j.basis().iter().any(|y| !b.eval(x, y).is_zero())) {
        return fail("parts are not orthogonal");
    }
    if !nilpotent_on(g.alpha(), i) || !invertible_on(g.alpha(), j) {
        return fail("twist has the wrong behaviour on a part");
    }
    Ok(split)
}

fn candidates(q: &QuadraticHomAlgebra) -> Vec<Subspace> {
    let g = q.algebra();
    let n = q.dim();
    let mut seeds = Vec::new();
    if is_multiplicative(g) {
        if let Ok(fp) = kernel_image_power(g.alpha()) {
            seeds.push(fp.kernel);
            seeds.push(fp.image);
        }
    }
    seeds.push(center(g));
    seeds.push(g.derived_ideal());
    if let Ok(pairs) = rational_eigenpairs(g.alpha()) {
        seeds.extend(pairs.into_iter().map(|(_, s)| s));
    }
    seeds.extend((0..n).map(|k| Subspace::span(n, &[unit_vector(n, k)])));
    let mut out: Vec<Subspace> = Vec::new();
    for s in seeds {
        let ideal = ideal_closure(g, &s);
        let perp = q.form().orthogonal(&ideal);
        for c in [ideal, perp] {
            if !out.contains(&c) {
                out.push(c);
            }
        }
    }
    out
}

fn find_split(q: &QuadraticHomAlgebra) -> Option<Subspace> {
    let g = q.algebra();
    candidates(q).into_iter().find(|c| {
        !c.is_zero() && !c.is_full() && is_ideal(g, c) && q.form().is_nondegenerate_on(c) && q.restrict(c).is_some()
    })
}

fn split_recursive(q: &QuadraticHomAlgebra) -> Vec<Subspace> {
    let n = q.dim();
    if n <= 1 {
        return vec![Subspace::full(n)];
    }
    let Some(ideal) = find_split(q) else {
        return vec![Subspace::full(n)];
    };
    let perp = q.form().orthogonal(&ideal);
    let mut out = Vec::new();
    for part in [ideal, perp] {
        let Some(sub) = q.restrict(&part) else {
            return vec![Subspace::full(n)];
        };
        let e = part.embedding();
        for local in split_recursive(&sub) {
            let vecs: Vec<_> = local.basis().iter().map(|v| e.mul_vec(v)).collect();
            out.push(Subspace::span(n, &vecs));
        }
    }
    out
}

/// Orthogonal decomposition into nondegenerate ideals, each irreducible
/// relative to the searched candidate family (Fitting parts, center,
/// derived ideal, twist eigenspaces and single basis vectors, all saturated
/// to ideals, plus their orthogonals). Each summand comes with the subspace
/// it occupies; summands are expressed in the canonical basis of that
/// subspace.
pub fn decompose_with_subspaces(q: &QuadraticHomAlgebra) -> Vec<(Subspace, QuadraticHomAlgebra)> {
    split_recursive(q)
        .into_iter()
        .map(|s| {
            let part = q.restrict(&s).expect("summands are nondegenerate ideals");
            (s, part)
        })
        .collect()
}

/// The summands of [`decompose_with_subspaces`].
pub fn decompose_irreducible(q: &QuadraticHomAlgebra) -> Vec<QuadraticHomAlgebra> {
    decompose_with_subspaces(q).into_iter().map(|(_, p)| p).collect()
}
