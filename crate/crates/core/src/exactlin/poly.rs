//! Univariate rational polynomials: characteristic polynomials and exact
//! rational root finding.

use super::matrix::Matrix;
use super::scalar::{one, Scalar};
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Coefficients from the constant term upward; no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poly {
    coeffs: Vec<Scalar>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial has no degree.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = Scalar::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Scalar::from_integer(BigInt::from(i)))
                .collect(),
        )
    }

    /// Polynomial long division: `(quotient, remainder)`.
    pub fn div_rem(&self, divisor: &Poly) -> (Poly, Poly) {
        let dd = divisor.degree().expect("division by zero polynomial");
        let lead = divisor.leading().unwrap().clone();
        let mut rem = self.coeffs.clone();
        let mut quot = vec![Scalar::zero(); self.coeffs.len().saturating_sub(dd).max(1)];
        while rem.len() > dd && !rem.is_empty() {
            let shift = rem.len() - 1 - dd;
            let factor = rem.last().unwrap() / &lead;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                rem[shift + i] -= &factor * c;
            }
            quot[shift] = factor;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (Poly::new(quot), Poly::new(rem))
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            None => self.clone(),
            Some(l) => {
                let inv = l.recip();
                Poly::new(self.coeffs.iter().map(|c| c * &inv).collect())
            }
        }
    }

    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Same roots, each with multiplicity one.
    pub fn squarefree(&self) -> Poly {
        let g = self.gcd(&self.derivative());
        if g.degree() == Some(0) {
            self.monic()
        } else {
            self.div_rem(&g).0.monic()
        }
    }

    /// All distinct rational roots in increasing order.
    pub fn rational_roots(&self) -> Vec<Scalar> {
        let Some(deg) = self.degree() else {
            return Vec::new();
        };
        if deg == 0 {
            return Vec::new();
        }
        // Clear denominators to a primitive integer polynomial.
        let lcm = self
            .coeffs
            .iter()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
        let ints: Vec<BigInt> = self
            .coeffs
            .iter()
            .map(|c| (c * Scalar::from_integer(lcm.clone())).to_integer())
            .collect();
        let lead = ints[deg].clone();
        // Substitute t = s / lead: the result is a monic integer polynomial in
        // s, so every rational root s is an integer.
        let mut monic = Vec::with_capacity(deg + 1);
        let mut power = BigInt::one();
        let mut powers = vec![BigInt::one(); deg + 1];
        for p in powers.iter_mut().take(deg) {
            *p = power.clone();
            power *= &lead;
        }
        for (i, c) in ints.iter().enumerate() {
            if i == deg {
                monic.push(Scalar::one());
            } else {
                monic.push(Scalar::from_integer(c * &powers[deg - 1 - i]));
            }
        }
        let q = Poly::new(monic).squarefree();
        let bound: BigInt = q
            .coeffs
            .iter()
            .map(|c| c.abs().ceil().to_integer())
            .max()
            .unwrap_or_else(BigInt::zero)
            + 1;
        let sturm = SturmChain::new(&q);
        let mut roots = Vec::new();
        sturm.integer_roots(&(-&bound), &bound, &q, &mut roots);
        let lead = Scalar::from_integer(lead);
        let mut out: Vec<Scalar> = roots
            .into_iter()
            .map(|s| Scalar::from_integer(s) / &lead)
            .collect();
        out.sort();
        out
    }
}

struct SturmChain {
    chain: Vec<Poly>,
}

impl SturmChain {
    fn new(p: &Poly) -> Self {
        let mut chain = vec![p.clone(), p.derivative()];
        loop {
            let n = chain.len();
            if chain[n - 1].is_zero() {
                chain.pop();
                break;
            }
            let r = chain[n - 2].div_rem(&chain[n - 1]).1;
            if r.is_zero() {
                break;
            }
            chain.push(Poly::new(r.coeffs.iter().map(|c| -c).collect()));
        }
        SturmChain { chain }
    }

    fn variations(&self, x: &Scalar) -> usize {
        let mut count = 0;
        let mut last: Option<bool> = None;
        for p in &self.chain {
            let v = p.eval(x);
            if v.is_zero() {
                continue;
            }
            let pos = v.is_positive();
            if last.is_some_and(|l| l != pos) {
                count += 1;
            }
            last = Some(pos);
        }
        count
    }

    /// Integer roots in `[lo, hi]`. Evaluation points are half-integers,
    /// which are never roots of a monic integer polynomial.
    fn integer_roots(&self, lo: &BigInt, hi: &BigInt, p: &Poly, out: &mut Vec<BigInt>) {
        let half = Scalar::new(BigInt::one(), BigInt::from(2));
        let left = Scalar::from_integer(lo.clone()) - &half;
        let right = Scalar::from_integer(hi.clone()) + &half;
        let count = self.variations(&left) - self.variations(&right);
        if count == 0 {
            return;
        }
        if lo == hi {
            if p.eval(&Scalar::from_integer(lo.clone())).is_zero() {
                out.push(lo.clone());
            }
            return;
        }
        let mid = (lo + hi).div_floor(&BigInt::from(2));
        self.integer_roots(lo, &mid, p, out);
        self.integer_roots(&(mid + 1), hi, p, out);
    }
}

/// Characteristic polynomial `det(t·I − a)` by the Faddeev–LeVerrier recursion.
pub fn char_poly(a: &Matrix) -> Poly {
    assert!(a.is_square());
    let n = a.rows();
    let mut coeffs = vec![Scalar::zero(); n + 1];
    coeffs[n] = one();
    let mut m = Matrix::zeros(n, n);
    for k in 1..=n {
        let mut next = a * &m;
        for i in 0..n {
            next[(i, i)] += &coeffs[n - k + 1];
        }
        m = next;
        let am = a * &m;
        coeffs[n - k] = -am.trace() / Scalar::from_integer(BigInt::from(k));
    }
    Poly::new(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::scalar::{frac, int};

    fn p(xs: &[Scalar]) -> Poly {
        Poly::new(xs.to_vec())
    }

    #[test]
    fn roots_of_factored_polynomial() {
        // (t - 2)(3t + 1)(t^2 + 1) = 3t^4 - 5t^3 + t^2 - 5t - 2
        let q = p(&[int(-2), int(-5), int(1), int(-5), int(3)]);
        assert_eq!(q.rational_roots(), vec![frac(-1, 3), int(2)]);
    }

    #[test]
    fn repeated_and_zero_roots() {
        // t^2 (t - 1/2)^2
        let q = p(&[int(0), int(0), frac(1, 4), int(-1), int(1)]);
        assert_eq!(q.rational_roots(), vec![int(0), frac(1, 2)]);
    }

    #[test]
    fn irreducible_quadratic_has_no_roots() {
        assert!(p(&[int(1), int(0), int(1)]).rational_roots().is_empty());
        assert!(p(&[int(-2), int(0), int(1)]).rational_roots().is_empty());
    }

    #[test]
    fn char_poly_of_rotation() {
        let r = Matrix::from_i64(2, 2, &[0, -1, 1, 0]);
        assert_eq!(char_poly(&r), p(&[int(1), int(0), int(1)]));
    }

    #[test]
    fn char_poly_matches_determinant_at_sample_points() {
        let a = Matrix::from_i64(3, 3, &[1, 2, 0, -1, 3, 4, 2, 2, -5]);
        let cp = char_poly(&a);
        for t in [-2, 0, 1, 7] {
            let shifted = &Matrix::scalar(3, &int(t)) - &a;
            assert_eq!(cp.eval(&int(t)), shifted.determinant());
        }
    }
}
