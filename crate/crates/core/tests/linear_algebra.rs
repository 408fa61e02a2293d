use homlie::exactlin::{
    char_poly, format_scalar, frac, image, kernel, kernel_image_power, parse_scalar, rational_eigenpairs, solve_linear,
    Matrix, Scalar, Subspace,
};
use num_traits::Zero;
use proptest::prelude::*;

fn rational() -> impl Strategy<Value = Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(n, d)| frac(n, d))
}

fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), rows * cols)
        .prop_map(move |v| Matrix::from_fn(rows, cols, |r, c| v[r * cols + c].clone()))
}

fn square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| matrix(n, n))
}

/// Mostly-sparse square matrices, so singular cases are common.
fn sparse_square() -> impl Strategy<Value = Matrix> {
    (1usize..=5).prop_flat_map(|n| {
        proptest::collection::vec(prop_oneof![3 => Just(frac(0, 1)), 1 => rational()], n * n)
            .prop_map(move |v| Matrix::from_fn(n, n, |r, c| v[r * n + c].clone()))
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn scalar_text_roundtrip(x in rational()) {
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn rank_nullity(a in sparse_square()) {
        let k = kernel(&a);
        prop_assert_eq!(k.dim() + a.rank(), a.cols());
        for v in k.basis() {
            prop_assert!(a.mul_vec(&v).iter().all(Zero::is_zero));
        }
        prop_assert_eq!(image(&a).dim(), a.rank());
    }

    #[test]
    fn inverse_is_two_sided(a in square()) {
        match a.inverse() {
            Some(inv) => {
                prop_assert!((&a * &inv).is_identity());
                prop_assert!((&inv * &a).is_identity());
                prop_assert!(!a.determinant().is_zero());
            }
            None => prop_assert!(a.determinant().is_zero()),
        }
    }

    #[test]
    fn solutions_satisfy_the_system(a in square(), x in matrix(5, 2)) {
        let n = a.cols();
        let x = x.submatrix(&(0..n).collect::<Vec<_>>(), &[0, 1]);
        let b = &a * &x;
        let y = solve_linear(&a, &b).unwrap();
        prop_assert_eq!(&a * &y, b);
    }

    #[test]
    fn subspace_dimension_formula(vs in proptest::collection::vec(proptest::collection::vec(rational(), 4), 0..4),
                                  ws in proptest::collection::vec(proptest::collection::vec(rational(), 4), 0..4)) {
        let u = Subspace::span(4, &vs);
        let w = Subspace::span(4, &ws);
        let sum = u.sum(&w).unwrap();
        let cap = u.intersection(&w).unwrap();
        prop_assert_eq!(sum.dim() + cap.dim(), u.dim() + w.dim());
        prop_assert!(sum.contains(&u).unwrap() && u.contains(&cap).unwrap() && w.contains(&cap).unwrap());
        prop_assert_eq!(u.annihilator().dim(), 4 - u.dim());
    }

    #[test]
    fn cayley_hamilton(a in square()) {
        let p = char_poly(&a);
        let n = a.rows();
        let mut acc = Matrix::zeros(n, n);
        for c in p.coeffs().iter().rev() {
            acc = &(&acc * &a) + &Matrix::scalar(n, c);
        }
        prop_assert!(acc.is_zero());
    }

    #[test]
    fn eigenpairs_are_eigenpairs(a in sparse_square()) {
        for (lam, space) in rational_eigenpairs(&a).unwrap() {
            prop_assert!(!space.is_zero());
            for v in space.basis() {
                let av = a.mul_vec(&v);
                prop_assert!(av.iter().zip(&v).all(|(x, y)| *x == &lam * y));
            }
        }
    }

    #[test]
    fn fitting_powers_split_the_space(a in sparse_square()) {
        let fp = kernel_image_power(&a).unwrap();
        let n = a.rows();
        prop_assert_eq!(fp.kernel.dim() + fp.image.dim(), n);
        prop_assert!(fp.kernel.intersection(&fp.image).unwrap().is_zero());
        prop_assert!(fp.kernel.is_invariant_under(&a) && fp.image.is_invariant_under(&a));
    }
}
