use homlie::analyze::{
    decompose_with_subspaces, ideal_closure, is_ideal, orthogonal_ideal, recognize_double_extension,
    simplicity_verdict, SimplicityVerdict,
};
use homlie::build::{derived_hom_algebra, double_extension_1d, quadratic_derived, yau_twist, ExtensionData1D};
use homlie::catalog::{random_instance, random_unimodular, sl2, Fixture, InstanceKind};
use homlie::exactlin::{frac, Matrix, Scalar, Subspace};
use homlie::homalg::{
    check_hom_lie, check_quadratic, is_multiplicative, BilinearForm, HomAlgebra, QuadraticHomAlgebra,
};
use proptest::prelude::*;
use rand::SeedableRng;

fn quadratic(seed: u64, dim: usize, involutive: bool) -> QuadraticHomAlgebra {
    let kind = if involutive { InstanceKind::InvolutiveQuadratic } else { InstanceKind::Quadratic };
    match random_instance(seed, dim, kind).unwrap() {
        Fixture::Quadratic(q) => q,
        _ => unreachable!("quadratic kinds emit quadratic fixtures"),
    }
}

fn hom(seed: u64, dim: usize, kind: InstanceKind) -> HomAlgebra {
    random_instance(seed, dim, kind).unwrap().algebra().unwrap().clone()
}

fn rational() -> impl Strategy<Value = Scalar> {
    (-5i64..=5, 1i64..=3).prop_map(|(n, d)| frac(n, d))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn axioms_survive_change_of_basis(seed in 0u64..500, dim in 1usize..6, inv in any::<bool>()) {
        let q = quadratic(seed, dim, inv);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed ^ 0xbeef);
        let p = random_unimodular(&mut rng, dim);
        let moved = q.change_basis(&p).unwrap();
        prop_assert!(check_hom_lie(moved.algebra()).passed());
        prop_assert!(is_multiplicative(moved.algebra()));
        prop_assert!(moved.report().passed());
        let back = moved.change_basis(&p.inverse().unwrap()).unwrap();
        prop_assert_eq!(back, q);
    }

    #[test]
    fn yau_twists_of_lie_algebras(seed in 0u64..500, dim in 1usize..6) {
        let g = hom(seed, dim, InstanceKind::Lie);
        for alpha in [Matrix::identity(dim), Matrix::zeros(dim, dim)] {
            let h = yau_twist(&g, &alpha).unwrap();
            prop_assert!(check_hom_lie(&h).passed());
            prop_assert!(is_multiplicative(&h));
        }
        // c·id respects c[x, y] = c²[x, y] only when the bracket vanishes.
        let scaled = yau_twist(&g, &Matrix::scalar(dim, &frac(3, 2)));
        prop_assert_eq!(scaled.is_ok(), g.is_abelian());
        if let Ok(h) = scaled {
            prop_assert!(check_hom_lie(&h).passed());
        }
    }

    #[test]
    fn derived_algebras(seed in 0u64..500, dim in 1usize..6, n in 0usize..3) {
        let g = hom(seed, dim, InstanceKind::HomLie);
        let d = derived_hom_algebra(&g, n).unwrap();
        prop_assert!(check_hom_lie(&d).passed());
        let q = quadratic(seed, dim, false);
        if q.alpha().is_invertible() {
            let dq = quadratic_derived(&q, n).unwrap();
            prop_assert!(dq.report().passed());
        }
    }

    #[test]
    fn orthogonal_of_an_ideal(seed in 0u64..500, dim in 2usize..7, pick in 0usize..7) {
        let q = quadratic(seed, dim, seed % 2 == 0);
        let g = q.algebra();
        let seed_space = Subspace::coordinate(dim, &[pick % dim]);
        let i = ideal_closure(g, &seed_space);
        prop_assert!(is_ideal(g, &i));
        let perp = orthogonal_ideal(&q, &i).unwrap();
        prop_assert!(is_ideal(g, &perp));
        prop_assert_eq!(i.dim() + perp.dim(), dim);
        prop_assert_eq!(orthogonal_ideal(&q, &perp).unwrap(), i);
    }

    #[test]
    fn decomposition_reassembles(seed in 0u64..500, dim in 1usize..7) {
        let q = quadratic(seed, dim, seed % 3 == 0);
        let parts = decompose_with_subspaces(&q);
        let mut total = Subspace::zero(dim);
        for (k, (s, piece)) in parts.iter().enumerate() {
            prop_assert!(!s.is_zero());
            prop_assert!(is_ideal(q.algebra(), s));
            prop_assert!(q.form().is_nondegenerate_on(s));
            prop_assert!(piece.report().passed());
            prop_assert_eq!(piece.dim(), s.dim());
            for (t, _) in &parts[k + 1..] {
                for x in s.basis() {
                    for y in t.basis() {
                        prop_assert!(q.form().eval(&x, &y) == frac(0, 1));
                    }
                }
            }
            total = total.sum(s).unwrap();
        }
        prop_assert!(total.is_full());
    }

    #[test]
    fn simplicity_witnesses_are_proper_ideals(seed in 0u64..500, dim in 1usize..7, k in 0usize..3) {
        let kind = [InstanceKind::Lie, InstanceKind::HomLie, InstanceKind::Quadratic][k];
        let g = hom(seed, dim, kind);
        match simplicity_verdict(&g, 6) {
            SimplicityVerdict::NotSimple(w) => {
                prop_assert!(!w.is_full());
                prop_assert!(!w.is_zero() || g.is_abelian());
                prop_assert!(is_ideal(&g, &w));
                prop_assert_eq!(ideal_closure(&g, &w), w);
            }
            SimplicityVerdict::Simple => {
                prop_assert!(!g.is_abelian());
                for i in 0..dim {
                    prop_assert!(ideal_closure(&g, &Subspace::coordinate(dim, &[i])).is_full());
                }
            }
            SimplicityVerdict::Unknown => {}
        }
    }

    #[test]
    fn recognition_inverts_extension(
        entries in proptest::collection::vec(rational(), 3),
        form in proptest::collection::vec(rational().prop_filter("nonzero", |x| *x != frac(0, 1)), 3),
        offset_scale in rational(),
        e_component in rational(),
    ) {
        // sl2 with an inner derivation, plus a one-dimensional central part.
        let ab = QuadraticHomAlgebra::new(
            HomAlgebra::abelian(Matrix::identity(1)),
            BilinearForm::new(Matrix::diagonal(&form[..1])).unwrap(),
        ).unwrap();
        let base = sl2().orthogonal_sum(&ab);
        let delta = Matrix::block_diag(&[&sl2().algebra().ad_of(&entries), &Matrix::zeros(1, 1)]);
        let data = ExtensionData1D {
            derivation: delta,
            offset: vec![frac(0, 1), frac(0, 1), frac(0, 1), offset_scale],
            eigenvalue: frac(1, 1),
            e_component,
        };
        let q = double_extension_1d(&base, &data).unwrap();
        prop_assert!(check_quadratic(q.algebra(), q.form()).unwrap().passed());
        let w = recognize_double_extension(&q).unwrap();
        let rebuilt = double_extension_1d(&w.base, &w.data).unwrap();
        prop_assert_eq!(rebuilt, q.change_basis(&w.change_of_basis).unwrap());
    }
}
