use super::*;
use crate::build::{double_extension_1d, tstar_extension, ExtensionData1D};
use crate::catalog::{abelian, filiform, heis3, sl2, sl_n_transpose, swap_twisted_sl_n};
use crate::exactlin::{int, unit_vector};
use crate::homalg::check_quadratic;

fn abelian_with_form(alpha: Matrix, gram: Matrix) -> QuadraticHomAlgebra {
    QuadraticHomAlgebra::new(HomAlgebra::abelian(alpha), BilinearForm::new(gram).unwrap()).unwrap()
}

fn twisted_sl2() -> QuadraticHomAlgebra {
    sl_n_transpose(2).unwrap()
}

#[test]
fn centers() {
    assert!(center(&abelian(3)).is_full());
    let f = filiform(4, &int(1)).unwrap();
    assert_eq!(center(&f), Subspace::span(5, &[unit_vector(5, 4)]));
    assert!(center(sl2().algebra()).is_zero());
}

#[test]
fn centroids() {
    assert_eq!(centroid(&abelian(2)).dim(), 4);
    let s = centroid(sl2().algebra());
    assert_eq!(s.dim(), 1);
    assert!(centroid_matrices(sl2().algebra())[0].is_identity());
    let sum = sl2().algebra().direct_sum(&abelian(1));
    assert!(centroid(&sum).dim() >= 2);
}

#[test]
fn closures() {
    let f = filiform(4, &int(1)).unwrap();
    assert!(ideal_closure(&f, &Subspace::zero(5)).is_zero());
    assert!(ideal_closure(&f, &Subspace::full(5)).is_full());
    let c = ideal_closure(&f, &Subspace::span(5, &[unit_vector(5, 1)]));
    assert_eq!(c, Subspace::coordinate(5, &[1, 2, 3, 4]));
}

#[test]
fn orthogonal_of_dual_part() {
    let t = tstar_extension(&heis3()).unwrap();
    let dual = Subspace::coordinate(6, &[3, 4, 5]);
    assert_eq!(orthogonal_ideal(&t, &dual).unwrap(), dual);
    assert!(orthogonal_ideal(&t, &Subspace::zero(6)).unwrap().is_full());
    assert!(orthogonal_ideal(&t, &Subspace::full(6)).unwrap().is_zero());
    let not_ideal = Subspace::coordinate(6, &[0]);
    assert_eq!(orthogonal_ideal(&t, &not_ideal), Err(AnalyzeError::NotAnIdeal));
}

#[test]
fn fitting_cases() {
    let q = twisted_sl2();
    let s = fitting_decomposition(&q).unwrap();
    assert!(s.i_part.is_zero() && s.j_part.is_full());
    let nil = abelian_with_form(Matrix::from_i64(2, 2, &[0, 0, 1, 0]), Matrix::from_i64(2, 2, &[0, 1, 1, 0]));
    let s = fitting_decomposition(&nil).unwrap();
    assert!(s.i_part.is_full() && s.j_part.is_zero());
    let both = nil.orthogonal_sum(&q);
    let s = fitting_decomposition(&both).unwrap();
    assert_eq!(s.i_part, Subspace::coordinate(5, &[0, 1]));
    assert_eq!(s.j_part, Subspace::coordinate(5, &[2, 3, 4]));
}

#[test]
fn decompositions() {
    let q = twisted_sl2();
    assert_eq!(decompose_irreducible(&q).len(), 1);
    let ab = abelian_with_form(Matrix::identity(2), Matrix::identity(2));
    let sum = q.orthogonal_sum(&ab);
    let parts = decompose_with_subspaces(&sum);
    assert!(parts.len() >= 2);
    let dims: usize = parts.iter().map(|(s, _)| s.dim()).sum();
    assert_eq!(dims, 5);
    let one = abelian_with_form(Matrix::identity(1), Matrix::identity(1));
    assert_eq!(decompose_irreducible(&one).len(), 1);
}

#[test]
fn simplicity() {
    assert_eq!(simplicity_verdict(twisted_sl2().algebra(), 4), SimplicityVerdict::Simple);
    assert_eq!(simplicity_verdict(swap_twisted_sl_n(2).unwrap().algebra(), 4), SimplicityVerdict::Simple);
    let g = abelian(3);
    match simplicity_verdict(&g, 4) {
        SimplicityVerdict::NotSimple(w) => assert!(!w.is_zero() && !w.is_full() && is_ideal(&g, &w)),
        v => panic!("{v:?}"),
    }
    let f = filiform(4, &int(1)).unwrap();
    match simplicity_verdict(&f, 4) {
        SimplicityVerdict::NotSimple(w) => assert!(!w.is_zero() && !w.is_full() && is_ideal(&f, &w)),
        v => panic!("{v:?}"),
    }
}

#[test]
fn norton_path_certifies_swapped_sl3_pair() {
    // Dimension 16 is past the envelope bound.
    let q = swap_twisted_sl_n(3).unwrap();
    assert_eq!(simplicity_verdict(q.algebra(), 8), SimplicityVerdict::Simple);
}

#[test]
fn solvability() {
    assert!(is_solvable(&abelian(3), None).unwrap());
    assert!(is_solvable(&filiform(5, &int(1)).unwrap(), None).unwrap());
    assert!(!is_solvable(sl2().algebra(), None).unwrap());
    let g = sl2().algebra().clone();
    let h = Subspace::coordinate(3, &[0]);
    assert!(is_solvable(&g, Some(&h)).unwrap());
    let not_sub = Subspace::coordinate(3, &[1, 2]);
    assert_eq!(is_solvable(&g, Some(&not_sub)), Err(AnalyzeError::NotSubalgebra));
}

#[test]
fn radicals() {
    assert!(radical_involutive(twisted_sl2().algebra()).unwrap().is_zero());
    assert!(radical_involutive(&abelian(3)).unwrap().is_full());
    let swap = HomAlgebra::abelian(Matrix::from_i64(2, 2, &[0, 1, 1, 0]));
    let g = twisted_sl2().algebra().direct_sum(&swap);
    assert_eq!(radical_involutive(&g).unwrap(), Subspace::coordinate(5, &[3, 4]));
    let not_inv = HomAlgebra::abelian(Matrix::scalar(2, &int(2)));
    assert_eq!(radical_involutive(&not_inv), Err(AnalyzeError::NotInvolutive));
}

#[test]
fn trace_forms() {
    assert!(trace_form(&abelian(2)).gram().is_zero());
    assert_eq!(trace_form(sl2().algebra()).gram(), sl2().form().gram());
    let q = twisted_sl2();
    let b = trace_form(q.algebra());
    let theta = q.alpha();
    assert_eq!(b.gram(), &(sl2().form().gram() * theta));
    assert!(check_quadratic(q.algebra(), &b).unwrap().passed());
}

#[test]
fn recognize_roundtrip_on_abelian_base() {
    let base = abelian_with_form(Matrix::identity(2), Matrix::identity(2));
    let data = ExtensionData1D {
        derivation: Matrix::from_i64(2, 2, &[0, 1, -1, 0]),
        offset: vec![int(0), int(0)],
        eigenvalue: int(1),
        e_component: int(0),
    };
    let q = double_extension_1d(&base, &data).unwrap();
    let w = recognize_double_extension(&q).unwrap();
    let rebuilt = double_extension_1d(&w.base, &w.data).unwrap();
    assert_eq!(&rebuilt, &q.change_basis(&w.change_of_basis).unwrap());
}

#[test]
fn recognize_errors() {
    assert_eq!(recognize_double_extension(&twisted_sl2()).unwrap_err(), AnalyzeError::CenterTrivial);
    let rot = abelian_with_form(Matrix::from_i64(2, 2, &[0, -1, 1, 0]), Matrix::from_i64(2, 2, &[1, 0, 0, -1]));
    let q = twisted_sl2().orthogonal_sum(&rot);
    assert_eq!(recognize_double_extension(&q).unwrap_err(), AnalyzeError::NoRationalCentralEigenvector);
    let aniso = abelian_with_form(Matrix::identity(3), Matrix::identity(3));
    assert_eq!(recognize_double_extension(&aniso).unwrap_err(), AnalyzeError::NoIsotropicCentralVector);
}

#[test]
fn centerless_involution() {
    assert!(verify_centerless_involution(&twisted_sl2()).unwrap());
    assert!(verify_centerless_involution(&swap_twisted_sl_n(2).unwrap()).unwrap());
    let ab = abelian_with_form(Matrix::identity(1), Matrix::identity(1));
    assert!(matches!(verify_centerless_involution(&ab), Err(AnalyzeError::PreconditionFailed(_))));
}
