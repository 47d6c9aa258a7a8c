mod common;

use common::{naive_norm, naive_rotate, orthogonal, random_weyl, rng, weyl_residual};
use weyl_pinch::weyl_space::{
    build_constraints, flatten_index, frame_rotate, is_algebraic_weyl, nullspace_basis,
    random_orthogonal, unflatten_index,
};
use weyl_pinch::{Error, Tensor4, WeylBasis};

#[test]
fn flat_index_matches_closed_form() {
    for n in 3..=6 {
        for i in 1..=n {
            for j in 1..=n {
                for k in 1..=n {
                    for l in 1..=n {
                        let expect = (i - 1) * n * n * n + (j - 1) * n * n + (k - 1) * n + (l - 1);
                        assert_eq!(flatten_index(i, j, k, l, n).unwrap(), expect);
                        assert_eq!(unflatten_index(expect, n).unwrap(), [i, j, k, l]);
                    }
                }
            }
        }
    }
    assert_eq!(flatten_index(5, 5, 5, 5, 5).unwrap(), 624);
    assert!(matches!(
        flatten_index(0, 1, 1, 1, 4),
        Err(Error::IndexOutOfRange { .. })
    ));
    assert!(flatten_index(1, 1, 1, 5, 4).is_err());
    assert!(unflatten_index(256, 4).is_err());
}

#[test]
fn nullspace_dimensions() {
    for (n, m) in [(3, 0), (4, 10), (5, 35), (6, 84), (7, 168)] {
        let basis = WeylBasis::for_dimension(n).unwrap();
        assert_eq!(basis.m(), m, "n = {n}");
        assert_eq!(
            basis.m(),
            n * n * (n * n - 1) / 12 - n * (n + 1) / 2,
            "n = {n}"
        );
        assert!(basis.orthonormality_defect() <= 1e-12);
    }
}

#[test]
fn basis_vectors_are_weyl_tensors() {
    for n in 4..=6 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        for v in basis.vectors() {
            let t = Tensor4::from_vec(n, v.to_vec()).unwrap();
            assert!(weyl_residual(&t) <= 1e-12);
            assert!((naive_norm(&t) - 1.0).abs() <= 1e-12);
        }
    }
}

#[test]
fn explicit_system_gives_same_subspace() {
    let system = build_constraints(5).unwrap();
    let basis = nullspace_basis(&system).unwrap();
    let reference = WeylBasis::for_dimension(5).unwrap();
    // every reference vector lies in the span of the other basis
    for v in reference.vectors() {
        let t = Tensor4::from_vec(5, v.to_vec()).unwrap();
        let back = basis.embed(&basis.project(&t).unwrap()).unwrap();
        assert!(t.sub(&back).unwrap().max_abs() <= 1e-12);
    }
}

#[test]
fn embed_project_roundtrip() {
    let mut g = rng(11);
    for n in 4..=6 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        let w = random_weyl(&basis, &mut g);
        let c = basis.project(&w).unwrap();
        assert!((c.norm() - naive_norm(&w)).abs() <= 1e-12 * c.norm());
        assert!(basis.embed(&c).unwrap().sub(&w).unwrap().max_abs() <= 1e-12);
        assert!(is_algebraic_weyl(&w, 1e-10).pass);
    }
}

#[test]
fn generic_tensor_is_rejected() {
    let t = Tensor4::random(4, &mut rng(3));
    let report = is_algebraic_weyl(&t, 1e-10);
    assert!(!report.pass);
    assert!(report.max_residual > 1e-3);
}

#[test]
fn frame_rotation_matches_full_summation() {
    let mut g = rng(5);
    for n in [4, 5] {
        let basis = WeylBasis::for_dimension(n).unwrap();
        let w = random_weyl(&basis, &mut g);
        let o = orthogonal(n, &mut g);
        let fast = frame_rotate(&w, &o).unwrap();
        assert!(fast.sub(&naive_rotate(&w, &o)).unwrap().max_abs() <= 1e-12);
        assert!(weyl_residual(&fast) <= 1e-12);
        let o2 = random_orthogonal(n, &mut g);
        assert!(frame_rotate(&w, &o2).is_ok());
    }
}

#[test]
fn zero_padding_stays_in_the_weyl_subspace() {
    let basis = WeylBasis::for_dimension(4).unwrap();
    let w = random_weyl(&basis, &mut rng(8));
    for extra in 1..=2 {
        let padded = w.zero_padded(extra);
        assert_eq!(padded.dim(), 4 + extra);
        assert!(weyl_residual(&padded) <= 1e-12);
        assert_eq!(naive_norm(&padded), naive_norm(&w));
        let big = WeylBasis::for_dimension(4 + extra).unwrap();
        let back = big.embed(&big.project(&padded).unwrap()).unwrap();
        assert!(back.sub(&padded).unwrap().max_abs() <= 1e-12);
    }
}
