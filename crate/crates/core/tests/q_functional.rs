mod common;

use common::{naive_norm, naive_q, naive_rotate, orthogonal, random_weyl, rng};
use weyl_pinch::catalog::{fubini_study_riemann, space_form_riemann};
use weyl_pinch::q_functional::{q_report, q_value_direct, ratio_and_gradient};
use weyl_pinch::weyl_space::{inner, weyl_from_riemann};
use weyl_pinch::{q_gradient, q_value, ratio, Tensor4, WeylBasis, WeylCoords};

fn cp2_weyl() -> Tensor4 {
    weyl_from_riemann(&fubini_study_riemann(2, 4.0).unwrap()).unwrap()
}

#[test]
fn matches_naive_contraction() {
    let mut g = rng(21);
    for n in 4..=5 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        for _ in 0..3 {
            let w = random_weyl(&basis, &mut g);
            let oracle = naive_q(&w);
            assert!((q_value(&w) - oracle).abs() <= 1e-10 * oracle.abs().max(1.0));
            assert!((q_value_direct(&w) - oracle).abs() <= 1e-10 * oracle.abs().max(1.0));
        }
    }
}

#[test]
fn complex_projective_plane_attains_the_four_dimensional_constant() {
    let w = cp2_weyl();
    let r = q_report(&w).unwrap();
    // |W|² = 96 and Q = 24·96/4 = 576 with Ric = 6 g
    assert!((r.norm * r.norm - 96.0).abs() <= 1e-10);
    assert!((r.q - 576.0).abs() <= 1e-9);
    assert!((r.ratio - 6.0_f64.sqrt() / 4.0).abs() <= 1e-12);
    assert!((naive_q(&w) / naive_norm(&w).powi(3) - r.ratio).abs() <= 1e-12);
}

#[test]
fn mixed_orientation_tensor_has_zero_q() {
    let w = cp2_weyl();
    let mut reflect = vec![0.0; 16];
    for i in 0..4 {
        reflect[i * 4 + i] = if i == 3 { -1.0 } else { 1.0 };
    }
    let mixed = w.sub(&naive_rotate(&w, &reflect)).unwrap();
    assert!(naive_norm(&mixed) > 1.0);
    assert!(q_value(&mixed).abs() <= 1e-9);
}

#[test]
fn orthogonal_invariance() {
    let mut g = rng(22);
    for n in 4..=6 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        let w = random_weyl(&basis, &mut g);
        let rotated = naive_rotate(&w, &orthogonal(n, &mut g));
        assert!((q_value(&rotated) - q_value(&w)).abs() <= 1e-8 * q_value(&w).abs().max(1.0));
    }
}

#[test]
fn gradient_along_weyl_directions_matches_central_differences() {
    let mut g = rng(23);
    let h = 1e-4;
    for n in 4..=6 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        for _ in 0..5 {
            let w = random_weyl(&basis, &mut g);
            let analytic = basis.project(&q_gradient(&w)).unwrap();
            let scale = analytic.values.iter().fold(0.0_f64, |a, v| a.max(v.abs()));
            for i in 0..basis.m() {
                let dir = basis.embed(&WeylCoords::unit(basis.m(), i)).unwrap();
                let plus = w.add(&dir.scaled(h)).unwrap();
                let minus = w.sub(&dir.scaled(h)).unwrap();
                let fd = (q_value(&plus) - q_value(&minus)) / (2.0 * h);
                assert!(
                    (fd - analytic.values[i]).abs() <= 1e-6 * scale,
                    "n={n} i={i}"
                );
            }
        }
    }
}

#[test]
fn ratio_gradient_matches_central_differences() {
    let basis = WeylBasis::for_dimension(5).unwrap();
    let mut g = rng(24);
    let c = common::gaussian_coords(basis.m(), &mut g);
    let (_, grad) = ratio_and_gradient(&c, &basis).unwrap();
    let h = 1e-5;
    let f = |v: &WeylCoords| ratio(&basis.embed(v).unwrap()).unwrap();
    for i in 0..basis.m() {
        let mut plus = c.clone();
        plus.values[i] += h;
        let mut minus = c.clone();
        minus.values[i] -= h;
        let fd = (f(&plus) - f(&minus)) / (2.0 * h);
        assert!(
            (fd - grad.values[i]).abs() <= 1e-7,
            "i={i}: {fd} vs {}",
            grad.values[i]
        );
    }
}

#[test]
fn euler_identity() {
    let mut g = rng(25);
    for n in 4..=6 {
        let basis = WeylBasis::for_dimension(n).unwrap();
        let w = random_weyl(&basis, &mut g);
        let lhs = inner(&q_gradient(&w), &w).unwrap();
        assert!((lhs - 3.0 * q_value(&w)).abs() <= 1e-9 * lhs.abs().max(1.0));
    }
}

#[test]
fn space_forms_have_no_weyl_part() {
    let w = weyl_from_riemann(&space_form_riemann(5, 3.0).unwrap()).unwrap();
    assert!(w.max_abs() <= 1e-13);
    assert!(ratio(&w).is_err());
}
