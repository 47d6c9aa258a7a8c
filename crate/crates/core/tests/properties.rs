mod common;

use std::sync::OnceLock;

use common::{naive_rotate, orthogonal, weyl_residual};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use weyl_pinch::catalog::{
    einstein_product, product_riemann, summarize, FactorKind, ProductFactor,
};
use weyl_pinch::constants::pinching_constant;
use weyl_pinch::weyl_space::{flatten_index, inner, unflatten_index};
use weyl_pinch::{q_gradient, q_value, ratio, ratio_gradient, Tensor4, WeylBasis, WeylCoords};

fn basis(n: usize) -> &'static WeylBasis {
    static CACHE: [OnceLock<WeylBasis>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    CACHE[n - 4].get_or_init(|| WeylBasis::for_dimension(n).unwrap())
}

/// Dimension together with Weyl coordinates of matching length.
fn weyl_coords() -> impl Strategy<Value = (usize, WeylCoords)> {
    (4usize..=6)
        .prop_flat_map(|n| {
            let m = basis(n).m();
            (
                Just(n),
                prop::collection::vec(-1.0f64..1.0, m).prop_map(WeylCoords::new),
            )
        })
        .prop_filter("nonzero tensor", |(_, c)| c.norm() > 1e-3)
}

fn embed(n: usize, c: &WeylCoords) -> Tensor4 {
    basis(n).embed(c).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn flat_index_bijection(n in 3usize..=7, x in 0usize..2401) {
        prop_assume!(x < n.pow(4));
        let [i, j, k, l] = unflatten_index(x, n).unwrap();
        prop_assert_eq!(flatten_index(i, j, k, l, n).unwrap(), x);
    }

    #[test]
    fn embedded_coordinates_satisfy_constraints((n, c) in weyl_coords()) {
        let w = embed(n, &c);
        prop_assert!(weyl_residual(&w) <= 1e-12 * c.norm().max(1.0));
    }

    #[test]
    fn ratio_respects_pinching_constant((n, c) in weyl_coords()) {
        let r = ratio(&embed(n, &c)).unwrap();
        prop_assert!(r.abs() <= pinching_constant(n).unwrap() + 1e-9);
    }

    #[test]
    fn cubic_homogeneity((n, c) in weyl_coords(), s in -5.0f64..5.0) {
        let w = embed(n, &c);
        let q = q_value(&w);
        let scaled = q_value(&w.scaled(s));
        prop_assert!((scaled - s.powi(3) * q).abs() <= 1e-10 * (1.0 + s.abs().powi(3)) * q.abs().max(1.0));
    }

    #[test]
    fn ratio_is_scale_invariant((n, c) in weyl_coords(), s in 0.01f64..100.0) {
        let w = embed(n, &c);
        prop_assert!((ratio(&w.scaled(s)).unwrap() - ratio(&w).unwrap()).abs() <= 1e-12);
        prop_assert!((ratio(&w.scaled(-s)).unwrap() + ratio(&w).unwrap()).abs() <= 1e-12);
    }

    #[test]
    fn euler_identity((n, c) in weyl_coords()) {
        let w = embed(n, &c);
        let lhs = inner(&q_gradient(&w), &w).unwrap();
        prop_assert!((lhs - 3.0 * q_value(&w)).abs() <= 1e-9 * lhs.abs().max(1.0));
    }

    #[test]
    fn orthogonal_invariance((n, c) in weyl_coords(), seed in any::<u64>()) {
        let w = embed(n, &c);
        let o = orthogonal(n, &mut ChaCha8Rng::seed_from_u64(seed));
        let rotated = naive_rotate(&w, &o);
        prop_assert!((q_value(&rotated) - q_value(&w)).abs() <= 1e-8 * q_value(&w).abs().max(1.0));
    }

    #[test]
    fn ratio_gradient_is_tangent((n, c) in weyl_coords()) {
        let g = ratio_gradient(&c, basis(n)).unwrap();
        let along: f64 = g.values.iter().zip(&c.values).map(|(a, b)| a * b).sum();
        prop_assert!(along.abs() <= 1e-10 * g.norm().max(1.0) * c.norm());
    }
}

fn product_kinds() -> impl Strategy<Value = Vec<FactorKind>> {
    prop::sample::select(vec![
        vec![FactorKind::Sphere(2), FactorKind::Sphere(3)],
        vec![FactorKind::Sphere(2), FactorKind::Sphere(4)],
        vec![FactorKind::Sphere(3), FactorKind::Sphere(3)],
        vec![FactorKind::ComplexProjective(2), FactorKind::Sphere(2)],
        vec![
            FactorKind::Sphere(2),
            FactorKind::Sphere(2),
            FactorKind::Sphere(3),
        ],
    ])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn model_invariants_under_global_rescaling(kinds in product_kinds(), c in 0.1f64..10.0) {
        let unit = einstein_product(&kinds).unwrap();
        let scaled: Vec<ProductFactor> = unit
            .iter()
            .map(|f| ProductFactor::new(f.kind, f.scale * c).unwrap())
            .collect();
        let a = summarize(&product_riemann(&unit).unwrap()).unwrap();
        let b = summarize(&product_riemann(&scaled).unwrap()).unwrap();
        let expected = a.rescaled(c);
        let close = |x: f64, y: f64| (x - y).abs() <= 1e-11 * y.abs().max(1.0);
        prop_assert!(close(b.scalar, expected.scalar));
        prop_assert!(close(b.weyl_norm_sq, expected.weyl_norm_sq));
        prop_assert!(close(b.q, expected.q));
        prop_assert!(close(b.c_m.unwrap(), a.c_m.unwrap()));
        prop_assert!(close(b.a_m.unwrap(), a.a_m.unwrap()));
    }
}
