//! The cubic invariant `Q(W) = 2 W_pqrs W_ptru W_qtsu + ½ W_pqrs W_pqtu W_rstu`,
//! its gradient and the scale-invariant ratio `Q/|W|³`.
//!
//! Both contraction patterns are evaluated as products of `n² × n²`
//! matrices: `M[(ab),(cd)] = W_abcd` (the flat layout itself) and the
//! regrouping `P[(ac),(bd)] = W_abcd`. The gradient treats all `n⁴`
//! components as independent variables, so each cubic term contributes one
//! product per factor it is differentiated in.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::weyl_space::{norm_sq, Tensor4, WeylBasis, WeylCoords};

/// Norms at or below this are rejected by the ratio functions.
pub const MIN_NORM: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QReport {
    pub q: f64,
    pub norm: f64,
    pub ratio: f64,
}

/// `out = X Yᵀ` for square `size × size` row-major matrices.
fn mul_transposed(x: &[f64], y: &[f64], size: usize) -> Vec<f64> {
    let mut out = vec![0.0; size * size];
    for (r, xr) in x.chunks_exact(size).enumerate() {
        for (c, yc) in y.chunks_exact(size).enumerate() {
            out[r * size + c] = xr.iter().zip(yc).map(|(a, b)| a * b).sum();
        }
    }
    out
}

fn transpose(x: &[f64], size: usize) -> Vec<f64> {
    let mut out = vec![0.0; size * size];
    for r in 0..size {
        for c in 0..size {
            out[c * size + r] = x[r * size + c];
        }
    }
    out
}

/// Swaps the middle two slots: `P[(ac),(bd)] = W_abcd`. An involution.
fn swap_middle(w: &[f64], n: usize) -> Vec<f64> {
    let mut out = vec![0.0; w.len()];
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    out[((a * n + c) * n + b) * n + d] = w[((a * n + b) * n + c) * n + d];
                }
            }
        }
    }
    out
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// `Q(W)` as written, with no symmetry assumed.
pub fn q_value(w: &Tensor4) -> f64 {
    let n = w.dim();
    let size = n * n;
    let m = w.as_slice();
    let p = swap_middle(m, n);
    // Σ_tu W_ptru W_qtsu, laid out as P-indices (pr),(qs)
    let first = swap_middle(&mul_transposed(&p, &p, size), n);
    // Σ_tu W_pqtu W_rstu
    let second = mul_transposed(m, m, size);
    2.0 * dot(m, &first) + 0.5 * dot(m, &second)
}

/// Plain six-fold summation of both patterns. Reference for [`q_value`].
pub fn q_value_direct(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut first = 0.0;
    let mut second = 0.0;
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    let wpqrs = w.get(p, q, r, s);
                    if wpqrs == 0.0 {
                        continue;
                    }
                    let mut a = 0.0;
                    let mut b = 0.0;
                    for t in 0..n {
                        for u in 0..n {
                            a += w.get(p, t, r, u) * w.get(q, t, s, u);
                            b += w.get(p, q, t, u) * w.get(r, s, t, u);
                        }
                    }
                    first += wpqrs * a;
                    second += wpqrs * b;
                }
            }
        }
    }
    2.0 * first + 0.5 * second
}

/// Ambient gradient `∂Q/∂W_abcd` with all components independent.
pub fn q_gradient(w: &Tensor4) -> Tensor4 {
    let n = w.dim();
    let size = n * n;
    let m = w.as_slice();
    let mt = transpose(m, size);
    let p = swap_middle(m, n);
    let pt = transpose(&p, size);

    // derivative of W_pqrs W_ptru W_qtsu, one term per factor, in P layout
    let mut first = mul_transposed(&p, &p, size);
    for (acc, v) in first.iter_mut().zip(mul_transposed(&p, &pt, size)) {
        *acc += v;
    }
    for (acc, v) in first.iter_mut().zip(mul_transposed(&pt, &pt, size)) {
        *acc += v;
    }
    let first = swap_middle(&first, n);

    // derivative of W_pqrs W_pqtu W_rstu, in M layout
    let mut second = mul_transposed(m, m, size);
    for (acc, v) in second.iter_mut().zip(mul_transposed(m, &mt, size)) {
        *acc += v;
    }
    for (acc, v) in second.iter_mut().zip(mul_transposed(&mt, &mt, size)) {
        *acc += v;
    }

    let data = first
        .iter()
        .zip(&second)
        .map(|(a, b)| 2.0 * a + 0.5 * b)
        .collect();
    Tensor4::from_vec(n, data).expect("gradient has the input's shape")
}

pub fn q_report(w: &Tensor4) -> Result<QReport> {
    let norm = norm_sq(w).sqrt();
    if norm <= MIN_NORM {
        return Err(Error::UndefinedRatio { norm });
    }
    let q = q_value(w);
    Ok(QReport {
        q,
        norm,
        ratio: q / norm.powi(3),
    })
}

/// `Q/|W|³`; invariant under positive rescaling of `w`.
pub fn ratio(w: &Tensor4) -> Result<f64> {
    q_report(w).map(|r| r.ratio)
}

/// Ratio and its coordinate gradient at `coords`.
///
/// With `w = Σ c_i b_i` and an orthonormal basis, `|w| = |c|` and
/// `∂/∂c_i (Q/|c|³) = ⟨∇Q, b_i⟩/|c|³ − 3 Q c_i/|c|⁵`. The result is
/// orthogonal to `coords` (degree-zero homogeneity).
pub fn ratio_and_gradient(coords: &WeylCoords, basis: &WeylBasis) -> Result<(f64, WeylCoords)> {
    let norm = coords.norm();
    if norm <= MIN_NORM {
        return Err(Error::UndefinedRatio { norm });
    }
    let w = basis.embed(coords)?;
    let q = q_value(&w);
    let g = basis.project(&q_gradient(&w))?;
    let n3 = norm.powi(3);
    let n5 = n3 * norm * norm;
    let values = g
        .values
        .iter()
        .zip(&coords.values)
        .map(|(gi, ci)| gi / n3 - 3.0 * q * ci / n5)
        .collect();
    Ok((q / n3, WeylCoords::new(values)))
}

pub fn ratio_gradient(coords: &WeylCoords, basis: &WeylBasis) -> Result<WeylCoords> {
    ratio_and_gradient(coords, basis).map(|(_, g)| g)
}

/// Central differences of `Q` along each basis direction at `w`: an
/// independent estimate of `basis.project(q_gradient(w))`.
pub fn coordinate_gradient_fd(w: &Tensor4, basis: &WeylBasis, h: f64) -> Result<WeylCoords> {
    if w.dim() != basis.dim() {
        return Err(Error::DimensionMismatch {
            expected: basis.dim(),
            found: w.dim(),
        });
    }
    if h.is_nan() || h <= 0.0 {
        return Err(Error::InvalidArgument(format!(
            "step must be positive, got {h}"
        )));
    }
    let values = basis
        .vectors()
        .map(|b| {
            let shift = |sign: f64| {
                let data = w
                    .as_slice()
                    .iter()
                    .zip(b)
                    .map(|(x, v)| x + sign * h * v)
                    .collect();
                q_value(&Tensor4::from_vec(w.dim(), data).expect("same shape"))
            };
            (shift(1.0) - shift(-1.0)) / (2.0 * h)
        })
        .collect();
    Ok(WeylCoords::new(values))
}

/// `max_i |a_i − b_i| / max_i |b_i|`.
pub fn relative_deviation(a: &WeylCoords, b: &WeylCoords) -> f64 {
    let scale = b.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    let diff = a
        .values
        .iter()
        .zip(&b.values)
        .fold(0.0_f64, |m, (x, y)| m.max((x - y).abs()));
    if scale == 0.0 {
        diff
    } else {
        diff / scale
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn random_weyl(basis: &WeylBasis, seed: u64) -> Tensor4 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let c = (0..basis.m())
            .map(|_| StandardNormal.sample(&mut rng))
            .collect();
        basis.embed(&WeylCoords::new(c)).unwrap()
    }

    #[test]
    fn zero_tensor() {
        let z = Tensor4::zeros(5);
        assert_eq!(q_value(&z), 0.0);
        assert_eq!(q_gradient(&z), z);
        assert!(matches!(ratio(&z), Err(Error::UndefinedRatio { .. })));
        let basis = WeylBasis::for_dimension(4).unwrap();
        assert!(ratio_gradient(&WeylCoords::zeros(10), &basis).is_err());
    }

    #[test]
    fn fast_path_matches_direct_sum() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for n in 3..=5 {
            let t = Tensor4::random(n, &mut rng);
            let (a, b) = (q_value(&t), q_value_direct(&t));
            assert!(
                (a - b).abs() <= 1e-10 * b.abs().max(1.0),
                "n={n}: {a} vs {b}"
            );
        }
    }

    #[test]
    fn euler_identity_on_arbitrary_tensors() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let t = Tensor4::random(4, &mut rng);
        let lhs = crate::weyl_space::inner(&q_gradient(&t), &t).unwrap();
        assert!((lhs - 3.0 * q_value(&t)).abs() <= 1e-9 * lhs.abs());
    }

    #[test]
    fn ambient_gradient_matches_central_differences() {
        // all 256 components of a generic (non-Weyl) tensor in n = 4
        let mut rng = ChaCha8Rng::seed_from_u64(4);
        let t = Tensor4::random(4, &mut rng);
        let g = q_gradient(&t);
        let h = 1e-5;
        let mut worst: f64 = 0.0;
        for x in 0..t.as_slice().len() {
            let mut plus = t.clone();
            plus.as_mut_slice()[x] += h;
            let mut minus = t.clone();
            minus.as_mut_slice()[x] -= h;
            let fd = (q_value(&plus) - q_value(&minus)) / (2.0 * h);
            worst = worst.max((fd - g.as_slice()[x]).abs());
        }
        assert!(worst <= 1e-6 * g.max_abs(), "worst deviation {worst}");
    }

    #[test]
    fn finite_difference_helper() {
        let basis = WeylBasis::for_dimension(4).unwrap();
        let w = random_weyl(&basis, 5);
        let analytic = basis.project(&q_gradient(&w)).unwrap();
        let fd = coordinate_gradient_fd(&w, &basis, 1e-4).unwrap();
        assert!(relative_deviation(&fd, &analytic) <= 1e-6);
        assert!(coordinate_gradient_fd(&Tensor4::zeros(5), &basis, 1e-4).is_err());
        assert!(coordinate_gradient_fd(&w, &basis, 0.0).is_err());
    }

    #[test]
    fn ratio_gradient_is_tangent() {
        let basis = WeylBasis::for_dimension(5).unwrap();
        let w = random_weyl(&basis, 9);
        let c = basis.project(&w).unwrap();
        let (r, g) = ratio_and_gradient(&c, &basis).unwrap();
        assert!((r - ratio(&w).unwrap()).abs() < 1e-12);
        let along: f64 = g.values.iter().zip(&c.values).map(|(a, b)| a * b).sum();
        assert!(along.abs() <= 1e-9 * g.norm().max(1.0));
    }

    #[test]
    fn scaling() {
        let basis = WeylBasis::for_dimension(4).unwrap();
        let w = random_weyl(&basis, 3);
        let r = ratio(&w).unwrap();
        assert!((ratio(&w.scaled(7.0)).unwrap() - r).abs() <= 1e-12);
        let q = q_value(&w);
        assert_eq!(q_value(&w.scaled(-1.0)), -q);
        assert!((q_value(&w.scaled(2.5)) - 2.5_f64.powi(3) * q).abs() <= 1e-9 * q.abs());
    }
}
