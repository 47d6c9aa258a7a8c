//! Reference implementations used as oracles by the integration tests.
//! They work directly from the definitions and share no code paths with
//! the library beyond `Tensor4::get`.

#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use weyl_pinch::{Tensor4, WeylBasis, WeylCoords};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn gaussian_coords(m: usize, rng: &mut ChaCha8Rng) -> WeylCoords {
    WeylCoords::new((0..m).map(|_| StandardNormal.sample(rng)).collect())
}

pub fn random_weyl(basis: &WeylBasis, rng: &mut ChaCha8Rng) -> Tensor4 {
    basis.embed(&gaussian_coords(basis.m(), rng)).unwrap()
}

/// `2 W_pqrs W_ptru W_qtsu + ½ W_pqrs W_pqtu W_rstu` by six nested sums.
pub fn naive_q(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut total = 0.0;
    for p in 0..n {
        for q in 0..n {
            for r in 0..n {
                for s in 0..n {
                    for t in 0..n {
                        for u in 0..n {
                            total += 2.0
                                * w.get(p, q, r, s)
                                * w.get(p, t, r, u)
                                * w.get(q, t, s, u)
                                + 0.5 * w.get(p, q, r, s) * w.get(p, q, t, u) * w.get(r, s, t, u);
                        }
                    }
                }
            }
        }
    }
    total
}

pub fn naive_norm(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut s = 0.0;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    s += w.get(a, b, c, d).powi(2);
                }
            }
        }
    }
    s.sqrt()
}

/// Largest violation of the algebraic Weyl conditions, written out
/// symmetry by symmetry.
pub fn weyl_residual(w: &Tensor4) -> f64 {
    let n = w.dim();
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = w.get(i, j, k, l);
                    worst = worst.max((v + w.get(j, i, k, l)).abs());
                    worst = worst.max((v + w.get(i, j, l, k)).abs());
                    worst = worst.max((v - w.get(k, l, i, j)).abs());
                    worst = worst.max((v + w.get(j, k, i, l) + w.get(k, i, j, l)).abs());
                }
            }
            let trace: f64 = (0..n).map(|k| w.get(i, k, j, k)).sum();
            worst = worst.max(trace.abs());
        }
    }
    worst
}

/// `(O·W)_abcd = O_ai O_bj O_ck O_dl W_ijkl` by full summation.
pub fn naive_rotate(w: &Tensor4, o: &[f64]) -> Tensor4 {
    let n = w.dim();
    Tensor4::from_fn(n, |a, b, c, d| {
        let mut s = 0.0;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        s += o[a * n + i]
                            * o[b * n + j]
                            * o[c * n + k]
                            * o[d * n + l]
                            * w.get(i, j, k, l);
                    }
                }
            }
        }
        s
    })
}

/// Orthogonal matrix from Gram–Schmidt on Gaussian columns (row-major).
pub fn orthogonal(n: usize, rng: &mut ChaCha8Rng) -> Vec<f64> {
    let mut cols: Vec<Vec<f64>> = Vec::new();
    while cols.len() < n {
        let mut v: Vec<f64> = (0..n).map(|_| StandardNormal.sample(rng)).collect();
        for c in &cols {
            let d: f64 = v.iter().zip(c).map(|(a, b)| a * b).sum();
            v.iter_mut().zip(c).for_each(|(a, b)| *a -= d * b);
        }
        let norm = v.iter().map(|a| a * a).sum::<f64>().sqrt();
        if norm > 1e-8 {
            cols.push(v.into_iter().map(|a| a / norm).collect());
        }
    }
    let mut o = vec![0.0; n * n];
    for (j, c) in cols.iter().enumerate() {
        for i in 0..n {
            o[i * n + j] = c[i];
        }
    }
    o
}

/// Closed-form invariants `(S, |W|²)` of a product of round spheres
/// `S^{k_i}` with sectional curvatures `κ_i`.
pub fn sphere_product_invariants(factors: &[(usize, f64)]) -> (f64, f64) {
    let n: usize = factors.iter().map(|f| f.0).sum();
    let nf = n as f64;
    let (mut s, mut riem, mut ric) = (0.0, 0.0, 0.0);
    for &(k, kappa) in factors {
        let k = k as f64;
        s += k * (k - 1.0) * kappa;
        riem += 2.0 * k * (k - 1.0) * kappa * kappa;
        ric += k * (k - 1.0) * (k - 1.0) * kappa * kappa;
    }
    let weyl = riem - 4.0 / (nf - 2.0) * ric + 2.0 * s * s / ((nf - 1.0) * (nf - 2.0));
    (s, weyl)
}
