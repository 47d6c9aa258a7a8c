//! Curvature tensors of model spaces: space forms, complex projective
//! spaces with the Fubini–Study metric, and Riemannian products of these.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::q_functional::q_value;
use crate::weyl_space::{norm_sq, ricci, weyl_from_riemann, Tensor4};

/// Largest product dimension handled by the catalog.
pub const MAX_PRODUCT_DIM: usize = 9;

/// Holomorphic sectional curvature used for `ℂP^p` factors.
pub const FUBINI_STUDY_CURVATURE: f64 = 4.0;

fn delta(a: usize, b: usize) -> f64 {
    if a == b {
        1.0
    } else {
        0.0
    }
}

/// `R_ijkl = κ (δ_ik δ_jl − δ_il δ_jk)` in dimension `k`.
pub fn space_form_riemann(k: usize, kappa: f64) -> Result<Tensor4> {
    if k < 2 {
        return Err(Error::UnsupportedDimension {
            dim: k,
            reason: "space forms need dimension >= 2",
        });
    }
    Ok(Tensor4::from_fn(k, |i, j, a, b| {
        kappa * (delta(i, a) * delta(j, b) - delta(i, b) * delta(j, a))
    }))
}

/// Standard complex structure on `ℝ^{2p}`: `J e_{2a} = e_{2a+1}`.
fn complex_structure(i: usize, j: usize) -> f64 {
    if i / 2 != j / 2 || i == j {
        0.0
    } else if i.is_multiple_of(2) {
        -1.0
    } else {
        1.0
    }
}

/// Fubini–Study curvature of `ℂP^p` with holomorphic sectional curvature `c`:
/// `R = (c/4)(δ_ik δ_jl − δ_il δ_jk + J_ik J_jl − J_il J_jk + 2 J_ij J_kl)`.
pub fn fubini_study_riemann(p: usize, c: f64) -> Result<Tensor4> {
    if p < 1 {
        return Err(Error::InvalidArgument(
            "complex projective space needs p >= 1".into(),
        ));
    }
    let j = complex_structure;
    Ok(Tensor4::from_fn(2 * p, |a, b, k, l| {
        0.25 * c
            * (delta(a, k) * delta(b, l) - delta(a, l) * delta(b, k) + j(a, k) * j(b, l)
                - j(a, l) * j(b, k)
                + 2.0 * j(a, b) * j(k, l))
    }))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FactorKind {
    /// Unit round sphere `S^k`.
    Sphere(usize),
    /// `ℂP^p` with holomorphic sectional curvature 4.
    ComplexProjective(usize),
    /// Euclidean `ℝ^k` (or a flat torus).
    Flat(usize),
}

impl FactorKind {
    pub fn dim(self) -> usize {
        match self {
            FactorKind::Sphere(k) | FactorKind::Flat(k) => k,
            FactorKind::ComplexProjective(p) => 2 * p,
        }
    }

    /// Einstein constant `λ` (`Ric = λ g`) at unit scale.
    pub fn einstein_constant(self) -> f64 {
        match self {
            FactorKind::Sphere(k) => k as f64 - 1.0,
            FactorKind::ComplexProjective(p) => (p as f64 + 1.0) * FUBINI_STUDY_CURVATURE / 2.0,
            FactorKind::Flat(_) => 0.0,
        }
    }

    fn riemann(self) -> Result<Tensor4> {
        match self {
            FactorKind::Sphere(k) => space_form_riemann(k, 1.0),
            FactorKind::ComplexProjective(p) => fubini_study_riemann(p, FUBINI_STUDY_CURVATURE),
            FactorKind::Flat(k) => Ok(Tensor4::zeros(k)),
        }
    }

    pub fn label(self) -> String {
        match self {
            FactorKind::Sphere(k) => format!("S^{k}"),
            FactorKind::ComplexProjective(p) => format!("CP^{p}"),
            FactorKind::Flat(k) => format!("R^{k}"),
        }
    }
}

/// A factor of a Riemannian product; `scale` multiplies the factor's metric.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProductFactor {
    pub kind: FactorKind,
    pub scale: f64,
}

impl ProductFactor {
    pub fn new(kind: FactorKind, scale: f64) -> Result<Self> {
        match kind {
            FactorKind::Sphere(k) if k < 2 => {
                return Err(Error::InvalidArgument(format!(
                    "sphere factor needs k >= 2, got {k}"
                )))
            }
            FactorKind::ComplexProjective(0) => {
                return Err(Error::InvalidArgument(
                    "complex projective factor needs p >= 1".into(),
                ))
            }
            FactorKind::Flat(0) => {
                return Err(Error::InvalidArgument("flat factor needs k >= 1".into()))
            }
            _ => {}
        }
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::InvalidArgument(format!(
                "factor scale must be positive, got {scale}"
            )));
        }
        Ok(Self { kind, scale })
    }

    pub fn unit(kind: FactorKind) -> Result<Self> {
        Self::new(kind, 1.0)
    }
}

/// Metric scales making the product Einstein: the first factor keeps scale 1
/// and factor `i` is scaled by `λ_i/λ_1`, so every factor has Ricci `λ_1`.
pub fn einstein_scales(kinds: &[FactorKind]) -> Result<Vec<f64>> {
    let first = kinds
        .first()
        .ok_or_else(|| Error::InvalidArgument("empty factor list".into()))?;
    let lambdas: Vec<f64> = kinds.iter().map(|k| k.einstein_constant()).collect();
    let lead = first.einstein_constant();
    if lambdas.iter().all(|l| *l == 0.0) {
        return Ok(vec![1.0; kinds.len()]);
    }
    if lambdas.contains(&0.0) {
        return Err(Error::NoEinsteinMetric(
            "a Ricci-flat factor cannot share a positive Einstein constant".into(),
        ));
    }
    Ok(lambdas.iter().map(|l| l / lead).collect())
}

/// Einstein product of unit-scale factor types.
pub fn einstein_product(kinds: &[FactorKind]) -> Result<Vec<ProductFactor>> {
    let scales = einstein_scales(kinds)?;
    kinds
        .iter()
        .zip(scales)
        .map(|(k, s)| ProductFactor::new(*k, s))
        .collect()
}

/// Block-diagonal curvature of a Riemannian product in an adapted
/// orthonormal frame. Scaling a factor's metric by `s` divides its
/// orthonormal-frame curvature components by `s`.
pub fn product_riemann(factors: &[ProductFactor]) -> Result<Tensor4> {
    if factors.is_empty() {
        return Err(Error::InvalidArgument("empty factor list".into()));
    }
    let n: usize = factors.iter().map(|f| f.kind.dim()).sum();
    if n > MAX_PRODUCT_DIM {
        return Err(Error::UnsupportedDimension {
            dim: n,
            reason: "products are limited to dimension 9",
        });
    }
    let mut out = Tensor4::zeros(n);
    let mut offset = 0;
    for f in factors {
        let block = f.kind.riemann()?;
        let k = block.dim();
        for i in 0..k {
            for j in 0..k {
                for a in 0..k {
                    for b in 0..k {
                        let v = block.get(i, j, a, b);
                        if v != 0.0 {
                            out.set(offset + i, offset + j, offset + a, offset + b, v / f.scale);
                        }
                    }
                }
            }
        }
        offset += k;
    }
    Ok(out)
}

/// Scalar invariants of a curvature tensor.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvatureSummary {
    pub dim: usize,
    pub scalar: f64,
    pub riemann_norm_sq: f64,
    pub weyl_norm_sq: f64,
    pub q: f64,
    /// `S/(n|W|)`; `None` when the Weyl tensor vanishes.
    pub c_m: Option<f64>,
    /// `S/|W|`; `None` when the Weyl tensor vanishes.
    pub a_m: Option<f64>,
}

impl CurvatureSummary {
    /// Values after the global rescaling `g → c g`.
    pub fn rescaled(&self, c: f64) -> Self {
        Self {
            scalar: self.scalar / c,
            riemann_norm_sq: self.riemann_norm_sq / (c * c),
            weyl_norm_sq: self.weyl_norm_sq / (c * c),
            q: self.q / (c * c * c),
            ..*self
        }
    }
}

pub fn summarize(r: &Tensor4) -> Result<CurvatureSummary> {
    let n = r.dim();
    let scalar = ricci(r)?.trace();
    let w = weyl_from_riemann(r)?;
    let weyl_norm_sq = norm_sq(&w);
    let riemann_norm_sq = norm_sq(r);
    let weyl_norm = weyl_norm_sq.sqrt();
    let flat = weyl_norm <= 1e-10 * riemann_norm_sq.sqrt().max(1.0);
    Ok(CurvatureSummary {
        dim: n,
        scalar,
        riemann_norm_sq,
        weyl_norm_sq,
        q: q_value(&w),
        c_m: (!flat).then(|| scalar / (n as f64 * weyl_norm)),
        a_m: (!flat).then(|| scalar / weyl_norm),
    })
}

/// Weyl tensor of the squashed (nearly Kähler) metric on ℂP³, as the
/// listed nonzero components completed over their symmetry orbits.
pub fn squashed_cp3_weyl() -> Result<Tensor4> {
    const A: f64 = 1.0 / 4.0;
    const B: f64 = 1.0 / 8.0;
    const C: f64 = 1.0 / 16.0;
    const D: f64 = 3.0 / 16.0;
    const E: f64 = 3.0 / 8.0;
    const F: f64 = 3.0 / 4.0;
    let mut listed: Vec<([usize; 4], f64)> = vec![
        ([1, 2, 1, 2], A),
        ([3, 4, 3, 4], A),
        ([1, 2, 3, 4], B),
        ([1, 3, 1, 3], C),
        ([4, 2, 4, 2], C),
        ([1, 4, 1, 4], C),
        ([2, 3, 2, 3], C),
        ([1, 3, 4, 2], -C),
        ([1, 4, 2, 3], -C),
        ([1, 5, 2, 6], D),
        ([3, 5, 4, 6], D),
        ([1, 6, 2, 5], -D),
        ([3, 6, 4, 5], -D),
        ([1, 2, 5, 6], E),
        ([3, 4, 5, 6], E),
        ([5, 6, 5, 6], F),
    ];
    for a in 1..=4 {
        listed.push(([a, 5, a, 5], -D));
        listed.push(([a, 6, a, 6], -D));
    }
    let mut w = Tensor4::zeros(6);
    let mut assigned = vec![false; w.as_slice().len()];
    for ([i, j, k, l], value) in listed {
        let (i, j, k, l) = (i - 1, j - 1, k - 1, l - 1);
        let orbit = [
            ([i, j, k, l], 1.0),
            ([j, i, k, l], -1.0),
            ([i, j, l, k], -1.0),
            ([j, i, l, k], 1.0),
            ([k, l, i, j], 1.0),
            ([l, k, i, j], -1.0),
            ([k, l, j, i], -1.0),
            ([l, k, j, i], 1.0),
        ];
        for ([a, b, c, d], sign) in orbit {
            let x = w.offset(a, b, c, d);
            let v = sign * value;
            if (a == b || c == d) || (assigned[x] && w.as_slice()[x] != v) {
                return Err(Error::FixtureConflict([a + 1, b + 1, c + 1, d + 1]));
            }
            assigned[x] = true;
            w.as_mut_slice()[x] = v;
        }
    }
    Ok(w)
}

/// Curvature data of a point on the `S² × S⁴` family.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CounterexamplePoint {
    pub beta: f64,
    pub scalar: f64,
    pub weyl_norm: f64,
    pub a_m: f64,
}

/// Product of unit round spheres with metric `a g_{S²} + b g_{S⁴}`.
pub fn s2xs4_product(a: f64, b: f64) -> Result<CurvatureSummary> {
    summarize(&product_riemann(&[
        ProductFactor::new(FactorKind::Sphere(2), a)?,
        ProductFactor::new(FactorKind::Sphere(4), b)?,
    ])?)
}

/// `S² × S⁴` with metric `β g_{S²} + g_{S⁴}`, so `S = 2/β + 12` and
/// `A_M(β) = S/|W|` increases with `β`.
///
/// Since `A_M` is scale invariant, this equals `A_M` of
/// `g_{S²} + β⁻¹ g_{S⁴}`.
pub fn s2xs4_counterexample(beta: f64) -> Result<CounterexamplePoint> {
    if !(beta > 0.0 && beta.is_finite()) {
        return Err(Error::InvalidArgument(format!(
            "beta must be positive, got {beta}"
        )));
    }
    let s = s2xs4_product(beta, 1.0)?;
    let weyl_norm = s.weyl_norm_sq.sqrt();
    Ok(CounterexamplePoint {
        beta,
        scalar: s.scalar,
        weyl_norm,
        a_m: s.scalar / weyl_norm,
    })
}

/// `(√15 − 3√10)/(3√10 − 6√15) = 1/√6`: above this β the family of
/// [`s2xs4_counterexample`] has `S > √10 |W|`.
pub fn counterexample_threshold() -> f64 {
    let (r10, r15) = (10.0_f64.sqrt(), 15.0_f64.sqrt());
    (r15 - 3.0 * r10) / (3.0 * r10 - 6.0 * r15)
}

/// Root of `A_M(β) = √10` in `[lo, hi]` by bisection, if the bracket changes sign.
pub fn counterexample_crossing(lo: f64, hi: f64, tol: f64) -> Result<Option<f64>> {
    let target = 10.0_f64.sqrt();
    let g = |b: f64| s2xs4_counterexample(b).map(|p| p.a_m - target);
    let (mut lo, mut hi) = (lo, hi);
    let (mut glo, ghi) = (g(lo)?, g(hi)?);
    if glo.signum() == ghi.signum() {
        return Ok(None);
    }
    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        let gm = g(mid)?;
        if gm.signum() == glo.signum() {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
    }
    Ok(Some(0.5 * (lo + hi)))
}
