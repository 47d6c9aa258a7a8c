//! Dense rank-4 and symmetric rank-2 tensors over an orthonormal frame.
//!
//! Components are stored flat with the last index fastest, so `W_{ijkl}`
//! (1-based labels) sits at `(i-1)n³ + (j-1)n² + (k-1)n + (l-1)`. The
//! accessor methods on [`Tensor4`] take zero-based frame indices; only
//! [`flatten_index`] uses the 1-based labeling.

use rand::Rng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Absolute tolerance on the Riemann symmetries accepted by [`ricci`] and
/// [`weyl_from_riemann`], scaled by the largest component when that exceeds 1.
pub const SYMMETRY_TOL: f64 = 1e-10;

/// Flat position of the 1-based component label `(i, j, k, l)`.
pub fn flatten_index(i: usize, j: usize, k: usize, l: usize, n: usize) -> Result<usize> {
    for index in [i, j, k, l] {
        if index == 0 || index > n {
            return Err(Error::IndexOutOfRange { index, dim: n });
        }
    }
    Ok((i - 1) * n * n * n + (j - 1) * n * n + (k - 1) * n + (l - 1))
}

/// Inverse of [`flatten_index`]: 1-based labels of a flat position.
pub fn unflatten_index(x: usize, n: usize) -> Result<[usize; 4]> {
    if x >= n.pow(4) {
        return Err(Error::IndexOutOfRange {
            index: x,
            dim: n.pow(4),
        });
    }
    Ok([
        x / (n * n * n) + 1,
        (x / (n * n)) % n + 1,
        (x / n) % n + 1,
        x % n + 1,
    ])
}

/// Number of independent components of an algebraic Weyl tensor in dimension `n`.
pub fn weyl_dimension(n: usize) -> usize {
    if n < 3 {
        return 0;
    }
    n * (n + 1) * (n + 2) * (n - 3) / 12
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Tensor4 {
    dim: usize,
    data: Vec<f64>,
}

impl Tensor4 {
    pub fn zeros(dim: usize) -> Self {
        Self {
            dim,
            data: vec![0.0; dim.pow(4)],
        }
    }

    pub fn from_vec(dim: usize, data: Vec<f64>) -> Result<Self> {
        if data.len() != dim.pow(4) {
            return Err(Error::DimensionMismatch {
                expected: dim.pow(4),
                found: data.len(),
            });
        }
        Ok(Self { dim, data })
    }

    /// Builds a tensor from a function of zero-based frame indices.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize, usize, usize) -> f64) -> Self {
        let mut data = Vec::with_capacity(dim.pow(4));
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    for l in 0..dim {
                        data.push(f(i, j, k, l));
                    }
                }
            }
        }
        Self { dim, data }
    }

    /// Tensor with i.i.d. standard normal components (no symmetries).
    pub fn random<R: Rng + ?Sized>(dim: usize, rng: &mut R) -> Self {
        let data = (0..dim.pow(4))
            .map(|_| rng.sample(StandardNormal))
            .collect();
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn as_mut_slice(&mut self) -> &mut [f64] {
        &mut self.data
    }

    pub fn into_vec(self) -> Vec<f64> {
        self.data
    }

    #[inline]
    pub fn offset(&self, i: usize, j: usize, k: usize, l: usize) -> usize {
        let n = self.dim;
        ((i * n + j) * n + k) * n + l
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> f64 {
        self.data[self.offset(i, j, k, l)]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: f64) {
        let x = self.offset(i, j, k, l);
        self.data[x] = value;
    }

    pub fn scaled(&self, factor: f64) -> Self {
        Self {
            dim: self.dim,
            data: self.data.iter().map(|v| v * factor).collect(),
        }
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, v| m.max(v.abs()))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a + b)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        check_dims(self.dim, other.dim)?;
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| a - b)
            .collect();
        Ok(Self {
            dim: self.dim,
            data,
        })
    }

    /// Embeds the tensor in dimension `dim + extra`; components touching the
    /// new frame directions are zero. Antisymmetries, Bianchi and all traces
    /// are preserved, so algebraic Weyl tensors stay algebraic Weyl.
    pub fn zero_padded(&self, extra: usize) -> Self {
        let n = self.dim;
        let big = n + extra;
        let mut out = Self::zeros(big);
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    for l in 0..n {
                        out.set(i, j, k, l, self.get(i, j, k, l));
                    }
                }
            }
        }
        out
    }
}

fn check_dims(expected: usize, found: usize) -> Result<()> {
    if expected != found {
        return Err(Error::DimensionMismatch { expected, found });
    }
    Ok(())
}

/// Symmetric 2-tensor, stored as a full `n × n` row-major matrix.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sym2 {
    dim: usize,
    data: Vec<f64>,
}

impl Sym2 {
    pub fn identity(dim: usize) -> Self {
        Self::from_fn(dim, |i, j| if i == j { 1.0 } else { 0.0 })
    }

    /// Builds the matrix from the upper triangle of `f`; the lower triangle is mirrored.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> f64) -> Self {
        let mut data = vec![0.0; dim * dim];
        for i in 0..dim {
            for j in i..dim {
                let v = f(i, j);
                data[i * dim + j] = v;
                data[j * dim + i] = v;
            }
        }
        Self { dim, data }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> f64 {
        self.data[i * self.dim + j]
    }

    pub fn trace(&self) -> f64 {
        (0..self.dim).map(|i| self.get(i, i)).sum()
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }
}

/// Full contraction `Σ T_{ijkl}²`.
pub fn norm_sq(t: &Tensor4) -> f64 {
    t.data.iter().map(|v| v * v).sum()
}

/// Full contraction `Σ A_{ijkl} B_{ijkl}`.
pub fn inner(a: &Tensor4, b: &Tensor4) -> Result<f64> {
    check_dims(a.dim, b.dim)?;
    Ok(a.data.iter().zip(&b.data).map(|(x, y)| x * y).sum())
}

/// Kulkarni–Nomizu product
/// `(h ⊘ k)_{ijkl} = h_ik k_jl − h_il k_jk + h_jl k_ik − h_jk k_il`.
pub fn kulkarni_nomizu(h: &Sym2, k: &Sym2) -> Result<Tensor4> {
    check_dims(h.dim, k.dim)?;
    Ok(Tensor4::from_fn(h.dim, |i, j, a, b| {
        h.get(i, a) * k.get(j, b) - h.get(i, b) * k.get(j, a) + h.get(j, b) * k.get(i, a)
            - h.get(j, a) * k.get(i, b)
    }))
}

/// Largest violation of the algebraic curvature symmetries: antisymmetry in
/// each index pair, pair exchange and the first Bianchi identity. Traces are
/// not inspected.
pub fn curvature_symmetry_residual(r: &Tensor4) -> f64 {
    let n = r.dim;
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let v = r.get(i, j, k, l);
                    worst = worst
                        .max((v + r.get(j, i, k, l)).abs())
                        .max((v + r.get(i, j, l, k)).abs())
                        .max((v - r.get(k, l, i, j)).abs())
                        .max((v + r.get(i, k, l, j) + r.get(i, l, j, k)).abs());
                }
            }
        }
    }
    worst
}

fn require_curvature_symmetries(r: &Tensor4) -> Result<()> {
    let residual = curvature_symmetry_residual(r);
    if residual > SYMMETRY_TOL * r.max_abs().max(1.0) {
        return Err(Error::SymmetryViolation { residual });
    }
    Ok(())
}

/// Ricci contraction `R_ij = Σ_k R_ikjk`.
pub fn ricci(r: &Tensor4) -> Result<Sym2> {
    require_curvature_symmetries(r)?;
    Ok(ricci_unchecked(r))
}

fn ricci_unchecked(r: &Tensor4) -> Sym2 {
    let n = r.dim;
    Sym2::from_fn(n, |i, j| (0..n).map(|k| r.get(i, k, j, k)).sum())
}

/// Scalar curvature, the trace of [`ricci`].
pub fn scalar(r: &Tensor4) -> Result<f64> {
    Ok(ricci(r)?.trace())
}

/// Removes the Ricci and scalar parts of a curvature tensor:
/// `W = R − (Ric ⊘ g)/(n−2) + S (g ⊘ g) / (2(n−1)(n−2))`.
/// In dimension 3 (and below) the Weyl tensor vanishes identically.
pub fn weyl_from_riemann(r: &Tensor4) -> Result<Tensor4> {
    require_curvature_symmetries(r)?;
    let n = r.dim;
    if n <= 3 {
        return Ok(Tensor4::zeros(n));
    }
    let ric = ricci_unchecked(r);
    let s = ric.trace();
    let g = Sym2::identity(n);
    let ric_part = kulkarni_nomizu(&ric, &g)?;
    let scal_part = kulkarni_nomizu(&g, &g)?;
    let a = 1.0 / (n as f64 - 2.0);
    let b = s / (2.0 * (n as f64 - 1.0) * (n as f64 - 2.0));
    let data = r
        .data
        .iter()
        .zip(ric_part.data.iter().zip(&scal_part.data))
        .map(|(rv, (rp, sp))| rv - a * rp + b * sp)
        .collect();
    Ok(Tensor4 { dim: n, data })
}

/// Largest entry of `OᵀO − I`.
pub fn orthogonality_defect(o: &[f64], n: usize) -> Result<f64> {
    if o.len() != n * n {
        return Err(Error::DimensionMismatch {
            expected: n * n,
            found: o.len(),
        });
    }
    let mut worst: f64 = 0.0;
    for a in 0..n {
        for b in 0..n {
            let dot: f64 = (0..n).map(|i| o[i * n + a] * o[i * n + b]).sum();
            let target = if a == b { 1.0 } else { 0.0 };
            worst = worst.max((dot - target).abs());
        }
    }
    Ok(worst)
}

/// Change of orthonormal frame acting on all four slots:
/// `t'_{abcd} = Σ o_ai o_bj o_ck o_dl t_ijkl`, with `o` row-major `n × n`.
pub fn frame_rotate(t: &Tensor4, o: &[f64]) -> Result<Tensor4> {
    let n = t.dim;
    let deviation = orthogonality_defect(o, n)?;
    if deviation > 1e-12 {
        return Err(Error::NotOrthogonal { deviation });
    }
    // One mode at a time: rotating the slot at stride `s` costs n⁵.
    let mut cur = t.data.clone();
    let mut next = vec![0.0; cur.len()];
    for stride in [n * n * n, n * n, n, 1] {
        let block = stride * n;
        for base in (0..cur.len()).step_by(block) {
            for inner in 0..stride {
                for a in 0..n {
                    let mut acc = 0.0;
                    for i in 0..n {
                        acc += o[a * n + i] * cur[base + i * stride + inner];
                    }
                    next[base + a * stride + inner] = acc;
                }
            }
        }
        std::mem::swap(&mut cur, &mut next);
    }
    Ok(Tensor4 { dim: n, data: cur })
}

/// Haar-distributed orthogonal matrix (Gram–Schmidt on a Gaussian matrix,
/// with the sign fix that makes the distribution uniform), row-major.
pub fn random_orthogonal<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<f64> {
    // Columns are orthonormalized, stored column-major during the sweep.
    let mut cols: Vec<Vec<f64>> = (0..n)
        .map(|_| (0..n).map(|_| rng.sample(StandardNormal)).collect())
        .collect();
    for c in 0..n {
        for _ in 0..2 {
            for p in 0..c {
                let (done, rest) = cols.split_at_mut(c);
                let dot: f64 = rest[0].iter().zip(&done[p]).map(|(a, b)| a * b).sum();
                for (v, u) in rest[0].iter_mut().zip(&done[p]) {
                    *v -= dot * u;
                }
            }
        }
        let norm = cols[c].iter().map(|v| v * v).sum::<f64>().sqrt();
        for v in cols[c].iter_mut() {
            *v /= norm;
        }
    }
    let mut o = vec![0.0; n * n];
    for (c, col) in cols.iter().enumerate() {
        for (r, v) in col.iter().enumerate() {
            o[r * n + c] = *v;
        }
    }
    o
}
