//! Orthonormal coordinates on the Weyl subspace.
//!
//! The constraint rows are reduced to echelon form by sparse Gaussian
//! elimination with partial pivoting (pivot = largest entry of the reduced
//! row). Back-substitution over the free columns gives a nullspace spanning
//! set, which modified Gram–Schmidt (two passes) turns orthonormal.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use serde::{Deserialize, Serialize};

use super::constraints::{build_constraints, ConstraintSystem};
use super::tensor::{weyl_dimension, Tensor4};
use crate::error::{Error, Result};

/// A reduced row whose largest entry falls below this fraction of the
/// original row's largest entry is treated as linearly dependent.
pub const PIVOT_TOL: f64 = 1e-9;

/// Entries this small relative to the row are dropped as rounding debris.
const DROP_TOL: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylBasis {
    dim: usize,
    m: usize,
    /// `m` ambient vectors of length `n⁴`, concatenated.
    vectors: Vec<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeylCoords {
    pub values: Vec<f64>,
}

impl WeylCoords {
    pub fn new(values: Vec<f64>) -> Self {
        Self { values }
    }

    pub fn zeros(m: usize) -> Self {
        Self {
            values: vec![0.0; m],
        }
    }

    pub fn unit(m: usize, i: usize) -> Self {
        let mut values = vec![0.0; m];
        values[i] = 1.0;
        Self { values }
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn norm(&self) -> f64 {
        self.values.iter().map(|v| v * v).sum::<f64>().sqrt()
    }

    pub fn normalized(&self) -> Option<Self> {
        let norm = self.norm();
        (norm > 0.0).then(|| Self {
            values: self.values.iter().map(|v| v / norm).collect(),
        })
    }
}

/// Echelon form of a constraint system: pivot rows in insertion order, each
/// normalized to a unit pivot and reduced against all earlier pivots.
struct Echelon {
    width: usize,
    rows: Vec<(usize, Vec<(usize, f64)>)>,
    /// column → position in `rows` of the row pivoting on it
    pivot_row: Vec<Option<usize>>,
}

impl Echelon {
    fn reduce(system: &ConstraintSystem) -> Self {
        let width = system.dim().pow(4);
        let mut ech = Self {
            width,
            rows: Vec::new(),
            pivot_row: vec![None; width],
        };
        let mut work = vec![0.0; width];
        let mut touched: Vec<usize> = Vec::new();
        let mut heap: BinaryHeap<Reverse<(usize, usize)>> = BinaryHeap::new();

        for row in system.rows() {
            let scale = row
                .entries()
                .iter()
                .fold(0.0_f64, |m, (_, c)| m.max(c.abs()));
            for &(x, c) in row.entries() {
                if work[x] == 0.0 {
                    touched.push(x);
                }
                work[x] += c;
                if let Some(p) = ech.pivot_row[x] {
                    heap.push(Reverse((p, x)));
                }
            }
            // Eliminate pivot columns oldest-first: row p only contains
            // pivots of rows newer than p, so this terminates.
            while let Some(Reverse((p, col))) = heap.pop() {
                let factor = work[col];
                if factor == 0.0 {
                    continue;
                }
                for &(x, c) in &ech.rows[p].1 {
                    if x == col {
                        continue;
                    }
                    if work[x] == 0.0 {
                        touched.push(x);
                    }
                    work[x] -= factor * c;
                    if let Some(q) = ech.pivot_row[x] {
                        heap.push(Reverse((q, x)));
                    }
                }
                work[col] = 0.0;
            }

            touched.sort_unstable();
            touched.dedup();
            let mut best: Option<(usize, f64)> = None;
            for &x in &touched {
                let v = work[x].abs();
                if v > best.map_or(0.0, |(_, b)| b) {
                    best = Some((x, v));
                }
            }
            if let Some((pivot, mag)) = best {
                if mag > PIVOT_TOL * scale {
                    let lead = work[pivot];
                    let entries: Vec<(usize, f64)> = touched
                        .iter()
                        .filter(|&&x| work[x].abs() > DROP_TOL * mag)
                        .map(|&x| (x, work[x] / lead))
                        .collect();
                    ech.pivot_row[pivot] = Some(ech.rows.len());
                    ech.rows.push((pivot, entries));
                }
            }
            for &x in &touched {
                work[x] = 0.0;
            }
            touched.clear();
        }
        ech
    }

    fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Nullspace spanning vectors, one per free column, each of length `width`.
    fn nullspace(&self) -> Vec<Vec<f64>> {
        let free: Vec<usize> = (0..self.width)
            .filter(|x| self.pivot_row[*x].is_none())
            .collect();
        let m = free.len();
        // solution[x] holds the value of variable x as a combination of the free variables
        let mut solution = vec![vec![0.0; m]; self.width];
        for (f, &x) in free.iter().enumerate() {
            solution[x][f] = 1.0;
        }
        for (pivot, entries) in self.rows.iter().rev() {
            let mut acc = vec![0.0; m];
            for &(x, c) in entries {
                if x == *pivot {
                    continue;
                }
                for (a, s) in acc.iter_mut().zip(&solution[x]) {
                    *a -= c * s;
                }
            }
            solution[*pivot] = acc;
        }
        (0..m)
            .map(|f| solution.iter().map(|s| s[f]).collect())
            .collect()
    }
}

/// Numerical rank of the row space of `system`.
pub fn constraint_rank(system: &ConstraintSystem) -> usize {
    Echelon::reduce(system).rank()
}

/// Orthonormal basis of the nullspace of `system`. The nullspace dimension
/// must agree with [`weyl_dimension`].
pub fn nullspace_basis(system: &ConstraintSystem) -> Result<WeylBasis> {
    let n = system.dim();
    if system.is_empty() {
        return Err(Error::InvalidArgument(
            "constraint system has no rows".into(),
        ));
    }
    let ech = Echelon::reduce(system);
    let width = ech.width;
    let expected = weyl_dimension(n);
    let found = width - ech.rank();
    if found != expected {
        return Err(Error::RankMismatch { expected, found });
    }
    let mut vectors = ech.nullspace();
    modified_gram_schmidt(&mut vectors)?;
    Ok(WeylBasis {
        dim: n,
        m: expected,
        vectors: vectors.concat(),
    })
}

fn modified_gram_schmidt(vectors: &mut [Vec<f64>]) -> Result<()> {
    for i in 0..vectors.len() {
        let (done, rest) = vectors.split_at_mut(i);
        let v = &mut rest[0];
        // second pass restores orthogonality lost to cancellation
        for _ in 0..2 {
            for q in done.iter() {
                let dot: f64 = q.iter().zip(v.iter()).map(|(a, b)| a * b).sum();
                for (x, qx) in v.iter_mut().zip(q) {
                    *x -= dot * qx;
                }
            }
        }
        let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
        if norm < 1e-8 {
            return Err(Error::RankMismatch {
                expected: vectors.len(),
                found: i,
            });
        }
        for x in v.iter_mut() {
            *x /= norm;
        }
    }
    Ok(())
}

impl WeylBasis {
    /// Builds the constraints for dimension `n` and orthonormalizes their nullspace.
    pub fn for_dimension(n: usize) -> Result<Self> {
        nullspace_basis(&build_constraints(n)?)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn vector(&self, i: usize) -> &[f64] {
        let len = self.dim.pow(4);
        &self.vectors[i * len..(i + 1) * len]
    }

    pub fn vectors(&self) -> impl Iterator<Item = &[f64]> {
        self.vectors
            .chunks_exact(self.dim.pow(4).max(1))
            .take(self.m)
    }

    pub fn embed(&self, coords: &WeylCoords) -> Result<Tensor4> {
        if coords.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: coords.len(),
            });
        }
        let mut out = vec![0.0; self.dim.pow(4)];
        for (c, b) in coords.values.iter().zip(self.vectors()) {
            if *c == 0.0 {
                continue;
            }
            for (o, v) in out.iter_mut().zip(b) {
                *o += c * v;
            }
        }
        Tensor4::from_vec(self.dim, out)
    }

    /// Coordinates of the orthogonal projection of `t` onto the Weyl subspace.
    pub fn project(&self, t: &Tensor4) -> Result<WeylCoords> {
        if t.dim() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                found: t.dim(),
            });
        }
        Ok(self.project_slice(t.as_slice()))
    }

    pub(crate) fn project_slice(&self, v: &[f64]) -> WeylCoords {
        WeylCoords {
            values: self
                .vectors()
                .map(|b| b.iter().zip(v).map(|(x, y)| x * y).sum())
                .collect(),
        }
    }

    /// Largest deviation of the Gram matrix from the identity.
    pub fn orthonormality_defect(&self) -> f64 {
        let vs: Vec<&[f64]> = self.vectors().collect();
        let mut worst: f64 = 0.0;
        for (i, a) in vs.iter().enumerate() {
            for (j, b) in vs.iter().enumerate().skip(i) {
                let dot: f64 = a.iter().zip(b.iter()).map(|(x, y)| x * y).sum();
                let target = if i == j { 1.0 } else { 0.0 };
                worst = worst.max((dot - target).abs());
            }
        }
        worst
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weyl_space::constraints::is_algebraic_weyl;
    use crate::weyl_space::tensor::norm_sq;

    #[test]
    fn dimension_four_basis() {
        let system = build_constraints(4).unwrap();
        let basis = nullspace_basis(&system).unwrap();
        assert_eq!(basis.m(), 10);
        assert!(basis.orthonormality_defect() < 1e-12);
        for b in basis.vectors() {
            assert!(system.max_residual(b) <= 1e-10);
        }
    }

    #[test]
    fn dimension_three_has_empty_basis() {
        let basis = WeylBasis::for_dimension(3).unwrap();
        assert_eq!(basis.m(), 0);
        assert_eq!(basis.vectors().count(), 0);
        assert_eq!(
            basis.embed(&WeylCoords::zeros(0)).unwrap(),
            Tensor4::zeros(3)
        );
    }

    #[test]
    fn empty_system_rejected() {
        let empty = ConstraintSystem::new(3, vec![]).unwrap();
        assert!(matches!(
            nullspace_basis(&empty),
            Err(Error::InvalidArgument(_))
        ));
    }

    #[test]
    fn incomplete_system_reports_rank_mismatch() {
        let full = build_constraints(4).unwrap();
        let partial = ConstraintSystem::new(
            4,
            full.kinds()
                .iter()
                .cloned()
                .zip(full.rows().iter().cloned())
                .take(10)
                .collect(),
        )
        .unwrap();
        assert!(matches!(
            nullspace_basis(&partial),
            Err(Error::RankMismatch { expected: 10, .. })
        ));
    }

    #[test]
    fn embed_project_basics() {
        let basis = WeylBasis::for_dimension(4).unwrap();
        assert_eq!(
            basis.embed(&WeylCoords::zeros(10)).unwrap(),
            Tensor4::zeros(4)
        );
        for i in 0..10 {
            let w = basis.embed(&WeylCoords::unit(10, i)).unwrap();
            assert!((norm_sq(&w) - 1.0).abs() < 1e-12);
            assert!(is_algebraic_weyl(&w, 1e-10).pass);
        }
        assert!(basis.embed(&WeylCoords::zeros(9)).is_err());
        assert!(basis.project(&Tensor4::zeros(5)).is_err());
    }
}
