//! Linear constraints cutting the algebraic Weyl tensors out of `ℝ^{n⁴}`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use super::tensor::Tensor4;
use crate::error::{Error, Result};

/// One homogeneous linear equation `Σ coeff · W[flat] = 0`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SparseRow {
    entries: Vec<(usize, f64)>,
}

impl SparseRow {
    /// Merges repeated indices and drops cancelled terms. `None` when nothing survives.
    pub fn from_terms(terms: impl IntoIterator<Item = (usize, f64)>) -> Option<Self> {
        let mut merged: BTreeMap<usize, f64> = BTreeMap::new();
        for (x, c) in terms {
            *merged.entry(x).or_insert(0.0) += c;
        }
        let entries: Vec<_> = merged.into_iter().filter(|(_, c)| *c != 0.0).collect();
        (!entries.is_empty()).then_some(Self { entries })
    }

    pub fn entries(&self) -> &[(usize, f64)] {
        &self.entries
    }

    pub fn apply(&self, v: &[f64]) -> f64 {
        self.entries.iter().map(|(x, c)| c * v[*x]).sum()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum ConstraintKind {
    FirstPairAntisymmetry,
    SecondPairAntisymmetry,
    Bianchi,
    Trace,
    PairExchange,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConstraintSystem {
    dim: usize,
    rows: Vec<SparseRow>,
    kinds: Vec<ConstraintKind>,
}

impl ConstraintSystem {
    /// Validates that every index is in range and no row is empty.
    pub fn new(dim: usize, rows: Vec<(ConstraintKind, SparseRow)>) -> Result<Self> {
        let len = dim.pow(4);
        for (_, row) in &rows {
            if row.entries.is_empty() {
                return Err(Error::InvalidArgument("empty constraint row".into()));
            }
            if let Some((x, _)) = row.entries.iter().find(|(x, _)| *x >= len) {
                return Err(Error::IndexOutOfRange {
                    index: *x,
                    dim: len,
                });
            }
        }
        let (kinds, rows) = rows.into_iter().unzip();
        Ok(Self { dim, rows, kinds })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rows(&self) -> &[SparseRow] {
        &self.rows
    }

    pub fn kinds(&self) -> &[ConstraintKind] {
        &self.kinds
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Largest `|row · v|` over all rows.
    pub fn max_residual(&self, v: &[f64]) -> f64 {
        self.rows.iter().fold(0.0, |m, r| m.max(r.apply(v).abs()))
    }
}

/// All rows for dimension `n`: both pair antisymmetries and the Bianchi
/// identity for every quadruple, one trace row per `(i, j)`, and the
/// pair-exchange rows (implied by the others; kept so rank is measured
/// rather than assumed). Rows that cancel to nothing are skipped.
pub fn build_constraints(n: usize) -> Result<ConstraintSystem> {
    if n < 3 {
        return Err(Error::UnsupportedDimension {
            dim: n,
            reason: "curvature constraints need n >= 3",
        });
    }
    let at = |i: usize, j: usize, k: usize, l: usize| ((i * n + j) * n + k) * n + l;
    let mut rows = Vec::with_capacity(4 * n.pow(4) + n * n);
    let mut push = |kind, terms: Vec<(usize, f64)>| {
        if let Some(row) = SparseRow::from_terms(terms) {
            rows.push((kind, row));
        }
    };
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    let x = at(i, j, k, l);
                    push(
                        ConstraintKind::FirstPairAntisymmetry,
                        vec![(x, 1.0), (at(j, i, k, l), 1.0)],
                    );
                    push(
                        ConstraintKind::SecondPairAntisymmetry,
                        vec![(x, 1.0), (at(i, j, l, k), 1.0)],
                    );
                    push(
                        ConstraintKind::Bianchi,
                        vec![(x, 1.0), (at(i, k, l, j), 1.0), (at(i, l, j, k), 1.0)],
                    );
                }
            }
        }
    }
    for i in 0..n {
        for j in 0..n {
            push(
                ConstraintKind::Trace,
                (0..n).map(|k| (at(i, k, j, k), 1.0)).collect(),
            );
        }
    }
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for l in 0..n {
                    push(
                        ConstraintKind::PairExchange,
                        vec![(at(i, j, k, l), 1.0), (at(k, l, i, j), -1.0)],
                    );
                }
            }
        }
    }
    ConstraintSystem::new(n, rows)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ResidualReport {
    pub max_residual: f64,
    pub tol: f64,
    pub pass: bool,
}

/// Evaluates every Weyl constraint row on `t`.
pub fn is_algebraic_weyl(t: &Tensor4, tol: f64) -> ResidualReport {
    let max_residual = match build_constraints(t.dim()) {
        Ok(system) => system.max_residual(t.as_slice()),
        // below dimension 3 only the zero tensor qualifies
        Err(_) => t.max_abs(),
    };
    ResidualReport {
        max_residual,
        tol,
        pass: max_residual <= tol,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rows_are_well_formed() {
        for n in 3..=5 {
            let c = build_constraints(n).unwrap();
            assert!(c.rows().iter().all(|r| !r.entries().is_empty()));
            assert!(c
                .rows()
                .iter()
                .flat_map(|r| r.entries())
                .all(|(x, _)| *x < n.pow(4)));
            // pair-exchange rows with (i,j) == (k,l) cancel and are dropped
            let exchange = c
                .kinds()
                .iter()
                .filter(|k| **k == ConstraintKind::PairExchange)
                .count();
            assert_eq!(exchange, n.pow(4) - n * n);
            assert_eq!(
                c.kinds()
                    .iter()
                    .filter(|k| **k == ConstraintKind::Trace)
                    .count(),
                n * n
            );
        }
    }

    #[test]
    fn repeated_indices_merge() {
        let row = SparseRow::from_terms([(3, 1.0), (3, 1.0)]).unwrap();
        assert_eq!(row.entries(), &[(3, 2.0)]);
        assert!(SparseRow::from_terms([(3, 1.0), (3, -1.0)]).is_none());
    }

    #[test]
    fn empty_rows_rejected() {
        let rows = vec![(ConstraintKind::Trace, SparseRow { entries: vec![] })];
        assert!(ConstraintSystem::new(3, rows).is_err());
        let rows = vec![(
            ConstraintKind::Trace,
            SparseRow {
                entries: vec![(81, 1.0)],
            },
        )];
        assert!(matches!(
            ConstraintSystem::new(3, rows),
            Err(Error::IndexOutOfRange { .. })
        ));
    }

    #[test]
    fn zero_passes_and_lone_component_fails() {
        let report = is_algebraic_weyl(&Tensor4::zeros(4), 1e-12);
        assert_eq!(report.max_residual, 0.0);
        assert!(report.pass);
        let mut t = Tensor4::zeros(4);
        t.set(0, 1, 0, 1, 1.0);
        let report = is_algebraic_weyl(&t, 1e-12);
        assert!(!report.pass);
        assert_eq!(report.max_residual, 1.0);
    }
}
