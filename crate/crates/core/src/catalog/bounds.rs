//! Yamabe-type upper bounds evaluated on homogeneous spaces.
//!
//! On a compact homogeneous Einstein space every curvature quantity is
//! constant and the Yamabe invariant is `Y = S·Vol^{2/n}`. Both sides of
//! `Y ≤ n (∫|Q|^{n/2}|W|^{-n})^{2/n}` then carry the factor `Vol^{2/n}`,
//! leaving `S ≤ n|Q|/|W|²`, with equality exactly on locally symmetric
//! spaces. The dimension-five refinement multiplies the left side by
//! `1 + (1/15)|W|/|W|` and replaces `n` on the right by `16/3`.

use num_rational::Rational64;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use super::exact::{ratio as r, to_f64};
use super::tables::CatalogEntry;
use crate::error::{Error, Result};

/// `|ratio − 1|` below which the bound counts as attained.
pub const EQUALITY_TOL: f64 = 1e-9;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub name: String,
    pub yamabe_lhs: f64,
    pub rhs: f64,
    /// `yamabe_lhs / rhs`.
    pub ratio: f64,
    pub equality: bool,
}

impl BoundReport {
    fn new(yamabe_lhs: f64, rhs: f64) -> Self {
        let ratio = yamabe_lhs / rhs;
        Self {
            name: String::new(),
            yamabe_lhs,
            rhs,
            ratio,
            equality: (ratio - 1.0).abs() <= EQUALITY_TOL,
        }
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }
}

fn check_inputs(q: f64, weyl_norm_sq: f64) -> Result<()> {
    if weyl_norm_sq.is_nan() || weyl_norm_sq <= 0.0 {
        return Err(Error::ConformallyFlat { weyl_norm_sq });
    }
    if q == 0.0 {
        return Err(Error::InvalidArgument(
            "Q vanishes, so the right-hand side is zero".into(),
        ));
    }
    Ok(())
}

/// Volume-free form of the sharp bound: `S` against `n|Q|/|W|²`.
pub fn sharp_bound_ratio(s: f64, q: f64, weyl_norm_sq: f64, n: usize) -> Result<BoundReport> {
    check_inputs(q, weyl_norm_sq)?;
    Ok(BoundReport::new(s, n as f64 * q.abs() / weyl_norm_sq))
}

/// The dimension-five refinement: `(16/15) S` against `(16/3)|Q|/|W|²`.
pub fn dimension_five_bound(s: f64, q: f64, weyl_norm_sq: f64) -> Result<BoundReport> {
    check_inputs(q, weyl_norm_sq)?;
    let bracket = to_f64(dimension_five_bracket());
    Ok(BoundReport::new(
        bracket * s,
        16.0 / 3.0 * q.abs() / weyl_norm_sq,
    ))
}

/// `1 + (1/15)·|W|/|W|` for constant `|W|`, i.e. `16/15`.
pub fn dimension_five_bracket() -> Rational64 {
    r(1, 1) + r(1, 15)
}

/// Exact `S|W|²/(n|Q|)` for a catalog row; `None` when `Q = 0`.
pub fn exact_bound_ratio(entry: &CatalogEntry) -> Option<Rational64> {
    if entry.q.is_zero() {
        return None;
    }
    let n = Rational64::from_integer(entry.dim as i64);
    Some(entry.scalar * entry.weyl_norm_sq / (n * entry.q.abs()))
}

/// Exact dimension-five ratio `(16/15)S / ((16/3)|Q|/|W|²)`; `None` when
/// `Q = 0`.
pub fn exact_dimension_five_ratio(entry: &CatalogEntry) -> Option<Rational64> {
    if entry.q.is_zero() {
        return None;
    }
    Some(dimension_five_bracket() * entry.scalar / (r(16, 3) * entry.q.abs() / entry.weyl_norm_sq))
}

pub fn entry_bound(entry: &CatalogEntry) -> Result<BoundReport> {
    sharp_bound_ratio(
        to_f64(entry.scalar),
        to_f64(entry.q),
        to_f64(entry.weyl_norm_sq),
        entry.dim,
    )
    .map(|b| b.named(entry.name.clone()))
}
