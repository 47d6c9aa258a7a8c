use std::fmt;

use num_rational::Rational64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

/// `coeff · √radicand` with rational coefficient and radicand.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Radical {
    pub coeff: Rational64,
    pub radicand: Rational64,
}

impl Radical {
    pub const fn new(coeff: Rational64, radicand: Rational64) -> Self {
        Self { coeff, radicand }
    }

    /// Exact square `coeff² · radicand`.
    pub fn square(&self) -> Rational64 {
        self.coeff * self.coeff * self.radicand
    }

    pub fn is_positive(&self) -> bool {
        self.coeff.is_positive() && self.radicand.is_positive()
    }

    pub fn value(&self) -> f64 {
        to_f64(self.coeff) * to_f64(self.radicand).sqrt()
    }
}

impl fmt::Display for Radical {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.radicand.is_one() {
            return write!(f, "{}", self.coeff);
        }
        if !self.coeff.is_one() {
            write!(f, "{}*", self.coeff)?;
        }
        write!(f, "sqrt({})", self.radicand)
    }
}

pub fn to_f64(r: Rational64) -> f64 {
    if r.is_zero() {
        return 0.0;
    }
    r.numer().to_f64().expect("i64 fits f64") / r.denom().to_f64().expect("i64 fits f64")
}

pub const fn ratio(n: i64, d: i64) -> Rational64 {
    Rational64::new_raw(n, d)
}
