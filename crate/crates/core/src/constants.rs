//! Known constants for `|Q| ≤ C(n)|W|³` and `Y ≤ A(n) ‖W‖_{n/2}`.

use crate::error::{Error, Result};

/// `√6/4`, sharp in dimension four.
pub fn sqrt6_over_4() -> f64 {
    6.0_f64.sqrt() / 4.0
}

/// `√(3/10)`, the ratio of the squashed ℂP³ Weyl tensor.
pub fn sqrt_3_over_10() -> f64 {
    (0.3_f64).sqrt()
}

/// Upper constant `C(n)` with `|Q| ≤ C(n)|W|³`: `√6/4`, `4/√10`,
/// `√70/(2√3)` for n = 4, 5, 6 and `5/2` from n = 7 on.
pub fn pinching_constant(n: usize) -> Result<f64> {
    Ok(match n {
        0..=3 => {
            return Err(Error::UnsupportedDimension {
                dim: n,
                reason: "C(n) needs n >= 4",
            })
        }
        4 => sqrt6_over_4(),
        5 => 4.0 / 10.0_f64.sqrt(),
        6 => 70.0_f64.sqrt() / (2.0 * 3.0_f64.sqrt()),
        _ => 2.5,
    })
}

/// Yamabe pinching constant `A(n)`: `√6`, `64/(3√10)`, `√210`, then `5n/2`.
pub fn corollary_constant(n: usize) -> Result<f64> {
    Ok(match n {
        0..=3 => {
            return Err(Error::UnsupportedDimension {
                dim: n,
                reason: "A(n) needs n >= 4",
            })
        }
        4 => 6.0_f64.sqrt(),
        5 => 64.0 / (3.0 * 10.0_f64.sqrt()),
        6 => 210.0_f64.sqrt(),
        _ => 2.5 * n as f64,
    })
}

/// Factor relating the two constants: `A(n) = factor · C(n)`. It is `n`
/// except in dimension five, where the sharp inequality carries `16/3`.
pub fn corollary_factor(n: usize) -> f64 {
    if n == 5 {
        16.0 / 3.0
    } else {
        n as f64
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn values() {
        assert!((pinching_constant(4).unwrap() - 0.6123724356957945).abs() < 1e-15);
        assert_eq!(corollary_constant(9).unwrap(), 22.5);
        assert_eq!(pinching_constant(12).unwrap(), 2.5);
        assert!(pinching_constant(3).is_err());
        assert!(corollary_constant(2).is_err());
    }

    #[test]
    fn corollary_relations() {
        for n in 4..=12 {
            let a = corollary_constant(n).unwrap();
            let c = pinching_constant(n).unwrap();
            assert!((a - corollary_factor(n) * c).abs() <= 1e-12 * a);
        }
        assert!(
            (corollary_constant(6).unwrap() - 6.0 * 70.0_f64.sqrt() / (2.0 * 3.0_f64.sqrt())).abs()
                < 1e-12
        );
    }
}
