use std::path::Path;

use serde::Serialize;
use weyl_pinch::catalog::{sharp_bound_ratio, squashed_cp3_weyl, BoundReport};
use weyl_pinch::constants::sqrt_3_over_10;
use weyl_pinch::q_functional::q_report;
use weyl_pinch::weyl_space::{is_algebraic_weyl, ResidualReport};

use super::{say, Context};
use crate::error::Result;

pub const TOLERANCE: f64 = 1e-12;
/// Scalar curvature of the squashed metric in the fixture normalization.
pub const SCALAR: f64 = 7.5;

#[derive(Debug, Serialize)]
struct SquashedReport {
    constraints: ResidualReport,
    weyl_norm_sq: f64,
    q: f64,
    ratio: f64,
    expected_weyl_norm_sq: f64,
    expected_q: f64,
    expected_ratio: f64,
    bound: BoundReport,
    passed: bool,
}

pub fn run(out: Option<&Path>, ctx: &Context) -> Result<bool> {
    let w = squashed_cp3_weyl()?;
    let constraints = is_algebraic_weyl(&w, TOLERANCE);
    let r = q_report(&w)?;
    let weyl_norm_sq = r.norm * r.norm;
    let bound = sharp_bound_ratio(SCALAR, r.q, weyl_norm_sq, 6)?.named("squashed CP^3");
    let passed = constraints.pass
        && (weyl_norm_sq - 7.5).abs() <= TOLERANCE
        && (r.q - 11.25).abs() <= TOLERANCE
        && (r.ratio - sqrt_3_over_10()).abs() <= TOLERANCE;

    say(
        out,
        format!(
            "constraint residual {:.3e} (tolerance {:e})",
            constraints.max_residual, TOLERANCE
        ),
    );
    say(out, format!("|W|^2 = {weyl_norm_sq:.15} (expected 7.5)"));
    say(out, format!("Q     = {:.15} (expected 11.25)", r.q));
    say(
        out,
        format!(
            "Q/|W|^3 = {:.15} (expected sqrt(3/10) = {:.15})",
            r.ratio,
            sqrt_3_over_10()
        ),
    );
    say(
        out,
        format!(
            "Yamabe bound ratio {:.15} (strict, equality {})",
            bound.ratio, bound.equality
        ),
    );
    say(
        out,
        if passed {
            "squashed CP^3 fixture: pass"
        } else {
            "squashed CP^3 fixture: FAIL"
        },
    );
    let report = SquashedReport {
        constraints,
        weyl_norm_sq,
        q: r.q,
        ratio: r.ratio,
        expected_weyl_norm_sq: 7.5,
        expected_q: 11.25,
        expected_ratio: sqrt_3_over_10(),
        bound,
        passed,
    };
    ctx.emit(out, None, &report)?;
    Ok(passed)
}
