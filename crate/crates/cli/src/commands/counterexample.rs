use serde::Serialize;
use weyl_pinch::catalog::{
    counterexample_crossing, counterexample_threshold, s2xs4_counterexample, CounterexamplePoint,
};

use super::{say, Context};
use crate::cli::CounterexampleArgs;
use crate::error::{CliError, Result};

#[derive(Debug, Serialize)]
struct CounterexampleReport {
    beta_min: f64,
    beta_max: f64,
    points: Vec<CounterexamplePoint>,
    bracket: Option<(f64, f64)>,
    crossing: Option<f64>,
    threshold: f64,
    deviation: Option<f64>,
}

pub fn run(args: &CounterexampleArgs, ctx: &Context) -> Result<bool> {
    if args.beta_min >= args.beta_max {
        return Err(CliError::Usage(
            "--beta-min must be smaller than --beta-max".into(),
        ));
    }
    let steps = args.steps as usize;
    let width = args.beta_max - args.beta_min;
    let points = (0..steps)
        .map(|i| s2xs4_counterexample(args.beta_min + width * i as f64 / (steps - 1) as f64))
        .collect::<weyl_pinch::Result<Vec<_>>>()?;
    let target = 10.0_f64.sqrt();
    let bracket = points
        .windows(2)
        .find(|w| (w[0].a_m - target).signum() != (w[1].a_m - target).signum())
        .map(|w| (w[0].beta, w[1].beta));
    let crossing = match bracket {
        Some((lo, hi)) => counterexample_crossing(lo, hi, 1e-13)?,
        None => None,
    };
    let threshold = counterexample_threshold();
    let deviation = crossing.map(|c| (c - threshold).abs());

    let out = args.out.as_deref();
    say(
        out,
        "S^2 x S^4 with metric beta g_{S^2} + g_{S^4}; A_M = S/|W|",
    );
    for p in points.iter().step_by((steps / 10).max(1)) {
        say(
            out,
            format!(
                "  beta {:>10.6}  S {:>12.6}  |W| {:>10.6}  A_M {:>10.6}",
                p.beta, p.scalar, p.weyl_norm, p.a_m
            ),
        );
    }
    match (bracket, crossing) {
        (Some((lo, hi)), Some(c)) => {
            say(
                out,
                format!("A_M crosses sqrt(10) in [{lo:.6}, {hi:.6}], at beta = {c:.12}"),
            );
        }
        _ => say(out, "A_M does not cross sqrt(10) in the sweep"),
    }
    say(
        out,
        format!("threshold (sqrt(15) - 3 sqrt(10))/(3 sqrt(10) - 6 sqrt(15)) = {threshold:.12}"),
    );
    if let Some(d) = deviation {
        say(out, format!("|crossing - threshold| = {d:.3e}"));
    }
    let report = CounterexampleReport {
        beta_min: args.beta_min,
        beta_max: args.beta_max,
        points,
        bracket,
        crossing,
        threshold,
        deviation,
    };
    ctx.emit(out, None, &report)?;
    Ok(true)
}
