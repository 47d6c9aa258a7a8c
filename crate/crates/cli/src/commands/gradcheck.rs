use serde::Serialize;
use weyl_pinch::optimizer::{random_unit_coords, run_rng};
use weyl_pinch::q_functional::{coordinate_gradient_fd, relative_deviation};
use weyl_pinch::{q_gradient, WeylBasis};

use super::{say, Context};
use crate::cli::GradcheckArgs;
use crate::error::Result;

pub const STEP: f64 = 1e-4;
pub const TOLERANCE: f64 = 1e-6;

#[derive(Debug, Serialize)]
struct GradcheckReport {
    dim: usize,
    samples: u64,
    step: f64,
    tolerance: f64,
    max_deviation: f64,
    worst_seed: u64,
    deviations: Vec<f64>,
    passed: bool,
}

pub fn run(args: &GradcheckArgs, ctx: &Context) -> Result<bool> {
    let dim = args.dim as usize;
    let basis = WeylBasis::for_dimension(dim)?;
    let mut deviations = Vec::with_capacity(args.samples as usize);
    for i in 0..args.samples {
        let seed = args.seed.wrapping_add(i);
        let w = basis.embed(&random_unit_coords(&mut run_rng(seed), basis.m())?)?;
        let mut analytic = basis.project(&q_gradient(&w))?;
        if args.sabotage {
            let scale = analytic.values.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
            analytic.values[0] += 1e-3 * scale;
        }
        let fd = coordinate_gradient_fd(&w, &basis, STEP)?;
        deviations.push(relative_deviation(&fd, &analytic));
    }
    let (worst, max_deviation) =
        deviations
            .iter()
            .copied()
            .enumerate()
            .fold(
                (0, 0.0),
                |best, (i, d)| if d > best.1 { (i, d) } else { best },
            );
    let worst_seed = args.seed.wrapping_add(worst as u64);
    let passed = max_deviation <= TOLERANCE;

    let out = args.out.as_deref();
    say(
        out,
        format!(
            "dimension {dim}, {} samples: max relative deviation {max_deviation:.3e} (seed {worst_seed}), tolerance {TOLERANCE:e}",
            args.samples
        ),
    );
    if !passed {
        eprintln!("gradient check failed: worst sample seed {worst_seed}");
    }
    let report = GradcheckReport {
        dim,
        samples: args.samples,
        step: STEP,
        tolerance: TOLERANCE,
        max_deviation,
        worst_seed,
        deviations,
        passed,
    };
    ctx.emit(out, Some(args.seed), &report)?;
    Ok(passed)
}
