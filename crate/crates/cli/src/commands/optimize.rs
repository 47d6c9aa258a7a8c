use weyl_pinch::constants::{pinching_constant, sqrt6_over_4, sqrt_3_over_10};
use weyl_pinch::optimizer::{search, RunConfig, RunStatus};
use weyl_pinch::WeylBasis;

use super::{say, Context};
use crate::cli::OptimizeArgs;
use crate::error::Result;

pub fn run(args: &OptimizeArgs, ctx: &Context) -> Result<bool> {
    let dim = args.dim as usize;
    let basis = WeylBasis::for_dimension(dim)?;
    let mut config = RunConfig::new(dim, args.starts as usize, args.seed);
    config.grad_tol = args.tol;
    config.max_iter = args.max_iter;
    let summary = search(&config, &basis)?;

    let out = args.out.as_deref();
    let best = summary.best_run();
    let converged = summary
        .runs
        .iter()
        .filter(|r| r.status == RunStatus::Converged)
        .count();
    say(
        out,
        format!("dimension {dim}, Weyl subspace of dimension {}", basis.m()),
    );
    say(
        out,
        format!(
            "best ratio {:.15} (run {}, seed {}, {} iterations)",
            best.best_ratio,
            summary.best,
            best.seed,
            best.trace.len() - 1
        ),
    );
    say(
        out,
        format!("converged runs {converged}/{}", summary.runs.len()),
    );
    say(
        out,
        format!("reference C({dim})      = {:.15}", pinching_constant(dim)?),
    );
    say(
        out,
        format!("reference sqrt(6)/4  = {:.15}", sqrt6_over_4()),
    );
    say(
        out,
        format!("reference sqrt(3/10) = {:.15}", sqrt_3_over_10()),
    );
    ctx.emit(out, Some(args.seed), &summary)?;
    Ok(true)
}
