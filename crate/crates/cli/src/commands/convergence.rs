use std::fs::File;
use std::io;

use weyl_pinch::constants::sqrt6_over_4;
use weyl_pinch::optimizer::{ascend, error_log, random_unit_coords, run_rng, RunConfig, RunResult};
use weyl_pinch::WeylBasis;

use super::Context;
use crate::cli::ConvergenceArgs;
use crate::error::{CliError, Result};

pub const HEADER: [&str; 4] = ["k", "ratio", "e_k", "grad_norm"];

fn write_csv<W: io::Write>(writer: W, run: &RunResult, target: f64) -> Result<()> {
    let mut csv = csv::Writer::from_writer(writer);
    csv.write_record(HEADER)?;
    for (rec, (_, e)) in run.trace.iter().zip(error_log(run, target)) {
        csv.write_record([
            rec.k.to_string(),
            format!("{:.16e}", rec.ratio),
            format!("{e:.16e}"),
            format!("{:.16e}", rec.grad_norm),
        ])?;
    }
    csv.flush().map_err(csv::Error::from)?;
    Ok(())
}

pub fn run(args: &ConvergenceArgs, _ctx: &Context) -> Result<bool> {
    let dim = args.dim as usize;
    let target = args.target.unwrap_or_else(sqrt6_over_4);
    let basis = WeylBasis::for_dimension(dim)?;
    let mut config = RunConfig::new(dim, 1, args.seed);
    config.grad_tol = args.tol;
    config.max_iter = args.max_iter;
    let start = random_unit_coords(&mut run_rng(args.seed), basis.m())?;
    let run = ascend(&start, &basis, &config, args.seed)?;

    let last = run.trace.last().expect("trace holds the start");
    let final_error = (last.ratio - target).abs();
    let summary = format!(
        "dimension {dim}, seed {}: {} iterations, final ratio {:.15}, final e_k {final_error:.3e}, status {:?}",
        args.seed,
        run.trace.len() - 1,
        last.ratio,
        run.status
    );
    match &args.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| CliError::Io {
                path: path.clone(),
                source,
            })?;
            write_csv(file, &run, target)?;
            println!("{summary}");
        }
        None => {
            write_csv(io::stdout().lock(), &run, target)?;
            eprintln!("{summary}");
        }
    }
    Ok(true)
}
