use crate::error::{CliError, Result};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "WEYL_PINCH_THREADS";

/// Sizes the global rayon pool from [`THREADS_ENV`]; leaves rayon's
/// default (available parallelism) when the variable is unset or empty.
pub fn configure() -> Result<()> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    if raw.trim().is_empty() {
        return Ok(());
    }
    let threads: usize = match raw.trim().parse() {
        Ok(t) if t >= 1 => t,
        _ => {
            return Err(CliError::Usage(format!(
                "{THREADS_ENV} must be a positive integer, got {raw:?}"
            )))
        }
    };
    rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build_global()
        .map_err(|e| CliError::Usage(format!("cannot size the thread pool: {e}")))
}
