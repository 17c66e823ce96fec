//! Monte Carlo harness: seeded trials over parameter grids, summarised as
//! records and written as deterministic CSV.
//!
//! Every trial draws from `child_seed(master, trial)`, trials run in parallel
//! on a rayon pool sized by `WIDTHLAB_THREADS` (unset or `0` means one thread
//! per core), and results are sorted by `(cell, trial)` before anything is
//! written, so output never depends on scheduling.

mod bracket;
mod config;
mod expansion;
mod incidence;
mod profile;
mod record;
mod sparse;
mod uniformity;

pub use bracket::{excess_width_bound, width_bracket_small, CubicCheck, WidthBracketReport};
pub use config::{ExperimentConfig, ExperimentKind};
pub use expansion::{cubic_expansion_survey, sample_simple_cubic, ExpansionSurvey};
pub use incidence::high_degree_incidence;
pub use profile::{degree_profile, DegreeProfile};
pub use record::{format_float, read_csv, write_csv, TrialRecord, CSV_HEADER};
pub use sparse::{run_sparse_scaling, summarize, CellSummary};
pub use uniformity::{chi_square_two_sample, coupling_uniformity_test, ChiSquare, ConditionedTest, UniformityReport};

use crate::error::{Error, Result};

/// Thread count from `WIDTHLAB_THREADS`; `0` or unset lets rayon decide.
pub fn thread_count() -> Result<usize> {
    match std::env::var("WIDTHLAB_THREADS") {
        Ok(s) if !s.trim().is_empty() => {
            s.trim().parse().map_err(|_| Error::argument(format!("WIDTHLAB_THREADS = {s:?} is not a count")))
        }
        _ => Ok(0),
    }
}

pub(crate) fn with_pool<T: Send>(f: impl FnOnce() -> T + Send) -> Result<T> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(thread_count()?)
        .build()
        .map_err(|e| Error::argument(format!("cannot start thread pool: {e}")))?;
    Ok(pool.install(f))
}
