//! Exponential-time reference algorithms.
//!
//! Everything here is exact or refuses: inputs beyond the configured
//! [`SearchLimits`] produce [`OracleError::TooLarge`], and a backtracking
//! search that runs out of budget reports [`Search::Indeterminate`] rather
//! than a negative answer.

mod endings;
mod multipartite;
mod paths;
mod ramsey;

use std::str::FromStr;

use thiserror::Error;

pub use endings::{ending_vertices_exact, MAX_EXACT_ENDINGS_PATH};
pub use multipartite::{find_blue_multipartite, find_blue_multipartite_naive};
pub use paths::{
    has_cycle_at_least_naive, longest_cycle_at_least, longest_path_exact, longest_path_naive,
};
pub use ramsey::{ramsey_exact, ramsey_scan, RamseyOutcome, RamseyTarget, ScanRow};

/// Hard cap for the subset dynamic programs (endpoint sets are `u32`).
pub const PATH_DP_HARD_CAP: usize = 30;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchLimits {
    /// Largest component handed to the (subset, endpoint) dynamic program.
    pub max_vertices_path_dp: usize,
    /// Largest `N` for which all `2^C(N,2)` colorings are enumerated.
    pub max_vertices_coloring_enum: usize,
    /// Node budget for one backtracking search.
    pub node_budget: u64,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            max_vertices_path_dp: 20,
            max_vertices_coloring_enum: 8,
            node_budget: 50_000_000,
        }
    }
}

impl SearchLimits {
    fn validate(self) -> Result<Self, OracleError> {
        if self.max_vertices_path_dp == 0
            || self.max_vertices_coloring_enum == 0
            || self.node_budget == 0
        {
            return Err(OracleError::InvalidLimits(
                "all limits must be positive".into(),
            ));
        }
        if self.max_vertices_path_dp > PATH_DP_HARD_CAP {
            return Err(OracleError::InvalidLimits(format!(
                "path_dp may not exceed {PATH_DP_HARD_CAP}"
            )));
        }
        Ok(self)
    }
}

/// Parses overrides of the form `path_dp=18,coloring_enum=7,node_budget=1000`
/// on top of the defaults. Unknown keys are rejected.
impl FromStr for SearchLimits {
    type Err = OracleError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut limits = SearchLimits::default();
        for item in s.split(',').map(str::trim).filter(|i| !i.is_empty()) {
            let (key, value) = item.split_once('=').ok_or_else(|| {
                OracleError::InvalidLimits(format!("expected key=value, got {item:?}"))
            })?;
            let parse = |v: &str| {
                v.trim()
                    .parse::<u64>()
                    .map_err(|_| OracleError::InvalidLimits(format!("bad number in {item:?}")))
            };
            match key.trim() {
                "path_dp" => limits.max_vertices_path_dp = parse(value)? as usize,
                "coloring_enum" => limits.max_vertices_coloring_enum = parse(value)? as usize,
                "node_budget" => limits.node_budget = parse(value)?,
                other => {
                    return Err(OracleError::InvalidLimits(format!(
                        "unknown limit {other:?}"
                    )))
                }
            }
        }
        limits.validate()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{what}: {n} vertices exceeds the limit of {limit}")]
    TooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid search limits: {0}")]
    InvalidLimits(String),
    #[error("invalid part sizes: {0}")]
    InvalidParts(String),
    #[error("search budget of {nodes} nodes exhausted")]
    Indeterminate { nodes: u64 },
    #[error("monotonicity violated: holds at N={holds} but fails at N={fails}")]
    NotMonotone { holds: usize, fails: usize },
}

/// Outcome of a budgeted search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Search<T> {
    Found(T),
    Absent,
    Indeterminate { nodes: u64 },
}

impl<T> Search<T> {
    pub fn is_found(&self) -> bool {
        matches!(self, Search::Found(_))
    }

    pub fn is_absent(&self) -> bool {
        matches!(self, Search::Absent)
    }
}
