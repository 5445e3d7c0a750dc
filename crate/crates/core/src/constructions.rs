//! The two extremal colorings: disjoint red cliques showing the lower bound
//! `(k-1)(n-1) + m1 - 1`, and two blue cliques joined in red showing that
//! paths are not `K_{m1,m2}`-good for `n = 2*m2 - 2`.
//!
//! Blocks occupy contiguous index ranges in declaration order.

use std::ops::Range;

use thiserror::Error;

use crate::graph::{Graph, TwoColoring};
use crate::oracle::{
    find_blue_multipartite, longest_cycle_at_least, longest_path_exact, OracleError, Search,
    SearchLimits,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("at least one part size is required")]
    NoParts,
    #[error("part sizes must be at least 1")]
    ZeroPart,
    #[error("parts must be ascending")]
    NotAscending,
    #[error("cycle length n must be at least 2, got {0}")]
    PathTooShort(usize),
    #[error("m2 must be at least 2, got {0}")]
    M2TooSmall(usize),
    #[error("need 1 <= m1 <= m2, got m1={m1}, m2={m2}")]
    BadM1 { m1: usize, m2: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtremalSpec {
    /// `block_count` red cliques of `block_size` vertices plus a red clique
    /// of `tail_size`, everything between blocks blue.
    LowerBound {
        block_size: usize,
        block_count: usize,
        tail_size: usize,
    },
    /// Blue cliques of `m2 + m1 - 1` and `m2 - 2` vertices, red between.
    PathBad { m1: usize, m2: usize },
}

impl ExtremalSpec {
    /// Parameters for a red cycle of length `n` against `K_{parts}`.
    pub fn lower_bound(n: usize, parts: &[usize]) -> Result<Self, ConstructionError> {
        if parts.is_empty() {
            return Err(ConstructionError::NoParts);
        }
        if parts.contains(&0) {
            return Err(ConstructionError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(ConstructionError::NotAscending);
        }
        if n < 2 {
            return Err(ConstructionError::PathTooShort(n));
        }
        Ok(ExtremalSpec::LowerBound {
            block_size: n - 1,
            block_count: parts.len() - 1,
            tail_size: parts[0] - 1,
        })
    }

    pub fn path_bad(m1: usize, m2: usize) -> Result<Self, ConstructionError> {
        if m2 < 2 {
            return Err(ConstructionError::M2TooSmall(m2));
        }
        if m1 == 0 || m1 > m2 {
            return Err(ConstructionError::BadM1 { m1, m2 });
        }
        Ok(ExtremalSpec::PathBad { m1, m2 })
    }

    /// Index ranges of the blocks, in layout order (empty blocks included).
    pub fn blocks(&self) -> Vec<Range<usize>> {
        let sizes: Vec<usize> = match *self {
            ExtremalSpec::LowerBound {
                block_size,
                block_count,
                tail_size,
            } => std::iter::repeat_n(block_size, block_count)
                .chain(std::iter::once(tail_size))
                .collect(),
            ExtremalSpec::PathBad { m1, m2 } => vec![m2 + m1 - 1, m2 - 2],
        };
        let mut start = 0;
        sizes
            .into_iter()
            .map(|s| {
                let r = start..start + s;
                start += s;
                r
            })
            .collect()
    }

    pub fn vertex_count(&self) -> usize {
        self.blocks().last().map_or(0, |r| r.end)
    }

    pub fn build(&self) -> TwoColoring {
        let blocks = self.blocks();
        let n = self.vertex_count();
        let same_block =
            |u: usize, v: usize| blocks.iter().any(|b| b.contains(&u) && b.contains(&v));
        let inside_red = matches!(self, ExtremalSpec::LowerBound { .. });
        let mut red = Graph::new(n);
        for v in 1..n {
            for u in 0..v {
                if same_block(u, v) == inside_red {
                    red.add_edge(u, v);
                }
            }
        }
        TwoColoring::from_red(red)
    }
}

/// `k-1` red cliques of size `n-1` and one red clique of size `m1-1`, all
/// other edges blue: `(k-1)(n-1) + m1 - 1` vertices.
pub fn lower_bound_coloring(n: usize, parts: &[usize]) -> Result<TwoColoring, ConstructionError> {
    Ok(ExtremalSpec::lower_bound(n, parts)?.build())
}

/// Two blue cliques of orders `m2+m1-1` and `m2-2` with every edge between
/// them red: `2*m2 - 2 + m1 - 1` vertices.
pub fn path_bad_coloring(m1: usize, m2: usize) -> Result<TwoColoring, ConstructionError> {
    Ok(ExtremalSpec::path_bad(m1, m2)?.build())
}

/// A structure the coloring is claimed not to contain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExtremalClaim {
    /// No red path on `n` vertices.
    NoRedPath(usize),
    /// No red cycle through `n` or more vertices.
    NoRedLongCycle(usize),
    /// No blue complete multipartite graph with these part sizes.
    NoBlueKPartite(Vec<usize>),
}

/// Decides `claim` exactly with the oracles. Red components smaller than
/// the requested length are discharged without search; anything the
/// oracles cannot settle within `limits` is an error, never a pass.
pub fn check_extremal(
    c: &TwoColoring,
    claim: &ExtremalClaim,
    limits: &SearchLimits,
) -> Result<bool, OracleError> {
    let largest_red_component = || {
        c.red()
            .components()
            .iter()
            .map(|s| s.len())
            .max()
            .unwrap_or(0)
    };
    match claim {
        ExtremalClaim::NoRedPath(n) => {
            if largest_red_component() < *n {
                return Ok(true);
            }
            Ok(longest_path_exact(c.red(), limits)?.len() < *n)
        }
        ExtremalClaim::NoRedLongCycle(n) => {
            Ok(longest_cycle_at_least(c.red(), *n, limits)?.is_none())
        }
        ExtremalClaim::NoBlueKPartite(parts) => match find_blue_multipartite(c, parts, limits)? {
            Search::Found(_) => Ok(false),
            Search::Absent => Ok(true),
            Search::Indeterminate { nodes } => Err(OracleError::Indeterminate { nodes }),
        },
    }
}
