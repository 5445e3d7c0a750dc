//! Exhaustive Ramsey checks: every red/blue coloring of `K_N` is tested for
//! a blue `K_{parts}` (first, as it is usually cheaper) and then for the red
//! target.
//!
//! Colorings are indexed by a mask over the edges in graph6 column order
//! `(0,1), (0,2), (1,2), (0,3), …`; bit `e` set means edge `e` is red. The
//! mask space is cut into fixed blocks by its high bits; blocks are
//! independent and scanned in parallel, and the reported counterexample is
//! always the smallest failing mask.

use rayon::prelude::*;

use super::multipartite::Searcher;
use super::paths::{cycle_dp, path_dp};
use super::{OracleError, Search, SearchLimits};
use crate::graph::{Graph, TwoColoring};

/// Upper bound on the enumeration size regardless of configured limits.
const ENUM_HARD_CAP: usize = 11;
const BLOCK_BITS: usize = 10;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RamseyTarget {
    /// A red path on at least this many vertices.
    RedPath(usize),
    /// A red cycle through at least this many vertices (and at least 3).
    RedLongCycle(usize),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RamseyOutcome {
    /// Every coloring contains the red target or the blue multipartite graph.
    Holds,
    /// The smallest coloring that contains neither.
    Fails(TwoColoring),
}

impl RamseyOutcome {
    pub fn holds(&self) -> bool {
        matches!(self, RamseyOutcome::Holds)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScanRow {
    pub n: usize,
    pub outcome: RamseyOutcome,
}

struct Scratch {
    red: Vec<u64>,
    blue: Vec<u64>,
    dp: Vec<u32>,
    searcher: Searcher,
}

impl Scratch {
    fn new(n: usize) -> Self {
        Scratch {
            red: vec![0; n],
            blue: vec![0; n],
            dp: Vec::with_capacity(1 << n),
            searcher: Searcher::default(),
        }
    }
}

fn edge_list(n: usize) -> Vec<(usize, usize)> {
    (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect()
}

/// Whether the coloring given by `mask` contains one of the two targets.
fn covered(
    mask: u64,
    edges: &[(usize, usize)],
    target: RamseyTarget,
    parts: &[usize],
    budget: u64,
    s: &mut Scratch,
) -> Result<bool, OracleError> {
    let n = s.red.len();
    s.red.iter_mut().for_each(|r| *r = 0);
    let mut bits = mask;
    while bits != 0 {
        let e = bits.trailing_zeros() as usize;
        bits &= bits - 1;
        let (i, j) = edges[e];
        s.red[i] |= 1 << j;
        s.red[j] |= 1 << i;
    }
    let full = if n == 64 { u64::MAX } else { (1u64 << n) - 1 };
    for v in 0..n {
        s.blue[v] = full & !s.red[v] & !(1 << v);
    }

    s.searcher.load(&s.blue, parts, budget, false);
    match s.searcher.decide() {
        Search::Found(()) => return Ok(true),
        Search::Indeterminate { nodes } => return Err(OracleError::Indeterminate { nodes }),
        Search::Absent => {}
    }

    Ok(match target {
        RamseyTarget::RedPath(len) => len <= n && path_dp(&s.red, &mut s.dp).0 >= len,
        RamseyTarget::RedLongCycle(len) => cycle_dp(&s.red, len, &mut s.dp).is_some(),
    })
}

fn check_request(parts: &[usize], n: usize, limits: &SearchLimits) -> Result<(), OracleError> {
    if parts.is_empty() || parts.contains(&0) {
        return Err(OracleError::InvalidParts(format!("{parts:?}")));
    }
    let limit = limits.max_vertices_coloring_enum.min(ENUM_HARD_CAP);
    if n > limit {
        return Err(OracleError::TooLarge {
            what: "exhaustive coloring enumeration",
            n,
            limit,
        });
    }
    Ok(())
}

fn coloring_from_mask(n: usize, mask: u64) -> TwoColoring {
    let mut red = Graph::new(n);
    for (e, (i, j)) in edge_list(n).into_iter().enumerate() {
        if mask >> e & 1 == 1 {
            red.add_edge(i, j);
        }
    }
    TwoColoring::from_red(red)
}

/// Checks every coloring of `K_n` for a red `target` or a blue `K_{parts}`.
pub fn ramsey_exact(
    target: RamseyTarget,
    parts: &[usize],
    n: usize,
    limits: &SearchLimits,
) -> Result<RamseyOutcome, OracleError> {
    check_request(parts, n, limits)?;
    let edges = edge_list(n);
    let e = edges.len();
    let block_bits = e.min(BLOCK_BITS);
    let low_bits = e - block_bits;
    let budget = limits.node_budget;

    let first_failure = (0u64..1 << block_bits)
        .into_par_iter()
        .map_init(
            || Scratch::new(n),
            |scratch, block| -> Result<Option<u64>, OracleError> {
                let base = block << low_bits;
                for low in 0u64..1 << low_bits {
                    let mask = base | low;
                    if !covered(mask, &edges, target, parts, budget, scratch)? {
                        return Ok(Some(mask));
                    }
                }
                Ok(None)
            },
        )
        .find_first(|r| !matches!(r, Ok(None)));

    match first_failure {
        None => Ok(RamseyOutcome::Holds),
        Some(Ok(Some(mask))) => Ok(RamseyOutcome::Fails(coloring_from_mask(n, mask))),
        Some(Err(e)) => Err(e),
        Some(Ok(None)) => unreachable!(),
    }
}

/// Runs [`ramsey_exact`] for `N = min_n..=max_n` and checks that once the
/// property holds it keeps holding. The whole range is validated before
/// any enumeration starts.
pub fn ramsey_scan(
    target: RamseyTarget,
    parts: &[usize],
    min_n: usize,
    max_n: usize,
    limits: &SearchLimits,
) -> Result<Vec<ScanRow>, OracleError> {
    check_request(parts, max_n, limits)?;
    let mut rows: Vec<ScanRow> = Vec::new();
    for n in min_n..=max_n {
        let outcome = ramsey_exact(target, parts, n, limits)?;
        if let Some(prev) = rows.iter().rev().find(|r| r.outcome.holds()) {
            if !outcome.holds() {
                return Err(OracleError::NotMonotone {
                    holds: prev.n,
                    fails: n,
                });
            }
        }
        rows.push(ScanRow { n, outcome });
    }
    Ok(rows)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn limits() -> SearchLimits {
        SearchLimits::default()
    }

    #[test]
    fn r_p3_k2_is_three() {
        let t = RamseyTarget::RedPath(3);
        assert!(ramsey_exact(t, &[1, 1], 3, &limits()).unwrap().holds());
        match ramsey_exact(t, &[1, 1], 2, &limits()).unwrap() {
            RamseyOutcome::Fails(c) => assert_eq!(c, TwoColoring::all_red(2)),
            RamseyOutcome::Holds => panic!("K2 all red has no P3 and no blue edge"),
        }
    }

    #[test]
    fn single_part_needs_only_enough_vertices() {
        let t = RamseyTarget::RedLongCycle(5);
        assert!(ramsey_exact(t, &[1], 1, &limits()).unwrap().holds());
        assert!(!ramsey_exact(t, &[2], 1, &limits()).unwrap().holds());
        assert!(!ramsey_exact(t, &[1], 0, &limits()).unwrap().holds());
    }

    #[test]
    fn scan_finds_r_p4_k12() {
        // A blue K_{1,2} is a blue path on three vertices; with no red P4
        // either, small N fail. The scan must be monotone.
        let rows = ramsey_scan(RamseyTarget::RedPath(4), &[1, 2], 1, 6, &limits()).unwrap();
        let first = rows.iter().find(|r| r.outcome.holds()).unwrap().n;
        assert!(rows.iter().all(|r| r.outcome.holds() == (r.n >= first)));
        // (n-1)(k-1)+m1 with n=4, k=2, m1=1
        assert_eq!(first, 4);
    }

    #[test]
    fn cycle_target_k2() {
        let rows = ramsey_scan(RamseyTarget::RedLongCycle(3), &[1, 1], 1, 5, &limits()).unwrap();
        let first = rows.iter().find(|r| r.outcome.holds()).unwrap().n;
        assert_eq!(first, 3);
    }

    #[test]
    fn refuses_beyond_limit() {
        let err = ramsey_exact(RamseyTarget::RedPath(3), &[1, 1], 9, &limits()).unwrap_err();
        assert_eq!(
            err,
            OracleError::TooLarge {
                what: "exhaustive coloring enumeration",
                n: 9,
                limit: 8
            }
        );
    }

    #[test]
    fn scan_refuses_before_enumerating() {
        let tight = SearchLimits {
            max_vertices_coloring_enum: 3,
            ..limits()
        };
        let err = ramsey_scan(RamseyTarget::RedPath(3), &[1, 1], 1, 4, &tight).unwrap_err();
        assert!(matches!(err, OracleError::TooLarge { n: 4, limit: 3, .. }));
    }

    #[test]
    fn counterexample_is_smallest_mask() {
        // Only the all-red K3 lacks both a blue edge and a red P4.
        match ramsey_exact(RamseyTarget::RedPath(4), &[1, 1], 3, &limits()).unwrap() {
            RamseyOutcome::Fails(c) => assert_eq!(c, TwoColoring::all_red(3)),
            RamseyOutcome::Holds => panic!(),
        }
    }
}
