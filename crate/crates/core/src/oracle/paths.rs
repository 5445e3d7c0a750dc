//! Longest paths and long cycles by subset dynamic programming, plus naive
//! depth-first enumerators used to cross-check them.

use super::{OracleError, SearchLimits};
use crate::graph::{Graph, VertexSet};

/// Rows of the subgraph induced on `comp`, renumbered, and the labels.
fn compact(g: &Graph, comp: &VertexSet) -> (Vec<u64>, Vec<usize>) {
    let labels = comp.to_vec();
    let mut index = vec![usize::MAX; g.n()];
    for (i, &v) in labels.iter().enumerate() {
        index[v] = i;
    }
    let rows = labels
        .iter()
        .map(|&v| {
            g.neighbors(v)
                .iter()
                .filter(|&w| index[w] != usize::MAX)
                .fold(0u64, |acc, w| acc | 1 << index[w])
        })
        .collect();
    (rows, labels)
}

fn check_size(size: usize, limits: &SearchLimits, what: &'static str) -> Result<(), OracleError> {
    let limit = limits.max_vertices_path_dp.min(super::PATH_DP_HARD_CAP);
    if size > limit {
        return Err(OracleError::TooLarge {
            what,
            n: size,
            limit,
        });
    }
    Ok(())
}

/// `dp[mask]` = set of `v` such that some path with vertex set `mask` ends
/// at `v`. Returns the largest `(|mask|, mask, end)`.
pub(crate) fn path_dp(rows: &[u64], dp: &mut Vec<u32>) -> (usize, usize, usize) {
    let c = rows.len();
    dp.clear();
    dp.resize(1 << c, 0);
    let mut best = (0, 0, 0);
    for v in 0..c {
        dp[1 << v] = 1 << v;
    }
    for mask in 1..dp.len() {
        let mut ends = dp[mask];
        if ends == 0 {
            continue;
        }
        let size = mask.count_ones() as usize;
        if size > best.0 {
            best = (size, mask, ends.trailing_zeros() as usize);
        }
        while ends != 0 {
            let v = ends.trailing_zeros() as usize;
            ends &= ends - 1;
            let mut ext = rows[v] & !(mask as u64);
            while ext != 0 {
                let w = ext.trailing_zeros() as usize;
                ext &= ext - 1;
                dp[mask | 1 << w] |= 1 << w;
            }
        }
    }
    best
}

/// Walks back from `(mask, end)` until `stop` is reached.
fn unwind(rows: &[u64], dp: &[u32], mut mask: usize, mut end: usize, stop: usize) -> Vec<usize> {
    let mut seq = vec![end];
    while mask.count_ones() > 1 && mask != stop {
        let prev = mask ^ (1 << end);
        let candidates = dp[prev] & rows[end] as u32;
        debug_assert!(candidates != 0);
        end = candidates.trailing_zeros() as usize;
        mask = prev;
        seq.push(end);
    }
    seq.reverse();
    seq
}

/// A longest simple path of `g` (as a vertex sequence; its length is the
/// number of vertices). Each connected component is searched separately and
/// components no larger than the best path so far are skipped.
pub fn longest_path_exact(g: &Graph, limits: &SearchLimits) -> Result<Vec<usize>, OracleError> {
    let mut comps = g.components();
    comps.sort_by_key(|c| std::cmp::Reverse(c.len()));
    let mut best: Vec<usize> = Vec::new();
    let mut dp = Vec::new();
    for comp in comps {
        if comp.len() <= best.len() {
            break;
        }
        check_size(comp.len(), limits, "longest path dynamic program")?;
        let (rows, labels) = compact(g, &comp);
        let (size, mask, end) = path_dp(&rows, &mut dp);
        if size > best.len() {
            best = unwind(&rows, &dp, mask, end, 0)
                .into_iter()
                .map(|i| labels[i])
                .collect();
        }
    }
    Ok(best)
}

/// Searches for a cycle through at least `min_len` vertices (and at least
/// three). Paths are rooted at the smallest vertex of the cycle.
pub(crate) fn cycle_dp(rows: &[u64], min_len: usize, dp: &mut Vec<u32>) -> Option<Vec<usize>> {
    let c = rows.len();
    let min_len = min_len.max(3);
    if c < min_len {
        return None;
    }
    dp.clear();
    dp.resize(1 << c, 0);
    for s in 0..c {
        // Cycles rooted at s use only vertices >= s.
        if c - s < min_len {
            break;
        }
        let high = !((1u64 << (s + 1)) - 1);
        let root = 1usize << s;
        dp[root] = 1 << s;
        for sub in 0..(1usize << (c - s - 1)) {
            let mask = root | sub << (s + 1);
            let mut ends = dp[mask];
            if ends == 0 {
                continue;
            }
            if mask.count_ones() as usize >= min_len {
                let closing = ends & rows[s] as u32;
                if closing != 0 {
                    let end = closing.trailing_zeros() as usize;
                    return Some(unwind(rows, dp, mask, end, root));
                }
            }
            while ends != 0 {
                let v = ends.trailing_zeros() as usize;
                ends &= ends - 1;
                let mut ext = rows[v] & !(mask as u64) & high;
                while ext != 0 {
                    let w = ext.trailing_zeros() as usize;
                    ext &= ext - 1;
                    dp[mask | 1 << w] |= 1 << w;
                }
            }
        }
    }
    None
}

/// A cycle with at least `max(min_len, 3)` vertices, if one exists.
/// Components with fewer than that many vertices are skipped without search.
pub fn longest_cycle_at_least(
    g: &Graph,
    min_len: usize,
    limits: &SearchLimits,
) -> Result<Option<Vec<usize>>, OracleError> {
    let need = min_len.max(3);
    let mut dp = Vec::new();
    for comp in g.components() {
        if comp.len() < need {
            continue;
        }
        check_size(comp.len(), limits, "long cycle dynamic program")?;
        let (rows, labels) = compact(g, &comp);
        if let Some(cycle) = cycle_dp(&rows, need, &mut dp) {
            return Ok(Some(cycle.into_iter().map(|i| labels[i]).collect()));
        }
    }
    Ok(None)
}

/// Number of vertices on a longest path, by enumerating every simple path.
pub fn longest_path_naive(g: &Graph) -> usize {
    fn dfs(g: &Graph, v: usize, on: &mut VertexSet, depth: usize, best: &mut usize) {
        *best = (*best).max(depth);
        if *best == g.n() {
            return;
        }
        for w in g.neighbors(v).iter() {
            if on.insert(w) {
                dfs(g, w, on, depth + 1, best);
                on.remove(w);
            }
        }
    }
    let mut best = 0;
    for s in 0..g.n() {
        let mut on = VertexSet::new(g.n());
        on.insert(s);
        dfs(g, s, &mut on, 1, &mut best);
    }
    best
}

/// Whether `g` has a cycle through at least `max(min_len, 3)` vertices, by
/// enumerating simple paths from each start over larger-index vertices.
pub fn has_cycle_at_least_naive(g: &Graph, min_len: usize) -> bool {
    fn dfs(g: &Graph, s: usize, v: usize, on: &mut VertexSet, depth: usize, need: usize) -> bool {
        if depth >= need && g.has_edge(v, s) {
            return true;
        }
        for w in g.neighbors(v).iter().filter(|&w| w > s) {
            if on.insert(w) {
                if dfs(g, s, w, on, depth + 1, need) {
                    return true;
                }
                on.remove(w);
            }
        }
        false
    }
    let need = min_len.max(3);
    (0..g.n()).any(|s| {
        let mut on = VertexSet::new(g.n());
        on.insert(s);
        dfs(g, s, s, &mut on, 1, need)
    })
}
