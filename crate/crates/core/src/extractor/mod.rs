//! Witness extraction by induction on the number of parts.
//!
//! With `G` the red graph of a coloring `Γ` on at least `(k-1)(n-1) + m1`
//! vertices, each level either finishes or recurses on a smaller coloring
//! with one part fewer:
//!
//! * `k = 1`: any `m1` vertices form the blue part.
//! * Grow a sparse set `A` by absorbing sets `X`, `|X| <= m1`, with
//!   `|N(X)| <= 2|X|` in `G - A`. If `|A|` reaches `m1`, `A` has a small
//!   closed neighborhood and the neighborhood branch applies to it.
//! * Otherwise every small set expands in `G' = G - A`. Run the rotation
//!   closure in `G'`, take the ending set `S` and its first `m1` members `X`.
//!   If `X` has a small closed neighborhood, take the neighborhood branch.
//! * Otherwise choose `m2` members `S'` of `S` with no red edge to `A`, build
//!   a red cycle through `S ∪ N(S)`. If it has `n` vertices we are done;
//!   else delete `S' ∪ N(S')`, recurse without one `m2`, and join `S'` as
//!   a blue part to the result.
//!
//! The neighborhood branch deletes `B ∪ N(B)`, recurses on parts
//! `m2..mk` and joins `m1` vertices of `B` as the smallest part.
//!
//! Every inequality this relies on is checked as it is used; a violation
//! is reported as [`ExtractError::Defect`], never papered over.

mod witness;

use thiserror::Error;

pub use witness::{
    verify_witness, DocumentError, Witness, WitnessDocument, WitnessFailure, WitnessKind,
    WITNESS_SCHEMA,
};

use crate::graph::{Graph, TwoColoring, VertexSet};
use crate::posa::{connected_ending_subset, cycle_through, rotation_extension_closure};

/// Required cycle length and blue part sizes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Instance {
    n: usize,
    parts: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("at least one part size is required")]
    NoParts,
    #[error("part sizes must be at least 1")]
    ZeroPart,
    #[error("parts must be ascending")]
    NotAscending,
    #[error("n = {n} is below the threshold 3*mk + 5*m(k-1) = {threshold}")]
    BelowThreshold { n: usize, threshold: usize },
}

impl Instance {
    /// Validates the parts and, for two or more parts, the threshold
    /// `n >= 3*mk + 5*m(k-1)`.
    pub fn new(n: usize, parts: Vec<usize>) -> Result<Self, InstanceError> {
        let inst = Self::without_threshold(n, parts)?;
        if let Some(threshold) = inst.threshold() {
            if n < threshold {
                return Err(InstanceError::BelowThreshold { n, threshold });
            }
        }
        Ok(inst)
    }

    /// Validates only the parts. Useful for verifying witnesses against
    /// arbitrary targets; [`extract`] still refuses such instances.
    pub fn without_threshold(n: usize, parts: Vec<usize>) -> Result<Self, InstanceError> {
        if parts.is_empty() {
            return Err(InstanceError::NoParts);
        }
        if parts.contains(&0) {
            return Err(InstanceError::ZeroPart);
        }
        if parts.windows(2).any(|w| w[0] > w[1]) {
            return Err(InstanceError::NotAscending);
        }
        Ok(Instance { n, parts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn k(&self) -> usize {
        self.parts.len()
    }

    /// `3*mk + 5*m(k-1)`, or `None` for a single part.
    pub fn threshold(&self) -> Option<usize> {
        threshold(&self.parts)
    }

    /// Smallest coloring the extraction accepts: `(k-1)(n-1) + m1`.
    pub fn min_vertices(&self) -> usize {
        min_vertices(self.n, &self.parts)
    }

    fn meets_threshold(&self) -> bool {
        self.threshold().is_none_or(|t| self.n >= t)
    }
}

fn threshold(parts: &[usize]) -> Option<usize> {
    match parts {
        [.., a, b] => Some(3 * b + 5 * a),
        _ => None,
    }
}

fn min_vertices(n: usize, parts: &[usize]) -> usize {
    (parts.len() - 1) * n.saturating_sub(1) + parts[0]
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExtractError {
    #[error(transparent)]
    InvalidInstance(#[from] InstanceError),
    #[error("coloring has {have} vertices but at least {need} are required")]
    TooSmall { have: usize, need: usize },
    #[error("precondition of the neighborhood branch violated: {0}")]
    BranchPrecondition(String),
    #[error("internal defect at step {step}: {detail}")]
    Defect { step: &'static str, detail: String },
}

fn defect(step: &'static str, detail: impl Into<String>) -> ExtractError {
    ExtractError::Defect {
        step,
        detail: detail.into(),
    }
}

/// What happened at each level of an extraction. Vertex labels are those
/// of the original coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TraceEvent {
    /// A single part was taken directly.
    Base { depth: usize, part: Vec<usize> },
    /// The sparse set once no further small set could be absorbed.
    SparseSet { depth: usize, sparse: Vec<usize> },
    /// `B ∪ N(B)` was deleted and the smallest part joined from `B`.
    ClaimBranch {
        depth: usize,
        b: Vec<usize>,
        removed: Vec<usize>,
    },
    /// A cycle through `S ∪ N(S)` in the red graph on `scope` minus
    /// `sparse`, where `endings` is `S`.
    Cycle {
        depth: usize,
        scope: Vec<usize>,
        sparse: Vec<usize>,
        endings: Vec<usize>,
        cycle: Vec<usize>,
    },
    /// `S' ∪ N(S')` was deleted and `S'` joined as a part of size `m2`.
    Recursion {
        depth: usize,
        joined: Vec<usize>,
        removed: Vec<usize>,
    },
}

/// Extracts a red cycle through at least `inst.n()` vertices or a blue
/// complete multipartite graph with parts `inst.parts()`. The result has
/// been checked with [`verify_witness`].
pub fn extract(c: &TwoColoring, inst: &Instance) -> Result<Witness, ExtractError> {
    extract_traced(c, inst).map(|(w, _)| w)
}

/// [`extract`] together with the steps taken.
pub fn extract_traced(
    c: &TwoColoring,
    inst: &Instance,
) -> Result<(Witness, Vec<TraceEvent>), ExtractError> {
    check_entry(c, inst)?;
    let mut run = Run::new(inst.n);
    let w = run.extract(c, &identity(c.n()), &inst.parts, 0)?;
    finish(c, inst, w, run.trace)
}

/// Deletes `B ∪ N(B)` and joins `m1` vertices of `B` to a blue
/// `K_{m2,...,mk}` in the rest, or returns a red cycle found there.
/// Requires two or more parts, `|B| >= m1` and `|B ∪ N(B)| <= n - m2 + m1 - 1`.
pub fn claim_branch(
    c: &TwoColoring,
    inst: &Instance,
    b: &VertexSet,
) -> Result<Witness, ExtractError> {
    check_entry(c, inst)?;
    if inst.k() < 2 {
        return Err(ExtractError::BranchPrecondition(
            "needs at least two parts".into(),
        ));
    }
    if b.universe() != c.n() {
        return Err(ExtractError::BranchPrecondition(format!(
            "set over {} vertices for a coloring on {}",
            b.universe(),
            c.n()
        )));
    }
    let (n, parts) = (inst.n, &inst.parts);
    let closed = c.red().outside_neighborhood_unchecked(b).len() + b.len();
    if b.len() < parts[0] || closed + parts[1] >= n + parts[0] {
        return Err(ExtractError::BranchPrecondition(format!(
            "|B| = {} and |B ∪ N(B)| = {closed}, need |B| >= {} and |B ∪ N(B)| <= {}",
            b.len(),
            parts[0],
            (n + parts[0]).saturating_sub(parts[1] + 1)
        )));
    }
    let mut run = Run::new(n);
    let w = run.claim_branch(c, &identity(c.n()), parts, b, 0)?;
    finish(c, inst, w, run.trace).map(|(w, _)| w)
}

fn check_entry(c: &TwoColoring, inst: &Instance) -> Result<(), ExtractError> {
    if let (false, Some(threshold)) = (inst.meets_threshold(), inst.threshold()) {
        return Err(InstanceError::BelowThreshold {
            n: inst.n,
            threshold,
        }
        .into());
    }
    let need = inst.min_vertices();
    if c.n() < need {
        return Err(ExtractError::TooSmall { have: c.n(), need });
    }
    Ok(())
}

fn finish(
    c: &TwoColoring,
    inst: &Instance,
    w: Witness,
    trace: Vec<TraceEvent>,
) -> Result<(Witness, Vec<TraceEvent>), ExtractError> {
    verify_witness(c, inst, &w).map_err(|e| defect("verification", e.to_string()))?;
    Ok((w, trace))
}

fn identity(n: usize) -> Vec<usize> {
    (0..n).collect()
}

struct Run {
    n: usize,
    trace: Vec<TraceEvent>,
}

impl Run {
    fn new(n: usize) -> Self {
        Run {
            n,
            trace: Vec::new(),
        }
    }

    /// `labels[v]` is the original label of local vertex `v`; the returned
    /// witness uses local labels.
    fn extract(
        &mut self,
        c: &TwoColoring,
        labels: &[usize],
        parts: &[usize],
        depth: usize,
    ) -> Result<Witness, ExtractError> {
        let n = self.n;
        let big_n = c.n();
        let need = min_vertices(n, parts);
        if big_n < need {
            return Err(defect(
                "size",
                format!("{big_n} vertices at depth {depth}, need {need}"),
            ));
        }
        if threshold(parts).is_some_and(|t| n < t) {
            return Err(defect(
                "size",
                format!("threshold fails for {parts:?} at depth {depth}"),
            ));
        }
        let m1 = parts[0];
        if parts.len() == 1 {
            let part: Vec<usize> = (0..m1).collect();
            self.trace.push(TraceEvent::Base {
                depth,
                part: part.iter().map(|&v| labels[v]).collect(),
            });
            return Ok(Witness::BlueKPartite(vec![part]));
        }
        let m2 = parts[1];
        let g = c.red();
        let to_orig = |s: &VertexSet| s.iter().map(|v| labels[v]).collect::<Vec<_>>();

        // Sparse set: `g_prime` is `G - A` with the vertices of `A` kept
        // but isolated, so labels are shared with `G`.
        let mut a = VertexSet::new(big_n);
        let mut g_prime = g.clone();
        while a.len() < m1 {
            let Some(x) = find_non_expanding(&g_prime, &a, m1) else {
                break;
            };
            for v in &x {
                for w in g.neighbors(v).iter() {
                    g_prime.remove_edge(v, w);
                }
            }
            a.union_with(&x);
            let na = g.outside_neighborhood_unchecked(&a).len();
            if na > 2 * a.len() || a.len() >= 2 * m1 {
                return Err(defect(
                    "sparse set",
                    format!("|A| = {}, |N(A)| = {na}, m1 = {m1}", a.len()),
                ));
            }
        }
        self.trace.push(TraceEvent::SparseSet {
            depth,
            sparse: to_orig(&a),
        });
        if a.len() >= m1 {
            return self.claim_branch(c, labels, parts, &a, depth);
        }

        // Every set of at most m1 vertices now expands in G'.
        let p0 = (0..big_n)
            .find(|&v| !a.contains(v))
            .ok_or_else(|| defect("closure", "no vertex outside the sparse set"))?;
        let closure = rotation_extension_closure(&g_prime, p0)
            .map_err(|e| defect("closure", e.to_string()))?;
        let s = closure.endings();
        if s.len() < m1 {
            return Err(defect(
                "closure",
                format!("{} ending vertices, m1 = {m1}", s.len()),
            ));
        }
        let x = connected_ending_subset(&closure, m1)
            .map_err(|e| defect("closure", e.to_string()))?
            .members;
        let nx = g_prime.outside_neighborhood_unchecked(&x).len();
        if nx > 2 * s.len() {
            return Err(defect(
                "closure",
                format!("|N(X)| = {nx} exceeds twice |S| = {}", s.len()),
            ));
        }

        // |N_G'(X) ∪ X| < n - m2 + m1 - |A|
        if nx + x.len() + a.len() + m2 < n + m1 {
            return self.claim_branch(c, labels, parts, &x, depth);
        }
        if s.len() < m2 + 2 * m1 {
            return Err(defect(
                "neighborhood",
                format!("|S| = {} below m2 + 2*m1 = {}", s.len(), m2 + 2 * m1),
            ));
        }

        let na = g.outside_neighborhood_unchecked(&a);
        let chosen: Vec<usize> = s.iter().filter(|&v| !na.contains(v)).take(m2).collect();
        if chosen.len() < m2 {
            return Err(defect("cycle", "too few ending vertices avoid N(A)"));
        }
        let s_prime = VertexSet::from_slice(big_n, &chosen);
        let cycle =
            cycle_through(&g_prime, &closure, s).map_err(|e| defect("cycle", e.to_string()))?;
        let removed = s_prime.union(&g.outside_neighborhood_unchecked(&s_prime));
        let on_cycle = VertexSet::from_slice(big_n, &cycle);
        if !removed.is_subset(&on_cycle) {
            return Err(defect("cycle", "S' ∪ N(S') is not covered by the cycle"));
        }
        self.trace.push(TraceEvent::Cycle {
            depth,
            scope: labels.to_vec(),
            sparse: to_orig(&a),
            endings: to_orig(s),
            cycle: cycle.iter().map(|&v| labels[v]).collect(),
        });
        if cycle.len() >= n {
            return Ok(Witness::RedCycle(cycle));
        }

        self.trace.push(TraceEvent::Recursion {
            depth,
            joined: chosen.iter().map(|&v| labels[v]).collect(),
            removed: to_orig(&removed),
        });
        let mut rest = parts.to_vec();
        rest.remove(1);
        match self.recurse(c, labels, &rest, &removed, depth)? {
            Witness::BlueKPartite(mut found) => {
                found.push(chosen);
                found.sort_by_key(Vec::len);
                Ok(Witness::BlueKPartite(found))
            }
            red => Ok(red),
        }
    }

    fn claim_branch(
        &mut self,
        c: &TwoColoring,
        labels: &[usize],
        parts: &[usize],
        b: &VertexSet,
        depth: usize,
    ) -> Result<Witness, ExtractError> {
        let (n, m1, m2) = (self.n, parts[0], parts[1]);
        let removed = b.union(&c.red().outside_neighborhood_unchecked(b));
        if b.len() < m1 || removed.len() + m2 >= n + m1 {
            return Err(defect(
                "neighborhood branch",
                format!("|B| = {}, |B ∪ N(B)| = {}", b.len(), removed.len()),
            ));
        }
        self.trace.push(TraceEvent::ClaimBranch {
            depth,
            b: b.iter().map(|v| labels[v]).collect(),
            removed: removed.iter().map(|v| labels[v]).collect(),
        });
        match self.recurse(c, labels, &parts[1..], &removed, depth)? {
            Witness::BlueKPartite(mut found) => {
                found.insert(0, b.iter().take(m1).collect());
                Ok(Witness::BlueKPartite(found))
            }
            red => Ok(red),
        }
    }

    /// Extracts from `c` minus `removed` and maps the result back.
    fn recurse(
        &mut self,
        c: &TwoColoring,
        labels: &[usize],
        parts: &[usize],
        removed: &VertexSet,
        depth: usize,
    ) -> Result<Witness, ExtractError> {
        let keep = VertexSet::full(c.n()).difference(removed);
        let (sub, map) = c
            .induced(&keep)
            .map_err(|e| defect("recursion", e.to_string()))?;
        let sub_labels: Vec<usize> = map.new_to_old().iter().map(|&v| labels[v]).collect();
        let w = self.extract(&sub, &sub_labels, parts, depth + 1)?;
        Ok(w.map(|v| map.to_old(v)))
    }
}

/// The first set `X` of `1..=m` vertices outside `excluded`, by size and
/// then lexicographically, with `|N(X)| <= 2|X|` in `g`. Vertices of
/// `excluded` must be isolated in `g`.
fn find_non_expanding(g: &Graph, excluded: &VertexSet, m: usize) -> Option<VertexSet> {
    let candidates: Vec<usize> = (0..g.n()).filter(|&v| !excluded.contains(v)).collect();
    let mut chosen = VertexSet::new(g.n());
    (1..=m.min(candidates.len())).find_map(|s| {
        let nb = VertexSet::new(g.n());
        grow(g, &candidates, 0, &mut chosen, &nb, s).then(|| chosen.clone())
    })
}

/// Depth-first over subsets of `candidates[from..]` extending `chosen` to
/// `s` vertices. `nb` is `N(chosen)`; since each added vertex removes at
/// most itself from the neighborhood, a branch whose neighborhood already
/// exceeds `2s` by more than the vertices still to add is cut.
fn grow(
    g: &Graph,
    candidates: &[usize],
    from: usize,
    chosen: &mut VertexSet,
    nb: &VertexSet,
    s: usize,
) -> bool {
    let missing = s - chosen.len();
    if missing == 0 {
        return nb.len() <= 2 * s;
    }
    if nb.len() > 2 * s + missing {
        return false;
    }
    for i in from..=candidates.len() - missing {
        let v = candidates[i];
        chosen.insert(v);
        let mut next = nb.union(g.neighbors(v));
        next.difference_with(chosen);
        if grow(g, candidates, i + 1, chosen, &next, s) {
            return true;
        }
        chosen.remove(v);
    }
    false
}
