//! Pósa rotation-extension with a fixed start vertex.
//!
//! A *rotation* of `p0 … pi … pt` along the chord `pt pi` is
//! `p0 … pi pt pt-1 … pi+1`: same vertex set, same start, new end `pi+1`.
//! Paths reachable by repeated rotation are *derived* paths and their last
//! vertices are the *ending vertices*.
//!
//! [`rotation_extension_closure`] explores ending vertices breadth first,
//! keeping one derived path per ending vertex (recorded as a parent pointer
//! plus pivot), and extends the path whenever some derived path has an end
//! with a neighbor off the path. The result is rotation-maximal: every
//! neighbor of every ending vertex lies on the path.
//!
//! Tie-breaking is always by smallest vertex index, so results are
//! reproducible.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::{Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosaError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("not a path: {0}")]
    NotAPath(String),
    #[error("pivot position {pivot} invalid for a path with {len} vertices")]
    PivotOutOfRange { pivot: usize, len: usize },
    #[error("rotation needs the chord {from}-{to}, which is not an edge")]
    MissingChord { from: usize, to: usize },
    #[error("requested {requested} ending vertices but only {available} exist")]
    InsufficientEndings { requested: usize, available: usize },
    #[error("vertex {0} is not an ending vertex of the closure")]
    NotAnEnding(usize),
    #[error("ending set is not connected: ancestor {ancestor} of {vertex} is missing")]
    NotConnected { vertex: usize, ancestor: usize },
    #[error("closure is not rotation-maximal: {0} is a neighbor off the path")]
    NotRotationMaximal(usize),
    #[error("the constructed cycle has only {0} vertices")]
    DegenerateCycle(usize),
    #[error("empty ending set")]
    EmptyEndingSet,
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

/// A path with a distinguished start (its first vertex).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RotationPath {
    vertices: Vec<usize>,
}

impl RotationPath {
    /// Validates that `vertices` is a nonempty simple path in `g`.
    pub fn new(g: &Graph, vertices: Vec<usize>) -> Result<Self, PosaError> {
        if vertices.is_empty() {
            return Err(PosaError::NotAPath("no vertices".into()));
        }
        if let Some(&v) = vertices.iter().find(|&&v| v >= g.n()) {
            return Err(PosaError::VertexOutOfRange {
                vertex: v,
                n: g.n(),
            });
        }
        if !g.is_path(&vertices) {
            return Err(PosaError::NotAPath(format!("{vertices:?}")));
        }
        Ok(RotationPath { vertices })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn into_vertices(self) -> Vec<usize> {
        self.vertices
    }

    pub fn start(&self) -> usize {
        self.vertices[0]
    }

    pub fn last(&self) -> usize {
        *self.vertices.last().expect("paths are nonempty")
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn position(&self, v: usize) -> Option<usize> {
        self.vertices.iter().position(|&w| w == v)
    }

    pub fn vertex_set(&self, n: usize) -> VertexSet {
        VertexSet::from_slice(n, &self.vertices)
    }

    /// Rotates along the chord from the last vertex to the vertex at
    /// `pivot` (0-based). `pivot == len - 2` returns the path unchanged.
    pub fn rotate(&self, g: &Graph, pivot: usize) -> Result<RotationPath, PosaError> {
        let len = self.len();
        if len < 2 || pivot + 2 > len {
            return Err(PosaError::PivotOutOfRange { pivot, len });
        }
        let (last, at) = (self.last(), self.vertices[pivot]);
        if !g.has_edge(last, at) {
            return Err(PosaError::MissingChord { from: last, to: at });
        }
        Ok(self.rotated(pivot))
    }

    fn rotated(&self, pivot: usize) -> RotationPath {
        let mut vertices = self.vertices.clone();
        vertices[pivot + 1..].reverse();
        RotationPath { vertices }
    }
}

/// How an ending vertex was first reached: rotating the stored path of
/// `parent` along the chord to `pivot`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Derivation {
    pub parent: usize,
    pub pivot: usize,
}

/// One rotation of a schedule: rotating the derived path ending at `from`
/// along the chord `from–pivot` yields the derived path ending at `endpoint`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RotationStep {
    pub endpoint: usize,
    pub from: usize,
    pub pivot: usize,
}

/// A path, its ending vertices and the derivation forest behind them.
#[derive(Debug, Clone)]
pub struct ClosureResult {
    path: RotationPath,
    endings: VertexSet,
    order: Vec<usize>,
    derivation: Vec<Option<Derivation>>,
}

impl ClosureResult {
    pub fn path(&self) -> &RotationPath {
        &self.path
    }

    /// The ending vertices found (empty for a single-vertex path).
    pub fn endings(&self) -> &VertexSet {
        &self.endings
    }

    /// Ending vertices in discovery order; the first is the last vertex of
    /// the path.
    pub fn discovery_order(&self) -> &[usize] {
        &self.order
    }

    /// Parent record of `x`; `None` for the root or for non-endings.
    pub fn derivation(&self, x: usize) -> Option<Derivation> {
        self.derivation.get(x).copied().flatten()
    }

    /// Rotations from the path to the derived path ending at `x`, in order.
    pub fn rotation_schedule(&self, x: usize) -> Option<Vec<RotationStep>> {
        if !self.endings.contains(x) {
            return None;
        }
        let mut steps = Vec::new();
        let mut v = x;
        while let Some(d) = self.derivation(v) {
            steps.push(RotationStep {
                endpoint: v,
                from: d.parent,
                pivot: d.pivot,
            });
            v = d.parent;
        }
        steps.reverse();
        Some(steps)
    }

    /// Replays the derivation of `x`, checking every rotation against `g`.
    pub fn derived_path(&self, g: &Graph, x: usize) -> Result<RotationPath, PosaError> {
        let schedule = self.rotation_schedule(x).ok_or(PosaError::NotAnEnding(x))?;
        replay(g, &self.path, &schedule)
    }
}

/// Applies a rotation schedule to `path`.
pub fn replay(
    g: &Graph,
    path: &RotationPath,
    schedule: &[RotationStep],
) -> Result<RotationPath, PosaError> {
    let mut current = path.clone();
    for step in schedule {
        if current.last() != step.from {
            return Err(PosaError::Internal(format!(
                "schedule expects a path ending at {}, found {}",
                step.from,
                current.last()
            )));
        }
        let pivot = current
            .position(step.pivot)
            .ok_or_else(|| PosaError::Internal(format!("pivot {} not on path", step.pivot)))?;
        current = current.rotate(g, pivot)?;
        if current.last() != step.endpoint {
            return Err(PosaError::Internal(format!(
                "rotation at {} ends at {}, expected {}",
                step.pivot,
                current.last(),
                step.endpoint
            )));
        }
    }
    Ok(current)
}

/// Extends `path` greedily by the smallest-index neighbor off the path.
fn extend_greedily(g: &Graph, path: &mut Vec<usize>, on_path: &mut VertexSet) {
    loop {
        let last = *path.last().expect("nonempty");
        match g.neighbors(last).difference(on_path).first() {
            Some(w) => {
                path.push(w);
                on_path.insert(w);
            }
            None => return,
        }
    }
}

/// The path obtained from `p0` by repeatedly stepping to the smallest-index
/// unused neighbor.
pub fn greedy_path(g: &Graph, p0: usize) -> Result<RotationPath, PosaError> {
    if p0 >= g.n() {
        return Err(PosaError::VertexOutOfRange {
            vertex: p0,
            n: g.n(),
        });
    }
    let mut path = vec![p0];
    let mut on_path = VertexSet::from_slice(g.n(), &path);
    extend_greedily(g, &mut path, &mut on_path);
    Ok(RotationPath { vertices: path })
}

enum Bfs {
    Done(ClosureResult),
    Extended(Vec<usize>),
}

fn endpoint_bfs(g: &Graph, path: Vec<usize>, extend: bool) -> Bfs {
    let n = g.n();
    let mut on_path = VertexSet::from_slice(n, &path);
    let root = *path.last().expect("nonempty");
    let path = RotationPath { vertices: path };
    if path.len() < 2 {
        return Bfs::Done(ClosureResult {
            path,
            endings: VertexSet::new(n),
            order: Vec::new(),
            derivation: vec![None; n],
        });
    }

    let mut stored: Vec<Option<Vec<usize>>> = vec![None; n];
    let mut derivation = vec![None; n];
    let mut endings = VertexSet::new(n);
    let mut order = Vec::new();
    let mut queue = VecDeque::new();
    let mut position = vec![usize::MAX; n];

    stored[root] = Some(path.vertices.clone());
    endings.insert(root);
    order.push(root);
    queue.push_back(root);

    while let Some(end) = queue.pop_front() {
        let q = stored[end]
            .take()
            .expect("queued endings have a stored path");
        if extend {
            if let Some(w) = g.neighbors(end).difference(&on_path).first() {
                let mut longer = q;
                longer.push(w);
                on_path.insert(w);
                extend_greedily(g, &mut longer, &mut on_path);
                return Bfs::Extended(longer);
            }
        }
        for (i, &v) in q.iter().enumerate() {
            position[v] = i;
        }
        let len = q.len();
        for w in g.neighbors(end).iter() {
            let i = position[w];
            // Off-path neighbors (extension disabled) and the identity chord
            // to the predecessor give nothing new.
            if !on_path.contains(w) || i + 2 >= len {
                continue;
            }
            let next = q[i + 1];
            if endings.insert(next) {
                let mut rotated = q.clone();
                rotated[i + 1..].reverse();
                stored[next] = Some(rotated);
                derivation[next] = Some(Derivation {
                    parent: end,
                    pivot: w,
                });
                order.push(next);
                queue.push_back(next);
            }
        }
    }

    Bfs::Done(ClosureResult {
        path,
        endings,
        order,
        derivation,
    })
}

/// Grows a path from `p0`, then alternates endpoint closure and extension
/// until no derived path can be extended. Guarantees that every neighbor of
/// every ending vertex lies on the returned path. An isolated `p0` yields
/// the one-vertex path with no ending vertices.
pub fn rotation_extension_closure(g: &Graph, p0: usize) -> Result<ClosureResult, PosaError> {
    let mut path = greedy_path(g, p0)?.vertices;
    loop {
        match endpoint_bfs(g, path, true) {
            Bfs::Done(result) => return Ok(result),
            Bfs::Extended(longer) => path = longer,
        }
    }
}

/// Endpoint closure of a fixed path with extension disabled.
pub fn endpoint_closure(g: &Graph, path: &RotationPath) -> ClosureResult {
    match endpoint_bfs(g, path.vertices.clone(), false) {
        Bfs::Done(result) => result,
        Bfs::Extended(_) => unreachable!("extension disabled"),
    }
}

/// A connected set of ending vertices with the rotations certifying it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConnectedEndings {
    pub members: VertexSet,
    /// For each member except the root, the rotation that first reached
    /// it; every `from` appears earlier as a member (or is the root).
    pub schedule: Vec<RotationStep>,
}

/// The first `m` ending vertices in breadth-first discovery order. Every
/// ancestor of a member in the derivation forest is discovered earlier, so
/// the set is connected.
pub fn connected_ending_subset(c: &ClosureResult, m: usize) -> Result<ConnectedEndings, PosaError> {
    let available = c.order.len();
    if m == 0 || m > available {
        return Err(PosaError::InsufficientEndings {
            requested: m,
            available,
        });
    }
    let mut members = VertexSet::new(c.endings.universe());
    let mut schedule = Vec::with_capacity(m - 1);
    for &x in &c.order[..m] {
        members.insert(x);
        if let Some(d) = c.derivation(x) {
            schedule.push(RotationStep {
                endpoint: x,
                from: d.parent,
                pivot: d.pivot,
            });
        }
    }
    Ok(ConnectedEndings { members, schedule })
}

fn check_connected(c: &ClosureResult, x: &VertexSet) -> Result<(), PosaError> {
    for v in x {
        if !c.endings.contains(v) {
            return Err(PosaError::NotAnEnding(v));
        }
        let mut a = v;
        while let Some(d) = c.derivation(a) {
            if !x.contains(d.parent) {
                return Err(PosaError::NotConnected {
                    vertex: v,
                    ancestor: d.parent,
                });
            }
            a = d.parent;
        }
    }
    Ok(())
}

/// A cycle of `g` through every vertex of `x ∪ N(x)`, where `x` is a set of
/// ending vertices closed under derivation ancestors (e.g. all endings, or
/// a prefix from [`connected_ending_subset`]).
///
/// Let `pi` be the first vertex of the path in `x ∪ N(x)`. If it is the
/// start, rotate to an ending vertex adjacent to the start and close the
/// cycle over the whole path. Otherwise take the derived path `Q` of an
/// ending vertex `x'` adjacent to `pi`; `Q` begins with `p0 … pi`, and
/// `Q` minus that prefix, closed by the edge `x' pi`, is the cycle.
pub fn cycle_through(g: &Graph, c: &ClosureResult, x: &VertexSet) -> Result<Vec<usize>, PosaError> {
    if x.is_empty() {
        return Err(PosaError::EmptyEndingSet);
    }
    check_connected(c, x)?;
    let path = &c.path;
    let n = g.n();
    let on_path = path.vertex_set(n);
    let target = x.union(&g.outside_neighborhood_unchecked(x));
    if let Some(v) = target.difference(&on_path).first() {
        return Err(PosaError::NotRotationMaximal(v));
    }

    let first = path
        .vertices
        .iter()
        .position(|&v| target.contains(v))
        .expect("x is nonempty and lies on the path");
    let pi = path.vertices[first];
    let close_at =
        g.neighbors(pi).intersection(x).first().ok_or_else(|| {
            PosaError::Internal(format!("{pi} has no neighbor in the ending set"))
        })?;
    let q = c.derived_path(g, close_at)?;

    let cycle = if first == 0 {
        q.vertices
    } else {
        if x.contains(pi) {
            return Err(PosaError::Internal(format!(
                "first marked vertex {pi} is an ending vertex"
            )));
        }
        if q.vertices[..=first] != path.vertices[..=first] {
            return Err(PosaError::Internal(format!(
                "derived path to {close_at} does not share the prefix up to {pi}"
            )));
        }
        q.vertices[first..].to_vec()
    };

    if cycle.len() < 3 {
        return Err(PosaError::DegenerateCycle(cycle.len()));
    }
    if !g.is_cycle(&cycle) {
        return Err(PosaError::Internal(format!("{cycle:?} is not a cycle")));
    }
    if !target.is_subset(&VertexSet::from_slice(n, &cycle)) {
        return Err(PosaError::Internal("cycle misses part of x ∪ N(x)".into()));
    }
    Ok(cycle)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::ending_vertices_exact;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
        let mut g = Graph::new(n);
        for j in 1..n {
            for i in 0..j {
                if rng.random_bool(p) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    #[test]
    fn rotate_examples() {
        // Vertices 1..=5 live in a graph on 6 vertices.
        let g = Graph::from_edges(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 2)]).unwrap();
        let p = RotationPath::new(&g, vec![1, 2, 3, 4, 5]).unwrap();
        assert_eq!(p.rotate(&g, 1).unwrap().vertices(), &[1, 2, 5, 4, 3]);
        assert_eq!(p.rotate(&g, 3).unwrap(), p);
        assert_eq!(
            p.rotate(&g, 0).unwrap_err(),
            PosaError::MissingChord { from: 5, to: 1 }
        );
        assert_eq!(
            p.rotate(&g, 4).unwrap_err(),
            PosaError::PivotOutOfRange { pivot: 4, len: 5 }
        );
    }

    #[test]
    fn rotation_preserves_start_and_vertex_set() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut checked = 0;
        while checked < 1000 {
            let n = rng.random_range(3..=15);
            let g = random_graph(&mut rng, n, 0.6);
            let p = greedy_path(&g, rng.random_range(0..n)).unwrap();
            if p.len() < 3 {
                continue;
            }
            let pivots: Vec<_> = (0..p.len() - 1)
                .filter(|&i| g.has_edge(p.last(), p.vertices()[i]))
                .collect();
            let pivot = pivots[rng.random_range(0..pivots.len())];
            let q = p.rotate(&g, pivot).unwrap();
            assert_eq!(q.start(), p.start());
            assert_eq!(q.vertex_set(n), p.vertex_set(n));
            assert_eq!(q.last(), p.vertices()[pivot + 1]);
            assert!(g.is_path(q.vertices()));
            checked += 1;
        }
    }

    #[test]
    fn closure_on_k4() {
        let g = Graph::complete(4);
        let c = rotation_extension_closure(&g, 0).unwrap();
        assert_eq!(c.path().vertices(), &[0, 1, 2, 3]);
        assert_eq!(c.endings().to_vec(), vec![1, 2, 3]);
        let exact = ending_vertices_exact(&g, c.path()).unwrap();
        assert_eq!(&exact, c.endings());
    }

    #[test]
    fn closure_on_star() {
        // centre 0, leaves 1, 2, 3; start at leaf 1
        let g = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3)]).unwrap();
        let c = rotation_extension_closure(&g, 1).unwrap();
        assert_eq!(c.path().vertices(), &[1, 0, 2]);
        let exact = ending_vertices_exact(&g, c.path()).unwrap();
        assert_eq!(c.endings(), &exact);
        assert_eq!(c.endings().to_vec(), vec![2]);
        let on_path = c.path().vertex_set(4);
        assert!(g
            .outside_neighborhood(c.endings())
            .unwrap()
            .is_subset(&on_path));
    }

    #[test]
    fn closure_on_c5() {
        let g = Graph::cycle(5);
        let c = rotation_extension_closure(&g, 0).unwrap();
        assert_eq!(c.path().vertices(), &[0, 1, 2, 3, 4]);
        let exact = ending_vertices_exact(&g, c.path()).unwrap();
        assert_eq!(c.endings(), &exact);
        // the chord 4-0 rotates the path into [0,4,3,2,1]
        assert_eq!(c.endings().to_vec(), vec![1, 4]);
        let ns = g.outside_neighborhood(c.endings()).unwrap();
        assert!(ns.is_subset(&c.path().vertex_set(5)));
        assert!(ns.len() <= 2 * c.endings().len());
    }

    #[test]
    fn isolated_start_has_no_endings() {
        let g = Graph::new(3);
        let c = rotation_extension_closure(&g, 1).unwrap();
        assert_eq!(c.path().vertices(), &[1]);
        assert!(c.endings().is_empty());
        assert!(connected_ending_subset(&c, 1).is_err());
    }

    #[test]
    fn closure_extends_past_greedy_dead_end() {
        // Greedy from 0 walks 0-1-2 and stops; rotating to end at 1 exposes 3.
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 0), (1, 3)]).unwrap();
        assert_eq!(greedy_path(&g, 0).unwrap().vertices(), &[0, 1, 2]);
        let c = rotation_extension_closure(&g, 0).unwrap();
        assert_eq!(c.path().len(), 4);
        assert_eq!(c.path().vertices(), &[0, 2, 1, 3]);
    }

    #[test]
    fn connected_subset_examples() {
        let g = Graph::complete(4);
        let c = rotation_extension_closure(&g, 0).unwrap();
        let one = connected_ending_subset(&c, 1).unwrap();
        assert_eq!(one.members.to_vec(), vec![3]);
        assert!(one.schedule.is_empty());
        let all = connected_ending_subset(&c, 3).unwrap();
        assert_eq!(&all.members, c.endings());
        let two = connected_ending_subset(&c, 2).unwrap();
        let mut first_two = c.discovery_order()[..2].to_vec();
        first_two.sort_unstable();
        assert_eq!(two.members.to_vec(), first_two);
        for x in &two.members {
            let q = c.derived_path(&g, x).unwrap();
            assert_eq!(q.last(), x);
            assert_eq!(q.start(), 0);
        }
        assert_eq!(
            connected_ending_subset(&c, 4).unwrap_err(),
            PosaError::InsufficientEndings {
                requested: 4,
                available: 3
            }
        );
    }

    #[test]
    fn cycle_through_k4_is_hamiltonian() {
        let g = Graph::complete(4);
        let c = rotation_extension_closure(&g, 0).unwrap();
        let cycle = cycle_through(&g, &c, c.endings()).unwrap();
        assert_eq!(cycle.len(), 4);
        assert!(g.is_cycle(&cycle));
    }

    #[test]
    fn cycle_through_c5() {
        let g = Graph::cycle(5);
        let c = rotation_extension_closure(&g, 0).unwrap();
        let x = connected_ending_subset(&c, 1).unwrap().members;
        let cycle = cycle_through(&g, &c, &x).unwrap();
        assert_eq!(cycle, vec![0, 1, 2, 3, 4]);
    }

    #[test]
    fn cycle_through_skips_path_prefix() {
        // 0-1-2-3-4-5 with chords 5-2, 5-3: first marked vertex is 2, so the
        // cycle drops 0 and 1.
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 2), (5, 3)])
            .unwrap();
        let c = rotation_extension_closure(&g, 0).unwrap();
        assert_eq!(c.path().vertices(), &[0, 1, 2, 3, 4, 5]);
        let cycle = cycle_through(&g, &c, c.endings()).unwrap();
        assert!(g.is_cycle(&cycle));
        assert!(!cycle.contains(&0) && !cycle.contains(&1));
        for v in c
            .endings()
            .union(&g.outside_neighborhood(c.endings()).unwrap())
            .iter()
        {
            assert!(cycle.contains(&v));
        }
    }

    #[test]
    fn cycle_through_rejects_bad_input() {
        let g = Graph::complete(4);
        let c = rotation_extension_closure(&g, 0).unwrap();
        assert_eq!(
            cycle_through(&g, &c, &VertexSet::new(4)).unwrap_err(),
            PosaError::EmptyEndingSet
        );
        assert_eq!(
            cycle_through(&g, &c, &VertexSet::from_slice(4, &[0])).unwrap_err(),
            PosaError::NotAnEnding(0)
        );
        // an ending whose parent is left out
        let deep = *c.discovery_order().last().unwrap();
        let err = cycle_through(&g, &c, &VertexSet::from_slice(4, &[deep])).unwrap_err();
        assert!(matches!(err, PosaError::NotConnected { .. }));

        // a single edge: the lemma's cycle degenerates
        let edge = Graph::complete(2);
        let c = rotation_extension_closure(&edge, 0).unwrap();
        assert_eq!(
            cycle_through(&edge, &c, c.endings()).unwrap_err(),
            PosaError::DegenerateCycle(2)
        );
    }

    #[test]
    fn random_closures_satisfy_the_lemma() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let mut cycles = 0;
        let mut graphs = 0;
        while graphs < 1000 {
            let n = rng.random_range(4..=24);
            let g = random_graph(&mut rng, n, 0.35);
            if (0..n).any(|v| g.degree(v) < 3) {
                continue;
            }
            graphs += 1;
            let c = rotation_extension_closure(&g, 0).unwrap();
            let on_path = c.path().vertex_set(n);
            let s = c.endings();
            assert!(g.outside_neighborhood(s).unwrap().is_subset(&on_path));
            for x in s {
                let q = c.derived_path(&g, x).unwrap();
                assert_eq!(q.last(), x);
                assert_eq!(q.vertex_set(n), on_path);
            }
            let m = rng.random_range(1..=s.len());
            let x = connected_ending_subset(&c, m).unwrap();
            let nx = g.outside_neighborhood(&x.members).unwrap();
            assert!(nx.len() <= 2 * s.len());
            let cycle = cycle_through(&g, &c, &x.members).unwrap();
            assert!(g.is_cycle(&cycle));
            let on_cycle = VertexSet::from_slice(n, &cycle);
            assert!(x.members.union(&nx).is_subset(&on_cycle));
            cycles += 1;
        }
        assert_eq!(cycles, 1000);
    }
}
