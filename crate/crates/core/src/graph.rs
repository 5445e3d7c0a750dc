//! Dense vertex sets, simple undirected graphs and red/blue colorings of
//! complete graphs.
//!
//! Vertices are always the dense range `0..n`. Deleting vertices goes
//! through [`Graph::induced_subgraph`], which hands back an [`IndexMap`] so
//! anything found in the smaller graph can be translated to the original
//! labels.

use std::fmt;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
}

const WORD: usize = 64;

fn words_for(universe: usize) -> usize {
    universe.div_ceil(WORD)
}

/// A subset of `0..universe` stored as a bit vector.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct VertexSet {
    universe: usize,
    words: Vec<u64>,
}

impl VertexSet {
    pub fn new(universe: usize) -> Self {
        VertexSet {
            universe,
            words: vec![0; words_for(universe)],
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut s = Self::new(universe);
        for v in 0..universe {
            s.insert(v);
        }
        s
    }

    /// Builds a set from members, rejecting anything outside the universe.
    pub fn try_from_iter<I>(universe: usize, members: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut s = Self::new(universe);
        for v in members {
            if v >= universe {
                return Err(GraphError::VertexOutOfRange {
                    vertex: v,
                    n: universe,
                });
            }
            s.insert(v);
        }
        Ok(s)
    }

    /// Panics if a member is outside the universe.
    pub fn from_slice(universe: usize, members: &[usize]) -> Self {
        let mut s = Self::new(universe);
        for &v in members {
            s.insert(v);
        }
        s
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    #[inline]
    pub fn insert(&mut self, v: usize) -> bool {
        assert!(
            v < self.universe,
            "vertex {v} outside universe {}",
            self.universe
        );
        let (w, b) = (v / WORD, v % WORD);
        let fresh = self.words[w] & (1 << b) == 0;
        self.words[w] |= 1 << b;
        fresh
    }

    #[inline]
    pub fn remove(&mut self, v: usize) -> bool {
        if v >= self.universe {
            return false;
        }
        let (w, b) = (v / WORD, v % WORD);
        let present = self.words[w] & (1 << b) != 0;
        self.words[w] &= !(1 << b);
        present
    }

    #[inline]
    pub fn contains(&self, v: usize) -> bool {
        v < self.universe && self.words[v / WORD] & (1 << (v % WORD)) != 0
    }

    pub fn len(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.words.iter().all(|&w| w == 0)
    }

    pub fn clear(&mut self) {
        self.words.iter_mut().for_each(|w| *w = 0);
    }

    /// Smallest member.
    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    /// Members in increasing order.
    pub fn iter(&self) -> Iter<'_> {
        Iter {
            words: &self.words,
            index: 0,
            current: self.words.first().copied().unwrap_or(0),
        }
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    fn zip_words(&self, other: &VertexSet, f: impl Fn(u64, u64) -> u64) -> VertexSet {
        let universe = self.universe.max(other.universe);
        let mut out = VertexSet::new(universe);
        for (i, w) in out.words.iter_mut().enumerate() {
            let a = self.words.get(i).copied().unwrap_or(0);
            let b = other.words.get(i).copied().unwrap_or(0);
            *w = f(a, b);
        }
        out
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a | b)
    }

    pub fn intersection(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a & b)
    }

    pub fn difference(&self, other: &VertexSet) -> VertexSet {
        self.zip_words(other, |a, b| a & !b)
    }

    /// In-place union; `other` must not be larger than `self`'s universe.
    pub fn union_with(&mut self, other: &VertexSet) {
        debug_assert!(other.universe <= self.universe);
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a |= b;
        }
    }

    pub fn difference_with(&mut self, other: &VertexSet) {
        for (a, b) in self.words.iter_mut().zip(&other.words) {
            *a &= !b;
        }
    }

    pub fn intersect_with(&mut self, other: &VertexSet) {
        for (i, a) in self.words.iter_mut().enumerate() {
            *a &= other.words.get(i).copied().unwrap_or(0);
        }
    }

    pub fn is_subset(&self, other: &VertexSet) -> bool {
        self.words
            .iter()
            .enumerate()
            .all(|(i, &a)| a & !other.words.get(i).copied().unwrap_or(0) == 0)
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.words.iter().zip(&other.words).all(|(a, b)| a & b == 0)
    }

    /// Number of common members, without allocating.
    pub fn intersection_len(&self, other: &VertexSet) -> usize {
        self.words
            .iter()
            .zip(&other.words)
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// Largest member plus one, or 0 for the empty set.
    pub fn bound(&self) -> usize {
        for (i, &w) in self.words.iter().enumerate().rev() {
            if w != 0 {
                return i * WORD + (WORD - w.leading_zeros() as usize);
            }
        }
        0
    }

    pub(crate) fn words(&self) -> &[u64] {
        &self.words
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

pub struct Iter<'a> {
    words: &'a [u64],
    index: usize,
    current: u64,
}

impl Iterator for Iter<'_> {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        loop {
            if self.current != 0 {
                let bit = self.current.trailing_zeros() as usize;
                self.current &= self.current - 1;
                return Some(self.index * WORD + bit);
            }
            self.index += 1;
            if self.index >= self.words.len() {
                return None;
            }
            self.current = self.words[self.index];
        }
    }
}

impl<'a> IntoIterator for &'a VertexSet {
    type Item = usize;
    type IntoIter = Iter<'a>;

    fn into_iter(self) -> Iter<'a> {
        self.iter()
    }
}

/// Translation between the vertices of an induced subgraph and the graph it
/// was cut from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IndexMap {
    new_to_old: Vec<usize>,
    old_to_new: Vec<Option<usize>>,
}

impl IndexMap {
    pub fn identity(n: usize) -> Self {
        IndexMap {
            new_to_old: (0..n).collect(),
            old_to_new: (0..n).map(Some).collect(),
        }
    }

    pub fn to_old(&self, new: usize) -> usize {
        self.new_to_old[new]
    }

    pub fn to_new(&self, old: usize) -> Option<usize> {
        self.old_to_new.get(old).copied().flatten()
    }

    pub fn new_to_old(&self) -> &[usize] {
        &self.new_to_old
    }

    pub fn map_to_old(&self, vertices: &[usize]) -> Vec<usize> {
        vertices.iter().map(|&v| self.new_to_old[v]).collect()
    }

    pub fn set_to_old(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.old_to_new.len());
        for v in set {
            out.insert(self.new_to_old[v]);
        }
        out
    }

    /// Translates a set of original vertices, dropping any that were not kept.
    pub fn set_to_new(&self, set: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.new_to_old.len());
        for v in set {
            if let Some(w) = self.to_new(v) {
                out.insert(w);
            }
        }
        out
    }
}

/// Simple undirected graph on `0..n`.
#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            adj: vec![VertexSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 0..n {
            g.adj[v] = VertexSet::full(n);
            g.adj[v].remove(v);
        }
        g
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Self::new(n);
        for &(u, v) in edges {
            g.check(u)?;
            g.check(v)?;
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            g.add_edge(u, v);
        }
        Ok(g)
    }

    /// Cycle `0–1–…–(n−1)–0`.
    pub fn cycle(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 0..n {
            g.add_edge(v, (v + 1) % n);
        }
        g
    }

    /// Path `0–1–…–(n−1)`.
    pub fn path(n: usize) -> Self {
        let mut g = Self::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v);
        }
        g
    }

    fn check(&self, v: usize) -> Result<(), GraphError> {
        if v < self.n() {
            Ok(())
        } else {
            Err(GraphError::VertexOutOfRange {
                vertex: v,
                n: self.n(),
            })
        }
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    /// Panics on a self-loop or an out-of-range endpoint.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert_ne!(u, v, "self-loop at {u}");
        self.adj[u].insert(v);
        self.adj[v].insert(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u].remove(v);
        self.adj[v].remove(u);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.adj[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> &VertexSet {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(VertexSet::len).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, row)| row.iter().filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let mut g = Graph::new(n);
        let full = VertexSet::full(n);
        for v in 0..n {
            let mut row = full.difference(&self.adj[v]);
            row.remove(v);
            g.adj[v] = row;
        }
        g
    }

    /// Vertices outside `s` adjacent to at least one member of `s`.
    pub fn outside_neighborhood(&self, s: &VertexSet) -> Result<VertexSet, GraphError> {
        if s.bound() > self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: s.bound() - 1,
                n: self.n(),
            });
        }
        Ok(self.outside_neighborhood_unchecked(s))
    }

    pub(crate) fn outside_neighborhood_unchecked(&self, s: &VertexSet) -> VertexSet {
        let mut out = VertexSet::new(self.n());
        for v in s {
            out.union_with(&self.adj[v]);
        }
        out.difference_with(s);
        out
    }

    /// Subgraph induced on `keep`, renumbered to `0..|keep|` in increasing
    /// order of the original labels.
    pub fn induced_subgraph(&self, keep: &VertexSet) -> Result<(Graph, IndexMap), GraphError> {
        if keep.bound() > self.n() {
            return Err(GraphError::VertexOutOfRange {
                vertex: keep.bound() - 1,
                n: self.n(),
            });
        }
        let new_to_old = keep.to_vec();
        let mut old_to_new = vec![None; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old] = Some(new);
        }
        let mut g = Graph::new(new_to_old.len());
        for (new, &old) in new_to_old.iter().enumerate() {
            for w in self.adj[old].iter() {
                if let Some(w_new) = old_to_new[w] {
                    g.adj[new].insert(w_new);
                }
            }
        }
        Ok((
            g,
            IndexMap {
                new_to_old,
                old_to_new,
            },
        ))
    }

    /// Vertex sets of the connected components, ordered by smallest member.
    pub fn components(&self) -> Vec<VertexSet> {
        let n = self.n();
        let mut seen = VertexSet::new(n);
        let mut out = Vec::new();
        for root in 0..n {
            if seen.contains(root) {
                continue;
            }
            let mut comp = VertexSet::new(n);
            let mut stack = vec![root];
            seen.insert(root);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                for w in self.adj[v].iter() {
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// True if `seq` lists distinct in-range vertices with consecutive ones
    /// adjacent.
    pub fn is_path(&self, seq: &[usize]) -> bool {
        let mut seen = VertexSet::new(self.n());
        for &v in seq {
            if v >= self.n() || !seen.insert(v) {
                return false;
            }
        }
        seq.windows(2).all(|w| self.has_edge(w[0], w[1]))
    }

    /// True if `seq` is a simple cycle: at least three distinct vertices,
    /// consecutive ones adjacent, last adjacent to first.
    pub fn is_cycle(&self, seq: &[usize]) -> bool {
        seq.len() >= 3 && self.is_path(seq) && self.has_edge(seq[seq.len() - 1], seq[0])
    }

    /// One adjacency word per vertex; `None` beyond 64 vertices.
    pub fn rows_u64(&self) -> Option<Vec<u64>> {
        if self.n() > 64 {
            return None;
        }
        Some(
            self.adj
                .iter()
                .map(|row| row.words().first().copied().unwrap_or(0))
                .collect(),
        )
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("edges", &self.edges().collect::<Vec<_>>())
            .finish()
    }
}

/// Red/blue coloring of the edges of `K_n`, stored as its red graph.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TwoColoring {
    red: Graph,
}

impl TwoColoring {
    pub fn from_red(red: Graph) -> Self {
        TwoColoring { red }
    }

    pub fn all_red(n: usize) -> Self {
        Self::from_red(Graph::complete(n))
    }

    pub fn all_blue(n: usize) -> Self {
        Self::from_red(Graph::new(n))
    }

    pub fn n(&self) -> usize {
        self.red.n()
    }

    pub fn red(&self) -> &Graph {
        &self.red
    }

    pub fn into_red(self) -> Graph {
        self.red
    }

    pub fn is_red(&self, u: usize, v: usize) -> bool {
        self.red.has_edge(u, v)
    }

    /// Distinct in-range vertices joined by a non-red edge.
    pub fn is_blue(&self, u: usize, v: usize) -> bool {
        u != v && u < self.n() && v < self.n() && !self.red.has_edge(u, v)
    }

    pub fn set_red(&mut self, u: usize, v: usize, red: bool) {
        if red {
            self.red.add_edge(u, v);
        } else {
            self.red.remove_edge(u, v);
        }
    }

    /// The blue graph: complement of the red graph.
    pub fn blue_graph(&self) -> Graph {
        self.red.complement()
    }

    /// Coloring restricted to `keep`, renumbered as in
    /// [`Graph::induced_subgraph`].
    pub fn induced(&self, keep: &VertexSet) -> Result<(TwoColoring, IndexMap), GraphError> {
        let (red, map) = self.red.induced_subgraph(keep)?;
        Ok((TwoColoring { red }, map))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn set(n: usize, members: &[usize]) -> VertexSet {
        VertexSet::from_slice(n, members)
    }

    #[test]
    fn vertex_set_algebra() {
        let a = set(70, &[1, 3, 65]);
        let b = set(70, &[3, 4, 65, 69]);
        assert_eq!(a.union(&b).to_vec(), vec![1, 3, 4, 65, 69]);
        assert_eq!(a.intersection(&b).to_vec(), vec![3, 65]);
        assert_eq!(a.difference(&b).to_vec(), vec![1]);
        assert_eq!(a.intersection_len(&b), 2);
        assert_eq!(b.bound(), 70);
        assert_eq!(VertexSet::new(70).bound(), 0);
        assert!(set(70, &[3]).is_subset(&a));
        assert!(!a.is_subset(&b));
        assert!(set(70, &[0, 2]).is_disjoint(&a));
        assert_eq!(VertexSet::full(65).len(), 65);
        assert!(VertexSet::try_from_iter(4, [1, 4]).is_err());
    }

    #[test]
    fn outside_neighborhood_examples() {
        let tri = Graph::complete(3);
        assert!(tri
            .outside_neighborhood(&VertexSet::new(3))
            .unwrap()
            .is_empty());
        assert_eq!(
            tri.outside_neighborhood(&set(3, &[0])).unwrap().to_vec(),
            vec![1, 2]
        );
        let p4 = Graph::path(4);
        assert_eq!(
            p4.outside_neighborhood(&set(4, &[1, 2])).unwrap().to_vec(),
            vec![0, 3]
        );
    }

    #[test]
    fn outside_neighborhood_rejects_out_of_range() {
        let g = Graph::path(3);
        let err = g.outside_neighborhood(&set(5, &[4])).unwrap_err();
        assert_eq!(err, GraphError::VertexOutOfRange { vertex: 4, n: 3 });
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        let (all, map) = k4.induced_subgraph(&VertexSet::full(4)).unwrap();
        assert_eq!(all, k4);
        assert_eq!(map, IndexMap::identity(4));

        let (tri, map) = k4.induced_subgraph(&set(4, &[0, 2, 3])).unwrap();
        assert_eq!(tri, Graph::complete(3));
        assert_eq!(map.new_to_old(), &[0, 2, 3]);
        assert_eq!(map.to_new(1), None);

        let (sub, map) = Graph::cycle(5)
            .induced_subgraph(&set(5, &[0, 1, 3]))
            .unwrap();
        assert_eq!(sub.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        assert_eq!(sub.degree(2), 0);
        assert_eq!(map.to_old(2), 3);
    }

    #[test]
    fn blue_graph_examples() {
        assert_eq!(TwoColoring::all_red(5).blue_graph(), Graph::new(5));
        assert_eq!(TwoColoring::all_blue(5).blue_graph(), Graph::complete(5));
        let matching = Graph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let blue = TwoColoring::from_red(matching).blue_graph();
        let c4 = Graph::from_edges(4, &[(0, 2), (2, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(blue, c4);
    }

    #[test]
    fn path_and_cycle_checks() {
        let c5 = Graph::cycle(5);
        assert!(c5.is_cycle(&[0, 1, 2, 3, 4]));
        assert!(!c5.is_cycle(&[0, 1, 2, 3]));
        assert!(c5.is_path(&[2, 3, 4, 0]));
        assert!(!c5.is_path(&[2, 3, 2]));
        assert!(!Graph::complete(2).is_cycle(&[0, 1]));
    }

    #[test]
    fn components_of_disjoint_cliques() {
        let mut g = Graph::new(6);
        g.add_edge(0, 1);
        g.add_edge(3, 4);
        g.add_edge(4, 5);
        let sizes: Vec<_> = g.components().iter().map(VertexSet::len).collect();
        assert_eq!(sizes, vec![2, 1, 3]);
    }

    fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
        (1..=max_n).prop_flat_map(|n| {
            proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
                let mut g = Graph::new(n);
                let mut it = bits.into_iter();
                for v in 1..n {
                    for u in 0..v {
                        if it.next().unwrap() {
                            g.add_edge(u, v);
                        }
                    }
                }
                g
            })
        })
    }

    proptest! {
        #[test]
        fn outside_neighborhood_is_disjoint_and_adjacent(
            g in arb_graph(70),
            picks in proptest::collection::vec(any::<prop::sample::Index>(), 0..10),
        ) {
            let n = g.n();
            let s = VertexSet::from_slice(n, &picks.iter().map(|i| i.index(n)).collect::<Vec<_>>());
            let out = g.outside_neighborhood(&s).unwrap();
            prop_assert!(out.is_disjoint(&s));
            for v in &out {
                prop_assert!(s.iter().any(|x| g.has_edge(x, v)));
            }
            for x in &s {
                for v in g.neighbors(x) {
                    prop_assert!(s.contains(v) || out.contains(v));
                }
            }
        }

        #[test]
        fn complement_is_an_involution(g in arb_graph(40)) {
            let c = TwoColoring::from_red(g.clone());
            let twice = TwoColoring::from_red(c.blue_graph()).blue_graph();
            prop_assert_eq!(twice, g);
        }
    }
}
