//! Blue complete multipartite subgraphs by backtracking.
//!
//! Vertices are labeled one at a time with a part index or "unused"; a
//! vertex may join part `j` only if it is blue to every vertex already in
//! another part. Twins (vertices with equal open, or equal closed, blue
//! neighborhoods) are interchangeable, so within a twin class labels are
//! forced to be non-decreasing. This collapses the block structure of the
//! extremal colorings to a handful of nodes while staying exact.

use std::collections::HashMap;

use super::{OracleError, Search, SearchLimits};
use crate::graph::TwoColoring;

/// Reusable backtracking state; `load` resets it for a new coloring.
#[derive(Default)]
pub(crate) struct Searcher {
    blue: Vec<u64>,
    parts: Vec<usize>,
    order: Vec<usize>,
    class_head: Vec<bool>,
    suffix: Vec<u64>,
    counts: Vec<usize>,
    compat: Vec<u64>,
    saved: Vec<u64>,
    labels: Vec<usize>,
    nodes: u64,
    budget: u64,
}

fn twin_order(blue: &[u64]) -> (Vec<usize>, Vec<bool>) {
    let n = blue.len();
    let mut class_of = vec![usize::MAX; n];
    let mut classes: Vec<Vec<usize>> = Vec::new();
    let mut open: HashMap<u64, usize> = HashMap::new();
    for v in 0..n {
        let c = *open.entry(blue[v]).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of[v] = c;
    }
    // Singletons may still have true twins.
    let mut closed: HashMap<u64, usize> = HashMap::new();
    for v in 0..n {
        let c = class_of[v];
        if classes[c].len() != 1 {
            continue;
        }
        let key = blue[v] | 1 << v;
        match closed.get(&key) {
            Some(&t) => {
                classes[t].push(v);
                classes[c].clear();
            }
            None => {
                closed.insert(key, c);
            }
        }
    }
    let mut order = Vec::with_capacity(n);
    let mut head = Vec::with_capacity(n);
    for class in classes.into_iter().filter(|c| !c.is_empty()) {
        for (i, v) in class.into_iter().enumerate() {
            order.push(v);
            head.push(i == 0);
        }
    }
    (order, head)
}

impl Searcher {
    /// `blue[v]` is the blue neighborhood of `v` (n <= 64); `parts` may be
    /// in any order. Without `twins` every vertex is its own class, which
    /// is cheaper to set up for tiny graphs.
    pub(crate) fn load(&mut self, blue: &[u64], parts: &[usize], budget: u64, twins: bool) {
        let n = blue.len();
        self.blue.clear();
        self.blue.extend_from_slice(blue);
        self.parts.clear();
        self.parts.extend_from_slice(parts);
        if twins {
            let (order, head) = twin_order(blue);
            self.order = order;
            self.class_head = head;
        } else {
            self.order.clear();
            self.order.extend(0..n);
            self.class_head.clear();
            self.class_head.resize(n, true);
        }
        self.suffix.clear();
        self.suffix.resize(n + 1, 0);
        for p in (0..n).rev() {
            self.suffix[p] = self.suffix[p + 1] | 1 << self.order[p];
        }
        let all = self.suffix[0];
        self.counts.clear();
        self.counts.resize(parts.len(), 0);
        self.compat.clear();
        self.compat.resize(parts.len(), all);
        self.saved.clear();
        self.labels.clear();
        self.labels.resize(n, usize::MAX);
        self.nodes = 0;
        self.budget = budget;
    }

    /// Decides existence only.
    pub(crate) fn decide(&mut self) -> Search<()> {
        let total: usize = self.parts.iter().sum();
        if total > self.blue.len() {
            return Search::Absent;
        }
        match self.go(0) {
            None => Search::Indeterminate { nodes: self.nodes },
            Some(false) => Search::Absent,
            Some(true) => Search::Found(()),
        }
    }

    pub(crate) fn run(&mut self) -> Search<Vec<Vec<usize>>> {
        match self.decide() {
            Search::Found(()) => {
                let mut out = vec![Vec::new(); self.parts.len()];
                for (p, &label) in self.labels.iter().enumerate() {
                    if label < self.parts.len() {
                        out[label].push(self.order[p]);
                    }
                }
                out.iter_mut().for_each(|part| part.sort_unstable());
                Search::Found(out)
            }
            Search::Absent => Search::Absent,
            Search::Indeterminate { nodes } => Search::Indeterminate { nodes },
        }
    }

    fn go(&mut self, p: usize) -> Option<bool> {
        self.nodes += 1;
        if self.nodes > self.budget {
            return None;
        }
        let k = self.parts.len();
        if (0..k).all(|j| self.counts[j] == self.parts[j]) {
            return Some(true);
        }
        if p == self.order.len() {
            return Some(false);
        }
        let rest = self.suffix[p];
        for j in 0..k {
            let need = self.parts[j] - self.counts[j];
            if need > 0 && ((self.compat[j] & rest).count_ones() as usize) < need {
                return Some(false);
            }
        }

        let v = self.order[p];
        let lo = if self.class_head[p] {
            0
        } else {
            self.labels[p - 1]
        };
        for label in lo..=k {
            if label == k {
                self.labels[p] = k;
                let r = self.go(p + 1);
                if r != Some(true) {
                    self.labels[p] = usize::MAX;
                }
                return r;
            }
            if self.counts[label] == self.parts[label] || self.compat[label] & 1 << v == 0 {
                continue;
            }
            let base = self.saved.len();
            self.saved.extend_from_slice(&self.compat);
            self.counts[label] += 1;
            let row = self.blue[v];
            for (l, c) in self.compat.iter_mut().enumerate() {
                if l != label {
                    *c &= row;
                }
            }
            self.labels[p] = label;
            match self.go(p + 1) {
                Some(false) => {}
                other => return other,
            }
            self.labels[p] = usize::MAX;
            self.counts[label] -= 1;
            self.compat.copy_from_slice(&self.saved[base..base + k]);
            self.saved.truncate(base);
        }
        Some(false)
    }
}

fn check_parts(parts: &[usize]) -> Result<(), OracleError> {
    if parts.is_empty() {
        return Err(OracleError::InvalidParts("no parts".into()));
    }
    if parts.contains(&0) {
        return Err(OracleError::InvalidParts("parts must be at least 1".into()));
    }
    Ok(())
}

fn blue_rows(c: &TwoColoring) -> Result<Vec<u64>, OracleError> {
    let n = c.n();
    if n > 64 {
        return Err(OracleError::TooLarge {
            what: "blue multipartite search",
            n,
            limit: 64,
        });
    }
    Ok(c.blue_graph().rows_u64().expect("n <= 64"))
}

/// A blue `K_{parts}`: disjoint vertex sets of the given sizes (returned in
/// the order of `parts`, each sorted) with every cross pair blue.
pub fn find_blue_multipartite(
    c: &TwoColoring,
    parts: &[usize],
    limits: &SearchLimits,
) -> Result<Search<Vec<Vec<usize>>>, OracleError> {
    check_parts(parts)?;
    let blue = blue_rows(c)?;
    let mut searcher = Searcher::default();
    searcher.load(&blue, parts, limits.node_budget, true);
    Ok(searcher.run())
}

/// Same question answered by trying every labeling of the vertices with a
/// part index or "unused"; only usable for a handful of vertices.
pub fn find_blue_multipartite_naive(c: &TwoColoring, parts: &[usize]) -> Option<Vec<Vec<usize>>> {
    let n = c.n();
    let k = parts.len();
    let base = k + 1;
    let total = (base as u64)
        .checked_pow(n as u32)
        .expect("naive search is for tiny inputs");
    let mut labels = vec![0usize; n];
    for code in 0..total {
        let mut x = code;
        for l in labels.iter_mut() {
            *l = (x % base as u64) as usize;
            x /= base as u64;
        }
        let sizes_ok = (0..k).all(|j| labels.iter().filter(|&&l| l == j).count() == parts[j]);
        if !sizes_ok {
            continue;
        }
        let cross_ok = (0..n).all(|u| {
            (u + 1..n).all(|v| {
                labels[u] == k || labels[v] == k || labels[u] == labels[v] || c.is_blue(u, v)
            })
        });
        if cross_ok {
            return Some(
                (0..k)
                    .map(|j| (0..n).filter(|&v| labels[v] == j).collect())
                    .collect(),
            );
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::lower_bound_coloring;
    use crate::graph::Graph;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn assert_blue_witness(c: &TwoColoring, parts: &[usize], found: &[Vec<usize>]) {
        assert_eq!(found.len(), parts.len());
        let mut seen = std::collections::HashSet::new();
        for (part, &size) in found.iter().zip(parts) {
            assert_eq!(part.len(), size);
            for &v in part {
                assert!(seen.insert(v));
            }
        }
        for (i, a) in found.iter().enumerate() {
            for b in &found[i + 1..] {
                for &u in a {
                    for &v in b {
                        assert!(c.is_blue(u, v));
                    }
                }
            }
        }
    }

    #[test]
    fn two_red_triangles() {
        let mut red = Graph::new(6);
        for (u, v) in [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)] {
            red.add_edge(u, v);
        }
        let c = TwoColoring::from_red(red);
        let found = find_blue_multipartite(&c, &[1, 2], &SearchLimits::default()).unwrap();
        let Search::Found(parts) = found else {
            panic!("expected a witness")
        };
        assert_blue_witness(&c, &[1, 2], &parts);
        let found = find_blue_multipartite(&c, &[3, 3], &SearchLimits::default()).unwrap();
        assert!(found.is_found());
        let found = find_blue_multipartite(&c, &[1, 1, 1], &SearchLimits::default()).unwrap();
        assert!(found.is_absent());
    }

    #[test]
    fn all_red_has_no_blue_edge() {
        let c = TwoColoring::all_red(7);
        assert!(
            find_blue_multipartite(&c, &[1, 1], &SearchLimits::default())
                .unwrap()
                .is_absent()
        );
        // a single part needs no edges at all
        assert!(find_blue_multipartite(&c, &[7], &SearchLimits::default())
            .unwrap()
            .is_found());
    }

    #[test]
    fn lower_bound_coloring_has_no_blue_target() {
        let c = lower_bound_coloring(16, &[2, 2]).unwrap();
        assert!(
            find_blue_multipartite(&c, &[2, 2], &SearchLimits::default())
                .unwrap()
                .is_absent()
        );
        // one more vertex in the small block and the target appears
        assert!(
            find_blue_multipartite(&c, &[1, 2], &SearchLimits::default())
                .unwrap()
                .is_found()
        );
    }

    #[test]
    fn budget_exhaustion_is_indeterminate() {
        let c = lower_bound_coloring(26, &[3, 3, 3]).unwrap();
        let tight = SearchLimits {
            node_budget: 5,
            ..SearchLimits::default()
        };
        assert!(matches!(
            find_blue_multipartite(&c, &[3, 3, 3], &tight).unwrap(),
            Search::Indeterminate { .. }
        ));
        assert!(
            find_blue_multipartite(&c, &[3, 3, 3], &SearchLimits::default())
                .unwrap()
                .is_absent()
        );
    }

    #[test]
    fn rejects_bad_parts() {
        let c = TwoColoring::all_blue(3);
        let l = SearchLimits::default();
        assert!(find_blue_multipartite(&c, &[], &l).is_err());
        assert!(find_blue_multipartite(&c, &[0, 1], &l).is_err());
        assert!(find_blue_multipartite(&TwoColoring::all_blue(65), &[1], &l).is_err());
    }

    #[test]
    fn agrees_with_naive_labeling() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        let part_lists: [&[usize]; 6] =
            [&[1, 1], &[1, 2], &[2, 2], &[1, 1, 1], &[1, 1, 2], &[2, 3]];
        for _ in 0..400 {
            let n = rng.random_range(1..=8);
            let p = [0.3, 0.5, 0.7][rng.random_range(0..3)];
            let mut red = Graph::new(n);
            for j in 1..n {
                for i in 0..j {
                    if rng.random_bool(p) {
                        red.add_edge(i, j);
                    }
                }
            }
            let c = TwoColoring::from_red(red);
            let parts = part_lists[rng.random_range(0..part_lists.len())];
            let fast = find_blue_multipartite(&c, parts, &SearchLimits::default()).unwrap();
            let slow = find_blue_multipartite_naive(&c, parts);
            assert_eq!(
                fast.is_found(),
                slow.is_some(),
                "n={n} parts={parts:?} {c:?}"
            );
            if let Search::Found(w) = fast {
                assert_blue_witness(&c, parts, &w);
            }
        }
    }
}
