//! Ending vertices by brute force over whole derived paths.

use std::collections::{HashSet, VecDeque};

use super::OracleError;
use crate::graph::{Graph, VertexSet};
use crate::posa::RotationPath;

/// Longest path accepted by [`ending_vertices_exact`].
pub const MAX_EXACT_ENDINGS_PATH: usize = 12;

/// Every last vertex of every path derived from `path` by rotations, found
/// by breadth-first search over the derived paths themselves (not just
/// their endpoints). Paths on fewer than two vertices have no ending
/// vertices.
pub fn ending_vertices_exact(g: &Graph, path: &RotationPath) -> Result<VertexSet, OracleError> {
    let len = path.len();
    if len > MAX_EXACT_ENDINGS_PATH {
        return Err(OracleError::TooLarge {
            what: "exact ending-vertex enumeration",
            n: len,
            limit: MAX_EXACT_ENDINGS_PATH,
        });
    }
    let mut endings = VertexSet::new(g.n());
    if len < 2 {
        return Ok(endings);
    }
    let labels = path.vertices();
    // A derived path is a permutation of positions in `path`, packed four
    // bits per slot.
    let pack = |seq: &[u8]| seq.iter().rev().fold(0u64, |acc, &p| acc << 4 | p as u64);
    let unpack = |code: u64, out: &mut Vec<u8>| {
        out.clear();
        out.extend((0..len).map(|i| (code >> (4 * i) & 0xf) as u8));
    };

    let start: Vec<u8> = (0..len as u8).collect();
    let mut seen = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(pack(&start));
    queue.push_back(pack(&start));
    let mut seq = Vec::with_capacity(len);
    while let Some(code) = queue.pop_front() {
        unpack(code, &mut seq);
        let last = labels[seq[len - 1] as usize];
        endings.insert(last);
        for i in 0..len - 2 {
            if g.has_edge(last, labels[seq[i] as usize]) {
                let mut rotated = seq.clone();
                rotated[i + 1..].reverse();
                let next = pack(&rotated);
                if seen.insert(next) {
                    queue.push_back(next);
                }
            }
        }
    }
    Ok(endings)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_from_vertex_zero() {
        let g = Graph::complete(4);
        let p = RotationPath::new(&g, vec![0, 1, 2, 3]).unwrap();
        assert_eq!(
            ending_vertices_exact(&g, &p).unwrap().to_vec(),
            vec![1, 2, 3]
        );
    }

    #[test]
    fn single_edge_in_triangle() {
        // [a, b] admits no rotation: the only chord from b is the path edge.
        let g = Graph::complete(3);
        let p = RotationPath::new(&g, vec![0, 1]).unwrap();
        assert_eq!(ending_vertices_exact(&g, &p).unwrap().to_vec(), vec![1]);
        let p = RotationPath::new(&g, vec![0, 1, 2]).unwrap();
        assert_eq!(ending_vertices_exact(&g, &p).unwrap().to_vec(), vec![1, 2]);
    }

    #[test]
    fn no_chords_means_only_the_last_vertex() {
        let g = Graph::path(6);
        let p = RotationPath::new(&g, vec![0, 1, 2, 3, 4, 5]).unwrap();
        assert_eq!(ending_vertices_exact(&g, &p).unwrap().to_vec(), vec![5]);
    }

    #[test]
    fn finds_endpoints_reached_only_through_alternative_paths() {
        // From 0-1-2-4-3-5 the endpoint 4 is only reachable via the derived
        // path 0-2-4-3-5-1, which is not the first path found ending at 1.
        let g = Graph::from_edges(
            6,
            &[
                (0, 1),
                (0, 2),
                (0, 5),
                (1, 2),
                (1, 5),
                (2, 4),
                (3, 4),
                (3, 5),
            ],
        )
        .unwrap();
        let p = RotationPath::new(&g, vec![0, 1, 2, 4, 3, 5]).unwrap();
        assert_eq!(
            ending_vertices_exact(&g, &p).unwrap().to_vec(),
            vec![1, 2, 3, 4, 5]
        );
    }

    #[test]
    fn refuses_long_paths() {
        let g = Graph::path(13);
        let p = RotationPath::new(&g, (0..13).collect()).unwrap();
        assert!(ending_vertices_exact(&g, &p).is_err());
    }
}
