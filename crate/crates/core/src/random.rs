//! Seeded random inputs.
//!
//! The stream is fixed so other implementations can reproduce it: a
//! `ChaCha8` generator seeded through `seed_from_u64(seed)` visits the pairs
//! in graph6 column order `(0,1), (0,2), (1,2), (0,3), …` and colors a pair
//! red exactly when the low bit of the next `u32` is set.

use rand::{Rng, RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, TwoColoring};

/// A uniformly random coloring of `K_n` determined by `seed`.
pub fn random_coloring(n: usize, seed: u64) -> TwoColoring {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut red = Graph::new(n);
    for j in 1..n {
        for i in 0..j {
            if rng.next_u32() & 1 == 1 {
                red.add_edge(i, j);
            }
        }
    }
    TwoColoring::from_red(red)
}

/// An Erdős–Rényi graph `G(n, p)`, pairs visited in the same order.
pub fn random_graph<R: Rng + ?Sized>(n: usize, p: f64, rng: &mut R) -> Graph {
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
