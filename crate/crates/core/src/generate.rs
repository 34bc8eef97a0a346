//! Seeded random connected graphs.
//!
//! Generator version 1: ChaCha8 seeded from the `u64` seed. Up to
//! [`REJECTION_ATTEMPTS`] draws of `G(n, p)` are tried in order; if none is
//! connected, a random spanning tree is drawn (shuffle the vertices, attach
//! each to a uniformly chosen earlier one) and every remaining pair is added
//! with probability `p`. Output for a given `(n, p, seed)` never changes
//! within a generator version.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::Graph;

pub const GENERATOR_VERSION: u32 = 1;
pub const REJECTION_ATTEMPTS: usize = 64;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GenerateError {
    #[error("need at least two vertices, got {0}")]
    TooFewVertices(usize),
    #[error("edge probability {0} outside [0, 1]")]
    BadProbability(f64),
}

pub fn random_connected_graph(n: usize, p: f64, seed: u64) -> Result<Graph, GenerateError> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_connected_graph_with(n, p, &mut rng)
}

pub fn random_connected_graph_with<R: Rng>(n: usize, p: f64, rng: &mut R) -> Result<Graph, GenerateError> {
    if n < 2 {
        return Err(GenerateError::TooFewVertices(n));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(GenerateError::BadProbability(p));
    }
    for _ in 0..REJECTION_ATTEMPTS {
        let g = random_graph(n, p, rng);
        if g.is_connected() {
            return Ok(g);
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(rng);
    let mut g = Graph::new(n);
    for k in 1..n {
        let parent = order[rng.gen_range(0..k)];
        g.add_edge(order[k], parent);
    }
    for u in 0..n {
        for v in u + 1..n {
            if !g.has_edge(u, v) && rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    Ok(g)
}

/// Random graph with `n` vertices where each pair is an edge with
/// probability `p`; may be disconnected.
pub fn random_graph<R: Rng>(n: usize, p: f64, rng: &mut R) -> Graph {
    let mut g = Graph::new(n);
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn two_vertices_give_an_edge() {
        for seed in 0..20 {
            let g = random_connected_graph(2, 0.1, seed).unwrap();
            assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        }
    }

    #[test]
    fn frozen_output() {
        let g = random_connected_graph(6, 0.4, 7).unwrap();
        let edges: Vec<(usize, usize)> = g.edges().collect();
        assert_eq!(edges, FROZEN_6_04_7);
    }

    const FROZEN_6_04_7: &[(usize, usize)] = &[(0, 1), (0, 2), (1, 2), (1, 3), (1, 5), (2, 4), (2, 5), (3, 5)];

    #[test]
    fn zero_probability_falls_back_to_tree() {
        let g = random_connected_graph(7, 0.0, 3).unwrap();
        assert!(g.is_tree());
    }

    #[test]
    fn rejects_bad_parameters() {
        assert_eq!(random_connected_graph(1, 0.5, 0).unwrap_err(), GenerateError::TooFewVertices(1));
        assert!(matches!(random_connected_graph(4, 1.5, 0), Err(GenerateError::BadProbability(_))));
    }

    proptest! {
        #[test]
        fn always_connected_and_deterministic(n in 2usize..14, p in 0.0f64..=1.0, seed: u64) {
            let g = random_connected_graph(n, p, seed).unwrap();
            prop_assert!(g.is_connected());
            prop_assert!(g.is_irreflexive());
            prop_assert_eq!(g.n(), n);
            prop_assert_eq!(g, random_connected_graph(n, p, seed).unwrap());
        }
    }
}
