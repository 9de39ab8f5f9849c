//! Seeded random bigraphs for the sweep suites.
//!
//! Everything here is driven by a caller-supplied ChaCha generator, so a
//! suite run is reproducible from its seed alone.

use rand::prelude::*;
use rand_chacha::ChaCha20Rng;

use crate::graph::{EdgeOrderedBigraph, EdgeOrderedGraph, Side};

pub fn rng_from_seed(seed: u64) -> ChaCha20Rng {
    ChaCha20Rng::seed_from_u64(seed)
}

/// Uniform simple bigraph with the given part sizes and exactly `m` edges,
/// labels a uniform permutation of 1..=m. Panics if `m` exceeds the number
/// of available left-right pairs.
pub fn random_bigraph(
    rng: &mut ChaCha20Rng,
    n_left: usize,
    n_right: usize,
    m: usize,
) -> EdgeOrderedBigraph {
    assert!(n_left >= 1 && n_right >= 1);
    assert!(m <= n_left * n_right, "more edges than left-right pairs");
    let mut pairs: Vec<(usize, usize)> = (0..n_left)
        .flat_map(|u| (0..n_right).map(move |w| (u, n_left + w)))
        .collect();
    let (chosen, _) = pairs.partial_shuffle(rng, m);
    let mut labels: Vec<u64> = (1..=m as u64).collect();
    labels.shuffle(rng);
    let edges = chosen
        .iter()
        .zip(&labels)
        .map(|(&(u, v), &l)| (u, v, l))
        .collect();
    let graph = EdgeOrderedGraph::new(n_left + n_right, edges).unwrap();
    let side = (0..n_left + n_right)
        .map(|v| if v < n_left { Side::Left } else { Side::Right })
        .collect();
    EdgeOrderedBigraph::new(graph, side).unwrap()
}

/// Random bigraph with part sizes and edge count drawn by the generator,
/// staying within the given totals. Used by the bound suites, which want a
/// mix of sparse and dense instances.
pub fn sample_bigraph(
    rng: &mut ChaCha20Rng,
    max_vertices: usize,
    max_edges: usize,
) -> EdgeOrderedBigraph {
    assert!(max_vertices >= 2);
    let n_left = rng.gen_range(1..max_vertices);
    let n_right = rng.gen_range(1..=(max_vertices - n_left).max(1));
    let cap = (n_left * n_right).min(max_edges);
    let m = rng.gen_range(1..=cap);
    random_bigraph(rng, n_left, n_right, m)
}
