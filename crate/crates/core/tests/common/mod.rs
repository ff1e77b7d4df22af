#![allow(dead_code)]

use eqdim::equalizer::is_distance_equalizer;
use eqdim::{DistanceMatrix, Graph, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Random labelled tree: vertex `i > 0` attaches to a uniform earlier vertex.
pub fn random_tree(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    Graph::from_edge_list(n, &edges).unwrap()
}

/// Random subset of `0..n`, each vertex with probability 1/2.
pub fn random_subset(n: usize, rng: &mut ChaCha8Rng) -> VertexSet {
    VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)))
}

/// Every valid distance-equalizer set, by full enumeration (n <= 12).
pub fn all_valid_sets(d: &DistanceMatrix) -> Vec<VertexSet> {
    let n = d.n();
    assert!(n <= 12);
    (0u32..1 << n)
        .map(|bits| VertexSet::from_indices(n, (0..n).filter(|&v| bits >> v & 1 == 1)))
        .filter(|s| is_distance_equalizer(d, s).valid)
        .collect()
}
