//! Seeded random graphs for the bound and twin checks.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, VertexSet};

pub const DEFAULT_SEED: u64 = 20240229;
pub const CORPUS_SIZE: usize = 50;
pub const EDGE_PROBABILITY: f64 = 0.4;
pub const MIN_ORDER: usize = 4;
pub const MAX_ORDER: usize = 8;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph `G(n, p)`, resampled until connected.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    loop {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if rng.gen_bool(p) {
                    edges.push((u, v));
                }
            }
        }
        let g = Graph::new(n, &edges).expect("edges are in range");
        if g.is_connected() {
            return g;
        }
    }
}

/// The bound-check corpus: `CORPUS_SIZE` connected graphs with order in
/// `MIN_ORDER..=MAX_ORDER` and edge probability `EDGE_PROBABILITY`.
pub fn corpus(seed: u64) -> Vec<Graph> {
    let mut rng = rng(seed);
    (0..CORPUS_SIZE)
        .map(|_| {
            let n = rng.gen_range(MIN_ORDER..=MAX_ORDER);
            random_connected_graph(&mut rng, n, EDGE_PROBABILITY)
        })
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TwinKind {
    False,
    True,
}

/// A random connected graph on `base_order` vertices plus one new vertex
/// (the last index) that is a twin of a random old vertex. Returns the graph
/// and the pair `(old, new)`.
pub fn planted_twin<R: Rng>(
    rng: &mut R,
    base_order: usize,
    kind: TwinKind,
) -> (Graph, usize, usize) {
    let base = random_connected_graph(rng, base_order, EDGE_PROBABILITY);
    let u = rng.gen_range(0..base_order);
    let v = base_order;
    let mut edges = base.edges();
    edges.extend(base.neighbors(u).iter().map(|w| (w, v)));
    if kind == TwinKind::True {
        edges.push((u, v));
    }
    (
        Graph::new(base_order + 1, &edges).expect("edges are in range"),
        u,
        v,
    )
}

/// Random subset of `pool` (each member kept with probability 1/2).
pub fn random_subset<R: Rng>(rng: &mut R, pool: VertexSet) -> VertexSet {
    pool.iter().filter(|_| rng.gen_bool(0.5)).collect()
}

/// Grows `start` into a maximal set of `pool ∪ start` satisfying `accepts`,
/// trying vertices in random order.
pub fn random_maximal<R: Rng>(
    rng: &mut R,
    start: VertexSet,
    pool: VertexSet,
    mut accepts: impl FnMut(VertexSet) -> bool,
) -> VertexSet {
    let mut order = pool.difference(start).to_vec();
    order.shuffle(rng);
    let mut s = start;
    for v in order {
        if accepts(s.with(v)) {
            s.insert(v);
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn corpus_is_deterministic_and_in_range() {
        let a = corpus(DEFAULT_SEED);
        assert_eq!(a.len(), CORPUS_SIZE);
        assert_eq!(a, corpus(DEFAULT_SEED));
        assert_ne!(a, corpus(DEFAULT_SEED + 1));
        for g in &a {
            assert!((MIN_ORDER..=MAX_ORDER).contains(&g.order()));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn planted_twins_are_twins() {
        let mut r = rng(7);
        for n in 3..=8 {
            let (g, u, v) = planted_twin(&mut r, n, TwinKind::False);
            assert_eq!(g.neighbors(u), g.neighbors(v));
            assert!(g.is_connected());
            let (g, u, v) = planted_twin(&mut r, n, TwinKind::True);
            assert_eq!(g.closed_neighbors(u), g.closed_neighbors(v));
        }
    }
}
