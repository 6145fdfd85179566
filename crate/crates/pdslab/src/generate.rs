//! Seeded random graph generators for the cross-validation suites.
//!
//! Everything here is deterministic given the seed, so failing cases can be
//! replayed by seed alone.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::Graph;

pub fn random_graph_seeded(seed: u64, n: usize, p: f64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_graph(&mut rng, n, p)
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with every isolated vertex patched by one extra edge.
pub fn random_isolated_free_graph_seeded(seed: u64, n: usize) -> Graph {
    assert!(n >= 2);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let base = random_graph(&mut rng, n, 0.35);
    let mut edges = base.edges();
    for v in 0..n {
        if base.degree(v) == 0 {
            let mut w = rng.gen_range(0..n - 1);
            if w >= v {
                w += 1;
            }
            if !edges.contains(&(v.min(w), v.max(w))) {
                edges.push((v.min(w), v.max(w)));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random graph with h <= 2: disjoint paths and cycles wired to two hub
/// vertices. Vertices 0 and 1 are the hubs; everything else keeps degree
/// at most 2, so only the hubs can ever exceed degree 2.
pub fn random_h2_graph_seeded(seed: u64, n: usize) -> Graph {
    assert!(n >= 3);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (hub_a, hub_b) = (0usize, 1usize);
    let mut edges = Vec::new();
    if rng.gen_bool(0.5) {
        edges.push((hub_a, hub_b));
    }

    let mut rest: Vec<usize> = (2..n).collect();
    rest.shuffle(&mut rng);
    let mut i = 0;
    while i < rest.len() {
        let remaining = rest.len() - i;
        // Mostly short components, occasionally one long run.
        let len = if rng.gen_bool(0.15) {
            remaining
        } else {
            rng.gen_range(1..=remaining.min(5))
        };
        let chunk = &rest[i..i + len];
        i += len;
        for w in chunk.windows(2) {
            edges.push((w[0], w[1]));
        }
        if len >= 3 && rng.gen_bool(0.4) {
            // Close the chunk into a cycle; cycle vertices get no hub edges.
            edges.push((chunk[0], chunk[len - 1]));
            continue;
        }
        let (first, last) = (chunk[0], chunk[len - 1]);
        if len == 1 {
            // A lone vertex may attach to zero, one or two hubs.
            if rng.gen_bool(0.5) {
                edges.push((hub_a.min(first), hub_a.max(first)));
            }
            if rng.gen_bool(0.5) {
                edges.push((hub_b.min(first), hub_b.max(first)));
            }
        } else {
            for &end in &[first, last] {
                match rng.gen_range(0..3) {
                    0 => {}
                    1 => edges.push((hub_a.min(end), hub_a.max(end))),
                    _ => edges.push((hub_b.min(end), hub_b.max(end))),
                }
            }
        }
    }
    let g = Graph::from_edges(n, &edges).unwrap();
    debug_assert!(crate::params::h_index(&g) <= 2);
    g
}

/// Random graph whose complement has h <= 2.
pub fn random_co_h2_graph_seeded(seed: u64, n: usize) -> Graph {
    random_h2_graph_seeded(seed, n).complement()
}
