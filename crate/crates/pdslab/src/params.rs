//! Density parameters of a graph: maximum degree, h-index and degeneracy,
//! together with a witnessing elimination order and the hub-selection rule
//! shared by the bounded-h solvers.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Maximum degree, h-index and degeneracy of a graph. `degen <= h <= max_degree`
/// always holds; `elimination_order` witnesses the degeneracy: replaying it
/// never removes a vertex whose residual degree exceeds `degeneracy`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphParams {
    pub max_degree: usize,
    pub h_index: usize,
    pub degeneracy: usize,
    pub elimination_order: Vec<usize>,
}

/// Largest `h` such that at least `h` vertices have degree at least `h`.
pub fn h_index(g: &Graph) -> usize {
    let mut degs: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    degs.sort_unstable_by(|a, b| b.cmp(a));
    let mut h = 0;
    while h < g.n() && degs[h] > h {
        h += 1;
    }
    h
}

pub fn compute_params(g: &Graph) -> GraphParams {
    let n = g.n();
    let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);

    // Min-degree peeling; smallest index wins ties so the order is canonical.
    let mut residual: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    let mut degeneracy = 0;
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| !removed[v])
            .min_by_key(|&v| (residual[v], v))
            .unwrap();
        degeneracy = degeneracy.max(residual[v]);
        removed[v] = true;
        order.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                residual[w] -= 1;
            }
        }
    }

    GraphParams {
        max_degree,
        h_index: h_index(g),
        degeneracy,
        elimination_order: order,
    }
}

impl GraphParams {
    /// Replays the elimination order against `g` and checks every deletion
    /// has residual degree at most `self.degeneracy`, and that the claimed
    /// value is minimal (some deletion attains it unless the graph is empty).
    pub fn validate_elimination(&self, g: &Graph) -> Result<()> {
        if self.elimination_order.len() != g.n() {
            return Err(Error::StructureAudit(
                "elimination order length mismatch".into(),
            ));
        }
        let mut removed = vec![false; g.n()];
        let mut attained = 0;
        for &v in &self.elimination_order {
            let deg = g.neighbors(v).iter().filter(|&&w| !removed[w]).count();
            if deg > self.degeneracy {
                return Err(Error::StructureAudit(format!(
                    "vertex {v} removed at residual degree {deg} > degeneracy {}",
                    self.degeneracy
                )));
            }
            attained = attained.max(deg);
            removed[v] = true;
        }
        if g.n() > 0 && attained != self.degeneracy {
            return Err(Error::StructureAudit(format!(
                "claimed degeneracy {} never attained (max residual {attained})",
                self.degeneracy
            )));
        }
        Ok(())
    }
}

/// Hub pair used by the degree-2 decomposition: every vertex of degree >= 3
/// comes first (there are at most two when h <= 2), padded to exactly two
/// with the highest-degree remaining vertices; ties break toward the
/// smaller vertex index. The returned pair is ordered the same way.
pub fn select_hubs(g: &Graph) -> Result<(usize, usize)> {
    let n = g.n();
    if n < 2 {
        return Err(Error::TooFewVertices { n, min: 2 });
    }
    let mut by_degree: Vec<usize> = g.vertices().collect();
    by_degree.sort_unstable_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    let high: Vec<usize> = by_degree
        .iter()
        .copied()
        .filter(|&v| g.degree(v) >= 3)
        .collect();
    if high.len() > 2 {
        return Err(Error::HIndexTooLarge {
            found: h_index(g),
            max: 2,
        });
    }
    Ok((by_degree[0], by_degree[1]))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_graph_seeded;
    use crate::instances;

    fn params_of(g: &Graph) -> (usize, usize, usize) {
        let p = compute_params(g);
        (p.max_degree, p.h_index, p.degeneracy)
    }

    #[test]
    fn known_parameter_triples() {
        assert_eq!(params_of(&instances::complete(4)), (3, 3, 3));
        assert_eq!(params_of(&instances::cycle(5)), (2, 2, 2));
        assert_eq!(params_of(&instances::star(4)), (4, 1, 1));
    }

    #[test]
    fn h_index_definition_holds() {
        for seed in 0..300u64 {
            let g = random_graph_seeded(seed, 3 + (seed as usize % 14), 0.35);
            let h = h_index(&g);
            let at_least_h = g.vertices().filter(|&v| g.degree(v) >= h).count();
            let above = g.vertices().filter(|&v| g.degree(v) > h).count();
            assert!(at_least_h >= h, "seed {seed}");
            assert!(above < h + 1, "seed {seed}");
        }
    }

    #[test]
    fn degen_h_delta_chain_and_elimination_witness() {
        // degen <= h <= Delta, with a replayable elimination order.
        for seed in 0..1000u64 {
            let n = 2 + (seed as usize % 31);
            let g = random_graph_seeded(seed, n, 0.3);
            let p = compute_params(&g);
            assert!(p.degeneracy <= p.h_index, "seed {seed}");
            assert!(p.h_index <= p.max_degree, "seed {seed}");
            p.validate_elimination(&g).unwrap();
            assert_eq!(p.h_index, h_index(&g));
        }
    }

    #[test]
    fn hub_selection_prefers_high_degree_then_small_index() {
        // P4: degrees 1,2,2,1 -> hubs (1,2).
        let p4 = instances::path(4);
        assert_eq!(select_hubs(&p4).unwrap(), (1, 2));
        // All degrees equal: smallest two indices.
        let c6 = instances::cycle(6);
        assert_eq!(select_hubs(&c6).unwrap(), (0, 1));
    }

    #[test]
    fn hub_selection_rejects_three_high_degree_vertices() {
        // Three disjoint stars K1,3: three vertices of degree 3.
        let mut edges = Vec::new();
        for c in 0..3 {
            let base = c * 4;
            for leaf in 1..4 {
                edges.push((base, base + leaf));
            }
        }
        let g = Graph::from_edges(12, &edges).unwrap();
        assert!(select_hubs(&g).is_err());
    }
}
