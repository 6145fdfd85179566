//! Decomposition of a graph minus two hub vertices into paths and cycles,
//! with each component labeled by how its endpoints attach to the hubs.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Endpoint-attachment label of a path or cycle component relative to the
/// ordered hub pair `(u*, v*)`:
///
/// * `I`  : no hub adjacency (all cycles, detached paths);
/// * `II` : one endpoint adjacent to `u*`;
/// * `III`: both endpoints adjacent to `u*`;
/// * `IV` : one endpoint adjacent to `v*`;
/// * `V`  : both endpoints adjacent to `v*`;
/// * `VI` : first endpoint to `u*`, last to `v*`;
/// * `VII`: first endpoint to `v*`, last to `u*`.
///
/// Paths are stored with the smaller-indexed endpoint first, which makes
/// `VI` vs `VII` deterministic. A lone vertex adjacent to both hubs is `VI`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum AttachCase {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ComponentKind {
    Path,
    Cycle,
}

/// One path or cycle of `g` minus the hubs, in traversal order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TypedPathComponent {
    pub kind: ComponentKind,
    pub vertices: Vec<usize>,
    pub attach_case: AttachCase,
}

impl TypedPathComponent {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    /// Number of edges from this component to `hub`.
    pub fn hub_degree(&self, g: &Graph, hub: usize) -> usize {
        self.vertices
            .iter()
            .filter(|&&v| g.has_edge(v, hub))
            .count()
    }
}

fn classify(g: &Graph, first: usize, last: usize, u_star: usize, v_star: usize) -> AttachCase {
    let single = first == last;
    if single {
        let to_u = g.has_edge(first, u_star);
        let to_v = g.has_edge(first, v_star);
        return match (to_u, to_v) {
            (false, false) => AttachCase::I,
            (true, false) => AttachCase::II,
            (false, true) => AttachCase::IV,
            (true, true) => AttachCase::VI,
        };
    }
    let hub_of = |e: usize| -> Option<usize> {
        if g.has_edge(e, u_star) {
            Some(u_star)
        } else if g.has_edge(e, v_star) {
            Some(v_star)
        } else {
            None
        }
    };
    match (hub_of(first), hub_of(last)) {
        (None, None) => AttachCase::I,
        (Some(h), None) | (None, Some(h)) => {
            if h == u_star {
                AttachCase::II
            } else {
                AttachCase::IV
            }
        }
        (Some(a), Some(b)) => {
            if a == u_star && b == u_star {
                AttachCase::III
            } else if a == v_star && b == v_star {
                AttachCase::V
            } else if a == u_star {
                AttachCase::VI
            } else {
                AttachCase::VII
            }
        }
    }
}

/// Splits `g` minus the two hubs into paths and cycles and labels each by
/// its hub attachments. Fails if some non-hub vertex has degree three or
/// more after the hubs are removed (the hub choice does not cover all
/// high-degree vertices, i.e. h > 2).
///
/// Paths run from their smaller-indexed endpoint; cycles start at their
/// smallest vertex and step toward its smaller neighbor. Isolated vertices
/// come back as length-1 paths.
pub fn decompose_degree2(g: &Graph, hubs: (usize, usize)) -> Result<Vec<TypedPathComponent>> {
    let (u_star, v_star) = hubs;
    let n = g.n();
    if u_star >= n || v_star >= n || u_star == v_star {
        return Err(Error::VertexOutOfRange {
            vertex: u_star.max(v_star),
            n,
        });
    }
    let is_hub = |v: usize| v == u_star || v == v_star;

    // Residual adjacency with hubs removed. The degree bound is on the
    // whole graph: a non-hub vertex with three edges cannot be part of a
    // path/cycle decomposition even if some of them lead to the hubs.
    let mut res_adj: Vec<Vec<usize>> = vec![Vec::new(); n];
    for v in g.vertices() {
        if is_hub(v) {
            continue;
        }
        if g.degree(v) > 2 {
            return Err(Error::NonHubDegreeTooLarge {
                vertex: v,
                degree: g.degree(v),
            });
        }
        for &w in g.neighbors(v) {
            if !is_hub(w) {
                res_adj[v].push(w);
            }
        }
    }

    let mut seen = vec![false; n];
    let mut components = Vec::new();
    // Paths first: walk from each unseen endpoint (residual degree <= 1).
    for start in 0..n {
        if is_hub(start) || seen[start] || res_adj[start].len() > 1 {
            continue;
        }
        let mut path = vec![start];
        seen[start] = true;
        if let Some(&first_step) = res_adj[start].first() {
            let mut prev = start;
            let mut cur = first_step;
            loop {
                seen[cur] = true;
                path.push(cur);
                match res_adj[cur].iter().copied().find(|&w| w != prev) {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                    }
                    None => break,
                }
            }
        }
        if *path.last().unwrap() < path[0] {
            path.reverse();
        }
        components.push((ComponentKind::Path, path));
    }
    // Remaining unseen non-hub vertices lie on cycles.
    for start in 0..n {
        if is_hub(start) || seen[start] {
            continue;
        }
        let mut cycle = vec![start];
        seen[start] = true;
        let mut prev = start;
        let mut cur = *res_adj[start].iter().min().unwrap();
        while cur != start {
            seen[cur] = true;
            cycle.push(cur);
            let next = res_adj[cur].iter().copied().find(|&w| w != prev).unwrap();
            prev = cur;
            cur = next;
        }
        components.push((ComponentKind::Cycle, cycle));
    }

    components.sort_by_key(|(_, vs)| *vs.iter().min().unwrap());
    Ok(components
        .into_iter()
        .map(|(kind, vertices)| match kind {
            ComponentKind::Cycle => TypedPathComponent {
                kind,
                vertices,
                attach_case: AttachCase::I,
            },
            ComponentKind::Path => {
                let case = classify(g, vertices[0], *vertices.last().unwrap(), u_star, v_star);
                TypedPathComponent {
                    kind,
                    vertices,
                    attach_case: case,
                }
            }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;

    #[test]
    fn p4_with_middle_hubs() {
        let g = instances::path(4);
        let comps = decompose_degree2(&g, (1, 2)).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].vertices, vec![0]);
        assert_eq!(comps[0].attach_case, AttachCase::II);
        assert_eq!(comps[1].vertices, vec![3]);
        assert_eq!(comps[1].attach_case, AttachCase::IV);
    }

    #[test]
    fn c5_with_adjacent_hubs() {
        let g = instances::cycle(5);
        let comps = decompose_degree2(&g, (0, 1)).unwrap();
        assert_eq!(comps.len(), 1);
        assert_eq!(comps[0].vertices, vec![2, 3, 4]);
        assert_eq!(comps[0].kind, ComponentKind::Path);
        // 2 touches v*=1, 4 touches u*=0.
        assert_eq!(comps[0].attach_case, AttachCase::VII);
    }

    #[test]
    fn triangle_plus_pendant_vertex() {
        // C3 on {2,3,4}, lone vertex 5 adjacent to hub 0 only.
        let g = Graph::from_edges(6, &[(2, 3), (3, 4), (2, 4), (0, 5), (0, 1)]).unwrap();
        let comps = decompose_degree2(&g, (0, 1)).unwrap();
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].kind, ComponentKind::Cycle);
        assert_eq!(comps[0].attach_case, AttachCase::I);
        assert_eq!(comps[0].vertices, vec![2, 3, 4]);
        assert_eq!(comps[1].vertices, vec![5]);
        assert_eq!(comps[1].attach_case, AttachCase::II);
    }

    #[test]
    fn rejects_high_residual_degree() {
        // Star center has degree 5; two leaf hubs leave it at residual 3.
        let g = instances::star(5);
        assert!(decompose_degree2(&g, (1, 2)).is_err());
    }

    #[test]
    fn components_reproduce_residual_edges() {
        // No residual edge may be lost or invented by the decomposition.
        for seed in 0..300u64 {
            let g = crate::generate::random_h2_graph_seeded(seed, 5 + (seed as usize % 12));
            let hubs = crate::params::select_hubs(&g).unwrap();
            let comps = decompose_degree2(&g, hubs).unwrap();
            let mut rebuilt = std::collections::BTreeSet::new();
            let mut covered = std::collections::BTreeSet::new();
            for c in &comps {
                for &v in &c.vertices {
                    assert!(
                        covered.insert(v),
                        "vertex {v} in two components, seed {seed}"
                    );
                }
                for w in c.vertices.windows(2) {
                    rebuilt.insert((w[0].min(w[1]), w[0].max(w[1])));
                }
                if c.kind == ComponentKind::Cycle {
                    let (a, b) = (c.vertices[0], *c.vertices.last().unwrap());
                    rebuilt.insert((a.min(b), a.max(b)));
                }
            }
            let expected: std::collections::BTreeSet<(usize, usize)> = g
                .edges()
                .into_iter()
                .filter(|&(u, v)| u != hubs.0 && u != hubs.1 && v != hubs.0 && v != hubs.1)
                .collect();
            assert_eq!(rebuilt, expected, "seed {seed}");
            let non_hub = g.n() - 2;
            assert_eq!(covered.len(), non_hub, "seed {seed}");
        }
    }
}
