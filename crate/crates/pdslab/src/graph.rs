//! Simple undirected graphs on dense vertex ids `0..n-1`.
//!
//! Every operation in this crate works on immutable [`Graph`] values:
//! adjacency queries are constant time, neighbor lists are sorted, and
//! no self-loops or parallel edges can be constructed.

use crate::error::{Error, Result};
use crate::pds::VertexSet;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: Vec<Vec<usize>>,
    matrix: Vec<bool>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "Graph(n={}, m={}, edges={:?})",
            self.n,
            self.m,
            self.edges()
        )
    }
}

impl Graph {
    /// Builds a graph from an edge list, rejecting self-loops, duplicate
    /// edges and out-of-range endpoints.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        };
        for &(u, v) in edges {
            g.insert_edge(u, v)?;
        }
        for nbrs in &mut g.adj {
            nbrs.sort_unstable();
        }
        Ok(g)
    }

    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            m: 0,
            adj: vec![Vec::new(); n],
            matrix: vec![false; n * n],
        }
    }

    fn insert_edge(&mut self, u: usize, v: usize) -> Result<()> {
        if u >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: self.n,
            });
        }
        if v >= self.n {
            return Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            });
        }
        if u == v {
            return Err(Error::StructureAudit(format!("self-loop at vertex {u}")));
        }
        if self.matrix[u * self.n + v] {
            return Err(Error::StructureAudit(format!("duplicate edge {u}-{v}")));
        }
        self.matrix[u * self.n + v] = true;
        self.matrix[v * self.n + u] = true;
        self.adj[u].push(v);
        self.adj[v].push(u);
        self.m += 1;
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.matrix[u * self.n + v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Sorted neighbor list of `v`.
    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    /// Sorted edge list with `u < v`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.m);
        for u in 0..self.n {
            for &v in &self.adj[u] {
                if u < v {
                    out.push((u, v));
                }
            }
        }
        out
    }

    /// Degree of `v` counted inside the member bitmap `inside`.
    pub fn degree_in(&self, v: usize, inside: &[bool]) -> usize {
        self.adj[v].iter().filter(|&&w| inside[w]).count()
    }

    /// Edge-flip complement on the same vertex set.
    pub fn complement(&self) -> Graph {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in (u + 1)..self.n {
                if !self.has_edge(u, v) {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_edges(self.n, &edges).expect("complement edges are valid by construction")
    }

    /// Partition of the vertices into maximal connected sets, each sorted,
    /// ordered by smallest member.
    pub fn connected_components(&self) -> Vec<VertexSet> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut queue = std::collections::VecDeque::from([start]);
            seen[start] = true;
            let mut comp = vec![start];
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        queue.push_back(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(VertexSet::from_sorted(comp));
        }
        out
    }

    /// Whether the subgraph induced by the `true` entries of `inside` is
    /// connected. Empty and singleton sets count as connected.
    pub fn is_connected_subset(&self, inside: &[bool]) -> bool {
        let total = inside.iter().filter(|&&b| b).count();
        if total <= 1 {
            return true;
        }
        let start = inside.iter().position(|&b| b).unwrap();
        let mut seen = vec![false; self.n];
        seen[start] = true;
        let mut queue = std::collections::VecDeque::from([start]);
        let mut reached = 1;
        while let Some(u) = queue.pop_front() {
            for &v in &self.adj[u] {
                if inside[v] && !seen[v] {
                    seen[v] = true;
                    reached += 1;
                    queue.push_back(v);
                }
            }
        }
        reached == total
    }

    /// Proper 2-coloring via BFS, or `None` if the graph has an odd cycle.
    pub fn two_coloring(&self) -> Option<Vec<u8>> {
        let mut color = vec![u8::MAX; self.n];
        for start in 0..self.n {
            if color[start] != u8::MAX {
                continue;
            }
            color[start] = 0;
            let mut queue = std::collections::VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                for &v in &self.adj[u] {
                    if color[v] == u8::MAX {
                        color[v] = 1 - color[u];
                        queue.push_back(v);
                    } else if color[v] == color[u] {
                        return None;
                    }
                }
            }
        }
        Some(color)
    }

    /// Checks the representation invariants: symmetric adjacency, no
    /// self-loops, degree sum = 2m. Used by tests and audits.
    pub fn check_invariants(&self) -> Result<()> {
        let mut degsum = 0;
        for u in 0..self.n {
            degsum += self.adj[u].len();
            if self.matrix[u * self.n + u] {
                return Err(Error::StructureAudit(format!("self-loop at {u}")));
            }
            for &v in &self.adj[u] {
                if !self.has_edge(v, u) {
                    return Err(Error::StructureAudit(format!("asymmetric edge {u}-{v}")));
                }
            }
        }
        if degsum != 2 * self.m {
            return Err(Error::StructureAudit(format!(
                "degree sum {degsum} != 2m = {}",
                2 * self.m
            )));
        }
        Ok(())
    }
}
