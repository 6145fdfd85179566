//! Small named graphs used by the test suites, the self-test harness and
//! the bundled cubic sources for the hardness reductions.

use crate::graph::Graph;

pub fn path(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3);
    let mut edges: Vec<(usize, usize)> = (1..n).map(|v| (v - 1, v)).collect();
    edges.push((0, n - 1));
    Graph::from_edges(n, &edges).unwrap()
}

pub fn complete(n: usize) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Star with `leaves` leaves around center 0 (n = leaves + 1).
pub fn star(leaves: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..=leaves).map(|v| (0, v)).collect();
    Graph::from_edges(leaves + 1, &edges).unwrap()
}

/// `count` vertex-disjoint triangles.
pub fn disjoint_triangles(count: usize) -> Graph {
    let mut edges = Vec::new();
    for t in 0..count {
        let b = 3 * t;
        edges.extend_from_slice(&[(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
    }
    Graph::from_edges(3 * count, &edges).unwrap()
}

/// K_n minus a perfect matching (n even): vertex v matched with v + n/2.
pub fn complete_minus_perfect_matching(n: usize) -> Graph {
    assert!(n.is_multiple_of(2));
    let half = n / 2;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if v != u + half {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Complement of P4 plus an isolated vertex, on 5 vertices. The complement
/// has the path 0-1-2-3 and the isolated vertex 4.
pub fn co_p4_plus_isolated() -> Graph {
    let p4_plus = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3)]).unwrap();
    p4_plus.complement()
}

pub fn k33() -> Graph {
    let mut edges = Vec::new();
    for u in 0..3 {
        for v in 3..6 {
            edges.push((u, v));
        }
    }
    Graph::from_edges(6, &edges).unwrap()
}

/// Triangular prism: two triangles joined by a perfect matching. Cubic, n=6.
pub fn prism() -> Graph {
    Graph::from_edges(
        6,
        &[
            (0, 1),
            (1, 2),
            (0, 2),
            (3, 4),
            (4, 5),
            (3, 5),
            (0, 3),
            (1, 4),
            (2, 5),
        ],
    )
    .unwrap()
}

/// The 3-cube. Cubic, bipartite, n=8.
pub fn q3() -> Graph {
    let mut edges = Vec::new();
    for u in 0..8usize {
        for bit in 0..3 {
            let v = u ^ (1 << bit);
            if u < v {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(8, &edges).unwrap()
}

/// Petersen graph. Cubic, n=10.
pub fn petersen() -> Graph {
    let mut edges: Vec<(usize, usize)> = (0..5).map(|v| (v, (v + 1) % 5)).collect();
    edges.extend((0..5).map(|v| (5 + v, 5 + (v + 2) % 5)));
    edges.extend((0..5).map(|v| (v, v + 5)));
    Graph::from_edges(10, &edges).unwrap()
}

/// A cubic graph on 8 vertices containing triangles (not bipartite), used
/// alongside Q3 so the reduction sources are not all triangle-free.
pub fn cubic8_with_triangles() -> Graph {
    Graph::from_edges(
        8,
        &[
            (0, 1),
            (0, 3),
            (0, 5),
            (1, 2),
            (1, 3),
            (2, 4),
            (2, 5),
            (4, 6),
            (5, 6),
            (6, 7),
            (3, 7),
            (4, 7),
        ],
    )
    .unwrap()
}

/// The bundled cubic corpus for reduction testing, smallest first.
pub fn cubic_corpus() -> Vec<(&'static str, Graph)> {
    vec![
        ("k4", complete(4)),
        ("k33", k33()),
        ("prism", prism()),
        ("q3", q3()),
        ("cubic8", cubic8_with_triangles()),
        ("petersen", petersen()),
    ]
}
