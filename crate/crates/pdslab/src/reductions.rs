//! Hardness-gadget generators: three reductions from independent set on
//! cubic graphs, their parameter solver, and the forward/backward solution
//! maps used to test reduction soundness.
//!
//! Families:
//! * sparse: copies, edge vertices and two long anchor paths; the gadget
//!   has maximum degree 4 and degeneracy 2 (a bipartite wiring variant
//!   spaces the anchor attachments two apart);
//! * dense-delta6: copies plus an edge-vertex clique; the complement has
//!   maximum degree 6;
//! * dense-degen2: the same with every edge vertex cloned x = n-k+3
//!   times plus two apex vertices; the complement is bipartite with
//!   degeneracy 2.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::params::compute_params;
use crate::pds::{is_pds, VertexSet};

/// Anchor-path parameters for the sparse gadget. All nine arithmetic
/// conditions are re-verified before a value leaves [`gadget_params`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SparseParams {
    pub c: usize,
    /// Total gadget size N = A + B + m + n.
    pub n_total: usize,
    pub k_prime: usize,
    pub a: usize,
    pub b: usize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetParams {
    Sparse(SparseParams),
    DenseDelta6 { k_prime: usize },
    DenseDegen2 { x: usize, k_prime: usize },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GadgetFamily {
    Sparse { bipartite: bool },
    DenseDelta6 { permissive: bool },
    DenseDegen2,
}

impl GadgetFamily {
    pub fn as_str(&self) -> &'static str {
        match self {
            GadgetFamily::Sparse { bipartite: false } => "sparse",
            GadgetFamily::Sparse { bipartite: true } => "sparse-bipartite",
            GadgetFamily::DenseDelta6 { .. } => "dense-delta6",
            GadgetFamily::DenseDegen2 => "dense-degen2",
        }
    }
}

/// Role of one gadget vertex.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Role {
    /// Copy of source vertex `v`.
    SourceCopy(usize),
    /// Vertex standing for source edge `edge`; `copy` is 0 except in the
    /// dense-degen2 family, where the copies run 1..=x.
    EdgeVertex {
        edge: usize,
        copy: usize,
    },
    PathA(usize),
    PathB(usize),
    AStar,
    BStar,
}

/// A generated hardness instance: the gadget, its target size, per-vertex
/// roles and the originating problem.
#[derive(Debug, Clone)]
pub struct ReductionOutput {
    pub family: GadgetFamily,
    pub gadget: Graph,
    pub k_prime: usize,
    pub roles: Vec<Role>,
    pub params: GadgetParams,
    pub source: Graph,
    pub source_k: usize,
    /// Edge order defining the edge-vertex ids.
    pub source_edges: Vec<(usize, usize)>,
}

fn require_cubic(g: &Graph) -> Result<()> {
    for v in g.vertices() {
        if g.degree(v) != 3 {
            return Err(Error::NotCubic {
                vertex: v,
                degree: g.degree(v),
            });
        }
    }
    Ok(())
}

/// Solves for the anchor-path parameters: C is the max of the three lower
/// bounds, N the smallest integer above C with 3N+1 divisible by 4,
/// k' = (3N+1)/4, A = k'-m-(n-k), B = (N-1)/4 - k.
pub fn gadget_params(n: usize, m: usize, k: usize) -> Result<SparseParams> {
    if k < 3 || k >= n {
        return Err(Error::KOutOfRange {
            k,
            min: 3,
            max: n - 1,
        });
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::ParamAudit(format!(
            "m = {m} exceeds simple-graph bound"
        )));
    }
    let c = (4 * (n + 3 * m)).max(8 * n + 1).max(2 * n + 2 * m);
    let mut n_total = c + 1;
    while !(3 * n_total + 1).is_multiple_of(4) {
        n_total += 1;
    }
    let k_prime = (3 * n_total + 1) / 4;
    let a = k_prime
        .checked_sub(m + (n - k))
        .ok_or_else(|| Error::ParamAudit("A went negative".into()))?;
    let b = ((n_total - 1) / 4)
        .checked_sub(k)
        .ok_or_else(|| Error::ParamAudit("B went negative".into()))?;
    let p = SparseParams {
        c,
        n_total,
        k_prime,
        a,
        b,
    };
    audit_sparse_params(&p, n, m, k)?;
    Ok(p)
}

/// The nine conditions the parameters must meet, as exact integer
/// comparisons.
pub fn audit_sparse_params(p: &SparseParams, n: usize, m: usize, k: usize) -> Result<()> {
    let SparseParams {
        c,
        n_total: nn,
        k_prime: kp,
        a,
        b,
    } = *p;
    let checks: [(&str, bool); 9] = [
        ("A > 2m", a > 2 * m),
        ("B > n", b > n),
        ("k' + A > N", kp + a > nn),
        ("2(N - k') < k' - 1", 2 * (nn - kp) < kp - 1),
        ("3(N - k') >= k' - 1", 3 * (nn - kp) >= kp - 1),
        ("3(N - k' - 1) < k'", 3 * (nn - kp - 1) < kp),
        ("k' = A + m + (n - k)", kp == a + m + (n - k)),
        ("N = A + B + m + n", nn == a + b + m + n),
        ("N <= C + 5", nn <= c + 5),
    ];
    for (name, ok) in checks {
        if !ok {
            return Err(Error::ParamAudit(format!(
                "{name} fails for n={n} m={m} k={k}: C={c} N={nn} k'={kp} A={a} B={b}"
            )));
        }
    }
    Ok(())
}

/// Sparse gadget: source copies each tied to a private anchor on the B
/// path, edge vertices tied to two private anchors on the A path and to
/// their endpoints' copies. The bipartite variant attaches only every
/// second path vertex.
pub fn reduce_sparse(g: &Graph, k: usize, bipartite: bool) -> Result<ReductionOutput> {
    require_cubic(g)?;
    let (n, m) = (g.n(), g.m());
    let p = gadget_params(n, m, k)?;
    let (a_len, b_len) = (p.a, p.b);
    let a_base = n + m;
    let b_base = n + m + a_len;
    let total = b_base + b_len;
    debug_assert_eq!(total, p.n_total);

    let source_edges = g.edges();
    let mut edges = Vec::new();
    for i in 1..a_len {
        edges.push((a_base + i - 1, a_base + i));
    }
    for i in 1..b_len {
        edges.push((b_base + i - 1, b_base + i));
    }
    for (j, &(u, v)) in source_edges.iter().enumerate() {
        let e = n + j;
        edges.push((u, e));
        edges.push((v, e));
        let (first, second) = if bipartite {
            (4 * j, 4 * j + 2)
        } else {
            (2 * j, 2 * j + 1)
        };
        if second >= a_len {
            return Err(Error::StructureAudit(format!(
                "anchor path A too short: need index {second}, have {a_len}"
            )));
        }
        edges.push((e, a_base + first));
        edges.push((e, a_base + second));
    }
    for u in 0..n {
        let slot = if bipartite { 2 * u } else { u };
        if slot >= b_len {
            return Err(Error::StructureAudit(format!(
                "anchor path B too short: need index {slot}, have {b_len}"
            )));
        }
        edges.push((u, b_base + slot));
    }

    let gadget = Graph::from_edges(total, &edges)?;
    let mut roles = Vec::with_capacity(total);
    roles.extend((0..n).map(Role::SourceCopy));
    roles.extend((0..m).map(|j| Role::EdgeVertex { edge: j, copy: 0 }));
    roles.extend((0..a_len).map(Role::PathA));
    roles.extend((0..b_len).map(Role::PathB));

    Ok(ReductionOutput {
        family: GadgetFamily::Sparse { bipartite },
        gadget,
        k_prime: p.k_prime,
        roles,
        params: GadgetParams::Sparse(p),
        source: g.clone(),
        source_k: k,
        source_edges,
    })
}

/// Dense gadget whose complement has maximum degree 6: each copy is
/// adjacent to everything except its three neighbors' copies and its
/// three incident edge vertices; the edge vertices form a clique.
/// `permissive` admits non-cubic sources (the construction still works,
/// only the degree-6 claim is lost).
pub fn reduce_dense_delta6(g: &Graph, k: usize, permissive: bool) -> Result<ReductionOutput> {
    if !permissive {
        require_cubic(g)?;
    }
    let (n, m) = (g.n(), g.m());
    if k < 1 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    let source_edges = g.edges();
    let total = n + m;
    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
        }
    }
    for j in 0..m {
        for jj in (j + 1)..m {
            edges.push((n + j, n + jj));
        }
    }
    for (j, &(eu, ev)) in source_edges.iter().enumerate() {
        for u in 0..n {
            if u != eu && u != ev {
                edges.push((u, n + j));
            }
        }
    }
    let gadget = Graph::from_edges(total, &edges)?;
    let mut roles = Vec::with_capacity(total);
    roles.extend((0..n).map(Role::SourceCopy));
    roles.extend((0..m).map(|j| Role::EdgeVertex { edge: j, copy: 0 }));

    Ok(ReductionOutput {
        family: GadgetFamily::DenseDelta6 { permissive },
        gadget,
        k_prime: m + k,
        roles,
        params: GadgetParams::DenseDelta6 { k_prime: m + k },
        source: g.clone(),
        source_k: k,
        source_edges,
    })
}

/// Dense gadget whose complement is bipartite with degeneracy 2: the
/// copies form a clique, the x = n-k+3 clones of every edge vertex plus
/// two apexes form another clique, and each clone avoids only its
/// endpoints' copies.
pub fn reduce_dense_degen2(g: &Graph, k: usize) -> Result<ReductionOutput> {
    require_cubic(g)?;
    let (n, m) = (g.n(), g.m());
    if k < 4 || k > n {
        return Err(Error::KOutOfRange { k, min: 4, max: n });
    }
    let x = n - k + 3;
    let source_edges = g.edges();
    let clique_lo = n;
    let clique_len = x * m + 2; // edge clones plus the two apexes
    let total = n + x * m + 2;

    let mut edges = Vec::new();
    for u in 0..n {
        for v in (u + 1)..n {
            edges.push((u, v));
        }
    }
    for i in 0..clique_len {
        for j in (i + 1)..clique_len {
            edges.push((clique_lo + i, clique_lo + j));
        }
    }
    for (j, &(eu, ev)) in source_edges.iter().enumerate() {
        for i in 0..x {
            let e = n + j * x + i;
            for u in 0..n {
                if u != eu && u != ev {
                    edges.push((u, e));
                }
            }
        }
    }
    let gadget = Graph::from_edges(total, &edges)?;
    let mut roles = Vec::with_capacity(total);
    roles.extend((0..n).map(Role::SourceCopy));
    for j in 0..m {
        for i in 0..x {
            roles.push(Role::EdgeVertex {
                edge: j,
                copy: i + 1,
            });
        }
    }
    roles.push(Role::AStar);
    roles.push(Role::BStar);

    Ok(ReductionOutput {
        family: GadgetFamily::DenseDegen2,
        gadget,
        k_prime: x * m + k,
        roles,
        params: GadgetParams::DenseDegen2 {
            x,
            k_prime: x * m + k,
        },
        source: g.clone(),
        source_k: k,
        source_edges,
    })
}

/// Maps an independent set of the source to the solution the soundness
/// argument builds in the gadget. The caller verifies the result.
pub fn forward_map(r: &ReductionOutput, independent_set: &VertexSet) -> Result<VertexSet> {
    for u in independent_set.iter() {
        if u >= r.source.n() {
            return Err(Error::VertexOutOfRange {
                vertex: u,
                n: r.source.n(),
            });
        }
        for v in independent_set.iter() {
            if u < v && r.source.has_edge(u, v) {
                return Err(Error::NotIndependent { u, v });
            }
        }
    }
    if independent_set.size() != r.source_k {
        return Err(Error::WrongSetSize {
            size: independent_set.size(),
            expected: r.source_k,
        });
    }
    let members: Vec<usize> = match r.family {
        GadgetFamily::Sparse { .. } => r
            .roles
            .iter()
            .enumerate()
            .filter(|(_, role)| match role {
                Role::SourceCopy(src) => !independent_set.contains(*src),
                Role::EdgeVertex { .. } | Role::PathA(_) => true,
                Role::PathB(_) => false,
                Role::AStar | Role::BStar => unreachable!("sparse gadget has no apexes"),
            })
            .map(|(v, _)| v)
            .collect(),
        GadgetFamily::DenseDelta6 { .. } | GadgetFamily::DenseDegen2 => r
            .roles
            .iter()
            .enumerate()
            .filter(|(_, role)| match role {
                Role::SourceCopy(src) => independent_set.contains(*src),
                Role::EdgeVertex { .. } => true,
                _ => false,
            })
            .map(|(v, _)| v)
            .collect(),
    };
    Ok(VertexSet::new(members))
}

/// Maps a gadget solution of size at least k' back to an independent set
/// of size at least k in the source, verifying independence before
/// returning. For the delta6 family the solution is first normalized by
/// swapping copies for their missing edge vertices.
pub fn backward_map(r: &ReductionOutput, pds: &VertexSet) -> Result<VertexSet> {
    if !is_pds(&r.gadget, pds) {
        return Err(Error::NotAPds);
    }
    if pds.size() < r.k_prime {
        return Err(Error::SetSizeOutOfRange {
            size: pds.size(),
            min: r.k_prime,
            max: r.gadget.n() - 1,
        });
    }
    let n = r.source.n();
    let mut inside = pds.bitmap(r.gadget.n());

    if matches!(r.family, GadgetFamily::DenseDelta6 { .. }) {
        // Swap a kept copy for a missing incident edge vertex until every
        // kept copy has all its edge vertices kept too.
        loop {
            let mut swapped = false;
            'scan: for u in 0..n {
                if !inside[u] {
                    continue;
                }
                for (j, &(eu, ev)) in r.source_edges.iter().enumerate() {
                    if (eu == u || ev == u) && !inside[n + j] {
                        inside[u] = false;
                        inside[n + j] = true;
                        swapped = true;
                        break 'scan;
                    }
                }
            }
            if !swapped {
                break;
            }
        }
    }

    let picked: Vec<usize> = (0..r.gadget.n())
        .filter(|&v| inside[v])
        .filter_map(|v| match r.roles[v] {
            Role::SourceCopy(src) => Some(src),
            _ => None,
        })
        .collect();
    let result: VertexSet = match r.family {
        GadgetFamily::Sparse { .. } => {
            let kept = VertexSet::new(picked);
            (0..n).filter(|&v| !kept.contains(v)).collect()
        }
        _ => VertexSet::new(picked),
    };

    for u in result.iter() {
        for v in result.iter() {
            if u < v && r.source.has_edge(u, v) {
                return Err(Error::SearchFailed(format!(
                    "backward map produced adjacent pair {u}-{v}; construction bug"
                )));
            }
        }
    }
    if result.size() < r.source_k {
        return Err(Error::SearchFailed(format!(
            "backward map produced {} vertices, expected at least {}",
            result.size(),
            r.source_k
        )));
    }
    Ok(result)
}

/// Re-derives every structural claim of the family from the generated
/// graph: degrees, degeneracy, wiring multiplicities, colorings and the
/// parameter identities.
pub fn verify_structure(r: &ReductionOutput) -> Result<()> {
    let g = &r.gadget;
    g.check_invariants()?;
    let n = r.source.n();
    let m = r.source.m();
    let fail = |msg: String| Err(Error::StructureAudit(msg));

    match r.family {
        GadgetFamily::Sparse { bipartite } => {
            let GadgetParams::Sparse(p) = r.params else {
                return fail("parameter/family mismatch".into());
            };
            if g.n() != p.n_total {
                return fail(format!(
                    "gadget has {} vertices, expected {}",
                    g.n(),
                    p.n_total
                ));
            }
            audit_sparse_params(&p, n, m, r.source_k)?;
            if r.k_prime != p.k_prime {
                return fail("k' mismatch".into());
            }
            let params = compute_params(g);
            if params.max_degree != 4 {
                return fail(format!("max degree {} != 4", params.max_degree));
            }
            if params.degeneracy != 2 {
                return fail(format!("degeneracy {} != 2", params.degeneracy));
            }
            params.validate_elimination(g)?;
            // Wiring multiplicities.
            let mut a_used = std::collections::HashSet::new();
            let mut b_used = std::collections::HashSet::new();
            for v in g.vertices() {
                match r.roles[v] {
                    Role::SourceCopy(src) => {
                        let mut e_count = 0;
                        let mut b_count = 0;
                        for &w in g.neighbors(v) {
                            match r.roles[w] {
                                Role::EdgeVertex { edge, .. } => {
                                    let (a, b) = r.source_edges[edge];
                                    if a != src && b != src {
                                        return fail(format!("copy {src} wired to foreign edge"));
                                    }
                                    e_count += 1;
                                }
                                Role::PathB(_) => {
                                    b_count += 1;
                                    if !b_used.insert(w) {
                                        return fail("B anchor shared by two copies".into());
                                    }
                                }
                                _ => return fail(format!("copy {src} has a bad neighbor")),
                            }
                        }
                        if e_count != 3 || b_count != 1 {
                            return fail(format!("copy {src} wiring {e_count}/{b_count}"));
                        }
                    }
                    Role::EdgeVertex { .. } => {
                        let a_count = g
                            .neighbors(v)
                            .iter()
                            .filter(|&&w| matches!(r.roles[w], Role::PathA(_)))
                            .count();
                        if a_count != 2 {
                            return fail("edge vertex lacks two A anchors".into());
                        }
                        for &w in g.neighbors(v) {
                            if matches!(r.roles[w], Role::PathA(_)) && !a_used.insert(w) {
                                return fail("A anchor shared by two edge vertices".into());
                            }
                        }
                    }
                    _ => {}
                }
            }
            // The anchor sets really are paths in index order.
            for (role_is_a, len) in [(true, p.a), (false, p.b)] {
                let base = if role_is_a { n + m } else { n + m + p.a };
                for i in 0..len {
                    let within = g
                        .neighbors(base + i)
                        .iter()
                        .filter(|&&w| (base..base + len).contains(&w))
                        .count();
                    let expected = if len == 1 {
                        0
                    } else if i == 0 || i + 1 == len {
                        1
                    } else {
                        2
                    };
                    if within != expected {
                        return fail(format!("anchor {} breaks the path shape", base + i));
                    }
                    if i + 1 < len && !g.has_edge(base + i, base + i + 1) {
                        return fail("anchor path skips an index".into());
                    }
                }
            }
            if bipartite && g.two_coloring().is_none() {
                return fail("bipartite variant is not 2-colorable".into());
            }
        }
        GadgetFamily::DenseDelta6 { permissive } => {
            if g.n() != n + m {
                return fail("gadget size != n + m".into());
            }
            let co = g.complement();
            if !permissive {
                let delta = co.vertices().map(|v| co.degree(v)).max().unwrap_or(0);
                if delta != 6 {
                    return fail(format!("complement max degree {delta} != 6"));
                }
            }
            // The complement replaces every source edge with a triangle.
            for (j, &(u, v)) in r.source_edges.iter().enumerate() {
                let e = n + j;
                if !(co.has_edge(u, e) && co.has_edge(v, e)) {
                    return fail("edge vertex not complement-tied to its endpoints".into());
                }
                if co.degree(e) != 2 {
                    return fail("edge vertex has complement degree != 2".into());
                }
            }
        }
        GadgetFamily::DenseDegen2 => {
            let GadgetParams::DenseDegen2 { x, k_prime } = r.params else {
                return fail("parameter/family mismatch".into());
            };
            if x != n - r.source_k + 3 || k_prime != x * m + r.source_k {
                return fail("parameter identities fail".into());
            }
            if g.n() != x * m + n + 2 {
                return fail("gadget size != xm + n + 2".into());
            }
            let co = g.complement();
            let co_params = compute_params(&co);
            if co_params.degeneracy != 2 {
                return fail(format!(
                    "complement degeneracy {} != 2",
                    co_params.degeneracy
                ));
            }
            if co.two_coloring().is_none() {
                return fail("complement is not bipartite".into());
            }
            // Cardinality inequality behind the copies' satisfaction,
            // checked in exact integers.
            let (xm, k) = (x * m, r.source_k);
            let lhs = (xm + k - 1 - 3 * x) * (n - k + 2);
            let rhs = (n - k) * (xm + k - 1);
            if lhs < rhs {
                return fail(format!("satisfaction inequality fails: {lhs} < {rhs}"));
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::instances;
    use crate::oracle;

    #[test]
    fn parameter_spot_values() {
        let p = gadget_params(4, 6, 3).unwrap();
        assert_eq!((p.c, p.n_total, p.k_prime, p.a, p.b), (88, 89, 67, 60, 19));
        let p = gadget_params(8, 12, 3).unwrap();
        assert_eq!((p.n_total, p.k_prime, p.a, p.b), (177, 133, 116, 41));
        let p = gadget_params(6, 9, 3).unwrap();
        assert_eq!((p.n_total, p.k_prime, p.a, p.b), (133, 100, 88, 30));
    }

    #[test]
    fn parameters_hold_across_cubic_sizes() {
        for n in [4usize, 6, 8, 10] {
            let m = 3 * n / 2;
            for k in 3..n {
                let p = gadget_params(n, m, k).unwrap();
                audit_sparse_params(&p, n, m, k).unwrap();
            }
        }
    }

    #[test]
    fn sparse_gadget_structure() {
        let r = reduce_sparse(&instances::complete(4), 3, false).unwrap();
        assert_eq!(r.gadget.n(), 89);
        assert_eq!(r.k_prime, 67);
        verify_structure(&r).unwrap();

        let r = reduce_sparse(&instances::q3(), 3, false).unwrap();
        assert_eq!(r.gadget.n(), 177);
        assert_eq!(r.k_prime, 133);
        verify_structure(&r).unwrap();

        let rb = reduce_sparse(&instances::q3(), 3, true).unwrap();
        verify_structure(&rb).unwrap();
        assert!(rb.gadget.two_coloring().is_some());
    }

    #[test]
    fn sparse_rejects_non_cubic() {
        assert!(matches!(
            reduce_sparse(&instances::cycle(6), 3, false),
            Err(Error::NotCubic { .. })
        ));
    }

    #[test]
    fn delta6_gadget_structure_and_equivalence() {
        let r = reduce_dense_delta6(&instances::complete(4), 1, false).unwrap();
        assert_eq!(r.gadget.n(), 10);
        assert_eq!(r.k_prime, 7);
        verify_structure(&r).unwrap();
        // alpha(K4) = 1, so the gadget maximum is m + 1 = 7.
        let best = oracle::max_pds_bruteforce(&r.gadget, false, oracle::DEFAULT_CAP).unwrap();
        assert_eq!(best.size, 7);

        let r2 = reduce_dense_delta6(&instances::complete(4), 2, false).unwrap();
        assert_eq!(r2.k_prime, 8);
        assert!(
            oracle::max_pds_at_least(&r2.gadget, 8, false, oracle::DEFAULT_CAP)
                .unwrap()
                .is_none()
        );

        let prism = reduce_dense_delta6(&instances::prism(), 2, false).unwrap();
        assert_eq!(prism.gadget.n(), 15);
        assert_eq!(prism.k_prime, 11);
        verify_structure(&prism).unwrap();
    }

    #[test]
    fn degen2_gadget_structure() {
        let r = reduce_dense_degen2(&instances::complete(4), 4).unwrap();
        assert_eq!(r.gadget.n(), 24);
        assert_eq!(r.k_prime, 22);
        verify_structure(&r).unwrap();

        let r = reduce_dense_degen2(&instances::q3(), 4).unwrap();
        assert_eq!(r.gadget.n(), 94);
        assert_eq!(r.k_prime, 88);
        verify_structure(&r).unwrap();

        assert!(reduce_dense_degen2(&instances::q3(), 3).is_err());
    }

    #[test]
    fn forward_maps_produce_solutions_of_size_k_prime() {
        // Sparse family on Q3 for every independent set of size 3.
        let src = instances::q3();
        let r = reduce_sparse(&src, 3, false).unwrap();
        let sets = oracle::independent_sets_of_size(&src, 3);
        assert!(!sets.is_empty());
        for ind in &sets {
            let s = forward_map(&r, ind).unwrap();
            assert_eq!(s.size(), r.k_prime);
            assert!(is_pds(&r.gadget, &s));
        }

        // Dense families.
        let r = reduce_dense_delta6(&instances::complete(4), 1, false).unwrap();
        let ind: VertexSet = [0usize].into_iter().collect();
        let s = forward_map(&r, &ind).unwrap();
        assert_eq!(s.size(), 7);
        assert!(is_pds(&r.gadget, &s));

        let r = reduce_dense_degen2(&src, 4);
        let r = r.unwrap();
        let ind = oracle::independent_sets_of_size(&src, 4).remove(0);
        let s = forward_map(&r, &ind).unwrap();
        assert_eq!(s.size(), 88);
        assert!(is_pds(&r.gadget, &s));
    }

    #[test]
    fn forward_map_rejects_bad_inputs() {
        let r = reduce_dense_delta6(&instances::complete(4), 2, false).unwrap();
        let dependent: VertexSet = [0usize, 1].into_iter().collect();
        assert!(matches!(
            forward_map(&r, &dependent),
            Err(Error::NotIndependent { .. })
        ));
        let small: VertexSet = [0usize].into_iter().collect();
        assert!(matches!(
            forward_map(&r, &small),
            Err(Error::WrongSetSize { .. })
        ));
    }

    #[test]
    fn backward_maps_recover_independent_sets() {
        // K4 delta6 at k = 1: the oracle maximum maps back to one vertex.
        let r = reduce_dense_delta6(&instances::complete(4), 1, false).unwrap();
        let best = oracle::max_pds_bruteforce(&r.gadget, false, oracle::DEFAULT_CAP).unwrap();
        let ind = backward_map(&r, &best.witness.unwrap()).unwrap();
        assert_eq!(ind.size(), 1);

        // Prism delta6 at k = 2.
        let r = reduce_dense_delta6(&instances::prism(), 2, false).unwrap();
        let best = oracle::max_pds_bruteforce(&r.gadget, false, oracle::DEFAULT_CAP).unwrap();
        assert_eq!(best.size, r.k_prime);
        let ind = backward_map(&r, &best.witness.unwrap()).unwrap();
        assert!(ind.size() >= 2);

        // Sparse round trip recovers the original set exactly.
        let src = instances::q3();
        let r = reduce_sparse(&src, 3, false).unwrap();
        let ind = oracle::independent_sets_of_size(&src, 3).remove(0);
        let s = forward_map(&r, &ind).unwrap();
        let back = backward_map(&r, &s).unwrap();
        assert_eq!(back, ind);
    }

    #[test]
    fn backward_map_rejects_non_solutions() {
        let r = reduce_dense_delta6(&instances::complete(4), 1, false).unwrap();
        let junk: VertexSet = (0..3).collect();
        assert!(matches!(backward_map(&r, &junk), Err(Error::NotAPds)));
    }

    #[test]
    fn permissive_delta6_accepts_non_cubic() {
        let c5 = instances::cycle(5);
        assert!(reduce_dense_delta6(&c5, 2, false).is_err());
        let r = reduce_dense_delta6(&c5, 2, true).unwrap();
        verify_structure(&r).unwrap();
    }

    #[test]
    fn degen2_satisfaction_inequality_spot_values() {
        // n=8, m=12, k=4, x=7: (xm + k - 1 - 3x)(n - k + 2) >= (n - k)(xm + k - 1)
        // evaluates to 66 * 6 >= 4 * 87.
        let (n, m, k) = (8usize, 12usize, 4usize);
        let x = n - k + 3;
        assert_eq!(x, 7);
        let lhs = (x * m + k - 1 - 3 * x) * (n - k + 2);
        let rhs = (n - k) * (x * m + k - 1);
        assert_eq!((lhs, rhs), (66 * 6, 4 * 87));
        assert!(lhs >= rhs);
    }

    #[test]
    fn larger_cubic_sources_pass_all_audits() {
        // Petersen and the triangle-bearing cubic 8-vertex source stress
        // the generators at bigger parameter scales.
        for src in [instances::petersen(), instances::cubic8_with_triangles()] {
            let r = reduce_sparse(&src, 3, false).unwrap();
            verify_structure(&r).unwrap();
            let rb = reduce_sparse(&src, 3, true).unwrap();
            verify_structure(&rb).unwrap();
            for ind in oracle::independent_sets_of_size(&src, 3) {
                let s = forward_map(&r, &ind).unwrap();
                assert!(is_pds(&r.gadget, &s));
                assert_eq!(backward_map(&r, &s).unwrap(), ind);
            }
            let rd = reduce_dense_delta6(&src, 2, false).unwrap();
            verify_structure(&rd).unwrap();
            let rg = reduce_dense_degen2(&src, 4).unwrap();
            verify_structure(&rg).unwrap();
        }
    }
}
