//! Exhaustive ground-truth solvers for small instances.
//!
//! Every answer a polynomial solver produces at desk scale is cross-checked
//! against these. Enumeration is size-descending and lexicographic within a
//! size, so the first hit is the maximum and witnesses are canonical.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::pds::VertexSet;

/// Default exhaustive-search cap on the vertex count (about 16M subsets).
pub const DEFAULT_CAP: usize = 24;

/// Hard ceiling of the bitset backend; caps above this are clamped.
pub const MAX_CAP: usize = 64;

fn check_cap(n: usize, cap: usize) -> Result<()> {
    let effective = cap.min(MAX_CAP);
    if n > effective {
        return Err(Error::OracleCapExceeded { n, cap: effective });
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SolveMethod {
    Brute,
    H1,
    H2,
    CoH1,
    CoH2,
    Fallback,
}

impl SolveMethod {
    pub fn as_str(&self) -> &'static str {
        match self {
            SolveMethod::Brute => "brute",
            SolveMethod::H1 => "h1",
            SolveMethod::H2 => "h2",
            SolveMethod::CoH1 => "co-h1",
            SolveMethod::CoH2 => "co-h2",
            SolveMethod::Fallback => "fallback",
        }
    }
}

/// Outcome of a solve: the maximum size found, a witness when one exists,
/// which code path produced it, and whether the witness re-verified.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolveResult {
    pub size: usize,
    pub witness: Option<VertexSet>,
    pub method: SolveMethod,
    pub verified: bool,
}

impl SolveResult {
    pub fn none(method: SolveMethod) -> SolveResult {
        SolveResult {
            size: 0,
            witness: None,
            method,
            verified: false,
        }
    }
}

/// Bitset view of a graph for the enumeration loops.
struct MaskedGraph {
    n: usize,
    adj: Vec<u64>,
    deg: Vec<u64>,
}

impl MaskedGraph {
    fn new(g: &Graph) -> MaskedGraph {
        let n = g.n();
        assert!(n <= 64);
        let mut adj = vec![0u64; n];
        for (v, mask) in adj.iter_mut().enumerate() {
            for &w in g.neighbors(v) {
                *mask |= 1 << w;
            }
        }
        let deg = adj.iter().map(|m| m.count_ones() as u64).collect();
        MaskedGraph { n, adj, deg }
    }

    fn is_pds(&self, mask: u64, size: u64) -> bool {
        let t = self.n as u64 - size;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            let d_in = (self.adj[v] & mask).count_ones() as u64;
            let d_out = self.deg[v] - d_in;
            if d_in * t < d_out * (size - 1) {
                return false;
            }
        }
        true
    }

    fn is_connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let start = mask.trailing_zeros() as usize;
        let mut seen = 1u64 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0u64;
            let mut f = frontier;
            while f != 0 {
                let v = f.trailing_zeros() as usize;
                f &= f - 1;
                next |= self.adj[v] & mask & !seen;
            }
            seen |= next;
            frontier = next;
        }
        seen == mask
    }

    fn is_independent(&self, mask: u64) -> bool {
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if self.adj[v] & rest != 0 {
                return false;
            }
        }
        true
    }
}

/// Calls `visit` on every k-combination of `0..n` in lexicographic order
/// until it returns `true`; returns the accepted combination, if any.
fn first_combination<F: FnMut(&[usize]) -> bool>(
    n: usize,
    k: usize,
    mut visit: F,
) -> Option<Vec<usize>> {
    if k > n {
        return None;
    }
    let mut c: Vec<usize> = (0..k).collect();
    loop {
        if visit(&c) {
            return Some(c);
        }
        // Advance to the next combination.
        let mut i = k;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if c[i] < n - k + i {
                break;
            }
        }
        c[i] += 1;
        for j in (i + 1)..k {
            c[j] = c[j - 1] + 1;
        }
    }
}

fn mask_of(vs: &[usize]) -> u64 {
    vs.iter().fold(0u64, |m, &v| m | (1 << v))
}

/// Exact maximum PDS by exhaustion over all subset sizes, descending.
/// The witness is the lexicographically smallest among maximum-size
/// solutions; `size` is 0 with no witness when no PDS exists at all.
pub fn max_pds_bruteforce(g: &Graph, connected: bool, cap: usize) -> Result<SolveResult> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    check_cap(n, cap)?;
    match search_descending(g, connected, n - 1, 2) {
        Some(s) => {
            let verified =
                crate::pds::is_pds(g, &s) && (!connected || crate::pds::is_connected_pds(g, &s));
            Ok(SolveResult {
                size: s.size(),
                witness: Some(s),
                method: SolveMethod::Brute,
                verified,
            })
        }
        None => Ok(SolveResult::none(SolveMethod::Brute)),
    }
}

/// Exhaustive check bounded from below: the largest PDS of size at least
/// `min_size`, or `None`. Used where a full sweep is pointless, e.g. the
/// 24-vertex gadget audits that only ask about sizes near the top.
pub fn max_pds_at_least(
    g: &Graph,
    min_size: usize,
    connected: bool,
    cap: usize,
) -> Result<Option<VertexSet>> {
    largest_pds_with_size_in(g, min_size, g.n().saturating_sub(1), connected, cap)
}

/// Largest PDS whose size lies in `[low, high]`, or `None`.
pub fn largest_pds_with_size_in(
    g: &Graph,
    low: usize,
    high: usize,
    connected: bool,
    cap: usize,
) -> Result<Option<VertexSet>> {
    let n = g.n();
    check_cap(n, cap)?;
    if low < 2 || low > n - 1 {
        return Err(Error::SetSizeOutOfRange {
            size: low,
            min: 2,
            max: n - 1,
        });
    }
    Ok(search_descending(g, connected, high.min(n - 1), low))
}

fn search_descending(g: &Graph, connected: bool, from: usize, down_to: usize) -> Option<VertexSet> {
    let mg = MaskedGraph::new(g);
    let n = g.n();
    for size in (down_to..=from).rev() {
        let hit = first_combination(n, size, |combo| {
            let mask = mask_of(combo);
            mg.is_pds(mask, size as u64) && (!connected || mg.is_connected(mask))
        });
        if let Some(combo) = hit {
            return Some(VertexSet::from_sorted(combo));
        }
    }
    None
}

/// Exact independence number with a lexicographically-smallest witness.
pub fn max_independent_set(g: &Graph, cap: usize) -> Result<(usize, VertexSet)> {
    let n = g.n();
    check_cap(n, cap)?;
    let mg = MaskedGraph::new(g);
    for size in (1..=n).rev() {
        let hit = first_combination(n, size, |combo| mg.is_independent(mask_of(combo)));
        if let Some(combo) = hit {
            return Ok((size, VertexSet::from_sorted(combo)));
        }
    }
    Ok((0, VertexSet::from_sorted(Vec::new())))
}

/// All independent sets of exactly `k` vertices, in lexicographic order.
pub fn independent_sets_of_size(g: &Graph, k: usize) -> Vec<VertexSet> {
    let mg = MaskedGraph::new(g);
    let mut out = Vec::new();
    let _ = first_combination(g.n(), k, |combo| {
        if mg.is_independent(mask_of(combo)) {
            out.push(VertexSet::from_sorted(combo.to_vec()));
        }
        false
    });
    out
}
