//! Maximum proportionally dense subgraphs: exact verifiers, brute-force
//! ground truth, polynomial solvers for graphs (or complements) of
//! h-index at most two, and the hardness-gadget generators that tie the
//! regimes together.
//!
//! A set `S` with `2 <= |S| < |V|` is proportionally dense when every
//! member has at least as large a fraction of its neighbors inside `S`
//! (out of `|S|-1`) as outside (out of `|V\S|`). All density comparisons
//! in this crate are exact integer arithmetic.

#![forbid(unsafe_code)]

pub mod decompose;
pub mod error;
pub mod generate;
pub mod graph;
pub mod instances;
pub mod io;
pub mod knapsack;
pub mod oracle;
pub mod params;
pub mod pds;
pub mod reductions;
pub mod selfcheck;
pub mod solver_co_h2;
pub mod solver_h2;

pub use error::{Error, Result};
pub use graph::Graph;
pub use oracle::{SolveMethod, SolveResult, DEFAULT_CAP};
pub use params::{compute_params, h_index, GraphParams};
pub use pds::{is_connected_pds, is_pds, VertexSet};

/// Dispatches to the strongest applicable solver: bounded h, bounded
/// complement h, then exhaustive search under the cap.
pub fn solve_auto(g: &Graph, connected: bool, cap: usize) -> Result<SolveResult> {
    let h = h_index(g);
    if h <= 2 {
        return solver_h2::solve_h2(g, connected, cap);
    }
    let co_h = h_index(&g.complement());
    if co_h <= 2 {
        return solver_co_h2::solve_co_h2(g, connected, cap);
    }
    if g.n() <= cap {
        return oracle::max_pds_bruteforce(g, connected, cap);
    }
    Err(Error::NoPolynomialCase {
        h,
        co_h,
        n: g.n(),
        cap,
    })
}
