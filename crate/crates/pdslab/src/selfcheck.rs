//! Cross-validation suites shared by the acceptance tests and the CLI
//! self-test harness. Each suite runs its checks to completion, counting
//! everything it verified and collecting a replayable description of every
//! failure instead of stopping at the first.

use std::time::Instant;

use crate::generate::{
    random_co_h2_graph_seeded, random_graph_seeded, random_h2_graph_seeded,
    random_isolated_free_graph_seeded,
};
use crate::graph::Graph;
use crate::instances;
use crate::knapsack::solve_exact_2d;
use crate::oracle;
use crate::pds::{
    check_low_degree_closure, co_domination_check, is_pds, satisfaction_forms, VertexSet,
};
use crate::reductions::{
    audit_sparse_params, backward_map, forward_map, gadget_params, reduce_dense_degen2,
    reduce_dense_delta6, reduce_sparse, verify_structure,
};
use crate::solver_co_h2::solve_co_h2;
use crate::solver_h2::{
    build_knapsack_instance, build_knapsack_instance_with_rule, fallback_half_pds, solve_h2,
    Accounting, HubChoice,
};

#[derive(Debug, Clone)]
pub struct SuiteReport {
    pub name: &'static str,
    pub checked: usize,
    pub failures: Vec<String>,
    pub elapsed_ms: u128,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn summary_line(&self) -> String {
        if self.passed() {
            format!(
                "PASS  {} ({} checks, {} ms)",
                self.name, self.checked, self.elapsed_ms
            )
        } else {
            format!(
                "FAIL  {} ({} checks, {} failures, {} ms; first: {})",
                self.name,
                self.checked,
                self.failures.len(),
                self.elapsed_ms,
                self.failures[0]
            )
        }
    }
}

struct Suite {
    name: &'static str,
    checked: usize,
    failures: Vec<String>,
    started: Instant,
}

impl Suite {
    fn new(name: &'static str) -> Suite {
        Suite {
            name,
            checked: 0,
            failures: Vec::new(),
            started: Instant::now(),
        }
    }

    fn check(&mut self, ok: bool, describe: impl FnOnce() -> String) {
        self.checked += 1;
        if !ok {
            self.failures.push(describe());
        }
    }

    fn finish(self) -> SuiteReport {
        SuiteReport {
            name: self.name,
            checked: self.checked,
            failures: self.failures,
            elapsed_ms: self.started.elapsed().as_millis(),
        }
    }
}

/// Criterion 1: solver/oracle agreement on random h <= 2 graphs, both
/// connectivity flags.
pub fn h2_oracle_agreement(count: u64, cap: usize) -> SuiteReport {
    let mut s = Suite::new("h2 oracle equivalence");
    for seed in 0..count {
        let n = 5 + (seed as usize % 12);
        let g = random_h2_graph_seeded(seed, n);
        for connected in [false, true] {
            match (
                solve_h2(&g, connected, cap),
                oracle::max_pds_bruteforce(&g, connected, cap),
            ) {
                (Ok(fast), Ok(truth)) => s.check(fast.size == truth.size, || {
                    format!(
                        "seed {seed} connected {connected}: solver {} vs oracle {} on {:?}",
                        fast.size, truth.size, g
                    )
                }),
                (f, t) => s.check(false, || format!("seed {seed}: errors {f:?} / {t:?}")),
            }
        }
    }
    s.finish()
}

/// Criterion 2: the same for graphs whose complement has h <= 2.
pub fn co_h2_oracle_agreement(count: u64, cap: usize) -> SuiteReport {
    let mut s = Suite::new("co-h2 oracle equivalence");
    for seed in 0..count {
        let n = 5 + (seed as usize % 12);
        let g = random_co_h2_graph_seeded(seed, n);
        for connected in [false, true] {
            match (
                solve_co_h2(&g, connected, cap),
                oracle::max_pds_bruteforce(&g, connected, cap),
            ) {
                (Ok(fast), Ok(truth)) => s.check(fast.size == truth.size, || {
                    format!(
                        "seed {seed} connected {connected}: solver {} vs oracle {} on {:?}",
                        fast.size, truth.size, g
                    )
                }),
                (f, t) => s.check(false, || format!("seed {seed}: errors {f:?} / {t:?}")),
            }
        }
    }
    s.finish()
}

/// Criterion 3: the fixed small maxima, via the oracle and the matching
/// polynomial solver.
pub fn fixed_values(cap: usize) -> SuiteReport {
    let mut s = Suite::new("fixed derived values");
    let cases: Vec<(&str, Graph, usize)> = vec![
        ("C5", instances::cycle(5), 3),
        ("P4", instances::path(4), 2),
        ("K4", instances::complete(4), 3),
        (
            "K6 minus matching",
            instances::complete_minus_perfect_matching(6),
            3,
        ),
        (
            "complement of two triangles",
            instances::disjoint_triangles(2).complement(),
            4,
        ),
        ("complement of P4 + K1", instances::co_p4_plus_isolated(), 3),
    ];
    for (name, g, expect) in cases {
        match oracle::max_pds_bruteforce(&g, false, cap) {
            Ok(r) => {
                s.check(r.size == expect, || {
                    format!("{name}: oracle found {}", r.size)
                });
                s.check(r.verified, || {
                    format!("{name}: oracle witness did not verify")
                });
            }
            Err(e) => s.check(false, || format!("{name}: oracle error {e}")),
        }
        let solved = crate::solve_auto(&g, false, cap);
        match solved {
            Ok(r) => s.check(r.size == expect, || {
                format!("{name}: solver found {}", r.size)
            }),
            Err(e) => s.check(false, || format!("{name}: solver error {e}")),
        }
    }
    s.finish()
}

/// Criterion 4: the nine parameter conditions across all cubic sizes plus
/// the fixed spot values.
pub fn gadget_parameter_audit() -> SuiteReport {
    let mut s = Suite::new("gadget parameter audit");
    for n in [4usize, 6, 8, 10] {
        let m = 3 * n / 2;
        for k in 3..n {
            match gadget_params(n, m, k) {
                Ok(p) => {
                    s.check(audit_sparse_params(&p, n, m, k).is_ok(), || {
                        format!("audit fails for n={n} m={m} k={k}")
                    });
                    s.check(p.n_total == p.a + p.b + m + n, || {
                        format!("N != A+B+m+n at n={n} k={k}")
                    });
                    s.check(p.n_total <= p.c + 5, || format!("N > C+5 at n={n} k={k}"));
                }
                Err(e) => s.check(false, || format!("params fail for n={n} m={m} k={k}: {e}")),
            }
        }
    }
    match gadget_params(4, 6, 3) {
        Ok(p) => s.check((p.n_total, p.k_prime, p.a, p.b) == (89, 67, 60, 19), || {
            format!("spot values differ: {p:?}")
        }),
        Err(e) => s.check(false, || format!("spot case failed: {e}")),
    }
    s.finish()
}

/// Criterion 5: structural audits of the sparse gadgets and forward-map
/// verification for every independent set of the requested size. The
/// reverse direction is not desk-testable here (the smallest gadget has
/// 89 vertices).
pub fn sparse_gadget_suite() -> SuiteReport {
    let mut s = Suite::new("sparse gadget structure");
    let sources: Vec<(&str, Graph)> = vec![
        ("k4", instances::complete(4)),
        ("k33", instances::k33()),
        ("prism", instances::prism()),
        ("q3", instances::q3()),
    ];
    for (name, src) in &sources {
        for k in 3..src.n() {
            for bipartite in [false, true] {
                let r = match reduce_sparse(src, k, bipartite) {
                    Ok(r) => r,
                    Err(e) => {
                        s.check(false, || format!("{name} k={k}: generation failed: {e}"));
                        continue;
                    }
                };
                s.check(verify_structure(&r).is_ok(), || {
                    format!("{name} k={k} bipartite={bipartite}: structure audit failed")
                });
                for ind in oracle::independent_sets_of_size(src, k) {
                    match forward_map(&r, &ind) {
                        Ok(sol) => s
                            .check(sol.size() == r.k_prime && is_pds(&r.gadget, &sol), || {
                                format!("{name} k={k}: forward map not a solution for {ind:?}")
                            }),
                        Err(e) => s.check(false, || format!("{name} k={k}: forward map error {e}")),
                    }
                }
            }
        }
    }
    s.finish()
}

/// Criterion 6: full oracle equivalence for the delta6 family on every
/// cubic source with at most 6 vertices and every k: the gadget maximum
/// is m plus the source independence number.
pub fn dense_delta6_suite(cap: usize) -> SuiteReport {
    let mut s = Suite::new("dense-delta6 full equivalence");
    let sources: Vec<(&str, Graph)> = vec![
        ("k4", instances::complete(4)),
        ("k33", instances::k33()),
        ("prism", instances::prism()),
    ];
    for (name, src) in &sources {
        let alpha = match oracle::max_independent_set(src, cap) {
            Ok((a, _)) => a,
            Err(e) => {
                s.check(false, || format!("{name}: alpha failed: {e}"));
                continue;
            }
        };
        let mut gadget_max = None;
        for k in 1..=src.n() {
            let r = match reduce_dense_delta6(src, k, false) {
                Ok(r) => r,
                Err(e) => {
                    s.check(false, || format!("{name} k={k}: generation failed: {e}"));
                    continue;
                }
            };
            s.check(verify_structure(&r).is_ok(), || {
                format!("{name} k={k}: structure audit")
            });
            let co = r.gadget.complement();
            let delta = co.vertices().map(|v| co.degree(v)).max().unwrap_or(0);
            s.check(delta == 6, || {
                format!("{name} k={k}: complement max degree {delta}")
            });
            let max = gadget_max.get_or_insert_with(|| {
                oracle::max_pds_bruteforce(&r.gadget, false, cap).map(|r| r.size)
            });
            match max {
                Ok(found) => {
                    let found = *found;
                    s.check(found == src.m() + alpha, || {
                        format!(
                            "{name}: gadget max {found} != m + alpha = {}",
                            src.m() + alpha
                        )
                    });
                }
                Err(e) => {
                    let msg = e.to_string();
                    s.check(false, || format!("{name}: oracle failed: {msg}"));
                }
            }
            // Forward soundness and the round trip hold for every
            // independent set of the requested size.
            for ind in oracle::independent_sets_of_size(src, k) {
                match forward_map(&r, &ind) {
                    Ok(sol) => {
                        s.check(sol.size() == r.k_prime && is_pds(&r.gadget, &sol), || {
                            format!("{name} k={k}: forward map failed for {ind:?}")
                        });
                        match backward_map(&r, &sol) {
                            Ok(back) => s.check(back.size() >= ind.size(), || {
                                format!("{name} k={k}: round trip shrank {ind:?}")
                            }),
                            Err(e) => {
                                s.check(false, || format!("{name} k={k}: backward error {e}"))
                            }
                        }
                    }
                    Err(e) => s.check(false, || format!("{name} k={k}: forward error {e}")),
                }
            }
        }
    }
    s.finish()
}

/// Criterion 7: structure of the degen2 family on K4 and Q3, polynomial
/// forward verification on Q3 at k=4, and (optionally) the bounded
/// exhaustion on the 24-vertex K4 gadget showing no solution reaches k'.
pub fn dense_degen2_suite(run_exhaustion: bool, cap: usize) -> SuiteReport {
    let mut s = Suite::new("dense-degen2 structure");
    for (name, src) in [("k4", instances::complete(4)), ("q3", instances::q3())] {
        for k in 4..=src.n() {
            match reduce_dense_degen2(&src, k) {
                Ok(r) => s.check(verify_structure(&r).is_ok(), || {
                    format!("{name} k={k}: structure audit failed")
                }),
                Err(e) => s.check(false, || format!("{name} k={k}: generation failed: {e}")),
            }
        }
    }

    let q3 = instances::q3();
    match reduce_dense_degen2(&q3, 4) {
        Ok(r) => {
            s.check(r.gadget.n() == 94 && r.k_prime == 88, || {
                format!(
                    "q3 gadget dimensions off: {} vertices, k'={}",
                    r.gadget.n(),
                    r.k_prime
                )
            });
            for ind in oracle::independent_sets_of_size(&q3, 4) {
                match forward_map(&r, &ind) {
                    Ok(sol) => s.check(sol.size() == r.k_prime && is_pds(&r.gadget, &sol), || {
                        format!("q3 k=4: forward map failed for {ind:?}")
                    }),
                    Err(e) => s.check(false, || format!("q3 k=4: forward error {e}")),
                }
            }
        }
        Err(e) => s.check(false, || format!("q3 k=4 generation failed: {e}")),
    }

    if run_exhaustion {
        // alpha(K4) = 1 < 4, so the 24-vertex gadget must stay below k'.
        match reduce_dense_degen2(&instances::complete(4), 4) {
            Ok(r) => match oracle::max_pds_at_least(&r.gadget, r.k_prime, false, cap.max(24)) {
                Ok(found) => {
                    s.check(found.is_none(), || {
                        format!("k4 gadget admits a solution of size >= {}", r.k_prime)
                    });
                }
                Err(e) => s.check(false, || format!("exhaustion failed: {e}")),
            },
            Err(e) => s.check(false, || format!("k4 generation failed: {e}")),
        }
    }
    s.finish()
}

/// Criterion 8: the guaranteed half-size construction always returns a
/// verified set of size at least ceil(n/2) on isolated-vertex-free inputs.
pub fn fallback_suite(count: u64, cap: usize) -> SuiteReport {
    let mut s = Suite::new("half-size fallback");
    for seed in 0..count {
        let n = 3 + (seed as usize % 10);
        let g = random_isolated_free_graph_seeded(seed, n);
        match fallback_half_pds(&g, cap) {
            Ok(r) => {
                let w = r.witness.as_ref();
                s.check(
                    r.size >= n.div_ceil(2) && w.is_some_and(|w| is_pds(&g, w)),
                    || format!("seed {seed}: size {} on n={n}", r.size),
                );
            }
            Err(e) => s.check(false, || {
                format!("seed {seed}: fallback error {e} on {g:?}")
            }),
        }
    }
    s.finish()
}

/// Criterion 9: the structural verifier invariants: low-degree closure
/// filters every enumerated solution, the domination equivalence matches
/// plain verification on every qualifying set, and the three inequality
/// forms agree on random triples.
pub fn verifier_invariants_suite() -> SuiteReport {
    let mut s = Suite::new("verifier invariants");

    // Closure necessary condition over every subset of small graphs.
    for seed in 0..200u64 {
        let n = 4 + (seed as usize % 5);
        let g = random_graph_seeded(seed, n, 0.45);
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() < 2 || members.len() >= n {
                continue;
            }
            let set = VertexSet::from_sorted(members);
            if is_pds(&g, &set) {
                s.check(check_low_degree_closure(&g, &set), || {
                    format!("closure fails at seed {seed} mask {mask:#x}")
                });
            }
        }
    }

    // Domination equivalence on complements of bounded-h graphs.
    for seed in 0..200u64 {
        let n = 5 + (seed as usize % 8);
        let g = random_co_h2_graph_seeded(seed, n);
        let threshold = n.div_ceil(2) + 1;
        for mask in 1u32..(1 << n) {
            let members: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            if members.len() < threshold || members.len() >= n {
                continue;
            }
            let set = VertexSet::from_sorted(members);
            match co_domination_check(&g, &set) {
                Ok(eq) => s.check(eq == is_pds(&g, &set), || {
                    format!("domination equivalence fails at seed {seed} mask {mask:#x}")
                }),
                Err(e) => s.check(false, || format!("seed {seed}: {e}")),
            }
        }
    }

    // Three-form agreement on 10^5 random member/set/graph triples.
    let mut triples = 0u64;
    let mut seed = 0u64;
    while triples < 100_000 {
        let n = 3 + (seed as usize % 14);
        let g = random_graph_seeded(seed, n, 0.4);
        for shift in 0..8u64 {
            let bits = seed
                .wrapping_mul(0x9e37_79b9_7f4a_7c15)
                .rotate_left(shift as u32 * 7);
            let members: Vec<usize> = (0..n).filter(|&v| bits >> v & 1 == 1).collect();
            if members.len() < 2 || members.len() >= n {
                continue;
            }
            let set = VertexSet::from_sorted(members);
            let inside = set.bitmap(n);
            for v in set.iter() {
                let f = satisfaction_forms(&g, &inside, set.size(), v);
                s.check(f[0] == f[1] && f[1] == f[2], || {
                    format!("forms disagree: seed {seed} shift {shift} vertex {v}")
                });
                triples += 1;
            }
        }
        seed += 1;
    }
    s.finish()
}

/// Criterion 10: with headline accounting the P4 sweep at k = 3 accepts a
/// selection whose rebuilt set has the wrong size; exact accounting marks
/// the same rung unreachable and the solver agrees with the oracle.
pub fn corrected_target_regression(cap: usize) -> SuiteReport {
    let mut s = Suite::new("corrected-target regression");
    let g = instances::path(4);
    let choice = HubChoice::new(&g, (1, 2), (true, false));

    match build_knapsack_instance_with_rule(&g, &choice, 3, Accounting::Headline) {
        Ok(b) => {
            s.check(!b.infeasible, || {
                "headline accounting should admit the rung".into()
            });
            let picked = solve_exact_2d(&b.instance);
            s.check(picked.is_some(), || {
                "headline instance should be feasible".into()
            });
            if let Some(picked) = picked {
                // Count what the selection leaves inside the solution.
                let selected: usize = picked
                    .iter()
                    .map(|&i| b.instance.items[i].value as usize)
                    .sum();
                let forced: usize = b.forced_out.iter().map(|&c| b.components[c].len()).sum();
                let rebuilt_size = g.n() - 1 - forced - selected;
                s.check(rebuilt_size != 3, || {
                    "headline accounting accidentally built a correct-size set".into()
                });
            }
        }
        Err(e) => s.check(false, || format!("headline build failed: {e}")),
    }

    match build_knapsack_instance(&g, &choice, 3) {
        Ok(b) => s.check(b.infeasible, || {
            "exact accounting must reject the rung".into()
        }),
        Err(e) => s.check(false, || format!("exact build failed: {e}")),
    }

    match (
        solve_h2(&g, false, cap),
        oracle::max_pds_bruteforce(&g, false, cap),
    ) {
        (Ok(fast), Ok(truth)) => {
            s.check(fast.size == truth.size && truth.size == 2, || {
                format!(
                    "P4 disagreement: solver {} oracle {}",
                    fast.size, truth.size
                )
            });
        }
        (f, t) => s.check(false, || format!("P4 errors: {f:?} / {t:?}")),
    }
    s.finish()
}

/// Everything the quick self-test level runs: the fixture-style suites.
pub fn quick_suites(cap: usize) -> Vec<SuiteReport> {
    vec![
        fixed_values(cap),
        gadget_parameter_audit(),
        corrected_target_regression(cap),
        sparse_gadget_suite(),
        dense_degen2_suite(false, cap),
    ]
}

/// The full level: quick plus the randomized agreement suites and the
/// bounded exhaustions.
pub fn full_suites(cap: usize) -> Vec<SuiteReport> {
    let mut out = quick_suites(cap);
    out.push(dense_delta6_suite(cap));
    out.push(dense_degen2_suite(true, cap));
    out.push(h2_oracle_agreement(500, cap));
    out.push(co_h2_oracle_agreement(500, cap));
    out.push(fallback_suite(1000, cap));
    out.push(verifier_invariants_suite());
    out
}

/// Connectivity expectation on constructed co-h2 solutions: failures are
/// surfaced as notes, not solver errors.
pub fn co_h2_connectivity_notes(count: u64, cap: usize) -> Vec<String> {
    let mut notes = Vec::new();
    for seed in 0..count {
        let n = 5 + (seed as usize % 12);
        let g = random_co_h2_graph_seeded(seed, n);
        if let Ok(r) = solve_co_h2(&g, false, cap) {
            if r.method == crate::oracle::SolveMethod::CoH2 {
                if let Some(w) = &r.witness {
                    if !crate::pds::is_connected_pds(&g, w) {
                        notes.push(format!("seed {seed}: constructed solution disconnected"));
                    }
                }
            }
        }
    }
    notes
}
