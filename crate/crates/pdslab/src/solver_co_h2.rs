//! Polynomial solvers for graphs whose complement has h-index at most 2.
//!
//! For large candidate sets the density property degenerates into a
//! domination condition on the complement: the discarded vertices must
//! dominate every non-isolated complement vertex, and the two complement
//! hubs need enough of their complement-neighbors discarded. The solver
//! sweeps the solution size downward and, per size and per choice of hubs
//! to discard, asks for a minimum set of picks meeting both conditions.
//! Pick placement inside each path or cycle is a small domination DP, and
//! the hub-coverage demands couple the components through an exact
//! min-cost table, so every rung of the sweep is decided exactly.

use crate::decompose::{decompose_degree2, AttachCase, ComponentKind, TypedPathComponent};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::oracle::{self, SolveMethod, SolveResult};
use crate::params::{h_index, select_hubs};
use crate::pds::{co_domination_check, is_connected_pds, is_pds, VertexSet};

/// Component taxonomy relative to the complement hubs: 1 = no hub contact
/// (all cycles and detached paths), 2/3 = one/both endpoints on u*,
/// 4/5 = one/both endpoints on v*, 6 = one endpoint on each.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoType {
    Type1,
    Type2,
    Type3,
    Type4,
    Type5,
    Type6,
}

impl CoType {
    fn from_case(case: AttachCase) -> CoType {
        match case {
            AttachCase::I => CoType::Type1,
            AttachCase::II => CoType::Type2,
            AttachCase::III => CoType::Type3,
            AttachCase::IV => CoType::Type4,
            AttachCase::V => CoType::Type5,
            AttachCase::VI | AttachCase::VII => CoType::Type6,
        }
    }

    pub fn number(&self) -> u8 {
        match self {
            CoType::Type1 => 1,
            CoType::Type2 => 2,
            CoType::Type3 => 3,
            CoType::Type4 => 4,
            CoType::Type5 => 5,
            CoType::Type6 => 6,
        }
    }
}

/// One path or cycle of the complement minus its hubs, typed and keyed by
/// the residue of its cardinality mod 3.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoComponent {
    pub kind: CoType,
    /// `|component| mod 3`, written `.0/.1/.2`.
    pub subtype: u8,
    /// Path or cycle order in the complement.
    pub vertices: Vec<usize>,
    pub is_cycle: bool,
    /// Endpoints adjacent to u* in the complement.
    pub u_attach: Vec<usize>,
    /// Endpoints adjacent to v* in the complement.
    pub v_attach: Vec<usize>,
}

impl CoComponent {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn label(&self) -> String {
        format!("{}.{}", self.kind.number(), self.subtype)
    }
}

#[derive(Debug, Clone)]
pub struct CoClassification {
    pub hubs: (usize, usize),
    pub components: Vec<CoComponent>,
}

fn co_component(co: &Graph, hubs: (usize, usize), c: &TypedPathComponent) -> CoComponent {
    let (u_star, v_star) = hubs;
    let ends: Vec<usize> = if c.vertices.len() == 1 {
        vec![c.vertices[0]]
    } else {
        vec![c.vertices[0], *c.vertices.last().unwrap()]
    };
    let u_attach = if c.kind == ComponentKind::Cycle {
        Vec::new()
    } else {
        ends.iter()
            .copied()
            .filter(|&e| co.has_edge(e, u_star))
            .collect()
    };
    let v_attach = if c.kind == ComponentKind::Cycle {
        Vec::new()
    } else {
        ends.iter()
            .copied()
            .filter(|&e| co.has_edge(e, v_star))
            .collect()
    };
    CoComponent {
        kind: CoType::from_case(c.attach_case),
        subtype: (c.vertices.len() % 3) as u8,
        vertices: c.vertices.clone(),
        is_cycle: c.kind == ComponentKind::Cycle,
        u_attach,
        v_attach,
    }
}

/// Complement hubs plus the typed decomposition of the complement minus
/// the hubs. Rejects inputs whose complement h-index is not exactly 2.
pub fn classify_co_components(g: &Graph) -> Result<CoClassification> {
    let co = g.complement();
    let h = h_index(&co);
    if h != 2 {
        return Err(Error::CoHIndexTooLarge { found: h, max: 2 });
    }
    let hubs = select_hubs(&co)?;
    let components = decompose_degree2(&co, hubs)?
        .iter()
        .map(|c| co_component(&co, hubs, c))
        .collect();
    Ok(CoClassification { hubs, components })
}

// ---------------------------------------------------------------------------
// Domination DP on one path or cycle of the complement.
// ---------------------------------------------------------------------------

/// Per-vertex constraint for the path DP.
#[derive(Clone, Copy, PartialEq, Eq)]
enum PickRule {
    Free,
    MustPick,
    MustSkip,
}

/// Minimum dominating picks along a path. `pre_dominated[i]` marks
/// vertices already covered from outside (a discarded hub next door).
/// Returns the pick count and the picked local indices, or `None` when the
/// constraints are unsatisfiable.
fn min_dominating_path(pre_dominated: &[bool], rule: &[PickRule]) -> Option<(usize, Vec<usize>)> {
    let len = pre_dominated.len();
    const INF: usize = usize::MAX / 2;
    // State 0: in D. State 1: out, dominated. State 2: out, waiting on the
    // right neighbor.
    let mut dp = vec![[INF; 3]; len];
    let mut parent = vec![[usize::MAX; 3]; len];
    if rule[0] != PickRule::MustSkip {
        dp[0][0] = 1;
    }
    if rule[0] != PickRule::MustPick {
        if pre_dominated[0] {
            dp[0][1] = 0;
        }
        if len > 1 {
            dp[0][2] = 0;
        }
    }
    for i in 1..len {
        for prev in 0..3 {
            if dp[i - 1][prev] >= INF {
                continue;
            }
            let base = dp[i - 1][prev];
            if rule[i] != PickRule::MustSkip {
                let cost = base + 1;
                if cost < dp[i][0] {
                    dp[i][0] = cost;
                    parent[i][0] = prev;
                }
            }
            if rule[i] != PickRule::MustPick && prev != 2 {
                let dominated_from_left = prev == 0;
                if dominated_from_left || pre_dominated[i] {
                    if base < dp[i][1] {
                        dp[i][1] = base;
                        parent[i][1] = prev;
                    }
                } else if i + 1 < len && base < dp[i][2] {
                    dp[i][2] = base;
                    parent[i][2] = prev;
                }
            }
        }
    }
    let last = len - 1;
    let mut best_state = usize::MAX;
    let mut best = INF;
    for state in [0, 1] {
        if dp[last][state] < best {
            best = dp[last][state];
            best_state = state;
        }
    }
    if best >= INF {
        return None;
    }
    let mut picks = Vec::new();
    let mut state = best_state;
    for i in (0..len).rev() {
        if state == 0 {
            picks.push(i);
        }
        if i > 0 {
            state = parent[i][state];
        }
    }
    picks.reverse();
    Some((best, picks))
}

/// Minimum dominating picks around a cycle, by splitting on the status of
/// the first vertex.
fn min_dominating_cycle(len: usize) -> (usize, Vec<usize>) {
    debug_assert!(len >= 3);
    let mut best: Option<(usize, Vec<usize>)> = None;
    // v0 in D: its two neighbors are covered from outside the path view.
    {
        let mut pre = vec![false; len];
        pre[1] = true;
        pre[len - 1] = true;
        let mut rule = vec![PickRule::Free; len];
        rule[0] = PickRule::MustPick;
        if let Some(sol) = min_dominating_path(&pre, &rule) {
            best = pick_better(best, sol);
        }
    }
    // v0 out, dominated by v1 (or by v_{len-1}, symmetric).
    for in_d in [1, len - 1] {
        let mut pre = vec![false; len];
        pre[0] = true;
        if in_d == len - 1 {
            pre[len - 2] = true;
        } else {
            pre[2.min(len - 1)] = true;
        }
        let mut rule = vec![PickRule::Free; len];
        rule[0] = PickRule::MustSkip;
        rule[in_d] = PickRule::MustPick;
        if let Some(sol) = min_dominating_path(&pre, &rule) {
            best = pick_better(best, sol);
        }
    }
    best.expect("a cycle always has a dominating set")
}

fn pick_better(
    best: Option<(usize, Vec<usize>)>,
    cand: (usize, Vec<usize>),
) -> Option<(usize, Vec<usize>)> {
    match best {
        Some(b) if b.0 <= cand.0 => Some(b),
        _ => Some(cand),
    }
}

// ---------------------------------------------------------------------------
// Per-component pick options and the coverage table across components.
// ---------------------------------------------------------------------------

/// One way to place picks inside a single component: how many picks it
/// costs and how many attach vertices of each hub it puts into the
/// discarded set.
#[derive(Debug, Clone)]
struct PickOption {
    picks: Vec<usize>,
    x_u: usize,
    x_v: usize,
}

fn component_options(
    co: &Graph,
    hubs: (usize, usize),
    forced: (bool, bool),
    comp: &CoComponent,
) -> Vec<PickOption> {
    let len = comp.len();
    let verts = &comp.vertices;
    let (u_star, v_star) = hubs;

    if comp.is_cycle {
        let (_, local) = min_dominating_cycle(len);
        return vec![PickOption {
            picks: local.iter().map(|&i| verts[i]).collect(),
            x_u: 0,
            x_v: 0,
        }];
    }

    // Complement-isolated vertices impose nothing and are never picked.
    if len == 1 && comp.u_attach.is_empty() && comp.v_attach.is_empty() && co.degree(verts[0]) == 0
    {
        return vec![PickOption {
            picks: Vec::new(),
            x_u: 0,
            x_v: 0,
        }];
    }

    let pre: Vec<bool> = verts
        .iter()
        .map(|&v| (forced.0 && co.has_edge(v, u_star)) || (forced.1 && co.has_edge(v, v_star)))
        .collect();

    // Attachment endpoints (local indices) paired with which hubs they touch.
    let mut attach_locals: Vec<usize> = Vec::new();
    for (i, &v) in verts.iter().enumerate() {
        if (i == 0 || i == len - 1) && (co.has_edge(v, u_star) || co.has_edge(v, v_star)) {
            attach_locals.push(i);
        }
    }

    let mut options: Vec<PickOption> = Vec::new();
    for mask in 0..(1u32 << attach_locals.len()) {
        let mut rule = vec![PickRule::Free; len];
        for (bit, &local) in attach_locals.iter().enumerate() {
            rule[local] = if mask >> bit & 1 == 1 {
                PickRule::MustPick
            } else {
                PickRule::MustSkip
            };
        }
        if let Some((_, local_picks)) = min_dominating_path(&pre, &rule) {
            let picks: Vec<usize> = local_picks.iter().map(|&i| verts[i]).collect();
            let x_u = picks.iter().filter(|&&v| co.has_edge(v, u_star)).count();
            let x_v = picks.iter().filter(|&&v| co.has_edge(v, v_star)).count();
            options.push(PickOption { picks, x_u, x_v });
        }
    }
    // Drop dominated options: higher cost with no extra coverage.
    options.sort_by_key(|o| (o.picks.len(), std::cmp::Reverse(o.x_u + o.x_v)));
    let mut kept: Vec<PickOption> = Vec::new();
    for o in options {
        if kept
            .iter()
            .any(|k| k.picks.len() <= o.picks.len() && k.x_u >= o.x_u && k.x_v >= o.x_v)
        {
            continue;
        }
        kept.push(o);
    }
    kept
}

/// Minimum total picks over all components meeting the two coverage
/// demands within `budget`, or `None`. Returns the union of the chosen
/// pick sets.
fn cover_components(
    options: &[Vec<PickOption>],
    demand_u: usize,
    demand_v: usize,
    budget: usize,
) -> Option<Vec<usize>> {
    const INF: usize = usize::MAX / 2;
    let du = demand_u;
    let dv = demand_v;
    let cells = (du + 1) * (dv + 1);
    let idx = |a: usize, b: usize| a * (dv + 1) + b;
    let mut dp = vec![INF; cells];
    dp[idx(0, 0)] = 0;
    // Per component: (option index, predecessor cell) for each reached cell.
    let mut trace: Vec<Vec<(usize, usize)>> = Vec::with_capacity(options.len());
    for opts in options {
        let mut next = vec![INF; cells];
        let mut step = vec![(usize::MAX, usize::MAX); cells];
        for a in 0..=du {
            for b in 0..=dv {
                let cur = dp[idx(a, b)];
                if cur >= INF {
                    continue;
                }
                for (oi, o) in opts.iter().enumerate() {
                    let na = (a + o.x_u).min(du);
                    let nb = (b + o.x_v).min(dv);
                    let cost = cur + o.picks.len();
                    if cost < next[idx(na, nb)] {
                        next[idx(na, nb)] = cost;
                        step[idx(na, nb)] = (oi, idx(a, b));
                    }
                }
            }
        }
        dp = next;
        trace.push(step);
    }
    if dp[idx(du, dv)] > budget {
        return None;
    }
    let mut picks = Vec::new();
    let mut cell = idx(du, dv);
    for ci in (0..options.len()).rev() {
        let (oi, prev) = trace[ci][cell];
        picks.extend_from_slice(&options[ci][oi].picks);
        cell = prev;
    }
    picks.sort_unstable();
    Some(picks)
}

// ---------------------------------------------------------------------------
// Candidate generation following the per-type placement rules.
// ---------------------------------------------------------------------------

/// A proposed discard set: the complement of a solution candidate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DominatorCandidate {
    pub d_set: VertexSet,
    pub forced_hubs: (bool, bool),
    /// Per-component choice log.
    pub provenance: Vec<String>,
}

/// Emits the discard-set candidates the per-type placement rules generate
/// at one rung of the hub ladder: the canonical minimum picks per
/// component, single-component variants that anchor an attachment vertex
/// instead, and the full sweep over how many type-6.2 components anchor
/// on the u* side. `co` is the complement graph the classification was
/// derived from. Candidates that fail to dominate some non-isolated
/// complement vertex are dropped.
pub fn candidate_dominators(
    co: &Graph,
    cls: &CoClassification,
    forced: (bool, bool),
) -> Vec<DominatorCandidate> {
    let hubs = cls.hubs;
    let comps = &cls.components;
    let all_options: Vec<Vec<PickOption>> = comps
        .iter()
        .map(|c| component_options(co, hubs, forced, c))
        .collect();

    // Canonical choice: fewest picks, then most hub coverage, matching the
    // option ordering; anchored choice: fewest picks among those that put
    // an attachment vertex into the set.
    let canonical: Vec<usize> = all_options.iter().map(|_| 0).collect();
    let assemble = |choice: &[usize], note: &str| -> Option<DominatorCandidate> {
        let mut members = Vec::new();
        let mut provenance = Vec::new();
        if forced.0 {
            members.push(hubs.0);
        }
        if forced.1 {
            members.push(hubs.1);
        }
        for (ci, (&oi, opts)) in choice.iter().zip(&all_options).enumerate() {
            let o = opts.get(oi)?;
            members.extend_from_slice(&o.picks);
            provenance.push(format!(
                "component {ci} ({}): picks {:?} ({note})",
                comps[ci].label(),
                o.picks
            ));
        }
        let d_set = VertexSet::new(members);
        dominates_non_isolated(co, &d_set).then_some(DominatorCandidate {
            d_set,
            forced_hubs: forced,
            provenance,
        })
    };

    let mut out = Vec::new();
    out.extend(assemble(&canonical, "canonical"));

    // One-component variants: swap a single component to each alternative.
    for ci in 0..comps.len() {
        for oi in 1..all_options[ci].len() {
            let mut choice = canonical.clone();
            choice[ci] = oi;
            out.extend(assemble(&choice, "anchored"));
        }
    }

    // Type 6.2 sweep: i components anchored on the u* side, the rest on v*.
    let six_two: Vec<usize> = comps
        .iter()
        .enumerate()
        .filter(|(_, c)| c.kind == CoType::Type6 && c.subtype == 2)
        .map(|(i, _)| i)
        .collect();
    if six_two.len() >= 2 {
        let side_option = |ci: usize, toward_u: bool| -> Option<usize> {
            all_options[ci]
                .iter()
                .position(|o| if toward_u { o.x_u > 0 } else { o.x_v > 0 })
        };
        for i in 0..=six_two.len() {
            let mut choice = canonical.clone();
            let mut ok = true;
            for (pos, &ci) in six_two.iter().enumerate() {
                match side_option(ci, pos < i) {
                    Some(oi) => choice[ci] = oi,
                    None => ok = false,
                }
            }
            if ok {
                out.extend(assemble(&choice, "6.2 sweep"));
            }
        }
    }

    out.sort_by(|a, b| (a.d_set.size(), &a.d_set).cmp(&(b.d_set.size(), &b.d_set)));
    out.dedup_by(|a, b| a.d_set == b.d_set);
    out
}

/// Whether `d` dominates every non-isolated vertex of `co` outside `d`.
pub fn dominates_non_isolated(co: &Graph, d: &VertexSet) -> bool {
    let inside = d.bitmap(co.n());
    co.vertices()
        .all(|v| inside[v] || co.degree(v) == 0 || co.neighbors(v).iter().any(|&w| inside[w]))
}

// ---------------------------------------------------------------------------
// Solvers.
// ---------------------------------------------------------------------------

/// Maximum PDS when the complement has h <= 1: keep every universal
/// vertex, one endpoint of each complement-matching edge and all
/// complement-star leaves. A complete graph keeps any n-1 vertices.
pub fn solve_co_h1(g: &Graph) -> Result<SolveResult> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let co = g.complement();
    let h = h_index(&co);
    if h > 1 {
        return Err(Error::CoHIndexTooLarge { found: h, max: 1 });
    }

    let s: VertexSet = if h == 0 {
        (0..n - 1).collect()
    } else {
        let center = co
            .vertices()
            .max_by_key(|&v| (co.degree(v), std::cmp::Reverse(v)))
            .unwrap();
        let mut star = vec![false; n];
        star[center] = true;
        for &w in co.neighbors(center) {
            star[w] = true;
        }
        let mut members: Vec<usize> = co.neighbors(center).to_vec();
        // Complement-isolated vertices are universal in g: always kept.
        members.extend(co.vertices().filter(|&v| co.degree(v) == 0));
        // One endpoint per complement-matching edge.
        members.extend(
            co.edges()
                .into_iter()
                .filter(|&(a, b)| !star[a] && !star[b])
                .map(|(a, _)| a),
        );
        members.into_iter().collect()
    };
    let verified = is_pds(g, &s);
    debug_assert!(verified);
    Ok(SolveResult {
        size: s.size(),
        witness: Some(s),
        method: SolveMethod::CoH1,
        verified,
    })
}

const RUNG_ORDER: [(bool, bool); 4] = [(false, false), (true, false), (false, true), (true, true)];

/// Maximum (connected) PDS when the complement has h <= 2.
pub fn solve_co_h2(g: &Graph, connected: bool, cap: usize) -> Result<SolveResult> {
    let n = g.n();
    if n < 3 {
        return Err(Error::TooFewVertices { n, min: 3 });
    }
    let co = g.complement();
    let h = h_index(&co);
    if h > 2 {
        return Err(Error::CoHIndexTooLarge { found: h, max: 2 });
    }
    if h <= 1 {
        let r = solve_co_h1(g)?;
        if !connected {
            return Ok(r);
        }
        let w = r.witness.as_ref().unwrap();
        if is_connected_pds(g, w) {
            return Ok(r);
        }
        // The construction is expected to be connected; fall back to
        // bounded exhaustion rather than trust that expectation.
        if n <= cap {
            if let Some(s) = oracle::largest_pds_with_size_in(g, 2, n - 1, true, cap)? {
                return Ok(SolveResult {
                    size: s.size(),
                    witness: Some(s),
                    method: SolveMethod::Brute,
                    verified: true,
                });
            }
            return Ok(SolveResult::none(SolveMethod::CoH1));
        }
        return Err(Error::SearchFailed(
            "connected answer undetermined above the exhaustion cap".into(),
        ));
    }

    let cls = classify_co_components(g)?;
    let (u_star, v_star) = cls.hubs;
    let (d_u, d_v) = (co.degree(u_star), co.degree(v_star));
    let hub_co_edge = co.has_edge(u_star, v_star);
    let lo = n.div_ceil(2) + 1;

    // Pick options depend on the rung, not on k.
    let options_by_rung: Vec<Vec<Vec<PickOption>>> = RUNG_ORDER
        .iter()
        .map(|&forced| {
            cls.components
                .iter()
                .map(|c| component_options(&co, cls.hubs, forced, c))
                .collect()
        })
        .collect();

    for k in (lo..n).rev() {
        let t = n - k;
        let mut saw_disconnected = false;
        for (ri, &forced) in RUNG_ORDER.iter().enumerate() {
            let forced_count = forced.0 as usize + forced.1 as usize;
            if forced_count > t {
                continue;
            }
            let budget = t - forced_count;
            // An included hub needs ceil(d * t / (n-1)) of its
            // complement-neighbors discarded; a forced adjacent hub
            // already contributes one.
            let need = |in_d: bool, d: usize| -> usize {
                if in_d || d == 0 {
                    0
                } else {
                    (d * t).div_ceil(n - 1)
                }
            };
            let base_u = (forced.1 && hub_co_edge) as usize;
            let base_v = (forced.0 && hub_co_edge) as usize;
            let demand_u = need(forced.0, d_u).saturating_sub(base_u);
            let demand_v = need(forced.1, d_v).saturating_sub(base_v);
            // Each picked vertex covers each demand at most once, so a
            // demand beyond the budget is unreachable.
            if demand_u > budget || demand_v > budget {
                continue;
            }

            let Some(picks) = cover_components(&options_by_rung[ri], demand_u, demand_v, budget)
            else {
                continue;
            };
            let d_set = pad_discards(&co, cls.hubs, forced, picks, t);
            let s = complement_set(n, &d_set);
            debug_assert!(matches!(co_domination_check(g, &s), Ok(true)));
            if !is_pds(g, &s) {
                debug_assert!(
                    false,
                    "discard-set construction produced a non-PDS at k={k}"
                );
                continue;
            }
            if connected && !is_connected_pds(g, &s) {
                saw_disconnected = true;
                // Same rung, alternative placements from the rule-based
                // generator before giving up on this size.
                for cand in candidate_dominators(&co, &cls, forced) {
                    if cand.d_set.size() > t {
                        continue;
                    }
                    let padded =
                        pad_discards(&co, cls.hubs, forced, cand.d_set.members().to_vec(), t);
                    let alt = complement_set(n, &padded);
                    if is_pds(g, &alt) && is_connected_pds(g, &alt) {
                        return Ok(SolveResult {
                            size: alt.size(),
                            witness: Some(alt),
                            method: SolveMethod::CoH2,
                            verified: true,
                        });
                    }
                }
                continue;
            }
            return Ok(SolveResult {
                size: s.size(),
                witness: Some(s),
                method: SolveMethod::CoH2,
                verified: true,
            });
        }
        if connected && saw_disconnected && n <= cap {
            // A PDS of this size exists but the structured discards were
            // disconnected; settle the size exactly before shrinking.
            if let Some(s) = oracle::largest_pds_with_size_in(g, k, k, true, cap)? {
                return Ok(SolveResult {
                    size: s.size(),
                    witness: Some(s),
                    method: SolveMethod::Brute,
                    verified: true,
                });
            }
        }
    }

    let r = crate::solver_h2::fallback_half_pds(g, cap)?;
    if !connected {
        return Ok(r);
    }
    if let Some(w) = &r.witness {
        if is_connected_pds(g, w) {
            return Ok(r);
        }
    }
    if n <= cap {
        if let Some(s) = oracle::largest_pds_with_size_in(g, 2, n.div_ceil(2), true, cap)? {
            return Ok(SolveResult {
                size: s.size(),
                witness: Some(s),
                method: SolveMethod::Brute,
                verified: true,
            });
        }
        return Ok(SolveResult::none(SolveMethod::CoH2));
    }
    Err(Error::SearchFailed(
        "connected answer undetermined above the exhaustion cap".into(),
    ))
}

/// Extends the picks with the forced hubs and pads the set to exactly
/// `t` vertices, preferring non-isolated complement vertices.
fn pad_discards(
    co: &Graph,
    hubs: (usize, usize),
    forced: (bool, bool),
    picks: Vec<usize>,
    t: usize,
) -> VertexSet {
    let n = co.n();
    let mut members = picks;
    if forced.0 {
        members.push(hubs.0);
    }
    if forced.1 {
        members.push(hubs.1);
    }
    let mut inside = vec![false; n];
    for &v in &members {
        inside[v] = true;
    }
    let mut pool: Vec<usize> = (0..n)
        .filter(|&v| !inside[v] && v != hubs.0 && v != hubs.1)
        .collect();
    pool.sort_by_key(|&v| (co.degree(v) == 0, v));
    for v in pool {
        if members.len() >= t {
            break;
        }
        members.push(v);
    }
    debug_assert_eq!(members.len(), t);
    VertexSet::new(members)
}

fn complement_set(n: usize, d: &VertexSet) -> VertexSet {
    d.complement_in(n)
}


#[cfg(test)]
mod tests {
    use super::*;
    use crate::generate::random_co_h2_graph_seeded;
    use crate::instances;
    use crate::oracle::{max_pds_bruteforce, DEFAULT_CAP};

    #[test]
    fn co_h1_examples() {
        let r = solve_co_h1(&instances::complete_minus_perfect_matching(6)).unwrap();
        assert_eq!(r.size, 3);
        assert!(r.verified);

        let co_star = instances::star(3).complement();
        assert_eq!(solve_co_h1(&co_star).unwrap().size, 3);

        assert_eq!(solve_co_h1(&instances::complete(5)).unwrap().size, 4);
    }

    #[test]
    fn co_h1_rejects_co_h2_inputs() {
        let g = instances::co_p4_plus_isolated();
        assert!(solve_co_h1(&g).is_err());
    }

    #[test]
    fn classify_co_p4_plus_isolated() {
        let g = instances::co_p4_plus_isolated();
        let cls = classify_co_components(&g).unwrap();
        assert_eq!(cls.hubs, (1, 2));
        let labels: Vec<(Vec<usize>, String)> = cls
            .components
            .iter()
            .map(|c| (c.vertices.clone(), c.label()))
            .collect();
        assert_eq!(
            labels,
            vec![
                (vec![0], "2.1".to_string()),
                (vec![3], "4.1".to_string()),
                (vec![4], "1.1".to_string()),
            ]
        );
    }

    #[test]
    fn classify_complement_of_two_triangles() {
        let g = instances::disjoint_triangles(2).complement();
        let cls = classify_co_components(&g).unwrap();
        assert_eq!(cls.hubs, (0, 1));
        let labels: Vec<String> = cls.components.iter().map(|c| c.label()).collect();
        assert_eq!(labels, vec!["6.1".to_string(), "1.0".to_string()]);
        assert!(cls.components[1].is_cycle);
    }

    #[test]
    fn candidates_on_co_p4_plus_isolated_are_too_large() {
        // Every rule-based discard set needs a dominator on each side of
        // the complement path, so no candidate leaves ceil(5/2)+1 vertices.
        let g = instances::co_p4_plus_isolated();
        let co = g.complement();
        let cls = classify_co_components(&g).unwrap();
        let cands = candidate_dominators(&co, &cls, (false, false));
        assert!(!cands.is_empty());
        let min_d = cands.iter().map(|c| c.d_set.size()).min().unwrap();
        assert_eq!(min_d, 2);
        assert!(5 - min_d < 5usize.div_ceil(2) + 1);
    }

    #[test]
    fn classify_cycle_beside_a_bridging_path() {
        // Complement: 7-cycle, a 3-path joining the two hubs, and pendant
        // singletons raising the hubs to degree 3.
        let mut edges = vec![(0, 2), (2, 3), (3, 4), (1, 4)];
        edges.extend([(0, 12), (0, 13), (1, 14), (1, 15)]);
        for i in 0..7 {
            edges.push((5 + i, 5 + (i + 1) % 7));
        }
        let co = Graph::from_edges(16, &edges).unwrap();
        let g = co.complement();
        let cls = classify_co_components(&g).unwrap();
        assert_eq!(cls.hubs, (0, 1));
        let mut labels: Vec<String> = cls.components.iter().map(|c| c.label()).collect();
        labels.sort();
        assert_eq!(labels, vec!["1.1", "2.1", "2.1", "4.1", "4.1", "6.0"]);
        assert!(cls.components.iter().any(|c| c.is_cycle && c.len() == 7));
    }

    #[test]
    fn candidates_on_two_triangles_with_forced_hub() {
        let g = instances::disjoint_triangles(2).complement();
        let co = g.complement();
        let cls = classify_co_components(&g).unwrap();
        let cands = candidate_dominators(&co, &cls, (true, false));
        let best = &cands[0];
        assert_eq!(best.d_set.size(), 2);
        assert!(best.d_set.contains(cls.hubs.0));
        assert!(best.d_set.iter().any(|v| (3..6).contains(&v)));
    }

    #[test]
    fn candidate_for_a_lone_triangle_cycle() {
        // One 3-cycle beside two degree-3 hubs needs a single pick.
        let co = Graph::from_edges(
            7,
            &[
                (0, 1),
                (0, 2),
                (0, 3),
                (1, 2),
                (1, 3),
                (4, 5),
                (5, 6),
                (4, 6),
            ],
        )
        .unwrap();
        let g = co.complement();
        let cls = classify_co_components(&g).unwrap();
        let cycle = cls
            .components
            .iter()
            .find(|c| c.is_cycle)
            .expect("triangle component");
        assert_eq!(cycle.label(), "1.0");
        let opts = component_options(&co, cls.hubs, (false, false), cycle);
        assert_eq!(opts.len(), 1);
        assert_eq!(opts[0].picks.len(), 1);
    }

    #[test]
    fn fixed_co_h2_answers() {
        let g = instances::co_p4_plus_isolated();
        let r = solve_co_h2(&g, false, DEFAULT_CAP).unwrap();
        assert_eq!(r.size, 3);
        assert_eq!(r.method, SolveMethod::Fallback);

        let co_p5 = instances::path(5).complement();
        assert_eq!(solve_co_h2(&co_p5, false, DEFAULT_CAP).unwrap().size, 3);

        let k33 = instances::disjoint_triangles(2).complement();
        let r = solve_co_h2(&k33, false, DEFAULT_CAP).unwrap();
        assert_eq!(r.size, 4);
        assert_eq!(r.method, SolveMethod::CoH2);
    }

    #[test]
    fn classification_matches_recomputed_adjacency() {
        // Type and subtype agree with the complement adjacency and the
        // component cardinality on random inputs.
        for seed in 0..200u64 {
            let n = 5 + (seed as usize % 10);
            let g = random_co_h2_graph_seeded(seed, n);
            let co = g.complement();
            if crate::params::h_index(&co) != 2 {
                continue;
            }
            let cls = classify_co_components(&g).unwrap();
            let (u_star, v_star) = cls.hubs;
            for c in &cls.components {
                assert_eq!(c.subtype as usize, c.len() % 3, "seed {seed}");
                let ends: Vec<usize> = if c.len() == 1 {
                    vec![c.vertices[0]]
                } else {
                    vec![c.vertices[0], *c.vertices.last().unwrap()]
                };
                let to_u = ends.iter().filter(|&&e| co.has_edge(e, u_star)).count();
                let to_v = ends.iter().filter(|&&e| co.has_edge(e, v_star)).count();
                if c.is_cycle {
                    assert_eq!(c.kind, CoType::Type1);
                    assert_eq!((to_u, to_v), (0, 0), "cycles never touch hubs, seed {seed}");
                    continue;
                }
                let expected = match (to_u, to_v) {
                    (0, 0) => CoType::Type1,
                    (1, 0) => CoType::Type2,
                    (2, 0) => CoType::Type3,
                    (0, 1) => CoType::Type4,
                    (0, 2) => CoType::Type5,
                    _ => CoType::Type6,
                };
                assert_eq!(c.kind, expected, "seed {seed} comp {:?}", c.vertices);
                assert_eq!(c.u_attach.len(), to_u, "seed {seed}");
                assert_eq!(c.v_attach.len(), to_v, "seed {seed}");
            }
        }
    }

    #[test]
    fn candidate_discards_dominate() {
        for seed in 0..120u64 {
            let n = 5 + (seed as usize % 10);
            let g = random_co_h2_graph_seeded(seed, n);
            let co = g.complement();
            if crate::params::h_index(&co) != 2 {
                continue;
            }
            let cls = classify_co_components(&g).unwrap();
            for forced in RUNG_ORDER {
                for cand in candidate_dominators(&co, &cls, forced) {
                    assert!(
                        dominates_non_isolated(&co, &cand.d_set),
                        "seed {seed} forced {forced:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_agreement_smoke() {
        for seed in 0..60u64 {
            let n = 5 + (seed as usize % 9);
            let g = random_co_h2_graph_seeded(seed, n);
            for connected in [false, true] {
                let fast = solve_co_h2(&g, connected, DEFAULT_CAP).unwrap();
                let truth = max_pds_bruteforce(&g, connected, DEFAULT_CAP).unwrap();
                assert_eq!(
                    fast.size, truth.size,
                    "seed {seed} connected {connected} {g:?}"
                );
            }
        }
    }

    #[test]
    fn solver_is_deterministic() {
        for seed in [5u64, 23, 71] {
            let g = random_co_h2_graph_seeded(seed, 12);
            for connected in [false, true] {
                let a = solve_co_h2(&g, connected, DEFAULT_CAP).unwrap();
                let b = solve_co_h2(&g, connected, DEFAULT_CAP).unwrap();
                assert_eq!(a, b);
            }
        }
    }

    #[test]
    fn solutions_stay_connected_in_g() {
        // The structured discard sets are expected to induce connected
        // solutions; surface any counterexample to that expectation.
        for seed in 0..120u64 {
            let n = 5 + (seed as usize % 10);
            let g = random_co_h2_graph_seeded(seed, n);
            let r = solve_co_h2(&g, false, DEFAULT_CAP).unwrap();
            if let Some(w) = &r.witness {
                if r.method == SolveMethod::CoH2 && !is_connected_pds(&g, w) {
                    eprintln!("connectivity expectation fails at seed {seed}: {w:?}");
                }
            }
        }
    }
}
