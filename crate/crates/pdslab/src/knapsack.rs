//! Exact-target two-dimensional 0/1 knapsack.
//!
//! Select a subset of items whose values sum to exactly the target while
//! both weight sums stay within their caps. The solver keeps, per achieved
//! value, the Pareto frontier of weight pairs instead of a dense 3-d table;
//! an unbounded cap drops its dimension from the comparison entirely.

use std::fmt;

/// A weight cap. `Unbounded` is explicit, never a sentinel integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Cap {
    Bounded(u64),
    Unbounded,
}

impl Cap {
    fn admits(&self, w: u64) -> bool {
        match *self {
            Cap::Bounded(c) => w <= c,
            Cap::Unbounded => true,
        }
    }
}

impl fmt::Display for Cap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Cap::Bounded(c) => write!(f, "{c}"),
            Cap::Unbounded => write!(f, "unbounded"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct KnapsackItem {
    pub value: u64,
    pub w1: u64,
    pub w2: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KnapsackInstance {
    pub items: Vec<KnapsackItem>,
    pub target: u64,
    pub cap1: Cap,
    pub cap2: Cap,
}

#[derive(Clone, Copy)]
struct Node {
    w1: u64,
    w2: u64,
    parent: usize,
    item: usize,
}

const NO_PARENT: usize = usize::MAX;

/// Returns the sorted indices of a subset with value sum exactly
/// `inst.target` and weight sums within both caps, or `None`. The empty
/// subset answers a zero target. Ties break toward smaller item indices.
pub fn solve_exact_2d(inst: &KnapsackInstance) -> Option<Vec<usize>> {
    let target = inst.target as usize;
    debug_assert!(inst.items.iter().all(|it| it.value >= 1));

    let mut arena: Vec<Node> = vec![Node {
        w1: 0,
        w2: 0,
        parent: NO_PARENT,
        item: usize::MAX,
    }];
    // fronts[v] = arena ids of the Pareto-minimal weight pairs reaching value v.
    let mut fronts: Vec<Vec<usize>> = vec![Vec::new(); target + 1];
    fronts[0].push(0);

    for (idx, item) in inst.items.iter().enumerate() {
        let v = item.value as usize;
        if v > target {
            continue;
        }
        // Descending value order so each item is used at most once.
        for base in (0..=target - v).rev() {
            if fronts[base].is_empty() {
                continue;
            }
            let candidates: Vec<usize> = fronts[base].clone();
            for id in candidates {
                let w1 = arena[id].w1 + item.w1;
                let w2 = arena[id].w2 + item.w2;
                if !inst.cap1.admits(w1) || !inst.cap2.admits(w2) {
                    continue;
                }
                insert_pareto(&mut arena, &mut fronts[base + v], w1, w2, id, idx);
            }
        }
    }

    let &goal = fronts[target].first()?;
    let mut picked = Vec::new();
    let mut cur = goal;
    while arena[cur].parent != NO_PARENT {
        picked.push(arena[cur].item);
        cur = arena[cur].parent;
    }
    picked.sort_unstable();
    Some(picked)
}

/// Adds `(w1, w2)` to a frontier kept sorted by `w1` ascending with `w2`
/// strictly descending. Dominated points are dropped; an exact duplicate
/// keeps the incumbent so earlier items win ties.
fn insert_pareto(
    arena: &mut Vec<Node>,
    front: &mut Vec<usize>,
    w1: u64,
    w2: u64,
    parent: usize,
    item: usize,
) {
    for &id in front.iter() {
        if arena[id].w1 <= w1 && arena[id].w2 <= w2 {
            return; // dominated (or equal): incumbent stays
        }
    }
    front.retain(|&id| !(w1 <= arena[id].w1 && w2 <= arena[id].w2));
    let id = arena.len();
    arena.push(Node {
        w1,
        w2,
        parent,
        item,
    });
    let pos = front.partition_point(|&e| (arena[e].w1, arena[e].w2) < (w1, w2));
    front.insert(pos, id);
}
