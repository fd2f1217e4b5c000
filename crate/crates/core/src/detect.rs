//! Exact containment tests for paths, stars, linear forests, quasars,
//! cycles and wheels.
//!
//! The searches are exhaustive. They only prune branches that are provably
//! redundant: vertex-count bounds, memoized failures, and twin symmetry
//! (two unused vertices with the same neighbourhood among the unused
//! vertices lead to isomorphic subproblems, so only one is tried).

use std::collections::HashSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::forest::LinearForest;
use crate::graph::{bit, Bits, SmallGraph};

/// Components up to this size get the exact subset dynamic program.
pub const DP_COMPONENT_LIMIT: usize = 24;

/// A pattern family whose containment can be decided exactly.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Pattern {
    /// `P_n`, a path on `n` vertices.
    Path(u32),
    /// `K_{1,m}`.
    Star(u32),
    /// Vertex-disjoint paths of the given orders (any orders >= 1).
    Forest(Vec<u32>),
    /// `K_1 ∨ F`.
    Quasar(LinearForest),
    /// `C_m`.
    Cycle(u32),
    /// `W_m`, a hub joined to `C_m`.
    Wheel(u32),
}

impl Pattern {
    /// Number of vertices in the pattern graph.
    pub fn order(&self) -> u64 {
        match self {
            Pattern::Path(n) | Pattern::Cycle(n) => u64::from(*n),
            Pattern::Star(m) | Pattern::Wheel(m) => u64::from(*m) + 1,
            Pattern::Forest(orders) => orders.iter().map(|&p| u64::from(p)).sum(),
            Pattern::Quasar(f) => f.total_order() + 1,
        }
    }

    /// Whether the parameters describe a real graph of this family.
    pub fn is_valid(&self) -> bool {
        match self {
            Pattern::Path(n) | Pattern::Star(n) => *n >= 1,
            Pattern::Forest(orders) => !orders.is_empty() && orders.iter().all(|&p| p >= 1),
            Pattern::Quasar(_) => true,
            Pattern::Cycle(m) | Pattern::Wheel(m) => *m >= 3,
        }
    }

    pub fn is_contained_in(&self, g: &SmallGraph) -> bool {
        match self {
            Pattern::Path(n) => contains_path(g, *n as usize),
            Pattern::Star(m) => contains_star(g, *m as usize),
            Pattern::Forest(orders) => {
                let mut sorted = orders.clone();
                sorted.sort_unstable_by(|a, b| b.cmp(a));
                linear_forest_embeds(g, &sorted)
            }
            Pattern::Quasar(f) => contains_quasar(g, f),
            Pattern::Cycle(m) => contains_cycle(g, *m as usize),
            Pattern::Wheel(m) => contains_wheel(g, *m as usize),
        }
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Pattern::Path(n) => write!(f, "path({n})"),
            Pattern::Star(m) => write!(f, "star({m})"),
            Pattern::Forest(orders) => {
                let parts: Vec<String> = orders.iter().map(u32::to_string).collect();
                write!(f, "forest({})", parts.join(","))
            }
            Pattern::Quasar(forest) => write!(f, "quasar({forest})"),
            Pattern::Cycle(m) => write!(f, "cycle({m})"),
            Pattern::Wheel(m) => write!(f, "wheel({m})"),
        }
    }
}

/// Whether some vertex in `tried` is a twin of `v` relative to `free`.
#[inline]
fn has_twin_in(g: &SmallGraph, v: usize, tried: u64, free: u64) -> bool {
    let nv = g.neighbors(v);
    Bits(tried).any(|t| (nv ^ g.neighbors(t)) & free & !(bit(v) | bit(t)) == 0)
}

/// Order of a longest path in `g`; 0 for the empty graph.
pub fn longest_path_order(g: &SmallGraph) -> usize {
    g.components()
        .into_iter()
        .map(|c| longest_in_component(g, c))
        .max()
        .unwrap_or(0)
}

fn longest_in_component(g: &SmallGraph, comp: u64) -> usize {
    let k = comp.count_ones() as usize;
    if k <= 2 || Bits(comp).all(|v| g.neighbors(v) & comp == comp & !bit(v)) {
        return k;
    }
    if k <= DP_COMPONENT_LIMIT {
        longest_by_subset_dp(g, comp)
    } else {
        longest_by_search(g, comp)
    }
}

/// `reach[mask]` holds the endpoints `v` for which some path covers exactly
/// `mask` and ends at `v`.
fn longest_by_subset_dp(g: &SmallGraph, comp: u64) -> usize {
    let verts: Vec<usize> = Bits(comp).collect();
    let k = verts.len();
    let local: Vec<u32> = verts
        .iter()
        .map(|&v| {
            verts
                .iter()
                .enumerate()
                .filter(|&(_, &w)| g.has_edge(v, w))
                .fold(0u32, |acc, (j, _)| acc | (1 << j))
        })
        .collect();
    let full = (1usize << k) - 1;
    let mut ends = vec![0u32; 1 << k];
    for i in 0..k {
        ends[1 << i] = 1 << i;
    }
    let mut best = 1;
    for mask in 1..=full {
        let e = ends[mask];
        if e == 0 {
            continue;
        }
        best = best.max(mask.count_ones() as usize);
        if best == k {
            break;
        }
        for v in Bits(u64::from(e)) {
            for w in Bits(u64::from(local[v] & !(mask as u32))) {
                ends[mask | (1 << w)] |= 1 << w;
            }
        }
    }
    best
}

fn longest_by_search(g: &SmallGraph, comp: u64) -> usize {
    // Grow the target order until the exact search fails.
    let mut best = 2;
    while best < comp.count_ones() as usize && {
        let mut e = Embedder::new(g, &[best as u32 + 1]);
        e.place(comp, 0)
    } {
        best += 1;
    }
    best
}

/// Whether `g` has a path on `n` vertices. Stops at the first one found.
pub fn contains_path(g: &SmallGraph, n: usize) -> bool {
    match n {
        0 => true,
        1 => g.order() >= 1,
        2 => g.edge_count() > 0,
        _ if n > g.order() => false,
        _ => {
            let big = g
                .components()
                .into_iter()
                .filter(|c| c.count_ones() as usize >= n)
                .fold(0, |acc, c| acc | c);
            big != 0 && Embedder::new(g, &[n as u32]).place(big, 0)
        }
    }
}

/// Whether some vertex has degree at least `m`.
pub fn contains_star(g: &SmallGraph, m: usize) -> bool {
    if m == 0 {
        return g.order() >= 1;
    }
    g.max_degree() >= m
}

/// Whether `g` has vertex-disjoint paths with exactly the given orders.
pub fn linear_forest_embeds(g: &SmallGraph, orders: &[u32]) -> bool {
    linear_forest_embeds_within(g, g.vertices(), orders)
}

/// [`linear_forest_embeds`] on the subgraph induced by `allowed`.
pub fn linear_forest_embeds_within(g: &SmallGraph, allowed: u64, orders: &[u32]) -> bool {
    let allowed = allowed & g.vertices();
    let demand: u64 = orders.iter().map(|&p| u64::from(p)).sum();
    if demand > u64::from(allowed.count_ones()) {
        return false;
    }
    Embedder::new(g, orders).place(allowed, 0)
}

/// Whether `g` contains `K_1 ∨ F`: some vertex whose neighbourhood holds
/// the forest `F`.
pub fn contains_quasar(g: &SmallGraph, forest: &LinearForest) -> bool {
    let m = forest.total_order() as u32;
    (0..g.order()).any(|v| {
        let nbrs = g.neighbors(v);
        nbrs.count_ones() >= m && linear_forest_embeds_within(g, nbrs, forest.orders())
    })
}

/// Whether `g` has a cycle of length exactly `len` (`len >= 3`).
pub fn contains_cycle(g: &SmallGraph, len: usize) -> bool {
    contains_cycle_within(g, g.vertices(), len)
}

fn contains_cycle_within(g: &SmallGraph, allowed: u64, len: usize) -> bool {
    if len < 3 || len > allowed.count_ones() as usize {
        return false;
    }
    // Root every cycle at its least vertex.
    let mut rest = allowed;
    while rest != 0 {
        let s = rest.trailing_zeros() as usize;
        rest &= !bit(s);
        if cycle_from(g, s, s, rest, len - 1) {
            return true;
        }
    }
    false
}

fn cycle_from(g: &SmallGraph, root: usize, last: usize, free: u64, remaining: usize) -> bool {
    if remaining == 0 {
        return g.has_edge(last, root);
    }
    // The closing vertex must see the root.
    if remaining == 1 {
        return g.neighbors(last) & free & g.neighbors(root) != 0;
    }
    if (g.reach(last, free | bit(last)).count_ones() as usize) <= remaining {
        return false;
    }
    Bits(g.neighbors(last) & free).any(|w| cycle_from(g, root, w, free & !bit(w), remaining - 1))
}

/// Whether `g` contains the wheel `W_rim`.
pub fn contains_wheel(g: &SmallGraph, rim: usize) -> bool {
    (0..g.order()).any(|v| {
        let nbrs = g.neighbors(v);
        nbrs.count_ones() as usize >= rim && contains_cycle_within(g, nbrs, rim)
    })
}

/// Backtracking placement of vertex-disjoint paths, longest first.
struct Embedder<'a> {
    g: &'a SmallGraph,
    /// Orders >= 2, descending.
    paths: Vec<u32>,
    /// Number of order-1 components, matched by counting at the end.
    singles: u32,
    /// `demand[i]`: vertices still needed from path `i` on, singles included.
    demand: Vec<u32>,
    failed: HashSet<(u64, usize)>,
}

impl<'a> Embedder<'a> {
    fn new(g: &'a SmallGraph, orders: &[u32]) -> Self {
        let mut paths: Vec<u32> = orders.iter().copied().filter(|&p| p >= 2).collect();
        paths.sort_unstable_by(|a, b| b.cmp(a));
        let singles = orders.iter().filter(|&&p| p == 1).count() as u32;
        let mut demand = vec![singles; paths.len() + 1];
        for i in (0..paths.len()).rev() {
            demand[i] = demand[i + 1] + paths[i];
        }
        Self {
            g,
            paths,
            singles,
            demand,
            failed: HashSet::new(),
        }
    }

    /// Places paths `idx..` inside `free`.
    fn place(&mut self, free: u64, idx: usize) -> bool {
        if free.count_ones() < self.demand[idx] {
            return false;
        }
        if idx == self.paths.len() {
            return free.count_ones() >= self.singles;
        }
        if self.failed.contains(&(free, idx)) {
            return false;
        }
        let p = self.paths[idx] as usize;
        let mut starts = 0u64;
        for c in self.g.components_within(free) {
            if c.count_ones() as usize >= p {
                starts |= c;
            }
        }
        let mut tried = 0u64;
        for s in Bits(starts) {
            if has_twin_in(self.g, s, tried, free) {
                continue;
            }
            tried |= bit(s);
            if self.extend(free & !bit(s), s, p - 1, idx) {
                return true;
            }
        }
        self.failed.insert((free, idx));
        false
    }

    /// Extends the current path from `last` by `remaining` vertices.
    fn extend(&mut self, free: u64, last: usize, remaining: usize, idx: usize) -> bool {
        if remaining == 0 {
            return self.place(free, idx + 1);
        }
        let next = self.g.neighbors(last) & free;
        if next == 0 {
            return false;
        }
        if remaining > 1
            && (self.g.reach(last, free | bit(last)).count_ones() as usize) <= remaining
        {
            return false;
        }
        let mut tried = 0u64;
        for w in Bits(next) {
            if has_twin_in(self.g, w, tried, free) {
                continue;
            }
            tried |= bit(w);
            if self.extend(free & !bit(w), w, remaining - 1, idx) {
                return true;
            }
        }
        false
    }
}
