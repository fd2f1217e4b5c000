//! Test-only references: naive try-all-vertex-sequences detectors, brute
//! force canonical codes, and seeded random graphs. Nothing here calls the
//! library's search code.

#![allow(dead_code)]

use qramsey_core::canon::adjacency_code;
use qramsey_core::SmallGraph;
use rand::Rng;

/// Tries every sequence of distinct vertices, split into consecutive blocks
/// of the given sizes, and accepts when each block is a path.
pub fn naive_forest(g: &SmallGraph, allowed: &[usize], blocks: &[usize]) -> bool {
    fn go(
        g: &SmallGraph,
        allowed: &[usize],
        used: &mut Vec<bool>,
        blocks: &[usize],
        block: usize,
        pos: usize,
        prev: Option<usize>,
    ) -> bool {
        if block == blocks.len() {
            return true;
        }
        if pos == blocks[block] {
            return go(g, allowed, used, blocks, block + 1, 0, None);
        }
        for &v in allowed {
            if used[v] {
                continue;
            }
            if let Some(p) = prev {
                if !g.has_edge(p, v) {
                    continue;
                }
            }
            used[v] = true;
            let ok = go(g, allowed, used, blocks, block, pos + 1, Some(v));
            used[v] = false;
            if ok {
                return true;
            }
        }
        false
    }
    let need: usize = blocks.iter().sum();
    if need > allowed.len() {
        return false;
    }
    let mut used = vec![false; g.order()];
    go(g, allowed, &mut used, blocks, 0, 0, None)
}

pub fn all_vertices(g: &SmallGraph) -> Vec<usize> {
    (0..g.order()).collect()
}

pub fn naive_path(g: &SmallGraph, n: usize) -> bool {
    naive_forest(g, &all_vertices(g), &[n])
}

pub fn naive_longest_path(g: &SmallGraph) -> usize {
    (1..=g.order())
        .rev()
        .find(|&k| naive_path(g, k))
        .unwrap_or(0)
}

/// Center followed by `m` distinct neighbours.
pub fn naive_star(g: &SmallGraph, m: usize) -> bool {
    (0..g.order()).any(|c| {
        (0..g.order())
            .filter(|&v| v != c && g.has_edge(c, v))
            .count()
            >= m
    })
}

/// Hub followed by a forest sequence inside its neighbourhood.
pub fn naive_quasar(g: &SmallGraph, orders: &[u32]) -> bool {
    let blocks: Vec<usize> = orders.iter().map(|&p| p as usize).collect();
    (0..g.order()).any(|hub| {
        let nbrs: Vec<usize> = (0..g.order()).filter(|&v| g.has_edge(hub, v)).collect();
        naive_forest(g, &nbrs, &blocks)
    })
}

/// All permutations of `0..n` (Heap's algorithm).
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut a: Vec<usize> = (0..n).collect();
    let mut c = vec![0; n];
    out.push(a.clone());
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                a.swap(0, i);
            } else {
                a.swap(c[i], i);
            }
            out.push(a.clone());
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    out
}

/// Least adjacency code over every relabeling.
pub fn brute_canonical_code(g: &SmallGraph, perms: &[Vec<usize>]) -> u128 {
    perms
        .iter()
        .map(|p| adjacency_code(&g.permuted(p)))
        .min()
        .unwrap_or(0)
}

/// Every labeled graph on `n` vertices.
pub fn all_labeled_graphs(n: usize) -> impl Iterator<Item = SmallGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let mut g = SmallGraph::empty(n);
        for (i, &(u, v)) in pairs.iter().enumerate() {
            if mask >> i & 1 == 1 {
                g.add_edge(u, v);
            }
        }
        g
    })
}

pub fn random_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SmallGraph {
    let mut g = SmallGraph::empty(n);
    for v in 1..n {
        for u in 0..v {
            if rng.gen_bool(p) {
                g.add_edge(u, v);
            }
        }
    }
    g
}

/// Random spanning tree plus independent extra edges.
pub fn random_connected_graph<R: Rng>(rng: &mut R, n: usize, p: f64) -> SmallGraph {
    let mut g = random_graph(rng, n, p);
    for v in 1..n {
        let u = rng.gen_range(0..v);
        g.add_edge(u, v);
    }
    g
}

/// All partitions of `total` into positive parts, descending.
pub fn partitions(total: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=max.min(rest)).rev() {
            cur.push(p);
            go(rest - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(total, total, &mut Vec::new(), &mut out);
    out
}
