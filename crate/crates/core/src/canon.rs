//! Canonical forms for small graphs.
//!
//! Equitable partition refinement plus an individualization search tree.
//! Every leaf is a discrete ordered partition, read as a relabeling; the
//! canonical form is the relabeling with the least adjacency code. Branches
//! that individualize a twin of an already tried vertex are skipped: swapping
//! twins is an automorphism fixing the current partition, so both subtrees
//! have the same leaves.

use crate::error::{Error, Result};
use crate::graph::{bit, Bits, SmallGraph};

/// Largest order for which canonical codes are available (`16 * 15 / 2 = 120`
/// bits fit in a `u128`).
pub const MAX_CANON_ORDER: usize = 16;

/// Adjacency code: upper-triangle bits in graph6 order, the pair `(0, 1)`
/// being the most significant. Comparing codes of equal-order graphs is the
/// same as comparing their graph6 strings.
pub fn adjacency_code(g: &SmallGraph) -> u128 {
    assert!(g.order() <= MAX_CANON_ORDER);
    let total = pair_count(g.order());
    g.edges()
        .map(|(u, v)| 1u128 << (total - 1 - pair_index(u, v)))
        .fold(0, |acc, b| acc | b)
}

/// Inverse of [`adjacency_code`].
pub fn graph_from_code(order: usize, code: u128) -> SmallGraph {
    assert!(order <= MAX_CANON_ORDER);
    let total = pair_count(order);
    let mut g = SmallGraph::empty(order);
    for v in 1..order {
        for u in 0..v {
            if code >> (total - 1 - pair_index(u, v)) & 1 == 1 {
                g.add_edge(u, v);
            }
        }
    }
    g
}

#[inline]
fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Index of the pair `{u, v}` in column-major upper-triangle order.
#[inline]
fn pair_index(u: usize, v: usize) -> usize {
    let (a, b) = if u < v { (u, v) } else { (v, u) };
    b * (b - 1) / 2 + a
}

/// A canonical representative and its code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Canonical {
    pub graph: SmallGraph,
    pub code: u128,
    /// `labeling[v]` is the position of vertex `v` in the canonical graph.
    pub labeling: Vec<usize>,
}

pub fn canonical_form(g: &SmallGraph) -> Result<Canonical> {
    if g.order() > MAX_CANON_ORDER {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            limit: MAX_CANON_ORDER,
        });
    }
    let mut best: Option<(u128, Vec<usize>)> = None;
    let start = if g.order() == 0 {
        Vec::new()
    } else {
        vec![g.vertices()]
    };
    search(g, start, &mut best);
    let (code, labeling) = best.unwrap_or((0, Vec::new()));
    Ok(Canonical {
        graph: graph_from_code(g.order(), code),
        code,
        labeling,
    })
}

/// Shorthand for `canonical_form(g).code`.
pub fn canonical_code(g: &SmallGraph) -> Result<u128> {
    canonical_form(g).map(|c| c.code)
}

pub fn are_isomorphic(a: &SmallGraph, b: &SmallGraph) -> Result<bool> {
    Ok(a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_code(a)? == canonical_code(b)?)
}

fn search(g: &SmallGraph, mut cells: Vec<u64>, best: &mut Option<(u128, Vec<usize>)>) {
    refine(g, &mut cells);
    if cells.len() == g.order() {
        let mut labeling = vec![0; g.order()];
        for (pos, &c) in cells.iter().enumerate() {
            labeling[c.trailing_zeros() as usize] = pos;
        }
        let code = g
            .edges()
            .map(|(u, v)| {
                1u128 << (pair_count(g.order()) - 1 - pair_index(labeling[u], labeling[v]))
            })
            .fold(0, |acc, b| acc | b);
        if best.as_ref().is_none_or(|(b, _)| code < *b) {
            *best = Some((code, labeling));
        }
        return;
    }
    // First smallest non-singleton cell.
    let (ti, target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.count_ones() > 1)
        .min_by_key(|(i, c)| (c.count_ones(), *i))
        .map(|(i, &c)| (i, c))
        .expect("non-discrete partition has a non-singleton cell");
    let all = g.vertices();
    let mut tried = 0u64;
    for v in Bits(target) {
        let nv = g.neighbors(v);
        if Bits(tried).any(|t| (nv ^ g.neighbors(t)) & all & !(bit(v) | bit(t)) == 0) {
            continue;
        }
        tried |= bit(v);
        let mut next = Vec::with_capacity(cells.len() + 1);
        next.extend_from_slice(&cells[..ti]);
        next.push(bit(v));
        next.push(target & !bit(v));
        next.extend_from_slice(&cells[ti + 1..]);
        search(g, next, best);
    }
}

/// Refines an ordered partition until it is equitable. Cells are split by
/// neighbour count into each splitter cell, fragments ordered by count.
fn refine(g: &SmallGraph, cells: &mut Vec<u64>) {
    let mut wi = 0;
    while wi < cells.len() {
        let w = cells[wi];
        let mut next = Vec::with_capacity(cells.len() + 4);
        let mut split = false;
        for &x in cells.iter() {
            if x.count_ones() == 1 {
                next.push(x);
                continue;
            }
            let mut buckets = [0u64; 65];
            let (mut lo, mut hi) = (64usize, 0usize);
            for v in Bits(x) {
                let c = (g.neighbors(v) & w).count_ones() as usize;
                buckets[c] |= bit(v);
                lo = lo.min(c);
                hi = hi.max(c);
            }
            if lo == hi {
                next.push(x);
            } else {
                split = true;
                next.extend(buckets[lo..=hi].iter().copied().filter(|&b| b != 0));
            }
        }
        if split {
            *cells = next;
            wi = 0;
        } else {
            wi += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph6;

    #[test]
    fn code_round_trip() {
        let g = SmallGraph::petersen();
        assert_eq!(graph_from_code(10, adjacency_code(&g)), g);
        // K_3's code 111 matches graph6 "Bw".
        assert_eq!(adjacency_code(&SmallGraph::complete(3)), 0b111);
    }

    #[test]
    fn relabelings_share_a_form() {
        let g = SmallGraph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (3, 4), (4, 5)]);
        let c = canonical_form(&g).unwrap();
        for perm in [[5, 4, 3, 2, 1, 0], [1, 0, 3, 2, 5, 4], [2, 5, 0, 4, 1, 3]] {
            let h = g.permuted(&perm);
            assert_eq!(canonical_form(&h).unwrap().code, c.code);
        }
        assert_eq!(g.permuted(&c.labeling), c.graph);
    }

    #[test]
    fn distinguishes_non_isomorphic() {
        let c6 = SmallGraph::cycle(6);
        let two_c3 = SmallGraph::cycle(3)
            .disjoint_union(&SmallGraph::cycle(3))
            .unwrap();
        assert!(!are_isomorphic(&c6, &two_c3).unwrap());
        assert!(are_isomorphic(
            &SmallGraph::petersen(),
            &SmallGraph::petersen().permuted(&[3, 1, 4, 0, 2, 9, 8, 7, 6, 5])
        )
        .unwrap());
    }

    #[test]
    fn symmetric_graphs_are_fast() {
        for n in 0..=16 {
            assert_eq!(canonical_form(&SmallGraph::empty(n)).unwrap().code, 0);
            let k = canonical_form(&SmallGraph::complete(n)).unwrap();
            assert_eq!(k.graph, SmallGraph::complete(n));
        }
        let k88 = SmallGraph::complete_bipartite(8, 8);
        assert_eq!(canonical_form(&k88).unwrap().graph.edge_count(), 64);
    }

    #[test]
    fn least_code_is_least_graph6() {
        // The canonical form of a single edge on 3 vertices puts it last.
        let g = SmallGraph::from_edges(3, &[(0, 1)]);
        let c = canonical_form(&g).unwrap();
        assert_eq!(graph6::encode(&c.graph), "BG");
        assert!(canonical_form(&SmallGraph::empty(17)).is_err());
    }
}
