//! Undirected simple graphs on at most 64 vertices with one `u64` adjacency
//! row per vertex.

use std::fmt;
use std::fmt::Write as _;

use crate::error::{Error, Result};

/// Largest supported order.
pub const MAX_ORDER: usize = 64;

#[inline]
pub(crate) const fn bit(v: usize) -> u64 {
    1u64 << v
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// Iterator over the set bits of a mask, lowest first.
#[derive(Debug, Clone, Copy)]
pub struct Bits(pub u64);

impl Iterator for Bits {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            let v = self.0.trailing_zeros() as usize;
            self.0 &= self.0 - 1;
            Some(v)
        }
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Bits {}

/// Undirected simple graph with bitset adjacency.
///
/// Rows are symmetric, the diagonal is clear and no bit at or above `order`
/// is ever set. Values are immutable once built unless explicitly mutated
/// through `&mut`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SmallGraph {
    order: usize,
    adj: [u64; MAX_ORDER],
}

impl SmallGraph {
    /// Edgeless graph on `order` vertices.
    ///
    /// Panics if `order > 64`; use [`SmallGraph::with_order`] for a fallible
    /// version.
    pub fn empty(order: usize) -> Self {
        Self::with_order(order).expect("graph order above 64")
    }

    pub fn with_order(order: usize) -> Result<Self> {
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                limit: MAX_ORDER,
            });
        }
        Ok(Self {
            order,
            adj: [0; MAX_ORDER],
        })
    }

    pub fn from_edges(order: usize, edges: &[(usize, usize)]) -> Self {
        let mut g = Self::empty(order);
        for &(u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// Builds a graph from adjacency rows, symmetrizing and dropping loops and
    /// out-of-range bits.
    pub fn from_rows(rows: &[u64]) -> Self {
        let n = rows.len();
        let mut g = Self::empty(n);
        let mask = low_mask(n);
        for (u, &row) in rows.iter().enumerate() {
            for v in Bits(row & mask & !bit(u)) {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn complete(k: usize) -> Self {
        let mut g = Self::empty(k);
        let all = low_mask(k);
        for v in 0..k {
            g.adj[v] = all & !bit(v);
        }
        g
    }

    pub fn path(k: usize) -> Self {
        let mut g = Self::empty(k);
        for v in 1..k {
            g.add_edge(v - 1, v);
        }
        g
    }

    pub fn cycle(k: usize) -> Self {
        assert!(k >= 3, "cycles need at least 3 vertices");
        let mut g = Self::path(k);
        g.add_edge(0, k - 1);
        g
    }

    /// `K_{1,m}` with the center at vertex 0.
    pub fn star(m: usize) -> Self {
        let mut g = Self::empty(m + 1);
        for v in 1..=m {
            g.add_edge(0, v);
        }
        g
    }

    /// `W_m`: hub 0 joined to the cycle on vertices `1..=m`.
    pub fn wheel(m: usize) -> Self {
        let mut g = Self::empty(m + 1);
        for v in 1..=m {
            g.add_edge(0, v);
            g.add_edge(v, v % m + 1);
        }
        g
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Self {
        let mut g = Self::empty(a + b);
        for u in 0..a {
            for v in a..a + b {
                g.add_edge(u, v);
            }
        }
        g
    }

    pub fn petersen() -> Self {
        let mut g = Self::empty(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5);
            g.add_edge(i, i + 5);
            g.add_edge(5 + i, 5 + (i + 2) % 5);
        }
        g
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    /// Mask of all vertices.
    #[inline]
    pub fn vertices(&self) -> u64 {
        low_mask(self.order)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> u64 {
        self.adj[v]
    }

    /// Adjacency rows for vertices `0..order`.
    #[inline]
    pub fn rows(&self) -> &[u64] {
        &self.adj[..self.order]
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] & bit(v) != 0
    }

    pub fn add_edge(&mut self, u: usize, v: usize) {
        assert!(u < self.order && v < self.order, "vertex out of range");
        assert_ne!(u, v, "self-loops are not allowed");
        self.adj[u] |= bit(v);
        self.adj[v] |= bit(u);
    }

    pub fn remove_edge(&mut self, u: usize, v: usize) {
        self.adj[u] &= !bit(v);
        self.adj[v] &= !bit(u);
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn min_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .min()
            .unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .max()
            .unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.rows()
            .iter()
            .map(|r| r.count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Edges `(u, v)` with `u < v`, ordered by `u` then `v`.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.order).flat_map(move |u| Bits(self.adj[u] & !low_mask(u + 1)).map(move |v| (u, v)))
    }

    /// Same vertex set, inverted edge set.
    pub fn complement(&self) -> SmallGraph {
        let mut g = self.clone();
        let all = self.vertices();
        for v in 0..self.order {
            g.adj[v] = !self.adj[v] & all & !bit(v);
        }
        g
    }

    /// Vertices reachable from `start` inside `within`.
    pub fn reach(&self, start: usize, within: u64) -> u64 {
        let mut seen = bit(start) & within;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in Bits(frontier) {
                next |= self.adj[v];
            }
            next &= within & !seen;
            seen |= next;
            frontier = next;
        }
        seen
    }

    /// Connected components of the subgraph induced on `within`, ordered by
    /// least vertex.
    pub fn components_within(&self, within: u64) -> Vec<u64> {
        let mut rest = within & self.vertices();
        let mut out = Vec::new();
        while rest != 0 {
            let c = self.reach(rest.trailing_zeros() as usize, rest);
            out.push(c);
            rest &= !c;
        }
        out
    }

    /// Connected components as vertex masks, ordered by least vertex.
    pub fn components(&self) -> Vec<u64> {
        self.components_within(self.vertices())
    }

    pub fn is_connected(&self) -> bool {
        self.order == 0 || self.reach(0, self.vertices()) == self.vertices()
    }

    /// Number of components of odd order.
    pub fn odd_component_count(&self) -> usize {
        self.components()
            .into_iter()
            .filter(|c| c.count_ones() % 2 == 1)
            .count()
    }

    /// Subgraph induced on `mask`, relabeled to `0..popcount` in increasing
    /// vertex order.
    pub fn induced(&self, mask: u64) -> SmallGraph {
        let mask = mask & self.vertices();
        let index: Vec<usize> = Bits(mask).collect();
        let mut g = Self::empty(index.len());
        for (i, &u) in index.iter().enumerate() {
            for (j, &v) in index.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    g.add_edge(i, j);
                }
            }
        }
        g
    }

    /// Copy of this graph with one extra vertex adjacent to `neighbors`.
    pub fn with_vertex(&self, neighbors: u64) -> SmallGraph {
        assert!(self.order < MAX_ORDER, "graph order above 64");
        let n = self.order;
        let neighbors = neighbors & self.vertices();
        let mut g = self.clone();
        g.order = n + 1;
        g.adj[n] = neighbors;
        for v in Bits(neighbors) {
            g.adj[v] |= bit(n);
        }
        g
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> SmallGraph {
        assert_eq!(perm.len(), self.order);
        let mut g = Self::empty(self.order);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]);
        }
        g
    }

    pub fn disjoint_union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let n = self.order;
        let mut g = Self::with_order(n + other.order)?;
        g.adj[..n].copy_from_slice(self.rows());
        for (v, &row) in other.rows().iter().enumerate() {
            g.adj[n + v] = row << n;
        }
        Ok(g)
    }

    /// Graphviz source listing every vertex and each edge once.
    pub fn to_dot(&self, label: &str) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "graph \"{}\" {{", label.replace('"', "\\\""));
        for v in 0..self.order {
            let _ = writeln!(s, "  {v};");
        }
        for (u, v) in self.edges() {
            let _ = writeln!(s, "  {u} -- {v};");
        }
        s.push_str("}\n");
        s
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph({}; ", self.order)?;
        f.debug_list().entries(self.edges()).finish()?;
        f.write_str(")")
    }
}

/// Sizes of the cliques in a disjoint union of complete graphs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueUnionSpec {
    sizes: Vec<usize>,
}

impl CliqueUnionSpec {
    /// Zero sizes are dropped.
    pub fn new(sizes: impl IntoIterator<Item = usize>) -> Self {
        Self {
            sizes: sizes.into_iter().filter(|&s| s > 0).collect(),
        }
    }

    pub fn sizes(&self) -> &[usize] {
        &self.sizes
    }

    pub fn total(&self) -> usize {
        self.sizes.iter().sum()
    }
}

/// Disjoint union of complete graphs, vertices numbered clique by clique.
pub fn clique_union(spec: &CliqueUnionSpec) -> Result<SmallGraph> {
    let total = spec.total();
    let mut g = SmallGraph::with_order(total)?;
    let mut start = 0;
    for &s in spec.sizes() {
        let block = low_mask(s) << start;
        for v in start..start + s {
            g.adj[v] = block & !bit(v);
        }
        start += s;
    }
    Ok(g)
}
