//! Lower-bound constructions: graphs on `R - 1` vertices with no `P_n`
//! whose complement avoids the target.

use serde::Serialize;

use crate::detect::{contains_path, Pattern};
use crate::error::{check_range, Error, Result};
use crate::forest::LinearForest;
use crate::formulas::{t_closed, PathStarParams};
use crate::graph::{clique_union, CliqueUnionSpec, SmallGraph};
use crate::graph6;

/// Outcome of checking a candidate lower-bound graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WitnessReport {
    #[serde(serialize_with = "as_graph6")]
    pub graph: SmallGraph,
    pub target: Pattern,
    pub n: u32,
    /// `G` has no `P_n`.
    pub no_path: bool,
    /// The complement of `G` does not contain the target.
    pub no_target_in_complement: bool,
    /// `order + 1`: the lower bound the graph certifies when valid.
    pub claimed_bound: u64,
}

fn as_graph6<S: serde::Serializer>(g: &SmallGraph, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&graph6::encode(g))
}

impl WitnessReport {
    pub fn is_valid(&self) -> bool {
        self.no_path && self.no_target_in_complement
    }
}

/// Checks `G` against `P_n` and its complement against `target`.
pub fn verify_witness(g: &SmallGraph, n: u32, target: &Pattern) -> WitnessReport {
    WitnessReport {
        graph: g.clone(),
        target: target.clone(),
        n,
        no_path: !contains_path(g, n as usize),
        no_target_in_complement: !target.is_contained_in(&g.complement()),
        claimed_bound: g.order() as u64 + 1,
    }
}

/// Clique sizes for the path-star witness: `r - 1` split into the fewest
/// parts from `[max(r - m, 1), n - 1]`, sizes differing by at most one, largest
/// first. `r` is the path-star Ramsey number.
pub fn star_witness_partition(n: u64, m: u64) -> Result<Vec<usize>> {
    let r = t_closed(PathStarParams::new(n, m)?);
    let total = r - 1;
    let lo = r.saturating_sub(m).max(1);
    let hi = n - 1;
    // k parts reach exactly [k*lo, k*hi].
    let k = total.div_ceil(hi);
    if k * lo > total {
        return Err(Error::Consistency(format!(
            "{total} is not a sum of parts in [{lo}, {hi}] for (n, m) = ({n}, {m})"
        )));
    }
    let (q, extra) = (total / k, total % k);
    Ok((0..k)
        .map(|i| (q + u64::from(i < extra)) as usize)
        .collect())
}

/// Disjoint union of cliques on `R(P_n, K_{1,m}) - 1` vertices, each clique
/// smaller than `n` and missing fewer than `m` vertices.
pub fn star_witness(n: u64, m: u64) -> Result<SmallGraph> {
    clique_union(&CliqueUnionSpec::new(star_witness_partition(n, m)?))
}

/// Clique sizes of the three quasar witnesses `2K_{n-1}`,
/// `K_{⌊m/2⌋} ∪ 2K_{⌈m/2⌉-1}` and `K_{n-1} ∪ 2K_{(m-o(F))/2-1}`.
pub fn quasar_witness_specs(n: u64, forest: &LinearForest) -> Result<[CliqueUnionSpec; 3]> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    let m = forest.total_order();
    if m < n + 1 || m > 2 * n - 1 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            expected: "forest order in [n+1, 2n-1]",
        });
    }
    let odd = forest.odd_count();
    if !(m - odd).is_multiple_of(2) {
        return Err(Error::Consistency(format!(
            "m - o(F) = {m} - {odd} is odd for forest {forest}"
        )));
    }
    let big = (n - 1) as usize;
    let half_up = m.div_ceil(2) as usize - 1;
    let even_half = ((m - odd) / 2) as usize - 1;
    Ok([
        CliqueUnionSpec::new([big, big]),
        CliqueUnionSpec::new([(m / 2) as usize, half_up, half_up]),
        CliqueUnionSpec::new([big, even_half, even_half]),
    ])
}

/// The graphs `G1`, `G2`, `G3` of the quasar lower bound.
pub fn quasar_witnesses(n: u64, forest: &LinearForest) -> Result<[SmallGraph; 3]> {
    let [a, b, c] = quasar_witness_specs(n, forest)?;
    Ok([clique_union(&a)?, clique_union(&b)?, clique_union(&c)?])
}
