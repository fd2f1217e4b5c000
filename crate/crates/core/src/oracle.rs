//! Exhaustive computation of small Ramsey numbers `R(P_n, H)`.
//!
//! A graph on `r` vertices with no `P_n` whose complement has no `H` is a
//! counterexample for `r`. Both properties pass to induced subgraphs, so every
//! counterexample on `r` vertices extends one on `r - 1` vertices. The
//! generator grows isomorphism classes one vertex at a time, keeps only
//! counterexamples, and deduplicates each level by canonical code. `R` is
//! the first order whose level is empty.
//!
//! Each level is processed in parallel over its parents, which are sorted
//! by canonical code; the merged result is sorted again, so counters and
//! reported graphs do not depend on the number of worker threads.

use std::fs::OpenOptions;
use std::io::{BufRead, BufReader, Write};
use std::path::Path;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{canonical_code, graph_from_code};
use crate::detect::{contains_path, Pattern};
use crate::error::{Error, Result};
use crate::graph::SmallGraph;
use crate::graph6;

/// Largest order the oracle will enumerate.
pub const MAX_ORACLE_ORDER: usize = 10;

/// `R(P_n, target)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct RamseyQuery {
    pub n: u32,
    pub target: Pattern,
}

impl RamseyQuery {
    pub fn new(n: u32, target: Pattern) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutOfRange {
                name: "n",
                value: u64::from(n),
                expected: "path order n >= 2",
            });
        }
        if !target.is_valid() {
            return Err(Error::OutOfRange {
                name: "target",
                value: target.order(),
                expected: "a valid pattern",
            });
        }
        Ok(Self { n, target })
    }

    /// `G` has no `P_n` and its complement has no target.
    pub fn is_counterexample(&self, g: &SmallGraph) -> bool {
        !contains_path(g, self.n as usize) && !self.target.is_contained_in(&g.complement())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleResult {
    pub ramsey_value: usize,
    /// Lexicographically least (by graph6) canonical counterexample on
    /// `ramsey_value - 1` vertices.
    pub counterexample: SmallGraph,
    /// Number of one-vertex extensions tested.
    pub graphs_examined: u64,
    pub elapsed: Duration,
}

/// Outcome of deciding `r -> (P_n, target)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Arrowing {
    pub arrows: bool,
    /// Least canonical counterexample on `r` vertices when `arrows` is false.
    pub counterexample: Option<SmallGraph>,
    pub graphs_examined: u64,
}

/// Level-by-level isomorph-free generator of graphs satisfying a hereditary
/// property.
pub struct ClassGenerator<F> {
    keep: F,
    order: usize,
    /// Canonical codes of the current level, ascending.
    level: Vec<u128>,
    examined: u64,
}

impl<F> ClassGenerator<F>
where
    F: Fn(&SmallGraph) -> bool + Sync,
{
    /// `keep` must be closed under taking induced subgraphs.
    pub fn new(keep: F) -> Self {
        let level = if keep(&SmallGraph::empty(0)) {
            vec![0]
        } else {
            Vec::new()
        };
        Self {
            keep,
            order: 0,
            level,
            examined: 0,
        }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn examined(&self) -> u64 {
        self.examined
    }

    pub fn level_len(&self) -> usize {
        self.level.len()
    }

    /// Canonical representatives of the current level, ascending by code.
    pub fn graphs(&self) -> impl Iterator<Item = SmallGraph> + '_ {
        self.level
            .iter()
            .map(move |&c| graph_from_code(self.order, c))
    }

    pub fn least(&self) -> Option<SmallGraph> {
        self.level.first().map(|&c| graph_from_code(self.order, c))
    }

    /// Advances to the next order.
    pub fn step(&mut self) -> Result<()> {
        if self.order >= MAX_ORACLE_ORDER {
            return Err(Error::CapacityExceeded {
                cap: MAX_ORACLE_ORDER,
                largest_counterexample: self.least().map(Box::new),
            });
        }
        let order = self.order;
        let keep = &self.keep;
        let subsets = 1u64 << order;
        let mut next: Vec<u128> = self
            .level
            .par_iter()
            .flat_map_iter(|&code| {
                let parent = graph_from_code(order, code);
                let mut kids: Vec<u128> = (0..subsets)
                    .filter_map(|nbrs| {
                        let child = parent.with_vertex(nbrs);
                        keep(&child)
                            .then(|| canonical_code(&child).expect("order within canon limit"))
                    })
                    .collect();
                kids.sort_unstable();
                kids.dedup();
                kids
            })
            .collect();
        next.par_sort_unstable();
        next.dedup();
        self.examined += subsets * self.level.len() as u64;
        self.level = next;
        self.order += 1;
        Ok(())
    }

    /// Steps until the current order is `r`.
    pub fn advance_to(&mut self, r: usize) -> Result<()> {
        while self.order < r {
            self.step()?;
        }
        Ok(())
    }
}

fn check_order(r: usize) -> Result<()> {
    if r > MAX_ORACLE_ORDER {
        return Err(Error::CapacityExceeded {
            cap: MAX_ORACLE_ORDER,
            largest_counterexample: None,
        });
    }
    Ok(())
}

/// One canonical representative of every isomorphism class of graphs on `r`
/// vertices without a `P_n`, ascending by code.
pub fn enumerate_pn_free(r: usize, n: usize) -> Result<Vec<SmallGraph>> {
    check_order(r)?;
    let mut generator = ClassGenerator::new(|g: &SmallGraph| !contains_path(g, n));
    generator.advance_to(r)?;
    Ok(generator.graphs().collect())
}

/// Decides whether every graph on `r` vertices contains `P_n` or has the
/// target in its complement.
pub fn arrows(r: usize, query: &RamseyQuery) -> Result<Arrowing> {
    check_order(r)?;
    let mut generator = ClassGenerator::new(|g: &SmallGraph| query.is_counterexample(g));
    generator.advance_to(r)?;
    let counterexample = generator.least();
    Ok(Arrowing {
        arrows: counterexample.is_none(),
        counterexample,
        graphs_examined: generator.examined(),
    })
}

/// The least `r <= r_cap` such that `r -> (P_n, target)`.
pub fn ramsey_exact(query: &RamseyQuery, r_cap: usize) -> Result<OracleResult> {
    check_order(r_cap)?;
    let start = Instant::now();
    let mut generator = ClassGenerator::new(|g: &SmallGraph| query.is_counterexample(g));
    let mut previous = generator.least();
    while generator.order() < r_cap {
        generator.step()?;
        match generator.least() {
            Some(g) => previous = Some(g),
            None => {
                let counterexample = previous.ok_or_else(|| {
                    Error::Consistency("no counterexample below the arrowing order".into())
                })?;
                debug_assert!(query.is_counterexample(&counterexample));
                return Ok(OracleResult {
                    ramsey_value: generator.order(),
                    counterexample,
                    graphs_examined: generator.examined(),
                    elapsed: start.elapsed(),
                });
            }
        }
    }
    Err(Error::CapacityExceeded {
        cap: r_cap,
        largest_counterexample: previous.map(Box::new),
    })
}

/// One line of the append-only results log (JSON lines).
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LogEntry {
    pub n: u32,
    pub target: Pattern,
    pub value: usize,
    /// Counterexample on `value - 1` vertices, graph6.
    pub counterexample: String,
    pub graphs_examined: u64,
    pub wall_ms: u64,
}

impl LogEntry {
    pub fn new(query: &RamseyQuery, result: &OracleResult) -> Self {
        Self {
            n: query.n,
            target: query.target.clone(),
            value: result.ramsey_value,
            counterexample: graph6::encode(&result.counterexample),
            graphs_examined: result.graphs_examined,
            wall_ms: result.elapsed.as_millis() as u64,
        }
    }

    pub fn query(&self) -> RamseyQuery {
        RamseyQuery {
            n: self.n,
            target: self.target.clone(),
        }
    }
}

pub fn append_log(path: &Path, entry: &LogEntry) -> std::io::Result<()> {
    let mut file = OpenOptions::new().create(true).append(true).open(path)?;
    let line = serde_json::to_string(entry).map_err(std::io::Error::other)?;
    writeln!(file, "{line}")
}

/// Reads every entry; blank lines are skipped, malformed lines are errors.
pub fn read_log(path: &Path) -> std::io::Result<Vec<LogEntry>> {
    let file = std::fs::File::open(path)?;
    let mut out = Vec::new();
    for (i, line) in BufReader::new(file).lines().enumerate() {
        let line = line?;
        if line.trim().is_empty() {
            continue;
        }
        let entry = serde_json::from_str(&line).map_err(|e| {
            std::io::Error::new(
                std::io::ErrorKind::InvalidData,
                format!("line {}: {e}", i + 1),
            )
        })?;
        out.push(entry);
    }
    Ok(out)
}
