use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A linear forest, stored as the multiset of its path orders.
///
/// The orders are kept sorted in descending order. A valid forest has at
/// least one component of order two or more, so `K_1 ∨ F` always contains a
/// triangle. Isolated vertices are allowed next to it.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<u32>", into = "Vec<u32>")]
pub struct LinearForest {
    orders: Vec<u32>,
}

impl LinearForest {
    pub fn new(mut orders: Vec<u32>) -> Result<Self> {
        if orders.contains(&0) {
            return Err(Error::InvalidForest(
                "path orders must be at least 1".into(),
            ));
        }
        if !orders.iter().any(|&p| p >= 2) {
            return Err(Error::InvalidForest(
                "the forest needs at least one edge (a path of order >= 2)".into(),
            ));
        }
        orders.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Self { orders })
    }

    /// A single path `P_order`.
    pub fn path(order: u32) -> Result<Self> {
        Self::new(vec![order])
    }

    /// `k` disjoint edges, the forest underlying the fan `K_1 ∨ kK_2`.
    pub fn matching(k: u32) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidForest("a fan needs at least one edge".into()));
        }
        Self::new(vec![2; k as usize])
    }

    /// Component orders, descending.
    pub fn orders(&self) -> &[u32] {
        &self.orders
    }

    pub fn total_order(&self) -> u64 {
        self.orders.iter().map(|&p| u64::from(p)).sum()
    }

    /// Number of components of odd order, `o(F)`.
    pub fn odd_count(&self) -> u64 {
        self.orders.iter().filter(|&&p| p % 2 == 1).count() as u64
    }

    pub fn component_count(&self) -> usize {
        self.orders.len()
    }

    /// Enumerates every valid linear forest on exactly `m` vertices, i.e.
    /// every partition of `m` with a part of size at least two.
    pub fn all_with_order(m: u32) -> Vec<LinearForest> {
        let mut out = Vec::new();
        let mut current = Vec::new();
        partitions(m, m, &mut current, &mut out);
        out.into_iter()
            .filter_map(|orders| LinearForest::new(orders).ok())
            .collect()
    }
}

fn partitions(rest: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
    if rest == 0 {
        out.push(current.clone());
        return;
    }
    for part in (1..=max_part.min(rest)).rev() {
        current.push(part);
        partitions(rest - part, part, current, out);
        current.pop();
    }
}

impl TryFrom<Vec<u32>> for LinearForest {
    type Error = Error;

    fn try_from(orders: Vec<u32>) -> Result<Self> {
        Self::new(orders)
    }
}

impl From<LinearForest> for Vec<u32> {
    fn from(f: LinearForest) -> Self {
        f.orders
    }
}

impl fmt::Display for LinearForest {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, p) in self.orders.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        Ok(())
    }
}
