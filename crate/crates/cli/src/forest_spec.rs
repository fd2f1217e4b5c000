//! Textual linear forests: `"3,2,2"`, with `"kxp"` for `k` copies of `P_p`.

use std::fmt;
use std::str::FromStr;

use qramsey_core::LinearForest;

const MAX_PARTS: u64 = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ForestSpec(pub LinearForest);

impl FromStr for ForestSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut orders = Vec::new();
        for item in s.split(',').map(str::trim) {
            let (count, order) = match item.split_once(['x', 'X']) {
                Some((k, p)) => (parse_part(k, s)?, parse_part(p, s)?),
                None => (1, parse_part(item, s)?),
            };
            if count == 0 || order == 0 {
                return Err(format!("forest '{s}': parts must be positive"));
            }
            if orders.len() as u64 + u64::from(count) > MAX_PARTS {
                return Err(format!("forest '{s}': more than {MAX_PARTS} components"));
            }
            orders.extend(std::iter::repeat_n(order, count as usize));
        }
        LinearForest::new(orders)
            .map(ForestSpec)
            .map_err(|e| format!("forest '{s}': {e}"))
    }
}

fn parse_part(text: &str, whole: &str) -> Result<u32, String> {
    text.trim()
        .parse()
        .map_err(|_| format!("forest '{whole}': '{text}' is not a positive integer"))
}

impl fmt::Display for ForestSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}
