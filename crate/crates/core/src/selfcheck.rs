//! Grid-wide agreement of the three path-star characterizations.

use crate::formulas::{t_closed, t_min_char, ParsonsTable, PathStarParams};

/// A cell where the characterizations disagree.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Mismatch {
    pub n: u64,
    pub m: u64,
    pub closed: u64,
    pub min_char: u64,
    pub recursion: u64,
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct GridReport {
    pub cells: usize,
    /// Row-major by `n`, then `m`.
    pub mismatches: Vec<Mismatch>,
    /// Cells where `m + ⌊n/2⌋ <= t <= m + n - 1` fails for the closed form.
    pub sandwich_violations: Vec<(u64, u64)>,
    /// Cells in the `n = 2` row that differ from `m + 1`.
    pub trivial_row_violations: Vec<(u64, u64)>,
}

impl GridReport {
    pub fn is_clean(&self) -> bool {
        self.mismatches.is_empty()
            && self.sandwich_violations.is_empty()
            && self.trivial_row_violations.is_empty()
    }

    pub fn first_mismatch(&self) -> Option<&Mismatch> {
        self.mismatches.first()
    }
}

/// Checks `2 <= n <= n_max`, `2 <= m <= m_max`.
pub fn check_grid(n_max: u64, m_max: u64) -> GridReport {
    check_grid_with(n_max, m_max, t_closed)
}

/// As [`check_grid`] with a substitute closed form, so that a deliberately
/// broken formula can be shown to be caught.
pub fn check_grid_with(
    n_max: u64,
    m_max: u64,
    closed: impl Fn(PathStarParams) -> u64,
) -> GridReport {
    let mut report = GridReport::default();
    let mut table = ParsonsTable::new();
    for n in 2..=n_max {
        for m in 2..=m_max {
            let p = PathStarParams::new(n, m).expect("grid starts at 2");
            let c = closed(p);
            let l = t_min_char(p);
            let r = table.value(n, m).expect("grid starts at 2");
            report.cells += 1;
            if c != l || c != r {
                report.mismatches.push(Mismatch {
                    n,
                    m,
                    closed: c,
                    min_char: l,
                    recursion: r,
                });
            }
            if c < m + n / 2 || c > m + n - 1 {
                report.sandwich_violations.push((n, m));
            }
            if n == 2 && c != m + 1 {
                report.trivial_row_violations.push((n, m));
            }
        }
    }
    report
}
