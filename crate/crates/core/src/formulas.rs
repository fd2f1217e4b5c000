//! Closed forms, recursions and bounds for Ramsey numbers of paths versus
//! stars, quasars, fans, cycles and wheels.
//!
//! Everything here is integer arithmetic. The one rational comparison in the
//! path-star closed form is cross-multiplied.

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{check_range, Error, Result};
use crate::forest::LinearForest;

/// Validated `(n, m)` pair for `R(P_n, K_{1,m})`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathStarParams {
    n: u64,
    m: u64,
}

impl PathStarParams {
    pub fn new(n: u64, m: u64) -> Result<Self> {
        check_range("n", n, n >= 2, "path order n >= 2")?;
        check_range("m", m, m >= 2, "star size m >= 2")?;
        Ok(Self { n, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn m(&self) -> u64 {
        self.m
    }
}

/// Which result produced a [`RamseyAnswer`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Provenance {
    /// Explicit path-star formula.
    PathStar,
    /// Quasar whose forest has at most `n` vertices.
    QuasarSmallForest,
    /// Quasar whose forest has at least `2n` vertices.
    QuasarLargeForest,
    /// Middle range with every forest component of even order.
    QuasarEvenComponents,
    /// Middle range with an odd component: only bounds are known.
    QuasarBounds,
    PathCycle,
    PathWheel,
}

impl Provenance {
    /// The theorem label printed next to a value.
    pub fn label(self) -> &'static str {
        match self {
            Provenance::PathStar => "Theorem 2",
            Provenance::QuasarSmallForest | Provenance::QuasarLargeForest => "Theorem 3",
            Provenance::QuasarEvenComponents => "Corollary 1",
            Provenance::QuasarBounds => "Theorem 4",
            Provenance::PathCycle => "Theorem 6",
            Provenance::PathWheel => "Theorem 7",
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum AnswerKind {
    Exact(u64),
    Bounds { lower: u64, upper: u64 },
}

/// A Ramsey number, or the best known interval for it, with its source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct RamseyAnswer {
    pub kind: AnswerKind,
    pub source: Provenance,
}

impl RamseyAnswer {
    pub fn exact(value: u64, source: Provenance) -> Self {
        debug_assert!(value >= 1);
        Self {
            kind: AnswerKind::Exact(value),
            source,
        }
    }

    pub fn bounds(lower: u64, upper: u64, source: Provenance) -> Self {
        debug_assert!(lower <= upper, "bounds out of order: [{lower}, {upper}]");
        Self {
            kind: AnswerKind::Bounds { lower, upper },
            source,
        }
    }

    pub fn exact_value(&self) -> Option<u64> {
        match self.kind {
            AnswerKind::Exact(v) => Some(v),
            AnswerKind::Bounds { .. } => None,
        }
    }

    /// `(lower, upper)`; both equal the value for exact answers.
    pub fn range(&self) -> (u64, u64) {
        match self.kind {
            AnswerKind::Exact(v) => (v, v),
            AnswerKind::Bounds { lower, upper } => (lower, upper),
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self.kind, AnswerKind::Exact(_))
    }
}

impl fmt::Display for RamseyAnswer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.kind {
            AnswerKind::Exact(v) => write!(f, "{v} ({})", self.source),
            AnswerKind::Bounds { lower, upper } => {
                write!(f, "BOUNDS [{lower},{upper}] ({})", self.source)
            }
        }
    }
}

/// Parity of `m`: 1 if odd, 0 if even.
pub fn parity(m: u64) -> u64 {
    m % 2
}

/// Whether `t` is a finite sum of integers drawn from `[max(s, 1), e]`.
///
/// The empty sum is allowed, so `t = 0` always qualifies. Non-positive lower
/// ends are clipped to 1 since summands are natural numbers.
pub fn interval_sum_contains(t: u64, s: i64, e: i64) -> bool {
    if t == 0 {
        return true;
    }
    let lo = s.max(1);
    if lo > e {
        return false;
    }
    let (lo, hi) = (lo as u64, e as u64);
    // k summands cover exactly [k*lo, k*hi].
    let k_min = t.div_ceil(hi);
    let k_max = t / lo;
    k_min <= k_max
}

/// Explicit formula for `R(P_n, K_{1,m})`.
pub fn t_closed(p: PathStarParams) -> u64 {
    let (n, m) = (p.n, p.m);
    // beta = ceil((m-1)/(n-1)); alpha <= gamma iff (m-1)(beta+1) <= beta^2 (n-1).
    let beta = (m - 1).div_ceil(n - 1);
    if (m - 1) * (beta + 1) <= beta * beta * (n - 1) {
        (n - 1) * beta + 1
    } else {
        (m - 1) / beta + m
    }
}

/// The least `t` that is not a sum of parts from `[t - m + 1, n - 1]`.
pub fn t_min_char(p: PathStarParams) -> u64 {
    let (n, m) = (p.n as i64, p.m as i64);
    let mut t: i64 = 1;
    loop {
        if !interval_sum_contains(t as u64, t - m + 1, n - 1) {
            return t as u64;
        }
        t += 1;
        // t = m + n - 1 gives the empty interval [n, n-1].
        debug_assert!(t < m + n);
    }
}

/// Memoized recursion for `R(P_n, K_{1,m})` built from the two closed rows,
/// the trivial row `n = 2`, and
/// `max{R(P_{n-1}, K_{1,m}), R(P_n, K_{1,m-n+1}) + n - 1}` for `m >= n + 1`.
#[derive(Debug, Default)]
pub struct ParsonsTable {
    memo: HashMap<(u64, u64), u64>,
}

impl ParsonsTable {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn value(&mut self, n: u64, m: u64) -> Result<u64> {
        PathStarParams::new(n, m)?;
        Ok(self.eval(n, m))
    }

    fn eval(&mut self, n: u64, m: u64) -> u64 {
        if n == 2 {
            return m + 1;
        }
        let half = n.div_ceil(2);
        if m <= half {
            return n;
        }
        if m <= n {
            return 2 * m - 1;
        }
        if let Some(&v) = self.memo.get(&(n, m)) {
            return v;
        }
        let v = self.eval(n - 1, m).max(self.eval(n, m - n + 1) + n - 1);
        self.memo.insert((n, m), v);
        v
    }
}

pub fn parsons_path_star(n: u64, m: u64) -> Result<u64> {
    ParsonsTable::new().value(n, m)
}

/// `R(P_n, K_{1,m})`.
///
/// With debug assertions on, the value is cross-checked against the other
/// two characterizations.
pub fn path_star(n: u64, m: u64) -> Result<u64> {
    let p = PathStarParams::new(n, m)?;
    let v = t_closed(p);
    debug_assert_eq!(
        v,
        t_min_char(p),
        "min-characterization disagrees at ({n},{m})"
    );
    debug_assert_eq!(
        Some(v),
        parsons_path_star(n, m).ok(),
        "recursion disagrees at ({n},{m})"
    );
    Ok(v)
}

pub fn path_star_answer(n: u64, m: u64) -> Result<RamseyAnswer> {
    Ok(RamseyAnswer::exact(path_star(n, m)?, Provenance::PathStar))
}

/// `R(P_n, C_m)` for `n >= 2`, `m >= 3`.
pub fn path_cycle(n: u64, m: u64) -> Result<u64> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    check_range("m", m, m >= 3, "cycle length m >= 3")?;
    let odd = m % 2 == 1;
    Ok(match (n >= m, odd) {
        (true, true) => 2 * n - 1,
        (true, false) => n + m / 2 - 1,
        (false, true) => (m + n / 2 - 1).max(2 * n - 1),
        (false, false) => m + n / 2 - 1,
    })
}

/// `R(P_n, W_m)` where `W_m` is a hub joined to a cycle `C_m`.
///
/// For `n = 2` the value is the trivial `m + 1`; the middle-range formula
/// `m + n - 2` would give 4 at `(2, 4)`, one short of the true 5.
pub fn path_wheel(n: u64, m: u64) -> Result<u64> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    check_range("m", m, m >= 3, "rim length m >= 3")?;
    if n == 2 {
        return Ok(m + 1);
    }
    let odd = m % 2 == 1;
    Ok(if m <= n + 1 {
        if odd {
            3 * n - 2
        } else {
            2 * n - 1
        }
    } else if m <= 2 * n {
        if odd {
            3 * n - 2
        } else {
            m + n - 2
        }
    } else {
        t_closed(PathStarParams { n, m })
    })
}

/// Lower bound `max{2n-1, ceil(3m/2)-1, m+n-o(F)-2}` for the middle range.
fn quasar_lower_bound(n: u64, m: u64, odd: u64) -> u64 {
    (2 * n - 1)
        .max((3 * m).div_ceil(2) - 1)
        .max(m + n - odd - 2)
}

/// `R(P_n, K_1 ∨ F)`: exact where known, otherwise lower and upper bounds.
pub fn path_quasar(n: u64, forest: &LinearForest) -> Result<RamseyAnswer> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    let m = forest.total_order();
    let odd = forest.odd_count();
    Ok(if m <= n {
        RamseyAnswer::exact(2 * n - 1, Provenance::QuasarSmallForest)
    } else if m >= 2 * n {
        RamseyAnswer::exact(
            t_closed(PathStarParams { n, m }),
            Provenance::QuasarLargeForest,
        )
    } else if odd == 0 {
        RamseyAnswer::exact(m + n - 2, Provenance::QuasarEvenComponents)
    } else {
        RamseyAnswer::bounds(
            quasar_lower_bound(n, m, odd),
            m + n - 2 + parity(m),
            Provenance::QuasarBounds,
        )
    })
}

/// Conjectured exact value of `R(P_n, K_1 ∨ F)` for `n + 1 <= m <= 2n - 1`.
pub fn conjecture_value(n: u64, forest: &LinearForest) -> Result<u64> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    let m = forest.total_order();
    if m < n + 1 || m > 2 * n - 1 {
        return Err(Error::OutOfRange {
            name: "m",
            value: m,
            expected: "forest order in [n+1, 2n-1]",
        });
    }
    Ok(quasar_lower_bound(n, m, forest.odd_count()))
}

/// `R(P_n, K_1 ∨ kK_2)`, the fan on `2k + 1` vertices.
pub fn path_fan(n: u64, k: u64) -> Result<RamseyAnswer> {
    check_range("n", n, n >= 2, "path order n >= 2")?;
    check_range("k", k, (1..=u64::from(u32::MAX)).contains(&k), "k >= 1")?;
    path_quasar(n, &LinearForest::matching(k as u32)?)
}
