//! Range tables for path-star and fan values, plus an oracle comparison.

use std::collections::HashMap;
use std::fmt::Write as _;
use std::path::PathBuf;

use clap::Args;
use qramsey_core::formulas::{parsons_path_star, path_fan, t_closed, PathStarParams};
use qramsey_core::oracle::{append_log, ramsey_exact, read_log, LogEntry, MAX_ORACLE_ORDER};
use qramsey_core::{LinearForest, Pattern, RamseyQuery};

use crate::Failure;

#[derive(Args)]
pub struct TableArgs {
    #[arg(long, default_value_t = 9)]
    n_max: u64,
    #[arg(long, default_value_t = 12)]
    m_max: u64,
    #[arg(long, default_value_t = 8)]
    k_max: u64,
    /// Largest value compared against the oracle.
    #[arg(long, default_value_t = 9)]
    cap: usize,
    /// Reuse and extend a JSON-lines results log.
    #[arg(long)]
    log: Option<PathBuf>,
}

pub fn run(args: &TableArgs) -> Result<(), Failure> {
    if args.n_max < 2 || args.m_max < 2 || args.k_max < 1 {
        return Err(Failure::Usage(
            "need --n-max >= 2, --m-max >= 2, --k-max >= 1".into(),
        ));
    }
    if args.cap > MAX_ORACLE_ORDER {
        return Err(Failure::Usage(format!(
            "--cap is at most {MAX_ORACLE_ORDER}"
        )));
    }
    let mut out = String::new();
    star_table(args, &mut out)?;
    out.push('\n');
    fan_table(args, &mut out)?;
    out.push('\n');
    let mismatches = oracle_table(args, &mut out)?;
    print!("{out}");
    if mismatches > 0 {
        return Err(Failure::Consistency(format!(
            "{mismatches} oracle cell(s) disagree with the formulas"
        )));
    }
    Ok(())
}

fn star_range(n: u64, m: u64) -> char {
    if m <= n.div_ceil(2) {
        'a'
    } else if m <= n {
        'b'
    } else {
        'c'
    }
}

fn star_table(args: &TableArgs, out: &mut String) -> Result<(), Failure> {
    out.push_str("Theorem 1: R(P_n, K_1,m)\n");
    out.push_str("  (a) 2 <= m <= ceil(n/2)   n\n");
    out.push_str("  (b) ceil(n/2) < m <= n    2m - 1\n");
    out.push_str("  (c) m >= n + 1            max{R(P_n-1, K_1,m), R(P_n, K_1,m-n+1) + n - 1}\n");
    out.push_str("  (n = 2 is the row m + 1)\n\n");
    header(out, "n\\m", 2..=args.m_max);
    for n in 2..=args.n_max {
        let _ = write!(out, "{n:>5}");
        for m in 2..=args.m_max {
            let t = t_closed(PathStarParams::new(n, m)?);
            let expected = match star_range(n, m) {
                _ if n == 2 => m + 1,
                'a' => n,
                'b' => 2 * m - 1,
                _ => parsons_path_star(n, m)?,
            };
            if t != expected {
                return Err(Failure::Consistency(format!(
                    "closed form {t} disagrees with the range formula {expected} at (n, m) = ({n}, {m})"
                )));
            }
            let _ = write!(
                out,
                " {:>4}{}",
                t,
                if n == 2 { ' ' } else { star_range(n, m) }
            );
        }
        out.push('\n');
    }
    Ok(())
}

fn fan_table(args: &TableArgs, out: &mut String) -> Result<(), Failure> {
    out.push_str("Corollary 2: R(P_n, K_1 + kK_2), forest on m = 2k vertices\n");
    out.push_str("  (a) 2k <= n         2n - 1\n");
    out.push_str("  (b) n < 2k < 2n     2k + n - 2\n");
    out.push_str("  (c) 2k >= 2n        R(P_n, K_1,2k)\n\n");
    header(out, "n\\k", 1..=args.k_max);
    for n in 2..=args.n_max {
        let _ = write!(out, "{n:>5}");
        for k in 1..=args.k_max {
            let m = 2 * k;
            let (tag, expected) = if m <= n {
                ('a', 2 * n - 1)
            } else if m < 2 * n {
                ('b', m + n - 2)
            } else {
                ('c', t_closed(PathStarParams::new(n, m)?))
            };
            let v = path_fan(n, k)?.exact_value().ok_or_else(|| {
                Failure::Consistency(format!("fan (n, k) = ({n}, {k}) has no exact value"))
            })?;
            if v != expected {
                return Err(Failure::Consistency(format!(
                    "fan value {v} disagrees with range ({tag}) at (n, k) = ({n}, {k})"
                )));
            }
            let _ = write!(out, " {v:>4}{tag}");
        }
        out.push('\n');
    }
    Ok(())
}

fn header(out: &mut String, corner: &str, cols: std::ops::RangeInclusive<u64>) {
    let _ = write!(out, "{corner:>5}");
    for c in cols {
        let _ = write!(out, " {c:>4} ");
    }
    out.push('\n');
}

/// Every star and fan cell whose formula value is at most `cap`.
fn small_cells(cap: u64) -> Result<Vec<(RamseyQuery, u64)>, Failure> {
    let mut cells = Vec::new();
    // Both values are at least n + 1 and grow with m and k.
    for n in 2..cap {
        for m in 2.. {
            let v = t_closed(PathStarParams::new(n, m)?);
            if v > cap {
                break;
            }
            cells.push((RamseyQuery::new(n as u32, Pattern::Star(m as u32))?, v));
        }
    }
    for n in 2..cap {
        for k in 1.. {
            let Some(v) = path_fan(n, k)?.exact_value() else {
                break;
            };
            if v > cap {
                break;
            }
            let target = Pattern::Quasar(LinearForest::matching(k as u32)?);
            cells.push((RamseyQuery::new(n as u32, target)?, v));
        }
    }
    Ok(cells)
}

fn oracle_table(args: &TableArgs, out: &mut String) -> Result<usize, Failure> {
    let cap = args.cap as u64;
    let mut cached: HashMap<RamseyQuery, usize> = HashMap::new();
    if let Some(path) = &args.log {
        if path.exists() {
            let entries =
                read_log(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
            for e in entries {
                cached.insert(e.query(), e.value);
            }
        }
    }
    let _ = writeln!(out, "Oracle vs formula (cells with value <= {cap})");
    let _ = writeln!(
        out,
        "{:<16} {:>3} {:>8} {:>7}",
        "target", "n", "formula", "oracle"
    );
    let mut mismatches = 0;
    let cells = small_cells(cap)?;
    for (query, formula) in &cells {
        let value = match cached.get(query) {
            Some(&v) => v,
            None => {
                let result = ramsey_exact(query, args.cap)?;
                if let Some(path) = &args.log {
                    append_log(path, &LogEntry::new(query, &result))
                        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
                }
                result.ramsey_value
            }
        };
        let ok = value as u64 == *formula;
        if !ok {
            mismatches += 1;
        }
        let _ = writeln!(
            out,
            "{:<16} {:>3} {:>8} {:>7}{}",
            query.target.to_string(),
            query.n,
            formula,
            value,
            if ok { "" } else { "  MISMATCH" }
        );
    }
    let _ = writeln!(
        out,
        "{} of {} cells agree",
        cells.len() - mismatches,
        cells.len()
    );
    Ok(mismatches)
}
