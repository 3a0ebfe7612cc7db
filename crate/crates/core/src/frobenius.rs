//! k-Frobenius numbers and the k-representable integers.
//!
//! An integer `n >= 1` is *k-representable* when `p_A(n) = k` exactly, and
//! `g_k(A)` is the largest integer with at most `k` representations (so every
//! larger integer has more than `k`). For two denominations everything has a
//! closed form; for three or more the answers come from saturated DP tables.

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::denumerant::{dp_table, DenumerantTable};
use crate::error::{Error, Result};
use crate::numth::{gcd, narrow, DenominationSet};

fn check_pair(a: i64, b: i64) -> Result<()> {
    if a < 1 || b < 1 {
        return Err(Error::invalid(format!(
            "denominations must be positive, got {a} and {b}"
        )));
    }
    let g = gcd(a, b);
    if g != 1 {
        return Err(Error::invalid(format!(
            "denominations {a} and {b} are not coprime (gcd {g})"
        )));
    }
    Ok(())
}

/// `g_k(a, b) = (k+1)ab - a - b`.
pub fn g_k_closed(a: i64, b: i64, k: u64) -> Result<i64> {
    check_pair(a, b)?;
    let (a, b) = (a as i128, b as i128);
    let v = (k as i128 + 1)
        .checked_mul(a * b)
        .ok_or(Error::Overflow("g_k"))?
        - a
        - b;
    narrow(v, "g_k")
}

/// Number of positive integers with no representation: `(a-1)(b-1)/2`.
pub fn count_nonrep(a: i64, b: i64) -> Result<u64> {
    check_pair(a, b)?;
    let v = (a as i128 - 1) * (b as i128 - 1) / 2;
    u64::try_from(v).map_err(|_| Error::Overflow("non-representable count"))
}

/// Number of k-representable integers for `k >= 1`: `ab - 1` when `k = 1`,
/// `ab` otherwise.
pub fn count_k_rep(a: i64, b: i64, k: u64) -> Result<u64> {
    check_pair(a, b)?;
    if k == 0 {
        return Err(Error::invalid(
            "count_k_rep needs k >= 1; use count_nonrep for k = 0",
        ));
    }
    let ab = a as i128 * b as i128;
    let v = if k == 1 { ab - 1 } else { ab };
    u64::try_from(v).map_err(|_| Error::Overflow("k-representable count"))
}

/// Smallest interval holding every k-representable integer, `k >= 2`:
/// `[g_{k-2} + a + b, g_k]`.
pub fn k_rep_interval(a: i64, b: i64, k: u64) -> Result<(i64, i64)> {
    if k < 2 {
        return Err(Error::invalid(format!(
            "k_rep_interval needs k >= 2, got {k}"
        )));
    }
    let lo = g_k_closed(a, b, k - 2)?
        .checked_add(a)
        .and_then(|v| v.checked_add(b))
        .ok_or(Error::Overflow("interval start"))?;
    Ok((lo, g_k_closed(a, b, k)?))
}

/// Start of the first run of `run_len` consecutive cells whose count
/// exceeds `k`.
fn first_window(table: &DenumerantTable, k: u64, run_len: usize) -> Option<usize> {
    let mut run = 0;
    for (n, &c) in table.counts().iter().enumerate() {
        if c > k {
            run += 1;
            if run == run_len {
                return Some(n + 1 - run_len);
            }
        } else {
            run = 0;
        }
    }
    None
}

/// `g_k(A)` for any number of denominations.
///
/// Grows a table saturated at `k+1` until it contains `min(A)` consecutive
/// integers that each have more than `k` representations. Adding one
/// smallest coin never lowers a count, so every later integer then has more
/// than `k` representations too, and `g_k` is the last integer before that
/// run with at most `k`.
pub fn g_k_search(denoms: &DenominationSet, k: u64, limits: &Limits) -> Result<i64> {
    let cap = k.checked_add(1).ok_or(Error::Overflow("saturation cap"))?;
    let run_len = denoms.min() as usize;
    let ceiling = limits.max_table_cells.saturating_sub(1) as i128;
    let mut horizon = match limits.horizon {
        Some(h) => h as i128,
        None => 2 * (k as i128 + 1) * (denoms.max() as i128).pow(2),
    }
    .max(denoms.min() as i128);

    loop {
        let h = horizon.min(ceiling);
        let table = dp_table(denoms, h as i64, Some(cap), limits)?;
        if let Some(start) = first_window(&table, k, run_len) {
            let last_low = table.counts()[..start].iter().rposition(|&c| c <= k);
            return Ok(last_low.map_or(-1, |n| n as i64));
        }
        if h >= ceiling {
            return Err(Error::ResourceLimit {
                what: "g_k search table",
                requested: (2 * h + 1) as u128,
                ceiling: limits.max_table_cells as u128,
            });
        }
        horizon = h * 2;
    }
}

/// `g_k` by the closed form for pairs and by search otherwise.
pub fn g_k(denoms: &DenominationSet, k: u64, limits: &Limits) -> Result<i64> {
    match denoms.as_pair() {
        Some((a, b)) => g_k_closed(a, b, k),
        None => g_k_search(denoms, k, limits),
    }
}

/// Least `n >= 1` with exactly `k` representations, `k >= 1`.
///
/// Pairs use the closed forms `min(a, b)` for `k = 1` and `ab(k-1)` for
/// `k >= 2`; larger sets go through [`smallest_k_rep_search`].
pub fn smallest_k_rep(denoms: &DenominationSet, k: u64, limits: &Limits) -> Result<i64> {
    if k == 0 {
        return Err(Error::invalid("smallest_k_rep needs k >= 1"));
    }
    match denoms.as_pair() {
        Some((a, _)) if k == 1 => Ok(a),
        Some((a, b)) => narrow(a as i128 * b as i128 * (k as i128 - 1), "smallest k-rep"),
        None => smallest_k_rep_search(denoms, k, limits),
    }
}

/// Scans a table saturated at `k+2` up to `g_k` for the first integer with
/// exactly `k` representations. No such integer can lie beyond `g_k`.
pub fn smallest_k_rep_search(denoms: &DenominationSet, k: u64, limits: &Limits) -> Result<i64> {
    if k == 0 {
        return Err(Error::invalid("smallest_k_rep needs k >= 1"));
    }
    let horizon = g_k_search(denoms, k, limits)?;
    let not_found = Error::NotFoundBelowHorizon { k, horizon };
    if horizon < 1 {
        return Err(not_found);
    }
    let cap = k.checked_add(2).ok_or(Error::Overflow("saturation cap"))?;
    let table = dp_table(denoms, horizon, Some(cap), limits)?;
    let first = table.rows().skip(1).find(|&(_, c)| c == k);
    first.map(|(n, _)| n).ok_or(not_found)
}

/// All `n >= 1` with exactly `k` representations, ascending.
///
/// The scan runs to `g_k`, beyond which no count can equal `k`, so the list
/// is complete. A `horizon` truncates it further. `k = 0` lists the
/// non-representable positive integers.
pub fn list_k_rep(
    denoms: &DenominationSet,
    k: u64,
    horizon: Option<i64>,
    limits: &Limits,
) -> Result<Vec<i64>> {
    let mut bound = g_k(denoms, k, limits)?;
    if let Some(h) = horizon {
        bound = bound.min(h);
    }
    if bound < 1 {
        return Ok(Vec::new());
    }
    let cap = k.checked_add(2).ok_or(Error::Overflow("saturation cap"))?;
    let table = dp_table(denoms, bound, Some(cap), limits)?;
    Ok(table
        .rows()
        .skip(1)
        .filter(|&(_, c)| c == k)
        .map(|(n, _)| n)
        .collect())
}

/// Everything known about k-representability for one `(A, k)`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct KFrobeniusReport {
    pub denoms: DenominationSet,
    pub k: u64,
    pub g_k: i64,
    /// Absent for `k = 0`, and when no integer has exactly `k` representations.
    pub smallest_k_rep: Option<i64>,
    /// For `k = 0`, the number of non-representable positive integers.
    pub count_k_rep: u64,
    /// Smallest interval holding all k-representable integers; absent when
    /// there are none.
    pub interval: Option<(i64, i64)>,
}

/// Closed forms for pairs; enumeration up to `g_k` otherwise.
pub fn k_frobenius_report(
    denoms: &DenominationSet,
    k: u64,
    limits: &Limits,
) -> Result<KFrobeniusReport> {
    let (smallest, count, interval, g) = match denoms.as_pair() {
        Some((a, b)) => {
            let g = g_k_closed(a, b, k)?;
            match k {
                0 => {
                    let c = count_nonrep(a, b)?;
                    (None, c, (c > 0).then_some((1, g)), g)
                }
                1 => (Some(a), count_k_rep(a, b, 1)?, Some((a, g)), g),
                _ => {
                    let iv = k_rep_interval(a, b, k)?;
                    (Some(iv.0), count_k_rep(a, b, k)?, Some(iv), g)
                }
            }
        }
        None => {
            let g = g_k_search(denoms, k, limits)?;
            let list = list_k_rep(denoms, k, None, limits)?;
            let interval = list.first().zip(list.last()).map(|(&lo, &hi)| (lo, hi));
            let smallest = if k == 0 { None } else { list.first().copied() };
            (smallest, list.len() as u64, interval, g)
        }
    };
    Ok(KFrobeniusReport {
        denoms: denoms.clone(),
        k,
        g_k: g,
        smallest_k_rep: smallest,
        count_k_rep: count,
        interval,
    })
}
