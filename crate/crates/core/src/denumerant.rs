//! The restricted partition function `p_A(n)`: the number of ways to write
//! `n` as a nonnegative combination of the denominations in `A`.
//!
//! Two backends live here. [`popoviciu_count`] is the O(1) closed form for
//! two coprime denominations; [`dp_table`] is the coin-combination DP that
//! works for any set. The brute-force third opinion is in [`crate::oracle`].

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::error::{Error, Result};
use crate::numth::{gcd, mod_inverse, DenominationSet};
use crate::oracle;

/// An exact representation count.
#[derive(
    Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize, Deserialize,
)]
#[serde(transparent)]
pub struct CountValue(u64);

impl CountValue {
    pub const ZERO: CountValue = CountValue(0);

    pub fn new(count: u64) -> Self {
        CountValue(count)
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn checked_add(self, other: CountValue) -> Result<CountValue> {
        self.0
            .checked_add(other.0)
            .map(CountValue)
            .ok_or(Error::Overflow("representation count"))
    }
}

impl fmt::Display for CountValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl From<CountValue> for u64 {
    fn from(c: CountValue) -> u64 {
        c.0
    }
}

/// `(x^{-1} mod m) * (n mod m) mod m`; zero when `m == 1`.
fn scaled_residue(x: i64, n: i64, m: i64) -> Result<i128> {
    if m == 1 {
        return Ok(0);
    }
    let inv = mod_inverse(x, m)? as i128;
    Ok(inv * n.rem_euclid(m) as i128 % m as i128)
}

/// Popoviciu's closed form for `p_{a,b}(n)`.
///
/// Evaluated in integers as `(n - t1 b - t2 a) / (ab) + 1` where
/// `t1 = b^{-1} n mod a` and `t2 = a^{-1} n mod b`; the division is exact.
/// Negative `n` has no representations.
pub fn popoviciu_count(a: i64, b: i64, n: i64) -> Result<CountValue> {
    if a < 1 || b < 1 {
        return Err(Error::invalid(format!(
            "denominations must be positive, got {a} and {b}"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::invalid(format!(
            "denominations {a} and {b} are not coprime (gcd {})",
            gcd(a, b)
        )));
    }
    if n < 0 {
        return Ok(CountValue::ZERO);
    }
    let t1 = scaled_residue(b, n, a)?;
    let t2 = scaled_residue(a, n, b)?;
    let (a, b) = (a as i128, b as i128);
    let numer = n as i128 - t1 * b - t2 * a;
    let ab = a * b;
    if numer % ab != 0 {
        return Err(Error::Internal(format!(
            "Popoviciu numerator {numer} not divisible by {ab}"
        )));
    }
    let p = numer / ab + 1;
    u64::try_from(p)
        .map(CountValue)
        .map_err(|_| Error::Internal(format!("Popoviciu produced negative count {p}")))
}

/// Table of `p_A(0..=limit)`, optionally saturated at `cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenumerantTable {
    denoms: DenominationSet,
    limit: usize,
    counts: Vec<u64>,
    cap: Option<u64>,
}

impl DenumerantTable {
    pub fn denoms(&self) -> &DenominationSet {
        &self.denoms
    }

    pub fn limit(&self) -> usize {
        self.limit
    }

    pub fn cap(&self) -> Option<u64> {
        self.cap
    }

    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    /// `p_A(n)` (or `min(p_A(n), cap)`); zero for negative `n`, `None`
    /// beyond the table.
    pub fn get(&self, n: i64) -> Option<u64> {
        if n < 0 {
            return Some(0);
        }
        self.counts.get(usize::try_from(n).ok()?).copied()
    }

    /// `(n, count)` rows in ascending `n`.
    pub fn rows(&self) -> impl Iterator<Item = (i64, u64)> + '_ {
        self.counts.iter().enumerate().map(|(n, &c)| (n as i64, c))
    }
}

/// Builds `p_A(0..=limit)` by folding in one denomination at a time:
/// `p_{A}(n) = p_{A \ {a}}(n) + p_{A}(n - a)`.
///
/// With `cap = Some(c)` every cell holds `min(p_A(n), c)` and the build can
/// never overflow. Without a cap, overflow is reported.
pub fn dp_table(
    denoms: &DenominationSet,
    limit: i64,
    cap: Option<u64>,
    limits: &Limits,
) -> Result<DenumerantTable> {
    if limit < 0 {
        return Err(Error::invalid(format!(
            "table limit must be nonnegative, got {limit}"
        )));
    }
    if cap == Some(0) {
        return Err(Error::invalid("saturation cap must be positive"));
    }
    let cells = limit as u128 + 1;
    if cells > limits.max_table_cells as u128 {
        return Err(Error::ResourceLimit {
            what: "denumerant table",
            requested: cells,
            ceiling: limits.max_table_cells as u128,
        });
    }
    let limit = limit as usize;
    let mut counts = vec![0u64; limit + 1];
    counts[0] = 1;
    for &a in denoms.as_slice() {
        let a = a as usize;
        if a > limit {
            continue;
        }
        match cap {
            Some(c) => {
                for n in a..=limit {
                    counts[n] = counts[n].saturating_add(counts[n - a]).min(c);
                }
            }
            None => {
                for n in a..=limit {
                    counts[n] = counts[n]
                        .checked_add(counts[n - a])
                        .ok_or(Error::Overflow("denumerant table"))?;
                }
            }
        }
    }
    Ok(DenumerantTable {
        denoms: denoms.clone(),
        limit,
        counts,
        cap,
    })
}

/// Backend selection for [`count`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CountMethod {
    /// Popoviciu for two denominations, DP otherwise.
    #[default]
    Auto,
    Popoviciu,
    Dp,
    Oracle,
}

impl CountMethod {
    pub fn as_str(self) -> &'static str {
        match self {
            CountMethod::Auto => "auto",
            CountMethod::Popoviciu => "popoviciu",
            CountMethod::Dp => "dp",
            CountMethod::Oracle => "oracle",
        }
    }

    /// The concrete backend this method runs for `denoms`.
    pub fn resolve(self, denoms: &DenominationSet) -> Result<CountMethod> {
        match self {
            CountMethod::Auto if denoms.len() == 2 => Ok(CountMethod::Popoviciu),
            CountMethod::Auto => Ok(CountMethod::Dp),
            CountMethod::Popoviciu if denoms.len() != 2 => Err(Error::MethodMismatch {
                method: "popoviciu",
                got: denoms.len(),
            }),
            m => Ok(m),
        }
    }
}

impl fmt::Display for CountMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for CountMethod {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "auto" => Ok(CountMethod::Auto),
            "popoviciu" => Ok(CountMethod::Popoviciu),
            "dp" => Ok(CountMethod::Dp),
            "oracle" => Ok(CountMethod::Oracle),
            other => Err(Error::invalid(format!("unknown count method {other:?}"))),
        }
    }
}

/// `p_A(n)` via the chosen backend. Negative `n` gives zero.
pub fn count(
    denoms: &DenominationSet,
    n: i64,
    method: CountMethod,
    limits: &Limits,
) -> Result<CountValue> {
    let backend = method.resolve(denoms)?;
    if n < 0 {
        return Ok(CountValue::ZERO);
    }
    match backend {
        CountMethod::Popoviciu => {
            let (a, b) = denoms.as_pair().expect("resolved to a pair");
            popoviciu_count(a, b, n)
        }
        CountMethod::Dp => {
            let table = dp_table(denoms, n, None, limits)?;
            Ok(CountValue(table.counts[n as usize]))
        }
        CountMethod::Oracle => oracle::oracle_count(denoms, n),
        CountMethod::Auto => unreachable!("resolve never returns Auto"),
    }
}

/// `q_A(n)`: representations using every denomination at least once,
/// computed as `p_A(n - Σ a_i)`.
pub fn q_count(
    denoms: &DenominationSet,
    n: i64,
    method: CountMethod,
    limits: &Limits,
) -> Result<CountValue> {
    let shifted = n.checked_sub(denoms.sum()?);
    match shifted {
        Some(m) if m >= 0 => count(denoms, m, method, limits),
        // Resolve anyway so a bad method is reported consistently.
        _ => method.resolve(denoms).map(|_| CountValue::ZERO),
    }
}
