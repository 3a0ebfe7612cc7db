//! Brute-force ground truth: explicit enumeration of multiplicity vectors.
//!
//! Deliberately slow and deliberately free of any code shared with the
//! denumerant backends, so that agreement between the two means something.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::denumerant::CountValue;
use crate::error::{Error, Result};
use crate::numth::DenominationSet;

/// One way of writing `n` as `m_1 a_1 + ... + m_d a_d`, multiplicities in
/// denomination order.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Representation(pub Vec<u64>);

impl Representation {
    pub fn multiplicities(&self) -> &[u64] {
        &self.0
    }

    /// `Σ m_i a_i`, or `None` on overflow or length mismatch.
    pub fn value(&self, denoms: &DenominationSet) -> Option<i64> {
        if self.0.len() != denoms.len() {
            return None;
        }
        self.0
            .iter()
            .zip(denoms.as_slice())
            .try_fold(0i64, |acc, (&m, &a)| {
                i64::try_from(m).ok()?.checked_mul(a)?.checked_add(acc)
            })
    }
}

impl fmt::Display for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{m}")?;
        }
        f.write_str(")")
    }
}

/// All representations of `n`, lexicographically ascending.
///
/// Fails with [`Error::ResourceLimit`] once more than `max_out` vectors
/// would be produced.
pub fn enumerate_reps(
    denoms: &DenominationSet,
    n: i64,
    max_out: usize,
) -> Result<Vec<Representation>> {
    if n < 0 {
        return Err(Error::invalid(format!("n must be nonnegative, got {n}")));
    }
    let coins = denoms.as_slice();
    let mut out = Vec::new();
    let mut current = vec![0u64; coins.len()];
    enumerate_into(coins, 0, n, &mut current, &mut out, max_out)?;
    Ok(out)
}

fn enumerate_into(
    coins: &[i64],
    idx: usize,
    remaining: i64,
    current: &mut [u64],
    out: &mut Vec<Representation>,
    max_out: usize,
) -> Result<()> {
    let a = coins[idx];
    if idx + 1 == coins.len() {
        if remaining % a == 0 {
            if out.len() >= max_out {
                return Err(Error::ResourceLimit {
                    what: "representation list",
                    requested: out.len() as u128 + 1,
                    ceiling: max_out as u128,
                });
            }
            current[idx] = (remaining / a) as u64;
            out.push(Representation(current.to_vec()));
        }
        return Ok(());
    }
    for m in 0..=remaining / a {
        current[idx] = m as u64;
        enumerate_into(coins, idx + 1, remaining - m * a, current, out, max_out)?;
    }
    current[idx] = 0;
    Ok(())
}

/// Number of representations of `n`, counted by the same exhaustive search
/// without materializing the vectors.
pub fn oracle_count(denoms: &DenominationSet, n: i64) -> Result<CountValue> {
    if n < 0 {
        return Err(Error::invalid(format!("n must be nonnegative, got {n}")));
    }
    // Loop over the larger coins and test divisibility by the smallest one
    // at the bottom; the count is order-independent.
    count_from_top(denoms.as_slice(), n).map(CountValue::new)
}

fn count_from_top(coins: &[i64], remaining: i64) -> Result<u64> {
    let (&a, rest) = coins.split_last().expect("nonempty coin list");
    if rest.is_empty() {
        return Ok(u64::from(remaining % a == 0));
    }
    let mut total = 0u64;
    let mut left = remaining;
    while left >= 0 {
        total = total
            .checked_add(count_from_top(rest, left)?)
            .ok_or(Error::Overflow("oracle count"))?;
        left -= a;
    }
    Ok(total)
}
