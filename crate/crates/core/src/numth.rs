//! Integer primitives: gcd, modular inverse, exact fractional parts, and the
//! validated coin set every other module works over.
//!
//! Everything here is exact. Fractional parts are kept as `(residue, denom)`
//! pairs and never touch floating point.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

pub fn gcd(a: i64, b: i64) -> i64 {
    let (mut a, mut b) = (a.unsigned_abs(), b.unsigned_abs());
    while b != 0 {
        (a, b) = (b, a % b);
    }
    // gcd(i64::MIN, 0) is 2^63, which does not fit; callers only pass
    // positive values so saturate rather than wrap.
    i64::try_from(a).unwrap_or(i64::MAX)
}

/// Greatest common divisor of a nonempty list of positive integers.
pub fn gcd_all(values: &[i64]) -> Result<i64> {
    let (first, rest) = values
        .split_first()
        .ok_or_else(|| Error::invalid("gcd of an empty list"))?;
    if let Some(bad) = values.iter().find(|&&v| v < 1) {
        return Err(Error::invalid(format!(
            "gcd inputs must be positive, got {bad}"
        )));
    }
    Ok(rest.iter().fold(*first, |g, &v| gcd(g, v)))
}

/// Extended Euclid: returns `(g, x, y)` with `a*x + b*y = g = gcd(a, b)`.
pub fn ext_gcd(a: i64, b: i64) -> (i64, i64, i64) {
    let (mut old_r, mut r) = (a as i128, b as i128);
    let (mut old_x, mut x) = (1i128, 0i128);
    let (mut old_y, mut y) = (0i128, 1i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_x, x) = (x, old_x - q * x);
        (old_y, y) = (y, old_y - q * y);
    }
    if old_r < 0 {
        (old_r, old_x, old_y) = (-old_r, -old_x, -old_y);
    }
    // |x| <= |b|/g and |y| <= |a|/g, so these always fit back into i64.
    (old_r as i64, old_x as i64, old_y as i64)
}

/// Inverse of `x` modulo `m`, normalized into `[1, m-1]`.
pub fn mod_inverse(x: i64, m: i64) -> Result<i64> {
    if m < 2 {
        return Err(Error::invalid(format!(
            "modulus must be at least 2, got {m}"
        )));
    }
    let (g, s, _) = ext_gcd(x.rem_euclid(m), m);
    if g != 1 {
        return Err(Error::NoInverse {
            value: x,
            modulus: m,
            gcd: g,
        });
    }
    Ok(s.rem_euclid(m))
}

/// Exact fractional part `{numer / denom}`, held as `residue / denom` with
/// `0 <= residue < denom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Frac {
    pub residue: i64,
    pub denom: i64,
}

impl Frac {
    pub fn is_zero(self) -> bool {
        self.residue == 0
    }

    pub fn to_f64(self) -> f64 {
        self.residue as f64 / self.denom as f64
    }
}

impl fmt::Display for Frac {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.residue, self.denom)
    }
}

/// `{numer / denom}` computed as `(numer mod denom) / denom`.
///
/// Panics if `denom < 1`.
pub fn frac_times(numer: i64, denom: i64) -> Frac {
    assert!(denom >= 1, "fractional part needs a positive denominator");
    Frac {
        residue: numer.rem_euclid(denom),
        denom,
    }
}

pub(crate) fn narrow(v: i128, what: &'static str) -> Result<i64> {
    i64::try_from(v).map_err(|_| Error::Overflow(what))
}

/// A validated coin set: at least two distinct positive denominations,
/// sorted ascending, with overall gcd 1.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<i64>", into = "Vec<i64>")]
pub struct DenominationSet {
    denoms: Vec<i64>,
}

impl DenominationSet {
    /// Validates and sorts `denoms`. Duplicates are rejected, not merged.
    pub fn new(mut denoms: Vec<i64>) -> Result<Self> {
        if denoms.len() < 2 {
            return Err(Error::invalid(format!(
                "need at least two denominations, got {}",
                denoms.len()
            )));
        }
        if let Some(bad) = denoms.iter().find(|&&v| v < 1) {
            return Err(Error::invalid(format!(
                "denominations must be positive, got {bad}"
            )));
        }
        denoms.sort_unstable();
        if let Some(w) = denoms.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::invalid(format!("duplicate denomination {}", w[0])));
        }
        let g = gcd_all(&denoms)?;
        if g != 1 {
            return Err(Error::invalid(format!(
                "denominations must have gcd 1, got gcd {g}"
            )));
        }
        Ok(DenominationSet { denoms })
    }

    pub fn pair(a: i64, b: i64) -> Result<Self> {
        Self::new(vec![a, b])
    }

    pub fn as_slice(&self) -> &[i64] {
        &self.denoms
    }

    pub fn len(&self) -> usize {
        self.denoms.len()
    }

    /// Always false; a valid set has at least two elements.
    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn min(&self) -> i64 {
        self.denoms[0]
    }

    pub fn max(&self) -> i64 {
        self.denoms[self.denoms.len() - 1]
    }

    /// `(a, b)` when the set has exactly two elements.
    pub fn as_pair(&self) -> Option<(i64, i64)> {
        match self.denoms[..] {
            [a, b] => Some((a, b)),
            _ => None,
        }
    }

    pub fn sum(&self) -> Result<i64> {
        self.denoms
            .iter()
            .try_fold(0i64, |acc, &v| acc.checked_add(v))
            .ok_or(Error::Overflow("sum of denominations"))
    }
}

impl TryFrom<Vec<i64>> for DenominationSet {
    type Error = Error;

    fn try_from(v: Vec<i64>) -> Result<Self> {
        Self::new(v)
    }
}

impl From<DenominationSet> for Vec<i64> {
    fn from(d: DenominationSet) -> Self {
        d.denoms
    }
}

impl FromStr for DenominationSet {
    type Err = Error;

    /// Parses a comma-separated list such as `"5, 3"`.
    fn from_str(s: &str) -> Result<Self> {
        let denoms = s
            .split(',')
            .map(|t| {
                let t = t.trim();
                t.parse::<i64>()
                    .map_err(|_| Error::invalid(format!("not an integer: {t:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(denoms)
    }
}

impl fmt::Display for DenominationSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, d) in self.denoms.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        Ok(())
    }
}
