//! Self-verification suites: each one re-derives a known identity over a
//! set of coin sets and tallies how many individual checks pass.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::config::Limits;
use crate::denumerant::{dp_table, popoviciu_count};
use crate::error::{Error, Result};
use crate::frobenius::{
    count_k_rep, count_nonrep, g_k_closed, g_k_search, k_rep_interval, list_k_rep, smallest_k_rep,
};
use crate::numth::{gcd, DenominationSet};
use crate::oracle::oracle_count;
use crate::residues::{default_tolerance, residue_route_count, verify_exercise4, verify_exercise5};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Suite {
    /// Popoviciu vs DP vs oracle, plus the `n/ab` error bound.
    Popoviciu,
    Periodicity,
    Reflection,
    Residues,
    /// Closed-form k-Frobenius quantities against the search route.
    Frobenius,
    All,
}

impl Suite {
    pub const EACH: [Suite; 5] = [
        Suite::Popoviciu,
        Suite::Periodicity,
        Suite::Reflection,
        Suite::Residues,
        Suite::Frobenius,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Suite::Popoviciu => "popoviciu",
            Suite::Periodicity => "periodicity",
            Suite::Reflection => "reflection",
            Suite::Residues => "residues",
            Suite::Frobenius => "frobenius",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.as_str() == s)
            .ok_or_else(|| Error::invalid(format!("unknown suite {s:?}")))
    }
}

/// Tally for one suite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub passed: u64,
    pub failed: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub first_failure: Option<String>,
}

#[derive(Debug, Default)]
struct Tally {
    passed: u64,
    failed: u64,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        if ok {
            self.passed += 1;
        } else {
            self.failed += 1;
            if self.first_failure.is_none() {
                self.first_failure = Some(what());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.passed += other.passed;
        self.failed += other.failed;
        self.first_failure = self.first_failure.or(other.first_failure);
        self
    }
}

/// Every coprime pair `a < b <= max` as a coin set.
pub fn coprime_pairs(max: i64) -> Vec<DenominationSet> {
    (1..=max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .map(|(a, b)| DenominationSet::pair(a, b).expect("coprime pair"))
        .collect()
}

/// Runs `suite` over `sets`, one report per concrete suite (`All` expands).
pub fn run_suite(
    suite: Suite,
    sets: &[DenominationSet],
    max_k: u64,
    limits: &Limits,
) -> Result<Vec<SuiteReport>> {
    let suites: Vec<Suite> = match suite {
        Suite::All => Suite::EACH.to_vec(),
        s => vec![s],
    };
    suites
        .into_iter()
        .map(|s| {
            let tally = sets
                .par_iter()
                .map(|set| check_one(s, set, max_k, limits))
                .try_reduce(Tally::default, |x, y| Ok(x.merge(y)))?;
            Ok(SuiteReport {
                suite: s.as_str().to_string(),
                passed: tally.passed,
                failed: tally.failed,
                first_failure: tally.first_failure,
            })
        })
        .collect()
}

fn check_one(suite: Suite, set: &DenominationSet, max_k: u64, limits: &Limits) -> Result<Tally> {
    let mut t = Tally::default();
    match (suite, set.as_pair()) {
        (Suite::Popoviciu, pair) => {
            let top = match pair {
                Some((a, b)) => 3 * a * b,
                None => 3 * set.max() * set.max(),
            };
            let table = dp_table(set, top, None, limits)?;
            for (n, dp) in table.rows() {
                let oracle = oracle_count(set, n)?.get();
                t.check(dp == oracle, || {
                    format!("{set}: dp {dp} != oracle {oracle} at n={n}")
                });
                if let Some((a, b)) = pair {
                    let pop = popoviciu_count(a, b, n)?.get();
                    t.check(pop == dp, || {
                        format!("{set}: popoviciu {pop} != dp {dp} at n={n}")
                    });
                    // -1 < p - n/ab <= 1, scaled by ab
                    let ab = (a * b) as i128;
                    let scaled = ab * dp as i128 - n as i128;
                    t.check(-ab < scaled && scaled <= ab, || {
                        format!("{set}: p({n}) = {dp} outside n/ab bound")
                    });
                }
            }
        }
        (Suite::Periodicity, Some((a, b))) => {
            let ab = a * b;
            let table = dp_table(set, 4 * ab, None, limits)?;
            let c = table.counts();
            for n in 0..=(3 * ab) as usize {
                let (lo, hi) = (c[n], c[n + ab as usize]);
                t.check(hi == lo + 1, || {
                    format!("{set}: p({}) = {hi}, p({n}) = {lo}", n + ab as usize)
                });
            }
        }
        (Suite::Reflection, Some((a, b))) => {
            let ab = a * b;
            let table = dp_table(set, ab, None, limits)?;
            let c = table.counts();
            for n in (1..ab).filter(|n| n % a != 0 && n % b != 0) {
                let s = c[n as usize] + c[(ab - n) as usize];
                t.check(s == 1, || format!("{set}: p({n}) + p({}) = {s}", ab - n));
            }
        }
        (Suite::Residues, Some((a, b))) => {
            let tol = default_tolerance(b);
            for n in 0..=a * b {
                for (m, other) in [(a, b), (b, a)] {
                    if m < 2 {
                        continue;
                    }
                    let v4 = verify_exercise4(m, n, tol)?;
                    t.check(v4.holds, || {
                        format!("unity sum ({m}, {n}) residual {}", v4.residual)
                    });
                    let v5 = verify_exercise5(m, other, n, tol)?;
                    t.check(v5.holds, || {
                        format!("twisted sum ({m}, {other}, {n}) residual {}", v5.residual)
                    });
                }
                let approx = residue_route_count(a, b, n)?;
                let exact = popoviciu_count(a, b, n)?.get() as f64;
                t.check((approx - exact).abs() <= 1e-6, || {
                    format!("{set}: residue route {approx} vs popoviciu {exact} at n={n}")
                });
            }
        }
        (Suite::Frobenius, Some((a, b))) => {
            for k in 0..=max_k {
                let closed = g_k_closed(a, b, k)?;
                let searched = g_k_search(set, k, limits)?;
                t.check(closed == searched, || {
                    format!("{set}: g_{k} closed {closed} vs search {searched}")
                });
                let list = list_k_rep(set, k, None, limits)?;
                let expected = if k == 0 {
                    count_nonrep(a, b)?
                } else {
                    count_k_rep(a, b, k)?
                };
                t.check(list.len() as u64 == expected, || {
                    format!(
                        "{set}: {} {k}-representable, expected {expected}",
                        list.len()
                    )
                });
                if k >= 1 {
                    let s = smallest_k_rep(set, k, limits)?;
                    t.check(list.first() == Some(&s), || {
                        format!(
                            "{set}: smallest {k}-representable {s} vs {:?}",
                            list.first()
                        )
                    });
                }
                if k >= 2 {
                    let iv = k_rep_interval(a, b, k)?;
                    let got = list.first().zip(list.last()).map(|(x, y)| (*x, *y));
                    t.check(got == Some(iv), || {
                        format!("{set}: interval {iv:?} vs {got:?}")
                    });
                }
            }
        }
        (Suite::Frobenius, None) => {
            let window = 2 * set.max();
            for k in 0..=max_k {
                let g = g_k_search(set, k, limits)?;
                if g >= 0 {
                    let at = oracle_count(set, g)?.get();
                    t.check(at <= k, || format!("{set}: p(g_{k} = {g}) = {at} > {k}"));
                }
                for n in (g + 1).max(0)..=g + window {
                    let c = oracle_count(set, n)?.get();
                    t.check(c > k, || {
                        format!("{set}: p({n}) = {c} <= {k} beyond g_{k} = {g}")
                    });
                }
            }
        }
        (Suite::All, _) => unreachable!("expanded by run_suite"),
        // pair-only suites have nothing to say about larger sets
        (_, None) => {}
    }
    Ok(t)
}
