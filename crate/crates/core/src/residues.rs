//! Numerical checks of the roots-of-unity identities behind Popoviciu's
//! formula, in double precision.
//!
//! With `f(z) = 1 / ((1 - z^a)(1 - z^b) z^{n+1})` the residues of `f` sum to
//! zero, which gives
//!
//! ```text
//! p(n) = n/ab + 1/2a + 1/2b + (1/a) Σ_{λ^a=1≠λ} 1/((1-λ^b) λ^n)
//!                           + (1/b) Σ_{μ^b=1≠μ} 1/((1-μ^a) μ^n)
//! ```
//!
//! [`residue_route_count`] evaluates that directly. The two verifiers check
//! the identities that collapse each sum to a fractional part.
//!
//! Every root is computed as `exp(2πi r / a)` with `r` reduced mod `a` in
//! integer arithmetic, so no rounding accumulates across terms and large
//! exponents `n` cost nothing extra.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::numth::{frac_times, gcd, mod_inverse};

/// `exp(2πi · index / modulus)` with the index reduced exactly.
fn root(modulus: i64, index: i128) -> Complex64 {
    let r = index.rem_euclid(modulus as i128) as f64;
    Complex64::from_polar(1.0, TAU * r / modulus as f64)
}

/// `Σ_{j=1}^{a-1} 1 / ((1 - λ_j^b) λ_j^n)` with `λ_j = exp(2πij/a)`.
fn twisted_sum(a: i64, b: i64, n: i64) -> Complex64 {
    (1..a)
        .map(|j| {
            let j = j as i128;
            let denom =
                (Complex64::new(1.0, 0.0) - root(a, j * b as i128)) * root(a, j * n as i128);
            denom.inv()
        })
        .sum()
}

/// The value of `(1/a) Σ_{λ^a=1≠λ} 1/((1-λ) λ^n)` for one `(a, n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UnityRootSum {
    pub modulus: i64,
    pub shift: i64,
    pub value: Complex64,
}

pub fn unity_sum(a: i64, n: i64) -> Result<UnityRootSum> {
    if a < 2 {
        return Err(Error::invalid(format!(
            "modulus must be at least 2, got {a}"
        )));
    }
    Ok(UnityRootSum {
        modulus: a,
        shift: n,
        value: twisted_sum(a, 1, n) / a as f64,
    })
}

/// Outcome of a numerical identity check.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Verification {
    pub holds: bool,
    pub residual: f64,
}

impl Verification {
    fn new(residual: f64, tol: f64) -> Self {
        Verification {
            holds: residual <= tol,
            residual,
        }
    }
}

/// Checks `(1/a) Σ 1/((1-λ) λ^n) = -{n/a} + 1/2 - 1/(2a)`.
///
/// The residual is the complex distance between the two sides, so a stray
/// imaginary part counts against it.
pub fn verify_exercise4(a: i64, n: i64, tol: f64) -> Result<Verification> {
    let lhs = unity_sum(a, n)?.value;
    let rhs = -frac_times(n, a).to_f64() + 0.5 - 0.5 / a as f64;
    Ok(Verification::new((lhs - rhs).norm(), tol))
}

/// Checks `Σ 1/((1-λ^b) λ^n) = Σ 1/((1-λ) λ^{b^{-1} n})` over the nontrivial
/// `a`-th roots of unity.
pub fn verify_exercise5(a: i64, b: i64, n: i64, tol: f64) -> Result<Verification> {
    if a < 2 || b < 1 {
        return Err(Error::invalid(format!(
            "need a >= 2 and b >= 1, got a = {a}, b = {b}"
        )));
    }
    if gcd(a, b) != 1 {
        return Err(Error::invalid(format!("{a} and {b} are not coprime")));
    }
    let b_inv = mod_inverse(b, a)?;
    let lhs = twisted_sum(a, b, n);
    let shifted = (b_inv as i128 * n as i128).rem_euclid(a as i128) as i64;
    let rhs = twisted_sum(a, 1, shifted);
    Ok(Verification::new((lhs - rhs).norm(), tol))
}

/// `p_{a,b}(n)` reassembled from the residues of `f`, as a float.
///
/// Either sum is empty when its modulus is 1.
pub fn residue_route_count(a: i64, b: i64, n: i64) -> Result<f64> {
    if a < 1 || b < 1 || gcd(a, b) != 1 {
        return Err(Error::invalid(format!(
            "need coprime positive denominations, got {a} and {b}"
        )));
    }
    if n < 0 {
        return Err(Error::invalid(format!("n must be nonnegative, got {n}")));
    }
    let (af, bf) = (a as f64, b as f64);
    let sums = twisted_sum(a, b, n) / af + twisted_sum(b, a, n) / bf;
    Ok(n as f64 / (af * bf) + 0.5 / af + 0.5 / bf + sums.re)
}

/// Tolerance for identities over moduli up to `modulus`: `1e-9` through 20,
/// `1e-6` beyond.
pub fn default_tolerance(modulus: i64) -> f64 {
    if modulus <= 20 {
        1e-9
    } else {
        1e-6
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unity_sum_examples() {
        let s = unity_sum(2, 0).unwrap();
        assert!((s.value - Complex64::new(0.25, 0.0)).norm() < 1e-15);
        // The identity side is -1/3 + 1/2 - 1/6 = 0, and so is the sum:
        // the two terms are 1/(i√3) and 1/(-i√3).
        let s = unity_sum(3, 1).unwrap();
        assert!(s.value.norm() < 1e-15, "{:?}", s.value);
        assert!(unity_sum(1, 0).is_err());
    }

    #[test]
    fn unity_sum_is_periodic() {
        for a in 2..15 {
            for n in -20..40 {
                let x = unity_sum(a, n).unwrap().value;
                let y = unity_sum(a, n + a).unwrap().value;
                let z = unity_sum(a, n.rem_euclid(a)).unwrap().value;
                assert!((x - y).norm() < 1e-12);
                assert!((x - z).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn unity_sum_identity_examples() {
        assert!(verify_exercise4(5, 7, 1e-9).unwrap().holds);
        let v = verify_exercise4(2, 0, 1e-12).unwrap();
        assert!(v.holds && v.residual < 1e-15);
        assert!(verify_exercise4(50, 1234, 1e-6).unwrap().holds);
    }

    #[test]
    fn twisted_sum_identity_examples() {
        assert!(verify_exercise5(3, 5, 4, 1e-9).unwrap().holds);
        assert!(verify_exercise5(2, 3, 0, 1e-12).unwrap().holds);
        assert!(verify_exercise5(7, 3, 11, 1e-8).unwrap().holds);
        assert!(verify_exercise5(6, 4, 1, 1e-9).is_err());
    }

    #[test]
    fn a_false_identity_fails() {
        // Shifting the right-hand exponent by one breaks the twisted-sum identity.
        let lhs = twisted_sum(7, 3, 11);
        let wrong = twisted_sum(7, 1, 11 * 5 % 7 + 1);
        assert!((lhs - wrong).norm() > 1e-3);
    }

    #[test]
    fn residue_route_matches_known_counts() {
        assert!((residue_route_count(3, 5, 37).unwrap() - 2.0).abs() < 1e-9);
        assert!((residue_route_count(4, 7, 100).unwrap() - 4.0).abs() < 1e-9);
        assert!((residue_route_count(1, 1, 9).unwrap() - 10.0).abs() < 1e-9);
        assert!(residue_route_count(4, 6, 1).is_err());
    }
}
