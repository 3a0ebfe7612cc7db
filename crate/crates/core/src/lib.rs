//! Exact arithmetic for the Frobenius coin-exchange problem and its
//! k-representability extension.
//!
//! Given coins `A = {a_1, ..., a_d}` with `gcd(A) = 1`, this crate computes
//!
//! - the number of representations `p_A(n)` (the denumerant) by Popoviciu's
//!   closed form for two coins, a dynamic program for any number of coins,
//!   and brute-force enumeration ([`denumerant`], [`oracle`]);
//! - the k-Frobenius number `g_k(A)`, the largest integer with at most `k`
//!   representations, together with the smallest, the number, and the
//!   enclosing interval of integers with exactly `k` ([`frobenius`]);
//! - floating-point checks of the roots-of-unity identities behind the
//!   closed form ([`residues`]).
//!
//! ```
//! use frob::{frobenius, DenominationSet, Limits};
//!
//! let coins: DenominationSet = "3,5".parse().unwrap();
//! assert_eq!(frobenius::g_k(&coins, 1, &Limits::default()).unwrap(), 22);
//! ```

pub mod cli;
pub mod config;
pub mod denumerant;
pub mod error;
pub mod frobenius;
pub mod numth;
pub mod oracle;
pub mod residues;
pub mod suites;

pub use config::Limits;
pub use denumerant::{CountMethod, CountValue, DenumerantTable};
pub use error::{Error, Result};
pub use frobenius::KFrobeniusReport;
pub use numth::DenominationSet;
pub use oracle::Representation;
