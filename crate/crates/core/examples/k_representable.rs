//! Which integers have exactly k representations, and where they live.

use frob::frobenius::{k_frobenius_report, list_k_rep};
use frob::{DenominationSet, Limits};

fn main() -> Result<(), frob::Error> {
    let limits = Limits::default();
    let coins = DenominationSet::pair(3, 5)?;

    for k in 0..=4 {
        let r = k_frobenius_report(&coins, k, &limits)?;
        println!(
            "k={k}: g_k={:<4} smallest={:<8} count={:<4} interval={:?}",
            r.g_k,
            r.smallest_k_rep.map_or("-".to_string(), |v| v.to_string()),
            r.count_k_rep,
            r.interval,
        );
    }

    println!(
        "non-representable: {:?}",
        list_k_rep(&coins, 0, None, &limits)?
    );
    println!(
        "exactly twice:     {:?}",
        list_k_rep(&coins, 2, None, &limits)?
    );
    Ok(())
}
