//! g_k for two coins: the closed form next to the table search.
//!
//!     cargo run -p frob --example frobenius_numbers -- 3 5

use frob::frobenius::{g_k_closed, g_k_search};
use frob::{DenominationSet, Limits};

fn main() -> Result<(), frob::Error> {
    let args: Vec<i64> = std::env::args()
        .skip(1)
        .map(|a| a.parse().expect("integer argument"))
        .collect();
    let (a, b) = match args[..] {
        [a, b] => (a, b),
        _ => (3, 5),
    };
    let coins = DenominationSet::pair(a, b)?;
    let limits = Limits::default();

    println!("coins {coins}");
    println!("{:>3} {:>10} {:>10}", "k", "closed", "search");
    for k in 0..=6 {
        let closed = g_k_closed(a, b, k)?;
        let searched = g_k_search(&coins, k, &limits)?;
        assert_eq!(closed, searched);
        println!("{k:>3} {closed:>10} {searched:>10}");
    }
    Ok(())
}
