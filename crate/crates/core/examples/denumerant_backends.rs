//! p_A(n) three ways: Popoviciu's formula, the DP table, and brute force.

use frob::denumerant::{count, dp_table, q_count};
use frob::{CountMethod, DenominationSet, Limits};

fn main() -> Result<(), frob::Error> {
    let limits = Limits::default();
    let coins: DenominationSet = "3,5".parse()?;

    for n in [0, 7, 15, 22, 37, 100, 1000] {
        let row: Vec<String> = [CountMethod::Popoviciu, CountMethod::Dp, CountMethod::Oracle]
            .iter()
            .map(|&m| format!("{m}={}", count(&coins, n, m, &limits).unwrap()))
            .collect();
        println!("p_{{{coins}}}({n}): {}", row.join(" "));
    }

    // Popoviciu needs exactly two coins; auto falls back to the DP.
    let trio: DenominationSet = "6,10,15".parse()?;
    println!(
        "p_{{{trio}}}(30) = {}",
        count(&trio, 30, CountMethod::Auto, &limits)?
    );
    println!(
        "q_{{{trio}}}(61) = {} (every coin at least once)",
        q_count(&trio, 61, CountMethod::Auto, &limits)?
    );

    // Saturated tables only distinguish "at most c" from "more".
    let capped = dp_table(&trio, 60, Some(3), &limits)?;
    let big = dp_table(&trio, 60, None, &limits)?;
    println!(
        "p(60): exact {}, capped at 3 -> {}",
        big.counts()[60],
        capped.counts()[60]
    );
    Ok(())
}
