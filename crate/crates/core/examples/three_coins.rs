//! Three or more coins: no closed forms, so everything is found by search.

use frob::frobenius::{g_k_search, smallest_k_rep};
use frob::{DenominationSet, Error, Limits};

fn main() -> Result<(), Error> {
    let limits = Limits::default();
    for spec in ["2,3,7", "6,10,15", "3,5,7"] {
        let coins: DenominationSet = spec.parse()?;
        let g: Vec<i64> = (0..=4)
            .map(|k| g_k_search(&coins, k, &limits))
            .collect::<Result<_, _>>()?;
        println!("{{{coins}}}: g_0..g_4 = {g:?}");
        for k in 1..=4 {
            match smallest_k_rep(&coins, k, &limits) {
                Ok(n) => println!("  smallest with exactly {k} representations: {n}"),
                Err(Error::NotFoundBelowHorizon { horizon, .. }) => {
                    println!("  nothing has exactly {k} representations (checked to {horizon})")
                }
                Err(e) => return Err(e),
            }
        }
    }
    Ok(())
}
