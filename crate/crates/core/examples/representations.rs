//! Enumerate every way to make change, straight from the definition.

use frob::oracle::enumerate_reps;
use frob::DenominationSet;

fn main() -> Result<(), frob::Error> {
    let coins: DenominationSet = "2,3,7".parse()?;
    for n in [10, 14, 21] {
        let reps = enumerate_reps(&coins, n, 1_000)?;
        println!("{n} = ... over {{{coins}}}: {} ways", reps.len());
        for r in &reps {
            let terms: Vec<String> = r
                .multiplicities()
                .iter()
                .zip(coins.as_slice())
                .filter(|(m, _)| **m > 0)
                .map(|(m, a)| format!("{m}*{a}"))
                .collect();
            println!("  {r}  {}", terms.join(" + "));
        }
    }
    Ok(())
}
