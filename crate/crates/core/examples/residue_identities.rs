//! The roots-of-unity sums behind Popoviciu's formula, evaluated numerically.

use frob::denumerant::popoviciu_count;
use frob::residues::{residue_route_count, unity_sum, verify_exercise4, verify_exercise5};

fn main() -> Result<(), frob::Error> {
    for (a, n) in [(2, 0), (3, 1), (5, 7), (50, 1234)] {
        let s = unity_sum(a, n)?;
        let v = verify_exercise4(a, n, 1e-9)?;
        println!(
            "unity sum a={a} n={n}: {:.12} (residual {:.1e})",
            s.value, v.residual
        );
    }

    let v = verify_exercise5(7, 3, 11, 1e-9)?;
    println!(
        "twisted sum a=7 b=3 n=11 holds={} residual {:.1e}",
        v.holds, v.residual
    );

    let (a, b) = (4, 7);
    for n in [1, 10, 17, 28, 100] {
        println!(
            "p_{{{a},{b}}}({n}): residues {:.9}  exact {}",
            residue_route_count(a, b, n)? + 0.0,
            popoviciu_count(a, b, n)?
        );
    }
    Ok(())
}
