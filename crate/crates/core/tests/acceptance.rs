//! Acceptance suite. Each criterion runs to exact equality (or its stated
//! floating-point tolerance) and must finish within its stated time budget.
//! Prints one PASS/FAIL line per criterion; exits non-zero if any fails.

use std::process::Command;
use std::time::{Duration, Instant};

use frob::denumerant::{dp_table, popoviciu_count};
use frob::frobenius::{
    count_k_rep, count_nonrep, g_k_closed, g_k_search, k_rep_interval, list_k_rep, smallest_k_rep,
};
use frob::numth::gcd;
use frob::oracle::oracle_count;
use frob::residues::{residue_route_count, verify_exercise4, verify_exercise5};
use frob::{DenominationSet, Limits};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

type Outcome = Result<String, String>;

struct Criterion {
    name: &'static str,
    budget: Option<Duration>,
    run: fn() -> Outcome,
}

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn pairs(max: i64) -> Vec<(i64, i64)> {
    (1..=max)
        .flat_map(|b| (1..b).map(move |a| (a, b)))
        .filter(|&(a, b)| gcd(a, b) == 1)
        .collect()
}

fn set(a: i64, b: i64) -> DenominationSet {
    DenominationSet::pair(a, b).unwrap()
}

fn p(s: &DenominationSet, n: i64) -> u64 {
    oracle_count(s, n).unwrap().get()
}

/// Run `check` on every pair in parallel, reporting the first failure.
fn each_pair(max: i64, check: impl Fn(i64, i64) -> Result<(), String> + Sync) -> Outcome {
    let ps = pairs(max);
    ps.par_iter().try_for_each(|&(a, b)| check(a, b))?;
    Ok(format!("{} pairs", ps.len()))
}

fn gk_closed_form() -> Outcome {
    let l = Limits::default();
    each_pair(20, |a, b| {
        let s = set(a, b);
        for k in 0..=10u64 {
            let expected = (k as i64 + 1) * a * b - a - b;
            let closed = g_k_closed(a, b, k).unwrap();
            let searched = g_k_search(&s, k, &l).unwrap();
            ensure!(
                closed == expected && searched == expected,
                "({a},{b}) k={k}: closed {closed}, search {searched}, expected {expected}"
            );
            if expected >= 0 {
                ensure!(p(&s, expected) <= k, "({a},{b}) p(g_{k}) > {k}");
            }
            for n in (expected + 1).max(0)..=expected + 2 * a * b {
                ensure!(p(&s, n) > k, "({a},{b}) p({n}) <= {k} above g_{k}");
            }
        }
        Ok(())
    })
}

fn sylvester_count() -> Outcome {
    each_pair(30, |a, b| {
        let s = set(a, b);
        let g0 = a * b - a - b;
        let gaps = (1..=g0).filter(|&n| p(&s, n) == 0).count() as i64;
        let half = (a - 1) * (b - 1) / 2;
        ensure!(gaps == half, "({a},{b}): {gaps} gaps, expected {half}");
        ensure!(
            count_nonrep(a, b).unwrap() as i64 == half,
            "({a},{b}) count_nonrep"
        );
        let representable = (1..=(a - 1) * (b - 1)).filter(|&n| p(&s, n) > 0).count() as i64;
        ensure!(
            representable + gaps == (a - 1) * (b - 1) && representable == gaps,
            "({a},{b}): {representable} representable vs {gaps} gaps"
        );
        Ok(())
    })
}

fn smallest_k_representable() -> Outcome {
    let l = Limits::default();
    each_pair(20, |a, b| {
        let s = set(a, b);
        let counts: Vec<u64> = (0..=7 * a * b).map(|n| p(&s, n)).collect();
        let least = |k: u64| {
            (1..counts.len())
                .find(|&n| counts[n] == k)
                .map(|n| n as i64)
        };
        ensure!(least(1) == Some(a.min(b)), "({a},{b}) k=1: {:?}", least(1));
        ensure!(
            smallest_k_rep(&s, 1, &l).unwrap() == a,
            "({a},{b}) closed k=1"
        );
        for k in 2..=8u64 {
            let expected = a * b * (k as i64 - 1);
            ensure!(
                least(k) == Some(expected),
                "({a},{b}) k={k}: {:?} vs {expected}",
                least(k)
            );
            ensure!(
                smallest_k_rep(&s, k, &l).unwrap() == expected,
                "({a},{b}) closed k={k}"
            );
        }
        Ok(())
    })
}

fn k_representable_counts() -> Outcome {
    let l = Limits::default();
    each_pair(20, |a, b| {
        let s = set(a, b);
        for k in 1..=8u64 {
            let g = g_k_closed(a, b, k).unwrap();
            let table = dp_table(&s, g, None, &l).unwrap();
            let found = table.counts()[1..].iter().filter(|&&c| c == k).count() as i64;
            let expected = if k == 1 { a * b - 1 } else { a * b };
            ensure!(found == expected, "({a},{b}) k={k}: {found} vs {expected}");
            ensure!(
                count_k_rep(a, b, k).unwrap() as i64 == expected,
                "({a},{b}) closed k={k}"
            );
            ensure!(
                list_k_rep(&s, k, None, &l).unwrap().len() as i64 == expected,
                "({a},{b}) list length k={k}"
            );
        }
        Ok(())
    })
}

fn corollary_interval() -> Outcome {
    let l = Limits::default();
    each_pair(20, |a, b| {
        let s = set(a, b);
        for k in 2..=8u64 {
            let list = list_k_rep(&s, k, None, &l).unwrap();
            let got = (list[0], list[list.len() - 1]);
            let expected = (
                g_k_closed(a, b, k - 2).unwrap() + a + b,
                g_k_closed(a, b, k).unwrap(),
            );
            ensure!(got == expected, "({a},{b}) k={k}: {got:?} vs {expected:?}");
            ensure!(
                k_rep_interval(a, b, k).unwrap() == expected,
                "({a},{b}) closed k={k}"
            );
        }
        Ok(())
    })
}

fn popoviciu_backends() -> Outcome {
    let l = Limits::default();
    each_pair(25, |a, b| {
        let s = set(a, b);
        let table = dp_table(&s, 3 * a * b, None, &l).unwrap();
        for (n, dp) in table.rows() {
            let pop = popoviciu_count(a, b, n).unwrap().get();
            let oracle = p(&s, n);
            ensure!(
                pop == dp && dp == oracle,
                "({a},{b}) n={n}: {pop} {dp} {oracle}"
            );
        }
        Ok(())
    })
}

fn periodicity_and_reflection() -> Outcome {
    each_pair(25, |a, b| {
        let ab = a * b;
        let pc = |n: i64| popoviciu_count(a, b, n).unwrap().get();
        let table = dp_table(&set(a, b), 4 * ab, None, &Limits::default()).unwrap();
        let dp = |n: i64| table.counts()[n as usize];
        for n in 0..=3 * ab {
            ensure!(pc(n + ab) == pc(n) + 1, "({a},{b}) periodicity at {n}");
            ensure!(dp(n + ab) == dp(n) + 1, "({a},{b}) dp periodicity at {n}");
        }
        for n in (1..ab).filter(|n| n % a != 0 && n % b != 0) {
            ensure!(pc(n) + pc(ab - n) == 1, "({a},{b}) reflection at {n}");
            ensure!(dp(n) + dp(ab - n) == 1, "({a},{b}) dp reflection at {n}");
        }
        Ok(())
    })
}

fn asymptotic_bound() -> Outcome {
    each_pair(25, |a, b| {
        let ab = (a * b) as i128;
        for n in 0..=3 * a * b {
            // -1 < p - n/ab <= 1, multiplied through by ab > 0
            let scaled = ab * popoviciu_count(a, b, n).unwrap().get() as i128 - n as i128;
            ensure!(-ab < scaled && scaled <= ab, "({a},{b}) n={n}");
        }
        Ok(())
    })
}

fn residue_identities() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(20);
    let mut samples = 0;
    let mut worst = 0.0f64;
    while samples < 1000 {
        let a = rng.gen_range(2..=20i64);
        let b = rng.gen_range(1..=20i64);
        if gcd(a, b) != 1 {
            continue;
        }
        let n = rng.gen_range(-2000..=2000i64);
        let v4 = verify_exercise4(a, n, 1e-9).unwrap();
        let v5 = verify_exercise5(a, b, n, 1e-9).unwrap();
        ensure!(
            v4.holds,
            "unity-sum identity ({a},{n}): residual {}",
            v4.residual
        );
        ensure!(
            v5.holds,
            "twisted-sum identity ({a},{b},{n}): residual {}",
            v5.residual
        );
        worst = worst.max(v4.residual).max(v5.residual);
        samples += 1;
    }
    let mut reassembled = 0;
    for (a, b) in pairs(15) {
        for n in 1..=a * b {
            let approx = residue_route_count(a, b, n).unwrap();
            let exact = popoviciu_count(a, b, n).unwrap().get() as f64;
            let close = (approx - exact).abs() <= 1e-6;
            ensure!(close, "({a},{b}) n={n}: {approx} vs {exact}");
            reassembled += 1;
        }
    }
    Ok(format!(
        "{samples} sampled triples, worst residual {worst:.1e}; {reassembled} reassembled counts"
    ))
}

fn general_d() -> Outcome {
    let l = Limits::default();
    let mut found = Vec::new();
    for denoms in [[2, 3, 7], [6, 10, 15], [3, 5, 7]] {
        let s = DenominationSet::new(denoms.to_vec()).unwrap();
        let searched = g_k_search(&s, 0, &l).unwrap();
        let oracle = (0..=1000).rev().find(|&n| p(&s, n) == 0).unwrap_or(-1);
        ensure!(
            searched == oracle,
            "{s}: search {searched}, oracle {oracle}"
        );
        found.push(format!("g({s})={searched}"));
    }
    Ok(found.join(" "))
}

fn cli_transcripts() -> Outcome {
    let cases: &[(&[&str], i32, &str)] = &[
        (&["gk", "--denoms", "3,5", "--k", "0"], 0, "7\n"),
        (&["gk", "--denoms", "6,10,15", "--k", "0"], 0, "29\n"),
        (&["gk", "--denoms", "4,6", "--k", "0"], 2, ""),
        (&["count", "--denoms", "3,5", "--n", "15"], 0, "2\n"),
        (
            &["reps", "--denoms", "2,3,7", "--n", "10"],
            0,
            "(0,1,1)\n(2,2,0)\n(5,0,0)\n",
        ),
        (&["list", "--denoms", "3,5", "--k", "0"], 0, "1\n2\n4\n7\n"),
        (
            &["table", "--denoms", "3,5", "--max", "3", "--format", "csv"],
            0,
            "n,count\n0,1\n1,0\n2,0\n3,1\n",
        ),
    ];
    for (args, code, expected) in cases {
        let out = Command::new(env!("CARGO_BIN_EXE_frob"))
            .args(*args)
            .output()
            .map_err(|e| e.to_string())?;
        let stdout = String::from_utf8_lossy(&out.stdout);
        ensure!(
            out.status.code() == Some(*code),
            "{args:?}: exit {:?}",
            out.status.code()
        );
        ensure!(stdout == *expected, "{args:?}: got {stdout:?}");
        if *code == 2 {
            ensure!(
                String::from_utf8_lossy(&out.stderr).contains("gcd"),
                "{args:?}: stderr"
            );
        }
    }
    let verify = Command::new(env!("CARGO_BIN_EXE_frob"))
        .args(["verify", "--suite", "all"])
        .output()
        .map_err(|e| e.to_string())?;
    ensure!(
        verify.status.success(),
        "verify --suite all failed:\n{}",
        String::from_utf8_lossy(&verify.stdout)
    );
    Ok(format!(
        "{} transcripts, verify --suite all exit 0",
        cases.len()
    ))
}

fn main() {
    let secs = |s| Some(Duration::from_secs(s));
    let criteria = [
        Criterion {
            name: "g_k closed form = search = oracle (a<b<=20, k<=10)",
            budget: secs(30),
            run: gk_closed_form,
        },
        Criterion {
            name: "Sylvester count (a-1)(b-1)/2 (a<b<=30)",
            budget: secs(10),
            run: sylvester_count,
        },
        Criterion {
            name: "smallest k-representable = ab(k-1), min(a,b) for k=1",
            budget: secs(30),
            run: smallest_k_representable,
        },
        Criterion {
            name: "k-representable counts ab-1 / ab (k<=8)",
            budget: secs(30),
            run: k_representable_counts,
        },
        Criterion {
            name: "interval [g_(k-2)+a+b, g_k] (k in 2..8)",
            budget: None,
            run: corollary_interval,
        },
        Criterion {
            name: "Popoviciu = DP = oracle (a<b<=25, n<=3ab)",
            budget: secs(60),
            run: popoviciu_backends,
        },
        Criterion {
            name: "periodicity p(n+ab)=p(n)+1 and reflection p(n)+p(ab-n)=1",
            budget: None,
            run: periodicity_and_reflection,
        },
        Criterion {
            name: "bound -1 < p(n) - n/ab <= 1 (exact)",
            budget: None,
            run: asymptotic_bound,
        },
        Criterion {
            name: "roots-of-unity identities <= 1e-9, reassembled count <= 1e-6",
            budget: secs(10),
            run: residue_identities,
        },
        Criterion {
            name: "d=3 g_0 search = oracle for {2,3,7} {6,10,15} {3,5,7}",
            budget: secs(5),
            run: general_d,
        },
        Criterion {
            name: "CLI golden transcripts and verify --suite all",
            budget: None,
            run: cli_transcripts,
        },
    ];

    let mut failures = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let outcome = match (outcome, c.budget) {
            (Ok(_), Some(b)) if elapsed > b => Err(format!("took {elapsed:.2?}, budget {b:?}")),
            (o, _) => o,
        };
        match outcome {
            Ok(detail) => println!("PASS  {}  [{detail}; {elapsed:.2?}]", c.name),
            Err(why) => {
                failures += 1;
                println!("FAIL  {}  [{why}; {elapsed:.2?}]", c.name);
            }
        }
    }
    println!(
        "acceptance: {} passed, {failures} failed",
        criteria.len() - failures
    );
    if failures > 0 {
        std::process::exit(1);
    }
}
