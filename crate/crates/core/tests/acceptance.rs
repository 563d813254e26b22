//! Acceptance criteria, each run once with a time budget. Prints one line
//! per criterion and fails if any criterion fails.

mod common;

use std::time::{Duration, Instant};

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hankelforge::families::{
    catalan_lk, motzkin_lk_via_chebyshev, verify_closed_form, DetFamilyId, NamedFamily,
};
use hankelforge::hankel::{bareiss_det, default_truncation, det_sequence};
use hankelforge::identities::{
    check_cigler_st, check_convolution_identity, check_main_theorem, lucas_l, lucas_t,
    lucas_triangle, IdentityReport, Instance, Parity, QuadraticFamily,
};
use hankelforge::series::rat;
use hankelforge::tau::{direct_dets, fixtures, iterate_tau, replay_trace};
use hankelforge::{Polynomial, PowerSeries, Rational};

type Check = std::result::Result<(), String>;

/// Name, check and time budget in seconds.
type Criterion = (&'static str, fn() -> Check, u64);

fn ints(v: &[i64]) -> Vec<Rational> {
    v.iter().map(|&x| rat(x)).collect()
}

fn expect_eq<T: PartialEq + std::fmt::Debug>(what: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{what}: got {got:?}, expected {want:?}"))
    }
}

fn c1_example_sequences() -> Check {
    let cases: [(u32, i64, [i64; 21]); 4] = [
        (
            4,
            -4,
            [
                1, 0, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1,
            ],
        ),
        (
            4,
            -2,
            [
                1, 0, 0, -1, -1, 0, 0, 1, 0, 0, 0, 0, 1, 0, 0, -1, -1, 0, 0, 1, 0,
            ],
        ),
        (
            3,
            -3,
            [
                1, 0, 0, 0, 1, 0, -1, 2, 0, -2, 3, 0, -3, 4, 0, -4, 5, 0, -5, 6, 0,
            ],
        ),
        (
            3,
            -1,
            [
                1, 0, -1, 2, 0, -2, 3, 0, -3, 4, 0, -4, 5, 0, -5, 6, 0, -6, 7, 0, -7,
            ],
        ),
    ];
    let motzkin = NamedFamily::Motzkin.quadratic();
    for (power, shift, want) in cases {
        let f = motzkin
            .solve(default_truncation(shift, 20))
            .map_err(|e| e.to_string())?;
        let got = det_sequence(&f, power, shift, 20).map_err(|e| e.to_string())?;
        expect_eq(&format!("D_{{{power},{shift}}}"), got, ints(&want))?;
    }
    Ok(())
}

fn holds(report: &IdentityReport, describe: impl Fn(&Instance) -> String) -> Check {
    match report.failures().next() {
        Some(bad) => Err(describe(bad)),
        None => Ok(()),
    }
}

fn closed_forms(ids: &[DetFamilyId]) -> Check {
    for &id in ids {
        let report = verify_closed_form(id, 60).map_err(|e| e.to_string())?;
        holds(&report, |bad| format!("{id}: {bad}"))?;
    }
    Ok(())
}

fn c2_d33_closed_form() -> Check {
    closed_forms(&[DetFamilyId::D33])
}

fn c3_d2m_closed_forms() -> Check {
    closed_forms(&[DetFamilyId::D21, DetFamilyId::D22, DetFamilyId::D23])
}

fn theorem_grid(fam: &QuadraticFamily) -> Check {
    for k in 1..=3 {
        for m in 0..=3 {
            for parity in [Parity::Even, Parity::Odd] {
                let report = check_main_theorem(fam, k, m, parity, 8).map_err(|e| e.to_string())?;
                holds(&report, |bad| format!("{}: {bad}", report.claim))?;
            }
        }
    }
    Ok(())
}

fn c4_catalan_grid() -> Check {
    theorem_grid(&NamedFamily::Catalan.quadratic())
}

fn c5_motzkin_grid() -> Check {
    theorem_grid(&NamedFamily::Motzkin.quadratic())
}

fn c6_convolution_identity() -> Check {
    for fam in NamedFamily::builtins() {
        for k in 1..=8 {
            let report =
                check_convolution_identity(&fam.quadratic(), k, 30).map_err(|e| e.to_string())?;
            holds(&report, |bad| format!("{fam}: {bad}"))?;
        }
    }
    Ok(())
}

fn c7_catalan_lk() -> Check {
    let catalan = NamedFamily::Catalan.quadratic();
    for k in 1..=12 {
        let lk = lucas_l(&catalan, k);
        expect_eq(&format!("L_{k}"), &lk, &catalan_lk(k))?;
        expect_eq(&format!("deg L_{k}"), lk.degree(), Some(k as usize / 2))?;
    }
    Ok(())
}

fn c8_chebyshev() -> Check {
    let motzkin = NamedFamily::Motzkin.quadratic();
    for k in 1..=12 {
        expect_eq(
            &format!("L_{k}"),
            motzkin_lk_via_chebyshev(k),
            lucas_l(&motzkin, k),
        )?;
    }
    Ok(())
}

fn c9_lemma_property_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0009);
    for case in 0..100 {
        let coeffs = common::random_unit_polynomial(&mut rng, 6, 5);
        let m = rand::Rng::gen_range(&mut rng, 0..=4usize);
        let n = rand::Rng::gen_range(&mut rng, 0..=6usize);
        let s = PowerSeries::from_polynomial(&Polynomial::from_ints(&coeffs), 2 * n + m + 1);
        let report = check_cigler_st(&s, m, n).map_err(|e| e.to_string())?;
        holds(&report, |bad| format!("case {case}, s = {coeffs:?}: {bad}"))?;
    }
    Ok(())
}

fn c10_tau_engine() -> Check {
    let trace = iterate_tau(&fixtures::motzkin_cube(), 6);
    if trace.len() < 4 {
        return Err(format!(
            "trace stopped after {} steps: {:?}",
            trace.len(),
            trace.stop_reason()
        ));
    }
    let g0 = direct_dets(trace.equation(0), 16).map_err(|e| e.to_string())?;
    let g1 = direct_dets(trace.equation(1), 16).map_err(|e| e.to_string())?;
    let g2 = direct_dets(trace.equation(2), 16).map_err(|e| e.to_string())?;
    let g11 = direct_dets(&fixtures::motzkin_g1(1).map_err(|e| e.to_string())?, 16)
        .map_err(|e| e.to_string())?;
    for k in 7..=16 {
        expect_eq(&format!("G0 vs G1 at k={k}"), &g0[k], &g1[k - 4])?;
        expect_eq(&format!("G0 vs G2 at k={k}"), &g0[k], &-&g2[k - 6])?;
        let chained = -(num_traits::pow(rat(-2), k - 6) * &g11[k - 7]);
        expect_eq(&format!("G0 vs G1^(1) at k={k}"), &g0[k], &chained)?;
        let composed = trace
            .pull_back(0, 4, k, &|m| Ok(g11[m].clone()))
            .map_err(|e| e.to_string())?;
        expect_eq(&format!("composed relations at k={k}"), &composed, &g0[k])?;
    }
    for name in fixtures::NAMES {
        let eq = fixtures::by_name(name).map_err(|e| e.to_string())?;
        let direct = direct_dets(&eq, 16).map_err(|e| e.to_string())?;
        let replayed = replay_trace(&iterate_tau(&eq, 6), 16).map_err(|e| e.to_string())?;
        expect_eq(&format!("replay of {name}"), replayed, direct)?;
    }
    Ok(())
}

fn c11_bareiss_vs_cofactors() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_0011);
    for case in 0..50 {
        let m = common::random_matrix(&mut rng, 5, 20);
        let want = common::cofactor_det(&m);
        let got = std::panic::catch_unwind(|| bareiss_det(m.clone()))
            .map_err(|_| format!("case {case}: panicked"))?;
        expect_eq(&format!("case {case}"), got, want)?;
    }
    Ok(())
}

fn c12_lucas_triangle() -> Check {
    let rows = lucas_triangle(20);
    for k in 1..=20u32 {
        let closed: Vec<BigInt> = (0..=k / 2).map(|i| lucas_t(k, i)).collect();
        expect_eq(&format!("row {k}"), &rows[k as usize - 1], &closed)?;
    }
    // u = -1, v w = -x makes L_k = sum_i T(k,i) x^i
    let fam = QuadraticFamily::new(
        Polynomial::from_ints(&[-1]),
        Polynomial::from_ints(&[-1]),
        Polynomial::x_pow(1),
    )
    .map_err(|e| e.to_string())?;
    let lucas = [1, 3, 4, 7, 11, 18, 29, 47, 76, 123];
    for k in 1..=10u32 {
        let row_sum: BigInt = rows[k as usize - 1].iter().sum();
        expect_eq(
            &format!("row sum {k}"),
            row_sum,
            BigInt::from(lucas[k as usize - 1]),
        )?;
        expect_eq(
            &format!("L_{k}(1)"),
            lucas_l(&fam, k).eval(&rat(1)),
            rat(lucas[k as usize - 1]),
        )?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("Motzkin example sequences", c1_example_sequences, 5),
        ("D_{3,-3} closed form, n <= 60", c2_d33_closed_form, 30),
        (
            "D_{2,-1}, D_{2,-2}, D_{2,-3} closed forms, n <= 60",
            c3_d2m_closed_forms,
            60,
        ),
        ("main theorem grid, Catalan", c4_catalan_grid, 60),
        ("main theorem grid, Motzkin", c5_motzkin_grid, 120),
        (
            "convolution identity, order 30",
            c6_convolution_identity,
            10,
        ),
        ("Catalan L_k closed form and degree", c7_catalan_lk, 1),
        ("Chebyshev form of Motzkin L_k", c8_chebyshev, 1),
        (
            "shifted Hankel inversion, 100 random cases",
            c9_lemma_property_suite,
            30,
        ),
        ("transformation chain and replay", c10_tau_engine, 60),
        ("Bareiss vs cofactor expansion", c11_bareiss_vs_cofactors, 5),
        ("T(k,i) triangle and Lucas row sums", c12_lucas_triangle, 1),
    ];
    let total = criteria.len();
    let mut failed = Vec::new();
    for (i, (name, check, limit)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(()) if elapsed > Duration::from_secs(limit) => {
                Err(format!("over time budget of {limit}s"))
            }
            other => other,
        };
        let secs = elapsed.as_secs_f64();
        match &outcome {
            Ok(()) => println!("criterion {:>2} PASS ({secs:.2}s / {limit}s) {name}", i + 1),
            Err(msg) => {
                println!(
                    "criterion {:>2} FAIL ({secs:.2}s / {limit}s) {name}: {msg}",
                    i + 1
                );
                failed.push(i + 1);
            }
        }
    }
    if failed.is_empty() {
        println!("acceptance: all {total} criteria passed");
    } else {
        println!("acceptance: failed criteria {failed:?}");
        std::process::exit(1);
    }
}
