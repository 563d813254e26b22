mod common;

use num_bigint::BigInt;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use hankelforge::families::{
    catalan_convolution, closed_form_det, motzkin_lk_via_chebyshev, motzkin_number, DetFamilyId,
    NamedFamily,
};
use hankelforge::hankel::{shifted_hankel_det, ExactMatrix, HankelQuery};
use hankelforge::identities::{
    check_main_theorem, evaluate_main_theorem, lucas_l, lucas_t, lucas_triangle, Outcome, Parity,
    QuadraticFamily,
};
use hankelforge::series::{rat, rational_to_series, solve_quadratic};
use hankelforge::tau::{direct_dets, tau_step, CanonicalEquation};
use hankelforge::{Error, Polynomial, PowerSeries, Rational, RationalFunction};

fn config(cases: u32) -> ProptestConfig {
    ProptestConfig {
        cases,
        failure_persistence: None,
        ..ProptestConfig::default()
    }
}

fn coeffs(max_len: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    prop::collection::vec(-bound..=bound, 1..=max_len)
}

fn unit_coeffs(max_len: usize, bound: i64) -> impl Strategy<Value = Vec<i64>> {
    (
        coeffs(max_len, bound),
        (1..=bound).prop_flat_map(|b| prop_oneof![Just(b), Just(-b)]),
    )
        .prop_map(|(mut c, c0)| {
            c[0] = c0;
            c
        })
}

fn series(c: &[i64], order: usize) -> PowerSeries {
    PowerSeries::from_polynomial(&Polynomial::from_ints(c), order)
}

proptest! {
    #![proptest_config(config(100))]

    #[test]
    fn inverse_roundtrip(c in unit_coeffs(9, 9)) {
        let f = series(&c, 14);
        prop_assert!((&f * &f.inverse().unwrap()).is_one());
    }

    #[test]
    fn quadratic_residual(w in unit_coeffs(4, 4), u in unit_coeffs(4, 4), v in coeffs(4, 4)) {
        let mut v = v;
        v[0] = 0;
        let (w, u, v) = (Polynomial::from_ints(&w), Polynomial::from_ints(&u), Polynomial::from_ints(&v));
        let f = solve_quadratic(&w, &u, &v, 16).unwrap();
        let t = 16;
        let residual = &(&PowerSeries::from_polynomial(&w, t) + &(&PowerSeries::from_polynomial(&u, t) * &f))
            + &(&PowerSeries::from_polynomial(&v, t) * &(&f * &f));
        prop_assert!(residual.is_zero());
    }

    #[test]
    fn pow_matches_repeated_products(c in coeffs(6, 5), k in 1u32..=6) {
        let f = series(&c, 12);
        let mut naive = f.coeffs().to_vec();
        for _ in 1..k {
            naive = common::cauchy_product(&naive, f.coeffs(), 12);
        }
        let fast = f.pow(k);
        prop_assert_eq!(fast.coeffs(), &naive[..]);
    }
}

proptest! {
    #![proptest_config(config(50))]

    #[test]
    fn rational_expansion_times_denominator(num in coeffs(5, 6), den in unit_coeffs(5, 6)) {
        let r = RationalFunction::new(Polynomial::from_ints(&num), Polynomial::from_ints(&den));
        prop_assume!(r.is_ok());
        let r = r.unwrap();
        let s = rational_to_series(&r, 15);
        // den * s = num, compared against the unreduced input
        let back = common::cauchy_product(&Polynomial::from_ints(&den).into_coeffs(), s.coeffs(), 15);
        let want = series(&num, 15);
        prop_assert_eq!(&back[..], want.coeffs());
    }

    #[test]
    fn det_matches_cofactors(n in 0usize..=5, seed in any::<u64>(), q in 1i64..=7) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let m = common::random_matrix(&mut rng, n, 9);
        let exact = ExactMatrix::from_fn(n, |i, j| Rational::new(m[i][j].clone(), BigInt::from(q)));
        let want = Rational::new(common::cofactor_det(&m), BigInt::from(q).pow(n as u32));
        prop_assert_eq!(exact.det_exact(), want);
    }

    #[test]
    fn empty_hankel_is_one(c in coeffs(5, 5), k in 1u32..=4, shift in -8i64..=8) {
        let f = series(&c, 10);
        prop_assert_eq!(shifted_hankel_det(&f, HankelQuery::new(k, shift, 0)).unwrap(), rat(1));
    }

    #[test]
    fn negative_window_vanishes(c in coeffs(5, 5), k in 1u32..=3, n in 1usize..=5, extra in 0i64..=3) {
        let shift = -2 * (n as i64 - 1) - 1 - extra;
        let f = series(&c, 4);
        prop_assert_eq!(shifted_hankel_det(&f, HankelQuery::new(k, shift, n)).unwrap(), rat(0));
    }

    /// Either a hypothesis fails or every instance holds, and the vanishing
    /// window never depends on the degree condition.
    #[test]
    fn main_theorem_on_random_families(u in unit_coeffs(3, 2), plus_one in any::<bool>(), a in 1u32..=2, k in 1u32..=2, m in 0u32..=2, odd in any::<bool>()) {
        let mut u = u;
        u[0] = if plus_one { 1 } else { -1 };
        let fam = QuadraticFamily::with_power(Polynomial::from_ints(&u), a).unwrap();
        let parity = if odd { Parity::Odd } else { Parity::Even };
        match check_main_theorem(&fam, k, m, parity, 3) {
            Ok(report) => prop_assert!(report.holds(), "{}", report.failures().next().unwrap()),
            Err(Error::DegreeConditionFailed { .. }) => {
                let report = evaluate_main_theorem(&fam, k, m, parity, 0).unwrap();
                let window_ok = report
                    .instances
                    .iter()
                    .filter(|i| i.params.iter().any(|(name, _)| *name == "N"))
                    .all(|i| i.outcome != Outcome::Holds || i.holds());
                prop_assert!(window_ok);
            }
            Err(Error::BadEquation(_)) => prop_assert!(plus_one && odd),
            Err(e) => prop_assert!(false, "unexpected error {e}"),
        }
    }

    #[test]
    fn canonical_series_solves_input(a in coeffs(4, 4), b in unit_coeffs(4, 4), c in coeffs(4, 4), ka in 1usize..=3) {
        let a = Polynomial::from_ints(&a).shift(ka);
        let (b, c) = (Polynomial::from_ints(&b), Polynomial::from_ints(&c));
        prop_assume!(!a.is_zero() && !c.is_zero());
        let (ra, rb, rc) = (RationalFunction::from(a.clone()), RationalFunction::from(b.clone()), RationalFunction::from(c.clone()));
        let eq = CanonicalEquation::canonicalize(&ra, &rb, &rc);
        // the x^d part of -c must leave a nonzero a / c' valuation; skip the rejected ones
        prop_assume!(eq.is_ok());
        let t = 16;
        let f = eq.unwrap().series(t).unwrap();
        let residual = &(&(&PowerSeries::from_polynomial(&a, t) * &(&f * &f)) + &(&PowerSeries::from_polynomial(&b, t) * &f))
            + &PowerSeries::from_polynomial(&c, t);
        prop_assert!(residual.is_zero());
    }
}

proptest! {
    #![proptest_config(config(40))]

    /// The determinant law of one step, checked by direct evaluation.
    #[test]
    fn tau_step_determinant_law(d in 0usize..=2, k in 1usize..=3, u in unit_coeffs(3, 2), v in unit_coeffs(2, 2), normalize in any::<bool>()) {
        let mut u = u;
        if normalize {
            u[0] = 1;
        }
        let eq = CanonicalEquation::new(
            d,
            k,
            RationalFunction::from(Polynomial::from_ints(&u)),
            RationalFunction::from(Polynomial::from_ints(&v)),
        )
        .unwrap();
        let step = tau_step(&eq);
        prop_assume!(!matches!(step, Err(Error::NotCanonicalizable(_))));
        let (next, rel) = step.unwrap();
        let before = direct_dets(&eq, 8).unwrap();
        let after = direct_dets(&next, 8).unwrap();
        for (n, want) in before.iter().enumerate() {
            let pulled = rel.pull_back(n, |m| Ok(after[m].clone())).unwrap();
            prop_assert_eq!(&pulled, want, "n = {}", n);
        }
    }
}

#[test]
fn lucas_closed_form_matches_recursion() {
    let rows = lucas_triangle(20);
    for k in 1..=20u32 {
        for i in 0..=k / 2 {
            assert_eq!(
                rows[k as usize - 1][i as usize],
                lucas_t(k, i),
                "T({k},{i})"
            );
        }
    }
}

#[test]
fn lucas_polynomials_recurse() {
    for fam in NamedFamily::builtins() {
        let q = fam.quadratic();
        let vw = q.v() * q.w();
        for k in 2..=11 {
            let next = &(-&(q.u() * &lucas_l(&q, k))) - &(&vw * &lucas_l(&q, k - 1));
            assert_eq!(lucas_l(&q, k + 1), next, "{fam}, k = {k}");
        }
    }
}

#[test]
fn lucas_degrees() {
    let (catalan, motzkin) = (
        NamedFamily::Catalan.quadratic(),
        NamedFamily::Motzkin.quadratic(),
    );
    for k in 1..=12 {
        assert_eq!(lucas_l(&catalan, k).degree(), Some(k as usize / 2));
        assert_eq!(lucas_l(&motzkin, k).degree(), Some(k as usize));
        assert_eq!(motzkin_lk_via_chebyshev(k), lucas_l(&motzkin, k));
    }
}

#[test]
fn catalan_convolutions_match_series() {
    let c = NamedFamily::Catalan.quadratic().solve(31).unwrap();
    for k in 1..=6 {
        let ck = c.pow(k);
        for n in 0..=30 {
            assert_eq!(
                ck.coeffs()[n],
                catalan_convolution(k, n),
                "k = {k}, n = {n}"
            );
        }
    }
}

#[test]
fn motzkin_numbers_match_series() {
    let m = NamedFamily::Motzkin.quadratic().solve(41).unwrap();
    for n in 0..=40 {
        assert_eq!(m.coeffs()[n], motzkin_number(n), "n = {n}");
    }
}

#[test]
fn closed_forms_are_integers_and_d33_is_antisymmetric() {
    for id in DetFamilyId::ALL {
        assert!(
            (0..=200).all(|n| closed_form_det(id, n).is_integer()),
            "{id}"
        );
    }
    for k in 1..=60 {
        assert_eq!(
            closed_form_det(DetFamilyId::D33, 3 * k + 1),
            -closed_form_det(DetFamilyId::D33, 3 * k + 3)
        );
    }
}
