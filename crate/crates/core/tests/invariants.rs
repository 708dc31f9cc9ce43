use num_complex::Complex64;
use num_traits::{One, Zero};
use proptest::prelude::*;

use curve_zeta::abelian::{a_from_alpha, alpha_from_a, beta0, remark_identity_check};
use curve_zeta::algebra::{rat, ratfun_equal, rpow, Poly, Rational, RationalFunction, TruncatedSeries};
use curve_zeta::artin::{artin_fe_check, counts_from_numerator, numerator_from_counts, CurveData};
use curve_zeta::cli::JobSpec;
use curve_zeta::group_zeta::{slr_fe_check, slr_zeta};
use curve_zeta::mass::{beta_prop6, beta_zagier};
use curve_zeta::rank2::{numerator_matches_closed_form, rank2_numerator};
use curve_zeta::yoshida::{lemma1_compare_exact, zeta2_canonical};

fn palindromic(q: u64, lower: Vec<i64>) -> CurveData {
    let g = lower.len();
    let qr = rat(q as i64);
    let mut a: Vec<Rational> = std::iter::once(Rational::one())
        .chain(lower.iter().map(|&x| rat(x)))
        .collect();
    for i in (0..g).rev() {
        a.push(rpow(&qr, (g - i) as i64) * &a[i]);
    }
    CurveData::new(q, g, a).unwrap()
}

fn curve() -> impl Strategy<Value = CurveData> {
    (
        prop::sample::select(vec![2u64, 3, 4, 5]),
        prop::collection::vec(-20i64..=20, 1..=6),
    )
        .prop_map(|(q, lower)| palindromic(q, lower))
}

fn elliptic() -> impl Strategy<Value = CurveData> {
    prop::sample::select(vec![2u64, 3, 4, 5, 7]).prop_flat_map(|q| {
        let b = (4.0 * q as f64).sqrt().floor() as i64;
        (-b..=b).prop_map(move |a| CurveData::elliptic(q, a).unwrap())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn invariants_roundtrip(c in curve()) {
        let alphas = alpha_from_a(&c).unwrap();
        prop_assert_eq!(a_from_alpha(&alphas, &beta0(&c), c.q, c.g).unwrap(), c.a[..=c.g].to_vec());
        if c.g >= 2 {
            prop_assert!(remark_identity_check(&c).unwrap());
        }
    }

    #[test]
    fn artin_symmetry(c in curve()) {
        prop_assert!(artin_fe_check(&c));
    }

    #[test]
    fn counts_roundtrip(c in curve()) {
        let counts: Vec<i64> = (1..=c.g)
            .map(|m| i64::try_from(counts_from_numerator(&c, m).to_integer()).unwrap())
            .collect();
        // only data with honest (nonnegative) counts comes from a curve
        prop_assume!(counts.iter().all(|&n| n >= 0));
        prop_assert_eq!(numerator_from_counts(c.q, c.g, &counts).unwrap().a, c.a.clone());
    }

    #[test]
    fn rank2_numerator_palindromic(c in curve()) {
        let n = rank2_numerator(&c).unwrap();
        prop_assert!(n.is_palindromic());
        prop_assert!(numerator_matches_closed_form(&c, &n));
    }

    #[test]
    fn exp_log_inverse(xs in prop::collection::vec(-9i64..=9, 1..8)) {
        let mut coeffs = vec![Rational::zero()];
        coeffs.extend(xs.iter().map(|&x| rat(x)));
        let order = coeffs.len() - 1;
        let s = TruncatedSeries::new(coeffs, order);
        prop_assert_eq!(s.exp().unwrap().log().unwrap(), s);
    }

    #[test]
    fn ratfun_common_factor(n in prop::collection::vec(-5i64..=5, 1..5), d in prop::collection::vec(-5i64..=5, 1..5), k in prop::collection::vec(-5i64..=5, 1..4)) {
        let (n, d, k) = (Poly::from_ints(&n), Poly::from_ints(&d), Poly::from_ints(&k));
        prop_assume!(!d.is_zero() && !k.is_zero());
        let f = RationalFunction::new(n.clone(), d.clone()).unwrap();
        let g = RationalFunction::new(&n * &k, &d * &k).unwrap();
        prop_assert!(ratfun_equal(&f, &g));
        prop_assert_eq!(f, g);
    }

    #[test]
    fn mass_degree_period(c in elliptic(), r in 1usize..=3, d in -6i64..=6) {
        prop_assert_eq!(beta_zagier(&c, r, d).unwrap(), beta_zagier(&c, r, d + r as i64).unwrap());
        prop_assert_eq!(beta_zagier(&c, r, 0).unwrap(), beta_prop6(&c, r).unwrap());
    }

    #[test]
    fn group_zeta_symmetry(c in elliptic(), r in 2usize..=3) {
        prop_assert!(slr_fe_check(&slr_zeta(&c, r).unwrap()));
    }

    #[test]
    fn inequality_inside_disk(qn in 2i64..60, c16 in -200i64..=200, re in -99i64..=99, im in -99i64..=99) {
        let q = rat(qn);
        let c = Rational::new(c16.into(), 16.into());
        prop_assume!(c.clone() * &c <= rat(4) * &q);
        let (re, im) = (Rational::new(re.into(), 141.into()), Rational::new(im.into(), 141.into()));
        let ord = lemma1_compare_exact(&q, &c, &re, &im).unwrap();
        let n = &re * &re + &im * &im;
        prop_assert_eq!(ord, n.cmp(&Rational::one()).reverse());
    }

    #[test]
    fn zeta2_symmetry_numeric(c in elliptic(), re in -3.0f64..3.0, im in -3.0f64..3.0) {
        let z = zeta2_canonical(&c).unwrap();
        prop_assert!(z.fe_check_numeric(Complex64::new(re, im), 1e-8));
    }

    #[test]
    fn job_spec_toml_roundtrip(q in prop::sample::select(vec![2u64, 3, 5]), a in -2i64..=2, ranks in prop::collection::vec(2usize..=6, 1..4)) {
        let text = format!(
            "tasks = [\"artin\", \"slr\"]\nranks = {ranks:?}\n[[curves]]\nsource = \"elliptic\"\nq = {q}\na = {a}\n"
        );
        let spec = JobSpec::parse(&text).unwrap();
        let back = JobSpec::parse(&toml::to_string(&spec).unwrap()).unwrap();
        prop_assert_eq!(back, spec);
    }
}
