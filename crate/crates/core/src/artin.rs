//! The Artin zeta function of a curve in Weil form.
//!
//! `Z(t) = P(t) / ((1 - t)(1 - qt))` with `P(t) = sum A_i t^i`, and the
//! completed zeta `zeta_hat(s) = q^{(g-1)s} Z(q^{-s})`. All identities are
//! checked over the rationals; only Weil roots are floating point.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::{One, Zero};

use crate::algebra::{
    complex_roots, pole_regularized_value, rat, rpow, Poly, Rational, RationalFunction, TruncatedSeries,
};
use crate::error::{Error, Result};
use crate::zeros::ZeroReport;

/// Weil numerator data of a curve.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurveData {
    pub q: u64,
    pub g: usize,
    /// `A_0 .. A_{2g}`.
    pub a: Vec<Rational>,
    /// Produced from actual point counts.
    pub genuine: bool,
}

impl CurveData {
    /// Non-genuine data. Only the shape is checked: `q >= 2`,
    /// `2g + 1` coefficients and `A_0 = 1`.
    pub fn new(q: u64, g: usize, a: Vec<Rational>) -> Result<Self> {
        if q < 2 {
            return Err(Error::InvalidInput(format!("q = {q} must be at least 2")));
        }
        if a.len() != 2 * g + 1 {
            return Err(Error::LengthMismatch {
                expected: 2 * g + 1,
                got: a.len(),
            });
        }
        if !a[0].is_one() {
            return Err(Error::InvalidInput("A_0 must be 1".into()));
        }
        Ok(CurveData {
            q,
            g,
            a,
            genuine: false,
        })
    }

    pub fn from_ints(q: u64, a: &[i64]) -> Result<Self> {
        if a.len().is_multiple_of(2) {
            return Err(Error::InvalidInput(
                "a Weil numerator has an odd number of coefficients".into(),
            ));
        }
        Self::new(q, a.len() / 2, a.iter().map(|&x| rat(x)).collect())
    }

    /// Elliptic curve with trace of Frobenius `a`: `P(t) = 1 - a t + q t^2`.
    pub fn elliptic(q: u64, a: i64) -> Result<Self> {
        if (a as i128) * (a as i128) > 4 * q as i128 {
            return Err(Error::WeilBound { q, a });
        }
        Self::from_ints(q, &[1, -a, q as i64])
    }

    pub fn qr(&self) -> Rational {
        rat(self.q as i64)
    }

    /// `P(t)`.
    pub fn numerator(&self) -> Poly {
        Poly::new(self.a.clone())
    }

    /// Class number `h = P(1)`.
    pub fn class_number(&self) -> Rational {
        self.a.iter().fold(Rational::zero(), |acc, x| acc + x)
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.a.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    /// Coefficients as integers, when they all are.
    pub fn integer_coeffs(&self) -> Option<Vec<BigInt>> {
        self.a
            .iter()
            .map(|x| x.is_integer().then(|| x.to_integer()))
            .collect()
    }
}

/// Expand `exp(sum N_m t^m / m) (1 - t)(1 - qt)` to order `g` and complete
/// the top half by symmetry.
pub fn numerator_from_counts(q: u64, g: usize, counts: &[i64]) -> Result<CurveData> {
    if counts.len() != g {
        return Err(Error::LengthMismatch {
            expected: g,
            got: counts.len(),
        });
    }
    if let Some(&n) = counts.iter().find(|&&n| n < 0) {
        return Err(Error::InvalidInput(format!("negative point count {n}")));
    }
    let mut log = vec![Rational::zero(); g + 1];
    for (i, &n) in counts.iter().enumerate() {
        let m = (i + 1) as i64;
        log[i + 1] = Rational::new(n.into(), m.into());
    }
    let z = TruncatedSeries::new(log, g).exp()?;
    let q_r = rat(q as i64);
    let euler = Poly::one_minus(Rational::one(), 1) * Poly::one_minus(q_r.clone(), 1);
    let p = z.mul(&TruncatedSeries::from_poly(&euler, g));
    if !p.coeff(0).is_one() {
        return Err(Error::InvalidInput(
            "expansion has constant term different from 1".into(),
        ));
    }
    let mut a = vec![Rational::zero(); 2 * g + 1];
    for i in 0..=g {
        a[i] = p.coeff(i).clone();
        a[2 * g - i] = p.coeff(i) * rpow(&q_r, (g - i) as i64);
    }
    let mut c = CurveData::new(q, g, a)?;
    c.genuine = true;
    Ok(c)
}

/// Power sums `p_1..p_mmax` of the reciprocal roots, by Newton's identities.
pub fn power_sums(c: &CurveData, mmax: usize) -> Vec<Rational> {
    let mut p: Vec<Rational> = vec![Rational::zero(); mmax + 1];
    for m in 1..=mmax {
        let mut acc = -c.coeff(m) * rat(m as i64);
        for i in 1..m {
            acc -= c.coeff(i) * &p[m - i];
        }
        p[m] = acc;
    }
    p
}

/// `N_m = q^m + 1 - p_m`. Integral whenever the coefficients are.
pub fn counts_from_numerator(c: &CurveData, m: usize) -> Rational {
    assert!(m >= 1, "extension degree must be positive");
    let p = power_sums(c, m);
    rpow(&c.qr(), m as i64) + Rational::one() - &p[m]
}

/// `Z(t)` as a rational function.
pub fn artin_z(c: &CurveData) -> RationalFunction {
    let den = Poly::one_minus(Rational::one(), 1) * Poly::one_minus(c.qr(), 1);
    RationalFunction::new(c.numerator(), den).expect("nonzero denominator")
}

/// `zeta_hat` in the variable `u = q^{-s}`: `u^{1-g} Z(u)`.
pub fn zeta_hat_u(c: &CurveData) -> RationalFunction {
    artin_z(c).mul_var_power(1 - c.g as i64)
}

/// `zeta_hat(n)` for an integer `n`. At the poles `n = 0, 1` the value is
/// the regularised one: `zeta_hat(1) = sum A_i q^{g-i} / (q - 1)` is the
/// limit of `(1 - qu) zeta_hat` at `u = 1/q`, and
/// `zeta_hat(0) = h / (q - 1)` is minus the limit of `(1 - u) zeta_hat` at
/// `u = 1`, so that `zeta_hat(0) = zeta_hat(1)`.
pub fn zeta_hat_special(c: &CurveData, n: i64) -> Rational {
    let q = c.qr();
    let f = zeta_hat_u(c);
    match n {
        0 => -pole_regularized_value(&f, &Rational::one()).expect("simple pole at u = 1"),
        1 => pole_regularized_value(&f, &q.recip()).expect("simple pole at u = 1/q"),
        _ => {
            let u = rpow(&q, -n);
            f.eval(&u).expect("no pole away from s = 0, 1")
        }
    }
}

/// Unhatted `Z(q^{-n})` for `n >= 2`.
pub fn zeta_plain(c: &CurveData, n: i64) -> Rational {
    assert!(n >= 2, "Z(q^-n) has a pole for n <= 1");
    artin_z(c).eval(&rpow(&c.qr(), -n)).expect("no pole for n >= 2")
}

/// `A_{2g-i} = q^{g-i} A_i` for all `i`.
pub fn artin_fe_check(c: &CurveData) -> bool {
    let q = c.qr();
    (0..=c.g).all(|i| c.a[2 * c.g - i] == &c.a[i] * rpow(&q, (c.g - i) as i64))
}

/// The functional equation `zeta_hat(1 - s) = zeta_hat(s)` as an identity in
/// `u`, i.e. `zeta_hat_u(1/(qu)) = zeta_hat_u(u)`.
pub fn artin_fe_identity(c: &CurveData) -> bool {
    let f = zeta_hat_u(c);
    f.substitute(&c.qr().recip(), -1) == f
}

/// Reciprocal roots of `P`, paired so each pair multiplies to `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct WeilRoots {
    pub pairs: Vec<(Complex64, Complex64)>,
    /// `a_i = omega_i + omega_{2g-i}` per pair.
    pub a: Vec<Complex64>,
    pub max_residual: f64,
}

impl WeilRoots {
    /// `omega_1..omega_g` followed by their partners in reverse order, so
    /// `omegas[i] * omegas[2g-1-i] = q`.
    pub fn omegas(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = self.pairs.iter().map(|p| p.0).collect();
        out.extend(self.pairs.iter().rev().map(|p| p.1));
        out
    }
}

pub fn weil_roots(c: &CurveData) -> Result<WeilRoots> {
    if c.g == 0 {
        return Ok(WeilRoots {
            pairs: vec![],
            a: vec![],
            max_residual: 0.0,
        });
    }
    let roots = complex_roots(&c.numerator())?;
    let mut omegas: Vec<Complex64> = roots.roots.iter().map(|z| z.inv()).collect();
    let q = c.q as f64;
    let mut pairs = Vec::with_capacity(c.g);
    while let Some(w) = omegas.pop() {
        let (j, _) = omegas
            .iter()
            .enumerate()
            .map(|(j, v)| (j, (w * v - q).norm()))
            .min_by(|x, y| x.1.total_cmp(&y.1))
            .expect("an even number of reciprocal roots");
        let v = omegas.remove(j);
        pairs.push((v, w));
    }
    pairs.reverse();
    let a = pairs.iter().map(|(x, y)| x + y).collect();
    Ok(WeilRoots {
        pairs,
        a,
        max_residual: roots.max_residual(),
    })
}

/// Reciprocal-root moduli against `sqrt q`; the verdict holds iff every
/// deviation is at most `tol * sqrt q`.
pub fn rh_check_artin(c: &CurveData, tol: f64) -> Result<ZeroReport> {
    let sq = (c.q as f64).sqrt();
    let w = weil_roots(c)?;
    Ok(ZeroReport::from_moduli(
        "omega",
        &w.omegas(),
        sq,
        tol * sq,
        w.max_residual,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;

    fn ell() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 2]).unwrap()
    }

    fn g2() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 0, 0, 4]).unwrap()
    }

    #[test]
    fn from_counts() {
        assert_eq!(numerator_from_counts(3, 0, &[]).unwrap().a, vec![rat(1)]);
        assert_eq!(numerator_from_counts(2, 1, &[3]).unwrap().a, ell().a);
        let c = numerator_from_counts(2, 2, &[3, 5]).unwrap();
        assert_eq!(c.a, g2().a);
        assert!(c.genuine);
        assert!(numerator_from_counts(2, 1, &[-1]).is_err());
        assert!(numerator_from_counts(2, 2, &[3]).is_err());
    }

    #[test]
    fn counts_back() {
        let p1 = CurveData::from_ints(2, &[1]).unwrap();
        assert_eq!(counts_from_numerator(&p1, 3), rat(9));
        assert_eq!(counts_from_numerator(&ell(), 2), rat(9));
        assert_eq!(counts_from_numerator(&g2(), 2), rat(5));
    }

    #[test]
    fn special_values() {
        let c = g2();
        assert_eq!(zeta_hat_special(&c, 0), rat(5));
        assert_eq!(zeta_hat_special(&c, 1), rat(5));
        assert_eq!(zeta_hat_special(&c, 2), ratio(65, 6));
        assert_eq!(zeta_hat_special(&ell(), 1), rat(3));
        assert_eq!(zeta_hat_special(&ell(), 2), rat(3));
        for c in [ell(), g2()] {
            for n in 0..=3 {
                assert_eq!(zeta_hat_special(&c, 1 - n), zeta_hat_special(&c, n));
            }
        }
    }

    #[test]
    fn displayed_sums() {
        let c = CurveData::from_ints(3, &[1, 2, 5, 6, 9]).unwrap();
        let q = c.qr();
        let h = c.class_number();
        let s1: Rational = (0..=4).map(|i| &c.a[i] * rpow(&q, 2 - i as i64)).sum();
        assert_eq!(zeta_hat_special(&c, 0), &h / (&q - rat(1)));
        assert_eq!(zeta_hat_special(&c, 1), s1 / (&q - rat(1)));
    }

    #[test]
    fn functional_equation() {
        assert!(artin_fe_check(&ell()));
        assert!(artin_fe_check(&g2()));
        assert!(!artin_fe_check(&CurveData::from_ints(2, &[1, 1, 1]).unwrap()));
        assert!(artin_fe_identity(&g2()));
        assert!(!artin_fe_identity(&CurveData::from_ints(2, &[1, 1, 1]).unwrap()));
    }

    #[test]
    fn riemann_hypothesis() {
        let r = rh_check_artin(&ell(), 1e-9).unwrap();
        assert!(r.verdict);
        assert_eq!(r.zeros.len(), 2);
        let p1 = CurveData::from_ints(5, &[1]).unwrap();
        assert!(rh_check_artin(&p1, 1e-9).unwrap().verdict);
        let bad = CurveData::new(2, 1, vec![rat(1), ratio(-11, 3), rat(2)]).unwrap();
        assert!(!rh_check_artin(&bad, 1e-9).unwrap().verdict);
    }

    #[test]
    fn weil_pairs() {
        let w = weil_roots(&g2()).unwrap();
        assert_eq!(w.pairs.len(), 2);
        for (x, y) in &w.pairs {
            assert!((x * y - 2.0).norm() < 1e-9);
        }
    }

    #[test]
    fn weil_bound() {
        assert!(CurveData::elliptic(2, 2).is_ok());
        assert_eq!(CurveData::elliptic(2, 3), Err(Error::WeilBound { q: 2, a: 3 }));
    }
}
