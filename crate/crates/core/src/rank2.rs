//! The rank-two pure zeta function.
//!
//! In `T = q^{-2s}` the rank-two zeta is
//!
//! ```text
//! F(T) = (q^{g-1} P(T) - T P(qT)) / ((qT)^{g-1} (1-T)(1-qT)(1-q^2 T))
//! ```
//!
//! The factor `1 - qT` always cancels. Laurent factors `T^{-(g-1)}` are
//! carried as explicit shifts next to honest rational functions.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::abelian::InvariantTable;
use crate::algebra::{rat, rpow, Poly, Rational, RationalFunction, TruncatedSeries};
use crate::artin::{zeta_hat_special, zeta_hat_u, CurveData};
use crate::error::{Error, Result};

/// `F(T) = T^{-shift} * f(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2ClosedForm {
    pub f: RationalFunction,
    pub shift: usize,
}

impl Rank2ClosedForm {
    /// `F` itself, with the shift folded in.
    pub fn laurent(&self) -> RationalFunction {
        self.f.mul_var_power(-(self.shift as i64))
    }
}

fn require_genus(c: &CurveData) -> Result<()> {
    if c.g == 0 {
        return Err(Error::UnsupportedGenus {
            g: 0,
            reason: "rank-two zeta needs g >= 1",
        });
    }
    Ok(())
}

/// `q^{g-1} P(T) - T P(qT)`.
fn difference_poly(c: &CurveData) -> Poly {
    let q = c.qr();
    let p = c.numerator();
    &p.scale(&rpow(&q, c.g as i64 - 1)) - &p.substitute_monomial(&q, 1).shift(1)
}

pub fn rank2_closed_form(c: &CurveData) -> Result<Rank2ClosedForm> {
    require_genus(c)?;
    let q = c.qr();
    let den =
        Poly::one_minus(Rational::one(), 1) * Poly::one_minus(q.clone(), 1) * Poly::one_minus(&q * &q, 1);
    let den = den.scale(&rpow(&q, c.g as i64 - 1));
    Ok(Rank2ClosedForm {
        f: RationalFunction::new(difference_poly(c), den)?,
        shift: c.g - 1,
    })
}

/// `zeta_hat(2s)/(1 - q^{2-2s}) + zeta_hat(2s-1)/(1 - q^{2s})` in `T = q^{-2s}`.
pub fn two_summand_form(c: &CurveData) -> RationalFunction {
    let q = c.qr();
    let zh = zeta_hat_u(c);
    let t = RationalFunction::var();
    let one = RationalFunction::one();
    let first = &zh / &(&one - &RationalFunction::monomial(&q * &q, 1));
    let second = &zh.substitute(&q, 1) / &(&one - &t.inv().expect("nonzero"));
    first + second
}

/// Palindromic numerator of the rank-two zeta in `X = qT`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rank2Numerator {
    pub q: u64,
    pub g: usize,
    /// Coefficients of `X^0 .. X^{2g}`.
    pub coeffs: Vec<Rational>,
}

impl Rank2Numerator {
    /// The same coefficients under their other name.
    pub fn b(&self) -> &[Rational] {
        &self.coeffs
    }

    /// Coefficients in `T` normalised to constant term 1: `q^{i-g} N_i`.
    /// These are the values listed with explicit `q^{-i}` prefactors.
    pub fn t_coeffs(&self) -> Vec<Rational> {
        let q = rat(self.q as i64);
        self.coeffs
            .iter()
            .enumerate()
            .map(|(i, n)| n * rpow(&q, i as i64 - self.g as i64))
            .collect()
    }

    /// `t_coeffs()[i] / coeffs[i]`, or `None` where a coefficient vanishes.
    pub fn discrepancy_factors(&self) -> Vec<Option<Rational>> {
        self.t_coeffs()
            .iter()
            .zip(&self.coeffs)
            .map(|(t, n)| (!n.is_zero()).then(|| t / n))
            .collect()
    }

    pub fn is_palindromic(&self) -> bool {
        let n = self.coeffs.len();
        (0..n).all(|i| self.coeffs[i] == self.coeffs[n - 1 - i])
    }

    pub fn poly_x(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }
}

/// Coefficient of `X^{g-i}` is
/// `a_{g-i} q^i + a_{g-i-1}(q^{i+1} - 1) + ... + a_0(q^g - 1)`; the upper
/// half mirrors the lower one.
pub fn rank2_numerator(c: &CurveData) -> Result<Rank2Numerator> {
    require_genus(c)?;
    let q = c.qr();
    let g = c.g;
    let mut coeffs = vec![Rational::zero(); 2 * g + 1];
    for i in 0..=g {
        let mut v = &c.a[g - i] * rpow(&q, i as i64);
        for j in 0..g - i {
            v += &c.a[j] * (rpow(&q, (g - j) as i64) - rat(1));
        }
        coeffs[2 * g - (g - i)] = v.clone();
        coeffs[g - i] = v;
    }
    Ok(Rank2Numerator { q: c.q, g, coeffs })
}

/// `q (q^{g-1} P(T) - T P(qT))` at `T = X/q` equals `(1 - X) N(X)`.
pub fn numerator_matches_closed_form(c: &CurveData, n: &Rank2Numerator) -> bool {
    let q = c.qr();
    let lhs = difference_poly(c).substitute_monomial(&q.recip(), 1).scale(&q);
    lhs == Poly::one_minus(Rational::one(), 1) * n.poly_x()
}

/// `alpha_{X,2}(0) = q^{g-1} zeta_hat(1)`.
pub fn rank2_alpha0(c: &CurveData) -> Rational {
    rpow(&c.qr(), c.g as i64 - 1) * zeta_hat_special(c, 1)
}

/// `q^{2(g-1)} (zeta_hat(2) - zeta_hat(1)^2 / (q^2 - 1))`, the listed
/// closed form for `beta_{X,2}(0)`. Reported, not used.
pub fn closed_beta_line(c: &CurveData) -> Rational {
    let q = c.qr();
    let z1 = zeta_hat_special(c, 1);
    rpow(&q, 2 * (c.g as i64 - 1)) * (zeta_hat_special(c, 2) - &z1 * &z1 / (&q * &q - rat(1)))
}

/// `alpha(ri) / alpha(0) = sum_{k <= i} (Q^{i-k+1} - 1)/(Q - 1) A(k)` for
/// `i < g`, given numerator coefficients `A(k)` in `T` with `A(0) = 1`.
pub fn alpha_ratios_from_numerator(t_coeffs: &[Rational], big_q: &Rational, g: usize) -> Vec<Rational> {
    (0..g)
        .map(|i| {
            (0..=i)
                .map(|k| {
                    let geo: Rational = (0..=(i - k) as i64).map(|j| rpow(big_q, j)).sum();
                    geo * &t_coeffs[k]
                })
                .sum()
        })
        .collect()
}

/// `beta / alpha(0)` from the last row
/// `2Q alpha(r(g-2)) - (Q+1) alpha(r(g-1)) + (Q-1) beta = A(g) alpha(0)`.
pub fn beta_ratio_from_numerator(t_coeffs: &[Rational], big_q: &Rational, g: usize) -> Rational {
    let ratios = alpha_ratios_from_numerator(t_coeffs, big_q, g);
    let two_back = if g >= 2 {
        ratios[g - 2].clone()
    } else {
        Rational::zero()
    };
    (&t_coeffs[g] - rat(2) * big_q * two_back + (big_q + rat(1)) * &ratios[g - 1]) / (big_q - rat(1))
}

/// The generating function of invariants,
/// `sum_{m < g-1} alpha(rm)(T^m + Q^{g-1-m} T^{2g-2-m}) + alpha(r(g-1)) T^{g-1}
///  + (Q-1) beta T^g / ((1-T)(1-QT))`.
pub fn invariant_generating_form(alphas: &[Rational], beta: &Rational, big_q: &Rational) -> RationalFunction {
    let g = alphas.len();
    let mut poly = Poly::zero();
    for (m, a) in alphas.iter().enumerate() {
        if m + 1 < g {
            poly = &poly + &Poly::monomial(a.clone(), m);
            let c = a * rpow(big_q, (g - 1 - m) as i64);
            poly = &poly + &Poly::monomial(c, 2 * g - 2 - m);
        } else {
            poly = &poly + &Poly::monomial(a.clone(), m);
        }
    }
    let den = Poly::one_minus(Rational::one(), 1) * Poly::one_minus(big_q.clone(), 1);
    let tail =
        RationalFunction::new(Poly::monomial((big_q - rat(1)) * beta, g), den).expect("nonzero denominator");
    RationalFunction::from_poly(poly) + tail
}

/// Read `alpha_{X,2}(2m)` and `beta_{X,2}(0)` off
/// `Z = alpha0 T^{g-1} F(T)` and confirm `Z` has the expected shape.
pub fn eq1_extract(f: &Rank2ClosedForm, alpha0: &Rational, q: u64, g: usize) -> Result<InvariantTable> {
    if g == 0 || f.shift != g - 1 {
        return Err(Error::InvalidInput(format!(
            "closed form with shift {} does not belong to genus {g}",
            f.shift
        )));
    }
    let qr = rat(q as i64);
    let big_q = &qr * &qr;
    let num = TruncatedSeries::from_poly(f.f.num(), g);
    let den = TruncatedSeries::from_poly(f.f.den(), g);
    let series = num.mul(&den.inverse()?);
    if !series.coeff(0).is_one() {
        return Err(Error::Normalization(format!(
            "constant term of T^(g-1) F(T) is {}, expected 1",
            series.coeff(0)
        )));
    }
    let z: Vec<Rational> = series.coeffs().iter().map(|x| x * alpha0).collect();
    let alphas = z[..g].to_vec();
    let back = if g >= 2 {
        &big_q * &alphas[g - 2]
    } else {
        Rational::zero()
    };
    let beta = (&z[g] - back) / (&big_q - rat(1));
    let whole = f.f.clone() * RationalFunction::constant(alpha0.clone());
    if invariant_generating_form(&alphas, &beta, &big_q) != whole {
        return Err(Error::Normalization(
            "extracted invariants do not reproduce the zeta function".into(),
        ));
    }
    let gammas: BTreeMap<i64, Rational> = alphas
        .iter()
        .enumerate()
        .map(|(m, a)| (2 * m as i64, a + &beta))
        .collect();
    Ok(InvariantTable {
        r: 2,
        alphas,
        beta0: beta,
        gammas,
    })
}

/// A pure zeta `Z(T)` in `T = t^r` with `Zhat(t) = t^{-r shift} Z(t^r)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PureZeta {
    pub r: usize,
    pub q: u64,
    pub z: RationalFunction,
    pub shift: usize,
}

impl PureZeta {
    /// Assemble `Z` from invariants through [`invariant_generating_form`].
    pub fn from_invariants(table: &InvariantTable, q: u64) -> Self {
        let big_q = rpow(&rat(q as i64), table.r as i64);
        PureZeta {
            r: table.r,
            q,
            z: invariant_generating_form(&table.alphas, &table.beta0, &big_q),
            shift: table.alphas.len() - 1,
        }
    }

    /// `Zhat` as a rational function of `t`.
    pub fn zhat_t(&self) -> RationalFunction {
        let r = self.r as i64;
        self.z
            .substitute(&Rational::one(), r)
            .mul_var_power(-r * self.shift as i64)
    }
}

/// The rank-two pure zeta of a curve.
pub fn pure_zeta_rank2(c: &CurveData) -> Result<PureZeta> {
    let f = rank2_closed_form(c)?;
    Ok(PureZeta {
        r: 2,
        q: c.q,
        z: f.f * RationalFunction::constant(rank2_alpha0(c)),
        shift: c.g - 1,
    })
}

/// `Zhat(1/(qt)) = Zhat(t)`.
pub fn pure_fe_check(z: &PureZeta) -> bool {
    let zh = z.zhat_t();
    zh.substitute(&rat(z.q as i64).recip(), -1) == zh
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{ratfun_equal, ratio};

    fn ell() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 2]).unwrap()
    }

    fn g2() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 0, 0, 4]).unwrap()
    }

    fn ints(v: &[i64]) -> Vec<Rational> {
        v.iter().map(|&x| rat(x)).collect()
    }

    #[test]
    fn closed_form_elliptic() {
        let f = rank2_closed_form(&ell()).unwrap();
        assert_eq!(f.shift, 0);
        let want = RationalFunction::new(Poly::from_ints(&[1, 1, 4]), Poly::from_ints(&[1, -5, 4])).unwrap();
        assert_eq!(f.f, want);
        assert!(ratfun_equal(&f.laurent(), &two_summand_form(&ell())));
        assert!(ratfun_equal(
            &rank2_closed_form(&g2()).unwrap().laurent(),
            &two_summand_form(&g2())
        ));
    }

    #[test]
    fn numerators() {
        let n = rank2_numerator(&ell()).unwrap();
        assert_eq!(n.coeffs, ints(&[2, 1, 2]));
        let n2 = rank2_numerator(&g2()).unwrap();
        assert_eq!(n2.coeffs, ints(&[4, 3, 3, 3, 4]));
        assert!(numerator_matches_closed_form(&g2(), &n2));
        assert_eq!(n2.t_coeffs(), vec![rat(1), ratio(3, 2), rat(3), rat(6), rat(16)]);
        assert_eq!(n2.discrepancy_factors()[1], Some(ratio(1, 2)));
    }

    #[test]
    fn extraction() {
        let t = eq1_extract(&rank2_closed_form(&ell()).unwrap(), &rat(3), 2, 1).unwrap();
        assert_eq!(t.alphas, ints(&[3]));
        assert_eq!(t.beta0, rat(6));

        let c = g2();
        assert_eq!(rank2_alpha0(&c), rat(10));
        let t = eq1_extract(&rank2_closed_form(&c).unwrap(), &rat(10), 2, 2).unwrap();
        assert_eq!(t.alphas, ints(&[10, 65]));
        assert_eq!(t.beta0, ratio(275, 3));

        let n = rank2_numerator(&c).unwrap();
        let ratios = alpha_ratios_from_numerator(&n.t_coeffs(), &rat(4), 2);
        assert_eq!(&ratios[1] * rat(10), rat(65));
        assert_eq!(
            beta_ratio_from_numerator(&n.t_coeffs(), &rat(4), 2) * rat(10),
            ratio(275, 3)
        );
    }

    #[test]
    fn closed_line_beta_differs() {
        assert_eq!(closed_beta_line(&ell()), rat(0));
    }

    #[test]
    fn functional_equation() {
        for c in [ell(), g2()] {
            let z = pure_zeta_rank2(&c).unwrap();
            assert!(pure_fe_check(&z));
            let t = eq1_extract(&rank2_closed_form(&c).unwrap(), &rank2_alpha0(&c), 2, c.g).unwrap();
            let rebuilt = PureZeta::from_invariants(&t, 2);
            assert_eq!(rebuilt.z, z.z);
            // one coefficient bumped without its mirror image
            let mut broken = rebuilt.clone();
            let slot = if c.g == 1 { 1 } else { 0 };
            broken.z = broken.z + RationalFunction::monomial(rat(1), slot);
            assert!(!pure_fe_check(&broken));
        }
    }
}
