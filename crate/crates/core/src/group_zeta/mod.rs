//! Zeta functions attached to `SL_r` and its maximal parabolic, in the
//! variable `u = q^{-s}`.
//!
//! [`slr_zeta`] evaluates the combinatorial Weyl-group formula;
//! [`period_residue_oracle`] reaches the same function through the period
//! and its residues. [`slr_numerator`] reads off the degree-`2g` numerator
//! in `T = 1/u`, which is `q^{-rs}` after the argument change `s -> -rs`.

mod period;
mod roots;
mod weyl_sum;

use num_complex::Complex64;
use num_traits::{One, Zero};

pub use period::{
    period_omega, period_residue_oracle, period_residue_oracle_with, proportionality_constant, PeriodOptions,
};
pub use roots::{
    build_root_system, height, is_positive, weyl_group, ParabolicData, Root, RootSystemData, WeylElt,
    MAX_RANK, MIN_RANK,
};
pub use weyl_sum::{
    slr_fe_check, slr_zeta, slr_zeta_with, zeta_hat_shifted, SlrOptions, SlrZeta, WeylSumReading, WeylTerm,
};

use crate::algebra::{complex_roots, rat, rpow, to_f64, Poly, Rational, RationalFunction};
use crate::error::{Error, Result};
use crate::rank2::{alpha_ratios_from_numerator, beta_ratio_from_numerator};
use crate::zeros::{ZeroPoint, ZeroReport};

/// `zeta_hat^{SL_r}(-rs) = T^{-(g-1)} sum A(i) T^i / ((1-T)(1-QT))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SlrNumerator {
    pub r: usize,
    pub q: u64,
    pub g: usize,
    /// `A(0) .. A(2g)` as produced by the formula.
    pub coeffs: Vec<Rational>,
    /// `coeffs / A(0)`.
    pub normalized: Vec<Rational>,
    /// `alpha(ri) / alpha(0)` for `i < g`.
    pub alpha_ratios: Vec<Rational>,
    /// `beta / alpha(0)`.
    pub beta_ratio: Rational,
    /// `A(2g - i) = Q^{g-i} A(i)` for every `i`.
    pub symmetric: bool,
}

impl SlrNumerator {
    pub fn big_q(&self) -> Rational {
        rpow(&rat(self.q as i64), self.r as i64)
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    pub fn poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }
}

/// `T^{g-1} F(1/T)(1-T)(1-QT)` as a polynomial, where `F` is the combined
/// form in `u`.
fn numerator_poly(z: &SlrZeta) -> Result<Poly> {
    let big_q = rpow(&rat(z.q as i64), z.r as i64);
    let factor = Poly::one_minus(Rational::one(), 1) * Poly::one_minus(big_q, 1);
    let f = z
        .combined
        .substitute(&Rational::one(), -1)
        .mul_var_power(z.g as i64 - 1);
    let n = &f * &RationalFunction::from_poly(factor);
    if !n.is_polynomial() || n.num().degree().is_some_and(|d| d > 2 * z.g) {
        return Err(Error::Shape(format!(
            "T^(g-1) F(1/T)(1-T)(1-QT) = {n} is not a polynomial of degree <= {}",
            2 * z.g
        )));
    }
    Ok(n.num().clone())
}

/// Numerator coefficients and the derived invariant ratios. At `r = 2` the
/// constant term must be exactly 1; above that it is reported as found.
pub fn slr_numerator(z: &SlrZeta) -> Result<SlrNumerator> {
    let p = numerator_poly(z)?;
    let coeffs: Vec<Rational> = (0..=2 * z.g).map(|i| p.coeff(i)).collect();
    let a0 = coeffs[0].clone();
    if a0.is_zero() || (z.r == 2 && !a0.is_one()) {
        return Err(Error::Normalization(format!(
            "constant term {} at rank {}",
            crate::algebra::fmt_rational(&a0),
            z.r
        )));
    }
    let normalized: Vec<Rational> = coeffs.iter().map(|c| c / &a0).collect();
    let big_q = rpow(&rat(z.q as i64), z.r as i64);
    let g = z.g;
    let symmetric = (0..=2 * g).all(|i| coeffs[2 * g - i] == rpow(&big_q, g as i64 - i as i64) * &coeffs[i]);
    Ok(SlrNumerator {
        r: z.r,
        q: z.q,
        g,
        alpha_ratios: alpha_ratios_from_numerator(&normalized, &big_q, g),
        beta_ratio: beta_ratio_from_numerator(&normalized, &big_q, g),
        coeffs,
        normalized,
        symmetric,
    })
}

/// Zeros of the numerator in `T = q^{-rs}`, read on the line `Re s = 1/2`.
///
/// Each zero is reported as `t = T^{1/r}` (principal branch) so that the
/// target modulus is `q^{-1/2}` for every rank; `deviation` is
/// `|Re s - 1/2|` with `Re s = -ln|T| / (r ln q)`. Roots at `T = 1` and
/// `T = 1/Q` are poles of the full function and are removed first.
pub fn slr_rh_report(z: &SlrZeta, tol: f64) -> Result<ZeroReport> {
    let mut p = numerator_poly(z)?;
    let big_q = rpow(&rat(z.q as i64), z.r as i64);
    for pole in [Rational::one(), big_q.recip()] {
        let lin = Poly::new(vec![-pole.clone(), Rational::one()]);
        while p.degree().is_some_and(|d| d > 0) && p.eval(&pole).is_zero() {
            p = p.div_exact(&lin).expect("exact linear factor");
        }
    }
    let ln_q = (z.q as f64).ln();
    let r = z.r as f64;
    let (zeros, residual) = if p.degree().unwrap_or(0) == 0 {
        (Vec::new(), 0.0)
    } else {
        let set = complex_roots(&p)?;
        let residual = set.max_residual();
        let pts = set
            .roots
            .iter()
            .map(|&big_t: &Complex64| {
                let t = big_t.powf(1.0 / r);
                let re_s = -big_t.norm().ln() / (r * ln_q);
                ZeroPoint {
                    re: t.re,
                    im: t.im,
                    modulus: t.norm(),
                    deviation: (re_s - 0.5).abs(),
                }
            })
            .collect();
        (pts, residual)
    };
    let target = to_f64(&rat(z.q as i64)).powf(-0.5);
    Ok(ZeroReport::assemble("t", zeros, target, tol, residual))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::artin::CurveData;
    use crate::rank2::{rank2_closed_form, rank2_numerator};

    fn ell() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 2]).unwrap()
    }

    fn g2() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 0, 0, 4]).unwrap()
    }

    #[test]
    fn rank_two_numerator_is_the_rank_two_zeta() {
        for c in [ell(), g2()] {
            let z = slr_zeta(&c, 2).unwrap();
            let n = slr_numerator(&z).unwrap();
            assert_eq!(n.coeffs, rank2_numerator(&c).unwrap().t_coeffs());
            assert!(n.symmetric);
            let pulled = rank2_closed_form(&c)
                .unwrap()
                .laurent()
                .substitute(&Rational::one(), -1);
            assert_eq!(proportionality_constant(&z.combined, &pulled), Some(rat(1)));
        }
        let n = slr_numerator(&slr_zeta(&g2(), 2).unwrap()).unwrap();
        assert_eq!(n.alpha_ratios, vec![rat(1), crate::algebra::ratio(13, 2)]);
    }

    #[test]
    fn rank_three_numerator() {
        let n = slr_numerator(&slr_zeta(&ell(), 3).unwrap()).unwrap();
        assert_eq!(n.coeffs, vec![rat(2), rat(4), rat(16)]);
        assert!(n.symmetric);
        assert_eq!(n.normalized[2], rat(8));
    }

    #[test]
    fn rh_rank_two() {
        let rep = slr_rh_report(&slr_zeta(&ell(), 2).unwrap(), 1e-9).unwrap();
        assert!(rep.verdict);
        assert_eq!(rep.zeros.len(), 2);
        for zp in &rep.zeros {
            assert!((zp.modulus - 2f64.powf(-0.5)).abs() < 1e-9);
        }
    }
}
