use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Power series truncated after `x^order`; always holds `order + 1` coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<Rational>,
}

impl TruncatedSeries {
    pub fn new(mut coeffs: Vec<Rational>, order: usize) -> Self {
        coeffs.resize(order + 1, Rational::zero());
        TruncatedSeries { coeffs }
    }

    pub fn from_poly(p: &Poly, order: usize) -> Self {
        Self::new(p.coeffs().iter().take(order + 1).cloned().collect(), order)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> &Rational {
        &self.coeffs[i]
    }

    pub fn to_poly(&self) -> Poly {
        Poly::new(self.coeffs.clone())
    }

    pub fn mul(&self, other: &TruncatedSeries) -> TruncatedSeries {
        let m = self.order().min(other.order());
        let mut out = vec![Rational::zero(); m + 1];
        for (i, a) in self.coeffs.iter().enumerate().take(m + 1) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate().take(m + 1 - i) {
                out[i + j] += a * b;
            }
        }
        TruncatedSeries { coeffs: out }
    }

    /// Multiplicative inverse; the constant term must be nonzero.
    pub fn inverse(&self) -> Result<TruncatedSeries> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::InvalidInput(
                "series with zero constant term has no inverse".into(),
            ));
        }
        let inv0 = c0.recip();
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        out[0] = inv0.clone();
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                acc += &self.coeffs[j] * &out[k - j];
            }
            out[k] = -acc * &inv0;
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal exponential of a series with zero constant term.
    pub fn exp(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::InvalidInput(
                "exp needs a series with zero constant term".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        out[0] = Rational::one();
        // n f_n = sum_{k=1}^n k c_k f_{n-k}
        for m in 1..n {
            let mut acc = Rational::zero();
            for k in 1..=m {
                acc += &self.coeffs[k] * &out[m - k] * Rational::from_integer(k.into());
            }
            out[m] = acc / Rational::from_integer(m.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }

    /// Formal logarithm of a series with constant term 1.
    pub fn log(&self) -> Result<TruncatedSeries> {
        if !self.coeffs[0].is_one() {
            return Err(Error::InvalidInput(
                "log needs a series with constant term 1".into(),
            ));
        }
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for m in 1..n {
            let mut acc = &self.coeffs[m] * Rational::from_integer(m.into());
            for (k, o) in out.iter().enumerate().take(m).skip(1) {
                acc -= o * &self.coeffs[m - k] * Rational::from_integer(k.into());
            }
            out[m] = acc / Rational::from_integer(m.into());
        }
        Ok(TruncatedSeries { coeffs: out })
    }
}

/// Formal exponential, see [`TruncatedSeries::exp`].
pub fn series_exp(c: &TruncatedSeries) -> Result<TruncatedSeries> {
    c.exp()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn exp_examples() {
        let zero = TruncatedSeries::new(vec![], 3);
        assert_eq!(
            series_exp(&zero).unwrap().coeffs(),
            &[rat(1), rat(0), rat(0), rat(0)]
        );

        let x = TruncatedSeries::new(vec![rat(0), rat(1)], 3);
        assert_eq!(
            x.exp().unwrap().coeffs(),
            &[rat(1), rat(1), ratio(1, 2), ratio(1, 6)]
        );

        // sum (2^m + 1) t^m / m  ->  1/((1-t)(1-2t))
        let c: Vec<_> = (0..=3i64)
            .map(|m| if m == 0 { rat(0) } else { ratio((1 << m) + 1, m) })
            .collect();
        let e = TruncatedSeries::new(c, 3).exp().unwrap();
        assert_eq!(e.coeffs(), &[rat(1), rat(3), rat(7), rat(15)]);
    }

    #[test]
    fn exp_rejects_constant_term() {
        let s = TruncatedSeries::new(vec![rat(1)], 2);
        assert!(matches!(s.exp(), Err(Error::InvalidInput(_))));
    }

    #[test]
    fn inverse_of_geometric() {
        let s = TruncatedSeries::new(vec![rat(1), rat(-2)], 4);
        let inv = s.inverse().unwrap();
        assert_eq!(inv.coeffs(), &[rat(1), rat(2), rat(4), rat(8), rat(16)]);
    }
}
