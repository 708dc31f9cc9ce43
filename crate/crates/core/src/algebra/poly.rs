use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{fmt_rational, rpow, Rational};

/// Univariate polynomial with exact rational coefficients, lowest degree first.
///
/// Trailing zeros are always stripped, so the zero polynomial has no
/// coefficients and `degree()` is `None` for it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Rational>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rational>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn from_ints(coeffs: &[i64]) -> Self {
        Poly::new(coeffs.iter().map(|&c| super::rat(c)).collect())
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Poly::new(vec![c])
    }

    /// `c * x^k`
    pub fn monomial(c: Rational, k: usize) -> Self {
        let mut coeffs = vec![Rational::zero(); k + 1];
        coeffs[k] = c;
        Poly::new(coeffs)
    }

    /// `1 - c x^k`, the shape of every Euler-type factor in this crate.
    pub fn one_minus(c: Rational, k: usize) -> Self {
        &Poly::one() - &Poly::monomial(c, k)
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Rational> {
        self.coeffs
    }

    pub fn coeff(&self, i: usize) -> Rational {
        self.coeffs.get(i).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Rational> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn eval(&self, x: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x + c)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some(l) => self.scale(&l.recip()),
            None => Poly::zero(),
        }
    }

    /// Multiply by `x^k`.
    pub fn shift(&self, k: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rational::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Poly { coeffs }
    }

    /// Drop the factor `x^v` where `v` is the valuation.
    pub fn strip_x_power(&self) -> (Poly, usize) {
        match self.valuation() {
            Some(v) => (Poly::new(self.coeffs[v..].to_vec()), v),
            None => (Poly::zero(), 0),
        }
    }

    pub fn derivative(&self) -> Poly {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * Rational::from_integer((i as i64).into()))
                .collect(),
        )
    }

    pub fn pow(&self, e: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    /// `p(c * x^k)` for `k >= 1`.
    pub fn substitute_monomial(&self, c: &Rational, k: usize) -> Poly {
        assert!(k >= 1);
        let mut out = vec![Rational::zero(); self.coeffs.len().saturating_sub(1) * k + 1];
        let mut cp = Rational::one();
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i * k] = a * &cp;
            cp *= c;
        }
        Poly::new(out)
    }

    /// The reversed polynomial `x^deg p(c/x)` where `deg = self.degree()`.
    pub fn reciprocal_substitute(&self, c: &Rational) -> Poly {
        let n = self.coeffs.len();
        let mut out = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[n - 1 - i] = a * rpow(c, i as i64);
        }
        Poly::new(out)
    }

    /// Euclidean division. Panics when dividing by zero.
    pub fn div_rem(&self, d: &Poly) -> (Poly, Poly) {
        let dd = d.degree().expect("division by the zero polynomial");
        let lead_inv = d.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return (Poly::zero(), self.clone());
        }
        let mut quot = vec![Rational::zero(); rem.len() - dd];
        for i in (0..quot.len()).rev() {
            let c = &rem[i + dd] * &lead_inv;
            if !c.is_zero() {
                for (j, dc) in d.coeffs.iter().enumerate() {
                    rem[i + j] -= &c * dc;
                }
            }
            quot[i] = c;
        }
        rem.truncate(dd);
        (Poly::new(quot), Poly::new(rem))
    }

    /// Exact division; `None` if the remainder is nonzero.
    pub fn div_exact(&self, d: &Poly) -> Option<Poly> {
        let (q, r) = self.div_rem(d);
        r.is_zero().then_some(q)
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Poly) -> Poly {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.div_rem(&b).1;
            a = b;
            // keeping the remainder monic tames coefficient growth
            b = r.monic();
        }
        a.monic()
    }

    /// Multiplicity of the root `x0`.
    pub fn root_multiplicity(&self, x0: &Rational) -> usize {
        if self.is_zero() {
            return usize::MAX;
        }
        let lin = Poly::new(vec![-x0.clone(), Rational::one()]);
        let mut p = self.clone();
        let mut m = 0;
        while let Some(q) = p.div_exact(&lin) {
            p = q;
            m += 1;
        }
        m
    }

    /// Squarefree decomposition `p = c * prod f_i^i` (Yun). Returns `(f_i, i)`
    /// for the non-constant factors.
    pub fn squarefree_decomposition(&self) -> Vec<(Poly, usize)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a0 = f.gcd(&df);
        let mut b = f.div_exact(&a0).expect("gcd divides");
        let mut c = df.div_exact(&a0).expect("gcd divides");
        let mut d = &c - &b.derivative();
        let mut i = 1;
        while b.degree().unwrap_or(0) > 0 {
            let a = b.gcd(&d);
            if a.degree().unwrap_or(0) > 0 {
                out.push((a.clone(), i));
            }
            b = b.div_exact(&a).expect("gcd divides");
            c = d.div_exact(&a).expect("gcd divides");
            d = &c - &b.derivative();
            i += 1;
        }
        out
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Poly::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        if self.is_zero() || rhs.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Rational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Poly::new(out)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::new(self.coeffs.iter().map(|c| -c).collect())
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Poly {
            type Output = Poly;
            fn $m(self, rhs: Poly) -> Poly { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let neg = super::is_negative(c);
            let abs = if neg { -c } else { c.clone() };
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            let show_coeff = i == 0 || !abs.is_one();
            if show_coeff {
                write!(f, "{}", fmt_rational(&abs))?;
            }
            match i {
                0 => {}
                1 => write!(f, "{}x", if show_coeff { "*" } else { "" })?,
                _ => write!(f, "{}x^{}", if show_coeff { "*" } else { "" }, i)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    #[test]
    fn canonical_degree_of_product() {
        let a = Poly::from_ints(&[1, 2, 0, 3]);
        let b = Poly::from_ints(&[-1, 0, 5]);
        assert_eq!((&a * &b).degree(), Some(5));
        assert!(Poly::from_ints(&[0, 0, 0]).is_zero());
    }

    #[test]
    fn division_and_gcd() {
        // (1 - t)(1 - 2t)(1 + t^2)
        let f = Poly::from_ints(&[1, -1]) * Poly::from_ints(&[1, -2]) * Poly::from_ints(&[1, 0, 1]);
        let g = Poly::from_ints(&[1, -1]) * Poly::from_ints(&[3, 1]);
        assert_eq!(f.gcd(&g), Poly::from_ints(&[-1, 1]));
        let (q, r) = f.div_rem(&Poly::from_ints(&[1, 0, 1]));
        assert!(r.is_zero());
        assert_eq!(q, Poly::from_ints(&[1, -3, 2]));
    }

    #[test]
    fn substitutions() {
        let p = Poly::from_ints(&[1, 2, 3]);
        // p(2x^2) = 1 + 4x^2 + 12x^4
        assert_eq!(
            p.substitute_monomial(&rat(2), 2),
            Poly::from_ints(&[1, 0, 4, 0, 12])
        );
        // x^2 p(1/x) = x^2 + 2x + 3
        assert_eq!(p.reciprocal_substitute(&rat(1)), Poly::from_ints(&[3, 2, 1]));
        assert_eq!(p.eval(&ratio(1, 2)), ratio(11, 4));
    }

    #[test]
    fn squarefree_parts() {
        // (x-1)^2 (x+2)
        let p = Poly::from_ints(&[-1, 1]).pow(2) * Poly::from_ints(&[2, 1]);
        let sf = p.squarefree_decomposition();
        assert_eq!(
            sf,
            vec![(Poly::from_ints(&[2, 1]), 1), (Poly::from_ints(&[-1, 1]), 2)]
        );
        assert_eq!(p.root_multiplicity(&rat(1)), 2);
    }
}
