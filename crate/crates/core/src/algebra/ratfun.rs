use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::{Poly, Rational};
use crate::error::{Error, Result};

/// Quotient of two rational polynomials in lowest terms.
///
/// Invariants: the denominator is nonzero and monic, and
/// `gcd(num, den) = 1`. The zero function is `0/1`. Because the form is
/// canonical, structural equality coincides with equality of functions.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: Poly,
    den: Poly,
}

impl RationalFunction {
    pub fn new(num: Poly, den: Poly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::canonical(num, den))
    }

    fn canonical(num: Poly, den: Poly) -> Self {
        if num.is_zero() {
            return RationalFunction {
                num: Poly::zero(),
                den: Poly::one(),
            };
        }
        let g = num.gcd(&den);
        let (num, den) = if g.degree() == Some(0) {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let lead = den.leading().unwrap().recip();
        RationalFunction {
            num: num.scale(&lead),
            den: den.scale(&lead),
        }
    }

    pub fn from_poly(p: Poly) -> Self {
        RationalFunction {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn constant(c: Rational) -> Self {
        Self::from_poly(Poly::constant(c))
    }

    /// The variable itself.
    pub fn var() -> Self {
        Self::from_poly(Poly::monomial(Rational::one(), 1))
    }

    /// `c * x^k` for any integer `k`.
    pub fn monomial(c: Rational, k: i64) -> Self {
        if k >= 0 {
            Self::from_poly(Poly::monomial(c, k as usize))
        } else {
            Self::canonical(Poly::constant(c), Poly::monomial(Rational::one(), (-k) as usize))
        }
    }

    pub fn num(&self) -> &Poly {
        &self.num
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.degree() == Some(0)
    }

    pub fn inv(&self) -> Result<Self> {
        Self::new(self.den.clone(), self.num.clone())
    }

    pub fn pow(&self, e: i64) -> Self {
        let base = if e < 0 {
            self.inv().expect("zero to a negative power")
        } else {
            self.clone()
        };
        let n = e.unsigned_abs() as usize;
        RationalFunction {
            num: base.num.pow(n),
            den: base.den.pow(n),
        }
    }

    /// Value at `x`, or `None` at a pole.
    pub fn eval(&self, x: &Rational) -> Option<Rational> {
        let d = self.den.eval(x);
        if d.is_zero() {
            None
        } else {
            Some(self.num.eval(x) / d)
        }
    }

    /// Order of the pole at `x0` (0 when regular).
    pub fn pole_order(&self, x0: &Rational) -> usize {
        self.den.root_multiplicity(x0)
    }

    /// Substitute `x -> c * x^k` for any nonzero integer `k`.
    pub fn substitute(&self, c: &Rational, k: i64) -> Self {
        assert!(k != 0 && !c.is_zero());
        if k > 0 {
            let k = k as usize;
            return Self::canonical(
                self.num.substitute_monomial(c, k),
                self.den.substitute_monomial(c, k),
            );
        }
        let k = (-k) as usize;
        let one = Rational::one();
        let n = self.num.reciprocal_substitute(c).substitute_monomial(&one, k);
        let d = self.den.reciprocal_substitute(c).substitute_monomial(&one, k);
        let dn = self.num.degree().unwrap_or(0);
        let dd = self.den.degree().unwrap_or(0);
        // p(c/x^k) = x^{-k deg p} * rev(p)(x^k)
        if dd >= dn {
            Self::canonical(n.shift(k * (dd - dn)), d)
        } else {
            Self::canonical(n, d.shift(k * (dn - dd)))
        }
    }

    /// Multiply by `x^k`.
    pub fn mul_var_power(&self, k: i64) -> Self {
        self * &Self::monomial(Rational::one(), k)
    }

    /// Evaluate numerator and denominator in floating point at a complex point.
    pub fn eval_complex(&self, z: num_complex::Complex64) -> num_complex::Complex64 {
        eval_poly_complex(&self.num, z) / eval_poly_complex(&self.den, z)
    }
}

pub(crate) fn eval_poly_complex(p: &Poly, z: num_complex::Complex64) -> num_complex::Complex64 {
    p.coeffs()
        .iter()
        .rev()
        .fold(num_complex::Complex64::new(0.0, 0.0), |acc, c| {
            acc * z + super::to_f64(c)
        })
}

/// True iff `f.num * g.den == g.num * f.den`.
pub fn ratfun_equal(f: &RationalFunction, g: &RationalFunction) -> bool {
    &f.num * &g.den == &g.num * &f.den
}

/// `f(u0)` when `f` is regular at `u0`, and `lim_{u->u0} (1 - u/u0) f(u)` at a
/// simple pole.
pub fn pole_regularized_value(f: &RationalFunction, u0: &Rational) -> Result<Rational> {
    match f.pole_order(u0) {
        0 => Ok(f.eval(u0).expect("regular point")),
        1 => {
            if u0.is_zero() {
                return Err(Error::InvalidInput(
                    "regularization at a pole at the origin".into(),
                ));
            }
            let lin = Poly::new(vec![-u0.clone(), Rational::one()]);
            let rest = f.den.div_exact(&lin).expect("simple root");
            // (1 - u/u0) = -(u - u0)/u0
            Ok(-f.num.eval(u0) / (u0 * rest.eval(u0)))
        }
        order => Err(Error::UnsupportedPoleOrder { order }),
    }
}

impl Zero for RationalFunction {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
}

impl One for RationalFunction {
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
}

impl From<Rational> for RationalFunction {
    fn from(c: Rational) -> Self {
        Self::constant(c)
    }
}

impl From<Poly> for RationalFunction {
    fn from(p: Poly) -> Self {
        Self::from_poly(p)
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.den == rhs.den {
            return RationalFunction::canonical(&self.num + &rhs.num, self.den.clone());
        }
        RationalFunction::canonical(
            &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
            &self.den * &rhs.den,
        )
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        RationalFunction::canonical(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &RationalFunction {
    type Output = RationalFunction;
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        assert!(!rhs.is_zero(), "division by the zero rational function");
        RationalFunction::canonical(&self.num * &rhs.den, &self.den * &rhs.num)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: RationalFunction) -> RationalFunction { (&self).$m(&rhs) }
        }
        impl $tr<&RationalFunction> for RationalFunction {
            type Output = RationalFunction;
            fn $m(self, rhs: &RationalFunction) -> RationalFunction { (&self).$m(rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_polynomial() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({}) / ({})", self.num, self.den)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{rat, ratio};

    fn rf(n: &[i64], d: &[i64]) -> RationalFunction {
        RationalFunction::new(Poly::from_ints(n), Poly::from_ints(d)).unwrap()
    }

    #[test]
    fn equality_examples() {
        assert!(ratfun_equal(&rf(&[1, 0, -1], &[1, -1]), &rf(&[1, 1], &[1])));
        assert!(!ratfun_equal(&rf(&[0, 1], &[1]), &rf(&[1, 1], &[1])));
        assert_eq!(rf(&[1, 0, -1], &[1, -1]), rf(&[1, 1], &[1]));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RationalFunction::new(Poly::one(), Poly::zero()),
            Err(Error::ZeroDenominator)
        );
    }

    #[test]
    fn regularized_values() {
        assert_eq!(
            pole_regularized_value(&rf(&[1], &[1, -1]), &rat(1)).unwrap(),
            rat(1)
        );
        let f = &rf(&[1, 0, 2], &[1, -1]) / &rf(&[1, -2], &[1]);
        assert_eq!(pole_regularized_value(&f, &rat(1)).unwrap(), rat(-3));
        assert_eq!(
            pole_regularized_value(&rf(&[0, 0, 1], &[1]), &rat(1)).unwrap(),
            rat(1)
        );
        let double = rf(&[1], &[1, -2, 1]);
        assert_eq!(
            pole_regularized_value(&double, &rat(1)),
            Err(Error::UnsupportedPoleOrder { order: 2 })
        );
    }

    #[test]
    fn substitution_roundtrip() {
        let f = rf(&[1, 1, 4], &[4, -5, 1]);
        // x -> 4/x twice is the identity
        let back = f.substitute(&rat(4), -1).substitute(&rat(4), -1);
        assert_eq!(back, f);
        // x -> 1/x^2 on 1/(1-x) is x^2/(x^2-1)
        let g = rf(&[1], &[1, -1]).substitute(&rat(1), -2);
        assert_eq!(g, rf(&[0, 0, 1], &[-1, 0, 1]));
        assert_eq!(f.substitute(&ratio(1, 2), 1).eval(&rat(2)), f.eval(&rat(1)));
    }
}
