//! The rank-two `SL_2`-type zeta built from `Y(2s)` and `Y(2s-1)`, its
//! Riemann hypothesis, and the multiplicity deformation that breaks it.
//!
//! Everything lives in `t = q^{-s}`. Exact objects carry a separate power
//! of `sqrt(q)` so half-integral shifts stay rational.

use std::cmp::Ordering;
use std::fmt;

use num_complex::Complex64;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

use crate::algebra::{complex_roots, rat, rpow, to_f64, Poly, Rational, RationalFunction};
use crate::artin::{zeta_hat_u, CurveData};
use crate::error::{Error, Result};
use crate::group_zeta::slr_zeta;
use crate::zeros::ZeroReport;

fn hypothesis(msg: String) -> Error {
    Error::Hypothesis(msg)
}

/// `(q-1)(1-|w|^2)[(q+1)(1+|w|^2) - 2c Re w]`, which is
/// `|w-a|^2|w-b|^2 - |1-aw|^2|1-bw|^2` for `a + b = c`, `ab = q`.
pub fn circle_difference(q: f64, c: f64, w: Complex64) -> f64 {
    let n = w.norm_sqr();
    (q - 1.0) * (1.0 - n) * ((q + 1.0) * (1.0 + n) - 2.0 * c * w.re)
}

/// Compare `|w-a||w-b|` with `|1-aw||1-bw|`: `Greater` inside the unit
/// circle, `Less` outside, `Equal` on it.
pub fn lemma1_compare(q: f64, c: f64, w: Complex64) -> Result<Ordering> {
    if q.is_nan() || q <= 1.0 || c.abs() > q + 1.0 {
        return Err(hypothesis(format!(
            "need q > 1 and |c| <= q + 1, got q = {q}, c = {c}"
        )));
    }
    let d = circle_difference(q, c, w);
    Ok(d.partial_cmp(&0.0).unwrap_or(Ordering::Equal))
}

/// [`lemma1_compare`] in exact arithmetic, `w = re + i im`.
pub fn lemma1_compare_exact(q: &Rational, c: &Rational, re: &Rational, im: &Rational) -> Result<Ordering> {
    let one = Rational::one();
    if q <= &one || c.abs() > q + &one {
        return Err(hypothesis(format!(
            "need q > 1 and |c| <= q + 1, got q = {q}, c = {c}"
        )));
    }
    let n = re * re + im * im;
    let d = (q - &one) * (&one - &n) * ((q + &one) * (&one + &n) - rat(2) * c * re);
    Ok(d.cmp(&Rational::zero()))
}

/// Pairs `(alpha_i, beta_i)` with `alpha_i beta_i = q`, stored through
/// their real sums `c_i = alpha_i + beta_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeilPairSet {
    pub q: Rational,
    pub c: Vec<Rational>,
}

impl WeilPairSet {
    pub fn new(q: Rational, c: Vec<Rational>) -> Result<Self> {
        if q <= Rational::one() {
            return Err(hypothesis(format!("q = {q} must exceed 1")));
        }
        let bound = &q + Rational::one();
        if let Some(bad) = c.iter().find(|ci| ci.abs() > bound) {
            return Err(hypothesis(format!("|c| = {} exceeds q + 1", bad.abs())));
        }
        Ok(WeilPairSet { q, c })
    }

    pub fn g(&self) -> usize {
        self.c.len()
    }

    /// Every pair is complex conjugate on the circle `|z| = sqrt(q)`.
    pub fn is_geometric(&self) -> bool {
        self.c.iter().all(|ci| ci * ci <= rat(4) * &self.q)
    }

    /// Roots of `z^2 - c z + q`.
    pub fn pairs(&self) -> Vec<(Complex64, Complex64)> {
        let q = to_f64(&self.q);
        self.c
            .iter()
            .map(|ci| {
                let c = to_f64(ci);
                let disc = Complex64::new(c * c - 4.0 * q, 0.0).sqrt();
                ((c + disc) / 2.0, (c - disc) / 2.0)
            })
            .collect()
    }

    /// `prod (1 - c_i T + q T^2)`.
    pub fn numerator(&self) -> Poly {
        self.c.iter().fold(Poly::one(), |acc, ci| {
            &acc * &Poly::new(vec![Rational::one(), -ci.clone(), self.q.clone()])
        })
    }
}

/// Parameters of `C_1(s) = q^{as}(1+q^{-s}) q^{-hs} prod (1 - gamma_j q^{s-1/2})(1 - delta_j q^{s-1/2})`,
/// with each extra pair stored through `e_j = gamma_j + delta_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct C1Params {
    pub a: Rational,
    pub extra_sums: Vec<Rational>,
}

impl C1Params {
    /// `a = 1` and no extra pairs.
    pub fn canonical() -> Self {
        C1Params {
            a: Rational::one(),
            extra_sums: Vec::new(),
        }
    }

    pub fn with_a(a: i64) -> Self {
        C1Params {
            a: rat(a),
            extra_sums: Vec::new(),
        }
    }

    pub fn validate(&self, q: &Rational) -> Result<()> {
        if self.a.is_negative() {
            return Err(hypothesis(format!("a = {} must be nonnegative", self.a)));
        }
        let bound = q + Rational::one();
        if let Some(e) = self.extra_sums.iter().find(|e| e.abs() > bound) {
            return Err(hypothesis(format!("|gamma + delta| = {} exceeds q + 1", e.abs())));
        }
        Ok(())
    }
}

/// `sqrt(q)^{sqrt_q_exp} * t^{t_shift} * f(t)`, with `f` free of factors
/// of `t` in numerator and denominator.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TrackedRational {
    pub sqrt_q_exp: i64,
    pub t_shift: i64,
    pub f: RationalFunction,
}

impl TrackedRational {
    pub fn new(sqrt_q_exp: i64, whole: RationalFunction) -> Self {
        let (_, kn) = whole.num().strip_x_power();
        let (_, kd) = whole.den().strip_x_power();
        let shift = kn as i64 - kd as i64;
        TrackedRational {
            sqrt_q_exp,
            t_shift: shift,
            f: whole.mul_var_power(-shift),
        }
    }

    /// `t^{t_shift} f(t)`, without the `sqrt(q)` factor.
    pub fn whole(&self) -> RationalFunction {
        self.f.mul_var_power(self.t_shift)
    }

    pub fn eval(&self, q: f64, t: Complex64) -> Complex64 {
        q.powf(self.sqrt_q_exp as f64 / 2.0) * t.powi(self.t_shift as i32) * self.f.eval_complex(t)
    }

    /// Equal as functions of `t` for this `q`.
    pub fn same_as(&self, other: &TrackedRational, q: &Rational) -> bool {
        let d = self.sqrt_q_exp - other.sqrt_q_exp;
        if d % 2 != 0 {
            return self.whole().is_zero() && other.whole().is_zero();
        }
        self.whole() * RationalFunction::constant(rpow(q, d / 2)) == other.whole()
    }
}

impl fmt::Display for TrackedRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "q^({}/2) * t^{} * ({})", self.sqrt_q_exp, self.t_shift, self.f)
    }
}

/// The data behind `X_1`, `X` and `Y`: `X_1(s) = P(q^{-s})` with
/// `deg P = 2g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct XYData {
    pub q: Rational,
    pub g: usize,
    pub p: Poly,
}

pub fn build_xy(ws: &WeilPairSet) -> XYData {
    XYData {
        q: ws.q.clone(),
        g: ws.g(),
        p: ws.numerator(),
    }
}

impl XYData {
    pub fn from_curve(c: &CurveData) -> Self {
        XYData {
            q: c.qr(),
            g: c.g,
            p: c.numerator(),
        }
    }

    /// `X_1` replaced by `X_1^m`; the genus in the shift of `Y` becomes `mg`.
    pub fn with_multiplicity(&self, m: usize) -> Self {
        XYData {
            q: self.q.clone(),
            g: self.g * m,
            p: self.p.pow(m),
        }
    }

    /// `X_1` in `t`.
    pub fn x1_t(&self) -> Poly {
        self.p.clone()
    }

    /// `X` in `t`.
    pub fn x_t(&self) -> RationalFunction {
        let den = Poly::one_minus(Rational::one(), 1) * Poly::one_minus(self.q.clone(), 1);
        RationalFunction::new(self.p.clone(), den).expect("nonzero denominator")
    }

    /// `u^{1-g} X(u)`, so that `Y(sigma) = q^{(1-g)/2} hat(q^{-sigma})`.
    fn hat(&self) -> RationalFunction {
        self.x_t().mul_var_power(1 - self.g as i64)
    }

    /// `Y(m s + n)` in `t`.
    pub fn y_tracked(&self, m: i64, n: i64) -> TrackedRational {
        TrackedRational::new(1 - self.g as i64, self.hat().substitute(&rpow(&self.q, -n), m))
    }

    /// `X_1(1-s) = q^{g(2s-1)} X_1(s)`, i.e. `P(1/(qt)) = q^{-g} t^{-2g} P(t)`.
    pub fn x1_fe_check(&self) -> bool {
        let lhs = RationalFunction::from_poly(self.p.clone()).substitute(&self.q.recip(), -1);
        let rhs = RationalFunction::from_poly(self.p.clone()).mul_var_power(-2 * self.g as i64)
            * RationalFunction::constant(rpow(&self.q, -(self.g as i64)));
        lhs == rhs
    }

    /// `Y(1-s) = Y(s)`.
    pub fn y_fe_check(&self) -> bool {
        let y = self.y_tracked(1, 0);
        let flipped = TrackedRational::new(y.sqrt_q_exp, y.whole().substitute(&self.q.recip(), -1));
        flipped.same_as(&y, &self.q)
    }

    fn qf(&self) -> f64 {
        to_f64(&self.q)
    }

    fn eval_p(&self, z: Complex64) -> Complex64 {
        self.p
            .coeffs()
            .iter()
            .rev()
            .fold(Complex64::zero(), |acc, c| acc * z + to_f64(c))
    }

    /// `Y(sigma)` straight from the definition.
    pub fn eval_y(&self, sigma: Complex64) -> Complex64 {
        let q = self.qf();
        let qs = |z: Complex64| (z * q.ln()).exp();
        let x = self.eval_p(qs(-sigma)) / ((1.0 - qs(-sigma)) * (1.0 - qs(1.0 - sigma)));
        qs((self.g as f64 - 1.0) * (sigma - 0.5)) * x
    }
}

/// Rational `sqrt(q)` when `q` is a perfect square.
fn sqrt_rational(q: &Rational) -> Option<Rational> {
    let isqrt = |n: &num_bigint::BigInt| {
        let r = n.sqrt();
        (&r * &r == *n).then_some(r)
    };
    Some(Rational::new(isqrt(q.numer())?, isqrt(q.denom())?))
}

/// A member of the family, evaluable numerically and, for rational
/// parameters, held exactly.
#[derive(Clone, Debug, PartialEq)]
pub struct Zeta2 {
    pub xy: XYData,
    /// `None` for the starred variant with `C_1 = 1`.
    pub params: Option<C1Params>,
    pub exact: Option<TrackedRational>,
}

impl Zeta2 {
    fn c1_eval(&self, s: Complex64) -> Complex64 {
        let Some(p) = &self.params else {
            return Complex64::one();
        };
        let q = self.xy.qf();
        let qs = |z: Complex64| (z * q.ln()).exp();
        let h = p.extra_sums.len() as f64;
        let mut v = qs(to_f64(&p.a) * s) * (1.0 + qs(-s)) * qs(-h * s);
        for e in &p.extra_sums {
            let x = qs(s - 0.5);
            v *= 1.0 - to_f64(e) * x + q * x * x;
        }
        v
    }

    /// Direct evaluation of
    /// `C_1(s) Y(2s)/(1 - q^{1-s}) - C_1(1-s) q^{-s} Y(2s-1)/(1 - q^{-s})`.
    pub fn eval(&self, s: Complex64) -> Complex64 {
        let q = self.xy.qf();
        let qs = |z: Complex64| (z * q.ln()).exp();
        self.c1_eval(s) * self.xy.eval_y(2.0 * s) / (1.0 - qs(1.0 - s))
            - self.c1_eval(1.0 - s) * qs(-s) * self.xy.eval_y(2.0 * s - 1.0) / (1.0 - qs(-s))
    }

    /// `zeta_2(1-s) = zeta_2(s)` exactly, when an exact form exists.
    pub fn fe_check_exact(&self) -> Option<bool> {
        let z = self.exact.as_ref()?;
        let flipped = TrackedRational::new(z.sqrt_q_exp, z.whole().substitute(&self.xy.q.recip(), -1));
        Some(flipped.same_as(z, &self.xy.q))
    }

    /// `|zeta_2(1-s) - zeta_2(s)| <= tol |zeta_2(s)|`.
    pub fn fe_check_numeric(&self, s: Complex64, tol: f64) -> bool {
        let a = self.eval(s);
        (self.eval(1.0 - s) - a).norm() <= tol * a.norm()
    }
}

/// `C_1` in `t`, or `None` when it has irrational coefficients.
fn c1_exact(q: &Rational, p: &C1Params) -> Option<RationalFunction> {
    if !p.a.is_integer() {
        return None;
    }
    let a = p.a.to_integer().to_i64()?;
    let h = p.extra_sums.len() as i64;
    let mut c = RationalFunction::from_poly(Poly::from_ints(&[1, 1])).mul_var_power(h - a);
    let root = if p.extra_sums.iter().all(|e| e.is_zero()) {
        Rational::one()
    } else {
        sqrt_rational(q)?
    };
    for e in &p.extra_sums {
        // 1 - e q^{-1/2} / t + 1/t^2
        let poly = Poly::new(vec![Rational::one(), -(e / &root), Rational::one()]);
        c = c * RationalFunction::from_poly(poly).mul_var_power(-2);
    }
    Some(c)
}

fn assemble(xy: &XYData, c1: &RationalFunction) -> TrackedRational {
    let q = &xy.q;
    let c2 = c1.substitute(&q.recip(), -1);
    let y2s = xy.y_tracked(2, 0);
    let y2s1 = xy.y_tracked(2, -1);
    let one = RationalFunction::one();
    let first = c1 * &y2s.whole() / (&one - &RationalFunction::monomial(q.clone(), 1));
    let second = &(&c2 * &RationalFunction::var()) * &y2s1.whole() / (&one - &RationalFunction::var());
    TrackedRational::new(y2s.sqrt_q_exp, first - second)
}

pub fn zeta2_family(xy: &XYData, params: &C1Params) -> Result<Zeta2> {
    params.validate(&xy.q)?;
    let exact = c1_exact(&xy.q, params).map(|c1| assemble(xy, &c1));
    Ok(Zeta2 {
        xy: xy.clone(),
        params: Some(params.clone()),
        exact,
    })
}

/// The family member with `a = 1` and no extra pairs.
pub fn zeta2_canonical(c: &CurveData) -> Result<Zeta2> {
    if c.g == 0 {
        return Err(Error::UnsupportedGenus {
            g: 0,
            reason: "the rank-two zeta needs g >= 1",
        });
    }
    zeta2_family(&XYData::from_curve(c), &C1Params::canonical())
}

/// `Y(2s)/(1 - q^{1-s}) - q^{-s} Y(2s-1)/(1 - q^{-s})`.
pub fn zeta2_star(xy: &XYData) -> Zeta2 {
    Zeta2 {
        xy: xy.clone(),
        params: None,
        exact: Some(assemble(xy, &RationalFunction::one())),
    }
}

/// `zeta_2 / ((1 + q^s)(1 + q^{1-s}) zeta^{SL_2})` with `zeta^{SL_2}` read
/// at `u = t^{-2}`, as `sqrt(q)^k * constant`, or `None` if not constant.
pub fn zeta2_vs_slr2(c: &CurveData) -> Result<Option<(i64, Rational)>> {
    let z = zeta2_canonical(c)?;
    let exact = z.exact.expect("canonical member is exact");
    let q = c.qr();
    let f = slr_zeta(c, 2)?.combined.substitute(&Rational::one(), -2);
    let pre = RationalFunction::from_poly(Poly::from_ints(&[1, 1])).mul_var_power(-1)
        * RationalFunction::from_poly(Poly::new(vec![Rational::one(), q]));
    let ratio = exact.whole() / (pre * f);
    let constant =
        (ratio.num().degree() == Some(0) && ratio.den().degree() == Some(0)).then(|| ratio.num().coeff(0));
    Ok(constant.map(|k| (exact.sqrt_q_exp, k)))
}

/// The genus-one expansion `t(1-t)(1-qt)(1-qt^2) zeta_2` against its two
/// factored forms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SexticCheck {
    pub lhs: Poly,
    /// `-(qt^2 + 1)(q^2 t^4 + (q-c-1) t^2 + 1)` as printed.
    pub printed: Poly,
    /// `-(qt^2 - 1)(q^2 t^4 + (q-c-1) t^2 + 1)`.
    pub corrected: Poly,
    pub printed_holds: bool,
    pub corrected_holds: bool,
}

pub fn sextic_identity(q: u64, c: i64) -> Result<SexticCheck> {
    let qr = rat(q as i64);
    let ws = WeilPairSet::new(qr.clone(), vec![rat(c)])?;
    let z = zeta2_family(&build_xy(&ws), &C1Params::canonical())?;
    let exact = z.exact.expect("canonical member is exact");
    let mult = Poly::new(vec![Rational::zero(), Rational::one()])
        * Poly::one_minus(Rational::one(), 1)
        * Poly::one_minus(qr.clone(), 1)
        * Poly::one_minus(qr.clone(), 2);
    let lhs_rf = exact.whole() * RationalFunction::from_poly(mult);
    if !lhs_rf.is_polynomial() {
        return Err(Error::Shape(format!("{lhs_rf} is not a polynomial")));
    }
    let lhs = lhs_rf.num().clone();
    let quartic = Poly::new(vec![
        Rational::one(),
        Rational::zero(),
        &qr - rat(c) - rat(1),
        Rational::zero(),
        &qr * &qr,
    ]);
    let printed = -&(&Poly::new(vec![Rational::one(), Rational::zero(), qr.clone()]) * &quartic);
    let corrected = -&(&Poly::new(vec![-Rational::one(), Rational::zero(), qr]) * &quartic);
    Ok(SexticCheck {
        printed_holds: lhs == printed,
        corrected_holds: lhs == corrected,
        lhs,
        printed,
        corrected,
    })
}

/// Zeros in `t` of the exact form, with the poles `t^2 in {1, 1/q, 1/q^2}`
/// divided out; verdict iff every modulus is `q^{-1/2}` within `tol`.
pub fn rh_check_zeta2(z: &Zeta2, tol: f64) -> Result<ZeroReport> {
    let exact = z
        .exact
        .as_ref()
        .ok_or_else(|| Error::InvalidInput("no exact form for these parameters".into()))?;
    let q = &z.xy.q;
    let (mut p, _) = exact.whole().num().strip_x_power();
    for x in [Rational::one(), q.recip(), q.recip() * q.recip()] {
        let quad = Poly::new(vec![-x.clone(), Rational::zero(), Rational::one()]);
        while let Some(d) = p.div_exact(&quad).filter(|_| p.degree().unwrap_or(0) >= 2) {
            p = d;
        }
        if let Some(r) = sqrt_rational(&x) {
            for root in [r.clone(), -r] {
                let lin = Poly::new(vec![-root.clone(), Rational::one()]);
                while p.degree().unwrap_or(0) >= 1 && p.eval(&root).is_zero() {
                    p = p.div_exact(&lin).expect("exact linear factor");
                }
            }
        }
    }
    let target = to_f64(q).powf(-0.5);
    if p.degree().unwrap_or(0) == 0 {
        return Ok(ZeroReport::from_moduli("t", &[], target, tol, 0.0));
    }
    let roots = complex_roots(&p)?;
    Ok(ZeroReport::from_moduli(
        "t",
        &roots.roots,
        target,
        tol,
        roots.max_residual(),
    ))
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleHit {
    pub m: usize,
    pub w1: f64,
    /// `|f - g| / max(|f|, |g|)` at `w1`.
    pub residual: f64,
    pub s_re: f64,
    pub s_im: f64,
    /// `|Re s - 1/2|`.
    pub deviation: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CounterexampleReport {
    pub q: f64,
    pub tried: Vec<usize>,
    pub hit: Option<CounterexampleHit>,
}

pub const COUNTEREXAMPLE_SAMPLES: usize = 10_000;
const EDGE: f64 = 1e-6;

/// The two sides of the root equation on the real axis, for conjugate
/// pairs `(alpha, conj alpha)` with multiplicity `m`.
pub fn counterexample_sides(q: f64, alphas: &[Complex64], m: usize, w: f64) -> (f64, f64) {
    let w2 = w * w;
    let mut left = 1.0 + q.powf(-0.5) / w;
    let mut right = 1.0 + q.powf(-0.5) * w;
    for a in alphas {
        let c = 2.0 * a.re;
        let qa = a.norm_sqr();
        left *= (w2 * w2 - c * w2 + qa).powi(m as i32);
        right *= (1.0 - c * w2 + qa * w2 * w2).powi(m as i32);
    }
    (left, right)
}

/// Smallest `m` in `m_range` for which the two sides cross inside
/// `(-sqrt q, -1)`, with the crossing located by bisection.
pub fn counterexample_search(
    q: f64,
    alphas: &[Complex64],
    m_range: std::ops::RangeInclusive<usize>,
) -> Result<CounterexampleReport> {
    if q.is_nan() || q <= 1.0 {
        return Err(hypothesis(format!("q = {q} must exceed 1")));
    }
    if let Some(a) = alphas
        .iter()
        .find(|a| (a.norm() - q.sqrt()).abs() > 1e-12 * q.sqrt())
    {
        return Err(hypothesis(format!("|alpha| = {} is not sqrt(q)", a.norm())));
    }
    let lo = -q.sqrt() + EDGE;
    let hi = -1.0 - EDGE;
    let mut tried = Vec::new();
    for m in m_range {
        tried.push(m);
        let h = |w: f64| {
            let (f, g) = counterexample_sides(q, alphas, m, w);
            f - g
        };
        let step = (hi - lo) / (COUNTEREXAMPLE_SAMPLES - 1) as f64;
        let mut prev_w = lo;
        let mut prev = h(lo);
        let mut bracket = None;
        for k in 1..COUNTEREXAMPLE_SAMPLES {
            let w = lo + step * k as f64;
            let v = h(w);
            if prev > 0.0 && v <= 0.0 {
                bracket = Some((prev_w, w));
                break;
            }
            prev_w = w;
            prev = v;
        }
        let Some((mut a, mut b)) = bracket else {
            continue;
        };
        for _ in 0..200 {
            let mid = 0.5 * (a + b);
            if mid <= a || mid >= b {
                break;
            }
            if h(mid) > 0.0 {
                a = mid;
            } else {
                b = mid;
            }
        }
        let (fa, ga) = counterexample_sides(q, alphas, m, a);
        let (fb, gb) = counterexample_sides(q, alphas, m, b);
        let res = |f: f64, g: f64| (f - g).abs() / f.abs().max(g.abs());
        let (w1, residual) = if res(fa, ga) <= res(fb, gb) {
            (a, res(fa, ga))
        } else {
            (b, res(fb, gb))
        };
        // w = q^{iz}, s = 1/2 + iz
        let s_re = 0.5 + w1.abs().ln() / q.ln();
        let s_im = std::f64::consts::PI / q.ln();
        return Ok(CounterexampleReport {
            q,
            tried,
            hit: Some(CounterexampleHit {
                m,
                w1,
                residual,
                s_re,
                s_im,
                deviation: (s_re - 0.5).abs(),
            }),
        });
    }
    Ok(CounterexampleReport { q, tried, hit: None })
}

/// `zeta_hat` of the curve as a tracked object in `t`, for comparisons
/// with `Y = q^{(1-g)/2} zeta_hat`.
pub fn zeta_hat_tracked(c: &CurveData) -> TrackedRational {
    TrackedRational::new(0, zeta_hat_u(c))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::ratio;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn ell() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 2]).unwrap()
    }

    fn g2() -> CurveData {
        CurveData::from_ints(2, &[1, 0, 0, 0, 4]).unwrap()
    }

    #[test]
    fn inequality_examples() {
        let z = Complex64::new(0.0, 0.0);
        assert_eq!(lemma1_compare(2.0, 3.0, z).unwrap(), Ordering::Greater);
        assert_eq!(lemma1_compare(2.0, 0.0, Complex64::i()).unwrap(), Ordering::Equal);
        assert_eq!(
            lemma1_compare(2.0, 3.0, Complex64::new(2.0, 0.0)).unwrap(),
            Ordering::Less
        );
        assert!(lemma1_compare(2.0, 3.5, z).is_err());
        assert_eq!(
            lemma1_compare_exact(&rat(2), &rat(3), &ratio(3, 5), &ratio(4, 5)).unwrap(),
            Ordering::Equal
        );
    }

    #[test]
    fn inequality_matches_direct_products() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..2000 {
            let q: f64 = rng.gen_range(1.01..10.0);
            let c: f64 = rng.gen_range(-(q + 1.0)..=(q + 1.0));
            let r: f64 = rng.gen_range(0.0..2.0);
            let th: f64 = rng.gen_range(0.0..std::f64::consts::TAU);
            let w = Complex64::from_polar(r, th);
            let disc = Complex64::new(c * c - 4.0 * q, 0.0).sqrt();
            let (a, b) = ((c + disc) / 2.0, (c - disc) / 2.0);
            let left = ((w - a) * (w - b)).norm_sqr();
            let right = ((1.0 - a * w) * (1.0 - b * w)).norm_sqr();
            let d = circle_difference(q, c, w);
            assert!((left - right - d).abs() <= 1e-9 * (1.0 + left.abs() + right.abs()));
        }
    }

    #[test]
    fn x_and_y() {
        let ws = WeilPairSet::new(rat(2), vec![rat(0)]).unwrap();
        let xy = build_xy(&ws);
        assert_eq!(xy.x1_t(), Poly::from_ints(&[1, 0, 2]));
        assert!(xy.x1_fe_check() && xy.y_fe_check());
        assert!(XYData::from_curve(&g2()).x1_fe_check());
        assert!(XYData::from_curve(&g2()).y_fe_check());
        let empty = build_xy(&WeilPairSet::new(rat(3), vec![]).unwrap());
        assert_eq!(empty.x1_t(), Poly::one());
        let p1 = CurveData::from_ints(3, &[1]).unwrap();
        assert_eq!(empty.x_t(), crate::artin::artin_z(&p1));
        let s = Complex64::new(0.3, 0.7);
        let y = xy.y_tracked(1, 0);
        let t = (-s * 2f64.ln()).exp();
        assert!((y.eval(2.0, t) - xy.eval_y(s)).norm() < 1e-12);
    }

    #[test]
    fn sextic() {
        let s = sextic_identity(2, 0).unwrap();
        assert!(s.corrected_holds);
        assert!(!s.printed_holds);
        assert_eq!(s.lhs, Poly::from_ints(&[1, 0, -1, 0, 2, 0, -8]));
    }

    #[test]
    fn a_zero_drops_c() {
        let forms: Vec<RationalFunction> = [0, 1, -2]
            .iter()
            .map(|&c| {
                let ws = WeilPairSet::new(rat(3), vec![rat(c)]).unwrap();
                zeta2_family(&build_xy(&ws), &C1Params::with_a(0))
                    .unwrap()
                    .exact
                    .unwrap()
                    .whole()
            })
            .collect();
        assert_eq!(forms[0], forms[1]);
        assert_eq!(forms[0], forms[2]);
    }

    #[test]
    fn functional_equation() {
        let s = Complex64::new(0.3, 0.7);
        for c in [ell(), g2()] {
            let xy = XYData::from_curve(&c);
            for a in 0..=2 {
                let z = zeta2_family(&xy, &C1Params::with_a(a)).unwrap();
                assert_eq!(z.fe_check_exact(), Some(true));
                assert!(z.fe_check_numeric(s, 1e-10));
            }
        }
        let p = C1Params {
            a: ratio(1, 2),
            extra_sums: vec![ratio(5, 2)],
        };
        let z = zeta2_family(&XYData::from_curve(&ell()), &p).unwrap();
        assert!(z.exact.is_none());
        assert!(z.fe_check_numeric(s, 1e-10));
    }

    #[test]
    fn exact_matches_numeric() {
        let xy = XYData::from_curve(&g2());
        let p = C1Params {
            a: rat(2),
            extra_sums: vec![rat(0)],
        };
        for z in [zeta2_family(&xy, &p).unwrap(), zeta2_star(&xy)] {
            let exact = z.exact.clone().unwrap();
            let s = Complex64::new(0.2, 1.1);
            let t = (-s * 2f64.ln()).exp();
            let a = exact.eval(2.0, t);
            assert!((a - z.eval(s)).norm() <= 1e-10 * a.norm());
        }
        // square q keeps a nonzero extra sum exact
        let ws = WeilPairSet::new(rat(4), vec![rat(1)]).unwrap();
        let p = C1Params {
            a: rat(1),
            extra_sums: vec![rat(3)],
        };
        let z = zeta2_family(&build_xy(&ws), &p).unwrap();
        let exact = z.exact.clone().unwrap();
        let s = Complex64::new(0.35, 0.4);
        let t = (-s * 4f64.ln()).exp();
        let a = exact.eval(4.0, t);
        assert!((a - z.eval(s)).norm() <= 1e-10 * a.norm());
        assert_eq!(z.fe_check_exact(), Some(true));
    }

    #[test]
    fn canonical_rh() {
        for c in [
            ell(),
            CurveData::elliptic(5, -4).unwrap(),
            CurveData::elliptic(4, 4).unwrap(),
        ] {
            let rep = rh_check_zeta2(&zeta2_canonical(&c).unwrap(), 1e-9).unwrap();
            assert!(rep.verdict, "{rep:?}");
            assert_eq!(rep.zeros.len(), 4);
        }
        let ws = WeilPairSet::new(rat(2), vec![rat(1)]).unwrap();
        let p = C1Params {
            a: rat(1),
            extra_sums: vec![rat(0)],
        };
        assert!(
            rh_check_zeta2(&zeta2_family(&build_xy(&ws), &p).unwrap(), 1e-9)
                .unwrap()
                .verdict
        );
    }

    #[test]
    fn slr2_relation() {
        for c in [ell(), g2()] {
            let (k, v) = zeta2_vs_slr2(&c).unwrap().expect("proportional");
            assert_eq!(k, 1 - c.g as i64);
            assert_eq!(v, rat(1));
        }
    }

    #[test]
    fn star_with_multiplicity_breaks_rh() {
        let ws = WeilPairSet::new(rat(2), vec![rat(0)]).unwrap();
        let xy = build_xy(&ws);
        for m in 1..=3 {
            assert!(
                rh_check_zeta2(&zeta2_star(&xy.with_multiplicity(m)), 1e-9)
                    .unwrap()
                    .verdict
            );
        }
        let rep = rh_check_zeta2(&zeta2_star(&xy.with_multiplicity(4)), 1e-9).unwrap();
        assert!(!rep.verdict);
        // w1 = q^{iz} < 0 gives t = q^{-s} = q^{-1/2} / w1
        let hit = counterexample_search(2.0, &[Complex64::new(0.0, 2f64.sqrt())], 1..=64)
            .unwrap()
            .hit
            .unwrap();
        assert_eq!(hit.m, 4);
        let t = 0.5f64.sqrt() / hit.w1;
        assert!(rep
            .zeros
            .iter()
            .any(|z| (z.re - t).abs() < 1e-8 && z.im.abs() < 1e-8));
    }

    #[test]
    fn zeros_match_slr2() {
        use crate::group_zeta::slr_rh_report;
        for c in [ell(), g2()] {
            let a = rh_check_zeta2(&zeta2_canonical(&c).unwrap(), 1e-9).unwrap();
            let b = slr_rh_report(&slr_zeta(&c, 2).unwrap(), 1e-9).unwrap();
            // t and -t give the same T = t^2
            let mut sq_a: Vec<Complex64> = a
                .zeros
                .iter()
                .map(|z| Complex64::new(z.re, z.im).powi(2))
                .collect();
            let sq_b: Vec<Complex64> = b
                .zeros
                .iter()
                .map(|z| Complex64::new(z.re, z.im).powi(2))
                .collect();
            assert_eq!(sq_a.len(), 2 * sq_b.len());
            for w in &sq_b {
                let k = sq_a
                    .iter()
                    .position(|z| (z - w).norm() < 1e-9)
                    .expect("shared zero");
                sq_a.remove(k);
            }
        }
    }

    #[test]
    fn counterexample() {
        let alpha = Complex64::new(0.0, 2f64.sqrt());
        let (f, g) = counterexample_sides(2.0, &[alpha], 5, -(2f64.sqrt()));
        assert!(f > 0.0 && g.abs() < 1e-12 * f);
        let rep = counterexample_search(2.0, &[alpha], 1..=64).unwrap();
        let hit = rep.hit.unwrap();
        assert!(hit.w1 > -(2f64.sqrt()) && hit.w1 < -1.0);
        assert!(hit.residual <= 1e-10);
        assert!(hit.deviation >= 1e-3);
        assert!(counterexample_search(2.0, &[Complex64::new(1.0, 0.0)], 1..=2).is_err());
    }
}
