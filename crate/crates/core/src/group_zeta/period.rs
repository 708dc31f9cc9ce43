//! The period `omega^{SL_r}(lambda)` and its residue, as an independent
//! route to the group zeta for `r = 2, 3`.

use num_traits::{One, Zero};

use super::roots::{build_root_system, is_positive, weyl_group, Root, WeylElt};
use super::weyl_sum::zeta_hat_shifted;
use crate::algebra::{rat, rpow, Poly, Rational, RationalFunction};
use crate::artin::{zeta_hat_special, zeta_hat_u, CurveData};
use crate::error::{Error, Result};

const SERIES_LEN: usize = 4;

#[derive(Clone, Debug, Default)]
pub struct PeriodOptions {
    /// Sum over the identity element only.
    pub identity_only: bool,
}

/// Laurent series in `eps` with coefficients in `Q(u)`, known up to
/// `O(eps^{val + len})`.
#[derive(Clone, Debug)]
struct Laurent {
    val: i64,
    coeffs: Vec<RationalFunction>,
}

impl Laurent {
    fn constant(f: RationalFunction, len: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(); len];
        coeffs[0] = f;
        Laurent { val: 0, coeffs }
    }

    /// `c u^b (1 - eps)^a`.
    fn monomial(c: &Rational, a: i64, b: i64, len: usize) -> Self {
        let base = RationalFunction::monomial(c.clone(), b);
        let mut binom = Rational::one();
        let coeffs = (0..len)
            .map(|k| {
                let term = &base * &RationalFunction::constant(binom.clone());
                // (-1)^{k+1} binom(a, k+1) from (-1)^k binom(a, k)
                binom = -&binom * rat(a - k as i64) / rat(k as i64 + 1);
                term
            })
            .collect();
        Laurent { val: 0, coeffs }
    }

    fn prec(&self) -> i64 {
        self.val + self.coeffs.len() as i64
    }

    fn coeff(&self, k: i64) -> RationalFunction {
        if k < self.val || k >= self.prec() {
            return RationalFunction::zero();
        }
        self.coeffs[(k - self.val) as usize].clone()
    }

    fn add(&self, o: &Laurent) -> Laurent {
        let val = self.val.min(o.val);
        let prec = self.prec().min(o.prec());
        let coeffs = (val..prec).map(|k| &self.coeff(k) + &o.coeff(k)).collect();
        Laurent { val, coeffs }
    }

    fn neg(&self) -> Laurent {
        Laurent {
            val: self.val,
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    fn mul(&self, o: &Laurent) -> Laurent {
        let len = self.coeffs.len().min(o.coeffs.len());
        let mut coeffs = vec![RationalFunction::zero(); len];
        for (i, a) in self.coeffs.iter().enumerate().take(len) {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.coeffs.iter().enumerate().take(len - i) {
                coeffs[i + j] = &coeffs[i + j] + &(a * b);
            }
        }
        Laurent {
            val: self.val + o.val,
            coeffs,
        }
    }

    fn inverse(&self) -> Result<Laurent> {
        let lead = self
            .coeffs
            .iter()
            .position(|c| !c.is_zero())
            .ok_or(Error::UnsupportedPoleOrder {
                order: self.coeffs.len(),
            })?;
        let s = &self.coeffs[lead..];
        let len = s.len();
        let c0 = s[0].inv()?;
        let mut out = vec![RationalFunction::zero(); len];
        out[0] = c0.clone();
        for n in 1..len {
            let mut acc = RationalFunction::zero();
            for k in 1..=n {
                acc = &acc + &(&s[k] * &out[n - k]);
            }
            out[n] = -(&acc * &c0);
        }
        Ok(Laurent {
            val: -(self.val + lead as i64),
            coeffs: out,
        })
    }

    /// `f(self)` for a rational function `f` in one variable.
    fn compose(&self, f: &RationalFunction, len: usize) -> Result<Laurent> {
        let horner = |p: &Poly| {
            let mut acc = Laurent::constant(RationalFunction::zero(), len);
            for c in p.coeffs().iter().rev() {
                acc = acc
                    .mul(self)
                    .add(&Laurent::constant(RationalFunction::constant(c.clone()), len));
            }
            acc
        };
        Ok(horner(f.num()).mul(&horner(f.den()).inverse()?))
    }
}

/// `q^{-<lambda, b^vee>}` as `(c, exponent of u_1, exponent of u)` for
/// `lambda = rho + sum s_j lambda_j`, written in `u_j = q^{-s_j}` with
/// the last variable playing the role of `u`.
fn mono(q: &Rational, r: usize, b: Root) -> (Rational, Vec<i64>) {
    let (i, j) = b;
    let (lo, hi) = (i.min(j), i.max(j));
    let sign = if i < j { 1 } else { -1 };
    let c = rpow(q, -sign * (hi - lo) as i64);
    let mut exps = vec![0i64; r - 1];
    for e in exps.iter_mut().take(hi).skip(lo) {
        *e = sign;
    }
    (c, exps)
}

fn mono_series(q: &Rational, r: usize, b: Root, scale: &Rational) -> Laurent {
    let (c, exps) = mono(q, r, b);
    let (a, bexp) = if r == 2 { (0, exps[0]) } else { (exps[0], exps[1]) };
    Laurent::monomial(&(c * scale), a, bexp, SERIES_LEN)
}

fn term(c: &CurveData, r: usize, w: &WeylElt, positive: &[Root], simple: &[Root]) -> Result<Laurent> {
    let q = c.qr();
    let zh = zeta_hat_u(c);
    let one = Laurent::constant(RationalFunction::one(), SERIES_LEN);
    let wi = w.inverse();
    let mut t = one.clone();
    for &a in simple {
        let m = mono_series(&q, r, wi.act(a), &q);
        t = t.mul(&one.add(&m.neg()).inverse()?);
    }
    for &a in positive {
        if !is_positive(w.act(a)) {
            let top = mono_series(&q, r, a, &Rational::one()).compose(&zh, SERIES_LEN)?;
            let bottom = mono_series(&q, r, a, &q.recip()).compose(&zh, SERIES_LEN)?;
            t = t.mul(&top).mul(&bottom.inverse()?);
        }
    }
    Ok(t)
}

/// `omega^{SL_r}` summed over the Weyl group, with the residue at
/// `s_1 = 0` taken as `lim_{u_1 -> 1} (1 - u_1) omega` when `r = 3`.
pub fn period_omega(c: &CurveData, r: usize, opts: &PeriodOptions) -> Result<RationalFunction> {
    if !(2..=3).contains(&r) {
        return Err(Error::RankOutOfRange { r, min: 2, max: 3 });
    }
    let (rs, _) = build_root_system(r)?;
    let elements = if opts.identity_only {
        vec![WeylElt::identity(r)]
    } else {
        weyl_group(r)
    };
    let mut total: Option<Laurent> = None;
    for w in &elements {
        let t = term(c, r, w, &rs.positive_roots, &rs.simple_roots)?;
        total = Some(match total {
            None => t,
            Some(s) => s.add(&t),
        });
    }
    let total = total.expect("nonempty Weyl group");
    // with u_1 = 1 - eps, (1 - u_1) f -> coefficient of eps^{-1}
    let want = if r == 2 { 0 } else { -1 };
    if total.prec() <= want {
        return Err(Error::UnsupportedPoleOrder {
            order: (-total.val) as usize,
        });
    }
    for k in total.val..want {
        if !total.coeff(k).is_zero() {
            return Err(Error::UnsupportedPoleOrder {
                order: (want - k + 1) as usize,
            });
        }
    }
    Ok(total.coeff(want))
}

/// `omega` times `prod_{n=2}^{r-1} zeta_hat(n) * zeta_hat(s + r)`.
pub fn period_residue_oracle(c: &CurveData, r: usize) -> Result<RationalFunction> {
    period_residue_oracle_with(c, r, &PeriodOptions::default())
}

pub fn period_residue_oracle_with(c: &CurveData, r: usize, opts: &PeriodOptions) -> Result<RationalFunction> {
    let omega = period_omega(c, r, opts)?;
    let consts: Rational = (2..r as i64).map(|n| zeta_hat_special(c, n)).product();
    Ok(&(&omega * &RationalFunction::constant(consts)) * &zeta_hat_shifted(c, r as i64))
}

/// `a / b` when it is a nonzero constant.
pub fn proportionality_constant(a: &RationalFunction, b: &RationalFunction) -> Option<Rational> {
    if b.is_zero() {
        return None;
    }
    let ratio = a / b;
    let num = ratio.num();
    (ratio.den().degree() == Some(0) && num.degree() == Some(0)).then(|| num.coeff(0))
}
