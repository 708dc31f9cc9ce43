//! Naive point counting on explicit curve models over `F_{p^m}`.
//!
//! Field elements are coefficient vectors modulo a monic irreducible
//! polynomial over `F_p`. Everything here is brute force and meant for
//! fields of at most `2^20` elements.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest field size accepted by [`build_field`] and [`count_points`].
pub const FIELD_CAP: u128 = 1 << 20;

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Dense polynomials over `F_p`, lowest degree first, trailing zeros stripped.
mod fp {
    pub fn trim(mut a: Vec<u64>) -> Vec<u64> {
        while a.last() == Some(&0) {
            a.pop();
        }
        a
    }

    pub fn inv(a: u64, p: u64) -> u64 {
        pow(a, p - 2, p)
    }

    pub fn pow(mut a: u64, mut e: u64, p: u64) -> u64 {
        let mut r = 1 % p;
        a %= p;
        while e > 0 {
            if e & 1 == 1 {
                r = r * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        r
    }

    pub fn sub(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let n = a.len().max(b.len());
        trim(
            (0..n)
                .map(|i| {
                    let x = a.get(i).copied().unwrap_or(0);
                    let y = b.get(i).copied().unwrap_or(0);
                    (x + p - y) % p
                })
                .collect(),
        )
    }

    pub fn mul(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![0; a.len() + b.len() - 1];
        for (i, &x) in a.iter().enumerate() {
            for (j, &y) in b.iter().enumerate() {
                out[i + j] = (out[i + j] + x * y) % p;
            }
        }
        trim(out)
    }

    pub fn rem(a: &[u64], m: &[u64], p: u64) -> Vec<u64> {
        let mut r = trim(a.to_vec());
        let dm = m.len() - 1;
        let lead_inv = inv(m[dm], p);
        while r.len() > dm {
            let top = r.len() - 1;
            let c = r[top] * lead_inv % p;
            for (j, &mc) in m.iter().enumerate() {
                let k = top - dm + j;
                r[k] = (r[k] + p - c * mc % p) % p;
            }
            r = trim(r);
        }
        r
    }

    pub fn gcd(a: &[u64], b: &[u64], p: u64) -> Vec<u64> {
        let (mut a, mut b) = (trim(a.to_vec()), trim(b.to_vec()));
        while !b.is_empty() {
            let r = rem(&a, &b, p);
            a = b;
            b = r;
        }
        a
    }

    pub fn derivative(a: &[u64], p: u64) -> Vec<u64> {
        trim(
            a.iter()
                .enumerate()
                .skip(1)
                .map(|(i, &c)| c * (i as u64 % p) % p)
                .collect(),
        )
    }
}

/// Ben-Or test: `f` of degree `m` over `F_p` is irreducible iff
/// `gcd(x^{p^i} - x, f) = 1` for `1 <= i <= m/2`.
pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = fp::trim(f.iter().map(|c| c % p).collect());
    let m = match f.len().checked_sub(1) {
        Some(m) if m >= 1 => m,
        _ => return false,
    };
    let mut xp = vec![0, 1];
    for _ in 1..=m / 2 {
        // x^{p^i} = (x^{p^{i-1}})^p
        let mut acc = vec![1];
        let mut base = xp.clone();
        let mut e = p;
        while e > 0 {
            if e & 1 == 1 {
                acc = fp::rem(&fp::mul(&acc, &base, p), &f, p);
            }
            base = fp::rem(&fp::mul(&base, &base, p), &f, p);
            e >>= 1;
        }
        xp = acc;
        let g = fp::gcd(&f, &fp::sub(&xp, &[0, 1], p), p);
        if g.len() > 1 {
            return false;
        }
    }
    true
}

/// The finite field `F_{p^m}` as `F_p[x]/(modulus)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FieldRep {
    pub p: u64,
    pub m: usize,
    /// Monic, irreducible, degree `m`, lowest degree first.
    pub modulus: Vec<u64>,
}

/// Element of a [`FieldRep`]: `m` coefficients over `F_p`.
pub type Elem = Vec<u64>;

/// `F_{p^m}` with the lexicographically smallest monic irreducible modulus,
/// comparing coefficients from `x^{m-1}` down to the constant term.
pub fn build_field(p: u64, m: usize) -> Result<FieldRep> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if m == 0 {
        return Err(Error::InvalidInput("extension degree must be positive".into()));
    }
    field_size(p, m as u64)?;
    // odometer over c_{m-1} .. c_0 with c_{m-1} most significant
    let mut low = vec![0u64; m];
    loop {
        let mut f = low.clone();
        f.push(1);
        if is_irreducible(&f, p) {
            return Ok(FieldRep { p, m, modulus: f });
        }
        let mut i = 0;
        loop {
            low[i] += 1;
            if low[i] < p {
                break;
            }
            low[i] = 0;
            i += 1;
            if i == m {
                unreachable!("irreducible polynomials exist in every degree");
            }
        }
    }
}

fn field_size(p: u64, m: u64) -> Result<u128> {
    let mut size: u128 = 1;
    for _ in 0..m {
        size = size.saturating_mul(p as u128);
        if size > FIELD_CAP {
            return Err(Error::CapExceeded { size, cap: FIELD_CAP });
        }
    }
    Ok(size)
}

impl FieldRep {
    pub fn size(&self) -> u64 {
        self.p.pow(self.m as u32)
    }

    pub fn zero(&self) -> Elem {
        vec![0; self.m]
    }

    pub fn one(&self) -> Elem {
        self.from_base(1)
    }

    /// Embed an element of the prime field.
    pub fn from_base(&self, c: u64) -> Elem {
        let mut e = self.zero();
        e[0] = c % self.p;
        e
    }

    /// The `k`-th element in base-`p` digit order.
    pub fn element(&self, mut k: u64) -> Elem {
        let mut e = self.zero();
        for c in e.iter_mut() {
            *c = k % self.p;
            k /= self.p;
        }
        e
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> + '_ {
        (0..self.size()).map(move |k| self.element(k))
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        a.iter().all(|&c| c == 0)
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        a.iter().zip(b).map(|(x, y)| (x + y) % self.p).collect()
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        let mut r = fp::rem(&fp::mul(a, b, self.p), &self.modulus, self.p);
        r.resize(self.m, 0);
        r
    }

    pub fn pow(&self, a: &Elem, mut e: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// Evaluate a polynomial with coefficients in `F_p`.
    pub fn eval_base_poly(&self, f: &[u64], x: &Elem) -> Elem {
        f.iter().rev().fold(self.zero(), |acc, &c| {
            self.add(&self.mul(&acc, x), &self.from_base(c))
        })
    }

    /// Absolute trace to `F_p`, returned as an element of `F_p`.
    pub fn trace(&self, a: &Elem) -> u64 {
        let mut acc = self.zero();
        let mut z = a.clone();
        for _ in 0..self.m {
            acc = self.add(&acc, &z);
            z = self.pow(&z, self.p);
        }
        debug_assert!(acc[1..].iter().all(|&c| c == 0));
        acc[0]
    }

    /// Quadratic character via Euler's criterion (odd characteristic).
    pub fn chi(&self, a: &Elem) -> i64 {
        if self.is_zero(a) {
            return 0;
        }
        let r = self.pow(a, (self.size() - 1) / 2);
        if r == self.one() {
            1
        } else {
            -1
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum ModelKind {
    ProjectiveLine,
    /// `y^2 = f(x)`, odd characteristic.
    Quadratic,
    /// `y^2 + y = f(x)`, characteristic 2.
    ArtinSchreier,
}

/// A smooth projective curve given by an affine equation with one point at
/// infinity. Only prime `q` is supported.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CurveModel {
    pub kind: ModelKind,
    /// Right-hand side over `F_q`, lowest degree first.
    pub f: Vec<u64>,
    pub q: u64,
}

impl CurveModel {
    pub fn projective_line(q: u64) -> Result<Self> {
        Self::new(ModelKind::ProjectiveLine, vec![], q)
    }

    pub fn quadratic(f: Vec<u64>, q: u64) -> Result<Self> {
        Self::new(ModelKind::Quadratic, f, q)
    }

    pub fn artin_schreier(f: Vec<u64>, q: u64) -> Result<Self> {
        Self::new(ModelKind::ArtinSchreier, f, q)
    }

    pub fn new(kind: ModelKind, f: Vec<u64>, q: u64) -> Result<Self> {
        let model = CurveModel {
            kind,
            f: fp::trim(f.into_iter().map(|c| c % q.max(1)).collect()),
            q,
        };
        model.validate()?;
        Ok(model)
    }

    pub fn validate(&self) -> Result<()> {
        if !is_prime(self.q) {
            return Err(Error::NotPrime(self.q));
        }
        if self.kind == ModelKind::ProjectiveLine {
            return Ok(());
        }
        let deg = self.f.len().saturating_sub(1);
        if self.f.is_empty() || deg.is_multiple_of(2) {
            return Err(Error::UnsupportedModel(format!(
                "right-hand side must have odd degree, got {}",
                if self.f.is_empty() {
                    "the zero polynomial".to_string()
                } else {
                    deg.to_string()
                }
            )));
        }
        match self.kind {
            ModelKind::Quadratic => {
                if self.q == 2 {
                    return Err(Error::UnsupportedModel(
                        "y^2 = f(x) needs odd characteristic".into(),
                    ));
                }
                let df = fp::derivative(&self.f, self.q);
                if fp::gcd(&self.f, &df, self.q).len() > 1 {
                    return Err(Error::UnsupportedModel("f is not squarefree".into()));
                }
            }
            ModelKind::ArtinSchreier => {
                if self.q != 2 {
                    return Err(Error::UnsupportedModel(
                        "y^2 + y = f(x) needs characteristic 2".into(),
                    ));
                }
            }
            ModelKind::ProjectiveLine => {}
        }
        Ok(())
    }

    pub fn genus(&self) -> usize {
        match self.kind {
            ModelKind::ProjectiveLine => 0,
            _ => (self.f.len() - 2) / 2,
        }
    }
}

/// Number of points of `model` over `F_{q^m}`.
pub fn count_points(model: &CurveModel, m: usize) -> Result<u64> {
    model.validate()?;
    if m == 0 {
        return Err(Error::InvalidInput("extension degree must be positive".into()));
    }
    let size = field_size(model.q, m as u64)? as u64;
    if model.kind == ModelKind::ProjectiveLine {
        return Ok(size + 1);
    }
    let field = build_field(model.q, m)?;
    let mut affine: u64 = 0;
    for x in field.elements() {
        let fx = field.eval_base_poly(&model.f, &x);
        affine += match model.kind {
            ModelKind::Quadratic => (1 + field.chi(&fx)) as u64,
            ModelKind::ArtinSchreier => {
                if field.trace(&fx) == 0 {
                    2
                } else {
                    0
                }
            }
            ModelKind::ProjectiveLine => unreachable!(),
        };
    }
    Ok(affine + 1)
}

/// One census row: the model and its counts `N_1..N_g`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CensusEntry {
    pub model: CurveModel,
    pub counts: Vec<u64>,
}

pub fn census(models: &[CurveModel]) -> Result<Vec<CensusEntry>> {
    models
        .iter()
        .map(|model| {
            let counts = (1..=model.genus())
                .map(|m| count_points(model, m))
                .collect::<Result<Vec<_>>>()?;
            Ok(CensusEntry {
                model: model.clone(),
                counts,
            })
        })
        .collect()
}
