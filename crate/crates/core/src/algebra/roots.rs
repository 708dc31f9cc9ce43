use num_complex::Complex64;
use num_traits::Zero;

use super::{to_f64, Poly};
use crate::error::{Error, Result};

/// Knobs for [`complex_roots_with`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct RootFinderConfig {
    pub max_iterations: usize,
    /// Stop once every step is below `step_tolerance * (1 + |z|)`.
    pub step_tolerance: f64,
    /// Seed angle of the initial circle.
    pub seed_angle: f64,
    /// Newton polishing steps applied to each root afterwards.
    pub polish_steps: usize,
    /// Upper bound on the relative residual of every returned root.
    pub residual_bound: f64,
}

impl Default for RootFinderConfig {
    fn default() -> Self {
        RootFinderConfig {
            max_iterations: 1000,
            step_tolerance: 1e-14,
            seed_angle: 0.4,
            polish_steps: 3,
            residual_bound: 1e-9,
        }
    }
}

/// All complex roots of a polynomial, with multiplicity.
///
/// `residuals[i]` is `|p(z)| / sum |c_k| |z|^k` at `roots[i]`, a scale-free
/// backward error.
#[derive(Clone, Debug, PartialEq)]
pub struct ComplexRootSet {
    pub roots: Vec<Complex64>,
    pub residuals: Vec<f64>,
}

impl ComplexRootSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn max_residual(&self) -> f64 {
        self.residuals.iter().cloned().fold(0.0, f64::max)
    }
}

/// Roots of `p` with the default configuration.
pub fn complex_roots(p: &Poly) -> Result<ComplexRootSet> {
    complex_roots_with(p, &RootFinderConfig::default())
}

/// Roots of `p`: exact squarefree splitting, then Aberth iteration on each
/// squarefree part and a few Newton steps.
pub fn complex_roots_with(p: &Poly, cfg: &RootFinderConfig) -> Result<ComplexRootSet> {
    match p.degree() {
        None => return Err(Error::InvalidInput("roots of the zero polynomial".into())),
        Some(0) => return Err(Error::InvalidInput("roots of a constant polynomial".into())),
        _ => {}
    }
    let (core, zeros) = p.strip_x_power();
    let full: Vec<f64> = p.coeffs().iter().map(to_f64).collect();

    let mut roots = vec![Complex64::zero(); zeros];
    for (factor, mult) in core.squarefree_decomposition() {
        let c: Vec<f64> = factor.coeffs().iter().map(to_f64).collect();
        let found = aberth(&c, cfg)?;
        for z in found {
            let z = polish(&c, z, cfg.polish_steps);
            roots.extend(std::iter::repeat_n(z, mult));
        }
    }
    sort_roots(&mut roots);
    let residuals: Vec<f64> = roots.iter().map(|&z| relative_residual(&full, z)).collect();
    if let Some(worst) = residuals
        .iter()
        .cloned()
        .fold(None, |m: Option<f64>, r| Some(m.map_or(r, |m| m.max(r))))
    {
        if worst > cfg.residual_bound || worst.is_nan() {
            return Err(Error::NoConvergence {
                iterations: cfg.max_iterations,
                max_step: worst,
                partial: roots.iter().map(|z| (z.re, z.im)).collect(),
            });
        }
    }
    Ok(ComplexRootSet { roots, residuals })
}

fn horner(c: &[f64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::zero();
    let mut dp = Complex64::zero();
    for &a in c.iter().rev() {
        dp = dp * z + p;
        p = p * z + a;
    }
    (p, dp)
}

fn relative_residual(c: &[f64], z: Complex64) -> f64 {
    let (p, _) = horner(c, z);
    let r = z.norm();
    let scale = c.iter().rev().fold(0.0, |acc, a| acc * r + a.abs());
    if scale == 0.0 {
        0.0
    } else {
        p.norm() / scale
    }
}

fn aberth(c: &[f64], cfg: &RootFinderConfig) -> Result<Vec<Complex64>> {
    let n = c.len() - 1;
    let lead = c[n];
    if n == 1 {
        return Ok(vec![Complex64::new(-c[0] / lead, 0.0)]);
    }
    let radius = 1.0 + c[..n].iter().map(|a| (a / lead).abs()).fold(0.0, f64::max);
    let tau = std::f64::consts::TAU;
    let mut z: Vec<Complex64> = (0..n)
        .map(|k| Complex64::from_polar(radius, cfg.seed_angle + tau * k as f64 / n as f64))
        .collect();
    let mut done = vec![false; n];
    let mut max_step = f64::INFINITY;
    for _ in 0..cfg.max_iterations {
        max_step = 0.0;
        for k in 0..n {
            if done[k] {
                continue;
            }
            let (p, dp) = horner(c, z[k]);
            if p.is_zero() {
                done[k] = true;
                continue;
            }
            let ratio = p / dp;
            let mut s = Complex64::zero();
            for j in 0..n {
                if j != k {
                    s += (z[k] - z[j]).inv();
                }
            }
            let step = ratio / (Complex64::new(1.0, 0.0) - ratio * s);
            if !step.re.is_finite() || !step.im.is_finite() {
                continue;
            }
            z[k] -= step;
            let size = step.norm();
            if size < cfg.step_tolerance * (1.0 + z[k].norm()) {
                done[k] = true;
            }
            max_step = max_step.max(size);
        }
        if done.iter().all(|&d| d) {
            return Ok(z);
        }
    }
    Err(Error::NoConvergence {
        iterations: cfg.max_iterations,
        max_step,
        partial: z.iter().map(|w| (w.re, w.im)).collect(),
    })
}

fn polish(c: &[f64], mut z: Complex64, steps: usize) -> Complex64 {
    for _ in 0..steps {
        let (p, dp) = horner(c, z);
        if p.is_zero() || dp.is_zero() {
            break;
        }
        let next = z - p / dp;
        if relative_residual(c, next) > relative_residual(c, z) {
            break;
        }
        z = next;
    }
    z
}

/// Deterministic order: by argument, then modulus. Tiny imaginary parts are
/// snapped to the real axis first.
fn sort_roots(roots: &mut [Complex64]) {
    for z in roots.iter_mut() {
        if z.im.abs() <= 1e-15 * (1.0 + z.re.abs()) {
            z.im = 0.0;
        }
    }
    roots.sort_by(|a, b| {
        a.arg()
            .partial_cmp(&b.arg())
            .unwrap_or(std::cmp::Ordering::Equal)
            .then(
                a.norm()
                    .partial_cmp(&b.norm())
                    .unwrap_or(std::cmp::Ordering::Equal),
            )
    });
}

#[cfg(test)]
mod tests {
    use super::*;

    fn reconstruct(roots: &[Complex64]) -> Vec<Complex64> {
        let mut acc = vec![Complex64::new(1.0, 0.0)];
        for &r in roots {
            let mut next = vec![Complex64::zero(); acc.len() + 1];
            for (i, &a) in acc.iter().enumerate() {
                next[i + 1] += a;
                next[i] -= a * r;
            }
            acc = next;
        }
        acc
    }

    #[test]
    fn weil_quadratic() {
        // 1 + 2t^2: roots ±i/sqrt(2)
        let rs = complex_roots(&Poly::from_ints(&[1, 0, 2])).unwrap();
        assert_eq!(rs.len(), 2);
        for z in &rs.roots {
            assert!((z.norm() - 0.5f64.sqrt()).abs() < 1e-12);
            assert!(z.re.abs() < 1e-12);
        }
    }

    #[test]
    fn multiple_and_zero_roots() {
        // t^2 (1 - 2t)^3
        let p = Poly::from_ints(&[0, 0, 1]) * Poly::from_ints(&[1, -2]).pow(3);
        let rs = complex_roots(&p).unwrap();
        assert_eq!(rs.len(), 5);
        assert_eq!(rs.roots.iter().filter(|z| z.is_zero()).count(), 2);
        assert_eq!(
            rs.roots
                .iter()
                .filter(|z| (*z - Complex64::new(0.5, 0.0)).norm() < 1e-12)
                .count(),
            3
        );
    }

    #[test]
    fn reconstruction_matches() {
        let p = Poly::from_ints(&[4, -3, 7, 1, -2, 5, 9]);
        let rs = complex_roots(&p).unwrap();
        let lead = 9.0;
        let rec = reconstruct(&rs.roots);
        for (i, c) in p.coeffs().iter().enumerate() {
            let want = to_f64(c) / lead;
            assert!((rec[i] - want).norm() <= 1e-8 * (1.0 + want.abs()));
        }
    }

    #[test]
    fn degenerate_inputs() {
        assert!(complex_roots(&Poly::zero()).is_err());
        assert!(complex_roots(&Poly::from_ints(&[3])).is_err());
    }

    #[test]
    fn deterministic() {
        let p = Poly::from_ints(&[1, 1, 1, 1, 1, 1]);
        assert_eq!(complex_roots(&p).unwrap(), complex_roots(&p).unwrap());
    }
}
