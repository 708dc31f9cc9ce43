use num_traits::Zero;

use crate::algebra::{rat, ratio, Rational};
use crate::error::{Error, Result};

/// A root `e_i - e_j` with 0-based `i != j`; positive iff `i < j`.
pub type Root = (usize, usize);

pub fn is_positive(a: Root) -> bool {
    a.0 < a.1
}

/// Height of the coroot, signed: `j - i`.
pub fn height(a: Root) -> i64 {
    a.1 as i64 - a.0 as i64
}

/// A permutation of `0..r`, acting by `w(e_i) = e_{w(i)}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeylElt {
    pub perm: Vec<usize>,
}

impl WeylElt {
    pub fn identity(r: usize) -> Self {
        WeylElt {
            perm: (0..r).collect(),
        }
    }

    pub fn act(&self, a: Root) -> Root {
        (self.perm[a.0], self.perm[a.1])
    }

    pub fn inverse(&self) -> Self {
        let mut v = vec![0; self.perm.len()];
        for (i, &x) in self.perm.iter().enumerate() {
            v[x] = i;
        }
        WeylElt { perm: v }
    }

    pub fn inversions(&self) -> usize {
        let p = &self.perm;
        (0..p.len())
            .flat_map(|i| (i + 1..p.len()).map(move |j| (i, j)))
            .filter(|&(i, j)| p[i] > p[j])
            .count()
    }

    /// `Phi_w = {a > 0 : w a < 0}`.
    pub fn phi_w(&self, positive: &[Root]) -> Vec<Root> {
        positive
            .iter()
            .copied()
            .filter(|&a| !is_positive(self.act(a)))
            .collect()
    }
}

/// All of `S_r` in lexicographic order.
pub fn weyl_group(r: usize) -> Vec<WeylElt> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..r).collect();
    loop {
        out.push(WeylElt { perm: perm.clone() });
        // next lexicographic permutation
        let Some(i) = (1..r).rev().find(|&i| perm[i - 1] < perm[i]) else {
            break;
        };
        let j = (i..r).rev().find(|&j| perm[j] > perm[i - 1]).expect("exists");
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
    out
}

/// Type `A_{r-1}` data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootSystemData {
    pub r: usize,
    pub positive_roots: Vec<Root>,
    pub simple_roots: Vec<Root>,
    pub rho: Vec<Rational>,
    /// `lambda_1 .. lambda_{r-1}`.
    pub fundamental_weights: Vec<Vec<Rational>>,
    pub heights: Vec<i64>,
}

impl RootSystemData {
    /// `<lambda, a^vee> = lambda_i - lambda_j`.
    pub fn pairing(weight: &[Rational], a: Root) -> Rational {
        &weight[a.0] - &weight[a.1]
    }

    pub fn all_roots(&self) -> Vec<Root> {
        let r = self.r;
        (0..r)
            .flat_map(|i| (0..r).filter(move |&j| j != i).map(move |j| (i, j)))
            .collect()
    }
}

/// The standard maximal parabolic with Levi `S_{r-1} x S_1`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParabolicData {
    pub delta_p: Vec<Root>,
    pub phi_p_plus: Vec<Root>,
    /// `lambda_{r-1}`.
    pub lambda_p: Vec<Rational>,
    /// `{w : w Delta_P lies in Delta or in the negative roots}`.
    pub frak_w: Vec<WeylElt>,
}

impl ParabolicData {
    /// Whether a root lives in the Levi of `P` (both indices below `r - 1`).
    pub fn in_phi_p(&self, r: usize, a: Root) -> bool {
        a.0 < r - 1 && a.1 < r - 1
    }
}

pub const MIN_RANK: usize = 2;
pub const MAX_RANK: usize = 6;

pub fn build_root_system(r: usize) -> Result<(RootSystemData, ParabolicData)> {
    if !(MIN_RANK..=MAX_RANK).contains(&r) {
        return Err(Error::RankOutOfRange {
            r,
            min: MIN_RANK,
            max: MAX_RANK,
        });
    }
    let positive_roots: Vec<Root> = (0..r).flat_map(|i| (i + 1..r).map(move |j| (i, j))).collect();
    let simple_roots: Vec<Root> = (0..r - 1).map(|i| (i, i + 1)).collect();
    let rho: Vec<Rational> = (0..r).map(|i| ratio(r as i64 - 1 - 2 * i as i64, 2)).collect();
    let fundamental_weights: Vec<Vec<Rational>> = (1..r)
        .map(|k| {
            (0..r)
                .map(|i| rat(i64::from(i < k)) - ratio(k as i64, r as i64))
                .collect()
        })
        .collect();
    let heights = positive_roots.iter().map(|&a| height(a)).collect();
    let rs = RootSystemData {
        r,
        positive_roots,
        simple_roots,
        rho,
        fundamental_weights,
        heights,
    };
    verify_root_system(&rs)?;

    let delta_p: Vec<Root> = (0..r.saturating_sub(2)).map(|i| (i, i + 1)).collect();
    let phi_p_plus: Vec<Root> = rs
        .positive_roots
        .iter()
        .copied()
        .filter(|a| a.1 < r - 1)
        .collect();
    let frak_w = weyl_group(r)
        .into_iter()
        .filter(|w| {
            delta_p.iter().all(|&a| {
                let b = w.act(a);
                !is_positive(b) || rs.simple_roots.contains(&b)
            })
        })
        .collect();
    let par = ParabolicData {
        delta_p,
        phi_p_plus,
        lambda_p: rs.fundamental_weights[r - 2].clone(),
        frak_w,
    };
    Ok((rs, par))
}

fn verify_root_system(rs: &RootSystemData) -> Result<()> {
    let r = rs.r;
    let fail = |what: &str| Err(Error::InvalidInput(format!("root system A_{}: {what}", r - 1)));
    if rs.positive_roots.len() != r * (r - 1) / 2 {
        return fail("wrong number of positive roots");
    }
    for (i, l) in rs.fundamental_weights.iter().enumerate() {
        for (j, &a) in rs.simple_roots.iter().enumerate() {
            let want = rat(i64::from(i == j));
            if RootSystemData::pairing(l, a) != want {
                return fail("fundamental weights are not dual to the simple coroots");
            }
        }
        if !l.iter().fold(Rational::zero(), |s, x| s + x).is_zero() {
            return fail("weight off the trace-zero hyperplane");
        }
    }
    for &a in &rs.positive_roots {
        if RootSystemData::pairing(&rs.rho, a) != rat(height(a)) {
            return fail("rho does not pair to heights");
        }
    }
    Ok(())
}
