//! Fixture curves used by tests, examples and the CLI.

use crate::artin::{numerator_from_counts, CurveData};
use crate::census::{count_points, CurveModel, ModelKind};
use crate::error::Result;

/// A named curve model.
#[derive(Clone, Debug)]
pub struct NamedModel {
    pub name: &'static str,
    pub model: CurveModel,
}

fn named(name: &'static str, kind: ModelKind, f: &[u64], q: u64) -> NamedModel {
    NamedModel {
        name,
        model: CurveModel::new(kind, f.to_vec(), q).expect("fixture models are valid"),
    }
}

/// Explicit models: projective lines, Artin-Schreier curves in
/// characteristic 2 and `y^2 = f(x)` curves over `F_3`, `F_5`.
pub fn corpus_models() -> Vec<NamedModel> {
    use ModelKind::*;
    vec![
        named("P1/F2", ProjectiveLine, &[], 2),
        named("P1/F3", ProjectiveLine, &[], 3),
        named("y^2+y=x^3/F2", ArtinSchreier, &[0, 0, 0, 1], 2),
        named("y^2+y=x^3+x+1/F2", ArtinSchreier, &[1, 1, 0, 1], 2),
        named("y^2+y=x^5/F2", ArtinSchreier, &[0, 0, 0, 0, 0, 1], 2),
        named("y^2=x^3-x/F3", Quadratic, &[0, 2, 0, 1], 3),
        named("y^2=x^3-x+1/F3", Quadratic, &[1, 2, 0, 1], 3),
        named("y^2=x^3+x^2+2/F3", Quadratic, &[2, 0, 1, 1], 3),
        named("y^2=x^3+x/F5", Quadratic, &[0, 1, 0, 1], 5),
        named("y^2=x^3+2/F5", Quadratic, &[2, 0, 0, 1], 5),
        named("y^2=x^3+x+1/F5", Quadratic, &[1, 1, 0, 1], 5),
        named("y^2=x^5-x/F5", Quadratic, &[0, 4, 0, 0, 0, 1], 5),
        named("y^2+y=x^7/F2", ArtinSchreier, &[0, 0, 0, 0, 0, 0, 0, 1], 2),
    ]
}

/// The curve of a model, from its first `g` point counts.
pub fn curve_from_model(model: &CurveModel) -> Result<CurveData> {
    let g = model.genus();
    let counts = (1..=g)
        .map(|m| count_points(model, m).map(|n| n as i64))
        .collect::<Result<Vec<_>>>()?;
    numerator_from_counts(model.q, g, &counts)
}

/// Every corpus model turned into curve data.
pub fn corpus_curves() -> Result<Vec<(String, CurveData)>> {
    corpus_models()
        .into_iter()
        .map(|nm| Ok((nm.name.to_string(), curve_from_model(&nm.model)?)))
        .collect()
}

/// `y^2 + y = x^3` over `F_2`: `P(t) = 1 + 2t^2`.
pub fn elliptic_fixture() -> CurveData {
    let mut c = CurveData::from_ints(2, &[1, 0, 2]).expect("valid");
    c.genuine = true;
    c
}

/// `y^2 + y = x^5` over `F_2`: `P(t) = 1 + 4t^4`.
pub fn genus2_fixture() -> CurveData {
    let mut c = CurveData::from_ints(2, &[1, 0, 0, 0, 4]).expect("valid");
    c.genuine = true;
    c
}

/// Every elliptic `(q, a)` with `q` in `qs` and `|a| <= 2 sqrt q`.
pub fn elliptic_family(qs: &[u64]) -> Vec<(u64, i64, CurveData)> {
    let mut out = Vec::new();
    for &q in qs {
        let bound = (4 * q as i64) as f64;
        let amax = bound.sqrt().floor() as i64;
        for a in -amax..=amax {
            if let Ok(c) = CurveData::elliptic(q, a) {
                out.push((q, a, c));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::rat;

    #[test]
    fn fixtures_from_models() {
        let curves = corpus_curves().unwrap();
        let get = |n: &str| curves.iter().find(|(k, _)| k == n).unwrap().1.clone();
        assert_eq!(get("y^2+y=x^3/F2").a, elliptic_fixture().a);
        assert_eq!(get("y^2+y=x^5/F2").a, genus2_fixture().a);
        assert_eq!(get("P1/F3").a, vec![rat(1)]);
    }

    #[test]
    fn family_sizes() {
        // 2 sqrt q rounded down: 2, 3, 4, 4
        let counts: Vec<usize> = [2, 3, 4, 5]
            .iter()
            .map(|&q| elliptic_family(&[q]).len())
            .collect();
        assert_eq!(counts, vec![5, 7, 9, 9]);
    }
}
