//! Raising the Weil numerator to a power breaks RH for the two-variable zeta.

use curve_zeta::artin::{weil_roots, CurveData};
use curve_zeta::yoshida::{counterexample_search, rh_check_zeta2, zeta2_star, XYData};

fn main() -> curve_zeta::Result<()> {
    let c = CurveData::elliptic(2, 0)?;
    let alphas: Vec<_> = weil_roots(&c)?.pairs.iter().map(|p| p.0).collect();
    let rep = counterexample_search(2.0, &alphas, 1..=64)?;
    match &rep.hit {
        Some(h) => println!("m = {}: real root w1 = {:.12}, Re s = {:.6}", h.m, h.w1, h.s_re),
        None => println!("no crossing up to m = 64"),
    }
    let xy = XYData::from_curve(&c);
    for m in 1..=4 {
        let rh = rh_check_zeta2(&zeta2_star(&xy.with_multiplicity(m)), 1e-9)?;
        println!(
            "multiplicity {m}: RH {} (max deviation {:.3e})",
            rh.verdict, rh.max_deviation
        );
    }
    Ok(())
}
