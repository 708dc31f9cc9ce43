//! SL_r zetas for r = 2..5: Weyl-group terms, symmetry and numerator zeros.

use curve_zeta::corpus::elliptic_fixture;
use curve_zeta::group_zeta::{slr_fe_check, slr_numerator, slr_rh_report, slr_zeta};

fn main() -> curve_zeta::Result<()> {
    let c = elliptic_fixture();
    for r in 2..=5 {
        let z = slr_zeta(&c, r)?;
        let n = slr_numerator(&z)?;
        let rh = slr_rh_report(&z, 1e-9)?;
        println!(
            "r={r}: {} Weyl terms collapse to {} shifts",
            z.weyl_terms.len(),
            z.terms.len()
        );
        println!("  symmetric: {}", slr_fe_check(&z));
        println!(
            "  numerator {:?}",
            n.coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
        println!(
            "  zeros on the line: {} (max deviation {:.2e})",
            rh.verdict, rh.max_deviation
        );
    }
    Ok(())
}
