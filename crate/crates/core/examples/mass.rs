//! Masses of semistable bundles two ways, and their degree dependence.

use curve_zeta::corpus::genus2_fixture;
use curve_zeta::mass::{beta_crosscheck, beta_zagier};

fn main() -> curve_zeta::Result<()> {
    let c = genus2_fixture();
    let x = beta_crosscheck(&c, 4)?;
    for row in &x.rows {
        println!(
            "r={}: composition sum {}, inversion {}, agree {}",
            row.r, row.composition_sum, row.inversion_d0, row.agree
        );
    }
    println!("verdict: {}", x.verdict);
    for d in 0..3 {
        println!("beta_3({d}) = {}", beta_zagier(&c, 3, d)?);
    }
    Ok(())
}
