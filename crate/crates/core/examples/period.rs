//! The residue of the SL_3 period against the Weyl-sum formula.

use curve_zeta::corpus::genus2_fixture;
use curve_zeta::group_zeta::{period_residue_oracle, proportionality_constant, slr_zeta};

fn main() -> curve_zeta::Result<()> {
    let c = genus2_fixture();
    for r in 2..=3 {
        let p = period_residue_oracle(&c, r)?;
        let z = slr_zeta(&c, r)?;
        match proportionality_constant(&p, &z.combined) {
            Some(k) => println!("r={r}: period residue = {k} * group zeta"),
            None => println!("r={r}: not proportional"),
        }
    }
    Ok(())
}
