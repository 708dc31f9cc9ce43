//! Artin zeta data of an elliptic curve: counts, special values, Weil roots.

use curve_zeta::artin::{artin_fe_check, counts_from_numerator, rh_check_artin, zeta_hat_special, CurveData};

fn main() -> curve_zeta::Result<()> {
    // y^2 + y = x^3 over F_2 has trace 0
    let c = CurveData::elliptic(2, 0)?;
    println!("P(t) = {}", c.numerator());
    println!("h = {}", c.class_number());
    for m in 1..=4 {
        println!("N_{m} = {}", counts_from_numerator(&c, m));
    }
    println!(
        "zeta_hat(0) = {}, zeta_hat(1) = {}",
        zeta_hat_special(&c, 0),
        zeta_hat_special(&c, 1)
    );
    println!("functional equation: {}", artin_fe_check(&c));
    let rh = rh_check_artin(&c, 1e-9)?;
    for z in &rh.zeros {
        println!(
            "omega = {:+.12} {:+.12}i  |omega| = {:.12}",
            z.re, z.im, z.modulus
        );
    }
    println!("RH: {}", rh.verdict);
    Ok(())
}
