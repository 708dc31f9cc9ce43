//! The two-variable zeta of an elliptic curve: symmetry, zeros and the
//! factorisation of its numerator.

use curve_zeta::artin::CurveData;
use curve_zeta::yoshida::{rh_check_zeta2, sextic_identity, zeta2_canonical, zeta2_vs_slr2};

fn main() -> curve_zeta::Result<()> {
    for a in -2..=2 {
        let c = CurveData::elliptic(3, a)?;
        let z = zeta2_canonical(&c)?;
        let rh = rh_check_zeta2(&z, 1e-9)?;
        let s = sextic_identity(3, a)?;
        println!(
            "q=3 a={a:+}: symmetric {:?}, zeros on |t| = 3^-1/2 {}, (qt^2+1) form {}, (qt^2-1) form {}",
            z.fe_check_exact(),
            rh.verdict,
            s.printed_holds,
            s.corrected_holds
        );
        if let Some((k, f)) = zeta2_vs_slr2(&c)? {
            println!("  equals q^({k}/2) * {f} * (1+q^s)(1+q^(1-s)) * SL_2 zeta");
        }
    }
    Ok(())
}
