//! The rank-two zeta: closed form, numerator and the invariants read off it.

use curve_zeta::corpus::{elliptic_fixture, genus2_fixture};
use curve_zeta::rank2::{
    eq1_extract, pure_fe_check, pure_zeta_rank2, rank2_alpha0, rank2_closed_form, rank2_numerator,
};

fn main() -> curve_zeta::Result<()> {
    for c in [elliptic_fixture(), genus2_fixture()] {
        let f = rank2_closed_form(&c)?;
        let n = rank2_numerator(&c)?;
        let t = eq1_extract(&f, &rank2_alpha0(&c), c.q, c.g)?;
        println!("q={} g={}", c.q, c.g);
        println!("  T^{} F(T) = {}", f.shift, f.f);
        println!(
            "  numerator in X = qT: {:?}",
            n.coeffs.iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
        println!(
            "  normalised in T:     {:?}",
            n.t_coeffs().iter().map(|x| x.to_string()).collect::<Vec<_>>()
        );
        println!(
            "  alpha = {:?}, beta = {}",
            t.alphas.iter().map(|x| x.to_string()).collect::<Vec<_>>(),
            t.beta0
        );
        println!("  functional equation: {}", pure_fe_check(&pure_zeta_rank2(&c)?));
    }
    Ok(())
}
