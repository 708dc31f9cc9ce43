//! Rank-one invariants alpha, beta and gamma, and back again.

use curve_zeta::abelian::{a_from_alpha, alpha_from_a, beta0, gamma, remark_identity_check};
use curve_zeta::corpus::genus2_fixture;

fn main() -> curve_zeta::Result<()> {
    let c = genus2_fixture();
    let alphas = alpha_from_a(&c)?;
    let b = beta0(&c);
    println!(
        "alpha = {:?}",
        alphas.iter().map(|x| x.to_string()).collect::<Vec<_>>()
    );
    println!("beta0 = {b}");
    for d in 0..=2 * c.g as i64 {
        println!("gamma({d}) = {}", gamma(&c, d)?);
    }
    let back = a_from_alpha(&alphas, &b, c.q, c.g)?;
    println!("A recovered: {}", back == c.a[..=c.g]);
    println!("duality identity: {}", remark_identity_check(&c)?);
    Ok(())
}
