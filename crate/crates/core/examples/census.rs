//! Count points on the bundled models and rebuild their Weil numerators.

use curve_zeta::artin::counts_from_numerator;
use curve_zeta::census::count_points;
use curve_zeta::corpus::{corpus_models, curve_from_model};

fn main() -> curve_zeta::Result<()> {
    for nm in corpus_models() {
        let c = curve_from_model(&nm.model)?;
        let direct: Vec<u64> = (1..=(2 * c.g).max(1))
            .map(|m| count_points(&nm.model, m))
            .collect::<curve_zeta::Result<_>>()?;
        let rebuilt: Vec<String> = (1..=direct.len())
            .map(|m| counts_from_numerator(&c, m).to_string())
            .collect();
        let a: Vec<String> = c.a.iter().map(|x| x.to_string()).collect();
        println!("{:<22} g={} A=[{}]", nm.name, c.g, a.join(", "));
        println!("{:<22} counted {direct:?}, from A [{}]", "", rebuilt.join(", "));
    }
    Ok(())
}
