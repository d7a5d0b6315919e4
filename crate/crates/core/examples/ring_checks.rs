//! Regularity, radical and semiprimeness of a few small coefficient rings.

use gral::coeffring::{is_semiprime_ring, is_vnr, jacobson_radical, Ring, RingSpec, VnrVerdict};

fn main() -> gral::Result<()> {
    let rings = [
        Ring::modular(4),
        Ring::modular(6),
        Ring::new(RingSpec::product(vec![RingSpec::modular(2), RingSpec::modular(3)]))?,
        Ring::new(RingSpec::modular(8))?,
    ];
    for ring in &rings {
        let vnr = match is_vnr(ring) {
            VnrVerdict::Regular { .. } => "regular".to_string(),
            VnrVerdict::NotRegular { counterexample } => format!("not regular ({} has no witness)", ring.format(counterexample)),
        };
        let radical: Vec<String> = jacobson_radical(ring)?.into_iter().map(|x| ring.format(x)).collect();
        let semiprime = is_semiprime_ring(ring)?.is_semiprime();
        println!("{}: {vnr}; J = {{{}}}; semiprime: {semiprime}", ring.name(), radical.join(", "));
    }
    Ok(())
}
