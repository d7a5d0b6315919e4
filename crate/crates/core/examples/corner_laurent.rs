//! Corner skew Laurent rings: graded witnesses exist exactly when the
//! coefficient ring is regular.

use gral::cornerlaurent::{csl_epsilon, csl_graded_witness, CslAlgebra};
use gral::fixtures;

fn report(alg: &CslAlgebra) -> gral::Result<()> {
    let r = alg.ring();
    let mut absent = Vec::new();
    let mut total = 0;
    for d in -3..=3 {
        for a in r.elements().filter(|&a| !r.is_zero(a)) {
            let x = alg.term(d, a);
            total += 1;
            if csl_graded_witness(&x)?.witness().is_none() {
                absent.push(x.to_string());
            }
        }
    }
    println!("{}: {total} terms, no witness for {absent:?}", alg.name());
    Ok(())
}

fn main() -> gral::Result<()> {
    for alg in [fixtures::laurent(fixtures::z(2)), fixtures::laurent(fixtures::z(4)), fixtures::swap_laurent()] {
        report(&alg)?;
    }
    let sw = fixtures::swap_laurent();
    let r = sw.ring();
    let a = r.elements().find(|&a| r.format(a) == "(1,0)").expect("Z/2xZ/2 has (1,0)");
    let lhs = sw.t_plus().mul(&sw.term(0, a));
    let rhs = sw.term(0, sw.data().alpha(a)).mul(&sw.t_plus());
    println!("t+ (1,0) = {lhs} = {rhs}; epsilon_2 = {}", csl_epsilon(&sw, 2)?);
    Ok(())
}
