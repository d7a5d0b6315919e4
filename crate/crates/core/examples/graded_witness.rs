//! Homogeneous witnesses `b` with `x b x = x` in Leavitt path algebras, by
//! the constructive algorithm and by an exact linear solve.

use gral::fixtures;
use gral::pathalg::{AlgebraElement, AlgebraSpec};
use gral::regularity::{graded_witness_constructive, graded_witness_oracle};

fn main() -> gral::Result<()> {
    let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(6));
    let e = AlgebraElement::generator(&alg, "e")?;
    let f = AlgebraElement::generator(&alg, "f")?;
    let x = e.mul(&e).add(&e.mul(&f).scale(alg.ring().from_int(3)));
    println!("{}", graded_witness_constructive(&x)?.record());
    println!();

    let z4 = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(4));
    let two_f = AlgebraElement::generator(&z4, "f")?.scale(z4.ring().from_int(2));
    println!("{}", graded_witness_oracle(&two_f, 3)?.record());
    Ok(())
}
