//! Strong, epsilon-strong, nearly epsilon-strong and symmetric gradings on
//! path algebras and on the built-in test rings.

use gral::fixtures;
use gral::gradedstruct::{classify, MatrixGradingOracle, PathAlgebraOracle, PolynomialOracle, Property};
use gral::pathalg::AlgebraSpec;

fn main() -> gral::Result<()> {
    for (name, g) in fixtures::six_graphs() {
        let report = classify(&PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, fixtures::z(2))), 2, 2)?;
        let row: Vec<String> = Property::ALL.iter().map(|&p| format!("{p}={}", report.verdict(p))).collect();
        println!("{name:>9}: {}", row.join("  "));
    }
    println!();
    println!("{}", classify(&MatrixGradingOracle::new(fixtures::z(2))?, 2, 2)?);
    println!("{}", classify(&PolynomialOracle::new(fixtures::z(3))?, 2, 2)?);
    Ok(())
}
