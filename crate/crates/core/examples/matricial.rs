//! Block decomposition of the filtration `D_n` into matrix rings.

use gral::fixtures;
use gral::pathalg::{dn_blocks, dn_rank, matricial_decompose, AlgebraElement, AlgebraSpec, BlockLabel};

fn main() -> gral::Result<()> {
    for (name, g) in fixtures::six_graphs() {
        let alg = AlgebraSpec::leavitt(g, fixtures::z(2));
        let ranks: Vec<usize> = (0..=3).map(|n| dn_rank(&alg, n)).collect();
        println!("{name:>9}: rank D_0..D_3 = {ranks:?}");
    }

    let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(3));
    let g = alg.graph();
    let kind = |label: &BlockLabel| match *label {
        BlockLabel::Sink { level, vertex } => format!("sink {} at level {level}", g.vertex_name(vertex)),
        BlockLabel::Full { vertex } => format!("full block at {}", g.vertex_name(vertex)),
    };
    for (label, paths) in dn_blocks(&alg, 2) {
        let names: Vec<String> = paths.iter().map(|p| g.path_name(p)).collect();
        println!("{}: {}", kind(&label), names.join(" "));
    }

    let e = AlgebraElement::generator(&alg, "e")?;
    let f = AlgebraElement::generator(&alg, "f")?;
    let x = e.mul(&f.involution()).add(&f.mul(&f.involution()).scale(alg.ring().from_int(2)));
    let image = matricial_decompose(&x, 2)?;
    println!("{x} in D_2:");
    for b in &image.blocks {
        println!("  {}: {}", kind(&b.label), b.matrix.format(alg.ring()));
    }
    Ok(())
}
