//! Relative Cohn algebras as Leavitt path algebras of `E(X)`, and the
//! functor from graph morphisms to algebra homs on a finite chain.

use std::sync::Arc;

use gral::fixtures;
use gral::graph::{cohn_cover, RelativeGraph};
use gral::morphisms::{chain_colimit_check, cohn_to_leavitt, verify_graded_iso};

fn main() -> gral::Result<()> {
    let z2 = fixtures::z(2);
    for (name, g, x) in [("v->w", fixtures::v_to_w(), vec![]), ("toeplitz", fixtures::toeplitz(), vec![]), ("v->w->u", fixtures::v_w_u(), vec!["v"])] {
        let rel = RelativeGraph::with_names(Arc::new(g), &x)?;
        let cover = cohn_cover(&rel)?;
        let names: Vec<&str> = cover.vertices().map(|v| cover.vertex_name(v)).collect();
        let iso = verify_graded_iso(&cohn_to_leavitt(&rel, &z2)?, 3, 3)?;
        println!("{name} X={x:?}: E(X) has vertices {names:?}; {iso:?}");
    }
    let chain = fixtures::chain();
    println!("chain of {} morphisms: {:?}", chain.len(), chain_colimit_check(&chain, &z2, None)?);
    Ok(())
}
