//! Graded regularity over every fixture graph: it holds when the
//! coefficients are regular and fails on `2v` over Z/4.

use gral::fixtures;
use gral::pathalg::AlgebraSpec;
use gral::regularity::{graded_vnr_verdict, Verdict, VerdictConfig};

fn main() -> gral::Result<()> {
    let cfg = VerdictConfig { samples: 50, ..VerdictConfig::default() };
    for n in [2, 4, 6] {
        for (name, g) in fixtures::six_graphs() {
            let report = graded_vnr_verdict(&AlgebraSpec::leavitt(g, fixtures::z(n)), &cfg)?;
            let line = match report.verdict {
                Verdict::VerifiedAtBounds => format!("holds on {} elements", report.certificates.len()),
                Verdict::Counterexample { index, exact } => {
                    let x = &report.certificates[index].element;
                    format!("fails on {x} ({})", if exact { "exact" } else { "at bound" })
                }
            };
            println!("Z/{n} {name:>9} [{}]: {line}", report.method);
        }
    }
    Ok(())
}
