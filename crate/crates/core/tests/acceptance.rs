//! Acceptance suite. Runs without the libtest harness so that every criterion
//! prints exactly one PASS/FAIL line; exits nonzero if any fails.

use std::collections::BTreeSet;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::sync::Arc;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use gral::coeffring::{Ring, RingElement};
use gral::cornerlaurent::{csl_graded_witness, CslAlgebra};
use gral::fixtures::{self, six_graphs};
use gral::gradedstruct::{
    check_epsilon_strong, check_strong_z, classify, epsilon_element, is_semiprime_graded, jacobson_radical_algebra,
    ClassificationReport, GradedRingOracle, MatrixGradingOracle, PathAlgebraOracle, PolynomialOracle, Property,
    TrivialGradingOracle, Verdict as GVerdict,
};
use gral::graph::{Graph, RelativeGraph};
use gral::morphisms::{chain_colimit_check, cohn_to_leavitt, verify_graded_iso, IsoVerdict};
use gral::pathalg::{
    dn_rank, matricial_decompose, normal_form_with, random_word, Algebra, AlgebraElement, AlgebraSpec, Monomial,
    Strategy,
};
use gral::regularity::{graded_vnr_verdict, graded_witness_constructive, graded_witness_oracle, Method, VerdictConfig};

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)+) => {
        if !$cond {
            return Err(format!($($fmt)+));
        }
    };
}

fn err(e: gral::Error) -> String {
    e.to_string()
}

fn rings() -> [Ring; 3] {
    [fixtures::z(2), fixtures::z(3), fixtures::z(6)]
}

fn mono(alg: &Algebra, m: Monomial) -> AlgebraElement {
    AlgebraElement::monomial(alg, m, alg.ring().one())
}

/// Every homogeneous `b` of degree `d` supported on reduced monomials with
/// lengths `<= bound`, by enumeration of coefficient vectors.
fn all_homogeneous(alg: &Algebra, d: i64, bound: usize) -> Vec<AlgebraElement> {
    let basis = alg.reduced_monomials_of_degree(d, bound);
    let rs: Vec<RingElement> = alg.ring().elements().collect();
    let mut out = vec![AlgebraElement::zero(alg)];
    for m in basis {
        out = out
            .into_iter()
            .flat_map(|acc| {
                let m = m.clone();
                rs.iter().map(move |&c| acc.add(&AlgebraElement::monomial(alg, m.clone(), c))).collect::<Vec<_>>()
            })
            .collect();
    }
    out
}

fn gen(alg: &Algebra, name: &str, c: i64) -> AlgebraElement {
    AlgebraElement::generator(alg, name).unwrap().scale(alg.ring().from_int(c))
}

fn c1_constructive_witnesses() -> Outcome {
    let start = Instant::now();
    let mut checked = 0;
    for ring in rings() {
        for (name, g) in six_graphs() {
            let alg = AlgebraSpec::leavitt(g, ring.clone());
            let cfg = VerdictConfig { method: Some(Method::Constructive), ..VerdictConfig::default() };
            let report = graded_vnr_verdict(&alg, &cfg).map_err(err)?;
            ensure!(report.holds(), "{name} over {}: {:?}", ring.name(), report.verdict);
            for cert in &report.certificates {
                let x = &cert.element;
                let b = cert.witness().ok_or("missing witness")?;
                ensure!(&x.mul(b).mul(x) == x, "{x} b {x} != {x} for b = {b}");
                ensure!(b.is_zero() || b.degree() == x.degree().map(|d| -d), "{b} has the wrong degree for {x}");
            }
            let monomials = alg.reduced_monomials(3).into_iter().filter(|m| m.degree().abs() <= 3).count();
            ensure!(report.certificates.len() == monomials + 100, "{name}: {} elements", report.certificates.len());
            checked += report.certificates.len();
        }
    }
    let took = start.elapsed();
    ensure!(took < Duration::from_secs(60), "took {took:?}");
    Ok(format!("{checked} verified witnesses in {:.1}s", took.as_secs_f64()))
}

fn c2_exact_absences() -> Outcome {
    let z4 = fixtures::z(4);
    for (g, name) in [(fixtures::a1(), "v"), (fixtures::v_to_w(), "f")] {
        let alg = AlgebraSpec::leavitt(g, z4.clone());
        let x = gen(&alg, name, 2);
        let cert = graded_witness_oracle(&x, 3).map_err(err)?;
        ensure!(cert.is_exact_absence(), "2{name}: {}", cert.record());
        // the whole component of degree -d is finite here
        let d = x.degree().unwrap();
        let longest = alg.graph().longest_path_len().unwrap();
        let hit = all_homogeneous(&alg, -d, longest).into_iter().find(|b| x.mul(b).mul(&x) == x);
        ensure!(hit.is_none(), "brute force found {}", hit.unwrap());
    }
    Ok("2v in L_Z4(A1) and 2f in L_Z4(v->w) have exact absences".into())
}

fn block_formula(g: &Graph, n: usize) -> usize {
    let sinks = g.sinks();
    let low: usize = (0..n)
        .flat_map(|i| sinks.iter().map(move |&v| (i, v)))
        .map(|(i, v)| g.paths(i, Some(v)).len().pow(2))
        .sum();
    low + g.vertices().map(|v| g.paths(n, Some(v)).len().pow(2)).sum::<usize>()
}

fn c3_matricial() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let mut pairs = 0;
    for (name, g) in six_graphs() {
        let alg = AlgebraSpec::leavitt(g.clone(), fixtures::z(3));
        for n in 0..=3 {
            let basis = alg.reduced_monomials(n).into_iter().filter(|m| m.alpha.len() == m.beta.len()).count();
            let rank = dn_rank(&alg, n);
            ensure!(rank == basis && rank == block_formula(&g, n), "{name} n={n}: {rank} vs {basis}");
        }
        let n = 2;
        for _ in 0..200 {
            let x = AlgebraElement::random_homogeneous(&alg, &mut rng, 0, n, 3);
            let y = AlgebraElement::random_homogeneous(&alg, &mut rng, 0, n, 3);
            let (ix, iy) = (matricial_decompose(&x, n).map_err(err)?, matricial_decompose(&y, n).map_err(err)?);
            let ring = alg.ring();
            ensure!(matricial_decompose(&x.mul(&y), n).map_err(err)? == ix.mul(ring, &iy), "{name}: {x} * {y}");
            ensure!(matricial_decompose(&x.add(&y), n).map_err(err)? == ix.add(ring, &iy), "{name}: {x} + {y}");
            pairs += 1;
        }
    }
    let rank = |g, n| dn_rank(&AlgebraSpec::leavitt(g, fixtures::z(2)), n);
    let quoted = [rank(fixtures::loop_graph(), 1), rank(fixtures::loop_graph(), 2), rank(fixtures::loop_graph(), 3)];
    ensure!(quoted == [1, 1, 1], "loop ranks {quoted:?}");
    ensure!(rank(fixtures::v_to_w(), 1) == 2, "v->w");
    ensure!(rank(fixtures::rose2(), 2) == 16, "rose");
    Ok(format!("ranks match for n <= 3; {pairs} random pairs respect + and *"))
}

fn c4_methods_agree() -> Outcome {
    let mut count = 0;
    for ring in [fixtures::z(2), fixtures::z(6)] {
        let algebras = [
            AlgebraSpec::leavitt(fixtures::a1(), ring.clone()),
            AlgebraSpec::leavitt(fixtures::v_to_w(), ring.clone()),
            AlgebraSpec::leavitt(fixtures::v_w_u(), ring.clone()),
            AlgebraSpec::cohn(fixtures::v_to_w(), &[], ring.clone()).map_err(err)?,
            AlgebraSpec::cohn(fixtures::v_w_u(), &["v"], ring.clone()).map_err(err)?,
        ];
        for alg in &algebras {
            let longest = alg.graph().longest_path_len().unwrap();
            for m in alg.reduced_monomials(longest) {
                for c in ring.elements().filter(|&c| !ring.is_zero(c)) {
                    let x = AlgebraElement::monomial(alg, m.clone(), c);
                    let a = graded_witness_constructive(&x).map_err(err)?.witness().is_some();
                    let o = graded_witness_oracle(&x, longest).map_err(err)?;
                    ensure!(a == o.witness().is_some(), "{}: {x} constructive={a} oracle={}", alg.name(), o.record());
                    count += 1;
                }
            }
        }
    }
    Ok(format!("{count} spanning elements, both methods agree"))
}

fn c5_epsilon() -> Outcome {
    for (name, g) in six_graphs() {
        let alg = AlgebraSpec::leavitt(g, fixtures::z(2));
        for n in -3i64..=3 {
            let e = epsilon_element(&alg, n).map_err(|e| format!("{name} n={n}: {e}"))?;
            for m in alg.reduced_monomials_of_degree(n, 3) {
                let s = mono(&alg, m);
                ensure!(e.mul(&s) == s, "{name}: eps_{n} {s} != {s}");
            }
            for m in alg.reduced_monomials_of_degree(-n, 3) {
                let s = mono(&alg, m);
                ensure!(s.mul(&e) == s, "{name}: {s} eps_{n} != {s}");
            }
        }
    }
    let o = MatrixGradingOracle::new(fixtures::z(2)).map_err(err)?;
    let (report, table) = check_epsilon_strong(&o, 3, 3).map_err(err)?;
    ensure!(report.overall == GVerdict::HoldsExactly, "{}", report.overall);
    ensure!(table[&1] == o.unit(0, 0) && table[&-1] == o.unit(1, 1), "eps_1, eps_-1");
    ensure!(Some(table[&0].clone()) == o.identity(), "eps_0");
    ensure!([2, 3, -2, -3].iter().all(|d| o.is_zero(&table[d])), "eps beyond 1");
    Ok("both relations on six graphs; matrix table e11, e22, 1, 0".into())
}

fn c6_strong() -> Outcome {
    let expected: BTreeSet<&str> = ["loop", "2-cycle", "rose2"].into();
    for (name, g) in six_graphs() {
        let no_sinks = g.sinks().is_empty();
        ensure!(no_sinks == expected.contains(name), "{name}: sinks {:?}", g.sinks());
        let v = check_strong_z(&PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, fixtures::z(2))), 3).map_err(err)?;
        ensure!(v.holds() == no_sinks, "{name}: {v}");
    }
    Ok("strong exactly for loop, 2-cycle, rose2".into())
}

fn c7_cohn_iso() -> Outcome {
    let rel = RelativeGraph::with_names(Arc::new(fixtures::v_to_w()), &[]).map_err(err)?;
    let h = cohn_to_leavitt(&rel, &fixtures::z(2)).map_err(err)?;
    let want = IsoVerdict::HoldsExactly { source_rank: 5, target_rank: 5 };
    for bound in 1..=3 {
        let v = verify_graded_iso(&h, bound, bound).map_err(err)?;
        ensure!(v == want, "bound {bound}: {v:?}");
    }
    ensure!(h.source.reduced_monomials(3).len() == 5 && h.target.reduced_monomials(3).len() == 5, "basis count");
    Ok("graded iso, ranks 5 and 5".into())
}

fn chain_ok(report: &ClassificationReport) -> Result<(), String> {
    match report.chain_violation() {
        None => Ok(()),
        Some(v) => Err(format!("{}: {v}", report.ring)),
    }
}

fn c8_chain() -> Outcome {
    let mut reports = 0;
    for ring in [fixtures::z(2), fixtures::z(4)] {
        for (_, g) in six_graphs() {
            chain_ok(&classify(&PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, ring.clone())), 2, 2).map_err(err)?)?;
            reports += 1;
        }
    }
    chain_ok(&classify(&MatrixGradingOracle::new(fixtures::z(2)).map_err(err)?, 3, 3).map_err(err)?)?;
    chain_ok(&classify(&TrivialGradingOracle::new(fixtures::z(6)), 2, 2).map_err(err)?)?;
    chain_ok(&classify(&TrivialGradingOracle::new(fixtures::zero_mult_ring()), 1, 1).map_err(err)?)?;
    chain_ok(&classify(&PolynomialOracle::new(fixtures::z(2)).map_err(err)?, 2, 2).map_err(err)?)?;
    for csl in [fixtures::swap_laurent(), fixtures::laurent(fixtures::z(4))] {
        chain_ok(&classify(&csl, 2, 2).map_err(err)?)?;
    }
    reports += 6;
    let alg = AlgebraSpec::leavitt(fixtures::a1(), fixtures::z(4));
    let report = classify(&PathAlgebraOracle::new(&alg), 3, 3).map_err(err)?;
    ensure!(report.verdict(Property::Symmetric).holds(), "L_Z4(A1) not symmetric");
    let vnr = graded_vnr_verdict(&alg, &VerdictConfig::default()).map_err(err)?;
    ensure!(!vnr.holds(), "L_Z4(A1) graded regular");
    Ok(format!("{reports} reports respect the chain; L_Z4(A1) symmetric but not graded regular"))
}

fn c9_radical() -> Outcome {
    let z2 = jacobson_radical_algebra(&AlgebraSpec::leavitt(fixtures::a1(), fixtures::z(2))).map_err(err)?;
    ensure!(z2.elements.len() == 1 && z2.elements[0].is_zero(), "J over Z/2: {:?}", z2.elements);
    let a4 = AlgebraSpec::leavitt(fixtures::a1(), fixtures::z(4));
    let j = jacobson_radical_algebra(&a4).map_err(err)?;
    let two_v = gen(&a4, "v", 2);
    ensure!(j.generators == vec![two_v.clone()], "generators {:?}", j.generators);
    let span: BTreeSet<String> = (0..4).map(|k| two_v.scale(a4.ring().from_int(k)).to_string()).collect();
    let got: BTreeSet<String> = j.elements.iter().map(ToString::to_string).collect();
    ensure!(got == span, "J over Z/4: {got:?}");
    match is_semiprime_graded(&PathAlgebraOracle::new(&a4), 3, 3).map_err(err)? {
        GVerdict::Fails { witness, .. } => ensure!(witness.contains("2v"), "witness {witness}"),
        v => return Err(format!("L_Z4(A1) semiprime: {v}")),
    }
    for ring in rings() {
        for (name, g) in six_graphs() {
            let v = is_semiprime_graded(&PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, ring.clone())), 3, 3)
                .map_err(err)?;
            ensure!(v.holds(), "{name} over {}: {v}", ring.name());
        }
    }
    Ok("J = 0 over Z/2, span{2v} over Z/4; semiprime exactly for regular coefficients".into())
}

fn brute_csl_witness(x: &gral::cornerlaurent::CslElement) -> bool {
    let alg = x.algebra();
    let d = x.degree().unwrap();
    alg.ring().elements().any(|c| {
        let b = alg.term(-d, c);
        &x.mul(&b).mul(x) == x
    })
}

fn c10_corner() -> Outcome {
    let algebras: Vec<CslAlgebra> =
        vec![fixtures::laurent(fixtures::z(2)), fixtures::laurent(fixtures::z(6)), fixtures::swap_laurent()];
    let mut count = 0;
    for alg in &algebras {
        let r = alg.ring();
        for d in -3..=3 {
            for a in r.elements() {
                let x = alg.term(d, a);
                if x.is_zero() {
                    continue;
                }
                let cert = csl_graded_witness(&x).map_err(err)?;
                let b = cert.witness().ok_or_else(|| format!("{}: {x} has no witness", alg.name()))?;
                ensure!(x.mul(b).mul(&x) == x, "{x} b {x} != {x}");
                ensure!(brute_csl_witness(&x), "brute force disagrees on {x}");
                count += 1;
            }
        }
    }
    let z4 = fixtures::laurent(fixtures::z(4));
    let x = z4.term(1, z4.ring().from_int(2));
    let cert = csl_graded_witness(&x).map_err(err)?;
    ensure!(cert.is_exact_absence(), "2t+: {}", cert.record());
    ensure!(!brute_csl_witness(&x), "brute force found a witness for 2t+");
    Ok(format!("{count} witnesses; 2t+ over Z/4 has an exact absence"))
}

fn c11_rewriting() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for (name, g) in six_graphs() {
        let alg = AlgebraSpec::leavitt(g.clone(), fixtures::z(3));
        let one = alg.ring().one();
        for i in 0..1000u64 {
            let len = 1 + (i as usize % 6);
            let w = random_word(&g, &mut rng, len);
            let a = normal_form_with(&alg, &[(one, w.clone())], Strategy::Leftmost);
            let b = normal_form_with(&alg, &[(one, w.clone())], Strategy::Randomized(i));
            ensure!(a == b, "{name}: {w:?} gives {a} and {b}");
        }
        let pick = |rng: &mut ChaCha8Rng| {
            let d = rand::Rng::gen_range(rng, -2..=2);
            AlgebraElement::random_homogeneous(&alg, rng, d, 2, 3)
        };
        for _ in 0..500 {
            let (x, y, z) = (pick(&mut rng), pick(&mut rng), pick(&mut rng));
            ensure!(x.mul(&y).mul(&z) == x.mul(&y.mul(&z)), "{name}: ({x})({y})({z})");
            ensure!(x.mul(&y).involution() == y.involution().mul(&x.involution()), "{name}: ({x}{y})*");
            ensure!(x.involution().involution() == x, "{name}: {x}**");
            if !x.is_zero() {
                ensure!(x.involution().degree() == x.degree().map(|d| -d), "{name}: deg {x}*");
            }
        }
    }
    Ok("1000 words and 500 triples per graph".into())
}

fn c12_functor() -> Outcome {
    let chain = fixtures::chain();
    for ring in rings() {
        let v = chain_colimit_check(&chain, &ring, None).map_err(err)?;
        ensure!(v.holds(), "over {}: {v:?}", ring.name());
    }
    Ok("A1 -> v->w -> v->w->u commutes".into())
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("constructive witnesses on six graphs", c1_constructive_witnesses),
        ("exact absences over Z/4", c2_exact_absences),
        ("D_n ranks and block homomorphism", c3_matricial),
        ("oracle and constructive agree", c4_methods_agree),
        ("epsilon elements", c5_epsilon),
        ("strong iff no sinks", c6_strong),
        ("Cohn algebra as Leavitt algebra of E(X)", c7_cohn_iso),
        ("grading implication chain", c8_chain),
        ("radical and semiprimeness", c9_radical),
        ("corner skew Laurent witnesses", c10_corner),
        ("rewriting soundness", c11_rewriting),
        ("chain colimit", c12_functor),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|p| {
            Err(p.downcast_ref::<String>().cloned().or(p.downcast_ref::<&str>().map(|s| s.to_string())).unwrap_or_default())
        });
        let secs = t.elapsed().as_secs_f64();
        match outcome {
            Ok(msg) => println!("criterion {:>2} PASS {name} ({secs:.1}s): {msg}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {:>2} FAIL {name} ({secs:.1}s): {msg}", i + 1);
            }
        }
    }
    println!("acceptance: {}/12 passed in {:.1}s", 12 - failed, start.elapsed().as_secs_f64());
    if failed > 0 {
        std::process::exit(1);
    }
}
