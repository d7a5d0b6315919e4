use super::*;
use crate::fixtures;
use crate::pathalg::AlgebraSpec;

fn leavitt(g: crate::graph::Graph, n: u64) -> PathAlgebraOracle {
    PathAlgebraOracle::new(&AlgebraSpec::leavitt(g, fixtures::z(n)))
}

#[test]
fn off_diagonal_matrix_grading() {
    let o = MatrixGradingOracle::new(fixtures::z(2)).unwrap();
    let report = classify(&o, 3, 3).unwrap();
    assert!(matches!(report.verdict(Property::Strong), Verdict::Fails { exact: true, .. }));
    assert_eq!(report.verdict(Property::EpsilonStrong), &Verdict::HoldsExactly);
    assert!(report.verdict(Property::NearlyEpsilonStrong).holds());
    assert_eq!(report.verdict(Property::Symmetric), &Verdict::HoldsExactly);
    assert_eq!(report.chain_violation(), None);
    // independent check of the table against the grading relations
    let (_, table) = check_epsilon_strong(&o, 3, 3).unwrap();
    assert_eq!(table[&1], o.unit(0, 0));
    assert_eq!(table[&-1], o.unit(1, 1));
    assert_eq!(table[&0], o.identity().unwrap());
    assert_eq!(table[&2], o.zero());
    assert_eq!(table[&-3], o.zero());
}

#[test]
fn zero_multiplication_ring_fails_everything() {
    let o = TrivialGradingOracle::new(fixtures::zero_mult_ring());
    let report = classify(&o, 1, 1).unwrap();
    assert_eq!(report.verdict(Property::Strong), &Verdict::Fails { witness: "no identity".into(), exact: true });
    for p in Property::ALL {
        assert!(!report.verdict(p).holds(), "{p}");
    }
}

#[test]
fn trivial_grading_of_unital_ring() {
    let o = TrivialGradingOracle::new(fixtures::z(6));
    let report = classify(&o, 2, 2).unwrap();
    assert!(!report.verdict(Property::Strong).holds());
    assert_eq!(report.verdict(Property::EpsilonStrong), &Verdict::HoldsExactly);
    assert_eq!(report.epsilon[&0], "1");
}

#[test]
fn polynomial_grading_is_not_symmetric() {
    let o = PolynomialOracle::new(fixtures::z(2)).unwrap();
    let sym = check_symmetric(&o, 3, 3).unwrap();
    assert_eq!(sym.per_degree[&0], Verdict::HoldsExactly);
    for d in [1, 2, 3] {
        assert!(matches!(sym.per_degree[&d], Verdict::Fails { exact: true, .. }), "d={d}");
    }
    let report = classify(&o, 2, 2).unwrap();
    assert!(Property::ALL.iter().all(|&p| !report.verdict(p).holds()));
}

#[test]
fn strong_iff_no_sinks() {
    for (name, g) in fixtures::six_graphs() {
        let o = leavitt(g, 2);
        let v = check_strong_z(&o, 3).unwrap();
        assert_eq!(v.holds(), o.no_sinks(), "{name}: {v}");
    }
    assert_eq!(check_strong_z(&leavitt(fixtures::loop_graph(), 2), 3).unwrap(), Verdict::HoldsExactly);
    let vw = check_strong_z(&leavitt(fixtures::v_to_w(), 2), 3).unwrap();
    assert!(matches!(vw, Verdict::Fails { exact: true, .. }));
}

#[test]
fn leavitt_classification_respects_chain() {
    for (name, g) in fixtures::six_graphs() {
        let report = classify(&leavitt(g, 2), 2, 2).unwrap();
        assert_eq!(report.chain_violation(), None, "{name}");
        assert!(report.verdict(Property::EpsilonStrong).holds(), "{name}");
        assert!(report.verdict(Property::Symmetric).holds(), "{name}");
    }
    let vw = classify(&leavitt(fixtures::v_to_w(), 2), 3, 3).unwrap();
    assert_eq!(vw.verdict(Property::EpsilonStrong), &Verdict::HoldsExactly);
    assert_eq!(vw.epsilon[&-1], "w");
}

#[test]
fn epsilon_elements_on_fixtures() {
    for (name, g) in fixtures::six_graphs() {
        let alg = AlgebraSpec::leavitt(g, fixtures::z(3));
        for n in -3..=3 {
            epsilon_element(&alg, n).unwrap_or_else(|e| panic!("{name} n={n}: {e}"));
        }
    }
    let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(2));
    assert_eq!(epsilon_element(&alg, 0).unwrap(), crate::pathalg::AlgebraElement::one(&alg));
    assert_eq!(epsilon_element(&alg, 1).unwrap().to_string(), "v");
    assert_ne!(epsilon_element(&alg, 2).unwrap(), crate::pathalg::AlgebraElement::one(&alg));
    let cohn = AlgebraSpec::cohn(fixtures::loop_graph(), &[], fixtures::z(2)).unwrap();
    assert_eq!(epsilon_element(&cohn, 1), Err(crate::error::Error::NotLeavitt));
}

#[test]
fn radical_of_small_algebras() {
    let a1 = AlgebraSpec::leavitt(fixtures::a1(), fixtures::z(4));
    let j = jacobson_radical_algebra(&a1).unwrap();
    assert_eq!(j.elements.len(), 2);
    assert_eq!(j.generators.iter().map(ToString::to_string).collect::<Vec<_>>(), vec!["2v"]);
    let z6 = AlgebraSpec::leavitt(fixtures::a1(), fixtures::z(6));
    assert_eq!(jacobson_radical_algebra(&z6).unwrap().elements.len(), 1);
    let vw = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(4));
    let j = jacobson_radical_algebra(&vw).unwrap();
    assert_eq!(j.elements.len(), 16);
    assert_eq!(j.generators.len(), 4);
    let lp = AlgebraSpec::leavitt(fixtures::loop_graph(), fixtures::z(2));
    assert!(matches!(jacobson_radical_algebra(&lp), Err(crate::error::Error::Unsupported(_))));
}

#[test]
fn semiprime_detects_nilpotent_scalars() {
    let o = leavitt(fixtures::a1(), 4);
    match is_semiprime_graded(&o, 1, 1).unwrap() {
        Verdict::Fails { witness, exact } => {
            assert!(exact);
            assert!(witness.contains("2v"), "{witness}");
        }
        v => panic!("{v}"),
    }
    assert_eq!(is_semiprime_graded(&leavitt(fixtures::a1(), 6), 1, 1).unwrap(), Verdict::HoldsExactly);
    assert!(is_semiprime_graded(&leavitt(fixtures::v_to_w(), 2), 2, 2).unwrap().holds());
}

#[test]
fn vertex_local_units() {
    let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(2));
    let r = homogeneous_local_units(&alg, 3).unwrap();
    assert_eq!(r.units.len(), 2);
    assert_eq!(r.total, crate::pathalg::AlgebraElement::one(&alg));
}
