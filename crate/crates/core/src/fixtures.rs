//! Small graphs and rings used throughout the tests, examples and the
//! `examples` subcommand.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::coeffring::{Ring, RingSpec};
use crate::cornerlaurent::{csl_make, CornerData, CslAlgebra};
use crate::graph::{Graph, GraphMorphism, RelativeGraph};

fn graph(vertices: &[&str], edges: &[(&str, &str, &str)]) -> Graph {
    Graph::from_names(vertices, edges).expect("fixture graph is valid")
}

/// One vertex, no edges.
pub fn a1() -> Graph {
    graph(&["v"], &[])
}

/// `f : v -> w`.
pub fn v_to_w() -> Graph {
    graph(&["v", "w"], &[("f", "v", "w")])
}

/// `f : v -> w`, `g : w -> u`.
pub fn v_w_u() -> Graph {
    graph(&["u", "v", "w"], &[("f", "v", "w"), ("g", "w", "u")])
}

/// A single loop `e` at `v`.
pub fn loop_graph() -> Graph {
    graph(&["v"], &[("e", "v", "v")])
}

/// `e : v -> w`, `f : w -> v`.
pub fn two_cycle() -> Graph {
    graph(&["v", "w"], &[("e", "v", "w"), ("f", "w", "v")])
}

/// Two loops `e`, `f` at `v`.
pub fn rose2() -> Graph {
    graph(&["v"], &[("e", "v", "v"), ("f", "v", "v")])
}

/// Loop `e` at `v` with an exit `f : v -> w`.
pub fn toeplitz() -> Graph {
    graph(&["v", "w"], &[("e", "v", "v"), ("f", "v", "w")])
}

/// The six graphs of the main test corpus, by name.
pub fn six_graphs() -> Vec<(&'static str, Graph)> {
    vec![
        ("A1", a1()),
        ("v->w", v_to_w()),
        ("loop", loop_graph()),
        ("2-cycle", two_cycle()),
        ("rose2", rose2()),
        ("toeplitz", toeplitz()),
    ]
}

pub fn z(n: u64) -> Ring {
    Ring::modular(n)
}

pub fn z2xz2() -> Ring {
    Ring::product(&[z(2), z(2)])
}

/// GF(4) as a table ring on `{0, 1, a, a+1}` with `a^2 = a + 1`.
pub fn f4_spec() -> RingSpec {
    // elements 0,1,2,3 encode b1*a + b0 as 2*b1 + b0
    let add: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| x ^ y).collect()).collect();
    let mul: Vec<Vec<usize>> = (0..4).map(|x| (0..4).map(|y| gf4_mul(x, y)).collect()).collect();
    RingSpec::Table { size: 4, zero: 0, one: Some(1), add, mul }
}

fn gf4_mul(x: usize, y: usize) -> usize {
    let mut acc = 0;
    let mut a = x;
    for bit in 0..2 {
        if y >> bit & 1 == 1 {
            acc ^= a;
        }
        a <<= 1;
        if a & 4 != 0 {
            a ^= 0b111;
        }
    }
    acc
}

/// `Z/2` with the zero multiplication: a ring without identity in which
/// no element acts as a unit on anything nonzero.
pub fn zero_mult_spec() -> RingSpec {
    RingSpec::Table {
        size: 2,
        zero: 0,
        one: None,
        add: vec![vec![0, 1], vec![1, 0]],
        mul: vec![vec![0, 0], vec![0, 0]],
    }
}

pub fn zero_mult_ring() -> Ring {
    Ring::new_non_unital(zero_mult_spec()).expect("fixture ring is valid")
}

fn relative(g: Graph, x: &[&str]) -> RelativeGraph {
    RelativeGraph::with_names(Arc::new(g), x).expect("fixture X is regular")
}

fn names(pairs: &[(&str, &str)]) -> BTreeMap<String, String> {
    pairs.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect()
}

/// The inclusions `A1 -> (v->w, {v}) -> (v->w->u, {v})`.
pub fn chain() -> Vec<GraphMorphism> {
    let a1 = relative(a1(), &[]);
    let vw = relative(v_to_w(), &["v"]);
    let vwu = relative(v_w_u(), &["v"]);
    let first = GraphMorphism::from_names(a1, vw.clone(), &names(&[("v", "v")]), &BTreeMap::new());
    let second = GraphMorphism::from_names(vw, vwu, &names(&[("v", "v"), ("w", "w")]), &names(&[("f", "f")]));
    vec![first.expect("fixture morphism"), second.expect("fixture morphism")]
}

/// `R[t+, t-; id]` with `e = 1`, i.e. the Laurent ring over `ring`.
pub fn laurent(ring: Ring) -> CslAlgebra {
    let alpha = ring.elements().collect();
    csl_make(CornerData::new(ring.clone(), ring.one(), alpha).expect("identity is a corner iso"))
        .expect("valid corner data")
}

/// `(Z/2 x Z/2)[t+, t-; swap]` with `e = 1`.
pub fn swap_laurent() -> CslAlgebra {
    let ring = z2xz2();
    let alpha = ring
        .elements()
        .map(|x| {
            let p = ring.split(x.0);
            ring.join(&[p[1], p[0]])
        })
        .collect();
    csl_make(CornerData::new(ring.clone(), ring.one(), alpha).expect("swap is a corner iso"))
        .expect("valid corner data")
}
