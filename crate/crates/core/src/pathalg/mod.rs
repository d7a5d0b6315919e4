//! Relative Cohn path algebras `C_R^X(E)` and Leavitt path algebras
//! `L_R(E) = C_R^{Reg(E)}(E)` over finite coefficient rings.
//!
//! Elements are kept as sums of reduced monomials `αβ*`: with the least edge
//! leaving each vertex of `X` designated special, a monomial is reduced unless
//! `α` and `β` both end in the same special edge.

mod element;
mod matricial;
mod rewrite;

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt;
use std::sync::Arc;

pub use element::{AlgebraElement, ElementFile, PathRecord, TermRecord};
pub use matricial::{dn_blocks, dn_rank, matricial_decompose, matricial_lift, Block, BlockLabel, MatricialImage};
pub use rewrite::{normal_form, normal_form_with, parse_word, random_word, Generator, Strategy, Word};

use crate::coeffring::Ring;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Graph, Path, RelativeGraph, VertexId};

/// The data defining `C_R^X(E)`: graph, distinguished set `X` and coefficient ring.
#[derive(Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    rel: RelativeGraph,
    ring: Ring,
    special: Vec<Option<EdgeId>>,
}

/// Shared handle to an algebra; elements keep one of these.
pub type Algebra = Arc<AlgebraSpec>;

impl AlgebraSpec {
    pub fn new(rel: RelativeGraph, ring: Ring) -> Algebra {
        let g = &rel.graph;
        let special = g
            .vertices()
            .map(|v| if rel.x.contains(&v) { g.out_edges(v).first().copied() } else { None })
            .collect();
        Arc::new(AlgebraSpec { rel, ring, special })
    }

    /// `L_R(E)`.
    pub fn leavitt(graph: Graph, ring: Ring) -> Algebra {
        AlgebraSpec::new(RelativeGraph::leavitt(Arc::new(graph)), ring)
    }

    /// `C_R^X(E)` with `X` given by vertex names.
    pub fn cohn(graph: Graph, x: &[&str], ring: Ring) -> Result<Algebra> {
        Ok(AlgebraSpec::new(RelativeGraph::with_names(Arc::new(graph), x)?, ring))
    }

    pub fn relative_graph(&self) -> &RelativeGraph {
        &self.rel
    }

    pub fn graph(&self) -> &Graph {
        &self.rel.graph
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn x(&self) -> &BTreeSet<VertexId> {
        &self.rel.x
    }

    pub fn is_leavitt(&self) -> bool {
        self.rel.is_leavitt()
    }

    /// The special edge at `v` when `v` lies in `X`.
    pub fn special_edge(&self, v: VertexId) -> Option<EdgeId> {
        self.special[v.0]
    }

    pub fn is_special(&self, e: EdgeId) -> bool {
        self.special_edge(self.graph().source(e)) == Some(e)
    }

    pub fn is_reduced(&self, m: &Monomial) -> bool {
        match (m.alpha.last_edge(), m.beta.last_edge()) {
            (Some(f), Some(g)) => !(f == g && self.is_special(f)),
            _ => true,
        }
    }

    /// Reduced monomials with `len α, len β <= max_len`, in monomial order.
    pub fn reduced_monomials(&self, max_len: usize) -> Vec<Monomial> {
        let paths = self.graph().paths_up_to(max_len);
        let mut out: Vec<Monomial> = paths
            .iter()
            .flat_map(|a| {
                paths.iter().filter(move |b| b.range() == a.range()).map(move |b| Monomial {
                    alpha: a.clone(),
                    beta: b.clone(),
                })
            })
            .filter(|m| self.is_reduced(m))
            .collect();
        out.sort();
        out
    }

    /// Reduced monomials of degree `d` with both lengths at most `max_len`.
    pub fn reduced_monomials_of_degree(&self, d: i64, max_len: usize) -> Vec<Monomial> {
        self.reduced_monomials(max_len).into_iter().filter(|m| m.degree() == d).collect()
    }

    /// Display name such as `L_{Z/2}(E)` or `C^X_{Z/2}(E)`.
    pub fn name(&self) -> String {
        if self.is_leavitt() {
            format!("L_{{{}}}", self.ring.name())
        } else {
            let x: Vec<&str> = self.x().iter().map(|&v| self.graph().vertex_name(v)).collect();
            format!("C^{{{}}}_{{{}}}", x.join(","), self.ring.name())
        }
    }

    pub(crate) fn check_same(&self, other: &AlgebraSpec) -> Result<()> {
        if std::ptr::eq(self, other) || self == other {
            Ok(())
        } else {
            Err(Error::SpecMismatch)
        }
    }
}

/// `αβ*` with `r(α) = r(β)`; the vertex `v` is `(v, v)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub alpha: Path,
    pub beta: Path,
}

impl Monomial {
    pub fn new(alpha: Path, beta: Path) -> Result<Monomial> {
        if alpha.range() != beta.range() {
            return Err(Error::BadGraph("monomial needs r(alpha) = r(beta)".into()));
        }
        Ok(Monomial { alpha, beta })
    }

    pub fn vertex(v: VertexId) -> Monomial {
        Monomial { alpha: Path::vertex(v), beta: Path::vertex(v) }
    }

    /// `α` viewed as `α r(α)*`.
    pub fn real(alpha: Path) -> Monomial {
        let beta = Path::vertex(alpha.range());
        Monomial { alpha, beta }
    }

    /// `β*` viewed as `r(β) β*`.
    pub fn ghost(beta: Path) -> Monomial {
        let alpha = Path::vertex(beta.range());
        Monomial { alpha, beta }
    }

    pub fn degree(&self) -> i64 {
        self.alpha.len() as i64 - self.beta.len() as i64
    }

    pub fn is_vertex(&self) -> bool {
        self.alpha.is_vertex() && self.beta.is_vertex()
    }

    /// `s(α)`: the vertex `u` with `u αβ* = αβ*`.
    pub fn left_vertex(&self) -> VertexId {
        self.alpha.source()
    }

    /// `s(β)`: the vertex `u` with `αβ* u = αβ*`.
    pub fn right_vertex(&self) -> VertexId {
        self.beta.source()
    }

    pub fn star(&self) -> Monomial {
        Monomial { alpha: self.beta.clone(), beta: self.alpha.clone() }
    }

    /// `(αβ*)(γδ*)` before reduction: `ακδ*` if `γ = βκ`, `α(δσ)*` if
    /// `β = γσ`, and zero otherwise.
    pub fn product(&self, other: &Monomial) -> Option<Monomial> {
        if let Some(kappa) = self.beta.strip_prefix_of(&other.alpha) {
            return Some(Monomial { alpha: self.alpha.concat(&kappa), beta: other.beta.clone() });
        }
        if let Some(sigma) = other.alpha.strip_prefix_of(&self.beta) {
            return Some(Monomial { alpha: self.alpha.clone(), beta: other.beta.concat(&sigma) });
        }
        None
    }

    pub fn format(&self, graph: &Graph) -> String {
        if self.is_vertex() {
            return graph.vertex_name(self.alpha.source()).to_string();
        }
        let mut s = String::new();
        if !self.alpha.is_vertex() {
            s.push_str(&graph.path_name(&self.alpha));
        }
        if !self.beta.is_vertex() {
            if self.beta.len() == 1 {
                s.push_str(&graph.path_name(&self.beta));
                s.push('*');
            } else {
                s.push_str(&format!("({})*", graph.path_name(&self.beta)));
            }
        }
        s
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.alpha.cmp(&other.alpha))
            .then_with(|| self.beta.cmp(&other.beta))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Formats a monomial together with its graph.
pub struct DisplayMonomial<'a>(pub &'a Monomial, pub &'a Graph);

impl fmt::Display for DisplayMonomial<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.format(self.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn special_edges_are_least_names() {
        let alg = AlgebraSpec::leavitt(fixtures::toeplitz(), fixtures::z(2));
        let g = alg.graph();
        assert_eq!(alg.special_edge(g.vertex_id("v").unwrap()), g.edge_id("e"));
        assert_eq!(alg.special_edge(g.vertex_id("w").unwrap()), None);
    }

    #[test]
    fn free_span_of_single_edge() {
        // C^∅(v->w): v, w, f, f*, ff*
        let alg = AlgebraSpec::cohn(fixtures::v_to_w(), &[], fixtures::z(2)).unwrap();
        let all = alg.reduced_monomials(1);
        assert_eq!(all.len(), 5);
        // in L, ff* is not reduced
        let l = AlgebraSpec::leavitt(fixtures::v_to_w(), fixtures::z(2));
        assert_eq!(l.reduced_monomials(1).len(), 4);
    }

    #[test]
    fn monomial_products() {
        let g = fixtures::loop_graph();
        let e = Path::from_names(&g, &["e"]).unwrap();
        let ee = Path::from_names(&g, &["e", "e"]).unwrap();
        let m = Monomial::real(e.clone());
        let gh = Monomial::ghost(e.clone());
        // e* e = v
        assert_eq!(gh.product(&m), Some(Monomial::vertex(g.vertex_id("v").unwrap())));
        // e (e e)* = (e)* ... e ee* -> α = e, β = ee: e * (ee)* = e e* e*
        let x = Monomial::ghost(ee.clone());
        assert_eq!(m.product(&x), Some(Monomial { alpha: e.clone(), beta: ee.clone() }));
        assert_eq!(Monomial { alpha: ee.clone(), beta: e.clone() }.star().degree(), -1);
    }

    #[test]
    fn formatting() {
        let g = fixtures::rose2();
        let ef = Path::from_names(&g, &["e", "f"]).unwrap();
        let f = Path::from_names(&g, &["f"]).unwrap();
        let m = Monomial::new(ef.clone(), f.clone()).unwrap();
        assert_eq!(m.format(&g), "eff*");
        let m = Monomial::new(f, ef).unwrap();
        assert_eq!(m.format(&g), "f(ef)*");
    }
}
