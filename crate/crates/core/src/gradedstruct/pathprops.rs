//! Grading data specific to path algebras: the `ε_n` of an epsilon-strong
//! grading, homogeneous local units and the Jacobson radical.

use std::collections::{BTreeMap, BTreeSet};

use crate::coeffring::{check_cap, search_cap, RingElement};
use crate::error::{Error, Result};
use crate::graph::{Graph, Path, VertexId};
use crate::pathalg::{Algebra, AlgebraElement, Monomial};

/// `reach[m]`: vertices that are the range of some path of length `m`.
fn reach(g: &Graph, upto: usize) -> Vec<BTreeSet<VertexId>> {
    let mut out: Vec<BTreeSet<VertexId>> = vec![g.vertices().collect()];
    for m in 0..upto {
        let next = g.edge_ids().filter(|&e| out[m].contains(&g.source(e))).map(|e| g.range(e)).collect();
        out.push(next);
    }
    out
}

/// `Σ_{|p| = n} pp*` for `n >= 0`. For `n < 0` it is `Σ γγ*` over the
/// prefix-minimal paths `γ` whose range receives a path of length
/// `|γ| + |n|`; these are exactly the real parts that can occur in `S_n`.
pub(crate) fn epsilon_formula(alg: &Algebra, n: i64) -> AlgebraElement {
    let g = alg.graph();
    let one = alg.ring().one();
    let proj = |p: Path| AlgebraElement::monomial(alg, Monomial { alpha: p.clone(), beta: p }, one);
    if n >= 0 {
        return g.paths(n as usize, None).into_iter().fold(AlgebraElement::zero(alg), |acc, p| acc.add(&proj(p)));
    }
    let k = n.unsigned_abs() as usize;
    // a path longer than |V| passes through a cycle, whose vertices receive
    // paths of every length
    let depth = g.vertex_count() + 1;
    let r = reach(g, depth + k);
    let mut cover = Vec::new();
    let mut stack: Vec<Path> = g.vertices().map(Path::vertex).collect();
    while let Some(p) = stack.pop() {
        let v = p.range();
        if r[p.len() + k].contains(&v) {
            cover.push(p);
        } else if p.len() < depth {
            for &e in g.out_edges(v) {
                stack.push(p.extend(g, e));
            }
        }
    }
    cover.into_iter().fold(AlgebraElement::zero(alg), |acc, p| acc.add(&proj(p)))
}

/// `ε_n ∈ S_n S_{-n}` with `ε_n s = s` for `s ∈ S_n` and `s ε_n = s` for
/// `s ∈ S_{-n}`, checked on reduced monomials with lengths at most
/// `max(|n|, 3)`.
pub fn epsilon_element(alg: &Algebra, n: i64) -> Result<AlgebraElement> {
    if !alg.is_leavitt() {
        return Err(Error::NotLeavitt);
    }
    let e = epsilon_formula(alg, n);
    let bound = (n.unsigned_abs() as usize).max(3);
    let one = alg.ring().one();
    let mono = |m: Monomial| AlgebraElement::monomial(alg, m, one);
    for s in alg.reduced_monomials_of_degree(n, bound).into_iter().map(mono) {
        if e.mul(&s) != s {
            return Err(Error::AssertionFailure(format!("ε_{n} · {s} != {s}")));
        }
    }
    for s in alg.reduced_monomials_of_degree(-n, bound).into_iter().map(mono) {
        if s.mul(&e) != s {
            return Err(Error::AssertionFailure(format!("{s} · ε_{n} != {s}")));
        }
    }
    Ok(e)
}

/// The vertices: commuting homogeneous idempotents of degree 0 whose sum
/// fixes every element.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalUnitsReport {
    pub units: Vec<AlgebraElement>,
    pub total: AlgebraElement,
}

/// Checks the vertex units on reduced monomials with lengths at most `bound`.
pub fn homogeneous_local_units(alg: &Algebra, bound: usize) -> Result<LocalUnitsReport> {
    let units: Vec<AlgebraElement> = alg.graph().vertices().map(|v| AlgebraElement::vertex(alg, v)).collect();
    let total = units.iter().fold(AlgebraElement::zero(alg), |acc, u| acc.add(u));
    for u in &units {
        if u.mul(u) != *u || u.degree() != Some(0) {
            return Err(Error::AssertionFailure(format!("{u} is not a degree-0 idempotent")));
        }
        for w in &units {
            if u.mul(w) != w.mul(u) {
                return Err(Error::AssertionFailure(format!("{u} and {w} do not commute")));
            }
        }
    }
    let one = alg.ring().one();
    for m in alg.reduced_monomials(bound) {
        let s = AlgebraElement::monomial(alg, m, one);
        if total.mul(&s) != s || s.mul(&total) != s {
            return Err(Error::AssertionFailure(format!("{total} does not fix {s}")));
        }
    }
    Ok(LocalUnitsReport { units, total })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadicalReport {
    /// Every element of `J`, zero first.
    pub elements: Vec<AlgebraElement>,
    /// Homogeneous elements whose additive span is `J`.
    pub generators: Vec<AlgebraElement>,
}

/// The Jacobson radical of a path algebra over an acyclic graph, by brute
/// force: `x ∈ J` iff `1 - yx` is invertible for every `y`.
pub fn jacobson_radical_algebra(alg: &Algebra) -> Result<RadicalReport> {
    let g = alg.graph();
    let Some(longest) = g.longest_path_len() else {
        return Err(Error::Unsupported("the radical needs an acyclic graph".into()));
    };
    let ring = alg.ring();
    let basis = alg.reduced_monomials(longest);
    let k = basis.len();
    let q = ring.order() as u128;
    let size = q.checked_pow(k as u32).unwrap_or(u128::MAX);
    check_cap(size.saturating_mul(size), search_cap())?;
    let index: BTreeMap<&Monomial, usize> = basis.iter().enumerate().map(|(i, m)| (m, i)).collect();
    // structure constants: integer coefficients of m_i m_j
    let one = ring.one();
    let table: Vec<Vec<Vec<(usize, RingElement)>>> = basis
        .iter()
        .map(|a| {
            basis
                .iter()
                .map(|b| {
                    let p = AlgebraElement::monomial(alg, a.clone(), one).mul(&AlgebraElement::monomial(alg, b.clone(), one));
                    p.terms().iter().map(|(m, &c)| (index[m], c)).collect()
                })
                .collect()
        })
        .collect();
    let elems: Vec<Vec<RingElement>> = {
        let rs: Vec<RingElement> = ring.elements().collect();
        let mut out = vec![Vec::new()];
        for _ in 0..k {
            out = out.into_iter().flat_map(|v| rs.iter().map(move |&r| [v.clone(), vec![r]].concat())).collect();
        }
        out
    };
    let mul = |a: &[RingElement], b: &[RingElement]| {
        let mut out = vec![ring.zero(); k];
        for (i, &x) in a.iter().enumerate().filter(|(_, x)| !ring.is_zero(**x)) {
            for (j, &y) in b.iter().enumerate().filter(|(_, y)| !ring.is_zero(**y)) {
                let xy = ring.mul(x, y);
                for &(t, c) in &table[i][j] {
                    out[t] = ring.add(out[t], ring.mul(xy, c));
                }
            }
        }
        out
    };
    let unit_vec: Vec<RingElement> = {
        let e = AlgebraElement::one(alg);
        basis.iter().map(|m| e.coefficient(m)).collect()
    };
    let units: BTreeSet<&Vec<RingElement>> =
        elems.iter().filter(|u| elems.iter().any(|z| mul(z, u) == unit_vec)).collect();
    let sub = |a: &[RingElement], b: &[RingElement]| -> Vec<RingElement> {
        a.iter().zip(b).map(|(&x, &y)| ring.sub(x, y)).collect()
    };
    let radical: Vec<&Vec<RingElement>> =
        elems.iter().filter(|x| elems.iter().all(|y| units.contains(&sub(&unit_vec, &mul(y, x))))).collect();
    let to_elem = |v: &Vec<RingElement>| AlgebraElement::from_terms(alg, basis.iter().cloned().zip(v.iter().copied()));
    let elements: Vec<AlgebraElement> = radical.iter().map(|v| to_elem(v)).collect();
    let members: BTreeSet<&Vec<RingElement>> = radical.iter().copied().collect();
    let mut generators: Vec<AlgebraElement> = Vec::new();
    let mut span: BTreeSet<Vec<RingElement>> = [vec![ring.zero(); k]].into();
    let mut comps: Vec<AlgebraElement> =
        elements.iter().flat_map(|x| x.homogeneous_components().into_values()).collect();
    comps.sort_by_key(|c| (c.terms().len(), c.terms().keys().next().cloned()));
    for c in comps {
        let v: Vec<RingElement> = basis.iter().map(|m| c.coefficient(m)).collect();
        if !members.contains(&v) {
            return Err(Error::AssertionFailure(format!("the component {c} is not in the radical")));
        }
        if span.contains(&v) {
            continue;
        }
        // close the span under adding multiples of the new generator
        let mut frontier: Vec<Vec<RingElement>> = span.iter().cloned().collect();
        while let Some(s) = frontier.pop() {
            let t: Vec<RingElement> = s.iter().zip(&v).map(|(&a, &b)| ring.add(a, b)).collect();
            if span.insert(t.clone()) {
                frontier.push(t);
            }
        }
        generators.push(c);
    }
    Ok(RadicalReport { elements, generators })
}
