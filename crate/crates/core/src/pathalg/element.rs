use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use rand::seq::SliceRandom;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::{Algebra, Monomial};
use crate::coeffring::RingElement;
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Path, VertexId};

/// A finite sum `Σ r_i α_i β_i*` over reduced monomials.
#[derive(Clone)]
pub struct AlgebraElement {
    alg: Algebra,
    terms: BTreeMap<Monomial, RingElement>,
}

impl PartialEq for AlgebraElement {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms && self.alg.check_same(&other.alg).is_ok()
    }
}

impl Eq for AlgebraElement {}

impl fmt::Debug for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for AlgebraElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let ring = self.alg.ring();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, &c)| {
                let mono = m.format(self.alg.graph());
                if ring.try_one() == Some(c) {
                    mono
                } else {
                    format!("{}{}", ring.format(c), mono)
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// Adds `c · m` to `terms`, rewriting `m` into reduced monomials first.
pub(crate) fn push_reduced(alg: &Algebra, terms: &mut BTreeMap<Monomial, RingElement>, m: Monomial, c: RingElement) {
    let ring = alg.ring();
    let g = alg.graph();
    let mut stack = vec![(m, c)];
    while let Some((m, c)) = stack.pop() {
        if ring.is_zero(c) {
            continue;
        }
        if alg.is_reduced(&m) {
            match terms.entry(m) {
                Entry::Vacant(slot) => {
                    slot.insert(c);
                }
                Entry::Occupied(mut slot) => {
                    let sum = ring.add(*slot.get(), c);
                    if ring.is_zero(sum) {
                        slot.remove();
                    } else {
                        *slot.get_mut() = sum;
                    }
                }
            }
            continue;
        }
        // α0 f (β0 f)* = α0 β0* - Σ_{h ≠ f} (α0 h)(β0 h)*
        let f = m.alpha.last_edge().expect("non-reduced monomials have edges");
        let a0 = m.alpha.without_last(g).expect("nonempty");
        let b0 = m.beta.without_last(g).expect("nonempty");
        let minus = ring.neg(c);
        for &h in g.out_edges(g.source(f)) {
            if h != f {
                stack.push((Monomial { alpha: a0.extend(g, h), beta: b0.extend(g, h) }, minus));
            }
        }
        stack.push((Monomial { alpha: a0, beta: b0 }, c));
    }
}

impl AlgebraElement {
    pub fn zero(alg: &Algebra) -> Self {
        AlgebraElement { alg: Arc::clone(alg), terms: BTreeMap::new() }
    }

    /// `Σ v`, the identity of the algebra (zero for the null graph).
    pub fn one(alg: &Algebra) -> Self {
        let mut x = Self::zero(alg);
        if alg.graph().is_null() {
            return x;
        }
        let one = alg.ring().one();
        for v in alg.graph().vertices() {
            x.terms.insert(Monomial::vertex(v), one);
        }
        x
    }

    /// `c · m`, reduced.
    pub fn monomial(alg: &Algebra, m: Monomial, c: RingElement) -> Self {
        let mut x = Self::zero(alg);
        push_reduced(alg, &mut x.terms, m, c);
        x
    }

    /// `Σ c_i m_i` from arbitrary (possibly non-reduced) monomials.
    pub fn from_terms(alg: &Algebra, terms: impl IntoIterator<Item = (Monomial, RingElement)>) -> Self {
        let mut x = Self::zero(alg);
        for (m, c) in terms {
            push_reduced(alg, &mut x.terms, m, c);
        }
        x
    }

    pub fn vertex(alg: &Algebra, v: VertexId) -> Self {
        Self::monomial(alg, Monomial::vertex(v), alg.ring().one())
    }

    pub fn edge(alg: &Algebra, e: EdgeId) -> Self {
        Self::monomial(alg, Monomial::real(Path::edge(alg.graph(), e)), alg.ring().one())
    }

    pub fn ghost(alg: &Algebra, e: EdgeId) -> Self {
        Self::monomial(alg, Monomial::ghost(Path::edge(alg.graph(), e)), alg.ring().one())
    }

    /// Looks up a vertex or edge by name; `f*` names a ghost edge.
    pub fn generator(alg: &Algebra, name: &str) -> Result<Self> {
        let g = alg.graph();
        if let Some(base) = name.strip_suffix('*') {
            return g.edge_id(base).map(|e| Self::ghost(alg, e)).ok_or_else(|| Error::UnknownGenerator(name.into()));
        }
        if let Some(v) = g.vertex_id(name) {
            return Ok(Self::vertex(alg, v));
        }
        g.edge_id(name).map(|e| Self::edge(alg, e)).ok_or_else(|| Error::UnknownGenerator(name.into()))
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<Monomial, RingElement> {
        &self.terms
    }

    pub fn coefficient(&self, m: &Monomial) -> RingElement {
        self.terms.get(m).copied().unwrap_or_else(|| self.alg.ring().zero())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.alg.check_same(&other.alg)?;
        let ring = self.alg.ring();
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            let slot = terms.entry(m.clone()).or_insert_with(|| ring.zero());
            *slot = ring.add(*slot, c);
            if ring.is_zero(*slot) {
                terms.remove(m);
            }
        }
        Ok(AlgebraElement { alg: Arc::clone(&self.alg), terms })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.checked_add(other).expect("elements of different algebras")
    }

    pub fn neg(&self) -> Self {
        let ring = self.alg.ring();
        AlgebraElement {
            alg: Arc::clone(&self.alg),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), ring.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.alg.check_same(&other.alg)?;
        let ring = self.alg.ring();
        let mut terms = BTreeMap::new();
        for (a, &c) in &self.terms {
            for (b, &d) in &other.terms {
                if let Some(m) = a.product(b) {
                    push_reduced(&self.alg, &mut terms, m, ring.mul(c, d));
                }
            }
        }
        Ok(AlgebraElement { alg: Arc::clone(&self.alg), terms })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.checked_mul(other).expect("elements of different algebras")
    }

    /// `r · x`.
    pub fn scale(&self, r: RingElement) -> Self {
        let ring = self.alg.ring();
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.clone(), ring.mul(r, c)))
            .filter(|(_, c)| !ring.is_zero(*c))
            .collect();
        AlgebraElement { alg: Arc::clone(&self.alg), terms }
    }

    /// `x · r`.
    pub fn scale_right(&self, r: RingElement) -> Self {
        let ring = self.alg.ring();
        let terms = self
            .terms
            .iter()
            .map(|(m, &c)| (m.clone(), ring.mul(c, r)))
            .filter(|(_, c)| !ring.is_zero(*c))
            .collect();
        AlgebraElement { alg: Arc::clone(&self.alg), terms }
    }

    /// `(Σ r αβ*)* = Σ r βα*`.
    pub fn involution(&self) -> Self {
        AlgebraElement {
            alg: Arc::clone(&self.alg),
            terms: self.terms.iter().map(|(m, &c)| (m.star(), c)).collect(),
        }
    }

    /// The degree when `self` is nonzero and homogeneous.
    pub fn degree(&self) -> Option<i64> {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        let d = degrees.next()?;
        degrees.all(|e| e == d).then_some(d)
    }

    /// Zero counts as homogeneous of every degree.
    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.degree().is_some()
    }

    pub fn homogeneous_components(&self) -> BTreeMap<i64, AlgebraElement> {
        let mut out: BTreeMap<i64, AlgebraElement> = BTreeMap::new();
        for (m, &c) in &self.terms {
            out.entry(m.degree())
                .or_insert_with(|| AlgebraElement::zero(&self.alg))
                .terms
                .insert(m.clone(), c);
        }
        out
    }

    /// Least `n` with `self ∈ D_n`.
    pub fn filtration_level(&self) -> Result<usize> {
        if self.terms.keys().any(|m| m.degree() != 0) {
            return Err(Error::NotDegreeZero);
        }
        Ok(self.max_len())
    }

    /// Largest real or ghost length in the support.
    pub fn max_len(&self) -> usize {
        self.terms.keys().map(|m| m.alpha.len().max(m.beta.len())).max().unwrap_or(0)
    }

    pub fn to_file(&self) -> ElementFile {
        let g = self.alg.graph();
        let rec = |p: &Path| {
            if p.is_vertex() {
                PathRecord::Vertex { vertex: g.vertex_name(p.source()).to_string() }
            } else {
                PathRecord::Edges(p.edges().iter().map(|&e| g.edge_name(e).to_string()).collect())
            }
        };
        self.terms
            .iter()
            .map(|(m, &c)| TermRecord { coeff: self.alg.ring().encode(c), alpha: rec(&m.alpha), beta: rec(&m.beta) })
            .collect()
    }

    pub fn from_file(alg: &Algebra, file: &ElementFile) -> Result<Self> {
        let g = alg.graph();
        let path = |r: &PathRecord| -> Result<Path> {
            match r {
                PathRecord::Vertex { vertex } => g
                    .vertex_id(vertex)
                    .map(Path::vertex)
                    .ok_or_else(|| Error::UnknownGenerator(vertex.clone())),
                PathRecord::Edges(names) => {
                    let names: Vec<&str> = names.iter().map(String::as_str).collect();
                    Path::from_names(g, &names)
                }
            }
        };
        let mut terms = Vec::with_capacity(file.len());
        for t in file {
            let c = alg.ring().decode(&t.coeff)?;
            let m = Monomial::new(path(&t.alpha)?, path(&t.beta)?)?;
            terms.push((m, c));
        }
        Ok(Self::from_terms(alg, terms))
    }

    /// A random homogeneous element of degree `d`: up to `max_terms` distinct
    /// reduced monomials with both lengths at most `max_len` and nonzero
    /// coefficients.
    pub fn random_homogeneous(
        alg: &Algebra,
        rng: &mut impl rand::Rng,
        d: i64,
        max_len: usize,
        max_terms: usize,
    ) -> Self {
        let pool = alg.reduced_monomials_of_degree(d, max_len);
        Self::random_from_pool(alg, rng, &pool, max_terms)
    }

    pub(crate) fn random_from_pool(
        alg: &Algebra,
        rng: &mut impl rand::Rng,
        pool: &[Monomial],
        max_terms: usize,
    ) -> Self {
        let ring = alg.ring();
        let nonzero: Vec<RingElement> = ring.elements().filter(|&c| !ring.is_zero(c)).collect();
        if pool.is_empty() || nonzero.is_empty() {
            return Self::zero(alg);
        }
        let k = rng.gen_range(1..=max_terms.max(1).min(pool.len()));
        let chosen: Vec<&Monomial> = pool.choose_multiple(rng, k).collect();
        let terms = chosen.into_iter().map(|m| (m.clone(), *nonzero.choose(rng).expect("nonempty")));
        Self::from_terms(alg, terms)
    }
}

/// Element file: a list of terms.
pub type ElementFile = Vec<TermRecord>;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TermRecord {
    pub coeff: Value,
    pub alpha: PathRecord,
    pub beta: PathRecord,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PathRecord {
    Vertex { vertex: String },
    Edges(Vec<String>),
}
