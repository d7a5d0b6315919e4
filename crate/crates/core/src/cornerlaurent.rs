//! Corner skew Laurent polynomial rings `R[t₊, t₋; α]` for a corner
//! isomorphism `α: R -> eRe`, with relations
//! `t₋t₊ = 1`, `t₊t₋ = e`, `t₊r = α(r)t₊` and `rt₋ = t₋α(r)`.
//!
//! Elements are kept in the form `Σ t₋^i a_{-i} + a_0 + Σ a_i t₊^i` with
//! `a_i ∈ R e_i` and `a_{-i} ∈ e_i R`, where `e_i = t₊^i t₋^i = α^i(1)`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::coeffring::{solve_linear_system, LinearSystem, LinearTerm, Ring, RingElement, RingSpec};
use crate::error::{Error, Result};
use crate::gradedstruct::GradedRingOracle;
use crate::regularity::{Method, Outcome, WitnessCertificate};

/// A ring `R`, an idempotent `e` and a ring isomorphism `α: R -> eRe`.
#[derive(Debug)]
pub struct CornerData {
    ring: Ring,
    e: RingElement,
    alpha: Vec<RingElement>,
    alpha_inv: BTreeMap<RingElement, RingElement>,
}

impl CornerData {
    /// `alpha[r]` is the image of the element with index `r`.
    pub fn new(ring: Ring, e: RingElement, alpha: Vec<RingElement>) -> Result<Self> {
        if !ring.is_unital() {
            return Err(Error::BadRingSpec("a corner ring needs an identity".into()));
        }
        if ring.mul(e, e) != e {
            return Err(Error::NotIdempotent(ring.format(e)));
        }
        if alpha.len() != ring.order() {
            return Err(Error::NotCornerIso(format!("α has {} entries, the ring {}", alpha.len(), ring.order())));
        }
        let a = |r: RingElement| alpha[r.index()];
        if a(ring.one()) != e {
            return Err(Error::NotCornerIso(format!("α(1) = {} is not e", ring.format(a(ring.one())))));
        }
        for x in ring.elements() {
            if ring.mul3(e, a(x), e) != a(x) {
                return Err(Error::NotCornerIso(format!("α({}) is not in eRe", ring.format(x))));
            }
            for y in ring.elements() {
                if a(ring.add(x, y)) != ring.add(a(x), a(y)) {
                    return Err(Error::NotCornerIso(format!("α is not additive at ({}, {})", ring.format(x), ring.format(y))));
                }
                if a(ring.mul(x, y)) != ring.mul(a(x), a(y)) {
                    return Err(Error::NotCornerIso(format!(
                        "α is not multiplicative at ({}, {})",
                        ring.format(x),
                        ring.format(y)
                    )));
                }
            }
        }
        let mut alpha_inv = BTreeMap::new();
        for x in ring.elements() {
            if let Some(prev) = alpha_inv.insert(a(x), x) {
                return Err(Error::NotCornerIso(format!(
                    "α({}) = α({})",
                    ring.format(prev),
                    ring.format(x)
                )));
            }
        }
        let corner = ring.elements().filter(|&x| ring.mul3(e, x, e) == x).count();
        if corner != alpha_inv.len() {
            return Err(Error::NotCornerIso(format!("α is not onto eRe ({} of {corner} hit)", alpha_inv.len())));
        }
        Ok(CornerData { ring, e, alpha, alpha_inv })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn e(&self) -> RingElement {
        self.e
    }

    pub fn alpha(&self, r: RingElement) -> RingElement {
        self.alpha[r.index()]
    }

    fn alpha_pow(&self, i: u64, mut r: RingElement) -> RingElement {
        for _ in 0..i {
            r = self.alpha(r);
        }
        r
    }

    /// `β(c) = α⁻¹(ece) = t₋ c t₊`.
    fn beta_pow(&self, i: u64, mut c: RingElement) -> RingElement {
        for _ in 0..i {
            c = self.alpha_inv[&self.ring.mul3(self.e, c, self.e)];
        }
        c
    }

    /// `e_i = t₊^i t₋^i`.
    pub fn e_pow(&self, i: u64) -> RingElement {
        self.alpha_pow(i, self.ring.one())
    }
}

/// Corner spec file: `{"ring": ..., "e": ..., "alpha": {"<elt>": <image>}}`.
/// Keys are element encodings written as JSON text, e.g. `"1"` or `"[1,0]"`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CornerFile {
    pub ring: RingSpec,
    pub e: Value,
    pub alpha: BTreeMap<String, Value>,
}

impl CornerFile {
    pub fn into_algebra(self) -> Result<CslAlgebra> {
        let ring = Ring::new(self.ring)?;
        let e = ring.decode(&self.e)?;
        let mut alpha = vec![None; ring.order()];
        for (k, v) in &self.alpha {
            let key: Value = serde_json::from_str(k).map_err(|err| Error::Parse(format!("alpha key {k}: {err}")))?;
            let v = match v {
                Value::String(s) => serde_json::from_str(s).map_err(|err| Error::Parse(format!("alpha value {s}: {err}")))?,
                other => other.clone(),
            };
            alpha[ring.decode(&key)?.index()] = Some(ring.decode(&v)?);
        }
        let alpha = alpha
            .into_iter()
            .enumerate()
            .map(|(i, a)| a.ok_or_else(|| Error::Parse(format!("alpha misses {}", ring.format(RingElement(i as u32))))))
            .collect::<Result<Vec<_>>>()?;
        csl_make(CornerData::new(ring, e, alpha)?)
    }
}

#[derive(Clone, Debug)]
pub struct CslAlgebra(Arc<CornerData>);

pub fn csl_make(data: CornerData) -> Result<CslAlgebra> {
    Ok(CslAlgebra(Arc::new(data)))
}

impl CslAlgebra {
    pub fn data(&self) -> &CornerData {
        &self.0
    }

    pub fn ring(&self) -> &Ring {
        &self.0.ring
    }

    pub fn name(&self) -> String {
        let d = &self.0;
        let id = d.ring.elements().all(|r| d.alpha(r) == r);
        let alpha = if id { "id".to_string() } else { "α".to_string() };
        format!("{}[t+,t-;{alpha}] (e = {})", d.ring.name(), d.ring.format(d.e))
    }

    /// `a t₊^d` for `d >= 0`, `t₋^{-d} a` for `d < 0`.
    pub fn term(&self, d: i64, a: RingElement) -> CslElement {
        CslElement::from_terms(self, [(d, a)])
    }

    pub fn one(&self) -> CslElement {
        self.term(0, self.ring().one())
    }

    pub fn zero(&self) -> CslElement {
        CslElement { alg: self.clone(), terms: BTreeMap::new() }
    }

    pub fn t_plus(&self) -> CslElement {
        self.term(1, self.ring().one())
    }

    pub fn t_minus(&self) -> CslElement {
        self.term(-1, self.ring().one())
    }

    fn same(&self, other: &CslAlgebra) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }

    fn normalize(&self, d: i64, a: RingElement) -> RingElement {
        let r = self.ring();
        let ed = self.0.e_pow(d.unsigned_abs());
        if d >= 0 {
            r.mul(a, ed)
        } else {
            r.mul(ed, a)
        }
    }

    /// Product of two canonical terms.
    fn term_product(&self, (i, a): (i64, RingElement), (j, b): (i64, RingElement)) -> (i64, RingElement) {
        let d = &self.0;
        let r = &d.ring;
        match (i >= 0, j >= 0) {
            // (a t₊^i)(b t₊^j) = a α^i(b) t₊^{i+j}
            (true, true) => (i + j, r.mul(a, d.alpha_pow(i as u64, b))),
            // (t₋^i a)(t₋^j b) = t₋^{i+j} α^j(a) b
            (false, false) => (i + j, r.mul(d.alpha_pow(j.unsigned_abs(), a), b)),
            (true, false) => {
                let (p, q) = (i as u64, j.unsigned_abs());
                if p >= q {
                    // t₊^p t₋^q = t₊^{p-q} e_q
                    (i + j, r.mul(a, d.alpha_pow(p - q, r.mul(d.e_pow(q), b))))
                } else {
                    // t₊^p t₋^q = e_p t₋^{q-p}
                    (i + j, r.mul(d.alpha_pow(q - p, r.mul(a, d.e_pow(p))), b))
                }
            }
            (false, true) => {
                // t₋^p c t₊^q with c = ab, and t₋ c t₊ = β(c)
                let (p, q) = (i.unsigned_abs(), j as u64);
                let m = p.min(q);
                (i + j, d.beta_pow(m, r.mul(a, b)))
            }
        }
    }
}

#[derive(Clone)]
pub struct CslElement {
    alg: CslAlgebra,
    terms: BTreeMap<i64, RingElement>,
}

impl PartialEq for CslElement {
    fn eq(&self, other: &Self) -> bool {
        self.alg.same(&other.alg) && self.terms == other.terms
    }
}

impl Eq for CslElement {}

impl fmt::Debug for CslElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for CslElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let r = self.alg.ring();
        let one = r.one();
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(&d, &a)| {
                let c = if a == one && d != 0 { String::new() } else { r.format(a) };
                let pow = |k: u64| if k == 1 { String::new() } else { format!("^{k}") };
                match d {
                    0 => c,
                    d if d > 0 => format!("{c}t+{}", pow(d as u64)),
                    d if c.is_empty() || c.starts_with('(') => format!("t-{}{c}", pow(d.unsigned_abs())),
                    d => format!("t-{}({c})", pow(d.unsigned_abs())),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

impl CslElement {
    pub fn from_terms(alg: &CslAlgebra, terms: impl IntoIterator<Item = (i64, RingElement)>) -> Self {
        let r = alg.ring();
        let mut out: BTreeMap<i64, RingElement> = BTreeMap::new();
        for (d, a) in terms {
            let a = alg.normalize(d, a);
            let slot = out.entry(d).or_insert(r.zero());
            *slot = r.add(*slot, a);
        }
        out.retain(|_, a| !r.is_zero(*a));
        CslElement { alg: alg.clone(), terms: out }
    }

    pub fn algebra(&self) -> &CslAlgebra {
        &self.alg
    }

    pub fn terms(&self) -> &BTreeMap<i64, RingElement> {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn degree(&self) -> Option<i64> {
        let mut ds = self.terms.keys();
        let d = *ds.next()?;
        ds.next().is_none().then_some(d)
    }

    pub fn add(&self, other: &Self) -> Self {
        assert!(self.alg.same(&other.alg), "elements of different corner rings");
        CslElement::from_terms(&self.alg, self.terms.iter().chain(&other.terms).map(|(&d, &a)| (d, a)))
    }

    pub fn neg(&self) -> Self {
        let r = self.alg.ring();
        CslElement::from_terms(&self.alg, self.terms.iter().map(|(&d, &a)| (d, r.neg(a))))
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        csl_multiply(self, other).expect("elements of the same corner ring")
    }

    /// Left multiplication by an integer multiple of 1.
    pub fn times(&self, k: i64) -> Self {
        let r = self.alg.ring();
        let c = r.from_int(k);
        CslElement::from_terms(&self.alg, self.terms.iter().map(|(&d, &a)| (d, r.mul(c, a))))
    }
}

pub fn csl_multiply(x: &CslElement, y: &CslElement) -> Result<CslElement> {
    if !x.alg.same(&y.alg) {
        return Err(Error::SpecMismatch);
    }
    let alg = &x.alg;
    let mut out = Vec::with_capacity(x.terms.len() * y.terms.len());
    for (&i, &a) in &x.terms {
        for (&j, &b) in &y.terms {
            out.push(alg.term_product((i, a), (j, b)));
        }
    }
    Ok(CslElement::from_terms(alg, out))
}

/// `ε_n = e_n` for `n > 0` and `ε_n = 1` for `n <= 0`, checked against
/// `ε_n s = s` on `S_n` and `s ε_n = s` on `S_{-n}`.
pub fn csl_epsilon(alg: &CslAlgebra, n: i64) -> Result<CslElement> {
    let eps = if n > 0 { alg.term(0, alg.data().e_pow(n as u64)) } else { alg.one() };
    for s in alg.spanning_set(n, 0) {
        if eps.mul(&s) != s {
            return Err(Error::AssertionFailure(format!("ε_{n} · {s} != {s}")));
        }
    }
    for s in alg.spanning_set(-n, 0) {
        if s.mul(&eps) != s {
            return Err(Error::AssertionFailure(format!("{s} · ε_{n} != {s}")));
        }
    }
    Ok(eps)
}

pub type CslCertificate = WitnessCertificate<CslElement>;

/// Solves `x b x = x` for `b ∈ S_{-d}`. Every component is `R` times one
/// monomial, so the search is a single equation over `R` and both outcomes
/// are exact.
pub fn csl_graded_witness(x: &CslElement) -> Result<CslCertificate> {
    let alg = x.algebra();
    let r = alg.ring();
    if x.is_zero() {
        return Ok(WitnessCertificate {
            element: x.clone(),
            degree: 0,
            method: Method::Oracle,
            outcome: Outcome::Witness(x.clone()),
            bounds: "exact".into(),
            verified: true,
        });
    }
    let d = x.degree().ok_or(Error::NotHomogeneous)?;
    let a = x.terms[&d];
    let ed = alg.data().e_pow(d.unsigned_abs());
    // x b x = x reduces to a c a e_d = a (d >= 0) or a c e_{|d|} a = a (d < 0)
    let term = if d >= 0 {
        LinearTerm::sandwich(a, 0, r.mul(a, ed))
    } else {
        LinearTerm::sandwich(a, 0, r.mul(ed, a))
    };
    let mut sys = LinearSystem::new(1);
    sys.push(vec![term], a);
    let outcome = match solve_linear_system(r, &sys)? {
        Some(c) => {
            let b = alg.term(-d, c[0]);
            if x.mul(&b).mul(x) != *x {
                return Err(Error::InternalVerificationFailure(format!("{x} · {b} · {x} != {x}")));
            }
            Outcome::Witness(b)
        }
        None => Outcome::Absent { exact: true, searched: format!("all of S_{}", -d) },
    };
    Ok(WitnessCertificate { element: x.clone(), degree: d, method: Method::Oracle, outcome, bounds: "exact".into(), verified: true })
}

impl GradedRingOracle for CslAlgebra {
    type Elem = CslElement;
    type Key = (i64, usize);

    fn name(&self) -> String {
        CslAlgebra::name(self)
    }

    /// Integers modulo the additive exponent of `R`, which act centrally.
    fn scalars(&self) -> Ring {
        let r = self.ring();
        let m = r.additive_exponent().unwrap_or_else(|| {
            (1..=r.order() as u64)
                .find(|&k| r.elements().all(|x| r.is_zero(r.mul(r.from_int(k as i64), x))))
                .expect("the exponent divides the order")
        });
        Ring::modular(m)
    }

    /// `S_d = R t₊^d` (or `t₋^{-d} R`): one element per distinct normalized
    /// coefficient, independent of the bound.
    fn spanning_set(&self, d: i64, _bound: usize) -> Vec<CslElement> {
        let mut out: Vec<CslElement> = Vec::new();
        for a in self.ring().elements() {
            let s = self.term(d, a);
            if !s.is_zero() && !out.contains(&s) {
                out.push(s);
            }
        }
        out
    }

    fn is_complete(&self, _d: i64, _bound: usize) -> bool {
        true
    }

    fn degree_support(&self) -> Option<i64> {
        None
    }

    fn zero(&self) -> CslElement {
        CslAlgebra::zero(self)
    }

    fn add(&self, a: &CslElement, b: &CslElement) -> CslElement {
        a.add(b)
    }

    fn mul(&self, a: &CslElement, b: &CslElement) -> CslElement {
        a.mul(b)
    }

    fn neg(&self, a: &CslElement) -> CslElement {
        a.neg()
    }

    fn scale(&self, k: RingElement, a: &CslElement) -> CslElement {
        a.times(k.0 as i64)
    }

    fn identity(&self) -> Option<CslElement> {
        Some(self.one())
    }

    fn coordinates(&self, a: &CslElement) -> Option<BTreeMap<(i64, usize), RingElement>> {
        let r = self.ring();
        let z = self.scalars();
        let mut out = BTreeMap::new();
        for (&d, &c) in &a.terms {
            for (i, v) in r.additive_coordinates(c)?.into_iter().enumerate() {
                if v != 0 {
                    out.insert((d, i), z.from_int(v as i64));
                }
            }
        }
        Some(out)
    }

    fn epsilon_candidate(&self, d: i64) -> Option<CslElement> {
        csl_epsilon(self, d).ok()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffring::is_vnr;
    use crate::fixtures;
    use crate::gradedstruct::{check_strong_z, classify, is_semiprime_graded, Property, Verdict};

    fn identity(ring: Ring) -> CslAlgebra {
        fixtures::laurent(ring)
    }

    fn swap() -> CslAlgebra {
        fixtures::swap_laurent()
    }

    #[test]
    fn defining_relations() {
        let alg = identity(fixtures::z(2));
        assert_eq!(alg.t_minus().mul(&alg.t_plus()), alg.one());
        assert_eq!(alg.t_plus().mul(&alg.t_minus()), alg.one());
        assert_eq!(alg.t_plus().to_string(), "t+");
        assert_eq!(alg.t_minus().mul(&alg.t_minus()).to_string(), "t-^2");
    }

    #[test]
    fn swap_twists_coefficients() {
        let alg = swap();
        let r = alg.ring().clone();
        let e10 = r.join(&[RingElement(1), RingElement(0)]);
        let e01 = r.join(&[RingElement(0), RingElement(1)]);
        let lhs = alg.t_plus().mul(&alg.term(0, e10));
        assert_eq!(lhs, alg.term(1, e01));
        assert_eq!(lhs.to_string(), "(0,1)t+");
        let rhs = alg.term(0, e10).mul(&alg.t_minus());
        assert_eq!(rhs, alg.term(-1, e01));
    }

    #[test]
    fn corner_validation() {
        let z4 = fixtures::z(4);
        let id: Vec<RingElement> = z4.elements().collect();
        assert_eq!(CornerData::new(z4.clone(), RingElement(2), id.clone()).unwrap_err(), Error::NotIdempotent("2".into()));
        let double: Vec<RingElement> = z4.elements().map(|x| z4.add(x, x)).collect();
        assert!(matches!(CornerData::new(z4.clone(), z4.one(), double), Err(Error::NotCornerIso(_))));
        let z6 = fixtures::z(6);
        // e = 3 is idempotent but eRe = {0, 3} is smaller than Z/6
        let to_corner: Vec<RingElement> = z6.elements().map(|x| z6.mul(x, RingElement(3))).collect();
        assert!(matches!(CornerData::new(z6, RingElement(3), to_corner), Err(Error::NotCornerIso(_))));
    }

    #[test]
    fn corner_file_roundtrip() {
        let text = r#"{"ring": {"kind": "product", "factors": [{"kind": "mod", "n": 2}, {"kind": "mod", "n": 2}]},
            "e": [1, 1],
            "alpha": {"[0,0]": [0,0], "[1,0]": [0,1], "[0,1]": [1,0], "[1,1]": "[1,1]"}}"#;
        let file: CornerFile = serde_json::from_str(text).unwrap();
        let alg = file.into_algebra().unwrap();
        let r = alg.ring().clone();
        let e10 = r.join(&[RingElement(1), RingElement(0)]);
        assert_eq!(alg.data().alpha(e10), r.join(&[RingElement(0), RingElement(1)]));
    }

    #[test]
    fn witnesses_match_regularity_of_r() {
        for alg in [identity(fixtures::z(2)), identity(fixtures::z(6)), swap(), identity(fixtures::z(4))] {
            let vnr = is_vnr(alg.ring()).is_regular();
            let mut all = true;
            for d in -3..=3 {
                for s in alg.spanning_set(d, 0) {
                    all &= csl_graded_witness(&s).unwrap().witness().is_some();
                }
            }
            assert_eq!(all, vnr, "{}", alg.name());
        }
        let z6 = identity(fixtures::z(6));
        let cert = csl_graded_witness(&z6.term(1, RingElement(2))).unwrap();
        let b = cert.witness().unwrap();
        assert_eq!(b.degree(), Some(-1));
        let z4 = identity(fixtures::z(4));
        assert!(csl_graded_witness(&z4.term(1, RingElement(2))).unwrap().is_exact_absence());
        let z2 = identity(fixtures::z(2));
        assert_eq!(csl_graded_witness(&z2.t_plus()).unwrap().witness(), Some(&z2.t_minus()));
    }

    #[test]
    fn laurent_ring_is_strong() {
        let alg = identity(fixtures::z(2));
        assert_eq!(check_strong_z(&alg, 1).unwrap(), Verdict::HoldsExactly);
        let report = classify(&swap(), 2, 1).unwrap();
        assert_eq!(report.chain_violation(), None);
        assert!(report.verdict(Property::Strong).holds());
        let sw = swap();
        for n in -3..=3 {
            assert_eq!(csl_epsilon(&sw, n).unwrap(), sw.one());
        }
        assert!(is_semiprime_graded(&alg, 3, 0).unwrap().holds());
        assert!(!is_semiprime_graded(&identity(fixtures::z(4)), 1, 0).unwrap().holds());
    }

    #[test]
    fn idempotent_chain() {
        let alg = swap();
        let d = alg.data();
        for i in 0..=5 {
            let ei = d.e_pow(i);
            assert_eq!(alg.ring().mul(ei, ei), ei);
            assert_eq!(alg.ring().mul(d.e_pow(i + 1), ei), d.e_pow(i + 1));
        }
    }
}
