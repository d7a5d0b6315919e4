//! Structural properties of Z-graded rings: symmetric, nearly epsilon-strong,
//! epsilon-strong and strong gradings, checked against a [`GradedRingOracle`]
//! that enumerates bounded spanning sets of each homogeneous component.

mod oracles;
mod pathprops;

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::coeffring::{check_cap, search_cap, solve_linear_system, LinearSystem, LinearTerm, Ring, RingElement};
use crate::error::Result;

pub use oracles::{MatrixGradingOracle, PathAlgebraOracle, TrivialGradingOracle, PolynomialOracle};
pub use pathprops::{
    epsilon_element, homogeneous_local_units, jacobson_radical_algebra, LocalUnitsReport, RadicalReport,
};

/// Black-box access to a Z-graded ring `S = ⊕ S_d`.
///
/// `spanning_set(d, bound)` spans (over `scalars`) a subspace of `S_d` that
/// grows with `bound`. The default solvers assume `scale` is central.
pub trait GradedRingOracle: Sync {
    type Elem: Clone + PartialEq + fmt::Display + Send + Sync;
    type Key: Ord + Clone;

    fn name(&self) -> String;
    fn scalars(&self) -> Ring;
    fn spanning_set(&self, d: i64, bound: usize) -> Vec<Self::Elem>;
    /// Whether `spanning_set(d, bound)` spans all of `S_d`.
    fn is_complete(&self, d: i64, bound: usize) -> bool;
    /// Some `k` with `S_d = 0` for `|d| > k`, if known.
    fn degree_support(&self) -> Option<i64>;

    fn zero(&self) -> Self::Elem;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn scale(&self, r: RingElement, a: &Self::Elem) -> Self::Elem;
    fn identity(&self) -> Option<Self::Elem>;

    fn is_zero(&self, a: &Self::Elem) -> bool {
        *a == self.zero()
    }

    /// Coordinates over `scalars`, when the oracle has a basis.
    fn coordinates(&self, a: &Self::Elem) -> Option<BTreeMap<Self::Key, RingElement>>;

    /// A known candidate for `ε_d`; checked, never trusted.
    fn epsilon_candidate(&self, _d: i64) -> Option<Self::Elem> {
        None
    }

    /// Factors `(a_i, b_i)` with `a_i ∈ S_d`, `b_i ∈ S_{-d}` and `Σ a_i b_i s = s`.
    fn left_unit_factors(&self, _s: &Self::Elem) -> Option<Vec<(Self::Elem, Self::Elem)>> {
        None
    }

    /// Factors `(b_i, a_i)` with `b_i ∈ S_{-d}`, `a_i ∈ S_d` and `s Σ b_i a_i = s`.
    fn right_unit_factors(&self, _s: &Self::Elem) -> Option<Vec<(Self::Elem, Self::Elem)>> {
        None
    }

    /// Extra facts to print with a classification, e.g. graph criteria.
    fn notes(&self) -> Vec<String> {
        Vec::new()
    }

    fn sum(&self, items: &[Self::Elem]) -> Self::Elem {
        items.iter().fold(self.zero(), |acc, x| self.add(&acc, x))
    }

    /// Scalars `z` with `Σ_j z_j g[b][j] = t[b]` for every block `b`; all
    /// blocks share the same unknowns.
    fn solve_blocks(&self, blocks: &[(Vec<Self::Elem>, Self::Elem)]) -> Result<Option<Vec<RingElement>>> {
        let ring = self.scalars();
        let k = blocks.first().map_or(0, |b| b.0.len());
        let coords = |x: &Self::Elem| self.coordinates(x);
        if let Some(sys) = (|| {
            let mut sys = LinearSystem::new(k);
            for (gens, target) in blocks {
                let mut rows: BTreeMap<Self::Key, Vec<LinearTerm>> = BTreeMap::new();
                for (j, g) in gens.iter().enumerate() {
                    for (key, c) in coords(g)? {
                        rows.entry(key).or_default().push(LinearTerm { left: None, var: j, right: Some(c) });
                    }
                }
                let mut rhs = coords(target)?;
                for (key, terms) in rows {
                    let r = rhs.remove(&key).unwrap_or(ring.zero());
                    sys.push(terms, r);
                }
                for (_, r) in rhs {
                    sys.push(Vec::new(), r);
                }
            }
            Some(sys)
        })() {
            return solve_linear_system(&ring, &sys);
        }
        // no basis: try every scalar vector
        let q = ring.order() as u128;
        check_cap(q.checked_pow(k as u32).unwrap_or(u128::MAX), search_cap())?;
        let elems: Vec<RingElement> = ring.elements().collect();
        let mut idx = vec![0usize; k];
        loop {
            let z: Vec<RingElement> = idx.iter().map(|&i| elems[i]).collect();
            let ok = blocks.iter().all(|(gens, t)| {
                let s = gens.iter().zip(&z).fold(self.zero(), |acc, (g, &c)| self.add(&acc, &self.scale(c, g)));
                s == *t
            });
            if ok {
                return Ok(Some(z));
            }
            let mut pos = 0;
            loop {
                if pos == k {
                    return Ok(None);
                }
                idx[pos] += 1;
                if idx[pos] < elems.len() {
                    break;
                }
                idx[pos] = 0;
                pos += 1;
            }
        }
    }

    fn combine(&self, gens: &[Self::Elem], z: &[RingElement]) -> Self::Elem {
        gens.iter().zip(z).fold(self.zero(), |acc, (g, &c)| self.add(&acc, &self.scale(c, g)))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "kebab-case")]
pub enum Verdict {
    HoldsExactly,
    /// No counterexample among spanning elements of size at most the bound.
    HoldsAtBound { bound: usize },
    /// `exact` is false when the failure might disappear at a larger bound.
    Fails { witness: String, exact: bool },
}

impl Verdict {
    pub fn holds(&self) -> bool {
        !matches!(self, Verdict::Fails { .. })
    }

    fn fail(witness: String, exact: bool) -> Self {
        Verdict::Fails { witness, exact }
    }

    /// Meet over degrees; exact only if every degree was exact and the
    /// checked range covers the support.
    fn combine(parts: &[Verdict], covered: bool, bound: usize) -> Verdict {
        if let Some(f) = parts.iter().find(|v| matches!(v, Verdict::Fails { exact: true, .. })) {
            return f.clone();
        }
        if let Some(f) = parts.iter().find(|v| !v.holds()) {
            return f.clone();
        }
        if covered && parts.iter().all(|v| *v == Verdict::HoldsExactly) {
            Verdict::HoldsExactly
        } else {
            Verdict::HoldsAtBound { bound }
        }
    }
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Verdict::HoldsExactly => write!(f, "holds-exactly"),
            Verdict::HoldsAtBound { bound } => write!(f, "holds-at-bound {bound}"),
            Verdict::Fails { witness, exact: true } => write!(f, "fails: {witness}"),
            Verdict::Fails { witness, exact: false } => write!(f, "fails-at-bound: {witness}"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Property {
    Strong,
    EpsilonStrong,
    NearlyEpsilonStrong,
    Symmetric,
}

impl Property {
    pub const ALL: [Property; 4] =
        [Property::Strong, Property::EpsilonStrong, Property::NearlyEpsilonStrong, Property::Symmetric];
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Property::Strong => "strong",
            Property::EpsilonStrong => "epsilon-strong",
            Property::NearlyEpsilonStrong => "nearly-epsilon-strong",
            Property::Symmetric => "symmetric",
        })
    }
}

/// One verdict per degree plus the overall verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PropertyReport {
    pub property: Property,
    pub per_degree: BTreeMap<i64, Verdict>,
    pub overall: Verdict,
}

fn degrees(bound: i64) -> impl Iterator<Item = i64> {
    -bound..=bound
}

fn covered<O: GradedRingOracle>(o: &O, degree_bound: usize) -> bool {
    o.degree_support().is_some_and(|k| k <= degree_bound as i64)
}

fn nonzero_products<O: GradedRingOracle>(o: &O, left: &[O::Elem], right: &[O::Elem]) -> Vec<O::Elem> {
    let mut out: Vec<O::Elem> = Vec::new();
    for a in left {
        for b in right {
            let p = o.mul(a, b);
            if !o.is_zero(&p) && !out.contains(&p) {
                out.push(p);
            }
        }
    }
    out
}

fn finish(property: Property, per_degree: BTreeMap<i64, Verdict>, covered: bool, bound: usize) -> PropertyReport {
    let parts: Vec<Verdict> = per_degree.values().cloned().collect();
    PropertyReport { property, overall: Verdict::combine(&parts, covered, bound), per_degree }
}

/// `S_d ⊆ S_d S_{-d} S_d` for `|d| <= degree_bound`.
pub fn check_symmetric<O: GradedRingOracle>(o: &O, degree_bound: usize, size_bound: usize) -> Result<PropertyReport> {
    let mut per = BTreeMap::new();
    for d in degrees(degree_bound as i64) {
        let sd = o.spanning_set(d, size_bound);
        let sm = o.spanning_set(-d, size_bound);
        let exact_pos = o.is_complete(d, size_bound);
        let exact_neg = exact_pos && o.is_complete(-d, size_bound);
        let mut verdict = if exact_pos { Verdict::HoldsExactly } else { Verdict::HoldsAtBound { bound: size_bound } };
        for s in &sd {
            if o.is_zero(s) {
                continue;
            }
            // s = Σ a_i b_i s is a sum of triple products
            if let Some(fs) = o.left_unit_factors(s) {
                let back = fs.iter().fold(o.zero(), |acc, (a, b)| o.add(&acc, &o.mul(a, &o.mul(b, s))));
                if back == *s {
                    continue;
                }
            }
            let all = nonzero_products(o, &nonzero_products(o, &sd, &sm), &sd);
            if o.solve_blocks(&[(all, s.clone())])?.is_none() {
                verdict = Verdict::fail(format!("{s} is not in S_{d} S_{} S_{d}", -d), exact_neg);
                break;
            }
        }
        per.insert(d, verdict);
    }
    Ok(finish(Property::Symmetric, per, covered(o, degree_bound), size_bound))
}

/// Strong grading: `1 ∈ S_1 S_{-1}` and `1 ∈ S_{-1} S_1`, which for a unital
/// Z-graded ring gives `S_i S_j = S_{i+j}` for all `i, j`. A positive answer
/// is exact; a negative one is exact when both spanning sets are complete.
pub fn check_strong_z<O: GradedRingOracle>(o: &O, size_bound: usize) -> Result<Verdict> {
    let Some(one) = o.identity() else {
        return Ok(Verdict::fail("no identity".into(), true));
    };
    for (a, b) in [(1, -1), (-1, 1)] {
        let mut found = false;
        for k in 1..=size_bound.max(1) {
            let gens = nonzero_products(o, &o.spanning_set(a, k), &o.spanning_set(b, k));
            if o.solve_blocks(&[(gens, one.clone())])?.is_some() {
                found = true;
                break;
            }
        }
        if !found {
            let exact = o.is_complete(a, size_bound) && o.is_complete(b, size_bound);
            return Ok(Verdict::fail(format!("1 is not in S_{a} S_{b}"), exact));
        }
    }
    Ok(Verdict::HoldsExactly)
}

/// Epsilon-strong grading: for each `d` some `ε_d ∈ S_d S_{-d}` with
/// `ε_d s = s` on `S_d` and `s ε_d = s` on `S_{-d}`. Returns the per-degree
/// report and the `ε_d` found.
pub fn check_epsilon_strong<O: GradedRingOracle>(
    o: &O,
    degree_bound: usize,
    size_bound: usize,
) -> Result<(PropertyReport, BTreeMap<i64, O::Elem>)> {
    let mut per = BTreeMap::new();
    let mut table = BTreeMap::new();
    for d in degrees(degree_bound as i64) {
        let sd = o.spanning_set(d, size_bound);
        let sm = o.spanning_set(-d, size_bound);
        let exact = o.is_complete(d, size_bound) && o.is_complete(-d, size_bound);
        let fixes = |e: &O::Elem| sd.iter().all(|s| o.mul(e, s) == *s) && sm.iter().all(|s| o.mul(s, e) == *s);
        if let Some(e) = o.epsilon_candidate(d).filter(|e| fixes(e)) {
            per.insert(d, if exact { Verdict::HoldsExactly } else { Verdict::HoldsAtBound { bound: size_bound } });
            table.insert(d, e);
            continue;
        }
        let gens = nonzero_products(o, &sd, &sm);
        let mut blocks = Vec::new();
        for s in &sd {
            blocks.push((gens.iter().map(|g| o.mul(g, s)).collect::<Vec<_>>(), s.clone()));
        }
        for s in &sm {
            blocks.push((gens.iter().map(|g| o.mul(s, g)).collect::<Vec<_>>(), s.clone()));
        }
        let verdict = if blocks.is_empty() {
            table.insert(d, o.zero());
            if exact { Verdict::HoldsExactly } else { Verdict::HoldsAtBound { bound: size_bound } }
        } else {
            match o.solve_blocks(&blocks)? {
                Some(z) => {
                    let e = o.combine(&gens, &z);
                    debug_assert!(fixes(&e));
                    table.insert(d, e);
                    if exact { Verdict::HoldsExactly } else { Verdict::HoldsAtBound { bound: size_bound } }
                }
                None => Verdict::fail(
                    format!("no ε in S_{d} S_{} fixes S_{d} on the left and S_{} on the right", -d, -d),
                    exact,
                ),
            }
        };
        per.insert(d, verdict);
    }
    Ok((finish(Property::EpsilonStrong, per, covered(o, degree_bound), size_bound), table))
}

/// Nearly epsilon-strong grading, checked on each spanning element `s` of
/// `S_d`: some `ε ∈ S_d S_{-d}` with `ε s = s` and `ε' ∈ S_{-d} S_d` with
/// `s ε' = s`. Arbitrary elements of `S_d` are not enumerated, so a positive
/// answer is always at the bound.
pub fn check_nearly_epsilon<O: GradedRingOracle>(
    o: &O,
    degree_bound: usize,
    size_bound: usize,
) -> Result<PropertyReport> {
    let mut per = BTreeMap::new();
    for d in degrees(degree_bound as i64) {
        let sd = o.spanning_set(d, size_bound);
        let sm = o.spanning_set(-d, size_bound);
        let exact = o.is_complete(d, size_bound) && o.is_complete(-d, size_bound);
        let mut verdict = Verdict::HoldsAtBound { bound: size_bound };
        for s in &sd {
            let left = match o.left_unit_factors(s) {
                Some(fs) if o.mul(&fs.iter().fold(o.zero(), |acc, (a, b)| o.add(&acc, &o.mul(a, b))), s) == *s => true,
                _ => {
                    let gens = nonzero_products(o, &sd, &sm);
                    o.solve_blocks(&[(gens.iter().map(|g| o.mul(g, s)).collect(), s.clone())])?.is_some()
                }
            };
            let right = match o.right_unit_factors(s) {
                Some(fs) if o.mul(s, &fs.iter().fold(o.zero(), |acc, (b, a)| o.add(&acc, &o.mul(b, a)))) == *s => true,
                _ => {
                    let gens = nonzero_products(o, &sm, &sd);
                    o.solve_blocks(&[(gens.iter().map(|g| o.mul(s, g)).collect(), s.clone())])?.is_some()
                }
            };
            if !left {
                verdict = Verdict::fail(format!("no ε in S_{d} S_{} with ε·{s} = {s}", -d), exact);
                break;
            }
            if !right {
                verdict = Verdict::fail(format!("no ε' in S_{} S_{d} with {s}·ε' = {s}", -d), exact);
                break;
            }
        }
        per.insert(d, verdict);
    }
    Ok(finish(Property::NearlyEpsilonStrong, per, false, size_bound))
}

/// Looks for a nonzero homogeneous `x = c·s` with `x m x = 0` for every
/// spanning element `m`. Finding one shows the ring is not semiprime when the
/// spanning sets are complete.
pub fn is_semiprime_graded<O: GradedRingOracle>(o: &O, degree_bound: usize, size_bound: usize) -> Result<Verdict> {
    let ring = o.scalars();
    let ms: Vec<O::Elem> = degrees(degree_bound as i64).flat_map(|d| o.spanning_set(d, size_bound)).collect();
    let complete = covered(o, degree_bound) && degrees(degree_bound as i64).all(|d| o.is_complete(d, size_bound));
    for s in &ms {
        for c in ring.elements() {
            let x = o.scale(c, s);
            if o.is_zero(&x) {
                continue;
            }
            if ms.iter().all(|m| o.is_zero(&o.mul(&o.mul(&x, m), &x))) {
                return Ok(Verdict::fail(format!("x = {x} is nonzero with x S x = 0"), complete));
            }
        }
    }
    Ok(if complete { Verdict::HoldsExactly } else { Verdict::HoldsAtBound { bound: size_bound } })
}

/// All four properties, the `ε` table and any oracle notes.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub ring: String,
    pub degree_bound: usize,
    pub size_bound: usize,
    pub properties: Vec<PropertyReport>,
    pub epsilon: BTreeMap<i64, String>,
    pub notes: Vec<String>,
}

impl ClassificationReport {
    pub fn verdict(&self, p: Property) -> &Verdict {
        &self.properties.iter().find(|r| r.property == p).expect("all properties are reported").overall
    }

    /// The implications strong ⇒ epsilon-strong ⇒ nearly epsilon-strong ⇒
    /// symmetric; returns the first one the verdicts contradict.
    pub fn chain_violation(&self) -> Option<String> {
        Property::ALL.windows(2).find_map(|w| {
            (self.verdict(w[0]).holds() && !self.verdict(w[1]).holds()).then(|| format!("{} holds but {} fails", w[0], w[1]))
        })
    }
}

impl fmt::Display for ClassificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring: {}", self.ring)?;
        writeln!(f, "bounds: degree={} size={}", self.degree_bound, self.size_bound)?;
        for r in &self.properties {
            for (d, v) in &r.per_degree {
                writeln!(f, "{} d={d}: {v}", r.property)?;
            }
            writeln!(f, "{}: {}", r.property, r.overall)?;
        }
        for (d, e) in &self.epsilon {
            writeln!(f, "epsilon[{d}] = {e}")?;
        }
        for n in &self.notes {
            writeln!(f, "note: {n}")?;
        }
        Ok(())
    }
}

pub fn classify<O: GradedRingOracle>(o: &O, degree_bound: usize, size_bound: usize) -> Result<ClassificationReport> {
    let strong = check_strong_z(o, size_bound)?;
    let strong = PropertyReport { property: Property::Strong, per_degree: BTreeMap::new(), overall: strong };
    let (eps, table) = check_epsilon_strong(o, degree_bound, size_bound)?;
    let nearly = check_nearly_epsilon(o, degree_bound, size_bound)?;
    let sym = check_symmetric(o, degree_bound, size_bound)?;
    Ok(ClassificationReport {
        ring: o.name(),
        degree_bound,
        size_bound,
        properties: vec![strong, eps, nearly, sym],
        epsilon: table.into_iter().map(|(d, e)| (d, e.to_string())).collect(),
        notes: o.notes(),
    })
}

#[cfg(test)]
mod tests;
