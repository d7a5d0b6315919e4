use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::error::{Error, Result};

/// Description of a finite coefficient ring, as read from a ring spec file.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum RingSpec {
    #[serde(rename = "mod")]
    Modular { n: u64 },
    #[serde(rename = "product")]
    Product { factors: Vec<RingSpec> },
    #[serde(rename = "table")]
    Table {
        size: usize,
        zero: usize,
        #[serde(default, skip_serializing_if = "Option::is_none")]
        one: Option<usize>,
        add: Vec<Vec<usize>>,
        mul: Vec<Vec<usize>>,
    },
}

impl RingSpec {
    pub fn modular(n: u64) -> Self {
        RingSpec::Modular { n }
    }

    pub fn product(factors: Vec<RingSpec>) -> Self {
        RingSpec::Product { factors }
    }
}

/// Canonical index of an element in its ring's enumeration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct RingElement(pub u32);

impl RingElement {
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

/// One prime-power factor Z/p^k of a modular or product ring.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LocalFactor {
    pub prime: u64,
    pub exponent: u32,
    pub modulus: u64,
}

#[derive(Debug)]
enum Kind {
    Modular(u64),
    Product { factors: Vec<Ring>, strides: Vec<usize> },
    Table { add: Vec<Vec<usize>>, mul: Vec<Vec<usize>> },
}

#[derive(Debug)]
struct Tables {
    add: Vec<u32>,
    mul: Vec<u32>,
    neg: Vec<u32>,
}

#[derive(Debug)]
struct Inner {
    spec: RingSpec,
    kind: Kind,
    order: usize,
    zero: u32,
    one: Option<u32>,
    commutative: bool,
    tables: Option<Tables>,
}

/// Immutable handle to a finite ring. Cheap to clone.
#[derive(Clone)]
pub struct Ring(Arc<Inner>);

const TABLE_CACHE_LIMIT: usize = 256;

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Ring({})", self.name())
    }
}

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.spec == other.0.spec
    }
}

impl Eq for Ring {}

impl Ring {
    /// Builds a unital ring, validating table axioms.
    pub fn new(spec: RingSpec) -> Result<Ring> {
        Self::build(spec, true)
    }

    /// Builds a table ring that is allowed to lack an identity.
    pub fn new_non_unital(spec: RingSpec) -> Result<Ring> {
        match spec {
            RingSpec::Table { .. } => Self::build(spec, false),
            _ => Err(Error::BadRingSpec(
                "only table rings may be built without identity".into(),
            )),
        }
    }

    pub fn modular(n: u64) -> Ring {
        Ring::new(RingSpec::modular(n)).expect("modulus must be at least 2")
    }

    pub fn product(factors: &[Ring]) -> Ring {
        Ring::new(RingSpec::product(factors.iter().map(|r| r.spec().clone()).collect()))
            .expect("product of valid rings")
    }

    fn build(spec: RingSpec, require_one: bool) -> Result<Ring> {
        let inner = match &spec {
            RingSpec::Modular { n } => {
                if *n < 2 {
                    return Err(Error::BadRingSpec(format!("modulus {n} must be at least 2")));
                }
                if *n > u32::MAX as u64 {
                    return Err(Error::BadRingSpec(format!("modulus {n} too large")));
                }
                Inner {
                    spec: spec.clone(),
                    kind: Kind::Modular(*n),
                    order: *n as usize,
                    zero: 0,
                    one: Some(1),
                    commutative: true,
                    tables: None,
                }
            }
            RingSpec::Product { factors } => {
                if factors.is_empty() {
                    return Err(Error::BadRingSpec("product needs at least one factor".into()));
                }
                let factors: Vec<Ring> =
                    factors.iter().cloned().map(Ring::new).collect::<Result<_>>()?;
                let mut order: usize = 1;
                for f in &factors {
                    order = order
                        .checked_mul(f.order())
                        .filter(|o| *o <= u32::MAX as usize)
                        .ok_or_else(|| Error::BadRingSpec("product ring too large".into()))?;
                }
                let mut strides = vec![1usize; factors.len()];
                for i in (0..factors.len().saturating_sub(1)).rev() {
                    strides[i] = strides[i + 1] * factors[i + 1].order();
                }
                let commutative = factors.iter().all(|f| f.is_commutative());
                let zero = factors
                    .iter()
                    .zip(&strides)
                    .map(|(f, s)| f.zero().index() * s)
                    .sum::<usize>() as u32;
                let one = factors
                    .iter()
                    .zip(&strides)
                    .map(|(f, s)| f.one().index() * s)
                    .sum::<usize>() as u32;
                Inner {
                    spec: spec.clone(),
                    kind: Kind::Product { factors, strides },
                    order,
                    zero,
                    one: Some(one),
                    commutative,
                    tables: None,
                }
            }
            RingSpec::Table { size, zero, one, add, mul } => {
                validate_table(*size, *zero, *one, add, mul, require_one)?;
                let commutative =
                    (0..*size).all(|a| (0..*size).all(|b| mul[a][b] == mul[b][a]));
                Inner {
                    spec: spec.clone(),
                    kind: Kind::Table { add: add.clone(), mul: mul.clone() },
                    order: *size,
                    zero: *zero as u32,
                    one: one.map(|o| o as u32),
                    commutative,
                    tables: None,
                }
            }
        };
        let mut ring = Ring(Arc::new(inner));
        if ring.order() <= TABLE_CACHE_LIMIT {
            let n = ring.order();
            let mut add = Vec::with_capacity(n * n);
            let mut mul = Vec::with_capacity(n * n);
            for a in 0..n as u32 {
                for b in 0..n as u32 {
                    add.push(ring.add_slow(a, b));
                    mul.push(ring.mul_slow(a, b));
                }
            }
            let neg = (0..n as u32).map(|a| ring.neg_slow(a)).collect();
            let inner = Arc::get_mut(&mut ring.0).expect("fresh ring is uniquely owned");
            inner.tables = Some(Tables { add, mul, neg });
        }
        Ok(ring)
    }

    pub fn spec(&self) -> &RingSpec {
        &self.0.spec
    }

    pub fn order(&self) -> usize {
        self.0.order
    }

    pub fn is_commutative(&self) -> bool {
        self.0.commutative
    }

    pub fn is_unital(&self) -> bool {
        self.0.one.is_some()
    }

    pub fn zero(&self) -> RingElement {
        RingElement(self.0.zero)
    }

    /// The identity. Panics on a non-unital table ring.
    pub fn one(&self) -> RingElement {
        self.try_one().expect("ring has no identity")
    }

    pub fn try_one(&self) -> Option<RingElement> {
        self.0.one.map(RingElement)
    }

    pub fn elements(&self) -> impl Iterator<Item = RingElement> + Clone {
        (0..self.order() as u32).map(RingElement)
    }

    pub fn is_zero(&self, a: RingElement) -> bool {
        a.0 == self.0.zero
    }

    pub fn add(&self, a: RingElement, b: RingElement) -> RingElement {
        match &self.0.tables {
            Some(t) => RingElement(t.add[a.index() * self.order() + b.index()]),
            None => RingElement(self.add_slow(a.0, b.0)),
        }
    }

    pub fn mul(&self, a: RingElement, b: RingElement) -> RingElement {
        match &self.0.tables {
            Some(t) => RingElement(t.mul[a.index() * self.order() + b.index()]),
            None => RingElement(self.mul_slow(a.0, b.0)),
        }
    }

    pub fn neg(&self, a: RingElement) -> RingElement {
        match &self.0.tables {
            Some(t) => RingElement(t.neg[a.index()]),
            None => RingElement(self.neg_slow(a.0)),
        }
    }

    pub fn sub(&self, a: RingElement, b: RingElement) -> RingElement {
        self.add(a, self.neg(b))
    }

    pub fn mul3(&self, a: RingElement, b: RingElement, c: RingElement) -> RingElement {
        self.mul(self.mul(a, b), c)
    }

    /// The image of the integer `k` (k-fold sum of the identity).
    pub fn from_int(&self, k: i64) -> RingElement {
        let one = self.one();
        let mut acc = self.zero();
        for _ in 0..k.unsigned_abs() % self.order() as u64 {
            acc = self.add(acc, one);
        }
        if k < 0 {
            self.neg(acc)
        } else {
            acc
        }
    }

    fn add_slow(&self, a: u32, b: u32) -> u32 {
        match &self.0.kind {
            Kind::Modular(n) => ((a as u64 + b as u64) % n) as u32,
            Kind::Product { factors, .. } => self.combine(factors, a, b, |f, x, y| f.add(x, y)),
            Kind::Table { add, .. } => add[a as usize][b as usize] as u32,
        }
    }

    fn mul_slow(&self, a: u32, b: u32) -> u32 {
        match &self.0.kind {
            Kind::Modular(n) => ((a as u64 * b as u64) % n) as u32,
            Kind::Product { factors, .. } => self.combine(factors, a, b, |f, x, y| f.mul(x, y)),
            Kind::Table { mul, .. } => mul[a as usize][b as usize] as u32,
        }
    }

    fn neg_slow(&self, a: u32) -> u32 {
        match &self.0.kind {
            Kind::Modular(n) => ((n - a as u64) % n) as u32,
            Kind::Product { factors, .. } => {
                let parts = self.split(a);
                let negs: Vec<RingElement> =
                    factors.iter().zip(parts).map(|(f, x)| f.neg(x)).collect();
                self.join(&negs).0
            }
            Kind::Table { add, .. } => {
                let zero = self.0.zero as usize;
                (0..self.order()).find(|&b| add[a as usize][b] == zero).expect("validated") as u32
            }
        }
    }

    fn combine(
        &self,
        factors: &[Ring],
        a: u32,
        b: u32,
        op: impl Fn(&Ring, RingElement, RingElement) -> RingElement,
    ) -> u32 {
        let xs = self.split(a);
        let ys = self.split(b);
        let parts: Vec<RingElement> = factors
            .iter()
            .zip(xs.into_iter().zip(ys))
            .map(|(f, (x, y))| op(f, x, y))
            .collect();
        self.join(&parts).0
    }

    /// Components of a product-ring element, first factor first.
    pub fn split(&self, a: u32) -> Vec<RingElement> {
        match &self.0.kind {
            Kind::Product { factors, strides } => factors
                .iter()
                .zip(strides)
                .map(|(f, s)| RingElement(((a as usize / s) % f.order()) as u32))
                .collect(),
            _ => vec![RingElement(a)],
        }
    }

    /// Inverse of [`Ring::split`].
    pub fn join(&self, parts: &[RingElement]) -> RingElement {
        match &self.0.kind {
            Kind::Product { strides, .. } => RingElement(
                parts.iter().zip(strides).map(|(p, s)| p.index() * s).sum::<usize>() as u32,
            ),
            _ => parts[0],
        }
    }

    pub fn factors(&self) -> Option<&[Ring]> {
        match &self.0.kind {
            Kind::Product { factors, .. } => Some(factors),
            _ => None,
        }
    }

    /// Short human-readable ring name such as `Z/6` or `Z/2xZ/4`.
    pub fn name(&self) -> String {
        match &self.0.kind {
            Kind::Modular(n) => format!("Z/{n}"),
            Kind::Product { factors, .. } => {
                factors.iter().map(|f| f.name()).collect::<Vec<_>>().join("x")
            }
            Kind::Table { .. } => format!("T{}", self.order()),
        }
    }

    pub fn format(&self, a: RingElement) -> String {
        match &self.0.kind {
            Kind::Product { factors, .. } => {
                let parts = self.split(a.0);
                let inner: Vec<String> =
                    factors.iter().zip(parts).map(|(f, x)| f.format(x)).collect();
                format!("({})", inner.join(","))
            }
            _ => a.0.to_string(),
        }
    }

    /// JSON encoding: integer for modular/table kinds, array for products.
    pub fn encode(&self, a: RingElement) -> Value {
        match &self.0.kind {
            Kind::Product { factors, .. } => Value::Array(
                factors.iter().zip(self.split(a.0)).map(|(f, x)| f.encode(x)).collect(),
            ),
            _ => Value::from(a.0),
        }
    }

    pub fn decode(&self, v: &Value) -> Result<RingElement> {
        match &self.0.kind {
            Kind::Product { factors, .. } => {
                let arr = v.as_array().ok_or_else(|| {
                    Error::Parse(format!("expected array for element of {}", self.name()))
                })?;
                if arr.len() != factors.len() {
                    return Err(Error::Parse(format!("expected {} components", factors.len())));
                }
                let parts =
                    factors.iter().zip(arr).map(|(f, x)| f.decode(x)).collect::<Result<Vec<_>>>()?;
                Ok(self.join(&parts))
            }
            Kind::Modular(n) => {
                let k = v
                    .as_i64()
                    .ok_or_else(|| Error::Parse(format!("expected integer, got {v}")))?;
                Ok(RingElement(k.rem_euclid(*n as i64) as u32))
            }
            Kind::Table { .. } => {
                let k = v
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("expected index, got {v}")))?;
                if k as usize >= self.order() {
                    return Err(Error::Parse(format!("index {k} out of range")));
                }
                Ok(RingElement(k as u32))
            }
        }
    }

    /// Prime-power decomposition for modular and product kinds.
    pub fn local_factors(&self) -> Option<Vec<LocalFactor>> {
        match &self.0.kind {
            Kind::Modular(n) => Some(prime_powers(*n)),
            Kind::Product { factors, .. } => {
                let mut out = Vec::new();
                for f in factors {
                    out.extend(f.local_factors()?);
                }
                Some(out)
            }
            Kind::Table { .. } => None,
        }
    }

    /// Residues of `a` in each local factor, in [`Ring::local_factors`] order.
    pub fn to_local(&self, a: RingElement) -> Vec<u64> {
        match &self.0.kind {
            Kind::Modular(n) => prime_powers(*n).iter().map(|lf| a.0 as u64 % lf.modulus).collect(),
            Kind::Product { factors, .. } => factors
                .iter()
                .zip(self.split(a.0))
                .flat_map(|(f, x)| f.to_local(x))
                .collect(),
            Kind::Table { .. } => panic!("table rings have no local decomposition"),
        }
    }

    pub fn from_local(&self, residues: &[u64]) -> RingElement {
        match &self.0.kind {
            Kind::Modular(n) => {
                let lfs = prime_powers(*n);
                RingElement(crt(&lfs, residues) as u32)
            }
            Kind::Product { factors, .. } => {
                let mut offset = 0;
                let mut parts = Vec::with_capacity(factors.len());
                for f in factors {
                    let k = f.local_factors().map(|v| v.len()).unwrap_or(0);
                    parts.push(f.from_local(&residues[offset..offset + k]));
                    offset += k;
                }
                self.join(&parts)
            }
            Kind::Table { .. } => panic!("table rings have no local decomposition"),
        }
    }

    /// Exponent of the additive group (modular and product kinds).
    pub fn additive_exponent(&self) -> Option<u64> {
        match &self.0.kind {
            Kind::Modular(n) => Some(*n),
            Kind::Product { factors, .. } => {
                let mut acc = 1u64;
                for f in factors {
                    acc = lcm(acc, f.additive_exponent()?);
                }
                Some(acc)
            }
            Kind::Table { .. } => None,
        }
    }

    /// Embeds the additive group into (Z/m)^k, m the additive exponent, via
    /// x -> (m / n_i) x on each cyclic summand Z/n_i.
    pub fn additive_coordinates(&self, a: RingElement) -> Option<Vec<u64>> {
        let m = self.additive_exponent()?;
        let mut out = Vec::new();
        self.push_coordinates(a, m, &mut out);
        Some(out)
    }

    fn push_coordinates(&self, a: RingElement, m: u64, out: &mut Vec<u64>) {
        match &self.0.kind {
            Kind::Modular(n) => out.push(a.0 as u64 * (m / n)),
            Kind::Product { factors, .. } => {
                for (f, x) in factors.iter().zip(self.split(a.0)) {
                    f.push_coordinates(x, m, out);
                }
            }
            Kind::Table { .. } => unreachable!(),
        }
    }
}

fn validate_table(
    size: usize,
    zero: usize,
    one: Option<usize>,
    add: &[Vec<usize>],
    mul: &[Vec<usize>],
    require_one: bool,
) -> Result<()> {
    let bad = |m: String| Err(Error::BadRingSpec(m));
    if size == 0 {
        return bad("table ring needs at least one element".into());
    }
    if zero >= size {
        return bad(format!("zero index {zero} out of range"));
    }
    for (name, t) in [("add", add), ("mul", mul)] {
        if t.len() != size || t.iter().any(|row| row.len() != size) {
            return bad(format!("{name} table must be {size}x{size}"));
        }
        if t.iter().flatten().any(|&x| x >= size) {
            return bad(format!("{name} table has an entry out of range"));
        }
    }
    let violation = |axiom: &str, w: String| {
        Err(Error::AxiomViolation { axiom: axiom.to_string(), witness: w })
    };
    let r = 0..size;
    for (a, b, c) in triples(size) {
        if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
            return violation("assoc", format!("({a}, {b}, {c})"));
        }
    }
    for a in r.clone() {
        if add[zero][a] != a || add[a][zero] != a {
            return violation("additive identity", format!("({a})"));
        }
        if !r.clone().any(|b| add[a][b] == zero) {
            return violation("additive inverse", format!("({a})"));
        }
        for b in r.clone() {
            if add[a][b] != add[b][a] {
                return violation("additive commutativity", format!("({a}, {b})"));
            }
            for c in r.clone() {
                if add[add[a][b]][c] != add[a][add[b][c]] {
                    return violation("additive associativity", format!("({a}, {b}, {c})"));
                }
                if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]] {
                    return violation("left distributivity", format!("({a}, {b}, {c})"));
                }
                if mul[add[a][b]][c] != add[mul[a][c]][mul[b][c]] {
                    return violation("right distributivity", format!("({a}, {b}, {c})"));
                }
            }
        }
    }
    match one {
        Some(o) => {
            if o >= size {
                return bad(format!("one index {o} out of range"));
            }
            if o == zero {
                return violation("one differs from zero", format!("({o})"));
            }
            for a in r {
                if mul[o][a] != a || mul[a][o] != a {
                    return violation("multiplicative identity", format!("({a})"));
                }
            }
        }
        None if require_one => {
            return violation("multiplicative identity", "(none designated)".into());
        }
        None => {}
    }
    Ok(())
}

fn triples(size: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..size).flat_map(move |a| (0..size).flat_map(move |b| (0..size).map(move |c| (a, b, c))))
}

fn prime_powers(mut n: u64) -> Vec<LocalFactor> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut k = 0;
            let mut m = 1;
            while n.is_multiple_of(p) {
                n /= p;
                k += 1;
                m *= p;
            }
            out.push(LocalFactor { prime: p, exponent: k, modulus: m });
        }
        p += 1;
    }
    if n > 1 {
        out.push(LocalFactor { prime: n, exponent: 1, modulus: n });
    }
    out
}

fn crt(factors: &[LocalFactor], residues: &[u64]) -> u64 {
    let n: u64 = factors.iter().map(|f| f.modulus).product();
    let mut acc: u128 = 0;
    for (f, &r) in factors.iter().zip(residues) {
        let m = n / f.modulus;
        let inv = mod_inverse(m % f.modulus, f.modulus).expect("coprime moduli");
        acc += r as u128 * m as u128 * inv as u128;
    }
    (acc % n as u128) as u64
}

pub(crate) fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn lcm(a: u64, b: u64) -> u64 {
    a / gcd(a, b) * b
}

/// Inverse of `a` modulo `m`, if it exists.
pub(crate) fn mod_inverse(a: u64, m: u64) -> Option<u64> {
    if m == 1 {
        return Some(0);
    }
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    if old_r != 1 {
        return None;
    }
    Some(old_s.rem_euclid(m as i128) as u64)
}
