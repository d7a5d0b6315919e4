use std::collections::BTreeMap;
use std::fmt;

use super::pathprops::epsilon_formula;
use super::GradedRingOracle;
use crate::coeffring::{Matrix, Ring, RingElement};
use crate::error::{Error, Result};
use crate::pathalg::{Algebra, AlgebraElement, Monomial};
use crate::regularity::{local_unit_left, local_unit_right};

/// A Leavitt or relative Cohn path algebra with its length grading.
pub struct PathAlgebraOracle {
    alg: Algebra,
}

impl PathAlgebraOracle {
    pub fn new(alg: &Algebra) -> Self {
        PathAlgebraOracle { alg: Algebra::clone(alg) }
    }

    pub fn algebra(&self) -> &Algebra {
        &self.alg
    }

    /// A Leavitt path algebra of a finite graph is strongly graded iff the
    /// graph has no sinks.
    pub fn no_sinks(&self) -> bool {
        self.alg.graph().sinks().is_empty()
    }
}

impl GradedRingOracle for PathAlgebraOracle {
    type Elem = AlgebraElement;
    type Key = Monomial;

    fn name(&self) -> String {
        self.alg.name()
    }

    fn scalars(&self) -> Ring {
        self.alg.ring().clone()
    }

    fn spanning_set(&self, d: i64, bound: usize) -> Vec<AlgebraElement> {
        let one = self.alg.ring().one();
        self.alg
            .reduced_monomials_of_degree(d, bound)
            .into_iter()
            .map(|m| AlgebraElement::monomial(&self.alg, m, one))
            .collect()
    }

    fn is_complete(&self, _d: i64, bound: usize) -> bool {
        self.alg.graph().longest_path_len().is_some_and(|l| bound >= l)
    }

    fn degree_support(&self) -> Option<i64> {
        self.alg.graph().longest_path_len().map(|l| l as i64)
    }

    fn zero(&self) -> AlgebraElement {
        AlgebraElement::zero(&self.alg)
    }

    fn add(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.add(b)
    }

    fn mul(&self, a: &AlgebraElement, b: &AlgebraElement) -> AlgebraElement {
        a.mul(b)
    }

    fn neg(&self, a: &AlgebraElement) -> AlgebraElement {
        a.neg()
    }

    fn scale(&self, r: RingElement, a: &AlgebraElement) -> AlgebraElement {
        a.scale(r)
    }

    fn is_zero(&self, a: &AlgebraElement) -> bool {
        a.is_zero()
    }

    fn identity(&self) -> Option<AlgebraElement> {
        Some(AlgebraElement::one(&self.alg))
    }

    fn coordinates(&self, a: &AlgebraElement) -> Option<BTreeMap<Monomial, RingElement>> {
        Some(a.terms().clone())
    }

    fn epsilon_candidate(&self, d: i64) -> Option<AlgebraElement> {
        self.alg.is_leavitt().then(|| epsilon_formula(&self.alg, d))
    }

    fn left_unit_factors(&self, s: &AlgebraElement) -> Option<Vec<(AlgebraElement, AlgebraElement)>> {
        local_unit_left(s).ok().map(|u| u.factors)
    }

    fn right_unit_factors(&self, s: &AlgebraElement) -> Option<Vec<(AlgebraElement, AlgebraElement)>> {
        local_unit_right(s).ok().map(|u| u.factors)
    }

    fn notes(&self) -> Vec<String> {
        if self.alg.is_leavitt() {
            vec![format!("no sinks: {} (strong iff no sinks)", self.no_sinks())]
        } else {
            Vec::new()
        }
    }
}

/// A 2x2 matrix shown with its ring.
#[derive(Clone, Debug)]
pub struct MatrixElem {
    pub matrix: Matrix,
    ring: Ring,
}

impl PartialEq for MatrixElem {
    fn eq(&self, other: &Self) -> bool {
        self.matrix == other.matrix
    }
}

impl fmt::Display for MatrixElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.matrix.format(&self.ring))
    }
}

/// `M_2(R)` graded by `S_0` = diagonal, `S_1 = R e12`, `S_{-1} = R e21`.
/// This grading is epsilon-strong but not strong.
pub struct MatrixGradingOracle {
    ring: Ring,
}

impl MatrixGradingOracle {
    pub fn new(ring: Ring) -> Result<Self> {
        if !ring.is_commutative() || !ring.is_unital() {
            return Err(Error::Unsupported(format!("{} must be commutative and unital", ring.name())));
        }
        Ok(MatrixGradingOracle { ring })
    }

    pub fn unit(&self, i: usize, j: usize) -> MatrixElem {
        self.wrap(Matrix::unit(&self.ring, 2, i, j))
    }

    pub fn wrap(&self, matrix: Matrix) -> MatrixElem {
        MatrixElem { matrix, ring: self.ring.clone() }
    }
}

impl GradedRingOracle for MatrixGradingOracle {
    type Elem = MatrixElem;
    type Key = (usize, usize);

    fn name(&self) -> String {
        format!("M_2({}) with off-diagonal grading", self.ring.name())
    }

    fn scalars(&self) -> Ring {
        self.ring.clone()
    }

    fn spanning_set(&self, d: i64, _bound: usize) -> Vec<MatrixElem> {
        match d {
            0 => vec![self.unit(0, 0), self.unit(1, 1)],
            1 => vec![self.unit(0, 1)],
            -1 => vec![self.unit(1, 0)],
            _ => Vec::new(),
        }
    }

    fn is_complete(&self, _d: i64, _bound: usize) -> bool {
        true
    }

    fn degree_support(&self) -> Option<i64> {
        Some(1)
    }

    fn zero(&self) -> MatrixElem {
        self.wrap(Matrix::zeros(&self.ring, 2, 2))
    }

    fn add(&self, a: &MatrixElem, b: &MatrixElem) -> MatrixElem {
        self.wrap(a.matrix.add(&self.ring, &b.matrix))
    }

    fn mul(&self, a: &MatrixElem, b: &MatrixElem) -> MatrixElem {
        self.wrap(a.matrix.mul(&self.ring, &b.matrix))
    }

    fn neg(&self, a: &MatrixElem) -> MatrixElem {
        self.wrap(Matrix::zeros(&self.ring, 2, 2).sub(&self.ring, &a.matrix))
    }

    fn scale(&self, r: RingElement, a: &MatrixElem) -> MatrixElem {
        let mut m = a.matrix.clone();
        for i in 0..2 {
            for j in 0..2 {
                m.set(i, j, self.ring.mul(r, m.get(i, j)));
            }
        }
        self.wrap(m)
    }

    fn identity(&self) -> Option<MatrixElem> {
        Some(self.wrap(Matrix::identity(&self.ring, 2)))
    }

    fn coordinates(&self, a: &MatrixElem) -> Option<BTreeMap<(usize, usize), RingElement>> {
        let mut out = BTreeMap::new();
        for i in 0..2 {
            for j in 0..2 {
                let c = a.matrix.get(i, j);
                if !self.ring.is_zero(c) {
                    out.insert((i, j), c);
                }
            }
        }
        Some(out)
    }
}

/// An element of a ring shown with its ring.
#[derive(Clone, Debug)]
pub struct Shown {
    pub value: RingElement,
    ring: Ring,
}

impl PartialEq for Shown {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl fmt::Display for Shown {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring.format(self.value))
    }
}

/// A finite ring, possibly without identity, concentrated in degree 0.
/// Scalars are the integers modulo the additive exponent.
pub struct TrivialGradingOracle {
    ring: Ring,
    scalars: Ring,
}

impl TrivialGradingOracle {
    pub fn new(ring: Ring) -> Self {
        let m = additive_exponent(&ring);
        TrivialGradingOracle { ring, scalars: Ring::modular(m) }
    }

    pub fn elem(&self, value: RingElement) -> Shown {
        Shown { value, ring: self.ring.clone() }
    }
}

fn additive_exponent(ring: &Ring) -> u64 {
    if let Some(m) = ring.additive_exponent() {
        return m;
    }
    (1..=ring.order() as u64)
        .find(|&k| ring.elements().all(|x| ring.is_zero(multiple(ring, k, x))))
        .expect("the exponent divides the order")
}

fn multiple(ring: &Ring, k: u64, x: RingElement) -> RingElement {
    (0..k).fold(ring.zero(), |acc, _| ring.add(acc, x))
}

impl GradedRingOracle for TrivialGradingOracle {
    type Elem = Shown;
    type Key = usize;

    fn name(&self) -> String {
        format!("{} with trivial grading", self.ring.name())
    }

    fn scalars(&self) -> Ring {
        self.scalars.clone()
    }

    fn spanning_set(&self, d: i64, _bound: usize) -> Vec<Shown> {
        if d != 0 {
            return Vec::new();
        }
        self.ring.elements().filter(|&x| !self.ring.is_zero(x)).map(|x| self.elem(x)).collect()
    }

    fn is_complete(&self, _d: i64, _bound: usize) -> bool {
        true
    }

    fn degree_support(&self) -> Option<i64> {
        Some(0)
    }

    fn zero(&self) -> Shown {
        self.elem(self.ring.zero())
    }

    fn add(&self, a: &Shown, b: &Shown) -> Shown {
        self.elem(self.ring.add(a.value, b.value))
    }

    fn mul(&self, a: &Shown, b: &Shown) -> Shown {
        self.elem(self.ring.mul(a.value, b.value))
    }

    fn neg(&self, a: &Shown) -> Shown {
        self.elem(self.ring.neg(a.value))
    }

    fn scale(&self, r: RingElement, a: &Shown) -> Shown {
        self.elem(multiple(&self.ring, r.0 as u64, a.value))
    }

    fn identity(&self) -> Option<Shown> {
        self.ring.try_one().map(|x| self.elem(x))
    }

    fn coordinates(&self, a: &Shown) -> Option<BTreeMap<usize, RingElement>> {
        let coords = self.ring.additive_coordinates(a.value)?;
        Some(
            coords
                .into_iter()
                .enumerate()
                .filter(|(_, c)| *c != 0)
                .map(|(i, c)| (i, self.scalars.from_int(c as i64)))
                .collect(),
        )
    }
}

/// `Σ c_i x^i`, shown with its ring.
#[derive(Clone, Debug)]
pub struct Poly {
    pub coeffs: BTreeMap<u32, RingElement>,
    ring: Ring,
}

impl PartialEq for Poly {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let one = self.ring.one();
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(&i, &c)| {
                let c_str = if c == one && i > 0 { String::new() } else { self.ring.format(c) };
                match i {
                    0 => c_str,
                    1 => format!("{c_str}x"),
                    _ => format!("{c_str}x^{i}"),
                }
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// `R[x]` graded by degree; `S_d = R x^d` for `d >= 0` and `S_d = 0` otherwise.
pub struct PolynomialOracle {
    ring: Ring,
}

impl PolynomialOracle {
    pub fn new(ring: Ring) -> Result<Self> {
        if !ring.is_commutative() || !ring.is_unital() {
            return Err(Error::Unsupported(format!("{} must be commutative and unital", ring.name())));
        }
        Ok(PolynomialOracle { ring })
    }

    pub fn monomial(&self, i: u32, c: RingElement) -> Poly {
        let mut coeffs = BTreeMap::new();
        if !self.ring.is_zero(c) {
            coeffs.insert(i, c);
        }
        Poly { coeffs, ring: self.ring.clone() }
    }

    fn poly_of(&self, mut coeffs: BTreeMap<u32, RingElement>) -> Poly {
        coeffs.retain(|_, c| !self.ring.is_zero(*c));
        Poly { coeffs, ring: self.ring.clone() }
    }
}

impl GradedRingOracle for PolynomialOracle {
    type Elem = Poly;
    type Key = u32;

    fn name(&self) -> String {
        format!("{}[x]", self.ring.name())
    }

    fn scalars(&self) -> Ring {
        self.ring.clone()
    }

    fn spanning_set(&self, d: i64, _bound: usize) -> Vec<Poly> {
        if d < 0 {
            Vec::new()
        } else {
            vec![self.monomial(d as u32, self.ring.one())]
        }
    }

    fn is_complete(&self, _d: i64, _bound: usize) -> bool {
        true
    }

    fn degree_support(&self) -> Option<i64> {
        None
    }

    fn zero(&self) -> Poly {
        self.poly_of(BTreeMap::new())
    }

    fn add(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out = a.coeffs.clone();
        for (&i, &c) in &b.coeffs {
            let e = out.entry(i).or_insert(self.ring.zero());
            *e = self.ring.add(*e, c);
        }
        self.poly_of(out)
    }

    fn mul(&self, a: &Poly, b: &Poly) -> Poly {
        let mut out: BTreeMap<u32, RingElement> = BTreeMap::new();
        for (&i, &c) in &a.coeffs {
            for (&j, &e) in &b.coeffs {
                let slot = out.entry(i + j).or_insert(self.ring.zero());
                *slot = self.ring.add(*slot, self.ring.mul(c, e));
            }
        }
        self.poly_of(out)
    }

    fn neg(&self, a: &Poly) -> Poly {
        self.poly_of(a.coeffs.iter().map(|(&i, &c)| (i, self.ring.neg(c))).collect())
    }

    fn scale(&self, r: RingElement, a: &Poly) -> Poly {
        self.poly_of(a.coeffs.iter().map(|(&i, &c)| (i, self.ring.mul(r, c))).collect())
    }

    fn identity(&self) -> Option<Poly> {
        Some(self.monomial(0, self.ring.one()))
    }

    fn coordinates(&self, a: &Poly) -> Option<BTreeMap<u32, RingElement>> {
        Some(a.coeffs.clone())
    }
}
