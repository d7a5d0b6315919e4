//! Finite coefficient rings: arithmetic, von Neumann regularity witnesses,
//! linear systems, matrices and the Jacobson radical.

mod linsolve;
mod matrix;
mod ring;

pub use linsolve::{
    search_cap, solve_linear_system, solve_linear_system_with_cap, LinearEquation, LinearSystem,
    LinearTerm, DEFAULT_SEARCH_CAP,
};
pub(crate) use linsolve::check_cap;
pub use matrix::{matrix_vnr_witness, matrix_vnr_witness_with_cap, Matrix};
pub use ring::{LocalFactor, Ring, RingElement, RingSpec};

use crate::error::Result;

/// Shorthand for [`Ring::new`].
pub fn ring_make(spec: RingSpec) -> Result<Ring> {
    Ring::new(spec)
}

/// First `y` in enumeration order with `a y a = a`.
pub fn vnr_witness(ring: &Ring, a: RingElement) -> Option<RingElement> {
    let y = ring.elements().find(|&y| ring.mul3(a, y, a) == a)?;
    assert_eq!(ring.mul3(a, y, a), a);
    Some(y)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum VnrVerdict {
    /// Every element has a witness; pairs `(a, y)` with `a = a y a`.
    Regular { witnesses: Vec<(RingElement, RingElement)> },
    /// The least element without a witness.
    NotRegular { counterexample: RingElement },
}

impl VnrVerdict {
    pub fn is_regular(&self) -> bool {
        matches!(self, VnrVerdict::Regular { .. })
    }
}

pub fn is_vnr(ring: &Ring) -> VnrVerdict {
    let mut witnesses = Vec::with_capacity(ring.order());
    for a in ring.elements() {
        match vnr_witness(ring, a) {
            Some(y) => witnesses.push((a, y)),
            None => return VnrVerdict::NotRegular { counterexample: a },
        }
    }
    VnrVerdict::Regular { witnesses }
}

/// `x` with `x + a - x a = 0`, i.e. a left quasi-inverse of `a`.
fn left_quasi_inverse(ring: &Ring, a: RingElement) -> Option<RingElement> {
    ring.elements().find(|&x| ring.is_zero(ring.sub(ring.add(x, a), ring.mul(x, a))))
}

/// Jacobson radical by enumeration: `x` lies in it iff `y x` is left
/// quasi-regular for every `y` (for unital rings: `1 - y x` has a left inverse).
pub fn jacobson_radical(ring: &Ring) -> Result<Vec<RingElement>> {
    jacobson_radical_with_cap(ring, search_cap())
}

pub fn jacobson_radical_with_cap(ring: &Ring, cap: u64) -> Result<Vec<RingElement>> {
    let n = ring.order() as u128;
    check_cap(n * n * n, cap)?;
    let radical: Vec<RingElement> = ring
        .elements()
        .filter(|&x| ring.elements().all(|y| left_quasi_inverse(ring, ring.mul(y, x)).is_some()))
        .collect();
    for &a in &radical {
        for &b in &radical {
            assert!(radical.contains(&ring.add(a, b)), "radical not closed under addition");
        }
        for r in ring.elements() {
            assert!(radical.contains(&ring.mul(r, a)), "radical not a left ideal");
            assert!(radical.contains(&ring.mul(a, r)), "radical not a right ideal");
        }
    }
    Ok(radical)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SemiprimeVerdict {
    Semiprime,
    /// A nonzero `a` with `a R a = 0`.
    NotSemiprime { witness: RingElement },
}

impl SemiprimeVerdict {
    pub fn is_semiprime(&self) -> bool {
        matches!(self, SemiprimeVerdict::Semiprime)
    }
}

pub fn is_semiprime_ring(ring: &Ring) -> Result<SemiprimeVerdict> {
    let n = ring.order() as u128;
    check_cap(n * n, search_cap())?;
    let witness = ring.elements().filter(|&a| !ring.is_zero(a)).find(|&a| {
        ring.elements().all(|r| ring.is_zero(ring.mul3(a, r, a)))
    });
    Ok(match witness {
        Some(w) => SemiprimeVerdict::NotSemiprime { witness: w },
        None => SemiprimeVerdict::Semiprime,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn el(k: u32) -> RingElement {
        RingElement(k)
    }

    #[test]
    fn witnesses_in_small_rings() {
        assert_eq!(vnr_witness(&Ring::modular(2), el(1)), Some(el(1)));
        assert_eq!(vnr_witness(&Ring::modular(6), el(2)), Some(el(2)));
        assert_eq!(vnr_witness(&Ring::modular(4), el(2)), None);
    }

    #[test]
    fn regularity_verdicts() {
        assert!(is_vnr(&Ring::modular(5)).is_regular());
        match is_vnr(&Ring::modular(6)) {
            VnrVerdict::Regular { witnesses } => assert_eq!(witnesses.len(), 6),
            v => panic!("{v:?}"),
        }
        assert_eq!(is_vnr(&Ring::modular(4)), VnrVerdict::NotRegular { counterexample: el(2) });
    }

    #[test]
    fn product_regularity_is_conjunction() {
        let z2 = Ring::modular(2);
        let z4 = Ring::modular(4);
        let z3 = Ring::modular(3);
        let p = Ring::product(&[z2.clone(), z4.clone()]);
        assert!(!is_vnr(&p).is_regular());
        assert_eq!(
            is_vnr(&p).is_regular(),
            is_vnr(&z2).is_regular() && is_vnr(&z4).is_regular()
        );
        assert!(is_vnr(&Ring::product(&[z2, z3])).is_regular());
    }

    #[test]
    fn radicals() {
        assert_eq!(jacobson_radical(&Ring::modular(4)).unwrap(), vec![el(0), el(2)]);
        assert_eq!(jacobson_radical(&Ring::modular(2)).unwrap(), vec![el(0)]);
        assert_eq!(jacobson_radical(&Ring::modular(6)).unwrap(), vec![el(0)]);
        assert_eq!(jacobson_radical(&Ring::modular(8)).unwrap(), vec![el(0), el(2), el(4), el(6)]);
    }

    #[test]
    fn semiprime_verdicts() {
        assert_eq!(
            is_semiprime_ring(&Ring::modular(4)).unwrap(),
            SemiprimeVerdict::NotSemiprime { witness: el(2) }
        );
        assert!(is_semiprime_ring(&Ring::modular(6)).unwrap().is_semiprime());
        assert!(is_semiprime_ring(&Ring::modular(2)).unwrap().is_semiprime());
    }

    #[test]
    fn radical_respects_cap() {
        let err = jacobson_radical_with_cap(&Ring::modular(20), 100).unwrap_err();
        assert!(matches!(err, crate::error::Error::SearchCapExceeded { .. }));
    }
}
