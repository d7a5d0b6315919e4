//! Linear systems over finite rings.
//!
//! Modular and product rings are split into their prime-power factors and
//! each factor Z/p^k is diagonalised by Smith-style elimination: a pivot of
//! minimal p-adic valuation divides every entry of the remaining block, so
//! row and column clearing never needs a non-unit division. Table rings
//! fall back to capped exhaustive search.

use std::sync::OnceLock;

use super::ring::{mod_inverse, LocalFactor, Ring, RingElement};
use crate::error::{Error, Result};

pub const DEFAULT_SEARCH_CAP: u64 = 1_000_000;

/// State cap for exhaustive searches; `GRAL_SEARCH_CAP` overrides the default.
pub fn search_cap() -> u64 {
    static CAP: OnceLock<u64> = OnceLock::new();
    *CAP.get_or_init(|| {
        std::env::var("GRAL_SEARCH_CAP")
            .ok()
            .and_then(|s| s.trim().parse().ok())
            .unwrap_or(DEFAULT_SEARCH_CAP)
    })
}

pub(crate) fn check_cap(needed: u128, cap: u64) -> Result<()> {
    if needed > cap as u128 {
        Err(Error::SearchCapExceeded { needed, cap })
    } else {
        Ok(())
    }
}

/// `left * x[var] * right`; an absent side means no multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LinearTerm {
    pub left: Option<RingElement>,
    pub var: usize,
    pub right: Option<RingElement>,
}

impl LinearTerm {
    pub fn var(var: usize) -> Self {
        LinearTerm { left: None, var, right: None }
    }

    pub fn scaled(coeff: RingElement, var: usize) -> Self {
        LinearTerm { left: Some(coeff), var, right: None }
    }

    pub fn sandwich(left: RingElement, var: usize, right: RingElement) -> Self {
        LinearTerm { left: Some(left), var, right: Some(right) }
    }

    fn eval(&self, ring: &Ring, x: &[RingElement]) -> RingElement {
        let mut v = x[self.var];
        if let Some(l) = self.left {
            v = ring.mul(l, v);
        }
        if let Some(r) = self.right {
            v = ring.mul(v, r);
        }
        v
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearEquation {
    pub terms: Vec<LinearTerm>,
    pub rhs: RingElement,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearSystem {
    pub num_vars: usize,
    pub equations: Vec<LinearEquation>,
}

impl LinearSystem {
    pub fn new(num_vars: usize) -> Self {
        LinearSystem { num_vars, equations: Vec::new() }
    }

    pub fn push(&mut self, terms: Vec<LinearTerm>, rhs: RingElement) {
        debug_assert!(terms.iter().all(|t| t.var < self.num_vars));
        self.equations.push(LinearEquation { terms, rhs });
    }

    pub fn is_satisfied_by(&self, ring: &Ring, x: &[RingElement]) -> bool {
        x.len() == self.num_vars
            && self.equations.iter().all(|eq| {
                let lhs =
                    eq.terms.iter().fold(ring.zero(), |acc, t| ring.add(acc, t.eval(ring, x)));
                lhs == eq.rhs
            })
    }
}

/// Solves `system`, returning one solution or `None` when none exists.
pub fn solve_linear_system(ring: &Ring, system: &LinearSystem) -> Result<Option<Vec<RingElement>>> {
    solve_linear_system_with_cap(ring, system, search_cap())
}

pub fn solve_linear_system_with_cap(
    ring: &Ring,
    system: &LinearSystem,
    cap: u64,
) -> Result<Option<Vec<RingElement>>> {
    let solution = match ring.local_factors() {
        Some(factors) => solve_local(ring, &factors, system),
        None => solve_exhaustive(ring, system, cap)?,
    };
    if let Some(x) = &solution {
        assert!(system.is_satisfied_by(ring, x), "solver returned a non-solution");
    }
    Ok(solution)
}

fn solve_local(
    ring: &Ring,
    factors: &[LocalFactor],
    system: &LinearSystem,
) -> Option<Vec<RingElement>> {
    let n = system.num_vars;
    // dense coefficient rows over the ring (commutative kinds only)
    let mut coeffs = vec![vec![ring.zero(); n]; system.equations.len()];
    for (row, eq) in coeffs.iter_mut().zip(&system.equations) {
        for t in &eq.terms {
            let mut c = ring.one();
            if let Some(l) = t.left {
                c = ring.mul(c, l);
            }
            if let Some(r) = t.right {
                c = ring.mul(c, r);
            }
            row[t.var] = ring.add(row[t.var], c);
        }
    }
    let local_coeffs: Vec<Vec<Vec<u64>>> =
        coeffs.iter().map(|row| row.iter().map(|&c| ring.to_local(c)).collect()).collect();
    let local_rhs: Vec<Vec<u64>> = system.equations.iter().map(|e| ring.to_local(e.rhs)).collect();

    let mut per_factor = Vec::with_capacity(factors.len());
    for (fi, f) in factors.iter().enumerate() {
        let a: Vec<Vec<u64>> =
            local_coeffs.iter().map(|row| row.iter().map(|c| c[fi]).collect()).collect();
        let b: Vec<u64> = local_rhs.iter().map(|r| r[fi]).collect();
        per_factor.push(solve_prime_power(f, a, b, n)?);
    }
    Some(
        (0..n)
            .map(|j| {
                let residues: Vec<u64> = per_factor.iter().map(|sol| sol[j]).collect();
                ring.from_local(&residues)
            })
            .collect(),
    )
}

fn valuation(x: u64, f: &LocalFactor) -> u32 {
    if x == 0 {
        return f.exponent;
    }
    let mut v = 0;
    let mut x = x;
    while x.is_multiple_of(f.prime) {
        x /= f.prime;
        v += 1;
    }
    v
}

/// Solves `a x = b` over Z/p^k.
fn solve_prime_power(f: &LocalFactor, mut a: Vec<Vec<u64>>, mut b: Vec<u64>, n: usize) -> Option<Vec<u64>> {
    let m = f.modulus;
    let rows = a.len();
    let mulm = |x: u64, y: u64| ((x as u128 * y as u128) % m as u128) as u64;
    let subm = |x: u64, y: u64| (x + m - y) % m;
    // column transform: x = q y
    let mut q: Vec<Vec<u64>> = (0..n).map(|i| (0..n).map(|j| u64::from(i == j)).collect()).collect();
    let mut pivots: Vec<(u64, u32)> = Vec::new();
    let mut r = 0;
    while r < rows.min(n) {
        let mut best: Option<(usize, usize, u32)> = None;
        for i in r..rows {
            for j in r..n {
                if a[i][j] != 0 {
                    let v = valuation(a[i][j], f);
                    if best.is_none_or(|(_, _, bv)| v < bv) {
                        best = Some((i, j, v));
                    }
                }
            }
            if matches!(best, Some((_, _, 0))) {
                break;
            }
        }
        let Some((pi, pj, v)) = best else { break };
        a.swap(r, pi);
        b.swap(r, pi);
        if pj != r {
            for row in a.iter_mut() {
                row.swap(r, pj);
            }
            for row in q.iter_mut() {
                row.swap(r, pj);
            }
        }
        let pv = f.prime.pow(v);
        let unit = a[r][r] / pv;
        let unit_inv = mod_inverse(unit % m, m).expect("unit part is invertible");
        for i in r + 1..rows {
            if a[i][r] != 0 {
                let factor = mulm(a[i][r] / pv, unit_inv);
                for j in r..n {
                    a[i][j] = subm(a[i][j], mulm(factor, a[r][j]));
                }
                b[i] = subm(b[i], mulm(factor, b[r]));
            }
        }
        for j in r + 1..n {
            if a[r][j] != 0 {
                let factor = mulm(a[r][j] / pv, unit_inv);
                a[r][j] = 0;
                for row in q.iter_mut() {
                    row[j] = subm(row[j], mulm(factor, row[r]));
                }
            }
        }
        pivots.push((unit_inv, v));
        r += 1;
    }
    if b[r..].iter().any(|&x| x != 0) {
        return None;
    }
    let mut y = vec![0u64; n];
    for (i, &(unit_inv, v)) in pivots.iter().enumerate() {
        if valuation(b[i], f) < v {
            return None;
        }
        let pv = f.prime.pow(v);
        let reduced_mod = m / pv;
        y[i] = mulm(b[i] / pv, unit_inv) % reduced_mod;
    }
    Some(
        (0..n)
            .map(|i| (0..n).fold(0u64, |acc, j| (acc + mulm(q[i][j], y[j])) % m))
            .collect(),
    )
}

fn solve_exhaustive(ring: &Ring, system: &LinearSystem, cap: u64) -> Result<Option<Vec<RingElement>>> {
    let n = system.num_vars;
    let order = ring.order() as u128;
    let states = order.checked_pow(n as u32).unwrap_or(u128::MAX);
    check_cap(states, cap)?;
    let mut x = vec![ring.zero(); n];
    let mut digits = vec![0u32; n];
    loop {
        for (slot, d) in x.iter_mut().zip(&digits) {
            *slot = RingElement(*d);
        }
        if system.is_satisfied_by(ring, &x) {
            return Ok(Some(x));
        }
        // odometer, last variable fastest
        let mut i = n;
        loop {
            if i == 0 {
                return Ok(None);
            }
            i -= 1;
            digits[i] += 1;
            if (digits[i] as usize) < ring.order() {
                break;
            }
            digits[i] = 0;
        }
    }
}
