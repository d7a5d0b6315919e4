use super::linsolve::{solve_linear_system_with_cap, LinearSystem, LinearTerm};
use super::ring::{Ring, RingElement};
use crate::error::Result;

/// Dense matrix over a finite ring; the ring is passed to each operation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    entries: Vec<RingElement>,
}

impl Matrix {
    pub fn zeros(ring: &Ring, rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, entries: vec![ring.zero(); rows * cols] }
    }

    pub fn identity(ring: &Ring, n: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        for i in 0..n {
            m.set(i, i, ring.one());
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<RingElement>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Matrix { rows: r, cols: c, entries: rows.into_iter().flatten().collect() }
    }

    /// Builds a matrix from small integers reduced into `ring`.
    pub fn from_ints(ring: &Ring, rows: &[&[i64]]) -> Self {
        Self::from_rows(
            rows.iter().map(|row| row.iter().map(|&k| ring.from_int(k)).collect()).collect(),
        )
    }

    pub fn unit(ring: &Ring, n: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zeros(ring, n, n);
        m.set(i, j, ring.one());
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> RingElement {
        self.entries[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: RingElement) {
        self.entries[i * self.cols + j] = v;
    }

    pub fn is_zero(&self, ring: &Ring) -> bool {
        self.entries.iter().all(|&e| ring.is_zero(e))
    }

    pub fn add(&self, ring: &Ring, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| ring.add(a, b)).collect(),
        }
    }

    pub fn sub(&self, ring: &Ring, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        Matrix {
            rows: self.rows,
            cols: self.cols,
            entries: self.entries.iter().zip(&other.entries).map(|(&a, &b)| ring.sub(a, b)).collect(),
        }
    }

    pub fn mul(&self, ring: &Ring, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "incompatible matrix shapes");
        let mut out = Matrix::zeros(ring, self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if ring.is_zero(a) {
                    continue;
                }
                for j in 0..other.cols {
                    let idx = i * out.cols + j;
                    out.entries[idx] = ring.add(out.entries[idx], ring.mul(a, other.get(k, j)));
                }
            }
        }
        out
    }

    pub fn format(&self, ring: &Ring) -> String {
        let rows: Vec<String> = (0..self.rows)
            .map(|i| {
                let cells: Vec<String> = (0..self.cols).map(|j| ring.format(self.get(i, j))).collect();
                format!("[{}]", cells.join(","))
            })
            .collect();
        format!("[{}]", rows.join(","))
    }
}

/// Finds `Y` with `A Y A = A`, or `None` when `A` is not regular.
///
/// `A Y A = A` is linear in the entries of `Y`: entry (i, l) reads
/// `sum_{j,k} A[i][j] Y[j][k] A[k][l] = A[i][l]`.
pub fn matrix_vnr_witness(ring: &Ring, a: &Matrix) -> Result<Option<Matrix>> {
    matrix_vnr_witness_with_cap(ring, a, super::linsolve::search_cap())
}

pub fn matrix_vnr_witness_with_cap(ring: &Ring, a: &Matrix, cap: u64) -> Result<Option<Matrix>> {
    let (m, n) = (a.rows, a.cols);
    // Y is n x m, variable index j * m + k
    let mut sys = LinearSystem::new(n * m);
    for i in 0..m {
        for l in 0..n {
            let mut terms = Vec::new();
            for j in 0..n {
                let left = a.get(i, j);
                if ring.is_zero(left) {
                    continue;
                }
                for k in 0..m {
                    let right = a.get(k, l);
                    if ring.is_zero(right) {
                        continue;
                    }
                    terms.push(LinearTerm::sandwich(left, j * m + k, right));
                }
            }
            sys.push(terms, a.get(i, l));
        }
    }
    let Some(sol) = solve_linear_system_with_cap(ring, &sys, cap)? else {
        return Ok(None);
    };
    let y = Matrix { rows: n, cols: m, entries: sol };
    debug_assert_eq!(&a.mul(ring, &y).mul(ring, a), a);
    Ok(Some(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn idempotent_matrix_over_z2() {
        let z2 = Ring::modular(2);
        let a = Matrix::from_ints(&z2, &[&[1, 0], &[0, 0]]);
        let y = matrix_vnr_witness(&z2, &a).unwrap().unwrap();
        assert_eq!(a.mul(&z2, &y).mul(&z2, &a), a);
        assert_eq!(y, a);
    }

    #[test]
    fn scalar_cases() {
        let z6 = Ring::modular(6);
        let a = Matrix::from_ints(&z6, &[&[2]]);
        assert_eq!(matrix_vnr_witness(&z6, &a).unwrap(), Some(Matrix::from_ints(&z6, &[&[2]])));
        let z4 = Ring::modular(4);
        let a = Matrix::from_ints(&z4, &[&[2]]);
        assert_eq!(matrix_vnr_witness(&z4, &a).unwrap(), None);
    }

    #[test]
    fn rectangular_matrix() {
        let z3 = Ring::modular(3);
        let a = Matrix::from_ints(&z3, &[&[1, 2, 0], &[2, 1, 0]]);
        let y = matrix_vnr_witness(&z3, &a).unwrap().unwrap();
        assert_eq!((y.rows(), y.cols()), (3, 2));
        assert_eq!(a.mul(&z3, &y).mul(&z3, &a), a);
    }

    #[test]
    fn nilpotent_over_z4_blocks_have_no_witness() {
        let z4 = Ring::modular(4);
        let a = Matrix::from_ints(&z4, &[&[2, 0], &[0, 1]]);
        assert_eq!(matrix_vnr_witness(&z4, &a).unwrap(), None);
    }
}
