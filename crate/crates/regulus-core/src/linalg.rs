//! Exact dense linear algebra over coefficient rings.
//!
//! Gaussian elimination requires a field (Q or F_p). Over Z/n only a
//! unit-pivot variant is provided, sufficient for the triangular and
//! permutation-like matrices that arise from basis maps.

use alloc::{vec, vec::Vec};

use crate::ring::{CoeffRing, Scalar};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LinAlgError {
    /// The operation needs a field (or at least unit pivots) and the ring
    /// cannot supply them.
    UnsupportedRing,
    ShapeMismatch,
}

/// Dense matrix with entries in a fixed ring, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    pub rows: usize,
    pub cols: usize,
    pub data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(ring: &CoeffRing, rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![ring.zero(); rows * cols],
        }
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Scalar) {
        self.data[i * self.cols + j] = v;
    }
}

fn swap_rows(m: &mut Matrix, a: usize, b: usize) {
    if a == b {
        return;
    }
    for j in 0..m.cols {
        m.data.swap(a * m.cols + j, b * m.cols + j);
    }
}

/// Reduced row echelon form in place; returns the pivot column of each pivot
/// row. Requires a field.
fn rref(ring: &CoeffRing, m: &mut Matrix) -> Result<Vec<usize>, LinAlgError> {
    if !ring.is_field() {
        return Err(LinAlgError::UnsupportedRing);
    }
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..m.cols {
        let Some(pr) = (row..m.rows).find(|&r| !ring.is_zero(m.at(r, col))) else {
            continue;
        };
        swap_rows(m, row, pr);
        let inv = ring.try_invert(m.at(row, col)).expect("field pivot");
        for j in col..m.cols {
            let v = ring.mul(m.at(row, j), &inv);
            m.set(row, j, v);
        }
        for r in 0..m.rows {
            if r != row && !ring.is_zero(m.at(r, col)) {
                let factor = m.at(r, col).clone();
                for j in col..m.cols {
                    let v = ring.sub(m.at(r, j), &ring.mul(&factor, m.at(row, j)));
                    m.set(r, j, v);
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.rows {
            break;
        }
    }
    Ok(pivots)
}

/// Solves M x = b over a field. Returns one solution (free variables set to
/// zero) or None when inconsistent.
pub fn solve(ring: &CoeffRing, m: &Matrix, b: &[Scalar]) -> Result<Option<Vec<Scalar>>, LinAlgError> {
    if b.len() != m.rows {
        return Err(LinAlgError::ShapeMismatch);
    }
    let mut aug = Matrix::zeros(ring, m.rows, m.cols + 1);
    for i in 0..m.rows {
        for j in 0..m.cols {
            aug.set(i, j, m.at(i, j).clone());
        }
        aug.set(i, m.cols, b[i].clone());
    }
    let pivots = rref(ring, &mut aug)?;
    if pivots.last() == Some(&m.cols) {
        return Ok(None); // pivot in the constant column: inconsistent
    }
    let mut x = vec![ring.zero(); m.cols];
    for (row, &col) in pivots.iter().enumerate() {
        x[col] = aug.at(row, m.cols).clone();
    }
    Ok(Some(x))
}

/// Basis of the kernel of M over a field.
pub fn kernel_basis(ring: &CoeffRing, m: &Matrix) -> Result<Vec<Vec<Scalar>>, LinAlgError> {
    let mut work = m.clone();
    let pivots = rref(ring, &mut work)?;
    let mut is_pivot = vec![false; m.cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for free in 0..m.cols {
        if is_pivot[free] {
            continue;
        }
        let mut v = vec![ring.zero(); m.cols];
        v[free] = ring.one();
        for (row, &col) in pivots.iter().enumerate() {
            v[col] = ring.neg(work.at(row, free));
        }
        basis.push(v);
    }
    Ok(basis)
}

pub fn rank(ring: &CoeffRing, m: &Matrix) -> Result<usize, LinAlgError> {
    let mut work = m.clone();
    Ok(rref(ring, &mut work)?.len())
}

/// Whether a square matrix is invertible over the ring.
///
/// Over a field this is a rank computation. Over Z/n it is elimination with
/// unit pivots; if no unit pivot can be found in some column the question is
/// not settled by this routine and `UnsupportedRing` is returned.
pub fn is_invertible_matrix(ring: &CoeffRing, m: &Matrix) -> Result<bool, LinAlgError> {
    if m.rows != m.cols {
        return Ok(false);
    }
    if ring.is_field() {
        return Ok(rank(ring, m)? == m.rows);
    }
    let mut work = m.clone();
    for col in 0..work.cols {
        let pivot = (col..work.rows).find(|&r| ring.try_invert(work.at(r, col)).is_ok());
        let Some(pr) = pivot else {
            if (col..work.rows).all(|r| ring.is_zero(work.at(r, col))) {
                return Ok(false); // zero column below the diagonal: singular
            }
            return Err(LinAlgError::UnsupportedRing);
        };
        swap_rows(&mut work, col, pr);
        let inv = ring.try_invert(work.at(col, col)).expect("unit pivot");
        for j in col..work.cols {
            let v = ring.mul(work.at(col, j), &inv);
            work.set(col, j, v);
        }
        for r in 0..work.rows {
            if r != col && !ring.is_zero(work.at(r, col)) {
                let factor = work.at(r, col).clone();
                for j in col..work.cols {
                    let v = ring.sub(work.at(r, j), &ring.mul(&factor, work.at(col, j)));
                    work.set(r, j, v);
                }
            }
        }
    }
    Ok(true)
}
