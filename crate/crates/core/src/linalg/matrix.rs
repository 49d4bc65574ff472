use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// Dense row-major matrix over a [`FieldSpec`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    entries: Vec<FieldElement>,
}

/// Reduced row echelon form: the nonzero rows and their pivot columns.
#[derive(Debug, Clone)]
pub struct Rref {
    pub rows: Vec<Vec<FieldElement>>,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl Matrix {
    pub fn new(field: FieldSpec, rows: usize, cols: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != rows * cols {
            return Err(Error::Shape(format!("{} entries for a {rows}x{cols} matrix", entries.len())));
        }
        if let Some(e) = entries.iter().find(|e| e.field() != field) {
            return Err(Error::FieldMismatch(field, e.field()));
        }
        Ok(Matrix { field, rows, cols, entries })
    }

    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, entries: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Matrix::zeros(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<FieldElement>>) -> Result<Self> {
        let n = rows.len();
        if let Some(r) = rows.iter().find(|r| r.len() != cols) {
            return Err(Error::Shape(format!("row of length {} in a {cols}-column matrix", r.len())));
        }
        Matrix::new(field, n, cols, rows.into_iter().flatten().collect())
    }

    pub fn from_i64(field: FieldSpec, rows: &[&[i64]]) -> Result<Self> {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows.iter().map(|r| r.iter().map(|&v| field.from_i64(v)).collect()).collect();
        Matrix::from_rows(field, cols, rows)
    }

    /// Matrix whose columns are the given vectors.
    pub fn from_columns(field: FieldSpec, rows: usize, columns: &[Vec<FieldElement>]) -> Result<Self> {
        let mut m = Matrix::zeros(field, rows, columns.len());
        for (c, col) in columns.iter().enumerate() {
            if col.len() != rows {
                return Err(Error::Shape(format!("column of length {} for {rows} rows", col.len())));
            }
            for (r, v) in col.iter().enumerate() {
                if v.field() != field {
                    return Err(Error::FieldMismatch(field, v.field()));
                }
                m.set(r, c, v.clone());
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &FieldElement {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FieldElement) {
        self.entries[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[FieldElement] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows).map(|r| self.get(r, c).clone()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(FieldElement::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.field != rhs.field {
            return Err(Error::FieldMismatch(self.field, rhs.field));
        }
        if self.cols != rhs.rows {
            return Err(Error::Shape(format!("{}x{} times {}x{}", self.rows, self.cols, rhs.rows, rhs.cols)));
        }
        let mut out = Matrix::zeros(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if !b.is_zero() {
                        let v = &out.entries[r * rhs.cols + c] + &(a * b);
                        out.entries[r * rhs.cols + c] = v;
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols {
            return Err(Error::Shape(format!("vector of length {} for {} columns", v.len(), self.cols)));
        }
        Ok((0..self.rows)
            .map(|r| self.row(r).iter().zip(v).fold(self.field.zero(), |acc, (a, b)| &acc + &(a * b)))
            .collect())
    }

    /// Exact rank. Prime fields eliminate on raw residues; rationals use
    /// fraction-free (Bareiss) elimination after clearing row denominators.
    pub fn rank(&self) -> usize {
        if self.rows == 0 || self.cols == 0 {
            return 0;
        }
        match self.field {
            FieldSpec::Prime(p) => {
                let rows = (0..self.rows).map(|r| self.row(r).iter().map(|e| e.residue().unwrap()).collect()).collect();
                rank_mod_p(rows, self.cols, p)
            }
            FieldSpec::Rationals => {
                let rows = (0..self.rows).map(|r| integer_row(self.row(r))).collect();
                rank_bareiss(rows, self.cols)
            }
        }
    }

    pub fn rref(&self) -> Rref {
        let rows = (0..self.rows).map(|r| self.row(r).to_vec()).collect();
        let (rows, pivots, _) = row_reduce(rows, self.cols, None);
        Rref { rows, pivots }
    }

    /// Basis of the right kernel, one vector per free column.
    pub fn kernel_basis(&self) -> Vec<Vec<FieldElement>> {
        let rref = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &rref.pivots {
            is_pivot[p] = true;
        }
        (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (row, &p) in rref.rows.iter().zip(&rref.pivots) {
                    v[p] = -&row[free];
                }
                v
            })
            .collect()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

fn rank_mod_p(mut a: Vec<Vec<u64>>, cols: usize, p: u64) -> usize {
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&r| a[r][c] != 0) else {
            continue;
        };
        a.swap(rank, pr);
        let inv = super::field::FieldSpec::Prime(p).from_u64(a[rank][c]).inverse().unwrap().residue().unwrap();
        for j in c..cols {
            a[rank][j] = a[rank][j] * inv % p;
        }
        for r in rank + 1..a.len() {
            let factor = a[r][c];
            if factor == 0 {
                continue;
            }
            for j in c..cols {
                a[r][j] = (a[r][j] + (p - factor) * a[rank][j]) % p;
            }
        }
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

fn integer_row(row: &[FieldElement]) -> Vec<BigInt> {
    let lcm = row.iter().map(|e| e.as_rational().unwrap().denom().clone()).fold(BigInt::one(), |acc, d| acc.lcm(&d));
    row.iter()
        .map(|e| {
            let r = e.as_rational().unwrap();
            r.numer() * (&lcm / r.denom())
        })
        .collect()
}

fn rank_bareiss(mut a: Vec<Vec<BigInt>>, cols: usize) -> usize {
    let mut rank = 0;
    let mut prev = BigInt::one();
    for c in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        let (head, tail) = a.split_at_mut(rank + 1);
        let pivot_row = &head[rank];
        for row in tail.iter_mut() {
            for j in c + 1..cols {
                row[j] = (&row[j] * &pivot_row[c] - &row[c] * &pivot_row[j]) / &prev;
            }
            row[c] = BigInt::zero();
        }
        prev = pivot_row[c].clone();
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    rank
}

/// Gauss-Jordan elimination with first-nonzero pivoting over the first
/// `cols` columns. When `track` holds the identity-sized transform, it is
/// updated so that `result rows = transform * original rows`.
pub(crate) fn row_reduce(
    mut a: Vec<Vec<FieldElement>>,
    cols: usize,
    mut track: Option<&mut Vec<Vec<FieldElement>>>,
) -> (Vec<Vec<FieldElement>>, Vec<usize>, usize) {
    let mut pivots = Vec::new();
    let mut rank = 0;
    for c in 0..cols {
        let Some(pr) = (rank..a.len()).find(|&r| !a[r][c].is_zero()) else {
            continue;
        };
        a.swap(rank, pr);
        if let Some(t) = track.as_deref_mut() {
            t.swap(rank, pr);
        }
        let inv = a[rank][c].inverse().expect("pivot is nonzero");
        for v in a[rank].iter_mut() {
            *v = &*v * &inv;
        }
        if let Some(t) = track.as_deref_mut() {
            for v in t[rank].iter_mut() {
                *v = &*v * &inv;
            }
        }
        for r in 0..a.len() {
            if r == rank || a[r][c].is_zero() {
                continue;
            }
            let factor = a[r][c].clone();
            for j in 0..a[r].len() {
                if !a[rank][j].is_zero() {
                    a[r][j] = &a[r][j] - &(&factor * &a[rank][j]);
                }
            }
            if let Some(t) = track.as_deref_mut() {
                for j in 0..t[r].len() {
                    if !t[rank][j].is_zero() {
                        t[r][j] = &t[r][j] - &(&factor * &t[rank][j]);
                    }
                }
            }
        }
        pivots.push(c);
        rank += 1;
        if rank == a.len() {
            break;
        }
    }
    a.truncate(rank);
    if let Some(t) = track {
        t.truncate(rank);
    }
    (a, pivots, rank)
}

/// Rank of a set of vectors of equal length.
pub fn rank_of_vectors(field: FieldSpec, len: usize, vectors: &[Vec<FieldElement>]) -> usize {
    let entries = vectors.iter().flatten().cloned().collect();
    Matrix::new(field, vectors.len(), len, entries).expect("vectors share a length").rank()
}
