//! Dense matrices over `F_p` and Gaussian elimination.
//!
//! Pivoting is deterministic: the pivot of each column is the first nonzero
//! entry at or below the current row, so every routine here is reproducible.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::error::{Error, Result};
use crate::field::PrimeField;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Debug, Clone)]
pub struct Echelon {
    pub rref: FpMatrix,
    pub pivots: Vec<usize>,
}

impl Echelon {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl FpMatrix {
    pub fn zeros(field: PrimeField, rows: usize, cols: usize) -> Self {
        Self {
            field,
            rows,
            cols,
            data: vec![0; rows * cols],
        }
    }

    pub fn identity(field: PrimeField, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    /// Builds a matrix from row-major residues; entries are reduced mod p.
    pub fn from_vec(field: PrimeField, rows: usize, cols: usize, data: Vec<u32>) -> Self {
        assert_eq!(
            data.len(),
            rows * cols,
            "entry count must equal rows * cols"
        );
        let p = field.p();
        let data = data.into_iter().map(|v| v % p).collect();
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    pub fn from_rows(field: PrimeField, rows: &[Vec<u32>]) -> Self {
        let cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        Self::from_vec(field, rows.len(), cols, data)
    }

    /// Matrix whose columns are the given vectors. `len` is the column length,
    /// needed when `columns` is empty.
    pub fn from_columns(field: PrimeField, len: usize, columns: &[Vec<u32>]) -> Self {
        let mut m = Self::zeros(field, len, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), len);
            for (i, &v) in c.iter().enumerate() {
                m.data[i * m.cols + j] = v % field.p();
            }
        }
        m
    }

    pub fn from_fn(
        field: PrimeField,
        rows: usize,
        cols: usize,
        mut f: impl FnMut(usize, usize) -> u32,
    ) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j) % field.p());
            }
        }
        Self {
            field,
            rows,
            cols,
            data,
        }
    }

    #[inline]
    pub fn field(&self) -> PrimeField {
        self.field
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[u32] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&v| v == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.rows, "dimension mismatch in product");
        let p = self.field.p() as u64;
        let mut out = vec![0u64; self.rows * rhs.cols];
        for i in 0..self.rows {
            let acc = &mut out[i * rhs.cols..(i + 1) * rhs.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let r = &rhs.data[k * rhs.cols..(k + 1) * rhs.cols];
                for (o, &b) in acc.iter_mut().zip(r) {
                    *o += a * b as u64;
                }
            }
            // Bounded by cols * 96^2 < 2^64 for every size used here.
            for o in acc.iter_mut() {
                *o %= p;
            }
        }
        Self {
            field: self.field,
            rows: self.rows,
            cols: rhs.cols,
            data: out.into_iter().map(|v| v as u32).collect(),
        }
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(self.cols, v.len());
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self
                    .row(i)
                    .iter()
                    .zip(v)
                    .map(|(&a, &b)| a as u64 * b as u64)
                    .sum();
                (s % p) as u32
            })
            .collect()
    }

    pub fn add(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.add(a, b))
            .collect();
        Self {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn sub(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        let f = self.field;
        let data = self
            .data
            .iter()
            .zip(&rhs.data)
            .map(|(&a, &b)| f.sub(a, b))
            .collect();
        Self {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    pub fn scale(&self, c: u32) -> FpMatrix {
        let f = self.field;
        let data = self.data.iter().map(|&a| f.mul(a, c % f.p())).collect();
        Self {
            field: f,
            rows: self.rows,
            cols: self.cols,
            data,
        }
    }

    /// Kronecker product `self ⊗ rhs`.
    pub fn kron(&self, rhs: &FpMatrix) -> FpMatrix {
        let f = self.field;
        Self::from_fn(f, self.rows * rhs.rows, self.cols * rhs.cols, |i, j| {
            f.mul(
                self.get(i / rhs.rows, j / rhs.cols),
                rhs.get(i % rhs.rows, j % rhs.cols),
            )
        })
    }

    pub fn hstack(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.rows, rhs.rows);
        Self::from_fn(self.field, self.rows, self.cols + rhs.cols, |i, j| {
            if j < self.cols {
                self.get(i, j)
            } else {
                rhs.get(i, j - self.cols)
            }
        })
    }

    pub fn vstack(&self, rhs: &FpMatrix) -> FpMatrix {
        assert_eq!(self.cols, rhs.cols);
        let mut data = self.data.clone();
        data.extend_from_slice(&rhs.data);
        Self {
            field: self.field,
            rows: self.rows + rhs.rows,
            cols: self.cols,
            data,
        }
    }

    /// Block-diagonal sum.
    pub fn direct_sum(&self, rhs: &FpMatrix) -> FpMatrix {
        let mut m = Self::zeros(self.field, self.rows + rhs.rows, self.cols + rhs.cols);
        for i in 0..self.rows {
            for j in 0..self.cols {
                m.data[i * m.cols + j] = self.get(i, j);
            }
        }
        for i in 0..rhs.rows {
            for j in 0..rhs.cols {
                m.data[(i + self.rows) * m.cols + j + self.cols] = rhs.get(i, j);
            }
        }
        m
    }

    /// Submatrix made of the listed columns, in order.
    pub fn select_columns(&self, cols: &[usize]) -> FpMatrix {
        Self::from_fn(self.field, self.rows, cols.len(), |i, j| {
            self.get(i, cols[j])
        })
    }

    pub fn select_rows(&self, rows: &[usize]) -> FpMatrix {
        Self::from_fn(self.field, rows.len(), self.cols, |i, j| {
            self.get(rows[i], j)
        })
    }

    /// Reduced row echelon form.
    pub fn echelon(&self) -> Echelon {
        let mut m = self.clone();
        let pivots = m.rref_in_place(self.cols);
        Echelon { rref: m, pivots }
    }

    /// Row-reduces in place using only the first `limit` columns as pivot
    /// candidates; the remaining columns are carried along. Returns pivots.
    fn rref_in_place(&mut self, limit: usize) -> Vec<usize> {
        let f = self.field;
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..limit {
            if r == self.rows {
                break;
            }
            let Some(pr) = (r..self.rows).find(|&i| self.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(self.data[r * cols + c]);
            for j in c..cols {
                let v = &mut self.data[r * cols + j];
                *v = f.mul(*v, inv);
            }
            let (before, rest) = self.data.split_at_mut(r * cols);
            let (pivot_row, after) = rest.split_at_mut(cols);
            for other in before
                .chunks_exact_mut(cols)
                .chain(after.chunks_exact_mut(cols))
            {
                let factor = other[c];
                if factor == 0 {
                    continue;
                }
                let neg = f.neg(factor);
                for j in c..cols {
                    if pivot_row[j] != 0 {
                        other[j] = f.add(other[j], f.mul(neg, pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.echelon().rank()
    }

    /// Columns spanning `ker(self)`: one basis vector per non-pivot column.
    pub fn kernel_basis(&self) -> FpMatrix {
        let ech = self.echelon();
        kernel_from_echelon(&ech, self.cols)
    }

    /// One solution of `self · x = b`, or the inconsistency certificate.
    pub fn solve_linear(&self, b: &[u32]) -> Result<Vec<u32>> {
        assert_eq!(
            self.rows,
            b.len(),
            "right-hand side length must equal row count"
        );
        let aug = self.hstack(&FpMatrix::from_columns(
            self.field,
            self.rows,
            &[b.to_vec()],
        ));
        let mut m = aug;
        let pivots = m.rref_in_place(self.cols + 1);
        if let Some(idx) = pivots.iter().position(|&c| c == self.cols) {
            return Err(Error::Inconsistent {
                certificate: m.row(idx).to_vec(),
            });
        }
        let mut x = vec![0; self.cols];
        for (i, &c) in pivots.iter().enumerate() {
            x[c] = m.get(i, self.cols);
        }
        Ok(x)
    }

    pub fn inverse(&self) -> Option<FpMatrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        let mut m = self.hstack(&FpMatrix::identity(self.field, n));
        let pivots = m.rref_in_place(n);
        if pivots.len() < n {
            return None;
        }
        Some(Self::from_fn(self.field, n, n, |i, j| m.get(i, n + j)))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    /// Precomputes elimination data for repeated solves against `self`.
    pub fn solver(&self) -> LinearSolver {
        let m_rows = self.rows;
        let mut m = self.hstack(&FpMatrix::identity(self.field, m_rows));
        let pivots = m.rref_in_place(self.cols);
        let transform = Self::from_fn(self.field, m_rows, m_rows, |i, j| m.get(i, self.cols + j));
        let rref = Self::from_fn(self.field, m_rows, self.cols, |i, j| m.get(i, j));
        let kernel = kernel_from_echelon(
            &Echelon {
                rref,
                pivots: pivots.clone(),
            },
            self.cols,
        );
        LinearSolver {
            transform,
            pivots,
            cols: self.cols,
            kernel,
        }
    }

    /// Column-space basis: the pivot columns of `self`, in order.
    pub fn column_space(&self) -> FpMatrix {
        let ech = self.echelon();
        self.select_columns(&ech.pivots)
    }
}

fn kernel_from_echelon(ech: &Echelon, cols: usize) -> FpMatrix {
    let f = ech.rref.field;
    let mut is_pivot = vec![false; cols];
    for &c in &ech.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..cols).filter(|&c| !is_pivot[c]).collect();
    let mut k = FpMatrix::zeros(f, cols, free.len());
    for (j, &fc) in free.iter().enumerate() {
        k.data[fc * k.cols + j] = 1;
        for (i, &pc) in ech.pivots.iter().enumerate() {
            k.data[pc * k.cols + j] = f.neg(ech.rref.get(i, fc));
        }
    }
    k
}

impl fmt::Debug for FpMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "FpMatrix {}x{} over F_{}",
            self.rows,
            self.cols,
            self.field.p()
        )?;
        for i in 0..self.rows {
            writeln!(f, "  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Solves `A x = b` for many right-hand sides against one fixed `A`.
#[derive(Debug, Clone)]
pub struct LinearSolver {
    transform: FpMatrix,
    pivots: Vec<usize>,
    cols: usize,
    kernel: FpMatrix,
}

impl LinearSolver {
    pub fn solve(&self, b: &[u32]) -> Option<Vec<u32>> {
        let c = self.transform.mul_vec(b);
        let r = self.pivots.len();
        if c[r..].iter().any(|&v| v != 0) {
            return None;
        }
        let mut x = vec![0; self.cols];
        for (i, &pc) in self.pivots.iter().enumerate() {
            x[pc] = c[i];
        }
        Some(x)
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Kernel basis of `A`, as columns.
    pub fn kernel(&self) -> &FpMatrix {
        &self.kernel
    }
}

/// An incrementally built, fully reduced row-echelon basis of a subspace of
/// `F_p^len`.
#[derive(Debug, Clone)]
pub struct EchelonBasis {
    field: PrimeField,
    len: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, len: usize) -> Self {
        Self {
            field,
            len,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_vectors<'a>(
        field: PrimeField,
        len: usize,
        vs: impl IntoIterator<Item = &'a [u32]>,
    ) -> Self {
        let mut b = Self::new(field, len);
        for v in vs {
            b.insert(v);
        }
        b
    }

    /// Span of the columns of `m`.
    pub fn from_columns(m: &FpMatrix) -> Self {
        let mut b = Self::new(m.field(), m.rows());
        for c in m.columns() {
            b.insert(&c);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ambient_dim(&self) -> usize {
        self.len
    }

    pub fn vectors(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Canonical remainder of `v` modulo the subspace.
    pub fn reduce(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.len);
        let f = self.field;
        let mut w = v.to_vec();
        for (row, &pc) in self.rows.iter().zip(&self.pivots) {
            let c = w[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in w.iter_mut().zip(row) {
                if r != 0 {
                    *x = f.add(*x, f.mul(neg, r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        self.reduce(v).iter().all(|&x| x == 0)
    }

    /// Adds `v`; returns whether the dimension grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut w = self.reduce(v);
        let Some(pc) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[pc]);
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let c = row[pc];
            if c == 0 {
                continue;
            }
            let neg = f.neg(c);
            for (x, &r) in row.iter_mut().zip(&w) {
                if r != 0 {
                    *x = f.add(*x, f.mul(neg, r));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < pc);
        self.pivots.insert(pos, pc);
        self.rows.insert(pos, w);
        true
    }

    /// Standard basis vectors on the non-pivot coordinates; together with the
    /// subspace they span the ambient space.
    pub fn complement(&self) -> Vec<Vec<u32>> {
        (0..self.len)
            .filter(|c| self.pivots.binary_search(c).is_err())
            .map(|c| {
                let mut e = vec![0; self.len];
                e[c] = 1;
                e
            })
            .collect()
    }

    /// The basis as the columns of a matrix.
    pub fn to_columns(&self) -> FpMatrix {
        FpMatrix::from_columns(self.field, self.len, &self.rows)
    }

    pub fn is_subspace_of(&self, other: &EchelonBasis) -> bool {
        self.rows.iter().all(|r| other.contains(r))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(p: u32) -> PrimeField {
        PrimeField::new(p).unwrap()
    }

    /// Multiplication by `y` on `F_p[y]/(y^n)` in the monomial basis.
    fn shift(field: PrimeField, n: usize, by: usize) -> FpMatrix {
        FpMatrix::from_fn(field, n, n, |i, j| u32::from(i == j + by))
    }

    #[test]
    fn kernel_of_zero_map_is_everything() {
        let k = FpMatrix::zeros(f(2), 3, 3).kernel_basis();
        assert_eq!(k, FpMatrix::identity(f(2), 3));
    }

    #[test]
    fn kernel_of_identity_is_empty() {
        let k = FpMatrix::identity(f(3), 4).kernel_basis();
        assert_eq!(k.cols(), 0);
        assert_eq!(k.rows(), 4);
    }

    #[test]
    fn kernel_of_multiplication_by_y_in_truncated_ring() {
        // Oracle: enumerate all 16 elements of F_2[y]/(y^4) and keep those killed by y.
        let field = f(2);
        let a = shift(field, 4, 1);
        let mut killed = Vec::new();
        for bits in 0u32..16 {
            let v: Vec<u32> = (0..4).map(|i| (bits >> i) & 1).collect();
            if a.mul_vec(&v).iter().all(|&x| x == 0) {
                killed.push(v);
            }
        }
        assert_eq!(killed, vec![vec![0, 0, 0, 0], vec![0, 0, 0, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![0, 0, 0, 1]);
    }

    #[test]
    fn solve_identity_and_zero() {
        let field = f(5);
        let b = vec![1, 4, 2];
        assert_eq!(FpMatrix::identity(field, 3).solve_linear(&b).unwrap(), b);
        match FpMatrix::zeros(field, 3, 3).solve_linear(&b) {
            Err(Error::Inconsistent { certificate }) => {
                assert_eq!(&certificate[..3], &[0, 0, 0]);
                assert_eq!(certificate[3], 1);
            }
            other => panic!("expected inconsistency, got {other:?}"),
        }
    }

    #[test]
    fn solve_in_truncated_ring() {
        // Multiplication by (x - 1) on F_3[x]/((x-1)^3), written in the basis 1, u, u^2 with
        // u = x - 1, is the shift. Enumerating all 27 candidates finds exactly the
        // solutions {1 + c u^2}.
        let field = f(3);
        let a = shift(field, 3, 1);
        let b = vec![0, 1, 0];
        let mut sols = Vec::new();
        for n in 0..27u32 {
            let v = vec![n % 3, (n / 3) % 3, n / 9];
            if a.mul_vec(&v) == b {
                sols.push(v);
            }
        }
        assert_eq!(sols, vec![vec![1, 0, 0], vec![1, 0, 1], vec![1, 0, 2]]);
        let x = a.solve_linear(&b).unwrap();
        assert!(sols.contains(&x));
        assert_eq!(a.solver().solve(&b).unwrap(), x);
    }

    #[test]
    fn inverse_round_trip() {
        let field = f(7);
        let a = FpMatrix::from_rows(field, &[vec![2, 1], vec![5, 3]]);
        let inv = a.inverse().unwrap();
        assert_eq!(a.mul(&inv), FpMatrix::identity(field, 2));
        assert!(FpMatrix::from_rows(field, &[vec![1, 2], vec![2, 4]])
            .inverse()
            .is_none());
    }

    #[test]
    fn echelon_basis_complement_spans() {
        let field = f(3);
        let mut b = EchelonBasis::new(field, 4);
        assert!(b.insert(&[1, 2, 0, 1]));
        assert!(!b.insert(&[2, 1, 0, 2]));
        assert!(b.insert(&[0, 0, 1, 1]));
        let mut all = b.clone();
        for c in b.complement() {
            assert!(all.insert(&c));
        }
        assert_eq!(all.dim(), 4);
    }
}
