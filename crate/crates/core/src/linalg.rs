//! Dense exact linear algebra over F_p.
//!
//! Row reduction keeps entries as unreduced `u32` and only folds them back
//! into `[0, p)` when the next batch of updates could overflow: each
//! elimination step adds at most `(p-1)^2` to an entry.

use crate::field::PrimeField;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FpMatrix {
    field: PrimeField,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
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
            m.set(i, i, 1);
        }
        m
    }

    /// Builds from signed entries, reducing mod p.
    pub fn from_rows(field: PrimeField, rows: &[Vec<i64>]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let mut m = Self::zeros(field, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged matrix");
            for (j, &x) in r.iter().enumerate() {
                m.set(i, j, field.from_i64(x));
            }
        }
        m
    }

    pub fn field(&self) -> PrimeField {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.field.p();
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn mul_vec(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols);
        let p = self.field.p() as u64;
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64 % p).sum();
                (s % p) as u32
            })
            .collect()
    }

    fn row_vecs(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn rank(&self) -> usize {
        Echelon::from_rows(self.field, self.row_vecs(), self.cols).rank()
    }

    /// Reduced echelon basis of the right kernel {v : M v = 0}.
    pub fn kernel_basis(&self) -> Vec<Vec<u32>> {
        let ech = Echelon::from_rows(self.field, self.row_vecs(), self.cols);
        ech.kernel()
    }
}

/// Reduced row echelon form: every pivot is 1 and is the only nonzero entry
/// in its column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Echelon {
    field: PrimeField,
    cols: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn empty(field: PrimeField, cols: usize) -> Self {
        Self {
            field,
            cols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    /// Row-reduces `rows` (each of length `cols`, entries in `[0, p)`).
    pub fn from_rows(field: PrimeField, mut rows: Vec<Vec<u32>>, cols: usize) -> Self {
        let pivots = rref_in_place(field, &mut rows, cols);
        Self {
            field,
            cols,
            rows,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn rows(&self) -> &[Vec<u32>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn into_rows(self) -> Vec<Vec<u32>> {
        self.rows
    }

    /// Reduces `v` modulo the row space in place.
    pub fn reduce(&self, v: &mut [u32]) {
        let f = self.field;
        let p = f.p();
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            let e = v[c];
            if e != 0 {
                let m = p - e;
                for (a, &b) in v[c..].iter_mut().zip(&row[c..]) {
                    if b != 0 {
                        *a = ((*a as u64 + m as u64 * b as u64) % p as u64) as u32;
                    }
                }
            }
        }
    }

    pub fn contains(&self, v: &[u32]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(|&x| x == 0)
    }

    /// Adds `v` to the row space; returns whether the rank grew.
    pub fn insert(&mut self, v: &[u32]) -> bool {
        let f = self.field;
        let mut w = v.to_vec();
        self.reduce(&mut w);
        let Some(c) = w.iter().position(|&x| x != 0) else {
            return false;
        };
        let inv = f.inv(w[c]).expect("nonzero");
        for x in w.iter_mut() {
            *x = f.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            let e = row[c];
            if e != 0 {
                let m = f.neg(e);
                for (a, &b) in row.iter_mut().zip(&w) {
                    *a = f.add(*a, f.mul(m, b));
                }
            }
        }
        let pos = self.pivots.partition_point(|&q| q < c);
        self.pivots.insert(pos, c);
        self.rows.insert(pos, w);
        true
    }

    /// Coordinates of a vector known to lie in the row space. With a reduced
    /// basis these are simply its entries at the pivot columns.
    pub fn coordinates(&self, v: &[u32]) -> Vec<u32> {
        self.pivots.iter().map(|&c| v[c]).collect()
    }

    /// Reduced echelon basis of the right kernel of this matrix.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let f = self.field;
        let mut is_pivot = vec![false; self.cols];
        for &c in &self.pivots {
            is_pivot[c] = true;
        }
        let free: Vec<usize> = (0..self.cols).filter(|&j| !is_pivot[j]).collect();
        let raw: Vec<Vec<u32>> = free
            .iter()
            .map(|&j| {
                let mut v = vec![0u32; self.cols];
                v[j] = 1;
                for (row, &c) in self.rows.iter().zip(&self.pivots) {
                    v[c] = f.neg(row[j]);
                }
                v
            })
            .collect();
        Echelon::from_rows(f, raw, self.cols).into_rows()
    }
}

fn reduce_row(p: u32, row: &mut [u32]) {
    for x in row.iter_mut() {
        if *x >= p {
            *x %= p;
        }
    }
}

/// Gauss-Jordan elimination; leaves `rows` as the nonzero rows of the RREF
/// and returns the pivot columns.
fn rref_in_place(field: PrimeField, rows: &mut Vec<Vec<u32>>, cols: usize) -> Vec<usize> {
    let p = field.p();
    let step = (p - 1) * (p - 1);
    let limit = if step == 0 {
        usize::MAX
    } else {
        ((u32::MAX - p) / step) as usize
    };
    let n = rows.len();
    let mut pivots = Vec::new();
    let mut rank = 0;
    let mut pending = 0usize;

    for c in 0..cols {
        if rank == n {
            break;
        }
        let Some(piv) = (rank..n).find(|&r| !rows[r][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(rank, piv);
        {
            let pr = &mut rows[rank];
            for x in pr[..c].iter_mut() {
                *x = 0;
            }
            reduce_row(p, &mut pr[c..]);
            let inv = field.inv(pr[c]).expect("nonzero pivot");
            if inv != 1 {
                for x in pr[c..].iter_mut() {
                    *x = field.mul(*x, inv);
                }
            }
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pr = &top[rank][c..];
        for r in bottom.iter_mut() {
            let e = r[c] % p;
            if e != 0 {
                let m = p - e;
                for (a, &b) in r[c..].iter_mut().zip(pr) {
                    *a += m * b;
                }
            }
        }
        pivots.push(c);
        rank += 1;
        pending += 1;
        if pending >= limit {
            for r in rows[rank..].iter_mut() {
                reduce_row(p, r);
            }
            pending = 0;
        }
    }
    rows.truncate(rank);

    // back substitution, bottom pivot first
    pending = 0;
    for i in (0..rank).rev() {
        let c = pivots[i];
        reduce_row(p, &mut rows[i][c..]);
        let (top, rest) = rows.split_at_mut(i);
        let pr = &rest[0][c..];
        for r in top.iter_mut() {
            let e = r[c] % p;
            if e != 0 {
                let m = p - e;
                for (a, &b) in r[c..].iter_mut().zip(pr) {
                    *a += m * b;
                }
            } else {
                r[c] = 0;
            }
        }
        pending += 1;
        if pending >= limit {
            for r in rows[..i].iter_mut() {
                reduce_row(p, r);
            }
            pending = 0;
        }
    }
    for r in rows.iter_mut() {
        reduce_row(p, r);
    }
    pivots
}
