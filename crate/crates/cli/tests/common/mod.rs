//! Brute-force reference implementation used only by tests.
//!
//! Nothing here calls the engine: polynomials are hash maps from exponent
//! vectors, σ is expanded variable by variable, and ranks come from a plain
//! u64 Gaussian elimination. Variable indices follow the documented global
//! order (summand by summand, deepest variable first), so exponent vectors
//! can be compared with the engine's monomials directly.

#![allow(dead_code)]

use std::collections::HashMap;

use modinv_core::{ModuleSpec, Polynomial};

pub type Exps = Vec<u16>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    pub p: u64,
    pub n: usize,
    pub terms: HashMap<Exps, u64>,
}

impl Poly {
    pub fn zero(p: u64, n: usize) -> Self {
        Self {
            p,
            n,
            terms: HashMap::new(),
        }
    }

    pub fn one(p: u64, n: usize) -> Self {
        Self::monomial(p, vec![0; n], 1)
    }

    pub fn monomial(p: u64, e: Exps, c: u64) -> Self {
        let n = e.len();
        let mut out = Self::zero(p, n);
        out.add_term(e, c);
        out
    }

    pub fn var(p: u64, n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Self::monomial(p, e, 1)
    }

    pub fn add_term(&mut self, e: Exps, c: u64) {
        let c = c % self.p;
        if c == 0 {
            return;
        }
        let p = self.p;
        let entry = self.terms.entry(e.clone()).or_insert(0);
        *entry = (*entry + c) % p;
        if *entry == 0 {
            self.terms.remove(&e);
        }
    }

    pub fn add(&self, o: &Poly) -> Poly {
        let mut out = self.clone();
        for (e, &c) in &o.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn scale(&self, c: u64) -> Poly {
        let mut out = Poly::zero(self.p, self.n);
        for (e, &d) in &self.terms {
            out.add_term(e.clone(), c % self.p * d);
        }
        out
    }

    pub fn sub(&self, o: &Poly) -> Poly {
        self.add(&o.scale(self.p - 1))
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut out = Poly::zero(self.p, self.n);
        for (a, &c) in &self.terms {
            for (b, &d) in &o.terms {
                let e: Exps = a.iter().zip(b).map(|(x, y)| x + y).collect();
                out.add_term(e, c * d);
            }
        }
        out
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut out = Poly::one(self.p, self.n);
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, e: &[u16]) -> u64 {
        self.terms.get(e).copied().unwrap_or(0)
    }
}

pub fn from_core(f: &Polynomial) -> Poly {
    let spec = f.spec();
    let n = spec.num_vars();
    let mut out = Poly::zero(spec.p() as u64, n);
    for (m, c) in f.terms() {
        let e: Exps = (0..n).map(|i| m.exponent(i)).collect();
        out.add_term(e, c as u64);
    }
    out
}

/// Layout of the variables: (start index, block size) per summand.
#[derive(Debug, Clone)]
pub struct Layout {
    pub p: u64,
    pub blocks: Vec<usize>,
    pub starts: Vec<usize>,
    pub n: usize,
}

impl Layout {
    pub fn new(p: u32, blocks: &[usize]) -> Self {
        let mut starts = Vec::new();
        let mut n = 0;
        for &d in blocks {
            starts.push(n);
            n += d;
        }
        Self {
            p: p as u64,
            blocks: blocks.to_vec(),
            starts,
            n,
        }
    }

    pub fn of(spec: &ModuleSpec) -> Self {
        Self::new(spec.p(), spec.blocks())
    }

    pub fn summand(&self, i: usize) -> usize {
        (0..self.blocks.len()).rev().find(|&s| self.starts[s] <= i).unwrap()
    }

    /// Index of Δ^t z_s.
    pub fn index(&self, s: usize, t: usize) -> usize {
        self.starts[s] + self.blocks[s] - 1 - t
    }

    pub fn depth(&self, i: usize) -> usize {
        let s = self.summand(i);
        self.starts[s] + self.blocks[s] - 1 - i
    }

    /// σ(v_i) = v_i + Δ v_i, where Δ moves one step deeper (one index down).
    pub fn sigma_var(&self, i: usize) -> Poly {
        let mut out = Poly::var(self.p, self.n, i);
        let s = self.summand(i);
        if i > self.starts[s] {
            out = out.add(&Poly::var(self.p, self.n, i - 1));
        }
        out
    }

    pub fn sigma(&self, f: &Poly) -> Poly {
        let images: Vec<Poly> = (0..self.n).map(|i| self.sigma_var(i)).collect();
        let mut out = Poly::zero(self.p, self.n);
        for (e, &c) in &f.terms {
            let mut t = Poly::monomial(self.p, vec![0; self.n], c);
            for (i, &k) in e.iter().enumerate() {
                if k > 0 {
                    t = t.mul(&images[i].pow(k as u32));
                }
            }
            out = out.add(&t);
        }
        out
    }

    pub fn sigma_pow(&self, f: &Poly, l: u64) -> Poly {
        let mut out = f.clone();
        for _ in 0..l {
            out = self.sigma(&out);
        }
        out
    }

    pub fn transfer(&self, f: &Poly) -> Poly {
        let mut out = Poly::zero(self.p, self.n);
        let mut cur = f.clone();
        for _ in 0..self.p {
            out = out.add(&cur);
            cur = self.sigma(&cur);
        }
        out
    }

    pub fn is_invariant(&self, f: &Poly) -> bool {
        self.sigma(f) == *f
    }

    /// Per-summand degrees of an exponent vector.
    pub fn multidegree(&self, e: &[u16]) -> Vec<u32> {
        (0..self.blocks.len())
            .map(|s| e[self.starts[s]..self.starts[s] + self.blocks[s]].iter().map(|&x| x as u32).sum())
            .collect()
    }
}

/// All exponent vectors in n variables of total degree d.
pub fn monomials(n: usize, d: u32) -> Vec<Exps> {
    fn rec(i: usize, n: usize, left: u32, cur: &mut Exps, out: &mut Vec<Exps>) {
        if i == n - 1 {
            cur[i] = left as u16;
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k as u16;
            rec(i + 1, n, left - k, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        return if d == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    rec(0, n, d, &mut vec![0; n], &mut out);
    out
}

pub fn binom(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Row-reduces `rows` mod p in place and returns the rank. Rows end up in
/// reduced echelon form (first `rank` rows), with pivot columns returned.
pub fn row_reduce(p: u64, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&i| !rows[i][c].is_multiple_of(p)) else {
            continue;
        };
        rows.swap(r, k);
        let inv = modpow(rows[r][c], p - 2, p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x = (*x + (p - f) * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

pub fn rank(p: u64, mut rows: Vec<Vec<u64>>) -> usize {
    row_reduce(p, &mut rows).len()
}

pub fn modpow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    acc
}

pub fn dense(f: &Poly, basis: &[Exps], index: &HashMap<Exps, usize>) -> Vec<u64> {
    let mut v = vec![0; basis.len()];
    for (e, &c) in &f.terms {
        v[index[e]] = c;
    }
    v
}

/// Kernel of σ - 1 on the span of `mons`, as polynomials.
pub fn invariants_on(layout: &Layout, mons: &[Exps]) -> Vec<Poly> {
    let p = layout.p;
    let index: HashMap<Exps, usize> = mons.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let n = mons.len();
    // columns of (σ - 1); compute the kernel of the matrix with those columns
    // by reducing its transpose augmented with the identity.
    let mut rows: Vec<Vec<u64>> = mons
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let m = Poly::monomial(p, e.clone(), 1);
            let img = layout.sigma(&m).sub(&m);
            let mut row = dense(&img, mons, &index);
            let mut id = vec![0; n];
            id[i] = 1;
            row.extend(id);
            row
        })
        .collect();
    // eliminate on the first n columns; rows whose image part vanishes span the kernel
    let pivots = row_reduce(p, &mut rows);
    let img_rank = pivots.iter().filter(|&&c| c < n).count();
    // the identity block keeps all n rows; those past the image pivots have
    // a zero image part and their identity part is a kernel vector
    let mut out = Vec::new();
    for row in rows.into_iter().skip(img_rank) {
        debug_assert!(row[..n].iter().all(|&x| x == 0));
        let mut f = Poly::zero(p, layout.n);
        for (j, &c) in row[n..].iter().enumerate() {
            if c != 0 {
                f.add_term(mons[j].clone(), c);
            }
        }
        out.push(f);
    }
    out
}

/// dim of the invariants of total degree d, from the unblocked σ - 1 matrix.
pub fn invariant_dim(layout: &Layout, d: u32) -> usize {
    let mons = monomials(layout.n, d);
    let index: HashMap<Exps, usize> = mons.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let rows: Vec<Vec<u64>> = mons
        .iter()
        .map(|e| {
            let m = Poly::monomial(layout.p, e.clone(), 1);
            dense(&layout.sigma(&m).sub(&m), &mons, &index)
        })
        .collect();
    mons.len() - rank(layout.p, rows)
}

/// Monomials of a fixed multidegree.
pub fn monomials_multi(layout: &Layout, mu: &[u32]) -> Vec<Exps> {
    let total: u32 = mu.iter().sum();
    monomials(layout.n, total)
        .into_iter()
        .filter(|e| layout.multidegree(e) == mu)
        .collect()
}

/// Whether the invariant h (multihomogeneous of multidegree mu) is a
/// polynomial in invariants of lower degree.
pub fn is_decomposable(layout: &Layout, h: &Poly, mu: &[u32]) -> bool {
    let target = monomials_multi(layout, mu);
    let index: HashMap<Exps, usize> = target.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
    let mut cache: HashMap<Vec<u32>, Vec<Poly>> = HashMap::new();
    let mut inv = |nu: &Vec<u32>| -> Vec<Poly> {
        cache
            .entry(nu.clone())
            .or_insert_with(|| invariants_on(layout, &monomials_multi(layout, nu)))
            .clone()
    };
    let mut rows = Vec::new();
    for nu in sub_vectors(mu) {
        let d: u32 = nu.iter().sum();
        let total: u32 = mu.iter().sum();
        if d == 0 || d == total {
            continue;
        }
        let rest: Vec<u32> = mu.iter().zip(&nu).map(|(a, b)| a - b).collect();
        // each unordered pair once is enough, but both orders are harmless
        let left = inv(&nu);
        let right = inv(&rest);
        for a in &left {
            for b in &right {
                rows.push(dense(&a.mul(b), &target, &index));
            }
        }
    }
    let base = rank(layout.p, rows.clone());
    rows.push(dense(h, &target, &index));
    rank(layout.p, rows) == base
}

pub fn sub_vectors(mu: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &m in mu {
        out = out
            .into_iter()
            .flat_map(|v| {
                (0..=m).map(move |k| {
                    let mut w = v.clone();
                    w.push(k);
                    w
                })
            })
            .collect();
    }
    out
}

/// Hilbert function of F[W]/(invariants of positive degree), degrees 0..=max.
pub fn coinvariant_hilbert(layout: &Layout, max: u32) -> Vec<u64> {
    let mut gens: Vec<Poly> = Vec::new();
    let mut out = vec![1];
    for d in 1..=max {
        gens.extend(invariants_on(layout, &monomials(layout.n, d)));
        let mons = monomials(layout.n, d);
        let index: HashMap<Exps, usize> = mons.iter().cloned().enumerate().map(|(i, e)| (e, i)).collect();
        let mut rows = Vec::new();
        for g in &gens {
            let gd: u32 = g.terms.keys().next().map_or(0, |e| e.iter().map(|&x| x as u32).sum());
            for m in monomials(layout.n, d - gd) {
                rows.push(dense(&g.mul(&Poly::monomial(layout.p, m, 1)), &mons, &index));
            }
        }
        out.push(mons.len() as u64 - rank(layout.p, rows) as u64);
    }
    out
}

/// Grevlex comparison in the global order: higher degree wins; otherwise at
/// the smallest index where the exponents differ, the smaller exponent wins.
pub fn grevlex_greater(a: &[u16], b: &[u16]) -> bool {
    let da: u32 = a.iter().map(|&x| x as u32).sum();
    let db: u32 = b.iter().map(|&x| x as u32).sum();
    if da != db {
        return da > db;
    }
    for (x, y) in a.iter().zip(b) {
        if x != y {
            return x < y;
        }
    }
    false
}

pub fn lead(f: &Poly) -> Option<(Exps, u64)> {
    let mut best: Option<(&Exps, u64)> = None;
    for (e, &c) in &f.terms {
        if best.is_none_or(|(b, _)| grevlex_greater(e, b)) {
            best = Some((e, c));
        }
    }
    best.map(|(e, c)| (e.clone(), c))
}
