//! Exponent-vector monomials under graded reverse lexicographic order.
//!
//! Variable index 0 is the smallest variable. Two monomials of equal degree
//! are compared at the smallest variable where their exponents differ: the
//! one with the smaller exponent there is the larger monomial.

use std::cmp::Ordering;

use crate::module_spec::ModuleSpec;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Box<[u16]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Self {
            exps: vec![0; nvars].into_boxed_slice(),
            degree: 0,
        }
    }

    pub fn from_exponents(exps: Vec<u16>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Self {
            exps: exps.into_boxed_slice(),
            degree,
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        Self::var_pow(nvars, index, 1)
    }

    pub fn var_pow(nvars: usize, index: usize, e: u16) -> Self {
        let mut exps = vec![0; nvars];
        exps[index] = e;
        Self::from_exponents(exps)
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn exponents(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, index: usize) -> u16 {
        self.exps[index]
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.nvars(), other.nvars());
        let exps: Vec<u16> = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a + b)
            .collect();
        Monomial {
            exps: exps.into_boxed_slice(),
            degree: self.degree + other.degree,
        }
    }

    pub fn mul_var(&self, index: usize) -> Monomial {
        let mut exps = self.exps.clone();
        exps[index] += 1;
        Monomial {
            exps,
            degree: self.degree + 1,
        }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self` if `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Option<Monomial> {
        if !self.divides(other) {
            return None;
        }
        Some(Monomial::from_exponents(
            other.exps.iter().zip(self.exps.iter()).map(|(b, a)| b - a).collect(),
        ))
    }

    /// Nonzero exponents as (variable index, exponent), ascending by index.
    pub fn support(&self) -> impl Iterator<Item = (usize, u16)> + '_ {
        self.exps
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| (i, e))
    }

    pub fn display(&self, spec: &ModuleSpec) -> String {
        if self.is_one() {
            return "1".to_string();
        }
        // largest variable first
        let mut parts = Vec::new();
        for (i, e) in self.support().collect::<Vec<_>>().into_iter().rev() {
            let name = spec.var_name(i);
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| {
            for (a, b) in self.exps.iter().zip(other.exps.iter()) {
                if a != b {
                    return b.cmp(a);
                }
            }
            Ordering::Equal
        })
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Which graded piece to enumerate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DegreeConstraint {
    Total(u32),
    Multi(Vec<u32>),
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// Number of monomials of degree `e` in `n` variables.
pub fn count_monomials(n: usize, e: u32) -> u64 {
    if n == 0 {
        return u64::from(e == 0);
    }
    binomial(e as u64 + n as u64 - 1, n as u64 - 1)
}

/// Calls `f` on every exponent vector of length `n` with entries summing to
/// `e`, writing into `buf[start..start+n]`.
fn for_each_composition(buf: &mut Vec<u16>, start: usize, n: usize, e: u32, f: &mut dyn FnMut(&mut Vec<u16>)) {
    if n == 0 {
        if e == 0 {
            f(buf);
        }
        return;
    }
    if n == 1 {
        buf[start] = e as u16;
        f(buf);
        buf[start] = 0;
        return;
    }
    for first in (0..=e).rev() {
        buf[start] = first as u16;
        for_each_composition(buf, start + 1, n - 1, e - first, f);
    }
    buf[start] = 0;
}

/// All multidegrees of length `k` with total `d`.
pub fn multidegrees(k: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut buf = vec![0u16; k];
    for_each_composition(&mut buf, 0, k, d, &mut |b| {
        out.push(b.iter().map(|&x| x as u32).collect())
    });
    out
}

/// Every monomial satisfying the constraint, each once, in descending
/// grevlex order.
pub fn enumerate_monomials(spec: &ModuleSpec, constraint: &DegreeConstraint) -> Vec<Monomial> {
    let n = spec.num_vars();
    let mut out = Vec::new();
    match constraint {
        DegreeConstraint::Total(d) => {
            let mut buf = vec![0u16; n];
            for_each_composition(&mut buf, 0, n, *d, &mut |b| {
                out.push(Monomial::from_exponents(b.clone()))
            });
        }
        DegreeConstraint::Multi(mu) => {
            assert_eq!(mu.len(), spec.k(), "multidegree length must equal number of summands");
            let mut acc = vec![vec![0u16; n]];
            for (s, &e) in mu.iter().enumerate() {
                let range = spec.summand_range(s);
                let mut next = Vec::new();
                for base in &acc {
                    let mut buf = base.clone();
                    for_each_composition(&mut buf, range.start, range.len(), e, &mut |b| {
                        next.push(b.clone())
                    });
                }
                acc = next;
            }
            out.extend(acc.into_iter().map(Monomial::from_exponents));
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// Closed-form size of a graded piece.
pub fn count_for(spec: &ModuleSpec, constraint: &DegreeConstraint) -> u64 {
    match constraint {
        DegreeConstraint::Total(d) => count_monomials(spec.num_vars(), *d),
        DegreeConstraint::Multi(mu) => mu
            .iter()
            .zip(spec.blocks())
            .map(|(&e, &d)| count_monomials(d, e))
            .product(),
    }
}
