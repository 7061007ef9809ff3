//! Sparse polynomials in F_p[W].

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::field::{Fp, PrimeField};
use crate::module_spec::{ModuleSpec, VariableId};
use crate::monomial::Monomial;

/// A polynomial over F_p in the variables of a [`ModuleSpec`]. Terms are
/// kept in grevlex order with no zero coefficients.
#[derive(Clone)]
pub struct Polynomial {
    spec: Arc<ModuleSpec>,
    terms: BTreeMap<Monomial, u32>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ambient(&self.spec, &other.spec) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

fn same_ambient(a: &Arc<ModuleSpec>, b: &Arc<ModuleSpec>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

impl Polynomial {
    pub fn zero(spec: &Arc<ModuleSpec>) -> Self {
        Self {
            spec: Arc::clone(spec),
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(spec: &Arc<ModuleSpec>, c: i64) -> Self {
        Self::term(spec, Monomial::one(spec.num_vars()), spec.field().from_i64(c))
    }

    pub fn one(spec: &Arc<ModuleSpec>) -> Self {
        Self::constant(spec, 1)
    }

    pub fn term(spec: &Arc<ModuleSpec>, m: Monomial, c: u32) -> Self {
        let mut terms = BTreeMap::new();
        let c = c % spec.p();
        if c != 0 {
            terms.insert(m, c);
        }
        Self {
            spec: Arc::clone(spec),
            terms,
        }
    }

    pub fn monomial(spec: &Arc<ModuleSpec>, m: Monomial) -> Self {
        Self::term(spec, m, 1)
    }

    pub fn var(spec: &Arc<ModuleSpec>, index: usize) -> Self {
        Self::monomial(spec, Monomial::var(spec.num_vars(), index))
    }

    /// The basis variable Δ^depth(z_summand).
    pub fn variable(spec: &Arc<ModuleSpec>, v: VariableId) -> Self {
        Self::var(spec, spec.var_index(v))
    }

    /// Builds from (monomial, coefficient) pairs, summing repeats.
    pub fn from_terms<I: IntoIterator<Item = (Monomial, u32)>>(spec: &Arc<ModuleSpec>, it: I) -> Self {
        let f = spec.field();
        let mut terms: BTreeMap<Monomial, u32> = BTreeMap::new();
        for (m, c) in it {
            let e = terms.entry(m).or_insert(0);
            *e = f.add(*e, c % f.p());
        }
        terms.retain(|_, c| *c != 0);
        Self {
            spec: Arc::clone(spec),
            terms,
        }
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        &self.spec
    }

    pub fn field(&self) -> PrimeField {
        self.spec.field()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, m: &Monomial) -> u32 {
        self.terms.get(m).copied().unwrap_or(0)
    }

    /// Terms in descending grevlex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, u32)> + '_ {
        self.terms.iter().rev().map(|(m, &c)| (m, c))
    }

    pub fn lead_term(&self) -> Result<(Monomial, Fp)> {
        self.terms
            .iter()
            .next_back()
            .map(|(m, &c)| (m.clone(), Fp::new(c as i64, self.field())))
            .ok_or(Error::NoLeadTerm)
    }

    pub fn lead_monomial(&self) -> Option<&Monomial> {
        self.terms.keys().next_back()
    }

    /// Total degree if every term has the same degree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut it = self.terms.keys();
        let d = it.next()?.degree();
        it.all(|m| m.degree() == d).then_some(d)
    }

    /// Multidegree if every term has the same multidegree.
    pub fn multidegree(&self) -> Option<Vec<u32>> {
        let mut it = self.terms.keys();
        let mu = self.spec.multidegree(it.next()?);
        it.all(|m| self.spec.multidegree(m) == mu).then_some(mu)
    }

    /// Splits into multihomogeneous components keyed by multidegree.
    pub fn multihomogeneous_parts(&self) -> BTreeMap<Vec<u32>, Polynomial> {
        let mut parts: BTreeMap<Vec<u32>, BTreeMap<Monomial, u32>> = BTreeMap::new();
        for (m, &c) in &self.terms {
            parts
                .entry(self.spec.multidegree(m))
                .or_default()
                .insert(m.clone(), c);
        }
        parts
            .into_iter()
            .map(|(mu, terms)| {
                (
                    mu,
                    Polynomial {
                        spec: Arc::clone(&self.spec),
                        terms,
                    },
                )
            })
            .collect()
    }

    fn check_ambient(&self, other: &Polynomial) -> Result<()> {
        if same_ambient(&self.spec, &other.spec) {
            Ok(())
        } else {
            Err(Error::AmbientMismatch)
        }
    }

    pub fn try_add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let f = self.field();
        let mut terms = self.terms.clone();
        for (m, &c) in &other.terms {
            match terms.get_mut(m) {
                Some(e) => {
                    *e = f.add(*e, c);
                    if *e == 0 {
                        terms.remove(m);
                    }
                }
                None => {
                    terms.insert(m.clone(), c);
                }
            }
        }
        Ok(Polynomial {
            spec: Arc::clone(&self.spec),
            terms,
        })
    }

    pub fn try_sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.check_ambient(other)?;
        let f = self.field();
        let p = f.p() as u64;
        let mut acc: HashMap<Monomial, u64> = HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                let e = acc.entry(ma.mul(mb)).or_insert(0);
                *e = (*e + ca as u64 * cb as u64) % p;
            }
        }
        let terms = acc
            .into_iter()
            .filter(|&(_, c)| c != 0)
            .map(|(m, c)| (m, c as u32))
            .collect();
        Ok(Polynomial {
            spec: Arc::clone(&self.spec),
            terms,
        })
    }

    pub fn scalar_mul(&self, c: i64) -> Polynomial {
        let f = self.field();
        let c = f.from_i64(c);
        if c == 0 {
            return Polynomial::zero(&self.spec);
        }
        Polynomial {
            spec: Arc::clone(&self.spec),
            terms: self.terms.iter().map(|(m, &a)| (m.clone(), f.mul(a, c))).collect(),
        }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial {
            spec: Arc::clone(&self.spec),
            terms: self.terms.iter().map(|(t, &c)| (t.mul(m), c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.spec);
        for _ in 0..e {
            acc = &acc * self;
        }
        acc
    }

    fn neg_ref(&self) -> Polynomial {
        let f = self.field();
        Polynomial {
            spec: Arc::clone(&self.spec),
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), f.neg(c))).collect(),
        }
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (m, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match (c, m.is_one()) {
                (_, true) => write!(f, "{c}")?,
                (1, false) => write!(f, "{}", m.display(&self.spec))?,
                _ => write!(f, "{c}*{}", m.display(&self.spec))?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Polynomial[{} over F_{}]({})", self.spec, self.spec.p(), self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        self.try_add(rhs).expect("ambient mismatch")
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self.try_sub(rhs).expect("ambient mismatch")
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        self.try_mul(rhs).expect("ambient mismatch")
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.neg_ref()
    }
}
