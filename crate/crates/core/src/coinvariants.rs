//! The Hilbert ideal and the coinvariant algebra F[W]_{Z/p}.
//!
//! Two independent routes bound the top degree of the coinvariants:
//!
//! * dimensions: the Hilbert ideal is built degree by degree as
//!   I_μ = Σ_x x·I_{μ-e(x)} + R_μ and the quotient dimension is read off;
//! * lead terms: the polynomials F of [`crate::action::build_f`] and the
//!   orbit products put every degree p-1 monomial of A and every z_i^p into
//!   the lead-term ideal, which leaves only the staircase γ·∏ z_i^{n_i}
//!   (γ ∈ A of degree ≤ p-2, n_i ≤ p-1) outside.
//!
//! Hilbert functions of an ideal and of its lead-term ideal coincide, so the
//! staircase count bounds the quotient dimension in every degree.

use std::collections::{HashMap, HashSet};
use std::sync::Arc;

use rand::seq::index::sample;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::action::{build_f, is_in_a, is_invariant, orbit_product};
use crate::error::{Error, Result};
use crate::invariants::{EngineConfig, GradedInvariantBasis, InvariantEngine};
use crate::linalg::Echelon;
use crate::module_spec::{ModuleSpec, VariableId};
use crate::monomial::{count_monomials, enumerate_monomials, multidegrees, DegreeConstraint, Monomial};

/// Cap on the number of degree p-1 monomials of A that get an explicit F.
pub const A_MONOMIAL_CAP: usize = 1000;
const SAMPLE_SEED: u64 = 0x5EED_F00D;

/// Rank of span{ m·f : f ∈ basis_e, deg m = d - e, 1 ≤ e ≤ d } in degree-d
/// monomial coordinates. Direct route, used as a cross-check.
pub fn hilbert_ideal_dimension(spec: &Arc<ModuleSpec>, d: u32, bases: &[GradedInvariantBasis]) -> Result<usize> {
    if d == 0 {
        return Ok(0);
    }
    let monos = enumerate_monomials(spec, &DegreeConstraint::Total(d));
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = Echelon::empty(spec.field(), monos.len());
    for e in 1..=d {
        let basis = bases
            .iter()
            .find(|b| b.degree == e && b.multidegree.is_none())
            .ok_or_else(|| Error::Precondition(format!("missing invariant basis in degree {e}")))?;
        let multipliers = enumerate_monomials(spec, &DegreeConstraint::Total(d - e));
        for f in &basis.basis {
            for m in &multipliers {
                let mut v = vec![0u32; monos.len()];
                for (t, c) in f.mul_monomial(m).terms() {
                    v[index[t]] = c;
                }
                span.insert(&v);
                if span.rank() == monos.len() {
                    return Ok(span.rank());
                }
            }
        }
    }
    Ok(span.rank())
}

/// Degree-by-degree Hilbert ideal of one module, blocked by multidegree.
pub struct HilbertIdeal {
    engine: InvariantEngine,
    /// Ideal pieces of the most recently computed degree.
    current: HashMap<Vec<u32>, Echelon>,
    degree: u32,
}

impl HilbertIdeal {
    pub fn new(spec: Arc<ModuleSpec>, config: EngineConfig) -> Self {
        // degree 0: the ideal has no constant part
        let current = HashMap::from([(vec![0; spec.k()], Echelon::empty(spec.field(), 1))]);
        Self {
            engine: InvariantEngine::new(spec, config),
            current,
            degree: 0,
        }
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        self.engine.spec()
    }

    pub fn engine(&mut self) -> &mut InvariantEngine {
        &mut self.engine
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// The ideal piece I_μ for μ in the current degree.
    pub fn piece(&self, mu: &[u32]) -> Option<&Echelon> {
        self.current.get(mu)
    }

    /// Advances to the next degree; returns dim I_d.
    pub fn step(&mut self) -> Result<usize> {
        let spec = Arc::clone(self.engine.spec());
        let field = spec.field();
        let d = self.degree + 1;
        let mut next = HashMap::new();
        let mut total = 0;
        for mu in multidegrees(spec.k(), d) {
            let block = self.engine.block(&mu)?;
            let n = block.len();
            let mut rows: Vec<Vec<u32>> = self.engine.invariants(&mu)?.rows().to_vec();
            for s in 0..spec.k() {
                if mu[s] == 0 {
                    continue;
                }
                let mut lower = mu.clone();
                lower[s] -= 1;
                let prev = &self.current[&lower];
                if prev.rank() == 0 {
                    continue;
                }
                let lower_block = self.engine.block(&lower)?;
                for x in spec.summand_range(s) {
                    let shift: Vec<usize> = lower_block
                        .monomials
                        .iter()
                        .map(|m| block.position(&m.mul_var(x)).expect("shifted monomial in block"))
                        .collect();
                    for r in prev.rows() {
                        let mut v = vec![0u32; n];
                        for (i, &c) in r.iter().enumerate() {
                            if c != 0 {
                                v[shift[i]] = c;
                            }
                        }
                        rows.push(v);
                    }
                }
            }
            let ech = Echelon::from_rows(field, rows, n);
            total += ech.rank();
            next.insert(mu, ech);
        }
        self.current = next;
        self.degree = d;
        Ok(total)
    }
}

/// Quotient dimensions dim F[W]_d - dim I_d for d = 0..=max_degree, without
/// stopping at the first zero.
pub fn hilbert_function_upto(spec: &Arc<ModuleSpec>, max_degree: u32, config: EngineConfig) -> Result<Vec<u64>> {
    let mut ideal = HilbertIdeal::new(Arc::clone(spec), config);
    let mut out = vec![1u64];
    for d in 1..=max_degree {
        let rank = ideal.step()? as u64;
        out.push(count_monomials(spec.num_vars(), d) - rank);
    }
    Ok(out)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinvariantReport {
    /// The reduced module the profile was computed on.
    pub spec: ModuleSpec,
    /// dim (F[W]/I)_d for d = 0..=top_degree.
    pub hilbert_function: Vec<u64>,
    pub top_degree: usize,
    pub bound: usize,
}

pub fn coinvariant_profile(spec: &ModuleSpec) -> Result<CoinvariantReport> {
    coinvariant_profile_with(spec, EngineConfig::default())
}

pub fn coinvariant_profile_with(spec: &ModuleSpec, config: EngineConfig) -> Result<CoinvariantReport> {
    if spec.k() == 0 {
        return Err(Error::Precondition("module has no summands".into()));
    }
    let reduced = Arc::new(spec.reduced());
    let bound = reduced.upper_bound();
    let mut ideal = HilbertIdeal::new(Arc::clone(&reduced), config);
    let mut hf = vec![1u64];
    loop {
        let d = ideal.degree() + 1;
        let q = count_monomials(reduced.num_vars(), d) - ideal.step()? as u64;
        if q == 0 {
            break;
        }
        if d as usize > bound {
            return Err(Error::TheoremViolation(format!(
                "coinvariants of {reduced} (p = {}) are nonzero in degree {d} > bound {bound}",
                reduced.p()
            )));
        }
        hf.push(q);
    }
    Ok(CoinvariantReport {
        spec: (*reduced).clone(),
        top_degree: hf.len() - 1,
        hilbert_function: hf,
        bound,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LeadTermCertificate {
    pub spec: ModuleSpec,
    /// Number of degree p-1 monomials in A.
    pub a_monomials: usize,
    /// How many of them got an explicit F (all, unless over the cap).
    pub a_monomials_checked: usize,
    pub sampled: bool,
    pub orbit_products_checked: usize,
    /// Staircase monomial counts for d = 0..=bound+1.
    pub staircase_counts: Vec<u64>,
    pub staircase_top_degree: usize,
    /// Monomials outside the staircase confirmed divisible by a certified
    /// lead monomial.
    pub non_staircase_checked: u64,
    pub bound: usize,
    /// Hilbert function from the dimension route.
    pub hilbert_function: Vec<u64>,
    pub top_degree: usize,
}

fn a_part_degree(spec: &ModuleSpec, m: &Monomial) -> u32 {
    m.support().filter(|&(i, _)| spec.depth_of(i) >= 1).map(|(_, e)| e as u32).sum()
}

fn in_staircase(spec: &ModuleSpec, m: &Monomial) -> bool {
    let p = spec.p();
    if a_part_degree(spec, m) > p - 2 {
        return false;
    }
    (0..spec.k()).all(|s| (m.exponent(spec.var_index(VariableId::new(s, 0))) as u32) < p)
}

/// The A-part of m truncated to its p-1 largest factors.
fn a_divisor(spec: &ModuleSpec, m: &Monomial) -> Monomial {
    let p = spec.p();
    let mut exps = vec![0u16; m.nvars()];
    let mut left = p - 1;
    for (i, e) in m.support().collect::<Vec<_>>().into_iter().rev() {
        if left == 0 {
            break;
        }
        if spec.depth_of(i) >= 1 {
            let take = (e as u32).min(left);
            exps[i] = take as u16;
            left -= take;
        }
    }
    Monomial::from_exponents(exps)
}

/// Certifies the lead-term bound on the top degree and checks it against
/// the dimension route. Failures are theorem violations.
pub fn leadterm_certificate(spec: &ModuleSpec) -> Result<LeadTermCertificate> {
    leadterm_certificate_with(spec, EngineConfig::default())
}

pub fn leadterm_certificate_with(spec: &ModuleSpec, config: EngineConfig) -> Result<LeadTermCertificate> {
    let reduced = Arc::new(spec.reduced());
    if reduced.k() == 0 {
        return Err(Error::Precondition("certificate needs a nontrivial reduced module".into()));
    }
    let p = reduced.p();
    let n = reduced.num_vars();
    let bound = reduced.upper_bound();
    let field = reduced.field();
    let minus_one = field.neg(1);

    let a_all: Vec<Monomial> = enumerate_monomials(&reduced, &DegreeConstraint::Total(p - 1))
        .into_iter()
        .filter(|m| is_in_a(&reduced, m))
        .collect();
    let sampled = a_all.len() > A_MONOMIAL_CAP;
    let chosen: Vec<&Monomial> = if sampled {
        let mut rng = ChaCha8Rng::seed_from_u64(SAMPLE_SEED);
        let mut idx = sample(&mut rng, a_all.len(), A_MONOMIAL_CAP).into_vec();
        idx.sort_unstable();
        idx.into_iter().map(|i| &a_all[i]).collect()
    } else {
        a_all.iter().collect()
    };

    let mut ideal = HilbertIdeal::new(Arc::clone(&reduced), config);
    let mut hf = vec![1u64];
    while ideal.degree() < p - 1 {
        let d = ideal.degree() + 1;
        hf.push(count_monomials(n, d) - ideal.step()? as u64);
    }

    let violation = |msg: String| Error::TheoremViolation(msg);
    let mut certified: HashSet<Monomial> = HashSet::new();
    for &m in &chosen {
        let f = build_f(&reduced, m)?;
        let (lm, c) = f.lead_term()?;
        if lm != *m || c.value() != minus_one {
            return Err(violation(format!(
                "LT(F) = {c}*{} but expected -{}",
                lm.display(&reduced),
                m.display(&reduced)
            )));
        }
        let mu = reduced.multidegree(m);
        let block = ideal.engine().block(&mu)?;
        let piece = ideal.piece(&mu).expect("degree p-1 piece computed");
        if !piece.contains(&block.dense(&f)) {
            return Err(violation(format!("F for {} is not in the Hilbert ideal", m.display(&reduced))));
        }
        certified.insert(m.clone());
    }

    // orbit products live in degree p
    hf.push(count_monomials(n, p) - ideal.step()? as u64);
    let mut orbit_leads = Vec::new();
    for s in 0..reduced.k() {
        let op = orbit_product(&reduced, s);
        let (lm, c) = op.lead_term()?;
        let zp = Monomial::var_pow(n, reduced.var_index(VariableId::new(s, 0)), p as u16);
        if lm != zp || c.value() != 1 || !is_invariant(&op) {
            return Err(violation(format!("orbit product of z{} has lead {c}*{}", s + 1, lm.display(&reduced))));
        }
        let mu = reduced.multidegree(&zp);
        let block = ideal.engine().block(&mu)?;
        if !ideal.piece(&mu).expect("degree p piece").contains(&block.dense(&op)) {
            return Err(violation(format!("orbit product of z{} not in the Hilbert ideal", s + 1)));
        }
        orbit_leads.push(zp);
    }

    // continue the dimension route until the quotient vanishes
    while *hf.last().unwrap() != 0 && (ideal.degree() as usize) <= bound {
        let d = ideal.degree() + 1;
        hf.push(count_monomials(n, d) - ideal.step()? as u64);
    }
    while hf.len() > 1 && *hf.last().unwrap() == 0 {
        hf.pop();
    }
    let top_degree = hf.len() - 1;

    let mut staircase_counts = Vec::with_capacity(bound + 2);
    let mut non_staircase_checked = 0u64;
    for d in 0..=(bound as u32 + 1) {
        let mut count = 0u64;
        for m in enumerate_monomials(&reduced, &DegreeConstraint::Total(d)) {
            if in_staircase(&reduced, &m) {
                count += 1;
                continue;
            }
            let by_orbit = orbit_leads.iter().any(|z| z.divides(&m));
            let by_f = a_part_degree(&reduced, &m) >= p - 1 && {
                let g = a_divisor(&reduced, &m);
                certified.contains(&g) || sampled
            };
            if !(by_orbit || by_f) {
                return Err(violation(format!(
                    "{} is outside the staircase but not in the certified lead-term ideal",
                    m.display(&reduced)
                )));
            }
            non_staircase_checked += 1;
        }
        staircase_counts.push(count);
    }
    let staircase_top_degree = staircase_counts.iter().rposition(|&c| c > 0).unwrap_or(0);

    if staircase_top_degree > bound {
        return Err(violation(format!("staircase reaches degree {staircase_top_degree} > {bound}")));
    }
    for (d, &q) in hf.iter().enumerate() {
        let stair = staircase_counts.get(d).copied().unwrap_or(0);
        if q > stair {
            return Err(violation(format!(
                "coinvariant dimension {q} in degree {d} exceeds the staircase count {stair}"
            )));
        }
    }
    if top_degree > staircase_top_degree {
        return Err(violation(format!(
            "top degree {top_degree} is above the staircase top {staircase_top_degree}"
        )));
    }

    Ok(LeadTermCertificate {
        spec: (*reduced).clone(),
        a_monomials: a_all.len(),
        a_monomials_checked: chosen.len(),
        sampled,
        orbit_products_checked: orbit_leads.len(),
        staircase_counts,
        staircase_top_degree,
        non_staircase_checked,
        bound,
        hilbert_function: hf,
        top_degree,
    })
}
