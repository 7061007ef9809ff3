//! Graded pieces of F_p[W]^{Z/p}, decomposables and Noether numbers.
//!
//! σ preserves multidegree, so every computation happens on one multidegree
//! block at a time: the invariants of a block are the kernel of σ - 1 on its
//! monomial span. Invariant vectors are stored in reduced echelon form over
//! the descending monomial list, so the coordinates of any invariant of that
//! block are its coefficients at the pivot monomials.
//!
//! The decomposable part (R_+)^2 of a block μ is spanned by g·h where g runs
//! over lifted generators of multidegree ν < μ and h over a basis of
//! R_{μ-ν}. Substituting generators for arbitrary invariants in the first
//! factor loses nothing since R_+ = Σ g_i R.

use std::collections::HashMap;
use std::sync::Arc;
use std::time::Instant;

use crate::action::{is_invariant, sigma_power};
use crate::error::{Error, Result};
use crate::linalg::Echelon;
use crate::module_spec::ModuleSpec;
use crate::monomial::{count_monomials, enumerate_monomials, multidegrees, DegreeConstraint, Monomial};
use crate::polynomial::Polynomial;

pub const DEFAULT_COLUMN_CAP: usize = 20_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EngineConfig {
    /// Largest multidegree block (in monomials) the engine will touch.
    pub column_cap: usize,
}

impl Default for EngineConfig {
    fn default() -> Self {
        Self {
            column_cap: DEFAULT_COLUMN_CAP,
        }
    }
}

/// The monomials of one multidegree, descending, with a reverse index.
#[derive(Debug)]
pub struct MonomialBlock {
    pub multidegree: Vec<u32>,
    pub monomials: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
}

impl MonomialBlock {
    fn new(spec: &ModuleSpec, mu: &[u32]) -> Self {
        let monomials = enumerate_monomials(spec, &DegreeConstraint::Multi(mu.to_vec()));
        let index = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        Self {
            multidegree: mu.to_vec(),
            monomials,
            index,
        }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    /// Dense coordinates of a polynomial supported on this block.
    pub fn dense(&self, f: &Polynomial) -> Vec<u32> {
        let mut v = vec![0u32; self.len()];
        for (m, c) in f.terms() {
            let i = self.position(m).expect("polynomial outside block");
            v[i] = c;
        }
        v
    }

    pub fn to_polynomial(&self, spec: &Arc<ModuleSpec>, v: &[u32]) -> Polynomial {
        Polynomial::from_terms(
            spec,
            v.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (self.monomials[i].clone(), c)),
        )
    }
}

/// Sparse view of a block vector.
fn sparse(v: &[u32]) -> Vec<(usize, u32)> {
    v.iter().enumerate().filter(|(_, &c)| c != 0).map(|(i, &c)| (i, c)).collect()
}

/// Decomposable data for one multidegree.
#[derive(Debug, Clone)]
pub struct BlockGenerators {
    /// Rank of the decomposable subspace.
    pub decomposable_rank: usize,
    /// Decomposables in invariant coordinates.
    pub decomposables: Echelon,
    /// Invariant basis vectors (block coordinates) completing the
    /// decomposables to all invariants.
    pub lifts: Vec<Vec<u32>>,
}

/// Memoizing engine over the multidegree blocks of one module.
pub struct InvariantEngine {
    spec: Arc<ModuleSpec>,
    config: EngineConfig,
    blocks: HashMap<Vec<u32>, Arc<MonomialBlock>>,
    invariants: HashMap<Vec<u32>, Arc<Echelon>>,
    generators: HashMap<Vec<u32>, Arc<BlockGenerators>>,
    sigma_cache: HashMap<Monomial, Polynomial>,
}

impl InvariantEngine {
    pub fn new(spec: Arc<ModuleSpec>, config: EngineConfig) -> Self {
        Self {
            spec,
            config,
            blocks: HashMap::new(),
            invariants: HashMap::new(),
            generators: HashMap::new(),
            sigma_cache: HashMap::new(),
        }
    }

    pub fn spec(&self) -> &Arc<ModuleSpec> {
        &self.spec
    }

    pub fn config(&self) -> EngineConfig {
        self.config
    }

    pub fn block(&mut self, mu: &[u32]) -> Result<Arc<MonomialBlock>> {
        if let Some(b) = self.blocks.get(mu) {
            return Ok(Arc::clone(b));
        }
        let size: u64 = mu
            .iter()
            .zip(self.spec.blocks())
            .map(|(&e, &d)| count_monomials(d, e))
            .product();
        if size > self.config.column_cap as u64 {
            return Err(Error::SizeBudget {
                block: mu.to_vec(),
                cols: size as usize,
                cap: self.config.column_cap,
            });
        }
        let b = Arc::new(MonomialBlock::new(&self.spec, mu));
        self.blocks.insert(mu.to_vec(), Arc::clone(&b));
        Ok(b)
    }

    fn sigma_of_var_power(&mut self, m: &Monomial) -> Polynomial {
        if let Some(f) = self.sigma_cache.get(m) {
            return f.clone();
        }
        let f = sigma_power(&Polynomial::monomial(&self.spec, m.clone()), 1);
        self.sigma_cache.insert(m.clone(), f.clone());
        f
    }

    /// σ(m) assembled from cached images of the pure powers in m.
    fn sigma_monomial(&mut self, m: &Monomial) -> Polynomial {
        let n = self.spec.num_vars();
        let mut out = Polynomial::one(&self.spec);
        for (v, e) in m.support().collect::<Vec<_>>() {
            let img = self.sigma_of_var_power(&Monomial::var_pow(n, v, e));
            out = &out * &img;
        }
        out
    }

    /// Reduced echelon basis of the invariants of multidegree μ.
    pub fn invariants(&mut self, mu: &[u32]) -> Result<Arc<Echelon>> {
        if let Some(e) = self.invariants.get(mu) {
            return Ok(Arc::clone(e));
        }
        let block = self.block(mu)?;
        let n = block.len();
        let field = self.spec.field();
        // column j holds (σ - 1)(m_j)
        let mut rows = vec![vec![0u32; n]; n];
        for (j, m) in block.monomials.iter().enumerate() {
            let img = self.sigma_monomial(m);
            for (t, c) in img.terms() {
                if t == m {
                    continue;
                }
                let i = block.position(t).expect("σ preserves multidegree");
                rows[i][j] = c;
            }
        }
        let kernel = Echelon::from_rows(field, rows, n).kernel();
        let basis = Arc::new(Echelon::from_rows(field, kernel, n));
        self.invariants.insert(mu.to_vec(), Arc::clone(&basis));
        Ok(basis)
    }

    pub fn invariant_polynomials(&mut self, mu: &[u32]) -> Result<Vec<Polynomial>> {
        let block = self.block(mu)?;
        let inv = self.invariants(mu)?;
        Ok(inv.rows().iter().map(|r| block.to_polynomial(&self.spec, r)).collect())
    }

    /// Multiplies two sparse block vectors into dense coordinates of the
    /// target block.
    fn product_into(
        target: &MonomialBlock,
        a_block: &MonomialBlock,
        a: &[(usize, u32)],
        b_block: &MonomialBlock,
        b: &[(usize, u32)],
        p: u32,
    ) -> Vec<u32> {
        let mut acc = vec![0u64; target.len()];
        for &(i, ca) in a {
            let ma = &a_block.monomials[i];
            for &(j, cb) in b {
                let t = target
                    .position(&ma.mul(&b_block.monomials[j]))
                    .expect("product lands in the sum multidegree");
                acc[t] += ca as u64 * cb as u64;
            }
        }
        acc.into_iter().map(|x| (x % p as u64) as u32).collect()
    }

    /// Decomposables and generator lifts in multidegree μ.
    pub fn generators(&mut self, mu: &[u32]) -> Result<Arc<BlockGenerators>> {
        if let Some(g) = self.generators.get(mu) {
            return Ok(Arc::clone(g));
        }
        let field = self.spec.field();
        let p = field.p();
        let target = self.block(mu)?;
        let inv = self.invariants(mu)?;
        let dim = inv.rank();
        let mut dec = Echelon::empty(field, dim);

        let total: u32 = mu.iter().sum();
        if total >= 2 && dim > 0 {
            'outer: for nu in sub_multidegrees(mu) {
                let deg: u32 = nu.iter().sum();
                if deg == 0 || deg == total {
                    continue;
                }
                let gens = self.generators(&nu)?;
                if gens.lifts.is_empty() {
                    continue;
                }
                let rest: Vec<u32> = mu.iter().zip(&nu).map(|(a, b)| a - b).collect();
                let rest_inv = self.invariants(&rest)?;
                if rest_inv.rank() == 0 {
                    continue;
                }
                let nu_block = self.block(&nu)?;
                let rest_block = self.block(&rest)?;
                let rest_sparse: Vec<_> = rest_inv.rows().iter().map(|r| sparse(r)).collect();
                for g in &gens.lifts {
                    let gs = sparse(g);
                    for h in &rest_sparse {
                        let prod = Self::product_into(&target, &nu_block, &gs, &rest_block, h, p);
                        dec.insert(&inv.coordinates(&prod));
                        if dec.rank() == dim {
                            break 'outer;
                        }
                    }
                }
            }
        }

        let mut is_pivot = vec![false; dim];
        for &c in dec.pivots() {
            is_pivot[c] = true;
        }
        let lifts = (0..dim)
            .filter(|&i| !is_pivot[i])
            .map(|i| inv.rows()[i].clone())
            .collect();
        let out = Arc::new(BlockGenerators {
            decomposable_rank: dec.rank(),
            decomposables: dec,
            lifts,
        });
        self.generators.insert(mu.to_vec(), Arc::clone(&out));
        Ok(out)
    }

    /// Whether an invariant lies in the decomposable span.
    pub fn is_decomposable(&mut self, f: &Polynomial) -> Result<bool> {
        for (mu, part) in f.multihomogeneous_parts() {
            let block = self.block(&mu)?;
            let inv = self.invariants(&mu)?;
            let v = block.dense(&part);
            if !inv.contains(&v) {
                return Err(Error::Precondition("polynomial is not invariant".into()));
            }
            let gens = self.generators(&mu)?;
            if !gens.decomposables.contains(&inv.coordinates(&v)) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Dimensions for total degree d: (invariants, decomposables).
    pub fn degree_dims(&mut self, d: u32) -> Result<(usize, usize)> {
        let mut inv = 0;
        let mut dec = 0;
        for mu in multidegrees(self.spec.k(), d) {
            inv += self.invariants(&mu)?.rank();
            if d >= 2 {
                dec += self.generators(&mu)?.decomposable_rank;
            }
        }
        Ok((inv, dec))
    }
}

/// All ν with 0 ≤ ν ≤ μ entrywise, in lexicographic order.
pub fn sub_multidegrees(mu: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![Vec::with_capacity(mu.len())];
    for &m in mu {
        let mut next = Vec::with_capacity(out.len() * (m as usize + 1));
        for prefix in &out {
            for e in 0..=m {
                let mut v = prefix.clone();
                v.push(e);
                next.push(v);
            }
        }
        out = next;
    }
    out
}

/// Echelonized invariants in one degree or multidegree.
#[derive(Debug, Clone)]
pub struct GradedInvariantBasis {
    pub spec: Arc<ModuleSpec>,
    pub degree: u32,
    pub multidegree: Option<Vec<u32>>,
    pub basis: Vec<Polynomial>,
}

impl GradedInvariantBasis {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

pub fn invariant_basis(spec: &Arc<ModuleSpec>, constraint: &DegreeConstraint) -> Result<GradedInvariantBasis> {
    let mut engine = InvariantEngine::new(Arc::clone(spec), EngineConfig::default());
    invariant_basis_with(&mut engine, constraint)
}

pub fn invariant_basis_with(engine: &mut InvariantEngine, constraint: &DegreeConstraint) -> Result<GradedInvariantBasis> {
    let spec = Arc::clone(engine.spec());
    match constraint {
        DegreeConstraint::Multi(mu) => {
            if mu.len() != spec.k() {
                return Err(Error::Precondition(format!(
                    "multidegree has {} entries but the module has {} summands",
                    mu.len(),
                    spec.k()
                )));
            }
            Ok(GradedInvariantBasis {
                degree: mu.iter().sum(),
                multidegree: Some(mu.clone()),
                basis: engine.invariant_polynomials(mu)?,
                spec,
            })
        }
        DegreeConstraint::Total(d) => {
            let mut basis = Vec::new();
            for mu in multidegrees(spec.k(), *d) {
                basis.extend(engine.invariant_polynomials(&mu)?);
            }
            basis.sort_by(|a, b| b.lead_monomial().cmp(&a.lead_monomial()));
            Ok(GradedInvariantBasis {
                spec,
                degree: *d,
                multidegree: None,
                basis,
            })
        }
    }
}

/// Rank of the span of all f·g with f ∈ basis_e, g ∈ basis_{d-e},
/// 1 ≤ e ≤ d/2, in degree-d monomial coordinates.
///
/// This is the direct product-of-bases route; the engine uses generator
/// lifts instead, and the two are checked against each other in tests.
pub fn decomposable_dimension(spec: &Arc<ModuleSpec>, d: u32, bases: &[GradedInvariantBasis]) -> Result<usize> {
    if d < 2 {
        return Ok(0);
    }
    let find = |e: u32| -> Result<&GradedInvariantBasis> {
        bases
            .iter()
            .find(|b| b.degree == e && b.multidegree.is_none())
            .ok_or_else(|| Error::Precondition(format!("missing invariant basis in degree {e}")))
    };
    let monos = enumerate_monomials(spec, &DegreeConstraint::Total(d));
    let index: HashMap<&Monomial, usize> = monos.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let mut span = Echelon::empty(spec.field(), monos.len());
    for e in 1..=d / 2 {
        let lo = find(e)?;
        let hi = find(d - e)?;
        for f in &lo.basis {
            for g in &hi.basis {
                let prod = f.try_mul(g)?;
                let mut v = vec![0u32; monos.len()];
                for (m, c) in prod.terms() {
                    v[index[m]] = c;
                }
                span.insert(&v);
            }
        }
    }
    Ok(span.rank())
}

/// Whether a homogeneous invariant of positive degree is not a sum of
/// products of invariants of lower positive degree.
pub fn is_indecomposable(spec: &Arc<ModuleSpec>, f: &Polynomial) -> Result<bool> {
    let mut engine = InvariantEngine::new(Arc::clone(spec), EngineConfig::default());
    is_indecomposable_with(&mut engine, f)
}

pub fn is_indecomposable_with(engine: &mut InvariantEngine, f: &Polynomial) -> Result<bool> {
    match f.homogeneous_degree() {
        Some(d) if d > 0 => {}
        _ => {
            return Err(Error::Precondition(
                "input must be homogeneous of positive degree".into(),
            ))
        }
    }
    if !is_invariant(f) {
        return Err(Error::Precondition("polynomial is not invariant".into()));
    }
    Ok(!engine.is_decomposable(f)?)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegreeRow {
    pub degree: usize,
    pub dim_poly: u64,
    pub dim_inv: usize,
    pub dim_dec: usize,
    pub dim_indec: usize,
}

#[derive(Debug, Clone)]
pub struct NoetherReport {
    /// The module as given.
    pub spec: ModuleSpec,
    /// The module actually scanned (trivial summands removed unless the
    /// module is entirely trivial).
    pub scanned: ModuleSpec,
    pub search_bound: usize,
    pub rows: Vec<DegreeRow>,
    pub beta: usize,
    pub expected_beta: Option<usize>,
    /// Wall-clock milliseconds per scanned degree; not part of the result.
    pub timings_ms: Vec<f64>,
}

impl NoetherReport {
    pub fn all_trivial(&self) -> bool {
        self.spec.reduced_blocks().is_empty()
    }
}

/// Scan limit for the reduced module: k(p-1) + p - 2, raised to p so that
/// the orbit products are always covered. The two differ only for V_2 at
/// p = 2, where y^2 + xy is a generator of degree 2 > 1.
pub fn search_bound(reduced: &ModuleSpec) -> usize {
    reduced.upper_bound().max(reduced.p() as usize)
}

/// β(W) by scanning every degree up to [`search_bound`] of the reduced module.
pub fn noether_number(spec: &ModuleSpec) -> Result<NoetherReport> {
    noether_number_with(spec, EngineConfig::default())
}

pub fn noether_number_with(spec: &ModuleSpec, config: EngineConfig) -> Result<NoetherReport> {
    if spec.k() == 0 {
        return Err(Error::Precondition("module has no summands".into()));
    }
    let reduced = spec.reduced();
    let (scanned, bound) = if reduced.k() == 0 {
        // kV_1: every linear form is invariant and the ring is generated in degree 1
        (spec.clone(), 1)
    } else {
        let b = search_bound(&reduced);
        (reduced, b)
    };
    let mut report = noether_scan(&Arc::new(scanned), bound, config)?;
    report.spec = spec.clone();
    Ok(report)
}

/// Per-degree dimension table for d = 1..=bound on the module exactly as
/// given (no stripping).
pub fn noether_scan(spec: &Arc<ModuleSpec>, bound: usize, config: EngineConfig) -> Result<NoetherReport> {
    let mut engine = InvariantEngine::new(Arc::clone(spec), config);
    noether_scan_in(&mut engine, bound)
}

/// As [`noether_scan`], keeping the engine's caches for later queries.
pub fn noether_scan_in(engine: &mut InvariantEngine, bound: usize) -> Result<NoetherReport> {
    let spec = &Arc::clone(engine.spec());
    let mut rows = Vec::with_capacity(bound);
    let mut timings_ms = Vec::with_capacity(bound);
    for d in 1..=bound {
        let t0 = Instant::now();
        let (dim_inv, dim_dec) = engine.degree_dims(d as u32)?;
        timings_ms.push(t0.elapsed().as_secs_f64() * 1e3);
        rows.push(DegreeRow {
            degree: d,
            dim_poly: count_monomials(spec.num_vars(), d as u32),
            dim_inv,
            dim_dec,
            dim_indec: dim_inv - dim_dec,
        });
    }
    let beta = rows.iter().filter(|r| r.dim_indec > 0).map(|r| r.degree).max().unwrap_or(0);
    Ok(NoetherReport {
        spec: (**spec).clone(),
        scanned: (**spec).clone(),
        search_bound: bound,
        rows,
        beta,
        expected_beta: None,
        timings_ms,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::action::{lower_bound_witness, orbit_product, WitnessFamily};
    use crate::module_spec::VariableId;

    fn spec(p: u32, blocks: &[usize]) -> Arc<ModuleSpec> {
        Arc::new(ModuleSpec::new(p, blocks.to_vec()).unwrap())
    }

    #[test]
    fn v2_degree_one_is_x() {
        let s = spec(3, &[2]);
        let b = invariant_basis(&s, &DegreeConstraint::Total(1)).unwrap();
        assert_eq!(b.basis, vec![Polynomial::variable(&s, VariableId::new(0, 1))]);
    }

    #[test]
    fn v2_degree_three() {
        let s = spec(3, &[2]);
        let b = invariant_basis(&s, &DegreeConstraint::Total(3)).unwrap();
        assert_eq!(b.dim(), 2);
        let x = Polynomial::variable(&s, VariableId::new(0, 1));
        let mut e = InvariantEngine::new(Arc::clone(&s), EngineConfig::default());
        let inv = e.invariants(&[3]).unwrap();
        let block = e.block(&[3]).unwrap();
        assert!(inv.contains(&block.dense(&x.pow(3))));
        assert!(inv.contains(&block.dense(&orbit_product(&s, 0))));
    }

    #[test]
    fn trivial_module_everything_invariant() {
        for k in 1..=3usize {
            let s = spec(5, &vec![1; k]);
            for d in 0..4u32 {
                let b = invariant_basis(&s, &DegreeConstraint::Total(d)).unwrap();
                assert_eq!(b.dim() as u64, count_monomials(k, d));
            }
        }
    }

    #[test]
    fn basis_is_echelonized() {
        let s = spec(3, &[2, 3]);
        let b = invariant_basis(&s, &DegreeConstraint::Total(4)).unwrap();
        let leads: Vec<_> = b.basis.iter().map(|f| f.lead_term().unwrap()).collect();
        for w in leads.windows(2) {
            assert!(w[0].0 > w[1].0);
        }
        assert!(leads.iter().all(|(_, c)| c.value() == 1));
        assert!(b.basis.iter().all(is_invariant));
    }

    #[test]
    fn decomposables_v2() {
        let s = spec(3, &[2]);
        let bases: Vec<_> = (1..=3)
            .map(|d| invariant_basis(&s, &DegreeConstraint::Total(d)).unwrap())
            .collect();
        assert_eq!(decomposable_dimension(&s, 1, &bases).unwrap(), 0);
        assert_eq!(decomposable_dimension(&s, 2, &bases).unwrap(), 1);
        assert_eq!(decomposable_dimension(&s, 3, &bases).unwrap(), 1);
        assert_eq!(decomposable_dimension(&s, 4, &bases).unwrap(), 2);
        assert!(matches!(
            decomposable_dimension(&s, 5, &bases),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn generator_route_matches_product_of_bases() {
        for (p, blocks) in [(3, vec![2, 3]), (3, vec![2, 2]), (2, vec![2, 2, 2]), (5, vec![4]), (3, vec![3, 3])] {
            let s = spec(p, &blocks);
            let bound = s.upper_bound() as u32;
            let bases: Vec<_> = (1..=bound)
                .map(|d| invariant_basis(&s, &DegreeConstraint::Total(d)).unwrap())
                .collect();
            let mut e = InvariantEngine::new(Arc::clone(&s), EngineConfig::default());
            for d in 1..=bound {
                let (_, dec) = e.degree_dims(d).unwrap();
                assert_eq!(dec, decomposable_dimension(&s, d, &bases).unwrap(), "{s} p={p} d={d}");
            }
        }
    }

    #[test]
    fn indecomposability_examples() {
        let (s, h) = lower_bound_witness(3, 1, WitnessFamily::V3).unwrap();
        assert!(is_indecomposable(&s, &h).unwrap());

        let s2 = spec(3, &[2]);
        let x = Polynomial::variable(&s2, VariableId::new(0, 1));
        assert!(!is_indecomposable(&s2, &x.pow(2)).unwrap());

        let y = Polynomial::variable(&s2, VariableId::new(0, 0));
        assert!(matches!(is_indecomposable(&s2, &y), Err(Error::Precondition(_))));
        assert!(matches!(
            is_indecomposable(&s2, &(&x + &x.pow(2))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn known_noether_numbers() {
        for (p, text, beta) in [(3, "V2", 3), (5, "V4", 7), (3, "3V2", 6), (3, "V2+V3", 5), (2, "V2", 2)] {
            let r = noether_number(&ModuleSpec::parse(text, p).unwrap()).unwrap();
            assert_eq!(r.beta, beta, "{text} p={p}");
            assert!(r.rows.iter().all(|row| row.dim_dec <= row.dim_inv));
        }
    }

    #[test]
    fn all_trivial_convention() {
        let r = noether_number(&ModuleSpec::parse("3V1", 3).unwrap()).unwrap();
        assert_eq!(r.beta, 1);
        assert_eq!(r.search_bound, 1);
        assert_eq!(r.rows[0].dim_indec, 3);
        assert!(r.all_trivial());
    }

    #[test]
    fn trivial_summands_do_not_change_beta() {
        for (p, blocks) in [(3, vec![1, 3]), (3, vec![1, 2]), (2, vec![1, 2, 2])] {
            let s = spec(p, &blocks);
            let unstripped = noether_scan(&s, s.upper_bound(), EngineConfig::default()).unwrap();
            let stripped = noether_number(&s).unwrap();
            assert_eq!(unstripped.beta, stripped.beta, "{s}");
        }
    }

    #[test]
    fn column_cap_is_enforced() {
        let s = ModuleSpec::parse("V4", 5).unwrap();
        let err = noether_number_with(&s, EngineConfig { column_cap: 10 }).unwrap_err();
        assert!(matches!(err, Error::SizeBudget { .. }));
    }

    #[test]
    fn sub_multidegree_enumeration() {
        assert_eq!(sub_multidegrees(&[1, 2]).len(), 6);
        assert_eq!(sub_multidegrees(&[]), vec![Vec::<u32>::new()]);
    }
}
