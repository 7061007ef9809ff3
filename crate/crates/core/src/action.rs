//! The action of Z/p = <σ> on F_p[W].
//!
//! σ acts on a chain variable by σ(Δ^t z) = Δ^t z + Δ^{t+1} z, so
//! σ^l(Δ^t z) = Σ_j C(l, j) Δ^{t+j} z, and extends to an algebra
//! automorphism.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::module_spec::{ModuleSpec, VariableId};
use crate::monomial::Monomial;
use crate::polynomial::Polynomial;

/// Image of a single variable under σ^l as a linear form.
fn sigma_power_var(spec: &Arc<ModuleSpec>, index: usize, l: u32) -> Polynomial {
    let f = spec.field();
    let n = spec.num_vars();
    let mut terms = Vec::new();
    let mut cur = Some(index);
    let mut j = 0u64;
    while let Some(v) = cur {
        let c = f.binomial(l as u64, j);
        if c != 0 {
            terms.push((Monomial::var(n, v), c));
        }
        cur = spec.delta_of(v);
        j += 1;
    }
    Polynomial::from_terms(spec, terms)
}

/// σ^l applied to a polynomial. `l` is taken mod p.
pub fn sigma_power(f: &Polynomial, l: i64) -> Polynomial {
    let spec = f.spec();
    let l = spec.field().from_i64(l);
    if l == 0 {
        return f.clone();
    }
    let images: Vec<Polynomial> = (0..spec.num_vars()).map(|i| sigma_power_var(spec, i, l)).collect();
    let mut powers: HashMap<(usize, u16), Polynomial> = HashMap::new();
    let mut out = Polynomial::zero(spec);
    for (m, c) in f.terms() {
        let mut img = Polynomial::constant(spec, c as i64);
        for (v, e) in m.support() {
            let pw = powers.entry((v, e)).or_insert_with(|| images[v].pow(e as u32));
            img = &img * pw;
        }
        out = &out + &img;
    }
    out
}

/// σ applied `times` times, one step at a time. Used as a cross-check of
/// the binomial form.
pub fn sigma_iterated(f: &Polynomial, times: usize) -> Polynomial {
    let mut g = f.clone();
    for _ in 0..times {
        g = sigma_power(&g, 1);
    }
    g
}

/// Δ = σ - 1.
pub fn delta(f: &Polynomial) -> Polynomial {
    &sigma_power(f, 1) - f
}

/// Tr(f) = Σ_{l=0}^{p-1} σ^l(f).
pub fn transfer(f: &Polynomial) -> Polynomial {
    let p = f.spec().p();
    (0..p as i64).fold(Polynomial::zero(f.spec()), |acc, l| &acc + &sigma_power(f, l))
}

pub fn is_invariant(f: &Polynomial) -> bool {
    sigma_power(f, 1) == *f
}

/// ∏_{l=0}^{p-1} σ^l(z_i) for the generator z_i of summand `summand`.
pub fn orbit_product(spec: &Arc<ModuleSpec>, summand: usize) -> Polynomial {
    let z = Polynomial::variable(spec, VariableId::new(summand, 0));
    (0..spec.p() as i64).fold(Polynomial::one(spec), |acc, l| &acc * &sigma_power(&z, l))
}

/// True iff `m` lies in the subalgebra A generated by the non-terminal
/// variables Δ^t z_i, t ≥ 1.
pub fn is_in_a(spec: &ModuleSpec, m: &Monomial) -> bool {
    m.support().all(|(i, _)| spec.depth_of(i) >= 1)
}

/// Variables of `m` with multiplicity, largest first.
fn factors_descending(m: &Monomial) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.degree() as usize);
    for (i, e) in m.support().collect::<Vec<_>>().into_iter().rev() {
        out.extend(std::iter::repeat_n(i, e as usize));
    }
    out
}

fn check_f_input(spec: &ModuleSpec, m: &Monomial) -> Result<Vec<usize>> {
    let p = spec.p();
    if m.nvars() != spec.num_vars() {
        return Err(Error::Precondition("monomial has the wrong number of variables".into()));
    }
    if m.degree() != p - 1 {
        return Err(Error::Precondition(format!(
            "monomial must have degree p-1 = {}, got {}",
            p - 1,
            m.degree()
        )));
    }
    if !is_in_a(spec, m) {
        return Err(Error::Precondition(
            "monomial uses a depth-0 variable, so it is not in A".into(),
        ));
    }
    Ok(factors_descending(m)
        .into_iter()
        .map(|u| spec.delta_preimage(u).expect("depth >= 1"))
        .collect())
}

/// For a degree p-1 monomial m = u_1...u_{p-1} in A, with Δ(w_j) = u_j:
/// F = Σ_{l ∈ F_p} ∏_j (w_j - σ^l(w_j)). Its lead term is -m.
pub fn build_f(spec: &Arc<ModuleSpec>, m: &Monomial) -> Result<Polynomial> {
    let ws = check_f_input(spec, m)?;
    let mut total = Polynomial::zero(spec);
    for l in 0..spec.p() as i64 {
        let mut prod = Polynomial::one(spec);
        for &w in &ws {
            let wv = Polynomial::var(spec, w);
            prod = &prod * &(&wv - &sigma_power(&wv, l));
        }
        total = &total + &prod;
    }
    Ok(total)
}

/// The same F written as Σ_{S ⊆ {1..p-1}} (-1)^{|S|} X_{S'} Tr(X_S).
pub fn f_transfer_expansion(spec: &Arc<ModuleSpec>, m: &Monomial) -> Result<Polynomial> {
    let ws = check_f_input(spec, m)?;
    let n = spec.num_vars();
    let r = ws.len();
    let mut total = Polynomial::zero(spec);
    for mask in 0u32..(1u32 << r) {
        let mut xs = Monomial::one(n);
        let mut xs_comp = Monomial::one(n);
        for (j, &w) in ws.iter().enumerate() {
            if mask & (1 << j) != 0 {
                xs = xs.mul_var(w);
            } else {
                xs_comp = xs_comp.mul_var(w);
            }
        }
        let tr = transfer(&Polynomial::monomial(spec, xs)).mul_monomial(&xs_comp);
        let sign = if mask.count_ones() % 2 == 1 { -1 } else { 1 };
        total = &total + &tr.scalar_mul(sign);
    }
    Ok(total)
}

/// Which indecomposable summand a lower-bound witness is built on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WitnessFamily {
    /// Tr((y_1...y_{k-1} z)^{p-1} y^{p-2}) in F[(k-1)V_2 + V_4].
    V4,
    /// Tr((y_1...y_{k-1} z)^{p-1} y) in F[(k-1)V_2 + V_3].
    V3,
}

impl WitnessFamily {
    pub fn block(&self) -> usize {
        match self {
            WitnessFamily::V4 => 4,
            WitnessFamily::V3 => 3,
        }
    }

    pub fn expected_degree(&self, p: u32, k: usize) -> usize {
        let p = p as usize;
        match self {
            WitnessFamily::V4 => k * (p - 1) + p - 2,
            WitnessFamily::V3 => k * (p - 1) + 1,
        }
    }
}

/// The module (k-1)V_2 + V_n and its transfer witness of high degree.
pub fn lower_bound_witness(p: u32, k: usize, family: WitnessFamily) -> Result<(Arc<ModuleSpec>, Polynomial)> {
    if k == 0 {
        return Err(Error::Precondition("witness needs k >= 1".into()));
    }
    let mut blocks = vec![2; k - 1];
    blocks.push(family.block());
    let spec = Arc::new(ModuleSpec::new(p, blocks)?);
    let n = spec.num_vars();
    let last = k - 1;
    let mut exps = vec![0u16; n];
    for s in 0..k {
        exps[spec.var_index(VariableId::new(s, 0))] = (p - 1) as u16;
    }
    let y_exp = match family {
        WitnessFamily::V4 => p.saturating_sub(2),
        WitnessFamily::V3 => 1,
    };
    exps[spec.var_index(VariableId::new(last, 1))] += y_exp as u16;
    let h = transfer(&Polynomial::monomial(&spec, Monomial::from_exponents(exps)));
    Ok((spec, h))
}
