//! Property tests for the algebraic building blocks.

use std::sync::Arc;

use proptest::prelude::*;

use modinv_core::action::{delta, is_invariant, sigma_iterated, sigma_power, transfer};
use modinv_core::linalg::{Echelon, FpMatrix};
use modinv_core::monomial::{count_for, count_monomials, enumerate_monomials};
use modinv_core::{DegreeConstraint, ModuleSpec, Monomial, Polynomial, PrimeField};

fn spec_strategy() -> impl Strategy<Value = Arc<ModuleSpec>> {
    prop::sample::select(vec![2u32, 3, 5, 7]).prop_flat_map(|p| {
        let max = (p as usize).min(4);
        prop::collection::vec(1..=max, 1..=2).prop_map(move |b| Arc::new(ModuleSpec::new(p, b).unwrap()))
    })
}

fn monomial_strategy(n: usize, max_exp: u16) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..=max_exp, n).prop_map(Monomial::from_exponents)
}

fn poly_strategy(spec: Arc<ModuleSpec>) -> impl Strategy<Value = Polynomial> {
    let n = spec.num_vars();
    let p = spec.p();
    prop::collection::vec((monomial_strategy(n, 2), 1..p), 0..4)
        .prop_map(move |terms| Polynomial::from_terms(&spec, terms))
}

fn spec_and_two_polys() -> impl Strategy<Value = (Polynomial, Polynomial)> {
    spec_strategy().prop_flat_map(|s| (poly_strategy(Arc::clone(&s)), poly_strategy(s)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn grevlex_is_multiplicative(a in monomial_strategy(5, 3), b in monomial_strategy(5, 3), c in monomial_strategy(5, 3)) {
        prop_assert_eq!(a.cmp(&b), a.mul(&c).cmp(&b.mul(&c)));
    }

    #[test]
    fn grevlex_respects_degree(a in monomial_strategy(4, 3), b in monomial_strategy(4, 3)) {
        if a.degree() > b.degree() {
            prop_assert!(a > b);
        }
    }

    #[test]
    fn lead_term_of_product((f, g) in spec_and_two_polys()) {
        // F_p has no zero divisors, so LT(fg) = LT(f) LT(g)
        if !f.is_zero() && !g.is_zero() {
            let (mf, cf) = f.lead_term().unwrap();
            let (mg, cg) = g.lead_term().unwrap();
            let (m, c) = (&f * &g).lead_term().unwrap();
            prop_assert_eq!(m, mf.mul(&mg));
            prop_assert_eq!(c, cf * cg);
        }
    }

    #[test]
    fn sigma_has_order_p((f, _) in spec_and_two_polys()) {
        let p = f.spec().p();
        prop_assert_eq!(sigma_iterated(&f, p as usize), f.clone());
        prop_assert_eq!(sigma_power(&f, -1), sigma_power(&f, p as i64 - 1));
    }

    #[test]
    fn sigma_is_a_ring_map((f, g) in spec_and_two_polys()) {
        prop_assert_eq!(sigma_power(&(&f * &g), 1), &sigma_power(&f, 1) * &sigma_power(&g, 1));
        prop_assert_eq!(sigma_power(&(&f + &g), 2), &sigma_power(&f, 2) + &sigma_power(&g, 2));
    }

    #[test]
    fn delta_to_the_p_vanishes((f, _) in spec_and_two_polys()) {
        // (σ - 1)^p = σ^p - 1 = 0 in characteristic p
        let p = f.spec().p();
        let mut g = f.clone();
        for _ in 0..p {
            g = delta(&g);
        }
        prop_assert!(g.is_zero());
    }

    #[test]
    fn transfer_is_invariant((f, _) in spec_and_two_polys()) {
        prop_assert!(is_invariant(&transfer(&f)));
    }

    #[test]
    fn rank_nullity(p in prop::sample::select(vec![2u32, 3, 5, 65521]), rows in 1usize..6, cols in 1usize..7, seed in 0i64..1000) {
        let field = PrimeField::new(p).unwrap();
        let data: Vec<Vec<i64>> = (0..rows)
            .map(|i| (0..cols).map(|j| (seed * 31 + (i * 7 + j * 13) as i64 * seed % 17) % 4).collect())
            .collect();
        let m = FpMatrix::from_rows(field, &data);
        let ker = m.kernel_basis();
        prop_assert_eq!(m.rank() + ker.len(), cols);
        for v in &ker {
            prop_assert!(m.mul_vec(v).iter().all(|&x| x == 0));
        }
    }

    #[test]
    fn echelon_insert_matches_bulk(p in prop::sample::select(vec![3u32, 5, 7]), vals in prop::collection::vec(prop::collection::vec(0u32..7, 5), 1..6)) {
        let field = PrimeField::new(p).unwrap();
        let rows: Vec<Vec<u32>> = vals.iter().map(|r| r.iter().map(|&x| x % p).collect()).collect();
        let bulk = Echelon::from_rows(field, rows.clone(), 5);
        let mut inc = Echelon::empty(field, 5);
        for r in rows {
            inc.insert(&r);
        }
        prop_assert_eq!(bulk.rows(), inc.rows());
    }

    #[test]
    fn enumeration_count(spec in spec_strategy(), d in 0u32..5) {
        let mons = enumerate_monomials(&spec, &DegreeConstraint::Total(d));
        prop_assert_eq!(mons.len() as u64, count_monomials(spec.num_vars(), d));
        prop_assert_eq!(count_for(&spec, &DegreeConstraint::Total(d)), mons.len() as u64);
        for w in mons.windows(2) {
            prop_assert!(w[0] > w[1]);
        }
    }
}
