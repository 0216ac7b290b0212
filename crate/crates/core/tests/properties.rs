//! Property tests: ring axioms on random polynomials, series inverses,
//! moment extraction roundtrips, and bijection roundtrips on random class
//! members.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;

use dperm_core::cfrac::{expand_rational_j, jfraction_from_moments};
use dperm_core::paths::{
    biane_inverse, biane_labels, fz_inverse, fz_labels, fz_path, LabelVariant,
};
use dperm_core::perm::{enumerate_d_permutations, DClass, Permutation};
use dperm_core::poly::{pq_integer, Poly, VarTable};
use dperm_core::series::TruncatedSeries;

type RawTerms = Vec<((u16, u16, u16), i64)>;

/// Raw term data for a random polynomial in three variables; materialized
/// against a shared table inside each test.
fn arb_terms() -> impl Strategy<Value = RawTerms> {
    proptest::collection::vec(((0u16..4, 0u16..4, 0u16..4), -5i64..=5), 0..6)
}

fn mk(terms: &RawTerms, vt: &mut VarTable) -> Poly {
    let x = vt.var("x");
    let y = vt.var("y");
    let z = vt.var("z");
    let mut acc = Poly::zero();
    for ((a, b, c), coeff) in terms {
        let m = x
            .pow(*a as u32)
            .mul(&y.pow(*b as u32))
            .mul(&z.pow(*c as u32))
            .scale(&BigInt::from(*coeff));
        acc = acc.add(&m);
    }
    acc
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_axioms(ta in arb_terms(), tb in arb_terms(), tc in arb_terms()) {
        let mut vt = VarTable::new();
        let a = mk(&ta, &mut vt);
        let b = mk(&tb, &mut vt);
        let c = mk(&tc, &mut vt);
        prop_assert_eq!(a.add(&b), b.add(&a));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.sub(&a), Poly::zero());
    }

    #[test]
    fn series_inverse_two_sided(coeffs in proptest::collection::vec(-4i64..=4, 1..6)) {
        let order = 6usize;
        let mut s = TruncatedSeries::one(order);
        for (k, c) in coeffs.iter().enumerate() {
            let term = TruncatedSeries::constant(order, Poly::from_i64(*c)).shift(k + 1);
            s = s.add(&term);
        }
        let inv = s.inverse_unit().unwrap();
        prop_assert_eq!(s.mul(&inv), TruncatedSeries::one(order));
        prop_assert_eq!(inv.mul(&s), TruncatedSeries::one(order));
    }

    #[test]
    fn pq_integer_symmetric(n in 0u32..=8) {
        let mut vt = VarTable::new();
        let p = vt.var("p");
        let q = vt.var("q");
        prop_assert_eq!(pq_integer(n, &p, &q), pq_integer(n, &q, &p));
    }

    #[test]
    fn moments_roundtrip(
        gs in proptest::collection::vec(-6i64..=6, 5..=5),
        bs in proptest::collection::vec(1i64..=6, 5..=5),
    ) {
        let gamma: Vec<BigRational> = gs.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        let beta: Vec<BigRational> = bs.iter().map(|&v| BigRational::from(BigInt::from(v))).collect();
        let m = expand_rational_j(&gamma, &beta, 9);
        let (g2, b2) = jfraction_from_moments(&m, 4).unwrap();
        prop_assert_eq!(&gamma[..5], &g2[..]);
        prop_assert_eq!(&beta[..4], &b2[..]);
    }

    #[test]
    fn bijection_roundtrips_random_member(n in 0usize..=4, pick in 0usize..10_000) {
        let members: Vec<Permutation> = enumerate_d_permutations(n, DClass::All).collect();
        let p = &members[pick % members.len()];
        let path = fz_path(p);
        for variant in [LabelVariant::Xi, LabelVariant::XiHat] {
            let labels = fz_labels(p, variant);
            prop_assert_eq!(&fz_inverse(&path, &labels, variant).unwrap(), p);
        }
        let out = biane_inverse(&path, &biane_labels(p)).unwrap();
        prop_assert_eq!(&out.permutation, p);
        prop_assert_eq!(out.cycles_closed as usize, p.cycle_count());
    }

    #[test]
    fn specialize_commutes_with_mul(ta in arb_terms(), tb in arb_terms(), xv in -4i64..=4, yv in -4i64..=4, zv in -4i64..=4) {
        let mut vt = VarTable::new();
        let a = mk(&ta, &mut vt);
        let b = mk(&tb, &mut vt);
        let map: HashMap<usize, BigInt> = [(0usize, xv), (1, yv), (2, zv)]
            .into_iter()
            .map(|(i, v)| (i, BigInt::from(v)))
            .collect();
        let lhs = a.mul(&b).specialize(&map);
        let rhs = a.specialize(&map).mul(&b.specialize(&map));
        prop_assert_eq!(lhs, rhs);
    }
}
