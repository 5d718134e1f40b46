mod common;

use common::*;
use frobenius_core::{OperatorPoly, RingContext, Semantics};
use proptest::prelude::*;

fn poly_strategy(ctx: RingContext, sem: Semantics, max_degree: usize) -> impl Strategy<Value = OperatorPoly> {
    prop::collection::vec((mono_strategy(ctx, max_degree), 1..ctx.p() as i64), 0..=4)
        .prop_map(move |terms| OperatorPoly::from_terms(ctx, sem, terms).unwrap())
}

fn poly_triples(sem: Semantics) -> impl Strategy<Value = (OperatorPoly, OperatorPoly, OperatorPoly)> {
    ctx_strategy(&[2, 3, 5], 2).prop_flat_map(move |c| {
        (poly_strategy(c, sem, 6), poly_strategy(c, sem, 6), poly_strategy(c, sem, 6))
    })
}

fn ring_axioms(a: &OperatorPoly, b: &OperatorPoly, c: &OperatorPoly) -> Result<(), TestCaseError> {
    let ab_c = a.mul(b).unwrap().mul(c).unwrap();
    let a_bc = a.mul(&b.mul(c).unwrap()).unwrap();
    prop_assert_eq!(ab_c, a_bc);
    let left = a.mul(&b.add(c).unwrap()).unwrap();
    prop_assert_eq!(left, a.mul(b).unwrap().add(&a.mul(c).unwrap()).unwrap());
    let right = a.add(b).unwrap().mul(c).unwrap();
    prop_assert_eq!(right, a.mul(c).unwrap().add(&b.mul(c).unwrap()).unwrap());
    let one = OperatorPoly::one(a.ctx(), a.semantics());
    prop_assert_eq!(&one.mul(a).unwrap(), a);
    prop_assert_eq!(&a.mul(&one).unwrap(), a);
    prop_assert!(a.sub(a).unwrap().is_zero());
    Ok(())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1_000))]

    #[test]
    fn ring_axioms_truncating((a, b, c) in poly_triples(Semantics::Truncating)) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn ring_axioms_carrying((a, b, c) in poly_triples(Semantics::Carrying)) {
        ring_axioms(&a, &b, &c)?;
    }

    #[test]
    fn symbol_is_multiplicative((g, h, _) in poly_triples(Semantics::Carrying)) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let rhs = g.bernstein_symbol().unwrap().mul(&h.bernstein_symbol().unwrap()).unwrap();
        prop_assume!(!rhs.is_zero());
        prop_assert_eq!(g.mul(&h).unwrap().bernstein_symbol().unwrap(), rhs);
    }

    #[test]
    fn leading_terms_multiply((g, h, _) in poly_triples(Semantics::Truncating)) {
        prop_assume!(!g.is_zero() && !h.is_zero());
        let (cg, lg) = g.leading_term().unwrap();
        let (ch, lh) = h.leading_term().unwrap();
        if let Some(m) = lg.mul_trunc(lh).unwrap() {
            let gh = g.mul(&h).unwrap();
            let (c, lead) = gh.leading_term().unwrap();
            prop_assert_eq!(lead, &m);
            prop_assert_eq!(c, g.ctx().mul(cg, ch));
        }
    }
}

#[test]
fn example_symbols() {
    let c = ctx(2, 1);
    let sym = |terms: &[(&str, i64)]| poly(terms, c, Semantics::Carrying).bernstein_symbol().unwrap().to_string();
    assert_eq!(sym(&[("F", 1), ("1", -1)]), "f");
    assert_eq!(sym(&[("xF", 1), ("1", -1)]), "xf");
    assert_eq!(sym(&[("x", 1)]), "x");
    assert!(OperatorPoly::zero(c, Semantics::Carrying).bernstein_symbol().is_err());
}

#[test]
fn frobenius_commutation() {
    let c = ctx(3, 1);
    let lhs = poly(&[("x^3", 1)], c, Semantics::Carrying).mul(&poly(&[("F", 1)], c, Semantics::Carrying)).unwrap();
    assert_eq!(lhs, poly(&[("Fx", 1)], c, Semantics::Carrying));
    let trunc = poly(&[("x^3", 1)], c, Semantics::Truncating).mul(&poly(&[("f", 1)], c, Semantics::Truncating));
    assert!(trunc.unwrap().is_zero());
}
