mod common;

use common::suites::syzygy_completeness_suite;
use common::*;
use frobenius_core::monomial::Word;
use frobenius_core::{generating_syzygies, PositionedMonomial};
use proptest::prelude::*;

fn generator_lists() -> impl Strategy<Value = Vec<PositionedMonomial>> {
    ctx_strategy(&[2, 3, 5], 2).prop_flat_map(|c| {
        prop::collection::vec((mono_strategy(c, 5), 0..2usize), 1..=5)
            .prop_map(|v| v.into_iter().map(|(m, pos)| positioned(m, pos)).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn emitted_syzygies_vanish(gens in generator_lists()) {
        for z in generating_syzygies(&gens) {
            prop_assert!(z.evaluate(&gens).is_empty(), "{}", z);
        }
    }

    #[test]
    fn emitted_syzygies_are_homogeneous(gens in generator_lists()) {
        for z in generating_syzygies(&gens) {
            prop_assert!(z.terms.len() <= 2);
            for t in &z.terms {
                prop_assert_eq!(gens[t.generator].pos, z.pos);
                prop_assert_eq!(&Word::concat(&t.cofactor, &gens[t.generator].mono), &z.schreyer_word);
            }
        }
    }
}

#[test]
fn brute_force_syzygies_are_generated() {
    let outcome = syzygy_completeness_suite(40, 0x5e7);
    assert!(outcome.passed(), "{:#?}", outcome.failures);
}
