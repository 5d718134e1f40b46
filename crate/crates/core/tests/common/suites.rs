//! Randomized suites shared by the property tests and the acceptance gate.

use frobenius_core::syzygy::MonomialSyzygy;
use frobenius_core::{
    buchberger, count_standard_monomials, generating_syzygies, graded_dim_quotient, hs_monomial_quotient,
    initial_module, ModuleVector, PositionedMonomial, Semantics, FreeModule, InitialModule, MembershipOracle,
    brute_syzygies, HilbertRational, DEFAULT_CAP,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;

pub struct SuiteOutcome {
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SuiteOutcome {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Oracle dimension of `𝐀/I` against standard-monomial counts, for random
/// homogeneous ideals with complete bases, in every degree up to 8.
pub fn macaulay_suite(ideals: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    let mut cases = 0;
    while cases < ideals {
        let ctx = small_ring(&mut rng);
        let k = rng.gen_range(1..=3);
        let polys: Vec<_> = (0..k)
            .map(|_| {
                let d = rng.gen_range(1..=4);
                let t = rng.gen_range(1..=3);
                random_homogeneous(&mut rng, ctx, d, t)
            })
            .collect();
        let gens = cyclic(&polys);
        let gb = match buchberger(&gens, DEFAULT_CAP) {
            Ok(gb) => gb,
            Err(e) => {
                failures.push(format!("{polys:?}: {e}"));
                cases += 1;
                continue;
            }
        };
        if !gb.status.is_complete() {
            continue;
        }
        cases += 1;
        if !certificate_holds(&gb) {
            failures.push(format!("certificate breached by the final basis of {polys:?}"));
        }
        let initial = initial_module(&gb);
        for d in 0..=8 {
            let oracle = graded_dim_quotient(gens[0].shape(), &gens, d).unwrap();
            let counted = count_standard_monomials(&initial, d);
            if counted != oracle.into() {
                failures.push(format!("p={} n={} {polys:?} degree {d}: oracle {oracle}, counted {counted}", ctx.p(), ctx.n()));
            }
        }
    }
    SuiteOutcome { cases, failures }
}

pub fn syzygy_vectors(syz: &[MonomialSyzygy], shape: &std::sync::Arc<FreeModule>) -> Vec<ModuleVector> {
    syz.iter()
        .map(|z| {
            let terms = z
                .terms
                .iter()
                .map(|t| (PositionedMonomial::new(t.cofactor.clone(), t.generator), t.coefficient as i64))
                .collect();
            ModuleVector::from_terms(shape.clone(), Semantics::Truncating, terms).unwrap()
        })
        .collect()
}

/// Every brute-force syzygy of Schreyer degree at most 8 lies in the span of
/// the generating syzygies.
pub fn syzygy_completeness_suite(lists: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..lists {
        let ctx = small_ring(&mut rng);
        let len = rng.gen_range(2..=4);
        let positions = if rng.gen_bool(0.3) { 2 } else { 1 };
        let gens: Vec<PositionedMonomial> = (0..len)
            .map(|_| positioned(random_mono(&mut rng, ctx, 4), rng.gen_range(0..positions)))
            .collect();
        let brute = brute_syzygies(&gens, 8).unwrap();
        let shape = FreeModule::new(ctx, gens.iter().map(|g| g.mono.degree() as i64).collect()).unwrap();
        let generated = generating_syzygies(&gens);
        let span = MembershipOracle::new(&syzygy_vectors(&generated, &shape), 8).unwrap();
        let shown: Vec<String> = gens.iter().map(|g| format!("{}@{}", g.mono, g.pos)).collect();
        if let Some(missing) = brute.iter().find(|z| !span.contains(z)) {
            failures.push(format!("p={} n={} {shown:?}: {missing} not generated", ctx.p(), ctx.n()));
        }
        for z in &generated {
            if !z.evaluate(&gens).is_empty() {
                failures.push(format!("{shown:?}: {z} does not vanish"));
            }
        }
    }
    SuiteOutcome { cases: lists, failures }
}

/// A random monomial quotient `𝐀/I` with a complete basis, as its initial module.
pub fn random_monomial_quotient<R: Rng>(rng: &mut R, ctx: frobenius_core::RingContext) -> InitialModule {
    loop {
        let k = rng.gen_range(0..=3);
        let polys: Vec<_> = (0..k)
            .map(|_| {
                let m = random_mono(rng, ctx, 4);
                frobenius_core::OperatorPoly::monomial(m, 1, Semantics::Truncating)
            })
            .collect();
        let shape = unshifted(ctx);
        let gens: Vec<_> = polys.iter().map(|g| g.to_vector(&shape, 0).unwrap()).collect();
        let gb = frobenius_core::buchberger_in(shape, Semantics::Truncating, &gens, DEFAULT_CAP).unwrap();
        if gb.status.is_complete() {
            return initial_module(&gb);
        }
    }
}

/// Direct sums of monomial quotients: series add, `δ` is the maximum and
/// multiplicities add on ties.
pub fn additivity_suite(pairs: usize, seed: u64) -> SuiteOutcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut failures = Vec::new();
    for _ in 0..pairs {
        let ctx = small_ring(&mut rng);
        let a = random_monomial_quotient(&mut rng, ctx);
        let b = random_monomial_quotient(&mut rng, ctx);
        let shift = rng.gen_range(0..=2i64);
        let sum = InitialModule::new(ctx, vec![0, shift], vec![a.generators(0).to_vec(), b.generators(0).to_vec()])
            .unwrap();
        let hs = |m: &InitialModule| -> HilbertRational { hs_monomial_quotient(m).unwrap().0 };
        let (ha, hb, hsum) = (hs(&a), hs(&b).scale_by_t(shift as usize), hs(&sum));
        let label = format!("p={} n={} {a} + {b}(-{shift})", ctx.p(), ctx.n());
        if !hsum.same_function(&ha.add(&hb).unwrap()) {
            failures.push(format!("{label}: series do not add"));
        }
        if hsum.delta() != ha.delta().max(hb.delta()) {
            failures.push(format!("{label}: delta is not the maximum"));
        }
        if ha.delta() == hb.delta() && hsum.multiplicity() != ha.multiplicity() + hb.multiplicity() {
            failures.push(format!("{label}: multiplicities do not add"));
        }
    }
    SuiteOutcome { cases: pairs, failures }
}
