#![allow(dead_code)]

use std::sync::Arc;

use frobenius_core::monomial::parse_word_as;
use frobenius_core::{
    FreeModule, FrobMonomial, GroebnerBasis, ModuleVector, OperatorPoly, PositionedMonomial, RingContext, Semantics,
};
use proptest::prelude::*;
use rand::seq::SliceRandom;
use rand::Rng;

pub fn ctx(p: u64, n: usize) -> RingContext {
    RingContext::new(p, n).unwrap()
}

pub fn mono(text: &str, ctx: RingContext) -> FrobMonomial {
    let sem = if text.contains('F') { Semantics::Carrying } else { Semantics::Truncating };
    parse_word_as(text, ctx, sem).unwrap().unwrap()
}

pub fn poly(terms: &[(&str, i64)], ctx: RingContext, sem: Semantics) -> OperatorPoly {
    let terms = terms.iter().map(|(w, c)| (parse_word_as(w, ctx, sem).unwrap().unwrap(), *c)).collect();
    OperatorPoly::from_terms(ctx, sem, terms).unwrap()
}

pub fn cyclic(polys: &[OperatorPoly]) -> Vec<ModuleVector> {
    let shape = FreeModule::unshifted(polys[0].ctx(), 1).unwrap();
    polys.iter().map(|g| g.to_vector(&shape, 0).unwrap()).collect()
}

/// Turns a letter sequence (`0..n` a variable, `n` the Frobenius letter) into
/// a nonzero monomial, clamping any block that reaches `p`.
pub fn from_letters(ctx: RingContext, letters: &[usize]) -> FrobMonomial {
    let n = ctx.n();
    let mut blocks: Vec<Vec<u32>> = Vec::new();
    let mut current = vec![0u32; n];
    for &l in letters {
        if l == n {
            blocks.push(std::mem::replace(&mut current, vec![0; n]));
        } else {
            current[l] += 1;
        }
    }
    for b in &mut blocks {
        for a in b.iter_mut() {
            *a = (*a).min(ctx.p() - 1);
        }
    }
    FrobMonomial::from_blocks(ctx, &blocks, &current).unwrap()
}

pub fn ctx_strategy(primes: &'static [u64], max_n: usize) -> impl Strategy<Value = RingContext> {
    (prop::sample::select(primes), 1..=max_n).prop_map(|(p, n)| ctx(p, n))
}

pub fn mono_strategy(ctx: RingContext, max_degree: usize) -> impl Strategy<Value = FrobMonomial> {
    prop::collection::vec(0..=ctx.n(), 0..=max_degree).prop_map(move |letters| from_letters(ctx, &letters))
}

pub fn random_mono<R: Rng>(rng: &mut R, ctx: RingContext, max_degree: usize) -> FrobMonomial {
    let len = rng.gen_range(0..=max_degree);
    let letters: Vec<usize> = (0..len).map(|_| rng.gen_range(0..=ctx.n())).collect();
    from_letters(ctx, &letters)
}

pub fn random_poly<R: Rng>(rng: &mut R, ctx: RingContext, sem: Semantics, max_degree: usize, terms: usize) -> OperatorPoly {
    let terms = (0..terms).map(|_| (random_mono(rng, ctx, max_degree), rng.gen_range(1..ctx.p() as i64))).collect();
    OperatorPoly::from_terms(ctx, sem, terms).unwrap()
}

/// A homogeneous element of 𝐀 of the given degree with up to `terms` terms.
pub fn random_homogeneous<R: Rng>(rng: &mut R, ctx: RingContext, degree: u32, terms: usize) -> OperatorPoly {
    let pool = FrobMonomial::all_of_degree(ctx, degree);
    let picked: Vec<(FrobMonomial, i64)> = pool
        .choose_multiple(rng, terms.min(pool.len()))
        .map(|m| (m.clone(), rng.gen_range(1..ctx.p() as i64)))
        .collect();
    OperatorPoly::from_terms(ctx, Semantics::Truncating, picked).unwrap()
}

pub fn small_ring<R: Rng>(rng: &mut R) -> RingContext {
    ctx(*[2u64, 3].choose(rng).unwrap(), rng.gen_range(1..=2))
}

pub fn positioned(m: FrobMonomial, pos: usize) -> PositionedMonomial {
    PositionedMonomial::new(m, pos)
}

/// Every accepted element obeys `rb = 0` or `rb + deg ≤ C`.
pub fn certificate_holds(gb: &GroebnerBasis) -> bool {
    gb.elements.iter().all(|g| {
        let rb = g.robustness() as i64;
        rb == 0 || rb + g.degree().unwrap() <= gb.trace.robustness_bound
    })
}

pub fn unshifted(ctx: RingContext) -> Arc<FreeModule> {
    FreeModule::unshifted(ctx, 1).unwrap()
}

pub mod suites;
