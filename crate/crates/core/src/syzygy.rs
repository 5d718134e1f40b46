//! Generators for the left syzygies of a list of monomials of `𝐀^t`.
//!
//! Every syzygy produced here has one or two terms: annihilators `x_i^{p-v_i} ε_j`
//! of generators with positive f-order, least-common-multiple syzygies
//! between monomials that differ only in their first block (or are pure
//! x-monomials), and `c ε_i - ε_j` when `a_j = c · a_i` with `c` of positive
//! f-order.

use std::fmt;

use crate::monomial::{FrobMonomial, PositionedMonomial, Word};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SyzygyTerm {
    pub coefficient: u32,
    pub cofactor: FrobMonomial,
    pub generator: usize,
}

/// A homogeneous syzygy with at most two terms, graded by the common word
/// `cofactor · generator` in the free monoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MonomialSyzygy {
    pub terms: Vec<SyzygyTerm>,
    pub schreyer_word: Word,
    pub pos: usize,
}

impl MonomialSyzygy {
    /// Integer Schreyer degree in a free module with the given shifts.
    pub fn degree(&self, shifts: &[i64]) -> i64 {
        self.schreyer_word.degree() as i64 + shifts[self.pos]
    }

    /// `Σ c_k · cofactor_k · a_k` in 𝐀, as a list of surviving terms; empty
    /// exactly when the syzygy relation holds.
    pub fn evaluate(&self, gens: &[PositionedMonomial]) -> Vec<(PositionedMonomial, u32)> {
        let ctx = gens[self.terms[0].generator].mono.ctx();
        let mut acc: Vec<(PositionedMonomial, u32)> = Vec::new();
        for t in &self.terms {
            let g = &gens[t.generator];
            if let Some(m) = t.cofactor.trunc_product(&g.mono) {
                let key = PositionedMonomial::new(m, g.pos);
                match acc.iter_mut().find(|(k, _)| *k == key) {
                    Some(entry) => entry.1 = ctx.add(entry.1, t.coefficient),
                    None => acc.push((key, t.coefficient)),
                }
            }
        }
        acc.retain(|(_, c)| *c != 0);
        acc
    }
}

impl fmt::Display for MonomialSyzygy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|t| {
                let c = if t.coefficient == 1 { String::new() } else { format!("{}*", t.coefficient) };
                format!("{c}{}*e{}", t.cofactor, t.generator + 1)
            })
            .collect();
        write!(f, "{}  @ {}", parts.join(" + "), self.schreyer_word)
    }
}

fn single(cofactor: FrobMonomial, generator: usize, a: &FrobMonomial, pos: usize) -> MonomialSyzygy {
    let schreyer_word = Word::concat(&cofactor, a);
    MonomialSyzygy { terms: vec![SyzygyTerm { coefficient: 1, cofactor, generator }], schreyer_word, pos }
}

fn pair(
    ca: FrobMonomial,
    i: usize,
    a: &FrobMonomial,
    cb: FrobMonomial,
    j: usize,
    pos: usize,
) -> MonomialSyzygy {
    let minus_one = a.ctx().p() - 1;
    let schreyer_word = Word::concat(&ca, a);
    MonomialSyzygy {
        terms: vec![
            SyzygyTerm { coefficient: 1, cofactor: ca, generator: i },
            SyzygyTerm { coefficient: minus_one, cofactor: cb, generator: j },
        ],
        schreyer_word,
        pos,
    }
}

/// The annihilators `x_i^{p - v_i} ε` of a monomial `x^v f m`; empty for
/// pure x-monomials.
pub fn annihilators(a: &FrobMonomial, index: usize, pos: usize) -> Vec<MonomialSyzygy> {
    if a.f_order() == 0 {
        return Vec::new();
    }
    let ctx = a.ctx();
    let first = a.block(0);
    (0..ctx.n())
        .map(|i| {
            let mut e = vec![0; ctx.n()];
            e[i] = ctx.p() - first[i];
            let cofactor = FrobMonomial::x_power(ctx, &e).expect("length n");
            single(cofactor, index, a, pos)
        })
        .collect()
}

fn lcm_cofactors(v: &[u32], u: &[u32]) -> (Vec<u32>, Vec<u32>) {
    v.iter().zip(u).map(|(&a, &b)| (a.max(b) - a, a.max(b) - b)).unzip()
}

/// The two-term syzygies between `a` (generator `i`) and `b` (generator `j`)
/// sitting in the same position.
pub fn pair_relations(a: &FrobMonomial, i: usize, b: &FrobMonomial, j: usize, pos: usize) -> Vec<MonomialSyzygy> {
    let ctx = a.ctx();
    let n = ctx.n();
    let mut out = Vec::new();
    let (da, db) = (a.f_order(), b.f_order());
    if da == 0 && db == 0 {
        let (ea, eb) = lcm_cofactors(a.tail(), b.tail());
        let ca = FrobMonomial::x_power(ctx, &ea).expect("length n");
        let cb = FrobMonomial::x_power(ctx, &eb).expect("length n");
        out.push(pair(ca, i, a, cb, j, pos));
        return out;
    }
    if da == db && a.layout()[n..] == b.layout()[n..] {
        let (ea, eb) = lcm_cofactors(a.block(0), b.block(0));
        let ca = FrobMonomial::x_power(ctx, &ea).expect("length n");
        let cb = FrobMonomial::x_power(ctx, &eb).expect("length n");
        out.push(pair(ca, i, a, cb, j, pos));
    }
    if da < db {
        if let Some(c) = b.divide_left(a) {
            out.push(pair(c, i, a, FrobMonomial::identity(ctx), j, pos));
        }
    } else if db < da {
        if let Some(c) = a.divide_left(b) {
            out.push(pair(c, j, b, FrobMonomial::identity(ctx), i, pos));
        }
    }
    out
}

/// Generators of `Syz(a, b) ⊆ 𝐀ε_1 ⊕ 𝐀ε_2` (generator indices 0 and 1).
pub fn pair_syzygies(a: &FrobMonomial, b: &FrobMonomial) -> Vec<MonomialSyzygy> {
    let mut out = annihilators(a, 0, 0);
    out.extend(annihilators(b, 1, 0));
    out.extend(pair_relations(a, 0, b, 1, 0));
    out
}

/// Generators of the syzygy module of a list of positioned monomials.
pub fn generating_syzygies(gens: &[PositionedMonomial]) -> Vec<MonomialSyzygy> {
    let mut out = Vec::new();
    for (j, g) in gens.iter().enumerate() {
        for i in 0..j {
            if gens[i].pos == g.pos {
                out.extend(pair_relations(&gens[i].mono, i, &g.mono, j, g.pos));
            }
        }
        out.extend(annihilators(&g.mono, j, g.pos));
    }
    let mut seen = std::collections::HashSet::new();
    out.retain(|s| seen.insert(s.clone()));
    out
}
