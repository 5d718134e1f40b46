//! Hilbert series of monomial quotients of `𝐀^t`.
//!
//! Series are exact rational functions `a(t) / ((1-t)^d g_{p,n}(t))` with
//! `g_{p,n}(t) = 1 - t(1 + t + … + t^{p-1})^n`. The numerator is recovered
//! from the structure recurrence
//! `h_i = Σ_{v ∈ ℕ^n_{<p}} h_{i-|v|-1} + [R/J]_i - b_i`,
//! where `b` is the kernel of the structure map; it vanishes in high degree
//! and that vanishing is checked on a window past the bound used.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::groebner::InitialModule;
use crate::monomial::{FrobMonomial, RingContext};

/// Polynomial in `t` with integer coefficients, ascending, trailing zeros trimmed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(coeffs: Vec<BigInt>) -> Self {
        let mut p = IntPolynomial { coeffs };
        p.trim();
        p
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_i64(&[1])
    }

    /// `c t^k`.
    pub fn monomial(k: usize, c: BigInt) -> Self {
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// `(1 - t)^d`.
    pub fn one_minus_t_pow(d: u32) -> Self {
        let base = Self::from_i64(&[1, -1]);
        (0..d).fold(Self::one(), |acc, _| acc.mul(&base))
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..len).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        Self::new(coeffs)
    }

    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Exact division by `1 - t`; `None` if `self(1) != 0`.
    pub fn div_one_minus_t(&self) -> Option<Self> {
        if !self.eval_at_one().is_zero() {
            return None;
        }
        // q(t)(1 - t) = a(t) gives q_i = a_0 + … + a_i.
        let mut acc = BigInt::zero();
        let mut q = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            acc += c;
            q.push(acc.clone());
        }
        Some(Self::new(q))
    }

    /// Multiplicity of `t = 1` as a root; zero polynomial gives 0.
    pub fn root_multiplicity_at_one(&self) -> u32 {
        let mut k = 0;
        let mut a = self.clone();
        while !a.is_zero() {
            match a.div_one_minus_t() {
                Some(q) => {
                    a = q;
                    k += 1;
                }
                None => break,
            }
        }
        k
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let show_mag = i == 0 || !mag.is_one();
            match (i, show_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}t")?,
                (1, false) => f.write_str("t")?,
                (_, true) => write!(f, "{mag}t^{i}")?,
                (_, false) => write!(f, "t^{i}")?,
            }
        }
        Ok(())
    }
}

/// `1 - t(1 + t + … + t^{p-1})^n`.
pub fn g_polynomial(ctx: RingContext) -> IntPolynomial {
    let s = small_block_weights(ctx);
    IntPolynomial::one().sub(&s.shift(1))
}

/// `(1 + t + … + t^{p-1})^n`: coefficient `w` counts blocks of weight `w`.
fn small_block_weights(ctx: RingContext) -> IntPolynomial {
    let one_block = IntPolynomial::new(vec![BigInt::one(); ctx.p() as usize]);
    (0..ctx.n()).fold(IntPolynomial::one(), |acc, _| acc.mul(&one_block))
}

/// The rational function `numerator / ((1-t)^pole_power · g_{p,n}(t))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertRational {
    pub numerator: IntPolynomial,
    pub pole_power: u32,
    pub ctx: RingContext,
}

impl HilbertRational {
    /// The series of `𝐀` itself, `1 / ((1-t)^n g_{p,n})`.
    pub fn of_free_algebra(ctx: RingContext) -> Self {
        HilbertRational { numerator: IntPolynomial::one(), pole_power: ctx.n() as u32, ctx }
    }

    pub fn denominator(&self) -> IntPolynomial {
        IntPolynomial::one_minus_t_pow(self.pole_power).mul(&g_polynomial(self.ctx))
    }

    /// The first `degree + 1` coefficients of the power series.
    pub fn expand(&self, degree: usize) -> Vec<BigInt> {
        let q = self.denominator();
        let mut s: Vec<BigInt> = Vec::with_capacity(degree + 1);
        for i in 0..=degree {
            let mut v = self.numerator.coeff(i);
            for k in 1..=i.min(q.degree().unwrap_or(0)) {
                v -= q.coeff(k) * &s[i - k];
            }
            s.push(v);
        }
        s
    }

    /// Order of the pole at `t = 1`.
    pub fn delta(&self) -> u32 {
        if self.numerator.is_zero() {
            return 0;
        }
        self.pole_power.saturating_sub(self.numerator.root_multiplicity_at_one())
    }

    /// `a*(1) / δ!` where `a* = (1-t)^δ g · HS`.
    pub fn multiplicity(&self) -> BigRational {
        if self.numerator.is_zero() {
            return BigRational::zero();
        }
        let delta = self.delta();
        let mut a = self.numerator.clone();
        for _ in delta..self.pole_power {
            a = a.div_one_minus_t().expect("root multiplicity covers the cancelled factors");
        }
        let factorial: BigInt = (1..=delta as u64).map(BigInt::from).product();
        BigRational::new(a.eval_at_one(), factorial)
    }

    fn lift_to(&self, d: u32) -> IntPolynomial {
        self.numerator.mul(&IntPolynomial::one_minus_t_pow(d - self.pole_power))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.ctx.ensure_same(&other.ctx)?;
        let d = self.pole_power.max(other.pole_power);
        Ok(HilbertRational { numerator: self.lift_to(d).add(&other.lift_to(d)), pole_power: d, ctx: self.ctx })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.scale_by_t(0).negated())
    }

    fn negated(&self) -> Self {
        HilbertRational { numerator: IntPolynomial::zero().sub(&self.numerator), ..self.clone() }
    }

    /// Multiplication by `t^k`.
    pub fn scale_by_t(&self, k: usize) -> Self {
        HilbertRational { numerator: self.numerator.shift(k), ..self.clone() }
    }

    /// Equality as rational functions.
    pub fn same_function(&self, other: &Self) -> bool {
        let d = self.pole_power.max(other.pole_power);
        self.ctx == other.ctx && self.lift_to(d) == other.lift_to(d)
    }
}

impl fmt::Display for HilbertRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) / ({})", self.numerator, self.denominator())
    }
}

/// Kernel and cokernel data of the structure map of a monomial quotient.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedDiagnostics {
    /// Degreewise dimension of the kernel.
    pub kernel_hs: IntPolynomial,
    /// Series of the cokernel `⊕_j R/J_j(-d_j)` as `c(t) / (1-t)^d`.
    pub cokernel_hs: (IntPolynomial, u32),
    pub stabilization_bound: u32,
    pub window: u32,
    /// Kernel dimensions in degrees `K₀+1 ..= K₀+W`, all zero by construction.
    pub window_values: Vec<BigInt>,
}

/// `HS_{R/J} = c(t) / (1-t)^d` with `d` the Krull dimension of `R/J`.
pub fn hs_commutative(gens: &[Vec<u32>], n: usize) -> (IntPolynomial, u32) {
    let mut k = commutative_numerator(minimal_exponents(gens.to_vec()));
    if k.is_zero() {
        return (k, 0);
    }
    let mut d = n as u32;
    while d > 0 {
        match k.div_one_minus_t() {
            Some(q) => {
                k = q;
                d -= 1;
            }
            None => break,
        }
    }
    (k, d)
}

fn divides(u: &[u32], v: &[u32]) -> bool {
    u.iter().zip(v).all(|(a, b)| a <= b)
}

fn minimal_exponents(mut gens: Vec<Vec<u32>>) -> Vec<Vec<u32>> {
    gens.sort_by_key(|g| g.iter().sum::<u32>());
    gens.dedup();
    let mut kept: Vec<Vec<u32>> = Vec::new();
    for g in gens {
        if !kept.iter().any(|k| divides(k, &g)) {
            kept.push(g);
        }
    }
    kept
}

/// `K(t)` with `HS_{R/J} = K(t) / (1-t)^n`, by `K(G + m) = K(G) - t^{|m|} K(G : m)`.
fn commutative_numerator(gens: Vec<Vec<u32>>) -> IntPolynomial {
    let Some((m, rest)) = gens.split_last() else {
        return IntPolynomial::one();
    };
    if m.iter().all(|&a| a == 0) {
        return IntPolynomial::zero();
    }
    let colon: Vec<Vec<u32>> =
        rest.iter().map(|g| g.iter().zip(m).map(|(&a, &b)| a.max(b) - b).collect()).collect();
    let deg = m.iter().sum::<u32>() as usize;
    commutative_numerator(rest.to_vec()).sub(&commutative_numerator(minimal_exponents(colon)).shift(deg))
}

fn to_big(v: &BigInt) -> BigUint {
    v.to_biguint().expect("Hilbert function values are nonnegative")
}

/// Counts standard monomials at one position, for every degree up to `max_degree`.
struct PositionCounter<'a> {
    ctx: RingContext,
    blocks: Vec<(Vec<u32>, usize)>,
    gens: Vec<&'a FrobMonomial>,
    max_degree: usize,
    free: Rc<Vec<BigUint>>,
    memo: HashMap<(Vec<usize>, usize), Rc<Vec<BigUint>>>,
}

impl<'a> PositionCounter<'a> {
    fn new(ctx: RingContext, gens: Vec<&'a FrobMonomial>, max_degree: usize) -> Self {
        let blocks: Vec<(Vec<u32>, usize)> = ctx
            .small_blocks()
            .into_iter()
            .map(|b| {
                let cost = b.iter().sum::<u32>() as usize + 1;
                (b, cost)
            })
            .collect();
        let mut free = vec![BigUint::zero(); max_degree + 1];
        free[0] = BigUint::one();
        for r in 1..=max_degree {
            let mut v = BigUint::zero();
            for (_, cost) in &blocks {
                if *cost <= r {
                    v += &free[r - cost];
                }
            }
            free[r] = v;
        }
        PositionCounter { ctx, blocks, gens, max_degree, free: Rc::new(free), memo: HashMap::new() }
    }

    /// Number of block sequences of each total cost, read right to left, that
    /// never complete a divisibility by a generator in `alive` having `matched`
    /// blocks already matched.
    fn prefixes(&mut self, alive: &[usize], matched: usize) -> Rc<Vec<BigUint>> {
        if alive.is_empty() {
            return self.free.clone();
        }
        let key = (alive.to_vec(), matched);
        if let Some(v) = self.memo.get(&key) {
            return v.clone();
        }
        let mut out = vec![BigUint::zero(); self.max_degree + 1];
        out[0] = BigUint::one();
        for bi in 0..self.blocks.len() {
            let cost = self.blocks[bi].1;
            if cost > self.max_degree {
                continue;
            }
            let mut next = Vec::new();
            let mut dead = false;
            for &g in alive {
                let gen = self.gens[g];
                let j = gen.f_order() - 1 - matched;
                let b = &self.blocks[bi].0;
                if j == 0 {
                    if gen.block(0).iter().zip(b).all(|(u, v)| u <= v) {
                        dead = true;
                        break;
                    }
                } else if gen.block(j) == b.as_slice() {
                    next.push(g);
                }
            }
            if dead {
                continue;
            }
            let sub = self.prefixes(&next, matched + 1);
            for r in cost..=self.max_degree {
                out[r] += &sub[r - cost];
            }
        }
        let out = Rc::new(out);
        self.memo.insert(key, out.clone());
        out
    }

    fn counts(&mut self, contraction: &[Vec<u32>]) -> Vec<BigUint> {
        let n = self.ctx.n();
        let max = self.max_degree;
        let (c, d) = hs_commutative(contraction, n);
        let quotient = HilbertRational { numerator: c, pole_power: d, ctx: self.ctx };
        let commutative = commutative_series(&quotient, max);
        let in_contraction = |t: &[u32]| contraction.iter().any(|u| divides(u, t));

        let mut tails: Vec<Vec<u32>> = self.gens.iter().map(|g| g.tail().to_vec()).collect();
        tails.sort();
        tails.dedup();
        tails.retain(|t| !in_contraction(t));

        let mut generic = commutative.iter().map(|v| BigInt::from(v.clone())).collect::<Vec<_>>();
        for t in &tails {
            let w = t.iter().sum::<u32>() as usize;
            if w <= max {
                generic[w] -= 1;
            }
        }
        let mut total = vec![BigUint::zero(); max + 1];
        for (w, count) in generic.iter().enumerate() {
            let count = to_big(count);
            if count.is_zero() {
                continue;
            }
            for dd in w..=max {
                total[dd] += &count * &self.free[dd - w];
            }
        }
        for t in &tails {
            let w = t.iter().sum::<u32>() as usize;
            if w > max {
                continue;
            }
            let alive: Vec<usize> = (0..self.gens.len()).filter(|&g| self.gens[g].tail() == t.as_slice()).collect();
            let sub = self.prefixes(&alive, 0);
            for dd in w..=max {
                total[dd] += &sub[dd - w];
            }
        }
        total
    }
}

/// Hilbert function of `R/J` from its series `c/(1-t)^d` (no `g` factor).
fn commutative_series(q: &HilbertRational, max: usize) -> Vec<BigUint> {
    let denom = IntPolynomial::one_minus_t_pow(q.pole_power);
    let mut s: Vec<BigInt> = Vec::with_capacity(max + 1);
    for i in 0..=max {
        let mut v = q.numerator.coeff(i);
        for k in 1..=i.min(denom.degree().unwrap_or(0)) {
            v -= denom.coeff(k) * &s[i - k];
        }
        s.push(v);
    }
    s.iter().map(to_big).collect()
}

fn position_counts(module: &InitialModule, pos: usize, max_degree: usize) -> Vec<BigUint> {
    let gens: Vec<&FrobMonomial> = module.generators(pos).iter().filter(|g| g.f_order() > 0).collect();
    let mut counter = PositionCounter::new(module.ctx(), gens, max_degree);
    counter.counts(&module.contraction(pos))
}

/// Number of standard monomials (not in the module) of each shifted degree
/// `0..=max_degree`.
pub fn standard_monomial_counts(module: &InitialModule, max_degree: usize) -> Vec<BigUint> {
    let mut total = vec![BigUint::zero(); max_degree + 1];
    for pos in 0..module.rank() {
        let shift = module.shifts()[pos];
        let reach = max_degree as i64 - shift;
        if reach < 0 {
            continue;
        }
        let counts = position_counts(module, pos, reach as usize);
        for (k, c) in counts.into_iter().enumerate() {
            let d = k as i64 + shift;
            if d >= 0 {
                total[d as usize] += c;
            }
        }
    }
    total
}

/// Number of standard monomials of shifted degree `degree`.
pub fn count_standard_monomials(module: &InitialModule, degree: i64) -> BigUint {
    let mut total = BigUint::zero();
    for pos in 0..module.rank() {
        let local = degree - module.shifts()[pos];
        if local >= 0 {
            total += position_counts(module, pos, local as usize).swap_remove(local as usize);
        }
    }
    total
}

/// `K₀` and the window width `W` used for a module.
pub fn stabilization_bounds(module: &InitialModule) -> (u32, u32) {
    let ctx = module.ctx();
    let np = ctx.n() as u32 * (ctx.p() - 1);
    let top = module.max_generator_degree().max(0) as u32;
    (2 * np + 2 + top + np + 1, np + 5)
}

/// The cokernel series `Σ_j t^{d_j} c_j(t) (1-t)^{d - dim_j}` over `(1-t)^d`.
pub fn cokernel_series(module: &InitialModule) -> Result<(IntPolynomial, u32)> {
    let n = module.ctx().n();
    let mut parts = Vec::new();
    for pos in 0..module.rank() {
        let shift = module.shifts()[pos];
        if shift < 0 {
            return Err(Error::NegativeShift(shift));
        }
        let (c, d) = hs_commutative(&module.contraction(pos), n);
        if !c.is_zero() {
            parts.push((c.shift(shift as usize), d));
        }
    }
    let d = parts.iter().map(|(_, d)| *d).max().unwrap_or(0);
    let c = parts
        .iter()
        .fold(IntPolynomial::zero(), |acc, (c, dj)| acc.add(&c.mul(&IntPolynomial::one_minus_t_pow(d - dj))));
    Ok((c, d))
}

/// Exact Hilbert series of `𝐀^t / I` together with the structure-map data.
pub fn hs_monomial_quotient(module: &InitialModule) -> Result<(HilbertRational, GradedDiagnostics)> {
    let ctx = module.ctx();
    let (c, d) = cokernel_series(module)?;
    let (k0, w) = stabilization_bounds(module);
    let top = (k0 + w) as usize;
    let h: Vec<BigInt> = standard_monomial_counts(module, top).into_iter().map(BigInt::from).collect();
    let cok = HilbertRational { numerator: c.clone(), pole_power: d, ctx };
    let cok_values = commutative_series(&cok, top);
    let sv = small_block_weights(ctx);

    let mut b = Vec::with_capacity(top + 1);
    for i in 0..=top {
        let mut v = BigInt::from(cok_values[i].clone()) - &h[i];
        for (wt, count) in sv.coeffs().iter().enumerate() {
            if i > wt {
                v += count * &h[i - wt - 1];
            }
        }
        if v.is_negative() {
            return Err(Error::InvariantViolation(format!("negative kernel dimension {v} in degree {i}")));
        }
        b.push(v);
    }
    if let Some(i) = (k0 as usize + 1..=top).find(|&i| !b[i].is_zero()) {
        return Err(Error::InvariantViolation(format!(
            "structure map kernel is nonzero in degree {i} past the bound {k0}"
        )));
    }
    let kernel = IntPolynomial::new(b[..=k0 as usize].to_vec());
    let numerator = c.sub(&IntPolynomial::one_minus_t_pow(d).mul(&kernel));
    let hs = HilbertRational { numerator, pole_power: d, ctx };
    if hs.expand(top) != h {
        return Err(Error::InvariantViolation("series expansion disagrees with the counts".into()));
    }
    if d > 0 && !hs.numerator.eval_at_one().is_positive() {
        return Err(Error::InvariantViolation("numerator must be positive at 1 when d > 0".into()));
    }
    let diagnostics = GradedDiagnostics {
        kernel_hs: kernel,
        cokernel_hs: (c, d),
        stabilization_bound: k0,
        window: w,
        window_values: b[k0 as usize + 1..].to_vec(),
    };
    Ok((hs, diagnostics))
}

/// Whether `Σ_k denom_k · prefix_{i-k}` vanishes for every `i ≥ from` in range.
pub fn verify_recurrence(prefix: &[BigInt], denom: &IntPolynomial, from: usize) -> bool {
    (from..prefix.len()).all(|i| {
        let mut v = BigInt::zero();
        for (k, q) in denom.coeffs().iter().enumerate() {
            if k <= i {
                v += q * &prefix[i - k];
            }
        }
        v.is_zero()
    })
}

/// Converts a coefficient list to machine integers when they fit.
pub fn to_i64s(values: &[BigInt]) -> Option<Vec<i64>> {
    values.iter().map(|v| v.to_i64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::monomial::parse_word;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn module(ctx: RingContext, words: &[&str]) -> InitialModule {
        let gens = words.iter().map(|w| parse_word(w, ctx).unwrap().unwrap()).collect();
        InitialModule::new(ctx, vec![0], vec![gens]).unwrap()
    }

    #[test]
    fn g_polynomials() {
        let g = |p, n| g_polynomial(RingContext::new(p, n).unwrap());
        assert_eq!(g(2, 1), IntPolynomial::from_i64(&[1, -1, -1]));
        assert_eq!(g(3, 1), IntPolynomial::from_i64(&[1, -1, -1, -1]));
        assert_eq!(g(2, 2), IntPolynomial::from_i64(&[1, -1, -2, -1]));
        for (p, n) in [(2, 1), (2, 3), (3, 2), (5, 1), (7, 2)] {
            assert_eq!(g(p, n).eval_at_one(), BigInt::from(1 - (p as i64).pow(n as u32)));
        }
    }

    #[test]
    fn commutative_series_examples() {
        assert_eq!(hs_commutative(&[], 1), (IntPolynomial::one(), 1));
        assert_eq!(hs_commutative(&[vec![4]], 1), (IntPolynomial::from_i64(&[1, 1, 1, 1]), 0));
        assert_eq!(hs_commutative(&[vec![1]], 1), (IntPolynomial::one(), 0));
        assert_eq!(hs_commutative(&[vec![0, 0]], 2), (IntPolynomial::zero(), 0));
        // R/(xy): 1 + 2t + 2t^2 + ... = (1 + t)/(1 - t)
        assert_eq!(hs_commutative(&[vec![1, 1]], 2), (IntPolynomial::from_i64(&[1, 1]), 1));
        // R/(x^2, y^3): 6 standard monomials
        let (c, d) = hs_commutative(&[vec![2, 0], vec![0, 3]], 2);
        assert_eq!((c.eval_at_one(), d), (BigInt::from(6), 0));
    }

    #[test]
    fn counts_of_the_free_algebra() {
        let c = RingContext::new(2, 1).unwrap();
        let free = InitialModule::zero(c, vec![0]);
        assert_eq!(count_standard_monomials(&free, 9), BigUint::from(143u32));
        let c3 = RingContext::new(2, 3).unwrap();
        assert_eq!(count_standard_monomials(&InitialModule::zero(c3, vec![0]), 7), BigUint::from(1991u32));
        let unit = module(c, &["1"]);
        assert!((1..6).all(|d| count_standard_monomials(&unit, d).is_zero()));
    }

    #[test]
    fn counts_match_enumeration() {
        for (p, n, words) in [
            (2, 1, vec!["f", "fx", "x^4"]),
            (2, 1, vec!["xf", "fx", "fx^2", "x^5"]),
            (2, 1, vec!["xfxf", "fxf"]),
            (3, 1, vec!["x^2fxf", "ffx", "x^7"]),
            (2, 2, vec!["xf", "yfy", "ffx", "x^2y^3"]),
        ] {
            let c = RingContext::new(p, n).unwrap();
            let m = module(c, &words);
            let counts = standard_monomial_counts(&m, 8);
            for d in 0..=8u32 {
                let brute = FrobMonomial::all_of_degree(c, d)
                    .into_iter()
                    .filter(|x| !m.generators(0).iter().any(|g| x.is_left_multiple_of(g)))
                    .count();
                assert_eq!(counts[d as usize], BigUint::from(brute), "{words:?} degree {d}");
            }
        }
    }

    #[test]
    fn quotient_series() {
        let c = RingContext::new(2, 1).unwrap();
        let (hs, diag) = hs_monomial_quotient(&InitialModule::zero(c, vec![0])).unwrap();
        assert_eq!(hs, HilbertRational::of_free_algebra(c));
        assert!(diag.kernel_hs.is_zero());
        let (hs, diag) = hs_monomial_quotient(&module(c, &["f", "fx", "x^4"])).unwrap();
        assert_eq!((hs.numerator.clone(), hs.pole_power), (IntPolynomial::from_i64(&[1, 0, -1]), 0));
        assert_eq!(diag.cokernel_hs, (IntPolynomial::from_i64(&[1, 1, 1, 1]), 0));
        let (hs, _) = hs_monomial_quotient(&module(c, &["xf", "fx", "fx^2", "x^5"])).unwrap();
        assert_eq!(hs.numerator, IntPolynomial::from_i64(&[1, 1, -1, -1]));
    }

    #[test]
    fn expansions() {
        let c = RingContext::new(2, 1).unwrap();
        assert_eq!(HilbertRational::of_free_algebra(c).expand(9), big(&[1, 2, 4, 7, 12, 20, 33, 54, 88, 143]));
        let r = HilbertRational { numerator: IntPolynomial::from_i64(&[1, 0, -1]), pole_power: 0, ctx: c };
        assert_eq!(r.expand(6), big(&[1, 1, 1, 2, 3, 5, 8]));
        let z = HilbertRational { numerator: IntPolynomial::zero(), pole_power: 0, ctx: c };
        assert_eq!(z.expand(4), big(&[0, 0, 0, 0, 0]));
    }

    #[test]
    fn delta_and_multiplicity() {
        for (p, n) in [(2, 1), (2, 2), (3, 3)] {
            let c = RingContext::new(p, n).unwrap();
            let hs = HilbertRational::of_free_algebra(c);
            let fact: i64 = (1..=n as i64).product();
            assert_eq!(hs.delta(), n as u32);
            assert_eq!(hs.multiplicity(), BigRational::new(BigInt::from(1), BigInt::from(fact)));
        }
        let c = RingContext::new(2, 1).unwrap();
        let r = HilbertRational { numerator: IntPolynomial::from_i64(&[1, 0, -1]), pole_power: 0, ctx: c };
        assert_eq!((r.delta(), r.multiplicity()), (0, BigRational::zero()));
    }

    #[test]
    fn recurrence_checks() {
        let de = big(&[1, 2, 4, 7, 12, 20, 33, 54, 88, 143]);
        assert!(verify_recurrence(&de, &IntPolynomial::from_i64(&[1, -2, 0, 1]), 1));
        assert!(verify_recurrence(&big(&[0, 0, 0]), &IntPolynomial::from_i64(&[1, 5]), 0));
        let geo = big(&[1, 2, 4, 8]);
        assert!(verify_recurrence(&geo, &IntPolynomial::from_i64(&[1, -2]), 1));
        assert!(!verify_recurrence(&geo, &IntPolynomial::from_i64(&[1, -1]), 1));
    }

    #[test]
    fn polynomial_display() {
        assert_eq!(IntPolynomial::from_i64(&[1, 1, -1, -1]).to_string(), "1 + t - t^2 - t^3");
        assert_eq!(IntPolynomial::from_i64(&[0, -2, 0, 3]).to_string(), "-2t + 3t^3");
        assert_eq!(IntPolynomial::zero().to_string(), "0");
    }
}
