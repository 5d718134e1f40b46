//! Canonical monomials of 𝐀 and 𝐅, their term order, and the two products.
//!
//! A monomial is stored in block form `x^{v0} f x^{v1} f … x^{v_{e-1}} f x^{v_e}`:
//! `e` pre-f blocks whose entries are all below `p`, followed by an unbounded
//! tail. The same layout without the block bound is a word of the free monoid
//! (see [`Word`]); those appear as Schreyer degrees of syzygies.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};
use crate::operator::Semantics;

/// The characteristic `p` and the number `n` of commuting variables.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct RingContext {
    p: u32,
    n: usize,
}

impl RingContext {
    pub fn new(p: u64, n: usize) -> Result<Self> {
        if !(2..=1u64 << 31).contains(&p) || !is_prime(p) {
            return Err(Error::InvalidPrime(p));
        }
        if n == 0 {
            return Err(Error::NoVariables);
        }
        Ok(RingContext { p: p as u32, n })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn ensure_same(&self, other: &RingContext) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ContextMismatch { left: self.to_string(), right: other.to_string() })
        }
    }

    pub fn reduce(&self, c: i64) -> u32 {
        c.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        ((a as u64 + self.p as u64 - b as u64) % self.p as u64) as u32
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn neg(&self, a: u32) -> u32 {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    /// Multiplicative inverse of a nonzero field element.
    pub fn inv(&self, a: u32) -> u32 {
        assert!(!a.is_multiple_of(self.p), "zero has no inverse in F_{}", self.p);
        let mut result = 1u64;
        let mut base = a as u64 % self.p as u64;
        let mut e = self.p as u64 - 2;
        while e > 0 {
            if e & 1 == 1 {
                result = result * base % self.p as u64;
            }
            base = base * base % self.p as u64;
            e >>= 1;
        }
        result as u32
    }

    /// Every block `v ∈ ℕ^n` with all entries below `p`, in lexicographic order.
    pub fn small_blocks(&self) -> Vec<Vec<u32>> {
        let mut out = vec![vec![0u32; self.n]];
        for i in 0..self.n {
            let mut next = Vec::with_capacity(out.len() * self.p as usize);
            for v in &out {
                for k in 0..self.p {
                    let mut w = v.clone();
                    w[i] = k;
                    next.push(w);
                }
            }
            out = next;
        }
        out
    }

    pub fn variable_name(&self, i: usize) -> String {
        if self.n <= 3 {
            ["x", "y", "z"][i].to_string()
        } else {
            format!("x{}", i + 1)
        }
    }
}

impl fmt::Display for RingContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p={} n={}", self.p, self.n)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

fn weight(v: &[u32]) -> u64 {
    v.iter().map(|&a| a as u64).sum()
}

/// The block order ≺: heavier blocks come first, ties broken by the last
/// differing coordinate.
pub(crate) fn cmp_blocks(v: &[u32], u: &[u32]) -> Ordering {
    match weight(u).cmp(&weight(v)) {
        Ordering::Equal => {}
        other => return other,
    }
    for k in (0..v.len()).rev() {
        if v[k] != u[k] {
            return v[k].cmp(&u[k]);
        }
    }
    Ordering::Equal
}

/// Compares two flat block layouts of equal f-order, blockwise under ≺.
fn cmp_layouts(n: usize, a: &[u32], b: &[u32]) -> Ordering {
    for (v, u) in a.chunks(n).zip(b.chunks(n)) {
        match cmp_blocks(v, u) {
            Ordering::Equal => {}
            other => return other,
        }
    }
    Ordering::Equal
}

fn layout_degree(n: usize, exps: &[u32]) -> u64 {
    (exps.len() / n - 1) as u64 + weight(exps)
}

fn render_x_part(ctx: &RingContext, v: &[u32], out: &mut String) {
    for (i, &k) in v.iter().enumerate() {
        if k == 0 {
            continue;
        }
        out.push_str(&ctx.variable_name(i));
        if k > 1 {
            out.push('^');
            out.push_str(&k.to_string());
        }
    }
}

fn render_layout(ctx: &RingContext, exps: &[u32], f_symbol: char) -> String {
    let mut out = String::new();
    let chunks: Vec<&[u32]> = exps.chunks(ctx.n).collect();
    let (tail, blocks) = chunks.split_last().expect("layout always has a tail");
    for b in blocks {
        render_x_part(ctx, b, &mut out);
        out.push(f_symbol);
    }
    render_x_part(ctx, tail, &mut out);
    if out.is_empty() {
        out.push('1');
    }
    out
}

/// A nonzero monomial of 𝐀 or 𝐅 in canonical block form.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct FrobMonomial {
    ctx: RingContext,
    /// Blocks followed by the tail, `n` entries each.
    exps: Vec<u32>,
    degree: u32,
}

impl FrobMonomial {
    pub(crate) fn from_layout(ctx: RingContext, exps: Vec<u32>) -> Self {
        debug_assert!(!exps.is_empty() && exps.len().is_multiple_of(ctx.n));
        debug_assert!(exps[..exps.len() - ctx.n].iter().all(|&a| a < ctx.p));
        let degree = u32::try_from(layout_degree(ctx.n, &exps)).expect("degree overflow");
        FrobMonomial { ctx, exps, degree }
    }

    pub fn identity(ctx: RingContext) -> Self {
        Self::from_layout(ctx, vec![0; ctx.n])
    }

    /// The pure x-monomial `x^tail`.
    pub fn x_power(ctx: RingContext, tail: &[u32]) -> Result<Self> {
        if tail.len() != ctx.n {
            return Err(Error::ShapeMismatch(format!(
                "exponent vector of length {} in a ring with {} variables",
                tail.len(),
                ctx.n
            )));
        }
        Ok(Self::from_layout(ctx, tail.to_vec()))
    }

    /// The variable `x_i` (0-based).
    pub fn variable(ctx: RingContext, i: usize) -> Self {
        let mut exps = vec![0; ctx.n];
        exps[i] = 1;
        Self::from_layout(ctx, exps)
    }

    /// The monomial `f` (or `F`).
    pub fn frobenius(ctx: RingContext) -> Self {
        Self::from_layout(ctx, vec![0; 2 * ctx.n])
    }

    pub fn from_blocks(ctx: RingContext, blocks: &[Vec<u32>], tail: &[u32]) -> Result<Self> {
        let mut exps = Vec::with_capacity((blocks.len() + 1) * ctx.n);
        for b in blocks.iter().chain(std::iter::once(&tail.to_vec())) {
            if b.len() != ctx.n {
                return Err(Error::ShapeMismatch(format!(
                    "block of length {} in a ring with {} variables",
                    b.len(),
                    ctx.n
                )));
            }
            exps.extend_from_slice(b);
        }
        if exps[..blocks.len() * ctx.n].iter().any(|&a| a >= ctx.p) {
            return Err(Error::ShapeMismatch(format!("block entries must be below p = {}", ctx.p)));
        }
        Ok(Self::from_layout(ctx, exps))
    }

    /// The canonical monomial equal to `x^a F^e`.
    ///
    /// Each coordinate of `a` is written in base `p`, least significant digit
    /// first; the digits fill the blocks from left to right and the quotient by
    /// `p^e` is the tail. For example `x^5F^2` at `p = 2` is `xffx`.
    pub fn from_closed_form(a: &[u64], e: u32, ctx: RingContext) -> Result<Self> {
        if a.len() != ctx.n {
            return Err(Error::ShapeMismatch(format!(
                "exponent vector of length {} in a ring with {} variables",
                a.len(),
                ctx.n
            )));
        }
        let p = ctx.p as u64;
        let mut rest = a.to_vec();
        let mut exps = Vec::with_capacity((e as usize + 1) * ctx.n);
        for _ in 0..e {
            for r in rest.iter_mut() {
                exps.push((*r % p) as u32);
                *r /= p;
            }
        }
        for r in rest {
            exps.push(u32::try_from(r).map_err(|_| Error::ExponentOverflow)?);
        }
        Ok(Self::from_layout(ctx, exps))
    }

    /// Inverse of [`FrobMonomial::from_closed_form`]: the pair `(a, e)` with
    /// `self = x^a F^e` in 𝐅.
    pub fn closed_form(&self) -> Result<(Vec<u64>, u32)> {
        let p = self.ctx.p as u64;
        let mut a = vec![0u64; self.ctx.n];
        for (level, chunk) in self.exps.chunks(self.ctx.n).enumerate() {
            let scale = p.checked_pow(level as u32).ok_or(Error::ExponentOverflow)?;
            for (acc, &d) in a.iter_mut().zip(chunk) {
                let term = (d as u64).checked_mul(scale).ok_or(Error::ExponentOverflow)?;
                *acc = acc.checked_add(term).ok_or(Error::ExponentOverflow)?;
            }
        }
        Ok((a, self.f_order() as u32))
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn f_order(&self) -> usize {
        self.exps.len() / self.ctx.n - 1
    }

    pub fn is_identity(&self) -> bool {
        self.degree == 0
    }

    pub fn block(&self, i: usize) -> &[u32] {
        assert!(i < self.f_order(), "block index {i} out of range");
        &self.exps[i * self.ctx.n..(i + 1) * self.ctx.n]
    }

    pub fn blocks(&self) -> impl Iterator<Item = &[u32]> {
        self.exps[..self.exps.len() - self.ctx.n].chunks(self.ctx.n)
    }

    pub fn tail(&self) -> &[u32] {
        &self.exps[self.exps.len() - self.ctx.n..]
    }

    pub(crate) fn layout(&self) -> &[u32] {
        &self.exps
    }

    pub fn try_compare(&self, other: &FrobMonomial) -> Result<Ordering> {
        self.ctx.ensure_same(&other.ctx)?;
        Ok(self.cmp(other))
    }

    /// Product in 𝐀, where `x_i^p f = 0`. `None` means the product vanishes.
    pub fn mul_trunc(&self, other: &FrobMonomial) -> Result<Option<FrobMonomial>> {
        self.ctx.ensure_same(&other.ctx)?;
        Ok(self.trunc_product(other))
    }

    /// Product in 𝐅, where `x_i^p F = F x_i`.
    pub fn mul_carry(&self, other: &FrobMonomial) -> Result<FrobMonomial> {
        self.ctx.ensure_same(&other.ctx)?;
        Ok(self.carry_product(other))
    }

    pub(crate) fn trunc_product(&self, other: &FrobMonomial) -> Option<FrobMonomial> {
        let raw = concat_layouts(self.ctx.n, &self.exps, &other.exps);
        if other.f_order() > 0 {
            let start = self.exps.len() - self.ctx.n;
            if raw[start..start + self.ctx.n].iter().any(|&a| a >= self.ctx.p) {
                return None;
            }
        }
        Some(Self::from_layout(self.ctx, raw))
    }

    pub(crate) fn carry_product(&self, other: &FrobMonomial) -> FrobMonomial {
        let n = self.ctx.n;
        let p = self.ctx.p;
        let mut raw = concat_layouts(n, &self.exps, &other.exps);
        let blocks = raw.len() / n - 1;
        for i in (self.exps.len() / n - 1)..blocks {
            for k in 0..n {
                let v = raw[i * n + k];
                if v >= p {
                    raw[i * n + k] = v % p;
                    raw[(i + 1) * n + k] += v / p;
                }
            }
        }
        Self::from_layout(self.ctx, raw)
    }

    /// The cofactor `c` with `c · a = self` in 𝐀, if one exists.
    pub fn left_divide(&self, a: &FrobMonomial) -> Result<Option<FrobMonomial>> {
        self.ctx.ensure_same(&a.ctx)?;
        Ok(self.divide_left(a))
    }

    pub(crate) fn divide_left(&self, a: &FrobMonomial) -> Option<FrobMonomial> {
        let n = self.ctx.n;
        let d = a.f_order();
        let e = self.f_order();
        if d == 0 {
            let u = a.tail();
            let mut exps = self.exps.clone();
            let off = exps.len() - n;
            for k in 0..n {
                if exps[off + k] < u[k] {
                    return None;
                }
                exps[off + k] -= u[k];
            }
            return Some(Self::from_layout(self.ctx, exps));
        }
        if e < d {
            return None;
        }
        // Compare everything after the first block of `a`: blocks 1..d and the tail.
        let suffix_len = d * n;
        if self.exps[self.exps.len() - suffix_len..] != a.exps[n..] {
            return None;
        }
        let pivot = (e - d) * n;
        let mut exps = self.exps[..pivot + n].to_vec();
        for k in 0..n {
            if exps[pivot + k] < a.exps[k] {
                return None;
            }
            exps[pivot + k] -= a.exps[k];
        }
        Some(Self::from_layout(self.ctx, exps))
    }

    /// Whether `self` lies in the left ideal `𝐀 · a`.
    pub fn is_left_multiple_of(&self, a: &FrobMonomial) -> bool {
        self.divide_left(a).is_some()
    }

    /// Least `d` such that every x-monomial of degree at least `d` times this
    /// monomial lies in the commutative subring.
    pub fn robustness(&self) -> u32 {
        if self.f_order() == 0 {
            0
        } else {
            self.ctx.n as u32 * (self.ctx.p - 1) + 1 - weight(self.block(0)) as u32
        }
    }

    /// Shortest word, with `F` for 𝐅 and `f` for 𝐀.
    pub fn render(&self, semantics: Semantics) -> String {
        render_layout(&self.ctx, &self.exps, semantics.f_symbol())
    }

    /// All monomials of 𝐀 (equivalently of 𝐅) of the given degree, ascending.
    pub fn all_of_degree(ctx: RingContext, degree: u32) -> Vec<FrobMonomial> {
        let blocks = ctx.small_blocks();
        let mut out = Vec::new();
        let mut prefix = Vec::new();
        enumerate_layouts(&ctx, &blocks, degree as u64, &mut prefix, &mut out);
        out.sort();
        out
    }
}

fn enumerate_layouts(
    ctx: &RingContext,
    blocks: &[Vec<u32>],
    remaining: u64,
    prefix: &mut Vec<u32>,
    out: &mut Vec<FrobMonomial>,
) {
    for tail in exponent_vectors_of_weight(ctx.n, remaining as u32) {
        let mut exps = prefix.clone();
        exps.extend_from_slice(&tail);
        out.push(FrobMonomial::from_layout(*ctx, exps));
    }
    for b in blocks {
        let cost = weight(b) + 1;
        if cost <= remaining {
            let len = prefix.len();
            prefix.extend_from_slice(b);
            enumerate_layouts(ctx, blocks, remaining - cost, prefix, out);
            prefix.truncate(len);
        }
    }
}

/// All vectors in `ℕ^n` with coordinate sum `w`.
pub fn exponent_vectors_of_weight(n: usize, w: u32) -> Vec<Vec<u32>> {
    if n == 1 {
        return vec![vec![w]];
    }
    let mut out = Vec::new();
    for first in 0..=w {
        for mut rest in exponent_vectors_of_weight(n - 1, w - first) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Concatenation in the free monoid: the tail of `a` merges with the first
/// block of `b` without any reduction.
fn concat_layouts(n: usize, a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut raw = Vec::with_capacity(a.len() + b.len() - n);
    raw.extend_from_slice(a);
    let off = a.len() - n;
    for k in 0..n {
        raw[off + k] = raw[off + k].checked_add(b[k]).expect("exponent overflow");
    }
    raw.extend_from_slice(&b[n..]);
    raw
}

impl Ord for FrobMonomial {
    fn cmp(&self, other: &Self) -> Ordering {
        debug_assert_eq!(self.ctx, other.ctx);
        self.degree
            .cmp(&other.degree)
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
            .then_with(|| cmp_layouts(self.ctx.n, &self.exps, &other.exps))
    }
}

impl PartialOrd for FrobMonomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for FrobMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Semantics::Truncating))
    }
}

impl fmt::Debug for FrobMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FrobMonomial({self})")
    }
}

/// A monomial together with a free-module position.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PositionedMonomial {
    pub mono: FrobMonomial,
    pub pos: usize,
}

impl PositionedMonomial {
    pub fn new(mono: FrobMonomial, pos: usize) -> Self {
        PositionedMonomial { mono, pos }
    }

    pub fn shifted_degree(&self, shifts: &[i64]) -> i64 {
        self.mono.degree() as i64 + shifts[self.pos]
    }
}

/// Term order on positioned monomials of a shifted free module: shifted
/// degree, then the monomial order, then the position.
pub fn cmp_positioned(a: &PositionedMonomial, b: &PositionedMonomial, shifts: &[i64]) -> Ordering {
    a.shifted_degree(shifts)
        .cmp(&b.shifted_degree(shifts))
        .then_with(|| a.mono.cmp(&b.mono))
        .then_with(|| a.pos.cmp(&b.pos))
}

/// A word of the free monoid on the variables and `f`, kept in block form
/// but without the `< p` bound on blocks.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Word {
    ctx: RingContext,
    exps: Vec<u32>,
}

impl Word {
    pub fn concat(a: &FrobMonomial, b: &FrobMonomial) -> Word {
        Word { ctx: a.ctx, exps: concat_layouts(a.ctx.n, &a.exps, &b.exps) }
    }

    pub fn degree(&self) -> u64 {
        layout_degree(self.ctx.n, &self.exps)
    }

    pub fn f_order(&self) -> usize {
        self.exps.len() / self.ctx.n - 1
    }

    /// The image in 𝐀, or `None` when some block reaches `p`.
    pub fn reduce(&self) -> Option<FrobMonomial> {
        let blocks = self.exps.len() - self.ctx.n;
        if self.exps[..blocks].iter().any(|&a| a >= self.ctx.p) {
            None
        } else {
            Some(FrobMonomial::from_layout(self.ctx, self.exps.clone()))
        }
    }
}

impl From<&FrobMonomial> for Word {
    fn from(m: &FrobMonomial) -> Self {
        Word { ctx: m.ctx, exps: m.exps.clone() }
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.exps.len().cmp(&other.exps.len()))
            .then_with(|| cmp_layouts(self.ctx.n, &self.exps, &other.exps))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_layout(&self.ctx, &self.exps, 'f'))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

/// Parses a word such as `x^5F^2`, `xfxf` or `x*y^2*f`.
///
/// The semantics is read off the case of the Frobenius letter (`f` for 𝐀,
/// `F` for 𝐅); a word without one is read in 𝐀. Returns `Ok(None)` when the
/// word is zero in 𝐀.
pub fn parse_word(text: &str, ctx: RingContext) -> Result<Option<FrobMonomial>> {
    let semantics = if text.contains('F') {
        if text.contains('f') {
            return Err(Error::MalformedWord {
                at: text.find('f').unwrap_or(0),
                message: "mixes f and F".into(),
            });
        }
        Semantics::Carrying
    } else {
        Semantics::Truncating
    };
    parse_word_as(text, ctx, semantics)
}

/// Parses a word under a fixed semantics; the letter `f`/`F` of the other
/// semantics is rejected.
pub fn parse_word_as(text: &str, ctx: RingContext, semantics: Semantics) -> Result<Option<FrobMonomial>> {
    let bytes = text.as_bytes();
    let mut i = 0;
    let mut acc = Some(FrobMonomial::identity(ctx));
    let malformed = |at: usize, message: &str| Error::MalformedWord { at, message: message.to_string() };
    let mut saw_factor = false;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() || c == b'*' {
            i += 1;
            continue;
        }
        let start = i;
        let factor = match c {
            b'f' | b'F' => {
                if semantics.f_symbol() as u8 != c {
                    return Err(malformed(i, "Frobenius letter does not match the semantics"));
                }
                i += 1;
                FrobMonomial::frobenius(ctx)
            }
            b'x' | b'y' | b'z' => {
                i += 1;
                let digits_start = i;
                while i < bytes.len() && bytes[i].is_ascii_digit() {
                    i += 1;
                }
                let index = if c == b'x' && i > digits_start {
                    let k: usize = text[digits_start..i].parse().map_err(|_| malformed(digits_start, "bad index"))?;
                    if k == 0 || k > ctx.n {
                        return Err(malformed(start, "variable index out of range"));
                    }
                    k - 1
                } else if i > digits_start {
                    return Err(malformed(digits_start, "only x takes an index"));
                } else {
                    if ctx.n > 3 {
                        return Err(malformed(start, "use x1..xn when n > 3"));
                    }
                    let k = (c - b'x') as usize;
                    if k >= ctx.n {
                        return Err(malformed(start, "variable not in this ring"));
                    }
                    k
                };
                FrobMonomial::variable(ctx, index)
            }
            b'1' if !saw_factor => {
                i += 1;
                if i < bytes.len() && bytes[i].is_ascii_digit() {
                    return Err(malformed(start, "unexpected number"));
                }
                FrobMonomial::identity(ctx)
            }
            _ => return Err(malformed(i, "unexpected character")),
        };
        saw_factor = true;
        let mut power = 1u32;
        let mut j = i;
        while j < bytes.len() && bytes[j].is_ascii_whitespace() {
            j += 1;
        }
        if j < bytes.len() && bytes[j] == b'^' {
            j += 1;
            while j < bytes.len() && bytes[j].is_ascii_whitespace() {
                j += 1;
            }
            let digits_start = j;
            while j < bytes.len() && bytes[j].is_ascii_digit() {
                j += 1;
            }
            if j == digits_start {
                return Err(malformed(digits_start, "expected an exponent"));
            }
            power = text[digits_start..j].parse().map_err(|_| malformed(digits_start, "exponent too large"))?;
            i = j;
        }
        for _ in 0..power {
            acc = match (acc, semantics) {
                (None, _) => None,
                (Some(m), Semantics::Truncating) => m.trunc_product(&factor),
                (Some(m), Semantics::Carrying) => Some(m.carry_product(&factor)),
            };
        }
    }
    if !saw_factor {
        return Err(malformed(0, "empty word"));
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ctx(p: u64, n: usize) -> RingContext {
        RingContext::new(p, n).unwrap()
    }

    fn w(text: &str, c: RingContext) -> FrobMonomial {
        parse_word(text, c).unwrap().unwrap()
    }

    #[test]
    fn context_validation() {
        assert!(RingContext::new(4, 1).is_err());
        assert!(RingContext::new(1, 1).is_err());
        assert!(RingContext::new(2, 0).is_err());
        assert!(RingContext::new(2_147_483_647, 1).is_ok());
        assert_eq!(RingContext::new((1 << 31) + 11, 1), Err(Error::InvalidPrime((1 << 31) + 11)));
    }

    #[test]
    fn field_inverse() {
        let c = ctx(7, 1);
        for a in 1..7 {
            assert_eq!(c.mul(a, c.inv(a)), 1);
        }
    }

    #[test]
    fn closed_form_digits_fill_blocks_from_the_left() {
        let c = ctx(2, 1);
        let m = FrobMonomial::from_closed_form(&[5], 2, c).unwrap();
        assert_eq!(m.render(Semantics::Carrying), "xFFx");
        assert_eq!(m.degree(), 4);
        let m = FrobMonomial::from_closed_form(&[7], 3, c).unwrap();
        assert_eq!(m.to_string(), "xfxfxf");
        // x^11 F^3 and x^17 F^3 from the degree-6 word list.
        assert_eq!(FrobMonomial::from_closed_form(&[11], 3, c).unwrap().to_string(), "xfxffx");
        assert_eq!(FrobMonomial::from_closed_form(&[17], 3, c).unwrap().to_string(), "xfffx^2");
        assert!(FrobMonomial::from_closed_form(&[0], 0, c).unwrap().is_identity());
    }

    #[test]
    fn closed_form_round_trip() {
        for (p, n) in [(2, 1), (3, 2), (5, 1)] {
            let c = ctx(p, n);
            for d in 0..6 {
                for m in FrobMonomial::all_of_degree(c, d) {
                    let (a, e) = m.closed_form().unwrap();
                    assert_eq!(FrobMonomial::from_closed_form(&a, e, c).unwrap(), m);
                }
            }
        }
    }

    #[test]
    fn two_variable_chain() {
        let c = ctx(2, 2);
        let chain = ["1", "x", "y", "f", "x^2", "xy", "y^2", "xf", "yf", "fx", "fy", "ff"];
        let ms: Vec<_> = chain.iter().map(|s| w(s, c)).collect();
        for pair in ms.windows(2) {
            assert!(pair[0] < pair[1], "{} < {}", pair[0], pair[1]);
        }
    }

    #[test]
    fn degree_six_chain() {
        let c = ctx(2, 1);
        let chain = ["xfxfxf", "xfxffx", "xffxfx", "xfffxx", "fxfxfx", "fxffxx", "ffxfxx", "fffxxx"];
        let ms: Vec<_> = chain.iter().map(|s| w(s, c)).collect();
        for pair in ms.windows(2) {
            assert!(pair[0] < pair[1], "{} < {}", pair[0], pair[1]);
        }
        let all: Vec<_> = FrobMonomial::all_of_degree(c, 6).into_iter().filter(|m| m.f_order() == 3).collect();
        assert_eq!(all, ms);
    }

    #[test]
    fn products() {
        let c = ctx(2, 1);
        assert_eq!(w("x", c).mul_trunc(&w("xf", c)).unwrap(), None);
        assert_eq!(w("f", c).mul_trunc(&w("x", c)).unwrap().unwrap().to_string(), "fx");
        let m = w("xf", c).mul_trunc(&w("xf", c)).unwrap().unwrap();
        assert_eq!((m.to_string().as_str(), m.degree()), ("xfxf", 4));
        assert_eq!(w("x^2", c).mul_carry(&w("f", c)).unwrap().to_string(), "fx");
        assert_eq!(w("x^2", c).mul_carry(&w("fx", c)).unwrap().to_string(), "fx^2");
        let one = FrobMonomial::identity(c);
        assert_eq!(one.mul_carry(&w("xfx", c)).unwrap(), w("xfx", c));
        // x^3 F = xFx, so the carry from the first block lands in the second.
        let m = parse_word("x^3FF", c).unwrap().unwrap();
        assert_eq!(m, FrobMonomial::from_closed_form(&[3], 2, c).unwrap());
    }

    #[test]
    fn division() {
        let c = ctx(2, 1);
        assert_eq!(w("xf", c).left_divide(&w("f", c)).unwrap(), Some(w("x", c)));
        assert_eq!(w("fx", c).left_divide(&w("f", c)).unwrap(), None);
        let m = w("xfxfx^3", c);
        assert_eq!(m.left_divide(&FrobMonomial::identity(c)).unwrap(), Some(m.clone()));
        assert_eq!(w("xfxf", c).left_divide(&w("xf", c)).unwrap(), Some(w("xf", c)));
        assert_eq!(w("fxf", c).left_divide(&w("f", c)).unwrap(), Some(w("fx", c)));
        assert!(w("x", c).left_divide(&w("x", ctx(3, 1))).is_err());
    }

    #[test]
    fn robustness_values() {
        let c = ctx(2, 1);
        assert_eq!(w("f", c).robustness(), 2);
        assert_eq!(w("xf", c).robustness(), 1);
        assert_eq!(w("x^9", c).robustness(), 0);
        assert_eq!(w("fxf", ctx(3, 2)).robustness(), 5);
    }

    #[test]
    fn parsing() {
        let c = ctx(2, 1);
        assert_eq!(parse_word("x^5F^2", c).unwrap(), Some(FrobMonomial::from_closed_form(&[5], 2, c).unwrap()));
        assert_eq!(parse_word("x^2f", c).unwrap(), None);
        assert_eq!(parse_word("1", c).unwrap(), Some(FrobMonomial::identity(c)));
        assert!(parse_word("fF", c).is_err());
        assert!(parse_word("y", c).is_err());
        assert!(parse_word("x^", c).is_err());
        let c4 = ctx(3, 4);
        let m = parse_word("x1^2x4 f x3", c4).unwrap().unwrap();
        assert_eq!(m.to_string(), "x1^2x4fx3");
        assert!(parse_word("y", c4).is_err());
    }

    #[test]
    fn degree_counts_follow_the_recurrence() {
        let c = ctx(2, 1);
        let dims: Vec<i64> = (0..=12).map(|d| FrobMonomial::all_of_degree(c, d).len() as i64).collect();
        assert_eq!(&dims[..10], &[1, 2, 4, 7, 12, 20, 33, 54, 88, 143]);
        for i in 3..dims.len() {
            assert_eq!(dims[i], 2 * dims[i - 1] - dims[i - 3]);
        }
    }

    #[test]
    fn words_order_like_monomials() {
        let c = ctx(2, 1);
        let a = Word::concat(&w("x", c), &w("xf", c));
        assert_eq!(a.to_string(), "x^2f");
        assert_eq!(a.reduce(), None);
        let b = Word::concat(&w("f", c), &w("x", c));
        assert_eq!(b.reduce(), Some(w("fx", c)));
        assert!(Word::from(&w("xf", c)) < Word::from(&w("fx", c)));
    }
}
