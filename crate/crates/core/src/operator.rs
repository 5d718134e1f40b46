//! Elements of 𝐀 and 𝐅 and vectors in shifted free modules over them.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{cmp_positioned, FrobMonomial, PositionedMonomial, RingContext};

/// Which ring a polynomial lives in: 𝐀 (`x_i^p f = 0`) or 𝐅 (`x_i^p F = F x_i`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Semantics {
    Truncating,
    Carrying,
}

impl Semantics {
    pub fn f_symbol(self) -> char {
        match self {
            Semantics::Truncating => 'f',
            Semantics::Carrying => 'F',
        }
    }

    pub(crate) fn product(self, a: &FrobMonomial, b: &FrobMonomial) -> Option<FrobMonomial> {
        match self {
            Semantics::Truncating => a.trunc_product(b),
            Semantics::Carrying => Some(a.carry_product(b)),
        }
    }

    fn ensure_same(self, other: Semantics) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::ShapeMismatch(format!("{self:?} and {other:?} elements cannot be combined")))
        }
    }
}

/// Sorts descending under `cmp`, merges equal keys and drops zero coefficients.
fn normalize<K: Eq>(ctx: &RingContext, mut terms: Vec<(K, u32)>, cmp: impl Fn(&K, &K) -> Ordering) -> Vec<(K, u32)> {
    terms.sort_by(|a, b| cmp(&b.0, &a.0));
    let mut out: Vec<(K, u32)> = Vec::with_capacity(terms.len());
    for (k, c) in terms {
        match out.last_mut() {
            Some(last) if last.0 == k => last.1 = ctx.add(last.1, c),
            _ => out.push((k, c % ctx.p())),
        }
        if out.last().is_some_and(|t| t.1 == 0) {
            out.pop();
        }
    }
    out
}

/// Merges two descending term lists into `a + factor·b`.
fn merge<K: Clone>(
    ctx: &RingContext,
    a: &[(K, u32)],
    b: &[(K, u32)],
    factor: u32,
    cmp: impl Fn(&K, &K) -> Ordering,
) -> Vec<(K, u32)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        let order = if i == a.len() {
            Ordering::Less
        } else if j == b.len() {
            Ordering::Greater
        } else {
            cmp(&a[i].0, &b[j].0)
        };
        match order {
            Ordering::Greater => {
                out.push(a[i].clone());
                i += 1;
            }
            Ordering::Less => {
                let c = ctx.mul(factor, b[j].1);
                if c != 0 {
                    out.push((b[j].0.clone(), c));
                }
                j += 1;
            }
            Ordering::Equal => {
                let c = ctx.add(a[i].1, ctx.mul(factor, b[j].1));
                if c != 0 {
                    out.push((a[i].0.clone(), c));
                }
                i += 1;
                j += 1;
            }
        }
    }
    out
}

fn render_terms<'a>(
    terms: impl Iterator<Item = (&'a FrobMonomial, u32)>,
    semantics: Semantics,
) -> String {
    let parts: Vec<String> = terms
        .map(|(m, c)| {
            let word = m.render(semantics);
            match (c, m.is_identity()) {
                (1, _) => word,
                (_, true) => c.to_string(),
                _ => format!("{c}*{word}"),
            }
        })
        .collect();
    if parts.is_empty() {
        "0".to_string()
    } else {
        parts.join(" + ")
    }
}

/// An element of 𝐀 or 𝐅 with coefficients in 𝔽_p, terms sorted descending.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct OperatorPoly {
    ctx: RingContext,
    semantics: Semantics,
    terms: Vec<(FrobMonomial, u32)>,
}

impl OperatorPoly {
    pub fn zero(ctx: RingContext, semantics: Semantics) -> Self {
        OperatorPoly { ctx, semantics, terms: Vec::new() }
    }

    pub fn one(ctx: RingContext, semantics: Semantics) -> Self {
        Self::monomial(FrobMonomial::identity(ctx), 1, semantics)
    }

    pub fn monomial(m: FrobMonomial, coefficient: i64, semantics: Semantics) -> Self {
        let ctx = m.ctx();
        Self::from_terms(ctx, semantics, vec![(m, coefficient)]).expect("single term has one context")
    }

    /// Builds a polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(ctx: RingContext, semantics: Semantics, terms: Vec<(FrobMonomial, i64)>) -> Result<Self> {
        for (m, _) in &terms {
            ctx.ensure_same(&m.ctx())?;
        }
        let terms = terms.into_iter().map(|(m, c)| (m, ctx.reduce(c))).collect();
        Ok(OperatorPoly { ctx, semantics, terms: normalize(&ctx, terms, |a, b| a.cmp(b)) })
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending order.
    pub fn terms(&self) -> &[(FrobMonomial, u32)] {
        &self.terms
    }

    fn check(&self, other: &OperatorPoly) -> Result<()> {
        self.ctx.ensure_same(&other.ctx)?;
        self.semantics.ensure_same(other.semantics)
    }

    pub fn add(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check(other)?;
        Ok(self.with_terms(merge(&self.ctx, &self.terms, &other.terms, 1, |a, b| a.cmp(b))))
    }

    pub fn sub(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check(other)?;
        let minus = self.ctx.neg(1);
        Ok(self.with_terms(merge(&self.ctx, &self.terms, &other.terms, minus, |a, b| a.cmp(b))))
    }

    pub fn scale(&self, c: i64) -> OperatorPoly {
        let c = self.ctx.reduce(c);
        if c == 0 {
            return Self::zero(self.ctx, self.semantics);
        }
        self.with_terms(self.terms.iter().map(|(m, a)| (m.clone(), self.ctx.mul(*a, c))).collect())
    }

    pub fn neg(&self) -> OperatorPoly {
        self.scale(-1)
    }

    pub fn mul(&self, other: &OperatorPoly) -> Result<OperatorPoly> {
        self.check(other)?;
        let mut terms = Vec::with_capacity(self.terms.len() * other.terms.len());
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                if let Some(m) = self.semantics.product(a, b) {
                    terms.push((m, self.ctx.mul(*ca, *cb)));
                }
            }
        }
        Ok(self.with_terms(normalize(&self.ctx, terms, |a, b| a.cmp(b))))
    }

    fn with_terms(&self, terms: Vec<(FrobMonomial, u32)>) -> OperatorPoly {
        OperatorPoly { ctx: self.ctx, semantics: self.semantics, terms }
    }

    pub fn leading_term(&self) -> Result<(u32, &FrobMonomial)> {
        self.terms.first().map(|(m, c)| (*c, m)).ok_or(Error::ZeroInput)
    }

    /// Maximal degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.terms.windows(2).all(|w| w[0].0.degree() == w[1].0.degree())
    }

    /// The top-degree part of an 𝐅-element, read as an element of 𝐀.
    pub fn bernstein_symbol(&self) -> Result<OperatorPoly> {
        if self.semantics != Semantics::Carrying {
            return Err(Error::ShapeMismatch("the symbol is taken of an element of F".into()));
        }
        let top = self.degree().ok_or(Error::ZeroInput)?;
        let terms = self.terms.iter().filter(|(m, _)| m.degree() == top).cloned().collect();
        Ok(OperatorPoly { ctx: self.ctx, semantics: Semantics::Truncating, terms })
    }

    pub fn to_vector(&self, shape: &Arc<FreeModule>, pos: usize) -> Result<ModuleVector> {
        self.ctx.ensure_same(&shape.ctx)?;
        if pos >= shape.rank() {
            return Err(Error::ShapeMismatch(format!("position {pos} in a module of rank {}", shape.rank())));
        }
        let terms = self.terms.iter().map(|(m, c)| (PositionedMonomial::new(m.clone(), pos), *c)).collect();
        Ok(ModuleVector::from_sorted(shape.clone(), self.semantics, terms))
    }
}

impl fmt::Display for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_terms(self.terms.iter().map(|(m, c)| (m, *c)), self.semantics))
    }
}

impl fmt::Debug for OperatorPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "OperatorPoly({self})")
    }
}

/// The shifted free module `⊕ 𝐀(-d_i) ε_i` (or over 𝐅).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FreeModule {
    ctx: RingContext,
    shifts: Vec<i64>,
}

impl FreeModule {
    pub fn new(ctx: RingContext, shifts: Vec<i64>) -> Result<Arc<Self>> {
        if shifts.is_empty() {
            return Err(Error::ShapeMismatch("a free module needs rank at least 1".into()));
        }
        Ok(Arc::new(FreeModule { ctx, shifts }))
    }

    pub fn unshifted(ctx: RingContext, rank: usize) -> Result<Arc<Self>> {
        Self::new(ctx, vec![0; rank])
    }

    pub fn ctx(&self) -> RingContext {
        self.ctx
    }

    pub fn rank(&self) -> usize {
        self.shifts.len()
    }

    pub fn shifts(&self) -> &[i64] {
        &self.shifts
    }

    pub fn cmp_terms(&self, a: &PositionedMonomial, b: &PositionedMonomial) -> Ordering {
        cmp_positioned(a, b, &self.shifts)
    }
}

/// A vector of a shifted free module, terms sorted descending by the module order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ModuleVector {
    shape: Arc<FreeModule>,
    semantics: Semantics,
    terms: Vec<(PositionedMonomial, u32)>,
}

impl ModuleVector {
    pub fn zero(shape: Arc<FreeModule>, semantics: Semantics) -> Self {
        ModuleVector { shape, semantics, terms: Vec::new() }
    }

    /// The basis vector `ε_pos`.
    pub fn unit(shape: Arc<FreeModule>, pos: usize, semantics: Semantics) -> Result<Self> {
        OperatorPoly::one(shape.ctx, semantics).to_vector(&shape, pos)
    }

    /// Assembles a vector from its components, one polynomial per position.
    pub fn from_components(shape: Arc<FreeModule>, components: &[OperatorPoly]) -> Result<Self> {
        if components.len() != shape.rank() {
            return Err(Error::ShapeMismatch(format!(
                "{} components for a module of rank {}",
                components.len(),
                shape.rank()
            )));
        }
        let semantics = components[0].semantics();
        let mut terms = Vec::new();
        for (pos, c) in components.iter().enumerate() {
            shape.ctx.ensure_same(&c.ctx())?;
            semantics.ensure_same(c.semantics())?;
            terms.extend(c.terms().iter().map(|(m, a)| (PositionedMonomial::new(m.clone(), pos), *a)));
        }
        let terms = normalize(&shape.ctx, terms, |a, b| shape.cmp_terms(a, b));
        Ok(ModuleVector { shape, semantics, terms })
    }

    pub(crate) fn from_sorted(shape: Arc<FreeModule>, semantics: Semantics, terms: Vec<(PositionedMonomial, u32)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| shape.cmp_terms(&w[0].0, &w[1].0) == Ordering::Greater));
        ModuleVector { shape, semantics, terms }
    }

    pub fn from_terms(shape: Arc<FreeModule>, semantics: Semantics, terms: Vec<(PositionedMonomial, i64)>) -> Result<Self> {
        for (pm, _) in &terms {
            shape.ctx.ensure_same(&pm.mono.ctx())?;
            if pm.pos >= shape.rank() {
                return Err(Error::ShapeMismatch(format!("position {} in a module of rank {}", pm.pos, shape.rank())));
            }
        }
        let ctx = shape.ctx;
        let terms = terms.into_iter().map(|(m, c)| (m, ctx.reduce(c))).collect();
        let terms = normalize(&ctx, terms, |a, b| shape.cmp_terms(a, b));
        Ok(ModuleVector { shape, semantics, terms })
    }

    pub fn shape(&self) -> &Arc<FreeModule> {
        &self.shape
    }

    pub fn ctx(&self) -> RingContext {
        self.shape.ctx
    }

    pub fn semantics(&self) -> Semantics {
        self.semantics
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &[(PositionedMonomial, u32)] {
        &self.terms
    }

    pub fn component(&self, pos: usize) -> OperatorPoly {
        let terms = self.terms.iter().filter(|(pm, _)| pm.pos == pos).map(|(pm, c)| (pm.mono.clone(), *c)).collect();
        OperatorPoly { ctx: self.shape.ctx, semantics: self.semantics, terms }
    }

    fn check(&self, other: &ModuleVector) -> Result<()> {
        if self.shape != other.shape {
            return Err(Error::ShapeMismatch("vectors of different free modules".into()));
        }
        self.semantics.ensure_same(other.semantics)
    }

    pub fn add(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check(other)?;
        Ok(self.add_multiple(other, 1))
    }

    pub fn sub(&self, other: &ModuleVector) -> Result<ModuleVector> {
        self.check(other)?;
        Ok(self.add_multiple(other, self.ctx().neg(1)))
    }

    /// `self + factor·other` for vectors already known to be compatible.
    pub(crate) fn add_multiple(&self, other: &ModuleVector, factor: u32) -> ModuleVector {
        let shape = &self.shape;
        let terms = merge(&shape.ctx, &self.terms, &other.terms, factor, |a, b| shape.cmp_terms(a, b));
        ModuleVector { shape: shape.clone(), semantics: self.semantics, terms }
    }

    pub fn scale(&self, c: i64) -> ModuleVector {
        let ctx = self.ctx();
        let c = ctx.reduce(c);
        if c == 0 {
            return Self::zero(self.shape.clone(), self.semantics);
        }
        let terms = self.terms.iter().map(|(m, a)| (m.clone(), ctx.mul(*a, c))).collect();
        ModuleVector { shape: self.shape.clone(), semantics: self.semantics, terms }
    }

    /// `c · self` for a monomial `c`.
    pub fn left_mul_monomial(&self, c: &FrobMonomial) -> ModuleVector {
        let terms = self
            .terms
            .iter()
            .filter_map(|(pm, a)| self.semantics.product(c, &pm.mono).map(|m| (PositionedMonomial::new(m, pm.pos), *a)))
            .collect();
        let shape = &self.shape;
        let terms = normalize(&shape.ctx, terms, |a, b| shape.cmp_terms(a, b));
        ModuleVector { shape: shape.clone(), semantics: self.semantics, terms }
    }

    /// The left action `g · self`.
    pub fn left_mul(&self, g: &OperatorPoly) -> Result<ModuleVector> {
        self.ctx().ensure_same(&g.ctx())?;
        self.semantics.ensure_same(g.semantics())?;
        let mut terms = Vec::new();
        for (c, a) in g.terms() {
            for (pm, b) in &self.terms {
                if let Some(m) = self.semantics.product(c, &pm.mono) {
                    terms.push((PositionedMonomial::new(m, pm.pos), self.ctx().mul(*a, *b)));
                }
            }
        }
        let shape = &self.shape;
        let terms = normalize(&shape.ctx, terms, |a, b| shape.cmp_terms(a, b));
        Ok(ModuleVector { shape: shape.clone(), semantics: self.semantics, terms })
    }

    pub fn leading_term(&self) -> Result<(u32, &PositionedMonomial)> {
        self.terms.first().map(|(m, c)| (*c, m)).ok_or(Error::ZeroInput)
    }

    /// Largest shifted degree of a term, `None` for zero.
    pub fn degree(&self) -> Option<i64> {
        self.terms.iter().map(|(pm, _)| pm.shifted_degree(&self.shape.shifts)).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let s = &self.shape.shifts;
        self.terms.windows(2).all(|w| w[0].0.shifted_degree(s) == w[1].0.shifted_degree(s))
    }

    /// Robustness: the largest robustness of a term.
    pub fn robustness(&self) -> u32 {
        self.terms.iter().map(|(pm, _)| pm.mono.robustness()).max().unwrap_or(0)
    }

    /// Scales so that the leading coefficient is 1.
    pub fn monic(&self) -> ModuleVector {
        match self.terms.first() {
            None => self.clone(),
            Some((_, c)) => self.scale(self.ctx().inv(*c) as i64),
        }
    }

    /// Top shifted-degree part, read as a vector over 𝐀.
    pub fn bernstein_symbol(&self) -> ModuleVector {
        let top = self.degree();
        let shifts = self.shape.shifts();
        let terms = self.terms.iter().filter(|(m, _)| Some(m.shifted_degree(shifts)) == top).cloned().collect();
        ModuleVector { shape: self.shape.clone(), semantics: Semantics::Truncating, terms }
    }
}

impl fmt::Display for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.shape.rank() == 1 {
            return write!(f, "{}", self.component(0));
        }
        let parts: Vec<String> = (0..self.shape.rank()).map(|j| self.component(j).to_string()).collect();
        write!(f, "[{}]", parts.join(", "))
    }
}

impl fmt::Debug for ModuleVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ModuleVector({self})")
    }
}
