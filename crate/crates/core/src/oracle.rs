//! Brute-force linear algebra over 𝔽_p, independent of the Gröbner engine.
//!
//! Everything here spans explicit monomial multiples of the inputs and row
//! reduces them; no reduction by leading monomials is used.

use std::collections::HashMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::fmodule::FPresentation;
use crate::monomial::{FrobMonomial, PositionedMonomial, RingContext};
use crate::operator::{FreeModule, ModuleVector, Semantics};

/// Largest number of multiples any single oracle call will form.
pub const ENUMERATION_BUDGET: usize = 400_000;

/// Row echelon form of a set of vectors, pivoting on the largest term.
#[derive(Clone, Debug, Default)]
pub struct GradedMatrix {
    pivots: HashMap<PositionedMonomial, ModuleVector>,
}

impl GradedMatrix {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    /// Reduces `v` until its largest term is not a pivot.
    pub fn reduce(&self, v: &ModuleVector) -> ModuleVector {
        let ctx = v.ctx();
        let mut v = v.clone();
        while let Ok((c, lead)) = v.leading_term() {
            match self.pivots.get(lead) {
                Some(row) => v = v.add_multiple(row, ctx.neg(c)),
                None => break,
            }
        }
        v
    }

    /// Adds a row; returns whether it raised the rank.
    pub fn insert(&mut self, v: &ModuleVector) -> bool {
        let r = self.reduce(v);
        match r.leading_term() {
            Ok((_, lead)) => {
                let lead = lead.clone();
                self.pivots.insert(lead, r.monic());
                true
            }
            Err(_) => false,
        }
    }

    /// Reduces `v` completely (every term), returning the remainder.
    pub fn full_remainder(&self, v: &ModuleVector) -> ModuleVector {
        let ctx = v.ctx();
        let mut v = v.clone();
        let mut i = 0;
        while i < v.terms().len() {
            let (t, c) = v.terms()[i].clone();
            match self.pivots.get(&t) {
                Some(row) => v = v.add_multiple(row, ctx.neg(c)),
                None => i += 1,
            }
        }
        v
    }

    pub fn contains(&self, v: &ModuleVector) -> bool {
        self.reduce(v).is_zero()
    }

    /// Number of pivots whose leading term has the given shifted degree.
    pub fn pivots_in_degree(&self, degree: i64, shifts: &[i64]) -> usize {
        self.pivots.keys().filter(|m| m.shifted_degree(shifts) == degree).count()
    }
}

/// Monomials of each degree, cached per ring.
struct MonomialTable {
    ctx: RingContext,
    by_degree: Vec<Vec<FrobMonomial>>,
}

impl MonomialTable {
    fn new(ctx: RingContext) -> Self {
        MonomialTable { ctx, by_degree: Vec::new() }
    }

    fn of_degree(&mut self, d: i64) -> &[FrobMonomial] {
        if d < 0 {
            return &[];
        }
        while self.by_degree.len() <= d as usize {
            let next = self.by_degree.len() as u32;
            self.by_degree.push(FrobMonomial::all_of_degree(self.ctx, next));
        }
        &self.by_degree[d as usize]
    }
}

fn free_dimension(table: &mut MonomialTable, shifts: &[i64], d: i64) -> usize {
    shifts.iter().map(|s| table.of_degree(d - s).len()).sum()
}

fn spend(used: &mut usize, more: usize, degree: i64) -> Result<()> {
    *used += more;
    if *used > ENUMERATION_BUDGET {
        Err(Error::EnumerationBudget { budget: ENUMERATION_BUDGET, degree: degree.max(0) as u32 })
    } else {
        Ok(())
    }
}

/// `dim [𝐀^t / N]_d` for the left submodule `N` spanned by homogeneous generators.
pub fn graded_dim_quotient(shape: &Arc<FreeModule>, gens: &[ModuleVector], d: i64) -> Result<usize> {
    let mut table = MonomialTable::new(shape.ctx());
    let mut matrix = GradedMatrix::new();
    let mut used = 0;
    for g in gens.iter().filter(|g| !g.is_zero()) {
        if g.shape() != shape || g.semantics() != Semantics::Truncating {
            return Err(Error::ShapeMismatch("oracle generators must be elements of A^t".into()));
        }
        if !g.is_homogeneous() {
            return Err(Error::ShapeMismatch(format!("{g} is not homogeneous")));
        }
        let cofactors = table.of_degree(d - g.degree().expect("nonzero"));
        spend(&mut used, cofactors.len(), d)?;
        for c in cofactors {
            matrix.insert(&g.left_mul_monomial(c));
        }
    }
    Ok(free_dimension(&mut table, shape.shifts(), d) - matrix.rank())
}

fn filtered_dim_with_slack(pres: &FPresentation, i: i64, slack: u32) -> Result<usize> {
    let shape = pres.shape();
    let mut table = MonomialTable::new(pres.ctx());
    let mut matrix = GradedMatrix::new();
    let top = i + slack as i64;
    let mut used = 0;
    for h in pres.relations().iter().filter(|h| !h.is_zero()) {
        let e = h.degree().expect("nonzero");
        for deg_b in 0..=(top - e) {
            let cofactors = table.of_degree(deg_b);
            spend(&mut used, cofactors.len(), i)?;
            for b in cofactors {
                matrix.insert(&h.left_mul_monomial(b));
            }
        }
    }
    Ok(free_dimension(&mut table, shape.shifts(), i) - matrix.pivots_in_degree(i, shape.shifts()))
}

/// `dim Ω_i / Ω_{i-1}` for the standard filtration of a presented 𝐅-module.
///
/// The relation module is approximated by multiples `b·h_j` of complexity at
/// most `i + slack`; the slack doubles until two consecutive values agree.
/// Returns the value and the slack at which it was confirmed.
pub fn filtered_graded_dim(pres: &FPresentation, i: u32, slack: u32) -> Result<(usize, u32)> {
    const MAX_SLACK: u32 = 64;
    let mut s = slack.max(1);
    let mut previous = filtered_dim_with_slack(pres, i as i64, s)?;
    while s < MAX_SLACK {
        s *= 2;
        let value = filtered_dim_with_slack(pres, i as i64, s)?;
        if value == previous {
            return Ok((value, s));
        }
        previous = value;
    }
    Err(Error::NoStabilization { degree: i, slack: s })
}

/// Spanning set of all syzygies `Σ c_i ε_i` on the monomials with
/// `deg c_i + deg a_i ≤ max_degree`, as vectors of `⊕ 𝐀(-deg a_i)`.
pub fn brute_syzygies(gens: &[PositionedMonomial], max_degree: u32) -> Result<Vec<ModuleVector>> {
    let ctx = gens.first().ok_or(Error::ZeroInput)?.mono.ctx();
    let shape = FreeModule::new(ctx, gens.iter().map(|g| g.mono.degree() as i64).collect())?;
    let mut table = MonomialTable::new(ctx);
    let mut out = Vec::new();
    let mut used = 0;
    let unit = |c: &FrobMonomial, i: usize| {
        ModuleVector::from_terms(shape.clone(), Semantics::Truncating, vec![(PositionedMonomial::new(c.clone(), i), 1)])
            .expect("position in range")
    };
    for s in 0..=max_degree as i64 {
        let mut images: HashMap<PositionedMonomial, Vec<(FrobMonomial, usize)>> = HashMap::new();
        let mut keys = Vec::new();
        for (i, g) in gens.iter().enumerate() {
            let cofactors = table.of_degree(s - g.mono.degree() as i64).to_vec();
            spend(&mut used, cofactors.len(), s)?;
            for c in cofactors {
                match c.trunc_product(&g.mono) {
                    None => out.push(unit(&c, i)),
                    Some(m) => {
                        let key = PositionedMonomial::new(m, g.pos);
                        let entry = images.entry(key.clone()).or_default();
                        if entry.is_empty() {
                            keys.push(key);
                        }
                        entry.push((c, i));
                    }
                }
            }
        }
        for key in keys {
            let preimages = &images[&key];
            let (c0, i0) = &preimages[0];
            for (c, i) in &preimages[1..] {
                out.push(unit(c0, *i0).sub(&unit(c, *i)).expect("same module"));
            }
        }
    }
    Ok(out)
}

/// Span of all multiples `c·g` with `deg c + deg g ≤ cap`, for repeated
/// membership queries.
pub struct MembershipOracle {
    matrix: GradedMatrix,
}

impl MembershipOracle {
    pub fn new(gens: &[ModuleVector], cap: i64) -> Result<Self> {
        let mut matrix = GradedMatrix::new();
        let Some(first) = gens.iter().find(|g| !g.is_zero()) else {
            return Ok(MembershipOracle { matrix });
        };
        let mut table = MonomialTable::new(first.ctx());
        let mut used = 0;
        for g in gens.iter().filter(|g| !g.is_zero()) {
            if g.shape() != first.shape() || g.semantics() != first.semantics() {
                return Err(Error::ShapeMismatch("generators of different modules or rings".into()));
            }
            let e = g.degree().expect("nonzero");
            for d in 0..=(cap - e) {
                let cofactors = table.of_degree(d);
                spend(&mut used, cofactors.len(), d + e)?;
                for c in cofactors {
                    matrix.insert(&g.left_mul_monomial(c));
                }
            }
        }
        Ok(MembershipOracle { matrix })
    }

    pub fn contains(&self, h: &ModuleVector) -> bool {
        self.matrix.full_remainder(h).is_zero()
    }
}

/// Whether `h` is a combination of multiples `c·g_i` of degree at most `cap`.
pub fn brute_membership(h: &ModuleVector, gens: &[ModuleVector], cap: i64) -> Result<bool> {
    if h.is_zero() {
        return Ok(true);
    }
    Ok(MembershipOracle::new(gens, cap)?.contains(h))
}
