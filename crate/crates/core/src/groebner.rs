//! Reduction, the capped Buchberger loop and initial modules.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::monomial::{FrobMonomial, PositionedMonomial, RingContext};
use crate::operator::{FreeModule, ModuleVector, Semantics};
use crate::syzygy::{annihilators, generating_syzygies, pair_relations, MonomialSyzygy};

/// Default Schreyer-degree cap of a Buchberger run.
pub const DEFAULT_CAP: u32 = 50;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Status {
    Complete,
    /// Stopped before processing a syzygy of Schreyer degree above `cap`.
    Truncated { cap: u32 },
}

impl Status {
    pub fn is_complete(&self) -> bool {
        matches!(self, Status::Complete)
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Complete => f.write_str("COMPLETE"),
            Status::Truncated { cap } => write!(f, "TRUNCATED({cap})"),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GroebnerTrace {
    /// `C = max { rb(g) + deg(g) : rb(g) != 0 }` over the input generators.
    pub robustness_bound: i64,
    pub pairs_processed: usize,
    pub max_degree_reached: i64,
    pub elements_accepted: usize,
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub shape: Arc<FreeModule>,
    pub semantics: Semantics,
    /// Monic, interreduced, sorted by ascending leading term.
    pub elements: Vec<ModuleVector>,
    pub status: Status,
    pub trace: GroebnerTrace,
}

impl GroebnerBasis {
    pub fn leading_monomials(&self) -> Vec<PositionedMonomial> {
        self.elements.iter().map(|g| g.leading_term().expect("basis elements are nonzero").1.clone()).collect()
    }
}

/// A monomial submodule of `𝐀^t`, one minimal list of generators per position.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InitialModule {
    ctx: RingContext,
    shifts: Vec<i64>,
    generators: Vec<Vec<FrobMonomial>>,
    /// Set when the module comes from a truncated run: it is then only known
    /// to be contained in the true initial module, with equality up to this degree.
    pub truncated_at: Option<u32>,
}

impl InitialModule {
    /// Builds the module generated by the given monomials, keeping only minimal ones.
    pub fn new(ctx: RingContext, shifts: Vec<i64>, generators: Vec<Vec<FrobMonomial>>) -> Result<Self> {
        if shifts.len() != generators.len() || shifts.is_empty() {
            return Err(Error::ShapeMismatch(format!(
                "{} generator lists for {} shifts",
                generators.len(),
                shifts.len()
            )));
        }
        let mut minimal = Vec::with_capacity(generators.len());
        for mut gens in generators {
            for g in &gens {
                ctx.ensure_same(&g.ctx())?;
            }
            gens.sort();
            gens.dedup();
            let mut kept: Vec<FrobMonomial> = Vec::new();
            for g in gens {
                if !kept.iter().any(|k| g.is_left_multiple_of(k)) {
                    kept.push(g);
                }
            }
            minimal.push(kept);
        }
        Ok(InitialModule { ctx, shifts, generators: minimal, truncated_at: None })
    }

    /// The zero submodule of a free module of the given shifts.
    pub fn zero(ctx: RingContext, shifts: Vec<i64>) -> Self {
        let generators = vec![Vec::new(); shifts.len()];
        InitialModule { ctx, shifts, generators, truncated_at: None }
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

    /// Minimal generators at a position, ascending.
    pub fn generators(&self, pos: usize) -> &[FrobMonomial] {
        &self.generators[pos]
    }

    pub fn contains(&self, m: &PositionedMonomial) -> bool {
        self.generators[m.pos].iter().any(|g| m.mono.is_left_multiple_of(g))
    }

    /// Exponent vectors generating the contraction `I_pos ∩ R`.
    pub fn contraction(&self, pos: usize) -> Vec<Vec<u32>> {
        self.generators[pos].iter().filter(|g| g.f_order() == 0).map(|g| g.tail().to_vec()).collect()
    }

    /// Largest shifted degree of a generator, or the largest shift when there are none.
    pub fn max_generator_degree(&self) -> i64 {
        let mut best = i64::MIN;
        for (j, gens) in self.generators.iter().enumerate() {
            best = best.max(self.shifts[j]);
            for g in gens {
                best = best.max(g.degree() as i64 + self.shifts[j]);
            }
        }
        best
    }
}

impl fmt::Display for InitialModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .generators
            .iter()
            .map(|gens| format!("({})", gens.iter().map(|g| g.to_string()).collect::<Vec<_>>().join(", ")))
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

fn check_compatible(g: &ModuleVector, basis: &[ModuleVector]) -> Result<()> {
    for b in basis {
        if b.shape() != g.shape() || b.semantics() != g.semantics() {
            return Err(Error::ShapeMismatch("basis element of a different module or ring".into()));
        }
        if b.is_zero() {
            return Err(Error::ZeroInput);
        }
    }
    Ok(())
}

/// Finds the first basis element whose leading monomial left-divides `t`.
fn find_reducer<'a>(t: &PositionedMonomial, basis: &'a [ModuleVector]) -> Option<(&'a ModuleVector, FrobMonomial)> {
    basis.iter().find_map(|b| {
        let (_, lead) = b.leading_term().ok()?;
        if lead.pos != t.pos {
            return None;
        }
        t.mono.divide_left(&lead.mono).map(|c| (b, c))
    })
}

fn reduce_from(mut h: ModuleVector, basis: &[ModuleVector], head_only: bool) -> ModuleVector {
    let ctx = h.ctx();
    let mut i = 0;
    while i < h.terms().len() {
        let (t, coef) = h.terms()[i].clone();
        match find_reducer(&t, basis) {
            Some((b, c)) => {
                let (lc, _) = b.leading_term().expect("nonzero");
                let factor = ctx.neg(ctx.mul(coef, ctx.inv(lc)));
                h = h.add_multiple(&b.left_mul_monomial(&c), factor);
            }
            None if head_only => break,
            None => i += 1,
        }
    }
    h
}

/// Fully reduces `g` by `basis`: every support term left-divisible by a
/// leading monomial is eliminated, largest first.
pub fn normal_form(g: &ModuleVector, basis: &[ModuleVector]) -> Result<ModuleVector> {
    check_compatible(g, basis)?;
    Ok(reduce_from(g.clone(), basis, false))
}

/// Reduces only the leading term until it is irreducible.
pub fn head_reduce(g: &ModuleVector, basis: &[ModuleVector]) -> Result<ModuleVector> {
    check_compatible(g, basis)?;
    Ok(reduce_from(g.clone(), basis, true))
}

/// Reduces every element fully against the others until nothing changes,
/// dropping those that reduce to zero; the survivors are monic and sorted by
/// ascending leading term.
pub fn interreduce(basis: &[ModuleVector]) -> Result<Vec<ModuleVector>> {
    let mut elems: Vec<ModuleVector> = basis.iter().filter(|g| !g.is_zero()).map(|g| g.monic()).collect();
    let shape = match elems.first() {
        Some(g) => g.shape().clone(),
        None => return Ok(Vec::new()),
    };
    check_compatible(&elems[0], &elems)?;
    elems.sort_by(|a, b| shape.cmp_terms(a.leading_term().unwrap().1, b.leading_term().unwrap().1));
    loop {
        let mut changed = false;
        let mut i = 0;
        while i < elems.len() {
            let others: Vec<ModuleVector> =
                elems.iter().enumerate().filter(|(j, _)| *j != i).map(|(_, g)| g.clone()).collect();
            let r = reduce_from(elems[i].clone(), &others, false).monic();
            if r.is_zero() {
                elems.remove(i);
                changed = true;
                continue;
            }
            if r != elems[i] {
                elems[i] = r;
                changed = true;
            }
            i += 1;
        }
        if !changed {
            break;
        }
    }
    elems.sort_by(|a, b| shape.cmp_terms(a.leading_term().unwrap().1, b.leading_term().unwrap().1));
    Ok(elems)
}

/// The S-element `Σ c_k · cofactor_k · g_k` of a syzygy on the leading monomials.
pub fn s_element(syz: &MonomialSyzygy, elements: &[ModuleVector]) -> ModuleVector {
    let first = &elements[syz.terms[0].generator];
    let mut h = ModuleVector::zero(first.shape().clone(), first.semantics());
    for t in &syz.terms {
        let g = &elements[t.generator];
        h = h.add_multiple(&g.left_mul_monomial(&t.cofactor), t.coefficient);
    }
    h
}

/// Checks the Buchberger criterion: every S-element of every generating
/// syzygy of the leading monomials reduces to zero.
pub fn satisfies_criterion(elements: &[ModuleVector]) -> bool {
    let leads: Vec<PositionedMonomial> = elements.iter().map(|g| g.leading_term().unwrap().1.clone()).collect();
    generating_syzygies(&leads).iter().all(|z| reduce_from(s_element(z, elements), elements, false).is_zero())
}

enum Task {
    Seed(ModuleVector),
    Syzygy(MonomialSyzygy),
}

fn robustness_excess(g: &ModuleVector) -> Option<i64> {
    let rb = g.robustness();
    (rb != 0).then(|| rb as i64 + g.degree().expect("nonzero"))
}

/// Runs Buchberger's algorithm on `gens`, processing syzygies by ascending
/// Schreyer degree and stopping once the next degree exceeds `cap`.
pub fn buchberger(gens: &[ModuleVector], cap: u32) -> Result<GroebnerBasis> {
    let first = gens.first().ok_or_else(|| Error::ShapeMismatch("no generators to infer the module from".into()))?;
    buchberger_in(first.shape().clone(), first.semantics(), gens, cap)
}

/// [`buchberger`] with an explicit ambient module, so that an empty list is allowed.
pub fn buchberger_in(
    shape: Arc<FreeModule>,
    semantics: Semantics,
    gens: &[ModuleVector],
    cap: u32,
) -> Result<GroebnerBasis> {
    let mut trace = GroebnerTrace::default();
    let mut queue: BTreeMap<(i64, usize), Task> = BTreeMap::new();
    let mut seq = 0usize;
    for g in gens {
        if g.shape() != &shape || g.semantics() != semantics {
            return Err(Error::ShapeMismatch("generators of different modules or rings".into()));
        }
        if g.is_zero() {
            continue;
        }
        let degree = g.degree().expect("nonzero");
        if degree > cap as i64 {
            return Err(Error::CapTooSmall { cap, degree });
        }
        if let Some(bound) = robustness_excess(g) {
            trace.robustness_bound = trace.robustness_bound.max(bound);
        }
        queue.insert((degree, seq), Task::Seed(g.clone()));
        seq += 1;
    }

    let mut elements: Vec<ModuleVector> = Vec::new();
    let mut leads: Vec<PositionedMonomial> = Vec::new();
    let mut status = Status::Complete;
    while let Some(entry) = queue.first_entry() {
        let degree = entry.key().0;
        if degree > cap as i64 {
            status = Status::Truncated { cap };
            break;
        }
        let task = entry.remove();
        trace.max_degree_reached = trace.max_degree_reached.max(degree);
        let h = match task {
            Task::Seed(g) => g,
            Task::Syzygy(z) => {
                trace.pairs_processed += 1;
                s_element(&z, &elements)
            }
        };
        let h = reduce_from(h, &elements, true);
        if h.is_zero() {
            continue;
        }
        let h = h.monic();
        if semantics == Semantics::Truncating {
            if let Some(excess) = robustness_excess(&h) {
                if excess > trace.robustness_bound {
                    return Err(Error::InvariantViolation(format!(
                        "robustness certificate: rb + deg = {excess} exceeds C = {} for {h}",
                        trace.robustness_bound
                    )));
                }
            }
        }
        let lead = h.leading_term().expect("nonzero").1.clone();
        let k = elements.len();
        let mut fresh = Vec::new();
        for (i, l) in leads.iter().enumerate() {
            if l.pos == lead.pos {
                fresh.extend(pair_relations(&l.mono, i, &lead.mono, k, lead.pos));
            }
        }
        fresh.extend(annihilators(&lead.mono, k, lead.pos));
        for z in fresh {
            queue.insert((z.degree(shape.shifts()), seq), Task::Syzygy(z));
            seq += 1;
        }
        elements.push(h);
        leads.push(lead);
        trace.elements_accepted += 1;
    }

    let elements = interreduce(&elements)?;
    Ok(GroebnerBasis { shape, semantics, elements, status, trace })
}

/// The minimal generators of the module of leading monomials.
pub fn initial_module(basis: &GroebnerBasis) -> InitialModule {
    let rank = basis.shape.rank();
    let mut per_pos = vec![Vec::new(); rank];
    for lead in basis.leading_monomials() {
        per_pos[lead.pos].push(lead.mono);
    }
    let mut module = InitialModule::new(basis.shape.ctx(), basis.shape.shifts().to_vec(), per_pos)
        .expect("leading monomials share the module's ring");
    if let Status::Truncated { cap } = basis.status {
        module.truncated_at = Some(cap);
    }
    module
}
