//! Analysis of finitely presented 𝐅-modules under the standard filtration.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::groebner::{buchberger_in, initial_module, GroebnerBasis, InitialModule};
use crate::hilbert::{
    cokernel_series, hs_monomial_quotient, standard_monomial_counts, GradedDiagnostics, HilbertRational,
    IntPolynomial,
};
use crate::monomial::{parse_word, RingContext};
use crate::operator::{FreeModule, ModuleVector, OperatorPoly, Semantics};

/// `𝐅^t / (relations)`, the generators `ε_j` sitting in filtration degree `d_j`.
#[derive(Clone, Debug)]
pub struct FPresentation {
    shape: Arc<FreeModule>,
    relations: Vec<ModuleVector>,
}

impl FPresentation {
    pub fn new(ctx: RingContext, shifts: Vec<i64>, relations: Vec<ModuleVector>) -> Result<Self> {
        if let Some(&s) = shifts.iter().find(|&&s| s < 0) {
            return Err(Error::NegativeShift(s));
        }
        let shape = FreeModule::new(ctx, shifts)?;
        for r in &relations {
            if r.shape() != &shape {
                return Err(Error::ShapeMismatch("relation lives in a different free module".into()));
            }
            if r.semantics() != Semantics::Carrying {
                return Err(Error::ShapeMismatch("relations of an F-module must use F".into()));
            }
        }
        Ok(FPresentation { shape, relations })
    }

    /// A cyclic module `𝐅 / (relations)` given as polynomials.
    pub fn cyclic(relations: &[OperatorPoly]) -> Result<Self> {
        let ctx = relations.first().ok_or(Error::ZeroInput)?.ctx();
        let shape = FreeModule::unshifted(ctx, 1)?;
        let rels = relations.iter().map(|r| r.to_vector(&shape, 0)).collect::<Result<Vec<_>>>()?;
        Self::new(ctx, vec![0], rels)
    }

    pub fn ctx(&self) -> RingContext {
        self.shape.ctx()
    }

    pub fn shape(&self) -> &Arc<FreeModule> {
        &self.shape
    }

    pub fn relations(&self) -> &[ModuleVector] {
        &self.relations
    }
}

fn cyclic_from_words(ctx: RingContext, relations: &[&[(&str, i64)]]) -> FPresentation {
    let polys: Vec<OperatorPoly> = relations
        .iter()
        .map(|terms| {
            let terms = terms.iter().map(|(w, c)| (parse_word(w, ctx).unwrap().unwrap(), *c)).collect();
            OperatorPoly::from_terms(ctx, Semantics::Carrying, terms).unwrap()
        })
        .collect();
    FPresentation::cyclic(&polys).expect("fixed presentations are well formed")
}

/// `R = 𝐅 / 𝐅(F - 1)` with `n = 1`.
pub fn presentation_r(p: u64) -> Result<FPresentation> {
    Ok(cyclic_from_words(RingContext::new(p, 1)?, &[&[("F", 1), ("1", -1)]]))
}

/// `H¹_x(R) = 𝐅 / 𝐅(x, xF - 1)` with `n = 1`.
pub fn presentation_local_cohomology(p: u64) -> Result<FPresentation> {
    Ok(cyclic_from_words(RingContext::new(p, 1)?, &[&[("x", 1)], &[("xF", 1), ("1", -1)]]))
}

/// `R_x = 𝐅 / 𝐅(xF - 1)` with `n = 1`.
pub fn presentation_localization(p: u64) -> Result<FPresentation> {
    Ok(cyclic_from_words(RingContext::new(p, 1)?, &[&[("xF", 1), ("1", -1)]]))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Verdict {
    Yes,
    No,
    Unknown,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Yes => "YES",
            Verdict::No => "NO",
            Verdict::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug)]
pub struct AnalysisReport {
    pub groebner: GroebnerBasis,
    pub initial: InitialModule,
    /// Present exactly when the Gröbner run is complete.
    pub hs: Option<HilbertRational>,
    /// Standard-monomial counts in degrees `0..=cap-2`.
    pub truncated_hilbert: Vec<BigUint>,
    pub delta: Option<u32>,
    pub multiplicity: Option<BigRational>,
    pub holonomic: Verdict,
    pub great: Verdict,
    /// Kernel and cokernel data of the monomial model `𝐀^t / in(H)`.
    pub diagnostics: Option<GradedDiagnostics>,
}

/// Gröbner basis of the relations in 𝐅 and the initial module of the
/// associated graded relation module.
pub fn standard_filtration_gr(pres: &FPresentation, cap: u32) -> Result<(GroebnerBasis, InitialModule)> {
    let gb = buchberger_in(pres.shape.clone(), Semantics::Carrying, &pres.relations, cap)?;
    let initial = initial_module(&gb);
    Ok((gb, initial))
}

/// Hilbert series of the cokernel of the structure map: `⊕_j R/J_j(-d_j)`.
pub fn structure_cokernel_hs(initial: &InitialModule) -> Result<(IntPolynomial, u32)> {
    cokernel_series(initial)
}

/// Degreewise dimensions of the kernel of the structure map.
pub fn structure_kernel_hs(initial: &InitialModule) -> Result<IntPolynomial> {
    Ok(hs_monomial_quotient(initial)?.1.kernel_hs)
}

pub fn analyze(pres: &FPresentation, cap: u32) -> Result<AnalysisReport> {
    let (groebner, initial) = standard_filtration_gr(pres, cap)?;
    let truncated_hilbert = match cap.checked_sub(2) {
        Some(top) => standard_monomial_counts(&initial, top as usize),
        None => Vec::new(),
    };
    let mut report = AnalysisReport {
        groebner,
        initial,
        hs: None,
        truncated_hilbert,
        delta: None,
        multiplicity: None,
        holonomic: Verdict::Unknown,
        great: Verdict::Unknown,
        diagnostics: None,
    };
    if !report.groebner.status.is_complete() {
        return Ok(report);
    }
    let (hs, diagnostics) = hs_monomial_quotient(&report.initial)?;
    let delta = hs.delta();
    if delta != diagnostics.cokernel_hs.1 {
        return Err(Error::InvariantViolation(format!(
            "pole order {delta} differs from the cokernel dimension {}",
            diagnostics.cokernel_hs.1
        )));
    }
    let zero_dimensional = (0..report.initial.rank()).all(|j| {
        let contraction = report.initial.contraction(j);
        crate::hilbert::hs_commutative(&contraction, pres.ctx().n()).1 == 0
    });
    if zero_dimensional != (delta == 0) {
        return Err(Error::InvariantViolation("holonomicity criteria disagree".into()));
    }
    report.multiplicity = Some(hs.multiplicity());
    report.delta = Some(delta);
    report.holonomic = if delta == 0 { Verdict::Yes } else { Verdict::No };
    report.great = Verdict::Yes;
    report.hs = Some(hs);
    report.diagnostics = Some(diagnostics);
    Ok(report)
}

/// Checks `HS_{R_x} - t^shift · HS_R = HS_{H¹_x(R)}` at `p = 2`, `n = 1`.
pub fn check_unit_identity_with_shift(shift: usize) -> Result<bool> {
    let series = |pres: FPresentation| -> Result<HilbertRational> {
        analyze(&pres, crate::groebner::DEFAULT_CAP)?
            .hs
            .ok_or_else(|| Error::InvariantViolation("fixed presentation did not complete".into()))
    };
    let r = series(presentation_r(2)?)?;
    let h1 = series(presentation_local_cohomology(2)?)?;
    let rx = series(presentation_localization(2)?)?;
    Ok(rx.sub(&r.scale_by_t(shift))?.same_function(&h1))
}

/// The identity between the three unit modules `R`, `H¹_x(R)` and `R_x`.
pub fn check_unit_identity() -> Result<bool> {
    check_unit_identity_with_shift(1)
}
