//! Reports for each command, rendered as text or JSON.

use std::str::FromStr;

use frobenius_core::{
    analyze, buchberger_in, hs_monomial_quotient, initial_module, standard_monomial_counts, Error, FPresentation,
    FreeModule, GradedDiagnostics, GroebnerBasis, HilbertRational, InitialModule, IntPolynomial, OperatorPoly,
    Semantics, Verdict,
};
use serde_json::{json, Number, Value};

pub const SCHEMA: &str = include_str!("../schema/report.schema.json");

fn number(text: impl ToString) -> Value {
    Value::Number(Number::from_str(&text.to_string()).expect("integers are valid JSON numbers"))
}

fn numbers<T: std::fmt::Display>(values: &[T]) -> Value {
    Value::Array(values.iter().map(number).collect())
}

pub fn series_json(hs: &HilbertRational) -> Value {
    json!({
        "numerator": numbers(hs.numerator.coeffs()),
        "pole_power": hs.pole_power,
        "p": hs.ctx.p(),
        "n": hs.ctx.n(),
    })
}

fn verdict_json(v: Verdict) -> Value {
    match v {
        Verdict::Yes => Value::Bool(true),
        Verdict::No => Value::Bool(false),
        Verdict::Unknown => Value::Null,
    }
}

/// Initial-module generators as words, with `*e<j>` positions in rank above one.
pub fn initial_words(initial: &InitialModule) -> Vec<String> {
    let mut out = Vec::new();
    for pos in 0..initial.rank() {
        for m in initial.generators(pos) {
            if initial.rank() == 1 {
                out.push(m.to_string());
            } else {
                out.push(format!("{m}*e{}", pos + 1));
            }
        }
    }
    out
}

fn join<T: ToString>(values: &[T]) -> String {
    values.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(", ")
}

/// The shared result of `analyze`, `gb` and `hilbert` on a named ideal or module.
#[derive(Clone, Debug)]
pub struct ModuleReport {
    pub name: String,
    pub kind: &'static str,
    pub cap: u32,
    pub groebner: GroebnerBasis,
    pub initial: InitialModule,
    pub hs: Option<HilbertRational>,
    pub truncated_hilbert: Vec<num_bigint::BigUint>,
    pub delta: Option<u32>,
    pub multiplicity: Option<num_rational::BigRational>,
    pub holonomic: Verdict,
    pub great: Option<Verdict>,
    pub diagnostics: Option<GradedDiagnostics>,
}

impl ModuleReport {
    pub fn for_ideal(name: &str, ctx: frobenius_core::RingContext, gens: &[OperatorPoly], cap: u32) -> Result<Self, Error> {
        let shape = FreeModule::unshifted(ctx, 1)?;
        let vectors = gens.iter().map(|g| g.to_vector(&shape, 0)).collect::<Result<Vec<_>, _>>()?;
        let groebner = buchberger_in(shape, Semantics::Truncating, &vectors, cap)?;
        let initial = initial_module(&groebner);
        let truncated_hilbert = cap.checked_sub(2).map_or(Vec::new(), |top| standard_monomial_counts(&initial, top as usize));
        let mut report = ModuleReport {
            name: name.to_string(),
            kind: "ideal",
            cap,
            groebner,
            initial,
            hs: None,
            truncated_hilbert,
            delta: None,
            multiplicity: None,
            holonomic: Verdict::Unknown,
            great: None,
            diagnostics: None,
        };
        if report.groebner.status.is_complete() {
            let (hs, diagnostics) = hs_monomial_quotient(&report.initial)?;
            let delta = hs.delta();
            report.delta = Some(delta);
            report.multiplicity = Some(hs.multiplicity());
            report.holonomic = if delta == 0 { Verdict::Yes } else { Verdict::No };
            report.hs = Some(hs);
            report.diagnostics = Some(diagnostics);
        }
        Ok(report)
    }

    pub fn for_fmodule(name: &str, pres: &FPresentation, cap: u32) -> Result<Self, Error> {
        let a = analyze(pres, cap)?;
        Ok(ModuleReport {
            name: name.to_string(),
            kind: "fmodule",
            cap,
            groebner: a.groebner,
            initial: a.initial,
            hs: a.hs,
            truncated_hilbert: a.truncated_hilbert,
            delta: a.delta,
            multiplicity: a.multiplicity,
            holonomic: a.holonomic,
            great: Some(a.great),
            diagnostics: a.diagnostics,
        })
    }

    pub fn is_complete(&self) -> bool {
        self.groebner.status.is_complete()
    }

    fn basis(&self) -> Vec<String> {
        self.groebner.elements.iter().map(|g| g.to_string()).collect()
    }

    fn trace_json(&self) -> Value {
        let t = &self.groebner.trace;
        json!({
            "robustness_bound": t.robustness_bound,
            "pairs_processed": t.pairs_processed,
            "max_degree_reached": t.max_degree_reached,
            "elements_accepted": t.elements_accepted,
        })
    }

    /// Series coefficients in degrees `0..terms`, from the rational function
    /// when known and from the truncated counts otherwise.
    pub fn terms(&self, terms: usize) -> Vec<String> {
        match &self.hs {
            Some(hs) if terms > 0 => hs.expand(terms - 1).iter().map(|v| v.to_string()).collect(),
            Some(_) => Vec::new(),
            None => self.truncated_hilbert.iter().take(terms).map(|v| v.to_string()).collect(),
        }
    }

    pub fn analyze_json(&self) -> Value {
        let diagnostics = self.diagnostics.as_ref().map_or(Value::Null, |d| {
            json!({
                "model": "monomial",
                "kernel": numbers(d.kernel_hs.coeffs()),
                "cokernel": { "numerator": numbers(d.cokernel_hs.0.coeffs()), "pole_power": d.cokernel_hs.1 },
                "stabilization_bound": d.stabilization_bound,
                "window": d.window,
            })
        });
        json!({
            "command": "analyze",
            "name": self.name,
            "kind": self.kind,
            "p": self.initial.ctx().p(),
            "n": self.initial.ctx().n(),
            "status": self.groebner.status.to_string(),
            "cap": self.cap,
            "basis": self.basis(),
            "initial": initial_words(&self.initial),
            "hs": self.hs.as_ref().map_or(Value::Null, series_json),
            "truncated_hilbert": numbers(&self.truncated_hilbert),
            "delta": self.delta,
            "multiplicity": self.multiplicity.as_ref().map(|e| e.to_string()),
            "holonomic": verdict_json(self.holonomic),
            "great": self.great.map_or(Value::Null, verdict_json),
            "diagnostics": diagnostics,
            "trace": self.trace_json(),
        })
    }

    pub fn analyze_text(&self) -> String {
        let ctx = self.initial.ctx();
        let mut out = vec![
            format!("{} {} over p={} n={}", self.kind, self.name, ctx.p(), ctx.n()),
            format!("status: {}", self.groebner.status),
            "basis:".to_string(),
        ];
        out.extend(self.basis().iter().map(|g| format!("  {g}")));
        out.push(format!("initial: ({})", initial_words(&self.initial).join(", ")));
        match &self.hs {
            Some(hs) => {
                out.push(format!("hilbert series: {hs}"));
                out.push(format!("first terms: {}", join(&self.terms(10))));
            }
            None => out.push(format!("hilbert series: unknown; counts below the cap: {}", join(&self.truncated_hilbert))),
        }
        let or_unknown = |v: Option<String>| v.unwrap_or_else(|| "unknown".into());
        out.push(format!("bernstein dimension: {}", or_unknown(self.delta.map(|d| d.to_string()))));
        out.push(format!("multiplicity: {}", or_unknown(self.multiplicity.as_ref().map(|e| e.to_string()))));
        out.push(format!("holonomic: {}", self.holonomic));
        if let Some(great) = self.great {
            out.push(format!("great: {great}"));
        }
        if let Some(d) = &self.diagnostics {
            out.push(format!(
                "monomial model: kernel {}; cokernel ({}) / (1 - t)^{}",
                d.kernel_hs, d.cokernel_hs.0, d.cokernel_hs.1
            ));
        }
        out.join("\n")
    }

    pub fn gb_json(&self) -> Value {
        json!({
            "command": "gb",
            "name": self.name,
            "kind": self.kind,
            "status": self.groebner.status.to_string(),
            "cap": self.cap,
            "basis": self.basis(),
            "initial": initial_words(&self.initial),
            "trace": self.trace_json(),
        })
    }

    pub fn gb_text(&self) -> String {
        let mut out = vec![format!("status: {}", self.groebner.status)];
        out.extend(self.basis());
        out.push(format!("initial: ({})", initial_words(&self.initial).join(", ")));
        out.join("\n")
    }

    pub fn hilbert_json(&self, terms: usize) -> Value {
        json!({
            "command": "hilbert",
            "name": self.name,
            "status": self.groebner.status.to_string(),
            "hs": self.hs.as_ref().map_or(Value::Null, series_json),
            "terms": numbers(&self.terms(terms)),
        })
    }

    pub fn hilbert_text(&self, terms: usize) -> String {
        match &self.hs {
            Some(hs) => format!("{hs}\n{}", join(&self.terms(terms))),
            None => format!("unknown (run truncated at {})\n{}", self.cap, join(&self.terms(terms))),
        }
    }
}

/// The series `1 / ((1-t)^n g_{p,n})` of the ring of operators itself.
pub fn ring_series(ctx: frobenius_core::RingContext, terms: usize) -> (HilbertRational, Vec<String>) {
    let hs = HilbertRational::of_free_algebra(ctx);
    let values = if terms == 0 { Vec::new() } else { hs.expand(terms - 1).iter().map(|v| v.to_string()).collect() };
    (hs, values)
}

pub fn ring_hs_json(hs: &HilbertRational, values: &[String]) -> Value {
    json!({
        "command": "ring-hs",
        "p": hs.ctx.p(),
        "n": hs.ctx.n(),
        "hs": series_json(hs),
        "terms": numbers(values),
    })
}

pub fn ring_hs_text(values: &[String]) -> String {
    join(values)
}

/// Enumerated monomial counts against the series and the recurrence it implies.
#[derive(Clone, Debug)]
pub struct DeCheck {
    pub ctx: frobenius_core::RingContext,
    pub enumerated: Vec<usize>,
    pub series: Vec<String>,
    pub agree: bool,
    pub recurrence: bool,
}

pub fn verify_de(ctx: frobenius_core::RingContext, degree: u32) -> DeCheck {
    use num_bigint::BigInt;
    let enumerated: Vec<usize> =
        (0..=degree).map(|d| frobenius_core::FrobMonomial::all_of_degree(ctx, d).len()).collect();
    let hs = HilbertRational::of_free_algebra(ctx);
    let series = hs.expand(degree as usize);
    let counts: Vec<BigInt> = enumerated.iter().map(|&c| BigInt::from(c)).collect();
    let agree = counts == series;
    let recurrence = frobenius_core::verify_recurrence(&counts, &hs.denominator(), 1);
    DeCheck { ctx, enumerated, series: series.iter().map(|v| v.to_string()).collect(), agree, recurrence }
}

impl DeCheck {
    pub fn passed(&self) -> bool {
        self.agree && self.recurrence
    }

    pub fn json(&self) -> Value {
        json!({
            "command": "verify-de",
            "p": self.ctx.p(),
            "n": self.ctx.n(),
            "degree": self.enumerated.len() - 1,
            "enumerated": self.enumerated,
            "series": numbers(&self.series),
            "agree": self.agree,
            "recurrence": self.recurrence,
        })
    }

    pub fn text(&self) -> String {
        let denominator: IntPolynomial = HilbertRational::of_free_algebra(self.ctx).denominator();
        let mut out = vec![format!("degree  enumerated  series")];
        for (d, (e, s)) in self.enumerated.iter().zip(&self.series).enumerate() {
            out.push(format!("{d:>6}  {e:>10}  {s:>6}"));
        }
        out.push(format!("series agrees with enumeration: {}", if self.agree { "yes" } else { "NO" }));
        out.push(format!("({denominator})·HS vanishes from degree 1: {}", if self.recurrence { "yes" } else { "NO" }));
        out.join("\n")
    }
}

pub fn count_json(ctx: frobenius_core::RingContext, name: Option<&str>, degree: i64, count: &num_bigint::BigUint) -> Value {
    json!({
        "command": "count",
        "p": ctx.p(),
        "n": ctx.n(),
        "name": name,
        "degree": degree,
        "count": number(count),
    })
}
