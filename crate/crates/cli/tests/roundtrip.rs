use frobenius_cli::parse_expression;
use frobenius_core::{RingContext, Semantics};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn variable<R: Rng>(rng: &mut R, ctx: RingContext) -> String {
    let i = rng.gen_range(0..ctx.n());
    if ctx.n() <= 3 && rng.gen_bool(0.5) {
        ["x", "y", "z"][i].to_string()
    } else {
        format!("x{}", i + 1)
    }
}

fn factor<R: Rng>(rng: &mut R, ctx: RingContext, sem: Semantics, depth: u32) -> String {
    let base = match rng.gen_range(0..10) {
        0..=4 => variable(rng, ctx),
        5..=7 => sem.f_symbol().to_string(),
        8 if depth < 2 => format!("({})", expression(rng, ctx, sem, depth + 1)),
        _ => rng.gen_range(0..20).to_string(),
    };
    if rng.gen_bool(0.2) {
        format!("{base}^{}", rng.gen_range(0..4))
    } else {
        base
    }
}

fn term<R: Rng>(rng: &mut R, ctx: RingContext, sem: Semantics, depth: u32) -> String {
    let count = rng.gen_range(1..=4);
    let mut out = String::new();
    if rng.gen_bool(0.3) {
        out.push_str(&format!("{}*", rng.gen_range(1..50)));
    }
    for k in 0..count {
        if k > 0 {
            out.push_str(["*", " ", "*"].choose(rng).unwrap());
        }
        out.push_str(&factor(rng, ctx, sem, depth));
    }
    out
}

fn expression<R: Rng>(rng: &mut R, ctx: RingContext, sem: Semantics, depth: u32) -> String {
    let mut out = String::new();
    if rng.gen_bool(0.2) {
        out.push('-');
    }
    for k in 0..rng.gen_range(1..=4) {
        if k > 0 {
            out.push_str([" + ", " - ", "+", "-"].choose(rng).unwrap());
        }
        out.push_str(&term(rng, ctx, sem, depth));
    }
    out
}

#[test]
fn rendered_expressions_reparse_to_the_same_element() {
    let mut rng = ChaCha8Rng::seed_from_u64(0x7217);
    let mut nonzero = 0;
    for _ in 0..1500 {
        let p = *[2u64, 3, 5, 7].choose(&mut rng).unwrap();
        let ctx = RingContext::new(p, rng.gen_range(1..=4)).unwrap();
        let sem = *[Semantics::Truncating, Semantics::Carrying].choose(&mut rng).unwrap();
        let text = expression(&mut rng, ctx, sem, 0);
        let parsed = parse_expression(&text, ctx, sem).unwrap_or_else(|e| panic!("{text}: {e}"));
        let rendered = parsed.to_string();
        let again = parse_expression(&rendered, ctx, sem).unwrap_or_else(|e| panic!("{rendered}: {e}"));
        assert_eq!(again, parsed, "{text} rendered as {rendered}");
        assert_eq!(again.to_string(), rendered);
        nonzero += usize::from(!parsed.is_zero());
    }
    assert!(nonzero > 1000, "only {nonzero} nonzero expressions");
}
