//! The session language: `ring`, `ideal`, `fmodule` and `option` statements.

use std::fmt;

use frobenius_core::{FPresentation, FreeModule, FrobMonomial, ModuleVector, OperatorPoly, RingContext, Semantics};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}, column {}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(String),
    Sym(char),
    Eof,
}

#[derive(Clone, Debug)]
struct Token {
    tok: Tok,
    line: usize,
    column: usize,
}

fn lex(text: &str) -> Result<Vec<Token>, ParseError> {
    let mut out = Vec::new();
    let chars: Vec<char> = text.chars().collect();
    let (mut i, mut line, mut column) = (0, 1, 1);
    while i < chars.len() {
        let c = chars[i];
        let start = (line, column);
        let take = |i: &mut usize, column: &mut usize, pred: &dyn Fn(char) -> bool| {
            let from = *i;
            while *i < chars.len() && pred(chars[*i]) {
                *i += 1;
                *column += 1;
            }
            chars[from..*i].iter().collect::<String>()
        };
        let tok = if c == '\n' {
            i += 1;
            line += 1;
            column = 1;
            continue;
        } else if c.is_whitespace() {
            i += 1;
            column += 1;
            continue;
        } else if c == '#' || (c == '/' && chars.get(i + 1) == Some(&'/')) {
            while i < chars.len() && chars[i] != '\n' {
                i += 1;
            }
            continue;
        } else if c.is_ascii_alphabetic() || c == '_' {
            Tok::Ident(take(&mut i, &mut column, &|c| c.is_ascii_alphanumeric() || c == '_'))
        } else if c.is_ascii_digit() {
            Tok::Int(take(&mut i, &mut column, &|c| c.is_ascii_digit()))
        } else if ";=()[],+-*^".contains(c) {
            i += 1;
            column += 1;
            Tok::Sym(c)
        } else {
            return Err(ParseError { line, column, message: format!("unexpected character '{c}'") });
        };
        out.push(Token { tok, line: start.0, column: start.1 });
    }
    out.push(Token { tok: Tok::Eof, line, column });
    Ok(out)
}

/// Options set inside a session with `option name = value;`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SessionOptions {
    pub cap: Option<u32>,
    pub terms: Option<usize>,
    pub json: Option<bool>,
    pub allow_truncated: Option<bool>,
}

#[derive(Clone, Debug, Default)]
pub struct Session {
    pub ctx: Option<RingContext>,
    pub ideals: Vec<(String, Vec<OperatorPoly>)>,
    pub fmodules: Vec<(String, FPresentation)>,
    pub options: SessionOptions,
}

impl Session {
    pub fn ideal(&self, name: &str) -> Option<&[OperatorPoly]> {
        self.ideals.iter().find(|(n, _)| n == name).map(|(_, g)| g.as_slice())
    }

    pub fn fmodule(&self, name: &str) -> Option<&FPresentation> {
        self.fmodules.iter().find(|(n, _)| n == name).map(|(_, m)| m)
    }

    pub fn names(&self) -> Vec<&str> {
        self.ideals.iter().map(|(n, _)| n.as_str()).chain(self.fmodules.iter().map(|(n, _)| n.as_str())).collect()
    }
}

struct Parser {
    toks: Vec<Token>,
    i: usize,
    ctx: Option<RingContext>,
}

type PResult<T> = Result<T, ParseError>;

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.i]
    }

    fn next(&mut self) -> Token {
        let t = self.toks[self.i].clone();
        if t.tok != Tok::Eof {
            self.i += 1;
        }
        t
    }

    fn error_at<T>(&self, t: &Token, message: impl Into<String>) -> PResult<T> {
        Err(ParseError { line: t.line, column: t.column, message: message.into() })
    }

    fn describe(t: &Tok) -> String {
        match t {
            Tok::Ident(s) => format!("'{s}'"),
            Tok::Int(s) => format!("'{s}'"),
            Tok::Sym(c) => format!("'{c}'"),
            Tok::Eof => "end of input".into(),
        }
    }

    fn expect_sym(&mut self, c: char) -> PResult<()> {
        let t = self.next();
        if t.tok == Tok::Sym(c) {
            Ok(())
        } else {
            self.error_at(&t, format!("expected '{c}', found {}", Self::describe(&t.tok)))
        }
    }

    fn at_sym(&self, c: char) -> bool {
        self.peek().tok == Tok::Sym(c)
    }

    fn expect_keyword(&mut self, word: &str) -> PResult<()> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) if s == word => Ok(()),
            other => self.error_at(&t, format!("expected '{word}', found {}", Self::describe(other))),
        }
    }

    fn ident(&mut self, what: &str) -> PResult<(String, Token)> {
        let t = self.next();
        match &t.tok {
            Tok::Ident(s) => Ok((s.clone(), t.clone())),
            other => self.error_at(&t, format!("expected {what}, found {}", Self::describe(other))),
        }
    }

    fn int<T: std::str::FromStr>(&mut self, what: &str) -> PResult<T> {
        let t = self.next();
        match &t.tok {
            Tok::Int(s) => match s.parse() {
                Ok(v) => Ok(v),
                Err(_) => self.error_at(&t, format!("{what} {s} is out of range")),
            },
            other => self.error_at(&t, format!("expected {what}, found {}", Self::describe(other))),
        }
    }

    fn signed_int(&mut self, what: &str) -> PResult<i64> {
        let negative = self.at_sym('-');
        if negative {
            self.next();
        }
        let v: i64 = self.int(what)?;
        Ok(if negative { -v } else { v })
    }

    fn require_ring(&self, t: &Token) -> PResult<RingContext> {
        match self.ctx {
            Some(c) => Ok(c),
            None => self.error_at(t, "a ring declaration must come first"),
        }
    }

    fn session(&mut self) -> PResult<Session> {
        let mut session = Session::default();
        loop {
            let t = self.next();
            let word = match &t.tok {
                Tok::Eof => break,
                Tok::Ident(s) => s.clone(),
                other => return self.error_at(&t, format!("expected a statement, found {}", Self::describe(other))),
            };
            match word.as_str() {
                "ring" => {
                    if self.ctx.is_some() {
                        return self.error_at(&t, "the ring is already declared");
                    }
                    self.expect_keyword("p")?;
                    self.expect_sym('=')?;
                    let p_tok = self.peek().clone();
                    let p: u64 = self.int("a prime")?;
                    self.expect_keyword("n")?;
                    self.expect_sym('=')?;
                    let n: usize = self.int("a variable count")?;
                    self.expect_sym(';')?;
                    match RingContext::new(p, n) {
                        Ok(ctx) => self.ctx = Some(ctx),
                        Err(e) => return self.error_at(&p_tok, e.to_string()),
                    }
                    session.ctx = self.ctx;
                }
                "ideal" => {
                    let ctx = self.require_ring(&t)?;
                    let (name, name_tok) = self.ident("an ideal name")?;
                    if session.names().contains(&name.as_str()) {
                        return self.error_at(&name_tok, format!("'{name}' is already defined"));
                    }
                    self.expect_sym('=')?;
                    self.expect_sym('(')?;
                    let mut gens = Vec::new();
                    if !self.at_sym(')') {
                        gens.push(self.poly(ctx, Semantics::Truncating)?);
                        while self.at_sym(',') {
                            self.next();
                            gens.push(self.poly(ctx, Semantics::Truncating)?);
                        }
                    }
                    self.expect_sym(')')?;
                    self.expect_sym(';')?;
                    session.ideals.push((name, gens));
                }
                "fmodule" => {
                    let ctx = self.require_ring(&t)?;
                    let (name, name_tok) = self.ident("a module name")?;
                    if session.names().contains(&name.as_str()) {
                        return self.error_at(&name_tok, format!("'{name}' is already defined"));
                    }
                    self.expect_keyword("gens")?;
                    let rank_tok = self.peek().clone();
                    let rank: usize = self.int("a generator count")?;
                    if rank == 0 {
                        return self.error_at(&rank_tok, "an fmodule needs at least one generator");
                    }
                    let mut shifts = vec![0; rank];
                    if self.peek().tok == Tok::Ident("shifts".into()) {
                        self.next();
                        self.expect_sym('(')?;
                        let list_tok = self.peek().clone();
                        let mut given = vec![self.signed_int("a shift")?];
                        while self.at_sym(',') {
                            self.next();
                            given.push(self.signed_int("a shift")?);
                        }
                        self.expect_sym(')')?;
                        if given.len() != rank {
                            return self.error_at(&list_tok, format!("{} shifts for {rank} generators", given.len()));
                        }
                        if let Some(s) = given.iter().find(|&&s| s < 0) {
                            return self.error_at(&list_tok, format!("shift {s} is negative; shifts must be natural numbers"));
                        }
                        shifts = given;
                    }
                    self.expect_keyword("relations")?;
                    self.expect_sym('(')?;
                    let shape = FreeModule::new(ctx, shifts.clone()).expect("rank is positive");
                    let mut relations = Vec::new();
                    if !self.at_sym(')') {
                        relations.push(self.vector(ctx, &shape)?);
                        while self.at_sym(',') {
                            self.next();
                            relations.push(self.vector(ctx, &shape)?);
                        }
                    }
                    self.expect_sym(')')?;
                    self.expect_sym(';')?;
                    let pres = FPresentation::new(ctx, shifts, relations).expect("relations are built in the module");
                    session.fmodules.push((name, pres));
                }
                "option" => {
                    let (name, name_tok) = self.ident("an option name")?;
                    self.expect_sym('=')?;
                    let value = self.next();
                    let text = match &value.tok {
                        Tok::Ident(s) | Tok::Int(s) => s.clone(),
                        other => return self.error_at(&value, format!("expected an option value, found {}", Self::describe(other))),
                    };
                    let bad = format!("invalid value '{text}' for option {name}");
                    let flag = |on: &str, off: &str| match text.as_str() {
                        t if t == on => Some(true),
                        t if t == off => Some(false),
                        _ => None,
                    };
                    let parsed = match name.as_str() {
                        "cap" => text.parse().ok().map(|v| session.options.cap = Some(v)),
                        "terms" => text.parse().ok().map(|v| session.options.terms = Some(v)),
                        "format" => flag("json", "text").map(|v| session.options.json = Some(v)),
                        "allow_truncated" => flag("true", "false").map(|v| session.options.allow_truncated = Some(v)),
                        _ => return self.error_at(&name_tok, format!("unknown option '{name}'")),
                    };
                    if parsed.is_none() {
                        return self.error_at(&value, bad);
                    }
                    self.expect_sym(';')?;
                }
                _ => return self.error_at(&t, format!("expected ring, ideal, fmodule or option, found '{word}'")),
            }
        }
        Ok(session)
    }

    fn vector(&mut self, ctx: RingContext, shape: &std::sync::Arc<FreeModule>) -> PResult<ModuleVector> {
        let open = self.peek().clone();
        self.expect_sym('[')?;
        let mut comps = vec![self.poly(ctx, Semantics::Carrying)?];
        while self.at_sym(',') {
            self.next();
            comps.push(self.poly(ctx, Semantics::Carrying)?);
        }
        self.expect_sym(']')?;
        if comps.len() != shape.rank() {
            return self.error_at(&open, format!("relation has {} entries but the module has {} generators", comps.len(), shape.rank()));
        }
        Ok(ModuleVector::from_components(shape.clone(), &comps).expect("components share the ring"))
    }

    fn poly(&mut self, ctx: RingContext, sem: Semantics) -> PResult<OperatorPoly> {
        let mut negate = false;
        if self.at_sym('-') || self.at_sym('+') {
            negate = self.next().tok == Tok::Sym('-');
        }
        let first = self.term(ctx, sem)?;
        let mut acc = if negate { first.neg() } else { first };
        while self.at_sym('+') || self.at_sym('-') {
            let minus = self.next().tok == Tok::Sym('-');
            let t = self.term(ctx, sem)?;
            acc = if minus { acc.sub(&t) } else { acc.add(&t) }.expect("same ring");
        }
        Ok(acc)
    }

    fn starts_factor(&self) -> bool {
        matches!(self.peek().tok, Tok::Ident(_) | Tok::Int(_) | Tok::Sym('('))
    }

    fn term(&mut self, ctx: RingContext, sem: Semantics) -> PResult<OperatorPoly> {
        let mut acc = OperatorPoly::one(ctx, sem);
        let mut first = true;
        loop {
            if !first {
                if self.at_sym('*') {
                    self.next();
                } else if !self.starts_factor() {
                    break;
                }
            }
            first = false;
            let mut factors = self.factor(ctx, sem)?;
            if self.at_sym('^') {
                self.next();
                let exp_tok = self.peek().clone();
                let e: u32 = self.int("an exponent")?;
                if e > 10_000 {
                    return self.error_at(&exp_tok, "exponent is too large");
                }
                let last = factors.pop().expect("factors are nonempty");
                factors.push(power(&last, e));
            }
            for f in &factors {
                acc = acc.mul(f).expect("same ring");
            }
        }
        Ok(acc)
    }

    /// One factor, or several when an identifier juxtaposes letters (`xfx`).
    fn factor(&mut self, ctx: RingContext, sem: Semantics) -> PResult<Vec<OperatorPoly>> {
        let t = self.next();
        match &t.tok {
            Tok::Int(s) => Ok(vec![OperatorPoly::one(ctx, sem).scale(reduce_decimal(s, ctx.p()) as i64)]),
            Tok::Sym('(') => {
                let inner = self.poly(ctx, sem)?;
                self.expect_sym(')')?;
                Ok(vec![inner])
            }
            Tok::Ident(word) => letters(word, ctx, sem).map_err(|(offset, message)| ParseError {
                line: t.line,
                column: t.column + offset,
                message,
            }),
            other => self.error_at(&t, format!("expected a factor, found {}", Self::describe(other))),
        }
    }
}

fn power(g: &OperatorPoly, e: u32) -> OperatorPoly {
    (0..e).fold(OperatorPoly::one(g.ctx(), g.semantics()), |acc, _| acc.mul(g).expect("same ring"))
}

fn reduce_decimal(digits: &str, p: u32) -> u32 {
    digits.bytes().fold(0u64, |acc, d| (acc * 10 + (d - b'0') as u64) % p as u64) as u32
}

/// Splits an identifier such as `xfx2y` into variables and Frobenius letters.
fn letters(word: &str, ctx: RingContext, sem: Semantics) -> Result<Vec<OperatorPoly>, (usize, String)> {
    let chars: Vec<char> = word.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let start = i;
        let c = chars[i];
        i += 1;
        let mono = match c {
            'f' | 'F' => {
                if c != sem.f_symbol() {
                    let message = match sem {
                        Semantics::Truncating => "'F' is only allowed in fmodule relations; ideals use 'f'",
                        Semantics::Carrying => "'f' is only allowed in ideals; fmodule relations use 'F'",
                    };
                    return Err((start, message.into()));
                }
                FrobMonomial::frobenius(ctx)
            }
            'x' if i < chars.len() && chars[i].is_ascii_digit() => {
                let from = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let index: String = chars[from..i].iter().collect();
                match index.parse::<usize>() {
                    Ok(k) if (1..=ctx.n()).contains(&k) => FrobMonomial::variable(ctx, k - 1),
                    _ => return Err((start, format!("unknown variable x{index} (the ring has {} variables)", ctx.n()))),
                }
            }
            'x' => FrobMonomial::variable(ctx, 0),
            'y' | 'z' if ctx.n() <= 3 && ((c as usize) - ('x' as usize)) < ctx.n() => {
                FrobMonomial::variable(ctx, (c as usize) - ('x' as usize))
            }
            _ => return Err((start, format!("unknown variable '{c}' in '{word}'"))),
        };
        out.push(OperatorPoly::monomial(mono, 1, sem));
    }
    Ok(out)
}

/// Parses a complete session.
pub fn parse_session(text: &str) -> Result<Session, ParseError> {
    let mut parser = Parser { toks: lex(text)?, i: 0, ctx: None };
    parser.session()
}

/// Parses a single polynomial over the given ring.
pub fn parse_expression(text: &str, ctx: RingContext, sem: Semantics) -> Result<OperatorPoly, ParseError> {
    let mut parser = Parser { toks: lex(text)?, i: 0, ctx: Some(ctx) };
    let g = parser.poly(ctx, sem)?;
    let t = parser.peek().clone();
    if t.tok != Tok::Eof {
        return parser.error_at(&t, format!("unexpected {} after the expression", Parser::describe(&t.tok)));
    }
    Ok(g)
}
