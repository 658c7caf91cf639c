//! Text grammar for rings, elements, polynomials, sequences and matrices.
//!
//! Expressions use `+ - * / ^` and parentheses with precedence
//! `^` > `*`,`/` > unary `-` > binary `+`,`-`. Inside a product the
//! variable `x` may only be followed by further powers of `x`, so
//! coefficients are always written on the left: `(1+i)*x^2`, `w*x`.

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::dlinalg::DMatrix;
use crate::error::{Error, Result};
use crate::rings::{make_ctx_seeded, DeltaSpec, Elem, RingCtx, RingKind, SigmaSpec, DEFAULT_SEED};
use crate::skewpoly::SkewPoly;

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Num(BigInt),
    Ident(String),
    Sym(char),
    End,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    pos: usize,
}

fn perr(pos: usize, expected: &str) -> Error {
    Error::Parse {
        pos,
        expected: expected.to_string(),
    }
}

fn lex(src: &str, base: usize) -> Result<Vec<Token>> {
    let bytes = src.as_bytes();
    let mut out = Vec::new();
    let mut i = 0;
    while i < bytes.len() {
        let c = bytes[i];
        if c.is_ascii_whitespace() {
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < bytes.len() && bytes[i].is_ascii_digit() {
                i += 1;
            }
            let n: BigInt = src[start..i].parse().expect("digits");
            out.push(Token {
                tok: Tok::Num(n),
                pos: base + start,
            });
        } else if c.is_ascii_alphabetic() || c == b'_' {
            let start = i;
            while i < bytes.len() && (bytes[i].is_ascii_alphanumeric() || bytes[i] == b'_') {
                i += 1;
            }
            out.push(Token {
                tok: Tok::Ident(src[start..i].to_string()),
                pos: base + start,
            });
        } else if b"+-*/^(),".contains(&c) {
            out.push(Token {
                tok: Tok::Sym(c as char),
                pos: base + i,
            });
            i += 1;
        } else {
            return Err(perr(base + i, "operator, number, name or parenthesis"));
        }
    }
    out.push(Token {
        tok: Tok::End,
        pos: base + src.len(),
    });
    Ok(out)
}

#[derive(Debug)]
enum Expr {
    Num(BigInt, usize),
    Name(String, usize),
    Neg(Box<Expr>),
    Add(Box<Expr>, Box<Expr>),
    Sub(Box<Expr>, Box<Expr>),
    Mul(Box<Expr>, Box<Expr>),
    Div(Box<Expr>, Box<Expr>),
    Pow(Box<Expr>, u64),
}

impl Expr {
    fn pos(&self) -> usize {
        match self {
            Expr::Num(_, p) | Expr::Name(_, p) => *p,
            Expr::Neg(e) | Expr::Pow(e, _) => e.pos(),
            Expr::Add(a, _) | Expr::Sub(a, _) | Expr::Mul(a, _) | Expr::Div(a, _) => a.pos(),
        }
    }
}

struct Parser {
    toks: Vec<Token>,
    at: usize,
}

impl Parser {
    fn peek(&self) -> &Token {
        &self.toks[self.at]
    }

    fn bump(&mut self) -> Token {
        let t = self.toks[self.at].clone();
        if self.at + 1 < self.toks.len() {
            self.at += 1;
        }
        t
    }

    fn eat(&mut self, c: char) -> bool {
        if self.peek().tok == Tok::Sym(c) {
            self.bump();
            true
        } else {
            false
        }
    }

    fn expr(&mut self) -> Result<Expr> {
        let mut lhs = self.unary()?;
        loop {
            if self.eat('+') {
                lhs = Expr::Add(Box::new(lhs), Box::new(self.unary()?));
            } else if self.eat('-') {
                lhs = Expr::Sub(Box::new(lhs), Box::new(self.unary()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn unary(&mut self) -> Result<Expr> {
        if self.eat('-') {
            return Ok(Expr::Neg(Box::new(self.unary()?)));
        }
        self.product()
    }

    fn product(&mut self) -> Result<Expr> {
        let mut lhs = self.power()?;
        loop {
            if self.eat('*') {
                lhs = Expr::Mul(Box::new(lhs), Box::new(self.power()?));
            } else if self.eat('/') {
                lhs = Expr::Div(Box::new(lhs), Box::new(self.power()?));
            } else {
                return Ok(lhs);
            }
        }
    }

    fn power(&mut self) -> Result<Expr> {
        let base = self.atom()?;
        if self.eat('^') {
            let t = self.bump();
            return match t.tok {
                Tok::Num(n) => {
                    let k = n
                        .to_u64()
                        .ok_or_else(|| perr(t.pos, "exponent below 2^64"))?;
                    Ok(Expr::Pow(Box::new(base), k))
                }
                _ => Err(perr(t.pos, "non-negative integer exponent")),
            };
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Expr> {
        let t = self.bump();
        match t.tok {
            Tok::Num(n) => Ok(Expr::Num(n, t.pos)),
            Tok::Ident(s) => Ok(Expr::Name(s, t.pos)),
            Tok::Sym('(') => {
                let e = self.expr()?;
                if !self.eat(')') {
                    return Err(perr(self.peek().pos, "')'"));
                }
                Ok(e)
            }
            _ => Err(perr(t.pos, "number, name or '('")),
        }
    }
}

fn parse_expr(src: &str, base: usize) -> Result<Expr> {
    let mut p = Parser {
        toks: lex(src, base)?,
        at: 0,
    };
    let e = p.expr()?;
    let t = p.peek();
    if t.tok != Tok::End {
        return Err(perr(t.pos, "operator or end of input"));
    }
    Ok(e)
}

/// A named constant of the ring (generator, variable or quaternion unit).
fn ring_atom(ctx: &RingCtx, name: &str) -> Option<Elem> {
    match ctx.kind() {
        RingKind::FiniteField { gen, .. } if name == gen => Some(ctx.generator()),
        RingKind::FuncField { var, .. } if name == var => Some(ctx.generator()),
        RingKind::GaussianRational if name == "i" => Some(ctx.generator()),
        RingKind::RatQuaternion => match name {
            "i" => ctx.quat_unit(1),
            "j" => ctx.quat_unit(2),
            "k" => ctx.quat_unit(3),
            _ => None,
        },
        RingKind::FiniteExtension { gen, var, .. } => {
            if name == var {
                Some(ctx.generator())
            } else if name == gen {
                let base = ctx.gf_base_generator()?;
                ctx.ext_elem(&[base])
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Value of a subexpression, remembering whether `x` occurs in it.
struct Val {
    poly: SkewPoly,
    has_x: bool,
}

fn eval(ctx: &RingCtx, e: &Expr, allow_x: bool) -> Result<Val> {
    let konst = |a: Elem| Val {
        poly: SkewPoly::constant(ctx, a),
        has_x: false,
    };
    Ok(match e {
        Expr::Num(n, _) => konst(ctx.from_bigint(n)),
        Expr::Name(s, pos) => {
            if s == "x" {
                if !allow_x {
                    return Err(perr(*pos, "ring element (x is not allowed here)"));
                }
                Val {
                    poly: SkewPoly::x(ctx),
                    has_x: true,
                }
            } else {
                match ring_atom(ctx, s) {
                    Some(a) => konst(a),
                    None => return Err(perr(*pos, &format!("a name of ring {}", ctx.kind()))),
                }
            }
        }
        Expr::Neg(a) => {
            let v = eval(ctx, a, allow_x)?;
            Val {
                poly: v.poly.neg(),
                has_x: v.has_x,
            }
        }
        Expr::Add(a, b) | Expr::Sub(a, b) => {
            let (va, vb) = (eval(ctx, a, allow_x)?, eval(ctx, b, allow_x)?);
            let poly = if matches!(e, Expr::Add(..)) {
                va.poly.add_unchecked(&vb.poly)
            } else {
                va.poly.sub_unchecked(&vb.poly)
            };
            Val {
                poly,
                has_x: va.has_x || vb.has_x,
            }
        }
        Expr::Mul(a, b) => {
            let (va, vb) = (eval(ctx, a, allow_x)?, eval(ctx, b, allow_x)?);
            if va.has_x && !vb.has_x {
                return Err(perr(b.pos(), "a power of x (coefficients go left of x)"));
            }
            Val {
                poly: va.poly.mul_unchecked(&vb.poly),
                has_x: va.has_x || vb.has_x,
            }
        }
        Expr::Div(a, b) => {
            let (va, vb) = (eval(ctx, a, allow_x)?, eval(ctx, b, allow_x)?);
            if va.has_x || vb.has_x {
                return Err(perr(b.pos(), "a constant division (x cannot be divided)"));
            }
            let d = vb.poly.coeff(0);
            let inv = ctx
                .inv(&d)
                .map_err(|_| perr(b.pos(), "a nonzero divisor"))?;
            konst(ctx.mul(&va.poly.coeff(0), &inv))
        }
        Expr::Pow(a, k) => {
            let va = eval(ctx, a, allow_x)?;
            let mut acc = SkewPoly::one(ctx);
            for _ in 0..*k {
                acc = acc.mul_unchecked(&va.poly);
            }
            Val {
                poly: acc,
                has_x: va.has_x && *k > 0,
            }
        }
    })
}

/// Parses an element literal such as `w^2+1`, `(3/2)+i`, `1+j-2*k`, `(t^2+1)/t`.
pub fn parse_elem(ctx: &RingCtx, src: &str) -> Result<Elem> {
    parse_elem_at(ctx, src, 0)
}

fn parse_elem_at(ctx: &RingCtx, src: &str, base: usize) -> Result<Elem> {
    let e = parse_expr(src, base)?;
    Ok(eval(ctx, &e, false)?.poly.coeff(0))
}

/// Parses a polynomial such as `x^4 + k*x^3 - j*x - i`.
pub fn parse_poly(ctx: &RingCtx, src: &str) -> Result<SkewPoly> {
    let e = parse_expr(src, 0)?;
    Ok(eval(ctx, &e, true)?.poly)
}

/// Splits on commas that are not inside parentheses, keeping byte offsets.
fn split_top(src: &str, sep: char) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in src.char_indices() {
        match ch {
            '(' | '[' => depth += 1,
            ')' | ']' => depth -= 1,
            c if c == sep && depth == 0 => {
                out.push((start, &src[start..i]));
                start = i + ch.len_utf8();
            }
            _ => {}
        }
    }
    out.push((start, &src[start..]));
    out
}

/// Parses a comma-separated list of elements, e.g. `1+j,1+j`.
pub fn parse_seq(ctx: &RingCtx, src: &str) -> Result<Vec<Elem>> {
    split_top(src, ',')
        .into_iter()
        .map(|(off, s)| parse_elem_at(ctx, s, off))
        .collect()
}

/// Parses a matrix as `a,b;c,d` rows or as a JSON array of arrays.
pub fn parse_matrix(ctx: &RingCtx, src: &str) -> Result<DMatrix> {
    let trimmed = src.trim();
    let rows: Vec<Vec<Elem>> = if trimmed.starts_with('[') {
        let v: serde_json::Value = serde_json::from_str(trimmed)
            .map_err(|e| perr(e.column().saturating_sub(1), "a JSON array of arrays"))?;
        let rows = v
            .as_array()
            .ok_or_else(|| perr(0, "a JSON array of arrays"))?;
        rows.iter()
            .map(|r| {
                let r = r
                    .as_array()
                    .ok_or_else(|| perr(0, "a JSON array per row"))?;
                r.iter()
                    .map(|x| match x {
                        serde_json::Value::String(s) => parse_elem(ctx, s),
                        serde_json::Value::Number(n) => parse_elem(ctx, &n.to_string()),
                        _ => Err(perr(0, "a string or number entry")),
                    })
                    .collect()
            })
            .collect::<Result<_>>()?
    } else {
        split_top(src, ';')
            .into_iter()
            .map(|(roff, row)| {
                split_top(row, ',')
                    .into_iter()
                    .map(|(off, s)| parse_elem_at(ctx, s, roff + off))
                    .collect()
            })
            .collect::<Result<_>>()?
    };
    DMatrix::from_rows(ctx, rows)
}

fn expect_call<'a>(src: &'a str, name: &str) -> Option<&'a str> {
    let s = src.trim();
    let rest = s.strip_prefix(name)?.trim_start();
    rest.strip_prefix('(')?.strip_suffix(')')
}

fn parse_u32(s: &str, pos: usize, what: &str) -> Result<u32> {
    s.trim().parse().map_err(|_| perr(pos, what))
}

/// Parses `gf(p^m)`, `gf(q)`, `ff(p,t)`, `gauss` or `quat`.
pub fn parse_ring_kind(src: &str) -> Result<RingKind> {
    let s = src.trim();
    if s == "gauss" {
        return Ok(RingKind::GaussianRational);
    }
    if s == "quat" {
        return Ok(RingKind::RatQuaternion);
    }
    if let Some(inner) = expect_call(s, "gf") {
        let pos = s.find('(').unwrap() + 1;
        if let Some((p, m)) = inner.split_once('^') {
            let p = parse_u32(p, pos, "prime")?;
            let m = parse_u32(m, pos, "extension degree")?;
            return Ok(RingKind::finite_field(p, m));
        }
        let q = parse_u32(inner, pos, "prime power")?;
        return prime_power(q)
            .map(|(p, m)| RingKind::finite_field(p, m))
            .ok_or_else(|| perr(pos, "prime power"));
    }
    if let Some(inner) = expect_call(s, "ff") {
        let pos = s.find('(').unwrap() + 1;
        let (p, var) = match inner.split_once(',') {
            Some((p, v)) => (p, v.trim()),
            None => (inner, "t"),
        };
        if var.is_empty() || !var.chars().all(|c| c.is_ascii_alphabetic()) || var == "x" {
            return Err(perr(pos, "variable name"));
        }
        let p = parse_u32(p, pos, "prime")?;
        return Ok(RingKind::FuncField {
            p,
            var: var.to_string(),
        });
    }
    Err(perr(0, "gf(p^m), gf(q), ff(p,t), gauss or quat"))
}

fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let p = (2..=q).find(|d| q % d == 0)?;
    let (mut r, mut m) = (q, 0);
    while r % p == 0 {
        r /= p;
        m += 1;
    }
    (r == 1).then_some((p, m))
}

/// A context with trivial maps, used to read σ/δ parameters.
fn probe(kind: &RingKind) -> Result<RingCtx> {
    make_ctx_seeded(
        kind.clone(),
        SigmaSpec::Identity,
        DeltaSpec::Zero,
        true,
        DEFAULT_SEED,
    )
}

pub fn parse_sigma(kind: &RingKind, src: &str) -> Result<SigmaSpec> {
    let s = src.trim();
    match s {
        "id" => return Ok(SigmaSpec::Identity),
        "conj" => return Ok(SigmaSpec::ComplexConj),
        "frob" => return Ok(SigmaSpec::Frobenius(1)),
        _ => {}
    }
    if let Some(j) = s.strip_prefix("frob^") {
        return Ok(SigmaSpec::Frobenius(parse_u32(j, 5, "Frobenius power")?));
    }
    if let Some(inner) = expect_call(s, "inner") {
        let off = s.find('(').unwrap() + 1;
        return Ok(SigmaSpec::Inner(parse_elem_at(&probe(kind)?, inner, off)?));
    }
    Err(perr(0, "id, frob^j, conj or inner(<elem>)"))
}

pub fn parse_delta(kind: &RingKind, src: &str) -> Result<DeltaSpec> {
    let s = src.trim();
    match s {
        "zero" | "0" => return Ok(DeltaSpec::Zero),
        "ddt" => return Ok(DeltaSpec::FormalDeriv),
        _ => {}
    }
    if let Some(inner) = expect_call(s, "inner") {
        let off = s.find('(').unwrap() + 1;
        return Ok(DeltaSpec::InnerL(parse_elem_at(&probe(kind)?, inner, off)?));
    }
    Err(perr(0, "zero, inner(<elem>) or ddt"))
}

/// Parses the three ring descriptors and builds the context.
pub fn parse_ring(
    ring: &str,
    sigma: &str,
    delta: &str,
    unchecked: bool,
    seed: u64,
) -> Result<RingCtx> {
    let kind = parse_ring_kind(ring)?;
    let s = parse_sigma(&kind, sigma)?;
    let d = parse_delta(&kind, delta)?;
    make_ctx_seeded(kind, s, d, unchecked, seed)
}
