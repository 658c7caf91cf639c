//! Skew polynomials Σ a_i x^i in F[x; σ, δ], where x·a = σ(a)x + δ(a).

mod comp;
mod euclid;
mod eval;
mod right_form;

use std::cmp::Ordering;
use std::fmt;

pub use comp::{comp_c, comp_c_enum, comp_c_table, comp_t, comp_t_enum, comp_t_table, ENUM_LIMIT};
pub use euclid::{gcld, gcrd, lcrm, xgcld, xgcrd, Xgcd};
pub use eval::{conj_left, conj_right, eval_left, eval_right};
pub use right_form::RightForm;

use crate::error::{Error, Result};
use crate::rings::{Elem, RingCtx};

/// Degree of a skew polynomial; the zero polynomial has degree −∞.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Degree {
    NegInf,
    Finite(usize),
}

impl PartialOrd for Degree {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Degree {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Degree::NegInf, Degree::NegInf) => Ordering::Equal,
            (Degree::NegInf, _) => Ordering::Less,
            (_, Degree::NegInf) => Ordering::Greater,
            (Degree::Finite(a), Degree::Finite(b)) => a.cmp(b),
        }
    }
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInf => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// A skew polynomial in left-coefficient form. The coefficient list is
/// always trimmed, so the zero polynomial has no coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct SkewPoly {
    ctx: RingCtx,
    coeffs: Vec<Elem>,
}

impl fmt::Debug for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SkewPoly({})", self)
    }
}

impl SkewPoly {
    /// Builds a polynomial from ascending coefficients, trimming zeros.
    pub fn new(ctx: &RingCtx, coeffs: Vec<Elem>) -> SkewPoly {
        let mut p = SkewPoly {
            ctx: ctx.clone(),
            coeffs,
        };
        p.trim();
        p
    }

    /// Like [`SkewPoly::new`], rejecting coefficients from another ring.
    pub fn try_new(ctx: &RingCtx, coeffs: Vec<Elem>) -> Result<SkewPoly> {
        for c in &coeffs {
            ctx.ensure(c)?;
        }
        Ok(SkewPoly::new(ctx, coeffs))
    }

    pub fn zero(ctx: &RingCtx) -> SkewPoly {
        SkewPoly {
            ctx: ctx.clone(),
            coeffs: Vec::new(),
        }
    }

    pub fn one(ctx: &RingCtx) -> SkewPoly {
        SkewPoly::constant(ctx, ctx.one())
    }

    pub fn constant(ctx: &RingCtx, a: Elem) -> SkewPoly {
        SkewPoly::new(ctx, vec![a])
    }

    /// a·x^k.
    pub fn monomial(ctx: &RingCtx, a: Elem, k: usize) -> SkewPoly {
        let mut c = vec![ctx.zero(); k];
        c.push(a);
        SkewPoly::new(ctx, c)
    }

    pub fn x(ctx: &RingCtx) -> SkewPoly {
        SkewPoly::monomial(ctx, ctx.one(), 1)
    }

    /// x − a.
    pub fn x_minus(ctx: &RingCtx, a: &Elem) -> SkewPoly {
        SkewPoly::new(ctx, vec![ctx.neg(a), ctx.one()])
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| self.ctx.is_zero(c)) {
            self.coeffs.pop();
        }
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<Elem> {
        self.coeffs
    }

    /// Coefficient of x^i (zero past the degree).
    pub fn coeff(&self, i: usize) -> Elem {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(|| self.ctx.zero())
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInf,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as a number, `None` for the zero polynomial.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| self.ctx.is_one(c))
    }

    /// Leading coefficient; `None` for zero.
    pub fn lc(&self) -> Option<&Elem> {
        self.coeffs.last()
    }

    pub(crate) fn same_ctx(&self, other: &SkewPoly) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    pub fn add(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ctx(other)?;
        Ok(self.add_unchecked(other))
    }

    pub(crate) fn add_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let c = (0..n)
            .map(|i| self.ctx.add(&self.coeff(i), &other.coeff(i)))
            .collect();
        SkewPoly::new(&self.ctx, c)
    }

    pub fn sub(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ctx(other)?;
        Ok(self.sub_unchecked(other))
    }

    pub(crate) fn sub_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        self.add_unchecked(&other.neg())
    }

    pub fn neg(&self) -> SkewPoly {
        let c = self.coeffs.iter().map(|a| self.ctx.neg(a)).collect();
        SkewPoly::new(&self.ctx, c)
    }

    /// c·f (constant on the left).
    pub fn scale_left(&self, c: &Elem) -> SkewPoly {
        let v = self.coeffs.iter().map(|a| self.ctx.mul(c, a)).collect();
        SkewPoly::new(&self.ctx, v)
    }

    /// f·x^k.
    pub fn shift(&self, k: usize) -> SkewPoly {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.ctx.zero(); k];
        c.extend(self.coeffs.iter().cloned());
        SkewPoly::new(&self.ctx, c)
    }

    /// x·f, from x·a = σ(a)x + δ(a).
    pub fn x_times(&self) -> SkewPoly {
        let ctx = &self.ctx;
        let n = self.coeffs.len();
        let mut out = vec![ctx.zero(); n + 1];
        for (j, h) in self.coeffs.iter().enumerate() {
            out[j + 1] = ctx.add(&out[j + 1], &ctx.sigma(h));
            out[j] = ctx.add(&out[j], &ctx.delta(h));
        }
        SkewPoly::new(ctx, out)
    }

    /// The product f·g, expanding x^i·b_j through the 𝒞 operators.
    pub fn mul(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ctx(other)?;
        Ok(self.mul_unchecked(other))
    }

    pub(crate) fn mul_unchecked(&self, other: &SkewPoly) -> SkewPoly {
        let ctx = &self.ctx;
        if self.is_zero() || other.is_zero() {
            return SkewPoly::zero(ctx);
        }
        let m = self.coeffs.len() - 1;
        let n = other.coeffs.len() - 1;
        let mut out = vec![ctx.zero(); m + n + 1];
        for (j, b) in other.coeffs.iter().enumerate() {
            if ctx.is_zero(b) {
                continue;
            }
            let table = comp_c_table(ctx, m, m, b);
            for (i, a) in self.coeffs.iter().enumerate() {
                if ctx.is_zero(a) {
                    continue;
                }
                for k in 0..=i {
                    let c = &table[k][i - k];
                    if ctx.is_zero(c) {
                        continue;
                    }
                    let idx = i + j - k;
                    out[idx] = ctx.add(&out[idx], &ctx.mul(a, c));
                }
            }
        }
        SkewPoly::new(ctx, out)
    }

    /// f·g by repeated left multiplication with x; an independent oracle for [`SkewPoly::mul`].
    pub fn mul_by_shifts(&self, other: &SkewPoly) -> Result<SkewPoly> {
        self.same_ctx(other)?;
        let mut acc = SkewPoly::zero(&self.ctx);
        let mut xg = other.clone();
        for a in &self.coeffs {
            acc = acc.add_unchecked(&xg.scale_left(a));
            xg = xg.x_times();
        }
        Ok(acc)
    }

    /// f·c for a constant c.
    pub fn mul_const_right(&self, c: &Elem) -> SkewPoly {
        self.mul_unchecked(&SkewPoly::constant(&self.ctx, c.clone()))
    }

    /// Left-normalised copy: lc(f)⁻¹·f.
    pub fn monic(&self) -> SkewPoly {
        match self.lc() {
            None => self.clone(),
            Some(l) => self.scale_left(&self.ctx.inv(l).expect("nonzero leading coefficient")),
        }
    }

    /// f = q·g + r with deg r < deg g.
    pub fn divmod_right(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ctx(g)?;
        let ctx = &self.ctx;
        let n = g.deg().ok_or(Error::DivisionByZero)?;
        let mut r = self.clone();
        let Some(m) = r.deg().filter(|&m| m >= n) else {
            return Ok((SkewPoly::zero(ctx), r));
        };
        let bn = g.lc().unwrap();
        // x^s·g and σ^s(b_n)⁻¹ for s = 0..=m−n.
        let mut shifts = Vec::with_capacity(m - n + 1);
        let mut lead_inv = Vec::with_capacity(m - n + 1);
        let mut cur = g.clone();
        let mut sb = bn.clone();
        for _ in 0..=(m - n) {
            lead_inv.push(ctx.inv(&sb)?);
            shifts.push(cur.clone());
            cur = cur.x_times();
            sb = ctx.sigma(&sb);
        }
        let mut q = vec![ctx.zero(); m - n + 1];
        while let Some(k) = r.deg().filter(|&k| k >= n) {
            let s = k - n;
            let c = ctx.mul(r.lc().unwrap(), &lead_inv[s]);
            r = r.sub_unchecked(&shifts[s].scale_left(&c));
            if r.deg() == Some(k) {
                return Err(Error::Inconsistent(
                    "right division failed to cancel the leading term".into(),
                ));
            }
            q[s] = c;
        }
        Ok((SkewPoly::new(ctx, q), r))
    }

    /// f = g·q + r with deg r < deg g; needs σ to be invertible.
    pub fn divmod_left(&self, g: &SkewPoly) -> Result<(SkewPoly, SkewPoly)> {
        self.same_ctx(g)?;
        let ctx = &self.ctx;
        let n = g.deg().ok_or(Error::DivisionByZero)?;
        ctx.require_sigma_inverse()?;
        let bn_inv = ctx.inv(g.lc().unwrap())?;
        let mut r = self.clone();
        let Some(m) = r.deg().filter(|&m| m >= n) else {
            return Ok((SkewPoly::zero(ctx), r));
        };
        let mut q = vec![ctx.zero(); m - n + 1];
        while let Some(k) = r.deg().filter(|&k| k >= n) {
            let c = ctx.sigma_pow(&ctx.mul(&bn_inv, r.lc().unwrap()), -(n as i64))?;
            r = r.sub_unchecked(&g.mul_const_right(&c).shift(k - n));
            if r.deg() == Some(k) {
                return Err(Error::Inconsistent(
                    "left division failed to cancel the leading term".into(),
                ));
            }
            q[k - n] = c;
        }
        Ok((SkewPoly::new(ctx, q), r))
    }

    /// Whether g divides f on the right (f = q·g).
    pub fn is_right_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.divmod_right(g)?.1.is_zero())
    }

    /// Whether g divides f on the left (f = g·q).
    pub fn is_left_divisible_by(&self, g: &SkewPoly) -> Result<bool> {
        Ok(self.divmod_left(g)?.1.is_zero())
    }

    /// Canonical text form in descending powers, e.g. `x^4 + (1+i)*x^2 - 4*i*x + 5*i`.
    pub fn to_text(&self) -> String {
        self.to_text_var("x")
    }

    pub fn to_text_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let ctx = &self.ctx;
        let minus_one = ctx.neg(&ctx.one());
        let mut out = String::new();
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if ctx.is_zero(c) {
                continue;
            }
            let mono = match k {
                0 => String::new(),
                1 => var.to_string(),
                _ => format!("{var}^{k}"),
            };
            let term = if k > 0 && ctx.is_one(c) {
                mono
            } else if k > 0 && *c == minus_one && ctx.characteristic() != 2 {
                format!("-{mono}")
            } else {
                let cs = ctx.fmt_elem(c);
                let cs = if k > 0 && !is_atomic(&cs) {
                    format!("({cs})")
                } else {
                    cs
                };
                if k == 0 {
                    spaced(&cs)
                } else {
                    format!("{cs}*{mono}")
                }
            };
            if out.is_empty() {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        out
    }
}

/// A coefficient string that can precede `*x` without parentheses.
fn is_atomic(s: &str) -> bool {
    let body = s.strip_prefix('-').unwrap_or(s);
    !body.is_empty()
        && body
            .chars()
            .all(|c| c.is_ascii_alphanumeric() || c == '^' || c == '*')
}

/// Puts spaces around the top-level signs of a compound constant.
fn spaced(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 4);
    let mut depth = 0i32;
    for (i, ch) in s.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            '+' | '-' if depth == 0 && i > 0 => {
                out.push(' ');
                out.push(ch);
                out.push(' ');
                continue;
            }
            _ => {}
        }
        out.push(ch);
    }
    out
}

impl fmt::Display for SkewPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}
