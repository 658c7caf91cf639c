//! Derivative polynomials, Hasse derivatives and root multiplicities.

use crate::error::{Error, Result};
use crate::resultant::{resultant, Side};
use crate::rings::{Elem, RingCtx};
use crate::skewpoly::{comp_c_table, eval_left, eval_right, gcld, gcrd, SkewPoly};

/// A nonempty sequence of points a₁, …, a_r from one ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSeq {
    points: Vec<Elem>,
}

impl PointSeq {
    pub fn new(ctx: &RingCtx, points: Vec<Elem>) -> Result<PointSeq> {
        if points.is_empty() {
            return Err(Error::InvalidInput(
                "a point sequence needs at least one point".into(),
            ));
        }
        for a in &points {
            ctx.ensure(a)?;
        }
        Ok(PointSeq { points })
    }

    pub fn repeated(ctx: &RingCtx, a: &Elem, r: usize) -> Result<PointSeq> {
        PointSeq::new(ctx, vec![a.clone(); r])
    }

    pub fn points(&self) -> &[Elem] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// P_a = (x−a_r)⋯(x−a₁) on the right, (x−a₁)⋯(x−a_r) on the left.
pub fn seq_poly(ctx: &RingCtx, points: &[Elem], side: Side) -> Result<SkewPoly> {
    let mut p = SkewPoly::one(ctx);
    for a in points {
        let l = SkewPoly::x_minus(ctx, a);
        p = match side {
            Side::Right => l.mul(&p)?,
            Side::Left => p.mul(&l)?,
        };
    }
    Ok(p)
}

pub fn eval(f: &SkewPoly, a: &Elem, side: Side) -> Result<Elem> {
    match side {
        Side::Right => eval_right(f, a),
        Side::Left => eval_left(f, a),
    }
}

/// Quotient of f on right division by x − a, coefficient by coefficient:
/// β_{m−1} = α_m and β_k = α_{k+1} + Σ_i β_{k+1+i}·𝒞_{i,k+1}(a).
pub fn first_derivative_right(f: &SkewPoly, a: &Elem) -> Result<SkewPoly> {
    let ctx = f.ctx();
    ctx.ensure(a)?;
    let m = match f.deg() {
        Some(m) if m >= 1 => m,
        _ => return Ok(SkewPoly::zero(ctx)),
    };
    let alpha = f.coeffs();
    let c = comp_c_table(ctx, m, m, a);
    let mut beta = vec![ctx.zero(); m];
    beta[m - 1] = alpha[m].clone();
    for k in (0..m - 1).rev() {
        let mut acc = alpha[k + 1].clone();
        for i in 0..=(m - k - 2) {
            acc = ctx.add(&acc, &ctx.mul(&beta[k + 1 + i], &c[i][k + 1]));
        }
        beta[k] = acc;
    }
    Ok(SkewPoly::new(ctx, beta))
}

/// Quotient of f on left division by x − a.
pub fn first_derivative_left(f: &SkewPoly, a: &Elem) -> Result<SkewPoly> {
    let ctx = f.ctx();
    ctx.ensure(a)?;
    Ok(f.divmod_left(&SkewPoly::x_minus(ctx, a))?.0)
}

fn derivative_chain(f: &SkewPoly, points: &[Elem], side: Side) -> Result<SkewPoly> {
    let ctx = f.ctx();
    if f.deg().is_none_or(|m| points.len() > m) {
        return Ok(SkewPoly::zero(ctx));
    }
    let mut cur = f.clone();
    for a in points {
        cur = match side {
            Side::Right => first_derivative_right(&cur, a)?,
            Side::Left => first_derivative_left(&cur, a)?,
        };
    }
    Ok(cur)
}

/// The derivative polynomial of order r via a: the quotient of f on division
/// by P_a. Zero when r exceeds deg f.
pub fn delta_poly(f: &SkewPoly, seq: &PointSeq, side: Side) -> Result<SkewPoly> {
    if side == Side::Left {
        f.ctx().require_sigma_inverse()?;
    }
    derivative_chain(f, seq.points(), side)
}

/// The Hasse derivative: the x^{r−1} coefficient of the remainder of f on
/// division by P_a (right-form coefficient for the left side), checked against Δ_{a′}f evaluated at a_r.
pub fn hasse(f: &SkewPoly, seq: &PointSeq, side: Side) -> Result<Elem> {
    let ctx = f.ctx();
    if side == Side::Left {
        ctx.require_sigma_inverse()?;
    }
    let r = seq.len();
    let p = seq_poly(ctx, seq.points(), side)?;
    // On the left, the remainder is P_{a′}·c plus lower terms, so c is the
    // coefficient of x^{r−1} written on the right.
    let d = match side {
        Side::Right => f.divmod_right(&p)?.1.coeff(r - 1),
        Side::Left => {
            let rem = f.divmod_left(&p)?.1.to_right_coeffs()?;
            rem.rcoeffs()
                .get(r - 1)
                .cloned()
                .unwrap_or_else(|| ctx.zero())
        }
    };
    let prefix = derivative_chain(f, &seq.points()[..r - 1], side)?;
    let check = eval(&prefix, &seq.points()[r - 1], side)?;
    if check != d {
        return Err(Error::Inconsistent(
            "Hasse derivative disagrees with the derivative polynomial".into(),
        ));
    }
    Ok(d)
}

fn gcd_nonunit(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<bool> {
    let d = match side {
        Side::Right => gcrd(f, g)?,
        Side::Left => gcld(f, g)?,
    };
    Ok(d.deg().is_some_and(|k| k >= 1))
}

fn opposite(side: Side) -> Side {
    match side {
        Side::Right => Side::Left,
        Side::Left => Side::Right,
    }
}

/// Checks that, for consecutive derivatives D and D′ = quotient of D by
/// x − a, the vanishing of D at a matches the opposite-side resultant and
/// gcd of (D, D′).
fn check_step(d: &SkewPoly, d_next: &SkewPoly, a: &Elem, side: Side) -> Result<bool> {
    let root = d.ctx().is_zero(&eval(d, a, side)?);
    let other = opposite(side);
    let res_zero = resultant(d, d_next, other)?.is_zero();
    let gcd = gcd_nonunit(d, d_next, other)?;
    if res_zero != root || gcd != root {
        return Err(Error::Inconsistent(format!(
            "root test {root}, resultant test {res_zero}, gcd test {gcd} disagree"
        )));
    }
    Ok(root)
}

/// The largest r with (x − a)^r dividing f on the given side.
pub fn multiplicity(f: &SkewPoly, a: &Elem, side: Side) -> Result<usize> {
    let ctx = f.ctx();
    ctx.ensure(a)?;
    if f.is_zero() {
        return Err(Error::InvalidInput(
            "the zero polynomial has no finite multiplicity".into(),
        ));
    }
    if side == Side::Left {
        ctx.require_sigma_inverse()?;
    }
    let lin = SkewPoly::x_minus(ctx, a);
    let mut cur = f.clone();
    let mut r = 0;
    loop {
        let (q, rem) = match side {
            Side::Right => cur.divmod_right(&lin)?,
            Side::Left => cur.divmod_left(&lin)?,
        };
        if !rem.is_zero() {
            break;
        }
        cur = q;
        r += 1;
    }
    let deg = f.deg().unwrap();
    if deg >= 2 {
        let mut d = f.clone();
        for j in 0..=r.min(deg - 2) {
            let d_next = derivative_chain(&d, std::slice::from_ref(a), side)?;
            if check_step(&d, &d_next, a, side)? != (j < r) {
                return Err(Error::Inconsistent(
                    "derivative chain disagrees with repeated division".into(),
                ));
            }
            d = d_next;
        }
    }
    Ok(r)
}

/// Whether a₁ is the only root of P_a on the given side. Needs a finite ring.
pub fn is_multiplicity_sequence(ctx: &RingCtx, seq: &PointSeq, side: Side) -> Result<bool> {
    let elems = ctx
        .elements()
        .ok_or_else(|| Error::UnsupportedRing("root enumeration needs a finite ring".into()))?;
    let p = seq_poly(ctx, seq.points(), side)?;
    let a1 = &seq.points()[0];
    for c in &elems {
        if c != a1 && ctx.is_zero(&eval(&p, c, side)?) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether P_a divides f on the given side. When r < deg f the equivalent
/// chain of root, resultant and gcd tests is checked along the way.
pub fn multiplicity_via_sequence(f: &SkewPoly, seq: &PointSeq, side: Side) -> Result<bool> {
    let ctx = f.ctx();
    if side == Side::Left {
        ctx.require_sigma_inverse()?;
    }
    let p = seq_poly(ctx, seq.points(), side)?;
    let divides = match side {
        Side::Right => f.divmod_right(&p)?.1.is_zero(),
        Side::Left => f.divmod_left(&p)?.1.is_zero(),
    };
    let r = seq.len();
    if f.deg().is_some_and(|m| r < m) {
        let mut d = f.clone();
        let mut all = true;
        for a in seq.points() {
            let d_next = derivative_chain(&d, std::slice::from_ref(a), side)?;
            all &= check_step(&d, &d_next, a, side)?;
            d = d_next;
        }
        if all != divides {
            return Err(Error::Inconsistent(
                "multiplicity conditions disagree with division".into(),
            ));
        }
    }
    Ok(divides)
}
