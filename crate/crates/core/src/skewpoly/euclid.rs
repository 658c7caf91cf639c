//! Right and left Euclidean algorithms.

use super::SkewPoly;
use crate::error::{Error, Result};

/// Output of an extended Euclidean run.
///
/// For the right version `p·f + q·g = d`, and `p_next·f + q_next·g = 0` gives
/// the least common right multiple. The left version reads `f·p + g·q = d`.
#[derive(Debug, Clone)]
pub struct Xgcd {
    pub d: SkewPoly,
    pub p: SkewPoly,
    pub q: SkewPoly,
    pub p_next: SkewPoly,
    pub q_next: SkewPoly,
}

fn both_zero() -> Error {
    Error::InvalidInput("gcd of two zero polynomials".into())
}

/// Extended right Euclid: p·f + q·g = gcrd(f, g), monic.
pub fn xgcrd(f: &SkewPoly, g: &SkewPoly) -> Result<Xgcd> {
    f.same_ctx(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(both_zero());
    }
    let ctx = f.ctx();
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut p0, mut p1) = (SkewPoly::one(ctx), SkewPoly::zero(ctx));
    let (mut q0, mut q1) = (SkewPoly::zero(ctx), SkewPoly::one(ctx));
    while !r1.is_zero() {
        let (quo, rem) = r0.divmod_right(&r1)?;
        let p2 = p0.sub_unchecked(&quo.mul_unchecked(&p1));
        let q2 = q0.sub_unchecked(&quo.mul_unchecked(&q1));
        (r0, r1) = (r1, rem);
        (p0, p1) = (p1, p2);
        (q0, q1) = (q1, q2);
    }
    let u = ctx.inv(r0.lc().expect("nonzero remainder"))?;
    Ok(Xgcd {
        d: r0.scale_left(&u),
        p: p0.scale_left(&u),
        q: q0.scale_left(&u),
        p_next: p1,
        q_next: q1,
    })
}

/// Extended left Euclid: f·p + g·q = gcld(f, g), monic.
pub fn xgcld(f: &SkewPoly, g: &SkewPoly) -> Result<Xgcd> {
    f.same_ctx(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(both_zero());
    }
    let ctx = f.ctx();
    ctx.require_sigma_inverse()?;
    let (mut r0, mut r1) = (f.clone(), g.clone());
    let (mut p0, mut p1) = (SkewPoly::one(ctx), SkewPoly::zero(ctx));
    let (mut q0, mut q1) = (SkewPoly::zero(ctx), SkewPoly::one(ctx));
    while !r1.is_zero() {
        let (quo, rem) = r0.divmod_left(&r1)?;
        let p2 = p0.sub_unchecked(&p1.mul_unchecked(&quo));
        let q2 = q0.sub_unchecked(&q1.mul_unchecked(&quo));
        (r0, r1) = (r1, rem);
        (p0, p1) = (p1, p2);
        (q0, q1) = (q1, q2);
    }
    let c = right_normaliser(&r0)?;
    Ok(Xgcd {
        d: r0.mul_const_right(&c),
        p: p0.mul_const_right(&c),
        q: q0.mul_const_right(&c),
        p_next: p1,
        q_next: q1,
    })
}

/// The constant c with h·c monic: h_n σ^n(c) = 1.
fn right_normaliser(h: &SkewPoly) -> Result<crate::rings::Elem> {
    let ctx = h.ctx();
    let n = h.deg().expect("nonzero polynomial");
    let inv = ctx.inv(h.lc().unwrap())?;
    ctx.sigma_pow(&inv, -(n as i64))
}

/// Greatest common right divisor, made monic on the left.
pub fn gcrd(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.same_ctx(g)?;
    if f.is_zero() && g.is_zero() {
        return Err(both_zero());
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.divmod_right(&b)?.1;
        (a, b) = (b, r);
    }
    Ok(a.monic())
}

/// Greatest common left divisor, made monic on the right.
pub fn gcld(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    f.same_ctx(g)?;
    f.ctx().require_sigma_inverse()?;
    if f.is_zero() && g.is_zero() {
        return Err(both_zero());
    }
    let (mut a, mut b) = (f.clone(), g.clone());
    while !b.is_zero() {
        let r = a.divmod_left(&b)?.1;
        (a, b) = (b, r);
    }
    let c = right_normaliser(&a)?;
    Ok(a.mul_const_right(&c))
}

/// Least common right multiple (generator of 𝓡f ∩ 𝓡g), monic.
pub fn lcrm(f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
    if f.is_zero() || g.is_zero() {
        return Err(Error::InvalidInput("lcrm of a zero polynomial".into()));
    }
    let x = xgcrd(f, g)?;
    Ok(x.p_next.mul(f)?.monic())
}
