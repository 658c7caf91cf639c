//! Right and left evaluation, and (σ,δ)-conjugation.

use super::SkewPoly;
use crate::error::Result;
use crate::rings::{Elem, RingCtx};

/// Remainder of f on right division by x − a, via
/// N_0 = 1, N_i = σ(N_{i−1})a + δ(N_{i−1}) and f(a) = Σ a_i N_i.
pub fn eval_right(f: &SkewPoly, a: &Elem) -> Result<Elem> {
    let ctx = f.ctx();
    ctx.ensure(a)?;
    let mut n = ctx.one();
    let mut acc = ctx.zero();
    for (i, c) in f.coeffs().iter().enumerate() {
        if i > 0 {
            n = ctx.add(&ctx.mul(&ctx.sigma(&n), a), &ctx.delta(&n));
        }
        acc = ctx.add(&acc, &ctx.mul(c, &n));
    }
    Ok(acc)
}

/// Remainder of f on left division by x − a, via
/// M_0 = 1, M_i = aσ⁻¹(M_{i−1}) − δσ⁻¹(M_{i−1}) and f_L(a) = Σ M_i 𝒜_i.
pub fn eval_left(f: &SkewPoly, a: &Elem) -> Result<Elem> {
    let ctx = f.ctx();
    ctx.ensure(a)?;
    let rf = f.to_right_coeffs()?;
    let mut m = ctx.one();
    let mut acc = ctx.zero();
    for (i, c) in rf.rcoeffs().iter().enumerate() {
        if i > 0 {
            let s = ctx.sigma_inv(&m)?;
            m = ctx.sub(&ctx.mul(a, &s), &ctx.delta(&s));
        }
        acc = ctx.add(&acc, &ctx.mul(&m, c));
    }
    Ok(acc)
}

/// a^c = σ(c)ac⁻¹ + δ(c)c⁻¹.
pub fn conj_right(ctx: &RingCtx, a: &Elem, c: &Elem) -> Result<Elem> {
    let ci = ctx.inv(c)?;
    let t = ctx.mul(&ctx.mul(&ctx.sigma(c), a), &ci);
    Ok(ctx.add(&t, &ctx.mul(&ctx.delta(c), &ci)))
}

/// ᶜa = c⁻¹aσ⁻¹(c) − c⁻¹δ(σ⁻¹(c)).
pub fn conj_left(ctx: &RingCtx, a: &Elem, c: &Elem) -> Result<Elem> {
    let ci = ctx.inv(c)?;
    let sc = ctx.sigma_inv(c)?;
    let t = ctx.mul(&ctx.mul(&ci, a), &sc);
    Ok(ctx.sub(&t, &ctx.mul(&ci, &ctx.delta(&sc))))
}
