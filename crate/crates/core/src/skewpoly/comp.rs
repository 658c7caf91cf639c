//! The composition operators 𝒞_{d,s} and 𝒯_{d,s}.
//!
//! 𝒞_{d,s}(a) sums every composition of d copies of δ and s copies of σ
//! applied to a; 𝒯_{d,s}(a) does the same with δσ⁻¹ and σ⁻¹. They are the
//! expansion coefficients of x^i·a and a·x^i respectively.

use crate::error::{Error, Result};
use crate::rings::{Elem, RingCtx};

/// Combinatorial guard for the enumeration variants.
pub const ENUM_LIMIT: i64 = 20;

/// 𝒞_{d,s}(a) by the recursion 𝒞_{d,s} = δ∘𝒞_{d−1,s} + σ∘𝒞_{d,s−1}.
pub fn comp_c(ctx: &RingCtx, d: i64, s: i64, a: &Elem) -> Elem {
    if d < 0 || s < 0 {
        return ctx.zero();
    }
    let table = comp_c_table(ctx, d as usize, s as usize, a);
    table[d as usize][s as usize].clone()
}

/// Table t[d][s] = 𝒞_{d,s}(a) for d ≤ dmax, s ≤ smax.
pub fn comp_c_table(ctx: &RingCtx, dmax: usize, smax: usize, a: &Elem) -> Vec<Vec<Elem>> {
    let mut t = vec![vec![ctx.zero(); smax + 1]; dmax + 1];
    for d in 0..=dmax {
        for s in 0..=smax {
            t[d][s] = match (d, s) {
                (0, 0) => a.clone(),
                (0, _) => ctx.sigma(&t[0][s - 1]),
                (_, 0) => ctx.delta(&t[d - 1][0]),
                _ => ctx.add(&ctx.delta(&t[d - 1][s]), &ctx.sigma(&t[d][s - 1])),
            };
        }
    }
    t
}

/// 𝒯_{d,s}(a) by the recursion 𝒯_{d,s} = δσ⁻¹∘𝒯_{d−1,s} + σ⁻¹∘𝒯_{d,s−1}.
pub fn comp_t(ctx: &RingCtx, d: i64, s: i64, a: &Elem) -> Result<Elem> {
    ctx.require_sigma_inverse()?;
    if d < 0 || s < 0 {
        return Ok(ctx.zero());
    }
    let table = comp_t_table(ctx, d as usize, s as usize, a)?;
    Ok(table[d as usize][s as usize].clone())
}

pub fn comp_t_table(ctx: &RingCtx, dmax: usize, smax: usize, a: &Elem) -> Result<Vec<Vec<Elem>>> {
    ctx.require_sigma_inverse()?;
    let ds = |b: &Elem| -> Result<Elem> { Ok(ctx.delta(&ctx.sigma_inv(b)?)) };
    let mut t = vec![vec![ctx.zero(); smax + 1]; dmax + 1];
    for d in 0..=dmax {
        for s in 0..=smax {
            t[d][s] = match (d, s) {
                (0, 0) => a.clone(),
                (0, _) => ctx.sigma_inv(&t[0][s - 1])?,
                (_, 0) => ds(&t[d - 1][0])?,
                _ => ctx.add(&ds(&t[d - 1][s])?, &ctx.sigma_inv(&t[d][s - 1])?),
            };
        }
    }
    Ok(t)
}

/// Visits every binary word of length d+s with exactly d ones.
fn for_each_word(d: usize, s: usize, mut visit: impl FnMut(&[bool])) {
    let n = d + s;
    let mut word = vec![false; n];
    fn rec(word: &mut Vec<bool>, pos: usize, ones: usize, visit: &mut dyn FnMut(&[bool])) {
        if pos == word.len() {
            if ones == 0 {
                visit(word);
            }
            return;
        }
        let left = word.len() - pos;
        if ones < left {
            word[pos] = false;
            rec(word, pos + 1, ones, visit);
        }
        if ones > 0 {
            word[pos] = true;
            rec(word, pos + 1, ones - 1, visit);
            word[pos] = false;
        }
    }
    rec(&mut word, 0, d, &mut visit);
}

fn guard(d: i64, s: i64) -> Result<()> {
    if d + s > ENUM_LIMIT {
        return Err(Error::TooLarge(format!(
            "enumeration with d+s = {} > {ENUM_LIMIT}",
            d + s
        )));
    }
    Ok(())
}

/// 𝒞_{d,s}(a) by enumerating all words; a test oracle for [`comp_c`].
pub fn comp_c_enum(ctx: &RingCtx, d: i64, s: i64, a: &Elem) -> Result<Elem> {
    if d < 0 || s < 0 {
        return Ok(ctx.zero());
    }
    guard(d, s)?;
    let mut total = ctx.zero();
    for_each_word(d as usize, s as usize, |w| {
        let mut v = a.clone();
        for &is_delta in w.iter().rev() {
            v = if is_delta {
                ctx.delta(&v)
            } else {
                ctx.sigma(&v)
            };
        }
        total = ctx.add(&total, &v);
    });
    Ok(total)
}

/// 𝒯_{d,s}(a) by enumerating all words; a test oracle for [`comp_t`].
pub fn comp_t_enum(ctx: &RingCtx, d: i64, s: i64, a: &Elem) -> Result<Elem> {
    ctx.require_sigma_inverse()?;
    if d < 0 || s < 0 {
        return Ok(ctx.zero());
    }
    guard(d, s)?;
    let mut total = ctx.zero();
    let mut err = None;
    for_each_word(d as usize, s as usize, |w| {
        let mut v = a.clone();
        for &is_delta in w.iter().rev() {
            match ctx.sigma_inv(&v) {
                Ok(u) => v = if is_delta { ctx.delta(&u) } else { u },
                Err(e) => err = Some(e),
            }
        }
        total = ctx.add(&total, &v);
    });
    match err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}
