//! Right-coefficient form Σ x^i·𝒜_i, available when σ is invertible.

use std::fmt;

use super::comp::{comp_c_table, comp_t_table};
use super::SkewPoly;
use crate::error::{Error, Result};
use crate::rings::{Elem, RingCtx};

#[derive(Clone, PartialEq, Eq)]
pub struct RightForm {
    ctx: RingCtx,
    rcoeffs: Vec<Elem>,
}

impl fmt::Debug for RightForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.rcoeffs.iter().map(|c| self.ctx.fmt_elem(c)).collect();
        write!(f, "RightForm[{}]", parts.join(", "))
    }
}

impl RightForm {
    pub fn new(ctx: &RingCtx, rcoeffs: Vec<Elem>) -> Result<RightForm> {
        ctx.require_sigma_inverse()?;
        let mut r = RightForm {
            ctx: ctx.clone(),
            rcoeffs,
        };
        while r.rcoeffs.last().is_some_and(|c| r.ctx.is_zero(c)) {
            r.rcoeffs.pop();
        }
        Ok(r)
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn rcoeffs(&self) -> &[Elem] {
        &self.rcoeffs
    }

    pub fn is_zero(&self) -> bool {
        self.rcoeffs.is_empty()
    }

    pub fn deg(&self) -> Option<usize> {
        self.rcoeffs.len().checked_sub(1)
    }

    /// 𝒜_i = Σ_j (−1)^j 𝒯_{j,i}(a_{j+i}).
    pub fn from_left(f: &SkewPoly) -> Result<RightForm> {
        let ctx = f.ctx();
        ctx.require_sigma_inverse()?;
        let Some(m) = f.deg() else {
            return RightForm::new(ctx, Vec::new());
        };
        let mut out = vec![ctx.zero(); m + 1];
        for (n, a) in f.coeffs().iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            // a·x^n = Σ_j x^{n−j} (−1)^j 𝒯_{j,n−j}(a)
            let t = comp_t_table(ctx, n, n, a)?;
            for j in 0..=n {
                let mut v = t[j][n - j].clone();
                if j % 2 == 1 {
                    v = ctx.neg(&v);
                }
                out[n - j] = ctx.add(&out[n - j], &v);
            }
        }
        RightForm::new(ctx, out)
    }

    /// Back to left coefficients via x^i·𝒜 = Σ_k 𝒞_{k,i−k}(𝒜) x^{i−k}.
    pub fn to_left(&self) -> SkewPoly {
        let ctx = &self.ctx;
        let Some(m) = self.deg() else {
            return SkewPoly::zero(ctx);
        };
        let mut out = vec![ctx.zero(); m + 1];
        for (i, a) in self.rcoeffs.iter().enumerate() {
            if ctx.is_zero(a) {
                continue;
            }
            let t = comp_c_table(ctx, i, i, a);
            for k in 0..=i {
                out[i - k] = ctx.add(&out[i - k], &t[k][i - k]);
            }
        }
        SkewPoly::new(ctx, out)
    }

    /// F·G = Σ x^{i+j−k} (−1)^k 𝒯_{k,j−k}(β_i) α_j.
    pub fn mul(&self, other: &RightForm) -> Result<RightForm> {
        if self.ctx != other.ctx {
            return Err(Error::CtxMismatch);
        }
        let ctx = &self.ctx;
        let (Some(m), Some(n)) = (self.deg(), other.deg()) else {
            return RightForm::new(ctx, Vec::new());
        };
        let mut out = vec![ctx.zero(); m + n + 1];
        for (i, beta) in self.rcoeffs.iter().enumerate() {
            if ctx.is_zero(beta) {
                continue;
            }
            let t = comp_t_table(ctx, n, n, beta)?;
            for (j, alpha) in other.rcoeffs.iter().enumerate() {
                if ctx.is_zero(alpha) {
                    continue;
                }
                for k in 0..=j {
                    let mut v = ctx.mul(&t[k][j - k], alpha);
                    if k % 2 == 1 {
                        v = ctx.neg(&v);
                    }
                    out[i + j - k] = ctx.add(&out[i + j - k], &v);
                }
            }
        }
        RightForm::new(ctx, out)
    }
}

impl SkewPoly {
    /// Right-coefficient form of f.
    pub fn to_right_coeffs(&self) -> Result<RightForm> {
        RightForm::from_left(self)
    }

    pub fn from_right_coeffs(r: &RightForm) -> SkewPoly {
        r.to_left()
    }
}
