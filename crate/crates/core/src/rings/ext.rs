//! Finite field extensions F_{q^e} = F_q[y]/(φ) over a table-driven base.

use std::sync::Arc;

use super::gf::GfField;
use super::gfpoly::{self, GfPoly};

#[derive(Debug)]
pub struct ExtField {
    pub(crate) base: Arc<GfField>,
    /// Monic irreducible modulus φ over the base, degree e.
    pub(crate) phi: GfPoly,
}

impl ExtField {
    pub fn new(base: Arc<GfField>, phi: GfPoly) -> ExtField {
        let phi = gfpoly::monic(&base, &phi);
        ExtField { base, phi }
    }

    pub fn base(&self) -> &Arc<GfField> {
        &self.base
    }

    pub fn modulus(&self) -> &[u32] {
        &self.phi
    }

    pub fn degree(&self) -> u32 {
        (self.phi.len() - 1) as u32
    }

    /// Order of the extension field, q^e.
    pub fn order(&self) -> u128 {
        (self.base.order() as u128).pow(self.degree())
    }

    pub fn embed(&self, a: u32) -> GfPoly {
        let mut v = vec![a];
        gfpoly::trim(&mut v);
        v
    }

    pub fn add(&self, a: &[u32], b: &[u32]) -> GfPoly {
        gfpoly::add(&self.base, a, b)
    }

    pub fn sub(&self, a: &[u32], b: &[u32]) -> GfPoly {
        gfpoly::sub(&self.base, a, b)
    }

    pub fn neg(&self, a: &[u32]) -> GfPoly {
        gfpoly::sub(&self.base, &[], a)
    }

    pub fn mul(&self, a: &[u32], b: &[u32]) -> GfPoly {
        gfpoly::mulmod(&self.base, a, b, &self.phi)
    }

    pub fn inv(&self, a: &[u32]) -> Option<GfPoly> {
        if a.is_empty() {
            return None;
        }
        gfpoly::inv_mod(&self.base, a, &self.phi)
    }

    pub fn pow(&self, a: &[u32], e: u128) -> GfPoly {
        gfpoly::powmod(&self.base, a, e, &self.phi)
    }

    /// a^{p^j}.
    pub fn frobenius(&self, a: &[u32], j: u32) -> GfPoly {
        let p = self.base.characteristic() as u128;
        let mut out = a.to_vec();
        for _ in 0..j {
            out = self.pow(&out, p);
        }
        out
    }

    /// All elements, enumerated by base-q digits.
    pub fn elements(&self) -> impl Iterator<Item = GfPoly> + '_ {
        let q = self.base.order() as u128;
        let e = self.degree();
        (0..self.order()).map(move |mut n| {
            let mut v = Vec::with_capacity(e as usize);
            for _ in 0..e {
                v.push((n % q) as u32);
                n /= q;
            }
            gfpoly::trim(&mut v);
            v
        })
    }
}
