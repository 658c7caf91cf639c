//! Finite-field extensions of a skew polynomial ring and common roots of
//! two skew polynomials in such an extension.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::resultant::{resultant, Side};
use crate::rings::gfpoly::{self, GfPoly};
use crate::rings::{
    make_ctx, DeltaSpec, Elem, GfField, RingCtx, RingKind, SigmaSpec, DEFAULT_SEED,
};
use crate::skewpoly::{eval_left, eval_right, gcld, gcrd, SkewPoly};

/// A commutative polynomial in y over the base field, ascending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CommPoly {
    ctx: RingCtx,
    coeffs: Vec<Elem>,
}

impl CommPoly {
    fn from_raw(ctx: &RingCtx, raw: &[u32]) -> CommPoly {
        CommPoly {
            ctx: ctx.clone(),
            coeffs: raw.iter().map(|&c| Elem::Gf(c)).collect(),
        }
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.coeffs
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Value at c, where c lives in `ring` (the base ring or an extension of it).
    pub fn eval(&self, ring: &RingCtx, c: &Elem) -> Result<Elem> {
        let mut acc = ring.zero();
        for a in self.coeffs.iter().rev() {
            acc = ring.add(&ring.mul(&acc, c), &embed(ring, a)?);
        }
        Ok(acc)
    }

    pub fn to_text(&self) -> String {
        SkewPoly::new(&self.ctx, self.coeffs.clone()).to_text_var("y")
    }
}

impl fmt::Display for CommPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

/// The image of a base element in `ring`, which is either the base ring
/// itself or an extension built from it.
pub fn embed(ring: &RingCtx, a: &Elem) -> Result<Elem> {
    if ring.ext_field().is_some() {
        if let Elem::Gf(_) = a {
            return ring
                .ext_elem(std::slice::from_ref(a))
                .ok_or(Error::CtxMismatch);
        }
    }
    ring.ensure(a)?;
    Ok(a.clone())
}

pub fn embed_poly(ring: &RingCtx, f: &SkewPoly) -> Result<SkewPoly> {
    let coeffs = f
        .coeffs()
        .iter()
        .map(|c| embed(ring, c))
        .collect::<Result<Vec<_>>>()?;
    Ok(SkewPoly::new(ring, coeffs))
}

struct Base<'a> {
    field: &'a GfField,
    p: u32,
    m: u32,
    gen: String,
    j: u32,
    beta: Option<u32>,
}

fn base_of(ctx: &RingCtx) -> Result<Base<'_>> {
    let unsupported = |what: &str| Error::UnsupportedRing(format!("extensions need {what}"));
    let (p, m, gen) = match ctx.kind() {
        RingKind::FiniteField { p, m, gen } => (*p, *m, gen.clone()),
        _ => return Err(unsupported("a finite field")),
    };
    let field = ctx
        .gf_field()
        .ok_or_else(|| unsupported("a finite field"))?;
    let j = match ctx.sigma_spec() {
        SigmaSpec::Identity => 0,
        SigmaSpec::Frobenius(j) => *j,
        _ => return Err(unsupported("a Frobenius power as sigma")),
    };
    let beta = match ctx.delta_spec() {
        DeltaSpec::Zero => None,
        DeltaSpec::InnerL(Elem::Gf(b)) => Some(*b).filter(|&b| b != 0),
        _ => return Err(unsupported("a zero or inner derivation")),
    };
    Ok(Base {
        field,
        p,
        m,
        gen,
        j,
        beta,
    })
}

impl Base<'_> {
    /// Frobenius exponent of σ⁻¹ on the base field.
    fn j_inv(&self) -> u32 {
        (self.m - self.j % self.m) % self.m
    }

    /// Applies a ↦ a^{p^k} to a polynomial in y: coefficients and y alike.
    fn frob_poly(&self, a: &[u32], k: u32) -> GfPoly {
        if a.is_empty() {
            return Vec::new();
        }
        let step = (self.p as usize).pow(k);
        let mut out = vec![0u32; (a.len() - 1) * step + 1];
        for (i, &c) in a.iter().enumerate() {
            out[i * step] = self.field.frobenius(c, k);
        }
        out
    }

    /// β(u − v) for a nonzero inner derivation, zero otherwise.
    fn delta_part(&self, u: &[u32], v: &[u32]) -> GfPoly {
        match self.beta {
            Some(b) => gfpoly::scale(self.field, &gfpoly::sub(self.field, u, v), b),
            None => Vec::new(),
        }
    }
}

/// The right evaluation of h at a symbolic y as a commutative polynomial:
/// Σ h_i N_i(y) with N_0 = 1, N_i = σ(N_{i−1})·y + δ(N_{i−1}).
pub fn norm_value_poly(h: &SkewPoly) -> Result<CommPoly> {
    let ctx = h.ctx();
    let b = base_of(ctx)?;
    let f = b.field;
    let y: GfPoly = vec![0, 1];
    let mut n: GfPoly = vec![1];
    let mut acc: GfPoly = Vec::new();
    for (i, c) in h.coeffs().iter().enumerate() {
        if i > 0 {
            let s = b.frob_poly(&n, b.j);
            n = gfpoly::add(f, &gfpoly::mul(f, &s, &y), &b.delta_part(&s, &n));
        }
        acc = gfpoly::add(f, &acc, &gfpoly::scale(f, &n, gf_value(c)?));
    }
    Ok(CommPoly::from_raw(ctx, &acc))
}

/// The left evaluation of h at a symbolic y: Σ M_i(y)𝒜_i with M_0 = 1,
/// M_i = y·σ⁻¹(M_{i−1}) − δ(σ⁻¹(M_{i−1})), where σ⁻¹ acts on y as the
/// base-field inverse Frobenius.
pub fn norm_value_poly_left(h: &SkewPoly) -> Result<CommPoly> {
    let ctx = h.ctx();
    let b = base_of(ctx)?;
    let f = b.field;
    let y: GfPoly = vec![0, 1];
    let rf = h.to_right_coeffs()?;
    let mut mm: GfPoly = vec![1];
    let mut acc: GfPoly = Vec::new();
    for (i, c) in rf.rcoeffs().iter().enumerate() {
        if i > 0 {
            let s = b.frob_poly(&mm, b.j_inv());
            mm = gfpoly::sub(f, &gfpoly::mul(f, &y, &s), &b.delta_part(&mm, &s));
        }
        acc = gfpoly::add(f, &acc, &gfpoly::scale(f, &mm, gf_value(c)?));
    }
    Ok(CommPoly::from_raw(ctx, &acc))
}

fn gf_value(c: &Elem) -> Result<u32> {
    match c {
        Elem::Gf(x) => Ok(*x),
        _ => Err(Error::CtxMismatch),
    }
}

/// Builds F_q[y]/(modulus) with σ̃, δ̃ extending σ, δ.
///
/// On the right side σ̃(b) = b^{p^j} for the same j as σ. On the left side
/// σ̃ is chosen so that σ̃⁻¹ is the same Frobenius power as σ⁻¹, which keeps
/// the symbolic left evaluation independent of the extension degree.
pub fn extend_ctx_with(ctx: &RingCtx, modulus: &[Elem], side: Side) -> Result<RingCtx> {
    let b = base_of(ctx)?;
    let raw = modulus.iter().map(gf_value).collect::<Result<Vec<_>>>()?;
    let e = raw
        .len()
        .checked_sub(1)
        .filter(|&e| e >= 1)
        .ok_or_else(|| {
            Error::InvalidInput("the extension modulus needs degree at least 1".into())
        })? as u32;
    let j = match side {
        Side::Right => b.j,
        Side::Left => (b.m * e - b.j_inv()) % (b.m * e),
    };
    let kind = RingKind::FiniteExtension {
        p: b.p,
        m: b.m,
        gen: b.gen.clone(),
        var: "y".into(),
        modulus: raw,
    };
    let sigma = if j == 0 {
        SigmaSpec::Identity
    } else {
        SigmaSpec::Frobenius(j)
    };
    let plain = make_ctx(kind.clone(), SigmaSpec::Identity, DeltaSpec::Zero, true)?;
    let delta = match b.beta {
        Some(beta) => DeltaSpec::InnerL(embed(&plain, &Elem::Gf(beta))?),
        None => DeltaSpec::Zero,
    };
    make_ctx(kind, sigma, delta, !ctx.is_checked())
}

/// The first monic irreducible polynomial of degree e over the base field,
/// in ascending coefficient order.
pub fn first_irreducible(ctx: &RingCtx, e: usize) -> Result<Vec<Elem>> {
    let b = base_of(ctx)?;
    let q = b.field.order() as u128;
    let count = q
        .checked_pow(e as u32)
        .ok_or_else(|| Error::TooLarge("extension degree".into()))?;
    for code in 0..count {
        let mut c = code;
        let mut poly: GfPoly = (0..e)
            .map(|_| {
                let d = (c % q) as u32;
                c /= q;
                d
            })
            .collect();
        poly.push(1);
        if gfpoly::is_irreducible(b.field, &poly) {
            return Ok(poly.into_iter().map(Elem::Gf).collect());
        }
    }
    Err(Error::Inconsistent(
        "no irreducible polynomial found".into(),
    ))
}

/// The degree-e extension of a finite-field context with trivially extended
/// σ and δ. For e = 1 the context itself is returned.
pub fn extend_ctx(ctx: &RingCtx, e: usize) -> Result<RingCtx> {
    base_of(ctx)?;
    match e {
        0 => Err(Error::InvalidInput(
            "extension degree must be positive".into(),
        )),
        1 => Ok(ctx.clone()),
        _ => extend_ctx_with(ctx, &first_irreducible(ctx, e)?, Side::Right),
    }
}

/// A common root found in a finite extension.
#[derive(Debug, Clone)]
pub struct ExtensionResult {
    pub ext_degree: usize,
    /// The base context when `ext_degree` is 1.
    pub ext_ctx: RingCtx,
    /// Monic irreducible polynomial in y defining the extension.
    pub modulus: CommPoly,
    pub root: Elem,
}

impl ExtensionResult {
    pub fn embed(&self, a: &Elem) -> Result<Elem> {
        embed(&self.ext_ctx, a)
    }

    pub fn embed_poly(&self, f: &SkewPoly) -> Result<SkewPoly> {
        embed_poly(&self.ext_ctx, f)
    }

    pub fn root_text(&self) -> String {
        self.ext_ctx.fmt_elem(&self.root)
    }
}

/// Smallest e with an irreducible factor of degree e, and the product of
/// all such factors.
fn smallest_factor_block(f: &GfField, poly: &[u32]) -> (usize, GfPoly) {
    let y: GfPoly = vec![0, 1];
    let q = f.order() as u128;
    let mut z = gfpoly::rem(f, &y, poly);
    for e in 1..poly.len() {
        z = gfpoly::powmod(f, &z, q, poly);
        let g = gfpoly::gcd(f, poly, &gfpoly::sub(f, &z, &y));
        if g.len() > 1 {
            return (e, g);
        }
    }
    unreachable!("a nonconstant polynomial has an irreducible factor")
}

/// Splits a product of distinct irreducible factors of degree e until one
/// factor is left (Cantor–Zassenhaus, with the trace map in characteristic 2).
fn split_equal_degree(b: &Base<'_>, mut g: GfPoly, e: usize, rng: &mut ChaCha8Rng) -> GfPoly {
    let f = b.field;
    let q = f.order() as u128;
    while g.len() - 1 > e {
        let n = g.len() - 1;
        let a: GfPoly = {
            let mut v: GfPoly = (0..n).map(|_| rng.gen_range(0..f.order())).collect();
            gfpoly::trim(&mut v);
            v
        };
        if a.len() < 2 {
            continue;
        }
        let probe = if b.p == 2 {
            let mut t = a.clone();
            let mut s = a.clone();
            for _ in 1..(b.m as usize * e) {
                s = gfpoly::mulmod(f, &s, &s, &g);
                t = gfpoly::add(f, &t, &s);
            }
            t
        } else {
            let mut ai = a.clone();
            let mut t = a.clone();
            for _ in 1..e {
                ai = gfpoly::powmod(f, &ai, q, &g);
                t = gfpoly::mulmod(f, &t, &ai, &g);
            }
            let t = gfpoly::powmod(f, &t, (q - 1) / 2, &g);
            gfpoly::sub(f, &t, &[1])
        };
        let h = gfpoly::gcd(f, &g, &probe);
        if h.len() > 1 && h.len() < g.len() {
            let other = gfpoly::monic(f, &gfpoly::divrem(f, &g, &h).0);
            g = if h.len() <= other.len() { h } else { other };
        }
    }
    g
}

fn common_root_ext(
    f: &SkewPoly,
    g: &SkewPoly,
    side: Side,
    seed: u64,
) -> Result<Option<ExtensionResult>> {
    let ctx = f.ctx();
    let b = base_of(ctx)?;
    if !resultant(f, g, side)?.is_zero() {
        return Ok(None);
    }
    let (h, norm) = match side {
        Side::Right => {
            let h = gcrd(f, g)?;
            let n = norm_value_poly(&h)?;
            (h, n)
        }
        Side::Left => {
            let h = gcld(f, g)?;
            let n = norm_value_poly_left(&h)?;
            (h, n)
        }
    };
    if h.deg().is_none_or(|d| d == 0) {
        return Err(Error::Inconsistent(
            "zero resultant but the gcd is a unit".into(),
        ));
    }
    let raw = norm
        .coeffs()
        .iter()
        .map(gf_value)
        .collect::<Result<Vec<_>>>()?;
    let raw = gfpoly::monic(b.field, &raw);
    let (e, block) = smallest_factor_block(b.field, &raw);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let phi = split_equal_degree(&b, block, e, &mut rng);
    let modulus = CommPoly::from_raw(ctx, &phi);
    let (ext_ctx, root) = if e == 1 {
        (ctx.clone(), Elem::Gf(b.field.neg(phi[0])))
    } else {
        let ext = extend_ctx_with(ctx, modulus.coeffs(), side)?;
        let y = ext
            .ext_elem(&[Elem::Gf(0), Elem::Gf(1)])
            .ok_or(Error::CtxMismatch)?;
        (ext, y)
    };
    let out = ExtensionResult {
        ext_degree: e,
        ext_ctx,
        modulus,
        root,
    };
    for p in [f, g] {
        let pe = out.embed_poly(p)?;
        let v = match side {
            Side::Right => eval_right(&pe, &out.root)?,
            Side::Left => eval_left(&pe, &out.root)?,
        };
        if !out.ext_ctx.is_zero(&v) {
            return Err(Error::Inconsistent(
                "extension root does not annihilate both polynomials".into(),
            ));
        }
    }
    Ok(Some(out))
}

/// A common right root of f and g in the smallest extension containing one,
/// or `None` when the right resultant is nonzero.
pub fn common_right_root_ext(f: &SkewPoly, g: &SkewPoly) -> Result<Option<ExtensionResult>> {
    common_root_ext(f, g, Side::Right, DEFAULT_SEED)
}

/// The left counterpart of [`common_right_root_ext`].
pub fn common_left_root_ext(f: &SkewPoly, g: &SkewPoly) -> Result<Option<ExtensionResult>> {
    common_root_ext(f, g, Side::Left, DEFAULT_SEED)
}

pub fn common_root_ext_seeded(
    f: &SkewPoly,
    g: &SkewPoly,
    side: Side,
    seed: u64,
) -> Result<Option<ExtensionResult>> {
    common_root_ext(f, g, side, seed)
}
