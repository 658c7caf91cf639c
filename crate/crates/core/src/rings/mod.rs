//! Division rings, their endomorphisms σ and σ-derivations δ.

mod ext;
pub(crate) mod fpoly;
mod funcfield;
mod gf;
pub mod gfpoly;
mod quat;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub use ext::ExtField;
pub use funcfield::RatFn;
pub use gf::GfField;
pub use quat::{Gauss, Quat};

use crate::error::{AxiomMap, Error, Result};

/// Seed used for sampled axiom validation when none is given.
pub const DEFAULT_SEED: u64 = 0x5eed;

const SAMPLE_PAIRS: usize = 200;
const EXHAUSTIVE_LIMIT: u128 = 64;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RingKind {
    /// GF(p^m), elements named as polynomials in `gen`.
    FiniteField { p: u32, m: u32, gen: String },
    /// F_p(var).
    FuncField { p: u32, var: String },
    /// ℚ(i).
    GaussianRational,
    /// Quaternions over ℚ with i² = j² = −1.
    RatQuaternion,
    /// GF(p^m)[var]/(modulus), with `modulus` monic and irreducible.
    FiniteExtension {
        p: u32,
        m: u32,
        gen: String,
        var: String,
        modulus: Vec<u32>,
    },
}

impl RingKind {
    pub fn finite_field(p: u32, m: u32) -> RingKind {
        RingKind::FiniteField {
            p,
            m,
            gen: "w".into(),
        }
    }

    pub fn func_field(p: u32) -> RingKind {
        RingKind::FuncField { p, var: "t".into() }
    }
}

impl fmt::Display for RingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingKind::FiniteField { p, m, .. } => write!(f, "gf({p}^{m})"),
            RingKind::FuncField { p, var } => write!(f, "ff({p},{var})"),
            RingKind::GaussianRational => f.write_str("gauss"),
            RingKind::RatQuaternion => f.write_str("quat"),
            RingKind::FiniteExtension { p, m, modulus, .. } => {
                write!(f, "gf({p}^{m})[y]/({} coefficients)", modulus.len())
            }
        }
    }
}

/// An exact element of one of the supported division rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Elem {
    Gf(u32),
    Rat(RatFn),
    Gauss(Gauss),
    Quat(Quat),
    /// Coordinates over the base field of a finite extension, ascending.
    Ext(Vec<u32>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SigmaSpec {
    Identity,
    /// a ↦ a^{p^j}.
    Frobenius(u32),
    ComplexConj,
    /// a ↦ u a u⁻¹.
    Inner(Elem),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DeltaSpec {
    Zero,
    /// a ↦ σ(a)β − βa.
    InnerL(Elem),
    /// d/dt on F_p(t).
    FormalDeriv,
}

#[derive(Debug)]
enum Field {
    Gf(Arc<GfField>),
    Func(u32),
    Gauss,
    Quat,
    Ext(Arc<ExtField>),
}

#[derive(Debug)]
struct CtxInner {
    kind: RingKind,
    field: Field,
    sigma: SigmaSpec,
    delta: DeltaSpec,
    /// u⁻¹ for an inner σ.
    inner_inv: Option<Elem>,
    checked: bool,
}

/// A division ring together with its (σ, δ) pair. Cheap to clone.
#[derive(Clone)]
pub struct RingCtx(Arc<CtxInner>);

impl fmt::Debug for RingCtx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "RingCtx({}, {:?}, {:?})",
            self.0.kind, self.0.sigma, self.0.delta
        )
    }
}

impl PartialEq for RingCtx {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.kind == other.0.kind
                && self.0.sigma == other.0.sigma
                && self.0.delta == other.0.delta)
    }
}

impl Eq for RingCtx {}

/// Builds a context, validating the axioms with the default seed.
pub fn make_ctx(
    kind: RingKind,
    sigma: SigmaSpec,
    delta: DeltaSpec,
    unchecked: bool,
) -> Result<RingCtx> {
    make_ctx_seeded(kind, sigma, delta, unchecked, DEFAULT_SEED)
}

pub fn make_ctx_seeded(
    kind: RingKind,
    sigma: SigmaSpec,
    delta: DeltaSpec,
    unchecked: bool,
    seed: u64,
) -> Result<RingCtx> {
    let field = match &kind {
        RingKind::FiniteField { p, m, .. } => Field::Gf(Arc::new(GfField::new(*p, *m)?)),
        RingKind::FuncField { p, .. } => {
            if !gf::is_prime(*p as u64) {
                return Err(Error::IncompatibleSpec(format!("{p} is not prime")));
            }
            Field::Func(*p)
        }
        RingKind::GaussianRational => Field::Gauss,
        RingKind::RatQuaternion => Field::Quat,
        RingKind::FiniteExtension { p, m, modulus, .. } => {
            let base = Arc::new(GfField::new(*p, *m)?);
            if modulus.iter().any(|&c| c >= base.order())
                || modulus.last() != Some(&1)
                || !gfpoly::is_irreducible(&base, modulus)
            {
                return Err(Error::IncompatibleSpec(
                    "extension modulus must be monic irreducible".into(),
                ));
            }
            Field::Ext(Arc::new(ExtField::new(base, modulus.clone())))
        }
    };
    let ctx = RingCtx(Arc::new(CtxInner {
        kind,
        field,
        sigma: SigmaSpec::Identity,
        delta: DeltaSpec::Zero,
        inner_inv: None,
        checked: false,
    }));
    let inner_inv = match &sigma {
        SigmaSpec::Identity => None,
        SigmaSpec::Frobenius(_) => {
            if !matches!(ctx.0.field, Field::Gf(_) | Field::Func(_) | Field::Ext(_)) {
                return Err(Error::IncompatibleSpec(
                    "Frobenius needs a field of positive characteristic".into(),
                ));
            }
            None
        }
        SigmaSpec::ComplexConj => {
            if !matches!(ctx.0.field, Field::Gauss) {
                return Err(Error::IncompatibleSpec(
                    "complex conjugation needs the Gaussian rationals".into(),
                ));
            }
            None
        }
        SigmaSpec::Inner(u) => {
            ctx.check_member(u)?;
            Some(
                ctx.inv(u)
                    .map_err(|_| Error::IncompatibleSpec("inner automorphism by zero".into()))?,
            )
        }
    };
    match &delta {
        DeltaSpec::Zero => {}
        DeltaSpec::InnerL(b) => ctx.check_member(b)?,
        DeltaSpec::FormalDeriv => {
            if !matches!(ctx.0.field, Field::Func(_)) {
                return Err(Error::IncompatibleSpec(
                    "d/dt needs a rational function field".into(),
                ));
            }
        }
    }
    let CtxInner { kind, field, .. } = Arc::try_unwrap(ctx.0).expect("fresh context is unshared");
    let ctx = RingCtx(Arc::new(CtxInner {
        kind,
        field,
        sigma,
        delta,
        inner_inv,
        checked: !unchecked,
    }));
    if !unchecked {
        ctx.validate(seed)?;
    }
    Ok(ctx)
}

fn rat(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

impl RingCtx {
    pub fn kind(&self) -> &RingKind {
        &self.0.kind
    }

    pub fn sigma_spec(&self) -> &SigmaSpec {
        &self.0.sigma
    }

    pub fn delta_spec(&self) -> &DeltaSpec {
        &self.0.delta
    }

    pub fn is_checked(&self) -> bool {
        self.0.checked
    }

    pub fn is_commutative(&self) -> bool {
        !matches!(self.0.field, Field::Quat)
    }

    /// Number of elements for finite rings.
    pub fn order(&self) -> Option<u128> {
        match &self.0.field {
            Field::Gf(f) => Some(f.order() as u128),
            Field::Ext(e) => Some(e.order()),
            _ => None,
        }
    }

    pub fn characteristic(&self) -> u32 {
        match &self.0.field {
            Field::Gf(f) => f.characteristic(),
            Field::Func(p) => *p,
            Field::Ext(e) => e.base().characteristic(),
            Field::Gauss | Field::Quat => 0,
        }
    }

    /// Defining polynomial of the generator of GF(p^m), as text in the
    /// generator's name.
    pub fn field_modulus_text(&self) -> Option<String> {
        let f = self.gf_field()?;
        let name = self.gen_name();
        let terms: Vec<String> = f
            .modulus()
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, &c)| c != 0)
            .map(|(i, &c)| {
                let pw = match i {
                    0 => String::new(),
                    1 => name.to_string(),
                    _ => format!("{name}^{i}"),
                };
                match (c, i) {
                    (_, 0) => c.to_string(),
                    (1, _) => pw,
                    _ => format!("{c}*{pw}"),
                }
            })
            .collect();
        Some(terms.join(" + "))
    }

    pub(crate) fn gf_field(&self) -> Option<&Arc<GfField>> {
        match &self.0.field {
            Field::Gf(f) => Some(f),
            _ => None,
        }
    }

    pub(crate) fn ext_field(&self) -> Option<&Arc<ExtField>> {
        match &self.0.field {
            Field::Ext(e) => Some(e),
            _ => None,
        }
    }

    /// Whether σ is an automorphism (σ⁻¹ available).
    pub fn has_sigma_inverse(&self) -> bool {
        match (&self.0.sigma, &self.0.field) {
            (SigmaSpec::Frobenius(j), Field::Func(_)) => *j == 0,
            _ => true,
        }
    }

    pub fn require_sigma_inverse(&self) -> Result<()> {
        if self.has_sigma_inverse() {
            Ok(())
        } else {
            Err(Error::NoInverse)
        }
    }

    fn check_member(&self, a: &Elem) -> Result<()> {
        let ok = match (&self.0.field, a) {
            (Field::Gf(f), Elem::Gf(x)) => *x < f.order(),
            (Field::Func(_), Elem::Rat(_)) => true,
            (Field::Gauss, Elem::Gauss(_)) => true,
            (Field::Quat, Elem::Quat(_)) => true,
            (Field::Ext(e), Elem::Ext(v)) => {
                v.len() < e.modulus().len() && v.iter().all(|&c| c < e.base().order())
            }
            _ => false,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::CtxMismatch)
        }
    }

    /// Checks that an element belongs to this ring.
    pub fn ensure(&self, a: &Elem) -> Result<()> {
        self.check_member(a)
    }

    pub fn zero(&self) -> Elem {
        match &self.0.field {
            Field::Gf(_) => Elem::Gf(0),
            Field::Func(_) => Elem::Rat(RatFn::zero()),
            Field::Gauss => Elem::Gauss(Gauss::zero()),
            Field::Quat => Elem::Quat(Quat::zero()),
            Field::Ext(_) => Elem::Ext(Vec::new()),
        }
    }

    pub fn one(&self) -> Elem {
        self.from_int(1)
    }

    pub fn from_int(&self, n: i64) -> Elem {
        match &self.0.field {
            Field::Gf(f) => Elem::Gf(f.from_int(n)),
            Field::Func(p) => Elem::Rat(RatFn::from_poly(fpoly::constant(
                n.rem_euclid(*p as i64) as u32,
                *p,
            ))),
            Field::Gauss => Elem::Gauss(Gauss::new(rat(n, 1), rat(0, 1))),
            Field::Quat => {
                let mut q = Quat::zero();
                q.0[0] = rat(n, 1);
                Elem::Quat(q)
            }
            Field::Ext(e) => Elem::Ext(e.embed(e.base().from_int(n))),
        }
    }

    /// Embeds an integer given as a big integer.
    pub fn from_bigint(&self, n: &BigInt) -> Elem {
        match &self.0.field {
            Field::Gauss => {
                Elem::Gauss(Gauss::new(BigRational::from_integer(n.clone()), rat(0, 1)))
            }
            Field::Quat => {
                let mut q = Quat::zero();
                q.0[0] = BigRational::from_integer(n.clone());
                Elem::Quat(q)
            }
            _ => {
                let p = BigInt::from(self.characteristic());
                let r = ((n % &p) + &p) % &p;
                self.from_int(i64::try_from(r).expect("residue fits"))
            }
        }
    }

    /// The distinguished generator: w, t, i or y.
    pub fn generator(&self) -> Elem {
        match &self.0.field {
            Field::Gf(f) => Elem::Gf(f.generator()),
            Field::Func(_) => Elem::Rat(RatFn::from_poly(vec![0, 1])),
            Field::Gauss => Elem::Gauss(Gauss::new(rat(0, 1), rat(1, 1))),
            Field::Quat => Elem::Quat(Quat::basis(1)),
            Field::Ext(_) => Elem::Ext(vec![0, 1]),
        }
    }

    /// Quaternion unit 1, i, j, k for idx 0..4.
    pub fn quat_unit(&self, idx: usize) -> Option<Elem> {
        matches!(self.0.field, Field::Quat).then(|| Elem::Quat(Quat::basis(idx)))
    }

    /// Embeds a rational number (characteristic-zero rings only).
    pub fn from_rational(&self, r: &BigRational) -> Option<Elem> {
        match &self.0.field {
            Field::Gauss => Some(Elem::Gauss(Gauss::new(r.clone(), rat(0, 1)))),
            Field::Quat => {
                let mut q = Quat::zero();
                q.0[0] = r.clone();
                Some(Elem::Quat(q))
            }
            _ => None,
        }
    }

    pub fn is_zero(&self, a: &Elem) -> bool {
        match a {
            Elem::Gf(x) => *x == 0,
            Elem::Rat(r) => r.is_zero(),
            Elem::Gauss(g) => g.is_zero(),
            Elem::Quat(q) => q.is_zero(),
            Elem::Ext(v) => v.is_empty(),
        }
    }

    pub fn is_one(&self, a: &Elem) -> bool {
        *a == self.one()
    }

    pub fn add(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.field, a, b) {
            (Field::Gf(f), Elem::Gf(x), Elem::Gf(y)) => Elem::Gf(f.add(*x, *y)),
            (Field::Func(p), Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x.add(y, *p)),
            (Field::Gauss, Elem::Gauss(x), Elem::Gauss(y)) => Elem::Gauss(x.add(y)),
            (Field::Quat, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.add(y)),
            (Field::Ext(e), Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(e.add(x, y)),
            _ => panic!("element from a different ring"),
        }
    }

    pub fn neg(&self, a: &Elem) -> Elem {
        match (&self.0.field, a) {
            (Field::Gf(f), Elem::Gf(x)) => Elem::Gf(f.neg(*x)),
            (Field::Func(p), Elem::Rat(x)) => Elem::Rat(x.neg(*p)),
            (Field::Gauss, Elem::Gauss(x)) => Elem::Gauss(x.neg()),
            (Field::Quat, Elem::Quat(x)) => Elem::Quat(x.neg()),
            (Field::Ext(e), Elem::Ext(x)) => Elem::Ext(e.neg(x)),
            _ => panic!("element from a different ring"),
        }
    }

    pub fn sub(&self, a: &Elem, b: &Elem) -> Elem {
        self.add(a, &self.neg(b))
    }

    pub fn mul(&self, a: &Elem, b: &Elem) -> Elem {
        match (&self.0.field, a, b) {
            (Field::Gf(f), Elem::Gf(x), Elem::Gf(y)) => Elem::Gf(f.mul(*x, *y)),
            (Field::Func(p), Elem::Rat(x), Elem::Rat(y)) => Elem::Rat(x.mul(y, *p)),
            (Field::Gauss, Elem::Gauss(x), Elem::Gauss(y)) => Elem::Gauss(x.mul(y)),
            (Field::Quat, Elem::Quat(x), Elem::Quat(y)) => Elem::Quat(x.mul(y)),
            (Field::Ext(e), Elem::Ext(x), Elem::Ext(y)) => Elem::Ext(e.mul(x, y)),
            _ => panic!("element from a different ring"),
        }
    }

    pub fn inv(&self, a: &Elem) -> Result<Elem> {
        let r = match (&self.0.field, a) {
            (Field::Gf(f), Elem::Gf(x)) => f.inv(*x).map(Elem::Gf),
            (Field::Func(p), Elem::Rat(x)) => x.inv(*p).map(Elem::Rat),
            (Field::Gauss, Elem::Gauss(x)) => x.inv().map(Elem::Gauss),
            (Field::Quat, Elem::Quat(x)) => x.inv().map(Elem::Quat),
            (Field::Ext(e), Elem::Ext(x)) => e.inv(x).map(Elem::Ext),
            _ => panic!("element from a different ring"),
        };
        r.ok_or(Error::DivisionByZero)
    }

    /// a^n for n ≥ 0.
    pub fn pow(&self, a: &Elem, n: u64) -> Elem {
        let mut acc = self.one();
        let mut base = a.clone();
        let mut n = n;
        while n > 0 {
            if n & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            n >>= 1;
        }
        acc
    }

    fn frobenius(&self, a: &Elem, j: u32) -> Elem {
        match (&self.0.field, a) {
            (Field::Gf(f), Elem::Gf(x)) => Elem::Gf(f.frobenius(*x, j)),
            (Field::Func(p), Elem::Rat(x)) => Elem::Rat(x.frobenius(j, *p)),
            (Field::Ext(e), Elem::Ext(x)) => Elem::Ext(e.frobenius(x, j)),
            _ => panic!("Frobenius on a ring of characteristic zero"),
        }
    }

    /// Absolute degree of a finite field over its prime field.
    fn prime_degree(&self) -> Option<u32> {
        match &self.0.field {
            Field::Gf(f) => Some(f.degree()),
            Field::Ext(e) => Some(e.base().degree() * e.degree()),
            _ => None,
        }
    }

    pub fn sigma(&self, a: &Elem) -> Elem {
        match &self.0.sigma {
            SigmaSpec::Identity => a.clone(),
            SigmaSpec::Frobenius(j) => self.frobenius(a, *j),
            SigmaSpec::ComplexConj => match a {
                Elem::Gauss(g) => Elem::Gauss(g.conj()),
                _ => panic!("conjugation outside the Gaussian rationals"),
            },
            SigmaSpec::Inner(u) => {
                let ui = self.0.inner_inv.as_ref().expect("inner inverse cached");
                self.mul(&self.mul(u, a), ui)
            }
        }
    }

    pub fn sigma_inv(&self, a: &Elem) -> Result<Elem> {
        Ok(match &self.0.sigma {
            SigmaSpec::Identity => a.clone(),
            SigmaSpec::Frobenius(j) => match self.prime_degree() {
                Some(deg) => self.frobenius(a, (deg - j % deg) % deg),
                None if *j == 0 => a.clone(),
                None => return Err(Error::NoInverse),
            },
            SigmaSpec::ComplexConj => self.sigma(a),
            SigmaSpec::Inner(u) => {
                let ui = self.0.inner_inv.as_ref().expect("inner inverse cached");
                self.mul(&self.mul(ui, a), u)
            }
        })
    }

    /// σ^k for any integer k; negative powers need σ⁻¹.
    pub fn sigma_pow(&self, a: &Elem, k: i64) -> Result<Elem> {
        let mut out = a.clone();
        if k >= 0 {
            for _ in 0..k {
                out = self.sigma(&out);
            }
        } else {
            for _ in 0..(-k) {
                out = self.sigma_inv(&out)?;
            }
        }
        Ok(out)
    }

    pub fn delta(&self, a: &Elem) -> Elem {
        match &self.0.delta {
            DeltaSpec::Zero => self.zero(),
            DeltaSpec::InnerL(b) => self.sub(&self.mul(&self.sigma(a), b), &self.mul(b, a)),
            DeltaSpec::FormalDeriv => match (&self.0.field, a) {
                (Field::Func(p), Elem::Rat(x)) => Elem::Rat(x.derivative(*p)),
                _ => panic!("d/dt outside a function field"),
            },
        }
    }

    pub fn delta_is_zero(&self) -> bool {
        match &self.0.delta {
            DeltaSpec::Zero => true,
            DeltaSpec::InnerL(b) => self.is_zero(b),
            DeltaSpec::FormalDeriv => false,
        }
    }

    /// Reduced norm for quaternions and Gaussian rationals; the element itself otherwise.
    pub fn reduced_norm(&self, a: &Elem) -> Elem {
        match a {
            Elem::Quat(q) => {
                let mut n = Quat::zero();
                n.0[0] = q.norm();
                Elem::Quat(n)
            }
            _ => a.clone(),
        }
    }

    /// All elements of a finite ring, in index order.
    pub fn elements(&self) -> Option<Vec<Elem>> {
        match &self.0.field {
            Field::Gf(f) => Some((0..f.order()).map(Elem::Gf).collect()),
            Field::Ext(e) => Some(e.elements().map(Elem::Ext).collect()),
            _ => None,
        }
    }

    /// A pseudo-random element; small heights for the infinite rings.
    pub fn random_elem<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        let small = |rng: &mut R| rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        match &self.0.field {
            Field::Gf(f) => Elem::Gf(rng.gen_range(0..f.order())),
            Field::Func(p) => {
                let p = *p;
                let nd = rng.gen_range(0..=3);
                let num: Vec<u32> = (0..=nd).map(|_| rng.gen_range(0..p)).collect();
                let dd = rng.gen_range(0..=2);
                let mut den: Vec<u32> = (0..dd).map(|_| rng.gen_range(0..p)).collect();
                den.push(1);
                let mut num = num;
                fpoly::trim(&mut num);
                Elem::Rat(RatFn::new(num, den, p))
            }
            Field::Gauss => Elem::Gauss(Gauss::new(small(rng), small(rng))),
            Field::Quat => Elem::Quat(Quat(std::array::from_fn(|_| small(rng)))),
            Field::Ext(e) => {
                let q = e.base().order();
                let mut v: Vec<u32> = (0..e.degree()).map(|_| rng.gen_range(0..q)).collect();
                gfpoly::trim(&mut v);
                Elem::Ext(v)
            }
        }
    }

    /// A pseudo-random nonzero element.
    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        loop {
            let a = self.random_elem(rng);
            if !self.is_zero(&a) {
                return a;
            }
        }
    }

    fn deterministic_samples(&self) -> Vec<Elem> {
        let mut out = vec![self.zero(), self.one(), self.generator()];
        match &self.0.field {
            Field::Quat => {
                out.push(Elem::Quat(Quat::basis(2)));
                out.push(Elem::Quat(Quat::basis(3)));
            }
            Field::Func(p) => {
                out.push(Elem::Rat(RatFn::new(vec![1], vec![0, 1], *p)));
                out.push(Elem::Rat(RatFn::from_poly(vec![1, 0, 1])));
            }
            _ => {}
        }
        out.push(self.from_int(-1));
        out.push(self.add(&self.generator(), &self.one()));
        out
    }

    fn validate(&self, seed: u64) -> Result<()> {
        let fail = |map, law, a: &Elem, b: &Elem| Error::AxiomViolation {
            map,
            law,
            a: self.fmt_elem(a),
            b: self.fmt_elem(b),
        };
        let one = self.one();
        if self.sigma(&one) != one {
            return Err(fail(AxiomMap::Sigma, "sigma(1) = 1", &one, &one));
        }
        let pairs: Vec<(Elem, Elem)> = match self.order().filter(|&q| q <= EXHAUSTIVE_LIMIT) {
            Some(_) => {
                let all = self.elements().expect("finite ring");
                all.iter()
                    .flat_map(|a| all.iter().map(move |b| (a.clone(), b.clone())))
                    .collect()
            }
            None => {
                let det = self.deterministic_samples();
                let mut pairs: Vec<(Elem, Elem)> = det
                    .iter()
                    .flat_map(|a| det.iter().map(move |b| (a.clone(), b.clone())))
                    .collect();
                let mut rng = ChaCha8Rng::seed_from_u64(seed);
                while pairs.len() < SAMPLE_PAIRS.max(det.len() * det.len()) {
                    pairs.push((self.random_elem(&mut rng), self.random_elem(&mut rng)));
                }
                pairs
            }
        };
        for (a, b) in &pairs {
            let (sa, sb) = (self.sigma(a), self.sigma(b));
            if self.sigma(&self.add(a, b)) != self.add(&sa, &sb) {
                return Err(fail(
                    AxiomMap::Sigma,
                    "sigma(a+b) = sigma(a)+sigma(b)",
                    a,
                    b,
                ));
            }
            if self.sigma(&self.mul(a, b)) != self.mul(&sa, &sb) {
                return Err(fail(AxiomMap::Sigma, "sigma(ab) = sigma(a)sigma(b)", a, b));
            }
            if !self.is_zero(a) && self.is_zero(&sa) {
                return Err(fail(AxiomMap::Sigma, "injectivity", a, b));
            }
            if self.has_sigma_inverse() && self.sigma_inv(&sa)? != *a {
                return Err(fail(AxiomMap::Sigma, "sigma^-1(sigma(a)) = a", a, b));
            }
            let (da, db) = (self.delta(a), self.delta(b));
            if self.delta(&self.add(a, b)) != self.add(&da, &db) {
                return Err(fail(
                    AxiomMap::Delta,
                    "delta(a+b) = delta(a)+delta(b)",
                    a,
                    b,
                ));
            }
            let rhs = self.add(&self.mul(&sa, &db), &self.mul(&da, b));
            if self.delta(&self.mul(a, b)) != rhs {
                return Err(fail(
                    AxiomMap::Delta,
                    "delta(ab) = sigma(a)delta(b)+delta(a)b",
                    a,
                    b,
                ));
            }
        }
        Ok(())
    }

    /// Canonical text form of an element.
    pub fn fmt_elem(&self, a: &Elem) -> String {
        match (&self.0.field, a) {
            (Field::Gf(f), Elem::Gf(x)) => fmt_gf(f, *x, self.gen_name()),
            (Field::Func(_), Elem::Rat(r)) => funcfield::fmt_ratfn(r, self.var_name()),
            (Field::Gauss, Elem::Gauss(g)) => {
                quat::fmt_units(&[g.re.clone(), g.im.clone()], &["", "i"])
            }
            (Field::Quat, Elem::Quat(q)) => quat::fmt_units(&q.0, &["", "i", "j", "k"]),
            (Field::Ext(e), Elem::Ext(v)) => fmt_ext(e, v, self.gen_name(), self.var_name()),
            _ => panic!("element from a different ring"),
        }
    }

    /// Name of the finite field generator (`w` by default).
    pub fn gen_name(&self) -> &str {
        match &self.0.kind {
            RingKind::FiniteField { gen, .. } | RingKind::FiniteExtension { gen, .. } => gen,
            _ => "w",
        }
    }

    /// Name of the function field or extension variable.
    pub fn var_name(&self) -> &str {
        match &self.0.kind {
            RingKind::FuncField { var, .. } | RingKind::FiniteExtension { var, .. } => var,
            _ => "t",
        }
    }

    /// The base field generator w, for extension rings.
    pub fn gf_base_generator(&self) -> Option<Elem> {
        self.ext_field().map(|e| Elem::Gf(e.base().generator()))
    }

    /// Builds an extension element from base coordinates (ascending).
    pub fn ext_elem(&self, coords: &[Elem]) -> Option<Elem> {
        let e = self.ext_field()?;
        let mut v: Vec<u32> = coords
            .iter()
            .map(|c| match c {
                Elem::Gf(x) => Some(*x),
                _ => None,
            })
            .collect::<Option<_>>()?;
        gfpoly::trim(&mut v);
        Some(Elem::Ext(gfpoly::rem(e.base(), &v, e.modulus())))
    }

    /// A display wrapper for an element.
    pub fn show<'a>(&'a self, a: &'a Elem) -> ElemDisplay<'a> {
        ElemDisplay { ctx: self, elem: a }
    }
}

pub struct ElemDisplay<'a> {
    ctx: &'a RingCtx,
    elem: &'a Elem,
}

impl fmt::Display for ElemDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ctx.fmt_elem(self.elem))
    }
}

fn fmt_gf(f: &GfField, x: u32, gen: &str) -> String {
    if let Some(v) = f.prime_value(x) {
        return v.to_string();
    }
    match f.log(x) {
        Some(1) => gen.to_string(),
        Some(k) => format!("{gen}^{k}"),
        None => "0".into(),
    }
}

fn fmt_ext(e: &ExtField, v: &[u32], gen: &str, var: &str) -> String {
    if v.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in v.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let cs = fmt_gf(e.base(), c, gen);
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (i, c) {
            (0, _) => cs,
            (_, 1) => mono,
            _ => format!("{cs}*{mono}"),
        });
    }
    parts.join("+")
}
