//! Right and left (σ,δ)-Sylvester matrices, resultants, the gcd criteria
//! and Bézout identities.

use crate::dlinalg::{self, coset_eq, ddet, ddet_eq, ddet_opposite, DDetValue, DMatrix};
use crate::error::{Error, Result};
use crate::rings::{Elem, RingCtx};
use crate::skewpoly::{comp_c_table, comp_t_table, gcld, gcrd, xgcld, xgcrd, SkewPoly};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Side {
    Right,
    Left,
}

impl std::str::FromStr for Side {
    type Err = Error;

    fn from_str(s: &str) -> Result<Side> {
        match s {
            "right" | "r" => Ok(Side::Right),
            "left" | "l" => Ok(Side::Left),
            _ => Err(Error::Parse {
                pos: 0,
                expected: "right or left".into(),
            }),
        }
    }
}

fn degrees(f: &SkewPoly, g: &SkewPoly) -> Result<(usize, usize)> {
    f.same_ctx(g)?;
    match (f.deg(), g.deg()) {
        (Some(m), Some(n)) if m >= 1 && n >= 1 => Ok((m, n)),
        _ => Err(Error::DegreeTooSmall(
            "both polynomials need degree at least 1".into(),
        )),
    }
}

/// Rows x^p·h for p < count, as coefficient rows of the given width.
fn right_block(h: &SkewPoly, count: usize, width: usize) -> Vec<Vec<Elem>> {
    let ctx = h.ctx();
    let mut rows = vec![vec![ctx.zero(); width]; count];
    if count == 0 {
        return rows;
    }
    for (i, a) in h.coeffs().iter().enumerate() {
        if ctx.is_zero(a) {
            continue;
        }
        // x^p·a = Σ_l 𝒞_{p−l,l}(a) x^l, which lands in column i + l
        let t = comp_c_table(ctx, count - 1, count - 1, a);
        for (p, row) in rows.iter_mut().enumerate() {
            for l in 0..=p {
                let c = &t[p - l][l];
                if !ctx.is_zero(c) {
                    row[i + l] = ctx.add(&row[i + l], c);
                }
            }
        }
    }
    rows
}

/// Rows of right-form coefficients of h·x^p for p < count.
fn left_block(h: &SkewPoly, count: usize, width: usize) -> Result<Vec<Vec<Elem>>> {
    let ctx = h.ctx();
    let rf = h.to_right_coeffs()?;
    let mut rows = vec![vec![ctx.zero(); width]; count];
    if count == 0 {
        return Ok(rows);
    }
    for (i, a) in rf.rcoeffs().iter().enumerate() {
        if ctx.is_zero(a) {
            continue;
        }
        // 𝒜·x^p = Σ_l x^l (−1)^{p+l} 𝒯_{p−l,l}(𝒜)
        let t = comp_t_table(ctx, count - 1, count - 1, a)?;
        for (p, row) in rows.iter_mut().enumerate() {
            for l in 0..=p {
                let mut c = t[p - l][l].clone();
                if ctx.is_zero(&c) {
                    continue;
                }
                if (p + l) % 2 == 1 {
                    c = ctx.neg(&c);
                }
                row[i + l] = ctx.add(&row[i + l], &c);
            }
        }
    }
    Ok(rows)
}

/// The (m+n)×(m+n) Sylvester matrix of f (degree m) and g (degree n).
///
/// Column q holds the coefficient of x^q. On the right side the first n
/// rows are x^p·f and the last m rows x^p·g; on the left side they are the
/// right-form coefficients of f·x^p and g·x^p.
pub fn sylvester(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<DMatrix> {
    let (m, n) = degrees(f, g)?;
    let width = m + n;
    let mut rows = match side {
        Side::Right => right_block(f, n, width),
        Side::Left => left_block(f, n, width)?,
    };
    rows.extend(match side {
        Side::Right => right_block(g, m, width),
        Side::Left => left_block(g, m, width)?,
    });
    DMatrix::from_rows(f.ctx(), rows)
}

/// The right or left (σ,δ)-resultant.
///
/// The left resultant is taken over the opposite ring, since the left
/// system is a right linear relation among the rows.
pub fn resultant(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<DDetValue> {
    let s = sylvester(f, g, side)?;
    match side {
        Side::Right => ddet(&s),
        Side::Left => ddet_opposite(&s),
    }
}

/// The matrix of x^p·b₀ (p < m) used when g = b₀ is a nonzero constant.
pub fn sylvester_constant(f: &SkewPoly, b0: &Elem) -> Result<DMatrix> {
    let ctx = f.ctx();
    let m = f
        .deg()
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::DegreeTooSmall("f needs degree at least 1".into()))?;
    if ctx.is_zero(b0) {
        return Err(Error::InvalidInput("the constant must be nonzero".into()));
    }
    DMatrix::from_rows(ctx, right_block(&SkewPoly::constant(ctx, b0.clone()), m, m))
}

/// b₀σ(b₀)⋯σ^{m−1}(b₀).
pub fn constant_resultant_formula(ctx: &RingCtx, b0: &Elem, m: usize) -> Elem {
    let mut acc = ctx.one();
    let mut s = b0.clone();
    for _ in 0..m {
        acc = ctx.mul(&acc, &s);
        s = ctx.sigma(&s);
    }
    acc
}

/// Truth values of the equivalent gcd conditions for one side.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CriteriaReport {
    pub side: Side,
    pub resultant_zero: bool,
    pub gcd_nonunit: bool,
    pub no_bezout_unit: bool,
    pub ideal_proper: bool,
}

impl CriteriaReport {
    pub fn all_equal(&self) -> bool {
        let v = self.resultant_zero;
        self.gcd_nonunit == v && self.no_bezout_unit == v && self.ideal_proper == v
    }
}

/// e₀ = (1, 0, …, 0): the coefficient row of the constant 1.
fn unit_row(ctx: &RingCtx, width: usize) -> Vec<Elem> {
    (0..width)
        .map(|k| if k == 0 { ctx.one() } else { ctx.zero() })
        .collect()
}

/// Whether c·f + d·g = 1 has a solution with deg c < deg g, deg d < deg f.
pub fn bezout_unit_exists(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<bool> {
    let s = sylvester(f, g, side)?;
    let aug = s.with_row(&unit_row(f.ctx(), s.cols()))?;
    Ok(match side {
        Side::Right => dlinalg::rank(&aug) == dlinalg::rank(&s),
        Side::Left => dlinalg::right_row_rank(&aug) == dlinalg::right_row_rank(&s),
    })
}

/// Evaluates every criterion independently and checks that they agree.
pub fn criteria(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<CriteriaReport> {
    let res = resultant(f, g, side)?;
    let (d, x) = match side {
        Side::Right => (gcrd(f, g)?, xgcrd(f, g)?),
        Side::Left => (gcld(f, g)?, xgcld(f, g)?),
    };
    let combo = match side {
        Side::Right => x.p.mul(f)?.add(&x.q.mul(g)?)?,
        Side::Left => f.mul(&x.p)?.add(&g.mul(&x.q)?)?,
    };
    if combo != x.d {
        return Err(Error::Inconsistent(
            "extended Euclid cofactors do not reproduce the gcd".into(),
        ));
    }
    let report = CriteriaReport {
        side,
        resultant_zero: res.is_zero(),
        gcd_nonunit: d.deg().is_some_and(|k| k >= 1),
        no_bezout_unit: !bezout_unit_exists(f, g, side)?,
        ideal_proper: x.d.deg() != Some(0),
    };
    if !report.all_equal() {
        return Err(Error::Inconsistent(format!(
            "gcd criteria disagree: {report:?}"
        )));
    }
    Ok(report)
}

pub fn criteria_right(f: &SkewPoly, g: &SkewPoly) -> Result<CriteriaReport> {
    criteria(f, g, Side::Right)
}

pub fn criteria_left(f: &SkewPoly, g: &SkewPoly) -> Result<CriteriaReport> {
    criteria(f, g, Side::Left)
}

/// deg gcrd (right) or deg gcld (left) as m + n minus the Sylvester rank.
pub fn gcd_degree_via_rank(f: &SkewPoly, g: &SkewPoly, side: Side) -> Result<usize> {
    let s = sylvester(f, g, side)?;
    let r = match side {
        Side::Right => dlinalg::rank(&s),
        Side::Left => dlinalg::right_row_rank(&s),
    };
    Ok(s.rows() - r)
}

pub fn gcrd_degree_via_rank(f: &SkewPoly, g: &SkewPoly) -> Result<usize> {
    gcd_degree_via_rank(f, g, Side::Right)
}

/// When the right resultant vanishes, nonzero c, d with c·f + d·g = 0,
/// deg c < deg g and deg d < deg f, read off a left kernel vector.
pub fn resultant_witness(f: &SkewPoly, g: &SkewPoly) -> Result<Option<(SkewPoly, SkewPoly)>> {
    let (m, n) = degrees(f, g)?;
    let s = sylvester(f, g, Side::Right)?;
    Ok(dlinalg::left_kernel_vector(&s).map(|y| {
        let ctx = f.ctx();
        (
            SkewPoly::new(ctx, y[..n].to_vec()),
            SkewPoly::new(ctx, y[n..n + m].to_vec()),
        )
    }))
}

/// A, B and R with A·f + B·g = R, the right resultant representative.
#[derive(Debug, Clone)]
pub struct Bezout {
    pub a: SkewPoly,
    pub b: SkewPoly,
    pub r: Elem,
}

pub fn bezout_resultant(f: &SkewPoly, g: &SkewPoly) -> Result<Bezout> {
    let (_, n) = degrees(f, g)?;
    let ctx = f.ctx();
    let s = sylvester(f, g, Side::Right)?;
    let r = match ddet(&s)? {
        DDetValue::Zero => return Err(Error::ZeroResultant),
        DDetValue::Coset { rep, .. } => rep,
    };
    let y = dlinalg::solve_row(&s, &unit_row(ctx, s.cols()))?;
    let a1 = SkewPoly::new(ctx, y[..n].to_vec());
    let b1 = SkewPoly::new(ctx, y[n..].to_vec());
    let a = a1.scale_left(&r);
    let b = b1.scale_left(&r);
    let lhs = a.mul(f)?.add(&b.mul(g)?)?;
    if lhs != SkewPoly::constant(ctx, r.clone()) {
        return Err(Error::Inconsistent(
            "Bezout identity does not reproduce the resultant".into(),
        ));
    }
    Ok(Bezout { a, b, r })
}

/// Outcome of the basic resultant identities; `None` where an identity
/// does not apply to the inputs.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct PropertyReport {
    /// R(g,f) against (−1)^{mn} R(f,g).
    pub swap: Option<bool>,
    /// R(−f,g) against (−1)^n R(f,g).
    pub negate: Option<bool>,
    /// For g = x − a: R(f,g) = 0 exactly when f(a) = 0 (and R(f,x) = f(0)).
    pub linear: Option<bool>,
    /// For g = b₀: R(f,b₀) against b₀σ(b₀)⋯σ^{m−1}(b₀).
    pub constant: Option<bool>,
    /// For δ = 0: R(cf,g) against N_n(c)·R(f,g).
    pub scalar: Option<bool>,
}

impl PropertyReport {
    pub fn all_hold(&self) -> bool {
        [
            self.swap,
            self.negate,
            self.linear,
            self.constant,
            self.scalar,
        ]
        .iter()
        .all(|v| v.unwrap_or(true))
    }
}

fn signed(ctx: &RingCtx, d: &DDetValue, odd: bool) -> DDetValue {
    match d {
        DDetValue::Coset {
            rep,
            sign_ambiguous,
        } if odd => DDetValue::Coset {
            rep: ctx.neg(rep),
            sign_ambiguous: *sign_ambiguous,
        },
        _ => d.clone(),
    }
}

/// Compares at the strongest level available: exact over fields, zero-ness
/// and reduced-norm coset otherwise.
fn same_value(ctx: &RingCtx, a: &DDetValue, b: &DDetValue) -> bool {
    if ctx.is_commutative() {
        a == b
    } else {
        ddet_eq(ctx, a, b)
    }
}

/// Checks the basic identities of the right resultant that apply to (f, g).
pub fn resultant_properties_check(f: &SkewPoly, g: &SkewPoly) -> Result<PropertyReport> {
    f.same_ctx(g)?;
    let ctx = f.ctx();
    let mut rep = PropertyReport::default();
    let m = f
        .deg()
        .filter(|&m| m >= 1)
        .ok_or_else(|| Error::DegreeTooSmall("f needs degree at least 1".into()))?;
    let Some(n) = g.deg() else {
        return Err(Error::InvalidInput("g must be nonzero".into()));
    };
    if n == 0 {
        let b0 = g.coeff(0);
        let d = ddet(&sylvester_constant(f, &b0)?)?;
        let expect = constant_resultant_formula(ctx, &b0, m);
        rep.constant = Some(match &d {
            DDetValue::Zero => false,
            DDetValue::Coset { rep, .. } => {
                if ctx.is_commutative() {
                    *rep == expect
                } else {
                    coset_eq(ctx, rep, &expect)
                }
            }
        });
        return Ok(rep);
    }
    let r = resultant(f, g, Side::Right)?;
    let r_swap = resultant(g, f, Side::Right)?;
    rep.swap = Some(same_value(ctx, &r_swap, &signed(ctx, &r, (m * n) % 2 == 1)));
    let r_neg = resultant(&f.neg(), g, Side::Right)?;
    rep.negate = Some(same_value(ctx, &r_neg, &signed(ctx, &r, n % 2 == 1)));
    if n == 1 {
        let gm = g.monic();
        let a = ctx.neg(&gm.coeff(0));
        let r_lin = resultant(f, &gm, Side::Right)?;
        let fa = crate::skewpoly::eval_right(f, &a)?;
        let mut ok = r_lin.is_zero() == ctx.is_zero(&fa);
        if ctx.is_zero(&a) {
            let expect = if ctx.is_zero(&fa) {
                DDetValue::Zero
            } else {
                DDetValue::Coset {
                    rep: fa.clone(),
                    sign_ambiguous: false,
                }
            };
            ok &= same_value(ctx, &r_lin, &expect) || ddet_eq(ctx, &r_lin, &expect);
        }
        rep.linear = Some(ok);
    }
    if ctx.delta_is_zero() {
        let c = sample_scalar(ctx);
        let r_c = resultant(&f.scale_left(&c), g, Side::Right)?;
        let norm = constant_resultant_formula(ctx, &c, n);
        let expect = match &r {
            DDetValue::Zero => DDetValue::Zero,
            DDetValue::Coset {
                rep,
                sign_ambiguous,
            } => DDetValue::Coset {
                rep: ctx.mul(&norm, rep),
                sign_ambiguous: *sign_ambiguous,
            },
        };
        rep.scalar = Some(same_value(ctx, &r_c, &expect));
    }
    Ok(rep)
}

/// A fixed nonzero non-identity scalar: generator + 1, or the generator.
fn sample_scalar(ctx: &RingCtx) -> Elem {
    let c = ctx.add(&ctx.generator(), &ctx.one());
    if ctx.is_zero(&c) {
        ctx.generator()
    } else {
        c
    }
}
