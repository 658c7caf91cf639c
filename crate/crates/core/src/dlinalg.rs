//! Exact linear algebra over division rings: elimination, Dieudonné
//! determinants, ranks and row solves.

use std::fmt;

use crate::error::{Error, Result};
use crate::rings::{Elem, RingCtx};

/// Largest size accepted by [`leibniz_det`].
pub const LEIBNIZ_LIMIT: usize = 8;

#[derive(Clone, PartialEq, Eq)]
pub struct DMatrix {
    ctx: RingCtx,
    rows: usize,
    cols: usize,
    data: Vec<Elem>,
}

impl fmt::Debug for DMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DMatrix[{}]", self.to_text())
    }
}

impl DMatrix {
    pub fn zeros(ctx: &RingCtx, rows: usize, cols: usize) -> DMatrix {
        DMatrix {
            ctx: ctx.clone(),
            rows,
            cols,
            data: vec![ctx.zero(); rows * cols],
        }
    }

    pub fn identity(ctx: &RingCtx, n: usize) -> DMatrix {
        let mut m = DMatrix::zeros(ctx, n, n);
        for i in 0..n {
            m.set(i, i, ctx.one());
        }
        m
    }

    pub fn from_rows(ctx: &RingCtx, rows: Vec<Vec<Elem>>) -> Result<DMatrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::InvalidInput(
                "matrix rows have different lengths".into(),
            ));
        }
        let data: Vec<Elem> = rows.into_iter().flatten().collect();
        for e in &data {
            ctx.ensure(e)?;
        }
        Ok(DMatrix {
            ctx: ctx.clone(),
            rows: r,
            cols: c,
            data,
        })
    }

    pub fn ctx(&self) -> &RingCtx {
        &self.ctx
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &Elem {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: Elem) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[Elem] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<Elem>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    /// Row vector times matrix, y·M.
    pub fn left_apply(&self, y: &[Elem]) -> Result<Vec<Elem>> {
        if y.len() != self.rows {
            return Err(Error::InvalidInput(
                "vector length does not match the row count".into(),
            ));
        }
        let ctx = &self.ctx;
        Ok((0..self.cols)
            .map(|j| {
                (0..self.rows).fold(ctx.zero(), |acc, i| {
                    ctx.add(&acc, &ctx.mul(&y[i], self.get(i, j)))
                })
            })
            .collect())
    }

    /// The entry strings, rows joined by `;` and entries by `,`.
    pub fn to_text(&self) -> String {
        (0..self.rows)
            .map(|i| {
                self.row(i)
                    .iter()
                    .map(|e| self.ctx.fmt_elem(e))
                    .collect::<Vec<_>>()
                    .join(",")
            })
            .collect::<Vec<_>>()
            .join(";")
    }

    /// Entry strings as nested vectors.
    pub fn to_strings(&self) -> Vec<Vec<String>> {
        (0..self.rows)
            .map(|i| self.row(i).iter().map(|e| self.ctx.fmt_elem(e)).collect())
            .collect()
    }

    /// A copy with one extra column appended on the right.
    pub fn augment(&self, col: &[Elem]) -> Result<DMatrix> {
        if col.len() != self.rows {
            return Err(Error::InvalidInput(
                "column length does not match the row count".into(),
            ));
        }
        let mut rows = self.to_rows();
        for (r, c) in rows.iter_mut().zip(col) {
            r.push(c.clone());
        }
        DMatrix::from_rows(&self.ctx, rows)
    }

    /// A copy with one extra row appended at the bottom.
    pub fn with_row(&self, row: &[Elem]) -> Result<DMatrix> {
        let mut rows = self.to_rows();
        rows.push(row.to_vec());
        DMatrix::from_rows(&self.ctx, rows)
    }
}

/// A Dieudonné determinant: zero, or a coset representative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DDetValue {
    Zero,
    Coset { rep: Elem, sign_ambiguous: bool },
}

impl DDetValue {
    pub fn is_zero(&self) -> bool {
        matches!(self, DDetValue::Zero)
    }

    pub fn rep(&self) -> Option<&Elem> {
        match self {
            DDetValue::Zero => None,
            DDetValue::Coset { rep, .. } => Some(rep),
        }
    }
}

/// Which side row operations multiply on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum OpSide {
    /// row_i − c·row_p: the left row space.
    Left,
    /// row_i − row_p·c: the right row space (elimination over the opposite ring).
    Right,
}

struct Elim {
    rows: Vec<Vec<Elem>>,
    pivots: usize,
    swaps: usize,
}

/// Column-by-column elimination taking the first nonzero remaining row as
/// pivot. Pivot rows are emitted in column order; a column without a pivot
/// (square case) contributes a zero row.
fn eliminate(m: &DMatrix, side: OpSide, zero_rows_for_missing: bool) -> Elim {
    let ctx = &m.ctx;
    let mut remaining: Vec<Vec<Elem>> = m.to_rows();
    let mut out = Vec::with_capacity(m.rows);
    let mut swaps = 0;
    let mut pivots = 0;
    for j in 0..m.cols {
        if remaining.is_empty() {
            break;
        }
        let Some(pi) = remaining.iter().position(|r| !ctx.is_zero(&r[j])) else {
            if zero_rows_for_missing {
                out.push(vec![ctx.zero(); m.cols]);
            }
            continue;
        };
        swaps += pi;
        let prow = remaining.remove(pi);
        let pinv = ctx.inv(&prow[j]).expect("pivot is nonzero");
        for r in remaining.iter_mut() {
            if ctx.is_zero(&r[j]) {
                continue;
            }
            let c = match side {
                OpSide::Left => ctx.mul(&r[j], &pinv),
                OpSide::Right => ctx.mul(&pinv, &r[j]),
            };
            for (k, pk) in prow.iter().enumerate().skip(j) {
                let t = match side {
                    OpSide::Left => ctx.mul(&c, pk),
                    OpSide::Right => ctx.mul(pk, &c),
                };
                r[k] = ctx.sub(&r[k], &t);
            }
        }
        out.push(prow);
        pivots += 1;
    }
    if !zero_rows_for_missing {
        out.extend(remaining);
    }
    Elim {
        rows: out,
        pivots,
        swaps,
    }
}

/// Upper-triangular form by left row operations and the swap count.
pub fn triangularize(m: &DMatrix) -> Result<(DMatrix, usize)> {
    if !m.is_square() {
        return Err(Error::InvalidInput(
            "triangularize needs a square matrix".into(),
        ));
    }
    let e = eliminate(m, OpSide::Left, true);
    Ok((DMatrix::from_rows(&m.ctx, e.rows)?, e.swaps))
}

/// Upper-triangular form by right row operations (row_i − row_p·c).
pub fn triangularize_opposite(m: &DMatrix) -> Result<(DMatrix, usize)> {
    if !m.is_square() {
        return Err(Error::InvalidInput(
            "triangularize needs a square matrix".into(),
        ));
    }
    let e = eliminate(m, OpSide::Right, true);
    Ok((DMatrix::from_rows(&m.ctx, e.rows)?, e.swaps))
}

fn det_from_triangle(ctx: &RingCtx, u: &DMatrix, swaps: usize, reversed: bool) -> DDetValue {
    let n = u.rows;
    if (0..n).any(|i| ctx.is_zero(u.get(i, i))) {
        return DDetValue::Zero;
    }
    let order: Vec<usize> = if reversed {
        (0..n).rev().collect()
    } else {
        (0..n).collect()
    };
    let mut rep = order
        .iter()
        .fold(ctx.one(), |acc, &i| ctx.mul(&acc, u.get(i, i)));
    let odd = swaps % 2 == 1;
    if ctx.is_commutative() {
        if odd {
            rep = ctx.neg(&rep);
        }
        DDetValue::Coset {
            rep,
            sign_ambiguous: false,
        }
    } else {
        DDetValue::Coset {
            rep,
            sign_ambiguous: odd,
        }
    }
}

/// Dieudonné determinant. Over commutative fields the representative is
/// the exact signed determinant.
pub fn ddet(m: &DMatrix) -> Result<DDetValue> {
    let (u, swaps) = triangularize(m)?;
    Ok(det_from_triangle(&m.ctx, &u, swaps, false))
}

/// Dieudonné determinant of M regarded over the opposite ring, i.e. with
/// right row operations. It vanishes exactly when the rows are right
/// linearly dependent.
pub fn ddet_opposite(m: &DMatrix) -> Result<DDetValue> {
    let (u, swaps) = triangularize_opposite(m)?;
    Ok(det_from_triangle(&m.ctx, &u, swaps, true))
}

/// Rank of the left row space (equal to the right column rank).
pub fn rank(m: &DMatrix) -> usize {
    eliminate(m, OpSide::Left, false).pivots
}

/// Rank of the right row space (equal to the left column rank).
pub fn right_row_rank(m: &DMatrix) -> usize {
    eliminate(m, OpSide::Right, false).pivots
}

/// Determinant by the Leibniz formula; commutative rings, n ≤ 8.
pub fn leibniz_det(m: &DMatrix) -> Result<Elem> {
    let ctx = &m.ctx;
    if !ctx.is_commutative() {
        return Err(Error::NonCommutativeRing);
    }
    if !m.is_square() {
        return Err(Error::InvalidInput(
            "determinant of a non-square matrix".into(),
        ));
    }
    let n = m.rows;
    if n > LEIBNIZ_LIMIT {
        return Err(Error::TooLarge(format!(
            "Leibniz expansion of size {n} > {LEIBNIZ_LIMIT}"
        )));
    }
    let mut perm: Vec<usize> = (0..n).collect();
    let mut total = ctx.zero();
    let mut sign_even = true;
    // Heap's algorithm: each step is one transposition.
    let mut c = vec![0usize; n];
    let term = |perm: &[usize]| {
        perm.iter()
            .enumerate()
            .fold(ctx.one(), |acc, (i, &j)| ctx.mul(&acc, m.get(i, j)))
    };
    total = ctx.add(&total, &term(&perm));
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign_even = !sign_even;
            let t = term(&perm);
            total = if sign_even {
                ctx.add(&total, &t)
            } else {
                ctx.sub(&total, &t)
            };
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
    Ok(total)
}

/// Inverse by Gauss–Jordan with left row operations.
pub fn inverse(b: &DMatrix) -> Result<DMatrix> {
    if !b.is_square() {
        return Err(Error::InvalidInput("inverse of a non-square matrix".into()));
    }
    let ctx = &b.ctx;
    let n = b.rows;
    let mut a = b.to_rows();
    let mut e = DMatrix::identity(ctx, n).to_rows();
    for j in 0..n {
        let p = (j..n)
            .find(|&i| !ctx.is_zero(&a[i][j]))
            .ok_or(Error::SingularMatrix)?;
        a.swap(j, p);
        e.swap(j, p);
        let inv = ctx.inv(&a[j][j])?;
        for k in 0..n {
            a[j][k] = ctx.mul(&inv, &a[j][k]);
            e[j][k] = ctx.mul(&inv, &e[j][k]);
        }
        for i in 0..n {
            if i == j || ctx.is_zero(&a[i][j]) {
                continue;
            }
            let c = a[i][j].clone();
            for k in 0..n {
                let ta = ctx.mul(&c, &a[j][k]);
                let te = ctx.mul(&c, &e[j][k]);
                a[i][k] = ctx.sub(&a[i][k], &ta);
                e[i][k] = ctx.sub(&e[i][k], &te);
            }
        }
    }
    DMatrix::from_rows(ctx, e)
}

/// The unique y with y·B = c.
pub fn solve_row(b: &DMatrix, c: &[Elem]) -> Result<Vec<Elem>> {
    if c.len() != b.cols {
        return Err(Error::InvalidInput(
            "right-hand side length does not match".into(),
        ));
    }
    inverse(b)?.left_apply(c)
}

/// A nonzero y with y·M = 0, if the rows are left dependent.
pub fn left_kernel_vector(m: &DMatrix) -> Option<Vec<Elem>> {
    let ctx = &m.ctx;
    let (r, c) = (m.rows, m.cols);
    let mut rows: Vec<Vec<Elem>> = (0..r)
        .map(|i| {
            let mut row = m.row(i).to_vec();
            row.extend((0..r).map(|k| if k == i { ctx.one() } else { ctx.zero() }));
            row
        })
        .collect();
    let mut done = vec![false; r];
    for j in 0..c {
        let Some(p) = (0..r).find(|&i| !done[i] && !ctx.is_zero(&rows[i][j])) else {
            continue;
        };
        done[p] = true;
        let pinv = ctx.inv(&rows[p][j]).expect("pivot is nonzero");
        for i in 0..r {
            if done[i] || ctx.is_zero(&rows[i][j]) {
                continue;
            }
            let f = ctx.mul(&rows[i][j], &pinv);
            for k in j..c + r {
                let t = ctx.mul(&f, &rows[p][k]);
                rows[i][k] = ctx.sub(&rows[i][k], &t);
            }
        }
    }
    (0..r).find(|&i| !done[i]).map(|i| rows[i][c..].to_vec())
}

/// Equality of Dieudonné cosets of nonzero u, v.
pub fn coset_eq(ctx: &RingCtx, u: &Elem, v: &Elem) -> bool {
    if ctx.is_commutative() {
        u == v
    } else {
        ctx.reduced_norm(u) == ctx.reduced_norm(v)
    }
}

/// Equality of two determinant values, cosets compared with [`coset_eq`].
pub fn ddet_eq(ctx: &RingCtx, a: &DDetValue, b: &DDetValue) -> bool {
    match (a, b) {
        (DDetValue::Zero, DDetValue::Zero) => true,
        (DDetValue::Coset { rep: x, .. }, DDetValue::Coset { rep: y, .. }) => coset_eq(ctx, x, y),
        _ => false,
    }
}

#[cfg(test)]
mod tests;
