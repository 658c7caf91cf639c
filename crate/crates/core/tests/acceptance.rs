//! Acceptance checks: one PASS/FAIL line per criterion.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use skewres::deriv::{self, PointSeq};
use skewres::dlinalg::{self, DDetValue, DMatrix};
use skewres::extend;
use skewres::parse::{parse_elem, parse_matrix, parse_poly, parse_ring, parse_seq};
use skewres::resultant::{self, sylvester, Side};
use skewres::rings::DEFAULT_SEED;
use skewres::skewpoly::{
    comp_c, comp_c_enum, comp_c_table, conj_left, conj_right, eval_left, eval_right, gcrd, lcrm,
};
use skewres::{Elem, RingCtx, SkewPoly};

type Check = Result<String, String>;

macro_rules! ensure {
    ($cond:expr, $($msg:tt)+) => {
        if !$cond {
            return Err(format!($($msg)+));
        }
    };
}

fn ring(r: &str, s: &str, d: &str) -> RingCtx {
    parse_ring(r, s, d, false, DEFAULT_SEED).unwrap()
}

fn poly(ctx: &RingCtx, s: &str) -> SkewPoly {
    parse_poly(ctx, s).unwrap()
}

fn mat(ctx: &RingCtx, s: &str) -> DMatrix {
    parse_matrix(ctx, s).unwrap()
}

fn random_poly(ctx: &RingCtx, rng: &mut ChaCha8Rng, deg: usize) -> SkewPoly {
    let mut c: Vec<Elem> = (0..deg).map(|_| ctx.random_elem(rng)).collect();
    c.push(ctx.random_nonzero(rng));
    SkewPoly::new(ctx, c)
}

fn random_monic(ctx: &RingCtx, rng: &mut ChaCha8Rng, deg: usize) -> SkewPoly {
    let mut c: Vec<Elem> = (0..deg).map(|_| ctx.random_elem(rng)).collect();
    c.push(ctx.one());
    SkewPoly::new(ctx, c)
}

/// A pair of degree ≤ max_deg, sharing a planted right factor when `planted`.
fn random_pair(
    ctx: &RingCtx,
    rng: &mut ChaCha8Rng,
    max_deg: usize,
    planted: bool,
) -> (SkewPoly, SkewPoly) {
    if planted {
        let k = rng.gen_range(1..max_deg);
        let h = random_monic(ctx, rng, k);
        let a = {
            let d = rng.gen_range(0..=max_deg - k);
            random_poly(ctx, rng, d)
        };
        let b = {
            let d = rng.gen_range(0..=max_deg - k);
            random_poly(ctx, rng, d)
        };
        (a.mul(&h).unwrap(), b.mul(&h).unwrap())
    } else {
        let m = rng.gen_range(1..=max_deg);
        let n = rng.gen_range(1..=max_deg);
        (random_poly(ctx, rng, m), random_poly(ctx, rng, n))
    }
}

fn c1() -> Check {
    let ctx = ring("gf(4)", "frob^1", "inner(w)");
    let (a, b) = (poly(&ctx, "w*x"), poly(&ctx, "w^2*x"));
    let ab = a.mul(&b).map_err(|e| e.to_string())?.to_text();
    let ba = b.mul(&a).map_err(|e| e.to_string())?.to_text();
    ensure!(ab == "w^2*x^2 + w^2*x", "(wx)(w^2x) = {ab}");
    ensure!(ba == "w*x^2 + x", "(w^2x)(wx) = {ba}");
    Ok(format!("(wx)(w^2x) = {ab}; (w^2x)(wx) = {ba}"))
}

fn c2() -> Check {
    let ctx = ring("gf(4)", "frob^1", "inner(w)");
    let w = ctx.generator();
    let v = ctx.fmt_elem(&comp_c(&ctx, 1, 2, &w));
    ensure!(v == "w^2", "C(1,2,w) = {v}");
    let mut n = 0;
    for a in ctx.elements().unwrap() {
        let t = comp_c_table(&ctx, 6, 6, &a);
        for d in 0..=6usize {
            for s in 0..=6 - d {
                let e = comp_c_enum(&ctx, d as i64, s as i64, &a).map_err(|e| e.to_string())?;
                ensure!(
                    t[d][s] == e,
                    "kernel mismatch at a = {}, d = {d}, s = {s}",
                    ctx.fmt_elem(&a)
                );
                n += 1;
            }
        }
    }
    Ok(format!(
        "C(1,2,w) = w^2; {n} kernel values agree with enumeration"
    ))
}

fn c3() -> Check {
    let ctx = ring("gauss", "conj", "inner(-1)");
    let (f, g) = (poly(&ctx, "x^2 + 1"), poly(&ctx, "x^2 + i"));
    let fg = f.mul(&g).unwrap().to_text();
    let gf = g.mul(&f).unwrap().to_text();
    ensure!(fg == "x^4 + (1+i)*x^2 - 4*i*x + 5*i", "fg = {fg}");
    ensure!(gf == "x^4 + (1+i)*x^2 + i", "gf = {gf}");
    Ok(format!("fg = {fg}; gf = {gf}"))
}

fn c4() -> Check {
    let ctx = ring("quat", "inner(i)", "zero");
    let f = poly(&ctx, "x^4 + k*x^3 - j*x - i");
    let g = poly(&ctx, "x^3 + j");
    let s = sylvester(&f, &g, Side::Right).map_err(|e| e.to_string())?;
    let m = mat(
        &ctx,
        "-i,-j,0,k,1,0,0; 0,-i,j,0,-k,1,0; 0,0,-i,-j,0,k,1; j,0,0,1,0,0,0; \
         0,-j,0,0,1,0,0; 0,0,j,0,0,1,0; 0,0,0,-j,0,0,1",
    );
    ensure!(s == m, "Sylvester matrix differs: {}", s.to_text());
    let (e, _) = dlinalg::triangularize(&s).map_err(|e| e.to_string())?;
    let diag: Vec<String> = (0..7).map(|i| ctx.fmt_elem(e.get(i, i))).collect();
    ensure!(
        diag == ["-i", "-i", "-i", "i", "0", "0", "0"],
        "diagonal {diag:?}"
    );
    let zero_rows: Vec<bool> = (0..7)
        .map(|i| e.row(i).iter().all(|c| ctx.is_zero(c)))
        .collect();
    ensure!(
        zero_rows == [false, false, false, false, true, true, true],
        "zero rows {zero_rows:?}"
    );
    ensure!(
        dlinalg::ddet(&s).unwrap() == DDetValue::Zero,
        "ddet is not zero"
    );
    let rk = dlinalg::rank(&s);
    ensure!(rk == 4, "rank {rk}");
    let via = resultant::gcrd_degree_via_rank(&f, &g).unwrap();
    ensure!(via == 3, "degree via rank {via}");
    let d = gcrd(&f, &g).unwrap().to_text();
    ensure!(d == "x^3 + j", "gcrd {d}");
    Ok("matrix and triangular form match; ddet zero; rank 4; gcrd x^3 + j".into())
}

fn c5() -> Check {
    for t in ["0", "1", "w", "w^2"] {
        let ctx = ring("gf(4)", "frob^1", &format!("inner({t})"));
        let r = resultant::resultant(
            &poly(&ctx, "x^2 + w^2*x + w"),
            &poly(&ctx, "x^2 + w*x + w^2"),
            Side::Right,
        )
        .map_err(|e| e.to_string())?;
        ensure!(
            r.is_zero(),
            "right resultant of (f1, g1) nonzero for t = {t}"
        );
    }
    let ctx = ring("gf(4)", "frob^1", "inner(w)");
    let (f2, g2) = (poly(&ctx, "(x+1)*(x+w)"), poly(&ctx, "(x+1)*(x+w^2)"));
    let r = resultant::resultant(&f2, &g2, Side::Right).unwrap();
    ensure!(
        r.rep() == Some(&parse_elem(&ctx, "w^2").unwrap()),
        "right resultant of (f2, g2) is {r:?}"
    );
    let s = sylvester(&f2, &g2, Side::Left).unwrap();
    ensure!(
        s == mat(&ctx, "w,w^2,1,0; w,1,w,1; w^2,w,1,0; w,0,w^2,1"),
        "left matrix {}",
        s.to_text()
    );
    ensure!(
        resultant::resultant(&f2, &g2, Side::Left)
            .unwrap()
            .is_zero(),
        "left resultant nonzero"
    );
    Ok("R(f1,g1) = 0 for all four t; R(f2,g2) = w^2; left matrix matches, left resultant 0".into())
}

fn c6() -> Check {
    let ctx =
        parse_ring("ff(5,t)", "frob^1", "ddt", true, DEFAULT_SEED).map_err(|e| e.to_string())?;
    let s1 = sylvester(
        &poly(&ctx, "(1/t)*x^2 + (1/t)*x"),
        &poly(&ctx, "(x+t^2)*(x+1)"),
        Side::Right,
    )
    .unwrap();
    let e1 = mat(
        &ctx,
        "0,1/t,1/t,0; 0,4/t^2,(1+4*t^3)/t^5,1/t^5; t^2,t^2+1,1,0; 2*t,t^10+2*t,t^10+1,1",
    );
    ensure!(s1 == e1, "first matrix {}", s1.to_text());
    ensure!(
        dlinalg::ddet(&s1).unwrap().is_zero(),
        "first determinant nonzero"
    );
    let s2 = sylvester(
        &poly(&ctx, "(x+1)*((1/t)*x)"),
        &poly(&ctx, "(x+1)*(x+t^2)"),
        Side::Right,
    )
    .unwrap();
    let e2 = mat(
        &ctx,
        "0,(t+4)/t^2,1/t^5,0; 0,(2+4*t)/t^3,(t^5+4)/t^10,1/t^25; \
         t^2+2*t,t^10+1,1,0; 2*t+2,t^10+2*t^5,t^50+1,1",
    );
    ensure!(s2 == e2, "second matrix {}", s2.to_text());
    let k = parse_elem(
        &ctx,
        "(4*t^56 + 4*t^55 + 2*t^54 + t^26 + 2*t^25 + 3*t^24 + t^23 + 4*t^21 + 4*t^20 + 2*t^19 \
         + t^12 + 3*t^10 + 2*t^7 + 3*t^6 + t^5 + 2*t^4 + 3*t^3 + 3*t + 3)/t^30",
    )
    .unwrap();
    let d = dlinalg::ddet(&s2).unwrap();
    ensure!(d.rep() == Some(&k), "second determinant {d:?}");
    Ok("both matrices match; determinants 0 and k".into())
}

fn c7() -> Check {
    let ctx = ring("gauss", "conj", "inner(-1)");
    let f = poly(&ctx, "x^4 + (1+i)*x^2 - 4*i*x + 5*i");
    let g = poly(&ctx, "x^3 - i*x + 2*i");
    let s = sylvester(&f, &g, Side::Right).unwrap();
    ensure!(s.rows() == 7, "size {}", s.rows());
    ensure!(dlinalg::ddet(&s).unwrap().is_zero(), "resultant nonzero");
    let d = gcrd(&f, &g).unwrap().to_text();
    ensure!(d == "x^2 + i", "gcrd {d}");
    Ok("7x7 resultant 0; gcrd x^2 + i".into())
}

fn c8() -> Check {
    let ctx = ring("gauss", "conj", "inner(-1)");
    let (f1, f2, g) = (
        poly(&ctx, "x^2 + 1"),
        poly(&ctx, "x^2 + i"),
        poly(&ctx, "2*x^2 + x + 1"),
    );
    let r1 = resultant::resultant(&f1, &g, Side::Right).unwrap();
    let r2 = resultant::resultant(&f2, &g, Side::Right).unwrap();
    let (Some(a), Some(b)) = (r1.rep(), r2.rep()) else {
        return Err("a factor resultant vanished".into());
    };
    let prod = ctx.fmt_elem(&ctx.mul(a, b));
    let r12 = resultant::resultant(&f1.mul(&f2).unwrap(), &g, Side::Right).unwrap();
    let whole = r12
        .rep()
        .map(|r| ctx.fmt_elem(r))
        .unwrap_or_else(|| "0".into());
    ensure!(prod == "10+10*i", "product {prod}");
    ensure!(whole == "650+90*i", "R(f1 f2, g) = {whole}");
    Ok(format!("R(f1,g)R(f2,g) = {prod} != R(f1f2,g) = {whole}"))
}

fn c9() -> Check {
    let ctx = ring("quat", "inner(i)", "zero");
    let f = poly(&ctx, "x^4 - j*x^2 + 2*i - k");
    let seq = PointSeq::new(&ctx, parse_seq(&ctx, "1+j,1+j").unwrap()).unwrap();
    let d = deriv::delta_poly(&f, &seq, Side::Right).unwrap().to_text();
    ensure!(d == "x^2 + 2*x + 4 - 3*j", "derivative {d}");
    Ok(format!("derivative {d}"))
}

fn c10() -> Check {
    let ctx = ring("gf(9)", "frob^1", "zero");
    let f = poly(&ctx, "(x+1)*(x-1)");
    let one = ctx.one();
    let d =
        deriv::delta_poly(&f, &PointSeq::repeated(&ctx, &one, 1).unwrap(), Side::Right).unwrap();
    ensure!(d.to_text() == "x + 1", "derivative {d}");
    ensure!(
        resultant::resultant(&f, &d, Side::Right).unwrap().is_zero(),
        "R(f, Df) nonzero"
    );
    let m = deriv::multiplicity(&f, &one, Side::Right).map_err(|e| e.to_string())?;
    ensure!(m == 1, "multiplicity {m}");
    Ok("D f = x + 1, R(f, D f) = 0, multiplicity 1".into())
}

fn c11() -> Check {
    let ctx = ring("gf(4)", "frob^1", "inner(w)");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let (mut zero, mut nonzero) = (0, 0);
    for k in 0..600 {
        let (f, g) = random_pair(&ctx, &mut rng, 3, k % 3 == 0);
        let r = resultant::criteria(&f, &g, Side::Right).map_err(|e| format!("pair {k}: {e}"))?;
        let res_zero = resultant::resultant(&f, &g, Side::Right).unwrap().is_zero();
        let nonunit = gcrd(&f, &g).unwrap().deg().is_some_and(|d| d >= 1);
        let no_unit = !resultant::bezout_unit_exists(&f, &g, Side::Right).unwrap();
        ensure!(
            res_zero == nonunit && nonunit == no_unit && r.all_equal(),
            "pair {k}: {f} and {g}"
        );
        if res_zero {
            zero += 1;
        } else {
            nonzero += 1;
        }
    }
    ensure!(
        zero > 50 && nonzero > 50,
        "unbalanced sample: {zero} zero, {nonzero} nonzero"
    );
    Ok(format!("600 pairs agree ({zero} with a common factor)"))
}

fn c12() -> Check {
    let ctx = ring("gf(9)", "frob^1", "inner(w)");
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    let mut positive = 0;
    for k in 0..600 {
        let (f, g) = random_pair(&ctx, &mut rng, 4, k % 2 == 0);
        let via = resultant::gcrd_degree_via_rank(&f, &g).unwrap();
        let d = gcrd(&f, &g).unwrap().deg().unwrap();
        ensure!(via == d, "pair {k}: rank gives {via}, Euclid gives {d}");
        positive += (d > 0) as usize;
    }
    Ok(format!(
        "600 pairs agree ({positive} with positive gcrd degree)"
    ))
}

fn c13() -> Check {
    let rings = [
        ring("gf(9)", "frob^1", "inner(w)"),
        ring("gf(4)", "frob^1", "inner(w)"),
        ring("gauss", "conj", "inner(-1)"),
        ring("quat", "inner(i)", "zero"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(13);
    let mut counts = [0usize; 4];
    for k in 0..240 {
        let ctx = &rings[k % rings.len()];
        let f = {
            let d = rng.gen_range(1..=3);
            random_poly(ctx, &mut rng, d)
        };
        let g = {
            let d = rng.gen_range(1..=3);
            random_poly(ctx, &mut rng, d)
        };
        let a = ctx.random_elem(&mut rng);
        let fg = f.mul(&g).unwrap();

        let ga = eval_right(&g, &a).unwrap();
        let expect = if ctx.is_zero(&ga) {
            ctx.zero()
        } else {
            ctx.mul(
                &eval_right(&f, &conj_right(ctx, &a, &ga).unwrap()).unwrap(),
                &ga,
            )
        };
        ensure!(
            eval_right(&fg, &a).unwrap() == expect,
            "right product evaluation, case {k}"
        );
        let fl = eval_left(&f, &a).unwrap();
        let expect = if ctx.is_zero(&fl) {
            ctx.zero()
        } else {
            ctx.mul(
                &fl,
                &eval_left(&g, &conj_left(ctx, &a, &fl).unwrap()).unwrap(),
            )
        };
        ensure!(
            eval_left(&fg, &a).unwrap() == expect,
            "left product evaluation, case {k}"
        );
        counts[0] += 1;

        let h = {
            let d = rng.gen_range(0..=2);
            random_monic(ctx, &mut rng, d)
        };
        let (p, q) = (f.mul(&h).unwrap(), g.mul(&h).unwrap());
        let d = gcrd(&p, &q).unwrap().deg().unwrap();
        let l = lcrm(&p, &q).unwrap().deg().unwrap();
        ensure!(
            p.deg().unwrap() + q.deg().unwrap() == d + l,
            "degree law, case {k}"
        );
        counts[1] += 1;

        if ctx.is_commutative() {
            match resultant::bezout_resultant(&f, &g) {
                Ok(b) => {
                    let lhs = b.a.mul(&f).unwrap().add(&b.b.mul(&g).unwrap()).unwrap();
                    ensure!(
                        lhs == SkewPoly::constant(ctx, b.r.clone()),
                        "Af + Bg != R, case {k}"
                    );
                    ensure!(
                        resultant::resultant(&f, &g, Side::Right).unwrap().rep() == Some(&b.r),
                        "R mismatch"
                    );
                }
                Err(skewres::Error::ZeroResultant) => {
                    ensure!(
                        resultant::resultant(&f, &g, Side::Right).unwrap().is_zero(),
                        "spurious zero"
                    );
                }
                Err(e) => return Err(e.to_string()),
            }
            counts[2] += 1;
        }

        let big = random_poly(ctx, &mut rng, 4);
        let r = rng.gen_range(1..=3);
        let pts: Vec<Elem> = (0..r).map(|_| ctx.random_elem(&mut rng)).collect();
        for side in [Side::Right, Side::Left] {
            let p = deriv::seq_poly(ctx, &pts, side).unwrap();
            let pp = deriv::seq_poly(ctx, &pts[..r - 1], side).unwrap();
            let (coef, value) = match side {
                Side::Right => {
                    let c = big.divmod_right(&p).unwrap().1.coeff(r - 1);
                    (
                        c,
                        eval_right(&big.divmod_right(&pp).unwrap().0, &pts[r - 1]).unwrap(),
                    )
                }
                Side::Left => {
                    let rem = big.divmod_left(&p).unwrap().1.to_right_coeffs().unwrap();
                    let c = rem
                        .rcoeffs()
                        .get(r - 1)
                        .cloned()
                        .unwrap_or_else(|| ctx.zero());
                    (
                        c,
                        eval_left(&big.divmod_left(&pp).unwrap().0, &pts[r - 1]).unwrap(),
                    )
                }
            };
            ensure!(coef == value, "Hasse identity, case {k}, {side:?}");
            let seq = PointSeq::new(ctx, pts.clone()).unwrap();
            ensure!(
                deriv::hasse(&big, &seq, side).unwrap() == coef,
                "hasse(), case {k}"
            );
        }
        counts[3] += 1;
    }
    ensure!(counts.iter().all(|&c| c >= 100), "too few cases {counts:?}");
    ensure!(
        counts[0] >= 200 && counts[1] >= 200 && counts[3] >= 200,
        "too few cases {counts:?}"
    );
    Ok(format!(
        "product evaluation {}, degree law {}, Bezout {}, Hasse {}",
        counts[0], counts[1], counts[2], counts[3]
    ))
}

/// Add and multiply tables of GF(4) by element index.
fn tables(ctx: &RingCtx, elems: &[Elem]) -> ([[u8; 4]; 4], [[u8; 4]; 4]) {
    let idx = |e: &Elem| elems.iter().position(|x| x == e).unwrap() as u8;
    let mut add = [[0u8; 4]; 4];
    let mut mul = [[0u8; 4]; 4];
    for i in 0..4 {
        for j in 0..4 {
            add[i][j] = idx(&ctx.add(&elems[i], &elems[j]));
            mul[i][j] = idx(&ctx.mul(&elems[i], &elems[j]));
        }
    }
    (add, mul)
}

fn c14() -> Check {
    let ctx = ring("gf(4)", "id", "zero");
    let elems = ctx.elements().unwrap();
    let zero = elems.iter().position(|e| ctx.is_zero(e)).unwrap() as u8;
    let (add, mul) = tables(&ctx, &elems);
    let start = Instant::now();
    let budget = Duration::from_secs(30);
    let mut singular = 0;
    let mut swept = 0u32;
    for code in 0..1u32 << 18 {
        if code % 4096 == 0 && start.elapsed() > budget {
            return Err(format!(
                "sweep exceeded the time budget after {swept} matrices"
            ));
        }
        let cells: Vec<u8> = (0..9).map(|t| ((code >> (2 * t)) & 3) as u8).collect();
        let dependent = (1..64u32).any(|y| {
            let ys = [(y & 3) as u8, ((y >> 2) & 3) as u8, ((y >> 4) & 3) as u8];
            (0..3).all(|c| {
                let s = (0..3).fold(zero, |acc, r| {
                    add[acc as usize][mul[ys[r] as usize][cells[3 * r + c] as usize] as usize]
                });
                s == zero
            })
        });
        let rows = (0..3)
            .map(|r| {
                (0..3)
                    .map(|c| elems[cells[3 * r + c] as usize].clone())
                    .collect()
            })
            .collect();
        let m = DMatrix::from_rows(&ctx, rows).unwrap();
        ensure!(
            dlinalg::ddet(&m).unwrap().is_zero() == dependent,
            "matrix code {code}"
        );
        singular += dependent as usize;
        swept += 1;
    }

    let mut samples = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(141);
    for ctx in [
        ring("gf(9)", "id", "zero"),
        ring("gauss", "id", "zero"),
        ring("gf(4)", "id", "zero"),
    ] {
        for n in 1..=5 {
            for _ in 0..15 {
                let rows = (0..n)
                    .map(|_| (0..n).map(|_| ctx.random_elem(&mut rng)).collect())
                    .collect();
                let m = DMatrix::from_rows(&ctx, rows).unwrap();
                let l = dlinalg::leibniz_det(&m).unwrap();
                match dlinalg::ddet(&m).unwrap() {
                    DDetValue::Zero => {
                        ensure!(ctx.is_zero(&l), "ddet zero, Leibniz {}", ctx.fmt_elem(&l))
                    }
                    DDetValue::Coset { rep, .. } => ensure!(
                        rep == l,
                        "ddet {} vs Leibniz {}",
                        ctx.fmt_elem(&rep),
                        ctx.fmt_elem(&l)
                    ),
                }
                samples += 1;
            }
        }
    }
    Ok(format!(
        "all {swept} 3x3 matrices over F4 ({singular} singular); {samples} Leibniz samples agree"
    ))
}

fn c15() -> Check {
    let rings = [
        ring("gf(4)", "frob^1", "inner(w)"),
        ring("gf(4)", "id", "zero"),
        ring("gf(4)", "frob^1", "zero"),
    ];
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    let (mut found, mut none, mut proper) = (0, 0, 0);
    for k in 0..150 {
        let ctx = &rings[k % rings.len()];
        let planted = k % 3 != 2;
        let (f, g) = if planted {
            let h = {
                let d = rng.gen_range(1..=3);
                random_monic(ctx, &mut rng, d)
            };
            let a = {
                let d = rng.gen_range(0..=2);
                random_poly(ctx, &mut rng, d)
            };
            let b = {
                let d = rng.gen_range(0..=2);
                random_poly(ctx, &mut rng, d)
            };
            let (f, g) = (a.mul(&h).unwrap(), b.mul(&h).unwrap());
            if f.deg() == Some(0) || g.deg() == Some(0) {
                (f.mul(&h).unwrap(), g.mul(&h).unwrap())
            } else {
                (f, g)
            }
        } else {
            (random_poly(ctx, &mut rng, 3), random_poly(ctx, &mut rng, 2))
        };
        let res_zero = resultant::resultant(&f, &g, Side::Right).unwrap().is_zero();
        let out = extend::common_root_ext_seeded(&f, &g, Side::Right, k as u64)
            .map_err(|e| format!("pair {k}: {e}"))?;
        ensure!(
            out.is_some() == res_zero,
            "pair {k}: root {} but resultant zero {res_zero}",
            out.is_some()
        );
        match out {
            Some(r) => {
                for p in [&f, &g] {
                    let v = eval_right(&r.embed_poly(p).unwrap(), &r.root).unwrap();
                    ensure!(
                        r.ext_ctx.is_zero(&v),
                        "pair {k}: root does not annihilate {p}"
                    );
                }
                found += 1;
                proper += (r.ext_degree > 1) as usize;
            }
            None => none += 1,
        }
    }
    ensure!(found >= 100, "only {found} pairs with a common root");
    Ok(format!(
        "{found} roots verified ({proper} in proper extensions), {none} pairs without"
    ))
}

fn main() -> ExitCode {
    let checks: [(&str, fn() -> Check); 15] = [
        ("monomial products over F4", c1),
        ("composition kernel", c2),
        ("complex products", c3),
        ("quaternion Sylvester matrix", c4),
        ("F4 right and left resultants", c5),
        ("function field determinants", c6),
        ("complex 7x7 resultant", c7),
        ("non-multiplicativity", c8),
        ("quaternion derivative", c9),
        ("multiplicity over-report", c10),
        ("gcd criteria equivalence", c11),
        ("gcrd degree via rank", c12),
        ("evaluation, degree, Bezout, Hasse identities", c13),
        ("determinant oracles", c14),
        ("common roots in extensions", c15),
    ];
    let mut failed = 0;
    for (i, (name, f)) in checks.iter().enumerate() {
        let t = Instant::now();
        let res = std::panic::catch_unwind(f).unwrap_or_else(|_| Err("panicked".into()));
        let ms = t.elapsed().as_millis();
        match res {
            Ok(detail) => println!("PASS {:>2} {name}: {detail} [{ms} ms]", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2} {name}: {why} [{ms} ms]", i + 1);
            }
        }
    }
    println!("{} passed, {failed} failed", checks.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
