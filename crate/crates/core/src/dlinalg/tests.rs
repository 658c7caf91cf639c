use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::parse::{parse_elem, parse_matrix, parse_ring};
use crate::rings::DEFAULT_SEED;

fn ring(r: &str, s: &str, d: &str) -> RingCtx {
    parse_ring(r, s, d, false, DEFAULT_SEED).unwrap()
}

fn random_matrix(ctx: &RingCtx, rng: &mut ChaCha8Rng, r: usize, c: usize) -> DMatrix {
    let rows = (0..r)
        .map(|_| (0..c).map(|_| ctx.random_elem(rng)).collect())
        .collect();
    DMatrix::from_rows(ctx, rows).unwrap()
}

fn mat_mul(a: &DMatrix, b: &DMatrix) -> DMatrix {
    let ctx = a.ctx();
    let rows = (0..a.rows())
        .map(|i| {
            (0..b.cols())
                .map(|j| {
                    (0..a.cols()).fold(ctx.zero(), |acc, k| {
                        ctx.add(&acc, &ctx.mul(a.get(i, k), b.get(k, j)))
                    })
                })
                .collect()
        })
        .collect();
    DMatrix::from_rows(ctx, rows).unwrap()
}

/// Every y ∈ F^r, as index tuples over the enumerated elements.
fn all_vectors(elems: &[Elem], r: usize) -> Vec<Vec<Elem>> {
    let mut out = vec![vec![]];
    for _ in 0..r {
        out = out
            .into_iter()
            .flat_map(|v| {
                elems.iter().map(move |e| {
                    let mut w = v.clone();
                    w.push(e.clone());
                    w
                })
            })
            .collect();
    }
    out
}

fn brute_row_space_size(m: &DMatrix) -> usize {
    let elems = m.ctx().elements().unwrap();
    let mut span: Vec<Vec<Elem>> = all_vectors(&elems, m.rows())
        .iter()
        .map(|y| m.left_apply(y).unwrap())
        .collect();
    span.sort_by_key(|v| format!("{v:?}"));
    span.dedup();
    span.len()
}

#[test]
fn zero_determinant_matches_kernel_search_over_gf9() {
    let ctx = ring("gf(9)", "id", "zero");
    let elems = ctx.elements().unwrap();
    let vectors = all_vectors(&elems, 3);
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut singular = 0;
    for k in 0..150 {
        let mut m = random_matrix(&ctx, &mut rng, 3, 3);
        if k % 3 == 0 {
            let r = m.row(0).to_vec();
            let c = ctx.random_elem(&mut rng);
            m.set(2, 0, ctx.mul(&c, &r[0]));
            m.set(2, 1, ctx.mul(&c, &r[1]));
            m.set(2, 2, ctx.mul(&c, &r[2]));
        }
        let dependent = vectors.iter().any(|y| {
            y.iter().any(|e| !ctx.is_zero(e))
                && m.left_apply(y).unwrap().iter().all(|e| ctx.is_zero(e))
        });
        assert_eq!(ddet(&m).unwrap().is_zero(), dependent);
        assert_eq!(left_kernel_vector(&m).is_some(), dependent);
        singular += dependent as usize;
    }
    assert!(singular >= 50);
}

#[test]
fn rank_matches_span_size() {
    let ctx = ring("gf(4)", "id", "zero");
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for _ in 0..60 {
        let m = random_matrix(&ctx, &mut rng, 3, 4);
        let size = brute_row_space_size(&m);
        assert_eq!(4usize.pow(rank(&m) as u32), size);
        assert_eq!(rank(&m), right_row_rank(&m));
    }
}

#[test]
fn leibniz_matches_ddet_over_fields() {
    for ctx in [ring("gf(9)", "id", "zero"), ring("gauss", "id", "zero")] {
        let mut rng = ChaCha8Rng::seed_from_u64(13);
        for n in 1..=5 {
            for _ in 0..6 {
                let m = random_matrix(&ctx, &mut rng, n, n);
                let d = leibniz_det(&m).unwrap();
                match ddet(&m).unwrap() {
                    DDetValue::Zero => assert!(ctx.is_zero(&d)),
                    DDetValue::Coset {
                        rep,
                        sign_ambiguous,
                    } => {
                        assert!(!sign_ambiguous);
                        assert_eq!(rep, d);
                    }
                }
            }
        }
    }
}

#[test]
fn leibniz_rejects_noncommutative_and_large() {
    let q = ring("quat", "id", "zero");
    assert_eq!(
        leibniz_det(&DMatrix::identity(&q, 2)),
        Err(Error::NonCommutativeRing)
    );
    let f = ring("gf(4)", "id", "zero");
    assert!(matches!(
        leibniz_det(&DMatrix::identity(&f, 9)),
        Err(Error::TooLarge(_))
    ));
}

#[test]
fn row_solve_multiplies_back() {
    for ctx in [ring("quat", "id", "zero"), ring("gf(9)", "id", "zero")] {
        let mut rng = ChaCha8Rng::seed_from_u64(14);
        for _ in 0..20 {
            let b = random_matrix(&ctx, &mut rng, 3, 3);
            let c: Vec<Elem> = (0..3).map(|_| ctx.random_elem(&mut rng)).collect();
            match solve_row(&b, &c) {
                Ok(y) => assert_eq!(b.left_apply(&y).unwrap(), c),
                Err(e) => {
                    assert_eq!(e, Error::SingularMatrix);
                    assert!(ddet(&b).unwrap().is_zero());
                }
            }
        }
    }
}

#[test]
fn inverse_is_two_sided() {
    let ctx = ring("quat", "id", "zero");
    let mut rng = ChaCha8Rng::seed_from_u64(15);
    for _ in 0..10 {
        let b = random_matrix(&ctx, &mut rng, 3, 3);
        let Ok(inv) = inverse(&b) else { continue };
        assert_eq!(mat_mul(&b, &inv), DMatrix::identity(&ctx, 3));
        assert_eq!(mat_mul(&inv, &b), DMatrix::identity(&ctx, 3));
    }
}

#[test]
fn quaternion_determinant_is_multiplicative_modulo_commutators() {
    let ctx = ring("quat", "id", "zero");
    let mut rng = ChaCha8Rng::seed_from_u64(16);
    for _ in 0..10 {
        let a = random_matrix(&ctx, &mut rng, 3, 3);
        let b = random_matrix(&ctx, &mut rng, 3, 3);
        let (da, db, dab) = (
            ddet(&a).unwrap(),
            ddet(&b).unwrap(),
            ddet(&mat_mul(&a, &b)).unwrap(),
        );
        match (da.rep(), db.rep()) {
            (Some(x), Some(y)) => {
                let prod = DDetValue::Coset {
                    rep: ctx.mul(x, y),
                    sign_ambiguous: false,
                };
                assert!(ddet_eq(&ctx, &prod, &dab));
            }
            _ => assert!(dab.is_zero()),
        }
    }
}

#[test]
fn quaternion_cosets_compare_by_norm() {
    let ctx = ring("quat", "id", "zero");
    let two = parse_elem(&ctx, "2").unwrap();
    let q = parse_elem(&ctx, "1+i+j+k").unwrap();
    let r = parse_elem(&ctx, "1+i").unwrap();
    assert!(coset_eq(&ctx, &two, &q));
    assert!(!coset_eq(&ctx, &two, &r));
    let m = parse_matrix(&ctx, "i, j; 1, k").unwrap();
    let n = parse_matrix(&ctx, "j, i; k, 1").unwrap();
    let (dm, dn) = (ddet(&m).unwrap(), ddet(&n).unwrap());
    assert!(!dm.is_zero());
    assert!(ddet_eq(&ctx, &dm, &dn));
}

#[test]
fn right_dependence_differs_from_left() {
    let ctx = ring("quat", "id", "zero");
    let m = parse_matrix(&ctx, "1, i; j, k").unwrap();
    // j·(1, i) = (j, −k) but (1, i)·j = (j, k).
    assert!(!ddet(&m).unwrap().is_zero());
    assert!(ddet_opposite(&m).unwrap().is_zero());
    assert_eq!(rank(&m), 2);
    assert_eq!(right_row_rank(&m), 1);
}

#[test]
fn triangular_form_of_a_singular_matrix_has_a_zero_diagonal() {
    let ctx = ring("gf(4)", "id", "zero");
    let m = parse_matrix(&ctx, "1, w; w, w^2").unwrap();
    let (u, _) = triangularize(&m).unwrap();
    assert!(ctx.is_zero(u.get(1, 1)));
    assert_eq!(ddet(&m).unwrap(), DDetValue::Zero);
}

#[test]
fn swaps_flip_the_sign_over_fields() {
    let ctx = ring("gauss", "id", "zero");
    let m = parse_matrix(&ctx, "0, 1; 1, 0").unwrap();
    assert_eq!(ddet(&m).unwrap().rep(), Some(&ctx.from_int(-1)));
}
