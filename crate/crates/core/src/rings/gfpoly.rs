//! Commutative polynomials over a table-driven finite field, ascending.

use super::gf::GfField;

pub type GfPoly = Vec<u32>;

pub fn trim(v: &mut GfPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub fn add(f: &GfField, a: &[u32], b: &[u32]) -> GfPoly {
    let n = a.len().max(b.len());
    let mut out: GfPoly = (0..n)
        .map(|i| f.add(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(&mut out);
    out
}

pub fn sub(f: &GfField, a: &[u32], b: &[u32]) -> GfPoly {
    let n = a.len().max(b.len());
    let mut out: GfPoly = (0..n)
        .map(|i| f.sub(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0)))
        .collect();
    trim(&mut out);
    out
}

pub fn scale(f: &GfField, a: &[u32], c: u32) -> GfPoly {
    let mut out: GfPoly = a.iter().map(|&x| f.mul(x, c)).collect();
    trim(&mut out);
    out
}

pub fn mul(f: &GfField, a: &[u32], b: &[u32]) -> GfPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    trim(&mut out);
    out
}

pub fn divrem(f: &GfField, a: &[u32], b: &[u32]) -> (GfPoly, GfPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let li = f.inv(*b.last().unwrap()).unwrap();
    let mut q = vec![0u32; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = f.mul(r[k + db], li);
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] = f.sub(r[k + i], f.mul(c, bi));
            }
        }
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

pub fn rem(f: &GfField, a: &[u32], b: &[u32]) -> GfPoly {
    divrem(f, a, b).1
}

pub fn monic(f: &GfField, a: &[u32]) -> GfPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(f, a, f.inv(l).unwrap()),
    }
}

pub fn gcd(f: &GfField, a: &[u32], b: &[u32]) -> GfPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let r = rem(f, &x, &y);
        x = y;
        y = r;
    }
    monic(f, &x)
}

/// Inverse of a modulo m, when gcd(a, m) = 1.
pub fn inv_mod(f: &GfField, a: &[u32], m: &[u32]) -> Option<GfPoly> {
    let (mut r0, mut r1) = (m.to_vec(), rem(f, a, m));
    let (mut s0, mut s1): (GfPoly, GfPoly) = (Vec::new(), vec![1]);
    while !r1.is_empty() {
        let (q, r) = divrem(f, &r0, &r1);
        let s = sub(f, &s0, &mul(f, &q, &s1));
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    if r0.len() != 1 {
        return None;
    }
    let c = f.inv(r0[0]).unwrap();
    Some(rem(f, &scale(f, &s0, c), m))
}

pub fn mulmod(f: &GfField, a: &[u32], b: &[u32], m: &[u32]) -> GfPoly {
    rem(f, &mul(f, a, b), m)
}

/// a^e mod m for a big exponent given as u128.
pub fn powmod(f: &GfField, a: &[u32], mut e: u128, m: &[u32]) -> GfPoly {
    let mut base = rem(f, a, m);
    let mut acc: GfPoly = rem(f, &[1], m);
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(f, &acc, &base, m);
        }
        base = mulmod(f, &base, &base, m);
        e >>= 1;
    }
    acc
}

/// Evaluates a at the field element x.
pub fn eval(f: &GfField, a: &[u32], x: u32) -> u32 {
    a.iter().rev().fold(0, |acc, &c| f.add(f.mul(acc, x), c))
}

/// Whether a (degree ≥ 1) is irreducible: no factor of degree ≤ deg/2.
pub fn is_irreducible(f: &GfField, a: &[u32]) -> bool {
    if a.len() < 2 {
        return false;
    }
    let e = a.len() - 1;
    let q = f.order() as u128;
    let y: GfPoly = vec![0, 1];
    let mut h = rem(f, &y, a);
    for _ in 0..e / 2 {
        h = powmod(f, &h, q, a);
        if gcd(f, &sub(f, &h, &y), a).len() > 1 {
            return false;
        }
    }
    true
}
