//! Dense polynomials over a prime field F_p, coefficients stored ascending.
//!
//! These back the rational function field F_p(t). All routines keep the
//! result trimmed (no trailing zero coefficients); the zero polynomial is the
//! empty vector.

pub(crate) type FpPoly = Vec<u32>;

#[inline]
fn addm(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + b as u64) % p as u64) as u32
}

#[inline]
fn subm(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 + p as u64 - b as u64) % p as u64) as u32
}

#[inline]
pub(crate) fn mulm(a: u32, b: u32, p: u32) -> u32 {
    ((a as u64 * b as u64) % p as u64) as u32
}

pub(crate) fn powm(mut a: u32, mut e: u64, p: u32) -> u32 {
    let mut r = 1 % p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}

pub(crate) fn invm(a: u32, p: u32) -> u32 {
    debug_assert!(a % p != 0);
    powm(a, p as u64 - 2, p)
}

pub(crate) fn trim(v: &mut FpPoly) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

pub(crate) fn constant(c: u32, p: u32) -> FpPoly {
    let c = c % p;
    if c == 0 {
        Vec::new()
    } else {
        vec![c]
    }
}

pub(crate) fn add(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| addm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn sub(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let n = a.len().max(b.len());
    let mut out: FpPoly = (0..n)
        .map(|i| subm(*a.get(i).unwrap_or(&0), *b.get(i).unwrap_or(&0), p))
        .collect();
    trim(&mut out);
    out
}

pub(crate) fn neg(a: &[u32], p: u32) -> FpPoly {
    a.iter().map(|&c| subm(0, c, p)).collect()
}

pub(crate) fn scale(a: &[u32], c: u32, p: u32) -> FpPoly {
    let mut out: FpPoly = a.iter().map(|&x| mulm(x, c, p)).collect();
    trim(&mut out);
    out
}

pub(crate) fn mul(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    let pp = p as u64;
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % pp;
        }
    }
    let mut out: FpPoly = out.into_iter().map(|c| c as u32).collect();
    trim(&mut out);
    out
}

/// Quotient and remainder; `b` must be nonzero.
pub(crate) fn divrem(a: &[u32], b: &[u32], p: u32) -> (FpPoly, FpPoly) {
    assert!(!b.is_empty(), "polynomial division by zero");
    if a.len() < b.len() {
        return (Vec::new(), a.to_vec());
    }
    let mut r = a.to_vec();
    let db = b.len() - 1;
    let lead_inv = invm(*b.last().unwrap(), p);
    let mut q = vec![0u32; a.len() - db];
    for k in (0..q.len()).rev() {
        let c = mulm(r[k + db], lead_inv, p);
        q[k] = c;
        if c != 0 {
            for (i, &bi) in b.iter().enumerate() {
                r[k + i] = subm(r[k + i], mulm(c, bi, p), p);
            }
        }
    }
    trim(&mut q);
    trim(&mut r);
    (q, r)
}

pub(crate) fn monic(a: &[u32], p: u32) -> FpPoly {
    match a.last() {
        None => Vec::new(),
        Some(&l) => scale(a, invm(l, p), p),
    }
}

/// Monic greatest common divisor (zero if both inputs vanish).
pub(crate) fn gcd(a: &[u32], b: &[u32], p: u32) -> FpPoly {
    let mut x = a.to_vec();
    let mut y = b.to_vec();
    while !y.is_empty() {
        let (_, r) = divrem(&x, &y, p);
        x = y;
        y = r;
    }
    monic(&x, p)
}

pub(crate) fn derivative(a: &[u32], p: u32) -> FpPoly {
    let mut out: FpPoly = a
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, &c)| mulm(c, (i as u64 % p as u64) as u32, p))
        .collect();
    trim(&mut out);
    out
}

/// Substitute t -> t^k.
pub(crate) fn spread(a: &[u32], k: usize) -> FpPoly {
    if a.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; (a.len() - 1) * k + 1];
    for (i, &c) in a.iter().enumerate() {
        out[i * k] = c;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_reconstructs() {
        let p = 5;
        let a = vec![3, 0, 4, 1, 2];
        let b = vec![1, 2, 3];
        let (q, r) = divrem(&a, &b, p);
        assert!(r.len() < b.len());
        assert_eq!(add(&mul(&q, &b, p), &r, p), a);
    }

    #[test]
    fn gcd_of_products() {
        let p = 7;
        let f = vec![1, 1];
        let g = vec![3, 0, 1];
        let h = vec![2, 5];
        let g1 = gcd(&mul(&f, &g, p), &mul(&f, &h, p), p);
        assert_eq!(g1, vec![1, 1]);
    }

    #[test]
    fn derivative_in_char_p() {
        // d/dt t^5 = 5 t^4 = 0 over F_5
        assert!(derivative(&[0, 0, 0, 0, 0, 1], 5).is_empty());
        assert_eq!(derivative(&[0, 0, 1], 5), vec![0, 2]);
    }
}
