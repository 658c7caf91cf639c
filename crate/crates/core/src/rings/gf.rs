//! Finite fields GF(p^m) with p^m ≤ 2^16, via log/exp tables.
//!
//! An element is stored as the integer Σ c_i p^i of its coordinates in the
//! polynomial basis 1, w, …, w^{m−1}, where w is a root of the field's
//! primitive modulus.

use super::fpoly::{mulm, powm};
use crate::error::{Error, Result};

pub const MAX_ORDER: u64 = 1 << 16;

#[derive(Debug)]
pub struct GfField {
    pub(crate) p: u32,
    pub(crate) m: u32,
    pub(crate) q: u32,
    /// Modulus coefficients c_0..c_{m−1} of the monic w^m + Σ c_i w^i.
    pub(crate) modulus: Vec<u32>,
    exp: Vec<u32>,
    log: Vec<u32>,
    /// p^i for i < m.
    digits_pow: Vec<u32>,
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

impl GfField {
    pub fn new(p: u32, m: u32) -> Result<GfField> {
        if !is_prime(p as u64) {
            return Err(Error::IncompatibleSpec(format!("{p} is not prime")));
        }
        if m == 0 {
            return Err(Error::IncompatibleSpec(
                "extension degree must be at least 1".into(),
            ));
        }
        let q = (p as u64)
            .checked_pow(m)
            .filter(|&q| q <= MAX_ORDER)
            .ok_or_else(|| {
                Error::UnsupportedRing(format!("GF({p}^{m}) exceeds the supported order 2^16"))
            })? as u32;
        let mut digits_pow = Vec::with_capacity(m as usize);
        let mut acc = 1u32;
        for _ in 0..m {
            digits_pow.push(acc);
            acc = acc.wrapping_mul(p);
        }
        // Candidates in increasing ascending-coefficient encoding.
        for code in 0..q {
            let mut modulus = Vec::with_capacity(m as usize);
            let mut c = code;
            for _ in 0..m {
                modulus.push(c % p);
                c /= p;
            }
            if modulus[0] == 0 {
                continue;
            }
            if let Some((exp, log)) = build_tables(p, m, q, &modulus) {
                return Ok(GfField {
                    p,
                    m,
                    q,
                    modulus,
                    exp,
                    log,
                    digits_pow,
                });
            }
        }
        Err(Error::Inconsistent(format!(
            "no primitive modulus found for GF({p}^{m})"
        )))
    }

    pub fn order(&self) -> u32 {
        self.q
    }

    pub fn characteristic(&self) -> u32 {
        self.p
    }

    pub fn degree(&self) -> u32 {
        self.m
    }

    /// The primitive element w (the class of the modulus variable).
    /// Ascending coefficients of the monic defining polynomial of w.
    pub fn modulus(&self) -> Vec<u32> {
        let mut c = self.modulus.clone();
        c.push(1);
        c
    }

    pub fn generator(&self) -> u32 {
        self.exp[1 % self.exp.len()]
    }

    pub fn digits(&self, a: u32) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.m as usize);
        let mut a = a;
        for _ in 0..self.m {
            out.push(a % self.p);
            a /= self.p;
        }
        out
    }

    pub fn from_digits(&self, d: &[u32]) -> u32 {
        d.iter()
            .zip(&self.digits_pow)
            .map(|(&c, &w)| (c % self.p) * w)
            .sum()
    }

    pub fn from_int(&self, n: i64) -> u32 {
        n.rem_euclid(self.p as i64) as u32
    }

    pub fn add(&self, a: u32, b: u32) -> u32 {
        if self.p == 2 {
            return a ^ b;
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        for &w in &self.digits_pow {
            let s = (a % self.p + b % self.p) % self.p;
            out += s * w;
            a /= self.p;
            b /= self.p;
        }
        out
    }

    pub fn neg(&self, a: u32) -> u32 {
        if self.p == 2 {
            return a;
        }
        let mut a = a;
        let mut out = 0;
        for &w in &self.digits_pow {
            out += ((self.p - a % self.p) % self.p) * w;
            a /= self.p;
        }
        out
    }

    pub fn sub(&self, a: u32, b: u32) -> u32 {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: u32, b: u32) -> u32 {
        if a == 0 || b == 0 {
            return 0;
        }
        let n = self.q - 1;
        self.exp[((self.log[a as usize] + self.log[b as usize]) % n) as usize]
    }

    pub fn inv(&self, a: u32) -> Option<u32> {
        if a == 0 {
            return None;
        }
        let n = self.q - 1;
        Some(self.exp[((n - self.log[a as usize]) % n) as usize])
    }

    /// a^e for e ≥ 0.
    pub fn pow(&self, a: u32, e: u64) -> u32 {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        let n = (self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * (e % n)) % n) as usize]
    }

    /// a^{p^j}.
    pub fn frobenius(&self, a: u32, j: u32) -> u32 {
        let n = (self.q - 1) as u64;
        if a == 0 {
            return 0;
        }
        let e = powm(self.p, j as u64, self.q - 1) as u64;
        self.exp[((self.log[a as usize] as u64 * e) % n) as usize]
    }

    /// Discrete logarithm base w of a nonzero element.
    pub fn log(&self, a: u32) -> Option<u32> {
        (a != 0).then(|| self.log[a as usize])
    }

    pub fn exp(&self, k: u64) -> u32 {
        self.exp[(k % (self.q as u64 - 1)) as usize]
    }

    /// Whether `a` lies in the prime subfield; returns its integer value.
    pub fn prime_value(&self, a: u32) -> Option<u32> {
        (a < self.p).then_some(a)
    }
}

fn build_tables(p: u32, m: u32, q: u32, modulus: &[u32]) -> Option<(Vec<u32>, Vec<u32>)> {
    let m = m as usize;
    let n = (q - 1) as usize;
    let mut exp = vec![0u32; n];
    let mut log = vec![u32::MAX; q as usize];
    let mut cur = vec![0u32; m];
    cur[0] = 1;
    let encode = |v: &[u32]| v.iter().rev().fold(0u32, |acc, &c| acc * p + c);
    for k in 0..n {
        let code = encode(&cur);
        if log[code as usize] != u32::MAX {
            return None;
        }
        log[code as usize] = k as u32;
        exp[k] = code;
        // multiply by w: shift and reduce with w^m = -Σ c_i w^i
        let top = cur[m - 1];
        for i in (1..m).rev() {
            cur[i] = cur[i - 1];
        }
        cur[0] = 0;
        if top != 0 {
            for i in 0..m {
                let t = mulm(top, modulus[i], p);
                cur[i] = (cur[i] + p - t) % p;
            }
        }
    }
    (encode(&cur) == 1).then_some((exp, log))
}
