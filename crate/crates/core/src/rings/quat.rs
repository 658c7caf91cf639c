//! Exact Gaussian rationals and rational quaternions.

use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Gauss {
    pub re: BigRational,
    pub im: BigRational,
}

impl Gauss {
    pub fn new(re: BigRational, im: BigRational) -> Gauss {
        Gauss { re, im }
    }

    pub fn zero() -> Gauss {
        Gauss::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Gauss {
        Gauss::new(BigRational::one(), BigRational::zero())
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn add(&self, o: &Gauss) -> Gauss {
        Gauss::new(&self.re + &o.re, &self.im + &o.im)
    }

    pub fn neg(&self) -> Gauss {
        Gauss::new(-&self.re, -&self.im)
    }

    pub fn mul(&self, o: &Gauss) -> Gauss {
        Gauss::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }

    pub fn conj(&self) -> Gauss {
        Gauss::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inv(&self) -> Option<Gauss> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(Gauss::new(&self.re / &n, -&self.im / &n))
    }
}

/// a + b·i + c·j + d·k.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Quat(pub [BigRational; 4]);

impl Quat {
    pub fn zero() -> Quat {
        Quat(std::array::from_fn(|_| BigRational::zero()))
    }

    pub fn one() -> Quat {
        Quat::basis(0)
    }

    /// 1, i, j or k for index 0..4.
    pub fn basis(idx: usize) -> Quat {
        let mut q = Quat::zero();
        q.0[idx] = BigRational::one();
        q
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Zero::is_zero)
    }

    pub fn add(&self, o: &Quat) -> Quat {
        Quat(std::array::from_fn(|n| &self.0[n] + &o.0[n]))
    }

    pub fn neg(&self) -> Quat {
        Quat(std::array::from_fn(|n| -&self.0[n]))
    }

    pub fn scale(&self, r: &BigRational) -> Quat {
        Quat(std::array::from_fn(|n| &self.0[n] * r))
    }

    pub fn mul(&self, o: &Quat) -> Quat {
        let [a1, b1, c1, d1] = &self.0;
        let [a2, b2, c2, d2] = &o.0;
        Quat([
            a1 * a2 - b1 * b2 - c1 * c2 - d1 * d2,
            a1 * b2 + b1 * a2 + c1 * d2 - d1 * c2,
            a1 * c2 - b1 * d2 + c1 * a2 + d1 * b2,
            a1 * d2 + b1 * c2 - c1 * b2 + d1 * a2,
        ])
    }

    pub fn conj(&self) -> Quat {
        let [a, b, c, d] = &self.0;
        Quat([a.clone(), -b, -c, -d])
    }

    /// Reduced norm q·q̄.
    pub fn norm(&self) -> BigRational {
        self.0
            .iter()
            .map(|x| x * x)
            .fold(BigRational::zero(), |s, x| s + x)
    }

    pub fn inv(&self) -> Option<Quat> {
        if self.is_zero() {
            return None;
        }
        Some(self.conj().scale(&self.norm().recip()))
    }
}

/// Prints a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Prints Σ c_u·u over named units, the first unit being the scalar 1.
pub(crate) fn fmt_units(coords: &[BigRational], units: &[&str]) -> String {
    let mut out = String::new();
    for (c, u) in coords.iter().zip(units) {
        if c.is_zero() {
            continue;
        }
        let neg = c.is_negative();
        let abs = c.abs();
        let body = if u.is_empty() {
            fmt_rational(&abs)
        } else if abs.is_one() {
            u.to_string()
        } else if abs.is_integer() {
            format!("{}*{u}", abs.numer())
        } else {
            format!("({})*{u}", fmt_rational(&abs))
        };
        if neg {
            out.push('-');
        } else if !out.is_empty() {
            out.push('+');
        }
        out.push_str(&body);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}
