//! The rational function field F_p(t).

use super::fpoly::{self, FpPoly};

/// A reduced fraction num/den over F_p with monic denominator.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RatFn {
    pub(crate) num: FpPoly,
    pub(crate) den: FpPoly,
}

impl RatFn {
    pub fn zero() -> RatFn {
        RatFn {
            num: Vec::new(),
            den: vec![1],
        }
    }

    pub fn one() -> RatFn {
        RatFn {
            num: vec![1],
            den: vec![1],
        }
    }

    pub fn numerator(&self) -> &[u32] {
        &self.num
    }

    pub fn denominator(&self) -> &[u32] {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_empty()
    }

    /// Builds num/den in lowest terms; `den` must be nonzero.
    pub(crate) fn new(num: FpPoly, den: FpPoly, p: u32) -> RatFn {
        assert!(!den.is_empty(), "zero denominator");
        if num.is_empty() {
            return RatFn::zero();
        }
        let g = fpoly::gcd(&num, &den, p);
        let (mut n, _) = fpoly::divrem(&num, &g, p);
        let (mut d, _) = fpoly::divrem(&den, &g, p);
        let lead = *d.last().unwrap();
        if lead != 1 {
            let li = fpoly::invm(lead, p);
            n = fpoly::scale(&n, li, p);
            d = fpoly::scale(&d, li, p);
        }
        RatFn { num: n, den: d }
    }

    pub(crate) fn from_poly(num: FpPoly) -> RatFn {
        RatFn { num, den: vec![1] }
    }

    pub(crate) fn add(&self, o: &RatFn, p: u32) -> RatFn {
        if self.den == o.den {
            return RatFn::new(fpoly::add(&self.num, &o.num, p), self.den.clone(), p);
        }
        let n = fpoly::add(
            &fpoly::mul(&self.num, &o.den, p),
            &fpoly::mul(&o.num, &self.den, p),
            p,
        );
        RatFn::new(n, fpoly::mul(&self.den, &o.den, p), p)
    }

    pub(crate) fn neg(&self, p: u32) -> RatFn {
        RatFn {
            num: fpoly::neg(&self.num, p),
            den: self.den.clone(),
        }
    }

    pub(crate) fn mul(&self, o: &RatFn, p: u32) -> RatFn {
        if self.is_zero() || o.is_zero() {
            return RatFn::zero();
        }
        RatFn::new(
            fpoly::mul(&self.num, &o.num, p),
            fpoly::mul(&self.den, &o.den, p),
            p,
        )
    }

    pub(crate) fn inv(&self, p: u32) -> Option<RatFn> {
        if self.is_zero() {
            return None;
        }
        Some(RatFn::new(self.den.clone(), self.num.clone(), p))
    }

    /// t ↦ t^{p^j}, which is also a ↦ a^{p^j}.
    pub(crate) fn frobenius(&self, j: u32, p: u32) -> RatFn {
        let k = (p as usize).pow(j);
        RatFn::new(fpoly::spread(&self.num, k), fpoly::spread(&self.den, k), p)
    }

    /// Formal derivative d/dt by the quotient rule.
    pub(crate) fn derivative(&self, p: u32) -> RatFn {
        let dn = fpoly::derivative(&self.num, p);
        let dd = fpoly::derivative(&self.den, p);
        let n = fpoly::sub(
            &fpoly::mul(&dn, &self.den, p),
            &fpoly::mul(&self.num, &dd, p),
            p,
        );
        if n.is_empty() {
            return RatFn::zero();
        }
        RatFn::new(n, fpoly::mul(&self.den, &self.den, p), p)
    }
}

/// Prints an F_p[t] polynomial in descending powers, e.g. `4*t^3+t+1`.
pub(crate) fn fmt_fpoly(a: &[u32], var: &str) -> String {
    if a.is_empty() {
        return "0".into();
    }
    let mut parts = Vec::new();
    for (i, &c) in a.iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let mono = match i {
            0 => String::new(),
            1 => var.to_string(),
            _ => format!("{var}^{i}"),
        };
        parts.push(match (c, i) {
            (_, 0) => c.to_string(),
            (1, _) => mono,
            _ => format!("{c}*{mono}"),
        });
    }
    parts.join("+")
}

pub(crate) fn fmt_ratfn(a: &RatFn, var: &str) -> String {
    let num = fmt_fpoly(&a.num, var);
    if a.den == [1] {
        return num;
    }
    let wrap = |s: String, poly: &[u32]| {
        if poly.iter().filter(|&&c| c != 0).count() > 1
            || (poly.len() > 1 && poly[poly.len() - 1] != 1)
        {
            format!("({s})")
        } else {
            s
        }
    };
    let n = wrap(num, &a.num);
    let d = wrap(fmt_fpoly(&a.den, var), &a.den);
    format!("{n}/{d}")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reduces_to_lowest_terms() {
        let p = 5;
        // (t^2 - 1)/(2t - 2) = (t + 1)/2 -> (3t + 3)/1
        let a = RatFn::new(vec![4, 0, 1], vec![3, 2], p);
        assert_eq!(a.den, vec![1]);
        assert_eq!(a.num, vec![3, 3]);
    }

    #[test]
    fn inverse_of_reciprocal() {
        let p = 5;
        let inv_t = RatFn::new(vec![1], vec![0, 1], p);
        assert_eq!(inv_t.inv(p).unwrap(), RatFn::from_poly(vec![0, 1]));
    }

    #[test]
    fn derivative_quotient_rule() {
        let p = 5;
        // d/dt (1/t) = -1/t^2
        let inv_t = RatFn::new(vec![1], vec![0, 1], p);
        assert_eq!(inv_t.derivative(p), RatFn::new(vec![4], vec![0, 0, 1], p));
    }

    #[test]
    fn prints_reduced_fractions() {
        let p = 5;
        let a = RatFn::new(vec![1, 0, 1], vec![0, 1], p);
        assert_eq!(fmt_ratfn(&a, "t"), "(t^2+1)/t");
        let b = RatFn::new(vec![4], vec![0, 0, 1], p);
        assert_eq!(fmt_ratfn(&b, "t"), "4/t^2");
    }
}
