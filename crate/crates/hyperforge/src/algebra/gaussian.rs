//! Gaussian integers `a + bi` with unbounded components.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GaussianInteger {
    re: BigInt,
    im: BigInt,
}

impl GaussianInteger {
    pub fn new(re: BigInt, im: BigInt) -> Self {
        GaussianInteger { re, im }
    }

    pub fn from_i64(re: i64, im: i64) -> Self {
        GaussianInteger {
            re: BigInt::from(re),
            im: BigInt::from(im),
        }
    }

    pub fn zero() -> Self {
        Self::from_i64(0, 0)
    }

    pub fn one() -> Self {
        Self::from_i64(1, 0)
    }

    pub fn re(&self) -> &BigInt {
        &self.re
    }

    pub fn im(&self) -> &BigInt {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True for the four units 1, -1, i, -i.
    pub fn is_unit(&self) -> bool {
        self.norm().is_one()
    }

    pub fn add(&self, other: &Self) -> Self {
        GaussianInteger {
            re: &self.re + &other.re,
            im: &self.im + &other.im,
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        GaussianInteger {
            re: &self.re - &other.re,
            im: &self.im - &other.im,
        }
    }

    pub fn neg(&self) -> Self {
        GaussianInteger {
            re: -&self.re,
            im: -&self.im,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        GaussianInteger {
            re: &self.re * &other.re - &self.im * &other.im,
            im: &self.re * &other.im + &self.im * &other.re,
        }
    }

    /// Complex conjugate `a - bi`.
    pub fn conj(&self) -> Self {
        GaussianInteger {
            re: self.re.clone(),
            im: -&self.im,
        }
    }

    /// `a^2 + b^2`; multiplicative, and zero only at zero.
    pub fn norm(&self) -> BigInt {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division: `Some(self / d)` when `d` divides `self` in `Z[i]`.
    pub fn divide_exact(&self, d: &Self) -> Option<Self> {
        assert!(!d.is_zero(), "division by zero Gaussian integer");
        let n = d.norm();
        let num = self.mul(&d.conj());
        let (qr, rr) = num.re.div_rem(&n);
        let (qi, ri) = num.im.div_rem(&n);
        if rr.is_zero() && ri.is_zero() {
            Some(GaussianInteger { re: qr, im: qi })
        } else {
            None
        }
    }
}

/// Writes `p = a^2 + b^2` with `a > b > 0`; such a representation exists
/// exactly for primes `p ≡ 1 (mod 4)` and is then unique.
pub(crate) fn two_squares(p: u64) -> Option<(u64, u64)> {
    let mut b = 1u64;
    while 2 * b * b < p {
        let rest = p - b * b;
        let a = rest.isqrt();
        if a * a == rest {
            return Some((a, b));
        }
        b += 1;
    }
    None
}

impl fmt::Display for GaussianInteger {
    /// Renders like `2+i`, `3-2i`, `5`, `-i`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return write!(f, "{}", self.re);
        }
        let unit_im = self.im.abs().is_one();
        if self.re.is_zero() {
            return match (self.im.is_negative(), unit_im) {
                (false, true) => write!(f, "i"),
                (true, true) => write!(f, "-i"),
                _ => write!(f, "{}i", self.im),
            };
        }
        let sign = if self.im.is_negative() { "-" } else { "+" };
        if unit_im {
            write!(f, "{}{}i", self.re, sign)
        } else {
            write!(f, "{}{}{}i", self.re, sign, self.im.abs())
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_is_multiplicative() {
        let a = GaussianInteger::from_i64(3, -7);
        let b = GaussianInteger::from_i64(-2, 5);
        assert_eq!(a.mul(&b).norm(), a.norm() * b.norm());
    }

    #[test]
    fn conjugation_is_a_ring_involution() {
        let a = GaussianInteger::from_i64(4, 9);
        let b = GaussianInteger::from_i64(-3, 2);
        assert_eq!(a.conj().conj(), a);
        assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        assert_eq!(a.add(&b).conj(), a.conj().add(&b.conj()));
    }

    #[test]
    fn exact_division() {
        let five = GaussianInteger::from_i64(5, 0);
        let r = GaussianInteger::from_i64(2, 1);
        assert_eq!(five.divide_exact(&r), Some(GaussianInteger::from_i64(2, -1)));
        // (2-i)^2 = 3-4i is not divisible by 5.
        let x = GaussianInteger::from_i64(3, -4);
        assert_eq!(x.divide_exact(&five), None);
    }

    #[test]
    fn two_squares_on_split_primes() {
        assert_eq!(two_squares(5), Some((2, 1)));
        assert_eq!(two_squares(13), Some((3, 2)));
        assert_eq!(two_squares(17), Some((4, 1)));
        assert_eq!(two_squares(3), None);
        assert_eq!(two_squares(7), None);
        assert_eq!(two_squares(89), Some((8, 5)));
    }

    #[test]
    fn display_forms() {
        assert_eq!(GaussianInteger::from_i64(2, 1).to_string(), "2+i");
        assert_eq!(GaussianInteger::from_i64(3, 2).to_string(), "3+2i");
        assert_eq!(GaussianInteger::from_i64(2, -1).to_string(), "2-i");
        assert_eq!(GaussianInteger::from_i64(5, 0).to_string(), "5");
        assert_eq!(GaussianInteger::from_i64(0, 1).to_string(), "i");
        assert_eq!(GaussianInteger::from_i64(0, -3).to_string(), "-3i");
        assert_eq!(GaussianInteger::from_i64(-1, -1).to_string(), "-1-i");
    }
}
