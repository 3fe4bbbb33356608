//! Finite fields `F_q` with a deterministic construction: the modulus is
//! always the least monic irreducible polynomial of the right degree in the
//! fixed coefficient order, so two runs (or two machines) agree on every
//! element index.

use super::poly::{inv_mod, FpPolynomial};
use super::{factorize, prime_power, FiniteAbelianGroup};
use crate::{Error, Result};

/// Default ceiling on the field order accepted by [`FiniteField::new`].
pub const DEFAULT_FIELD_BOUND: u64 = 4096;

/// The field `F_q = F_p[X] / (modulus)`, `q = p^k`.
///
/// Elements are the integers `0..q`; index `x` encodes the residue
/// polynomial whose coefficients are the base-`p` digits of `x` (constant
/// term = least significant digit). Index 0 is the zero element and index 1
/// is the multiplicative identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteField {
    p: u64,
    k: u32,
    q: u64,
    modulus: FpPolynomial,
}

impl FiniteField {
    /// Builds `F_q` under the default order bound.
    pub fn new(q: u64) -> Result<Self> {
        Self::with_bound(q, DEFAULT_FIELD_BOUND)
    }

    /// Builds `F_q`, rejecting non-prime-powers and orders above `bound`.
    pub fn with_bound(q: u64, bound: u64) -> Result<Self> {
        if q > bound {
            return Err(Error::BoundExceeded {
                what: "field order",
                got: q as u128,
                limit: bound as u128,
            });
        }
        let (p, k) = prime_power(q)?;
        let modulus = FpPolynomial::least_irreducible(p, k as usize);
        Ok(FiniteField { p, k, q, modulus })
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Extension degree over the prime field.
    pub fn extension_degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> u64 {
        self.q
    }

    pub fn modulus(&self) -> &FpPolynomial {
        &self.modulus
    }

    pub fn zero(&self) -> u64 {
        0
    }

    pub fn one(&self) -> u64 {
        1
    }

    /// All element indices in canonical order.
    pub fn elements(&self) -> std::ops::Range<u64> {
        0..self.q
    }

    /// The residue polynomial encoded by index `x`.
    pub fn decode(&self, x: u64) -> FpPolynomial {
        debug_assert!(x < self.q);
        let mut digits = Vec::with_capacity(self.k as usize);
        let mut rest = x;
        for _ in 0..self.k {
            digits.push(rest % self.p);
            rest /= self.p;
        }
        FpPolynomial::new(self.p, &digits)
    }

    /// Index of a residue polynomial (reduced mod the modulus first).
    pub fn encode(&self, f: &FpPolynomial) -> u64 {
        let reduced = f.rem(&self.modulus);
        let mut x = 0u64;
        for i in (0..self.k as usize).rev() {
            x = x * self.p + reduced.coeff(i);
        }
        x
    }

    pub fn add(&self, x: u64, y: u64) -> u64 {
        debug_assert!(x < self.q && y < self.q);
        let (mut out, mut scale) = (0u64, 1u64);
        let (mut a, mut b) = (x, y);
        for _ in 0..self.k {
            out += (a % self.p + b % self.p) % self.p * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn neg(&self, x: u64) -> u64 {
        debug_assert!(x < self.q);
        let (mut out, mut scale) = (0u64, 1u64);
        let mut a = x;
        for _ in 0..self.k {
            let d = a % self.p;
            out += if d == 0 { 0 } else { self.p - d } * scale;
            a /= self.p;
            scale *= self.p;
        }
        out
    }

    pub fn sub(&self, x: u64, y: u64) -> u64 {
        self.add(x, self.neg(y))
    }

    pub fn mul(&self, x: u64, y: u64) -> u64 {
        debug_assert!(x < self.q && y < self.q);
        if self.k == 1 {
            return (x as u128 * y as u128 % self.p as u128) as u64;
        }
        self.encode(&self.decode(x).mul(&self.decode(y)))
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self, x: u64) -> u64 {
        assert!(x != 0, "inverse of zero field element");
        if self.k == 1 {
            return inv_mod(x, self.p);
        }
        self.pow(x, self.q - 2)
    }

    pub fn pow(&self, x: u64, mut e: u64) -> u64 {
        let mut base = x;
        let mut acc = 1u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            e >>= 1;
            if e > 0 {
                base = self.mul(base, base);
            }
        }
        acc
    }

    /// Order of a nonzero element in the multiplicative group.
    pub fn multiplicative_order(&self, x: u64) -> u64 {
        assert!(x != 0, "order of zero field element");
        let m = self.q - 1;
        super::divisors(m)
            .into_iter()
            .find(|&d| self.pow(x, d) == 1)
            .expect("element order divides q - 1")
    }

    /// The least primitive root in element order.
    pub fn primitive_root(&self) -> u64 {
        if self.q == 2 {
            return 1;
        }
        let m = self.q - 1;
        let prime_divs: Vec<u64> = factorize(m).into_iter().map(|(p, _)| p).collect();
        for x in 2..self.q {
            if prime_divs.iter().all(|&l| self.pow(x, m / l) != 1) {
                return x;
            }
        }
        unreachable!("every finite field has a primitive root")
    }

    /// The multiplicative group as an abstract cyclic group, together with
    /// its least generator.
    pub fn multiplicative_group(&self) -> (FiniteAbelianGroup, u64) {
        let group = FiniteAbelianGroup::from_factors(&[self.q - 1]);
        (group, self.primitive_root())
    }

    /// The unique subgroup `{x : x^d = 1}` of the (cyclic) multiplicative
    /// group, for `d` dividing `q - 1`. Sorted by element index.
    pub fn subgroup_of_order(&self, d: u64) -> Result<Vec<u64>> {
        if d == 0 || (self.q - 1) % d != 0 {
            return Err(Error::InvalidSubgroup(format!(
                "order {d} does not divide the group order {}",
                self.q - 1
            )));
        }
        Ok((1..self.q).filter(|&x| self.pow(x, d) == 1).collect())
    }

    /// Nonzero elements of the unique subfield of order `q0` (which must be
    /// `p^m` with `m` dividing the extension degree): `{x != 0 : x^q0 = x}`.
    pub fn subfield_nonzero(&self, q0: u64) -> Result<Vec<u64>> {
        let (p0, m) = prime_power(q0)?;
        if p0 != self.p || self.k % m != 0 {
            return Err(Error::InvalidArgument(format!(
                "F_{q0} is not a subfield of F_{}",
                self.q
            )));
        }
        let sub: Vec<u64> = (1..self.q).filter(|&x| self.pow(x, q0) == x).collect();
        debug_assert_eq!(sub.len() as u64, q0 - 1);
        Ok(sub)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn moduli_are_the_least_irreducibles() {
        assert_eq!(
            FiniteField::new(4).unwrap().modulus().to_string(),
            "X^2+X+1"
        );
        assert_eq!(FiniteField::new(9).unwrap().modulus().to_string(), "X^2+1");
        assert_eq!(FiniteField::new(5).unwrap().modulus().to_string(), "X");
        assert_eq!(FiniteField::new(8).unwrap().modulus().to_string(), "X^3+X+1");
    }

    #[test]
    fn rejects_non_prime_powers_and_oversized_orders() {
        assert!(matches!(
            FiniteField::new(6),
            Err(Error::NotPrimePower { n: 6, .. })
        ));
        assert!(matches!(
            FiniteField::new(4099),
            Err(Error::BoundExceeded { .. })
        ));
        assert!(matches!(
            FiniteField::with_bound(4098, 8192),
            Err(Error::NotPrimePower { n: 4098, .. })
        ));
    }

    #[test]
    fn f9_arithmetic_matches_direct_computation() {
        // F_9 = F_3[t]/(t^2+1); index a + 3b encodes a + bt. Oracle: compute
        // (a+bt)(c+dt) = (ac - bd) + (ad + bc)t by hand.
        let f = FiniteField::new(9).unwrap();
        for x in 0..9u64 {
            for y in 0..9u64 {
                let (a, b) = (x % 3, x / 3);
                let (c, d) = (y % 3, y / 3);
                let re = ((a * c) % 3 + 2 * ((b * d) % 3)) % 3;
                let im = (a * d + b * c) % 3;
                assert_eq!(f.mul(x, y), re + 3 * im, "({x})*({y})");
                assert_eq!(f.add(x, y), (a + c) % 3 + 3 * ((b + d) % 3));
            }
        }
    }

    #[test]
    fn field_axioms_hold_for_small_orders() {
        for q in [2u64, 3, 4, 5, 7, 8, 9, 16, 25, 27] {
            let f = FiniteField::new(q).unwrap();
            for x in f.elements() {
                assert_eq!(f.mul(x, 1), x);
                assert_eq!(f.add(x, 0), x);
                assert_eq!(f.add(x, f.neg(x)), 0);
                if x != 0 {
                    assert_eq!(f.mul(x, f.inv(x)), 1, "q={q} x={x}");
                }
                for y in f.elements() {
                    assert_eq!(f.mul(x, y), f.mul(y, x));
                    for z in f.elements() {
                        assert_eq!(f.mul(f.mul(x, y), z), f.mul(x, f.mul(y, z)));
                        assert_eq!(
                            f.mul(x, f.add(y, z)),
                            f.add(f.mul(x, y), f.mul(x, z)),
                            "distributivity q={q}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn primitive_roots_and_group_shapes() {
        let f5 = FiniteField::new(5).unwrap();
        let (g, root) = f5.multiplicative_group();
        assert_eq!(g.invariant_factors(), &[4]);
        assert_eq!(root, 2);

        let f2 = FiniteField::new(2).unwrap();
        let (g, root) = f2.multiplicative_group();
        assert!(g.invariant_factors().is_empty());
        assert_eq!(root, 1);

        let f9 = FiniteField::new(9).unwrap();
        let (g, root) = f9.multiplicative_group();
        assert_eq!(g.invariant_factors(), &[8]);
        assert_eq!(f9.multiplicative_order(root), 8);
        // Least generator: nothing below it generates.
        for x in 2..root {
            assert!(f9.multiplicative_order(x) < 8);
        }
    }

    #[test]
    fn subgroups_and_subfields() {
        let f9 = FiniteField::new(9).unwrap();
        let sub = f9.subgroup_of_order(2).unwrap();
        assert_eq!(sub.len(), 2);
        assert!(sub.contains(&1));
        // The other square root of 1 is -1, index 2.
        assert_eq!(sub, vec![1, 2]);
        assert!(f9.subgroup_of_order(3).is_err());

        let f_64 = FiniteField::new(64).unwrap();
        let sub8 = f_64.subfield_nonzero(8).unwrap();
        assert_eq!(sub8.len(), 7);
        // The subfield is multiplicatively closed.
        for &x in &sub8 {
            for &y in &sub8 {
                assert!(sub8.contains(&f_64.mul(x, y)));
            }
        }
        assert!(f_64.subfield_nonzero(16).is_err());
    }
}
