//! Exact arithmetic substrate: prime-field polynomials, finite fields with
//! deterministic moduli, finite abelian groups, Gaussian integers, rationals,
//! and exact integer linear algebra.

mod field;
mod gaussian;
mod group;
mod linalg;
mod poly;

pub use field::{FiniteField, DEFAULT_FIELD_BOUND};
pub(crate) use gaussian::two_squares;
pub use gaussian::GaussianInteger;
pub use group::{
    abelian_groups_of_order, subgroups_of_cyclic, CyclicSubgroup, FiniteAbelianGroup,
};
pub use linalg::rank_bareiss;
pub use poly::{Factorization, FpPolynomial};

/// Arbitrary-precision rational numbers, always stored reduced with a
/// positive denominator. Used wherever a computation needs exact division
/// (rational rank checks, elimination oracles).
pub use num_rational::BigRational;

/// Trial-division factorization of `n ≥ 1` into `(prime, exponent)` pairs in
/// ascending prime order.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            let mut e = 0;
            while n % d == 0 {
                n /= d;
                e += 1;
            }
            out.push((d, e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Decomposes a prime power `q = p^k` into `(p, k)`.
pub fn prime_power(q: u64) -> crate::Result<(u64, u32)> {
    if q < 2 {
        return Err(crate::Error::NotPrimePower {
            n: q,
            factorization: q.to_string(),
        });
    }
    let factors = factorize(q);
    if factors.len() != 1 {
        let text = factors
            .iter()
            .map(|&(p, e)| {
                if e == 1 {
                    p.to_string()
                } else {
                    format!("{p}^{e}")
                }
            })
            .collect::<Vec<_>>()
            .join(" * ");
        return Err(crate::Error::NotPrimePower {
            n: q,
            factorization: text,
        });
    }
    Ok(factors[0])
}

/// All divisors of `n` in ascending order.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 1;
    while d * d <= n {
        if n % d == 0 {
            out.push(d);
            if d != n / d {
                out.push(n / d);
            }
        }
        d += 1;
    }
    out.sort_unstable();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factorize_small() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(12), vec![(2, 2), (3, 1)]);
        assert_eq!(factorize(97), vec![(97, 1)]);
    }

    #[test]
    fn prime_power_accepts_powers_and_rejects_composites() {
        assert_eq!(prime_power(9).unwrap(), (3, 2));
        assert_eq!(prime_power(64).unwrap(), (2, 6));
        assert_eq!(prime_power(5).unwrap(), (5, 1));
        let err = prime_power(6).unwrap_err();
        assert!(matches!(err, crate::Error::NotPrimePower { n: 6, .. }));
        assert!(prime_power(1).is_err());
        assert!(prime_power(0).is_err());
    }

    #[test]
    fn divisors_are_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(8), vec![1, 2, 4, 8]);
    }
}
