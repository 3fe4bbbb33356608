//! Deterministic streams of split base primes for the three witness cases.

use crate::algebra::{factorize, two_squares, FpPolynomial, GaussianInteger};
use crate::{Error, Result};

use super::{ArtinSchreierPoly, ConjRing, SplitPrimeRecord, SquareConjPoly};

fn is_prime(n: u64) -> bool {
    n > 1 && factorize(n) == vec![(n, 1)]
}

/// The first `count` rational primes `p ≡ 1 (mod 4)` in increasing order,
/// each with its Gaussian factorization `p = r·r̄` where `r = a+bi` is
/// canonical (`a > b > 0`).
pub fn gaussian_split_primes(count: usize) -> Vec<SplitPrimeRecord<GaussianInteger>> {
    let mut records = Vec::with_capacity(count);
    let mut p = 5u64;
    while records.len() < count {
        if is_prime(p) {
            let (a, b) = two_squares(p).expect("p ≡ 1 (mod 4) is a sum of two squares");
            let factor = GaussianInteger::from_i64(a as i64, b as i64);
            let conjugate = factor.conj();
            records.push(SplitPrimeRecord { base: p, factor, conjugate });
        }
        p += 4;
    }
    records
}

/// Monic irreducible polynomials over `𝔽_p` in (degree, coefficient-code)
/// order, i.e. the order of [`FpPolynomial::monic_from_code`].
fn irreducibles(p: u64) -> impl Iterator<Item = FpPolynomial> {
    (1usize..).flat_map(move |deg| {
        let cap = (p as u64)
            .checked_pow(deg as u32)
            .expect("irreducible stream degree overflow");
        (0..cap)
            .map(move |code| FpPolynomial::monic_from_code(p, deg, code))
            .filter(|g| g.is_irreducible())
    })
}

/// Splits `h = g(inner)` into its two conjugate factors, if it does split.
///
/// In a degree-2 extension the base prime `g` either stays irreducible
/// (inert), ramifies (`h = f²`), or splits as `h = f·σf` with `σf ≠ f`; only
/// the last shape produces a record.
fn split_factors(
    h: &FpPolynomial,
    conj: impl Fn(&FpPolynomial) -> FpPolynomial,
) -> Option<(FpPolynomial, FpPolynomial)> {
    let factorization = h.factor().expect("degree is within the factoring bound");
    let factors = &factorization.factors;
    if factors.len() != 2 || factors[0].1 != 1 || factors[1].1 != 1 {
        return None;
    }
    let (f1, f2) = (&factors[0].0, &factors[1].0);
    if f1.degree() != f2.degree() {
        return None;
    }
    assert_eq!(
        conj(f1).monic(),
        f2.clone(),
        "the two factors of a split base prime must be conjugate"
    );
    Some((f1.clone(), f2.clone()))
}

/// Streams the first `count` irreducible `g(T)` over `𝔽_p` (odd `p`) whose
/// substitution `g(X²)` splits into two conjugate irreducible factors under
/// `X ↦ −X`.
///
/// Base primes come in (degree, coefficient-code) order. The canonical
/// factor of a split degree-1 base `T − a²` is `X − a` with
/// `1 ≤ a ≤ (p−1)/2`; for higher degrees it is the factor that is least in
/// coefficient-code order.
pub fn fp_square_split_polys(p: u64, count: usize) -> Result<Vec<SplitPrimeRecord<SquareConjPoly>>> {
    if p == 2 || !is_prime(p) {
        return Err(Error::InvalidArgument(format!(
            "expected an odd prime characteristic, got {p}"
        )));
    }
    let x_squared = FpPolynomial::new(p, &[0, 0, 1]);
    let mut records = Vec::with_capacity(count);
    for g in irreducibles(p) {
        if records.len() >= count {
            break;
        }
        let h = g.compose(&x_squared);
        let Some((f1, f2)) = split_factors(&h, |f| f.substitute_neg_x()) else {
            continue;
        };
        let (factor, conjugate) = canonical_square_pair(p, f1, f2);
        records.push(SplitPrimeRecord {
            base: g,
            factor: SquareConjPoly(factor),
            conjugate: SquareConjPoly(conjugate),
        });
    }
    Ok(records)
}

/// Orders the conjugate pair `{X−a, X+a}` as `(X−a, X+a)` with
/// `1 ≤ a ≤ (p−1)/2`; higher-degree pairs keep the factoring order
/// (coefficient-code least first).
fn canonical_square_pair(
    p: u64,
    f1: FpPolynomial,
    f2: FpPolynomial,
) -> (FpPolynomial, FpPolynomial) {
    if f1.degree() == Some(1) {
        let root = (p - f1.coeff(0)) % p;
        let a = root.min(p - root);
        let x_minus_a = FpPolynomial::new(p, &[p - a, 1]);
        let x_plus_a = FpPolynomial::new(p, &[a, 1]);
        (x_minus_a, x_plus_a)
    } else {
        (f1, f2)
    }
}

/// Streams the first `count` irreducible `g(T)` over `𝔽₂` whose substitution
/// `g(X²+X)` splits into two conjugate factors under `X ↦ X+1`. The stream
/// starts with `g = T` itself (`X²+X = X·(X+1)`).
pub fn f2_artin_schreier_split_polys(count: usize) -> Vec<SplitPrimeRecord<ArtinSchreierPoly>> {
    let inner = FpPolynomial::new(2, &[0, 1, 1]);
    let mut records = Vec::with_capacity(count);
    for g in irreducibles(2) {
        if records.len() >= count {
            break;
        }
        let h = g.compose(&inner);
        let shift = |f: &FpPolynomial| f.compose(&FpPolynomial::new(2, &[1, 1]));
        let Some((f1, f2)) = split_factors(&h, shift) else {
            continue;
        };
        records.push(SplitPrimeRecord {
            base: g,
            factor: ArtinSchreierPoly(f1),
            conjugate: ArtinSchreierPoly(f2),
        });
    }
    records
}

impl<R: ConjRing> SplitPrimeRecord<R> {
    /// The base prime re-assembled from its two factors.
    pub fn product(&self) -> R {
        self.factor.ring_mul(&self.conjugate)
    }
}
