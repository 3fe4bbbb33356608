//! ℤ-independent coset families in quadratic extensions `L^×/K^×`, with
//! exact independence certificates and an independent brute-force oracle.
//!
//! Three concrete Galois ring extensions are supported, each a degree-2
//! setting with conjugation `σ`:
//!
//! * `GAUSS`: ℤ ⊆ ℤ[i], `σ(a+bi) = a−bi`;
//! * `FP_SQUARE(p)`: 𝔽_p[X²] ⊆ 𝔽_p[X] for odd `p`, `σ(f)(X) = f(−X)`;
//! * `F2_ARTIN_SCHREIER`: 𝔽₂[X²+X] ⊆ 𝔽₂[X], `σ(f)(X) = f(X+1)`.
//!
//! A family `a₁,…,a_k` of ring elements is certified independent via the
//! valuation matrix `M[i][j] = v_{Q_j}(aᵢ) − v_{σQ_j}(aᵢ)` over split primes
//! `Q_j`: full rank forces every multiplicative relation `∏ aᵢ^{nᵢ} ∈ K^×`
//! to have `n = 0`. The oracle checks the same statement from the other side
//! by enumerating exponent tuples and testing conjugation-fixedness exactly.

mod streams;

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::algebra::{rank_bareiss, FiniteField, FpPolynomial, GaussianInteger};
use crate::hyperfield::coset_partition;
use crate::{Error, Result};

pub use streams::{f2_artin_schreier_split_polys, fp_square_split_polys, gaussian_split_primes};

/// Which quadratic extension a family or record lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CaseTag {
    Gauss,
    FpSquare(u64),
    F2ArtinSchreier,
}

impl fmt::Display for CaseTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CaseTag::Gauss => write!(f, "GAUSS"),
            CaseTag::FpSquare(p) => write!(f, "FP_SQUARE({p})"),
            CaseTag::F2ArtinSchreier => write!(f, "F2_ARTIN_SCHREIER"),
        }
    }
}

impl FromStr for CaseTag {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "GAUSS" {
            return Ok(CaseTag::Gauss);
        }
        if s == "F2_ARTIN_SCHREIER" {
            return Ok(CaseTag::F2ArtinSchreier);
        }
        if let Some(inner) = s.strip_prefix("FP_SQUARE(").and_then(|r| r.strip_suffix(')')) {
            let p = inner
                .parse::<u64>()
                .map_err(|_| Error::InvalidArgument(format!("bad case tag {s:?}")))?;
            return Ok(CaseTag::FpSquare(p));
        }
        Err(Error::InvalidArgument(format!("bad case tag {s:?}")))
    }
}

impl Serialize for CaseTag {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for CaseTag {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(|e| D::Error::custom(format!("{e}")))
    }
}

/// Element of a ring carrying the degree-2 conjugation of its case.
///
/// `conj` must be a ring involution; `try_div_exact` returns the exact
/// quotient when the divisor divides. `products_equal(a, fa, b, fb)` decides
/// `a·fa == b·fb` and may shortcut the full multiplication.
pub trait ConjRing: Clone + Eq + fmt::Display {
    /// Type of the base prime under a split factor (a rational prime, or an
    /// irreducible polynomial in the base variable `T`).
    type Base: Clone + Eq + fmt::Debug + fmt::Display;

    fn conj(&self) -> Self;
    fn ring_mul(&self, other: &Self) -> Self;
    fn try_div_exact(&self, divisor: &Self) -> Option<Self>;
    fn is_zero(&self) -> bool;
    fn is_unit(&self) -> bool;
    fn one_like(&self) -> Self;

    fn products_equal(a: &Self, fa: &Self, b: &Self, fb: &Self) -> bool {
        a.ring_mul(fa) == b.ring_mul(fb)
    }
}

impl ConjRing for GaussianInteger {
    type Base = u64;

    fn conj(&self) -> Self {
        GaussianInteger::conj(self)
    }

    fn ring_mul(&self, other: &Self) -> Self {
        self.mul(other)
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        self.divide_exact(divisor)
    }

    fn is_zero(&self) -> bool {
        GaussianInteger::is_zero(self)
    }

    fn is_unit(&self) -> bool {
        GaussianInteger::is_unit(self)
    }

    fn one_like(&self) -> Self {
        GaussianInteger::one()
    }
}

/// `𝔽_p[X]` element under the conjugation `f(X) ↦ f(−X)` over `𝔽_p[X²]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareConjPoly(pub FpPolynomial);

/// `𝔽₂[X]` element under the conjugation `f(X) ↦ f(X+1)` over `𝔽₂[X²+X]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ArtinSchreierPoly(pub FpPolynomial);

impl fmt::Display for SquareConjPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Display for ArtinSchreierPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// `a·fa == b·fb` for nonzero polynomials, computing convolution
/// coefficients on demand from the constant term up so that mismatches exit
/// early (the common case in the oracle's search).
fn poly_products_equal(a: &FpPolynomial, fa: &FpPolynomial, b: &FpPolynomial, fb: &FpPolynomial) -> bool {
    if a.is_zero() || fa.is_zero() || b.is_zero() || fb.is_zero() {
        return a.mul(fa) == b.mul(fb);
    }
    let p = a.characteristic() as u128;
    let da = a.degree().unwrap() + fa.degree().unwrap();
    let db = b.degree().unwrap() + fb.degree().unwrap();
    if da != db {
        return false;
    }
    let conv = |x: &FpPolynomial, y: &FpPolynomial, k: usize| -> u64 {
        let (xc, yc) = (x.coeffs(), y.coeffs());
        let lo = (k + 1).saturating_sub(yc.len());
        let hi = k.min(xc.len() - 1);
        let mut acc: u128 = 0;
        for i in lo..=hi {
            acc += xc[i] as u128 * yc[k - i] as u128;
        }
        (acc % p) as u64
    };
    (0..=da).all(|k| conv(a, fa, k) == conv(b, fb, k))
}

impl ConjRing for SquareConjPoly {
    type Base = FpPolynomial;

    fn conj(&self) -> Self {
        SquareConjPoly(self.0.substitute_neg_x())
    }

    fn ring_mul(&self, other: &Self) -> Self {
        SquareConjPoly(self.0.mul(&other.0))
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then(|| SquareConjPoly(q))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.is_constant() && !self.0.is_zero()
    }

    fn one_like(&self) -> Self {
        SquareConjPoly(FpPolynomial::one(self.0.characteristic()))
    }

    fn products_equal(a: &Self, fa: &Self, b: &Self, fb: &Self) -> bool {
        poly_products_equal(&a.0, &fa.0, &b.0, &fb.0)
    }
}

impl ConjRing for ArtinSchreierPoly {
    type Base = FpPolynomial;

    fn conj(&self) -> Self {
        let p = self.0.characteristic();
        let x_plus_one = FpPolynomial::new(p, &[1, 1]);
        ArtinSchreierPoly(self.0.compose(&x_plus_one))
    }

    fn ring_mul(&self, other: &Self) -> Self {
        ArtinSchreierPoly(self.0.mul(&other.0))
    }

    fn try_div_exact(&self, divisor: &Self) -> Option<Self> {
        let (q, r) = self.0.div_rem(&divisor.0);
        r.is_zero().then(|| ArtinSchreierPoly(q))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn is_unit(&self) -> bool {
        self.0.is_constant() && !self.0.is_zero()
    }

    fn one_like(&self) -> Self {
        ArtinSchreierPoly(FpPolynomial::one(self.0.characteristic()))
    }

    fn products_equal(a: &Self, fa: &Self, b: &Self, fb: &Self) -> bool {
        poly_products_equal(&a.0, &fa.0, &b.0, &fb.0)
    }
}

/// A base prime together with its two conjugate factors upstairs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPrimeRecord<R: ConjRing> {
    /// The base prime (a rational prime `p`, or an irreducible `g` in `T`).
    pub base: R::Base,
    /// The canonical factor `Q` above the base prime.
    pub factor: R,
    /// Its conjugate `σQ`, distinct and non-associated.
    pub conjugate: R,
}

/// A family `a₁,…,a_k` together with the split-prime records certifying it.
///
/// Families built by the `build_*` constructors take `aᵢ` equal to the i-th
/// canonical factor, which realizes the avoidance pattern
/// `aᵢ ∈ Qᵢ ∖ (Q₁ ∪ … ∪ Q_{i−1} ∪ σQ₁ ∪ … ∪ σQᵢ)` by construction; custom
/// families may violate it (deliberately dependent controls).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WitnessFamily<R: ConjRing> {
    pub case: CaseTag,
    pub elements: Vec<R>,
    pub records: Vec<SplitPrimeRecord<R>>,
}

impl<R: ConjRing> WitnessFamily<R> {
    /// Wraps explicit elements and records, e.g. planted dependent families.
    /// Elements must be nonzero.
    pub fn custom(case: CaseTag, elements: Vec<R>, records: Vec<SplitPrimeRecord<R>>) -> Result<Self> {
        if elements.iter().any(|a| a.is_zero()) {
            return Err(Error::InvalidArgument(
                "witness family elements must be nonzero".into(),
            ));
        }
        Ok(WitnessFamily { case, elements, records })
    }

    pub fn k(&self) -> usize {
        self.elements.len()
    }

    /// Whether each `aᵢ` is divisible by its own factor `Qᵢ`, by no earlier
    /// factor, and by no conjugate factor `σQ_j` with `j ≤ i`.
    pub fn satisfies_avoidance(&self) -> Result<bool> {
        if self.elements.len() > self.records.len() {
            return Ok(false);
        }
        for (i, a) in self.elements.iter().enumerate() {
            if valuation(a, &self.records[i].factor)? == 0 {
                return Ok(false);
            }
            for (j, record) in self.records.iter().enumerate().take(i + 1) {
                if j < i && valuation(a, &record.factor)? > 0 {
                    return Ok(false);
                }
                if valuation(a, &record.conjugate)? > 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Gaussian family over the first `k` split primes, with `aᵢ = rᵢ`.
pub fn build_gaussian_family(k: usize) -> Result<WitnessFamily<GaussianInteger>> {
    require_family_size(k)?;
    let records = gaussian_split_primes(k);
    let elements = records.iter().map(|r| r.factor.clone()).collect();
    Ok(WitnessFamily { case: CaseTag::Gauss, elements, records })
}

/// `𝔽_p[X]` family over the first `k` split base primes of `𝔽_p[X²]`.
pub fn build_fp_square_family(p: u64, k: usize) -> Result<WitnessFamily<SquareConjPoly>> {
    require_family_size(k)?;
    let records = fp_square_split_polys(p, k)?;
    let elements = records.iter().map(|r| r.factor.clone()).collect();
    Ok(WitnessFamily { case: CaseTag::FpSquare(p), elements, records })
}

/// `𝔽₂[X]` family over the first `k` split base primes of `𝔽₂[X²+X]`.
pub fn build_f2_artin_schreier_family(k: usize) -> Result<WitnessFamily<ArtinSchreierPoly>> {
    require_family_size(k)?;
    let records = f2_artin_schreier_split_polys(k);
    let elements = records.iter().map(|r| r.factor.clone()).collect();
    Ok(WitnessFamily { case: CaseTag::F2ArtinSchreier, elements, records })
}

fn require_family_size(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::InvalidArgument(
            "a witness family needs at least one element".into(),
        ));
    }
    Ok(())
}

/// Exact multiplicity of `prime` in `x ≠ 0`, by repeated exact division.
pub fn valuation<R: ConjRing>(x: &R, prime: &R) -> Result<u64> {
    if x.is_zero() {
        return Err(Error::InvalidArgument("valuation of zero".into()));
    }
    if prime.is_zero() || prime.is_unit() {
        return Err(Error::InvalidArgument(
            "valuation base must be a nonzero nonunit".into(),
        ));
    }
    let mut v = 0;
    let mut current = x.clone();
    while let Some(next) = current.try_div_exact(prime) {
        v += 1;
        current = next;
    }
    Ok(v)
}

/// Outcome of a brute-force oracle run attached to a certificate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleOutcome {
    /// The exponent bound `N` that was searched.
    pub bound: u32,
    /// First relation found in search order, if any.
    pub relation: Option<Vec<i64>>,
}

/// Valuation-matrix certificate: full rank proves ℤ-independence of the
/// element cosets modulo the base field.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndependenceCertificate {
    pub case: CaseTag,
    pub k: usize,
    pub elements: Vec<String>,
    /// `matrix[i][j] = v_{Q_j}(aᵢ) − v_{σQ_j}(aᵢ)` over the family records.
    pub matrix: Vec<Vec<i64>>,
    /// Exact rank over ℚ (fraction-free elimination).
    pub rank: usize,
    /// True iff `rank == k`.
    pub independent: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub oracle: Option<OracleOutcome>,
}

impl IndependenceCertificate {
    pub fn with_oracle(mut self, bound: u32, relation: Option<Vec<i64>>) -> Self {
        self.oracle = Some(OracleOutcome { bound, relation });
        self
    }
}

/// Computes the valuation-difference matrix of the family over its records
/// and its exact rank. Rank `k` certifies that any relation
/// `∏ aᵢ^{nᵢ} ∈ K^×` forces `n = 0` (conjugation-symmetry of base elements
/// makes each matrix row of such a product vanish).
pub fn independence_certificate<R: ConjRing>(fam: &WitnessFamily<R>) -> Result<IndependenceCertificate> {
    let k = fam.k();
    let mut matrix = Vec::with_capacity(k);
    for a in &fam.elements {
        let mut row = Vec::with_capacity(fam.records.len());
        for record in &fam.records {
            let plus = valuation(a, &record.factor)? as i64;
            let minus = valuation(a, &record.conjugate)? as i64;
            row.push(plus - minus);
        }
        matrix.push(row);
    }
    let big: Vec<Vec<BigInt>> = matrix
        .iter()
        .map(|row| row.iter().map(|&e| BigInt::from(e)).collect())
        .collect();
    let rank = rank_bareiss(&big);
    Ok(IndependenceCertificate {
        case: fam.case,
        k,
        elements: fam.elements.iter().map(|a| a.to_string()).collect(),
        matrix,
        rank,
        independent: rank == k,
        oracle: None,
    })
}

/// Hard cap on oracle search size, in candidate exponent tuples.
pub const DEFAULT_ORACLE_BUDGET: u128 = 10_000_000;

/// Searches every nonzero exponent tuple with `|nᵢ| ≤ n_bound` for a
/// multiplicative relation `∏ aᵢ^{nᵢ} ∈ K^×`, i.e. a product fixed by the
/// conjugation. Negative exponents are cleared by moving conjugates across:
/// the test compares `A·σ(B)` with `σ(A)·B` where `A` collects positive and
/// `B` negative powers, so all arithmetic stays in the integral ring.
///
/// Coordinates enumerate in the order `0, 1, −1, 2, −2, …` with the first
/// coordinate outermost; the first relation in that order is returned.
pub fn brute_force_relation<R: ConjRing>(
    fam: &WitnessFamily<R>,
    n_bound: u32,
) -> Result<Option<Vec<i64>>> {
    brute_force_relation_with_budget(fam, n_bound, DEFAULT_ORACLE_BUDGET)
}

/// As [`brute_force_relation`] with an explicit tuple budget: the search
/// space `(2N+1)^k` must stay within it.
pub fn brute_force_relation_with_budget<R: ConjRing>(
    fam: &WitnessFamily<R>,
    n_bound: u32,
    budget: u128,
) -> Result<Option<Vec<i64>>> {
    let k = fam.k();
    if k == 0 {
        return Ok(None);
    }
    let within_budget = (2 * n_bound as u128 + 1)
        .checked_pow(k as u32)
        .is_some_and(|t| t <= budget);
    if !within_budget {
        return Err(Error::BudgetExceeded(format!(
            "(2·{n_bound}+1)^{k} candidate tuples exceed the budget of {budget}"
        )));
    }

    let order: Vec<i64> = std::iter::once(0)
        .chain((1..=n_bound as i64).flat_map(|e| [e, -e]))
        .collect();
    let one = fam.elements[0].one_like();
    let mut pow_self: Vec<Vec<R>> = Vec::with_capacity(k);
    let mut pow_conj: Vec<Vec<R>> = Vec::with_capacity(k);
    for a in &fam.elements {
        let mut ps = vec![one.clone()];
        let mut pc = vec![one.clone()];
        for e in 1..=n_bound as usize {
            ps.push(ps[e - 1].ring_mul(a));
            pc.push(pc[e - 1].ring_mul(&a.conj()));
        }
        pow_self.push(ps);
        pow_conj.push(pc);
    }

    let search = OracleSearch { order, pow_self, pow_conj, k };
    let mut exponents = vec![0i64; k];
    Ok(search.run(0, &one, &one, false, &mut exponents))
}

struct OracleSearch<R: ConjRing> {
    order: Vec<i64>,
    /// `pow_self[i][e] = aᵢ^e`, `pow_conj[i][e] = σ(aᵢ)^e`.
    pow_self: Vec<Vec<R>>,
    pow_conj: Vec<Vec<R>>,
    k: usize,
}

impl<R: ConjRing> OracleSearch<R> {
    /// Multipliers contributed to each side by `aᵢ^e`: exponent `e > 0`
    /// multiplies the left side by `aᵢ^e` and the right by `σ(aᵢ)^e`;
    /// `e < 0` contributes the mirror images.
    fn factors(&self, i: usize, e: i64) -> (&R, &R) {
        if e >= 0 {
            (&self.pow_self[i][e as usize], &self.pow_conj[i][e as usize])
        } else {
            (&self.pow_conj[i][(-e) as usize], &self.pow_self[i][(-e) as usize])
        }
    }

    fn run(&self, depth: usize, lhs: &R, rhs: &R, any_nonzero: bool, exps: &mut Vec<i64>) -> Option<Vec<i64>> {
        if depth == self.k - 1 {
            for &e in &self.order {
                if e == 0 && !any_nonzero {
                    continue;
                }
                let (fl, fr) = self.factors(depth, e);
                if R::products_equal(lhs, fl, rhs, fr) {
                    exps[depth] = e;
                    return Some(exps.clone());
                }
            }
            return None;
        }
        for &e in &self.order {
            exps[depth] = e;
            let found = if e == 0 {
                self.run(depth + 1, lhs, rhs, any_nonzero, exps)
            } else {
                let (fl, fr) = self.factors(depth, e);
                let next_l = lhs.ring_mul(fl);
                let next_r = rhs.ring_mul(fr);
                self.run(depth + 1, &next_l, &next_r, true, exps)
            };
            if found.is_some() {
                return found;
            }
        }
        None
    }
}

/// Evidence that `𝔽_{q²}^×/𝔽_q^×` is torsion: the quotient is finite of
/// order `q+1`, so every coset has finite order and the rational rank is 0.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TorsionRankReport {
    pub q: u64,
    /// `(q²−1)/(q−1) = q+1`.
    pub quotient_order: u64,
    /// Order of each nonzero coset class in the quotient, listed by
    /// ascending least representative.
    pub coset_orders: Vec<u64>,
    pub all_torsion: bool,
    pub rational_rank: u64,
}

/// Builds the quotient `𝔽_{q²}^×/𝔽_q^×` and reports the order of every
/// coset, confirming the group is torsion of order `q+1`.
pub fn torsion_rank_report(q: u64) -> Result<TorsionRankReport> {
    let field = FiniteField::new(q * q)?;
    let subgroup = field.subfield_nonzero(q)?;
    let subgroup_set: std::collections::HashSet<u64> = subgroup.iter().copied().collect();
    let (_, classes) = coset_partition(&field, &subgroup)?;
    let quotient_order = (classes.len() - 1) as u64;
    let mut coset_orders = Vec::with_capacity(classes.len() - 1);
    for class in classes.iter().skip(1) {
        let rep = class[0];
        let mut power = rep;
        let mut order = 1;
        while !subgroup_set.contains(&power) {
            power = field.mul(power, rep);
            order += 1;
        }
        coset_orders.push(order);
    }
    let all_torsion = !coset_orders.is_empty() && coset_orders.iter().all(|&m| m >= 1);
    Ok(TorsionRankReport {
        q,
        quotient_order,
        coset_orders,
        all_torsion,
        rational_rank: 0,
    })
}

#[cfg(test)]
mod tests;
