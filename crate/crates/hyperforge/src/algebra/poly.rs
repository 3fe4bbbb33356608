//! Dense univariate polynomials over a prime field `F_p`.
//!
//! Coefficients are stored little-endian (index = degree) and kept reduced
//! mod `p` with no trailing zeros, so every value has a unique
//! representation. The zero polynomial has an empty coefficient vector and
//! `degree() == None` (standing in for degree minus infinity).

use std::cmp::Ordering;
use std::fmt;

use crate::{Error, Result};

/// Largest degree accepted by [`FpPolynomial::factor`].
pub const FACTOR_DEGREE_BOUND: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

/// Result of [`FpPolynomial::factor`]: `f = unit * prod factor^multiplicity`
/// with monic irreducible factors sorted by degree, then coefficient order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factorization {
    pub unit: u64,
    pub factors: Vec<(FpPolynomial, u32)>,
}

impl FpPolynomial {
    /// Builds a polynomial from little-endian coefficients, reducing mod `p`
    /// and trimming trailing zeros. `p` must be prime; arithmetic assumes it.
    pub fn new(p: u64, coeffs: &[u64]) -> Self {
        assert!(p >= 2, "characteristic must be at least 2");
        let mut coeffs: Vec<u64> = coeffs.iter().map(|&c| c % p).collect();
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        FpPolynomial { p, coeffs }
    }

    pub fn zero(p: u64) -> Self {
        Self::new(p, &[])
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, &[1])
    }

    pub fn constant(p: u64, c: u64) -> Self {
        Self::new(p, &[c])
    }

    /// The polynomial `X`.
    pub fn x(p: u64) -> Self {
        Self::new(p, &[0, 1])
    }

    /// The monic degree-`deg` polynomial whose non-leading coefficients are
    /// the base-`p` digits of `code` (least significant digit = constant
    /// term). Enumerating `code` from 0 upward walks the monic polynomials of
    /// a fixed degree in increasing coefficient order; "first" and "least"
    /// below always refer to this order.
    pub fn monic_from_code(p: u64, deg: usize, mut code: u64) -> Self {
        let mut coeffs = vec![0u64; deg + 1];
        for c in coeffs.iter_mut().take(deg) {
            *c = code % p;
            code /= p;
        }
        debug_assert_eq!(code, 0, "code out of range for degree {deg}");
        coeffs[deg] = 1;
        FpPolynomial { p, coeffs }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    /// Little-endian coefficients with no trailing zeros.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `X^i` (zero beyond the stored length).
    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff() == 1
    }

    fn assert_same_field(&self, other: &Self) {
        assert_eq!(
            self.p, other.p,
            "mixed characteristics {} and {}",
            self.p, other.p
        );
    }

    pub fn add(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = vec![0u64; n];
        for (i, c) in out.iter_mut().enumerate() {
            *c = (self.coeff(i) + other.coeff(i)) % self.p;
        }
        Self::new(self.p, &out)
    }

    pub fn neg(&self) -> Self {
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|&c| if c == 0 { 0 } else { self.p - c })
            .collect();
        FpPolynomial { p: self.p, coeffs: out }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.p);
        }
        let mut out = vec![0u128; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                let cell = &mut out[i + j];
                *cell = (*cell + a as u128 * b as u128) % self.p as u128;
            }
        }
        let out: Vec<u64> = out.into_iter().map(|c| c as u64).collect();
        Self::new(self.p, &out)
    }

    pub fn mul_scalar(&self, s: u64) -> Self {
        let s = s % self.p;
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .map(|&c| (c as u128 * s as u128 % self.p as u128) as u64)
            .collect();
        Self::new(self.p, &out)
    }

    /// Scales to a monic polynomial (identity on zero).
    pub fn monic(&self) -> Self {
        let lead = self.leading_coeff();
        if lead == 0 || lead == 1 {
            return self.clone();
        }
        self.mul_scalar(inv_mod(lead, self.p))
    }

    /// Euclidean division; panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        self.assert_same_field(divisor);
        assert!(!divisor.is_zero(), "polynomial division by zero");
        let d = divisor.coeffs.len() - 1;
        if self.coeffs.len() <= d {
            return (Self::zero(self.p), self.clone());
        }
        let p = self.p;
        let lead_inv = inv_mod(divisor.leading_coeff(), p);
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; self.coeffs.len() - d];
        for k in (d..rem.len()).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let q = c as u128 * lead_inv as u128 % p as u128;
            quot[k - d] = q as u64;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = q * dc as u128 % p as u128;
                let cell = &mut rem[k - d + i];
                *cell = ((*cell as u128 + p as u128 - sub) % p as u128) as u64;
            }
        }
        (Self::new(p, &quot), Self::new(p, &rem))
    }

    pub fn rem(&self, divisor: &Self) -> Self {
        self.div_rem(divisor).1
    }

    /// Exact division; panics if `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &Self) -> Self {
        let (q, r) = self.div_rem(divisor);
        assert!(r.is_zero(), "inexact polynomial division");
        q
    }

    /// Monic greatest common divisor (zero if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        self.assert_same_field(other);
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.p);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn powmod(&self, mut e: u64, modulus: &Self) -> Self {
        let mut base = self.rem(modulus);
        let mut acc = Self::one(self.p).rem(modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).rem(modulus);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).rem(modulus);
            }
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.p);
        }
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| (c as u128 * (i as u64 % self.p) as u128 % self.p as u128) as u64)
            .collect();
        Self::new(self.p, &out)
    }

    pub fn eval(&self, x: u64) -> u64 {
        let p = self.p as u128;
        let x = (x % self.p) as u128;
        let mut acc: u128 = 0;
        for &c in self.coeffs.iter().rev() {
            acc = (acc * x + c as u128) % p;
        }
        acc as u64
    }

    /// `self(inner)`, by Horner's rule over polynomial arithmetic.
    pub fn compose(&self, inner: &Self) -> Self {
        self.assert_same_field(inner);
        let mut acc = Self::zero(self.p);
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&Self::constant(self.p, c));
        }
        acc
    }

    /// `self(-X)`: negates the odd-degree coefficients.
    pub fn substitute_neg_x(&self) -> Self {
        let out: Vec<u64> = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, &c)| {
                if i % 2 == 1 && c != 0 {
                    self.p - c
                } else {
                    c
                }
            })
            .collect();
        FpPolynomial { p: self.p, coeffs: out }
    }

    /// The `p`-th root of a polynomial of the form `g(X^p)`; over the prime
    /// field this is the polynomial with the same coefficients at the
    /// `p`-multiple exponents. Panics if other exponents are present.
    fn pth_root(&self) -> Self {
        let p = self.p as usize;
        let mut out = Vec::with_capacity(self.coeffs.len() / p + 1);
        for (i, &c) in self.coeffs.iter().enumerate() {
            if i % p == 0 {
                out.push(c);
            } else {
                assert!(c == 0, "polynomial is not a p-th power");
            }
        }
        Self::new(self.p, &out)
    }

    /// Total order used everywhere factors are listed: degree first, then
    /// coefficients compared from the leading term down.
    pub fn factor_cmp(&self, other: &Self) -> Ordering {
        self.assert_same_field(other);
        match self.coeffs.len().cmp(&other.coeffs.len()) {
            Ordering::Equal => self
                .coeffs
                .iter()
                .rev()
                .cmp(other.coeffs.iter().rev()),
            ord => ord,
        }
    }

    /// Deterministic irreducibility test: `f` of degree `k` is irreducible
    /// over `F_p` iff `X^(p^k) ≡ X (mod f)` and `gcd(X^(p^(k/l)) - X, f) = 1`
    /// for every prime `l` dividing `k`.
    pub fn is_irreducible(&self) -> bool {
        let k = match self.degree() {
            None | Some(0) => return false,
            Some(1) => return true,
            Some(k) => k,
        };
        let f = self.monic();
        let x = Self::x(self.p);
        // frob[j] = X^(p^j) mod f, built by iterated p-th powers.
        let mut frob = x.rem(&f);
        let mut frob_at = vec![frob.clone()];
        for _ in 0..k {
            frob = frob.powmod(self.p, &f);
            frob_at.push(frob.clone());
        }
        if frob_at[k] != x.rem(&f) {
            return false;
        }
        for (l, _) in super::factorize(k as u64) {
            let j = k / l as usize;
            let diff = frob_at[j].sub(&x);
            if !diff.gcd(&f).is_one() {
                return false;
            }
        }
        true
    }

    /// The least monic irreducible polynomial of degree `deg` over `F_p`, in
    /// the [`monic_from_code`](Self::monic_from_code) order.
    pub fn least_irreducible(p: u64, deg: usize) -> Self {
        let cap = (p as u128).checked_pow(deg as u32).expect("degree too large");
        let mut code = 0u64;
        loop {
            assert!((code as u128) < cap, "no irreducible of degree {deg} found");
            let f = Self::monic_from_code(p, deg, code);
            if f.is_irreducible() {
                return f;
            }
            code += 1;
        }
    }

    /// Complete factorization into monic irreducibles times a unit.
    ///
    /// Uses squarefree decomposition followed by Berlekamp's algorithm on
    /// each squarefree part. Deterministic: factors come out sorted by
    /// [`factor_cmp`](Self::factor_cmp).
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let deg = self.degree().unwrap();
        if deg > FACTOR_DEGREE_BOUND {
            return Err(Error::BoundExceeded {
                what: "factorization degree",
                got: deg as u128,
                limit: FACTOR_DEGREE_BOUND as u128,
            });
        }
        let unit = self.leading_coeff();
        let monic = self.monic();
        let mut factors: Vec<(FpPolynomial, u32)> = Vec::new();
        let mut parts = Vec::new();
        squarefree_parts(&monic, 1, &mut parts);
        for (part, mult) in parts {
            let mut irreducibles = Vec::new();
            berlekamp(&part, &mut irreducibles);
            for g in irreducibles {
                factors.push((g, mult));
            }
        }
        factors.sort_by(|a, b| a.0.factor_cmp(&b.0));
        Ok(Factorization { unit, factors })
    }
}

impl Factorization {
    /// Multiplies the factorization back out.
    pub fn expand(&self, p: u64) -> FpPolynomial {
        let mut acc = FpPolynomial::constant(p, self.unit);
        for (f, mult) in &self.factors {
            acc = acc.mul(&f.pow(*mult));
        }
        acc
    }
}

/// Squarefree decomposition of a monic polynomial in characteristic `p`
/// (Musser's algorithm with the `f' = 0` branch handled by p-th roots).
/// Appends `(monic squarefree part, multiplicity * mult_scale)` pairs.
fn squarefree_parts(f: &FpPolynomial, mult_scale: u32, out: &mut Vec<(FpPolynomial, u32)>) {
    if f.is_constant() {
        return;
    }
    let p = f.characteristic();
    let df = f.derivative();
    if df.is_zero() {
        squarefree_parts(&f.pth_root(), mult_scale * p as u32, out);
        return;
    }
    let mut c = f.gcd(&df);
    let mut w = f.div_exact(&c);
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c);
        let part = w.div_exact(&y);
        if !part.is_constant() {
            out.push((part, mult_scale * i));
        }
        w = y;
        c = c.div_exact(&w);
        i += 1;
    }
    if !c.is_constant() {
        squarefree_parts(&c.pth_root(), mult_scale * p as u32, out);
    }
}

/// Berlekamp's algorithm on a monic squarefree polynomial; pushes the monic
/// irreducible factors in deterministic order.
fn berlekamp(f: &FpPolynomial, out: &mut Vec<FpPolynomial>) {
    let p = f.characteristic();
    let d = f.degree().unwrap();
    if d == 1 {
        out.push(f.clone());
        return;
    }
    // Row i of Q holds the coefficients of X^(p*i) mod f.
    let xp = FpPolynomial::x(p).powmod(p, f);
    let mut q_rows: Vec<Vec<u64>> = Vec::with_capacity(d);
    let mut row_poly = FpPolynomial::one(p);
    for _ in 0..d {
        let mut row = vec![0u64; d];
        for (i, &c) in row_poly.coeffs().iter().enumerate() {
            row[i] = c;
        }
        q_rows.push(row);
        row_poly = row_poly.mul(&xp).rem(f);
    }
    // v is in the Berlekamp subalgebra iff v (Q - I) = 0; solve the
    // transposed system A v = 0 with A = (Q - I)^T.
    let mut a = vec![vec![0u64; d]; d];
    for i in 0..d {
        for j in 0..d {
            let mut entry = q_rows[i][j] % p;
            if i == j {
                entry = (entry + p - 1) % p;
            }
            a[j][i] = entry;
        }
    }
    let basis = nullspace_mod_p(&a, p);
    let factor_count = basis.len();
    let mut factors = vec![f.clone()];
    if factor_count == 1 {
        out.push(f.clone());
        return;
    }
    'split: for v in &basis {
        let v_poly = FpPolynomial::new(p, v);
        if v_poly.is_constant() {
            continue;
        }
        let mut next = Vec::with_capacity(factors.len());
        for g in factors {
            if g.degree() == Some(1) {
                next.push(g);
                continue;
            }
            // g splits as the product over c of gcd(g, v - c), because
            // v^p ≡ v mod f makes prod_c (v - c) vanish mod f.
            let mut rem_part = g;
            let mut pieces = Vec::new();
            for c in 0..p {
                if rem_part.is_constant() {
                    break;
                }
                let shifted = v_poly.sub(&FpPolynomial::constant(p, c));
                let h = rem_part.gcd(&shifted);
                if !h.is_constant() {
                    rem_part = rem_part.div_exact(&h);
                    pieces.push(h);
                }
            }
            debug_assert!(rem_part.is_constant());
            next.extend(pieces);
        }
        factors = next;
        if factors.len() == factor_count {
            break 'split;
        }
    }
    debug_assert_eq!(factors.len(), factor_count);
    out.append(&mut factors);
}

/// Basis of the nullspace of the `n x n` matrix `a` over `F_p`, via reduced
/// row echelon form. Vectors come out in ascending free-column order.
fn nullspace_mod_p(a: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let n = a.len();
    let mut m: Vec<Vec<u64>> = a.to_vec();
    let mut pivot_col_of_row = Vec::new();
    let mut pivot_row_of_col = vec![usize::MAX; n];
    let mut rank = 0;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        let inv = inv_mod(m[rank][col], p);
        for j in 0..n {
            m[rank][j] = (m[rank][j] as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..n {
            if r != rank && m[r][col] != 0 {
                let factor = m[r][col];
                for j in 0..n {
                    let sub = factor as u128 * m[rank][j] as u128 % p as u128;
                    m[r][j] = ((m[r][j] as u128 + p as u128 - sub) % p as u128) as u64;
                }
            }
        }
        pivot_col_of_row.push(col);
        pivot_row_of_col[col] = rank;
        rank += 1;
    }
    let mut basis = Vec::new();
    for free_col in 0..n {
        if pivot_row_of_col[free_col] != usize::MAX {
            continue;
        }
        let mut v = vec![0u64; n];
        v[free_col] = 1;
        for (row, &pc) in pivot_col_of_row.iter().enumerate() {
            let coeff = m[row][free_col];
            if coeff != 0 {
                v[pc] = p - coeff;
            }
        }
        basis.push(v);
    }
    basis
}

/// Inverse of `a` mod prime `p` by Fermat exponentiation.
pub(crate) fn inv_mod(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero mod {p}");
    pow_mod(a % p, p - 2, p)
}

pub(crate) fn pow_mod(base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc: u128 = 1;
    let mut b = base as u128 % m as u128;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * b % m as u128;
        }
        e >>= 1;
        b = b * b % m as u128;
    }
    acc as u64
}

impl fmt::Display for FpPolynomial {
    /// Renders like `X^3+2*X+1`: descending terms, unit coefficients
    /// suppressed, `*` between coefficient and power.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.display_with_var("X"))
    }
}

impl FpPolynomial {
    /// Same rendering as `Display` but with a caller-chosen variable name
    /// (base-ring polynomials print with `T` or `S`).
    pub fn display_with_var(&self, var: &str) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut terms = Vec::new();
        for (i, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let term = match (i, c) {
                (0, c) => c.to_string(),
                (1, 1) => var.to_string(),
                (1, c) => format!("{c}*{var}"),
                (i, 1) => format!("{var}^{i}"),
                (i, c) => format!("{c}*{var}^{i}"),
            };
            terms.push(term);
        }
        terms.join("+")
    }
}
