//! Finite hyperfields: structures whose addition is multivalued.
//!
//! A hyperfield has an abelian multiplicative group on its nonzero elements
//! and a hyperaddition that sends each pair of elements to a *nonempty
//! subset* of the carrier. Element `0` is always the additive neutral and is
//! absorbing for multiplication. Carriers are numbered `0..n` and capped at
//! [`MAX_CARRIER`] elements so that subsets fit in a [`u128`] bitmask.
//!
//! Construction validates the multiplicative tables (abelian group on the
//! nonzero part, absorbing zero, involutive negation); the hyperaddition
//! axioms are *not* enforced at construction so that defective tables can be
//! examined. [`FiniteHyperfield::verify_axioms`] renders the six additive
//! verdicts: commutativity, associativity, unique inverse, reversibility,
//! neutral element, and distributivity (the last checked as set equality).

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::algebra::{FiniteAbelianGroup, FiniteField};
use crate::{Error, Result};

mod enumerate;
mod iso;

pub use enumerate::enumerate_hyperfields;
pub use iso::{are_isomorphic, is_krasner_within};

/// A subset of the carrier: bit `i` is set exactly when element `i` is a member.
pub type ElemSet = u128;

/// Largest carrier size representable by the [`ElemSet`] bitmask.
pub const MAX_CARRIER: usize = 128;

/// Builds an [`ElemSet`] from element indices.
pub fn set_of<I: IntoIterator<Item = usize>>(members: I) -> ElemSet {
    members.into_iter().fold(0, |acc, i| {
        debug_assert!(i < MAX_CARRIER);
        acc | (1u128 << i)
    })
}

/// Lists the members of `set` in ascending order.
pub fn members_of(set: ElemSet) -> Vec<usize> {
    bits(set).collect()
}

/// Iterates over the set bits of `set`, ascending.
pub(crate) fn bits(mut set: ElemSet) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if set == 0 {
            return None;
        }
        let i = set.trailing_zeros() as usize;
        set &= set - 1;
        Some(i)
    })
}

/// A finite hyperfield given by explicit tables.
///
/// Indices `0..n` name the elements; `0` is the additive neutral. `mul` and
/// `neg` are single-valued; `hyperadd` maps each ordered pair to a nonempty
/// subset. The JSON form spells subsets as ascending member lists:
/// `{"n":…, "one":…, "mul":[[…]], "neg":[…], "hyperadd":[[[…]]]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "HyperfieldRepr", into = "HyperfieldRepr")]
pub struct FiniteHyperfield {
    n: usize,
    one: usize,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    add: Vec<Vec<ElemSet>>,
}

#[derive(Serialize, Deserialize)]
struct HyperfieldRepr {
    n: usize,
    one: usize,
    mul: Vec<Vec<usize>>,
    neg: Vec<usize>,
    hyperadd: Vec<Vec<Vec<usize>>>,
}

impl TryFrom<HyperfieldRepr> for FiniteHyperfield {
    type Error = Error;

    fn try_from(repr: HyperfieldRepr) -> Result<Self> {
        FiniteHyperfield::from_tables(repr.n, repr.one, repr.mul, repr.neg, repr.hyperadd)
    }
}

impl From<FiniteHyperfield> for HyperfieldRepr {
    fn from(h: FiniteHyperfield) -> Self {
        let hyperadd = h
            .add
            .iter()
            .map(|row| row.iter().map(|&s| members_of(s)).collect())
            .collect();
        HyperfieldRepr {
            n: h.n,
            one: h.one,
            mul: h.mul,
            neg: h.neg,
            hyperadd,
        }
    }
}

impl FiniteHyperfield {
    /// Builds a hyperfield from explicit tables, with `hyperadd` given as
    /// member lists.
    ///
    /// Validation covers the single-valued structure: table shapes, an
    /// abelian group on the nonzero part with identity `one`, absorbing
    /// zero, and an involutive `neg` fixing zero. Hyperaddition entries only
    /// need to be nonempty subsets — whether they satisfy the additive
    /// axioms is reported by [`Self::verify_axioms`], not enforced here.
    pub fn from_tables(
        n: usize,
        one: usize,
        mul: Vec<Vec<usize>>,
        neg: Vec<usize>,
        hyperadd: Vec<Vec<Vec<usize>>>,
    ) -> Result<Self> {
        if hyperadd.len() != n || hyperadd.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable(format!(
                "hyperadd must be a {n}x{n} table"
            )));
        }
        let mut add = vec![vec![0 as ElemSet; n]; n];
        for (i, row) in hyperadd.iter().enumerate() {
            for (j, cell) in row.iter().enumerate() {
                if cell.is_empty() {
                    return Err(Error::MalformedTable(format!(
                        "hyperadd({i},{j}) is empty"
                    )));
                }
                for &v in cell {
                    if v >= n {
                        return Err(Error::MalformedTable(format!(
                            "hyperadd({i},{j}) contains {v}, outside 0..{n}"
                        )));
                    }
                    add[i][j] |= 1u128 << v;
                }
            }
        }
        Self::from_parts(n, one, mul, neg, add)
    }

    /// As [`Self::from_tables`], but with hyperaddition already in bitmask form.
    pub(crate) fn from_parts(
        n: usize,
        one: usize,
        mul: Vec<Vec<usize>>,
        neg: Vec<usize>,
        add: Vec<Vec<ElemSet>>,
    ) -> Result<Self> {
        if n == 0 {
            return Err(Error::MalformedTable(
                "carrier must contain the zero element".into(),
            ));
        }
        if n > MAX_CARRIER {
            return Err(Error::BoundExceeded {
                what: "carrier size",
                got: n as u128,
                limit: MAX_CARRIER as u128,
            });
        }
        if one == 0 || one >= n {
            return Err(Error::MalformedTable(format!(
                "one = {one} must be a nonzero element below {n}"
            )));
        }
        if mul.len() != n || mul.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable(format!("mul must be a {n}x{n} table")));
        }
        if let Some(&v) = mul.iter().flatten().find(|&&v| v >= n) {
            return Err(Error::MalformedTable(format!(
                "mul contains {v}, outside 0..{n}"
            )));
        }
        if neg.len() != n || neg.iter().any(|&v| v >= n) {
            return Err(Error::MalformedTable(format!(
                "neg must list {n} elements below {n}"
            )));
        }
        if add.len() != n || add.iter().any(|row| row.len() != n) {
            return Err(Error::MalformedTable(format!(
                "hyperadd must be a {n}x{n} table"
            )));
        }
        let carrier = carrier_mask(n);
        for (i, row) in add.iter().enumerate() {
            for (j, &s) in row.iter().enumerate() {
                if s == 0 {
                    return Err(Error::MalformedTable(format!(
                        "hyperadd({i},{j}) is empty"
                    )));
                }
                if s & !carrier != 0 {
                    return Err(Error::MalformedTable(format!(
                        "hyperadd({i},{j}) leaves the carrier"
                    )));
                }
            }
        }
        for i in 0..n {
            if mul[i][0] != 0 || mul[0][i] != 0 {
                return Err(Error::MalformedTable(format!(
                    "zero must absorb products, got 0*{i} or {i}*0 nonzero"
                )));
            }
        }
        for i in 1..n {
            for j in 1..n {
                if mul[i][j] == 0 {
                    return Err(Error::MalformedTable(format!(
                        "nonzero product {i}*{j} hits zero"
                    )));
                }
                if mul[i][j] != mul[j][i] {
                    return Err(Error::MalformedTable(format!(
                        "mul is not commutative at ({i},{j})"
                    )));
                }
            }
        }
        for i in 1..n {
            if mul[one][i] != i {
                return Err(Error::MalformedTable(format!(
                    "one*{i} = {} instead of {i}",
                    mul[one][i]
                )));
            }
        }
        for a in 1..n {
            for b in 1..n {
                for c in 1..n {
                    if mul[mul[a][b]][c] != mul[a][mul[b][c]] {
                        return Err(Error::MalformedTable(format!(
                            "mul is not associative at ({a},{b},{c})"
                        )));
                    }
                }
            }
        }
        for i in 1..n {
            if !(1..n).any(|j| mul[i][j] == one) {
                return Err(Error::MalformedTable(format!(
                    "{i} has no multiplicative inverse"
                )));
            }
        }
        if neg[0] != 0 {
            return Err(Error::MalformedTable("neg(0) must be 0".into()));
        }
        for i in 1..n {
            if neg[i] == 0 {
                return Err(Error::MalformedTable(format!("neg({i}) must be nonzero")));
            }
            if neg[neg[i]] != i {
                return Err(Error::MalformedTable(format!(
                    "neg is not an involution at {i}"
                )));
            }
        }
        Ok(FiniteHyperfield {
            n,
            one,
            mul,
            neg,
            add,
        })
    }

    /// Number of elements, the zero element included.
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    /// All element indices in canonical order.
    pub fn elements(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// The hyperaddition value `x + y` as a bitmask.
    pub fn hyperadd(&self, x: usize, y: usize) -> ElemSet {
        self.add[x][y]
    }

    /// The hyperaddition value `x + y` as an ascending member list.
    pub fn hyperadd_members(&self, x: usize, y: usize) -> Vec<usize> {
        members_of(self.add[x][y])
    }

    /// Bitmask of the whole carrier.
    pub fn carrier_mask(&self) -> ElemSet {
        carrier_mask(self.n)
    }

    /// Bitmask of the nonzero elements.
    pub fn nonzero_mask(&self) -> ElemSet {
        carrier_mask(self.n) & !1
    }

    /// Elementwise hyperaddition of two subsets: the union of `x + y` over
    /// all members `x` of `a` and `y` of `b`.
    pub fn add_sets(&self, a: ElemSet, b: ElemSet) -> ElemSet {
        let mut out = 0;
        for x in bits(a) {
            for y in bits(b) {
                out |= self.add[x][y];
            }
        }
        out
    }

    fn add_set_elem(&self, a: ElemSet, y: usize) -> ElemSet {
        bits(a).fold(0, |acc, x| acc | self.add[x][y])
    }

    /// Order of a nonzero element in the multiplicative group.
    pub fn multiplicative_order(&self, x: usize) -> usize {
        assert!(x != 0 && x < self.n, "order is defined for nonzero elements");
        let mut acc = x;
        let mut k = 1;
        while acc != self.one {
            acc = self.mul[acc][x];
            k += 1;
        }
        k
    }

    /// Checks the six hyperaddition axioms by exhaustive enumeration and
    /// reports each verdict with the first counterexample found.
    ///
    /// The unique-inverse and reversibility checks use the structure's own
    /// `neg` table: `neg(x)` must be the only `y` with `0 ∈ x + y`, and
    /// `z ∈ x + y` must imply `y ∈ z + neg(x)`.
    pub fn verify_axioms(&self) -> AxiomReport {
        AxiomReport {
            commutativity: self.check_commutativity(),
            associativity: self.check_associativity(),
            unique_inverse: self.check_unique_inverse(),
            reversibility: self.check_reversibility(),
            neutral_element: self.check_neutral_element(),
            distributivity: self.check_distributivity(),
        }
    }

    /// First pair `(x, y)` with `x + y ≠ y + x`.
    fn check_commutativity(&self) -> AxiomVerdict {
        for x in 0..self.n {
            for y in 0..self.n {
                if self.add[x][y] != self.add[y][x] {
                    return AxiomVerdict::fail(vec![x, y]);
                }
            }
        }
        AxiomVerdict::pass()
    }

    /// First triple `(x, y, z)` with `(x + y) + z ≠ x + (y + z)` as sets.
    fn check_associativity(&self) -> AxiomVerdict {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in 0..self.n {
                    let lhs = self.add_set_elem(self.add[x][y], z);
                    let rhs = bits(self.add[y][z]).fold(0, |acc, w| acc | self.add[x][w]);
                    if lhs != rhs {
                        return AxiomVerdict::fail(vec![x, y, z]);
                    }
                }
            }
        }
        AxiomVerdict::pass()
    }

    /// First `x` whose set of additive inverses `{y : 0 ∈ x + y}` differs
    /// from `{neg(x)}`.
    fn check_unique_inverse(&self) -> AxiomVerdict {
        for x in 0..self.n {
            for y in 0..self.n {
                let hits_zero = self.add[x][y] & 1 != 0;
                if hits_zero != (y == self.neg[x]) {
                    return AxiomVerdict::fail(vec![x]);
                }
            }
        }
        AxiomVerdict::pass()
    }

    /// First triple `(x, y, z)` with `z ∈ x + y` but `y ∉ z + neg(x)`.
    fn check_reversibility(&self) -> AxiomVerdict {
        for x in 0..self.n {
            for y in 0..self.n {
                for z in bits(self.add[x][y]) {
                    if self.add[z][self.neg[x]] & (1u128 << y) == 0 {
                        return AxiomVerdict::fail(vec![x, y, z]);
                    }
                }
            }
        }
        AxiomVerdict::pass()
    }

    /// First `x` with `x + 0 ≠ {x}`.
    fn check_neutral_element(&self) -> AxiomVerdict {
        for x in 0..self.n {
            if self.add[x][0] != 1u128 << x {
                return AxiomVerdict::fail(vec![x]);
            }
        }
        AxiomVerdict::pass()
    }

    /// First triple `(z, x, y)` with `z·(x + y) ≠ z·x + z·y` as sets.
    fn check_distributivity(&self) -> AxiomVerdict {
        for z in 0..self.n {
            for x in 0..self.n {
                for y in 0..self.n {
                    let lhs = bits(self.add[x][y]).fold(0, |acc, w| acc | (1u128 << self.mul[z][w]));
                    let rhs = self.add[self.mul[z][x]][self.mul[z][y]];
                    if lhs != rhs {
                        return AxiomVerdict::fail(vec![z, x, y]);
                    }
                }
            }
        }
        AxiomVerdict::pass()
    }

    /// Whether every nonzero `x` has `x + x = {x, 0}` (and `0 + 0 = {0}`).
    pub fn is_cc(&self) -> bool {
        if self.add[0][0] != 1 {
            return false;
        }
        (1..self.n).all(|x| self.add[x][x] == (1u128 << x) | 1)
    }

    /// Renders the tables as aligned text, one operation per block.
    pub fn table_string(&self) -> String {
        let n = self.n;
        let mut out = String::new();
        let _ = writeln!(out, "carrier: {n} elements (zero = 0, one = {})", self.one);
        let _ = write!(out, "neg:");
        for x in 0..n {
            let _ = write!(out, " {}", self.neg[x]);
        }
        out.push('\n');
        let cell = |s: ElemSet| {
            let parts: Vec<String> = members_of(s).iter().map(|v| v.to_string()).collect();
            format!("{{{}}}", parts.join(","))
        };
        let mul_cells: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| self.mul[i][j].to_string()).collect())
            .collect();
        let add_cells: Vec<Vec<String>> = (0..n)
            .map(|i| (0..n).map(|j| cell(self.add[i][j])).collect())
            .collect();
        for (title, cells) in [("mul", &mul_cells), ("hyperadd", &add_cells)] {
            let width = cells
                .iter()
                .flatten()
                .map(|s| s.len())
                .max()
                .unwrap_or(1)
                .max(format!("{}", n - 1).len());
            let _ = writeln!(out, "{title}:");
            let _ = write!(out, "{:>w$} |", "", w = width);
            for j in 0..n {
                let _ = write!(out, " {j:>w$}", w = width);
            }
            out.push('\n');
            let _ = writeln!(out, "{}-+{}", "-".repeat(width), "-".repeat((width + 1) * n));
            for i in 0..n {
                let _ = write!(out, "{i:>w$} |", w = width);
                for j in 0..n {
                    let _ = write!(out, " {:>w$}", cells[i][j], w = width);
                }
                out.push('\n');
            }
        }
        out
    }
}

fn carrier_mask(n: usize) -> ElemSet {
    if n == MAX_CARRIER {
        !0
    } else {
        (1u128 << n) - 1
    }
}

/// Outcome of one axiom check: pass, or fail with the first counterexample.
///
/// The counterexample lists the elements the failing instance quantifies
/// over, in the order the axiom's own docs state them.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomVerdict {
    pub passed: bool,
    pub counterexample: Option<Vec<usize>>,
}

impl AxiomVerdict {
    fn pass() -> Self {
        AxiomVerdict {
            passed: true,
            counterexample: None,
        }
    }

    fn fail(witness: Vec<usize>) -> Self {
        AxiomVerdict {
            passed: false,
            counterexample: Some(witness),
        }
    }
}

/// Verdicts for the six hyperfield axioms, one [`AxiomVerdict`] each.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AxiomReport {
    pub commutativity: AxiomVerdict,
    pub associativity: AxiomVerdict,
    #[serde(rename = "unique inverse")]
    pub unique_inverse: AxiomVerdict,
    pub reversibility: AxiomVerdict,
    #[serde(rename = "neutral element")]
    pub neutral_element: AxiomVerdict,
    pub distributivity: AxiomVerdict,
}

impl AxiomReport {
    pub fn all_pass(&self) -> bool {
        self.verdicts().iter().all(|(_, v)| v.passed)
    }

    /// The six verdicts with their display names, in report order.
    pub fn verdicts(&self) -> [(&'static str, &AxiomVerdict); 6] {
        [
            ("commutativity", &self.commutativity),
            ("associativity", &self.associativity),
            ("unique inverse", &self.unique_inverse),
            ("reversibility", &self.reversibility),
            ("neutral element", &self.neutral_element),
            ("distributivity", &self.distributivity),
        ]
    }
}

/// Partitions a field into the cosets of a multiplicative subgroup.
///
/// Returns `(class_of, members)`: `class_of[x]` is the class id of field
/// element `x`, and `members[c]` lists class `c` ascending. Class 0 is
/// `{0}`; nonzero classes are numbered by their least member, so the class
/// of 1 (the subgroup itself) is always class 1.
pub fn coset_partition(
    field: &FiniteField,
    subgroup: &[u64],
) -> Result<(Vec<usize>, Vec<Vec<u64>>)> {
    let g = validate_subgroup(field, subgroup)?;
    let q = field.order() as usize;
    let mut class_of = vec![usize::MAX; q];
    class_of[0] = 0;
    let mut members: Vec<Vec<u64>> = vec![vec![0]];
    for x in 1..q as u64 {
        if class_of[x as usize] != usize::MAX {
            continue;
        }
        let id = members.len();
        let mut coset: Vec<u64> = g.iter().map(|&h| field.mul(x, h)).collect();
        coset.sort_unstable();
        for &y in &coset {
            class_of[y as usize] = id;
        }
        members.push(coset);
    }
    Ok((class_of, members))
}

/// Quotient hyperfield of a finite field by a multiplicative subgroup.
///
/// The carrier is the coset space plus zero; products of cosets are cosets,
/// and `aG + bG = {(x + y)G : x ∈ aG, y ∈ bG}`. The carrier has
/// `(q − 1)/|G| + 1` elements, and class 1 (the subgroup itself) is the
/// multiplicative identity.
pub fn krasner_quotient(field: &FiniteField, subgroup: &[u64]) -> Result<FiniteHyperfield> {
    let (class_of, members) = coset_partition(field, subgroup)?;
    let n = members.len();
    if n > MAX_CARRIER {
        return Err(Error::BoundExceeded {
            what: "carrier size",
            got: n as u128,
            limit: MAX_CARRIER as u128,
        });
    }
    let rep: Vec<u64> = members.iter().map(|m| m[0]).collect();
    let mul: Vec<Vec<usize>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| class_of[field.mul(rep[a], rep[b]) as usize])
                .collect()
        })
        .collect();
    let neg: Vec<usize> = (0..n).map(|a| class_of[field.neg(rep[a]) as usize]).collect();
    // aG + bG is already determined by one representative of aG: scaling a
    // sum by a subgroup element permutes the classes it can land in.
    let add: Vec<Vec<ElemSet>> = (0..n)
        .map(|a| {
            (0..n)
                .map(|b| {
                    members[b]
                        .iter()
                        .fold(0, |acc, &y| acc | (1u128 << class_of[field.add(rep[a], y) as usize]))
                })
                .collect()
        })
        .collect();
    FiniteHyperfield::from_parts(n, 1, mul, neg, add)
}

/// Quotient of `F_{q^n}` by the nonzero elements of its `F_q` subfield.
///
/// The carrier has `(q^n − 1)/(q − 1) + 1` elements. Requires `n ≥ 2` and
/// `q^n` within the default field bound.
pub fn extension_quotient(q: u64, n: u32) -> Result<FiniteHyperfield> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!(
            "extension degree must be at least 2, got {n}"
        )));
    }
    let big = (q as u128).checked_pow(n).ok_or(Error::BoundExceeded {
        what: "field order",
        got: u128::MAX,
        limit: crate::algebra::DEFAULT_FIELD_BOUND as u128,
    })?;
    if big > crate::algebra::DEFAULT_FIELD_BOUND as u128 {
        return Err(Error::BoundExceeded {
            what: "field order",
            got: big,
            limit: crate::algebra::DEFAULT_FIELD_BOUND as u128,
        });
    }
    let field = FiniteField::new(big as u64)?;
    let subgroup = field.subfield_nonzero(q)?;
    krasner_quotient(&field, &subgroup)
}

/// The hyperfield `G ∪ {0}` built from an abelian group, carrying the
/// single-line hyperaddition pattern.
///
/// Multiplication extends the group law by an absorbing zero; negation
/// fixes every element. Hyperaddition is `x + 0 = {x}`, `x + x = {x, 0}`,
/// and for distinct nonzero `x, y` the set of all *other* nonzero elements
/// (any CC structure forbids `0`, `x`, and `y` in such a sum: a sum
/// containing `x` would put `y` in `x + x` by reversibility). For the
/// two-element group that set is empty and the sum degenerates to `{x, y}`
/// so the table stays well-formed.
///
/// Tables are produced for any group order within [`MAX_CARRIER`]; whether
/// they satisfy the axioms is for [`FiniteHyperfield::verify_axioms`] to
/// judge. Group orders 2 and 3 fail associativity; orders 1 and ≥ 4 pass.
pub fn from_group(group: &FiniteAbelianGroup) -> Result<FiniteHyperfield> {
    let m = group.order() as usize;
    let n = m + 1;
    if n > MAX_CARRIER {
        return Err(Error::BoundExceeded {
            what: "carrier size",
            got: n as u128,
            limit: MAX_CARRIER as u128,
        });
    }
    let mut mul = vec![vec![0usize; n]; n];
    for i in 1..n {
        for j in 1..n {
            mul[i][j] = group.op(i as u64 - 1, j as u64 - 1) as usize + 1;
        }
    }
    let neg: Vec<usize> = (0..n).collect();
    let nonzero = carrier_mask(n) & !1;
    let mut add = vec![vec![0 as ElemSet; n]; n];
    for x in 0..n {
        for y in 0..n {
            add[x][y] = if x == 0 {
                1u128 << y
            } else if y == 0 {
                1u128 << x
            } else if x == y {
                (1u128 << x) | 1
            } else {
                let others = nonzero & !(1u128 << x) & !(1u128 << y);
                if others != 0 {
                    others
                } else {
                    nonzero
                }
            };
        }
    }
    FiniteHyperfield::from_parts(n, 1, mul, neg, add)
}

/// Evaluates both sides of the closed-subfield criterion for a nontrivial
/// subgroup: whether the quotient satisfies `x + x = {x, 0}`, and whether
/// `{0} ∪ G` is closed under field addition. The two agree for every field
/// and every subgroup with more than one element.
pub fn cc_subfield_equivalence(field: &FiniteField, subgroup: &[u64]) -> Result<(bool, bool)> {
    let g = validate_subgroup(field, subgroup)?;
    if g.len() == 1 {
        return Err(Error::InvalidArgument(
            "the criterion applies to subgroups with more than one element".into(),
        ));
    }
    let lhs = krasner_quotient(field, &g)?.is_cc();
    let mut member = vec![false; field.order() as usize];
    member[0] = true;
    for &x in &g {
        member[x as usize] = true;
    }
    let mut rhs = true;
    'outer: for &a in std::iter::once(&0).chain(g.iter()) {
        for &b in std::iter::once(&0).chain(g.iter()) {
            if !member[field.add(a, b) as usize] {
                rhs = false;
                break 'outer;
            }
        }
    }
    Ok((lhs, rhs))
}

/// Checks that `subgroup` is a subgroup of the multiplicative group and
/// returns it sorted and deduplicated.
fn validate_subgroup(field: &FiniteField, subgroup: &[u64]) -> Result<Vec<u64>> {
    if subgroup.is_empty() {
        return Err(Error::InvalidSubgroup("the subgroup is empty".into()));
    }
    let q = field.order();
    let mut g = subgroup.to_vec();
    g.sort_unstable();
    g.dedup();
    if let Some(&x) = g.iter().find(|&&x| x == 0 || x >= q) {
        return Err(Error::InvalidSubgroup(format!(
            "{x} is not a nonzero element of the field of order {q}"
        )));
    }
    let mut member = vec![false; q as usize];
    for &x in &g {
        member[x as usize] = true;
    }
    for &a in &g {
        for &b in &g {
            let c = field.mul(a, b);
            if !member[c as usize] {
                return Err(Error::InvalidSubgroup(format!(
                    "not closed under products: {a}*{b} = {c} is missing"
                )));
            }
        }
    }
    // A nonempty product-closed subset of a finite group is a subgroup.
    debug_assert!(g.contains(&1));
    Ok(g)
}
