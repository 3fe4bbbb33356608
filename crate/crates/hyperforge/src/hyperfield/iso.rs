//! Isomorphism testing between finite hyperfields, and recognition of
//! quotient structures among small fields.

use super::{bits, krasner_quotient, ElemSet, FiniteHyperfield};
use crate::algebra::{prime_power, FiniteField, DEFAULT_FIELD_BOUND};

/// Per-element invariants preserved by any isomorphism; used to prune the
/// bijection search and to rule out mismatched structures quickly.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
struct Profile {
    mul_order: usize,
    neg_fixed: bool,
    self_sum_size: u32,
    self_sum_has_zero: bool,
    row_sum_sizes: Vec<u32>,
}

fn profiles(h: &FiniteHyperfield) -> Vec<Profile> {
    (0..h.n())
        .map(|x| {
            let mut row_sum_sizes: Vec<u32> =
                (0..h.n()).map(|y| h.hyperadd(x, y).count_ones()).collect();
            row_sum_sizes.sort_unstable();
            Profile {
                mul_order: if x == 0 { 0 } else { h.multiplicative_order(x) },
                neg_fixed: h.neg(x) == x,
                self_sum_size: h.hyperadd(x, x).count_ones(),
                self_sum_has_zero: h.hyperadd(x, x) & 1 != 0,
                row_sum_sizes,
            }
        })
        .collect()
}

struct Search<'a> {
    a: &'a FiniteHyperfield,
    b: &'a FiniteHyperfield,
    pa: Vec<Profile>,
    pb: Vec<Profile>,
    map: Vec<Option<usize>>,
    used: Vec<bool>,
    assigned: Vec<usize>,
}

impl Search<'_> {
    /// Records `x -> y` and propagates the forced consequences through the
    /// mul and neg tables. Returns false on any conflict; the caller rolls
    /// back via the `assigned` trail.
    fn try_assign(&mut self, x: usize, y: usize) -> bool {
        if let Some(cur) = self.map[x] {
            return cur == y;
        }
        if self.used[y] || self.pa[x] != self.pb[y] {
            return false;
        }
        self.map[x] = Some(y);
        self.used[y] = true;
        self.assigned.push(x);
        if !self.try_assign(self.a.neg(x), self.b.neg(y)) {
            return false;
        }
        let snapshot = self.assigned.clone();
        for u in snapshot {
            let v = self.map[u].expect("trail entries stay assigned");
            if self.a.hyperadd(x, u).count_ones() != self.b.hyperadd(y, v).count_ones() {
                return false;
            }
            if !self.try_assign(self.a.mul(x, u), self.b.mul(y, v)) {
                return false;
            }
        }
        true
    }

    fn rollback(&mut self, to: usize) {
        while self.assigned.len() > to {
            let x = self.assigned.pop().expect("length checked");
            let y = self.map[x].take().expect("trail entries stay assigned");
            self.used[y] = false;
        }
    }

    fn dfs(&mut self) -> bool {
        let Some(x) = (1..self.a.n()).find(|&i| self.map[i].is_none()) else {
            return self.full_check();
        };
        for y in 1..self.b.n() {
            if self.used[y] || self.pa[x] != self.pb[y] {
                continue;
            }
            let snap = self.assigned.len();
            if self.try_assign(x, y) && self.dfs() {
                return true;
            }
            self.rollback(snap);
        }
        false
    }

    fn image_of(&self, set: ElemSet) -> ElemSet {
        bits(set).fold(0, |acc, w| {
            acc | (1u128 << self.map[w].expect("full map at leaf"))
        })
    }

    fn full_check(&self) -> bool {
        for i in 0..self.a.n() {
            for j in 0..self.a.n() {
                let fi = self.map[i].expect("full map at leaf");
                let fj = self.map[j].expect("full map at leaf");
                if self.map[self.a.mul(i, j)] != Some(self.b.mul(fi, fj)) {
                    return false;
                }
                if self.image_of(self.a.hyperadd(i, j)) != self.b.hyperadd(fi, fj) {
                    return false;
                }
            }
        }
        true
    }
}

/// Searches for an isomorphism from `a` to `b`: a bijection sending zero to
/// zero and one to one that transports both the multiplication table and
/// every hyperaddition set. Returns the element map when one exists.
///
/// The search assigns images element by element, propagating consequences
/// through the multiplication and negation tables and pruning on
/// order/row-profile invariants, so it is exact but fast for the small
/// carriers this crate works with.
pub fn are_isomorphic(a: &FiniteHyperfield, b: &FiniteHyperfield) -> Option<Vec<usize>> {
    if a.n() != b.n() {
        return None;
    }
    let pa = profiles(a);
    let pb = profiles(b);
    let mut sa = pa.clone();
    let mut sb = pb.clone();
    sa.sort();
    sb.sort();
    if sa != sb {
        return None;
    }
    let n = a.n();
    let mut search = Search {
        a,
        b,
        pa,
        pb,
        map: vec![None; n],
        used: vec![false; n],
        assigned: Vec::with_capacity(n),
    };
    if !search.try_assign(0, 0) || !search.try_assign(a.one(), b.one()) {
        return None;
    }
    if !search.dfs() {
        return None;
    }
    Some(search.map.iter().map(|v| v.expect("full map")).collect())
}

/// Scans prime powers `q ≤ q_max` in ascending order for a subgroup
/// `G ≤ F_q^×` whose quotient is isomorphic to `h`, returning the first
/// `(q, G)` found. `None` only means "not a quotient within the bound".
///
/// Since `F_q^×` is cyclic, the subgroup of the required order
/// `(q − 1)/(|h| − 1)` is unique, so each candidate `q` takes exactly one
/// isomorphism test.
pub fn is_krasner_within(h: &FiniteHyperfield, q_max: u64) -> Option<(u64, Vec<u64>)> {
    let m = (h.n() - 1) as u64;
    for q in 2..=q_max {
        if prime_power(q).is_err() {
            continue;
        }
        if (q - 1) % m != 0 {
            continue;
        }
        let field = FiniteField::with_bound(q, q_max.max(DEFAULT_FIELD_BOUND))
            .expect("prime power within bound");
        let subgroup = field
            .subgroup_of_order((q - 1) / m)
            .expect("order divides q - 1");
        let candidate = krasner_quotient(&field, &subgroup).expect("valid subgroup");
        if are_isomorphic(&candidate, h).is_some() {
            return Some((q, subgroup));
        }
    }
    None
}
