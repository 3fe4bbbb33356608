//! Finite abelian groups in invariant-factor form.
//!
//! A group is a list of invariant factors `d_1 | d_2 | ... | d_r`, each at
//! least 2 (the trivial group is the empty list). Elements are exponent
//! tuples, addressed by a mixed-radix index so the whole carrier enumerates
//! deterministically; index 0 is always the identity.

use super::factorize;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FiniteAbelianGroup {
    invariant_factors: Vec<u64>,
}

impl FiniteAbelianGroup {
    pub fn trivial() -> Self {
        FiniteAbelianGroup {
            invariant_factors: Vec::new(),
        }
    }

    /// Builds the direct product of cyclic groups `C_{n_1} x ... x C_{n_k}`
    /// and normalizes it to invariant-factor form (factors of 1 are
    /// dropped). `from_factors(&[2, 3])` and `from_factors(&[6])` produce
    /// the same group.
    pub fn from_factors(factors: &[u64]) -> Self {
        assert!(
            factors.iter().all(|&n| n >= 1),
            "cyclic factor must be positive"
        );
        // Collect, per prime, the exponents contributed by each factor.
        let mut by_prime: Vec<(u64, Vec<u32>)> = Vec::new();
        for &n in factors {
            for (p, e) in factorize(n) {
                match by_prime.iter_mut().find(|(q, _)| *q == p) {
                    Some((_, exps)) => exps.push(e),
                    None => by_prime.push((p, vec![e])),
                }
            }
        }
        for (_, exps) in &mut by_prime {
            exps.sort_unstable_by(|a, b| b.cmp(a));
        }
        let rank = by_prime.iter().map(|(_, e)| e.len()).max().unwrap_or(0);
        // The j-th largest invariant factor takes the j-th largest exponent
        // of every prime.
        let mut descending = Vec::with_capacity(rank);
        for j in 0..rank {
            let mut d = 1u64;
            for (p, exps) in &by_prime {
                if let Some(&e) = exps.get(j) {
                    d *= p.pow(e);
                }
            }
            descending.push(d);
        }
        descending.reverse();
        FiniteAbelianGroup {
            invariant_factors: descending,
        }
    }

    /// The invariant factors `d_1 | d_2 | ... | d_r`, ascending.
    pub fn invariant_factors(&self) -> &[u64] {
        &self.invariant_factors
    }

    pub fn order(&self) -> u64 {
        self.invariant_factors.iter().product()
    }

    /// Two finite abelian groups are isomorphic iff their invariant factor
    /// lists agree.
    pub fn is_isomorphic_to(&self, other: &Self) -> bool {
        self.invariant_factors == other.invariant_factors
    }

    pub fn identity(&self) -> u64 {
        0
    }

    /// Exponent tuple of the element at `index` (mixed radix, first factor
    /// least significant).
    pub fn tuple_of(&self, index: u64) -> Vec<u64> {
        debug_assert!(index < self.order());
        let mut rest = index;
        self.invariant_factors
            .iter()
            .map(|&d| {
                let c = rest % d;
                rest /= d;
                c
            })
            .collect()
    }

    pub fn index_of(&self, tuple: &[u64]) -> u64 {
        debug_assert_eq!(tuple.len(), self.invariant_factors.len());
        let mut index = 0u64;
        for (&c, &d) in tuple.iter().zip(&self.invariant_factors).rev() {
            debug_assert!(c < d);
            index = index * d + c;
        }
        index
    }

    /// The group operation on element indices.
    pub fn op(&self, a: u64, b: u64) -> u64 {
        let mut out = 0u64;
        let mut scale = 1u64;
        let (mut a, mut b) = (a, b);
        for &d in &self.invariant_factors {
            out += (a % d + b % d) % d * scale;
            a /= d;
            b /= d;
            scale *= d;
        }
        out
    }

    pub fn inverse(&self, a: u64) -> u64 {
        let mut out = 0u64;
        let mut scale = 1u64;
        let mut a = a;
        for &d in &self.invariant_factors {
            let c = a % d;
            out += if c == 0 { 0 } else { d - c } * scale;
            a /= d;
            scale *= d;
        }
        out
    }

    pub fn element_order(&self, a: u64) -> u64 {
        let mut lcm = 1u64;
        let mut a = a;
        for &d in &self.invariant_factors {
            let c = a % d;
            a /= d;
            let ord = d / gcd(c, d);
            lcm = lcm / gcd(lcm, ord) * ord;
        }
        lcm
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if a == 0 {
        b
    } else {
        gcd(b % a, a)
    }
}

/// A subgroup of the cyclic group `C_n`, described by its order and the
/// exponent of a generator: the subgroup of order `d` is generated by
/// `g^(n/d)` for any generator `g` of `C_n`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CyclicSubgroup {
    pub modulus: u64,
    pub order: u64,
    pub generator_exponent: u64,
}

/// All subgroups of `C_n`, one per divisor of `n`, in ascending order.
pub fn subgroups_of_cyclic(n: u64) -> Vec<CyclicSubgroup> {
    assert!(n >= 1);
    super::divisors(n)
        .into_iter()
        .map(|d| CyclicSubgroup {
            modulus: n,
            order: d,
            generator_exponent: n / d,
        })
        .collect()
}

/// All isomorphism types of abelian groups of order `n`, deterministically
/// ordered. Each type appears once, in invariant-factor form.
pub fn abelian_groups_of_order(n: u64) -> Vec<FiniteAbelianGroup> {
    assert!(n >= 1);
    // One partition choice per prime; the group is the product over primes
    // of C_{p^part} factors.
    let factored = factorize(n);
    let mut partitions_per_prime: Vec<(u64, Vec<Vec<u32>>)> = Vec::new();
    for (p, e) in factored {
        partitions_per_prime.push((p, partitions(e)));
    }
    let mut out = Vec::new();
    let mut choice = vec![0usize; partitions_per_prime.len()];
    loop {
        let mut cyclic_factors = Vec::new();
        for (i, (p, parts)) in partitions_per_prime.iter().enumerate() {
            for &e in &parts[choice[i]] {
                cyclic_factors.push(p.pow(e));
            }
        }
        out.push(FiniteAbelianGroup::from_factors(&cyclic_factors));
        // Odometer over the partition choices.
        let mut i = 0;
        loop {
            if i == partitions_per_prime.len() {
                out.sort_by(|a, b| a.invariant_factors.cmp(&b.invariant_factors));
                return out;
            }
            choice[i] += 1;
            if choice[i] < partitions_per_prime[i].1.len() {
                break;
            }
            choice[i] = 0;
            i += 1;
        }
    }
}

/// Partitions of `e` into non-increasing positive parts.
fn partitions(e: u32) -> Vec<Vec<u32>> {
    fn rec(remaining: u32, max_part: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if remaining == 0 {
            out.push(prefix.clone());
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            prefix.push(part);
            rec(remaining - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(e, e, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn invariant_factors_normalize() {
        assert_eq!(
            FiniteAbelianGroup::from_factors(&[6]).invariant_factors(),
            &[6]
        );
        assert_eq!(
            FiniteAbelianGroup::from_factors(&[2, 3]).invariant_factors(),
            &[6]
        );
        assert_eq!(
            FiniteAbelianGroup::from_factors(&[2, 4]).invariant_factors(),
            &[2, 4]
        );
        assert_eq!(
            FiniteAbelianGroup::from_factors(&[4, 6]).invariant_factors(),
            &[2, 12]
        );
        assert_eq!(
            FiniteAbelianGroup::from_factors(&[1, 1]).invariant_factors(),
            &[] as &[u64]
        );
    }

    #[test]
    fn isomorphism_is_invariant_factor_equality() {
        let c6 = FiniteAbelianGroup::from_factors(&[6]);
        let c2x3 = FiniteAbelianGroup::from_factors(&[2, 3]);
        let c2x4 = FiniteAbelianGroup::from_factors(&[2, 4]);
        let c8 = FiniteAbelianGroup::from_factors(&[8]);
        assert!(c6.is_isomorphic_to(&c2x3));
        assert!(!c2x4.is_isomorphic_to(&c8));
        assert!(!FiniteAbelianGroup::from_factors(&[4])
            .is_isomorphic_to(&FiniteAbelianGroup::from_factors(&[2, 2])));
    }

    /// Brute-force bijection search: is there any operation-preserving
    /// bijection between the two groups' index spaces?
    fn iso_by_bijection(a: &FiniteAbelianGroup, b: &FiniteAbelianGroup) -> bool {
        let n = a.order();
        if n != b.order() {
            return false;
        }
        let n = n as usize;
        fn extend(
            a: &FiniteAbelianGroup,
            b: &FiniteAbelianGroup,
            map: &mut Vec<Option<u64>>,
            used: &mut Vec<bool>,
            next: usize,
        ) -> bool {
            let n = map.len();
            if next == n {
                return true;
            }
            'cand: for img in 0..n as u64 {
                if used[img as usize] {
                    continue;
                }
                if a.element_order(next as u64) != b.element_order(img) {
                    continue;
                }
                map[next] = Some(img);
                used[img as usize] = true;
                for x in 0..=next as u64 {
                    for y in 0..=next as u64 {
                        let s = a.op(x, y);
                        if s <= next as u64 {
                            let (fx, fy, fs) = (
                                map[x as usize].unwrap(),
                                map[y as usize].unwrap(),
                                map[s as usize].unwrap(),
                            );
                            if b.op(fx, fy) != fs {
                                map[next] = None;
                                used[img as usize] = false;
                                continue 'cand;
                            }
                        }
                    }
                }
                if extend(a, b, map, used, next + 1) {
                    return true;
                }
                map[next] = None;
                used[img as usize] = false;
            }
            false
        }
        let mut map = vec![None; n];
        let mut used = vec![false; n];
        map[0] = Some(0);
        used[0] = true;
        extend(a, b, &mut map, &mut used, 1)
    }

    #[test]
    fn invariant_factor_iso_agrees_with_bijection_search_up_to_16() {
        let mut all: Vec<FiniteAbelianGroup> = Vec::new();
        for n in 1..=16 {
            all.extend(abelian_groups_of_order(n));
        }
        for a in &all {
            for b in &all {
                assert_eq!(
                    a.is_isomorphic_to(b),
                    iso_by_bijection(a, b),
                    "{:?} vs {:?}",
                    a.invariant_factors(),
                    b.invariant_factors()
                );
            }
        }
    }

    #[test]
    fn element_orders_and_ops() {
        let g = FiniteAbelianGroup::from_factors(&[2, 4]);
        assert_eq!(g.order(), 8);
        assert_eq!(g.element_order(g.identity()), 1);
        let orders: Vec<u64> = (0..8).map(|i| g.element_order(i)).collect();
        let mut sorted = orders.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, vec![1, 2, 2, 2, 4, 4, 4, 4]);
        for x in 0..8 {
            assert_eq!(g.op(x, g.inverse(x)), 0);
            assert_eq!(g.op(x, 0), x);
            for y in 0..8 {
                assert_eq!(g.op(x, y), g.op(y, x));
                assert_eq!(g.index_of(&g.tuple_of(g.op(x, y))), g.op(x, y));
            }
        }
    }

    #[test]
    fn subgroup_listings() {
        let subs = subgroups_of_cyclic(8);
        assert_eq!(subs.len(), 4);
        assert_eq!(
            subs.iter().map(|s| s.order).collect::<Vec<_>>(),
            vec![1, 2, 4, 8]
        );
        assert_eq!(subs[1].generator_exponent, 4);
        assert_eq!(subgroups_of_cyclic(12).len(), 6);
        assert_eq!(subgroups_of_cyclic(1).len(), 1);
    }

    #[test]
    fn group_type_counts_by_order() {
        // Number of abelian groups of order n = product over primes of
        // partition counts of the exponents.
        let counts: Vec<usize> = (1..=12).map(|n| abelian_groups_of_order(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 1, 2, 1, 1, 1, 3, 2, 1, 1, 2]);
        assert_eq!(abelian_groups_of_order(16).len(), 5);
    }
}
