//! Ehrenfeucht–Fraïssé games between finite structures.
//!
//! Games are played on the relational rendering of a structure: function
//! symbols contribute their graphs, and the constants are pinned into every
//! position. Duplicator wins the `d`-round game iff no sentence of
//! quantifier depth at most `d` (over atoms whose terms have depth at most
//! one) separates the structures; a winning Spoiler strategy converts into
//! such a sentence, which [`distinguishing_sentence`] performs.

use std::collections::{HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::algebra::FiniteAbelianGroup;
use crate::hyperfield::{from_group, ElemSet};
use crate::{Error, Result};

use super::{Formula, StructureView, Term};

/// Largest carrier the game search accepts.
pub const EF_MAX_CARRIER: usize = 64;
/// Largest round count the game search accepts.
pub const EF_MAX_DEPTH: u32 = 4;

/// A structure reduced to relations: constants, unary function graphs, and
/// ternary relations, in a fixed order shared by both players' structures.
struct RelationalView {
    n: usize,
    constants: Vec<usize>,
    unary: Vec<Vec<usize>>,
    ternary: Vec<Ternary>,
}

enum Ternary {
    /// Graph of a binary function: `holds(x, y, z)` iff `f(x, y) = z`.
    Function(Vec<Vec<usize>>),
    /// Multivalued addition: `holds(x, y, z)` iff `z ∈ x + y`.
    Multi(Vec<Vec<ElemSet>>),
}

impl Ternary {
    fn holds(&self, x: usize, y: usize, z: usize) -> bool {
        match self {
            Ternary::Function(t) => t[x][y] == z,
            Ternary::Multi(t) => t[x][y] & (1u128 << z) != 0,
        }
    }
}

impl RelationalView {
    fn of_structure(s: &StructureView) -> Self {
        let n = s.carrier();
        RelationalView {
            n,
            constants: vec![0, s.one()],
            unary: vec![
                (0..n).map(|x| s.inv(x)).collect(),
                (0..n).map(|x| s.neg(x)).collect(),
            ],
            ternary: vec![
                Ternary::Function(
                    (0..n)
                        .map(|x| (0..n).map(|y| s.mul(x, y)).collect())
                        .collect(),
                ),
                Ternary::Multi(
                    (0..n)
                        .map(|x| {
                            (0..n)
                                .map(|y| {
                                    (0..n)
                                        .filter(|&z| s.add_holds(x, y, z))
                                        .fold(0u128, |acc, z| acc | (1u128 << z))
                                })
                                .collect()
                        })
                        .collect(),
                ),
            ],
        }
    }

    fn of_group(g: &FiniteAbelianGroup) -> Self {
        let n = g.order() as usize;
        RelationalView {
            n,
            constants: vec![g.identity() as usize],
            unary: vec![(0..n).map(|x| g.inverse(x as u64) as usize).collect()],
            ternary: vec![Ternary::Function(
                (0..n)
                    .map(|x| (0..n).map(|y| g.op(x as u64, y as u64) as usize).collect())
                    .collect(),
            )],
        }
    }
}

/// Positions are sets of pebble pairs; the game value does not depend on the
/// order pebbles were placed or on repeats, so positions memoize under a
/// sorted, deduplicated key.
struct Game<'a> {
    a: &'a RelationalView,
    b: &'a RelationalView,
    memo: HashMap<(Vec<(usize, usize)>, u32), bool>,
}

fn extend(pairs: &[(usize, usize)], p: (usize, usize)) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(pairs.len() + 1);
    match pairs.binary_search(&p) {
        Ok(_) => out.extend_from_slice(pairs),
        Err(idx) => {
            out.extend_from_slice(&pairs[..idx]);
            out.push(p);
            out.extend_from_slice(&pairs[idx..]);
        }
    }
    out
}

impl<'a> Game<'a> {
    fn new(a: &'a RelationalView, b: &'a RelationalView) -> Self {
        Game {
            a,
            b,
            memo: HashMap::new(),
        }
    }

    /// Whether the pebble pairs (with the constants adjoined) form a partial
    /// isomorphism: every atom over the pebbled elements holds on one side
    /// iff it holds on the other.
    fn partial_iso(&self, pairs: &[(usize, usize)]) -> bool {
        let pa: Vec<usize> = self
            .a
            .constants
            .iter()
            .copied()
            .chain(pairs.iter().map(|p| p.0))
            .collect();
        let pb: Vec<usize> = self
            .b
            .constants
            .iter()
            .copied()
            .chain(pairs.iter().map(|p| p.1))
            .collect();
        let k = pa.len();
        for i in 0..k {
            for j in 0..k {
                if (pa[i] == pa[j]) != (pb[i] == pb[j]) {
                    return false;
                }
            }
        }
        for (ua, ub) in self.a.unary.iter().zip(&self.b.unary) {
            for i in 0..k {
                for j in 0..k {
                    if (ua[pa[i]] == pa[j]) != (ub[pb[i]] == pb[j]) {
                        return false;
                    }
                }
            }
        }
        for (ta, tb) in self.a.ternary.iter().zip(&self.b.ternary) {
            for i in 0..k {
                for j in 0..k {
                    for l in 0..k {
                        if ta.holds(pa[i], pa[j], pa[l]) != tb.holds(pb[i], pb[j], pb[l]) {
                            return false;
                        }
                    }
                }
            }
        }
        true
    }

    /// Whether Duplicator wins the game from this position with `rounds`
    /// moves left.
    fn wins(&mut self, pairs: &[(usize, usize)], rounds: u32) -> bool {
        let mut canon = pairs.to_vec();
        canon.sort_unstable();
        canon.dedup();
        self.wins_canonical(canon, rounds)
    }

    fn wins_canonical(&mut self, pairs: Vec<(usize, usize)>, rounds: u32) -> bool {
        if !self.partial_iso(&pairs) {
            return false;
        }
        if rounds == 0 {
            return true;
        }
        let key = (pairs, rounds);
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut survives = true;
        'spoiler: {
            for x in 0..self.a.n {
                let mut answered = false;
                for y in 0..self.b.n {
                    if self.wins_canonical(extend(&key.0, (x, y)), rounds - 1) {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    survives = false;
                    break 'spoiler;
                }
            }
            for y in 0..self.b.n {
                let mut answered = false;
                for x in 0..self.a.n {
                    if self.wins_canonical(extend(&key.0, (x, y)), rounds - 1) {
                        answered = true;
                        break;
                    }
                }
                if !answered {
                    survives = false;
                    break 'spoiler;
                }
            }
        }
        self.memo.insert(key, survives);
        survives
    }
}

fn check_bounds(n1: usize, n2: usize, depth: u32) -> Result<()> {
    for n in [n1, n2] {
        if n > EF_MAX_CARRIER {
            return Err(Error::BoundExceeded {
                what: "carrier size for EF games",
                got: n as u128,
                limit: EF_MAX_CARRIER as u128,
            });
        }
    }
    if depth > EF_MAX_DEPTH {
        return Err(Error::BoundExceeded {
            what: "EF game depth",
            got: depth as u128,
            limit: EF_MAX_DEPTH as u128,
        });
    }
    Ok(())
}

/// Whether Duplicator wins the `depth`-round game between the two
/// structures — equivalently, whether no sentence of quantifier depth at
/// most `depth` separates them.
pub fn ef_equivalent(s1: &StructureView, s2: &StructureView, depth: u32) -> Result<bool> {
    check_bounds(s1.carrier(), s2.carrier(), depth)?;
    let va = RelationalView::of_structure(s1);
    let vb = RelationalView::of_structure(s2);
    Ok(Game::new(&va, &vb).wins(&[], depth))
}

/// Extracts a sentence of quantifier depth at most `depth` that is true in
/// `s1` and false in `s2`, from a winning Spoiler strategy at the least
/// sufficient depth. `None` if the structures are `depth`-equivalent.
pub fn distinguishing_sentence(
    s1: &StructureView,
    s2: &StructureView,
    depth: u32,
) -> Result<Option<Formula>> {
    check_bounds(s1.carrier(), s2.carrier(), depth)?;
    let va = RelationalView::of_structure(s1);
    let vb = RelationalView::of_structure(s2);
    let mut game = Game::new(&va, &vb);
    let Some(least) = (0..=depth).find(|&r| !game.wins(&[], r)) else {
        return Ok(None);
    };
    let mut extractor = Extractor { s1, s2, game };
    Ok(Some(extractor.formula(&mut Vec::new(), least)))
}

struct Extractor<'a> {
    s1: &'a StructureView,
    s2: &'a StructureView,
    game: Game<'a>,
}

impl Extractor<'_> {
    /// A formula over the pebble variables `x1..` that is true of the
    /// left-hand pebbles in `s1` and false of the right-hand pebbles in
    /// `s2`, of quantifier depth at most `rounds`. Requires that Spoiler
    /// wins from this position in `rounds` moves.
    fn formula(&mut self, position: &mut Vec<(usize, usize)>, rounds: u32) -> Formula {
        if let Some(atom) = self.differing_atom(position) {
            return atom;
        }
        let var = format!("x{}", position.len() + 1);
        // An s1-side winning Spoiler move becomes an existential witness:
        // each Duplicator reply is refuted by its own conjunct.
        for x in 0..self.s1.carrier() {
            let refuted_everywhere = (0..self.s2.carrier()).all(|y| {
                position.push((x, y));
                let w = self.game.wins(position, rounds - 1);
                position.pop();
                !w
            });
            if refuted_everywhere {
                let mut seen = HashSet::new();
                let mut conjuncts = Vec::new();
                for y in 0..self.s2.carrier() {
                    position.push((x, y));
                    let f = self.formula(position, rounds - 1);
                    position.pop();
                    if seen.insert(f.clone()) {
                        conjuncts.push(f);
                    }
                }
                return Formula::Exists(var, Box::new(fold(conjuncts, Formula::And)));
            }
        }
        // Symmetrically, an s2-side winning move becomes a universal: in s1
        // every value satisfies its disjunct, while Spoiler's witness in s2
        // falsifies them all.
        for y in 0..self.s2.carrier() {
            let refuted_everywhere = (0..self.s1.carrier()).all(|x| {
                position.push((x, y));
                let w = self.game.wins(position, rounds - 1);
                position.pop();
                !w
            });
            if refuted_everywhere {
                let mut seen = HashSet::new();
                let mut disjuncts = Vec::new();
                for x in 0..self.s1.carrier() {
                    position.push((x, y));
                    let f = self.formula(position, rounds - 1);
                    position.pop();
                    if seen.insert(f.clone()) {
                        disjuncts.push(f);
                    }
                }
                return Formula::Forall(var, Box::new(fold(disjuncts, Formula::Or)));
            }
        }
        unreachable!("Spoiler wins this position, so a winning move must exist");
    }

    /// An atom over the pebbled elements (constants included) whose truth
    /// differs between the two sides, signed to be true in `s1`; `None` when
    /// the position is a partial isomorphism. Enumerates the same atom space
    /// the game's partial-isomorphism check does, in a fixed order.
    fn differing_atom(&self, position: &[(usize, usize)]) -> Option<Formula> {
        let mut terms = vec![Term::Zero, Term::One];
        let mut left = vec![0, self.s1.one()];
        let mut right = vec![0, self.s2.one()];
        for (i, &(a, b)) in position.iter().enumerate() {
            terms.push(Term::Var(format!("x{}", i + 1)));
            left.push(a);
            right.push(b);
        }
        let k = terms.len();
        let signed = |atom: Formula, true_in_s1: bool| {
            if true_in_s1 {
                atom
            } else {
                Formula::Not(Box::new(atom))
            }
        };
        for i in 0..k {
            for j in 0..k {
                let on_left = left[i] == left[j];
                if on_left != (right[i] == right[j]) {
                    return Some(signed(
                        Formula::Eq(terms[i].clone(), terms[j].clone()),
                        on_left,
                    ));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                let on_left = self.s1.inv(left[i]) == left[j];
                if on_left != (self.s2.inv(right[i]) == right[j]) {
                    return Some(signed(
                        Formula::Eq(Term::Inv(Box::new(terms[i].clone())), terms[j].clone()),
                        on_left,
                    ));
                }
                let on_left = self.s1.neg(left[i]) == left[j];
                if on_left != (self.s2.neg(right[i]) == right[j]) {
                    return Some(signed(
                        Formula::Eq(Term::Neg(Box::new(terms[i].clone())), terms[j].clone()),
                        on_left,
                    ));
                }
            }
        }
        for i in 0..k {
            for j in 0..k {
                for l in 0..k {
                    let on_left = self.s1.mul(left[i], left[j]) == left[l];
                    if on_left != (self.s2.mul(right[i], right[j]) == right[l]) {
                        return Some(signed(
                            Formula::Eq(
                                Term::Mul(Box::new(terms[i].clone()), Box::new(terms[j].clone())),
                                terms[l].clone(),
                            ),
                            on_left,
                        ));
                    }
                    let on_left = self.s1.add_holds(left[i], left[j], left[l]);
                    if on_left != self.s2.add_holds(right[i], right[j], right[l]) {
                        return Some(signed(
                            Formula::Add(terms[i].clone(), terms[j].clone(), terms[l].clone()),
                            on_left,
                        ));
                    }
                }
            }
        }
        None
    }
}

fn fold(mut formulas: Vec<Formula>, op: fn(Box<Formula>, Box<Formula>) -> Formula) -> Formula {
    let first = formulas.remove(0);
    formulas
        .into_iter()
        .fold(first, |acc, f| op(Box::new(acc), Box::new(f)))
}

/// Verdicts of the group-to-hyperfield equivalence transfer at one depth:
/// if the groups are `depth`-equivalent, the hyperfields built on them must
/// be too.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TransferReport {
    pub depth: u32,
    /// Orders of the two groups, in argument order.
    pub group_orders: Vec<u64>,
    pub groups_equivalent: bool,
    pub hyperfields_equivalent: bool,
    /// `groups_equivalent → hyperfields_equivalent`.
    pub implication_holds: bool,
}

/// Plays the `depth`-round game between two abelian groups and between the
/// hyperfields built on them, and reports whether group equivalence
/// transfers to the hyperfields.
pub fn group_to_hyperfield_transfer_check(
    g: &FiniteAbelianGroup,
    h: &FiniteAbelianGroup,
    depth: u32,
) -> Result<TransferReport> {
    for group in [g, h] {
        if group.order() > 32 {
            return Err(Error::BoundExceeded {
                what: "group order for the transfer check",
                got: group.order() as u128,
                limit: 32,
            });
        }
    }
    check_bounds(g.order() as usize, h.order() as usize, depth)?;
    let va = RelationalView::of_group(g);
    let vb = RelationalView::of_group(h);
    let groups_equivalent = Game::new(&va, &vb).wins(&[], depth);
    let s1 = StructureView::new(&from_group(g)?);
    let s2 = StructureView::new(&from_group(h)?);
    let hyperfields_equivalent = ef_equivalent(&s1, &s2, depth)?;
    Ok(TransferReport {
        depth,
        group_orders: vec![g.order(), h.order()],
        groups_equivalent,
        hyperfields_equivalent,
        implication_holds: !groups_equivalent || hyperfields_equivalent,
    })
}
