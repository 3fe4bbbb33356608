//! First-order logic over hyperfields: parsing, evaluation, axiom
//! sentences, and Ehrenfeucht–Fraïssé games.
//!
//! The language has the binary function `mul`, unary functions `inv` and
//! `neg`, the ternary relation `add` (membership in the hyperaddition:
//! `add(x, y, z)` holds iff `z ∈ x + y`), constants `0` and `1`, and
//! equality. Concrete syntax:
//!
//! ```text
//! formula := iff
//! iff     := implies [ "<->" implies ]           (non-associative)
//! implies := or [ "->" implies ]                 (right-associative)
//! or      := and { "\/" and }
//! and     := unary { "/\" unary }
//! unary   := "~" unary | quantified | "(" formula ")" | atom
//! quantified := ("forall" | "exists") variable "." formula
//! atom    := "add(" term "," term "," term ")" | term "=" term
//! term    := variable | "0" | "1"
//!          | "mul(" term "," term ")" | "inv(" term ")" | "neg(" term ")"
//! ```
//!
//! Each quantifier binds exactly one variable and its body extends as far
//! right as possible, so `forall x. add(x,x,x) \/ ~add(x,x,x)` is a closed
//! tautology. [`parse`] accepts sentences only: a free variable is an error.
//!
//! Evaluation is Tarskian, by exhaustive enumeration of the (finite)
//! carrier. `inv` is made total by setting `inv(0) = 0`; sentences that
//! speak about multiplicative inverses guard with `x = 0 \/ …` accordingly.
//!
//! [`ef_equivalent`] plays the d-round Ehrenfeucht–Fraïssé game on the
//! relational rendering of two structures (function graphs as relations,
//! constants always pinned). For finite structures, elementary equivalence
//! outright would coincide with isomorphism; the depth-bounded game is the
//! finite-scale notion that matches distinguishability by sentences of
//! bounded quantifier depth, and [`distinguishing_sentence`] extracts such a
//! sentence from a winning Spoiler strategy.

use std::fmt;

use crate::hyperfield::{ElemSet, FiniteHyperfield};

mod ef;
mod parse;

pub use ef::{
    distinguishing_sentence, ef_equivalent, group_to_hyperfield_transfer_check, TransferReport,
    EF_MAX_CARRIER, EF_MAX_DEPTH,
};
pub use parse::parse;

/// A term of the language: variables, the two constants, and the function
/// symbols `mul`, `inv`, `neg`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Term {
    Var(String),
    Zero,
    One,
    Mul(Box<Term>, Box<Term>),
    Inv(Box<Term>),
    Neg(Box<Term>),
}

/// A formula of the language. `Add(x, y, z)` is the ternary hyperaddition
/// relation `z ∈ x + y`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Formula {
    Add(Term, Term, Term),
    Eq(Term, Term),
    Not(Box<Formula>),
    And(Box<Formula>, Box<Formula>),
    Or(Box<Formula>, Box<Formula>),
    Implies(Box<Formula>, Box<Formula>),
    Iff(Box<Formula>, Box<Formula>),
    Forall(String, Box<Formula>),
    Exists(String, Box<Formula>),
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Var(v) => f.write_str(v),
            Term::Zero => f.write_str("0"),
            Term::One => f.write_str("1"),
            Term::Mul(a, b) => write!(f, "mul({a}, {b})"),
            Term::Inv(a) => write!(f, "inv({a})"),
            Term::Neg(a) => write!(f, "neg({a})"),
        }
    }
}

/// Binding strength used by the printer; matches the grammar levels.
/// Quantified formulas are weakest (their body runs maximally right), then
/// `<->`, `->`, `\/`, `/\`, `~`, atoms.
fn precedence(f: &Formula) -> u8 {
    match f {
        Formula::Forall(..) | Formula::Exists(..) => 0,
        Formula::Iff(..) => 1,
        Formula::Implies(..) => 2,
        Formula::Or(..) => 3,
        Formula::And(..) => 4,
        Formula::Not(..) => 5,
        Formula::Add(..) | Formula::Eq(..) => 6,
    }
}

fn fmt_formula(f: &Formula, min: u8, out: &mut fmt::Formatter<'_>) -> fmt::Result {
    if precedence(f) < min {
        out.write_str("(")?;
        fmt_formula(f, 0, out)?;
        return out.write_str(")");
    }
    match f {
        Formula::Add(x, y, z) => write!(out, "add({x}, {y}, {z})"),
        Formula::Eq(a, b) => write!(out, "{a} = {b}"),
        Formula::Not(g) => {
            out.write_str("~")?;
            fmt_formula(g, 5, out)
        }
        Formula::And(l, r) => {
            fmt_formula(l, 4, out)?;
            out.write_str(" /\\ ")?;
            fmt_formula(r, 5, out)
        }
        Formula::Or(l, r) => {
            fmt_formula(l, 3, out)?;
            out.write_str(" \\/ ")?;
            fmt_formula(r, 4, out)
        }
        Formula::Implies(l, r) => {
            fmt_formula(l, 3, out)?;
            out.write_str(" -> ")?;
            fmt_formula(r, 2, out)
        }
        Formula::Iff(l, r) => {
            fmt_formula(l, 2, out)?;
            out.write_str(" <-> ")?;
            fmt_formula(r, 2, out)
        }
        Formula::Forall(v, body) => {
            write!(out, "forall {v}. ")?;
            fmt_formula(body, 0, out)
        }
        Formula::Exists(v, body) => {
            write!(out, "exists {v}. ")?;
            fmt_formula(body, 0, out)
        }
    }
}

impl fmt::Display for Formula {
    /// Prints in the concrete grammar; [`parse`] of the output returns a
    /// structurally equal formula.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt_formula(self, 0, f)
    }
}

impl Formula {
    /// Greatest quantifier nesting depth.
    pub fn quantifier_depth(&self) -> u32 {
        match self {
            Formula::Add(..) | Formula::Eq(..) => 0,
            Formula::Not(g) => g.quantifier_depth(),
            Formula::And(l, r)
            | Formula::Or(l, r)
            | Formula::Implies(l, r)
            | Formula::Iff(l, r) => l.quantifier_depth().max(r.quantifier_depth()),
            Formula::Forall(_, body) | Formula::Exists(_, body) => 1 + body.quantifier_depth(),
        }
    }

    /// First free variable encountered, if any (a sentence has none).
    pub fn free_variable(&self) -> Option<&str> {
        fn term<'a>(t: &'a Term, scope: &mut Vec<&'a str>) -> Option<&'a str> {
            match t {
                Term::Var(v) => (!scope.contains(&v.as_str())).then_some(v.as_str()),
                Term::Zero | Term::One => None,
                Term::Mul(a, b) => term(a, scope).or_else(|| term(b, scope)),
                Term::Inv(a) | Term::Neg(a) => term(a, scope),
            }
        }
        fn walk<'a>(f: &'a Formula, scope: &mut Vec<&'a str>) -> Option<&'a str> {
            match f {
                Formula::Add(x, y, z) => term(x, scope)
                    .or_else(|| term(y, scope))
                    .or_else(|| term(z, scope)),
                Formula::Eq(a, b) => term(a, scope).or_else(|| term(b, scope)),
                Formula::Not(g) => walk(g, scope),
                Formula::And(l, r)
                | Formula::Or(l, r)
                | Formula::Implies(l, r)
                | Formula::Iff(l, r) => walk(l, scope).or_else(|| walk(r, scope)),
                Formula::Forall(v, body) | Formula::Exists(v, body) => {
                    scope.push(v);
                    let hit = walk(body, scope);
                    scope.pop();
                    hit
                }
            }
        }
        walk(self, &mut Vec::new())
    }
}

/// A [`FiniteHyperfield`] presented as a first-order structure: the carrier
/// `0..n` with interpretation tables for every signature symbol.
///
/// `inv` is totalized with `inv(0) = 0`; on nonzero elements it is the
/// multiplicative inverse the group structure guarantees.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureView {
    n: usize,
    one: usize,
    mul: Vec<Vec<usize>>,
    inv: Vec<usize>,
    neg: Vec<usize>,
    add: Vec<Vec<ElemSet>>,
}

impl StructureView {
    pub fn new(h: &FiniteHyperfield) -> Self {
        let n = h.n();
        let one = h.one();
        let mul: Vec<Vec<usize>> = (0..n)
            .map(|x| (0..n).map(|y| h.mul(x, y)).collect())
            .collect();
        let inv: Vec<usize> = (0..n)
            .map(|x| {
                if x == 0 {
                    0
                } else {
                    (1..n)
                        .find(|&y| h.mul(x, y) == one)
                        .expect("every nonzero element of a hyperfield is invertible")
                }
            })
            .collect();
        let neg: Vec<usize> = (0..n).map(|x| h.neg(x)).collect();
        let add: Vec<Vec<ElemSet>> = (0..n)
            .map(|x| (0..n).map(|y| h.hyperadd(x, y)).collect())
            .collect();
        StructureView {
            n,
            one,
            mul,
            inv,
            neg,
            add,
        }
    }

    /// Carrier size (always within [`crate::hyperfield::MAX_CARRIER`], far
    /// below what exhaustive quantifier enumeration can sustain).
    pub fn carrier(&self) -> usize {
        self.n
    }

    pub fn zero(&self) -> usize {
        0
    }

    pub fn one(&self) -> usize {
        self.one
    }

    pub fn mul(&self, x: usize, y: usize) -> usize {
        self.mul[x][y]
    }

    pub fn inv(&self, x: usize) -> usize {
        self.inv[x]
    }

    pub fn neg(&self, x: usize) -> usize {
        self.neg[x]
    }

    /// Whether `z ∈ x + y`.
    pub fn add_holds(&self, x: usize, y: usize, z: usize) -> bool {
        self.add[x][y] & (1u128 << z) != 0
    }
}

/// Tarskian truth of a sentence in a structure, by exhaustive enumeration.
///
/// Errors with [`crate::Error::FreeVariable`] if `f` is not closed.
pub fn evaluate(s: &StructureView, f: &Formula) -> crate::Result<bool> {
    if let Some(v) = f.free_variable() {
        return Err(crate::Error::FreeVariable(v.to_string()));
    }
    Ok(eval_formula(s, f, &mut Vec::new()))
}

fn eval_term(s: &StructureView, t: &Term, env: &[(&str, usize)]) -> usize {
    match t {
        Term::Var(v) => {
            env.iter()
                .rev()
                .find(|(name, _)| *name == v.as_str())
                .expect("evaluate checks closedness before descending")
                .1
        }
        Term::Zero => 0,
        Term::One => s.one,
        Term::Mul(a, b) => s.mul[eval_term(s, a, env)][eval_term(s, b, env)],
        Term::Inv(a) => s.inv[eval_term(s, a, env)],
        Term::Neg(a) => s.neg[eval_term(s, a, env)],
    }
}

fn eval_formula<'f>(s: &StructureView, f: &'f Formula, env: &mut Vec<(&'f str, usize)>) -> bool {
    match f {
        Formula::Add(x, y, z) => {
            let (x, y, z) = (eval_term(s, x, env), eval_term(s, y, env), eval_term(s, z, env));
            s.add_holds(x, y, z)
        }
        Formula::Eq(a, b) => eval_term(s, a, env) == eval_term(s, b, env),
        Formula::Not(g) => !eval_formula(s, g, env),
        Formula::And(l, r) => eval_formula(s, l, env) && eval_formula(s, r, env),
        Formula::Or(l, r) => eval_formula(s, l, env) || eval_formula(s, r, env),
        Formula::Implies(l, r) => !eval_formula(s, l, env) || eval_formula(s, r, env),
        Formula::Iff(l, r) => eval_formula(s, l, env) == eval_formula(s, r, env),
        Formula::Forall(v, body) => {
            env.push((v.as_str(), 0));
            let mut all = true;
            for val in 0..s.n {
                env.last_mut().expect("just pushed").1 = val;
                if !eval_formula(s, body, env) {
                    all = false;
                    break;
                }
            }
            env.pop();
            all
        }
        Formula::Exists(v, body) => {
            env.push((v.as_str(), 0));
            let mut any = false;
            for val in 0..s.n {
                env.last_mut().expect("just pushed").1 = val;
                if eval_formula(s, body, env) {
                    any = true;
                    break;
                }
            }
            env.pop();
            any
        }
    }
}

/// A sentence with a display name.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NamedSentence {
    pub name: &'static str,
    pub formula: Formula,
}

/// The hyperfield axioms as sentences: the six additive axioms (named
/// exactly as the verdicts of
/// [`FiniteHyperfield::verify_axioms`](crate::hyperfield::FiniteHyperfield::verify_axioms),
/// and agreeing with them verdict-for-verdict on every structure, defective
/// tables included), plus the multiplicative-group sentences that table
/// construction already enforces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AxiomSentences {
    pub commutativity: Formula,
    pub associativity: Formula,
    pub unique_inverse: Formula,
    pub reversibility: Formula,
    pub neutral_element: Formula,
    pub distributivity: Formula,
    /// Always true on any constructible table: abelian group on the nonzero
    /// part, absorbing zero, involutive negation.
    pub multiplicative: Vec<NamedSentence>,
}

impl AxiomSentences {
    /// The six additive sentences with their verdict names, in the order of
    /// [`AxiomReport::verdicts`](crate::hyperfield::AxiomReport::verdicts).
    pub fn additive(&self) -> [(&'static str, &Formula); 6] {
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

/// Parses a sentence the module itself supplies; the strings are fixed and
/// known to be grammatical.
fn fixed(text: &str) -> Formula {
    parse(text).expect("built-in sentence is grammatical")
}

/// Renders the hyperfield axioms in the first-order language.
///
/// Set-valued axiom clauses become membership equivalences: for example
/// associativity `(x + y) + z = x + (y + z)` turns into "`w` lies in the
/// left union iff it lies in the right union", with the unions expressed by
/// existential quantifiers.
pub fn hyperfield_axiom_sentences() -> AxiomSentences {
    AxiomSentences {
        commutativity: fixed("forall x. forall y. forall z. (add(x, y, z) <-> add(y, x, z))"),
        associativity: fixed(
            "forall x. forall y. forall z. forall w. \
             ((exists u. (add(x, y, u) /\\ add(u, z, w))) <-> \
              (exists v. (add(y, z, v) /\\ add(x, v, w))))",
        ),
        unique_inverse: fixed("forall x. forall y. (add(x, y, 0) <-> y = neg(x))"),
        reversibility: fixed(
            "forall x. forall y. forall z. (add(x, y, z) -> add(z, neg(x), y))",
        ),
        neutral_element: fixed("forall x. forall z. (add(x, 0, z) <-> z = x)"),
        distributivity: fixed(
            "forall z. forall x. forall y. forall t. \
             ((exists w. (add(x, y, w) /\\ mul(z, w) = t)) <-> \
              add(mul(z, x), mul(z, y), t))",
        ),
        multiplicative: vec![
            NamedSentence {
                name: "mul commutativity",
                formula: fixed("forall x. forall y. mul(x, y) = mul(y, x)"),
            },
            NamedSentence {
                name: "mul associativity",
                formula: fixed(
                    "forall x. forall y. forall z. mul(mul(x, y), z) = mul(x, mul(y, z))",
                ),
            },
            NamedSentence {
                name: "mul identity",
                formula: fixed("forall x. mul(1, x) = x"),
            },
            NamedSentence {
                name: "mul inverse",
                formula: fixed("forall x. (x = 0 \\/ mul(x, inv(x)) = 1)"),
            },
            NamedSentence {
                name: "zero absorbs",
                formula: fixed("forall x. mul(0, x) = 0"),
            },
            NamedSentence {
                name: "neg involution",
                formula: fixed("forall x. neg(neg(x)) = x"),
            },
        ],
    }
}

/// The sentence `forall x. forall z. (add(x,x,z) <-> (z = x \/ z = 0))`,
/// true exactly on structures where every self-sum is `{x, 0}` — it agrees
/// with [`FiniteHyperfield::is_cc`](crate::hyperfield::FiniteHyperfield::is_cc)
/// on every structure.
pub fn cc_sentence() -> Formula {
    fixed("forall x. forall z. (add(x, x, z) <-> (z = x \\/ z = 0))")
}
