//! A workbench for finite Krasner hyperfields.
//!
//! A hyperfield is a field-like structure whose addition is multivalued:
//! `x + y` is a nonempty *set* of elements. The crate builds finite
//! hyperfields three ways — as quotients `F / G` of a finite field by a
//! multiplicative subgroup, as quotients of a field extension by the base
//! field, and synthetically from a finite abelian group — and then lets you
//! interrogate them:
//!
//! * [`hyperfield`] — construction, axiom verification, isomorphism testing,
//!   and exhaustive enumeration of small hyperfields.
//! * [`projgeom`] — the incidence geometry whose points are the nonzero
//!   elements of a doubly-distributive hyperfield and whose lines are the
//!   hyperaddition sets.
//! * [`witness`] — certified families of multiplicatively independent
//!   elements in quadratic extensions (Gaussian integers, `F_p(X)/F_p(X^2)`,
//!   and the characteristic-2 Artin–Schreier analogue), with an exact
//!   valuation-matrix certificate cross-checked by a brute-force search.
//! * [`logic`] — a first-order language for hyperfields: parser, evaluator,
//!   axiom sentences, and Ehrenfeucht–Fraïssé games.
//! * [`algebra`] — the underlying exact arithmetic: finite fields with
//!   deterministic moduli, polynomial factorization over prime fields,
//!   Gaussian integers, finite abelian groups, and integer linear algebra.
//!
//! Everything is exact: no floating point appears anywhere, and every search
//! breaks ties deterministically, so identical inputs produce identical
//! output.

pub mod algebra;
pub mod hyperfield;
pub mod logic;
pub mod projgeom;
pub mod witness;

mod error;

pub use error::{Error, Result};
