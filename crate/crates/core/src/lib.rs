//! Gröbner bases and syzygies for submodules of free modules over skew PBW
//! extensions `A = σ(R)<x_1, ..., x_n>` with `R = Q` or `R = Q[t]`.
//!
//! * [`Algebra`] holds a validated presentation and multiplies in normal form.
//! * [`division`] reduces vectors of `A^m` by a list of divisors.
//! * [`groebner`] completes and verifies Gröbner bases (quasi-commutative
//!   bijective algebras) and decides membership.
//! * [`syzygy`] computes generators of syzygy modules.
//! * [`text`] parses and renders polynomials and vectors.

pub mod algebra;
pub mod division;
pub mod error;
pub mod groebner;
pub mod order;
pub mod ring;
mod skewpoly;
mod subsets;
pub mod syzygy;
pub mod text;
mod vector;

pub use algebra::{presets, validate_spec, Algebra, AlgebraSpec, Diagnostic, DiagnosticKind, Flags, Relation, SigmaMap};
pub use division::{division, reduce_full, reduce_step, DivisionResult, ReductionStep};
pub use error::{Error, ParseError, Result};
pub use groebner::{buchberger, compute_bf, is_groebner, member, GbResult, SubsetData};
pub use order::{BasisDirection, Exponent, ModMonomial, ModuleOrder, OrderSpec};
pub use ring::{rat, Rational, RingElem, RingKind, RingSpec, UniPoly};
pub use skewpoly::SkewPoly;
pub use syzygy::{apply_presentation, saturate, syz_basis, syz_leading, syz_module, SaturatedSubset, SyzygyMatrices};
pub use vector::{Leading, ModVector};
