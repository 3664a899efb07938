//! Presentations of skew PBW extensions `A = σ(R)<x_1, ..., x_n>` and the
//! normal-form arithmetic engine.
//!
//! A presentation fixes, for every variable, an affine endomorphism
//! `σ_i(t) = a_i t + b_i` of the base ring, the value `d_i = δ_i(t)` of the
//! σ_i-derivation, and for every pair `i < j` a relation
//! `x_j x_i = c_ij x_i x_j + p_ij` with a tail of degree at most one.

mod engine;
pub mod presets;

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Zero};

pub use engine::Algebra;

use crate::order::Exponent;
use crate::ring::{Rational, RingElem, RingKind, RingSpec, UniPoly};
use crate::skewpoly::SkewPoly;

/// The affine map `t -> a*t + b` on the base variable.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SigmaMap {
    pub a: Rational,
    pub b: Rational,
}

impl SigmaMap {
    pub fn identity() -> Self {
        SigmaMap {
            a: Rational::one(),
            b: Rational::zero(),
        }
    }

    pub fn new(a: Rational, b: Rational) -> Self {
        SigmaMap { a, b }
    }

    pub fn is_identity(&self) -> bool {
        self.a.is_one() && self.b.is_zero()
    }

    /// The image of the base variable as a polynomial.
    pub fn image(&self) -> UniPoly {
        UniPoly::from_coeffs(vec![self.b.clone(), self.a.clone()])
    }
}

/// `x_j x_i = c x_i x_j + tail` for a pair `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub c: RingElem,
    pub tail: SkewPoly,
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Flags {
    pub quasi_commutative: bool,
    pub bijective: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub base: RingSpec,
    pub variables: Vec<String>,
    pub sigma: Vec<SigmaMap>,
    pub delta: Vec<RingElem>,
    /// Keyed by `(i, j)` with `i < j`; missing pairs commute.
    pub relations: BTreeMap<(usize, usize), Relation>,
    pub flags: Flags,
}

impl AlgebraSpec {
    /// Commuting variables, identity σ, zero δ, flags inferred.
    pub fn new<S: Into<String>>(base: RingSpec, variables: impl IntoIterator<Item = S>) -> Self {
        let variables: Vec<String> = variables.into_iter().map(Into::into).collect();
        let n = variables.len();
        let zero = base.zero();
        let mut spec = AlgebraSpec {
            base,
            variables,
            sigma: vec![SigmaMap::identity(); n],
            delta: vec![zero; n],
            relations: BTreeMap::new(),
            flags: Flags::default(),
        };
        spec.flags = spec.inferred_flags();
        spec
    }

    pub fn num_vars(&self) -> usize {
        self.variables.len()
    }

    pub fn with_sigma(mut self, i: usize, sigma: SigmaMap) -> Self {
        self.sigma[i] = sigma;
        self.flags = self.inferred_flags();
        self
    }

    pub fn with_delta(mut self, i: usize, d: RingElem) -> Self {
        self.delta[i] = d;
        self.flags = self.inferred_flags();
        self
    }

    /// Sets `x_j x_i = c x_i x_j + tail`. Requires `i < j`.
    pub fn with_relation(mut self, i: usize, j: usize, c: RingElem, tail: SkewPoly) -> Self {
        assert!(i < j, "relations are keyed by (i, j) with i < j");
        self.relations.insert((i, j), Relation { c, tail });
        self.flags = self.inferred_flags();
        self
    }

    pub fn with_flags(mut self, flags: Flags) -> Self {
        self.flags = flags;
        self
    }

    /// The relation for `i < j`, defaulting to commuting variables.
    pub fn relation(&self, i: usize, j: usize) -> Relation {
        self.relations.get(&(i, j)).cloned().unwrap_or_else(|| Relation {
            c: self.base.one(),
            tail: SkewPoly::zero(),
        })
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.variables.iter().position(|v| v == name)
    }

    /// Flags read off the data: quasi-commutative when every δ_i and every
    /// tail vanishes, bijective when every σ_i is invertible and every
    /// `c_ij` is a unit.
    pub fn inferred_flags(&self) -> Flags {
        Flags {
            quasi_commutative: self.delta.iter().all(RingElem::is_zero)
                && self.relations.values().all(|r| r.tail.is_zero()),
            bijective: self.sigma.iter().all(|s| !s.a.is_zero())
                && self.relations.values().all(|r| r.c.is_unit()),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DiagnosticKind {
    /// Names, lengths, ring kinds or tail degrees are malformed.
    Structure,
    /// Some `c_ij` is zero.
    ZeroConstant,
    /// Some σ_i is not injective.
    NotInjective,
    /// The bijective flag is set but the data is not bijective.
    BijectiveFlag,
    /// The quasi-commutative flag is set but some δ_i or tail is nonzero.
    QuasiCommutativeFlag,
    /// An associativity probe evaluated two ways disagrees.
    Associativity,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Diagnostic {
    pub kind: DiagnosticKind,
    pub message: String,
}

impl Diagnostic {
    fn new(kind: DiagnosticKind, message: impl Into<String>) -> Self {
        Diagnostic {
            kind,
            message: message.into(),
        }
    }
}

impl fmt::Display for Diagnostic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.message)
    }
}

/// Checks a presentation. An empty result means every check passed.
///
/// Structural problems are reported first; the associativity probes only run
/// on structurally sound presentations.
pub fn validate_spec(spec: &AlgebraSpec) -> Vec<Diagnostic> {
    let mut diags = structure_diagnostics(spec);
    if !diags.is_empty() {
        return diags;
    }
    let names = &spec.variables;

    for (&(i, j), rel) in &spec.relations {
        if rel.c.is_zero() {
            diags.push(Diagnostic::new(
                DiagnosticKind::ZeroConstant,
                format!("relation {} {}: the constant c must be nonzero", names[j], names[i]),
            ));
        }
    }
    for (i, s) in spec.sigma.iter().enumerate() {
        if s.a.is_zero() {
            diags.push(Diagnostic::new(
                DiagnosticKind::NotInjective,
                format!("sigma of {} is not injective (the coefficient of the base variable is 0)", names[i]),
            ));
        }
    }

    let inferred = spec.inferred_flags();
    if spec.flags.bijective && !inferred.bijective {
        diags.push(Diagnostic::new(
            DiagnosticKind::BijectiveFlag,
            "flag bijective is set, but some sigma is not invertible or some c is not a unit",
        ));
    }
    if spec.flags.quasi_commutative && !inferred.quasi_commutative {
        diags.push(Diagnostic::new(
            DiagnosticKind::QuasiCommutativeFlag,
            "flag quasi_commutative is set, but some delta or some relation tail is nonzero",
        ));
    }
    if !diags.is_empty() {
        return diags;
    }

    diags.extend(associativity_diagnostics(spec));
    diags
}

fn structure_diagnostics(spec: &AlgebraSpec) -> Vec<Diagnostic> {
    let mut diags = Vec::new();
    let mut push = |msg: String| diags.push(Diagnostic::new(DiagnosticKind::Structure, msg));
    let n = spec.num_vars();
    let kind = spec.base.kind();

    for (i, v) in spec.variables.iter().enumerate() {
        if spec.variables[..i].contains(v) {
            push(format!("variable {v} is declared twice"));
        }
        if spec.base.var_name() == Some(v.as_str()) {
            push(format!("variable {v} clashes with the base ring variable"));
        }
    }
    if spec.sigma.len() != n || spec.delta.len() != n {
        push(format!("expected sigma and delta data for {n} variables"));
        return diags;
    }
    for (i, (s, d)) in spec.sigma.iter().zip(&spec.delta).enumerate() {
        let name = &spec.variables[i];
        if kind == RingKind::Rational && !s.is_identity() {
            push(format!("sigma of {name} must be the identity over QQ"));
        }
        if d.kind() != kind {
            push(format!("delta of {name} does not lie in the base ring"));
        } else if kind == RingKind::Rational && !d.is_zero() {
            push(format!("delta of {name} must be zero over QQ"));
        }
    }
    for (&(i, j), rel) in &spec.relations {
        if i >= j || j >= n {
            push(format!("relation index pair ({i}, {j}) is out of range"));
            continue;
        }
        let label = format!("{} {}", spec.variables[j], spec.variables[i]);
        if rel.c.kind() != kind {
            push(format!("relation {label}: c does not lie in the base ring"));
        }
        for (e, c) in rel.tail.terms() {
            if e.len() != n || c.kind() != kind {
                push(format!("relation {label}: malformed tail term"));
            } else if e.degree() > 1 {
                push(format!("relation {label}: the tail must have degree at most 1"));
            }
        }
    }
    diags
}

fn associativity_diagnostics(spec: &AlgebraSpec) -> Vec<Diagnostic> {
    let alg = Algebra::unchecked(spec.clone());
    let n = spec.num_vars();
    let names = &spec.variables;
    let var = |i: usize| SkewPoly::term(Exponent::unit(n, i), spec.base.one());
    let mut diags = Vec::new();

    for k in 0..n {
        for j in 0..k {
            for i in 0..j {
                let (xi, xj, xk) = (var(i), var(j), var(k));
                let left = alg.mul(&alg.mul(&xk, &xj), &xi);
                let right = alg.mul(&xk, &alg.mul(&xj, &xi));
                if left != right {
                    diags.push(Diagnostic::new(
                        DiagnosticKind::Associativity,
                        format!(
                            "associativity probe failed: ({} {}) {} != {} ({} {})",
                            names[k], names[j], names[i], names[k], names[j], names[i]
                        ),
                    ));
                }
            }
        }
    }

    if let (Some(t), Some(tname)) = (spec.base.var(), spec.base.var_name()) {
        let t = SkewPoly::term(Exponent::zero(n), t);
        for j in 0..n {
            for i in 0..j {
                let (xi, xj) = (var(i), var(j));
                let left = alg.mul(&alg.mul(&xj, &xi), &t);
                let right = alg.mul(&xj, &alg.mul(&xi, &t));
                if left != right {
                    diags.push(Diagnostic::new(
                        DiagnosticKind::Associativity,
                        format!(
                            "associativity probe failed: ({} {}) {tname} != {} ({} {tname})",
                            names[j], names[i], names[j], names[i]
                        ),
                    ));
                }
            }
        }
    }
    diags
}
