//! Base rings of coefficients: the rationals and univariate polynomials over them.
//!
//! Both rings are Euclidean, so ideal membership and row syzygies are
//! decidable with the extended Euclidean algorithm (see [`lgs`]).

pub mod lgs;
mod poly;

use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

pub use lgs::{gcd_ext, ideal_solve, row_syzygies};
pub use poly::UniPoly;

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Shorthand for the rational `n/d`. Panics when `d == 0`.
pub fn rat(n: i64, d: i64) -> Rational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

/// Which base ring an algebra is built over.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingSpec {
    Rationals,
    /// `Q[var]`.
    Polynomials { var: String },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingKind {
    Rational,
    Polynomial,
}

impl RingSpec {
    pub fn polynomials(var: impl Into<String>) -> Self {
        RingSpec::Polynomials { var: var.into() }
    }

    pub fn kind(&self) -> RingKind {
        match self {
            RingSpec::Rationals => RingKind::Rational,
            RingSpec::Polynomials { .. } => RingKind::Polynomial,
        }
    }

    pub fn var_name(&self) -> Option<&str> {
        match self {
            RingSpec::Rationals => None,
            RingSpec::Polynomials { var } => Some(var),
        }
    }

    pub fn zero(&self) -> RingElem {
        self.from_rational(Rational::zero())
    }

    pub fn one(&self) -> RingElem {
        self.from_rational(Rational::one())
    }

    pub fn from_rational(&self, q: Rational) -> RingElem {
        match self {
            RingSpec::Rationals => RingElem::Rational(q),
            RingSpec::Polynomials { .. } => RingElem::Poly(UniPoly::constant(q)),
        }
    }

    pub fn from_int(&self, n: i64) -> RingElem {
        self.from_rational(rat(n, 1))
    }

    /// The base variable, if the ring has one.
    pub fn var(&self) -> Option<RingElem> {
        match self {
            RingSpec::Rationals => None,
            RingSpec::Polynomials { .. } => Some(RingElem::Poly(UniPoly::var())),
        }
    }

    /// Lifts a polynomial into this ring; fails over `Q` unless it is constant.
    pub fn from_poly(&self, p: UniPoly) -> Result<RingElem> {
        match self {
            RingSpec::Polynomials { .. } => Ok(RingElem::Poly(p)),
            RingSpec::Rationals => match p.degree() {
                None => Ok(RingElem::Rational(Rational::zero())),
                Some(0) => Ok(RingElem::Rational(p.coeff(0))),
                Some(_) => Err(Error::RingMismatch),
            },
        }
    }

    pub fn contains(&self, e: &RingElem) -> bool {
        e.kind() == self.kind()
    }
}

/// An element of the base ring.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum RingElem {
    Rational(Rational),
    Poly(UniPoly),
}

impl RingElem {
    pub fn kind(&self) -> RingKind {
        match self {
            RingElem::Rational(_) => RingKind::Rational,
            RingElem::Poly(_) => RingKind::Polynomial,
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            RingElem::Rational(q) => q.is_zero(),
            RingElem::Poly(p) => p.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            RingElem::Rational(q) => q.is_one(),
            RingElem::Poly(p) => p.is_one(),
        }
    }

    pub fn is_unit(&self) -> bool {
        match self {
            RingElem::Rational(q) => !q.is_zero(),
            RingElem::Poly(p) => p.is_unit(),
        }
    }

    pub fn inverse(&self) -> Option<RingElem> {
        match self {
            RingElem::Rational(q) if !q.is_zero() => Some(RingElem::Rational(q.recip())),
            RingElem::Poly(p) if p.is_unit() => Some(RingElem::Poly(UniPoly::constant(p.coeff(0).recip()))),
            _ => None,
        }
    }

    /// Degree in the base variable; rationals have degree 0. `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        match self {
            RingElem::Rational(q) => (!q.is_zero()).then_some(0),
            RingElem::Poly(p) => p.degree(),
        }
    }

    /// Views the element as a polynomial (rationals become constants).
    pub fn to_poly(&self) -> UniPoly {
        match self {
            RingElem::Rational(q) => UniPoly::constant(q.clone()),
            RingElem::Poly(p) => p.clone(),
        }
    }

    /// The constant term, which is the whole element for rationals.
    pub fn constant_term(&self) -> Rational {
        match self {
            RingElem::Rational(q) => q.clone(),
            RingElem::Poly(p) => p.coeff(0),
        }
    }

    fn with_poly(&self, p: UniPoly) -> RingElem {
        match self {
            RingElem::Rational(_) => RingElem::Rational(p.coeff(0)),
            RingElem::Poly(_) => RingElem::Poly(p),
        }
    }

    pub fn scale(&self, c: &Rational) -> RingElem {
        match self {
            RingElem::Rational(q) => RingElem::Rational(q * c),
            RingElem::Poly(p) => RingElem::Poly(p.scale(c)),
        }
    }

    fn check_kind(&self, rhs: &RingElem) -> Result<()> {
        if self.kind() == rhs.kind() {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    pub fn checked_add(&self, rhs: &RingElem) -> Result<RingElem> {
        self.check_kind(rhs)?;
        Ok(match (self, rhs) {
            (RingElem::Rational(a), RingElem::Rational(b)) => RingElem::Rational(a + b),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a + b),
            _ => unreachable!(),
        })
    }

    pub fn checked_sub(&self, rhs: &RingElem) -> Result<RingElem> {
        self.checked_add(&-rhs)
    }

    pub fn checked_mul(&self, rhs: &RingElem) -> Result<RingElem> {
        self.check_kind(rhs)?;
        Ok(match (self, rhs) {
            (RingElem::Rational(a), RingElem::Rational(b)) => RingElem::Rational(a * b),
            (RingElem::Poly(a), RingElem::Poly(b)) => RingElem::Poly(a * b),
            _ => unreachable!(),
        })
    }

    /// `self / divisor` when the division is exact in the ring.
    pub fn exact_div(&self, divisor: &RingElem) -> Option<RingElem> {
        if self.kind() != divisor.kind() {
            return None;
        }
        match (self, divisor) {
            (RingElem::Rational(a), RingElem::Rational(b)) => {
                if b.is_zero() {
                    a.is_zero().then(|| RingElem::Rational(Rational::zero()))
                } else {
                    Some(RingElem::Rational(a / b))
                }
            }
            (RingElem::Poly(a), RingElem::Poly(b)) => a.exact_div(b).map(RingElem::Poly),
            _ => unreachable!(),
        }
    }

    pub fn divides(&self, other: &RingElem) -> bool {
        other.exact_div(self).is_some()
    }

    /// Monic normalization: polynomials are divided by their leading
    /// coefficient, nonzero rationals become 1.
    pub fn monic(&self) -> RingElem {
        match self {
            RingElem::Rational(q) if !q.is_zero() => RingElem::Rational(Rational::one()),
            RingElem::Rational(_) => self.clone(),
            RingElem::Poly(p) => RingElem::Poly(p.monic()),
        }
    }

    /// Leading rational coefficient (the value itself over `Q`).
    pub fn leading_rational(&self) -> Option<Rational> {
        match self {
            RingElem::Rational(q) => (!q.is_zero()).then(|| q.clone()),
            RingElem::Poly(p) => p.leading_coeff().cloned(),
        }
    }

    /// Substitutes `image` for the base variable. Rationals are fixed.
    pub fn substitute(&self, image: &UniPoly) -> RingElem {
        match self {
            RingElem::Rational(_) => self.clone(),
            RingElem::Poly(p) => RingElem::Poly(p.compose(image)),
        }
    }

    /// Substitutes `a*t + b` for the base variable. Rationals are fixed.
    pub fn substitute_affine(&self, a: &Rational, b: &Rational) -> RingElem {
        match self {
            RingElem::Rational(_) => self.clone(),
            RingElem::Poly(p) => RingElem::Poly(p.substitute_affine(a, b)),
        }
    }

    pub(crate) fn euclid_div_rem(&self, divisor: &RingElem) -> (RingElem, RingElem) {
        match (self, divisor) {
            (RingElem::Rational(a), RingElem::Rational(b)) => {
                (RingElem::Rational(a / b), RingElem::Rational(Rational::zero()))
            }
            (RingElem::Poly(a), RingElem::Poly(b)) => {
                let (q, r) = a.div_rem(b);
                (RingElem::Poly(q), RingElem::Poly(r))
            }
            _ => panic!("ring element kinds differ"),
        }
    }

    pub(crate) fn zero_like(&self) -> RingElem {
        self.with_poly(UniPoly::zero())
    }

    pub(crate) fn one_like(&self) -> RingElem {
        self.with_poly(UniPoly::one())
    }
}

// Operator forms panic on mixed kinds; use the `checked_*` methods for a
// fallible version.
impl Add for &RingElem {
    type Output = RingElem;
    fn add(self, rhs: &RingElem) -> RingElem {
        self.checked_add(rhs).expect("ring element kinds differ")
    }
}

impl Sub for &RingElem {
    type Output = RingElem;
    fn sub(self, rhs: &RingElem) -> RingElem {
        self.checked_sub(rhs).expect("ring element kinds differ")
    }
}

impl Mul for &RingElem {
    type Output = RingElem;
    fn mul(self, rhs: &RingElem) -> RingElem {
        self.checked_mul(rhs).expect("ring element kinds differ")
    }
}

impl Neg for &RingElem {
    type Output = RingElem;
    fn neg(self) -> RingElem {
        match self {
            RingElem::Rational(q) => RingElem::Rational(-q),
            RingElem::Poly(p) => RingElem::Poly(-p),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RingOp {
    Add,
    Sub,
    Mul,
    Neg,
}

/// Exact ring arithmetic with a kind check on the operands. `Neg` ignores `b`
/// apart from the kind check.
pub fn ring_arith(op: RingOp, a: &RingElem, b: &RingElem) -> Result<RingElem> {
    match op {
        RingOp::Add => a.checked_add(b),
        RingOp::Sub => a.checked_sub(b),
        RingOp::Mul => a.checked_mul(b),
        RingOp::Neg => {
            a.check_kind(b)?;
            Ok(-a)
        }
    }
}
