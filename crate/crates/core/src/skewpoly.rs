//! Elements of the algebra in standard form: finite sums `Σ r_α x^α` with the
//! coefficients written on the left.

use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::order::{Exponent, OrderSpec};
use crate::ring::{Rational, RingElem};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct SkewPoly {
    terms: BTreeMap<Exponent, RingElem>,
}

impl SkewPoly {
    pub fn zero() -> Self {
        SkewPoly::default()
    }

    /// The single term `c x^exp` (zero when `c` is zero).
    pub fn term(exp: Exponent, c: RingElem) -> Self {
        let mut p = SkewPoly::zero();
        p.add_term(exp, c);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponent, &RingElem)> {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Exponent, RingElem)> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, exp: &Exponent) -> Option<&RingElem> {
        self.terms.get(exp)
    }

    /// Adds `c x^exp` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, exp: Exponent, c: RingElem) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                let sum = &*old + &c;
                if sum.is_zero() {
                    self.terms.remove(&exp);
                } else {
                    *old = sum;
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add_assign(&mut self, other: &SkewPoly) {
        for (e, c) in other.terms() {
            self.add_term(e.clone(), c.clone());
        }
    }

    /// Left multiplication by a base-ring element, `r * f`.
    pub fn left_scale(&self, r: &RingElem) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e.clone(), r * c);
        }
        out
    }

    pub fn scale_rational(&self, q: &Rational) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(e.clone(), c.scale(q));
        }
        out
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Exponent::degree).max()
    }

    /// The greatest term under `order`.
    pub fn leading(&self, order: &OrderSpec) -> Option<(&Exponent, &RingElem)> {
        self.terms.iter().max_by(|a, b| order.cmp_mon(a.0, b.0))
    }

    /// Terms sorted in decreasing monomial order.
    pub fn sorted_terms(&self, order: &OrderSpec) -> Vec<(&Exponent, &RingElem)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp_mon(b.0, a.0));
        v
    }
}

impl Add for &SkewPoly {
    type Output = SkewPoly;
    fn add(self, rhs: &SkewPoly) -> SkewPoly {
        let mut out = self.clone();
        out.add_assign(rhs);
        out
    }
}

impl Sub for &SkewPoly {
    type Output = SkewPoly;
    fn sub(self, rhs: &SkewPoly) -> SkewPoly {
        self + &(-rhs)
    }
}

impl Neg for &SkewPoly {
    type Output = SkewPoly;
    fn neg(self) -> SkewPoly {
        SkewPoly {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}
