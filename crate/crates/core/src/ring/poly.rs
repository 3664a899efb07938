//! Dense univariate polynomials over the rationals.
//!
//! Coefficients are stored in ascending degree order. The vector is either
//! empty (the zero polynomial) or ends in a nonzero coefficient.

use std::ops::{Add, Mul, Neg, Sub};

use num_rational::BigRational;
use num_traits::{One, Zero};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct UniPoly {
    coeffs: Vec<BigRational>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigRational::one())
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// The indeterminate `t`.
    pub fn var() -> Self {
        Self::monomial(BigRational::one(), 1)
    }

    /// `c * t^deg`.
    pub fn monomial(c: BigRational, deg: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigRational::zero(); deg + 1];
        coeffs[deg] = c;
        UniPoly { coeffs }
    }

    /// Builds a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(coeffs: Vec<BigRational>) -> Self {
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    /// Nonzero constants are exactly the units of `Q[t]`.
    pub fn is_unit(&self) -> bool {
        self.coeffs.len() == 1
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        UniPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divides by the leading coefficient; the zero polynomial is left as is.
    pub fn monic(&self) -> Self {
        match self.leading_coeff() {
            Some(lc) => self.scale(&lc.recip()),
            None => Self::zero(),
        }
    }

    /// Euclidean division. Panics if `divisor` is zero.
    pub fn div_rem(&self, divisor: &UniPoly) -> (UniPoly, UniPoly) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lc_inv = divisor.coeffs[dd].recip();
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.degree() else {
            return (Self::zero(), Self::zero());
        };
        if nd < dd {
            return (Self::zero(), self.clone());
        }
        let mut quot = vec![BigRational::zero(); nd - dd + 1];
        for k in (0..=nd - dd).rev() {
            let c = &rem[k + dd] * &lc_inv;
            if c.is_zero() {
                continue;
            }
            for (i, d) in divisor.coeffs.iter().enumerate() {
                rem[k + i] -= &c * d;
            }
            quot[k] = c;
        }
        (UniPoly::from_coeffs(quot), UniPoly::from_coeffs(rem))
    }

    /// Exact quotient `self / divisor`, or `None` when the division leaves a remainder.
    pub fn exact_div(&self, divisor: &UniPoly) -> Option<UniPoly> {
        if divisor.is_zero() {
            return if self.is_zero() { Some(Self::zero()) } else { None };
        }
        let (q, r) = self.div_rem(divisor);
        r.is_zero().then_some(q)
    }

    pub fn pow(&self, mut e: u32) -> UniPoly {
        let mut base = self.clone();
        let mut acc = UniPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Substitutes `image` for the indeterminate (Horner scheme).
    pub fn compose(&self, image: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * image) + &UniPoly::constant(c.clone());
        }
        acc
    }

    /// Substitutes `a*t + b` for the indeterminate.
    pub fn substitute_affine(&self, a: &BigRational, b: &BigRational) -> UniPoly {
        if b.is_zero() {
            let mut power = BigRational::one();
            let mut coeffs = Vec::with_capacity(self.coeffs.len());
            for c in &self.coeffs {
                coeffs.push(c * &power);
                power *= a;
            }
            return UniPoly::from_coeffs(coeffs);
        }
        let mut acc: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        for c in self.coeffs.iter().rev() {
            let mut next = vec![BigRational::zero(); acc.len() + 1];
            for (k, v) in acc.iter().enumerate() {
                next[k] += v * b;
                next[k + 1] += v * a;
            }
            next[0] += c;
            acc = next;
        }
        UniPoly::from_coeffs(acc)
    }

    /// Iterates `(degree, coefficient)` over the nonzero coefficients.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigRational)> {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero())
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;
    fn add(self, rhs: &UniPoly) -> UniPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (a, b) in coeffs.iter_mut().zip(&short.coeffs) {
            *a += b;
        }
        UniPoly::from_coeffs(coeffs)
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;
    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;
    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;
    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(coeffs)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn q(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn p(cs: &[(i64, i64)]) -> UniPoly {
        UniPoly::from_coeffs(cs.iter().map(|&(n, d)| q(n, d)).collect())
    }

    #[test]
    fn trailing_zeros_are_trimmed() {
        let a = p(&[(1, 1), (0, 1), (0, 1)]);
        assert_eq!(a.degree(), Some(0));
        assert!(p(&[(0, 1)]).is_zero());
    }

    #[test]
    fn div_rem_reconstructs() {
        let a = p(&[(1, 1), (2, 1), (0, 1), (3, 2)]);
        let b = p(&[(-1, 1), (1, 1)]);
        let (quot, rem) = a.div_rem(&b);
        assert_eq!(&(&quot * &b) + &rem, a);
        assert!(rem.degree().unwrap_or(0) < 1);
    }

    #[test]
    fn compose_with_affine_map() {
        // (t^2)(2t + 1) = 4t^2 + 4t + 1
        let sq = UniPoly::monomial(q(1, 1), 2);
        let image = p(&[(1, 1), (2, 1)]);
        assert_eq!(sq.compose(&image), p(&[(1, 1), (4, 1), (4, 1)]));
    }

    #[test]
    fn affine_substitution_matches_compose() {
        let f = p(&[(3, 1), (-1, 2), (0, 1), (5, 3)]);
        for (a, b) in [(q(2, 1), q(0, 1)), (q(1, 2), q(-1, 1)), (q(-3, 1), q(7, 5))] {
            let image = UniPoly::from_coeffs(vec![b.clone(), a.clone()]);
            assert_eq!(f.substitute_affine(&a, &b), f.compose(&image));
        }
    }

    #[test]
    fn exact_div_detects_remainder() {
        let t2 = UniPoly::monomial(q(1, 1), 2);
        assert_eq!(t2.exact_div(&UniPoly::var()), Some(UniPoly::var()));
        assert_eq!(UniPoly::var().exact_div(&t2), None);
    }
}
