//! Normal-form multiplication by single-generator rewriting.
//!
//! Three memoized primitives drive everything:
//!
//! * `x^α t^k` (moving a monomial past a power of the base variable),
//! * `x_i x^γ` (moving one variable into a standard monomial),
//! * `x^α x^β`.
//!
//! A variable passes a ring element by `x_i r = σ_i(r) x_i + δ_i(r)` and a
//! smaller variable by the stored relation; every tail produced has strictly
//! lower total degree, so the recursion terminates.

use std::collections::HashMap;
use std::hash::Hash;
use std::sync::Mutex;

use num_traits::{One, Zero};

use super::{validate_spec, AlgebraSpec, Relation};
use crate::error::{Error, Result};
use crate::order::Exponent;
use crate::ring::{Rational, RingElem, RingKind, UniPoly};
use crate::skewpoly::SkewPoly;
use crate::vector::ModVector;

/// A validated presentation together with its multiplication caches.
///
/// The caches are idempotent: concurrent callers may race to fill the same
/// entry, and they always insert identical values.
#[derive(Debug)]
pub struct Algebra {
    spec: AlgebraSpec,
    images: Vec<UniPoly>,
    relations: HashMap<(usize, usize), Relation>,
    ring_cache: Mutex<HashMap<(Exponent, usize), SkewPoly>>,
    var_cache: Mutex<HashMap<(usize, Exponent), SkewPoly>>,
    mono_cache: Mutex<HashMap<(Exponent, Exponent), SkewPoly>>,
}

fn cached<K, F>(cache: &Mutex<HashMap<K, SkewPoly>>, key: K, compute: F) -> SkewPoly
where
    K: Eq + Hash,
    F: FnOnce() -> SkewPoly,
{
    if let Some(hit) = cache.lock().expect("cache poisoned").get(&key) {
        return hit.clone();
    }
    let value = compute();
    cache.lock().expect("cache poisoned").insert(key, value.clone());
    value
}

impl Algebra {
    /// Validates the presentation and builds the engine.
    pub fn new(spec: AlgebraSpec) -> Result<Self> {
        let diags = validate_spec(&spec);
        if !diags.is_empty() {
            return Err(Error::InvalidSpec(diags));
        }
        Ok(Self::unchecked(spec))
    }

    pub(crate) fn unchecked(spec: AlgebraSpec) -> Self {
        let images = spec.sigma.iter().map(|s| s.image()).collect();
        let n = spec.num_vars();
        let mut relations = HashMap::new();
        for j in 0..n {
            for i in 0..j {
                relations.insert((i, j), spec.relation(i, j));
            }
        }
        Algebra {
            spec,
            images,
            relations,
            ring_cache: Mutex::default(),
            var_cache: Mutex::default(),
            mono_cache: Mutex::default(),
        }
    }

    pub fn spec(&self) -> &AlgebraSpec {
        &self.spec
    }

    pub fn num_vars(&self) -> usize {
        self.spec.num_vars()
    }

    pub fn is_quasi_commutative(&self) -> bool {
        self.spec.flags.quasi_commutative
    }

    pub fn is_bijective(&self) -> bool {
        self.spec.flags.bijective
    }

    /// Errors unless the algebra is quasi-commutative and bijective, the
    /// setting in which completion and syzygies are available.
    pub fn require_qc_bijective(&self, what: &str) -> Result<()> {
        if self.is_quasi_commutative() && self.is_bijective() {
            Ok(())
        } else {
            Err(Error::Unsupported(format!(
                "{what} requires a quasi-commutative bijective algebra"
            )))
        }
    }

    pub fn zero_exp(&self) -> Exponent {
        Exponent::zero(self.num_vars())
    }

    pub fn one(&self) -> SkewPoly {
        SkewPoly::term(self.zero_exp(), self.spec.base.one())
    }

    pub fn constant(&self, r: RingElem) -> SkewPoly {
        SkewPoly::term(self.zero_exp(), r)
    }

    pub fn var(&self, i: usize) -> SkewPoly {
        SkewPoly::term(Exponent::unit(self.num_vars(), i), self.spec.base.one())
    }

    pub fn monomial(&self, exp: Exponent) -> SkewPoly {
        SkewPoly::term(exp, self.spec.base.one())
    }

    /// Checks that `f` is a well-formed element of this algebra.
    pub fn check_poly(&self, f: &SkewPoly) -> Result<()> {
        let kind = self.spec.base.kind();
        for (e, c) in f.terms() {
            if e.len() != self.num_vars() {
                return Err(Error::LengthMismatch {
                    expected: self.num_vars(),
                    found: e.len(),
                });
            }
            if c.kind() != kind {
                return Err(Error::RingMismatch);
            }
        }
        Ok(())
    }

    /// Checks that `v` is a well-formed element of `A^rank`.
    pub fn check_vector(&self, v: &ModVector, rank: usize) -> Result<()> {
        if v.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: v.rank(),
            });
        }
        v.components().iter().try_for_each(|c| self.check_poly(c))
    }

    /// `σ_i(r)`.
    pub fn sigma(&self, i: usize, r: &RingElem) -> RingElem {
        match r.kind() {
            RingKind::Rational => r.clone(),
            RingKind::Polynomial => {
                let s = &self.spec.sigma[i];
                r.substitute_affine(&s.a, &s.b)
            }
        }
    }

    /// `δ_i(r)`, extended from `δ_i(t) = d_i` by the σ_i-derivation rule.
    pub fn delta(&self, i: usize, r: &RingElem) -> RingElem {
        let RingElem::Poly(p) = r else {
            return r.zero_like();
        };
        let d = self.spec.delta[i].to_poly();
        if d.is_zero() {
            return r.zero_like();
        }
        let image = &self.images[i];
        let mut acc = UniPoly::zero();
        let mut dk = UniPoly::zero();
        let mut tk = UniPoly::one();
        for c in p.coeffs().iter().skip(1) {
            // D_k = σ(t) D_{k-1} + d t^{k-1}
            dk = &(image * &dk) + &(&d * &tk);
            if !c.is_zero() {
                acc = &acc + &dk.scale(c);
            }
            tk = &tk * &UniPoly::var();
        }
        RingElem::Poly(acc)
    }

    /// `σ^α(r) = σ_1^{α_1} ... σ_n^{α_n}(r)`; σ_n acts first.
    pub fn sigma_alpha(&self, alpha: &Exponent, r: &RingElem) -> RingElem {
        if r.kind() == RingKind::Rational || alpha.is_zero() {
            return r.clone();
        }
        // t -> a t + b, composed with σ_i on the inside: a (a_i t + b_i) + b.
        let mut a = Rational::one();
        let mut b = Rational::zero();
        for i in (0..self.num_vars()).rev() {
            let s = &self.spec.sigma[i];
            for _ in 0..alpha.get(i) {
                b += &a * &s.b;
                a *= &s.a;
            }
        }
        r.substitute_affine(&a, &b)
    }

    /// The standard form of `x^α r`.
    pub fn mono_times_ring(&self, alpha: &Exponent, r: &RingElem) -> SkewPoly {
        match r {
            RingElem::Rational(_) => SkewPoly::term(alpha.clone(), r.clone()),
            RingElem::Poly(p) => {
                let mut out = SkewPoly::zero();
                for (k, c) in p.terms() {
                    out.add_assign(&self.mono_times_tpow(alpha, k).scale_rational(c));
                }
                out
            }
        }
    }

    fn mono_times_tpow(&self, alpha: &Exponent, k: usize) -> SkewPoly {
        cached(&self.ring_cache, (alpha.clone(), k), || {
            let one = crate::ring::rat(1, 1);
            let mut current = SkewPoly::term(self.zero_exp(), RingElem::Poly(UniPoly::monomial(one, k)));
            for i in (0..self.num_vars()).rev() {
                for _ in 0..alpha.get(i) {
                    // Every monomial in `current` only involves x_i, ..., x_n,
                    // so x_i x^γ is already standard.
                    let mut next = SkewPoly::zero();
                    for (g, s) in current.terms() {
                        next.add_term(g.with(i, g.get(i) + 1), self.sigma(i, s));
                        next.add_term(g.clone(), self.delta(i, s));
                    }
                    current = next;
                }
            }
            current
        })
    }

    /// The standard form of `x_i x^γ`.
    pub fn var_times_mono(&self, i: usize, gamma: &Exponent) -> SkewPoly {
        let Some(j) = (0..i).find(|&j| gamma.get(j) > 0) else {
            return self.monomial(gamma.with(i, gamma.get(i) + 1));
        };
        cached(&self.var_cache, (i, gamma.clone()), || {
            // x_i x^γ = x_i x_j x^γ' = c_ji x_j (x_i x^γ') + p_ji x^γ'
            let rest = gamma.with(j, gamma.get(j) - 1);
            let rel = &self.relations[&(j, i)];
            let inner = self.var_times_mono(i, &rest);
            let mut out = self.var_times_poly(j, &inner).left_scale(&rel.c);
            for (e, r) in rel.tail.terms() {
                let shifted = match (0..self.num_vars()).find(|&l| e.get(l) > 0) {
                    Some(l) => self.var_times_mono(l, &rest),
                    None => self.monomial(rest.clone()),
                };
                out.add_assign(&shifted.left_scale(r));
            }
            out
        })
    }

    /// `x_i f`.
    pub fn var_times_poly(&self, i: usize, f: &SkewPoly) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (g, s) in f.terms() {
            out.add_assign(&self.var_times_mono(i, g).left_scale(&self.sigma(i, s)));
            out.add_term(g.clone(), self.delta(i, s));
        }
        out
    }

    /// The standard form of `x^α x^β`.
    pub fn mono_times_mono(&self, alpha: &Exponent, beta: &Exponent) -> SkewPoly {
        if alpha.is_zero() {
            return self.monomial(beta.clone());
        }
        cached(&self.mono_cache, (alpha.clone(), beta.clone()), || {
            let mut current = self.monomial(beta.clone());
            for i in (0..self.num_vars()).rev() {
                for _ in 0..alpha.get(i) {
                    current = self.var_times_poly(i, &current);
                }
            }
            current
        })
    }

    /// `(c_{α,β}, p_{α,β})` with `x^α x^β = c_{α,β} x^{α+β} + p_{α,β}`.
    pub fn c_of(&self, alpha: &Exponent, beta: &Exponent) -> (RingElem, SkewPoly) {
        let mut product = self.mono_times_mono(alpha, beta);
        let top = alpha.add(beta);
        let c = product.coeff(&top).cloned().unwrap_or_else(|| self.spec.base.zero());
        product.add_term(top, -&c);
        (c, product)
    }

    /// `r x^α g`, the workhorse of reduction steps.
    pub fn term_times_poly(&self, r: &RingElem, alpha: &Exponent, g: &SkewPoly) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (beta, b) in g.terms() {
            for (gamma, s) in self.mono_times_ring(alpha, b).terms() {
                out.add_assign(&self.mono_times_mono(gamma, beta).left_scale(&(r * s)));
            }
        }
        out
    }

    pub fn mul(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        let mut out = SkewPoly::zero();
        for (alpha, a) in f.terms() {
            out.add_assign(&self.term_times_poly(a, alpha, g));
        }
        out
    }

    /// Multiplication with well-formedness checks on both operands.
    pub fn checked_mul(&self, f: &SkewPoly, g: &SkewPoly) -> Result<SkewPoly> {
        self.check_poly(f)?;
        self.check_poly(g)?;
        Ok(self.mul(f, g))
    }

    pub fn add(&self, f: &SkewPoly, g: &SkewPoly) -> SkewPoly {
        f + g
    }

    /// `r f` for a base-ring element `r`.
    pub fn left_scale(&self, r: &RingElem, f: &SkewPoly) -> SkewPoly {
        f.left_scale(r)
    }

    /// `a v` for `a` in A and `v` in A^m.
    pub fn mul_vec(&self, a: &SkewPoly, v: &ModVector) -> ModVector {
        ModVector::from_components(v.components().iter().map(|c| self.mul(a, c)).collect())
    }

    /// `r x^α v`.
    pub fn term_times_vec(&self, r: &RingElem, alpha: &Exponent, v: &ModVector) -> ModVector {
        ModVector::from_components(
            v.components()
                .iter()
                .map(|c| self.term_times_poly(r, alpha, c))
                .collect(),
        )
    }

    /// `Σ a_i f_i`.
    pub fn combine(&self, coeffs: &[SkewPoly], vectors: &[ModVector], rank: usize) -> Result<ModVector> {
        if coeffs.len() != vectors.len() {
            return Err(Error::LengthMismatch {
                expected: vectors.len(),
                found: coeffs.len(),
            });
        }
        let mut acc = ModVector::zero(rank);
        for (a, f) in coeffs.iter().zip(vectors) {
            if f.rank() != rank {
                return Err(Error::RankMismatch {
                    expected: rank,
                    found: f.rank(),
                });
            }
            acc = &acc + &self.mul_vec(a, f);
        }
        Ok(acc)
    }
}

#[cfg(test)]
mod tests {
    use super::super::presets;
    use super::*;
    use crate::ring::{rat, RingSpec};

    fn e(v: &[u32]) -> Exponent {
        Exponent::new(v.to_vec())
    }

    fn h1() -> Algebra {
        Algebra::new(presets::heisenberg(1, rat(2, 1))).unwrap()
    }

    fn o3() -> Algebra {
        Algebra::new(presets::multiplicative_weyl(3, &[rat(2, 1), rat(1, 2), rat(3, 1)]).unwrap()).unwrap()
    }

    fn q(n: i64, d: i64) -> RingElem {
        RingElem::Rational(rat(n, d))
    }

    fn qt(coeffs: &[(i64, i64)]) -> RingElem {
        RingElem::Poly(UniPoly::from_coeffs(coeffs.iter().map(|&(n, d)| rat(n, d)).collect()))
    }

    #[test]
    fn sigma_alpha_examples() {
        let a = o3();
        let x1sq = qt(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(a.sigma_alpha(&e(&[0, 1]), &x1sq), qt(&[(0, 1), (0, 1), (1, 4)]));
        assert_eq!(a.sigma_alpha(&e(&[0, 0]), &x1sq), x1sq);
        let t = qt(&[(0, 1), (1, 1)]);
        assert_eq!(a.sigma_alpha(&e(&[2, 1]), &t), qt(&[(0, 1), (2, 1)]));
    }

    #[test]
    fn constants_commute_over_rationals() {
        let a = h1();
        let p = a.mono_times_ring(&e(&[1, 2, 0]), &q(7, 3));
        assert_eq!(p, SkewPoly::term(e(&[1, 2, 0]), q(7, 3)));
    }

    #[test]
    fn quasi_commutative_variable_swap() {
        let a = o3();
        let x1 = a.spec().base.var().unwrap();
        // x2 * x1 = 2 x1 x2
        assert_eq!(a.mono_times_ring(&e(&[1, 0]), &x1), SkewPoly::term(e(&[1, 0]), qt(&[(0, 1), (2, 1)])));
        // x3 * x2 = 3 x2 x3
        assert_eq!(a.mono_times_mono(&e(&[0, 1]), &e(&[1, 0])), SkewPoly::term(e(&[1, 1]), qt(&[(3, 1)])));
    }

    #[test]
    fn additive_weyl_rank_one() {
        let a = Algebra::new(presets::additive_weyl(&[rat(2, 1)])).unwrap();
        let x = a.spec().base.var().unwrap();
        let mut expected = SkewPoly::term(e(&[1]), qt(&[(0, 1), (2, 1)]));
        expected.add_term(e(&[0]), qt(&[(1, 1)]));
        assert_eq!(a.mono_times_ring(&e(&[1]), &x), expected);
    }

    #[test]
    fn heisenberg_products() {
        let a = h1();
        // (xz)(xy) = x^2yz + xy^2
        let mut expected = SkewPoly::term(e(&[2, 1, 1]), q(1, 1));
        expected.add_term(e(&[1, 2, 0]), q(1, 1));
        assert_eq!(a.mono_times_mono(&e(&[1, 0, 1]), &e(&[1, 1, 0])), expected);
        // z x^2 = 1/4 x^2 z + 5/2 xy: z x = 1/2 xz + y, then
        // z x x = (1/2 xz + y) x = 1/2 x (1/2 xz + y) + 2 xy
        let mut expected = SkewPoly::term(e(&[2, 0, 1]), q(1, 4));
        expected.add_term(e(&[1, 1, 0]), q(5, 2));
        assert_eq!(a.mono_times_mono(&e(&[0, 0, 1]), &e(&[2, 0, 0])), expected);
    }

    #[test]
    fn c_of_examples() {
        let a = h1();
        let (c, _) = a.c_of(&e(&[1, 1, 0]), &e(&[1, 0, 1]));
        assert_eq!(c, q(2, 1));
        let b = o3();
        let (c, tail) = b.c_of(&e(&[0, 1]), &e(&[2, 0]));
        assert_eq!(c, qt(&[(9, 1)]));
        assert!(tail.is_zero());
        let (c, tail) = a.c_of(&e(&[2, 1, 3]), &e(&[0, 0, 0]));
        assert!(c.is_one() && tail.is_zero());
    }

    #[test]
    fn product_with_cancelling_tail() {
        // (xz - 1/2 y)(xy) = x^2yz
        let a = h1();
        let mut f = SkewPoly::term(e(&[1, 0, 1]), q(1, 1));
        f.add_term(e(&[0, 1, 0]), q(-1, 2));
        let g = SkewPoly::term(e(&[1, 1, 0]), q(1, 1));
        assert_eq!(a.mul(&f, &g), SkewPoly::term(e(&[2, 1, 1]), q(1, 1)));
        assert_eq!(a.mul(&f, &a.one()), f);
    }

    #[test]
    fn derivation_rule_on_powers() {
        // In A_1(q): δ(x^2) = σ(x)δ(x) + δ(x)x = qx + x
        let a = Algebra::new(presets::additive_weyl(&[rat(2, 1)])).unwrap();
        let x2 = qt(&[(0, 1), (0, 1), (1, 1)]);
        assert_eq!(a.delta(0, &x2), qt(&[(0, 1), (3, 1)]));
        assert!(a.delta(0, &qt(&[(5, 1)])).is_zero());
    }

    #[test]
    fn mixed_kinds_are_rejected() {
        let a = o3();
        let bad = SkewPoly::term(e(&[1, 0]), RingSpec::Rationals.one());
        assert_eq!(a.checked_mul(&bad, &a.one()), Err(Error::RingMismatch));
    }
}
