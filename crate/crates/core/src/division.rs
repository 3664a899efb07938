//! One-step reduction and the division algorithm on `A^m`.
//!
//! A vector `f` reduces by `F = {f_1, ..., f_t}` when the leading
//! coefficient of `f` is a left combination of the numbers
//! `d_j = σ^{α_j}(lc(f_j)) c_{α_j, β_j}` over the divisors `f_j` whose leading
//! monomials divide `lm(f)`. The combination is chosen deterministically:
//! a single divisor is tried first, largest leading monomial first; otherwise
//! the ideal-membership solver picks one.

use std::cmp::Ordering;

use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::order::{divides, Exponent, ModMonomial, OrderSpec};
use crate::ring::{ideal_solve, RingElem};
use crate::skewpoly::SkewPoly;
use crate::vector::ModVector;

/// The data of one reduction `h = f - Σ r_j x^{α_j} f_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionStep {
    /// Positions in `F` of the divisors whose leading monomial divides `lm(f)`.
    pub divisors: Vec<usize>,
    pub coeffs: Vec<RingElem>,
    pub shifts: Vec<Exponent>,
    /// `c_{α_j, β_j}` for each divisor.
    pub c: Vec<RingElem>,
}

impl ReductionStep {
    /// `f - Σ r_j x^{α_j} f_j`.
    pub fn apply(&self, alg: &Algebra, f: &ModVector, divisors: &[ModVector]) -> ModVector {
        let mut h = f.clone();
        for ((&j, r), alpha) in self.divisors.iter().zip(&self.coeffs).zip(&self.shifts) {
            if !r.is_zero() {
                h = &h - &alg.term_times_vec(r, alpha, &divisors[j]);
            }
        }
        h
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DivisionResult {
    pub quotients: Vec<SkewPoly>,
    pub remainder: ModVector,
    pub steps: Vec<ReductionStep>,
}

fn check_inputs(alg: &Algebra, f: &ModVector, divisors: &[ModVector]) -> Result<()> {
    let rank = f.rank();
    alg.check_vector(f, rank)?;
    for g in divisors {
        alg.check_vector(g, rank)?;
        if g.is_zero() {
            return Err(Error::Contract("divisors must be nonzero".into()));
        }
    }
    Ok(())
}

/// A divisor whose leading monomial divides `lm(f)`.
struct Candidate {
    position: usize,
    alpha: Exponent,
    /// `σ^α(lc(f_j)) c_{α, β_j}`.
    d: RingElem,
    c: RingElem,
    lm: ModMonomial,
}

fn candidates(alg: &Algebra, lm: &ModMonomial, divisors: &[ModVector], order: &OrderSpec) -> Vec<Candidate> {
    divisors
        .iter()
        .enumerate()
        .filter_map(|(position, g)| {
            let lead = g.leading(order)?;
            let alpha = divides(&lead.monomial, lm)?;
            let (c, _) = alg.c_of(&alpha, &lead.monomial.exp);
            let d = &alg.sigma_alpha(&alpha, &lead.coeff) * &c;
            Some(Candidate {
                position,
                alpha,
                d,
                c,
                lm: lead.monomial,
            })
        })
        .collect()
}

pub(crate) fn reduce_step_unchecked(
    alg: &Algebra,
    f: &ModVector,
    divisors: &[ModVector],
    order: &OrderSpec,
) -> Option<(ModVector, ReductionStep)> {
    let lead = f.leading(order)?;
    let cands = candidates(alg, &lead.monomial, divisors, order);
    if cands.is_empty() {
        return None;
    }

    let mut preference: Vec<usize> = (0..cands.len()).collect();
    preference.sort_by(|&a, &b| {
        order
            .cmp_modmon(&cands[b].lm, &cands[a].lm)
            .then_with(|| cands[a].position.cmp(&cands[b].position))
    });
    let zero = lead.coeff.zero_like();
    let single = preference.iter().find_map(|&k| {
        let q = lead.coeff.exact_div(&cands[k].d)?;
        let mut coeffs = vec![zero.clone(); cands.len()];
        coeffs[k] = q;
        Some(coeffs)
    });
    let coeffs = match single {
        Some(c) => c,
        None => {
            let gens: Vec<RingElem> = cands.iter().map(|c| c.d.clone()).collect();
            ideal_solve(&lead.coeff, &gens).ok()??
        }
    };

    let step = ReductionStep {
        divisors: cands.iter().map(|c| c.position).collect(),
        coeffs,
        shifts: cands.iter().map(|c| c.alpha.clone()).collect(),
        c: cands.iter().map(|c| c.c.clone()).collect(),
    };
    let h = step.apply(alg, f, divisors);
    debug_assert!(order.cmp_opt(h.lm(order).as_ref(), Some(&lead.monomial)) == Ordering::Less);
    Some((h, step))
}

/// One reduction step of `f` by `divisors`; `None` when `f` is reduced.
pub fn reduce_step(
    alg: &Algebra,
    f: &ModVector,
    divisors: &[ModVector],
    order: &OrderSpec,
) -> Result<Option<(ModVector, ReductionStep)>> {
    check_inputs(alg, f, divisors)?;
    Ok(reduce_step_unchecked(alg, f, divisors, order))
}

pub(crate) fn division_unchecked(
    alg: &Algebra,
    f: &ModVector,
    divisors: &[ModVector],
    order: &OrderSpec,
) -> DivisionResult {
    let mut quotients = vec![SkewPoly::zero(); divisors.len()];
    let mut steps = Vec::new();
    let mut h = f.clone();
    while let Some((next, step)) = reduce_step_unchecked(alg, &h, divisors, order) {
        for ((&j, r), alpha) in step.divisors.iter().zip(&step.coeffs).zip(&step.shifts) {
            quotients[j].add_term(alpha.clone(), r.clone());
        }
        steps.push(step);
        h = next;
    }
    DivisionResult {
        quotients,
        remainder: h,
        steps,
    }
}

/// Reduces `f` until it is reduced with respect to `divisors`, returning the
/// remainder and the quotients with `f = Σ q_i f_i + h`.
pub fn reduce_full(
    alg: &Algebra,
    f: &ModVector,
    divisors: &[ModVector],
    order: &OrderSpec,
) -> Result<(ModVector, Vec<SkewPoly>)> {
    let r = division(alg, f, divisors, order)?;
    Ok((r.remainder, r.quotients))
}

/// The division algorithm: quotients, remainder and the recorded steps.
pub fn division(alg: &Algebra, f: &ModVector, divisors: &[ModVector], order: &OrderSpec) -> Result<DivisionResult> {
    check_inputs(alg, f, divisors)?;
    Ok(division_unchecked(alg, f, divisors, order))
}

/// Whether no reduction step applies to `h`.
pub fn is_reduced(alg: &Algebra, h: &ModVector, divisors: &[ModVector], order: &OrderSpec) -> bool {
    reduce_step_unchecked(alg, h, divisors, order).is_none()
}

impl DivisionResult {
    /// Checks `f = Σ q_i f_i + h`, that `h` is reduced, and that
    /// `lm(f) = max{lm(lm(q_i) lm(f_i)), lm(h)}`.
    pub fn verify(&self, alg: &Algebra, f: &ModVector, divisors: &[ModVector], order: &OrderSpec) -> Result<()> {
        let combo = alg.combine(&self.quotients, divisors, f.rank())?;
        if &combo + &self.remainder != *f {
            return Err(Error::Internal("division identity f = sum q_i f_i + h fails".into()));
        }
        if !is_reduced(alg, &self.remainder, divisors, order) {
            return Err(Error::Internal("division remainder is not reduced".into()));
        }
        let mut top = self.remainder.lm(order);
        for (q, g) in self.quotients.iter().zip(divisors) {
            let (Some((qe, _)), Some(gm)) = (q.leading(order), g.lm(order)) else {
                continue;
            };
            let m = ModMonomial::new(qe.add(&gm.exp), gm.index);
            if order.cmp_opt(Some(&m), top.as_ref()) == Ordering::Greater {
                top = Some(m);
            }
        }
        if top != f.lm(order) {
            return Err(Error::Internal("division leading-monomial formula fails".into()));
        }
        Ok(())
    }
}
