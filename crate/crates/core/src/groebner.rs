//! Gröbner bases of submodules of `A^m` for quasi-commutative bijective
//! algebras: completion, verification and membership.
//!
//! For a subset `S` of the basis whose leading monomials share a component,
//! let `X_S` be their lcm and `γ_i = exp(X_S) - exp(lm(g_i))`. The syzygies
//! `b` of the row `σ^{γ_i}(lc(g_i)) c_{γ_i, β_i}` over the base ring give the
//! S-combinations `Σ b_i x^{γ_i} g_i`, whose leading terms cancel. A set is a
//! Gröbner basis exactly when all of them reduce to zero.

use std::collections::HashSet;

use crate::algebra::Algebra;
use crate::division::division_unchecked;
use crate::error::{Error, Result};
use crate::order::{divides, Exponent, ModMonomial, OrderSpec};
use crate::ring::{row_syzygies, RingElem};
use crate::skewpoly::SkewPoly;
use crate::subsets::{saturate, saturated_sets};
use crate::vector::ModVector;

/// The data attached to a subset `S` of a basis: members, lcm, shifts and the
/// generators of the coefficient syzygies.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetData {
    /// Positions of the members in the basis they were taken from.
    pub members: Vec<usize>,
    pub lcm: ModMonomial,
    pub betas: Vec<Exponent>,
    pub gammas: Vec<Exponent>,
    /// `σ^{γ_i}(lc(g_i)) c_{γ_i, β_i}` for each member.
    pub row: Vec<RingElem>,
    /// Generators of the syzygies of `row`.
    pub syzygies: Vec<Vec<RingElem>>,
}

impl SubsetData {
    /// `Σ b_i x^{γ_i}` as coefficients on the members.
    pub fn combination(&self, b: &[RingElem]) -> Vec<SkewPoly> {
        b.iter()
            .zip(&self.gammas)
            .map(|(r, g)| SkewPoly::term(g.clone(), r.clone()))
            .collect()
    }

    /// The S-combination `Σ b_i x^{γ_i} g_i`.
    pub fn s_combination(&self, alg: &Algebra, basis: &[ModVector], b: &[RingElem]) -> ModVector {
        let rank = basis[self.members[0]].rank();
        let mut acc = ModVector::zero(rank);
        for ((&m, r), g) in self.members.iter().zip(b).zip(&self.gammas) {
            if !r.is_zero() {
                acc = &acc + &alg.term_times_vec(r, g, &basis[m]);
            }
        }
        acc
    }
}

/// Transformation data of a completed basis.
///
/// `h_cols[k]` expresses `g_k = Σ_i h_cols[k][i] f_i` and `q_cols[i]`
/// expresses `f_i = Σ_k q_cols[i][k] g_k`; they are the columns of the
/// matrices `H` (s × t) and `Q` (t × s).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GbResult {
    pub inputs: Vec<ModVector>,
    pub basis: Vec<ModVector>,
    pub h_cols: Vec<Vec<SkewPoly>>,
    pub q_cols: Vec<Vec<SkewPoly>>,
}

fn subset_data(
    alg: &Algebra,
    basis: &[ModVector],
    members: Vec<usize>,
    lcm: ModMonomial,
    order: &OrderSpec,
) -> Result<SubsetData> {
    let mut betas = Vec::new();
    let mut gammas = Vec::new();
    let mut row = Vec::new();
    for &m in &members {
        let lead = basis[m]
            .leading(order)
            .ok_or_else(|| Error::Contract("basis elements must be nonzero".into()))?;
        let gamma = divides(&lead.monomial, &lcm).ok_or_else(|| Error::Internal("member does not divide lcm".into()))?;
        let (c, _) = alg.c_of(&gamma, &lead.monomial.exp);
        row.push(&alg.sigma_alpha(&gamma, &lead.coeff) * &c);
        betas.push(lead.monomial.exp);
        gammas.push(gamma);
    }
    let syzygies = row_syzygies(&row)?;
    Ok(SubsetData {
        members,
        lcm,
        betas,
        gammas,
        row,
        syzygies,
    })
}

fn check_family(alg: &Algebra, vectors: &[ModVector], what: &str) -> Result<usize> {
    alg.require_qc_bijective(what)?;
    let first = vectors
        .first()
        .ok_or_else(|| Error::Contract(format!("{what} needs at least one vector")))?;
    let rank = first.rank();
    for v in vectors {
        alg.check_vector(v, rank)?;
        if v.is_zero() {
            return Err(Error::Contract(format!("{what} needs nonzero vectors")));
        }
    }
    Ok(rank)
}

/// The subset data of the whole family `S`, or `None` when the leading
/// monomials lie in different components.
pub fn compute_bf(alg: &Algebra, s: &[ModVector], order: &OrderSpec) -> Result<Option<SubsetData>> {
    check_family(alg, s, "computing B_F")?;
    let lms: Vec<_> = s.iter().map(|v| v.lm(order)).collect();
    let members: Vec<usize> = (0..s.len()).collect();
    let Some((_, lcm)) = saturate(&members, &lms) else {
        return Ok(None);
    };
    subset_data(alg, s, members, lcm, order).map(Some)
}

/// Subset data for every saturated subset with at least two members that
/// `skip` does not exclude.
fn saturated_subsets(
    alg: &Algebra,
    basis: &[ModVector],
    order: &OrderSpec,
    skip: impl Fn(&[usize]) -> bool,
) -> Result<Vec<SubsetData>> {
    let lms: Vec<_> = basis.iter().map(|v| v.lm(order)).collect();
    saturated_sets(&lms)
        .into_iter()
        .filter(|(j, _)| j.len() >= 2 && !skip(j))
        .map(|(j, x)| subset_data(alg, basis, j, x, order))
        .collect()
}

/// `Σ_k a_k v_k` for coefficient columns `v_k` (all of length `len`).
fn combine_columns(alg: &Algebra, coeffs: &[(SkewPoly, &Vec<SkewPoly>)], len: usize) -> Vec<SkewPoly> {
    let mut out = vec![SkewPoly::zero(); len];
    for (a, col) in coeffs {
        if a.is_zero() {
            continue;
        }
        for (o, c) in out.iter_mut().zip(col.iter()) {
            o.add_assign(&alg.mul(a, c));
        }
    }
    out
}

/// Completes `inputs` to a Gröbner basis, tracking `H` and `Q`.
///
/// Saturated subsets of the growing basis are processed in a fixed order;
/// each nonzero remainder of an S-combination is appended as it is found.
pub fn buchberger(alg: &Algebra, inputs: &[ModVector], order: &OrderSpec) -> Result<GbResult> {
    let rank = check_family(alg, inputs, "Gröbner completion")?;
    let s = inputs.len();
    let mut basis: Vec<ModVector> = inputs.to_vec();
    let mut h_cols: Vec<Vec<SkewPoly>> = (0..s)
        .map(|i| (0..s).map(|k| if i == k { alg.one() } else { SkewPoly::zero() }).collect())
        .collect();
    let mut processed: HashSet<Vec<usize>> = HashSet::new();

    loop {
        let pending = saturated_subsets(alg, &basis, order, |j| processed.contains(j))?;
        if pending.is_empty() {
            break;
        }
        for data in pending {
            processed.insert(data.members.clone());
            for b in &data.syzygies {
                let sc = data.s_combination(alg, &basis, b);
                if sc.is_zero() {
                    continue;
                }
                let reduced = division_unchecked(alg, &sc, &basis, order);
                if reduced.remainder.is_zero() {
                    continue;
                }
                let mut terms: Vec<(SkewPoly, &Vec<SkewPoly>)> = data
                    .combination(b)
                    .into_iter()
                    .zip(&data.members)
                    .map(|(a, &m)| (a, &h_cols[m]))
                    .collect();
                terms.extend(reduced.quotients.iter().zip(&h_cols).map(|(q, col)| (-q, col)));
                let col = combine_columns(alg, &terms, s);
                basis.push(reduced.remainder);
                h_cols.push(col);
            }
        }
    }
    debug_assert!(basis.iter().all(|g| g.rank() == rank));

    let q_cols = inputs
        .iter()
        .map(|f| {
            let r = division_unchecked(alg, f, &basis, order);
            if r.remainder.is_zero() {
                Ok(r.quotients)
            } else {
                Err(Error::Internal("an input does not reduce to zero by the completed basis".into()))
            }
        })
        .collect::<Result<Vec<_>>>()?;

    Ok(GbResult {
        inputs: inputs.to_vec(),
        basis,
        h_cols,
        q_cols,
    })
}

/// Whether every S-combination of every saturated subset of `basis` reduces
/// to zero by `basis`.
pub fn is_groebner(alg: &Algebra, basis: &[ModVector], order: &OrderSpec) -> Result<bool> {
    check_family(alg, basis, "Gröbner verification")?;
    for data in saturated_subsets(alg, basis, order, |_| false)? {
        for b in &data.syzygies {
            let sc = data.s_combination(alg, basis, b);
            if !division_unchecked(alg, &sc, basis, order).remainder.is_zero() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// The coefficients of `f` over a Gröbner basis, or `None` when `f` is not
/// in the submodule it generates.
pub fn member(alg: &Algebra, f: &ModVector, basis: &[ModVector], order: &OrderSpec) -> Result<Option<Vec<SkewPoly>>> {
    let r = crate::division::division(alg, f, basis, order)?;
    Ok(r.remainder.is_zero().then_some(r.quotients))
}

impl GbResult {
    /// Rewrites coefficients over the basis as coefficients over the inputs.
    pub fn to_input_coords(&self, alg: &Algebra, coeffs: &[SkewPoly]) -> Vec<SkewPoly> {
        let terms: Vec<(SkewPoly, &Vec<SkewPoly>)> = coeffs.iter().cloned().zip(&self.h_cols).collect();
        combine_columns(alg, &terms, self.inputs.len())
    }

    /// Membership of `f`, with the combination expressed over the inputs.
    pub fn member_of_inputs(&self, alg: &Algebra, f: &ModVector, order: &OrderSpec) -> Result<Option<Vec<SkewPoly>>> {
        Ok(member(alg, f, &self.basis, order)?.map(|q| self.to_input_coords(alg, &q)))
    }

    /// Rows of `H` (s × t).
    pub fn h_matrix(&self) -> Vec<Vec<SkewPoly>> {
        transpose(&self.h_cols, self.inputs.len())
    }

    /// Rows of `Q` (t × s).
    pub fn q_matrix(&self) -> Vec<Vec<SkewPoly>> {
        transpose(&self.q_cols, self.basis.len())
    }

    /// Checks `G^T = H^T F^T`, `F^T = Q^T G^T` and the Gröbner property.
    pub fn verify(&self, alg: &Algebra, order: &OrderSpec) -> Result<()> {
        let rank = self.inputs[0].rank();
        for (g, col) in self.basis.iter().zip(&self.h_cols) {
            if alg.combine(col, &self.inputs, rank)? != *g {
                return Err(Error::Internal("G^T = H^T F^T fails".into()));
            }
        }
        for (f, col) in self.inputs.iter().zip(&self.q_cols) {
            if alg.combine(col, &self.basis, rank)? != *f {
                return Err(Error::Internal("F^T = Q^T G^T fails".into()));
            }
        }
        if !is_groebner(alg, &self.basis, order)? {
            return Err(Error::Internal("the completed basis fails the Gröbner criterion".into()));
        }
        Ok(())
    }
}

pub(crate) fn transpose(cols: &[Vec<SkewPoly>], rows: usize) -> Vec<Vec<SkewPoly>> {
    (0..rows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect()
}
