//! Syzygy modules of finite families in `A^m` (quasi-commutative bijective
//! algebras).
//!
//! The pipeline follows the classical route:
//!
//! 1. homogeneous syzygies `Z(L_G)` of the leading terms of a Gröbner basis,
//!    one batch per saturated subset;
//! 2. each such column `z` is lifted to a syzygy of `G` by dividing
//!    `Σ z_j g_j` by `G`, giving `Z(G) = Z(L_G) - P`;
//! 3. syzygies of the original family come from `Z(G)` pushed through `H`
//!    together with the columns of `I - Q H` (in coefficient form).

use crate::algebra::Algebra;
use crate::division::division_unchecked;
use crate::error::{Error, Result};
use crate::groebner::{buchberger, GbResult};
use crate::order::{divides, Exponent, ModMonomial, OrderSpec};
use crate::ring::row_syzygies;
use crate::skewpoly::SkewPoly;
use crate::subsets::{saturate as saturate_positions, saturated_sets};
use crate::vector::ModVector;

/// A saturated subset of leading monomials with its lcm and shifts.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SaturatedSubset {
    pub members: Vec<usize>,
    pub lcm: ModMonomial,
    pub betas: Vec<Exponent>,
    pub gammas: Vec<Exponent>,
}

/// A column of coefficients, one entry per vector of the family it acts on.
pub type Column = Vec<SkewPoly>;

/// Every matrix of the syzygy computation. Columns are stored as
/// coefficient lists; see [`GbResult`] for the layout of `H` and `Q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SyzygyMatrices {
    pub gb: GbResult,
    pub z_leading: Vec<Column>,
    /// Quotients of `Σ z_j g_j` by `G`, one per column of `z_leading`.
    pub p: Vec<Column>,
    pub z_basis: Vec<Column>,
    /// Columns of `Z(G)` rewritten over `F` through `H`.
    pub z_from_basis: Vec<Column>,
    /// Columns of `I - Q H` in coefficient form.
    pub z_from_identity: Vec<Column>,
    /// The assembled generators of `Syz(F)`, without zero or repeated columns.
    pub z_inputs: Vec<Column>,
}

/// The saturation of `members` with respect to `lms`, or `None` when the
/// monomials lie in different components.
pub fn saturate(members: &[usize], lms: &[ModMonomial]) -> Option<SaturatedSubset> {
    let wrapped: Vec<Option<ModMonomial>> = lms.iter().cloned().map(Some).collect();
    let (members, lcm) = saturate_positions(members, &wrapped)?;
    Some(subset_shape(members, lcm, lms))
}

fn subset_shape(members: Vec<usize>, lcm: ModMonomial, lms: &[ModMonomial]) -> SaturatedSubset {
    let betas: Vec<Exponent> = members.iter().map(|&j| lms[j].exp.clone()).collect();
    let gammas = members
        .iter()
        .map(|&j| divides(&lms[j], &lcm).expect("saturated members divide the lcm"))
        .collect();
    SaturatedSubset {
        members,
        lcm,
        betas,
        gammas,
    }
}

fn nonzero_lms(alg: &Algebra, basis: &[ModVector], order: &OrderSpec, what: &str) -> Result<Vec<ModMonomial>> {
    alg.require_qc_bijective(what)?;
    let Some(first) = basis.first() else {
        return Ok(Vec::new());
    };
    basis
        .iter()
        .map(|g| {
            alg.check_vector(g, first.rank())?;
            g.lm(order).ok_or_else(|| Error::Contract(format!("{what} needs nonzero vectors")))
        })
        .collect()
}

fn push_unique(cols: &mut Vec<Column>, col: Column) {
    if col.iter().any(|c| !c.is_zero()) && !cols.contains(&col) {
        cols.push(col);
    }
}

/// Homogeneous generators of the syzygies of the leading terms of `basis`.
pub fn syz_leading(alg: &Algebra, basis: &[ModVector], order: &OrderSpec) -> Result<Vec<Column>> {
    let lms = nonzero_lms(alg, basis, order, "syzygy computation")?;
    let wrapped: Vec<Option<ModMonomial>> = lms.iter().cloned().map(Some).collect();
    let mut cols = Vec::new();
    for (members, lcm) in saturated_sets(&wrapped) {
        let shape = subset_shape(members, lcm, &lms);
        let row: Vec<_> = shape
            .members
            .iter()
            .zip(&shape.gammas)
            .map(|(&j, gamma)| {
                let lc = basis[j].leading(order).expect("nonzero").coeff;
                let (c, _) = alg.c_of(gamma, &lms[j].exp);
                &alg.sigma_alpha(gamma, &lc) * &c
            })
            .collect();
        for b in row_syzygies(&row)? {
            let mut col = vec![SkewPoly::zero(); basis.len()];
            for ((&j, r), gamma) in shape.members.iter().zip(&b).zip(&shape.gammas) {
                col[j] = SkewPoly::term(gamma.clone(), r.clone());
            }
            push_unique(&mut cols, col);
        }
    }
    Ok(cols)
}

/// Lifts the columns of `z_leading` to syzygies of the Gröbner basis
/// `basis`. Returns `(P, Z(G))`.
pub fn syz_basis(
    alg: &Algebra,
    basis: &[ModVector],
    z_leading: &[Column],
    order: &OrderSpec,
) -> Result<(Vec<Column>, Vec<Column>)> {
    nonzero_lms(alg, basis, order, "syzygy computation")?;
    let Some(first) = basis.first() else {
        return Ok((Vec::new(), Vec::new()));
    };
    let rank = first.rank();
    let mut p = Vec::new();
    let mut z = Vec::new();
    for col in z_leading {
        let combo = alg.combine(col, basis, rank)?;
        let r = division_unchecked(alg, &combo, basis, order);
        if !r.remainder.is_zero() {
            return Err(Error::Internal("a leading syzygy does not lift: the basis is not Gröbner".into()));
        }
        let lifted: Column = col.iter().zip(&r.quotients).map(|(a, b)| a - b).collect();
        p.push(r.quotients);
        push_unique(&mut z, lifted);
    }
    Ok((p, z))
}

/// Generators of `Syz(F)` together with every intermediate matrix.
pub fn syz_module(alg: &Algebra, inputs: &[ModVector], order: &OrderSpec) -> Result<SyzygyMatrices> {
    let gb = buchberger(alg, inputs, order)?;
    let z_leading = syz_leading(alg, &gb.basis, order)?;
    let (p, z_basis) = syz_basis(alg, &gb.basis, &z_leading, order)?;
    let s = inputs.len();

    let z_from_basis: Vec<Column> = z_basis.iter().map(|z| gb.to_input_coords(alg, z)).collect();
    let z_from_identity: Vec<Column> = gb
        .q_cols
        .iter()
        .enumerate()
        .map(|(i, q)| {
            let qh = gb.to_input_coords(alg, q);
            (0..s)
                .map(|j| {
                    let unit = if i == j { alg.one() } else { SkewPoly::zero() };
                    &unit - &qh[j]
                })
                .collect()
        })
        .collect();

    let mut z_inputs = Vec::new();
    for col in z_from_basis.iter().chain(&z_from_identity) {
        push_unique(&mut z_inputs, col.clone());
    }
    Ok(SyzygyMatrices {
        gb,
        z_leading,
        p,
        z_basis,
        z_from_basis,
        z_from_identity,
        z_inputs,
    })
}

/// `Σ a_i f_i`.
pub fn apply_presentation(alg: &Algebra, inputs: &[ModVector], a: &[SkewPoly]) -> Result<ModVector> {
    let rank = inputs
        .first()
        .map(ModVector::rank)
        .ok_or_else(|| Error::Contract("the presentation needs at least one column".into()))?;
    alg.combine(a, inputs, rank)
}

/// The leading terms `lt(g_j)` as vectors.
pub fn leading_terms(basis: &[ModVector], order: &OrderSpec) -> Vec<ModVector> {
    basis
        .iter()
        .map(|g| {
            let mut v = ModVector::zero(g.rank());
            if let Some(l) = g.leading(order) {
                v.add_term(l.monomial, l.coeff);
            }
            v
        })
        .collect()
}

impl SyzygyMatrices {
    pub fn is_free(&self) -> bool {
        self.z_inputs.is_empty()
    }

    /// Checks every annihilation identity and the Gröbner data.
    pub fn verify(&self, alg: &Algebra, order: &OrderSpec) -> Result<()> {
        self.gb.verify(alg, order)?;
        let rank = self.gb.inputs[0].rank();
        let lt = leading_terms(&self.gb.basis, order);
        let zero = ModVector::zero(rank);
        let checks: [(&[Column], &[ModVector], &str); 5] = [
            (&self.z_leading, &lt, "Z(L_G) does not annihilate L_G"),
            (&self.z_basis, &self.gb.basis, "Z(G) does not annihilate G"),
            (&self.z_from_basis, &self.gb.inputs, "(Z(G)^T H^T)^T does not annihilate F"),
            (&self.z_from_identity, &self.gb.inputs, "(I - Q^T H^T)^T does not annihilate F"),
            (&self.z_inputs, &self.gb.inputs, "Z(F) does not annihilate F"),
        ];
        for (cols, family, msg) in checks {
            for col in cols {
                if alg.combine(col, family, rank)? != zero {
                    return Err(Error::Internal(msg.into()));
                }
            }
        }
        Ok(())
    }
}
