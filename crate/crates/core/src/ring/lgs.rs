//! Ideal membership and row syzygies over the base ring.
//!
//! Both routines are driven by the extended Euclidean algorithm, which makes
//! their output deterministic: gcds are monic, Bezout coefficients are
//! accumulated left to right.

use super::RingElem;
use crate::error::{Error, Result};

/// Extended gcd: returns `(g, u, v)` with `g = u*a + v*b`.
///
/// Over `Q[t]` the gcd is monic; over `Q` it is 1 unless both inputs vanish.
/// `gcd_ext(0, 0) = (0, 0, 0)`.
pub fn gcd_ext(a: &RingElem, b: &RingElem) -> Result<(RingElem, RingElem, RingElem)> {
    if a.kind() != b.kind() {
        return Err(Error::RingMismatch);
    }
    let zero = a.zero_like();
    let one = a.one_like();
    if a.is_zero() && b.is_zero() {
        return Ok((zero.clone(), zero.clone(), zero));
    }
    if let RingElem::Rational(_) = a {
        return Ok(if !a.is_zero() {
            (one, a.inverse().unwrap(), zero)
        } else {
            (one, zero, b.inverse().unwrap())
        });
    }

    let (mut old_r, mut r) = (a.clone(), b.clone());
    let (mut old_s, mut s) = (one.clone(), zero.clone());
    let (mut old_t, mut t) = (zero, one);
    while !r.is_zero() {
        let (q, rem) = old_r.euclid_div_rem(&r);
        old_r = std::mem::replace(&mut r, rem);
        let next_s = &old_s - &(&q * &s);
        old_s = std::mem::replace(&mut s, next_s);
        let next_t = &old_t - &(&q * &t);
        old_t = std::mem::replace(&mut t, next_t);
    }
    let lc = old_r.leading_rational().expect("gcd of nonzero inputs is nonzero");
    let inv = lc.recip();
    Ok((old_r.scale(&inv), old_s.scale(&inv), old_t.scale(&inv)))
}

fn check_shared_kind(target: &RingElem, gens: &[RingElem]) -> Result<()> {
    if gens.iter().any(|g| g.kind() != target.kind()) {
        return Err(Error::RingMismatch);
    }
    Ok(())
}

/// Solves `target = sum b_i * gens_i`.
///
/// Over `Q` the first nonzero generator carries the whole solution. Over
/// `Q[t]` Bezout coefficients are accumulated across the generators and then
/// scaled by `target / gcd`. Returns `None` when `target` is not in the ideal.
pub fn ideal_solve(target: &RingElem, gens: &[RingElem]) -> Result<Option<Vec<RingElem>>> {
    if gens.is_empty() {
        return Err(Error::Contract("ideal_solve needs at least one generator".into()));
    }
    check_shared_kind(target, gens)?;
    let zero = target.zero_like();
    if target.is_zero() {
        return Ok(Some(vec![zero; gens.len()]));
    }
    if let RingElem::Rational(_) = target {
        let Some(pos) = gens.iter().position(|g| !g.is_zero()) else {
            return Ok(None);
        };
        let mut sol = vec![zero; gens.len()];
        sol[pos] = target.exact_div(&gens[pos]).expect("field division");
        return Ok(Some(sol));
    }

    let mut g = zero.clone();
    let mut coeffs: Vec<RingElem> = Vec::with_capacity(gens.len());
    for gen in gens {
        let (next, u, v) = gcd_ext(&g, gen)?;
        for c in coeffs.iter_mut() {
            *c = &u * c;
        }
        coeffs.push(v);
        g = next;
    }
    if g.is_zero() {
        return Ok(None);
    }
    let Some(factor) = target.exact_div(&g) else {
        return Ok(None);
    };
    Ok(Some(coeffs.iter().map(|c| &factor * c).collect()))
}

/// Generators of `{ b : sum b_j * row_j = 0 }`.
///
/// The nonzero entries are reduced column by column with unimodular 2x2
/// transforms until only the first one is left holding their gcd; the other
/// columns of the transform span the kernel. Each zero entry contributes its
/// unit vector. Output is ordered by column position.
pub fn row_syzygies(row: &[RingElem]) -> Result<Vec<Vec<RingElem>>> {
    let Some(first) = row.first() else {
        return Ok(Vec::new());
    };
    check_shared_kind(first, row)?;
    let m = row.len();
    let zero = first.zero_like();
    let one = first.one_like();
    let unit = |k: usize| -> Vec<RingElem> {
        let mut v = vec![zero.clone(); m];
        v[k] = one.clone();
        v
    };

    // columns[k] is column k of the transform U; row * U keeps the
    // running gcd at the pivot and zeros at the processed positions.
    let mut columns: Vec<Vec<RingElem>> = (0..m).map(unit).collect();
    let mut pivot: Option<(usize, RingElem)> = None;
    for (k, entry) in row.iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let Some((p, cur)) = pivot.take() else {
            pivot = Some((k, entry.clone()));
            continue;
        };
        let (g, u, v) = gcd_ext(&cur, entry)?;
        let a_over_g = cur.exact_div(&g).expect("gcd divides");
        let b_over_g = entry.exact_div(&g).expect("gcd divides");
        let new_pivot: Vec<RingElem> = columns[p]
            .iter()
            .zip(&columns[k])
            .map(|(cp, ck)| &(&u * cp) + &(&v * ck))
            .collect();
        let new_k: Vec<RingElem> = columns[p]
            .iter()
            .zip(&columns[k])
            .map(|(cp, ck)| &(&b_over_g * cp) - &(&a_over_g * ck))
            .collect();
        columns[p] = new_pivot;
        columns[k] = new_k;
        pivot = Some((p, g));
    }

    let pivot_pos = pivot.map(|(p, _)| p);
    let mut out = Vec::new();
    for (k, entry) in row.iter().enumerate() {
        if entry.is_zero() {
            out.push(unit(k));
        } else if Some(k) != pivot_pos {
            out.push(std::mem::take(&mut columns[k]));
        }
    }
    Ok(out)
}
