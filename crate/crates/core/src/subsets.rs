//! Saturated subsets of a list of leading monomials.
//!
//! A subset `J` is saturated when every position whose monomial divides the
//! lcm `X_J` already belongs to `J`. Saturations correspond one-to-one with
//! the lcms of subsets, so they are enumerated through the lcm closure of the
//! monomials instead of through all subsets.

use std::collections::BTreeSet;

use crate::order::{divides, lcm_mod, ModMonomial};

/// The saturation of `members`: `(J', X_J)`, or `None` when the monomials
/// live in different components or some member is the zero marker.
pub(crate) fn saturate(members: &[usize], lms: &[Option<ModMonomial>]) -> Option<(Vec<usize>, ModMonomial)> {
    let (&first, rest) = members.split_first()?;
    let mut x = lms.get(first)?.clone()?;
    for &j in rest {
        x = lcm_mod(&x, lms.get(j)?.as_ref()?)?;
    }
    let sat = positions_dividing(&x, lms);
    Some((sat, x))
}

fn positions_dividing(x: &ModMonomial, lms: &[Option<ModMonomial>]) -> Vec<usize> {
    lms.iter()
        .enumerate()
        .filter(|(_, m)| m.as_ref().is_some_and(|m| divides(m, x).is_some()))
        .map(|(k, _)| k)
        .collect()
}

/// All distinct saturated subsets with their lcms, ordered by component index,
/// then by total degree, then by exponent.
pub(crate) fn saturated_sets(lms: &[Option<ModMonomial>]) -> Vec<(Vec<usize>, ModMonomial)> {
    let gens: Vec<&ModMonomial> = lms.iter().flatten().collect();
    let mut closure: BTreeSet<(usize, u32, ModMonomial)> = BTreeSet::new();
    let mut frontier: Vec<ModMonomial> = Vec::new();
    for g in &gens {
        if closure.insert((g.index, g.degree(), (*g).clone())) {
            frontier.push((*g).clone());
        }
    }
    while let Some(x) = frontier.pop() {
        for g in &gens {
            if let Some(l) = lcm_mod(&x, g) {
                if closure.insert((l.index, l.degree(), l.clone())) {
                    frontier.push(l);
                }
            }
        }
    }
    closure
        .into_iter()
        .map(|(_, _, x)| (positions_dividing(&x, lms), x))
        .collect()
}
