//! Elements of the free module `A^m`.

use std::ops::{Add, Neg, Sub};

use crate::order::{ModMonomial, OrderSpec};
use crate::ring::RingElem;
use crate::skewpoly::SkewPoly;

/// A vector `Σ_k f_k e_k` stored componentwise. Indices are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModVector {
    components: Vec<SkewPoly>,
}

/// Leading data of a nonzero vector.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Leading {
    pub monomial: ModMonomial,
    pub coeff: RingElem,
}

impl ModVector {
    pub fn zero(rank: usize) -> Self {
        ModVector {
            components: vec![SkewPoly::zero(); rank],
        }
    }

    pub fn from_components(components: Vec<SkewPoly>) -> Self {
        ModVector { components }
    }

    /// The vector with `f` in position `index` and zeros elsewhere.
    pub fn unit_times(rank: usize, index: usize, f: SkewPoly) -> Self {
        let mut v = ModVector::zero(rank);
        v.components[index] = f;
        v
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[SkewPoly] {
        &self.components
    }

    pub fn component(&self, k: usize) -> &SkewPoly {
        &self.components[k]
    }

    pub fn into_components(self) -> Vec<SkewPoly> {
        self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(SkewPoly::is_zero)
    }

    pub fn num_terms(&self) -> usize {
        self.components.iter().map(SkewPoly::num_terms).sum()
    }

    /// Iterates over `(monomial, coefficient)` pairs in storage order.
    pub fn terms(&self) -> impl Iterator<Item = (ModMonomial, &RingElem)> + '_ {
        self.components
            .iter()
            .enumerate()
            .flat_map(|(k, f)| f.terms().map(move |(e, c)| (ModMonomial::new(e.clone(), k), c)))
    }

    pub fn coeff(&self, m: &ModMonomial) -> Option<&RingElem> {
        self.components.get(m.index)?.coeff(&m.exp)
    }

    pub fn add_term(&mut self, m: ModMonomial, c: RingElem) {
        self.components[m.index].add_term(m.exp, c);
    }

    /// Terms in decreasing order.
    pub fn sorted_terms(&self, order: &OrderSpec) -> Vec<(ModMonomial, &RingElem)> {
        let mut v: Vec<_> = self.terms().collect();
        v.sort_by(|a, b| order.cmp_modmon(&b.0, &a.0));
        v
    }

    /// The leading monomial and coefficient; `None` is the zero marker.
    pub fn leading(&self, order: &OrderSpec) -> Option<Leading> {
        self.terms()
            .max_by(|a, b| order.cmp_modmon(&a.0, &b.0))
            .map(|(monomial, c)| Leading {
                monomial,
                coeff: c.clone(),
            })
    }

    pub fn lm(&self, order: &OrderSpec) -> Option<ModMonomial> {
        self.leading(order).map(|l| l.monomial)
    }

    pub fn left_scale(&self, r: &RingElem) -> ModVector {
        ModVector::from_components(self.components.iter().map(|f| f.left_scale(r)).collect())
    }

    /// Total degree of the highest term; `None` for zero.
    pub fn degree(&self) -> Option<u32> {
        self.components.iter().filter_map(SkewPoly::degree).max()
    }
}

impl Add for &ModVector {
    type Output = ModVector;
    fn add(self, rhs: &ModVector) -> ModVector {
        assert_eq!(self.rank(), rhs.rank(), "module ranks differ");
        ModVector::from_components(self.components.iter().zip(&rhs.components).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &ModVector {
    type Output = ModVector;
    fn sub(self, rhs: &ModVector) -> ModVector {
        assert_eq!(self.rank(), rhs.rank(), "module ranks differ");
        ModVector::from_components(self.components.iter().zip(&rhs.components).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &ModVector {
    type Output = ModVector;
    fn neg(self) -> ModVector {
        ModVector::from_components(self.components.iter().map(|a| -a).collect())
    }
}
