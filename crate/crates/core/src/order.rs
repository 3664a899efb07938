//! Exponents, module monomials and the monomial orders on them.
//!
//! The base order is deglex with a configurable variable precedence. On the
//! free module it is extended either term-over-position (`Top`, ties broken
//! with `e_m > ... > e_1`) or `TopRev` (`e_1 > ... > e_m`). The basis
//! direction flips the tie-break.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Exponent vector of a standard monomial `x_1^a_1 ... x_n^a_n`.
///
/// The derived `Ord` is plain lexicographic on the vector and is only used for
/// storage; monomial comparisons go through [`OrderSpec`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Exponent(Vec<u32>);

impl Exponent {
    pub fn zero(n: usize) -> Self {
        Exponent(vec![0; n])
    }

    /// The exponent of the single variable `x_i` (0-based).
    pub fn unit(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Exponent(e)
    }

    pub fn new(e: Vec<u32>) -> Self {
        Exponent(e)
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn get(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn add(&self, other: &Exponent) -> Exponent {
        debug_assert_eq!(self.len(), other.len());
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self - other` when `other <= self` componentwise.
    pub fn checked_sub(&self, other: &Exponent) -> Option<Exponent> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(Exponent)
    }

    pub fn divides(&self, other: &Exponent) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Exponent) -> Exponent {
        Exponent(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub(crate) fn with(&self, i: usize, value: u32) -> Exponent {
        let mut e = self.0.clone();
        e[i] = value;
        Exponent(e)
    }
}

impl From<Vec<u32>> for Exponent {
    fn from(v: Vec<u32>) -> Self {
        Exponent(v)
    }
}

/// A monomial `x^exp * e_index` of the free module. `index` is 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ModMonomial {
    pub exp: Exponent,
    pub index: usize,
}

impl ModMonomial {
    pub fn new(exp: Exponent, index: usize) -> Self {
        ModMonomial { exp, index }
    }

    pub fn degree(&self) -> u32 {
        self.exp.degree()
    }
}

/// Returns `exp(b) - exp(a)` when `a` divides `b` (same index, componentwise `<=`).
pub fn divides(a: &ModMonomial, b: &ModMonomial) -> Option<Exponent> {
    if a.index != b.index {
        return None;
    }
    b.exp.checked_sub(&a.exp)
}

/// Least common multiple; `None` plays the role of the zero vector when the
/// indices differ.
pub fn lcm_mod(a: &ModMonomial, b: &ModMonomial) -> Option<ModMonomial> {
    (a.index == b.index).then(|| ModMonomial::new(a.exp.lcm(&b.exp), a.index))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleOrder {
    Top,
    TopRev,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BasisDirection {
    /// `e1..em`
    Natural,
    /// `em..e1`
    Reversed,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderSpec {
    precedence: Vec<usize>,
    pub module: ModuleOrder,
    pub direction: BasisDirection,
}

impl OrderSpec {
    /// Deglex with `x_1 > x_2 > ... > x_n`, TOPREV, natural basis direction.
    pub fn deglex(n: usize) -> Self {
        OrderSpec {
            precedence: (0..n).collect(),
            module: ModuleOrder::TopRev,
            direction: BasisDirection::Natural,
        }
    }

    /// `precedence[0]` is the largest variable. Must be a permutation of `0..n`.
    pub fn with_precedence(precedence: Vec<usize>) -> Result<Self> {
        let n = precedence.len();
        let mut seen = vec![false; n];
        for &v in &precedence {
            if v >= n || std::mem::replace(&mut seen[v], true) {
                return Err(Error::Contract(format!("{precedence:?} is not a permutation of the variables")));
            }
        }
        Ok(OrderSpec {
            precedence,
            ..OrderSpec::deglex(0)
        })
    }

    pub fn module_order(mut self, module: ModuleOrder) -> Self {
        self.module = module;
        self
    }

    pub fn basis_direction(mut self, direction: BasisDirection) -> Self {
        self.direction = direction;
        self
    }

    pub fn precedence(&self) -> &[usize] {
        &self.precedence
    }

    pub fn num_vars(&self) -> usize {
        self.precedence.len()
    }

    pub fn cmp_mon(&self, a: &Exponent, b: &Exponent) -> Ordering {
        a.degree().cmp(&b.degree()).then_with(|| {
            self.precedence
                .iter()
                .map(|&v| a.get(v).cmp(&b.get(v)))
                .find(|o| o.is_ne())
                .unwrap_or(Ordering::Equal)
        })
    }

    pub fn cmp_modmon(&self, a: &ModMonomial, b: &ModMonomial) -> Ordering {
        self.cmp_mon(&a.exp, &b.exp).then_with(|| {
            let by_index = a.index.cmp(&b.index);
            let by_index = match self.direction {
                BasisDirection::Natural => by_index,
                BasisDirection::Reversed => by_index.reverse(),
            };
            match self.module {
                ModuleOrder::Top => by_index,
                ModuleOrder::TopRev => by_index.reverse(),
            }
        })
    }

    /// Comparison on `Mon(A^m) ∪ {0}` where `None` is the zero vector, below everything.
    pub fn cmp_opt(&self, a: Option<&ModMonomial>, b: Option<&ModMonomial>) -> Ordering {
        match (a, b) {
            (None, None) => Ordering::Equal,
            (None, Some(_)) => Ordering::Less,
            (Some(_), None) => Ordering::Greater,
            (Some(a), Some(b)) => self.cmp_modmon(a, b),
        }
    }
}

impl fmt::Display for ModuleOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ModuleOrder::Top => "top",
            ModuleOrder::TopRev => "toprev",
        })
    }
}
