#![allow(dead_code)]

use rand::Rng;
use skewgb_core::{
    presets, rat, text, Algebra, Exponent, ModMonomial, ModVector, OrderSpec, Rational, RingElem, RingSpec,
    SkewPoly, UniPoly,
};

pub fn h1() -> Algebra {
    Algebra::new(presets::heisenberg(1, rat(2, 1))).unwrap()
}

pub fn o3() -> Algebra {
    Algebra::new(presets::multiplicative_weyl(3, &[rat(2, 1), rat(1, 2), rat(3, 1)]).unwrap()).unwrap()
}

pub fn a2() -> Algebra {
    Algebra::new(presets::additive_weyl(&[rat(2, 1), rat(3, 1)])).unwrap()
}

pub fn shift() -> Algebra {
    Algebra::new(presets::shift(rat(1, 1))).unwrap()
}

pub fn vector(alg: &Algebra, src: &str, rank: usize) -> ModVector {
    text::parse_vector(alg, src, rank).unwrap()
}

pub fn poly(alg: &Algebra, src: &str) -> SkewPoly {
    text::parse_poly(alg, src).unwrap()
}

pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    let n = loop {
        let n = rng.gen_range(-5i64..=5);
        if n != 0 {
            break n;
        }
    };
    rat(n, rng.gen_range(1i64..=3))
}

/// A nonzero base-ring element; polynomial bases get degree at most `max_deg`.
pub fn coeff<R: Rng>(rng: &mut R, base: &RingSpec, max_deg: usize) -> RingElem {
    match base {
        RingSpec::Rationals => base.from_rational(rational(rng)),
        _ => {
            let deg = rng.gen_range(0..=max_deg);
            let mut cs: Vec<Rational> = (0..deg).map(|_| if rng.gen_bool(0.5) { rational(rng) } else { rat(0, 1) }).collect();
            cs.push(rational(rng));
            base.from_poly(UniPoly::from_coeffs(cs)).unwrap()
        }
    }
}

/// An exponent of total degree at most `max_total`.
pub fn exponent<R: Rng>(rng: &mut R, n: usize, max_total: u32) -> Exponent {
    let total = rng.gen_range(0..=max_total);
    let mut e = vec![0u32; n];
    for _ in 0..total {
        e[rng.gen_range(0..n)] += 1;
    }
    Exponent::new(e)
}

pub fn skewpoly<R: Rng>(rng: &mut R, alg: &Algebra, terms: usize, max_total: u32, coeff_deg: usize) -> SkewPoly {
    let mut f = SkewPoly::zero();
    for _ in 0..terms {
        f.add_term(exponent(rng, alg.num_vars(), max_total), coeff(rng, &alg.spec().base, coeff_deg));
    }
    f
}

/// A nonzero vector of the given rank.
pub fn modvector<R: Rng>(rng: &mut R, alg: &Algebra, rank: usize, terms: usize, max_total: u32, coeff_deg: usize) -> ModVector {
    loop {
        let mut v = ModVector::zero(rank);
        for _ in 0..terms {
            let m = ModMonomial::new(exponent(rng, alg.num_vars(), max_total), rng.gen_range(0..rank));
            v.add_term(m, coeff(rng, &alg.spec().base, coeff_deg));
        }
        if !v.is_zero() {
            return v;
        }
    }
}

/// `Σ a_i f_i`.
pub fn apply(alg: &Algebra, coeffs: &[SkewPoly], family: &[ModVector], rank: usize) -> ModVector {
    alg.combine(coeffs, family, rank).unwrap()
}

pub fn is_zero_combination(alg: &Algebra, coeffs: &[SkewPoly], family: &[ModVector], rank: usize) -> bool {
    apply(alg, coeffs, family, rank).is_zero()
}

pub fn orders_for(n: usize) -> OrderSpec {
    OrderSpec::deglex(n)
}
