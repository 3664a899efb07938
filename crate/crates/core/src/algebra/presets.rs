//! A catalog of standard skew PBW extensions.

use num_traits::{One, Zero};

use super::{AlgebraSpec, SigmaMap};
use crate::error::{Error, Result};
use crate::order::Exponent;
use crate::ring::{Rational, RingSpec};
use crate::skewpoly::SkewPoly;

/// The q-Heisenberg algebra `h_n(q)` over `Q` with variables
/// `x_1..x_n, y_1..y_n, z_1..z_n` (just `x, y, z` when `n = 1`) and
/// `y_i x_i = q x_i y_i`, `z_i y_i = q y_i z_i`, `z_i x_i = q^{-1} x_i z_i + y_i`.
pub fn heisenberg(n: usize, q: Rational) -> AlgebraSpec {
    let names: Vec<String> = if n == 1 {
        vec!["x".into(), "y".into(), "z".into()]
    } else {
        ["x", "y", "z"]
            .iter()
            .flat_map(|p| (1..=n).map(move |i| format!("{p}{i}")))
            .collect()
    };
    let base = RingSpec::Rationals;
    let total = 3 * n;
    let mut spec = AlgebraSpec::new(base.clone(), names);
    for i in 0..n {
        let (x, y, z) = (i, n + i, 2 * n + i);
        let c = base.from_rational(q.clone());
        let c_inv = base.from_rational(q.recip());
        let y_tail = SkewPoly::term(Exponent::unit(total, y), base.one());
        spec = spec
            .with_relation(x, y, c.clone(), SkewPoly::zero())
            .with_relation(y, z, c, SkewPoly::zero())
            .with_relation(x, z, c_inv, y_tail);
    }
    spec
}

/// The multiplicative analogue of the Weyl algebra `O_n(λ_ji)`, presented as
/// `σ(Q[x1])<x2, ..., xn>`. The parameters are listed as
/// `λ21, λ31, λ32, λ41, λ42, λ43, ...`.
pub fn multiplicative_weyl(n: usize, lambdas: &[Rational]) -> Result<AlgebraSpec> {
    let expected = n * n.saturating_sub(1) / 2;
    if n < 2 || lambdas.len() != expected {
        return Err(Error::Contract(format!(
            "O_{n} needs n >= 2 and {expected} parameters, got {}",
            lambdas.len()
        )));
    }
    let base = RingSpec::polynomials("x1");
    let names: Vec<String> = (2..=n).map(|i| format!("x{i}")).collect();
    let mut spec = AlgebraSpec::new(base.clone(), names);
    let mut params = lambdas.iter();
    for j in 2..=n {
        for i in 1..j {
            let lambda = params.next().expect("parameter count checked").clone();
            if i == 1 {
                spec = spec.with_sigma(j - 2, SigmaMap::new(lambda, Rational::zero()));
            } else {
                spec = spec.with_relation(i - 2, j - 2, base.from_rational(lambda), SkewPoly::zero());
            }
        }
    }
    Ok(spec)
}

/// The additive analogue of the Weyl algebra `A_n(q_1, ..., q_n)`.
///
/// For one parameter it is `σ(Q[x])<y>` with `σ(x) = q x` and `δ(x) = 1`.
/// For more parameters every generator is an extension variable over `Q`:
/// `x_1..x_n, y_1..y_n` with `y_i x_i = q_i x_i y_i + 1`.
pub fn additive_weyl(qs: &[Rational]) -> AlgebraSpec {
    if let [q] = qs {
        let base = RingSpec::polynomials("x");
        return AlgebraSpec::new(base.clone(), ["y"])
            .with_sigma(0, SigmaMap::new(q.clone(), Rational::zero()))
            .with_delta(0, base.one());
    }
    let n = qs.len();
    let names: Vec<String> = ["x", "y"]
        .iter()
        .flat_map(|p| (1..=n).map(move |i| format!("{p}{i}")))
        .collect();
    let base = RingSpec::Rationals;
    let mut spec = AlgebraSpec::new(base.clone(), names);
    for (i, q) in qs.iter().enumerate() {
        let one = SkewPoly::term(Exponent::zero(2 * n), base.one());
        spec = spec.with_relation(i, n + i, base.from_rational(q.clone()), one);
    }
    spec
}

/// The algebra of shift operators `S_h = σ(Q[t])<x>` with `σ(t) = t - h`.
pub fn shift(h: Rational) -> AlgebraSpec {
    AlgebraSpec::new(RingSpec::polynomials("t"), ["x"]).with_sigma(0, SigmaMap::new(Rational::one(), -h))
}

/// Builds a preset from a name such as `h1`, `O3`, `A2` or `S` and its
/// rational parameters.
pub fn by_name(name: &str, params: &[Rational]) -> Result<AlgebraSpec> {
    let arity = |n: usize| -> Result<()> {
        if params.len() == n {
            Ok(())
        } else {
            Err(Error::Contract(format!("preset {name} takes {n} parameter(s), got {}", params.len())))
        }
    };
    let index = |prefix: &str| -> Option<usize> { name.strip_prefix(prefix)?.parse().ok().filter(|&n| n > 0) };
    if let Some(n) = index("h") {
        arity(1)?;
        return Ok(heisenberg(n, params[0].clone()));
    }
    if let Some(n) = index("O") {
        return multiplicative_weyl(n, params);
    }
    if let Some(n) = index("A") {
        arity(n)?;
        return Ok(additive_weyl(params));
    }
    if name == "S" {
        arity(1)?;
        return Ok(shift(params[0].clone()));
    }
    Err(Error::Contract(format!("unknown preset {name}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, RingElem};

    #[test]
    fn heisenberg_relations() {
        let h = heisenberg(1, rat(2, 1));
        assert_eq!(h.variables, ["x", "y", "z"]);
        let zx = h.relation(0, 2);
        assert_eq!(zx.c, RingElem::Rational(rat(1, 2)));
        assert_eq!(zx.tail, SkewPoly::term(Exponent::new(vec![0, 1, 0]), RingSpec::Rationals.one()));
        assert_eq!(h.relation(0, 1).c, RingElem::Rational(rat(2, 1)));
        let h2 = heisenberg(2, rat(2, 1));
        assert_eq!(h2.variables, ["x1", "x2", "y1", "y2", "z1", "z2"]);
        assert!(h2.relation(0, 3).c.is_one());
    }

    #[test]
    fn o3_matches_parameters() {
        let o = multiplicative_weyl(3, &[rat(2, 1), rat(1, 2), rat(3, 1)]).unwrap();
        assert_eq!(o.variables, ["x2", "x3"]);
        assert_eq!(o.sigma[0], SigmaMap::new(rat(2, 1), rat(0, 1)));
        assert_eq!(o.sigma[1], SigmaMap::new(rat(1, 2), rat(0, 1)));
        assert_eq!(o.relation(0, 1).c, o.base.from_int(3));
        assert!(multiplicative_weyl(3, &[rat(1, 1)]).is_err());
    }

    #[test]
    fn lookup_by_name() {
        assert_eq!(by_name("h1", &[rat(2, 1)]).unwrap(), heisenberg(1, rat(2, 1)));
        assert_eq!(by_name("A2", &[rat(2, 1), rat(3, 1)]).unwrap(), additive_weyl(&[rat(2, 1), rat(3, 1)]));
        assert!(by_name("A2", &[rat(2, 1)]).is_err());
        assert!(by_name("Q7", &[]).is_err());
        assert_eq!(by_name("S", &[rat(1, 1)]).unwrap().sigma[0], SigmaMap::new(rat(1, 1), rat(-1, 1)));
    }
}
