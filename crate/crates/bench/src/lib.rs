//! Inputs shared by the benchmarks in `benches/`.

use skewgb_core::{presets, rat, text, Algebra, ModVector, OrderSpec, SkewPoly};

pub struct DivisionCase {
    pub alg: Algebra,
    pub order: OrderSpec,
    pub f: ModVector,
    pub divisors: Vec<ModVector>,
}

pub struct FamilyCase {
    pub alg: Algebra,
    pub order: OrderSpec,
    pub family: Vec<ModVector>,
}

fn vector(alg: &Algebra, src: &str, rank: usize) -> ModVector {
    text::parse_vector(alg, src, rank).expect("fixture parses")
}

pub fn heisenberg() -> Algebra {
    Algebra::new(presets::heisenberg(1, rat(2, 1))).expect("valid preset")
}

pub fn additive_weyl() -> Algebra {
    Algebra::new(presets::additive_weyl(&[rat(2, 1), rat(3, 1)])).expect("valid preset")
}

pub fn multiplicative_weyl() -> Algebra {
    Algebra::new(presets::multiplicative_weyl(3, &[rat(2, 1), rat(1, 2), rat(3, 1)]).expect("valid parameters"))
        .expect("valid preset")
}

/// Two dense elements whose product needs many rewriting steps.
pub fn product_operands(alg: &Algebra, left: &str, right: &str) -> (SkewPoly, SkewPoly) {
    (
        text::parse_poly(alg, left).expect("fixture parses"),
        text::parse_poly(alg, right).expect("fixture parses"),
    )
}

/// Division of a rank-3 vector by two divisors over `h_1(2)`.
pub fn division_case() -> DivisionCase {
    let alg = heisenberg();
    let f = vector(&alg, "x^2*y*z*e1 + y^2*z*e2 + x*z*e1 + z^2*e3", 3);
    let divisors = vec![
        vector(&alg, "x*z*e1 + y*e2 + y*e3", 3),
        vector(&alg, "x*y*e1 + z*e2 + z*e3", 3),
    ];
    DivisionCase {
        alg,
        order: OrderSpec::deglex(3),
        f,
        divisors,
    }
}

/// Two generators over `O_3(2, 1/2, 3)` that complete to three.
pub fn completion_case() -> FamilyCase {
    let alg = multiplicative_weyl();
    let family = vec![
        vector(&alg, "x1^2*x2^2*e1 + x2*x3*e2", 2),
        vector(&alg, "2*x1*x2*x3*e1 + x2*e2", 2),
    ];
    FamilyCase {
        alg,
        order: OrderSpec::deglex(2),
        family,
    }
}

/// Three generators over `O_3(2, 1/2, 3)` with a larger completion.
pub fn larger_completion_case() -> FamilyCase {
    let alg = multiplicative_weyl();
    let family = vec![
        vector(&alg, "3/2*x1*x2*x3*e2 + 5/3*x3^2*e2", 2),
        vector(&alg, "-x1*x2*x3*e1 - x2*x3*e1 + 2*e1", 2),
        vector(&alg, "1/3*x2*x3*e1 + 4*x1*x3*e2", 2),
    ];
    FamilyCase {
        alg,
        order: OrderSpec::deglex(2),
        family,
    }
}
