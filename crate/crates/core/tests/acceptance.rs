mod common;

use std::panic::{self, AssertUnwindSafe};
use std::time::{Duration, Instant};

use common::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb_core::{
    buchberger, division, is_groebner, member, syz_module, Algebra, BasisDirection, Exponent, ModVector,
    ModuleOrder, OrderSpec, SkewPoly,
};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(cond: bool, msg: impl Into<String>) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Outcome {
    let took = start.elapsed();
    ensure(took < limit, format!("{what} took {took:?}, limit {limit:?}"))
}

fn column(alg: &Algebra, entries: &[&str]) -> Vec<SkewPoly> {
    entries.iter().map(|s| poly(alg, s)).collect()
}

fn h1_division() -> Outcome {
    let start = Instant::now();
    let alg = h1();
    let order = OrderSpec::deglex(3)
        .module_order(ModuleOrder::TopRev)
        .basis_direction(BasisDirection::Natural);
    let f = vector(&alg, "x^2*y*z*e1 + y^2*z*e2 + x*z*e1 + z^2*e3", 3);
    let fs = [vector(&alg, "x*z*e1 + y*e2 + y*e3", 3), vector(&alg, "x*y*e1 + z*e2 + z*e3", 3)];
    let r = division(&alg, &f, &fs, &order).map_err(|e| e.to_string())?;
    r.verify(&alg, &f, &fs, &order).map_err(|e| e.to_string())?;

    let q2 = poly(&alg, "x*z - 1/2*y");
    let h = vector(
        &alg,
        "x*z*e1 + y^2*z*e2 - x*z^2*e2 + 1/2*y*z*e2 - x*z^2*e3 + 1/2*y*z*e3 + z^2*e3",
        3,
    );
    ensure(r.quotients[0].is_zero(), "q1 is not zero")?;
    ensure(r.quotients[1] == q2, "q2 differs from x*z - 1/2*y")?;
    ensure(r.remainder == h, "remainder differs from the expected h")?;

    let rebuilt = &apply(&alg, &[SkewPoly::zero(), q2], &fs, 3) + &h;
    ensure(rebuilt == f, "q1 f1 + q2 f2 + h does not reconstruct f")?;
    within(start, Duration::from_secs(1), "division")
}

fn o3_inputs(alg: &Algebra) -> Vec<ModVector> {
    vec![
        vector(alg, "x1^2*x2^2*e1 + x2*x3*e2", 2),
        vector(alg, "2*x1*x2*x3*e1 + x2*e2", 2),
    ]
}

fn o3_completion() -> Outcome {
    let start = Instant::now();
    let alg = o3();
    let order = OrderSpec::deglex(2);
    let fs = o3_inputs(&alg);
    let gb = buchberger(&alg, &fs, &order).map_err(|e| e.to_string())?;
    gb.verify(&alg, &order).map_err(|e| e.to_string())?;
    ensure(gb.basis.len() == 3, format!("basis has {} elements", gb.basis.len()))?;
    ensure(gb.basis[..2] == fs[..], "the inputs are not kept in front")?;
    let f3 = vector(&alg, "12*x2*x3^2*e2 - 9/4*x1*x2^2*e2", 2);
    ensure(gb.basis[2] == f3, "the new element differs from 12*x2*x3^2*e2 - 9/4*x1*x2^2*e2")?;
    ensure(is_groebner(&alg, &gb.basis, &order).map_err(|e| e.to_string())?, "is_groebner rejects the basis")?;
    let again = buchberger(&alg, &gb.basis, &order).map_err(|e| e.to_string())?;
    ensure(again.basis == gb.basis, "a second completion pass changed the basis")?;
    within(start, Duration::from_secs(1), "completion")
}

fn o3_syzygies() -> Outcome {
    let start = Instant::now();
    let alg = o3();
    let order = OrderSpec::deglex(2);
    let fs = o3_inputs(&alg);
    let m = syz_module(&alg, &fs, &order).map_err(|e| e.to_string())?;
    m.verify(&alg, &order).map_err(|e| e.to_string())?;

    ensure(m.z_leading == vec![column(&alg, &["4*x3", "-9/4*x1*x2", "0"])], "Z(L_G) differs")?;
    ensure(m.p == vec![column(&alg, &["0", "0", "1"])], "P differs")?;
    ensure(m.z_basis == vec![column(&alg, &["4*x3", "-9/4*x1*x2", "-1"])], "Z(G) differs")?;
    let h = vec![column(&alg, &["1", "0", "4*x3"]), column(&alg, &["0", "1", "-9/4*x1*x2"])];
    ensure(m.gb.h_matrix() == h, "H differs")?;
    let q = vec![column(&alg, &["1", "0"]), column(&alg, &["0", "1"]), column(&alg, &["0", "0"])];
    ensure(m.gb.q_matrix() == q, "Q differs")?;
    let all_zero = |cols: &[Vec<SkewPoly>]| cols.iter().flatten().all(SkewPoly::is_zero);
    ensure(all_zero(&m.z_from_basis), "(Z(G)^T H^T)^T has a nonzero entry")?;
    ensure(all_zero(&m.z_from_identity), "(I - Q^T H^T)^T has a nonzero entry")?;
    ensure(m.is_free(), "Z(F) is not empty, the module is not reported free")?;
    within(start, Duration::from_secs(1), "syzygy pipeline")
}

fn engine_and_division_cases(alg: &Algebra, seed: u64, cases: usize) -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let n = alg.num_vars();
    let order = OrderSpec::deglex(n);
    let base = alg.spec().base.clone();
    let qc = alg.is_quasi_commutative();
    for case in 0..cases {
        let fail = |what: &str| format!("case {case}: {what}");

        let alpha = exponent(&mut rng, n, 4);
        let beta = exponent(&mut rng, n, 4);
        let top = alpha.add(&beta);
        let product = alg.mono_times_mono(&alpha, &beta);
        let c = product.coeff(&top).cloned().ok_or_else(|| fail("x^(a+b) missing from x^a x^b"))?;
        let tail = &product - &SkewPoly::term(top.clone(), c.clone());
        ensure(tail.degree().is_none_or(|d| d < top.degree()), fail("p_(a,b) has degree >= |a+b|"))?;
        ensure(!qc || tail.is_zero(), fail("p_(a,b) is nonzero for a quasi-commutative algebra"))?;
        ensure(!alg.is_bijective() || c.is_unit(), fail("c_(a,b) is not a unit for a bijective algebra"))?;

        let r = coeff(&mut rng, &base, 2);
        let moved = alg.mono_times_ring(&alpha, &r);
        let lead = alg.sigma_alpha(&alpha, &r);
        ensure(moved.coeff(&alpha) == Some(&lead), fail("x^a r does not start with sigma^a(r) x^a"))?;
        let rest = &moved - &SkewPoly::term(alpha.clone(), lead);
        ensure(rest.degree().is_none_or(|d| d < alpha.degree()), fail("p_(a,r) has degree >= |a|"))?;
        ensure(!qc || rest.is_zero(), fail("p_(a,r) is nonzero for a quasi-commutative algebra"))?;

        let theta = exponent(&mut rng, n, 4);
        let cc = |a: &Exponent, b: &Exponent| alg.c_of(a, b).0;
        let lhs = &alg.sigma_alpha(&theta, &cc(&alpha, &beta)) * &cc(&theta, &top);
        let rhs = &cc(&theta, &alpha) * &cc(&theta.add(&alpha), &beta);
        ensure(lhs == rhs, fail("sigma^t(c_(g,b)) c_(t,g+b) = c_(t,g) c_(t+g,b) fails"))?;
        let lhs = &alg.sigma_alpha(&theta, &alg.sigma_alpha(&alpha, &r)) * &cc(&theta, &alpha);
        let rhs = &cc(&theta, &alpha) * &alg.sigma_alpha(&theta.add(&alpha), &r);
        ensure(lhs == rhs, fail("sigma^t(sigma^g(c)) c_(t,g) = c_(t,g) sigma^(t+g)(c) fails"))?;

        let f = skewpoly(&mut rng, alg, 2, 4, 1);
        let g = skewpoly(&mut rng, alg, 2, 4, 1);
        let h = skewpoly(&mut rng, alg, 2, 4, 1);
        ensure(
            alg.mul(&alg.mul(&f, &g), &h) == alg.mul(&f, &alg.mul(&g, &h)),
            fail("multiplication is not associative"),
        )?;

        let rank = rng.gen_range(1..=3);
        let target = modvector(&mut rng, alg, rank, 4, 4, 1);
        let divisors: Vec<ModVector> = (0..rng.gen_range(1..=3)).map(|_| modvector(&mut rng, alg, rank, 2, 2, 1)).collect();
        let res = division(alg, &target, &divisors, &order).map_err(|e| fail(&e.to_string()))?;
        res.verify(alg, &target, &divisors, &order).map_err(|e| fail(&e.to_string()))?;
        let mut current = target.clone();
        for step in &res.steps {
            let next = step.apply(alg, &current, &divisors);
            let descends = order.cmp_opt(next.lm(&order).as_ref(), current.lm(&order).as_ref()).is_lt();
            ensure(descends, fail("a reduction step did not lower the leading monomial"))?;
            current = next;
        }
        ensure(current == res.remainder, fail("replayed steps do not end at the remainder"))?;
    }
    Ok(())
}

fn property_suite() -> Outcome {
    engine_and_division_cases(&h1(), 1, 1000).map_err(|e| format!("h1(2) {e}"))?;
    engine_and_division_cases(&o3(), 2, 1000).map_err(|e| format!("O3(2,1/2,3) {e}"))?;
    engine_and_division_cases(&a2(), 3, 1000).map_err(|e| format!("A2(2,3) {e}"))
}

fn soundness_suite() -> Outcome {
    let alg = o3();
    let order = OrderSpec::deglex(2);
    let fs = o3_inputs(&alg);
    let gb = buchberger(&alg, &fs, &order).map_err(|e| e.to_string())?;
    let lms: Vec<_> = gb.basis.iter().filter_map(|g| g.lm(&order)).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(5);

    for case in 0..100 {
        let a = [skewpoly(&mut rng, &alg, 2, 2, 2), skewpoly(&mut rng, &alg, 2, 2, 2)];
        let v = apply(&alg, &a, &fs, 2);
        let q = member(&alg, &v, &gb.basis, &order)
            .map_err(|e| e.to_string())?
            .ok_or_else(|| format!("combination {case} was rejected"))?;
        ensure(apply(&alg, &q, &gb.basis, 2) == v, format!("combination {case} is not rebuilt over G"))?;
        let coords = gb.to_input_coords(&alg, &q);
        ensure(apply(&alg, &coords, &fs, 2) == v, format!("combination {case} is not rebuilt over F"))?;
    }

    let mut rejected = 0;
    while rejected < 20 {
        let v = modvector(&mut rng, &alg, 2, 3, 3, 1);
        let lm = v.lm(&order).expect("nonzero");
        if lms.iter().any(|m| skewgb_core::order::divides(m, &lm).is_some()) {
            continue;
        }
        ensure(
            member(&alg, &v, &gb.basis, &order).map_err(|e| e.to_string())?.is_none(),
            format!("non-member {rejected} was accepted"),
        )?;
        rejected += 1;
    }
    Ok(())
}

fn annihilates(alg: &Algebra, cols: &[Vec<SkewPoly>], family: &[ModVector], rank: usize) -> bool {
    cols.iter().all(|c| is_zero_combination(alg, c, family, rank))
}

fn syzygy_suite() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    let algebras = [o3(), shift()];
    for case in 0..25 {
        let alg = &algebras[case % algebras.len()];
        let order = OrderSpec::deglex(alg.num_vars());
        let rank = rng.gen_range(1..=3);
        let s = rng.gen_range(1..=3);
        let fs: Vec<ModVector> = (0..s).map(|_| modvector(&mut rng, alg, rank, 2, 2, 1)).collect();
        let m = syz_module(alg, &fs, &order).map_err(|e| format!("case {case}: {e}"))?;
        let g = &m.gb.basis;
        let lg: Vec<ModVector> = g
            .iter()
            .map(|v| {
                let l = v.leading(&order).expect("nonzero basis element");
                let mut t = ModVector::zero(rank);
                t.add_term(l.monomial, l.coeff);
                t
            })
            .collect();
        ensure(annihilates(alg, &m.z_leading, &lg, rank), format!("case {case}: Z(L_G) does not annihilate L_G"))?;
        ensure(annihilates(alg, &m.z_basis, g, rank), format!("case {case}: Z(G) does not annihilate G"))?;
        ensure(annihilates(alg, &m.z_inputs, &fs, rank), format!("case {case}: Z(F) does not annihilate F"))?;

        let hcols = &m.gb.h_cols;
        let through_h = |z: &[SkewPoly]| -> Vec<SkewPoly> {
            (0..s)
                .map(|i| z.iter().zip(hcols).fold(SkewPoly::zero(), |acc, (zj, hj)| &acc + &alg.mul(zj, &hj[i])))
                .collect()
        };
        let block1: Vec<Vec<SkewPoly>> = m.z_basis.iter().map(|z| through_h(z)).collect();
        let block2: Vec<Vec<SkewPoly>> = m
            .gb
            .q_cols
            .iter()
            .enumerate()
            .map(|(i, q)| {
                let mut col: Vec<SkewPoly> = through_h(q).iter().map(|p| -p).collect();
                col[i] = &col[i] + &alg.one();
                col
            })
            .collect();
        ensure(annihilates(alg, &block1, &fs, rank), format!("case {case}: (Z(G)^T H^T)^T F^T is not zero"))?;
        ensure(annihilates(alg, &block2, &fs, rank), format!("case {case}: (I - Q^T H^T)^T F^T is not zero"))?;
    }
    Ok(())
}

fn main() {
    let criteria: [Criterion; 6] = [
        ("division over h1(2), deglex x>y>z, TOPREV", h1_division),
        ("Groebner completion over O3(2,1/2,3)", o3_completion),
        ("syzygy pipeline over O3(2,1/2,3)", o3_syzygies),
        ("engine and division properties, 1000 cases per algebra", property_suite),
        ("membership soundness, 100 members and 20 non-members", soundness_suite),
        ("syzygy annihilation, 25 random quasi-commutative inputs", syzygy_suite),
    ];
    let suite = Instant::now();
    let mut failures = 0;
    for (k, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = panic::catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let took = start.elapsed();
        match outcome {
            Ok(()) => println!("criterion {}: PASS  {name} ({took:.2?})", k + 1),
            Err(e) => {
                failures += 1;
                println!("criterion {}: FAIL  {name} ({took:.2?}): {e}", k + 1);
            }
        }
    }
    let total = suite.elapsed();
    if total >= Duration::from_secs(300) {
        failures += 1;
        println!("suite runtime {total:.2?} exceeds 5 min");
    }
    println!("acceptance: {} of {} criteria passed in {total:.2?}", criteria.len() - failures.min(criteria.len()), criteria.len());
    if failures > 0 {
        std::process::exit(1);
    }
}
