mod common;

use common::*;
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use skewgb_core::{
    buchberger, division, is_groebner, syz_leading, text, Algebra, BasisDirection, ModVector, ModuleOrder,
    OrderSpec,
};

fn algebra(k: usize) -> Algebra {
    match k % 4 {
        0 => h1(),
        1 => o3(),
        2 => a2(),
        _ => shift(),
    }
}

fn order_for(alg: &Algebra, rng: &mut ChaCha8Rng) -> OrderSpec {
    let n = alg.num_vars();
    let mut precedence: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        precedence.swap(i, rng.gen_range(0..=i));
    }
    let module = if rng.gen_bool(0.5) { ModuleOrder::Top } else { ModuleOrder::TopRev };
    let direction = if rng.gen_bool(0.5) { BasisDirection::Natural } else { BasisDirection::Reversed };
    OrderSpec::with_precedence(precedence)
        .unwrap()
        .module_order(module)
        .basis_direction(direction)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn render_then_parse_is_identity(seed in any::<u64>(), k in 0usize..4) {
        let alg = algebra(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = order_for(&alg, &mut rng);
        let rank = rng.gen_range(1..=3);
        let v = modvector(&mut rng, &alg, rank, 4, 4, 2);
        let shown = text::render_vector(&alg, &v, &order);
        let back = text::parse_vector(&alg, &shown, rank).unwrap();
        prop_assert_eq!(&back, &v);
        prop_assert_eq!(text::render_vector(&alg, &back, &order), shown);
    }

    #[test]
    fn division_contract_under_any_order(seed in any::<u64>(), k in 0usize..4) {
        let alg = algebra(k);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = order_for(&alg, &mut rng);
        let rank = rng.gen_range(1..=3);
        let f = modvector(&mut rng, &alg, rank, 4, 4, 1);
        let fs: Vec<ModVector> = (0..rng.gen_range(1..=3)).map(|_| modvector(&mut rng, &alg, rank, 2, 2, 1)).collect();
        let r = division(&alg, &f, &fs, &order).unwrap();
        prop_assert!(r.verify(&alg, &f, &fs, &order).is_ok());
    }
}

#[test]
fn completion_is_sound() {
    for seed in 0..40u64 {
        let alg = if seed % 2 == 0 { o3() } else { shift() };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = order_for(&alg, &mut rng);
        let rank = rng.gen_range(1..=2);
        let fs: Vec<ModVector> = (0..rng.gen_range(1..=3)).map(|_| modvector(&mut rng, &alg, rank, 2, 2, 1)).collect();
        let gb = buchberger(&alg, &fs, &order).unwrap();
        assert!(gb.verify(&alg, &order).is_ok());
        assert!(is_groebner(&alg, &gb.basis, &order).unwrap());
        for f in &fs {
            assert!(division(&alg, f, &gb.basis, &order).unwrap().remainder.is_zero());
        }
    }
}

#[test]
fn leading_syzygies_are_homogeneous() {
    let alg = o3();
    for seed in 100..130u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let order = order_for(&alg, &mut rng);
        let rank = rng.gen_range(1..=2);
        let fs: Vec<ModVector> = (0..rng.gen_range(2..=3)).map(|_| modvector(&mut rng, &alg, rank, 2, 2, 1)).collect();
        let gb = buchberger(&alg, &fs, &order).unwrap();
        let lms: Vec<_> = gb.basis.iter().map(|g| g.lm(&order).unwrap()).collect();
        for col in syz_leading(&alg, &gb.basis, &order).unwrap() {
            let mut target = None;
            for (h, x) in col.iter().zip(&lms) {
                if h.is_zero() {
                    continue;
                }
                assert_eq!(h.num_terms(), 1);
                let (e, _) = h.leading(&order).unwrap();
                let m = (e.add(&x.exp), x.index);
                assert!(target.get_or_insert(m.clone()) == &m);
            }
        }
    }
}
