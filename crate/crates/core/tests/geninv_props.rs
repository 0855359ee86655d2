use lme_core::geninv::{drazin, index, moore_penrose};
use lme_core::random::{
    diagonalizable_from, random_invertible, random_matrix, random_normal, random_with_index, seeded,
};
use lme_core::{c, ComplexMatrix, Tolerances};
use proptest::prelude::*;
use rand::Rng;

fn rel(x: &ComplexMatrix, y: &ComplexMatrix) -> f64 {
    x.distance(y) / y.frobenius_norm().max(1.0)
}

fn rank_deficient(seed: u64, n: usize, r: usize) -> ComplexMatrix {
    let mut rng = seeded(seed);
    let mut left = random_matrix(&mut rng, n);
    for j in r..n {
        for i in 0..n {
            left.set(i, j, c(0.0, 0.0));
        }
    }
    &left * &random_matrix(&mut rng, n)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn penrose_axioms(seed in any::<u64>(), (n, r) in (1usize..=8).prop_flat_map(|n| (Just(n), 0usize..=n))) {
        let tol = Tolerances::default().recon;
        let a = rank_deficient(seed, n, r);
        let p = moore_penrose(&a).unwrap();
        prop_assert!(rel(&(&(&a * &p) * &a), &a) <= tol);
        prop_assert!(rel(&(&(&p * &a) * &p), &p) <= tol);
        let ap = &a * &p;
        let pa = &p * &a;
        prop_assert!(rel(&ap.adjoint(), &ap) <= tol);
        prop_assert!(rel(&pa.adjoint(), &pa) <= tol);
    }

    #[test]
    fn drazin_axioms(seed in any::<u64>(), (n, core) in (1usize..=7).prop_flat_map(|n| (Just(n), 0usize..=n))) {
        let mut rng = seeded(seed);
        let a = random_with_index(&mut rng, n, core);
        let q = index(&a, Tolerances::default().rank).unwrap();
        let d = drazin(&a).unwrap();
        let tol = Tolerances::default().recon;
        let aq = a.pow(q).unwrap();
        prop_assert!(rel(&(&a.pow(q + 1).unwrap() * &d), &aq) <= tol);
        prop_assert!(rel(&(&(&d * &a) * &d), &d) <= tol);
        prop_assert!(rel(&(&d * &a), &(&a * &d)) <= tol);
    }

    #[test]
    fn drazin_is_similarity_covariant(seed in any::<u64>(), (n, core) in (1usize..=6).prop_flat_map(|n| (Just(n), 0usize..=n))) {
        let mut rng = seeded(seed);
        let a = random_with_index(&mut rng, n, core);
        let w = random_invertible(&mut rng, n);
        let w_inv = w.inverse().unwrap();
        let lhs = drazin(&(&(&w * &a) * &w_inv)).unwrap();
        let rhs = &(&w * &drazin(&a).unwrap()) * &w_inv;
        prop_assert!(rel(&lhs, &rhs) <= 1e-7);
    }

    #[test]
    fn drazin_commutes_with_commuting_partners(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let s = random_invertible(&mut rng, n);
        let palette = [c(0.0, 0.0), c(1.0, 0.0), c(-2.0, 0.0), c(0.0, 1.0)];
        let av: Vec<_> = (0..n).map(|_| palette[rng.random_range(0..4)]).collect();
        let bv: Vec<_> = (0..n).map(|_| palette[rng.random_range(0..4)]).collect();
        let a = diagonalizable_from(&s, &av);
        let b = diagonalizable_from(&s, &bv);
        let d = drazin(&a).unwrap();
        prop_assert!(rel(&(&d * &b), &(&b * &d)) <= 1e-8);
    }

    #[test]
    fn normal_drazin_equals_pseudoinverse(seed in any::<u64>(), n in 1usize..=8, zeros in 0usize..=3) {
        let mut rng = seeded(seed);
        let u = lme_core::random::random_unitary(&mut rng, n);
        let base = random_normal(&mut rng, n);
        let mut values = base.diagonal();
        for v in values.iter_mut().take(zeros.min(n)) {
            *v = c(0.0, 0.0);
        }
        let m = &(&u * &ComplexMatrix::from_diagonal(&values)) * &u.adjoint();
        let d = drazin(&m).unwrap();
        let p = moore_penrose(&m).unwrap();
        prop_assert!(rel(&d, &p) <= Tolerances::default().recon);
    }
}
