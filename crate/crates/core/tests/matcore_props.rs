use lme_core::matcore::{
    commutes, direct_sum, eig_decompose, is_normal, permutation_matrix, Permutation,
};
use lme_core::random::{random_invertible, random_matrix, random_normal, random_with_multiplicities, seeded};
use lme_core::Tolerances;
use proptest::prelude::*;

fn permutation(n: usize) -> impl Strategy<Value = Permutation> {
    Just((0..n).collect::<Vec<_>>())
        .prop_shuffle()
        .prop_map(|v| Permutation::new(v).unwrap())
}

fn pair_of_permutations() -> impl Strategy<Value = (Permutation, Permutation)> {
    (1usize..=8).prop_flat_map(|n| (permutation(n), permutation(n)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn permutation_matrices_form_a_homomorphism((s, t) in pair_of_permutations()) {
        let composed = permutation_matrix(&s.compose(&t).unwrap());
        let product = &permutation_matrix(&s) * &permutation_matrix(&t);
        prop_assert_eq!(composed, product);
        prop_assert_eq!(permutation_matrix(&s.inverse()), permutation_matrix(&s).transpose());
    }

    #[test]
    fn direct_sum_is_blockwise(seed in any::<u64>(), sizes in prop::collection::vec(1usize..=3, 1..=3)) {
        let mut rng = seeded(seed);
        let left: Vec<_> = sizes.iter().map(|&k| random_invertible(&mut rng, k)).collect();
        let right: Vec<_> = sizes.iter().map(|&k| random_matrix(&mut rng, k)).collect();
        let products: Vec<_> = left.iter().zip(&right).map(|(x, y)| x * y).collect();
        let lhs = &direct_sum(&left).unwrap() * &direct_sum(&right).unwrap();
        prop_assert!(lhs.distance(&direct_sum(&products).unwrap()) < 1e-12 * lhs.frobenius_norm().max(1.0));

        let inverses: Vec<_> = left.iter().map(|x| x.inverse().unwrap()).collect();
        let inv = direct_sum(&left).unwrap().inverse().unwrap();
        prop_assert!(inv.distance(&direct_sum(&inverses).unwrap()) < 1e-9 * inv.frobenius_norm().max(1.0));
    }

    #[test]
    fn normality_survives_adjoint_and_commutes_is_symmetric(seed in any::<u64>(), n in 1usize..=6) {
        let mut rng = seeded(seed);
        let tol = Tolerances::default().commute;
        for m in [random_matrix(&mut rng, n), random_normal(&mut rng, n)] {
            prop_assert_eq!(is_normal(&m, tol).unwrap(), is_normal(&m.adjoint(), tol).unwrap());
        }
        let a = random_matrix(&mut rng, n);
        let b = random_matrix(&mut rng, n);
        let p = random_normal(&mut rng, n);
        prop_assert!(is_normal(&p, tol).unwrap());
        prop_assert_eq!(commutes(&a, &b, tol).unwrap(), commutes(&b, &a, tol).unwrap());
        prop_assert!(commutes(&a, &(&a * &a), 1e-9).unwrap());
    }

    #[test]
    fn eigendecomposition_reconstructs(seed in any::<u64>(), mults in prop::collection::vec(1usize..=3, 1..=3)) {
        let mut rng = seeded(seed);
        let (m, _) = random_with_multiplicities(&mut rng, &mults);
        let tol = Tolerances::default();
        let dec = eig_decompose(&m, &tol).unwrap();
        prop_assert!(dec.diagonalizable);
        let s = &dec.diagonalizer;
        let rebuilt = &(s * &lme_core::ComplexMatrix::from_diagonal(&dec.eigenvalues)) * &s.inverse().unwrap();
        prop_assert!(rebuilt.distance(&m) <= tol.recon * m.frobenius_norm().max(1.0));
    }
}
