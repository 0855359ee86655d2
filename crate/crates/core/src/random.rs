//! Seeded generators for random matrices and equation instances.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::lme::EquationSpec;
use crate::matcore::{c, direct_sum, Complex, ComplexMatrix, Permutation};

pub type InstanceRng = ChaCha8Rng;

pub fn seeded(seed: u64) -> InstanceRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Real and imaginary parts uniform in `[-1, 1)`.
pub fn random_complex(rng: &mut InstanceRng) -> Complex {
    c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

pub fn random_matrix(rng: &mut InstanceRng, n: usize) -> ComplexMatrix {
    let entries = (0..n * n).map(|_| random_complex(rng)).collect();
    ComplexMatrix::new(n, n, entries).expect("finite entries")
}

/// Gram–Schmidt on a random matrix, redrawn on (unlikely) rank loss.
pub fn random_unitary(rng: &mut InstanceRng, n: usize) -> ComplexMatrix {
    'draw: loop {
        let m = random_matrix(rng, n);
        let mut cols: Vec<Vec<Complex>> = Vec::with_capacity(n);
        for j in 0..n {
            let mut v = m.column(j);
            for _ in 0..2 {
                for q in &cols {
                    let proj: Complex = q.iter().zip(&v).map(|(a, b)| a.conj() * b).sum();
                    for (vi, qi) in v.iter_mut().zip(q) {
                        *vi -= proj * qi;
                    }
                }
            }
            let norm = v.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
            if norm < 1e-8 {
                continue 'draw;
            }
            cols.push(v.into_iter().map(|z| z / norm).collect());
        }
        let mut out = ComplexMatrix::zeros(n, n);
        for (j, col) in cols.iter().enumerate() {
            for (i, &z) in col.iter().enumerate() {
                out.set(i, j, z);
            }
        }
        return out;
    }
}

/// `U · diag(σ) · V` with unitary `U, V` and `σ ∈ [0.5, 2]`, so the
/// condition number is at most 4.
pub fn random_invertible(rng: &mut InstanceRng, n: usize) -> ComplexMatrix {
    let u = random_unitary(rng, n);
    let v = random_unitary(rng, n);
    let sigma: Vec<f64> = (0..n).map(|_| rng.random_range(0.5..2.0)).collect();
    &(&u * &ComplexMatrix::from_real_diagonal(&sigma)) * &v
}

pub fn random_permutation(rng: &mut InstanceRng, n: usize) -> Permutation {
    let mut image: Vec<usize> = (0..n).collect();
    image.shuffle(rng);
    Permutation::new(image).expect("shuffled identity")
}

/// `U · diag(λ) · U⋆` with random unitary `U`.
pub fn random_normal(rng: &mut InstanceRng, n: usize) -> ComplexMatrix {
    let u = random_unitary(rng, n);
    let values: Vec<Complex> = (0..n).map(|_| random_complex(rng)).collect();
    &(&u * &ComplexMatrix::from_diagonal(&values)) * &u.adjoint()
}

/// `W · (B ⊕ N) · W⁻¹` with invertible `B` of size `core` and `N` a single
/// nilpotent Jordan block of size `n − core`, so the index is `n − core`
/// (or 0 when `core = n`).
pub fn random_with_index(rng: &mut InstanceRng, n: usize, core: usize) -> ComplexMatrix {
    let w = random_invertible(rng, n);
    let mut blocks = Vec::new();
    if core > 0 {
        blocks.push(random_invertible(rng, core));
    }
    if core < n {
        let m = n - core;
        let mut nil = ComplexMatrix::zeros(m, m);
        for i in 0..m.saturating_sub(1) {
            nil.set(i, i + 1, c(1.0, 0.0));
        }
        blocks.push(nil);
    }
    let inner = direct_sum(&blocks).expect("square blocks");
    &(&w * &inner) * &w.inverse().expect("invertible by construction")
}

/// `S · diag(values) · S⁻¹`.
pub fn diagonalizable_from(s: &ComplexMatrix, values: &[Complex]) -> ComplexMatrix {
    &(s * &ComplexMatrix::from_diagonal(values)) * &s.inverse().expect("invertible diagonalizer")
}

/// A random diagonalizable matrix whose eigenvalue `i` has multiplicity
/// `multiplicities[i]`; eigenvalues are distinct across groups.
pub fn random_with_multiplicities(
    rng: &mut InstanceRng,
    multiplicities: &[usize],
) -> (ComplexMatrix, Vec<Complex>) {
    let n: usize = multiplicities.iter().sum();
    let mut values = Vec::with_capacity(n);
    for (i, &k) in multiplicities.iter().enumerate() {
        let z = c(i as f64 + rng.random_range(0.0..0.5), rng.random_range(-1.0..1.0));
        values.extend(std::iter::repeat_n(z, k));
    }
    let s = random_invertible(rng, n);
    (diagonalizable_from(&s, &values), values)
}

/// Eigenvalues drawn for random instances; repeats give eigenvalue collisions.
pub const PALETTE: [Complex; 7] = [
    Complex::new(-2.0, 0.0),
    Complex::new(-1.0, 0.0),
    Complex::new(0.0, 0.0),
    Complex::new(1.0, 0.0),
    Complex::new(2.0, 0.0),
    Complex::new(0.0, 1.0),
    Complex::new(0.0, -1.0),
];

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RhsMode {
    /// `c_r = 0` on every row with `Γ_rr = 0`.
    Consistent,
    /// Some row has `Γ_rr = 0` and `c_r ≠ 0`.
    Inconsistent,
    /// `c` drawn freely from the palette.
    Free,
}

/// An equation whose parameters share the diagonalizer `S`, with the chosen
/// eigenvalue vectors kept for reference.
#[derive(Debug, Clone)]
pub struct RandomInstance {
    pub spec: EquationSpec,
    pub diagonalizer: ComplexMatrix,
    pub a_values: Vec<Vec<Complex>>,
    pub b_values: Vec<Vec<Complex>>,
    pub c_values: Vec<Complex>,
    /// Rows forced to `Γ_rr = 0`.
    pub forced_rows: Vec<usize>,
}

impl RandomInstance {
    /// `Γ_rr` from the chosen eigenvalues (exact for palette values).
    pub fn gamma_diagonal(&self) -> Vec<Complex> {
        gamma_diagonal(&self.a_values, &self.b_values)
    }

    pub fn expected_consistent(&self) -> bool {
        self.gamma_diagonal()
            .iter()
            .zip(&self.c_values)
            .all(|(g, c)| *g != Complex::new(0.0, 0.0) || *c == Complex::new(0.0, 0.0))
    }
}

fn gamma_diagonal(a_values: &[Vec<Complex>], b_values: &[Vec<Complex>]) -> Vec<Complex> {
    (0..a_values[0].len())
        .map(|r| a_values.iter().zip(b_values).map(|(a, b)| a[r] * b[r]).sum())
        .collect()
}

fn pick(rng: &mut InstanceRng) -> Complex {
    PALETTE[rng.random_range(0..PALETTE.len())]
}

fn pick_nonzero(rng: &mut InstanceRng) -> Complex {
    loop {
        let z = pick(rng);
        if z != Complex::new(0.0, 0.0) {
            return z;
        }
    }
}

pub fn random_instance(rng: &mut InstanceRng, n: usize, k: usize, mode: RhsMode) -> RandomInstance {
    assert!(n >= 1 && k >= 1);
    let s = random_invertible(rng, n);
    let mut a_values: Vec<Vec<Complex>> = (0..k).map(|_| (0..n).map(|_| pick(rng)).collect()).collect();
    let b_values: Vec<Vec<Complex>> = (0..k).map(|_| (0..n).map(|_| pick(rng)).collect()).collect();

    let forced_count = match mode {
        RhsMode::Inconsistent => rng.random_range(1..=n.min(2)),
        _ => rng.random_range(0..=n.min(2)),
    };
    let mut rows: Vec<usize> = (0..n).collect();
    rows.shuffle(rng);
    let forced_rows: Vec<usize> = rows[..forced_count].to_vec();
    for &r in &forced_rows {
        if k >= 2 && rng.random_bool(0.5) {
            // cancel the first term against the second, the rest vanish
            let t = a_values[0][r] * b_values[0][r];
            a_values[1][r] = if b_values[1][r] == Complex::new(0.0, 0.0) {
                Complex::new(0.0, 0.0)
            } else {
                -t / b_values[1][r]
            };
            if b_values[1][r] == Complex::new(0.0, 0.0) {
                a_values[0][r] = Complex::new(0.0, 0.0);
            }
            for a in a_values.iter_mut().skip(2) {
                a[r] = Complex::new(0.0, 0.0);
            }
        } else {
            for a in a_values.iter_mut() {
                a[r] = Complex::new(0.0, 0.0);
            }
        }
    }

    let zero = Complex::new(0.0, 0.0);
    let gamma = gamma_diagonal(&a_values, &b_values);
    let mut c_values: Vec<Complex> = (0..n)
        .map(|r| match mode {
            RhsMode::Free => pick(rng),
            _ if gamma[r] == zero => zero,
            _ => pick(rng),
        })
        .collect();
    if mode == RhsMode::Inconsistent {
        c_values[forced_rows[0]] = pick_nonzero(rng);
    }
    let build = |v: &Vec<Complex>| diagonalizable_from(&s, v);
    let spec = EquationSpec::new(
        a_values.iter().map(build).collect(),
        b_values.iter().map(build).collect(),
        build(&c_values),
    )
    .expect("consistent shapes");
    RandomInstance {
        spec,
        diagonalizer: s,
        a_values,
        b_values,
        c_values,
        forced_rows,
    }
}
