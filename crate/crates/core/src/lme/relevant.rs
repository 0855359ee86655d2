use crate::error::{LmeError, Result};
use crate::matcore::{Complex, ComplexMatrix};

/// `Γ = Σⱼ aʲ (bʲ)ᵀ` built from induced vectors, with its zero pattern.
#[derive(Debug, Clone)]
pub struct RelevantMatrix {
    pub gamma: ComplexMatrix,
    pub a_vectors: Vec<Vec<Complex>>,
    pub b_vectors: Vec<Vec<Complex>>,
    pub c_vector: Vec<Complex>,
    pub zero_mask: Vec<Vec<bool>>,
    pub zero_count: usize,
    /// `maxⱼ ‖aʲ‖_∞ ‖bʲ‖_∞`, the scale of the zero test.
    pub scale: f64,
}

fn inf_norm(v: &[Complex]) -> f64 {
    v.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

impl RelevantMatrix {
    pub fn n(&self) -> usize {
        self.c_vector.len()
    }

    pub fn is_zero(&self, r: usize, s: usize) -> bool {
        self.zero_mask[r][s]
    }

    /// Cells `(r, s)` with `Γ_rs = 0`, row by row.
    pub fn zero_cells(&self) -> Vec<(usize, usize)> {
        let n = self.n();
        (0..n)
            .flat_map(|r| (0..n).map(move |s| (r, s)))
            .filter(|&(r, s)| self.zero_mask[r][s])
            .collect()
    }

    /// `|c_r| ≤ tol_zero · ‖c‖_∞`.
    pub fn c_is_zero(&self, r: usize, tol_zero: f64) -> bool {
        self.c_vector[r].norm() <= tol_zero * inf_norm(&self.c_vector)
    }

    /// First row with `Γ_rr = 0` and `c_r ≠ 0`, if any.
    pub fn consistency_witness(&self, tol_zero: f64) -> Option<usize> {
        (0..self.n()).find(|&r| self.zero_mask[r][r] && !self.c_is_zero(r, tol_zero))
    }

    pub fn off_diagonal_nonzero(&self) -> bool {
        let n = self.n();
        (0..n).all(|r| (0..n).all(|s| r == s || !self.zero_mask[r][s]))
    }
}

pub fn relevant_matrix(
    a_vectors: &[Vec<Complex>],
    b_vectors: &[Vec<Complex>],
    c_vector: &[Complex],
    tol_zero: f64,
) -> Result<RelevantMatrix> {
    if a_vectors.is_empty() {
        return Err(LmeError::EmptyList);
    }
    if a_vectors.len() != b_vectors.len() {
        return Err(LmeError::DimensionMismatch(format!(
            "{} a-vectors but {} b-vectors",
            a_vectors.len(),
            b_vectors.len()
        )));
    }
    let n = c_vector.len();
    if a_vectors.iter().chain(b_vectors).any(|v| v.len() != n) {
        return Err(LmeError::DimensionMismatch(format!(
            "induced vectors must all have length {n}"
        )));
    }
    let mut gamma = ComplexMatrix::zeros(n, n);
    for (a, b) in a_vectors.iter().zip(b_vectors) {
        gamma = gamma + ComplexMatrix::outer(a, b);
    }
    let scale = a_vectors
        .iter()
        .zip(b_vectors)
        .map(|(a, b)| inf_norm(a) * inf_norm(b))
        .fold(0.0, f64::max);
    let threshold = tol_zero * scale;
    let zero_mask: Vec<Vec<bool>> = (0..n)
        .map(|r| (0..n).map(|s| gamma.get(r, s).norm() <= threshold).collect())
        .collect();
    let zero_count = zero_mask.iter().flatten().filter(|&&z| z).count();
    Ok(RelevantMatrix {
        gamma,
        a_vectors: a_vectors.to_vec(),
        b_vectors: b_vectors.to_vec(),
        c_vector: c_vector.to_vec(),
        zero_mask,
        zero_count,
        scale,
    })
}
