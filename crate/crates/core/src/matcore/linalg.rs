//! SVD-based helpers shared by the generalized inverses, the eigen solver and the oracle.

use nalgebra::DMatrix;

use super::matrix::{Complex, ComplexMatrix};

/// Thin SVD with singular values sorted in decreasing order.
pub(crate) struct SortedSvd {
    /// `rows x p`
    pub u: DMatrix<Complex>,
    pub sigma: Vec<f64>,
    /// `p x cols`, rows are conjugated right singular vectors.
    pub v_t: DMatrix<Complex>,
}

pub(crate) fn svd(m: &ComplexMatrix) -> SortedSvd {
    let (rows, cols) = (m.rows(), m.cols());
    let a = to_faer(m);
    let decomposition = a.thin_svd().expect("SVD of a finite matrix");
    let p = rows.min(cols);
    let sigma: Vec<f64> = (0..p).map(|k| decomposition.S().column_vector()[k].re).collect();
    let u_f = decomposition.U();
    let v_f = decomposition.V();

    let mut order: Vec<usize> = (0..p).collect();
    order.sort_by(|&a, &b| sigma[b].total_cmp(&sigma[a]));
    SortedSvd {
        u: DMatrix::from_fn(rows, p, |i, k| u_f[(i, order[k])]),
        sigma: order.iter().map(|&i| sigma[i]).collect(),
        v_t: DMatrix::from_fn(p, cols, |k, j| v_f[(j, order[k])].conj()),
    }
}

pub(crate) fn to_faer(m: &ComplexMatrix) -> faer::Mat<Complex> {
    let data = m.as_nalgebra();
    faer::Mat::from_fn(m.rows(), m.cols(), |i, j| data[(i, j)])
}

impl SortedSvd {
    /// Number of singular values above `tol * σ_max`.
    pub fn rank(&self, tol: f64) -> usize {
        let max = self.sigma.first().copied().unwrap_or(0.0);
        if max == 0.0 {
            return 0;
        }
        self.sigma.iter().filter(|&&s| s > tol * max).count()
    }
}

pub(crate) fn rank(m: &ComplexMatrix, tol: f64) -> usize {
    svd(m).rank(tol)
}

/// Orthonormal basis (as columns) of the `count` right singular vectors with the
/// smallest singular values of a square matrix.
pub(crate) fn smallest_right_singular_vectors(m: &ComplexMatrix, count: usize) -> ComplexMatrix {
    let n = m.cols();
    debug_assert_eq!(m.rows(), n);
    let s = svd(m);
    let rows: Vec<usize> = (n - count..n).collect();
    ComplexMatrix::from_nalgebra(s.v_t.select_rows(rows.iter()).adjoint())
}

/// Moore–Penrose inverse with singular values below `tol * σ_max` dropped.
pub(crate) fn pseudo_inverse(m: &ComplexMatrix, tol: f64) -> ComplexMatrix {
    let s = svd(m);
    let r = s.rank(tol);
    let mut out = DMatrix::<Complex>::zeros(m.cols(), m.rows());
    for k in 0..r {
        let inv = 1.0 / s.sigma[k];
        let v = s.v_t.row(k).adjoint();
        let u = s.u.column(k).adjoint();
        out += (v * u).map(|z| z * inv);
    }
    ComplexMatrix::from_nalgebra(out)
}

/// Reciprocal 2-norm condition number, 0 for singular input.
pub(crate) fn reciprocal_condition(m: &ComplexMatrix) -> f64 {
    let s = svd(m);
    let max = s.sigma.first().copied().unwrap_or(0.0);
    let min = s.sigma.last().copied().unwrap_or(0.0);
    if max == 0.0 {
        0.0
    } else {
        min / max
    }
}

