//! Moore–Penrose, Drazin and group inverses, matrix index, scalar dagger.

use nalgebra::DMatrix;

use crate::error::{LmeError, Result};
use crate::matcore::{direct_sum, linalg, Complex, ComplexMatrix};
use crate::tolerance::Tolerances;

/// `A = S (B ⊕ N) S⁻¹` with `B` invertible and `N` nilpotent.
#[derive(Debug, Clone)]
pub struct CoreNilpotentDecomposition {
    pub similarity: ComplexMatrix,
    /// Absent when the core is empty.
    pub core: Option<ComplexMatrix>,
    /// Absent when the nilpotent part is empty.
    pub nilpotent: Option<ComplexMatrix>,
    pub core_size: usize,
    pub index: usize,
}

impl CoreNilpotentDecomposition {
    /// `S (B ⊕ N) S⁻¹`.
    pub fn reconstruct(&self) -> Result<ComplexMatrix> {
        let blocks: Vec<ComplexMatrix> = self
            .core
            .iter()
            .chain(self.nilpotent.iter())
            .cloned()
            .collect();
        let middle = direct_sum(&blocks)?;
        Ok(&(&self.similarity * &middle) * &self.similarity.inverse()?)
    }
}

/// `1/a` when `|a| > tol_zero`, otherwise `0`.
pub fn scalar_dagger(a: Complex, tol_zero: f64) -> Complex {
    if a.norm() > tol_zero {
        a.inv()
    } else {
        Complex::new(0.0, 0.0)
    }
}

pub fn moore_penrose(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    moore_penrose_with_tol(a, Tolerances::default().rank)
}

/// Pseudoinverse via SVD, dropping singular values below `tol_rank · σ_max`.
pub fn moore_penrose_with_tol(a: &ComplexMatrix, tol_rank: f64) -> Result<ComplexMatrix> {
    if !a.is_finite() {
        return Err(LmeError::NonFinite);
    }
    Ok(linalg::pseudo_inverse(a, tol_rank))
}

pub fn rank(a: &ComplexMatrix, tol_rank: f64) -> usize {
    linalg::rank(a, tol_rank)
}

/// Least `q ≥ 0` with `rank(A^{q+1}) = rank(A^q)`.
pub fn index(a: &ComplexMatrix, tol_rank: f64) -> Result<usize> {
    Ok(deflate(a, tol_rank)?.index)
}

/// Unitary `Q` with `Q⋆AQ = [[C, 0], [X, N]]`, `C` invertible of size
/// `core_size` and `N` nilpotent.
struct Deflation {
    q: DMatrix<Complex>,
    t: DMatrix<Complex>,
    core_size: usize,
    index: usize,
}

/// Repeatedly splits off the numerical nullspace of the leading block
/// (singular values at most `tol_rank · σ_max(A)`). The number of nonempty
/// steps is the index, and `dim ker A^q` is the sum of the first `q` nullities.
fn deflate(a: &ComplexMatrix, tol_rank: f64) -> Result<Deflation> {
    let n = a.order()?;
    if !a.is_finite() {
        return Err(LmeError::NonFinite);
    }
    let threshold = tol_rank * linalg::svd(a).sigma.first().copied().unwrap_or(0.0);
    let mut q = DMatrix::<Complex>::identity(n, n);
    let mut m = n;
    let mut index = 0;
    while m > 0 {
        let lead = (q.view((0, 0), (n, m)).adjoint() * a.as_nalgebra()) * q.view((0, 0), (n, m));
        let s = linalg::svd(&ComplexMatrix::from_nalgebra(lead));
        let kept = s.sigma.iter().filter(|&&x| x > threshold).count();
        if kept == m {
            break;
        }
        index += 1;
        let v = s.v_t.adjoint();
        let rotated = q.view((0, 0), (n, m)) * v;
        q.view_mut((0, 0), (n, m)).copy_from(&rotated);
        m = kept;
    }
    let mut t = q.adjoint() * a.as_nalgebra() * &q;
    t.view_mut((0, m), (m, n - m)).fill(Complex::new(0.0, 0.0));
    Ok(Deflation {
        q,
        t,
        core_size: m,
        index,
    })
}

/// `Z = Σⱼ Nʲ X C^{−(j+1)}`, the solution of `ZC − NZ = X` for nilpotent `N`.
fn coupling(d: &Deflation) -> Result<(DMatrix<Complex>, DMatrix<Complex>)> {
    let n = d.t.nrows();
    let m = d.core_size;
    let c_inv = ComplexMatrix::from_nalgebra(d.t.view((0, 0), (m, m)).into_owned())
        .inverse()?
        .as_nalgebra()
        .clone();
    let x = d.t.view((m, 0), (n - m, m)).into_owned();
    let nil = d.t.view((m, m), (n - m, n - m)).into_owned();
    let mut term = &x * &c_inv;
    let mut z = term.clone();
    for _ in 1..d.index {
        term = &nil * term * &c_inv;
        z += &term;
    }
    Ok((z, c_inv))
}

pub fn core_nilpotent(a: &ComplexMatrix) -> Result<CoreNilpotentDecomposition> {
    core_nilpotent_with_tol(a, Tolerances::default().rank)
}

/// Core–nilpotent splitting `A = S (B ⊕ N) S⁻¹` by nullspace deflation
/// followed by removal of the coupling block.
pub fn core_nilpotent_with_tol(a: &ComplexMatrix, tol_rank: f64) -> Result<CoreNilpotentDecomposition> {
    let d = deflate(a, tol_rank)?;
    let n = d.t.nrows();
    let m = d.core_size;
    let mut w = DMatrix::<Complex>::identity(n, n);
    if m > 0 && m < n {
        let (z, _) = coupling(&d)?;
        w.view_mut((m, 0), (n - m, m)).copy_from(&z);
    }
    let core = (m > 0).then(|| ComplexMatrix::from_nalgebra(d.t.view((0, 0), (m, m)).into_owned()));
    let nilpotent = (m < n)
        .then(|| ComplexMatrix::from_nalgebra(d.t.view((m, m), (n - m, n - m)).into_owned()));
    Ok(CoreNilpotentDecomposition {
        similarity: ComplexMatrix::from_nalgebra(&d.q * w),
        core,
        nilpotent,
        core_size: m,
        index: d.index,
    })
}

pub fn drazin(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    drazin_with_tol(a, Tolerances::default().rank)
}

/// `Aᴰ = Q [[C⁻¹, 0], [Z C⁻¹, 0]] Q⋆` on the deflated form.
pub fn drazin_with_tol(a: &ComplexMatrix, tol_rank: f64) -> Result<ComplexMatrix> {
    let d = deflate(a, tol_rank)?;
    let n = d.t.nrows();
    let m = d.core_size;
    if m == 0 {
        return Ok(ComplexMatrix::zeros(n, n));
    }
    let mut inner = DMatrix::<Complex>::zeros(n, n);
    if m == n {
        return ComplexMatrix::from_nalgebra(d.t).inverse().map(|t_inv| {
            ComplexMatrix::from_nalgebra(&d.q * t_inv.as_nalgebra() * d.q.adjoint())
        });
    }
    let (z, c_inv) = coupling(&d)?;
    inner.view_mut((m, 0), (n - m, m)).copy_from(&(&z * &c_inv));
    inner.view_mut((0, 0), (m, m)).copy_from(&c_inv);
    Ok(ComplexMatrix::from_nalgebra(&d.q * inner * d.q.adjoint()))
}

/// `A#`, defined only for `ind(A) ≤ 1`.
pub fn group_inverse(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let tol = Tolerances::default().rank;
    let q = index(a, tol)?;
    if q >= 2 {
        return Err(LmeError::IndexTooLarge(q));
    }
    drazin_with_tol(a, tol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::c;

    fn nil2() -> ComplexMatrix {
        ComplexMatrix::from_real(&[&[0.0, 1.0], &[0.0, 0.0]])
    }

    #[test]
    fn scalar_dagger_cases() {
        assert_eq!(scalar_dagger(c(0.0, 0.0), 1e-10), c(0.0, 0.0));
        assert_eq!(scalar_dagger(c(2.0, 0.0), 1e-10), c(0.5, 0.0));
        assert_eq!(scalar_dagger(c(1e-14, 0.0), 1e-10), c(0.0, 0.0));
    }

    #[test]
    fn pseudoinverse_of_zero_is_transposed_zero() {
        let z = ComplexMatrix::zeros(2, 3);
        assert_eq!(moore_penrose(&z).unwrap(), ComplexMatrix::zeros(3, 2));
    }

    #[test]
    fn pseudoinverse_of_diagonal() {
        let p = moore_penrose(&ComplexMatrix::from_real_diagonal(&[2.0, 0.0])).unwrap();
        assert!(p.distance(&ComplexMatrix::from_real_diagonal(&[0.5, 0.0])) < 1e-14);
    }

    #[test]
    fn index_cases() {
        let tol = 1e-10;
        assert_eq!(index(&ComplexMatrix::from_real(&[&[2.0, 1.0], &[1.0, 1.0]]), tol).unwrap(), 0);
        assert_eq!(index(&ComplexMatrix::from_real_diagonal(&[1.0, 0.0]), tol).unwrap(), 1);
        assert_eq!(index(&nil2(), tol).unwrap(), 2);
        assert!(index(&ComplexMatrix::zeros(2, 1), tol).is_err());
    }

    #[test]
    fn core_nilpotent_extremes() {
        let inv = ComplexMatrix::from_real(&[&[2.0, 1.0], &[0.0, 3.0]]);
        let d = core_nilpotent(&inv).unwrap();
        assert_eq!(d.core_size, 2);
        assert!(d.nilpotent.is_none());

        let d = core_nilpotent(&nil2()).unwrap();
        assert_eq!(d.core_size, 0);
        assert!(d.core.is_none());
        assert!(d.reconstruct().unwrap().distance(&nil2()) < 1e-14);

        let d = core_nilpotent(&ComplexMatrix::from_real_diagonal(&[3.0, 0.0])).unwrap();
        assert_eq!(d.core_size, 1);
        assert!((d.core.unwrap().get(0, 0) - c(3.0, 0.0)).norm() < 1e-14);
        assert!(d.nilpotent.unwrap().get(0, 0).norm() < 1e-14);
    }

    #[test]
    fn core_nilpotent_mixed() {
        let a = ComplexMatrix::from_real(&[&[1.0, 2.0, 0.5], &[0.0, -3.0, 1.0], &[0.0, 0.0, 0.0]]);
        let d = core_nilpotent(&a).unwrap();
        assert_eq!(d.core_size, 2);
        assert!(d.reconstruct().unwrap().distance(&a) < 1e-12);
    }

    #[test]
    fn drazin_cases() {
        let inv = ComplexMatrix::from_real(&[&[2.0, 1.0], &[1.0, 1.0]]);
        assert!(drazin(&inv).unwrap().distance(&inv.inverse().unwrap()) < 1e-13);

        // A = [[1,1],[0,1]]: A² − I is nilpotent.
        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let shifted = &(&a * &a) - &ComplexMatrix::identity(2);
        assert!(drazin(&shifted).unwrap().max_abs() < 1e-12);

        let d = ComplexMatrix::from_diagonal(&[c(2.0, 0.0), c(0.0, 0.0), c(0.0, -4.0)]);
        let expected = ComplexMatrix::from_diagonal(&[c(0.5, 0.0), c(0.0, 0.0), c(0.0, 0.25)]);
        assert!(drazin(&d).unwrap().distance(&expected) < 1e-14);
    }

    #[test]
    fn group_inverse_cases() {
        let inv = ComplexMatrix::from_real(&[&[2.0, 1.0], &[1.0, 1.0]]);
        assert!(group_inverse(&inv).unwrap().distance(&inv.inverse().unwrap()) < 1e-13);
        let p = ComplexMatrix::from_real_diagonal(&[1.0, 0.0]);
        assert!(group_inverse(&p).unwrap().distance(&p) < 1e-14);
        assert_eq!(group_inverse(&nil2()), Err(LmeError::IndexTooLarge(2)));
    }
}
