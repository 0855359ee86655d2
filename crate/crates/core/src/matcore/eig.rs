use std::cmp::Ordering;

use super::linalg;
use super::matrix::{Complex, ComplexMatrix};
use crate::error::{LmeError, Result};
use crate::tolerance::Tolerances;

const RCOND_FLOOR: f64 = 1e-13;

#[derive(Debug, Clone)]
pub struct EigenDecomposition {
    /// `S`, with `S⁻¹ M S = diag(eigenvalues)` when `diagonalizable`.
    pub diagonalizer: ComplexMatrix,
    pub eigenvalues: Vec<Complex>,
    /// 2-norm condition number of the diagonalizer (infinite when singular).
    pub condition_estimate: f64,
    pub diagonalizable: bool,
}

/// A group of numerically equal eigenvalues.
#[derive(Debug, Clone)]
pub(crate) struct Cluster {
    pub value: Complex,
    pub members: Vec<usize>,
}

impl Cluster {
    pub fn len(&self) -> usize {
        self.members.len()
    }
}

/// Lexicographic order on `(re, im)`.
pub fn lex_cmp(a: &Complex, b: &Complex) -> Ordering {
    a.re.total_cmp(&b.re).then(a.im.total_cmp(&b.im))
}

/// Groups values whose distance is at most `gap`, closing transitively.
/// Clusters are returned sorted lexicographically by their mean.
pub(crate) fn cluster_values(values: &[Complex], gap: f64) -> Vec<Cluster> {
    let n = values.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    for i in 0..n {
        for j in i + 1..n {
            if (values[i] - values[j]).norm() <= gap {
                let (ri, rj) = (find(&mut parent, i), find(&mut parent, j));
                if ri != rj {
                    parent[ri.max(rj)] = ri.min(rj);
                }
            }
        }
    }
    let mut groups: Vec<Vec<usize>> = Vec::new();
    let mut root_slot = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_slot[r] == usize::MAX {
            root_slot[r] = groups.len();
            groups.push(Vec::new());
        }
        groups[root_slot[r]].push(i);
    }
    let mut clusters: Vec<Cluster> = groups
        .into_iter()
        .map(|members| {
            let sum: Complex = members.iter().map(|&i| values[i]).sum();
            Cluster {
                value: sum / members.len() as f64,
                members,
            }
        })
        .collect();
    clusters.sort_by(|a, b| lex_cmp(&a.value, &b.value));
    clusters
}

/// Eigenvalues from the complex Schur form.
pub fn eigenvalues(m: &ComplexMatrix) -> Result<Vec<Complex>> {
    m.order()?;
    if !m.is_finite() {
        return Err(LmeError::NonFinite);
    }
    linalg::to_faer(m).eigenvalues().map_err(|_| LmeError::NoConvergence)
}

/// Eigendecomposition of a square matrix.
///
/// Eigenvalues come from the complex Schur form and are clustered with the
/// `cluster` gap; each cluster of size `k` gets the `k` smallest right singular
/// vectors of `M - λI` as its eigenvector basis. Diagonalizability is decided by
/// the reconstruction residual, never by counting multiplicities.
pub fn eig_decompose(m: &ComplexMatrix, tol: &Tolerances) -> Result<EigenDecomposition> {
    m.order()?;
    if !m.is_finite() {
        return Err(LmeError::NonFinite);
    }
    let scale = m.frobenius_norm().max(1.0);
    eig_clustered(m, tol, scale).map(|(d, _)| d)
}

/// Same as [`eig_decompose`], with the clustering gap measured against `scale`.
/// Columns of the diagonalizer are grouped by cluster, clusters in lexicographic order.
pub(crate) fn eig_clustered(
    m: &ComplexMatrix,
    tol: &Tolerances,
    scale: f64,
) -> Result<(EigenDecomposition, Vec<Cluster>)> {
    let n = m.order()?;
    let raw = eigenvalues(m)?;
    let mut clusters = cluster_values(&raw, tol.cluster * scale);

    let mut s = ComplexMatrix::zeros(n, n);
    let mut col = 0;
    for cluster in &mut clusters {
        let k = cluster.len();
        let shifted = m - &ComplexMatrix::identity(n).scale(cluster.value);
        let basis = linalg::smallest_right_singular_vectors(&shifted, k);
        s.set_columns(col, &basis);
        cluster.members = (col..col + k).collect();
        col += k;
    }

    let rcond = linalg::reciprocal_condition(&s);
    let fallback = |s: ComplexMatrix| EigenDecomposition {
        diagonalizer: s,
        eigenvalues: clusters
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.value, c.len()))
            .collect(),
        condition_estimate: f64::INFINITY,
        diagonalizable: false,
    };
    if rcond <= RCOND_FLOOR {
        let d = fallback(s);
        return Ok((d, clusters));
    }
    let s_inv = match s.inverse() {
        Ok(inv) => inv,
        Err(_) => {
            let d = fallback(s);
            return Ok((d, clusters));
        }
    };
    let diag = &(&s_inv * m) * &s;
    let eigenvalues = diag.diagonal();
    let rebuilt = &(&s * &ComplexMatrix::from_diagonal(&eigenvalues)) * &s_inv;
    let residual = rebuilt.distance(m);
    let diagonalizable = residual <= tol.recon * m.frobenius_norm().max(1.0);
    Ok((
        EigenDecomposition {
            diagonalizer: s,
            eigenvalues,
            condition_estimate: 1.0 / rcond,
            diagonalizable,
        },
        clusters,
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::matrix::c;

    fn sorted_re(v: &[Complex]) -> Vec<f64> {
        let mut out: Vec<f64> = v.iter().map(|z| z.re).collect();
        out.sort_by(f64::total_cmp);
        out
    }

    #[test]
    fn identity_is_diagonalizable_with_unit_eigenvalues() {
        let d = eig_decompose(&ComplexMatrix::identity(3), &Tolerances::default()).unwrap();
        assert!(d.diagonalizable);
        for z in &d.eigenvalues {
            assert!((z - c(1.0, 0.0)).norm() < 1e-14);
        }
    }

    #[test]
    fn symmetric_involution_has_plus_minus_one() {
        let a = ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let d = eig_decompose(&a, &Tolerances::default()).unwrap();
        assert!(d.diagonalizable);
        let ev = sorted_re(&d.eigenvalues);
        assert!((ev[0] + 1.0).abs() < 1e-12 && (ev[1] - 1.0).abs() < 1e-12);
    }

    #[test]
    fn jordan_block_is_not_diagonalizable() {
        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        let d = eig_decompose(&a, &Tolerances::default()).unwrap();
        assert!(!d.diagonalizable);
    }

    #[test]
    fn rejects_non_square() {
        assert!(matches!(
            eig_decompose(&ComplexMatrix::zeros(2, 3), &Tolerances::default()),
            Err(LmeError::NonSquare { .. })
        ));
    }

    #[test]
    fn clusters_close_transitively_and_sort() {
        let v = [c(2.0, 0.0), c(1.0, 0.0), c(2.0 + 1e-12, 0.0), c(-1.0, 0.0)];
        let cl = cluster_values(&v, 1e-10);
        let sizes: Vec<usize> = cl.iter().map(Cluster::len).collect();
        assert_eq!(sizes, vec![1, 1, 2]);
        assert!((cl[0].value.re + 1.0).abs() < 1e-15);
    }
}
