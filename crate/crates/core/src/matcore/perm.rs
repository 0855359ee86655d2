use std::fmt;

use super::matrix::{Complex, ComplexMatrix};
use crate::error::{LmeError, Result};

/// A bijection of `{0, …, n-1}`; `image[i]` is `σ(i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Permutation {
    image: Vec<usize>,
}

impl Permutation {
    pub fn new(image: Vec<usize>) -> Result<Self> {
        let n = image.len();
        let mut seen = vec![false; n];
        for &v in &image {
            if v >= n || seen[v] {
                return Err(LmeError::InvalidPermutation(format!("{image:?}")));
            }
            seen[v] = true;
        }
        Ok(Permutation { image })
    }

    /// From the usual 1-based notation, e.g. `(3, 1, 2)`.
    pub fn from_one_based(image: &[usize]) -> Result<Self> {
        if image.contains(&0) {
            return Err(LmeError::InvalidPermutation(format!("{image:?}")));
        }
        Self::new(image.iter().map(|&v| v - 1).collect())
    }

    pub fn identity(n: usize) -> Self {
        Permutation {
            image: (0..n).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.image.len()
    }

    pub fn is_empty(&self) -> bool {
        self.image.is_empty()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.image[i]
    }

    pub fn image(&self) -> &[usize] {
        &self.image
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.image.iter().map(|&v| v + 1).collect()
    }

    pub fn is_identity(&self) -> bool {
        self.image.iter().enumerate().all(|(i, &v)| i == v)
    }

    /// `self ∘ other`, i.e. `i ↦ self(other(i))`.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation> {
        if self.len() != other.len() {
            return Err(LmeError::DimensionMismatch(format!(
                "composing permutations of sizes {} and {}",
                self.len(),
                other.len()
            )));
        }
        Ok(Permutation {
            image: other.image.iter().map(|&j| self.image[j]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = vec![0; self.len()];
        for (i, &v) in self.image.iter().enumerate() {
            image[v] = i;
        }
        Permutation { image }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{:?}", self.one_based())
    }
}

/// `P_σ` with `(P_σ)_{ij} = δ_{i,σ(j)}`.
pub fn permutation_matrix(sigma: &Permutation) -> ComplexMatrix {
    let n = sigma.len();
    let mut p = ComplexMatrix::zeros(n, n);
    for j in 0..n {
        p.set(sigma.apply(j), j, Complex::new(1.0, 0.0));
    }
    p
}

/// `m_σ = (m_{σ(1)}, …, m_{σ(n)})`.
pub fn permute_vector(m: &[Complex], sigma: &Permutation) -> Result<Vec<Complex>> {
    if m.len() != sigma.len() {
        return Err(LmeError::DimensionMismatch(format!(
            "vector of length {} with permutation of size {}",
            m.len(),
            sigma.len()
        )));
    }
    Ok(sigma.image.iter().map(|&j| m[j]).collect())
}

/// Block-diagonal assembly of square blocks.
pub fn direct_sum(blocks: &[ComplexMatrix]) -> Result<ComplexMatrix> {
    if blocks.is_empty() {
        return Err(LmeError::EmptyList);
    }
    let mut sizes = Vec::with_capacity(blocks.len());
    for b in blocks {
        sizes.push(b.order()?);
    }
    let n: usize = sizes.iter().sum();
    let mut out = ComplexMatrix::zeros(n, n);
    let mut offset = 0;
    for (b, &k) in blocks.iter().zip(&sizes) {
        for i in 0..k {
            for j in 0..k {
                out.set(offset + i, offset + j, b.get(i, j));
            }
        }
        offset += k;
    }
    Ok(out)
}

/// `σ₁ ⊕ … ⊕ σ_d`: each part acts on its own consecutive index range.
pub fn direct_sum_permutation(parts: &[Permutation]) -> Result<Permutation> {
    if parts.is_empty() {
        return Err(LmeError::EmptyList);
    }
    let mut image = Vec::with_capacity(parts.iter().map(Permutation::len).sum());
    let mut offset = 0;
    for p in parts {
        image.extend(p.image.iter().map(|&v| v + offset));
        offset += p.len();
    }
    Ok(Permutation { image })
}
