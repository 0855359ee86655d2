//! Simultaneous diagonalization of commuting diagonalizable families.
//!
//! A family `(M₁, …, M_q)` is refined member by member: the first member is
//! diagonalized with its eigenvalues grouped into a star vector, then every
//! later member, which is block diagonal in the current basis, is diagonalized
//! inside each current block. The resulting index blocks nest level by level
//! and form the block tree of a star sequence.

use crate::error::{LmeError, Result};
use crate::matcore::{
    cluster_values, commutes, eig_clustered, eig_decompose, eigenvalues, lex_cmp, permute_vector,
    Complex, ComplexMatrix, Permutation,
};
use crate::tolerance::Tolerances;

/// Members that pairwise commute and are each diagonalizable.
#[derive(Debug, Clone)]
pub struct CommutingFamily {
    members: Vec<ComplexMatrix>,
    tol: Tolerances,
}

impl CommutingFamily {
    pub fn members(&self) -> &[ComplexMatrix] {
        &self.members
    }

    pub fn order(&self) -> usize {
        self.members[0].rows()
    }

    pub fn tolerances(&self) -> &Tolerances {
        &self.tol
    }
}

/// One node of a star-sequence block tree: a run of consecutive indices on
/// which the member of that level is constant.
#[derive(Debug, Clone, PartialEq)]
pub struct BlockNode {
    pub start: usize,
    pub len: usize,
    /// Index of the enclosing block in the previous level.
    pub parent: Option<usize>,
    pub value: Complex,
}

impl BlockNode {
    pub fn range(&self) -> std::ops::Range<usize> {
        self.start..self.start + self.len
    }
}

#[derive(Debug, Clone)]
pub struct StarSequence {
    pub diagonalizer: ComplexMatrix,
    /// `vectors[j] = Δ_{M_{j+1}}(S)`.
    pub vectors: Vec<Vec<Complex>>,
    /// `block_tree[j]` partitions `0..n` into the level-`j` blocks.
    pub block_tree: Vec<Vec<BlockNode>>,
}

impl StarSequence {
    pub fn leaf_blocks(&self) -> &[BlockNode] {
        self.block_tree.last().map_or(&[], Vec::as_slice)
    }

    pub fn leaf_sizes(&self) -> Vec<usize> {
        self.leaf_blocks().iter().map(|b| b.len).collect()
    }

    /// Checks the nesting rules of a star sequence against the stored vectors:
    /// constant on each block, distinct across sibling blocks, sizes summing to `n`.
    pub fn is_well_formed(&self) -> bool {
        let n = self.diagonalizer.rows();
        for (level, blocks) in self.block_tree.iter().enumerate() {
            if blocks.iter().map(|b| b.len).sum::<usize>() != n {
                return false;
            }
            let v = &self.vectors[level];
            for b in blocks {
                if b.range().any(|i| v[i] != b.value) {
                    return false;
                }
            }
            for (i, x) in blocks.iter().enumerate() {
                for y in &blocks[i + 1..] {
                    if x.parent == y.parent && x.value == y.value {
                        return false;
                    }
                }
            }
            if level > 0 {
                let parents = &self.block_tree[level - 1];
                for b in blocks {
                    let Some(p) = b.parent.and_then(|p| parents.get(p)) else {
                        return false;
                    };
                    if b.start < p.start || b.start + b.len > p.start + p.len {
                        return false;
                    }
                }
            }
        }
        true
    }
}

#[derive(Debug, Clone)]
pub struct CommutantDescription {
    pub diagonalizer: ComplexMatrix,
    pub star_vector: Vec<Complex>,
    pub block_sizes: Vec<usize>,
    /// `Σ kᵢ²`
    pub dimension: usize,
}

impl CommutantDescription {
    /// `S (Y₁ ⊕ … ⊕ Y_d) S⁻¹`, a member of the commutant.
    pub fn member(&self, blocks: &[ComplexMatrix]) -> Result<ComplexMatrix> {
        let sizes: Vec<usize> = blocks.iter().map(ComplexMatrix::rows).collect();
        if sizes != self.block_sizes {
            return Err(LmeError::DimensionMismatch(format!(
                "block sizes {sizes:?}, expected {:?}",
                self.block_sizes
            )));
        }
        let y = crate::matcore::direct_sum(blocks)?;
        Ok(&(&self.diagonalizer * &y) * &self.diagonalizer.inverse()?)
    }
}

pub fn validate_family(members: Vec<ComplexMatrix>, tol: &Tolerances) -> Result<CommutingFamily> {
    let first = members.first().ok_or(LmeError::EmptyList)?;
    let n = first.order()?;
    for m in &members {
        if m.order()? != n {
            return Err(LmeError::DimensionMismatch(format!(
                "family member is {}x{}, expected {n}x{n}",
                m.rows(),
                m.cols()
            )));
        }
    }
    for i in 0..members.len() {
        for j in i + 1..members.len() {
            if !commutes(&members[i], &members[j], tol.commute)? {
                return Err(LmeError::NotCommuting(i, j));
            }
        }
    }
    for (i, m) in members.iter().enumerate() {
        if !eig_decompose(m, tol)?.diagonalizable {
            return Err(LmeError::NotDiagonalizable(i));
        }
    }
    Ok(CommutingFamily {
        members,
        tol: *tol,
    })
}

/// Star vector `(λ₁𝟏_{k₁}, …, λ_d𝟏_{k_d})` with the distinct eigenvalues in
/// lexicographic order.
pub fn star_vector_of(m: &ComplexMatrix, tol: &Tolerances) -> Result<Vec<Complex>> {
    let scale = m.frobenius_norm().max(1.0);
    let (dec, clusters) = eig_clustered(m, tol, scale)?;
    if !dec.diagonalizable {
        return Err(LmeError::NotDiagonalizable(0));
    }
    Ok(clusters
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.value, c.len()))
        .collect())
}

pub fn simultaneous_diagonalizer(family: &CommutingFamily) -> Result<StarSequence> {
    let tol = family.tol;
    let n = family.order();
    let mut s = ComplexMatrix::identity(n);
    let mut vectors = Vec::with_capacity(family.members.len());
    let mut block_tree: Vec<Vec<BlockNode>> = Vec::with_capacity(family.members.len());

    for (j, m) in family.members.iter().enumerate() {
        let scale = m.frobenius_norm().max(1.0);
        let restricted = &(&s.inverse()? * m) * &s;
        let parents: Vec<BlockNode> = match block_tree.last() {
            Some(level) => level.clone(),
            None => vec![BlockNode {
                start: 0,
                len: n,
                parent: None,
                value: Complex::new(0.0, 0.0),
            }],
        };
        let mut vector = vec![Complex::new(0.0, 0.0); n];
        let mut level = Vec::new();
        for (p, parent) in parents.iter().enumerate() {
            let block = restricted.submatrix(parent.range(), parent.range());
            let (dec, clusters) = eig_clustered(&block, &tol, scale)?;
            if !dec.diagonalizable {
                return Err(LmeError::RefinementFailure {
                    member: j,
                    block_start: parent.start,
                });
            }
            let columns: Vec<usize> = parent.range().collect();
            let refined = &s.select_columns(&columns) * &dec.diagonalizer;
            s.set_columns(parent.start, &refined);
            let mut offset = parent.start;
            for cluster in clusters {
                let k = cluster.len();
                vector[offset..offset + k].fill(cluster.value);
                level.push(BlockNode {
                    start: offset,
                    len: k,
                    parent: (j > 0).then_some(p),
                    value: cluster.value,
                });
                offset += k;
            }
        }
        vectors.push(vector);
        block_tree.push(level);
    }

    let s_inv = s.inverse()?;
    for (j, (m, v)) in family.members.iter().zip(&vectors).enumerate() {
        let rebuilt = &(&s * &ComplexMatrix::from_diagonal(v)) * &s_inv;
        if rebuilt.distance(m) > tol.recon * m.frobenius_norm().max(1.0) {
            return Err(LmeError::RefinementFailure {
                member: j,
                block_start: 0,
            });
        }
    }
    Ok(StarSequence {
        diagonalizer: s,
        vectors,
        block_tree,
    })
}

/// Diagonals of `S⁻¹ Mᵢ S` for every member.
pub fn induced_vectors(
    family: &CommutingFamily,
    s: &ComplexMatrix,
    tol: f64,
) -> Result<Vec<Vec<Complex>>> {
    let n = family.order();
    if s.rows() != n || s.cols() != n {
        return Err(LmeError::DimensionMismatch(format!(
            "diagonalizer is {}x{}, family order {n}",
            s.rows(),
            s.cols()
        )));
    }
    let s_inv = s.inverse()?;
    family
        .members
        .iter()
        .enumerate()
        .map(|(i, m)| {
            let d = &(&s_inv * m) * s;
            if d.off_diagonal_norm() > tol * m.frobenius_norm() {
                Err(LmeError::NotADiagonalizer(i))
            } else {
                Ok(d.diagonal())
            }
        })
        .collect()
}

/// Finds `σ` with `seq2[j] = (seq1[j])_σ` for every `j` at once.
///
/// Entries of vector `j` match when they differ by at most
/// `tol · max(1, ‖seq1[j]‖_∞)`.
pub fn match_induced_sequences(
    seq1: &[Vec<Complex>],
    seq2: &[Vec<Complex>],
    tol: f64,
) -> Result<Permutation> {
    if seq1.len() != seq2.len() {
        return Err(LmeError::DimensionMismatch(format!(
            "sequences of lengths {} and {}",
            seq1.len(),
            seq2.len()
        )));
    }
    let n = seq1.first().map_or(0, Vec::len);
    if seq1.iter().chain(seq2).any(|v| v.len() != n) {
        return Err(LmeError::DimensionMismatch("vectors of unequal length".into()));
    }
    let gaps: Vec<f64> = seq1
        .iter()
        .map(|v| tol * v.iter().map(|z| z.norm()).fold(1.0, f64::max))
        .collect();

    let mut used = vec![false; n];
    let mut image = Vec::with_capacity(n);
    for i in 0..n {
        let mut best: Option<(usize, f64)> = None;
        for (p, taken) in used.iter().enumerate() {
            if *taken {
                continue;
            }
            let mut worst = 0.0f64;
            let mut ok = true;
            for ((v1, v2), gap) in seq1.iter().zip(seq2).zip(&gaps) {
                let d = (v1[p] - v2[i]).norm();
                if d > *gap {
                    ok = false;
                    break;
                }
                worst = worst.max(d / gap.max(f64::MIN_POSITIVE));
            }
            if ok && best.is_none_or(|(_, w)| worst < w) {
                best = Some((p, worst));
            }
        }
        let (p, _) = best.ok_or(LmeError::NoMatchingPermutation)?;
        used[p] = true;
        image.push(p);
    }
    let sigma = Permutation::new(image)?;
    debug_assert!(seq1
        .iter()
        .all(|v| permute_vector(v, &sigma).is_ok()));
    Ok(sigma)
}

pub fn commutant(m: &ComplexMatrix, tol: &Tolerances) -> Result<CommutantDescription> {
    let scale = m.frobenius_norm().max(1.0);
    let (dec, clusters) = eig_clustered(m, tol, scale)?;
    if !dec.diagonalizable {
        return Err(LmeError::NotDiagonalizable(0));
    }
    let block_sizes: Vec<usize> = clusters.iter().map(|c| c.len()).collect();
    Ok(CommutantDescription {
        diagonalizer: dec.diagonalizer,
        star_vector: clusters
            .iter()
            .flat_map(|c| std::iter::repeat_n(c.value, c.len()))
            .collect(),
        dimension: block_sizes.iter().map(|k| k * k).sum(),
        block_sizes,
    })
}

/// One eigenvalue block of `A` in the diagonalizer-free pairing.
#[derive(Debug, Clone)]
pub struct PairBlock {
    pub eigenvalue: Complex,
    pub multiplicity: usize,
    /// Eigenvalues of `(AB + βA)/λ − βI`; absent for the zero eigenvalue.
    pub combination_eigenvalues: Option<Vec<Complex>>,
    /// Eigenvalues of `B` assigned to this block, in lexicographic order.
    pub assigned: Vec<Complex>,
}

#[derive(Debug, Clone)]
pub struct InducedPair {
    pub a: Vec<Complex>,
    pub b: Vec<Complex>,
    /// The excluded set `{(λ_s b_i − λ_r b_j)/(λ_r − λ_s) : i ≠ j, r ≠ s}`, deduplicated.
    pub excluded: Vec<Complex>,
    pub beta: Complex,
    pub blocks: Vec<PairBlock>,
}

/// Multiset intersection under tolerance: every entry of `wanted` that can be
/// paired with a distinct entry of `pool`.
fn multiset_intersection(wanted: &[Complex], pool: &[Complex], gap: f64) -> Vec<Complex> {
    let mut wanted = wanted.to_vec();
    wanted.sort_by(lex_cmp);
    let mut used = vec![false; pool.len()];
    let mut out = Vec::new();
    for w in wanted {
        let best = pool
            .iter()
            .enumerate()
            .filter(|(i, z)| !used[*i] && (*z - w).norm() <= gap)
            .min_by(|(_, x), (_, y)| (*x - w).norm().total_cmp(&(*y - w).norm()));
        if let Some((i, _)) = best {
            used[i] = true;
            out.push(w);
        }
    }
    out
}

/// Removes one tolerance-match per entry of `remove` from `from`.
fn multiset_difference(from: &[Complex], remove: &[Complex], gap: f64) -> Option<Vec<Complex>> {
    let mut rest = from.to_vec();
    for r in remove {
        let pos = rest.iter().position(|z| (z - r).norm() <= gap)?;
        rest.remove(pos);
    }
    Some(rest)
}

pub fn induced_pair_without_diagonalizer(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    tol: &Tolerances,
) -> Result<InducedPair> {
    induced_pair_inner(a, b, None, tol)
}

/// As [`induced_pair_without_diagonalizer`] with a caller-chosen `β`.
pub fn induced_pair_with_beta(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    beta: Complex,
    tol: &Tolerances,
) -> Result<InducedPair> {
    induced_pair_inner(a, b, Some(beta), tol)
}

fn induced_pair_inner(
    a: &ComplexMatrix,
    b: &ComplexMatrix,
    beta: Option<Complex>,
    tol: &Tolerances,
) -> Result<InducedPair> {
    validate_family(vec![a.clone(), b.clone()], tol)?;
    let n = a.rows();
    let a_scale = a.frobenius_norm().max(1.0);
    let b_gap = tol.cluster * b.frobenius_norm().max(1.0);

    let a_clusters = cluster_values(&eigenvalues(a)?, tol.cluster * a_scale);
    let b_values: Vec<Complex> = cluster_values(&eigenvalues(b)?, b_gap)
        .iter()
        .flat_map(|c| std::iter::repeat_n(c.value, c.len()))
        .collect();

    let mut candidates = Vec::new();
    for (r, cr) in a_clusters.iter().enumerate() {
        for (s, cs) in a_clusters.iter().enumerate() {
            if r == s {
                continue;
            }
            for (i, bi) in b_values.iter().enumerate() {
                for (j, bj) in b_values.iter().enumerate() {
                    if i != j {
                        candidates.push((cs.value * bi - cr.value * bj) / (cr.value - cs.value));
                    }
                }
            }
        }
    }
    let excluded: Vec<Complex> = cluster_values(&candidates, b_gap)
        .into_iter()
        .map(|c| c.value)
        .collect();
    // −b_j is also a collision point (the i = j case), so it is kept away from β too.
    let beta = beta.unwrap_or_else(|| {
        let reach = excluded
            .iter()
            .chain(&b_values)
            .map(|z| z.norm())
            .fold(0.0, f64::max);
        Complex::new(1.0 + reach, 0.0)
    });

    let ab = a * b;
    let identity = ComplexMatrix::identity(n);
    let mut blocks = Vec::with_capacity(a_clusters.len());
    let mut claimed = Vec::new();
    let mut zero_block = None;
    for (q, cluster) in a_clusters.iter().enumerate() {
        let lambda = cluster.value;
        if lambda.norm() <= tol.cluster * a_scale {
            zero_block = Some(q);
            blocks.push(PairBlock {
                eigenvalue: lambda,
                multiplicity: cluster.len(),
                combination_eigenvalues: None,
                assigned: Vec::new(),
            });
            continue;
        }
        let combination = &(&ab + &a.scale(beta)).scale(lambda.inv()) - &identity.scale(beta);
        let combo_eigs = eigenvalues(&combination)?;
        let common = multiset_intersection(&b_values, &combo_eigs, b_gap);
        if common.len() != cluster.len() {
            return Err(LmeError::IntersectionAmbiguous {
                block: q,
                found: common.len(),
                expected: cluster.len(),
            });
        }
        claimed.extend_from_slice(&common);
        blocks.push(PairBlock {
            eigenvalue: lambda,
            multiplicity: cluster.len(),
            combination_eigenvalues: Some(combo_eigs),
            assigned: common,
        });
    }
    let rest = multiset_difference(&b_values, &claimed, b_gap);
    if let Some(q) = zero_block {
        let expected = blocks[q].multiplicity;
        let mut rest = rest.ok_or(LmeError::IntersectionAmbiguous {
            block: q,
            found: 0,
            expected,
        })?;
        if rest.len() != expected {
            return Err(LmeError::IntersectionAmbiguous {
                block: q,
                found: rest.len(),
                expected,
            });
        }
        rest.sort_by(lex_cmp);
        blocks[q].assigned = rest;
    } else if rest.is_none_or(|r| !r.is_empty()) {
        return Err(LmeError::IntersectionAmbiguous {
            block: blocks.len(),
            found: claimed.len(),
            expected: n,
        });
    }

    let a_vec = blocks
        .iter()
        .flat_map(|blk| std::iter::repeat_n(blk.eigenvalue, blk.multiplicity))
        .collect();
    let b_vec = blocks.iter().flat_map(|blk| blk.assigned.iter().copied()).collect();
    Ok(InducedPair {
        a: a_vec,
        b: b_vec,
        excluded,
        beta,
        blocks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matcore::c;

    fn real(v: &[f64]) -> Vec<Complex> {
        v.iter().map(|&x| c(x, 0.0)).collect()
    }

    fn close(u: &[Complex], v: &[Complex], tol: f64) -> bool {
        u.len() == v.len() && u.iter().zip(v).all(|(x, y)| (x - y).norm() <= tol)
    }

    fn swap_equation() -> (ComplexMatrix, ComplexMatrix) {
        let a = ComplexMatrix::from_real(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]]);
        let b = ComplexMatrix::from_real(&[&[1.0, -1.0, 0.0], &[-1.0, 1.0, 0.0], &[0.0, 0.0, 2.0]]);
        (a, b)
    }

    #[test]
    fn validate_family_cases() {
        let tol = Tolerances::default();
        let i2 = ComplexMatrix::identity(2);
        assert!(validate_family(vec![i2.clone(), i2.clone()], &tol).is_ok());

        let a = ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]]);
        let cm = ComplexMatrix::from_real(&[&[0.0, 1.0], &[-1.0, 0.0]]);
        assert_eq!(
            validate_family(vec![a, cm], &tol).unwrap_err(),
            LmeError::NotCommuting(0, 1)
        );

        let jordan = ComplexMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]]);
        assert_eq!(
            validate_family(vec![jordan, i2.clone()], &tol).unwrap_err(),
            LmeError::NotDiagonalizable(0)
        );
        assert!(matches!(
            validate_family(vec![i2, ComplexMatrix::identity(3)], &tol),
            Err(LmeError::DimensionMismatch(_))
        ));
    }

    #[test]
    fn star_vectors() {
        let tol = Tolerances::default();
        let v = star_vector_of(&ComplexMatrix::identity(3), &tol).unwrap();
        assert!(close(&v, &real(&[1.0, 1.0, 1.0]), 1e-12));

        let (a, _) = swap_equation();
        let v = star_vector_of(&a, &tol).unwrap();
        assert!(close(&v, &real(&[-1.0, 1.0, 1.0]), 1e-12));

        let d = ComplexMatrix::from_real_diagonal(&[2.0, 1.0, 2.0]);
        let v = star_vector_of(&d, &tol).unwrap();
        assert!(close(&v, &real(&[1.0, 2.0, 2.0]), 1e-12));
    }

    #[test]
    fn single_diagonal_member() {
        let tol = Tolerances::default();
        let fam = validate_family(vec![ComplexMatrix::from_real_diagonal(&[1.0, 1.0, 2.0])], &tol).unwrap();
        let seq = simultaneous_diagonalizer(&fam).unwrap();
        assert!(close(&seq.vectors[0], &real(&[1.0, 1.0, 2.0]), 1e-12));
        assert_eq!(seq.leaf_sizes(), vec![2, 1]);
        assert!(seq.is_well_formed());
        // S is block diagonal: no mixing between the two eigenspaces.
        let s = &seq.diagonalizer;
        assert!(s.get(2, 0).norm() < 1e-12 && s.get(0, 2).norm() < 1e-12);
    }

    #[test]
    fn swap_equation_family_refines_into_three_leaves() {
        let tol = Tolerances::default();
        let (a, b) = swap_equation();
        let fam = validate_family(vec![a, b], &tol).unwrap();
        let seq = simultaneous_diagonalizer(&fam).unwrap();
        assert!(seq.is_well_formed());
        assert!(close(&seq.vectors[0], &real(&[-1.0, 1.0, 1.0]), 1e-10));
        assert!(close(&seq.vectors[1], &real(&[2.0, 0.0, 2.0]), 1e-10));
        assert_eq!(seq.leaf_sizes(), vec![1, 1, 1]);

        let printed = vec![real(&[1.0, 1.0, -1.0]), real(&[0.0, 2.0, 2.0])];
        assert!(match_induced_sequences(&seq.vectors, &printed, 1e-8).is_ok());
    }

    #[test]
    fn induced_vectors_with_printed_diagonalizer() {
        let tol = Tolerances::default();
        let (a, b) = swap_equation();
        let fam = validate_family(vec![a, b], &tol).unwrap();
        let s = ComplexMatrix::from_real(&[&[1.0, 0.0, -1.0], &[1.0, 0.0, 1.0], &[0.0, 1.0, 0.0]]);
        let v = induced_vectors(&fam, &s, 1e-10).unwrap();
        assert!(close(&v[0], &real(&[1.0, 1.0, -1.0]), 1e-12));
        assert!(close(&v[1], &real(&[0.0, 2.0, 2.0]), 1e-12));

        assert_eq!(
            induced_vectors(&fam, &ComplexMatrix::identity(3), 1e-10).unwrap_err(),
            LmeError::NotADiagonalizer(0)
        );
    }

    #[test]
    fn induced_vectors_match_eig_decompose() {
        let tol = Tolerances::default();
        let m = ComplexMatrix::from_real(&[&[2.0, 1.0], &[1.0, 2.0]]);
        let dec = eig_decompose(&m, &tol).unwrap();
        let fam = validate_family(vec![m], &tol).unwrap();
        let v = induced_vectors(&fam, &dec.diagonalizer, 1e-10).unwrap();
        assert!(close(&v[0], &dec.eigenvalues, 1e-12));
    }

    #[test]
    fn matching_identical_sequences_is_identity() {
        let seq = vec![real(&[1.0, 1.0, -1.0]), real(&[0.0, 2.0, 2.0])];
        assert!(match_induced_sequences(&seq, &seq, 1e-10).unwrap().is_identity());
        let other = vec![real(&[1.0, 1.0, 1.0]), real(&[0.0, 2.0, 2.0])];
        assert_eq!(
            match_induced_sequences(&seq, &other, 1e-10).unwrap_err(),
            LmeError::NoMatchingPermutation
        );
    }

    #[test]
    fn commutant_dimensions() {
        let tol = Tolerances::default();
        assert_eq!(commutant(&ComplexMatrix::identity(4), &tol).unwrap().dimension, 16);
        assert_eq!(
            commutant(&ComplexMatrix::from_real_diagonal(&[1.0, 2.0, 3.0]), &tol)
                .unwrap()
                .dimension,
            3
        );
        let (a, _) = swap_equation();
        let desc = commutant(&a, &tol).unwrap();
        assert_eq!(desc.dimension, 5);
        assert_eq!(desc.block_sizes, vec![1, 2]);
    }

    #[test]
    fn pair_on_swap_equation() {
        let tol = Tolerances::default();
        let (a, b) = swap_equation();
        let pair = induced_pair_without_diagonalizer(&a, &b, &tol).unwrap();
        assert!(close(&pair.a, &real(&[-1.0, 1.0, 1.0]), 1e-10));
        assert!(close(&pair.b, &real(&[2.0, 0.0, 2.0]), 1e-10));
        assert!(close(&pair.excluded, &real(&[-2.0, -1.0]), 1e-10));
        assert!(pair.excluded.iter().all(|z| (z - pair.beta).norm() > 0.5));

        // β = 0 avoids the excluded set but equals −b for the zero eigenvalue of B that
        // sits in the λ = 1 block, so the λ = −1 block picks up a spurious common term.
        assert_eq!(
            induced_pair_with_beta(&a, &b, c(0.0, 0.0), &tol).unwrap_err(),
            LmeError::IntersectionAmbiguous { block: 0, found: 2, expected: 1 }
        );
        let mut combo = eigenvalues(&(&a * &b)).unwrap();
        combo.sort_by(lex_cmp);
        assert!(close(&combo, &real(&[-2.0, 0.0, 2.0]), 1e-8));
        let ones = &pair.blocks[1];
        assert!(close(&ones.assigned, &real(&[0.0, 2.0]), 1e-10));
    }

    #[test]
    fn pair_with_identity_b() {
        let tol = Tolerances::default();
        let a = ComplexMatrix::from_real(&[&[2.0, 1.0, 0.0], &[1.0, 2.0, 0.0], &[0.0, 0.0, 0.0]]);
        let pair = induced_pair_without_diagonalizer(&a, &ComplexMatrix::identity(3), &tol).unwrap();
        assert!(close(&pair.b, &real(&[1.0, 1.0, 1.0]), 1e-10));
    }
}
