use crate::error::{LmeError, Result};
use crate::matcore::ComplexMatrix;

/// `Σⱼ Aⱼ X Bⱼ = C` with `k ≥ 1` terms of square `n x n` matrices.
#[derive(Debug, Clone)]
pub struct EquationSpec {
    a_list: Vec<ComplexMatrix>,
    b_list: Vec<ComplexMatrix>,
    rhs: ComplexMatrix,
}

impl EquationSpec {
    pub fn new(
        a_list: Vec<ComplexMatrix>,
        b_list: Vec<ComplexMatrix>,
        rhs: ComplexMatrix,
    ) -> Result<Self> {
        if a_list.is_empty() {
            return Err(LmeError::EmptyList);
        }
        if a_list.len() != b_list.len() {
            return Err(LmeError::DimensionMismatch(format!(
                "{} A-matrices but {} B-matrices",
                a_list.len(),
                b_list.len()
            )));
        }
        let n = rhs.order()?;
        for m in a_list.iter().chain(&b_list) {
            if m.order()? != n {
                return Err(LmeError::DimensionMismatch(format!(
                    "parameter is {}x{}, right-hand side is {n}x{n}",
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(EquationSpec {
            a_list,
            b_list,
            rhs,
        })
    }

    pub fn a_list(&self) -> &[ComplexMatrix] {
        &self.a_list
    }

    pub fn b_list(&self) -> &[ComplexMatrix] {
        &self.b_list
    }

    pub fn rhs(&self) -> &ComplexMatrix {
        &self.rhs
    }

    pub fn n(&self) -> usize {
        self.rhs.rows()
    }

    pub fn k(&self) -> usize {
        self.a_list.len()
    }

    /// `Σⱼ Aⱼ X Bⱼ`.
    pub fn apply(&self, x: &ComplexMatrix) -> ComplexMatrix {
        let n = self.n();
        self.a_list
            .iter()
            .zip(&self.b_list)
            .fold(ComplexMatrix::zeros(n, n), |acc, (a, b)| acc + &(&(a * x) * b))
    }

    /// `‖Σⱼ Aⱼ X Bⱼ − C‖_F`.
    pub fn residual(&self, x: &ComplexMatrix) -> f64 {
        self.apply(x).distance(&self.rhs)
    }

    /// `Σⱼ Aⱼ Bⱼ`, the operator of the attached standard equation.
    pub fn standard_operator(&self) -> ComplexMatrix {
        let n = self.n();
        self.a_list
            .iter()
            .zip(&self.b_list)
            .fold(ComplexMatrix::zeros(n, n), |acc, (a, b)| acc + &(a * b))
    }

    /// `Σⱼ ‖Aⱼ‖_F ‖Bⱼ‖_F`, the magnitude the terms are summed at.
    pub fn term_scale(&self) -> f64 {
        self.a_list
            .iter()
            .zip(&self.b_list)
            .map(|(a, b)| a.frobenius_norm() * b.frobenius_norm())
            .sum()
    }

    /// `Σⱼ AⱼBⱼ`, replaced by zero when it cancels below `tol · term_scale`.
    pub fn standard_operator_at(&self, tol: f64) -> ComplexMatrix {
        let m = self.standard_operator();
        if m.frobenius_norm() <= tol * self.term_scale() {
            ComplexMatrix::zeros(self.n(), self.n())
        } else {
            m
        }
    }

    /// `(Σⱼ AⱼBⱼ) X = C` as a one-term equation.
    pub fn standard_equation(&self) -> EquationSpec {
        EquationSpec {
            a_list: vec![self.standard_operator()],
            b_list: vec![ComplexMatrix::identity(self.n())],
            rhs: self.rhs.clone(),
        }
    }

    /// The parameter set `(A₁, …, A_k, B₁, …, B_k, C)` in that order.
    pub fn parameters(&self) -> Vec<ComplexMatrix> {
        self.a_list
            .iter()
            .chain(&self.b_list)
            .chain(std::iter::once(&self.rhs))
            .cloned()
            .collect()
    }

    /// Every parameter replaced by `W⁻¹ M W`.
    pub fn conjugated(&self, w: &ComplexMatrix) -> Result<EquationSpec> {
        let w_inv = w.inverse()?;
        let map = |m: &ComplexMatrix| &(&w_inv * m) * w;
        EquationSpec::new(
            self.a_list.iter().map(map).collect(),
            self.b_list.iter().map(map).collect(),
            map(&self.rhs),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn construction_checks() {
        let i = ComplexMatrix::identity(2);
        assert_eq!(
            EquationSpec::new(vec![], vec![], i.clone()).unwrap_err(),
            LmeError::EmptyList
        );
        assert!(EquationSpec::new(vec![i.clone()], vec![], i.clone()).is_err());
        assert!(EquationSpec::new(vec![ComplexMatrix::identity(3)], vec![i.clone()], i.clone()).is_err());
        let spec = EquationSpec::new(vec![i.clone(), i.clone()], vec![i.clone(), i.clone()], i).unwrap();
        assert_eq!((spec.n(), spec.k()), (2, 2));
        assert_eq!(spec.parameters().len(), 5);
    }

    #[test]
    fn apply_matches_hand_expansion() {
        let a = ComplexMatrix::from_real(&[&[1.0, 2.0], &[0.0, 1.0]]);
        let b = ComplexMatrix::from_real(&[&[0.0, 1.0], &[1.0, 0.0]]);
        let x = ComplexMatrix::from_real(&[&[1.0, 0.0], &[3.0, -1.0]]);
        let spec = EquationSpec::new(vec![a.clone()], vec![b.clone()], ComplexMatrix::zeros(2, 2)).unwrap();
        assert_eq!(spec.apply(&x), &(&a * &x) * &b);
    }
}
