#![allow(dead_code)]

use lme_core::lme::EquationSpec;
use lme_core::{c, ComplexMatrix};

pub fn swap_a() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[0.0, 1.0, 0.0], &[1.0, 0.0, 0.0], &[0.0, 0.0, 1.0]])
}

pub fn swap_b() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[1.0, -1.0, 0.0], &[-1.0, 1.0, 0.0], &[0.0, 0.0, 2.0]])
}

/// `AXB + 2X = O₃`
pub fn swap_equation() -> EquationSpec {
    let i = ComplexMatrix::identity(3);
    EquationSpec::new(
        vec![swap_a(), i.scale(c(2.0, 0.0))],
        vec![swap_b(), i],
        ComplexMatrix::zeros(3, 3),
    )
    .unwrap()
}

pub fn jordan() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[1.0, 1.0], &[0.0, 1.0]])
}

/// `AXA − X = I₂` with a Jordan block `A`.
pub fn jordan_stein() -> EquationSpec {
    let i = ComplexMatrix::identity(2);
    EquationSpec::new(vec![jordan(), -&i], vec![jordan(), i.clone()], i).unwrap()
}

pub fn reflection_stein_a() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[1.0, 1.0], &[1.0, -1.0]])
}

pub fn reflection_stein_c() -> ComplexMatrix {
    ComplexMatrix::from_real(&[&[0.0, 1.0], &[-1.0, 0.0]])
}

/// `AXA − 2X = C`
pub fn reflection_stein() -> EquationSpec {
    let i = ComplexMatrix::identity(2);
    EquationSpec::new(
        vec![reflection_stein_a(), i.scale(c(-2.0, 0.0))],
        vec![reflection_stein_a(), i],
        reflection_stein_c(),
    )
    .unwrap()
}

/// Homogeneous `MX − XM = 0`.
pub fn commutator_equation(m: &ComplexMatrix) -> EquationSpec {
    let n = m.rows();
    let i = ComplexMatrix::identity(n);
    EquationSpec::new(vec![m.clone(), -&i], vec![i, m.clone()], ComplexMatrix::zeros(n, n)).unwrap()
}
