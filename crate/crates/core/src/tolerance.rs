/// Numerical thresholds shared by every module.
///
/// All thresholds are relative; each check documents the scale it multiplies.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Zero test for relevant-matrix entries, induced `c` components and scalar daggers.
    pub zero: f64,
    /// Eigenvalue clustering gap, relative to `max(1, ‖M‖_F)`.
    pub cluster: f64,
    /// Residual bound for emitted solutions, relative to `max(1, ‖C‖_F)`.
    pub res: f64,
    /// Singular values below `rank * σ_max` are treated as zero.
    pub rank: f64,
    /// Reconstruction bound for decompositions, relative to `max(1, ‖M‖_F)`.
    pub recon: f64,
    /// Commutator and normality bound.
    pub commute: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            zero: 1e-10,
            cluster: 1e-8,
            res: 1e-8,
            rank: 1e-10,
            recon: 1e-8,
            commute: 1e-10,
        }
    }
}

impl Tolerances {
    /// Every threshold set to the same value.
    pub fn uniform(value: f64) -> Self {
        Tolerances {
            zero: value,
            cluster: value,
            res: value,
            rank: value,
            recon: value,
            commute: value,
        }
    }
}
