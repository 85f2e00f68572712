//! Centralized numeric thresholds.
//!
//! Every comparison in the crate that needs a cutoff reads it from a
//! [`Tolerances`] record, so calibration happens in one place.

/// Tolerance knobs shared by construction and reporting code.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Accepted band around 1 for the Hermitian norm of a representative
    /// vector. Inputs outside the band are rejected, not renormalized.
    pub unit_norm: f64,
    /// Minimum |det| (or wedge norm) below which a family counts as
    /// dependent.
    pub indep: f64,
    /// Pairings `v_i . conj(v_j)` with modulus at or below this count as
    /// Hermitian-orthogonal.
    pub orth: f64,
    /// Relative slack allowed when checking the determinant bounds.
    pub sandwich_slack: f64,
    /// Distances within this of the minimum count as tied with it.
    pub near_equality: f64,
}

impl Tolerances {
    /// The calibrated defaults.
    pub const fn standard() -> Self {
        Self {
            unit_norm: 1e-12,
            indep: 1e-10,
            orth: 1e-10,
            sandwich_slack: 1e-9,
            near_equality: 1e-9,
        }
    }
}

impl Default for Tolerances {
    fn default() -> Self {
        Self::standard()
    }
}
