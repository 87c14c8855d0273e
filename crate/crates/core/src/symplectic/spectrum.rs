use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{ensure_nonsingular, SympContext};
use crate::error::Result;

/// Symplectic spectrum `r_1 ≤ … ≤ r_n` of the ellipsoid `E(A) = A·B_1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Spectrum {
    pub radii: Vec<f64>,
    /// `σ_max(A) / σ_min(A)`.
    pub condition: f64,
}

impl Spectrum {
    /// The linear symplectic width `r_1`.
    pub fn width(&self) -> f64 {
        self.radii[0]
    }
}

/// `r_j = √α_j` where `±iα_j` are the eigenvalues of `M = AᵀJ_0A`.
///
/// The `α_j²` are read off the symmetric eigenproblem for `MᵀM = -M²`, where
/// each appears twice.
pub fn symplectic_spectrum(a: &DMatrix<f64>, ctx: &SympContext) -> Result<Spectrum> {
    ctx.check_matrix(a)?;
    let (lo, hi) = ensure_nonsingular(a)?;
    let m = a.transpose() * ctx.j0() * a;
    let s = m.tr_mul(&m);
    let s = (&s + s.transpose()) * 0.5;
    let mut eig: Vec<f64> = s.symmetric_eigenvalues().iter().copied().collect();
    eig.sort_by(f64::total_cmp);
    let radii = eig
        .chunks(2)
        .map(|pair| (0.5 * (pair[0] + pair[1])).max(0.0).sqrt().sqrt())
        .collect();
    Ok(Spectrum {
        radii,
        condition: hi / lo,
    })
}

/// Capacity `π r_1²` of `E(A)`.
pub fn ellipsoid_capacity(a: &DMatrix<f64>, ctx: &SympContext) -> Result<f64> {
    let r1 = symplectic_spectrum(a, ctx)?.width();
    Ok(std::f64::consts::PI * r1 * r1)
}

#[cfg(test)]
mod tests {
    use super::super::plane_scaling;
    use super::*;
    use crate::error::Error;
    use std::f64::consts::PI;

    #[test]
    fn identity_has_unit_spectrum() {
        let ctx = SympContext::new(3).unwrap();
        let s = symplectic_spectrum(&DMatrix::identity(6, 6), &ctx).unwrap();
        for r in &s.radii {
            assert!((r - 1.0).abs() < 1e-14);
        }
        assert!((s.condition - 1.0).abs() < 1e-14);
    }

    #[test]
    fn diagonal_and_scaled() {
        let ctx = SympContext::new(2).unwrap();
        let s = symplectic_spectrum(&plane_scaling(&[2.0, 3.0]), &ctx).unwrap();
        assert!((s.radii[0] - 2.0).abs() < 1e-13 && (s.radii[1] - 3.0).abs() < 1e-13);
        let s = symplectic_spectrum(&plane_scaling(&[3.0, 2.0]), &ctx).unwrap();
        assert!((s.radii[0] - 2.0).abs() < 1e-13, "radii come out sorted");
        let a = DMatrix::identity(4, 4) * 0.7;
        let s = symplectic_spectrum(&a, &ctx).unwrap();
        assert!(s.radii.iter().all(|r| (r - 0.7).abs() < 1e-14));
    }

    #[test]
    fn capacities() {
        let ctx = SympContext::new(2).unwrap();
        let c = ellipsoid_capacity(&DMatrix::identity(4, 4), &ctx).unwrap();
        assert!((c - PI).abs() < 1e-13);
        let c = ellipsoid_capacity(&(DMatrix::identity(4, 4) * 1.5), &ctx).unwrap();
        assert!((c - 2.25 * PI).abs() < 1e-12);
        let c = ellipsoid_capacity(&plane_scaling(&[2.0, 3.0]), &ctx).unwrap();
        assert!((c - 4.0 * PI).abs() < 1e-12);
    }

    #[test]
    fn singular_is_rejected() {
        let ctx = SympContext::new(2).unwrap();
        let a = plane_scaling(&[0.0, 1.0]);
        assert!(matches!(symplectic_spectrum(&a, &ctx), Err(Error::Singular(_))));
    }
}
