use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{defect, ensure_nonsingular, extreme_singular_values, SympContext, TwoForm, SINGULAR_TOL};
use crate::error::{Error, Result};

/// `|ω_0(u_j, v_j)|` below this counts as sign zero.
const SIGN_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    SymplecticLike,
    AntiSymplecticLike,
    Mixed,
    Singular,
}

/// Conformality `λ_j` and complex-linearity `μ_j` data of a linear map.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LambdaMuReport {
    pub lambdas: Vec<f64>,
    pub mus: Vec<f64>,
    pub signs: Vec<i8>,
    pub classification: Classification,
}

/// Runs the standard form on `Φ* ω_0` with basis `u_j, v_j` and reports
/// `λ_j`, `μ_j = √|ω_0(u_j, v_j)|` and `σ_j = sign ω_0(u_j, v_j)`.
///
/// A singular `Φ` is flagged through the classification, not as an error.
pub fn lambda_mu_invariants(phi: &DMatrix<f64>, ctx: &SympContext) -> Result<LambdaMuReport> {
    let pulled = TwoForm::new(ctx.pullback_omega0(phi)?)?;
    let sf = pulled.standard_form();
    let mut mus = Vec::with_capacity(ctx.n());
    let mut signs = Vec::with_capacity(ctx.n());
    for j in 0..sf.weights().len() {
        let w = ctx.omega0_eval(sf.u(j), sf.v(j));
        mus.push(w.abs().sqrt());
        signs.push(if w > SIGN_TOL {
            1
        } else if w < -SIGN_TOL {
            -1
        } else {
            0
        });
    }
    let (lo, hi) = extreme_singular_values(phi);
    let singular = !(lo > SINGULAR_TOL * hi) || sf.rank() < ctx.dim();
    let classification = if singular {
        Classification::Singular
    } else if signs.iter().all(|&s| s == 1) {
        Classification::SymplecticLike
    } else if signs.iter().all(|&s| s == -1) {
        Classification::AntiSymplecticLike
    } else {
        Classification::Mixed
    };
    Ok(LambdaMuReport {
        lambdas: sf.lambdas(),
        mus,
        signs,
        classification,
    })
}

/// Both sides of `‖Φ*ω_0 − ω_0‖_2² = Σ_j (λ_j² − σ_j μ_j²)² + n − Σ_j μ_j⁴`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DecompositionCheck {
    pub lhs: f64,
    pub rhs: f64,
    pub rel_error: f64,
}

pub fn defect_decomposition_check(
    phi: &DMatrix<f64>,
    ctx: &SympContext,
) -> Result<DecompositionCheck> {
    ctx.check_matrix(phi)?;
    ensure_nonsingular(phi)?;
    let report = lambda_mu_invariants(phi, ctx)?;
    if report.classification == Classification::Singular {
        return Err(Error::Singular(0.0));
    }
    let d = defect(phi, ctx)?;
    let lhs = d * d;
    let mut rhs = ctx.n() as f64;
    for ((l, mu), s) in report.lambdas.iter().zip(&report.mus).zip(&report.signs) {
        let diff = l * l - f64::from(*s) * mu * mu;
        rhs += diff * diff - mu.powi(4);
    }
    let scale = lhs.abs().max(rhs.abs());
    let rel_error = if scale == 0.0 {
        0.0
    } else {
        (lhs - rhs).abs() / scale
    };
    Ok(DecompositionCheck {
        lhs,
        rhs,
        rel_error,
    })
}

#[cfg(test)]
mod tests {
    use super::super::{plane_scaling, plane_swap, shear_example};
    use super::*;

    #[test]
    fn symplectic_map() {
        let ctx = SympContext::new(2).unwrap();
        let r = lambda_mu_invariants(&DMatrix::identity(4, 4), &ctx).unwrap();
        assert_eq!(r.classification, Classification::SymplecticLike);
        assert!(r.lambdas.iter().all(|l| (l - 1.0).abs() < 1e-14));
        assert!(r.mus.iter().all(|m| (m - 1.0).abs() < 1e-14));
        assert_eq!(r.signs, vec![1, 1]);
    }

    #[test]
    fn anti_symplectic_map() {
        let ctx = SympContext::new(3).unwrap();
        let r = lambda_mu_invariants(&plane_swap(&ctx), &ctx).unwrap();
        assert_eq!(r.classification, Classification::AntiSymplecticLike);
        assert_eq!(r.signs, vec![-1, -1, -1]);
    }

    #[test]
    fn plane_scaling_lambdas() {
        let ctx = SympContext::new(3).unwrap();
        let r = lambda_mu_invariants(&plane_scaling(&[1.5, 0.5, 2.0]), &ctx).unwrap();
        let expected = [0.5, 1.5, 2.0];
        for (l, e) in r.lambdas.iter().zip(expected) {
            assert!((l - e).abs() < 1e-13);
        }
        assert!(r.mus.iter().all(|m| (m - 1.0).abs() < 1e-13));
    }

    #[test]
    fn mixed_and_singular() {
        let ctx = SympContext::new(2).unwrap();
        // flip only the first plane
        let mut m = DMatrix::identity(4, 4);
        m[(0, 0)] = 0.0;
        m[(1, 1)] = 0.0;
        m[(0, 1)] = 1.0;
        m[(1, 0)] = 1.0;
        let r = lambda_mu_invariants(&m, &ctx).unwrap();
        assert_eq!(r.classification, Classification::Mixed);
        let s = plane_scaling(&[0.0, 1.0]);
        let r = lambda_mu_invariants(&s, &ctx).unwrap();
        assert_eq!(r.classification, Classification::Singular);
        assert!(defect_decomposition_check(&s, &ctx).is_err());
    }

    #[test]
    fn decomposition_examples() {
        let ctx = SympContext::new(2).unwrap();
        let c = defect_decomposition_check(&DMatrix::identity(4, 4), &ctx).unwrap();
        assert_eq!((c.lhs, c.rel_error), (0.0, 0.0));
        assert!(c.rhs.abs() < 1e-14);
        let c = defect_decomposition_check(&shear_example(2, 0.1, 2.0).unwrap(), &ctx).unwrap();
        assert!((c.lhs - 0.01).abs() < 1e-14);
        assert!((c.rhs - 0.01).abs() < 1e-12);
        assert!(c.rel_error < 1e-8);
    }

    #[test]
    fn decomposition_with_mixed_signs() {
        let ctx = SympContext::new(2).unwrap();
        let mut m = plane_scaling(&[1.2, 0.9]);
        m.swap_rows(0, 1);
        let c = defect_decomposition_check(&m, &ctx).unwrap();
        assert!(c.rel_error < 1e-12, "{c:?}");
    }
}
