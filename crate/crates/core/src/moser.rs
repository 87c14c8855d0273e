//! Moser-flow correction of ε-symplectic maps.
//!
//! With `ω_t = ω_0 + t(Φ*ω_0 − ω_0)` and `σ` a primitive of
//! `Φ*ω_0 − ω_0`, the field `X_t` solving `ι_{X_t} ω_t = −σ` has a time-1
//! flow `ψ` with `(Φ ∘ ψ)* ω_0 = ω_0`. For linear `Φ` the primitive
//! `σ = h_2(Φ*ω_0 − ω_0)` is `½ <M x, ·>` and the field is linear, so the
//! flow is a matrix ODE.

use std::f64::consts::SQRT_2;

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::norm2;
use crate::polyform::{h, omega0_form, PolyMap};
use crate::symplectic::{defect, extreme_singular_values, operator_norm, rho, SympContext};

/// Relative cutoff below which `ω_t` counts as degenerate.
const DEGENERATE_TOL: f64 = 1e-12;

/// Fixed-step classical fourth-order Runge–Kutta settings.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct FlowConfig {
    pub step_size: f64,
    pub max_defect_tol: f64,
}

impl Default for FlowConfig {
    fn default() -> Self {
        FlowConfig {
            step_size: 1e-3,
            max_defect_tol: 1e-6,
        }
    }
}

impl FlowConfig {
    pub fn validate(&self) -> Result<()> {
        if !(self.step_size > 0.0 && self.step_size <= 1e-2) {
            return Err(Error::OutOfRange {
                name: "step",
                value: self.step_size,
                range: "(0, 1e-2]",
            });
        }
        if !(self.max_defect_tol > 0.0) {
            return Err(Error::OutOfRange {
                name: "maxDefectTol",
                value: self.max_defect_tol,
                range: "(0, ∞)",
            });
        }
        Ok(())
    }

    /// Number of equal steps covering `[0, 1]`.
    pub fn steps(&self) -> usize {
        (1.0 / self.step_size).ceil() as usize
    }
}

fn solve(mt: &DMatrix<f64>, rhs: &DMatrix<f64>) -> Result<DMatrix<f64>> {
    let (lo, hi) = extreme_singular_values(mt);
    if !(lo > DEGENERATE_TOL * hi) {
        return Err(Error::Singular(lo));
    }
    mt.clone().lu().solve(rhs).ok_or(Error::Singular(lo))
}

/// `C(t) = −½ (J_0 + tM)⁻¹ M` with `M = ΦᵀJ_0Φ − J_0`, so `X_t(x) = C(t) x`.
pub fn moser_field_matrix(phi: &DMatrix<f64>, t: f64, ctx: &SympContext) -> Result<DMatrix<f64>> {
    let j0 = ctx.j0();
    let m = ctx.pullback_omega0(phi)? - &j0;
    field(&j0, &m, t)
}

fn field(j0: &DMatrix<f64>, m: &DMatrix<f64>, t: f64) -> Result<DMatrix<f64>> {
    let mt = j0 + m * t;
    Ok(solve(&mt, m)? * -0.5)
}

/// Integrates `Ẏ = C(t) Y`, `Y(0) = I` with `steps` RK4 steps.
pub fn integrate_flow(phi: &DMatrix<f64>, steps: usize, ctx: &SympContext) -> Result<DMatrix<f64>> {
    if steps == 0 {
        return Err(Error::OutOfRange {
            name: "steps",
            value: 0.0,
            range: "steps >= 1",
        });
    }
    let j0 = ctx.j0();
    let m = ctx.pullback_omega0(phi)? - &j0;
    let dim = ctx.dim();
    let mut y = DMatrix::<f64>::identity(dim, dim);
    if m.norm() == 0.0 {
        return Ok(y);
    }
    let dt = 1.0 / steps as f64;
    for s in 0..steps {
        let t = s as f64 * dt;
        let c0 = field(&j0, &m, t)?;
        let c_half = field(&j0, &m, t + 0.5 * dt)?;
        let c1 = field(&j0, &m, t + dt)?;
        let k1 = &c0 * &y;
        let k2 = &c_half * (&y + &k1 * (0.5 * dt));
        let k3 = &c_half * (&y + &k2 * (0.5 * dt));
        let k4 = &c1 * (&y + &k3 * dt);
        y += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
    }
    Ok(y)
}

/// One inequality of the correction, with `margin = bound − value`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundCheck {
    pub value: f64,
    pub bound: f64,
    pub margin: f64,
    pub pass: bool,
}

impl BoundCheck {
    fn upper(value: f64, bound: f64, tol: f64) -> Self {
        let margin = bound - value;
        BoundCheck {
            value,
            bound,
            margin,
            pass: margin >= -tol,
        }
    }

    fn lower(value: f64, bound: f64, tol: f64) -> Self {
        let margin = value - bound;
        BoundCheck {
            value,
            bound,
            margin,
            pass: margin >= -tol,
        }
    }
}

/// Tolerance on the displacement and sandwich bounds.
pub const BOUND_TOL: f64 = 1e-6;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct SymplectifyReport {
    /// Rows of `ψ`.
    pub psi: Vec<Vec<f64>>,
    pub eps: f64,
    /// `√(1 − √2 ε)`.
    pub rho: f64,
    pub input_defect: f64,
    pub steps: usize,
    pub step_size: f64,
    /// `defect(Φ ψ)` against `maxDefectTol`.
    pub residual_defect: BoundCheck,
    /// `‖ψ − I‖_2` against `ρ⁻¹ − 1`.
    pub displacement: BoundCheck,
    /// Largest column norm of `ψ − I` against `ρ⁻¹ − 1`.
    pub column_displacement: BoundCheck,
    /// `σ_min(ψ) ≥ ρ`.
    pub sandwich_lower: BoundCheck,
    /// `σ_max(ψ) ≤ ρ⁻¹`.
    pub sandwich_upper: BoundCheck,
    pub pass: bool,
}

impl SymplectifyReport {
    pub fn psi_matrix(&self) -> DMatrix<f64> {
        let dim = self.psi.len();
        DMatrix::from_fn(dim, dim, |i, j| self.psi[i][j])
    }
}

/// Builds `ψ` for a linear `Φ` with `defect(Φ) ≤ eps < 1/√2` and checks the
/// residual, displacement and sandwich bounds.
pub fn symplectify(
    phi: &DMatrix<f64>,
    eps: f64,
    config: &FlowConfig,
    ctx: &SympContext,
) -> Result<SymplectifyReport> {
    config.validate()?;
    let rho = rho(eps, ctx.n(), true)?;
    let input_defect = defect(phi, ctx)?;
    if input_defect > eps + 1e-12 {
        return Err(Error::Precondition(format!(
            "defect {input_defect} exceeds eps {eps}"
        )));
    }
    let steps = config.steps();
    let psi = integrate_flow(phi, steps, ctx)?;
    let dim = ctx.dim();
    let id = DMatrix::<f64>::identity(dim, dim);
    let diff = &psi - &id;
    let bound = 1.0 / rho - 1.0;
    let col_max = (0..dim)
        .map(|j| diff.column(j).norm())
        .fold(0.0, f64::max);
    let (lo, hi) = extreme_singular_values(&psi);
    let residual = defect(&(phi * &psi), ctx)?;
    let residual_defect = BoundCheck::upper(residual, config.max_defect_tol, 0.0);
    let displacement = BoundCheck::upper(operator_norm(&diff), bound, BOUND_TOL);
    let column_displacement = BoundCheck::upper(col_max, bound, BOUND_TOL);
    let sandwich_lower = BoundCheck::lower(lo, rho, BOUND_TOL);
    let sandwich_upper = BoundCheck::upper(hi, 1.0 / rho, BOUND_TOL);
    let pass = [
        residual_defect,
        displacement,
        column_displacement,
        sandwich_lower,
        sandwich_upper,
    ]
    .iter()
    .all(|b| b.pass);
    Ok(SymplectifyReport {
        psi: (0..dim)
            .map(|i| psi.row(i).iter().copied().collect())
            .collect(),
        eps,
        rho,
        input_defect,
        steps,
        step_size: 1.0 / steps as f64,
        residual_defect,
        displacement,
        column_displacement,
        sandwich_lower,
        sandwich_upper,
        pass,
    })
}

/// `‖ψ_h − ψ_{h/2}‖ / ‖ψ_{h/2} − ψ_{h/4}‖` with `h = 1/coarse_steps`; about
/// 16 for a fourth-order method.
pub fn convergence_ratio(phi: &DMatrix<f64>, coarse_steps: usize, ctx: &SympContext) -> Result<f64> {
    let a = integrate_flow(phi, coarse_steps, ctx)?;
    let b = integrate_flow(phi, 2 * coarse_steps, ctx)?;
    let c = integrate_flow(phi, 4 * coarse_steps, ctx)?;
    Ok((&a - &b).norm() / (&b - &c).norm())
}

/// A single trajectory of the pointwise flow.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct Trajectory {
    pub start: Vec<f64>,
    pub end: Vec<f64>,
    /// Smallest `‖x(t)‖ − ‖x(0)‖(1 − √2εt)^{√(2n)}` along the grid.
    pub radius_lower_margin: f64,
    /// Smallest `‖x(0)‖(1 − √2εt)^{−√(2n)} − ‖x(t)‖` along the grid.
    pub radius_upper_margin: f64,
    pub displacement: BoundCheck,
    pub pass: bool,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct PointwiseReport {
    pub eps: f64,
    pub steps: usize,
    pub trajectories: Vec<Trajectory>,
    pub pass: bool,
}

/// Integrates `ẋ = X_t(x)` for a polynomial map, solving
/// `ι_{X_t} ω_t(x) = −σ(x)` with `σ = h_2(φ*ω_0 − ω_0)` at each stage.
pub fn symplectify_polynomial_pointwise(
    phi: &PolyMap,
    points: &[Vec<f64>],
    eps: f64,
    config: &FlowConfig,
    ctx: &SympContext,
) -> Result<PointwiseReport> {
    config.validate()?;
    rho(eps, ctx.n(), false)?;
    let dim = ctx.dim();
    if phi.dim() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: phi.dim(),
        });
    }
    let beta = phi.pullback_omega0()?.sub(&omega0_form(ctx.n())?)?;
    let sigma = h(&beta)?;
    let beta_f = beta.to_float();
    let sigma_f = sigma.to_float();
    let j0 = ctx.j0();
    let velocity = |t: f64, x: &DVector<f64>| -> Result<DVector<f64>> {
        let b = beta_f.evaluate(x.as_slice()).to_skew_matrix()?;
        let s = DVector::from_vec(sigma_f.evaluate(x.as_slice()).to_dense());
        let mt = &j0 + b * t;
        let rhs = DMatrix::from_column_slice(dim, 1, (-s).as_slice());
        Ok(solve(&mt, &rhs)?.column(0).into_owned())
    };
    let steps = config.steps();
    let dt = 1.0 / steps as f64;
    let expo = (2.0 * ctx.n() as f64).sqrt();
    let tol = 1e-9;
    let mut trajectories = Vec::with_capacity(points.len());
    for p in points {
        if p.len() != dim {
            return Err(Error::DimensionMismatch {
                expected: dim,
                found: p.len(),
            });
        }
        let x0 = DVector::from_column_slice(p);
        let local = norm2(&beta_f.evaluate(p));
        if local > eps + 1e-12 {
            return Err(Error::Precondition(format!(
                "pointwise defect {local} exceeds eps {eps} at {p:?}"
            )));
        }
        let r0 = x0.norm();
        let mut x = x0.clone();
        let mut lower = f64::INFINITY;
        let mut upper = f64::INFINITY;
        for s in 0..steps {
            let t = s as f64 * dt;
            let k1 = velocity(t, &x)?;
            let k2 = velocity(t + 0.5 * dt, &(&x + &k1 * (0.5 * dt)))?;
            let k3 = velocity(t + 0.5 * dt, &(&x + &k2 * (0.5 * dt)))?;
            let k4 = velocity(t + dt, &(&x + &k3 * dt))?;
            x += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (dt / 6.0);
            let t1 = (s + 1) as f64 * dt;
            let base = 1.0 - SQRT_2 * eps * t1;
            let r = x.norm();
            lower = lower.min(r - r0 * base.powf(expo));
            upper = upper.min(r0 * base.powf(-expo) - r);
        }
        let bound = r0 * ((1.0 - SQRT_2 * eps).powf(-expo) - 1.0);
        let displacement = BoundCheck::upper((&x - &x0).norm(), bound, tol);
        let pass = lower >= -tol && upper >= -tol && displacement.pass;
        trajectories.push(Trajectory {
            start: p.clone(),
            end: x.iter().copied().collect(),
            radius_lower_margin: lower,
            radius_upper_margin: upper,
            displacement,
            pass,
        });
    }
    let pass = trajectories.iter().all(|t| t.pass);
    Ok(PointwiseReport {
        eps,
        steps,
        trajectories,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::random::random_eps_symplectic;
    use crate::symplectic::plane_scaling;

    #[test]
    fn field_vanishes_for_symplectic_maps() {
        let ctx = SympContext::new(2).unwrap();
        let c = moser_field_matrix(&DMatrix::identity(4, 4), 0.3, &ctx).unwrap();
        assert_eq!(c.norm(), 0.0);
    }

    #[test]
    fn field_for_plane_scaling() {
        let ctx = SympContext::new(2).unwrap();
        let cs = [1.2, 0.9];
        let phi = plane_scaling(&cs);
        for t in [0.0, 0.4, 1.0] {
            let c = moser_field_matrix(&phi, t, &ctx).unwrap();
            for (p, &cj) in cs.iter().enumerate() {
                let g = cj * cj - 1.0;
                let expected = -0.5 * g / (1.0 + t * g);
                assert!((c[(2 * p, 2 * p)] - expected).abs() < 1e-14);
                assert!((c[(2 * p + 1, 2 * p + 1)] - expected).abs() < 1e-14);
                assert!(c[(2 * p, 2 * p + 1)].abs() < 1e-14);
            }
        }
    }

    #[test]
    fn field_at_time_zero() {
        let ctx = SympContext::new(2).unwrap();
        let phi = random_eps_symplectic(2, 0.1, 4).unwrap();
        let j0 = ctx.j0();
        let m = ctx.pullback_omega0(&phi).unwrap() - &j0;
        let expected = j0.clone().try_inverse().unwrap() * m * -0.5;
        let c = moser_field_matrix(&phi, 0.0, &ctx).unwrap();
        assert!((c - expected).norm() < 1e-14);
    }

    #[test]
    fn identity_is_fixed() {
        let ctx = SympContext::new(3).unwrap();
        let r = symplectify(&DMatrix::identity(6, 6), 0.0, &FlowConfig::default(), &ctx).unwrap();
        assert_eq!(r.psi_matrix(), DMatrix::identity(6, 6));
        assert_eq!(r.residual_defect.value, 0.0);
        assert!(r.pass);
    }

    #[test]
    fn plane_scaling_is_undone() {
        let ctx = SympContext::new(2).unwrap();
        let cs = [1.1, 0.95];
        let phi = plane_scaling(&cs);
        let eps = defect(&phi, &ctx).unwrap();
        let r = symplectify(&phi, eps, &FlowConfig::default(), &ctx).unwrap();
        let expected = plane_scaling(&[1.0 / cs[0], 1.0 / cs[1]]);
        assert!((r.psi_matrix() - expected).norm() < 1e-6);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn random_map_residual() {
        let ctx = SympContext::new(2).unwrap();
        for seed in 0..5 {
            let phi = random_eps_symplectic(2, 0.05, seed).unwrap();
            let r = symplectify(&phi, 0.05, &FlowConfig::default(), &ctx).unwrap();
            assert!(r.residual_defect.value <= 1e-6);
            assert!(r.pass);
        }
    }

    #[test]
    fn rejects_bad_input() {
        let ctx = SympContext::new(2).unwrap();
        let phi = random_eps_symplectic(2, 0.1, 1).unwrap();
        assert!(symplectify(&phi, 0.05, &FlowConfig::default(), &ctx).is_err());
        let bad = FlowConfig {
            step_size: 0.1,
            ..FlowConfig::default()
        };
        assert!(symplectify(&phi, 0.1, &bad, &ctx).is_err());
    }

    #[test]
    fn pointwise_identity_is_constant() {
        let ctx = SympContext::new(1).unwrap();
        let pts = vec![vec![0.3, -0.2], vec![0.0, 0.5]];
        let config = FlowConfig {
            step_size: 1e-2,
            ..FlowConfig::default()
        };
        let r = symplectify_polynomial_pointwise(&PolyMap::identity(2), &pts, 0.0, &config, &ctx)
            .unwrap();
        for (t, p) in r.trajectories.iter().zip(&pts) {
            assert_eq!(&t.end, p);
        }
        assert!(r.pass);
    }

    #[test]
    fn pointwise_matches_matrix_flow() {
        let ctx = SympContext::new(2).unwrap();
        let phi = random_eps_symplectic(2, 0.05, 9).unwrap();
        let config = FlowConfig {
            step_size: 1e-2,
            ..FlowConfig::default()
        };
        let psi = integrate_flow(&phi, config.steps(), &ctx).unwrap();
        let pts = vec![vec![0.1, 0.2, -0.3, 0.05], vec![-0.4, 0.0, 0.1, 0.2]];
        let r = symplectify_polynomial_pointwise(
            &PolyMap::linear(&phi).unwrap(),
            &pts,
            0.05,
            &config,
            &ctx,
        )
        .unwrap();
        for (t, p) in r.trajectories.iter().zip(&pts) {
            let expected = &psi * DVector::from_column_slice(p);
            let got = DVector::from_column_slice(&t.end);
            assert!((got - expected).norm() < 1e-8);
        }
        assert!(r.pass);
    }

    #[test]
    fn fourth_order_convergence() {
        let ctx = SympContext::new(2).unwrap();
        let phi = plane_scaling(&[1.25, 0.8]);
        let ratio = convergence_ratio(&phi, 8, &ctx).unwrap();
        assert!((ratio - 16.0).abs() < 2.0, "{ratio}");
    }
}
