use nalgebra::{DMatrix, DVector};

use super::{defect, SympContext};
use crate::error::{Error, Result};

/// A symplectic `Ψ` squeezing a bounded piece of the hyperplane `u^⊥` into
/// the cylinder `B_R² × R^{2n-2}`.
///
/// With `n̂ = u/‖u‖` and `ŵ = J_0 n̂ ∈ u^⊥`, the points `x ∈ u^⊥` with
/// `|<x, ŵ>| ≤ bound` are mapped so that their first coordinate pair is
/// `(0, (R/bound)<x, ŵ>)`. The symplectic basis sends `u_1 = (R/bound) n̂`,
/// `v_1 = (bound/R) ŵ` to the first standard pair and completes it with a
/// unitary frame of `span(n̂, ŵ)^⊥`.
pub fn hyperplane_squeeze(
    u: &DVector<f64>,
    bound: f64,
    radius: f64,
    ctx: &SympContext,
) -> Result<DMatrix<f64>> {
    let dim = ctx.dim();
    if u.len() != dim {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: u.len(),
        });
    }
    let norm = u.norm();
    if !(norm > 0.0) {
        return Err(Error::Precondition("zero normal vector".into()));
    }
    if !(bound > 0.0) {
        return Err(Error::OutOfRange {
            name: "bound",
            value: bound,
            range: "(0, ∞)",
        });
    }
    if !(radius > 0.0) {
        return Err(Error::OutOfRange {
            name: "R",
            value: radius,
            range: "(0, ∞)",
        });
    }

    let n_hat = u / norm;
    let w_hat = ctx.apply_j0(&n_hat);
    let mut frame = vec![n_hat.clone(), w_hat.clone()];
    let mut columns = vec![&n_hat * (radius / bound), &w_hat * (bound / radius)];
    for i in 0..dim {
        if frame.len() == dim {
            break;
        }
        let mut r = DVector::from_fn(dim, |k, _| if k == i { 1.0 } else { 0.0 });
        for _ in 0..2 {
            for f in &frame {
                let d = f.dot(&r);
                r.axpy(-d, f, 1.0);
            }
        }
        if r.norm() < 1e-6 {
            continue;
        }
        let w = r.normalize();
        let jw = ctx.apply_j0(&w);
        frame.push(w.clone());
        frame.push(jw.clone());
        columns.push(w);
        columns.push(jw);
    }
    let basis = DMatrix::from_columns(&columns);
    let psi = basis
        .try_inverse()
        .ok_or_else(|| Error::Singular(0.0))?;
    let d = defect(&psi, ctx)?;
    if d > 1e-9 * (1.0 + psi.norm_squared()) {
        return Err(Error::Precondition(format!(
            "constructed map is not symplectic (defect {d:.3e})"
        )));
    }
    Ok(psi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn squeezes_hyperplane_slab() {
        let ctx = SympContext::new(3).unwrap();
        let u = DVector::from_fn(6, |i, _| if i == 0 { 1.0 } else { 0.0 });
        for radius in [0.01, 0.5, 1.0, 3.0] {
            let psi = hyperplane_squeeze(&u, 1.0, radius, &ctx).unwrap();
            let j = ctx.j0();
            assert!((psi.transpose() * &j * &psi - &j).norm() < 1e-9);
            for s in 0..50 {
                let mut x = DVector::from_fn(6, |i, _| ((s * 7 + i * 3) % 11) as f64 - 5.0);
                x[0] = 0.0;
                x[1] = (s as f64 / 25.0) - 1.0;
                let y = &psi * &x;
                assert!(y[0].hypot(y[1]) <= radius + 1e-12);
            }
        }
    }

    #[test]
    fn unit_radius_reduces_to_plane_rescaling() {
        let ctx = SympContext::new(2).unwrap();
        let u = DVector::from_vec(vec![1.0, 0.0, 0.0, 0.0]);
        let psi = hyperplane_squeeze(&u, 2.0, 1.0, &ctx).unwrap();
        let expected = DMatrix::from_diagonal(&DVector::from_vec(vec![2.0, 0.5, 1.0, 1.0]));
        assert!((psi - expected).norm() < 1e-14);
    }

    #[test]
    fn oblique_normal() {
        let ctx = SympContext::new(2).unwrap();
        let u = DVector::from_vec(vec![0.3, -1.2, 0.7, 2.0]);
        let psi = hyperplane_squeeze(&u, 1.5, 0.2, &ctx).unwrap();
        let n_hat = u.normalize();
        let w_hat = ctx.apply_j0(&n_hat);
        for s in 0..40 {
            let raw = DVector::from_fn(4, |i, _| ((s * 5 + i * 7) % 9) as f64 - 4.0);
            let mut x = &raw - &n_hat * n_hat.dot(&raw);
            let p = x.dot(&w_hat);
            if p.abs() > 1.5 {
                x -= &w_hat * (p - 1.5 * p.signum());
            }
            let y = &psi * &x;
            assert!(y[0].hypot(y[1]) <= 0.2 + 1e-12);
        }
    }

    #[test]
    fn rejects_zero_normal() {
        let ctx = SympContext::new(1).unwrap();
        assert!(hyperplane_squeeze(&DVector::zeros(2), 1.0, 1.0, &ctx).is_err());
        let u = DVector::from_vec(vec![1.0, 0.0]);
        assert!(hyperplane_squeeze(&u, 0.0, 1.0, &ctx).is_err());
        assert!(hyperplane_squeeze(&u, 1.0, -1.0, &ctx).is_err());
    }
}
