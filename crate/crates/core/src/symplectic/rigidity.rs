//! Constants of the converse rigidity estimate: the cubic roots `z_0` and
//! `c_ρ`, and an explicit `K(ε)` built from the worst-case bounds on
//! `λ_j` and `μ_j`.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const BISECTION_STEPS: usize = 200;

fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let f_lo = f(lo);
    for _ in 0..BISECTION_STEPS {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if (f(mid) < 0.0) == (f_lo < 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// The real root of `z³ + (27/4) z = 27/4`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CubicRoot {
    pub bisection: f64,
    /// `(3/2)(∛(1+√2) + ∛(1−√2))`.
    pub closed_form: f64,
    /// `|z³ + 6.75 z − 6.75|` at the closed form.
    pub residual: f64,
    /// `1 − z_0²`, the largest admissible `ε`.
    pub threshold: f64,
}

fn z0_poly(z: f64) -> f64 {
    z * z * z + 6.75 * z - 6.75
}

pub fn cubic_z0() -> CubicRoot {
    let sqrt2 = std::f64::consts::SQRT_2;
    let closed_form = 1.5 * ((1.0 + sqrt2).cbrt() + (1.0 - sqrt2).cbrt());
    let bisection = bisect(z0_poly, 0.0, 1.0);
    CubicRoot {
        bisection,
        closed_form,
        residual: z0_poly(closed_form).abs(),
        threshold: 1.0 - bisection * bisection,
    }
}

/// The root of `c³ − c² + ρ⁻³(1 − ρ) = 0` in `(2/3, 1]`, defined for
/// `z_0 < ρ ≤ 1`.
pub fn c_rho(rho: f64) -> Result<f64> {
    let z0 = cubic_z0().bisection;
    if !(rho > z0 && rho <= 1.0) {
        return Err(Error::OutOfRange {
            name: "rho",
            value: rho,
            range: "(z0, 1]",
        });
    }
    let k = (1.0 - rho) / (rho * rho * rho);
    if k == 0.0 {
        return Ok(1.0);
    }
    let g = |c: f64| c * c * c - c * c + k;
    Ok(bisect(g, 2.0 / 3.0, 1.0))
}

/// `K(ε)` with its intermediate quantities.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RigidityBound {
    pub eps: f64,
    pub n: usize,
    /// `√(1 − ε)`.
    pub rho: f64,
    pub c_rho: f64,
    /// `min(c_ρ⁻¹, ρ⁻²)`, the latter only when `ε < 1 − 2^{-1/4}`.
    pub lambda_max: f64,
    /// `min(√(1 − 2λ²(ρ⁻¹ − 1)), √(2ρ − 1))` clamped to `[0, 1]`.
    pub mu_min: f64,
    pub value: f64,
}

/// Composes the worst-case `λ` and `μ` bounds into the defect identity:
/// `K = √(n · [max((λ² − μ²)², (1 − ρ²)²) + 1 − μ⁴])`.
pub fn rigidity_bound(eps: f64, n: usize) -> Result<RigidityBound> {
    let threshold = cubic_z0().threshold;
    if !(0.0..threshold).contains(&eps) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: eps,
            range: "[0, 1 − z0²)",
        });
    }
    if n == 0 {
        return Err(Error::OutOfRange {
            name: "n",
            value: 0.0,
            range: "n >= 1",
        });
    }
    let rho = (1.0 - eps).sqrt();
    let c = c_rho(rho)?;
    let mut lambda_max = 1.0 / c;
    if eps < 1.0 - 0.5f64.powf(0.25) {
        lambda_max = lambda_max.min(1.0 / (rho * rho));
    }
    let l2 = lambda_max * lambda_max;
    let case_small_a = (1.0 - 2.0 * l2 * (1.0 / rho - 1.0)).max(0.0).sqrt();
    let case_large_a = (2.0 * rho - 1.0).max(0.0).sqrt();
    let mu_min = case_small_a.min(case_large_a).clamp(0.0, 1.0);
    let m2 = mu_min * mu_min;
    let conformal = (l2 - m2).powi(2).max((1.0 - rho * rho).powi(2));
    let value = (n as f64 * (conformal + 1.0 - m2 * m2)).sqrt();
    Ok(RigidityBound {
        eps,
        n,
        rho,
        c_rho: c,
        lambda_max,
        mu_min,
        value,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn z0_matches_closed_form() {
        let z = cubic_z0();
        assert!((z.bisection - z.closed_form).abs() < 1e-12);
        assert!(z.residual <= 1e-12);
        assert!((z.bisection - 0.894).abs() < 1e-3);
        assert!((z.threshold - 0.20).abs() < 1e-2);
    }

    #[test]
    fn c_rho_values() {
        assert_eq!(c_rho(1.0).unwrap(), 1.0);
        let near = c_rho(1.0 - 1e-9).unwrap();
        assert!(near < 1.0 && near > 1.0 - 1e-6);
        let mut prev = 0.0;
        for i in 1..=50 {
            let rho = 0.9 + 0.1 * i as f64 / 50.0;
            let c = c_rho(rho).unwrap();
            assert!(c > 2.0 / 3.0 && c <= 1.0);
            let k = (1.0 - rho) / rho.powi(3);
            assert!((c * c * c - c * c + k).abs() <= 1e-12);
            assert!(c >= prev);
            prev = c;
        }
        assert!(c_rho(0.5).is_err());
        assert!(c_rho(1.1).is_err());
    }

    #[test]
    fn k_at_zero_and_small_eps() {
        for n in 1..=5 {
            assert_eq!(rigidity_bound(0.0, n).unwrap().value, 0.0);
            for i in 1..=10 {
                let eps = 0.001 * i as f64;
                assert!(rigidity_bound(eps, n).unwrap().value < 1.0);
            }
        }
    }

    #[test]
    fn k_rejects_large_eps() {
        assert!(rigidity_bound(0.25, 2).is_err());
        assert!(rigidity_bound(-0.01, 2).is_err());
        assert!(rigidity_bound(0.1, 0).is_err());
    }
}
