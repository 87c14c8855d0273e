//! Linear symplectic geometry on `R^{2n}`.
//!
//! Coordinates are interleaved, `(x_1, y_1, …, x_n, y_n)`, so the standard
//! complex structure `J_0` is block diagonal with blocks mapping
//! `(x, y) ↦ (-y, x)` and `ω_0(v, w) = <J_0 v, w>`. Helpers convert to and
//! from the split ordering `(x_1, …, x_n, y_1, …, y_n)`.
//!
//! A two-form is carried by a skew matrix `M` with `ω(v, w) = <M v, w>`; the
//! pullback of `ω_0` by a matrix `Φ` is then `Φᵀ J_0 Φ`.

mod hyperplane;
mod invariants;
mod rigidity;
mod spectrum;
mod squeezing;
mod standard_form;

pub use hyperplane::hyperplane_squeeze;
pub use invariants::{
    defect_decomposition_check, lambda_mu_invariants, Classification, DecompositionCheck,
    LambdaMuReport,
};
pub use rigidity::{c_rho, cubic_z0, rigidity_bound, CubicRoot, RigidityBound};
pub use spectrum::{ellipsoid_capacity, symplectic_spectrum, Spectrum};
pub use squeezing::{
    capacity_preservation_check, check_eps_nonexpanding, check_eps_nonsqueezing, rho,
    squeezing_params, CertificateRecord, CertificateReport, Clause, SqueezeParams,
    BALL_RADII, CERTIFICATE_TOL,
};
pub use standard_form::{StandardForm, KERNEL_TOL};

use nalgebra::{DMatrix, DVector};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::Covector;

/// Relative tolerance on `‖M + Mᵀ‖_F / ‖M‖_F` for skew input.
pub const SKEW_TOL: f64 = 1e-9;

/// Relative cutoff on the smallest singular value below which a matrix is
/// treated as singular.
pub const SINGULAR_TOL: f64 = 1e-12;

/// The half-dimension `n` of `R^{2n}` together with the coordinate convention.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SympContext {
    n: usize,
}

impl SympContext {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::OutOfRange {
                name: "n",
                value: 0.0,
                range: "n >= 1",
            });
        }
        Ok(SympContext { n })
    }

    /// Context for a `2n × 2n` matrix.
    pub fn for_matrix(m: &DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        if m.nrows() % 2 != 0 {
            return Err(Error::Precondition(format!(
                "odd dimension {}",
                m.nrows()
            )));
        }
        SympContext::new(m.nrows() / 2)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        2 * self.n
    }

    /// The standard complex structure `J_0`.
    pub fn j0(&self) -> DMatrix<f64> {
        let mut j = DMatrix::zeros(self.dim(), self.dim());
        for p in 0..self.n {
            j[(2 * p + 1, 2 * p)] = 1.0;
            j[(2 * p, 2 * p + 1)] = -1.0;
        }
        j
    }

    /// `ω_0` as a two-form (matrix `J_0`).
    pub fn omega0(&self) -> TwoForm {
        TwoForm {
            matrix: self.j0(),
        }
    }

    /// `ω_0 = Σ dx_j ∧ dy_j` as a 2-covector.
    pub fn omega0_covector(&self) -> Covector {
        Covector::from_terms(
            self.dim(),
            2,
            (0..self.n).map(|j| (vec![2 * j, 2 * j + 1], 1.0)),
        )
        .expect("valid indices")
    }

    /// `ω_0(v, w)`.
    pub fn omega0_eval(&self, v: &DVector<f64>, w: &DVector<f64>) -> f64 {
        let mut s = 0.0;
        for p in 0..self.n {
            s += v[2 * p] * w[2 * p + 1] - v[2 * p + 1] * w[2 * p];
        }
        s
    }

    /// `J_0 v` without forming the matrix.
    pub fn apply_j0(&self, v: &DVector<f64>) -> DVector<f64> {
        let mut out = DVector::zeros(v.len());
        for p in 0..self.n {
            out[2 * p] = -v[2 * p + 1];
            out[2 * p + 1] = v[2 * p];
        }
        out
    }

    /// Permutation `P` with `P · interleaved = split`.
    pub fn split_permutation(&self) -> DMatrix<f64> {
        let mut p = DMatrix::zeros(self.dim(), self.dim());
        for j in 0..self.n {
            p[(j, 2 * j)] = 1.0;
            p[(self.n + j, 2 * j + 1)] = 1.0;
        }
        p
    }

    /// Rewrites a matrix acting on interleaved coordinates in split ones.
    pub fn to_split(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let p = self.split_permutation();
        &p * m * p.transpose()
    }

    /// Inverse of [`SympContext::to_split`].
    pub fn from_split(&self, m: &DMatrix<f64>) -> DMatrix<f64> {
        let p = self.split_permutation();
        p.transpose() * m * &p
    }

    pub(crate) fn check_matrix(&self, m: &DMatrix<f64>) -> Result<()> {
        if m.nrows() % 2 != 0 {
            return Err(Error::Precondition(format!(
                "odd dimension {}",
                m.nrows()
            )));
        }
        for d in [m.nrows(), m.ncols()] {
            if d != self.dim() {
                return Err(Error::DimensionMismatch {
                    expected: self.dim(),
                    found: d,
                });
            }
        }
        Ok(())
    }

    /// `Φ* ω_0` as the matrix `Φᵀ J_0 Φ`.
    pub fn pullback_omega0(&self, phi: &DMatrix<f64>) -> Result<DMatrix<f64>> {
        self.check_matrix(phi)?;
        Ok(phi.transpose() * self.j0() * phi)
    }
}

/// A two-form `ω(v, w) = <M v, w>` given by a skew matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct TwoForm {
    matrix: DMatrix<f64>,
}

impl TwoForm {
    pub fn new(matrix: DMatrix<f64>) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch {
                expected: matrix.nrows(),
                found: matrix.ncols(),
            });
        }
        let norm = matrix.norm();
        let asym = (&matrix + matrix.transpose()).norm();
        if asym > SKEW_TOL * norm {
            return Err(Error::NotSkew(asym / norm));
        }
        Ok(TwoForm { matrix })
    }

    pub fn from_covector(c: &Covector) -> Result<Self> {
        TwoForm::new(c.to_skew_matrix()?)
    }

    pub fn matrix(&self) -> &DMatrix<f64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    pub fn eval(&self, v: &DVector<f64>, w: &DVector<f64>) -> f64 {
        (&self.matrix * v).dot(w)
    }

    pub fn to_covector(&self) -> Covector {
        Covector::from_skew_matrix(&self.matrix).expect("square matrix")
    }

    /// Coefficient norm `‖ω‖_2`, i.e. `‖M‖_F / √2`.
    pub fn norm2(&self) -> f64 {
        self.matrix.norm() / std::f64::consts::SQRT_2
    }

    /// Orthonormal normal form `Σ λ_j² α_j ∧ β_j`.
    pub fn standard_form(&self) -> StandardForm {
        standard_form::decompose(&self.matrix)
    }
}

/// `‖Φ* ω_0 − ω_0‖_2`, computed as `√(½‖ΦᵀJ_0Φ − J_0‖_F²)`.
pub fn defect(phi: &DMatrix<f64>, ctx: &SympContext) -> Result<f64> {
    let m = ctx.pullback_omega0(phi)? - ctx.j0();
    Ok((0.5 * m.norm_squared()).sqrt())
}

/// `‖Φ* ω_0 + ω_0‖_2`, the anti-symplectic defect.
pub fn anti_defect(phi: &DMatrix<f64>, ctx: &SympContext) -> Result<f64> {
    let m = ctx.pullback_omega0(phi)? + ctx.j0();
    Ok((0.5 * m.norm_squared()).sqrt())
}

/// `(σ_min, σ_max)` of a matrix.
pub fn extreme_singular_values(m: &DMatrix<f64>) -> (f64, f64) {
    let sv = m.clone().svd(false, false).singular_values;
    let min = sv.iter().copied().fold(f64::INFINITY, f64::min);
    let max = sv.iter().copied().fold(0.0, f64::max);
    (min, max)
}

/// Errors with [`Error::Singular`] when `σ_min ≤ SINGULAR_TOL · σ_max`.
pub(crate) fn ensure_nonsingular(m: &DMatrix<f64>) -> Result<(f64, f64)> {
    let (lo, hi) = extreme_singular_values(m);
    if !(lo > SINGULAR_TOL * hi) {
        return Err(Error::Singular(lo));
    }
    Ok((lo, hi))
}

/// Operator norm `‖A‖`.
pub fn operator_norm(m: &DMatrix<f64>) -> f64 {
    extreme_singular_values(m).1
}

/// The `2n × 2n` matrix scaling the `(x_j, y_j)` plane by `c_j`.
pub fn plane_scaling(factors: &[f64]) -> DMatrix<f64> {
    let diag: Vec<f64> = factors.iter().flat_map(|&c| [c, c]).collect();
    DMatrix::from_diagonal(&DVector::from_vec(diag))
}

/// The anti-symplectic reflection `(x_j, y_j) ↦ (y_j, x_j)` on every plane.
pub fn plane_swap(ctx: &SympContext) -> DMatrix<f64> {
    let mut m = DMatrix::zeros(ctx.dim(), ctx.dim());
    for p in 0..ctx.n() {
        m[(2 * p, 2 * p + 1)] = 1.0;
        m[(2 * p + 1, 2 * p)] = 1.0;
    }
    m
}

/// The map `Ψ × id` with `Ψ(x_1, y_1, x_2, y_2) = (x_1, y_1 + εx_2, -x_2/K, -K y_2)`,
/// whose pullback of `ω_0` differs from `ω_0` by `ε dx_1 ∧ dx_2`.
pub fn shear_example(n: usize, eps: f64, k: f64) -> Result<DMatrix<f64>> {
    if n < 2 {
        return Err(Error::OutOfRange {
            name: "n",
            value: n as f64,
            range: "n >= 2",
        });
    }
    if k == 0.0 {
        return Err(Error::OutOfRange {
            name: "K",
            value: k,
            range: "K != 0",
        });
    }
    let mut m = DMatrix::identity(2 * n, 2 * n);
    // rows: x1, y1, x2, y2
    m[(1, 2)] = eps;
    m[(2, 2)] = -1.0 / k;
    m[(3, 3)] = -k;
    Ok(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn j0_matches_omega0() {
        let ctx = SympContext::new(3).unwrap();
        let form = ctx.omega0();
        let cov = ctx.omega0_covector();
        assert_eq!(TwoForm::from_covector(&cov).unwrap(), form);
        let v = DVector::from_fn(6, |i, _| i as f64 - 2.0);
        let w = DVector::from_fn(6, |i, _| (i * i) as f64 * 0.5);
        assert!((form.eval(&v, &w) - ctx.omega0_eval(&v, &w)).abs() < 1e-12);
        assert_eq!(ctx.apply_j0(&v), ctx.j0() * &v);
    }

    #[test]
    fn omega0_norm_is_root_n() {
        for n in 1..=5 {
            let ctx = SympContext::new(n).unwrap();
            assert!((ctx.omega0().norm2() - (n as f64).sqrt()).abs() < 1e-14);
        }
    }

    #[test]
    fn split_roundtrip() {
        let ctx = SympContext::new(2).unwrap();
        let j_split = ctx.to_split(&ctx.j0());
        // (x, y) ↦ (-y, x) in block form
        let mut expected = DMatrix::zeros(4, 4);
        expected[(2, 0)] = 1.0;
        expected[(3, 1)] = 1.0;
        expected[(0, 2)] = -1.0;
        expected[(1, 3)] = -1.0;
        assert_eq!(j_split, expected);
        assert_eq!(ctx.from_split(&j_split), ctx.j0());
    }

    #[test]
    fn defect_examples() {
        let ctx = SympContext::new(2).unwrap();
        assert_eq!(defect(&DMatrix::identity(4, 4), &ctx).unwrap(), 0.0);
        let phi = shear_example(2, 0.1, 2.0).unwrap();
        assert!((defect(&phi, &ctx).unwrap() - 0.1).abs() < 1e-12);
        assert!((defect(&phi.transpose(), &ctx).unwrap() - 0.2).abs() < 1e-12);
        let inv = phi.clone().try_inverse().unwrap();
        assert!((defect(&inv, &ctx).unwrap() - 0.2).abs() < 1e-12);
    }

    #[test]
    fn shear_example_pullback_is_eps_dx1_dx2() {
        let ctx = SympContext::new(3).unwrap();
        let phi = shear_example(3, 0.1, 2.0).unwrap();
        let diff = TwoForm::new(ctx.pullback_omega0(&phi).unwrap() - ctx.j0())
            .unwrap()
            .to_covector();
        let expected = Covector::from_terms(6, 2, [(vec![0, 2], 0.1)]).unwrap();
        assert!((&diff - &expected).terms().all(|(_, f)| f.abs() < 1e-15));
    }

    #[test]
    fn defect_rejects_bad_shapes() {
        let ctx = SympContext::new(2).unwrap();
        assert!(defect(&DMatrix::identity(3, 3), &ctx).is_err());
        assert!(SympContext::for_matrix(&DMatrix::identity(3, 3)).is_err());
        assert!(SympContext::new(0).is_err());
    }

    #[test]
    fn skew_validation() {
        let mut m = DMatrix::zeros(2, 2);
        m[(0, 1)] = 1.0;
        assert!(matches!(TwoForm::new(m.clone()), Err(Error::NotSkew(_))));
        m[(1, 0)] = -1.0;
        assert!(TwoForm::new(m).is_ok());
    }

    #[test]
    fn plane_swap_is_anti_symplectic() {
        let ctx = SympContext::new(3).unwrap();
        let s = plane_swap(&ctx);
        assert_eq!(anti_defect(&s, &ctx).unwrap(), 0.0);
    }
}
