//! Quantitative non-squeezing, non-expanding and capacity certificates.

use std::f64::consts::{PI, SQRT_2};

use nalgebra::DMatrix;
use serde::{Deserialize, Serialize};

use super::{ensure_nonsingular, symplectic_spectrum, SympContext};
use crate::error::{Error, Result};

/// Additive slack on every certified inequality.
pub const CERTIFICATE_TOL: f64 = 1e-10;

/// Radii `r` at which the ball clause of the non-expanding check is sampled.
pub const BALL_RADII: [f64; 3] = [0.5, 1.0, 2.0];

/// Shrink factor of the Moser correction for a map with defect `eps`:
/// `(1 − √2 ε)^{√(2n)}` in general, `√(1 − √2 ε)` for linear maps.
pub fn rho(eps: f64, n: usize, linear: bool) -> Result<f64> {
    if !(0.0..1.0 / SQRT_2).contains(&eps) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: eps,
            range: "[0, 1/√2)",
        });
    }
    let base = 1.0 - SQRT_2 * eps;
    Ok(if linear {
        base.sqrt()
    } else {
        base.powf((2.0 * n as f64).sqrt())
    })
}

/// Ratio of `ρ` for a certificate parameter `eps`: `√(1 − ε)` for linear
/// maps, `(1 − ε)^{√(2n)}` otherwise.
fn certificate_rho(eps: f64, n: usize, linear: bool) -> Result<f64> {
    if !(0.0..1.0).contains(&eps) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: eps,
            range: "[0, 1)",
        });
    }
    Ok(if linear {
        (1.0 - eps).sqrt()
    } else {
        (1.0 - eps).powf((2.0 * n as f64).sqrt())
    })
}

/// Squeezing constants of an ellipsoid `E(A)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SqueezeParams {
    /// Smallest radius of a ball containing `E(A)`, i.e. `‖A‖`.
    pub r_a: f64,
    pub norm_a_inv: f64,
    pub rho: f64,
    /// `(1 + ‖A⁻¹‖(ρ⁻¹ − 1) r_A)⁻¹`.
    pub s_a: f64,
    /// `(1 − ‖A⁻¹‖(ρ⁻¹ − 1) r_A)⁻¹`, when the bracket is positive.
    pub e_a: Option<f64>,
}

pub fn squeezing_params(
    a: &DMatrix<f64>,
    eps: f64,
    ctx: &SympContext,
    linear: bool,
) -> Result<SqueezeParams> {
    ctx.check_matrix(a)?;
    let rho = certificate_rho(eps, ctx.n(), linear)?;
    let (lo, hi) = ensure_nonsingular(a)?;
    let q = (1.0 / lo) * (1.0 / rho - 1.0) * hi;
    Ok(SqueezeParams {
        r_a: hi,
        norm_a_inv: 1.0 / lo,
        rho,
        s_a: 1.0 / (1.0 + q),
        e_a: (q < 1.0).then(|| 1.0 / (1.0 - q)),
    })
}

/// Which inequality a record certifies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Clause {
    /// `s_A r_1 ≤ R_1`.
    WidthLower,
    /// `R_1 ≤ e_A r_1`.
    WidthUpper,
    /// width of `Φ B_r` at most `ρ⁻¹ r`.
    Ball,
    /// `s_A² c(E) ≤ c(ΦE)`.
    CapacityLower,
    /// `c(ΦE) ≤ e_A² c(E)`.
    CapacityUpper,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateRecord {
    /// Position in the input batch (ball records count their radius slot).
    pub index: usize,
    pub clause: Clause,
    /// Rows of `A` (of `r·I` for ball records).
    #[serde(rename = "A")]
    pub a: Vec<Vec<f64>>,
    pub r1: f64,
    #[serde(rename = "R1")]
    pub big_r1: f64,
    /// Right-hand side for upper clauses, left-hand side for lower ones.
    pub bound: f64,
    pub pass: bool,
    pub skipped: bool,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub note: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub check: String,
    pub eps: f64,
    pub rho: f64,
    pub records: Vec<CertificateRecord>,
    pub skipped: usize,
    pub pass: bool,
}

impl CertificateReport {
    fn new(check: &str, eps: f64, rho: f64, records: Vec<CertificateRecord>) -> Self {
        let pass = records.iter().all(|r| r.pass);
        let skipped = records.iter().filter(|r| r.skipped).count();
        CertificateReport {
            check: check.to_string(),
            eps,
            rho,
            records,
            skipped,
            pass,
        }
    }

    pub fn failures(&self) -> impl Iterator<Item = &CertificateRecord> {
        self.records.iter().filter(|r| !r.pass)
    }
}

fn rows(m: &DMatrix<f64>) -> Vec<Vec<f64>> {
    m.row_iter().map(|r| r.iter().copied().collect()).collect()
}

fn failed_record(index: usize, clause: Clause, a: &DMatrix<f64>, note: &str) -> CertificateRecord {
    CertificateRecord {
        index,
        clause,
        a: rows(a),
        r1: f64::NAN,
        big_r1: f64::NAN,
        bound: f64::NAN,
        pass: false,
        skipped: false,
        note: Some(note.to_string()),
    }
}

/// Common preamble: validates inputs, returns `ρ` and whether `Φ` is singular.
fn prepare(
    phi: &DMatrix<f64>,
    eps: f64,
    ellipsoids: &[DMatrix<f64>],
    ctx: &SympContext,
) -> Result<(f64, bool)> {
    ctx.check_matrix(phi)?;
    let rho = certificate_rho(eps, ctx.n(), true)?;
    for a in ellipsoids {
        ctx.check_matrix(a)?;
        ensure_nonsingular(a)?;
    }
    Ok((rho, ensure_nonsingular(phi).is_err()))
}

/// Linear ε-non-squeezing: `s_A r_1 ≤ R_1` on every ellipsoid, where `r_1`
/// and `R_1` are the widths of `E(A)` and `ΦE(A)`.
pub fn check_eps_nonsqueezing(
    phi: &DMatrix<f64>,
    eps: f64,
    ellipsoids: &[DMatrix<f64>],
    ctx: &SympContext,
) -> Result<CertificateReport> {
    let (rho, singular) = prepare(phi, eps, ellipsoids, ctx)?;
    let mut records = Vec::with_capacity(ellipsoids.len());
    for (index, a) in ellipsoids.iter().enumerate() {
        if singular {
            records.push(failed_record(index, Clause::WidthLower, a, "singular map"));
            continue;
        }
        let params = squeezing_params(a, eps, ctx, true)?;
        let r1 = symplectic_spectrum(a, ctx)?.width();
        let big_r1 = symplectic_spectrum(&(phi * a), ctx)?.width();
        let bound = params.s_a * r1;
        records.push(CertificateRecord {
            index,
            clause: Clause::WidthLower,
            a: rows(a),
            r1,
            big_r1,
            bound,
            pass: bound <= big_r1 + CERTIFICATE_TOL,
            skipped: false,
            note: None,
        });
    }
    Ok(CertificateReport::new("eps-non-squeezing", eps, rho, records))
}

/// Linear ε-non-expanding: the ball clause at [`BALL_RADII`] plus
/// `R_1 ≤ e_A r_1` on every ellipsoid where `e_A` is defined.
pub fn check_eps_nonexpanding(
    phi: &DMatrix<f64>,
    eps: f64,
    ellipsoids: &[DMatrix<f64>],
    ctx: &SympContext,
) -> Result<CertificateReport> {
    let (rho, singular) = prepare(phi, eps, ellipsoids, ctx)?;
    let mut records = Vec::with_capacity(ellipsoids.len() + BALL_RADII.len());
    let id = DMatrix::<f64>::identity(ctx.dim(), ctx.dim());
    for (index, &r) in BALL_RADII.iter().enumerate() {
        let ball = &id * r;
        if singular {
            records.push(failed_record(index, Clause::Ball, &ball, "singular map"));
            continue;
        }
        let big_r1 = symplectic_spectrum(&(phi * &ball), ctx)?.width();
        let bound = r / rho;
        records.push(CertificateRecord {
            index,
            clause: Clause::Ball,
            a: rows(&ball),
            r1: r,
            big_r1,
            bound,
            pass: big_r1 <= bound + CERTIFICATE_TOL,
            skipped: false,
            note: None,
        });
    }
    for (index, a) in ellipsoids.iter().enumerate() {
        if singular {
            records.push(failed_record(index, Clause::WidthUpper, a, "singular map"));
            continue;
        }
        let params = squeezing_params(a, eps, ctx, true)?;
        let r1 = symplectic_spectrum(a, ctx)?.width();
        let big_r1 = symplectic_spectrum(&(phi * a), ctx)?.width();
        let record = match params.e_a {
            Some(e_a) => {
                let bound = e_a * r1;
                CertificateRecord {
                    index,
                    clause: Clause::WidthUpper,
                    a: rows(a),
                    r1,
                    big_r1,
                    bound,
                    pass: big_r1 <= bound + CERTIFICATE_TOL,
                    skipped: false,
                    note: None,
                }
            }
            None => CertificateRecord {
                index,
                clause: Clause::WidthUpper,
                a: rows(a),
                r1,
                big_r1,
                bound: f64::INFINITY,
                pass: true,
                skipped: true,
                note: Some("e_A undefined".to_string()),
            },
        };
        records.push(record);
    }
    Ok(CertificateReport::new("eps-non-expanding", eps, rho, records))
}

/// `s_A² c(E) ≤ c(ΦE) ≤ e_A² c(E)` with `c(E) = π r_1²`; the upper side
/// is skipped when `e_A` is undefined.
pub fn capacity_preservation_check(
    phi: &DMatrix<f64>,
    eps: f64,
    ellipsoids: &[DMatrix<f64>],
    ctx: &SympContext,
) -> Result<CertificateReport> {
    let (rho, singular) = prepare(phi, eps, ellipsoids, ctx)?;
    let mut records = Vec::with_capacity(2 * ellipsoids.len());
    for (index, a) in ellipsoids.iter().enumerate() {
        if singular {
            records.push(failed_record(index, Clause::CapacityLower, a, "singular map"));
            continue;
        }
        let params = squeezing_params(a, eps, ctx, true)?;
        let r1 = symplectic_spectrum(a, ctx)?.width();
        let big_r1 = symplectic_spectrum(&(phi * a), ctx)?.width();
        let cap = PI * r1 * r1;
        let image_cap = PI * big_r1 * big_r1;
        let lower = params.s_a * params.s_a * cap;
        records.push(CertificateRecord {
            index,
            clause: Clause::CapacityLower,
            a: rows(a),
            r1,
            big_r1,
            bound: lower,
            pass: lower <= image_cap + CERTIFICATE_TOL,
            skipped: false,
            note: None,
        });
        let upper = match params.e_a {
            Some(e_a) => {
                let bound = e_a * e_a * cap;
                CertificateRecord {
                    index,
                    clause: Clause::CapacityUpper,
                    a: rows(a),
                    r1,
                    big_r1,
                    bound,
                    pass: image_cap <= bound + CERTIFICATE_TOL,
                    skipped: false,
                    note: None,
                }
            }
            None => CertificateRecord {
                index,
                clause: Clause::CapacityUpper,
                a: rows(a),
                r1,
                big_r1,
                bound: f64::INFINITY,
                pass: true,
                skipped: true,
                note: Some("e_A undefined".to_string()),
            },
        };
        records.push(upper);
    }
    Ok(CertificateReport::new("capacity-preservation", eps, rho, records))
}

#[cfg(test)]
mod tests {
    use super::super::plane_scaling;
    use super::*;

    #[test]
    fn rho_examples() {
        assert_eq!(rho(0.0, 3, false).unwrap(), 1.0);
        assert_eq!(rho(0.0, 3, true).unwrap(), 1.0);
        let expected = (1.0 - SQRT_2 * 0.1_f64).powi(2);
        assert!((rho(0.1, 2, false).unwrap() - expected).abs() < 1e-15);
        assert!((rho(0.1, 2, false).unwrap() - 0.7372).abs() < 1e-4);
        let r = rho(1.0 / (2.0 * SQRT_2), 5, true).unwrap();
        assert!((r - 0.5f64.sqrt()).abs() < 1e-15);
        assert!(rho(0.75, 1, true).is_err());
        assert!(rho(-0.1, 1, true).is_err());
    }

    #[test]
    fn params_for_identity() {
        let ctx = SympContext::new(2).unwrap();
        let id = DMatrix::identity(4, 4);
        for eps in [0.1, 0.5, 0.7, 0.9] {
            let p = squeezing_params(&id, eps, &ctx, true).unwrap();
            let rho = (1.0f64 - eps).sqrt();
            assert!((p.s_a - rho).abs() < 1e-14);
            match p.e_a {
                Some(e) => {
                    assert!(rho > 0.5);
                    assert!((e - rho / (2.0 * rho - 1.0)).abs() < 1e-12);
                }
                None => assert!(rho <= 0.5),
            }
        }
    }

    #[test]
    fn params_at_zero_eps() {
        let ctx = SympContext::new(2).unwrap();
        let a = plane_scaling(&[0.3, 5.0]);
        let p = squeezing_params(&a, 0.0, &ctx, true).unwrap();
        assert_eq!((p.s_a, p.e_a), (1.0, Some(1.0)));
    }

    #[test]
    fn params_for_diagonal() {
        let ctx = SympContext::new(2).unwrap();
        let p = squeezing_params(&plane_scaling(&[2.0, 3.0]), 0.1, &ctx, true).unwrap();
        assert!((p.r_a - 3.0).abs() < 1e-14);
        assert!((p.norm_a_inv - 0.5).abs() < 1e-14);
    }

    #[test]
    fn squeezing_counterexample_fails() {
        let ctx = SympContext::new(2).unwrap();
        let phi = plane_scaling(&[0.05, 1.0]);
        let id = DMatrix::identity(4, 4);
        let rep = check_eps_nonsqueezing(&phi, 0.0, &[id.clone()], &ctx).unwrap();
        assert!(!rep.pass);
        assert!((rep.records[0].big_r1 - 0.05).abs() < 1e-12);
        let cap = capacity_preservation_check(&phi, 0.0, &[id], &ctx).unwrap();
        assert!(!cap.pass);
        assert_eq!(cap.failures().next().unwrap().clause, Clause::CapacityLower);
    }

    #[test]
    fn ball_clause_catches_expansion() {
        let ctx = SympContext::new(2).unwrap();
        let eps = 0.1;
        let rho = (1.0f64 - eps).sqrt();
        let phi = DMatrix::identity(4, 4) * (1.0 / rho + 0.01);
        let rep = check_eps_nonexpanding(&phi, eps, &[], &ctx).unwrap();
        assert!(!rep.pass);
        assert!(rep.failures().all(|r| r.clause == Clause::Ball));
    }

    #[test]
    fn singular_map_fails_everywhere() {
        let ctx = SympContext::new(2).unwrap();
        let phi = plane_scaling(&[0.0, 1.0]);
        let batch = [DMatrix::identity(4, 4), plane_scaling(&[1.0, 2.0])];
        for rep in [
            check_eps_nonsqueezing(&phi, 0.5, &batch, &ctx).unwrap(),
            check_eps_nonexpanding(&phi, 0.5, &batch, &ctx).unwrap(),
            capacity_preservation_check(&phi, 0.5, &batch, &ctx).unwrap(),
        ] {
            assert!(!rep.pass);
            assert!(rep.records.iter().all(|r| !r.pass));
        }
    }

    #[test]
    fn undefined_e_a_is_skipped() {
        let ctx = SympContext::new(2).unwrap();
        let a = plane_scaling(&[0.1, 10.0]);
        let rep = check_eps_nonexpanding(&DMatrix::identity(4, 4), 0.5, &[a], &ctx).unwrap();
        assert_eq!(rep.skipped, 1);
        assert!(rep.pass);
    }

    #[test]
    fn report_serializes_records() {
        let ctx = SympContext::new(1).unwrap();
        let rep =
            check_eps_nonsqueezing(&DMatrix::identity(2, 2), 0.0, &[DMatrix::identity(2, 2)], &ctx)
                .unwrap();
        let v = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["records"][0]["clause"], "width-lower");
        assert_eq!(v["records"][0]["A"][1][1], 1.0);
        assert_eq!(v["pass"], true);
    }
}
