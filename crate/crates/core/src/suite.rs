//! Seeded property suites over every module.
//!
//! Each check draws from its own stream derived from the suite seed, so a
//! check's result does not depend on which other checks run. Reports hold no
//! timing data and serialize identically for identical seeds.

use std::f64::consts::SQRT_2;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::Result;
use crate::exterior::{binomial, comass, comass_basis_witness, norm2, ComassMode};
use crate::moser::{convergence_ratio, integrate_flow, symplectify, symplectify_polynomial_pointwise, FlowConfig};
use crate::polyform::{
    d, dilation_pullback, h, h_bound_check, h_via_contraction_first, homotopy_identity_check,
    PolyForm, PolyMap, Rational, BOUND_TOL,
};
use crate::random::{
    random_antisymplectic, random_covector, random_ellipsoid, random_orthogonal,
    random_polyform, random_symplectic, random_with_defect, seeded_rng,
};
use crate::symplectic::{
    anti_defect, c_rho, capacity_preservation_check, check_eps_nonexpanding,
    check_eps_nonsqueezing, cubic_z0, defect, defect_decomposition_check, hyperplane_squeeze,
    lambda_mu_invariants, plane_scaling, plane_swap, rigidity_bound, shear_example,
    symplectic_spectrum, Classification, SympContext,
};

/// Seed used when none is given.
pub const DEFAULT_SEED: u64 = 20_240_917;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Scale {
    Smoke,
    Full,
}

/// Outcome of one property check.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub name: String,
    pub cases: usize,
    pub failures: usize,
    /// Largest error or smallest margin, as described in `metric`.
    pub worst: f64,
    pub metric: String,
    #[serde(skip_serializing_if = "Vec::is_empty", default)]
    pub notes: Vec<String>,
    pub pass: bool,
}

struct Tally {
    name: &'static str,
    metric: &'static str,
    cases: usize,
    failures: usize,
    worst: f64,
    larger_is_worse: bool,
    notes: Vec<String>,
}

impl Tally {
    /// Tracks the largest value of an error.
    fn error(name: &'static str, metric: &'static str) -> Self {
        Tally {
            name,
            metric,
            cases: 0,
            failures: 0,
            worst: 0.0,
            larger_is_worse: true,
            notes: Vec::new(),
        }
    }

    /// Tracks the smallest value of a margin.
    fn margin(name: &'static str, metric: &'static str) -> Self {
        Tally {
            worst: f64::INFINITY,
            larger_is_worse: false,
            ..Tally::error(name, metric)
        }
    }

    fn record(&mut self, value: f64, ok: bool) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
        }
        if value.is_nan() {
            self.worst = f64::NAN;
        } else if self.larger_is_worse {
            self.worst = self.worst.max(value);
        } else {
            self.worst = self.worst.min(value);
        }
    }

    fn fail(&mut self, note: String) {
        self.cases += 1;
        self.failures += 1;
        if self.notes.len() < 5 {
            self.notes.push(note);
        }
    }

    fn note(&mut self, note: String) {
        if self.notes.len() < 5 {
            self.notes.push(note);
        }
    }

    fn finish(self) -> CheckOutcome {
        let worst = if self.worst.is_infinite() { 0.0 } else { self.worst };
        CheckOutcome {
            name: self.name.to_string(),
            cases: self.cases,
            failures: self.failures,
            worst,
            metric: self.metric.to_string(),
            notes: self.notes,
            pass: self.failures == 0 && self.cases > 0,
        }
    }
}

fn stream(seed: u64, tag: u64) -> ChaCha8Rng {
    seeded_rng(seed ^ tag.wrapping_mul(0x9E37_79B9_7F4A_7C15))
}

fn rel_err(a: f64, b: f64) -> f64 {
    let s = a.abs().max(b.abs());
    if s == 0.0 {
        0.0
    } else {
        (a - b).abs() / s
    }
}

/// The shear fixture `Ψ × id` with `ε = 0.1`, `K = 2`: defects of `Φ`, `Φᵀ`
/// and `Φ⁻¹` are `0.1`, `0.2` and `0.2`.
pub fn shear_fixture() -> CheckOutcome {
    let mut t = Tally::error("shear fixture", "max |defect - expected|");
    let ctx = SympContext::new(2).expect("n = 2");
    let phi = shear_example(2, 0.1, 2.0).expect("valid parameters");
    let inv = phi.clone().try_inverse().expect("invertible");
    for (m, expected) in [(phi.clone(), 0.1), (phi.transpose(), 0.2), (inv, 0.2)] {
        match defect(&m, &ctx) {
            Ok(v) => t.record((v - expected).abs(), (v - expected).abs() <= 1e-12),
            Err(e) => t.fail(e.to_string()),
        }
    }
    t.finish()
}

/// Sandwich, witness and exact comass consistency on random covectors, plus
/// `comass(ω_0) = 1` and `‖ω_0‖_2 = √n`.
pub fn norm_suite(seed: u64, count: usize, trials: usize) -> CheckOutcome {
    let mut t = Tally::error("norm suite", "max inequality violation");
    let mut rng = stream(seed, 2);
    let tol = 1e-10;
    for case in 0..count {
        let m = rng.random_range(1..=8);
        let k = rng.random_range(1..=m.min(4));
        let c = match random_covector(m, k, &mut rng) {
            Ok(c) => c,
            Err(e) => {
                t.fail(e.to_string());
                continue;
            }
        };
        let basis: Vec<DVector<f64>> = {
            let q = random_orthogonal(m, &mut rng);
            (0..m).map(|j| q.column(j).into_owned()).collect()
        };
        let sandwich = comass(
            &c,
            ComassMode::Sandwich {
                trials,
                seed: seed.wrapping_add(case as u64),
            },
        );
        let witness = comass_basis_witness(&c, &basis);
        let (Ok(iv), Ok(w)) = (sandwich, witness) else {
            t.fail(format!("case {case}: comass evaluation failed"));
            continue;
        };
        let root = (binomial(m, k) as f64).sqrt();
        let mut viol = [
            iv.lo - iv.hi,
            w.value.abs() - iv.hi,
            iv.hi - root * w.value.abs(),
        ]
        .into_iter()
        .fold(0.0, f64::max);
        if k <= 2 || k + 1 >= m {
            match comass(&c, ComassMode::Exact) {
                Ok(ex) => {
                    viol = viol
                        .max(iv.lo - ex.hi)
                        .max(w.value.abs() - ex.hi)
                        .max(ex.hi - iv.hi);
                }
                Err(e) => t.note(format!("case {case}: {e}")),
            }
        }
        t.record(viol, viol <= tol);
    }
    for n in 1..=5 {
        let ctx = SympContext::new(n).expect("n >= 1");
        let w = ctx.omega0_covector();
        let ex = comass(&w, ComassMode::Exact).map(|i| i.hi).unwrap_or(f64::NAN);
        let err = (ex - 1.0).abs().max((norm2(&w) - (n as f64).sqrt()).abs());
        t.record(err, err <= tol);
    }
    t.finish()
}

/// Exact homotopy identity, agreement of both factorizations, degree
/// bookkeeping and dilation invariance on random polynomial forms.
pub fn homotopy_suite(seed: u64, count: usize) -> CheckOutcome {
    let mut t = Tally::error("homotopy identity", "failed exact comparisons");
    let mut rng = stream(seed, 3);
    for case in 0..count {
        let m = rng.random_range(2..=5);
        let k = rng.random_range(1..=(m - 1).min(3));
        let deg = rng.random_range(0..=4);
        let outcome = (|| -> Result<Vec<bool>> {
            let f = random_polyform(m, k, deg, &mut rng)?;
            let hf = h(&f)?;
            let identity = homotopy_identity_check(&f)?;
            let factor = hf == h_via_contraction_first(&f)?;
            let lowers = hf.degree() + 1 == k
                && match (f.poly_degree(), hf.poly_degree()) {
                    (Some(a), Some(b)) => b <= a + 1,
                    (_, None) => true,
                    (None, Some(_)) => false,
                };
            let r = Rational::new(
                BigInt::from(rng.random_range(1..=7)),
                BigInt::from(rng.random_range(1..=5)),
            );
            let dilation = h(&dilation_pullback(&f, &r))? == dilation_pullback(&hf, &r);
            let closed = if k + 1 < m {
                let df = d(&f)?;
                d(&h(&df)?)? == df
            } else {
                true
            };
            Ok(vec![identity, factor, lowers, dilation, closed])
        })();
        match outcome {
            Ok(flags) => {
                let bad = flags.iter().filter(|b| !**b).count();
                if bad > 0 {
                    t.note(format!("case {case}: m={m} k={k} flags={flags:?}"));
                }
                t.record(bad as f64, bad == 0);
            }
            Err(e) => t.fail(format!("case {case}: {e}")),
        }
    }
    t.finish()
}

/// Norm bounds for the homotopy operator: constant 2-forms on `R^{2n}` with
/// the ray bound, and a few polynomial forms with the sampled bound.
pub fn bound_suite(seed: u64, forms: usize, points: usize) -> CheckOutcome {
    let mut t = Tally::margin("homotopy bounds", "min margin");
    let mut rng = stream(seed, 4);
    let radius = 1.0;
    let sample_points = |m: usize, rng: &mut ChaCha8Rng| -> Vec<Vec<f64>> {
        (0..points)
            .map(|_| {
                let v = crate::random::random_gaussian_matrix(m, 1, rng);
                let r: f64 = rng.random_range(0.0..=radius);
                let nv = v.norm().max(1e-300);
                v.iter().map(|x| x / nv * r).collect()
            })
            .collect()
    };
    for case in 0..forms {
        let n = rng.random_range(1..=4);
        let m = 2 * n;
        let res = random_covector(m, 2, &mut rng)
            .and_then(|c| PolyForm::from_covector(&c))
            .and_then(|f| {
                let pts = sample_points(m, &mut rng);
                h_bound_check(&f, &pts, radius)
            });
        match res {
            Ok(r) => {
                for p in &r.points {
                    let ray = p.ray_margin.unwrap_or(f64::NEG_INFINITY);
                    let worst = ray.min(p.margin);
                    t.record(worst, worst >= BOUND_TOL);
                }
            }
            Err(e) => t.fail(format!("constant case {case}: {e}")),
        }
    }
    for case in 0..forms.div_ceil(10) {
        let m = rng.random_range(2..=5);
        let k = rng.random_range(1..=(m - 1).min(3));
        let res = random_polyform(m, k, 3, &mut rng).and_then(|f| {
            let pts = sample_points(m, &mut rng);
            h_bound_check(&f, &pts[..pts.len().min(10)], radius)
        });
        match res {
            Ok(r) => {
                for p in &r.points {
                    t.record(p.margin, p.margin >= BOUND_TOL);
                }
            }
            Err(e) => t.fail(format!("polynomial case {case}: {e}")),
        }
    }
    t.finish()
}

/// Spectra are unchanged by symplectic and anti-symplectic maps and scale
/// linearly.
pub fn spectrum_suite(seed: u64, count: usize) -> CheckOutcome {
    let mut t = Tally::error("spectrum invariance", "max relative error");
    let mut rng = stream(seed, 5);
    for case in 0..count {
        let n = rng.random_range(1..=4);
        let ctx = SympContext::new(n).expect("n >= 1");
        let a = random_ellipsoid(&ctx, &mut rng);
        let psi = if case % 4 == 3 {
            random_antisymplectic(&ctx, &mut rng)
        } else {
            random_symplectic(&ctx, &mut rng)
        };
        let scale: f64 = rng.random_range(0.2..5.0);
        let res = (|| -> Result<(f64, f64)> {
            let base = symplectic_spectrum(&a, &ctx)?;
            let moved = symplectic_spectrum(&(&psi * &a), &ctx)?;
            let scaled = symplectic_spectrum(&(&a * scale), &ctx)?;
            let inv = base
                .radii
                .iter()
                .zip(&moved.radii)
                .map(|(x, y)| rel_err(*x, *y))
                .fold(0.0, f64::max);
            let lin = base
                .radii
                .iter()
                .zip(&scaled.radii)
                .map(|(x, y)| rel_err(scale * x, *y))
                .fold(0.0, f64::max);
            Ok((inv, lin))
        })();
        match res {
            Ok((inv, lin)) => t.record(inv.max(lin), inv <= 1e-8 && lin <= 1e-10),
            Err(e) => t.fail(format!("case {case}: {e}")),
        }
    }
    t.finish()
}

/// The defect splits into conformality and complex-linearity terms.
pub fn decomposition_suite(seed: u64, count: usize) -> CheckOutcome {
    let mut t = Tally::error("defect decomposition", "max relative error");
    let mut rng = stream(seed, 6);
    for case in 0..count {
        let n = rng.random_range(1..=4);
        let ctx = SympContext::new(n).expect("n >= 1");
        let target: f64 = rng.random_range(0.01..0.99);
        let res = random_with_defect(&ctx, target, &mut rng)
            .and_then(|phi| defect_decomposition_check(&phi, &ctx));
        match res {
            Ok(c) => t.record(c.rel_error, c.rel_error <= 1e-8),
            Err(e) => t.fail(format!("case {case}: {e}")),
        }
    }
    t.finish()
}

/// Maps with small defect classify as symplectic-like; composed with a
/// reflection they classify as anti-symplectic-like.
pub fn classification_suite(seed: u64, count: usize) -> CheckOutcome {
    let mut t = Tally::error("classification", "max defect used");
    let mut rng = stream(seed, 7);
    for case in 0..count {
        let n = rng.random_range(1..=4);
        let ctx = SympContext::new(n).expect("n >= 1");
        let target: f64 = rng.random_range(0.0..0.1);
        let res = random_with_defect(&ctx, target, &mut rng).and_then(|phi| {
            let a = lambda_mu_invariants(&phi, &ctx)?.classification;
            let flipped = plane_swap(&ctx) * &phi;
            let b = lambda_mu_invariants(&flipped, &ctx)?.classification;
            let anti = anti_defect(&flipped, &ctx)?;
            Ok((a, b, anti))
        });
        match res {
            Ok((a, b, anti)) => {
                let ok = a == Classification::SymplecticLike
                    && b == Classification::AntiSymplecticLike
                    && (anti - target).abs() < 1e-8;
                t.record(target, ok);
            }
            Err(e) => t.fail(format!("case {case}: {e}")),
        }
    }
    t.finish()
}

/// Seeded ε-symplectic maps pass both width certificates and the capacity
/// certificate with `ε' = √2 ε`.
pub fn certificate_suite(seed: u64, maps: usize, ellipsoids: usize) -> CheckOutcome {
    let mut t = Tally::error("eps-symplectic certificates", "max eps");
    let mut rng = stream(seed, 8);
    for case in 0..maps {
        let n = rng.random_range(1..=3);
        let ctx = SympContext::new(n).expect("n >= 1");
        let eps: f64 = rng.random_range(0.0..=0.2);
        let res = random_with_defect(&ctx, eps, &mut rng).and_then(|phi| {
            let batch: Vec<DMatrix<f64>> = (0..ellipsoids)
                .map(|_| random_ellipsoid(&ctx, &mut rng))
                .collect();
            let e2 = SQRT_2 * eps;
            let a = check_eps_nonsqueezing(&phi, e2, &batch, &ctx)?;
            let b = check_eps_nonexpanding(&phi, e2, &batch, &ctx)?;
            let c = capacity_preservation_check(&phi, e2, &batch, &ctx)?;
            Ok([a, b, c])
        });
        match res {
            Ok(reports) => {
                let ok = reports.iter().all(|r| r.pass);
                if !ok {
                    for r in &reports {
                        if let Some(f) = r.failures().next() {
                            t.note(format!(
                                "case {case}: {} {:?} r1={} R1={} bound={}",
                                r.check, f.clause, f.r1, f.big_r1, f.bound
                            ));
                        }
                    }
                }
                t.record(eps, ok);
            }
            Err(e) => t.fail(format!("case {case}: {e}")),
        }
    }
    t.finish()
}

/// Hyperplane slabs land in the cylinder and the squeeze preserves spectra.
pub fn hyperplane_suite(seed: u64, count: usize) -> CheckOutcome {
    let mut t = Tally::margin("hyperplane squeeze", "min radius margin");
    let mut rng = stream(seed, 9);
    for case in 0..count {
        let n = rng.random_range(1..=4);
        let ctx = SympContext::new(n).expect("n >= 1");
        let dim = ctx.dim();
        let u = crate::random::random_gaussian_matrix(dim, 1, &mut rng).column(0).into_owned();
        let bound: f64 = rng.random_range(0.1..3.0);
        let radius: f64 = rng.random_range(0.01..2.0);
        let res = hyperplane_squeeze(&u, bound, radius, &ctx);
        let psi = match res {
            Ok(p) => p,
            Err(e) => {
                t.fail(format!("case {case}: {e}"));
                continue;
            }
        };
        let n_hat = u.normalize();
        let w_hat = ctx.apply_j0(&n_hat);
        let mut worst = f64::INFINITY;
        for _ in 0..20 {
            let raw = crate::random::random_gaussian_matrix(dim, 1, &mut rng).column(0).into_owned();
            let mut x = &raw - &n_hat * n_hat.dot(&raw);
            let p = x.dot(&w_hat);
            let target: f64 = rng.random_range(-bound..=bound);
            x += &w_hat * (target - p);
            let y = &psi * &x;
            worst = worst.min(radius - y[0].hypot(y[1]));
        }
        let a = random_ellipsoid(&ctx, &mut rng);
        let spec_ok = match (
            symplectic_spectrum(&a, &ctx),
            symplectic_spectrum(&(&psi * &a), &ctx),
        ) {
            (Ok(s1), Ok(s2)) => s1
                .radii
                .iter()
                .zip(&s2.radii)
                .all(|(x, y)| rel_err(*x, *y) <= 1e-6),
            _ => false,
        };
        t.record(worst, worst >= -1e-9 * (1.0 + radius) && spec_ok);
    }
    t.finish()
}

/// Moser correction: plane scalings, random ε-symplectic maps, fourth-order
/// convergence and agreement of the pointwise and matrix flows.
pub fn moser_suite(seed: u64, count: usize) -> Vec<CheckOutcome> {
    let mut rng = stream(seed, 10);
    let config = FlowConfig::default();

    let mut scaling = Tally::error("moser plane scaling", "max |psi - 1/c|");
    let mut fixed: Vec<Vec<f64>> = vec![vec![0.8], vec![1.25], vec![0.8, 1.25], vec![0.9, 1.1, 1.2]];
    while fixed.len() < 4 + count.div_ceil(5) {
        let n = rng.random_range(1..=3);
        let cs: Vec<f64> = (0..n).map(|_| rng.random_range(0.8..=1.25)).collect();
        let g: f64 = cs.iter().map(|c| (c * c - 1.0f64).powi(2)).sum::<f64>().sqrt();
        if g < 0.7 {
            fixed.push(cs);
        }
    }
    for cs in &fixed {
        let ctx = SympContext::new(cs.len()).expect("n >= 1");
        let phi = plane_scaling(cs);
        let inv: Vec<f64> = cs.iter().map(|c| 1.0 / c).collect();
        let res = defect(&phi, &ctx).and_then(|e| symplectify(&phi, e, &config, &ctx));
        match res {
            Ok(r) => {
                let err = (r.psi_matrix() - plane_scaling(&inv)).amax();
                scaling.record(err, err <= 1e-6 && r.pass);
            }
            Err(e) => scaling.fail(format!("{cs:?}: {e}")),
        }
    }

    let mut random = Tally::margin("moser random maps", "min margin over all bounds");
    for case in 0..count {
        let n = rng.random_range(1..=3);
        let ctx = SympContext::new(n).expect("n >= 1");
        let res = random_with_defect(&ctx, 0.05, &mut rng)
            .and_then(|phi| symplectify(&phi, 0.05, &config, &ctx));
        match res {
            Ok(r) => {
                let m = [
                    r.residual_defect.margin,
                    r.displacement.margin,
                    r.sandwich_lower.margin,
                    r.sandwich_upper.margin,
                ]
                .into_iter()
                .fold(f64::INFINITY, f64::min);
                let ok = r.residual_defect.value <= 1e-6
                    && r.displacement.margin >= -1e-6
                    && r.sandwich_lower.margin >= -1e-6
                    && r.sandwich_upper.margin >= -1e-6;
                random.record(m, ok);
            }
            Err(e) => random.fail(format!("case {case}: {e}")),
        }
    }

    let mut order = Tally::error("moser convergence order", "max |ratio - 16|");
    let mut cases: Vec<DMatrix<f64>> = vec![plane_scaling(&[1.25, 0.8])];
    for _ in 0..2 {
        let ctx = SympContext::new(2).expect("n = 2");
        if let Ok(phi) = random_with_defect(&ctx, 0.2, &mut rng) {
            cases.push(phi);
        }
    }
    for phi in &cases {
        let ctx = SympContext::for_matrix(phi).expect("square even matrix");
        match convergence_ratio(phi, 8, &ctx) {
            Ok(r) => {
                order.note(format!("ratio {r:.3}"));
                order.record((r - 16.0).abs(), (r - 16.0).abs() <= 2.0);
            }
            Err(e) => order.fail(e.to_string()),
        }
    }

    let mut pointwise = Tally::error("moser pointwise flow", "max |pointwise - matrix|");
    let coarse = FlowConfig {
        step_size: 1e-2,
        ..config
    };
    for case in 0..count.div_ceil(20) {
        let n = rng.random_range(1..=2);
        let ctx = SympContext::new(n).expect("n >= 1");
        let pts: Vec<Vec<f64>> = (0..4)
            .map(|_| (0..2 * n).map(|_| rng.random_range(-0.5..0.5)).collect())
            .collect();
        let res = random_with_defect(&ctx, 0.05, &mut rng).and_then(|phi| {
            let psi = integrate_flow(&phi, coarse.steps(), &ctx)?;
            let r = symplectify_polynomial_pointwise(
                &PolyMap::linear(&phi)?,
                &pts,
                0.05,
                &coarse,
                &ctx,
            )?;
            let err = r
                .trajectories
                .iter()
                .zip(&pts)
                .map(|(tr, p)| {
                    let want = &psi * DVector::from_column_slice(p);
                    (DVector::from_column_slice(&tr.end) - want).norm()
                })
                .fold(0.0, f64::max);
            Ok((err, r.pass))
        });
        match res {
            Ok((err, ok)) => pointwise.record(err, err <= 1e-8 && ok),
            Err(e) => pointwise.fail(format!("case {case}: {e}")),
        }
    }

    vec![
        scaling.finish(),
        random.finish(),
        order.finish(),
        pointwise.finish(),
    ]
}

/// `z_0`, `c_ρ` and `K(ε)` checks.
pub fn constants_suite() -> CheckOutcome {
    let mut t = Tally::error("rigidity constants", "max deviation");
    let z = cubic_z0();
    let dz = (z.bisection - z.closed_form).abs();
    t.record(dz, dz <= 1e-12);
    t.note(format!("z0 = {:.12}, 1 - z0^2 = {:.6}", z.bisection, z.threshold));
    t.record((z.threshold - 0.2).abs(), (z.threshold - 0.2).abs() < 0.01);
    match c_rho(1.0) {
        Ok(c) => t.record((c - 1.0).abs(), c == 1.0),
        Err(e) => t.fail(e.to_string()),
    }
    for n in 1..=5 {
        match rigidity_bound(0.0, n) {
            Ok(k) => t.record(k.value, k.value == 0.0),
            Err(e) => t.fail(e.to_string()),
        }
        let mut prev = 0.0;
        let mut drop: f64 = 0.0;
        let mut ok = true;
        for i in 0..100 {
            let eps = z.threshold * i as f64 / 100.0;
            match rigidity_bound(eps, n) {
                Ok(k) => {
                    drop = drop.max(prev - k.value);
                    prev = k.value;
                }
                Err(_) => ok = false,
            }
        }
        t.record(drop.max(0.0), ok && drop <= 0.0);
    }
    t.finish()
}

/// Limits of ε_k-symplectic sequences: the defect of the limit is at most
/// `liminf ε_k`.
pub fn limit_suite(seed: u64) -> CheckOutcome {
    let mut t = Tally::margin("defect of limits", "min (liminf eps_k - defect(limit))");
    let mut rng = stream(seed, 11);
    let ctx = SympContext::new(2).expect("n = 2");
    let mut limits: Vec<DMatrix<f64>> = vec![
        random_symplectic(&ctx, &mut rng),
        random_antisymplectic(&ctx, &mut rng),
        shear_example(2, 0.1, 2.0).expect("valid parameters"),
    ];
    if let Ok(m) = random_with_defect(&ctx, 0.3, &mut rng) {
        limits.push(m);
    }
    for phi in &limits {
        let dir = crate::random::random_gaussian_matrix(4, 4, &mut rng);
        let eps: Vec<f64> = (1..=10)
            .map(|j| {
                let step = 10f64.powi(-j);
                defect(&(phi + &dir * step), &ctx).unwrap_or(f64::NAN)
            })
            .collect();
        let liminf = eps[eps.len() - 3..].iter().copied().fold(f64::INFINITY, f64::min);
        let lim = defect(phi, &ctx).unwrap_or(f64::NAN);
        let margin = liminf + 1e-8 - lim;
        t.record(liminf - lim, margin >= 0.0);
    }
    t.finish()
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub seed: u64,
    pub scale: Scale,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
}

/// Runs every check; `Full` uses the acceptance sizes.
pub fn run_suite(seed: u64, scale: Scale) -> SuiteReport {
    let f = |full: usize, smoke: usize| match scale {
        Scale::Full => full,
        Scale::Smoke => smoke,
    };
    let mut checks = vec![
        shear_fixture(),
        norm_suite(seed, f(10_000, 1_000), 64),
        homotopy_suite(seed, f(500, 60)),
        bound_suite(seed, f(100, 20), f(100, 20)),
        spectrum_suite(seed, f(1_000, 100)),
        decomposition_suite(seed, f(1_000, 100)),
        classification_suite(seed, f(200, 40)),
        certificate_suite(seed, f(500, 40), f(50, 20)),
        hyperplane_suite(seed, f(100, 20)),
    ];
    checks.extend(moser_suite(seed, f(100, 10)));
    checks.push(constants_suite());
    checks.push(limit_suite(seed));
    let pass = checks.iter().all(|c| c.pass);
    SuiteReport {
        seed,
        scale,
        checks,
        pass,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_suites_pass() {
        assert!(shear_fixture().pass);
        assert!(constants_suite().pass);
        assert!(limit_suite(1).pass);
        let n = norm_suite(1, 50, 16);
        assert!(n.pass, "{n:?}");
        let hm = homotopy_suite(1, 10);
        assert!(hm.pass, "{hm:?}");
    }

    #[test]
    fn outcomes_are_deterministic() {
        assert_eq!(spectrum_suite(3, 10), spectrum_suite(3, 10));
        assert_eq!(decomposition_suite(3, 10), decomposition_suite(3, 10));
    }
}
