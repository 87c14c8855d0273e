//! Cross-checks against independently computed values: frozen constants,
//! closed forms and alternative numerical routes.

use nalgebra::{DMatrix, DVector};

use epsymp::exterior::{comass, interior, norm2, pullback, ComassMode, Covector};
use epsymp::moser::{integrate_flow, symplectify, FlowConfig};
use epsymp::polyform::{h, PolyForm};
use epsymp::random::{random_covector, random_ellipsoid, random_polyform, random_with_defect, seeded_rng};
use epsymp::symplectic::{
    cubic_z0, defect, rho, rigidity_bound, squeezing_params, symplectic_spectrum, SympContext,
    TwoForm,
};

// Frozen with a 30-digit mpmath evaluation of the closed formulas.
const RHO_NONLINEAR_01_N2: f64 = 0.737_157_287_525_380_99;
const RHO_LINEAR_01: f64 = 0.926_595_188_721_963_14;
const Z0: f64 = 0.894_107_456_974_982_28;
const Z0_THRESHOLD: f64 = 0.200_571_855_381_730_2;
const K_001_N1: f64 = 0.143_800_051_253_061_8;
const K_001_N5: f64 = 0.321_546_689_769_800_01;
const K_01_N2: f64 = 0.790_492_477_487_057_04;
const K_019_N3: f64 = 2.310_692_589_692_663_8;
const S_I_01: f64 = 0.948_683_298_050_513_8;
const E_I_01: f64 = 1.057_185_883_865_582_2;

#[test]
fn frozen_rho_values() {
    assert!((rho(0.1, 2, false).unwrap() - RHO_NONLINEAR_01_N2).abs() < 1e-14);
    assert!((rho(0.1, 2, true).unwrap() - RHO_LINEAR_01).abs() < 1e-14);
    assert_eq!(rho(0.0, 3, false).unwrap(), 1.0);
}

#[test]
fn frozen_rigidity_constants() {
    let z = cubic_z0();
    assert!((z.bisection - Z0).abs() < 1e-14);
    assert!((z.threshold - Z0_THRESHOLD).abs() < 1e-13);
    for (eps, n, k) in [
        (0.01, 1, K_001_N1),
        (0.01, 5, K_001_N5),
        (0.1, 2, K_01_N2),
        (0.19, 3, K_019_N3),
    ] {
        let got = rigidity_bound(eps, n).unwrap().value;
        assert!((got - k).abs() < 1e-10, "K({eps}, {n}) = {got}, want {k}");
    }
}

#[test]
fn frozen_identity_squeeze_params() {
    let ctx = SympContext::new(2).unwrap();
    let p = squeezing_params(&DMatrix::identity(4, 4), 0.1, &ctx, true).unwrap();
    assert!((p.s_a - S_I_01).abs() < 1e-14);
    assert!((p.e_a.unwrap() - E_I_01).abs() < 1e-14);
}

/// Largest singular value by power iteration on `MᵀM`.
fn power_norm(m: &DMatrix<f64>) -> f64 {
    let s = m.transpose() * m;
    let mut v = DVector::from_fn(m.ncols(), |i, _| 1.0 + 0.1 * i as f64);
    let mut lambda = 0.0;
    for _ in 0..5000 {
        let w = &s * &v;
        let nw = w.norm();
        if nw == 0.0 {
            return 0.0;
        }
        lambda = nw / v.norm();
        v = w / nw;
    }
    lambda.sqrt()
}

#[test]
fn comass_of_two_forms_is_spectral_norm() {
    let mut rng = seeded_rng(41);
    for m in 2..=7 {
        for _ in 0..10 {
            let c = random_covector(m, 2, &mut rng).unwrap();
            let exact = comass(&c, ComassMode::Exact).unwrap().hi;
            let oracle = power_norm(&c.to_skew_matrix().unwrap());
            assert!((exact - oracle).abs() < 1e-8 * (1.0 + oracle), "{exact} vs {oracle}");
        }
    }
}

#[test]
fn spectrum_matches_complex_eigenvalues() {
    let mut rng = seeded_rng(42);
    for n in 1..=4 {
        let ctx = SympContext::new(n).unwrap();
        for _ in 0..20 {
            let a = random_ellipsoid(&ctx, &mut rng);
            let m = a.transpose() * ctx.j0() * &a;
            let mut alphas: Vec<f64> = m
                .complex_eigenvalues()
                .iter()
                .map(|z| z.im.abs().sqrt())
                .collect();
            alphas.sort_by(f64::total_cmp);
            let oracle: Vec<f64> = alphas.chunks(2).map(|p| 0.5 * (p[0] + p[1])).collect();
            let got = symplectic_spectrum(&a, &ctx).unwrap().radii;
            for (g, o) in got.iter().zip(&oracle) {
                assert!((g - o).abs() < 1e-9 * o, "{got:?} vs {oracle:?}");
            }
        }
    }
}

#[test]
fn defect_via_minors_matches_matrix_route() {
    let mut rng = seeded_rng(43);
    for n in 1..=3 {
        let ctx = SympContext::new(n).unwrap();
        for _ in 0..10 {
            let target: f64 = 0.05 + 0.1 * n as f64;
            let phi = random_with_defect(&ctx, target, &mut rng).unwrap();
            let omega = ctx.omega0_covector();
            let pulled = pullback(&phi, &omega).unwrap();
            let oracle = norm2(&(&pulled - &omega));
            let got = defect(&phi, &ctx).unwrap();
            assert!((got - oracle).abs() < 1e-12);
            assert!((got - target).abs() < 1e-9);
        }
    }
}

/// `h f(x) = ∫_0^1 t^{k-1} ι_x f(tx) dt` by composite Simpson quadrature.
fn h_by_quadrature(f: &PolyForm, x: &[f64]) -> Covector {
    let k = f.degree();
    let xv = DVector::from_column_slice(x);
    let steps = 2000;
    let mut acc = Covector::zero(f.dim(), k - 1).unwrap();
    for s in 0..=steps {
        let t = s as f64 / steps as f64;
        let w = if s == 0 || s == steps {
            1.0
        } else if s % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let tx: Vec<f64> = x.iter().map(|v| v * t).collect();
        let val = interior(&xv, &f.evaluate(&tx).unwrap()).unwrap();
        let scale = w * t.powi(k as i32 - 1) / (3.0 * steps as f64);
        acc = &acc + &(&val * scale);
    }
    acc
}

#[test]
fn homotopy_operator_matches_quadrature() {
    let mut rng = seeded_rng(44);
    for m in 2..=4 {
        for k in 1..m {
            for _ in 0..4 {
                let f = random_polyform(m, k, 3, &mut rng).unwrap();
                let hf = h(&f).unwrap();
                for p in 0..3 {
                    let x: Vec<f64> = (0..m).map(|i| 0.3 * ((i + p) as f64).sin()).collect();
                    let exact = hf.evaluate(&x).unwrap();
                    let quad = h_by_quadrature(&f, &x);
                    let diff = norm2(&(&exact - &quad));
                    assert!(diff < 1e-10, "m={m} k={k}: {exact} vs {quad}");
                }
            }
        }
    }
}

#[test]
fn planar_flow_is_inverse_root_determinant() {
    let ctx = SympContext::new(1).unwrap();
    for entries in [[1.1f64, 0.2, -0.1, 0.95], [0.9, 0.3, 0.0, 1.0], [1.0, 0.0, 0.4, 1.3]] {
        let phi = DMatrix::from_row_slice(2, 2, &entries);
        let det: f64 = phi.determinant();
        let want = DMatrix::<f64>::identity(2, 2) / det.sqrt();
        let psi = integrate_flow(&phi, 1000, &ctx).unwrap();
        assert!((psi - want).amax() < 1e-12);
    }
}

#[test]
fn corrected_map_is_symplectic() {
    let ctx = SympContext::new(3).unwrap();
    let mut rng = seeded_rng(45);
    let phi = random_with_defect(&ctx, 0.15, &mut rng).unwrap();
    let r = symplectify(&phi, 0.15, &FlowConfig::default(), &ctx).unwrap();
    let corrected = &phi * r.psi_matrix();
    let pulled = TwoForm::new(corrected.transpose() * ctx.j0() * &corrected).unwrap();
    let diff = pulled.matrix() - ctx.j0();
    assert!(diff.amax() < 1e-9);
    assert!(r.pass);
}
