use nalgebra::DMatrix;
use proptest::prelude::*;

use epsymp::exterior::{norm2, wedge, Covector};
use epsymp::io::{format_matrix, parse_matrix};
use epsymp::polyform::{d, h, h_via_contraction_first, homotopy_identity_check, iota_radial, PolyForm};
use epsymp::random::{
    random_covector, random_ellipsoid, random_polyform, random_symplectic, random_with_defect,
    seeded_rng,
};
use epsymp::symplectic::{defect, symplectic_spectrum, SympContext, TwoForm};

fn close(a: &Covector, b: &Covector, tol: f64) -> bool {
    norm2(&(a - b)) <= tol * (1.0 + norm2(a).max(norm2(b)))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn wedge_is_graded_commutative(seed in any::<u64>(), m in 2usize..7, k in 1usize..3, l in 1usize..3) {
        prop_assume!(k + l <= m);
        let mut rng = seeded_rng(seed);
        let a = random_covector(m, k, &mut rng).unwrap();
        let b = random_covector(m, l, &mut rng).unwrap();
        let ab = wedge(&a, &b).unwrap();
        let ba = wedge(&b, &a).unwrap();
        let sign = if (k * l) % 2 == 0 { 1.0 } else { -1.0 };
        prop_assert!(close(&ab, &(&ba * sign), 1e-12));
    }

    #[test]
    fn wedge_is_associative(seed in any::<u64>(), m in 3usize..7) {
        let mut rng = seeded_rng(seed);
        let a = random_covector(m, 1, &mut rng).unwrap();
        let b = random_covector(m, 1, &mut rng).unwrap();
        let c = random_covector(m, 1, &mut rng).unwrap();
        let left = wedge(&wedge(&a, &b).unwrap(), &c).unwrap();
        let right = wedge(&a, &wedge(&b, &c).unwrap()).unwrap();
        prop_assert!(close(&left, &right, 1e-12));
    }

    #[test]
    fn standard_form_reconstructs(seed in any::<u64>(), m in 1usize..9) {
        let mut rng = seeded_rng(seed);
        let c = random_covector(m.max(2), 2, &mut rng).unwrap();
        let form = TwoForm::from_covector(&c).unwrap();
        let sf = form.standard_form();
        let err = (sf.reconstruct() - form.matrix()).norm();
        prop_assert!(err <= 1e-8 * (1.0 + form.matrix().norm()));
        let b = sf.basis_matrix();
        let id = DMatrix::<f64>::identity(b.ncols(), b.ncols());
        prop_assert!((b.transpose() * &b - id).norm() < 1e-8);
    }

    #[test]
    fn defect_is_invariant_under_left_symplectic(seed in any::<u64>(), n in 1usize..4, target in 0.0f64..0.9) {
        let ctx = SympContext::new(n).unwrap();
        let mut rng = seeded_rng(seed);
        let phi = random_with_defect(&ctx, target, &mut rng).unwrap();
        let s = random_symplectic(&ctx, &mut rng);
        let a = defect(&phi, &ctx).unwrap();
        let b = defect(&(s * &phi), &ctx).unwrap();
        prop_assert!((a - b).abs() < 1e-9);
    }

    #[test]
    fn spectrum_scales_linearly(seed in any::<u64>(), n in 1usize..5, a in 0.1f64..10.0) {
        let ctx = SympContext::new(n).unwrap();
        let e = random_ellipsoid(&ctx, &mut seeded_rng(seed));
        let base = symplectic_spectrum(&e, &ctx).unwrap();
        let scaled = symplectic_spectrum(&(&e * a), &ctx).unwrap();
        for (x, y) in base.radii.iter().zip(&scaled.radii) {
            prop_assert!((a * x - y).abs() <= 1e-10 * y);
        }
    }

    #[test]
    fn matrix_text_roundtrip(seed in any::<u64>(), n in 1usize..5) {
        let ctx = SympContext::new(n).unwrap();
        let m = random_ellipsoid(&ctx, &mut seeded_rng(seed));
        prop_assert_eq!(parse_matrix(&format_matrix(&m)).unwrap(), m);
    }

    #[test]
    fn covector_json_roundtrip(seed in any::<u64>(), m in 1usize..7, k in 0usize..4) {
        prop_assume!(k <= m);
        let c = random_covector(m, k, &mut seeded_rng(seed)).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        prop_assert_eq!(serde_json::from_str::<Covector>(&s).unwrap(), c);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn homotopy_identity_holds(seed in any::<u64>(), m in 2usize..6, k in 1usize..4, deg in 0u32..5) {
        prop_assume!(k < m);
        let f = random_polyform(m, k, deg, &mut seeded_rng(seed)).unwrap();
        prop_assert!(homotopy_identity_check(&f).unwrap());
        prop_assert_eq!(h(&f).unwrap(), h_via_contraction_first(&f).unwrap());
    }

    #[test]
    fn d_squared_and_iota_squared_vanish(seed in any::<u64>(), m in 2usize..6, k in 0usize..4, deg in 0u32..5) {
        prop_assume!(k + 2 <= m);
        let f = random_polyform(m, k, deg, &mut seeded_rng(seed)).unwrap();
        prop_assert!(d(&d(&f).unwrap()).unwrap().is_zero());
        if k >= 2 {
            prop_assert!(iota_radial(&iota_radial(&f).unwrap()).unwrap().is_zero());
        }
    }

    #[test]
    fn h_raises_coefficient_degree_by_one(seed in any::<u64>(), m in 2usize..6, k in 1usize..4, deg in 0u32..5) {
        prop_assume!(k <= m);
        let f = random_polyform(m, k, deg, &mut seeded_rng(seed)).unwrap();
        let hf = h(&f).unwrap();
        prop_assert_eq!(hf.degree() + 1, f.degree());
        if let (Some(a), Some(b)) = (f.poly_degree(), hf.poly_degree()) {
            prop_assert_eq!(b, a + 1);
        }
    }

    #[test]
    fn polyform_json_roundtrip(seed in any::<u64>(), m in 1usize..5, k in 0usize..3) {
        prop_assume!(k <= m);
        let f = random_polyform(m, k, 3, &mut seeded_rng(seed)).unwrap();
        let s = serde_json::to_string(&f).unwrap();
        prop_assert_eq!(serde_json::from_str::<PolyForm>(&s).unwrap(), f);
    }
}
