//! Seeded generators for test matrices, covectors and polynomial forms.
//!
//! Every generator draws from a [`ChaCha8Rng`], so a `u64` seed fixes the
//! output across platforms.

use nalgebra::DMatrix;
use num_bigint::BigInt;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};

use crate::error::{Error, Result};
use crate::exterior::{combinations, Covector};
use crate::polyform::{Poly, PolyForm, Rational};
use crate::symplectic::{defect, SympContext};

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn gaussian(rng: &mut ChaCha8Rng) -> f64 {
    StandardNormal.sample(rng)
}

pub fn random_gaussian_matrix(rows: usize, cols: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    DMatrix::from_fn(rows, cols, |_, _| gaussian(rng))
}

/// Haar-distributed orthogonal matrix (QR of a Gaussian matrix with the
/// signs of `R`'s diagonal folded into `Q`).
pub fn random_orthogonal(dim: usize, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let qr = random_gaussian_matrix(dim, dim, rng).qr();
    let mut q = qr.q();
    let r = qr.r();
    for j in 0..dim {
        if r[(j, j)] < 0.0 {
            q.column_mut(j).neg_mut();
        }
    }
    q
}

/// A product of symplectic rotations, unitary plane mixings, symmetric
/// shears and per-plane squeezes.
pub fn random_symplectic(ctx: &SympContext, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let n = ctx.n();
    let dim = ctx.dim();
    let mut s = DMatrix::<f64>::identity(dim, dim);
    for _ in 0..2 {
        // rotation inside each plane
        let mut g = DMatrix::<f64>::identity(dim, dim);
        for p in 0..n {
            let th: f64 = rng.random_range(0.0..std::f64::consts::TAU);
            let (sn, cs) = th.sin_cos();
            g[(2 * p, 2 * p)] = cs;
            g[(2 * p, 2 * p + 1)] = -sn;
            g[(2 * p + 1, 2 * p)] = sn;
            g[(2 * p + 1, 2 * p + 1)] = cs;
        }
        s = g * s;
        // the same rotation on (x_p, x_q) and (y_p, y_q)
        for p in 0..n {
            for q in p + 1..n {
                let th: f64 = rng.random_range(0.0..std::f64::consts::TAU);
                let (sn, cs) = th.sin_cos();
                let mut g = DMatrix::<f64>::identity(dim, dim);
                for off in 0..2 {
                    let (a, b) = (2 * p + off, 2 * q + off);
                    g[(a, a)] = cs;
                    g[(a, b)] = -sn;
                    g[(b, a)] = sn;
                    g[(b, b)] = cs;
                }
                s = g * s;
            }
        }
        // y += S x with S symmetric
        let mut g = DMatrix::<f64>::identity(dim, dim);
        for p in 0..n {
            for q in p..n {
                let v = 0.3 * gaussian(rng);
                g[(2 * p + 1, 2 * q)] = v;
                g[(2 * q + 1, 2 * p)] = v;
            }
        }
        s = g * s;
        // (x, y) ↦ (a x, y / a)
        let mut g = DMatrix::<f64>::identity(dim, dim);
        for p in 0..n {
            let a: f64 = rng.random_range(0.7..1.4);
            g[(2 * p, 2 * p)] = a;
            g[(2 * p + 1, 2 * p + 1)] = 1.0 / a;
        }
        s = g * s;
    }
    s
}

/// `diag(1, −1, …, 1, −1)` times a random symplectic matrix.
pub fn random_antisymplectic(ctx: &SympContext, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let mut s = random_symplectic(ctx, rng);
    for p in 0..ctx.n() {
        s.row_mut(2 * p + 1).neg_mut();
    }
    s
}

/// `U diag(σ) V` with Haar orthogonal `U, V` and singular values in
/// `[0.5, 2]`.
pub fn random_ellipsoid(ctx: &SympContext, rng: &mut ChaCha8Rng) -> DMatrix<f64> {
    let dim = ctx.dim();
    let u = random_orthogonal(dim, rng);
    let v = random_orthogonal(dim, rng);
    let sigma = DMatrix::from_fn(dim, dim, |i, j| {
        if i == j {
            rng.random_range(0.5..2.0)
        } else {
            0.0
        }
    });
    u * sigma * v
}

/// `S (I + t N)` with `S` random symplectic, `N` Gaussian and `t ≥ 0`
/// tuned by bisection until the defect is within `1e-12` of `target`.
///
/// `target` may be anything in `[0, 1)`.
pub fn random_with_defect(
    ctx: &SympContext,
    target: f64,
    rng: &mut ChaCha8Rng,
) -> Result<DMatrix<f64>> {
    if !(0.0..1.0).contains(&target) {
        return Err(Error::OutOfRange {
            name: "defect",
            value: target,
            range: "[0, 1)",
        });
    }
    let dim = ctx.dim();
    let s = random_symplectic(ctx, rng);
    let n = random_gaussian_matrix(dim, dim, rng);
    let id = DMatrix::<f64>::identity(dim, dim);
    if target == 0.0 {
        return Ok(s);
    }
    let f = |t: f64| -> Result<f64> { defect(&(&id + &n * t), ctx) };
    let (mut lo, mut hi) = (0.0, 1e-3);
    while f(hi)? < target {
        lo = hi;
        hi *= 2.0;
        if hi > 1e6 {
            return Err(Error::Precondition("defect target not bracketed".into()));
        }
    }
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        let v = f(mid)?;
        if (v - target).abs() <= 1e-13 {
            lo = mid;
            hi = mid;
            break;
        }
        if v < target {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(s * (&id + &n * (0.5 * (lo + hi))))
}

/// A random matrix with defect `eps` within `1e-9`.
pub fn random_eps_symplectic(n: usize, eps: f64, seed: u64) -> Result<DMatrix<f64>> {
    let ctx = SympContext::new(n)?;
    if !(0.0..1.0 / std::f64::consts::SQRT_2).contains(&eps) {
        return Err(Error::OutOfRange {
            name: "eps",
            value: eps,
            range: "[0, 1/√2)",
        });
    }
    let mut rng = seeded_rng(seed);
    random_with_defect(&ctx, eps, &mut rng)
}

/// A k-covector on `R^m` with Gaussian coefficients on a random subset of
/// indices (possibly all of them).
pub fn random_covector(m: usize, k: usize, rng: &mut ChaCha8Rng) -> Result<Covector> {
    let all = combinations(m, k);
    let dense = rng.random_bool(0.5);
    let mut terms = Vec::new();
    for i in all {
        if dense || rng.random_bool(0.4) {
            terms.push((i.entries().to_vec(), gaussian(rng)));
        }
    }
    Covector::from_terms(m, k, terms)
}

/// A k-form on `R^m` whose coefficients are sums of up to three monomials of
/// total degree at most `max_degree`, with small rational coefficients.
pub fn random_polyform(
    m: usize,
    k: usize,
    max_degree: u32,
    rng: &mut ChaCha8Rng,
) -> Result<PolyForm> {
    let mut terms = Vec::new();
    for idx in combinations(m, k) {
        if !rng.random_bool(0.6) {
            continue;
        }
        let mut p = Poly::zero(m);
        for _ in 0..rng.random_range(1..=3) {
            let total = rng.random_range(0..=max_degree);
            let mut exp = vec![0u32; m];
            for _ in 0..total {
                exp[rng.random_range(0..m)] += 1;
            }
            let num: i64 = rng.random_range(-9..=9);
            let den: i64 = rng.random_range(1..=4);
            p.add_term(exp, Rational::new(BigInt::from(num), BigInt::from(den)));
        }
        terms.push((idx.entries().to_vec(), p));
    }
    PolyForm::from_terms(m, k, terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symplectic::anti_defect;

    #[test]
    fn generated_maps_have_their_type() {
        let mut rng = seeded_rng(7);
        for n in 1..=4 {
            let ctx = SympContext::new(n).unwrap();
            for _ in 0..10 {
                let s = random_symplectic(&ctx, &mut rng);
                assert!(defect(&s, &ctx).unwrap() < 1e-12);
                let a = random_antisymplectic(&ctx, &mut rng);
                assert!(anti_defect(&a, &ctx).unwrap() < 1e-12);
                let o = random_orthogonal(2 * n, &mut rng);
                let id = DMatrix::<f64>::identity(2 * n, 2 * n);
                assert!((o.transpose() * &o - id).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn eps_symplectic_hits_target() {
        for seed in 0..20 {
            for eps in [0.0, 0.05, 0.2, 0.7] {
                let phi = random_eps_symplectic(2, eps, seed).unwrap();
                let ctx = SympContext::new(2).unwrap();
                assert!((defect(&phi, &ctx).unwrap() - eps).abs() <= 1e-9);
            }
        }
        assert_eq!(
            random_eps_symplectic(3, 0.05, 11).unwrap(),
            random_eps_symplectic(3, 0.05, 11).unwrap()
        );
        assert!(random_eps_symplectic(2, 0.71, 0).is_err());
    }

    #[test]
    fn ellipsoids_are_well_conditioned() {
        let mut rng = seeded_rng(3);
        let ctx = SympContext::new(3).unwrap();
        for _ in 0..20 {
            let a = random_ellipsoid(&ctx, &mut rng);
            let sv = a.singular_values();
            assert!(sv.max() <= 2.0 + 1e-12 && sv.min() >= 0.5 - 1e-12);
        }
    }

    #[test]
    fn polyforms_are_reproducible() {
        let a = random_polyform(4, 2, 3, &mut seeded_rng(5)).unwrap();
        let b = random_polyform(4, 2, 3, &mut seeded_rng(5)).unwrap();
        assert_eq!(a, b);
        assert!(a.poly_degree().unwrap_or(0) <= 3);
    }
}
