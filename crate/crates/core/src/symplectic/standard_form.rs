use nalgebra::{DMatrix, DVector};

/// `‖M u‖ < KERNEL_TOL · ‖M‖` puts `u` in the kernel.
pub const KERNEL_TOL: f64 = 1e-10;

/// Eigenvalues of `MᵀM` closer than this (relative to the largest) are
/// treated as one eigenspace.
const CLUSTER_TOL: f64 = 1e-9;

/// A residual below this marks a candidate direction as already spanned.
const SPANNED_TOL: f64 = 1e-3;

/// Orthonormal basis `u_1, …, u_r, v_1, …, v_r, w_1, …` in which a two-form
/// reads `Σ λ_j² α_j ∧ β_j`: `ω(u_j, v_k) = λ_j² δ_jk`, `ω(u_j, u_k) =
/// ω(v_j, v_k) = 0`, and `ω` vanishes on the kernel vectors `w_i`.
#[derive(Debug, Clone)]
pub struct StandardForm {
    us: Vec<DVector<f64>>,
    vs: Vec<DVector<f64>>,
    kernel: Vec<DVector<f64>>,
    weights: Vec<f64>,
}

impl StandardForm {
    /// `λ_j²`, ascending.
    pub fn weights(&self) -> &[f64] {
        &self.weights
    }

    /// `λ_j`, ascending.
    pub fn lambdas(&self) -> Vec<f64> {
        self.weights.iter().map(|w| w.sqrt()).collect()
    }

    pub fn rank(&self) -> usize {
        2 * self.weights.len()
    }

    pub fn u(&self, j: usize) -> &DVector<f64> {
        &self.us[j]
    }

    pub fn v(&self, j: usize) -> &DVector<f64> {
        &self.vs[j]
    }

    pub fn kernel(&self) -> &[DVector<f64>] {
        &self.kernel
    }

    /// All basis vectors in the order `u…, v…, kernel…`.
    pub fn basis(&self) -> Vec<DVector<f64>> {
        self.us
            .iter()
            .chain(&self.vs)
            .chain(&self.kernel)
            .cloned()
            .collect()
    }

    /// The basis as columns of an orthogonal matrix.
    pub fn basis_matrix(&self) -> DMatrix<f64> {
        DMatrix::from_columns(&self.basis())
    }

    /// Rebuilds the skew matrix `Σ λ_j² (v_j u_jᵀ − u_j v_jᵀ)`.
    pub fn reconstruct(&self) -> DMatrix<f64> {
        let dim = self.us.first().or(self.kernel.first()).map_or(0, |v| v.len());
        let mut m = DMatrix::zeros(dim, dim);
        for ((u, v), w) in self.us.iter().zip(&self.vs).zip(&self.weights) {
            m += (v * u.transpose() - u * v.transpose()) * *w;
        }
        m
    }
}

fn project_off(x: &DVector<f64>, basis: &[DVector<f64>]) -> DVector<f64> {
    let mut r = x.clone();
    // two passes of Gram-Schmidt keep the residual orthogonal to working precision
    for _ in 0..2 {
        for b in basis {
            let d = b.dot(&r);
            r.axpy(-d, b, 1.0);
        }
    }
    r
}

/// Eigen-route decomposition: eigenvectors of the symmetric PSD matrix
/// `MᵀM = -M²` grouped by eigenvalue, then deflated pairwise with
/// `v = M u / ‖M u‖` inside each eigenspace.
pub(super) fn decompose(m: &DMatrix<f64>) -> StandardForm {
    let dim = m.nrows();
    let s = m.tr_mul(m);
    let s = (&s + s.transpose()) * 0.5;
    let eig = s.symmetric_eigen();

    let mut order: Vec<usize> = (0..dim).collect();
    order.sort_by(|&a, &b| eig.eigenvalues[b].total_cmp(&eig.eigenvalues[a]));
    let top = order.first().map_or(0.0, |&i| eig.eigenvalues[i].max(0.0));
    let scale = top.sqrt();

    let mut clusters: Vec<Vec<usize>> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let starts_new = pos == 0
            || eig.eigenvalues[order[pos - 1]] - eig.eigenvalues[i] > CLUSTER_TOL * top;
        if starts_new {
            clusters.push(vec![i]);
        } else {
            clusters.last_mut().expect("non-empty").push(i);
        }
    }

    let mut chosen: Vec<DVector<f64>> = Vec::with_capacity(dim);
    let mut us = Vec::new();
    let mut vs = Vec::new();
    let mut weights = Vec::new();
    let mut kernel = Vec::new();

    for cluster in clusters {
        let candidates: Vec<DVector<f64>> = cluster
            .iter()
            .map(|&i| eig.eigenvectors.column(i).into_owned())
            .collect();
        let mut remaining = candidates.len();
        while remaining > 0 {
            let best = candidates
                .iter()
                .map(|c| project_off(c, &chosen))
                .max_by(|a, b| a.norm().total_cmp(&b.norm()))
                .expect("non-empty cluster");
            if best.norm() < SPANNED_TOL {
                break;
            }
            let u = best.normalize();
            let mu = m * &u;
            if mu.norm() <= KERNEL_TOL * scale || scale == 0.0 {
                chosen.push(u.clone());
                kernel.push(u);
                remaining -= 1;
                continue;
            }
            chosen.push(u.clone());
            let v = project_off(&mu, &chosen);
            if v.norm() < SPANNED_TOL * mu.norm() {
                // no partner left in this eigenspace
                kernel.push(u);
                remaining -= 1;
                continue;
            }
            let mut v = v.normalize();
            let mut w = mu.dot(&v);
            if w < 0.0 {
                v = -v;
                w = -w;
            }
            chosen.push(v.clone());
            us.push(u);
            vs.push(v);
            weights.push(w);
            remaining = remaining.saturating_sub(2);
        }
    }

    // complete to a full basis if clustering left gaps
    for i in 0..dim {
        if chosen.len() == dim {
            break;
        }
        let r = project_off(&DVector::from_fn(dim, |k, _| if k == i { 1.0 } else { 0.0 }), &chosen);
        if r.norm() > SPANNED_TOL {
            let r = r.normalize();
            chosen.push(r.clone());
            kernel.push(r);
        }
    }

    let mut idx: Vec<usize> = (0..weights.len()).collect();
    idx.sort_by(|&a, &b| weights[a].total_cmp(&weights[b]));
    StandardForm {
        us: idx.iter().map(|&i| us[i].clone()).collect(),
        vs: idx.iter().map(|&i| vs[i].clone()).collect(),
        weights: idx.iter().map(|&i| weights[i]).collect(),
        kernel,
    }
}

#[cfg(test)]
mod tests {
    use super::super::{SympContext, TwoForm};
    use super::*;
    use crate::exterior::{gram_deviation, Covector};
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;
    use rand_distr::{Distribution, StandardNormal};

    fn check(form: &TwoForm) -> StandardForm {
        let sf = form.standard_form();
        let basis = sf.basis();
        assert_eq!(basis.len(), form.dim());
        assert!(gram_deviation(&basis) < 1e-9);
        let m = form.matrix();
        let rel = (sf.reconstruct() - m).norm() / m.norm().max(f64::MIN_POSITIVE);
        assert!(rel < 1e-8, "reconstruction error {rel}");
        for j in 0..sf.weights().len() {
            assert!((form.eval(sf.u(j), sf.v(j)) - sf.weights()[j]).abs() < 1e-9 * m.norm());
            // v_j is parallel to M u_j
            let mu = m * sf.u(j);
            assert!((mu.dot(sf.v(j)) - mu.norm()).abs() < 1e-9 * m.norm());
        }
        for w in sf.kernel() {
            assert!((m * w).norm() < 1e-8 * m.norm().max(1.0));
        }
        assert!(sf.weights().windows(2).all(|p| p[0] <= p[1]));
        sf
    }

    #[test]
    fn j0_in_two_dimensions() {
        let ctx = SympContext::new(1).unwrap();
        let sf = check(&ctx.omega0());
        assert_eq!(sf.rank(), 2);
        assert!((sf.weights()[0] - 1.0).abs() < 1e-14);
        // u and v span the plane with ω(u, v) = 1
        assert!((ctx.omega0_eval(sf.u(0), sf.v(0)) - 1.0).abs() < 1e-14);
    }

    #[test]
    fn degenerate_single_plane() {
        let c = Covector::from_terms(4, 2, [(vec![0, 2], 0.1)]).unwrap();
        let sf = check(&TwoForm::from_covector(&c).unwrap());
        assert_eq!(sf.rank(), 2);
        assert!((sf.weights()[0] - 0.1).abs() < 1e-15);
        assert_eq!(sf.kernel().len(), 2);
    }

    #[test]
    fn zero_form_is_all_kernel() {
        let sf = check(&TwoForm::new(DMatrix::zeros(4, 4)).unwrap());
        assert_eq!(sf.rank(), 0);
        assert_eq!(sf.kernel().len(), 4);
    }

    #[test]
    fn repeated_weights() {
        let ctx = SympContext::new(4).unwrap();
        let sf = check(&ctx.omega0());
        assert_eq!(sf.rank(), 8);
        assert!(sf.weights().iter().all(|w| (w - 1.0).abs() < 1e-13));
    }

    #[test]
    fn random_skew_matrices_reconstruct() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for dim in 2..=9 {
            for _ in 0..20 {
                let a = DMatrix::<f64>::from_fn(dim, dim, |_, _| StandardNormal.sample(&mut rng));
                let m = &a - a.transpose();
                let sf = check(&TwoForm::new(m).unwrap());
                assert_eq!(sf.rank(), dim - dim % 2);
            }
        }
    }
}
