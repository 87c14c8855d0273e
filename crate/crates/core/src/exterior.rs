//! Coefficient-level exterior algebra on `R^m`.
//!
//! A k-covector is stored through its coefficients `f_σ` with respect to the
//! dual standard basis, `c = Σ_σ f_σ dx_σ(1) ∧ … ∧ dx_σ(k)`, where `σ` runs
//! over strictly increasing multi-indices. Indices are 0-based in memory and
//! 1-based in the JSON exchange format.
//!
//! Two norms are provided. [`norm2`] is the Euclidean norm of the coefficient
//! vector. [`comass`] is the supremum of `c(v_1, …, v_k)` over unit vectors;
//! it is computed exactly in degrees where a closed form exists and bracketed
//! otherwise.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use nalgebra::{DMatrix, DVector};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::symplectic::TwoForm;

/// Default number of random simple k-vectors tried by the comass sandwich.
pub const DEFAULT_COMASS_TRIALS: usize = 10_000;

/// Tolerance on `|G - I|` for bases that must be orthonormal.
pub const ORTHONORMAL_TOL: f64 = 1e-9;

/// A strictly increasing multi-index (0-based).
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(Vec<usize>);

impl MultiIndex {
    /// Validates `entries` against the ambient dimension `m`.
    pub fn new(entries: Vec<usize>, m: usize) -> Result<Self> {
        let increasing = entries.windows(2).all(|w| w[0] < w[1]);
        let in_range = entries.last().map_or(true, |&e| e < m);
        if !increasing || !in_range {
            return Err(Error::InvalidIndex(entries));
        }
        Ok(MultiIndex(entries))
    }

    /// Builds an index from 1-based entries, as used in the file formats.
    pub fn from_one_based(entries: &[usize], m: usize) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidIndex(entries.to_vec()));
        }
        Self::new(entries.iter().map(|e| e - 1).collect(), m)
    }

    pub(crate) fn from_sorted_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0] < w[1]));
        MultiIndex(entries)
    }

    pub fn empty() -> Self {
        MultiIndex(Vec::new())
    }

    pub fn entries(&self) -> &[usize] {
        &self.0
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn one_based(&self) -> Vec<usize> {
        self.0.iter().map(|e| e + 1).collect()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.0.binary_search(&i).is_ok()
    }

    /// Drops the entry at `pos`.
    pub fn remove(&self, pos: usize) -> MultiIndex {
        let mut e = self.0.clone();
        e.remove(pos);
        MultiIndex(e)
    }

    /// Inserts `i` and returns the new index with the position it landed at,
    /// or `None` if `i` is already present. Moving `dx_i` from the front to
    /// that position costs the sign `(-1)^pos`.
    pub fn insert(&self, i: usize) -> Option<(MultiIndex, usize)> {
        match self.0.binary_search(&i) {
            Ok(_) => None,
            Err(pos) => {
                let mut e = self.0.clone();
                e.insert(pos, i);
                Some((MultiIndex(e), pos))
            }
        }
    }

    /// Merges two disjoint indices, returning the sign of the shuffle that
    /// sorts the concatenation `self ++ other`.
    pub fn merge(&self, other: &MultiIndex) -> Option<(MultiIndex, f64)> {
        let mut inversions = 0usize;
        for &a in &self.0 {
            for &b in &other.0 {
                if a == b {
                    return None;
                }
                if a > b {
                    inversions += 1;
                }
            }
        }
        let mut e: Vec<usize> = self.0.iter().chain(&other.0).copied().collect();
        e.sort_unstable();
        let sign = if inversions % 2 == 0 { 1.0 } else { -1.0 };
        Some((MultiIndex(e), sign))
    }
}

impl fmt::Display for MultiIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.one_based().iter().map(|e| e.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Binomial coefficient `C(m, k)`.
pub fn binomial(m: usize, k: usize) -> u64 {
    if k > m {
        return 0;
    }
    let k = k.min(m - k);
    (0..k).fold(1u64, |acc, i| acc * (m - i) as u64 / (i + 1) as u64)
}

/// All k-subsets of `0..m` in lexicographic order.
pub fn combinations(m: usize, k: usize) -> Vec<MultiIndex> {
    let mut out = Vec::with_capacity(binomial(m, k) as usize);
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(MultiIndex(cur.clone()));
        // advance the rightmost entry that still has room
        let Some(i) = (0..k).rev().find(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// A k-covector on `R^m` with sparse coefficients.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "CovectorJson", into = "CovectorJson")]
pub struct Covector {
    m: usize,
    k: usize,
    coeffs: BTreeMap<MultiIndex, f64>,
}

impl Covector {
    pub fn zero(m: usize, k: usize) -> Result<Self> {
        if k > m {
            return Err(Error::DegreeOverflow { degree: k, dim: m });
        }
        Ok(Covector {
            m,
            k,
            coeffs: BTreeMap::new(),
        })
    }

    /// Builds a covector from `(0-based index, coefficient)` pairs. Repeated
    /// indices accumulate.
    pub fn from_terms<I>(m: usize, k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, f64)>,
    {
        let mut c = Covector::zero(m, k)?;
        for (idx, f) in terms {
            if idx.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: idx.len(),
                });
            }
            let idx = MultiIndex::new(idx, m)?;
            if !f.is_finite() {
                return Err(Error::Precondition("non-finite coefficient".into()));
            }
            *c.coeffs.entry(idx).or_insert(0.0) += f;
        }
        c.normalize();
        Ok(c)
    }

    /// The basis covector `dx_{i_1} ∧ … ∧ dx_{i_k}` (0-based, increasing).
    pub fn basis(m: usize, idx: &[usize]) -> Result<Self> {
        Covector::from_terms(m, idx.len(), [(idx.to_vec(), 1.0)])
    }

    /// The 1-covector `dx_i`.
    pub fn dx(m: usize, i: usize) -> Result<Self> {
        Covector::basis(m, &[i])
    }

    /// A dense coefficient vector in lexicographic index order.
    pub fn from_dense(m: usize, k: usize, values: &[f64]) -> Result<Self> {
        let idx = combinations(m, k);
        if idx.len() != values.len() {
            return Err(Error::DimensionMismatch {
                expected: idx.len(),
                found: values.len(),
            });
        }
        Covector::from_terms(
            m,
            k,
            idx.into_iter().zip(values).map(|(i, &v)| (i.0, v)),
        )
    }

    fn normalize(&mut self) {
        self.coeffs.retain(|_, v| *v != 0.0);
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, idx: &[usize]) -> f64 {
        self.coeffs
            .get(&MultiIndex(idx.to_vec()))
            .copied()
            .unwrap_or(0.0)
    }

    /// Non-zero terms in lexicographic order.
    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, f64)> {
        self.coeffs.iter().map(|(i, &f)| (i, f))
    }

    /// Coefficients over all `C(m, k)` indices in lexicographic order.
    pub fn to_dense(&self) -> Vec<f64> {
        combinations(self.m, self.k)
            .iter()
            .map(|i| self.coeffs.get(i).copied().unwrap_or(0.0))
            .collect()
    }

    /// Evaluates on `k` vectors: `Σ_σ f_σ det(V_σ)` where `V_σ` keeps the
    /// rows `σ` of the `m × k` matrix with the vectors as columns.
    pub fn eval(&self, vectors: &[DVector<f64>]) -> Result<f64> {
        if vectors.len() != self.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                found: vectors.len(),
            });
        }
        for v in vectors {
            if v.len() != self.m {
                return Err(Error::DimensionMismatch {
                    expected: self.m,
                    found: v.len(),
                });
            }
        }
        let cols: Vec<&[f64]> = vectors.iter().map(|v| v.as_slice()).collect();
        Ok(self.eval_columns(&cols))
    }

    fn eval_columns(&self, cols: &[&[f64]]) -> f64 {
        let k = self.k;
        let mut buf = vec![0.0; k * k];
        let mut total = 0.0;
        for (idx, f) in &self.coeffs {
            for (r, &row) in idx.0.iter().enumerate() {
                for (c, col) in cols.iter().enumerate() {
                    buf[r * k + c] = col[row];
                }
            }
            total += f * det_in_place(&mut buf, k);
        }
        total
    }

    /// For a 2-covector, the skew matrix `M` with `c(v, w) = <M v, w>`.
    pub fn to_skew_matrix(&self) -> Result<DMatrix<f64>> {
        if self.k != 2 {
            return Err(Error::UnsupportedDegree(self.k));
        }
        let mut m = DMatrix::zeros(self.m, self.m);
        for (idx, &f) in &self.coeffs {
            let (i, j) = (idx.0[0], idx.0[1]);
            m[(j, i)] = f;
            m[(i, j)] = -f;
        }
        Ok(m)
    }

    /// Inverse of [`Covector::to_skew_matrix`]; reads the lower triangle.
    pub fn from_skew_matrix(m: &DMatrix<f64>) -> Result<Self> {
        if !m.is_square() {
            return Err(Error::DimensionMismatch {
                expected: m.nrows(),
                found: m.ncols(),
            });
        }
        let dim = m.nrows();
        let terms = (0..dim)
            .flat_map(|i| (i + 1..dim).map(move |j| (i, j)))
            .map(|(i, j)| (vec![i, j], m[(j, i)]));
        Covector::from_terms(dim, 2, terms)
    }

    fn check_same_shape(&self, other: &Covector) -> Result<()> {
        if self.m != other.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: other.m,
            });
        }
        if self.k != other.k {
            return Err(Error::DimensionMismatch {
                expected: self.k,
                found: other.k,
            });
        }
        Ok(())
    }

    pub fn try_add(&self, other: &Covector) -> Result<Covector> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (i, f) in &other.coeffs {
            *out.coeffs.entry(i.clone()).or_insert(0.0) += f;
        }
        out.normalize();
        Ok(out)
    }

    pub fn try_sub(&self, other: &Covector) -> Result<Covector> {
        self.try_add(&(-other))
    }
}

impl Neg for &Covector {
    type Output = Covector;
    fn neg(self) -> Covector {
        self * -1.0
    }
}

impl Mul<f64> for &Covector {
    type Output = Covector;
    fn mul(self, s: f64) -> Covector {
        let mut out = self.clone();
        out.coeffs.values_mut().for_each(|v| *v *= s);
        out.normalize();
        out
    }
}

/// Panics on shape mismatch; use [`Covector::try_add`] for fallible addition.
impl Add for &Covector {
    type Output = Covector;
    fn add(self, rhs: &Covector) -> Covector {
        self.try_add(rhs).expect("covector shapes differ")
    }
}

impl Sub for &Covector {
    type Output = Covector;
    fn sub(self, rhs: &Covector) -> Covector {
        self.try_sub(rhs).expect("covector shapes differ")
    }
}

/// Determinant by Gaussian elimination with partial pivoting; clobbers `a`.
fn det_in_place(a: &mut [f64], k: usize) -> f64 {
    let mut det = 1.0;
    for col in 0..k {
        let mut piv = col;
        for r in col + 1..k {
            if a[r * k + col].abs() > a[piv * k + col].abs() {
                piv = r;
            }
        }
        let p = a[piv * k + col];
        if p == 0.0 {
            return 0.0;
        }
        if piv != col {
            for c in 0..k {
                a.swap(col * k + c, piv * k + c);
            }
            det = -det;
        }
        det *= p;
        for r in col + 1..k {
            let factor = a[r * k + col] / p;
            if factor != 0.0 {
                for c in col..k {
                    a[r * k + c] -= factor * a[col * k + c];
                }
            }
        }
    }
    det
}

/// Exterior product with the shuffle sign.
pub fn wedge(a: &Covector, b: &Covector) -> Result<Covector> {
    if a.m != b.m {
        return Err(Error::DimensionMismatch {
            expected: a.m,
            found: b.m,
        });
    }
    if a.k + b.k > a.m {
        return Err(Error::DegreeOverflow {
            degree: a.k + b.k,
            dim: a.m,
        });
    }
    let mut out = Covector::zero(a.m, a.k + b.k)?;
    for (ia, fa) in &a.coeffs {
        for (ib, fb) in &b.coeffs {
            if let Some((idx, sign)) = ia.merge(ib) {
                *out.coeffs.entry(idx).or_insert(0.0) += sign * fa * fb;
            }
        }
    }
    out.normalize();
    Ok(out)
}

/// Euclidean norm of the coefficient vector.
pub fn norm2(c: &Covector) -> f64 {
    c.coeffs.values().map(|f| f * f).sum::<f64>().sqrt()
}

/// How [`comass`] should be evaluated.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ComassMode {
    /// Closed form; available in degrees `0, 1, 2, m-1, m`.
    Exact,
    /// `lo` from random simple unit k-vectors, `hi = norm2`.
    Sandwich { trials: usize, seed: u64 },
}

/// A bracket `lo <= comass <= hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
}

impl Interval {
    pub fn point(x: f64) -> Self {
        Interval { lo: x, hi: x }
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }
}

/// Comass norm of `c`.
pub fn comass(c: &Covector, mode: ComassMode) -> Result<Interval> {
    match mode {
        ComassMode::Exact => comass_exact(c).map(Interval::point),
        ComassMode::Sandwich { trials, seed } => {
            let lo = random_simple_search(c, trials, seed);
            Ok(Interval { lo, hi: norm2(c) })
        }
    }
}

fn comass_exact(c: &Covector) -> Result<f64> {
    let (m, k) = (c.m, c.k);
    if k == 0 || k == m {
        // a single coefficient
        return Ok(norm2(c));
    }
    if k == 1 || k + 1 == m {
        return Ok(norm2(c));
    }
    if k == 2 {
        let sf = TwoForm::new(c.to_skew_matrix()?)?.standard_form();
        return Ok(sf.weights().last().copied().unwrap_or(0.0));
    }
    Err(Error::UnsupportedDegree(k))
}

/// Best `|c(v_1, …, v_k)|` over random orthonormal k-frames.
fn random_simple_search(c: &Covector, trials: usize, seed: u64) -> f64 {
    let (m, k) = (c.m, c.k);
    if c.is_zero() {
        return 0.0;
    }
    if k == 0 {
        return norm2(c);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut frame = vec![vec![0.0; m]; k];
    let mut best: f64 = 0.0;
    for _ in 0..trials {
        random_orthonormal_frame(&mut rng, &mut frame);
        let cols: Vec<&[f64]> = frame.iter().map(|v| v.as_slice()).collect();
        best = best.max(c.eval_columns(&cols).abs());
    }
    best
}

fn random_orthonormal_frame(rng: &mut ChaCha8Rng, frame: &mut [Vec<f64>]) {
    let mut j = 0;
    while j < frame.len() {
        for x in frame[j].iter_mut() {
            *x = StandardNormal.sample(rng);
        }
        for i in 0..j {
            let (done, rest) = frame.split_at_mut(j);
            let d: f64 = done[i].iter().zip(&rest[0]).map(|(a, b)| a * b).sum();
            for (x, b) in rest[0].iter_mut().zip(&done[i]) {
                *x -= d * b;
            }
        }
        let n = frame[j].iter().map(|x| x * x).sum::<f64>().sqrt();
        if n > 1e-8 {
            frame[j].iter_mut().for_each(|x| *x /= n);
            j += 1;
        }
    }
}

/// Simple-vector evaluation of a covector on members of a given basis.
#[derive(Debug, Clone, PartialEq)]
pub struct BasisWitness {
    /// Positions of the chosen basis vectors, increasing.
    pub indices: Vec<usize>,
    /// The chosen vectors, with `sign` already applied to the first one.
    pub vectors: Vec<DVector<f64>>,
    pub sign: f64,
    pub value: f64,
}

/// Maximizes `c(±b_{i_1}, b_{i_2}, …, b_{i_k})` over all k-subsets of an
/// orthonormal basis. The result is at least `C(m,k)^{-1/2} · norm2(c)`.
pub fn comass_basis_witness(c: &Covector, basis: &[DVector<f64>]) -> Result<BasisWitness> {
    let m = c.m;
    if basis.len() != m {
        return Err(Error::DimensionMismatch {
            expected: m,
            found: basis.len(),
        });
    }
    for b in basis {
        if b.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: b.len(),
            });
        }
    }
    let dev = gram_deviation(basis);
    if dev > ORTHONORMAL_TOL {
        return Err(Error::NotOrthonormal(dev));
    }

    let mut best: Option<(MultiIndex, f64)> = None;
    for idx in combinations(m, c.k) {
        let cols: Vec<&[f64]> = idx.0.iter().map(|&i| basis[i].as_slice()).collect();
        let v = c.eval_columns(&cols);
        if best.as_ref().map_or(true, |(_, b)| v.abs() > b.abs()) {
            best = Some((idx, v));
        }
    }
    let (idx, v) = best.expect("at least one subset");
    let sign = if v < 0.0 { -1.0 } else { 1.0 };
    let vectors = idx
        .0
        .iter()
        .enumerate()
        .map(|(p, &i)| if p == 0 { &basis[i] * sign } else { basis[i].clone() })
        .collect();
    Ok(BasisWitness {
        indices: idx.0,
        vectors,
        sign,
        value: v.abs(),
    })
}

/// Largest entry of `|G - I|` for the Gram matrix of `vectors`.
pub fn gram_deviation(vectors: &[DVector<f64>]) -> f64 {
    let mut dev: f64 = 0.0;
    for (i, a) in vectors.iter().enumerate() {
        for (j, b) in vectors.iter().enumerate() {
            let target = if i == j { 1.0 } else { 0.0 };
            dev = dev.max((a.dot(b) - target).abs());
        }
    }
    dev
}

/// Interior multiplication `ι_v c = c(v, ·, …, ·)`.
pub fn interior(v: &DVector<f64>, c: &Covector) -> Result<Covector> {
    if v.len() != c.m {
        return Err(Error::DimensionMismatch {
            expected: c.m,
            found: v.len(),
        });
    }
    if c.k == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let mut out = Covector::zero(c.m, c.k - 1)?;
    for (idx, f) in &c.coeffs {
        for (pos, &i) in idx.0.iter().enumerate() {
            if v[i] == 0.0 {
                continue;
            }
            let sign = if pos % 2 == 0 { 1.0 } else { -1.0 };
            *out.coeffs.entry(idx.remove(pos)).or_insert(0.0) += sign * v[i] * f;
        }
    }
    out.normalize();
    Ok(out)
}

/// Pullback by a linear map: `(L* c)(v_1, …) = c(L v_1, …)`.
///
/// `(L* c)_τ = Σ_σ f_σ det L[σ, τ]`.
pub fn pullback(l: &DMatrix<f64>, c: &Covector) -> Result<Covector> {
    if l.nrows() != c.m || l.ncols() != c.m {
        return Err(Error::DimensionMismatch {
            expected: c.m,
            found: if l.nrows() != c.m { l.nrows() } else { l.ncols() },
        });
    }
    let k = c.k;
    let mut out = Covector::zero(c.m, k)?;
    let mut buf = vec![0.0; k * k];
    for tau in combinations(c.m, k) {
        let mut total = 0.0;
        for (sigma, f) in &c.coeffs {
            for (r, &row) in sigma.0.iter().enumerate() {
                for (cc, &col) in tau.0.iter().enumerate() {
                    buf[r * k + cc] = l[(row, col)];
                }
            }
            total += f * det_in_place(&mut buf, k);
        }
        if total != 0.0 {
            out.coeffs.insert(tau, total);
        }
    }
    Ok(out)
}

/// Factors relating the norm of a k-covector under the metric `<·, A ·>` to
/// the standard one: `(‖A⁻¹‖^{-k/2}, ‖A‖^{k/2})`.
pub fn metric_norm_bounds(norm_a: f64, norm_a_inv: f64, k: usize) -> Result<(f64, f64)> {
    if !(norm_a > 0.0) {
        return Err(Error::OutOfRange {
            name: "‖A‖",
            value: norm_a,
            range: "(0, ∞)",
        });
    }
    if !(norm_a_inv > 0.0) {
        return Err(Error::OutOfRange {
            name: "‖A⁻¹‖",
            value: norm_a_inv,
            range: "(0, ∞)",
        });
    }
    let half_k = k as f64 / 2.0;
    Ok((norm_a_inv.powf(-half_k), norm_a.powf(half_k)))
}

#[derive(Serialize, Deserialize)]
struct CovectorJson {
    m: usize,
    k: usize,
    terms: Vec<TermJson>,
}

#[derive(Serialize, Deserialize)]
struct TermJson {
    index: Vec<usize>,
    coeff: f64,
}

impl TryFrom<CovectorJson> for Covector {
    type Error = Error;
    fn try_from(j: CovectorJson) -> Result<Self> {
        let mut c = Covector::zero(j.m, j.k)?;
        for t in j.terms {
            if t.index.len() != j.k {
                return Err(Error::DimensionMismatch {
                    expected: j.k,
                    found: t.index.len(),
                });
            }
            let idx = MultiIndex::from_one_based(&t.index, j.m)?;
            *c.coeffs.entry(idx).or_insert(0.0) += t.coeff;
        }
        c.normalize();
        Ok(c)
    }
}

impl From<Covector> for CovectorJson {
    fn from(c: Covector) -> Self {
        CovectorJson {
            m: c.m,
            k: c.k,
            terms: c
                .coeffs
                .iter()
                .map(|(i, &f)| TermJson {
                    index: i.one_based(),
                    coeff: f,
                })
                .collect(),
        }
    }
}

impl fmt::Display for Covector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(i, c)| format!("{c}·dx{i}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(m: usize, i: usize) -> DVector<f64> {
        let mut v = DVector::zeros(m);
        v[i] = 1.0;
        v
    }

    fn omega0(n: usize) -> Covector {
        Covector::from_terms(2 * n, 2, (0..n).map(|j| (vec![2 * j, 2 * j + 1], 1.0))).unwrap()
    }

    #[test]
    fn wedge_basis_and_sign() {
        let dx1 = Covector::dx(2, 0).unwrap();
        let dx2 = Covector::dx(2, 1).unwrap();
        assert_eq!(wedge(&dx1, &dx2).unwrap().coeff(&[0, 1]), 1.0);
        assert_eq!(wedge(&dx2, &dx1).unwrap().coeff(&[0, 1]), -1.0);
        let sum = &dx1 + &dx2;
        assert_eq!(wedge(&sum, &dx2).unwrap().coeff(&[0, 1]), 1.0);
        assert!(wedge(&dx1, &dx1).unwrap().is_zero());
    }

    #[test]
    fn wedge_errors() {
        let a = Covector::dx(2, 0).unwrap();
        let b = Covector::dx(3, 0).unwrap();
        assert!(matches!(wedge(&a, &b), Err(Error::DimensionMismatch { .. })));
        let top = Covector::basis(2, &[0, 1]).unwrap();
        assert!(matches!(wedge(&top, &a), Err(Error::DegreeOverflow { .. })));
    }

    #[test]
    fn norm2_examples() {
        assert!((norm2(&omega0(2)) - 2f64.sqrt()).abs() < 1e-15);
        assert_eq!(norm2(&Covector::zero(4, 2).unwrap()), 0.0);
        let c = Covector::from_terms(3, 2, [(vec![0, 1], 3.0), (vec![0, 2], 4.0)]).unwrap();
        assert_eq!(norm2(&c), 5.0);
    }

    #[test]
    fn exact_comass_examples() {
        for n in 1..=4 {
            let c = comass(&omega0(n), ComassMode::Exact).unwrap();
            assert!((c.lo - 1.0).abs() < 1e-12 && c.lo == c.hi);
        }
        let c = Covector::from_terms(4, 2, [(vec![0, 1], 2.0), (vec![2, 3], 1.0)]).unwrap();
        let iv = comass(&c, ComassMode::Exact).unwrap();
        assert!((iv.lo - 2.0).abs() < 1e-12);
        let one = Covector::from_terms(5, 1, [(vec![1], 3.0), (vec![4], -4.0)]).unwrap();
        assert_eq!(comass(&one, ComassMode::Exact).unwrap(), Interval::point(5.0));
        let top = Covector::from_terms(3, 3, [(vec![0, 1, 2], -2.5)]).unwrap();
        assert_eq!(comass(&top, ComassMode::Exact).unwrap(), Interval::point(2.5));
    }

    #[test]
    fn exact_comass_rejects_middle_degree() {
        let c = Covector::basis(6, &[0, 1, 2]).unwrap();
        assert_eq!(
            comass(&c, ComassMode::Exact),
            Err(Error::UnsupportedDegree(3))
        );
    }

    #[test]
    fn sandwich_brackets_exact_value() {
        // brute-force random search converges to the largest plane weight
        let c = Covector::from_terms(4, 2, [(vec![0, 1], 2.0), (vec![2, 3], 1.0)]).unwrap();
        let iv = comass(&c, ComassMode::Sandwich { trials: 20_000, seed: 7 }).unwrap();
        assert!(iv.lo <= 2.0 + 1e-12);
        assert!(iv.lo > 1.95, "lo = {}", iv.lo);
        assert!((iv.hi - 5f64.sqrt()).abs() < 1e-14);
    }

    #[test]
    fn witness_examples() {
        let basis: Vec<_> = (0..4).map(|i| e(4, i)).collect();
        let c = Covector::basis(4, &[0, 1]).unwrap();
        let w = comass_basis_witness(&c, &basis).unwrap();
        assert_eq!(w.indices, vec![0, 1]);
        assert_eq!(w.value, 1.0);
        assert!(w.value >= norm2(&c) / 6f64.sqrt());

        let w = comass_basis_witness(&omega0(2), &basis).unwrap();
        assert_eq!(w.value, 1.0);
        assert!(w.value >= 2f64.sqrt() / 6f64.sqrt());

        let neg = &c * -3.0;
        let w = comass_basis_witness(&neg, &basis).unwrap();
        assert_eq!(w.sign, -1.0);
        assert_eq!(w.value, 3.0);
        assert_eq!(neg.eval(&w.vectors).unwrap(), 3.0);
    }

    #[test]
    fn witness_rejects_skewed_basis() {
        let mut basis: Vec<_> = (0..3).map(|i| e(3, i)).collect();
        basis[1][0] = 1e-6;
        let c = Covector::dx(3, 0).unwrap();
        assert!(matches!(
            comass_basis_witness(&c, &basis),
            Err(Error::NotOrthonormal(_))
        ));
    }

    #[test]
    fn interior_examples() {
        let r = interior(&e(4, 0), &omega0(2)).unwrap();
        assert_eq!(r, Covector::dx(4, 1).unwrap());
        let z = interior(&e(4, 2), &Covector::zero(4, 2).unwrap()).unwrap();
        assert!(z.is_zero() && z.degree() == 1);
        let f = Covector::from_terms(3, 0, [(vec![], 2.0)]).unwrap();
        assert_eq!(interior(&e(3, 0), &f), Err(Error::UnsupportedDegree(0)));
    }

    #[test]
    fn interior_matches_evaluation() {
        // (ι_v c)(w) = c(v, w)
        let c = Covector::from_terms(
            3,
            2,
            [(vec![0, 1], 1.5), (vec![0, 2], -2.0), (vec![1, 2], 0.25)],
        )
        .unwrap();
        let v = DVector::from_vec(vec![0.3, -1.0, 2.0]);
        let w = DVector::from_vec(vec![1.0, 0.5, -0.7]);
        let lhs = interior(&v, &c).unwrap().eval(&[w.clone()]).unwrap();
        let rhs = c.eval(&[v, w]).unwrap();
        assert!((lhs - rhs).abs() < 1e-14);
    }

    #[test]
    fn pullback_examples() {
        let c = Covector::from_terms(4, 2, [(vec![0, 2], 1.5), (vec![1, 3], -0.5)]).unwrap();
        let id = DMatrix::<f64>::identity(4, 4);
        assert_eq!(pullback(&id, &c).unwrap(), c);
        let two = &id * 2.0;
        assert_eq!(pullback(&two, &c).unwrap(), &c * 4.0);
    }

    #[test]
    fn metric_factors() {
        assert_eq!(metric_norm_bounds(1.0, 1.0, 3).unwrap(), (1.0, 1.0));
        assert_eq!(metric_norm_bounds(4.0, 4.0, 2).unwrap(), (0.25, 4.0));
        let (lo, hi) = metric_norm_bounds(2.0, 2.0, 1).unwrap();
        assert!((lo - 0.5f64.sqrt()).abs() < 1e-15 && (hi - 2f64.sqrt()).abs() < 1e-15);
        assert!(metric_norm_bounds(0.0, 1.0, 1).is_err());
        assert!(metric_norm_bounds(1.0, -1.0, 1).is_err());
    }

    #[test]
    fn combinations_are_lexicographic() {
        let c = combinations(4, 2);
        let got: Vec<_> = c.iter().map(|i| i.entries().to_vec()).collect();
        assert_eq!(
            got,
            vec![
                vec![0, 1],
                vec![0, 2],
                vec![0, 3],
                vec![1, 2],
                vec![1, 3],
                vec![2, 3]
            ]
        );
        assert_eq!(combinations(3, 0).len(), 1);
        assert_eq!(combinations(3, 3).len(), 1);
        assert_eq!(combinations(2, 3).len(), 0);
        assert_eq!(binomial(8, 4), 70);
    }

    #[test]
    fn json_is_one_based() {
        let c = Covector::from_terms(4, 2, [(vec![0, 1], 1.0), (vec![2, 3], 1.0)]).unwrap();
        let s = serde_json::to_string(&c).unwrap();
        assert_eq!(
            s,
            r#"{"m":4,"k":2,"terms":[{"index":[1,2],"coeff":1.0},{"index":[3,4],"coeff":1.0}]}"#
        );
        let back: Covector = serde_json::from_str(&s).unwrap();
        assert_eq!(back, c);
        let bad = r#"{"m":4,"k":2,"terms":[{"index":[2,1],"coeff":1.0}]}"#;
        assert!(serde_json::from_str::<Covector>(bad).is_err());
        let zero = r#"{"m":4,"k":1,"terms":[{"index":[0],"coeff":1.0}]}"#;
        assert!(serde_json::from_str::<Covector>(zero).is_err());
    }
}
