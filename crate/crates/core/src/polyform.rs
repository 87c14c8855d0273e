//! Differential forms on `R^m` with exact rational polynomial coefficients,
//! the exterior derivative, and the radial homotopy operator
//! `h = ι_X ∘ α` with `h ∘ d + d ∘ h = id`.
//!
//! For a k-form `f = Σ_σ f_σ dx_σ`, `α` rescales each monomial of total
//! degree `p` in `f_σ` by `1/(k + p)` (the value of `∫_0^1 t^{k-1+p} dt`) and
//! `ι_X` contracts with the radial field `X = Σ x_i ∂_i`.

use std::collections::BTreeMap;
use std::fmt;

use nalgebra::{DMatrix, DVector};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::exterior::{binomial, Covector, MultiIndex};

pub type Rational = BigRational;

/// Exact rational from a finite float.
pub fn rational_from_f64(x: f64) -> Result<Rational> {
    Rational::from_float(x).ok_or_else(|| Error::Precondition(format!("non-finite value {x}")))
}

fn to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or(f64::NAN)
}

/// A polynomial in `m` variables with no zero coefficients stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poly {
    m: usize,
    terms: BTreeMap<Vec<u32>, Rational>,
}

impl Poly {
    pub fn zero(m: usize) -> Self {
        Poly {
            m,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(m: usize, c: Rational) -> Self {
        let mut p = Poly::zero(m);
        p.add_term(vec![0; m], c);
        p
    }

    /// The coordinate function `x_i` (0-based).
    pub fn var(m: usize, i: usize) -> Self {
        let mut e = vec![0; m];
        e[i] = 1;
        let mut p = Poly::zero(m);
        p.add_term(e, Rational::one());
        p
    }

    pub fn monomial(exp: Vec<u32>, c: Rational) -> Self {
        let mut p = Poly::zero(exp.len());
        p.add_term(exp, c);
        p
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    /// Highest total degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| e.iter().sum()).max()
    }

    pub fn is_constant(&self) -> bool {
        self.degree().map_or(true, |d| d == 0)
    }

    /// Adds `c · x^exp`, dropping the entry if it cancels.
    pub fn add_term(&mut self, exp: Vec<u32>, c: Rational) {
        debug_assert_eq!(exp.len(), self.m);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(exp) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Poly, s: &Rational) {
        for (e, c) in &other.terms {
            self.add_term(e.clone(), c * s);
        }
    }

    pub fn scale(&self, s: &Rational) -> Poly {
        let mut out = Poly::zero(self.m);
        out.add_scaled(self, s);
        out
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero(self.m);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }

    /// `x_i · p`.
    pub fn mul_var(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.m);
        for (e, c) in &self.terms {
            let mut e = e.clone();
            e[i] += 1;
            out.terms.insert(e, c.clone());
        }
        out
    }

    /// `∂p/∂x_i`.
    pub fn partial(&self, i: usize) -> Poly {
        let mut out = Poly::zero(self.m);
        for (e, c) in &self.terms {
            if e[i] == 0 {
                continue;
            }
            let mut e2 = e.clone();
            e2[i] -= 1;
            out.add_term(e2, c * Rational::from_integer(BigInt::from(e[i])));
        }
        out
    }

    /// Multiplies each monomial of total degree `p` by `f(p)`.
    fn map_by_degree(&self, f: impl Fn(u32) -> Rational) -> Poly {
        let mut out = Poly::zero(self.m);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), c * f(e.iter().sum()));
        }
        out
    }

    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                let mono: f64 = e
                    .iter()
                    .zip(x)
                    .map(|(&p, &xi)| xi.powi(p as i32))
                    .product();
                to_f64(c) * mono
            })
            .sum()
    }

    /// Floating-point copy for repeated evaluation.
    pub fn to_float(&self) -> FloatPoly {
        FloatPoly {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), to_f64(c)))
                .collect(),
        }
    }
}

/// A polynomial with `f64` coefficients, for hot evaluation loops.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatPoly {
    terms: Vec<(Vec<u32>, f64)>,
}

impl FloatPoly {
    pub fn eval(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(e, c)| {
                c * e
                    .iter()
                    .zip(x)
                    .map(|(&p, &xi)| xi.powi(p as i32))
                    .product::<f64>()
            })
            .sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (e, c)) in self.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if n == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { "-" } else { "+" })?;
            }
            let vars: Vec<String> = e
                .iter()
                .enumerate()
                .filter(|(_, &p)| p > 0)
                .map(|(i, &p)| {
                    if p == 1 {
                        format!("x{}", i + 1)
                    } else {
                        format!("x{}^{}", i + 1, p)
                    }
                })
                .collect();
            if vars.is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", vars.join("·"))?;
            } else {
                write!(f, "{abs}·{}", vars.join("·"))?;
            }
        }
        Ok(())
    }
}

/// A k-form `Σ_σ f_σ dx_σ` with polynomial coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "PolyFormJson", into = "PolyFormJson")]
pub struct PolyForm {
    m: usize,
    k: usize,
    terms: BTreeMap<MultiIndex, Poly>,
}

impl PolyForm {
    pub fn zero(m: usize, k: usize) -> Result<Self> {
        if k > m {
            return Err(Error::DegreeOverflow { degree: k, dim: m });
        }
        Ok(PolyForm {
            m,
            k,
            terms: BTreeMap::new(),
        })
    }

    /// Builds a form from `(0-based index, coefficient)` pairs; repeated
    /// indices accumulate.
    pub fn from_terms<I>(m: usize, k: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Poly)>,
    {
        let mut f = PolyForm::zero(m, k)?;
        for (idx, p) in terms {
            if idx.len() != k {
                return Err(Error::DimensionMismatch {
                    expected: k,
                    found: idx.len(),
                });
            }
            if p.dim() != m {
                return Err(Error::DimensionMismatch {
                    expected: m,
                    found: p.dim(),
                });
            }
            let idx = MultiIndex::new(idx, m)?;
            f.add_at(idx, &p, &Rational::one());
        }
        Ok(f)
    }

    /// The constant-coefficient form with the (exactly converted) coefficients
    /// of `c`.
    pub fn from_covector(c: &Covector) -> Result<Self> {
        let m = c.dim();
        let mut f = PolyForm::zero(m, c.degree())?;
        for (idx, v) in c.terms() {
            f.add_at(idx.clone(), &Poly::constant(m, rational_from_f64(v)?), &Rational::one());
        }
        Ok(f)
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn degree(&self) -> usize {
        self.k
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&MultiIndex, &Poly)> {
        self.terms.iter()
    }

    pub fn coeff(&self, idx: &[usize]) -> Poly {
        self.terms
            .iter()
            .find(|(i, _)| i.entries() == idx)
            .map(|(_, p)| p.clone())
            .unwrap_or_else(|| Poly::zero(self.m))
    }

    /// Largest total degree over all coefficients.
    pub fn poly_degree(&self) -> Option<u32> {
        self.terms.values().filter_map(Poly::degree).max()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.values().all(Poly::is_constant)
    }

    fn add_at(&mut self, idx: MultiIndex, p: &Poly, s: &Rational) {
        let entry = self
            .terms
            .entry(idx.clone())
            .or_insert_with(|| Poly::zero(self.m));
        entry.add_scaled(p, s);
        if entry.is_zero() {
            self.terms.remove(&idx);
        }
    }

    fn check_same_shape(&self, other: &PolyForm) -> Result<()> {
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

    pub fn add(&self, other: &PolyForm) -> Result<PolyForm> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (i, p) in &other.terms {
            out.add_at(i.clone(), p, &Rational::one());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &PolyForm) -> Result<PolyForm> {
        self.check_same_shape(other)?;
        let mut out = self.clone();
        for (i, p) in &other.terms {
            out.add_at(i.clone(), p, &-Rational::one());
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Rational) -> PolyForm {
        let mut out = PolyForm {
            m: self.m,
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (i, p) in &self.terms {
            out.add_at(i.clone(), p, s);
        }
        out
    }

    fn map_coeffs(&self, f: impl Fn(&Poly) -> Poly) -> PolyForm {
        let mut out = PolyForm {
            m: self.m,
            k: self.k,
            terms: BTreeMap::new(),
        };
        for (i, p) in &self.terms {
            out.add_at(i.clone(), &f(p), &Rational::one());
        }
        out
    }

    /// Floating-point coefficients at `x`.
    pub fn evaluate(&self, x: &[f64]) -> Result<Covector> {
        if x.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                found: x.len(),
            });
        }
        Covector::from_terms(
            self.m,
            self.k,
            self.terms
                .iter()
                .map(|(i, p)| (i.entries().to_vec(), p.eval(x))),
        )
    }

    /// Floating-point copy for repeated evaluation.
    pub fn to_float(&self) -> FloatForm {
        FloatForm {
            m: self.m,
            k: self.k,
            terms: self
                .terms
                .iter()
                .map(|(i, p)| (i.entries().to_vec(), p.to_float()))
                .collect(),
        }
    }
}

/// A [`PolyForm`] with `f64` coefficients.
#[derive(Debug, Clone, PartialEq)]
pub struct FloatForm {
    m: usize,
    k: usize,
    terms: Vec<(Vec<usize>, FloatPoly)>,
}

impl FloatForm {
    pub fn evaluate(&self, x: &[f64]) -> Covector {
        Covector::from_terms(
            self.m,
            self.k,
            self.terms.iter().map(|(i, p)| (i.clone(), p.eval(x))),
        )
        .expect("indices validated on construction")
    }

    /// `‖f(x)‖_2` without building a covector.
    pub fn norm2_at(&self, x: &[f64]) -> f64 {
        self.terms
            .iter()
            .map(|(_, p)| p.eval(x).powi(2))
            .sum::<f64>()
            .sqrt()
    }
}

impl fmt::Display for PolyForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(i, p)| {
                let dx: Vec<String> = i.one_based().iter().map(|e| format!("dx{e}")).collect();
                let basis = if dx.is_empty() {
                    String::new()
                } else {
                    format!(" {}", dx.join("∧"))
                };
                if p.terms.len() > 1 {
                    format!("({p}){basis}")
                } else {
                    format!("{p}{basis}")
                }
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Exterior derivative `Σ_σ Σ_i ∂_i f_σ dx_i ∧ dx_σ`.
pub fn d(f: &PolyForm) -> Result<PolyForm> {
    if f.k >= f.m {
        return Err(Error::DegreeOverflow {
            degree: f.k + 1,
            dim: f.m,
        });
    }
    let mut out = PolyForm::zero(f.m, f.k + 1)?;
    for (sigma, p) in &f.terms {
        for i in 0..f.m {
            let Some((tau, pos)) = sigma.insert(i) else {
                continue;
            };
            let dp = p.partial(i);
            if dp.is_zero() {
                continue;
            }
            let sign = if pos % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            out.add_at(tau, &dp, &sign);
        }
    }
    Ok(out)
}

/// `α_k`: a monomial of total degree `p` in a k-form scales by `1/(k + p)`.
///
/// Undefined on degree-0 forms with a constant term.
pub fn alpha(f: &PolyForm) -> Result<PolyForm> {
    let k = f.k as u32;
    if k == 0
        && f
            .terms
            .values()
            .any(|p| p.terms.keys().any(|e| e.iter().all(|&x| x == 0)))
    {
        return Err(Error::UnsupportedDegree(0));
    }
    Ok(f.map_coeffs(|p| {
        p.map_by_degree(|deg| Rational::new(BigInt::one(), BigInt::from(k + deg)))
    }))
}

/// Contraction with the radial field `X = Σ x_i ∂_i`.
pub fn iota_radial(f: &PolyForm) -> Result<PolyForm> {
    if f.k == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let mut out = PolyForm::zero(f.m, f.k - 1)?;
    for (sigma, p) in &f.terms {
        for (j, &i) in sigma.entries().iter().enumerate() {
            let sign = if j % 2 == 0 {
                Rational::one()
            } else {
                -Rational::one()
            };
            out.add_at(sigma.remove(j), &p.mul_var(i), &sign);
        }
    }
    Ok(out)
}

/// The homotopy operator `h_k = ι_X ∘ α_k`.
pub fn h(f: &PolyForm) -> Result<PolyForm> {
    if f.k == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    iota_radial(&alpha(f)?)
}

/// The same operator factored as `α_{k-1} ∘ ι_X`.
pub fn h_via_contraction_first(f: &PolyForm) -> Result<PolyForm> {
    alpha(&iota_radial(f)?)
}

/// Whether `h(d f) + d(h f) − f` vanishes identically.
pub fn homotopy_identity_check(f: &PolyForm) -> Result<bool> {
    if f.k == 0 || f.k >= f.m {
        return Err(Error::OutOfRange {
            name: "k",
            value: f.k as f64,
            range: "1 <= k < m",
        });
    }
    let lhs = h(&d(f)?)?.add(&d(&h(f)?)?)?;
    Ok(lhs.sub(f)?.is_zero())
}

/// Pullback by the dilation `x ↦ r x`: a degree-`p` monomial of a k-form
/// picks up `r^{p+k}`.
pub fn dilation_pullback(f: &PolyForm, r: &Rational) -> PolyForm {
    let k = f.k as i32;
    f.map_coeffs(|p| p.map_by_degree(|deg| num_traits::pow::Pow::pow(r, deg as i32 + k)))
}

/// Exterior product of polynomial forms.
pub fn wedge(a: &PolyForm, b: &PolyForm) -> Result<PolyForm> {
    if a.m != b.m {
        return Err(Error::DimensionMismatch {
            expected: a.m,
            found: b.m,
        });
    }
    let mut out = PolyForm::zero(a.m, a.k + b.k)?;
    for (ia, pa) in &a.terms {
        for (ib, pb) in &b.terms {
            if let Some((idx, sign)) = ia.merge(ib) {
                let s = if sign > 0.0 {
                    Rational::one()
                } else {
                    -Rational::one()
                };
                out.add_at(idx, &pa.mul(pb), &s);
            }
        }
    }
    Ok(out)
}

/// Values on both sides of the homotopy-operator norm bounds at one point.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundPoint {
    pub x: Vec<f64>,
    /// `‖h f(x)‖_2`.
    pub lhs: f64,
    /// `max_t ‖f(tx)‖_2` over the sampling grid.
    pub sampled_max: f64,
    pub rhs: f64,
    pub margin: f64,
    /// `‖x‖/√k · ‖f(x)‖_2`, for constant coefficients only.
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ray_rhs: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub ray_margin: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundReport {
    pub k: usize,
    pub m: usize,
    pub radius: f64,
    pub samples: usize,
    /// The maximum over `t` is sampled, so `rhs` may be under-estimated.
    pub sampled: bool,
    pub points: Vec<BoundPoint>,
    pub min_margin: f64,
    pub pass: bool,
}

/// Grid size for the maximum over `t ∈ [0, 1]`, endpoints included.
pub const BOUND_SAMPLES: usize = 1000;

/// Margins at or above this count as passing.
pub const BOUND_TOL: f64 = -1e-9;

/// Checks `‖h f(x)‖ ≤ ‖x‖ √m max_t ‖f(tx)‖` (k = 1) or
/// `‖h f(x)‖ ≤ ‖x‖ √(k C(m, k−1)) / (k−1) · max_t ‖f(tx)‖` (k > 1) at each
/// point, plus `‖h f(x)‖ ≤ ‖x‖/√k · ‖f(x)‖` when the coefficients are
/// constant.
pub fn h_bound_check(f: &PolyForm, points: &[Vec<f64>], radius: f64) -> Result<BoundReport> {
    let (m, k) = (f.m, f.k);
    if k == 0 {
        return Err(Error::UnsupportedDegree(0));
    }
    let hf = h(f)?.to_float();
    let ff = f.to_float();
    let constant = f.is_constant();
    let factor = if k == 1 {
        (m as f64).sqrt()
    } else {
        (k as f64 * binomial(m, k - 1) as f64).sqrt() / (k - 1) as f64
    };
    let mut out = Vec::with_capacity(points.len());
    let mut min_margin = f64::INFINITY;
    for x in points {
        if x.len() != m {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: x.len(),
            });
        }
        let xn = x.iter().map(|v| v * v).sum::<f64>().sqrt();
        if xn > radius * (1.0 + 1e-12) {
            return Err(Error::Precondition(format!(
                "point of norm {xn} outside the domain of radius {radius}"
            )));
        }
        let lhs = hf.norm2_at(x);
        let mut sampled_max: f64 = 0.0;
        let mut tx = vec![0.0; m];
        for s in 0..BOUND_SAMPLES {
            let t = s as f64 / (BOUND_SAMPLES - 1) as f64;
            for (dst, v) in tx.iter_mut().zip(x) {
                *dst = t * v;
            }
            sampled_max = sampled_max.max(ff.norm2_at(&tx));
        }
        let rhs = xn * factor * sampled_max;
        let margin = rhs - lhs;
        min_margin = min_margin.min(margin);
        let (ray_rhs, ray_margin) = if constant {
            let r = xn / (k as f64).sqrt() * ff.norm2_at(x);
            min_margin = min_margin.min(r - lhs);
            (Some(r), Some(r - lhs))
        } else {
            (None, None)
        };
        out.push(BoundPoint {
            x: x.clone(),
            lhs,
            sampled_max,
            rhs,
            margin,
            ray_rhs,
            ray_margin,
        });
    }
    Ok(BoundReport {
        k,
        m,
        radius,
        samples: BOUND_SAMPLES,
        sampled: true,
        points: out,
        min_margin,
        pass: min_margin >= BOUND_TOL,
    })
}

/// A polynomial map `R^m → R^m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMap {
    components: Vec<Poly>,
}

impl PolyMap {
    pub fn new(components: Vec<Poly>) -> Result<Self> {
        let m = components.len();
        if let Some(p) = components.iter().find(|p| p.dim() != m) {
            return Err(Error::DimensionMismatch {
                expected: m,
                found: p.dim(),
            });
        }
        Ok(PolyMap { components })
    }

    pub fn identity(m: usize) -> Self {
        PolyMap {
            components: (0..m).map(|i| Poly::var(m, i)).collect(),
        }
    }

    /// The linear map `x ↦ L x`, with entries converted exactly.
    pub fn linear(l: &DMatrix<f64>) -> Result<Self> {
        if !l.is_square() {
            return Err(Error::DimensionMismatch {
                expected: l.nrows(),
                found: l.ncols(),
            });
        }
        let m = l.nrows();
        let mut components = Vec::with_capacity(m);
        for r in 0..m {
            let mut p = Poly::zero(m);
            for c in 0..m {
                p.add_scaled(&Poly::var(m, c), &rational_from_f64(l[(r, c)])?);
            }
            components.push(p);
        }
        Ok(PolyMap { components })
    }

    pub fn dim(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn eval(&self, x: &[f64]) -> DVector<f64> {
        DVector::from_iterator(self.dim(), self.components.iter().map(|p| p.eval(x)))
    }

    /// `dφ_i = Σ_l ∂_l φ_i dx_l`.
    fn differential(&self, i: usize) -> PolyForm {
        let m = self.dim();
        let mut f = PolyForm {
            m,
            k: 1,
            terms: BTreeMap::new(),
        };
        for l in 0..m {
            f.add_at(
                MultiIndex::from_sorted_unchecked(vec![l]),
                &self.components[i].partial(l),
                &Rational::one(),
            );
        }
        f
    }

    /// `φ* ω_0 = Σ_j dφ_{x_j} ∧ dφ_{y_j}` in interleaved coordinates.
    pub fn pullback_omega0(&self) -> Result<PolyForm> {
        let m = self.dim();
        if m % 2 != 0 {
            return Err(Error::Precondition(format!("odd dimension {m}")));
        }
        let mut out = PolyForm::zero(m, 2)?;
        for j in 0..m / 2 {
            let w = wedge(&self.differential(2 * j), &self.differential(2 * j + 1))?;
            out = out.add(&w)?;
        }
        Ok(out)
    }
}

/// The standard form `ω_0` with exact coefficients.
pub fn omega0_form(n: usize) -> Result<PolyForm> {
    let m = 2 * n;
    PolyForm::from_terms(
        m,
        2,
        (0..n).map(|j| (vec![2 * j, 2 * j + 1], Poly::constant(m, Rational::one()))),
    )
}

#[derive(Serialize, Deserialize)]
struct PolyFormJson {
    m: usize,
    k: usize,
    terms: Vec<PolyTermJson>,
}

#[derive(Serialize, Deserialize)]
struct PolyTermJson {
    index: Vec<usize>,
    poly: Vec<MonomialJson>,
}

#[derive(Serialize, Deserialize)]
struct MonomialJson {
    exp: Vec<u32>,
    num: String,
    den: String,
}

impl TryFrom<PolyFormJson> for PolyForm {
    type Error = Error;
    fn try_from(j: PolyFormJson) -> Result<Self> {
        let mut f = PolyForm::zero(j.m, j.k)?;
        for t in j.terms {
            if t.index.len() != j.k {
                return Err(Error::DimensionMismatch {
                    expected: j.k,
                    found: t.index.len(),
                });
            }
            let idx = MultiIndex::from_one_based(&t.index, j.m)?;
            let mut p = Poly::zero(j.m);
            for mono in t.poly {
                if mono.exp.len() != j.m {
                    return Err(Error::DimensionMismatch {
                        expected: j.m,
                        found: mono.exp.len(),
                    });
                }
                let num: BigInt = mono
                    .num
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad numerator {:?}", mono.num)))?;
                let den: BigInt = mono
                    .den
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad denominator {:?}", mono.den)))?;
                if den.is_zero() {
                    return Err(Error::Parse("zero denominator".into()));
                }
                p.add_term(mono.exp, Rational::new(num, den));
            }
            f.add_at(idx, &p, &Rational::one());
        }
        Ok(f)
    }
}

impl From<PolyForm> for PolyFormJson {
    fn from(f: PolyForm) -> Self {
        PolyFormJson {
            m: f.m,
            k: f.k,
            terms: f
                .terms
                .iter()
                .map(|(i, p)| PolyTermJson {
                    index: i.one_based(),
                    poly: p
                        .terms
                        .iter()
                        .map(|(e, c)| MonomialJson {
                            exp: e.clone(),
                            num: c.numer().to_string(),
                            den: c.denom().to_string(),
                        })
                        .collect(),
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(BigInt::from(n), BigInt::from(d))
    }

    fn x(m: usize, i: usize) -> Poly {
        Poly::var(m, i)
    }

    fn c(m: usize, n: i64, dd: i64) -> Poly {
        Poly::constant(m, q(n, dd))
    }

    fn form(m: usize, k: usize, terms: Vec<(Vec<usize>, Poly)>) -> PolyForm {
        PolyForm::from_terms(m, k, terms).unwrap()
    }

    #[test]
    fn d_examples() {
        let x1 = form(2, 0, vec![(vec![], x(2, 0))]);
        assert_eq!(d(&x1).unwrap(), form(2, 1, vec![(vec![0], c(2, 1, 1))]));
        let f = form(2, 1, vec![(vec![0], x(2, 1))]);
        assert_eq!(d(&f).unwrap(), form(2, 2, vec![(vec![0, 1], c(2, -1, 1))]));
        let top = form(2, 2, vec![(vec![0, 1], x(2, 0))]);
        assert!(d(&top).is_err());
    }

    #[test]
    fn d_squared_vanishes() {
        let p = x(3, 0).mul(&x(3, 1)).mul(&x(3, 2)).mul(&x(3, 0));
        let f = form(3, 0, vec![(vec![], p.clone())]);
        assert!(d(&d(&f).unwrap()).unwrap().is_zero());
        let g = form(3, 1, vec![(vec![1], p), (vec![2], x(3, 0))]);
        assert!(d(&d(&g).unwrap()).unwrap().is_zero());
    }

    #[test]
    fn alpha_examples() {
        let f = form(3, 2, vec![(vec![0, 1], c(3, 2, 1)), (vec![1, 2], c(3, 1, 3))]);
        assert_eq!(
            alpha(&f).unwrap(),
            form(3, 2, vec![(vec![0, 1], c(3, 1, 1)), (vec![1, 2], c(3, 1, 6))])
        );
        let f = form(2, 1, vec![(vec![0], x(2, 1))]);
        assert_eq!(
            alpha(&f).unwrap(),
            form(2, 1, vec![(vec![0], x(2, 1).scale(&q(1, 2)))])
        );
        assert!(alpha(&PolyForm::zero(3, 1).unwrap()).unwrap().is_zero());
        assert!(alpha(&form(2, 0, vec![(vec![], c(2, 1, 1))])).is_err());
    }

    #[test]
    fn iota_examples() {
        let dx1 = form(2, 1, vec![(vec![0], c(2, 1, 1))]);
        assert_eq!(iota_radial(&dx1).unwrap(), form(2, 0, vec![(vec![], x(2, 0))]));
        let area = form(2, 2, vec![(vec![0, 1], c(2, 1, 1))]);
        let expected = form(
            2,
            1,
            vec![(vec![1], x(2, 0)), (vec![0], x(2, 1).scale(&q(-1, 1)))],
        );
        assert_eq!(iota_radial(&area).unwrap(), expected);
        assert!(iota_radial(&iota_radial(&area).unwrap()).unwrap().is_zero());
        assert!(iota_radial(&form(2, 0, vec![])).is_err());
    }

    #[test]
    fn h_examples() {
        let area = form(2, 2, vec![(vec![0, 1], c(2, 1, 1))]);
        let expected = form(
            2,
            1,
            vec![
                (vec![1], x(2, 0).scale(&q(1, 2))),
                (vec![0], x(2, 1).scale(&q(-1, 2))),
            ],
        );
        assert_eq!(h(&area).unwrap(), expected);
        assert_eq!(h_via_contraction_first(&area).unwrap(), expected);

        let dx1 = form(2, 1, vec![(vec![0], c(2, 1, 1))]);
        assert_eq!(h(&dx1).unwrap(), form(2, 0, vec![(vec![], x(2, 0))]));

        let f = form(2, 1, vec![(vec![0], x(2, 1))]);
        let expected = form(2, 0, vec![(vec![], x(2, 0).mul(&x(2, 1)).scale(&q(1, 2)))]);
        assert_eq!(h(&f).unwrap(), expected);
        assert!(h(&form(2, 0, vec![])).is_err());
    }

    #[test]
    fn identity_on_hand_example() {
        let f = form(2, 1, vec![(vec![0], x(2, 1))]);
        let hf = h(&f).unwrap();
        let dhf = d(&hf).unwrap();
        assert_eq!(
            dhf,
            form(
                2,
                1,
                vec![
                    (vec![0], x(2, 1).scale(&q(1, 2))),
                    (vec![1], x(2, 0).scale(&q(1, 2)))
                ]
            )
        );
        let hdf = h(&d(&f).unwrap()).unwrap();
        assert_eq!(
            hdf,
            form(
                2,
                1,
                vec![
                    (vec![0], x(2, 1).scale(&q(1, 2))),
                    (vec![1], x(2, 0).scale(&q(-1, 2)))
                ]
            )
        );
        assert!(homotopy_identity_check(&f).unwrap());
    }

    #[test]
    fn closed_forms_get_primitives() {
        let g = form(3, 0, vec![(vec![], x(3, 0).mul(&x(3, 2)).mul(&x(3, 2)))]);
        let closed = d(&g).unwrap();
        assert!(d(&closed).unwrap().is_zero());
        assert_eq!(d(&h(&closed).unwrap()).unwrap(), closed);
        assert!(homotopy_identity_check(&form(2, 2, vec![])).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let area = form(3, 2, vec![(vec![0, 1], c(3, 1, 1))]);
        let hv = h(&area).unwrap().evaluate(&[1.0, 0.0, 0.0]).unwrap();
        assert_eq!(hv, Covector::from_terms(3, 1, [(vec![1], 0.5)]).unwrap());
        let cv = area.evaluate(&[3.0, -2.0, 7.0]).unwrap();
        assert_eq!(cv.coeff(&[0, 1]), 1.0);
        assert!(PolyForm::zero(3, 1).unwrap().evaluate(&[1.0, 2.0, 3.0]).unwrap().is_zero());
        assert!(area.evaluate(&[1.0]).is_err());
    }

    #[test]
    fn bound_check_constant_area() {
        let area = form(2, 2, vec![(vec![0, 1], c(2, 1, 1))]);
        let r = h_bound_check(&area, &[vec![1.0, 0.0]], 1.0).unwrap();
        let p = &r.points[0];
        assert!((p.lhs - 0.5).abs() < 1e-15);
        assert!((p.ray_rhs.unwrap() - 1.0 / 2f64.sqrt()).abs() < 1e-15);
        assert!(r.pass);
        let z = h_bound_check(&PolyForm::zero(2, 2).unwrap(), &[vec![0.3, 0.4]], 1.0).unwrap();
        assert!(z.points.iter().all(|p| p.margin == p.rhs));
        assert!(h_bound_check(&area, &[vec![2.0, 0.0]], 1.0).is_err());
    }

    #[test]
    fn dilation_commutes_with_h() {
        let f = form(
            3,
            2,
            vec![
                (vec![0, 1], x(3, 2).mul(&x(3, 0))),
                (vec![1, 2], c(3, -3, 4)),
            ],
        );
        let r = q(3, 2);
        assert_eq!(
            h(&dilation_pullback(&f, &r)).unwrap(),
            dilation_pullback(&h(&f).unwrap(), &r)
        );
    }

    #[test]
    fn polymap_pullback() {
        let id = PolyMap::identity(4);
        assert_eq!(id.pullback_omega0().unwrap(), omega0_form(2).unwrap());
        let mut l = DMatrix::identity(2, 2);
        l[(0, 0)] = 2.0;
        l[(1, 1)] = 3.0;
        let pb = PolyMap::linear(&l).unwrap().pullback_omega0().unwrap();
        assert_eq!(pb, form(2, 2, vec![(vec![0, 1], c(2, 6, 1))]));
    }

    #[test]
    fn json_roundtrip() {
        let f = form(
            2,
            1,
            vec![(vec![0], x(2, 1).scale(&q(-7, 3))), (vec![1], c(2, 1, 2))],
        );
        let s = serde_json::to_string(&f).unwrap();
        assert_eq!(
            s,
            r#"{"m":2,"k":1,"terms":[{"index":[1],"poly":[{"exp":[0,1],"num":"-7","den":"3"}]},{"index":[2],"poly":[{"exp":[0,0],"num":"1","den":"2"}]}]}"#
        );
        let back: PolyForm = serde_json::from_str(&s).unwrap();
        assert_eq!(back, f);
        let bad = r#"{"m":2,"k":1,"terms":[{"index":[1],"poly":[{"exp":[0,1],"num":"1","den":"0"}]}]}"#;
        assert!(serde_json::from_str::<PolyForm>(bad).is_err());
    }

    #[test]
    fn display() {
        let f = form(2, 1, vec![(vec![0], x(2, 1).scale(&q(-1, 2)))]);
        assert_eq!(f.to_string(), "-1/2·x2 dx1");
    }
}
