//! Dense real-coefficient polynomials: arithmetic, calculus, Chebyshev
//! generators and equioscillation-structure analysis.
//!
//! Coefficients are stored in ascending order; index `k` holds the
//! coefficient of `x^k`. Every polynomial handled here has degree at most 8,
//! so no sparse representation is used.

use crate::error::{Error, Result};

/// Number of uniform samples used when scanning an interval for extrema.
const SCAN_SAMPLES: usize = 4096;

/// Abscissa tolerance for bisection polish of derivative roots.
const POLISH_TOL: f64 = 1e-13;

/// A dense univariate polynomial with real coefficients.
///
/// The coefficient vector is never empty; trailing zeros are trimmed except
/// for the zero polynomial, which is the single entry `[0.0]`.
#[derive(Debug, Clone, PartialEq)]
pub struct DensePoly {
    coeffs: Vec<f64>,
}

impl DensePoly {
    /// Build a polynomial from ascending coefficients, trimming trailing zeros.
    pub fn new(mut coeffs: Vec<f64>) -> Self {
        while coeffs.len() > 1 && coeffs.last() == Some(&0.0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            coeffs.push(0.0);
        }
        DensePoly { coeffs }
    }

    /// The zero polynomial.
    pub fn zero() -> Self {
        DensePoly { coeffs: vec![0.0] }
    }

    /// Constant polynomial `c`.
    pub fn constant(c: f64) -> Self {
        DensePoly::new(vec![c])
    }

    /// Ascending coefficients; index `k` is the coefficient of `x^k`.
    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    /// Coefficient of `x^k`, zero when `k` exceeds the stored degree.
    pub fn coeff(&self, k: usize) -> f64 {
        self.coeffs.get(k).copied().unwrap_or(0.0)
    }

    /// Degree of the polynomial; the zero polynomial has degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs == [0.0]
    }

    /// Horner evaluation, summing from the leading coefficient down.
    pub fn eval(&self, x: f64) -> f64 {
        let mut acc = 0.0_f64;
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul_add(x, c);
        }
        acc
    }

    /// First derivative; coefficient `k` of the output is `(k+1)·coeffs[k+1]`.
    pub fn derivative(&self) -> DensePoly {
        if self.coeffs.len() == 1 {
            return DensePoly::zero();
        }
        let d: Vec<f64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, &c)| k as f64 * c)
            .collect();
        DensePoly::new(d)
    }

    /// Coefficient-wise sum.
    pub fn add(&self, other: &DensePoly) -> DensePoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let sum: Vec<f64> = (0..n).map(|k| self.coeff(k) + other.coeff(k)).collect();
        DensePoly::new(sum)
    }

    /// Coefficient-wise difference `self − other`.
    pub fn sub(&self, other: &DensePoly) -> DensePoly {
        self.add(&other.scale(-1.0))
    }

    /// Scalar multiple.
    pub fn scale(&self, c: f64) -> DensePoly {
        DensePoly::new(self.coeffs.iter().map(|&a| a * c).collect())
    }

    /// Product of two polynomials.
    pub fn mul(&self, other: &DensePoly) -> DensePoly {
        if self.is_zero() || other.is_zero() {
            return DensePoly::zero();
        }
        let mut out = vec![0.0; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        DensePoly::new(out)
    }

    /// Composition `self(inner(x))`, expanded by Horner over polynomials.
    pub fn compose(&self, inner: &DensePoly) -> DensePoly {
        let mut acc = DensePoly::zero();
        for &c in self.coeffs.iter().rev() {
            acc = acc.mul(inner).add(&DensePoly::constant(c));
        }
        acc
    }

    /// The reflected polynomial `x ↦ self(−x)` (odd coefficients negated).
    pub fn reflect(&self) -> DensePoly {
        DensePoly::new(
            self.coeffs
                .iter()
                .enumerate()
                .map(|(k, &c)| if k % 2 == 1 { -c } else { c })
                .collect(),
        )
    }
}

/// Chebyshev polynomial of the first kind `T_n`, with `‖T_n‖∞ = 1` on `[−1,1]`.
///
/// Generated by the three-term recurrence `T_{n+1} = 2x·T_n − T_{n−1}`; all
/// coefficients are integers and exactly representable.
pub fn chebyshev_t(n: usize) -> DensePoly {
    match n {
        0 => return DensePoly::new(vec![1.0]),
        1 => return DensePoly::new(vec![0.0, 1.0]),
        _ => {}
    }
    let mut prev = vec![1.0];
    let mut cur = vec![0.0, 1.0];
    for _ in 2..=n {
        let mut next = vec![0.0; cur.len() + 1];
        for (k, &c) in cur.iter().enumerate() {
            next[k + 1] += 2.0 * c;
        }
        for (k, &c) in prev.iter().enumerate() {
            next[k] -= c;
        }
        prev = cur;
        cur = next;
    }
    DensePoly::new(cur)
}

/// Equioscillation structure of a polynomial on an interval: the ordered
/// points where `|p|` attains `norm`, their signs, and the alternation count.
#[derive(Debug, Clone, PartialEq)]
pub struct AlternationProfile {
    /// Strictly increasing abscissae where `|p|` reaches the norm.
    pub points: Vec<f64>,
    /// Sign of `p` at each point, `+1` or `−1`; alternating by construction.
    pub signs: Vec<i8>,
    /// Number of sign changes between consecutive points: `points.len() − 1`.
    pub count: usize,
}

/// Bisect a sign change of `f` on `[lo, hi]` down to [`POLISH_TOL`] width.
fn bisect(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    while hi - lo > POLISH_TOL {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        let fm = f(mid);
        if fm == 0.0 {
            return mid;
        }
        if (fm < 0.0) == (flo < 0.0) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    0.5 * (lo + hi)
}

/// All roots of `p` in `(a, b)` found by an `n`-subinterval sign scan with
/// bisection polish. Only sign-change roots are located, which is all the
/// callers here need (simple, well-separated roots at desk scale).
pub fn bracketed_roots(p: &DensePoly, a: f64, b: f64, n: usize) -> Vec<f64> {
    let mut roots = Vec::new();
    let step = (b - a) / n as f64;
    let mut x0 = a;
    let mut f0 = p.eval(x0);
    for i in 1..=n {
        let x1 = if i == n { b } else { a + step * i as f64 };
        let f1 = p.eval(x1);
        if f0 == 0.0 {
            roots.push(x0);
        } else if f1 != 0.0 && (f0 < 0.0) != (f1 < 0.0) {
            roots.push(bisect(|x| p.eval(x), x0, x1));
        }
        x0 = x1;
        f0 = f1;
    }
    if f0 == 0.0 {
        roots.push(b);
    }
    roots.dedup_by(|u, v| (*u - *v).abs() < 2.0 * POLISH_TOL);
    roots
}

/// Locate the equioscillation structure of `p` on `[a, b]`.
///
/// Candidates are the interval endpoints plus every local extremum of `p`
/// (roots of `p′` from a uniform 4096-sample scan, polished by bisection).
/// Candidates where `|p|` is within `tol` of `norm` enter the profile; the
/// maximal alternating subsequence is kept.
///
/// Fails with [`Error::DegenerateNorm`] when the observed maximum of `|p|`
/// differs from `norm` by more than `100·tol`.
pub fn alternation_profile(
    p: &DensePoly,
    a: f64,
    b: f64,
    norm: f64,
    tol: f64,
) -> Result<AlternationProfile> {
    if !(a < b) {
        return Err(Error::Domain(format!("empty interval [{a}, {b}]")));
    }
    if !(norm > 0.0) || !(tol > 0.0) {
        return Err(Error::Domain("norm and tol must be positive".into()));
    }

    let deriv = p.derivative();
    let mut candidates = vec![a];
    candidates.extend(bracketed_roots(&deriv, a, b, SCAN_SAMPLES));
    candidates.push(b);
    candidates.sort_by(|u, v| u.total_cmp(v));
    candidates.dedup_by(|u, v| (*u - *v).abs() < 2.0 * POLISH_TOL);

    let observed_max = candidates
        .iter()
        .map(|&x| p.eval(x).abs())
        .fold(0.0, f64::max);
    if (observed_max - norm).abs() > 100.0 * tol {
        return Err(Error::DegenerateNorm {
            expected: norm,
            observed: observed_max,
        });
    }

    let mut points = Vec::new();
    let mut signs: Vec<i8> = Vec::new();
    for &x in &candidates {
        let v = p.eval(x);
        if (v.abs() - norm).abs() <= tol {
            let s: i8 = if v >= 0.0 { 1 } else { -1 };
            if signs.last() == Some(&s) {
                continue;
            }
            points.push(x);
            signs.push(s);
        }
    }
    let count = points.len().saturating_sub(1);
    Ok(AlternationProfile { points, signs, count })
}
