//! Solver for the degree-6 constrained minimax problem: given the
//! second-leading-coefficient constraint `s > tan²(π/12)`, recover the
//! parameter `t* ∈ I₆` with `s(t*) = s` and emit the monic polynomial of
//! least uniform deviation on `[−1, 1]`.
//!
//! Root recovery is dual-path: a bracketed root search on `s(t) − s` over
//! the clamped parameter interval, cross-checked against the real roots of
//! the degree-8 polynomial obtained by squaring the defining equation for
//! `s(t)`. Squaring can introduce spurious roots; every octic root inside
//! `I₆` is re-tested against the unsquared equation before it is accepted,
//! and the surviving root must coincide with the bracketed one.

use crate::error::{Error, Result};
use crate::poly::{bracketed_roots, DensePoly};
use crate::zolotarev::{
    build, i6_lower, proper_threshold, s_of_t, ZParam, CLAMP_MARGIN,
};

/// Subintervals used when scanning the octic for sign changes.
const OCTIC_SCAN: usize = 2048;

/// Default residual tolerance for [`solve`].
pub const DEFAULT_TOL: f64 = 1e-12;

/// A solution of the constrained minimax problem for degree 6.
#[derive(Debug, Clone, PartialEq)]
pub struct ZfpSolution {
    /// The prescribed constraint: the monic solution has `x⁵` coefficient `−6s`.
    pub s: f64,
    /// The recovered parameter with `s(t*) = s`.
    pub t_star: ZParam,
    /// Monic degree-6 polynomial of least deviation; leading coefficient exactly 1.
    pub monic: DensePoly,
    /// Least deviation `L > 0`; `monic(−1) = +L` and `monic(1) = −L`.
    pub l: f64,
    /// Achieved `|s(t*) − s|`.
    pub residual: f64,
}

/// The degree-8 polynomial in `t` whose roots contain every `t` with
/// `s(t)² = s²`:
///
/// `432·s²·(t−1)⁵·t·(1+t+7t²) − (1−4t)²·(1+6t+12t²+116t³)²`
///
/// All bracket coefficients are small integers, so for rational `s²` the
/// expansion is exact in 64-bit arithmetic.
pub fn t_polynomial(s: f64) -> DensePoly {
    let t_minus_1 = DensePoly::new(vec![-1.0, 1.0]);
    let mut left = t_minus_1.clone();
    for _ in 1..5 {
        left = left.mul(&t_minus_1);
    }
    left = left
        .mul(&DensePoly::new(vec![0.0, 1.0]))
        .mul(&DensePoly::new(vec![1.0, 1.0, 7.0]))
        .scale(432.0 * s * s);

    let lin = DensePoly::new(vec![1.0, -4.0]);
    let cub = DensePoly::new(vec![1.0, 6.0, 12.0, 116.0]);
    let right = lin.mul(&cub);
    let right = right.mul(&right);

    left.sub(&right)
}

/// Least-deviation asymptotic `(n·s + √(n²s² + 1))/2^{n−1}`, a large-`n`
/// approximation to the deviation `L(n, s)` that is already very close at
/// `n = 6`.
pub fn bernstein_asymptotic(n: u32, s: f64) -> f64 {
    let ns = n as f64 * s;
    (ns + (ns * ns + 1.0).sqrt()) / 2f64.powi(n as i32 - 1)
}

/// Bisection on `f` given a bracketing pair, run down to machine resolution.
fn bisect_to_machine(f: impl Fn(f64) -> f64, mut lo: f64, mut hi: f64) -> f64 {
    let mut flo = f(lo);
    if flo == 0.0 {
        return lo;
    }
    loop {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            return mid;
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
}

/// Solve the constrained minimax problem for degree 6.
///
/// Finds `t* ∈ I₆` with `|s(t*) − s| ≤ tol·max(1, s)` by bracketed
/// root-finding on `s(t) − s`, cross-checks against the octic
/// [`t_polynomial`], and returns the monic polynomial `Z_{6,t*}/b₆(t*)`
/// together with its least deviation.
///
/// `s ≤ tan²(π/12)` is rejected: there the minimax solution is a distorted
/// Chebyshev polynomial outside this crate's scope.
pub fn solve(s: f64, tol: f64) -> Result<ZfpSolution> {
    if !(s > proper_threshold()) {
        return Err(Error::OutOfRange(format!(
            "s = {s} must exceed tan^2(pi/12) = {:.12}; below that the \
             solution is a distorted Chebyshev polynomial",
            proper_threshold()
        )));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain("tol must be positive".into()));
    }

    let lo = i6_lower() + CLAMP_MARGIN;
    let hi = -CLAMP_MARGIN;
    let g = |t: f64| s_of_t(ZParam::new(t).expect("t inside clamped range")) - s;

    // s(t) is increasing on I₆, from tan²(π/12) at the lower endpoint towards
    // +∞ as t → 0⁻; on the clamped interval a sign change exists unless s
    // exceeds the numeric range.
    let (g_lo, g_hi) = (g(lo), g(hi));
    if g_lo > 0.0 || g_hi < 0.0 {
        return Err(Error::NoConvergence(format!(
            "no sign change for s = {s} on the clamped parameter interval \
             (s spans [{:.6}, {:.1}] there)",
            s + g_lo,
            s + g_hi
        )));
    }

    // Bisect to a 1e−3 bracket, then keep bisecting to machine resolution.
    let (mut blo, mut bhi, mut flo) = (lo, hi, g_lo);
    while bhi - blo > 1e-3 {
        let mid = 0.5 * (blo + bhi);
        let fm = g(mid);
        if fm == 0.0 {
            blo = mid;
            bhi = mid;
            break;
        }
        if (fm < 0.0) == (flo < 0.0) {
            blo = mid;
            flo = fm;
        } else {
            bhi = mid;
        }
    }
    let t_root = if blo == bhi {
        blo
    } else {
        bisect_to_machine(g, blo, bhi)
    };

    let t_star = ZParam::new(t_root)?;
    let residual = (s_of_t(t_star) - s).abs();
    if residual > tol * s.max(1.0) {
        return Err(Error::NoConvergence(format!(
            "bracketed root search left residual {residual} > {} at s = {s}",
            tol * s.max(1.0)
        )));
    }

    // Cross-check: every octic root in I₆ that satisfies the unsquared
    // equation must coincide with the bracketed root.
    let octic = t_polynomial(s);
    for root in bracketed_roots(&octic, lo, hi, OCTIC_SCAN) {
        if let Ok(candidate) = ZParam::new(root) {
            if (s_of_t(candidate) - s).abs() <= 1e-6 * s.max(1.0) {
                assert!(
                    (root - t_root).abs() <= 1e-8,
                    "octic cross-check found a distinct root {root} vs {t_root}"
                );
            }
        }
    }

    let zs = build(t_star)?;
    Ok(ZfpSolution {
        s,
        t_star,
        monic: zs.monic_polynomial(),
        l: zs.l,
        residual,
    })
}
