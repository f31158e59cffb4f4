//! Closed-form construction of the normalized sextic proper Zolotarev
//! polynomial `Z_{6,t}` and its companion quantities from a single real
//! parameter `t`.
//!
//! For every `t` in the open interval `I₆ = ((5−3√3)/2, 0)` the seven
//! coefficients `b₀..b₆`, the exterior critical points `γ < α < β`, the four
//! inner equioscillation points `z₁ < z₂ < z₃ < z₄`, the constraint value
//! `s(t)` and the least deviation `L(t)` are all explicit radical expressions
//! in `t`. The polynomial is normalized: `‖Z_{6,t}‖∞ = 1` on `[−1,1]` with
//! `Z_{6,t}(−1) = 1` and `Z_{6,t}(1) = −1`, and it equioscillates twice more
//! on `[α, β]`.
//!
//! Accuracy note: the construction is numerically benign on the interior of
//! `I₆`. As `t → 0⁻` the quantities `s`, `α`, `β` and `γ` diverge like
//! `|t|^{−1/2}`; values returned for `|t| < 1e−4` carry no accuracy
//! guarantee beyond plain 64-bit rounding of the formulas.

use crate::error::{Error, Result};
use crate::poly::{chebyshev_t, DensePoly};

/// `√3`, used throughout the radical formulas.
const SQRT3: f64 = 1.7320508075688772;

/// Margin clamping the usable parameter range inside `I₆`.
///
/// Requests closer than this to either endpoint are rejected rather than
/// evaluated: the radicand of `ω` vanishes as `t → 0⁻` and the formulas for
/// `s`, `α`, `β` diverge there, so double precision degrades.
pub const CLAMP_MARGIN: f64 = 1e-9;

/// Lower endpoint of the parameter interval: `(5 − 3√3)/2 = −0.09807…`.
pub fn i6_lower() -> f64 {
    (5.0 - 3.0 * 3.0_f64.sqrt()) / 2.0
}

/// The threshold `tan²(π/12) = 7 − 4√3` separating the proper regime
/// `s > tan²(π/12)` from the improper (distorted-Chebyshev) one.
pub fn proper_threshold() -> f64 {
    7.0 - 4.0 * 3.0_f64.sqrt()
}

/// A validated parameter in the clamped interior of `I₆`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ZParam(f64);

impl ZParam {
    /// Validate `t ∈ [(5−3√3)/2 + 1e−9, −1e−9]`.
    pub fn new(t: f64) -> Result<ZParam> {
        let lo = i6_lower() + CLAMP_MARGIN;
        let hi = -CLAMP_MARGIN;
        if !t.is_finite() || t < lo || t > hi {
            return Err(Error::Domain(format!(
                "t = {t} outside the valid interval [{lo:.12}, {hi:e}] \
                 (clamped interior of ((5-3*sqrt(3))/2, 0))"
            )));
        }
        // t < 0 and t − 1 < 0 force the radicand positive on I₆.
        let radicand = (-1.0 + t) * t * (1.0 + t + 7.0 * t * t);
        if radicand <= 0.0 {
            return Err(Error::Domain(format!(
                "radicand (-1+t)t(1+t+7t^2) = {radicand} not positive at t = {t}"
            )));
        }
        Ok(ZParam(t))
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

/// The radical `ω(t) = √((−1+t)·t·(1+t+7t²))`, positive on `I₆`.
pub fn omega(t: ZParam) -> f64 {
    let t = t.value();
    ((-1.0 + t) * t * (1.0 + t + 7.0 * t * t)).sqrt()
}

/// Horner evaluation of an integer-coefficient bracket polynomial. All
/// brackets below have coefficients ≤ 2825968, exactly representable.
fn bracket(coeffs: &[f64], t: f64) -> f64 {
    let mut acc = 0.0_f64;
    for &c in coeffs.iter().rev() {
        acc = acc.mul_add(t, c);
    }
    acc
}

/// The seven coefficients `b₀..b₆` of `Z_{6,t}` in ascending order.
///
/// Each is a rational-radical expression in `t`: a signed multiple of `ω`
/// (even indices) or a plain rational function (odd indices), times an
/// integer-coefficient bracket polynomial, over products of the three
/// denominator factors `(1+2t)`, `(1∓4t)` and `(1−2t+10t²)`. The identities
/// `b₀ = −(b₂+b₄+b₆)` and `b₁ = −(1+b₃+b₅)` hold exactly.
pub fn coefficients(t: ZParam) -> [f64; 7] {
    let w = omega(t);
    let t = t.value();

    let one_p2t = 1.0 + 2.0 * t;
    let one_m4t = 1.0 - 4.0 * t;
    let m1_p4t = -1.0 + 4.0 * t;
    let quad = 1.0 - 2.0 * t + 10.0 * t * t;
    let m1_pt = -1.0 + t;
    let cubic = 1.0 + 6.0 * t * t + 20.0 * t * t * t; // = (1+2t)(1−2t+10t²)
    let septic = 1.0 + t + 7.0 * t * t;
    let ps = 1.0 + 6.0 * t + 12.0 * t * t + 116.0 * t * t * t;

    // Denominator safety: on the clamped I₆ all three factors are bounded
    // away from zero (1+2t ≥ 6−3√3 ≈ 0.80385, 1−4t > 1, 1−2t+10t² > 1).
    assert!(one_p2t > 0.8 && one_m4t > 1.0 && quad > 1.0);

    let b0 = 2.0 * SQRT3 * m1_pt.powi(2) * w
        / (one_p2t.powi(5) * m1_p4t.powi(3) * quad.powi(4))
        * bracket(
            &[
                1.0, -6.0, 18.0, -16.0, -252.0, 2592.0, -5844.0, 20448.0,
                -15768.0, -219280.0, 942576.0, -893232.0, 2825968.0,
            ],
            t,
        );
    let b1 = (-5.0 + 6.0 * t - 24.0 * t * t - 4.0 * t * t * t)
        / (one_m4t.powi(2) * one_p2t.powi(5) * quad.powi(4))
        * bracket(
            &[
                1.0, 0.0, -12.0, 116.0, -756.0, 2520.0, 1212.0, -12744.0,
                69840.0, -309280.0, 700704.0, -709008.0, 788848.0,
            ],
            t,
        );
    let b2 = 2.0 * SQRT3 * m1_pt.powi(2) * w
        / (one_p2t.powi(5) * one_m4t.powi(3) * quad.powi(4))
        * bracket(
            &[
                13.0, -102.0, 390.0, -880.0, -288.0, 19296.0, -102792.0,
                390816.0, -939024.0, 1167536.0, -258720.0, -339888.0,
                2720848.0,
            ],
            t,
        );
    let b3 = -4.0 * m1_pt.powi(5) / (one_m4t.powi(2) * cubic.powi(4))
        * bracket(
            &[
                5.0, 3.0, -6.0, 564.0, -3408.0, 13296.0, -35136.0, 107976.0,
                -130416.0, 243952.0,
            ],
            t,
        );
    let b4 = 8.0 * SQRT3 * (1.0 - t).powi(7) * w
        / (one_p2t.powi(5) * m1_p4t.powi(3) * quad.powi(4))
        * bracket(
            &[7.0, -25.0, 66.0, -146.0, -64.0, 2580.0, -6800.0, 26252.0],
            t,
        );
    let b5 = -16.0 * m1_pt.powi(10) * septic * ps
        / (one_p2t.powi(5) * one_m4t.powi(2) * quad.powi(4));
    let b6 = -32.0 * SQRT3 * m1_pt.powi(12) * septic * w
        / (one_p2t.powi(5) * m1_p4t.powi(3) * quad.powi(4));

    [b0, b1, b2, b3, b4, b5, b6]
}

/// The exterior critical points `(γ, α, β)` with `1 < γ < α < β`.
///
/// `γ` is the root of `Z′_{6,t}` to the right of `1`; `α` and `β` are the two
/// additional equioscillation points, with `Z(α) = −1` and `Z(β) = 1`. The
/// spread is `β − α = 18t²/(−1+t)²` and `γ = (α+β)/2 − s(t)`.
pub fn critical_points(t: ZParam) -> (f64, f64, f64) {
    let w = omega(t);
    let t = t.value();
    let m1_pt2 = (-1.0 + t) * (-1.0 + t);
    let gamma = (1.0 - 4.0 * t)
        * bracket(&[5.0, -6.0, 24.0, 4.0], t)
        / (12.0 * SQRT3 * m1_pt2 * w);
    let shared = (1.0 + 2.0 * t) * (1.0 - 4.0 * t) * (1.0 - 2.0 * t + 10.0 * t * t)
        / (2.0 * SQRT3 * m1_pt2 * w);
    let hump = 9.0 * t * t / m1_pt2;
    let alpha = -hump + shared;
    let beta = hump + shared;
    (gamma, alpha, beta)
}

/// The four inner equioscillation points `z₁ < z₂ < z₃ < z₄` in `(−1, 1)`.
///
/// `z₁ = A − B`, `z₂ = C − D`, `z₃ = A + B`, `z₄ = C + D`, where `B` and `D`
/// carry nested radicals. `Z` attains `−1, +1, −1, +1` at `z₁..z₄` with
/// vanishing derivative at each.
pub fn inner_equioscillation_points(t: ZParam) -> Result<(f64, f64, f64, f64)> {
    let w = omega(t);
    let t = t.value();
    let m1_pt2 = (-1.0 + t) * (-1.0 + t);
    let one_p2t = 1.0 + 2.0 * t;
    let m1_p4t = -1.0 + 4.0 * t;
    let septic = 1.0 + t + 7.0 * t * t;
    let quartic = bracket(&[5.0, -26.0, 102.0, -200.0, 524.0], t);
    let tail = (SQRT3 / w) * t * (1.0 + t + 16.0 * t * t);

    let a = m1_p4t * (one_p2t - tail) / (4.0 * m1_pt2);
    let c = -m1_p4t * (one_p2t + tail) / (4.0 * m1_pt2);

    let rad_b = (2.0 * SQRT3 * w * one_p2t * m1_p4t + quartic) / septic;
    let rad_d = (-2.0 * SQRT3 * w * one_p2t * m1_p4t + quartic) / septic;
    for (name, rad) in [("B", rad_b), ("D", rad_d)] {
        if rad < -1e-12 {
            return Err(Error::Domain(format!(
                "inner radicand {name} = {rad} negative at t = {t}"
            )));
        }
    }
    let b = one_p2t / (4.0 * m1_pt2) * rad_b.max(0.0).sqrt();
    let d = one_p2t / (4.0 * m1_pt2) * rad_d.max(0.0).sqrt();

    let (z1, z2, z3, z4) = (a - b, c - d, a + b, c + d);
    if !(z1 < z2 && z2 < z3 && z3 < z4) {
        return Err(Error::Domain(format!(
            "inner points not strictly ordered at t = {t}: \
             {z1}, {z2}, {z3}, {z4}"
        )));
    }
    Ok((z1, z2, z3, z4))
}

/// The constraint value `s(t) > tan²(π/12)` linking `Z_{6,t}` to the monic
/// family: dividing by `b₆` turns the second-leading coefficient into
/// `b₅/b₆ = −6·s(t)`.
pub fn s_of_t(t: ZParam) -> f64 {
    let w = omega(t);
    let t = t.value();
    (1.0 - 4.0 * t) * bracket(&[1.0, 6.0, 12.0, 116.0], t) * w
        / (12.0 * SQRT3 * (-1.0 + t).powi(3) * t * (1.0 + t + 7.0 * t * t))
}

/// The least deviation `L(t) > 0` of the monic polynomial `Z_{6,t}/b₆(t)` on
/// `[−1, 1]`. Equals `1/b₆(t)` identically.
pub fn l_of_t(t: ZParam) -> f64 {
    let w = omega(t);
    let t = t.value();
    (1.0 - 4.0 * t).powi(3)
        * (1.0 + 2.0 * t).powi(5)
        * (1.0 - 2.0 * t + 10.0 * t * t).powi(4)
        * w
        / (32.0
            * SQRT3
            * (-1.0 + t).powi(13)
            * t
            * (1.0 + t + 7.0 * t * t).powi(2))
}

/// A fully constructed normalized sextic proper Zolotarev polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct ZolotarevSextic {
    pub t: ZParam,
    /// Coefficients `b₀..b₆` of `Z_{6,t}` in ascending order; `b₆ > 0`.
    pub b: [f64; 7],
    pub gamma: f64,
    pub alpha: f64,
    pub beta: f64,
    /// Inner equioscillation points `z₁ < z₂ < z₃ < z₄`.
    pub z: [f64; 4],
    pub s: f64,
    /// Least deviation of the monic rescaling; `L = 1/b₆`.
    pub l: f64,
}

impl ZolotarevSextic {
    /// The polynomial `Z_{6,t}` itself.
    pub fn polynomial(&self) -> DensePoly {
        DensePoly::new(self.b.to_vec())
    }

    /// The monic rescaling `Z_{6,t}/b₆`, the ZFP solution for `s = s(t)`.
    /// Its leading coefficient is exactly 1.
    pub fn monic_polynomial(&self) -> DensePoly {
        let mut c: Vec<f64> = self.b.iter().map(|&bk| bk / self.b[6]).collect();
        c[6] = 1.0;
        DensePoly::new(c)
    }
}

/// Assemble the full construction record for `t ∈ I₆`.
pub fn build(t: ZParam) -> Result<ZolotarevSextic> {
    let b = coefficients(t);
    let (gamma, alpha, beta) = critical_points(t);
    let (z1, z2, z3, z4) = inner_equioscillation_points(t)?;
    let s = s_of_t(t);
    let l = l_of_t(t);

    assert!(b[6] > 0.0, "b6 must be positive on I6");
    assert!(
        1.0 < gamma && gamma < alpha && alpha < beta,
        "critical points out of order at t = {}",
        t.value()
    );
    assert!(-1.0 < z1 && z4 < 1.0, "inner points must lie in (-1, 1)");

    Ok(ZolotarevSextic {
        t,
        b,
        gamma,
        alpha,
        beta,
        z: [z1, z2, z3, z4],
        s,
        l,
    })
}

/// The two boundary limits of the family as explicit coefficient vectors:
/// `−T₅` (the `t → 0⁻` limit) and `T₆((x+1)(2+√3)/4 − 1)` (the limit at the
/// lower endpoint of `I₆`), the latter expanded by composition.
pub fn limit_polynomials() -> (DensePoly, DensePoly) {
    let minus_t5 = chebyshev_t(5).scale(-1.0);
    let a = (2.0 + SQRT3) / 4.0;
    let shifted = chebyshev_t(6).compose(&DensePoly::new(vec![a - 1.0, a]));
    (minus_t5, shifted)
}
