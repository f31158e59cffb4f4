//! Sextic proper Zolotarev polynomials in closed form.
//!
//! Among monic degree-`n` polynomials whose second-leading coefficient is
//! pinned to `−n·s`, exactly one deviates least from zero on `[−1, 1]`. For
//! `s > tan²(π/(2n))` that extremal polynomial is a *proper Zolotarev
//! polynomial*; for `n = 6` its norm-1 rescaling admits a one-parameter
//! family of explicit radical coefficient formulas. This crate implements
//! that family end to end:
//!
//! * [`zolotarev`] — the closed-form construction `t ↦ Z_{6,t}` with all
//!   companion quantities (coefficients, critical points, equioscillation
//!   abscissae, the constraint value `s(t)` and the least deviation `L(t)`);
//! * [`zfp`] — the solver for the constrained minimax problem: given `s`,
//!   recover `t*` and the monic least-deviation polynomial;
//! * [`oracle`] — an independent discretized-minimax ground truth that
//!   shares nothing with the construction beyond dense polynomials;
//! * [`verify`] — residual suites for every defining identity
//!   (Abel-Pell equation, Peherstorfer-Schiefermayr system, product
//!   representations, equioscillation structure, boundary limits);
//! * [`poly`] — dense polynomial arithmetic, Chebyshev generators and
//!   equioscillation-profile analysis.
//!
//! All operations are pure functions of their inputs and safe for
//! unrestricted concurrent use.

// Input guards are written `!(x > y)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod oracle;
pub mod poly;
pub mod verify;
pub mod zfp;
pub mod zolotarev;

pub use error::{Error, Result};
pub use oracle::{deviation_curve, minimax_fixed_leading, MinimaxResult};
pub use poly::{alternation_profile, chebyshev_t, AlternationProfile, DensePoly};
pub use verify::{full_report, VerificationReport};
pub use zfp::{bernstein_asymptotic, solve, t_polynomial, ZfpSolution};
pub use zolotarev::{build, ZolotarevSextic, ZParam};
