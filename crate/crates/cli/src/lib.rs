//! Command implementations behind the `zolo6` binary. Each command maps
//! library calls onto an [`output::OutputRecord`] and a process exit code:
//! `0` success, `2` domain or usage error, `3` convergence failure,
//! `4` verification failed.

// Input guards are written `!(x > y)` so that NaN fails them.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod output;

use output::{
    AppliedTolerances, Body, Construction, Oracle, OutputRecord, Solution,
    Table, TableRow, Verification,
};
use zolotarev6::error::Error;
use zolotarev6::zolotarev::{
    build, critical_points, l_of_t, proper_threshold, s_of_t, ZParam,
};
use zolotarev6::{self as core, bernstein_asymptotic};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 2;
pub const EXIT_CONVERGENCE: i32 = 3;
pub const EXIT_VERIFICATION: i32 = 4;

/// A command failure with its diagnostic and process exit code.
#[derive(Debug)]
pub struct CmdError {
    pub exit_code: i32,
    pub message: String,
}

impl CmdError {
    fn usage(message: impl Into<String>) -> CmdError {
        CmdError {
            exit_code: EXIT_DOMAIN,
            message: message.into(),
        }
    }
}

impl From<Error> for CmdError {
    fn from(e: Error) -> CmdError {
        let exit_code = match e {
            Error::NoConvergence(_) => EXIT_CONVERGENCE,
            _ => EXIT_DOMAIN,
        };
        CmdError {
            exit_code,
            message: e.to_string(),
        }
    }
}

pub type CmdResult = Result<OutputRecord, CmdError>;

/// Construct the full record for one parameter value.
pub fn cmd_eval(t: f64) -> CmdResult {
    let zs = build(ZParam::new(t)?)?;
    Ok(OutputRecord::new(Body::Construction(Construction {
        t: zs.t.value(),
        b: zs.b,
        gamma: zs.gamma,
        alpha: zs.alpha,
        beta: zs.beta,
        z: zs.z,
        s: zs.s,
        l: zs.l,
    })))
}

/// Solve the constrained minimax problem for a prescribed `s`.
pub fn cmd_solve(s: f64, tol: f64) -> CmdResult {
    let sol = core::solve(s, tol)?;
    let mut monic = [0.0; 7];
    for (k, slot) in monic.iter_mut().enumerate() {
        *slot = sol.monic.coeff(k);
    }
    Ok(OutputRecord::new(Body::Solution(Solution {
        s: sol.s,
        t_star: sol.t_star.value(),
        monic,
        l: sol.l,
        residual: sol.residual,
    })))
}

/// Run the identity suites; the second value is the verdict controlling the
/// exit code (`4` when any check fails).
pub fn cmd_verify(t: f64, grid: usize) -> Result<(OutputRecord, bool), CmdError> {
    if grid < 101 {
        return Err(CmdError::usage(format!(
            "--grid must be at least 101, got {grid}"
        )));
    }
    let zs = build(ZParam::new(t)?)?;
    let report = core::full_report(&zs, grid)?;
    let record = OutputRecord::new(Body::Verification(Verification {
        t,
        grid,
        abel_pell_max_residual: report.abel_pell_max_residual,
        ps_linear_residual: report.ps_linear_residual,
        ps_power_residuals: report.ps_power_residuals,
        product_form_max_diff: [
            report.product_form_max_diff.0,
            report.product_form_max_diff.1,
        ],
        alternations_inner: report.alternations_inner,
        alternations_outer: report.alternations_outer,
        limits_checked: report.limits_checked,
        tolerances: AppliedTolerances {
            abel_pell: report.tolerances.abel_pell,
            ps: report.tolerances.ps,
            product_form: report.tolerances.product_form,
            relaxed: report.tolerances.relaxed,
        },
        passed: report.passed,
    }));
    Ok((record, report.passed))
}

/// Sweep the parameter interval, one row per `t`, ascending.
pub fn cmd_table(t_min: f64, t_max: f64, steps: usize) -> CmdResult {
    if steps < 2 {
        return Err(CmdError::usage(format!(
            "--steps must be at least 2, got {steps}"
        )));
    }
    if !(t_min < t_max) {
        return Err(CmdError::usage(format!(
            "--t-min {t_min} must be below --t-max {t_max}"
        )));
    }
    let mut rows = Vec::with_capacity(steps);
    for i in 0..steps {
        let t = t_min + (t_max - t_min) * i as f64 / (steps - 1) as f64;
        let zp = ZParam::new(t)?;
        let s = s_of_t(zp);
        let (gamma, alpha, beta) = critical_points(zp);
        rows.push(TableRow {
            t,
            s,
            l: l_of_t(zp),
            l_inf: bernstein_asymptotic(6, s),
            alpha,
            beta,
            gamma,
        });
    }
    Ok(OutputRecord::new(Body::Table(Table { rows })))
}

/// Independent minimax oracle next to the closed-form deviation.
pub fn cmd_oracle(s: f64, grid: usize) -> CmdResult {
    if !(s > proper_threshold()) {
        return Err(CmdError::usage(format!(
            "--s must exceed tan^2(pi/12) = {:.12}, got {s}",
            proper_threshold()
        )));
    }
    if grid < 257 {
        return Err(CmdError::usage(format!(
            "--grid must be at least 257, got {grid}"
        )));
    }
    let result = core::minimax_fixed_leading(s, grid)?;
    let closed_form_l = l_of_t(core::solve(s, 1e-12)?.t_star);

    let mut q = [0.0; 5];
    for (k, slot) in q.iter_mut().enumerate() {
        *slot = result.q.coeff(k);
    }
    // monic sextic implied by the approximant: x⁶ − 6s·x⁵ − q(x)
    let mut monic = [0.0; 7];
    monic[6] = 1.0;
    monic[5] = -6.0 * s;
    for k in 0..5 {
        monic[k] = -q[k];
    }
    Ok(OutputRecord::new(Body::Oracle(Oracle {
        s,
        grid_size: result.grid_size,
        deviation: result.deviation,
        iterations: result.iterations,
        q,
        monic,
        closed_form_l,
        abs_difference: (result.deviation - closed_form_l).abs(),
    })))
}
