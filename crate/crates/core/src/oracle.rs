//! Independent ground truth for the constrained minimax problem.
//!
//! Computes the best uniform approximation on `[−1, 1]` to
//! `f(x) = x⁶ − 6s·x⁵` by polynomials of degree ≤ 4, discretized on a
//! Chebyshev-extrema grid and solved by a dense exchange iteration (the
//! simplex method specialized to discrete Chebyshev approximation). The
//! deviation of `f − q*` is the least deviation of the monic constrained
//! family — computed without touching any closed-form construction. The
//! only shared code is [`DensePoly`].

use crate::error::{Error, Result};
use crate::poly::{chebyshev_t, DensePoly};

/// Exchange iteration cap; convergence normally takes 3–5 rounds.
const MAX_EXCHANGES: usize = 100;

/// Result of the discrete minimax computation.
#[derive(Debug, Clone, PartialEq)]
pub struct MinimaxResult {
    /// Best approximant of degree ≤ 4 in monomial coefficients.
    pub q: DensePoly,
    /// Maximum of `|f − q|` over the grid.
    pub deviation: f64,
    pub grid_size: usize,
    pub iterations: usize,
}

/// Solve a 6×6 linear system by Gaussian elimination with partial pivoting.
fn solve6(mut a: [[f64; 6]; 6], mut rhs: [f64; 6]) -> Result<[f64; 6]> {
    for col in 0..6 {
        let pivot = (col..6)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap();
        if a[pivot][col].abs() < 1e-14 {
            return Err(Error::NoConvergence(
                "singular reference system in exchange step".into(),
            ));
        }
        a.swap(col, pivot);
        rhs.swap(col, pivot);
        let pivot_row = a[col];
        for row in col + 1..6 {
            let factor = a[row][col] / pivot_row[col];
            for (k, cell) in a[row].iter_mut().enumerate().skip(col) {
                *cell -= factor * pivot_row[k];
            }
            rhs[row] -= factor * rhs[col];
        }
    }
    let mut x = [0.0; 6];
    for row in (0..6).rev() {
        let mut acc = rhs[row];
        for k in row + 1..6 {
            acc -= a[row][k] * x[k];
        }
        x[row] = acc / a[row][row];
    }
    Ok(x)
}

/// Values of `T₀..T₄` at `x`.
fn cheb_row(x: f64) -> [f64; 5] {
    let mut row = [1.0, x, 0.0, 0.0, 0.0];
    for k in 2..5 {
        row[k] = 2.0 * x * row[k - 1] - row[k - 2];
    }
    row
}

/// Best uniform approximation to `f(x) = x⁶ − 6s·x⁵` by degree-≤4
/// polynomials, discretized on a `grid_size`-point Chebyshev-extrema grid.
///
/// Maintains a reference of 6 grid points, solves the interpolation system
/// `q(xᵢ) + (−1)^i·d = f(xᵢ)` for the 5 Chebyshev-basis coefficients of `q`
/// and the levelled error `d`, then exchanges the reference for the grid's
/// alternating local maxima of `|f − q|` (keeping the global maximum).
/// Terminates when the grid maximum matches `|d|` to machine precision.
pub fn minimax_fixed_leading(s: f64, grid_size: usize) -> Result<MinimaxResult> {
    if !(s > 0.0) {
        return Err(Error::Domain(format!("s = {s} must be positive")));
    }
    if grid_size < 257 {
        return Err(Error::Domain(format!(
            "grid_size = {grid_size} below the minimum of 257"
        )));
    }

    let m = grid_size;
    // ascending Chebyshev-extrema grid on [−1, 1]
    let xs: Vec<f64> = (0..m)
        .map(|j| (std::f64::consts::PI * (m - 1 - j) as f64 / (m - 1) as f64).cos())
        .collect();
    let f: Vec<f64> = xs.iter().map(|&x| x.powi(5) * (x - 6.0 * s)).collect();

    // initial reference: T₅-extrema positions mapped to grid indices
    let mut reference: [usize; 6] =
        std::array::from_fn(|k| (((m - 1) * k) as f64 / 5.0).round() as usize);

    let mut cheb_coeffs = [0.0; 5];
    let mut level = 0.0;
    for iteration in 1..=MAX_EXCHANGES {
        let mut a = [[0.0; 6]; 6];
        let mut rhs = [0.0; 6];
        let mut sign = 1.0;
        for (i, &j) in reference.iter().enumerate() {
            let row = cheb_row(xs[j]);
            a[i][..5].copy_from_slice(&row);
            a[i][5] = sign;
            rhs[i] = f[j];
            sign = -sign;
        }
        let sol = solve6(a, rhs)?;
        cheb_coeffs.copy_from_slice(&sol[..5]);
        level = sol[5].abs();

        // error over the whole grid
        let e: Vec<f64> = xs
            .iter()
            .zip(&f)
            .map(|(&x, &fx)| {
                let row = cheb_row(x);
                let q: f64 = (0..5).map(|k| cheb_coeffs[k] * row[k]).sum();
                fx - q
            })
            .collect();
        let emax = e.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));

        if emax <= level * (1.0 + 1e-13) {
            let q = (0..5).fold(DensePoly::zero(), |acc, k| {
                acc.add(&chebyshev_t(k).scale(cheb_coeffs[k]))
            });
            return Ok(MinimaxResult {
                q,
                deviation: emax,
                grid_size,
                iterations: iteration,
            });
        }

        // alternating local maxima of |e|, largest representative per sign run
        let mut candidates: Vec<usize> = Vec::new();
        let push = |j: usize, e: &[f64], cand: &mut Vec<usize>| {
            if let Some(&last) = cand.last() {
                if (e[j] < 0.0) == (e[last] < 0.0) {
                    if e[j].abs() > e[last].abs() {
                        *cand.last_mut().unwrap() = j;
                    }
                    return;
                }
            }
            cand.push(j);
        };
        push(0, &e, &mut candidates);
        for j in 1..m - 1 {
            if e[j].abs() >= e[j - 1].abs() && e[j].abs() >= e[j + 1].abs() {
                push(j, &e, &mut candidates);
            }
        }
        push(m - 1, &e, &mut candidates);

        if candidates.len() < 6 {
            return Err(Error::NoConvergence(format!(
                "degenerate grid: only {} alternating extrema at s = {s}",
                candidates.len()
            )));
        }
        // choose the 6 consecutive candidates containing the global maximum
        // with the largest smallest amplitude
        let gmax = (0..candidates.len())
            .max_by(|&i, &j| {
                e[candidates[i]].abs().total_cmp(&e[candidates[j]].abs())
            })
            .unwrap();
        let mut best: Option<(f64, usize)> = None;
        for start in 0..=candidates.len() - 6 {
            if gmax < start || gmax > start + 5 {
                continue;
            }
            let amp = (0..6)
                .map(|i| e[candidates[start + i]].abs())
                .fold(f64::INFINITY, f64::min);
            if best.is_none_or(|(b, _)| amp > b) {
                best = Some((amp, start));
            }
        }
        let (_, start) = best.expect("global maximum lies in some window");
        reference.copy_from_slice(&candidates[start..start + 6]);
    }

    Err(Error::NoConvergence(format!(
        "exchange iteration cap reached at s = {s}, level {level}"
    )))
}

/// Map [`minimax_fixed_leading`] over a batch, order-preserving. A failing
/// element reports its index.
pub fn deviation_curve(
    s_values: &[f64],
    grid_size: usize,
) -> Result<Vec<(f64, f64)>> {
    s_values
        .iter()
        .enumerate()
        .map(|(i, &s)| {
            minimax_fixed_leading(s, grid_size)
                .map(|r| (s, r.deviation))
                .map_err(|e| {
                    Error::NoConvergence(format!("element {i} (s = {s}): {e}"))
                })
        })
        .collect()
}

/// Number of alternations of the discrete error `f − q` at its levelled
/// extremes; a de la Vallée Poussin style certificate at grid resolution.
pub fn alternation_certificate(s: f64, result: &MinimaxResult) -> usize {
    let m = result.grid_size;
    let threshold = result.deviation * (1.0 - 1e-9);
    let mut count = 0;
    let mut last_sign = 0i8;
    for j in 0..m {
        let x = (std::f64::consts::PI * (m - 1 - j) as f64 / (m - 1) as f64).cos();
        let e = x.powi(5) * (x - 6.0 * s) - result.q.eval(x);
        if e.abs() >= threshold {
            let sign: i8 = if e >= 0.0 { 1 } else { -1 };
            if sign != last_sign {
                count += 1;
                last_sign = sign;
            }
        }
    }
    count
}
