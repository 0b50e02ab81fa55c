//! Dimension of the conical limit set and the cusp-winding spectrum b(α).
//!
//! Both quantities are roots of pressure equations at a truncation. The
//! dimension solves P(−b·log|f̃′|) = 0 by bisection. A spectrum point
//! solves the (m+1)-dimensional system P = 0, ∇_q P = 0 by a damped
//! Newton iteration whose steps are kept inside {q > 0, b ∈ (1/2, 1)};
//! the gradient conditions pin the Gibbs means ∫Φᵢ dμ to the target α.

use crate::coding::{Letter, TruncatedAlphabet};
use crate::error::{Error, Result};
use crate::moebius::normalize_angle;
use crate::parallel::{map_indexed, Parallelism};
use crate::pressure::{
    gibbs_stats, pressure_warm, PotentialParams, TransferSystem, WeightMode,
};
use crate::schottky::GroupPresentation;

/// Newton iteration cap for one spectrum point.
pub const NEWTON_MAX_ITERATIONS: u32 = 200;
/// Finite-difference step for the q-gradient and the Jacobian.
const FD_STEP: f64 = 1e-5;
/// Bisection bracket for the dimension; widened once on demand.
const DIM_BRACKET: (f64, f64) = (0.501, 0.999);
const DIM_WIDE_END: f64 = 1.2;
/// Bisection tolerance used only to seed Newton's initial b.
const INIT_DIM_TOL: f64 = 1e-8;

/// Bowen root of the truncated pressure.
#[derive(Debug, Clone)]
pub struct DimResult {
    pub s: f64,
    /// Final bisection bracket around `s`.
    pub bracket: (f64, f64),
    pub l: u32,
    /// Pressure value at `s`.
    pub residual: f64,
    /// True when the root exceeded 0.999 and the bracket grew to 1.2; a
    /// truncation artifact worth reporting.
    pub widened: bool,
}

/// Hausdorff dimension of the conical limit set at truncation `l`:
/// bisection of b ↦ P(−b·log|f̃′|) to bracket width `tol`.
pub fn hausdorff_dim(presentation: &GroupPresentation, l: u32, tol: f64) -> Result<DimResult> {
    let system = TransferSystem::build(presentation, l, Parallelism::Parallel)?;
    hausdorff_dim_in(&system, tol, WeightMode::RepPoint)
}

/// Dimension with sup or inf cylinder weights; the three modes bracket
/// the representative-point root.
pub fn hausdorff_dim_with_mode(
    presentation: &GroupPresentation,
    l: u32,
    tol: f64,
    mode: WeightMode,
) -> Result<DimResult> {
    let system = match mode {
        WeightMode::RepPoint => TransferSystem::build(presentation, l, Parallelism::Parallel)?,
        _ => TransferSystem::build_with_bounds(presentation, l, Parallelism::Parallel)?,
    };
    hausdorff_dim_in(&system, tol, mode)
}

pub(crate) fn hausdorff_dim_in(
    system: &TransferSystem,
    tol: f64,
    mode: WeightMode,
) -> Result<DimResult> {
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Usage("bisection tolerance must be positive".into()));
    }
    let m = system.alphabet().presentation().m();
    let mut warm: Option<Vec<f64>> = None;
    let eval = |b: f64, warm: &mut Option<Vec<f64>>| -> Result<f64> {
        pressure_warm(system, &PotentialParams::geometric(m, b), mode, warm).map(|r| r.value)
    };

    let (mut lo, mut hi) = DIM_BRACKET;
    let p_lo = eval(lo, &mut warm)?;
    if p_lo <= 0.0 {
        return Err(Error::NoSignChange(format!(
            "pressure is already {p_lo:.3e} at b = {lo}; no root above 1/2"
        )));
    }
    let mut widened = false;
    if eval(hi, &mut warm)? > 0.0 {
        widened = true;
        hi = DIM_WIDE_END;
        let p_wide = eval(hi, &mut warm)?;
        if p_wide > 0.0 {
            return Err(Error::NoSignChange(format!(
                "pressure stays positive up to b = {hi} (value {p_wide:.3e})"
            )));
        }
    }

    while hi - lo > tol {
        let mid = 0.5 * (lo + hi);
        if eval(mid, &mut warm)? > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let s = 0.5 * (lo + hi);
    let residual = eval(s, &mut warm)?;
    Ok(DimResult {
        s,
        bracket: (lo, hi),
        l: system.alphabet().l_max(),
        residual,
        widened,
    })
}

/// One solved point of the cusp-winding spectrum.
#[derive(Debug, Clone)]
pub struct SpectrumPoint {
    pub alpha: Vec<f64>,
    pub q: Vec<f64>,
    pub b: f64,
    /// |P| at the solution.
    pub residual_p: f64,
    /// |∂P/∂qᵢ| at the solution (finite differences).
    pub residual_grad: Vec<f64>,
    /// Gibbs means ∫Φᵢ dμ; equals α up to the gradient residual.
    pub a_integrals: Vec<f64>,
    pub lyapunov: f64,
    pub entropy: f64,
    pub l: u32,
    pub newton_iterations: u32,
    pub distortion_bound: f64,
}

/// Solves P(q, b; α) = 0, ∇_q P = 0 for one target α ∈ (0, ∞)ᵐ.
pub fn solve_spectrum_point(
    presentation: &GroupPresentation,
    alpha: &[f64],
    l: u32,
    tol: f64,
) -> Result<SpectrumPoint> {
    let system = TransferSystem::build(presentation, l, Parallelism::Parallel)?;
    let dim = hausdorff_dim_in(&system, INIT_DIM_TOL, WeightMode::RepPoint)?;
    solve_with_system(&system, alpha, tol, dim.s)
}

/// Independent solves over a list of α targets. Each point is a pure
/// function of (presentation, alpha, l, tol), so the output does not
/// depend on scheduling; order follows the input.
pub fn spectrum_grid(
    presentation: &GroupPresentation,
    alpha_grid: &[Vec<f64>],
    l: u32,
    tol: f64,
    parallelism: Parallelism,
) -> Result<Vec<Result<SpectrumPoint>>> {
    let system = TransferSystem::build(presentation, l, parallelism)?;
    let dim = hausdorff_dim_in(&system, INIT_DIM_TOL, WeightMode::RepPoint)?;
    let system = &system;
    Ok(map_indexed(alpha_grid.len(), parallelism, move |k| {
        solve_with_system(system, &alpha_grid[k], tol, dim.s)
    }))
}

fn check_alpha(alpha: &[f64], m: usize) -> Result<()> {
    if alpha.len() != m {
        return Err(Error::Usage(format!(
            "alpha has {} coordinates, the presentation has {} cusps",
            alpha.len(),
            m
        )));
    }
    if alpha.iter().any(|a| !(a.is_finite() && *a > 0.0)) {
        return Err(Error::Usage(
            "alpha must be strictly positive in every cusp coordinate".into(),
        ));
    }
    Ok(())
}

pub(crate) fn solve_with_system(
    system: &TransferSystem,
    alpha: &[f64],
    tol: f64,
    b_init: f64,
) -> Result<SpectrumPoint> {
    let m = system.alphabet().presentation().m();
    check_alpha(alpha, m)?;
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::Usage("newton tolerance must be positive".into()));
    }

    let q0 = vec![1.0; m];
    let b0 = b_init.clamp(0.502, 0.998);
    match newton(system, alpha, tol, &q0, b0) {
        Ok(point) => Ok(point),
        Err(first_failure) => {
            // Continuation fallback: at (q = 1, b₀) the Gibbs means define
            // a target the cold start solves immediately; walk α from
            // there to the request on a geometric path.
            let probe = PotentialParams::new(q0.clone(), b0, vec![0.0; m])?;
            let anchor = gibbs_stats(system, &probe)?.a_integrals;
            if anchor.iter().any(|a| !(*a > 0.0)) {
                return Err(first_failure);
            }
            let span = alpha
                .iter()
                .zip(&anchor)
                .map(|(t, s)| (t / s).ln().abs())
                .fold(0.0f64, f64::max);
            let steps = ((span / 0.35).ceil() as u32).clamp(1, 40);
            let mut q = q0;
            let mut b = b0;
            let mut last = None;
            for k in 1..=steps {
                let t = f64::from(k) / f64::from(steps);
                let target: Vec<f64> = alpha
                    .iter()
                    .zip(&anchor)
                    .map(|(a, s)| s.powf(1.0 - t) * a.powf(t))
                    .collect();
                let point = newton(system, &target, tol, &q, b)?;
                q = point.q.clone();
                b = point.b;
                last = Some(point);
            }
            Ok(last.expect("at least one continuation step"))
        }
    }
}

/// Pressure and its finite-difference q-gradient, the residual vector of
/// the implicit system. Central differences keep the gradient bias at
/// O(step²); near the q = 0 boundary the step shrinks to stay interior.
fn eval_system(
    system: &TransferSystem,
    alpha: &[f64],
    q: &[f64],
    b: f64,
    warm: &mut Option<Vec<f64>>,
) -> Result<Vec<f64>> {
    let m = q.len();
    let value = |q: Vec<f64>, b: f64, warm: &mut Option<Vec<f64>>| -> Result<f64> {
        let params = PotentialParams::new(q, b, alpha.to_vec())?;
        Ok(pressure_warm(system, &params, WeightMode::RepPoint, warm)?.value)
    };
    let mut f = Vec::with_capacity(m + 1);
    f.push(value(q.to_vec(), b, warm)?);
    for i in 0..m {
        let step = FD_STEP.min(0.5 * q[i]).max(1e-9);
        let mut qp = q.to_vec();
        qp[i] += step;
        let mut qm = q.to_vec();
        qm[i] -= step;
        let plus = value(qp, b, warm)?;
        let minus = value(qm, b, warm)?;
        f.push((plus - minus) / (2.0 * step));
    }
    Ok(f)
}

fn newton(
    system: &TransferSystem,
    alpha: &[f64],
    tol: f64,
    q_start: &[f64],
    b_start: f64,
) -> Result<SpectrumPoint> {
    let m = alpha.len();
    let n = m + 1;
    let mut q = q_start.to_vec();
    let mut b = b_start;
    let mut warm: Option<Vec<f64>> = None;

    for iteration in 1..=NEWTON_MAX_ITERATIONS {
        let f = eval_system(system, alpha, &q, b, &mut warm)?;
        let f_norm = f.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
        if !f_norm.is_finite() || f_norm > 1e8 {
            return Err(Error::NonConvergence {
                what: format!("Newton residual diverged at alpha = {alpha:?}"),
                iterations: iteration as usize,
                last_delta: f_norm,
            });
        }
        if f_norm <= tol {
            return finish_point(system, alpha, q, b, &f, iteration);
        }

        // Forward-difference Jacobian, column by column.
        let mut jac = vec![0.0; n * n];
        for j in 0..n {
            let (qj, bj) = perturb(&q, b, j, FD_STEP);
            let fj = eval_system(system, alpha, &qj, bj, &mut warm)?;
            for i in 0..n {
                jac[i * n + j] = (fj[i] - f[i]) / FD_STEP;
            }
        }
        let rhs: Vec<f64> = f.iter().map(|v| -v).collect();
        let delta = solve_linear(jac, rhs).map_err(|_| Error::NonConvergence {
            what: format!("singular Newton Jacobian at alpha = {alpha:?}"),
            iterations: iteration as usize,
            last_delta: f_norm,
        })?;

        // Halve the step until it stays inside {q > 0, b ∈ (0, 1)}. The
        // interior-q constraint keeps every letter sum finite for b ≥ 0,
        // so small-α solutions with b below 1/2 remain reachable.
        let mut t = 1.0f64;
        loop {
            let ok = (0..m).all(|i| q[i] + t * delta[i] > 0.0)
                && (b + t * delta[m]) > 1e-6
                && (b + t * delta[m]) < 1.0 - 1e-9;
            if ok {
                break;
            }
            t *= 0.5;
            if t < 1e-12 {
                return Err(Error::NonConvergence {
                    what: format!("Newton step pinned to the region boundary at alpha = {alpha:?}"),
                    iterations: iteration as usize,
                    last_delta: f_norm,
                });
            }
        }
        for i in 0..m {
            q[i] += t * delta[i];
        }
        b += t * delta[m];
    }
    Err(Error::NonConvergence {
        what: format!("Newton did not reach tolerance {tol:.1e} at alpha = {alpha:?}"),
        iterations: NEWTON_MAX_ITERATIONS as usize,
        last_delta: f64::NAN,
    })
}

fn perturb(q: &[f64], b: f64, j: usize, step: f64) -> (Vec<f64>, f64) {
    let mut qj = q.to_vec();
    let mut bj = b;
    if j < q.len() {
        qj[j] += step;
    } else {
        bj += step;
    }
    (qj, bj)
}

fn finish_point(
    system: &TransferSystem,
    alpha: &[f64],
    q: Vec<f64>,
    b: f64,
    f: &[f64],
    iterations: u32,
) -> Result<SpectrumPoint> {
    let params = PotentialParams::new(q.clone(), b, alpha.to_vec())?;
    let stats = gibbs_stats(system, &params)?;
    Ok(SpectrumPoint {
        alpha: alpha.to_vec(),
        q,
        b,
        residual_p: f[0].abs(),
        residual_grad: f[1..].iter().map(|v| v.abs()).collect(),
        a_integrals: stats.a_integrals,
        lyapunov: stats.lyapunov,
        entropy: stats.entropy,
        l: system.alphabet().l_max(),
        newton_iterations: iterations,
        distortion_bound: stats.distortion_bound,
    })
}

/// Gaussian elimination with partial pivoting for the (m+1)-dimensional
/// Newton systems; m stays single-digit.
fn solve_linear(mut a: Vec<f64>, mut b: Vec<f64>) -> std::result::Result<Vec<f64>, ()> {
    let n = b.len();
    debug_assert_eq!(a.len(), n * n);
    for col in 0..n {
        let pivot_row = (col..n)
            .max_by(|&r1, &r2| {
                a[r1 * n + col]
                    .abs()
                    .partial_cmp(&a[r2 * n + col].abs())
                    .unwrap_or(std::cmp::Ordering::Equal)
            })
            .ok_or(())?;
        if a[pivot_row * n + col].abs() < 1e-300 {
            return Err(());
        }
        if pivot_row != col {
            for k in 0..n {
                a.swap(col * n + k, pivot_row * n + k);
            }
            b.swap(col, pivot_row);
        }
        for row in (col + 1)..n {
            let factor = a[row * n + col] / a[col * n + col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row * n + k] -= factor * a[col * n + k];
            }
            b[row] -= factor * b[col];
        }
    }
    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let mut acc = b[row];
        for k in (row + 1)..n {
            acc -= a[row * n + k] * x[k];
        }
        x[row] = acc / a[row * n + row];
        if !x[row].is_finite() {
            return Err(());
        }
    }
    Ok(x)
}

/// Grid-scan localization of (q(α), b(α)): for each b in the grid, the
/// minimum of the pressure over the q grid; the spectrum value sits where
/// that minimum changes sign.
#[derive(Debug, Clone)]
pub struct OracleResult {
    /// Largest grid b with min_q P ≥ 0.
    pub b_low: f64,
    /// Next grid b, where the minimum is negative.
    pub b_high: f64,
    /// Argmin q at `b_low`.
    pub q_argmin_low: Vec<f64>,
    /// Argmin q at `b_high`.
    pub q_argmin_high: Vec<f64>,
    /// min_q P per grid b, ascending in b.
    pub min_pressures: Vec<f64>,
    pub b_grid: Vec<f64>,
}

pub fn brute_force_oracle(
    presentation: &GroupPresentation,
    alpha: &[f64],
    q_grid: &[Vec<f64>],
    b_grid: &[f64],
    l: u32,
    parallelism: Parallelism,
) -> Result<OracleResult> {
    let m = presentation.m();
    check_alpha(alpha, m)?;
    if q_grid.is_empty() || b_grid.is_empty() {
        return Err(Error::Usage("oracle grids must be nonempty".into()));
    }
    if q_grid.iter().any(|q| q.len() != m) {
        return Err(Error::Usage("every q grid point needs m coordinates".into()));
    }
    let mut b_sorted = b_grid.to_vec();
    b_sorted.sort_by(|x, y| x.partial_cmp(y).expect("finite grid"));

    let system = TransferSystem::build(presentation, l, parallelism)?;
    let mut warm: Option<Vec<f64>> = None;
    let mut min_pressures = Vec::with_capacity(b_sorted.len());
    let mut argmins: Vec<Vec<f64>> = Vec::with_capacity(b_sorted.len());
    for &b in &b_sorted {
        let mut best = f64::INFINITY;
        let mut best_q = q_grid[0].clone();
        for q in q_grid {
            let params = PotentialParams::new(q.clone(), b, alpha.to_vec())?;
            let value = pressure_warm(&system, &params, WeightMode::RepPoint, &mut warm)?.value;
            if value < best {
                best = value;
                best_q = q.clone();
            }
        }
        min_pressures.push(best);
        argmins.push(best_q);
    }

    for k in 0..b_sorted.len() - 1 {
        if min_pressures[k] >= 0.0 && min_pressures[k + 1] < 0.0 {
            return Ok(OracleResult {
                b_low: b_sorted[k],
                b_high: b_sorted[k + 1],
                q_argmin_low: argmins[k].clone(),
                q_argmin_high: argmins[k + 1].clone(),
                min_pressures,
                b_grid: b_sorted,
            });
        }
    }
    Err(Error::NoSignChange(format!(
        "min_q P runs from {:.3e} to {:.3e} without a sign change",
        min_pressures.first().unwrap(),
        min_pressures.last().unwrap()
    )))
}

/// Least-squares fit of sup log|(γˡ)′| over the block cylinders against
/// log l. The supremum is taken over the cylinders of all terminal
/// letters, which makes the diagnostic symmetric under inverting γ.
#[derive(Debug, Clone)]
pub struct DistortionFit {
    pub slope: f64,
    pub intercept: f64,
}

pub fn distortion_exponent(
    presentation: &GroupPresentation,
    cusp: usize,
    l_lo: u32,
    l_hi: u32,
) -> Result<DistortionFit> {
    distortion_exponent_signed(presentation, 2 * cusp, l_lo, l_hi)
}

/// Same fit for a signed parabolic generator (index into the signed list).
pub fn distortion_exponent_signed(
    presentation: &GroupPresentation,
    par_idx: usize,
    l_lo: u32,
    l_hi: u32,
) -> Result<DistortionFit> {
    if par_idx >= 2 * presentation.m() {
        return Err(Error::Usage(format!(
            "parabolic index {par_idx} out of range"
        )));
    }
    if !(10 <= l_lo && l_lo < l_hi && l_hi <= 1000) {
        return Err(Error::Usage(
            "block-length range must satisfy 10 ≤ lo < hi ≤ 1000".into(),
        ));
    }
    let alphabet = TruncatedAlphabet::build(presentation, l_hi)?;
    let gamma = presentation.par_signed(par_idx);
    let (cusp, negative) = (par_idx / 2, par_idx % 2 == 1);
    let n2 = 2 * presentation.n();

    let mut xs = Vec::with_capacity((l_hi - l_lo + 1) as usize);
    let mut ys = Vec::with_capacity(xs.capacity());
    for l in l_lo..=l_hi {
        let gamma_l = gamma.pow(l);
        let mut sup = f64::NEG_INFINITY;
        for terminal in 0..n2 {
            let li = alphabet
                .index_of(Letter::Par {
                    cusp,
                    negative,
                    power: l,
                    terminal,
                })
                .expect("power within truncation");
            let (_, hi) = gamma_l.log_derivative_range(alphabet.arc(li));
            sup = sup.max(hi);
        }
        xs.push(f64::from(l).ln());
        ys.push(sup);
    }
    let (slope, intercept) = least_squares(&xs, &ys);
    Ok(DistortionFit { slope, intercept })
}

fn least_squares(xs: &[f64], ys: &[f64]) -> (f64, f64) {
    let n = xs.len() as f64;
    let mx = xs.iter().sum::<f64>() / n;
    let my = ys.iter().sum::<f64>() / n;
    let cov: f64 = xs.iter().zip(ys).map(|(x, y)| (x - mx) * (y - my)).sum();
    let var: f64 = xs.iter().map(|x| (x - mx) * (x - mx)).sum();
    let slope = cov / var;
    (slope, my - slope * mx)
}

/// Cusp-winding and expansion averages along one periodic orbit.
#[derive(Debug, Clone)]
pub struct PeriodicOrbit {
    pub a_avg: Vec<f64>,
    pub lyapunov_avg: f64,
    /// The periodic boundary point (angle) the cycle closes at.
    pub point: f64,
}

/// Evaluates the periodic point of an admissible letter cycle by
/// iterating the composed inverse branch, then averages the winding
/// vector and log|f̃′| along the orbit. The orbit measure has zero
/// entropy, so `a_avg` and `lyapunov_avg` give variational competitors.
pub fn periodic_orbit_stats(
    presentation: &GroupPresentation,
    cycle: &[Letter],
) -> Result<PeriodicOrbit> {
    if cycle.is_empty() {
        return Err(Error::Usage("empty letter cycle".into()));
    }
    let l_max = cycle
        .iter()
        .filter_map(|letter| letter.power())
        .max()
        .unwrap_or(1);
    let alphabet = TruncatedAlphabet::build(presentation, l_max)?;
    let idx: Vec<usize> = cycle
        .iter()
        .map(|&letter| {
            alphabet
                .index_of(letter)
                .ok_or_else(|| Error::Usage(format!("letter {letter:?} not in the alphabet")))
        })
        .collect::<Result<_>>()?;
    let k = idx.len();
    for (pos, &i) in idx.iter().enumerate() {
        let next = idx[(pos + 1) % k];
        if !alphabet.admissible(i, next) {
            return Err(Error::InadmissibleWord {
                position: pos,
                detail: "cycle junction forbidden (including the wrap)".into(),
            });
        }
    }

    // The composed inverse branch strictly contracts the first cylinder.
    let mut theta = alphabet.arc(idx[0]).midpoint();
    let mut delta = f64::INFINITY;
    for _ in 0..20 {
        let mut t = theta;
        for &i in idx.iter().rev() {
            t = alphabet.inv_branch(i).apply_boundary(t);
        }
        let wrapped = normalize_angle(t - theta);
        delta = wrapped.min(std::f64::consts::TAU - wrapped);
        theta = t;
        if delta <= 1e-13 {
            break;
        }
    }
    if delta > 1e-9 {
        return Err(Error::NonConvergence {
            what: "periodic-point contraction iteration".into(),
            iterations: 20,
            last_delta: delta,
        });
    }

    let m = presentation.m();
    let mut a = vec![0.0; m];
    let mut lyap = 0.0;
    let mut x = theta;
    for &i in &idx {
        for (c, ac) in a.iter_mut().enumerate() {
            *ac += alphabet.winding(i, c);
        }
        lyap += alphabet.branch_map(i).log_boundary_derivative(x);
        x = alphabet.branch_map(i).apply_boundary(x);
    }
    let kf = k as f64;
    Ok(PeriodicOrbit {
        a_avg: a.into_iter().map(|v| v / kf).collect(),
        lyapunov_avg: lyap / kf,
        point: theta,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::moebius::DiscIsometry;
    use crate::pressure::pressure;

    fn one_cusp() -> GroupPresentation {
        GroupPresentation::preset("one_cusp").unwrap()
    }

    #[test]
    fn dimension_root_properties() {
        let dim = hausdorff_dim(&one_cusp(), 40, 1e-10).unwrap();
        assert!(dim.s > 0.5 && dim.s < 1.0, "s = {}", dim.s);
        assert!(dim.residual.abs() < 1e-8, "residual {}", dim.residual);
        assert!(dim.bracket.0 <= dim.s && dim.s <= dim.bracket.1);
        assert!(dim.bracket.1 - dim.bracket.0 <= 2e-10);
        assert!(!dim.widened);
        assert_eq!(dim.l, 40);
    }

    #[test]
    fn dimension_stable_under_truncation_growth() {
        let d50 = hausdorff_dim(&one_cusp(), 50, 1e-10).unwrap();
        let d100 = hausdorff_dim(&one_cusp(), 100, 1e-10).unwrap();
        // The preset's letter weights decay like p^{-2s} with s near 0.52,
        // so the tail mass above L = 50 still moves the root at the 1e-2
        // scale; the drift must stay inside that envelope.
        assert!(
            (d50.s - d100.s).abs() < 2e-2,
            "L=50 gives {}, L=100 gives {}",
            d50.s,
            d100.s
        );
        // Larger alphabets carry more mass, so the root only moves up.
        assert!(d100.s >= d50.s - 1e-12);
    }

    #[test]
    fn dimension_invariant_under_rotation_conjugation() {
        let p = one_cusp();
        let r = DiscIsometry::rotation(0.7);
        let conj = |g: &DiscIsometry| {
            let c = DiscIsometry::compose(&DiscIsometry::compose(&r, g), &r.inverse());
            DiscIsometry::new(c.a, c.b, g.name.clone()).unwrap()
        };
        let rotated = GroupPresentation::new(
            p.parabolic().iter().map(&conj).collect(),
            p.hyperbolic().iter().map(&conj).collect(),
        )
        .unwrap();
        let d0 = hausdorff_dim(&p, 40, 1e-10).unwrap();
        let d1 = hausdorff_dim(&rotated, 40, 1e-10).unwrap();
        assert!((d0.s - d1.s).abs() < 1e-9, "{} vs {}", d0.s, d1.s);
    }

    #[test]
    fn weight_mode_roots_bracket() {
        let rep = hausdorff_dim_with_mode(&one_cusp(), 40, 1e-9, WeightMode::RepPoint).unwrap();
        let sup = hausdorff_dim_with_mode(&one_cusp(), 40, 1e-9, WeightMode::Sup).unwrap();
        let inf = hausdorff_dim_with_mode(&one_cusp(), 40, 1e-9, WeightMode::Inf).unwrap();
        assert!(inf.s <= rep.s && rep.s <= sup.s, "{} {} {}", inf.s, rep.s, sup.s);
        assert!(sup.s > inf.s);
    }

    #[test]
    fn spectrum_point_self_consistency() {
        let point = solve_spectrum_point(&one_cusp(), &[2.0], 60, 1e-10).unwrap();
        assert!(point.residual_p < 1e-8);
        assert!(point.residual_grad[0] < 1e-8);
        assert!((point.a_integrals[0] - 2.0).abs() < 1e-6);
        assert!(point.b > 0.0 && point.b < 1.0);
        assert!(point.q[0] > 0.0);
        assert!((point.b - point.entropy / point.lyapunov).abs() < 1e-6);
        assert!(point.entropy > 0.0 && point.lyapunov > 0.0);
    }

    #[test]
    fn spectrum_rejects_bad_alpha() {
        assert!(solve_spectrum_point(&one_cusp(), &[0.0], 20, 1e-8).is_err());
        assert!(solve_spectrum_point(&one_cusp(), &[-1.0], 20, 1e-8).is_err());
        assert!(solve_spectrum_point(&one_cusp(), &[1.0, 2.0], 20, 1e-8).is_err());
    }

    #[test]
    fn spectrum_increases_toward_the_dimension() {
        let l = 40;
        let s = hausdorff_dim(&one_cusp(), l, 1e-10).unwrap().s;
        let grid: Vec<Vec<f64>> = [0.5, 1.0, 2.0, 4.0].iter().map(|&a| vec![a]).collect();
        let points = spectrum_grid(&one_cusp(), &grid, l, 1e-10, Parallelism::Parallel).unwrap();
        let bs: Vec<f64> = points
            .into_iter()
            .map(|p| p.expect("interior alphas solve").b)
            .collect();
        for pair in bs.windows(2) {
            assert!(pair[0] < pair[1], "b must increase: {bs:?}");
        }
        for &b in &bs {
            assert!(b <= s + 1e-6, "b = {b} exceeds s = {s}");
        }
    }

    #[test]
    fn grid_matches_single_point_solves() {
        let grid = vec![vec![1.5]];
        let from_grid = spectrum_grid(&one_cusp(), &grid, 30, 1e-10, Parallelism::Sequential)
            .unwrap()
            .remove(0)
            .unwrap();
        let single = solve_spectrum_point(&one_cusp(), &[1.5], 30, 1e-10).unwrap();
        assert_eq!(from_grid.b.to_bits(), single.b.to_bits());
        assert_eq!(from_grid.q[0].to_bits(), single.q[0].to_bits());
    }

    #[test]
    fn two_cusp_label_symmetry() {
        let p = GroupPresentation::preset("two_cusp").unwrap();
        let a = solve_spectrum_point(&p, &[1.0, 2.0], 30, 1e-10).unwrap();
        let b = solve_spectrum_point(&p, &[2.0, 1.0], 30, 1e-10).unwrap();
        assert!((a.b - b.b).abs() < 1e-9, "{} vs {}", a.b, b.b);
        assert!((a.q[0] - b.q[1]).abs() < 1e-6);
        assert!((a.q[1] - b.q[0]).abs() < 1e-6);
    }

    #[test]
    fn oracle_brackets_newton() {
        let alpha = [2.0];
        let l = 30;
        let newton = solve_spectrum_point(&one_cusp(), &alpha, l, 1e-10).unwrap();
        let q_grid: Vec<Vec<f64>> = (-6..=6)
            .map(|k| vec![newton.q[0] + 0.05 * f64::from(k)])
            .filter(|q| q[0] > 0.0)
            .collect();
        let b_grid: Vec<f64> = (-3..=3)
            .map(|k| (newton.b + 0.05 * f64::from(k)).clamp(0.05, 0.995))
            .collect();
        let oracle = brute_force_oracle(
            &one_cusp(),
            &alpha,
            &q_grid,
            &b_grid,
            l,
            Parallelism::Sequential,
        )
        .unwrap();

        assert!(oracle.b_low <= newton.b + 1e-9 && newton.b <= oracle.b_high + 1e-9);
        assert!((oracle.b_high - oracle.b_low) < 0.05 + 1e-9);
        for pair in oracle.min_pressures.windows(2) {
            assert!(pair[1] <= pair[0] + 1e-9, "min_q P must fall with b");
        }
        let drift = (oracle.q_argmin_low[0] - newton.q[0])
            .abs()
            .min((oracle.q_argmin_high[0] - newton.q[0]).abs());
        assert!(drift <= 0.05 + 1e-9, "argmin drift {drift}");
    }

    #[test]
    fn oracle_reports_missing_sign_change() {
        let err = brute_force_oracle(
            &one_cusp(),
            &[2.0],
            &[vec![1.0]],
            &[0.95, 0.97],
            20,
            Parallelism::Sequential,
        )
        .unwrap_err();
        assert!(matches!(err, Error::NoSignChange(_)));
    }

    #[test]
    fn distortion_slope_is_quadratic() {
        let fit = distortion_exponent(&one_cusp(), 0, 20, 200).unwrap();
        assert!((fit.slope - 2.0).abs() < 0.05, "slope {}", fit.slope);
        assert!(fit.intercept.is_finite());
    }

    #[test]
    fn distortion_slope_matches_for_inverse_generator() {
        let plus = distortion_exponent_signed(&one_cusp(), 0, 20, 120).unwrap();
        let minus = distortion_exponent_signed(&one_cusp(), 1, 20, 120).unwrap();
        assert!(
            (plus.slope - minus.slope).abs() < 1e-3,
            "{} vs {}",
            plus.slope,
            minus.slope
        );
    }

    #[test]
    fn distortion_range_validation() {
        assert!(distortion_exponent(&one_cusp(), 0, 5, 200).is_err());
        assert!(distortion_exponent(&one_cusp(), 0, 20, 2000).is_err());
        assert!(distortion_exponent(&one_cusp(), 3, 20, 200).is_err());
    }

    #[test]
    fn periodic_orbit_on_the_hyperbolic_axis() {
        // The cycle [Hyp(h)] closes at the repelling fixed point of h,
        // the center of Δ(h) at angle 3π/2 with log-derivative 2s = 3.6.
        let orbit = periodic_orbit_stats(&one_cusp(), &[Letter::Hyp { gen: 0 }]).unwrap();
        assert!((orbit.point - 3.0 * std::f64::consts::FRAC_PI_2).abs() < 1e-12);
        assert!((orbit.lyapunov_avg - 3.6).abs() < 1e-10);
        assert_eq!(orbit.a_avg, vec![0.0]);
    }

    #[test]
    fn periodic_orbit_winding_average() {
        for l in [1u32, 5, 10] {
            let cycle = [
                Letter::Par {
                    cusp: 0,
                    negative: false,
                    power: l,
                    terminal: 0,
                },
                Letter::Hyp { gen: 0 },
            ];
            let orbit = periodic_orbit_stats(&one_cusp(), &cycle).unwrap();
            let expected = f64::from(l - 1) / 2.0;
            assert!((orbit.a_avg[0] - expected).abs() < 1e-14);
            assert!(orbit.lyapunov_avg > 0.0);
        }
    }

    #[test]
    fn periodic_orbit_rejects_bad_junctions() {
        let inner = [Letter::Hyp { gen: 0 }, Letter::Hyp { gen: 1 }];
        assert!(matches!(
            periodic_orbit_stats(&one_cusp(), &inner).unwrap_err(),
            Error::InadmissibleWord { position: 0, .. }
        ));
        // Admissible inside, forbidden around the wrap.
        let wrap = [
            Letter::Hyp { gen: 0 },
            Letter::Par {
                cusp: 0,
                negative: false,
                power: 1,
                terminal: 1,
            },
        ];
        assert!(matches!(
            periodic_orbit_stats(&one_cusp(), &wrap).unwrap_err(),
            Error::InadmissibleWord { position: 1, .. }
        ));
        assert!(periodic_orbit_stats(&one_cusp(), &[]).is_err());
    }

    #[test]
    fn gibbs_measures_are_variational_competitors() {
        // Any zero-pressure equilibrium with mean winding a is a competitor
        // in the problem b(a) solves, so its dimension ratio h/λ sits below.
        let l = 40;
        let system = TransferSystem::build(&one_cusp(), l, Parallelism::Parallel).unwrap();
        let q1 = vec![0.65];

        let mut alpha_est = 1.0f64;
        let mut stats = None;
        for round in 0..60 {
            // Root of b ↦ P(q₁, b) at the current normalization α_est.
            // Interior q keeps the sums finite down to b = 0, and the
            // root can sit below 1/2 there.
            let (mut lo, mut hi) = (0.05f64, 0.995f64);
            let mut warm = None;
            for _ in 0..60 {
                let mid = 0.5 * (lo + hi);
                let params =
                    PotentialParams::new(q1.clone(), mid, vec![alpha_est]).unwrap();
                let value = pressure_warm(&system, &params, WeightMode::RepPoint, &mut warm)
                    .unwrap()
                    .value;
                if value > 0.0 {
                    lo = mid;
                } else {
                    hi = mid;
                }
            }
            let b1 = 0.5 * (lo + hi);
            let params = PotentialParams::new(q1.clone(), b1, vec![alpha_est]).unwrap();
            let s = gibbs_stats(&system, &params).unwrap();
            let moved = (s.a_integrals[0] - alpha_est).abs();
            alpha_est = s.a_integrals[0];
            stats = Some((b1, s));
            if moved < 1e-9 {
                break;
            }
            assert!(round < 59, "normalization fixed point did not settle");
        }
        let (b1, stats) = stats.unwrap();
        let params = PotentialParams::new(q1, b1, vec![alpha_est]).unwrap();
        assert!(
            pressure(&system, &params).unwrap().value.abs() < 1e-6,
            "normalization loop converged to a zero-pressure point"
        );

        let dim = hausdorff_dim_in(&system, INIT_DIM_TOL, WeightMode::RepPoint).unwrap();
        let solved = solve_with_system(&system, &[alpha_est], 1e-10, dim.s).unwrap();
        let ratio = stats.entropy / stats.lyapunov;
        assert!(
            ratio <= solved.b + 2e-6,
            "competitor ratio {ratio} above spectrum value {}",
            solved.b
        );
    }

    #[test]
    fn linear_solver_pivots() {
        // Needs a row swap: the first pivot is zero.
        let a = vec![0.0, 1.0, 1.0, 0.0];
        let x = solve_linear(a, vec![2.0, 3.0]).unwrap();
        assert_eq!(x, vec![3.0, 2.0]);
        assert!(solve_linear(vec![1.0, 2.0, 2.0, 4.0], vec![1.0, 2.0]).is_err());
    }
}
