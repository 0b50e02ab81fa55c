//! Topological pressure of the induced boundary map at a truncation.
//!
//! The potential is φ(x) = ⟨q, α − Φ(x₀)⟩ − b·log|f̃′(x)|, where Φ is the
//! cusp-winding vector of the first letter. Pressure is realized as the
//! log spectral radius of a weighted transition matrix on letters, with
//! the geometric factor evaluated at a representative point of each
//! 2-cylinder. The max over pairs of the within-cylinder range of the
//! letter potential is reported as `distortion_bound`: it is the scale
//! on which the representative-point value can differ from the exact
//! truncated pressure.

use crate::coding::TruncatedAlphabet;
use crate::error::{Error, Result};
use crate::moebius::BoundaryArc;
use crate::parallel::{map_indexed, Parallelism};
use crate::schottky::GroupPresentation;

/// Relative stabilization tolerance for power-iteration eigenvalue estimates.
pub const POWER_TOL: f64 = 1e-13;
/// Iteration cap before power iteration reports non-convergence.
pub const MAX_POWER_ITERATIONS: usize = 100_000;

/// Parameters (q, b, α) of the potential ⟨q, α − Φ⟩ − b·log|f̃′|.
#[derive(Debug, Clone, PartialEq)]
pub struct PotentialParams {
    pub q: Vec<f64>,
    pub b: f64,
    pub alpha: Vec<f64>,
}

impl PotentialParams {
    /// Checks entries are finite and q, α have equal length.
    pub fn new(q: Vec<f64>, b: f64, alpha: Vec<f64>) -> Result<Self> {
        if q.len() != alpha.len() {
            return Err(Error::Usage(format!(
                "q has {} entries but alpha has {}",
                q.len(),
                alpha.len()
            )));
        }
        if !b.is_finite() || q.iter().chain(&alpha).any(|x| !x.is_finite()) {
            return Err(Error::Usage("potential parameters must be finite".into()));
        }
        Ok(Self { q, b, alpha })
    }

    /// The purely geometric potential −b·log|f̃′| (q = α = 0).
    pub fn geometric(m: usize, b: f64) -> Self {
        Self {
            q: vec![0.0; m],
            b,
            alpha: vec![0.0; m],
        }
    }

    /// Number of cusp coordinates.
    pub fn m(&self) -> usize {
        self.q.len()
    }
}

/// Verdict of the parameter-region test.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Finiteness {
    Finite,
    Infinite,
}

/// Closed-form finiteness region of the untruncated pressure: finite iff
/// all qᵢ > 0 with b ≥ 0, or all qᵢ ≥ 0 with b > 1/2.
///
/// Panics if the parameter dimension does not match the presentation.
pub fn finiteness_check(presentation: &GroupPresentation, params: &PotentialParams) -> Finiteness {
    assert_eq!(
        params.m(),
        presentation.m(),
        "parameter dimension does not match the presentation"
    );
    if params.q.iter().any(|&qi| qi < 0.0) {
        return Finiteness::Infinite;
    }
    let interior = params.q.iter().all(|&qi| qi > 0.0);
    if (interior && params.b >= 0.0) || params.b > 0.5 {
        Finiteness::Finite
    } else {
        Finiteness::Infinite
    }
}

/// One-letter partition sums Σ_a exp(sup_[a] φ) at three nested
/// truncations, with the increment ratio that separates convergent from
/// divergent tails.
#[derive(Debug, Clone)]
pub struct TrendReport {
    pub truncations: [u32; 3],
    pub log_sums: [f64; 3],
    /// (S₃ − S₂) / (S₂ − S₁), the ratio of consecutive per-decade mass
    /// increments; at or above 1 for divergent sums.
    pub increment_ratio: f64,
    pub divergent: bool,
}

/// Empirical finiteness cross-check: letter sums at L ∈ {10², 10³, 10⁴}.
///
/// A convergent series has geometrically shrinking increments per decade,
/// so the classification threshold sits just below ratio 1.
pub fn letter_sum_trend(
    presentation: &GroupPresentation,
    params: &PotentialParams,
) -> Result<TrendReport> {
    const LEVELS: [u32; 3] = [100, 1_000, 10_000];
    let alphabet = TruncatedAlphabet::build(presentation, LEVELS[2])?;
    // Per-letter sup of φ; letters of the smaller truncations are a prefix
    // subset with identical values, so one alphabet serves all three sums.
    let exponents: Vec<f64> = (0..alphabet.len())
        .map(|i| {
            let (lo, hi) = alphabet.letter_log_deriv_range(i);
            let bound = if params.b >= 0.0 { lo } else { hi };
            letter_exponent(&alphabet, i, params) - params.b * bound
        })
        .collect();

    let mut log_sums = [0.0; 3];
    for (k, &level) in LEVELS.iter().enumerate() {
        let included: Vec<f64> = (0..alphabet.len())
            .filter(|&i| alphabet.letter(i).power().map_or(true, |p| p <= level))
            .map(|i| exponents[i])
            .collect();
        log_sums[k] = log_sum_exp(&included);
    }

    // Mass added per decade, kept in log space so exploding and vanishing
    // tails both stay representable. The sums only grow, so each increment
    // is exactly the sum over the letters new to that decade.
    let mut log_increments = [f64::NEG_INFINITY; 2];
    for (k, slot) in log_increments.iter_mut().enumerate() {
        let slice: Vec<f64> = (0..alphabet.len())
            .filter(|&i| {
                alphabet
                    .letter(i)
                    .power()
                    .is_some_and(|p| p > LEVELS[k] && p <= LEVELS[k + 1])
            })
            .map(|i| exponents[i])
            .collect();
        *slot = log_sum_exp(&slice);
    }
    let increment_ratio = (log_increments[1] - log_increments[0]).exp();
    Ok(TrendReport {
        truncations: LEVELS,
        log_sums,
        increment_ratio,
        divergent: increment_ratio > 1.0 - 1e-3,
    })
}

/// ⟨q, α − Φ(a)⟩, the part of the potential constant on the letter cylinder.
fn letter_exponent(alphabet: &TruncatedAlphabet, i: usize, params: &PotentialParams) -> f64 {
    let mut e = 0.0;
    for (c, &qc) in params.q.iter().enumerate() {
        e += qc * (params.alpha[c] - alphabet.winding(i, c));
    }
    e
}

/// Which realization of the geometric weight on a 2-cylinder to use.
/// `Sup` and `Inf` bound the representative-point weights from above and
/// below, so the three spectral radii bracket each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum WeightMode {
    #[default]
    RepPoint,
    Sup,
    Inf,
}

/// A truncated alphabet with the pair geometry cached: log|f̃′| at the
/// representative point of every admissible 2-cylinder, the extreme
/// values over each cylinder, and the worst within-cylinder range.
#[derive(Debug, Clone)]
pub struct TransferSystem {
    alphabet: TruncatedAlphabet,
    /// Global letter index of each row/column.
    letters: Vec<usize>,
    size: usize,
    parallelism: Parallelism,
    /// Row-major log|branch′| at pair representative points; 0 at forbidden cells.
    logd: Vec<f64>,
    /// Per-cylinder bounds, kept only when built for sup/inf weights.
    lo: Option<Vec<f64>>,
    hi: Option<Vec<f64>>,
    /// Max over admissible pairs of (sup − inf) of log|branch′|.
    max_range: f64,
    /// Column position of the single forbidden successor per row, if in range.
    forbidden_pos: Vec<Option<usize>>,
    /// Row-major letter windings, size × m.
    winding: Vec<f64>,
}

struct RowGeometry {
    logd: Vec<f64>,
    lo: Vec<f64>,
    hi: Vec<f64>,
    max_range: f64,
}

impl TransferSystem {
    /// Full system over the alphabet, storing representative weights only.
    pub fn build(
        presentation: &GroupPresentation,
        l_max: u32,
        parallelism: Parallelism,
    ) -> Result<Self> {
        let alphabet = TruncatedAlphabet::build(presentation, l_max)?;
        Ok(Self::from_alphabet(alphabet, parallelism, false))
    }

    /// Full system that additionally keeps per-cylinder sup/inf bounds,
    /// enabling `WeightMode::Sup` and `WeightMode::Inf`.
    pub fn build_with_bounds(
        presentation: &GroupPresentation,
        l_max: u32,
        parallelism: Parallelism,
    ) -> Result<Self> {
        let alphabet = TruncatedAlphabet::build(presentation, l_max)?;
        Ok(Self::from_alphabet(alphabet, parallelism, true))
    }

    /// Builds the pair geometry for all letters of an existing alphabet.
    pub fn from_alphabet(
        alphabet: TruncatedAlphabet,
        parallelism: Parallelism,
        with_bounds: bool,
    ) -> Self {
        let letters: Vec<usize> = (0..alphabet.len()).collect();
        Self::assemble(alphabet, letters, parallelism, with_bounds)
    }

    /// Restriction to a letter subset. The restricted transition graph
    /// must stay strongly connected, otherwise the Perron data is not
    /// well defined and the restriction is rejected.
    pub fn subsystem(
        alphabet: TruncatedAlphabet,
        subset: &[usize],
        parallelism: Parallelism,
        with_bounds: bool,
    ) -> Result<Self> {
        let mut letters: Vec<usize> = subset.to_vec();
        letters.sort_unstable();
        letters.dedup();
        if letters.is_empty() {
            return Err(Error::BadSubsystem("empty letter subset"));
        }
        if *letters.last().unwrap() >= alphabet.len() {
            return Err(Error::BadSubsystem("letter index beyond the alphabet"));
        }
        if !restricted_strongly_connected(&alphabet, &letters) {
            return Err(Error::BadSubsystem("restricted transition graph is reducible"));
        }
        Ok(Self::assemble(alphabet, letters, parallelism, with_bounds))
    }

    fn assemble(
        alphabet: TruncatedAlphabet,
        letters: Vec<usize>,
        parallelism: Parallelism,
        with_bounds: bool,
    ) -> Self {
        let size = letters.len();
        let m = alphabet.presentation().m();

        let forbidden_pos: Vec<Option<usize>> = letters
            .iter()
            .map(|&a| {
                let f = alphabet.forbidden_successor(a);
                letters.binary_search(&f).ok()
            })
            .collect();

        let mut winding = Vec::with_capacity(size * m);
        for &a in &letters {
            for c in 0..m {
                winding.push(alphabet.winding(a, c));
            }
        }

        let rows: Vec<RowGeometry> = {
            let alphabet = &alphabet;
            let letters = &letters;
            let forbidden_pos = &forbidden_pos;
            map_indexed(size, parallelism, move |row| {
                let a = letters[row];
                let branch = alphabet.branch_map(a);
                let mut logd = vec![0.0; size];
                let mut lo = vec![0.0; size];
                let mut hi = vec![0.0; size];
                let mut max_range = 0.0f64;
                for (col, &b) in letters.iter().enumerate() {
                    if forbidden_pos[row] == Some(col) {
                        continue;
                    }
                    let pair: BoundaryArc = alphabet.pair_arc(a, b);
                    logd[col] = branch.log_boundary_derivative(pair.midpoint());
                    let (l, h) = branch.log_derivative_range(&pair);
                    lo[col] = l;
                    hi[col] = h;
                    max_range = max_range.max(h - l);
                }
                RowGeometry {
                    logd,
                    lo,
                    hi,
                    max_range,
                }
            })
        };

        let mut logd = Vec::with_capacity(size * size);
        let mut lo = with_bounds.then(|| Vec::with_capacity(size * size));
        let mut hi = with_bounds.then(|| Vec::with_capacity(size * size));
        let mut max_range = 0.0f64;
        for row in rows {
            logd.extend_from_slice(&row.logd);
            if let Some(lo) = lo.as_mut() {
                lo.extend_from_slice(&row.lo);
            }
            if let Some(hi) = hi.as_mut() {
                hi.extend_from_slice(&row.hi);
            }
            max_range = max_range.max(row.max_range);
        }

        Self {
            alphabet,
            letters,
            size,
            parallelism,
            logd,
            lo,
            hi,
            max_range,
            forbidden_pos,
            winding,
        }
    }

    pub fn alphabet(&self) -> &TruncatedAlphabet {
        &self.alphabet
    }

    /// Matrix dimension (number of letters in the system).
    pub fn size(&self) -> usize {
        self.size
    }

    /// Global letter index of a row.
    pub fn letter_of_row(&self, row: usize) -> usize {
        self.letters[row]
    }

    /// Worst within-cylinder range of log|f̃′| over admissible pairs.
    pub fn max_log_deriv_range(&self) -> f64 {
        self.max_range
    }

    fn check_params(&self, params: &PotentialParams) -> Result<()> {
        let p = self.alphabet.presentation();
        if params.m() != p.m() {
            return Err(Error::Usage(format!(
                "potential has {} cusp coordinates, presentation has {}",
                params.m(),
                p.m()
            )));
        }
        if finiteness_check(p, params) == Finiteness::Infinite {
            return Err(Error::InfiniteRegion {
                detail: format!(
                    "q = {:?}, b = {} lies outside the finite-pressure region",
                    params.q, params.b
                ),
            });
        }
        Ok(())
    }

    /// Dense weight matrix W[a][b] = exp(⟨q, α−Φ(a)⟩ − b·log|f̃′|) on
    /// admissible pairs, zero elsewhere. Row-major.
    pub fn weight_matrix(&self, params: &PotentialParams, mode: WeightMode) -> Result<Vec<f64>> {
        self.check_params(params)?;
        let expo: &[f64] = match mode {
            WeightMode::RepPoint => &self.logd,
            WeightMode::Sup | WeightMode::Inf => {
                let (lo, hi) = match (&self.lo, &self.hi) {
                    (Some(lo), Some(hi)) => (lo, hi),
                    _ => {
                        return Err(Error::Usage(
                            "sup/inf weights need a system built with bounds".into(),
                        ))
                    }
                };
                // Sup of exp(φ) uses the smallest log-derivative when b ≥ 0.
                let take_lo = (mode == WeightMode::Sup) == (params.b >= 0.0);
                if take_lo {
                    lo
                } else {
                    hi
                }
            }
        };

        let size = self.size;
        let mut w = vec![0.0; size * size];
        let b = params.b;
        let row_exponents: Vec<f64> = (0..size)
            .map(|row| {
                let mut e = 0.0;
                for (c, &qc) in params.q.iter().enumerate() {
                    e += qc * (params.alpha[c] - self.winding[row * params.m() + c]);
                }
                e
            })
            .collect();
        crate::parallel::fill_rows(&mut w, size, self.parallelism, |row, out| {
            let e = row_exponents[row];
            let src = &expo[row * size..(row + 1) * size];
            for (col, cell) in out.iter_mut().enumerate() {
                *cell = (e - b * src[col]).exp();
            }
            if let Some(f) = self.forbidden_pos[row] {
                out[f] = 0.0;
            }
        });
        Ok(w)
    }
}

/// Forward-and-backward reachability from the first subset letter.
fn restricted_strongly_connected(alphabet: &TruncatedAlphabet, letters: &[usize]) -> bool {
    let n = letters.len();
    let admissible_local = |i: usize, j: usize| alphabet.admissible(letters[i], letters[j]);
    for forward in [true, false] {
        let mut seen = vec![false; n];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(i) = stack.pop() {
            for j in 0..n {
                let edge = if forward {
                    admissible_local(i, j)
                } else {
                    admissible_local(j, i)
                };
                if edge && !seen[j] {
                    seen[j] = true;
                    stack.push(j);
                }
            }
        }
        if seen.iter().any(|s| !s) {
            return false;
        }
    }
    true
}

/// Perron data of a nonnegative matrix from power iteration.
#[derive(Debug, Clone)]
pub struct SpectralData {
    pub rho: f64,
    pub right: Vec<f64>,
    pub left: Option<Vec<f64>>,
    pub iterations: usize,
}

/// Power iteration with L1 normalization. The eigenvalue estimate is the
/// mass growth factor per step; iteration stops when successive estimates
/// agree to `POWER_TOL` relative to the eigenvalue scale.
pub fn spectral_radius(
    w: &[f64],
    size: usize,
    want_left: bool,
    start: Option<&[f64]>,
) -> Result<SpectralData> {
    assert_eq!(w.len(), size * size, "matrix shape mismatch");
    let (rho, right, right_iters) = power_iterate(w, size, false, start)?;
    let (left, left_iters) = if want_left {
        let (_, v, it) = power_iterate(w, size, true, None)?;
        (Some(v), it)
    } else {
        (None, 0)
    };
    Ok(SpectralData {
        rho,
        right,
        left,
        iterations: right_iters + left_iters,
    })
}

fn power_iterate(
    w: &[f64],
    size: usize,
    transpose: bool,
    start: Option<&[f64]>,
) -> Result<(f64, Vec<f64>, usize)> {
    let mut x = match start {
        Some(s) if s.len() == size && s.iter().all(|&v| v > 0.0 && v.is_finite()) => s.to_vec(),
        _ => vec![1.0; size],
    };
    let total: f64 = x.iter().sum();
    for v in &mut x {
        *v /= total;
    }

    let mut y = vec![0.0; size];
    let mut lambda_prev = f64::NAN;
    let mut delta = f64::INFINITY;
    for iteration in 1..=MAX_POWER_ITERATIONS {
        if transpose {
            y.fill(0.0);
            for (i, &xi) in x.iter().enumerate() {
                if xi == 0.0 {
                    continue;
                }
                let row = &w[i * size..(i + 1) * size];
                for (yj, &wij) in y.iter_mut().zip(row) {
                    *yj += xi * wij;
                }
            }
        } else {
            for (i, yi) in y.iter_mut().enumerate() {
                let row = &w[i * size..(i + 1) * size];
                *yi = row.iter().zip(&x).map(|(a, b)| a * b).sum();
            }
        }
        let lambda: f64 = y.iter().sum();
        if !(lambda.is_finite() && lambda > 0.0) {
            return Err(Error::NonConvergence {
                what: "power iteration (degenerate mass)".into(),
                iterations: iteration,
                last_delta: lambda,
            });
        }
        for (xi, &yi) in x.iter_mut().zip(&y) {
            *xi = yi / lambda;
        }
        delta = (lambda - lambda_prev).abs();
        if delta <= POWER_TOL * lambda.abs().max(1.0) {
            return Ok((lambda, x, iteration));
        }
        lambda_prev = lambda;
    }
    Err(Error::NonConvergence {
        what: "power iteration".into(),
        iterations: MAX_POWER_ITERATIONS,
        last_delta: delta,
    })
}

/// Pressure value at one truncation.
#[derive(Debug, Clone)]
pub struct PressureResult {
    /// log spectral radius of the weighted transition matrix.
    pub value: f64,
    /// |b| times the worst within-cylinder range of log|f̃′|; the scale of
    /// the representative-point ambiguity.
    pub distortion_bound: f64,
    pub l: u32,
    pub iterations: usize,
    pub converged: bool,
    /// Σ_{l>L} l^{−2b} e^{−q_min·l}, the neglected letter-sum scale, when
    /// min qᵢ > 0.
    pub tail_estimate: Option<f64>,
}

/// Pressure of the potential on the full truncated system.
pub fn pressure(system: &TransferSystem, params: &PotentialParams) -> Result<PressureResult> {
    let mut warm = None;
    pressure_warm(system, params, WeightMode::RepPoint, &mut warm)
}

/// Pressure with an explicit weight mode and a reusable start vector for
/// the power iteration. Warm starts change the iteration count, not the
/// stopping rule, so values stay within `POWER_TOL` of cold runs.
pub(crate) fn pressure_warm(
    system: &TransferSystem,
    params: &PotentialParams,
    mode: WeightMode,
    warm: &mut Option<Vec<f64>>,
) -> Result<PressureResult> {
    let w = system.weight_matrix(params, mode)?;
    let spectral = spectral_radius(&w, system.size(), false, warm.as_deref())?;
    let result = PressureResult {
        value: spectral.rho.ln(),
        distortion_bound: params.b.abs() * system.max_range,
        l: system.alphabet().l_max(),
        iterations: spectral.iterations,
        converged: true,
        tail_estimate: tail_estimate(system.alphabet().l_max(), params),
    };
    *warm = Some(spectral.right);
    Ok(result)
}

fn tail_estimate(l_max: u32, params: &PotentialParams) -> Option<f64> {
    let q_min = params.q.iter().cloned().fold(f64::INFINITY, f64::min);
    if !(q_min > 0.0) {
        return None;
    }
    let mut acc = 0.0f64;
    for l in (l_max + 1)..(l_max + 1_000_000) {
        let l = f64::from(l);
        let term = (-2.0 * params.b * l.ln() - q_min * l).exp();
        acc += term;
        if term <= acc * 1e-16 {
            break;
        }
    }
    Some(acc)
}

/// Statistics of the Gibbs chain of the weighted matrix: the stationary
/// pair measure of π[a][b] = W[a][b]·v[b] / (ρ·v[a]).
#[derive(Debug, Clone)]
pub struct GibbsStats {
    pub letter_marginal: Vec<f64>,
    /// Row-major pair probabilities; zero at forbidden cells.
    pub pair_measure: Vec<f64>,
    /// ∫Φᵢ dμ, the mean cusp windings.
    pub a_integrals: Vec<f64>,
    /// ∫log|f̃′| dμ > 0.
    pub lyapunov: f64,
    pub entropy: f64,
    pub pressure: f64,
    pub distortion_bound: f64,
    pub iterations: usize,
}

pub fn gibbs_stats(system: &TransferSystem, params: &PotentialParams) -> Result<GibbsStats> {
    let size = system.size();
    let m = params.m();
    let w = system.weight_matrix(params, WeightMode::RepPoint)?;
    let spectral = spectral_radius(&w, size, true, None)?;
    let rho = spectral.rho;
    let v = &spectral.right;
    let u = spectral.left.as_ref().expect("left vector requested");

    let uv: f64 = u.iter().zip(v).map(|(a, b)| a * b).sum();
    let letter_marginal: Vec<f64> = u.iter().zip(v).map(|(a, b)| a * b / uv).collect();

    let mut pair_measure = vec![0.0; size * size];
    let mut a_integrals = vec![0.0; m];
    let mut lyapunov = 0.0;
    let mut entropy = 0.0;
    for i in 0..size {
        let row_w = &w[i * size..(i + 1) * size];
        let row_d = &system.logd[i * size..(i + 1) * size];
        let pair_row = &mut pair_measure[i * size..(i + 1) * size];
        for j in 0..size {
            if row_w[j] == 0.0 {
                continue;
            }
            let pair = u[i] * row_w[j] * v[j] / (rho * uv);
            pair_row[j] = pair;
            let transition = row_w[j] * v[j] / (rho * v[i]);
            lyapunov += pair * row_d[j];
            entropy -= pair * transition.ln();
        }
        for c in 0..m {
            a_integrals[c] += letter_marginal[i] * system.winding[i * m + c];
        }
    }

    Ok(GibbsStats {
        letter_marginal,
        pair_measure,
        a_integrals,
        lyapunov,
        entropy,
        pressure: rho.ln(),
        distortion_bound: params.b.abs() * system.max_range,
        iterations: spectral.iterations,
    })
}

/// Pressure of the restriction to a letter subset.
pub fn pressure_subsystem(
    alphabet: &TruncatedAlphabet,
    subset: &[usize],
    params: &PotentialParams,
) -> Result<PressureResult> {
    // Subsets are small; the sequential path avoids thread-pool overhead.
    let system = TransferSystem::subsystem(
        alphabet.clone(),
        subset,
        Parallelism::Sequential,
        false,
    )?;
    pressure(&system, params)
}

/// Doubles the truncation until successive pressures agree to `tol`.
/// Returns the final result and the truncation it was computed at.
pub fn pressure_doubling(
    presentation: &GroupPresentation,
    params: &PotentialParams,
    l_start: u32,
    tol: f64,
    max_doublings: u32,
    parallelism: Parallelism,
) -> Result<(PressureResult, u32)> {
    let mut l = l_start.max(1);
    let mut prev = pressure(&TransferSystem::build(presentation, l, parallelism)?, params)?;
    for _ in 0..max_doublings {
        let l_next = l * 2;
        let next = pressure(
            &TransferSystem::build(presentation, l_next, parallelism)?,
            params,
        )?;
        if (next.value - prev.value).abs() < tol {
            return Ok((next, l_next));
        }
        l = l_next;
        prev = next;
    }
    Err(Error::NonConvergence {
        what: format!("pressure truncation doubling from L = {l_start}"),
        iterations: max_doublings as usize,
        last_delta: prev.value,
    })
}

fn log_sum_exp(values: &[f64]) -> f64 {
    let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if !max.is_finite() {
        return max;
    }
    max + values.iter().map(|v| (v - max).exp()).sum::<f64>().ln()
}
