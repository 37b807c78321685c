//! Temporal fluctuation statistics of the walk: finite-horizon averages from
//! direct simulation, the closed-form standard deviation for odd cycles, its
//! large-N asymptote, the explicit three-site formulas, and an independent
//! resonance-enumeration route over eigenvalue phases.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::spectral::{FourierCoeffs, Spectrum};
use crate::walk::{SiteDistribution, WalkConfig, MIN_SITES};

/// Horizon used by the paper-style experiments when none is given.
pub const DEFAULT_STEPS: u64 = 10_000;

/// Default phase tolerance for resonance detection. The smallest nonzero
/// reduced phase combination on odd cycles up to 15 sites is larger than
/// 1e-3, so this separates resonances from near-misses with wide margin.
pub const DEFAULT_ANGLE_TOL: f64 = 1e-9;

/// Negative-variance slack attributed to floating-point cancellation.
const RADICAND_TOL: f64 = 1e-12;

fn check_odd(sites: usize) -> Result<()> {
    if sites < MIN_SITES {
        return Err(Error::TooFewSites(sites));
    }
    if sites.is_multiple_of(2) {
        return Err(Error::EvenSites(sites));
    }
    Ok(())
}

fn check_site(sites: usize, site: usize) -> Result<()> {
    if site >= sites {
        return Err(Error::SiteOutOfRange { site, sites });
    }
    Ok(())
}

fn sqrt_clamped(radicand: f64) -> Result<f64> {
    if radicand < -RADICAND_TOL {
        return Err(Error::NegativeVariance(radicand));
    }
    Ok(radicand.max(0.0).sqrt())
}

/// Which mean enters the squared deviation of a finite-horizon run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanMode {
    /// Mean of the same finite run. Works for any cycle and start.
    SameRun,
    /// A fixed mean, e.g. the exact limiting value `1/N` on odd cycles.
    Fixed(f64),
}

/// How a set of standard-deviation values was obtained.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SigmaMethod {
    Exact,
    Empirical,
    Resonance,
    Asymptotic,
    Sigma3Alpha,
}

impl std::fmt::Display for SigmaMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            SigmaMethod::Exact => "exact",
            SigmaMethod::Empirical => "empirical",
            SigmaMethod::Resonance => "resonance",
            SigmaMethod::Asymptotic => "asymptotic",
            SigmaMethod::Sigma3Alpha => "sigma3-alpha",
        };
        f.write_str(s)
    }
}

/// Per-site temporal standard deviations for one cycle size.
#[derive(Debug, Clone)]
pub struct SigmaProfile {
    pub sites: usize,
    pub method: SigmaMethod,
    pub alpha: Option<f64>,
    pub steps: Option<u64>,
    pub values: Vec<f64>,
}

impl SigmaProfile {
    /// Sites attaining the maximum within `tol` of it.
    pub fn peak_sites(&self, tol: f64) -> Vec<usize> {
        let max = self.values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        self.values
            .iter()
            .enumerate()
            .filter(|(_, v)| max - **v < tol)
            .map(|(n, _)| n)
            .collect()
    }
}

/// Finite-horizon time average `(1/T) sum_{t=0}^{T-1} P(n, t)` for all sites.
pub fn time_averaged_distribution(config: &WalkConfig, steps: u64) -> Result<SiteDistribution> {
    assert!(steps >= 1, "averaging horizon must be positive");
    let sites = config.sites();
    let mut sums = vec![0.0f64; sites];
    let mut state = config.initial_state()?;
    for _ in 0..steps {
        for (sum, p) in sums.iter_mut().zip(state.distribution().probs()) {
            *sum += p;
        }
        state = state.step();
    }
    let t = steps as f64;
    Ok(SiteDistribution::from_probs(
        sums.into_iter().map(|s| s / t).collect(),
    ))
}

/// Finite-horizon temporal standard deviation at every site, from a single
/// trajectory. Accumulates first and second moments of `P(n, t)` per site,
/// so one pass serves all sites and both mean modes.
pub fn empirical_sigma_profile(
    config: &WalkConfig,
    steps: u64,
    mean: MeanMode,
) -> Result<SigmaProfile> {
    assert!(steps >= 1, "averaging horizon must be positive");
    let sites = config.sites();
    let mut sum_p = vec![0.0f64; sites];
    let mut sum_p2 = vec![0.0f64; sites];
    let mut state = config.initial_state()?;
    for _ in 0..steps {
        for n in 0..sites {
            let p = state.left(n).norm_sqr() + state.right(n).norm_sqr();
            sum_p[n] += p;
            sum_p2[n] += p * p;
        }
        state = state.step();
    }
    let t = steps as f64;
    let values = (0..sites)
        .map(|n| {
            let m1 = sum_p[n] / t;
            let m2 = sum_p2[n] / t;
            let var = match mean {
                MeanMode::SameRun => m2 - m1 * m1,
                MeanMode::Fixed(mean) => m2 - 2.0 * mean * m1 + mean * mean,
            };
            var.max(0.0).sqrt()
        })
        .collect();
    Ok(SigmaProfile {
        sites,
        method: SigmaMethod::Empirical,
        alpha: config.alpha(),
        steps: Some(steps),
        values,
    })
}

/// Finite-horizon temporal standard deviation at one site, around the
/// same-run mean.
pub fn empirical_sigma(config: &WalkConfig, steps: u64, site: usize) -> Result<f64> {
    check_site(config.sites(), site)?;
    Ok(empirical_sigma_profile(config, steps, MeanMode::SameRun)?.values[site])
}

/// The five trigonometric sums over the grid `theta_j = 4 pi j / N` that
/// assemble the closed-form variance. `s2` starts its sum at `j = 1`; the
/// others start at `j = 0`. The denominator `3 + cos theta_j` never drops
/// below 2, so no term is singular.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TrigSums {
    pub s0: f64,
    pub s1: f64,
    pub s_plus: f64,
    pub s_minus: f64,
    pub s2: f64,
}

/// `theta_j = 4 pi j / N` (distinct from the eigenvector phase `2 pi j / N`).
pub fn theta_grid(sites: usize, j: usize) -> f64 {
    4.0 * PI * j as f64 / sites as f64
}

pub fn trig_sums(sites: usize, site: usize) -> Result<TrigSums> {
    check_odd(sites)?;
    check_site(sites, site)?;
    let n_f = site as f64;
    let mut sums = TrigSums {
        s0: 0.0,
        s1: 0.0,
        s_plus: 0.0,
        s_minus: 0.0,
        s2: 0.0,
    };
    for j in 0..sites {
        let theta = theta_grid(sites, j);
        let c = theta.cos();
        let den = 3.0 + c;
        sums.s0 += 1.0 / den;
        sums.s1 += c / den;
        let prev = ((n_f - 1.0) * theta).cos();
        let curr = (n_f * theta).cos();
        sums.s_plus += (prev + curr) / den;
        sums.s_minus += (prev - curr) / den;
        if j >= 1 {
            let half = ((n_f - 0.5) * theta).cos();
            sums.s2 += (7.0 + (2.0 * theta).cos() + 8.0 * c * half * half) / (den * den);
        }
    }
    Ok(sums)
}

/// Closed-form temporal standard deviation on an odd cycle with the
/// canonical start:
/// `sigma^2 = [2(S+^2 + S-^2) + 11 S0^2 + 10 S0 S1 + 3 S1^2 - S2] / N^4 - 2 / N^3`.
pub fn closed_form_sigma(sites: usize, site: usize) -> Result<f64> {
    let s = trig_sums(sites, site)?;
    let n = sites as f64;
    let bracket = 2.0 * (s.s_plus * s.s_plus + s.s_minus * s.s_minus)
        + 11.0 * s.s0 * s.s0
        + 10.0 * s.s0 * s.s1
        + 3.0 * s.s1 * s.s1
        - s.s2;
    sqrt_clamped(bracket / n.powi(4) - 2.0 / n.powi(3))
}

/// Closed-form values for every site of an odd cycle.
pub fn closed_form_profile(sites: usize) -> Result<SigmaProfile> {
    check_odd(sites)?;
    let values = (0..sites)
        .map(|n| closed_form_sigma(sites, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(SigmaProfile {
        sites,
        method: SigmaMethod::Exact,
        alpha: Some(1.0),
        steps: None,
        values,
    })
}

/// Standard deviation at the origin through the specialized single-sum form.
/// Algebraically identical to [`closed_form_sigma`] at site 0; kept as an
/// independent route for cross-checking.
pub fn sigma_origin(sites: usize) -> Result<f64> {
    check_odd(sites)?;
    let n = sites as f64;
    let mut sum_cos = 0.0;
    let mut sum_s0 = 0.0;
    let mut sum_a = 0.0;
    let mut sum_b = 0.0;
    for j in 0..sites {
        let theta = theta_grid(sites, j);
        let c = theta.cos();
        let den = 3.0 + c;
        sum_cos += 7.0 * c / den;
        sum_s0 += 1.0 / den;
        sum_a += (15.0 - 11.0 * c) / den;
        if j >= 1 {
            sum_b += (9.0 + 4.0 * c + 3.0 * (2.0 * theta).cos()) / (den * den);
        }
    }
    let variance = (sum_cos - 2.0) / n.powi(3) + (sum_s0 * sum_a - sum_b) / n.powi(4);
    sqrt_clamped(variance)
}

/// Constant in the leading term of the large-N law, `13 - 8 sqrt(2)`.
pub fn asymptotic_leading_constant() -> f64 {
    13.0 - 8.0 * 2f64.sqrt()
}

/// Large-N approximation of the origin value:
/// `sigma^2 ~ (13 - 8 sqrt(2)) / N^2 + (7 sqrt(2) - 16) / (2 N^3)`.
pub fn asymptotic_sigma_origin(sites: usize) -> Result<f64> {
    check_odd(sites)?;
    let n = sites as f64;
    let radicand =
        asymptotic_leading_constant() / (n * n) + (7.0 * 2f64.sqrt() - 16.0) / (2.0 * n.powi(3));
    if radicand < 0.0 {
        return Err(Error::NegativeVariance(radicand));
    }
    Ok(radicand.sqrt())
}

/// Explicit three-site values as a function of the start parameter:
/// site 0 is alpha-independent at `2 sqrt(46) / 45`; sites 1 and 2 carry
/// quartic polynomials in alpha under the root.
pub fn sigma3_alpha(site: usize, alpha: f64) -> Result<f64> {
    if !(0.0..=1.0).contains(&alpha) {
        return Err(Error::AlphaOutOfRange(alpha));
    }
    check_site(3, site)?;
    let a2 = alpha * alpha;
    let a4 = a2 * a2;
    let value = match site {
        0 => 2.0 * 46f64.sqrt() / 45.0,
        1 => 2.0 / 45.0 * (96.0 * a4 - 75.0 * a2 + 25.0).sqrt(),
        _ => 2.0 / 45.0 * (96.0 * a4 - 117.0 * a2 + 46.0).sqrt(),
    };
    Ok(value)
}

/// One surviving term of the resonance enumeration.
#[derive(Debug, Clone, PartialEq)]
pub struct ResonanceTerm {
    /// `(j, k)` index pairs in sum order.
    pub indices: [(usize, usize); 4],
    /// `theta_0 - theta_1 + theta_2 - theta_3` reduced into `(-pi, pi]`.
    pub delta_theta: f64,
    /// `(a0 a1* + b0 b1*)(a2 a3* + b2 b3*)` over the Fourier coefficients.
    pub weight: Complex64,
}

/// Reduces an angle into `(-pi, pi]`.
pub fn wrap_angle(x: f64) -> f64 {
    let y = x.rem_euclid(2.0 * PI);
    if y > PI {
        y - 2.0 * PI
    } else {
        y
    }
}

fn resonance_inputs(sites: usize, site: usize) -> Result<(Spectrum, FourierCoeffs)> {
    check_odd(sites)?;
    if sites > 15 {
        return Err(Error::ResonanceTooLarge(sites));
    }
    let spectrum = Spectrum::compute(sites)?;
    let coeffs = FourierCoeffs::compute(sites, site)?;
    Ok((spectrum, coeffs))
}

/// Enumerates every index tuple whose phase combination vanishes mod 2 pi
/// within `angle_tol`, skipping the diagonal pairs that belong to the
/// constant part of the probability.
pub fn resonance_terms(
    sites: usize,
    site: usize,
    angle_tol: f64,
) -> Result<Vec<ResonanceTerm>> {
    let (spectrum, coeffs) = resonance_inputs(sites, site)?;
    let dim = 2 * sites;
    let theta: Vec<f64> = (0..dim).map(|i| spectrum.theta(i / 2, i % 2)).collect();
    let pair_weight = |a: usize, b: usize| {
        coeffs.alpha(a / 2, a % 2) * coeffs.alpha(b / 2, b % 2).conj()
            + coeffs.beta(a / 2, a % 2) * coeffs.beta(b / 2, b % 2).conj()
    };
    let mut terms = Vec::new();
    for i0 in 0..dim {
        for i1 in 0..dim {
            if i0 == i1 {
                continue;
            }
            let w01 = pair_weight(i0, i1);
            let d01 = theta[i0] - theta[i1];
            for i2 in 0..dim {
                for i3 in 0..dim {
                    if i2 == i3 {
                        continue;
                    }
                    let delta = wrap_angle(d01 + theta[i2] - theta[i3]);
                    if delta.abs() < angle_tol {
                        terms.push(ResonanceTerm {
                            indices: [
                                (i0 / 2, i0 % 2),
                                (i1 / 2, i1 % 2),
                                (i2 / 2, i2 % 2),
                                (i3 / 2, i3 % 2),
                            ],
                            delta_theta: delta,
                            weight: w01 * pair_weight(i2, i3),
                        });
                    }
                }
            }
        }
    }
    Ok(terms)
}

/// Temporal standard deviation obtained by summing the weights of all
/// resonant tuples. Independent route to the same quantity as
/// [`closed_form_sigma`]; limited to small odd cycles because the
/// enumeration visits `(2N)^4` tuples.
pub fn resonance_sigma(sites: usize, site: usize, angle_tol: f64) -> Result<f64> {
    let terms = resonance_terms(sites, site, angle_tol)?;
    let total: Complex64 = terms.iter().map(|t| t.weight).sum();
    debug_assert!(total.im.abs() < 1e-10, "variance has imaginary part {}", total.im);
    sqrt_clamped(total.re)
}
