//! State representation and direct time evolution of the Hadamard walk on a
//! cycle of `N` sites.
//!
//! The walker carries a two-component chirality (left/right) per site.
//! Amplitudes are stored interleaved as `(L0, R0, L1, R1, ...)` so that the
//! dense evolution matrix built by [`build_unitary`] indexes them directly.

use num_complex::Complex64;
use std::f64::consts::FRAC_1_SQRT_2;

use crate::error::{Error, Result};

/// Smallest supported cycle. For two sites the upper- and lower-diagonal
/// coin blocks of the evolution matrix would collide in the same block
/// position, so the walk is only defined from three sites up.
pub const MIN_SITES: usize = 3;

/// Tolerance accepted when validating the norm of externally supplied states.
pub const NORM_TOL: f64 = 1e-9;

/// Full quantum state of the walker at a given time step.
#[derive(Debug, Clone, PartialEq)]
pub struct WaveState {
    sites: usize,
    amplitudes: Vec<Complex64>,
    time: u64,
}

impl WaveState {
    /// Builds a state from explicit interleaved amplitudes `(L0, R0, L1, R1, ...)`.
    ///
    /// The vector must have length `2 * sites` and unit norm within [`NORM_TOL`].
    pub fn from_amplitudes(sites: usize, amplitudes: Vec<Complex64>) -> Result<Self> {
        if sites < MIN_SITES {
            return Err(Error::TooFewSites(sites));
        }
        if amplitudes.len() != 2 * sites {
            return Err(Error::DimensionMismatch {
                sites,
                len: amplitudes.len(),
            });
        }
        let norm_sqr: f64 = amplitudes.iter().map(|a| a.norm_sqr()).sum();
        if (norm_sqr - 1.0).abs() > NORM_TOL {
            return Err(Error::NotNormalized(norm_sqr));
        }
        Ok(Self {
            sites,
            amplitudes,
            time: 0,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    /// Interleaved amplitudes `(L0, R0, L1, R1, ...)`.
    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amplitudes
    }

    /// Left-chirality amplitude at site `n`.
    pub fn left(&self, n: usize) -> Complex64 {
        self.amplitudes[2 * n]
    }

    /// Right-chirality amplitude at site `n`.
    pub fn right(&self, n: usize) -> Complex64 {
        self.amplitudes[2 * n + 1]
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amplitudes.iter().map(|a| a.norm_sqr()).sum()
    }

    /// Applies one Hadamard step:
    /// `L'(n) = (L(n+1) + R(n+1)) / sqrt(2)`,
    /// `R'(n) = (L(n-1) - R(n-1)) / sqrt(2)`, site indices mod N.
    pub fn step(&self) -> WaveState {
        let n = self.sites;
        let mut next = vec![Complex64::ZERO; 2 * n];
        for site in 0..n {
            let fwd = (site + 1) % n;
            let bwd = (site + n - 1) % n;
            next[2 * site] = (self.left(fwd) + self.right(fwd)) * FRAC_1_SQRT_2;
            next[2 * site + 1] = (self.left(bwd) - self.right(bwd)) * FRAC_1_SQRT_2;
        }
        WaveState {
            sites: n,
            amplitudes: next,
            time: self.time + 1,
        }
    }

    /// Applies `steps` Hadamard steps; `steps = 0` returns the state unchanged.
    pub fn evolve(&self, steps: u64) -> WaveState {
        let mut state = self.clone();
        for _ in 0..steps {
            state = state.step();
        }
        state
    }

    /// Probability of finding the walker at site `n`: `|L(n)|^2 + |R(n)|^2`.
    pub fn site_probability(&self, n: usize) -> Result<f64> {
        if n >= self.sites {
            return Err(Error::SiteOutOfRange {
                site: n,
                sites: self.sites,
            });
        }
        Ok(self.left(n).norm_sqr() + self.right(n).norm_sqr())
    }

    /// Probability of every site, in site order.
    pub fn distribution(&self) -> SiteDistribution {
        let probs = (0..self.sites)
            .map(|n| self.left(n).norm_sqr() + self.right(n).norm_sqr())
            .collect();
        SiteDistribution {
            sites: self.sites,
            probs,
        }
    }
}

/// Initial condition of a walk run.
#[derive(Debug, Clone)]
pub enum StartState {
    /// `L(0) = alpha`, `R(0) = i * sqrt(1 - alpha^2)`, everything else zero.
    /// `alpha = 1` is the canonical start `(1, 0, ..., 0)`.
    Alpha(f64),
    /// An arbitrary normalized state.
    Explicit(WaveState),
}

/// System size plus initial condition.
#[derive(Debug, Clone)]
pub struct WalkConfig {
    sites: usize,
    start: StartState,
}

impl WalkConfig {
    pub fn new(sites: usize, alpha: f64) -> Result<Self> {
        if sites < MIN_SITES {
            return Err(Error::TooFewSites(sites));
        }
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::AlphaOutOfRange(alpha));
        }
        Ok(Self {
            sites,
            start: StartState::Alpha(alpha),
        })
    }

    pub fn with_state(state: WaveState) -> Self {
        Self {
            sites: state.sites(),
            start: StartState::Explicit(state),
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn alpha(&self) -> Option<f64> {
        match self.start {
            StartState::Alpha(a) => Some(a),
            StartState::Explicit(_) => None,
        }
    }

    /// Builds the initial wave state at `time = 0`.
    pub fn initial_state(&self) -> Result<WaveState> {
        match &self.start {
            StartState::Alpha(alpha) => {
                let mut amplitudes = vec![Complex64::ZERO; 2 * self.sites];
                amplitudes[0] = Complex64::new(*alpha, 0.0);
                amplitudes[1] = Complex64::new(0.0, (1.0 - alpha * alpha).max(0.0).sqrt());
                Ok(WaveState {
                    sites: self.sites,
                    amplitudes,
                    time: 0,
                })
            }
            StartState::Explicit(state) => Ok(state.clone()),
        }
    }
}

/// Site probabilities at a fixed time.
#[derive(Debug, Clone, PartialEq)]
pub struct SiteDistribution {
    sites: usize,
    probs: Vec<f64>,
}

impl SiteDistribution {
    pub(crate) fn from_probs(probs: Vec<f64>) -> Self {
        Self {
            sites: probs.len(),
            probs,
        }
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn total(&self) -> f64 {
        self.probs.iter().sum()
    }

    /// `max_n |p(n) - 1/N|`.
    pub fn max_deviation_from_uniform(&self) -> f64 {
        let uniform = 1.0 / self.sites as f64;
        self.probs
            .iter()
            .map(|p| (p - uniform).abs())
            .fold(0.0, f64::max)
    }
}

/// Dense `2N x 2N` one-step evolution matrix, row-major.
///
/// Exists for verification only; production evolution goes through
/// [`WaveState::step`], which is O(N) per step.
#[derive(Debug, Clone)]
pub struct UnitaryMatrix {
    dim: usize,
    data: Vec<Complex64>,
}

impl UnitaryMatrix {
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, row: usize, col: usize) -> Complex64 {
        self.data[row * self.dim + col]
    }

    /// Matrix-vector product.
    pub fn apply(&self, vector: &[Complex64]) -> Vec<Complex64> {
        assert_eq!(vector.len(), self.dim);
        (0..self.dim)
            .map(|r| {
                let row = &self.data[r * self.dim..(r + 1) * self.dim];
                row.iter().zip(vector).map(|(m, v)| m * v).sum()
            })
            .collect()
    }

    /// `max |(M^dagger M - I)[r][c]|` over all entries.
    pub fn unitarity_defect(&self) -> f64 {
        let d = self.dim;
        let mut worst = 0.0f64;
        for r in 0..d {
            for c in 0..d {
                let mut entry = Complex64::ZERO;
                for k in 0..d {
                    entry += self.get(k, r).conj() * self.get(k, c);
                }
                if r == c {
                    entry -= Complex64::ONE;
                }
                worst = worst.max(entry.norm());
            }
        }
        worst
    }
}

/// Builds the block-circulant one-step matrix: coin block
/// `P = [[1, 1], [0, 0]] / sqrt(2)` sits above the block diagonal and
/// `Q = [[0, 0], [1, -1]] / sqrt(2)` below it, cyclically.
pub fn build_unitary(sites: usize) -> Result<UnitaryMatrix> {
    if sites < MIN_SITES {
        return Err(Error::TooFewSites(sites));
    }
    let dim = 2 * sites;
    let mut data = vec![Complex64::ZERO; dim * dim];
    let h = Complex64::new(FRAC_1_SQRT_2, 0.0);
    for site in 0..sites {
        let fwd = (site + 1) % sites;
        let bwd = (site + sites - 1) % sites;
        // L row of block `site`: first row of P in block column `site + 1`.
        data[(2 * site) * dim + 2 * fwd] = h;
        data[(2 * site) * dim + 2 * fwd + 1] = h;
        // R row of block `site`: second row of Q in block column `site - 1`.
        data[(2 * site + 1) * dim + 2 * bwd] = h;
        data[(2 * site + 1) * dim + 2 * bwd + 1] = -h;
    }
    Ok(UnitaryMatrix { dim, data })
}
