//! Closed-form spectral decomposition of the one-step evolution matrix.
//!
//! Eigenvalues and eigenvectors are known in closed form for every cycle
//! size; the Fourier coefficients of the canonical start `(1, 0, ..., 0)`
//! and the spectral reconstruction of the wave function are only defined
//! for odd cycles, where the spectrum is non-degenerate.

use num_complex::Complex64;
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::walk::{build_unitary, MIN_SITES};

fn check_indices(sites: usize, j: usize, k: usize) -> Result<()> {
    if sites < MIN_SITES {
        return Err(Error::TooFewSites(sites));
    }
    if j >= sites || k > 1 {
        return Err(Error::EigenIndexOutOfRange { sites, j, k });
    }
    Ok(())
}

fn check_odd(sites: usize) -> Result<()> {
    if sites < MIN_SITES {
        return Err(Error::TooFewSites(sites));
    }
    if sites.is_multiple_of(2) {
        return Err(Error::EvenSites(sites));
    }
    Ok(())
}

/// `xi_j = 2 pi j / N`.
pub fn xi(sites: usize, j: usize) -> f64 {
    2.0 * PI * j as f64 / sites as f64
}

/// Eigenvalue `c_jk = [(-1)^k sqrt(1 + cos^2 xi_j) + i sin xi_j] / sqrt(2)`.
pub fn eigenvalue(sites: usize, j: usize, k: usize) -> Result<Complex64> {
    check_indices(sites, j, k)?;
    let xi_j = xi(sites, j);
    let sign = if k == 0 { 1.0 } else { -1.0 };
    let re = sign * (1.0 + xi_j.cos().powi(2)).sqrt();
    let im = xi_j.sin();
    Ok(Complex64::new(re, im) / 2f64.sqrt())
}

/// Scalars entering the eigenvector formula.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EigenvectorParams {
    /// `omega_N = e^{2 i pi / N}`.
    pub omega: Complex64,
    /// `xi_j = 2 pi j / N`.
    pub xi: f64,
    /// `b_jk = omega^j [(-1)^k sqrt(1 + cos^2 xi_j) + cos xi_j]`.
    pub b: Complex64,
    /// Normalization `a_jk = 1 / sqrt(N (1 + |b_jk|^2))`, real and positive.
    pub a: f64,
}

pub fn eigenvector_params(sites: usize, j: usize, k: usize) -> Result<EigenvectorParams> {
    check_indices(sites, j, k)?;
    let xi_j = xi(sites, j);
    let sign = if k == 0 { 1.0 } else { -1.0 };
    let radial = sign * (1.0 + xi_j.cos().powi(2)).sqrt() + xi_j.cos();
    let b = Complex64::from_polar(1.0, xi_j) * radial;
    let a = 1.0 / (sites as f64 * (1.0 + b.norm_sqr())).sqrt();
    Ok(EigenvectorParams {
        omega: Complex64::from_polar(1.0, 2.0 * PI / sites as f64),
        xi: xi_j,
        b,
        a,
    })
}

/// Unit-norm eigenvector of `c_jk` in the interleaved `(L0, R0, ...)` layout.
///
/// The source formula indexes elements 1-based: odd elements (our even
/// positions, the L components) are `a b omega^{j m}` and even elements
/// (our odd positions, the R components) are `a omega^{j m}`, where
/// `m = n + 1` for site `n`.
pub fn eigenvector(sites: usize, j: usize, k: usize) -> Result<Vec<Complex64>> {
    let p = eigenvector_params(sites, j, k)?;
    let mut v = Vec::with_capacity(2 * sites);
    for site in 0..sites {
        let phase = Complex64::from_polar(1.0, p.xi * (site + 1) as f64);
        v.push(p.b * phase * p.a);
        v.push(phase * p.a);
    }
    Ok(v)
}

/// `||M v_jk - c_jk v_jk||_2`, the numerical eigenpair check.
pub fn verify_eigenpair(sites: usize, j: usize, k: usize) -> Result<f64> {
    let c = eigenvalue(sites, j, k)?;
    let v = eigenvector(sites, j, k)?;
    let m = build_unitary(sites)?;
    let mv = m.apply(&v);
    let residual_sqr: f64 = mv
        .iter()
        .zip(&v)
        .map(|(lhs, rhs)| (lhs - c * rhs).norm_sqr())
        .sum();
    Ok(residual_sqr.sqrt())
}

/// The full eigensystem of a cycle of `sites` sites, indexed by `(j, k)`.
#[derive(Debug, Clone)]
pub struct Spectrum {
    sites: usize,
    eigenvalues: Vec<Complex64>,
    thetas: Vec<f64>,
    eigenvectors: Vec<Vec<Complex64>>,
}

impl Spectrum {
    pub fn compute(sites: usize) -> Result<Self> {
        if sites < MIN_SITES {
            return Err(Error::TooFewSites(sites));
        }
        let mut eigenvalues = Vec::with_capacity(2 * sites);
        let mut thetas = Vec::with_capacity(2 * sites);
        let mut eigenvectors = Vec::with_capacity(2 * sites);
        for j in 0..sites {
            for k in 0..2 {
                let c = eigenvalue(sites, j, k)?;
                eigenvalues.push(c);
                thetas.push(c.arg());
                eigenvectors.push(eigenvector(sites, j, k)?);
            }
        }
        Ok(Self {
            sites,
            eigenvalues,
            thetas,
            eigenvectors,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn eigenvalue(&self, j: usize, k: usize) -> Complex64 {
        self.eigenvalues[2 * j + k]
    }

    /// Argument of `c_jk` in `(-pi, pi]`.
    pub fn theta(&self, j: usize, k: usize) -> f64 {
        self.thetas[2 * j + k]
    }

    pub fn eigenvector(&self, j: usize, k: usize) -> &[Complex64] {
        &self.eigenvectors[2 * j + k]
    }

    pub fn eigenvalues(&self) -> &[Complex64] {
        &self.eigenvalues
    }

    /// Smallest distance between two distinct-index eigenvalues.
    pub fn min_pairwise_separation(&self) -> f64 {
        let mut min = f64::INFINITY;
        for (i, a) in self.eigenvalues.iter().enumerate() {
            for b in &self.eigenvalues[i + 1..] {
                min = min.min((a - b).norm());
            }
        }
        min
    }

    /// Index pairs whose eigenvalues coincide within `tol`.
    pub fn degenerate_pairs(&self, tol: f64) -> Vec<((usize, usize), (usize, usize))> {
        let mut pairs = Vec::new();
        for i in 0..self.eigenvalues.len() {
            for l in i + 1..self.eigenvalues.len() {
                if (self.eigenvalues[i] - self.eigenvalues[l]).norm() < tol {
                    pairs.push((
                        (i / 2, i % 2),
                        (l / 2, l % 2),
                    ));
                }
            }
        }
        pairs
    }

    /// Largest eigenpair residual `||M v - c v||_2` over all `(j, k)`.
    pub fn max_residual(&self) -> Result<f64> {
        let m = build_unitary(self.sites)?;
        let mut worst = 0.0f64;
        for idx in 0..self.eigenvalues.len() {
            let c = self.eigenvalues[idx];
            let v = &self.eigenvectors[idx];
            let mv = m.apply(v);
            let r: f64 = mv
                .iter()
                .zip(v)
                .map(|(lhs, rhs)| (lhs - c * rhs).norm_sqr())
                .sum();
            worst = worst.max(r.sqrt());
        }
        Ok(worst)
    }
}

/// Fourier coefficients of the canonical start `(1, 0, ..., 0)` at a fixed
/// site, indexed by `(j, k)` as `2j + k`. Odd cycles only.
#[derive(Debug, Clone)]
pub struct FourierCoeffs {
    sites: usize,
    site: usize,
    alphas: Vec<Complex64>,
    betas: Vec<Complex64>,
}

impl FourierCoeffs {
    pub fn compute(sites: usize, site: usize) -> Result<Self> {
        check_odd(sites)?;
        if site >= sites {
            return Err(Error::SiteOutOfRange { site, sites });
        }
        let mut alphas = Vec::with_capacity(2 * sites);
        let mut betas = Vec::with_capacity(2 * sites);
        for j in 0..sites {
            for k in 0..2 {
                let (a, b) = fourier_coefficients(sites, site, j, k)?;
                alphas.push(a);
                betas.push(b);
            }
        }
        Ok(Self {
            sites,
            site,
            alphas,
            betas,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn site(&self) -> usize {
        self.site
    }

    pub fn alpha(&self, j: usize, k: usize) -> Complex64 {
        self.alphas[2 * j + k]
    }

    pub fn beta(&self, j: usize, k: usize) -> Complex64 {
        self.betas[2 * j + k]
    }

    /// `sum_{j,k} |alpha_jk|^2 + |beta_jk|^2`; equals `1/N` for every site.
    pub fn sum_sqr(&self) -> f64 {
        self.alphas
            .iter()
            .chain(&self.betas)
            .map(|c| c.norm_sqr())
            .sum()
    }
}

/// `(alpha_jk, beta_jk)` for the canonical start, at site `n`:
///
/// `alpha_jk = e^{2 n j pi i / N} / (2N) * [1 + (-1)^k cos xi_j / sqrt(1 + cos^2 xi_j)]`
/// `beta_jk  = (-1)^k e^{2 (n-1) j pi i / N} / (2N sqrt(1 + cos^2 xi_j))`
pub fn fourier_coefficients(
    sites: usize,
    site: usize,
    j: usize,
    k: usize,
) -> Result<(Complex64, Complex64)> {
    check_odd(sites)?;
    check_indices(sites, j, k)?;
    if site >= sites {
        return Err(Error::SiteOutOfRange { site, sites });
    }
    let n_f = sites as f64;
    let xi_j = xi(sites, j);
    let root = (1.0 + xi_j.cos().powi(2)).sqrt();
    let sign = if k == 0 { 1.0 } else { -1.0 };
    let alpha = Complex64::from_polar(1.0, xi_j * site as f64)
        * ((1.0 + sign * xi_j.cos() / root) / (2.0 * n_f));
    let beta = Complex64::from_polar(1.0, xi_j * (site as f64 - 1.0))
        * (sign / (2.0 * n_f * root));
    Ok((alpha, beta))
}

/// Spectral reconstruction of the wave function at `(site, t)` for the
/// canonical start on an odd cycle:
/// `L = sum_{j,k} alpha_jk c_jk^t`, `R = sum_{j,k} beta_jk c_jk^t`.
pub fn wavefunction_spectral(sites: usize, site: usize, t: u64) -> Result<(Complex64, Complex64)> {
    let coeffs = FourierCoeffs::compute(sites, site)?;
    let mut l = Complex64::ZERO;
    let mut r = Complex64::ZERO;
    for j in 0..sites {
        for k in 0..2 {
            let theta = eigenvalue(sites, j, k)?.arg();
            let phase = Complex64::from_polar(1.0, theta * t as f64);
            l += coeffs.alpha(j, k) * phase;
            r += coeffs.beta(j, k) * phase;
        }
    }
    Ok((l, r))
}
