//! Exact distribution evolution of the classical symmetric random walk on
//! the cycle. Serves as the contrast case: its temporal standard deviation
//! vanishes, while the quantum walk's does not.

use crate::error::{Error, Result};
use crate::stats::MeanMode;
use crate::walk::MIN_SITES;

/// Exact occupation distribution of the classical walker at time `t`.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassicalChain {
    sites: usize,
    dist: Vec<f64>,
    time: u64,
}

impl ClassicalChain {
    /// Walker concentrated at the origin.
    pub fn delta_origin(sites: usize) -> Result<Self> {
        if sites < MIN_SITES {
            return Err(Error::TooFewSites(sites));
        }
        let mut dist = vec![0.0; sites];
        dist[0] = 1.0;
        Ok(Self {
            sites,
            dist,
            time: 0,
        })
    }

    pub fn sites(&self) -> usize {
        self.sites
    }

    pub fn time(&self) -> u64 {
        self.time
    }

    pub fn dist(&self) -> &[f64] {
        &self.dist
    }

    /// One step of the symmetric walk: each neighbor contributes half its mass.
    pub fn step(&self) -> ClassicalChain {
        let n = self.sites;
        let dist = (0..n)
            .map(|site| {
                let prev = self.dist[(site + n - 1) % n];
                let next = self.dist[(site + 1) % n];
                0.5 * (prev + next)
            })
            .collect();
        ClassicalChain {
            sites: n,
            dist,
            time: self.time + 1,
        }
    }

    pub fn total_mass(&self) -> f64 {
        self.dist.iter().sum()
    }
}

/// Finite-horizon temporal standard deviation of the classical occupation
/// probability at every site, starting from the origin. Odd cycles compare
/// against the exact limiting mean `1/N`; even cycles (periodic chains) use
/// the same-run mean.
pub fn classical_sigma_profile(sites: usize, steps: u64) -> Result<Vec<f64>> {
    assert!(steps >= 1, "averaging horizon must be positive");
    let mean = if sites % 2 == 1 {
        MeanMode::Fixed(1.0 / sites as f64)
    } else {
        MeanMode::SameRun
    };
    let mut chain = ClassicalChain::delta_origin(sites)?;
    let mut sum_p = vec![0.0f64; sites];
    let mut sum_p2 = vec![0.0f64; sites];
    for _ in 0..steps {
        for n in 0..sites {
            let p = chain.dist[n];
            sum_p[n] += p;
            sum_p2[n] += p * p;
        }
        chain = chain.step();
    }
    let t = steps as f64;
    Ok((0..sites)
        .map(|n| {
            let m1 = sum_p[n] / t;
            let m2 = sum_p2[n] / t;
            let var = match mean {
                MeanMode::SameRun => m2 - m1 * m1,
                MeanMode::Fixed(m) => m2 - 2.0 * m * m1 + m * m,
            };
            var.max(0.0).sqrt()
        })
        .collect())
}

/// Single-site convenience wrapper around [`classical_sigma_profile`].
pub fn classical_empirical_sigma(sites: usize, steps: u64, site: usize) -> Result<f64> {
    if site >= sites {
        return Err(Error::SiteOutOfRange { site, sites });
    }
    Ok(classical_sigma_profile(sites, steps)?[site])
}

#[cfg(test)]
mod tests {
    use super::*;

    const EPS: f64 = 1e-12;

    #[test]
    fn single_step_splits_mass() {
        let chain = ClassicalChain::delta_origin(3).unwrap().step();
        assert!(chain.dist()[0].abs() < EPS);
        assert!((chain.dist()[1] - 0.5).abs() < EPS);
        assert!((chain.dist()[2] - 0.5).abs() < EPS);
        assert_eq!(chain.time(), 1);
    }

    #[test]
    fn uniform_is_stationary() {
        let uniform = ClassicalChain {
            sites: 5,
            dist: vec![0.2; 5],
            time: 0,
        };
        let next = uniform.step();
        for p in next.dist() {
            assert!((p - 0.2).abs() < EPS);
        }
    }

    #[test]
    fn mass_conserved_over_long_runs() {
        let mut chain = ClassicalChain::delta_origin(7).unwrap();
        for _ in 0..100_000 {
            chain = chain.step();
        }
        assert!((chain.total_mass() - 1.0).abs() < 1e-10);
    }

    #[test]
    fn sigma_decays_with_horizon() {
        let short = classical_empirical_sigma(5, 100, 0).unwrap();
        let long = classical_empirical_sigma(5, 10_000, 0).unwrap();
        assert!(long < short);
    }

    #[test]
    fn sigma_decay_on_decade_schedule() {
        for sites in [4usize, 5, 8, 9] {
            let mut last = f64::INFINITY;
            for steps in [1_000u64, 10_000, 100_000] {
                let sigma = classical_empirical_sigma(sites, steps, 0).unwrap();
                assert!(sigma <= last, "N={sites} T={steps}: {sigma} > {last}");
                last = sigma;
            }
        }
    }

    #[test]
    fn odd_cycle_mixes_geometrically() {
        // Log-linear fit of sup-norm distance to uniform over t in [10, 200]
        // must have negative slope.
        for sites in (3..=15).step_by(2) {
            let uniform = 1.0 / sites as f64;
            let mut chain = ClassicalChain::delta_origin(sites).unwrap();
            let mut points = Vec::new();
            for t in 0..=200u64 {
                if t >= 10 {
                    let sup = chain
                        .dist()
                        .iter()
                        .map(|p| (p - uniform).abs())
                        .fold(0.0, f64::max);
                    if sup > 0.0 {
                        points.push((t as f64, sup.ln()));
                    }
                }
                chain = chain.step();
            }
            let n = points.len() as f64;
            let mean_x: f64 = points.iter().map(|(x, _)| x).sum::<f64>() / n;
            let mean_y: f64 = points.iter().map(|(_, y)| y).sum::<f64>() / n;
            let slope: f64 = points
                .iter()
                .map(|(x, y)| (x - mean_x) * (y - mean_y))
                .sum::<f64>()
                / points.iter().map(|(x, _)| (x - mean_x).powi(2)).sum::<f64>();
            assert!(slope < 0.0, "N={sites}: slope {slope}");
        }
    }

    #[test]
    fn sigma_bounded_by_inverse_sqrt_horizon() {
        let steps = 10_000u64;
        let sigma = classical_empirical_sigma(5, steps, 0).unwrap();
        assert!(sigma < 10.0 / (steps as f64).sqrt());
    }
}
