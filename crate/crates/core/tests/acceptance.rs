//! Acceptance suite: one test per release criterion, each printing a
//! PASS/FAIL line. Run with `cargo test --test acceptance -- --nocapture`
//! to see the lines; a panicking criterion fails its test.

use std::time::Instant;

use hadamard_cycle::classical::classical_empirical_sigma;
use hadamard_cycle::spectral::{wavefunction_spectral, Spectrum};
use hadamard_cycle::stats::{
    asymptotic_sigma_origin, closed_form_profile, closed_form_sigma, empirical_sigma_profile,
    resonance_sigma, sigma3_alpha, theta_grid, time_averaged_distribution, MeanMode,
    DEFAULT_ANGLE_TOL,
};
use hadamard_cycle::{build_unitary, WalkConfig};

struct Criterion {
    id: u32,
    label: &'static str,
    failures: Vec<String>,
}

impl Criterion {
    fn new(id: u32, label: &'static str) -> Self {
        Self {
            id,
            label,
            failures: Vec::new(),
        }
    }

    fn check(&mut self, ok: bool, detail: &str) {
        if !ok {
            self.failures.push(detail.to_string());
        }
    }

    /// Prints the single PASS/FAIL line for this criterion and panics on FAIL.
    fn finish(self) {
        if self.failures.is_empty() {
            println!("ACCEPTANCE {:2}: PASS - {}", self.id, self.label);
        } else {
            println!(
                "ACCEPTANCE {:2}: FAIL - {} ({}; first: {})",
                self.id,
                self.label,
                self.failures.len(),
                self.failures[0]
            );
            panic!("criterion {} failed: {}", self.id, self.failures.join("; "));
        }
    }
}

fn canonical(sites: usize) -> WalkConfig {
    WalkConfig::new(sites, 1.0).unwrap()
}

#[test]
fn criterion_01_exact_three_site_values() {
    let mut c = Criterion::new(1, "exact N=3 closed-form values in under 1 ms");
    let expected = [
        2.0 * 46f64.sqrt() / 45.0,
        2.0 * 46f64.sqrt() / 45.0,
        2.0 / 9.0,
    ];
    let start = Instant::now();
    let values: Vec<f64> = (0..3).map(|n| closed_form_sigma(3, n).unwrap()).collect();
    let elapsed = start.elapsed();
    let max_err = values
        .iter()
        .zip(&expected)
        .map(|(v, e)| (v - e).abs())
        .fold(0.0, f64::max);
    c.check(
        max_err < 1e-12 && elapsed.as_micros() < 1000,
        &format!("max_err={max_err:.2e} elapsed={elapsed:?}"),
    );
    c.finish();
}

#[test]
fn criterion_02_triple_oracle_agreement() {
    let mut c = Criterion::new(2, "closed form vs resonance vs empirical at N=3,5,7");
    for sites in [3usize, 5, 7] {
        let start = Instant::now();
        let mean = MeanMode::Fixed(1.0 / sites as f64);
        let empirical = empirical_sigma_profile(&canonical(sites), 1_000_000, mean).unwrap();
        let empirical_time = start.elapsed();
        c.check(
            empirical_time.as_secs_f64() < 5.0,
            &format!("N={sites}: empirical took {empirical_time:?}"),
        );
        let start = Instant::now();
        for n in 0..sites {
            let exact = closed_form_sigma(sites, n).unwrap();
            let resonance = resonance_sigma(sites, n, DEFAULT_ANGLE_TOL).unwrap();
            c.check(
                (exact - resonance).abs() < 1e-9,
                &format!("N={sites} n={n}: exact={exact} resonance={resonance}"),
            );
            c.check(
                (exact - empirical.values[n]).abs() < 5e-3,
                &format!("N={sites} n={n}: exact={exact} empirical={}", empirical.values[n]),
            );
        }
        let resonance_time = start.elapsed();
        c.check(
            resonance_time.as_secs_f64() < 10.0,
            &format!("N={sites}: resonance took {resonance_time:?}"),
        );
    }
    c.finish();
}

#[test]
fn criterion_03_symmetry_suite() {
    let mut c = Criterion::new(3, "mirror symmetry and origin-pair maximum, odd N <= 51");
    for sites in (3..=51usize).step_by(2) {
        let values = closed_form_profile(sites).unwrap().values;
        for n in 0..sites {
            let mirror = (sites + 1 - n) % sites;
            c.check(
                (values[n] - values[mirror]).abs() < 1e-12,
                &format!("N={sites}: sigma({n}) != sigma({mirror})"),
            );
        }
        let max = values.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
        c.check(
            (values[0] - max).abs() < 1e-12 && (values[1] - max).abs() < 1e-12,
            &format!("N={sites}: maximum not at sites 0 and 1"),
        );
    }
    c.finish();
}

#[test]
fn criterion_04_asymptotic_law() {
    let mut c = Criterion::new(4, "large-N law: relative error shrinks and is <5% at N=21");
    let rel_error = |sites: usize| {
        let exact = closed_form_sigma(sites, 0).unwrap();
        (exact - asymptotic_sigma_origin(sites).unwrap()).abs() / exact
    };
    let mut last = f64::INFINITY;
    for sites in (5..=21usize).step_by(2) {
        let err = rel_error(sites);
        c.check(err < last, &format!("N={sites}: error {err} not below {last}"));
        last = err;
    }
    c.check(last < 0.05, &format!("N=21: relative error {last}"));
    let err3 = rel_error(3);
    c.check(err3 > 0.05, &format!("N=3: relative error {err3} unexpectedly small"));
    c.finish();
}

#[test]
fn criterion_05_spectral_correctness() {
    let mut c = Criterion::new(5, "eigenpair residuals, unitarity, parity of degeneracy");
    for sites in 3..=41usize {
        let spectrum = Spectrum::compute(sites).unwrap();
        let residual = spectrum.max_residual().unwrap();
        c.check(residual < 1e-10, &format!("N={sites}: residual {residual:.2e}"));
        let defect = build_unitary(sites).unwrap().unitarity_defect();
        c.check(defect < 1e-12, &format!("N={sites}: unitarity defect {defect:.2e}"));
        if sites % 2 == 1 {
            let sep = spectrum.min_pairwise_separation();
            c.check(sep > 0.0, &format!("N={sites}: eigenvalues not distinct"));
        }
    }
    for sites in (4..=12usize).step_by(2) {
        let spectrum = Spectrum::compute(sites).unwrap();
        c.check(
            !spectrum.degenerate_pairs(1e-9).is_empty(),
            &format!("N={sites}: no degeneracy detected"),
        );
    }
    c.finish();
}

#[test]
fn criterion_06_time_average_uniformity() {
    let mut c = Criterion::new(6, "odd-N time average uniform and alpha-independent");
    let alphas = [0.0, 1.0 / 2f64.sqrt(), 1.0];
    for sites in (3..=21usize).step_by(2) {
        for alpha in alphas {
            let config = WalkConfig::new(sites, alpha).unwrap();
            let avg = time_averaged_distribution(&config, 100_000).unwrap();
            let dev = avg.max_deviation_from_uniform();
            c.check(dev < 1e-2, &format!("N={sites} alpha={alpha}: deviation {dev}"));
        }
    }
    c.finish();
}

#[test]
fn criterion_07_alpha_sweep_structure() {
    let mut c = Criterion::new(7, "alpha-sweep structure at N=3 exactly, N=5,7 empirically");
    let grid: Vec<f64> = (0..=10).map(|k| k as f64 / 10.0).collect();
    let origin = sigma3_alpha(0, 0.0).unwrap();
    for &alpha in &grid {
        let v = sigma3_alpha(0, alpha).unwrap();
        c.check((v - origin).abs() < 1e-12, &format!("sigma3(0, {alpha}) varies"));
    }
    let sym = 1.0 / 2f64.sqrt();
    let crossing = (sigma3_alpha(1, sym).unwrap() - sigma3_alpha(2, sym).unwrap()).abs();
    c.check(crossing < 1e-12, &format!("sigma3(1) vs sigma3(2) at 1/sqrt(2): {crossing}"));
    for sites in [5usize, 7] {
        let mean = MeanMode::Fixed(1.0 / sites as f64);
        let origin_values: Vec<f64> = grid
            .iter()
            .map(|&alpha| {
                let config = WalkConfig::new(sites, alpha).unwrap();
                empirical_sigma_profile(&config, 10_000, mean).unwrap().values[0]
            })
            .collect();
        let spread = origin_values.iter().cloned().fold(f64::NEG_INFINITY, f64::max)
            - origin_values.iter().cloned().fold(f64::INFINITY, f64::min);
        c.check(spread < 1e-2, &format!("N={sites}: origin spread {spread}"));
    }
    c.finish();
}

#[test]
fn criterion_08_even_peak_structure() {
    let mut c = Criterion::new(8, "four equal peaks at N=4,8,12 (empirical)");
    for sites in [4usize, 8, 12] {
        let profile =
            empirical_sigma_profile(&canonical(sites), 10_000, MeanMode::SameRun).unwrap();
        let peaks = profile.peak_sites(1e-2);
        c.check(
            peaks.len() == 4,
            &format!("N={sites}: peaks {peaks:?} values {:?}", profile.values),
        );
    }
    c.finish();
}

#[test]
fn criterion_09_classical_contrast() {
    let mut c = Criterion::new(9, "classical sigma decays; quantum plateaus 100x above it");
    for sites in 3..=9usize {
        let mut last = f64::INFINITY;
        for steps in [1_000u64, 10_000, 100_000] {
            let sigma = classical_empirical_sigma(sites, steps, 0).unwrap();
            c.check(sigma < last, &format!("N={sites} T={steps}: {sigma} !< {last}"));
            last = sigma;
        }
    }
    // Site 1: at the origin the classical value is inflated by the
    // deterministic t=0 spike P(0,0)=1, which halves the contrast.
    let mean = MeanMode::Fixed(0.2);
    let quantum5 = empirical_sigma_profile(&canonical(5), 100_000, mean).unwrap().values[1];
    let classical5 = classical_empirical_sigma(5, 100_000, 1).unwrap();
    c.check(
        quantum5 / classical5 > 100.0,
        &format!("ratio {}", quantum5 / classical5),
    );
    let quantum5_long = empirical_sigma_profile(&canonical(5), 1_000_000, mean).unwrap().values[1];
    let drift = (quantum5_long - quantum5).abs() / quantum5;
    c.check(drift < 0.10, &format!("quantum drift between horizons: {drift}"));
    c.finish();
}

#[test]
fn criterion_10_riemann_limits() {
    let mut c = Criterion::new(10, "normalized spectral sums match their integrals at N=101");
    let sites = 101usize;
    let n = sites as f64;
    let mut sums = [0.0f64; 5];
    for j in 0..sites {
        let theta = theta_grid(sites, j);
        let cos = theta.cos();
        let den = 3.0 + cos;
        sums[0] += 1.0 / den;
        sums[1] += cos / den;
        sums[2] += 1.0 / (den * den);
        sums[3] += cos / (den * den);
        sums[4] += (2.0 * theta).cos() / (den * den);
    }
    let sqrt2 = 2f64.sqrt();
    let limits = [
        1.0 / (2.0 * sqrt2),
        1.0 - 3.0 / (2.0 * sqrt2),
        3.0 / (16.0 * sqrt2),
        -1.0 / (16.0 * sqrt2),
        2.0 - 45.0 / (16.0 * sqrt2),
    ];
    for (i, (sum, limit)) in sums.iter().zip(&limits).enumerate() {
        let err = (sum / n - limit).abs();
        c.check(err < 1e-10, &format!("sum {i}: error {err:.2e}"));
    }
    c.finish();
}

#[test]
fn criterion_11_spectral_vs_direct_evolution() {
    let mut c = Criterion::new(11, "spectral reconstruction equals stepping, N=5,7, t<=100");
    for sites in [5usize, 7] {
        let mut state = canonical(sites).initial_state().unwrap();
        for t in 0..=100u64 {
            for n in 0..sites {
                let (l, r) = wavefunction_spectral(sites, n, t).unwrap();
                let diff = (l - state.left(n)).norm().max((r - state.right(n)).norm());
                c.check(diff < 1e-10, &format!("N={sites} n={n} t={t}: diff {diff:.2e}"));
            }
            state = state.step();
        }
    }
    c.finish();
}
