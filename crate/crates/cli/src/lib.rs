//! Command-line front end emitting the data behind the walk's probability
//! distributions, fluctuation profiles, spectra and classical contrast runs.

pub mod output;

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

use hadamard_cycle::classical::classical_sigma_profile;
use hadamard_cycle::spectral::Spectrum;
use hadamard_cycle::stats::{
    asymptotic_sigma_origin, closed_form_profile, closed_form_sigma, empirical_sigma_profile,
    resonance_sigma, sigma3_alpha, MeanMode, DEFAULT_ANGLE_TOL, DEFAULT_STEPS,
};
use hadamard_cycle::WalkConfig;
use output::{Format, Table};

#[derive(Debug, Parser)]
#[command(
    name = "hadamard-cycle",
    about = "Hadamard walk on a cycle: simulation, spectra and temporal fluctuation statistics",
    version
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    /// Closed-form expression (odd cycles, canonical start only).
    Exact,
    /// Finite-horizon average over a simulated trajectory.
    Empirical,
    /// Resonant-phase enumeration (odd cycles up to 15 sites).
    Resonance,
}

impl Method {
    fn label(self) -> &'static str {
        match self {
            Method::Exact => "exact",
            Method::Empirical => "empirical",
            Method::Resonance => "resonance",
        }
    }
}

#[derive(Debug, Args)]
pub struct OutputOpts {
    /// Output file; standard output when omitted.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    pub format: Format,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Per-step site distributions, columns `t,n,prob`.
    Simulate {
        #[arg(long)]
        sites: usize,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: u64,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Temporal standard deviation per site, columns `N,n,method,alpha,T,sigma`.
    Sigma {
        #[arg(long)]
        sites: usize,
        /// Restrict the output to one site.
        #[arg(long)]
        site: Option<usize>,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: u64,
        #[arg(long, value_enum, default_value_t = Method::Exact)]
        method: Method,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Start-parameter sweep, columns `N,n,alpha,sigma`. Three-site cycles
    /// use the explicit formulas; larger cycles are simulated.
    SweepAlpha {
        #[arg(long)]
        sites: usize,
        #[arg(long)]
        site: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_STEPS)]
        steps: u64,
        /// Number of grid points over [0, 1].
        #[arg(long, default_value_t = 41)]
        points: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Eigenvalues of the one-step matrix, columns `j,k,re,im,theta`.
    Spectrum {
        #[arg(long)]
        sites: usize,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Exact vs asymptotic origin fluctuation over a list of odd sizes,
    /// columns `N,sigma_exact,sigma_asymptotic,rel_error`.
    Asymptote {
        #[arg(long, value_delimiter = ',', default_value = "3,5,7,9,11,13,15,17,19,21")]
        sites: Vec<usize>,
        #[command(flatten)]
        output: OutputOpts,
    },
    /// Classical vs quantum fluctuation decay at one site over decade
    /// horizons, columns `N,n,T,sigma_classical,sigma_quantum`.
    Classical {
        #[arg(long)]
        sites: usize,
        #[arg(long, default_value_t = 0)]
        site: usize,
        #[arg(long, default_value_t = 100_000)]
        steps: u64,
        #[arg(long, default_value_t = 1.0)]
        alpha: f64,
        #[command(flatten)]
        output: OutputOpts,
    },
}

impl Command {
    fn output(&self) -> &OutputOpts {
        match self {
            Command::Simulate { output, .. }
            | Command::Sigma { output, .. }
            | Command::SweepAlpha { output, .. }
            | Command::Spectrum { output, .. }
            | Command::Asymptote { output, .. }
            | Command::Classical { output, .. } => output,
        }
    }
}

/// Mean used by finite-horizon sigma estimates: the exact limiting value
/// `1/N` on odd cycles, the same-run mean on even ones.
fn mean_mode(sites: usize) -> MeanMode {
    if sites % 2 == 1 {
        MeanMode::Fixed(1.0 / sites as f64)
    } else {
        MeanMode::SameRun
    }
}

fn site_filter(sites: usize, site: Option<usize>) -> Result<Vec<usize>> {
    match site {
        Some(n) if n >= sites => bail!("site index {n} out of range for {sites} sites"),
        Some(n) => Ok(vec![n]),
        None => Ok((0..sites).collect()),
    }
}

pub fn build_table(command: &Command) -> Result<Table> {
    match command {
        Command::Simulate {
            sites,
            alpha,
            steps,
            ..
        } => simulate(*sites, *alpha, *steps),
        Command::Sigma {
            sites,
            site,
            alpha,
            steps,
            method,
            ..
        } => sigma(*sites, *site, *alpha, *steps, *method),
        Command::SweepAlpha {
            sites,
            site,
            steps,
            points,
            ..
        } => sweep_alpha(*sites, *site, *steps, *points),
        Command::Spectrum { sites, .. } => spectrum(*sites),
        Command::Asymptote { sites, .. } => asymptote(sites),
        Command::Classical {
            sites,
            site,
            steps,
            alpha,
            ..
        } => classical(*sites, *site, *steps, *alpha),
    }
}

fn simulate(sites: usize, alpha: f64, steps: u64) -> Result<Table> {
    let config = WalkConfig::new(sites, alpha)?;
    let mut table = Table::new(vec!["t", "n", "prob"]);
    let mut state = config.initial_state()?;
    for t in 0..=steps {
        for (n, prob) in state.distribution().probs().iter().enumerate() {
            table.push_row(vec![t.into(), n.into(), (*prob).into()]);
        }
        state = state.step();
    }
    Ok(table)
}

fn sigma(
    sites: usize,
    site: Option<usize>,
    alpha: f64,
    steps: u64,
    method: Method,
) -> Result<Table> {
    if method != Method::Empirical && alpha != 1.0 {
        bail!("method `{}` is only defined for the canonical start --alpha 1", method.label());
    }
    let (values, reported_steps) = match method {
        Method::Exact => (closed_form_profile(sites)?.values, 0),
        Method::Empirical => {
            let config = WalkConfig::new(sites, alpha)?;
            (
                empirical_sigma_profile(&config, steps, mean_mode(sites))?.values,
                steps,
            )
        }
        Method::Resonance => (
            (0..sites)
                .map(|n| resonance_sigma(sites, n, DEFAULT_ANGLE_TOL))
                .collect::<hadamard_cycle::Result<Vec<_>>>()?,
            0,
        ),
    };
    let mut table = Table::new(vec!["N", "n", "method", "alpha", "T", "sigma"]);
    for n in site_filter(sites, site)? {
        table.push_row(vec![
            sites.into(),
            n.into(),
            method.label().into(),
            alpha.into(),
            reported_steps.into(),
            values[n].into(),
        ]);
    }
    Ok(table)
}

fn sweep_alpha(sites: usize, site: Option<usize>, steps: u64, points: usize) -> Result<Table> {
    if points < 2 {
        bail!("--points must be at least 2, got {points}");
    }
    let selected = site_filter(sites, site)?;
    let mut table = Table::new(vec!["N", "n", "alpha", "sigma"]);
    for k in 0..points {
        let alpha = k as f64 / (points - 1) as f64;
        let values: Vec<f64> = if sites == 3 {
            (0..3)
                .map(|n| sigma3_alpha(n, alpha))
                .collect::<hadamard_cycle::Result<_>>()?
        } else {
            let config = WalkConfig::new(sites, alpha)?;
            empirical_sigma_profile(&config, steps, mean_mode(sites))?.values
        };
        for &n in &selected {
            table.push_row(vec![sites.into(), n.into(), alpha.into(), values[n].into()]);
        }
    }
    Ok(table)
}

fn spectrum(sites: usize) -> Result<Table> {
    let spectrum = Spectrum::compute(sites)?;
    let mut table = Table::new(vec!["j", "k", "re", "im", "theta"]);
    for j in 0..sites {
        for k in 0..2 {
            let c = spectrum.eigenvalue(j, k);
            table.push_row(vec![
                j.into(),
                k.into(),
                c.re.into(),
                c.im.into(),
                spectrum.theta(j, k).into(),
            ]);
        }
    }
    table.push_comment(format!(
        "max_eigenpair_residual = {:e}",
        spectrum.max_residual()?
    ));
    let degenerate = spectrum.degenerate_pairs(1e-9);
    if !degenerate.is_empty() {
        table.push_comment(format!("degenerate_pairs = {}", degenerate.len()));
    }
    Ok(table)
}

fn asymptote(sites_list: &[usize]) -> Result<Table> {
    let mut table = Table::new(vec!["N", "sigma_exact", "sigma_asymptotic", "rel_error"]);
    let mut flagged = false;
    for &sites in sites_list {
        let exact = closed_form_sigma(sites, 0)?;
        let approx = asymptotic_sigma_origin(sites)?;
        table.push_row(vec![
            sites.into(),
            exact.into(),
            approx.into(),
            ((exact - approx).abs() / exact).into(),
        ]);
        if sites == 3 {
            flagged = true;
        }
    }
    if flagged {
        table.push_comment("N=3 is outside the asymptotic regime");
    }
    Ok(table)
}

fn classical(sites: usize, site: usize, steps: u64, alpha: f64) -> Result<Table> {
    if site >= sites {
        bail!("site index {site} out of range for {sites} sites");
    }
    let mut horizons: Vec<u64> = Vec::new();
    let mut t = 100u64;
    while t <= steps {
        horizons.push(t);
        t *= 10;
    }
    if horizons.is_empty() {
        horizons.push(steps);
    }
    let config = WalkConfig::new(sites, alpha)?;
    let mut table = Table::new(vec!["N", "n", "T", "sigma_classical", "sigma_quantum"]);
    for horizon in horizons {
        let classical = classical_sigma_profile(sites, horizon)?[site];
        let quantum = empirical_sigma_profile(&config, horizon, mean_mode(sites))?.values[site];
        table.push_row(vec![
            sites.into(),
            site.into(),
            horizon.into(),
            classical.into(),
            quantum.into(),
        ]);
    }
    Ok(table)
}

/// Builds the table for `command` and writes it to `--out` or standard output.
pub fn run(cli: &Cli) -> Result<()> {
    let table = build_table(&cli.command)?;
    let output = cli.command.output();
    match &output.out {
        Some(path) => {
            let file = File::create(path)
                .with_context(|| format!("cannot create output file {}", path.display()))?;
            table.write(output.format, BufWriter::new(file))?;
        }
        None => {
            let stdout = std::io::stdout();
            let mut lock = stdout.lock();
            table.write(output.format, &mut lock)?;
            lock.flush()?;
        }
    }
    Ok(())
}
