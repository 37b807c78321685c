use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("alpha must lie in [0, 1], got {0}")]
    AlphaOutOfRange(f64),

    #[error("cycle needs at least 3 sites, got {0}")]
    TooFewSites(usize),

    #[error("site index {site} out of range for {sites} sites")]
    SiteOutOfRange { site: usize, sites: usize },

    #[error("eigenvalue index (j={j}, k={k}) out of range for {sites} sites")]
    EigenIndexOutOfRange { sites: usize, j: usize, k: usize },

    #[error("operation is only defined for an odd number of sites, got {0}")]
    EvenSites(usize),

    #[error("resonance enumeration is limited to 15 sites, got {0}")]
    ResonanceTooLarge(usize),

    #[error("variance radicand {0} is negative beyond tolerance")]
    NegativeVariance(f64),

    #[error("amplitude vector length {len} does not match {sites} sites")]
    DimensionMismatch { sites: usize, len: usize },

    #[error("state norm^2 is {0}, expected 1")]
    NotNormalized(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
