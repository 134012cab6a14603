//! Propagation-channel analytics toolkit.
//!
//! `chanlab` turns raw channel responses (impulse or frequency domain) into
//! six wideband features, embeds labeled feature sets into 2D with t-SNE or
//! with the PCA / Kernel PCA / Isomap baselines, scores embeddings with an
//! inter/intra-class fitness ratio and a classifier suite under repeated
//! stratified cross-validation, and emulates new scenarios by delaying and
//! attenuating existing ones.
//!
//! The crate is organized around the pipeline stages:
//!
//! - [`channel`] — time/frequency channel responses and exact conversions
//! - [`features`] — K factor, delay moments, path loss, spectral efficiency
//! - [`tsne`] — exact O(N²) t-SNE with Mahalanobis or Euclidean affinities
//! - [`baselines`] — PCA, Kernel PCA (Laplacian kernel) and Isomap
//! - [`eval`] — fitness function, hyperparameter sweeps, five classifiers,
//!   repeated stratified k-fold cross-validation
//! - [`scenario`] — parametric synthetic scenario generator and the
//!   delay/attenuation post-processing chain
//! - [`io`] / [`plot`] — CSV/JSON dataset formats and SVG scatter plots
//!
//! Everything is deterministic for a fixed seed, including internally
//! parallel code paths.

pub mod baselines;
pub mod channel;
pub mod cli;
pub mod dataset;
pub mod eval;
pub mod features;
pub mod io;
pub mod linalg;
pub mod plot;
pub mod scenario;
pub mod seeds;
pub mod tsne;

/// Crate-wide error type.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("empty input: {0}")]
    EmptyInput(&'static str),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("power delay profile has zero total power")]
    ZeroPower,
    #[error("dominant tap carries all power; K factor is unbounded")]
    DominantOnly,
    #[error("frequency sample with zero magnitude; path loss undefined")]
    ZeroMagnitude,
    #[error("SNR must be positive, got {0}")]
    InvalidSnr(f64),
    #[error("covariance matrix is singular beyond regularization")]
    SingularCovariance,
    #[error("perplexity calibration failed to bracket; worst residual {worst_residual}")]
    CalibrationFailure { worst_residual: f64 },
    #[error("t-SNE diverged at iteration {iteration}")]
    Divergence { iteration: usize },
    #[error("input has rank below 2; no 2D projection exists")]
    RankDeficient,
    #[error("centered kernel matrix is degenerate (top-2 eigenvalues not positive)")]
    DegenerateKernel,
    #[error("neighbor graph is disconnected; component sizes {0:?}")]
    DisconnectedGraph(Vec<usize>),
    #[error("k_neighbors {k} out of range for {n} points")]
    InvalidK { k: usize, n: usize },
    #[error("class {0:?} collapsed to a point; intra-class distance is zero")]
    DegenerateClass(String),
    #[error("class {label:?} has {size} members, fewer than {folds} folds")]
    Stratification {
        label: String,
        size: usize,
        folds: usize,
    },
    #[error("eigensolver failed to converge")]
    EigenFailure,
    #[error("io: {0}")]
    Io(#[from] std::io::Error),
    #[error("{0}")]
    Format(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Format(format!("json: {e}"))
    }
}

impl From<csv::Error> for Error {
    fn from(e: csv::Error) -> Self {
        Error::Format(format!("csv: {e}"))
    }
}

pub type Result<T> = std::result::Result<T, Error>;
