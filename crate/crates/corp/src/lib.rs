//! CORP reliability diagrams for probability forecasts of binary events.
//!
//! The estimation core is nonparametric isotonic regression: the
//! pool-adjacent-violators (PAV) algorithm recalibrates the forecasts, and
//! the recalibrated values double as the reliability curve. On top of that
//! the crate offers
//!
//! - exact score decompositions S̄ = MCB - DSC + UNC for the Brier,
//!   logarithmic, misclassification, and elementary scoring rules, plus
//!   Murphy diagrams ([`scoring`]);
//! - diagram geometry with automatic discrete/continuous display detection
//!   and Freedman-Diaconis marginal histograms ([`diagram`]);
//! - consistency and confidence bands via resampling, per-value normal
//!   approximations, or cube-root (Chernoff) asymptotics ([`bands`]);
//! - a simulation harness for coverage and MSE-efficiency studies against
//!   classical binning-and-counting estimators ([`simulation`]).
//!
//! ```
//! use corp::{ForecastDataset, ScoringRule};
//!
//! let data = ForecastDataset::new(vec![0.2, 0.4, 0.6], vec![1, 0, 1])?;
//! let calibrated = corp::recalibrate(&data);
//! assert_eq!(calibrated, vec![0.5, 0.5, 1.0]);
//!
//! let d = corp::corp_decomposition(ScoringRule::Brier, &data);
//! assert!((d.mean_score - (d.mcb - d.dsc + d.unc)).abs() < 1e-12);
//! # Ok::<(), corp::Error>(())
//! ```

pub mod bands;
pub mod dataset;
pub mod diagram;
mod error;
pub mod pav;
pub mod scoring;
pub mod simulation;
mod stats;

pub use bands::{
    chernoff_quantile, compute_band, select_method, BandKind, BandMethod, BandSpec,
    ResolvedBandMethod, UncertaintyBand,
};
pub use dataset::{aggregate, ForecastDataset, UniqueValueSummary};
pub use diagram::{
    build_diagram, detect_mode, fd_histogram, DiagramMode, DiagramOptions, ReliabilityDiagram,
};
pub use error::{Error, Result};
pub use pav::{pav_fit, recalibrate, Block, IsotonicFit};
pub use scoring::{
    corp_decomposition, mean_score, murphy_brier_decomposition, murphy_diagram, ScoreDecomposition,
    ScoringRule,
};
pub use stats::quantile_type7;
