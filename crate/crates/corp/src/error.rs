use thiserror::Error;

/// Errors reported by this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,

    #[error("length mismatch: {forecasts} forecasts vs {outcomes} outcomes")]
    LengthMismatch { forecasts: usize, outcomes: usize },

    #[error("forecast out of range at index {index}: {value}")]
    ForecastOutOfRange { index: usize, value: f64 },

    #[error("outcome at index {index} must be 0 or 1, got {value}")]
    InvalidOutcome { index: usize, value: u8 },

    #[error("threshold must lie strictly inside (0, 1), got {value}")]
    InvalidThreshold { value: f64 },

    #[error("band level must lie strictly inside (0, 1), got {value}")]
    InvalidLevel { value: f64 },

    #[error("resampling bands need at least 2 replicates, got {0}")]
    TooFewReplicates(u32),

    #[error("continuous asymptotic bands need at least 30 observations, got {0}")]
    TooFewObservations(usize),

    #[error("continuous asymptotic confidence bands need a CEP derivative estimate")]
    MissingCepDerivative,

    #[error("CEP derivative estimate must be strictly positive, got {value} at x = {at}")]
    InvalidCepDerivative { at: f64, value: f64 },

    #[error("probability {0} is outside the tabulated quantile range")]
    QuantileOutOfRange(f64),
}

pub type Result<T> = std::result::Result<T, Error>;
