//! Trajectory forecasting toolkit for world-plane pedestrian data.
//!
//! The crate covers the full pipeline behind a displacement-error benchmark:
//!
//! - [`track`] — core domain types: positions, tracklets, samples, offset
//!   sequences.
//! - [`ingest`] — parsing of plain-text trajectory files and slicing of
//!   tracklets into fixed observation/prediction windows.
//! - [`analysis`] — dataset statistics: offset histograms, degree-4
//!   polynomial smoothing with residual noise estimation, and R² linearity
//!   scoring.
//! - [`nn`] — a small differentiable engine (dense, RNN/LSTM/GRU cells,
//!   dilated causal convolutions, MSE loss, Adam) with finite-difference
//!   gradient verification.
//! - [`models`] — the predictor families behind a single
//!   `8 observed positions -> 12 future positions` contract, from the
//!   linear-interpolation baseline to the RED predictor (recurrent encoder
//!   over standardized offsets with a dense full-path head).
//! - [`eval`] — ADE/FDE metrics, per-dataset reports, and diagnostic
//!   breakdowns by speed and linearity class.
//! - [`synth`] — deterministic synthetic corpora (lines, arcs, stop-and-go,
//!   standing) for desk-scale experiments.

pub mod analysis;
pub mod eval;
pub mod ingest;
pub mod models;
pub mod nn;
pub mod synth;
pub mod track;

mod linalg;
mod par;

pub use track::{OffsetSequence, Position, Sample, Tracklet};
