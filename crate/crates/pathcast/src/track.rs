//! Core domain types: world-plane positions, tracklets, observation/target
//! samples and offset sequences.
//!
//! All values here are immutable after construction and carry no behavior
//! beyond validation and unit bookkeeping, so they can be shared freely
//! across worker threads.

use thiserror::Error;

/// Frame period of the benchmark data: 2.5 Hz.
pub const DEFAULT_FRAME_PERIOD: f64 = 0.4;

/// Number of observed positions per sample.
pub const OBSERVE_LEN: usize = 8;
/// Number of predicted positions per sample.
pub const PREDICT_LEN: usize = 12;

#[derive(Debug, Error, PartialEq)]
pub enum TrackError {
    #[error("need at least {need} positions, got {got}")]
    TooShort { need: usize, got: usize },
    #[error("non-finite coordinate at index {0}")]
    NonFinite(usize),
    #[error("frame indices not strictly increasing at index {0}")]
    NonIncreasingFrames(usize),
    #[error("frame stride not constant at index {0}")]
    InconsistentStride(usize),
    #[error("observed window must have {expected} positions, got {got}")]
    BadObservedLen { expected: usize, got: usize },
    #[error("future window must have {expected} positions, got {got}")]
    BadFutureLen { expected: usize, got: usize },
}

/// A point in world-plane coordinates, in meters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Position {
    pub x: f64,
    pub y: f64,
}

impl Position {
    pub fn new(x: f64, y: f64) -> Self {
        Position { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    /// Euclidean distance to another position.
    pub fn distance(&self, other: &Position) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }

    pub fn translated(&self, dx: f64, dy: f64) -> Position {
        Position::new(self.x + dx, self.y + dy)
    }
}

/// One pedestrian's time-ordered world-plane positions at a fixed frame rate.
///
/// Invariants established at construction: at least 2 frames, strictly
/// increasing frame indices with a constant stride, finite coordinates.
#[derive(Debug, Clone, PartialEq)]
pub struct Tracklet {
    pub pedestrian_id: i64,
    frames: Vec<(i64, Position)>,
    frame_period: f64,
}

impl Tracklet {
    pub fn new(
        pedestrian_id: i64,
        frames: Vec<(i64, Position)>,
        frame_period: f64,
    ) -> Result<Self, TrackError> {
        if frames.len() < 2 {
            return Err(TrackError::TooShort {
                need: 2,
                got: frames.len(),
            });
        }
        for (i, (_, p)) in frames.iter().enumerate() {
            if !p.is_finite() {
                return Err(TrackError::NonFinite(i));
            }
        }
        let stride = frames[1].0 - frames[0].0;
        for i in 1..frames.len() {
            let d = frames[i].0 - frames[i - 1].0;
            if d <= 0 {
                return Err(TrackError::NonIncreasingFrames(i));
            }
            if d != stride {
                return Err(TrackError::InconsistentStride(i));
            }
        }
        Ok(Tracklet {
            pedestrian_id,
            frames,
            frame_period,
        })
    }

    /// Convenience constructor for positions indexed 0, 1, 2, ... at the
    /// default frame period.
    pub fn from_positions(pedestrian_id: i64, positions: &[Position]) -> Result<Self, TrackError> {
        let frames = positions
            .iter()
            .enumerate()
            .map(|(i, &p)| (i as i64, p))
            .collect();
        Tracklet::new(pedestrian_id, frames, DEFAULT_FRAME_PERIOD)
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        false // invariant: length >= 2
    }

    pub fn frames(&self) -> &[(i64, Position)] {
        &self.frames
    }

    pub fn positions(&self) -> impl Iterator<Item = Position> + '_ {
        self.frames.iter().map(|&(_, p)| p)
    }

    pub fn position_vec(&self) -> Vec<Position> {
        self.frames.iter().map(|&(_, p)| p).collect()
    }

    pub fn start_frame(&self) -> i64 {
        self.frames[0].0
    }

    /// Difference between consecutive raw frame indices, discovered at
    /// ingestion (typically 10 or 12 in the distributed files).
    pub fn frame_stride(&self) -> i64 {
        self.frames[1].0 - self.frames[0].0
    }

    /// Wall-clock seconds between consecutive positions.
    pub fn frame_period(&self) -> f64 {
        self.frame_period
    }
}

/// An observation window plus (for training data) its ground-truth future,
/// with provenance back to the source dataset.
#[derive(Debug, Clone, PartialEq)]
pub struct Sample {
    pub observed: Vec<Position>,
    pub future: Option<Vec<Position>>,
    pub source_dataset: String,
    pub pedestrian_id: i64,
    pub start_frame: i64,
    pub frame_period: f64,
}

impl Sample {
    pub fn new(
        observed: Vec<Position>,
        future: Option<Vec<Position>>,
        source_dataset: String,
        pedestrian_id: i64,
        start_frame: i64,
        frame_period: f64,
    ) -> Result<Self, TrackError> {
        if observed.len() != OBSERVE_LEN {
            return Err(TrackError::BadObservedLen {
                expected: OBSERVE_LEN,
                got: observed.len(),
            });
        }
        if let Some(f) = &future {
            if f.len() != PREDICT_LEN {
                return Err(TrackError::BadFutureLen {
                    expected: PREDICT_LEN,
                    got: f.len(),
                });
            }
        }
        Ok(Sample {
            observed,
            future,
            source_dataset,
            pedestrian_id,
            start_frame,
            frame_period,
        })
    }

    /// Observed and future positions concatenated (the full ground-truth
    /// window). Equals the observed window alone for test-mode samples.
    pub fn full_window(&self) -> Vec<Position> {
        let mut all = self.observed.clone();
        if let Some(f) = &self.future {
            all.extend_from_slice(f);
        }
        all
    }

    pub fn last_observed(&self) -> Position {
        *self.observed.last().expect("observed window is non-empty")
    }
}

/// Per-step displacement vectors plus the origin they were measured from.
///
/// The cumulative sum of `offsets` added to `origin` reconstructs the source
/// positions (to floating tolerance; exact in exact arithmetic).
#[derive(Debug, Clone, PartialEq)]
pub struct OffsetSequence {
    pub origin: Position,
    pub offsets: Vec<(f64, f64)>,
}

impl OffsetSequence {
    pub fn len(&self) -> usize {
        self.offsets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.offsets.is_empty()
    }
}

/// Differences consecutive positions into an [`OffsetSequence`].
///
/// Errors when fewer than 2 positions are given; there is no offset to take.
pub fn positions_to_offsets(positions: &[Position]) -> Result<OffsetSequence, TrackError> {
    if positions.len() < 2 {
        return Err(TrackError::TooShort {
            need: 2,
            got: positions.len(),
        });
    }
    let offsets = positions
        .windows(2)
        .map(|w| (w[1].x - w[0].x, w[1].y - w[0].y))
        .collect();
    Ok(OffsetSequence {
        origin: positions[0],
        offsets,
    })
}

/// Inverse of [`positions_to_offsets`]: integrates offsets from the origin.
pub fn offsets_to_positions(seq: &OffsetSequence) -> Vec<Position> {
    let mut out = Vec::with_capacity(seq.offsets.len() + 1);
    let mut cur = seq.origin;
    out.push(cur);
    for &(dx, dy) in &seq.offsets {
        cur = Position::new(cur.x + dx, cur.y + dy);
        out.push(cur);
    }
    out
}
