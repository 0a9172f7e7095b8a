//! Safety caps on exhaustive enumerations.
//!
//! Every exponential search in the crate consults these caps and fails with
//! [`Error::SizeTooLarge`](crate::Error::SizeTooLarge) instead of running
//! away. A front end may raise them once at start-up.

use std::sync::atomic::{AtomicUsize, Ordering};

/// Largest carrier on which subsets are enumerated by brute force.
pub const BRUTE_FORCE_POINTS: usize = 16;

/// Largest poset size accepted by the exhaustive corpus generator.
pub const EXHAUSTIVE_CORPUS_SIZE: usize = 7;

/// Largest base poset accepted by the `ω*(P)` lattice builder.
pub const Q_LATTICE_BASE: usize = 14;

static ENUMERATION_CAP: AtomicUsize = AtomicUsize::new(1 << 21);
static SIZE_SCALE: AtomicUsize = AtomicUsize::new(1);

/// Maximum number of sets any single lazy enumeration may produce.
pub fn enumeration_cap() -> usize {
    ENUMERATION_CAP.load(Ordering::Relaxed)
}

/// Multiplier applied to the size caps above (1 by default).
pub fn size_scale() -> usize {
    SIZE_SCALE.load(Ordering::Relaxed)
}

/// Overrides the caps. `max_size` replaces the exhaustive corpus bound and
/// scales the other size caps proportionally.
pub fn override_caps(max_size: usize) {
    let scale = max_size.div_ceil(EXHAUSTIVE_CORPUS_SIZE).max(1);
    SIZE_SCALE.store(scale, Ordering::Relaxed);
    ENUMERATION_CAP.store((1usize << 21).saturating_mul(scale), Ordering::Relaxed);
    CORPUS_OVERRIDE.store(max_size, Ordering::Relaxed);
}

static CORPUS_OVERRIDE: AtomicUsize = AtomicUsize::new(0);

pub fn exhaustive_corpus_limit() -> usize {
    match CORPUS_OVERRIDE.load(Ordering::Relaxed) {
        0 => EXHAUSTIVE_CORPUS_SIZE,
        n => n,
    }
}

pub fn q_lattice_limit() -> usize {
    Q_LATTICE_BASE * size_scale()
}

pub fn brute_force_limit() -> usize {
    BRUTE_FORCE_POINTS
}
