//! Process-wide caps on enumeration sizes.
//!
//! The caps are plain atomics so a front end can lower or raise them once at
//! startup. Every enumeration checks its cap before doing the work and fails
//! with [`Error::ResourceCap`](crate::Error::ResourceCap) instead of running
//! away.

use core::sync::atomic::{AtomicU64, Ordering};

pub const DEFAULT_TERM_CAP: u64 = 100_000_000;
pub const DEFAULT_CHAIN_CAP: u64 = 10_000_000;
pub const DEFAULT_SUPPORT_CAP: u64 = 1_000_000;

static TERM_CAP: AtomicU64 = AtomicU64::new(DEFAULT_TERM_CAP);
static CHAIN_CAP: AtomicU64 = AtomicU64::new(DEFAULT_CHAIN_CAP);
static SUPPORT_CAP: AtomicU64 = AtomicU64::new(DEFAULT_SUPPORT_CAP);

/// Maximum number of surviving compositions in a fermionic sum.
pub fn term_cap() -> u64 {
    TERM_CAP.load(Ordering::Relaxed)
}

pub fn set_term_cap(cap: u64) {
    TERM_CAP.store(cap, Ordering::Relaxed);
}

/// Maximum number of diagram chains in the general supernomial sum.
pub fn chain_cap() -> u64 {
    CHAIN_CAP.load(Ordering::Relaxed)
}

pub fn set_chain_cap(cap: u64) {
    CHAIN_CAP.store(cap, Ordering::Relaxed);
}

/// Maximum support size of a distribution built for a diagnostic scan.
pub fn support_cap() -> u64 {
    SUPPORT_CAP.load(Ordering::Relaxed)
}

pub fn set_support_cap(cap: u64) {
    SUPPORT_CAP.store(cap, Ordering::Relaxed);
}

/// Override every cap at once.
pub fn set_all(cap: u64) {
    set_term_cap(cap);
    set_chain_cap(cap);
    set_support_cap(cap);
}
