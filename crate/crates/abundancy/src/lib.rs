//! Exact arithmetic toolkit for abundancy questions: the divisor-sum ratio
//! h(n) = σ(n)/n, its prime-product envelope H(n), counters for how many
//! consecutive prime factors a non-deficient number needs, explicit
//! Mertens-type lower bounds with verification campaigns, and record
//! searches over σ(m!±z) and σ(2^n±1).
//!
//! All h/H values and thresholds are exact rationals; floating point only
//! appears in log-space bound evaluation, always with a tracked error bound
//! and an exact big-integer fallback at decision boundaries.

pub mod arith;
pub mod error;
pub mod factor;
pub mod mertens;
pub mod primes;
pub mod report;
pub mod sequences;
pub mod verify;

pub use error::{Error, Result};

/// Euler–Mascheroni constant, correctly rounded to f64.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// SplitMix64 step; the deterministic generator behind every seeded choice
/// (rho polynomial restarts, sampled property checks).
pub fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}
