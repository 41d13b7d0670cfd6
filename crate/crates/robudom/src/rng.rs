//! Seed derivation and random streams.
//!
//! Every random quantity in this crate is a pure function of explicit 64-bit
//! seeds. Edge states are derived by hashing `(seed, u, v)` through a
//! SplitMix64-style finalizer, so a generated graph does not depend on the
//! order in which vertex pairs are visited. Sequential sampling (vertex draws
//! inside the constructors, binomial simulation in the harness) runs on
//! ChaCha8 streams seeded through the same derivation.

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// SplitMix64 finalizer: a full-avalanche bijection on `u64`.
#[inline(always)]
pub fn mix64(mut z: u64) -> u64 {
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Derives a child seed from a parent seed and two key words.
///
/// Used for edge keys (`a`, `b` = endpoint indices, `a < b`), per-trial seeds
/// (`a` = n, `b` = trial index) and stream separation within a trial.
#[inline(always)]
pub fn derive_seed(seed: u64, a: u64, b: u64) -> u64 {
    let mut h = mix64(seed ^ 0x9e37_79b9_7f4a_7c15);
    h = mix64(h ^ a.wrapping_mul(0xff51_afd7_ed55_8ccd));
    mix64(h ^ b.wrapping_mul(0xc4ce_b9fe_1a85_ec53))
}

/// Maps 64 random bits to a uniform `f64` in `[0, 1)` (53-bit resolution).
#[inline(always)]
pub fn unit_f64(bits: u64) -> f64 {
    (bits >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
}

/// Bernoulli(p) draw for the unordered pair `(u, v)` keyed by `seed`.
///
/// The caller passes endpoints in any order; the key is canonicalized so both
/// orders give the same draw. `p = 0` never fires, `p = 1` always fires.
#[inline(always)]
pub fn edge_draw(seed: u64, u: usize, v: usize, p: f64) -> bool {
    let (a, b) = if u <= v { (u, v) } else { (v, u) };
    unit_f64(derive_seed(seed, a as u64, b as u64)) < p
}

/// Seeded sequential stream for sampling loops.
pub fn stream(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}
