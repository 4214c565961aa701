//! Exact-arithmetic kernel for involutive algebra.
//!
//! The crate is `no_std` and only needs `alloc`. It provides
//!
//! * [`scalars`]: involutive commutative semirings (booleans, rationals,
//!   Gaussian rationals and the nine-element field `GF(9)`),
//! * [`words`]: free involutive monoids of signed words and their universal
//!   extension maps,
//! * [`multiset`]: the involutive multiset monad over a semiring,
//! * [`fmod`]: free modules, conjugate modules, self-conjugates, tensors,
//!   biproducts and internal homs,
//! * [`staralg`]: finite-dimensional involutive algebras given by structure
//!   constants, and involutive actions,
//! * [`gns`]: the bijection between hermitian functionals and sesquilinear
//!   forms on a reversing involutive algebra,
//! * [`lawlab`]: executable coherence checks on finite instances of
//!   involutive categories, plus the suite registry used by the CLI.
//!
//! Every comparison is exact. Checks never panic on a failed law; they return a
//! [`report::Report`] with the first counterexample for each law.

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod fmod;
pub mod gns;
pub mod lawlab;
pub mod multiset;
pub mod report;
pub mod scalars;
pub mod staralg;
pub mod words;

pub use report::{LawResult, Report, Verdict};
pub use scalars::InvolutiveSemiring;

use rand::SeedableRng;

/// Deterministic generator used by every sampled check.
pub type Rng = rand_chacha::ChaCha8Rng;

/// Builds the generator for a run seed.
pub fn rng_from_seed(seed: u64) -> Rng {
    Rng::seed_from_u64(seed)
}
