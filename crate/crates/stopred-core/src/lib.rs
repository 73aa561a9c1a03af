//! Exact combinatorial machinery for stopping-set analysis of linear codes.
//!
//! The crate is organised around a handful of quantities that all live on the
//! same few objects:
//!
//! * [`field`] — arithmetic over prime fields GF(p) and dense matrices over
//!   them (row reduction, rank, null spaces), plus a bit-packed GF(2) path.
//! * [`codes`] — linear codes given by generator matrices: the extended
//!   binary Golay code, evaluation-style Reed–Solomon codes, duals, exact
//!   minimum distances and codewords with prescribed supports.
//! * [`stopping`] — stopping sets, stopping distance, peeling and
//!   maximum-likelihood erasure decoding, and exact counts of undecodable
//!   erasure patterns by weight.
//! * [`designs`] — Turán systems, covering designs and single-exclusion
//!   systems: verifiers, block-family constructions, closed-form sizes and
//!   exact branch-and-bound search oracles.
//! * [`bounds`] — stopping-redundancy bound evaluators, exact where the
//!   formulas are combinatorial and with a pinned rounding policy where they
//!   are real-valued.
//! * [`search`] — greedy search for short parity-check matrices with maximum
//!   stopping distance, and an exact stopping-redundancy oracle for tiny
//!   codes.
//!
//! Everything here is deterministic: randomised search is driven entirely by
//! an explicit seed, and enumeration results are independent of how the work
//! is chunked. The crate is `no_std` (with `alloc`); IO, file formats and the
//! command-line front end live in the companion `stopred` crate.

#![cfg_attr(not(test), no_std)]
#![forbid(unsafe_code)]

extern crate alloc;

pub mod bounds;
pub mod codes;
pub mod combin;
pub mod designs;
pub mod field;
pub mod search;
pub mod stopping;

pub use codes::{CodeError, LinearCode, ParityCheckMatrix};
pub use field::{FieldError, FieldMatrix, FieldSpec};

/// Arbitrary-precision integers appear in the public bound APIs; re-exported
/// so downstream crates need not track the version themselves.
pub use num_bigint::BigUint;
