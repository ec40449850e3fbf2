//! Exact symbolic engine for the two product structures underlying multiple
//! zeta values: the quasi-shuffle (stuffle) product on composition words and
//! the shuffle product on binary words, together with machine verifiers for
//! the weighted sum formula and its supporting identities, and a
//! high-precision numeric MZV evaluator.
//!
//! The crate is organized around the chain
//!
//! ```text
//! words  ->  lincomb  ->  stuffle / shuffle  ->  identities  ->  numerics
//! ```
//!
//! * [`words`] — compositions, binary words, and the bijection between them.
//! * [`lincomb`] — formal integer-coefficient linear combinations.
//! * [`stuffle`] — the quasi-shuffle product and its sum-formula builders.
//! * [`shuffle`] — the shuffle product, the transported product on
//!   compositions, the P/Q Rota–Baxter operators and Euler's decomposition.
//! * [`identities`] — the coefficient function C, the weighted-sum-formula
//!   forms, extended double shuffle elements, and identity verification.
//! * [`oracle`] — brute-force interleaving enumerators, kept independent of
//!   the recursive products so every identity check is doubly grounded.
//! * [`numerics`] — evaluation of ζ(s₁,…,s_k) via Hölder convolution at 1/2
//!   with explicit error bounds, plus numeric checks of the sum formulas.
//! * [`cli`] — batch verification over (identity, k, n) grids.

use thiserror::Error;

/// Parameters outside the range an identity or builder is stated for.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("domain error: {0}")]
pub struct DomainError(pub String);

pub mod cli;
pub mod identities;
pub mod lincomb;
pub mod numerics;
pub mod oracle;
pub mod shuffle;
pub mod stuffle;
pub mod words;

pub use identities::{IdentityId, IdentityReport, VerifyStatus};
pub use lincomb::LinComb;
pub use numerics::NumericValue;
pub use words::{BinaryWord, Composition, Letter};
