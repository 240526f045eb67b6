//! Information-theoretic analysis of binary word-meaning mappings.
//!
//! The central object is the [`LexicalMatrix`], a bipartite adjacency
//! between a vocabulary of words and a repertoire of meanings. On top of it
//! the crate provides:
//!
//! - [`measures`]: word entropy, conditional entropy, mutual information,
//!   optimal-prefix-code mean length, and the combined cost that trades
//!   entropy minimization against information maximization;
//! - [`learning`]: attachment of new words to meaning sets, the comparison
//!   between targeting unlinked versus linked meanings, and recycling of
//!   already-linked words;
//! - [`optima`]: exhaustive enumeration of all small matrices, structural
//!   characterizations of the measure extrema, and sweep verification of
//!   the attachment results;
//! - [`search`]: seeded Metropolis annealing of the combined cost with
//!   rank-frequency output and a descriptive power-law exponent fit.

pub mod error;
pub mod learning;
pub mod matrix;
pub mod measures;
pub mod optima;
pub mod search;

pub use error::{Error, Result};
pub use matrix::LexicalMatrix;
pub use measures::{Lambda, MeasureReport};
