//! Invertible syntax descriptors.
//!
//! A descriptor is a single grammar value that can be run in two directions:
//! as a parser from text to structured [`Value`]s, and as a pretty-printer
//! from values back to text. Three engines are provided, in increasing order
//! of expressive power:
//!
//! * [`cassette1`]: choice-free, partial descriptors composed as a category,
//!   with polyvariadic `sprintf1`/`sscanf1`.
//! * [`cassette2`]: descriptors with failure and choice, leads built from
//!   prisms, and recursion. Enough for context-free grammars.
//! * [`stacked`]: indexed-monadic descriptors pairing a continuation printer
//!   with a forward parser, in a linear and a backtracking variant.
//!
//! [`lambda`] builds the pure λ-calculus grammar on the last two engines.

pub mod cassette1;
pub mod cassette2;
pub mod cli;
pub mod error;
pub mod lambda;
pub mod stacked;
pub mod values;

mod chars;

pub use chars::CharClass;
pub use error::Violation;
pub use values::{Iso, Prism, Stack, Value};
