//! Cassettes with failure and choice.
//!
//! Each track now threads two continuations: success and failure. Sequencing
//! (`then`, or [`compose2`]) composes success continuations, and choice
//! (`or`, or [`choice2`]) composes failure continuations. Choice backtracks
//! without limit: if anything after the first alternative fails, the second
//! alternative runs on the input and stack the first one started from.
//!
//! Leads deconstruct a value on the print side (and fail on the wrong
//! constructor) and construct it on the parse side (never failing). With
//! leads and recursion, descriptors cover context-free grammars. Recursion
//! must be guarded by a consuming descriptor; left recursion loops.

mod combinators;
mod descriptor;
pub mod machine;
#[cfg(test)]
mod reference;

pub use combinators::{bool2, char2, digit2, int2, many, optional2, some};
pub use descriptor::{
    alt2, choice2, compose2, cons_l, defer, delay, fail2, fix, identity2, iso_l2, lit2, lit_unit,
    nil_l, pair_l2, prism_l2, satisfy2, seq2, Descriptor2,
};
pub use machine::{parse2, parse2_all, pretty2, run_parse, run_parse_all, run_print, Outcome2};
