//! Values, stacks, isos and prisms shared by every engine.

pub mod json;
mod optic;
pub(crate) mod plist;
mod stack;
mod value;

pub use optic::{
    adt_prism, cons_prism, decimal_iso, digit_iso, false_prism, identity_iso, nil_prism, pair_iso,
    pair_join, pair_split, text_chars_iso, true_prism, Iso, Prism,
};
pub use stack::{Frame, Stack, StackEntry};
pub use value::Value;
