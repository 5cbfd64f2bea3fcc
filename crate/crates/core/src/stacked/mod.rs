//! Format descriptors as indexed monads.
//!
//! A descriptor is a pair of actions run in lockstep ([`Both`]): a printer
//! in continuation-passing style whose continuation is wrapped in the
//! traced comonad ([`ContW`], [`Cont2W`]), and a forward parser that
//! ignores the stack ([`Fwd`], [`FwdMaybe`]). Sequencing is monadic, so
//! parsed results are combined with `ap` instead of being collected on a
//! stack, and a parser can inspect an earlier result to decide what to do
//! next.
//!
//! The print side still threads a value stack. `shift_` captures the rest
//! of the printer, and from it come [`linear::push`], [`linear::pop_`] and
//! [`linear::stack`]. The choice variant's `shift_` also receives the
//! failure answer, and every stack rewrite comes with an unrolling function
//! so that a failing alternative hands the next one the stack it started
//! from ([`choice::stack_guard`]).
//!
//! Stack indices are not part of the Rust types. Using an action at the
//! wrong stack shape is reported as a [`Violation`](crate::Violation) when
//! the printer runs.
//!
//! A plain continuation monad cannot implement `shift_` with a failure
//! answer: there is no answer value to fill the hole with until the final
//! continuation is known. That is why the choice printer takes the failure
//! answer as an argument rather than producing one.
//!
//! The parse side of the choice variant is a `Maybe` parser: `alt` tries
//! its second branch only when the first one fails by itself, so it does
//! not revisit a choice after a later failure the way the cassette engine
//! does. The shipped grammars never depend on that difference.

pub mod choice;
mod combinators;
mod ix;
pub mod linear;
mod parse;
mod print;
mod res;
mod run;
mod traced;

pub use combinators::{
    alpha_num_d, char_d, cons_l_d, digit_d, int_d, iso_d, letter_d, lit_d, many_d, nil_l_d,
    optional_d, ordinal_spec3, prism_l_d, some_d,
};
pub use ix::{fix, Alternative, AnsC, AnsL, Both, Descr, IxMonad, Stacked, Stacked2, K2};
pub use parse::{Fwd, FwdMaybe};
pub use print::{Cont2W, ContW, KC, KL};
pub use res::{Fun, Res};
pub use run::{
    parse3, parse3_prefix, pretty3, run_print_choice, run_print_linear, sprintf3, sscanf3, Choice,
    Linear,
};
pub use traced::Traced;
