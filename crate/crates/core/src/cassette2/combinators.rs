use crate::chars::CharClass;
use crate::values::{decimal_iso, digit_iso, false_prism, true_prism};

use super::descriptor::*;

/// Zero or more `p`, greedy, collected in a `List`.
pub fn many(p: &Descriptor2) -> Descriptor2 {
    fix(|me| choice2(&seq2(&[cons_l(), p.clone(), me]), &nil_l()))
}

/// One or more `p`.
pub fn some(p: &Descriptor2) -> Descriptor2 {
    seq2(&[cons_l(), p.clone(), many(p)])
}

/// Run a nullary `p` if it applies, otherwise do nothing.
pub fn optional2(p: &Descriptor2) -> Descriptor2 {
    choice2(p, &identity2())
}

pub fn char2() -> Descriptor2 {
    satisfy2(CharClass::any())
}

pub fn digit2() -> Descriptor2 {
    compose2(&iso_l2(digit_iso()), &satisfy2(CharClass::digit()))
}

/// A maximal run of decimal digits read as a non-negative `Int`.
pub fn int2() -> Descriptor2 {
    compose2(&iso_l2(decimal_iso()), &some(&satisfy2(CharClass::digit())))
}

/// `T` or `F`.
pub fn bool2() -> Descriptor2 {
    choice2(
        &compose2(&prism_l2(true_prism()), &lit_unit("T")),
        &compose2(&prism_l2(false_prism()), &lit_unit("F")),
    )
}
