use crate::chars::CharClass;
use crate::values::{cons_prism, decimal_iso, digit_iso, nil_prism, Iso, Prism, Value};

use super::choice;
use super::ix::{fix, Alternative, Descr, Stacked2};
use super::res::{Fun, Res};

/// `lit [] = return (); lit (c:cs) = push c *> satisfy (== c) >>= \_ -> lit cs`
pub fn lit_d<M: Descr>(text: &str) -> M {
    text.chars().rev().fold(M::ret(Res::unit()), |rest, c| {
        M::push_value(Value::Char(c))
            .then(M::satisfy(CharClass::eq(c)))
            .then(rest)
    })
}

pub fn char_d<M: Descr>() -> M {
    M::satisfy(CharClass::any())
}

pub fn letter_d<M: Descr>() -> M {
    M::satisfy(CharClass::ascii_letter())
}

pub fn alpha_num_d<M: Descr>() -> M {
    M::satisfy(CharClass::ascii_alphanumeric())
}

/// A decimal digit read as an `Int`. Printing turns the `Int` on top of the
/// stack into its digit before `satisfy` pops it.
pub fn digit_d<M: Descr>() -> M {
    let iso = digit_iso();
    let back = iso.clone();
    M::ret(Res::Fun(Fun::unary("read", move |c| back.from(c))))
        .skip(M::map_top(iso))
        .ap(M::satisfy(CharClass::digit()))
}

/// Run `m` on the image of the top value under `iso`, and map its result
/// back.
pub fn iso_d<M: Descr>(iso: Iso, m: M) -> M {
    let back = iso.clone();
    M::map_top(iso).then(
        m.bind(move |x| match x.into_value().and_then(|v| back.from(v)) {
            Ok(v) => M::ret(Res::Val(v)),
            Err(e) => M::reject(e),
        }),
    )
}

/// `prismL l = stack rev u *> return (review l)`: on the print side,
/// replace the value on top by its components, or fail if it is built by
/// another constructor; on the parse side, return the constructor.
pub fn prism_l_d<M: Stacked2>(prism: Prism) -> M {
    let op = format!("prismL {}", prism.tag());
    let op2 = op.clone();
    let p = prism.clone();
    let u = prism.clone();
    let lead = choice::stack_guard::<M>(
        move |s| {
            let (t, rest) = s.pop_value(&op)?;
            Ok(p.preview(&t).map(|parts| rest.push_all_top_first(parts)))
        },
        move |mut s| {
            let mut parts = Vec::with_capacity(u.arity());
            for _ in 0..u.arity() {
                let (v, rest) = s.pop_value(&op2)?;
                parts.push(v);
                s = rest;
            }
            Ok(s.push(u.review(parts)?))
        },
    );
    let built = if prism.arity() == 0 {
        match prism.review(Vec::new()) {
            Ok(v) => M::ret(Res::Val(v)),
            Err(e) => M::abort(e),
        }
    } else {
        let r = prism.clone();
        M::ret(Res::Fun(Fun::new(
            prism.tag().to_owned(),
            prism.arity(),
            move |parts| r.review(parts),
        )))
    };
    lead.then(built)
}

/// The lead for non-empty lists: `(:)`.
pub fn cons_l_d<M: Stacked2>() -> M {
    prism_l_d(cons_prism())
}

/// The lead for the empty list.
pub fn nil_l_d<M: Stacked2>() -> M {
    prism_l_d(nil_prism())
}

/// Zero or more `p`, greedy: `many p = some p <> nil`.
pub fn many_d<M: Descr + Stacked2 + Alternative>(p: M) -> M {
    fix(|me: M| cons_l_d::<M>().ap(p).ap(me).alt(nil_l_d()))
}

/// One or more `p`: `some p = consL <*> p <*> many p`.
pub fn some_d<M: Descr + Stacked2 + Alternative>(p: M) -> M {
    cons_l_d::<M>().ap(p.clone()).ap(many_d(p))
}

/// `p` or nothing; the result is `p`'s or `()`.
pub fn optional_d<M: Alternative>(p: M) -> M {
    p.alt(M::ret(Res::unit()))
}

/// A maximal run of digits read as a non-negative `Int`.
pub fn int_d<M: Descr + Stacked2 + Alternative>() -> M {
    iso_d(decimal_iso(), some_d(M::satisfy(CharClass::digit())))
}

/// `(,,) <$> digit <* lit "-th character after " <*> char <* lit " is " <*> char`
pub fn ordinal_spec3<M: Descr>() -> M {
    M::ret(Res::Fun(Fun::tuple(3)))
        .ap(digit_d())
        .skip(lit_d("-th character after "))
        .ap(char_d())
        .skip(lit_d(" is "))
        .ap(char_d())
}
