//! The pure λ-calculus, described once per engine.
//!
//! ```text
//! term ::= idnt | "λ" idnt "." term | "(" term " " term ")"
//! idnt ::= letter alphanumeric*
//! ```
//!
//! Terms are `Value`s: `Var(Text)`, `Abs(Text, term)` and `App(term, term)`.
//! Letters and alphanumerics are ASCII only. There is no whitespace other
//! than the single space inside an application.

use crate::cassette2::{
    alt2, cons_l, fix as fix2, iso_l2, lit2, many, prism_l2, satisfy2, seq2, Descriptor2,
};
use crate::chars::CharClass;
use crate::stacked::{
    alpha_num_d, cons_l_d, fix as fix3, iso_d, letter_d, lit_d, many_d, prism_l_d, Alternative,
    Choice, IxMonad,
};
use crate::values::json::{from_json_str, to_json_string};
use crate::values::{adt_prism, text_chars_iso, Prism, Value};

pub fn var_prism() -> Prism {
    adt_prism("Var", 1)
}

pub fn abs_prism() -> Prism {
    adt_prism("Abs", 2)
}

pub fn app_prism() -> Prism {
    adt_prism("App", 2)
}

pub fn var(name: &str) -> Value {
    Value::adt("Var", [Value::text(name)])
}

pub fn abs(binder: &str, body: Value) -> Value {
    Value::adt("Abs", [Value::text(binder), body])
}

pub fn app(fun: Value, arg: Value) -> Value {
    Value::adt("App", [fun, arg])
}

/// An ASCII letter followed by ASCII alphanumerics.
pub fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
        && chars.all(|c| c.is_ascii_alphanumeric())
}

/// Whether `v` is a well-formed term with valid identifiers.
pub fn is_term(v: &Value) -> bool {
    // iterative, so that deep terms from JSON cannot overflow the stack
    let mut todo = vec![v];
    while let Some(v) = todo.pop() {
        let Value::Adt(tag, args) = v else {
            return false;
        };
        let ok = match (tag.as_str(), args.as_slice()) {
            ("Var", [Value::Text(x)]) => is_identifier(x),
            ("Abs", [Value::Text(x), body]) => {
                todo.push(body);
                is_identifier(x)
            }
            ("App", [f, a]) => {
                todo.push(f);
                todo.push(a);
                true
            }
            _ => false,
        };
        if !ok {
            return false;
        }
    }
    true
}

/// The JSON encoding of a term, e.g. `{"Var":"x"}`.
///
/// # Panics
///
/// If `t` is not a term.
pub fn term_to_json(t: &Value) -> String {
    assert!(is_term(t), "not a term: {t}");
    to_json_string(t).expect("term tags are not reserved")
}

/// Decode a term; `None` on malformed JSON or anything that is not a term.
pub fn term_from_json(s: &str) -> Option<Value> {
    from_json_str(s).ok().filter(is_term)
}

/// `idnt = isoL text --> consL --> letter . many alphaNum`
pub fn idnt_cassette() -> Descriptor2 {
    seq2(&[
        iso_l2(text_chars_iso()),
        cons_l(),
        satisfy2(CharClass::ascii_letter()),
        many(&satisfy2(CharClass::ascii_alphanumeric())),
    ])
}

/// The λ-calculus grammar for the cassette engine.
pub fn term_grammar_cassette() -> Descriptor2 {
    let idnt = idnt_cassette();
    fix2(|term| {
        alt2(&[
            seq2(&[prism_l2(var_prism()), idnt.clone()]),
            seq2(&[
                prism_l2(abs_prism()),
                lit2("λ"),
                idnt.clone(),
                lit2("."),
                term.clone(),
            ]),
            seq2(&[
                prism_l2(app_prism()),
                lit2("("),
                term.clone(),
                lit2(" "),
                term,
                lit2(")"),
            ]),
        ])
    })
}

/// `idnt = consL <*> letter <*> many alphaNum`, viewed as `Text`.
pub fn idnt_stacked() -> Choice {
    iso_d(
        text_chars_iso(),
        cons_l_d::<Choice>()
            .ap(letter_d())
            .ap(many_d(alpha_num_d())),
    )
}

fn parens(p: Choice) -> Choice {
    lit_d::<Choice>("(").then(p).skip(lit_d(")"))
}

/// The λ-calculus grammar for the stacked engine.
pub fn term_grammar_stacked() -> Choice {
    let idnt = idnt_stacked();
    fix3(|term: Choice| {
        let var_alt = prism_l_d::<Choice>(var_prism()).ap(idnt.clone());
        let abs_alt = prism_l_d::<Choice>(abs_prism())
            .skip(lit_d("λ"))
            .ap(idnt)
            .skip(lit_d("."))
            .ap(term.clone());
        let app_alt = parens(
            prism_l_d::<Choice>(app_prism())
                .ap(term.clone())
                .skip(lit_d(" "))
                .ap(term),
        );
        var_alt.alt(abs_alt).alt(app_alt)
    })
}
