//! Python bindings: the λ-calculus grammar on either engine, and the
//! ordinal format descriptor.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use invsyn::cassette1::{ordinal_spec1, sprintf1, sscanf1};
use invsyn::cassette2::{parse2, pretty2};
use invsyn::lambda::{term_from_json, term_grammar_cassette, term_grammar_stacked, term_to_json};
use invsyn::stacked::{parse3, pretty3};
use invsyn::Value;

fn violation(v: invsyn::Violation) -> PyErr {
    PyValueError::new_err(v.to_string())
}

fn stacked(engine: &str) -> PyResult<bool> {
    match engine {
        "cassette" => Ok(false),
        "stacked" => Ok(true),
        other => Err(PyValueError::new_err(format!("unknown engine {other:?}"))),
    }
}

/// Parse a λ-term; returns its JSON encoding, or None if there is no parse.
#[pyfunction]
#[pyo3(signature = (text, engine = "cassette"))]
fn parse(text: &str, engine: &str) -> PyResult<Option<String>> {
    let term = if stacked(engine)? {
        parse3(&term_grammar_stacked(), text)
    } else {
        parse2(&term_grammar_cassette(), text)
    }
    .map_err(violation)?;
    Ok(term.as_ref().map(term_to_json))
}

/// Print a λ-term given as JSON; None if it is not a printable term.
#[pyfunction]
#[pyo3(signature = (json, engine = "cassette"))]
fn pretty(json: &str, engine: &str) -> PyResult<Option<String>> {
    let Some(term) = term_from_json(json) else {
        return Ok(None);
    };
    if stacked(engine)? {
        pretty3(&term_grammar_stacked(), term)
    } else {
        pretty2(&term_grammar_cassette(), term)
    }
    .map_err(violation)
}

/// `"<n>-th character after <a> is <b>"`
#[pyfunction]
fn sprintf_ordinal(n: i64, a: char, b: char) -> PyResult<String> {
    sprintf1(
        &ordinal_spec1(),
        vec![Value::Int(n), Value::Char(a), Value::Char(b)],
    )
    .map_err(violation)
}

/// The inverse of `sprintf_ordinal`.
#[pyfunction]
fn sscanf_ordinal(text: &str) -> PyResult<(i64, char, char)> {
    let values = sscanf1(&ordinal_spec1(), text).map_err(violation)?;
    match values.as_slice() {
        [Value::Int(n), Value::Char(a), Value::Char(b)] => Ok((*n, *a, *b)),
        _ => Err(PyValueError::new_err("unexpected scan result")),
    }
}

#[pymodule]
fn pyinvsyn(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(parse, m)?)?;
    m.add_function(wrap_pyfunction!(pretty, m)?)?;
    m.add_function(wrap_pyfunction!(sprintf_ordinal, m)?)?;
    m.add_function(wrap_pyfunction!(sscanf_ordinal, m)?)?;
    Ok(())
}
