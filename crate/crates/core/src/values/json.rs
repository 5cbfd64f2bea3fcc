//! JSON encoding of [`Value`].
//!
//! | Value            | JSON                                   |
//! |------------------|----------------------------------------|
//! | `Unit`           | `null`                                 |
//! | `Bool(b)`        | `true` / `false`                       |
//! | `Int(n)`         | integer number                         |
//! | `Char(c)`        | `{"char":"c"}`                         |
//! | `Text(s)`        | `"s"`                                  |
//! | `List(xs)`       | `[x, ...]`                             |
//! | `Pair(a, b)`     | `{"pair":[a,b]}`                       |
//! | `Adt(t, [a])`    | `{"t":a}` when `a` does not encode as an array |
//! | `Adt(t, args)`   | `{"t":[args...]}` otherwise            |
//!
//! Output is compact (no insignificant whitespace). The tags `char` and `pair`
//! are reserved and cannot be used as constructor names.

use serde_json::{Map, Number, Value as Json};
use thiserror::Error;

use super::value::Value;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EncodeError {
    #[error("constructor tag {0:?} is reserved by the JSON encoding")]
    ReservedTag(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DecodeError {
    #[error("malformed JSON: {0}")]
    Syntax(String),
    #[error("number {0} is not a 64-bit integer")]
    Number(String),
    #[error("expected an object with exactly one key, found {0} keys")]
    ObjectShape(usize),
    #[error("\"char\" must hold a one-character string")]
    Char,
    #[error("\"pair\" must hold a two-element array")]
    Pair,
}

pub fn to_json(v: &Value) -> Result<Json, EncodeError> {
    Ok(match v {
        Value::Unit => Json::Null,
        Value::Bool(b) => Json::Bool(*b),
        Value::Int(n) => Json::Number(Number::from(*n)),
        Value::Char(c) => tagged("char", Json::String(c.to_string())),
        Value::Text(s) => Json::String(s.clone()),
        Value::List(items) => Json::Array(items.iter().map(to_json).collect::<Result<_, _>>()?),
        Value::Pair(a, b) => tagged("pair", Json::Array(vec![to_json(a)?, to_json(b)?])),
        Value::Adt(tag, args) => {
            if tag == "char" || tag == "pair" {
                return Err(EncodeError::ReservedTag(tag.clone()));
            }
            let mut encoded: Vec<Json> = args.iter().map(to_json).collect::<Result<_, _>>()?;
            let body = if encoded.len() == 1 && !encoded[0].is_array() {
                encoded.pop().expect("one element")
            } else {
                Json::Array(encoded)
            };
            tagged(tag, body)
        }
    })
}

pub fn to_json_string(v: &Value) -> Result<String, EncodeError> {
    Ok(to_json(v)?.to_string())
}

fn tagged(tag: &str, body: Json) -> Json {
    let mut map = Map::new();
    map.insert(tag.to_owned(), body);
    Json::Object(map)
}

pub fn from_json(j: &Json) -> Result<Value, DecodeError> {
    Ok(match j {
        Json::Null => Value::Unit,
        Json::Bool(b) => Value::Bool(*b),
        Json::Number(n) => Value::Int(
            n.as_i64()
                .ok_or_else(|| DecodeError::Number(n.to_string()))?,
        ),
        Json::String(s) => Value::Text(s.clone()),
        Json::Array(items) => Value::List(items.iter().map(from_json).collect::<Result<_, _>>()?),
        Json::Object(map) => {
            if map.len() != 1 {
                return Err(DecodeError::ObjectShape(map.len()));
            }
            let (tag, body) = map.iter().next().expect("one entry");
            match tag.as_str() {
                "char" => {
                    let s = body.as_str().ok_or(DecodeError::Char)?;
                    let mut chars = s.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => Value::Char(c),
                        _ => return Err(DecodeError::Char),
                    }
                }
                "pair" => match body.as_array().map(Vec::as_slice) {
                    Some([a, b]) => Value::pair(from_json(a)?, from_json(b)?),
                    _ => return Err(DecodeError::Pair),
                },
                _ => {
                    let args = match body {
                        Json::Array(items) => {
                            items.iter().map(from_json).collect::<Result<_, _>>()?
                        }
                        single => vec![from_json(single)?],
                    };
                    Value::Adt(tag.clone(), args)
                }
            }
        }
    })
}

pub fn from_json_str(s: &str) -> Result<Value, DecodeError> {
    let j: Json = serde_json::from_str(s).map_err(|e| DecodeError::Syntax(e.to_string()))?;
    from_json(&j)
}
