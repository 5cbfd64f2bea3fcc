use std::fmt;
use std::sync::Arc;

use super::value::Value;
use crate::error::Violation;

type MapFn = Arc<dyn Fn(Value) -> Result<Value, Violation> + Send + Sync>;
type PreviewFn = Arc<dyn Fn(&Value) -> Option<Vec<Value>> + Send + Sync>;
type ReviewFn = Arc<dyn Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync>;

/// A pair of mutually inverse maps. `to` runs on the print side, `from` on
/// the parse side.
///
/// Both directions are checked at runtime. A value of the wrong kind is a
/// [`Violation::Mismatch`]; a value of the right kind outside the documented
/// domain is a [`Violation::Domain`].
#[derive(Clone)]
pub struct Iso {
    name: Arc<str>,
    to: MapFn,
    from: MapFn,
}

impl Iso {
    pub fn new(
        name: impl Into<Arc<str>>,
        to: impl Fn(Value) -> Result<Value, Violation> + Send + Sync + 'static,
        from: impl Fn(Value) -> Result<Value, Violation> + Send + Sync + 'static,
    ) -> Iso {
        Iso {
            name: name.into(),
            to: Arc::new(to),
            from: Arc::new(from),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn to(&self, v: Value) -> Result<Value, Violation> {
        (self.to)(v)
    }

    pub fn from(&self, v: Value) -> Result<Value, Violation> {
        (self.from)(v)
    }

    /// The iso running the other way round.
    pub fn inverse(&self) -> Iso {
        Iso {
            name: format!("inverse {}", self.name).into(),
            to: self.from.clone(),
            from: self.to.clone(),
        }
    }
}

impl fmt::Debug for Iso {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Iso({})", self.name)
    }
}

fn mismatch(op: &str, expected: &str, found: &Value) -> Violation {
    Violation::Mismatch {
        op: op.to_owned(),
        expected: expected.to_owned(),
        found: found.to_string(),
        depth: 0,
    }
}

pub fn identity_iso() -> Iso {
    Iso::new("id", Ok, Ok)
}

/// `Int` in `0..=9` to its decimal digit `Char`.
pub fn digit_iso() -> Iso {
    Iso::new(
        "digit",
        |v| match v {
            Value::Int(n) if (0..=9).contains(&n) => Ok(Value::Char(char::from(b'0' + n as u8))),
            Value::Int(n) => Err(Violation::domain(
                "digit",
                format!("{n} is not a single digit"),
            )),
            other => Err(mismatch("digit", "Int", &other)),
        },
        |v| match v {
            Value::Char(c) if c.is_ascii_digit() => Ok(Value::Int(i64::from(c as u8 - b'0'))),
            Value::Char(c) => Err(Violation::domain("digit", format!("{c:?} is not a digit"))),
            other => Err(mismatch("digit", "Char", &other)),
        },
    )
}

/// `Int` to the `List` of `Char`s of its decimal rendering, like `show`
/// and `read`.
pub fn decimal_iso() -> Iso {
    Iso::new(
        "decimal",
        |v| match v {
            Value::Int(n) => Ok(Value::chars(&n.to_string())),
            other => Err(mismatch("decimal", "Int", &other)),
        },
        |v| {
            let text = chars_to_string("decimal", &v)?;
            text.parse::<i64>()
                .map(Value::Int)
                .map_err(|e| Violation::domain("decimal", format!("{text:?}: {e}")))
        },
    )
}

/// `Text` to the `List` of its `Char`s.
pub fn text_chars_iso() -> Iso {
    Iso::new(
        "text",
        |v| match v {
            Value::Text(s) => Ok(Value::chars(&s)),
            other => Err(mismatch("text", "Text", &other)),
        },
        |v| chars_to_string("text", &v).map(Value::Text),
    )
}

fn chars_to_string(op: &str, v: &Value) -> Result<String, Violation> {
    let Value::List(items) = v else {
        return Err(mismatch(op, "List of Char", v));
    };
    items
        .iter()
        .map(|item| item.as_char().ok_or_else(|| mismatch(op, "Char", item)))
        .collect()
}

/// Split a `Pair` into its two components: the value-level uncurrying.
pub fn pair_split(v: Value) -> Result<[Value; 2], Violation> {
    match v {
        Value::Pair(a, b) => Ok([*a, *b]),
        other => Err(mismatch("pair", "Pair", &other)),
    }
}

/// Rebuild a `Pair` from its components: the value-level currying.
pub fn pair_join([a, b]: [Value; 2]) -> Value {
    Value::pair(a, b)
}

/// `Pair(a, b)` to the two-element `List [a, b]`.
pub fn pair_iso() -> Iso {
    Iso::new(
        "pair",
        |v| pair_split(v).map(Value::list),
        |v| match v {
            Value::List(items) if items.len() == 2 => {
                let mut it = items.into_iter();
                let a = it.next().expect("two items");
                let b = it.next().expect("two items");
                Ok(pair_join([a, b]))
            }
            other => Err(mismatch("pair", "two-element List", &other)),
        },
    )
}

/// A constructor-focused optic: `review` injects `arity` components into the
/// sum type and always succeeds, `preview` projects them back out and fails
/// on the other constructors.
#[derive(Clone)]
pub struct Prism {
    tag: Arc<str>,
    arity: usize,
    preview: PreviewFn,
    review: ReviewFn,
}

impl Prism {
    /// `review` is only called with exactly `arity` components.
    pub fn new(
        tag: impl Into<Arc<str>>,
        arity: usize,
        preview: impl Fn(&Value) -> Option<Vec<Value>> + Send + Sync + 'static,
        review: impl Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync + 'static,
    ) -> Prism {
        Prism {
            tag: tag.into(),
            arity,
            preview: Arc::new(preview),
            review: Arc::new(review),
        }
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn preview(&self, v: &Value) -> Option<Vec<Value>> {
        (self.preview)(v)
    }

    pub fn review(&self, components: Vec<Value>) -> Result<Value, Violation> {
        if components.len() != self.arity {
            return Err(Violation::Arity {
                expected: self.arity,
                found: components.len(),
            });
        }
        (self.review)(components)
    }
}

impl fmt::Debug for Prism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Prism({}/{})", self.tag, self.arity)
    }
}

/// The prism for constructor `tag` of a generically encoded sum type.
pub fn adt_prism(tag: &str, arity: usize) -> Prism {
    let owned = tag.to_owned();
    let matched = tag.to_owned();
    Prism::new(
        tag,
        arity,
        move |v| match v {
            Value::Adt(t, args) if *t == matched && args.len() == arity => Some(args.clone()),
            _ => None,
        },
        move |args| Ok(Value::Adt(owned.clone(), args)),
    )
}

pub fn cons_prism() -> Prism {
    Prism::new(
        ":",
        2,
        |v| match v {
            Value::List(items) if !items.is_empty() => {
                let mut tail = items.clone();
                let head = tail.pop_front().expect("nonempty");
                Some(vec![head, Value::List(tail)])
            }
            _ => None,
        },
        |args| {
            let [head, tail]: [Value; 2] = args.try_into().expect("arity checked");
            match tail {
                Value::List(mut items) => {
                    items.push_front(head);
                    Ok(Value::List(items))
                }
                other => Err(mismatch(":", "List", &other)),
            }
        },
    )
}

pub fn nil_prism() -> Prism {
    Prism::new(
        "[]",
        0,
        |v| match v {
            Value::List(items) if items.is_empty() => Some(Vec::new()),
            _ => None,
        },
        |_| Ok(Value::list([])),
    )
}

fn bool_prism(flag: bool) -> Prism {
    Prism::new(
        if flag { "True" } else { "False" },
        1,
        move |v| match v {
            Value::Bool(b) if *b == flag => Some(vec![Value::Unit]),
            _ => None,
        },
        move |args| match &args[0] {
            Value::Unit => Ok(Value::Bool(flag)),
            other => Err(mismatch(if flag { "True" } else { "False" }, "()", other)),
        },
    )
}

/// `Bool` focused on `true`, with a `()` component.
pub fn true_prism() -> Prism {
    bool_prism(true)
}

pub fn false_prism() -> Prism {
    bool_prism(false)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn adt_prism_examples() {
        let var = adt_prism("Var", 1);
        let x = Value::text("x");
        assert_eq!(
            var.review(vec![x.clone()]).unwrap(),
            Value::adt("Var", [x.clone()])
        );
        let app = Value::adt("App", [Value::Unit, Value::Unit]);
        assert_eq!(var.preview(&app), None);
        let abs = adt_prism("Abs", 2);
        let t = Value::adt("Abs", [x.clone(), Value::adt("Var", [x.clone()])]);
        assert_eq!(
            abs.preview(&t),
            Some(vec![x.clone(), Value::adt("Var", [x])])
        );
        assert!(matches!(
            abs.review(vec![Value::Unit]),
            Err(Violation::Arity {
                expected: 2,
                found: 1
            })
        ));
    }

    #[test]
    fn list_prisms() {
        let xs = Value::list([Value::Int(1), Value::Int(2), Value::Int(3)]);
        assert_eq!(
            cons_prism().preview(&xs),
            Some(vec![
                Value::Int(1),
                Value::list([Value::Int(2), Value::Int(3)])
            ])
        );
        assert_eq!(cons_prism().preview(&Value::list([])), None);
        assert_eq!(nil_prism().preview(&Value::list([])), Some(vec![]));
        assert_eq!(nil_prism().preview(&xs), None);
        assert!(cons_prism()
            .review(vec![Value::Int(1), Value::Int(2)])
            .is_err());
    }

    #[test]
    fn pair_witness() {
        let p = Value::pair(Value::Int(1), Value::Char('a'));
        assert_eq!(
            pair_split(p.clone()).unwrap(),
            [Value::Int(1), Value::Char('a')]
        );
        assert_eq!(pair_join([Value::Int(1), Value::Char('a')]), p);
        let iso = pair_iso();
        assert_eq!(iso.from(iso.to(p.clone()).unwrap()).unwrap(), p);
        assert!(pair_split(Value::Unit).is_err());
    }

    #[test]
    fn shipped_isos_round_trip() {
        let digit = digit_iso();
        for n in 0..=9 {
            let c = digit.to(Value::Int(n)).unwrap();
            assert_eq!(digit.from(c).unwrap(), Value::Int(n));
        }
        assert!(matches!(
            digit.to(Value::Int(10)),
            Err(Violation::Domain { .. })
        ));
        let decimal = decimal_iso();
        for n in [0, 7, 45, -5, i64::MAX, i64::MIN] {
            let s = decimal.to(Value::Int(n)).unwrap();
            assert_eq!(decimal.from(s).unwrap(), Value::Int(n));
        }
        assert!(decimal.from(Value::chars("99999999999999999999")).is_err());
        let text = text_chars_iso();
        assert_eq!(text.to(Value::text("λx")).unwrap(), Value::chars("λx"));
        assert_eq!(text.from(Value::chars("ab")).unwrap(), Value::text("ab"));
    }
}
