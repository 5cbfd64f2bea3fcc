use std::fmt;

use im::Vector;

/// The universal datum flowing through descriptors and stacks.
///
/// User sum types are encoded as [`Value::Adt`]: a constructor tag plus its
/// ordered components.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Value {
    Unit,
    Bool(bool),
    Int(i64),
    Char(char),
    Text(String),
    List(Vector<Value>),
    Pair(Box<Value>, Box<Value>),
    Adt(String, Vec<Value>),
}

impl Value {
    pub fn text(s: impl Into<String>) -> Value {
        Value::Text(s.into())
    }

    pub fn list(items: impl IntoIterator<Item = Value>) -> Value {
        Value::List(items.into_iter().collect())
    }

    pub fn pair(first: Value, second: Value) -> Value {
        Value::Pair(Box::new(first), Box::new(second))
    }

    /// A tuple of three or more components, tagged like Haskell's `(,,)`.
    pub fn tuple(items: impl IntoIterator<Item = Value>) -> Value {
        let items: Vec<Value> = items.into_iter().collect();
        assert!(items.len() >= 3, "use Value::pair for two components");
        Value::Adt(format!("({})", ",".repeat(items.len() - 1)), items)
    }

    pub fn adt(tag: impl Into<String>, args: impl IntoIterator<Item = Value>) -> Value {
        Value::Adt(tag.into(), args.into_iter().collect())
    }

    /// A list of `Char`s spelling `s`.
    pub fn chars(s: &str) -> Value {
        Value::List(s.chars().map(Value::Char).collect())
    }

    /// Short name of the variant, used in diagnostics.
    pub fn kind(&self) -> &'static str {
        match self {
            Value::Unit => "Unit",
            Value::Bool(_) => "Bool",
            Value::Int(_) => "Int",
            Value::Char(_) => "Char",
            Value::Text(_) => "Text",
            Value::List(_) => "List",
            Value::Pair(..) => "Pair",
            Value::Adt(..) => "Adt",
        }
    }

    pub fn as_char(&self) -> Option<char> {
        match self {
            Value::Char(c) => Some(*c),
            _ => None,
        }
    }

    pub fn as_int(&self) -> Option<i64> {
        match self {
            Value::Int(n) => Some(*n),
            _ => None,
        }
    }

    pub fn as_text(&self) -> Option<&str> {
        match self {
            Value::Text(s) => Some(s),
            _ => None,
        }
    }

    pub fn as_list(&self) -> Option<&Vector<Value>> {
        match self {
            Value::List(items) => Some(items),
            _ => None,
        }
    }
}

impl From<bool> for Value {
    fn from(b: bool) -> Self {
        Value::Bool(b)
    }
}

impl From<i64> for Value {
    fn from(n: i64) -> Self {
        Value::Int(n)
    }
}

impl From<char> for Value {
    fn from(c: char) -> Self {
        Value::Char(c)
    }
}

impl From<&str> for Value {
    fn from(s: &str) -> Self {
        Value::Text(s.to_owned())
    }
}

impl From<String> for Value {
    fn from(s: String) -> Self {
        Value::Text(s)
    }
}

impl From<()> for Value {
    fn from(_: ()) -> Self {
        Value::Unit
    }
}

fn is_plain_tag(tag: &str) -> bool {
    let mut chars = tag.chars();
    matches!(chars.next(), Some(c) if c.is_alphabetic() || c == '_')
        && chars.all(|c| c.is_alphanumeric() || c == '_')
}

/// Width of a tuple constructor tag such as `(,,)`. Pairs have their own
/// variant, so only widths of three and more count.
pub(crate) fn tuple_width(tag: &str) -> Option<usize> {
    let commas = tag.strip_prefix('(')?.strip_suffix(')')?;
    (commas.len() >= 2 && commas.bytes().all(|b| b == b',')).then(|| commas.len() + 1)
}

/// Canonical rendering. Two values render the same iff they are equal.
impl fmt::Display for Value {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Value::Unit => f.write_str("()"),
            Value::Bool(b) => write!(f, "{b}"),
            Value::Int(n) => write!(f, "{n}"),
            Value::Char(c) => write!(f, "{c:?}"),
            Value::Text(s) => write!(f, "{s:?}"),
            Value::List(items) => {
                f.write_str("[")?;
                for (i, item) in items.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{item}")?;
                }
                f.write_str("]")
            }
            Value::Pair(a, b) => write!(f, "({a}, {b})"),
            Value::Adt(tag, args) if tuple_width(tag) == Some(args.len()) => {
                f.write_str("(")?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
            Value::Adt(tag, args) => {
                if is_plain_tag(tag) {
                    f.write_str(tag)?;
                } else {
                    write!(f, "{tag:?}")?;
                }
                f.write_str("(")?;
                for (i, arg) in args.iter().enumerate() {
                    if i > 0 {
                        f.write_str(", ")?;
                    }
                    write!(f, "{arg}")?;
                }
                f.write_str(")")
            }
        }
    }
}
