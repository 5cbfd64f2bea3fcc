use std::fmt;
use std::sync::Arc;

use crate::error::Violation;
use crate::values::Value;

type Body = Arc<dyn Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync>;

/// A curried function of `arity` values, possibly partially applied. This is
/// what leads return (`return (review l)`) and what `ap` consumes.
#[derive(Clone)]
pub struct Fun {
    name: Arc<str>,
    arity: usize,
    args: Vec<Value>,
    body: Body,
}

impl Fun {
    /// `arity` must be at least one; nullary results are plain values.
    pub fn new(
        name: impl Into<Arc<str>>,
        arity: usize,
        body: impl Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync + 'static,
    ) -> Fun {
        assert!(arity >= 1, "a nullary function is just a value");
        Fun {
            name: name.into(),
            arity,
            args: Vec::new(),
            body: Arc::new(body),
        }
    }

    pub fn unary(
        name: impl Into<Arc<str>>,
        body: impl Fn(Value) -> Result<Value, Violation> + Send + Sync + 'static,
    ) -> Fun {
        Fun::new(name, 1, move |mut args| {
            body(args.pop().expect("one argument"))
        })
    }

    /// The tuple constructor of the given width: `(,)` builds a `Pair`.
    pub fn tuple(width: usize) -> Fun {
        assert!(width >= 2);
        let name = format!("({})", ",".repeat(width - 1));
        Fun::new(name, width, move |args| {
            Ok(if width == 2 {
                let [a, b]: [Value; 2] = args.try_into().expect("two arguments");
                Value::pair(a, b)
            } else {
                Value::tuple(args)
            })
        })
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn apply(&self, arg: Value) -> Result<Res, Violation> {
        let mut next = self.clone();
        next.args.push(arg);
        if next.args.len() == next.arity {
            (next.body)(next.args).map(Res::Val)
        } else {
            Ok(Res::Fun(next))
        }
    }
}

impl fmt::Debug for Fun {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "<{}/{} applied to {:?}>",
            self.name, self.arity, self.args
        )
    }
}

impl PartialEq for Fun {
    fn eq(&self, other: &Self) -> bool {
        self.name == other.name && self.arity == other.arity && self.args == other.args
    }
}

/// The monadic result of an action: a value, or a function waiting for
/// more arguments.
#[derive(Debug, Clone, PartialEq)]
pub enum Res {
    Val(Value),
    Fun(Fun),
}

impl Res {
    pub fn unit() -> Res {
        Res::Val(Value::Unit)
    }

    pub fn apply(&self, arg: Res) -> Result<Res, Violation> {
        let arg = arg.into_value()?;
        match self {
            Res::Fun(f) => f.apply(arg),
            Res::Val(v) => Err(Violation::partial("ap", format!("{v} is not a function"))),
        }
    }

    pub fn into_value(self) -> Result<Value, Violation> {
        match self {
            Res::Val(v) => Ok(v),
            Res::Fun(f) => Err(Violation::partial(
                "result",
                format!("{} is missing arguments", f.name()),
            )),
        }
    }
}

impl From<Value> for Res {
    fn from(v: Value) -> Self {
        Res::Val(v)
    }
}

impl From<Fun> for Res {
    fn from(f: Fun) -> Self {
        Res::Fun(f)
    }
}
