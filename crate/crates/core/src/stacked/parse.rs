//! The parse sides: plain state monads over the input position. Stack
//! indices are phantom here, so every stack operation is `return ()`.

use std::sync::Arc;

use crate::chars::CharClass;
use crate::error::Violation;
use crate::values::{Iso, Value};

use super::ix::{Alternative, AnsC, AnsL, Descr, IxMonad, Stacked, Stacked2, K2};
use super::res::Res;

type StepL = Arc<dyn Fn(&str, usize) -> Result<(Res, usize), Violation> + Send + Sync>;
type StepC = Arc<dyn Fn(&str, usize) -> Result<Option<(Res, usize)>, Violation> + Send + Sync>;

/// The linear parser. A mismatch is a violation, as in a partial parser.
#[derive(Clone)]
pub struct Fwd(StepL);

impl Fwd {
    pub fn new(
        f: impl Fn(&str, usize) -> Result<(Res, usize), Violation> + Send + Sync + 'static,
    ) -> Self {
        Fwd(Arc::new(f))
    }

    /// Run from byte offset `pos`, returning the result and the new offset.
    pub fn run(&self, input: &str, pos: usize) -> Result<(Res, usize), Violation> {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || (self.0)(input, pos))
    }
}

impl IxMonad for Fwd {
    fn ret(x: Res) -> Self {
        Fwd::new(move |_, pos| Ok((x.clone(), pos)))
    }

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self {
        Fwd::new(move |input, pos| {
            let (x, pos) = self.run(input, pos)?;
            f(x).run(input, pos)
        })
    }

    fn abort(v: Violation) -> Self {
        Fwd::new(move |_, _| Err(v.clone()))
    }

    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self {
        Fwd::new(move |input, pos| make().run(input, pos))
    }
}

impl Stacked for Fwd {
    fn shift_(_f: Arc<dyn Fn(AnsL) -> AnsL + Send + Sync>) -> Self {
        Fwd::ret(Res::unit())
    }
}

impl Descr for Fwd {
    fn satisfy(class: CharClass) -> Self {
        Fwd::new(move |input, pos| match input[pos..].chars().next() {
            Some(c) if class.test(c) => Ok((Res::Val(Value::Char(c)), pos + c.len_utf8())),
            found => Err(Violation::partial(
                format!("satisfy {}", class.name()),
                match found {
                    Some(c) => format!("unexpected {c:?} at offset {pos}"),
                    None => "unexpected end of input".to_owned(),
                },
            )),
        })
    }

    fn push_value(_v: Value) -> Self {
        Fwd::ret(Res::unit())
    }

    fn discard() -> Self {
        Fwd::ret(Res::unit())
    }

    fn map_top(_iso: Iso) -> Self {
        Fwd::ret(Res::unit())
    }

    fn reject(v: Violation) -> Self {
        Fwd::abort(v)
    }
}

/// The backtracking parser: `None` is failure, and choice retries the
/// second branch from the original position.
#[derive(Clone)]
pub struct FwdMaybe(StepC);

impl FwdMaybe {
    pub fn new(
        f: impl Fn(&str, usize) -> Result<Option<(Res, usize)>, Violation> + Send + Sync + 'static,
    ) -> Self {
        FwdMaybe(Arc::new(f))
    }

    pub fn run(&self, input: &str, pos: usize) -> Result<Option<(Res, usize)>, Violation> {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || (self.0)(input, pos))
    }
}

impl IxMonad for FwdMaybe {
    fn ret(x: Res) -> Self {
        FwdMaybe::new(move |_, pos| Ok(Some((x.clone(), pos))))
    }

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self {
        FwdMaybe::new(move |input, pos| match self.run(input, pos)? {
            Some((x, pos)) => f(x).run(input, pos),
            None => Ok(None),
        })
    }

    fn abort(v: Violation) -> Self {
        FwdMaybe::new(move |_, _| Err(v.clone()))
    }

    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self {
        FwdMaybe::new(move |input, pos| make().run(input, pos))
    }
}

impl Alternative for FwdMaybe {
    fn empty() -> Self {
        FwdMaybe::new(|_, _| Ok(None))
    }

    fn alt(self, other: Self) -> Self {
        FwdMaybe::new(move |input, pos| match self.run(input, pos)? {
            Some(hit) => Ok(Some(hit)),
            None => other.run(input, pos),
        })
    }
}

impl Stacked2 for FwdMaybe {
    fn shift2_(_f: Arc<dyn Fn(K2, AnsC) -> AnsC + Send + Sync>) -> Self {
        FwdMaybe::ret(Res::unit())
    }
}

impl Descr for FwdMaybe {
    fn satisfy(class: CharClass) -> Self {
        FwdMaybe::new(move |input, pos| {
            Ok(match input[pos..].chars().next() {
                Some(c) if class.test(c) => Some((Res::Val(Value::Char(c)), pos + c.len_utf8())),
                _ => None,
            })
        })
    }

    fn push_value(_v: Value) -> Self {
        FwdMaybe::ret(Res::unit())
    }

    fn discard() -> Self {
        FwdMaybe::ret(Res::unit())
    }

    fn map_top(_iso: Iso) -> Self {
        FwdMaybe::ret(Res::unit())
    }

    fn reject(v: Violation) -> Self {
        match v {
            Violation::Domain { .. } => FwdMaybe::empty(),
            v => FwdMaybe::abort(v),
        }
    }
}
