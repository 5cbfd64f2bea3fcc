//! The print sides: continuation monads whose continuations are wrapped in
//! the traced comonad, so that an action can emit text by tracing it.

use std::sync::Arc;

use crate::chars::CharClass;
use crate::error::Violation;
use crate::values::{Iso, Stack, Value};

use super::ix::{Alternative, AnsC, AnsL, Descr, IxMonad, Stacked, Stacked2, K2};
use super::res::Res;
use super::traced::Traced;

fn grow<R>(f: impl FnOnce() -> R) -> R {
    stacker::maybe_grow(64 * 1024, 1024 * 1024, f)
}

/// A linear continuation receiving the action's result.
pub type KL = Arc<dyn Fn(Res) -> AnsL + Send + Sync>;
/// A choice continuation receiving the result and the failure answer.
pub type KC = Arc<dyn Fn(Res, AnsC) -> AnsC + Send + Sync>;

/// `ContW w r r' a = ContW { runContW :: w (a -> r) -> r' }` with `w` the
/// traced comonad over `String`.
#[derive(Clone)]
pub struct ContW(Arc<dyn Fn(Traced<KL>) -> AnsL + Send + Sync>);

impl ContW {
    pub fn new(f: impl Fn(Traced<KL>) -> AnsL + Send + Sync + 'static) -> Self {
        ContW(Arc::new(f))
    }

    pub fn run(&self, wk: Traced<KL>) -> AnsL {
        grow(|| (self.0)(wk))
    }

    /// Pop the top of the stack and return it.
    pub fn pop() -> Self {
        ContW::new(|wk| {
            Arc::new(move |stack: Stack| {
                let (a, rest) = stack.pop_value("pop")?;
                wk.extract()(Res::Val(a))(rest)
            })
        })
    }

    /// Emit `text`.
    pub fn emit(text: impl Into<String>) -> Self {
        let text: String = text.into();
        ContW::new(move |wk| wk.trace(&text)(Res::unit()))
    }
}

impl IxMonad for ContW {
    fn ret(x: Res) -> Self {
        ContW::new(move |wk| wk.extract()(x.clone()))
    }

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self {
        ContW::new(move |wk| {
            let f = f.clone();
            self.run(wk.extend(move |wk2: Traced<KL>| -> KL {
                let f = f.clone();
                Arc::new(move |x| f(x).run(wk2.clone()))
            }))
        })
    }

    fn abort(v: Violation) -> Self {
        ContW::new(move |_| {
            let v = v.clone();
            Arc::new(move |_| Err(v.clone()))
        })
    }

    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self {
        ContW::new(move |wk| {
            let make = make.clone();
            Arc::new(move |stack| make().run(wk.clone())(stack))
        })
    }
}

impl Stacked for ContW {
    fn shift_(f: Arc<dyn Fn(AnsL) -> AnsL + Send + Sync>) -> Self {
        ContW::new(move |wk| {
            let f = f.clone();
            Arc::new(move |stack| f(wk.extract()(Res::unit()))(stack))
        })
    }
}

fn popped_char(v: Value, op: &str) -> Result<char, Violation> {
    match v {
        Value::Char(c) => Ok(c),
        other => Err(Violation::Mismatch {
            op: op.to_owned(),
            expected: "Char".into(),
            found: other.kind().into(),
            depth: 1,
        }),
    }
}

impl Descr for ContW {
    fn satisfy(class: CharClass) -> Self {
        ContW::pop().bind(move |x| {
            let op = format!("satisfy {}", class.name());
            let c = match x.into_value().and_then(|v| popped_char(v, &op)) {
                Ok(c) => c,
                Err(e) => return ContW::abort(e),
            };
            if !class.test(c) {
                return ContW::abort(Violation::partial(op, format!("{c:?} does not match")));
            }
            ContW::emit(c).then(ContW::ret(Res::Val(Value::Char(c))))
        })
    }

    fn push_value(v: Value) -> Self {
        super::linear::push(v)
    }

    fn discard() -> Self {
        super::linear::pop_()
    }

    fn map_top(iso: Iso) -> Self {
        super::linear::stack_map(move |s| {
            let (v, rest) = s.pop_value(&format!("iso {}", iso.name()))?;
            Ok(rest.push(iso.to(v)?))
        })
    }

    fn reject(v: Violation) -> Self {
        ContW::abort(v)
    }
}

/// `Cont2W w r r' a = Cont2W { runCont2W :: w (a -> r -> r) -> r' -> r' }`:
/// the continuation also receives a failure answer, and the action itself
/// receives the failure answer of whatever comes after it fails.
#[derive(Clone)]
pub struct Cont2W(Arc<dyn Fn(Traced<KC>, AnsC) -> AnsC + Send + Sync>);

impl Cont2W {
    pub fn new(f: impl Fn(Traced<KC>, AnsC) -> AnsC + Send + Sync + 'static) -> Self {
        Cont2W(Arc::new(f))
    }

    pub fn run(&self, wk: Traced<KC>, fl: AnsC) -> AnsC {
        grow(|| (self.0)(wk, fl))
    }

    /// Pop the top of the stack and return it; a later failure pushes it
    /// back before falling through.
    pub fn pop() -> Self {
        Cont2W::new(|wk, kf| {
            Arc::new(move |stack: Stack| {
                let (a, rest) = stack.pop_value("pop")?;
                let kf = kf.clone();
                let back = a.clone();
                let restore: AnsC = Arc::new(move |s: Stack| kf(s.push(back.clone())));
                wk.extract()(Res::Val(a), restore)(rest)
            })
        })
    }

    pub fn emit(text: impl Into<String>) -> Self {
        let text: String = text.into();
        Cont2W::new(move |wk, kf| wk.trace(&text)(Res::unit(), kf))
    }
}

impl IxMonad for Cont2W {
    fn ret(x: Res) -> Self {
        Cont2W::new(move |wk, fl| wk.extract()(x.clone(), fl))
    }

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self {
        Cont2W::new(move |wk, fl| {
            let f = f.clone();
            let wk = wk.extend(move |wk2: Traced<KC>| -> KC {
                let f = f.clone();
                Arc::new(move |x, fl2| f(x).run(wk2.clone(), fl2))
            });
            self.run(wk, fl)
        })
    }

    fn abort(v: Violation) -> Self {
        Cont2W::new(move |_, _| {
            let v = v.clone();
            Arc::new(move |_| Err(v.clone()))
        })
    }

    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self {
        Cont2W::new(move |wk, fl| {
            let make = make.clone();
            Arc::new(move |stack| make().run(wk.clone(), fl.clone())(stack))
        })
    }
}

impl Alternative for Cont2W {
    fn empty() -> Self {
        Cont2W::new(|_, fl| fl)
    }

    fn alt(self, other: Self) -> Self {
        Cont2W::new(move |wk, fl| {
            let other = other.clone();
            let wk2 = wk.clone();
            // the second branch is only built if the first one fails
            let second: AnsC = Arc::new(move |stack| other.run(wk2.clone(), fl.clone())(stack));
            self.run(wk, second)
        })
    }
}

impl Stacked2 for Cont2W {
    fn shift2_(f: Arc<dyn Fn(K2, AnsC) -> AnsC + Send + Sync>) -> Self {
        Cont2W::new(move |wk, kf| {
            let f = f.clone();
            Arc::new(move |stack| {
                let wk = wk.clone();
                let k: K2 = Arc::new(move |fl| wk.extract()(Res::unit(), fl));
                f(k, kf.clone())(stack)
            })
        })
    }
}

impl Descr for Cont2W {
    fn satisfy(class: CharClass) -> Self {
        Cont2W::pop().bind(move |x| {
            let op = format!("satisfy {}", class.name());
            let c = match x.into_value().and_then(|v| popped_char(v, &op)) {
                Ok(c) => c,
                Err(e) => return Cont2W::abort(e),
            };
            if !class.test(c) {
                return Cont2W::empty();
            }
            Cont2W::emit(c).then(Cont2W::ret(Res::Val(Value::Char(c))))
        })
    }

    fn push_value(v: Value) -> Self {
        super::choice::push(v)
    }

    fn discard() -> Self {
        super::choice::pop_()
    }

    fn map_top(iso: Iso) -> Self {
        let op = format!("iso {}", iso.name());
        let back = iso.clone();
        let op2 = op.clone();
        super::choice::stack_guard(
            move |s| {
                let (v, rest) = s.pop_value(&op)?;
                match iso.to(v) {
                    Ok(w) => Ok(Some(rest.push(w))),
                    Err(Violation::Domain { .. }) => Ok(None),
                    Err(e) => Err(e),
                }
            },
            move |s| {
                let (w, rest) = s.pop_value(&op2)?;
                Ok(rest.push(back.from(w)?))
            },
        )
    }

    fn reject(v: Violation) -> Self {
        match v {
            Violation::Domain { .. } => Cont2W::empty(),
            v => Cont2W::abort(v),
        }
    }
}
