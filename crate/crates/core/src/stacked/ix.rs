use std::sync::{Arc, OnceLock};

use crate::chars::CharClass;
use crate::error::Violation;
use crate::values::{Iso, Stack, Value};

use super::res::Res;

/// Answer of a linear print action: consume the stack, produce the text.
pub type AnsL = Arc<dyn Fn(Stack) -> Result<String, Violation> + Send + Sync>;
/// Answer of a choice print action; `None` is failure.
pub type AnsC = Arc<dyn Fn(Stack) -> Result<Option<String>, Violation> + Send + Sync>;
/// A captured two-continuation context: give it a failure answer, get back
/// the answer of the rest of the printer.
pub type K2 = Arc<dyn Fn(AnsC) -> AnsC + Send + Sync>;

/// Indexed monads. The stack indices are not tracked by the Rust types;
/// a mismatch surfaces at run time as a [`Violation`].
pub trait IxMonad: Clone + Send + Sync + Sized + 'static {
    fn ret(x: Res) -> Self;

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self;

    /// Stop with a violation when run.
    fn abort(v: Violation) -> Self;

    /// Build the action only when it runs. Used to tie recursive knots.
    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self;

    fn bind(self, f: impl Fn(Res) -> Self + Send + Sync + 'static) -> Self {
        self.bind_fn(Arc::new(f))
    }

    fn map_res(self, f: impl Fn(Res) -> Result<Res, Violation> + Send + Sync + 'static) -> Self {
        self.bind(move |x| match f(x) {
            Ok(y) => Self::ret(y),
            Err(e) => Self::abort(e),
        })
    }

    /// `fmap` over a value result.
    fn map(self, f: impl Fn(Value) -> Result<Value, Violation> + Send + Sync + 'static) -> Self {
        self.map_res(move |x| f(x.into_value()?).map(Res::Val))
    }

    /// `mf <*> ma = mf >>= \f -> ma >>= \a -> return (f a)`
    fn ap(self, arg: Self) -> Self {
        self.bind(move |f| {
            arg.clone().bind(move |a| match f.apply(a) {
                Ok(r) => Self::ret(r),
                Err(e) => Self::abort(e),
            })
        })
    }

    /// `<*`: keep the first result.
    fn skip(self, other: Self) -> Self {
        self.bind(move |a| other.clone().bind(move |_| Self::ret(a.clone())))
    }

    /// `*>`: keep the second result.
    fn then(self, other: Self) -> Self {
        self.bind(move |_| other.clone())
    }
}

/// Monoidal choice at every index.
pub trait Alternative: IxMonad {
    fn empty() -> Self;
    fn alt(self, other: Self) -> Self;
}

/// Stack manipulation with one continuation.
pub trait Stacked: IxMonad {
    /// `shift_`: transform the answer of the rest of the printer.
    fn shift_(f: Arc<dyn Fn(AnsL) -> AnsL + Send + Sync>) -> Self;
}

/// Stack manipulation with a success and a failure continuation.
pub trait Stacked2: IxMonad {
    /// `shift_ :: ((r -> r) -> r' -> m k r' k) -> m r r' ()`: `f` receives
    /// the success context and the incoming failure answer.
    fn shift2_(f: Arc<dyn Fn(K2, AnsC) -> AnsC + Send + Sync>) -> Self;
}

/// Character-level primitives and stack operations every engine side
/// supplies in its own way.
pub trait Descr: IxMonad {
    /// Print: pop a char, check it, emit it. Parse: consume a matching char.
    fn satisfy(class: CharClass) -> Self;
    fn push_value(v: Value) -> Self;
    fn discard() -> Self;
    /// Print: replace the top of the stack with its image under `iso`.
    fn map_top(iso: Iso) -> Self;
    /// Fail in whatever way the engine fails: a violation, or for a
    /// choice engine a recoverable failure when `v` is a domain error.
    fn reject(v: Violation) -> Self;
}

/// The product of two indexed monads, run in lockstep.
#[derive(Clone)]
pub struct Both<P, Q>(pub P, pub Q);

impl<P: IxMonad, Q: IxMonad> IxMonad for Both<P, Q> {
    fn ret(x: Res) -> Self {
        Both(P::ret(x.clone()), Q::ret(x))
    }

    fn bind_fn(self, f: Arc<dyn Fn(Res) -> Self + Send + Sync>) -> Self {
        let g = f.clone();
        Both(self.0.bind(move |x| f(x).0), self.1.bind(move |x| g(x).1))
    }

    fn abort(v: Violation) -> Self {
        Both(P::abort(v.clone()), Q::abort(v))
    }

    fn delay(make: Arc<dyn Fn() -> Self + Send + Sync>) -> Self {
        let m = make.clone();
        Both(
            P::delay(Arc::new(move || m().0)),
            Q::delay(Arc::new(move || make().1)),
        )
    }
}

impl<P: Alternative, Q: Alternative> Alternative for Both<P, Q> {
    fn empty() -> Self {
        Both(P::empty(), Q::empty())
    }

    fn alt(self, other: Self) -> Self {
        Both(self.0.alt(other.0), self.1.alt(other.1))
    }
}

impl<P: Stacked, Q: Stacked> Stacked for Both<P, Q> {
    fn shift_(f: Arc<dyn Fn(AnsL) -> AnsL + Send + Sync>) -> Self {
        Both(P::shift_(f.clone()), Q::shift_(f))
    }
}

impl<P: Stacked2, Q: Stacked2> Stacked2 for Both<P, Q> {
    fn shift2_(f: Arc<dyn Fn(K2, AnsC) -> AnsC + Send + Sync>) -> Self {
        Both(P::shift2_(f.clone()), Q::shift2_(f))
    }
}

impl<P: Descr, Q: Descr> Descr for Both<P, Q> {
    fn satisfy(class: CharClass) -> Self {
        Both(P::satisfy(class.clone()), Q::satisfy(class))
    }

    fn push_value(v: Value) -> Self {
        Both(P::push_value(v.clone()), Q::push_value(v))
    }

    fn discard() -> Self {
        Both(P::discard(), Q::discard())
    }

    fn map_top(iso: Iso) -> Self {
        Both(P::map_top(iso.clone()), Q::map_top(iso))
    }

    fn reject(v: Violation) -> Self {
        Both(P::reject(v.clone()), Q::reject(v))
    }
}

/// The least fixed point of `body`. The recursive occurrence holds only a
/// weak reference to the result, so dropping the result frees the knot.
pub fn fix<M: IxMonad>(body: impl FnOnce(M) -> M) -> M {
    let cell: Arc<OnceLock<M>> = Arc::new(OnceLock::new());
    let weak = Arc::downgrade(&cell);
    let me = M::delay(Arc::new(move || {
        match weak.upgrade().and_then(|c| c.get().cloned()) {
            Some(m) => m,
            None => M::abort(Violation::partial(
                "fix",
                "recursive action outlived its definition",
            )),
        }
    }));
    let _ = cell.set(body(me));
    M::delay(Arc::new(move || {
        cell.get().expect("knot tied before use").clone()
    }))
}
