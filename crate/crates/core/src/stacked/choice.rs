//! Stack operations for the two-continuation `shift_`. Each one also says
//! how to undo itself when a later alternative fails.

use std::sync::Arc;

use crate::error::Violation;
use crate::values::{Stack, Value};

use super::ix::{AnsC, Stacked2, K2};

/// Push `v`; on failure pop it again.
pub fn push<M: Stacked2>(v: Value) -> M {
    M::shift2_(Arc::new(move |k: K2, kf: AnsC| {
        let undo: AnsC = Arc::new(move |s: Stack| kf(s.pop_value("push")?.1));
        let ans = k(undo);
        let v = v.clone();
        Arc::new(move |s: Stack| ans(s.push(v.clone())))
    }))
}

/// Drop the top; on failure put it back.
pub fn pop_<M: Stacked2>() -> M {
    M::shift2_(Arc::new(|k: K2, kf: AnsC| {
        Arc::new(move |s: Stack| {
            let (a, rest) = s.pop_value("pop_")?;
            let kf = kf.clone();
            k(Arc::new(move |s2: Stack| kf(s2.push(a.clone()))))(rest)
        })
    }))
}

/// `stack f u = shift_ \k k' -> return (f k' (k (u k')))`: `f` gets the
/// failure answer and the success answer; `u` turns the failure answer
/// into one that first unrolls the rewrite.
pub fn stack<M: Stacked2>(
    f: impl Fn(AnsC, AnsC) -> AnsC + Send + Sync + 'static,
    u: impl Fn(AnsC) -> AnsC + Send + Sync + 'static,
) -> M {
    M::shift2_(Arc::new(move |k: K2, kf: AnsC| f(kf.clone(), k(u(kf)))))
}

/// A `stack` built from a guarded prefix rewrite: `rewrite` returns `None`
/// to fall through to the failure answer; `unroll` restores the original
/// stack from the rewritten one.
pub fn stack_guard<M: Stacked2>(
    rewrite: impl Fn(Stack) -> Result<Option<Stack>, Violation> + Send + Sync + 'static,
    unroll: impl Fn(Stack) -> Result<Stack, Violation> + Send + Sync + 'static,
) -> M {
    let rewrite = Arc::new(rewrite);
    let unroll = Arc::new(unroll);
    stack(
        move |kf: AnsC, k: AnsC| {
            let rewrite = rewrite.clone();
            Arc::new(move |s: Stack| match rewrite(s.clone())? {
                Some(s2) => k(s2),
                None => kf(s),
            })
        },
        move |kf: AnsC| {
            let unroll = unroll.clone();
            Arc::new(move |s: Stack| kf(unroll(s)?))
        },
    )
}
