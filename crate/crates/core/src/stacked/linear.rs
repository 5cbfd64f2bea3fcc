//! Stack operations for the single-continuation `shift_`.

use std::sync::Arc;

use crate::error::Violation;
use crate::values::{Stack, Value};

use super::ix::{AnsL, Stacked};

/// `push a = shift_ \k -> return (k a)`
pub fn push<M: Stacked>(v: Value) -> M {
    M::shift_(Arc::new(move |k: AnsL| {
        let v = v.clone();
        Arc::new(move |s: Stack| k(s.push(v.clone())))
    }))
}

/// `pop_ = shift_ \k -> return (\_a -> k)`
pub fn pop_<M: Stacked>() -> M {
    M::shift_(Arc::new(|k: AnsL| {
        Arc::new(move |s: Stack| k(s.pop_value("pop_")?.1))
    }))
}

/// `stack f = shift_ \k -> return (f k)`
pub fn stack<M: Stacked>(f: impl Fn(AnsL) -> AnsL + Send + Sync + 'static) -> M {
    M::shift_(Arc::new(f))
}

/// A `stack` whose function only rewrites a prefix of the stack.
pub fn stack_map<M: Stacked>(
    rewrite: impl Fn(Stack) -> Result<Stack, Violation> + Send + Sync + 'static,
) -> M {
    let rewrite = Arc::new(rewrite);
    stack(move |k: AnsL| {
        let rewrite = rewrite.clone();
        Arc::new(move |s: Stack| k(rewrite(s)?))
    })
}

/// `curryStack = stack \k a b -> k (a, b)`: two values on top become a pair.
pub fn curry_stack<M: Stacked>() -> M {
    stack_map(|s| {
        let (a, s) = s.pop_value("curryStack")?;
        let (b, s) = s.pop_value("curryStack")?;
        Ok(s.push(Value::pair(a, b)))
    })
}
