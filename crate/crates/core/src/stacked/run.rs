use std::sync::{Arc, Mutex};

use crate::error::Violation;
use crate::values::{Stack, Value};

use super::ix::{AnsC, Both};
use super::parse::{Fwd, FwdMaybe};
use super::print::{Cont2W, ContW, KC, KL};
use super::res::Res;
use super::traced::Traced;

/// Linear format descriptors: no choice, mismatches are violations.
pub type Linear = Both<ContW, Fwd>;
/// Format descriptors with choice and backtracking.
pub type Choice = Both<Cont2W, FwdMaybe>;

/// Run the printer of `d` on `stack`, returning the emitted text, the
/// result and the stack left at the end.
pub fn run_print_linear(d: &Linear, stack: Stack) -> Result<(String, Res, Stack), Violation> {
    let seen: Arc<Mutex<Option<(Res, Stack)>>> = Arc::new(Mutex::new(None));
    let sink = seen.clone();
    let wk = Traced::new(move |m: &str| -> KL {
        let m = m.to_owned();
        let sink = sink.clone();
        Arc::new(move |res| {
            let m = m.clone();
            let sink = sink.clone();
            Arc::new(move |s: Stack| {
                *sink.lock().expect("unpoisoned") = Some((res.clone(), s));
                Ok(m.clone())
            })
        })
    });
    let text = d.0.run(wk)(stack)?;
    let (res, rest) = seen
        .lock()
        .expect("unpoisoned")
        .take()
        .expect("the final continuation ran");
    Ok((text, res, rest))
}

/// `sprintf (ContW pr :*: _) = pr (Traced (\s _ -> s))`, seeded with
/// `args` (first argument on top). Every argument must be used.
pub fn sprintf3(d: &Linear, args: impl IntoIterator<Item = Value>) -> Result<String, Violation> {
    let args: Vec<Value> = args.into_iter().collect();
    let n = args.len();
    let wk = Traced::new(|m: &str| -> KL {
        let m = m.to_owned();
        Arc::new(move |_| {
            let m = m.clone();
            Arc::new(move |s: Stack| {
                if s.is_empty() {
                    Ok(m.clone())
                } else {
                    Err(Violation::Leftover { count: s.len() })
                }
            })
        })
    });
    d.0.run(wk)(Stack::from_top(args)).map_err(|e| e.at_argument(n))
}

/// `sscanf (_ :*: Fwd (Pa pa)) s = fst (pa s)`. Trailing input is ignored.
pub fn sscanf3(d: &Linear, input: &str) -> Result<Value, Violation> {
    d.1.run(input, 0)?.0.into_value()
}

/// `parse (_ :*: Fwd (Pa pa)) s = fst <$> pa s`. Trailing input is ignored.
pub fn parse3(d: &Choice, input: &str) -> Result<Option<Value>, Violation> {
    match d.1.run(input, 0)? {
        Some((res, _)) => res.into_value().map(Some),
        None => Ok(None),
    }
}

/// Like [`parse3`], also returning the number of bytes consumed.
pub fn parse3_prefix(d: &Choice, input: &str) -> Result<Option<(Value, usize)>, Violation> {
    match d.1.run(input, 0)? {
        Some((res, pos)) => Ok(Some((res.into_value()?, pos))),
        None => Ok(None),
    }
}

/// Run the choice printer on an arbitrary stack; the final continuation
/// accepts any stack. Returns the text and the stack left at the end.
pub fn run_print_choice(d: &Choice, stack: Stack) -> Result<Option<(String, Stack)>, Violation> {
    let seen: Arc<Mutex<Option<Stack>>> = Arc::new(Mutex::new(None));
    let sink = seen.clone();
    let wk = Traced::new(move |m: &str| -> KC {
        let m = m.to_owned();
        let sink = sink.clone();
        Arc::new(move |_, _| {
            let m = m.clone();
            let sink = sink.clone();
            Arc::new(move |s: Stack| {
                *sink.lock().expect("unpoisoned") = Some(s);
                Ok(Some(m.clone()))
            })
        })
    });
    let fl: AnsC = Arc::new(|_| Ok(None));
    Ok(match d.0.run(wk, fl)(stack)? {
        Some(text) => {
            let rest = seen
                .lock()
                .expect("unpoisoned")
                .take()
                .expect("the final continuation ran");
            Some((text, rest))
        }
        None => None,
    })
}

/// `pretty (pr :*: _) = pr (Traced (\s _ _ -> Just s)) (\_ -> Nothing)`
/// seeded with `[v]`. A printer that leaves values on the stack is a
/// violation.
pub fn pretty3(d: &Choice, v: Value) -> Result<Option<String>, Violation> {
    let wk = Traced::new(|m: &str| -> KC {
        let m = m.to_owned();
        Arc::new(move |_, _| {
            let m = m.clone();
            Arc::new(move |s: Stack| {
                if s.is_empty() {
                    Ok(Some(m.clone()))
                } else {
                    Err(Violation::Leftover { count: s.len() })
                }
            })
        })
    });
    let fl: AnsC = Arc::new(|_| Ok(None));
    d.0.run(wk, fl)(Stack::from_top([v]))
}
