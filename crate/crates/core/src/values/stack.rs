use std::fmt;
use std::sync::Arc;

use super::optic::{Iso, Prism};
use super::plist::PList;
use super::value::Value;
use crate::error::Violation;

type BuildFn = Arc<dyn Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync>;

/// A constructor waiting for its components on the parse side.
///
/// This is the first-order form of a lead-out: instead of wrapping the value
/// consumer, a frame sits on the stack and collects the next `arity` values
/// delivered above it, then builds the constructed value and delivers it in
/// turn.
#[derive(Clone)]
pub struct Frame {
    tag: Arc<str>,
    arity: usize,
    collected: Vec<Value>,
    build: BuildFn,
}

impl Frame {
    pub fn new(
        tag: impl Into<Arc<str>>,
        arity: usize,
        build: impl Fn(Vec<Value>) -> Result<Value, Violation> + Send + Sync + 'static,
    ) -> Frame {
        Frame {
            tag: tag.into(),
            arity,
            collected: Vec::with_capacity(arity),
            build: Arc::new(build),
        }
    }

    pub fn for_prism(prism: &Prism) -> Frame {
        let p = prism.clone();
        Frame::new(prism.tag(), prism.arity(), move |xs| p.review(xs))
    }

    pub fn for_iso(iso: &Iso) -> Frame {
        let name = iso.name().to_owned();
        let iso = iso.clone();
        Frame::new(name, 1, move |mut xs| {
            let x = xs.pop().expect("arity-1 frame holds one value");
            iso.from(x)
        })
    }

    pub fn for_pair() -> Frame {
        Frame::new("pair", 2, |xs| {
            let [a, b]: [Value; 2] = xs.try_into().expect("arity-2 frame holds two values");
            Ok(Value::pair(a, b))
        })
    }

    pub fn tag(&self) -> &str {
        &self.tag
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn collected(&self) -> &[Value] {
        &self.collected
    }

    fn is_complete(&self) -> bool {
        self.collected.len() == self.arity
    }
}

impl PartialEq for Frame {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.arity == other.arity && self.collected == other.collected
    }
}

impl fmt::Debug for Frame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Frame")
            .field("tag", &self.tag)
            .field("arity", &self.arity)
            .field("collected", &self.collected)
            .finish()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum StackEntry {
    Val(Value),
    Pending(Frame),
}

/// The runtime stack shared by all engines, top first.
///
/// On the print side it holds the values still to be printed, the first one
/// to print on top. On the parse side it holds the values parsed so far, plus
/// pending constructor frames. The stack is persistent: every operation
/// returns a new stack and leaves the receiver intact, so snapshots are free.
#[derive(Clone, Default)]
pub struct Stack(PList<StackEntry>);

impl Stack {
    pub fn new() -> Stack {
        Stack(PList::new())
    }

    /// Build a stack from values listed top first.
    pub fn from_top(values: impl IntoIterator<Item = Value>) -> Stack {
        let values: Vec<Value> = values.into_iter().collect();
        values
            .into_iter()
            .rev()
            .fold(Stack::new(), |stack, v| stack.push(v))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn top(&self) -> Option<&StackEntry> {
        self.0.first()
    }

    pub fn iter(&self) -> impl Iterator<Item = &StackEntry> {
        self.0.iter()
    }

    /// Push without reducing any pending frame.
    pub fn push(&self, v: Value) -> Stack {
        Stack(self.0.cons(StackEntry::Val(v)))
    }

    pub fn push_entry(&self, entry: StackEntry) -> Stack {
        Stack(self.0.cons(entry))
    }

    /// Push the values in `values` so that the first one ends up on top.
    pub fn push_all_top_first(&self, values: Vec<Value>) -> Stack {
        values
            .into_iter()
            .rev()
            .fold(self.clone(), |stack, v| stack.push(v))
    }

    pub fn pop(self) -> Option<(StackEntry, Stack)> {
        self.0.uncons().map(|(entry, rest)| (entry, Stack(rest)))
    }

    /// Pop a plain value, reporting `op` on underflow or on a pending frame.
    pub fn pop_value(self, op: &str) -> Result<(Value, Stack), Violation> {
        let depth = self.len();
        match self.pop() {
            None => Err(Violation::underflow(op)),
            Some((StackEntry::Val(v), rest)) => Ok((v, rest)),
            Some((StackEntry::Pending(_), _)) => Err(Violation::PendingFrame {
                op: op.to_owned(),
                depth,
            }),
        }
    }

    pub fn pop_char(self, op: &str) -> Result<(char, Stack), Violation> {
        let depth = self.len();
        let (v, rest) = self.pop_value(op)?;
        match v {
            Value::Char(c) => Ok((c, rest)),
            other => Err(Violation::Mismatch {
                op: op.to_owned(),
                expected: "Char".into(),
                found: other.to_string(),
                depth,
            }),
        }
    }

    /// Push `v` on the parse side: completed frames are reduced eagerly,
    /// innermost first.
    pub fn deliver(&self, v: Value) -> Result<Stack, Violation> {
        let mut stack = self.clone();
        let mut v = v;
        loop {
            match stack.top() {
                Some(StackEntry::Pending(_)) => {
                    let Some((StackEntry::Pending(mut frame), rest)) = stack.pop() else {
                        unreachable!("top was a pending frame");
                    };
                    frame.collected.push(v);
                    if frame.is_complete() {
                        v = (frame.build)(std::mem::take(&mut frame.collected))?;
                        stack = rest;
                    } else {
                        return Ok(rest.push_entry(StackEntry::Pending(frame)));
                    }
                }
                _ => return Ok(stack.push(v)),
            }
        }
    }

    /// Open a constructor frame; a nullary one is reduced immediately.
    pub fn open(&self, frame: Frame) -> Result<Stack, Violation> {
        if frame.is_complete() {
            let v = (frame.build)(Vec::new())?;
            self.deliver(v)
        } else {
            Ok(self.push_entry(StackEntry::Pending(frame)))
        }
    }

    /// All entries as plain values, top first.
    pub fn values(&self) -> Result<Vec<Value>, Violation> {
        self.iter()
            .enumerate()
            .map(|(i, entry)| match entry {
                StackEntry::Val(v) => Ok(v.clone()),
                StackEntry::Pending(frame) => Err(Violation::partial(
                    "stack",
                    format!(
                        "constructor {} left incomplete at depth {}",
                        frame.tag(),
                        i + 1
                    ),
                )),
            })
            .collect()
    }
}

impl PartialEq for Stack {
    fn eq(&self, other: &Self) -> bool {
        self.len() == other.len() && self.iter().eq(other.iter())
    }
}

impl fmt::Debug for Stack {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.iter()).finish()
    }
}
