//! The backtracking machine that runs [`Descriptor2`]s.
//!
//! The two-continuation semantics is defunctionalized. The success
//! continuation becomes a persistent list of descriptors still to run, and
//! the failure continuation becomes a stack of choice points. A choice point
//! records the alternative, the success continuation at the choice, the
//! value stack, and the input offset (parsing) or output length (printing).
//! Failing pops the most recent choice point and restores all four, which is
//! exactly what the chain of restoring failure continuations does: every
//! primitive's restoring continuation undoes that primitive's stack effect,
//! and the choice itself resumes the second alternative on the input and
//! success continuation it started from.

use crate::error::Violation;
use crate::values::{pair_split, plist::PList, Frame, Stack, Value};

use super::descriptor::{Descriptor2, Lead, Node};

/// Result of running one track: a recoverable failure, distinct from the
/// terminal violations carried by the surrounding `Result`.
#[derive(Debug, Clone, PartialEq)]
pub enum Outcome2<T> {
    Success(T),
    Failure,
}

impl<T> Outcome2<T> {
    pub fn success(self) -> Option<T> {
        match self {
            Outcome2::Success(t) => Some(t),
            Outcome2::Failure => None,
        }
    }

    pub fn is_success(&self) -> bool {
        matches!(self, Outcome2::Success(_))
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome2<U> {
        match self {
            Outcome2::Success(t) => Outcome2::Success(f(t)),
            Outcome2::Failure => Outcome2::Failure,
        }
    }
}

enum Step {
    Next,
    Fail,
}

trait Track {
    /// Stack plus input offset or output length.
    fn snapshot(&self) -> (Stack, usize);
    fn restore(&mut self, stack: Stack, mark: usize);
    fn primitive(&mut self, node: &Node) -> Result<Step, Violation>;
}

struct ChoicePoint {
    alt: Descriptor2,
    cont: PList<Descriptor2>,
    stack: Stack,
    mark: usize,
}

/// Run `d` on `track`. `on_success` is called at every complete run and
/// returns whether to keep searching for further derivations.
fn drive<T: Track>(
    track: &mut T,
    d: &Descriptor2,
    mut on_success: impl FnMut(&T) -> bool,
) -> Result<bool, Violation> {
    let mut cont: PList<Descriptor2> = PList::new().cons(d.clone());
    let mut choices: Vec<ChoicePoint> = Vec::new();
    let mut found = false;
    loop {
        let step = match cont.first().cloned() {
            None => {
                found = true;
                if on_success(track) {
                    Step::Fail
                } else {
                    return Ok(true);
                }
            }
            Some(next) => {
                cont = cont.rest();
                match &*next.0 {
                    Node::Identity => Step::Next,
                    Node::Fail => Step::Fail,
                    Node::Compose(a, b) => {
                        cont = cont.cons(b.clone()).cons(a.clone());
                        Step::Next
                    }
                    Node::Choice(a, b) => {
                        let (stack, mark) = track.snapshot();
                        choices.push(ChoicePoint {
                            alt: b.clone(),
                            cont: cont.clone(),
                            stack,
                            mark,
                        });
                        cont = cont.cons(a.clone());
                        Step::Next
                    }
                    Node::Delay(make) => {
                        cont = cont.cons(make());
                        Step::Next
                    }
                    Node::Defer(cell, make) => {
                        cont = cont.cons(cell.get_or_init(|| make()).clone());
                        Step::Next
                    }
                    Node::Rec(body) => {
                        cont = cont.cons(body.clone());
                        Step::Next
                    }
                    Node::Knot(weak) => {
                        let target = weak.upgrade().ok_or_else(|| {
                            Violation::partial(
                                "fix",
                                "recursive descriptor used after being dropped",
                            )
                        })?;
                        cont = cont.cons(Descriptor2(target));
                        Step::Next
                    }
                    other => track.primitive(other)?,
                }
            }
        };
        if let Step::Fail = step {
            match choices.pop() {
                Some(cp) => {
                    track.restore(cp.stack, cp.mark);
                    cont = cp.cont.cons(cp.alt);
                }
                None => return Ok(found),
            }
        }
    }
}

/// Domain errors of isos are recoverable at this tier; everything else is a
/// violation.
fn recover<T>(r: Result<T, Violation>) -> Result<Option<T>, Violation> {
    match r {
        Ok(t) => Ok(Some(t)),
        Err(Violation::Domain { .. }) => Ok(None),
        Err(e) => Err(e),
    }
}

struct Printer {
    out: String,
    stack: Stack,
}

impl Track for Printer {
    fn snapshot(&self) -> (Stack, usize) {
        (self.stack.clone(), self.out.len())
    }

    fn restore(&mut self, stack: Stack, mark: usize) {
        self.stack = stack;
        self.out.truncate(mark);
    }

    fn primitive(&mut self, node: &Node) -> Result<Step, Violation> {
        let stack = std::mem::take(&mut self.stack);
        match node {
            Node::Satisfy(class) => {
                let (c, rest) = stack
                    .clone()
                    .pop_char(&format!("satisfy {}", class.name()))?;
                if !class.test(c) {
                    self.stack = stack;
                    return Ok(Step::Fail);
                }
                self.out.push(c);
                self.stack = rest;
            }
            Node::Lit(s) => {
                self.out.push_str(s);
                self.stack = stack;
            }
            Node::LitUnit(s) => {
                let depth = stack.len();
                let (v, rest) = stack.pop_value("lit'")?;
                if v != Value::Unit {
                    return Err(Violation::Mismatch {
                        op: "lit'".into(),
                        expected: "()".into(),
                        found: v.to_string(),
                        depth,
                    });
                }
                self.out.push_str(s);
                self.stack = rest;
            }
            Node::Lead(Lead::Prism(prism)) => {
                let (v, rest) = stack.clone().pop_value(prism.tag())?;
                match prism.preview(&v) {
                    Some(parts) => self.stack = rest.push_all_top_first(parts),
                    None => {
                        self.stack = stack;
                        return Ok(Step::Fail);
                    }
                }
            }
            Node::Lead(Lead::Iso(iso)) => {
                let (v, rest) = stack.clone().pop_value(iso.name())?;
                match recover(iso.to(v))? {
                    Some(w) => self.stack = rest.push(w),
                    None => {
                        self.stack = stack;
                        return Ok(Step::Fail);
                    }
                }
            }
            Node::Lead(Lead::Pair) => {
                let (v, rest) = stack.pop_value("pair")?;
                let [a, b] = pair_split(v)?;
                self.stack = rest.push(b).push(a);
            }
            _ => unreachable!("control nodes are handled by the driver"),
        }
        Ok(Step::Next)
    }
}

struct Parser<'a> {
    input: &'a str,
    pos: usize,
    stack: Stack,
}

impl Parser<'_> {
    fn deliver(&mut self, v: Value) -> Result<Step, Violation> {
        match recover(self.stack.deliver(v))? {
            Some(stack) => {
                self.stack = stack;
                Ok(Step::Next)
            }
            None => Ok(Step::Fail),
        }
    }

    fn open(&mut self, frame: Frame) -> Result<Step, Violation> {
        match recover(self.stack.open(frame))? {
            Some(stack) => {
                self.stack = stack;
                Ok(Step::Next)
            }
            None => Ok(Step::Fail),
        }
    }
}

impl Track for Parser<'_> {
    fn snapshot(&self) -> (Stack, usize) {
        (self.stack.clone(), self.pos)
    }

    fn restore(&mut self, stack: Stack, mark: usize) {
        self.stack = stack;
        self.pos = mark;
    }

    fn primitive(&mut self, node: &Node) -> Result<Step, Violation> {
        let rest = &self.input[self.pos..];
        match node {
            Node::Satisfy(class) => match rest.chars().next() {
                Some(c) if class.test(c) => {
                    self.pos += c.len_utf8();
                    self.deliver(Value::Char(c))
                }
                _ => Ok(Step::Fail),
            },
            Node::Lit(s) => {
                if rest.starts_with(&**s) {
                    self.pos += s.len();
                    Ok(Step::Next)
                } else {
                    Ok(Step::Fail)
                }
            }
            Node::LitUnit(s) => {
                if rest.starts_with(&**s) {
                    self.pos += s.len();
                    self.deliver(Value::Unit)
                } else {
                    Ok(Step::Fail)
                }
            }
            Node::Lead(Lead::Prism(prism)) => self.open(Frame::for_prism(prism)),
            Node::Lead(Lead::Iso(iso)) => self.open(Frame::for_iso(iso)),
            Node::Lead(Lead::Pair) => self.open(Frame::for_pair()),
            _ => unreachable!("control nodes are handled by the driver"),
        }
    }
}

/// Run the print track on an explicit stack.
pub fn run_print(d: &Descriptor2, stack: Stack) -> Result<Outcome2<(String, Stack)>, Violation> {
    let mut printer = Printer {
        out: String::new(),
        stack,
    };
    let ok = drive(&mut printer, d, |_| false)?;
    Ok(if ok {
        Outcome2::Success((printer.out, printer.stack))
    } else {
        Outcome2::Failure
    })
}

/// Run the parse track on an explicit stack. On success, returns the byte
/// offset reached and the resulting stack.
pub fn run_parse(
    d: &Descriptor2,
    input: &str,
    stack: Stack,
) -> Result<Outcome2<(usize, Stack)>, Violation> {
    let mut parser = Parser {
        input,
        pos: 0,
        stack,
    };
    let ok = drive(&mut parser, d, |_| false)?;
    Ok(if ok {
        Outcome2::Success((parser.pos, parser.stack))
    } else {
        Outcome2::Failure
    })
}

/// Every successful run of the parse track, in the order the machine finds
/// them, up to `limit` of them.
pub fn run_parse_all(
    d: &Descriptor2,
    input: &str,
    stack: Stack,
    limit: usize,
) -> Result<Vec<(usize, Stack)>, Violation> {
    let mut parser = Parser {
        input,
        pos: 0,
        stack,
    };
    let mut found = Vec::new();
    drive(&mut parser, d, |p| {
        found.push((p.pos, p.stack.clone()));
        found.len() < limit
    })?;
    Ok(found)
}

fn single(stack: Stack) -> Result<Value, Violation> {
    let mut values = stack.values()?;
    match values.len() {
        1 => Ok(values.pop().expect("one value")),
        0 => Err(Violation::underflow("parse")),
        n => Err(Violation::Leftover { count: n - 1 }),
    }
}

/// Print `v`. `None` when no alternative applies.
pub fn pretty2(d: &Descriptor2, v: Value) -> Result<Option<String>, Violation> {
    match run_print(d, Stack::from_top([v]))? {
        Outcome2::Success((out, rest)) if rest.is_empty() => Ok(Some(out)),
        Outcome2::Success((_, rest)) => Err(Violation::Leftover { count: rest.len() }),
        Outcome2::Failure => Ok(None),
    }
}

/// Parse a prefix of `input`; the unparsed rest is discarded.
pub fn parse2(d: &Descriptor2, input: &str) -> Result<Option<Value>, Violation> {
    match run_parse(d, input, Stack::new())? {
        Outcome2::Success((_, stack)) => single(stack).map(Some),
        Outcome2::Failure => Ok(None),
    }
}

/// All derivations of prefixes of `input`, with the byte offset each one
/// stops at.
pub fn parse2_all(
    d: &Descriptor2,
    input: &str,
    limit: usize,
) -> Result<Vec<(Value, usize)>, Violation> {
    run_parse_all(d, input, Stack::new(), limit)?
        .into_iter()
        .map(|(pos, stack)| single(stack).map(|v| (v, pos)))
        .collect()
}
