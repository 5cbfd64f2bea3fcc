//! Choice-free cassettes: a print track and a parse track, each a
//! continuation-passing string transformer, spliced by composition.
//!
//! A printing transformer takes the continuation for the rest of the tape
//! and returns the continuation for the whole tape; the same holds for
//! parsing. Composition is therefore plain function composition, and it is
//! associative for free. There is no failure continuation at this tier: a
//! mismatch is a terminal [`Violation`].
//!
//! The stack holds the values still to print (print side) or the values
//! parsed so far (parse side). Typing of the stack is dynamic.

use std::sync::Arc;

use crate::chars::CharClass;
use crate::error::Violation;
use crate::values::{digit_iso, Frame, Iso, Stack, Value};

/// Print continuation: output so far and remaining stack to final text.
pub type PrintK = Arc<dyn Fn(String, Stack) -> Result<String, Violation> + Send + Sync>;
/// Parse continuation: input, offset of the remainder, stack of parsed values.
pub type ParseK = Arc<dyn Fn(&str, usize, Stack) -> Result<Stack, Violation> + Send + Sync>;

type PrintTr = Arc<dyn Fn(PrintK) -> PrintK + Send + Sync>;
type ParseTr = Arc<dyn Fn(ParseK) -> ParseK + Send + Sync>;

/// Print-side stack effect: how many values a descriptor consumes from the
/// top and how many it leaves in their place.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct StackEffect {
    pub pops: usize,
    pub pushes: usize,
}

impl StackEffect {
    pub const fn new(pops: usize, pushes: usize) -> Self {
        StackEffect { pops, pushes }
    }

    /// Effect of running `self` and then `next`.
    pub fn then(self, next: StackEffect) -> StackEffect {
        let borrowed = next.pops.saturating_sub(self.pushes);
        let left = self.pushes.saturating_sub(next.pops);
        StackEffect {
            pops: self.pops + borrowed,
            pushes: next.pushes + left,
        }
    }
}

#[derive(Clone)]
pub struct Descriptor1 {
    print: PrintTr,
    parse: ParseTr,
    effect: StackEffect,
}

impl Descriptor1 {
    pub fn new(
        print: impl Fn(PrintK) -> PrintK + Send + Sync + 'static,
        parse: impl Fn(ParseK) -> ParseK + Send + Sync + 'static,
        effect: StackEffect,
    ) -> Self {
        Descriptor1 {
            print: Arc::new(print),
            parse: Arc::new(parse),
            effect,
        }
    }

    pub fn effect(&self) -> StackEffect {
        self.effect
    }

    pub fn print_side(&self, k: PrintK) -> PrintK {
        (self.print)(k)
    }

    pub fn parse_side(&self, k: ParseK) -> ParseK {
        (self.parse)(k)
    }

    /// `self` then `next`, left to right on both tracks.
    pub fn then(&self, next: &Descriptor1) -> Descriptor1 {
        compose1(self, next)
    }
}

pub fn identity1() -> Descriptor1 {
    Descriptor1::new(|k| k, |k| k, StackEffect::new(0, 0))
}

pub fn compose1(a: &Descriptor1, b: &Descriptor1) -> Descriptor1 {
    let (pa, pb) = (a.print.clone(), b.print.clone());
    let (qa, qb) = (a.parse.clone(), b.parse.clone());
    Descriptor1::new(
        move |k| pa(pb(k)),
        move |k| qa(qb(k)),
        a.effect.then(b.effect),
    )
}

fn unexpected(op: &str, input: &str, pos: usize) -> Violation {
    let detail = match input[pos..].chars().next() {
        Some(c) => format!("unexpected {c:?} at offset {pos}"),
        None => format!("unexpected end of input at offset {pos}"),
    };
    Violation::partial(op, detail)
}

/// One character satisfying `class`.
pub fn satisfy1(class: CharClass) -> Descriptor1 {
    let print_class = class.clone();
    Descriptor1::new(
        move |k: PrintK| {
            let class = print_class.clone();
            Arc::new(move |mut out: String, stack: Stack| {
                let op = format!("satisfy {}", class.name());
                let (c, rest) = stack.pop_char(&op)?;
                if !class.test(c) {
                    return Err(Violation::partial(op, format!("{c:?} rejected on print")));
                }
                out.push(c);
                k(out, rest)
            })
        },
        move |k: ParseK| {
            let class = class.clone();
            Arc::new(move |input: &str, pos: usize, stack: Stack| {
                match input[pos..].chars().next() {
                    Some(c) if class.test(c) => {
                        k(input, pos + c.len_utf8(), stack.deliver(Value::Char(c))?)
                    }
                    _ => Err(unexpected(&format!("satisfy {}", class.name()), input, pos)),
                }
            })
        },
        StackEffect::new(1, 0),
    )
}

/// A single literal character, printed and parsed without touching the stack.
pub fn lit_char1(expected: char) -> Descriptor1 {
    Descriptor1::new(
        move |k: PrintK| {
            Arc::new(move |mut out: String, stack: Stack| {
                out.push(expected);
                k(out, stack)
            })
        },
        move |k: ParseK| {
            Arc::new(move |input: &str, pos: usize, stack: Stack| {
                if input[pos..].starts_with(expected) {
                    k(input, pos + expected.len_utf8(), stack)
                } else {
                    Err(unexpected(&format!("lit {expected:?}"), input, pos))
                }
            })
        },
        StackEffect::new(0, 0),
    )
}

/// A literal string: one [`lit_char1`] per character. `lit1("")` is the identity.
pub fn lit1(s: &str) -> Descriptor1 {
    s.chars()
        .rev()
        .fold(identity1(), |rest, c| compose1(&lit_char1(c), &rest))
}

/// Map the value at the stack top through `iso`: `to` when printing, `from`
/// on the value delivered when parsing.
pub fn iso_l1(iso: Iso) -> Descriptor1 {
    let print_iso = iso.clone();
    Descriptor1::new(
        move |k: PrintK| {
            let iso = print_iso.clone();
            Arc::new(move |out: String, stack: Stack| {
                let (v, rest) = stack.pop_value(iso.name())?;
                k(out, rest.push(iso.to(v)?))
            })
        },
        move |k: ParseK| {
            let iso = iso.clone();
            Arc::new(move |input: &str, pos: usize, stack: Stack| {
                k(input, pos, stack.open(Frame::for_iso(&iso))?)
            })
        },
        StackEffect::new(1, 1),
    )
}

/// Uncurry on the print side, curry on the parse side.
pub fn pair_l1() -> Descriptor1 {
    Descriptor1::new(
        |k: PrintK| {
            Arc::new(move |out: String, stack: Stack| {
                let depth = stack.len();
                let (v, rest) = stack.pop_value("pair")?;
                let [a, b] = crate::values::pair_split(v).map_err(|e| relocate(e, depth))?;
                k(out, rest.push(b).push(a))
            })
        },
        |k: ParseK| {
            Arc::new(move |input: &str, pos: usize, stack: Stack| {
                k(input, pos, stack.open(Frame::for_pair())?)
            })
        },
        StackEffect::new(1, 2),
    )
}

fn relocate(e: Violation, at: usize) -> Violation {
    match e {
        Violation::Mismatch {
            op,
            expected,
            found,
            ..
        } => Violation::Mismatch {
            op,
            expected,
            found,
            depth: at,
        },
        other => other,
    }
}

pub fn char1() -> Descriptor1 {
    satisfy1(CharClass::any())
}

/// A single decimal digit read as an `Int`.
pub fn digit1() -> Descriptor1 {
    compose1(&iso_l1(digit_iso()), &satisfy1(CharClass::digit()))
}

/// `digit . lit "-th character after " . char . lit " is " . char`
pub fn ordinal_spec1() -> Descriptor1 {
    [
        digit1(),
        lit1("-th character after "),
        char1(),
        lit1(" is "),
        char1(),
    ]
    .iter()
    .fold(identity1(), |acc, d| compose1(&acc, d))
}

/// Run the print track on an explicit stack. Returns the text and the stack
/// left over below the descriptor's working region.
pub fn run_print1(d: &Descriptor1, stack: Stack) -> Result<(String, Stack), Violation> {
    let leftover = Arc::new(std::sync::Mutex::new(None));
    let slot = leftover.clone();
    let done: PrintK = Arc::new(move |out, rest| {
        *slot.lock().expect("unpoisoned") = Some(rest);
        Ok(out)
    });
    let out = d.print_side(done)(String::new(), stack)?;
    let rest = leftover
        .lock()
        .expect("unpoisoned")
        .take()
        .expect("continuation ran");
    Ok((out, rest))
}

/// Run the parse track on an explicit stack. Returns the consumed byte
/// count and the resulting stack.
pub fn run_parse1(d: &Descriptor1, input: &str, stack: Stack) -> Result<(usize, Stack), Violation> {
    let consumed = Arc::new(std::sync::atomic::AtomicUsize::new(0));
    let slot = consumed.clone();
    let done: ParseK = Arc::new(move |_, pos, stack| {
        slot.store(pos, std::sync::atomic::Ordering::Relaxed);
        Ok(stack)
    });
    let stack = d.parse_side(done)(input, 0, stack)?;
    Ok((consumed.load(std::sync::atomic::Ordering::Relaxed), stack))
}

/// Print `args` with `d`; the first argument is printed first.
pub fn sprintf1(d: &Descriptor1, args: Vec<Value>) -> Result<String, Violation> {
    let effect = d.effect();
    if args.len() != effect.pops || effect.pushes != 0 {
        return Err(Violation::Arity {
            expected: effect.pops,
            found: args.len(),
        });
    }
    let count = args.len();
    let done: PrintK = Arc::new(|out, rest| {
        if rest.is_empty() {
            Ok(out)
        } else {
            Err(Violation::Leftover { count: rest.len() })
        }
    });
    d.print_side(done)(String::new(), Stack::from_top(args)).map_err(|e| e.at_argument(count))
}

/// Parse `input` with `d`, returning the parsed values in textual order.
/// Input after the descriptor's extent is ignored.
pub fn sscanf1(d: &Descriptor1, input: &str) -> Result<Vec<Value>, Violation> {
    let done: ParseK = Arc::new(|_, _, stack| Ok(stack));
    let stack = d.parse_side(done)(input, 0, Stack::new())?;
    let mut values = stack.values()?;
    values.reverse();
    Ok(values)
}
