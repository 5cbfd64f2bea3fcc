use std::fmt;
use std::sync::{Arc, OnceLock, Weak};

use crate::chars::CharClass;
use crate::values::{cons_prism, nil_prism, Iso, Prism};

type Thunk = Arc<dyn Fn() -> Descriptor2 + Send + Sync>;

/// A cassette with failure and choice.
///
/// Descriptors are immutable trees (graphs, once recursion is tied with
/// [`fix`]) interpreted by the backtracking machine in
/// [`machine`](super::machine). Cloning is cheap.
#[derive(Clone)]
pub struct Descriptor2(pub(crate) Arc<Node>);

pub(crate) enum Node {
    Identity,
    Fail,
    Compose(Descriptor2, Descriptor2),
    Choice(Descriptor2, Descriptor2),
    Satisfy(CharClass),
    Lit(Arc<str>),
    LitUnit(Arc<str>),
    Lead(Lead),
    Delay(Thunk),
    Defer(OnceLock<Descriptor2>, Thunk),
    Rec(Descriptor2),
    Knot(Weak<Node>),
}

#[derive(Clone)]
pub(crate) enum Lead {
    Prism(Prism),
    Iso(Iso),
    Pair,
}

impl Descriptor2 {
    fn node(node: Node) -> Self {
        Descriptor2(Arc::new(node))
    }

    /// `self` then `next`. Also spelled `-->` in grammars.
    pub fn then(&self, next: &Descriptor2) -> Descriptor2 {
        compose2(self, next)
    }

    /// `self`, or `other` if `self` (or anything after it) fails.
    pub fn or(&self, other: &Descriptor2) -> Descriptor2 {
        choice2(self, other)
    }

    /// Same node, not just an equal one.
    pub fn ptr_eq(&self, other: &Descriptor2) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Debug for Descriptor2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &*self.0 {
            Node::Identity => f.write_str("id"),
            Node::Fail => f.write_str("fail"),
            Node::Compose(a, b) => write!(f, "({a:?} . {b:?})"),
            Node::Choice(a, b) => write!(f, "({a:?} <> {b:?})"),
            Node::Satisfy(c) => write!(f, "satisfy {}", c.name()),
            Node::Lit(s) => write!(f, "lit {s:?}"),
            Node::LitUnit(s) => write!(f, "lit' {s:?}"),
            Node::Lead(Lead::Prism(p)) => write!(f, "prismL {}", p.tag()),
            Node::Lead(Lead::Iso(i)) => write!(f, "isoL {}", i.name()),
            Node::Lead(Lead::Pair) => f.write_str("pairL"),
            Node::Delay(_) | Node::Defer(..) => f.write_str("<delayed>"),
            Node::Rec(_) | Node::Knot(_) => f.write_str("<recursive>"),
        }
    }
}

pub fn identity2() -> Descriptor2 {
    Descriptor2::node(Node::Identity)
}

pub fn fail2() -> Descriptor2 {
    Descriptor2::node(Node::Fail)
}

pub fn compose2(a: &Descriptor2, b: &Descriptor2) -> Descriptor2 {
    Descriptor2::node(Node::Compose(a.clone(), b.clone()))
}

pub fn choice2(a: &Descriptor2, b: &Descriptor2) -> Descriptor2 {
    Descriptor2::node(Node::Choice(a.clone(), b.clone()))
}

/// Compose a sequence left to right.
pub fn seq2(parts: &[Descriptor2]) -> Descriptor2 {
    match parts.split_last() {
        None => identity2(),
        Some((last, init)) => init
            .iter()
            .rev()
            .fold(last.clone(), |acc, d| compose2(d, &acc)),
    }
}

/// Try each alternative in order.
pub fn alt2(parts: &[Descriptor2]) -> Descriptor2 {
    match parts.split_last() {
        None => fail2(),
        Some((last, init)) => init
            .iter()
            .rev()
            .fold(last.clone(), |acc, d| choice2(d, &acc)),
    }
}

pub fn satisfy2(class: CharClass) -> Descriptor2 {
    Descriptor2::node(Node::Satisfy(class))
}

/// A nullary literal.
pub fn lit2(s: &str) -> Descriptor2 {
    if s.is_empty() {
        identity2()
    } else {
        Descriptor2::node(Node::Lit(s.into()))
    }
}

/// A literal carrying a `()` value, so that it can follow the lead of a
/// constructor whose only component is `()`.
pub fn lit_unit(s: &str) -> Descriptor2 {
    Descriptor2::node(Node::LitUnit(s.into()))
}

/// Lift a prism to a lead: preview when printing, review when parsing.
pub fn prism_l2(prism: Prism) -> Descriptor2 {
    Descriptor2::node(Node::Lead(Lead::Prism(prism)))
}

pub fn iso_l2(iso: Iso) -> Descriptor2 {
    Descriptor2::node(Node::Lead(Lead::Iso(iso)))
}

pub fn pair_l2() -> Descriptor2 {
    Descriptor2::node(Node::Lead(Lead::Pair))
}

/// The lead of the list constructor `(:)`.
pub fn cons_l() -> Descriptor2 {
    prism_l2(cons_prism())
}

/// The lead of the empty list.
pub fn nil_l() -> Descriptor2 {
    prism_l2(nil_prism())
}

/// Build the descriptor on first use. Construction happens at most once,
/// even under concurrent first use.
pub fn defer(make: impl Fn() -> Descriptor2 + Send + Sync + 'static) -> Descriptor2 {
    Descriptor2::node(Node::Defer(OnceLock::new(), Arc::new(make)))
}

/// Rebuild the descriptor at every use. Prefer [`defer`] or [`fix`].
pub fn delay(make: impl Fn() -> Descriptor2 + Send + Sync + 'static) -> Descriptor2 {
    Descriptor2::node(Node::Delay(Arc::new(make)))
}

/// Tie a recursive knot: `body` receives a reference to the descriptor
/// being defined.
///
/// The inner reference is weak, so the result must be kept alive for as long
/// as any part of it is run. Running a fragment of the body after the result
/// has been dropped is a violation.
pub fn fix(body: impl FnOnce(Descriptor2) -> Descriptor2) -> Descriptor2 {
    Descriptor2(Arc::new_cyclic(|weak: &Weak<Node>| {
        Node::Rec(body(Descriptor2::node(Node::Knot(weak.clone()))))
    }))
}
