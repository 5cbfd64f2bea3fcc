use thiserror::Error;

/// A contract violation: the descriptor was misused or driven with values of
/// the wrong shape.
///
/// Violations are terminal. They are distinct from the recoverable failure
/// that drives choice in the backtracking engines, and they are never turned
/// into a "no result" answer.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Violation {
    #[error("{op}: stack underflow")]
    Underflow { op: String },

    #[error("{op}: expected {expected}, found {found}")]
    Mismatch {
        op: String,
        expected: String,
        found: String,
        /// Stack depth (counting the offending entry) at the point of the pop.
        depth: usize,
    },

    #[error("{op}: constructor frame found on the print stack")]
    PendingFrame { op: String, depth: usize },

    /// An undefined case of a partial descriptor (tier-1 and linear engines).
    #[error("{op}: {detail}")]
    Partial { op: String, detail: String },

    /// A value outside the documented domain of an iso or prism.
    #[error("{op}: {detail}")]
    Domain { op: String, detail: String },

    #[error("descriptor takes {expected} argument(s), {found} given")]
    Arity { expected: usize, found: usize },

    #[error("{count} entr{} left on the stack", if *count == 1 { "y" } else { "ies" })]
    Leftover { count: usize },

    #[error("argument {position}: {source}")]
    Argument {
        position: usize,
        source: Box<Violation>,
    },
}

impl Violation {
    pub(crate) fn partial(op: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation::Partial {
            op: op.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn domain(op: impl Into<String>, detail: impl Into<String>) -> Self {
        Violation::Domain {
            op: op.into(),
            detail: detail.into(),
        }
    }

    pub(crate) fn underflow(op: impl Into<String>) -> Self {
        Violation::Underflow { op: op.into() }
    }

    /// Stack depth recorded by the violation, if it came from a pop.
    pub fn depth(&self) -> Option<usize> {
        match self {
            Violation::Mismatch { depth, .. } | Violation::PendingFrame { depth, .. } => {
                Some(*depth)
            }
            _ => None,
        }
    }

    /// Attribute a pop-site violation to an argument of a runner that seeded
    /// the stack with `count` arguments (first argument on top).
    pub(crate) fn at_argument(self, count: usize) -> Self {
        match self.depth() {
            Some(depth) if depth >= 1 && depth <= count => Violation::Argument {
                position: count - depth,
                source: Box::new(self),
            },
            _ => self,
        }
    }
}
