use std::fmt;
use std::sync::Arc;

/// A named character predicate, the argument of every `satisfy`.
#[derive(Clone)]
pub struct CharClass {
    name: Arc<str>,
    test: Arc<dyn Fn(char) -> bool + Send + Sync>,
}

impl CharClass {
    pub fn new(
        name: impl Into<Arc<str>>,
        test: impl Fn(char) -> bool + Send + Sync + 'static,
    ) -> Self {
        CharClass {
            name: name.into(),
            test: Arc::new(test),
        }
    }

    pub fn any() -> Self {
        CharClass::new("any", |_| true)
    }

    /// `0` to `9` only, like Haskell's `isDigit`.
    pub fn digit() -> Self {
        CharClass::new("digit", |c| c.is_ascii_digit())
    }

    pub fn ascii_letter() -> Self {
        CharClass::new("letter", |c| c.is_ascii_alphabetic())
    }

    pub fn ascii_alphanumeric() -> Self {
        CharClass::new("alphanumeric", |c| c.is_ascii_alphanumeric())
    }

    pub fn eq(expected: char) -> Self {
        CharClass::new(format!("{expected:?}"), move |c| c == expected)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn test(&self, c: char) -> bool {
        (self.test)(c)
    }
}

impl fmt::Debug for CharClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CharClass({})", self.name)
    }
}
