use std::sync::Arc;

/// The traced comonad over the `String` monoid: a value that depends on the
/// text emitted so far.
///
/// `extend` composes traces left to right (`m <> m'`), which is what makes
/// emission order equal textual order.
pub struct Traced<A>(Arc<dyn Fn(&str) -> A + Send + Sync>);

impl<A> Clone for Traced<A> {
    fn clone(&self) -> Self {
        Traced(self.0.clone())
    }
}

impl<A: 'static> Traced<A> {
    pub fn new(f: impl Fn(&str) -> A + Send + Sync + 'static) -> Self {
        Traced(Arc::new(f))
    }

    /// Feed `m` to the traced value, i.e. emit `m`.
    pub fn trace(&self, m: &str) -> A {
        stacker::maybe_grow(64 * 1024, 1024 * 1024, || (self.0)(m))
    }

    pub fn extract(&self) -> A {
        self.trace("")
    }

    pub fn extend<B: 'static>(
        &self,
        f: impl Fn(Traced<A>) -> B + Send + Sync + 'static,
    ) -> Traced<B> {
        let inner = self.clone();
        Traced::new(move |m: &str| {
            if m.is_empty() {
                return f(inner.clone());
            }
            let m = m.to_owned();
            let inner = inner.clone();
            f(Traced::new(move |m2: &str| {
                inner.trace(&format!("{m}{m2}"))
            }))
        })
    }

    pub fn map<B: 'static>(&self, f: impl Fn(A) -> B + Send + Sync + 'static) -> Traced<B> {
        let inner = self.clone();
        Traced::new(move |m: &str| f(inner.trace(m)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn comonad_laws_on_samples() {
        let w: Traced<String> = Traced::new(|m: &str| format!("<{m}>"));
        // extend extract = id
        let e = w.extend(|t: Traced<String>| t.extract());
        for m in ["", "a", "xy"] {
            assert_eq!(e.trace(m), w.trace(m));
        }
        // extract . extend f = f
        let f = |t: Traced<String>| t.trace("q").len();
        assert_eq!(w.extend(f).extract(), f(w.clone()));
        // extend composes traces in order
        let nested = w.extend(|t: Traced<String>| t.trace("b"));
        assert_eq!(nested.trace("a"), "<ab>");
    }
}
