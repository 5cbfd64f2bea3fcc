use std::sync::Arc;

/// Persistent singly linked list with shared tails.
///
/// Cloning is O(1), which is what lets the engines snapshot a stack or a
/// continuation at every choice point.
pub(crate) struct PList<T> {
    head: Option<Arc<Cell<T>>>,
    len: usize,
}

struct Cell<T> {
    item: T,
    next: Option<Arc<Cell<T>>>,
}

impl<T> PList<T> {
    pub(crate) fn new() -> Self {
        PList { head: None, len: 0 }
    }

    pub(crate) fn len(&self) -> usize {
        self.len
    }

    pub(crate) fn is_empty(&self) -> bool {
        self.head.is_none()
    }

    pub(crate) fn first(&self) -> Option<&T> {
        self.head.as_ref().map(|cell| &cell.item)
    }

    pub(crate) fn cons(&self, item: T) -> Self {
        PList {
            head: Some(Arc::new(Cell {
                item,
                next: self.head.clone(),
            })),
            len: self.len + 1,
        }
    }

    /// The list without its first element.
    pub(crate) fn rest(&self) -> Self {
        match &self.head {
            None => PList::new(),
            Some(cell) => PList {
                head: cell.next.clone(),
                len: self.len - 1,
            },
        }
    }

    pub(crate) fn iter(&self) -> Iter<'_, T> {
        Iter {
            next: self.head.as_deref(),
        }
    }
}

impl<T: Clone> PList<T> {
    /// Split off the first element, moving it out when this list is its only
    /// owner.
    pub(crate) fn uncons(mut self) -> Option<(T, Self)> {
        let cell = self.head.take()?;
        let len = self.len - 1;
        match Arc::try_unwrap(cell) {
            Ok(Cell { item, next }) => Some((item, PList { head: next, len })),
            Err(shared) => Some((
                shared.item.clone(),
                PList {
                    head: shared.next.clone(),
                    len,
                },
            )),
        }
    }
}

impl<T> Clone for PList<T> {
    fn clone(&self) -> Self {
        PList {
            head: self.head.clone(),
            len: self.len,
        }
    }
}

impl<T> Default for PList<T> {
    fn default() -> Self {
        PList::new()
    }
}

// Long lists would otherwise be dropped recursively, one frame per cell.
impl<T> Drop for PList<T> {
    fn drop(&mut self) {
        let mut next = self.head.take();
        while let Some(cell) = next {
            match Arc::try_unwrap(cell) {
                Ok(mut owned) => next = owned.next.take(),
                Err(_) => break,
            }
        }
    }
}

pub(crate) struct Iter<'a, T> {
    next: Option<&'a Cell<T>>,
}

impl<'a, T> Iterator for Iter<'a, T> {
    type Item = &'a T;

    fn next(&mut self) -> Option<&'a T> {
        let cell = self.next?;
        self.next = cell.next.as_deref();
        Some(&cell.item)
    }
}
