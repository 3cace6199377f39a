use serde::Serialize;

use crate::geom::Point;

/// The messages one agent receives in a round, indexed by sender.
///
/// Only non-null entries are stored. `get(j)` returns `None` for a null
/// message, which includes every sender that is not a neighbor.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MessageArray<P> {
    n: usize,
    entries: Vec<(usize, P)>,
}

impl<P> MessageArray<P> {
    /// All-null array over `n` senders.
    pub fn new(n: usize) -> Self {
        MessageArray { n, entries: Vec::new() }
    }

    /// Builds from `(sender, payload)` pairs.
    ///
    /// # Panics
    /// If a sender is out of range or repeated.
    pub fn from_entries(n: usize, mut entries: Vec<(usize, P)>) -> Self {
        entries.sort_by_key(|e| e.0);
        assert!(entries.iter().all(|e| e.0 < n), "sender out of range");
        assert!(entries.windows(2).all(|w| w[0].0 < w[1].0), "repeated sender");
        MessageArray { n, entries }
    }

    /// Sets entry `j`, replacing any previous message.
    pub fn set(&mut self, j: usize, payload: P) {
        assert!(j < self.n, "sender out of range");
        match self.entries.binary_search_by_key(&j, |e| e.0) {
            Ok(k) => self.entries[k].1 = payload,
            Err(k) => self.entries.insert(k, (j, payload)),
        }
    }

    /// Array length `N`.
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn get(&self, j: usize) -> Option<&P> {
        self.entries.binary_search_by_key(&j, |e| e.0).ok().map(|k| &self.entries[k].1)
    }

    /// Non-null entries in sender order.
    pub fn non_null(&self) -> impl Iterator<Item = (usize, &P)> {
        self.entries.iter().map(|(j, p)| (*j, p))
    }

    pub fn non_null_count(&self) -> usize {
        self.entries.len()
    }

    pub fn clear(&mut self) {
        self.entries.clear();
    }
}

/// Drops null entries and keeps every payload, duplicates included.
pub fn natural_projection<P: Clone>(y: &MessageArray<P>) -> Vec<P> {
    y.entries.iter().map(|(_, p)| p.clone()).collect()
}

/// Payload of the standard message: the sender's position and logic state.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct StdPayload<T, W> {
    pub x: Point<T>,
    pub w: W,
}

/// Standard message generation: every neighbor receives `(x, w)`.
pub fn msg_std<T: Clone, W: Clone>(_t: usize, x: &Point<T>, w: &W, _to: usize) -> Option<StdPayload<T, W>> {
    Some(StdPayload { x: x.clone(), w: w.clone() })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projection_keeps_multiplicity() {
        let y = MessageArray::from_entries(4, vec![(3, 'q'), (1, 'p')]);
        assert_eq!(natural_projection(&y), vec!['p', 'q']);
        assert!(natural_projection(&MessageArray::<char>::new(4)).is_empty());
        let dup = MessageArray::from_entries(3, vec![(0, 'p'), (2, 'p')]);
        assert_eq!(natural_projection(&dup), vec!['p', 'p']);
    }

    #[test]
    fn standard_message() {
        let x = Point::scalar(1.5);
        let a = msg_std(7, &x, &(), 3).unwrap();
        let b = msg_std(0, &x, &(), 0).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.x, x);
    }

    #[test]
    fn set_and_get() {
        let mut y = MessageArray::new(5);
        y.set(4, 1);
        y.set(2, 2);
        y.set(4, 3);
        assert_eq!(y.get(4), Some(&3));
        assert_eq!(y.get(0), None);
        assert_eq!(y.non_null().map(|e| e.0).collect::<Vec<_>>(), vec![2, 4]);
    }
}
