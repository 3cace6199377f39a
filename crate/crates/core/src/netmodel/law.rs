use std::fmt::Debug;

use crate::error::Result;
use crate::geom::Point;
use crate::netmodel::MessageArray;
use crate::scalar::Scalar;

/// A uniform control and communication law.
///
/// Each agent runs the same three functions. `t` is the round index, `i` the
/// agent's own identifier (zero-based), and message arrays are indexed by
/// sender. Identifiers are available to every function so that laws may use
/// them as unique IDs; uniform laws simply ignore them.
pub trait Law<T: Scalar>: Sync {
    /// Logic variable `w`; `()` for static laws.
    type Logic: Clone + Debug + PartialEq + Send + Sync;
    /// Non-null message content.
    type Payload: Clone + Debug + PartialEq + Send + Sync;

    /// Short identifier used in reports.
    fn name(&self) -> &str;

    /// True when the law has no logic variables.
    fn is_static(&self) -> bool;

    /// Message agent `i` sends to `to`, or `None` for the null message.
    fn msg(&self, t: usize, i: usize, x: &Point<T>, w: &Self::Logic, to: usize) -> Option<Self::Payload>;

    /// Logic update from the received messages.
    fn stf(&self, t: usize, i: usize, w: &Self::Logic, y: &MessageArray<Self::Payload>) -> Self::Logic;

    /// Position at the next communication instant, given the updated logic.
    fn round_map(
        &self,
        t: usize,
        i: usize,
        x: &Point<T>,
        w: &Self::Logic,
        y: &MessageArray<Self::Payload>,
    ) -> Result<Point<T>>;
}
