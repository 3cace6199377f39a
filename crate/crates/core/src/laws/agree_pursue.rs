use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{dist_c, dist_cc, CirclePos, Point};
use crate::laws::LawParams;
use crate::netmodel::{Law, MessageArray, StdPayload};
use crate::scalar::Scalar;

/// Direction of motion on the circle.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    /// Clockwise.
    C,
    /// Counterclockwise.
    Cc,
}

/// Logic variables of agree-and-pursue.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AgreePursueLogic {
    pub direction: Direction,
    /// Starts at the agent's one-based identifier and only ever increases.
    pub priority: usize,
}

impl AgreePursueLogic {
    /// Initial logic of agent `i` (zero-based): priority `i + 1`.
    pub fn initial(i: usize, direction: Direction) -> Self {
        AgreePursueLogic { direction, priority: i + 1 }
    }
}

/// Leader election by max-priority flooding, combined with pursuit of the
/// nearest neighbor in the agreed direction on the unit circle.
#[derive(Clone, Debug)]
pub struct AgreePursue<T> {
    k_prop: T,
    r: T,
}

/// Requires `k_prop` in `(0, 1/2)`.
pub fn law_agree_pursue<T: Scalar>(params: &LawParams<T>) -> Result<AgreePursue<T>> {
    params.check_r()?;
    let half = T::one() / (T::one() + T::one());
    if !(params.k_prop > T::zero() && params.k_prop < half) {
        return Err(Error::InvalidParameter(format!(
            "agree-and-pursue needs k_prop in (0, 1/2), got {}",
            params.k_prop
        )));
    }
    Ok(AgreePursue { k_prop: params.k_prop, r: params.r })
}

impl<T: Scalar> AgreePursue<T> {
    /// Initial logic for `n` agents with the given directions.
    pub fn initial_logic(&self, directions: &[Direction]) -> Vec<AgreePursueLogic> {
        directions.iter().enumerate().map(|(i, &d)| AgreePursueLogic::initial(i, d)).collect()
    }
}

impl<T: Scalar> Law<T> for AgreePursue<T> {
    type Logic = AgreePursueLogic;
    type Payload = StdPayload<T, AgreePursueLogic>;

    fn name(&self) -> &str {
        "agr-pursuit"
    }

    fn is_static(&self) -> bool {
        false
    }

    fn msg(&self, _t: usize, _i: usize, x: &Point<T>, w: &Self::Logic, _to: usize) -> Option<Self::Payload> {
        Some(StdPayload { x: x.clone(), w: *w })
    }

    fn stf(&self, _t: usize, _i: usize, w: &Self::Logic, y: &MessageArray<Self::Payload>) -> Self::Logic {
        let mut out = *w;
        for (_, m) in y.non_null() {
            if m.w.priority > out.priority {
                out = m.w;
            }
        }
        out
    }

    fn round_map(
        &self,
        _t: usize,
        _i: usize,
        x: &Point<T>,
        w: &Self::Logic,
        y: &MessageArray<Self::Payload>,
    ) -> Result<Point<T>> {
        let own = CirclePos::new(x.x());
        let mut d = self.r;
        for (_, m) in y.non_null() {
            let other = CirclePos::new(m.x.x());
            let gap = match w.direction {
                Direction::Cc => dist_cc(own, other),
                Direction::C => dist_c(own, other),
            };
            // A coincident neighbor is not "ahead"; counting it would freeze both agents.
            if gap > T::zero() && gap < d {
                d = gap;
            }
        }
        let step = match w.direction {
            Direction::Cc => self.k_prop * d,
            Direction::C => -(self.k_prop * d),
        };
        Ok(Point::scalar(own.rotate(step).angle()))
    }
}
