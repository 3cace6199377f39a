use serde::{Deserialize, Serialize};

use crate::scalar::Scalar;

/// Reduces an angle into `[0, 2*pi)`.
pub fn reduce_angle<T: Scalar>(theta: T) -> T {
    let two_pi = T::TAU();
    let mut a = theta % two_pi;
    if a < T::zero() {
        a += two_pi;
    }
    // `-tiny % 2pi + 2pi` can round up to exactly 2pi.
    if a >= two_pi {
        a = T::zero();
    }
    a
}

/// A position on the unit circle, measured counterclockwise in radians.
#[derive(Clone, Copy, Debug, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct CirclePos<T>(T);

impl<T: Scalar> CirclePos<T> {
    /// Stores `theta` reduced modulo `2*pi`.
    pub fn new(theta: T) -> Self {
        CirclePos(reduce_angle(theta))
    }

    pub fn angle(self) -> T {
        self.0
    }

    /// Rotates counterclockwise by `delta` (negative `delta` turns clockwise).
    pub fn rotate(self, delta: T) -> Self {
        CirclePos::new(self.0 + delta)
    }
}

/// Clockwise distance from `x` to `y`: `(x - y) mod 2*pi`.
pub fn dist_c<T: Scalar>(x: CirclePos<T>, y: CirclePos<T>) -> T {
    reduce_angle(x.0 - y.0)
}

/// Counterclockwise distance from `x` to `y`: `(y - x) mod 2*pi`.
pub fn dist_cc<T: Scalar>(x: CirclePos<T>, y: CirclePos<T>) -> T {
    reduce_angle(y.0 - x.0)
}

/// Geodesic distance, the shorter of the two arcs. Lies in `[0, pi]`.
pub fn geo_dist<T: Scalar>(x: CirclePos<T>, y: CirclePos<T>) -> T {
    dist_c(x, y).min(dist_cc(x, y))
}
