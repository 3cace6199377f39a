use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{
    edges_circle_r_disk, edges_r_disk, edges_r_inf_disk, edges_r_ld, CirclePos, EdgeSet, Interval, Point,
};
use crate::scalar::Scalar;

/// Where agent positions live.
///
/// Circle positions are stored as 1-D points holding the angle in `[0, 2π)`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum StateSpace<T> {
    /// `R^d`.
    Euclidean { dim: usize },
    /// The unit circle `S^1`.
    Circle,
    /// A compact interval `Q` of the real line; leaving it is an error.
    Segment { q: Interval<T> },
}

impl<T: Scalar> StateSpace<T> {
    /// Ambient dimension of a position.
    pub fn dim(&self) -> usize {
        match self {
            StateSpace::Euclidean { dim } => *dim,
            StateSpace::Circle | StateSpace::Segment { .. } => 1,
        }
    }

    /// Checks that `p` is a valid position.
    pub fn check(&self, p: &Point<T>) -> std::result::Result<(), String> {
        if p.dim() != self.dim() {
            return Err(format!("dimension {} instead of {}", p.dim(), self.dim()));
        }
        if p.coords().iter().any(|c| !c.is_finite()) {
            return Err("non-finite coordinate".into());
        }
        match self {
            StateSpace::Euclidean { .. } => Ok(()),
            StateSpace::Circle => {
                let a = p.x();
                if a < T::zero() || a >= T::TAU() {
                    Err(format!("angle {a} not reduced to [0, 2π)"))
                } else {
                    Ok(())
                }
            }
            StateSpace::Segment { q } => {
                if q.contains(p.x()) {
                    Ok(())
                } else {
                    Err(format!("position {} outside [{}, {}]", p.x(), q.lo, q.hi))
                }
            }
        }
    }
}

/// Proximity edge map selecting who talks to whom.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EdgeMapKind {
    RDisk,
    RInfDisk,
    RLd,
    CircleRDisk,
}

/// Agent count, state space and communication edge map with its range `r`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct NetworkSpec<T> {
    pub n: usize,
    pub state_space: StateSpace<T>,
    pub edge_map: EdgeMapKind,
    pub r: T,
}

impl<T: Scalar> NetworkSpec<T> {
    /// Validated constructor.
    pub fn new(n: usize, state_space: StateSpace<T>, edge_map: EdgeMapKind, r: T) -> Result<Self> {
        let spec = NetworkSpec { n, state_space, edge_map, r };
        spec.validate()?;
        Ok(spec)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::InvalidParameter("network needs at least one agent".into()));
        }
        if !(self.r > T::zero() && self.r.is_finite()) {
            return Err(Error::InvalidParameter(format!("range r = {} must be positive", self.r)));
        }
        let circle = matches!(self.state_space, StateSpace::Circle);
        if circle != (self.edge_map == EdgeMapKind::CircleRDisk) {
            return Err(Error::InvalidParameter(format!(
                "edge map {:?} does not fit state space {:?}",
                self.edge_map, self.state_space
            )));
        }
        if let StateSpace::Euclidean { dim: 0 } = self.state_space {
            return Err(Error::InvalidParameter("dimension must be at least 1".into()));
        }
        if self.edge_map == EdgeMapKind::RLd && self.state_space.dim() > 2 {
            return Err(Error::UnsupportedDimension {
                dim: self.state_space.dim(),
                what: "r-limited Delaunay edge map",
            });
        }
        Ok(())
    }

    /// Communication edge set at configuration `x`.
    pub fn edges(&self, x: &[Point<T>]) -> Result<EdgeSet> {
        Ok(match self.edge_map {
            EdgeMapKind::RDisk => edges_r_disk(x, self.r),
            EdgeMapKind::RInfDisk => edges_r_inf_disk(x, self.r),
            EdgeMapKind::RLd => edges_r_ld(x, self.r)?,
            EdgeMapKind::CircleRDisk => {
                let theta: Vec<CirclePos<T>> = x.iter().map(|p| CirclePos::new(p.x())).collect();
                edges_circle_r_disk(&theta, self.r)
            }
        })
    }
}
