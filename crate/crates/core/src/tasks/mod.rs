//! Coordination tasks and the range-limited deployment objective.

mod deployment;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{dist_c, dist_cc, CirclePos, Density, EdgeSet, Interval, Point};
use crate::laws::{AgreePursueLogic, Direction};
use crate::scalar::{count, lit, Scalar};

pub use deployment::{clipped_cells, gradient_H_r, line_partition, objective_H_r, task_eps_r_deployment};

/// Absolute tolerance below which two positions count as coincident.
pub const RENDEZVOUS_TOL: f64 = 1e-12;

/// Every communicating pair is coincident.
pub fn task_rendezvous<T: Scalar>(x: &[Point<T>], e: &EdgeSet) -> bool {
    let tol = lit::<T>(RENDEZVOUS_TOL);
    e.iter().all(|(i, j)| x[i].dist(&x[j]) <= tol)
}

/// Every agent is at distance strictly less than `eps` from the average of
/// itself and its neighbors.
pub fn task_eps_rendezvous<T: Scalar>(x: &[Point<T>], e: &EdgeSet, eps: T) -> bool {
    (0..x.len()).all(|i| {
        let nb = e.neighbors(i);
        let mut sum = x[i].clone();
        for &j in nb {
            sum = sum.add(&x[j]);
        }
        let avg = sum.scale(T::one() / count::<T>(nb.len() + 1));
        x[i].dist(&avg) < eps
    })
}

/// All agents hold the same direction.
pub fn task_direction(w: &[AgreePursueLogic]) -> bool {
    let dirs: Vec<Direction> = w.iter().map(|l| l.direction).collect();
    dirs.windows(2).all(|p| p[0] == p[1])
}

/// For every agent, the gaps to the nearest clockwise and nearest
/// counterclockwise other agents differ by less than `eps`.
pub fn task_eps_equidistance<T: Scalar>(theta: &[CirclePos<T>], eps: T) -> bool {
    let n = theta.len();
    (0..n).all(|i| {
        let mut c = T::infinity();
        let mut cc = T::infinity();
        for j in (0..n).filter(|&j| j != i) {
            c = c.min(dist_c(theta[i], theta[j]));
            cc = cc.min(dist_cc(theta[i], theta[j]));
        }
        n < 2 || (c - cc).abs() < eps
    })
}

/// A task selectable by name in scenario files.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum TaskSpec<T> {
    Rendezvous,
    EpsRendezvous { eps: T },
    DirectionAgreement,
    EpsEquidistance { eps: T },
    EpsRDeployment { eps: T, r: T },
}

impl<T: Scalar> TaskSpec<T> {
    pub fn validate(&self) -> Result<()> {
        let eps = match self {
            TaskSpec::Rendezvous | TaskSpec::DirectionAgreement => return Ok(()),
            TaskSpec::EpsRendezvous { eps } | TaskSpec::EpsEquidistance { eps } => *eps,
            TaskSpec::EpsRDeployment { eps, r } => {
                if !(*r > T::zero()) {
                    return Err(Error::InvalidParameter(format!("deployment range r = {r} must be positive")));
                }
                *eps
            }
        };
        if eps > T::zero() && eps.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("task tolerance {eps} must be positive")))
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            TaskSpec::Rendezvous => "rendezvous",
            TaskSpec::EpsRendezvous { .. } => "eps-rendezvous",
            TaskSpec::DirectionAgreement => "direction-agreement",
            TaskSpec::EpsEquidistance { .. } => "eps-equidistance",
            TaskSpec::EpsRDeployment { .. } => "eps-r-deployment",
        }
    }

    /// Evaluates a position-only task. Direction agreement needs logic
    /// variables and is rejected here; deployment needs `q`.
    pub fn holds(&self, x: &[Point<T>], e: &EdgeSet, q: Option<Interval<T>>, phi: &Density<T>) -> Result<bool> {
        match *self {
            TaskSpec::Rendezvous => Ok(task_rendezvous(x, e)),
            TaskSpec::EpsRendezvous { eps } => Ok(task_eps_rendezvous(x, e, eps)),
            TaskSpec::EpsEquidistance { eps } => {
                let theta: Vec<CirclePos<T>> = x.iter().map(|p| CirclePos::new(p.x())).collect();
                Ok(task_eps_equidistance(&theta, eps))
            }
            TaskSpec::EpsRDeployment { eps, r } => {
                let q = q.ok_or_else(|| Error::InvalidParameter("deployment task needs a region Q".into()))?;
                let xs: Vec<T> = x.iter().map(|p| p.x()).collect();
                task_eps_r_deployment(&xs, q, r, eps, phi, crate::geom::DEFAULT_QUAD_NODES)
            }
            TaskSpec::DirectionAgreement => {
                Err(Error::InvalidParameter("direction agreement is evaluated on logic variables".into()))
            }
        }
    }
}
