//! The shipped control and communication laws, each with an exact round map.

mod agree_pursue;
mod average;
mod centroid;
mod circumcenter;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geom::{Density, Interval, DEFAULT_QUAD_NODES};
use crate::scalar::{lit, Scalar};

pub use agree_pursue::{law_agree_pursue, AgreePursue, AgreePursueLogic, Direction};
pub use average::{avrg_with_self, law_move_toward_average, MoveTowardAverage};
pub use centroid::{deployment_cell, law_centroid_deploy, CentroidDeploy};
pub use circumcenter::{
    constraint_lambda, law_circumcenter, law_parallel_circumcenter, Circumcenter, ParallelCircumcenter,
};

/// Parameters shared by the law constructors. Each law reads what it needs.
#[derive(Clone, Debug)]
pub struct LawParams<T> {
    pub k_prop: T,
    pub r: T,
    /// Deployment region, required by the centroid law.
    pub q: Option<Interval<T>>,
    pub phi: Density<T>,
    pub n_quad: usize,
}

impl<T: Scalar> LawParams<T> {
    /// Range `r`, gain equal to `r`, no region, uniform density.
    pub fn new(r: T) -> Self {
        LawParams { k_prop: r, r, q: None, phi: Density::Uniform, n_quad: DEFAULT_QUAD_NODES }
    }

    pub fn k_prop(mut self, k: T) -> Self {
        self.k_prop = k;
        self
    }

    pub fn region(mut self, q: Interval<T>) -> Self {
        self.q = Some(q);
        self
    }

    pub fn density(mut self, phi: Density<T>) -> Self {
        self.phi = phi;
        self
    }

    fn check_r(&self) -> Result<()> {
        if self.r > T::zero() && self.r.is_finite() {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("range r = {} must be positive", self.r)))
        }
    }
}

/// Law names accepted in scenario files.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LawKind {
    #[serde(rename = "avrg")]
    Average,
    #[serde(rename = "agr-pursuit")]
    AgreePursue,
    #[serde(rename = "crcmcntr")]
    Circumcenter,
    #[serde(rename = "pll-crcmcntr")]
    ParallelCircumcenter,
    #[serde(rename = "centrd")]
    Centroid,
}

/// Relative slack used when deciding whether a point lies in a closed ball.
pub(crate) fn ball_slack<T: Scalar>() -> T {
    lit(1e-12)
}
