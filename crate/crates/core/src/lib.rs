//! Synchronous robotic-network simulator and complexity lab.
//!
//! Agents live in `R^d` or on the unit circle, exchange messages over a
//! state-dependent proximity graph once per round, and move according to a
//! control and communication law. The crate measures how long a law takes to
//! achieve a coordination task and how many messages it spends doing so, and
//! compares those measurements with closed-form spectral predictions for the
//! tridiagonal Toeplitz and circulant matrices that govern the linear cases.
//!
//! Module map:
//!
//! - [`geom`]: circle metrics, circumcenters, quadrature, 1-D Voronoi cells and
//!   the proximity edge maps.
//! - [`netmodel`]: network descriptions, the [`netmodel::Law`] trait and the
//!   round-by-round evolution engine with trace export.
//! - [`laws`]: move-toward-average, agree-and-pursue, circumcenter, parallel
//!   circumcenter and centroid deployment.
//! - [`tasks`]: coordination task predicates and the deployment objective.
//! - [`complexity`]: cost models, time/communication complexity, rescheduling.
//! - [`spectral`]: banded Toeplitz/circulant families, eigenpairs and
//!   contraction-time bounds.
//! - [`lab`]: seeded initial conditions, scenario configs, sweeps and plots.
//!
//! Numerical code is generic over [`Scalar`] (`f32` or `f64`). The aliases at
//! the crate root fix the scalar to `f64`, which is what the CLI uses.
//!
//! Agent identifiers are zero-based indices `0..N` throughout the API.

// Parameter checks are written as `!(x > 0)` so that NaN is rejected too.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod complexity;
pub mod error;
pub mod geom;
pub mod lab;
pub mod laws;
pub mod netmodel;
mod scalar;
pub mod spectral;
pub mod tasks;

pub use error::{Error, Result};
pub use scalar::{lit, Scalar};

/// `f64` point.
pub type Point = geom::Point<f64>;
/// `f64` interval.
pub type Interval = geom::Interval<f64>;
/// `f64` circle position.
pub type CirclePos = geom::CirclePos<f64>;
/// `f64` density.
pub type Density = geom::Density<f64>;
/// `f64` network description.
pub type NetworkSpec = netmodel::NetworkSpec<f64>;
/// `f64` banded matrix description.
pub type BandedMatrixSpec = spectral::BandedMatrixSpec<f64>;
/// `f64` eigenpair.
pub type EigenPair = spectral::EigenPair<f64>;
