use crate::error::{Error, Result};
use crate::geom::{mass_centroid_1d, Density, Interval, Point};
use crate::laws::LawParams;
use crate::netmodel::{Law, MessageArray};
use crate::scalar::{lit, Scalar};

/// The part of `q` that is within `r/2` of `x` and at least as close to `x`
/// as to any of `others`. A neighbor at `x` itself imposes no constraint.
pub fn deployment_cell<T: Scalar>(x: T, others: impl IntoIterator<Item = T>, r: T, q: Interval<T>) -> Interval<T> {
    let half = lit::<T>(0.5);
    let mut lo = q.lo.max(x - r * half);
    let mut hi = q.hi.min(x + r * half);
    for p in others {
        if p < x {
            lo = lo.max((p + x) * half);
        } else if p > x {
            hi = hi.min((p + x) * half);
        }
    }
    // x in Q keeps lo <= x <= hi; the guard only absorbs rounding.
    if hi < lo {
        hi = lo;
    }
    Interval { lo, hi }
}

/// One-dimensional deployment: each agent moves to the centroid of its
/// range-limited Voronoi cell within `Q`, weighted by the density.
#[derive(Clone, Debug)]
pub struct CentroidDeploy<T> {
    r: T,
    q: Interval<T>,
    phi: Density<T>,
    n_quad: usize,
}

/// Requires a region `Q`. Positions must be one-dimensional.
pub fn law_centroid_deploy<T: Scalar>(params: &LawParams<T>) -> Result<CentroidDeploy<T>> {
    params.check_r()?;
    let q = params.q.ok_or_else(|| Error::InvalidParameter("centroid deployment needs a region Q".into()))?;
    Ok(CentroidDeploy { r: params.r, q, phi: params.phi.clone(), n_quad: params.n_quad })
}

impl<T: Scalar> CentroidDeploy<T> {
    pub fn region(&self) -> Interval<T> {
        self.q
    }

    pub fn density(&self) -> &Density<T> {
        &self.phi
    }
}

impl<T: Scalar> Law<T> for CentroidDeploy<T> {
    type Logic = ();
    type Payload = Point<T>;

    fn name(&self) -> &str {
        "centrd"
    }

    fn is_static(&self) -> bool {
        true
    }

    fn msg(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), _to: usize) -> Option<Point<T>> {
        Some(x.clone())
    }

    fn stf(&self, _t: usize, _i: usize, _w: &(), _y: &MessageArray<Point<T>>) {}

    fn round_map(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), y: &MessageArray<Point<T>>) -> Result<Point<T>> {
        if x.dim() != 1 {
            return Err(Error::UnsupportedDimension { dim: x.dim(), what: "centroid deployment" });
        }
        let cell = deployment_cell(x.x(), y.non_null().map(|(_, p)| p.x()), self.r, self.q);
        let (_, c) = mass_centroid_1d(cell, &self.phi, self.n_quad)?;
        Ok(Point::scalar(c.max(self.q.lo).min(self.q.hi)))
    }
}
