use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::geom::Interval;
use crate::scalar::{count, lit, Scalar};

/// Default number of Simpson nodes per integration interval.
pub const DEFAULT_QUAD_NODES: usize = 129;

/// A positive density on the line.
///
/// `Uniform` integrates in closed form; `Custom` goes through composite
/// Simpson quadrature.
#[derive(Clone)]
pub enum Density<T> {
    Uniform,
    Custom(Arc<dyn Fn(T) -> T + Send + Sync>),
}

impl<T: Scalar> Density<T> {
    pub fn from_fn(f: impl Fn(T) -> T + Send + Sync + 'static) -> Self {
        Density::Custom(Arc::new(f))
    }

    pub fn eval(&self, q: T) -> T {
        match self {
            Density::Uniform => T::one(),
            Density::Custom(f) => f(q),
        }
    }

    pub fn is_uniform(&self) -> bool {
        matches!(self, Density::Uniform)
    }
}

impl<T> fmt::Debug for Density<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Density::Uniform => f.write_str("Uniform"),
            Density::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

/// Composite Simpson rule for `f` on `[lo, hi]` using `nodes` points.
///
/// An even node count is bumped by one so the number of panels is even.
pub fn integrate_simpson<T: Scalar>(f: impl Fn(T) -> T, lo: T, hi: T, nodes: usize) -> T {
    let mut m = nodes.max(3) - 1;
    if m % 2 == 1 {
        m += 1;
    }
    if lo == hi {
        return T::zero();
    }
    let h = (hi - lo) / count::<T>(m);
    let (two, four) = (lit::<T>(2.0), lit::<T>(4.0));
    let mut acc = f(lo) + f(hi);
    for k in 1..m {
        let w = if k % 2 == 1 { four } else { two };
        acc += w * f(lo + h * count::<T>(k));
    }
    acc * h / lit::<T>(3.0)
}

/// `(mass, first moment)` of `phi` over `s`.
pub fn mass_moment_1d<T: Scalar>(s: Interval<T>, phi: &Density<T>, n_quad: usize) -> Result<(T, T)> {
    if n_quad < 2 {
        return Err(Error::InvalidParameter(format!("n_quad = {n_quad} < 2")));
    }
    let (lo, hi) = (s.lo, s.hi);
    if lo == hi {
        return Ok((T::zero(), T::zero()));
    }
    Ok(match phi {
        Density::Uniform => {
            let half = lit::<T>(0.5);
            (hi - lo, (hi * hi - lo * lo) * half)
        }
        Density::Custom(f) => {
            (integrate_simpson(|q| f(q), lo, hi, n_quad), integrate_simpson(|q| q * f(q), lo, hi, n_quad))
        }
    })
}

/// Mass and centroid of `phi` on `s`.
///
/// A zero-length interval has mass 0 and centroid `s.lo`.
pub fn mass_centroid_1d<T: Scalar>(s: Interval<T>, phi: &Density<T>, n_quad: usize) -> Result<(T, T)> {
    let (mass, moment) = mass_moment_1d(s, phi, n_quad)?;
    if s.lo == s.hi {
        return Ok((T::zero(), s.lo));
    }
    if phi.is_uniform() {
        return Ok((mass, s.midpoint()));
    }
    if mass <= T::zero() {
        return Err(Error::Precondition("density must be positive on the interval".into()));
    }
    Ok((mass, moment / mass))
}

/// Mass and centroid with node doubling until both change by less than `tol`
/// (relative to their magnitude) or `max_nodes` is reached.
pub fn mass_centroid_1d_refined<T: Scalar>(
    s: Interval<T>,
    phi: &Density<T>,
    tol: T,
    max_nodes: usize,
) -> Result<(T, T)> {
    let mut nodes = 17;
    let mut prev = mass_centroid_1d(s, phi, nodes)?;
    while nodes < max_nodes {
        nodes = 2 * nodes - 1;
        let cur = mass_centroid_1d(s, phi, nodes)?;
        let dm = (cur.0 - prev.0).abs() / cur.0.abs().max(T::one());
        let dc = (cur.1 - prev.1).abs() / cur.1.abs().max(T::one());
        prev = cur;
        if dm < tol && dc < tol {
            break;
        }
    }
    Ok(prev)
}
