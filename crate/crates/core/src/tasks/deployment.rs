//! Range-limited deployment on a segment `Q`.
//!
//! Agents partition the line into Voronoi cells. Each agent is charged the
//! squared distance to the points of its cell, saturated at `(r/2)^2`.

use crate::error::{Error, Result};
use crate::geom::{integrate_simpson, mass_centroid_1d, mass_moment_1d, Density, Interval};
use crate::scalar::{lit, Scalar};

/// Voronoi partition of `q` induced by `x`, in agent order.
///
/// Agents may lie outside `q`; a cell that misses `q` is `None`. Coincident
/// agents split their shared cell at their common position, the lower index
/// taking the left part.
pub fn line_partition<T: Scalar>(x: &[T], q: Interval<T>) -> Vec<Option<Interval<T>>> {
    let half = lit::<T>(0.5);
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).expect("finite positions").then(a.cmp(&b)));
    let mut out = vec![None; x.len()];
    for (rank, &i) in order.iter().enumerate() {
        let lo = if rank == 0 { q.lo } else { q.lo.max((x[order[rank - 1]] + x[i]) * half) };
        let hi = if rank + 1 == order.len() { q.hi } else { q.hi.min((x[i] + x[order[rank + 1]]) * half) };
        if lo <= hi {
            out[i] = Some(Interval { lo, hi });
        }
    }
    out
}

/// `V_i ∩ [x_i - r/2, x_i + r/2]` for every agent, `None` when empty.
pub fn clipped_cells<T: Scalar>(x: &[T], q: Interval<T>, r: T) -> Vec<Option<Interval<T>>> {
    let ball = r * lit::<T>(0.5);
    line_partition(x, q)
        .into_iter()
        .zip(x)
        .map(|(cell, &xi)| cell.and_then(|c| c.intersect(&Interval { lo: xi - ball, hi: xi + ball })))
        .collect()
}

/// Every agent is within `eps` (inclusive) of the centroid of its clipped cell.
/// An agent whose clipped cell is empty fails the test.
pub fn task_eps_r_deployment<T: Scalar>(
    x: &[T],
    q: Interval<T>,
    r: T,
    eps: T,
    phi: &Density<T>,
    n_quad: usize,
) -> Result<bool> {
    for (cell, &xi) in clipped_cells(x, q, r).into_iter().zip(x) {
        let Some(cell) = cell else { return Ok(false) };
        let (_, c) = mass_centroid_1d(cell, phi, n_quad)?;
        if (xi - c).abs() > eps {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Integral over `q` of the saturated squared distance to the nearest agent,
/// weighted by `phi`.
#[allow(non_snake_case)]
pub fn objective_H_r<T: Scalar>(x: &[T], q: Interval<T>, r: T, phi: &Density<T>, n_quad: usize) -> Result<T> {
    if x.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if !(r > T::zero()) {
        return Err(Error::InvalidParameter(format!("range r = {r} must be positive")));
    }
    let half = r * lit::<T>(0.5);
    let sat = half * half;
    let third = lit::<T>(1.0 / 3.0);
    let mut total = T::zero();
    for (cell, &xi) in line_partition(x, q).into_iter().zip(x) {
        let Some(cell) = cell else { continue };
        let near = cell.intersect(&Interval { lo: xi - half, hi: xi + half });
        let (cell_mass, _) = mass_moment_1d(cell, phi, n_quad)?;
        let (near_mass, near_cost) = match near {
            None => (T::zero(), T::zero()),
            Some(s) => {
                let (m, _) = mass_moment_1d(s, phi, n_quad)?;
                let cost = match phi {
                    Density::Uniform => ((s.hi - xi).powi(3) - (s.lo - xi).powi(3)) * third,
                    Density::Custom(f) => integrate_simpson(|t| (t - xi) * (t - xi) * f(t), s.lo, s.hi, n_quad),
                };
                (m, cost)
            }
        };
        total += near_cost + sat * (cell_mass - near_mass);
    }
    Ok(total)
}

/// `2 * mass * (centroid - x_i)` of each clipped cell, the negative gradient
/// of [`objective_H_r`] wherever the partition is locally fixed.
#[allow(non_snake_case)]
pub fn gradient_H_r<T: Scalar>(x: &[T], q: Interval<T>, r: T, phi: &Density<T>, n_quad: usize) -> Result<Vec<T>> {
    let two = lit::<T>(2.0);
    clipped_cells(x, q, r)
        .into_iter()
        .zip(x)
        .map(|(cell, &xi)| match cell {
            None => Ok(T::zero()),
            Some(c) => {
                let (m, centroid) = mass_centroid_1d(c, phi, n_quad)?;
                Ok(two * m * (centroid - xi))
            }
        })
        .collect()
}
