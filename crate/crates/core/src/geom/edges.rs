//! Proximity edge maps. All comparisons use closed inequalities with no slack.

use crate::error::{Error, Result};
use crate::geom::{geo_dist, CirclePos, EdgeSet, Point};
use crate::scalar::{lit, Scalar};

fn pairwise(n: usize, mut adjacent: impl FnMut(usize, usize) -> bool) -> EdgeSet {
    let mut adj = vec![Vec::new(); n];
    for i in 0..n {
        for j in i + 1..n {
            if adjacent(i, j) {
                adj[i].push(j);
                adj[j].push(i);
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    EdgeSet::from_adjacency(adj)
}

/// `(i, j)` is an edge iff `‖x_i − x_j‖₂ ≤ r`.
pub fn edges_r_disk<T: Scalar>(x: &[Point<T>], r: T) -> EdgeSet {
    let r2 = r * r;
    pairwise(x.len(), |i, j| if x[i].dim() == 1 { (x[i].x() - x[j].x()).abs() <= r } else { x[i].dist_sq(&x[j]) <= r2 })
}

/// `(i, j)` is an edge iff `‖x_i − x_j‖∞ ≤ r`.
pub fn edges_r_inf_disk<T: Scalar>(x: &[Point<T>], r: T) -> EdgeSet {
    pairwise(x.len(), |i, j| x[i].dist_inf(&x[j]) <= r)
}

/// `(i, j)` is an edge iff the geodesic distance on the circle is at most `r`.
pub fn edges_circle_r_disk<T: Scalar>(theta: &[CirclePos<T>], r: T) -> EdgeSet {
    pairwise(theta.len(), |i, j| geo_dist(theta[i], theta[j]) <= r)
}

/// r-limited Delaunay edge map for `d ∈ {1, 2}`.
///
/// Two agents are adjacent when their Voronoi cells, each clipped to the
/// closed ball of radius `r/2` around its agent, share at least one point.
/// Touching at a single point counts. Coincident agents are always adjacent.
pub fn edges_r_ld<T: Scalar>(x: &[Point<T>], r: T) -> Result<EdgeSet> {
    let Some(first) = x.first() else {
        return Ok(EdgeSet::empty(0));
    };
    match first.dim() {
        1 => Ok(ld_line(x, r)),
        2 => Ok(ld_plane(x, r)),
        dim => Err(Error::UnsupportedDimension { dim, what: "r-limited Delaunay edge map" }),
    }
}

/// On the line the clipped cells of `i` and `j` meet exactly when no other
/// agent lies strictly between them and `|x_i − x_j| ≤ r`.
fn ld_line<T: Scalar>(x: &[Point<T>], r: T) -> EdgeSet {
    let n = x.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| x[a].x().partial_cmp(&x[b].x()).expect("finite positions"));
    let mut groups: Vec<&[usize]> = Vec::new();
    let mut start = 0;
    for k in 1..=n {
        if k == n || x[order[k]].x() != x[order[start]].x() {
            groups.push(&order[start..k]);
            start = k;
        }
    }
    let mut adj = vec![Vec::new(); n];
    for (g, group) in groups.iter().enumerate() {
        for &a in group.iter() {
            for &b in group.iter() {
                if a != b {
                    adj[a].push(b);
                }
            }
        }
        if let Some(next) = groups.get(g + 1) {
            if x[next[0]].x() - x[group[0]].x() <= r {
                for &a in group.iter() {
                    for &b in next.iter() {
                        adj[a].push(b);
                        adj[b].push(a);
                    }
                }
            }
        }
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    EdgeSet::from_adjacency(adj)
}

/// In the plane, a common point of the two clipped cells must lie on the
/// bisector chord `m + t·u`, `|t| ≤ sqrt((r/2)² − (d/2)²)`. Each third agent
/// cuts the chord with a half-plane, so feasibility is an interval test.
fn ld_plane<T: Scalar>(x: &[Point<T>], r: T) -> EdgeSet {
    let half_r = r * lit(0.5);
    pairwise(x.len(), |i, j| ld_pair_feasible(x, i, j, half_r))
}

fn ld_pair_feasible<T: Scalar>(x: &[Point<T>], i: usize, j: usize, half_r: T) -> bool {
    let (xi, yi) = (x[i].get(0), x[i].get(1));
    let dx = x[j].get(0) - xi;
    let dy = x[j].get(1) - yi;
    let d2 = dx * dx + dy * dy;
    if d2 == T::zero() {
        return true;
    }
    let quarter_d2 = d2 * lit(0.25);
    let slack = half_r * half_r - quarter_d2;
    if slack < T::zero() {
        return false;
    }
    let reach = slack.sqrt();
    let (mut lo, mut hi) = (-reach, reach);
    let half = lit::<T>(0.5);
    let (mx, my) = (dx * half, dy * half);
    let d = d2.sqrt();
    let (ux, uy) = (-dy / d, dx / d);
    for (k, p) in x.iter().enumerate() {
        if k == i || k == j {
            continue;
        }
        let ex = p.get(0) - xi;
        let ey = p.get(1) - yi;
        let a = ex * ex + ey * ey - lit::<T>(2.0) * (mx * ex + my * ey);
        let b = lit::<T>(2.0) * (ux * ex + uy * ey);
        if b > T::zero() {
            hi = hi.min(a / b);
        } else if b < T::zero() {
            lo = lo.max(a / b);
        } else if a < T::zero() {
            return false;
        }
        if lo > hi {
            return false;
        }
    }
    true
}
