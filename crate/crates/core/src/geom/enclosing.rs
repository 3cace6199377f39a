use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::geom::Point;
use crate::scalar::{lit, Scalar};

/// Center of the smallest ball containing `points`.
///
/// In one dimension this is the midpoint of the extremes. In two dimensions
/// it is the smallest enclosing disk, computed by an incremental routine over
/// the lexicographically sorted input so that the result does not depend on
/// the order in which neighbors were received.
pub fn circumcenter<T: Scalar>(points: &[Point<T>]) -> Result<Point<T>> {
    enclosing_ball(points).map(|(c, _)| c)
}

/// Smallest enclosing ball as `(center, radius)`; see [`circumcenter`].
pub fn enclosing_ball<T: Scalar>(points: &[Point<T>]) -> Result<(Point<T>, T)> {
    let first = points.first().ok_or(Error::EmptyPointSet)?;
    let d = first.dim();
    if let Some(p) = points.iter().find(|p| p.dim() != d) {
        return Err(Error::DimensionMismatch { expected: d, found: p.dim() });
    }
    match d {
        1 => {
            let (lo, hi) = points.iter().fold((first.x(), first.x()), |(lo, hi), p| (lo.min(p.x()), hi.max(p.x())));
            let half = lit::<T>(0.5);
            Ok((Point::scalar((lo + hi) * half), (hi - lo) * half))
        }
        2 => Ok(min_disk(points)),
        _ => Err(Error::UnsupportedDimension { dim: d, what: "circumcenter supports d = 1 and d = 2" }),
    }
}

type P2<T> = (T, T);

fn min_disk<T: Scalar>(points: &[Point<T>]) -> (Point<T>, T) {
    let mut pts: Vec<P2<T>> = points.iter().map(|p| (p.get(0), p.get(1))).collect();
    pts.sort_by(|a, b| {
        a.0.partial_cmp(&b.0).unwrap_or(Ordering::Equal).then(a.1.partial_cmp(&b.1).unwrap_or(Ordering::Equal))
    });
    pts.dedup();

    let mut disk = Disk::point(pts[0]);
    for i in 1..pts.len() {
        if disk.contains(pts[i]) {
            continue;
        }
        disk = Disk::point(pts[i]);
        for j in 0..i {
            if disk.contains(pts[j]) {
                continue;
            }
            disk = Disk::diameter(pts[i], pts[j]);
            for k in 0..j {
                if !disk.contains(pts[k]) {
                    disk = Disk::through(pts[i], pts[j], pts[k]);
                }
            }
        }
    }
    (Point::xy(disk.c.0, disk.c.1), disk.r2.sqrt())
}

struct Disk<T> {
    c: P2<T>,
    r2: T,
}

fn d2<T: Scalar>(a: P2<T>, b: P2<T>) -> T {
    (a.0 - b.0) * (a.0 - b.0) + (a.1 - b.1) * (a.1 - b.1)
}

impl<T: Scalar> Disk<T> {
    fn point(p: P2<T>) -> Self {
        Disk { c: p, r2: T::zero() }
    }

    fn diameter(a: P2<T>, b: P2<T>) -> Self {
        let half = lit::<T>(0.5);
        let c = ((a.0 + b.0) * half, (a.1 + b.1) * half);
        Disk { c, r2: d2(a, c).max(d2(b, c)) }
    }

    /// Circle through three points. Nearly collinear triples fall back to the
    /// diameter disk of the farthest pair, which is what the exact answer
    /// degenerates to.
    fn through(a: P2<T>, b: P2<T>, c: P2<T>) -> Self {
        let (bx, by) = (b.0 - a.0, b.1 - a.1);
        let (cx, cy) = (c.0 - a.0, c.1 - a.1);
        let det = lit::<T>(2.0) * (bx * cy - by * cx);
        let scale = (bx * bx + by * by).max(cx * cx + cy * cy);
        if det.abs() <= lit::<T>(1e-14) * scale {
            let (ab, ac, bc) = (d2(a, b), d2(a, c), d2(b, c));
            return if ab >= ac && ab >= bc {
                Disk::diameter(a, b)
            } else if ac >= bc {
                Disk::diameter(a, c)
            } else {
                Disk::diameter(b, c)
            };
        }
        let b2 = bx * bx + by * by;
        let c2 = cx * cx + cy * cy;
        let ux = (cy * b2 - by * c2) / det;
        let uy = (bx * c2 - cx * b2) / det;
        let center = (a.0 + ux, a.1 + uy);
        let r2 = d2(center, a).max(d2(center, b)).max(d2(center, c));
        Disk { c: center, r2 }
    }

    fn contains(&self, p: P2<T>) -> bool {
        // Relative slack absorbs the rounding of the center computation so
        // that support points are not re-tested as outside.
        d2(self.c, p) <= self.r2 * (T::one() + lit::<T>(1e-12)) + T::min_positive_value()
    }
}
