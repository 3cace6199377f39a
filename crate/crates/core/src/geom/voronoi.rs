use crate::error::{Error, Result};
use crate::geom::Interval;
use crate::scalar::{lit, Scalar};

/// Voronoi cells of sorted points on the line, clipped to `q`.
///
/// Cell `i` runs from the midpoint with its left neighbor to the midpoint
/// with its right neighbor; the outermost cells extend to the ends of `q`.
/// Coincident points share a degenerate boundary, so in a run of equal
/// points the inner cells collapse to a single point.
pub fn voronoi_1d<T: Scalar>(points: &[T], q: Interval<T>) -> Result<Vec<Interval<T>>> {
    if points.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    if points.windows(2).any(|w| w[0] > w[1]) {
        return Err(Error::InvalidInput("voronoi_1d expects sorted points".into()));
    }
    if let Some(p) = points.iter().find(|&&p| !q.contains(p)) {
        return Err(Error::InvalidInput(format!("point {p} lies outside [{}, {}]", q.lo, q.hi)));
    }
    let half = lit::<T>(0.5);
    let n = points.len();
    let mut cells = Vec::with_capacity(n);
    let mut lo = q.lo;
    for i in 0..n {
        let hi = if i + 1 < n { (points[i] + points[i + 1]) * half } else { q.hi };
        cells.push(Interval { lo, hi });
        lo = hi;
    }
    Ok(cells)
}

/// Voronoi cells for unsorted agent positions, returned in agent order.
///
/// Ties between coincident agents are broken by index: the lower index gets
/// the cell on the left.
pub fn voronoi_1d_by_agent<T: Scalar>(x: &[T], q: Interval<T>) -> Result<Vec<Interval<T>>> {
    let mut order: Vec<usize> = (0..x.len()).collect();
    order.sort_by(|&a, &b| x[a].partial_cmp(&x[b]).expect("finite positions").then(a.cmp(&b)));
    let sorted: Vec<T> = order.iter().map(|&i| x[i]).collect();
    let cells = voronoi_1d(&sorted, q)?;
    let mut out = vec![Interval { lo: q.lo, hi: q.lo }; x.len()];
    for (rank, &agent) in order.iter().enumerate() {
        out[agent] = cells[rank];
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn iv(lo: f64, hi: f64) -> Interval<f64> {
        Interval::new(lo, hi).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(voronoi_1d(&[1.0, 3.0], iv(0.0, 4.0)).unwrap(), vec![iv(0.0, 2.0), iv(2.0, 4.0)]);
        assert_eq!(voronoi_1d(&[5.0], iv(0.0, 10.0)).unwrap(), vec![iv(0.0, 10.0)]);
        assert_eq!(voronoi_1d(&[1.0, 2.0, 6.0], iv(0.0, 8.0)).unwrap(), vec![iv(0.0, 1.5), iv(1.5, 4.0), iv(4.0, 8.0)]);
    }

    #[test]
    fn coincident_points_share_boundary() {
        let cells = voronoi_1d(&[1.0, 2.0, 2.0, 2.0, 3.0], iv(0.0, 4.0)).unwrap();
        assert_eq!(cells[2], iv(2.0, 2.0));
        assert_eq!(cells[1].hi, 2.0);
        assert_eq!(cells[3].lo, 2.0);
    }

    #[test]
    fn unsorted_and_errors() {
        let cells = voronoi_1d_by_agent(&[3.0, 1.0], iv(0.0, 4.0)).unwrap();
        assert_eq!(cells, vec![iv(2.0, 4.0), iv(0.0, 2.0)]);
        assert!(voronoi_1d(&[2.0, 1.0], iv(0.0, 4.0)).is_err());
        assert!(voronoi_1d(&[5.0], iv(0.0, 4.0)).is_err());
        assert!(voronoi_1d::<f64>(&[], iv(0.0, 4.0)).is_err());
    }
}
