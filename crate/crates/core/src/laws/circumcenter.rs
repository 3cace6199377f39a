use crate::error::{Error, Result};
use crate::geom::{circumcenter, Point};
use crate::laws::{ball_slack, LawParams};
use crate::netmodel::{Law, MessageArray};
use crate::scalar::{lit, Scalar};

/// Largest `lambda` in `[0, 1]` such that `(1 - lambda) q0 + lambda q1` lies
/// in every closed ball `(center, radius)`.
///
/// `q0` must lie in every ball (up to a relative slack of `1e-12`). When `q1`
/// already lies in every ball the result is exactly `1`.
pub fn constraint_lambda<T: Scalar>(q0: &Point<T>, q1: &Point<T>, balls: &[(Point<T>, T)]) -> Result<T> {
    let slack = T::one() + ball_slack::<T>();
    for (c, rho) in balls {
        if q0.dim() != c.dim() || q1.dim() != c.dim() {
            return Err(Error::DimensionMismatch { expected: q0.dim(), found: c.dim() });
        }
        if q0.dist(c) > *rho * slack {
            return Err(Error::Precondition(format!(
                "start point lies at distance {} from a ball of radius {}",
                q0.dist(c),
                rho
            )));
        }
    }
    if balls.iter().all(|(c, rho)| q1.dist(c) <= *rho * slack) {
        return Ok(T::one());
    }
    let u = q1.sub(q0);
    let a = u.dot(&u);
    let mut lambda = T::one();
    for (c, rho) in balls {
        // |w + t u|^2 <= rho^2 with w = q0 - c; the largest root of the quadratic.
        let w = q0.sub(c);
        let b = u.dot(&w);
        let cc = (w.dot(&w) - *rho * *rho).min(T::zero());
        let disc = (b * b - a * cc).max(T::zero()).sqrt();
        let root = if b > T::zero() {
            if b + disc == T::zero() {
                T::one()
            } else {
                -cc / (b + disc)
            }
        } else {
            (disc - b) / a
        };
        lambda = lambda.min(root.max(T::zero()));
    }
    Ok(lambda)
}

/// Each agent moves toward the circumcenter of itself and its neighbors,
/// as far as it can while staying within `r/2` of the midpoint between
/// itself and each neighbor.
#[derive(Clone, Debug)]
pub struct Circumcenter<T> {
    r: T,
}

pub fn law_circumcenter<T: Scalar>(params: &LawParams<T>) -> Result<Circumcenter<T>> {
    params.check_r()?;
    Ok(Circumcenter { r: params.r })
}

impl<T: Scalar> Law<T> for Circumcenter<T> {
    type Logic = ();
    type Payload = Point<T>;

    fn name(&self) -> &str {
        "crcmcntr"
    }

    fn is_static(&self) -> bool {
        true
    }

    fn msg(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), _to: usize) -> Option<Point<T>> {
        Some(x.clone())
    }

    fn stf(&self, _t: usize, _i: usize, _w: &(), _y: &MessageArray<Point<T>>) {}

    fn round_map(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), y: &MessageArray<Point<T>>) -> Result<Point<T>> {
        if y.non_null_count() == 0 {
            return Ok(x.clone());
        }
        let mut pts: Vec<Point<T>> = y.non_null().map(|(_, p)| p.clone()).collect();
        pts.push(x.clone());
        let target = circumcenter(&pts)?;
        let half_r = self.r * lit::<T>(0.5);
        let balls: Vec<(Point<T>, T)> = y.non_null().map(|(_, p)| (x.midpoint(p), half_r)).collect();
        let lambda = constraint_lambda(x, &target, &balls)?;
        if lambda == T::one() {
            Ok(target)
        } else {
            Ok(x.lerp(&target, lambda))
        }
    }
}

/// Coordinate-wise circumcenter: each coordinate moves to the midpoint of the
/// extreme values of that coordinate among the agent and its neighbors.
/// Intended for the `r`-infinity-disk graph.
#[derive(Clone, Debug, Default)]
pub struct ParallelCircumcenter;

pub fn law_parallel_circumcenter<T: Scalar>(params: &LawParams<T>) -> Result<ParallelCircumcenter> {
    params.check_r()?;
    Ok(ParallelCircumcenter)
}

impl<T: Scalar> Law<T> for ParallelCircumcenter {
    type Logic = ();
    type Payload = Point<T>;

    fn name(&self) -> &str {
        "pll-crcmcntr"
    }

    fn is_static(&self) -> bool {
        true
    }

    fn msg(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), _to: usize) -> Option<Point<T>> {
        Some(x.clone())
    }

    fn stf(&self, _t: usize, _i: usize, _w: &(), _y: &MessageArray<Point<T>>) {}

    fn round_map(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), y: &MessageArray<Point<T>>) -> Result<Point<T>> {
        let half = lit::<T>(0.5);
        let mut lo = x.coords().to_vec();
        let mut hi = lo.clone();
        for (_, p) in y.non_null() {
            if p.dim() != x.dim() {
                return Err(Error::DimensionMismatch { expected: x.dim(), found: p.dim() });
            }
            for (k, &v) in p.coords().iter().enumerate() {
                lo[k] = lo[k].min(v);
                hi[k] = hi[k].max(v);
            }
        }
        Ok(Point::new(lo.into_iter().zip(hi).map(|(a, b)| (a + b) * half).collect()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bisect(q0: &Point<f64>, q1: &Point<f64>, balls: &[(Point<f64>, f64)]) -> f64 {
        let inside = |l: f64| {
            let p = q0.lerp(q1, l);
            balls.iter().all(|(c, r)| p.dist(c) <= *r)
        };
        if inside(1.0) {
            return 1.0;
        }
        let (mut lo, mut hi) = (0.0, 1.0);
        for _ in 0..200 {
            let mid = 0.5 * (lo + hi);
            if inside(mid) {
                lo = mid;
            } else {
                hi = mid;
            }
        }
        lo
    }

    #[test]
    fn lambda_examples() {
        let q0 = Point::xy(0.0f64, 0.0);
        let balls = [(Point::xy(0.0, 0.0), 1.0)];
        assert_eq!(constraint_lambda(&q0, &Point::xy(0.5, 0.0), &balls).unwrap(), 1.0);
        assert!((constraint_lambda(&q0, &Point::xy(2.0, 0.0), &balls).unwrap() - 0.5).abs() < 1e-15);
        let outside = [(Point::xy(5.0, 0.0), 1.0)];
        assert!(constraint_lambda(&q0, &Point::xy(2.0, 0.0), &outside).is_err());
    }

    #[test]
    fn lambda_matches_bisection_on_a_fixed_instance() {
        let q0 = Point::xy(0.1, -0.2);
        let q1 = Point::xy(1.4, 0.9);
        let balls = [(Point::xy(0.3, 0.0), 0.5), (Point::xy(0.0, 0.1), 0.6), (Point::xy(0.5, 0.3), 0.9)];
        let l = constraint_lambda(&q0, &q1, &balls).unwrap();
        assert!((l - bisect(&q0, &q1, &balls)).abs() < 1e-10);
    }

    #[test]
    fn one_dimensional_round_lands_on_the_midpoint() {
        let law = law_circumcenter(&LawParams::new(1.0)).unwrap();
        let y = MessageArray::from_entries(3, vec![(0, Point::scalar(0.0)), (2, Point::scalar(1.0))]);
        let next = law.round_map(0, 1, &Point::scalar(0.7), &(), &y).unwrap();
        assert_eq!(next.x(), 0.5);
    }

    #[test]
    fn parallel_round_is_coordinatewise() {
        let law = ParallelCircumcenter;
        let y = MessageArray::from_entries(2, vec![(1, Point::xy(1.0, -1.0))]);
        let next = Law::<f64>::round_map(&law, 0, 0, &Point::xy(0.0, 0.0), &(), &y).unwrap();
        assert_eq!(next, Point::xy(0.5, -0.5));
    }
}
