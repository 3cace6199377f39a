use crate::geom::Point;
use crate::scalar::{count, lit, Scalar};

/// Integrates `ẋ = f(τ, x)` over one unit round with `steps` RK4 steps.
///
/// The shipped laws use exact round maps; this is for user laws that only
/// have a continuous-time control. The result is approximate.
pub fn integrate_rk4<T: Scalar>(f: impl Fn(T, &Point<T>) -> Point<T>, x0: &Point<T>, steps: usize) -> Point<T> {
    let steps = steps.max(1);
    let h = T::one() / count::<T>(steps);
    let half = h * lit(0.5);
    let sixth = h / lit(6.0);
    let two = lit::<T>(2.0);
    let mut x = x0.clone();
    for s in 0..steps {
        let tau = h * count::<T>(s);
        let k1 = f(tau, &x);
        let k2 = f(tau + half, &x.add(&k1.scale(half)));
        let k3 = f(tau + half, &x.add(&k2.scale(half)));
        let k4 = f(tau + h, &x.add(&k3.scale(h)));
        let incr = k1.add(&k2.scale(two)).add(&k3.scale(two)).add(&k4);
        x = x.add(&incr.scale(sixth));
    }
    x
}
