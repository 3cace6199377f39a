use crate::error::{Error, Result};
use crate::geom::Point;
use crate::laws::LawParams;
use crate::netmodel::{Law, MessageArray};
use crate::scalar::{count, Scalar};

/// Average of the received positions together with `x`, summed in sender
/// order with `x` slotted in at index `i`.
///
/// Agents that see the same set of positions therefore perform the same
/// floating-point operations and land on bit-identical points.
pub fn avrg_with_self<T: Scalar>(i: usize, x: &Point<T>, y: &MessageArray<Point<T>>) -> Point<T> {
    let mut sum = Point::zeros(x.dim());
    let mut own_added = false;
    for (j, p) in y.non_null() {
        if !own_added && j > i {
            sum = sum.add(x);
            own_added = true;
        }
        sum = sum.add(p);
    }
    if !own_added {
        sum = sum.add(x);
    }
    sum.scale(T::one() / count::<T>(y.non_null_count() + 1))
}

/// Each agent moves toward the average of its neighbors and itself, at
/// speed `k_prop`, for one time unit.
#[derive(Clone, Debug)]
pub struct MoveTowardAverage<T> {
    k_prop: T,
}

/// Requires `k_prop >= r`, which guarantees the target is reached.
pub fn law_move_toward_average<T: Scalar>(params: &LawParams<T>) -> Result<MoveTowardAverage<T>> {
    params.check_r()?;
    if params.k_prop < params.r {
        return Err(Error::InvalidParameter(format!(
            "move-toward-average needs k_prop >= r, got k_prop = {} and r = {}",
            params.k_prop, params.r
        )));
    }
    Ok(MoveTowardAverage { k_prop: params.k_prop })
}

impl<T: Scalar> Law<T> for MoveTowardAverage<T> {
    type Logic = ();
    type Payload = Point<T>;

    fn name(&self) -> &str {
        "avrg"
    }

    fn is_static(&self) -> bool {
        true
    }

    fn msg(&self, _t: usize, _i: usize, x: &Point<T>, _w: &(), _to: usize) -> Option<Point<T>> {
        Some(x.clone())
    }

    fn stf(&self, _t: usize, _i: usize, _w: &(), _y: &MessageArray<Point<T>>) {}

    fn round_map(&self, _t: usize, i: usize, x: &Point<T>, _w: &(), y: &MessageArray<Point<T>>) -> Result<Point<T>> {
        let target = avrg_with_self(i, x, y);
        let gap = target.dist(x);
        if gap <= self.k_prop {
            Ok(target)
        } else {
            Ok(x.lerp(&target, self.k_prop / gap))
        }
    }
}
