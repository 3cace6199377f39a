use crate::error::{Error, Result};
use crate::scalar::{count, lit, Scalar};
use crate::spectral::{circ_eigenpairs, norm2, p_minus_apply, p_plus_apply, trid_eigenpairs, BandedMatrixSpec, Family};

/// `x(0), ..., x(steps)` for `x(l+1) = A x(l)`.
pub fn iterate_linear<T: Scalar>(spec: &BandedMatrixSpec<T>, x0: &[T], steps: usize) -> Result<Vec<Vec<T>>> {
    spec.validate()?;
    check_len(spec, x0)?;
    let mut out = Vec::with_capacity(steps + 1);
    out.push(x0.to_vec());
    for l in 0..steps {
        let next = spec.apply(&out[l]);
        out.push(next);
    }
    Ok(out)
}

fn check_len<T: Scalar>(spec: &BandedMatrixSpec<T>, x: &[T]) -> Result<()> {
    if x.len() == spec.n {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected: spec.n, found: x.len() })
    }
}

/// What a trajectory contracts toward.
#[derive(Clone, Debug, PartialEq)]
pub enum Reference<T> {
    Origin,
    /// The projection onto the invariant direction of the family (all ones
    /// for `Circ` and `ATrid+`, alternating signs for `ATrid-`), evolving
    /// with its eigenvalue.
    Average,
    /// A fixed point `x*`.
    Fixed(Vec<T>),
}

/// Smallest `l` with `||x(l) - ref(l)|| <= eps ||x(0) - ref(0)||`, or `None`
/// if that does not happen within `max_steps`.
pub fn time_to_contraction<T: Scalar>(
    spec: &BandedMatrixSpec<T>,
    x0: &[T],
    eps: T,
    reference: &Reference<T>,
    max_steps: usize,
) -> Result<Option<usize>> {
    spec.validate()?;
    check_len(spec, x0)?;
    if !(eps > T::zero()) {
        return Err(Error::InvalidParameter(format!("eps = {eps} must be positive")));
    }
    let n = spec.n;
    let lead: Option<(Vec<T>, T)> = match reference {
        Reference::Average => Some(match spec.family {
            Family::Circ => (vec![T::one(); n], spec.a + spec.b + spec.c),
            Family::ATridPlus => (vec![T::one(); n], spec.b + spec.a + spec.a),
            Family::ATridMinus => {
                ((0..n).map(|k| if k % 2 == 0 { T::one() } else { -T::one() }).collect(), spec.b - spec.a - spec.a)
            }
            Family::Trid => return Err(Error::InvalidParameter("Trid has no invariant average direction".into())),
        }),
        _ => None,
    };
    if let Reference::Fixed(xs) = reference {
        check_len(spec, xs)?;
    }
    let coef0 = lead.as_ref().map(|(v, _)| v.iter().zip(x0).map(|(&u, &w)| u * w).sum::<T>() / count::<T>(n));
    let gap = |x: &[T], l: usize| -> T {
        let r: Vec<T> = match (reference, &lead) {
            (Reference::Origin, _) => vec![T::zero(); n],
            (Reference::Fixed(xs), _) => xs.clone(),
            (Reference::Average, Some((v, lambda))) => {
                let c = coef0.unwrap_or_else(T::zero) * lambda.powi(l as i32);
                v.iter().map(|&u| c * u).collect()
            }
            (Reference::Average, None) => unreachable!("lead is set for the average reference"),
        };
        let d: Vec<T> = x.iter().zip(&r).map(|(&u, &w)| u - w).collect();
        norm2(&d)
    };
    let target = eps * gap(x0, 0);
    let mut x = x0.to_vec();
    for l in 0..=max_steps {
        if gap(&x, l) <= target {
            return Ok(Some(l));
        }
        x = spec.apply(&x);
    }
    Ok(None)
}

fn dominant_index<T: Scalar>(values: impl Iterator<Item = T>) -> usize {
    let mut best = (0, T::neg_infinity());
    for (i, v) in values.enumerate() {
        if v > best.1 {
            best = (i, v);
        }
    }
    best.0
}

/// Slowest-decaying unit direction for the family.
///
/// `Trid`: the real eigenvector of largest `|lambda|` (for `a = c` this is
/// `v_N` with components `sqrt(2/(N+1)) sin(k pi/(N+1))`, or its alternating
/// twin). `Circ`: `v + conj(v)` for the non-constant mode of largest
/// `|lambda|`. `ATrid±`: `P± [0; v]` with `v` the inner worst vector.
pub fn worst_case_vector<T: Scalar>(spec: &BandedMatrixSpec<T>) -> Result<Vec<T>> {
    spec.validate()?;
    let unit = |v: Vec<T>| {
        let s = norm2(&v);
        v.into_iter().map(|u| u / s).collect::<Vec<T>>()
    };
    match spec.family {
        Family::Trid => {
            if !(spec.a * spec.c > T::zero()) {
                return Err(Error::InvalidParameter("real worst vector needs a c > 0".into()));
            }
            let pairs = trid_eigenpairs(spec.a, spec.b, spec.c, spec.n)?;
            let i = dominant_index(pairs.iter().map(|p| p.value.norm()));
            Ok(unit(pairs[i].vector.iter().map(|z| z.re).collect()))
        }
        Family::Circ => {
            let pairs = circ_eigenpairs(spec.a, spec.b, spec.c, spec.n)?;
            let i = dominant_index(pairs[..spec.n - 1].iter().map(|p| p.value.norm()));
            Ok(unit(pairs[i].vector.iter().map(|z| z.re + z.re).collect()))
        }
        Family::ATridPlus | Family::ATridMinus => {
            let inner = if spec.n == 2 {
                vec![T::one()]
            } else {
                worst_case_vector(&BandedMatrixSpec::trid(spec.a, spec.b, spec.a, spec.n - 1))?
            };
            let x = if spec.family == Family::ATridPlus { p_plus_apply(&inner) } else { p_minus_apply(&inner) };
            Ok(unit(x))
        }
    }
}

/// Worst-case per-step contraction factor: the largest `|lambda|` for
/// `Trid`, the largest non-constant mode for `Circ`, and the inner block's
/// largest for `ATrid±`.
pub fn contraction_rate<T: Scalar>(spec: &BandedMatrixSpec<T>) -> Result<T> {
    spec.validate()?;
    let max_abs = |it: &mut dyn Iterator<Item = T>| it.fold(T::zero(), |m, v| m.max(v));
    Ok(match spec.family {
        Family::Trid => max_abs(&mut trid_eigenpairs(spec.a, spec.b, spec.c, spec.n)?.iter().map(|p| p.value.norm())),
        Family::Circ => {
            let pairs = circ_eigenpairs(spec.a, spec.b, spec.c, spec.n)?;
            max_abs(&mut pairs[..spec.n - 1].iter().map(|p| p.value.norm()))
        }
        Family::ATridPlus | Family::ATridMinus => {
            if spec.n == 2 {
                spec.b.abs()
            } else {
                max_abs(&mut trid_eigenpairs(spec.a, spec.b, spec.a, spec.n - 1)?.iter().map(|p| p.value.norm()))
            }
        }
    })
}

/// `ceil(log(1/eps) / -log(rate))`, the number of steps after which the
/// worst-case direction has shrunk by `eps`.
pub fn ell_bound<T: Scalar>(spec: &BandedMatrixSpec<T>, eps: T) -> Result<usize> {
    let rate = contraction_rate(spec)?;
    if !(rate < T::one()) {
        return Err(Error::Precondition(format!("contraction rate {rate} is not below 1")));
    }
    if !(eps > T::zero() && eps < T::one()) {
        return Err(Error::InvalidParameter(format!("eps = {eps} must lie in (0, 1)")));
    }
    if rate == T::zero() {
        return Ok(1);
    }
    let steps = (-eps.ln() / -rate.ln()).ceil();
    steps.to_usize().ok_or_else(|| Error::InvalidParameter("bound overflows".into()))
}

/// Step count after which `Trid_N(a, b, 0)` has contracted every initial
/// condition by `eps`: `2 beta + 2 alpha max(1, log alpha)` with
/// `alpha = (N-1)/(-log|b|)` and `beta = (|a/b| - log eps)/(-log|b|)`.
/// For `b = 0` the matrix is nilpotent and `N` steps suffice.
pub fn nilpotent_bound_steps<T: Scalar>(a: T, b: T, n: usize, eps: T) -> Result<usize> {
    if !(eps > T::zero() && eps < T::one()) {
        return Err(Error::InvalidParameter(format!("eps = {eps} must lie in (0, 1)")));
    }
    if !(b.abs() < T::one()) {
        return Err(Error::Precondition(format!("|b| = {} must be below 1", b.abs())));
    }
    if b == T::zero() {
        return Ok(n);
    }
    let decay = -b.abs().ln();
    let alpha = count::<T>(n - 1) / decay;
    let beta = ((a / b).abs() - eps.ln()) / decay;
    let two = lit::<T>(2.0);
    let bound = two * beta + two * alpha * T::one().max(alpha.ln());
    bound.ceil().to_usize().ok_or_else(|| Error::InvalidParameter("bound overflows".into()))
}

/// Largest `|lambda|` by power iteration on `A^2` (so that `±lambda` pairs
/// do not stall it), stopping when the estimate changes by less than `tol`.
pub fn spectral_radius<T: Scalar>(spec: &BandedMatrixSpec<T>, tol: T, max_iter: usize) -> Result<T> {
    spec.validate()?;
    let n = spec.n;
    let mut x: Vec<T> = (0..n).map(|k| T::one() + lit::<T>(0.5) * (lit::<T>(1.3) * count::<T>(k)).sin()).collect();
    let mut prev = T::zero();
    for _ in 0..max_iter {
        let s = norm2(&x);
        if s == T::zero() {
            return Ok(T::zero());
        }
        x.iter_mut().for_each(|v| *v /= s);
        let y = spec.apply(&spec.apply(&x));
        // Rayleigh quotient of A^2 on a unit vector.
        let est = x.iter().zip(&y).map(|(&u, &v)| u * v).sum::<T>().abs().sqrt();
        x = y;
        if (est - prev).abs() <= tol * est.max(T::one()) {
            return Ok(est);
        }
        prev = est;
    }
    Err(Error::Precondition("power iteration did not converge".into()))
}
