use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{count, Scalar};

/// An eigenvalue with a unit-norm eigenvector.
#[derive(Clone, Debug, PartialEq)]
pub struct EigenPair<T> {
    pub value: Complex<T>,
    pub vector: Vec<Complex<T>>,
}

fn normalized<T: Scalar>(mut v: Vec<Complex<T>>) -> Vec<Complex<T>> {
    let norm = v.iter().map(|z| z.norm_sqr()).sum::<T>().sqrt();
    for z in &mut v {
        *z = *z / norm;
    }
    v
}

/// Eigenpairs of `Trid_N(a, b, c)`, indexed `i = 1..=N` in the returned order.
///
/// The value is `b + 2 c sqrt(a/c) cos(i pi / (N+1))` and the vector has
/// components `(a/c)^(k/2) sin(k i pi / (N+1))` for `k = 1..=N`. When
/// `a/c < 0` both are complex.
///
/// Errors when `a c = 0`: the matrix is then a scaled identity plus a
/// nilpotent part with a single defective eigenvalue `b`, and its contraction
/// is bounded by [`crate::spectral::nilpotent_bound_steps`] instead.
pub fn trid_eigenpairs<T: Scalar>(a: T, b: T, c: T, n: usize) -> Result<Vec<EigenPair<T>>> {
    if n < 1 {
        return Err(Error::InvalidParameter("N must be positive".into()));
    }
    if a * c == T::zero() {
        return Err(Error::DegenerateTridiagonal);
    }
    let rho = Complex::new(a / c, T::zero()).sqrt();
    let log_rho = rho.ln();
    let step = T::PI() / count::<T>(n + 1);
    let two = T::one() + T::one();
    Ok((1..=n)
        .map(|i| {
            let theta = step * count::<T>(i);
            let value = rho * (two * c * theta.cos()) + b;
            let vector = (1..=n)
                .map(|k| {
                    let kk = count::<T>(k);
                    (log_rho * kk).exp() * (kk * theta).sin()
                })
                .collect();
            EigenPair { value, vector: normalized(vector) }
        })
        .collect())
}

/// Eigenpairs of `Circ_N(a, b, c)`, indexed `i = 1..=N` in the returned order.
///
/// The value is `b + (a+c) cos(2 pi i/N) + sqrt(-1) (c-a) sin(2 pi i/N)` and
/// the vector is `(1, w^i, ..., w^((N-1) i)) / sqrt(N)` with `w = exp(2 pi sqrt(-1)/N)`.
/// The last pair (`i = N`) has the all-ones direction.
pub fn circ_eigenpairs<T: Scalar>(a: T, b: T, c: T, n: usize) -> Result<Vec<EigenPair<T>>> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!("circulant needs N >= 2, got {n}")));
    }
    let nn = count::<T>(n);
    let scale = T::one() / nn.sqrt();
    Ok((1..=n)
        .map(|i| {
            // Reduce the angle index mod N so that i = N gives exactly 0.
            let angle = |m: usize| T::TAU() * count::<T>(m % n) / nn;
            let t = angle(i);
            let value = Complex::new(b + (a + c) * t.cos(), (c - a) * t.sin());
            let vector = (0..n).map(|k| Complex::from_polar(scale, angle(k * i))).collect();
            EigenPair { value, vector }
        })
        .collect())
}
