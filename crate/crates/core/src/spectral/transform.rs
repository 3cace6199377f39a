use serde::{Deserialize, Serialize};

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::{count, lit, Scalar};
use crate::spectral::{norm2, trid_eigenpairs, BandedMatrixSpec, EigenPair};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sign {
    Plus,
    Minus,
}

/// `x = P+ [0; y]`: `x_1 = y_1`, `x_k = y_k - y_{k-1}`, `x_N = -y_{N-1}`.
pub fn p_plus_apply<T: Scalar>(y: &[T]) -> Vec<T> {
    let m = y.len();
    (0..=m)
        .map(|k| {
            let cur = if k < m { y[k] } else { T::zero() };
            let prev = if k > 0 { y[k - 1] } else { T::zero() };
            cur - prev
        })
        .collect()
}

/// `x = P- [0; z]`: `x_1 = z_1`, `x_k = z_k + z_{k-1}`, `x_N = z_{N-1}`.
pub fn p_minus_apply<T: Scalar>(z: &[T]) -> Vec<T> {
    let m = z.len();
    (0..=m)
        .map(|k| {
            let cur = if k < m { z[k] } else { T::zero() };
            let prev = if k > 0 { z[k - 1] } else { T::zero() };
            cur + prev
        })
        .collect()
}

fn consistency_tol<T: Scalar>(x: &[T]) -> T {
    lit::<T>(1e-12) * (T::one() + x.iter().map(|v| v.abs()).sum::<T>())
}

/// Inverts [`p_plus_apply`]: `y_k = x_1 + ... + x_k`. Requires `sum(x) = 0`.
pub fn p_plus_coords<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    if x.len() < 2 {
        return Err(Error::InvalidInput("need at least two coordinates".into()));
    }
    let mut acc = T::zero();
    let mut y = Vec::with_capacity(x.len() - 1);
    for &v in &x[..x.len() - 1] {
        acc += v;
        y.push(acc);
    }
    if (acc + x[x.len() - 1]).abs() > consistency_tol(x) {
        return Err(Error::Precondition("x has a component along the all-ones vector".into()));
    }
    Ok(y)
}

/// Inverts [`p_minus_apply`]: `z_1 = x_1`, `z_k = x_k - z_{k-1}`. Requires
/// `x` orthogonal to the alternating vector.
pub fn p_minus_coords<T: Scalar>(x: &[T]) -> Result<Vec<T>> {
    if x.len() < 2 {
        return Err(Error::InvalidInput("need at least two coordinates".into()));
    }
    let mut prev = T::zero();
    let mut z = Vec::with_capacity(x.len() - 1);
    for &v in &x[..x.len() - 1] {
        prev = v - prev;
        z.push(prev);
    }
    if (x[x.len() - 1] - prev).abs() > consistency_tol(x) {
        return Err(Error::Precondition("x has a component along the alternating vector".into()));
    }
    Ok(z)
}

/// Dense `P+` or `P-`.
pub fn p_matrix<T: Scalar>(sign: Sign, n: usize) -> Vec<Vec<T>> {
    let mut p = vec![vec![T::zero(); n]; n];
    for (k, row) in p.iter_mut().enumerate() {
        row[0] = match sign {
            Sign::Plus => T::one(),
            Sign::Minus if k % 2 == 0 => T::one(),
            Sign::Minus => -T::one(),
        };
    }
    for j in 0..n.saturating_sub(1) {
        p[j][j + 1] = T::one();
        p[j + 1][j + 1] = match sign {
            Sign::Plus => -T::one(),
            Sign::Minus => T::one(),
        };
    }
    p
}

/// `ATrid±_N(a, b) = P± diag(b ± 2a, Trid_{N-1}(a, b, a)) P±^{-1}`.
#[derive(Clone, Debug)]
pub struct AtridBlockForm<T> {
    pub sign: Sign,
    pub scalar: T,
    pub inner: BandedMatrixSpec<T>,
    pub p: Vec<Vec<T>>,
}

pub fn atrid_block_form<T: Scalar>(sign: Sign, a: T, b: T, n: usize) -> Result<AtridBlockForm<T>> {
    BandedMatrixSpec::atrid(sign, a, b, n).validate()?;
    let two_a = a + a;
    let scalar = match sign {
        Sign::Plus => b + two_a,
        Sign::Minus => b - two_a,
    };
    Ok(AtridBlockForm { sign, scalar, inner: BandedMatrixSpec::trid(a, b, a, n - 1), p: p_matrix(sign, n) })
}

impl<T: Scalar> AtridBlockForm<T> {
    /// The direction of the scalar block: all ones, or alternating signs.
    pub fn lead_vector(&self) -> Vec<T> {
        self.p.iter().map(|row| row[0]).collect()
    }

    /// Splits `x` as `c * lead + P [0; y]` and returns `(c, y)`.
    pub fn coords(&self, x: &[T]) -> Result<(T, Vec<T>)> {
        let lead = self.lead_vector();
        let c = x.iter().zip(&lead).map(|(&u, &v)| u * v).sum::<T>() / count::<T>(x.len());
        let rest: Vec<T> = x.iter().zip(&lead).map(|(&u, &v)| u - c * v).collect();
        let y = match self.sign {
            Sign::Plus => p_plus_coords(&rest)?,
            Sign::Minus => p_minus_coords(&rest)?,
        };
        Ok((c, y))
    }

    /// `P D P^{-1}` assembled column by column.
    pub fn reconstruct(&self) -> Result<Vec<Vec<T>>> {
        let n = self.p.len();
        let lead = self.lead_vector();
        let mut out = vec![vec![T::zero(); n]; n];
        for j in 0..n {
            let mut e = vec![T::zero(); n];
            e[j] = T::one();
            let (c, y) = self.coords(&e)?;
            let dy = self.inner.apply(&y);
            let tail = match self.sign {
                Sign::Plus => p_plus_apply(&dy),
                Sign::Minus => p_minus_apply(&dy),
            };
            for i in 0..n {
                out[i][j] = self.scalar * c * lead[i] + tail[i];
            }
        }
        Ok(out)
    }
}

/// Eigenpairs of `ATrid±_N(a, b)` through the block form: first the scalar
/// block `b ± 2a` with the normalized lead vector, then `P± [0; v]` for each
/// inner pair of `Trid_{N-1}(a, b, a)`.
pub fn atrid_eigenpairs<T: Scalar>(sign: Sign, a: T, b: T, n: usize) -> Result<Vec<EigenPair<T>>> {
    let form = atrid_block_form(sign, a, b, n)?;
    let real = |v: Vec<T>| {
        let s = norm2(&v);
        v.into_iter().map(|u| Complex::new(u / s, T::zero())).collect::<Vec<_>>()
    };
    let mut out = vec![EigenPair { value: Complex::new(form.scalar, T::zero()), vector: real(form.lead_vector()) }];
    if n == 2 {
        // Trid_1 is the scalar b.
        let v = match sign {
            Sign::Plus => p_plus_apply(&[T::one()]),
            Sign::Minus => p_minus_apply(&[T::one()]),
        };
        out.push(EigenPair { value: Complex::new(b, T::zero()), vector: real(v) });
        return Ok(out);
    }
    for pair in trid_eigenpairs(a, b, a, n - 1)? {
        let inner: Vec<T> = pair.vector.iter().map(|z| z.re).collect();
        let v = match sign {
            Sign::Plus => p_plus_apply(&inner),
            Sign::Minus => p_minus_apply(&inner),
        };
        out.push(EigenPair { value: pair.value, vector: real(v) });
    }
    Ok(out)
}

fn sandwich<T: Scalar>(x: &[T], y: &[T]) -> bool {
    let (nx, ny) = (norm2(x), norm2(y));
    let slack = lit::<T>(1e-12) * (nx + ny);
    let half = lit::<T>(0.5);
    let n = count::<T>(x.len());
    half * nx <= ny + slack && ny <= (n - T::one()) * nx + slack
}

fn related<T: Scalar>(x: &[T], image: &[T]) -> bool {
    let tol = consistency_tol(x);
    x.len() == image.len() && x.iter().zip(image).all(|(&u, &v)| (u - v).abs() <= tol)
}

/// `x = P+ [0; y]` and `||x||/2 <= ||y|| <= (N-1) ||x||`.
pub fn check_p_bounds_plus<T: Scalar>(x: &[T], y: &[T]) -> bool {
    related(x, &p_plus_apply(y)) && sandwich(x, y)
}

/// `x = P- [0; z]` and `||x||/2 <= ||z|| <= (N-1) ||x||`.
pub fn check_p_bounds_minus<T: Scalar>(x: &[T], z: &[T]) -> bool {
    related(x, &p_minus_apply(z)) && sandwich(x, z)
}

/// Both sandwich inequalities for a vector with coordinates under both transforms.
pub fn check_p_bounds<T: Scalar>(x: &[T], y: &[T], z: &[T]) -> bool {
    check_p_bounds_plus(x, y) && check_p_bounds_minus(x, z)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_atrid_block() {
        let f = atrid_block_form(Sign::Plus, 0.5, 0.0, 3).unwrap();
        assert_eq!(f.scalar, 1.0);
        assert_eq!(f.inner, BandedMatrixSpec::trid(0.5, 0.0, 0.5, 2));
        assert!(f.p.iter().all(|row| row[0] == 1.0));
        let f = atrid_block_form(Sign::Minus, 0.5, 0.0, 4).unwrap();
        assert_eq!(f.lead_vector(), vec![1.0, -1.0, 1.0, -1.0]);
    }

    #[test]
    fn reconstruction_matches_materialized_matrix() {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in [2, 3, 6, 11] {
                let f = atrid_block_form(sign, 0.3f64, 0.2, n).unwrap();
                let a = BandedMatrixSpec::atrid(sign, 0.3, 0.2, n).materialize();
                let r = f.reconstruct().unwrap();
                for i in 0..n {
                    for j in 0..n {
                        assert!((a[i][j] - r[i][j]).abs() < 1e-12, "{sign:?} {n} {i} {j}");
                    }
                }
            }
        }
    }

    #[test]
    fn atrid_pairs_have_small_residuals() {
        for sign in [Sign::Plus, Sign::Minus] {
            for n in [2, 3, 8] {
                let m = BandedMatrixSpec::atrid(sign, 0.3, -0.1, n).materialize();
                for p in atrid_eigenpairs(sign, 0.3, -0.1, n).unwrap() {
                    let res: f64 = (0..n)
                        .map(|i| {
                            let av: Complex<f64> = (0..n).map(|j| p.vector[j] * m[i][j]).sum();
                            (av - p.value * p.vector[i]).norm_sqr()
                        })
                        .sum::<f64>()
                        .sqrt();
                    assert!(res < 1e-13, "{sign:?} {n}");
                }
            }
        }
    }

    #[test]
    fn apply_agrees_with_dense_p() {
        let y = [0.4, -1.0, 2.5];
        for sign in [Sign::Plus, Sign::Minus] {
            let p = p_matrix::<f64>(sign, 4);
            let dense: Vec<f64> = (0..4).map(|i| (1..4).map(|j| p[i][j] * y[j - 1]).sum()).collect();
            let fast = match sign {
                Sign::Plus => p_plus_apply(&y),
                Sign::Minus => p_minus_apply(&y),
            };
            assert_eq!(dense, fast);
        }
    }

    #[test]
    fn endpoint_difference_vector() {
        // x = e_1 - e_N has y = (1, ..., 1) and, for odd N, z = (1, -1, ..., -1).
        let n = 5;
        let mut x = vec![0.0; n];
        x[0] = 1.0;
        x[n - 1] = -1.0;
        let y = p_plus_coords(&x).unwrap();
        let z = p_minus_coords(&x).unwrap();
        assert_eq!(y, vec![1.0; n - 1]);
        assert_eq!(z, vec![1.0, -1.0, 1.0, -1.0]);
        assert!(check_p_bounds(&x, &y, &z));
        assert!(p_minus_coords(&[1.0, 0.0, 0.0, -1.0]).is_err());
    }

    #[test]
    fn zero_iff_zero() {
        assert_eq!(p_plus_coords(&[0.0; 4]).unwrap(), vec![0.0; 3]);
        assert!(p_plus_apply(&[0.0; 3]).iter().all(|&v| v == 0.0));
    }
}
