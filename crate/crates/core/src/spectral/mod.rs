//! Banded Toeplitz and circulant matrices: closed-form eigenpairs, the
//! similarity transforms for the corner-augmented families, and linear
//! iteration with contraction-time measurement.
//!
//! Conventions for `N x N` matrices with zero-based indices:
//!
//! - `Trid_N(a, b, c)` has `b` on the diagonal, `c` on the superdiagonal and
//!   `a` on the subdiagonal.
//! - `Circ_N(a, b, c)` adds `a` at `(0, N-1)` and `c` at `(N-1, 0)`. For
//!   `N = 2` the two contributions add up, giving `[[b, a+c], [a+c, b]]`.
//! - `ATrid±_N(a, b)` is `Trid_N(a, b, a)` with `±a` added to both corner
//!   diagonal entries.

mod eigen;
mod iterate;
mod transform;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub use eigen::{circ_eigenpairs, trid_eigenpairs, EigenPair};
pub use iterate::{
    contraction_rate, ell_bound, iterate_linear, nilpotent_bound_steps, spectral_radius, time_to_contraction,
    worst_case_vector, Reference,
};
pub use transform::{
    atrid_block_form, atrid_eigenpairs, check_p_bounds, check_p_bounds_minus, check_p_bounds_plus, p_matrix,
    p_minus_apply, p_minus_coords, p_plus_apply, p_plus_coords, AtridBlockForm, Sign,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Trid,
    Circ,
    ATridPlus,
    ATridMinus,
}

/// One member of the four banded families. `c` is ignored by `ATrid±`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct BandedMatrixSpec<T> {
    pub family: Family,
    pub a: T,
    pub b: T,
    pub c: T,
    pub n: usize,
}

impl<T: Scalar> BandedMatrixSpec<T> {
    pub fn trid(a: T, b: T, c: T, n: usize) -> Self {
        BandedMatrixSpec { family: Family::Trid, a, b, c, n }
    }

    pub fn circ(a: T, b: T, c: T, n: usize) -> Self {
        BandedMatrixSpec { family: Family::Circ, a, b, c, n }
    }

    pub fn atrid(sign: Sign, a: T, b: T, n: usize) -> Self {
        let family = match sign {
            Sign::Plus => Family::ATridPlus,
            Sign::Minus => Family::ATridMinus,
        };
        BandedMatrixSpec { family, a, b, c: a, n }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::InvalidParameter(format!("banded matrices need N >= 2, got {}", self.n)));
        }
        if !(self.a.is_finite() && self.b.is_finite() && self.c.is_finite()) {
            return Err(Error::InvalidParameter("non-finite matrix coefficient".into()));
        }
        Ok(())
    }

    /// Superdiagonal coefficient (`a` for the symmetric `ATrid` families).
    fn sup(&self) -> T {
        match self.family {
            Family::Trid | Family::Circ => self.c,
            Family::ATridPlus | Family::ATridMinus => self.a,
        }
    }

    fn corner_shift(&self) -> T {
        match self.family {
            Family::ATridPlus => self.a,
            Family::ATridMinus => -self.a,
            _ => T::zero(),
        }
    }

    /// Dense row-major copy.
    pub fn materialize(&self) -> Vec<Vec<T>> {
        let n = self.n;
        let mut m = vec![vec![T::zero(); n]; n];
        for i in 0..n {
            m[i][i] = self.b;
            if i + 1 < n {
                m[i][i + 1] += self.sup();
                m[i + 1][i] += self.a;
            }
        }
        match self.family {
            Family::Circ => {
                m[0][n - 1] += self.a;
                m[n - 1][0] += self.c;
            }
            Family::ATridPlus | Family::ATridMinus => {
                m[0][0] += self.corner_shift();
                m[n - 1][n - 1] += self.corner_shift();
            }
            Family::Trid => {}
        }
        m
    }

    /// `A x` in `O(N)`.
    pub fn apply(&self, x: &[T]) -> Vec<T> {
        let n = self.n;
        debug_assert_eq!(x.len(), n);
        let (a, b, c) = (self.a, self.b, self.sup());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            let mut v = b * x[i];
            if i > 0 {
                v += a * x[i - 1];
            }
            if i + 1 < n {
                v += c * x[i + 1];
            }
            out.push(v);
        }
        match self.family {
            Family::Circ => {
                out[0] += a * x[n - 1];
                out[n - 1] += self.c * x[0];
            }
            Family::ATridPlus | Family::ATridMinus => {
                out[0] += self.corner_shift() * x[0];
                out[n - 1] += self.corner_shift() * x[n - 1];
            }
            Family::Trid => {}
        }
        out
    }
}

pub(crate) fn norm2<T: Scalar>(v: &[T]) -> T {
    v.iter().map(|&a| a * a).sum::<T>().sqrt()
}
