use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A position in `R^d`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point<T> {
    coords: Vec<T>,
}

impl<T: Scalar> Point<T> {
    /// Wraps a coordinate vector. Entries must be finite.
    pub fn new(coords: Vec<T>) -> Self {
        debug_assert!(coords.iter().all(|c| c.is_finite()), "non-finite coordinate");
        Point { coords }
    }

    /// Like [`Point::new`] but rejects empty or non-finite input.
    pub fn try_new(coords: Vec<T>) -> Result<Self> {
        if coords.is_empty() {
            return Err(Error::InvalidInput("point with zero coordinates".into()));
        }
        if coords.iter().any(|c| !c.is_finite()) {
            return Err(Error::InvalidInput("non-finite coordinate".into()));
        }
        Ok(Point { coords })
    }

    /// One-dimensional point.
    pub fn scalar(x: T) -> Self {
        Point::new(vec![x])
    }

    /// Two-dimensional point.
    pub fn xy(x: T, y: T) -> Self {
        Point::new(vec![x, y])
    }

    /// The origin of `R^d`.
    pub fn zeros(d: usize) -> Self {
        Point::new(vec![T::zero(); d])
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[T] {
        &self.coords
    }

    /// Coordinate `k`.
    pub fn get(&self, k: usize) -> T {
        self.coords[k]
    }

    /// First coordinate; the natural accessor for 1-D and circle states.
    pub fn x(&self) -> T {
        self.coords[0]
    }

    pub fn into_coords(self) -> Vec<T> {
        self.coords
    }

    pub fn dist_sq(&self, other: &Self) -> T {
        self.coords.iter().zip(&other.coords).map(|(&a, &b)| (a - b) * (a - b)).sum()
    }

    /// Euclidean distance.
    pub fn dist(&self, other: &Self) -> T {
        if self.dim() == 1 {
            return (self.coords[0] - other.coords[0]).abs();
        }
        self.dist_sq(other).sqrt()
    }

    /// Infinity-norm distance.
    pub fn dist_inf(&self, other: &Self) -> T {
        self.coords.iter().zip(&other.coords).fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }

    pub fn norm(&self) -> T {
        self.coords.iter().map(|&a| a * a).sum::<T>().sqrt()
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, s: T) -> Self {
        Point::new(self.coords.iter().map(|&a| a * s).collect())
    }

    pub fn dot(&self, other: &Self) -> T {
        self.coords.iter().zip(&other.coords).map(|(&a, &b)| a * b).sum()
    }

    /// `(self + other) / 2`.
    pub fn midpoint(&self, other: &Self) -> Self {
        let half = T::from_f64(0.5).unwrap();
        self.zip_with(other, |a, b| (a + b) * half)
    }

    /// `(1 - lambda) * self + lambda * other`.
    pub fn lerp(&self, other: &Self, lambda: T) -> Self {
        let mu = T::one() - lambda;
        self.zip_with(other, |a, b| mu * a + lambda * b)
    }

    fn zip_with(&self, other: &Self, f: impl Fn(T, T) -> T) -> Self {
        debug_assert_eq!(self.dim(), other.dim());
        Point::new(self.coords.iter().zip(&other.coords).map(|(&a, &b)| f(a, b)).collect())
    }
}

impl<T: Scalar> From<Vec<T>> for Point<T> {
    fn from(v: Vec<T>) -> Self {
        Point::new(v)
    }
}

/// A closed interval `[lo, hi]` with `lo <= hi`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Interval<T> {
    pub lo: T,
    pub hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite()) {
            return Err(Error::InvalidInput("non-finite interval bound".into()));
        }
        if lo > hi {
            return Err(Error::InvalidInput(format!("interval [{lo}, {hi}] has lo > hi")));
        }
        Ok(Interval { lo, hi })
    }

    pub fn len(&self) -> T {
        self.hi - self.lo
    }

    pub fn is_degenerate(&self) -> bool {
        self.lo == self.hi
    }

    pub fn contains(&self, x: T) -> bool {
        self.lo <= x && x <= self.hi
    }

    pub fn midpoint(&self) -> T {
        (self.lo + self.hi) * T::from_f64(0.5).unwrap()
    }

    /// Intersection, or `None` when disjoint.
    pub fn intersect(&self, other: &Self) -> Option<Self> {
        let lo = self.lo.max(other.lo);
        let hi = self.hi.min(other.hi);
        (lo <= hi).then_some(Interval { lo, hi })
    }
}
