//! Partial injective maps on {0..n-1}, the concrete carrier for finite
//! inverse semigroups (Preston-Wagner).

use alloc::{string::String, vec, vec::Vec};
use core::fmt;

/// A partial injective map on `{0..degree-1}`.
///
/// Composition is right-to-left: `(s.compose(&t))(x) = s(t(x))`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct PartialBijection {
    degree: usize,
    images: Vec<Option<usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PbijError {
    NotInjective,
    OutOfRange,
    DegreeMismatch,
}

impl fmt::Display for PbijError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PbijError::NotInjective => write!(f, "map is not injective on its domain"),
            PbijError::OutOfRange => write!(f, "image out of range"),
            PbijError::DegreeMismatch => write!(f, "degrees differ"),
        }
    }
}

impl PartialBijection {
    pub fn new(images: Vec<Option<usize>>) -> Result<Self, PbijError> {
        let degree = images.len();
        let mut seen = vec![false; degree];
        for img in images.iter().flatten() {
            if *img >= degree {
                return Err(PbijError::OutOfRange);
            }
            if seen[*img] {
                return Err(PbijError::NotInjective);
            }
            seen[*img] = true;
        }
        Ok(PartialBijection { degree, images })
    }

    pub fn identity(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: (0..degree).map(Some).collect(),
        }
    }

    pub fn empty(degree: usize) -> Self {
        PartialBijection {
            degree,
            images: vec![None; degree],
        }
    }

    /// Identity restricted to a subset of points.
    pub fn partial_identity(degree: usize, points: &[usize]) -> Self {
        let mut images = vec![None; degree];
        for &p in points {
            images[p] = Some(p);
        }
        PartialBijection { degree, images }
    }

    /// Total permutation from a one-line image list.
    pub fn permutation(images: &[usize]) -> Result<Self, PbijError> {
        Self::new(images.iter().map(|&i| Some(i)).collect())
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn apply(&self, x: usize) -> Option<usize> {
        self.images.get(x).copied().flatten()
    }

    pub fn rank(&self) -> usize {
        self.images.iter().flatten().count()
    }

    pub fn domain(&self) -> Vec<usize> {
        (0..self.degree)
            .filter(|&x| self.images[x].is_some())
            .collect()
    }

    pub fn is_total(&self) -> bool {
        self.rank() == self.degree
    }

    /// `self` after `other`: x maps to self(other(x)).
    pub fn compose(&self, other: &PartialBijection) -> Result<Self, PbijError> {
        if self.degree != other.degree {
            return Err(PbijError::DegreeMismatch);
        }
        let images = (0..self.degree)
            .map(|x| other.apply(x).and_then(|y| self.apply(y)))
            .collect();
        Ok(PartialBijection {
            degree: self.degree,
            images,
        })
    }

    pub fn inverse(&self) -> Self {
        let mut images = vec![None; self.degree];
        for (x, img) in self.images.iter().enumerate() {
            if let Some(y) = img {
                images[*y] = Some(x);
            }
        }
        PartialBijection {
            degree: self.degree,
            images,
        }
    }

    pub fn is_idempotent(&self) -> bool {
        // idempotent partial bijections are exactly partial identities
        self.images
            .iter()
            .enumerate()
            .all(|(x, img)| img.is_none() || *img == Some(x))
    }

    pub fn describe(&self) -> String {
        use core::fmt::Write;
        let mut s = String::from("[");
        for (x, img) in self.images.iter().enumerate() {
            if x > 0 {
                s.push(' ');
            }
            match img {
                Some(y) => {
                    let _ = write!(s, "{x}>{y}");
                }
                None => {
                    let _ = write!(s, "{x}>.");
                }
            }
        }
        s.push(']');
        s
    }
}
