//! Pointed-set linear algebra over `Ĝ`: spaces `Ĝ^{⊕n}`, submonomial
//! matrices, and the kernel/cokernel/pushout/pullback constructions.

mod matrix;
mod universal;

use alloc::vec::Vec;
use core::fmt;

pub use matrix::{count_submonomial, Entry, SubmonomialMatrix, Vector};
pub use universal::{pullback, pushout, Pullback, Pushout};

#[allow(unused_imports)]
pub(crate) use matrix::{binomial, factorial};

use crate::group::PointedGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FvectError {
    NonInjective { row: usize },
    BadDomain,
    RowOutOfRange { col: usize, row: usize, rows: usize },
    BadLabel { col: usize },
    DimMismatch { expected: usize, found: usize },
    GroupMismatch,
    NotMono,
    NotEpi,
}

impl fmt::Display for FvectError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FvectError::NonInjective { row } => write!(f, "row {} is hit by two columns", row + 1),
            FvectError::BadDomain => f.write_str("label map is not defined on exactly the image of f"),
            FvectError::RowOutOfRange { col, row, rows } => {
                write!(f, "column {} points at row {} but the matrix has {rows} rows", col + 1, row + 1)
            }
            FvectError::BadLabel { col } => write!(f, "column {} carries a label outside the group", col + 1),
            FvectError::DimMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            FvectError::GroupMismatch => f.write_str("matrices are over different groups"),
            FvectError::NotMono => f.write_str("map is not injective"),
            FvectError::NotEpi => f.write_str("map is not surjective"),
        }
    }
}

impl core::error::Error for FvectError {}

/// The space `Ĝ^{⊕dim}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Space {
    pub group: PointedGroup,
    pub dim: usize,
}

impl Space {
    pub fn new(group: PointedGroup, dim: usize) -> Self {
        Space { group, dim }
    }

    /// Number of points, zero included: `1 + dim·|G|`.
    pub fn size(&self) -> usize {
        1 + self.dim * self.group.order()
    }

    pub fn identity(&self) -> SubmonomialMatrix {
        SubmonomialMatrix::identity(self.group, self.dim)
    }

    pub fn direct_sum(&self, other: &Space) -> Result<Space, FvectError> {
        if self.group != other.group {
            return Err(FvectError::GroupMismatch);
        }
        Ok(Space::new(self.group, self.dim + other.dim))
    }

    pub fn orbit_space(&self) -> Space {
        Space::new(PointedGroup::trivial(), self.dim)
    }

    pub fn scalar_extend(&self, group: PointedGroup) -> Result<Space, FvectError> {
        if !self.group.is_trivial() {
            return Err(FvectError::GroupMismatch);
        }
        Ok(Space::new(group, self.dim))
    }
}

/// A subspace spanned by a set of coordinates of `ambient`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subspace {
    pub ambient: Space,
    pub coords: Vec<usize>,
}

impl Subspace {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn space(&self) -> Space {
        Space::new(self.ambient.group, self.coords.len())
    }

    /// The embedding `Ĝ^{⊕k} ↪ ambient`.
    pub fn inclusion(&self) -> SubmonomialMatrix {
        let mut m = SubmonomialMatrix::zero(self.ambient.group, self.ambient.dim, self.coords.len());
        for (k, &c) in self.coords.iter().enumerate() {
            m = m.with_entry(k, Some(Entry::new(c, crate::group::GroupElem::ONE)));
        }
        m
    }
}

/// `ambient / span(ambient.coords \ kept)`; `kept` are the surviving coordinates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Quotient {
    pub ambient: Space,
    pub kept: Vec<usize>,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.kept.len()
    }

    pub fn space(&self) -> Space {
        Space::new(self.ambient.group, self.kept.len())
    }

    /// The projection `ambient ↠ Ĝ^{⊕k}`.
    pub fn projection(&self) -> SubmonomialMatrix {
        let mut m = SubmonomialMatrix::zero(self.ambient.group, self.kept.len(), self.ambient.dim);
        for (k, &c) in self.kept.iter().enumerate() {
            m = m.with_entry(c, Some(Entry::new(k, crate::group::GroupElem::ONE)));
        }
        m
    }
}

/// `f⁻¹(0)`: the span of the empty columns.
pub fn kernel(a: &SubmonomialMatrix) -> Subspace {
    let coords = (0..a.cols()).filter(|&j| a.entry(j).is_none()).collect();
    Subspace { ambient: Space::new(a.group(), a.cols()), coords }
}

/// The span of the rows hit by `a`.
pub fn image(a: &SubmonomialMatrix) -> Subspace {
    Subspace { ambient: Space::new(a.group(), a.rows()), coords: a.image_rows() }
}

pub fn cokernel(a: &SubmonomialMatrix) -> Quotient {
    let hit = a.image_rows();
    let kept = (0..a.rows()).filter(|i| hit.binary_search(i).is_err()).collect();
    Quotient { ambient: Space::new(a.group(), a.rows()), kept }
}
