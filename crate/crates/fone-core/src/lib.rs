//! Representation theory of finite `Ĝ`-linear monoids over the field with one
//! element.
//!
//! Scalars are a finite abelian group `G` with an absorbing zero adjoined.
//! Vector spaces are free pointed `G`-sets, linear maps are submonomial
//! matrices, and a monoid representation assigns such a matrix to every
//! basis element of the monoid.

#![no_std]

extern crate alloc;
#[cfg(test)]
extern crate std;

pub mod bitset;
pub mod cmp;
pub mod fvect;
pub mod group;
pub mod monoid;
pub mod ordered;
pub mod rep;

pub use fvect::{Space, SubmonomialMatrix};
pub use group::{GroupElem, PointedGroup, Scalar};
pub use monoid::{Elem, GLinearMonoid, MElem};
pub use rep::Representation;
