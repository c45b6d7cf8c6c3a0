use alloc::vec::Vec;

use super::{RepError, Representation};
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::monoid::{Elem, GLinearMonoid};

/// The faithful representation `a ↦ λ_a` of an inverse monoid on itself,
/// where `λ_a(x) = ax` for `x ∈ a*M` (equivalently `a*a·x = x`) and `0`
/// otherwise. The coordinates are the basis orbits of `M`.
pub fn wagner_preston(m: &GLinearMonoid) -> Result<Representation, RepError> {
    if !m.is_inverse() {
        return Err(RepError::NotInverse);
    }
    let n = m.dim();
    let action = (0..n)
        .map(|a| {
            let a = Some(Elem::basis(a));
            let proj = m.mul(m.star_inverse_unchecked(a), a);
            let cols: Vec<Option<Entry>> = (0..n)
                .map(|x| {
                    let x = Some(Elem::basis(x));
                    if m.mul(proj, x) != x {
                        return None;
                    }
                    m.mul(a, x).map(|p| Entry::new(p.b, p.g))
                })
                .collect();
            SubmonomialMatrix::from_columns(m.group(), n, cols).map_err(|_| RepError::NotLinear { basis: m.display(a) })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Representation::new(m.clone(), n, action)
}
