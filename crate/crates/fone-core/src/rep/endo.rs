use alloc::vec::Vec;

use super::{RepError, Representation};
use crate::fvect::SubmonomialMatrix;

impl Representation {
    /// All `F` with `F ρ(b) = ρ(b) F` for every basis element, by exhaustive
    /// search over `d × d` submonomial matrices.
    pub fn endomorphisms(&self, cap: usize) -> Result<Vec<SubmonomialMatrix>, RepError> {
        if self.dim() > cap {
            return Err(RepError::DimTooLarge { dim: self.dim(), cap });
        }
        let all = SubmonomialMatrix::enumerate(self.monoid().group(), self.dim(), self.dim());
        Ok(all.into_iter().filter(|f| self.commutes_with(f)).collect())
    }

    pub fn commutes_with(&self, f: &SubmonomialMatrix) -> bool {
        self.actions().iter().all(|a| f.compose_unchecked(a) == a.compose_unchecked(f))
    }
}

#[cfg(test)]
mod tests {
    use crate::fvect::SubmonomialMatrix;
    use crate::group::PointedGroup;
    use crate::monoid::SymmetricInverse;
    use crate::rep::ENDO_CAP;

    #[test]
    fn endomorphisms_of_defining_rep_are_scalars() {
        let si = SymmetricInverse::new(2, PointedGroup::cyclic(3).unwrap()).unwrap();
        let v = crate::rep::Representation::defining(&si);
        let endo = v.endomorphisms(ENDO_CAP).unwrap();
        assert_eq!(endo.len(), 1 + 3);
        assert!(endo.contains(&SubmonomialMatrix::identity(si.monoid().group(), 2)));
        let vv = v.direct_sum(&v).unwrap();
        let g = si.monoid().group();
        let swap = SubmonomialMatrix::from_triple(
            g,
            4,
            4,
            &[(0, 2), (1, 3), (2, 0), (3, 1)],
            &[
                (0, g.elements().next().unwrap()),
                (1, g.elements().next().unwrap()),
                (2, g.elements().next().unwrap()),
                (3, g.elements().next().unwrap()),
            ],
        )
        .unwrap();
        assert!(vv.commutes_with(&swap));
        assert!(vv.endomorphisms(3).is_err());
    }
}
