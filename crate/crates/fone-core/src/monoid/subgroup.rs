use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec::Vec;

use super::{validate, Elem, GLinearMonoid, Inner, MElem, MonoidError};

/// `Ĝ_J = (eMe ∩ J_e) ∪ {0}` as a `Ĝ`-linear monoid of its own.
#[derive(Clone, Debug)]
pub struct MaximalSubgroup {
    pub ambient: GLinearMonoid,
    pub monoid: GLinearMonoid,
    pub idempotent: Elem,
    /// Basis element `i` of [`monoid`](Self::monoid) is the ambient element `embedding[i]`.
    /// Entry 0 is the idempotent itself.
    pub embedding: Vec<Elem>,
}

impl MaximalSubgroup {
    /// Ambient element for an element of `Ĝ_J`.
    pub fn embed(&self, x: MElem) -> MElem {
        let x = x?;
        let r = self.embedding[x.b];
        Some(Elem { g: self.monoid.group().mul(x.g, r.g), b: r.b })
    }

    /// Inverse of [`embed`](Self::embed); `None` if `x` lies outside `Ĝ_J`.
    pub fn locate(&self, x: Elem) -> Option<Elem> {
        let i = self.embedding.iter().position(|r| r.b == x.b)?;
        Some(Elem { g: self.monoid.group().div(x.g, self.embedding[i].g), b: i })
    }
}

impl GLinearMonoid {
    pub fn maximal_subgroup(&self, e: Elem) -> Result<MaximalSubgroup, MonoidError> {
        let ee = Some(e);
        if self.mul(ee, ee) != ee {
            return Err(MonoidError::NotIdempotent);
        }
        let report = self.j_classes();
        let class = report.class_of(e.b);
        let mut embedding = alloc::vec![e];
        for &c in &report.classes[class].members {
            let cc = Some(Elem::basis(c));
            if c != e.b && self.mul3(ee, cc, ee) == cc {
                embedding.push(Elem::basis(c));
            }
        }
        let group = self.group();
        let n = embedding.len();
        let mut table = alloc::vec![None; n * n];
        for (i, &x) in embedding.iter().enumerate() {
            for (j, &y) in embedding.iter().enumerate() {
                let p = self.mul(Some(x), Some(y)).expect("eMe ∩ J is a group");
                let k = embedding.iter().position(|r| r.b == p.b).expect("closed under products");
                table[i * n + j] = Some(Elem { g: group.div(p.g, embedding[k].g), b: k });
            }
        }
        let names: Vec<String> = embedding.iter().map(|&x| self.display(Some(x))).collect();
        let monoid = GLinearMonoid(Arc::new(Inner { group, names, one: 0, table }));
        validate(&monoid)?;
        Ok(MaximalSubgroup { ambient: self.clone(), monoid, idempotent: e, embedding })
    }

    /// Every basis element is a unit.
    pub fn is_group(&self) -> bool {
        self.units().len() == self.dim()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fvect::SubmonomialMatrix;
    use crate::group::PointedGroup;
    use crate::monoid::{null_monoid, SymmetricInverse};

    #[test]
    fn units_of_i3_form_s3() {
        let si = SymmetricInverse::new(3, PointedGroup::trivial()).unwrap();
        let m = si.monoid();
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        assert_eq!(h.monoid.dim(), 6);
        assert!(h.monoid.is_group());
    }

    #[test]
    fn rank_one_subgroup_over_z2() {
        let si = SymmetricInverse::new(2, PointedGroup::cyclic(2).unwrap()).unwrap();
        let m = si.monoid();
        let e = si.element_of(&SubmonomialMatrix::diagonal_idempotent(m.group(), 2, &[0])).unwrap();
        let h = m.maximal_subgroup(e).unwrap();
        // G¹ ⋊ S₁ ≅ G: one orbit
        assert_eq!(h.monoid.dim(), 1);
        for x in h.monoid.elements() {
            assert_eq!(h.embed(x).and_then(|y| h.locate(y)), x);
        }
    }

    #[test]
    fn null_monoid_units() {
        let m = null_monoid(2, PointedGroup::cyclic(3).unwrap());
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        assert_eq!(h.monoid.dim(), 1);
        assert_eq!(h.monoid.size(), 4);
        assert_eq!(m.maximal_subgroup(Elem::basis(0)).unwrap_err(), MonoidError::NotIdempotent);
    }
}
