use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::CmpError;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::monoid::{Elem, GLinearMonoid};
use crate::rep::Representation;

/// Largest group (counted without zero) whose subgroups are enumerated.
pub const GROUP_ORDER_CAP: usize = 5040;

/// The transitive representation on `(G_J / H) ∪ {0}`.
#[derive(Clone, Debug)]
pub struct GroupSimple {
    pub group: GLinearMonoid,
    pub subgroup: Vec<Elem>,
    pub rep: Representation,
}

/// The nonzero elements of a pointed group, indexed as in
/// [`GLinearMonoid::elements`] minus one.
struct Table<'a> {
    gm: &'a GLinearMonoid,
    n: usize,
    inv: Vec<usize>,
}

impl<'a> Table<'a> {
    fn new(gm: &'a GLinearMonoid) -> Result<Self, CmpError> {
        if !gm.is_group() {
            return Err(CmpError::GroupMismatch);
        }
        let n = gm.size() - 1;
        if n > GROUP_ORDER_CAP {
            return Err(CmpError::GroupTooLarge { order: n, cap: GROUP_ORDER_CAP });
        }
        let mut t = Table { gm, n, inv: vec![0; n] };
        let one = t.index(gm.one_elem());
        for x in 0..n {
            t.inv[x] = (0..n).find(|&y| t.mul(x, y) == one).expect("every element is a unit");
        }
        Ok(t)
    }

    fn elem(&self, i: usize) -> Elem {
        let order = self.gm.group().order();
        Elem { g: crate::group::GroupElem((i % order) as u32), b: i / order }
    }

    fn index(&self, x: Elem) -> usize {
        self.gm.element_index(Some(x)) - 1
    }

    fn mul(&self, x: usize, y: usize) -> usize {
        let p = self.gm.mul(Some(self.elem(x)), Some(self.elem(y))).expect("groups have no zero divisors");
        self.index(p)
    }

    fn scalars(&self) -> Vec<usize> {
        let one = self.gm.one_elem();
        self.gm.group().elements().map(|g| self.index(Elem { g, b: one.b })).collect()
    }

    fn closure(&self, gens: &[usize]) -> Vec<usize> {
        let mut seen = vec![false; self.n];
        let mut list = Vec::new();
        let one = self.index(self.gm.one_elem());
        for &x in core::iter::once(&one).chain(gens) {
            if !seen[x] {
                seen[x] = true;
                list.push(x);
            }
        }
        let mut i = 0;
        while i < list.len() {
            for j in 0..list.len() {
                for p in [self.mul(list[i], list[j]), self.mul(list[j], list[i])] {
                    if !seen[p] {
                        seen[p] = true;
                        list.push(p);
                    }
                }
            }
            i += 1;
        }
        list.sort_unstable();
        list
    }

    fn conjugacy_key(&self, h: &[usize]) -> Vec<usize> {
        (0..self.n)
            .map(|y| {
                let mut c: Vec<usize> = h.iter().map(|&k| self.mul(self.mul(y, k), self.inv[y])).collect();
                c.sort_unstable();
                c
            })
            .min()
            .expect("groups are nonempty")
    }
}

/// Every subgroup `H` of the pointed group `gm` with `H ∩ G = {1}`, ordered
/// by size and then by elements.
pub fn subgroups_avoiding_scalars(gm: &GLinearMonoid) -> Result<Vec<Vec<Elem>>, CmpError> {
    let t = Table::new(gm)?;
    Ok(subgroups(&t).into_iter().map(|h| h.into_iter().map(|i| t.elem(i)).collect()).collect())
}

fn subgroups(t: &Table<'_>) -> Vec<Vec<usize>> {
    let scalars = t.scalars();
    let good = |h: &[usize]| scalars.iter().filter(|s| h.binary_search(s).is_ok()).count() == 1;
    let mut seen: BTreeSet<(usize, Vec<usize>)> = BTreeSet::new();
    let start = t.closure(&[]);
    seen.insert((1, start.clone()));
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for x in 0..t.n {
            if h.binary_search(&x).is_ok() {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x);
            let k = t.closure(&gens);
            if good(&k) && seen.insert((k.len(), k.clone())) {
                queue.push(k);
            }
        }
    }
    seen.into_iter().map(|(_, h)| h).collect()
}

/// Simple representations of the pointed group `gm` up to isomorphism: one
/// coset representation per conjugacy class of subgroups meeting `G` trivially.
pub fn group_simples(gm: &GLinearMonoid) -> Result<Vec<GroupSimple>, CmpError> {
    let t = Table::new(gm)?;
    let mut classes: BTreeMap<Vec<usize>, ()> = BTreeMap::new();
    let mut out = Vec::new();
    for h in subgroups(&t) {
        if classes.insert(t.conjugacy_key(&h), ()).is_none() {
            let subgroup: Vec<Elem> = h.iter().map(|&i| t.elem(i)).collect();
            let rep = coset_rep(gm, &subgroup)?;
            out.push(GroupSimple { group: gm.clone(), subgroup, rep });
        }
    }
    Ok(out)
}

/// `G_J` acting on its left cosets `xH`; coordinates are the `G`-orbits of
/// cosets, each represented by the coset with the least element.
pub fn coset_rep(gm: &GLinearMonoid, h: &[Elem]) -> Result<Representation, CmpError> {
    let t = Table::new(gm)?;
    let mut hs: Vec<usize> = h.iter().map(|&x| t.index(x)).collect();
    hs.sort_unstable();
    hs.dedup();
    if t.closure(&hs) != hs {
        return Err(CmpError::NotSubgroup);
    }
    let coset = |x: usize| hs.iter().map(|&k| t.mul(x, k)).min().expect("H contains 1");
    let group = gm.group();
    let mut place: Vec<Option<(usize, crate::group::GroupElem)>> = vec![None; t.n];
    let mut reps = Vec::new();
    for x in 0..t.n {
        let c = coset(x);
        if place[c].is_some() {
            continue;
        }
        let k = reps.len();
        reps.push(c);
        for g in group.elements() {
            let y = t.index(Elem { g, b: gm.one() });
            let gc = coset(t.mul(y, c));
            if place[gc].is_some() {
                return Err(CmpError::FreenessViolated);
            }
            place[gc] = Some((k, g));
        }
    }
    let dim = reps.len();
    let action = (0..gm.dim())
        .map(|b| {
            let bx = t.index(Elem::basis(b));
            let cols = reps.iter().map(|&c| place[coset(t.mul(bx, c))].map(|(k, g)| Entry::new(k, g))).collect();
            SubmonomialMatrix::from_columns(group, dim, cols).expect("cosets are permuted")
        })
        .collect();
    Ok(Representation::new(gm.clone(), dim, action)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::PointedGroup;
    use crate::monoid::{symmetric_inverse_monoid, SymmetricInverse};

    #[test]
    fn s2_has_two_simples() {
        let m = symmetric_inverse_monoid(2, PointedGroup::trivial()).unwrap();
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        let simples = group_simples(&h.monoid).unwrap();
        let dims: Vec<usize> = simples.iter().map(|s| s.rep.dim()).collect();
        assert_eq!(dims, [2, 1]);
    }

    #[test]
    fn z2_hat_has_one_simple() {
        let m = symmetric_inverse_monoid(1, PointedGroup::cyclic(2).unwrap()).unwrap();
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        let simples = group_simples(&h.monoid).unwrap();
        assert_eq!(simples.len(), 1);
        assert_eq!(simples[0].subgroup.len(), 1);
        assert_eq!(simples[0].rep.dim(), 1);
    }

    #[test]
    fn s3_subgroups_and_classes() {
        let m = symmetric_inverse_monoid(3, PointedGroup::trivial()).unwrap();
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        // 1, three of order 2, A₃, S₃
        assert_eq!(subgroups_avoiding_scalars(&h.monoid).unwrap().len(), 6);
        assert_eq!(group_simples(&h.monoid).unwrap().len(), 4);
    }

    #[test]
    fn scalars_are_excluded() {
        let si = SymmetricInverse::new(2, PointedGroup::cyclic(2).unwrap()).unwrap();
        let m = si.monoid();
        let h = m.maximal_subgroup(m.one_elem()).unwrap();
        // G² ⋊ S₂ is dihedral of order 8; the scalars are its centre
        let all = subgroups_avoiding_scalars(&h.monoid).unwrap();
        assert!(all.iter().all(|s| s.len() <= 2));
        let g = h.monoid.group().elements().nth(1).unwrap();
        let bad = [h.monoid.one_elem(), Elem { g, b: h.monoid.one() }];
        assert_eq!(coset_rep(&h.monoid, &bad).unwrap_err(), CmpError::FreenessViolated);
    }
}
