use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::{Elem, GLinearMonoid, MElem, MonoidError};
use crate::bitset::BitSet;
use crate::fvect::{Entry, SubmonomialMatrix};

/// A `J`-class, described by the basis elements whose orbits it contains.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JClass {
    pub members: Vec<usize>,
    /// The class `{0}`; it has no members.
    pub is_zero: bool,
    pub regular: bool,
    /// One nonzero idempotent per member orbit that contains one.
    pub idempotents: Vec<Elem>,
    /// The four characterisations of regularity, evaluated independently:
    /// contains an idempotent, contains a regular element, all elements are
    /// regular, `J² ∩ J ≠ ∅`.
    pub regularity_conditions: [bool; 4],
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JClassReport {
    /// The zero class comes first, then nonzero classes by least member.
    pub classes: Vec<JClass>,
    class_of: Vec<usize>,
    ideals: Vec<BitSet>,
}

impl JClassReport {
    /// Class index of basis element `b`.
    pub fn class_of(&self, b: usize) -> usize {
        self.class_of[b]
    }

    pub fn class_of_elem(&self, x: MElem) -> usize {
        x.map_or(0, |x| self.class_of[x.b])
    }

    /// Basis elements of the ideal `MxM` for any `x` in class `c`.
    pub fn ideal(&self, c: usize) -> &BitSet {
        &self.ideals[c]
    }

    /// `J_a ≤_J J_b`.
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.ideals[a].is_subset(&self.ideals[b])
    }

    /// `I_J`: basis elements `x` with `J ⊄ MxM`.
    pub fn ideal_below(&self, c: usize) -> BitSet {
        let n = self.class_of.len();
        let mut out = BitSet::new(n);
        for b in 0..n {
            if !self.leq(c, self.class_of[b]) {
                out.insert(b);
            }
        }
        out
    }

    pub fn regular_nonzero(&self) -> impl Iterator<Item = usize> + '_ {
        (0..self.classes.len()).filter(|&c| !self.classes[c].is_zero && self.classes[c].regular)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Side {
    Left,
    Right,
}

/// `P(a) = J(a)/I(a)`, carried by the orbits of `J_a` plus zero.
#[derive(Clone, Debug)]
pub struct PrincipalFactor {
    pub monoid: GLinearMonoid,
    pub class: usize,
    pub carrier: Vec<usize>,
    /// `P(a)² = 0`. Otherwise the factor is `0`-simple.
    pub null: bool,
}

impl PrincipalFactor {
    /// Translation by basis element `x` on the carrier, or `None` when it is
    /// not `Ĝ`-linear (two carrier orbits land in the same orbit).
    pub fn translation(&self, side: Side, x: usize) -> Option<SubmonomialMatrix> {
        let m = &self.monoid;
        let pos: BTreeMap<usize, usize> = self.carrier.iter().enumerate().map(|(i, &c)| (c, i)).collect();
        let k = self.carrier.len();
        let mut cols = Vec::with_capacity(k);
        let mut hit = BitSet::new(k);
        for &c in &self.carrier {
            let p = match side {
                Side::Left => m.product(x, c),
                Side::Right => m.product(c, x),
            };
            let entry = p.and_then(|p| pos.get(&p.b).map(|&i| Entry::new(i, p.g)));
            if let Some(e) = entry {
                if !hit.insert(e.row()) {
                    return None;
                }
            }
            cols.push(entry);
        }
        SubmonomialMatrix::from_columns(m.group(), k, cols).ok()
    }

    pub fn is_linear(&self, side: Side) -> bool {
        (0..self.monoid.dim()).all(|x| self.translation(side, x).is_some())
    }
}

impl GLinearMonoid {
    /// Basis elements of the two-sided ideal `MbM`.
    pub fn principal_ideal(&self, b: usize) -> BitSet {
        let n = self.dim();
        let mut left = BitSet::new(n);
        for x in 0..n {
            if let Some(p) = self.product(x, b) {
                left.insert(p.b);
            }
        }
        let mut out = BitSet::new(n);
        for l in left.iter() {
            for y in 0..n {
                if let Some(p) = self.product(l, y) {
                    out.insert(p.b);
                }
            }
        }
        out
    }

    pub fn j_classes(&self) -> JClassReport {
        let n = self.dim();
        let ideals: Vec<BitSet> = (0..n).map(|b| self.principal_ideal(b)).collect();
        let mut by_ideal: BTreeMap<&BitSet, usize> = BTreeMap::new();
        let mut classes = alloc::vec![JClass {
            members: Vec::new(),
            is_zero: true,
            regular: true,
            idempotents: Vec::new(),
            regularity_conditions: [true; 4],
        }];
        let mut class_ideals = alloc::vec![BitSet::new(n)];
        let mut class_of = alloc::vec![0; n];
        for b in 0..n {
            let c = *by_ideal.entry(&ideals[b]).or_insert_with(|| {
                classes.push(JClass {
                    members: Vec::new(),
                    is_zero: false,
                    regular: false,
                    idempotents: Vec::new(),
                    regularity_conditions: [false; 4],
                });
                class_ideals.push(ideals[b].clone());
                classes.len() - 1
            });
            classes[c].members.push(b);
            class_of[b] = c;
        }
        for (c, class) in classes.iter_mut().enumerate().skip(1) {
            class.idempotents = class.members.iter().filter_map(|&b| self.idempotent_in_orbit(b)).collect();
            let regular_members = class.members.iter().filter(|&&b| self.is_regular_basis(b)).count();
            let square_meets = class
                .members
                .iter()
                .any(|&x| class.members.iter().any(|&y| self.product(x, y).is_some_and(|p| class_of[p.b] == c)));
            class.regularity_conditions = [
                !class.idempotents.is_empty(),
                regular_members > 0,
                regular_members == class.members.len(),
                square_meets,
            ];
            class.regular = class.regularity_conditions[0];
        }
        JClassReport { classes, class_of, ideals: class_ideals }
    }

    /// The unique idempotent `h⁻¹b` in the orbit of `b`, if `b² = h·b`.
    pub fn idempotent_in_orbit(&self, b: usize) -> Option<Elem> {
        let p = self.product(b, b)?;
        (p.b == b).then(|| Elem { g: self.group().inv(p.g), b })
    }

    pub fn is_idempotent(&self, x: MElem) -> bool {
        self.mul(x, x) == x
    }

    pub fn idempotents(&self) -> Vec<Elem> {
        (0..self.dim()).filter_map(|b| self.idempotent_in_orbit(b)).collect()
    }

    /// `b` is regular iff `bcb ∈ G·b` for some basis `c`.
    pub fn is_regular_basis(&self, b: usize) -> bool {
        (0..self.dim()).any(|c| self.mul(self.product(b, c), Some(Elem::basis(b))).is_some_and(|p| p.b == b))
    }

    pub fn is_regular(&self) -> bool {
        (0..self.dim()).all(|b| self.is_regular_basis(b))
    }

    pub fn is_inverse(&self) -> bool {
        if !self.is_regular() {
            return false;
        }
        let idem = self.idempotents();
        idem.iter().all(|&e| idem.iter().all(|&f| self.mul(Some(e), Some(f)) == self.mul(Some(f), Some(e))))
    }

    /// The unique `y` with `xyx = x` and `yxy = y`.
    pub fn star_inverse(&self, x: MElem) -> Result<MElem, MonoidError> {
        if !self.is_inverse() {
            return Err(MonoidError::NotInverse);
        }
        Ok(self.star_inverse_unchecked(x))
    }

    /// [`star_inverse`](Self::star_inverse) without the inverse-monoid check;
    /// returns the first solution in element order.
    pub fn star_inverse_unchecked(&self, x: MElem) -> MElem {
        let x = x?;
        let g = x.g;
        let xb = Some(Elem::basis(x.b));
        let group = self.group();
        for c in 0..self.dim() {
            for k in group.elements() {
                let y = Some(Elem { g: k, b: c });
                if self.mul3(xb, y, xb) == xb && self.mul3(y, xb, y) == y {
                    return Some(Elem { g: group.mul(group.inv(g), k), b: c });
                }
            }
        }
        None
    }

    pub fn principal_factor(&self, a: MElem) -> Result<PrincipalFactor, MonoidError> {
        let a = a.ok_or(MonoidError::ZeroElement)?;
        let report = self.j_classes();
        Ok(self.principal_factor_of_class(&report, report.class_of(a.b)))
    }

    pub fn principal_factor_of_class(&self, report: &JClassReport, class: usize) -> PrincipalFactor {
        let carrier = report.classes[class].members.clone();
        let null = !carrier
            .iter()
            .any(|&x| carrier.iter().any(|&y| self.product(x, y).is_some_and(|p| report.class_of(p.b) == class)));
        PrincipalFactor { monoid: self.clone(), class, carrier, null }
    }

    /// Every regular principal factor is a representation under translation
    /// from the given side.
    pub fn is_inductive(&self, side: Side) -> bool {
        let report = self.j_classes();
        let ok = report.regular_nonzero().all(|c| self.principal_factor_of_class(&report, c).is_linear(side));
        ok
    }

    pub fn is_left_inductive(&self) -> bool {
        self.is_inductive(Side::Left)
    }

    pub fn is_right_inductive(&self) -> bool {
        self.is_inductive(Side::Right)
    }

    /// Basis elements that are units.
    pub fn units(&self) -> Vec<usize> {
        let one = self.one();
        (0..self.dim()).filter(|&b| (0..self.dim()).any(|c| self.product(b, c).is_some_and(|p| p.b == one))).collect()
    }
}
