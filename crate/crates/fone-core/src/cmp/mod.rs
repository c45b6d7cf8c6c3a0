//! Induction and restriction along idempotents, the simple representations
//! they produce, and the semisimplicity decision.

mod group;
mod phi;
mod semisimple;
mod vsh;

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use group::{coset_rep, group_simples, subgroups_avoiding_scalars, GroupSimple, GROUP_ORDER_CAP};
pub use phi::{normal_subgroups, permutations, phi_h, Perm, PhiH};
pub use semisimple::{complement, complement_free_subrep, is_semisimple, nil_ideal_witness, Semisimplicity, Witness};
pub use vsh::{v_sh, vsh_isomorphic};

use crate::bitset::BitSet;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::group::GroupElem;
use crate::monoid::{Elem, GLinearMonoid, MaximalSubgroup, MonoidError};
use crate::rep::{RepError, Representation};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CmpError {
    NotIdempotent,
    NotLeftInductive,
    GroupMismatch,
    BaseNotSimple,
    GroupTooLarge {
        order: usize,
        cap: usize,
    },
    FreenessViolated,
    NotSubgroup,
    NotNormal,
    /// `g ↦ gⁿ` is not the identity on `G`, so `φ_H(gA) ≠ g·φ_H(A)`.
    ScalarTwist,
    BadSubset,
    /// `P(e)e` is not free over `G_J`.
    NotFree,
    Rep(RepError),
    Monoid(MonoidError),
}

impl fmt::Display for CmpError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CmpError::NotIdempotent => f.write_str("element is not a nonzero idempotent"),
            CmpError::NotLeftInductive => f.write_str("monoid is not left inductive"),
            CmpError::GroupMismatch => f.write_str("representation is not over the maximal subgroup at e"),
            CmpError::BaseNotSimple => f.write_str("base representation is not simple"),
            CmpError::GroupTooLarge { order, cap } => write!(f, "group of order {order} exceeds the cap {cap}"),
            CmpError::FreenessViolated => f.write_str("subgroup meets the scalars nontrivially"),
            CmpError::NotSubgroup => f.write_str("elements do not form a subgroup"),
            CmpError::NotNormal => f.write_str("subgroup is not normal"),
            CmpError::ScalarTwist => f.write_str("phi_H scales by g^n, which differs from g for some g in G"),
            CmpError::BadSubset => f.write_str("subset must be nonempty, sorted and inside [n]"),
            CmpError::NotFree => f.write_str("P(e)e is not a free right G_J-set"),
            CmpError::Rep(e) => write!(f, "{e}"),
            CmpError::Monoid(e) => write!(f, "{e}"),
        }
    }
}

impl core::error::Error for CmpError {}

impl From<RepError> for CmpError {
    fn from(e: RepError) -> Self {
        CmpError::Rep(e)
    }
}

impl From<MonoidError> for CmpError {
    fn from(e: MonoidError) -> Self {
        CmpError::Monoid(e)
    }
}

/// `eV` as a representation of `Ĝ_J`.
pub fn restrict(v: &Representation, h: &MaximalSubgroup) -> Result<Representation, CmpError> {
    let m = v.monoid();
    if *m != h.ambient {
        return Err(CmpError::Rep(RepError::MonoidMismatch));
    }
    let coords = v.act(Some(h.idempotent)).support();
    let action = h.embedding.iter().map(|&a| v.act(Some(a)).compress(&coords)).collect();
    Ok(Representation::new(h.monoid.clone(), coords.len(), action)?)
}

/// `P(e)e`: basis elements `c` of `J_e` with `ce = c`.
pub fn pe_e(m: &GLinearMonoid, e: Elem) -> Vec<usize> {
    let report = m.j_classes();
    let class = report.class_of(e.b);
    report.classes[class]
        .members
        .iter()
        .copied()
        .filter(|&c| m.mul(Some(Elem::basis(c)), Some(e)) == Some(Elem::basis(c)))
        .collect()
}

/// `W↑_e = P(e)e ⊗_{Ĝ_J} W`.
#[derive(Clone, Debug)]
pub struct InducedRep {
    pub rep: Representation,
    pub idempotent: Elem,
    /// Coordinate `k` is the class of `c ⊗ w_j` for `tensors[k] = (c, j)`,
    /// the least member of the class.
    pub tensors: Vec<(usize, usize)>,
}

fn find(parent: &mut [usize], weight: &mut [GroupElem], g: crate::group::PointedGroup, i: usize) -> (usize, GroupElem) {
    // point(i) = weight[i] · point(parent[i])
    let p = parent[i];
    if p == i {
        return (i, GroupElem::ONE);
    }
    let (root, w) = find(parent, weight, g, p);
    weight[i] = g.mul(weight[i], w);
    parent[i] = root;
    (root, weight[i])
}

pub fn induce(w: &Representation, h: &MaximalSubgroup) -> Result<InducedRep, CmpError> {
    let m = &h.ambient;
    if *w.monoid() != h.monoid {
        return Err(CmpError::GroupMismatch);
    }
    if !m.is_left_inductive() {
        return Err(CmpError::NotLeftInductive);
    }
    let g = m.group();
    let e = h.idempotent;
    let cs = pe_e(m, e);
    let pos = |c: usize| cs.iter().position(|&x| x == c);
    let dw = w.dim();
    let nodes = cs.len() * dw;
    let mut parent: Vec<usize> = (0..nodes).collect();
    let mut weight = vec![GroupElem::ONE; nodes];
    for (ci, &c) in cs.iter().enumerate() {
        for (alpha, &a) in h.embedding.iter().enumerate() {
            let ca = m.mul(Some(Elem::basis(c)), Some(a)).ok_or(CmpError::NotFree)?;
            let ci2 = pos(ca.b).ok_or(CmpError::NotFree)?;
            let act = w.action(alpha);
            for j in 0..dw {
                let aw = act.entry(j).ok_or(CmpError::Rep(RepError::NotClosed))?;
                // c·α ⊗ w_j = c ⊗ α·w_j, i.e. g₁[c', j] = g₂[c, j']
                let lhs = ci2 * dw + j;
                let rhs = ci * dw + aw.row();
                let ratio = g.div(aw.label, ca.g);
                let (rl, wl) = find(&mut parent, &mut weight, g, lhs);
                let (rr, wr) = find(&mut parent, &mut weight, g, rhs);
                // point(lhs) = ratio · point(rhs)
                if rl == rr {
                    if wl != g.mul(ratio, wr) {
                        return Err(CmpError::NotFree);
                    }
                } else {
                    parent[rl] = rr;
                    weight[rl] = g.div(g.mul(ratio, wr), wl);
                }
            }
        }
    }
    let mut coord_of_root = vec![usize::MAX; nodes];
    let mut rep_weight = Vec::new();
    let mut tensors = Vec::new();
    let mut place = vec![(0usize, GroupElem::ONE); nodes];
    for i in 0..nodes {
        let (r, wi) = find(&mut parent, &mut weight, g, i);
        if coord_of_root[r] == usize::MAX {
            coord_of_root[r] = tensors.len();
            rep_weight.push(wi);
            tensors.push((cs[i / dw], i % dw));
        }
        let k = coord_of_root[r];
        place[i] = (k, g.div(wi, rep_weight[k]));
    }
    let dim = tensors.len();
    let action = (0..m.dim())
        .map(|b| {
            let cols = tensors
                .iter()
                .map(|&(c, j)| {
                    let p = m.product(b, c)?;
                    let ci = pos(p.b)?;
                    let (k, lab) = place[ci * dw + j];
                    Some(Entry::new(k, g.mul(p.g, lab)))
                })
                .collect();
            SubmonomialMatrix::from_columns(g, dim, cols)
                .map_err(|_| CmpError::Rep(RepError::NotLinear { basis: m.name(b).into() }))
        })
        .collect::<Result<Vec<_>, _>>()?;
    let rep = Representation::new(m.clone(), dim, action)?;
    Ok(InducedRep { rep, idempotent: e, tensors })
}

/// `N(W↑_e)`: coordinates `x` with `eMx = 0`.
pub fn radical(induced: &InducedRep) -> BitSet {
    let v = &induced.rep;
    let m = v.monoid();
    let e = Some(induced.idempotent);
    let killers: Vec<SubmonomialMatrix> = (0..m.dim()).map(|b| v.act(m.mul(e, Some(Elem::basis(b))))).collect();
    BitSet::from_indices(v.dim(), (0..v.dim()).filter(|&x| killers.iter().all(|a| a.entry(x).is_none())))
}

/// `Q(W) = W↑_e / N(W↑_e)`.
pub fn cmp_simple(w: &Representation, h: &MaximalSubgroup) -> Result<Representation, CmpError> {
    if !w.is_simple() {
        return Err(CmpError::BaseNotSimple);
    }
    let induced = induce(w, h)?;
    Ok(induced.rep.quotient(&radical(&induced))?)
}

/// A simple representation together with the data it was built from.
#[derive(Clone, Debug)]
pub struct Simple {
    /// Index of the apex in [`GLinearMonoid::j_classes`].
    pub apex: usize,
    pub idempotent: Elem,
    pub subgroup: Vec<Elem>,
    pub rep: Representation,
}

/// Every simple representation up to isomorphism, grouped by apex.
pub fn all_simples(m: &GLinearMonoid) -> Result<Vec<Simple>, CmpError> {
    if !m.is_left_inductive() {
        return Err(CmpError::NotLeftInductive);
    }
    let report = m.j_classes();
    let mut out: Vec<Simple> = Vec::new();
    for c in report.regular_nonzero() {
        let e = report.classes[c].idempotents[0];
        let h = m.maximal_subgroup(e)?;
        for gs in group_simples(&h.monoid)? {
            let rep = cmp_simple(&gs.rep, &h)?;
            let key = rep.iso_key();
            if out.iter().all(|s| s.rep.iso_key() != key) {
                out.push(Simple { apex: c, idempotent: e, subgroup: gs.subgroup, rep });
            }
        }
    }
    Ok(out)
}
