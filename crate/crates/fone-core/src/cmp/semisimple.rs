use alloc::vec::Vec;

use crate::bitset::BitSet;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::monoid::{GLinearMonoid, Side};
use crate::rep::{representations, Representation, SUBREP_CAP};

/// A representation with a subrepresentation that has no complement.
#[derive(Clone, Debug)]
pub struct Witness {
    pub rep: Representation,
    pub sub: BitSet,
}

#[derive(Clone, Debug)]
pub enum Semisimplicity {
    Semisimple,
    NotSemisimple(Witness),
    /// No witness up to the search bound and no theorem applies.
    Unknown,
}

impl Semisimplicity {
    pub fn is_semisimple(&self) -> Option<bool> {
        match self {
            Semisimplicity::Semisimple => Some(true),
            Semisimplicity::NotSemisimple(_) => Some(false),
            Semisimplicity::Unknown => None,
        }
    }
}

/// The complement of `w` in `v`. Monomial actions leave only one candidate:
/// the remaining coordinates.
pub fn complement(v: &Representation, w: &BitSet) -> Option<BitSet> {
    if !v.is_closed(w) {
        return None;
    }
    let rest = w.complement();
    v.is_closed(&rest).then_some(rest)
}

/// A subrepresentation without complement, trying the non-units first.
pub fn complement_free_subrep(v: &Representation) -> Option<BitSet> {
    let m = v.monoid();
    if v.dim() == m.dim() {
        let units = m.units();
        let non_units = BitSet::from_indices(v.dim(), (0..v.dim()).filter(|b| !units.contains(b)));
        if !non_units.is_empty() && v.is_closed(&non_units) && complement(v, &non_units).is_none() {
            return Some(non_units);
        }
    }
    let subs = v.all_subreps(SUBREP_CAP).ok()?;
    subs.into_iter().find(|w| complement(v, w).is_none())
}

/// The largest nilpotent ideal: basis elements whose principal ideal holds
/// no nonzero idempotent.
fn nil_ideal(m: &GLinearMonoid) -> BitSet {
    let idem: Vec<usize> = m.idempotents().iter().map(|e| e.b).collect();
    BitSet::from_indices(m.dim(), (0..m.dim()).filter(|&b| !idem.iter().any(|&e| m.principal_ideal(b).contains(e))))
}

/// `Ṽ = J^d ⊗ V ⊕ V` for the largest power `J^d ≠ 0` of the nil ideal and
/// `V = M / N(M)`, with `J^d ⊗ V` as the candidate witness. `None` if `M`
/// has no nonzero nil ideal or the action fails to be a representation.
pub fn nil_ideal_witness(m: &GLinearMonoid) -> Option<Witness> {
    let j = nil_ideal(m);
    if j.is_empty() {
        return None;
    }
    let mut power = j.clone();
    loop {
        let mut next = BitSet::new(m.dim());
        for a in power.iter() {
            for b in j.iter() {
                if let Some(p) = m.product(a, b) {
                    next.insert(p.b);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        if next == power {
            // idempotent ideal; cannot happen for a nil ideal of a finite monoid
            return None;
        }
        power = next;
    }
    let jd = power.to_vec();
    let units = m.units();
    let v = Representation::translation(m.clone(), &units, Side::Left).ok()?;
    let k = v.dim();
    let dim = jd.len() * k + k;
    let g = m.group();
    let action = (0..m.dim())
        .map(|x| {
            let mut cols = Vec::with_capacity(dim);
            if let Some(xi) = jd.iter().position(|&y| y == x) {
                cols.extend((0..jd.len() * k).map(|_| None));
                cols.extend((0..k).map(|i| Some(Entry::new(xi * k + i, crate::group::GroupElem::ONE))));
            } else {
                let a = v.action(x);
                for ji in 0..=jd.len() {
                    for i in 0..k {
                        cols.push(a.entry(i).map(|e| Entry::new(ji * k + e.row(), e.label)));
                    }
                }
            }
            SubmonomialMatrix::from_columns(g, dim, cols).ok()
        })
        .collect::<Option<Vec<_>>>()?;
    let rep = Representation::new(m.clone(), dim, action).ok()?;
    let sub = BitSet::from_indices(dim, 0..jd.len() * k);
    complement(&rep, &sub).is_none().then_some(Witness { rep, sub })
}

fn search_witness(m: &GLinearMonoid, search_dim: usize) -> Option<Witness> {
    if m.dim() <= SUBREP_CAP {
        let all: Vec<usize> = (0..m.dim()).collect();
        if let Ok(rep) = Representation::translation(m.clone(), &all, Side::Left) {
            if let Some(sub) = complement_free_subrep(&rep) {
                return Some(Witness { rep, sub });
            }
        }
    }
    if let Some(w) = nil_ideal_witness(m) {
        return Some(w);
    }
    for d in 2..=search_dim {
        for rep in representations(m, d).ok()? {
            if let Some(sub) = complement_free_subrep(&rep) {
                return Some(Witness { rep, sub });
            }
        }
    }
    None
}

/// For left inductive `M`, semisimple iff inverse; a negative answer carries
/// a witness. Otherwise only a witness found by searching representations up
/// to `search_dim` decides.
pub fn is_semisimple(m: &GLinearMonoid, search_dim: usize) -> Semisimplicity {
    if m.is_left_inductive() && m.is_inverse() {
        return Semisimplicity::Semisimple;
    }
    match search_witness(m, search_dim) {
        Some(w) => Semisimplicity::NotSemisimple(w),
        None => Semisimplicity::Unknown,
    }
}
