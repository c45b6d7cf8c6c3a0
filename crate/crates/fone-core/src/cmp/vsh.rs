use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use super::phi::permutations;
use super::{coset_rep, induce, CmpError, InducedRep};
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::group::{GroupElem, PointedGroup};
use crate::monoid::{Elem, SymmetricInverse};

fn check_subset(n: usize, s: &[usize]) -> Result<(), CmpError> {
    let sorted = s.windows(2).all(|w| w[0] < w[1]);
    if s.is_empty() || !sorted || s.iter().any(|&k| k >= n) {
        return Err(CmpError::BadSubset);
    }
    Ok(())
}

/// Whether `a` lies in `G^S ⋊ Symm(S)`, i.e. permutes the coordinates in `S`
/// and kills the rest.
fn in_local_group(a: &SubmonomialMatrix, s: &[usize]) -> bool {
    a.support() == s && a.image_rows() == s
}

/// `V_{S,H} = W↑_{E_S}` for `W = (G^S ⋊ Symm(S))/H`, with `H` given by its
/// matrices.
pub fn v_sh(si: &SymmetricInverse, s: &[usize], h: &[SubmonomialMatrix]) -> Result<InducedRep, CmpError> {
    check_subset(si.n(), s)?;
    let m = si.monoid();
    let g = m.group();
    let e = si.element_of(&SubmonomialMatrix::diagonal_idempotent(g, si.n(), s)).ok_or(CmpError::NotIdempotent)?;
    let local = m.maximal_subgroup(e)?;
    let sub = h
        .iter()
        .map(|a| {
            if !in_local_group(a, s) {
                return None;
            }
            local.locate(si.element_of(a)?)
        })
        .collect::<Option<Vec<Elem>>>()
        .ok_or(CmpError::NotSubgroup)?;
    let w = coset_rep(&local.monoid, &sub)?;
    induce(&w, &local)
}

/// `F_{ψ,t}(A)` for `ψ: T → S` given by `psi[i] = ψ(t_i)` and `t ∈ G^S`
/// indexed like `s`.
fn transport(a: &SubmonomialMatrix, s: &[usize], t_set: &[usize], psi: &[usize], t: &[GroupElem]) -> SubmonomialMatrix {
    let g = a.group();
    let pos_s = |k: usize| s.iter().position(|&x| x == k).expect("inside S");
    let psi_inv = |k: usize| t_set[psi.iter().position(|&x| x == k).expect("ψ is onto S")];
    let mut cols = alloc::vec![None; a.cols()];
    for (i, &kp) in t_set.iter().enumerate() {
        let k = psi[i];
        let ent = a.entry(k).expect("full rank on S");
        let fk = ent.row();
        let label = g.mul(g.div(t[pos_s(k)], t[pos_s(fk)]), ent.label);
        cols[kp] = Some(Entry::new(psi_inv(fk), label));
    }
    SubmonomialMatrix::from_columns(g, a.rows(), cols).expect("a relabelled permutation")
}

/// `V_{S,H} ≅ V_{T,K}` iff some bijection `ψ: T → S` and `t ∈ G^S` give
/// `F_{ψ,t}(H) = K`.
pub fn vsh_isomorphic(
    n: usize,
    group: PointedGroup,
    (s, h): (&[usize], &[SubmonomialMatrix]),
    (t_set, k): (&[usize], &[SubmonomialMatrix]),
) -> Result<bool, CmpError> {
    check_subset(n, s)?;
    check_subset(n, t_set)?;
    if h.iter().any(|a| !in_local_group(a, s)) || k.iter().any(|a| !in_local_group(a, t_set)) {
        return Err(CmpError::NotSubgroup);
    }
    let target: BTreeSet<&SubmonomialMatrix> = k.iter().collect();
    let source: BTreeSet<&SubmonomialMatrix> = h.iter().collect();
    if s.len() != t_set.len() || source.len() != target.len() {
        return Ok(false);
    }
    let d = s.len();
    let elems: Vec<GroupElem> = group.elements().collect();
    let twists = elems.len().pow(d as u32);
    for pi in permutations(d) {
        let psi: Vec<usize> = pi.iter().map(|&i| s[i]).collect();
        for code in 0..twists {
            let mut c = code;
            let t: Vec<GroupElem> = (0..d)
                .map(|_| {
                    let x = elems[c % elems.len()];
                    c /= elems.len();
                    x
                })
                .collect();
            if source.iter().all(|a| target.contains(&transport(a, s, t_set, &psi, &t))) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}
