use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use super::{RepError, Representation};
use crate::fvect::SubmonomialMatrix;
use crate::monoid::GLinearMonoid;

/// Largest dimension accepted by [`representations`].
pub const ENUM_DIM_CAP: usize = 6;

/// A generating set: basis elements not in the submonoid generated, together
/// with the scalars, by the earlier ones. The identity is never included.
pub fn generators(m: &GLinearMonoid) -> Vec<usize> {
    let mut gens = Vec::new();
    let mut reached = reach(m, &gens);
    for b in 0..m.dim() {
        if !reached[b] {
            gens.push(b);
            reached = reach(m, &gens);
        }
    }
    gens
}

fn reach(m: &GLinearMonoid, gens: &[usize]) -> Vec<bool> {
    let mut seen = vec![false; m.dim()];
    seen[m.one()] = true;
    let mut stack = vec![m.one()];
    while let Some(b) = stack.pop() {
        for &x in gens {
            if let Some(p) = m.product(x, b) {
                if !seen[p.b] {
                    seen[p.b] = true;
                    stack.push(p.b);
                }
            }
        }
    }
    seen
}

/// Images of everything generated by `assigned`, or `None` if two words for
/// the same element get different matrices.
fn close(
    m: &GLinearMonoid,
    dim: usize,
    assigned: &[(usize, &SubmonomialMatrix)],
) -> Option<Vec<Option<SubmonomialMatrix>>> {
    let g = m.group();
    let mut known: Vec<Option<SubmonomialMatrix>> = vec![None; m.dim()];
    known[m.one()] = Some(SubmonomialMatrix::identity(g, dim));
    let mut stack = vec![m.one()];
    while let Some(b) = stack.pop() {
        let rb = known[b].clone().expect("pushed only when known");
        for &(x, rx) in assigned {
            let prod = rx.compose_unchecked(&rb);
            match m.product(x, b) {
                None => {
                    if !prod.is_zero() {
                        return None;
                    }
                }
                Some(p) => {
                    let target = prod.scaled(g.inv(p.g));
                    match &known[p.b] {
                        Some(k) if *k != target => return None,
                        Some(_) => {}
                        None => {
                            known[p.b] = Some(target);
                            stack.push(p.b);
                        }
                    }
                }
            }
        }
    }
    Some(known)
}

/// Invertible monomial matrices of size `dim`.
fn monomials(m: &GLinearMonoid, dim: usize) -> Vec<SubmonomialMatrix> {
    SubmonomialMatrix::enumerate(m.group(), dim, dim).into_iter().filter(|p| p.is_invertible()).collect()
}

/// One representation of dimension `dim` from every isomorphism class,
/// ordered by [`IsoKey`](super::IsoKey).
///
/// Backtracks over images of [`generators`], pruning with the relations
/// among the generators assigned so far. The first generator only takes
/// values that are least in their conjugacy class.
pub fn representations(m: &GLinearMonoid, dim: usize) -> Result<Vec<Representation>, RepError> {
    if dim > ENUM_DIM_CAP {
        return Err(RepError::DimTooLarge { dim, cap: ENUM_DIM_CAP });
    }
    let gens = generators(m);
    let all = SubmonomialMatrix::enumerate(m.group(), dim, dim);
    let mut cands: Vec<(usize, Vec<SubmonomialMatrix>)> = gens
        .iter()
        .map(|&x| (x, all.iter().filter(|a| close(m, dim, &[(x, a)]).is_some()).cloned().collect::<Vec<_>>()))
        .collect();
    cands.sort_by_key(|(_, c)| c.len());
    if let Some((_, first)) = cands.first_mut() {
        let ps = monomials(m, dim);
        first.retain(|a| ps.iter().all(|p| a.conjugate(p) >= *a));
    }
    let mut found = BTreeMap::new();
    let mut chosen: Vec<(usize, &SubmonomialMatrix)> = Vec::new();
    search(m, dim, &cands, &mut chosen, &mut found);
    Ok(found.into_values().collect())
}

fn search<'a>(
    m: &GLinearMonoid,
    dim: usize,
    cands: &'a [(usize, Vec<SubmonomialMatrix>)],
    chosen: &mut Vec<(usize, &'a SubmonomialMatrix)>,
    found: &mut BTreeMap<super::IsoKey, Representation>,
) {
    let Some((x, options)) = cands.get(chosen.len()) else {
        let known = close(m, dim, chosen).expect("checked on the way down");
        let action = known.into_iter().map(|a| a.expect("generators reach every basis element")).collect();
        let rep = Representation::new(m.clone(), dim, action).expect("closure is a homomorphism");
        found.entry(rep.iso_key()).or_insert(rep);
        return;
    };
    for a in options {
        chosen.push((*x, a));
        if close(m, dim, chosen).is_some() {
            search(m, dim, cands, chosen, found);
        }
        chosen.pop();
    }
}

/// Every representation of dimension at most `max_dim`, up to isomorphism.
pub fn representations_up_to(m: &GLinearMonoid, max_dim: usize) -> Result<Vec<Representation>, RepError> {
    let mut out = Vec::new();
    for d in 0..=max_dim {
        out.extend(representations(m, d)?);
    }
    Ok(out)
}
