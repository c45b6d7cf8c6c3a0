use alloc::vec;
use alloc::vec::Vec;

use super::{Entry, FvectError, Space, SubmonomialMatrix};

/// `D` together with `p_B: B → D` and `i_C: C → D` for a span `C ↞ A ↪ B`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pushout {
    pub object: Space,
    pub p_b: SubmonomialMatrix,
    pub i_c: SubmonomialMatrix,
}

/// `A` together with `i_B: A → B` and `p_C: A → C` for a cospan `B ↠ D ↩ C`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Pullback {
    pub object: Space,
    pub i_b: SubmonomialMatrix,
    pub p_c: SubmonomialMatrix,
}

/// Pushout of an admissible mono `i: A ↪ B` along an admissible epi `p: A ↠ C`.
///
/// Basis of `D`: the coordinates of `B` outside `i(A)` in order, then the
/// coordinates of `C`. A coordinate `i(a)` is glued to `p(a)`, or collapses
/// to zero when `p(a) = 0`.
pub fn pushout(i: &SubmonomialMatrix, p: &SubmonomialMatrix) -> Result<Pushout, FvectError> {
    if i.group() != p.group() {
        return Err(FvectError::GroupMismatch);
    }
    if i.cols() != p.cols() {
        return Err(FvectError::DimMismatch { expected: i.cols(), found: p.cols() });
    }
    if !i.is_mono() {
        return Err(FvectError::NotMono);
    }
    if !p.is_epi() {
        return Err(FvectError::NotEpi);
    }
    let group = i.group();
    let (b_dim, c_dim) = (i.rows(), p.rows());

    let mut glued: Vec<Option<usize>> = vec![None; b_dim];
    for a in 0..i.cols() {
        glued[i.entry(a).expect("mono").row()] = Some(a);
    }
    let free: Vec<usize> = (0..b_dim).filter(|&b| glued[b].is_none()).collect();
    let offset = free.len();
    let d_dim = offset + c_dim;

    let mut p_b = vec![None; b_dim];
    for (k, &b) in free.iter().enumerate() {
        p_b[b] = Some(Entry::new(k, crate::group::GroupElem::ONE));
    }
    for b in 0..b_dim {
        let Some(a) = glued[b] else { continue };
        let gi = i.entry(a).expect("mono").label;
        p_b[b] = p.entry(a).map(|e| Entry::new(offset + e.row(), group.div(e.label, gi)));
    }
    let i_c = (0..c_dim).map(|c| Some(Entry::new(offset + c, crate::group::GroupElem::ONE))).collect();

    Ok(Pushout {
        object: Space::new(group, d_dim),
        p_b: SubmonomialMatrix::from_columns(group, d_dim, p_b)?,
        i_c: SubmonomialMatrix::from_columns(group, d_dim, i_c)?,
    })
}

/// Pullback of an admissible epi `p: B ↠ D` along an admissible mono `i: C ↪ D`.
///
/// `A = {(b, c) : p(b) = i(c)}`; basis ordered by the `B`-coordinate.
pub fn pullback(p: &SubmonomialMatrix, i: &SubmonomialMatrix) -> Result<Pullback, FvectError> {
    if i.group() != p.group() {
        return Err(FvectError::GroupMismatch);
    }
    if i.rows() != p.rows() {
        return Err(FvectError::DimMismatch { expected: p.rows(), found: i.rows() });
    }
    if !p.is_epi() {
        return Err(FvectError::NotEpi);
    }
    if !i.is_mono() {
        return Err(FvectError::NotMono);
    }
    let group = p.group();
    let (b_dim, c_dim) = (p.cols(), i.cols());

    // pairs (b, optional (label, c)) spanning A
    let mut basis: Vec<(usize, Option<Entry>)> = Vec::new();
    for b in 0..b_dim {
        match p.entry(b) {
            None => basis.push((b, None)),
            Some(e) => {
                if let Some((c, h)) = i.preimage(e.row()) {
                    basis.push((b, Some(Entry::new(c, group.div(e.label, h)))));
                }
            }
        }
    }
    let a_dim = basis.len();
    let i_b = basis.iter().map(|&(b, _)| Some(Entry::new(b, crate::group::GroupElem::ONE))).collect();
    let p_c = basis.iter().map(|&(_, c)| c).collect();
    Ok(Pullback {
        object: Space::new(group, a_dim),
        i_b: SubmonomialMatrix::from_columns(group, b_dim, i_b)?,
        p_c: SubmonomialMatrix::from_columns(group, c_dim, p_c)?,
    })
}
