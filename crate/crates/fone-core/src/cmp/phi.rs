use alloc::collections::{BTreeMap, BTreeSet};
use alloc::vec;
use alloc::vec::Vec;

use super::CmpError;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::group::{GroupElem, PointedGroup};
use crate::monoid::SymmetricInverse;
use crate::rep::Representation;

/// A permutation of `0..n`, stored as its images.
pub type Perm = Vec<usize>;

const MAX_N: usize = 5;

fn compose(a: &[usize], b: &[usize]) -> Perm {
    b.iter().map(|&k| a[k]).collect()
}

fn inverse(a: &[usize]) -> Perm {
    let mut out = vec![0; a.len()];
    for (k, &v) in a.iter().enumerate() {
        out[v] = k;
    }
    out
}

/// `S_n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Perm> {
    let mut out = Vec::new();
    let mut p: Perm = (0..n).collect();
    loop {
        out.push(p.clone());
        // next permutation
        let Some(i) = (1..n).rev().find(|&i| p[i - 1] < p[i]) else { break };
        let j = (i..n).rev().find(|&j| p[j] > p[i - 1]).expect("p[i] qualifies");
        p.swap(i - 1, j);
        p[i..].reverse();
    }
    out
}

fn closure(n: usize, gens: &[Perm]) -> BTreeSet<Perm> {
    let mut set: BTreeSet<Perm> = BTreeSet::new();
    set.insert((0..n).collect());
    let mut frontier: Vec<Perm> = set.iter().cloned().collect();
    while let Some(p) = frontier.pop() {
        for g in gens {
            let q = compose(g, &p);
            if set.insert(q.clone()) {
                frontier.push(q);
            }
        }
    }
    set
}

/// Normal subgroups of `S_n` (`n ≤ 5`), ordered by size and then by elements.
pub fn normal_subgroups(n: usize) -> Result<Vec<Vec<Perm>>, CmpError> {
    if n > MAX_N {
        return Err(CmpError::GroupTooLarge { order: permutations(MAX_N).len(), cap: MAX_N });
    }
    let all = permutations(n);
    let mut seen: BTreeSet<(usize, Vec<Perm>)> = BTreeSet::new();
    let start: Vec<Perm> = closure(n, &[]).into_iter().collect();
    seen.insert((1, start.clone()));
    let mut queue = vec![start];
    while let Some(h) = queue.pop() {
        for x in &all {
            if h.contains(x) {
                continue;
            }
            let mut gens = h.clone();
            gens.push(x.clone());
            let k: Vec<Perm> = closure(n, &gens).into_iter().collect();
            if seen.insert((k.len(), k.clone())) {
                queue.push(k);
            }
        }
    }
    Ok(seen.into_iter().map(|(_, h)| h).filter(|h| is_normal(&all, h)).collect())
}

fn is_normal(all: &[Perm], h: &[Perm]) -> bool {
    let set: BTreeSet<&Perm> = h.iter().collect();
    all.iter().all(|s| h.iter().all(|x| set.contains(&compose(&compose(s, x), &inverse(s)))))
}

/// `φ_H` for a normal subgroup `H ≤ S_n`, on coordinates `S_n / H`.
///
/// At a point `A` the polynomial `Σ_{σ ∈ P(āb̄⁻¹)} Π_k A_{σ(k)k}` has at most one
/// nonzero term: if `A` has rank `n` with permutation `σ₀` and labels `c`,
/// the term for `σ₀`, equal to `Πc`, which occurs iff `ā = σ₀b̄`. So a unit
/// permutes cosets by left translation scaled by `Πc`, and everything of
/// smaller rank acts by `0`.
#[derive(Clone, Debug)]
pub struct PhiH {
    n: usize,
    group: PointedGroup,
    cosets: Vec<Vec<Perm>>,
    coset_of: BTreeMap<Perm, usize>,
}

impl PhiH {
    pub fn new(n: usize, group: PointedGroup, h: &[Perm]) -> Result<Self, CmpError> {
        if n == 0 || n > MAX_N {
            return Err(CmpError::BadSubset);
        }
        let all = permutations(n);
        let set: BTreeSet<Perm> = h.iter().cloned().collect();
        if set.is_empty() || set.iter().any(|p| !all.contains(p)) || closure(n, h) != set {
            return Err(CmpError::NotSubgroup);
        }
        let hv: Vec<Perm> = set.iter().cloned().collect();
        if !is_normal(&all, &hv) {
            return Err(CmpError::NotNormal);
        }
        let mut cosets: Vec<Vec<Perm>> = Vec::new();
        let mut coset_of = BTreeMap::new();
        for s in &all {
            if coset_of.contains_key(s) {
                continue;
            }
            let k = cosets.len();
            let mut c: Vec<Perm> = hv.iter().map(|x| compose(s, x)).collect();
            c.sort();
            for p in &c {
                coset_of.insert(p.clone(), k);
            }
            cosets.push(c);
        }
        Ok(PhiH { n, group, cosets, coset_of })
    }

    /// `[S_n : H]`.
    pub fn dim(&self) -> usize {
        self.cosets.len()
    }

    pub fn cosets(&self) -> &[Vec<Perm>] {
        &self.cosets
    }

    /// Index of the coset containing `p`.
    pub fn coset_of(&self, p: &[usize]) -> usize {
        self.coset_of[p]
    }

    /// The image of an arbitrary `A ∈ I_n(Ĝ)`.
    pub fn matrix(&self, a: &SubmonomialMatrix) -> SubmonomialMatrix {
        let d = self.dim();
        if a.rank() < self.n {
            return SubmonomialMatrix::zero(self.group, d, d);
        }
        let sigma: Perm = a.entries().iter().map(|e| e.expect("full rank").row()).collect();
        let scale = a.entries().iter().fold(GroupElem::ONE, |acc, e| self.group.mul(acc, e.expect("full rank").label));
        let cols =
            self.cosets.iter().map(|c| Some(Entry::new(self.coset_of[&compose(&sigma, &c[0])], scale))).collect();
        SubmonomialMatrix::from_columns(self.group, d, cols).expect("cosets are permuted")
    }

    /// `φ_H` as a representation of `I_n(Ĝ)`. Requires `gⁿ = g` on `G`,
    /// since `φ_H(gA) = gⁿ·φ_H(A)`.
    pub fn rep(&self, si: &SymmetricInverse) -> Result<Representation, CmpError> {
        if si.n() != self.n || si.monoid().group() != self.group {
            return Err(CmpError::GroupMismatch);
        }
        if self.group.elements().any(|g| self.group.pow(g, self.n) != g) {
            return Err(CmpError::ScalarTwist);
        }
        let action = (0..si.monoid().dim()).map(|b| self.matrix(si.basis_matrix(b))).collect();
        Ok(Representation::new(si.monoid().clone(), self.dim(), action)?)
    }
}

pub fn phi_h(n: usize, group: PointedGroup, h: &[Perm]) -> Result<Representation, CmpError> {
    let phi = PhiH::new(n, group, h)?;
    let si = SymmetricInverse::new(n, group)?;
    phi.rep(&si)
}
