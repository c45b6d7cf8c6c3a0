//! Ordered `Ĝ`-linear monoids: the natural partial order on `I_n(Ĝ)`, joins
//! and meets, the distributivity axioms, and representations that respect
//! joins.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::fvect::{FvectError, SubmonomialMatrix};
use crate::monoid::{GLinearMonoid, MElem, SymmetricInverse};
use crate::rep::Representation;

/// Monoids up to this size have every subset checked; larger ones only
/// subsets of at most [`SUBSET_CAP`] elements.
pub const EXHAUSTIVE_SIZE: usize = 12;
pub const SUBSET_CAP: usize = 3;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum OrderError {
    UnknownElement(String),
    /// `a ≼ b ≼ a` with `a ≠ b`.
    Cycle(String, String),
    /// The axiom number and a description of the failing instance.
    AxiomViolated(u8, String),
    MonoidMismatch,
}

impl fmt::Display for OrderError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OrderError::UnknownElement(s) => write!(f, "unknown element {s}"),
            OrderError::Cycle(a, b) => write!(f, "order has a cycle through {a} and {b}"),
            OrderError::AxiomViolated(k, w) => write!(f, "ordered-monoid axiom ({k}) fails: {w}"),
            OrderError::MonoidMismatch => f.write_str("representation is over a different monoid"),
        }
    }
}

impl core::error::Error for OrderError {}

/// `A ≤ B` iff `B` agrees with `A` wherever `A` is nonzero.
pub fn natural_leq(a: &SubmonomialMatrix, b: &SubmonomialMatrix) -> Result<bool, FvectError> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(FvectError::DimMismatch { expected: a.cols(), found: b.cols() });
    }
    Ok((0..a.cols()).all(|x| a.entry(x).is_none() || a.entry(x) == b.entry(x)))
}

/// The union of compatible partial maps, if it is again row-injective.
/// `None` for the empty set or when no upper bound exists.
pub fn join(set: &[SubmonomialMatrix]) -> Option<SubmonomialMatrix> {
    let first = set.first()?;
    let mut cols = vec![None; first.cols()];
    for a in set {
        if a.rows() != first.rows() || a.cols() != first.cols() {
            return None;
        }
        for (x, slot) in cols.iter_mut().enumerate() {
            match (*slot, a.entry(x)) {
                (_, None) => {}
                (None, e) => *slot = e,
                (Some(s), Some(e)) if s != e => return None,
                _ => {}
            }
        }
    }
    SubmonomialMatrix::from_columns(first.group(), first.rows(), cols).ok()
}

/// Columns on which every member agrees. `None` for the empty set.
pub fn meet(set: &[SubmonomialMatrix]) -> Option<SubmonomialMatrix> {
    let first = set.first()?;
    let cols = (0..first.cols())
        .map(|x| {
            let e = first.entry(x);
            set.iter().all(|a| a.cols() == first.cols() && a.entry(x) == e).then_some(e).flatten()
        })
        .collect();
    SubmonomialMatrix::from_columns(first.group(), first.rows(), cols).ok()
}

/// A monoid with a partial order on its elements, indexed as in
/// [`GLinearMonoid::elements`].
#[derive(Clone, Debug)]
pub struct OrderedMonoid {
    monoid: GLinearMonoid,
    /// `up[i]`: elements `j` with `i ≼ j`.
    up: Vec<BitSet>,
    /// Joins are determined by pairs.
    pairwise: bool,
}

impl OrderedMonoid {
    /// `(I_n(Ĝ), ≤)` with the natural order.
    pub fn natural(si: &SymmetricInverse) -> Self {
        let m = si.monoid().clone();
        let els = m.elements();
        let mats: Vec<SubmonomialMatrix> = els.iter().map(|&x| si.matrix_of(x)).collect();
        let up = mats
            .iter()
            .map(|a| {
                BitSet::from_indices(mats.len(), (0..mats.len()).filter(|&j| natural_leq(a, &mats[j]).expect("square")))
            })
            .collect();
        OrderedMonoid { monoid: m, up, pairwise: true }
    }

    /// `0` below everything, all other elements incomparable.
    pub fn flat(monoid: GLinearMonoid) -> Self {
        let n = monoid.size();
        let up = (0..n).map(|i| if i == 0 { BitSet::full(n) } else { BitSet::from_indices(n, [i]) }).collect();
        OrderedMonoid { monoid, up, pairwise: false }
    }

    /// The reflexive-transitive closure of `pairs`, read as `a ≼ b`.
    pub fn from_pairs(monoid: GLinearMonoid, pairs: &[(MElem, MElem)]) -> Result<Self, OrderError> {
        let n = monoid.size();
        let mut up: Vec<BitSet> = (0..n).map(|i| BitSet::from_indices(n, [i])).collect();
        for &(a, b) in pairs {
            let (a, b) = (monoid.element_index(a), monoid.element_index(b));
            up[a].insert(b);
        }
        // Warshall
        for k in 0..n {
            for i in 0..n {
                if up[i].contains(k) {
                    let via = up[k].clone();
                    up[i].union_with(&via);
                }
            }
        }
        let els = monoid.elements();
        for i in 0..n {
            for j in (i + 1)..n {
                if up[i].contains(j) && up[j].contains(i) {
                    return Err(OrderError::Cycle(monoid.display(els[i]), monoid.display(els[j])));
                }
            }
        }
        Ok(OrderedMonoid { monoid, up, pairwise: false })
    }

    pub fn monoid(&self) -> &GLinearMonoid {
        &self.monoid
    }

    pub fn leq(&self, a: MElem, b: MElem) -> bool {
        self.up[self.monoid.element_index(a)].contains(self.monoid.element_index(b))
    }

    /// Pairs `(a, b)` with `a ≼ b`, `a ≠ b`, in element order.
    pub fn strict_pairs(&self) -> Vec<(MElem, MElem)> {
        let els = self.monoid.elements();
        let mut out = Vec::new();
        for (i, u) in self.up.iter().enumerate() {
            for j in u.iter().filter(|&j| j != i) {
                out.push((els[i], els[j]));
            }
        }
        out
    }

    fn bound(&self, set: &[usize], upper: bool) -> Option<usize> {
        let n = self.up.len();
        let related = |i: usize, j: usize| if upper { self.up[i].contains(j) } else { self.up[j].contains(i) };
        let bounds: Vec<usize> = (0..n).filter(|&b| set.iter().all(|&a| related(a, b))).collect();
        bounds.iter().copied().find(|&u| bounds.iter().all(|&b| related(u, b)))
    }

    pub fn join_of(&self, set: &[MElem]) -> Option<MElem> {
        let idx: Vec<usize> = set.iter().map(|&x| self.monoid.element_index(x)).collect();
        self.bound(&idx, true).map(|i| self.monoid.elements()[i])
    }

    pub fn meet_of(&self, set: &[MElem]) -> Option<MElem> {
        let idx: Vec<usize> = set.iter().map(|&x| self.monoid.element_index(x)).collect();
        self.bound(&idx, false).map(|i| self.monoid.elements()[i])
    }

    /// Subsets whose joins and meets are checked, and whether that covers
    /// every subset the axioms quantify over.
    fn subsets(&self) -> (Vec<Vec<usize>>, bool) {
        let n = self.up.len();
        if n <= EXHAUSTIVE_SIZE {
            let all = (0u32..1 << n)
                .map(|mask| (0..n).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
                .filter(|s| s.len() >= 2)
                .collect();
            return (all, true);
        }
        let max = if self.pairwise { 2 } else { SUBSET_CAP };
        let mut out = Vec::new();
        let mut cur = Vec::new();
        fn rec(n: usize, start: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
            if cur.len() >= 2 {
                out.push(cur.clone());
            }
            if cur.len() == max {
                return;
            }
            for i in start..n {
                cur.push(i);
                rec(n, i + 1, max, cur, out);
                cur.pop();
            }
        }
        rec(n, 0, max, &mut cur, &mut out);
        (out, self.pairwise)
    }

    /// Checks that `0` is the least element and that multiplication on
    /// either side distributes over every existing join and meet.
    pub fn validate(&self) -> Result<Verdict, OrderError> {
        let m = &self.monoid;
        let els = m.elements();
        if self.up[0].count() != els.len() {
            let x = (0..els.len()).find(|&j| !self.up[0].contains(j)).expect("some element is missing");
            return Err(OrderError::AxiomViolated(1, alloc::format!("0 is not below {}", m.display(els[x]))));
        }
        let (subsets, complete) = self.subsets();
        for s in &subsets {
            let set: Vec<MElem> = s.iter().map(|&i| els[i]).collect();
            for (axiom, upper) in [(2u8, true), (3u8, false)] {
                let Some(u) = self.bound(s, upper) else { continue };
                let u = els[u];
                for &x in &els {
                    for left in [true, false] {
                        let prod = |a: MElem| if left { m.mul(x, a) } else { m.mul(a, x) };
                        let image: Vec<usize> = set.iter().map(|&a| m.element_index(prod(a))).collect();
                        let want = self.bound(&image, upper).map(|i| els[i]);
                        if want != Some(prod(u)) {
                            let names: Vec<String> = set.iter().map(|&a| m.display(a)).collect();
                            return Err(OrderError::AxiomViolated(
                                axiom,
                                alloc::format!(
                                    "x = {}, I = {{{}}}, {} side",
                                    m.display(x),
                                    names.join(", "),
                                    if left { "left" } else { "right" }
                                ),
                            ));
                        }
                    }
                }
            }
        }
        Ok(Verdict { checked: subsets.len(), complete })
    }

    /// Complete systems of orthogonal idempotents, without the element `0`.
    pub fn complete_orthogonal_systems(&self) -> Vec<Vec<MElem>> {
        let m = &self.monoid;
        let els = m.elements();
        let one = m.element_index(Some(m.one_elem()));
        let cands: Vec<usize> = (1..els.len()).filter(|&i| self.up[i].contains(one)).collect();
        let mut out = Vec::new();
        let mut cur: Vec<usize> = Vec::new();
        self.orthogonal(&cands, 0, &mut cur, one, &mut out);
        out.into_iter().map(|s| s.into_iter().map(|i| els[i]).collect()).collect()
    }

    fn orthogonal(&self, cands: &[usize], start: usize, cur: &mut Vec<usize>, one: usize, out: &mut Vec<Vec<usize>>) {
        let m = &self.monoid;
        let els = m.elements();
        if !cur.is_empty() && self.bound(cur, true) == Some(one) {
            out.push(cur.clone());
        }
        for k in start..cands.len() {
            let e = els[cands[k]];
            if cur.iter().all(|&f| m.mul(e, els[f]).is_none() && m.mul(els[f], e).is_none()) {
                cur.push(cands[k]);
                self.orthogonal(cands, k + 1, cur, one, out);
                cur.pop();
            }
        }
    }

    /// Whether `V(⋁I) = ⋁ V(a)` for every subset `I` with a join.
    pub fn respects_joins(&self, v: &Representation) -> Result<JoinCheck, OrderError> {
        if *v.monoid() != self.monoid {
            return Err(OrderError::MonoidMismatch);
        }
        let els = self.monoid.elements();
        let (subsets, complete) = self.subsets();
        for s in &subsets {
            let Some(u) = self.bound(s, true) else { continue };
            let mats: Vec<SubmonomialMatrix> = s.iter().map(|&i| v.act(els[i])).collect();
            if join(&mats).as_ref() != Some(&v.act(els[u])) {
                let witness = s.iter().map(|&i| els[i]).collect();
                return Ok(JoinCheck { respects: false, complete, witness: Some(witness) });
            }
        }
        Ok(JoinCheck { respects: true, complete, witness: None })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub checked: usize,
    /// Every subset the axioms quantify over was checked.
    pub complete: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct JoinCheck {
    pub respects: bool,
    pub complete: bool,
    pub witness: Option<Vec<MElem>>,
}
