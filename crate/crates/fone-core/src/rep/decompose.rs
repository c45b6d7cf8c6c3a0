use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::{RepError, Representation};
use crate::bitset::BitSet;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::group::GroupElem;

/// Complete isomorphism invariant of a representation.
///
/// A connected representation (one whose action graph is connected) is
/// relabelled by a breadth-first walk from a start coordinate, giving every
/// tree edge label `1`; the key is the least resulting action table over all
/// start coordinates. Since `G` is abelian and central, the start scalar does
/// not matter. A disconnected representation is keyed by the sorted list of
/// its components' keys.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct IsoKey {
    pub dim: usize,
    pub parts: Vec<Vec<u32>>,
}

impl IsoKey {
    /// A short digest for display; equality should use the key itself.
    pub fn digest(&self) -> u64 {
        // FNV-1a
        let mut h: u64 = 0xcbf2_9ce4_8422_2325;
        let mut eat = |x: u32| {
            for byte in x.to_le_bytes() {
                h ^= u64::from(byte);
                h = h.wrapping_mul(0x100_0000_01b3);
            }
        };
        eat(self.dim as u32);
        for p in &self.parts {
            eat(u32::MAX);
            p.iter().copied().for_each(&mut eat);
        }
        h
    }
}

impl fmt::Display for IsoKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "d{}-{:016x}", self.dim, self.digest())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Summand {
    pub coords: Vec<usize>,
    pub key: IsoKey,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub summands: Vec<Summand>,
}

impl Decomposition {
    /// Iso keys of the summands, sorted.
    pub fn keys(&self) -> Vec<IsoKey> {
        let mut k: Vec<IsoKey> = self.summands.iter().map(|s| s.key.clone()).collect();
        k.sort();
        k
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TieBreak {
    First,
    Last,
}

/// `0 = V₀ < V₁ < … < V_n = V` with simple successive quotients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CompositionSeries {
    pub chain: Vec<BitSet>,
    pub factors: Vec<IsoKey>,
}

impl CompositionSeries {
    pub fn factor_keys(&self) -> Vec<IsoKey> {
        let mut k = self.factors.clone();
        k.sort();
        k
    }
}

struct Canonical {
    code: Vec<u32>,
    order: Vec<usize>,
    labels: Vec<GroupElem>,
}

/// Relabelling of a connected representation by a walk from `start`.
fn canonical_from(rep: &Representation, preimages: &[Vec<Option<(usize, GroupElem)>>], start: usize) -> Canonical {
    let d = rep.dim();
    let group = rep.monoid().group();
    let mut index: Vec<Option<usize>> = vec![None; d];
    let mut labels = vec![GroupElem::ONE; d];
    let mut order = vec![start];
    index[start] = Some(0);
    let mut next = 0;
    while next < order.len() {
        let u = order[next];
        next += 1;
        for (b, a) in rep.actions().iter().enumerate() {
            if let Some(e) = a.entry(u) {
                let v = e.row();
                if index[v].is_none() {
                    index[v] = Some(order.len());
                    order.push(v);
                    labels[v] = group.mul(labels[u], e.label);
                }
            }
            if let Some((w, g)) = preimages[b][u] {
                if index[w].is_none() {
                    index[w] = Some(order.len());
                    order.push(w);
                    labels[w] = group.div(labels[u], g);
                }
            }
        }
    }
    debug_assert_eq!(order.len(), d, "canonical_from needs a connected representation");
    let mut code = Vec::with_capacity(2 * d * rep.actions().len());
    for a in rep.actions() {
        for &u in &order {
            match a.entry(u) {
                None => code.extend([0, 0]),
                Some(e) => {
                    let v = e.row();
                    let label = group.div(group.mul(labels[u], e.label), labels[v]);
                    code.extend([index[v].expect("connected") as u32 + 1, label.0]);
                }
            }
        }
    }
    let labels = order.iter().map(|&u| labels[u]).collect();
    Canonical { code, order, labels }
}

fn preimages(rep: &Representation) -> Vec<Vec<Option<(usize, GroupElem)>>> {
    rep.actions()
        .iter()
        .map(|a| {
            let mut pre = vec![None; rep.dim()];
            for (c, e) in a.entries().iter().enumerate() {
                if let Some(e) = e {
                    pre[e.row()] = Some((c, e.label));
                }
            }
            pre
        })
        .collect()
}

/// Least canonical code over all starts, with the first start achieving it.
fn min_canonical(rep: &Representation) -> Canonical {
    let pre = preimages(rep);
    let mut best: Option<Canonical> = None;
    for s in 0..rep.dim() {
        let c = canonical_from(rep, &pre, s);
        if best.as_ref().is_none_or(|b| c.code < b.code) {
            best = Some(c);
        }
    }
    best.expect("nonzero dimension")
}

impl Representation {
    /// Connected components of the (undirected) action graph, each sorted,
    /// listed by least coordinate.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let d = self.dim();
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); d];
        for a in self.actions() {
            for (c, e) in a.entries().iter().enumerate() {
                if let Some(e) = e {
                    adj[c].push(e.row());
                    adj[e.row()].push(c);
                }
            }
        }
        let mut seen = vec![false; d];
        let mut out = Vec::new();
        for s in 0..d {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut i = 0;
            while i < comp.len() {
                for &n in &adj[comp[i]] {
                    if !seen[n] {
                        seen[n] = true;
                        comp.push(n);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Nonzero and not a direct sum of two nonzero subrepresentations.
    pub fn is_indecomposable(&self) -> bool {
        self.dim() > 0 && self.components().len() == 1
    }

    fn restrict_to(&self, coords: &[usize]) -> Representation {
        self.subrep(&BitSet::from_indices(self.dim(), coords.iter().copied())).expect("components are closed")
    }

    pub fn iso_key(&self) -> IsoKey {
        let mut parts: Vec<Vec<u32>> =
            self.components().iter().map(|c| min_canonical(&self.restrict_to(c)).code).collect();
        parts.sort();
        IsoKey { dim: self.dim(), parts }
    }

    /// Splits into indecomposable summands; these are the connected
    /// components, so the decomposition is unique as a coordinate partition.
    pub fn krull_schmidt(&self) -> Decomposition {
        let summands = self
            .components()
            .into_iter()
            .map(|coords| {
                let key = self.restrict_to(&coords).iso_key();
                Summand { coords, key }
            })
            .collect();
        Decomposition { summands }
    }

    /// A maximal chain built by repeatedly adding a smallest subrepresentation
    /// generated (modulo the current step) by a single coordinate. `tie`
    /// picks the first or last such coordinate.
    pub fn jordan_holder(&self, tie: TieBreak) -> CompositionSeries {
        let d = self.dim();
        let succ = self.successors();
        let mut current = BitSet::new(d);
        let mut chain = vec![current.clone()];
        let mut factors = Vec::new();
        while current.count() < d {
            let mut best: Option<BitSet> = None;
            for c in 0..d {
                if current.contains(c) {
                    continue;
                }
                let mut gen = BitSet::new(d);
                gen.insert(c);
                let mut stack = vec![c];
                while let Some(x) = stack.pop() {
                    for n in succ[x].iter() {
                        if !current.contains(n) && gen.insert(n) {
                            stack.push(n);
                        }
                    }
                }
                let better = match &best {
                    None => true,
                    Some(b) => match tie {
                        TieBreak::First => gen.count() < b.count(),
                        TieBreak::Last => gen.count() <= b.count(),
                    },
                };
                if better {
                    best = Some(gen);
                }
            }
            let step = best.expect("a coordinate remains");
            let mut next = current.clone();
            next.union_with(&step);
            let factor = self.subrep(&next).expect("closed").quotient_coords(&current, &next);
            factors.push(factor.iso_key());
            current = next;
            chain.push(current.clone());
        }
        CompositionSeries { chain, factors }
    }

    /// `next / current` for closed `current ⊆ next`.
    fn quotient_coords(&self, current: &BitSet, next: &BitSet) -> Representation {
        // `self` is already the subrep on `next`; translate `current` into its coordinates
        let coords = next.to_vec();
        let inner = BitSet::from_indices(coords.len(), (0..coords.len()).filter(|&i| current.contains(coords[i])));
        self.quotient(&inner).expect("closed")
    }

    /// An invertible intertwiner `P` with `P ρ_V(b) = ρ_W(b) P`, if one exists.
    pub fn are_isomorphic(&self, other: &Representation) -> Result<Option<SubmonomialMatrix>, RepError> {
        if self.monoid() != other.monoid() {
            return Err(RepError::MonoidMismatch);
        }
        if self.dim() != other.dim() {
            return Ok(None);
        }
        let group = self.monoid().group();
        let canon = |rep: &Representation| -> Vec<(Vec<usize>, Canonical)> {
            rep.components()
                .into_iter()
                .map(|c| {
                    let can = min_canonical(&rep.restrict_to(&c));
                    (c, can)
                })
                .collect()
        };
        let left = canon(self);
        let mut right: Vec<Option<(Vec<usize>, Canonical)>> = canon(other).into_iter().map(Some).collect();
        if left.len() != right.len() {
            return Ok(None);
        }
        let mut cols = vec![None; self.dim()];
        for (lc, lcan) in &left {
            let Some(slot) = right.iter_mut().find(|r| r.as_ref().is_some_and(|(_, rc)| rc.code == lcan.code)) else {
                return Ok(None);
            };
            let (rc, rcan) = slot.take().expect("matched");
            for k in 0..lc.len() {
                let from = lc[lcan.order[k]];
                let to = rc[rcan.order[k]];
                cols[from] = Some(Entry::new(to, group.div(rcan.labels[k], lcan.labels[k])));
            }
        }
        let p = SubmonomialMatrix::from_columns(group, self.dim(), cols).expect("bijection");
        debug_assert!(self
            .actions()
            .iter()
            .zip(other.actions())
            .all(|(a, b)| p.compose_unchecked(a) == b.compose_unchecked(&p)));
        Ok(Some(p))
    }
}
