//! Finite `Ĝ`-linear monoids stored as a multiplication table on `G`-orbit
//! representatives.
//!
//! A nonzero element is a pair `g·b` with `g ∈ G` and `b` a basis index, and
//! `(g₁b₁)(g₂b₂) = g₁g₂·(b₁b₂)`. Centrality and freeness of `G` therefore
//! hold by construction; validation only has to check the identity and
//! associativity.

mod families;
mod green;
mod subgroup;

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use families::{
    null_monoid, path_monoid, symmetric_inverse_monoid, Arrow, Quiver, Relation, RelationRhs, SymmetricInverse,
};
pub use green::{JClass, JClassReport, PrincipalFactor, Side};
pub use subgroup::MaximalSubgroup;

use crate::group::{GroupElem, PointedGroup};

/// A nonzero element `g·b`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Elem {
    pub g: GroupElem,
    pub b: usize,
}

impl Elem {
    pub fn basis(b: usize) -> Self {
        Elem { g: GroupElem::ONE, b }
    }
}

/// An element of the monoid; `None` is zero.
pub type MElem = Option<Elem>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonoidError {
    EmptyBasis,
    DuplicateName(String),
    UnknownName(String),
    BadIndex(usize),
    BadLabel,
    IncompleteTable {
        l: String,
        r: String,
    },
    NoIdentity,
    NotAssociative([String; 3]),
    CyclicQuiver,
    BadRelation(String),
    RelationInconsistent([String; 3]),
    TooLarge,
    ZeroElement,
    NotIdempotent,
    NotInverse,
    /// The product of these two is outside the proposed submonoid.
    NotClosed(String, String),
}

impl fmt::Display for MonoidError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MonoidError::EmptyBasis => f.write_str("monoid has no nonzero basis element"),
            MonoidError::DuplicateName(n) => write!(f, "basis name {n:?} used twice"),
            MonoidError::UnknownName(n) => write!(f, "unknown basis name {n:?}"),
            MonoidError::BadIndex(i) => write!(f, "basis index {i} out of range"),
            MonoidError::BadLabel => f.write_str("group label outside the group"),
            MonoidError::IncompleteTable { l, r } => write!(f, "no product given for {l}·{r}"),
            MonoidError::NoIdentity => f.write_str("the marked identity is not a two-sided identity"),
            MonoidError::NotAssociative([a, b, c]) => write!(f, "({a}·{b})·{c} ≠ {a}·({b}·{c})"),
            MonoidError::CyclicQuiver => {
                f.write_str("quiver has an oriented cycle and the relations do not make it finite")
            }
            MonoidError::BadRelation(why) => write!(f, "bad relation: {why}"),
            MonoidError::RelationInconsistent([a, b, c]) => {
                write!(f, "relations are not associative: ({a}·{b})·{c} ≠ {a}·({b}·{c})")
            }
            MonoidError::TooLarge => f.write_str("monoid exceeds the size cap"),
            MonoidError::ZeroElement => f.write_str("operation needs a nonzero element"),
            MonoidError::NotIdempotent => f.write_str("element is not a nonzero idempotent"),
            MonoidError::NotInverse => f.write_str("monoid is not an inverse monoid"),
            MonoidError::NotClosed(l, r) => write!(f, "{l}·{r} leaves the submonoid"),
        }
    }
}

impl core::error::Error for MonoidError {}

#[derive(PartialEq, Eq, Hash)]
struct Inner {
    group: PointedGroup,
    names: Vec<String>,
    one: usize,
    table: Vec<MElem>,
}

/// A validated finite `Ĝ`-linear monoid. Cloning is cheap.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GLinearMonoid(Arc<Inner>);

impl fmt::Debug for GLinearMonoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GLinearMonoid").field("group", &self.0.group).field("basis", &self.0.names).finish()
    }
}

impl GLinearMonoid {
    pub fn group(&self) -> PointedGroup {
        self.0.group
    }

    /// Number of basis elements (the dimension as a `Ĝ`-space).
    pub fn dim(&self) -> usize {
        self.0.names.len()
    }

    /// Number of elements, zero included.
    pub fn size(&self) -> usize {
        1 + self.dim() * self.group().order()
    }

    pub fn names(&self) -> &[String] {
        &self.0.names
    }

    pub fn name(&self, b: usize) -> &str {
        &self.0.names[b]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.0.names.iter().position(|n| n == name)
    }

    pub fn one(&self) -> usize {
        self.0.one
    }

    pub fn one_elem(&self) -> Elem {
        Elem::basis(self.0.one)
    }

    /// Product of two basis elements.
    #[inline]
    pub fn product(&self, l: usize, r: usize) -> MElem {
        self.0.table[l * self.dim() + r]
    }

    #[inline]
    pub fn mul(&self, x: MElem, y: MElem) -> MElem {
        let (x, y) = (x?, y?);
        let p = self.product(x.b, y.b)?;
        let group = self.group();
        Some(Elem { g: group.mul(group.mul(x.g, y.g), p.g), b: p.b })
    }

    pub fn mul3(&self, x: MElem, y: MElem, z: MElem) -> MElem {
        self.mul(self.mul(x, y), z)
    }

    pub fn scale(&self, g: GroupElem, x: MElem) -> MElem {
        x.map(|x| Elem { g: self.group().mul(g, x.g), b: x.b })
    }

    /// Zero first, then `g·b` with `b` major and `g` minor.
    pub fn elements(&self) -> Vec<MElem> {
        let mut out = Vec::with_capacity(self.size());
        out.push(None);
        for b in 0..self.dim() {
            for g in self.group().elements() {
                out.push(Some(Elem { g, b }));
            }
        }
        out
    }

    /// Position of `x` in [`elements`](Self::elements).
    pub fn element_index(&self, x: MElem) -> usize {
        match x {
            None => 0,
            Some(e) => 1 + e.b * self.group().order() + e.g.0 as usize,
        }
    }

    pub fn display(&self, x: MElem) -> String {
        use core::fmt::Write;
        match x {
            None => String::from("0"),
            Some(e) if e.g.is_one() => self.name(e.b).into(),
            Some(e) => {
                let mut s = String::new();
                let _ = write!(s, "{:?}·{}", self.group().residues(e.g), self.name(e.b));
                s
            }
        }
    }

    /// The monoid with the order of multiplication reversed.
    pub fn opposite(&self) -> GLinearMonoid {
        let n = self.dim();
        let mut table = vec![None; n * n];
        for l in 0..n {
            for r in 0..n {
                table[r * n + l] = self.product(l, r);
            }
        }
        GLinearMonoid(Arc::new(Inner { group: self.group(), names: self.0.names.clone(), one: self.one(), table }))
    }

    /// The submonoid spanned by the orbits `basis` (sorted, containing `1`),
    /// with basis element `i` standing for `basis[i]`.
    pub fn submonoid(&self, basis: &[usize]) -> Result<GLinearMonoid, MonoidError> {
        if basis.windows(2).any(|w| w[0] >= w[1]) || basis.iter().any(|&b| b >= self.dim()) {
            return Err(MonoidError::BadIndex(basis.iter().copied().max().unwrap_or(0)));
        }
        let one = basis.iter().position(|&b| b == self.one()).ok_or(MonoidError::NoIdentity)?;
        let k = basis.len();
        let mut table = vec![None; k * k];
        for (i, &l) in basis.iter().enumerate() {
            for (j, &r) in basis.iter().enumerate() {
                table[i * k + j] = match self.product(l, r) {
                    None => None,
                    Some(p) => {
                        let b = basis
                            .iter()
                            .position(|&x| x == p.b)
                            .ok_or_else(|| MonoidError::NotClosed(self.name(l).into(), self.name(r).into()))?;
                        Some(Elem { g: p.g, b })
                    }
                };
            }
        }
        let names = basis.iter().map(|&b| self.0.names[b].clone()).collect();
        Ok(GLinearMonoid(Arc::new(Inner { group: self.group(), names, one, table })))
    }

    /// Re-labels the table over another group of scalars, keeping basis and
    /// products; only valid when every product label is `1`.
    pub fn scalar_extend(&self, group: PointedGroup) -> Option<GLinearMonoid> {
        if self.0.table.iter().flatten().any(|e| !e.g.is_one()) {
            return None;
        }
        Some(GLinearMonoid(Arc::new(Inner {
            group,
            names: self.0.names.clone(),
            one: self.one(),
            table: self.0.table.clone(),
        })))
    }
}

/// Collects a multiplication table and validates it.
#[derive(Clone, Debug)]
pub struct MonoidBuilder {
    group: PointedGroup,
    names: Vec<String>,
    one: usize,
    table: Vec<Option<MElem>>,
}

impl MonoidBuilder {
    pub fn new(group: PointedGroup, names: Vec<String>, one: &str) -> Result<Self, MonoidError> {
        if names.is_empty() {
            return Err(MonoidError::EmptyBasis);
        }
        let mut seen = BTreeMap::new();
        for (i, n) in names.iter().enumerate() {
            if seen.insert(n.as_str(), i).is_some() {
                return Err(MonoidError::DuplicateName(n.clone()));
            }
        }
        let one = *seen.get(one).ok_or_else(|| MonoidError::UnknownName(one.into()))?;
        let n = names.len();
        Ok(MonoidBuilder { group, names, one, table: vec![None; n * n] })
    }

    pub fn dim(&self) -> usize {
        self.names.len()
    }

    pub fn index_of(&self, name: &str) -> Result<usize, MonoidError> {
        self.names.iter().position(|n| n == name).ok_or_else(|| MonoidError::UnknownName(name.into()))
    }

    /// Records `l·r = product`. A later call for the same pair overwrites.
    pub fn set(&mut self, l: usize, r: usize, product: MElem) -> Result<(), MonoidError> {
        let n = self.dim();
        for i in [l, r].into_iter().chain(product.map(|p| p.b)) {
            if i >= n {
                return Err(MonoidError::BadIndex(i));
            }
        }
        if product.is_some_and(|p| !self.group.contains(p.g)) {
            return Err(MonoidError::BadLabel);
        }
        self.table[l * n + r] = Some(product);
        Ok(())
    }

    pub fn is_set(&self, l: usize, r: usize) -> bool {
        self.table[l * self.dim() + r].is_some()
    }

    pub fn build(self) -> Result<GLinearMonoid, MonoidError> {
        let n = self.dim();
        let mut table = Vec::with_capacity(n * n);
        for (k, entry) in self.table.iter().enumerate() {
            match entry {
                Some(p) => table.push(*p),
                None => {
                    return Err(MonoidError::IncompleteTable {
                        l: self.names[k / n].clone(),
                        r: self.names[k % n].clone(),
                    })
                }
            }
        }
        let m = GLinearMonoid(Arc::new(Inner { group: self.group, names: self.names, one: self.one, table }));
        validate(&m)?;
        Ok(m)
    }
}

fn validate(m: &GLinearMonoid) -> Result<(), MonoidError> {
    let n = m.dim();
    let one = m.one();
    for b in 0..n {
        let id = Some(Elem::basis(b));
        if m.product(one, b) != id || m.product(b, one) != id {
            return Err(MonoidError::NoIdentity);
        }
    }
    // G is central, so basis triples suffice
    for a in 0..n {
        for b in 0..n {
            let ab = m.product(a, b);
            for c in 0..n {
                let left = m.mul(ab, Some(Elem::basis(c)));
                let right = m.mul(Some(Elem::basis(a)), m.product(b, c));
                if left != right {
                    return Err(MonoidError::NotAssociative([m.name(a).into(), m.name(b).into(), m.name(c).into()]));
                }
            }
        }
    }
    Ok(())
}
