//! `Ĝ`-linear representations of a [`GLinearMonoid`].
//!
//! A representation stores one `d × d` submonomial matrix per basis element;
//! scalars act implicitly. Because every matrix is monomial, subrepresentations
//! are exactly the action-closed sets of coordinates.

mod decompose;
mod endo;
mod enumerate;
mod wp;

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

pub use decompose::{CompositionSeries, Decomposition, IsoKey, Summand, TieBreak};
pub use enumerate::{generators, representations, representations_up_to, ENUM_DIM_CAP};
pub use wp::wagner_preston;

use crate::bitset::BitSet;
use crate::fvect::{Entry, SubmonomialMatrix};
use crate::group::GroupElem;
use crate::monoid::{GLinearMonoid, MElem, PrincipalFactor, Side, SymmetricInverse};

/// Default cap on the dimension for [`Representation::all_subreps`].
pub const SUBREP_CAP: usize = 16;

/// Default cap on the dimension for [`Representation::endomorphisms`].
pub const ENDO_CAP: usize = 6;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RepError {
    WrongActionCount { expected: usize, found: usize },
    BadMatrix { basis: String },
    BadIdentity,
    NotFunctorial(String, String),
    DimTooLarge { dim: usize, cap: usize },
    MonoidMismatch,
    NotClosed,
    NotLinear { basis: String },
    NotInverse,
}

impl fmt::Display for RepError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RepError::WrongActionCount { expected, found } => {
                write!(f, "expected an action for {expected} basis elements, found {found}")
            }
            RepError::BadMatrix { basis } => write!(f, "matrix for {basis} has the wrong shape or group"),
            RepError::BadIdentity => f.write_str("the identity does not act as the identity matrix"),
            RepError::NotFunctorial(a, b) => write!(f, "ρ({a})ρ({b}) ≠ ρ({a}·{b})"),
            RepError::DimTooLarge { dim, cap } => write!(f, "dimension {dim} exceeds the cap {cap}"),
            RepError::MonoidMismatch => f.write_str("representations are over different monoids"),
            RepError::NotClosed => f.write_str("coordinate set is not closed under the action"),
            RepError::NotLinear { basis } => write!(f, "translation by {basis} is not linear"),
            RepError::NotInverse => f.write_str("monoid is not an inverse monoid"),
        }
    }
}

impl core::error::Error for RepError {}

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Representation {
    monoid: GLinearMonoid,
    dim: usize,
    action: Vec<SubmonomialMatrix>,
}

impl fmt::Debug for Representation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut m = f.debug_map();
        for (b, a) in self.action.iter().enumerate() {
            m.entry(&self.monoid.name(b), a);
        }
        m.finish()
    }
}

impl Representation {
    /// Checks shapes, `ρ(1) = I` and `ρ(b₁)ρ(b₂) = ρ(b₁b₂)` on all basis pairs.
    pub fn new(monoid: GLinearMonoid, dim: usize, action: Vec<SubmonomialMatrix>) -> Result<Self, RepError> {
        if action.len() != monoid.dim() {
            return Err(RepError::WrongActionCount { expected: monoid.dim(), found: action.len() });
        }
        for (b, a) in action.iter().enumerate() {
            if a.rows() != dim || a.cols() != dim || a.group() != monoid.group() {
                return Err(RepError::BadMatrix { basis: monoid.name(b).into() });
            }
        }
        let rep = Representation { monoid, dim, action };
        rep.check()?;
        Ok(rep)
    }

    pub(crate) fn new_unchecked(monoid: GLinearMonoid, dim: usize, action: Vec<SubmonomialMatrix>) -> Self {
        let rep = Representation { monoid, dim, action };
        debug_assert_eq!(rep.check(), Ok(()));
        rep
    }

    fn check(&self) -> Result<(), RepError> {
        let m = &self.monoid;
        if self.action[m.one()] != SubmonomialMatrix::identity(m.group(), self.dim) {
            return Err(RepError::BadIdentity);
        }
        for l in 0..m.dim() {
            for r in 0..m.dim() {
                if self.action[l].compose_unchecked(&self.action[r]) != self.act(m.product(l, r)) {
                    return Err(RepError::NotFunctorial(m.name(l).into(), m.name(r).into()));
                }
            }
        }
        Ok(())
    }

    pub fn zero(monoid: GLinearMonoid) -> Self {
        let g = monoid.group();
        let action = vec![SubmonomialMatrix::zero(g, 0, 0); monoid.dim()];
        Representation { monoid, dim: 0, action }
    }

    /// One-dimensional representation where `b` acts by `1` if `acts(b)` and
    /// by `0` otherwise.
    pub fn trivial_on(monoid: GLinearMonoid, acts: impl Fn(usize) -> bool) -> Result<Self, RepError> {
        let g = monoid.group();
        let action = (0..monoid.dim())
            .map(|b| if acts(b) { SubmonomialMatrix::identity(g, 1) } else { SubmonomialMatrix::zero(g, 1, 1) })
            .collect();
        Representation::new(monoid, 1, action)
    }

    /// Translation action of the monoid on the orbits `carrier`, with
    /// products leaving `carrier` sent to zero.
    pub fn translation(monoid: GLinearMonoid, carrier: &[usize], side: Side) -> Result<Self, RepError> {
        let pf = PrincipalFactor { monoid: monoid.clone(), class: usize::MAX, carrier: carrier.into(), null: false };
        let action = (0..monoid.dim())
            .map(|x| pf.translation(side, x).ok_or_else(|| RepError::NotLinear { basis: monoid.name(x).into() }))
            .collect::<Result<Vec<_>, _>>()?;
        let m = match side {
            Side::Left => monoid,
            Side::Right => monoid.opposite(),
        };
        Representation::new(m, carrier.len(), action)
    }

    /// The translation representation on `P(e)` (left) or on `P(e)` as a
    /// representation of the opposite monoid (right).
    pub fn from_principal_factor(monoid: &GLinearMonoid, e: MElem, side: Side) -> Result<Self, RepError> {
        let pf = monoid.principal_factor(e).map_err(|_| RepError::NotClosed)?;
        Representation::translation(monoid.clone(), &pf.carrier, side)
    }

    pub fn monoid(&self) -> &GLinearMonoid {
        &self.monoid
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn action(&self, b: usize) -> &SubmonomialMatrix {
        &self.action[b]
    }

    pub fn actions(&self) -> &[SubmonomialMatrix] {
        &self.action
    }

    /// `ρ(x)` for any element, scalars included.
    pub fn act(&self, x: MElem) -> SubmonomialMatrix {
        match x {
            None => SubmonomialMatrix::zero(self.monoid.group(), self.dim, self.dim),
            Some(e) => self.action[e.b].scaled(e.g),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn direct_sum(&self, other: &Representation) -> Result<Representation, RepError> {
        if self.monoid != other.monoid {
            return Err(RepError::MonoidMismatch);
        }
        let action = self.action.iter().zip(&other.action).map(|(a, b)| a.direct_sum(b).expect("same group")).collect();
        Ok(Representation::new_unchecked(self.monoid.clone(), self.dim + other.dim, action))
    }

    /// The representation `P⁻¹ρP` for an invertible monomial `P`.
    pub fn change_basis(&self, p: &SubmonomialMatrix) -> Representation {
        assert!(p.is_invertible() && p.rows() == self.dim);
        let action = self.action.iter().map(|a| a.conjugate(p)).collect();
        Representation::new_unchecked(self.monoid.clone(), self.dim, action)
    }

    /// Coordinates reachable from `c` in one step, as a bitmask over `[d]`.
    fn successors(&self) -> Vec<BitSet> {
        let mut out = vec![BitSet::new(self.dim); self.dim];
        for a in &self.action {
            for (c, e) in a.entries().iter().enumerate() {
                if let Some(e) = e {
                    out[c].insert(e.row());
                }
            }
        }
        out
    }

    /// Smallest action-closed coordinate set containing `coords`.
    pub fn sub_generated(&self, coords: &[usize]) -> BitSet {
        let succ = self.successors();
        let mut set = BitSet::new(self.dim);
        let mut stack: Vec<usize> = Vec::new();
        for &c in coords {
            if set.insert(c) {
                stack.push(c);
            }
        }
        while let Some(c) = stack.pop() {
            for n in succ[c].iter() {
                if set.insert(n) {
                    stack.push(n);
                }
            }
        }
        set
    }

    pub fn is_closed(&self, set: &BitSet) -> bool {
        self.action.iter().all(|a| set.iter().all(|c| a.entry(c).is_none_or(|e| set.contains(e.row()))))
    }

    /// Every subrepresentation, in binary-counter order of the coordinate
    /// bitmask (coordinate 0 is the least significant bit).
    pub fn all_subreps(&self, cap: usize) -> Result<Vec<BitSet>, RepError> {
        if self.dim > cap || self.dim >= 63 {
            return Err(RepError::DimTooLarge { dim: self.dim, cap: cap.min(62) });
        }
        let succ: Vec<u64> = self.successors().iter().map(|s| s.iter().fold(0u64, |m, i| m | 1 << i)).collect();
        let mut out = Vec::new();
        for mask in 0u64..1 << self.dim {
            let closed = (0..self.dim).all(|c| mask >> c & 1 == 0 || succ[c] & !mask == 0);
            if closed {
                out.push(BitSet::from_indices(self.dim, (0..self.dim).filter(|&c| mask >> c & 1 == 1)));
            }
        }
        Ok(out)
    }

    /// The subrepresentation on an action-closed coordinate set, in
    /// increasing coordinate order.
    pub fn subrep(&self, set: &BitSet) -> Result<Representation, RepError> {
        if !self.is_closed(set) {
            return Err(RepError::NotClosed);
        }
        Ok(self.compress(&set.to_vec()))
    }

    /// `V/W`: the complementary coordinates, with entries into `W` zeroed.
    pub fn quotient(&self, set: &BitSet) -> Result<Representation, RepError> {
        if !self.is_closed(set) {
            return Err(RepError::NotClosed);
        }
        Ok(self.compress(&set.complement().to_vec()))
    }

    fn compress(&self, coords: &[usize]) -> Representation {
        let action = self.action.iter().map(|a| a.compress(coords)).collect();
        Representation::new_unchecked(self.monoid.clone(), coords.len(), action)
    }

    pub fn is_simple(&self) -> bool {
        self.dim > 0 && (0..self.dim).all(|c| self.sub_generated(&[c]).count() == self.dim)
    }

    /// Basis elements acting by zero.
    pub fn annihilator(&self) -> BitSet {
        BitSet::from_indices(self.monoid.dim(), (0..self.monoid.dim()).filter(|&b| self.action[b].is_zero()))
    }

    /// The regular `J`-class `J ≠ {0}` with `Ann(V) = I_J`, if any.
    pub fn apex(&self) -> Option<usize> {
        let report = self.monoid.j_classes();
        let ann = self.annihilator();
        let found = report.regular_nonzero().find(|&c| report.ideal_below(c) == ann);
        found
    }

    /// The natural action of `I_n(Ĝ)` on `Ĝ^{⊕n}`.
    pub fn defining(si: &SymmetricInverse) -> Representation {
        let m = si.monoid().clone();
        let action = (0..m.dim()).map(|b| si.basis_matrix(b).clone()).collect();
        Representation::new_unchecked(m, si.n(), action)
    }

    /// Builds and validates a representation from column images `(row, label)`.
    pub fn from_permutations(
        monoid: GLinearMonoid,
        dim: usize,
        images: &[Vec<Option<(usize, GroupElem)>>],
    ) -> Result<Self, RepError> {
        let g = monoid.group();
        let action = images
            .iter()
            .enumerate()
            .map(|(b, cols)| {
                let cols = cols.iter().map(|c| c.map(|(r, l)| Entry::new(r, l))).collect();
                SubmonomialMatrix::from_columns(g, dim, cols)
                    .map_err(|_| RepError::BadMatrix { basis: monoid.name(b).into() })
            })
            .collect::<Result<Vec<_>, _>>()?;
        Representation::new(monoid, dim, action)
    }
}
