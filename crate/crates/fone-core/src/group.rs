//! Finite abelian groups given as products of cyclic groups, with an
//! absorbing zero adjoined.
//!
//! Elements are packed into a single mixed-radix index so that matrices and
//! monoid tables can store them as plain integers. The first cyclic factor is
//! the most significant digit, which makes index order agree with the
//! lexicographic order on residue vectors.

use alloc::vec::Vec;
use core::fmt;

/// Maximum number of cyclic factors a [`PointedGroup`] may carry.
pub const MAX_FACTORS: usize = 6;

/// Largest supported group order.
pub const MAX_ORDER: u32 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GroupError {
    ZeroOrder { factor: usize },
    TooManyFactors(usize),
    TooLarge,
    BadResidues,
}

impl fmt::Display for GroupError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupError::ZeroOrder { factor } => write!(f, "cyclic factor {factor} has order 0"),
            GroupError::TooManyFactors(n) => {
                write!(f, "{n} cyclic factors given, at most {MAX_FACTORS} supported")
            }
            GroupError::TooLarge => write!(f, "group order exceeds {MAX_ORDER}"),
            GroupError::BadResidues => write!(f, "residue vector does not fit the group"),
        }
    }
}

impl core::error::Error for GroupError {}

/// An element of the group `G` (never zero), stored as a mixed-radix index.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GroupElem(pub u32);

impl GroupElem {
    pub const ONE: GroupElem = GroupElem(0);

    #[inline]
    pub fn is_one(self) -> bool {
        self.0 == 0
    }
}

/// A scalar of `Ĝ = G ⊔ {0}`. `None` is the absorbing zero.
pub type Scalar = Option<GroupElem>;

/// The pointed group `Ĝ` for `G ≅ Z/m₁ × … × Z/m_k`, written multiplicatively.
///
/// The empty product is the trivial group, i.e. the scalars of `F₁`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PointedGroup {
    orders: [u16; MAX_FACTORS],
    rank: u8,
    size: u32,
}

impl fmt::Debug for PointedGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PointedGroup{:?}", self.cyclic_orders())
    }
}

impl Default for PointedGroup {
    fn default() -> Self {
        Self::trivial()
    }
}

impl PointedGroup {
    pub fn trivial() -> Self {
        PointedGroup { orders: [1; MAX_FACTORS], rank: 0, size: 1 }
    }

    pub fn cyclic(m: u32) -> Result<Self, GroupError> {
        Self::new(&[m])
    }

    pub fn new(cyclic_orders: &[u32]) -> Result<Self, GroupError> {
        if cyclic_orders.len() > MAX_FACTORS {
            return Err(GroupError::TooManyFactors(cyclic_orders.len()));
        }
        let mut orders = [1u16; MAX_FACTORS];
        let mut size: u64 = 1;
        for (i, &m) in cyclic_orders.iter().enumerate() {
            if m == 0 {
                return Err(GroupError::ZeroOrder { factor: i });
            }
            size *= u64::from(m);
            if size > u64::from(MAX_ORDER) {
                return Err(GroupError::TooLarge);
            }
            orders[i] = m as u16;
        }
        Ok(PointedGroup { orders, rank: cyclic_orders.len() as u8, size: size as u32 })
    }

    pub fn cyclic_orders(&self) -> Vec<u32> {
        self.orders[..self.rank as usize].iter().map(|&m| u32::from(m)).collect()
    }

    /// `|G|`, not counting the zero.
    #[inline]
    pub fn order(&self) -> usize {
        self.size as usize
    }

    #[inline]
    pub fn is_trivial(&self) -> bool {
        self.size == 1
    }

    pub fn elements(&self) -> impl Iterator<Item = GroupElem> + Clone {
        (0..self.size).map(GroupElem)
    }

    pub fn residues(&self, g: GroupElem) -> Vec<u32> {
        let mut out = alloc::vec![0u32; self.rank as usize];
        let mut rest = g.0;
        for i in (0..self.rank as usize).rev() {
            let m = u32::from(self.orders[i]);
            out[i] = rest % m;
            rest /= m;
        }
        out
    }

    pub fn from_residues(&self, residues: &[u32]) -> Result<GroupElem, GroupError> {
        if residues.len() != self.rank as usize {
            return Err(GroupError::BadResidues);
        }
        let mut idx = 0u32;
        for (i, &r) in residues.iter().enumerate() {
            let m = u32::from(self.orders[i]);
            if r >= m {
                return Err(GroupError::BadResidues);
            }
            idx = idx * m + r;
        }
        Ok(GroupElem(idx))
    }

    #[inline]
    pub fn mul(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        if self.rank <= 1 {
            return GroupElem((a.0 + b.0) % self.size);
        }
        let (mut x, mut y, mut acc, mut stride) = (a.0, b.0, 0u32, 1u32);
        for i in (0..self.rank as usize).rev() {
            let m = u32::from(self.orders[i]);
            acc += ((x % m + y % m) % m) * stride;
            x /= m;
            y /= m;
            stride *= m;
        }
        GroupElem(acc)
    }

    #[inline]
    pub fn inv(&self, a: GroupElem) -> GroupElem {
        if self.rank <= 1 {
            return GroupElem((self.size - a.0) % self.size);
        }
        let (mut x, mut acc, mut stride) = (a.0, 0u32, 1u32);
        for i in (0..self.rank as usize).rev() {
            let m = u32::from(self.orders[i]);
            acc += ((m - x % m) % m) * stride;
            x /= m;
            stride *= m;
        }
        GroupElem(acc)
    }

    /// `a · b⁻¹`
    #[inline]
    pub fn div(&self, a: GroupElem, b: GroupElem) -> GroupElem {
        self.mul(a, self.inv(b))
    }

    pub fn pow(&self, a: GroupElem, k: usize) -> GroupElem {
        (0..k).fold(GroupElem::ONE, |acc, _| self.mul(acc, a))
    }

    /// Scalar product in `Ĝ`; zero is absorbing.
    #[inline]
    pub fn scalar_mul(&self, a: Scalar, b: Scalar) -> Scalar {
        Some(self.mul(a?, b?))
    }

    pub fn contains(&self, g: GroupElem) -> bool {
        g.0 < self.size
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn klein_four_arithmetic() {
        let g = PointedGroup::new(&[2, 2]).unwrap();
        assert_eq!(g.order(), 4);
        let a = g.from_residues(&[1, 0]).unwrap();
        let b = g.from_residues(&[0, 1]).unwrap();
        let ab = g.mul(a, b);
        assert_eq!(g.residues(ab), [1, 1]);
        assert_eq!(g.mul(ab, ab), GroupElem::ONE);
        for x in g.elements() {
            assert_eq!(g.inv(x), x);
        }
    }

    #[test]
    fn mixed_orders_inverse() {
        let g = PointedGroup::new(&[3, 4]).unwrap();
        for x in g.elements() {
            assert_eq!(g.mul(x, g.inv(x)), GroupElem::ONE);
            assert_eq!(g.from_residues(&g.residues(x)).unwrap(), x);
        }
    }

    #[test]
    fn zero_absorbs() {
        let g = PointedGroup::cyclic(3).unwrap();
        assert_eq!(g.scalar_mul(None, Some(GroupElem(2))), None);
        assert_eq!(g.scalar_mul(Some(GroupElem(2)), Some(GroupElem(2))), Some(GroupElem(1)));
    }

    #[test]
    fn rejects_bad_orders() {
        assert_eq!(PointedGroup::new(&[2, 0]), Err(GroupError::ZeroOrder { factor: 1 }));
        assert!(PointedGroup::new(&[2; 7]).is_err());
        assert!(PointedGroup::trivial().is_trivial());
        assert_eq!(PointedGroup::new(&[]).unwrap(), PointedGroup::trivial());
    }
}
