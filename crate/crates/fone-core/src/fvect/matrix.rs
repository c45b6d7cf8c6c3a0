use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use super::FvectError;
use crate::group::{GroupElem, PointedGroup};

/// The non-zero entry of a column: `label · e_row`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Entry {
    pub row: u32,
    pub label: GroupElem,
}

impl Entry {
    pub fn new(row: usize, label: GroupElem) -> Self {
        Entry { row: row as u32, label }
    }

    #[inline]
    pub fn row(self) -> usize {
        self.row as usize
    }
}

/// A vector of `Ĝ^{⊕n}`: zero, or `g · e_i` (0-based index).
pub type Vector = Option<(GroupElem, usize)>;

/// A `rows × cols` matrix over `Ĝ` with at most one non-zero entry in each
/// row and each column, i.e. a `Ĝ`-linear map `Ĝ^{⊕cols} → Ĝ^{⊕rows}`.
///
/// Stored column-major: column `j` holds the image of `e_j`. Every
/// constructor enforces row-injectivity, so no operation rechecks it.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubmonomialMatrix {
    group: PointedGroup,
    rows: usize,
    entries: Vec<Option<Entry>>,
}

impl fmt::Debug for SubmonomialMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}x{}:", self.rows, self.cols())?;
        for e in &self.entries {
            match e {
                None => write!(f, " -")?,
                Some(e) if e.label.is_one() => write!(f, " {}", e.row + 1)?,
                Some(e) => write!(f, " {}^{}", e.row + 1, e.label.0)?,
            }
        }
        write!(f, "]")
    }
}

impl SubmonomialMatrix {
    pub fn zero(group: PointedGroup, rows: usize, cols: usize) -> Self {
        SubmonomialMatrix { group, rows, entries: vec![None; cols] }
    }

    pub fn identity(group: PointedGroup, n: usize) -> Self {
        Self::scalar(group, n, GroupElem::ONE)
    }

    /// `g · I_n`
    pub fn scalar(group: PointedGroup, n: usize, g: GroupElem) -> Self {
        let entries = (0..n).map(|i| Some(Entry::new(i, g))).collect();
        SubmonomialMatrix { group, rows: n, entries }
    }

    /// The idempotent `E_S`: identity on the coordinates in `support`.
    pub fn diagonal_idempotent(group: PointedGroup, n: usize, support: &[usize]) -> Self {
        let mut m = Self::zero(group, n, n);
        for &i in support {
            m.entries[i] = Some(Entry::new(i, GroupElem::ONE));
        }
        m
    }

    /// `g E_{row,col}`
    pub fn unit(group: PointedGroup, rows: usize, cols: usize, row: usize, col: usize, g: GroupElem) -> Self {
        let mut m = Self::zero(group, rows, cols);
        m.entries[col] = Some(Entry::new(row, g));
        m
    }

    /// Builds a matrix from its columns, checking ranges and row-injectivity.
    pub fn from_columns(group: PointedGroup, rows: usize, entries: Vec<Option<Entry>>) -> Result<Self, FvectError> {
        let mut seen = vec![false; rows];
        for (col, e) in entries.iter().enumerate() {
            let Some(e) = e else { continue };
            if e.row() >= rows {
                return Err(FvectError::RowOutOfRange { col, row: e.row(), rows });
            }
            if !group.contains(e.label) {
                return Err(FvectError::BadLabel { col });
            }
            if core::mem::replace(&mut seen[e.row()], true) {
                return Err(FvectError::NonInjective { row: e.row() });
            }
        }
        Ok(SubmonomialMatrix { group, rows, entries })
    }

    /// `M_{S,f,c} = Σ_{i∈S} c(f(i)) E_{f(i) i}`.
    ///
    /// `f` lists the pairs `(i, f(i))` for `i ∈ S`; `c` lists `(f(i), label)`
    /// and must be defined on exactly `f(S)`.
    pub fn from_triple(
        group: PointedGroup,
        rows: usize,
        cols: usize,
        f: &[(usize, usize)],
        c: &[(usize, GroupElem)],
    ) -> Result<Self, FvectError> {
        let mut entries = vec![None; cols];
        let mut labels: Vec<Option<GroupElem>> = vec![None; rows];
        for &(row, g) in c {
            if row >= rows {
                return Err(FvectError::BadDomain);
            }
            if labels[row].replace(g).is_some() {
                return Err(FvectError::BadDomain);
            }
        }
        let mut used = vec![false; rows];
        for &(col, row) in f {
            if col >= cols {
                return Err(FvectError::DimMismatch { expected: cols, found: col + 1 });
            }
            if row >= rows {
                return Err(FvectError::RowOutOfRange { col, row, rows });
            }
            if core::mem::replace(&mut used[row], true) {
                return Err(FvectError::NonInjective { row });
            }
            let label = labels[row].ok_or(FvectError::BadDomain)?;
            if entries[col].replace(Entry::new(row, label)).is_some() {
                return Err(FvectError::BadDomain);
            }
        }
        if labels.iter().zip(&used).any(|(l, &u)| l.is_some() && !u) {
            return Err(FvectError::BadDomain);
        }
        Self::from_columns(group, rows, entries)
    }

    /// Crate-internal builder step; callers guarantee row-injectivity.
    pub(crate) fn with_entry(mut self, col: usize, e: Option<Entry>) -> Self {
        debug_assert!(e.is_none_or(|e| e.row() < self.rows
            && self.entries.iter().enumerate().all(|(j, f)| j == col || f.is_none_or(|f| f.row != e.row))));
        self.entries[col] = e;
        self
    }

    #[inline]
    pub fn group(&self) -> PointedGroup {
        self.group
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.entries.len()
    }

    #[inline]
    pub fn entry(&self, col: usize) -> Option<Entry> {
        self.entries[col]
    }

    pub fn entries(&self) -> &[Option<Entry>] {
        &self.entries
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Option::is_none)
    }

    /// Number of occupied columns, `|S|`.
    pub fn rank(&self) -> usize {
        self.entries.iter().filter(|e| e.is_some()).count()
    }

    /// Occupied columns, in increasing order.
    pub fn support(&self) -> Vec<usize> {
        (0..self.cols()).filter(|&j| self.entries[j].is_some()).collect()
    }

    /// Rows hit by some column, in increasing order.
    pub fn image_rows(&self) -> Vec<usize> {
        let mut hit = vec![false; self.rows];
        for e in self.entries.iter().flatten() {
            hit[e.row()] = true;
        }
        (0..self.rows).filter(|&i| hit[i]).collect()
    }

    /// Column whose image lands on `row`, with its label.
    pub fn preimage(&self, row: usize) -> Option<(usize, GroupElem)> {
        self.entries.iter().enumerate().find_map(|(j, e)| e.filter(|e| e.row() == row).map(|e| (j, e.label)))
    }

    pub fn apply(&self, v: Vector) -> Vector {
        let (g, i) = v?;
        let e = self.entries[i]?;
        Some((self.group.mul(g, e.label), e.row()))
    }

    /// Kernel is zero.
    pub fn is_mono(&self) -> bool {
        self.entries.iter().all(Option::is_some)
    }

    /// Cokernel is zero.
    pub fn is_epi(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.is_mono()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &SubmonomialMatrix) -> Result<SubmonomialMatrix, FvectError> {
        if self.group != other.group {
            return Err(FvectError::GroupMismatch);
        }
        if other.rows != self.cols() {
            return Err(FvectError::DimMismatch { expected: self.cols(), found: other.rows });
        }
        Ok(self.compose_unchecked(other))
    }

    /// [`compose`](Self::compose) for callers that already know the shapes agree.
    pub fn compose_unchecked(&self, other: &SubmonomialMatrix) -> SubmonomialMatrix {
        let entries = other
            .entries
            .iter()
            .map(|e| {
                let inner = (*e)?;
                let outer = self.entries[inner.row()]?;
                Some(Entry { row: outer.row, label: self.group.mul(outer.label, inner.label) })
            })
            .collect();
        SubmonomialMatrix { group: self.group, rows: self.rows, entries }
    }

    /// The generalised inverse `M_{f(S), f⁻¹, 1/(c∘f)}`.
    pub fn star(&self) -> SubmonomialMatrix {
        let mut entries = vec![None; self.rows];
        for (j, e) in self.entries.iter().enumerate() {
            if let Some(e) = e {
                entries[e.row()] = Some(Entry::new(j, self.group.inv(e.label)));
            }
        }
        SubmonomialMatrix { group: self.group, rows: self.cols(), entries }
    }

    pub fn scaled(&self, g: GroupElem) -> SubmonomialMatrix {
        let entries =
            self.entries.iter().map(|e| e.map(|e| Entry { row: e.row, label: self.group.mul(g, e.label) })).collect();
        SubmonomialMatrix { group: self.group, rows: self.rows, entries }
    }

    /// Block-diagonal sum; the second summand's coordinates come after the first's.
    pub fn direct_sum(&self, other: &SubmonomialMatrix) -> Result<SubmonomialMatrix, FvectError> {
        if self.group != other.group {
            return Err(FvectError::GroupMismatch);
        }
        let shift = self.rows as u32;
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().map(|e| e.map(|e| Entry { row: e.row + shift, label: e.label })));
        Ok(SubmonomialMatrix { group: self.group, rows: self.rows + other.rows, entries })
    }

    /// Restriction to the coordinates listed in `coords` (used for both
    /// domain and codomain); entries leaving `coords` are dropped.
    pub fn compress(&self, coords: &[usize]) -> SubmonomialMatrix {
        let mut position = vec![u32::MAX; self.rows.max(self.cols())];
        for (k, &c) in coords.iter().enumerate() {
            position[c] = k as u32;
        }
        let entries = coords
            .iter()
            .map(|&c| {
                let e = self.entries[c]?;
                let p = position[e.row()];
                (p != u32::MAX).then_some(Entry { row: p, label: e.label })
            })
            .collect();
        SubmonomialMatrix { group: self.group, rows: coords.len(), entries }
    }

    /// Conjugation `P⁻¹ · self · P` by an invertible monomial matrix `P`.
    pub fn conjugate(&self, p: &SubmonomialMatrix) -> SubmonomialMatrix {
        p.star().compose_unchecked(&self.compose_unchecked(p))
    }

    /// The `G`-orbit functor: forget the labels.
    pub fn orbit_map(&self) -> SubmonomialMatrix {
        let entries = self.entries.iter().map(|e| e.map(|e| Entry { row: e.row, label: GroupElem::ONE })).collect();
        SubmonomialMatrix { group: PointedGroup::trivial(), rows: self.rows, entries }
    }

    /// Extension of scalars from `F₁` to `Ĝ`: every label becomes `1`.
    pub fn scalar_extend(&self, group: PointedGroup) -> Result<SubmonomialMatrix, FvectError> {
        if !self.group.is_trivial() {
            return Err(FvectError::GroupMismatch);
        }
        let entries = self.entries.iter().map(|e| e.map(|e| Entry { row: e.row, label: GroupElem::ONE })).collect();
        Ok(SubmonomialMatrix { group, rows: self.rows, entries })
    }

    /// Every `rows × cols` submonomial matrix over `group`.
    ///
    /// Order: columns are filled left to right, each column trying "empty"
    /// first and then rows and labels in increasing order.
    pub fn enumerate(group: PointedGroup, rows: usize, cols: usize) -> Vec<SubmonomialMatrix> {
        let mut out = Vec::new();
        let mut current = Self::zero(group, rows, cols);
        let mut used = vec![false; rows];
        enumerate_rec(&mut current, &mut used, 0, &mut out);
        out
    }
}

fn enumerate_rec(current: &mut SubmonomialMatrix, used: &mut [bool], col: usize, out: &mut Vec<SubmonomialMatrix>) {
    if col == current.cols() {
        out.push(current.clone());
        return;
    }
    current.entries[col] = None;
    enumerate_rec(current, used, col + 1, out);
    for row in 0..current.rows {
        if used[row] {
            continue;
        }
        used[row] = true;
        for g in current.group.elements() {
            current.entries[col] = Some(Entry::new(row, g));
            enumerate_rec(current, used, col + 1, out);
        }
        used[row] = false;
    }
    current.entries[col] = None;
}

/// `Σ_k C(m,k) C(n,k) k! |G|^k`, the number of `m × n` submonomial matrices.
pub fn count_submonomial(rows: usize, cols: usize, group_order: usize) -> u128 {
    let k_max = rows.min(cols);
    (0..=k_max)
        .map(|k| binomial(rows, k) * binomial(cols, k) * factorial(k) * (group_order as u128).pow(k as u32))
        .sum()
}

pub(crate) fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

pub(crate) fn factorial(n: usize) -> u128 {
    (1..=n as u128).product()
}
