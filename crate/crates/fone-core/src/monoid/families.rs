use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;

use super::{validate, Elem, GLinearMonoid, Inner, MElem, MonoidError};
use crate::fvect::{count_submonomial, SubmonomialMatrix};
use crate::group::PointedGroup;

/// Largest basis [`SymmetricInverse::new`] will build.
pub const MAX_SYMMETRIC_BASIS: usize = 20_000;

/// `I_n(Ĝ)` together with the dictionary between basis elements and matrices.
#[derive(Clone, Debug)]
pub struct SymmetricInverse {
    monoid: GLinearMonoid,
    n: usize,
    reps: Vec<SubmonomialMatrix>,
    lookup: BTreeMap<SubmonomialMatrix, usize>,
}

impl SymmetricInverse {
    /// Basis: nonzero matrices whose least occupied column carries label `1`,
    /// ordered by rank (descending) and then by their columns. The identity
    /// comes first and is named `1`.
    pub fn new(n: usize, group: PointedGroup) -> Result<Self, MonoidError> {
        if n == 0 {
            return Err(MonoidError::EmptyBasis);
        }
        let total = count_submonomial(n, n, group.order());
        if (total - 1) / group.order() as u128 > MAX_SYMMETRIC_BASIS as u128 {
            return Err(MonoidError::TooLarge);
        }
        let mut reps: Vec<SubmonomialMatrix> = SubmonomialMatrix::enumerate(group, n, n)
            .into_iter()
            .filter(|a| a.entries().iter().flatten().next().is_some_and(|e| e.label.is_one()))
            .collect();
        reps.sort_by(|a, b| b.rank().cmp(&a.rank()).then_with(|| a.cmp(b)));
        let lookup: BTreeMap<_, _> = reps.iter().cloned().enumerate().map(|(i, a)| (a, i)).collect();
        let names = reps.iter().enumerate().map(|(i, a)| matrix_name(group, a, i == 0)).collect();

        let dim = reps.len();
        let mut table = vec![None; dim * dim];
        for l in 0..dim {
            for r in 0..dim {
                table[l * dim + r] = normalize(&lookup, &reps[l].compose_unchecked(&reps[r]));
            }
        }
        let monoid = GLinearMonoid(Arc::new(Inner { group, names, one: 0, table }));
        Ok(SymmetricInverse { monoid, n, reps, lookup })
    }

    pub fn monoid(&self) -> &GLinearMonoid {
        &self.monoid
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn element_of(&self, a: &SubmonomialMatrix) -> MElem {
        normalize(&self.lookup, a)
    }

    pub fn matrix_of(&self, x: MElem) -> SubmonomialMatrix {
        match x {
            None => SubmonomialMatrix::zero(self.monoid.group(), self.n, self.n),
            Some(e) => self.reps[e.b].scaled(e.g),
        }
    }

    /// The representative matrix of basis element `b`.
    pub fn basis_matrix(&self, b: usize) -> &SubmonomialMatrix {
        &self.reps[b]
    }
}

fn normalize(lookup: &BTreeMap<SubmonomialMatrix, usize>, a: &SubmonomialMatrix) -> MElem {
    let g = a.entries().iter().flatten().next()?.label;
    let rep = a.scaled(a.group().inv(g));
    Some(Elem { g, b: lookup[&rep] })
}

fn matrix_name(group: PointedGroup, a: &SubmonomialMatrix, is_one: bool) -> String {
    if is_one {
        return "1".into();
    }
    let cols: Vec<String> = a
        .entries()
        .iter()
        .map(|e| match e {
            None => "0".into(),
            Some(e) if e.label.is_one() => (e.row() + 1).to_string(),
            Some(e) => {
                let res: Vec<String> = group.residues(e.label).iter().map(|r| r.to_string()).collect();
                format!("{}^{}", e.row() + 1, res.join("."))
            }
        })
        .collect();
    format!("M[{}]", cols.join(","))
}

/// `I_n(Ĝ)`; see [`SymmetricInverse`] for the basis conventions.
pub fn symmetric_inverse_monoid(n: usize, group: PointedGroup) -> Result<GLinearMonoid, MonoidError> {
    Ok(SymmetricInverse::new(n, group)?.monoid)
}

/// The monoid with basis `x₁, …, x_n, 1` and `x_i x_j = 0`.
pub fn null_monoid(n: usize, group: PointedGroup) -> GLinearMonoid {
    let mut names: Vec<String> = (1..=n).map(|i| format!("x{i}")).collect();
    names.push("1".into());
    let dim = n + 1;
    let mut table = vec![None; dim * dim];
    for b in 0..dim {
        table[n * dim + b] = Some(Elem::basis(b));
        table[b * dim + n] = Some(Elem::basis(b));
    }
    GLinearMonoid(Arc::new(Inner { group, names, one: n, table }))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: String,
    pub source: usize,
    pub target: usize,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Quiver {
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
}

/// Right-hand side of a relation `lhs = rhs`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationRhs {
    Zero,
    Vertex(usize),
    Path(Vec<usize>),
}

/// `lhs = rhs` with `lhs` a path given as arrow indices, read left to right.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Relation {
    pub lhs: Vec<usize>,
    pub rhs: RelationRhs,
}

const MAX_PATHS: usize = 4096;
const MAX_PATH_LEN: usize = 64;
const MAX_REWRITES: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Eq)]
enum Word {
    Zero,
    Vertex(usize),
    Path(Vec<usize>),
}

struct Rewriter<'a> {
    quiver: &'a Quiver,
    relations: &'a [Relation],
}

impl Rewriter<'_> {
    fn endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let arrows = &self.quiver.arrows;
        if path.windows(2).any(|w| arrows[w[0]].target != arrows[w[1]].source) {
            return None;
        }
        Some((arrows[*path.first()?].source, arrows[*path.last()?].target))
    }

    fn check(&self) -> Result<(), MonoidError> {
        let nv = self.quiver.vertices.len();
        let na = self.quiver.arrows.len();
        for a in &self.quiver.arrows {
            if a.source >= nv || a.target >= nv {
                return Err(MonoidError::BadRelation(format!("arrow {} has an unknown endpoint", a.name)));
            }
        }
        for rel in self.relations {
            if rel.lhs.iter().any(|&a| a >= na) {
                return Err(MonoidError::BadRelation("unknown arrow".into()));
            }
            let (s, t) = self
                .endpoints(&rel.lhs)
                .ok_or_else(|| MonoidError::BadRelation("left-hand side is not a path".into()))?;
            match &rel.rhs {
                RelationRhs::Zero => {}
                RelationRhs::Vertex(v) => {
                    if *v != s || *v != t {
                        return Err(MonoidError::BadRelation(format!(
                            "vertex {} does not match the endpoints of its left-hand side",
                            self.quiver.vertices.get(*v).map_or("?", |s| s.as_str())
                        )));
                    }
                }
                RelationRhs::Path(p) => {
                    if p.iter().any(|&a| a >= na) || self.endpoints(p) != Some((s, t)) {
                        return Err(MonoidError::BadRelation("right-hand side is not a parallel path".into()));
                    }
                }
            }
        }
        Ok(())
    }

    /// Leftmost-first rewriting to normal form.
    fn reduce(&self, mut word: Vec<usize>) -> Result<Word, MonoidError> {
        for _ in 0..MAX_REWRITES {
            let hit = (0..word.len()).find_map(|pos| {
                self.relations.iter().find(|rel| word[pos..].starts_with(&rel.lhs)).map(|rel| (pos, rel))
            });
            let Some((pos, rel)) = hit else { return Ok(Word::Path(word)) };
            let range = pos..pos + rel.lhs.len();
            match &rel.rhs {
                RelationRhs::Zero => return Ok(Word::Zero),
                RelationRhs::Vertex(v) => {
                    word.drain(range);
                    if word.is_empty() {
                        return Ok(Word::Vertex(*v));
                    }
                }
                RelationRhs::Path(p) => {
                    word.splice(range, p.iter().copied());
                }
            }
            if word.len() > MAX_PATH_LEN {
                return Err(MonoidError::CyclicQuiver);
            }
        }
        Err(MonoidError::BadRelation("rewriting does not terminate".into()))
    }
}

fn has_cycle(q: &Quiver) -> bool {
    // Kahn's algorithm
    let mut indeg = vec![0usize; q.vertices.len()];
    for a in &q.arrows {
        indeg[a.target] += 1;
    }
    let mut stack: Vec<usize> = (0..indeg.len()).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for a in q.arrows.iter().filter(|a| a.source == v) {
            indeg[a.target] -= 1;
            if indeg[a.target] == 0 {
                stack.push(a.target);
            }
        }
    }
    seen < q.vertices.len()
}

/// The path monoid `ĜQ`, optionally modulo relations.
///
/// Basis: `1`, the vertices, then the nonzero paths in normal form ordered by
/// length. `αβ` is "α then β". The finished table is audited for
/// associativity and inconsistent relation sets are rejected with a witness.
pub fn path_monoid(quiver: &Quiver, relations: &[Relation], group: PointedGroup) -> Result<GLinearMonoid, MonoidError> {
    let rw = Rewriter { quiver, relations };
    rw.check()?;
    if relations.is_empty() && has_cycle(quiver) {
        return Err(MonoidError::CyclicQuiver);
    }
    let arrows = &quiver.arrows;

    let mut paths: Vec<Vec<usize>> = Vec::new();
    let mut index: BTreeMap<Vec<usize>, usize> = BTreeMap::new();
    for a in 0..arrows.len() {
        if let Word::Path(p) = rw.reduce(vec![a])? {
            if !index.contains_key(&p) {
                index.insert(p.clone(), paths.len());
                paths.push(p);
            }
        }
    }
    let mut next = 0;
    while next < paths.len() {
        let w = paths[next].clone();
        next += 1;
        let end = arrows[*w.last().expect("nonempty")].target;
        for (a, arrow) in arrows.iter().enumerate() {
            if arrow.source != end {
                continue;
            }
            let mut word = w.clone();
            word.push(a);
            if let Word::Path(p) = rw.reduce(word)? {
                if !index.contains_key(&p) {
                    if paths.len() >= MAX_PATHS || p.len() > MAX_PATH_LEN {
                        return Err(MonoidError::CyclicQuiver);
                    }
                    index.insert(p.clone(), paths.len());
                    paths.push(p);
                }
            }
        }
    }
    paths.sort_by(|a, b| a.len().cmp(&b.len()).then_with(|| a.cmp(b)));

    let nv = quiver.vertices.len();
    let dim = 1 + nv + paths.len();
    let path_base = 1 + nv;
    let index: BTreeMap<Vec<usize>, usize> =
        paths.iter().enumerate().map(|(i, p)| (p.clone(), path_base + i)).collect();

    let mut names: Vec<String> = vec!["1".into()];
    names.extend(quiver.vertices.iter().cloned());
    for p in &paths {
        let parts: Vec<&str> = p.iter().map(|&a| arrows[a].name.as_str()).collect();
        names.push(parts.join("."));
    }
    let mut sorted: Vec<&String> = names.iter().collect();
    sorted.sort();
    if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
        return Err(MonoidError::DuplicateName(w[0].clone()));
    }

    let source = |b: usize| -> usize {
        if b < path_base {
            b - 1
        } else {
            arrows[paths[b - path_base][0]].source
        }
    };
    let target = |b: usize| -> usize {
        if b < path_base {
            b - 1
        } else {
            arrows[*paths[b - path_base].last().expect("nonempty")].target
        }
    };

    let mut table = vec![None; dim * dim];
    for l in 0..dim {
        for r in 0..dim {
            let prod = if l == 0 {
                Some(r)
            } else if r == 0 {
                Some(l)
            } else if target(l) != source(r) {
                None
            } else if l < path_base {
                Some(r)
            } else if r < path_base {
                Some(l)
            } else {
                let mut word = paths[l - path_base].clone();
                word.extend_from_slice(&paths[r - path_base]);
                match rw.reduce(word)? {
                    Word::Zero => None,
                    Word::Vertex(v) => Some(1 + v),
                    Word::Path(p) => Some(*index.get(&p).ok_or(MonoidError::CyclicQuiver)?),
                }
            };
            table[l * dim + r] = prod.map(Elem::basis);
        }
    }
    let m = GLinearMonoid(Arc::new(Inner { group, names, one: 0, table }));
    match validate(&m) {
        Ok(()) => Ok(m),
        Err(MonoidError::NotAssociative(w)) => Err(MonoidError::RelationInconsistent(w)),
        Err(e) => Err(e),
    }
}
