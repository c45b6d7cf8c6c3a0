//! Brute-force oracles shared by the integration tests and the acceptance
//! harness. Nothing here calls the library's own search routines.
#![allow(dead_code)]

use fone_core::fvect::{Entry, SubmonomialMatrix};
use fone_core::monoid::{path_monoid, Arrow, GLinearMonoid, Quiver, Relation, RelationRhs};
use fone_core::{GroupElem, PointedGroup, Representation};

pub fn groups(max_order: u32) -> Vec<PointedGroup> {
    let mut out = vec![PointedGroup::trivial()];
    out.extend((2..=max_order).map(|m| PointedGroup::cyclic(m).unwrap()));
    out
}

/// Every assignment of a column to nothing or to a `(row, label)`, filtered
/// down to the row-injective ones.
pub fn all_matrices(g: PointedGroup, rows: usize, cols: usize) -> Vec<SubmonomialMatrix> {
    let labels: Vec<GroupElem> = g.elements().collect();
    let options = 1 + rows * labels.len();
    let total = options.pow(cols as u32);
    let mut out = Vec::new();
    for code in 0..total {
        let mut c = code;
        let mut entries = Vec::with_capacity(cols);
        let mut hit = vec![false; rows];
        let mut ok = true;
        for _ in 0..cols {
            let o = c % options;
            c /= options;
            if o == 0 {
                entries.push(None);
            } else {
                let row = (o - 1) / labels.len();
                if std::mem::replace(&mut hit[row], true) {
                    ok = false;
                    break;
                }
                entries.push(Some(Entry::new(row, labels[(o - 1) % labels.len()])));
            }
        }
        if ok {
            out.push(SubmonomialMatrix::from_columns(g, rows, entries).unwrap());
        }
    }
    out
}

pub fn binomial(n: u64, k: u64) -> u64 {
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// `Σ_d C(n,d)² d! |G|^d`.
pub fn count_formula(n: u64, g: u64) -> u64 {
    (0..=n).map(|d| binomial(n, d).pow(2) * (1..=d).product::<u64>() * g.pow(d as u32)).sum()
}

pub fn invertibles(g: PointedGroup, d: usize) -> Vec<SubmonomialMatrix> {
    all_matrices(g, d, d).into_iter().filter(|p| p.rank() == d).collect()
}

/// An intertwiner `P` with `P ρ_V(b) = ρ_W(b) P` for every basis element, by
/// trying every invertible monomial matrix.
pub fn brute_isomorphic(v: &Representation, w: &Representation) -> bool {
    if v.dim() != w.dim() || v.monoid() != w.monoid() {
        return false;
    }
    let m = v.monoid();
    invertibles(m.group(), v.dim())
        .iter()
        .any(|p| (0..m.dim()).all(|b| p.compose_unchecked(v.action(b)) == w.action(b).compose_unchecked(p)))
}

/// Closed coordinate sets, by checking every subset.
pub fn closed_subsets(v: &Representation) -> Vec<Vec<usize>> {
    let d = v.dim();
    let m = v.monoid();
    (0u32..1 << d)
        .map(|mask| (0..d).filter(|&i| mask >> i & 1 == 1).collect::<Vec<_>>())
        .filter(|s| (0..m.dim()).all(|b| s.iter().all(|&x| v.action(b).entry(x).is_none_or(|e| s.contains(&e.row())))))
        .collect()
}

pub fn brute_is_simple(v: &Representation) -> bool {
    v.dim() > 0 && closed_subsets(v).len() == 2
}

/// Whether `sub` has a complement, trying every closed set.
pub fn brute_has_complement(v: &Representation, sub: &[usize]) -> bool {
    closed_subsets(v).iter().any(|s| s.iter().all(|x| !sub.contains(x)) && s.len() + sub.len() == v.dim())
}

/// Deduplicates by brute-force isomorphism.
pub fn up_to_iso(reps: Vec<Representation>) -> Vec<Representation> {
    let mut out: Vec<Representation> = Vec::new();
    for r in reps {
        if !out.iter().any(|s| brute_isomorphic(s, &r)) {
            out.push(r);
        }
    }
    out
}

pub fn quiver(vertices: &[&str], arrows: &[(&str, usize, usize)]) -> Quiver {
    Quiver {
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        arrows: arrows.iter().map(|&(n, s, t)| Arrow { name: n.into(), source: s, target: t }).collect(),
    }
}

/// The path-monoid fixtures: `A₂`, `A₃`, `A₃` with the composite killed, and
/// the Kronecker quiver.
pub fn path_fixtures(g: PointedGroup) -> Vec<(&'static str, GLinearMonoid)> {
    let a2 = quiver(&["e", "f"], &[("a", 0, 1)]);
    let a3 = quiver(&["e", "f", "h"], &[("a", 0, 1), ("b", 1, 2)]);
    let kron = quiver(&["e", "f"], &[("a", 0, 1), ("b", 0, 1)]);
    let zero_rel = [Relation { lhs: vec![0, 1], rhs: RelationRhs::Zero }];
    vec![
        ("A2", path_monoid(&a2, &[], g).unwrap()),
        ("A3", path_monoid(&a3, &[], g).unwrap()),
        ("A3/ab", path_monoid(&a3, &zero_rel, g).unwrap()),
        ("Kronecker", path_monoid(&kron, &[], g).unwrap()),
    ]
}

/// Direct evaluation of `Σ_{σ ∈ āb̄⁻¹H} Π_k A_{σ(k)k}` at the point `A`. `None`
/// if two terms are nonzero, which would leave `Ĝ`.
pub fn phi_polynomial(
    a: &SubmonomialMatrix,
    cosets: &[Vec<Vec<usize>>],
    abar: usize,
    bbar: usize,
) -> Option<Option<GroupElem>> {
    let g = a.group();
    let n = a.cols();
    let inv = |p: &[usize]| {
        let mut q = vec![0; p.len()];
        for (k, &v) in p.iter().enumerate() {
            q[v] = k;
        }
        q
    };
    let compose = |p: &[usize], q: &[usize]| q.iter().map(|&k| p[k]).collect::<Vec<_>>();
    let rep_a = &cosets[abar][0];
    let rep_b = &cosets[bbar][0];
    let ab = compose(rep_a, &inv(rep_b));
    let target = cosets.iter().position(|c| c.contains(&ab)).expect("cosets partition S_n");
    let mut sum: Option<GroupElem> = None;
    for sigma in &cosets[target] {
        let mut term = Some(GroupElem::ONE);
        for (k, &row) in sigma.iter().enumerate().take(n) {
            let entry = a.entry(k).filter(|e| e.row() == row).map(|e| e.label);
            term = match (term, entry) {
                (Some(t), Some(x)) => Some(g.mul(t, x)),
                _ => None,
            };
        }
        if let Some(t) = term {
            if sum.is_some() {
                return None;
            }
            sum = Some(t);
        }
    }
    Some(sum)
}
