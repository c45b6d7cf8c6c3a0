mod common;

use common::*;
use fone_core::bitset::BitSet;
use fone_core::cmp::{complement, is_semisimple, Semisimplicity};
use fone_core::fvect::{Entry, SubmonomialMatrix};
use fone_core::monoid::{null_monoid, GLinearMonoid, SymmetricInverse};
use fone_core::ordered::OrderedMonoid;
use fone_core::rep::{representations, representations_up_to, TieBreak};
use fone_core::{GroupElem, PointedGroup, Representation};
use proptest::prelude::*;

fn i_n(n: usize, order: u32) -> SymmetricInverse {
    SymmetricInverse::new(n, PointedGroup::cyclic(order).unwrap()).unwrap()
}

/// Every action table on the basis, kept if it is a representation.
fn brute_representations(m: &GLinearMonoid, dim: usize) -> Vec<Representation> {
    let mats = all_matrices(m.group(), dim, dim);
    let n = m.dim();
    let mut out = Vec::new();
    let mut idx = vec![0usize; n];
    loop {
        let action: Vec<SubmonomialMatrix> = idx.iter().map(|&i| mats[i].clone()).collect();
        if let Ok(r) = Representation::new(m.clone(), dim, action) {
            out.push(r);
        }
        let mut k = 0;
        loop {
            if k == n {
                return out;
            }
            idx[k] += 1;
            if idx[k] < mats.len() {
                break;
            }
            idx[k] = 0;
            k += 1;
        }
    }
}

#[test]
fn enumerator_is_exhaustive_up_to_isomorphism() {
    let cases: Vec<(GLinearMonoid, usize)> = vec![
        (i_n(1, 2).monoid().clone(), 2),
        (i_n(2, 1).monoid().clone(), 2),
        (null_monoid(2, PointedGroup::trivial()), 2),
        (null_monoid(1, PointedGroup::cyclic(2).unwrap()), 2),
    ];
    for (m, max) in cases {
        for d in 0..=max {
            let brute = up_to_iso(brute_representations(&m, d));
            let found = representations(&m, d).unwrap();
            assert_eq!(found.len(), brute.len(), "dim {d}");
            for b in &brute {
                assert_eq!(found.iter().filter(|f| brute_isomorphic(f, b)).count(), 1);
            }
        }
    }
}

#[test]
fn symmetric_inverse_tables_are_matrix_products() {
    for (n, order) in [(2, 1), (2, 2), (3, 1), (2, 3)] {
        let si = i_n(n, order);
        let m = si.monoid();
        for x in m.elements() {
            assert_eq!(si.element_of(&si.matrix_of(x)), x);
            for y in m.elements() {
                let prod = si.matrix_of(x).compose(&si.matrix_of(y)).unwrap();
                assert_eq!(si.matrix_of(m.mul(x, y)), prod);
            }
            let star = m.star_inverse(x).unwrap();
            assert_eq!(si.matrix_of(star), si.matrix_of(x).star());
        }
    }
}

#[test]
fn semisimple_reps_have_complements_everywhere() {
    let si = i_n(2, 2);
    let m = si.monoid();
    assert!(matches!(is_semisimple(m, 2), Semisimplicity::Semisimple));
    for v in representations_up_to(m, 4).unwrap() {
        for sub in closed_subsets(&v) {
            let set = BitSet::from_indices(v.dim(), sub.iter().copied());
            assert!(complement(&v, &set).is_some());
            assert!(brute_has_complement(&v, &sub));
        }
    }
}

#[test]
fn isomorphism_agrees_with_brute_force() {
    let m = i_n(2, 2).monoid().clone();
    let reps = representations_up_to(&m, 3).unwrap();
    for a in &reps {
        for b in &reps {
            let fast = a.are_isomorphic(b).unwrap();
            assert_eq!(fast.is_some(), brute_isomorphic(a, b));
            assert_eq!(a.iso_key() == b.iso_key(), fast.is_some());
            if let Some(p) = fast {
                for x in 0..m.dim() {
                    assert_eq!(p.compose(a.action(x)).unwrap(), b.action(x).compose(&p).unwrap());
                }
            }
        }
    }
}

fn fixture(k: usize) -> GLinearMonoid {
    match k % 4 {
        0 => i_n(2, 1).monoid().clone(),
        1 => i_n(2, 2).monoid().clone(),
        2 => null_monoid(2, PointedGroup::trivial()),
        _ => path_fixtures(PointedGroup::trivial()).remove(1).1,
    }
}

/// A direct sum of enumerated representations in a shuffled monomial basis.
fn random_rep() -> impl Strategy<Value = (Representation, Representation)> {
    (0..4usize, prop::collection::vec(any::<usize>(), 1..4), any::<u64>()).prop_map(|(k, picks, seed)| {
        let m = fixture(k);
        let pool: Vec<Representation> =
            representations_up_to(&m, 2).unwrap().into_iter().filter(|r| r.dim() > 0).collect();
        let mut v = Representation::zero(m.clone());
        for p in picks {
            v = v.direct_sum(&pool[p % pool.len()]).unwrap();
        }
        let g = m.group();
        let d = v.dim();
        let mut perm: Vec<usize> = (0..d).collect();
        let mut s = seed;
        for i in (1..d).rev() {
            perm.swap(i, (s % (i as u64 + 1)) as usize);
            s /= i as u64 + 1;
        }
        let cols = perm
            .iter()
            .enumerate()
            .map(|(c, &r)| Some(Entry::new(r, GroupElem(((seed >> c) % g.order() as u64) as u32))))
            .collect();
        let p = SubmonomialMatrix::from_columns(g, d, cols).unwrap();
        let w = v.change_basis(&p);
        (v, w)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn basis_change_preserves_decompositions((v, w) in random_rep()) {
        prop_assert!(brute_isomorphic(&v, &w) || v.dim() > 5);
        prop_assert_eq!(v.iso_key(), w.iso_key());
        prop_assert_eq!(v.krull_schmidt().keys(), w.krull_schmidt().keys());
        prop_assert_eq!(v.jordan_holder(TieBreak::First).factor_keys(), w.jordan_holder(TieBreak::Last).factor_keys());
    }

    #[test]
    fn summands_are_indecomposable_and_cover((v, _w) in random_rep()) {
        let ks = v.krull_schmidt();
        let mut all: Vec<usize> = ks.summands.iter().flat_map(|s| s.coords.iter().copied()).collect();
        all.sort();
        prop_assert_eq!(all, (0..v.dim()).collect::<Vec<_>>());
        for s in &ks.summands {
            let part = v.subrep(&BitSet::from_indices(v.dim(), s.coords.iter().copied())).unwrap();
            prop_assert!(part.is_indecomposable());
            prop_assert_eq!(part.iso_key(), s.key.clone());
        }
    }

    #[test]
    fn composition_length_is_dimension_free_of_tie_break((v, _w) in random_rep()) {
        let first = v.jordan_holder(TieBreak::First);
        let last = v.jordan_holder(TieBreak::Last);
        prop_assert_eq!(first.chain.len(), last.chain.len());
        let total: usize = first.factors.iter().map(|k| k.dim).sum();
        prop_assert_eq!(total, v.dim());
    }
}

#[test]
fn respecting_joins_passes_to_subreps_and_quotients() {
    for order in [1, 2] {
        let si = i_n(2, order);
        let ord = OrderedMonoid::natural(&si);
        for v in representations_up_to(si.monoid(), 4).unwrap() {
            if !ord.respects_joins(&v).unwrap().respects {
                continue;
            }
            for sub in closed_subsets(&v) {
                let set = BitSet::from_indices(v.dim(), sub.iter().copied());
                assert!(ord.respects_joins(&v.subrep(&set).unwrap()).unwrap().respects);
                assert!(ord.respects_joins(&v.quotient(&set).unwrap()).unwrap().respects);
            }
        }
    }
}

#[test]
fn natural_order_validates_and_flat_order_does_not() {
    for (n, order) in [(1, 1), (2, 1), (2, 2), (3, 1)] {
        let si = i_n(n, order);
        let verdict = OrderedMonoid::natural(&si).validate().unwrap();
        assert!(verdict.checked > 0 || n == 1);
        // E11·E12 = E11·E11 while E12 and E11 only meet at 0
        assert_eq!(OrderedMonoid::flat(si.monoid().clone()).validate().is_ok(), n == 1);
    }
}
