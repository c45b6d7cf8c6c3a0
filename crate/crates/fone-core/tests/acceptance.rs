//! Acceptance harness: one line per criterion, nonzero exit if any fails.

mod common;

use std::collections::BTreeSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use fone_core::bitset::BitSet;
use fone_core::cmp::{
    all_simples, cmp_simple, group_simples, is_semisimple, normal_subgroups, restrict, subgroups_avoiding_scalars,
    v_sh, vsh_isomorphic, CmpError, PhiH, Semisimplicity,
};
use fone_core::fvect::{pullback, pushout, Entry, SubmonomialMatrix};
use fone_core::monoid::{null_monoid, GLinearMonoid, SymmetricInverse};
use fone_core::ordered::OrderedMonoid;
use fone_core::rep::{representations, representations_up_to, wagner_preston, TieBreak};
use fone_core::{GroupElem, PointedGroup, Representation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Outcome = Result<String, String>;
type Criterion = (&'static str, u64, fn() -> Outcome);

fn check(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn si(n: usize, g: PointedGroup) -> SymmetricInverse {
    SymmetricInverse::new(n, g).unwrap()
}

fn z(m: u32) -> PointedGroup {
    PointedGroup::cyclic(m).unwrap()
}

fn element_count() -> Outcome {
    let mut cases = 0;
    for g in groups(3) {
        for n in 1..=4usize {
            let oracle = all_matrices(g, n, n).len() as u64;
            let formula = count_formula(n as u64, g.order() as u64);
            let size = si(n, g).monoid().size() as u64;
            check(oracle == formula && formula == size, || {
                format!("n={n} |G|={}: oracle {oracle}, formula {formula}, monoid {size}", g.order())
            })?;
            cases += 1;
        }
    }
    let sizes = [
        si(2, PointedGroup::trivial()).monoid().size(),
        si(2, z(2)).monoid().size(),
        si(3, PointedGroup::trivial()).monoid().size(),
    ];
    check(sizes == [7, 17, 34], || format!("spot sizes {sizes:?}"))?;
    Ok(format!("{cases} (n, G) cases"))
}

fn compose(a: &SubmonomialMatrix, b: &SubmonomialMatrix) -> SubmonomialMatrix {
    a.compose(b).unwrap()
}

fn universal_properties() -> Outcome {
    let mut pushouts = 0;
    let mut pullbacks = 0;
    for g in groups(2) {
        for a in 0..=2 {
            for b in 0..=2 {
                for c in 0..=2 {
                    let monos: Vec<_> = all_matrices(g, b, a).into_iter().filter(|m| m.is_mono()).collect();
                    let epis: Vec<_> = all_matrices(g, c, a).into_iter().filter(|m| m.is_epi()).collect();
                    for i in &monos {
                        for p in &epis {
                            let po = pushout(i, p).map_err(|e| format!("pushout failed: {e}"))?;
                            check(compose(&po.p_b, i) == compose(&po.i_c, p), || {
                                format!("pushout square fails for {i:?}, {p:?}")
                            })?;
                            check(po.p_b.is_epi() && po.i_c.is_mono(), || "pushout legs have the wrong type".into())?;
                            let d = po.object.dim;
                            for x in 0..=2 {
                                let us = all_matrices(g, x, d);
                                for f in all_matrices(g, x, b) {
                                    for h in all_matrices(g, x, c) {
                                        if compose(&f, i) != compose(&h, p) {
                                            continue;
                                        }
                                        let n = us
                                            .iter()
                                            .filter(|u| compose(u, &po.p_b) == f && compose(u, &po.i_c) == h)
                                            .count();
                                        check(n == 1, || {
                                            format!("pushout: {n} mediating maps for a={a} b={b} c={c} x={x}")
                                        })?;
                                    }
                                }
                            }
                            pushouts += 1;
                        }
                    }
                    // cospan B ↠ D ↩ C with D of dimension a
                    let d = a;
                    let epis: Vec<_> = all_matrices(g, d, b).into_iter().filter(|m| m.is_epi()).collect();
                    let monos: Vec<_> = all_matrices(g, d, c).into_iter().filter(|m| m.is_mono()).collect();
                    for p in &epis {
                        for i in &monos {
                            let pb = pullback(p, i).map_err(|e| format!("pullback failed: {e}"))?;
                            check(compose(p, &pb.i_b) == compose(i, &pb.p_c), || "pullback square fails".into())?;
                            check(pb.i_b.is_mono() && pb.p_c.is_epi(), || "pullback legs have the wrong type".into())?;
                            let dim = pb.object.dim;
                            for x in 0..=2 {
                                let us = all_matrices(g, dim, x);
                                for f in all_matrices(g, b, x) {
                                    for h in all_matrices(g, c, x) {
                                        if compose(p, &f) != compose(i, &h) {
                                            continue;
                                        }
                                        let n = us
                                            .iter()
                                            .filter(|u| compose(&pb.i_b, u) == f && compose(&pb.p_c, u) == h)
                                            .count();
                                        check(n == 1, || {
                                            format!("pullback: {n} mediating maps for b={b} c={c} d={d} x={x}")
                                        })?;
                                    }
                                }
                            }
                            pullbacks += 1;
                        }
                    }
                }
            }
        }
    }
    Ok(format!("{pushouts} pushouts, {pullbacks} pullbacks"))
}

fn star_closed_basis(m: &GLinearMonoid, basis: &[usize]) -> bool {
    basis.iter().all(|&b| {
        m.star_inverse(Some(fone_core::Elem::basis(b))).is_ok_and(|s| s.is_some_and(|s| basis.contains(&s.b)))
    })
}

fn wagner_preston_check() -> Outcome {
    let i2 = si(2, PointedGroup::trivial());
    let i2z = si(2, z(2));
    let m1 = i2.monoid();
    let idx = |names: &[&str]| {
        let mut v: Vec<usize> = names.iter().map(|n| m1.index_of(n).unwrap()).collect();
        v.sort();
        v
    };
    let diag = idx(&["1", "M[1,0]", "M[0,2]"]);
    let rank_one: Vec<usize> =
        std::iter::once(m1.one()).chain((0..m1.dim()).filter(|&b| i2.basis_matrix(b).rank() == 1)).collect();
    let units = i2z.monoid().units();
    let mut fixtures = vec![("I2(F1)", m1.clone()), ("I2(Z2)", i2z.monoid().clone())];
    for (name, ambient, basis) in
        [("diagonal", m1, diag), ("units of I2(Z2)", i2z.monoid(), units), ("rank<=1", m1, rank_one)]
    {
        check(star_closed_basis(ambient, &basis), || format!("{name} is not *-closed"))?;
        fixtures.push((name, ambient.submonoid(&basis).map_err(|e| format!("{name}: {e}"))?));
    }
    let mut pairs = 0;
    for (name, m) in &fixtures {
        let phi = wagner_preston(m).map_err(|e| format!("{name}: {e}"))?;
        Representation::new(m.clone(), phi.dim(), phi.actions().to_vec())
            .map_err(|e| format!("{name}: invalid: {e}"))?;
        let els = m.elements();
        let images: Vec<SubmonomialMatrix> = els.iter().map(|&x| phi.act(x)).collect();
        let distinct: BTreeSet<&SubmonomialMatrix> = images.iter().collect();
        check(distinct.len() == els.len(), || format!("{name}: not injective"))?;
        for (i, &x) in els.iter().enumerate() {
            for (j, &y) in els.iter().enumerate() {
                check(phi.act(m.mul(x, y)) == compose(&images[i], &images[j]), || {
                    format!("{name}: not multiplicative")
                })?;
                pairs += 1;
            }
            for g in m.group().elements() {
                check(phi.act(m.scale(g, x)) == images[i].scaled(g), || format!("{name}: not G-equivariant"))?;
            }
            let star = x.map(|e| m.star_inverse(Some(e)).unwrap()).unwrap_or(None);
            check(phi.act(star) == images[i].star(), || format!("{name}: star not preserved at {}", m.display(x)))?;
        }
    }
    Ok(format!("{} monoids, {pairs} products", fixtures.len()))
}

fn brute_simples(m: &GLinearMonoid, max_dim: usize) -> Result<Vec<Representation>, String> {
    let mut reps = Vec::new();
    for d in 1..=max_dim {
        reps.extend(representations(m, d).map_err(|e| e.to_string())?.into_iter().filter(brute_is_simple));
    }
    Ok(up_to_iso(reps))
}

fn iso(a: &Representation, b: &Representation) -> bool {
    a.are_isomorphic(b).unwrap().is_some()
}

fn cmp_check() -> Outcome {
    let mut fixtures: Vec<(String, GLinearMonoid)> = vec![
        ("I2(F1)".into(), si(2, PointedGroup::trivial()).monoid().clone()),
        ("I2(Z2)".into(), si(2, z(2)).monoid().clone()),
        ("I3(F1)".into(), si(3, PointedGroup::trivial()).monoid().clone()),
    ];
    for g in groups(2) {
        for (name, m) in path_fixtures(g) {
            fixtures.push((format!("{name}/|G|={}", g.order()), m));
        }
    }
    let mut total = 0;
    let mut trips = 0;
    for (name, m) in &fixtures {
        let simples = all_simples(m).map_err(|e| format!("{name}: {e}"))?;
        let report = m.j_classes();
        for c in report.regular_nonzero() {
            let h = m.maximal_subgroup(report.classes[c].idempotents[0]).map_err(|e| e.to_string())?;
            for gs in group_simples(&h.monoid).map_err(|e| e.to_string())? {
                let v = cmp_simple(&gs.rep, &h).map_err(|e| format!("{name}: {e}"))?;
                check(brute_is_simple(&v), || format!("{name}: induced quotient is not simple"))?;
                let back = restrict(&v, &h).map_err(|e| e.to_string())?;
                check(brute_isomorphic(&back, &gs.rep), || format!("{name}: restrict∘cmp_simple is not the identity"))?;
                trips += 1;
            }
        }
        for s in &simples {
            check(brute_is_simple(&s.rep), || format!("{name}: listed simple of dim {} is not simple", s.rep.dim()))?;
        }
        let brute = brute_simples(m, 4)?;
        for v in &brute {
            let c = v.apex().ok_or_else(|| format!("{name}: simple without apex"))?;
            let h = m.maximal_subgroup(report.classes[c].idempotents[0]).map_err(|e| e.to_string())?;
            let w = restrict(v, &h).map_err(|e| e.to_string())?;
            let again = cmp_simple(&w, &h).map_err(|e| format!("{name}: {e}"))?;
            check(brute_isomorphic(&again, v), || format!("{name}: cmp_simple∘restrict is not the identity"))?;
            trips += 1;
            let hits = simples.iter().filter(|s| brute_isomorphic(&s.rep, v)).count();
            check(hits == 1, || format!("{name}: a brute simple of dim {} matches {hits} listed simples", v.dim()))?;
        }
        let small = simples.iter().filter(|s| s.rep.dim() <= 4).count();
        check(small == brute.len(), || {
            format!("{name}: {small} listed simples of dim <= 4, oracle has {}", brute.len())
        })?;
        for (i, s) in simples.iter().enumerate() {
            for t in &simples[i + 1..] {
                check(!iso(&s.rep, &t.rep), || format!("{name}: duplicate simples"))?;
            }
        }
        if name == "I2(F1)" {
            let mut dims: Vec<usize> = simples.iter().map(|s| s.rep.dim()).collect();
            dims.sort();
            check(dims == [1, 2, 2], || format!("I2(F1) simple dims {dims:?}"))?;
        }
        total += simples.len();
    }
    Ok(format!("{} monoids, {total} simples, {trips} round trips", fixtures.len()))
}

fn trichotomy() -> Outcome {
    let mut fixtures: Vec<(String, GLinearMonoid)> = Vec::new();
    for g in groups(2) {
        for n in 1..=3 {
            fixtures.push((format!("I{n}(|G|={})", g.order()), si(n, g).monoid().clone()));
            fixtures.push((format!("null({n},|G|={})", g.order()), null_monoid(n, g)));
        }
        for (name, m) in path_fixtures(g) {
            fixtures.push((format!("{name}/|G|={}", g.order()), m));
        }
    }
    let (mut pos, mut neg, mut skipped, mut reps) = (0, 0, 0, 0);
    for (name, m) in &fixtures {
        if !m.is_left_inductive() {
            skipped += 1;
            continue;
        }
        let inverse = m.is_inverse();
        let regular = m.is_regular();
        let verdict = is_semisimple(m, 3);
        check(verdict.is_semisimple() == Some(inverse) && regular == inverse, || {
            format!("{name}: inverse {inverse}, regular {regular}, semisimple {:?}", verdict.is_semisimple())
        })?;
        match verdict {
            Semisimplicity::NotSemisimple(w) => {
                let sub = w.sub.to_vec();
                check(w.rep.is_closed(&w.sub) && !sub.is_empty() && sub.len() < w.rep.dim(), || {
                    format!("{name}: bad witness")
                })?;
                check(!brute_has_complement(&w.rep, &sub), || format!("{name}: witness has a complement"))?;
                neg += 1;
            }
            _ => {
                for v in representations_up_to(m, 4).map_err(|e| e.to_string())? {
                    for s in v.krull_schmidt().summands {
                        let part = v.subrep(&BitSet::from_indices(v.dim(), s.coords.iter().copied())).unwrap();
                        check(brute_is_simple(&part), || {
                            format!("{name}: a KS summand of dim {} is not simple", part.dim())
                        })?;
                    }
                    reps += 1;
                }
                pos += 1;
            }
        }
    }
    Ok(format!("{pos} semisimple, {neg} with witnesses, {skipped} not left inductive, {reps} reps decomposed"))
}

fn random_monomial(g: PointedGroup, d: usize, rng: &mut ChaCha8Rng) -> SubmonomialMatrix {
    let mut perm: Vec<usize> = (0..d).collect();
    perm.shuffle(rng);
    let order = g.order() as u32;
    let cols = perm.into_iter().map(|r| Some(Entry::new(r, GroupElem(rng.gen_range(0..order))))).collect();
    SubmonomialMatrix::from_columns(g, d, cols).unwrap()
}

fn decomposition_uniqueness() -> Outcome {
    let mut pools: Vec<(GLinearMonoid, Vec<Representation>)> = Vec::new();
    let mut fixtures = vec![
        si(2, PointedGroup::trivial()).monoid().clone(),
        si(2, z(2)).monoid().clone(),
        si(3, PointedGroup::trivial()).monoid().clone(),
        null_monoid(2, PointedGroup::trivial()),
        null_monoid(2, z(2)),
    ];
    fixtures.extend(path_fixtures(PointedGroup::trivial()).into_iter().map(|(_, m)| m));
    for m in fixtures {
        let pool: Vec<Representation> =
            representations_up_to(&m, 3).map_err(|e| e.to_string())?.into_iter().filter(|r| r.dim() > 0).collect();
        pools.push((m, pool));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let mut distinct_chains = 0;
    for trial in 0..200 {
        let (m, pool) = &pools[rng.gen_range(0..pools.len())];
        let target = rng.gen_range(1..=5);
        let mut v = Representation::zero(m.clone());
        loop {
            let fits: Vec<&Representation> = pool.iter().filter(|r| v.dim() + r.dim() <= target).collect();
            if fits.is_empty() {
                break;
            }
            v = v.direct_sum(fits[rng.gen_range(0..fits.len())]).unwrap();
        }
        Representation::new(m.clone(), v.dim(), v.actions().to_vec()).map_err(|e| format!("trial {trial}: {e}"))?;
        let p = random_monomial(m.group(), v.dim(), &mut rng);
        let w = v.change_basis(&p);
        check(v.krull_schmidt().keys() == w.krull_schmidt().keys(), || {
            format!("trial {trial}: KS keys change with basis")
        })?;
        let first = v.jordan_holder(TieBreak::First);
        let last = v.jordan_holder(TieBreak::Last);
        let moved = w.jordan_holder(TieBreak::First);
        if first.chain != last.chain {
            distinct_chains += 1;
        }
        check(first.factor_keys() == last.factor_keys() && first.factor_keys() == moved.factor_keys(), || {
            format!("trial {trial}: JH factors differ")
        })?;
        for series in [&first, &last] {
            for (k, pair) in series.chain.windows(2).enumerate() {
                check(v.is_closed(&pair[1]), || format!("trial {trial}: chain step is not a subrep"))?;
                let upper = v.subrep(&pair[1]).unwrap();
                let lower: Vec<usize> = pair[0].iter().map(|x| pair[1].iter().position(|y| y == x).unwrap()).collect();
                let q = upper.quotient(&BitSet::from_indices(upper.dim(), lower)).unwrap();
                check(brute_is_simple(&q) && q.iso_key() == series.factors[k], || {
                    format!("trial {trial}: factor {k} is wrong")
                })?;
            }
        }
    }
    Ok(format!("200 reps, {distinct_chains} with distinct First/Last chains"))
}

fn vsh_classification() -> Outcome {
    let mut pairs = 0;
    for g in groups(2) {
        for n in 1..=3 {
            let s_inv = si(n, g);
            let m = s_inv.monoid();
            let mut items: Vec<(Vec<usize>, Vec<SubmonomialMatrix>, Representation)> = Vec::new();
            for mask in 1u32..1 << n {
                let s: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                let e = s_inv.element_of(&SubmonomialMatrix::diagonal_idempotent(g, n, &s)).unwrap();
                let local = m.maximal_subgroup(e).map_err(|e| e.to_string())?;
                for h in subgroups_avoiding_scalars(&local.monoid).map_err(|e| e.to_string())? {
                    let mats: Vec<SubmonomialMatrix> =
                        h.iter().map(|&x| s_inv.matrix_of(local.embed(Some(x)))).collect();
                    let v = v_sh(&s_inv, &s, &mats).map_err(|e| e.to_string())?;
                    check(fone_core::cmp::radical(&v).is_empty() && brute_is_simple(&v.rep), || {
                        format!("n={n}: V_(S,H) is not simple")
                    })?;
                    items.push((s.clone(), mats, v.rep));
                }
            }
            for a in &items {
                for b in &items {
                    let claimed = vsh_isomorphic(n, g, (&a.0, &a.1), (&b.0, &b.1)).map_err(|e| e.to_string())?;
                    check(claimed == iso(&a.2, &b.2), || {
                        format!("n={n} |G|={}: S={:?} vs T={:?}", g.order(), a.0, b.0)
                    })?;
                    pairs += 1;
                }
            }
        }
    }
    Ok(format!("{pairs} ordered pairs"))
}

fn phi_check() -> Outcome {
    let mut reps = 0;
    let mut twisted = Vec::new();
    for g in groups(3) {
        for n in 1..=3 {
            let s_inv = si(n, g);
            let m = s_inv.monoid();
            let els = m.elements();
            let fact: usize = (1..=n).product();
            for h in normal_subgroups(n).map_err(|e| e.to_string())? {
                let phi = PhiH::new(n, g, &h).map_err(|e| e.to_string())?;
                check(phi.dim() * h.len() == fact, || format!("n={n}: dim {} for |H|={}", phi.dim(), h.len()))?;
                let mats: Vec<SubmonomialMatrix> = els.iter().map(|&x| phi.matrix(&s_inv.matrix_of(x))).collect();
                for (x, img) in els.iter().zip(&mats) {
                    let a = s_inv.matrix_of(*x);
                    for bbar in 0..phi.dim() {
                        for abar in 0..phi.dim() {
                            let want = phi_polynomial(&a, phi.cosets(), abar, bbar)
                                .ok_or_else(|| format!("n={n}: polynomial leaves Ĝ at {}", m.display(*x)))?;
                            let got = img.entry(bbar).filter(|e| e.row() == abar).map(|e| e.label);
                            check(want == got, || {
                                format!("n={n} |G|={}: entry ({abar},{bbar}) of {}", g.order(), m.display(*x))
                            })?;
                        }
                    }
                }
                for (i, &x) in els.iter().enumerate() {
                    for (j, &y) in els.iter().enumerate() {
                        let k = m.element_index(m.mul(x, y));
                        check(mats[k] == compose(&mats[i], &mats[j]), || {
                            format!("n={n}: closed form not multiplicative")
                        })?;
                    }
                }
                let linear = g.elements().all(|x| g.pow(x, n) == x);
                match phi.rep(&s_inv) {
                    Ok(r) => {
                        check(linear && r.dim() == phi.dim(), || "unexpected representation".into())?;
                        reps += 1;
                    }
                    Err(CmpError::ScalarTwist) if !linear => twisted.push(format!("n={n},|G|={}", g.order())),
                    Err(e) => return Err(format!("n={n} |G|={}: {e}", g.order())),
                }
            }
        }
    }
    twisted.dedup();
    Ok(format!("{reps} reps validated; ScalarTwist where gⁿ≠g: {}", twisted.join(" ")))
}

fn ordered_check() -> Outcome {
    let mut reps = 0;
    let (mut respecting, mut all_complete) = (0, true);
    for g in groups(2) {
        let s_inv = si(2, g);
        let order = OrderedMonoid::natural(&s_inv);
        order.validate().map_err(|e| e.to_string())?;
        let defining = Representation::defining(&s_inv);
        for v in representations_up_to(s_inv.monoid(), 4).map_err(|e| e.to_string())? {
            let verdict = order.respects_joins(&v).map_err(|e| e.to_string())?;
            all_complete &= verdict.complete;
            let factors_defining = v.krull_schmidt().summands.iter().all(|s| {
                let part = v.subrep(&BitSet::from_indices(v.dim(), s.coords.iter().copied())).unwrap();
                brute_isomorphic(&part, &defining)
            });
            check(verdict.respects == factors_defining, || {
                format!(
                    "|G|={}: dim {} rep, respects {} vs KS {}",
                    g.order(),
                    v.dim(),
                    verdict.respects,
                    factors_defining
                )
            })?;
            respecting += usize::from(verdict.respects);
            reps += 1;
        }
    }
    check(all_complete, || "join check was not exhaustive".into())?;
    Ok(format!("{reps} reps, {respecting} respect joins"))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("element-count", 5, element_count),
        ("pushout-pullback", 30, universal_properties),
        ("wagner-preston", 10, wagner_preston_check),
        ("cmp-round-trips", 120, cmp_check),
        ("semisimplicity", 60, trichotomy),
        ("decomposition-uniqueness", 60, decomposition_uniqueness),
        ("vsh-classification", 60, vsh_classification),
        ("phi-h", 30, phi_check),
        ("ordered-joins", 120, ordered_check),
    ];
    let mut failed = 0;
    for (k, (name, limit, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let took = start.elapsed();
        let in_time = took < Duration::from_secs(*limit);
        let (ok, detail) = match outcome {
            Ok(d) if in_time => (true, d),
            Ok(d) => (false, format!("{d}; over time")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "{} {} {name}: {detail} ({:.2}s, limit {limit}s)",
            if ok { "PASS" } else { "FAIL" },
            k + 1,
            took.as_secs_f64()
        );
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
