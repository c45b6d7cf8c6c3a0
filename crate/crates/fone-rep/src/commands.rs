use fone_core::bitset::BitSet;
use fone_core::cmp::{
    all_simples, coset_rep, induce, is_semisimple, normal_subgroups, radical, Perm, PhiH, Semisimplicity,
    GROUP_ORDER_CAP,
};
use fone_core::monoid::{null_monoid, SymmetricInverse};
use fone_core::ordered::OrderedMonoid;
use fone_core::rep::{TieBreak, ENUM_DIM_CAP};
use fone_core::{GLinearMonoid, PointedGroup, Representation};
use serde_json::{json, Value};

use crate::json::{
    element_from_json, element_names, group_to_json, monoid_to_json, order_to_json, quiver_from_json, rep_to_json,
};
use crate::CliError;

/// Size caps shared by the commands.
#[derive(Clone, Copy, Debug)]
pub struct Caps {
    /// Largest representation dimension searched.
    pub max_dim: usize,
    /// Largest maximal subgroup `Ĝ_J \ {0}` handled.
    pub max_subgroup_order: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { max_dim: 4, max_subgroup_order: GROUP_ORDER_CAP }
    }
}

impl Caps {
    fn check_dim(&self) -> Result<(), CliError> {
        if self.max_dim > ENUM_DIM_CAP {
            return Err(CliError::Cap(format!(
                "--max-dim {} exceeds the enumeration cap {ENUM_DIM_CAP}",
                self.max_dim
            )));
        }
        Ok(())
    }

    fn check_subgroups(&self, m: &GLinearMonoid) -> Result<(), CliError> {
        let report = m.j_classes();
        for c in report.regular_nonzero() {
            let h = m.maximal_subgroup(report.classes[c].idempotents[0])?;
            let order = h.monoid.size() - 1;
            if order > self.max_subgroup_order.min(GROUP_ORDER_CAP) {
                return Err(CliError::Cap(format!(
                    "maximal subgroup of order {order} exceeds --max-subgroup-order {}",
                    self.max_subgroup_order
                )));
            }
        }
        Ok(())
    }
}

fn ones(set: &BitSet) -> Vec<usize> {
    set.iter().map(|i| i + 1).collect()
}

fn names(m: &GLinearMonoid, basis: &[usize]) -> Vec<String> {
    basis.iter().map(|&b| m.name(b).to_owned()).collect()
}

fn verdict_json(v: &Semisimplicity) -> Value {
    match v {
        Semisimplicity::Semisimple => json!({"verdict": "semisimple"}),
        Semisimplicity::Unknown => json!({"verdict": "unknown"}),
        Semisimplicity::NotSemisimple(w) => json!({
            "verdict": "not_semisimple",
            "witness": {"rep": rep_to_json(&w.rep), "sub": ones(&w.sub)},
        }),
    }
}

fn simples_json(m: &GLinearMonoid) -> Result<Value, CliError> {
    let simples = all_simples(m)?;
    Ok(Value::Array(
        simples
            .iter()
            .map(|s| json!({"apex": s.apex, "dim": s.rep.dim(), "key": s.rep.iso_key().to_string()}))
            .collect(),
    ))
}

pub fn analyze(m: &GLinearMonoid, caps: Caps) -> Result<Value, CliError> {
    caps.check_dim()?;
    let report = m.j_classes();
    let mut classes = Vec::new();
    for (i, c) in report.classes.iter().enumerate() {
        let subgroup = if c.regular && !c.is_zero {
            let h = m.maximal_subgroup(c.idempotents[0])?;
            let order = h.monoid.size() - 1;
            if order > caps.max_subgroup_order {
                return Err(CliError::Cap(format!("maximal subgroup of order {order} exceeds the cap")));
            }
            json!({"order": order, "idempotent": m.display(Some(h.idempotent)), "monoid": monoid_to_json(&h.monoid)})
        } else {
            Value::Null
        };
        let below: Vec<usize> = (0..report.classes.len()).filter(|&d| d != i && report.leq(d, i)).collect();
        classes.push(json!({
            "index": i,
            "zero": c.is_zero,
            "members": names(m, &c.members),
            "regular": c.regular,
            "idempotents": c.idempotents.iter().map(|&e| m.display(Some(e))).collect::<Vec<_>>(),
            "maximal_subgroup": subgroup,
            "below": below,
        }));
    }
    let left = m.is_left_inductive();
    let simples = if left { simples_json(m)? } else { Value::Null };
    Ok(json!({
        "monoid": {"size": m.size(), "dim": m.dim(), "group": group_to_json(m.group())},
        "flags": {
            "regular": m.is_regular(),
            "inverse": m.is_inverse(),
            "left_inductive": left,
            "right_inductive": m.is_right_inductive(),
        },
        "j_classes": classes,
        "idempotents": m.idempotents().into_iter().map(|e| m.display(Some(e))).collect::<Vec<_>>(),
        "semisimple": verdict_json(&is_semisimple(m, caps.max_dim)),
        "simples": simples,
    }))
}

pub fn make_in(n: usize, group: PointedGroup) -> Result<Value, CliError> {
    let si = SymmetricInverse::new(n, group)?;
    Ok(monoid_to_json(si.monoid()))
}

pub fn make_null(n: usize, group: PointedGroup) -> Result<Value, CliError> {
    if n == 0 {
        return Err(CliError::Invalid { msg: "null monoid needs n >= 1".into(), witness: None });
    }
    Ok(monoid_to_json(&null_monoid(n, group)))
}

pub fn make_path(quiver: &Value, group: PointedGroup) -> Result<Value, CliError> {
    Ok(monoid_to_json(&quiver_from_json(quiver, group)?))
}

pub fn decompose(v: &Representation) -> Value {
    let ks = v.krull_schmidt();
    let jh = v.jordan_holder(TieBreak::First);
    json!({
        "dim": v.dim(),
        "indecomposable": v.is_indecomposable(),
        "krull_schmidt": ks.summands.iter().map(|s| json!({
            "coords": s.coords.iter().map(|c| c + 1).collect::<Vec<_>>(),
            "dim": s.coords.len(),
            "key": s.key.to_string(),
        })).collect::<Vec<_>>(),
        "jordan_holder": jh.factor_keys().iter().map(|k| k.to_string()).collect::<Vec<_>>(),
        "chain": jh.chain.iter().map(ones).collect::<Vec<_>>(),
    })
}

pub fn check_rep(v: &Representation) -> Value {
    let m = v.monoid();
    json!({
        "valid": true,
        "dim": v.dim(),
        "simple": v.is_simple(),
        "indecomposable": v.is_indecomposable(),
        "apex": v.apex(),
        "annihilator": names(m, &v.annihilator().to_vec()),
        "key": v.iso_key().to_string(),
    })
}

pub fn simples(m: &GLinearMonoid, caps: Caps) -> Result<Value, CliError> {
    caps.check_subgroups(m)?;
    simples_json(m)
}

pub fn semisimple(m: &GLinearMonoid, caps: Caps) -> Result<Value, CliError> {
    caps.check_dim()?;
    Ok(verdict_json(&is_semisimple(m, caps.max_dim)))
}

/// `W↑_e` for `W` the coset representation of `Ĝ_J` on `H`, given as
/// ambient element names.
pub fn induce_coset(m: &GLinearMonoid, idempotent: &str, subgroup: &Value, caps: Caps) -> Result<Value, CliError> {
    caps.check_subgroups(m)?;
    let table = element_names(m);
    let e = element_from_json(&table, &Value::String(idempotent.to_owned()))?
        .ok_or_else(|| CliError::Invalid { msg: "the idempotent must be nonzero".into(), witness: None })?;
    let h = m.maximal_subgroup(e)?;
    let list = subgroup
        .as_array()
        .ok_or_else(|| CliError::Invalid { msg: "subgroup must be a list of element names".into(), witness: None })?;
    let mut sub = Vec::new();
    for x in list {
        let x = element_from_json(&table, x)?.and_then(|x| h.locate(x)).ok_or_else(|| CliError::Invalid {
            msg: format!("{x} is not in the maximal subgroup at {idempotent}"),
            witness: None,
        })?;
        sub.push(x);
    }
    let w = coset_rep(&h.monoid, &sub)?;
    let induced = induce(&w, &h)?;
    let rad = radical(&induced);
    let simple = induced.rep.quotient(&rad)?;
    Ok(json!({
        "base": rep_to_json(&w),
        "induced": rep_to_json(&induced.rep),
        "radical": ones(&rad),
        "simple": rep_to_json(&simple),
    }))
}

/// A normal subgroup of `S_n` by name (`1`, `An`, `Sn`, `V4`, with `n`
/// spelled out) or as a JSON list of 1-based permutations in one-line form.
pub fn parse_normal_subgroup(n: usize, spec: &str) -> Result<Vec<Perm>, CliError> {
    let bad = |msg: String| CliError::Invalid { msg, witness: None };
    let normals = normal_subgroups(n)?;
    let fact: usize = (1..=n).product();
    let by_size = |size: usize| normals.iter().find(|h| h.len() == size).cloned();
    let found = match spec {
        "1" | "trivial" => by_size(1),
        s if s == format!("S{n}") || s == "Sn" => by_size(fact),
        s if (s == format!("A{n}") || s == "An") && n >= 2 => by_size(fact / 2),
        "V4" if n == 4 => by_size(4),
        s if s.trim_start().starts_with('[') => {
            let v: Value = serde_json::from_str(s).map_err(|e| bad(format!("bad subgroup JSON: {e}")))?;
            let perms = v
                .as_array()
                .ok_or_else(|| bad("subgroup must be a list of permutations".into()))?
                .iter()
                .map(|p| {
                    p.as_array()
                        .and_then(|p| {
                            p.iter()
                                .map(|k| k.as_u64().filter(|&k| k >= 1).map(|k| k as usize - 1))
                                .collect::<Option<Perm>>()
                        })
                        .ok_or_else(|| bad("permutations are lists of 1-based images".into()))
                })
                .collect::<Result<Vec<Perm>, _>>()?;
            let mut sorted = perms.clone();
            sorted.sort();
            sorted.dedup();
            return Ok(sorted);
        }
        _ => None,
    };
    found.ok_or_else(|| bad(format!("unknown normal subgroup {spec:?} of S{n}")))
}

pub fn phi_h(n: usize, group: PointedGroup, subgroup: &str) -> Result<Value, CliError> {
    let h = parse_normal_subgroup(n, subgroup)?;
    let phi = PhiH::new(n, group, &h)?;
    let si = SymmetricInverse::new(n, group)?;
    Ok(rep_to_json(&phi.rep(&si)?))
}

/// The natural order, if `m` is some `I_n(Ĝ)`.
fn natural_order(m: &GLinearMonoid) -> Result<OrderedMonoid, CliError> {
    for n in 1..=4 {
        let si = SymmetricInverse::new(n, m.group())?;
        if si.monoid().dim() > m.dim() {
            break;
        }
        if si.monoid() == m {
            return Ok(OrderedMonoid::natural(&si));
        }
    }
    Err(CliError::Invalid { msg: "no order given and the monoid is not I_n(G) with n <= 4".into(), witness: None })
}

pub fn resolve_order(m: &GLinearMonoid, order: Option<&Value>) -> Result<OrderedMonoid, CliError> {
    match order {
        Some(v) => crate::json::order_from_json(m, v),
        None => natural_order(m),
    }
}

pub fn ordered_check(order: &OrderedMonoid) -> Value {
    let m = order.monoid();
    let systems: Vec<Vec<String>> =
        order.complete_orthogonal_systems().iter().map(|s| s.iter().map(|&x| m.display(x)).collect()).collect();
    let base = json!({"order": order_to_json(order), "orthogonal_systems": systems});
    let mut out = match order.validate() {
        Ok(v) => json!({"valid": true, "checked": v.checked, "complete": v.complete}),
        Err(e) => json!({"valid": false, "violation": e.to_string()}),
    };
    for (k, v) in base.as_object().expect("object") {
        out[k] = v.clone();
    }
    out
}

pub fn respects_joins(order: &OrderedMonoid, v: &Representation) -> Result<Value, CliError> {
    let m = order.monoid();
    let check = order.respects_joins(v)?;
    Ok(json!({
        "respects": check.respects,
        "complete": check.complete,
        "witness": check.witness.map(|w| w.iter().map(|&x| m.display(x)).collect::<Vec<_>>()),
    }))
}
