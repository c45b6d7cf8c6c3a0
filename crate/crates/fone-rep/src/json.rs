//! Canonical JSON codecs. `serde_json::Map` is a `BTreeMap` here, so every
//! object serialises with sorted keys.

use std::collections::BTreeMap;

use fone_core::fvect::{Entry, SubmonomialMatrix};
use fone_core::monoid::{path_monoid, Arrow, MonoidBuilder, Quiver, Relation, RelationRhs};
use fone_core::ordered::OrderedMonoid;
use fone_core::{Elem, GLinearMonoid, GroupElem, MElem, PointedGroup, Representation};
use serde_json::{json, Value};

use crate::CliError;

fn invalid(msg: impl Into<String>) -> CliError {
    CliError::Invalid { msg: msg.into(), witness: None }
}

fn field<'a>(v: &'a Value, key: &str) -> Result<&'a Value, CliError> {
    v.get(key).ok_or_else(|| invalid(format!("missing field {key:?}")))
}

fn as_str(v: &Value, what: &str) -> Result<String, CliError> {
    v.as_str().map(str::to_owned).ok_or_else(|| invalid(format!("{what} must be a string")))
}

fn as_usize(v: &Value, what: &str) -> Result<usize, CliError> {
    v.as_u64().map(|x| x as usize).ok_or_else(|| invalid(format!("{what} must be a non-negative integer")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>, CliError> {
    v.as_array().ok_or_else(|| invalid(format!("{what} must be a list")))
}

pub fn parse_text(text: &str) -> Result<Value, CliError> {
    serde_json::from_str(text).map_err(|e| invalid(format!("malformed JSON: {e}")))
}

pub fn group_to_json(g: PointedGroup) -> Value {
    json!(g.cyclic_orders())
}

pub fn group_from_json(v: &Value) -> Result<PointedGroup, CliError> {
    let orders = as_array(v, "group")?
        .iter()
        .map(|m| m.as_u64().and_then(|m| u32::try_from(m).ok()).ok_or_else(|| invalid("group orders must be integers")))
        .collect::<Result<Vec<u32>, _>>()?;
    PointedGroup::new(&orders).map_err(|e| invalid(format!("bad group: {e}")))
}

pub fn elem_to_json(g: PointedGroup, x: GroupElem) -> Value {
    json!(g.residues(x))
}

pub fn elem_from_json(g: PointedGroup, v: &Value) -> Result<GroupElem, CliError> {
    let residues = as_array(v, "group element")?
        .iter()
        .map(|r| r.as_u64().and_then(|r| u32::try_from(r).ok()).ok_or_else(|| invalid("residues must be integers")))
        .collect::<Result<Vec<u32>, _>>()?;
    g.from_residues(&residues).map_err(|e| invalid(format!("bad group element {residues:?}: {e}")))
}

/// Column entries with 1-based rows.
pub fn entries_to_json(a: &SubmonomialMatrix) -> Value {
    let g = a.group();
    Value::Array(
        a.entries()
            .iter()
            .map(|e| match e {
                None => Value::Null,
                Some(e) => json!({"row": e.row() + 1, "g": elem_to_json(g, e.label)}),
            })
            .collect(),
    )
}

pub fn entries_from_json(g: PointedGroup, rows: usize, v: &Value) -> Result<SubmonomialMatrix, CliError> {
    let cols = as_array(v, "matrix entries")?
        .iter()
        .map(|e| {
            if e.is_null() {
                return Ok(None);
            }
            let row = as_usize(field(e, "row")?, "row")?;
            if row == 0 {
                return Err(invalid("rows are 1-based"));
            }
            Ok(Some(Entry::new(row - 1, elem_from_json(g, field(e, "g")?)?)))
        })
        .collect::<Result<Vec<_>, _>>()?;
    SubmonomialMatrix::from_columns(g, rows, cols).map_err(|e| invalid(format!("bad matrix: {e}")))
}

pub fn matrix_to_json(a: &SubmonomialMatrix) -> Value {
    json!({"rows": a.rows(), "cols": a.cols(), "entries": entries_to_json(a)})
}

pub fn matrix_from_json(g: PointedGroup, v: &Value) -> Result<SubmonomialMatrix, CliError> {
    let rows = as_usize(field(v, "rows")?, "rows")?;
    let cols = as_usize(field(v, "cols")?, "cols")?;
    let a = entries_from_json(g, rows, field(v, "entries")?)?;
    if a.cols() != cols {
        return Err(invalid(format!("matrix declares {cols} columns but lists {}", a.cols())));
    }
    Ok(a)
}

pub fn monoid_to_json(m: &GLinearMonoid) -> Value {
    let g = m.group();
    let mut mult = Vec::with_capacity(m.dim() * m.dim());
    for l in 0..m.dim() {
        for r in 0..m.dim() {
            let res = match m.product(l, r) {
                None => Value::Null,
                Some(p) => json!({"g": elem_to_json(g, p.g), "b": m.name(p.b)}),
            };
            mult.push(json!({"l": m.name(l), "r": m.name(r), "res": res}));
        }
    }
    json!({
        "group": group_to_json(g),
        "basis": m.names(),
        "one": m.name(m.one()),
        "mult": mult,
    })
}

pub fn monoid_from_json(v: &Value) -> Result<GLinearMonoid, CliError> {
    let g = group_from_json(field(v, "group")?)?;
    let names = as_array(field(v, "basis")?, "basis")?
        .iter()
        .map(|n| as_str(n, "basis name"))
        .collect::<Result<Vec<_>, _>>()?;
    let one = as_str(field(v, "one")?, "one")?;
    let mut b = MonoidBuilder::new(g, names, &one).map_err(CliError::from)?;
    for entry in as_array(field(v, "mult")?, "mult")? {
        let l = b.index_of(&as_str(field(entry, "l")?, "l")?)?;
        let r = b.index_of(&as_str(field(entry, "r")?, "r")?)?;
        if b.is_set(l, r) {
            return Err(invalid(format!("product {}·{} listed twice", field(entry, "l")?, field(entry, "r")?)));
        }
        let res = field(entry, "res")?;
        let product = if res.is_null() {
            None
        } else {
            let label = elem_from_json(g, field(res, "g")?)?;
            Some(Elem { g: label, b: b.index_of(&as_str(field(res, "b")?, "b")?)? })
        };
        b.set(l, r, product)?;
    }
    Ok(b.build()?)
}

pub fn rep_to_json(v: &Representation) -> Value {
    let m = v.monoid();
    let action: serde_json::Map<String, Value> =
        (0..m.dim()).map(|b| (m.name(b).to_owned(), entries_to_json(v.action(b)))).collect();
    json!({"dim": v.dim(), "action": action})
}

pub fn rep_from_json(m: &GLinearMonoid, v: &Value) -> Result<Representation, CliError> {
    let dim = as_usize(field(v, "dim")?, "dim")?;
    let action = field(v, "action")?.as_object().ok_or_else(|| invalid("action must be an object"))?;
    if let Some(extra) = action.keys().find(|k| m.index_of(k).is_none()) {
        return Err(invalid(format!("action names unknown basis element {extra:?}")));
    }
    let mats = (0..m.dim())
        .map(|b| {
            let name = m.name(b);
            let entries = action.get(name).ok_or_else(|| invalid(format!("no action given for {name:?}")))?;
            let a = entries_from_json(m.group(), dim, entries)?;
            if a.cols() != dim {
                return Err(invalid(format!("action of {name:?} has {} columns, expected {dim}", a.cols())));
            }
            Ok(a)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(Representation::new(m.clone(), dim, mats)?)
}

/// Elements by their display names: `0`, a basis name, or `[r..]·name`.
pub fn element_names(m: &GLinearMonoid) -> BTreeMap<String, MElem> {
    m.elements().into_iter().map(|x| (m.display(x), x)).collect()
}

pub fn element_from_json(names: &BTreeMap<String, MElem>, v: &Value) -> Result<MElem, CliError> {
    let s = as_str(v, "element")?;
    names.get(&s).copied().ok_or_else(|| invalid(format!("unknown element {s:?}")))
}

/// A list of pairs `[a, b]` meaning `a ≼ b`.
pub fn order_from_json(m: &GLinearMonoid, v: &Value) -> Result<OrderedMonoid, CliError> {
    let names = element_names(m);
    let pairs = as_array(v, "order")?
        .iter()
        .map(|p| match p.as_array().map(Vec::as_slice) {
            Some([a, b]) => Ok((element_from_json(&names, a)?, element_from_json(&names, b)?)),
            _ => Err(invalid("order pairs must be two-element lists")),
        })
        .collect::<Result<Vec<_>, _>>()?;
    OrderedMonoid::from_pairs(m.clone(), &pairs).map_err(|e| invalid(format!("bad order: {e}")))
}

pub fn order_to_json(o: &OrderedMonoid) -> Value {
    let m = o.monoid();
    Value::Array(o.strict_pairs().into_iter().map(|(a, b)| json!([m.display(a), m.display(b)])).collect())
}

/// `{"vertices": [..], "arrows": [{"name", "source", "target"}], "relations":
/// [{"lhs": [arrow..], "rhs": null | {"vertex": v} | {"path": [arrow..]}}]}`.
pub fn quiver_from_json(v: &Value, g: PointedGroup) -> Result<GLinearMonoid, CliError> {
    let vertices = as_array(field(v, "vertices")?, "vertices")?
        .iter()
        .map(|n| as_str(n, "vertex"))
        .collect::<Result<Vec<_>, _>>()?;
    let vertex = |n: &Value| -> Result<usize, CliError> {
        let s = as_str(n, "vertex")?;
        vertices.iter().position(|x| *x == s).ok_or_else(|| invalid(format!("unknown vertex {s:?}")))
    };
    let arrows = as_array(field(v, "arrows")?, "arrows")?
        .iter()
        .map(|a| {
            Ok(Arrow {
                name: as_str(field(a, "name")?, "arrow name")?,
                source: vertex(field(a, "source")?)?,
                target: vertex(field(a, "target")?)?,
            })
        })
        .collect::<Result<Vec<_>, CliError>>()?;
    let path = |p: &Value| -> Result<Vec<usize>, CliError> {
        as_array(p, "path")?
            .iter()
            .map(|n| {
                let s = as_str(n, "arrow")?;
                arrows.iter().position(|a| a.name == s).ok_or_else(|| invalid(format!("unknown arrow {s:?}")))
            })
            .collect()
    };
    let relations = match v.get("relations") {
        None => Vec::new(),
        Some(rs) => as_array(rs, "relations")?
            .iter()
            .map(|r| {
                let lhs = path(field(r, "lhs")?)?;
                let rhs = field(r, "rhs")?;
                let rhs = if rhs.is_null() {
                    RelationRhs::Zero
                } else if let Some(x) = rhs.get("vertex") {
                    RelationRhs::Vertex(vertex(x)?)
                } else if let Some(p) = rhs.get("path") {
                    RelationRhs::Path(path(p)?)
                } else {
                    return Err(invalid("rhs must be null, {\"vertex\": ..} or {\"path\": [..]}"));
                };
                Ok(Relation { lhs, rhs })
            })
            .collect::<Result<Vec<_>, _>>()?,
    };
    Ok(path_monoid(&Quiver { vertices, arrows }, &relations, g)?)
}

pub fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("values always serialise");
    s.push('\n');
    s
}
