//! Reader for the catalog data files.

use std::collections::BTreeMap;

use super::{Bindings, CatalogEntry, Constraint, Family, Instance, PropertyLine, Remark};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::exact::{parse_lincomb, parse_matrix_rows, parse_scalar, canonical_var, Gq, RatFunc};
use crate::matrix::{from_printed_rows, Matrix};

fn semantic(line: usize, msg: impl Into<String>) -> Error {
    Error::Semantic { line, msg: msg.into() }
}

pub(crate) fn constant(text: &str, line: usize) -> Result<Gq> {
    parse_scalar(text)
        .map_err(|e| e.at_line(line))?
        .as_constant()
        .ok_or_else(|| semantic(line, format!("`{}` is not a constant", text.trim())))
}

/// `l != 0, 1` or `l = 1/2`.
pub(crate) fn parse_constraint(text: &str, line: usize) -> Result<Constraint> {
    if let Some((name, rest)) = text.split_once("!=") {
        let values = rest.split(',').map(|v| constant(v, line)).collect::<Result<_>>()?;
        Ok(Constraint::NotIn(canonical_var(name.trim()), values))
    } else if let Some((name, rest)) = text.split_once('=') {
        Ok(Constraint::Equals(canonical_var(name.trim()), constant(rest, line)?))
    } else {
        Err(semantic(line, format!("cannot read constraint `{text}`")))
    }
}

/// `name=v,name=v` into bindings.
pub(crate) fn parse_bindings(text: &str, line: usize) -> Result<Bindings> {
    let mut out = BTreeMap::new();
    for part in text.split(',').filter(|s| !s.trim().is_empty()) {
        let (name, value) =
            part.split_once('=').ok_or_else(|| semantic(line, format!("expected name=value, got `{part}`")))?;
        out.insert(canonical_var(name.trim()), constant(value, line)?);
    }
    Ok(out)
}

/// `ID` or `ID(name=v,...)`, with the given bracket pair.
fn parse_instance(text: &str, open: char, close: char, line: usize) -> Result<Instance> {
    match text.split_once(open) {
        Some((id, rest)) => {
            let inner = rest
                .strip_suffix(close)
                .ok_or_else(|| semantic(line, format!("unclosed `{open}` in `{text}`")))?;
            Ok(Instance { id: id.to_string(), bindings: parse_bindings(inner, line)? })
        }
        None => Ok(Instance { id: text.to_string(), bindings: BTreeMap::new() }),
    }
}

fn parse_family(name: &str, line: usize) -> Result<Family> {
    Family::from_name(name).ok_or_else(|| semantic(line, format!("unknown family `{name}`")))
}

fn product_line(text: &str, line: usize) -> Result<Option<(usize, usize, Vec<RatFunc>)>> {
    let Some((lhs, rhs)) = text.split_once('=') else { return Ok(None) };
    let idx: Vec<usize> = lhs
        .split_whitespace()
        .map(|t| t.strip_prefix('e').and_then(|d| d.parse().ok()))
        .collect::<Option<_>>()
        .unwrap_or_default();
    match idx[..] {
        [i, j] if (1..=3).contains(&i) && (1..=3).contains(&j) => {
            Ok(Some((i, j, parse_lincomb(rhs, 3).map_err(|e| e.at_line(line))?)))
        }
        _ => Ok(None),
    }
}

fn matrix(text: &str, line: usize) -> Result<Matrix<RatFunc>> {
    let rows = parse_matrix_rows(text).map_err(|e| e.at_line(line))?;
    let m = from_printed_rows(rows).map_err(|e| e.at_line(line))?;
    if m.rows() != 3 || m.cols() != 3 {
        return Err(semantic(line, "expected a 3x3 matrix"));
    }
    Ok(m)
}

struct Draft {
    entry: CatalogEntry,
    f: BTreeMap<usize, Matrix<RatFunc>>,
    c: Option<Matrix<RatFunc>>,
}

/// Entries of one `.cat` file.
pub fn parse_entries(text: &str) -> Result<Vec<CatalogEntry>> {
    let mut family = None;
    let mut family_constraints = Vec::new();
    let mut out = Vec::new();
    let mut cur: Option<Draft> = None;
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        if let Some(name) = t.strip_prefix("family ") {
            family = Some(parse_family(name.trim(), line)?);
            family_constraints.clear();
            continue;
        }
        if let Some(id) = t.strip_prefix("entry ") {
            let fam = family.ok_or_else(|| semantic(line, "entry before family"))?;
            if cur.is_some() {
                return Err(semantic(line, "entry inside entry"));
            }
            cur = Some(Draft {
                entry: CatalogEntry {
                    id: id.trim().to_string(),
                    family: fam,
                    case: None,
                    constraints: family_constraints.clone(),
                    cocycle: None,
                    raw: None,
                    witness: None,
                    table: Algebra::zero(3),
                },
                f: BTreeMap::new(),
                c: None,
            });
            continue;
        }
        let Some(d) = cur.as_mut() else {
            match t.strip_prefix("params ") {
                Some(c) => family_constraints.push(parse_constraint(c, line)?),
                None => return Err(semantic(line, format!("unexpected `{t}` outside an entry"))),
            }
            continue;
        };
        if t == "end" {
            let mut d = cur.take().unwrap();
            if let Some(c) = d.c {
                if d.f.len() != 3 {
                    return Err(semantic(line, format!("{} needs f(e1), f(e2), f(e3)", d.entry.id)));
                }
                d.entry.cocycle = Some((d.f.into_values().collect(), c));
            }
            d.entry.constraints = merge_constraints(d.entry.constraints);
            out.push(d.entry);
            continue;
        }
        if let Some(c) = t.strip_prefix("params ") {
            d.entry.constraints.push(parse_constraint(c, line)?);
        } else if let Some(c) = t.strip_prefix("case ") {
            d.entry.case = Some(c.trim().to_string());
        } else if let Some(rest) = t.strip_prefix("f(e") {
            let (idx, m) = rest.split_once(") =").ok_or_else(|| semantic(line, "expected f(eN) = [[..]]"))?;
            let i: usize = idx.parse().map_err(|_| semantic(line, "bad basis index"))?;
            if !(1..=3).contains(&i) {
                return Err(semantic(line, "bad basis index"));
            }
            d.f.insert(i, matrix(m, line)?);
        } else if let Some(m) = t.strip_prefix("C =") {
            d.c = Some(matrix(m, line)?);
        } else if let Some(m) = t.strip_prefix("witness T =") {
            d.entry.witness = Some(matrix(m, line)?);
        } else if let Some(p) = t.strip_prefix("raw ") {
            let (i, j, v) = product_line(p, line)?.ok_or_else(|| semantic(line, "expected a product"))?;
            d.entry.raw.get_or_insert_with(|| Algebra::zero(3)).set_product(i - 1, j - 1, v);
        } else if let Some((i, j, v)) = product_line(t, line)? {
            d.entry.table.set_product(i - 1, j - 1, v);
        } else {
            return Err(semantic(line, format!("cannot read `{t}`")));
        }
    }
    if cur.is_some() {
        return Err(semantic(text.lines().count(), "missing `end`"));
    }
    Ok(out)
}

/// A fixed value overrides exclusions on the same parameter.
fn merge_constraints(cs: Vec<Constraint>) -> Vec<Constraint> {
    let fixed: Vec<String> = cs
        .iter()
        .filter_map(|c| match c {
            Constraint::Equals(n, _) => Some(n.clone()),
            _ => None,
        })
        .collect();
    cs.into_iter().filter(|c| matches!(c, Constraint::Equals(..)) || !fixed.iter().any(|f| f == c.name())).collect()
}

pub fn parse_properties(text: &str) -> Result<Vec<PropertyLine>> {
    let mut family = None;
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        let mut words = t.split_whitespace();
        let head = words.next().unwrap();
        if head == "family" {
            family = Some(parse_family(words.next().unwrap_or(""), line)?);
            continue;
        }
        let property = super::Property::from_name(head)
            .ok_or_else(|| semantic(line, format!("unknown property `{head}`")))?;
        let fam = family.ok_or_else(|| semantic(line, "property before family"))?;
        let members = words.map(|w| parse_instance(w, '[', ']', line)).collect::<Result<_>>()?;
        out.push(PropertyLine { family: fam, property, members });
    }
    Ok(out)
}

pub fn parse_remarks(text: &str) -> Result<Vec<Remark>> {
    let mut family = None;
    let mut out = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let t = raw.split('#').next().unwrap().trim();
        if t.is_empty() {
            continue;
        }
        if let Some(name) = t.strip_prefix("family ") {
            family = Some(parse_family(name.trim(), line)?);
            continue;
        }
        let rest = t.strip_prefix("iso ").ok_or_else(|| semantic(line, format!("cannot read `{t}`")))?;
        let fam = family.ok_or_else(|| semantic(line, "remark before family"))?;
        let instances: Vec<Instance> =
            rest.split_whitespace().map(|w| parse_instance(w, '(', ')', line)).collect::<Result<_>>()?;
        if instances.len() < 2 {
            return Err(semantic(line, "a coincidence needs at least two instances"));
        }
        out.push(Remark { family: fam, line, instances });
    }
    Ok(out)
}
