//! The three-dimensional classification as data: entries, property tables and
//! coincidences between classes, plus batch verification.

pub mod parse;
pub mod verify;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::Path;

use crate::algebra::Algebra;
use crate::cocycle::{Cocycle, Representation};
use crate::error::{Error, Result};
use crate::exact::{Gq, RatFunc, Ring};
use crate::lie::{canonical_lie, LieAlgebra, LieClass, LieTag};
use crate::matrix::Matrix;

pub type Bindings = BTreeMap<String, Gq>;

pub const DATA_FILES: [&str; 7] = ["H.cat", "N.cat", "D1.cat", "Dl.cat", "E.cat", "properties.tbl", "remarks.cat"];

const EMBEDDED: [&str; 7] = [
    include_str!("../../catalog/H.cat"),
    include_str!("../../catalog/N.cat"),
    include_str!("../../catalog/D1.cat"),
    include_str!("../../catalog/Dl.cat"),
    include_str!("../../catalog/E.cat"),
    include_str!("../../catalog/properties.tbl"),
    include_str!("../../catalog/remarks.cat"),
];

pub fn format_bindings(b: &Bindings) -> String {
    b.iter().map(|(k, v)| format!("{k}={v}")).collect::<Vec<_>>().join(",")
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Family {
    H,
    N,
    D1,
    Dl,
    E,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::H, Family::N, Family::D1, Family::Dl, Family::E];

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|f| f.name().eq_ignore_ascii_case(s))
    }

    pub fn name(&self) -> &'static str {
        match self {
            Family::H => "H",
            Family::N => "N",
            Family::D1 => "D1",
            Family::Dl => "Dl",
            Family::E => "E",
        }
    }

    /// The canonical Lie algebra; D_l needs a value for `l` (0 is accepted).
    pub fn lie(&self, b: &Bindings) -> Result<LieAlgebra<Gq>> {
        let (tag, l) = match self {
            Family::H => (LieTag::Heisenberg, None),
            Family::N => (LieTag::N, None),
            Family::D1 => (LieTag::Dl, Some(Gq::one())),
            Family::Dl => (LieTag::Dl, Some(b.get("l").cloned().ok_or_else(|| Error::UnboundVariable("l".into()))?)),
            Family::E => (LieTag::E, None),
        };
        Ok(canonical_lie(tag, l.as_ref()).expect("catalog classes have tables"))
    }

    pub fn expected_class(&self, b: &Bindings) -> Result<LieClass> {
        Ok(match self {
            Family::H => LieClass::new(LieTag::Heisenberg),
            Family::N => LieClass::new(LieTag::N),
            Family::D1 => LieClass::dl(&Gq::one()),
            Family::Dl => {
                let l = b.get("l").ok_or_else(|| Error::UnboundVariable("l".into()))?;
                if l.is_zero() {
                    return Err(Error::ConstraintViolated("l = 0".into()));
                }
                LieClass::dl(l)
            }
            Family::E => LieClass::new(LieTag::E),
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Constraint {
    NotIn(String, Vec<Gq>),
    Equals(String, Gq),
}

impl Constraint {
    pub fn name(&self) -> &str {
        match self {
            Constraint::NotIn(n, _) | Constraint::Equals(n, _) => n,
        }
    }

    pub fn holds(&self, b: &Bindings) -> bool {
        match (self, b.get(self.name())) {
            (_, None) => false,
            (Constraint::NotIn(_, vs), Some(x)) => !vs.contains(x),
            (Constraint::Equals(_, v), Some(x)) => v == x,
        }
    }
}

impl fmt::Display for Constraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constraint::NotIn(n, vs) => {
                write!(f, "{n} != {}", vs.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "))
            }
            Constraint::Equals(n, v) => write!(f, "{n} = {v}"),
        }
    }
}

/// One class of the classification.
#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub id: String,
    pub family: Family,
    pub case: Option<String>,
    pub constraints: Vec<Constraint>,
    /// f(e_i) and q in the standard layout.
    pub cocycle: Option<(Vec<Matrix<RatFunc>>, Matrix<RatFunc>)>,
    /// The product produced by the cocycle when it differs from `table`.
    pub raw: Option<Algebra<RatFunc>>,
    /// An isomorphism from `raw` onto `table`.
    pub witness: Option<Matrix<RatFunc>>,
    pub table: Algebra<RatFunc>,
}

fn eval_algebra(a: &Algebra<RatFunc>, b: &Bindings) -> Result<Algebra<Gq>> {
    a.try_map(|x| x.eval(b))
}

fn eval_matrix(m: &Matrix<RatFunc>, b: &Bindings) -> Result<Matrix<Gq>> {
    m.try_map(|x| x.eval(b))
}

impl CatalogEntry {
    /// Parameter names, including fixed ones.
    pub fn params(&self) -> Vec<String> {
        let mut names: BTreeSet<String> = self.constraints.iter().map(|c| c.name().to_string()).collect();
        let mut add = |x: &RatFunc| names.extend(x.vars());
        self.table.constants().iter().for_each(&mut add);
        if let Some(r) = &self.raw {
            r.constants().iter().for_each(&mut add);
        }
        if let Some(w) = &self.witness {
            w.entries().iter().for_each(&mut add);
        }
        if let Some((f, q)) = &self.cocycle {
            f.iter().flat_map(Matrix::entries).for_each(&mut add);
            q.entries().iter().for_each(&mut add);
        }
        if self.family == Family::Dl {
            names.insert("l".into());
        }
        names.into_iter().collect()
    }

    pub fn fixed(&self, name: &str) -> Option<&Gq> {
        self.constraints.iter().find_map(|c| match c {
            Constraint::Equals(n, v) if n == name => Some(v),
            _ => None,
        })
    }

    /// Parameters that are not fixed by a constraint.
    pub fn free_params(&self) -> Vec<String> {
        self.params().into_iter().filter(|p| self.fixed(p).is_none()).collect()
    }

    /// Adds fixed values and checks every constraint.
    pub fn complete(&self, b: &Bindings) -> Result<Bindings> {
        let params = self.params();
        if let Some(extra) = b.keys().find(|k| !params.contains(k)) {
            return Err(Error::ConstraintViolated(format!("{} has no parameter {extra}", self.id)));
        }
        let mut full = b.clone();
        for p in &params {
            if let (None, Some(v)) = (full.get(p), self.fixed(p)) {
                full.insert(p.clone(), v.clone());
            }
            if !full.contains_key(p) {
                return Err(Error::UnboundVariable(p.clone()));
            }
        }
        if let Some(c) = self.constraints.iter().find(|c| !c.holds(&full)) {
            return Err(Error::ConstraintViolated(format!("{}: {c}", self.id)));
        }
        Ok(full)
    }

    pub fn instantiate(&self, b: &Bindings) -> Result<Algebra<Gq>> {
        let full = self.complete(b)?;
        eval_algebra(&self.table, &full).map_err(|e| violation(&self.id, e))
    }

    /// The table at any bindings, ignoring constraints.
    pub fn instantiate_unchecked(&self, b: &Bindings) -> Result<Algebra<Gq>> {
        let mut full = b.clone();
        for p in self.params() {
            if let (None, Some(v)) = (full.get(&p), self.fixed(&p)) {
                full.insert(p, v.clone());
            }
        }
        eval_algebra(&self.table, &full)
    }

    pub fn cocycle_at(&self, b: &Bindings) -> Result<Option<Cocycle<Gq>>> {
        let Some((f, q)) = &self.cocycle else { return Ok(None) };
        let full = self.complete(b)?;
        let fs = f.iter().map(|m| eval_matrix(m, &full)).collect::<Result<Vec<_>>>().map_err(|e| violation(&self.id, e))?;
        let rep = Representation::new(self.family.lie(&full)?, fs)?;
        Ok(Some(Cocycle::new(rep, eval_matrix(q, &full).map_err(|e| violation(&self.id, e))?)?))
    }

    pub fn raw_at(&self, b: &Bindings) -> Result<Option<Algebra<Gq>>> {
        let full = self.complete(b)?;
        self.raw.as_ref().map(|r| eval_algebra(r, &full)).transpose()
    }

    pub fn witness_at(&self, b: &Bindings) -> Result<Option<Matrix<Gq>>> {
        let full = self.complete(b)?;
        self.witness.as_ref().map(|w| eval_matrix(w, &full)).transpose()
    }
}

fn violation(id: &str, e: Error) -> Error {
    match e {
        Error::DenominatorVanishes => Error::ConstraintViolated(format!("{id}: a denominator vanishes")),
        other => other,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Property {
    Associative,
    Transitive,
    Novikov,
    Bisymmetric,
    Simple,
    Semisimple,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Associative,
        Property::Transitive,
        Property::Novikov,
        Property::Bisymmetric,
        Property::Simple,
        Property::Semisimple,
    ];

    pub fn from_name(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|p| p.name() == s)
    }

    pub fn name(&self) -> &'static str {
        match self {
            Property::Associative => "associative",
            Property::Transitive => "transitive",
            Property::Novikov => "novikov",
            Property::Bisymmetric => "bisymmetric",
            Property::Simple => "simple",
            Property::Semisimple => "semisimple",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// An entry id with parameter values.
#[derive(Clone, Debug, PartialEq)]
pub struct Instance {
    pub id: String,
    pub bindings: Bindings,
}

impl fmt::Display for Instance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.bindings.is_empty() {
            write!(f, "{}", self.id)
        } else {
            write!(f, "{}({})", self.id, format_bindings(&self.bindings))
        }
    }
}

/// Members of a family having a property; a member without bindings has it at
/// every admissible value, one with bindings exactly at those values.
#[derive(Clone, Debug, PartialEq)]
pub struct PropertyLine {
    pub family: Family,
    pub property: Property,
    pub members: Vec<Instance>,
}

/// Instances claimed pairwise isomorphic.
#[derive(Clone, Debug, PartialEq)]
pub struct Remark {
    pub family: Family,
    pub line: usize,
    pub instances: Vec<Instance>,
}

#[derive(Clone, Debug)]
pub struct Catalog {
    pub entries: Vec<CatalogEntry>,
    pub properties: Vec<PropertyLine>,
    pub remarks: Vec<Remark>,
}

fn default_values(name: &str) -> Vec<Gq> {
    match name {
        "lambda" => vec![Gq::from_int(2), Gq::from_int(-1), Gq::from_frac(1, 2), Gq::from_int(3)],
        "mu" => vec![Gq::from_int(1), Gq::from_int(2), Gq::from_int(-1)],
        "l" => vec![Gq::from_frac(1, 2), Gq::from_int(-1), Gq::i()],
        _ => vec![Gq::from_int(2)],
    }
}

fn cartesian(names: &[String], base: Bindings) -> Vec<Bindings> {
    names.iter().fold(vec![base], |acc, n| {
        acc.iter()
            .flat_map(|b| {
                default_values(n).into_iter().map(move |v| {
                    let mut b = b.clone();
                    b.insert(n.clone(), v);
                    b
                })
            })
            .collect()
    })
}

impl Catalog {
    /// Parses the seven data files, given in the order of [`DATA_FILES`].
    pub fn from_texts(texts: &[&str; 7]) -> Result<Self> {
        let mut entries = Vec::new();
        for (name, text) in DATA_FILES.iter().zip(texts).take(5) {
            entries.extend(parse::parse_entries(text).map_err(|e| in_file(name, e))?);
        }
        let properties = parse::parse_properties(texts[5]).map_err(|e| in_file(DATA_FILES[5], e))?;
        let remarks = parse::parse_remarks(texts[6]).map_err(|e| in_file(DATA_FILES[6], e))?;
        let cat = Catalog { entries, properties, remarks };
        cat.check_references()?;
        Ok(cat)
    }

    pub fn embedded() -> Self {
        Self::from_texts(&EMBEDDED).expect("embedded catalog parses")
    }

    pub fn load_dir(dir: &Path) -> Result<Self> {
        let texts: Vec<String> = DATA_FILES
            .iter()
            .map(|f| {
                std::fs::read_to_string(dir.join(f))
                    .map_err(|e| Error::Semantic { line: 0, msg: format!("{}: {e}", dir.join(f).display()) })
            })
            .collect::<Result<_>>()?;
        let refs: Vec<&str> = texts.iter().map(String::as_str).collect();
        Self::from_texts(&refs.try_into().unwrap())
    }

    fn check_references(&self) -> Result<()> {
        let ids = self.properties.iter().flat_map(|p| &p.members).chain(self.remarks.iter().flat_map(|r| &r.instances));
        for inst in ids {
            self.lookup(&inst.id)?;
        }
        Ok(())
    }

    pub fn lookup(&self, id: &str) -> Result<&CatalogEntry> {
        self.entries.iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownId(id.to_string()))
    }

    pub fn instantiate(&self, id: &str, b: &Bindings) -> Result<Algebra<Gq>> {
        self.lookup(id)?.instantiate(b)
    }

    pub fn family(&self, f: Family) -> impl Iterator<Item = &CatalogEntry> {
        self.entries.iter().filter(move |e| e.family == f)
    }

    /// Default samples honoring the constraints, plus every binding named in
    /// the property tables; fixed parameters are filled in.
    pub fn samples(&self, e: &CatalogEntry) -> Vec<Bindings> {
        let free = e.free_params();
        let mut out: Vec<Bindings> = cartesian(&free, Bindings::new());
        for inst in self.properties.iter().flat_map(|p| &p.members).filter(|m| m.id == e.id && !m.bindings.is_empty()) {
            let rest: Vec<String> = free.iter().filter(|p| !inst.bindings.contains_key(*p)).cloned().collect();
            out.extend(cartesian(&rest, inst.bindings.clone()));
        }
        let mut seen = Vec::new();
        for b in out {
            if let Ok(full) = e.complete(&b) {
                if !seen.contains(&full) {
                    seen.push(full);
                }
            }
        }
        seen
    }
}

fn in_file(name: &str, e: Error) -> Error {
    match e {
        Error::Syntax { line, col, msg } => Error::Syntax { line, col, msg: format!("{name}: {msg}") },
        Error::Semantic { line, msg } => Error::Semantic { line, msg: format!("{name}: {msg}") },
        other => other,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b(pairs: &[(&str, Gq)]) -> Bindings {
        pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
    }

    #[test]
    fn entry_counts() {
        let cat = Catalog::embedded();
        let count = |f| cat.family(f).count();
        assert_eq!(count(Family::H), 10);
        assert_eq!(count(Family::N), 45);
        assert_eq!(count(Family::D1), 12);
        assert_eq!(cat.family(Family::Dl).filter(|e| e.id.starts_with("Dl-") && !e.id.contains("-S-")).count(), 21);
        assert_eq!(count(Family::E), 9);
    }

    #[test]
    fn instantiate_examples() {
        let cat = Catalog::embedded();
        let h7 = cat.instantiate("H-7", &b(&[("lambda", Gq::from_int(2))])).unwrap();
        assert_eq!(h7.to_string(), "e1 e1 = e3\ne1 e2 = e3\ne2 e2 = 2 e3\n");
        let n1 = cat.instantiate("N-1", &b(&[("lambda", Gq::zero())])).unwrap();
        assert_eq!(n1.to_string(), "e3 e2 = e2\n");
        assert!(matches!(
            cat.instantiate("H-10", &b(&[("lambda", Gq::one())])),
            Err(Error::ConstraintViolated(_))
        ));
        assert!(matches!(cat.instantiate("H-99", &Bindings::new()), Err(Error::UnknownId(_))));
        assert!(matches!(cat.instantiate("H-7", &Bindings::new()), Err(Error::UnboundVariable(_))));
    }

    #[test]
    fn samples_respect_constraints() {
        let cat = Catalog::embedded();
        let s1 = cat.lookup("Dl-S-1").unwrap();
        assert!(cat.samples(s1).iter().all(|b| b["l"] != Gq::from_frac(1, 2)));
        let half = cat.lookup("Dhalf-S-1").unwrap();
        assert!(cat.samples(half).iter().all(|b| b["l"] == Gq::from_frac(1, 2)));
        let n1 = cat.lookup("N-1").unwrap();
        assert!(cat.samples(n1).iter().any(|b| b["lambda"].is_zero()));
    }
}
