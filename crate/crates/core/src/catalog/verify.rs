//! Batch verification of the catalog against its own claims.

use std::fmt;

use super::{format_bindings, Bindings, Catalog, CatalogEntry, Family, Instance, Property};
use crate::algebra::Algebra;
use crate::cocycle::phi;
use crate::error::Result;
use crate::exact::Gq;
use crate::iso::{search_lsa_iso, verify_lsa_iso, IsoVerdict};
use crate::lie::classify3;
use crate::props::{is_associative, is_bisymmetric, is_novikov, is_semisimple, is_simple, is_transitive};

#[derive(Clone, Debug, PartialEq)]
pub enum Status {
    Pass,
    Fail(String),
    NotApplicable,
}

impl Status {
    pub fn ok(&self) -> bool {
        !matches!(self, Status::Fail(_))
    }

    fn from_bool(ok: bool, why: impl FnOnce() -> String) -> Self {
        if ok {
            Status::Pass
        } else {
            Status::Fail(why())
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("ok"),
            Status::Fail(why) => write!(f, "FAIL: {why}"),
            Status::NotApplicable => f.write_str("n/a"),
        }
    }
}

/// Results of every check on one entry at one parameter sample.
#[derive(Clone, Debug)]
pub struct EntryReport {
    pub id: String,
    pub bindings: Bindings,
    pub left_symmetric: Status,
    pub lie_class: Status,
    pub reconstruction: Status,
    pub flags: Status,
    pub witness: Status,
}

impl EntryReport {
    pub fn checks(&self) -> [(&'static str, &Status); 5] {
        [
            ("left-symmetric", &self.left_symmetric),
            ("lie class", &self.lie_class),
            ("reconstruction", &self.reconstruction),
            ("flags", &self.flags),
            ("witness", &self.witness),
        ]
    }

    pub fn ok(&self) -> bool {
        self.checks().iter().all(|(_, s)| s.ok())
    }
}

impl fmt::Display for EntryReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.id)?;
        if !self.bindings.is_empty() {
            write!(f, " ({})", format_bindings(&self.bindings))?;
        }
        if self.ok() {
            return write!(f, ": ok");
        }
        for (name, s) in self.checks() {
            if !s.ok() {
                write!(f, "\n  {name}: {s}")?;
            }
        }
        Ok(())
    }
}

/// Property values of an algebra.
pub fn compute_property(a: &Algebra<Gq>, p: Property) -> Result<bool> {
    Ok(match p {
        Property::Associative => is_associative(a),
        Property::Transitive => is_transitive(a),
        Property::Novikov => is_novikov(a),
        Property::Bisymmetric => is_bisymmetric(a),
        Property::Simple => is_simple(a)?,
        Property::Semisimple => is_semisimple(a)?.is_some(),
    })
}

fn matches(inst: &Instance, b: &Bindings) -> bool {
    inst.bindings.iter().all(|(k, v)| b.get(k) == Some(v))
}

impl Catalog {
    /// Whether the property tables claim `p` for entry `id` at `b`.
    pub fn expected_property(&self, e: &CatalogEntry, p: Property, b: &Bindings) -> bool {
        self.properties
            .iter()
            .filter(|l| l.family == e.family && l.property == p)
            .flat_map(|l| &l.members)
            .any(|m| m.id == e.id && matches(m, b))
    }
}

fn check_flags(cat: &Catalog, e: &CatalogEntry, a: &Algebra<Gq>, b: &Bindings) -> Status {
    let mut bad = Vec::new();
    for p in Property::ALL {
        let expected = cat.expected_property(e, p, b);
        match compute_property(a, p) {
            Ok(got) if got == expected => {}
            Ok(got) => bad.push(format!("{p} expected {expected}, computed {got}")),
            Err(err) => bad.push(format!("{p}: {err}")),
        }
    }
    Status::from_bool(bad.is_empty(), || bad.join("; "))
}

fn check_reconstruction(e: &CatalogEntry, a: &Algebra<Gq>, b: &Bindings) -> Result<Status> {
    let Some(c) = e.cocycle_at(b)? else { return Ok(Status::NotApplicable) };
    if let Err(v) = c.rep.check() {
        return Ok(Status::Fail(format!("not a representation {v}")));
    }
    if let Err(v) = c.check() {
        return Ok(Status::Fail(format!("not a cocycle {v}")));
    }
    if !c.is_bijective() {
        return Ok(Status::Fail("det C = 0".into()));
    }
    let got = phi(&c)?;
    let target = e.raw_at(b)?.unwrap_or_else(|| a.clone());
    Ok(Status::from_bool(got == target, || format!("phi gives\n{got}")))
}

fn check_witness(e: &CatalogEntry, a: &Algebra<Gq>, b: &Bindings) -> Result<Status> {
    let (Some(raw), Some(t)) = (e.raw_at(b)?, e.witness_at(b)?) else { return Ok(Status::NotApplicable) };
    Ok(match verify_lsa_iso(&raw, a, &t) {
        Ok(true) => Status::Pass,
        Ok(false) => Status::Fail("T is not a homomorphism".into()),
        Err(err) => Status::Fail(err.to_string()),
    })
}

/// All checks for one entry at one sample.
pub fn verify_entry(cat: &Catalog, id: &str, b: &Bindings) -> Result<EntryReport> {
    let e = cat.lookup(id)?;
    let full = e.complete(b)?;
    let a = e.instantiate(&full)?;
    let left_symmetric = match a.check_left_symmetric() {
        Ok(()) => Status::Pass,
        Err(v) => Status::Fail(v.to_string()),
    };
    let expected = e.family.expected_class(&full)?;
    let lie_class = match classify3(&a.commutator_lie()) {
        Ok(c) => Status::from_bool(c == expected, || format!("expected {expected}, got {c}")),
        Err(err) => Status::Fail(err.to_string()),
    };
    Ok(EntryReport {
        id: id.to_string(),
        left_symmetric,
        lie_class,
        reconstruction: check_reconstruction(e, &a, &full)?,
        flags: check_flags(cat, e, &a, &full),
        witness: check_witness(e, &a, &full)?,
        bindings: full,
    })
}

/// Reports for every entry of the chosen families at every sample.
#[derive(Clone, Debug, Default)]
pub struct Summary {
    pub reports: Vec<EntryReport>,
}

impl Summary {
    pub fn failures(&self) -> impl Iterator<Item = &EntryReport> {
        self.reports.iter().filter(|r| !r.ok())
    }

    pub fn ok(&self) -> bool {
        self.failures().next().is_none()
    }

    /// (verified classes, all classes) for a family.
    pub fn class_counts(&self, cat: &Catalog, f: Family) -> (usize, usize) {
        let ids: Vec<&str> = cat.family(f).map(|e| e.id.as_str()).collect();
        let present: Vec<&&str> = ids.iter().filter(|id| self.reports.iter().any(|r| r.id == **id)).collect();
        let good = present.iter().filter(|id| self.reports.iter().filter(|r| r.id == ***id).all(EntryReport::ok)).count();
        (good, present.len())
    }
}

/// Samples for an entry with some parameters overridden.
pub fn plan_samples(cat: &Catalog, e: &CatalogEntry, overrides: &Bindings) -> Vec<Bindings> {
    let free = e.free_params();
    let mut out: Vec<Bindings> = Vec::new();
    for mut b in cat.samples(e) {
        for (k, v) in overrides {
            if free.contains(k) {
                b.insert(k.clone(), v.clone());
            }
        }
        if e.complete(&b).is_ok() && !out.contains(&b) {
            out.push(b);
        }
    }
    out
}

pub fn verify_all(cat: &Catalog, families: &[Family], overrides: &Bindings) -> Result<Summary> {
    let mut reports = Vec::new();
    for e in cat.entries.iter().filter(|e| families.contains(&e.family)) {
        for b in plan_samples(cat, e, overrides) {
            reports.push(verify_entry(cat, &e.id, &b)?);
        }
    }
    Ok(Summary { reports })
}

/// A membership where the computed value disagrees with the tables.
#[derive(Clone, Debug, PartialEq)]
pub struct Discrepancy {
    pub family: Family,
    pub property: Property,
    pub id: String,
    pub bindings: Bindings,
    pub expected: bool,
    pub computed: bool,
}

impl fmt::Display for Discrepancy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inst = Instance { id: self.id.clone(), bindings: self.bindings.clone() };
        write!(f, "{} {}: {inst} expected {}, computed {}", self.family, self.property, self.expected, self.computed)
    }
}

/// Computed membership per family and property, at every sample.
#[derive(Clone, Debug, Default)]
pub struct PropertyReport {
    pub memberships: Vec<(Family, Property, Vec<Instance>)>,
    pub discrepancies: Vec<Discrepancy>,
}

impl PropertyReport {
    pub fn ok(&self) -> bool {
        self.discrepancies.is_empty()
    }

    pub fn members(&self, f: Family, p: Property) -> &[Instance] {
        self.memberships.iter().find(|m| m.0 == f && m.1 == p).map_or(&[], |m| &m.2[..])
    }
}

impl fmt::Display for PropertyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (fam, p, members) in &self.memberships {
            let names: Vec<String> = members.iter().map(|m| m.to_string()).collect();
            writeln!(f, "{fam} {p}: {}", if names.is_empty() { "none".into() } else { names.join(" ") })?;
        }
        for d in &self.discrepancies {
            writeln!(f, "discrepancy: {d}")?;
        }
        Ok(())
    }
}

/// Computes every property at every sample and compares with the tables.
/// Membership is listed bare when it holds at all samples of an entry, and
/// per sample otherwise.
pub fn verify_property_tables(cat: &Catalog) -> Result<PropertyReport> {
    let mut report = PropertyReport::default();
    for fam in Family::ALL {
        let mut rows: Vec<(Property, Vec<Instance>)> = Property::ALL.iter().map(|&p| (p, Vec::new())).collect();
        for e in cat.family(fam) {
            let samples = cat.samples(e);
            let mut holds: Vec<Vec<bool>> = vec![Vec::new(); Property::ALL.len()];
            for b in &samples {
                let a = e.instantiate(b)?;
                for (k, &p) in Property::ALL.iter().enumerate() {
                    let computed = compute_property(&a, p)?;
                    holds[k].push(computed);
                    let expected = cat.expected_property(e, p, b);
                    if computed != expected {
                        report.discrepancies.push(Discrepancy {
                            family: fam,
                            property: p,
                            id: e.id.clone(),
                            bindings: free_part(e, b),
                            expected,
                            computed,
                        });
                    }
                }
            }
            for (k, row) in rows.iter_mut().enumerate() {
                if !holds[k].is_empty() && holds[k].iter().all(|&x| x) {
                    row.1.push(Instance { id: e.id.clone(), bindings: Bindings::new() });
                } else {
                    for (b, _) in samples.iter().zip(&holds[k]).filter(|(_, &x)| x) {
                        row.1.push(Instance { id: e.id.clone(), bindings: free_part(e, b) });
                    }
                }
            }
        }
        report.memberships.extend(rows.into_iter().map(|(p, m)| (fam, p, m)));
    }
    Ok(report)
}

fn free_part(e: &CatalogEntry, b: &Bindings) -> Bindings {
    let free = e.free_params();
    b.iter().filter(|(k, _)| free.contains(k)).map(|(k, v)| (k.clone(), v.clone())).collect()
}

/// Outcome of one coincidence claim: the first instance against each other one.
#[derive(Clone, Debug)]
pub struct RemarkReport {
    pub family: Family,
    pub line: usize,
    pub pairs: Vec<(Instance, Instance, IsoVerdict)>,
}

impl RemarkReport {
    pub fn ok(&self) -> bool {
        self.pairs.iter().all(|p| p.2.is_isomorphic())
    }
}

impl fmt::Display for RemarkReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (a, b, v) in &self.pairs {
            let tag = match v {
                IsoVerdict::Isomorphic(_) => "confirmed",
                IsoVerdict::NotIsomorphic(_) => "REFUTED",
                IsoVerdict::Unknown(_) => "unconfirmed",
            };
            writeln!(f, "{a} ~ {b}: {tag}, {v}")?;
        }
        Ok(())
    }
}

pub fn instantiate_instance(cat: &Catalog, inst: &Instance) -> Result<Algebra<Gq>> {
    cat.lookup(&inst.id)?.instantiate_unchecked(&inst.bindings)
}

pub fn verify_remark_isos(cat: &Catalog) -> Result<Vec<RemarkReport>> {
    let mut out = Vec::new();
    for r in &cat.remarks {
        let first = instantiate_instance(cat, &r.instances[0])?;
        let mut pairs = Vec::new();
        for inst in &r.instances[1..] {
            let other = instantiate_instance(cat, inst)?;
            pairs.push((r.instances[0].clone(), inst.clone(), search_lsa_iso(&first, &other)));
        }
        out.push(RemarkReport { family: r.family, line: r.line, pairs });
    }
    Ok(out)
}
