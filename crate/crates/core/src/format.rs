//! The line-oriented text format for algebras, Lie algebras, representations,
//! cocycles, r-matrices, O-operators and isomorphism witnesses.
//!
//! ```text
//! kind cocycle dim 3 domain ratfunc
//! params lambda != 0
//! [e1,e2] = e3
//! f(e1) = [[1,0,0],[1,1,0],[0,0,1]]
//! C = [[0,0,1],[0,1,0],[1,0,0]]
//! ```
//!
//! Matrices are written row by row with row i the image of e_i (or v_i); they
//! are stored transposed. The Lie algebra may also be named with
//! `lie H|N|D1|E|abelian|sl2` or `lie Dl l=<value>`.

use std::collections::BTreeSet;
use std::fmt::{self, Write as _};

use crate::algebra::{format_lincomb, Algebra};
use crate::catalog::parse::{parse_bindings, parse_constraint};
use crate::catalog::{Bindings, Constraint};
use crate::cocycle::{Cocycle, Representation};
use crate::error::{Error, Result};
use crate::exact::{parse_lincomb, parse_matrix_rows, Gq, RatFunc, Ring};
use crate::lie::{canonical_lie, LieAlgebra, LieTag};
use crate::matrix::Matrix;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Kind {
    Algebra,
    Lie,
    Representation,
    Cocycle,
    RMatrix,
    OOperator,
    IsoWitness,
}

impl Kind {
    const ALL: [Kind; 7] =
        [Kind::Algebra, Kind::Lie, Kind::Representation, Kind::Cocycle, Kind::RMatrix, Kind::OOperator, Kind::IsoWitness];

    pub fn name(&self) -> &'static str {
        match self {
            Kind::Algebra => "algebra",
            Kind::Lie => "lie",
            Kind::Representation => "representation",
            Kind::Cocycle => "cocycle",
            Kind::RMatrix => "rmatrix",
            Kind::OOperator => "ooperator",
            Kind::IsoWitness => "iso_witness",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Domain {
    Rational,
    Gaussian,
    RatFunc,
}

impl Domain {
    pub fn name(&self) -> &'static str {
        match self {
            Domain::Rational => "rational",
            Domain::Gaussian => "gaussian",
            Domain::RatFunc => "ratfunc",
        }
    }

    fn from_name(s: &str) -> Option<Self> {
        [Domain::Rational, Domain::Gaussian, Domain::RatFunc].into_iter().find(|d| d.name() == s)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Payload {
    Algebra(Algebra<RatFunc>),
    Lie(LieAlgebra<RatFunc>),
    Representation { lie: LieAlgebra<RatFunc>, f: Vec<Matrix<RatFunc>> },
    Cocycle { lie: LieAlgebra<RatFunc>, f: Vec<Matrix<RatFunc>>, q: Matrix<RatFunc> },
    RMatrix { lie: LieAlgebra<RatFunc>, r: Matrix<RatFunc> },
    OOperator { lie: LieAlgebra<RatFunc>, rho: Vec<Matrix<RatFunc>>, t: Matrix<RatFunc> },
    IsoWitness { source: Algebra<RatFunc>, target: Algebra<RatFunc>, t: Matrix<RatFunc> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Document {
    pub dim: usize,
    pub domain: Domain,
    pub params: Vec<Constraint>,
    pub payload: Payload,
}

fn semantic(line: usize, msg: impl Into<String>) -> Error {
    Error::Semantic { line, msg: msg.into() }
}

fn syntax(line: usize, col: usize, msg: impl Into<String>) -> Error {
    Error::Syntax { line, col, msg: msg.into() }
}

#[derive(Default)]
struct Body {
    lie: Option<LieAlgebra<RatFunc>>,
    brackets: Vec<(usize, usize, Vec<RatFunc>)>,
    products: [Vec<(usize, usize, Vec<RatFunc>)>; 2],
    f: Vec<Option<Matrix<RatFunc>>>,
    named: Vec<(String, Matrix<RatFunc>, usize)>,
}

fn basis_index(tok: &str, dim: usize, line: usize) -> Result<usize> {
    let i: usize = tok
        .trim()
        .strip_prefix('e')
        .and_then(|d| d.parse().ok())
        .ok_or_else(|| semantic(line, format!("expected a basis vector, got `{}`", tok.trim())))?;
    if i == 0 || i > dim {
        return Err(semantic(line, format!("e{i} outside dimension {dim}")));
    }
    Ok(i)
}

fn matrix(text: &str, dim: usize, line: usize) -> Result<Matrix<RatFunc>> {
    let rows = parse_matrix_rows(text).map_err(|e| e.at_line(line))?;
    let m = Matrix::from_rows(rows).map_err(|e| e.at_line(line))?;
    if m.rows() != dim || m.cols() != dim {
        return Err(semantic(line, format!("expected a {dim}x{dim} matrix")));
    }
    Ok(m.transpose())
}

fn named_lie(spec: &str, dim: usize, line: usize) -> Result<LieAlgebra<RatFunc>> {
    let mut words = spec.split_whitespace();
    let name = words.next().unwrap_or("");
    if name == "abelian" {
        return Ok(LieAlgebra::abelian(dim));
    }
    if dim != 3 {
        return Err(semantic(line, format!("`lie {name}` needs dimension 3")));
    }
    let rest: String = words.collect();
    let (tag, l) = match name {
        "H" => (LieTag::Heisenberg, None),
        "N" => (LieTag::N, None),
        "D1" => (LieTag::Dl, Some(Gq::one())),
        "E" => (LieTag::E, None),
        "sl2" => (LieTag::Sl2, None),
        "Dl" => {
            let b = parse_bindings(&rest, line)?;
            let l = b.get("l").cloned().ok_or_else(|| semantic(line, "`lie Dl` needs l=<value>"))?;
            (LieTag::Dl, Some(l))
        }
        _ => return Err(semantic(line, format!("unknown Lie algebra `{name}`"))),
    };
    Ok(canonical_lie(tag, l.as_ref()).unwrap().map(|x| RatFunc::constant(x.clone())))
}

/// Parses a document; errors carry 1-based line numbers.
pub fn parse_document(text: &str) -> Result<Document> {
    let mut lines = text.lines().enumerate().map(|(k, l)| (k + 1, l.split('#').next().unwrap().trim())).filter(|(_, l)| !l.is_empty());
    let (hl, header) = lines.next().ok_or_else(|| syntax(1, 1, "empty document"))?;
    let words: Vec<&str> = header.split_whitespace().collect();
    let [kw_kind, kind, kw_dim, dim, kw_dom, domain] = words[..] else {
        return Err(syntax(hl, 1, "expected `kind <kind> dim <n> domain <domain>`"));
    };
    if (kw_kind, kw_dim, kw_dom) != ("kind", "dim", "domain") {
        return Err(syntax(hl, 1, "expected `kind <kind> dim <n> domain <domain>`"));
    }
    let kind = Kind::ALL
        .into_iter()
        .find(|k| k.name() == kind)
        .ok_or_else(|| syntax(hl, header.find(kind).unwrap() + 1, format!("unknown kind `{kind}`")))?;
    let dim: usize = dim.parse().map_err(|_| syntax(hl, header.find(dim).unwrap() + 1, "dimension must be an integer"))?;
    if !(1..=4).contains(&dim) {
        return Err(semantic(hl, format!("dimension {dim} outside 1..=4")));
    }
    let domain = Domain::from_name(domain)
        .ok_or_else(|| syntax(hl, header.rfind(domain).unwrap() + 1, format!("unknown domain `{domain}`")))?;

    let mut params = Vec::new();
    let mut body = Body { f: vec![None; dim], ..Body::default() };
    let mut section = 0;
    let mut used: Vec<(usize, BTreeSet<String>)> = Vec::new();
    let mut note = |line: usize, xs: &mut dyn Iterator<Item = &RatFunc>| {
        let vars: BTreeSet<String> = xs.flat_map(RatFunc::vars).collect();
        used.push((line, vars));
    };
    let mut scalars: Vec<(usize, RatFunc)> = Vec::new();
    for (line, t) in lines {
        if let Some(c) = t.strip_prefix("params ") {
            params.push(parse_constraint(c, line)?);
        } else if t == "source" || t == "target" {
            if kind != Kind::IsoWitness {
                return Err(semantic(line, format!("`{t}` only appears in iso_witness documents")));
            }
            section = usize::from(t == "target");
        } else if let Some(spec) = t.strip_prefix("lie ") {
            body.lie = Some(named_lie(spec, dim, line)?);
        } else if let Some(rest) = t.strip_prefix('[') {
            let (pair, rhs) = rest.split_once("] =").ok_or_else(|| syntax(line, 1, "expected `[ei,ej] = ...`"))?;
            let (a, b) = pair.split_once(',').ok_or_else(|| syntax(line, 2, "expected `[ei,ej]`"))?;
            let (i, j) = (basis_index(a, dim, line)?, basis_index(b, dim, line)?);
            let v = parse_lincomb(rhs, dim).map_err(|e| e.at_line(line))?;
            note(line, &mut v.iter());
            scalars.extend(v.iter().map(|x| (line, x.clone())));
            body.brackets.push((i, j, v));
        } else if let Some(rest) = t.strip_prefix("f(") {
            let (idx, m) = rest.split_once(") =").ok_or_else(|| syntax(line, 1, "expected `f(ei) = [[..]]`"))?;
            let i = basis_index(idx, dim, line)?;
            let m = matrix(m, dim, line)?;
            note(line, &mut m.entries().iter());
            scalars.extend(m.entries().iter().map(|x| (line, x.clone())));
            body.f[i - 1] = Some(m);
        } else if let Some((name, m)) = t.split_once(" = [").filter(|(n, _)| ["C", "T", "R"].contains(n)) {
            let m = matrix(&format!("[{m}"), dim, line)?;
            note(line, &mut m.entries().iter());
            scalars.extend(m.entries().iter().map(|x| (line, x.clone())));
            body.named.push((name.to_string(), m, line));
        } else if let Some((lhs, rhs)) = t.split_once('=') {
            let toks: Vec<&str> = lhs.split_whitespace().collect();
            let [a, b] = toks[..] else {
                return Err(syntax(line, 1, format!("cannot read `{t}`")));
            };
            let (i, j) = (basis_index(a, dim, line)?, basis_index(b, dim, line)?);
            let v = parse_lincomb(rhs, dim).map_err(|e| e.at_line(line))?;
            note(line, &mut v.iter());
            scalars.extend(v.iter().map(|x| (line, x.clone())));
            body.products[section].push((i, j, v));
        } else {
            return Err(syntax(line, 1, format!("cannot read `{t}`")));
        }
    }

    let declared: BTreeSet<String> = params.iter().map(|c| c.name().to_string()).collect();
    for (line, vars) in &used {
        if let Some(v) = vars.iter().find(|v| !declared.contains(*v)) {
            return Err(semantic(*line, format!("unbound parameter `{v}`")));
        }
    }
    for (line, x) in &scalars {
        match domain {
            Domain::RatFunc => {}
            Domain::Gaussian if !x.vars().is_empty() => {
                return Err(semantic(*line, format!("`{x}` is not a Gaussian rational")))
            }
            Domain::Rational if x.as_constant().is_none_or(|c| !c.is_real()) => {
                return Err(semantic(*line, format!("`{x}` is not rational")))
            }
            _ => {}
        }
    }
    if domain != Domain::RatFunc && !params.is_empty() {
        return Err(semantic(hl, "parameters need domain ratfunc"));
    }

    let payload = build_payload(kind, dim, body)?;
    Ok(Document { dim, domain, params, payload })
}

fn table(dim: usize, products: &[(usize, usize, Vec<RatFunc>)]) -> Algebra<RatFunc> {
    let mut a = Algebra::zero(dim);
    for (i, j, v) in products {
        a.set_product(i - 1, j - 1, v.clone());
    }
    a
}

fn build_payload(kind: Kind, dim: usize, mut body: Body) -> Result<Payload> {
    let lie = || -> Result<LieAlgebra<RatFunc>> {
        match (&body.lie, body.brackets.is_empty()) {
            (Some(_), false) => Err(semantic(0, "give either `lie` or bracket lines, not both")),
            (Some(g), true) => Ok(g.clone()),
            (None, _) => Ok(LieAlgebra::from_brackets(dim, &body.brackets)),
        }
    };
    let mut take = |name: &str| -> Result<Matrix<RatFunc>> {
        let k = body
            .named
            .iter()
            .position(|(n, _, _)| n == name)
            .ok_or_else(|| semantic(0, format!("missing `{name} = [[..]]`")))?;
        Ok(body.named.remove(k).1)
    };
    let f = || -> Result<Vec<Matrix<RatFunc>>> {
        body.f
            .iter()
            .enumerate()
            .map(|(i, m)| m.clone().ok_or_else(|| semantic(0, format!("missing f(e{})", i + 1))))
            .collect()
    };
    let payload = match kind {
        Kind::Algebra => Payload::Algebra(table(dim, &body.products[0])),
        Kind::Lie => Payload::Lie(lie()?),
        Kind::Representation => Payload::Representation { lie: lie()?, f: f()? },
        Kind::Cocycle => {
            let q = take("C")?;
            Payload::Cocycle { lie: lie()?, f: f()?, q }
        }
        Kind::RMatrix => {
            let r = take("R")?;
            Payload::RMatrix { lie: lie()?, r }
        }
        Kind::OOperator => {
            let t = take("T")?;
            Payload::OOperator { lie: lie()?, rho: f()?, t }
        }
        Kind::IsoWitness => {
            let t = take("T")?;
            Payload::IsoWitness { source: table(dim, &body.products[0]), target: table(dim, &body.products[1]), t }
        }
    };
    Ok(payload)
}

impl Document {
    pub fn kind(&self) -> Kind {
        match &self.payload {
            Payload::Algebra(_) => Kind::Algebra,
            Payload::Lie(_) => Kind::Lie,
            Payload::Representation { .. } => Kind::Representation,
            Payload::Cocycle { .. } => Kind::Cocycle,
            Payload::RMatrix { .. } => Kind::RMatrix,
            Payload::OOperator { .. } => Kind::OOperator,
            Payload::IsoWitness { .. } => Kind::IsoWitness,
        }
    }

    /// Values fixed by `name = value` parameter lines, overridden by `extra`.
    pub fn bindings(&self, extra: &Bindings) -> Result<Bindings> {
        let mut b = Bindings::new();
        for c in &self.params {
            if let Constraint::Equals(n, v) = c {
                b.insert(n.clone(), v.clone());
            }
        }
        b.extend(extra.iter().map(|(k, v)| (k.clone(), v.clone())));
        if let Some(c) = self.params.iter().find(|c| b.contains_key(c.name()) && !c.holds(&b)) {
            return Err(Error::ConstraintViolated(c.to_string()));
        }
        Ok(b)
    }

    /// Wraps an algebra over Q(i).
    pub fn from_algebra(a: &Algebra<Gq>) -> Self {
        let real = a.constants().iter().all(Gq::is_real);
        Document {
            dim: a.dim(),
            domain: if real { Domain::Rational } else { Domain::Gaussian },
            params: Vec::new(),
            payload: Payload::Algebra(a.map(|x| RatFunc::constant(x.clone()))),
        }
    }

    /// Normalized text; parsing it gives back the same document.
    pub fn emit(&self) -> String {
        let mut out = format!("kind {} dim {} domain {}\n", self.kind().name(), self.dim, self.domain.name());
        for c in &self.params {
            let _ = writeln!(out, "params {c}");
        }
        let lie = |out: &mut String, g: &LieAlgebra<RatFunc>| out.push_str(&g.to_string());
        let mats = |out: &mut String, name: &str, m: &Matrix<RatFunc>| {
            let _ = writeln!(out, "{name} = {}", m.transpose());
        };
        let fs = |out: &mut String, f: &[Matrix<RatFunc>]| {
            for (i, m) in f.iter().enumerate() {
                let _ = writeln!(out, "f(e{}) = {}", i + 1, m.transpose());
            }
        };
        match &self.payload {
            Payload::Algebra(a) => out.push_str(&a.to_string()),
            Payload::Lie(g) => lie(&mut out, g),
            Payload::Representation { lie: g, f } => {
                lie(&mut out, g);
                fs(&mut out, f);
            }
            Payload::Cocycle { lie: g, f, q } => {
                lie(&mut out, g);
                fs(&mut out, f);
                mats(&mut out, "C", q);
            }
            Payload::RMatrix { lie: g, r } => {
                lie(&mut out, g);
                mats(&mut out, "R", r);
            }
            Payload::OOperator { lie: g, rho, t } => {
                lie(&mut out, g);
                fs(&mut out, rho);
                mats(&mut out, "T", t);
            }
            Payload::IsoWitness { source, target, t } => {
                out.push_str("source\n");
                out.push_str(&source.to_string());
                out.push_str("target\n");
                out.push_str(&target.to_string());
                mats(&mut out, "T", t);
            }
        }
        out
    }
}

impl fmt::Display for Document {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.emit())
    }
}

fn eval_m(m: &Matrix<RatFunc>, b: &Bindings) -> Result<Matrix<Gq>> {
    m.try_map(|x| x.eval(b))
}

/// Evaluation of the payload at parameter values.
pub fn algebra_at(a: &Algebra<RatFunc>, b: &Bindings) -> Result<Algebra<Gq>> {
    a.try_map(|x| x.eval(b))
}

pub fn lie_at(g: &LieAlgebra<RatFunc>, b: &Bindings) -> Result<LieAlgebra<Gq>> {
    g.try_map(|x| x.eval(b))
}

pub fn matrix_at(m: &Matrix<RatFunc>, b: &Bindings) -> Result<Matrix<Gq>> {
    eval_m(m, b)
}

pub fn representation_at(g: &LieAlgebra<RatFunc>, f: &[Matrix<RatFunc>], b: &Bindings) -> Result<Representation<Gq>> {
    Representation::new(lie_at(g, b)?, f.iter().map(|m| eval_m(m, b)).collect::<Result<_>>()?)
}

pub fn cocycle_at(g: &LieAlgebra<RatFunc>, f: &[Matrix<RatFunc>], q: &Matrix<RatFunc>, b: &Bindings) -> Result<Cocycle<Gq>> {
    Cocycle::new(representation_at(g, f, b)?, eval_m(q, b)?)
}

/// Renders coordinates the way product lines do.
pub fn render_vector(v: &[Gq]) -> String {
    format_lincomb(v)
}
