//! Isomorphisms of algebras: exact verification and a bounded search through
//! the automorphism group of the common sub-adjacent Lie algebra.

use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::exact::{Field, Gq, MultiPoly, Ring};
use crate::lie::{classify3, group_element, AutGroup};
use crate::matrix::Matrix;
use crate::props::fingerprint;

/// Whether F is invertible and F(x*y) = F(x)F(y) on all basis pairs, with the
/// left product taken in `a` and the right one in `b`.
pub fn verify_lsa_iso<F: Field>(a: &Algebra<F>, b: &Algebra<F>, f: &Matrix<F>) -> Result<bool> {
    let n = a.dim();
    if b.dim() != n || f.rows() != n || f.cols() != n {
        return Err(Error::DimensionMismatch { expected: n, got: f.rows().max(b.dim()) });
    }
    if f.det().is_zero() {
        return Err(Error::SingularWitness);
    }
    let cols: Vec<Vector<F>> = (0..n).map(|j| f.column(j)).collect();
    Ok((0..n).all(|i| (0..n).all(|j| f.mul_vec(a.product(i, j)) == b.mul_vec(&cols[i], &cols[j]))))
}

#[derive(Clone, Debug, PartialEq)]
pub enum IsoVerdict {
    /// A verified isomorphism a -> b.
    Isomorphic(Matrix<Gq>),
    /// Invariants on which the two algebras differ.
    NotIsomorphic(Vec<String>),
    Unknown(String),
}

impl IsoVerdict {
    pub fn is_isomorphic(&self) -> bool {
        matches!(self, IsoVerdict::Isomorphic(_))
    }
}

impl fmt::Display for IsoVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IsoVerdict::Isomorphic(t) => write!(f, "isomorphic via T = {}", t.transpose()),
            IsoVerdict::NotIsomorphic(d) => write!(f, "not isomorphic ({})", d.join("; ")),
            IsoVerdict::Unknown(why) => write!(f, "unknown ({why})"),
        }
    }
}

const NODE_BUDGET: usize = 20_000;

fn grid() -> Vec<Gq> {
    let mut g: Vec<Gq> = [1, -1, 2, -2, 3, -3, 4, -4].iter().map(|&k| Gq::from_int(k)).collect();
    g.extend([(1, 2), (-1, 2), (1, 3), (-1, 3), (1, 4), (-1, 4)].iter().map(|&(p, q)| Gq::from_frac(p, q)));
    g.extend([(0, 1), (0, -1), (0, 2), (1, 1), (1, -1), (-1, 1), (-1, -1)].iter().map(|&(r, i)| Gq::from_ints(r, i)));
    g
}

/// Solves polynomial equations subject to polynomials that must not vanish.
struct Solver {
    grid: Vec<Gq>,
    budget: usize,
    exhausted: bool,
}

fn bind(v: &str, x: &Gq) -> BTreeMap<String, Gq> {
    BTreeMap::from([(v.to_string(), x.clone())])
}

impl Solver {
    fn new() -> Self {
        Solver { grid: grid(), budget: NODE_BUDGET, exhausted: false }
    }

    fn solve(&mut self, eqs: Vec<MultiPoly>, nonzero: Vec<MultiPoly>, vars: Vec<String>) -> Option<BTreeMap<String, Gq>> {
        if self.budget == 0 {
            self.exhausted = true;
            return None;
        }
        self.budget -= 1;
        if nonzero.iter().any(Ring::is_zero) {
            return None;
        }
        let nonzero_vars: Vec<String> = nonzero
            .iter()
            .filter(|p| p.num_terms() == 1 && p.total_degree() == 1)
            .flat_map(|p| p.vars().to_vec())
            .collect();
        let mut reduced = Vec::new();
        for e in eqs {
            if e.is_zero() {
                continue;
            }
            if e.is_constant() {
                return None;
            }
            let content: BTreeMap<String, u32> =
                e.monomial_content().into_iter().filter(|(v, _)| nonzero_vars.contains(v)).collect();
            let e = if content.is_empty() { e } else { e.div_monomial(&content) };
            if e.is_constant() {
                return None;
            }
            if !reduced.contains(&e) {
                reduced.push(e);
            }
        }
        let eqs = reduced;
        if eqs.is_empty() {
            return self.fill(&nonzero, &vars);
        }
        // Eliminate a variable occurring linearly with a constant coefficient.
        for e in &eqs {
            for v in e.vars() {
                let cs = e.coeffs_in(v);
                if cs.len() == 2 && cs[1].is_constant() {
                    let c = cs[1].constant_value().unwrap();
                    let expr = cs[0].scale(&c.inv().unwrap().neg());
                    let sub = |p: &MultiPoly| p.subst_poly(v, &expr);
                    let rest: Vec<String> = vars.iter().filter(|w| *w != v).cloned().collect();
                    let mut sol = self.solve(eqs.iter().map(sub).collect(), nonzero.iter().map(sub).collect(), rest)?;
                    let value = expr.eval(&sol).ok()?;
                    sol.insert(v.clone(), value);
                    return Some(sol);
                }
            }
        }
        // Branch on the roots of a univariate equation.
        if let Some(e) = eqs.iter().find(|e| e.vars().len() == 1) {
            let v = e.vars()[0].clone();
            let roots = match e.as_univariate(&v).map(|u| u.roots()) {
                Some(Ok(r)) => r,
                _ => {
                    self.exhausted = true;
                    return None;
                }
            };
            let degree: u32 = e.degree_in(&v);
            if roots.iter().map(|r| r.1).sum::<u32>() < degree {
                self.exhausted = true;
            }
            return self.branch(&eqs, &nonzero, &vars, &v, roots.into_iter().map(|r| r.0).collect());
        }
        // Otherwise try grid values for the most frequent variable.
        self.exhausted = true;
        let v = vars
            .iter()
            .max_by_key(|v| eqs.iter().filter(|e| e.vars().contains(v)).count())
            .cloned()?;
        let values = self.grid.clone();
        self.branch(&eqs, &nonzero, &vars, &v, values)
    }

    fn branch(
        &mut self,
        eqs: &[MultiPoly],
        nonzero: &[MultiPoly],
        vars: &[String],
        v: &str,
        values: Vec<Gq>,
    ) -> Option<BTreeMap<String, Gq>> {
        let rest: Vec<String> = vars.iter().filter(|w| *w != v).cloned().collect();
        for x in values {
            let b = bind(v, &x);
            let sub = |p: &MultiPoly| p.substitute(&b);
            if let Some(mut sol) = self.solve(eqs.iter().map(sub).collect(), nonzero.iter().map(sub).collect(), rest.clone()) {
                sol.insert(v.to_string(), x);
                return Some(sol);
            }
        }
        None
    }

    /// Values for unconstrained variables keeping every guard nonzero.
    fn fill(&mut self, nonzero: &[MultiPoly], vars: &[String]) -> Option<BTreeMap<String, Gq>> {
        let k = vars.len();
        let choices = &self.grid[..self.grid.len().min(6)];
        let total = choices.len().checked_pow(k as u32).unwrap_or(usize::MAX).min(50_000);
        for mut code in 0..total {
            let mut b = BTreeMap::new();
            for v in vars {
                b.insert(v.clone(), choices[code % choices.len()].clone());
                code /= choices.len();
            }
            if nonzero.iter().all(|p| p.eval(&b).is_ok_and(|x| !x.is_zero())) {
                return Some(b);
            }
        }
        self.exhausted = true;
        None
    }
}

fn poly_algebra(a: &Algebra<Gq>) -> Algebra<MultiPoly> {
    a.map(|x| MultiPoly::constant(x.clone()))
}

/// Conditions on the parameters of `g` for its generic element F to satisfy
/// F(x*y) = F(x)F(y) from `a` to `b`.
fn hom_equations(a: &Algebra<Gq>, b: &Algebra<Gq>, f: &Matrix<MultiPoly>) -> Vec<MultiPoly> {
    let (pa, pb) = (poly_algebra(a), poly_algebra(b));
    let n = a.dim();
    let cols: Vec<Vector<MultiPoly>> = (0..n).map(|j| f.column(j)).collect();
    let mut eqs = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let lhs = f.mul_vec(pa.product(i, j));
            let rhs = pb.multiply(&cols[i], &cols[j]).unwrap();
            eqs.extend(lhs.iter().zip(&rhs).map(|(x, y)| x.sub(y)).filter(|p| !p.is_zero()));
        }
    }
    eqs
}

/// Looks for an isomorphism a -> b.
pub fn search_lsa_iso(a: &Algebra<Gq>, b: &Algebra<Gq>) -> IsoVerdict {
    if a.dim() != b.dim() {
        return IsoVerdict::NotIsomorphic(vec![format!("dimension: {} vs {}", a.dim(), b.dim())]);
    }
    let diffs = fingerprint(a).differences(&fingerprint(b));
    if !diffs.is_empty() {
        return IsoVerdict::NotIsomorphic(diffs);
    }
    if a == b {
        return IsoVerdict::Isomorphic(Matrix::identity(a.dim()));
    }
    if a.dim() != 3 {
        return IsoVerdict::Unknown("search needs dimension 3".into());
    }
    let (Ok(ca), Ok(cb)) = (classify3(&a.commutator_lie()), classify3(&b.commutator_lie())) else {
        return IsoVerdict::Unknown("unclassified Lie algebra".into());
    };
    let (Some(pa), Some(pb)) = (&ca.witness, &cb.witness) else {
        return IsoVerdict::Unknown(format!("no basis change to the canonical form of {ca}"));
    };
    let (Ok(a2), Ok(b2)) = (a.transport(pa), b.transport(pb)) else {
        return IsoVerdict::Unknown("singular basis change".into());
    };
    let groups = AutGroup::for_class(&ca);
    if groups.is_empty() {
        return IsoVerdict::Unknown(format!("no automorphism group for {ca}"));
    }
    let mut exhausted = false;
    for g in groups {
        let pg = g.params();
        let eqs = hom_equations(&a2, &b2, &pg.matrix);
        let mut solver = Solver::new();
        let sol = solver.solve(eqs, pg.nonzero.clone(), pg.vars.clone());
        exhausted |= solver.exhausted;
        let Some(sol) = sol else { continue };
        let Ok(f2) = group_element(&pg, &sol) else { continue };
        let f = pb.mul(&f2).mul(&pa.inverse().unwrap());
        if verify_lsa_iso(a, b, &f).unwrap_or(false) {
            return IsoVerdict::Isomorphic(f);
        }
    }
    if exhausted {
        IsoVerdict::Unknown("bounded search found no isomorphism".into())
    } else {
        IsoVerdict::Unknown("no isomorphism with Q(i) entries in the automorphism group".into())
    }
}
