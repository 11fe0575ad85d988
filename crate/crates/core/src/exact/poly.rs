use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::{Field, Gq, Ring, UPoly};
use crate::error::{Error, Result};

/// Sparse polynomial over Q(i) in named variables.
///
/// Variables are kept sorted and unused ones are dropped, so structural
/// equality is polynomial equality. Exponent vectors compare
/// lexicographically in variable order; the leading term is the largest key.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct MultiPoly {
    vars: Vec<String>,
    terms: BTreeMap<Vec<u32>, Gq>,
}

impl MultiPoly {
    pub fn constant(c: Gq) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Vec::new(), c);
        }
        MultiPoly { vars: Vec::new(), terms }
    }

    pub fn var(name: &str) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![1], Gq::one());
        MultiPoly { vars: vec![name.to_string()], terms }
    }

    /// Builds a polynomial from (variable, exponent) monomials.
    pub fn from_terms<'a>(terms: impl IntoIterator<Item = (Vec<(&'a str, u32)>, Gq)>) -> Self {
        terms.into_iter().fold(Self::zero(), |acc, (mono, c)| {
            let m = mono
                .into_iter()
                .fold(Self::constant(c), |p, (v, e)| p.mul(&Self::var(v).pow(e)));
            acc.add(&m)
        })
    }

    pub fn from_upoly(var: &str, p: &UPoly) -> Self {
        let mut terms = BTreeMap::new();
        for (k, c) in p.coeffs().iter().enumerate() {
            if !c.is_zero() {
                terms.insert(vec![k as u32], c.clone());
            }
        }
        Self::normalized(vec![var.to_string()], terms)
    }

    fn normalized(vars: Vec<String>, mut terms: BTreeMap<Vec<u32>, Gq>) -> Self {
        terms.retain(|_, c| !c.is_zero());
        let used: Vec<bool> = (0..vars.len())
            .map(|i| terms.keys().any(|e| e[i] > 0))
            .collect();
        if used.iter().all(|&u| u) {
            return MultiPoly { vars, terms };
        }
        let keep = |e: &Vec<u32>| -> Vec<u32> {
            e.iter().zip(&used).filter(|(_, &u)| u).map(|(&x, _)| x).collect()
        };
        let terms = terms.into_iter().map(|(e, c)| (keep(&e), c)).collect();
        let vars = vars.into_iter().zip(&used).filter(|(_, &u)| u).map(|(v, _)| v).collect();
        MultiPoly { vars, terms }
    }

    pub fn vars(&self) -> &[String] {
        &self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Gq)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_constant(&self) -> bool {
        self.vars.is_empty()
    }

    pub fn constant_value(&self) -> Option<Gq> {
        if !self.is_constant() {
            return None;
        }
        Some(self.terms.get(&Vec::new()).cloned().unwrap_or_else(Gq::zero))
    }

    pub fn leading(&self) -> Option<(&Vec<u32>, &Gq)> {
        self.terms.iter().next_back()
    }

    pub fn leading_coeff(&self) -> Gq {
        self.leading().map(|(_, c)| c.clone()).unwrap_or_else(Gq::zero)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(|e| e.iter().sum()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: &str) -> u32 {
        match self.vars.iter().position(|v| v == var) {
            Some(i) => self.terms.keys().map(|e| e[i]).max().unwrap_or(0),
            None => 0,
        }
    }

    fn aligned(&self, vars: &[String]) -> BTreeMap<Vec<u32>, Gq> {
        let pos: Vec<usize> = self
            .vars
            .iter()
            .map(|v| vars.iter().position(|w| w == v).expect("superset of variables"))
            .collect();
        self.terms
            .iter()
            .map(|(e, c)| {
                let mut x = vec![0; vars.len()];
                for (k, &p) in pos.iter().enumerate() {
                    x[p] = e[k];
                }
                (x, c.clone())
            })
            .collect()
    }

    fn union_vars(&self, other: &Self) -> Vec<String> {
        let set: BTreeSet<&String> = self.vars.iter().chain(&other.vars).collect();
        set.into_iter().cloned().collect()
    }

    pub fn scale(&self, c: &Gq) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let terms = self.terms.iter().map(|(e, x)| (e.clone(), x.mul(c))).collect();
        MultiPoly { vars: self.vars.clone(), terms }
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(), |acc, _| acc.mul(self))
    }

    /// Evaluates at a full binding.
    pub fn eval(&self, bindings: &BTreeMap<String, Gq>) -> Result<Gq> {
        let vals: Vec<&Gq> = self
            .vars
            .iter()
            .map(|v| bindings.get(v).ok_or_else(|| Error::UnboundVariable(v.clone())))
            .collect::<Result<_>>()?;
        let mut acc = Gq::zero();
        for (e, c) in &self.terms {
            let mut t = c.clone();
            for (k, &x) in e.iter().enumerate() {
                t = t.mul(&vals[k].pow(x));
            }
            acc = acc.add(&t);
        }
        Ok(acc)
    }

    /// Substitutes the bound variables and leaves the rest symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<String, Gq>) -> Self {
        let mut out = self.clone();
        for (name, value) in bindings {
            if out.vars.contains(name) {
                out = out.subst_poly(name, &Self::constant(value.clone()));
            }
        }
        out
    }

    /// Replaces `var` by the polynomial `by`.
    pub fn subst_poly(&self, var: &str, by: &Self) -> Self {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return self.clone();
        };
        let mut powers: Vec<Self> = vec![Self::one()];
        let mut acc = Self::zero();
        for (e, c) in &self.terms {
            while powers.len() <= e[i] as usize {
                let next = powers.last().unwrap().mul(by);
                powers.push(next);
            }
            let mut rest = e.clone();
            rest[i] = 0;
            let mut t = BTreeMap::new();
            t.insert(rest, c.clone());
            let mono = Self::normalized(self.vars.clone(), t);
            acc = acc.add(&mono.mul(&powers[e[i] as usize]));
        }
        acc
    }

    /// The polynomial as a univariate one in `var`, if no other variable occurs.
    pub fn as_univariate(&self, var: &str) -> Option<UPoly> {
        match self.vars.len() {
            0 => Some(UPoly::constant(self.constant_value().unwrap())),
            1 if self.vars[0] == var => {
                let deg = self.degree_in(var) as usize;
                let mut c = vec![Gq::zero(); deg + 1];
                for (e, x) in &self.terms {
                    c[e[0] as usize] = x.clone();
                }
                Some(UPoly::new(c))
            }
            _ => None,
        }
    }

    /// Coefficients of the powers of `var`, lowest first.
    pub fn coeffs_in(&self, var: &str) -> Vec<Self> {
        let Some(i) = self.vars.iter().position(|v| v == var) else {
            return vec![self.clone()];
        };
        let deg = self.degree_in(var) as usize;
        let mut parts = vec![BTreeMap::new(); deg + 1];
        for (e, c) in &self.terms {
            let mut rest = e.clone();
            rest[i] = 0;
            parts[e[i] as usize].insert(rest, c.clone());
        }
        parts.into_iter().map(|t| Self::normalized(self.vars.clone(), t)).collect()
    }

    /// Largest monomial dividing every term, as per-variable exponents.
    pub fn monomial_content(&self) -> BTreeMap<String, u32> {
        let mut out = BTreeMap::new();
        if self.terms.is_empty() {
            return out;
        }
        for (k, v) in self.vars.iter().enumerate() {
            let m = self.terms.keys().map(|e| e[k]).min().unwrap_or(0);
            if m > 0 {
                out.insert(v.clone(), m);
            }
        }
        out
    }

    /// Divides by a monomial that is assumed to divide every term.
    pub fn div_monomial(&self, mono: &BTreeMap<String, u32>) -> Self {
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut x = e.clone();
                for (k, v) in self.vars.iter().enumerate() {
                    if let Some(m) = mono.get(v) {
                        x[k] -= m;
                    }
                }
                (x, c.clone())
            })
            .collect();
        Self::normalized(self.vars.clone(), terms)
    }

    /// Exact quotient `self / d`, or None when `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let vars = self.union_vars(d);
        let dt = d.aligned(&vars);
        let (de, dc) = dt.iter().next_back().map(|(e, c)| (e.clone(), c.clone()))?;
        let dinv = dc.inv()?;
        let mut r = self.aligned(&vars);
        let mut q: BTreeMap<Vec<u32>, Gq> = BTreeMap::new();
        while let Some((re, rc)) = r.iter().next_back().map(|(e, c)| (e.clone(), c.clone())) {
            if re.iter().zip(&de).any(|(a, b)| a < b) {
                return None;
            }
            let qe: Vec<u32> = re.iter().zip(&de).map(|(a, b)| a - b).collect();
            let qc = rc.mul(&dinv);
            for (e, c) in &dt {
                let key: Vec<u32> = e.iter().zip(&qe).map(|(a, b)| a + b).collect();
                let v = r.entry(key.clone()).or_insert_with(Gq::zero);
                *v = v.sub(&c.mul(&qc));
                if v.is_zero() {
                    r.remove(&key);
                }
            }
            q.insert(qe, qc);
        }
        Some(Self::normalized(vars, q))
    }

    fn combine(&self, other: &Self, sign: bool) -> Self {
        let vars = self.union_vars(other);
        let mut t = self.aligned(&vars);
        for (e, c) in other.aligned(&vars) {
            let v = t.entry(e).or_insert_with(Gq::zero);
            *v = if sign { v.add(&c) } else { v.sub(&c) };
        }
        Self::normalized(vars, t)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }

    fn one() -> Self {
        Self::constant(Gq::one())
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn add(&self, other: &Self) -> Self {
        self.combine(other, true)
    }

    fn sub(&self, other: &Self) -> Self {
        self.combine(other, false)
    }

    fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let vars = self.union_vars(other);
        let a = self.aligned(&vars);
        let b = other.aligned(&vars);
        let mut t: BTreeMap<Vec<u32>, Gq> = BTreeMap::new();
        for (ea, ca) in &a {
            for (eb, cb) in &b {
                let e: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                let v = t.entry(e).or_insert_with(Gq::zero);
                *v = v.add(&ca.mul(cb));
            }
        }
        Self::normalized(vars, t)
    }

    fn neg(&self) -> Self {
        self.scale(&Gq::from_int(-1))
    }

    fn from_gaussian(g: &Gq) -> Self {
        Self::constant(g.clone())
    }
}

/// Whether a coefficient can be printed without parentheses in front of a monomial.
pub(crate) fn is_atomic(s: &str) -> bool {
    !s[1..].contains(['+', '-'])
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let mut out = String::new();
        for (n, (e, c)) in self.terms.iter().rev().enumerate() {
            let mono: Vec<String> = self
                .vars
                .iter()
                .zip(e)
                .filter(|(_, &x)| x > 0)
                .map(|(v, &x)| if x == 1 { v.clone() } else { format!("{v}^{x}") })
                .collect();
            let mono = mono.join("*");
            let cs = c.to_string();
            let term = if mono.is_empty() {
                cs
            } else if c.is_one() {
                mono
            } else if *c == Gq::from_int(-1) {
                format!("-{mono}")
            } else if is_atomic(&cs) {
                format!("{cs}*{mono}")
            } else {
                format!("({cs})*{mono}")
            };
            if n == 0 {
                out.push_str(&term);
            } else if let Some(rest) = term.strip_prefix('-') {
                out.push_str(" - ");
                out.push_str(rest);
            } else {
                out.push_str(" + ");
                out.push_str(&term);
            }
        }
        f.write_str(&out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lam() -> MultiPoly {
        MultiPoly::var("lambda")
    }

    #[test]
    fn unused_variables_are_dropped() {
        let p = lam().sub(&lam());
        assert!(p.is_zero());
        assert!(p.vars().is_empty());
        let q = lam().mul(&MultiPoly::var("mu")).sub(&lam().mul(&MultiPoly::var("mu")));
        assert_eq!(q, MultiPoly::zero());
    }

    #[test]
    fn evaluation_and_substitution() {
        let p = lam().pow(2).sub(&lam());
        let mut b = BTreeMap::new();
        b.insert("lambda".to_string(), Gq::from_int(2));
        assert_eq!(p.eval(&b).unwrap(), Gq::from_int(2));
        assert_eq!(p.substitute(&b), MultiPoly::constant(Gq::from_int(2)));
        assert!(matches!(
            MultiPoly::var("mu").eval(&b),
            Err(Error::UnboundVariable(v)) if v == "mu"
        ));
    }

    #[test]
    fn exact_division() {
        let a = lam().add(&MultiPoly::one());
        let b = lam().sub(&MultiPoly::var("mu"));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&a), Some(b.clone()));
        assert_eq!(p.div_exact(&b), Some(a));
        assert_eq!(lam().div_exact(&b), None);
    }

    #[test]
    fn display() {
        let p = lam().pow(2).sub(&lam().scale(&Gq::from_frac(1, 2))).add(&MultiPoly::constant(Gq::i()));
        assert_eq!(p.to_string(), "lambda^2 - 1/2*lambda + i");
    }

    #[test]
    fn coefficients_in_a_variable() {
        let p = lam().mul(&MultiPoly::var("mu")).add(&MultiPoly::var("mu").pow(2)).add(&lam());
        let c = p.coeffs_in("mu");
        assert_eq!(c.len(), 3);
        assert_eq!(c[0], lam());
        assert_eq!(c[1], lam());
        assert_eq!(c[2], MultiPoly::one());
    }
}
