use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use super::poly::is_atomic;
use super::{Field, Gq, MultiPoly, Ring};
use crate::error::{Error, Result};

/// Quotient of two polynomials with a nonzero, monic denominator.
///
/// Common factors are cancelled when they are monomials, when the
/// denominator divides the numerator, or in the univariate case. Equality
/// is decided by cross-multiplication, so uncancelled forms compare correctly.
#[derive(Clone, Debug)]
pub struct RatFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl RatFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalize(num, den))
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        RatFunc { num: p, den: MultiPoly::one() }
    }

    pub fn var(name: &str) -> Self {
        Self::from_poly(MultiPoly::var(name))
    }

    pub fn constant(c: Gq) -> Self {
        Self::from_poly(MultiPoly::constant(c))
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn vars(&self) -> BTreeSet<String> {
        self.num.vars().iter().chain(self.den.vars()).cloned().collect()
    }

    pub fn as_constant(&self) -> Option<Gq> {
        if self.den.is_constant() && self.num.is_constant() {
            self.num.constant_value()?.checked_div(&self.den.constant_value()?)
        } else {
            None
        }
    }

    fn normalize(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RatFunc { num, den: MultiPoly::one() };
        }
        let (mut num, mut den) = (num, den);
        let mn = num.monomial_content();
        let md = den.monomial_content();
        let common: BTreeMap<String, u32> = mn
            .iter()
            .filter_map(|(v, &e)| md.get(v).map(|&f| (v.clone(), e.min(f))))
            .collect();
        if !common.is_empty() {
            num = num.div_monomial(&common);
            den = den.div_monomial(&common);
        }
        if !den.is_constant() {
            if let Some(q) = num.div_exact(&den) {
                num = q;
                den = MultiPoly::one();
            } else if den.vars().len() == 1 && num.vars().iter().all(|v| *v == den.vars()[0]) {
                let v = den.vars()[0].clone();
                let (a, b) = (num.as_univariate(&v).unwrap(), den.as_univariate(&v).unwrap());
                let g = a.gcd(&b);
                if g.degree() > 0 {
                    num = MultiPoly::from_upoly(&v, &a.divrem(&g).0);
                    den = MultiPoly::from_upoly(&v, &b.divrem(&g).0);
                }
            }
        }
        let lc = den.leading_coeff().inv().expect("nonzero denominator");
        RatFunc { num: num.scale(&lc), den: den.scale(&lc) }
    }

    /// Evaluates at a full binding.
    pub fn eval(&self, bindings: &BTreeMap<String, Gq>) -> Result<Gq> {
        let d = self.den.eval(bindings)?;
        let n = self.num.eval(bindings)?;
        n.checked_div(&d).ok_or(Error::DenominatorVanishes)
    }

    /// Substitutes the bound variables, keeping the others symbolic.
    pub fn substitute(&self, bindings: &BTreeMap<String, Gq>) -> Result<Self> {
        let den = self.den.substitute(bindings);
        if den.is_zero() {
            return Err(Error::DenominatorVanishes);
        }
        Ok(Self::normalize(self.num.substitute(bindings), den))
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.den == other.den {
            return self.num == other.num;
        }
        self.num.mul(&other.den) == other.num.mul(&self.den)
    }
}

impl Ring for RatFunc {
    fn zero() -> Self {
        Self::from_poly(MultiPoly::zero())
    }

    fn one() -> Self {
        Self::from_poly(MultiPoly::one())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::normalize(self.num.add(&o.num), self.den.clone());
        }
        Self::normalize(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        Self::normalize(self.num.mul(&o.num), self.den.mul(&o.den))
    }

    fn neg(&self) -> Self {
        RatFunc { num: self.num.neg(), den: self.den.clone() }
    }

    fn from_gaussian(g: &Gq) -> Self {
        Self::constant(g.clone())
    }
}

impl Field for RatFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::normalize(self.den.clone(), self.num.clone()))
    }
}

fn wrap(s: String, single_factor: bool) -> String {
    if single_factor {
        s
    } else {
        format!("({s})")
    }
}

impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        let n = self.num.to_string();
        let num_single = self.num.num_terms() == 1 && is_atomic(&n);
        let d = self.den.to_string();
        let den_single = self.den.num_terms() == 1 && self.den.vars().len() == 1 && !d.contains('*');
        write!(f, "{}/{}", wrap(n, num_single), wrap(d, den_single))
    }
}
