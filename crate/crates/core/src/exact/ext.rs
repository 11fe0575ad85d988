use std::fmt;
use std::sync::Arc;

use super::{Field, Gq, MultiPoly, Ring, UPoly};
use crate::error::{Error, Result};

/// Q(i)[t] / (m) for a monic modulus m irreducible over Q(i).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ExtField {
    modulus: Arc<UPoly>,
}

impl ExtField {
    pub fn new(modulus: &UPoly) -> Result<Self> {
        let m = modulus.monic();
        if !(2..=4).contains(&m.degree()) {
            return Err(Error::ExtensionDegreeTooHigh(m.degree()));
        }
        let f = m.factor()?;
        if f.factors.len() != 1 || f.factors[0].1 != 1 {
            return Err(Error::ReducibleModulus);
        }
        Ok(ExtField { modulus: Arc::new(m) })
    }

    pub fn modulus(&self) -> &UPoly {
        &self.modulus
    }

    pub fn degree(&self) -> usize {
        self.modulus.degree()
    }

    /// The class of t, a root of the modulus.
    pub fn generator(&self) -> ExtScalar {
        self.element(UPoly::x())
    }

    pub fn embed(&self, a: &Gq) -> ExtScalar {
        self.element(UPoly::constant(a.clone()))
    }

    pub fn element(&self, p: UPoly) -> ExtScalar {
        let c = p.divrem(&self.modulus).1;
        ExtScalar { field: Some(self.modulus.clone()), c }
    }
}

/// Element of an extension field, or of Q(i) itself when `field` is None.
#[derive(Clone, Debug)]
pub struct ExtScalar {
    field: Option<Arc<UPoly>>,
    c: UPoly,
}

impl ExtScalar {
    pub fn from_gq(a: &Gq) -> Self {
        ExtScalar { field: None, c: UPoly::constant(a.clone()) }
    }

    pub fn modulus(&self) -> Option<&UPoly> {
        self.field.as_deref()
    }

    /// Representative polynomial in t of degree below the modulus degree.
    pub fn poly(&self) -> &UPoly {
        &self.c
    }

    pub fn as_gq(&self) -> Option<Gq> {
        (self.c.degree() == 0).then(|| self.c.coeff(0))
    }

    pub fn same_field(&self, other: &Self) -> bool {
        match (&self.field, &other.field) {
            (Some(a), Some(b)) => a == b,
            _ => true,
        }
    }

    fn join(&self, other: &Self) -> Option<Arc<UPoly>> {
        assert!(self.same_field(other), "elements of different extension fields");
        self.field.clone().or_else(|| other.field.clone())
    }

    fn make(field: Option<Arc<UPoly>>, p: UPoly) -> Self {
        let c = match &field {
            Some(m) => p.divrem(m).1,
            None => p,
        };
        ExtScalar { field, c }
    }
}

impl PartialEq for ExtScalar {
    fn eq(&self, other: &Self) -> bool {
        self.same_field(other) && self.c == other.c
    }
}

impl Ring for ExtScalar {
    fn zero() -> Self {
        Self::from_gq(&Gq::zero())
    }

    fn one() -> Self {
        Self::from_gq(&Gq::one())
    }

    fn is_zero(&self) -> bool {
        self.c.is_zero()
    }

    fn add(&self, o: &Self) -> Self {
        Self::make(self.join(o), self.c.add(&o.c))
    }

    fn sub(&self, o: &Self) -> Self {
        Self::make(self.join(o), self.c.sub(&o.c))
    }

    fn mul(&self, o: &Self) -> Self {
        Self::make(self.join(o), self.c.mul(&o.c))
    }

    fn neg(&self) -> Self {
        ExtScalar { field: self.field.clone(), c: self.c.scale(&Gq::from_int(-1)) }
    }

    fn from_gaussian(g: &Gq) -> Self {
        Self::from_gq(g)
    }
}

impl Field for ExtScalar {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        match &self.field {
            None => Some(Self::from_gq(&self.c.coeff(0).inv()?)),
            Some(m) => {
                let (g, s, _) = self.c.ext_gcd(m);
                (g.degree() == 0).then(|| Self::make(self.field.clone(), s))
            }
        }
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_gq() {
            Some(g) => write!(f, "{g}"),
            None => write!(f, "{}", MultiPoly::from_upoly("t", &self.c)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_of_t_plus_one_mod_t_squared_minus_two() {
        let k = ExtField::new(&UPoly::from_ints(&[-2, 0, 1])).unwrap();
        let t = k.generator();
        let a = t.add(&ExtScalar::one());
        let inv = a.inv().unwrap();
        assert_eq!(inv, t.sub(&ExtScalar::one()));
        assert_eq!(a.mul(&inv), ExtScalar::one());
    }

    #[test]
    fn reducible_modulus_is_rejected() {
        assert_eq!(ExtField::new(&UPoly::from_ints(&[1, 0, 1])), Err(Error::ReducibleModulus));
    }

    #[test]
    fn generator_is_a_root() {
        let m = UPoly::from_ints(&[-2, 0, 0, 1]);
        let k = ExtField::new(&m).unwrap();
        let t = k.generator();
        assert!(t.mul(&t).mul(&t).sub(&k.embed(&Gq::from_int(2))).is_zero());
        assert_eq!(t.to_string(), "t");
    }
}
