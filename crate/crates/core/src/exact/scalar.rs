use std::fmt;

use num_rational::BigRational;
use num_traits::Zero;

use super::{ExtScalar, Field, Gq, RatFunc, Ring};
use crate::error::{Error, Result};

/// A value tagged with its scalar domain.
///
/// Promotion runs upward only: rational, then Gaussian rational, then either
/// rational function or extension element. The last two never mix.
#[derive(Clone, Debug, PartialEq)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(Gq),
    Func(RatFunc),
    Ext(ExtScalar),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ArithOp {
    Add,
    Sub,
    Mul,
    Div,
}

impl Scalar {
    pub fn domain(&self) -> &'static str {
        match self {
            Scalar::Rational(_) => "rational",
            Scalar::Gaussian(_) => "gaussian",
            Scalar::Func(_) => "ratfunc",
            Scalar::Ext(_) => "extension",
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(r) => r.is_zero(),
            Scalar::Gaussian(g) => g.is_zero(),
            Scalar::Func(f) => f.is_zero(),
            Scalar::Ext(e) => e.is_zero(),
        }
    }

    fn as_gaussian(&self) -> Option<Gq> {
        match self {
            Scalar::Rational(r) => Some(Gq::from_rational(r.clone())),
            Scalar::Gaussian(g) => Some(g.clone()),
            _ => None,
        }
    }
}

fn apply<F: Field>(a: &F, b: &F, op: ArithOp) -> Result<F> {
    Ok(match op {
        ArithOp::Add => a.add(b),
        ArithOp::Sub => a.sub(b),
        ArithOp::Mul => a.mul(b),
        ArithOp::Div => a.div(b).ok_or(Error::DivisionByZero)?,
    })
}

/// Exact arithmetic on tagged scalars with upward promotion.
pub fn field_arith(a: &Scalar, b: &Scalar, op: ArithOp) -> Result<Scalar> {
    use Scalar::*;
    match (a, b) {
        (Rational(x), Rational(y)) => match op {
            ArithOp::Div if y.is_zero() => Err(Error::DivisionByZero),
            ArithOp::Add => Ok(Rational(x + y)),
            ArithOp::Sub => Ok(Rational(x - y)),
            ArithOp::Mul => Ok(Rational(x * y)),
            ArithOp::Div => Ok(Rational(x / y)),
        },
        (Rational(_) | Gaussian(_), Rational(_) | Gaussian(_)) => {
            Ok(Gaussian(apply(&a.as_gaussian().unwrap(), &b.as_gaussian().unwrap(), op)?))
        }
        (Func(x), Func(y)) => Ok(Func(apply(x, y, op)?)),
        (Func(x), _) if b.as_gaussian().is_some() => {
            Ok(Func(apply(x, &RatFunc::constant(b.as_gaussian().unwrap()), op)?))
        }
        (_, Func(y)) if a.as_gaussian().is_some() => {
            Ok(Func(apply(&RatFunc::constant(a.as_gaussian().unwrap()), y, op)?))
        }
        (Ext(x), Ext(y)) if x.same_field(y) => Ok(Ext(apply(x, y, op)?)),
        (Ext(x), _) if b.as_gaussian().is_some() => {
            Ok(Ext(apply(x, &ExtScalar::from_gq(&b.as_gaussian().unwrap()), op)?))
        }
        (_, Ext(y)) if a.as_gaussian().is_some() => {
            Ok(Ext(apply(&ExtScalar::from_gq(&a.as_gaussian().unwrap()), y, op)?))
        }
        _ => Err(Error::DomainMismatch(format!("{} with {}", a.domain(), b.domain()))),
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(r) => write!(f, "{}", Gq::from_rational(r.clone())),
            Scalar::Gaussian(g) => write!(f, "{g}"),
            Scalar::Func(r) => write!(f, "{r}"),
            Scalar::Ext(e) => write!(f, "{e}"),
        }
    }
}
