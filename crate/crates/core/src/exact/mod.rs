//! Exact scalar domains.
//!
//! Generic code is written against [`Ring`] and [`Field`] using named methods,
//! so the same matrix and algebra routines run over Gaussian rationals,
//! rational functions in the catalog parameters, and extension fields.

mod ext;
mod gaussian;
mod parse;
mod poly;
mod ratfunc;
mod scalar;
mod upoly;

use std::fmt;

pub use ext::{ExtField, ExtScalar};
pub use gaussian::GaussianRational;
pub use parse::{canonical_var, parse_lincomb, parse_matrix_rows, parse_scalar};
pub(crate) use poly::is_atomic;
pub use poly::MultiPoly;
pub use ratfunc::RatFunc;
pub use scalar::{field_arith, ArithOp, Scalar};
pub use upoly::{factor_low_degree, Factorization, UPoly};

/// Short alias used throughout the crate.
pub type Gq = GaussianRational;

pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn sub(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn from_gaussian(g: &GaussianRational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_gaussian(&GaussianRational::from_int(n))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }
}

pub trait Field: Ring {
    fn inv(&self) -> Option<Self>;

    fn div(&self, other: &Self) -> Option<Self> {
        other.inv().map(|o| self.mul(&o))
    }
}
