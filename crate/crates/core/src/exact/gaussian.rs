use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Field, Ring};

/// An element of Q(i), stored as two reduced rationals.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn sqrt_rat(q: &BigRational) -> Option<BigRational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| BigRational::new(n, d))
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn from_int(n: i64) -> Self {
        Self::new(rat(n), BigRational::zero())
    }

    pub fn from_ints(re: i64, im: i64) -> Self {
        Self::new(rat(re), rat(im))
    }

    pub fn from_frac(n: i64, d: i64) -> Self {
        Self::new(BigRational::new(n.into(), d.into()), BigRational::zero())
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self::new(re, BigRational::zero())
    }

    pub fn i() -> Self {
        Self::from_ints(0, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn conj(&self) -> Self {
        Self::new(self.re.clone(), -&self.im)
    }

    /// re^2 + im^2.
    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn is_gaussian_integer(&self) -> bool {
        self.re.is_integer() && self.im.is_integer()
    }

    /// Least common multiple of the two denominators.
    pub fn denom_lcm(&self) -> BigInt {
        self.re.denom().lcm(self.im.denom())
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut out = Self::from_int(1);
        for _ in 0..e {
            out = &out * self;
        }
        out
    }

    /// Principal square root when it lies in Q(i).
    pub fn sqrt(&self) -> Option<Self> {
        if self.im.is_zero() {
            return if self.re.is_negative() {
                sqrt_rat(&-&self.re).map(|y| Self::new(BigRational::zero(), y))
            } else {
                sqrt_rat(&self.re).map(Self::from_rational)
            };
        }
        let n = sqrt_rat(&self.norm())?;
        let x2 = (&self.re + n) / rat(2);
        let x = sqrt_rat(&x2)?;
        let y = &self.im / (&x * rat(2));
        let r = Self::new(x, y);
        (&r * &r == *self).then_some(r)
    }

    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        Field::div(self, other)
    }
}

impl Ring for GaussianRational {
    fn zero() -> Self {
        Self::new(BigRational::zero(), BigRational::zero())
    }

    fn one() -> Self {
        Self::from_int(1)
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, other: &Self) -> Self {
        self + other
    }

    fn sub(&self, other: &Self) -> Self {
        self - other
    }

    fn mul(&self, other: &Self) -> Self {
        self * other
    }

    fn neg(&self) -> Self {
        -self
    }

    fn from_gaussian(g: &GaussianRational) -> Self {
        g.clone()
    }

    fn is_one(&self) -> bool {
        self.im.is_zero() && self.re.is_one()
    }
}

impl Field for GaussianRational {
    fn inv(&self) -> Option<Self> {
        if Ring::is_zero(self) {
            return None;
        }
        let n = self.norm();
        Some(Self::new(&self.re / &n, -&self.im / &n))
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re + &o.re, &self.im + &o.im)
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, o: &GaussianRational) -> GaussianRational {
        GaussianRational::new(&self.re - &o.re, &self.im - &o.im)
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, o: &GaussianRational) -> GaussianRational {
        if self.im.is_zero() && o.im.is_zero() {
            return GaussianRational::from_rational(&self.re * &o.re);
        }
        GaussianRational::new(
            &self.re * &o.re - &self.im * &o.im,
            &self.re * &o.im + &self.im * &o.re,
        )
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational::new(-&self.re, -&self.im)
    }
}

fn fmt_rat(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn fmt_imag(y: &BigRational) -> String {
    let n = y.numer();
    let head = if n.is_one() {
        "i".to_string()
    } else if *n == BigInt::from(-1) {
        "-i".to_string()
    } else {
        format!("{n}i")
    };
    if y.is_integer() {
        head
    } else {
        format!("{head}/{}", y.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            return f.write_str(&fmt_rat(&self.re));
        }
        if self.re.is_zero() {
            return f.write_str(&fmt_imag(&self.im));
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}", fmt_rat(&self.re), sign, fmt_imag(&self.im.abs()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn norm_of_gaussian_integer() {
        let a = GaussianRational::from_ints(1, 1);
        let b = GaussianRational::from_ints(1, -1);
        assert_eq!(&a * &b, GaussianRational::from_int(2));
    }

    #[test]
    fn display_forms() {
        let q = GaussianRational::new(BigRational::new(1.into(), 2.into()), BigRational::new(3.into(), 4.into()));
        assert_eq!(q.to_string(), "1/2+3i/4");
        assert_eq!((-&GaussianRational::i()).to_string(), "-i");
        assert_eq!(GaussianRational::from_ints(0, 3).to_string(), "3i");
        assert_eq!(GaussianRational::from_ints(2, -1).to_string(), "2-i");
        assert_eq!(GaussianRational::from_frac(-3, 6).to_string(), "-1/2");
    }

    #[test]
    fn square_roots() {
        let z = GaussianRational::from_ints(0, 2);
        assert_eq!(z.sqrt(), Some(GaussianRational::from_ints(1, 1)));
        assert_eq!(GaussianRational::from_int(-4).sqrt(), Some(GaussianRational::from_ints(0, 2)));
        assert_eq!(GaussianRational::from_int(2).sqrt(), None);
        let w = GaussianRational::from_ints(3, -4);
        let r = w.sqrt().unwrap();
        assert_eq!(&r * &r, w);
    }

    #[test]
    fn inverse() {
        let z = GaussianRational::from_ints(3, 4);
        assert_eq!(&z * &z.inv().unwrap(), GaussianRational::from_int(1));
        assert!(GaussianRational::zero().inv().is_none());
    }
}
