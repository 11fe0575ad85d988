use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use super::{Field, Gq, MultiPoly, Ring};
use crate::error::{Error, Result};

/// Dense univariate polynomial over Q(i), coefficients lowest degree first.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct UPoly {
    c: Vec<Gq>,
}

impl UPoly {
    pub fn new(mut c: Vec<Gq>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly { c }
    }

    pub fn zero() -> Self {
        UPoly { c: Vec::new() }
    }

    pub fn constant(a: Gq) -> Self {
        Self::new(vec![a])
    }

    /// The monic linear polynomial t - r.
    pub fn linear(r: &Gq) -> Self {
        Self::new(vec![r.neg(), Gq::one()])
    }

    pub fn x() -> Self {
        Self::new(vec![Gq::zero(), Gq::one()])
    }

    pub fn from_ints(c: &[i64]) -> Self {
        Self::new(c.iter().map(|&x| Gq::from_int(x)).collect())
    }

    pub fn coeffs(&self) -> &[Gq] {
        &self.c
    }

    pub fn coeff(&self, k: usize) -> Gq {
        self.c.get(k).cloned().unwrap_or_else(Gq::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.c.len().saturating_sub(1)
    }

    pub fn lead(&self) -> Gq {
        self.c.last().cloned().unwrap_or_else(Gq::zero)
    }

    pub fn monic(&self) -> Self {
        match self.lead().inv() {
            Some(inv) => self.scale(&inv),
            None => self.clone(),
        }
    }

    pub fn scale(&self, a: &Gq) -> Self {
        Self::new(self.c.iter().map(|x| x.mul(a)).collect())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k).add(&o.coeff(k))).collect())
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        Self::new((0..n).map(|k| self.coeff(k).sub(&o.coeff(k))).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        let mut c = vec![Gq::zero(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            for (j, b) in o.c.iter().enumerate() {
                c[i + j] = c[i + j].add(&a.mul(b));
            }
        }
        Self::new(c)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::constant(Gq::one()), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder; panics on a zero divisor.
    pub fn divrem(&self, d: &Self) -> (Self, Self) {
        let dl = d.lead().inv().expect("division by the zero polynomial");
        let mut r = self.c.clone();
        let dd = d.degree();
        if self.c.len() < d.c.len() {
            return (Self::zero(), self.clone());
        }
        let mut q = vec![Gq::zero(); self.c.len() - d.c.len() + 1];
        for k in (0..q.len()).rev() {
            let coef = r[k + dd].mul(&dl);
            if !coef.is_zero() {
                for (j, x) in d.c.iter().enumerate() {
                    r[k + j] = r[k + j].sub(&coef.mul(x));
                }
            }
            q[k] = coef;
        }
        r.truncate(dd);
        (Self::new(q), Self::new(r))
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Returns (g, s, t) with s*self + t*o = g and g monic.
    pub fn ext_gcd(&self, o: &Self) -> (Self, Self, Self) {
        let one = Self::constant(Gq::one());
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (one.clone(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s = s0.sub(&q.mul(&s1));
            let t = t0.sub(&q.mul(&t1));
            r0 = std::mem::replace(&mut r1, r);
            s0 = std::mem::replace(&mut s1, s);
            t0 = std::mem::replace(&mut t1, t);
        }
        match r0.lead().inv() {
            Some(inv) => (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)),
            None => (r0, s0, t0),
        }
    }

    pub fn eval(&self, x: &Gq) -> Gq {
        self.c.iter().rev().fold(Gq::zero(), |acc, a| acc.mul(x).add(a))
    }

    pub fn derivative(&self) -> Self {
        Self::new(
            self.c
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, a)| a.mul(&Gq::from_int(k as i64)))
                .collect(),
        )
    }

    /// Factors over Q(i); supported up to degree 4.
    pub fn factor(&self) -> Result<Factorization> {
        if self.is_zero() {
            return Err(Error::DomainMismatch("the zero polynomial has no factorization".into()));
        }
        if self.degree() > 4 {
            return Err(Error::DegreeTooHigh(self.degree()));
        }
        let lead = self.lead();
        let mut rest = self.monic();
        let mut factors: Vec<(UPoly, u32)> = Vec::new();
        while rest.degree() > 0 {
            match find_root(&rest)? {
                Some(r) => {
                    let lin = Self::linear(&r);
                    let mut m = 0;
                    loop {
                        let (q, rem) = rest.divrem(&lin);
                        if !rem.is_zero() {
                            break;
                        }
                        rest = q;
                        m += 1;
                    }
                    factors.push((lin, m));
                }
                None => break,
            }
        }
        match rest.degree() {
            0 => {}
            4 => match split_quartic(&rest)? {
                Some((a, b)) if a == b => factors.push((a, 2)),
                Some((a, b)) => {
                    factors.push((a, 1));
                    factors.push((b, 1));
                }
                None => factors.push((rest, 1)),
            },
            _ => factors.push((rest, 1)),
        }
        factors.sort_by(|a, b| a.0.degree().cmp(&b.0.degree()).then_with(|| a.0.c.cmp(&b.0.c)));
        Ok(Factorization { lead, factors })
    }

    /// Roots in Q(i) with multiplicity.
    pub fn roots(&self) -> Result<Vec<(Gq, u32)>> {
        Ok(self
            .factor()?
            .factors
            .into_iter()
            .filter(|(f, _)| f.degree() == 1)
            .map(|(f, m)| (f.coeff(0).neg(), m))
            .collect())
    }
}

/// Monic irreducible factors with multiplicities and the leading coefficient.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Factorization {
    pub lead: Gq,
    pub factors: Vec<(UPoly, u32)>,
}

impl Factorization {
    pub fn expand(&self) -> UPoly {
        self.factors
            .iter()
            .fold(UPoly::constant(self.lead.clone()), |acc, (f, m)| acc.mul(&f.pow(*m)))
    }
}

/// Factors a univariate polynomial in a single named variable.
pub fn factor_low_degree(p: &MultiPoly) -> Result<Factorization> {
    let var = p.vars().first().cloned().unwrap_or_else(|| "t".to_string());
    let u = p
        .as_univariate(&var)
        .ok_or_else(|| Error::DomainMismatch("polynomial is not univariate".into()))?;
    u.factor()
}

fn gaussian_norm_int(z: &Gq) -> BigInt {
    z.norm().to_integer()
}

fn round(x: &BigRational) -> BigInt {
    (x + BigRational::new(BigInt::one(), BigInt::from(2))).floor().to_integer()
}

/// Gaussian integer divided by `d`, if the quotient is a Gaussian integer.
fn exact_quotient(z: &Gq, d: &Gq) -> Option<Gq> {
    z.checked_div(d).filter(Gq::is_gaussian_integer)
}

fn gaussian_gcd(a: &Gq, b: &Gq) -> Gq {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let q = a.checked_div(&b).unwrap();
        let q = Gq::new(round(q.re()).into(), round(q.im()).into());
        let r = a.sub(&q.mul(&b));
        a = b;
        b = r;
    }
    a
}

/// A Gaussian prime above the rational prime p = 1 mod 4.
fn split_prime(p: &BigInt) -> Gq {
    let e = (p - BigInt::one()) / BigInt::from(4);
    let minus_one = p - BigInt::one();
    let mut c = BigInt::from(2);
    loop {
        let x = c.modpow(&e, p);
        if (&x * &x) % p == minus_one {
            let pg = Gq::from_rational(p.clone().into());
            return gaussian_gcd(&pg, &Gq::new(x.into(), BigInt::one().into()));
        }
        c += 1;
    }
}

/// Gaussian primes dividing the Gaussian integer `z`, with multiplicities.
fn gaussian_prime_factors(z: &Gq) -> Result<Vec<(Gq, u32)>> {
    let n = gaussian_norm_int(z).to_biguint().unwrap_or_default();
    let (primes, rest) = num_prime::nt_funcs::factors(n, None);
    if rest.is_some() {
        return Err(Error::SearchBoundExceeded("integer factorization"));
    }
    let mut z = z.clone();
    let mut out = Vec::new();
    for (p, _) in primes {
        let p = BigInt::from(p);
        let four = BigInt::from(4);
        let candidates = if p == BigInt::from(2) {
            vec![Gq::from_ints(1, 1)]
        } else if &p % &four == BigInt::from(3) {
            vec![Gq::from_rational(p.into())]
        } else {
            let pi = split_prime(&p);
            vec![pi.conj(), pi]
        };
        for pi in candidates {
            let mut k = 0;
            while let Some(q) = exact_quotient(&z, &pi) {
                z = q;
                k += 1;
            }
            if k > 0 {
                out.push((pi, k));
            }
        }
    }
    Ok(out)
}

/// Gaussian-integer divisors of `z` (all associates) with norm at most `bound`.
fn gaussian_divisors(z: &Gq, bound: &BigInt) -> Result<Vec<Gq>> {
    let mut divs = vec![Gq::one()];
    for (pi, k) in gaussian_prime_factors(z)? {
        let mut next = Vec::new();
        for d in &divs {
            let mut x = d.clone();
            for _ in 0..=k {
                if gaussian_norm_int(&x) > *bound {
                    break;
                }
                next.push(x.clone());
                x = x.mul(&pi);
            }
        }
        divs = next;
    }
    let units = [Gq::one(), Gq::i(), Gq::from_int(-1), Gq::i().neg()];
    Ok(divs.iter().flat_map(|d| units.iter().map(move |u| d.mul(u))).collect())
}

/// Rescales a monic polynomial to a monic one with Gaussian-integer
/// coefficients via t = s / D; returns the new coefficients and D.
fn integer_form(p: &UPoly) -> (Vec<Gq>, Gq) {
    let mut d = BigInt::one();
    for c in p.coeffs() {
        d = num_integer::Integer::lcm(&d, &c.denom_lcm());
    }
    let dq = Gq::from_rational(d.into());
    let n = p.degree();
    let c = (0..=n).map(|k| p.coeff(k).mul(&dq.pow((n - k) as u32))).collect();
    (c, dq)
}

fn root_bound(c: &[Gq]) -> BigInt {
    let n = c.len() - 1;
    let m = c[..n].iter().map(gaussian_norm_int).max().unwrap_or_default();
    let b = m.sqrt() + BigInt::from(2);
    &b * &b
}

fn find_root(p: &UPoly) -> Result<Option<Gq>> {
    let n = p.degree();
    if p.coeff(0).is_zero() {
        return Ok(Some(Gq::zero()));
    }
    match n {
        1 => return Ok(Some(p.coeff(0).neg())),
        2 => {
            let (b, c) = (p.coeff(1), p.coeff(0));
            let disc = b.mul(&b).sub(&c.mul(&Gq::from_int(4)));
            return Ok(disc.sqrt().map(|s| s.sub(&b).mul(&Gq::from_frac(1, 2))));
        }
        _ => {}
    }
    let (c, d) = integer_form(p);
    let ip = UPoly::new(c.clone());
    for s in gaussian_divisors(&c[0], &root_bound(&c))? {
        if ip.eval(&s).is_zero() {
            return Ok(Some(s.checked_div(&d).unwrap()));
        }
    }
    Ok(None)
}

/// Splits a monic root-free quartic into two monic quadratics, if possible.
fn split_quartic(p: &UPoly) -> Result<Option<(UPoly, UPoly)>> {
    let (c, d) = integer_form(p);
    let (e, cc, b, a) = (&c[0], &c[1], &c[2], &c[3]);
    let bound = root_bound(&c);
    let bound = &bound * &bound;
    for q in gaussian_divisors(e, &bound)? {
        let u = e.checked_div(&q).unwrap();
        let mut cands = Vec::new();
        if u != q {
            let p1 = cc.sub(&a.mul(&q)).checked_div(&u.sub(&q)).unwrap();
            cands.push(p1);
        } else if *cc == a.mul(&q) {
            let disc = a.mul(a).sub(&b.sub(&q.mul(&Gq::from_int(2))).mul(&Gq::from_int(4)));
            if let Some(s) = disc.sqrt() {
                cands.push(a.add(&s).mul(&Gq::from_frac(1, 2)));
            }
        }
        for p1 in cands {
            if !p1.is_gaussian_integer() {
                continue;
            }
            let r1 = a.sub(&p1);
            if p1.mul(&r1).add(&q).add(&u) == *b && p1.mul(&u).add(&r1.mul(&q)) == *cc {
                let back = |lin: &Gq, con: &Gq| {
                    UPoly::new(vec![con.checked_div(&d.mul(&d)).unwrap(), lin.checked_div(&d).unwrap(), Gq::one()])
                };
                let f = back(&p1, &q);
                let g = back(&r1, &u);
                return Ok(Some(if f.c <= g.c { (f, g) } else { (g, f) }));
            }
        }
    }
    Ok(None)
}

impl fmt::Display for UPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", MultiPoly::from_upoly("t", self))
    }
}
