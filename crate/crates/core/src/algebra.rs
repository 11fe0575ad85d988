//! Bilinear products given by structure constants and the left-symmetric axiom.

use std::fmt;

use crate::exact::{is_atomic, Field, Ring};
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;

/// Coordinates in the algebra's basis.
pub type Vector<F> = Vec<F>;

/// A basis triple (1-based) where an identity fails, with the nonzero difference.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleViolation<F> {
    pub triple: (usize, usize, usize),
    pub difference: Vector<F>,
}

impl<F: Ring> fmt::Display for TripleViolation<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (i, j, k) = self.triple;
        write!(f, "at (e{i}, e{j}, e{k}) difference is {}", format_lincomb(&self.difference))
    }
}

/// A basis pair (1-based) where an identity of linear maps fails.
#[derive(Clone, Debug, PartialEq)]
pub struct PairViolation {
    pub pair: (usize, usize),
}

impl fmt::Display for PairViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "at (e{}, e{})", self.pair.0, self.pair.1)
    }
}

/// Renders coordinates as `2 e1 - e3`; the zero vector is `0`.
pub fn format_lincomb<F: Ring>(v: &[F]) -> String {
    let mut out = String::new();
    for (k, c) in v.iter().enumerate() {
        if c.is_zero() {
            continue;
        }
        let cs = c.to_string();
        let term = match cs.as_str() {
            "1" => format!("e{}", k + 1),
            "-1" => format!("-e{}", k + 1),
            s if is_atomic(s) => format!("{s} e{}", k + 1),
            s => format!("({s}) e{}", k + 1),
        };
        if out.is_empty() {
            out = term;
        } else if let Some(rest) = term.strip_prefix('-') {
            out.push_str(" - ");
            out.push_str(rest);
        } else {
            out.push_str(" + ");
            out.push_str(&term);
        }
    }
    if out.is_empty() {
        "0".into()
    } else {
        out
    }
}

fn check_len(expected: usize, v: &[impl Sized]) -> Result<()> {
    if v.len() == expected {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, got: v.len() })
    }
}

/// Structure constants: e_i e_j = sum_k c[i][j][k] e_k (0-based internally).
#[derive(Clone, PartialEq, Debug)]
pub struct Algebra<F> {
    dim: usize,
    c: Vec<F>,
}

impl<F: Ring> Algebra<F> {
    pub fn zero(dim: usize) -> Self {
        Algebra { dim, c: vec![F::zero(); dim * dim * dim] }
    }

    /// Builds the table from the products of basis pairs.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector<F>) -> Self {
        let mut a = Self::zero(dim);
        for i in 0..dim {
            for j in 0..dim {
                let v = f(i, j);
                assert_eq!(v.len(), dim, "product has wrong length");
                a.set_product(i, j, v);
            }
        }
        a
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Coordinates of e_i e_j (0-based indices).
    pub fn product(&self, i: usize, j: usize) -> &[F] {
        let s = (i * self.dim + j) * self.dim;
        &self.c[s..s + self.dim]
    }

    pub fn set_product(&mut self, i: usize, j: usize, v: Vector<F>) {
        let s = (i * self.dim + j) * self.dim;
        for (k, x) in v.into_iter().enumerate() {
            self.c[s + k] = x;
        }
    }

    pub fn constants(&self) -> &[F] {
        &self.c
    }

    pub fn is_zero_product(&self) -> bool {
        self.c.iter().all(Ring::is_zero)
    }

    pub fn basis(&self, i: usize) -> Vector<F> {
        (0..self.dim).map(|k| if k == i { F::one() } else { F::zero() }).collect()
    }

    pub(crate) fn mul_vec(&self, x: &[F], y: &[F]) -> Vector<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let s = xi.mul(yj);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.c[(i * n + j) * n + k];
                    if !c.is_zero() {
                        *o = o.add(&s.mul(c));
                    }
                }
            }
        }
        out
    }

    pub fn multiply(&self, x: &[F], y: &[F]) -> Result<Vector<F>> {
        check_len(self.dim, x)?;
        check_len(self.dim, y)?;
        Ok(self.mul_vec(x, y))
    }

    /// (xy)z - x(yz).
    pub fn associator(&self, x: &[F], y: &[F], z: &[F]) -> Result<Vector<F>> {
        check_len(self.dim, z)?;
        let xy = self.multiply(x, y)?;
        let yz = self.multiply(y, z)?;
        Ok(sub_vec(&self.mul_vec(&xy, z), &self.mul_vec(x, &yz)))
    }

    pub(crate) fn basis_associator(&self, i: usize, j: usize, k: usize) -> Vector<F> {
        let xy = self.product(i, j).to_vec();
        let yz = self.product(j, k).to_vec();
        sub_vec(&self.mul_vec(&xy, &self.basis(k)), &self.mul_vec(&self.basis(i), &yz))
    }

    /// First basis triple where (x,y,z) = (y,x,z) fails.
    pub fn check_left_symmetric(&self) -> Result<(), TripleViolation<F>> {
        let n = self.dim;
        let assoc: Vec<Vector<F>> = (0..n * n * n)
            .map(|t| self.basis_associator(t / (n * n), (t / n) % n, t % n))
            .collect();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let d = sub_vec(&assoc[(i * n + j) * n + k], &assoc[(j * n + i) * n + k]);
                    if d.iter().any(|x| !x.is_zero()) {
                        return Err(TripleViolation { triple: (i + 1, j + 1, k + 1), difference: d });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_left_symmetric(&self) -> bool {
        self.check_left_symmetric().is_ok()
    }

    /// The bracket [x,y] = xy - yx.
    pub fn commutator_lie(&self) -> LieAlgebra<F> {
        LieAlgebra::from_fn(self.dim, |i, j| sub_vec(self.product(i, j), self.product(j, i)))
    }

    /// Matrix of y -> xy; column j holds x e_j.
    pub fn left_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| self.mul_vec(x, &self.basis(j))).collect();
        Matrix::from_columns(&cols)
    }

    /// Matrix of y -> yx; column j holds e_j x.
    pub fn right_matrix(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| self.mul_vec(&self.basis(j), x)).collect();
        Matrix::from_columns(&cols)
    }

    pub fn left_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.product(i, j)[k].clone())
    }

    pub fn right_basis(&self, i: usize) -> Matrix<F> {
        Matrix::from_fn(self.dim, self.dim, |k, j| self.product(j, i)[k].clone())
    }

    /// First basis pair where [L_x, L_y] = L_[x,y] fails.
    pub fn check_left_regular(&self) -> Result<(), PairViolation> {
        let ls: Vec<Matrix<F>> = (0..self.dim).map(|i| self.left_basis(i)).collect();
        let g = self.commutator_lie();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let lhs = ls[i].commutator(&ls[j]);
                let rhs = self.left_matrix(g.bracket_basis(i, j));
                if lhs != rhs {
                    return Err(PairViolation { pair: (i + 1, j + 1) });
                }
            }
        }
        Ok(())
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> Algebra<G> {
        Algebra { dim: self.dim, c: self.c.iter().map(f).collect() }
    }

    pub fn try_map<G: Ring>(&self, f: impl Fn(&F) -> Result<G>) -> Result<Algebra<G>> {
        Ok(Algebra { dim: self.dim, c: self.c.iter().map(f).collect::<Result<_>>()? })
    }
}

impl<F: Field> Algebra<F> {
    /// The same product written in the basis given by the columns of `p`:
    /// the result b satisfies p(x *_b y) = p x * p y.
    pub fn transport(&self, p: &Matrix<F>) -> Result<Self> {
        let inv = p.inverse().ok_or(Error::SingularWitness)?;
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| p.column(j)).collect();
        Ok(Self::from_fn(self.dim, |i, j| inv.mul_vec(&self.mul_vec(&cols[i], &cols[j]))))
    }
}

pub(crate) fn sub_vec<F: Ring>(a: &[F], b: &[F]) -> Vector<F> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

/// One line `ei ej = ...` per nonzero product.
impl<F: Ring> fmt::Display for Algebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in 0..self.dim {
                let p = self.product(i, j);
                if p.iter().any(|x| !x.is_zero()) {
                    writeln!(f, "e{} e{} = {}", i + 1, j + 1, format_lincomb(p))?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::Gq;

    pub(crate) fn table(dim: usize, entries: &[(usize, usize, &[i64])]) -> Algebra<Gq> {
        let mut a = Algebra::zero(dim);
        for &(i, j, v) in entries {
            a.set_product(i - 1, j - 1, v.iter().map(|&x| Gq::from_int(x)).collect());
        }
        a
    }

    fn h1() -> Algebra<Gq> {
        table(3, &[(1, 1, &[1, 0, 0]), (1, 2, &[0, 1, 1]), (1, 3, &[0, 0, 1]), (2, 1, &[0, 1, 0]), (3, 1, &[0, 0, 1])])
    }

    fn e(k: usize) -> Vec<Gq> {
        (0..3).map(|i| if i == k - 1 { Gq::one() } else { Gq::zero() }).collect()
    }

    #[test]
    fn products_of_h1() {
        let a = h1();
        assert_eq!(a.multiply(&e(1), &e(2)).unwrap(), vec![Gq::zero(), Gq::one(), Gq::one()]);
        assert!(matches!(a.multiply(&e(1)[..2], &e(2)), Err(Error::DimensionMismatch { expected: 3, got: 2 })));
    }

    #[test]
    fn associator_by_expansion() {
        let a = h1();
        let z = a.associator(&e(2), &e(1), &e(2)).unwrap();
        assert!(z.iter().all(Ring::is_zero));
        let idem = table(3, &[(1, 1, &[1, 0, 0])]);
        assert!(idem.associator(&e(1), &e(1), &e(1)).unwrap().iter().all(Ring::is_zero));
    }

    #[test]
    fn h1_is_left_symmetric_with_heisenberg_commutator() {
        let a = h1();
        assert!(a.is_left_symmetric());
        assert!(a.check_left_regular().is_ok());
        let g = a.commutator_lie();
        assert_eq!(g.bracket_basis(0, 1), &[Gq::zero(), Gq::zero(), Gq::one()][..]);
        assert!(g.bracket_basis(0, 2).iter().all(Ring::is_zero));
        assert!(g.bracket_basis(1, 2).iter().all(Ring::is_zero));
    }

    #[test]
    fn failing_table_has_a_certificate() {
        let bad = table(3, &[(1, 1, &[0, 1, 0]), (2, 1, &[1, 0, 0])]);
        let v = bad.check_left_symmetric().unwrap_err();
        let (i, j, k) = v.triple;
        let lhs = sub_vec(&bad.basis_associator(i - 1, j - 1, k - 1), &bad.basis_associator(j - 1, i - 1, k - 1));
        assert_eq!(lhs, v.difference);
        assert!(v.difference.iter().any(|x| !x.is_zero()));
        assert!(bad.check_left_regular().is_err());
    }

    #[test]
    fn left_and_right_matrices() {
        let a = h1();
        let l = a.left_matrix(&e(1));
        assert_eq!(l.column(1), vec![Gq::zero(), Gq::one(), Gq::one()]);
        let r = a.right_matrix(&e(1));
        assert_eq!(r, Matrix::identity(3));
        assert_eq!(a.left_basis(0), l);
        assert_eq!(a.right_basis(0), r);
        let z = Algebra::<Gq>::zero(3);
        assert!(z.left_matrix(&e(2)).is_zero());
        assert!(z.is_left_symmetric());
    }

    #[test]
    fn display_lines() {
        let a = h1();
        let s = a.to_string();
        assert!(s.contains("e1 e2 = e2 + e3"));
        assert_eq!(s.lines().count(), 5);
    }
}
