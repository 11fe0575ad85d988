//! Representations, 1-cocycles and the correspondence with left-symmetric algebras.
//!
//! Matrices are stored in the standard layout (column j is the image of e_j).
//! File data, where row r of f(e_i) is the image of v_r and row i of C holds
//! the coordinates of q(e_i), is transposed on the way in by [`Representation::from_printed`]
//! and [`Cocycle::from_printed`].

use crate::algebra::{Algebra, PairViolation, Vector};
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;

/// A linear action of `g` on a space of the same dimension.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation<F> {
    pub g: LieAlgebra<F>,
    pub f: Vec<Matrix<F>>,
}

/// A linear map q from `rep.g` to the representation space.
#[derive(Clone, Debug, PartialEq)]
pub struct Cocycle<F> {
    pub rep: Representation<F>,
    pub q: Matrix<F>,
}

fn combine<F: Field>(ms: &[Matrix<F>], coeffs: &[F]) -> Matrix<F> {
    let n = ms[0].rows();
    coeffs
        .iter()
        .zip(ms)
        .filter(|(c, _)| !c.is_zero())
        .fold(Matrix::zeros(n, n), |acc, (c, m)| acc.add(&m.scale(c)))
}

impl<F: Field> Representation<F> {
    pub fn new(g: LieAlgebra<F>, f: Vec<Matrix<F>>) -> Result<Self> {
        let n = g.dim();
        if f.len() != n {
            return Err(Error::DimensionMismatch { expected: n, got: f.len() });
        }
        if let Some(m) = f.iter().find(|m| m.rows() != n || m.cols() != n) {
            return Err(Error::DimensionMismatch { expected: n, got: m.rows().max(m.cols()) });
        }
        Ok(Representation { g, f })
    }

    /// Takes matrices whose row r is the image of v_r.
    pub fn from_printed(g: LieAlgebra<F>, printed: Vec<Matrix<F>>) -> Result<Self> {
        Self::new(g, printed.iter().map(Matrix::transpose).collect())
    }

    pub fn dim(&self) -> usize {
        self.g.dim()
    }

    /// The matrix of f(x).
    pub fn action(&self, x: &[F]) -> Matrix<F> {
        combine(&self.f, x)
    }

    /// First basis pair where f([e_i,e_j]) = [f(e_i), f(e_j)] fails.
    pub fn check(&self) -> Result<(), PairViolation> {
        for i in 0..self.dim() {
            for j in i + 1..self.dim() {
                if self.action(self.g.bracket_basis(i, j)) != self.f[i].commutator(&self.f[j]) {
                    return Err(PairViolation { pair: (i + 1, j + 1) });
                }
            }
        }
        Ok(())
    }
}

impl<F: Field> Cocycle<F> {
    pub fn new(rep: Representation<F>, q: Matrix<F>) -> Result<Self> {
        let n = rep.dim();
        if q.rows() != n || q.cols() != n {
            return Err(Error::DimensionMismatch { expected: n, got: q.rows().max(q.cols()) });
        }
        Ok(Cocycle { rep, q })
    }

    /// Takes C with row i holding the coordinates of q(e_i).
    pub fn from_printed(rep: Representation<F>, c: &Matrix<F>) -> Result<Self> {
        Self::new(rep, c.transpose())
    }

    /// The matrix C = (A_j(e_i)).
    pub fn c_matrix(&self) -> Matrix<F> {
        self.q.transpose()
    }

    /// First basis pair where q[e_i,e_j] = f(e_i)q(e_j) - f(e_j)q(e_i) fails.
    pub fn check(&self) -> Result<(), PairViolation> {
        let f = &self.rep.f;
        for i in 0..self.rep.dim() {
            for j in i + 1..self.rep.dim() {
                let lhs = self.q.mul_vec(self.rep.g.bracket_basis(i, j));
                let a = f[i].mul_vec(&self.q.column(j));
                let b = f[j].mul_vec(&self.q.column(i));
                let rhs: Vector<F> = a.iter().zip(&b).map(|(x, y)| x.sub(y)).collect();
                if lhs != rhs {
                    return Err(PairViolation { pair: (i + 1, j + 1) });
                }
            }
        }
        Ok(())
    }

    pub fn is_bijective(&self) -> bool {
        !self.q.det().is_zero()
    }
}

pub fn check_representation<F: Field>(rep: &Representation<F>) -> Result<(), PairViolation> {
    rep.check()
}

pub fn check_cocycle<F: Field>(c: &Cocycle<F>) -> Result<(), PairViolation> {
    c.check()
}

pub fn is_bijective<F: Field>(c: &Cocycle<F>) -> bool {
    c.is_bijective()
}

/// The left-symmetric product x*y = q^{-1}(f(x) q(y)).
pub fn phi<F: Field>(c: &Cocycle<F>) -> Result<Algebra<F>> {
    if let Err(v) = c.rep.check() {
        return Err(Error::NotRepresentation(v.to_string()));
    }
    if let Err(v) = c.check() {
        return Err(Error::NotCocycle(v.to_string()));
    }
    let inv = c.q.inverse().ok_or(Error::NotBijective)?;
    let n = c.rep.dim();
    let conj: Vec<Matrix<F>> = c.rep.f.iter().map(|m| inv.mul(m).mul(&c.q)).collect();
    Ok(Algebra::from_fn(n, |i, j| conj[i].column(j)))
}

/// The cocycle (L, id) on the sub-adjacent Lie algebra.
pub fn psi<F: Field>(a: &Algebra<F>) -> Result<Cocycle<F>> {
    if let Err(v) = a.check_left_symmetric() {
        return Err(Error::NotLeftSymmetric(v.to_string()));
    }
    let n = a.dim();
    let rep = Representation { g: a.commutator_lie(), f: (0..n).map(|i| a.left_basis(i)).collect() };
    Ok(Cocycle { rep, q: Matrix::identity(n) })
}

/// Whether f2 = g f1 g^{-1} and q2 = g q1.
pub fn verify_cocycle_iso<F: Field>(c1: &Cocycle<F>, c2: &Cocycle<F>, g: &Matrix<F>) -> Result<bool> {
    let inv = g.inverse().ok_or(Error::SingularWitness)?;
    if c1.rep.g != c2.rep.g {
        return Ok(false);
    }
    let reps = c1.rep.f.iter().zip(&c2.rep.f).all(|(f1, f2)| *f2 == g.mul(f1).mul(&inv));
    Ok(reps && c2.q == g.mul(&c1.q))
}

/// Whether f2(x) = g f1(Tx) g^{-1} and q2 = g q1 T, with T an automorphism of
/// the Lie algebra. Then T is an isomorphism from phi(c2) onto phi(c1).
pub fn verify_cocycle_equiv<F: Field>(
    c1: &Cocycle<F>,
    c2: &Cocycle<F>,
    g: &Matrix<F>,
    t: &Matrix<F>,
) -> Result<bool> {
    let inv = g.inverse().ok_or(Error::SingularWitness)?;
    if !c1.rep.g.check_lie_automorphism(t) {
        return Err(Error::NotAutomorphism);
    }
    if c1.rep.g != c2.rep.g {
        return Ok(false);
    }
    let reps = (0..c1.rep.dim()).all(|i| c2.rep.f[i] == g.mul(&c1.rep.action(&t.column(i))).mul(&inv));
    Ok(reps && c2.q == g.mul(&c1.q).mul(t))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::{Gq, Ring};
    use crate::lie::{canonical_lie, LieTag};
    use crate::matrix::gq_matrix;

    fn heis() -> LieAlgebra<Gq> {
        canonical_lie(LieTag::Heisenberg, None).unwrap()
    }

    fn heis_rep(f11_e2: i64, f32_e2: i64) -> Representation<Gq> {
        let f = vec![
            gq_matrix(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]),
            gq_matrix(&[&[f11_e2, 0, 0], &[0, f11_e2, 0], &[0, f32_e2, f11_e2]]),
            gq_matrix(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]),
        ];
        Representation::from_printed(heis(), f).unwrap()
    }

    fn h1_cocycle() -> Cocycle<Gq> {
        Cocycle::from_printed(heis_rep(0, 1), &gq_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap()
    }

    fn h1() -> Algebra<Gq> {
        let mut a = Algebra::zero(3);
        for (i, j, v) in [(1, 1, [1, 0, 0]), (1, 2, [0, 1, 1]), (1, 3, [0, 0, 1]), (2, 1, [0, 1, 0]), (3, 1, [0, 0, 1])] {
            a.set_product(i - 1, j - 1, v.iter().map(|&x| Gq::from_int(x)).collect());
        }
        a
    }

    #[test]
    fn representation_checks() {
        let rep = heis_rep(0, 1);
        assert!(rep.check().is_ok());
        let v3 = rep.f[0].commutator(&rep.f[1]).column(2);
        assert_eq!(v3, vec![Gq::one(), Gq::zero(), Gq::zero()]);
        assert!(heis_rep(0, 2).check().is_err());
        let zero = Representation::new(heis(), vec![Matrix::zeros(3, 3); 3]).unwrap();
        assert!(zero.check().is_ok());
    }

    #[test]
    fn cocycle_checks() {
        assert!(h1_cocycle().check().is_ok());
        assert!(h1_cocycle().is_bijective());
        let broken = Cocycle::from_printed(heis_rep(0, 1), &gq_matrix(&[&[0, 0, 1], &[0, 1, 0], &[0, 0, 0]])).unwrap();
        assert!(broken.check().is_err());
        assert!(!broken.is_bijective());
        let abelian = Representation::new(LieAlgebra::abelian(3), vec![Matrix::zeros(3, 3); 3]).unwrap();
        let any = Cocycle::new(abelian, gq_matrix(&[&[1, 2, 3], &[0, 5, 7], &[4, 4, 4]])).unwrap();
        assert!(any.check().is_ok());
    }

    #[test]
    fn phi_reconstructs_h1() {
        assert_eq!(phi(&h1_cocycle()).unwrap(), h1());
    }

    #[test]
    fn phi_psi_roundtrip() {
        let a = h1();
        assert_eq!(phi(&psi(&a).unwrap()).unwrap(), a);
        let c = h1_cocycle();
        assert!(verify_cocycle_iso(&psi(&phi(&c).unwrap()).unwrap(), &c, &c.q).unwrap());
        assert!(verify_cocycle_iso(&c, &c, &Matrix::identity(3)).unwrap());
        let z = Algebra::<Gq>::zero(3);
        let pz = psi(&z).unwrap();
        assert!(pz.rep.f.iter().all(Matrix::is_zero));
        assert_eq!(pz.q, Matrix::identity(3));
    }

    #[test]
    fn different_cocycles_are_not_identified() {
        let other = Cocycle::from_printed(heis_rep(1, 1), &gq_matrix(&[&[0, 0, 1], &[0, 1, 1], &[1, 0, 0]])).unwrap();
        assert!(other.check().is_ok());
        assert!(!verify_cocycle_iso(&h1_cocycle(), &other, &Matrix::identity(3)).unwrap());
    }

    #[test]
    fn equivalence_needs_automorphism() {
        let c = h1_cocycle();
        let id = Matrix::identity(3);
        assert!(verify_cocycle_equiv(&c, &c, &id, &id).unwrap());
        let bad = gq_matrix(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert!(matches!(verify_cocycle_equiv(&c, &c, &id, &bad), Err(Error::NotAutomorphism)));
    }

    #[test]
    fn psi_rejects_non_left_symmetric() {
        let mut a = Algebra::<Gq>::zero(2);
        a.set_product(0, 0, vec![Gq::zero(), Gq::one()]);
        a.set_product(1, 0, vec![Gq::one(), Gq::zero()]);
        assert!(matches!(psi(&a), Err(Error::NotLeftSymmetric(_))));
    }
}
