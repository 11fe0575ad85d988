//! Novikov algebras from derivations, left-symmetric products from solutions of
//! the operator form of the classical Yang-Baxter equation, and O-operators.

use crate::algebra::{sub_vec, Algebra, PairViolation, Vector};
use crate::cocycle::Representation;
use crate::error::{Error, Result};
use crate::exact::Field;
use crate::lie::LieAlgebra;
use crate::matrix::Matrix;
use crate::props::{is_associative, is_commutative};

/// Whether D(xy) = D(x)y + xD(y) on basis pairs.
pub fn is_derivation<F: Field>(a: &Algebra<F>, d: &Matrix<F>) -> bool {
    let n = a.dim();
    (0..n).all(|i| {
        (0..n).all(|j| {
            let lhs = d.mul_vec(a.product(i, j));
            let r1 = a.mul_vec(&d.column(i), &a.basis(j));
            let r2 = a.mul_vec(&a.basis(i), &d.column(j));
            lhs == r1.iter().zip(&r2).map(|(x, y)| x.add(y)).collect::<Vector<F>>()
        })
    })
}

/// A basis of the derivation algebra.
pub fn derivations<F: Field>(a: &Algebra<F>) -> Vec<Matrix<F>> {
    let n = a.dim();
    // Unknown d[r][s] sits at column r*n + s; one equation per (i, j, k).
    let eqs = Matrix::from_fn(n * n * n, n * n, |row, col| {
        let (i, j, k) = (row / (n * n), (row / n) % n, row % n);
        let (r, s) = (col / n, col % n);
        let mut v = F::zero();
        if r == k {
            v = v.add(&a.product(i, j)[s]);
        }
        if s == i {
            v = v.sub(&a.product(r, j)[k]);
        }
        if s == j {
            v = v.sub(&a.product(i, r)[k]);
        }
        v
    });
    eqs.kernel().into_iter().map(|x| Matrix::from_fn(n, n, |r, s| x[r * n + s].clone())).collect()
}

/// x*y = x·D(y) on a commutative associative algebra with derivation D.
pub fn novikov_from_derivation<F: Field>(base: &Algebra<F>, d: &Matrix<F>) -> Result<Algebra<F>> {
    if !is_commutative(base) || !is_associative(base) {
        return Err(Error::NotCommutativeAssociative);
    }
    if !is_derivation(base, d) {
        return Err(Error::NotDerivation);
    }
    let n = base.dim();
    Ok(Algebra::from_fn(n, |i, j| base.mul_vec(&base.basis(i), &d.column(j))))
}

/// First basis pair where [Rx,Ry] = R([Rx,y] + [x,Ry]) fails.
pub fn check_cybe<F: Field>(g: &LieAlgebra<F>, r: &Matrix<F>) -> Result<(), PairViolation> {
    let n = g.dim();
    let e = |i: usize| -> Vector<F> { (0..n).map(|k| if k == i { F::one() } else { F::zero() }).collect() };
    for i in 0..n {
        for j in i + 1..n {
            let (rx, ry) = (r.column(i), r.column(j));
            let lhs = g.bracket(&rx, &ry);
            let inner: Vector<F> =
                g.bracket(&rx, &e(j)).iter().zip(g.bracket(&e(i), &ry)).map(|(a, b)| a.add(&b)).collect();
            if lhs != r.mul_vec(&inner) {
                return Err(PairViolation { pair: (i + 1, j + 1) });
            }
        }
    }
    Ok(())
}

/// x*y = [Rx, y].
pub fn lsa_from_rmatrix<F: Field>(g: &LieAlgebra<F>, r: &Matrix<F>) -> Result<Algebra<F>> {
    check_cybe(g, r).map_err(|_| Error::CybeFails)?;
    let n = g.dim();
    Ok(Algebra::from_fn(n, |i, j| g.bracket(&r.column(i), &g.basis_vec(j))))
}

/// First basis pair of V where [Tu,Tv] = T(rho(Tu)v - rho(Tv)u) fails.
pub fn check_o_operator<F: Field>(rho: &Representation<F>, t: &Matrix<F>) -> Result<(), PairViolation> {
    let n = rho.dim();
    for u in 0..n {
        for v in u + 1..n {
            let (tu, tv) = (t.column(u), t.column(v));
            let lhs = rho.g.bracket(&tu, &tv);
            let inner = sub_vec(&rho.action(&tu).column(v), &rho.action(&tv).column(u));
            if lhs != t.mul_vec(&inner) {
                return Err(PairViolation { pair: (u + 1, v + 1) });
            }
        }
    }
    Ok(())
}

/// The products induced by an O-operator T: V -> g.
#[derive(Clone, Debug, PartialEq)]
pub struct InducedProducts<F> {
    /// u*v = rho(Tu)v on V.
    pub on_v: Algebra<F>,
    /// Basis of T(V) in the coordinates of g; the identity basis when T is invertible.
    pub image_basis: Vec<Vector<F>>,
    /// Tu*Tv = T(rho(Tu)v) in `image_basis`.
    pub on_image: Algebra<F>,
}

pub fn induced_products<F: Field>(rho: &Representation<F>, t: &Matrix<F>) -> Result<InducedProducts<F>> {
    check_o_operator(rho, t).map_err(|_| Error::NotOOperator)?;
    let n = rho.dim();
    let on_v = Algebra::from_fn(n, |i, j| rho.action(&t.column(i)).column(j));
    let (image_basis, preimages): (Vec<Vector<F>>, Vec<Vector<F>>) = match t.inverse() {
        Some(inv) => (0..n).map(|i| (rho.g.basis_vec(i), inv.column(i))).unzip(),
        None => t.rref().1.into_iter().map(|p| (t.column(p), rho.g.basis_vec(p))).unzip(),
    };
    let kernel = t.kernel();
    for w in &image_basis {
        let act = rho.action(w);
        if kernel.iter().any(|k| t.mul_vec(&act.mul_vec(k)).iter().any(|x| !x.is_zero())) {
            return Err(Error::IllDefinedProduct);
        }
    }
    let m = image_basis.len();
    let mut on_image = Algebra::zero(m);
    if m == 0 {
        return Ok(InducedProducts { on_v, image_basis, on_image });
    }
    let b = Matrix::from_columns(&image_basis);
    for a in 0..m {
        for c in 0..m {
            let w = t.mul_vec(&rho.action(&image_basis[a]).mul_vec(&preimages[c]));
            on_image.set_product(a, c, b.solve(&w).expect("product lies in the image"));
        }
    }
    Ok(InducedProducts { on_v, image_basis, on_image })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cocycle::{phi, Cocycle};
    use crate::exact::{Gq, Ring};
    use crate::lie::{canonical_lie, LieTag};
    use crate::matrix::gq_matrix;

    fn truncated() -> Algebra<Gq> {
        Algebra::from_fn(3, |i, j| {
            (0..3).map(|k| if i + j + 1 == k { Gq::one() } else { Gq::zero() }).collect()
        })
    }

    #[test]
    fn grading_derivation() {
        let a = truncated();
        let d = gq_matrix(&[&[1, 0, 0], &[0, 2, 0], &[0, 0, 3]]);
        assert!(is_derivation(&a, &d));
        let n = novikov_from_derivation(&a, &d).unwrap();
        // e1*e1 = 1 e2 and e1*e2 = 2 e3
        assert_eq!(n.product(0, 0), &[Gq::zero(), Gq::one(), Gq::zero()][..]);
        assert_eq!(n.product(0, 1), &[Gq::zero(), Gq::zero(), Gq::from_int(2)][..]);
        assert!(n.is_left_symmetric() && crate::props::is_novikov(&n));
        assert!(derivations(&a).iter().all(|d| is_derivation(&a, d)));
        assert_eq!(derivations(&a).len(), 3);
    }

    #[test]
    fn derivation_errors() {
        let a = truncated();
        assert!(matches!(novikov_from_derivation(&a, &Matrix::identity(3)), Err(Error::NotDerivation)));
        let mut b = Algebra::<Gq>::zero(2);
        b.set_product(0, 1, vec![Gq::one(), Gq::zero()]);
        assert!(matches!(novikov_from_derivation(&b, &Matrix::zeros(2, 2)), Err(Error::NotCommutativeAssociative)));
        let mut idem = Algebra::<Gq>::zero(3);
        idem.set_product(0, 0, vec![Gq::one(), Gq::zero(), Gq::zero()]);
        assert!(novikov_from_derivation(&idem, &Matrix::zeros(3, 3)).unwrap().is_zero_product());
    }

    #[test]
    fn cybe_examples() {
        let h = canonical_lie(LieTag::Heisenberg, None).unwrap();
        assert!(check_cybe(&h, &Matrix::zeros(3, 3)).is_ok());
        let p = gq_matrix(&[&[1, 0, 0], &[0, 0, 0], &[0, 0, 0]]);
        assert!(check_cybe(&h, &p).is_ok());
        assert!(lsa_from_rmatrix(&h, &p).unwrap().is_left_symmetric());
        let n = canonical_lie(LieTag::N, None).unwrap();
        assert!(check_cybe(&n, &Matrix::identity(3)).is_err());
        assert!(matches!(lsa_from_rmatrix(&n, &Matrix::identity(3)), Err(Error::CybeFails)));
        assert!(lsa_from_rmatrix(&n, &Matrix::zeros(3, 3)).unwrap().is_zero_product());
    }

    fn h1_cocycle() -> Cocycle<Gq> {
        let g = canonical_lie(LieTag::Heisenberg, None).unwrap();
        let f = vec![
            gq_matrix(&[&[1, 0, 0], &[1, 1, 0], &[0, 0, 1]]),
            gq_matrix(&[&[0, 0, 0], &[0, 0, 0], &[0, 1, 0]]),
            gq_matrix(&[&[0, 0, 0], &[0, 0, 0], &[1, 0, 0]]),
        ];
        let rep = Representation::from_printed(g, f).unwrap();
        Cocycle::from_printed(rep, &gq_matrix(&[&[0, 0, 1], &[0, 1, 0], &[1, 0, 0]])).unwrap()
    }

    #[test]
    fn inverse_cocycle_is_o_operator() {
        let c = h1_cocycle();
        let t = c.q.inverse().unwrap();
        assert!(check_o_operator(&c.rep, &t).is_ok());
        let ind = induced_products(&c.rep, &t).unwrap();
        assert_eq!(ind.on_image, phi(&c).unwrap());
        assert_eq!(ind.on_v.transport(&c.q).unwrap(), ind.on_image);
        let mut bad = t.clone();
        bad.set(0, 0, Gq::one());
        assert!(check_o_operator(&c.rep, &bad).is_err());
        let z = induced_products(&c.rep, &Matrix::zeros(3, 3)).unwrap();
        assert!(z.on_v.is_zero_product() && z.image_basis.is_empty());
    }
}
