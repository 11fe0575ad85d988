//! Lie algebras by structure constants, the dimension-3 classifier, and the
//! parametric automorphism groups of the five solvable non-abelian classes.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::Signed;

use crate::algebra::{TripleViolation, Vector};
use crate::error::{Error, Result};
use crate::exact::{Field, Gq, MultiPoly, Ring};
use crate::matrix::Matrix;

/// Antisymmetric bracket table [e_i, e_j] = sum_k b[i][j][k] e_k.
#[derive(Clone, PartialEq, Debug)]
pub struct LieAlgebra<F> {
    dim: usize,
    b: Vec<F>,
}

impl<F: Ring> LieAlgebra<F> {
    pub fn abelian(dim: usize) -> Self {
        LieAlgebra { dim, b: vec![F::zero(); dim * dim * dim] }
    }

    /// Reads [e_i, e_j] for i < j from `f` and fills in the rest by antisymmetry.
    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Vector<F>) -> Self {
        let mut g = Self::abelian(dim);
        for i in 0..dim {
            for j in i + 1..dim {
                let v = f(i, j);
                let neg: Vector<F> = v.iter().map(Ring::neg).collect();
                g.set(i, j, v);
                g.set(j, i, neg);
            }
        }
        g
    }

    /// Builds from 1-based bracket relations [e_i, e_j] = v.
    pub fn from_brackets(dim: usize, rel: &[(usize, usize, Vector<F>)]) -> Self {
        let mut table: BTreeMap<(usize, usize), Vector<F>> = BTreeMap::new();
        for (i, j, v) in rel {
            let (i, j) = (i - 1, j - 1);
            if i < j {
                table.insert((i, j), v.clone());
            } else if i > j {
                table.insert((j, i), v.iter().map(Ring::neg).collect());
            }
        }
        Self::from_fn(dim, |i, j| table.get(&(i, j)).cloned().unwrap_or_else(|| vec![F::zero(); dim]))
    }

    fn set(&mut self, i: usize, j: usize, v: Vector<F>) {
        let s = (i * self.dim + j) * self.dim;
        for (k, x) in v.into_iter().enumerate() {
            self.b[s + k] = x;
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn bracket_basis(&self, i: usize, j: usize) -> &[F] {
        let s = (i * self.dim + j) * self.dim;
        &self.b[s..s + self.dim]
    }

    pub fn bracket(&self, x: &[F], y: &[F]) -> Vector<F> {
        let n = self.dim;
        let mut out = vec![F::zero(); n];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() || i == j {
                    continue;
                }
                let s = xi.mul(yj);
                for (k, o) in out.iter_mut().enumerate() {
                    let c = &self.b[(i * n + j) * n + k];
                    if !c.is_zero() {
                        *o = o.add(&s.mul(c));
                    }
                }
            }
        }
        out
    }

    pub fn is_abelian(&self) -> bool {
        self.b.iter().all(Ring::is_zero)
    }

    pub fn basis_vec(&self, i: usize) -> Vector<F> {
        (0..self.dim).map(|k| if k == i { F::one() } else { F::zero() }).collect()
    }

    /// Matrix of ad x; column j holds [x, e_j].
    pub fn ad(&self, x: &[F]) -> Matrix<F> {
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| self.bracket(x, &self.basis_vec(j))).collect();
        Matrix::from_columns(&cols)
    }

    pub fn check_jacobi(&self) -> Result<(), TripleViolation<F>> {
        let n = self.dim;
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    let (x, y, z) = (self.basis_vec(i), self.basis_vec(j), self.basis_vec(k));
                    let a = self.bracket(&self.bracket(&x, &y), &z);
                    let b = self.bracket(&self.bracket(&y, &z), &x);
                    let c = self.bracket(&self.bracket(&z, &x), &y);
                    let s: Vector<F> = a.iter().zip(&b).zip(&c).map(|((p, q), r)| p.add(q).add(r)).collect();
                    if s.iter().any(|v| !v.is_zero()) {
                        return Err(TripleViolation { triple: (i + 1, j + 1, k + 1), difference: s });
                    }
                }
            }
        }
        Ok(())
    }

    /// K(e_i, e_j) = tr(ad e_i ad e_j).
    pub fn killing_form(&self) -> Matrix<F> {
        let ads: Vec<Matrix<F>> = (0..self.dim).map(|i| self.ad(&self.basis_vec(i))).collect();
        Matrix::from_fn(self.dim, self.dim, |i, j| ads[i].mul(&ads[j]).trace())
    }

    /// Whether t[x,y] = [tx, ty]' on all basis pairs, with ' the bracket of `other`.
    pub fn is_hom_to(&self, other: &Self, t: &Matrix<F>) -> bool {
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| t.column(j)).collect();
        (0..self.dim).all(|i| {
            (i + 1..self.dim).all(|j| t.mul_vec(self.bracket_basis(i, j)) == other.bracket(&cols[i], &cols[j]))
        })
    }

    pub fn map<G: Ring>(&self, f: impl Fn(&F) -> G) -> LieAlgebra<G> {
        LieAlgebra { dim: self.dim, b: self.b.iter().map(f).collect() }
    }

    pub fn try_map<G: Ring>(&self, f: impl Fn(&F) -> Result<G>) -> Result<LieAlgebra<G>> {
        Ok(LieAlgebra { dim: self.dim, b: self.b.iter().map(f).collect::<Result<_>>()? })
    }
}

impl<F: Field> LieAlgebra<F> {
    pub fn check_lie_automorphism(&self, t: &Matrix<F>) -> bool {
        t.rows() == self.dim && t.is_square() && !t.det().is_zero() && self.is_hom_to(self, t)
    }

    /// The bracket written in the basis given by the columns of `p`.
    pub fn transport(&self, p: &Matrix<F>) -> Result<Self> {
        let inv = p.inverse().ok_or(Error::SingularWitness)?;
        let cols: Vec<Vector<F>> = (0..self.dim).map(|j| p.column(j)).collect();
        Ok(Self::from_fn(self.dim, |i, j| inv.mul_vec(&self.bracket(&cols[i], &cols[j]))))
    }

    /// Basis of [g, g].
    pub fn derived_basis(&self) -> Vec<Vector<F>> {
        let mut cols = Vec::new();
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                cols.push(self.bracket_basis(i, j).to_vec());
            }
        }
        if cols.is_empty() {
            return Vec::new();
        }
        Matrix::from_columns(&cols).column_space()
    }

    /// Basis of the center.
    pub fn center(&self) -> Vec<Vector<F>> {
        let n = self.dim;
        let m = Matrix::from_fn(n * n, n, |r, c| self.bracket_basis(r / n, c)[r % n].clone());
        m.kernel()
    }
}

impl<F: Ring> fmt::Display for LieAlgebra<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.dim {
            for j in i + 1..self.dim {
                let v = self.bracket_basis(i, j);
                if v.iter().any(|x| !x.is_zero()) {
                    writeln!(f, "[e{},e{}] = {}", i + 1, j + 1, crate::algebra::format_lincomb(v))?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum LieTag {
    Abelian,
    Heisenberg,
    N,
    Dl,
    E,
    Sl2,
    Unrecognized,
}

impl fmt::Display for LieTag {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LieTag::Abelian => "abelian",
            LieTag::Heisenberg => "H",
            LieTag::N => "N",
            LieTag::Dl => "Dl",
            LieTag::E => "E",
            LieTag::Sl2 => "sl2",
            LieTag::Unrecognized => "unrecognized",
        })
    }
}

/// Class tag, canonical parameter, and an optional basis change.
///
/// For `Dl`, `param` is the representative of {l, 1/l} with |l| <= 1 (ties
/// broken by nonnegative imaginary part) and `l_sum` is l + 1/l, which is
/// available even when l itself lies outside Q(i). The witness has as
/// columns the canonical basis vectors written in the original basis.
#[derive(Clone, Debug)]
pub struct LieClass {
    pub tag: LieTag,
    pub param: Option<Gq>,
    pub l_sum: Option<Gq>,
    pub witness: Option<Matrix<Gq>>,
}

impl LieClass {
    pub fn new(tag: LieTag) -> Self {
        LieClass { tag, param: None, l_sum: None, witness: None }
    }

    pub fn dl(l: &Gq) -> Self {
        let c = canonical_l(l);
        let sum = c.add(&c.inv().expect("l is nonzero"));
        LieClass { tag: LieTag::Dl, param: Some(c), l_sum: Some(sum), witness: None }
    }

    /// The canonical bracket table of this class, when it has one.
    pub fn canonical_algebra(&self) -> Option<LieAlgebra<Gq>> {
        canonical_lie(self.tag, self.param.as_ref())
    }
}

impl PartialEq for LieClass {
    fn eq(&self, other: &Self) -> bool {
        self.tag == other.tag && self.param == other.param && self.l_sum == other.l_sum
    }
}

impl fmt::Display for LieClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.param, &self.l_sum) {
            (Some(l), _) => write!(f, "{}(l={l})", self.tag),
            (None, Some(s)) => write!(f, "{}(l+1/l={s})", self.tag),
            _ => write!(f, "{}", self.tag),
        }
    }
}

/// Representative of {l, 1/l}: |l| < 1, or |l| = 1 with nonnegative imaginary part.
pub fn canonical_l(l: &Gq) -> Gq {
    let n = l.norm();
    let one = num_rational::BigRational::from_integer(1.into());
    if n < one {
        l.clone()
    } else if n > one {
        l.inv().expect("nonzero")
    } else if l.im().is_negative() {
        l.conj()
    } else {
        l.clone()
    }
}

fn gv(v: &[i64]) -> Vector<Gq> {
    v.iter().map(|&x| Gq::from_int(x)).collect()
}

/// Canonical brackets: H [e1,e2]=e3; N [e3,e2]=e2; Dl [e3,e1]=e1, [e3,e2]=l e2;
/// E [e3,e1]=e1, [e3,e2]=e1+e2; sl2 [e1,e2]=2e2, [e1,e3]=-2e3, [e2,e3]=e1.
pub fn canonical_lie(tag: LieTag, l: Option<&Gq>) -> Option<LieAlgebra<Gq>> {
    let rel = match tag {
        LieTag::Abelian => vec![],
        LieTag::Heisenberg => vec![(1, 2, gv(&[0, 0, 1]))],
        LieTag::N => vec![(3, 2, gv(&[0, 1, 0]))],
        LieTag::Dl => vec![(3, 1, gv(&[1, 0, 0])), (3, 2, vec![Gq::zero(), l?.clone(), Gq::zero()])],
        LieTag::E => vec![(3, 1, gv(&[1, 0, 0])), (3, 2, gv(&[1, 1, 0]))],
        LieTag::Sl2 => vec![(1, 2, gv(&[0, 2, 0])), (1, 3, gv(&[0, 0, -2])), (2, 3, gv(&[1, 0, 0]))],
        LieTag::Unrecognized => return None,
    };
    Some(LieAlgebra::from_brackets(3, &rel))
}

fn unit(k: usize) -> Vector<Gq> {
    (0..3).map(|i| if i == k { Gq::one() } else { Gq::zero() }).collect()
}

fn scaled(v: &[Gq], c: &Gq) -> Vector<Gq> {
    v.iter().map(|x| x.mul(c)).collect()
}

/// Decides the isomorphism class of a 3-dimensional Lie algebra over Q(i).
pub fn classify3(g: &LieAlgebra<Gq>) -> Result<LieClass> {
    if g.dim() != 3 {
        return Err(Error::NotDimension3(g.dim()));
    }
    let derived = g.derived_basis();
    let mut class = match derived.len() {
        0 => LieClass { witness: Some(Matrix::identity(3)), ..LieClass::new(LieTag::Abelian) },
        1 => classify_rank_one(g, &derived[0]),
        2 => classify_rank_two(g, &derived),
        _ => {
            let tag = if g.killing_form().rank() == 3 { LieTag::Sl2 } else { LieTag::Unrecognized };
            LieClass::new(tag)
        }
    };
    if let (Some(w), Some(canon)) = (&class.witness, class.canonical_algebra()) {
        if g.transport(w).ok().as_ref() != Some(&canon) {
            class.witness = None;
        }
    }
    Ok(class)
}

fn classify_rank_one(g: &LieAlgebra<Gq>, z: &[Gq]) -> LieClass {
    let central = (0..3).all(|k| g.bracket(&unit(k), z).iter().all(Ring::is_zero));
    if central {
        for i in 0..3 {
            for j in i + 1..3 {
                let w = g.bracket_basis(i, j).to_vec();
                if w.iter().any(|x| !x.is_zero()) {
                    let p = Matrix::from_columns(&[unit(i), unit(j), w]);
                    return LieClass { witness: Some(p), ..LieClass::new(LieTag::Heisenberg) };
                }
            }
        }
        return LieClass::new(LieTag::Unrecognized);
    }
    let m = z.iter().position(|x| !x.is_zero()).unwrap();
    for k in 0..3 {
        let w = g.bracket(&unit(k), z);
        if w.iter().all(Ring::is_zero) {
            continue;
        }
        let c = w[m].checked_div(&z[m]).unwrap();
        if scaled(z, &c) != w {
            return LieClass::new(LieTag::Unrecognized);
        }
        let center = g.center();
        if center.len() != 1 {
            return LieClass::new(LieTag::Unrecognized);
        }
        let e3 = scaled(&unit(k), &c.inv().unwrap());
        let p = Matrix::from_columns(&[center[0].clone(), z.to_vec(), e3]);
        return LieClass { witness: Some(p), ..LieClass::new(LieTag::N) };
    }
    LieClass::new(LieTag::Unrecognized)
}

fn classify_rank_two(g: &LieAlgebra<Gq>, d: &[Vector<Gq>]) -> LieClass {
    if g.bracket(&d[0], &d[1]).iter().any(|x| !x.is_zero()) {
        return LieClass::new(LieTag::Unrecognized);
    }
    let b = Matrix::from_columns(d);
    let Some(k) = (0..3).find(|&k| Matrix::from_columns(&[d[0].clone(), d[1].clone(), unit(k)]).rank() == 3) else {
        return LieClass::new(LieTag::Unrecognized);
    };
    let e3 = unit(k);
    let cols: Option<Vec<Vector<Gq>>> = d.iter().map(|v| b.solve(&g.bracket(&e3, v))).collect();
    let a = Matrix::from_columns(&cols.expect("derived algebra is an ideal"));
    let (tr, det) = (a.trace(), a.det());
    if det.is_zero() {
        return LieClass::new(LieTag::Unrecognized);
    }
    let lift = |y: &[Gq]| b.mul_vec(y);
    if a.is_scalar() {
        let alpha = a.get(0, 0).clone();
        let p = Matrix::from_columns(&[d[0].clone(), d[1].clone(), scaled(&e3, &alpha.inv().unwrap())]);
        return LieClass { witness: Some(p), ..LieClass::dl(&Gq::one()) };
    }
    let disc = tr.mul(&tr).sub(&det.mul(&Gq::from_int(4)));
    if disc.is_zero() {
        let alpha = tr.mul(&Gq::from_frac(1, 2));
        let nil = a.scale(&alpha.inv().unwrap()).sub(&Matrix::identity(2));
        let v = (0..2)
            .map(|i| (0..2).map(|r| if r == i { Gq::one() } else { Gq::zero() }).collect::<Vector<Gq>>())
            .find(|v| nil.mul_vec(v).iter().any(|x| !x.is_zero()))
            .unwrap();
        let p = Matrix::from_columns(&[lift(&nil.mul_vec(&v)), lift(&v), scaled(&e3, &alpha.inv().unwrap())]);
        return LieClass { witness: Some(p), ..LieClass::new(LieTag::E) };
    }
    let l_sum = tr.mul(&tr).sub(&det.mul(&Gq::from_int(2))).checked_div(&det).unwrap();
    let Some(s) = disc.sqrt() else {
        return LieClass { tag: LieTag::Dl, param: None, l_sum: Some(l_sum), witness: None };
    };
    let half = Gq::from_frac(1, 2);
    let mut alpha = tr.add(&s).mul(&half);
    let mut beta = tr.sub(&s).mul(&half);
    let l = beta.checked_div(&alpha).unwrap();
    if canonical_l(&l) != l {
        std::mem::swap(&mut alpha, &mut beta);
    }
    let eig = |x: &Gq| a.sub(&Matrix::identity(2).scale(x)).kernel().remove(0);
    let p = Matrix::from_columns(&[lift(&eig(&alpha)), lift(&eig(&beta)), scaled(&e3, &alpha.inv().unwrap())]);
    LieClass { witness: Some(p), ..LieClass::dl(&beta.checked_div(&alpha).unwrap()) }
}

/// The parametric automorphism groups, in row layout (row i is the image of e_i).
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum AutGroup {
    /// Aut of the Heisenberg algebra.
    Heisenberg,
    /// Aut of N, and of D_l for l != 1 (identity component for l = -1).
    Diagonal,
    /// Aut of D_1.
    D1,
    /// The component of Aut(D_{-1}) exchanging e1 and e2.
    Dm1Swap,
    /// Aut of E.
    E,
    /// All invertible maps (abelian case).
    General,
}

/// A parametric group: matrix entries are polynomials in the group
/// variables and every polynomial in `nonzero` must not vanish.
#[derive(Clone, Debug)]
pub struct ParamGroup {
    pub vars: Vec<String>,
    pub matrix: Matrix<MultiPoly>,
    pub nonzero: Vec<MultiPoly>,
}

fn v(name: &str) -> MultiPoly {
    MultiPoly::var(name)
}

fn c(x: i64) -> MultiPoly {
    MultiPoly::constant(Gq::from_int(x))
}

impl AutGroup {
    /// Groups whose union is Aut of the given class.
    pub fn for_class(class: &LieClass) -> Vec<AutGroup> {
        match class.tag {
            LieTag::Heisenberg => vec![AutGroup::Heisenberg],
            LieTag::N => vec![AutGroup::Diagonal],
            LieTag::E => vec![AutGroup::E],
            LieTag::Dl => match &class.param {
                Some(l) if l.is_one() => vec![AutGroup::D1],
                Some(l) if *l == Gq::from_int(-1) => vec![AutGroup::Diagonal, AutGroup::Dm1Swap],
                Some(_) => vec![AutGroup::Diagonal],
                None => vec![],
            },
            LieTag::Abelian => vec![AutGroup::General],
            _ => vec![],
        }
    }

    pub fn params(&self) -> ParamGroup {
        let det2 = v("a11").mul(&v("a22")).sub(&v("a12").mul(&v("a21")));
        let (rows, nonzero): (Vec<Vec<MultiPoly>>, Vec<MultiPoly>) = match self {
            AutGroup::Heisenberg => (
                vec![
                    vec![v("a11"), v("a12"), v("a13")],
                    vec![v("a21"), v("a22"), v("a23")],
                    vec![c(0), c(0), det2.clone()],
                ],
                vec![det2],
            ),
            AutGroup::Diagonal => (
                vec![vec![v("a11"), c(0), c(0)], vec![c(0), v("a22"), c(0)], vec![v("a31"), v("a32"), c(1)]],
                vec![v("a11"), v("a22")],
            ),
            AutGroup::D1 => (
                vec![vec![v("a11"), v("a12"), c(0)], vec![v("a21"), v("a22"), c(0)], vec![v("a31"), v("a32"), c(1)]],
                vec![det2],
            ),
            AutGroup::Dm1Swap => (
                vec![vec![c(0), v("a12"), c(0)], vec![v("a21"), c(0), c(0)], vec![v("a31"), v("a32"), c(-1)]],
                vec![v("a12"), v("a21")],
            ),
            AutGroup::E => (
                vec![vec![v("a11"), c(0), c(0)], vec![v("a21"), v("a11"), c(0)], vec![v("a31"), v("a32"), c(1)]],
                vec![v("a11")],
            ),
            AutGroup::General => {
                let rows: Vec<Vec<MultiPoly>> =
                    (1..=3).map(|i| (1..=3).map(|j| v(&format!("a{i}{j}"))).collect()).collect();
                let m = Matrix::from_rows(rows.clone()).unwrap();
                let det = general_det(&m);
                (rows, vec![det])
            }
        };
        let matrix = Matrix::from_rows(rows).unwrap().transpose();
        let mut vars: Vec<String> = matrix.entries().iter().flat_map(|p| p.vars().to_vec()).collect();
        vars.sort();
        vars.dedup();
        ParamGroup { vars, matrix, nonzero }
    }

    /// Membership test for a concrete matrix (column j = image of e_j).
    pub fn contains(&self, t: &Matrix<Gq>) -> bool {
        let g = self.params();
        if t.rows() != 3 || !t.is_square() {
            return false;
        }
        let mut bind = BTreeMap::new();
        for (p, x) in g.matrix.entries().iter().zip(t.entries()) {
            if let [name] = p.vars() {
                if *p == MultiPoly::var(name) {
                    bind.insert(name.clone(), x.clone());
                }
            }
        }
        let matches = g.matrix.entries().iter().zip(t.entries()).all(|(p, x)| p.eval(&bind).as_ref() == Ok(x));
        matches && g.nonzero.iter().all(|p| p.eval(&bind).is_ok_and(|x| !x.is_zero()))
    }
}

fn general_det(m: &Matrix<MultiPoly>) -> MultiPoly {
    let e = |i, j| m.get(i, j).clone();
    let minor = |a: usize, b: usize| e(1, a).mul(&e(2, b)).sub(&e(1, b).mul(&e(2, a)));
    e(0, 0).mul(&minor(1, 2)).sub(&e(0, 1).mul(&minor(0, 2))).add(&e(0, 2).mul(&minor(0, 1)))
}

/// Evaluates a parametric group element at the given values.
pub fn group_element(g: &ParamGroup, values: &BTreeMap<String, Gq>) -> Result<Matrix<Gq>> {
    g.matrix.try_map(|p| p.eval(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matrix::gq_matrix;

    fn lie(rel: &[(usize, usize, &[i64])]) -> LieAlgebra<Gq> {
        LieAlgebra::from_brackets(3, &rel.iter().map(|&(i, j, v)| (i, j, gv(v))).collect::<Vec<_>>())
    }

    #[test]
    fn jacobi() {
        assert!(lie(&[(1, 2, &[0, 0, 1])]).check_jacobi().is_ok());
        assert!(lie(&[(3, 1, &[1, 0, 0]), (3, 2, &[1, 1, 0])]).check_jacobi().is_ok());
        let bad = lie(&[(1, 2, &[0, 0, 1]), (2, 3, &[1, 0, 0]), (1, 3, &[1, 0, 0])]);
        assert!(bad.check_jacobi().is_err());
    }

    #[test]
    fn classify_canonical_tables() {
        for (tag, l) in [
            (LieTag::Abelian, None),
            (LieTag::Heisenberg, None),
            (LieTag::N, None),
            (LieTag::Dl, Some(Gq::from_frac(1, 2))),
            (LieTag::Dl, Some(Gq::from_int(1))),
            (LieTag::Dl, Some(Gq::from_int(-1))),
            (LieTag::Dl, Some(Gq::i())),
            (LieTag::E, None),
            (LieTag::Sl2, None),
        ] {
            let g = canonical_lie(tag, l.as_ref()).unwrap();
            let class = classify3(&g).unwrap();
            assert_eq!(class.tag, tag);
            assert_eq!(class.param, l);
            if let Some(w) = &class.witness {
                assert_eq!(g.transport(w).unwrap(), class.canonical_algebra().unwrap());
            }
        }
    }

    #[test]
    fn dl_parameter_is_canonicalized() {
        let g = lie(&[(3, 1, &[1, 0, 0]), (3, 2, &[0, 2, 0])]);
        let class = classify3(&g).unwrap();
        assert_eq!(class.param, Some(Gq::from_frac(1, 2)));
        let w = class.witness.unwrap();
        assert_eq!(g.transport(&w).unwrap(), canonical_lie(LieTag::Dl, Some(&Gq::from_frac(1, 2))).unwrap());
        let h = lie(&[(3, 1, &[1, 0, 0]), (3, 2, &[0, -1, 0])]);
        assert_eq!(classify3(&h).unwrap().param, Some(Gq::from_int(-1)));
        let mi = LieAlgebra::from_brackets(3, &[(3, 1, gv(&[1, 0, 0])), (3, 2, vec![Gq::zero(), Gq::from_ints(0, -1), Gq::zero()])]);
        assert_eq!(classify3(&mi).unwrap().param, Some(Gq::i()));
    }

    #[test]
    fn eigenvalues_outside_gaussian_rationals() {
        let g = lie(&[(3, 1, &[0, 1, 0]), (3, 2, &[2, 0, 0])]);
        let class = classify3(&g).unwrap();
        assert_eq!(class.tag, LieTag::Dl);
        assert!(class.param.is_none() && class.witness.is_none());
        assert_eq!(class.l_sum, Some(Gq::from_int(-2)));
    }

    #[test]
    fn killing_ranks() {
        assert_eq!(canonical_lie(LieTag::Heisenberg, None).unwrap().killing_form().rank(), 0);
        assert_eq!(canonical_lie(LieTag::Sl2, None).unwrap().killing_form().rank(), 3);
        assert_eq!(canonical_lie(LieTag::Dl, Some(&Gq::one())).unwrap().killing_form().rank(), 1);
    }

    #[test]
    fn automorphisms() {
        let h = canonical_lie(LieTag::Heisenberg, None).unwrap();
        let t = gq_matrix(&[&[2, 1, 5], &[3, 2, -1], &[0, 0, 1]]).transpose();
        assert!(h.check_lie_automorphism(&t));
        assert!(AutGroup::Heisenberg.contains(&t));
        let n = canonical_lie(LieTag::N, None).unwrap();
        let swap = gq_matrix(&[&[1, 0, 0], &[0, 0, 1], &[0, 1, 0]]);
        assert!(!n.check_lie_automorphism(&swap));
        assert!(n.check_lie_automorphism(&Matrix::identity(3)));
        let dm1 = canonical_lie(LieTag::Dl, Some(&Gq::from_int(-1))).unwrap();
        let s = gq_matrix(&[&[0, 2, 0], &[3, 0, 0], &[1, 1, -1]]).transpose();
        assert!(dm1.check_lie_automorphism(&s));
        assert!(AutGroup::Dm1Swap.contains(&s));
        assert!(!AutGroup::Diagonal.contains(&s));
    }
}
