//! Subclass predicates, ideals, simplicity and isomorphism invariants.

use std::fmt;

use crate::algebra::{Algebra, Vector};
use crate::error::{Error, Result};
use crate::exact::{ExtField, ExtScalar, Field, Gq, MultiPoly, Ring, UPoly};
use crate::lie::{classify3, LieClass};
use crate::matrix::Matrix;

fn all_triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n * n * n).map(move |t| (t / (n * n), (t / n) % n, t % n))
}

/// (x,y,z) = 0 on all basis triples.
pub fn is_associative<F: Field>(a: &Algebra<F>) -> bool {
    all_triples(a.dim()).all(|(i, j, k)| a.basis_associator(i, j, k).iter().all(Ring::is_zero))
}

/// R_x R_y = R_y R_x for all basis elements.
pub fn is_novikov<F: Field>(a: &Algebra<F>) -> bool {
    let rs: Vec<Matrix<F>> = (0..a.dim()).map(|i| a.right_basis(i)).collect();
    (0..rs.len()).all(|i| (i + 1..rs.len()).all(|j| rs[i].commutator(&rs[j]).is_zero()))
}

/// (x,y,z) = (x,z,y) on all basis triples.
pub fn is_bisymmetric<F: Field>(a: &Algebra<F>) -> bool {
    all_triples(a.dim()).all(|(i, j, k)| a.basis_associator(i, j, k) == a.basis_associator(i, k, j))
}

pub fn is_commutative<F: Field>(a: &Algebra<F>) -> bool {
    let n = a.dim();
    (0..n).all(|i| (i + 1..n).all(|j| a.product(i, j) == a.product(j, i)))
}

/// The matrix of R_x for the symbolic element x = x1 e1 + ... + xn en.
pub fn symbolic_right(a: &Algebra<Gq>) -> Matrix<MultiPoly> {
    let n = a.dim();
    (0..n).fold(Matrix::zeros(n, n), |acc, k| {
        let x = MultiPoly::var(&format!("x{}", k + 1));
        acc.add(&a.right_basis(k).map(|c| x.mul(&MultiPoly::constant(c.clone()))))
    })
}

/// Every R_x nilpotent, decided by tr(R_x^k) = 0 for k = 1..n as polynomials in x.
pub fn is_transitive(a: &Algebra<Gq>) -> bool {
    let r = symbolic_right(a);
    let mut p = Matrix::identity(a.dim());
    (1..=a.dim()).all(|_| {
        p = p.mul(&r);
        p.trace().is_zero()
    })
}

/// A proper nonzero two-sided ideal; coordinates may lie in an extension of Q(i),
/// in which case every conjugate subspace is an ideal as well.
#[derive(Clone, Debug, PartialEq)]
pub struct Ideal {
    pub basis: Vec<Vector<ExtScalar>>,
}

impl Ideal {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn rational_basis(&self) -> Option<Vec<Vector<Gq>>> {
        self.basis.iter().map(|v| v.iter().map(ExtScalar::as_gq).collect()).collect()
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.basis.iter().map(|v| crate::algebra::format_lincomb(v)).collect();
        write!(f, "span({})", parts.join(", "))?;
        if let Some(m) = self.basis.iter().flatten().find_map(ExtScalar::modulus) {
            write!(f, " where {m} = 0")?;
        }
        Ok(())
    }
}

/// Infinitely many ideals: every line of a span, or every hyperplane cut out
/// by a functional from a span.
#[derive(Clone, Debug, PartialEq)]
pub enum IdealFamily {
    Lines(Vec<Vector<ExtScalar>>),
    Hyperplanes(Vec<Vector<ExtScalar>>),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Ideals {
    pub ideals: Vec<Ideal>,
    pub families: Vec<IdealFamily>,
}

impl Ideals {
    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty() && self.families.is_empty()
    }

    /// Whether every subspace is an ideal, as for the zero product.
    pub fn all_subspaces(&self, dim: usize) -> bool {
        self.families.iter().any(|f| matches!(f, IdealFamily::Lines(s) if s.len() == dim))
    }
}

fn ext_matrix(m: &Matrix<Gq>) -> Matrix<ExtScalar> {
    m.map(ExtScalar::from_gq)
}

fn normalize(v: Vector<ExtScalar>) -> Vector<ExtScalar> {
    match v.iter().find(|x| !x.is_zero()).and_then(Field::inv) {
        Some(s) => v.iter().map(|x| x.mul(&s)).collect(),
        None => v,
    }
}

/// Largest subspace of span(basis) mapped into itself by every operator.
fn largest_invariant(ops: &[Matrix<ExtScalar>], mut basis: Vec<Vector<ExtScalar>>) -> Vec<Vector<ExtScalar>> {
    loop {
        if basis.is_empty() {
            return basis;
        }
        let b = Matrix::from_columns(&basis);
        let annihilator = b.transpose().kernel();
        if annihilator.is_empty() {
            return basis;
        }
        let n = Matrix::from_columns(&annihilator).transpose();
        let blocks: Vec<Matrix<ExtScalar>> = ops.iter().map(|op| n.mul(op).mul(&b)).collect();
        let stacked = Matrix::from_fn(blocks.len() * n.rows(), basis.len(), |r, c| {
            blocks[r / n.rows()].get(r % n.rows(), c).clone()
        });
        let ys = stacked.kernel();
        if ys.len() == basis.len() {
            return basis;
        }
        basis = ys.iter().map(|y| b.mul_vec(y)).collect();
    }
}

/// Lines invariant under every operator, plus spans on which all operators act by scalars.
fn common_lines(ops: &[Matrix<ExtScalar>], space: Vec<Vector<ExtScalar>>, out: &mut (Vec<Vector<ExtScalar>>, Vec<Vec<Vector<ExtScalar>>>)) -> Result<()> {
    let w = largest_invariant(ops, space);
    if w.is_empty() {
        return Ok(());
    }
    let b = Matrix::from_columns(&w);
    let restricted: Vec<Matrix<ExtScalar>> = ops
        .iter()
        .map(|op| {
            let cols: Vec<Vector<ExtScalar>> = w.iter().map(|v| b.solve(&op.mul_vec(v)).expect("invariant subspace")).collect();
            Matrix::from_columns(&cols)
        })
        .collect();
    let Some(m) = restricted.iter().find(|m| !m.is_scalar()) else {
        if w.len() == 1 {
            out.0.push(normalize(w.into_iter().next().unwrap()));
        } else {
            out.1.push(w);
        }
        return Ok(());
    };
    let cp: Option<Vec<Gq>> = m.char_poly().iter().map(ExtScalar::as_gq).collect();
    let Some(cp) = cp else {
        return Err(Error::ExtensionDegreeTooHigh(w.len()));
    };
    let id = Matrix::identity(w.len());
    for (p, _) in UPoly::new(cp).factor()?.factors {
        let root = if p.degree() == 1 {
            ExtScalar::from_gq(&p.coeff(0).neg())
        } else {
            ExtField::new(&p)?.generator()
        };
        let eig = m.sub(&id.scale(&root)).kernel();
        let lifted = eig.iter().map(|y| b.mul_vec(y)).collect();
        common_lines(ops, lifted, out)?;
    }
    Ok(())
}

fn unit_basis(n: usize) -> Vec<Vector<ExtScalar>> {
    (0..n).map(|i| (0..n).map(|k| if i == k { ExtScalar::one() } else { ExtScalar::zero() }).collect()).collect()
}

/// All proper nonzero two-sided ideals of an algebra of dimension at most 3,
/// over the algebraic closure of Q(i).
pub fn find_ideals(a: &Algebra<Gq>) -> Result<Ideals> {
    let n = a.dim();
    if n > 3 {
        return Err(Error::NotDimension3(n));
    }
    let mut ideals = Ideals::default();
    if n <= 1 {
        return Ok(ideals);
    }
    let ops: Vec<Matrix<ExtScalar>> =
        (0..n).flat_map(|i| [ext_matrix(&a.left_basis(i)), ext_matrix(&a.right_basis(i))]).collect();
    let mut lines = (Vec::new(), Vec::new());
    common_lines(&ops, unit_basis(n), &mut lines)?;
    ideals.ideals.extend(lines.0.into_iter().map(|v| Ideal { basis: vec![v] }));
    ideals.families.extend(lines.1.into_iter().map(IdealFamily::Lines));
    if n == 3 {
        let dual: Vec<Matrix<ExtScalar>> = ops.iter().map(Matrix::transpose).collect();
        let mut planes = (Vec::new(), Vec::new());
        common_lines(&dual, unit_basis(n), &mut planes)?;
        for f in planes.0 {
            let basis = Matrix::from_rows(vec![f]).unwrap().kernel();
            ideals.ideals.push(Ideal { basis });
        }
        ideals.families.extend(planes.1.into_iter().map(IdealFamily::Hyperplanes));
    }
    Ok(ideals)
}

/// Whether span(basis) is closed under multiplication by every basis element on both sides.
pub fn is_ideal(a: &Algebra<Gq>, basis: &[Vector<ExtScalar>]) -> bool {
    let ea = a.map(ExtScalar::from_gq);
    let b = Matrix::from_columns(basis);
    let r = b.rank();
    basis.iter().all(|v| {
        (0..a.dim()).all(|i| {
            let e = ea.basis(i);
            [ea.mul_vec(&e, v), ea.mul_vec(v, &e)].iter().all(|w| {
                let mut cols = basis.to_vec();
                cols.push(w.clone());
                Matrix::from_columns(&cols).rank() == r
            })
        })
    })
}

/// No ideals besides zero and the whole algebra; the zero product is rejected.
pub fn is_simple(a: &Algebra<Gq>) -> Result<bool> {
    if a.is_zero_product() {
        return Err(Error::ZeroAlgebra);
    }
    Ok(find_ideals(a)?.is_empty())
}

/// Summands of a decomposition into simple ideals, in the algebra's coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Decomposition {
    pub summands: Vec<Vec<Vector<Gq>>>,
}

impl fmt::Display for Decomposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .summands
            .iter()
            .map(|s| {
                let vs: Vec<String> = s.iter().map(|v| crate::algebra::format_lincomb(v)).collect();
                format!("span({})", vs.join(", "))
            })
            .collect();
        f.write_str(&parts.join(" + "))
    }
}

/// The product restricted to an invariant subspace, in the given basis.
fn restrict(a: &Algebra<Gq>, basis: &[Vector<Gq>]) -> Algebra<Gq> {
    let b = Matrix::from_columns(basis);
    Algebra::from_fn(basis.len(), |i, j| {
        b.solve(&a.multiply(&basis[i], &basis[j]).unwrap()).expect("closed subspace")
    })
}

/// A decomposition into simple ideals, or None when there is none.
pub fn is_semisimple(a: &Algebra<Gq>) -> Result<Option<Decomposition>> {
    if is_simple(a)? {
        let basis = (0..a.dim()).map(|i| a.basis(i)).collect();
        return Ok(Some(Decomposition { summands: vec![basis] }));
    }
    let mut irrational = false;
    for ideal in find_ideals(a)?.ideals.iter().filter(|i| i.dim() == 1) {
        let Some(j) = ideal.rational_basis().map(|mut b| b.remove(0)) else {
            let ea = a.map(ExtScalar::from_gq);
            irrational |= ea.mul_vec(&ideal.basis[0], &ideal.basis[0]).iter().any(|x| !x.is_zero());
            continue;
        };
        if a.multiply(&j, &j)?.iter().all(Ring::is_zero) {
            continue;
        }
        let ann = a.right_matrix(&j);
        let stacked = Matrix::from_fn(2 * a.dim(), a.dim(), |r, c| {
            if r < a.dim() { ann.get(r, c).clone() } else { a.left_matrix(&j).get(r - a.dim(), c).clone() }
        });
        let k = stacked.kernel();
        if k.len() != a.dim() - 1 {
            continue;
        }
        let ek: Vec<Vector<ExtScalar>> = k.iter().map(|v| v.iter().map(ExtScalar::from_gq).collect()).collect();
        if !is_ideal(a, &ek) {
            continue;
        }
        let sub = restrict(a, &k);
        if sub.is_zero_product() {
            continue;
        }
        if let Some(d) = is_semisimple(&sub)? {
            let lift = Matrix::from_columns(&k);
            let mut summands = vec![vec![j.clone()]];
            summands.extend(d.summands.iter().map(|s| s.iter().map(|v| lift.mul_vec(v)).collect()));
            return Ok(Some(Decomposition { summands }));
        }
    }
    if irrational {
        return Err(Error::EigenvalueOutsideDomain);
    }
    Ok(None)
}

/// Isomorphism invariants.
#[derive(Clone, Debug, PartialEq)]
pub struct Fingerprint {
    pub left_symmetric: bool,
    pub associative: bool,
    pub transitive: bool,
    pub novikov: bool,
    pub bisymmetric: bool,
    pub commutative: bool,
    pub product_span: usize,
    pub left_annihilator: usize,
    pub right_annihilator: usize,
    pub annihilator: usize,
    pub trace_ll: usize,
    pub trace_rr: usize,
    pub trace_lr: usize,
    pub lie_class: Option<LieClass>,
}

fn stacked_kernel_dim(ms: &[Matrix<Gq>]) -> usize {
    let n = ms[0].cols();
    let rows = ms[0].rows();
    Matrix::from_fn(ms.len() * rows, n, |r, c| ms[r / rows].get(r % rows, c).clone()).kernel().len()
}

pub fn fingerprint(a: &Algebra<Gq>) -> Fingerprint {
    let n = a.dim();
    let ls: Vec<Matrix<Gq>> = (0..n).map(|i| a.left_basis(i)).collect();
    let rs: Vec<Matrix<Gq>> = (0..n).map(|i| a.right_basis(i)).collect();
    let products: Vec<Vector<Gq>> = (0..n * n).map(|t| a.product(t / n, t % n).to_vec()).collect();
    let form = |x: &[Matrix<Gq>], y: &[Matrix<Gq>]| Matrix::from_fn(n, n, |i, j| x[i].mul(&y[j]).trace()).rank();
    let both: Vec<Matrix<Gq>> = ls.iter().chain(&rs).cloned().collect();
    Fingerprint {
        left_symmetric: a.is_left_symmetric(),
        associative: is_associative(a),
        transitive: is_transitive(a),
        novikov: is_novikov(a),
        bisymmetric: is_bisymmetric(a),
        commutative: is_commutative(a),
        product_span: if n == 0 { 0 } else { Matrix::from_columns(&products).rank() },
        left_annihilator: stacked_kernel_dim(&rs),
        right_annihilator: stacked_kernel_dim(&ls),
        annihilator: stacked_kernel_dim(&both),
        trace_ll: form(&ls, &ls),
        trace_rr: form(&rs, &rs),
        trace_lr: form(&ls, &rs),
        lie_class: if n == 3 { classify3(&a.commutator_lie()).ok() } else { None },
    }
}

impl Fingerprint {
    /// Names of the fields on which two fingerprints differ.
    pub fn differences(&self, o: &Self) -> Vec<String> {
        let mut d = Vec::new();
        let mut cmp = |name: &str, x: String, y: String| {
            if x != y {
                d.push(format!("{name}: {x} vs {y}"));
            }
        };
        cmp("left_symmetric", self.left_symmetric.to_string(), o.left_symmetric.to_string());
        cmp("associative", self.associative.to_string(), o.associative.to_string());
        cmp("transitive", self.transitive.to_string(), o.transitive.to_string());
        cmp("novikov", self.novikov.to_string(), o.novikov.to_string());
        cmp("bisymmetric", self.bisymmetric.to_string(), o.bisymmetric.to_string());
        cmp("commutative", self.commutative.to_string(), o.commutative.to_string());
        cmp("product_span", self.product_span.to_string(), o.product_span.to_string());
        cmp("left_annihilator", self.left_annihilator.to_string(), o.left_annihilator.to_string());
        cmp("right_annihilator", self.right_annihilator.to_string(), o.right_annihilator.to_string());
        cmp("annihilator", self.annihilator.to_string(), o.annihilator.to_string());
        cmp("trace_ll", self.trace_ll.to_string(), o.trace_ll.to_string());
        cmp("trace_rr", self.trace_rr.to_string(), o.trace_rr.to_string());
        cmp("trace_lr", self.trace_lr.to_string(), o.trace_lr.to_string());
        let lc = |c: &Option<LieClass>| c.as_ref().map_or("none".to_string(), ToString::to_string);
        cmp("lie_class", lc(&self.lie_class), lc(&o.lie_class));
        d
    }
}

impl fmt::Display for Fingerprint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "left_symmetric {}", self.left_symmetric)?;
        writeln!(f, "associative {}", self.associative)?;
        writeln!(f, "transitive {}", self.transitive)?;
        writeln!(f, "novikov {}", self.novikov)?;
        writeln!(f, "bisymmetric {}", self.bisymmetric)?;
        writeln!(f, "commutative {}", self.commutative)?;
        writeln!(f, "dim A.A {}", self.product_span)?;
        writeln!(f, "dim left annihilator {}", self.left_annihilator)?;
        writeln!(f, "dim right annihilator {}", self.right_annihilator)?;
        writeln!(f, "dim annihilator {}", self.annihilator)?;
        writeln!(f, "rank tr(LxLy) {}", self.trace_ll)?;
        writeln!(f, "rank tr(RxRy) {}", self.trace_rr)?;
        writeln!(f, "rank tr(LxRy) {}", self.trace_lr)?;
        match &self.lie_class {
            Some(c) => writeln!(f, "lie class {c}"),
            None => writeln!(f, "lie class none"),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn table(entries: &[(usize, usize, [i64; 3])]) -> Algebra<Gq> {
        let mut a = Algebra::zero(3);
        for (i, j, v) in entries {
            a.set_product(i - 1, j - 1, v.iter().map(|&x| Gq::from_int(x)).collect());
        }
        a
    }

    fn h1() -> Algebra<Gq> {
        table(&[(1, 1, [1, 0, 0]), (1, 2, [0, 1, 1]), (1, 3, [0, 0, 1]), (2, 1, [0, 1, 0]), (3, 1, [0, 0, 1])])
    }

    fn h5() -> Algebra<Gq> {
        table(&[(1, 2, [0, 0, 1])])
    }

    #[test]
    fn predicates_on_small_tables() {
        let h1 = h1();
        assert!(!is_associative(&h1) && is_novikov(&h1) && !is_bisymmetric(&h1) && !is_transitive(&h1));
        let h5 = h5();
        assert!(is_associative(&h5) && is_transitive(&h5) && is_bisymmetric(&h5));
        let z = Algebra::<Gq>::zero(3);
        assert!(is_associative(&z) && is_transitive(&z) && is_novikov(&z) && is_bisymmetric(&z));
    }

    #[test]
    fn ideals_of_zero_algebra() {
        let z = Algebra::<Gq>::zero(3);
        let ideals = find_ideals(&z).unwrap();
        assert!(ideals.all_subspaces(3));
        assert!(matches!(is_simple(&z), Err(Error::ZeroAlgebra)));
    }

    #[test]
    fn direct_sum_of_fields() {
        let a = table(&[(1, 1, [1, 0, 0]), (2, 2, [0, 1, 0]), (3, 3, [0, 0, 1])]);
        assert!(!is_simple(&a).unwrap());
        let d = is_semisimple(&a).unwrap().unwrap();
        assert_eq!(d.summands.len(), 3);
        for ideal in find_ideals(&a).unwrap().ideals {
            assert!(is_ideal(&a, &ideal.basis));
        }
    }

    #[test]
    fn h1_is_not_semisimple() {
        let a = h1();
        let ideals = find_ideals(&a).unwrap();
        assert!(!ideals.is_empty());
        assert!(ideals.ideals.iter().all(|i| is_ideal(&a, &i.basis)));
        assert!(!is_simple(&a).unwrap());
        assert!(is_semisimple(&a).unwrap().is_none());
    }

    #[test]
    fn irrational_invariant_lines_are_found() {
        // e3 acts on span(e1, e2) by a rotation with eigenvalues +-sqrt(2).
        let a = table(&[(3, 1, [0, 1, 0]), (3, 2, [2, 0, 0]), (3, 3, [0, 0, 1])]);
        let ideals = find_ideals(&a).unwrap();
        assert!(ideals.ideals.iter().any(|i| i.dim() == 1 && i.rational_basis().is_none()));
        assert!(ideals.ideals.iter().all(|i| is_ideal(&a, &i.basis)));
    }

    #[test]
    fn fingerprints_separate_h1_h5() {
        let (f1, f5) = (fingerprint(&h1()), fingerprint(&h5()));
        assert_ne!(f1, f5);
        assert!(!f1.differences(&f5).is_empty());
        assert!(f1.differences(&f1).is_empty());
    }
}
