//! Independent reference implementations used as test oracles. Nothing here
//! calls into the library beyond reading raw structure constants.
#![allow(dead_code)]

use lsa_core::algebra::Algebra;
use lsa_core::exact::{Field, Gq, Ring};
use lsa_core::lie::LieAlgebra;
use lsa_core::matrix::Matrix;
use rand::Rng;

pub type Dense = Vec<Vec<Gq>>;

pub fn zero(n: usize) -> Vec<Gq> {
    vec![Gq::zero(); n]
}

pub fn unit(n: usize, i: usize) -> Vec<Gq> {
    let mut v = zero(n);
    v[i] = Gq::one();
    v
}

pub fn add(a: &[Gq], b: &[Gq]) -> Vec<Gq> {
    a.iter().zip(b).map(|(x, y)| x.add(y)).collect()
}

pub fn sub(a: &[Gq], b: &[Gq]) -> Vec<Gq> {
    a.iter().zip(b).map(|(x, y)| x.sub(y)).collect()
}

pub fn scale(c: &Gq, a: &[Gq]) -> Vec<Gq> {
    a.iter().map(|x| c.mul(x)).collect()
}

pub fn is_zero(v: &[Gq]) -> bool {
    v.iter().all(Ring::is_zero)
}

/// Structure constants c[i][j][k] with e_i e_j = sum_k c[i][j][k] e_k.
pub struct Table {
    pub n: usize,
    pub c: Vec<Vec<Vec<Gq>>>,
}

impl Table {
    pub fn of(a: &Algebra<Gq>) -> Self {
        let n = a.dim();
        Table { n, c: (0..n).map(|i| (0..n).map(|j| a.product(i, j).to_vec()).collect()).collect() }
    }

    pub fn from_rows(n: usize, entries: &[(usize, usize, Vec<Gq>)]) -> Self {
        let mut c = vec![vec![zero(n); n]; n];
        for (i, j, v) in entries {
            c[i - 1][j - 1] = v.clone();
        }
        Table { n, c }
    }

    pub fn mul(&self, x: &[Gq], y: &[Gq]) -> Vec<Gq> {
        let mut out = zero(self.n);
        for i in 0..self.n {
            for j in 0..self.n {
                let s = x[i].mul(&y[j]);
                if s.is_zero() {
                    continue;
                }
                out = add(&out, &scale(&s, &self.c[i][j]));
            }
        }
        out
    }

    fn assoc(&self, x: &[Gq], y: &[Gq], z: &[Gq]) -> Vec<Gq> {
        sub(&self.mul(&self.mul(x, y), z), &self.mul(x, &self.mul(y, z)))
    }

    fn triples(&self) -> impl Iterator<Item = (Vec<Gq>, Vec<Gq>, Vec<Gq>)> + '_ {
        let n = self.n;
        (0..n * n * n).map(move |k| (unit(n, k / (n * n)), unit(n, k / n % n), unit(n, k % n)))
    }

    pub fn is_left_symmetric(&self) -> bool {
        self.triples().all(|(x, y, z)| self.assoc(&x, &y, &z) == self.assoc(&y, &x, &z))
    }

    pub fn is_associative(&self) -> bool {
        self.triples().all(|(x, y, z)| is_zero(&self.assoc(&x, &y, &z)))
    }

    pub fn is_novikov(&self) -> bool {
        self.is_left_symmetric()
            && self.triples().all(|(x, y, z)| self.mul(&self.mul(&x, &y), &z) == self.mul(&self.mul(&x, &z), &y))
    }

    pub fn is_commutative(&self) -> bool {
        (0..self.n).all(|i| (0..self.n).all(|j| self.c[i][j] == self.c[j][i]))
    }

    /// Rows of the matrix of y -> x y (row r = coordinate r).
    pub fn left(&self, x: &[Gq]) -> Dense {
        let cols: Vec<Vec<Gq>> = (0..self.n).map(|j| self.mul(x, &unit(self.n, j))).collect();
        transpose(&cols)
    }

    pub fn right(&self, x: &[Gq]) -> Dense {
        let cols: Vec<Vec<Gq>> = (0..self.n).map(|j| self.mul(&unit(self.n, j), x)).collect();
        transpose(&cols)
    }

    pub fn commutator(&self, x: &[Gq], y: &[Gq]) -> Vec<Gq> {
        sub(&self.mul(x, y), &self.mul(y, x))
    }
}

pub fn transpose(m: &Dense) -> Dense {
    let (r, c) = (m.len(), m[0].len());
    (0..c).map(|j| (0..r).map(|i| m[i][j].clone()).collect()).collect()
}

pub fn matmul(a: &Dense, b: &Dense) -> Dense {
    let (n, k, m) = (a.len(), b.len(), b[0].len());
    (0..n)
        .map(|i| (0..m).map(|j| (0..k).fold(Gq::zero(), |s, t| s.add(&a[i][t].mul(&b[t][j])))).collect())
        .collect()
}

pub fn apply(a: &Dense, v: &[Gq]) -> Vec<Gq> {
    a.iter().map(|row| row.iter().zip(v).fold(Gq::zero(), |s, (x, y)| s.add(&x.mul(y)))).collect()
}

pub fn dense(m: &Matrix<Gq>) -> Dense {
    m.to_rows()
}

/// Row echelon form by plain Gaussian elimination; returns the rank.
pub fn rank(rows: &[Vec<Gq>]) -> usize {
    let mut m: Vec<Vec<Gq>> = rows.to_vec();
    if m.is_empty() {
        return 0;
    }
    let cols = m[0].len();
    let mut r = 0;
    for c in 0..cols {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][c].inv().unwrap();
        let pivot: Vec<Gq> = m[r].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..m.len() {
            if i != r && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                m[i] = sub(&m[i], &scale(&f, &pivot));
            }
        }
        m[r] = pivot;
        r += 1;
    }
    r
}

/// Solves a square system by Cramer-free elimination on the augmented matrix.
pub fn solve(a: &Dense, b: &[Gq]) -> Option<Vec<Gq>> {
    let n = a.len();
    let mut m: Vec<Vec<Gq>> = a.iter().zip(b).map(|(r, x)| r.iter().cloned().chain([x.clone()]).collect()).collect();
    for c in 0..n {
        let p = (c..n).find(|&i| !m[i][c].is_zero())?;
        m.swap(c, p);
        let inv = m[c][c].inv().unwrap();
        m[c] = m[c].iter().map(|x| x.mul(&inv)).collect();
        for i in 0..n {
            if i != c && !m[i][c].is_zero() {
                let f = m[i][c].clone();
                let pr = m[c].clone();
                m[i] = sub(&m[i], &scale(&f, &pr));
            }
        }
    }
    Some(m.into_iter().map(|r| r[n].clone()).collect())
}

pub fn inverse(a: &Dense) -> Option<Dense> {
    let n = a.len();
    let cols: Option<Vec<Vec<Gq>>> = (0..n).map(|j| solve(a, &unit(n, j))).collect();
    cols.map(|c| transpose(&c))
}

/// Whether the linear map t (column j = image of e_j) is an algebra isomorphism a -> b.
pub fn is_algebra_iso(a: &Table, b: &Table, t: &Dense) -> bool {
    if rank(t) != a.n {
        return false;
    }
    (0..a.n).all(|i| {
        (0..a.n).all(|j| {
            let (x, y) = (unit(a.n, i), unit(a.n, j));
            apply(t, &a.mul(&x, &y)) == b.mul(&apply(t, &x), &apply(t, &y))
        })
    })
}

pub fn lie_bracket(g: &LieAlgebra<Gq>, x: &[Gq], y: &[Gq]) -> Vec<Gq> {
    let n = g.dim();
    let mut out = zero(n);
    for i in 0..n {
        for j in 0..n {
            let s = x[i].mul(&y[j]);
            if !s.is_zero() {
                out = add(&out, &scale(&s, g.bracket_basis(i, j)));
            }
        }
    }
    out
}

pub fn is_lie_automorphism(g: &LieAlgebra<Gq>, t: &Dense) -> bool {
    let n = g.dim();
    rank(t) == n
        && (0..n).all(|i| {
            (0..n).all(|j| {
                let (x, y) = (unit(n, i), unit(n, j));
                apply(t, &lie_bracket(g, &x, &y)) == lie_bracket(g, &apply(t, &x), &apply(t, &y))
            })
        })
}

/// Dimension of the associative algebra generated by the identity and the
/// given matrices. By Burnside's theorem it equals n^2 exactly when the
/// matrices have no common proper invariant subspace over C.
pub fn generated_algebra_dim(gens: &[Dense]) -> usize {
    let n = gens[0].len();
    let flat = |m: &Dense| -> Vec<Gq> { m.iter().flatten().cloned().collect() };
    let id: Dense = (0..n).map(|i| unit(n, i)).collect();
    let mut basis: Vec<Dense> = vec![id];
    let mut rows: Vec<Vec<Gq>> = vec![flat(&basis[0])];
    let mut k = 0;
    while k < basis.len() {
        for g in gens {
            let w = matmul(&basis[k], g);
            let mut trial = rows.clone();
            trial.push(flat(&w));
            if rank(&trial) > rows.len() {
                rows = trial;
                basis.push(w);
            }
        }
        k += 1;
    }
    rows.len()
}

pub fn small_gq(rng: &mut impl Rng, height: i64) -> Gq {
    Gq::from_frac(rng.gen_range(-height..=height), rng.gen_range(1..=height.max(1)))
}

pub fn small_vec(rng: &mut impl Rng, n: usize, height: i64) -> Vec<Gq> {
    (0..n).map(|_| small_gq(rng, height)).collect()
}

/// A random invertible integer matrix in the library's column convention.
pub fn invertible(rng: &mut impl Rng, n: usize, height: i64) -> Matrix<Gq> {
    loop {
        let rows: Vec<Vec<Gq>> =
            (0..n).map(|_| (0..n).map(|_| Gq::from_int(rng.gen_range(-height..=height))).collect()).collect();
        if rank(&rows) == n {
            return Matrix::from_rows(rows).unwrap();
        }
    }
}
