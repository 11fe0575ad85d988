mod common;

use std::collections::BTreeMap;

use common::*;
use lsa_core::algebra::Algebra;
use lsa_core::catalog::{Catalog, Family};
use lsa_core::cocycle::{phi, psi};
use lsa_core::exact::{Field, Gq, RatFunc, Ring, UPoly};
use lsa_core::format::{parse_document, Document};
use lsa_core::iso::verify_lsa_iso;
use lsa_core::lie::classify3;
use lsa_core::matrix::Matrix;
use lsa_core::props::fingerprint;
use proptest::prelude::*;
use std::sync::OnceLock;

fn gq() -> impl Strategy<Value = Gq> {
    (-12i64..=12, 1i64..=6, -12i64..=12, 1i64..=6)
        .prop_map(|(a, b, c, d)| Gq::from_frac(a, b).add(&Gq::from_frac(c, d).mul(&Gq::i())))
}

fn rational() -> impl Strategy<Value = Gq> {
    (-6i64..=6, 1i64..=4).prop_map(|(a, b)| Gq::from_frac(a, b))
}

fn invertible3() -> impl Strategy<Value = Matrix<Gq>> {
    proptest::collection::vec(-3i64..=3, 9)
        .prop_map(|v| Matrix::from_rows(v.chunks(3).map(|r| r.iter().map(|&x| Gq::from_int(x)).collect()).collect()).unwrap())
        .prop_filter("invertible", |m| !m.det().is_zero())
}

fn random_algebra() -> impl Strategy<Value = Algebra<Gq>> {
    proptest::collection::vec(-2i64..=2, 27).prop_map(|v| {
        Algebra::from_fn(3, |i, j| (0..3).map(|k| Gq::from_int(v[(i * 3 + j) * 3 + k])).collect())
    })
}

fn catalog_instances() -> &'static Vec<Algebra<Gq>> {
    static CELL: OnceLock<Vec<Algebra<Gq>>> = OnceLock::new();
    CELL.get_or_init(|| {
        let cat = Catalog::embedded();
        let mut out = Vec::new();
        for f in Family::ALL {
            for e in cat.family(f) {
                for b in cat.samples(e) {
                    out.push(e.instantiate(&b).unwrap());
                }
            }
        }
        out
    })
}

fn catalog_algebra() -> impl Strategy<Value = Algebra<Gq>> {
    (0..catalog_instances().len()).prop_map(|k| catalog_instances()[k].clone())
}

fn lambda(x: &Gq) -> BTreeMap<String, Gq> {
    BTreeMap::from([("lambda".to_string(), x.clone())])
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn gaussian_field_axioms(a in gq(), b in gq(), c in gq()) {
        prop_assert_eq!(a.add(&b).add(&c), a.add(&b.add(&c)));
        prop_assert_eq!(a.mul(&b).mul(&c), a.mul(&b.mul(&c)));
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert!(a.sub(&a).is_zero());
        if !a.is_zero() {
            prop_assert_eq!(a.mul(&a.inv().unwrap()), Gq::one());
        }
    }

    #[test]
    fn evaluation_is_a_homomorphism(p in proptest::collection::vec(rational(), 1..4),
                                    q in proptest::collection::vec(rational(), 1..4),
                                    x in rational()) {
        let poly = |cs: &[Gq]| cs.iter().rev().fold(RatFunc::zero(), |acc, c| {
            acc.mul(&RatFunc::var("lambda")).add(&RatFunc::constant(c.clone()))
        });
        let horner = |cs: &[Gq]| cs.iter().rev().fold(Gq::zero(), |acc, c| acc.mul(&x).add(c));
        let (f, g) = (poly(&p), poly(&q));
        let b = lambda(&x);
        prop_assert_eq!(f.add(&g).eval(&b).unwrap(), horner(&p).add(&horner(&q)));
        prop_assert_eq!(f.mul(&g).eval(&b).unwrap(), horner(&p).mul(&horner(&q)));
        if !horner(&q).is_zero() && !g.is_zero() {
            prop_assert_eq!(f.div(&g).unwrap().eval(&b).unwrap(), horner(&p).div(&horner(&q)).unwrap());
        }
    }

    #[test]
    fn factorization_expands_back(roots in proptest::collection::vec(gq(), 0..3),
                                  quad in (-5i64..=5, -5i64..=5), lead in 1i64..=4) {
        let mut p = UPoly::constant(Gq::from_int(lead));
        for r in &roots {
            p = p.mul(&UPoly::linear(r));
        }
        p = p.mul(&UPoly::from_ints(&[quad.0, quad.1, 1]));
        let f = p.factor().unwrap();
        prop_assert_eq!(f.expand(), p);
        prop_assert!(f.factors.iter().all(|(g, _)| g.degree() >= 1));
    }

    #[test]
    fn product_is_bilinear(a in random_algebra(), c in gq(),
                           x in proptest::collection::vec(gq(), 3),
                           y in proptest::collection::vec(gq(), 3),
                           z in proptest::collection::vec(gq(), 3)) {
        let t = Table::of(&a);
        let lhs = a.multiply(&add(&scale(&c, &x), &y), &z).unwrap();
        prop_assert_eq!(&lhs, &add(&scale(&c, &t.mul(&x, &z)), &t.mul(&y, &z)));
        let rhs = a.multiply(&z, &add(&scale(&c, &x), &y)).unwrap();
        prop_assert_eq!(rhs, add(&scale(&c, &t.mul(&z, &x)), &t.mul(&z, &y)));
    }

    #[test]
    fn left_symmetry_matches_left_regular(a in prop_oneof![random_algebra(), catalog_algebra()]) {
        let oracle = Table::of(&a).is_left_symmetric();
        prop_assert_eq!(a.is_left_symmetric(), oracle);
        prop_assert_eq!(a.check_left_regular().is_ok(), oracle);
    }

    #[test]
    fn commutator_of_transported_lsa_is_lie(a in catalog_algebra(), p in invertible3()) {
        let b = a.transport(&p).unwrap();
        prop_assert!(b.is_left_symmetric());
        prop_assert!(b.commutator_lie().check_jacobi().is_ok());
        prop_assert!(verify_lsa_iso(&b, &a, &p).unwrap());
        prop_assert!(is_algebra_iso(&Table::of(&b), &Table::of(&a), &dense(&p)));
    }

    #[test]
    fn invariants_survive_change_of_basis(a in catalog_algebra(), p in invertible3()) {
        let b = a.transport(&p).unwrap();
        prop_assert_eq!(classify3(&a.commutator_lie()).unwrap(), classify3(&b.commutator_lie()).unwrap());
        prop_assert_eq!(fingerprint(&a), fingerprint(&b));
    }

    #[test]
    fn correspondence_roundtrip(a in catalog_algebra(), p in invertible3()) {
        let b = a.transport(&p).unwrap();
        let c = psi(&b).unwrap();
        prop_assert!(c.check().is_ok());
        prop_assert!(c.is_bijective());
        prop_assert_eq!(phi(&c).unwrap(), b);
    }

    #[test]
    fn documents_roundtrip(a in catalog_algebra()) {
        let d = Document::from_algebra(&a);
        let text = d.emit();
        let back = parse_document(&text).unwrap();
        prop_assert_eq!(back.emit(), text);
        prop_assert_eq!(back, d);
    }
}
