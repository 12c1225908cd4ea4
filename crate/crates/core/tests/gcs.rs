use std::collections::HashMap;

use cotangent_gcs::catalog;
use cotangent_gcs::cohomology::is_closed_two_form;
use cotangent_gcs::gcs::{
    cybe_check, gcs_from_subalgebra, generalized_kahler_check, i_eigenspace, lift_complex, nijenhuis, verify,
    GCSCandidate,
};
use cotangent_gcs::io::Params;
use cotangent_gcs::lie::{cotangent, LieAlgebra};
use cotangent_gcs::poly::Var;
use cotangent_gcs::scalar::{frac, int};
use cotangent_gcs::symbolic::{symbolic_gcs_m, symbolic_nijenhuis};
use cotangent_gcs::{Matrix, Polynomial, Rational};
use num_traits::{One, Zero};

fn aff_r() -> LieAlgebra {
    catalog::get("aff(R)", &Params::new()).unwrap()
}

fn symplectic_family(a: &Rational, b: &Rational, c: &Rational) -> GCSCandidate {
    let z = Rational::zero();
    let rows = vec![
        vec![a.clone(), z.clone(), z.clone(), b.clone()],
        vec![z.clone(), a.clone(), -b.clone(), z.clone()],
        vec![z.clone(), -c.clone(), -a.clone(), z.clone()],
        vec![c.clone(), z.clone(), z.clone(), -a.clone()],
    ];
    GCSCandidate::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

fn complex_family(x: &Rational, y: &Rational, z: &Rational) -> GCSCandidate {
    let o = Rational::zero();
    let rows = vec![
        vec![x.clone(), y.clone(), o.clone(), o.clone()],
        vec![z.clone(), -x.clone(), o.clone(), o.clone()],
        vec![o.clone(), o.clone(), -x.clone(), -z.clone()],
        vec![o.clone(), o.clone(), -y.clone(), x.clone()],
    ];
    GCSCandidate::new(Matrix::from_rows(rows).unwrap()).unwrap()
}

/// `(a, b, -(1 + a^2)/b)`, so that `a^2 + bc = -1`.
fn on_conic(a: Rational, b: Rational) -> (Rational, Rational, Rational) {
    let c = -(Rational::one() + a.clone() * a.clone()) / b.clone();
    (a, b, c)
}

#[test]
fn aff_r_families_verify_with_their_types() {
    let l = aff_r();
    for (a, b) in [(int(0), int(1)), (frac(1, 2), int(-3)), (int(2), frac(5, 7))] {
        let (a, b, c) = on_conic(a, b);
        let rep = verify(&l, &symplectic_family(&a, &b, &c)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.type_k, Some(0));
        let rep = verify(&l, &complex_family(&a, &b, &c)).unwrap();
        assert!(rep.passed());
        assert_eq!(rep.type_k, Some(1));
    }
}

/// The top left entry of the form v -> <Gv, v> is `cz/2`, so with
/// `G = -Ja Jb` the metric is positive exactly when `cz > 0`; for `cz < 0`
/// it is negative definite and `(Ja, -Jb)` is the Kahler pair.
#[test]
fn generalized_kahler_exactly_when_cz_positive() {
    let picks = [
        (int(0), int(1)),
        (int(0), int(-1)),
        (frac(1, 3), int(2)),
        (int(-2), frac(-1, 4)),
        (frac(3, 5), frac(7, 2)),
    ];
    for (a, b) in picks.iter().cloned() {
        let (a, b, c) = on_conic(a, b);
        let ja = symplectic_family(&a, &b, &c);
        for (x, y) in picks.iter().cloned() {
            let (x, y, z) = on_conic(x, y);
            let jb = complex_family(&x, &y, &z);
            let rep = generalized_kahler_check(&ja, &jb).unwrap();
            assert!(rep.commute);
            assert!(rep.involution_g);
            let cz = c.clone() * z.clone();
            assert_eq!(rep.positive_definite, cz > Rational::zero(), "c = {c}, z = {z}");
            let flipped = complex_family(&-x.clone(), &-y.clone(), &-z.clone());
            let rep = generalized_kahler_check(&ja, &flipped).unwrap();
            assert_eq!(rep.positive_definite, cz < Rational::zero(), "c = {c}, z = {z}");
        }
    }
}

#[test]
fn kahler_sign_on_the_simplest_pair() {
    let ja = symplectic_family(&int(0), &int(1), &int(-1));
    let rep = generalized_kahler_check(&ja, &complex_family(&int(0), &int(1), &int(-1))).unwrap();
    assert!(rep.commute && rep.involution_g && rep.positive_definite);
    let rep = generalized_kahler_check(&ja, &complex_family(&int(0), &int(-1), &int(1))).unwrap();
    assert!(rep.commute && rep.involution_g);
    assert!(!rep.positive_definite);
}

#[test]
fn a_structure_paired_with_itself_is_not_kahler() {
    let (a, b, c) = on_conic(int(0), int(1));
    let ja = symplectic_family(&a, &b, &c);
    let rep = generalized_kahler_check(&ja, &ja).unwrap();
    assert!(rep.involution_g);
    assert!(!rep.positive_definite);
}

/// Every stored structure: its `+i` eigenspace has complex dimension `m`,
/// is an isotropic subalgebra meeting its conjugate trivially, and gives
/// back the structure.
#[test]
fn eigenspace_correspondence_on_every_stored_structure() {
    let mut n = 0;
    for r in catalog::rows() {
        for p in r.samples() {
            let l = r.algebra(&p).unwrap();
            for c in r.cells() {
                let j = r.structure(c.type_k, &p).unwrap();
                let q = i_eigenspace(&l, &j).unwrap();
                assert_eq!(q.space.dim(), l.dim(), "{} type {}", r.label(), c.type_k);
                assert!(q.is_isotropic());
                assert!(q.is_subalgebra(&l));
                assert!(q.meets_conjugate_trivially());
                let back = gcs_from_subalgebra(&l, &q).unwrap();
                assert_eq!(back.matrix(), j.matrix());
                n += 1;
            }
        }
    }
    assert!(n >= 60, "{n}");
}

/// The generic tensor evaluated at a stored structure is the tensor of
/// that structure.
#[test]
fn symbolic_nijenhuis_specializes_to_the_numeric_one() {
    for r in catalog::table_rows() {
        let p = &r.samples()[0];
        let l = r.algebra(p).unwrap();
        let m = l.dim();
        let t = cotangent(&l.lift::<Polynomial>()).total;
        let generic = symbolic_nijenhuis(&t);
        let shape = symbolic_gcs_m(m);
        for c in r.cells() {
            let j = r.structure(c.type_k, p).unwrap();
            let mut values: HashMap<Var, Rational> = HashMap::new();
            for a in 0..2 * m {
                for b in 0..2 * m {
                    if let Some((mono, coeff)) = shape[(a, b)].terms().next() {
                        let v = mono.powers()[0].0;
                        values.insert(v, j.matrix()[(a, b)].clone() / coeff.clone());
                    }
                }
            }
            assert_eq!(shape.map(|e| e.eval(&values).as_constant().unwrap()), *j.matrix());
            let numeric = nijenhuis(&cotangent(&l).total, j.matrix());
            for (i, jj, k, e) in generic.iter() {
                assert_eq!(e.eval(&values).as_constant().unwrap(), numeric.get(i, jj, k));
            }
        }
    }
}

#[test]
fn no_complex_lift_on_r_x_r3() {
    let l = catalog::get("R x r3", &Params::new()).unwrap();
    let rot = |a: usize, b: usize, c: usize, d: usize| {
        let mut j = Matrix::zeros(4, 4);
        j[(b, a)] = int(1);
        j[(a, b)] = int(-1);
        j[(d, c)] = int(1);
        j[(c, d)] = int(-1);
        j
    };
    for j in [rot(0, 1, 2, 3), rot(0, 2, 1, 3), rot(0, 3, 1, 2)] {
        assert!(lift_complex(&l, &j).is_err());
    }
}

#[test]
fn cybe_agrees_with_closedness_on_r_x_h3() {
    let l = catalog::get("R x h3", &Params::new()).unwrap();
    let mut w = Matrix::zeros(4, 4);
    w[(0, 1)] = int(1);
    w[(1, 0)] = int(-1);
    w[(2, 3)] = int(1);
    w[(3, 2)] = int(-1);
    assert_eq!(cybe_check(&l, &w).unwrap(), is_closed_two_form(&l, &w));
}

#[test]
fn g6_examples_have_types_one_and_two() {
    let r = catalog::row("g6").unwrap();
    for p in r.samples() {
        let l = r.algebra(&p).unwrap();
        for k in [1, 2] {
            let j = r.structure(k, &p).unwrap();
            assert_eq!(verify(&l, &j).unwrap().type_k, Some(k));
        }
    }
}
