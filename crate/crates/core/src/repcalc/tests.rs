use super::*;
use crate::algebra::{suq2_presentation, uq2_presentation};
use crate::morphisms::{delta_su, delta_uq2, su2_into_uq2, zeta_of};

fn setup() -> (Arc<Presentation>, GenMorphism, Scalar) {
    let a = suq2_presentation(&Scalar::q()).unwrap();
    let d = delta_su(&a).unwrap();
    let z = zeta_of(&a).unwrap();
    (a, d, z)
}

#[test]
fn fundamental_is_unitary_invariant_corep() {
    let (a, d, _) = setup();
    for degs in [vec![1, 0], vec![0, -1]] {
        let u = fundamental(&a, GradedSpace::new(degs)).unwrap();
        assert!(u.is_unitary().unwrap());
        assert!(u.is_t_invariant());
        assert!(corep_check(&u, &d, CorepMode::Braided).unwrap());
    }
}

#[test]
fn non_unitary_and_perturbed() {
    let (a, d, _) = setup();
    let g = Element::named(&a, "g").unwrap();
    let diag = AlgMatrix::diagonal(GradedSpace::new(vec![0, 0]), vec![g.clone(), g]).unwrap();
    assert!(!diag.is_unitary().unwrap());
    assert!(AlgMatrix::identity(&a, GradedSpace::new(vec![1, 0])).is_unitary().unwrap());

    let u = fundamental(&a, GradedSpace::new(vec![1, 0])).unwrap();
    let plus = Element::named(&a, "g'").unwrap().scale(&Scalar::q());
    let bad = u.with_entry(0, 1, plus).unwrap();
    assert!(!corep_check(&bad, &d, CorepMode::Braided).unwrap());

    let one = AlgMatrix::identity(&a, GradedSpace::trivial());
    assert!(corep_check(&one, &d, CorepMode::Braided).unwrap());

    let wrong = u.with_entry(0, 0, Element::named(&a, "g").unwrap()).unwrap();
    assert!(matches!(corep_check(&wrong, &d, CorepMode::Braided), Err(AlgebraError::NotTInvariant(_))));
}

#[test]
fn tensor_square_is_a_corep_with_invariant_vector() {
    let (a, d, z) = setup();
    let u = fundamental(&a, GradedSpace::new(vec![0, -1])).unwrap();
    let uu = rep_tensor(&u, &u, &z).unwrap();
    assert!(uu.is_t_invariant());
    assert!(uu.is_unitary().unwrap());
    assert!(corep_check(&uu, &d, CorepMode::Braided).unwrap());
    let q = Scalar::q();
    let xi = [Scalar::zero(), Scalar::one(), q.neg(), Scalar::zero()];
    assert!(invariant_vector_check(&uu, &xi).unwrap());
    let xi2 = [Scalar::zero(), Scalar::one(), q.mul(&Scalar::from_int(-2)), Scalar::zero()];
    assert!(!invariant_vector_check(&uu, &xi2).unwrap());
    let scaled: Vec<Scalar> = xi.iter().map(|c| c.mul(&Scalar::i())).collect();
    assert!(invariant_vector_check(&uu, &scaled).unwrap());
}

#[test]
fn grading_one_zero_fixes_the_conjugate_vector() {
    let (a, d, z) = setup();
    let u = fundamental(&a, GradedSpace::new(vec![1, 0])).unwrap();
    let uu = rep_tensor(&u, &u, &z).unwrap();
    assert!(corep_check(&uu, &d, CorepMode::Braided).unwrap());
    let q = Scalar::q();
    assert!(!invariant_vector_check(&uu, &[Scalar::zero(), Scalar::one(), q.neg(), Scalar::zero()]).unwrap());
    assert!(invariant_vector_check(&uu, &[Scalar::zero(), Scalar::one(), q.conj().neg(), Scalar::zero()]).unwrap());
}

#[test]
fn tensor_with_trivial_is_identity() {
    let (a, _, z) = setup();
    let u = fundamental(&a, GradedSpace::new(vec![1, 0])).unwrap();
    let one = AlgMatrix::identity(&a, GradedSpace::trivial());
    assert_eq!(rep_tensor(&u, &one, &z).unwrap(), u);
    assert_eq!(rep_tensor(&one, &u, &z).unwrap(), u);
}

#[test]
fn mixed_leg_images_commute() {
    let (a, d, z) = setup();
    for degs in [vec![1, 0], vec![0, -1]] {
        let u = fundamental(&a, GradedSpace::new(degs)).unwrap();
        assert!(mixed_leg_commutator(&u, &u, d.target(), &z).unwrap().is_zero());
    }
}

#[test]
fn constraints_are_reproduced() {
    let r = constraint_derivation(&Scalar::q()).unwrap();
    assert!(r.passed(), "{r:?}");
    assert_eq!(r.lhs[1], "a'");
    assert_eq!(r.rhs[3], "-qb*c");
}

#[test]
fn uq2_fundamental() {
    let q = Scalar::q();
    let a = suq2_presentation(&q).unwrap();
    let b = uq2_presentation(&q).unwrap();
    let db = delta_uq2(&b).unwrap();
    let include = su2_into_uq2(&a, &b).unwrap();
    let v = fundamental(&a, GradedSpace::new(vec![1, 0])).unwrap().map(&include).unwrap();
    let rep = uq2_from_su2_rep(&v, &db).unwrap();
    assert!(rep.passed(), "{rep:?}");
    assert_eq!(rep.u.render_rows(Notation::Ascii), vec![vec!["a*z'", "-q*g'"], vec!["g*z'", "a'"]]);
}
