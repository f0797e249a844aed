use super::*;
use crate::algebra::suq2_presentation;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

#[test]
fn rejects_bad_input() {
    assert_eq!(TruncatedRep::build(c(0.0, 0.0), 4, 4).unwrap_err(), NumericError::ZeroQ);
    assert!(matches!(TruncatedRep::build(c(0.5, 0.0), 1, 4), Err(NumericError::BadSize(_))));
}

#[test]
fn gamma_spectrum_small() {
    let r = TruncatedRep::build(c(0.5, 0.0), 3, 4).unwrap();
    let sv = r.gamma_singular_values();
    let want: Vec<f64> = [1.0, 0.5, 0.25, 0.125].iter().flat_map(|&s| [s; 4]).collect();
    for (a, b) in sv.iter().zip(&want) {
        assert!((a - b).abs() < 1e-14, "{sv:?}");
    }
}

#[test]
fn alpha_kills_bottom_row_and_gamma_is_normal() {
    let r = TruncatedRep::build(c(0.6, 0.3), 10, 6).unwrap();
    for k in 0..6 {
        assert!(r.alpha.column(k).iter().all(|z| z.norm() == 0.0));
    }
    let comm = &r.gamma.adjoint() * &r.gamma - &r.gamma * r.gamma.adjoint();
    assert_eq!(max_abs(&comm), 0.0);
}

#[test]
fn relations_interior_and_full() {
    for q in [c(0.5, 0.0), c(0.3, 0.4), c(1.5, -0.7), c(0.0, 1.0)] {
        let r = TruncatedRep::build(q, 20, 5).unwrap();
        let rep = r.relation_residuals();
        assert!(rep.max_interior() <= 1e-13, "{rep:?}");
        assert!(rep.residuals[0].full <= 1e-13);
    }
    let rep = TruncatedRep::build(c(0.9, 0.0), 5, 3).unwrap().relation_residuals();
    assert!(rep.residuals[3].full > 0.1);
}

#[test]
fn evaluate_simple_elements() {
    let q = c(0.4, 0.3);
    let r = TruncatedRep::build(q, 8, 3).unwrap();
    let p = suq2_presentation(&Scalar::q()).unwrap();
    let one = r.evaluate_element(&Element::one(&p)).unwrap();
    assert_eq!(one, CMatrix::identity(r.dim(), r.dim()));
    let ggs = r.evaluate_element(&Element::monomial(&p, &["g", "g'"]).unwrap()).unwrap();
    for n in 0..=8 {
        for k in 0..3 {
            let j = n * 3 + k;
            assert!((ggs[(j, j)] - c(q.norm_sqr().powi(n as i32), 0.0)).norm() < 1e-15);
        }
    }
    let x = Element::monomial(&p, &["a", "g", "g'", "a'"]).unwrap();
    let lhs = r.evaluate_element(&x.adjoint()).unwrap();
    let rhs = r.evaluate_element(&x).unwrap().adjoint();
    let cols = r.columns_up_to(r.n_max - 4).len();
    assert!(max_abs(&(lhs - rhs).columns(0, cols).into_owned()) < 1e-14);
}

#[test]
fn wrong_presentation_is_rejected() {
    let r = TruncatedRep::build(c(0.5, 0.0), 4, 3).unwrap();
    let other = suq2_presentation(&Scalar::from_int(3)).unwrap();
    assert!(matches!(r.evaluate_element(&Element::one(&other)), Err(NumericError::Presentation(_))));
}

#[test]
fn oracle_examples() {
    let p = suq2_presentation(&Scalar::q()).unwrap();
    let w = |names: &[&str]| -> Word { names.iter().map(|n| p.generator(n).unwrap()).collect() };
    let r = TruncatedRep::build(c(0.5, 0.0), 20, 6).unwrap();
    let raw = vec![(w(&["g'", "g", "a", "a'"]), Scalar::one())];
    assert!(r.oracle_compare(&p, &raw, 4).unwrap() <= 1e-12);

    let r = TruncatedRep::build(c(0.4, 0.3), 20, 6).unwrap();
    let raw = vec![(w(&["a", "g", "g", "g"]), Scalar::one()), (w(&["g", "g", "g", "a"]), Scalar::qbar().pow(3).neg())];
    assert!(r.oracle_compare(&p, &raw, 4).unwrap() <= 1e-12);
    let lhs = r.evaluate_raw(&p, &raw).unwrap();
    assert!(max_abs(&lhs) <= 1e-12);

    let normal = vec![(w(&["g", "a"]), Scalar::q())];
    assert!(r.oracle_compare(&p, &normal, 2).unwrap() == 0.0);
}

#[test]
fn batch_agrees_across_executors() {
    let p = suq2_presentation(&Scalar::q()).unwrap();
    let r = TruncatedRep::build(c(0.6, -0.3), 12, 4).unwrap();
    let a = oracle_batch(&r, &p, 20, 5, 7, Exec::Sequential).unwrap();
    let b = oracle_batch(&r, &p, 20, 5, 7, Exec::Parallel).unwrap();
    assert_eq!(a.deviations, b.deviations);
    assert!(a.max_deviation <= 1e-11);
}

#[test]
fn transported_spectrum() {
    let r = TruncatedRep::build(c(1.2, 0.5), 6, 3).unwrap();
    assert!(r.spectrum_deviation() < 1e-12);
}
