//! Algebraic laws checked with proptest. Each law runs its own
//! deterministic runner so the same cases are drawn on every run.

#![allow(dead_code)]

use std::sync::Arc;

use braided_suq2::algebra::{suq2_presentation, uq2_presentation, Degree, Element, Presentation, Word};
use braided_suq2::braided::{embed, grading_flip, twisted_tensor};
use braided_suq2::cli::parse_element;
use braided_suq2::morphisms::{delta_su, rho_scale, zeta_of, GenMorphism};
use braided_suq2::numeric::{max_abs, TruncatedRep};
use braided_suq2::scalars::{Notation, Scalar};
use num_complex::Complex64;
use proptest::prelude::*;
use proptest::test_runner::{Config, RngAlgorithm, TestCaseError, TestRng, TestRunner};

pub struct Law {
    pub name: &'static str,
    pub run: fn(u32) -> Result<(), String>,
}

fn runner(cases: u32) -> TestRunner {
    let config = Config { cases, failure_persistence: None, ..Config::default() };
    TestRunner::new_with_rng(config, TestRng::deterministic_rng(RngAlgorithm::ChaCha))
}

fn check<S: Strategy>(cases: u32, s: S, f: impl Fn(S::Value) -> Result<(), TestCaseError>) -> Result<(), String>
where
    S::Value: std::fmt::Debug,
{
    runner(cases).run(&s, f).map_err(|e| e.to_string())
}

fn base_scalars() -> Vec<Scalar> {
    let q = Scalar::q();
    vec![
        Scalar::one(),
        Scalar::from_int(-2),
        Scalar::from_ratio(1, 3),
        Scalar::i(),
        q.clone(),
        q.conj(),
        q.inv().unwrap(),
        q.add(&Scalar::one()),
        Scalar::zeta(),
    ]
}

fn scalar_strategy() -> impl Strategy<Value = Scalar> {
    let n = base_scalars().len();
    (0..n, 0..n, 0..n).prop_map(|(a, b, c)| {
        let s = base_scalars();
        s[a].mul(&s[b]).add(&s[c])
    })
}

fn nonzero_scalar() -> impl Strategy<Value = Scalar> {
    scalar_strategy().prop_filter("nonzero", |s| !s.is_zero())
}

type RawTerms = Vec<(Scalar, Vec<u16>)>;

fn raw_strategy(ngens: u16, max_len: usize, max_terms: usize) -> impl Strategy<Value = RawTerms> {
    prop::collection::vec((scalar_strategy(), prop::collection::vec(0..ngens, 0..=max_len)), 1..=max_terms)
}

fn element(p: &Arc<Presentation>, raw: &RawTerms) -> Element {
    Element::from_raw(p, raw.iter().map(|(c, w)| (Word::from_slice(w), c.clone()))).unwrap()
}

fn monomial_strategy(ngens: u16, max_len: usize) -> impl Strategy<Value = Vec<u16>> {
    prop::collection::vec(0..ngens, 0..=max_len)
}

fn suq2() -> Arc<Presentation> {
    suq2_presentation(&Scalar::q()).unwrap()
}

fn eq(x: &Element, y: &Element, what: &str) -> Result<(), TestCaseError> {
    prop_assert_eq!(x, y, "{}", what);
    Ok(())
}

fn scalar_field(cases: u32) -> Result<(), String> {
    check(cases, (scalar_strategy(), scalar_strategy(), nonzero_scalar()), |(a, b, c)| {
        prop_assert_eq!(a.mul(&b.add(&c)), a.mul(&b).add(&a.mul(&c)));
        prop_assert_eq!(a.mul(&b), b.mul(&a));
        prop_assert_eq!(a.div(&c).mul(&c), a.clone());
        prop_assert_eq!(a.conj().conj(), a.clone());
        prop_assert_eq!(a.mul(&b).conj(), a.conj().mul(&b.conj()));
        let qv = Complex64::new(0.37, -0.52);
        let (av, bv) = (a.evaluate(qv).unwrap(), b.evaluate(qv).unwrap());
        prop_assert!((a.mul(&b).evaluate(qv).unwrap() - av * bv).norm() < 1e-9 * (1.0 + (av * bv).norm()));
        prop_assert!((a.conj().evaluate(qv).unwrap() - av.conj()).norm() < 1e-9 * (1.0 + av.norm()));
        Ok(())
    })
}

fn ring_laws(cases: u32) -> Result<(), String> {
    let p = suq2();
    let s = (raw_strategy(4, 3, 2), raw_strategy(4, 3, 2), raw_strategy(4, 2, 2), scalar_strategy());
    check(cases, s, |(x, y, z, c)| {
        let (x, y, z) = (element(&p, &x), element(&p, &y), element(&p, &z));
        eq(&(&(&x * &y) * &z), &(&x * &(&y * &z)), "associativity")?;
        eq(&(&x * &(&y + &z)), &(&(&x * &y) + &(&x * &z)), "left distributivity")?;
        eq(&(&(&x + &y) * &z), &(&(&x * &z) + &(&y * &z)), "right distributivity")?;
        let minus = -&x;
        eq(&(&x + &minus), &Element::zero(&p), "additive inverse")?;
        eq(&(&x * &Element::one(&p)), &x, "unit")?;
        eq(&(&x.scale(&c) * &y), &(&x * &y).scale(&c), "scalars are central")?;
        Ok(())
    })
}

fn normal_form_laws(cases: u32) -> Result<(), String> {
    let p = suq2();
    check(cases, (monomial_strategy(4, 5), monomial_strategy(4, 5)), |(u, v)| {
        let whole = Element::word(&p, &Word::from_slice(&[u.clone(), v.clone()].concat())).unwrap();
        let split = &Element::word(&p, &Word::from_slice(&u)).unwrap() * &Element::word(&p, &Word::from_slice(&v)).unwrap();
        eq(&whole, &split, "normal form is independent of bracketing")?;
        for (w, _) in whole.terms() {
            prop_assert!(p.is_normal(w));
        }
        Ok(())
    })
}

fn involution_laws(cases: u32) -> Result<(), String> {
    let p = suq2();
    check(cases, (raw_strategy(4, 3, 3), raw_strategy(4, 3, 2), scalar_strategy()), |(x, y, c)| {
        let (x, y) = (element(&p, &x), element(&p, &y));
        eq(&x.adjoint().adjoint(), &x, "x** = x")?;
        eq(&(&x * &y).adjoint(), &(&y.adjoint() * &x.adjoint()), "(xy)* = y*x*")?;
        eq(&(&x + &y).adjoint(), &(&x.adjoint() + &y.adjoint()), "(x+y)* = x*+y*")?;
        eq(&x.scale(&c).adjoint(), &x.adjoint().scale(&c.conj()), "(cx)* = c̄x*")?;
        Ok(())
    })
}

fn degree_laws(cases: u32) -> Result<(), String> {
    let p = suq2();
    let z = Scalar::zeta();
    check(cases, (monomial_strategy(4, 4), monomial_strategy(4, 4), raw_strategy(4, 3, 3), -3i32..=3), |(u, v, x, m)| {
        let x = element(&p, &x);
        let deg = |w: &[u16]| w.iter().map(|&g| p.degree_of(g)).sum::<i32>();
        let prod = Element::word(&p, &Word::from_slice(&[u.clone(), v.clone()].concat())).unwrap();
        match prod.degree() {
            Degree::Zero => {}
            Degree::Homogeneous(d) => prop_assert_eq!(d, deg(&u) + deg(&v)),
            Degree::Inhomogeneous => prop_assert!(false, "monomial product is inhomogeneous"),
        }
        let parts = x.degrees().into_iter().fold(Element::zero(&p), |acc, d| &acc + &x.homogeneous_component(d));
        eq(&parts, &x, "sum of homogeneous components")?;
        match x.adjoint().degree() {
            Degree::Homogeneous(d) => prop_assert_eq!(Degree::Homogeneous(-d), x.degree()),
            other => prop_assert_eq!(other, x.degree()),
        }
        let rho = rho_scale(&p, &z, m).unwrap();
        let y = Element::word(&p, &Word::from_slice(&u)).unwrap();
        eq(&rho.apply(&(&x * &y)).unwrap(), &(&rho.apply(&x).unwrap() * &rho.apply(&y).unwrap()), "ρ is multiplicative")?;
        Ok(())
    })
}

fn twisted_commutation(cases: u32) -> Result<(), String> {
    let p = suq2();
    let z = zeta_of(&p).unwrap();
    let aa = twisted_tensor(&p, &p, &z).unwrap();
    check(cases, (monomial_strategy(4, 4), raw_strategy(4, 3, 3)), |(y, x)| {
        let y = Element::word(&p, &Word::from_slice(&y)).unwrap();
        let x = element(&p, &x);
        let dy = match y.degree() {
            Degree::Homogeneous(d) => d,
            _ => 0,
        };
        let lhs = &embed(&aa, 1, &x).unwrap() * &embed(&aa, 2, &y).unwrap();
        let rho = rho_scale(&p, &z, dy).unwrap();
        let rhs = &embed(&aa, 2, &y).unwrap() * &embed(&aa, 1, &rho.apply(&x).unwrap()).unwrap();
        eq(&lhs, &rhs, "j1(x)j2(y) = j2(y)j1(ρ(x))")?;
        for d in x.degrees() {
            let xd = x.homogeneous_component(d);
            let lhs = &embed(&aa, 1, &xd).unwrap() * &embed(&aa, 2, &y).unwrap();
            let rhs = (&embed(&aa, 2, &y).unwrap() * &embed(&aa, 1, &xd).unwrap()).scale(&z.pow(d * dy));
            eq(&lhs, &rhs, "j1(x)j2(y) = ζ^{kl} j2(y)j1(x)")?;
        }
        Ok(())
    })
}

fn delta_multiplicative(cases: u32) -> Result<(), String> {
    let p = suq2();
    let d = delta_su(&p).unwrap();
    check(cases, (raw_strategy(4, 2, 2), raw_strategy(4, 2, 2)), |(x, y)| {
        let (x, y) = (element(&p, &x), element(&p, &y));
        eq(&d.apply(&(&x * &y)).unwrap(), &(&d.apply(&x).unwrap() * &d.apply(&y).unwrap()), "Δ(xy) = Δ(x)Δ(y)")?;
        eq(&d.apply(&x.adjoint()).unwrap(), &d.apply(&x).unwrap().adjoint(), "Δ(x*) = Δ(x)*")?;
        Ok(())
    })
}

fn halmosh_monomials(cases: u32) -> Result<(), String> {
    let p = suq2();
    let alpha = Element::named(&p, "a").unwrap();
    let g = Element::named(&p, "g").unwrap();
    let gs = Element::named(&p, "g'").unwrap();
    let q = Scalar::q();
    let coeffs = prop::collection::vec(((0u32..=8, 0u32..=8).prop_filter("m + l ≤ 8", |(m, l)| m + l <= 8), scalar_strategy()), 1..=3);
    check(cases, coeffs, |terms| {
        let mut f = Element::zero(&p);
        let mut shifted = Element::zero(&p);
        for ((m, l), c) in &terms {
            let mono = &g.pow(*m).unwrap() * &gs.pow(*l).unwrap();
            f = &f + &mono.scale(c);
            shifted = &shifted + &mono.scale(&c.mul(&q.conj().pow(*m as i32)).mul(&q.pow(*l as i32)));
        }
        eq(&(&alpha * &f), &(&shifted * &alpha), "α f(γ) = f(q̄γ) α")
    })
}

fn render_round_trip(cases: u32) -> Result<(), String> {
    let p = suq2();
    let z = zeta_of(&p).unwrap();
    let aa = twisted_tensor(&p, &p, &z).unwrap();
    let b = uq2_presentation(&Scalar::q()).unwrap();
    let flip = grading_flip(&p);
    check(cases, (raw_strategy(4, 4, 3), raw_strategy(8, 3, 3), raw_strategy(6, 3, 3)), |(x, y, w)| {
        for (pres, raw) in [(&p, &x), (&aa, &y), (&b, &w), (&flip, &x)] {
            let e = element(pres, raw);
            let text = e.render(Notation::Ascii);
            let back = parse_element(&text, pres).map_err(|err| TestCaseError::fail(format!("{text}: {err}")))?;
            eq(&back, &e, &text)?;
        }
        Ok(())
    })
}

fn numeric_soundness(cases: u32) -> Result<(), String> {
    let p = suq2();
    let radius = 0.05f64..0.95;
    let angle = 0.0f64..std::f64::consts::TAU;
    check(cases.min(1000), (radius, angle, raw_strategy(4, 4, 3)), |(r, t, x)| {
        let qv = Complex64::from_polar(r, t);
        let rep = TruncatedRep::build(qv, 8, 3).unwrap();
        let raw: Vec<(Word, Scalar)> = x.iter().map(|(c, w)| (Word::from_slice(w), c.clone())).collect();
        let dev = rep.oracle_compare(&p, &raw, 4).unwrap();
        prop_assert!(dev <= 1e-10, "deviation {dev} at q = {qv}");
        let e = element(&p, &x);
        let lhs = rep.evaluate_element(&e.adjoint()).unwrap();
        let rhs = rep.evaluate_element(&e).unwrap().adjoint();
        let cols = rep.columns_up_to(8 - 4).len();
        prop_assert!(max_abs(&(lhs - rhs).columns(0, cols).into_owned()) <= 1e-10);
        Ok(())
    })
}

fn morphism_laws(cases: u32) -> Result<(), String> {
    let p = suq2();
    let z = Scalar::zeta();
    check(cases, (-3i32..=3, -3i32..=3, raw_strategy(4, 3, 2)), |(m, n, x)| {
        let x = element(&p, &x);
        let (rm, rn) = (rho_scale(&p, &z, m).unwrap(), rho_scale(&p, &z, n).unwrap());
        let both = GenMorphism::compose(&rm, &rn).unwrap();
        eq(&both.apply(&x).unwrap(), &rho_scale(&p, &z, m + n).unwrap().apply(&x).unwrap(), "ρ_m ∘ ρ_n = ρ_{m+n}")
    })
}

pub fn laws() -> Vec<Law> {
    vec![
        Law { name: "scalar field and conjugation", run: scalar_field },
        Law { name: "ring laws", run: ring_laws },
        Law { name: "normal forms", run: normal_form_laws },
        Law { name: "involution", run: involution_laws },
        Law { name: "degrees", run: degree_laws },
        Law { name: "twisted leg commutation", run: twisted_commutation },
        Law { name: "Δ is a *-homomorphism", run: delta_multiplicative },
        Law { name: "α f(γ) = f(q̄γ) α", run: halmosh_monomials },
        Law { name: "render and parse", run: render_round_trip },
        Law { name: "numeric soundness", run: numeric_soundness },
        Law { name: "circle action", run: morphism_laws },
    ]
}
