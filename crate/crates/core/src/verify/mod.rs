//! The named verification checks behind `suq2 verify`.

use std::sync::Arc;

use serde::Serialize;

use crate::algebra::{confluence_check, suq2_presentation, torus_presentation, uq2_presentation, AlgebraError, Degree, Element, Presentation};
use crate::braided::{embed, grading_flip, twisted_tensor};
use crate::exec::Exec;
use crate::morphisms::{
    cancellation_witness, delta_su, delta_uq2, iota1, iota2, phi_symmetry, q_inverse_iso, rho_scale, su2_into_uq2, zeta_of,
    GenMorphism,
};
use crate::repcalc::{
    constraint_derivation, corep_residual, fundamental, invariant_vector_check, invariant_vector_residual, rep_tensor, uq2_from_su2_rep,
    AlgMatrix, CorepMode, GradedSpace,
};
use crate::scalars::{Notation, Scalar};

pub const CHECK_IDS: [&str; 17] = [
    "unitary-u",
    "delta-hom",
    "delta-coassoc",
    "delta-equivariance",
    "cancellation-witness",
    "prop-8-44",
    "tensprod-corep",
    "invariant-vector",
    "invariance-constraints",
    "aq-symmetry",
    "q-inverse-iso",
    "halmosh-poly",
    "uq2-hom",
    "uq2-coassoc",
    "uq2-corep-bijection",
    "torus-relations",
    "su2-commutation",
];

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub exec: Exec,
    pub notation: Notation,
    /// Word length for the cancellation closure.
    pub cancel_len: usize,
    /// Total degree bound for the `α f(γ) = f(q̄γ) α` monomials.
    pub halmosh_max: u32,
    pub q: Scalar,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { exec: Exec::default(), notation: Notation::Ascii, cancel_len: 3, halmosh_max: 8, q: Scalar::q() }
    }
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub id: String,
    pub algebra: String,
    pub passed: bool,
    pub residuals: Vec<String>,
    pub anchor: String,
    pub notes: Vec<String>,
}

impl CheckReport {
    fn new(id: &str, algebra: &str, anchor: &str) -> CheckReport {
        CheckReport {
            id: id.into(),
            algebra: algebra.into(),
            passed: true,
            residuals: Vec::new(),
            anchor: anchor.into(),
            notes: Vec::new(),
        }
    }

    fn require(&mut self, ok: bool, what: impl Into<String>) {
        if !ok {
            self.passed = false;
            self.notes.push(format!("failed: {}", what.into()));
        }
    }

    /// Records residuals; the check fails if any is nonzero.
    fn residuals<'a>(&mut self, label: &str, xs: impl IntoIterator<Item = &'a Element>, n: Notation) {
        for x in xs {
            if !x.is_zero() {
                self.passed = false;
            }
            self.residuals.push(if label.is_empty() { x.render(n) } else { format!("{label}: {}", x.render(n)) });
        }
    }

    /// Records only the nonzero residuals.
    fn failures<'a>(&mut self, xs: impl IntoIterator<Item = (String, &'a Element)>, n: Notation) {
        for (label, x) in xs {
            if !x.is_zero() {
                self.passed = false;
                self.residuals.push(format!("{label}: {}", x.render(n)));
            }
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq)]
#[error("unknown-check: {0}")]
pub struct UnknownCheck(pub String);

pub fn anchor_of(id: &str) -> Option<&'static str> {
    Some(match id {
        "unitary-u" => "u = ((α, −qγ*), (γ, α*)) is unitary exactly when α, γ satisfy the SU_q(2) relations",
        "delta-hom" => "Δ extends to a homomorphism A → A ⊠_ζ A",
        "delta-coassoc" => "(Δ⊠id)∘Δ = (id⊠Δ)∘Δ, both equal to the triple product u₁u₂u₃",
        "delta-equivariance" => "Δ preserves degrees and commutes with the circle action",
        "cancellation-witness" => "j₁(u) = Δ(u)j₂(u)* and j₂(u) = j₁(u)*Δ(u), extended to monomials",
        "prop-8-44" => "j₁(x)j₂(y) = j₂(y)j₁(ρ_{ζ^{deg y}}(x)) for homogeneous y",
        "tensprod-corep" => "the braided tensor product of representations is a representation",
        "invariant-vector" => "u⊤u fixes e₀⊗e₁ − q e₁⊗e₀",
        "invariance-constraints" => "an invariant e₀⊗e₁ − q e₁⊗e₀ forces b = −qc*, d = a*, b* = −qζ̄c",
        "aq-symmetry" => "S(A_q) ≅ A_q̃ with q̃ = q̄⁻¹ as braided quantum groups",
        "q-inverse-iso" => "A_q ≅ A_{q⁻¹} via α ↦ α*, γ ↦ q⁻¹γ",
        "halmosh-poly" => "α f(γ) = f(q̄γ) α for polynomials f in γ and γ*",
        "uq2-hom" => "Δ_B is a homomorphism B → B⊗B",
        "uq2-coassoc" => "Δ_B is coassociative",
        "uq2-corep-bijection" => "v ↦ vU* takes representations of SU_q(2) to representations of U_q(2)",
        "torus-relations" => "the quantum torus UV = ζVU with unitary U, V",
        "su2-commutation" => "ι₁(x)ι₂(y) = ζ^{deg x·deg y} ι₂(y)ι₁(x) in B⊗B",
        _ => return None,
    })
}

fn algebra_of(id: &str) -> &'static str {
    match id {
        "unitary-u" | "invariance-constraints" | "halmosh-poly" | "q-inverse-iso" | "invariant-vector" => "suq2",
        "delta-hom" | "delta-equivariance" | "cancellation-witness" | "prop-8-44" | "tensprod-corep" => "suq2-tensor2",
        "delta-coassoc" => "suq2-tensor3",
        "aq-symmetry" => "suq2-flip",
        "torus-relations" => "torus",
        _ => "uq2",
    }
}

pub fn run_check(id: &str, opts: &VerifyOptions) -> Result<CheckReport, UnknownCheck> {
    let anchor = anchor_of(id).ok_or_else(|| UnknownCheck(id.to_string()))?;
    let mut rep = CheckReport::new(id, algebra_of(id), anchor);
    let outcome = match id {
        "unitary-u" => unitary_u(&mut rep, opts),
        "delta-hom" => delta_hom(&mut rep, opts),
        "delta-coassoc" => delta_coassoc(&mut rep, opts),
        "delta-equivariance" => delta_equivariance(&mut rep, opts),
        "cancellation-witness" => cancellation(&mut rep, opts),
        "prop-8-44" => leg_commutation(&mut rep, opts),
        "tensprod-corep" => tensprod_corep(&mut rep, opts),
        "invariant-vector" => invariant_vector(&mut rep, opts),
        "invariance-constraints" => invariance_constraints(&mut rep, opts),
        "aq-symmetry" => aq_symmetry(&mut rep, opts),
        "q-inverse-iso" => q_inverse(&mut rep, opts),
        "halmosh-poly" => halmosh(&mut rep, opts),
        "uq2-hom" => uq2_hom(&mut rep, opts),
        "uq2-coassoc" => uq2_coassoc(&mut rep, opts),
        "uq2-corep-bijection" => uq2_corep(&mut rep, opts),
        "torus-relations" => torus(&mut rep, opts),
        "su2-commutation" => su2_commutation(&mut rep, opts),
        _ => unreachable!(),
    };
    if let Err(e) = outcome {
        rep.passed = false;
        rep.notes.push(format!("error: {e}"));
    }
    Ok(rep)
}

/// All checks, ordered as [`CHECK_IDS`].
pub fn run_all(opts: &VerifyOptions) -> Vec<CheckReport> {
    opts.exec.map(&CHECK_IDS, |id| run_check(id, opts).expect("known id"))
}

type Outcome = Result<(), AlgebraError>;

fn verdict_residuals(rep: &mut CheckReport, m: &GenMorphism, n: Notation) {
    match m.verdict() {
        Some(v) => {
            for r in &v.residuals {
                rep.residuals.push(format!("{}: {}", r.rule, r.residual.render(n)));
            }
            rep.require(v.passed, format!("{} is well defined", m.name()));
        }
        None => rep.require(false, format!("{} was not checked", m.name())),
    }
}

fn matrix_residuals(rep: &mut CheckReport, label: &str, m: &AlgMatrix, n: Notation) {
    let d = m.dim();
    for r in 0..d {
        for c in 0..d {
            let x = m.get(r, c);
            if !x.is_zero() {
                rep.passed = false;
            }
            rep.residuals.push(format!("{label}[{r}{c}]: {}", x.render(n)));
        }
    }
}

/// Images of every generator under two morphisms, compared.
fn compare_on_generators(rep: &mut CheckReport, f: &GenMorphism, g: &GenMorphism, n: Notation) -> Outcome {
    let diffs = f
        .images()
        .iter()
        .zip(g.images())
        .zip(f.source().generators())
        .map(|((x, y), gen)| Ok((gen.name.clone(), x.try_sub(y)?)))
        .collect::<Result<Vec<_>, AlgebraError>>()?;
    for (name, d) in &diffs {
        if !d.is_zero() {
            rep.passed = false;
        }
        rep.residuals.push(format!("{} vs {} on {name}: {}", f.name(), g.name(), d.render(n)));
    }
    Ok(())
}

fn monomials(p: &Arc<Presentation>, names: &[&str], max_len: usize) -> Result<Vec<Element>, AlgebraError> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<&str>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in names {
                let mut v = w.clone();
                v.push(l);
                out.push(Element::monomial(p, &v)?);
                next.push(v);
            }
        }
        layer = next;
    }
    Ok(out)
}

fn hdeg(x: &Element) -> i32 {
    match x.degree() {
        Degree::Homogeneous(d) => d,
        _ => 0,
    }
}

const GENS: [&str; 4] = ["a", "g", "a'", "g'"];

fn unitary_u(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let u = fundamental(&a, GradedSpace::new(vec![1, 0]))?;
    let (r1, r2) = u.unitarity_residuals()?;
    matrix_residuals(rep, "uu*-1", &r1, o.notation);
    matrix_residuals(rep, "u*u-1", &r2, o.notation);
    Ok(())
}

fn delta_hom(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let d = delta_su(&a)?;
    verdict_residuals(rep, &d, o.notation);
    Ok(())
}

/// Generator `x` as `k·u[r][c]`.
fn as_u_entry(name: &str, q: &Scalar) -> Result<(usize, usize, Scalar), AlgebraError> {
    Ok(match name {
        "a" => (0, 0, Scalar::one()),
        "g" => (1, 0, Scalar::one()),
        "a'" => (1, 1, Scalar::one()),
        "g'" => (0, 1, q.inv()?.neg()),
        other => return Err(AlgebraError::UnknownGenerator(other.into())),
    })
}

fn delta_coassoc(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let d = delta_su(&a)?;
    let z = zeta_of(&a)?;
    let id = GenMorphism::identity(&a);
    let left = GenMorphism::compose(&GenMorphism::tensor(&d, &id, &z)?, &d)?;
    let right = GenMorphism::compose(&GenMorphism::tensor(&id, &d, &z)?, &d)?;
    compare_on_generators(rep, &left, &right, o.notation)?;

    let aaa = left.target().clone();
    let u = fundamental(&a, GradedSpace::new(vec![1, 0]))?;
    let legs = [u.embed(&aaa, 1)?, u.embed(&aaa, 2)?, u.embed(&aaa, 3)?];
    let triple = legs[0].mat_mul(&legs[1])?.mat_mul(&legs[2])?;
    for name in GENS {
        let (r, c, k) = as_u_entry(name, &o.q)?;
        let diff = left.image_of(name)?.try_sub(&triple.get(r, c).scale(&k))?;
        rep.residuals(&format!("triple product on {name}"), [&diff], o.notation);
    }
    Ok(())
}

fn delta_equivariance(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let d = delta_su(&a)?;
    let z = zeta_of(&a)?;
    rep.require(d.is_equivariant(), "Δ maps generators to homogeneous elements of the same degree");
    for m in [-2, -1, 1, 3] {
        let rho = rho_scale(&a, &z, m)?;
        let left = GenMorphism::compose(&d, &rho)?;
        let right = GenMorphism::compose(&GenMorphism::tensor(&rho, &rho, &z)?, &d)?;
        compare_on_generators(rep, &left, &right, o.notation)?;
    }
    Ok(())
}

fn cancellation(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let d = delta_su(&a)?;
    let r = cancellation_witness(&d, o.cancel_len, o.exec)?;
    rep.residuals("j1(u) - D(u)j2(u)*", &r.dmm1, o.notation);
    rep.residuals("j2(u) - j1(u)*D(u)", &r.dmm2, o.notation);
    rep.notes.push(format!("closure checked on {} monomials up to length {}", r.words_checked, r.max_len));
    for f in &r.failures {
        rep.require(false, f.clone());
    }
    Ok(())
}

fn leg_commutation(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let z = zeta_of(&a)?;
    let aa = twisted_tensor(&a, &a, &z)?;
    let mut xs = monomials(&a, &GENS, 2)?;
    let mixed = xs[..4].iter().try_fold(Element::zero(&a), |acc, x| acc.try_add(x))?;
    xs.push(mixed.try_add(&Element::monomial(&a, &["g", "g"])?)?);
    let mut checked = 0;
    let mut diffs = Vec::new();
    for x in &xs {
        for y in &xs {
            let lhs = embed(&aa, 1, x)?.try_mul(&embed(&aa, 2, y)?)?;
            if let Degree::Homogeneous(dy) = y.degree() {
                let rx = rho_scale(&a, &z, dy)?.apply(x)?;
                let rhs = embed(&aa, 2, y)?.try_mul(&embed(&aa, 1, &rx)?)?;
                diffs.push((format!("j1({x}) j2({y})"), lhs.try_sub(&rhs)?));
                checked += 1;
            }
            if let Degree::Homogeneous(dx) = x.degree() {
                let ry = rho_scale(&a, &z, dx)?.apply(y)?;
                let rhs = embed(&aa, 2, &ry)?.try_mul(&embed(&aa, 1, x)?)?;
                diffs.push((format!("j1({x}) j2({y}), moving j1"), lhs.try_sub(&rhs)?));
                checked += 1;
            }
        }
    }
    rep.failures(diffs.iter().map(|(l, d)| (l.clone(), d)), o.notation);
    rep.notes.push(format!("{checked} commutations checked"));
    Ok(())
}

fn tensprod_corep(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let d = delta_su(&a)?;
    let z = zeta_of(&a)?;
    for degs in [vec![0, -1], vec![1, 0]] {
        let u = fundamental(&a, GradedSpace::new(degs.clone()))?;
        let uu = rep_tensor(&u, &u, &z)?;
        rep.require(uu.is_t_invariant(), format!("u⊤u T-invariant for grading {degs:?}"));
        rep.require(uu.is_unitary()?, format!("u⊤u unitary for grading {degs:?}"));
        let r = corep_residual(&uu, &d, CorepMode::Braided)?;
        matrix_residuals(rep, &format!("corep {degs:?}"), &r, o.notation);
    }
    Ok(())
}

fn invariant_vector(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let z = zeta_of(&a)?;
    let u = fundamental(&a, GradedSpace::new(vec![0, -1]))?;
    let uu = rep_tensor(&u, &u, &z)?;
    let xi = [Scalar::zero(), Scalar::one(), o.q.neg(), Scalar::zero()];
    let res = invariant_vector_residual(&uu, &xi)?;
    rep.residuals("v(xi) - xi", &res, o.notation);
    let perturbed = [Scalar::zero(), Scalar::one(), o.q.mul(&Scalar::from_int(-2)), Scalar::zero()];
    rep.require(!invariant_vector_check(&uu, &perturbed)?, "e0⊗e1 − 2q e1⊗e0 is not invariant");
    let bad = invariant_vector_residual(&uu, &perturbed)?;
    rep.notes.push(format!(
        "perturbed vector residual: [{}]",
        bad.iter().map(|x| x.render(o.notation)).collect::<Vec<_>>().join(", ")
    ));
    Ok(())
}

fn invariance_constraints(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let r = constraint_derivation(&o.q)?;
    rep.residuals = r.equations.clone();
    rep.require(r.matches_expected, "expansions match b = −qc*, d = a*, b* = −qζ̄c");
    rep.require(r.consistency.is_zero(), format!("qζ̄ − q̄ = {}", r.consistency));
    rep.require(r.degenerate_trivial, "b = c = 0 leaves only the diagonal equations");
    Ok(())
}

fn aq_symmetry(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let s = grading_flip(&a);
    let qt = o.q.conj().inv()?;
    let at = suq2_presentation(&qt)?;
    let z = zeta_of(&a)?;
    let phi = phi_symmetry(&s, &at)?;
    verdict_residuals(rep, &phi, o.notation);
    rep.require(phi.is_equivariant(), "φ reverses degrees");

    let inv = GenMorphism::new(
        "phi_inv",
        &at,
        &s,
        vec![("a", Element::named(&s, "a'")?), ("g", Element::named(&s, "g'")?.scale(&o.q))],
    )?;
    inv.check_welldefined(o.exec)?;
    rep.require(inv.is_verified(), "φ⁻¹ is well defined");
    compare_on_generators(rep, &GenMorphism::compose(&inv, &phi)?, &GenMorphism::identity(&s), o.notation)?;
    compare_on_generators(rep, &GenMorphism::compose(&phi, &inv)?, &GenMorphism::identity(&at), o.notation)?;

    let ds = delta_su(&s)?;
    let dt = delta_su(&at)?;
    let left = GenMorphism::compose(&GenMorphism::tensor(&phi, &phi, &z)?, &ds)?;
    let right = GenMorphism::compose(&dt, &phi)?;
    compare_on_generators(rep, &left, &right, o.notation)
}

fn q_inverse(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let ai = suq2_presentation(&o.q.inv()?)?;
    let f = q_inverse_iso(&a, &ai)?;
    let g = q_inverse_iso(&ai, &a)?;
    verdict_residuals(rep, &f, o.notation);
    verdict_residuals(rep, &g, o.notation);
    compare_on_generators(rep, &GenMorphism::compose(&g, &f)?, &GenMorphism::identity(&a), o.notation)?;
    compare_on_generators(rep, &GenMorphism::compose(&f, &g)?, &GenMorphism::identity(&ai), o.notation)
}

fn halmosh(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let alpha = Element::named(&a, "a")?;
    let g = Element::named(&a, "g")?;
    let gs = Element::named(&a, "g'")?;
    let qb = o.q.conj();
    let mut diffs = Vec::new();
    for m in 0..=o.halmosh_max {
        for l in 0..=(o.halmosh_max - m) {
            let f = g.pow(m)?.try_mul(&gs.pow(l)?)?;
            let shifted = f.scale(&qb.pow(m as i32).mul(&o.q.pow(l as i32)));
            let d = alpha.try_mul(&f)?.try_sub(&shifted.try_mul(&alpha)?)?;
            diffs.push((format!("g^{m} g'^{l}"), d));
        }
    }
    rep.failures(diffs.iter().map(|(l, d)| (l.clone(), d)), o.notation);
    rep.notes.push(format!("{} monomials checked", diffs.len()));
    Ok(())
}

fn uq2_hom(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let b = uq2_presentation(&o.q)?;
    verdict_residuals(rep, &delta_uq2(&b)?, o.notation);
    Ok(())
}

fn uq2_coassoc(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let b = uq2_presentation(&o.q)?;
    let d = delta_uq2(&b)?;
    let id = GenMorphism::identity(&b);
    let one = Scalar::one();
    let left = GenMorphism::compose(&GenMorphism::tensor(&d, &id, &one)?, &d)?;
    let right = GenMorphism::compose(&GenMorphism::tensor(&id, &d, &one)?, &d)?;
    compare_on_generators(rep, &left, &right, o.notation)
}

fn uq2_corep(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let b = uq2_presentation(&o.q)?;
    let db = delta_uq2(&b)?;
    let include = su2_into_uq2(&a, &b)?;
    let z = zeta_of(&a)?;
    let u = fundamental(&a, GradedSpace::new(vec![1, 0]))?;
    let cases = [
        ("trivial", AlgMatrix::identity(&a, GradedSpace::new(vec![1]))),
        ("fundamental", u.clone()),
        ("tensor square", rep_tensor(&u, &u, &z)?),
    ];
    for (label, v) in cases {
        let r = uq2_from_su2_rep(&v.map(&include)?, &db)?;
        rep.require(r.unitary, format!("{label}: vU* unitary"));
        rep.require(r.corep, format!("{label}: vU* is a corepresentation of Δ_B"));
        rep.require(r.roundtrip, format!("{label}: vU*·U = v"));
        rep.require(r.torus_part_corep, format!("{label}: U is a corepresentation"));
        let rows = r.u.render_rows(o.notation);
        rep.residuals.push(format!("{label}: {}", rows.iter().map(|row| row.join(", ")).collect::<Vec<_>>().join("; ")));
    }
    Ok(())
}

fn torus(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let zeta = Scalar::zeta();
    let t = torus_presentation(&zeta)?;
    let e = |names: &[&str]| Element::monomial(&t, names);
    let one = Element::one(&t);
    let rels = [
        ("UV - zeta*VU", e(&["U", "V"])?.try_sub(&e(&["V", "U"])?.scale(&zeta))?),
        ("U*U - 1", e(&["U'", "U"])?.try_sub(&one)?),
        ("UU* - 1", e(&["U", "U'"])?.try_sub(&one)?),
        ("V*V - 1", e(&["V'", "V"])?.try_sub(&one)?),
        ("VV* - 1", e(&["V", "V'"])?.try_sub(&one)?),
    ];
    for (label, d) in &rels {
        rep.residuals(label, [d], o.notation);
    }
    let c = confluence_check(&t, 4, 100, 1, o.exec);
    rep.require(c.passed(), "torus rewriting system is confluent");
    rep.require(
        matches!(torus_presentation(&Scalar::from_int(2)), Err(AlgebraError::NonUnimodular(_))),
        "ζ = 2 is rejected",
    );
    Ok(())
}

fn su2_commutation(rep: &mut CheckReport, o: &VerifyOptions) -> Outcome {
    let a = suq2_presentation(&o.q)?;
    let b = uq2_presentation(&o.q)?;
    let bb = twisted_tensor(&b, &b, &Scalar::one())?;
    let (i1, i2) = (iota1(&a, &bb)?, iota2(&a, &bb)?);
    let z = zeta_of(&a)?;
    let xs = monomials(&a, &GENS, 2)?;
    let mut diffs = Vec::new();
    for x in &xs {
        for y in &xs {
            let lhs = i1.apply(x)?.try_mul(&i2.apply(y)?)?;
            let rhs = i2.apply(y)?.try_mul(&i1.apply(x)?)?.scale(&z.pow(hdeg(x) * hdeg(y)));
            diffs.push((format!("i1({x}) i2({y})"), lhs.try_sub(&rhs)?));
        }
    }
    rep.failures(diffs.iter().map(|(l, d)| (l.clone(), d)), o.notation);
    rep.notes.push(format!("{} pairs checked; the right-hand side uses ι₂(y)ι₁(x)", diffs.len()));
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn every_check_passes() {
        let opts = VerifyOptions { cancel_len: 2, ..Default::default() };
        for r in run_all(&opts) {
            assert!(r.passed, "{r:#?}");
        }
    }

    #[test]
    fn unknown_id() {
        assert_eq!(run_check("nope", &VerifyOptions::default()).unwrap_err(), UnknownCheck("nope".into()));
    }

    #[test]
    fn anchors_exist() {
        for id in CHECK_IDS {
            assert!(anchor_of(id).is_some());
        }
    }
}
