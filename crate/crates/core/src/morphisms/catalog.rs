//! The named homomorphisms. Each constructor returns a morphism whose
//! well-definedness verdict has already been computed.

use std::sync::Arc;

use crate::algebra::{AlgebraError, Element, Presentation};
use crate::braided::{leg_generator, twisted_tensor};
use crate::exec::Exec;
use crate::scalars::Scalar;

use super::GenMorphism;

/// `ζ = q/q̄` for the presentation's parameter.
pub fn zeta_of(p: &Presentation) -> Result<Scalar, AlgebraError> {
    let q = p.param().ok_or(AlgebraError::NonInvertibleParameter)?;
    q.checked_div(&q.conj()).map_err(|_| AlgebraError::NonInvertibleParameter)
}

fn param(p: &Presentation) -> Result<Scalar, AlgebraError> {
    p.param().cloned().ok_or(AlgebraError::NonInvertibleParameter)
}

fn verified(m: GenMorphism) -> Result<GenMorphism, AlgebraError> {
    m.check_welldefined(Exec::default())?;
    Ok(m)
}

/// Δ: A → A ⊠_ζ A with
/// `α ↦ j₁(α)j₂(α) − q j₁(γ)*j₂(γ)`, `γ ↦ j₁(γ)j₂(α) + j₁(α)*j₂(γ)`.
/// Works unchanged on the grading flip of A.
pub fn delta_su(a: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    let q = param(a)?;
    let aa = twisted_tensor(a, a, &zeta_of(a)?)?;
    let j = |leg, n| leg_generator(&aa, leg, n);
    let alpha = &(&j(1, "a")? * &j(2, "a")?) - &(&j(1, "g'")? * &j(2, "g")?).scale(&q);
    let gamma = &(&j(1, "g")? * &j(2, "a")?) + &(&j(1, "a'")? * &j(2, "g")?);
    verified(GenMorphism::new("delta", a, &aa, vec![("a", alpha), ("g", gamma)])?)
}

/// Δ_B: B → B ⊗ B with `z ↦ z⊗z`, `α ↦ α⊗α − qγ*z⊗γ`,
/// `γ ↦ γ⊗α + α*z⊗γ`.
pub fn delta_uq2(b: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    let q = param(b)?;
    let bb = twisted_tensor(b, b, &Scalar::one())?;
    let j = |leg, n| leg_generator(&bb, leg, n);
    let z = &j(1, "z")? * &j(2, "z")?;
    let alpha = &(&j(1, "a")? * &j(2, "a")?) - &(&(&j(1, "g'")? * &j(1, "z")?) * &j(2, "g")?).scale(&q);
    let gamma = &(&j(1, "g")? * &j(2, "a")?) + &(&(&j(1, "a'")? * &j(1, "z")?) * &j(2, "g")?);
    verified(GenMorphism::new("delta_B", b, &bb, vec![("z", z), ("a", alpha), ("g", gamma)])?)
}

fn check_same_param(a: &Presentation, b: &Presentation) -> Result<(), AlgebraError> {
    if a.param() != b.param() {
        return Err(AlgebraError::PresentationMismatch(a.label().into(), b.label().into()));
    }
    Ok(())
}

/// ι₁: A → B⊗B, `α ↦ α⊗1`, `γ ↦ γ⊗1`.
pub fn iota1(a: &Arc<Presentation>, bb: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    check_same_param(a, bb)?;
    let j = |n| leg_generator(bb, 1, n);
    verified(GenMorphism::new("iota1", a, bb, vec![("a", j("a")?), ("g", j("g")?)])?)
}

/// ι₂: A → B⊗B, `α ↦ 1⊗α`, `γ ↦ z⊗γ`.
pub fn iota2(a: &Arc<Presentation>, bb: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    check_same_param(a, bb)?;
    let j = |leg, n| leg_generator(bb, leg, n);
    let gamma = &j(1, "z")? * &j(2, "g")?;
    verified(GenMorphism::new("iota2", a, bb, vec![("a", j(2, "a")?), ("g", gamma)])?)
}

/// A → B, `α ↦ α`, `γ ↦ γ`.
pub fn su2_into_uq2(a: &Arc<Presentation>, b: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    check_same_param(a, b)?;
    let g = |n| Element::named(b, n);
    verified(GenMorphism::new("include", a, b, vec![("a", g("a")?), ("g", g("g")?)])?)
}

/// A_q → A_{q⁻¹}: `α ↦ α'*`, `γ ↦ q⁻¹γ'`.
pub fn q_inverse_iso(src: &Arc<Presentation>, tgt: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    let q = param(src)?;
    let qi = q.inv()?;
    if param(tgt)? != qi {
        return Err(AlgebraError::PresentationMismatch(src.label().into(), tgt.label().into()));
    }
    let alpha = Element::named(tgt, "a'")?;
    let gamma = Element::named(tgt, "g")?.scale(&qi);
    verified(GenMorphism::new("q_inverse_iso", src, tgt, vec![("a", alpha), ("g", gamma)])?)
}

/// S(A_q) → A_{q̃} with `q̃ = q̄⁻¹`: `α ↦ α̃*`, `γ ↦ q̃ γ̃*`.
pub fn phi_symmetry(src: &Arc<Presentation>, tgt: &Arc<Presentation>) -> Result<GenMorphism, AlgebraError> {
    let q = param(src)?;
    let qt = q.conj().inv()?;
    if param(tgt)? != qt {
        return Err(AlgebraError::PresentationMismatch(src.label().into(), tgt.label().into()));
    }
    let alpha = Element::named(tgt, "a'")?;
    let gamma = Element::named(tgt, "g'")?.scale(&qt);
    verified(GenMorphism::new("phi", src, tgt, vec![("a", alpha), ("g", gamma)])?)
}

/// The degree automorphism `x ↦ ζ^{m·deg x} x`.
pub fn rho_scale(p: &Arc<Presentation>, zeta: &Scalar, m: i32) -> Result<GenMorphism, AlgebraError> {
    let assignments: Vec<(&str, Element)> = p
        .generators()
        .iter()
        .enumerate()
        .filter(|(i, g)| g.adjoint as usize >= *i)
        .map(|(i, g)| (g.name.as_str(), Element::generator(p, i as u16).scale(&zeta.pow(m * g.degree))))
        .collect();
    verified(GenMorphism::new(format!("rho^{m}"), p, p, assignments)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{suq2_presentation, uq2_presentation};
    use crate::braided::grading_flip;

    #[test]
    fn delta_images() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let d = delta_su(&a).unwrap();
        assert!(d.is_verified(), "{:?}", d.verdict().unwrap().failures(Default::default()));
        assert!(d.is_equivariant());
        let alpha = d.apply(&Element::named(&a, "a").unwrap()).unwrap();
        assert_eq!(alpha.to_string(), "-q*j1(g')*j2(g) + j1(a)*j2(a)");
        let gs = d.apply(&Element::named(&a, "g'").unwrap()).unwrap();
        assert_eq!(gs.to_string(), "j1(g')*j2(a') + j1(a)*j2(g')");
    }

    #[test]
    fn catalog_is_well_defined() {
        let q = Scalar::q();
        let a = suq2_presentation(&q).unwrap();
        let b = uq2_presentation(&q).unwrap();
        let bb = twisted_tensor(&b, &b, &Scalar::one()).unwrap();
        assert!(delta_uq2(&b).unwrap().is_verified());
        assert!(iota1(&a, &bb).unwrap().is_verified());
        assert!(iota2(&a, &bb).unwrap().is_verified());
        let ai = suq2_presentation(&q.inv().unwrap()).unwrap();
        assert!(q_inverse_iso(&a, &ai).unwrap().is_verified());
        let at = suq2_presentation(&q.conj().inv().unwrap()).unwrap();
        let phi = phi_symmetry(&grading_flip(&a), &at).unwrap();
        assert!(phi.is_verified(), "{:?}", phi.verdict().unwrap().failures(Default::default()));
        assert!(phi.is_equivariant());
        for m in [-2, 1, 3] {
            let r = rho_scale(&a, &Scalar::zeta(), m).unwrap();
            assert!(r.is_verified());
            assert!(r.is_equivariant());
        }
    }

    #[test]
    fn iota2_of_gamma() {
        let q = Scalar::q();
        let a = suq2_presentation(&q).unwrap();
        let b = uq2_presentation(&q).unwrap();
        let bb = twisted_tensor(&b, &b, &Scalar::one()).unwrap();
        let i2 = iota2(&a, &bb).unwrap();
        assert_eq!(i2.apply(&Element::named(&a, "g").unwrap()).unwrap().to_string(), "j1(z)*j2(g)");
    }
}
