//! The base presentations: SU_q(2), the quantum torus and U_q(2).

use std::sync::Arc;

use crate::scalars::Scalar;

use super::presentation::{Presentation, PresentationBuilder};
use super::AlgebraError;

fn invertible(q: &Scalar) -> Result<(Scalar, Scalar), AlgebraError> {
    let qi = q.inv().map_err(|_| AlgebraError::NonInvertibleParameter)?;
    let qbi = q.conj().inv().map_err(|_| AlgebraError::NonInvertibleParameter)?;
    Ok((qi, qbi))
}

fn with_suq2_rules(b: PresentationBuilder, q: &Scalar) -> Result<PresentationBuilder, AlgebraError> {
    let qb = q.conj();
    let (qi, qbi) = invertible(q)?;
    let one = Scalar::one;
    Ok(b.rule(&["g'", "g"], vec![(one(), vec!["g", "g'"])])
        .rule(&["a", "g"], vec![(qb.clone(), vec!["g", "a"])])
        .rule(&["a", "g'"], vec![(q.clone(), vec!["g'", "a"])])
        .rule(&["a'", "g"], vec![(qbi, vec!["g", "a'"])])
        .rule(&["a'", "g'"], vec![(qi, vec!["g'", "a'"])])
        .rule(&["a", "a'"], vec![(one(), vec![]), (q.mul(&qb).neg(), vec!["g", "g'"])])
        .rule(&["a'", "a"], vec![(one(), vec![]), (Scalar::from_int(-1), vec!["g", "g'"])]))
}

/// SU_q(2) with generators `g, g', a, a'` (γ, γ*, α, α*) in that normal
/// order. Normal words are `g^b g'^c a^k` or `g^b g'^c a'^k`.
pub fn suq2_presentation(q: &Scalar) -> Result<Arc<Presentation>, AlgebraError> {
    let b = PresentationBuilder::new("SU_q(2)").param(q.clone()).pair("g", 1, 0).pair("a", 0, 1);
    with_suq2_rules(b, q)?.build()
}

/// Two unitaries with `UV = ζVU`. Requires `ζ·conj(ζ) = 1`.
pub fn torus_presentation(zeta: &Scalar) -> Result<Arc<Presentation>, AlgebraError> {
    if !zeta.mul(&zeta.conj()).is_one() {
        return Err(AlgebraError::NonUnimodular(zeta.to_string()));
    }
    let zi = zeta.inv()?;
    let one = Scalar::one;
    PresentationBuilder::new("T^2_zeta")
        .pair("U", 0, 1)
        .pair("V", 0, 1)
        .rule(&["U", "U'"], vec![(one(), vec![])])
        .rule(&["U'", "U"], vec![(one(), vec![])])
        .rule(&["V", "V'"], vec![(one(), vec![])])
        .rule(&["V'", "V"], vec![(one(), vec![])])
        .rule(&["V", "U"], vec![(zi.clone(), vec!["U", "V"])])
        .rule(&["V'", "U"], vec![(zeta.clone(), vec!["U", "V'"])])
        .rule(&["V", "U'"], vec![(zeta.clone(), vec!["U'", "V"])])
        .rule(&["V'", "U'"], vec![(zi, vec!["U'", "V'"])])
        .build()
}

/// U_q(2): SU_q(2) plus a unitary `z` with `zαz* = α`, `zγz* = ζ⁻¹γ`.
/// Every generator has degree 0. Normal words are SU_q(2) normal words
/// followed by a power of `z` or of `z'`.
pub fn uq2_presentation(q: &Scalar) -> Result<Arc<Presentation>, AlgebraError> {
    let (_, qbi) = invertible(q)?;
    let zeta = q.mul(&qbi);
    let zi = zeta.inv()?;
    let one = Scalar::one;
    let b = PresentationBuilder::new("U_q(2)").param(q.clone()).pair("g", 0, 0).pair("a", 0, 1).pair("z", 0, 1);
    with_suq2_rules(b, q)?
        .rule(&["z", "z'"], vec![(one(), vec![])])
        .rule(&["z'", "z"], vec![(one(), vec![])])
        .rule(&["z", "a"], vec![(one(), vec!["a", "z"])])
        .rule(&["z", "a'"], vec![(one(), vec!["a'", "z"])])
        .rule(&["z'", "a"], vec![(one(), vec!["a", "z'"])])
        .rule(&["z'", "a'"], vec![(one(), vec!["a'", "z'"])])
        .rule(&["z", "g"], vec![(zi.clone(), vec!["g", "z"])])
        .rule(&["z", "g'"], vec![(zeta.clone(), vec!["g'", "z"])])
        .rule(&["z'", "g"], vec![(zeta, vec!["g", "z'"])])
        .rule(&["z'", "g'"], vec![(zi, vec!["g'", "z'"])])
        .build()
}

/// The free graded *-algebra on the given `(name, degree)` pairs: no
/// relations beyond the *-structure.
pub fn free_presentation(label: &str, gens: &[(&str, i32)]) -> Result<Arc<Presentation>, AlgebraError> {
    gens.iter()
        .fold(PresentationBuilder::new(label).greek(false), |b, (n, d)| b.pair(n, *d, 0))
        .build()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Element;

    fn nf(p: &Arc<Presentation>, names: &[&str]) -> String {
        Element::monomial(p, names).unwrap().to_string()
    }

    #[test]
    fn suq2_examples() {
        let p = suq2_presentation(&Scalar::q()).unwrap();
        assert!(p.validate().is_empty());
        assert_eq!(nf(&p, &["a'", "a"]), "1 - g*g'");
        assert_eq!(nf(&p, &["a", "g"]), "qb*g*a");
        assert_eq!(nf(&p, &["g", "a"]), "g*a");
        assert_eq!(nf(&p, &["g'", "g", "a", "a'"]), "g*g' - q*qb*g^2*g'^2");
        let sum = &Element::monomial(&p, &["a'", "a"]).unwrap() + &Element::monomial(&p, &["g'", "g"]).unwrap();
        assert_eq!(sum, Element::one(&p));
    }

    #[test]
    fn suq2_at_inverse_parameter() {
        let qi = Scalar::q().inv().unwrap();
        let p = suq2_presentation(&qi).unwrap();
        assert_eq!(nf(&p, &["a", "g"]), "(1/qb)*g*a");
        assert_eq!(nf(&p, &["a'", "g'"]), "q*g'*a'");
    }

    #[test]
    fn zero_parameter_is_rejected() {
        assert_eq!(suq2_presentation(&Scalar::zero()).unwrap_err(), AlgebraError::NonInvertibleParameter);
    }

    #[test]
    fn torus_examples() {
        let p = torus_presentation(&Scalar::zeta()).unwrap();
        assert!(p.validate().is_empty());
        let uv = Element::monomial(&p, &["U", "V"]).unwrap();
        let vu = Element::monomial(&p, &["V", "U"]).unwrap();
        assert_eq!(uv, vu.scale(&Scalar::zeta()));
        assert_eq!(nf(&p, &["U", "U'"]), "1");
        assert_eq!(nf(&p, &["V'", "U"]), "(q/qb)*U*V'");
        assert!(matches!(torus_presentation(&Scalar::q()), Err(AlgebraError::NonUnimodular(_))));
    }

    #[test]
    fn uq2_examples() {
        let p = uq2_presentation(&Scalar::q()).unwrap();
        assert!(p.validate().is_empty());
        assert_eq!(nf(&p, &["z", "g"]), "(qb/q)*g*z");
        assert_eq!(nf(&p, &["z", "z'"]), "1");
        assert_eq!(nf(&p, &["z", "a", "z'"]), "a");
        assert_eq!(nf(&p, &["z'", "a"]), "a*z'");
    }
}
