//! Homomorphisms given by generator images.
//!
//! A [`GenMorphism`] extends its generator images multiplicatively and
//! coefficient-linearly. Whether the extension is well defined is decided by
//! [`GenMorphism::check_welldefined`], which pushes every source rule through
//! the images; [`GenMorphism::apply`] refuses to run before that check has
//! passed.

mod cancellation;
mod catalog;

use std::fmt;
use std::sync::{Arc, OnceLock};

use crate::algebra::{AlgebraError, Degree, Element, Presentation, Word};
use crate::braided::{embed_block, twisted_tensor};
use crate::exec::Exec;
use crate::scalars::{Notation, Scalar};

pub use cancellation::{cancellation_witness, r_witness, s_witness, CancellationReport, ClosureTerm};
pub use catalog::{delta_su, delta_uq2, iota1, iota2, phi_symmetry, q_inverse_iso, rho_scale, su2_into_uq2, zeta_of};

/// Residual of one source rule: `image(lhs) − image(rhs)`.
#[derive(Clone, Debug)]
pub struct RuleResidual {
    pub rule: String,
    pub residual: Element,
}

#[derive(Clone, Debug)]
pub struct Verdict {
    pub passed: bool,
    pub residuals: Vec<RuleResidual>,
}

impl Verdict {
    /// Rendered non-zero residuals.
    pub fn failures(&self, notation: Notation) -> Vec<String> {
        self.residuals
            .iter()
            .filter(|r| !r.residual.is_zero())
            .map(|r| format!("{}: {}", r.rule, r.residual.render(notation)))
            .collect()
    }
}

#[derive(Clone)]
pub struct GenMorphism {
    name: String,
    source: Arc<Presentation>,
    target: Arc<Presentation>,
    images: Vec<Element>,
    verdict: OnceLock<Verdict>,
}

impl fmt::Debug for GenMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut d = f.debug_struct("GenMorphism");
        d.field("name", &self.name).field("source", &self.source.label()).field("target", &self.target.label());
        for (g, img) in self.source.generators().iter().zip(&self.images) {
            d.field(&g.name, &img.to_string());
        }
        d.finish()
    }
}

impl GenMorphism {
    /// Images are given for some generators by name; the partner of each
    /// assigned generator is forced to the adjoint image.
    pub fn new(
        name: impl Into<String>,
        source: &Arc<Presentation>,
        target: &Arc<Presentation>,
        assignments: Vec<(&str, Element)>,
    ) -> Result<GenMorphism, AlgebraError> {
        let n = source.generators().len();
        let mut images: Vec<Option<Element>> = vec![None; n];
        for (gname, img) in assignments {
            let g = source.generator(gname).ok_or_else(|| AlgebraError::UnknownGenerator(gname.to_string()))?;
            if !img.presentation().same_as(target) {
                return Err(AlgebraError::PresentationMismatch(img.presentation().label().into(), target.label().into()));
            }
            images[g as usize] = Some(img);
        }
        for g in 0..n {
            let partner = source.adjoint_of(g as u16) as usize;
            if images[g].is_none() {
                if let Some(img) = images[partner].clone() {
                    images[g] = Some(img.try_adjoint()?);
                }
            } else if let (Some(a), Some(b)) = (&images[g], &images[partner]) {
                if a.try_adjoint()? != *b {
                    return Err(AlgebraError::InvalidRule(format!(
                        "images of {} and its adjoint are not adjoint",
                        source.generators()[g].name
                    )));
                }
            }
        }
        let images = images
            .into_iter()
            .enumerate()
            .map(|(g, img)| img.ok_or_else(|| AlgebraError::UnknownGenerator(format!("no image for {}", source.generators()[g].name))))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(GenMorphism { name: name.into(), source: source.clone(), target: target.clone(), images, verdict: OnceLock::new() })
    }

    pub fn identity(p: &Arc<Presentation>) -> GenMorphism {
        let images = (0..p.generators().len()).map(|g| Element::generator(p, g as u16)).collect();
        let m = GenMorphism { name: "id".into(), source: p.clone(), target: p.clone(), images, verdict: OnceLock::new() };
        let _ = m.verdict.set(Verdict { passed: true, residuals: Vec::new() });
        m
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn renamed(mut self, name: impl Into<String>) -> GenMorphism {
        self.name = name.into();
        self
    }

    pub fn source(&self) -> &Arc<Presentation> {
        &self.source
    }

    pub fn target(&self) -> &Arc<Presentation> {
        &self.target
    }

    pub fn images(&self) -> &[Element] {
        &self.images
    }

    pub fn image_of(&self, name: &str) -> Result<&Element, AlgebraError> {
        let g = self.source.generator(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(&self.images[g as usize])
    }

    fn image_of_word(&self, w: &Word) -> Result<Element, AlgebraError> {
        let mut acc = Element::one(&self.target);
        for &g in w.letters() {
            acc = acc.try_mul(&self.images[g as usize])?;
        }
        Ok(acc)
    }

    fn image_of_terms<'a, I>(&self, terms: I) -> Result<Element, AlgebraError>
    where
        I: IntoIterator<Item = (&'a Word, &'a Scalar)>,
    {
        let mut acc = Element::zero(&self.target);
        for (w, c) in terms {
            acc = acc.try_add(&self.image_of_word(w)?.scale(c))?;
        }
        Ok(acc)
    }

    /// Extends the images without consulting the well-definedness verdict.
    pub fn apply_unchecked(&self, x: &Element) -> Result<Element, AlgebraError> {
        if !x.presentation().same_as(&self.source) {
            return Err(AlgebraError::PresentationMismatch(x.presentation().label().into(), self.source.label().into()));
        }
        self.image_of_terms(x.terms())
    }

    pub fn apply(&self, x: &Element) -> Result<Element, AlgebraError> {
        match self.verdict.get() {
            Some(v) if v.passed => self.apply_unchecked(x),
            _ => Err(AlgebraError::UnverifiedMorphism(self.name.clone())),
        }
    }

    /// Pushes every source rule through the images. The verdict is computed
    /// once and cached.
    pub fn check_welldefined(&self, exec: Exec) -> Result<&Verdict, AlgebraError> {
        if let Some(v) = self.verdict.get() {
            return Ok(v);
        }
        let rules = self.source.rules();
        let results = exec.map(rules, |r| -> Result<RuleResidual, AlgebraError> {
            let lhs = self.image_of_word(&r.lhs)?;
            let rhs = self.image_of_terms(r.rhs.iter().map(|(w, c)| (w, c)))?;
            let rendered_rhs = Element::from_raw(&self.source, r.rhs.iter().cloned())
                .map(|e| e.to_string())
                .unwrap_or_default();
            Ok(RuleResidual {
                rule: format!("{} -> {}", self.source.render_word(&r.lhs, Notation::Ascii), rendered_rhs),
                residual: lhs.try_sub(&rhs)?,
            })
        });
        let residuals = results.into_iter().collect::<Result<Vec<_>, _>>()?;
        let passed = residuals.iter().all(|r| r.residual.is_zero());
        let _ = self.verdict.set(Verdict { passed, residuals });
        Ok(self.verdict.get().expect("verdict just set"))
    }

    pub fn verdict(&self) -> Option<&Verdict> {
        self.verdict.get()
    }

    pub fn is_verified(&self) -> bool {
        self.verdict.get().is_some_and(|v| v.passed)
    }

    /// Every image is homogeneous of its generator's degree (zero allowed).
    pub fn is_equivariant(&self) -> bool {
        self.source.generators().iter().zip(&self.images).all(|(g, img)| match img.degree() {
            Degree::Zero => true,
            Degree::Homogeneous(d) => d == g.degree,
            Degree::Inhomogeneous => false,
        })
    }

    pub fn equal_on_generators(&self, other: &GenMorphism) -> Result<bool, AlgebraError> {
        if !self.source.same_as(&other.source) || !self.target.same_as(&other.target) {
            return Err(AlgebraError::PresentationMismatch(
                format!("{} -> {}", self.source.label(), self.target.label()),
                format!("{} -> {}", other.source.label(), other.target.label()),
            ));
        }
        Ok(self.images == other.images)
    }

    /// `outer ∘ inner`. Verified when both factors are.
    pub fn compose(outer: &GenMorphism, inner: &GenMorphism) -> Result<GenMorphism, AlgebraError> {
        if !inner.target.same_as(&outer.source) {
            return Err(AlgebraError::PresentationMismatch(inner.target.label().into(), outer.source.label().into()));
        }
        let images = inner.images.iter().map(|x| outer.apply_unchecked(x)).collect::<Result<Vec<_>, _>>()?;
        let m = GenMorphism {
            name: format!("{}∘{}", outer.name, inner.name),
            source: inner.source.clone(),
            target: outer.target.clone(),
            images,
            verdict: OnceLock::new(),
        };
        if outer.is_verified() && inner.is_verified() {
            let _ = m.verdict.set(Verdict { passed: true, residuals: Vec::new() });
        }
        Ok(m)
    }

    /// `π₁ ⊠_ζ π₂`: a leg-1 generator `g` goes to `π₁(g)` placed on the first
    /// legs of the target product, a leg-2 generator to `π₂(g)` on the
    /// remaining legs. Both inputs must be degree-preserving.
    pub fn tensor(pi1: &GenMorphism, pi2: &GenMorphism, zeta: &Scalar) -> Result<GenMorphism, AlgebraError> {
        for pi in [pi1, pi2] {
            if !pi.is_equivariant() {
                return Err(AlgebraError::NotEquivariant(pi.name.clone()));
            }
        }
        let source = twisted_tensor(&pi1.source, &pi2.source, zeta)?;
        let target = twisted_tensor(&pi1.target, &pi2.target, zeta)?;
        let second = pi1.target.num_legs() + 1;
        let mut images = Vec::with_capacity(source.generators().len());
        for img in &pi1.images {
            images.push(embed_block(&target, 1, img)?);
        }
        for img in &pi2.images {
            images.push(embed_block(&target, second, img)?);
        }
        let m = GenMorphism {
            name: format!("({}⊠{})", pi1.name, pi2.name),
            source,
            target,
            images,
            verdict: OnceLock::new(),
        };
        if pi1.is_verified() && pi2.is_verified() {
            let _ = m.verdict.set(Verdict { passed: true, residuals: Vec::new() });
        }
        Ok(m)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::suq2_presentation;

    #[test]
    fn identity_and_scaled_gamma() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let id = GenMorphism::identity(&a);
        let x = Element::monomial(&a, &["a", "g'", "a'"]).unwrap();
        assert_eq!(id.apply(&x).unwrap(), x);

        let g2 = Element::named(&a, "g").unwrap().scale(&Scalar::from_int(2));
        let bad = GenMorphism::new("bad", &a, &a, vec![("a", Element::named(&a, "a").unwrap()), ("g", g2)]).unwrap();
        assert_eq!(bad.apply(&x).unwrap_err(), AlgebraError::UnverifiedMorphism("bad".into()));
        let v = bad.check_welldefined(Exec::Sequential).unwrap();
        assert!(!v.passed);
        let r7 = v.residuals.iter().find(|r| r.rule.starts_with("a'*a")).unwrap();
        assert_eq!(r7.residual.to_string(), "3*g*g'");
    }

    #[test]
    fn starred_images_are_forced() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let f = GenMorphism::new(
            "f",
            &a,
            &a,
            vec![("a", Element::named(&a, "a").unwrap()), ("g", Element::named(&a, "g").unwrap().scale(&Scalar::i()))],
        )
        .unwrap();
        assert_eq!(f.image_of("g'").unwrap().to_string(), "-i*g'");
        assert!(f.check_welldefined(Exec::Parallel).unwrap().passed);
    }
}
