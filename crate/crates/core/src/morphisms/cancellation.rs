//! Finite witnesses for the cancellation law of Δ.
//!
//! With `u = ((α, −qγ*), (γ, α*))` the matrix identities
//! `j₁(u) = Δ(u)·j₂(u)*` and `j₂(u) = j₁(u)*·Δ(u)` express every generator
//! `x` as `j₁(x) = Σ c·Δ(a)·j₂(b)` and `j₂(x) = Σ c·j₁(a)·Δ(b)`. Moving
//! `j₁` and `j₂` factors past each other with the twist extends these
//! expressions to all monomials.

use std::sync::Arc;

use crate::algebra::{AlgebraError, Degree, Element, Presentation};
use crate::braided::embed;
use crate::exec::Exec;
use crate::scalars::{Notation, Scalar};

use super::catalog::zeta_of;
use super::GenMorphism;

/// One summand `coeff · Δ(a)·j₂(b)` (for `j₁` witnesses) or
/// `coeff · j₁(a)·Δ(b)` (for `j₂` witnesses).
#[derive(Clone, Debug)]
pub struct ClosureTerm {
    pub coeff: Scalar,
    pub a: Element,
    pub b: Element,
}

#[derive(Clone, Debug)]
pub struct CancellationReport {
    /// `j₁(u) − Δ(u)j₂(u)*`, row-major.
    pub dmm1: Vec<Element>,
    /// `j₂(u) − j₁(u)*Δ(u)`, row-major.
    pub dmm2: Vec<Element>,
    pub max_len: usize,
    pub words_checked: usize,
    pub failures: Vec<String>,
}

impl CancellationReport {
    pub fn passed(&self) -> bool {
        self.dmm1.iter().chain(&self.dmm2).all(Element::is_zero) && self.failures.is_empty()
    }
}

struct Ctx<'a> {
    a: &'a Arc<Presentation>,
    aa: &'a Arc<Presentation>,
    delta: &'a GenMorphism,
    zeta: Scalar,
    /// `u[r][c]` as elements of A.
    u: [[Element; 2]; 2],
}

impl<'a> Ctx<'a> {
    fn new(delta: &'a GenMorphism) -> Result<Ctx<'a>, AlgebraError> {
        let a = delta.source();
        let q = a.param().cloned().ok_or(AlgebraError::NonInvertibleParameter)?;
        let g = |n| Element::named(a, n);
        let u = [[g("a")?, g("g'")?.scale(&q.neg())], [g("g")?, g("a'")?]];
        Ok(Ctx { a, aa: delta.target(), delta, zeta: zeta_of(a)?, u })
    }

    fn zeta_pow(&self, n: i32) -> Scalar {
        self.zeta.pow(n)
    }

    /// `(r, c, coeff)` with `generator = coeff · u[r][c]`.
    fn as_entry(&self, name: &str) -> Result<(usize, usize, Scalar), AlgebraError> {
        let q = self.a.param().cloned().ok_or(AlgebraError::NonInvertibleParameter)?;
        Ok(match name {
            "a" => (0, 0, Scalar::one()),
            "g" => (1, 0, Scalar::one()),
            "a'" => (1, 1, Scalar::one()),
            "g'" => (0, 1, q.inv()?.neg()),
            other => return Err(AlgebraError::UnknownGenerator(other.to_string())),
        })
    }

    fn degree(x: &Element) -> Option<i32> {
        match x.degree() {
            Degree::Homogeneous(d) => Some(d),
            _ => None,
        }
    }

    /// `j₁(u_rc) = Σ_s Δ(u_rs)·j₂(u_cs)*`.
    fn s_generator(&self, name: &str) -> Result<Vec<ClosureTerm>, AlgebraError> {
        let (r, c, k) = self.as_entry(name)?;
        (0..2)
            .map(|s| Ok(ClosureTerm { coeff: k.clone(), a: self.u[r][s].clone(), b: self.u[c][s].try_adjoint()? }))
            .collect()
    }

    /// `j₂(u_rc) = Σ_s j₁(u_sr)*·Δ(u_sc)`.
    fn r_generator(&self, name: &str) -> Result<Vec<ClosureTerm>, AlgebraError> {
        let (r, c, k) = self.as_entry(name)?;
        (0..2)
            .map(|s| Ok(ClosureTerm { coeff: k.clone(), a: self.u[s][r].try_adjoint()?, b: self.u[s][c].clone() }))
            .collect()
    }

    /// Extends a witness for `j₁(w)` to `j₁(w·g)` using
    /// `j₂(b)·j₁(g) = ζ^{−deg g·deg b}·j₁(g)·j₂(b)`.
    fn s_word(&self, word: &[&str]) -> Result<Vec<ClosureTerm>, AlgebraError> {
        let mut acc = self.s_generator(word[0])?;
        for name in &word[1..] {
            let dg = Self::degree(&Element::named(self.a, name)?).unwrap_or(0);
            let step = self.s_generator(name)?;
            let mut next = Vec::new();
            for t in &acc {
                let Some(db) = Self::degree(&t.b) else { continue };
                for s in &step {
                    next.push(ClosureTerm {
                        coeff: t.coeff.mul(&s.coeff).mul(&self.zeta_pow(-dg * db)),
                        a: t.a.try_mul(&s.a)?,
                        b: s.b.try_mul(&t.b)?,
                    });
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    /// Extends a witness for `j₂(w)` to `j₂(g·w)` using
    /// `j₂(g)·j₁(a) = ζ^{−deg a·deg g}·j₁(a)·j₂(g)`.
    fn r_word(&self, word: &[&str]) -> Result<Vec<ClosureTerm>, AlgebraError> {
        let last = word.len() - 1;
        let mut acc = self.r_generator(word[last])?;
        for name in word[..last].iter().rev() {
            let dg = Self::degree(&Element::named(self.a, name)?).unwrap_or(0);
            let step = self.r_generator(name)?;
            let mut next = Vec::new();
            for t in &acc {
                let Some(da) = Self::degree(&t.a) else { continue };
                for s in &step {
                    next.push(ClosureTerm {
                        coeff: t.coeff.mul(&s.coeff).mul(&self.zeta_pow(-da * dg)),
                        a: t.a.try_mul(&s.a)?,
                        b: s.b.try_mul(&t.b)?,
                    });
                }
            }
            acc = next;
        }
        Ok(acc)
    }

    fn sum_s(&self, terms: &[ClosureTerm]) -> Result<Element, AlgebraError> {
        let mut acc = Element::zero(self.aa);
        for t in terms {
            let x = self.delta.apply(&t.a)?.try_mul(&embed(self.aa, 2, &t.b)?)?;
            acc = acc.try_add(&x.scale(&t.coeff))?;
        }
        Ok(acc)
    }

    fn sum_r(&self, terms: &[ClosureTerm]) -> Result<Element, AlgebraError> {
        let mut acc = Element::zero(self.aa);
        for t in terms {
            let x = embed(self.aa, 1, &t.a)?.try_mul(&self.delta.apply(&t.b)?)?;
            acc = acc.try_add(&x.scale(&t.coeff))?;
        }
        Ok(acc)
    }
}

fn words_up_to(letters: &[&'static str], max_len: usize) -> Vec<Vec<&'static str>> {
    let mut out = Vec::new();
    let mut layer: Vec<Vec<&'static str>> = vec![Vec::new()];
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &layer {
            for l in letters {
                let mut v = w.clone();
                v.push(*l);
                next.push(v);
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// `j₁(x) = Σ c·Δ(a)·j₂(b)` for the monomial `x` given by generator names.
pub fn s_witness(delta: &GenMorphism, word: &[&str]) -> Result<Vec<ClosureTerm>, AlgebraError> {
    Ctx::new(delta)?.s_word(word)
}

/// `j₂(x) = Σ c·j₁(a)·Δ(b)` for the monomial `x` given by generator names.
pub fn r_witness(delta: &GenMorphism, word: &[&str]) -> Result<Vec<ClosureTerm>, AlgebraError> {
    Ctx::new(delta)?.r_word(word)
}

/// Checks both matrix identities entrywise and verifies the constructive
/// witnesses for every monomial in `α, γ, α*, γ*` of length at most
/// `max_len`.
pub fn cancellation_witness(delta: &GenMorphism, max_len: usize, exec: Exec) -> Result<CancellationReport, AlgebraError> {
    let ctx = Ctx::new(delta)?;
    let (aa, u) = (ctx.aa, &ctx.u);
    let mut dmm1 = Vec::with_capacity(4);
    let mut dmm2 = Vec::with_capacity(4);
    for r in 0..2 {
        for c in 0..2 {
            let mut rhs1 = Element::zero(aa);
            let mut rhs2 = Element::zero(aa);
            for s in 0..2 {
                rhs1 = &rhs1 + &(&delta.apply(&u[r][s])? * &embed(aa, 2, &u[c][s].try_adjoint()?)?);
                rhs2 = &rhs2 + &(&embed(aa, 1, &u[s][r].try_adjoint()?)? * &delta.apply(&u[s][c])?);
            }
            dmm1.push(embed(aa, 1, &u[r][c])?.try_sub(&rhs1)?);
            dmm2.push(embed(aa, 2, &u[r][c])?.try_sub(&rhs2)?);
        }
    }

    let words = words_up_to(&["a", "g", "a'", "g'"], max_len);
    let outcomes = exec.map(&words, |w| -> Result<Vec<String>, AlgebraError> {
        let x = Element::monomial(ctx.a, w)?;
        let mut bad = Vec::new();
        let s = ctx.sum_s(&ctx.s_word(w)?)?;
        if s != embed(aa, 1, &x)? {
            bad.push(format!("j1({}): {}", w.join("*"), s.render(Notation::Ascii)));
        }
        let r = ctx.sum_r(&ctx.r_word(w)?)?;
        if r != embed(aa, 2, &x)? {
            bad.push(format!("j2({}): {}", w.join("*"), r.render(Notation::Ascii)));
        }
        Ok(bad)
    });
    let mut failures = Vec::new();
    for o in outcomes {
        failures.extend(o?);
    }
    Ok(CancellationReport { dmm1, dmm2, max_len, words_checked: words.len(), failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::suq2_presentation;
    use crate::morphisms::delta_su;

    #[test]
    fn witnesses_hold_to_length_two() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let d = delta_su(&a).unwrap();
        let rep = cancellation_witness(&d, 2, Exec::Parallel).unwrap();
        assert!(rep.passed(), "{:?}", rep.failures);
        assert_eq!(rep.words_checked, 20);
    }

    #[test]
    fn gamma_witness_reads_off_the_second_row() {
        let a = suq2_presentation(&Scalar::q()).unwrap();
        let d = delta_su(&a).unwrap();
        let terms = s_witness(&d, &["g"]).unwrap();
        let shown: Vec<String> = terms.iter().map(|t| format!("{} | {} | {}", t.coeff, t.a, t.b)).collect();
        assert_eq!(shown, vec!["1 | g | a'", "1 | a' | -qb*g"]);
    }
}
