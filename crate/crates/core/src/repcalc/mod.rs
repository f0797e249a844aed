//! Matrices over presented algebras and finite-dimensional graded
//! representations.
//!
//! A matrix `v = Σ e_rc ⊗ v_rc` acts on basis vectors by
//! `v(e_c ⊗ 1) = Σ_r e_r ⊗ v_rc`. A graded space assigns a degree to every
//! basis vector; `v` is T-invariant when each `v_rc` is homogeneous of degree
//! `deg c − deg r` (or zero).

use std::fmt;
use std::sync::Arc;

use crate::algebra::{free_presentation, AlgebraError, Degree, Element, Presentation};
use crate::braided::embed;
use crate::morphisms::GenMorphism;
use crate::scalars::{Notation, Scalar};

/// Basis degrees of a finite-dimensional T-Hilbert space.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedSpace {
    pub degrees: Vec<i32>,
}

impl GradedSpace {
    pub fn new(degrees: Vec<i32>) -> GradedSpace {
        GradedSpace { degrees }
    }

    pub fn trivial() -> GradedSpace {
        GradedSpace { degrees: vec![0] }
    }

    pub fn dim(&self) -> usize {
        self.degrees.len()
    }

    /// Basis `e_i ⊗ f_j` in the order `(0,0), (0,1), ..., (1,0), ...`.
    pub fn tensor(&self, other: &GradedSpace) -> GradedSpace {
        let degrees = self.degrees.iter().flat_map(|d| other.degrees.iter().map(move |e| d + e)).collect();
        GradedSpace { degrees }
    }
}

#[derive(Clone)]
pub struct AlgMatrix {
    space: GradedSpace,
    pres: Arc<Presentation>,
    entries: Vec<Element>,
}

impl PartialEq for AlgMatrix {
    fn eq(&self, other: &AlgMatrix) -> bool {
        self.space == other.space && self.pres.same_as(&other.pres) && self.entries == other.entries
    }
}

impl fmt::Debug for AlgMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.dim();
        let rows: Vec<Vec<String>> = (0..n).map(|r| (0..n).map(|c| self.get(r, c).to_string()).collect()).collect();
        f.debug_struct("AlgMatrix").field("degrees", &self.space.degrees).field("rows", &rows).finish()
    }
}

fn shape_err(msg: impl Into<String>) -> AlgebraError {
    AlgebraError::ShapeMismatch(msg.into())
}

impl AlgMatrix {
    /// Row-major entries.
    pub fn new(space: GradedSpace, entries: Vec<Element>) -> Result<AlgMatrix, AlgebraError> {
        let n = space.dim();
        if n == 0 || entries.len() != n * n {
            return Err(shape_err(format!("{} entries for dimension {n}", entries.len())));
        }
        let pres = entries[0].presentation().clone();
        if let Some(bad) = entries.iter().find(|e| !e.presentation().same_as(&pres)) {
            return Err(AlgebraError::PresentationMismatch(bad.presentation().label().into(), pres.label().into()));
        }
        Ok(AlgMatrix { space, pres, entries })
    }

    pub fn identity(p: &Arc<Presentation>, space: GradedSpace) -> AlgMatrix {
        let n = space.dim();
        let entries = (0..n * n)
            .map(|i| if i / n == i % n { Element::one(p) } else { Element::zero(p) })
            .collect();
        AlgMatrix { space, pres: p.clone(), entries }
    }

    pub fn diagonal(space: GradedSpace, diag: Vec<Element>) -> Result<AlgMatrix, AlgebraError> {
        let n = space.dim();
        if diag.len() != n {
            return Err(shape_err("diagonal length"));
        }
        let p = diag[0].presentation().clone();
        let mut entries = vec![Element::zero(&p); n * n];
        for (k, d) in diag.into_iter().enumerate() {
            entries[k * n + k] = d;
        }
        AlgMatrix::new(space, entries)
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn space(&self) -> &GradedSpace {
        &self.space
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn get(&self, r: usize, c: usize) -> &Element {
        &self.entries[r * self.dim() + c]
    }

    pub fn entries(&self) -> &[Element] {
        &self.entries
    }

    pub fn with_entry(&self, r: usize, c: usize, x: Element) -> Result<AlgMatrix, AlgebraError> {
        let mut entries = self.entries.clone();
        entries[r * self.dim() + c] = x;
        AlgMatrix::new(self.space.clone(), entries)
    }

    pub fn mat_mul(&self, other: &AlgMatrix) -> Result<AlgMatrix, AlgebraError> {
        let n = self.dim();
        if other.dim() != n {
            return Err(shape_err(format!("{n}x{n} times {0}x{0}", other.dim())));
        }
        let mut entries = Vec::with_capacity(n * n);
        for r in 0..n {
            for c in 0..n {
                let mut acc = Element::zero(&self.pres);
                for s in 0..n {
                    let (x, y) = (self.get(r, s), other.get(s, c));
                    if !x.is_zero() && !y.is_zero() {
                        acc = acc.try_add(&x.try_mul(y)?)?;
                    }
                }
                entries.push(acc);
            }
        }
        AlgMatrix::new(self.space.clone(), entries)
    }

    pub fn mat_adjoint(&self) -> Result<AlgMatrix, AlgebraError> {
        let n = self.dim();
        let entries = (0..n * n).map(|i| self.get(i % n, i / n).try_adjoint()).collect::<Result<Vec<_>, _>>()?;
        AlgMatrix::new(self.space.clone(), entries)
    }

    pub fn sub(&self, other: &AlgMatrix) -> Result<AlgMatrix, AlgebraError> {
        if other.dim() != self.dim() {
            return Err(shape_err("difference of different sizes"));
        }
        let entries = self.entries.iter().zip(&other.entries).map(|(x, y)| x.try_sub(y)).collect::<Result<Vec<_>, _>>()?;
        AlgMatrix::new(self.space.clone(), entries)
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Element::is_zero)
    }

    /// Entrywise image under a homomorphism.
    pub fn map(&self, f: &GenMorphism) -> Result<AlgMatrix, AlgebraError> {
        let entries = self.entries.iter().map(|x| f.apply(x)).collect::<Result<Vec<_>, _>>()?;
        AlgMatrix::new(self.space.clone(), entries)
    }

    /// Entrywise retagging into leg `leg` of a product.
    pub fn embed(&self, product: &Arc<Presentation>, leg: usize) -> Result<AlgMatrix, AlgebraError> {
        let entries = self.entries.iter().map(|x| embed(product, leg, x)).collect::<Result<Vec<_>, _>>()?;
        AlgMatrix::new(self.space.clone(), entries)
    }

    /// Entries violating `deg v_rc = deg c − deg r`.
    pub fn invariance_violations(&self) -> Vec<(usize, usize)> {
        let n = self.dim();
        let mut out = Vec::new();
        for r in 0..n {
            for c in 0..n {
                let want = self.space.degrees[c] - self.space.degrees[r];
                match self.get(r, c).degree() {
                    Degree::Zero => {}
                    Degree::Homogeneous(d) if d == want => {}
                    _ => out.push((r, c)),
                }
            }
        }
        out
    }

    pub fn is_t_invariant(&self) -> bool {
        self.invariance_violations().is_empty()
    }

    /// `(MM* − I, M*M − I)`.
    pub fn unitarity_residuals(&self) -> Result<(AlgMatrix, AlgMatrix), AlgebraError> {
        let id = AlgMatrix::identity(&self.pres, self.space.clone());
        let adj = self.mat_adjoint()?;
        Ok((self.mat_mul(&adj)?.sub(&id)?, adj.mat_mul(self)?.sub(&id)?))
    }

    pub fn is_unitary(&self) -> Result<bool, AlgebraError> {
        let (a, b) = self.unitarity_residuals()?;
        Ok(a.is_zero() && b.is_zero())
    }

    pub fn render_rows(&self, notation: Notation) -> Vec<Vec<String>> {
        let n = self.dim();
        (0..n).map(|r| (0..n).map(|c| self.get(r, c).render(notation)).collect()).collect()
    }
}

/// `u = ((α, −qγ*), (γ, α*))` over SU_q(2) (or any presentation with
/// generators `a`, `g` and a parameter).
pub fn fundamental(p: &Arc<Presentation>, space: GradedSpace) -> Result<AlgMatrix, AlgebraError> {
    let q = p.param().cloned().ok_or(AlgebraError::NonInvertibleParameter)?;
    let g = |n| Element::named(p, n);
    AlgMatrix::new(space, vec![g("a")?, g("g'")?.scale(&q.neg()), g("g")?, g("a'")?])
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CorepMode {
    /// Requires T-invariance and uses the braided comultiplication.
    Braided,
    /// Ordinary compact quantum group; no grading condition.
    Ordinary,
}

/// `(id⊗Δ)(v) − (id⊗j₁)(v)·(id⊗j₂)(v)`.
pub fn corep_residual(v: &AlgMatrix, delta: &GenMorphism, mode: CorepMode) -> Result<AlgMatrix, AlgebraError> {
    if mode == CorepMode::Braided {
        let bad = v.invariance_violations();
        if !bad.is_empty() {
            return Err(AlgebraError::NotTInvariant(format!("entries {bad:?}")));
        }
    }
    let target = delta.target();
    let lhs = v.map(delta)?;
    let rhs = v.embed(target, 1)?.mat_mul(&v.embed(target, 2)?)?;
    lhs.sub(&rhs)
}

pub fn corep_check(v: &AlgMatrix, delta: &GenMorphism, mode: CorepMode) -> Result<bool, AlgebraError> {
    Ok(corep_residual(v, delta, mode)?.is_zero())
}

/// `ζ̄^{(deg r' − deg c')·deg c}` for the entry `((r,r'),(c,c'))` of
/// `ι₁(e_rc)ι₂(e_r'c')` on `H₁⊗H₂`.
fn twist_factor(zeta: &Scalar, s1: &GradedSpace, s2: &GradedSpace, rp: usize, cp: usize, c: usize) -> Scalar {
    let l = s2.degrees[rp] - s2.degrees[cp];
    zeta.conj().pow(l * s1.degrees[c])
}

/// `v₁ ⊤ v₂ = (ι₁⊗id)(v₁)·(ι₂⊗id)(v₂)` on `H₁⊗H₂`, basis `e_i⊗f_j` in
/// lexicographic order.
pub fn rep_tensor(v1: &AlgMatrix, v2: &AlgMatrix, zeta: &Scalar) -> Result<AlgMatrix, AlgebraError> {
    if !v1.pres.same_as(&v2.pres) {
        return Err(AlgebraError::PresentationMismatch(v1.pres.label().into(), v2.pres.label().into()));
    }
    let (n1, n2) = (v1.dim(), v2.dim());
    let (s1, s2) = (&v1.space, &v2.space);
    let mut entries = Vec::with_capacity(n1 * n1 * n2 * n2);
    for r in 0..n1 {
        for rp in 0..n2 {
            for c in 0..n1 {
                for cp in 0..n2 {
                    let x = v1.get(r, c).try_mul(v2.get(rp, cp))?;
                    entries.push(x.scale(&twist_factor(zeta, s1, s2, rp, cp, c)));
                }
            }
        }
    }
    AlgMatrix::new(s1.tensor(s2), entries)
}

/// `(ι₁⊗j₂)(v)` and `(ι₂⊗j₁)(w)` in `M(H₁⊗H₂) ⊗ (A⊠A)`.
pub fn mixed_leg_images(v: &AlgMatrix, w: &AlgMatrix, aa: &Arc<Presentation>, zeta: &Scalar) -> Result<(AlgMatrix, AlgMatrix), AlgebraError> {
    let (n1, n2) = (v.dim(), w.dim());
    let (s1, s2) = (&v.space, &w.space);
    let space = s1.tensor(s2);
    let zero = Element::zero(aa);
    let mut m1 = Vec::with_capacity(space.dim().pow(2));
    let mut m2 = Vec::with_capacity(space.dim().pow(2));
    for r in 0..n1 {
        for rp in 0..n2 {
            for c in 0..n1 {
                for cp in 0..n2 {
                    m1.push(if rp == cp { embed(aa, 2, v.get(r, c))? } else { zero.clone() });
                    m2.push(if r == c {
                        embed(aa, 1, w.get(rp, cp))?.scale(&twist_factor(zeta, s1, s2, rp, cp, c))
                    } else {
                        zero.clone()
                    });
                }
            }
        }
    }
    Ok((AlgMatrix::new(space.clone(), m1)?, AlgMatrix::new(space, m2)?))
}

/// `v(ξ⊗1) − ξ⊗1`, one element per basis vector.
pub fn invariant_vector_residual(v: &AlgMatrix, xi: &[Scalar]) -> Result<Vec<Element>, AlgebraError> {
    let n = v.dim();
    if xi.len() != n {
        return Err(shape_err(format!("vector of length {} for dimension {n}", xi.len())));
    }
    (0..n)
        .map(|r| {
            let mut acc = Element::scalar(&v.pres, xi[r].neg());
            for (c, x) in xi.iter().enumerate() {
                acc = acc.try_add(&v.get(r, c).scale(x))?;
            }
            Ok(acc)
        })
        .collect()
}

pub fn invariant_vector_check(v: &AlgMatrix, xi: &[Scalar]) -> Result<bool, AlgebraError> {
    Ok(invariant_vector_residual(v, xi)?.iter().all(Element::is_zero))
}

/// Both sides of `(ι₁⊗id)(u*)ξ = (ι₂⊗id)(u)ξ` for a matrix `u` with
/// formal entries, and the coefficient equations they impose.
#[derive(Clone, Debug)]
pub struct ConstraintReport {
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    /// One `lhs = rhs` equation per basis vector `e_i⊗e_j`.
    pub equations: Vec<String>,
    pub matches_expected: bool,
    /// `qζ̄ − q̄`, which must vanish for the two equations on `b` to agree.
    pub consistency: Scalar,
    /// With `b = c = 0` the first and last equations become `0 = 0`.
    pub degenerate_trivial: bool,
}

impl ConstraintReport {
    pub fn passed(&self) -> bool {
        self.matches_expected && self.consistency.is_zero() && self.degenerate_trivial
    }
}

/// `ι₁(M)` applied to a vector in `H⊗H`, or `ι₂(M)` with the twist.
fn act(m: &AlgMatrix, leg: usize, xi: &[Element], zeta: &Scalar) -> Result<Vec<Element>, AlgebraError> {
    let n = m.dim();
    let s = &m.space;
    let mut out: Vec<Element> = (0..n * n).map(|_| Element::zero(&m.pres)).collect();
    for x in 0..n {
        for y in 0..n {
            let coeff = &xi[x * n + y];
            if coeff.is_zero() {
                continue;
            }
            for r in 0..n {
                let (idx, entry, twist) = if leg == 1 {
                    (r * n + y, m.get(r, x), Scalar::one())
                } else {
                    (x * n + r, m.get(r, y), zeta.conj().pow((s.degrees[r] - s.degrees[y]) * s.degrees[x]))
                };
                if entry.is_zero() {
                    continue;
                }
                let term = coeff.try_mul(entry)?.scale(&twist);
                out[idx] = out[idx].try_add(&term)?;
            }
        }
    }
    Ok(out)
}

/// Expands both sides of the invariance equation for `ξ = e₀⊗e₁ − q e₁⊗e₀`
/// with a formal matrix `((a, b), (c, d))`, basis degrees `(0, −1)`.
pub fn constraint_derivation(q: &Scalar) -> Result<ConstraintReport, AlgebraError> {
    let free = free_presentation("formal", &[("a", 0), ("b", -1), ("c", 1), ("d", 0)])?;
    let zeta = q.checked_div(&q.conj())?;
    let g = |n| Element::named(&free, n);
    let space = GradedSpace::new(vec![0, -1]);
    let u = AlgMatrix::new(space, vec![g("a")?, g("b")?, g("c")?, g("d")?])?;
    let xi: Vec<Element> = [Scalar::zero(), Scalar::one(), q.neg(), Scalar::zero()]
        .into_iter()
        .map(|c| Element::scalar(&free, c))
        .collect();
    let lhs = act(&u.mat_adjoint()?, 1, &xi, &zeta)?;
    let rhs = act(&u, 2, &xi, &zeta)?;

    let mq = q.neg();
    let expected_lhs = [g("c'")?.scale(&mq), g("a'")?, g("d'")?.scale(&mq), g("b'")?];
    let expected_rhs = [g("b")?, g("d")?, g("a")?.scale(&mq), g("c")?.scale(&mq.mul(&zeta.conj()))];
    let matches_expected = lhs.iter().eq(expected_lhs.iter()) && rhs.iter().eq(expected_rhs.iter());

    let basis = ["e0⊗e0", "e0⊗e1", "e1⊗e0", "e1⊗e1"];
    let equations = basis
        .iter()
        .zip(lhs.iter().zip(&rhs))
        .map(|(e, (l, r))| format!("{e}: {} = {}", l.render(Notation::Ascii), r.render(Notation::Ascii)))
        .collect();

    // Conjugating b = −q c* gives b* = −q̄ c; the last equation asks b* = −qζ̄ c.
    let consistency = q.mul(&zeta.conj()).sub(&q.conj());

    let mut zero_bc = u.with_entry(0, 1, Element::zero(&free))?;
    zero_bc = zero_bc.with_entry(1, 0, Element::zero(&free))?;
    let l0 = act(&zero_bc.mat_adjoint()?, 1, &xi, &zeta)?;
    let r0 = act(&zero_bc, 2, &xi, &zeta)?;
    let degenerate_trivial = [0, 3].iter().all(|&i| l0[i].is_zero() && r0[i].is_zero());

    Ok(ConstraintReport {
        lhs: lhs.iter().map(|x| x.render(Notation::Ascii)).collect(),
        rhs: rhs.iter().map(|x| x.render(Notation::Ascii)).collect(),
        equations,
        matches_expected,
        consistency,
        degenerate_trivial,
    })
}

#[derive(Clone, Debug)]
pub struct Uq2RepReport {
    pub u: AlgMatrix,
    pub unitary: bool,
    pub corep: bool,
    pub roundtrip: bool,
    pub torus_part_corep: bool,
}

impl Uq2RepReport {
    pub fn passed(&self) -> bool {
        self.unitary && self.corep && self.roundtrip && self.torus_part_corep
    }
}

/// `U = diag(z^{deg k})` over B.
pub fn z_power_diagonal(b: &Arc<Presentation>, space: &GradedSpace) -> Result<AlgMatrix, AlgebraError> {
    let z = Element::named(b, "z")?;
    let zs = Element::named(b, "z'")?;
    let diag = space
        .degrees
        .iter()
        .map(|&d| if d >= 0 { z.pow(d as u32) } else { zs.pow((-d) as u32) })
        .collect::<Result<Vec<_>, _>>()?;
    AlgMatrix::diagonal(space.clone(), diag)
}

/// For `v` the image in B of a representation of SU_q(2), forms
/// `u = v·U*` and checks that it is a unitary corepresentation of
/// `(B, Δ_B)` with `u·U = v`.
pub fn uq2_from_su2_rep(v: &AlgMatrix, delta_b: &GenMorphism) -> Result<Uq2RepReport, AlgebraError> {
    let b = delta_b.source();
    let big_u = z_power_diagonal(b, v.space())?;
    let u = v.mat_mul(&big_u.mat_adjoint()?)?;
    Ok(Uq2RepReport {
        unitary: u.is_unitary()?,
        corep: corep_check(&u, delta_b, CorepMode::Ordinary)?,
        roundtrip: u.mat_mul(&big_u)? == *v,
        torus_part_corep: corep_check(&big_u, delta_b, CorepMode::Ordinary)?,
        u,
    })
}

/// Commutation check of the two mixed-leg images, returning
/// `M₁M₂ − M₂M₁`.
pub fn mixed_leg_commutator(v: &AlgMatrix, w: &AlgMatrix, aa: &Arc<Presentation>, zeta: &Scalar) -> Result<AlgMatrix, AlgebraError> {
    let (m1, m2) = mixed_leg_images(v, w, aa, zeta)?;
    m1.mat_mul(&m2)?.sub(&m2.mat_mul(&m1)?)
}

#[cfg(test)]
mod tests;
