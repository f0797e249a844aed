use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use crate::scalars::{Notation, Scalar};

use super::presentation::{accumulate, Presentation, Terms};
use super::word::{Gen, Word};
use super::AlgebraError;

/// Degree of an element. The zero element is compatible with every degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Degree {
    Zero,
    Homogeneous(i32),
    Inhomogeneous,
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::Zero => f.write_str("zero"),
            Degree::Homogeneous(d) => write!(f, "{d}"),
            Degree::Inhomogeneous => f.write_str("inhomogeneous"),
        }
    }
}

/// A finite sum of scalar-weighted normal words of one presentation.
#[derive(Clone)]
pub struct Element {
    pres: Arc<Presentation>,
    terms: Terms,
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Element[{}]({})", self.pres.label(), self.render(Notation::Ascii))
    }
}

impl PartialEq for Element {
    fn eq(&self, other: &Self) -> bool {
        self.pres.same_as(&other.pres) && self.terms == other.terms
    }
}

impl Element {
    pub fn zero(p: &Arc<Presentation>) -> Element {
        Element { pres: p.clone(), terms: Terms::new() }
    }

    pub fn one(p: &Arc<Presentation>) -> Element {
        Element::scalar(p, Scalar::one())
    }

    pub fn scalar(p: &Arc<Presentation>, c: Scalar) -> Element {
        let mut terms = Terms::new();
        accumulate(&mut terms, Word::empty(), c);
        Element { pres: p.clone(), terms }
    }

    /// A single generator; generators are always normal words.
    pub fn generator(p: &Arc<Presentation>, g: Gen) -> Element {
        let mut terms = Terms::new();
        terms.insert(Word::letter(g), Scalar::one());
        Element { pres: p.clone(), terms }
    }

    pub fn named(p: &Arc<Presentation>, name: &str) -> Result<Element, AlgebraError> {
        let g = p.generator(name).ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))?;
        Ok(Element::generator(p, g))
    }

    pub fn word(p: &Arc<Presentation>, w: &Word) -> Result<Element, AlgebraError> {
        Element::from_raw(p, [(w.clone(), Scalar::one())])
    }

    /// Product of the named generators, normalized.
    pub fn monomial(p: &Arc<Presentation>, names: &[&str]) -> Result<Element, AlgebraError> {
        let w = names
            .iter()
            .map(|n| p.generator(n).ok_or_else(|| AlgebraError::UnknownGenerator(n.to_string())))
            .collect::<Result<Word, _>>()?;
        Element::word(p, &w)
    }

    /// Normalizes an arbitrary linear combination of words.
    pub fn from_raw<I>(p: &Arc<Presentation>, raw: I) -> Result<Element, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let n = p.generators().len();
        let raw: Vec<_> = raw.into_iter().collect();
        if let Some(bad) = raw.iter().flat_map(|(w, _)| w.letters()).find(|&&g| g as usize >= n) {
            return Err(AlgebraError::UnknownGenerator(format!("#{bad}")));
        }
        Ok(Element { pres: p.clone(), terms: p.normalize_terms(raw)? })
    }

    pub(crate) fn from_normal_terms(p: &Arc<Presentation>, terms: Terms) -> Element {
        Element { pres: p.clone(), terms }
    }

    pub fn presentation(&self) -> &Arc<Presentation> {
        &self.pres
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &Scalar)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Scalar {
        self.terms.get(w).cloned().unwrap_or_else(Scalar::zero)
    }

    /// `Some(c)` when the element is `c·1`.
    pub fn as_scalar(&self) -> Option<Scalar> {
        match self.terms.len() {
            0 => Some(Scalar::zero()),
            1 => self.terms.get(&Word::empty()).cloned(),
            _ => None,
        }
    }

    fn check_same(&self, other: &Element) -> Result<(), AlgebraError> {
        if self.pres.same_as(&other.pres) {
            Ok(())
        } else {
            Err(AlgebraError::PresentationMismatch(self.pres.label().into(), other.pres.label().into()))
        }
    }

    pub fn try_add(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        let mut terms = self.terms.clone();
        for (w, c) in &other.terms {
            accumulate(&mut terms, w.clone(), c.clone());
        }
        Ok(Element { pres: self.pres.clone(), terms })
    }

    pub fn try_sub(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.try_add(&other.neg())
    }

    pub fn try_mul(&self, other: &Element) -> Result<Element, AlgebraError> {
        self.check_same(other)?;
        let raw = self
            .terms
            .iter()
            .flat_map(|(u, c)| other.terms.iter().map(move |(v, d)| (u.concat(v), c.mul(d))));
        Ok(Element { pres: self.pres.clone(), terms: self.pres.normalize_terms(raw)? })
    }

    pub fn scale(&self, c: &Scalar) -> Element {
        if c.is_zero() {
            return Element::zero(&self.pres);
        }
        let terms = self.terms.iter().map(|(w, d)| (w.clone(), c.mul(d))).collect();
        Element { pres: self.pres.clone(), terms }
    }

    pub fn neg(&self) -> Element {
        self.scale(&Scalar::from_int(-1))
    }

    pub fn pow(&self, n: u32) -> Result<Element, AlgebraError> {
        let mut acc = Element::one(&self.pres);
        for _ in 0..n {
            acc = acc.try_mul(self)?;
        }
        Ok(acc)
    }

    /// Reverses each word, stars each letter and conjugates coefficients.
    pub fn try_adjoint(&self) -> Result<Element, AlgebraError> {
        let p = &self.pres;
        let raw = self.terms.iter().map(|(w, c)| {
            let starred: Word = w.letters().iter().rev().map(|&g| p.adjoint_of(g)).collect();
            (starred, c.conj())
        });
        Ok(Element { pres: p.clone(), terms: p.normalize_terms(raw)? })
    }

    pub fn adjoint(&self) -> Element {
        self.try_adjoint().expect("adjoint rewriting terminates")
    }

    pub fn degree(&self) -> Degree {
        let mut degs = self.terms.keys().map(|w| self.pres.word_degree(w));
        match degs.next() {
            None => Degree::Zero,
            Some(d) => {
                if degs.all(|e| e == d) {
                    Degree::Homogeneous(d)
                } else {
                    Degree::Inhomogeneous
                }
            }
        }
    }

    pub fn homogeneous_component(&self, d: i32) -> Element {
        let terms = self
            .terms
            .iter()
            .filter(|(w, _)| self.pres.word_degree(w) == d)
            .map(|(w, c)| (w.clone(), c.clone()))
            .collect();
        Element { pres: self.pres.clone(), terms }
    }

    /// Degrees occurring in the element, ascending.
    pub fn degrees(&self) -> Vec<i32> {
        let mut v: Vec<i32> = self.terms.keys().map(|w| self.pres.word_degree(w)).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Canonical text form, terms in shortlex order: `1 - g*g'`,
    /// `q*g'*a`, `(q/qb)*g`.
    pub fn render(&self, notation: Notation) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (k, (w, c)) in self.terms.iter().enumerate() {
            let neg = c.looks_negative();
            let c = if neg { c.neg() } else { c.clone() };
            if k == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let word = (!w.is_empty()).then(|| self.pres.render_word(w, notation));
            let coeff = c.render(notation);
            match (word, c.is_one()) {
                (None, _) => out.push_str(&coeff),
                (Some(word), true) => out.push_str(&word),
                (Some(word), false) => {
                    if c.is_compound() {
                        out.push_str(&format!("({coeff}){}{word}", notation.times()));
                    } else {
                        out.push_str(&format!("{coeff}{}{word}", notation.times()));
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Ascii))
    }
}

impl Add for &Element {
    type Output = Element;
    fn add(self, rhs: &Element) -> Element {
        self.try_add(rhs).expect("presentation-mismatch")
    }
}

impl Sub for &Element {
    type Output = Element;
    fn sub(self, rhs: &Element) -> Element {
        self.try_sub(rhs).expect("presentation-mismatch")
    }
}

impl Mul for &Element {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        self.try_mul(rhs).expect("presentation-mismatch")
    }
}

impl Mul<&Element> for &Scalar {
    type Output = Element;
    fn mul(self, rhs: &Element) -> Element {
        rhs.scale(self)
    }
}

impl Neg for &Element {
    type Output = Element;
    fn neg(self) -> Element {
        Element::neg(self)
    }
}
