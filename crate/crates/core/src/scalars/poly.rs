//! Sparse polynomials in the two commuting indeterminates `q` and `q̄` with
//! Gaussian-rational coefficients, and their greatest common divisor.
//!
//! Monomials are ordered lexicographically with `q` before `q̄`; the leading
//! term of a polynomial is its lexicographically largest monomial.

use std::collections::BTreeMap;

use num_complex::Complex64;

use super::gauss::GaussRat;

/// Exponent pair `(deg_q, deg_q̄)`.
pub type Mono = (u32, u32);

#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Poly {
    terms: BTreeMap<Mono, GaussRat>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn constant(c: GaussRat) -> Self {
        Poly::monomial((0, 0), c)
    }

    pub fn one() -> Self {
        Poly::constant(GaussRat::one())
    }

    pub fn monomial(m: Mono, c: GaussRat) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(GaussRat::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Mono, &GaussRat)> {
        self.terms.iter()
    }

    pub fn leading(&self) -> Option<(&Mono, &GaussRat)> {
        self.terms.iter().next_back()
    }

    /// Coefficient-wise minimum exponents: the monomial part of the content.
    pub fn min_exponents(&self) -> Mono {
        self.terms.keys().fold((u32::MAX, u32::MAX), |(a, b), &(x, y)| (a.min(x), b.min(y)))
    }

    fn add_term(&mut self, m: Mono, c: &GaussRat) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, c);
        }
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, &-c);
        }
        out
    }

    pub fn neg(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect() }
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term((ma.0 + mb.0, ma.1 + mb.1), &ca.mul_ref(cb));
            }
        }
        out
    }

    pub fn scale(&self, c: &GaussRat) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly { terms: self.terms.iter().map(|(m, v)| (*m, v.mul_ref(c))).collect() }
    }

    pub fn shift(&self, by: Mono) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| ((m.0 + by.0, m.1 + by.1), c.clone())).collect() }
    }

    /// Divides by the monomial `q^a q̄^b`; every term must be divisible.
    pub fn unshift(&self, by: Mono) -> Poly {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| ((m.0 - by.0, m.1 - by.1), c.clone()))
                .collect(),
        }
    }

    /// Swaps the two indeterminates and conjugates every coefficient.
    pub fn conj(&self) -> Poly {
        Poly { terms: self.terms.iter().map(|(m, c)| ((m.1, m.0), c.conj())).collect() }
    }

    pub fn eval(&self, q: Complex64) -> Complex64 {
        let qb = q.conj();
        self.terms
            .iter()
            .map(|(m, c)| c.to_complex() * q.powu(m.0) * qb.powu(m.1))
            .sum()
    }

    /// Sum of coefficient magnitudes times monomial magnitudes at `|q|`.
    pub fn eval_scale(&self, q: Complex64) -> f64 {
        let r = q.norm();
        self.terms
            .iter()
            .map(|(m, c)| c.to_complex().norm() * r.powi((m.0 + m.1) as i32))
            .sum()
    }

    /// Exact division in the multivariate sense; `None` if `d` does not divide.
    pub fn exact_div(&self, d: &Poly) -> Option<Poly> {
        let (dm, dc) = d.leading()?;
        let dc_inv = dc.inv()?;
        let mut rem = self.clone();
        let mut quot = Poly::zero();
        while let Some((rm, rc)) = rem.leading().map(|(m, c)| (*m, c.clone())) {
            if rm.0 < dm.0 || rm.1 < dm.1 {
                return None;
            }
            let tm = (rm.0 - dm.0, rm.1 - dm.1);
            let tc = rc.mul_ref(&dc_inv);
            rem = rem.sub(&d.shift(tm).scale(&tc));
            quot.add_term(tm, &tc);
        }
        Some(quot)
    }

    /// Scales so the leading coefficient is one.
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) if !c.is_one() => self.scale(&c.inv().expect("nonzero leading coefficient")),
            _ => self.clone(),
        }
    }
}

/// Greatest common divisor, normalised to a monic polynomial. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    if a.is_zero() {
        return b.monic();
    }
    if b.is_zero() {
        return a.monic();
    }
    if a.is_monomial() || b.is_monomial() {
        let (a0, a1) = a.min_exponents();
        let (b0, b1) = b.min_exponents();
        return Poly::monomial((a0.min(b0), a1.min(b1)), GaussRat::one());
    }
    let ra = Rec::from_poly(a);
    let rb = Rec::from_poly(b);
    rec_gcd(&ra, &rb).to_poly().monic()
}

// Dense univariate polynomial in q̄, index = exponent. No trailing zeros.
#[derive(Clone, Debug, PartialEq)]
struct UPoly(Vec<GaussRat>);

impl UPoly {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(GaussRat::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn lead(&self) -> &GaussRat {
        self.0.last().expect("nonzero polynomial")
    }

    fn mul(&self, o: &UPoly) -> UPoly {
        if self.is_zero() || o.is_zero() {
            return UPoly(Vec::new());
        }
        let mut out = vec![GaussRat::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] += &a.mul_ref(b);
            }
        }
        UPoly(out).trim()
    }

    fn sub(&self, o: &UPoly) -> UPoly {
        let n = self.0.len().max(o.0.len());
        let zero = GaussRat::zero();
        UPoly(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&zero) - o.0.get(i).unwrap_or(&zero))
                .collect(),
        )
        .trim()
    }

    fn scale(&self, c: &GaussRat) -> UPoly {
        UPoly(self.0.iter().map(|x| x.mul_ref(c)).collect()).trim()
    }

    fn monic(&self) -> UPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(&self.lead().inv().expect("nonzero"))
    }

    /// Quotient and remainder over the field of Gaussian rationals.
    fn divrem(&self, d: &UPoly) -> (UPoly, UPoly) {
        let dl = d.lead().inv().expect("division by zero polynomial");
        let mut rem = self.clone();
        let mut quot = vec![GaussRat::zero(); self.0.len().saturating_sub(d.0.len()) + 1];
        while !rem.is_zero() && rem.degree() >= d.degree() {
            let shift = rem.degree() - d.degree();
            let c = rem.lead().mul_ref(&dl);
            let mut sub = vec![GaussRat::zero(); shift];
            sub.extend(d.0.iter().map(|x| x.mul_ref(&c)));
            rem = rem.sub(&UPoly(sub));
            quot[shift] = c;
        }
        (UPoly(quot).trim(), rem)
    }

    fn gcd(a: &UPoly, b: &UPoly) -> UPoly {
        let (mut a, mut b) = (a.clone(), b.clone());
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    fn exact_div(&self, d: &UPoly) -> UPoly {
        let (q, r) = self.divrem(d);
        debug_assert!(r.is_zero(), "inexact univariate division");
        q
    }
}

// Polynomial in q with coefficients in Q(i)[q̄]; index = q-exponent.
#[derive(Clone, Debug)]
struct Rec(Vec<UPoly>);

impl Rec {
    fn from_poly(p: &Poly) -> Rec {
        let dq = p.terms.keys().map(|m| m.0).max().unwrap_or(0) as usize;
        let mut rows: Vec<Vec<GaussRat>> = vec![Vec::new(); dq + 1];
        for (&(a, b), c) in &p.terms {
            let row = &mut rows[a as usize];
            if row.len() <= b as usize {
                row.resize(b as usize + 1, GaussRat::zero());
            }
            row[b as usize] = c.clone();
        }
        Rec(rows.into_iter().map(|r| UPoly(r).trim()).collect()).trim()
    }

    fn to_poly(&self) -> Poly {
        let mut out = Poly::zero();
        for (a, row) in self.0.iter().enumerate() {
            for (b, c) in row.0.iter().enumerate() {
                out.add_term((a as u32, b as u32), c);
            }
        }
        out
    }

    fn trim(mut self) -> Rec {
        while self.0.last().is_some_and(UPoly::is_zero) {
            self.0.pop();
        }
        self
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    fn content(&self) -> UPoly {
        self.0
            .iter()
            .filter(|c| !c.is_zero())
            .fold(UPoly(Vec::new()), |g, c| if g.is_zero() { c.monic() } else { UPoly::gcd(&g, c) })
    }

    fn div_content(&self, c: &UPoly) -> Rec {
        Rec(self.0.iter().map(|x| if x.is_zero() { x.clone() } else { x.exact_div(c) }).collect())
    }

    fn primitive(&self) -> Rec {
        let c = self.content();
        self.div_content(&c)
    }

    fn scale(&self, c: &UPoly) -> Rec {
        Rec(self.0.iter().map(|x| x.mul(c)).collect()).trim()
    }

    /// Pseudo-remainder of `self` by `d` (as polynomials in q).
    fn prem(&self, d: &Rec) -> Rec {
        let ld = d.0.last().expect("nonzero divisor").clone();
        let mut r = self.clone();
        while !r.is_zero() && r.degree() >= d.degree() {
            let shift = r.degree() - d.degree();
            let lr = r.0.last().unwrap().clone();
            let a = r.scale(&ld);
            let mut b = vec![UPoly(Vec::new()); shift];
            b.extend(d.0.iter().map(|x| x.mul(&lr)));
            let b = Rec(b);
            let n = a.0.len().max(b.0.len());
            let empty = UPoly(Vec::new());
            r = Rec(
                (0..n)
                    .map(|i| a.0.get(i).unwrap_or(&empty).sub(b.0.get(i).unwrap_or(&empty)))
                    .collect(),
            )
            .trim();
        }
        r
    }
}

fn rec_gcd(a: &Rec, b: &Rec) -> Rec {
    let ca = a.content();
    let cb = b.content();
    let c = UPoly::gcd(&ca, &cb);
    let mut pa = a.div_content(&ca);
    let mut pb = b.div_content(&cb);
    if pa.degree() < pb.degree() {
        std::mem::swap(&mut pa, &mut pb);
    }
    while !pb.is_zero() {
        if pb.degree() == 0 {
            // a primitive polynomial of q-degree zero is a unit
            pa = Rec(vec![UPoly(vec![GaussRat::one()])]);
            break;
        }
        let r = pa.prem(&pb);
        pa = pb;
        pb = if r.is_zero() { r } else { r.primitive() };
    }
    pa.scale(&c)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Poly {
        Poly::monomial((1, 0), GaussRat::one())
    }
    fn qb() -> Poly {
        Poly::monomial((0, 1), GaussRat::one())
    }
    fn c(n: i64) -> Poly {
        Poly::constant(GaussRat::from_int(n))
    }

    #[test]
    fn gcd_recovers_planted_factor() {
        // (q - q̄ + 2) * (q q̄ + i) and (q - q̄ + 2) * (q^2 - 3)
        let f = q().sub(&qb()).add(&c(2));
        let g = q().mul(&qb()).add(&Poly::constant(GaussRat::i()));
        let h = q().mul(&q()).sub(&c(3));
        let a = f.mul(&g);
        let b = f.mul(&h);
        assert_eq!(gcd(&a, &b), f.monic());
    }

    #[test]
    fn gcd_of_coprime_is_one() {
        let a = q().add(&qb());
        let b = q().sub(&c(1));
        assert!(gcd(&a, &b).is_one());
    }

    #[test]
    fn gcd_with_content_in_qbar() {
        // (q̄ + 1)(q - 1) and (q̄ + 1)(q + 1)
        let a = qb().add(&c(1)).mul(&q().sub(&c(1)));
        let b = qb().add(&c(1)).mul(&q().add(&c(1)));
        assert_eq!(gcd(&a, &b), qb().add(&c(1)));
    }

    #[test]
    fn exact_division_round_trip() {
        let f = q().mul(&qb()).sub(&c(1));
        let g = q().add(&qb().mul(&qb()));
        let p = f.mul(&g);
        assert_eq!(p.exact_div(&f), Some(g.clone()));
        assert_eq!(p.add(&c(1)).exact_div(&f), None);
    }
}
