//! Exact coefficients: rational functions in the commuting indeterminates
//! `q` and `q̄` over the Gaussian rationals.
//!
//! `q̄` is an independent indeterminate. Conjugation swaps `q ↔ q̄` and sends
//! `i ↦ −i`, so it is a ring involution of the field and every identity of
//! the algebras built on top of it holds for all complex `q ≠ 0` at once.
//!
//! A [`Scalar`] is kept in canonical form: numerator and denominator are
//! coprime polynomials with non-negative exponents, and the lexicographically
//! leading coefficient of the denominator is one. Equality is therefore
//! structural.

mod gauss;
mod poly;

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use thiserror::Error;

pub use gauss::GaussRat;
pub use poly::{gcd as poly_gcd, Mono, Poly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ScalarError {
    #[error("zero-divisor: division by the zero scalar")]
    ZeroDivisor,
    #[error("pole-at-q: denominator vanishes at q = {0}")]
    PoleAtQ(String),
    #[error("zero-divisor: q = 0 is not allowed")]
    ZeroQ,
}

/// Output style shared by every renderer in the crate.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Notation {
    /// The parseable CLI syntax: `q`, `qb`, `zeta`, `a`, `g'`.
    #[default]
    Ascii,
    /// Pretty output: `q̄`, `α`, `γ*`, with `·` for products.
    Unicode,
}

impl Notation {
    pub fn times(self) -> &'static str {
        match self {
            Notation::Ascii => "*",
            Notation::Unicode => "·",
        }
    }
}

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Scalar {
    num: Poly,
    den: Poly,
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl Scalar {
    fn from_parts(num: Poly, den: Poly) -> Scalar {
        debug_assert!(!den.is_zero());
        let mut s = Scalar { num, den };
        s.canonicalize();
        s
    }

    fn canonicalize(&mut self) {
        if self.num.is_zero() {
            self.den = Poly::one();
            return;
        }
        if !self.den.is_one() {
            let g = poly::gcd(&self.num, &self.den);
            if !g.is_one() {
                if g.is_monomial() {
                    let m = *g.leading().unwrap().0;
                    self.num = self.num.unshift(m);
                    self.den = self.den.unshift(m);
                } else {
                    self.num = self.num.exact_div(&g).expect("gcd divides numerator");
                    self.den = self.den.exact_div(&g).expect("gcd divides denominator");
                }
            }
        }
        let lc = self.den.leading().map(|(_, c)| c.clone()).expect("nonzero denominator");
        if !lc.is_one() {
            let inv = lc.inv().unwrap();
            self.num = self.num.scale(&inv);
            self.den = self.den.scale(&inv);
        }
    }

    pub fn zero() -> Scalar {
        Scalar { num: Poly::zero(), den: Poly::one() }
    }

    pub fn one() -> Scalar {
        Scalar::from_int(1)
    }

    pub fn from_int(n: i64) -> Scalar {
        Scalar { num: Poly::constant(GaussRat::from_int(n)), den: Poly::one() }
    }

    pub fn from_gauss(c: GaussRat) -> Scalar {
        Scalar { num: Poly::constant(c), den: Poly::one() }
    }

    pub fn from_ratio(n: i64, d: i64) -> Scalar {
        assert!(d != 0, "zero denominator");
        Scalar::from_gauss(GaussRat::from_rational(BigRational::new(BigInt::from(n), BigInt::from(d))))
    }

    pub fn from_rational(r: BigRational) -> Scalar {
        Scalar::from_gauss(GaussRat::from_rational(r))
    }

    /// The imaginary unit.
    pub fn i() -> Scalar {
        Scalar::from_gauss(GaussRat::i())
    }

    /// The indeterminate `q`.
    pub fn q() -> Scalar {
        Scalar { num: Poly::monomial((1, 0), GaussRat::one()), den: Poly::one() }
    }

    /// The indeterminate `q̄`.
    pub fn qbar() -> Scalar {
        Scalar { num: Poly::monomial((0, 1), GaussRat::one()), den: Poly::one() }
    }

    /// `ζ = q/q̄`.
    pub fn zeta() -> Scalar {
        Scalar::q().div(&Scalar::qbar())
    }

    /// Builds `num/den` from arbitrary polynomials.
    pub fn from_polys(num: Poly, den: Poly) -> Result<Scalar, ScalarError> {
        if den.is_zero() {
            return Err(ScalarError::ZeroDivisor);
        }
        Ok(Scalar::from_parts(num, den))
    }

    pub fn numerator(&self) -> &Poly {
        &self.num
    }

    pub fn denominator(&self) -> &Poly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True for a constant in `ℚ(i)`.
    pub fn is_constant(&self) -> bool {
        self.den.is_one() && self.num.terms().all(|(m, _)| *m == (0, 0))
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        if self.den == other.den {
            return Scalar::from_parts(self.num.add(&other.num), self.den.clone());
        }
        Scalar::from_parts(
            self.num.mul(&other.den).add(&other.num.mul(&self.den)),
            self.den.mul(&other.den),
        )
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Scalar {
        Scalar { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        if self.is_zero() || other.is_zero() {
            return Scalar::zero();
        }
        if other.is_one() {
            return self.clone();
        }
        if self.is_one() {
            return other.clone();
        }
        Scalar::from_parts(self.num.mul(&other.num), self.den.mul(&other.den))
    }

    pub fn inv(&self) -> Result<Scalar, ScalarError> {
        if self.is_zero() {
            return Err(ScalarError::ZeroDivisor);
        }
        Ok(Scalar::from_parts(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar, ScalarError> {
        Ok(self.mul(&other.inv()?))
    }

    /// Panics on division by zero; use [`Scalar::checked_div`] otherwise.
    pub fn div(&self, other: &Scalar) -> Scalar {
        self.checked_div(other).expect("division by zero scalar")
    }

    /// Integer power; negative exponents require a nonzero base.
    pub fn pow(&self, n: i32) -> Scalar {
        let base = if n < 0 { self.inv().expect("negative power of zero") } else { self.clone() };
        let mut e = n.unsigned_abs();
        let mut acc = Scalar::one();
        let mut b = base;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&b);
            }
            e >>= 1;
            if e > 0 {
                b = Scalar::mul(&b, &b);
            }
        }
        acc
    }

    /// The involution `q ↔ q̄`, `i ↦ −i`.
    pub fn conj(&self) -> Scalar {
        let mut s = Scalar { num: self.num.conj(), den: self.den.conj() };
        s.canonicalize();
        s
    }

    /// Specialises `q ↦ qval`, `q̄ ↦ conj(qval)`.
    pub fn evaluate(&self, qval: Complex64) -> Result<Complex64, ScalarError> {
        if qval.norm() == 0.0 {
            return Err(ScalarError::ZeroQ);
        }
        let d = self.den.eval(qval);
        if d.norm() <= 1e-12 * self.den.eval_scale(qval).max(f64::MIN_POSITIVE) {
            return Err(ScalarError::PoleAtQ(format!("{qval}")));
        }
        Ok(self.num.eval(qval) / d)
    }

    /// True when the rendered form should be written with a leading minus.
    pub(crate) fn looks_negative(&self) -> bool {
        self.num.len() == 1 && self.num.leading().is_some_and(|(_, c)| c.looks_negative())
    }

    pub(crate) fn is_compound(&self) -> bool {
        !self.den.is_one() || self.num.len() > 1
    }

    pub fn render(&self, notation: Notation) -> String {
        let num = render_poly(&self.num, notation);
        if self.den.is_one() {
            return num;
        }
        let den = render_poly(&self.den, notation);
        let wrap = |s: String, p: &Poly| {
            if p.len() > 1 || (p.is_monomial() && s.contains('*') && !s.starts_with('(')) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(num, &self.num), wrap(den, &self.den))
    }
}

fn render_mono(m: Mono, notation: Notation) -> String {
    let (q, qb) = match notation {
        Notation::Ascii => ("q", "qb"),
        Notation::Unicode => ("q", "q̄"),
    };
    let mut parts = Vec::new();
    for (name, e) in [(q, m.0), (qb, m.1)] {
        match e {
            0 => {}
            1 => parts.push(name.to_string()),
            _ => parts.push(format!("{name}^{e}")),
        }
    }
    parts.join(notation.times())
}

fn render_poly(p: &Poly, notation: Notation) -> String {
    if p.is_zero() {
        return "0".into();
    }
    let mut out = String::new();
    for (k, (m, c)) in p.terms().rev().enumerate() {
        let neg = c.looks_negative();
        let c = if neg { -c } else { c.clone() };
        if k == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        let mono = render_mono(*m, notation);
        if mono.is_empty() {
            out.push_str(&c.to_string());
        } else if c.is_one() {
            out.push_str(&mono);
        } else {
            out.push_str(&format!("{c}{}{mono}", notation.times()));
        }
    }
    if notation == Notation::Unicode {
        out = out.replace("zeta", "ζ");
    }
    out
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(Notation::Ascii))
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $inner:ident) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$inner(self, rhs)
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                Scalar::$inner(&self, &rhs)
            }
        }
        impl $trait<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                Scalar::$inner(&self, rhs)
            }
        }
    };
}

forward_binop!(Add, add, add);
forward_binop!(Sub, sub, sub);
forward_binop!(Mul, mul, mul);
forward_binop!(Div, div, div);

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(self)
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar::neg(&self)
    }
}
