//! Truncated operator models of SU_q(2) at a numeric parameter.
//!
//! On the basis `e_{n,k}` (`0 ≤ n ≤ N`, `k ∈ ℤ/M`, index `n·M + k`):
//!
//! ```text
//! γ e_{n,k} = q̄ⁿ e_{n,k+1}
//! α e_{n,k} = √(1 − |q|^{2n}) e_{n−1,k}      (α e_{0,k} = 0)
//! ```
//!
//! Then `αγ = q̄γα` and `αγ* = qγ*α` hold exactly, `γ` is normal,
//! `α*α + γ*γ = 1` holds exactly, and `αα* + |q|²γγ* = 1` fails only on the
//! top row `n = N`. For `|q| > 1` the model is built at `1/q` and transported
//! along `α ↦ α'*`, `γ ↦ q⁻¹γ'`.

use std::sync::Arc;

use nalgebra::DMatrix;
use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::algebra::{AlgebraError, Element, Gen, Presentation, Word};
use crate::exec::Exec;
use crate::scalars::{Scalar, ScalarError};

pub type CMatrix = DMatrix<Complex64>;

#[derive(Debug, Error, PartialEq)]
pub enum NumericError {
    #[error("zero-q: the parameter must be nonzero")]
    ZeroQ,
    #[error("bad-size: {0}")]
    BadSize(String),
    #[error("presentation-mismatch: {0}")]
    Presentation(String),
    #[error(transparent)]
    Scalar(#[from] ScalarError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A generator as a weighted map of basis vectors: column `j` goes to
/// `coeff · e_target`, or to zero.
#[derive(Clone, Debug)]
struct Shift(Vec<Option<(usize, Complex64)>>);

impl Shift {
    fn from_matrix(m: &CMatrix) -> Shift {
        let cols = (0..m.ncols())
            .map(|j| {
                let mut hit = None;
                for i in 0..m.nrows() {
                    let v = m[(i, j)];
                    if v != Complex64::new(0.0, 0.0) {
                        assert!(hit.is_none(), "generator is not monomial");
                        hit = Some((i, v));
                    }
                }
                hit
            })
            .collect();
        Shift(cols)
    }
}

#[derive(Clone, Debug)]
pub struct TruncatedRep {
    pub qval: Complex64,
    pub n_max: usize,
    pub m: usize,
    pub alpha: CMatrix,
    pub gamma: CMatrix,
    /// Indexed by generator id of the SU_q(2) presentation.
    shifts: Vec<Shift>,
    gen_ids: [Gen; 4],
}

fn ladder(qval: Complex64, n_max: usize, m: usize) -> (CMatrix, CMatrix) {
    let dim = (n_max + 1) * m;
    let mut alpha = CMatrix::zeros(dim, dim);
    let mut gamma = CMatrix::zeros(dim, dim);
    let qb = qval.conj();
    let r2 = qval.norm_sqr();
    for n in 0..=n_max {
        for k in 0..m {
            let j = n * m + k;
            gamma[(n * m + (k + 1) % m, j)] = qb.powu(n as u32);
            if n > 0 {
                alpha[((n - 1) * m + k, j)] = Complex64::new((1.0 - r2.powi(n as i32)).max(0.0).sqrt(), 0.0);
            }
        }
    }
    (alpha, gamma)
}

impl TruncatedRep {
    pub fn build(qval: Complex64, n_max: usize, m: usize) -> Result<TruncatedRep, NumericError> {
        if qval.norm() == 0.0 || !qval.is_finite() {
            return Err(NumericError::ZeroQ);
        }
        if n_max < 2 || m < 2 {
            return Err(NumericError::BadSize(format!("N = {n_max}, M = {m}; both must be at least 2")));
        }
        let (alpha, gamma) = if qval.norm() > 1.0 {
            let qi = qval.inv();
            let (a, g) = ladder(qi, n_max, m);
            (a.adjoint(), g * qi)
        } else {
            ladder(qval, n_max, m)
        };
        let p = crate::algebra::suq2_presentation(&Scalar::q())?;
        let id = |n: &str| p.generator(n).expect("builtin generator");
        let gen_ids = [id("a"), id("a'"), id("g"), id("g'")];
        let mut shifts = vec![Shift(Vec::new()); p.generators().len()];
        for (g, mat) in gen_ids.iter().zip([&alpha, &alpha.adjoint(), &gamma, &gamma.adjoint()]) {
            shifts[*g as usize] = Shift::from_matrix(mat);
        }
        Ok(TruncatedRep { qval, n_max, m, alpha, gamma, shifts, gen_ids })
    }

    pub fn dim(&self) -> usize {
        (self.n_max + 1) * self.m
    }

    /// Basis indices with `n ≤ limit`.
    pub fn columns_up_to(&self, limit: usize) -> std::ops::Range<usize> {
        0..(limit.min(self.n_max) + 1) * self.m
    }

    fn check(&self, p: &Presentation) -> Result<(), NumericError> {
        let names = ["a", "a'", "g", "g'"];
        let ok = p.is_atomic()
            && p.generators().len() == 4
            && names.iter().zip(&self.gen_ids).all(|(n, id)| p.generator(n) == Some(*id))
            && p.degree_of(self.gen_ids[2]) == 1;
        if !ok {
            return Err(NumericError::Presentation(format!("{} is not SU_q(2)", p.label())));
        }
        let param = p.param().ok_or_else(|| NumericError::Presentation("no parameter".into()))?;
        let pv = param.evaluate(self.qval)?;
        if (pv - self.qval).norm() > 1e-12 * self.qval.norm() {
            return Err(NumericError::Presentation(format!("parameter {param} does not evaluate to q")));
        }
        Ok(())
    }

    /// Image of basis vector `j` under the word (rightmost letter first).
    fn word_on_basis(&self, w: &[Gen], j: usize) -> Option<(usize, Complex64)> {
        let mut at = j;
        let mut c = Complex64::new(1.0, 0.0);
        for &g in w.iter().rev() {
            let (t, v) = self.shifts[g as usize].0[at]?;
            at = t;
            c *= v;
        }
        Some((at, c))
    }

    /// Columns `cols` of a linear combination of words.
    fn eval_terms(&self, terms: &[(Word, Complex64)], cols: std::ops::Range<usize>) -> CMatrix {
        let dim = self.dim();
        let mut out = CMatrix::zeros(dim, cols.len());
        for (ci, j) in cols.enumerate() {
            for (w, c) in terms {
                if let Some((i, v)) = self.word_on_basis(w.letters(), j) {
                    out[(i, ci)] += c * v;
                }
            }
        }
        out
    }

    fn numeric_terms<'a, I>(&self, terms: I) -> Result<Vec<(Word, Complex64)>, NumericError>
    where
        I: IntoIterator<Item = (&'a Word, &'a Scalar)>,
    {
        terms.into_iter().map(|(w, c)| Ok((w.clone(), c.evaluate(self.qval)?))).collect()
    }

    pub fn evaluate_element(&self, x: &Element) -> Result<CMatrix, NumericError> {
        self.check(x.presentation())?;
        let terms = self.numeric_terms(x.terms())?;
        Ok(self.eval_terms(&terms, 0..self.dim()))
    }

    /// Evaluates the unreduced sum `Σ c·w` by multiplying operators in word
    /// order.
    pub fn evaluate_raw(&self, p: &Presentation, raw: &[(Word, Scalar)]) -> Result<CMatrix, NumericError> {
        self.check(p)?;
        let terms = self.numeric_terms(raw.iter().map(|(w, c)| (w, c)))?;
        Ok(self.eval_terms(&terms, 0..self.dim()))
    }

    pub fn relation_residuals(&self) -> RelationResiduals {
        let a = &self.alpha;
        let g = &self.gamma;
        let (a_s, g_s) = (a.adjoint(), g.adjoint());
        let q = self.qval;
        let id = CMatrix::identity(self.dim(), self.dim());
        let rels: [(&str, CMatrix); 5] = [
            ("a*g - qb*g*a", a * g - g * a * q.conj()),
            ("a*g' - q*g'*a", a * &g_s - &g_s * a * q),
            ("a'*a + g'*g - 1", &a_s * a + &g_s * g - &id),
            ("a*a' + q*qb*g*g' - 1", a * &a_s + g * &g_s * Complex64::new(q.norm_sqr(), 0.0) - &id),
            ("g*g' - g'*g", g * &g_s - &g_s * g),
        ];
        let interior = self.columns_up_to(self.n_max - 1);
        let residuals = rels
            .iter()
            .map(|(name, m)| RelationResidual {
                relation: (*name).to_string(),
                interior: max_abs(&m.columns(0, interior.len()).into_owned()),
                full: max_abs(m),
            })
            .collect();
        RelationResiduals { qval: (q.re, q.im), n_max: self.n_max, m: self.m, residuals }
    }

    /// Singular values of γ, descending.
    pub fn gamma_singular_values(&self) -> Vec<f64> {
        let mut sv: Vec<f64> = self.gamma.clone().svd(false, false).singular_values.iter().copied().collect();
        sv.sort_by(|x, y| y.total_cmp(x));
        sv
    }

    /// `{|q|ⁿ}` (or `{|q|^{−n−1}}` for the transported model), each `M`
    /// times, descending.
    pub fn expected_gamma_spectrum(&self) -> Vec<f64> {
        let r = self.qval.norm();
        let mut out: Vec<f64> = (0..=self.n_max)
            .flat_map(|n| {
                let s = if r > 1.0 { r.powi(-(n as i32) - 1) } else { r.powi(n as i32) };
                std::iter::repeat_n(s, self.m)
            })
            .collect();
        out.sort_by(|x, y| y.total_cmp(x));
        out
    }

    pub fn spectrum_deviation(&self) -> f64 {
        self.gamma_singular_values()
            .iter()
            .zip(self.expected_gamma_spectrum())
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max)
    }

    /// Max deviation between the raw expression and its normal form on
    /// columns `n ≤ N − d`.
    pub fn oracle_compare(&self, p: &Arc<Presentation>, raw: &[(Word, Scalar)], d: usize) -> Result<f64, NumericError> {
        self.check(p)?;
        if d + 1 > self.n_max {
            return Err(NumericError::BadSize(format!("word length {d} needs N > {d}")));
        }
        let nf = Element::from_raw(p, raw.iter().cloned())?;
        let cols = self.columns_up_to(self.n_max - d);
        let lhs = self.eval_terms(&self.numeric_terms(raw.iter().map(|(w, c)| (w, c)))?, cols.clone());
        let rhs = self.eval_terms(&self.numeric_terms(nf.terms())?, cols);
        Ok(max_abs(&(lhs - rhs)))
    }
}

pub fn max_abs(m: &CMatrix) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResidual {
    pub relation: String,
    pub interior: f64,
    pub full: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RelationResiduals {
    pub qval: (f64, f64),
    pub n_max: usize,
    pub m: usize,
    pub residuals: Vec<RelationResidual>,
}

impl RelationResiduals {
    pub fn max_interior(&self) -> f64 {
        self.residuals.iter().map(|r| r.interior).fold(0.0, f64::max)
    }
}

/// A random unreduced expression: up to three words of length `1..=max_len`
/// with small Gaussian-integer coefficients.
pub fn random_raw(p: &Presentation, rng: &mut ChaCha8Rng, max_len: usize) -> Vec<(Word, Scalar)> {
    let n = p.generators().len() as Gen;
    let terms = rng.gen_range(1..=3);
    (0..terms)
        .map(|_| {
            let len = rng.gen_range(1..=max_len);
            let w: Word = (0..len).map(|_| rng.gen_range(0..n)).collect();
            let c = Scalar::from_int(rng.gen_range(-3..=3)).add(&Scalar::i().mul(&Scalar::from_int(rng.gen_range(-2..=2))));
            let c = if c.is_zero() { Scalar::one() } else { c };
            (w, c)
        })
        .collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct CompareReport {
    pub qval: (f64, f64),
    pub expressions: usize,
    pub max_len: usize,
    pub deviations: Vec<f64>,
    pub max_deviation: f64,
}

/// `count` random expressions of length at most `max_len`, seeded per
/// expression so sequential and parallel runs agree.
pub fn oracle_batch(
    rep: &TruncatedRep,
    p: &Arc<Presentation>,
    count: usize,
    max_len: usize,
    seed: u64,
    exec: Exec,
) -> Result<CompareReport, NumericError> {
    let results = exec.map_range(count, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
        let raw = random_raw(p, &mut rng, max_len);
        rep.oracle_compare(p, &raw, max_len)
    });
    let deviations = results.into_iter().collect::<Result<Vec<_>, _>>()?;
    let max_deviation = deviations.iter().copied().fold(0.0, f64::max);
    Ok(CompareReport { qval: (rep.qval.re, rep.qval.im), expressions: count, max_len, deviations, max_deviation })
}

#[cfg(test)]
mod tests;
