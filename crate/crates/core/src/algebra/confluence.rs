//! Local-confluence and termination checks for a presentation's rule set.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exec::Exec;
use crate::scalars::{Notation, Scalar};

use super::presentation::{accumulate, Presentation, Terms};
use super::word::{Gen, Word};

/// Step budget for one randomized reduction.
const RANDOM_STEP_LIMIT: usize = 20_000;

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct Divergence {
    /// `critical-pair`, `exhaustive` or `random`.
    pub source: String,
    pub word: String,
    pub left: String,
    pub right: String,
}

#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct ConfluenceReport {
    pub presentation: String,
    pub maxlen: usize,
    pub trials: usize,
    pub seed: u64,
    pub critical_pairs: usize,
    pub words_checked: usize,
    pub divergences: Vec<Divergence>,
    pub measure_violations: Vec<String>,
    pub nontermination: Vec<String>,
}

impl ConfluenceReport {
    pub fn passed(&self) -> bool {
        self.divergences.is_empty() && self.measure_violations.is_empty() && self.nontermination.is_empty()
    }
}

enum Outcome {
    Joinable,
    Diverges(Divergence),
    Loops(String),
}

fn render_terms(p: &Presentation, t: &Terms) -> String {
    if t.is_empty() {
        return "0".into();
    }
    t.iter()
        .map(|(w, c)| format!("({})*{}", c.render(Notation::Ascii), p.render_word(w, Notation::Ascii)))
        .collect::<Vec<_>>()
        .join(" + ")
}

fn one_step(p: &Presentation, w: &Word, at: usize, len: usize, rule: usize) -> Vec<(Word, Scalar)> {
    p.rules[rule].rhs.iter().map(|(rw, c)| (w.splice(at, len, rw), c.clone())).collect()
}

/// Rewrites `w` once at every redex, normalizes each result and compares
/// them all with the first.
fn check_word(p: &Presentation, w: &Word, source: &str) -> Outcome {
    let redexes = p.all_redexes(w.letters());
    if redexes.len() < 2 {
        return Outcome::Joinable;
    }
    let mut reference: Option<Terms> = None;
    for (at, len, rule) in redexes {
        let nf = match p.normalize_terms(one_step(p, w, at, len, rule)) {
            Ok(t) => t,
            Err(e) => return Outcome::Loops(format!("{}: {e}", p.render_word(w, Notation::Ascii))),
        };
        match &reference {
            None => reference = Some(nf),
            Some(r) if *r != nf => {
                return Outcome::Diverges(Divergence {
                    source: source.into(),
                    word: p.render_word(w, Notation::Ascii),
                    left: render_terms(p, r),
                    right: render_terms(p, &nf),
                })
            }
            Some(_) => {}
        }
    }
    Outcome::Joinable
}

/// Overlap and inclusion words of every pair of left-hand sides.
fn critical_words(p: &Presentation) -> Vec<Word> {
    let mut out = Vec::new();
    for (i, r1) in p.rules.iter().enumerate() {
        for (j, r2) in p.rules.iter().enumerate() {
            let (a, b) = (r1.lhs.letters(), r2.lhs.letters());
            for k in 1..a.len().min(b.len()) + 1 {
                if k < b.len() && a[a.len() - k..] == b[..k] {
                    let mut v = a.to_vec();
                    v.extend_from_slice(&b[k..]);
                    out.push(Word::from_slice(&v));
                }
            }
            let contains = b.len() <= a.len() && a.windows(b.len()).any(|s| s == b);
            if i != j && contains {
                out.push(r1.lhs.clone());
            }
        }
    }
    out.sort();
    out.dedup();
    out
}

fn all_words(n: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::empty()];
    let mut layer = vec![Word::empty()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(layer.len() * n);
        for w in &layer {
            for g in 0..n {
                next.push(w.concat(&Word::letter(g as Gen)));
            }
        }
        out.extend(next.iter().cloned());
        layer = next;
    }
    out
}

/// Reduces `w` choosing a random term and a random redex at every step.
fn random_reduce(p: &Presentation, w: &Word, rng: &mut ChaCha8Rng) -> Result<Terms, String> {
    let mut terms = Terms::new();
    terms.insert(w.clone(), Scalar::one());
    for _ in 0..RANDOM_STEP_LIMIT {
        let reducible: Vec<(Word, Vec<(usize, usize, usize)>)> = terms
            .keys()
            .filter_map(|u| {
                let r = p.all_redexes(u.letters());
                (!r.is_empty()).then(|| (u.clone(), r))
            })
            .collect();
        if reducible.is_empty() {
            return Ok(terms);
        }
        let (u, redexes) = &reducible[rng.gen_range(0..reducible.len())];
        let (at, len, rule) = redexes[rng.gen_range(0..redexes.len())];
        let c = terms.remove(u).expect("term present");
        for (v, d) in one_step(p, u, at, len, rule) {
            accumulate(&mut terms, v, c.mul(&d));
        }
    }
    Err(format!("{}: random reduction exceeded {RANDOM_STEP_LIMIT} steps", p.render_word(w, Notation::Ascii)))
}

/// Critical pairs, exhaustive one-step divergence on all words up to
/// `maxlen`, and `trials` random words reduced in random order against the
/// leftmost normal form.
pub fn confluence_check(p: &Presentation, maxlen: usize, trials: usize, seed: u64, exec: Exec) -> ConfluenceReport {
    let mut report = ConfluenceReport {
        presentation: p.label().to_string(),
        maxlen,
        trials,
        seed,
        critical_pairs: 0,
        words_checked: 0,
        divergences: Vec::new(),
        measure_violations: p.validate(),
        nontermination: Vec::new(),
    };
    let absorb = |report: &mut ConfluenceReport, outcomes: Vec<Outcome>| {
        for o in outcomes {
            match o {
                Outcome::Joinable => {}
                Outcome::Diverges(d) => report.divergences.push(d),
                Outcome::Loops(s) => report.nontermination.push(s),
            }
        }
    };

    let critical: Vec<Word> = critical_words(p).into_iter().filter(|w| w.len() <= maxlen).collect();
    report.critical_pairs = critical.len();
    let outcomes = exec.map(&critical, |w| check_word(p, w, "critical-pair"));
    absorb(&mut report, outcomes);

    let words = all_words(p.gens.len(), maxlen);
    report.words_checked = words.len();
    let outcomes = exec.map(&words, |w| check_word(p, w, "exhaustive"));
    absorb(&mut report, outcomes);

    let n = p.gens.len();
    let outcomes = exec.map_range(trials, |t| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.wrapping_add(t as u64));
        let len = rng.gen_range(1..=maxlen.max(1));
        let w: Word = (0..len).map(|_| rng.gen_range(0..n) as Gen).collect();
        let leftmost = match p.normalize_terms([(w.clone(), Scalar::one())]) {
            Ok(t) => t,
            Err(e) => return Outcome::Loops(format!("{}: {e}", p.render_word(&w, Notation::Ascii))),
        };
        match random_reduce(p, &w, &mut rng) {
            Err(s) => Outcome::Loops(s),
            Ok(t) if t == leftmost => Outcome::Joinable,
            Ok(t) => Outcome::Diverges(Divergence {
                source: "random".into(),
                word: p.render_word(&w, Notation::Ascii),
                left: render_terms(p, &leftmost),
                right: render_terms(p, &t),
            }),
        }
    });
    absorb(&mut report, outcomes);
    report.nontermination.sort();
    report.nontermination.dedup();
    report
}
