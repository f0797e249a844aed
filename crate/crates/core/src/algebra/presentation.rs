use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::{Arc, RwLock};

use crate::scalars::{Notation, Scalar};

use super::word::{Gen, Word};
use super::AlgebraError;

/// Deepest rewrite chain tolerated before a reduction is declared
/// non-terminating.
pub(crate) const MAX_DEPTH: usize = 1000;

static NEXT_UID: AtomicU64 = AtomicU64::new(1);

/// One row of the generator table.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    /// Surface name, e.g. `g'` or `j2(a)`.
    pub name: String,
    /// Pretty name, e.g. `γ*` or `j2(α)`.
    pub pretty: String,
    /// Name inside the atomic factor this generator comes from.
    pub local_name: String,
    pub degree: i32,
    pub adjoint: Gen,
    /// Leg tag, starting at 1.
    pub leg: usize,
    /// Termination weight: rules may trade heavy letters for light ones.
    pub weight: u32,
}

/// `lhs → Σ c·w`. Left-hand sides have one or two letters.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteRule {
    pub lhs: Word,
    pub rhs: Vec<(Word, Scalar)>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub(crate) struct Atom {
    pub uid: u64,
    pub flipped: bool,
}

/// Structural identity of a presentation: its atomic factors (in leg order)
/// and the twist between every pair of legs. Two presentations with equal
/// keys have identical generator tables and equivalent rule sets.
#[derive(Clone, Debug, PartialEq)]
pub struct PresKey {
    pub(crate) atoms: Vec<Atom>,
    pub(crate) twist: TwistTable,
}

/// Twist `ζ_{ij}` for each unordered pair of legs `i < j` (zero-based).
#[derive(Clone, Debug, PartialEq, Default)]
pub struct TwistTable(pub(crate) Vec<((usize, usize), Scalar)>);

impl TwistTable {
    pub fn get(&self, i: usize, j: usize) -> Option<&Scalar> {
        let key = (i.min(j), i.max(j));
        self.0.iter().find(|(k, _)| *k == key).map(|(_, z)| z)
    }

    pub fn pairs(&self) -> &[((usize, usize), Scalar)] {
        &self.0
    }

    pub(crate) fn insert(&mut self, i: usize, j: usize, z: Scalar) {
        self.0.push(((i.min(j), i.max(j)), z));
        self.0.sort_by_key(|a| a.0);
    }
}

/// A finitely presented graded *-algebra: generator table plus directed
/// rewrite rules. Immutable after construction; the word-reduction memo is an
/// internal cache whose presence never changes any result.
pub struct Presentation {
    pub(crate) key: PresKey,
    pub(crate) label: String,
    pub(crate) gens: Vec<Generator>,
    pub(crate) rules: Vec<RewriteRule>,
    pub(crate) param: Option<Scalar>,
    /// Atomic factor of each leg; empty for an atomic presentation.
    pub(crate) factors: Vec<Arc<Presentation>>,
    /// First generator index of each leg.
    pub(crate) leg_offsets: Vec<usize>,
    single: Vec<Option<u32>>,
    pairs: Vec<Option<u32>>,
    memo: Option<RwLock<HashMap<Word, Arc<[(Word, Scalar)]>>>>,
}

impl fmt::Debug for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Presentation")
            .field("label", &self.label)
            .field("generators", &self.gens.iter().map(|g| &g.name).collect::<Vec<_>>())
            .field("rules", &self.rules.len())
            .finish()
    }
}

pub(crate) type Terms = BTreeMap<Word, Scalar>;

pub(crate) fn accumulate(terms: &mut Terms, w: Word, c: Scalar) {
    if c.is_zero() {
        return;
    }
    match terms.entry(w) {
        std::collections::btree_map::Entry::Vacant(e) => {
            e.insert(c);
        }
        std::collections::btree_map::Entry::Occupied(mut e) => {
            let s = e.get().add(&c);
            if s.is_zero() {
                e.remove();
            } else {
                *e.get_mut() = s;
            }
        }
    }
}

impl Presentation {
    pub(crate) fn fresh_uid() -> u64 {
        NEXT_UID.fetch_add(1, Ordering::Relaxed)
    }

    pub(crate) fn assemble(
        key: PresKey,
        label: String,
        gens: Vec<Generator>,
        rules: Vec<RewriteRule>,
        param: Option<Scalar>,
        factors: Vec<Arc<Presentation>>,
        leg_offsets: Vec<usize>,
        memo: bool,
    ) -> Presentation {
        let n = gens.len();
        let mut single = vec![None; n];
        let mut pairs = vec![None; n * n];
        for (idx, r) in rules.iter().enumerate() {
            let l = r.lhs.letters();
            let slot = match l {
                [a] => &mut single[*a as usize],
                [a, b] => &mut pairs[*a as usize * n + *b as usize],
                _ => panic!("rule left-hand sides have one or two letters"),
            };
            if slot.is_none() {
                *slot = Some(idx as u32);
            }
        }
        Presentation {
            key,
            label,
            gens,
            rules,
            param,
            factors,
            leg_offsets,
            single,
            pairs,
            memo: memo.then(|| RwLock::new(HashMap::new())),
        }
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn key(&self) -> &PresKey {
        &self.key
    }

    pub fn generators(&self) -> &[Generator] {
        &self.gens
    }

    pub fn rules(&self) -> &[RewriteRule] {
        &self.rules
    }

    /// The scalar playing the role of `q` in this presentation's rules.
    pub fn param(&self) -> Option<&Scalar> {
        self.param.as_ref()
    }

    pub fn twist(&self) -> &TwistTable {
        &self.key.twist
    }

    pub fn num_legs(&self) -> usize {
        self.key.atoms.len()
    }

    pub fn is_atomic(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn generator(&self, name: &str) -> Option<Gen> {
        self.gens.iter().position(|g| g.name == name).map(|i| i as Gen)
    }

    pub fn degree_of(&self, g: Gen) -> i32 {
        self.gens[g as usize].degree
    }

    pub fn adjoint_of(&self, g: Gen) -> Gen {
        self.gens[g as usize].adjoint
    }

    pub fn same_as(&self, other: &Presentation) -> bool {
        std::ptr::eq(self, other) || self.key == other.key
    }

    pub fn memo_enabled(&self) -> bool {
        self.memo.is_some()
    }

    pub fn word_degree(&self, w: &Word) -> i32 {
        w.letters().iter().map(|&g| self.gens[g as usize].degree).sum()
    }

    pub fn render_word(&self, w: &Word, notation: Notation) -> String {
        if w.is_empty() {
            return "1".into();
        }
        let mut parts: Vec<String> = Vec::new();
        let letters = w.letters();
        let mut i = 0;
        while i < letters.len() {
            let g = letters[i];
            let mut run = 1;
            while i + run < letters.len() && letters[i + run] == g {
                run += 1;
            }
            let gen = &self.gens[g as usize];
            let name = match notation {
                Notation::Ascii => &gen.name,
                Notation::Unicode => &gen.pretty,
            };
            parts.push(if run == 1 { name.clone() } else { format!("{name}^{run}") });
            i += run;
        }
        parts.join(notation.times())
    }

    /// Leftmost redex: `(position, length, rule index)`. A one-letter redex
    /// wins over a two-letter redex starting at the same position.
    pub(crate) fn find_redex(&self, w: &[Gen]) -> Option<(usize, usize, usize)> {
        let n = self.gens.len();
        for i in 0..w.len() {
            if let Some(r) = self.single[w[i] as usize] {
                return Some((i, 1, r as usize));
            }
            if i + 1 < w.len() {
                if let Some(r) = self.pairs[w[i] as usize * n + w[i + 1] as usize] {
                    return Some((i, 2, r as usize));
                }
            }
        }
        None
    }

    /// Every redex in `w`, including all rules sharing a left-hand side.
    pub(crate) fn all_redexes(&self, w: &[Gen]) -> Vec<(usize, usize, usize)> {
        let mut out = Vec::new();
        for (idx, r) in self.rules.iter().enumerate() {
            let l = r.lhs.letters();
            if l.len() > w.len() {
                continue;
            }
            for i in 0..=w.len() - l.len() {
                if &w[i..i + l.len()] == l {
                    out.push((i, l.len(), idx));
                }
            }
        }
        out.sort();
        out
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find_redex(w.letters()).is_none()
    }

    pub(crate) fn reduce_word(&self, w: &Word, depth: usize) -> Result<Arc<[(Word, Scalar)]>, AlgebraError> {
        if depth > MAX_DEPTH {
            return Err(AlgebraError::NonTerminating(self.label.clone()));
        }
        if let Some(memo) = &self.memo {
            if let Some(hit) = memo.read().unwrap().get(w) {
                return Ok(hit.clone());
            }
        }
        let result: Arc<[(Word, Scalar)]> = match self.find_redex(w.letters()) {
            None => Arc::from(vec![(w.clone(), Scalar::one())]),
            Some((at, len, r)) => {
                let mut acc = Terms::new();
                for (rw, c) in &self.rules[r].rhs {
                    let next = w.splice(at, len, rw);
                    for (u, d) in self.reduce_word(&next, depth + 1)?.iter() {
                        accumulate(&mut acc, u.clone(), c.mul(d));
                    }
                }
                acc.into_iter().collect::<Vec<_>>().into()
            }
        };
        if let Some(memo) = &self.memo {
            memo.write().unwrap().insert(w.clone(), result.clone());
        }
        Ok(result)
    }

    /// Normal form of a raw linear combination of words.
    pub(crate) fn normalize_terms<I>(&self, raw: I) -> Result<Terms, AlgebraError>
    where
        I: IntoIterator<Item = (Word, Scalar)>,
    {
        let mut acc = Terms::new();
        for (w, c) in raw {
            if c.is_zero() {
                continue;
            }
            for (u, d) in self.reduce_word(&w, 0)?.iter() {
                accumulate(&mut acc, u.clone(), c.mul(d));
            }
        }
        Ok(acc)
    }

    /// Static soundness problems: rules that change degree, and rules that do
    /// not strictly decrease the termination measure (weight, then
    /// inversions).
    pub fn validate(&self) -> Vec<String> {
        let mut problems = Vec::new();
        for (idx, r) in self.rules.iter().enumerate() {
            let d = self.word_degree(&r.lhs);
            for (w, _) in &r.rhs {
                if self.word_degree(w) != d {
                    problems.push(format!(
                        "rule {idx} ({}) is not degree-homogeneous",
                        self.render_word(&r.lhs, Notation::Ascii)
                    ));
                }
                if !self.decreases(&r.lhs, w) {
                    problems.push(format!(
                        "rule {idx} ({} -> {}) does not decrease the termination measure",
                        self.render_word(&r.lhs, Notation::Ascii),
                        self.render_word(w, Notation::Ascii)
                    ));
                }
            }
        }
        problems
    }

    fn weight(&self, w: &Word) -> u32 {
        w.letters().iter().map(|&g| self.gens[g as usize].weight).sum()
    }

    fn decreases(&self, from: &Word, to: &Word) -> bool {
        let (wf, wt) = (self.weight(from), self.weight(to));
        if wt != wf {
            return wt < wf;
        }
        let mut a = from.letters().to_vec();
        let mut b = to.letters().to_vec();
        a.sort_unstable();
        b.sort_unstable();
        a == b && inversions(to) < inversions(from)
    }
}

fn inversions(w: &Word) -> usize {
    let l = w.letters();
    let mut n = 0;
    for i in 0..l.len() {
        for j in i + 1..l.len() {
            if l[i] > l[j] {
                n += 1;
            }
        }
    }
    n
}

/// Assembles an atomic presentation from generator pairs and rules written
/// with generator names.
pub struct PresentationBuilder {
    label: String,
    gens: Vec<Generator>,
    rules: Vec<(Vec<String>, Vec<(Vec<String>, Scalar)>)>,
    param: Option<Scalar>,
    memo: bool,
    greek: bool,
}

fn prettify(name: &str, greek: bool) -> String {
    name.chars()
        .map(|c| match c {
            'a' if greek => "α".to_string(),
            'g' if greek => "γ".to_string(),
            '\'' => "*".to_string(),
            other => other.to_string(),
        })
        .collect()
}

impl PresentationBuilder {
    pub fn new(label: impl Into<String>) -> Self {
        PresentationBuilder { label: label.into(), gens: Vec::new(), rules: Vec::new(), param: None, memo: true, greek: true }
    }

    pub fn param(mut self, q: Scalar) -> Self {
        self.param = Some(q);
        self
    }

    /// Pretty-print `a` and `g` as `α` and `γ` (on by default).
    pub fn greek(mut self, enabled: bool) -> Self {
        self.greek = enabled;
        self
    }

    pub fn memo(mut self, enabled: bool) -> Self {
        self.memo = enabled;
        self
    }

    /// Adds `name` and its adjoint `name'` with degrees `degree` and
    /// `-degree`, next to each other in the normal order.
    pub fn pair(mut self, name: &str, degree: i32, weight: u32) -> Self {
        let i = self.gens.len() as Gen;
        let star = format!("{name}'");
        for (n, d, adj) in [(name.to_string(), degree, i + 1), (star, -degree, i)] {
            self.gens.push(Generator {
                pretty: prettify(&n, self.greek),
                local_name: n.clone(),
                name: n,
                degree: d,
                adjoint: adj,
                leg: 1,
                weight,
            });
        }
        self
    }

    /// `lhs → Σ c·w`, letters given by name.
    pub fn rule(mut self, lhs: &[&str], rhs: Vec<(Scalar, Vec<&str>)>) -> Self {
        self.rules.push((
            lhs.iter().map(|s| s.to_string()).collect(),
            rhs.into_iter().map(|(c, w)| (w.into_iter().map(String::from).collect(), c)).collect(),
        ));
        self
    }

    pub fn build(self) -> Result<Arc<Presentation>, AlgebraError> {
        let lookup = |name: &str| -> Result<Gen, AlgebraError> {
            self.gens
                .iter()
                .position(|g| g.name == name)
                .map(|i| i as Gen)
                .ok_or_else(|| AlgebraError::UnknownGenerator(name.to_string()))
        };
        let word = |names: &[String]| -> Result<Word, AlgebraError> {
            names.iter().map(|n| lookup(n)).collect::<Result<Word, _>>()
        };
        let mut rules = Vec::new();
        for (lhs, rhs) in &self.rules {
            let lhs = word(lhs)?;
            if lhs.is_empty() || lhs.len() > 2 {
                return Err(AlgebraError::InvalidRule(format!("left-hand side of length {}", lhs.len())));
            }
            let mut terms = Terms::new();
            for (w, c) in rhs {
                accumulate(&mut terms, word(w)?, c.clone());
            }
            rules.push(RewriteRule { lhs, rhs: terms.into_iter().collect() });
        }
        let key = PresKey { atoms: vec![Atom { uid: Presentation::fresh_uid(), flipped: false }], twist: TwistTable::default() };
        Ok(Arc::new(Presentation::assemble(
            key,
            self.label,
            self.gens,
            rules,
            self.param,
            Vec::new(),
            vec![0],
            self.memo,
        )))
    }
}
