use std::cmp::Ordering;

use smallvec::SmallVec;

/// Index of a generator within its presentation's generator table.
pub type Gen = u16;

/// A finite sequence of generators. Words are ordered shortlex: shorter words
/// first, then lexicographically by generator index.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(pub(crate) SmallVec<[Gen; 8]>);

impl Word {
    pub fn empty() -> Word {
        Word(SmallVec::new())
    }

    pub fn letter(g: Gen) -> Word {
        Word(SmallVec::from_slice(&[g]))
    }

    pub fn from_slice(gs: &[Gen]) -> Word {
        Word(SmallVec::from_slice(gs))
    }

    pub fn letters(&self) -> &[Gen] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// `prefix · middle · suffix` where the prefix ends at `at` and the
    /// replaced segment has length `len`.
    pub(crate) fn splice(&self, at: usize, len: usize, middle: &Word) -> Word {
        let mut v: SmallVec<[Gen; 8]> = SmallVec::with_capacity(self.len() - len + middle.len());
        v.extend_from_slice(&self.0[..at]);
        v.extend_from_slice(&middle.0);
        v.extend_from_slice(&self.0[at + len..]);
        Word(v)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.0.len().cmp(&other.0.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl FromIterator<Gen> for Word {
    fn from_iter<I: IntoIterator<Item = Gen>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}
