//! The word problem for homogeneous presentations, divisor enumeration,
//! left-gcds, and a brute-force common-multiple oracle.
//!
//! Everything here works by breadth-first closure under one-step
//! derivations: replace a factor matching one side of a relation by the
//! other side. Homogeneity keeps every ≡-class inside the finite set of
//! words of one length, which makes all of these operations terminate.
//! Non-homogeneous presentations are rejected up front.

use std::collections::{BTreeSet, HashMap, HashSet, VecDeque};
use std::rc::Rc;

use thiserror::Error;

use crate::presentation::Presentation;
use crate::words::{Letter, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum WordProblemError {
    #[error("presentation is not homogeneous; the word problem is undecided here")]
    NotHomogeneous,
    #[error("words use letters outside the presentation's alphabet")]
    ForeignWord,
    #[error("left-gcd is ambiguous: found {0} maximal common divisors")]
    AmbiguousGcd(usize),
}

/// The finite ≡-class of a word, all members of one length.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct EquivalenceClass {
    /// Lexicographically least member under the alphabet order.
    pub representative: Word,
    /// All members, sorted.
    pub members: Vec<Word>,
}

/// A deduplicated, sorted set of canonical representatives.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct ElementSet {
    reps: Vec<Word>,
}

impl ElementSet {
    pub fn from_sorted_set(set: BTreeSet<Word>) -> Self {
        ElementSet {
            reps: set.into_iter().collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.reps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.reps.is_empty()
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.reps.binary_search(w).is_ok()
    }

    pub fn iter(&self) -> impl Iterator<Item = &Word> {
        self.reps.iter()
    }

    pub fn as_slice(&self) -> &[Word] {
        &self.reps
    }
}

// One rewrite direction of a relation.
struct Rule {
    from: Word,
    to: Word,
}

/// Word-problem engine for one homogeneous presentation, with a capped
/// cache of computed classes shared across all operations.
pub struct WordProblem<'p> {
    presentation: &'p Presentation,
    rules: Vec<Rule>,
    // Every member of a computed class maps to the shared sorted member
    // list; entry 0 is the canonical representative.
    classes: HashMap<Word, Rc<Vec<Word>>>,
    cached_words: usize,
    cache_cap: usize,
}

/// Default cap on cached class members, in words.
pub const DEFAULT_CLASS_CACHE_CAP: usize = 4_000_000;

impl<'p> WordProblem<'p> {
    pub fn new(presentation: &'p Presentation) -> Result<Self, WordProblemError> {
        Self::with_cache_cap(presentation, DEFAULT_CLASS_CACHE_CAP)
    }

    pub fn with_cache_cap(
        presentation: &'p Presentation,
        cache_cap: usize,
    ) -> Result<Self, WordProblemError> {
        if !presentation.is_homogeneous() {
            return Err(WordProblemError::NotHomogeneous);
        }
        let mut rules = Vec::new();
        for r in presentation.relations() {
            rules.push(Rule {
                from: r.lhs.clone(),
                to: r.rhs.clone(),
            });
            rules.push(Rule {
                from: r.rhs.clone(),
                to: r.lhs.clone(),
            });
        }
        Ok(WordProblem {
            presentation,
            rules,
            classes: HashMap::new(),
            cached_words: 0,
            cache_cap,
        })
    }

    pub fn presentation(&self) -> &'p Presentation {
        self.presentation
    }

    fn neighbors(&self, w: &Word, out: &mut Vec<Word>) {
        out.clear();
        let letters = w.as_slice();
        for rule in &self.rules {
            let flen = rule.from.len();
            if flen > letters.len() {
                continue;
            }
            for start in 0..=(letters.len() - flen) {
                if &letters[start..start + flen] == rule.from.as_slice() {
                    let mut next = Vec::with_capacity(letters.len());
                    next.extend_from_slice(&letters[..start]);
                    next.extend_from_slice(rule.to.as_slice());
                    next.extend_from_slice(&letters[start + flen..]);
                    out.push(Word::from_letters(next));
                }
            }
        }
    }

    fn class_rc(&mut self, w: &Word) -> Rc<Vec<Word>> {
        if let Some(rc) = self.classes.get(w) {
            return Rc::clone(rc);
        }
        let mut seen: BTreeSet<Word> = BTreeSet::new();
        seen.insert(w.clone());
        let mut queue: VecDeque<Word> = VecDeque::new();
        queue.push_back(w.clone());
        let mut scratch = Vec::new();
        while let Some(cur) = queue.pop_front() {
            self.neighbors(&cur, &mut scratch);
            for next in scratch.drain(..) {
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let members: Vec<Word> = seen.into_iter().collect();
        let rc = Rc::new(members);
        if self.cached_words + rc.len() <= self.cache_cap {
            self.cached_words += rc.len();
            for m in rc.iter() {
                self.classes.insert(m.clone(), Rc::clone(&rc));
            }
        }
        rc
    }

    /// The full ≡-class of `w`, from the breadth-first derivation closure.
    pub fn equivalence_class(&mut self, w: &Word) -> EquivalenceClass {
        let rc = self.class_rc(w);
        EquivalenceClass {
            representative: rc[0].clone(),
            members: rc.as_ref().clone(),
        }
    }

    /// Lexicographically least member of the class of `w`.
    pub fn canonical(&mut self, w: &Word) -> Word {
        self.class_rc(w)[0].clone()
    }

    /// Decides `u ≡ v`.
    pub fn words_equal(&mut self, u: &Word, v: &Word) -> bool {
        if u.len() != v.len() {
            return false;
        }
        if u == v {
            return true;
        }
        let class = self.class_rc(u);
        class.binary_search(v).is_ok()
    }

    /// Decides whether `u` left-divides `m`: some member of the class of
    /// `m` starts with a member of the class of `u`.
    pub fn divides_left(&mut self, u: &Word, m: &Word) -> bool {
        if u.len() > m.len() {
            return false;
        }
        let u_class = self.class_rc(u);
        let m_class = self.class_rc(m);
        m_class
            .iter()
            .any(|member| u_class.binary_search(&member.prefix(u.len())).is_ok())
    }

    /// Decides whether `d` right-divides `m`.
    pub fn divides_right(&mut self, d: &Word, m: &Word) -> bool {
        if d.len() > m.len() {
            return false;
        }
        let d_class = self.class_rc(d);
        let m_class = self.class_rc(m);
        m_class.iter().any(|member| {
            d_class
                .binary_search(&member.suffix_from(member.len() - d.len()))
                .is_ok()
        })
    }

    /// Canonical representatives of all right-divisors of `w`: the classes
    /// of all suffixes of all class members. Includes ε and `w` itself.
    pub fn right_divisors(&mut self, w: &Word) -> ElementSet {
        let members = self.class_rc(w);
        let mut out: BTreeSet<Word> = BTreeSet::new();
        for m in members.iter() {
            for start in 0..=m.len() {
                let suffix = m.suffix_from(start);
                out.insert(self.canonical(&suffix));
            }
        }
        ElementSet::from_sorted_set(out)
    }

    /// Mirror of [`right_divisors`] using prefixes.
    ///
    /// [`right_divisors`]: WordProblem::right_divisors
    pub fn left_divisors(&mut self, w: &Word) -> ElementSet {
        let members = self.class_rc(w);
        let mut out: BTreeSet<Word> = BTreeSet::new();
        for m in members.iter() {
            for len in 0..=m.len() {
                let prefix = m.prefix(len);
                out.insert(self.canonical(&prefix));
            }
        }
        ElementSet::from_sorted_set(out)
    }

    /// The unique maximal element of `left_divisors(u) ∩ left_divisors(v)`
    /// under left-divisibility. Two or more maximal elements signal a
    /// non-gcd-monoid input and are reported as an error.
    pub fn left_gcd(&mut self, u: &Word, v: &Word) -> Result<Word, WordProblemError> {
        let du = self.left_divisors(u);
        let dv = self.left_divisors(v);
        let common: Vec<Word> = du.iter().filter(|d| dv.contains(d)).cloned().collect();
        // Same-length common divisors are distinct elements, so a proper
        // divisor is always strictly shorter.
        let mut maximal: Vec<Word> = Vec::new();
        'outer: for (i, d) in common.iter().enumerate() {
            for (j, other) in common.iter().enumerate() {
                if i != j && other.len() > d.len() && self.divides_left(d, other) {
                    continue 'outer;
                }
            }
            maximal.push(d.clone());
        }
        match maximal.len() {
            1 => Ok(maximal.pop().expect("len checked")),
            n => Err(WordProblemError::AmbiguousGcd(n)),
        }
    }

    /// Brute-force search for a shortest common right-multiple of `u` and
    /// `v` of length at most `max_len`.
    ///
    /// Multiples of each word are enumerated breadth-first by length as sets
    /// of canonical representatives (level `L+1` is the canonical closure of
    /// level `L` extended by one letter on the right). The first length at
    /// which the two sets intersect yields the result; the lexicographically
    /// least intersection element is returned for determinism.
    pub fn oracle_common_multiple(
        &mut self,
        u: &Word,
        v: &Word,
        max_len: usize,
    ) -> Option<Word> {
        let letters: Vec<Letter> = self.presentation.alphabet().letters().collect();
        let mut u_level: BTreeSet<Word> = BTreeSet::new();
        u_level.insert(self.canonical(u));
        let mut u_len = u.len();
        let mut v_level: BTreeSet<Word> = BTreeSet::new();
        v_level.insert(self.canonical(v));
        let mut v_len = v.len();

        let start = u.len().max(v.len());
        if start > max_len {
            return None;
        }
        for target in start..=max_len {
            while u_len < target {
                u_level = self.advance_level(&u_level, &letters);
                u_len += 1;
            }
            while v_len < target {
                v_level = self.advance_level(&v_level, &letters);
                v_len += 1;
            }
            // Both levels hold canonical reps, so set intersection decides
            // common multiples; iteration order makes the choice least.
            let (small, large) = if u_level.len() <= v_level.len() {
                (&u_level, &v_level)
            } else {
                (&v_level, &u_level)
            };
            if let Some(m) = small.iter().find(|m| large.contains(*m)) {
                return Some(m.clone());
            }
        }
        None
    }

    fn advance_level(&mut self, level: &BTreeSet<Word>, letters: &[Letter]) -> BTreeSet<Word> {
        let mut next = BTreeSet::new();
        let mut seen_raw: HashSet<Word> = HashSet::new();
        for m in level {
            for &s in letters {
                let extended = m.concat(&Word::single(s));
                if seen_raw.insert(extended.clone()) {
                    next.insert(self.canonical(&extended));
                }
            }
        }
        next
    }

    /// Number of class member words currently held by the cache.
    pub fn cached_words(&self) -> usize {
        self.cached_words
    }
}
