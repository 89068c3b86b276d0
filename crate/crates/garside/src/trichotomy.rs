//! Classification of word pairs: failing, eventually periodic, or
//! complement-defined.
//!
//! Reversing `u⁻¹·v` either terminates on a positive-negative word, gets
//! stuck on an undefined complement, or runs forever. Instead of reversing
//! with a step bound, the classifier recurses on the structure of the
//! reversing grid: for `u = s·u₂` and `v = t·v₂` it classifies the left
//! pair `(u₂, θ(s,t))`, the right pair `(θ(t,s), v₂)`, and — when both
//! carry complements — the middle pair of those complements. A pair that
//! re-enters its own classification is periodic, and every pair that
//! reduces to it is eventually periodic; this is the cycle detection that
//! turns non-terminating reversing into a definite negative answer.
//!
//! Results are memoized per session, so Garside-family computations reuse
//! classifications across the whole closure run.

use std::collections::HashMap;

use crate::presentation::RightComplementTable;
use crate::words::{Letter, Word};

/// A pair of positive words, compared by exact letter sequences. Word-level
/// equality (not ≡) is what periodicity quantifies over.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct PairKey {
    pub u: Word,
    pub v: Word,
}

/// Outcome of classifying a pair `(u, v)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PairClass {
    /// `(u, v)` reduces to a generator pair `(s, t)` with `θ(s,t)`
    /// undefined; no common right-multiple exists.
    Failing { s: Letter, t: Letter },
    /// `(u, v)` reduces to `periodic`, which strictly reduces to itself
    /// after `cycle_steps` reversing steps.
    EventuallyPeriodic { periodic: PairKey, cycle_steps: u64 },
    /// Reversing `u⁻¹·v` terminates as `v'·u'⁻¹`.
    Complement { u_prime: Word, v_prime: Word },
    /// A session limit was hit before an answer was derived.
    Exhausted,
}

impl PairClass {
    pub fn is_complement(&self) -> bool {
        matches!(self, PairClass::Complement { .. })
    }
}

/// Caps on one classification session. Exceeding a cap yields
/// [`PairClass::Exhausted`], never a wrong answer.
#[derive(Clone, Copy, Debug)]
pub struct ClassifierLimits {
    /// Cap on classify frames entered over the session lifetime.
    pub max_pairs: Option<u64>,
    /// Cap on recursion depth per query.
    pub max_depth: usize,
}

impl Default for ClassifierLimits {
    fn default() -> Self {
        ClassifierLimits {
            max_pairs: Some(10_000_000),
            max_depth: 4_000,
        }
    }
}

#[derive(Clone, Copy, Default, Debug)]
pub struct SessionStats {
    /// Classify frames entered (memo hits excluded).
    pub pairs_visited: u64,
    pub max_depth: usize,
    pub memo_hits: u64,
}

#[derive(Clone, PartialEq, Eq, Debug)]
enum CompactClass {
    Failing(Letter, Letter),
    EventuallyPeriodic { periodic: (u32, u32), cycle_steps: u64 },
    Complement { u_prime: u32, v_prime: u32 },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Phase {
    Left,
    Right,
    Middle,
}

struct Frame {
    phase: Phase,
    steps_left: u64,
    steps_right: u64,
}

enum Res {
    // A definitive class plus, for complements, the length of the full
    // reversing sequence (the number of squares in the grid).
    Class(CompactClass, u64),
    Exhausted,
}

/// A memoized classifier over one right-complement table.
pub struct ClassifierSession<'t> {
    table: &'t RightComplementTable,
    limits: ClassifierLimits,
    words: Vec<Word>,
    ids: HashMap<Word, u32>,
    memo: HashMap<(u32, u32), (CompactClass, u64)>,
    in_progress: HashMap<(u32, u32), usize>,
    frames: Vec<Frame>,
    stats: SessionStats,
}

impl<'t> ClassifierSession<'t> {
    pub fn new(table: &'t RightComplementTable, limits: ClassifierLimits) -> Self {
        ClassifierSession {
            table,
            limits,
            words: Vec::new(),
            ids: HashMap::new(),
            memo: HashMap::new(),
            in_progress: HashMap::new(),
            frames: Vec::new(),
            stats: SessionStats::default(),
        }
    }

    pub fn table(&self) -> &'t RightComplementTable {
        self.table
    }

    pub fn stats(&self) -> SessionStats {
        self.stats
    }

    fn intern(&mut self, w: &Word) -> u32 {
        if let Some(&id) = self.ids.get(w) {
            return id;
        }
        let id = self.words.len() as u32;
        self.words.push(w.clone());
        self.ids.insert(w.clone(), id);
        id
    }

    fn word(&self, id: u32) -> &Word {
        &self.words[id as usize]
    }

    /// Classifies the pair `(u, v)`.
    pub fn classify(&mut self, u: &Word, v: &Word) -> PairClass {
        let key = (self.intern(u), self.intern(v));
        match self.classify_ids(key, 0) {
            Res::Class(c, _) => self.expand(&c),
            Res::Exhausted => PairClass::Exhausted,
        }
    }

    /// For a pair already classified as a complement, the number of
    /// reversing steps of the full run (strategy-independent).
    pub fn complement_steps(&self, u: &Word, v: &Word) -> Option<u64> {
        let ku = *self.ids.get(u)?;
        let kv = *self.ids.get(v)?;
        match self.memo.get(&(ku, kv)) {
            Some((CompactClass::Complement { .. }, steps)) => Some(*steps),
            _ => None,
        }
    }

    fn expand(&self, c: &CompactClass) -> PairClass {
        match c {
            CompactClass::Failing(s, t) => PairClass::Failing { s: *s, t: *t },
            CompactClass::EventuallyPeriodic {
                periodic: (pu, pv),
                cycle_steps,
            } => PairClass::EventuallyPeriodic {
                periodic: PairKey {
                    u: self.word(*pu).clone(),
                    v: self.word(*pv).clone(),
                },
                cycle_steps: *cycle_steps,
            },
            CompactClass::Complement { u_prime, v_prime } => PairClass::Complement {
                u_prime: self.word(*u_prime).clone(),
                v_prime: self.word(*v_prime).clone(),
            },
        }
    }

    fn classify_ids(&mut self, key: (u32, u32), depth: usize) -> Res {
        if let Some((class, steps)) = self.memo.get(&key) {
            self.stats.memo_hits += 1;
            return Res::Class(class.clone(), *steps);
        }
        if let Some(&frame_idx) = self.in_progress.get(&key) {
            // The pair re-entered its own classification: it is periodic,
            // with cycle length the reversing distance along the stack.
            let cycle_steps = self.frames[frame_idx..]
                .iter()
                .map(|f| match f.phase {
                    Phase::Left | Phase::Right => 1,
                    Phase::Middle => 1 + f.steps_left + f.steps_right,
                })
                .sum();
            return Res::Class(
                CompactClass::EventuallyPeriodic {
                    periodic: key,
                    cycle_steps,
                },
                0,
            );
        }
        if depth >= self.limits.max_depth {
            return Res::Exhausted;
        }
        if let Some(cap) = self.limits.max_pairs {
            if self.stats.pairs_visited >= cap {
                return Res::Exhausted;
            }
        }
        self.stats.pairs_visited += 1;
        self.stats.max_depth = self.stats.max_depth.max(depth);

        // Base cases: an empty side reverses in zero steps.
        let (u, v) = (self.word(key.0).clone(), self.word(key.1).clone());
        if u.is_empty() || v.is_empty() {
            let class = CompactClass::Complement {
                u_prime: key.0,
                v_prime: key.1,
            };
            self.memo.insert(key, (class.clone(), 0));
            return Res::Class(class, 0);
        }

        let (s, u_tail) = u.split_first().expect("nonempty");
        let (t, v_tail) = v.split_first().expect("nonempty");
        let (theta_st, theta_ts) = match (self.table.get(s, t), self.table.get(t, s)) {
            (Some(st), Some(ts)) => (st.clone(), ts.clone()),
            _ => {
                let class = CompactClass::Failing(s, t);
                self.memo.insert(key, (class.clone(), 0));
                return Res::Class(class, 0);
            }
        };

        let frame_idx = self.frames.len();
        self.frames.push(Frame {
            phase: Phase::Left,
            steps_left: 0,
            steps_right: 0,
        });
        self.in_progress.insert(key, frame_idx);
        let result = self.classify_children(depth, u_tail, theta_st, theta_ts, v_tail);
        self.in_progress.remove(&key);
        self.frames.pop();
        if let Res::Class(class, steps) = &result {
            self.memo.insert(key, (class.clone(), *steps));
        }
        result
    }

    fn classify_children(
        &mut self,
        depth: usize,
        u_tail: Word,
        theta_st: Word,
        theta_ts: Word,
        v_tail: Word,
    ) -> Res {
        let frame_idx = self.frames.len() - 1;

        // Left pair (u₂, θ(s,t)): the part of the grid left of the first
        // square.
        let left_key = (self.intern(&u_tail), self.intern(&theta_st));
        let left = self.classify_ids(left_key, depth + 1);
        if let Res::Class(CompactClass::Failing(..), _) = &left {
            return left;
        }

        // Right pair (θ(t,s), v₂). Evaluated even when the left pair is
        // eventually periodic: a failing branch takes precedence.
        self.frames[frame_idx].phase = Phase::Right;
        if let Res::Class(_, steps) = &left {
            self.frames[frame_idx].steps_left = *steps;
        }
        let right_key = (self.intern(&theta_ts), self.intern(&v_tail));
        let right = self.classify_ids(right_key, depth + 1);
        if let Res::Class(CompactClass::Failing(..), _) = &right {
            return right;
        }
        match (&left, &right) {
            (Res::Class(CompactClass::EventuallyPeriodic { .. }, _), _) => return left,
            (_, Res::Class(CompactClass::EventuallyPeriodic { .. }, _)) => return right,
            (Res::Exhausted, _) | (_, Res::Exhausted) => return Res::Exhausted,
            _ => {}
        }
        let (left_comp, steps_left) = match left {
            Res::Class(c @ CompactClass::Complement { .. }, steps) => (c, steps),
            _ => unreachable!("left is a complement here"),
        };
        let (right_comp, steps_right) = match right {
            Res::Class(c @ CompactClass::Complement { .. }, steps) => (c, steps),
            _ => unreachable!("right is a complement here"),
        };

        // Middle pair of the two inner complements.
        self.frames[frame_idx].phase = Phase::Middle;
        self.frames[frame_idx].steps_right = steps_right;
        let (left_u_prime, left_v_prime) = match left_comp {
            CompactClass::Complement { u_prime, v_prime } => (u_prime, v_prime),
            _ => unreachable!(),
        };
        let (right_u_prime, right_v_prime) = match right_comp {
            CompactClass::Complement { u_prime, v_prime } => (u_prime, v_prime),
            _ => unreachable!(),
        };
        let middle_key = (left_u_prime, right_v_prime);
        let middle = self.classify_ids(middle_key, depth + 1);
        match middle {
            Res::Class(CompactClass::Complement { u_prime, v_prime }, steps_middle) => {
                // Across the completed grid: u' is the right complement
                // followed by the middle one, v' the left followed by the
                // middle one.
                let u_prime_word = self.word(right_u_prime).concat(self.word(u_prime));
                let v_prime_word = self.word(left_v_prime).concat(self.word(v_prime));
                let class = CompactClass::Complement {
                    u_prime: self.intern(&u_prime_word),
                    v_prime: self.intern(&v_prime_word),
                };
                Res::Class(class, 1 + steps_left + steps_right + steps_middle)
            }
            other => other,
        }
    }
}

/// Ternary answer for common-multiple existence.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Ternary {
    Yes,
    No,
    Unknown,
}

/// Result of an lcm computation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum LcmOutcome {
    /// The right-lcm, as the word `u·θ*(v,u)`.
    Lcm(Word),
    /// The pair is failing or eventually periodic. Under a completeness
    /// certificate this means no common right-multiple exists at all.
    NoCommonMultiple(PairClass),
    Exhausted,
}

/// Computes the right-lcm of `u` and `v` via classification. The
/// interpretation of [`LcmOutcome::NoCommonMultiple`] as a definite negative
/// requires the presentation to be certified complete.
pub fn right_lcm(session: &mut ClassifierSession<'_>, u: &Word, v: &Word) -> LcmOutcome {
    match session.classify(u, v) {
        PairClass::Complement { v_prime, .. } => LcmOutcome::Lcm(u.concat(&v_prime)),
        PairClass::Exhausted => LcmOutcome::Exhausted,
        witness => LcmOutcome::NoCommonMultiple(witness),
    }
}

/// Decides common-right-multiple existence. `certified_complete` states
/// whether the presentation carries a completeness certificate; without
/// one, negative classifications are reported as [`Ternary::Unknown`].
pub fn has_common_right_multiple(
    session: &mut ClassifierSession<'_>,
    u: &Word,
    v: &Word,
    certified_complete: bool,
) -> Ternary {
    match session.classify(u, v) {
        PairClass::Complement { .. } => Ternary::Yes,
        PairClass::Exhausted => Ternary::Unknown,
        PairClass::Failing { .. } | PairClass::EventuallyPeriodic { .. } => {
            if certified_complete {
                Ternary::No
            } else {
                Ternary::Unknown
            }
        }
    }
}
