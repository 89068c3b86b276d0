//! The right-reversing rewriting engine on signed words.
//!
//! One reversing step replaces a factor `s⁻¹·t` (a negative letter followed
//! by a positive one) by `θ(s,t)·θ(t,s)⁻¹`; for `s = t` the factor is simply
//! removed. The engine applies steps deterministically at the leftmost
//! reducible factor, which by confluence does not affect the final
//! irreducible word. A rightmost strategy is provided so tests can exercise
//! confluence directly.
//!
//! Words are held in an index-linked chain so a step costs only the length
//! of its replacement; the scan cursor moves left at most one node per step,
//! which keeps a full reversing linear in the number of steps plus the final
//! length.

use thiserror::Error;

use crate::presentation::RightComplementTable;
use crate::words::{Letter, Sign, SignedLetter, SignedWord, Word};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReverseStepError {
    #[error("no negative-positive factor at position {0}")]
    NoNegativePositiveFactor(usize),
    #[error("right-complement undefined for the factor at position {0}")]
    ComplementUndefined(usize),
}

/// Outcome of a full reversing run.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ReversingOutcome {
    /// No negative-positive factor remains: the word has the shape
    /// `v'·u'⁻¹`.
    Irreducible { word: SignedWord, steps: u64 },
    /// Negative-positive factors remain but every one has an undefined
    /// complement; `(s, t, position)` locates the leftmost.
    Stuck {
        s: Letter,
        t: Letter,
        position: usize,
        word: SignedWord,
        steps: u64,
    },
    /// The step budget ran out mid-reversing.
    Exhausted { word: SignedWord, steps: u64 },
}

impl ReversingOutcome {
    pub fn word(&self) -> &SignedWord {
        match self {
            ReversingOutcome::Irreducible { word, .. }
            | ReversingOutcome::Stuck { word, .. }
            | ReversingOutcome::Exhausted { word, .. } => word,
        }
    }

    pub fn steps(&self) -> u64 {
        match self {
            ReversingOutcome::Irreducible { steps, .. }
            | ReversingOutcome::Stuck { steps, .. }
            | ReversingOutcome::Exhausted { steps, .. } => *steps,
        }
    }
}

/// Extended right-complement θ\* of a pair of positive words.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum ComplementOutcome {
    /// `u⁻¹·v` reversed to `v'·u'⁻¹`; `θ*(u,v) = u'` and `θ*(v,u) = v'`.
    Defined { u_prime: Word, v_prime: Word },
    Stuck { s: Letter, t: Letter },
    Exhausted,
}

/// Which reducible factor a run rewrites next.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

/// One recorded rewriting step: the factor `s⁻¹·t` at `position` was
/// replaced by `replacement`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TraceStep {
    pub position: usize,
    pub s: Letter,
    pub t: Letter,
    pub replacement: SignedWord,
}

/// A reversing run with enough detail to replay it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ReversingTrace {
    pub initial: SignedWord,
    pub steps: Vec<TraceStep>,
    pub final_word: SignedWord,
}

impl ReversingTrace {
    /// Applies the recorded steps to the initial word.
    pub fn replay(&self) -> SignedWord {
        let mut entries: Vec<SignedLetter> = self.initial.entries().collect();
        for step in &self.steps {
            entries.splice(
                step.position..step.position + 2,
                step.replacement.entries(),
            );
        }
        SignedWord::from_entries(entries)
    }
}

/// The replacement `θ(s,t)·θ(t,s)⁻¹` for the factor `s⁻¹·t`, or `None` when
/// the complement is undefined.
fn factor_replacement(
    table: &RightComplementTable,
    s: Letter,
    t: Letter,
) -> Option<SignedWord> {
    let st = table.get(s, t)?;
    let ts = table.get(t, s)?;
    let mut entries: Vec<SignedLetter> = st.letters().map(SignedLetter::positive).collect();
    entries.extend(ts.letters().rev().map(SignedLetter::negative));
    Some(SignedWord::from_entries(entries))
}

/// Applies one reversing step at `pos`. Exposed for single-step
/// experiments; full runs should use [`reverse`].
pub fn reverse_step(
    w: &SignedWord,
    pos: usize,
    table: &RightComplementTable,
) -> Result<SignedWord, ReverseStepError> {
    let entries = w.as_slice();
    if pos + 1 >= entries.len()
        || entries[pos].sign != Sign::Negative
        || entries[pos + 1].sign != Sign::Positive
    {
        return Err(ReverseStepError::NoNegativePositiveFactor(pos));
    }
    let s = entries[pos].letter;
    let t = entries[pos + 1].letter;
    let replacement =
        factor_replacement(table, s, t).ok_or(ReverseStepError::ComplementUndefined(pos))?;
    let mut out: Vec<SignedLetter> = entries.to_vec();
    out.splice(pos..pos + 2, replacement.entries());
    Ok(SignedWord::from_entries(out))
}

const NIL: u32 = u32::MAX;

struct Node {
    entry: SignedLetter,
    prev: u32,
    next: u32,
}

// Index-linked signed word. Nodes are never reused; unlinking is enough.
struct Chain {
    nodes: Vec<Node>,
    head: u32,
    tail: u32,
}

impl Chain {
    fn new(w: &SignedWord) -> Self {
        let mut nodes = Vec::with_capacity(w.len());
        for (i, entry) in w.entries().enumerate() {
            nodes.push(Node {
                entry,
                prev: if i == 0 { NIL } else { (i - 1) as u32 },
                next: if i + 1 == w.len() { NIL } else { (i + 1) as u32 },
            });
        }
        Chain {
            head: if nodes.is_empty() { NIL } else { 0 },
            tail: if nodes.is_empty() {
                NIL
            } else {
                (nodes.len() - 1) as u32
            },
            nodes,
        }
    }

    fn entry(&self, i: u32) -> SignedLetter {
        self.nodes[i as usize].entry
    }

    fn next(&self, i: u32) -> u32 {
        self.nodes[i as usize].next
    }

    fn prev(&self, i: u32) -> u32 {
        self.nodes[i as usize].prev
    }

    /// Replaces the adjacent pair `(i, j)` by `segment`, returning the
    /// neighbors `(prev(i), next(j))` that now flank the insertion.
    fn replace_pair(&mut self, i: u32, j: u32, segment: &SignedWord) -> (u32, u32) {
        let p = self.prev(i);
        let q = self.next(j);
        let mut link_from = p;
        for entry in segment.entries() {
            let idx = self.nodes.len() as u32;
            self.nodes.push(Node {
                entry,
                prev: link_from,
                next: NIL,
            });
            if link_from == NIL {
                self.head = idx;
            } else {
                self.nodes[link_from as usize].next = idx;
            }
            link_from = idx;
        }
        if link_from == NIL {
            self.head = q;
        } else {
            self.nodes[link_from as usize].next = q;
        }
        if q == NIL {
            self.tail = link_from;
        } else {
            self.nodes[q as usize].prev = link_from;
        }
        (p, q)
    }

    fn to_signed_word(&self) -> SignedWord {
        let mut entries = Vec::new();
        let mut cur = self.head;
        while cur != NIL {
            entries.push(self.entry(cur));
            cur = self.next(cur);
        }
        SignedWord::from_entries(entries)
    }

    fn contains_factor(&self, pattern: &[SignedLetter]) -> bool {
        if pattern.is_empty() {
            return true;
        }
        let mut start = self.head;
        while start != NIL {
            let mut cur = start;
            let mut matched = 0;
            while cur != NIL && matched < pattern.len() {
                if self.entry(cur) != pattern[matched] {
                    break;
                }
                matched += 1;
                cur = self.next(cur);
            }
            if matched == pattern.len() {
                return true;
            }
            start = self.next(start);
        }
        false
    }
}

struct Run<'t> {
    chain: Chain,
    table: &'t RightComplementTable,
    steps: u64,
    budget: Option<u64>,
    trace: Option<Vec<TraceStep>>,
    // Invoked after every step; returning true stops the run early.
    stop_when: Option<Box<dyn Fn(&Chain) -> bool + 't>>,
    stopped_early: bool,
}

enum RunEnd {
    Done,
    OutOfBudget,
}

impl<'t> Run<'t> {
    fn new(w: &SignedWord, table: &'t RightComplementTable, budget: Option<u64>) -> Self {
        Run {
            chain: Chain::new(w),
            table,
            steps: 0,
            budget,
            trace: None,
            stop_when: None,
            stopped_early: false,
        }
    }

    fn step(&mut self, i: u32, j: u32, position: usize) -> (u32, u32, usize) {
        let s = self.chain.entry(i).letter;
        let t = self.chain.entry(j).letter;
        let replacement = factor_replacement(self.table, s, t)
            .expect("caller checked that the complement is defined");
        if let Some(trace) = &mut self.trace {
            trace.push(TraceStep {
                position,
                s,
                t,
                replacement: replacement.clone(),
            });
        }
        let seg_len = replacement.len();
        let (p, q) = self.chain.replace_pair(i, j, &replacement);
        self.steps += 1;
        if let Some(pred) = &self.stop_when {
            if pred(&self.chain) {
                self.stopped_early = true;
            }
        }
        (p, q, seg_len)
    }

    fn run_leftmost(&mut self) -> RunEnd {
        // No reducible factor lives strictly left of the cursor.
        let mut cursor = self.chain.head;
        let mut pos = 0usize;
        while cursor != NIL && !self.stopped_early {
            let next = self.chain.next(cursor);
            if next == NIL {
                break;
            }
            let left = self.chain.entry(cursor);
            let right = self.chain.entry(next);
            let reducible = left.sign == Sign::Negative
                && right.sign == Sign::Positive
                && self.table.is_defined(left.letter, right.letter);
            if !reducible {
                cursor = next;
                pos += 1;
                continue;
            }
            if self.budget == Some(self.steps) {
                return RunEnd::OutOfBudget;
            }
            let (p, _q, _len) = self.step(cursor, next, pos);
            if p == NIL {
                cursor = self.chain.head;
                pos = 0;
            } else {
                cursor = p;
                pos -= 1;
            }
        }
        RunEnd::Done
    }

    fn run_rightmost(&mut self) -> RunEnd {
        // No reducible factor has its right node strictly right of the
        // cursor.
        let mut cursor = self.chain.tail;
        let mut pos = self.chain.to_signed_word().len().saturating_sub(1);
        while cursor != NIL && !self.stopped_early {
            let prev = self.chain.prev(cursor);
            if prev == NIL {
                break;
            }
            let left = self.chain.entry(prev);
            let right = self.chain.entry(cursor);
            let reducible = left.sign == Sign::Negative
                && right.sign == Sign::Positive
                && self.table.is_defined(left.letter, right.letter);
            if !reducible {
                cursor = prev;
                pos -= 1;
                continue;
            }
            if self.budget == Some(self.steps) {
                return RunEnd::OutOfBudget;
            }
            let (_p, q, seg_len) = self.step(prev, cursor, pos - 1);
            if q == NIL {
                cursor = self.chain.tail;
                pos = self.chain.to_signed_word().len().saturating_sub(1);
            } else {
                cursor = q;
                pos = pos - 1 + seg_len;
            }
        }
        RunEnd::Done
    }

    fn finish(self, end: RunEnd) -> ReversingOutcome {
        let word = self.chain.to_signed_word();
        let steps = self.steps;
        if matches!(end, RunEnd::OutOfBudget) || self.stopped_early {
            return ReversingOutcome::Exhausted { word, steps };
        }
        // No reducible factor remains; find a leftmost undefined one if any.
        for (position, pair) in word.as_slice().windows(2).enumerate() {
            if pair[0].sign == Sign::Negative && pair[1].sign == Sign::Positive {
                return ReversingOutcome::Stuck {
                    s: pair[0].letter,
                    t: pair[1].letter,
                    position,
                    word,
                    steps,
                };
            }
        }
        ReversingOutcome::Irreducible { word, steps }
    }
}

/// Fully reverses `w` using the leftmost strategy, up to `budget` steps
/// (`None` for unlimited).
pub fn reverse(
    w: &SignedWord,
    table: &RightComplementTable,
    budget: Option<u64>,
) -> ReversingOutcome {
    reverse_with_strategy(w, table, budget, Strategy::Leftmost)
}

pub fn reverse_with_strategy(
    w: &SignedWord,
    table: &RightComplementTable,
    budget: Option<u64>,
    strategy: Strategy,
) -> ReversingOutcome {
    let mut run = Run::new(w, table, budget);
    let end = match strategy {
        Strategy::Leftmost => run.run_leftmost(),
        Strategy::Rightmost => run.run_rightmost(),
    };
    run.finish(end)
}

/// Like [`reverse`], additionally recording a replayable trace.
pub fn reverse_traced(
    w: &SignedWord,
    table: &RightComplementTable,
    budget: Option<u64>,
) -> (ReversingOutcome, ReversingTrace) {
    let mut run = Run::new(w, table, budget);
    run.trace = Some(Vec::new());
    let end = run.run_leftmost();
    let trace_steps = run.trace.take().unwrap_or_default();
    let outcome = run.finish(end);
    let trace = ReversingTrace {
        initial: w.clone(),
        steps: trace_steps,
        final_word: outcome.word().clone(),
    };
    (outcome, trace)
}

/// Reverses `w` leftmost and reports after how many steps `pattern` first
/// occurs as a contiguous factor (`None` if the run ends or exhausts the
/// budget first). Step 0 is not inspected, so a pattern equal to `w` itself
/// is only found on genuine recurrence.
pub fn reverse_find_factor(
    w: &SignedWord,
    pattern: &SignedWord,
    table: &RightComplementTable,
    budget: Option<u64>,
) -> Option<u64> {
    let needle: Vec<SignedLetter> = pattern.entries().collect();
    let mut run = Run::new(w, table, budget);
    run.stop_when = Some(Box::new(move |chain: &Chain| chain.contains_factor(&needle)));
    let end = run.run_leftmost();
    let found = run.stopped_early;
    let outcome = run.finish(end);
    if found {
        Some(outcome.steps())
    } else {
        None
    }
}

/// Reverses `u⁻¹·v`. On success the uniquely determined complements are
/// returned: `θ*(u,v) = u'` and `θ*(v,u) = v'` with `u·v' ≡ v·u'`.
pub fn extended_complement(
    u: &Word,
    v: &Word,
    table: &RightComplementTable,
    budget: Option<u64>,
) -> ComplementOutcome {
    match reverse(&SignedWord::fraction(u, v), table, budget) {
        ReversingOutcome::Irreducible { word, .. } => {
            let (v_prime, u_prime) = word
                .as_positive_negative()
                .expect("irreducible words have the positive-negative shape");
            ComplementOutcome::Defined { u_prime, v_prime }
        }
        ReversingOutcome::Stuck { s, t, .. } => ComplementOutcome::Stuck { s, t },
        ReversingOutcome::Exhausted { .. } => ComplementOutcome::Exhausted,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_presentation, Preset, RightComplementTable};
    use crate::words::Alphabet;

    fn a2t_table() -> (crate::presentation::Presentation, RightComplementTable) {
        let p = Preset::A2t.presentation();
        let t = RightComplementTable::derive(&p).unwrap();
        (p, t)
    }

    #[test]
    fn single_steps() {
        let (p, table) = a2t_table();
        let alpha = p.alphabet();
        // b⁻¹·a becomes ab·(ba)⁻¹.
        let w = alpha.parse_signed("b'a").unwrap();
        let stepped = reverse_step(&w, 0, &table).unwrap();
        assert_eq!(alpha.render_signed(&stepped), "aba'b'");

        // Same-letter factors are deleted.
        let ss = alpha.parse_signed("a'a").unwrap();
        assert_eq!(reverse_step(&ss, 0, &table).unwrap(), SignedWord::empty());

        // First step of the c'b'a computation.
        let w = alpha.parse_signed("c'b'a").unwrap();
        let stepped = reverse_step(&w, 1, &table).unwrap();
        assert_eq!(alpha.render_signed(&stepped), "c'aba'b'");

        assert_eq!(
            reverse_step(&w, 0, &table).unwrap_err(),
            ReverseStepError::NoNegativePositiveFactor(0)
        );
    }

    #[test]
    fn budgeted_reversing_matches_the_three_step_state() {
        let (p, table) = a2t_table();
        let alpha = p.alphabet();
        let w = alpha.parse_signed("c'b'a").unwrap();
        let outcome = reverse(&w, &table, Some(3));
        match &outcome {
            ReversingOutcome::Exhausted { word, steps } => {
                assert_eq!(*steps, 3);
                // ac·a⁻¹·bc·(bacb)⁻¹
                assert_eq!(alpha.render_signed(word), "aca'bcb'c'a'b'");
            }
            other => panic!("expected exhaustion at 3 steps, got {other:?}"),
        }
    }

    #[test]
    fn b3_complement_fixture() {
        let p = Preset::B3.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let alpha = p.alphabet();
        let u = alpha.parse_word("aca").unwrap();
        let v = alpha.parse_word("bc").unwrap();
        match extended_complement(&u, &v, &table, Some(10_000)) {
            ComplementOutcome::Defined { u_prime, v_prime } => {
                assert_eq!(alpha.render_word(&u_prime), "acabca");
                assert_eq!(alpha.render_word(&v_prime), "bcacb");
            }
            other => panic!("expected defined complements, got {other:?}"),
        }
    }

    #[test]
    fn trivial_complements() {
        let (p, table) = a2t_table();
        let alpha = p.alphabet();
        let u = alpha.parse_word("abc").unwrap();
        assert_eq!(
            extended_complement(&u, &u, &table, None),
            ComplementOutcome::Defined {
                u_prime: Word::empty(),
                v_prime: Word::empty()
            }
        );
        assert_eq!(
            extended_complement(&Word::empty(), &u, &table, None),
            ComplementOutcome::Defined {
                u_prime: Word::empty(),
                v_prime: u.clone()
            }
        );
        assert_eq!(
            extended_complement(&u, &Word::empty(), &table, None),
            ComplementOutcome::Defined {
                u_prime: u.clone(),
                v_prime: Word::empty()
            }
        );
        // a⁻¹·a deletes outright.
        let aa = alpha.parse_signed("a'a").unwrap();
        match reverse(&aa, &table, None) {
            ReversingOutcome::Irreducible { word, steps } => {
                assert_eq!(word, SignedWord::empty());
                assert_eq!(steps, 1);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn stuck_reports_leftmost_undefined_factor() {
        // Only a and b are joined by a relation; c is free.
        let p = parse_presentation("generators: a b c\nrelations:\nab = ba\n").unwrap();
        let table = RightComplementTable::derive(&p).unwrap();
        let alpha = p.alphabet();
        let w = alpha.parse_signed("c'ab'a").unwrap();
        match reverse(&w, &table, None) {
            ReversingOutcome::Stuck { s, t, position, word, .. } => {
                assert_eq!(alpha.name(s), "c");
                assert_eq!(alpha.name(t), "a");
                assert_eq!(position, 0);
                // The b⁻¹·a factor still reversed behind the stuck prefix.
                assert_eq!(alpha.render_signed(&word), "c'aab'");
            }
            other => panic!("expected stuck, got {other:?}"),
        }
    }

    #[test]
    fn trace_replays_to_final() {
        let (p, table) = a2t_table();
        let alpha = p.alphabet();
        for input in ["c'b'a", "b'ab'a", "a'bc'ac"] {
            let w = alpha.parse_signed(input).unwrap();
            let (outcome, trace) = reverse_traced(&w, &table, Some(50));
            assert_eq!(&trace.replay(), outcome.word());
            assert_eq!(trace.steps.len() as u64, outcome.steps());
        }
    }

    #[test]
    fn recurrence_of_bc_a() {
        let (p, table) = a2t_table();
        let alpha = p.alphabet();
        let w = alpha.parse_signed("c'b'a").unwrap();
        assert_eq!(reverse_find_factor(&w, &w, &table, Some(1000)), Some(6));
    }

    #[test]
    fn leftmost_and_rightmost_agree_on_terminating_words() {
        let p = Preset::B3.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let alpha = p.alphabet();
        for input in ["a'c'a'bc", "b'ac'a", "c'c'abab'"] {
            let w = alpha.parse_signed(input).unwrap();
            let left = reverse_with_strategy(&w, &table, Some(100_000), Strategy::Leftmost);
            let right = reverse_with_strategy(&w, &table, Some(100_000), Strategy::Rightmost);
            assert_eq!(left.word(), right.word(), "input {input}");
            assert_eq!(left.steps(), right.steps(), "input {input}");
        }
    }

    #[test]
    fn alphabet_render_of_free_alphabet() {
        let alpha = Alphabet::latin(3).unwrap();
        let w = alpha.parse_signed("a'bc'").unwrap();
        assert_eq!(alpha.render_signed(&w.formal_inverse()), "cb'a");
    }
}
