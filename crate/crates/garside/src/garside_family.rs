//! Computation of the minimal finite Garside family.
//!
//! Starting from the generators, the closure repeatedly adds, for every
//! pair with a defined extended complement, the right-lcm and both
//! complements, then closes under right-divisors; the two passes alternate
//! until a joint fixed point. Elements are monoid elements, not words:
//! deduplication goes through canonical representatives of ≡-classes.
//! Pairs classified failing or eventually periodic contribute nothing —
//! the trichotomy makes that a definitive "no lcm".

use std::collections::{BTreeSet, HashMap, HashSet};
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::completeness::{certify, CertificateStatus};
use crate::presentation::{Presentation, PresentationError, Preset, RightComplementTable};
use crate::trichotomy::{ClassifierLimits, ClassifierSession, PairClass};
use crate::word_problem::{ElementSet, WordProblem, WordProblemError};
use crate::words::Word;

#[derive(Debug, Error)]
pub enum GarsideError {
    #[error(transparent)]
    Presentation(#[from] PresentationError),
    #[error(transparent)]
    WordProblem(#[from] WordProblemError),
    #[error("presentation is not certified complete: {0}")]
    NotCertified(String),
    #[error("closure diverged: {reason} ({partial_size} elements so far)")]
    Diverged {
        reason: String,
        partial_size: usize,
        partial: ElementSet,
    },
}

/// Caps on the closure computation.
#[derive(Clone, Copy, Debug)]
pub struct ClosureLimits {
    pub max_element_length: usize,
    pub max_family_size: usize,
    pub classifier: ClassifierLimits,
}

impl Default for ClosureLimits {
    fn default() -> Self {
        ClosureLimits {
            max_element_length: 256,
            max_family_size: 100_000,
            classifier: ClassifierLimits::default(),
        }
    }
}

#[derive(Clone, Debug, Default)]
pub struct ClosureStats {
    /// Family size after each closure generation, starting with the
    /// generator set.
    pub generation_sizes: Vec<usize>,
    pub pairs_with_lcm: u64,
    pub pairs_without_multiple: u64,
}

impl ClosureStats {
    pub fn generations(&self) -> usize {
        self.generation_sizes.len().saturating_sub(1)
    }
}

/// A computed Garside family: deduplicated canonical elements (including
/// ε) and the extremal elements whose right-divisors recover the family.
#[derive(Clone, Debug)]
pub struct GarsideFamily {
    pub elements: ElementSet,
    pub extremals: ElementSet,
    pub stats: ClosureStats,
}

struct Closure<'p, 't> {
    word_problem: WordProblem<'p>,
    session: ClassifierSession<'t>,
    limits: ClosureLimits,
    family: BTreeSet<Word>,
    ids: HashMap<Word, u32>,
    processed: HashSet<(u32, u32)>,
    stats: ClosureStats,
}

impl<'p, 't> Closure<'p, 't> {
    fn id(&mut self, w: &Word) -> u32 {
        if let Some(&id) = self.ids.get(w) {
            return id;
        }
        let id = self.ids.len() as u32;
        self.ids.insert(w.clone(), id);
        id
    }

    fn admit(&mut self, candidate: Word) -> Result<bool, GarsideError> {
        let canon = self.word_problem.canonical(&candidate);
        if canon.len() > self.limits.max_element_length {
            return Err(self.diverged("element length limit exceeded"));
        }
        let added = self.family.insert(canon);
        if added && self.family.len() > self.limits.max_family_size {
            return Err(self.diverged("family size limit exceeded"));
        }
        Ok(added)
    }

    fn diverged(&self, reason: &str) -> GarsideError {
        GarsideError::Diverged {
            reason: reason.to_string(),
            partial_size: self.family.len(),
            partial: ElementSet::from_sorted_set(self.family.clone()),
        }
    }

    /// One sweep over all unprocessed pairs; returns whether anything was
    /// added.
    fn lcm_complement_sweep(&mut self) -> Result<bool, GarsideError> {
        let members: Vec<Word> = self.family.iter().cloned().collect();
        let mut added = false;
        for i in 0..members.len() {
            for j in (i + 1)..members.len() {
                let key = (self.id(&members[i]), self.id(&members[j]));
                if !self.processed.insert(key) {
                    continue;
                }
                match self.session.classify(&members[i], &members[j]) {
                    PairClass::Complement { u_prime, v_prime } => {
                        self.stats.pairs_with_lcm += 1;
                        let lcm = members[i].concat(&v_prime);
                        added |= self.admit(lcm)?;
                        added |= self.admit(u_prime)?;
                        added |= self.admit(v_prime)?;
                    }
                    PairClass::Failing { .. } | PairClass::EventuallyPeriodic { .. } => {
                        self.stats.pairs_without_multiple += 1;
                    }
                    PairClass::Exhausted => {
                        return Err(self.diverged("classifier limits exhausted"));
                    }
                }
            }
        }
        Ok(added)
    }

    fn divisor_sweep(&mut self) -> Result<bool, GarsideError> {
        let members: Vec<Word> = self.family.iter().cloned().collect();
        let mut added = false;
        for m in &members {
            for d in self.word_problem.right_divisors(m).iter() {
                added |= self.admit(d.clone())?;
            }
        }
        Ok(added)
    }

    fn run(mut self) -> Result<GarsideFamily, GarsideError> {
        self.stats.generation_sizes.push(self.family.len());
        loop {
            let grew = self.lcm_complement_sweep()?;
            if grew {
                self.stats.generation_sizes.push(self.family.len());
                continue;
            }
            let divisors_grew = self.divisor_sweep()?;
            if !divisors_grew {
                break;
            }
            self.stats.generation_sizes.push(self.family.len());
        }
        let elements = ElementSet::from_sorted_set(self.family.clone());
        let extremals = extremal_elements(&elements, &mut self.word_problem);
        Ok(GarsideFamily {
            elements,
            extremals,
            stats: self.stats,
        })
    }
}

/// Computes the minimal Garside family of a certified-complete homogeneous
/// presentation, or reports divergence when the limits are hit (no finite
/// family, or limits too small).
pub fn compute_minimal_garside(
    p: &Presentation,
    limits: &ClosureLimits,
) -> Result<GarsideFamily, GarsideError> {
    let certificate = certify(p, limits.classifier)?;
    if !certificate.is_complete() {
        return Err(GarsideError::NotCertified(match certificate.status {
            CertificateStatus::NotCube(u, v, w) => format!(
                "cube condition fails on ({}, {}, {})",
                p.alphabet().name(u),
                p.alphabet().name(v),
                p.alphabet().name(w)
            ),
            CertificateStatus::NotNoetherianCertified => {
                "not homogeneous, so right-noetherianity is not certified".to_string()
            }
            CertificateStatus::Unknown => "triple sweep exhausted its limits".to_string(),
            CertificateStatus::Complete => unreachable!(),
        }));
    }
    let table = RightComplementTable::derive(p)?;
    compute_with_table(p, &table, limits)
}

fn compute_with_table(
    p: &Presentation,
    table: &RightComplementTable,
    limits: &ClosureLimits,
) -> Result<GarsideFamily, GarsideError> {
    let mut word_problem = WordProblem::new(p)?;
    let family: BTreeSet<Word> = p
        .alphabet()
        .letters()
        .map(|l| word_problem.canonical(&Word::single(l)))
        .collect();
    let closure = Closure {
        word_problem,
        session: ClassifierSession::new(table, limits.classifier),
        limits: *limits,
        family,
        ids: HashMap::new(),
        processed: HashSet::new(),
        stats: ClosureStats::default(),
    };
    closure.run()
}

/// Members of the family that are not proper right-divisors of any other
/// member. Their right-divisor sets jointly recover the whole family.
pub fn extremal_elements(family: &ElementSet, word_problem: &mut WordProblem<'_>) -> ElementSet {
    let mut proper_divisor: BTreeSet<Word> = BTreeSet::new();
    for m in family.iter() {
        for d in word_problem.right_divisors(m).iter() {
            if d != m {
                proper_divisor.insert(d.clone());
            }
        }
    }
    ElementSet::from_sorted_set(
        family
            .iter()
            .filter(|m| !proper_divisor.contains(*m))
            .cloned()
            .collect(),
    )
}

/// Exhaustively checks the Garside-family closure properties: generator
/// containment, ε membership, right-divisor closure, and right-lcm plus
/// right-complement closure over all pairs. Stops at the first violation.
pub fn verify_garside(
    family: &ElementSet,
    p: &Presentation,
    word_problem: &mut WordProblem<'_>,
    session: &mut ClassifierSession<'_>,
) -> bool {
    if !family.contains(&Word::empty()) {
        return false;
    }
    for l in p.alphabet().letters() {
        if !family.contains(&word_problem.canonical(&Word::single(l))) {
            return false;
        }
    }
    for m in family.iter() {
        for d in word_problem.right_divisors(m).iter() {
            if !family.contains(d) {
                return false;
            }
        }
    }
    let members: Vec<Word> = family.iter().cloned().collect();
    for i in 0..members.len() {
        for j in (i + 1)..members.len() {
            match session.classify(&members[i], &members[j]) {
                PairClass::Complement { u_prime, v_prime } => {
                    let lcm = word_problem.canonical(&members[i].concat(&v_prime));
                    if !family.contains(&lcm)
                        || !family.contains(&word_problem.canonical(&u_prime))
                        || !family.contains(&word_problem.canonical(&v_prime))
                    {
                        return false;
                    }
                }
                PairClass::Failing { .. } | PairClass::EventuallyPeriodic { .. } => {}
                PairClass::Exhausted => return false,
            }
        }
    }
    true
}

/// One row of a family-size table.
#[derive(Debug)]
pub struct TableRow {
    pub preset: Preset,
    pub outcome: Result<(usize, usize), GarsideError>,
    pub elapsed: Duration,
}

/// Runs the family computation for each preset, tabulating `(|E|, |F|)`.
/// Per-preset failures are recorded in their rows, not propagated.
pub fn family_table(presets: &[Preset], limits: &ClosureLimits) -> Vec<TableRow> {
    presets
        .iter()
        .map(|&preset| {
            let start = Instant::now();
            let outcome = compute_minimal_garside(&preset.presentation(), limits)
                .map(|family| (family.extremals.len(), family.elements.len()));
            TableRow {
                preset,
                outcome,
                elapsed: start.elapsed(),
            }
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn family_of(preset: Preset) -> (Presentation, GarsideFamily) {
        let p = preset.presentation();
        let family = compute_minimal_garside(&p, &ClosureLimits::default()).unwrap();
        (p, family)
    }

    fn rendered(p: &Presentation, set: &ElementSet) -> Vec<String> {
        set.iter().map(|w| p.alphabet().render_word(w)).collect()
    }

    #[test]
    fn a2_family_is_the_divisors_of_delta() {
        let (p, family) = family_of(Preset::A2);
        assert_eq!(family.elements.len(), 6);
        let names = rendered(&p, &family.elements);
        for expect in ["e", "a", "b", "ab", "ba", "aba"] {
            assert!(names.contains(&expect.to_string()), "missing {expect}");
        }
        assert_eq!(rendered(&p, &family.extremals), ["aba"]);
    }

    #[test]
    fn a2t_family_and_extremals() {
        let (p, family) = family_of(Preset::A2t);
        assert_eq!(family.elements.len(), 16);
        assert_eq!(family.extremals.len(), 3);
        let mut wp = WordProblem::new(&p).unwrap();
        let expected = ["abcb", "bcac", "caba"];
        for e in expected {
            let word = p.alphabet().parse_word(e).unwrap();
            let canon = wp.canonical(&word);
            assert!(family.extremals.contains(&canon), "missing extremal {e}");
        }
    }

    #[test]
    fn uncertified_presentations_are_rejected() {
        let p = crate::presentation::parse_presentation(
            "generators: a b\nrelations:\nab = b\n",
        )
        .unwrap();
        assert!(matches!(
            compute_minimal_garside(&p, &ClosureLimits::default()),
            Err(GarsideError::NotCertified(_))
        ));
    }

    #[test]
    fn tiny_limits_diverge() {
        let p = Preset::A2t.presentation();
        let limits = ClosureLimits {
            max_family_size: 4,
            ..ClosureLimits::default()
        };
        match compute_minimal_garside(&p, &limits) {
            Err(GarsideError::Diverged { partial_size, .. }) => assert!(partial_size > 4),
            other => panic!("expected divergence, got {other:?}"),
        }
    }

    #[test]
    fn closure_is_a_fixed_point() {
        let (p, family) = family_of(Preset::A2t);
        let table = RightComplementTable::derive(&p).unwrap();
        let mut wp = WordProblem::new(&p).unwrap();
        let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
        assert!(verify_garside(&family.elements, &p, &mut wp, &mut session));

        // Recomputing the closure from the family itself adds nothing.
        let members: Vec<Word> = family.elements.iter().cloned().collect();
        for u in &members {
            for v in &members {
                if let PairClass::Complement { u_prime, v_prime } = session.classify(u, v) {
                    assert!(family.elements.contains(&wp.canonical(&u.concat(&v_prime))));
                    assert!(family.elements.contains(&wp.canonical(&u_prime)));
                    assert!(family.elements.contains(&wp.canonical(&v_prime)));
                }
            }
        }
    }

    #[test]
    fn verify_fails_on_gapped_sets() {
        let (p, family) = family_of(Preset::A2t);
        let table = RightComplementTable::derive(&p).unwrap();
        let mut wp = WordProblem::new(&p).unwrap();
        let mut session = ClassifierSession::new(&table, ClassifierLimits::default());

        // {ε} ∪ S misses lcm(a, b) = aba.
        let mut small = BTreeSet::new();
        small.insert(Word::empty());
        for l in p.alphabet().letters() {
            small.insert(Word::single(l));
        }
        assert!(!verify_garside(
            &ElementSet::from_sorted_set(small),
            &p,
            &mut wp,
            &mut session
        ));

        // Dropping one extremal breaks closure.
        for extremal in family.extremals.iter() {
            let gapped: BTreeSet<Word> = family
                .elements
                .iter()
                .filter(|m| *m != extremal)
                .cloned()
                .collect();
            assert!(!verify_garside(
                &ElementSet::from_sorted_set(gapped),
                &p,
                &mut wp,
                &mut session
            ));
        }
    }

    #[test]
    fn extremal_divisors_cover_the_family() {
        let (p, family) = family_of(Preset::A2t);
        let mut wp = WordProblem::new(&p).unwrap();
        let mut covered: BTreeSet<Word> = BTreeSet::new();
        for e in family.extremals.iter() {
            covered.extend(wp.right_divisors(e).iter().cloned());
        }
        let all: BTreeSet<Word> = family.elements.iter().cloned().collect();
        assert_eq!(covered, all);
        // No extremal right-divides another.
        for e in family.extremals.iter() {
            for f in family.extremals.iter() {
                if e != f {
                    assert!(!wp.divides_right(e, f));
                }
            }
        }
    }

    #[test]
    fn growth_is_monotone() {
        let (_, family) = family_of(Preset::C2t);
        let sizes = &family.stats.generation_sizes;
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert_eq!(*sizes.last().unwrap(), family.elements.len());
    }

    #[test]
    fn empty_table_is_empty() {
        assert!(family_table(&[], &ClosureLimits::default()).is_empty());
    }
}
