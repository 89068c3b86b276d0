//! Completeness certification via the θ-cube condition.
//!
//! For generators `u, v, w`, the established condition compares
//! `θ**(u,v,w) = θ*(θ*(u,v), θ*(u,w))` with `θ**(v,u,w)`: both must be
//! defined and represent the same element, or neither may be defined. When
//! the condition holds on all generator triples and the monoid is
//! right-noetherian, right-reversing is complete. Homogeneity is the only
//! noetherianity certificate accepted here: the length function is a strong
//! noetherianity witness, and nothing beyond it is attempted.
//!
//! The θ\* subcomputations run through the trichotomy classifier rather
//! than budgeted raw reversing, so pairs whose reversing diverges surface
//! as definitely undefined instead of as timeouts.

use crate::presentation::{Presentation, PresentationError, RightComplementTable};
use crate::trichotomy::{ClassifierLimits, ClassifierSession, PairClass};
use crate::word_problem::WordProblem;
use crate::words::{Letter, Word};

/// Outcome of one triple check.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CubeStatus {
    /// Both θ\*\* words are defined and ≡-equal.
    HoldsDefined,
    /// Neither θ\*\* word is defined.
    HoldsUndefined,
    Fails,
    /// A classifier limit was hit before the status could be decided.
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CubeReport {
    pub u: Letter,
    pub v: Letter,
    pub w: Letter,
    pub status: CubeStatus,
    /// `θ**(u,v,w)` when defined.
    pub lhs: Option<Word>,
    /// `θ**(v,u,w)` when defined.
    pub rhs: Option<Word>,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum CertificateStatus {
    Complete,
    NotCube(Letter, Letter, Letter),
    /// The presentation is not homogeneous, so no noetherianity witness is
    /// available here.
    NotNoetherianCertified,
    Unknown,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CompletenessCertificate {
    pub status: CertificateStatus,
    pub reports: Vec<CubeReport>,
}

impl CompletenessCertificate {
    pub fn is_complete(&self) -> bool {
        self.status == CertificateStatus::Complete
    }
}

enum Partial {
    Defined(Word),
    Undefined,
    Unknown,
}

// The complement of x inside y: the positive part of the reversing of
// x⁻¹·y, so that x·(x\y) is the right-lcm. On letters this restricts to
// θ itself, which is what the cube chains below compose.
fn theta_star(session: &mut ClassifierSession<'_>, x: &Word, y: &Word) -> Partial {
    match session.classify(x, y) {
        PairClass::Complement { v_prime, .. } => Partial::Defined(v_prime),
        PairClass::Exhausted => Partial::Unknown,
        PairClass::Failing { .. } | PairClass::EventuallyPeriodic { .. } => Partial::Undefined,
    }
}

/// `θ**(u,v,w)`, with definedness decided by the classifier.
fn theta_double_star(
    session: &mut ClassifierSession<'_>,
    u: Letter,
    v: Letter,
    w: Letter,
) -> Partial {
    let uv = theta_star(session, &Word::single(u), &Word::single(v));
    let uw = theta_star(session, &Word::single(u), &Word::single(w));
    match (uv, uw) {
        (Partial::Defined(a), Partial::Defined(b)) => theta_star(session, &a, &b),
        (Partial::Undefined, _) | (_, Partial::Undefined) => Partial::Undefined,
        _ => Partial::Unknown,
    }
}

/// Checks the cube condition for one generator triple.
pub fn theta_cube(
    u: Letter,
    v: Letter,
    w: Letter,
    session: &mut ClassifierSession<'_>,
    word_problem: &mut WordProblem<'_>,
) -> CubeReport {
    let lhs = theta_double_star(session, u, v, w);
    let rhs = theta_double_star(session, v, u, w);
    let (status, lhs, rhs) = match (lhs, rhs) {
        (Partial::Defined(a), Partial::Defined(b)) => {
            if word_problem.words_equal(&a, &b) {
                (CubeStatus::HoldsDefined, Some(a), Some(b))
            } else {
                (CubeStatus::Fails, Some(a), Some(b))
            }
        }
        (Partial::Undefined, Partial::Undefined) => (CubeStatus::HoldsUndefined, None, None),
        (Partial::Defined(a), Partial::Undefined) => (CubeStatus::Fails, Some(a), None),
        (Partial::Undefined, Partial::Defined(b)) => (CubeStatus::Fails, None, Some(b)),
        _ => (CubeStatus::Unknown, None, None),
    };
    CubeReport {
        u,
        v,
        w,
        status,
        lhs,
        rhs,
    }
}

/// Sweeps all `|S|³` generator triples and aggregates a certificate.
///
/// Non-homogeneous presentations yield `NotNoetherianCertified` without a
/// sweep. A failing triple (the lexicographically first, since the sweep is
/// ordered) dominates; any unknown triple poisons the certificate to
/// `Unknown`, never to `Complete`.
pub fn certify(
    p: &Presentation,
    limits: ClassifierLimits,
) -> Result<CompletenessCertificate, PresentationError> {
    let table = RightComplementTable::derive(p)?;
    if !p.is_homogeneous() {
        return Ok(CompletenessCertificate {
            status: CertificateStatus::NotNoetherianCertified,
            reports: Vec::new(),
        });
    }
    let mut word_problem = WordProblem::new(p).expect("homogeneous checked above");
    let mut session = ClassifierSession::new(&table, limits);
    let mut reports = Vec::with_capacity(p.alphabet().len().pow(3));
    let mut first_fail = None;
    let mut any_unknown = false;
    for u in p.alphabet().letters() {
        for v in p.alphabet().letters() {
            for w in p.alphabet().letters() {
                let report = theta_cube(u, v, w, &mut session, &mut word_problem);
                match report.status {
                    CubeStatus::Fails if first_fail.is_none() => {
                        first_fail = Some((u, v, w));
                    }
                    CubeStatus::Unknown => any_unknown = true,
                    _ => {}
                }
                reports.push(report);
            }
        }
    }
    let status = if let Some((u, v, w)) = first_fail {
        CertificateStatus::NotCube(u, v, w)
    } else if any_unknown {
        CertificateStatus::Unknown
    } else {
        CertificateStatus::Complete
    };
    Ok(CompletenessCertificate { status, reports })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_presentation, Preset};
    use crate::trichotomy::right_lcm;
    use crate::trichotomy::LcmOutcome;

    fn cube_on(preset: Preset, u: &str, v: &str, w: &str) -> CubeReport {
        let p = preset.presentation();
        let table = RightComplementTable::derive(&p).unwrap();
        let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
        let mut wp = WordProblem::new(&p).unwrap();
        let lu = p.alphabet().letter(u).unwrap();
        let lv = p.alphabet().letter(v).unwrap();
        let lw = p.alphabet().letter(w).unwrap();
        theta_cube(lu, lv, lw, &mut session, &mut wp)
    }

    #[test]
    fn repeated_first_entries_hold() {
        let report = cube_on(Preset::A2t, "a", "a", "b");
        assert!(matches!(
            report.status,
            CubeStatus::HoldsDefined | CubeStatus::HoldsUndefined
        ));
    }

    #[test]
    fn a2t_triple_holds_undefined() {
        // a, b, c have no common right-multiple in this monoid, so both
        // θ** words are undefined and the condition holds vacuously.
        let report = cube_on(Preset::A2t, "a", "b", "c");
        assert_eq!(report.status, CubeStatus::HoldsUndefined);
    }

    #[test]
    fn b3_triple_holds_defined() {
        let report = cube_on(Preset::B3, "a", "b", "c");
        assert_eq!(report.status, CubeStatus::HoldsDefined);
        // θ**(a,b,c) = (a\b)\(a\c) = b\cac and θ**(b,a,c) = a\cb, which
        // are the distinct words cbacabc and cacbcac of one class.
        let p = Preset::B3.presentation();
        assert_eq!(
            p.alphabet().render_word(&report.lhs.unwrap()),
            "cbacabc"
        );
        assert_eq!(
            p.alphabet().render_word(&report.rhs.unwrap()),
            "cacbcac"
        );
    }

    #[test]
    fn free_triple_holds_undefined() {
        let p = parse_presentation("generators: a b c\nrelations:\n").unwrap();
        let table = RightComplementTable::derive(&p).unwrap();
        let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
        let mut wp = WordProblem::new(&p).unwrap();
        let l = |s: &str| p.alphabet().letter(s).unwrap();
        let report = theta_cube(l("a"), l("b"), l("c"), &mut session, &mut wp);
        assert_eq!(report.status, CubeStatus::HoldsUndefined);
    }

    #[test]
    fn presets_certify_complete() {
        for preset in [Preset::A2t, Preset::A3, Preset::B3, Preset::C2t, Preset::G2t] {
            let p = preset.presentation();
            let cert = certify(&p, ClassifierLimits::default()).unwrap();
            assert!(cert.is_complete(), "{} did not certify", preset.name());
            let triples = p.alphabet().len().pow(3);
            assert_eq!(cert.reports.len(), triples);
        }
    }

    #[test]
    fn non_homogeneous_is_rejected() {
        let p = parse_presentation("generators: a b\nrelations:\nab = b\n").unwrap();
        let cert = certify(&p, ClassifierLimits::default()).unwrap();
        assert_eq!(cert.status, CertificateStatus::NotNoetherianCertified);
    }

    #[test]
    fn synthetic_cube_failure() {
        // θ(a,b) = θ(a,c) = a while θ(b,c) is undefined, so θ**(a,b,c) = ε
        // is defined but θ**(b,a,c) is not.
        let p = parse_presentation(
            "generators: a b c\nrelations:\naa = ba\naa = ca\n",
        )
        .unwrap();
        let table = RightComplementTable::derive(&p).unwrap();
        let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
        let mut wp = WordProblem::new(&p).unwrap();
        let l = |s: &str| p.alphabet().letter(s).unwrap();
        let report = theta_cube(l("a"), l("b"), l("c"), &mut session, &mut wp);
        assert_eq!(report.status, CubeStatus::Fails);

        let cert = certify(&p, ClassifierLimits::default()).unwrap();
        assert!(matches!(cert.status, CertificateStatus::NotCube(..)));
    }

    #[test]
    fn certify_is_deterministic_and_idempotent() {
        let p = Preset::B3.presentation();
        let first = certify(&p, ClassifierLimits::default()).unwrap();
        let second = certify(&p, ClassifierLimits::default()).unwrap();
        assert_eq!(first, second);
    }

    #[test]
    fn swapping_the_last_two_entries_preserves_definedness() {
        for preset in [Preset::A2t, Preset::A3, Preset::B3, Preset::C2t, Preset::G2t] {
            let p = preset.presentation();
            let table = RightComplementTable::derive(&p).unwrap();
            let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
            for u in p.alphabet().letters() {
                for v in p.alphabet().letters() {
                    for w in p.alphabet().letters() {
                        let uvw = super::theta_double_star(&mut session, u, v, w);
                        let uwv = super::theta_double_star(&mut session, u, w, v);
                        assert_eq!(
                            matches!(uvw, Partial::Defined(_)),
                            matches!(uwv, Partial::Defined(_)),
                            "{} ({u:?},{v:?},{w:?})",
                            preset.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn generator_lcms_match_theta() {
        // For complete presets, lcm(s, t) ≡ s·θ(s,t) whenever θ is defined.
        for preset in [Preset::A2t, Preset::A3, Preset::B3, Preset::C2t, Preset::G2t] {
            let p = preset.presentation();
            let table = RightComplementTable::derive(&p).unwrap();
            let mut session = ClassifierSession::new(&table, ClassifierLimits::default());
            let mut wp = WordProblem::new(&p).unwrap();
            for s in p.alphabet().letters() {
                for t in p.alphabet().letters() {
                    if let Some(theta) = table.get(s, t) {
                        let expected = Word::single(s).concat(theta);
                        match right_lcm(&mut session, &Word::single(s), &Word::single(t)) {
                            LcmOutcome::Lcm(m) => assert!(wp.words_equal(&m, &expected)),
                            other => panic!("{other:?}"),
                        }
                    }
                }
            }
        }
    }
}
