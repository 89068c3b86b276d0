//! Least common multiples and minimal Garside families in monoids given by
//! right-complemented presentations.
//!
//! The toolkit is organized around right-reversing: rewriting a signed word
//! by replacing factors `s⁻¹·t` with `θ(s,t)·θ(t,s)⁻¹` until the word has
//! the shape `v'·u'⁻¹`. Raw reversing may run forever; the [`trichotomy`]
//! classifier detects the cyclic patterns behind every infinite run and
//! turns reversing into a total decision procedure for common
//! right-multiples, assuming completeness (certified by the θ-cube
//! condition in [`completeness`]) and a finite Garside family. On top of
//! it, [`garside_family`] closes the generator set under right-lcm,
//! right-complement, and right-divisor into the minimal Garside family.
//!
//! Presentations come from files, from Coxeter matrices, or from the
//! built-in [`Preset`]s; the [`word_problem`] module solves the word
//! problem for homogeneous presentations by breadth-first derivation and
//! provides the independent brute-force oracle used by the test suite.

pub mod completeness;
pub mod diagram;
pub mod garside_family;
pub mod presentation;
pub mod reversing;
pub mod trichotomy;
pub mod word_problem;
pub mod words;

pub use completeness::{certify, CertificateStatus, CompletenessCertificate, CubeReport, CubeStatus};
pub use diagram::{export_trace_dot, ReversingGrid};
pub use garside_family::{
    compute_minimal_garside, extremal_elements, family_table, verify_garside, ClosureLimits,
    ClosureStats, GarsideError, GarsideFamily, TableRow,
};
pub use presentation::{
    build_artin_tits, parse_presentation, CoxeterEntry, CoxeterMatrix, Presentation,
    PresentationError, Preset, Relation, RightComplementTable,
};
pub use reversing::{
    extended_complement, reverse, reverse_step, reverse_traced, reverse_with_strategy,
    ComplementOutcome, ReverseStepError, ReversingOutcome, ReversingTrace, Strategy, TraceStep,
};
pub use trichotomy::{
    has_common_right_multiple, right_lcm, ClassifierLimits, ClassifierSession, LcmOutcome,
    PairClass, PairKey, SessionStats, Ternary,
};
pub use word_problem::{ElementSet, EquivalenceClass, WordProblem, WordProblemError};
pub use words::{Alphabet, AlphabetError, Letter, Sign, SignedLetter, SignedWord, Word};
