//! Monoid presentations, the right-complemented shape, and the syntactic
//! right-complement table.
//!
//! A presentation is right-complemented when it has no relation with an
//! empty side, no relation `s… = s…`, and at most one relation `s… = t…`
//! per unordered pair of generators. Such a presentation determines the
//! partial map θ with `θ(s,s) = ε` and `s·θ(s,t) = t·θ(t,s)` whenever a
//! relation joins `s` and `t`.

use std::fmt;

use thiserror::Error;

use crate::words::{Alphabet, AlphabetError, Letter, Word};

/// One defining relation `lhs = rhs`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Relation {
    pub lhs: Word,
    pub rhs: Word,
}

impl Relation {
    pub fn new(lhs: Word, rhs: Word) -> Self {
        Relation { lhs, rhs }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PresentationError {
    #[error(transparent)]
    Alphabet(#[from] AlphabetError),
    #[error("relation {0} has an empty side")]
    EpsilonRelation(String),
    #[error("relation {0} relates two words with the same head letter")]
    EqualHeads(String),
    #[error("more than one relation for the generator pair ({0}, {1})")]
    DuplicatePair(String, String),
    #[error("relation {0} uses letters outside the alphabet")]
    ForeignLetters(String),
    #[error("Coxeter matrix is not square ({rows} rows, expected {expected})")]
    CoxeterShape { rows: usize, expected: usize },
    #[error("Coxeter matrix diagonal entry m({0},{0}) must be 1")]
    CoxeterDiagonal(usize),
    #[error("Coxeter matrix entry m({0},{1}) must be at least 2 or inf")]
    CoxeterRange(usize, usize),
    #[error("Coxeter matrix is not symmetric at ({0},{1})")]
    CoxeterAsymmetric(usize, usize),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown preset `{0}`")]
    UnknownPreset(String),
}

/// A finite presentation `⟨S | R⟩⁺`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Presentation {
    alphabet: Alphabet,
    relations: Vec<Relation>,
}

impl Presentation {
    pub fn new(
        alphabet: Alphabet,
        relations: Vec<Relation>,
    ) -> Result<Self, PresentationError> {
        for r in &relations {
            if !alphabet.contains_word(&r.lhs) || !alphabet.contains_word(&r.rhs) {
                return Err(PresentationError::ForeignLetters(format!(
                    "{} = {}",
                    alphabet.render_word(&r.lhs),
                    alphabet.render_word(&r.rhs)
                )));
            }
        }
        Ok(Presentation {
            alphabet,
            relations,
        })
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn relations(&self) -> &[Relation] {
        &self.relations
    }

    /// True iff every relation is length preserving.
    pub fn is_homogeneous(&self) -> bool {
        self.relations.iter().all(|r| r.lhs.len() == r.rhs.len())
    }

    fn render_relation(&self, r: &Relation) -> String {
        format!(
            "{} = {}",
            self.alphabet.render_word(&r.lhs),
            self.alphabet.render_word(&r.rhs)
        )
    }
}

/// Coxeter matrix entry: an integer `m ≥ 2`, or infinity (no relation).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CoxeterEntry {
    Finite(u32),
    Infinite,
}

impl fmt::Display for CoxeterEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoxeterEntry::Finite(m) => write!(f, "{m}"),
            CoxeterEntry::Infinite => write!(f, "inf"),
        }
    }
}

/// A symmetric matrix of braid-relation lengths.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CoxeterMatrix {
    n: usize,
    entries: Vec<CoxeterEntry>,
}

impl CoxeterMatrix {
    pub fn new(rows: Vec<Vec<CoxeterEntry>>) -> Result<Self, PresentationError> {
        let n = rows.len();
        for row in &rows {
            if row.len() != n {
                return Err(PresentationError::CoxeterShape {
                    rows: row.len(),
                    expected: n,
                });
            }
        }
        let entries: Vec<CoxeterEntry> = rows.into_iter().flatten().collect();
        let m = CoxeterMatrix { n, entries };
        for i in 0..n {
            if m.get(i, i) != CoxeterEntry::Finite(1) {
                return Err(PresentationError::CoxeterDiagonal(i));
            }
            for j in 0..n {
                if i != j {
                    if let CoxeterEntry::Finite(v) = m.get(i, j) {
                        if v < 2 {
                            return Err(PresentationError::CoxeterRange(i, j));
                        }
                    }
                    if m.get(i, j) != m.get(j, i) {
                        return Err(PresentationError::CoxeterAsymmetric(i, j));
                    }
                }
            }
        }
        Ok(m)
    }

    /// Matrix with every off-diagonal entry 2, to be adjusted with [`set`].
    ///
    /// [`set`]: CoxeterMatrix::set
    pub fn commuting(n: usize) -> Self {
        let mut entries = vec![CoxeterEntry::Finite(2); n * n];
        for i in 0..n {
            entries[i * n + i] = CoxeterEntry::Finite(1);
        }
        CoxeterMatrix { n, entries }
    }

    /// Sets `m(i,j) = m(j,i) = m`.
    pub fn set(&mut self, i: usize, j: usize, m: CoxeterEntry) {
        assert!(i != j, "diagonal entries are fixed to 1");
        self.entries[i * self.n + j] = m;
        self.entries[j * self.n + i] = m;
    }

    pub fn size(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> CoxeterEntry {
        self.entries[i * self.n + j]
    }
}

/// Alternating product `xyxy…` with `count` factors.
fn alternating(x: Letter, y: Letter, count: u32) -> Word {
    Word::from_letters((0..count).map(|k| if k % 2 == 0 { x } else { y }))
}

/// The Artin-Tits presentation of a Coxeter matrix: one relation
/// `aba… = bab…` with `m(a,b)` factors per pair with finite `m(a,b)`.
pub fn build_artin_tits(
    matrix: &CoxeterMatrix,
    alphabet: Alphabet,
) -> Result<Presentation, PresentationError> {
    if alphabet.len() != matrix.size() {
        return Err(PresentationError::CoxeterShape {
            rows: matrix.size(),
            expected: alphabet.len(),
        });
    }
    let letters: Vec<Letter> = alphabet.letters().collect();
    let mut relations = Vec::new();
    for i in 0..letters.len() {
        for j in (i + 1)..letters.len() {
            if let CoxeterEntry::Finite(m) = matrix.get(i, j) {
                relations.push(Relation::new(
                    alternating(letters[i], letters[j], m),
                    alternating(letters[j], letters[i], m),
                ));
            }
        }
    }
    Presentation::new(alphabet, relations)
}

/// The syntactic right-complement θ of a right-complemented presentation.
///
/// Both orientations of every relation are stored, so lookups inside the
/// reversing loop never scan the relation list.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RightComplementTable {
    n: usize,
    // Row-major (s, t) -> θ(s,t); diagonal entries hold ε.
    entries: Vec<Option<Word>>,
}

impl RightComplementTable {
    /// Validates the right-complemented shape of `p` and extracts θ.
    pub fn derive(p: &Presentation) -> Result<Self, PresentationError> {
        let n = p.alphabet().len();
        let mut entries: Vec<Option<Word>> = vec![None; n * n];
        for i in 0..n {
            entries[i * n + i] = Some(Word::empty());
        }
        for r in p.relations() {
            let (s, t) = match (r.lhs.first(), r.rhs.first()) {
                (Some(s), Some(t)) => (s, t),
                _ => return Err(PresentationError::EpsilonRelation(p.render_relation(r))),
            };
            if s == t {
                return Err(PresentationError::EqualHeads(p.render_relation(r)));
            }
            let slot = s.index() * n + t.index();
            if entries[slot].is_some() {
                return Err(PresentationError::DuplicatePair(
                    p.alphabet().name(s).to_string(),
                    p.alphabet().name(t).to_string(),
                ));
            }
            entries[slot] = Some(r.lhs.suffix_from(1));
            entries[t.index() * n + s.index()] = Some(r.rhs.suffix_from(1));
        }
        Ok(RightComplementTable { n, entries })
    }

    pub fn alphabet_len(&self) -> usize {
        self.n
    }

    /// `θ(s,t)`, or `None` when no relation joins `s` and `t`.
    pub fn get(&self, s: Letter, t: Letter) -> Option<&Word> {
        self.entries[s.index() * self.n + t.index()].as_ref()
    }

    pub fn is_defined(&self, s: Letter, t: Letter) -> bool {
        self.get(s, t).is_some()
    }

    /// True iff every defined complement is a letter or ε.
    pub fn is_short(&self) -> bool {
        self.entries
            .iter()
            .flatten()
            .all(|w| w.len() <= 1)
    }
}

/// Built-in presentations used throughout the test corpus. The `t` suffix
/// reads "tilde" (affine type).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Preset {
    A2,
    A3,
    B3,
    A2t,
    A3t,
    A4t,
    B3t,
    C2t,
    C3t,
    G2t,
    D4t,
}

impl Preset {
    pub const ALL: [Preset; 11] = [
        Preset::A2,
        Preset::A3,
        Preset::B3,
        Preset::A2t,
        Preset::A3t,
        Preset::A4t,
        Preset::B3t,
        Preset::C2t,
        Preset::C3t,
        Preset::G2t,
        Preset::D4t,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::A2 => "A2",
            Preset::A3 => "A3",
            Preset::B3 => "B3",
            Preset::A2t => "A2t",
            Preset::A3t => "A3t",
            Preset::A4t => "A4t",
            Preset::B3t => "B3t",
            Preset::C2t => "C2t",
            Preset::C3t => "C3t",
            Preset::G2t => "G2t",
            Preset::D4t => "D4t",
        }
    }

    pub fn parse(name: &str) -> Result<Self, PresentationError> {
        Preset::ALL
            .into_iter()
            .find(|p| p.name().eq_ignore_ascii_case(name))
            .ok_or_else(|| PresentationError::UnknownPreset(name.to_string()))
    }

    pub fn coxeter_matrix(self) -> CoxeterMatrix {
        use CoxeterEntry::Finite;
        let f = Finite;
        let mut m;
        match self {
            // a -3- b
            Preset::A2 => {
                m = CoxeterMatrix::commuting(2);
                m.set(0, 1, f(3));
            }
            // a -3- c -3- b
            Preset::A3 => {
                m = CoxeterMatrix::commuting(3);
                m.set(0, 2, f(3));
                m.set(2, 1, f(3));
            }
            // a -4- c -3- b
            Preset::B3 => {
                m = CoxeterMatrix::commuting(3);
                m.set(0, 2, f(4));
                m.set(2, 1, f(3));
            }
            // triangle a, b, c, all bonds 3
            Preset::A2t => {
                m = CoxeterMatrix::commuting(3);
                m.set(0, 1, f(3));
                m.set(1, 2, f(3));
                m.set(2, 0, f(3));
            }
            // square a - b - c - d - a, all bonds 3
            Preset::A3t => {
                m = CoxeterMatrix::commuting(4);
                m.set(0, 1, f(3));
                m.set(1, 2, f(3));
                m.set(2, 3, f(3));
                m.set(3, 0, f(3));
            }
            // pentagon a - b - c - d - e - a, all bonds 3
            Preset::A4t => {
                m = CoxeterMatrix::commuting(5);
                m.set(0, 1, f(3));
                m.set(1, 2, f(3));
                m.set(2, 3, f(3));
                m.set(3, 4, f(3));
                m.set(4, 0, f(3));
            }
            // fork {a, b} -3- c, tail c -4- d
            Preset::B3t => {
                m = CoxeterMatrix::commuting(4);
                m.set(0, 2, f(3));
                m.set(1, 2, f(3));
                m.set(2, 3, f(4));
            }
            // path a -4- b -4- c
            Preset::C2t => {
                m = CoxeterMatrix::commuting(3);
                m.set(0, 1, f(4));
                m.set(1, 2, f(4));
            }
            // path a -4- b -3- c -4- d
            Preset::C3t => {
                m = CoxeterMatrix::commuting(4);
                m.set(0, 1, f(4));
                m.set(1, 2, f(3));
                m.set(2, 3, f(4));
            }
            // path a -6- b -3- c
            Preset::G2t => {
                m = CoxeterMatrix::commuting(3);
                m.set(0, 1, f(6));
                m.set(1, 2, f(3));
            }
            // central a bonded -3- to each of b, c, d, e
            Preset::D4t => {
                m = CoxeterMatrix::commuting(5);
                m.set(0, 1, f(3));
                m.set(0, 2, f(3));
                m.set(0, 3, f(3));
                m.set(0, 4, f(3));
            }
        }
        m
    }

    pub fn presentation(self) -> Presentation {
        let m = self.coxeter_matrix();
        let alphabet = Alphabet::latin(m.size()).expect("preset alphabets are small");
        build_artin_tits(&m, alphabet).expect("preset matrices are valid")
    }
}

/// Parses the presentation file format.
///
/// ```text
/// generators: a b c
/// relations:
/// aba = bab
/// bcb = cbc
/// cac = aca
/// ```
///
/// or, equivalently, a Coxeter matrix with `inf` for absent relations:
///
/// ```text
/// generators: a b c
/// coxeter:
/// 1 3 3
/// 3 1 3
/// 3 3 1
/// ```
pub fn parse_presentation(input: &str) -> Result<Presentation, PresentationError> {
    let mut lines = input
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (gen_line_no, gen_line) = lines.next().ok_or(PresentationError::Parse {
        line: 0,
        message: "empty presentation file".to_string(),
    })?;
    let names = gen_line
        .strip_prefix("generators:")
        .ok_or(PresentationError::Parse {
            line: gen_line_no,
            message: "expected a `generators:` line".to_string(),
        })?;
    let alphabet = Alphabet::new(names.split_whitespace())?;

    let (mode_line_no, mode_line) = lines.next().ok_or(PresentationError::Parse {
        line: gen_line_no,
        message: "expected a `relations:` or `coxeter:` section".to_string(),
    })?;

    match mode_line {
        "relations:" => {
            let mut relations = Vec::new();
            let mut seen = Vec::new();
            for (no, line) in lines {
                let (lhs, rhs) = line.split_once('=').ok_or(PresentationError::Parse {
                    line: no,
                    message: "expected `LHS = RHS`".to_string(),
                })?;
                let lhs = alphabet
                    .parse_word(lhs.trim())
                    .map_err(|e| PresentationError::Parse {
                        line: no,
                        message: e.to_string(),
                    })?;
                let rhs = alphabet
                    .parse_word(rhs.trim())
                    .map_err(|e| PresentationError::Parse {
                        line: no,
                        message: e.to_string(),
                    })?;
                if seen.contains(&(lhs.clone(), rhs.clone())) {
                    return Err(PresentationError::Parse {
                        line: no,
                        message: "duplicate relation".to_string(),
                    });
                }
                seen.push((lhs.clone(), rhs.clone()));
                relations.push(Relation::new(lhs, rhs));
            }
            Presentation::new(alphabet, relations)
        }
        "coxeter:" => {
            let mut rows = Vec::new();
            for (no, line) in lines {
                let mut row = Vec::new();
                for tok in line.split_whitespace() {
                    let entry = if tok == "inf" {
                        CoxeterEntry::Infinite
                    } else {
                        let v: u32 = tok.parse().map_err(|_| PresentationError::Parse {
                            line: no,
                            message: format!("bad matrix entry `{tok}`"),
                        })?;
                        CoxeterEntry::Finite(v)
                    };
                    row.push(entry);
                }
                rows.push(row);
            }
            if rows.len() != alphabet.len() {
                return Err(PresentationError::CoxeterShape {
                    rows: rows.len(),
                    expected: alphabet.len(),
                });
            }
            let matrix = CoxeterMatrix::new(rows)?;
            build_artin_tits(&matrix, alphabet)
        }
        other => Err(PresentationError::Parse {
            line: mode_line_no,
            message: format!("expected `relations:` or `coxeter:`, found `{other}`"),
        }),
    }
}
