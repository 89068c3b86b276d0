//! Alphabets, positive words, and signed words.
//!
//! Letters are interned to small integer ids at alphabet construction and
//! every comparison is id-based. Words are immutable values: all operations
//! return new words, so they can be shared freely between memo tables and
//! traces.

use std::fmt;

use thiserror::Error;

/// A generator, identified by its index in the owning [`Alphabet`].
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter(pub(crate) u8);

impl Letter {
    /// Index of this letter in its alphabet.
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AlphabetError {
    #[error("alphabet has no letters")]
    Empty,
    #[error("letter name may not be empty")]
    EmptyName,
    #[error("duplicate letter name `{0}`")]
    DuplicateName(String),
    #[error("alphabet size {0} exceeds the supported maximum of 255")]
    TooLarge(usize),
    #[error("unknown letter `{0}`")]
    UnknownLetter(String),
    #[error("cannot parse `{0}` as a word over this alphabet")]
    UnparsableWord(String),
}

/// A finite ordered set of named generators.
///
/// The declared order is load-bearing: canonical representatives elsewhere
/// are the lexicographically least class members under this order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Alphabet {
    names: Vec<String>,
}

impl Alphabet {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self, AlphabetError> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(AlphabetError::Empty);
        }
        if names.len() > u8::MAX as usize {
            return Err(AlphabetError::TooLarge(names.len()));
        }
        for (i, n) in names.iter().enumerate() {
            if n.is_empty() {
                return Err(AlphabetError::EmptyName);
            }
            if n.contains(['\'', '.', ' ', '\t']) {
                return Err(AlphabetError::UnparsableWord(n.clone()));
            }
            if names[..i].contains(n) {
                return Err(AlphabetError::DuplicateName(n.clone()));
            }
        }
        Ok(Alphabet { names })
    }

    /// Alphabet `a, b, c, ...` with `n` single-letter names.
    pub fn latin(n: usize) -> Result<Self, AlphabetError> {
        if n > 26 {
            return Err(AlphabetError::TooLarge(n));
        }
        Alphabet::new((0..n).map(|i| ((b'a' + i as u8) as char).to_string()))
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn letters(&self) -> impl Iterator<Item = Letter> + '_ {
        (0..self.names.len() as u8).map(Letter)
    }

    pub fn name(&self, letter: Letter) -> &str {
        &self.names[letter.index()]
    }

    pub fn letter(&self, name: &str) -> Result<Letter, AlphabetError> {
        self.names
            .iter()
            .position(|n| n == name)
            .map(|i| Letter(i as u8))
            .ok_or_else(|| AlphabetError::UnknownLetter(name.to_string()))
    }

    fn all_single_char(&self) -> bool {
        self.names.iter().all(|n| n.chars().count() == 1)
    }

    /// Render a positive word. Single-character alphabets concatenate the
    /// names; otherwise names are joined with `.`.
    pub fn render_word(&self, w: &Word) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        let sep = if self.all_single_char() { "" } else { "." };
        w.letters()
            .map(|l| self.name(l))
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Render a signed word. A trailing apostrophe marks an inverse letter,
    /// e.g. `a'c'a'bc` for `(aca)⁻¹ · bc`. This is the one inverse-rendering
    /// convention used everywhere in this crate.
    pub fn render_signed(&self, w: &SignedWord) -> String {
        if w.is_empty() {
            return "e".to_string();
        }
        let sep = if self.all_single_char() { "" } else { "." };
        w.entries()
            .map(|e| {
                let mut s = self.name(e.letter).to_string();
                if e.sign == Sign::Negative {
                    s.push('\'');
                }
                s
            })
            .collect::<Vec<_>>()
            .join(sep)
    }

    /// Parse a positive word. `e` denotes the empty word. Tokens may be
    /// separated by `.` or whitespace; for single-character alphabets the
    /// separators can be omitted (`aba`).
    pub fn parse_word(&self, input: &str) -> Result<Word, AlphabetError> {
        let signed = self.parse_signed(input)?;
        signed
            .as_positive()
            .ok_or_else(|| AlphabetError::UnparsableWord(input.to_string()))
    }

    /// Parse a signed word using the trailing-apostrophe convention.
    pub fn parse_signed(&self, input: &str) -> Result<SignedWord, AlphabetError> {
        let input = input.trim();
        if input.is_empty() || input == "e" {
            return Ok(SignedWord::empty());
        }
        let mut entries = Vec::new();
        if input.contains(['.', ' ', '\t']) {
            for tok in input.split(['.', ' ', '\t']).filter(|t| !t.is_empty()) {
                entries.push(self.parse_token(tok)?);
            }
        } else {
            // Greedy longest-name match; with single-char names this is a
            // plain per-character scan.
            let mut rest = input;
            while !rest.is_empty() {
                let mut best: Option<(usize, Letter)> = None;
                for l in self.letters() {
                    let name = self.name(l);
                    if rest.starts_with(name)
                        && best.map_or(true, |(len, _)| name.len() > len)
                    {
                        best = Some((name.len(), l));
                    }
                }
                let (len, letter) =
                    best.ok_or_else(|| AlphabetError::UnparsableWord(input.to_string()))?;
                rest = &rest[len..];
                let sign = if let Some(stripped) = rest.strip_prefix('\'') {
                    rest = stripped;
                    Sign::Negative
                } else {
                    Sign::Positive
                };
                entries.push(SignedLetter { letter, sign });
            }
        }
        Ok(SignedWord { entries })
    }

    fn parse_token(&self, tok: &str) -> Result<SignedLetter, AlphabetError> {
        let (name, sign) = match tok.strip_suffix('\'') {
            Some(base) => (base, Sign::Negative),
            None => (tok, Sign::Positive),
        };
        Ok(SignedLetter {
            letter: self.letter(name)?,
            sign,
        })
    }

    /// True if every letter of `w` is a letter of this alphabet.
    pub fn contains_word(&self, w: &Word) -> bool {
        w.letters().all(|l| l.index() < self.len())
    }
}

/// A finite sequence of letters; the free-monoid element it spells.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Word {
    letters: Vec<Letter>,
}

impl Word {
    pub fn empty() -> Self {
        Word::default()
    }

    pub fn from_letters(letters: impl IntoIterator<Item = Letter>) -> Self {
        Word {
            letters: letters.into_iter().collect(),
        }
    }

    pub fn single(letter: Letter) -> Self {
        Word {
            letters: vec![letter],
        }
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> impl DoubleEndedIterator<Item = Letter> + ExactSizeIterator + '_ {
        self.letters.iter().copied()
    }

    pub fn as_slice(&self) -> &[Letter] {
        &self.letters
    }

    pub fn first(&self) -> Option<Letter> {
        self.letters.first().copied()
    }

    /// Letters of `self` followed by letters of `other`.
    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Word { letters }
    }

    pub fn prefix(&self, len: usize) -> Word {
        Word {
            letters: self.letters[..len].to_vec(),
        }
    }

    pub fn suffix_from(&self, start: usize) -> Word {
        Word {
            letters: self.letters[start..].to_vec(),
        }
    }

    /// Splits off the first letter; `None` on the empty word.
    pub fn split_first(&self) -> Option<(Letter, Word)> {
        let (&head, tail) = self.letters.split_first()?;
        Some((
            head,
            Word {
                letters: tail.to_vec(),
            },
        ))
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w[")?;
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "{}", l.0)?;
        }
        write!(f, "]")
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug, PartialOrd, Ord)]
pub enum Sign {
    Positive,
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct SignedLetter {
    pub letter: Letter,
    pub sign: Sign,
}

impl SignedLetter {
    pub fn positive(letter: Letter) -> Self {
        SignedLetter {
            letter,
            sign: Sign::Positive,
        }
    }

    pub fn negative(letter: Letter) -> Self {
        SignedLetter {
            letter,
            sign: Sign::Negative,
        }
    }

    pub fn inverse(self) -> Self {
        SignedLetter {
            letter: self.letter,
            sign: self.sign.flip(),
        }
    }
}

/// A word over the letters and their formal inverses.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct SignedWord {
    entries: Vec<SignedLetter>,
}

impl SignedWord {
    pub fn empty() -> Self {
        SignedWord::default()
    }

    pub fn from_entries(entries: impl IntoIterator<Item = SignedLetter>) -> Self {
        SignedWord {
            entries: entries.into_iter().collect(),
        }
    }

    /// The all-positive embedding of a positive word.
    pub fn from_word(w: &Word) -> Self {
        SignedWord {
            entries: w.letters().map(SignedLetter::positive).collect(),
        }
    }

    /// `u⁻¹ · v`, the signed word whose reversing computes the extended
    /// complement of the pair `(u, v)`.
    pub fn fraction(u: &Word, v: &Word) -> Self {
        SignedWord::from_word(u)
            .formal_inverse()
            .concat(&SignedWord::from_word(v))
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> impl Iterator<Item = SignedLetter> + '_ {
        self.entries.iter().copied()
    }

    pub fn as_slice(&self) -> &[SignedLetter] {
        &self.entries
    }

    pub fn concat(&self, other: &SignedWord) -> SignedWord {
        let mut entries = Vec::with_capacity(self.len() + other.len());
        entries.extend_from_slice(&self.entries);
        entries.extend_from_slice(&other.entries);
        SignedWord { entries }
    }

    /// Reverses the order of the letters and flips every sign. This is an
    /// involution.
    pub fn formal_inverse(&self) -> SignedWord {
        SignedWord {
            entries: self.entries.iter().rev().map(|e| e.inverse()).collect(),
        }
    }

    /// `Some(w)` when every entry is positive.
    pub fn as_positive(&self) -> Option<Word> {
        if self.entries.iter().any(|e| e.sign == Sign::Negative) {
            return None;
        }
        Some(Word::from_letters(self.entries.iter().map(|e| e.letter)))
    }

    /// Splits a word of the shape `v·u⁻¹` (all positives before all
    /// negatives) into `(v, u)`. Any other shape yields `None`.
    pub fn as_positive_negative(&self) -> Option<(Word, Word)> {
        let split = self
            .entries
            .iter()
            .position(|e| e.sign == Sign::Negative)
            .unwrap_or(self.entries.len());
        if self.entries[split..].iter().any(|e| e.sign == Sign::Positive) {
            return None;
        }
        let positive = Word::from_letters(self.entries[..split].iter().map(|e| e.letter));
        // The negative suffix reads u⁻¹; undo the inversion to recover u.
        let negative = Word::from_letters(self.entries[split..].iter().rev().map(|e| e.letter));
        Some((positive, negative))
    }

    /// True if `pattern` occurs as a contiguous factor of `self`.
    pub fn contains_factor(&self, pattern: &SignedWord) -> bool {
        if pattern.is_empty() {
            return true;
        }
        self.entries
            .windows(pattern.len())
            .any(|w| w == pattern.as_slice())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "sw[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            match e.sign {
                Sign::Positive => write!(f, "{}", e.letter.0)?,
                Sign::Negative => write!(f, "{}'", e.letter.0)?,
            }
        }
        write!(f, "]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn abc() -> Alphabet {
        Alphabet::latin(3).unwrap()
    }

    fn w(alpha: &Alphabet, s: &str) -> Word {
        alpha.parse_word(s).unwrap()
    }

    #[test]
    fn concat_basics() {
        let alpha = abc();
        assert_eq!(w(&alpha, "ab").concat(&w(&alpha, "c")), w(&alpha, "abc"));
        let v = w(&alpha, "bca");
        assert_eq!(Word::empty().concat(&v), v);
        assert_eq!(v.concat(&Word::empty()), v);
    }

    #[test]
    fn inverse_reverses_and_flips() {
        let alpha = abc();
        // Inverse of b·a reads a⁻¹ then b⁻¹.
        let ba = SignedWord::from_word(&w(&alpha, "ba"));
        let inv = ba.formal_inverse();
        assert_eq!(alpha.render_signed(&inv), "a'b'");
        assert_eq!(SignedWord::empty().formal_inverse(), SignedWord::empty());
    }

    #[test]
    fn positive_negative_split() {
        let alpha = abc();
        let sw = alpha.parse_signed("bcacba'c'a'").unwrap();
        let (pos, neg) = sw.as_positive_negative().unwrap();
        assert_eq!(pos, w(&alpha, "bcacb"));
        assert_eq!(neg, w(&alpha, "aca"));
        assert!(alpha.parse_signed("a'b").unwrap().as_positive_negative().is_none());
    }

    #[test]
    fn parse_and_render_round_trip() {
        let alpha = abc();
        for s in ["e", "a", "abc", "a'b'c", "ab'ca'"] {
            let sw = alpha.parse_signed(s).unwrap();
            assert_eq!(alpha.render_signed(&sw), *s);
        }
        let multi = Alphabet::new(["s1", "s2"]).unwrap();
        let sw = multi.parse_signed("s1.s2'.s1").unwrap();
        assert_eq!(multi.render_signed(&sw), "s1.s2'.s1");
    }

    #[test]
    fn alphabet_rejects_duplicates() {
        assert_eq!(
            Alphabet::new(["a", "a"]).unwrap_err(),
            AlphabetError::DuplicateName("a".to_string())
        );
        assert!(Alphabet::new(["a", ""]).is_err());
    }

    fn arb_word(n_letters: u8, max_len: usize) -> impl Strategy<Value = Word> {
        prop::collection::vec(0..n_letters, 0..=max_len)
            .prop_map(|ids| Word::from_letters(ids.into_iter().map(Letter)))
    }

    fn arb_signed(n_letters: u8, max_len: usize) -> impl Strategy<Value = SignedWord> {
        prop::collection::vec((0..n_letters, prop::bool::ANY), 0..=max_len).prop_map(|entries| {
            SignedWord::from_entries(entries.into_iter().map(|(id, neg)| SignedLetter {
                letter: Letter(id),
                sign: if neg { Sign::Negative } else { Sign::Positive },
            }))
        })
    }

    proptest! {
        #[test]
        fn concat_is_associative_with_length_additivity(
            u in arb_word(4, 8), v in arb_word(4, 8), t in arb_word(4, 8)
        ) {
            prop_assert_eq!(u.concat(&v).concat(&t), u.concat(&v.concat(&t)));
            prop_assert_eq!(u.concat(&v).len(), u.len() + v.len());
        }

        #[test]
        fn formal_inverse_is_an_involution(sw in arb_signed(4, 12)) {
            prop_assert_eq!(sw.formal_inverse().formal_inverse(), sw);
        }

        #[test]
        fn inverse_of_concat_swaps(u in arb_signed(4, 8), v in arb_signed(4, 8)) {
            prop_assert_eq!(
                u.concat(&v).formal_inverse(),
                v.formal_inverse().concat(&u.formal_inverse())
            );
        }
    }
}
