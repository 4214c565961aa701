//! Free involutive monoids on a finite alphabet.
//!
//! The carrier is the set of signed lists `(2 × V)*`; concatenation is the
//! multiplication and the empty list the unit. Two involutions are provided:
//! the non-reversing one flips every sign in place, the reversing one flips
//! every sign and reverses the list.

mod monoids;
mod syntax;
mod universal;

pub use monoids::{
    cyclic_group_table, symmetric_group_table, FreeInvolutiveMonoid, IntAdd, InvolutiveMonoid, MultiplicativeMonoid,
    TableMonoid,
};
pub use syntax::{parse_word, ParseError};
pub use universal::{check_free_involutions, word_universal_check, word_universal_check_with};

use alloc::string::{String, ToString};
use alloc::sync::Arc;
use alloc::vec::Vec;
use core::fmt;

/// One of the two signs `+`, `−`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn negate(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

/// How an involution interacts with multiplication.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Mode {
    /// `(x·y)⁻ = y⁻·x⁻`
    Reversing,
    /// `(x·y)⁻ = x⁻·y⁻`
    NonReversing,
}

impl Mode {
    pub fn as_str(self) -> &'static str {
        match self {
            Mode::Reversing => "reversing",
            Mode::NonReversing => "non-reversing",
        }
    }

    pub fn parse(text: &str) -> Option<Mode> {
        match text {
            "reversing" => Some(Mode::Reversing),
            "non-reversing" | "nonreversing" => Some(Mode::NonReversing),
            _ => None,
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum WordError {
    #[error("words are over different alphabets")]
    AlphabetMismatch,
    #[error("symbol {0:?} is not in the alphabet")]
    UnknownSymbol(String),
    #[error("duplicate symbol {0:?} in alphabet")]
    DuplicateSymbol(String),
    #[error("target monoid is not enumerable")]
    NotEnumerable,
    #[error("target monoid does not support {0} involution")]
    ModeMismatch(Mode),
    #[error("no value given for symbol {0:?}")]
    MissingValue(String),
}

/// A finite, ordered set of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Alphabet {
    symbols: Vec<String>,
}

impl Alphabet {
    pub fn new<I, T>(symbols: I) -> Result<Arc<Self>, WordError>
    where
        I: IntoIterator<Item = T>,
        T: Into<String>,
    {
        let symbols: Vec<String> = symbols.into_iter().map(Into::into).collect();
        for (i, s) in symbols.iter().enumerate() {
            if symbols[..i].contains(s) {
                return Err(WordError::DuplicateSymbol(s.clone()));
            }
        }
        Ok(Arc::new(Self { symbols }))
    }

    /// `a, b, c, …` (then `v26, v27, …`).
    pub fn standard(size: usize) -> Arc<Self> {
        let symbols = (0..size)
            .map(|i| {
                if i < 26 {
                    char::from(b'a' + i as u8).to_string()
                } else {
                    alloc::format!("v{i}")
                }
            })
            .collect();
        Arc::new(Self { symbols })
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn index_of(&self, symbol: &str) -> Option<usize> {
        self.symbols.iter().position(|s| s == symbol)
    }

    pub fn symbol(&self, index: usize) -> &str {
        &self.symbols[index]
    }

    pub fn symbols(&self) -> &[String] {
        &self.symbols
    }
}

/// An element of the free involutive monoid: a list of signed symbols.
///
/// The list is the normal form; there are no relations to quotient by.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SignedWord {
    alphabet: Arc<Alphabet>,
    letters: Vec<(Sign, usize)>,
}

impl SignedWord {
    /// The empty word.
    pub fn unit(alphabet: &Arc<Alphabet>) -> Self {
        Self { alphabet: alphabet.clone(), letters: Vec::new() }
    }

    /// The insertion of generators, `η(v) = ⟨(+, v)⟩`.
    pub fn eta(alphabet: &Arc<Alphabet>, symbol: &str) -> Result<Self, WordError> {
        let idx = alphabet.index_of(symbol).ok_or_else(|| WordError::UnknownSymbol(symbol.into()))?;
        Ok(Self { alphabet: alphabet.clone(), letters: alloc::vec![(Sign::Plus, idx)] })
    }

    pub fn from_letters<'a, I>(alphabet: &Arc<Alphabet>, letters: I) -> Result<Self, WordError>
    where
        I: IntoIterator<Item = (Sign, &'a str)>,
    {
        let letters = letters
            .into_iter()
            .map(|(b, v)| {
                alphabet.index_of(v).map(|i| (b, i)).ok_or_else(|| WordError::UnknownSymbol(v.into()))
            })
            .collect::<Result<_, _>>()?;
        Ok(Self { alphabet: alphabet.clone(), letters })
    }

    pub(crate) fn from_indices(alphabet: &Arc<Alphabet>, letters: Vec<(Sign, usize)>) -> Self {
        Self { alphabet: alphabet.clone(), letters }
    }

    pub fn alphabet(&self) -> &Arc<Alphabet> {
        &self.alphabet
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Letters as `(sign, symbol)` pairs.
    pub fn letters(&self) -> impl Iterator<Item = (Sign, &str)> + '_ {
        self.letters.iter().map(|&(b, i)| (b, self.alphabet.symbol(i)))
    }

    pub(crate) fn raw_letters(&self) -> &[(Sign, usize)] {
        &self.letters
    }

    pub fn concat(&self, other: &SignedWord) -> Result<SignedWord, WordError> {
        if !Arc::ptr_eq(&self.alphabet, &other.alphabet) && self.alphabet != other.alphabet {
            return Err(WordError::AlphabetMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&other.letters);
        Ok(Self { alphabet: self.alphabet.clone(), letters })
    }

    pub fn involve(&self, mode: Mode) -> SignedWord {
        let flipped = self.letters.iter().map(|&(b, v)| (b.negate(), v));
        let letters = match mode {
            Mode::NonReversing => flipped.collect(),
            Mode::Reversing => flipped.rev().collect(),
        };
        Self { alphabet: self.alphabet.clone(), letters }
    }

    /// The unique extension of `f` to a homomorphism of involutive monoids,
    /// `⟨(b₁,v₁),…,(bₙ,vₙ)⟩ ↦ f(v₁)^{b₁} · … · f(vₙ)^{bₙ}`, folded left to right.
    pub fn extend<M, F>(&self, f: F, target: &M, mode: Mode) -> Result<M::Elem, WordError>
    where
        M: InvolutiveMonoid,
        F: Fn(&str) -> Option<M::Elem>,
    {
        if !target.supports(mode) {
            return Err(WordError::ModeMismatch(mode));
        }
        let mut acc = target.unit();
        for &(b, v) in &self.letters {
            let symbol = self.alphabet.symbol(v);
            let x = f(symbol).ok_or_else(|| WordError::MissingValue(symbol.into()))?;
            let factor = match b {
                Sign::Plus => x,
                Sign::Minus => target.involve(&x),
            };
            acc = target.mul(&acc, &factor);
        }
        Ok(acc)
    }

    /// JSON-style pair list, `[["+","a"],["-","b"]]`.
    pub fn to_pairs(&self) -> Vec<(&'static str, String)> {
        self.letters().map(|(b, v)| (b.as_str(), v.into())).collect()
    }
}

/// `1` for the unit, otherwise `a * ~b * …`.
impl fmt::Display for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return f.write_str("1");
        }
        for (k, (b, v)) in self.letters().enumerate() {
            if k > 0 {
                f.write_str(" * ")?;
            }
            if b == Sign::Minus {
                f.write_str("~")?;
            }
            f.write_str(v)?;
        }
        Ok(())
    }
}

impl fmt::Debug for SignedWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "⟨{self}⟩")
    }
}

/// All words of length at most `max_len` over `alphabet`, shortest first.
pub fn all_words(alphabet: &Arc<Alphabet>, max_len: usize) -> Vec<SignedWord> {
    let mut out = alloc::vec![SignedWord::unit(alphabet)];
    let mut frontier = out.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for b in [Sign::Plus, Sign::Minus] {
                for v in 0..alphabet.len() {
                    let mut letters = w.letters.clone();
                    letters.push((b, v));
                    next.push(SignedWord::from_indices(alphabet, letters));
                }
            }
        }
        out.extend(next.iter().cloned());
        frontier = next;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn ab() -> Arc<Alphabet> {
        Alphabet::standard(2)
    }

    #[test]
    fn unit_laws() {
        let a = ab();
        let w = SignedWord::from_letters(&a, [(Sign::Plus, "a"), (Sign::Minus, "b")]).unwrap();
        let u = SignedWord::unit(&a);
        assert_eq!(u.to_string(), "1");
        assert_eq!(u.concat(&w).unwrap(), w);
        assert_eq!(w.concat(&u).unwrap(), w);
        assert_eq!(u.involve(Mode::Reversing), u);
        assert_eq!(u.involve(Mode::NonReversing), u);
    }

    #[test]
    fn concat_appends() {
        let a = ab();
        let x = SignedWord::from_letters(&a, [(Sign::Plus, "a")]).unwrap();
        let y = SignedWord::from_letters(&a, [(Sign::Minus, "b")]).unwrap();
        let xy = x.concat(&y).unwrap();
        assert_eq!(xy.to_pairs(), vec![("+", "a".into()), ("-", "b".into())]);
    }

    #[test]
    fn involution_formulas() {
        let a = ab();
        let w = SignedWord::from_letters(&a, [(Sign::Plus, "a"), (Sign::Minus, "b")]).unwrap();
        let rev = SignedWord::from_letters(&a, [(Sign::Plus, "b"), (Sign::Minus, "a")]).unwrap();
        let nonrev = SignedWord::from_letters(&a, [(Sign::Minus, "a"), (Sign::Plus, "b")]).unwrap();
        assert_eq!(w.involve(Mode::Reversing), rev);
        assert_eq!(w.involve(Mode::NonReversing), nonrev);
        assert_eq!(w.involve(Mode::Reversing).involve(Mode::Reversing), w);
        assert_eq!(w.involve(Mode::NonReversing).involve(Mode::NonReversing), w);
    }

    #[test]
    fn eta_inserts_positive_letter() {
        let a = ab();
        let ea = SignedWord::eta(&a, "a").unwrap();
        assert_eq!(ea.to_string(), "a");
        assert_eq!(ea.involve(Mode::NonReversing).to_string(), "~a");
        let eb = SignedWord::eta(&a, "b").unwrap();
        assert_eq!(ea.concat(&eb).unwrap().to_string(), "a * b");
        assert_eq!(SignedWord::eta(&a, "z"), Err(WordError::UnknownSymbol("z".into())));
    }

    #[test]
    fn alphabet_mismatch() {
        let x = SignedWord::eta(&Alphabet::standard(2), "a").unwrap();
        let y = SignedWord::eta(&Alphabet::new(["a", "c"]).unwrap(), "a").unwrap();
        assert_eq!(x.concat(&y), Err(WordError::AlphabetMismatch));
        let same = SignedWord::eta(&Alphabet::standard(2), "b").unwrap();
        assert!(x.concat(&same).is_ok());
    }

    #[test]
    fn extend_into_integers() {
        let a = ab();
        let w = SignedWord::from_letters(&a, [(Sign::Plus, "a"), (Sign::Minus, "b")]).unwrap();
        let f = |v: &str| match v {
            "a" => Some(num_bigint::BigInt::from(2)),
            "b" => Some(num_bigint::BigInt::from(5)),
            _ => None,
        };
        assert_eq!(w.extend(f, &IntAdd, Mode::Reversing).unwrap(), (-3).into());
        assert_eq!(SignedWord::unit(&a).extend(f, &IntAdd, Mode::Reversing).unwrap(), 0.into());
        let ea = SignedWord::eta(&a, "a").unwrap();
        assert_eq!(ea.extend(f, &IntAdd, Mode::NonReversing).unwrap(), 2.into());
    }

    #[test]
    fn extend_requires_supported_mode() {
        let a = ab();
        let w = SignedWord::eta(&a, "a").unwrap();
        let s3 = TableMonoid::s3_group();
        let r = w.extend(|_| Some(1usize), &s3, Mode::NonReversing);
        assert_eq!(r, Err(WordError::ModeMismatch(Mode::NonReversing)));
        let missing = w.extend(|_| None, &s3, Mode::Reversing);
        assert_eq!(missing, Err(WordError::MissingValue("a".into())));
    }

    #[test]
    fn word_count() {
        // Σ_{n≤3} 4ⁿ
        assert_eq!(all_words(&ab(), 3).len(), 1 + 4 + 16 + 64);
    }
}
