//! Alphabets, words, complementarity relations and double strands.
//!
//! A [`ComplementarityRelation`] is an arbitrary set of ordered pairs over an
//! [`Alphabet`]. It may be non-injective (one upper symbol with several lower
//! complements) and partial (a symbol with no complement at all), so there is
//! no "complement of" function, only [`ComplementarityRelation::complements_of`]
//! returning a set.

use std::collections::BTreeSet;
use std::fmt;
use std::ops::Deref;

use crate::error::ModelError;

/// One letter of a finite alphabet.
///
/// Symbols are single characters. `-`, `#` and whitespace are reserved by the
/// text formats and rejected.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Symbol(char);

impl Symbol {
    pub fn new(c: char) -> Result<Self, ModelError> {
        if c == '-' || c == '#' || c.is_whitespace() || c.is_control() {
            return Err(ModelError::ReservedSymbol(c));
        }
        Ok(Symbol(c))
    }

    pub fn as_char(self) -> char {
        self.0
    }
}

impl fmt::Display for Symbol {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// A finite word. The empty word λ is `Word::empty()`.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Word(Vec<Symbol>);

impl Word {
    pub fn empty() -> Self {
        Word(Vec::new())
    }

    /// Parses a word character by character. The empty string is λ.
    pub fn parse(text: &str) -> Result<Self, ModelError> {
        text.chars().map(Symbol::new).collect::<Result<Vec<_>, _>>().map(Word)
    }

    /// `symbol^count`.
    pub fn repeat(symbol: Symbol, count: usize) -> Self {
        Word(vec![symbol; count])
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.0
    }

    pub fn push(&mut self, symbol: Symbol) {
        self.0.push(symbol);
    }

    pub fn into_symbols(self) -> Vec<Symbol> {
        self.0
    }
}

impl Deref for Word {
    type Target = [Symbol];

    fn deref(&self) -> &[Symbol] {
        &self.0
    }
}

impl From<Vec<Symbol>> for Word {
    fn from(symbols: Vec<Symbol>) -> Self {
        Word(symbols)
    }
}

impl From<&[Symbol]> for Word {
    fn from(symbols: &[Symbol]) -> Self {
        Word(symbols.to_vec())
    }
}

impl FromIterator<Symbol> for Word {
    fn from_iter<I: IntoIterator<Item = Symbol>>(iter: I) -> Self {
        Word(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "λ");
        }
        for s in &self.0 {
            write!(f, "{}", s)?;
        }
        Ok(())
    }
}

/// True iff `v = u x` for some word `x`.
pub fn is_prefix(u: &[Symbol], v: &[Symbol]) -> bool {
    v.starts_with(u)
}

/// True iff one of the words is a prefix of the other.
pub fn prefix_comparable(u: &[Symbol], v: &[Symbol]) -> bool {
    is_prefix(u, v) || is_prefix(v, u)
}

/// An ordered, duplicate-free set of symbols.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<Symbol>,
}

impl Alphabet {
    pub fn new<I: IntoIterator<Item = Symbol>>(symbols: I) -> Result<Self, ModelError> {
        let mut out: Vec<Symbol> = Vec::new();
        for s in symbols {
            if out.contains(&s) {
                return Err(ModelError::DuplicateSymbol(s));
            }
            out.push(s);
        }
        Ok(Alphabet { symbols: out })
    }

    /// Builds an alphabet from the characters of `letters`, e.g. `"abc"`.
    pub fn from_chars(letters: &str) -> Result<Self, ModelError> {
        Self::new(letters.chars().map(Symbol::new).collect::<Result<Vec<_>, _>>()?)
    }

    pub fn contains(&self, s: Symbol) -> bool {
        self.symbols.contains(&s)
    }

    pub fn index_of(&self, s: Symbol) -> Option<usize> {
        self.symbols.iter().position(|&x| x == s)
    }

    pub fn symbols(&self) -> &[Symbol] {
        &self.symbols
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    pub fn check_word(&self, w: &[Symbol]) -> Result<(), ModelError> {
        match w.iter().find(|s| !self.contains(**s)) {
            Some(&s) => Err(ModelError::UnknownSymbol(s)),
            None => Ok(()),
        }
    }
}

/// The relation ρ ⊆ V × V between upper and lower strand symbols.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ComplementarityRelation {
    pairs: Vec<(Symbol, Symbol)>,
}

impl ComplementarityRelation {
    /// Duplicate pairs are collapsed; declaration order is kept.
    pub fn new<I: IntoIterator<Item = (Symbol, Symbol)>>(pairs: I) -> Self {
        let mut out: Vec<(Symbol, Symbol)> = Vec::new();
        for p in pairs {
            if !out.contains(&p) {
                out.push(p);
            }
        }
        ComplementarityRelation { pairs: out }
    }

    /// Convenience constructor from `(upper, lower)` character pairs.
    pub fn from_chars(pairs: &[(char, char)]) -> Result<Self, ModelError> {
        let pairs = pairs
            .iter()
            .map(|&(a, b)| Ok((Symbol::new(a)?, Symbol::new(b)?)))
            .collect::<Result<Vec<_>, ModelError>>()?;
        Ok(Self::new(pairs))
    }

    pub fn pairs(&self) -> &[(Symbol, Symbol)] {
        &self.pairs
    }

    pub fn contains(&self, upper: Symbol, lower: Symbol) -> bool {
        self.pairs.contains(&(upper, lower))
    }

    pub fn complements_of(&self, upper: Symbol) -> BTreeSet<Symbol> {
        self.pairs.iter().filter(|p| p.0 == upper).map(|p| p.1).collect()
    }

    /// True when no upper symbol has two distinct complements.
    pub fn is_injective(&self) -> bool {
        self.pairs.iter().all(|&(a, _)| self.pairs.iter().filter(|p| p.0 == a).count() == 1)
    }

    /// Checks `ρ ⊆ V × V`.
    pub fn check_against(&self, alphabet: &Alphabet) -> Result<(), ModelError> {
        for &(a, b) in &self.pairs {
            for s in [a, b] {
                if !alphabet.contains(s) {
                    return Err(ModelError::UnknownSymbol(s));
                }
            }
        }
        Ok(())
    }
}

/// A pair of equal-length words, complementary at every position.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleStrand {
    upper: Word,
    lower: Word,
}

impl DoubleStrand {
    pub fn new(rel: &ComplementarityRelation, upper: Word, lower: Word) -> Result<Self, ModelError> {
        if !is_valid_double_strand(rel, &upper, &lower) {
            return Err(ModelError::NotComplementary { upper, lower });
        }
        Ok(DoubleStrand { upper, lower })
    }

    pub fn upper(&self) -> &Word {
        &self.upper
    }

    pub fn lower(&self) -> &Word {
        &self.lower
    }
}

pub fn is_valid_double_strand(rel: &ComplementarityRelation, upper: &[Symbol], lower: &[Symbol]) -> bool {
    upper.len() == lower.len() && upper.iter().zip(lower).all(|(&a, &b)| rel.contains(a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn w(s: &str) -> Word {
        Word::parse(s).unwrap()
    }

    fn sym(c: char) -> Symbol {
        Symbol::new(c).unwrap()
    }

    fn squares_rel() -> ComplementarityRelation {
        ComplementarityRelation::from_chars(&[('a', 'b'), ('a', 'c')]).unwrap()
    }

    #[test]
    fn complements_examples() {
        let rho = squares_rel();
        assert_eq!(rho.complements_of(sym('a')), [sym('b'), sym('c')].into_iter().collect());
        assert!(rho.complements_of(sym('b')).is_empty());
        let id = ComplementarityRelation::from_chars(&[('a', 'a')]).unwrap();
        assert_eq!(id.complements_of(sym('a')), [sym('a')].into_iter().collect());
        assert!(!rho.is_injective());
        assert!(id.is_injective());
    }

    #[test]
    fn double_strand_examples() {
        let rho = squares_rel();
        assert!(is_valid_double_strand(&rho, &w("aaaa"), &w("bbcc")));
        assert!(is_valid_double_strand(&rho, &w(""), &w("")));
        assert!(!is_valid_double_strand(&rho, &w("aa"), &w("b")));
        assert!(!is_valid_double_strand(&rho, &w("a"), &w("a")));
        assert!(DoubleStrand::new(&rho, w("ab"), w("bb")).is_err());
    }

    #[test]
    fn prefix_examples() {
        assert!(is_prefix(&w("ab"), &w("abc")));
        assert!(is_prefix(&w(""), &w("xyz")));
        assert!(!is_prefix(&w("abc"), &w("ab")));
        assert!(prefix_comparable(&w("ab"), &w("abc")));
        assert!(!prefix_comparable(&w("ab"), &w("ac")));
        assert!(prefix_comparable(&w("abc"), &w("abc")));
    }

    #[test]
    fn reserved_and_duplicate_symbols() {
        assert_eq!(Symbol::new('-'), Err(ModelError::ReservedSymbol('-')));
        assert!(Symbol::new(' ').is_err());
        assert!(Alphabet::from_chars("aba").is_err());
        let v = Alphabet::from_chars("ab").unwrap();
        assert_eq!(v.check_word(&w("abz")), Err(ModelError::UnknownSymbol(sym('z'))));
        assert!(squares_rel().check_against(&v).is_err());
    }

    fn small_word(max: usize) -> impl Strategy<Value = Word> {
        proptest::collection::vec(prop_oneof![Just('a'), Just('b'), Just('c')], 0..max)
            .prop_map(|cs| cs.into_iter().map(sym).collect())
    }

    fn small_rel() -> impl Strategy<Value = ComplementarityRelation> {
        let all: Vec<(char, char)> = "abc".chars().flat_map(|a| "abc".chars().map(move |b| (a, b))).collect();
        proptest::sample::subsequence(all, 0..=9).prop_map(|ps| ComplementarityRelation::from_chars(&ps).unwrap())
    }

    proptest! {
        #[test]
        fn complements_match_enumeration(rel in small_rel()) {
            for a in "abc".chars().map(sym) {
                let expected: BTreeSet<Symbol> = "abc"
                    .chars()
                    .map(sym)
                    .filter(|&x| rel.pairs().contains(&(a, x)))
                    .collect();
                prop_assert_eq!(rel.complements_of(a), expected);
            }
        }

        #[test]
        fn strand_check_agrees_with_complements(rel in small_rel(), u in small_word(5), l in small_word(5)) {
            let via_sets = u.len() == l.len()
                && u.iter().zip(l.iter()).all(|(&a, b)| rel.complements_of(a).contains(b));
            prop_assert_eq!(is_valid_double_strand(&rel, &u, &l), via_sets);
        }

        #[test]
        fn prefix_order_laws(u in small_word(4), v in small_word(4), x in small_word(4)) {
            prop_assert!(is_prefix(&u, &u));
            prop_assert_eq!(prefix_comparable(&u, &v), prefix_comparable(&v, &u));
            if is_prefix(&u, &v) && is_prefix(&v, &u) {
                prop_assert_eq!(&u, &v);
            }
            let ux: Word = u.iter().chain(x.iter()).copied().collect();
            prop_assert!(is_prefix(&u, &ux));
            if is_prefix(&u, &v) && is_prefix(&v, &x) {
                prop_assert!(is_prefix(&u, &x));
            }
        }
    }
}
