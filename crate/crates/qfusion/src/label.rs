//! Labels of irreducible representations and free-monoid words.
//!
//! A [`Label`] identifies one irreducible representation inside one concrete
//! model. Labels carry the tag of their owning model so that mixing labels of
//! different models is caught at run time rather than producing garbage.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

/// A letter of the free monoid on two generators, with the involution
/// swapping the two.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    /// The class of the fundamental representation (written `a`).
    Alpha,
    /// The class of its conjugate (written `b`).
    Beta,
}

impl Letter {
    pub fn bar(self) -> Letter {
        match self {
            Letter::Alpha => Letter::Beta,
            Letter::Beta => Letter::Alpha,
        }
    }

    pub fn as_char(self) -> char {
        match self {
            Letter::Alpha => 'a',
            Letter::Beta => 'b',
        }
    }
}

/// A word over the two-letter alphabet, ordered by length first and then
/// lexicographically with `a < b`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn empty() -> Word {
        Word(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Word {
        Word(letters)
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The involution: reverse the word and swap the letters.
    pub fn bar(&self) -> Word {
        Word(self.0.iter().rev().map(|l| l.bar()).collect())
    }

    /// Concatenation.
    pub fn concat(&self, other: &Word) -> Word {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Word(v)
    }

    /// Degree: number of `a`s minus number of `b`s. Additive on concatenation.
    pub fn degree(&self) -> i64 {
        self.0
            .iter()
            .map(|l| match l {
                Letter::Alpha => 1i64,
                Letter::Beta => -1i64,
            })
            .sum()
    }

    /// Splits into (prefix, suffix) at every position, suffix length `k`.
    pub fn split_suffix(&self, k: usize) -> (Word, Word) {
        let cut = self.0.len() - k;
        (Word(self.0[..cut].to_vec()), Word(self.0[cut..].to_vec()))
    }

    pub fn starts_with(&self, prefix: &Word) -> bool {
        self.0.len() >= prefix.0.len() && self.0[..prefix.0.len()] == prefix.0[..]
    }

    pub fn slice_from(&self, from: usize) -> Word {
        Word(self.0[from..].to_vec())
    }

    /// All words of length at most `max_len`, in canonical order.
    pub fn enumerate_up_to(max_len: usize) -> Vec<Word> {
        let mut out = vec![Word::empty()];
        let mut layer = vec![Word::empty()];
        for _ in 0..max_len {
            let mut next = Vec::with_capacity(layer.len() * 2);
            for w in &layer {
                for l in [Letter::Alpha, Letter::Beta] {
                    let mut v = w.0.clone();
                    v.push(l);
                    next.push(Word(v));
                }
            }
            out.extend(next.iter().cloned());
            layer = next;
        }
        out
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Word) -> Ordering {
        self.0
            .len()
            .cmp(&other.0.len())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Word) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            write!(f, "e")
        } else {
            for l in &self.0 {
                write!(f, "{}", l.as_char())?;
            }
            Ok(())
        }
    }
}

/// Model-specific index of an irreducible representation.
///
/// The variants cover the bundled model families: natural-number indices
/// (SU(2)- and SO(3)-type), free-monoid words (free unitary), element or row
/// indices (finite group duals, character tables), and integer vectors
/// (finitely generated abelian group duals).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Payload {
    Nat(u64),
    Word(Word),
    Elem(usize),
    Vector(Vec<i64>),
}

/// An irreducible-representation label, tagged with its owning model.
///
/// Labels of different models never compare equal; the ordering is total and
/// canonical within a model (naturals by value, words by length then
/// lexicographically, elements by table order, vectors lexicographically).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Label {
    model: Arc<str>,
    payload: Payload,
}

impl Label {
    pub fn new(model: Arc<str>, payload: Payload) -> Label {
        Label { model, payload }
    }

    pub fn model_tag(&self) -> &str {
        &self.model
    }

    pub fn payload(&self) -> &Payload {
        &self.payload
    }

    pub fn as_nat(&self) -> Option<u64> {
        match &self.payload {
            Payload::Nat(k) => Some(*k),
            _ => None,
        }
    }

    pub fn as_word(&self) -> Option<&Word> {
        match &self.payload {
            Payload::Word(w) => Some(w),
            _ => None,
        }
    }

    pub fn as_elem(&self) -> Option<usize> {
        match &self.payload {
            Payload::Elem(i) => Some(*i),
            _ => None,
        }
    }

    pub fn as_vector(&self) -> Option<&[i64]> {
        match &self.payload {
            Payload::Vector(v) => Some(v),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn bar_is_an_involution() {
        for w in Word::enumerate_up_to(4) {
            assert_eq!(w.bar().bar(), w);
        }
        assert_eq!(Word::empty().bar(), Word::empty());
    }

    #[test]
    fn bar_swaps_and_reverses() {
        let w = Word::new(vec![Letter::Alpha, Letter::Alpha, Letter::Beta]);
        assert_eq!(
            w.bar(),
            Word::new(vec![Letter::Alpha, Letter::Beta, Letter::Beta])
        );
    }

    #[test]
    fn word_order_is_length_then_lex() {
        let words = Word::enumerate_up_to(3);
        let mut sorted = words.clone();
        sorted.sort();
        assert_eq!(words, sorted);
        // "b" < "aa": shorter words come first
        let b = Word::new(vec![Letter::Beta]);
        let aa = Word::new(vec![Letter::Alpha, Letter::Alpha]);
        assert!(b < aa);
    }

    #[test]
    fn degree_is_additive() {
        for x in Word::enumerate_up_to(3) {
            for y in Word::enumerate_up_to(3) {
                assert_eq!(x.concat(&y).degree(), x.degree() + y.degree());
            }
        }
    }

    #[test]
    fn labels_of_distinct_models_never_equal() {
        let a = Label::new("m1".into(), Payload::Nat(0));
        let b = Label::new("m2".into(), Payload::Nat(0));
        assert_ne!(a, b);
    }
}
