//! Free-unitary fusion: irreducibles indexed by words over {a, b} with the
//! involution reversing the word and swapping letters, and
//! r_x ⊗ r_y = Σ over splittings x = c·g, bar(g)·d = y of r_{c·d}.
//!
//! The fusion statement is taken from the positive-parameter case; the model
//! is exposed for any n ≥ 2 and always uses these rules.
//!
//! Dimensions are forced by multiplicativity with d_a = d_b = n and follow
//! the right-extension recursion: extending x by a letter λ gives
//! d_{xλ} = n·d_x − d_{x'} when the last letter of x is bar(λ) (x' drops the
//! last letter), and n·d_x otherwise.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::label::{Label, Letter, Payload, Word};
use crate::model::{check_tag, FusionModel};
use crate::sum::FormalSum;

#[derive(Clone, Debug)]
pub struct FreeUnitaryModel {
    n: u64,
    tag: Arc<str>,
}

impl FreeUnitaryModel {
    pub fn new(n: u64) -> Result<FreeUnitaryModel> {
        if n < 2 {
            return Err(FusionError::InvalidModel(format!(
                "free_unitary requires n >= 2, got {n}"
            )));
        }
        Ok(FreeUnitaryModel {
            n,
            tag: format!("free_unitary:{n}").into(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn label(&self, w: Word) -> Label {
        Label::new(self.tag.clone(), Payload::Word(w))
    }

    fn word_of(&self, x: &Label) -> Result<Word> {
        check_tag(self, x)?;
        x.as_word().cloned().ok_or_else(|| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: self.tag.to_string(),
            reason: "expected a word over {a, b}".into(),
        })
    }
}

/// All splitting terms of the free fusion rule; multiplicities accumulate
/// over splittings even when distinct splittings yield the same word.
pub fn free_tensor_words(x: &Word, y: &Word) -> Vec<Word> {
    let mut out = Vec::new();
    for g_len in 0..=x.len().min(y.len()) {
        let (head, g) = x.split_suffix(g_len);
        if y.starts_with(&g.bar()) {
            out.push(head.concat(&y.slice_from(g_len)));
        }
    }
    out
}

/// Dimension of the irreducible indexed by `x`, by right extension.
pub fn free_dim(n: u64, x: &Word) -> Result<BigUint> {
    if n < 2 {
        return Err(FusionError::InvalidModel(format!(
            "free dimension recursion requires n >= 2, got {n}"
        )));
    }
    let mut prev = BigUint::one(); // word with the last letter dropped
    let mut cur = BigUint::one(); // current prefix
    let mut last: Option<Letter> = None;
    for &letter in x.letters() {
        let mut next = BigUint::from(n) * &cur;
        if last == Some(letter.bar()) {
            next -= &prev;
        }
        prev = cur;
        cur = next;
        last = Some(letter);
    }
    Ok(cur)
}

impl FusionModel for FreeUnitaryModel {
    fn tag(&self) -> &Arc<str> {
        &self.tag
    }

    fn unit(&self) -> Label {
        self.label(Word::empty())
    }

    fn dual(&self, x: &Label) -> Result<Label> {
        Ok(self.label(self.word_of(x)?.bar()))
    }

    fn dim(&self, x: &Label) -> Result<BigUint> {
        free_dim(self.n, &self.word_of(x)?)
    }

    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum> {
        let xw = self.word_of(x)?;
        let yw = self.word_of(y)?;
        Ok(free_tensor_words(&xw, &yw)
            .into_iter()
            .map(|w| (self.label(w), BigUint::one()))
            .collect())
    }

    fn tensor_support(&self, x: &Label, y: &Label) -> Result<Vec<Label>> {
        let xw = self.word_of(x)?;
        let yw = self.word_of(y)?;
        Ok(free_tensor_words(&xw, &yw)
            .into_iter()
            .map(|w| self.label(w))
            .collect())
    }

    /// Words of length at most `depth / 2`; see the trait documentation.
    fn enumerate(&self, depth: u32) -> Vec<Label> {
        Word::enumerate_up_to(depth as usize / 2)
            .into_iter()
            .map(|w| self.label(w))
            .collect()
    }

    fn parse_label(&self, text: &str) -> Result<Label> {
        let err = |reason: &str| FusionError::ParseLabel {
            text: text.to_string(),
            model: self.tag.to_string(),
            reason: reason.into(),
        };
        if text == "e" {
            return Ok(self.unit());
        }
        let mut letters = Vec::with_capacity(text.len());
        for ch in text.chars() {
            match ch {
                'a' => letters.push(Letter::Alpha),
                'b' => letters.push(Letter::Beta),
                _ => return Err(err("expected a word over `a`/`b`, or `e`")),
            }
        }
        if letters.is_empty() {
            return Err(err("empty text"));
        }
        Ok(self.label(Word::new(letters)))
    }

    fn format_label(&self, x: &Label) -> Result<String> {
        Ok(self.word_of(x)?.to_string())
    }

    fn check(&self, x: &Label) -> Result<()> {
        self.word_of(x).map(|_| ())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{trivial_multiplicity, verify_model};

    fn w(text: &str) -> Word {
        let letters = text
            .chars()
            .map(|c| if c == 'a' { Letter::Alpha } else { Letter::Beta })
            .collect();
        Word::new(letters)
    }

    #[test]
    fn alpha_times_beta_gives_ab_plus_unit() {
        let m = FreeUnitaryModel::new(2).unwrap();
        let t = m.tensor(&m.label(w("a")), &m.label(w("b"))).unwrap();
        assert_eq!(t.support_len(), 2);
        assert!(t.contains(&m.unit()));
        assert!(t.contains(&m.label(w("ab"))));
    }

    #[test]
    fn alpha_squared_is_a_single_term() {
        let m = FreeUnitaryModel::new(2).unwrap();
        let t = m.tensor(&m.label(w("a")), &m.label(w("a"))).unwrap();
        assert_eq!(t.support_len(), 1);
        assert!(t.contains(&m.label(w("aa"))));
    }

    #[test]
    fn unit_acts_trivially() {
        let m = FreeUnitaryModel::new(3).unwrap();
        let y = m.label(w("bab"));
        assert_eq!(
            m.tensor(&m.unit(), &y).unwrap(),
            FormalSum::singleton(y.clone())
        );
    }

    #[test]
    fn trivial_multiplicity_examples() {
        let m = FreeUnitaryModel::new(2).unwrap();
        assert_eq!(
            trivial_multiplicity(&m, &m.label(w("a")), &m.label(w("b"))).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            trivial_multiplicity(&m, &m.label(w("a")), &m.label(w("a"))).unwrap(),
            BigUint::from(0u32)
        );
    }

    #[test]
    fn dims_match_spec_values() {
        assert_eq!(free_dim(2, &Word::empty()).unwrap(), BigUint::one());
        assert_eq!(free_dim(2, &w("ab")).unwrap(), BigUint::from(3u32));
        assert_eq!(free_dim(3, &w("aa")).unwrap(), BigUint::from(9u32));
        assert_eq!(free_dim(3, &w("ab")).unwrap(), BigUint::from(8u32));
        assert_eq!(free_dim(3, &w("aba")).unwrap(), BigUint::from(21u32));
    }

    #[test]
    fn degree_is_additive_on_tensor_terms() {
        for x in Word::enumerate_up_to(4) {
            for y in Word::enumerate_up_to(4) {
                for t in free_tensor_words(&x, &y) {
                    assert_eq!(t.degree(), x.degree() + y.degree());
                }
            }
        }
    }

    #[test]
    fn model_axioms_hold_for_words_up_to_length_3() {
        for n in [2, 3] {
            let m = FreeUnitaryModel::new(n).unwrap();
            assert!(verify_model(&m, 6).unwrap().is_empty());
        }
    }
}
