//! Formal non-negative integer combinations of labels.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::label::Label;

/// A finite map label → multiplicity; the decomposition of a (virtual)
/// representation into irreducibles. All stored multiplicities are strictly
/// positive; absent labels have multiplicity zero.
#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct FormalSum {
    terms: BTreeMap<Label, BigUint>,
}

impl FormalSum {
    pub fn new() -> FormalSum {
        FormalSum::default()
    }

    pub fn singleton(label: Label) -> FormalSum {
        FormalSum::with_multiplicity(label, BigUint::from(1u32))
    }

    pub fn with_multiplicity(label: Label, mult: BigUint) -> FormalSum {
        let mut s = FormalSum::new();
        s.add_term(label, mult);
        s
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of distinct labels with nonzero multiplicity.
    pub fn support_len(&self) -> usize {
        self.terms.len()
    }

    pub fn multiplicity(&self, label: &Label) -> BigUint {
        self.terms.get(label).cloned().unwrap_or_else(BigUint::zero)
    }

    pub fn contains(&self, label: &Label) -> bool {
        self.terms.contains_key(label)
    }

    pub fn add_term(&mut self, label: Label, mult: BigUint) {
        if mult.is_zero() {
            return;
        }
        *self.terms.entry(label).or_insert_with(BigUint::zero) += mult;
    }

    pub fn add(&mut self, other: &FormalSum) {
        for (l, m) in &other.terms {
            self.add_term(l.clone(), m.clone());
        }
    }

    pub fn scaled(&self, factor: &BigUint) -> FormalSum {
        let mut out = FormalSum::new();
        if factor.is_zero() {
            return out;
        }
        for (l, m) in &self.terms {
            out.add_term(l.clone(), m * factor);
        }
        out
    }

    /// Term-wise subtraction; `None` if any multiplicity would go negative.
    pub fn checked_sub(&self, other: &FormalSum) -> Option<FormalSum> {
        let mut out = self.clone();
        for (l, m) in &other.terms {
            let cur = out.terms.get(l)?.clone();
            if cur < *m {
                return None;
            }
            let rest = cur - m;
            if rest.is_zero() {
                out.terms.remove(l);
            } else {
                out.terms.insert(l.clone(), rest);
            }
        }
        Some(out)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Label, &BigUint)> {
        self.terms.iter()
    }

    pub fn labels(&self) -> impl Iterator<Item = &Label> {
        self.terms.keys()
    }
}

impl FromIterator<(Label, BigUint)> for FormalSum {
    fn from_iter<I: IntoIterator<Item = (Label, BigUint)>>(iter: I) -> FormalSum {
        let mut s = FormalSum::new();
        for (l, m) in iter {
            s.add_term(l, m);
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::label::Payload;

    fn lbl(k: u64) -> Label {
        Label::new("t".into(), Payload::Nat(k))
    }

    #[test]
    fn zero_multiplicities_are_not_stored() {
        let mut s = FormalSum::new();
        s.add_term(lbl(1), BigUint::zero());
        assert!(s.is_empty());
        s.add_term(lbl(1), BigUint::from(2u32));
        assert_eq!(s.support_len(), 1);
        assert_eq!(s.multiplicity(&lbl(1)), BigUint::from(2u32));
        assert_eq!(s.multiplicity(&lbl(2)), BigUint::zero());
    }

    #[test]
    fn addition_is_commutative_with_identity() {
        let mut a = FormalSum::singleton(lbl(1));
        a.add_term(lbl(2), BigUint::from(3u32));
        let b = FormalSum::singleton(lbl(2));

        let mut ab = a.clone();
        ab.add(&b);
        let mut ba = b.clone();
        ba.add(&a);
        assert_eq!(ab, ba);

        let mut with_zero = a.clone();
        with_zero.add(&FormalSum::new());
        assert_eq!(with_zero, a);
    }

    #[test]
    fn checked_sub_detects_negative() {
        let mut a = FormalSum::singleton(lbl(1));
        a.add_term(lbl(1), BigUint::from(1u32));
        let b = FormalSum::singleton(lbl(1));
        let d = a.checked_sub(&b).unwrap();
        assert_eq!(d.multiplicity(&lbl(1)), BigUint::from(1u32));
        assert!(d.checked_sub(&a).is_none());
        assert!(FormalSum::new().checked_sub(&b).is_none());
    }
}
