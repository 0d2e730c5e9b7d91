//! SU(2)-type fusion: irreducibles r_0, r_1, r_2, … with
//! r_k ⊗ r_l = r_|k−l| ⊕ r_|k−l|+2 ⊕ … ⊕ r_k+l, all self-conjugate.
//!
//! Dimensions are the unique positive solution forced by dimension
//! multiplicativity over this rule with d_1 = n: the recursion
//! d_{k+1} = n·d_k − d_{k−1}, d_0 = 1.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::label::{Label, Payload};
use crate::model::{check_tag, FusionModel};
use crate::sum::FormalSum;

#[derive(Clone, Debug)]
pub struct Su2TypeModel {
    n: u64,
    tag: Arc<str>,
}

impl Su2TypeModel {
    pub fn new(n: u64) -> Result<Su2TypeModel> {
        if n < 2 {
            return Err(FusionError::InvalidModel(format!(
                "su2type requires n >= 2, got {n}"
            )));
        }
        Ok(Su2TypeModel {
            n,
            tag: format!("su2type:{n}").into(),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn label(&self, k: u64) -> Label {
        Label::new(self.tag.clone(), Payload::Nat(k))
    }

    fn nat_of(&self, x: &Label) -> Result<u64> {
        check_tag(self, x)?;
        x.as_nat().ok_or_else(|| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: self.tag.to_string(),
            reason: "expected a natural-number index".into(),
        })
    }
}

/// d_k for the recursion d_{k+1} = n·d_k − d_{k−1}, d_0 = 1, d_1 = n.
pub fn su2_dim(n: u64, k: u64) -> Result<BigUint> {
    if n < 2 {
        return Err(FusionError::InvalidModel(format!(
            "su2 dimension recursion requires n >= 2, got {n}"
        )));
    }
    let mut prev = BigUint::one();
    let mut cur = BigUint::from(n);
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k {
        let next = BigUint::from(n) * &cur - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

/// The SU(2)-type rule itself, as plain natural indices.
pub fn su2_tensor_indices(k: u64, l: u64) -> Vec<u64> {
    let lo = k.abs_diff(l);
    let hi = k + l;
    (lo..=hi).step_by(2).collect()
}

impl FusionModel for Su2TypeModel {
    fn tag(&self) -> &Arc<str> {
        &self.tag
    }

    fn unit(&self) -> Label {
        self.label(0)
    }

    fn dual(&self, x: &Label) -> Result<Label> {
        self.nat_of(x)?;
        Ok(x.clone())
    }

    fn dim(&self, x: &Label) -> Result<BigUint> {
        su2_dim(self.n, self.nat_of(x)?)
    }

    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum> {
        let k = self.nat_of(x)?;
        let l = self.nat_of(y)?;
        Ok(su2_tensor_indices(k, l)
            .into_iter()
            .map(|m| (self.label(m), BigUint::one()))
            .collect())
    }

    fn tensor_support(&self, x: &Label, y: &Label) -> Result<Vec<Label>> {
        let k = self.nat_of(x)?;
        let l = self.nat_of(y)?;
        Ok(su2_tensor_indices(k, l)
            .into_iter()
            .map(|m| self.label(m))
            .collect())
    }

    fn enumerate(&self, depth: u32) -> Vec<Label> {
        (0..=depth as u64).map(|k| self.label(k)).collect()
    }

    fn parse_label(&self, text: &str) -> Result<Label> {
        parse_r_label(text, &self.tag).map(|k| self.label(k))
    }

    fn format_label(&self, x: &Label) -> Result<String> {
        Ok(format!("r{}", self.nat_of(x)?))
    }

    fn check(&self, x: &Label) -> Result<()> {
        self.nat_of(x).map(|_| ())
    }
}

pub(crate) fn parse_r_label(text: &str, tag: &Arc<str>) -> Result<u64> {
    text.strip_prefix('r')
        .and_then(|s| s.parse::<u64>().ok())
        .ok_or_else(|| FusionError::ParseLabel {
            text: text.to_string(),
            model: tag.to_string(),
            reason: "expected `rK` with K a natural number".into(),
        })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::{trivial_multiplicity, verify_model};

    #[test]
    fn rejects_small_n() {
        assert!(Su2TypeModel::new(1).is_err());
        assert!(su2_dim(1, 3).is_err());
    }

    #[test]
    fn fundamental_square_splits_as_r0_plus_r2() {
        let m = Su2TypeModel::new(2).unwrap();
        let t = m.tensor(&m.label(1), &m.label(1)).unwrap();
        assert_eq!(t.support_len(), 2);
        assert_eq!(t.multiplicity(&m.label(0)), BigUint::one());
        assert_eq!(t.multiplicity(&m.label(2)), BigUint::one());
    }

    #[test]
    fn rule_instance_2_3() {
        let m = Su2TypeModel::new(3).unwrap();
        let t = m.tensor(&m.label(2), &m.label(3)).unwrap();
        let terms: Vec<u64> = t.labels().map(|l| l.as_nat().unwrap()).collect();
        assert_eq!(terms, vec![1, 3, 5]);
    }

    #[test]
    fn dims_for_n2_are_classical() {
        for k in 0..=10u64 {
            assert_eq!(su2_dim(2, k).unwrap(), BigUint::from(k + 1));
        }
    }

    #[test]
    fn dims_for_n3() {
        let got: Vec<BigUint> = (0..5).map(|k| su2_dim(3, k).unwrap()).collect();
        let want: Vec<BigUint> = [1u32, 3, 8, 21, 55].map(BigUint::from).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn trivial_multiplicity_pairs_with_dual_only() {
        let m = Su2TypeModel::new(4).unwrap();
        assert_eq!(
            trivial_multiplicity(&m, &m.label(1), &m.label(1)).unwrap(),
            BigUint::one()
        );
        assert_eq!(
            trivial_multiplicity(&m, &m.label(3), &m.label(0)).unwrap(),
            BigUint::from(0u32)
        );
    }

    #[test]
    fn model_axioms_hold_to_depth_6() {
        for n in 2..=5 {
            let m = Su2TypeModel::new(n).unwrap();
            assert!(verify_model(&m, 6).unwrap().is_empty());
        }
    }
}
