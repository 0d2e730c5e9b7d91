//! SO(3)-type fusion: r_k ⊗ r_l = r_|k−l| ⊕ r_|k−l|+1 ⊕ … ⊕ r_k+l, all
//! self-conjugate. Parametrized by n = dim(B) with d_1 = n − 1; dimension
//! multiplicativity (d_1·d_k = d_{k−1} + d_k + d_{k+1}) forces the recursion
//! d_{k+1} = (n − 2)·d_k − d_{k−1}.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::label::{Label, Payload};
use crate::model::{check_tag, FusionModel};
use crate::sum::FormalSum;

use super::su2::parse_r_label;

#[derive(Clone, Debug)]
pub struct So3TypeModel {
    n: u64,
    tag: Arc<str>,
}

impl So3TypeModel {
    pub fn new(n: u64) -> Result<So3TypeModel> {
        if n < 4 {
            return Err(FusionError::InvalidModel(format!(
                "so3type requires n >= 4, got {n}"
            )));
        }
        Ok(So3TypeModel {
            n,
            tag: format!("so3type:{n}").into(),
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

/// d_k for d_0 = 1, d_1 = n − 1, d_{k+1} = (n − 2)·d_k − d_{k−1}.
pub fn so3_dim(n: u64, k: u64) -> Result<BigUint> {
    if n < 4 {
        return Err(FusionError::InvalidModel(format!(
            "so3 dimension recursion requires n >= 4, got {n}"
        )));
    }
    let mut prev = BigUint::one();
    let mut cur = BigUint::from(n - 1);
    if k == 0 {
        return Ok(prev);
    }
    for _ in 1..k {
        let next = BigUint::from(n - 2) * &cur - &prev;
        prev = cur;
        cur = next;
    }
    Ok(cur)
}

impl FusionModel for So3TypeModel {
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
        so3_dim(self.n, self.nat_of(x)?)
    }

    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum> {
        let k = self.nat_of(x)?;
        let l = self.nat_of(y)?;
        Ok((k.abs_diff(l)..=k + l)
            .map(|m| (self.label(m), BigUint::one()))
            .collect())
    }

    fn tensor_support(&self, x: &Label, y: &Label) -> Result<Vec<Label>> {
        let k = self.nat_of(x)?;
        let l = self.nat_of(y)?;
        Ok((k.abs_diff(l)..=k + l).map(|m| self.label(m)).collect())
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::verify_model;

    #[test]
    fn rejects_small_n() {
        assert!(So3TypeModel::new(3).is_err());
    }

    #[test]
    fn rule_instances() {
        let m = So3TypeModel::new(4).unwrap();
        let t = m.tensor(&m.label(1), &m.label(1)).unwrap();
        let terms: Vec<u64> = t.labels().map(|l| l.as_nat().unwrap()).collect();
        assert_eq!(terms, vec![0, 1, 2]);

        let t = m.tensor(&m.label(1), &m.label(2)).unwrap();
        let terms: Vec<u64> = t.labels().map(|l| l.as_nat().unwrap()).collect();
        assert_eq!(terms, vec![1, 2, 3]);
    }

    #[test]
    fn dims_for_n4_are_odd_numbers() {
        for k in 0..=20u64 {
            assert_eq!(so3_dim(4, k).unwrap(), BigUint::from(2 * k + 1));
        }
    }

    #[test]
    fn dims_for_n5() {
        let got: Vec<BigUint> = (0..5).map(|k| so3_dim(5, k).unwrap()).collect();
        let want: Vec<BigUint> = [1u32, 4, 11, 29, 76].map(BigUint::from).to_vec();
        assert_eq!(got, want);
    }

    #[test]
    fn model_axioms_hold_to_depth_6() {
        for n in 4..=6 {
            let m = So3TypeModel::new(n).unwrap();
            assert!(verify_model(&m, 6).unwrap().is_empty());
        }
    }
}
