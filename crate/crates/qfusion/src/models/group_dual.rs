//! Duals of discrete groups: every irreducible is one-dimensional, indexed
//! by a group element, and the fusion rule is the group law.
//!
//! Two presentations are supported: finite groups by multiplication table,
//! and finitely generated abelian groups ℤ^r × (torsion) with at least one
//! free factor. Infinite non-abelian groups are not supported.

use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::{FusionError, Result};
use crate::finite_group::FiniteGroup;
use crate::label::{Label, Payload};
use crate::model::{check_tag, FusionModel};
use crate::sum::FormalSum;

/// ℤ^rank × ℤ/m_1 × … × ℤ/m_s with rank ≥ 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianSpec {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

impl AbelianSpec {
    pub fn name(&self) -> String {
        let mut parts: Vec<String> = if self.rank == 1 {
            vec!["Z".to_string()]
        } else {
            vec![format!("Z^{}", self.rank)]
        };
        parts.extend(self.torsion.iter().map(|m| format!("Z{m}")));
        parts.join("x")
    }

    fn components(&self) -> usize {
        self.rank + self.torsion.len()
    }

    fn normalize(&self, v: &mut [i64]) {
        for (i, &m) in self.torsion.iter().enumerate() {
            let idx = self.rank + i;
            v[idx] = v[idx].rem_euclid(m as i64);
        }
    }
}

#[derive(Clone, Debug)]
enum Presentation {
    Finite(FiniteGroup),
    Abelian(AbelianSpec),
}

/// The compact quantum group dual to a discrete group.
#[derive(Clone, Debug)]
pub struct GroupDualModel {
    presentation: Presentation,
    tag: Arc<str>,
}

impl GroupDualModel {
    pub fn finite(group: FiniteGroup) -> GroupDualModel {
        let tag = format!("group_dual:{}", group.name).into();
        GroupDualModel {
            presentation: Presentation::Finite(group),
            tag,
        }
    }

    pub fn abelian(spec: AbelianSpec) -> Result<GroupDualModel> {
        if spec.rank == 0 {
            return Err(FusionError::InvalidModel(
                "abelian group dual requires rank >= 1; use a finite table otherwise".into(),
            ));
        }
        if spec.torsion.iter().any(|&m| m < 2) {
            return Err(FusionError::InvalidModel(
                "torsion moduli must be >= 2".into(),
            ));
        }
        let tag = format!("group_dual:{}", spec.name()).into();
        Ok(GroupDualModel {
            presentation: Presentation::Abelian(spec),
            tag,
        })
    }

    /// The dual of ℤ (circle-group dual; irreducibles indexed by integers).
    pub fn integers() -> GroupDualModel {
        GroupDualModel::abelian(AbelianSpec {
            rank: 1,
            torsion: Vec::new(),
        })
        .unwrap()
    }

    pub fn group(&self) -> Option<&FiniteGroup> {
        match &self.presentation {
            Presentation::Finite(g) => Some(g),
            Presentation::Abelian(_) => None,
        }
    }

    pub fn abelian_spec(&self) -> Option<&AbelianSpec> {
        match &self.presentation {
            Presentation::Abelian(s) => Some(s),
            Presentation::Finite(_) => None,
        }
    }

    pub fn element_label(&self, i: usize) -> Result<Label> {
        match &self.presentation {
            Presentation::Finite(g) if i < g.order() => {
                Ok(Label::new(self.tag.clone(), Payload::Elem(i)))
            }
            Presentation::Finite(g) => Err(FusionError::InvalidLabel {
                label: format!("g{i}"),
                model: self.tag.to_string(),
                reason: format!("index out of range for group of order {}", g.order()),
            }),
            Presentation::Abelian(_) => Err(FusionError::InvalidLabel {
                label: format!("g{i}"),
                model: self.tag.to_string(),
                reason: "abelian dual labels are integer vectors".into(),
            }),
        }
    }

    pub fn vector_label(&self, v: Vec<i64>) -> Result<Label> {
        match &self.presentation {
            Presentation::Abelian(spec) if v.len() == spec.components() => {
                let mut v = v;
                spec.normalize(&mut v);
                Ok(Label::new(self.tag.clone(), Payload::Vector(v)))
            }
            Presentation::Abelian(spec) => Err(FusionError::InvalidLabel {
                label: format!("{v:?}"),
                model: self.tag.to_string(),
                reason: format!("expected {} components", spec.components()),
            }),
            Presentation::Finite(_) => Err(FusionError::InvalidLabel {
                label: format!("{v:?}"),
                model: self.tag.to_string(),
                reason: "finite group dual labels are element indices".into(),
            }),
        }
    }

    fn validate(&self, x: &Label) -> Result<()> {
        check_tag(self, x)?;
        let bad = |reason: String| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: self.tag.to_string(),
            reason,
        };
        match (&self.presentation, x.payload()) {
            (Presentation::Finite(g), Payload::Elem(i)) => {
                if *i < g.order() {
                    Ok(())
                } else {
                    Err(bad(format!("index >= order {}", g.order())))
                }
            }
            (Presentation::Abelian(spec), Payload::Vector(v)) => {
                if v.len() != spec.components() {
                    return Err(bad(format!("expected {} components", spec.components())));
                }
                for (i, &m) in spec.torsion.iter().enumerate() {
                    let c = v[spec.rank + i];
                    if c < 0 || c >= m as i64 {
                        return Err(bad(format!("torsion component {c} not in [0, {m})")));
                    }
                }
                Ok(())
            }
            _ => Err(bad("payload kind does not match presentation".into())),
        }
    }
}

impl FusionModel for GroupDualModel {
    fn tag(&self) -> &Arc<str> {
        &self.tag
    }

    fn unit(&self) -> Label {
        match &self.presentation {
            Presentation::Finite(_) => Label::new(self.tag.clone(), Payload::Elem(0)),
            Presentation::Abelian(spec) => {
                Label::new(self.tag.clone(), Payload::Vector(vec![0; spec.components()]))
            }
        }
    }

    fn dual(&self, x: &Label) -> Result<Label> {
        self.validate(x)?;
        match (&self.presentation, x.payload()) {
            (Presentation::Finite(g), Payload::Elem(i)) => {
                Ok(Label::new(self.tag.clone(), Payload::Elem(g.inv(*i))))
            }
            (Presentation::Abelian(spec), Payload::Vector(v)) => {
                let mut neg: Vec<i64> = v.iter().map(|c| -c).collect();
                spec.normalize(&mut neg);
                Ok(Label::new(self.tag.clone(), Payload::Vector(neg)))
            }
            _ => unreachable!("validated above"),
        }
    }

    fn dim(&self, x: &Label) -> Result<BigUint> {
        self.validate(x)?;
        Ok(BigUint::one())
    }

    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum> {
        self.validate(x)?;
        self.validate(y)?;
        let product = match (&self.presentation, x.payload(), y.payload()) {
            (Presentation::Finite(g), Payload::Elem(i), Payload::Elem(j)) => {
                Label::new(self.tag.clone(), Payload::Elem(g.mul(*i, *j)))
            }
            (Presentation::Abelian(spec), Payload::Vector(v), Payload::Vector(w)) => {
                let mut sum: Vec<i64> = v.iter().zip(w).map(|(a, b)| a + b).collect();
                spec.normalize(&mut sum);
                Label::new(self.tag.clone(), Payload::Vector(sum))
            }
            _ => unreachable!("validated above"),
        };
        Ok(FormalSum::singleton(product))
    }

    fn enumerate(&self, depth: u32) -> Vec<Label> {
        match &self.presentation {
            Presentation::Finite(g) => (0..g.order())
                .map(|i| Label::new(self.tag.clone(), Payload::Elem(i)))
                .collect(),
            Presentation::Abelian(spec) => {
                let d = depth as i64;
                let mut vectors: Vec<Vec<i64>> = vec![Vec::new()];
                for comp in 0..spec.components() {
                    let range: Vec<i64> = if comp < spec.rank {
                        (-d..=d).collect()
                    } else {
                        (0..spec.torsion[comp - spec.rank] as i64).collect()
                    };
                    vectors = vectors
                        .into_iter()
                        .flat_map(|v| {
                            range.iter().map(move |&c| {
                                let mut v2 = v.clone();
                                v2.push(c);
                                v2
                            })
                        })
                        .collect();
                }
                let mut labels: Vec<Label> = vectors
                    .into_iter()
                    .map(|v| Label::new(self.tag.clone(), Payload::Vector(v)))
                    .collect();
                labels.sort();
                labels
            }
        }
    }

    fn parse_label(&self, text: &str) -> Result<Label> {
        let err = |reason: &str| FusionError::ParseLabel {
            text: text.to_string(),
            model: self.tag.to_string(),
            reason: reason.into(),
        };
        match &self.presentation {
            Presentation::Finite(_) => {
                let i = text
                    .strip_prefix('g')
                    .and_then(|s| s.parse::<usize>().ok())
                    .ok_or_else(|| err("expected `gI` with I a table index"))?;
                self.element_label(i)
            }
            Presentation::Abelian(spec) => {
                let inner = text
                    .strip_prefix('[')
                    .and_then(|s| s.strip_suffix(']'))
                    .unwrap_or(text);
                let comps: std::result::Result<Vec<i64>, _> =
                    inner.split(',').map(|s| s.trim().parse::<i64>()).collect();
                let comps = comps.map_err(|_| err("expected comma-separated integers"))?;
                if comps.len() != spec.components() {
                    return Err(err(&format!("expected {} components", spec.components())));
                }
                self.vector_label(comps)
            }
        }
    }

    fn format_label(&self, x: &Label) -> Result<String> {
        self.validate(x)?;
        match x.payload() {
            Payload::Elem(i) => Ok(format!("g{i}")),
            Payload::Vector(v) if v.len() == 1 => Ok(format!("{}", v[0])),
            Payload::Vector(v) => Ok(format!(
                "[{}]",
                v.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(",")
            )),
            _ => unreachable!("validated above"),
        }
    }

    fn label_count(&self) -> Option<usize> {
        match &self.presentation {
            Presentation::Finite(g) => Some(g.order()),
            Presentation::Abelian(_) => None,
        }
    }

    fn check(&self, x: &Label) -> Result<()> {
        self.validate(x)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::finite_group::{cyclic, symmetric_3};
    use crate::model::{closure, verify_model, Budget};

    #[test]
    fn z6_dual_axioms() {
        let m = GroupDualModel::finite(cyclic(6));
        assert!(verify_model(&m, 6).unwrap().is_empty());
        assert_eq!(m.label_count(), Some(6));
    }

    #[test]
    fn s3_dual_axioms() {
        let m = GroupDualModel::finite(symmetric_3());
        assert!(verify_model(&m, 6).unwrap().is_empty());
    }

    #[test]
    fn integer_dual_axioms_on_window() {
        let m = GroupDualModel::integers();
        assert!(verify_model(&m, 3).unwrap().is_empty());
    }

    #[test]
    fn tensor_is_the_group_law() {
        let m = GroupDualModel::finite(cyclic(6));
        let g2 = m.element_label(2).unwrap();
        let g5 = m.element_label(5).unwrap();
        let t = m.tensor(&g2, &g5).unwrap();
        assert_eq!(t, FormalSum::singleton(m.element_label(1).unwrap()));
    }

    #[test]
    fn closure_of_a_generator_is_the_generated_subgroup() {
        let m = GroupDualModel::finite(cyclic(6));
        let res = closure(&m, &[m.element_label(2).unwrap()], Budget::default()).unwrap();
        assert!(res.saturated);
        let got: Vec<usize> = res.labels.iter().map(|l| l.as_elem().unwrap()).collect();
        assert_eq!(got, vec![0, 2, 4]);

        let res = closure(&m, &[m.element_label(1).unwrap()], Budget::default()).unwrap();
        assert!(res.saturated);
        assert_eq!(res.len(), 6);
    }

    #[test]
    fn integer_dual_closure_grows_without_saturating() {
        let m = GroupDualModel::integers();
        let one = m.vector_label(vec![1]).unwrap();
        let res = closure(&m, &[one], Budget { max_labels: 64, max_steps: 8 }).unwrap();
        assert!(!res.saturated);
        assert!(res.len() > 8);
    }

    #[test]
    fn torsion_components_normalize() {
        let m = GroupDualModel::abelian(AbelianSpec {
            rank: 1,
            torsion: vec![3],
        })
        .unwrap();
        let l = m.vector_label(vec![2, 5]).unwrap();
        assert_eq!(l.as_vector().unwrap(), &[2, 2]);
        let d = m.dual(&l).unwrap();
        assert_eq!(d.as_vector().unwrap(), &[-2, 1]);
    }

    #[test]
    fn mixed_model_labels_are_rejected() {
        let z6 = GroupDualModel::finite(cyclic(6));
        let z4 = GroupDualModel::finite(cyclic(4));
        let foreign = z4.element_label(1).unwrap();
        assert!(z6.tensor(&z6.unit(), &foreign).is_err());
    }
}
