//! The abstract fusion-model interface and the closure engine.
//!
//! A fusion model presents a based ring by its unit label, dual involution,
//! dimension function and pairwise tensor-decomposition rule. Infinite rings
//! are represented lazily: a model never materializes its full label set,
//! only answers queries, and every global analysis carries an explicit
//! budget.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{FusionError, Result};
use crate::label::Label;
use crate::sum::FormalSum;

/// A based ring with non-negative integer structure constants.
pub trait FusionModel: Send + Sync {
    /// Stable identifier of this model instance (e.g. `su2type:3`).
    fn tag(&self) -> &Arc<str>;

    /// The trivial representation.
    fn unit(&self) -> Label;

    /// The conjugate representation.
    fn dual(&self, x: &Label) -> Result<Label>;

    /// Dimension of the irreducible indexed by `x`; always positive.
    fn dim(&self, x: &Label) -> Result<BigUint>;

    /// Decomposition of the tensor product of two irreducibles.
    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum>;

    /// Support of the tensor product, without multiplicities. Closure-style
    /// analyses only need the label set; models whose rule yields the
    /// support directly should override this to skip building the sum.
    fn tensor_support(&self, x: &Label, y: &Label) -> Result<Vec<Label>> {
        Ok(self.tensor(x, y)?.labels().cloned().collect())
    }

    /// Finite ordered window of labels used by depth-bounded analyses.
    ///
    /// For natural-indexed models this is `r_0 .. r_depth`; the free-unitary
    /// model maps depth `d` to words of length at most `d / 2` (a word of
    /// length `m` first appears in the `m`-fold tensor power of the
    /// fundamental, which natural-indexed models reach at index `m`, so the
    /// halved window keeps pair products inside comparable work).
    fn enumerate(&self, depth: u32) -> Vec<Label>;

    /// Parse the textual form of a label.
    fn parse_label(&self, text: &str) -> Result<Label>;

    /// Canonical textual form of a label.
    fn format_label(&self, x: &Label) -> Result<String>;

    /// Total number of labels, when the model is finite.
    fn label_count(&self) -> Option<usize> {
        None
    }

    /// Checks that `x` belongs to this model and indexes a real irreducible.
    fn check(&self, x: &Label) -> Result<()>;
}

pub(crate) fn check_tag(model: &dyn FusionModel, x: &Label) -> Result<()> {
    if x.model_tag() == model.tag().as_ref() {
        Ok(())
    } else {
        Err(FusionError::ModelMismatch {
            label: format!("{:?}", x.payload()),
            label_model: x.model_tag().to_string(),
            expected_model: model.tag().to_string(),
        })
    }
}

/// Bilinear extension of the basis product to formal sums.
pub fn tensor_sum(model: &dyn FusionModel, a: &FormalSum, b: &FormalSum) -> Result<FormalSum> {
    let mut out = FormalSum::new();
    for (x, mx) in a.iter() {
        for (y, my) in b.iter() {
            let prod = model.tensor(x, y)?;
            out.add(&prod.scaled(&(mx * my)));
        }
    }
    Ok(out)
}

/// Coefficient of the unit in `tensor(x, y)`; equals 1 iff `y = dual(x)`.
pub fn trivial_multiplicity(model: &dyn FusionModel, x: &Label, y: &Label) -> Result<BigUint> {
    let t = model.tensor(x, y)?;
    Ok(t.multiplicity(&model.unit()))
}

/// Total dimension of a formal sum.
pub fn dim_of_sum(model: &dyn FusionModel, a: &FormalSum) -> Result<BigUint> {
    let mut total = BigUint::zero();
    for (x, m) in a.iter() {
        total += model.dim(x)? * m;
    }
    Ok(total)
}

/// Budget for saturation-style computations on possibly infinite models.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budget {
    pub max_labels: usize,
    pub max_steps: u32,
}

impl Default for Budget {
    fn default() -> Budget {
        Budget {
            max_labels: 256,
            max_steps: 16,
        }
    }
}

/// Result of saturating a seed set under duals and tensor terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosureResult {
    pub labels: BTreeSet<Label>,
    /// True when the last expansion step produced no new labels.
    pub saturated: bool,
    pub steps_used: u32,
    pub budget: Budget,
}

impl ClosureResult {
    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }
}

/// Least dual-closed, unit-containing set of labels closed under taking
/// terms of pairwise tensor products, computed by saturation.
///
/// Stops when saturated or when the budget is exhausted; exhaustion is not an
/// error, the result simply reports `saturated = false`. When saturated the
/// result is independent of expansion order.
pub fn closure(model: &dyn FusionModel, seeds: &[Label], budget: Budget) -> Result<ClosureResult> {
    let mut labels: BTreeSet<Label> = BTreeSet::new();
    labels.insert(model.unit());
    for s in seeds {
        model.check(s)?;
        labels.insert(s.clone());
        labels.insert(model.dual(s)?);
    }

    let mut frontier: Vec<Label> = labels.iter().cloned().collect();
    let mut steps_used = 0;
    let mut saturated = false;

    while steps_used < budget.max_steps {
        if labels.len() > budget.max_labels {
            break;
        }
        steps_used += 1;
        let mut fresh: BTreeSet<Label> = BTreeSet::new();
        let known: Vec<Label> = labels.iter().cloned().collect();
        // Far past the budget the result is reported unsaturated regardless,
        // so stop expanding early; the slack factor of two lets steps near
        // the budget still complete, keeping small-label traces intact.
        'expand: for x in &known {
            for y in &frontier {
                for prod in [model.tensor_support(x, y)?, model.tensor_support(y, x)?] {
                    for w in prod {
                        if !labels.contains(&w) && !fresh.contains(&w) {
                            fresh.insert(model.dual(&w)?);
                            fresh.insert(w);
                        }
                    }
                }
                if labels.len() + fresh.len() > 2 * budget.max_labels {
                    break 'expand;
                }
            }
        }
        fresh.retain(|w| !labels.contains(w));
        if fresh.is_empty() {
            saturated = true;
            break;
        }
        labels.extend(fresh.iter().cloned());
        frontier = fresh.into_iter().collect();
        if labels.len() > budget.max_labels {
            break;
        }
    }

    Ok(ClosureResult {
        labels,
        saturated,
        steps_used,
        budget,
    })
}

/// Verifies the fusion-model axioms on all labels of the depth window.
///
/// Returns the list of violations (empty means all axioms hold): duality is
/// an involution, unit laws, dual pairing producing the unit exactly once,
/// dimension multiplicativity, and associativity of the extended product.
pub fn verify_model(model: &dyn FusionModel, depth: u32) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let window = model.enumerate(depth);
    let unit = model.unit();

    if model.dim(&unit)? != BigUint::one() {
        violations.push("dim(unit) != 1".to_string());
    }

    for x in &window {
        let dx = model.dual(x)?;
        if model.dual(&dx)? != *x {
            violations.push(format!(
                "dual(dual({})) != {0}",
                model.format_label(x)?
            ));
        }
        if model.dim(&dx)? != model.dim(x)? {
            violations.push(format!("dim(dual({})) != dim", model.format_label(x)?));
        }
        let left = model.tensor(&unit, x)?;
        let right = model.tensor(x, &unit)?;
        if left != FormalSum::singleton(x.clone()) || right != left {
            violations.push(format!("unit law fails at {}", model.format_label(x)?));
        }
    }

    for x in &window {
        for y in &window {
            let t = model.tensor(x, y)?;
            let triv = t.multiplicity(&unit);
            let expect = if *y == model.dual(x)? {
                BigUint::one()
            } else {
                BigUint::zero()
            };
            if triv != expect {
                violations.push(format!(
                    "unit coefficient of {} (x) {} is {}, expected {}",
                    model.format_label(x)?,
                    model.format_label(y)?,
                    triv,
                    expect
                ));
            }
            if dim_of_sum(model, &t)? != model.dim(x)? * model.dim(y)? {
                violations.push(format!(
                    "dimension multiplicativity fails at ({}, {})",
                    model.format_label(x)?,
                    model.format_label(y)?
                ));
            }
        }
    }

    for x in &window {
        for y in &window {
            let xy = model.tensor(x, y)?;
            for z in &window {
                let yz = model.tensor(y, z)?;
                let left = tensor_sum(model, &xy, &FormalSum::singleton(z.clone()))?;
                let right = tensor_sum(model, &FormalSum::singleton(x.clone()), &yz)?;
                if left != right {
                    violations.push(format!(
                        "associativity fails at ({}, {}, {})",
                        model.format_label(x)?,
                        model.format_label(y)?,
                        model.format_label(z)?
                    ));
                }
            }
        }
    }

    Ok(violations)
}

/// Checks the duality symmetry c_{xy}^w = c_{y̅x̅}^{w̅} over the depth window.
pub fn verify_duality_symmetry(model: &dyn FusionModel, depth: u32) -> Result<Vec<String>> {
    let mut violations = Vec::new();
    let window = model.enumerate(depth);
    for x in &window {
        for y in &window {
            let t = model.tensor(x, y)?;
            let tbar = model.tensor(&model.dual(y)?, &model.dual(x)?)?;
            for (w, c) in t.iter() {
                if tbar.multiplicity(&model.dual(w)?) != *c {
                    violations.push(format!(
                        "duality symmetry fails at ({}, {}) term {}",
                        model.format_label(x)?,
                        model.format_label(y)?,
                        model.format_label(w)?
                    ));
                }
            }
            if t.support_len() != tbar.support_len() {
                violations.push(format!(
                    "duality symmetry support mismatch at ({}, {})",
                    model.format_label(x)?,
                    model.format_label(y)?
                ));
            }
        }
    }
    Ok(violations)
}
