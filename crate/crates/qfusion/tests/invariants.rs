//! Structural invariants that should hold for every model: closures are
//! monotone and idempotent, subring lattices and normality verdicts are
//! stable under deeper enumeration windows, and tensor decompositions
//! respect dimension counting.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::Zero;
use proptest::prelude::*;
use qfusion::io::ModelSpec;
use qfusion::model::{closure, Budget, FusionModel};
use qfusion::simplicity::enumerate_subrings;
use qfusion::subgroup::{au_central_torus, bu_nonnormal_subgroup, bu_sign_subgroup, is_normal, NormalityVerdict};
use qfusion::Label;

fn model(tag: &str) -> Arc<dyn FusionModel> {
    ModelSpec::parse(tag).unwrap().build().unwrap()
}

fn seed_sets(m: &dyn FusionModel, depth: u32) -> Vec<Vec<Label>> {
    let window = m.enumerate(depth);
    let mut out: Vec<Vec<Label>> = window.iter().map(|l| vec![l.clone()]).collect();
    // A few two-element seeds as well.
    for pair in window.windows(2) {
        out.push(pair.to_vec());
    }
    out
}

#[test]
fn closure_contains_unit_seeds_and_duals() {
    for tag in ["su2type:3", "so3type:5", "free_unitary:2", "group_dual:S3"] {
        let m = model(tag);
        for seeds in seed_sets(m.as_ref(), 4) {
            let res = closure(m.as_ref(), &seeds, Budget::default()).unwrap();
            assert!(res.labels.contains(&m.unit()), "{tag}: unit missing");
            for s in &seeds {
                assert!(res.labels.contains(s), "{tag}: seed missing");
                assert!(
                    res.labels.contains(&m.dual(s).unwrap()),
                    "{tag}: dual of seed missing"
                );
            }
        }
    }
}

#[test]
fn closure_is_idempotent_when_saturated() {
    // A small budget keeps the infinite families cheap; unsaturated
    // closures are skipped either way.
    let budget = Budget {
        max_labels: 64,
        max_steps: 8,
    };
    for tag in ["su2type:4", "so3type:4", "group_dual:S4", "group_dual:Z12"] {
        let m = model(tag);
        for seeds in seed_sets(m.as_ref(), 4) {
            let first = closure(m.as_ref(), &seeds, budget).unwrap();
            if !first.saturated {
                continue;
            }
            let reseeded: Vec<Label> = first.labels.iter().cloned().collect();
            let second = closure(m.as_ref(), &reseeded, budget).unwrap();
            assert_eq!(first.labels, second.labels, "{tag}: closure not idempotent");
        }
    }
}

#[test]
fn closure_is_monotone_in_seeds() {
    let budget = Budget {
        max_labels: 64,
        max_steps: 8,
    };
    for tag in ["su2type:3", "so3type:5", "group_dual:S3", "free_unitary:2"] {
        let m = model(tag);
        let window = m.enumerate(4);
        for a in &window {
            for b in &window {
                let small = closure(m.as_ref(), &[a.clone()], budget).unwrap();
                let big = closure(m.as_ref(), &[a.clone(), b.clone()], budget).unwrap();
                if small.saturated && big.saturated {
                    assert!(
                        small.labels.is_subset(&big.labels),
                        "{tag}: closure not monotone"
                    );
                }
            }
        }
    }
}

#[test]
fn subring_lattice_stable_under_deeper_window() {
    // The closed sets found at depth 6 should reappear, restricted to the
    // depth-6 window, when the lattice is recomputed at depth 8.
    for tag in ["su2type:2", "su2type:3", "so3type:4", "so3type:5"] {
        let m = model(tag);
        let shallow = enumerate_subrings(m.as_ref(), 6, Budget::default()).unwrap();
        let deep = enumerate_subrings(m.as_ref(), 8, Budget::default()).unwrap();
        let window: BTreeSet<Label> = m.enumerate(6).into_iter().collect();
        let deep_restricted: BTreeSet<BTreeSet<Label>> = deep
            .closed_sets
            .iter()
            .map(|c| c.window_labels.intersection(&window).cloned().collect())
            .collect();
        for c in &shallow.closed_sets {
            assert!(
                deep_restricted.contains(&c.window_labels),
                "{tag}: depth-6 closed set lost at depth 8: {:?}",
                c.window_labels
            );
        }
    }
}

#[test]
fn normality_verdict_stable_in_depth() {
    for n in 2..=4 {
        let sign = bu_sign_subgroup(n).unwrap();
        let h = bu_nonnormal_subgroup(n).unwrap();
        let v6 = is_normal(&sign, 6).unwrap().verdict;
        let v8 = is_normal(&sign, 8).unwrap().verdict;
        assert_eq!(v6, v8, "bu-sign:{n} verdict changed with depth");
        assert_eq!(v6, NormalityVerdict::Normal);
        let w6 = is_normal(&h, 6).unwrap().verdict;
        let w8 = is_normal(&h, 8).unwrap().verdict;
        assert_eq!(w6, w8, "bu-H:{n} verdict changed with depth");
        assert_eq!(w6, NormalityVerdict::NotNormal);
    }
    for n in 2..=3 {
        let torus = au_central_torus(n).unwrap();
        let v4 = is_normal(&torus, 4).unwrap().verdict;
        let v6 = is_normal(&torus, 6).unwrap().verdict;
        assert_eq!(v4, v6, "au-torus:{n} verdict changed with depth");
        assert_eq!(v4, NormalityVerdict::Normal);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    // dim(x) * dim(y) equals the multiplicity-weighted dimension sum of the
    // decomposition of x (x) y.
    #[test]
    fn tensor_preserves_dimension(n in 2u64..6, k in 0u64..12, l in 0u64..12) {
        let m = model(&format!("su2type:{n}"));
        let x = m.parse_label(&format!("r{k}")).unwrap();
        let y = m.parse_label(&format!("r{l}")).unwrap();
        let product = m.tensor(&x, &y).unwrap();
        let mut total = BigUint::zero();
        for (label, mult) in product.iter() {
            total += mult * m.dim(label).unwrap();
        }
        prop_assert_eq!(total, m.dim(&x).unwrap() * m.dim(&y).unwrap());
    }

    // The step-two decomposition range |k-l|, |k-l|+2, ..., k+l.
    #[test]
    fn su2_support_is_the_expected_ladder(n in 2u64..6, k in 0u64..12, l in 0u64..12) {
        let m = model(&format!("su2type:{n}"));
        let x = m.parse_label(&format!("r{k}")).unwrap();
        let y = m.parse_label(&format!("r{l}")).unwrap();
        let product = m.tensor(&x, &y).unwrap();
        let got: Vec<String> = product
            .iter()
            .map(|(label, _)| m.format_label(label).unwrap())
            .collect();
        let lo = k.abs_diff(l);
        let expected: Vec<String> = (lo..=k + l)
            .step_by(2)
            .map(|i| format!("r{i}"))
            .collect();
        prop_assert_eq!(got, expected);
    }

    // Tensor in the symmetric models is commutative on supports and dims.
    #[test]
    fn so3_tensor_is_commutative(n in 4u64..8, k in 0u64..10, l in 0u64..10) {
        let m = model(&format!("so3type:{n}"));
        let x = m.parse_label(&format!("r{k}")).unwrap();
        let y = m.parse_label(&format!("r{l}")).unwrap();
        prop_assert_eq!(m.tensor(&x, &y).unwrap(), m.tensor(&y, &x).unwrap());
    }
}
