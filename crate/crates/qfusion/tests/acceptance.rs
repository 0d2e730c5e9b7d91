//! End-to-end acceptance checks. Each test prints a single pass/fail line for
//! its criterion; `cargo test --test acceptance -- --nocapture` shows them all.

use std::collections::BTreeSet;
use std::sync::Arc;
use std::time::Instant;

use num_bigint::BigUint;

use qfusion::corpus;
use qfusion::label::Word;
use qfusion::model::{verify_duality_symmetry, verify_model, Budget, FusionModel};
use qfusion::models::{free_dim, free_tensor_words, su2_dim, FreeUnitaryModel, So3TypeModel, Su2TypeModel};
use qfusion::qnum::q_int;
use qfusion::simplicity::{enumerate_subrings, is_connected, one_dim_labels, simplicity_report, Connectedness, SimplicityVerdict};
use qfusion::subgroup::{au_central_torus, bu_nonnormal_subgroup, bu_sign_subgroup, is_central, is_normal, quotient, verify_restriction, NormalityVerdict};
use qfusion::Label;

fn criterion(num: u32, name: &str, f: impl FnOnce() -> Result<(), String>) {
    match f() {
        Ok(()) => println!("criterion {num} ({name}): pass"),
        Err(e) => {
            println!("criterion {num} ({name}): FAIL - {e}");
            panic!("criterion {num} failed: {e}");
        }
    }
}

fn all_models_depth6() -> Vec<Arc<dyn FusionModel>> {
    let mut out: Vec<Arc<dyn FusionModel>> = Vec::new();
    for n in 2..=5 {
        out.push(Arc::new(Su2TypeModel::new(n).unwrap()));
    }
    for n in 4..=6 {
        out.push(Arc::new(So3TypeModel::new(n).unwrap()));
    }
    for n in 2..=3 {
        out.push(Arc::new(FreeUnitaryModel::new(n).unwrap()));
    }
    out
}

#[test]
fn criterion_1_fusion_law_suites() {
    criterion(1, "fusion-law suites", || {
        let start = Instant::now();
        for model in all_models_depth6() {
            let violations = verify_model(model.as_ref(), 6).map_err(|e| e.to_string())?;
            if !violations.is_empty() {
                return Err(format!("{}: {}", model.tag(), violations.join("; ")));
            }
            let violations =
                verify_duality_symmetry(model.as_ref(), 6).map_err(|e| e.to_string())?;
            if !violations.is_empty() {
                return Err(format!("{}: {}", model.tag(), violations.join("; ")));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 10.0 {
            return Err(format!("took {elapsed:?}, budget is 10 s"));
        }
        Ok(())
    });
}

fn label_set(model: &dyn FusionModel, labels: &[&str]) -> BTreeSet<Label> {
    labels
        .iter()
        .map(|s| model.parse_label(s).unwrap())
        .collect()
}

#[test]
fn criterion_2_su2_type_structure() {
    criterion(2, "SU(2)-type structure", || {
        for n in 2..=5u64 {
            let model: Arc<dyn FusionModel> = Arc::new(Su2TypeModel::new(n).unwrap());
            let ctx = |what: &str| format!("n={n}: {what}");

            let lattice = enumerate_subrings(model.as_ref(), 8, Budget::default())
                .map_err(|e| e.to_string())?;
            let got: Vec<BTreeSet<Label>> = lattice
                .closed_sets
                .iter()
                .map(|s| s.window_labels.clone())
                .collect();
            let unit_only = label_set(model.as_ref(), &["r0"]);
            let evens = label_set(model.as_ref(), &["r0", "r2", "r4", "r6", "r8"]);
            let all = label_set(
                model.as_ref(),
                &["r0", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"],
            );
            if got != vec![unit_only, evens.clone(), all] {
                return Err(ctx(&format!("subring lattice is {got:?}")));
            }

            let sign = bu_sign_subgroup(n).map_err(|e| e.to_string())?;
            let report = is_normal(&sign, 8).map_err(|e| e.to_string())?;
            if report.verdict != NormalityVerdict::Normal || !report.proof_backed {
                return Err(ctx("sign subgroup not recognized as normal"));
            }
            if report.s_of_n.iter().cloned().collect::<BTreeSet<_>>() != evens {
                return Err(ctx("S(N) of the sign subgroup is not the even labels"));
            }
            if sign.target.label_count() != Some(2) {
                return Err(ctx("sign subgroup target does not have order 2"));
            }

            let h = bu_nonnormal_subgroup(n).map_err(|e| e.to_string())?;
            let report = is_normal(&h, 8).map_err(|e| e.to_string())?;
            if report.verdict != NormalityVerdict::NotNormal {
                return Err(ctx("two-element reflection subgroup reported normal"));
            }
            if report.witness != Some(model.parse_label("r1").unwrap()) {
                return Err(ctx("witness is not r1"));
            }
            if report.witness_multiplicity
                != Some((BigUint::from(n - 1), BigUint::from(n)))
            {
                return Err(ctx("witness multiplicity is not (n-1, n)"));
            }

            let conn = is_connected(model.as_ref(), 8, Budget::default())
                .map_err(|e| e.to_string())?;
            if conn.verdict != Connectedness::Connected {
                return Err(ctx("model not recognized as connected"));
            }
            if !one_dim_labels(model.as_ref(), 8).map_err(|e| e.to_string())?.is_empty() {
                return Err(ctx("unexpected one-dimensional labels"));
            }

            let restrictions = vec![
                bu_sign_subgroup(n).map_err(|e| e.to_string())?,
                bu_nonnormal_subgroup(n).map_err(|e| e.to_string())?,
            ];
            let report = simplicity_report(Arc::clone(&model), &restrictions, 8)
                .map_err(|e| e.to_string())?;
            if report.verdict != SimplicityVerdict::SimpleEvidence {
                return Err(ctx(&format!("verdict is {:?}", report.verdict)));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_3_so3_type_structure() {
    criterion(3, "SO(3)-type structure", || {
        for n in 4..=6u64 {
            let model: Arc<dyn FusionModel> = Arc::new(So3TypeModel::new(n).unwrap());
            let lattice = enumerate_subrings(model.as_ref(), 8, Budget::default())
                .map_err(|e| e.to_string())?;
            let got: Vec<BTreeSet<Label>> = lattice
                .closed_sets
                .iter()
                .map(|s| s.window_labels.clone())
                .collect();
            let unit_only = label_set(model.as_ref(), &["r0"]);
            let all = label_set(
                model.as_ref(),
                &["r0", "r1", "r2", "r3", "r4", "r5", "r6", "r7", "r8"],
            );
            if got != vec![unit_only, all] {
                return Err(format!("n={n}: subring lattice is {got:?}"));
            }
            let report = simplicity_report(Arc::clone(&model), &[], 8)
                .map_err(|e| e.to_string())?;
            if report.verdict != SimplicityVerdict::SimpleEvidence {
                return Err(format!("n={n}: verdict is {:?}", report.verdict));
            }
            if !report.notes.iter().any(|note| note.contains("absolutely-simple")) {
                return Err(format!("n={n}: no absolutely-simple annotation"));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_4_central_torus() {
    criterion(4, "central torus of the free-unitary model", || {
        for n in 2..=3u64 {
            let torus = au_central_torus(n).map_err(|e| e.to_string())?;
            let verification = verify_restriction(&torus, 6).map_err(|e| e.to_string())?;
            if !verification.ok() {
                return Err(format!("n={n}: {}", verification.violations.join("; ")));
            }
            let central = is_central(&torus, 6).map_err(|e| e.to_string())?;
            if !central.central {
                return Err(format!("n={n}: torus not recognized as central"));
            }
            let report = is_normal(&torus, 6).map_err(|e| e.to_string())?;
            if report.verdict != NormalityVerdict::Normal {
                return Err(format!("n={n}: torus not recognized as normal"));
            }

            let model: Arc<dyn FusionModel> = Arc::new(FreeUnitaryModel::new(n).unwrap());
            let restrictions = vec![au_central_torus(n).map_err(|e| e.to_string())?];
            let report = simplicity_report(model, &restrictions, 6)
                .map_err(|e| e.to_string())?;
            match &report.verdict {
                SimplicityVerdict::NotSimple(reason) if reason.contains("au-torus") => {}
                other => return Err(format!("n={n}: verdict is {other:?}")),
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_5_finite_group_oracle() {
    criterion(5, "finite-group oracle equivalence", || {
        let start = Instant::now();
        let cases = corpus::embedding_corpus().map_err(|e| e.to_string())?;
        if cases.len() < 20 {
            return Err(format!("only {} embeddings in the corpus", cases.len()));
        }
        let s4_cases = cases.iter().filter(|c| c.group_name == "S4").count();
        if s4_cases < 5 {
            return Err(format!("only {s4_cases} S4 embeddings"));
        }
        for case in &cases {
            let report = is_normal(&case.restriction, 6).map_err(|e| e.to_string())?;
            let quantum = report.verdict == NormalityVerdict::Normal;
            if quantum != case.classical_normal {
                return Err(format!(
                    "{}: quantum {:?} vs classical {}",
                    case.name, report.verdict, case.classical_normal
                ));
            }
        }
        let elapsed = start.elapsed();
        if elapsed.as_secs_f64() >= 5.0 {
            return Err(format!("took {elapsed:?}, budget is 5 s"));
        }
        Ok(())
    });
}

#[test]
fn criterion_6_surjection_kernels() {
    criterion(6, "group-dual surjections and kernels", || {
        let cases = corpus::finite_surjection_corpus().map_err(|e| e.to_string())?;
        if cases.len() != 10 {
            return Err(format!("{} finite surjections, expected 10", cases.len()));
        }
        for case in cases {
            if case.source_order > 24 {
                return Err(format!("{}: source order exceeds 24", case.name));
            }
            let report = is_normal(&case.restriction, 8).map_err(|e| e.to_string())?;
            if report.verdict != NormalityVerdict::Normal {
                return Err(format!("{} not recognized as normal", case.name));
            }
            let expected: BTreeSet<Label> = case
                .kernel
                .iter()
                .map(|&i| case.restriction.source.parse_label(&format!("g{i}")).unwrap())
                .collect();
            let kept: BTreeSet<Label> = report.s_of_n.iter().cloned().collect();
            if kept != expected {
                return Err(format!("{}: kept set differs from the kernel", case.name));
            }
            let name = case.name.clone();
            let source = Arc::clone(&case.restriction.source);
            let q = quotient(case.restriction, 8).map_err(|e| e.to_string())?;
            for x in source.enumerate(8) {
                let in_kernel = expected.contains(&x);
                if q.kept(&x).map_err(|e| e.to_string())? != in_kernel {
                    return Err(format!("{name}: quotient kept-set differs from the kernel"));
                }
            }
        }
        for r in corpus::integer_surjection_corpus().map_err(|e| e.to_string())? {
            let k: i64 = r.name.rsplit('_').next().unwrap().parse().unwrap();
            let report = is_normal(&r, 8).map_err(|e| e.to_string())?;
            if report.verdict != NormalityVerdict::Normal {
                return Err(format!("{} not recognized as normal", r.name));
            }
            let kept: BTreeSet<Label> = report.s_of_n.iter().cloned().collect();
            let expected: BTreeSet<Label> = (-8..=8i64)
                .filter(|v| v.rem_euclid(k) == 0)
                .map(|v| r.source.parse_label(&v.to_string()).unwrap())
                .collect();
            if kept != expected {
                return Err(format!("{}: kept set is not {k}Z within the window", r.name));
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_7_q_integer_cross_check() {
    criterion(7, "q-integer dimension cross-check", || {
        for n in 2..=6u64 {
            for k in 0..=20u64 {
                let exact: f64 = su2_dim(n, k)
                    .map_err(|e| e.to_string())?
                    .to_string()
                    .parse()
                    .unwrap();
                let approx = q_int(n, k + 1);
                let rel = (exact - approx).abs() / exact.max(1.0);
                if rel > 1e-9 {
                    return Err(format!(
                        "n={n}, k={k}: dim {exact} vs q-integer {approx} (rel {rel:e})"
                    ));
                }
            }
        }
        for n in 2..=3u64 {
            let words = Word::enumerate_up_to(3);
            for x in &words {
                for y in &words {
                    let lhs = free_dim(n, x).map_err(|e| e.to_string())?
                        * free_dim(n, y).map_err(|e| e.to_string())?;
                    let mut rhs = BigUint::default();
                    for w in free_tensor_words(x, y) {
                        rhs += free_dim(n, &w).map_err(|e| e.to_string())?;
                    }
                    if lhs != rhs {
                        return Err(format!("n={n}: dims not multiplicative at ({x}, {y})"));
                    }
                }
            }
        }
        Ok(())
    });
}

#[test]
fn criterion_8_degree_grading() {
    criterion(8, "degree grading of free fusion", || {
        let words = Word::enumerate_up_to(4);
        for x in &words {
            for y in &words {
                for w in free_tensor_words(x, y) {
                    if w.degree() != x.degree() + y.degree() {
                        return Err(format!(
                            "term {w} of ({x}, {y}) breaks the degree grading"
                        ));
                    }
                }
            }
        }
        Ok(())
    });
}
