//! Bundled test corpus: subgroup embeddings of small finite groups for
//! cross-checking the representation-theoretic normality test against the
//! classical conjugation test, and a family of quotient surjections of group
//! duals with known kernels.

use std::sync::Arc;

use crate::error::Result;
use crate::finite_group::{builtin_group, character_table, cyclic, FiniteGroup};
use crate::io::{CharTableJson, EmbeddingJson};
use crate::models::{CharTableModel, GroupDualModel};
use crate::subgroup::{chartable_restriction, group_dual_subgroup, DualSurjection, RestrictionData};

/// Groups whose full subgroup lattices form the embedding corpus.
pub fn oracle_group_names() -> Vec<&'static str> {
    vec!["S3", "D4", "Q8", "A4", "S4"]
}

/// One embedded subgroup: the data needed to run both the classical
/// conjugation test and the character-restriction test.
pub struct EmbeddingCase {
    pub name: String,
    pub group_name: String,
    /// Element indices of the subgroup inside the big group.
    pub elements: Vec<usize>,
    pub subgroup_table: CharTableJson,
    pub embedding: EmbeddingJson,
    pub restriction: RestrictionData,
    /// Verdict of the brute-force conjugation test.
    pub classical_normal: bool,
}

fn build_case(
    group: &FiniteGroup,
    big: &Arc<CharTableModel>,
    elements: &[usize],
    name: &str,
) -> Result<EmbeddingCase> {
    let (h, elems) = group.subgroup_as_group(name, elements)?;
    let raw = character_table(&h)?;
    let small = Arc::new(CharTableModel::from_raw(&raw)?);
    let g_classes = group.conjugacy_classes();
    let class_map: Vec<usize> = h
        .conjugacy_classes()
        .iter()
        .map(|c| {
            let rep = elems[c[0]];
            g_classes
                .iter()
                .position(|gc| gc.contains(&rep))
                .expect("subgroup element lies in some class")
        })
        .collect();
    let embedding = EmbeddingJson {
        subgroup: name.to_string(),
        group: group.name.clone(),
        class_map: class_map.clone(),
        subgroup_class_sizes: small.class_sizes().to_vec(),
    };
    let group_name = group.name.clone();
    let restriction = chartable_restriction(name, Arc::clone(big), Arc::clone(&small), &class_map)?;
    Ok(EmbeddingCase {
        name: name.to_string(),
        group_name,
        elements: elems,
        subgroup_table: CharTableJson::from_model(&small),
        embedding,
        restriction,
        classical_normal: group.is_normal_subgroup(elements),
    })
}

/// Every subgroup of every oracle group, as an embedding case.
pub fn embedding_corpus() -> Result<Vec<EmbeddingCase>> {
    let mut cases = Vec::new();
    for gname in oracle_group_names() {
        let g = builtin_group(gname).expect("oracle groups are bundled");
        let raw = character_table(&g)?;
        let big = Arc::new(CharTableModel::from_raw(&raw)?);
        for (idx, sub) in g.subgroups().into_iter().enumerate() {
            let name = format!("{}_sub{:02}_o{}", gname, idx, sub.len());
            cases.push(build_case(&g, &big, &sub, &name)?);
        }
    }
    Ok(cases)
}

/// One quotient surjection of group duals, with the kernel recorded for
/// checking the kept set of the induced quotient.
pub struct SurjectionCase {
    pub name: String,
    pub restriction: RestrictionData,
    /// Element indices of the kernel inside the source group (finite cases).
    pub kernel: Vec<usize>,
    pub source_order: usize,
}

fn normal_subgroup_of_order(g: &FiniteGroup, order: usize) -> Vec<usize> {
    g.subgroups()
        .into_iter()
        .find(|s| s.len() == order && g.is_normal_subgroup(s))
        .expect("requested normal subgroup exists")
}

fn finite_surjection(g: &FiniteGroup, kernel: Vec<usize>, name: &str) -> Result<SurjectionCase> {
    let (q, map) = g.quotient(&kernel)?;
    let source = Arc::new(GroupDualModel::finite(g.clone()));
    let target = Arc::new(GroupDualModel::finite(q));
    let restriction = group_dual_subgroup(name, source, target, DualSurjection::Finite { map })?;
    Ok(SurjectionCase {
        name: name.to_string(),
        restriction,
        kernel,
        source_order: g.order(),
    })
}

/// Ten finite quotient surjections with known kernels.
pub fn finite_surjection_corpus() -> Result<Vec<SurjectionCase>> {
    let mut out = Vec::new();
    let plans: Vec<(&str, usize, &str)> = vec![
        ("Z6", 3, "Z6_mod_Z3"),
        ("Z6", 2, "Z6_mod_Z2"),
        ("Z4", 2, "Z4_mod_Z2"),
        ("Z8", 2, "Z8_mod_Z2"),
        ("Z12", 3, "Z12_mod_Z3"),
        ("S3", 3, "S3_mod_A3"),
        ("D4", 2, "D4_mod_center"),
        ("Q8", 2, "Q8_mod_center"),
        ("A4", 4, "A4_mod_V4"),
        ("S4", 4, "S4_mod_V4"),
    ];
    for (gname, kernel_order, name) in plans {
        let g = builtin_group(gname).expect("bundled group");
        let kernel = normal_subgroup_of_order(&g, kernel_order);
        out.push(finite_surjection(&g, kernel, name)?);
    }
    Ok(out)
}

/// Restrictions whose source and target models resolve by tag alone, for
/// shipping as explicit-table JSON files; the depth bounds the tabulated
/// window.
pub fn restriction_file_corpus() -> Result<Vec<(String, RestrictionData, u32)>> {
    use crate::subgroup::{au_central_torus, bu_sign_subgroup};
    let mut out = Vec::new();

    let z6 = Arc::new(GroupDualModel::finite(cyclic(6)));
    for k in [2usize, 3] {
        let target = Arc::new(GroupDualModel::finite(cyclic(k)));
        let map: Vec<usize> = (0..6).map(|i| i % k).collect();
        let r = group_dual_subgroup(
            &format!("Z6_to_Z{k}"),
            Arc::clone(&z6),
            target,
            DualSurjection::Finite { map },
        )?;
        out.push((format!("Z6_to_Z{k}"), r, 8));
    }

    let s3 = builtin_group("S3").expect("bundled group");
    let a3 = normal_subgroup_of_order(&s3, 3);
    let (_, map) = s3.quotient(&a3)?;
    let r = group_dual_subgroup(
        "S3_to_Z2",
        Arc::new(GroupDualModel::finite(s3)),
        Arc::new(GroupDualModel::finite(cyclic(2))),
        DualSurjection::Finite { map },
    )?;
    out.push(("S3_to_Z2".into(), r, 8));

    out.push(("bu_sign_3".into(), bu_sign_subgroup(3)?, 8));
    out.push(("au_torus_2".into(), au_central_torus(2)?, 8));
    Ok(out)
}

/// Surjections of the integer dual onto finite cyclic duals, ℤ → ℤ/k.
pub fn integer_surjection_corpus() -> Result<Vec<RestrictionData>> {
    let mut out = Vec::new();
    for k in 2..=6usize {
        let source = Arc::new(GroupDualModel::integers());
        let target = Arc::new(GroupDualModel::finite(cyclic(k)));
        let img = target.element_label(1)?;
        out.push(group_dual_subgroup(
            &format!("Z_mod_{k}"),
            source,
            target,
            DualSurjection::Abelian {
                generator_images: vec![img],
            },
        )?);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::subgroup::{is_normal, verify_restriction, NormalityVerdict};

    #[test]
    fn embedding_corpus_is_large_enough_and_verifies() {
        let cases = embedding_corpus().unwrap();
        assert!(cases.len() >= 20, "only {} cases", cases.len());
        for case in &cases {
            let report = verify_restriction(&case.restriction, 6).unwrap();
            assert!(report.ok(), "restriction {} fails verification", case.name);
            case.embedding
                .validate_against(&case.subgroup_table.to_model().unwrap())
                .unwrap();
        }
    }

    #[test]
    fn oracle_and_restriction_normality_agree_on_s3() {
        for case in embedding_corpus().unwrap() {
            if case.group_name != "S3" {
                continue;
            }
            let report = is_normal(&case.restriction, 6).unwrap();
            let quantum = matches!(report.verdict, NormalityVerdict::Normal);
            assert_eq!(quantum, case.classical_normal, "case {}", case.name);
        }
    }

    #[test]
    fn finite_surjections_have_expected_kernels() {
        for case in finite_surjection_corpus().unwrap() {
            let report = is_normal(&case.restriction, 6).unwrap();
            assert!(matches!(report.verdict, NormalityVerdict::Normal), "{}", case.name);
        }
    }
}
