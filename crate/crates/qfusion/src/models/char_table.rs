//! Finite-group character tables as fusion models.
//!
//! Labels are irreducible characters (table rows); the tensor rule
//! decomposes the pointwise product of characters by the inner product
//! ⟨χ_i·χ_j, χ_k⟩, with entries required to round to non-negative integers
//! within a fixed tolerance.

use std::sync::Arc;

use num_bigint::BigUint;
use num_complex::Complex64;

use crate::error::{FusionError, Result};
use crate::finite_group::RawCharTable;
use crate::label::{Label, Payload};
use crate::model::{check_tag, FusionModel};
use crate::sum::FormalSum;

/// Tolerance for recognizing an inner product as an integer multiplicity.
pub const MULT_TOL: f64 = 1e-6;
/// Tolerance for orthogonality validation.
pub const ORTHO_TOL: f64 = 1e-9;

/// A finite-group character table presented as a fusion model.
#[derive(Clone, Debug)]
pub struct CharTableModel {
    name: String,
    order: usize,
    class_sizes: Vec<usize>,
    irrep_names: Vec<String>,
    /// rows = irreps, columns = classes; column 0 is the identity class.
    values: Vec<Vec<Complex64>>,
    dims: Vec<u64>,
    tag: Arc<str>,
}

impl CharTableModel {
    pub fn new(
        name: &str,
        order: usize,
        class_sizes: Vec<usize>,
        irrep_names: Vec<String>,
        values: Vec<Vec<Complex64>>,
    ) -> Result<CharTableModel> {
        let bad = |reason: String| FusionError::BadCharTable {
            table: name.to_string(),
            reason,
        };
        let classes = class_sizes.len();
        if classes == 0 || values.is_empty() {
            return Err(bad("empty table".into()));
        }
        if class_sizes.iter().sum::<usize>() != order {
            return Err(bad("class sizes do not sum to the group order".into()));
        }
        if values.len() != classes {
            return Err(bad(format!(
                "expected {} irreps for {} classes, got {}",
                classes,
                classes,
                values.len()
            )));
        }
        if irrep_names.len() != values.len() {
            return Err(bad("irrep name count mismatch".into()));
        }
        for row in &values {
            if row.len() != classes {
                return Err(bad("ragged character matrix".into()));
            }
        }
        if class_sizes[0] != 1 {
            return Err(bad("column 0 must be the identity class (size 1)".into()));
        }

        // dims from the identity column
        let mut dims = Vec::with_capacity(values.len());
        for row in &values {
            let d = row[0];
            if d.im.abs() > ORTHO_TOL || d.re < 1.0 - ORTHO_TOL || (d.re.round() - d.re).abs() > ORTHO_TOL {
                return Err(bad(format!("non-integral dimension {d}")));
            }
            dims.push(d.re.round() as u64);
        }
        let dim_sq: u64 = dims.iter().map(|d| d * d).sum();
        if dim_sq != order as u64 {
            return Err(bad(format!(
                "sum of squared dimensions {dim_sq} != order {order}"
            )));
        }

        let model = CharTableModel {
            name: name.to_string(),
            order,
            class_sizes,
            irrep_names,
            values,
            dims,
            tag: format!("char_table:{name}").into(),
        };

        // row orthogonality
        for i in 0..model.values.len() {
            for j in 0..model.values.len() {
                let inner = model.inner_product_rows(i, j);
                let expect = if i == j { 1.0 } else { 0.0 };
                if (inner - Complex64::new(expect, 0.0)).norm() > ORTHO_TOL {
                    return Err(bad(format!(
                        "row orthogonality fails for irreps {i}, {j}: {inner}"
                    )));
                }
            }
        }
        if model.trivial_row().is_none() {
            return Err(bad("no trivial character row".into()));
        }
        Ok(model)
    }

    pub fn from_raw(raw: &RawCharTable) -> Result<CharTableModel> {
        CharTableModel::new(
            &raw.name,
            raw.order,
            raw.class_sizes.clone(),
            raw.irrep_names.clone(),
            raw.values.clone(),
        )
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn class_sizes(&self) -> &[usize] {
        &self.class_sizes
    }

    pub fn irrep_count(&self) -> usize {
        self.values.len()
    }

    pub fn irrep_names(&self) -> &[String] {
        &self.irrep_names
    }

    pub fn char_value(&self, irrep: usize, class: usize) -> Complex64 {
        self.values[irrep][class]
    }

    pub fn irrep_dim(&self, irrep: usize) -> u64 {
        self.dims[irrep]
    }

    pub fn label(&self, irrep: usize) -> Result<Label> {
        if irrep < self.values.len() {
            Ok(Label::new(self.tag.clone(), Payload::Elem(irrep)))
        } else {
            Err(FusionError::InvalidLabel {
                label: format!("#{irrep}"),
                model: self.tag.to_string(),
                reason: format!("only {} irreps", self.values.len()),
            })
        }
    }

    fn row_of(&self, x: &Label) -> Result<usize> {
        check_tag(self, x)?;
        match x.payload() {
            Payload::Elem(i) if *i < self.values.len() => Ok(*i),
            other => Err(FusionError::InvalidLabel {
                label: format!("{other:?}"),
                model: self.tag.to_string(),
                reason: "expected an irrep row index".into(),
            }),
        }
    }

    fn inner_product_rows(&self, i: usize, j: usize) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, &size) in self.class_sizes.iter().enumerate() {
            acc += self.values[i][c] * self.values[j][c].conj() * (size as f64);
        }
        acc / self.order as f64
    }

    fn trivial_row(&self) -> Option<usize> {
        (0..self.values.len()).find(|&i| {
            self.values[i]
                .iter()
                .all(|z| (z - Complex64::new(1.0, 0.0)).norm() < ORTHO_TOL)
        })
    }

    /// ⟨χ_i·χ_j, χ_k⟩ rounded to a non-negative integer.
    fn product_multiplicity(&self, i: usize, j: usize, k: usize) -> Result<u64> {
        let mut acc = Complex64::new(0.0, 0.0);
        for (c, &size) in self.class_sizes.iter().enumerate() {
            acc += self.values[i][c] * self.values[j][c] * self.values[k][c].conj() * (size as f64);
        }
        acc /= self.order as f64;
        round_multiplicity(acc, &self.name)
    }
}

/// Rounds a complex inner product to a non-negative integer multiplicity.
pub(crate) fn round_multiplicity(z: Complex64, context: &str) -> Result<u64> {
    let r = z.re.round();
    if z.im.abs() > MULT_TOL || (z.re - r).abs() > MULT_TOL || r < -0.5 {
        return Err(FusionError::InconsistentRestriction(format!(
            "inner product {z} in `{context}` is not a non-negative integer within {MULT_TOL}"
        )));
    }
    Ok(r as u64)
}

impl FusionModel for CharTableModel {
    fn tag(&self) -> &Arc<str> {
        &self.tag
    }

    fn unit(&self) -> Label {
        self.label(self.trivial_row().expect("validated at construction"))
            .expect("row exists")
    }

    fn dual(&self, x: &Label) -> Result<Label> {
        let i = self.row_of(x)?;
        let conj = (0..self.values.len()).find(|&j| {
            self.values[j]
                .iter()
                .zip(&self.values[i])
                .all(|(a, b)| (a - b.conj()).norm() < MULT_TOL)
        });
        match conj {
            Some(j) => self.label(j),
            None => Err(FusionError::BadCharTable {
                table: self.name.clone(),
                reason: format!("no conjugate row for irrep {i}"),
            }),
        }
    }

    fn dim(&self, x: &Label) -> Result<BigUint> {
        Ok(BigUint::from(self.dims[self.row_of(x)?]))
    }

    fn tensor(&self, x: &Label, y: &Label) -> Result<FormalSum> {
        let i = self.row_of(x)?;
        let j = self.row_of(y)?;
        let mut out = FormalSum::new();
        for k in 0..self.values.len() {
            let m = self.product_multiplicity(i, j, k)?;
            out.add_term(self.label(k)?, BigUint::from(m));
        }
        Ok(out)
    }

    fn enumerate(&self, _depth: u32) -> Vec<Label> {
        (0..self.values.len())
            .map(|i| self.label(i).expect("row exists"))
            .collect()
    }

    fn parse_label(&self, text: &str) -> Result<Label> {
        if let Some(i) = self.irrep_names.iter().position(|n| n == text) {
            return self.label(i);
        }
        text.strip_prefix('#')
            .and_then(|s| s.parse::<usize>().ok())
            .map(|i| self.label(i))
            .transpose()?
            .ok_or_else(|| FusionError::ParseLabel {
                text: text.to_string(),
                model: self.tag.to_string(),
                reason: "expected an irrep name or `#I` row index".into(),
            })
    }

    fn format_label(&self, x: &Label) -> Result<String> {
        Ok(self.irrep_names[self.row_of(x)?].clone())
    }

    fn label_count(&self) -> Option<usize> {
        Some(self.values.len())
    }

    fn check(&self, x: &Label) -> Result<()> {
        self.row_of(x).map(|_| ())
    }
}

/// Restriction multiplicities ⟨χ_λ|_N, χ_ν⟩ for an embedded subgroup.
///
/// `class_map[c]` is the class of the big group containing the `c`-th class
/// of the subgroup. Entry (λ, ν) is
/// (1/|N|)·Σ_c |c|·χ_λ(class_map(c))·conj(χ_ν(c)), which must round to a
/// non-negative integer; row dimension sums must be preserved.
pub fn chartable_restriction_matrix(
    big: &CharTableModel,
    small: &CharTableModel,
    class_map: &[usize],
) -> Result<Vec<Vec<u64>>> {
    if class_map.len() != small.class_sizes.len() {
        return Err(FusionError::BadEmbedding(format!(
            "class map has {} entries for {} subgroup classes",
            class_map.len(),
            small.class_sizes.len()
        )));
    }
    if class_map.iter().any(|&c| c >= big.class_sizes.len()) {
        return Err(FusionError::BadEmbedding(
            "class map index out of range".into(),
        ));
    }

    let mut matrix = Vec::with_capacity(big.irrep_count());
    for lam in 0..big.irrep_count() {
        let mut row = Vec::with_capacity(small.irrep_count());
        for nu in 0..small.irrep_count() {
            let mut acc = Complex64::new(0.0, 0.0);
            for (c, &gc) in class_map.iter().enumerate() {
                acc += big.values[lam][gc]
                    * small.values[nu][c].conj()
                    * (small.class_sizes[c] as f64);
            }
            acc /= small.order as f64;
            let m = round_multiplicity(acc, &format!("{} -> {}", big.name, small.name))
                .map_err(|_| {
                    FusionError::InconsistentRestriction(format!(
                        "restriction multiplicity of `{}` irrep {lam} at `{}` irrep {nu} is {acc}, not integral",
                        big.name, small.name
                    ))
                })?;
            row.push(m);
        }
        let dim_sum: u64 = row
            .iter()
            .enumerate()
            .map(|(nu, m)| m * small.dims[nu])
            .sum();
        if dim_sum != big.dims[lam] {
            return Err(FusionError::InconsistentRestriction(format!(
                "restriction of `{}` irrep {lam} has total dimension {dim_sum}, expected {}",
                big.name, big.dims[lam]
            )));
        }
        matrix.push(row);
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;
    use crate::finite_group::{builtin_group, character_table, cyclic, symmetric_3};
    use crate::model::verify_model;

    fn model_for(name: &str) -> CharTableModel {
        let g = builtin_group(name).unwrap();
        CharTableModel::from_raw(&character_table(&g).unwrap()).unwrap()
    }

    #[test]
    fn builtin_tables_satisfy_fusion_axioms() {
        for name in ["Z2", "Z6", "S3", "S4", "A4", "D4", "Q8"] {
            let m = model_for(name);
            assert!(
                verify_model(&m, 6).unwrap().is_empty(),
                "axioms fail for {name}"
            );
        }
    }

    #[test]
    fn s3_two_dim_irrep_squares_correctly() {
        // std ⊗ std = triv + sign + std in S3
        let m = model_for("S3");
        let std = m.parse_label("std").unwrap();
        let t = m.tensor(&std, &std).unwrap();
        assert_eq!(t.support_len(), 3);
        for i in 0..3 {
            assert_eq!(t.multiplicity(&m.label(i).unwrap()), BigUint::one());
        }
    }

    #[test]
    fn restriction_s3_to_a3() {
        let s3 = symmetric_3();
        let a3: Vec<usize> = s3
            .subgroups()
            .into_iter()
            .find(|s| s.len() == 3)
            .unwrap();
        let (h, elems) = s3.subgroup_as_group("A3", &a3).unwrap();
        let big = model_for("S3");
        let small = CharTableModel::from_raw(&character_table(&h).unwrap()).unwrap();

        // class map by representative membership
        let g_classes = s3.conjugacy_classes();
        let class_map: Vec<usize> = h
            .conjugacy_classes()
            .iter()
            .map(|c| {
                let rep = elems[c[0]];
                g_classes.iter().position(|gc| gc.contains(&rep)).unwrap()
            })
            .collect();

        let m = chartable_restriction_matrix(&big, &small, &class_map).unwrap();
        // the 2-dim irrep restricts to the two nontrivial characters of Z3
        let std_row = &m[2];
        assert_eq!(std_row[0], 0);
        assert_eq!(std_row.iter().sum::<u64>(), 2);
    }

    #[test]
    fn restriction_to_trivial_group_is_dim_copies() {
        let big = model_for("S3");
        let small = CharTableModel::from_raw(&character_table(&cyclic(1)).unwrap()).unwrap();
        let m = chartable_restriction_matrix(&big, &small, &[0]).unwrap();
        assert_eq!(m, vec![vec![1], vec![1], vec![2]]);
    }

    #[test]
    fn corrupted_class_map_is_rejected() {
        let big = model_for("S3");
        let small = model_for("Z2");
        // sending the order-2 class onto the 3-cycles is not a subgroup
        // embedding; multiplicities fail to be integral
        assert!(chartable_restriction_matrix(&big, &small, &[0, 2]).is_err());
        assert!(chartable_restriction_matrix(&big, &small, &[0, 9]).is_err());
        assert!(chartable_restriction_matrix(&big, &small, &[0]).is_err());
    }
}
