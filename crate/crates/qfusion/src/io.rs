//! File formats and model specifications used by the command line front end:
//! character-table JSON, embedding JSON, explicit restriction tables, and
//! the `kind:params` model specification syntax.

use std::collections::BTreeMap;
use std::path::Path;
use std::sync::Arc;

use num_bigint::BigUint;
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{FusionError, Result};
use crate::finite_group::{builtin_group, character_table, RawCharTable};
use crate::label::Label;
use crate::model::FusionModel;
use crate::models::{
    AbelianSpec, CharTableModel, FreeUnitaryModel, GroupDualModel, So3TypeModel, Su2TypeModel,
};
use crate::subgroup::RestrictionData;
use crate::sum::FormalSum;

// ---------------------------------------------------------------------------
// Character table JSON
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct IrrepJson {
    pub name: String,
    pub dim: u64,
    /// One [re, im] pair per conjugacy class.
    pub chars: Vec<[f64; 2]>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct CharTableJson {
    pub name: String,
    pub order: usize,
    pub class_sizes: Vec<usize>,
    pub irreps: Vec<IrrepJson>,
}

impl CharTableJson {
    pub fn from_model(m: &CharTableModel) -> CharTableJson {
        CharTableJson {
            name: m.name().to_string(),
            order: m.order(),
            class_sizes: m.class_sizes().to_vec(),
            irreps: (0..m.irrep_count())
                .map(|i| IrrepJson {
                    name: m.irrep_names()[i].clone(),
                    dim: m.irrep_dim(i),
                    chars: (0..m.class_sizes().len())
                        .map(|c| {
                            let z = m.char_value(i, c);
                            [z.re, z.im]
                        })
                        .collect(),
                })
                .collect(),
        }
    }

    pub fn to_model(&self) -> Result<CharTableModel> {
        let values: Vec<Vec<Complex64>> = self
            .irreps
            .iter()
            .map(|ir| ir.chars.iter().map(|[re, im]| Complex64::new(*re, *im)).collect())
            .collect();
        let names = self.irreps.iter().map(|ir| ir.name.clone()).collect();
        let model = CharTableModel::new(&self.name, self.order, self.class_sizes.clone(), names, values)?;
        for (i, ir) in self.irreps.iter().enumerate() {
            if model.irrep_dim(i) != ir.dim {
                return Err(FusionError::BadCharTable {
                    table: self.name.clone(),
                    reason: format!(
                        "declared dim {} of irrep `{}` does not match the identity column",
                        ir.dim, ir.name
                    ),
                });
            }
        }
        Ok(model)
    }
}

/// The character table of a bundled group, computed from its table.
pub fn builtin_char_table(name: &str) -> Option<CharTableModel> {
    let g = builtin_group(name)?;
    let raw: RawCharTable = character_table(&g).ok()?;
    CharTableModel::from_raw(&raw).ok()
}

/// Resolves a character table by bundled name or file path, checking the
/// corpus directory (QFUSION_CORPUS) for `<name>.json` first when a
/// directory is configured.
pub fn resolve_char_table(name_or_path: &str) -> Result<CharTableModel> {
    let p = Path::new(name_or_path);
    if p.is_file() {
        let text = std::fs::read_to_string(p)?;
        let json: CharTableJson = serde_json::from_str(&text)?;
        return json.to_model();
    }
    if let Ok(dir) = std::env::var("QFUSION_CORPUS") {
        let candidate = Path::new(&dir).join(format!("{name_or_path}.json"));
        if candidate.is_file() {
            let text = std::fs::read_to_string(candidate)?;
            let json: CharTableJson = serde_json::from_str(&text)?;
            return json.to_model();
        }
    }
    builtin_char_table(name_or_path).ok_or_else(|| {
        FusionError::InvalidModel(format!(
            "`{name_or_path}` is neither a file nor a bundled character table"
        ))
    })
}

// ---------------------------------------------------------------------------
// Embedding JSON
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EmbeddingJson {
    pub subgroup: String,
    pub group: String,
    /// Index of the big-group class containing each subgroup class.
    pub class_map: Vec<usize>,
    pub subgroup_class_sizes: Vec<usize>,
}

impl EmbeddingJson {
    pub fn validate_against(&self, small: &CharTableModel) -> Result<()> {
        if self.subgroup_class_sizes != small.class_sizes() {
            return Err(FusionError::BadEmbedding(format!(
                "embedding class sizes {:?} do not match table `{}`",
                self.subgroup_class_sizes,
                small.name()
            )));
        }
        if self.subgroup_class_sizes.iter().sum::<usize>() != small.order() {
            return Err(FusionError::BadEmbedding(
                "subgroup class sizes do not sum to the subgroup order".into(),
            ));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// Model specifications
// ---------------------------------------------------------------------------

/// Parsed `kind:params` model specification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ModelSpec {
    Su2Type(u64),
    So3Type(u64),
    FreeUnitary(u64),
    GroupDualFinite(String),
    GroupDualAbelian(AbelianSpec),
    CharTable(String),
}

impl ModelSpec {
    /// Accepts `su2type:N`, `so3type:N`, `free_unitary:N`,
    /// `group_dual:<group>` (bundled table name, `Z` for the integers, or
    /// `Z^r` for a free abelian group), and `char_table:<name-or-path>`.
    pub fn parse(text: &str) -> Result<ModelSpec> {
        let err = |reason: String| FusionError::InvalidModel(reason);
        let (kind, params) = text
            .split_once(':')
            .ok_or_else(|| err(format!("model spec `{text}` must look like kind:params")))?;
        let nat = |s: &str| {
            s.parse::<u64>()
                .map_err(|_| err(format!("`{s}` is not a natural number")))
        };
        match kind {
            "su2type" => Ok(ModelSpec::Su2Type(nat(params)?)),
            "so3type" => Ok(ModelSpec::So3Type(nat(params)?)),
            "free_unitary" => Ok(ModelSpec::FreeUnitary(nat(params)?)),
            "group_dual" => {
                if params == "Z" {
                    Ok(ModelSpec::GroupDualAbelian(AbelianSpec {
                        rank: 1,
                        torsion: Vec::new(),
                    }))
                } else if let Some(r) = params.strip_prefix("Z^") {
                    Ok(ModelSpec::GroupDualAbelian(AbelianSpec {
                        rank: nat(r)? as usize,
                        torsion: Vec::new(),
                    }))
                } else {
                    Ok(ModelSpec::GroupDualFinite(params.to_string()))
                }
            }
            "char_table" => Ok(ModelSpec::CharTable(params.to_string())),
            other => Err(err(format!("unknown model kind `{other}`"))),
        }
    }

    pub fn build(&self) -> Result<Arc<dyn FusionModel>> {
        match self {
            ModelSpec::Su2Type(n) => Ok(Arc::new(Su2TypeModel::new(*n)?)),
            ModelSpec::So3Type(n) => Ok(Arc::new(So3TypeModel::new(*n)?)),
            ModelSpec::FreeUnitary(n) => Ok(Arc::new(FreeUnitaryModel::new(*n)?)),
            ModelSpec::GroupDualFinite(name) => {
                let g = builtin_group(name).ok_or_else(|| {
                    FusionError::InvalidModel(format!("no bundled group named `{name}`"))
                })?;
                Ok(Arc::new(GroupDualModel::finite(g)))
            }
            ModelSpec::GroupDualAbelian(spec) => {
                Ok(Arc::new(GroupDualModel::abelian(spec.clone())?))
            }
            ModelSpec::CharTable(name) => Ok(Arc::new(resolve_char_table(name)?)),
        }
    }

    pub fn canonical(&self) -> String {
        match self {
            ModelSpec::Su2Type(n) => format!("su2type:{n}"),
            ModelSpec::So3Type(n) => format!("so3type:{n}"),
            ModelSpec::FreeUnitary(n) => format!("free_unitary:{n}"),
            ModelSpec::GroupDualFinite(name) => format!("group_dual:{name}"),
            ModelSpec::GroupDualAbelian(spec) => format!("group_dual:{}", spec.name()),
            ModelSpec::CharTable(name) => format!("char_table:{name}"),
        }
    }
}

// ---------------------------------------------------------------------------
// Restriction JSON (explicit-table form)
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct TermJson {
    pub label: String,
    pub mult: u64,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestrictionRowJson {
    pub label: String,
    pub terms: Vec<TermJson>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct RestrictionJson {
    pub source_model: String,
    pub target_model: String,
    pub table: Vec<RestrictionRowJson>,
}

impl RestrictionJson {
    /// Tabulates a restriction over its source window as an explicit table.
    pub fn from_restriction(r: &RestrictionData, depth: u32) -> Result<RestrictionJson> {
        use num_traits::ToPrimitive;
        let mut table = Vec::new();
        for x in r.source.enumerate(depth) {
            let sum = r.restrict(&x)?;
            let mut terms = Vec::new();
            for (l, m) in sum.iter() {
                terms.push(TermJson {
                    label: r.target.format_label(l)?,
                    mult: m.to_u64().ok_or_else(|| {
                        FusionError::Unsupported("multiplicity exceeds u64".into())
                    })?,
                });
            }
            table.push(RestrictionRowJson {
                label: r.source.format_label(&x)?,
                terms,
            });
        }
        Ok(RestrictionJson {
            source_model: r.source.tag().to_string(),
            target_model: r.target.tag().to_string(),
            table,
        })
    }

    pub fn to_restriction(&self, name: &str) -> Result<RestrictionData> {
        let source = ModelSpec::parse(&self.source_model)?.build()?;
        let target = ModelSpec::parse(&self.target_model)?.build()?;
        let mut table: BTreeMap<Label, FormalSum> = BTreeMap::new();
        for row in &self.table {
            let x = source.parse_label(&row.label)?;
            let mut sum = FormalSum::new();
            for t in &row.terms {
                sum.add_term(target.parse_label(&t.label)?, BigUint::from(t.mult));
            }
            table.insert(x, sum);
        }
        Ok(RestrictionData::from_table(name, source, target, table))
    }
}
