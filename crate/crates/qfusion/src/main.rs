use std::collections::BTreeSet;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Parser, Subcommand};
use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use qfusion::corpus;
use qfusion::error::{FusionError, Result};
use qfusion::finite_group::builtin_group_names;
use qfusion::io::{CharTableJson, EmbeddingJson, ModelSpec, RestrictionJson};
use qfusion::model::{closure, verify_model, Budget, FusionModel};
use qfusion::simplicity::{
    enumerate_subrings, simplicity_report, Connectedness, SimplicityVerdict,
};
use qfusion::subgroup::{
    au_central_torus, bu_nonnormal_subgroup, bu_sign_subgroup, chartable_restriction, is_central,
    is_normal, verify_restriction, NormalityVerdict, RestrictionData,
};
use qfusion::sum::FormalSum;

#[derive(Parser)]
#[command(
    name = "qfusion",
    version,
    about = "Exact arithmetic for fusion rings: tensor decomposition, closures, subrings, quantum-subgroup normality, simplicity reports."
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    /// Emit machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Enumeration depth (default 8; 6 for subring lattices).
    #[arg(long, global = true)]
    depth: Option<u32>,
    /// Label budget for closure computations.
    #[arg(long, global = true)]
    max_labels: Option<usize>,
}

#[derive(Subcommand)]
enum Cmd {
    /// Decompose a tensor product of two irreducibles.
    Tensor {
        #[arg(long)]
        model: String,
        x: String,
        y: String,
    },
    /// Dimension of an irreducible.
    Dim {
        #[arg(long)]
        model: String,
        label: String,
    },
    /// Saturation closure of a seed set of labels.
    Closure {
        #[arg(long)]
        model: String,
        #[arg(required = true)]
        seeds: Vec<String>,
    },
    /// Enumerate closed subrings visible in the depth window.
    Subrings {
        #[arg(long)]
        model: String,
    },
    /// Normality / centrality of a quantum subgroup restriction.
    NormalCheck {
        /// Built-in name (bu-sign:N, bu-H:N, au-torus:N, or a bundled
        /// surjection name) or a restriction JSON file.
        #[arg(long)]
        restriction: String,
    },
    /// Full simplicity report for a model.
    Simplicity {
        #[arg(long)]
        model: String,
    },
    /// Compare the character-restriction normality test with the classical
    /// conjugation test for finite-group subgroups.
    GroupOracle {
        /// Bundled group name or character table JSON file.
        #[arg(long)]
        group: String,
        /// Embedding JSON file describing the subgroup.
        #[arg(long)]
        subgroup: Option<String>,
        /// Run every bundled subgroup of the group.
        #[arg(long)]
        all: bool,
    },
    /// List bundled models, groups and restrictions.
    Models {
        /// Write the bundled corpus as JSON files into a directory.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Validate the bundled models and corpus.
    Selftest,
}

fn exit_code_for(err: &FusionError) -> u8 {
    match err {
        FusionError::ParseLabel { .. }
        | FusionError::InvalidLabel { .. }
        | FusionError::InvalidModel(_)
        | FusionError::Io(_)
        | FusionError::Json(_) => 1,
        FusionError::ModelMismatch { .. }
        | FusionError::BadCharTable { .. }
        | FusionError::BadEmbedding(_)
        | FusionError::InconsistentRestriction(_) => 2,
        FusionError::MissingRestriction(_)
        | FusionError::NotHomomorphism(_)
        | FusionError::NotNormal { .. }
        | FusionError::Unsupported(_) => 3,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // clap uses exit code 2 for usage errors; the documented contract
            // reserves 1 for those, so print and map explicitly.
            let is_help = matches!(
                e.kind(),
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion
            );
            let _ = e.print();
            return if is_help { ExitCode::SUCCESS } else { ExitCode::from(1) };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

fn budget_from(cli_max_labels: Option<usize>) -> Budget {
    let mut b = Budget::default();
    if let Some(m) = cli_max_labels {
        b.max_labels = m;
    }
    b
}

fn run(cli: Cli) -> Result<()> {
    let depth = cli.depth;
    let budget = budget_from(cli.max_labels);
    let json = cli.json;
    match cli.cmd {
        Cmd::Tensor { model, x, y } => cmd_tensor(&model, &x, &y, json),
        Cmd::Dim { model, label } => cmd_dim(&model, &label, json),
        Cmd::Closure { model, seeds } => {
            cmd_closure(&model, &seeds, depth.unwrap_or(8), budget, json)
        }
        Cmd::Subrings { model } => cmd_subrings(&model, depth.unwrap_or(6), budget, json),
        Cmd::NormalCheck { restriction } => {
            cmd_normal_check(&restriction, depth.unwrap_or(8), json)
        }
        Cmd::Simplicity { model } => cmd_simplicity(&model, depth.unwrap_or(8), json),
        Cmd::GroupOracle { group, subgroup, all } => {
            cmd_group_oracle(&group, subgroup.as_deref(), all, depth.unwrap_or(8), json)
        }
        Cmd::Models { dump } => cmd_models(dump.as_deref(), json),
        Cmd::Selftest => cmd_selftest(json),
    }
}

// ---------------------------------------------------------------------------
// Rendering helpers
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TermOut {
    label: String,
    mult: u64,
}

fn terms_out(model: &dyn FusionModel, sum: &FormalSum) -> Result<Vec<TermOut>> {
    sum.iter()
        .map(|(l, m)| {
            Ok(TermOut {
                label: model.format_label(l)?,
                mult: m.to_u64().ok_or_else(|| {
                    FusionError::Unsupported("multiplicity exceeds u64 in JSON output".into())
                })?,
            })
        })
        .collect()
}

fn render_sum(model: &dyn FusionModel, sum: &FormalSum) -> Result<String> {
    if sum.is_empty() {
        return Ok("0".to_string());
    }
    let parts: Result<Vec<String>> = sum
        .iter()
        .map(|(l, m)| {
            let text = model.format_label(l)?;
            Ok(if m == &BigUint::one() {
                text
            } else {
                format!("{m}*{text}")
            })
        })
        .collect();
    Ok(parts?.join(" + "))
}

fn print_json<T: Serialize>(value: &T) -> Result<()> {
    println!("{}", serde_json::to_string_pretty(value)?);
    Ok(())
}

// ---------------------------------------------------------------------------
// tensor / dim / closure / subrings
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct TensorOut {
    model: String,
    x: String,
    y: String,
    terms: Vec<TermOut>,
    dim: String,
}

fn cmd_tensor(model_spec: &str, x: &str, y: &str, json: bool) -> Result<()> {
    let spec = ModelSpec::parse(model_spec)?;
    let model = spec.build()?;
    let lx = model.parse_label(x)?;
    let ly = model.parse_label(y)?;
    let sum = model.tensor(&lx, &ly)?;
    let dim = qfusion::model::dim_of_sum(model.as_ref(), &sum)?;
    if json {
        print_json(&TensorOut {
            model: spec.canonical(),
            x: model.format_label(&lx)?,
            y: model.format_label(&ly)?,
            terms: terms_out(model.as_ref(), &sum)?,
            dim: dim.to_string(),
        })
    } else {
        println!("{}", render_sum(model.as_ref(), &sum)?);
        println!("total dimension: {dim}");
        Ok(())
    }
}

#[derive(Serialize)]
struct DimOut {
    model: String,
    label: String,
    dim: String,
}

fn cmd_dim(model_spec: &str, label: &str, json: bool) -> Result<()> {
    let spec = ModelSpec::parse(model_spec)?;
    let model = spec.build()?;
    let l = model.parse_label(label)?;
    let dim = model.dim(&l)?;
    if json {
        print_json(&DimOut {
            model: spec.canonical(),
            label: model.format_label(&l)?,
            dim: dim.to_string(),
        })
    } else {
        println!("{dim}");
        Ok(())
    }
}

#[derive(Serialize)]
struct ClosureOut {
    model: String,
    seeds: Vec<String>,
    saturated: bool,
    steps_used: u32,
    max_labels: usize,
    count: usize,
    labels: Vec<String>,
}

fn cmd_closure(
    model_spec: &str,
    seeds: &[String],
    _depth: u32,
    budget: Budget,
    json: bool,
) -> Result<()> {
    let spec = ModelSpec::parse(model_spec)?;
    let model = spec.build()?;
    let seed_labels: Result<Vec<_>> = seeds.iter().map(|s| model.parse_label(s)).collect();
    let seed_labels = seed_labels?;
    let res = closure(model.as_ref(), &seed_labels, budget)?;
    let labels: Result<Vec<String>> = res
        .labels
        .iter()
        .map(|l| model.format_label(l))
        .collect();
    let labels = labels?;
    if json {
        print_json(&ClosureOut {
            model: spec.canonical(),
            seeds: seeds.to_vec(),
            saturated: res.saturated,
            steps_used: res.steps_used,
            max_labels: budget.max_labels,
            count: labels.len(),
            labels,
        })
    } else {
        println!(
            "{}",
            if res.saturated { "saturated" } else { "NOT saturated (budget reached)" }
        );
        println!("{} labels after {} steps:", labels.len(), res.steps_used);
        println!("{}", labels.join(" "));
        Ok(())
    }
}

#[derive(Serialize)]
struct SubringsOut {
    model: String,
    depth: u32,
    complete_up_to_depth: u32,
    budget_hit: bool,
    count: usize,
    subrings: Vec<Vec<String>>,
}

fn cmd_subrings(model_spec: &str, depth: u32, budget: Budget, json: bool) -> Result<()> {
    let spec = ModelSpec::parse(model_spec)?;
    let model = spec.build()?;
    let lattice = enumerate_subrings(model.as_ref(), depth, budget)?;
    let mut rendered = Vec::new();
    for set in &lattice.closed_sets {
        let labels: Result<Vec<String>> = set
            .window_labels
            .iter()
            .map(|l| model.format_label(l))
            .collect();
        rendered.push(labels?);
    }
    if json {
        print_json(&SubringsOut {
            model: spec.canonical(),
            depth,
            complete_up_to_depth: lattice.complete_up_to_depth,
            budget_hit: lattice.budget_hit,
            count: rendered.len(),
            subrings: rendered,
        })
    } else {
        println!(
            "{} closed subring(s) in the depth-{} window{}:",
            rendered.len(),
            depth,
            if lattice.budget_hit { " (budget hit; may be incomplete)" } else { "" }
        );
        for labels in &rendered {
            println!("  {{ {} }}", labels.join(" "));
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// normal-check
// ---------------------------------------------------------------------------

fn resolve_restriction(name_or_path: &str) -> Result<RestrictionData> {
    if let Some((kind, param)) = name_or_path.split_once(':') {
        let n = || {
            param.parse::<u64>().map_err(|_| {
                FusionError::InvalidModel(format!("`{param}` is not a natural number"))
            })
        };
        match kind {
            "bu-sign" => return bu_sign_subgroup(n()?),
            "bu-H" => return bu_nonnormal_subgroup(n()?),
            "au-torus" => return au_central_torus(n()?),
            _ => {}
        }
    }
    let p = Path::new(name_or_path);
    if p.is_file() {
        let text = std::fs::read_to_string(p)?;
        let parsed: RestrictionJson = serde_json::from_str(&text)?;
        let stem = p
            .file_stem()
            .and_then(|s| s.to_str())
            .unwrap_or("restriction");
        return parsed.to_restriction(stem);
    }
    for case in corpus::finite_surjection_corpus()? {
        if case.name == name_or_path {
            return Ok(case.restriction);
        }
    }
    for r in corpus::integer_surjection_corpus()? {
        if r.name == name_or_path {
            return Ok(r);
        }
    }
    Err(FusionError::MissingRestriction(format!(
        "`{name_or_path}` is neither a restriction file nor a bundled restriction"
    )))
}

#[derive(Serialize)]
struct NormalOut {
    restriction: String,
    source_model: String,
    target_model: String,
    depth: u32,
    verdict: String,
    proof_backed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_multiplicity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness_dimension: Option<String>,
    s_of_n: Vec<String>,
    central: bool,
}

fn verdict_text(v: &NormalityVerdict) -> &'static str {
    match v {
        NormalityVerdict::Normal => "normal",
        NormalityVerdict::NotNormal => "not_normal",
        NormalityVerdict::Undecided => "undecided",
    }
}

fn cmd_normal_check(restriction: &str, depth: u32, json: bool) -> Result<()> {
    let r = resolve_restriction(restriction)?;
    let verification = verify_restriction(&r, depth.min(5))?;
    if !verification.ok() {
        return Err(FusionError::InconsistentRestriction(
            verification.violations.join("; "),
        ));
    }
    let report = is_normal(&r, depth)?;
    let centrality = is_central(&r, depth)?;
    let s_of_n: Result<Vec<String>> = report
        .s_of_n
        .iter()
        .map(|l| r.source.format_label(l))
        .collect();
    let s_of_n = s_of_n?;
    let out = NormalOut {
        restriction: r.name.clone(),
        source_model: r.source.tag().to_string(),
        target_model: r.target.tag().to_string(),
        depth,
        verdict: verdict_text(&report.verdict).to_string(),
        proof_backed: report.proof_backed,
        witness: report
            .witness
            .as_ref()
            .map(|w| r.source.format_label(w))
            .transpose()?,
        witness_multiplicity: report
            .witness_multiplicity
            .as_ref()
            .map(|(m, _)| m.to_string()),
        witness_dimension: report
            .witness_multiplicity
            .as_ref()
            .map(|(_, d)| d.to_string()),
        s_of_n,
        central: centrality.central,
    };
    if json {
        print_json(&out)
    } else {
        match report.verdict {
            NormalityVerdict::Normal => println!(
                "NORMAL{}{}",
                if out.proof_backed { " (proof-backed)" } else { "" },
                if out.central { ", CENTRAL" } else { "" }
            ),
            NormalityVerdict::NotNormal => println!(
                "NOT NORMAL: witness {} has trivial multiplicity {} ∉ {{0, {}}}",
                out.witness.as_deref().unwrap_or("?"),
                out.witness_multiplicity.as_deref().unwrap_or("?"),
                out.witness_dimension.as_deref().unwrap_or("?"),
            ),
            NormalityVerdict::Undecided => {
                println!("UNDECIDED up to depth {depth} (no violation found)")
            }
        }
        println!("S(N) window: {{ {} }}", out.s_of_n.join(" "));
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// simplicity
// ---------------------------------------------------------------------------

fn builtin_restrictions_for(spec: &ModelSpec) -> Result<Vec<RestrictionData>> {
    Ok(match spec {
        ModelSpec::Su2Type(n) => vec![bu_sign_subgroup(*n)?, bu_nonnormal_subgroup(*n)?],
        ModelSpec::FreeUnitary(n) => vec![au_central_torus(*n)?],
        _ => Vec::new(),
    })
}

#[derive(Serialize)]
struct FindingOut {
    name: String,
    verdict: String,
    proof_backed: bool,
    central: bool,
    target_connected: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    target_order: Option<usize>,
    trivial: bool,
}

#[derive(Serialize)]
struct SimplicityOut {
    model: String,
    depth: u32,
    verdict: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<String>,
    connected: bool,
    one_dim_labels: Vec<String>,
    subring_count: usize,
    subrings: Vec<Vec<String>>,
    normal_findings: Vec<FindingOut>,
    notes: Vec<String>,
}

fn cmd_simplicity(model_spec: &str, depth: u32, json: bool) -> Result<()> {
    let spec = ModelSpec::parse(model_spec)?;
    let model = spec.build()?;
    let restrictions = builtin_restrictions_for(&spec)?;
    let report = simplicity_report(Arc::clone(&model), &restrictions, depth)?;
    let (verdict, reason) = match &report.verdict {
        SimplicityVerdict::SimpleEvidence => ("simple_evidence".to_string(), None),
        SimplicityVerdict::NotSimple(why) => ("not_simple".to_string(), Some(why.clone())),
        SimplicityVerdict::Undecided => ("undecided".to_string(), None),
    };
    let mut subrings = Vec::new();
    for set in &report.subrings.closed_sets {
        let labels: Result<Vec<String>> = set
            .window_labels
            .iter()
            .map(|l| model.format_label(l))
            .collect();
        subrings.push(labels?);
    }
    let one_dim: Result<Vec<String>> = report
        .one_dim_labels
        .iter()
        .map(|l| model.format_label(l))
        .collect();
    let out = SimplicityOut {
        model: spec.canonical(),
        depth,
        verdict,
        reason,
        connected: report.connected.verdict == Connectedness::Connected,
        one_dim_labels: one_dim?,
        subring_count: subrings.len(),
        subrings,
        normal_findings: report
            .normal_findings
            .iter()
            .map(|f| FindingOut {
                name: f.name.clone(),
                verdict: verdict_text(&f.report.verdict).to_string(),
                proof_backed: f.report.proof_backed,
                central: f.central,
                target_connected: f.target_connected == Connectedness::Connected,
                target_order: f.target_order,
                trivial: f.trivial,
            })
            .collect(),
        notes: report.notes.clone(),
    };
    if json {
        print_json(&out)
    } else {
        println!("verdict: {}", out.verdict);
        if let Some(reason) = &out.reason {
            println!("reason: {reason}");
        }
        println!("connected: {}", out.connected);
        if !out.one_dim_labels.is_empty() {
            println!("one-dimensional labels: {}", out.one_dim_labels.join(" "));
        }
        println!("closed subrings in window: {}", out.subring_count);
        for f in &out.normal_findings {
            println!(
                "  subgroup {}: {}{}{}{}",
                f.name,
                f.verdict,
                if f.central { ", central" } else { "" },
                if f.trivial { ", trivial" } else { "" },
                f.target_order
                    .map(|o| format!(", order {o}"))
                    .unwrap_or_default()
            );
        }
        for note in &out.notes {
            println!("note: {note}");
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// group-oracle
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct OracleCaseOut {
    name: String,
    subgroup_order: usize,
    quantum: String,
    classical: String,
    agree: bool,
}

#[derive(Serialize)]
struct OracleOut {
    group: String,
    cases: Vec<OracleCaseOut>,
    all_agree: bool,
}

fn oracle_case_out(
    name: &str,
    restriction: &RestrictionData,
    subgroup_order: usize,
    classical_normal: bool,
    depth: u32,
) -> Result<OracleCaseOut> {
    let report = is_normal(restriction, depth)?;
    let quantum_normal = report.verdict == NormalityVerdict::Normal;
    Ok(OracleCaseOut {
        name: name.to_string(),
        subgroup_order,
        quantum: verdict_text(&report.verdict).to_string(),
        classical: if classical_normal { "normal" } else { "not_normal" }.to_string(),
        agree: quantum_normal == classical_normal,
    })
}

fn cmd_group_oracle(
    group: &str,
    subgroup: Option<&str>,
    all: bool,
    depth: u32,
    json: bool,
) -> Result<()> {
    let mut cases = Vec::new();
    let group_display;
    if all {
        group_display = group.to_string();
        for case in corpus::embedding_corpus()? {
            if case.group_name == group {
                cases.push(oracle_case_out(
                    &case.name,
                    &case.restriction,
                    case.elements.len(),
                    case.classical_normal,
                    depth,
                )?);
            }
        }
        if cases.is_empty() {
            return Err(FusionError::InvalidModel(format!(
                "`{group}` is not one of the bundled oracle groups"
            )));
        }
    } else {
        let embedding_path = subgroup.ok_or_else(|| {
            FusionError::InvalidModel("pass --subgroup <embedding.json> or --all".into())
        })?;
        let big = Arc::new(qfusion::io::resolve_char_table(group)?);
        group_display = big.name().to_string();
        let text = std::fs::read_to_string(embedding_path)?;
        let embedding: EmbeddingJson = serde_json::from_str(&text)?;
        let small = Arc::new(qfusion::io::resolve_char_table(&embedding.subgroup)?);
        embedding.validate_against(&small)?;
        let subgroup_order = small.order();
        let r = chartable_restriction(
            &embedding.subgroup,
            Arc::clone(&big),
            Arc::clone(&small),
            &embedding.class_map,
        )?;
        // classical ground truth is only available for bundled groups where
        // the multiplication table is known
        let classical = classical_normality(&embedding)?;
        let report = is_normal(&r, depth)?;
        let quantum_normal = report.verdict == NormalityVerdict::Normal;
        cases.push(OracleCaseOut {
            name: embedding.subgroup.clone(),
            subgroup_order,
            quantum: verdict_text(&report.verdict).to_string(),
            classical: if classical { "normal" } else { "not_normal" }.to_string(),
            agree: quantum_normal == classical,
        });
    }
    let all_agree = cases.iter().all(|c| c.agree);
    let out = OracleOut {
        group: group_display,
        cases,
        all_agree,
    };
    if json {
        print_json(&out)?;
    } else {
        for c in &out.cases {
            println!(
                "{} (order {}): quantum {}, classical {} — {}",
                c.name,
                c.subgroup_order,
                c.quantum,
                c.classical,
                if c.agree { "AGREE" } else { "DISAGREE" }
            );
        }
        println!("all agree: {}", out.all_agree);
    }
    if all_agree {
        Ok(())
    } else {
        Err(FusionError::InconsistentRestriction(
            "oracle comparison found a disagreement".into(),
        ))
    }
}

/// Classical normality for an embedding of bundled subgroups: a union of
/// conjugacy classes of the big group is normal exactly when it is closed
/// under the group law, which for class-map data reduces to the subgroup
/// being a union of full big-group classes.
fn classical_normality(embedding: &EmbeddingJson) -> Result<bool> {
    let g = qfusion::finite_group::builtin_group(&embedding.group).ok_or_else(|| {
        FusionError::Unsupported(format!(
            "classical comparison needs a bundled multiplication table for `{}`",
            embedding.group
        ))
    })?;
    let g_classes = g.conjugacy_classes();
    let class_sizes: Vec<usize> = g_classes.iter().map(|c| c.len()).collect();
    // N is normal iff it is a union of conjugacy classes of G: each mapped
    // class must be fully contained, i.e. the subgroup class sizes mapped to
    // a common big class must sum to that class's size.
    let mut covered = vec![0usize; class_sizes.len()];
    for (i, &c) in embedding.class_map.iter().enumerate() {
        if c >= class_sizes.len() {
            return Err(FusionError::BadEmbedding(format!(
                "class map entry {c} out of range"
            )));
        }
        covered[c] += embedding.subgroup_class_sizes[i];
    }
    Ok(covered
        .iter()
        .zip(&class_sizes)
        .all(|(&got, &size)| got == 0 || got == size))
}

// ---------------------------------------------------------------------------
// models / selftest
// ---------------------------------------------------------------------------

#[derive(Serialize)]
struct ModelsOut {
    model_kinds: Vec<String>,
    bundled_groups: Vec<String>,
    bundled_restrictions: Vec<String>,
    oracle_groups: Vec<String>,
}

fn bundled_restriction_names() -> Result<Vec<String>> {
    let mut names: Vec<String> = vec![
        "bu-sign:N (N ≥ 2)".into(),
        "bu-H:N (N ≥ 2)".into(),
        "au-torus:N (N ≥ 2)".into(),
    ];
    for case in corpus::finite_surjection_corpus()? {
        names.push(case.name);
    }
    for r in corpus::integer_surjection_corpus()? {
        names.push(r.name);
    }
    Ok(names)
}

fn cmd_models(dump: Option<&Path>, json: bool) -> Result<()> {
    if let Some(dir) = dump {
        dump_corpus(dir)?;
        println!("corpus written to {}", dir.display());
        return Ok(());
    }
    let out = ModelsOut {
        model_kinds: vec![
            "su2type:N (N ≥ 2)".into(),
            "so3type:N (N ≥ 4)".into(),
            "free_unitary:N (N ≥ 2)".into(),
            "group_dual:<bundled group | Z | Z^r>".into(),
            "char_table:<bundled group | JSON file>".into(),
        ],
        bundled_groups: builtin_group_names(),
        bundled_restrictions: bundled_restriction_names()?,
        oracle_groups: corpus::oracle_group_names()
            .into_iter()
            .map(String::from)
            .collect(),
    };
    if json {
        print_json(&out)
    } else {
        println!("model kinds:");
        for m in &out.model_kinds {
            println!("  {m}");
        }
        println!("bundled groups: {}", out.bundled_groups.join(" "));
        println!("oracle groups (full subgroup lattices): {}", out.oracle_groups.join(" "));
        println!("bundled restrictions:");
        for r in &out.bundled_restrictions {
            println!("  {r}");
        }
        Ok(())
    }
}

fn dump_corpus(dir: &Path) -> Result<()> {
    std::fs::create_dir_all(dir.join("tables"))?;
    std::fs::create_dir_all(dir.join("embeddings"))?;
    for name in builtin_group_names() {
        let table = qfusion::io::builtin_char_table(&name).ok_or_else(|| {
            FusionError::InvalidModel(format!("no character table for `{name}`"))
        })?;
        let json = CharTableJson::from_model(&table);
        std::fs::write(
            dir.join("tables").join(format!("{name}.json")),
            serde_json::to_string_pretty(&json)? + "\n",
        )?;
    }
    for case in corpus::embedding_corpus()? {
        std::fs::write(
            dir.join("tables").join(format!("{}.json", case.name)),
            serde_json::to_string_pretty(&case.subgroup_table)? + "\n",
        )?;
        std::fs::write(
            dir.join("embeddings").join(format!("{}.json", case.name)),
            serde_json::to_string_pretty(&case.embedding)? + "\n",
        )?;
    }
    std::fs::create_dir_all(dir.join("restrictions"))?;
    for (name, restriction, depth) in corpus::restriction_file_corpus()? {
        let json = RestrictionJson::from_restriction(&restriction, depth)?;
        std::fs::write(
            dir.join("restrictions").join(format!("{name}.json")),
            serde_json::to_string_pretty(&json)? + "\n",
        )?;
    }
    Ok(())
}

#[derive(Serialize)]
struct CheckOut {
    name: String,
    ok: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    detail: Option<String>,
}

#[derive(Serialize)]
struct SelftestOut {
    checks: Vec<CheckOut>,
    ok: bool,
}

fn cmd_selftest(json: bool) -> Result<()> {
    let mut checks: Vec<CheckOut> = Vec::new();
    let mut push = |name: &str, result: std::result::Result<(), String>| {
        checks.push(CheckOut {
            name: name.to_string(),
            ok: result.is_ok(),
            detail: result.err(),
        });
    };

    for spec_text in [
        "su2type:2",
        "su2type:3",
        "so3type:4",
        "so3type:5",
        "free_unitary:2",
        "free_unitary:3",
        "group_dual:Z6",
        "group_dual:S3",
        "char_table:S4",
    ] {
        let result = (|| -> Result<Vec<String>> {
            let model = ModelSpec::parse(spec_text)?.build()?;
            verify_model(model.as_ref(), 5)
        })();
        push(
            &format!("model axioms: {spec_text}"),
            match result {
                Ok(v) if v.is_empty() => Ok(()),
                Ok(v) => Err(v.join("; ")),
                Err(e) => Err(e.to_string()),
            },
        );
    }

    let oracle = (|| -> Result<(usize, usize)> {
        let cases = corpus::embedding_corpus()?;
        let total = cases.len();
        let mut agree = 0;
        for case in &cases {
            let verification = verify_restriction(&case.restriction, 4)?;
            if !verification.ok() {
                return Err(FusionError::InconsistentRestriction(format!(
                    "{}: {}",
                    case.name,
                    verification.violations.join("; ")
                )));
            }
            let report = is_normal(&case.restriction, 6)?;
            if (report.verdict == NormalityVerdict::Normal) == case.classical_normal {
                agree += 1;
            }
        }
        Ok((agree, total))
    })();
    push(
        "embedding corpus: restriction checks and oracle agreement",
        match oracle {
            Ok((agree, total)) if agree == total && total >= 20 => Ok(()),
            Ok((agree, total)) => Err(format!("{agree}/{total} agree")),
            Err(e) => Err(e.to_string()),
        },
    );

    let surjections = (|| -> Result<()> {
        for case in corpus::finite_surjection_corpus()? {
            let report = is_normal(&case.restriction, 6)?;
            if report.verdict != NormalityVerdict::Normal {
                return Err(FusionError::InconsistentRestriction(format!(
                    "surjection {} not recognized as normal",
                    case.name
                )));
            }
            let kept: BTreeSet<_> = report.s_of_n.into_iter().collect();
            let expected: Result<BTreeSet<_>> = case
                .kernel
                .iter()
                .map(|&i| case.restriction.source.parse_label(&format!("g{i}")))
                .collect();
            if kept != expected? {
                return Err(FusionError::InconsistentRestriction(format!(
                    "surjection {}: kept set differs from the kernel",
                    case.name
                )));
            }
        }
        Ok(())
    })();
    push(
        "surjection corpus: normality and kernels",
        surjections.map_err(|e| e.to_string()),
    );

    let builtins = (|| -> Result<()> {
        for n in [2u64, 3, 4] {
            let r = bu_sign_subgroup(n)?;
            if is_normal(&r, 6)?.verdict != NormalityVerdict::Normal {
                return Err(FusionError::InconsistentRestriction(format!("bu-sign:{n}")));
            }
            let r = bu_nonnormal_subgroup(n)?;
            if is_normal(&r, 6)?.verdict != NormalityVerdict::NotNormal {
                return Err(FusionError::InconsistentRestriction(format!("bu-H:{n}")));
            }
            let r = au_central_torus(n)?;
            if !is_central(&r, 5)?.central {
                return Err(FusionError::InconsistentRestriction(format!("au-torus:{n}")));
            }
        }
        Ok(())
    })();
    push(
        "built-in restrictions: bu-sign normal, bu-H not normal, au-torus central",
        builtins.map_err(|e| e.to_string()),
    );

    let corpus_dir = std::env::var("QFUSION_CORPUS")
        .map(PathBuf::from)
        .unwrap_or_else(|_| PathBuf::from("data"));
    if corpus_dir.is_dir() {
        let files = (|| -> Result<usize> {
            let mut count = 0;
            let tables_dir = corpus_dir.join("tables");
            if tables_dir.is_dir() {
                for entry in std::fs::read_dir(&tables_dir)? {
                    let path = entry?.path();
                    if path.extension().and_then(|e| e.to_str()) == Some("json") {
                        let text = std::fs::read_to_string(&path)?;
                        let table: CharTableJson = serde_json::from_str(&text)?;
                        table.to_model()?;
                        count += 1;
                    }
                }
            }
            let emb_dir = corpus_dir.join("embeddings");
            if emb_dir.is_dir() {
                for entry in std::fs::read_dir(&emb_dir)? {
                    let path = entry?.path();
                    if path.extension().and_then(|e| e.to_str()) == Some("json") {
                        let text = std::fs::read_to_string(&path)?;
                        let embedding: EmbeddingJson = serde_json::from_str(&text)?;
                        let table_path = tables_dir.join(format!("{}.json", embedding.subgroup));
                        let table: CharTableJson =
                            serde_json::from_str(&std::fs::read_to_string(table_path)?)?;
                        embedding.validate_against(&table.to_model()?)?;
                        count += 1;
                    }
                }
            }
            let restr_dir = corpus_dir.join("restrictions");
            if restr_dir.is_dir() {
                for entry in std::fs::read_dir(&restr_dir)? {
                    let path = entry?.path();
                    if path.extension().and_then(|e| e.to_str()) == Some("json") {
                        let text = std::fs::read_to_string(&path)?;
                        let parsed: RestrictionJson = serde_json::from_str(&text)?;
                        let stem = path
                            .file_stem()
                            .and_then(|s| s.to_str())
                            .unwrap_or("restriction");
                        let r = parsed.to_restriction(stem)?;
                        let report = verify_restriction(&r, 4)?;
                        if !report.ok() {
                            return Err(FusionError::InconsistentRestriction(format!(
                                "{stem}: {}",
                                report.violations.join("; ")
                            )));
                        }
                        count += 1;
                    }
                }
            }
            Ok(count)
        })();
        push(
            &format!("corpus files under {}", corpus_dir.display()),
            match files {
                Ok(n) if n > 0 => Ok(()),
                Ok(_) => Err("no corpus files found".into()),
                Err(e) => Err(e.to_string()),
            },
        );
    }

    let ok = checks.iter().all(|c| c.ok);
    if json {
        print_json(&SelftestOut { checks, ok })?;
    } else {
        for c in &checks {
            println!(
                "[{}] {}{}",
                if c.ok { "pass" } else { "FAIL" },
                c.name,
                c.detail.as_ref().map(|d| format!(": {d}")).unwrap_or_default()
            );
        }
        println!("selftest: {}", if ok { "all checks passed" } else { "FAILURES" });
    }
    if ok {
        Ok(())
    } else {
        Err(FusionError::InconsistentRestriction(
            "selftest found failures".into(),
        ))
    }
}
