//! Connectedness tests, one-dimensional-irrep detection, subring-lattice
//! enumeration, and the aggregated simplicity report.
//!
//! All verdicts here are depth-bounded evidence. A `SimpleEvidence` verdict
//! never claims a proof; it records that every sampled nontrivial label
//! generates an unboundedly growing closure, that no nontrivial
//! one-dimensional labels were found, and that every exhibited normal
//! subgroup is finite.

use std::collections::BTreeSet;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Result;
use crate::label::Label;
use crate::model::{closure, Budget, ClosureResult, FusionModel};
use crate::subgroup::{is_central, is_normal, NormalityReport, NormalityVerdict, RestrictionData};

/// Growth classification of one label's fusion closure.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Growth {
    /// Closure kept producing new labels at every step until the budget.
    InfiniteGrowth,
    /// Closure saturated at the given size.
    FiniteOfSize(usize),
    /// Budget ran out before any growth trend was visible.
    BudgetExhausted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Connectedness {
    Connected,
    Disconnected,
    Undecided,
}

/// Per-label closure growth and the aggregate connectedness verdict.
#[derive(Clone, Debug)]
pub struct ConnectednessReport {
    pub per_label: Vec<(Label, Growth)>,
    pub verdict: Connectedness,
    pub depth: u32,
}

/// Classifies the closure growth of every nontrivial label in the depth
/// window. A closure that saturates is finite; one that added labels at
/// every completed step is classified as unbounded growth.
pub fn is_connected(
    model: &dyn FusionModel,
    depth: u32,
    budget: Budget,
) -> Result<ConnectednessReport> {
    let unit = model.unit();
    let mut per_label = Vec::new();
    for x in model.enumerate(depth) {
        if x == unit {
            continue;
        }
        let res = closure(model, &[x.clone()], budget)?;
        let growth = classify_growth(&res);
        per_label.push((x, growth));
    }

    let verdict = if per_label
        .iter()
        .any(|(_, g)| matches!(g, Growth::FiniteOfSize(_)))
    {
        Connectedness::Disconnected
    } else if !per_label.is_empty()
        && per_label
            .iter()
            .all(|(_, g)| *g == Growth::InfiniteGrowth)
    {
        Connectedness::Connected
    } else if per_label.is_empty() {
        // only the unit exists in the window; the trivial group is connected
        Connectedness::Connected
    } else {
        Connectedness::Undecided
    };

    Ok(ConnectednessReport {
        per_label,
        verdict,
        depth,
    })
}

fn classify_growth(res: &ClosureResult) -> Growth {
    if res.saturated {
        Growth::FiniteOfSize(res.len())
    } else if res.steps_used >= 2 {
        // every completed step added labels, or the closure would have
        // saturated earlier
        Growth::InfiniteGrowth
    } else {
        Growth::BudgetExhausted
    }
}

/// Nontrivial labels of dimension one within the depth window.
pub fn one_dim_labels(model: &dyn FusionModel, depth: u32) -> Result<Vec<Label>> {
    let unit = model.unit();
    let mut out = Vec::new();
    for x in model.enumerate(depth) {
        if x != unit && model.dim(&x)? == BigUint::one() {
            out.push(x);
        }
    }
    Ok(out)
}

/// One closed subring, compared by its trace within the depth window.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClosedSet {
    /// Labels of the closure that lie inside the depth window.
    pub window_labels: BTreeSet<Label>,
    /// Whole closure as computed (may extend past the window).
    pub closure: ClosureResult,
}

/// The lattice of fusion-closed, dual-closed label sets found within a depth
/// window.
#[derive(Clone, Debug)]
pub struct SubringLattice {
    /// Deduplicated closed sets, sorted by (window size, labels).
    pub closed_sets: Vec<ClosedSet>,
    pub complete_up_to_depth: u32,
    /// True when some closure hit its budget, so the lattice may be
    /// truncated.
    pub budget_hit: bool,
}

/// Enumerates closed subrings: closures of all singletons in the window,
/// then closures of unions of previously found sets, to a fixpoint,
/// deduplicated by their trace on the window.
pub fn enumerate_subrings(
    model: &dyn FusionModel,
    depth: u32,
    budget: Budget,
) -> Result<SubringLattice> {
    let window: BTreeSet<Label> = model.enumerate(depth).into_iter().collect();
    let trace = |res: &ClosureResult| -> BTreeSet<Label> {
        res.labels.intersection(&window).cloned().collect()
    };

    let mut budget_hit = false;
    let mut sets: Vec<ClosedSet> = Vec::new();
    let mut seen: BTreeSet<Vec<Label>> = BTreeSet::new();

    let push = |res: ClosureResult,
                    sets: &mut Vec<ClosedSet>,
                    seen: &mut BTreeSet<Vec<Label>>,
                    budget_hit: &mut bool| {
        if !res.saturated {
            *budget_hit |= res.steps_used >= res.budget.max_steps
                || res.len() > res.budget.max_labels;
        }
        let tr = trace(&res);
        let key: Vec<Label> = tr.iter().cloned().collect();
        if seen.insert(key) {
            sets.push(ClosedSet {
                window_labels: tr,
                closure: res,
            });
        }
    };

    push(
        closure(model, &[], budget)?,
        &mut sets,
        &mut seen,
        &mut budget_hit,
    );
    for x in &window {
        let res = closure(model, std::slice::from_ref(x), budget)?;
        push(res, &mut sets, &mut seen, &mut budget_hit);
    }

    // close under unions of found sets
    loop {
        let snapshot: Vec<Vec<Label>> = sets
            .iter()
            .map(|s| s.window_labels.iter().cloned().collect())
            .collect();
        let before = sets.len();
        for i in 0..snapshot.len() {
            for j in (i + 1)..snapshot.len() {
                let mut seeds: Vec<Label> = snapshot[i].clone();
                seeds.extend(snapshot[j].iter().cloned());
                let res = closure(model, &seeds, budget)?;
                push(res, &mut sets, &mut seen, &mut budget_hit);
            }
        }
        if sets.len() == before {
            break;
        }
    }

    sets.sort_by_key(|s| {
        (
            s.window_labels.len(),
            s.window_labels.iter().cloned().collect::<Vec<_>>(),
        )
    });
    Ok(SubringLattice {
        closed_sets: sets,
        complete_up_to_depth: depth,
        budget_hit,
    })
}

/// Aggregate verdict over the evidence gathered for one model.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SimplicityVerdict {
    SimpleEvidence,
    NotSimple(String),
    Undecided,
}

/// One registered subgroup and what the analyses said about it.
pub struct NormalFinding {
    pub name: String,
    pub report: NormalityReport,
    pub central: bool,
    /// Whether the subgroup itself (the target) is a connected quantum
    /// group; a finite target is disconnected and never blocks simplicity.
    pub target_connected: Connectedness,
    /// Number of target labels when finite.
    pub target_order: Option<usize>,
    /// True when the finding is one of the trivial subgroups (N = {e} with
    /// every label kept, or N = G with only the unit kept).
    pub trivial: bool,
}

/// Aggregated simplicity evidence for one model.
pub struct SimplicityReport {
    pub connected: ConnectednessReport,
    pub one_dim_labels: Vec<Label>,
    pub subrings: SubringLattice,
    pub normal_findings: Vec<NormalFinding>,
    pub verdict: SimplicityVerdict,
    /// Free-form annotations: absolutely-simple and property-F evidence.
    pub notes: Vec<String>,
    pub depth: u32,
}

/// Runs every analysis and aggregates the verdict.
///
/// The verdict is `NotSimple` when a nontrivial connected normal subgroup is
/// exhibited or a nontrivial one-dimensional label exists; `SimpleEvidence`
/// when the model is connected, has no one-dimensional labels, and every
/// exhibited normal subgroup is finite.
pub fn simplicity_report(
    model: Arc<dyn FusionModel>,
    restrictions: &[RestrictionData],
    depth: u32,
) -> Result<SimplicityReport> {
    let budget = Budget::default();
    let connected = is_connected(model.as_ref(), depth, budget)?;
    let one_dim = one_dim_labels(model.as_ref(), depth)?;
    let subrings = enumerate_subrings(model.as_ref(), depth, budget)?;

    let mut findings = Vec::new();
    for r in restrictions {
        let report = is_normal(r, depth)?;
        let centrality = is_central(r, depth)?;
        let target_connected = is_connected(r.target.as_ref(), depth, budget)?.verdict;
        let window = model.enumerate(depth);
        let kept_all = report.s_of_n.len() == window.len();
        let kept_only_unit = report.s_of_n.len() <= 1;
        let trivial = match report.verdict {
            NormalityVerdict::NotNormal => false,
            _ => kept_all || (kept_only_unit && r.target.tag() == model.tag()),
        };
        findings.push(NormalFinding {
            name: r.name.clone(),
            report,
            central: centrality.central,
            target_connected,
            target_order: r.target.label_count(),
            trivial,
        });
    }

    let mut verdict = SimplicityVerdict::Undecided;
    let mut notes = Vec::new();

    if !one_dim.is_empty() {
        verdict = SimplicityVerdict::NotSimple(format!(
            "nontrivial one-dimensional irreducibles exist (e.g. {})",
            model.format_label(&one_dim[0])?
        ));
    } else if let Some(f) = findings.iter().find(|f| {
        !f.trivial
            && f.report.verdict == NormalityVerdict::Normal
            && f.target_connected == Connectedness::Connected
    }) {
        verdict = SimplicityVerdict::NotSimple(format!(
            "nontrivial connected normal subgroup exhibited: {}",
            f.name
        ));
    } else if connected.verdict == Connectedness::Connected {
        let all_exhibited_finite = findings.iter().all(|f| {
            f.trivial
                || f.report.verdict == NormalityVerdict::NotNormal
                || f.target_connected == Connectedness::Disconnected
        });
        if all_exhibited_finite {
            verdict = SimplicityVerdict::SimpleEvidence;
        }
    }

    if verdict == SimplicityVerdict::SimpleEvidence {
        let nontrivial_normal: Vec<&NormalFinding> = findings
            .iter()
            .filter(|f| !f.trivial && f.report.verdict == NormalityVerdict::Normal)
            .collect();
        // only the two trivial subrings: no proper closed subring to house a
        // normal subgroup at all
        if nontrivial_normal.is_empty() && subrings.closed_sets.len() <= 2 {
            notes.push("absolutely-simple evidence: no nontrivial normal findings and no nontrivial closed subrings".into());
        }
        // property F evidence: every proper nontrivial closed subring is the
        // quotient label set of an exhibited normal subgroup
        let window_all: BTreeSet<Label> = model.enumerate(depth).into_iter().collect();
        let proper: Vec<&ClosedSet> = subrings
            .closed_sets
            .iter()
            .filter(|s| s.window_labels.len() > 1 && s.window_labels != window_all)
            .collect();
        let all_matched = proper.iter().all(|s| {
            findings.iter().any(|f| {
                f.report.verdict == NormalityVerdict::Normal
                    && f.report.s_of_n.iter().cloned().collect::<BTreeSet<_>>()
                        == s.window_labels
            })
        });
        if all_matched && !proper.is_empty() {
            notes.push(
                "property-F evidence: every nontrivial proper closed subring is the quotient of an exhibited normal subgroup".into(),
            );
        }
    }

    Ok(SimplicityReport {
        connected,
        one_dim_labels: one_dim,
        subrings,
        normal_findings: findings,
        verdict,
        notes,
        depth,
    })
}
