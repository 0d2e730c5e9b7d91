//! Quantum subgroups as multiplicity-level restriction data, with the
//! normality, centrality, quotient and same-imbedding procedures.
//!
//! A subgroup (N, π) of G is stored only through the induced map
//! Irr(G) → formal sums over Irr(N). Normality is decided by the
//! multiplicity criterion: every irreducible of G must restrict with
//! trivial-isotypic multiplicity either 0 or its full dimension. Subgroups of
//! infinite models checked to finite depth yield `Undecided` unless the rule
//! is one of the built-ins whose unbounded statement is proof-backed.

use std::collections::BTreeMap;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{FusionError, Result};
use crate::finite_group::FiniteGroup;
use crate::label::Label;
use crate::model::{dim_of_sum, tensor_sum, FusionModel};
use crate::models::{
    chartable_restriction_matrix, CharTableModel, FreeUnitaryModel, GroupDualModel, Su2TypeModel,
};
use crate::sum::FormalSum;

type RestrictRule = Box<dyn Fn(&Label) -> Result<FormalSum> + Send + Sync>;

enum RestrictMap {
    Table(BTreeMap<Label, FormalSum>),
    Rule(RestrictRule),
}

/// A quantum subgroup (N, π) of G presented at multiplicity level.
pub struct RestrictionData {
    pub name: String,
    pub source: Arc<dyn FusionModel>,
    pub target: Arc<dyn FusionModel>,
    map: RestrictMap,
    /// True when the normality status of this restriction holds at all
    /// depths by a structural argument, not only to the checked depth.
    pub proof_backed: bool,
}

impl RestrictionData {
    pub fn from_table(
        name: &str,
        source: Arc<dyn FusionModel>,
        target: Arc<dyn FusionModel>,
        table: BTreeMap<Label, FormalSum>,
    ) -> RestrictionData {
        RestrictionData {
            name: name.to_string(),
            source,
            target,
            map: RestrictMap::Table(table),
            proof_backed: false,
        }
    }

    pub fn from_rule(
        name: &str,
        source: Arc<dyn FusionModel>,
        target: Arc<dyn FusionModel>,
        rule: RestrictRule,
        proof_backed: bool,
    ) -> RestrictionData {
        RestrictionData {
            name: name.to_string(),
            source,
            target,
            map: RestrictMap::Rule(rule),
            proof_backed,
        }
    }

    /// The restriction of one irreducible of the source.
    pub fn restrict(&self, x: &Label) -> Result<FormalSum> {
        self.source.check(x)?;
        match &self.map {
            RestrictMap::Table(t) => t
                .get(x)
                .cloned()
                .ok_or_else(|| FusionError::MissingRestriction(
                    self.source.format_label(x).unwrap_or_else(|_| format!("{x:?}")),
                )),
            RestrictMap::Rule(r) => r(x),
        }
    }

    /// Term-wise extension to formal sums over the source.
    pub fn restrict_sum(&self, a: &FormalSum) -> Result<FormalSum> {
        let mut out = FormalSum::new();
        for (x, m) in a.iter() {
            out.add(&self.restrict(x)?.scaled(m));
        }
        Ok(out)
    }

    /// Multiplicity of the trivial representation of N in restrict(x).
    pub fn trivial_part(&self, x: &Label) -> Result<BigUint> {
        Ok(self.restrict(x)?.multiplicity(&self.target.unit()))
    }

    /// Whether x lies in S(N): full trivial multiplicity.
    pub fn is_kept(&self, x: &Label) -> Result<bool> {
        Ok(self.trivial_part(x)? == self.source.dim(x)?)
    }
}

/// Outcome of checking the restriction-data well-formedness invariants.
#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub depth: u32,
    pub labels_checked: usize,
    pub pairs_checked: usize,
    pub violations: Vec<String>,
}

impl VerificationReport {
    pub fn ok(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks unit preservation, dimension preservation and ring-morphism
/// consistency of a restriction on all labels and pairs up to `depth`.
pub fn verify_restriction(r: &RestrictionData, depth: u32) -> Result<VerificationReport> {
    let mut violations = Vec::new();
    let window = r.source.enumerate(depth);

    let unit_image = r.restrict(&r.source.unit())?;
    if unit_image != FormalSum::singleton(r.target.unit()) {
        violations.push("restrict(unit) != unit".to_string());
    }

    for x in &window {
        let rx = r.restrict(x)?;
        let d_target = dim_of_sum(r.target.as_ref(), &rx)?;
        let d_source = r.source.dim(x)?;
        if d_target != d_source {
            violations.push(format!(
                "dimension not preserved at {}: {} vs {}",
                r.source.format_label(x)?,
                d_target,
                d_source
            ));
        }
    }

    let mut pairs = 0;
    for x in &window {
        let rx = r.restrict(x)?;
        for y in &window {
            pairs += 1;
            let ry = r.restrict(y)?;
            let lhs = r.restrict_sum(&r.source.tensor(x, y)?)?;
            let rhs = tensor_sum(r.target.as_ref(), &rx, &ry)?;
            if lhs != rhs {
                violations.push(format!(
                    "ring-morphism consistency fails at ({}, {})",
                    r.source.format_label(x)?,
                    r.source.format_label(y)?
                ));
            }
        }
    }

    Ok(VerificationReport {
        depth,
        labels_checked: window.len(),
        pairs_checked: pairs,
        violations,
    })
}

/// Verdict of the normality criterion.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NormalityVerdict {
    Normal,
    NotNormal,
    Undecided,
}

/// Report of the multiplicity-level normality test.
#[derive(Clone, Debug)]
pub struct NormalityReport {
    pub verdict: NormalityVerdict,
    pub depth_checked: u32,
    /// First label (canonical order) whose trivial multiplicity is neither 0
    /// nor its dimension; present iff the verdict is `NotNormal`.
    pub witness: Option<Label>,
    /// The violating multiplicity and the dimension at the witness.
    pub witness_multiplicity: Option<(BigUint, BigUint)>,
    /// Sample of S(N): labels with full trivial multiplicity, up to depth.
    pub s_of_n: Vec<Label>,
    /// True when the verdict holds at all depths by a structural argument
    /// (finite source fully enumerated, or a proof-backed built-in rule).
    pub proof_backed: bool,
}

/// Decides normality by the trivial-multiplicity criterion over all labels
/// up to `depth`.
pub fn is_normal(r: &RestrictionData, depth: u32) -> Result<NormalityReport> {
    let window = r.source.enumerate(depth);
    let mut s_of_n = Vec::new();
    let mut witness = None;
    let mut witness_multiplicity = None;

    for x in &window {
        let triv = r.trivial_part(x)?;
        let dim = r.source.dim(x)?;
        if triv == dim {
            s_of_n.push(x.clone());
        } else if !triv.is_zero() && witness.is_none() {
            witness_multiplicity = Some((triv, dim));
            witness = Some(x.clone());
        }
    }

    let source_is_finite = r
        .source
        .label_count()
        .map(|count| window.len() >= count)
        .unwrap_or(false);

    let (verdict, proof_backed) = if witness.is_some() {
        (NormalityVerdict::NotNormal, true)
    } else if source_is_finite {
        (NormalityVerdict::Normal, true)
    } else if r.proof_backed {
        (NormalityVerdict::Normal, true)
    } else {
        (NormalityVerdict::Undecided, false)
    };

    Ok(NormalityReport {
        verdict,
        depth_checked: depth,
        witness,
        witness_multiplicity,
        s_of_n,
        proof_backed,
    })
}

/// Report of the centrality test.
#[derive(Clone, Debug)]
pub struct CentralityReport {
    pub central: bool,
    pub depth_checked: u32,
    /// Explanation when not central.
    pub reason: Option<String>,
    /// The normality report implied by centrality (present when central).
    pub normality: Option<NormalityReport>,
}

/// Tests whether the subgroup lies in the center: the target must have only
/// one-dimensional irreducibles and every source irreducible must restrict
/// to dim-many copies of a single character. Central subgroups are always
/// normal; the implied normality report is attached.
pub fn is_central(r: &RestrictionData, depth: u32) -> Result<CentralityReport> {
    let target_window = r.target.enumerate(depth);
    for t in &target_window {
        if r.target.dim(t)? != BigUint::one() {
            return Ok(CentralityReport {
                central: false,
                depth_checked: depth,
                reason: Some(format!(
                    "target irreducible {} has dimension > 1",
                    r.target.format_label(t)?
                )),
                normality: None,
            });
        }
    }

    for x in &r.source.enumerate(depth) {
        let rx = r.restrict(x)?;
        let dim = r.source.dim(x)?;
        let single = rx.support_len() == 1
            && rx.iter().next().map(|(_, m)| m.clone()) == Some(dim.clone());
        if !single {
            return Ok(CentralityReport {
                central: false,
                depth_checked: depth,
                reason: Some(format!(
                    "restriction of {} mixes characters",
                    r.source.format_label(x)?
                )),
                normality: None,
            });
        }
    }

    let normality = is_normal(r, depth)?;
    debug_assert_ne!(normality.verdict, NormalityVerdict::NotNormal);
    Ok(CentralityReport {
        central: true,
        depth_checked: depth,
        reason: None,
        normality: Some(normality),
    })
}

/// The quotient label set S(N) of a normal subgroup, kept as a predicate on
/// the base model together with its depth window.
pub struct QuotientModel {
    pub base: Arc<dyn FusionModel>,
    restriction: RestrictionData,
    pub depth: u32,
    /// Kept labels within the depth window, in canonical order.
    pub kept_labels: Vec<Label>,
}

impl QuotientModel {
    pub fn kept(&self, x: &Label) -> Result<bool> {
        self.restriction.is_kept(x)
    }
}

/// Builds the quotient of a (depth-)normal restriction; fails naming the
/// witness when the data is not normal.
pub fn quotient(r: RestrictionData, depth: u32) -> Result<QuotientModel> {
    let report = is_normal(&r, depth)?;
    if report.verdict == NormalityVerdict::NotNormal {
        let witness = report.witness.expect("witness accompanies NotNormal");
        return Err(FusionError::NotNormal {
            witness: r.source.format_label(&witness)?,
        });
    }
    let base = Arc::clone(&r.source);

    // closure check: kept labels must contain the unit, be dual-closed, and
    // keep every tensor term of kept pairs that lies in the window
    let kept = report.s_of_n.clone();
    if !kept.contains(&base.unit()) {
        return Err(FusionError::InconsistentRestriction(
            "quotient label set misses the unit".into(),
        ));
    }
    for x in &kept {
        if !r.is_kept(&base.dual(x)?)? {
            return Err(FusionError::InconsistentRestriction(format!(
                "quotient label set not dual-closed at {}",
                base.format_label(x)?
            )));
        }
        for y in &kept {
            for (w, _) in base.tensor(x, y)?.iter() {
                if !r.is_kept(w)? {
                    return Err(FusionError::InconsistentRestriction(format!(
                        "quotient label set not fusion-closed: {} (x) {} contains {}",
                        base.format_label(x)?,
                        base.format_label(y)?,
                        base.format_label(w)?
                    )));
                }
            }
        }
    }

    Ok(QuotientModel {
        base,
        restriction: r,
        depth,
        kept_labels: kept,
    })
}

/// Decides whether two restrictions of the same source define the same
/// imbedded subgroup: an exhaustive search for a bijection of target labels
/// preserving unit, dual, dimension and fusion that carries one restriction
/// to the other on all source labels up to `depth`.
pub fn same_imbedding(r1: &RestrictionData, r2: &RestrictionData, depth: u32) -> Result<bool> {
    if r1.source.tag() != r2.source.tag() {
        return Err(FusionError::Unsupported(
            "same-imbedding requires a common source model".into(),
        ));
    }
    let (count1, count2) = match (r1.target.label_count(), r2.target.label_count()) {
        (Some(a), Some(b)) => (a, b),
        _ => {
            return Err(FusionError::Unsupported(
                "same-imbedding requires finite targets".into(),
            ))
        }
    };
    if count1 != count2 {
        return Ok(false);
    }

    let t1: Vec<Label> = r1.target.enumerate(depth);
    let t2: Vec<Label> = r2.target.enumerate(depth);
    debug_assert_eq!(t1.len(), count1);

    // candidate images, constrained by dimension and unit
    let mut candidates: Vec<Vec<usize>> = Vec::with_capacity(t1.len());
    for x in &t1 {
        let dx = r1.target.dim(x)?;
        let is_unit = *x == r1.target.unit();
        let mut c = Vec::new();
        for (j, y) in t2.iter().enumerate() {
            if r2.target.dim(y)? == dx && is_unit == (*y == r2.target.unit()) {
                c.push(j);
            }
        }
        if c.is_empty() {
            return Ok(false);
        }
        candidates.push(c);
    }

    let source_window = r1.source.enumerate(depth);
    let mut assignment: Vec<Option<usize>> = vec![None; t1.len()];
    let mut used = vec![false; t2.len()];

    fn assignment_valid(
        r1: &RestrictionData,
        r2: &RestrictionData,
        t1: &[Label],
        t2: &[Label],
        assignment: &[Option<usize>],
        source_window: &[Label],
    ) -> Result<bool> {
        let map = |l: &Label| -> Option<Label> {
            let i = t1.iter().position(|x| x == l)?;
            assignment[i].map(|j| t2[j].clone())
        };
        // dual compatibility and fusion compatibility on assigned labels
        for (i, slot) in assignment.iter().enumerate() {
            let Some(j) = slot else { continue };
            let d1 = r1.target.dual(&t1[i])?;
            if let Some(d2) = map(&d1) {
                if d2 != r2.target.dual(&t2[*j])? {
                    return Ok(false);
                }
            }
        }
        for (i, si) in assignment.iter().enumerate() {
            let Some(ji) = si else { continue };
            for (k, sk) in assignment.iter().enumerate() {
                let Some(jk) = sk else { continue };
                let prod1 = r1.target.tensor(&t1[i], &t1[k])?;
                let prod2 = r2.target.tensor(&t2[*ji], &t2[*jk])?;
                for (w, m) in prod1.iter() {
                    if let Some(w2) = map(w) {
                        if prod2.multiplicity(&w2) != *m {
                            return Ok(false);
                        }
                    }
                }
            }
        }
        // restriction compatibility once fully assigned
        if assignment.iter().all(|s| s.is_some()) {
            for x in source_window {
                let rx1 = r1.restrict(x)?;
                let rx2 = r2.restrict(x)?;
                let mut mapped = FormalSum::new();
                for (l, m) in rx1.iter() {
                    match map(l) {
                        Some(l2) => mapped.add_term(l2, m.clone()),
                        None => return Ok(false),
                    }
                }
                if mapped != rx2 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    fn search(
        r1: &RestrictionData,
        r2: &RestrictionData,
        t1: &[Label],
        t2: &[Label],
        candidates: &[Vec<usize>],
        assignment: &mut Vec<Option<usize>>,
        used: &mut Vec<bool>,
        source_window: &[Label],
        pos: usize,
    ) -> Result<bool> {
        if pos == t1.len() {
            return assignment_valid(r1, r2, t1, t2, assignment, source_window);
        }
        for &j in &candidates[pos] {
            if used[j] {
                continue;
            }
            assignment[pos] = Some(j);
            used[j] = true;
            let viable = assignment_valid(r1, r2, t1, t2, assignment, source_window)?
                && search(
                    r1,
                    r2,
                    t1,
                    t2,
                    candidates,
                    assignment,
                    used,
                    source_window,
                    pos + 1,
                )?;
            assignment[pos] = None;
            used[j] = false;
            if viable {
                return Ok(true);
            }
        }
        Ok(false)
    }

    search(
        r1,
        r2,
        &t1,
        &t2,
        &candidates,
        &mut assignment,
        &mut used,
        &source_window,
        0,
    )
}

// ---------------------------------------------------------------------------
// Group-dual surjections
// ---------------------------------------------------------------------------

/// A surjective homomorphism of discrete groups presented at element level.
pub enum DualSurjection {
    /// Full element map between finite multiplication-table groups.
    Finite { map: Vec<usize> },
    /// Images of the canonical generators of an abelian source; entry `i` is
    /// the image of the `i`-th generator (free generators first, then
    /// torsion generators).
    Abelian { generator_images: Vec<Label> },
}

/// Builds restriction data for a quotient of group duals: restrict(γ) is the
/// singleton at the image π(γ). Always yields a normal subgroup whose
/// quotient kept-set is the kernel of π.
pub fn group_dual_subgroup(
    name: &str,
    source: Arc<GroupDualModel>,
    target: Arc<GroupDualModel>,
    surjection: DualSurjection,
) -> Result<RestrictionData> {
    match surjection {
        DualSurjection::Finite { map } => {
            let src = source.group().ok_or_else(|| {
                FusionError::Unsupported("finite surjection from a non-table source".into())
            })?;
            let tgt = target.group().ok_or_else(|| {
                FusionError::Unsupported("finite surjection onto a non-table target".into())
            })?;
            if map.len() != src.order() {
                return Err(FusionError::NotHomomorphism(format!(
                    "map covers {} of {} elements",
                    map.len(),
                    src.order()
                )));
            }
            if map.iter().any(|&i| i >= tgt.order()) {
                return Err(FusionError::NotHomomorphism("image out of range".into()));
            }
            for a in 0..src.order() {
                for b in 0..src.order() {
                    if map[src.mul(a, b)] != tgt.mul(map[a], map[b]) {
                        return Err(FusionError::NotHomomorphism(format!(
                            "π({a}·{b}) != π({a})·π({b})"
                        )));
                    }
                }
            }
            let mut hit = vec![false; tgt.order()];
            for &i in &map {
                hit[i] = true;
            }
            if hit.iter().any(|h| !h) {
                return Err(FusionError::NotHomomorphism(
                    "map is not surjective".into(),
                ));
            }

            let src_model = Arc::clone(&source);
            let tgt_model = Arc::clone(&target);
            let rule: RestrictRule = Box::new(move |x: &Label| {
                let i = x.as_elem().ok_or_else(|| FusionError::InvalidLabel {
                    label: format!("{:?}", x.payload()),
                    model: src_model.tag().to_string(),
                    reason: "expected an element index".into(),
                })?;
                Ok(FormalSum::singleton(tgt_model.element_label(map[i])?))
            });
            Ok(RestrictionData::from_rule(
                name,
                source,
                target,
                rule,
                true,
            ))
        }
        DualSurjection::Abelian { generator_images } => {
            let spec = source
                .abelian_spec()
                .ok_or_else(|| {
                    FusionError::Unsupported("abelian surjection from a table source".into())
                })?
                .clone();
            let components = spec.rank + spec.torsion.len();
            if generator_images.len() != components {
                return Err(FusionError::NotHomomorphism(format!(
                    "expected {} generator images, got {}",
                    components,
                    generator_images.len()
                )));
            }
            for img in &generator_images {
                target.check(img)?;
            }
            // torsion relations: m_i · image = unit
            for (i, &m) in spec.torsion.iter().enumerate() {
                let img = &generator_images[spec.rank + i];
                let mut acc = target.unit();
                for _ in 0..m {
                    let prod = target.tensor(&acc, img)?;
                    acc = prod.labels().next().expect("group law").clone();
                }
                if acc != target.unit() {
                    return Err(FusionError::NotHomomorphism(format!(
                        "torsion relation {m}·g_{} ≠ 0 is violated by the image",
                        spec.rank + i
                    )));
                }
            }
            // surjectivity onto finite targets, by generated-subgroup closure
            if let Some(order) = target.label_count() {
                let mut seen = std::collections::BTreeSet::new();
                seen.insert(target.unit());
                let mut frontier = vec![target.unit()];
                while let Some(x) = frontier.pop() {
                    for img in &generator_images {
                        for next in [
                            target
                                .tensor(&x, img)?
                                .labels()
                                .next()
                                .expect("group law")
                                .clone(),
                            target
                                .tensor(&x, &target.dual(img)?)?
                                .labels()
                                .next()
                                .expect("group law")
                                .clone(),
                        ] {
                            if seen.insert(next.clone()) {
                                frontier.push(next);
                            }
                        }
                    }
                }
                if seen.len() != order {
                    return Err(FusionError::NotHomomorphism(
                        "generator images do not generate the target".into(),
                    ));
                }
            }

            let tgt_model = Arc::clone(&target);
            let rule: RestrictRule = Box::new(move |x: &Label| {
                let v = x.as_vector().ok_or_else(|| FusionError::InvalidLabel {
                    label: format!("{:?}", x.payload()),
                    model: "abelian dual".into(),
                    reason: "expected an integer vector".into(),
                })?;
                let mut acc = tgt_model.unit();
                for (comp, &exp) in v.iter().enumerate() {
                    let img = &generator_images[comp];
                    let step = if exp >= 0 {
                        img.clone()
                    } else {
                        tgt_model.dual(img)?
                    };
                    for _ in 0..exp.unsigned_abs() {
                        let prod = tgt_model.tensor(&acc, &step)?;
                        acc = prod.labels().next().expect("group law").clone();
                    }
                }
                Ok(FormalSum::singleton(acc))
            });
            Ok(RestrictionData::from_rule(
                name,
                source,
                target,
                rule,
                true,
            ))
        }
    }
}

// ---------------------------------------------------------------------------
// Built-in restrictions
// ---------------------------------------------------------------------------

/// The order-2 normal subgroup of the SU(2)-type model: the target is the
/// dual of ℤ/2 and r_k restricts to d_k copies of the character of parity k.
pub fn bu_sign_subgroup(n: u64) -> Result<RestrictionData> {
    let source: Arc<Su2TypeModel> = Arc::new(Su2TypeModel::new(n)?);
    let target: Arc<GroupDualModel> =
        Arc::new(GroupDualModel::finite(crate::finite_group::cyclic(2)));
    let src = Arc::clone(&source);
    let tgt = Arc::clone(&target);
    let rule: RestrictRule = Box::new(move |x: &Label| {
        let k = x.as_nat().ok_or_else(|| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: src.tag().to_string(),
            reason: "expected a natural index".into(),
        })?;
        let dim = src.dim(x)?;
        let character = tgt.element_label((k % 2) as usize)?;
        Ok(FormalSum::with_multiplicity(character, dim))
    });
    Ok(RestrictionData::from_rule(
        &format!("bu-sign:{n}"),
        source,
        target,
        rule,
        true,
    ))
}

/// The non-normal two-element subgroup {I, V} of the SU(2)-type model, with
/// V = diag(−1, I_{n−1}). The fundamental restricts to one copy of the sign
/// character and n−1 copies of the trivial one; higher labels follow from
/// the ring-morphism property via the recursion
/// restrict(r_1)·restrict(r_k) = restrict(r_{k−1}) + restrict(r_{k+1})
/// computed in the ℤ/2 character ring.
pub fn bu_nonnormal_subgroup(n: u64) -> Result<RestrictionData> {
    let source: Arc<Su2TypeModel> = Arc::new(Su2TypeModel::new(n)?);
    let z2 = crate::finite_group::cyclic(2);
    let raw = crate::finite_group::character_table(&z2)?;
    let target: Arc<CharTableModel> = Arc::new(CharTableModel::from_raw(&raw)?);

    // trivial/sign coefficient pairs (a_k, b_k):
    // a_0 = 1, b_0 = 0; a_1 = n-1, b_1 = 1;
    // (a_{k+1}, b_{k+1}) = ((n-1)a_k + b_k − a_{k−1}, (n-1)b_k + a_k − b_{k−1})
    fn coefficients(n: u64, k: u64) -> (BigUint, BigUint) {
        let mut prev = (BigUint::one(), BigUint::zero());
        if k == 0 {
            return prev;
        }
        let mut cur = (BigUint::from(n - 1), BigUint::one());
        for _ in 1..k {
            let next = (
                BigUint::from(n - 1) * &cur.0 + &cur.1 - &prev.0,
                BigUint::from(n - 1) * &cur.1 + &cur.0 - &prev.1,
            );
            prev = cur;
            cur = next;
        }
        cur
    }

    let src = Arc::clone(&source);
    let tgt = Arc::clone(&target);
    let n_param = n;
    let rule: RestrictRule = Box::new(move |x: &Label| {
        let k = x.as_nat().ok_or_else(|| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: src.tag().to_string(),
            reason: "expected a natural index".into(),
        })?;
        let (a, b) = coefficients(n_param, k);
        let mut out = FormalSum::new();
        out.add_term(tgt.label(0)?, a);
        out.add_term(tgt.label(1)?, b);
        Ok(out)
    });

    Ok(RestrictionData::from_rule(
        &format!("bu-H:{n}"),
        source,
        target,
        rule,
        false,
    ))
}

/// The central torus of the free-unitary model: the target is the dual of ℤ
/// and r_x restricts to d_x copies of the degree character δ(x).
pub fn au_central_torus(n: u64) -> Result<RestrictionData> {
    let source: Arc<FreeUnitaryModel> = Arc::new(FreeUnitaryModel::new(n)?);
    let target: Arc<GroupDualModel> = Arc::new(GroupDualModel::integers());
    let src = Arc::clone(&source);
    let tgt = Arc::clone(&target);
    let rule: RestrictRule = Box::new(move |x: &Label| {
        let w = x.as_word().ok_or_else(|| FusionError::InvalidLabel {
            label: format!("{:?}", x.payload()),
            model: src.tag().to_string(),
            reason: "expected a word".into(),
        })?;
        let dim = src.dim(x)?;
        let character = tgt.vector_label(vec![w.degree()])?;
        Ok(FormalSum::with_multiplicity(character, dim))
    });
    Ok(RestrictionData::from_rule(
        &format!("au-torus:{n}"),
        source,
        target,
        rule,
        true,
    ))
}

/// The trivial subgroup N = {e}: everything restricts to dim copies of the
/// unit; the quotient keeps every label.
pub fn trivial_subgroup(source: Arc<dyn FusionModel>) -> RestrictionData {
    let trivial = Arc::new(GroupDualModel::finite(crate::finite_group::cyclic(1)));
    let src = Arc::clone(&source);
    let tgt: Arc<GroupDualModel> = Arc::clone(&trivial);
    let rule: RestrictRule = Box::new(move |x: &Label| {
        Ok(FormalSum::with_multiplicity(tgt.unit(), src.dim(x)?))
    });
    RestrictionData::from_rule("trivial-subgroup", source, trivial, rule, true)
}

/// Restriction data from an embedded finite subgroup given by character
/// tables and a class map.
pub fn chartable_restriction(
    name: &str,
    big: Arc<CharTableModel>,
    small: Arc<CharTableModel>,
    class_map: &[usize],
) -> Result<RestrictionData> {
    let matrix = chartable_restriction_matrix(&big, &small, class_map)?;
    let mut table = BTreeMap::new();
    for (lam, row) in matrix.iter().enumerate() {
        let mut sum = FormalSum::new();
        for (nu, &m) in row.iter().enumerate() {
            sum.add_term(small.label(nu)?, BigUint::from(m));
        }
        table.insert(big.label(lam)?, sum);
    }
    Ok(RestrictionData::from_table(name, big, small, table))
}

/// Builds the embedding data (subgroup character table and class map) for a
/// subgroup of a multiplication-table group, and the restriction it induces.
pub fn finite_subgroup_restriction(
    group: &FiniteGroup,
    big: Arc<CharTableModel>,
    subgroup_elements: &[usize],
    name: &str,
) -> Result<(RestrictionData, Vec<usize>)> {
    let (h, elems) = group.subgroup_as_group(name, subgroup_elements)?;
    let raw = crate::finite_group::character_table(&h)?;
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
                .expect("representative lies in some class")
        })
        .collect();
    let r = chartable_restriction(name, big, small, &class_map)?;
    Ok((r, class_map))
}
