use std::collections::BTreeMap;
use std::fmt;

use rayon::prelude::*;
use serde::Serialize;

use super::rules::{dichotomy_global, first_rule};
use super::{
    enumerate_candidates, CandidateModule, Constraints, ExclusionContext, Mode, RuleApplication,
    Scope,
};

/// Largest dimension visited by a scan unless told otherwise.
pub const DEFAULT_SCAN_MAX: u64 = 64;

/// One exclusion question.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Query {
    pub dimension: u64,
    pub mode: Mode,
    pub scope: Scope,
    pub effective: bool,
    pub pseudofree: Option<u64>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Excluded,
    NotExcluded,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CandidateVerdict {
    pub module: String,
    pub multiplicities: Vec<u32>,
    pub dimension: u64,
    pub faithful: bool,
    pub excluded: bool,
    pub application: Option<RuleApplication>,
}

/// A subgroup cited by the trace, given by generating permutations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WitnessSubgroup {
    pub id: usize,
    pub class: String,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExclusionReport {
    pub group: String,
    pub group_order: usize,
    pub mode: Mode,
    pub scope: Scope,
    pub dimension: u64,
    pub pseudofree: Option<u64>,
    pub effective: bool,
    pub verdict: Verdict,
    pub surviving_families: Vec<String>,
    pub candidates: Vec<CandidateVerdict>,
    pub witnesses: Vec<WitnessSubgroup>,
}

impl ExclusionReport {
    pub fn is_excluded(&self) -> bool {
        self.verdict == Verdict::Excluded
    }

    pub fn survivors(&self) -> impl Iterator<Item = &CandidateVerdict> {
        self.candidates.iter().filter(|c| !c.excluded)
    }

    /// The report without rule applications and witnesses.
    pub fn without_trace(&self) -> ExclusionReport {
        let mut r = self.clone();
        for c in &mut r.candidates {
            c.application = None;
        }
        r.witnesses.clear();
        r
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// `EXCLUDED` or `NOT EXCLUDED (n surviving families: ...)`.
impl fmt::Display for ExclusionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.verdict {
            Verdict::Excluded => f.write_str("EXCLUDED"),
            Verdict::NotExcluded => {
                let n = self.surviving_families.len();
                let noun = if n == 1 { "family" } else { "families" };
                write!(
                    f,
                    "NOT EXCLUDED ({n} surviving {noun}: {})",
                    self.surviving_families.join(", ")
                )
            }
        }
    }
}

/// Family label of a module: faithful summands of one stem, such as
/// `W8_1`, `W8_2`, `W8_3`, are merged into `W8_*`.
fn family(ctx: &ExclusionContext, v: &CandidateModule) -> String {
    let table = ctx.table();
    let mut parts: Vec<(String, u32)> = Vec::new();
    for (i, m) in v.module.summands() {
        let name = table.real()[i].name();
        let faithful = ctx.kernel_row(i).iter().skip(1).all(|&k| !k);
        let label = match name.rsplit_once('_') {
            Some((stem, idx)) if faithful && idx.chars().all(|c| c.is_ascii_digit()) => {
                format!("{stem}_*")
            }
            _ => name.to_string(),
        };
        match parts.iter_mut().find(|(l, _)| *l == label) {
            Some((_, total)) => *total += m,
            None => parts.push((label, m)),
        }
    }
    if parts.is_empty() {
        return "0".to_string();
    }
    parts
        .into_iter()
        .map(|(l, m)| if m == 1 { l } else { format!("{m}*{l}") })
        .collect::<Vec<_>>()
        .join("+")
}

/// Enumerates candidates for `query` and applies the rules to each.
pub fn exclude(ctx: &ExclusionContext, query: &Query) -> ExclusionReport {
    let constraints = Constraints {
        effective: query.effective,
        pseudofree: query.pseudofree,
        forbidden: Vec::new(),
    };
    let candidates = enumerate_candidates(ctx, query.dimension, &constraints);
    let mut applications: Vec<Option<RuleApplication>> = candidates
        .par_iter()
        .map(|v| first_rule(ctx, v, query.mode, query.scope))
        .collect();

    if query.mode == Mode::Odd {
        let open: Vec<usize> = (0..candidates.len())
            .filter(|&i| applications[i].is_none())
            .collect();
        let survivors: Vec<&CandidateModule> = open.iter().map(|&i| &candidates[i]).collect();
        if let Some(apps) = dichotomy_global(ctx, &survivors) {
            for (i, app) in open.into_iter().zip(apps) {
                applications[i] = Some(app);
            }
        }
    }

    let table = ctx.table();
    let group = ctx.lattice().group();
    let mut cited: BTreeMap<usize, WitnessSubgroup> = BTreeMap::new();
    let mut families: Vec<String> = Vec::new();
    let mut verdicts = Vec::with_capacity(candidates.len());
    for (v, app) in candidates.iter().zip(applications) {
        if let Some(app) = &app {
            for role in &app.subgroups {
                cite(ctx, &mut cited, role.witness);
            }
            for cond in &app.side_conditions {
                if let super::SideCondition::NonOliver { p, h, .. } = cond {
                    cite(ctx, &mut cited, *p);
                    cite(ctx, &mut cited, *h);
                }
            }
        } else {
            let f = family(ctx, v);
            if !families.contains(&f) {
                families.push(f);
            }
        }
        verdicts.push(CandidateVerdict {
            module: v.module.display(table),
            multiplicities: v.module.multiplicities().to_vec(),
            dimension: v.dimension,
            faithful: v.faithful,
            excluded: app.is_some(),
            application: app,
        });
    }
    ExclusionReport {
        group: table.name().to_string(),
        group_order: group.order(),
        mode: query.mode,
        scope: query.scope,
        dimension: query.dimension,
        pseudofree: query.pseudofree,
        effective: query.effective,
        verdict: if families.is_empty() {
            Verdict::Excluded
        } else {
            Verdict::NotExcluded
        },
        surviving_families: families,
        candidates: verdicts,
        witnesses: cited.into_values().collect(),
    }
}

fn cite(ctx: &ExclusionContext, cited: &mut BTreeMap<usize, WitnessSubgroup>, id: usize) {
    cited.entry(id).or_insert_with(|| {
        let w = ctx.witness(id);
        let group = ctx.lattice().group();
        WitnessSubgroup {
            id,
            class: ctx.lattice().class(w.class).label.clone(),
            order: w.subgroup.order(),
            generators: w
                .subgroup
                .generator_ids()
                .iter()
                .map(|&g| group.element(g).to_string())
                .collect(),
        }
    });
}

/// Surviving candidates at one admissible dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanEntry {
    pub dimension: u64,
    pub families: Vec<String>,
    pub survivors: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ScanReport {
    pub group: String,
    pub mode: Mode,
    pub scope: Scope,
    pub effective: bool,
    pub pseudofree: Option<u64>,
    pub max_dimension: u64,
    pub admissible: Vec<u64>,
    pub entries: Vec<ScanEntry>,
}

impl ScanReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// Runs [`exclude`] for every dimension in `0..=max_dimension`; `template`
/// supplies everything but the dimension. Calls `each` with every report.
pub fn scan(
    ctx: &ExclusionContext,
    template: &Query,
    max_dimension: u64,
    mut each: impl FnMut(&ExclusionReport),
) -> ScanReport {
    let mut admissible = Vec::new();
    let mut entries = Vec::new();
    for n in 0..=max_dimension {
        let report = exclude(
            ctx,
            &Query {
                dimension: n,
                ..template.clone()
            },
        );
        each(&report);
        if !report.is_excluded() {
            admissible.push(n);
            entries.push(ScanEntry {
                dimension: n,
                families: report.surviving_families.clone(),
                survivors: report.survivors().map(|c| c.module.clone()).collect(),
            });
        }
    }
    ScanReport {
        group: ctx.table().name().to_string(),
        mode: template.mode,
        scope: template.scope,
        effective: template.effective,
        pseudofree: template.pseudofree,
        max_dimension,
        admissible,
        entries,
    }
}

/// Dimensions up to `max_dimension` not excluded for `k`-pseudofree actions
/// with one fixed point.
pub fn pseudofree_scan(
    ctx: &ExclusionContext,
    k: u64,
    effective: bool,
    scope: Scope,
    max_dimension: u64,
) -> ScanReport {
    let template = Query {
        dimension: 0,
        mode: Mode::One,
        scope,
        effective,
        pseudofree: Some(k),
    };
    scan(ctx, &template, max_dimension, |_| {})
}
