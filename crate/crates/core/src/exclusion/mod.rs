//! Candidate tangent modules at a global fixed point, the rules that exclude
//! them, and drivers for one-fixed-point, odd-fixed-point and pseudofree
//! questions.
//!
//! Topology enters only through named axioms recorded in each
//! [`RuleApplication`]; everything else in a trace is finite arithmetic that
//! [`verify_report`] re-derives from the group and its character table.

mod candidates;
mod check;
mod context;
mod report;
mod rules;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::chartab::ChartabError;

pub use candidates::{enumerate_candidates, CandidateModule, Constraints};
pub use check::{verify_report, TraceError};
pub use context::{Configuration, ExclusionContext, Witness};
pub use report::{
    exclude, pseudofree_scan, scan, CandidateVerdict, ExclusionReport, Query, ScanEntry,
    ScanReport, Verdict, WitnessSubgroup, DEFAULT_SCAN_MAX,
};
pub use rules::{
    rule_r1_two_point, rule_r2_index_two, rule_r3_low_sphere, rule_r4_parity, rule_r5_dichotomy,
    RoleRef, RuleApplication, SideCondition,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExclusionError {
    #[error("scope violation: {0}")]
    ScopeViolation(String),
    #[error("character table and lattice describe different groups")]
    GroupMismatch,
    #[error(transparent)]
    Chartab(#[from] ChartabError),
}

/// How many global fixed points the hypothetical action has.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    One,
    Odd,
}

/// The class of spheres the hypothetical action lives on. Standard spheres
/// are in particular integral homology spheres.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Scope {
    Homology,
    Standard,
}

impl Scope {
    /// True if a rule valid on `rule_scope` may be used on this scope.
    pub fn admits(self, rule_scope: Scope) -> bool {
        rule_scope <= self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum RuleId {
    R1,
    R2,
    R3,
    R4,
    R5,
}

/// What a rule concludes about the global fixed-point set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Conclusion {
    TwoPoints,
    EvenCount,
    NotSingleFixedPoint,
}

impl Conclusion {
    /// True if the conclusion contradicts `mode`.
    pub fn excludes(self, mode: Mode) -> bool {
        match self {
            Conclusion::TwoPoints | Conclusion::EvenCount => true,
            Conclusion::NotSingleFixedPoint => mode == Mode::One,
        }
    }
}

macro_rules! text_enum {
    ($ty:ty, $what:literal, $($variant:path => $text:literal),+) => {
        impl fmt::Display for $ty {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let text = match self {
                    $($variant => $text,)+
                };
                f.write_str(text)
            }
        }

        impl FromStr for $ty {
            type Err = String;

            fn from_str(s: &str) -> Result<Self, String> {
                match s {
                    $($text => Ok($variant),)+
                    other => Err(format!("unknown {} {other:?}", $what)),
                }
            }
        }
    };
}

text_enum!(Mode, "mode", Mode::One => "one", Mode::Odd => "odd");
text_enum!(Scope, "scope", Scope::Homology => "homology", Scope::Standard => "standard");
text_enum!(
    RuleId, "rule",
    RuleId::R1 => "R1", RuleId::R2 => "R2", RuleId::R3 => "R3", RuleId::R4 => "R4", RuleId::R5 => "R5"
);
text_enum!(
    Conclusion, "conclusion",
    Conclusion::TwoPoints => "two-points",
    Conclusion::EvenCount => "even-count",
    Conclusion::NotSingleFixedPoint => "not-single-fixed-point"
);

/// One context for the bundled group, shared by the unit tests.
#[cfg(test)]
pub(crate) fn test_context() -> &'static ExclusionContext {
    use std::sync::{Arc, OnceLock};

    use crate::chartab::CharacterTable;
    use crate::fixtures;
    use crate::lattice::enumerate_subgroups;

    static CTX: OnceLock<ExclusionContext> = OnceLock::new();
    CTX.get_or_init(|| {
        let group = Arc::new(fixtures::sl25c2());
        let table = CharacterTable::load(Arc::clone(&group), fixtures::SL25C2_CHARTAB).unwrap();
        let lattice = enumerate_subgroups(group).unwrap();
        ExclusionContext::new(Arc::new(table), Arc::new(lattice)).unwrap()
    })
}
