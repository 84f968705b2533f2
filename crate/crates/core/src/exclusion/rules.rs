use serde::Serialize;

use super::context::{Configuration, DichotomyData};
use super::{CandidateModule, Conclusion, ExclusionContext, ExclusionError, Mode, RuleId, Scope};

/// A subgroup playing a named part in a rule.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RoleRef {
    pub role: String,
    pub class: String,
    /// Index into the report's witness table.
    pub witness: usize,
}

/// A side condition together with the value it was verified at. Subgroups
/// are referenced by witness index.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum SideCondition {
    /// `subgroup` is non-Oliver, certified by the chain `p ⊴ h ⊴ subgroup`.
    NonOliver {
        subgroup: usize,
        p: usize,
        h: usize,
    },
    /// `first` and `second` generate a group of order `order`.
    Generates {
        first: usize,
        second: usize,
        order: usize,
    },
    Contains {
        outer: usize,
        inner: usize,
    },
    PrimePowerOrder {
        subgroup: usize,
        order: usize,
    },
    TwoPowerOrder {
        subgroup: usize,
        order: usize,
    },
    /// `subgroup` is the intersection of all subgroups of index at most two.
    IndexTwoCore {
        subgroup: usize,
        order: usize,
    },
    FixedDim {
        subgroup: usize,
        value: u64,
    },
    /// `Σ dim V^parts + offset = dim V^whole`.
    DimensionSum {
        parts: Vec<usize>,
        whole: usize,
        offset: u64,
        sum: u64,
        value: u64,
    },
    /// The module contains at least one of `any_of` (when nonempty) and
    /// none of `none_of`.
    Summands {
        any_of: Vec<String>,
        none_of: Vec<String>,
    },
    /// Every candidate not excluded by another rule satisfies the summand
    /// condition; `count` is the number of such candidates.
    AllSurvivors {
        any_of: Vec<String>,
        none_of: Vec<String>,
        count: usize,
    },
}

/// One firing of a rule on one candidate.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RuleApplication {
    pub rule: RuleId,
    pub subgroups: Vec<RoleRef>,
    pub side_conditions: Vec<SideCondition>,
    pub conclusion: Conclusion,
    /// Weakest sphere class on which the rule is valid.
    pub scope: Scope,
    /// Topological inputs taken as axioms.
    pub axioms: Vec<String>,
}

const SMITH: &str = "smith-theory: a p-group fixes a mod-p homology sphere";
const EULER: &str =
    "non-oliver-euler: a non-Oliver subgroup's fixed set has Euler characteristic other than 1";
const INTERSECTION: &str = "mod-2 intersection numbers vanish in a mod-2 homology sphere";
const LOW_SPHERE: &str = "low-sphere: a prime-power fixed set of dimension at most 2 in a standard sphere is a standard sphere";
const INDEX_TWO: &str =
    "index-two: positive fixed dimension of the index-two core forces a second fixed point";

struct Builder<'a> {
    ctx: &'a ExclusionContext,
    roles: Vec<RoleRef>,
    conditions: Vec<SideCondition>,
}

impl<'a> Builder<'a> {
    fn new(ctx: &'a ExclusionContext) -> Self {
        Builder {
            ctx,
            roles: Vec::new(),
            conditions: Vec::new(),
        }
    }

    fn role(&mut self, role: &str, witness: usize) -> &mut Self {
        let class = self.ctx.witness(witness).class;
        self.roles.push(RoleRef {
            role: role.to_string(),
            class: self.ctx.lattice().class(class).label.clone(),
            witness,
        });
        self
    }

    fn push(&mut self, condition: SideCondition) -> &mut Self {
        self.conditions.push(condition);
        self
    }

    fn order(&self, witness: usize) -> usize {
        self.ctx.witness(witness).subgroup.order()
    }

    fn fixed(&mut self, v: &CandidateModule, witness: usize) -> &mut Self {
        let value = v.fixed_dim(self.ctx.witness(witness).class);
        self.push(SideCondition::FixedDim {
            subgroup: witness,
            value,
        })
    }

    /// Non-Oliver pair, generation and containment of the inner subgroup.
    fn configuration(
        &mut self,
        cfg: &Configuration,
        names: [&str; 3],
        non_oliver: bool,
    ) -> &mut Self {
        let [w1, w2, w3] = cfg.witnesses;
        self.role(names[0], w1)
            .role(names[1], w2)
            .role(names[2], w3);
        if non_oliver {
            for w in [w1, w2] {
                let (p, h) = self.ctx.chain(w);
                self.push(SideCondition::NonOliver { subgroup: w, p, h });
            }
        }
        let order = self.ctx.lattice().group().order();
        self.push(SideCondition::Generates {
            first: w1,
            second: w2,
            order,
        });
        self.push(SideCondition::Contains {
            outer: w1,
            inner: w3,
        });
        self.push(SideCondition::Contains {
            outer: w2,
            inner: w3,
        })
    }

    fn finish(
        &mut self,
        rule: RuleId,
        conclusion: Conclusion,
        scope: Scope,
        axioms: &[&str],
    ) -> RuleApplication {
        RuleApplication {
            rule,
            subgroups: std::mem::take(&mut self.roles),
            side_conditions: std::mem::take(&mut self.conditions),
            conclusion,
            scope,
            axioms: axioms.iter().map(|a| a.to_string()).collect(),
        }
    }
}

fn r1_application(
    ctx: &ExclusionContext,
    v: &CandidateModule,
    cfg: &Configuration,
    rule: RuleId,
) -> RuleApplication {
    let mut b = Builder::new(ctx);
    let p = cfg.witnesses[2];
    let order = b.order(p);
    b.configuration(cfg, ["H1", "H2", "P"], true)
        .push(SideCondition::PrimePowerOrder { subgroup: p, order })
        .fixed(v, p);
    b.finish(
        rule,
        Conclusion::TwoPoints,
        Scope::Homology,
        &[SMITH, EULER],
    )
}

/// Two non-Oliver subgroups generating the group and a prime-power `P` in
/// their intersection with `dim V^P = 0`: the fixed set has two points.
pub fn rule_r1_two_point(ctx: &ExclusionContext, v: &CandidateModule) -> Option<RuleApplication> {
    let cfg = ctx
        .generating_configurations()
        .iter()
        .find(|cfg| v.fixed_dim(cfg.classes[2]) == 0)?;
    Some(r1_application(ctx, v, cfg, RuleId::R1))
}

/// Positive fixed dimension under the index-two core rules out a single
/// fixed point.
pub fn rule_r2_index_two(ctx: &ExclusionContext, v: &CandidateModule) -> Option<RuleApplication> {
    let core = ctx.index_two_core();
    let class = ctx.witness(core).class;
    if v.fixed_dim(class) == 0 {
        return None;
    }
    let mut b = Builder::new(ctx);
    let order = b.order(core);
    b.role("G2", core)
        .push(SideCondition::IndexTwoCore {
            subgroup: core,
            order,
        })
        .fixed(v, core);
    Some(b.finish(
        RuleId::R2,
        Conclusion::NotSingleFixedPoint,
        Scope::Homology,
        &[INDEX_TWO],
    ))
}

/// Non-Oliver `H1`, `H2` generating the group and a prime-power `H` in their
/// intersection with `dim V^H1 + dim V^H2 = dim V^H <= 2`: on a standard
/// sphere the fixed point is not unique.
pub fn rule_r3_low_sphere(ctx: &ExclusionContext, v: &CandidateModule) -> Option<RuleApplication> {
    let cfg = ctx.generating_configurations().iter().find(|cfg| {
        let [a, b, c] = cfg.classes;
        let whole = v.fixed_dim(c);
        v.fixed_dim(a) + v.fixed_dim(b) == whole && whole <= 2
    })?;
    let mut b = Builder::new(ctx);
    let [w1, w2, w3] = cfg.witnesses;
    let order = b.order(w3);
    let (d1, d2, d3) = (
        v.fixed_dim(cfg.classes[0]),
        v.fixed_dim(cfg.classes[1]),
        v.fixed_dim(cfg.classes[2]),
    );
    b.configuration(cfg, ["H1", "H2", "H"], true)
        .push(SideCondition::PrimePowerOrder {
            subgroup: w3,
            order,
        })
        .fixed(v, w1)
        .fixed(v, w2)
        .fixed(v, w3)
        .push(SideCondition::DimensionSum {
            parts: vec![w1, w2],
            whole: w3,
            offset: 0,
            sum: d1 + d2,
            value: d3,
        });
    Some(b.finish(
        RuleId::R3,
        Conclusion::NotSingleFixedPoint,
        Scope::Standard,
        &[SMITH, LOW_SPHERE, INTERSECTION, EULER],
    ))
}

/// 2-groups `A`, `B` generating the group and `C <= A ∩ B` with positive
/// `dim V^A`, `dim V^B` summing to `dim V^C`: the fixed set has even size.
pub fn rule_r4_parity(ctx: &ExclusionContext, v: &CandidateModule) -> Option<RuleApplication> {
    let cfg = ctx.two_group_configurations().iter().find(|cfg| {
        let [a, b, c] = cfg.classes;
        let (da, db) = (v.fixed_dim(a), v.fixed_dim(b));
        da > 0 && db > 0 && da + db == v.fixed_dim(c)
    })?;
    let mut b = Builder::new(ctx);
    let [w1, w2, w3] = cfg.witnesses;
    let (d1, d2, d3) = (
        v.fixed_dim(cfg.classes[0]),
        v.fixed_dim(cfg.classes[1]),
        v.fixed_dim(cfg.classes[2]),
    );
    b.configuration(cfg, ["A", "B", "C"], false);
    for w in [w1, w2, w3] {
        let order = b.order(w);
        b.push(SideCondition::TwoPowerOrder { subgroup: w, order });
    }
    b.fixed(v, w1)
        .fixed(v, w2)
        .fixed(v, w3)
        .push(SideCondition::DimensionSum {
            parts: vec![w1, w2],
            whole: w3,
            offset: 0,
            sum: d1 + d2,
            value: d3,
        });
    Some(b.finish(
        RuleId::R4,
        Conclusion::EvenCount,
        Scope::Homology,
        &[SMITH, INTERSECTION],
    ))
}

fn names(ctx: &ExclusionContext, indices: &[usize]) -> Vec<String> {
    indices
        .iter()
        .map(|&i| ctx.table().real()[i].name().to_string())
        .collect()
}

/// Body of the parity half of the dichotomy: the identity
/// `dim V^Q16 + dim V^[24,4] + mult(U6) = dim V^Q8_A` and the positivity
/// that makes both fixed sets connected.
fn dichotomy_parity(
    ctx: &ExclusionContext,
    v: &CandidateModule,
    d: &DichotomyData,
    survivors: Option<usize>,
    conclusion: Conclusion,
) -> RuleApplication {
    let mut b = Builder::new(ctx);
    let cfg = &d.config;
    let [w1, w2, w3] = cfg.witnesses;
    let any_of = names(ctx, &[d.u4_2, d.u5_2]);
    let none_of = names(ctx, &[d.u6]);
    b.configuration(cfg, ["H1", "H2", "H"], true)
        .push(SideCondition::Summands {
            any_of: any_of.clone(),
            none_of: none_of.clone(),
        })
        .fixed(v, w1)
        .fixed(v, w2)
        .fixed(v, w3)
        .push(SideCondition::DimensionSum {
            parts: vec![w1, w2],
            whole: w3,
            offset: v.module.multiplicity(d.u6) as u64,
            sum: v.fixed_dim(cfg.classes[0]) + v.fixed_dim(cfg.classes[1]),
            value: v.fixed_dim(cfg.classes[2]),
        });
    if let Some(count) = survivors {
        b.push(SideCondition::AllSurvivors {
            any_of,
            none_of,
            count,
        });
    }
    b.finish(
        RuleId::R5,
        conclusion,
        Scope::Homology,
        &[SMITH, INTERSECTION, EULER],
    )
}

/// The dichotomy for the group with summands `U4_2`, `U5_2`, `U5_1`, `U6`
/// and subgroups `Q16`, `[24,4]`, `Q8_A`, applied to one candidate in
/// `mode`.
///
/// A module with none of the four summands has `dim V^Q8_A = 0` and falls
/// to the two-point argument. In one-fixed-point mode a module containing
/// `U4_2` or `U5_2` but not `U6` contradicts the parity count. In odd mode
/// that count is global and handled by the driver.
pub fn rule_r5_dichotomy(
    ctx: &ExclusionContext,
    v: &CandidateModule,
    mode: Mode,
) -> Result<Option<RuleApplication>, ExclusionError> {
    let d = ctx.dichotomy().ok_or_else(|| {
        ExclusionError::ScopeViolation(
            "the dichotomy rule needs summands U4_2, U5_2, U5_1, U6 and classes Q16, [24,4], Q8_A"
                .into(),
        )
    })?;
    let named = [d.u4_2, d.u5_2, d.u5_1, d.u6];
    if named.iter().all(|&i| !v.contains(i)) {
        if v.fixed_dim(d.config.classes[2]) != 0 {
            return Ok(None);
        }
        let mut app = r1_application(ctx, v, &d.config, RuleId::R5);
        app.side_conditions.push(SideCondition::Summands {
            any_of: Vec::new(),
            none_of: names(ctx, &named),
        });
        return Ok(Some(app));
    }
    let split = (v.contains(d.u4_2) || v.contains(d.u5_2)) && !v.contains(d.u6);
    if mode == Mode::One && split {
        return Ok(Some(dichotomy_parity(
            ctx,
            v,
            d,
            None,
            Conclusion::NotSingleFixedPoint,
        )));
    }
    Ok(None)
}

/// Global parity half of the dichotomy in odd mode: if every surviving
/// candidate contains `U4_2` or `U5_2` and none contains `U6`, each of them
/// is excluded.
pub(crate) fn dichotomy_global(
    ctx: &ExclusionContext,
    survivors: &[&CandidateModule],
) -> Option<Vec<RuleApplication>> {
    let d = ctx.dichotomy()?;
    let fits =
        |v: &CandidateModule| (v.contains(d.u4_2) || v.contains(d.u5_2)) && !v.contains(d.u6);
    if survivors.is_empty() || !survivors.iter().all(|v| fits(v)) {
        return None;
    }
    Some(
        survivors
            .iter()
            .map(|v| dichotomy_parity(ctx, v, d, Some(survivors.len()), Conclusion::EvenCount))
            .collect(),
    )
}

/// First rule that excludes `v` in `mode` on `scope`, trying the index-two,
/// two-point, parity, low-sphere and dichotomy rules in that order.
pub(crate) fn first_rule(
    ctx: &ExclusionContext,
    v: &CandidateModule,
    mode: Mode,
    scope: Scope,
) -> Option<RuleApplication> {
    if mode == Mode::One {
        if let Some(app) = rule_r2_index_two(ctx, v) {
            return Some(app);
        }
    }
    if let Some(app) = rule_r1_two_point(ctx, v) {
        return Some(app);
    }
    if let Some(app) = rule_r4_parity(ctx, v) {
        return Some(app);
    }
    if mode == Mode::One && scope.admits(Scope::Standard) {
        if let Some(app) = rule_r3_low_sphere(ctx, v) {
            return Some(app);
        }
    }
    rule_r5_dichotomy(ctx, v, mode).ok().flatten()
}
