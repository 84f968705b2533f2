//! Re-verification of exclusion reports from the group's permutations and
//! the character table's values alone. Nothing here reads the lattice, the
//! precomputed fixed-dimension matrix or the rule search.

use std::collections::{HashMap, HashSet, VecDeque};

use thiserror::Error;

use crate::chartab::CharacterTable;
use crate::exactnum::{CycloNum, Rational};
use crate::group::{ElemSet, FiniteGroup, Permutation, Subgroup};
use crate::oliver::{verify_witness, OliverWitness};

use super::{Conclusion, ExclusionReport, RuleApplication, RuleId, Scope, SideCondition, Verdict};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("trace rejected at {location}: {reason}")]
pub struct TraceError {
    pub location: String,
    pub reason: String,
}

fn reject<T>(location: impl Into<String>, reason: impl Into<String>) -> Result<T, TraceError> {
    Err(TraceError {
        location: location.into(),
        reason: reason.into(),
    })
}

fn closure(seed: &[Permutation], degree: usize) -> HashSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let identity = Permutation::identity(degree);
    seen.insert(identity.clone());
    let mut queue = VecDeque::from([identity]);
    while let Some(x) = queue.pop_front() {
        for g in seed {
            let y = x.compose(g);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen
}

fn is_power_of(n: usize, p: usize) -> bool {
    let mut n = n;
    while n.is_multiple_of(p) {
        n /= p;
    }
    n == 1
}

fn is_prime(n: usize) -> bool {
    n > 1
        && (2..n)
            .take_while(|d| d * d <= n)
            .all(|d| !n.is_multiple_of(d))
}

fn is_prime_power(n: usize) -> bool {
    if n == 1 {
        return true;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    is_power_of(n, p)
}

struct Checker<'a> {
    table: &'a CharacterTable,
    group: &'a FiniteGroup,
    /// Element ids of each cited witness.
    witnesses: HashMap<usize, Vec<usize>>,
    perms: HashMap<usize, Vec<Permutation>>,
    fixed: HashMap<(usize, usize), u64>,
    names: HashMap<&'a str, usize>,
    /// Conditions on witnesses alone that already passed.
    settled: HashSet<SideCondition>,
}

impl<'a> Checker<'a> {
    /// `dim V_i^H` for real irreducible `i`, averaged over `H`'s elements.
    fn irreducible_fixed(&mut self, witness: usize, i: usize) -> Result<u64, TraceError> {
        if let Some(&d) = self.fixed.get(&(witness, i)) {
            return Ok(d);
        }
        let ids = &self.witnesses[&witness];
        let class_of = &self.group.classes().class_of;
        let mut counts = vec![0i64; self.table.classes().len()];
        for &g in ids {
            counts[class_of[g]] += 1;
        }
        let chi = &self.table.real()[i];
        let mut total = CycloNum::zero();
        for (c, &n) in counts.iter().enumerate() {
            if n > 0 {
                total += &(chi.value(c) * &CycloNum::from_integer(n));
            }
        }
        let avg = total.scale(&Rational::new(1.into(), (ids.len() as i64).into()));
        let d = match avg.as_i64() {
            Some(d) if d >= 0 => d as u64,
            _ => {
                return reject(
                    format!("witness {witness}"),
                    format!("non-integral fixed dimension {avg}"),
                )
            }
        };
        self.fixed.insert((witness, i), d);
        Ok(d)
    }

    fn module_fixed(&mut self, mults: &[u32], witness: usize) -> Result<u64, TraceError> {
        if !self.witnesses.contains_key(&witness) {
            return reject(format!("witness {witness}"), "not in the witness table");
        }
        let mut total = 0;
        for (i, &m) in mults.iter().enumerate() {
            if m > 0 {
                total += m as u64 * self.irreducible_fixed(witness, i)?;
            }
        }
        Ok(total)
    }

    fn subgroup(&self, witness: usize) -> Result<Subgroup, TraceError> {
        let ids = self.witnesses.get(&witness).ok_or_else(|| TraceError {
            location: format!("witness {witness}"),
            reason: "not in the witness table".into(),
        })?;
        Ok(Subgroup::from_members(
            self.group,
            ElemSet::from_ids(self.group.order(), ids.iter().copied()),
        ))
    }

    fn members(&self, witness: usize) -> Result<HashSet<usize>, TraceError> {
        match self.witnesses.get(&witness) {
            Some(ids) => Ok(ids.iter().copied().collect()),
            None => reject(format!("witness {witness}"), "not in the witness table"),
        }
    }

    fn summand_ok(
        &self,
        mults: &[u32],
        any_of: &[String],
        none_of: &[String],
    ) -> Result<bool, TraceError> {
        let mult = |name: &String| -> Result<u32, TraceError> {
            match self.names.get(name.as_str()) {
                Some(&i) => Ok(mults[i]),
                None => reject("summands", format!("unknown irreducible {name}")),
            }
        };
        let mut any = any_of.is_empty();
        for n in any_of {
            any |= mult(n)? > 0;
        }
        let mut none = true;
        for n in none_of {
            none &= mult(n)? == 0;
        }
        Ok(any && none)
    }

    fn condition(
        &mut self,
        at: &str,
        mults: &[u32],
        cond: &SideCondition,
        report: &ExclusionReport,
    ) -> Result<(), TraceError> {
        let structural = !matches!(
            cond,
            SideCondition::FixedDim { .. }
                | SideCondition::DimensionSum { .. }
                | SideCondition::Summands { .. }
                | SideCondition::AllSurvivors { .. }
        );
        if structural && self.settled.contains(cond) {
            return Ok(());
        }
        self.check_condition(at, mults, cond, report)?;
        if structural {
            self.settled.insert(cond.clone());
        }
        Ok(())
    }

    fn check_condition(
        &mut self,
        at: &str,
        mults: &[u32],
        cond: &SideCondition,
        report: &ExclusionReport,
    ) -> Result<(), TraceError> {
        match cond {
            SideCondition::NonOliver { subgroup, p, h } => {
                let x = self.subgroup(*subgroup)?;
                let w = OliverWitness {
                    p: self.subgroup(*p)?,
                    h: self.subgroup(*h)?,
                };
                verify_witness(self.group, &x, &w).or_else(|e| reject(at, e.to_string()))
            }
            SideCondition::Generates {
                first,
                second,
                order,
            } => {
                let mut seed = self.perms[first].clone();
                seed.extend(self.perms[second].iter().cloned());
                let size = closure(&seed, self.group.degree()).len();
                if size != *order || size != self.group.order() {
                    return reject(at, format!("generated order {size}, recorded {order}"));
                }
                Ok(())
            }
            SideCondition::Contains { outer, inner } => {
                let o = self.members(*outer)?;
                if !self.members(*inner)?.is_subset(&o) {
                    return reject(at, format!("witness {inner} is not inside witness {outer}"));
                }
                Ok(())
            }
            SideCondition::PrimePowerOrder { subgroup, order } => {
                let n = self.members(*subgroup)?.len();
                if n != *order || !is_prime_power(n) {
                    return reject(at, format!("order {n} is not the prime power {order}"));
                }
                Ok(())
            }
            SideCondition::TwoPowerOrder { subgroup, order } => {
                let n = self.members(*subgroup)?.len();
                if n != *order || !is_power_of(n, 2) {
                    return reject(at, format!("order {n} is not the power of two {order}"));
                }
                Ok(())
            }
            SideCondition::IndexTwoCore { subgroup, order } => {
                // the intersection of all subgroups of index at most two is
                // the subgroup generated by squares
                let squares: Vec<Permutation> = self
                    .group
                    .elements()
                    .iter()
                    .map(|g| g.compose(g))
                    .collect::<HashSet<_>>()
                    .into_iter()
                    .collect();
                let core = closure(&squares, self.group.degree());
                let mine: HashSet<Permutation> = self.witnesses[subgroup]
                    .iter()
                    .map(|&g| self.group.element(g).clone())
                    .collect();
                if core != mine || core.len() != *order {
                    return reject(at, "witness is not the subgroup generated by squares");
                }
                Ok(())
            }
            SideCondition::FixedDim { subgroup, value } => {
                let d = self.module_fixed(mults, *subgroup)?;
                if d != *value {
                    return reject(at, format!("fixed dimension {d}, recorded {value}"));
                }
                Ok(())
            }
            SideCondition::DimensionSum {
                parts,
                whole,
                offset,
                sum,
                value,
            } => {
                let mut s = 0;
                for &p in parts {
                    s += self.module_fixed(mults, p)?;
                }
                let v = self.module_fixed(mults, *whole)?;
                if s != *sum || v != *value || s + offset != v {
                    return reject(at, format!("dimension sum {s} + {offset} against {v}"));
                }
                Ok(())
            }
            SideCondition::Summands { any_of, none_of } => {
                if !self.summand_ok(mults, any_of, none_of)? {
                    return reject(at, "summand condition fails");
                }
                Ok(())
            }
            SideCondition::AllSurvivors {
                any_of,
                none_of,
                count,
            } => {
                let mut seen = 0;
                for c in &report.candidates {
                    let global = c.application.as_ref().is_some_and(|a| {
                        a.side_conditions
                            .iter()
                            .any(|s| matches!(s, SideCondition::AllSurvivors { .. }))
                    });
                    if c.application.is_none() || global {
                        seen += 1;
                        if !self.summand_ok(&c.multiplicities, any_of, none_of)? {
                            return reject(
                                at,
                                format!("survivor {} breaks the summand condition", c.module),
                            );
                        }
                    }
                }
                if seen != *count {
                    return reject(at, format!("{seen} survivors, recorded {count}"));
                }
                Ok(())
            }
        }
    }

    fn application(
        &mut self,
        at: &str,
        mults: &[u32],
        app: &RuleApplication,
        report: &ExclusionReport,
    ) -> Result<(), TraceError> {
        for cond in &app.side_conditions {
            self.condition(at, mults, cond, report)?;
        }
        if !app.conclusion.excludes(report.mode) {
            return reject(
                at,
                format!("{} does not exclude mode {}", app.conclusion, report.mode),
            );
        }
        if !report.scope.admits(app.scope) {
            return reject(at, format!("rule valid on {} only", app.scope));
        }
        let role = |name: &str| -> Result<usize, TraceError> {
            app.subgroups
                .iter()
                .find(|r| r.role == name)
                .map(|r| r.witness)
                .ok_or_else(|| TraceError {
                    location: at.to_string(),
                    reason: format!("missing role {name}"),
                })
        };
        let has = |pred: &dyn Fn(&SideCondition) -> bool| app.side_conditions.iter().any(pred);
        let fixed = |w: usize, pred: &dyn Fn(u64) -> bool| {
            has(
                &|c| matches!(c, SideCondition::FixedDim { subgroup, value } if *subgroup == w && pred(*value)),
            )
        };
        let non_oliver = |w: usize| {
            has(&|c| matches!(c, SideCondition::NonOliver { subgroup, .. } if *subgroup == w))
        };
        let frame = |a: usize, b: usize, c: usize| {
            has(
                &|s| matches!(s, SideCondition::Generates { first, second, .. } if *first == a && *second == b),
            ) && has(
                &|s| matches!(s, SideCondition::Contains { outer, inner } if *outer == a && *inner == c),
            ) && has(
                &|s| matches!(s, SideCondition::Contains { outer, inner } if *outer == b && *inner == c),
            )
        };
        let sum = |a: usize, b: usize, c: usize| {
            has(
                &|s| matches!(s, SideCondition::DimensionSum { parts, whole, .. } if parts[..] == [a, b] && *whole == c),
            )
        };
        let prime_power = |w: usize| {
            has(&|s| matches!(s, SideCondition::PrimePowerOrder { subgroup, .. } if *subgroup == w))
        };
        let two_power = |w: usize| {
            has(&|s| matches!(s, SideCondition::TwoPowerOrder { subgroup, .. } if *subgroup == w))
        };

        let two_point_shape = || -> Result<bool, TraceError> {
            let (h1, h2, p) = (role("H1")?, role("H2")?, role("P")?);
            Ok(non_oliver(h1)
                && non_oliver(h2)
                && frame(h1, h2, p)
                && prime_power(p)
                && fixed(p, &|d| d == 0))
        };
        let ok = match app.rule {
            RuleId::R1 => app.conclusion == Conclusion::TwoPoints && two_point_shape()?,
            RuleId::R2 => {
                let g2 = role("G2")?;
                app.conclusion == Conclusion::NotSingleFixedPoint
                    && has(
                        &|s| matches!(s, SideCondition::IndexTwoCore { subgroup, .. } if *subgroup == g2),
                    )
                    && fixed(g2, &|d| d > 0)
            }
            RuleId::R3 => {
                let (h1, h2, h) = (role("H1")?, role("H2")?, role("H")?);
                app.conclusion == Conclusion::NotSingleFixedPoint
                    && app.scope == Scope::Standard
                    && non_oliver(h1)
                    && non_oliver(h2)
                    && frame(h1, h2, h)
                    && prime_power(h)
                    && sum(h1, h2, h)
                    && fixed(h, &|d| d <= 2)
                    && has(&|s| matches!(s, SideCondition::DimensionSum { offset: 0, .. }))
            }
            RuleId::R4 => {
                let (a, b, c) = (role("A")?, role("B")?, role("C")?);
                app.conclusion == Conclusion::EvenCount
                    && frame(a, b, c)
                    && two_power(a)
                    && two_power(b)
                    && two_power(c)
                    && fixed(a, &|d| d > 0)
                    && fixed(b, &|d| d > 0)
                    && sum(a, b, c)
                    && has(&|s| matches!(s, SideCondition::DimensionSum { offset: 0, .. }))
            }
            RuleId::R5 => {
                let lacking_all = has(
                    &|s| matches!(s, SideCondition::Summands { any_of, none_of } if any_of.is_empty() && !none_of.is_empty()),
                );
                if lacking_all {
                    app.conclusion == Conclusion::TwoPoints && two_point_shape()?
                } else {
                    let (h1, h2, h) = (role("H1")?, role("H2")?, role("H")?);
                    let global = has(&|s| matches!(s, SideCondition::AllSurvivors { .. }));
                    let conclusion = if global {
                        Conclusion::EvenCount
                    } else {
                        Conclusion::NotSingleFixedPoint
                    };
                    app.conclusion == conclusion
                        && has(
                            &|s| matches!(s, SideCondition::Summands { any_of, none_of } if !any_of.is_empty() && !none_of.is_empty()),
                        )
                        && non_oliver(h1)
                        && non_oliver(h2)
                        && frame(h1, h2, h)
                        && sum(h1, h2, h)
                        && fixed(h1, &|d| d > 0)
                        && fixed(h2, &|d| d > 0)
                }
            }
        };
        if !ok {
            return reject(
                at,
                format!("{} application lacks a required side condition", app.rule),
            );
        }
        Ok(())
    }
}

/// Re-verifies every candidate, every rule application and the verdict of
/// `report` against `table` and its group.
pub fn verify_report(report: &ExclusionReport, table: &CharacterTable) -> Result<(), TraceError> {
    let group = table.group();
    if report.group_order != group.order() {
        return reject("report", "group order differs from the table's group");
    }
    let degree = group.degree();
    let mut checker = Checker {
        table,
        group,
        witnesses: HashMap::new(),
        perms: HashMap::new(),
        fixed: HashMap::new(),
        settled: HashSet::new(),
        names: table
            .real()
            .iter()
            .enumerate()
            .map(|(i, c)| (c.name(), i))
            .collect(),
    };
    for w in &report.witnesses {
        let at = format!("witness {}", w.id);
        let mut gens = Vec::new();
        for text in &w.generators {
            match Permutation::parse_cycles(text, degree) {
                Ok(p) => gens.push(p),
                Err(e) => return reject(at, e.to_string()),
            }
        }
        let elements = closure(&gens, degree);
        if elements.len() != w.order {
            return reject(
                at,
                format!(
                    "generates {} elements, recorded {}",
                    elements.len(),
                    w.order
                ),
            );
        }
        let mut ids = Vec::with_capacity(elements.len());
        for p in &elements {
            match group.id_of(p) {
                Some(id) => ids.push(id),
                None => return reject(at, "generator outside the group"),
            }
        }
        ids.sort_unstable();
        checker.witnesses.insert(w.id, ids);
        checker.perms.insert(w.id, gens);
    }

    let real = table.real();
    let trivial: Vec<usize> = (0..real.len())
        .filter(|&i| real[i].values().iter().all(|v| *v == CycloNum::one()))
        .collect();
    let prime_order_reps: Vec<usize> = table
        .classes()
        .iter()
        .filter(|c| is_prime(c.order_of_rep as usize))
        .map(|c| c.representative)
        .collect();
    let class_of = &group.classes().class_of;

    for (k, c) in report.candidates.iter().enumerate() {
        let at = format!("candidate {k} ({})", c.module);
        if c.multiplicities.len() != real.len() {
            return reject(at, "wrong number of multiplicities");
        }
        if trivial.iter().any(|&i| c.multiplicities[i] > 0) {
            return reject(at, "contains the trivial module");
        }
        let character: Vec<CycloNum> = (0..table.classes().len())
            .map(|cl| {
                c.multiplicities
                    .iter()
                    .enumerate()
                    .filter(|(_, &m)| m > 0)
                    .map(|(i, &m)| real[i].value(cl) * &CycloNum::from_integer(m as i64))
                    .sum()
            })
            .collect();
        let dim = character[0].as_i64().unwrap_or(-1);
        if dim != report.dimension as i64 || c.dimension != report.dimension {
            return reject(
                at,
                format!("dimension {dim}, report asks for {}", report.dimension),
            );
        }
        let faithful = character.iter().skip(1).all(|v| *v != character[0]);
        if faithful != c.faithful || (report.effective && !faithful) {
            return reject(at, "faithfulness flag is wrong");
        }
        let parts: Vec<String> = c
            .multiplicities
            .iter()
            .enumerate()
            .filter(|(_, &m)| m > 0)
            .map(|(i, &m)| {
                if m == 1 {
                    real[i].name().to_string()
                } else {
                    format!("{m}*{}", real[i].name())
                }
            })
            .collect();
        let name = if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join("+")
        };
        if name != c.module {
            return reject(at, format!("module text should be {name}"));
        }
        if let Some(bound) = report.pseudofree {
            // fixed dimensions only shrink as the subgroup grows, so the
            // subgroups of prime order carry the maximum
            for &g in &prime_order_reps {
                let p = group.element_order(g) as u64;
                let mut total = CycloNum::zero();
                for j in 0..p {
                    total += &character[class_of[group.pow(g, j)]];
                }
                let d = total.scale(&Rational::new(1.into(), (p as i64).into()));
                if d.as_i64().is_none_or(|d| d < 0 || d as u64 > bound) {
                    return reject(
                        at,
                        format!("fixed dimension {d} exceeds the pseudofree bound {bound}"),
                    );
                }
            }
        }
        match (&c.application, c.excluded) {
            (Some(app), true) => checker.application(&at, &c.multiplicities, app, report)?,
            (None, false) => {}
            _ => return reject(at, "excluded flag disagrees with the application"),
        }
    }

    let all_excluded = report.candidates.iter().all(|c| c.excluded);
    let expected = if all_excluded {
        Verdict::Excluded
    } else {
        Verdict::NotExcluded
    };
    if report.verdict != expected || all_excluded != report.surviving_families.is_empty() {
        return reject("verdict", "verdict disagrees with the candidates");
    }
    Ok(())
}
