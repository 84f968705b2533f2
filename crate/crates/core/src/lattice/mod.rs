//! Subgroup lattices up to conjugacy.

mod catalog;
mod export;

use std::collections::HashMap;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{fingerprint, subgroup_closure, ElemSet, Fingerprint, FiniteGroup, Subgroup};

pub use catalog::{iso_label, CONFIRM_LIMIT};
pub use export::{LatticeClassExport, LatticeExport};

/// Default cap on the group order for lattice enumeration.
pub const DEFAULT_LATTICE_CAP: usize = 2000;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("group of order {order} exceeds the lattice cap of {cap}")]
    CapExceeded { cap: usize, order: usize },
    #[error("representatives do not form a complete lattice: {0}")]
    Incomplete(String),
}

/// One conjugacy class of subgroups.
#[derive(Clone, Debug)]
pub struct SubgroupClass {
    /// Conjugate whose members, sorted as permutations, are
    /// lexicographically least.
    pub representative: Subgroup,
    pub class_size: usize,
    /// Isomorphism type plus `_A`, `_B`, … when several classes share it.
    pub label: String,
    pub iso_type: String,
    pub iso_fingerprint: Fingerprint,
    pub is_normal: bool,
    conjugates: Vec<Subgroup>,
}

impl SubgroupClass {
    pub fn order(&self) -> usize {
        self.representative.order()
    }

    /// Every subgroup in the class; the representative comes first.
    pub fn conjugates(&self) -> &[Subgroup] {
        &self.conjugates
    }
}

#[derive(Debug)]
pub struct SubgroupLattice {
    group: Arc<FiniteGroup>,
    classes: Vec<SubgroupClass>,
    /// `below[b]` lists every class with a conjugate inside a member of `b`.
    below: Vec<Vec<bool>>,
    edges: Vec<(usize, usize)>,
    lookup: HashMap<ElemSet, usize>,
}

pub fn enumerate_subgroups(group: Arc<FiniteGroup>) -> Result<SubgroupLattice, LatticeError> {
    SubgroupLattice::enumerate(group, DEFAULT_LATTICE_CAP)
}

/// Rank of each element when the group's permutations are sorted.
fn lex_ranks(group: &FiniteGroup) -> Vec<u32> {
    let mut ids: Vec<usize> = (0..group.order()).collect();
    ids.sort_by(|&a, &b| group.element(a).cmp(group.element(b)));
    let mut rank = vec![0u32; ids.len()];
    for (r, id) in ids.into_iter().enumerate() {
        rank[id] = r as u32;
    }
    rank
}

fn canonical_key(h: &Subgroup, ranks: &[u32]) -> Vec<u32> {
    let mut key: Vec<u32> = h.members().map(|m| ranks[m]).collect();
    key.sort_unstable();
    key
}

struct RawClass {
    conjugates: Vec<Subgroup>,
}

impl RawClass {
    /// Conjugates of `h`, listed as the orbit of the canonical
    /// representative so that the order does not depend on `h`.
    fn new(group: &FiniteGroup, ranks: &[u32], h: &Subgroup) -> Self {
        let best = h
            .conjugates(group)
            .into_iter()
            .min_by_key(|c| canonical_key(c, ranks))
            .unwrap();
        // regenerate the representative's generators from its own members
        let rep = Subgroup::from_members(group, best.set().clone());
        RawClass {
            conjugates: rep.conjugates(group),
        }
    }
}

impl SubgroupLattice {
    pub fn enumerate(group: Arc<FiniteGroup>, cap: usize) -> Result<Self, LatticeError> {
        let order = group.order();
        if order > cap {
            return Err(LatticeError::CapExceeded { cap, order });
        }
        let ranks = lex_ranks(&group);
        let mut lookup: HashMap<ElemSet, usize> = HashMap::new();
        let mut raw: Vec<RawClass> = Vec::new();
        let mut add = |h: Subgroup, raw: &mut Vec<RawClass>| {
            if !lookup.contains_key(h.set()) {
                let class = RawClass::new(&group, &ranks, &h);
                for c in &class.conjugates {
                    lookup.insert(c.set().clone(), raw.len());
                }
                raw.push(class);
            }
        };

        for g in 0..order {
            add(subgroup_closure(&group, &[g]), &mut raw);
        }
        let mut next = 0;
        while next < raw.len() {
            let rep = raw[next].conjugates[0].clone();
            for g in 0..order {
                if rep.contains(g) {
                    continue;
                }
                let mut seed = rep.generator_ids().to_vec();
                seed.push(g);
                add(subgroup_closure(&group, &seed), &mut raw);
            }
            next += 1;
        }
        Ok(Self::from_raw(group, raw, &ranks))
    }

    /// Rebuilds a lattice from one subgroup per conjugacy class, as stored
    /// by a cache. Fails unless the classes are distinct, contain every
    /// cyclic subgroup and are closed under adjoining one element, which
    /// together force every subgroup to be present.
    pub fn from_representatives(
        group: Arc<FiniteGroup>,
        representatives: &[Subgroup],
        cap: usize,
    ) -> Result<Self, LatticeError> {
        let order = group.order();
        if order > cap {
            return Err(LatticeError::CapExceeded { cap, order });
        }
        let ranks = lex_ranks(&group);
        let mut lookup: HashMap<ElemSet, usize> = HashMap::new();
        let mut raw: Vec<RawClass> = Vec::new();
        for h in representatives {
            let closed = subgroup_closure(&group, &h.to_vec());
            if closed != *h {
                return Err(LatticeError::Incomplete(
                    "a representative is not a subgroup".into(),
                ));
            }
            if lookup.contains_key(h.set()) {
                return Err(LatticeError::Incomplete(
                    "two representatives are conjugate".into(),
                ));
            }
            let class = RawClass::new(&group, &ranks, h);
            for c in &class.conjugates {
                lookup.insert(c.set().clone(), raw.len());
            }
            raw.push(class);
        }
        for g in 0..order {
            if !lookup.contains_key(subgroup_closure(&group, &[g]).set()) {
                return Err(LatticeError::Incomplete(format!(
                    "cyclic subgroup of element {g} missing"
                )));
            }
        }
        for class in &raw {
            let rep = &class.conjugates[0];
            for g in (0..order).filter(|&g| !rep.contains(g)) {
                let mut seed = rep.generator_ids().to_vec();
                seed.push(g);
                if !lookup.contains_key(subgroup_closure(&group, &seed).set()) {
                    return Err(LatticeError::Incomplete(
                        "not closed under adjoining elements".into(),
                    ));
                }
            }
        }
        Ok(Self::from_raw(group, raw, &ranks))
    }

    fn from_raw(group: Arc<FiniteGroup>, raw: Vec<RawClass>, ranks: &[u32]) -> Self {
        let order = group.order();
        // subgroups of index at most two are normal; their intersection is the core
        let mut core = ElemSet::from_ids(order, 0..order);
        for r in &raw {
            let h = &r.conjugates[0];
            if h.order() * 2 >= order {
                core = core.intersection(h.set());
            }
        }
        struct Pending {
            conjugates: Vec<Subgroup>,
            iso_type: String,
            fp: Fingerprint,
            in_core: bool,
            key: Vec<u32>,
        }
        let mut pending: Vec<Pending> = raw
            .into_iter()
            .map(|r| {
                let rep = &r.conjugates[0];
                let (h, _) = rep.to_group(&group);
                Pending {
                    iso_type: iso_label(&h),
                    fp: fingerprint(&h),
                    in_core: rep.set().is_subset(&core),
                    key: canonical_key(rep, ranks),
                    conjugates: r.conjugates,
                }
            })
            .collect();
        pending.sort_by(|a, b| {
            (
                a.conjugates[0].order(),
                &a.iso_type,
                a.in_core,
                a.conjugates.len(),
                &a.key,
            )
                .cmp(&(
                    b.conjugates[0].order(),
                    &b.iso_type,
                    b.in_core,
                    b.conjugates.len(),
                    &b.key,
                ))
        });

        let mut classes: Vec<SubgroupClass> = Vec::with_capacity(pending.len());
        for p in &pending {
            let twins: Vec<&Pending> = pending
                .iter()
                .filter(|q| q.iso_type == p.iso_type)
                .collect();
            let label = if twins.len() == 1 {
                p.iso_type.clone()
            } else {
                let pos = twins.iter().position(|q| std::ptr::eq(*q, p)).unwrap();
                format!("{}_{}", p.iso_type, (b'A' + pos as u8) as char)
            };
            classes.push(SubgroupClass {
                representative: p.conjugates[0].clone(),
                class_size: p.conjugates.len(),
                label,
                iso_type: p.iso_type.clone(),
                iso_fingerprint: p.fp.clone(),
                is_normal: p.conjugates.len() == 1,
                conjugates: p.conjugates.clone(),
            });
        }

        let mut lookup = HashMap::new();
        for (i, c) in classes.iter().enumerate() {
            for s in &c.conjugates {
                lookup.insert(s.set().clone(), i);
            }
        }

        let n = classes.len();
        let mut below = vec![vec![false; n]; n];
        for b in 0..n {
            let big = classes[b].representative.set();
            for a in 0..n {
                let (oa, ob) = (classes[a].order(), classes[b].order());
                below[b][a] = a == b
                    || (oa < ob
                        && ob % oa == 0
                        && classes[a].conjugates.iter().any(|s| s.set().is_subset(big)));
            }
        }
        let mut edges = Vec::new();
        for b in 0..n {
            for a in 0..n {
                if a == b || !below[b][a] {
                    continue;
                }
                let covered = (0..n).any(|c| c != a && c != b && below[b][c] && below[c][a]);
                if !covered {
                    edges.push((a, b));
                }
            }
        }
        edges.sort_unstable();

        SubgroupLattice {
            group,
            classes,
            below,
            edges,
            lookup,
        }
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn classes(&self) -> &[SubgroupClass] {
        &self.classes
    }

    pub fn class(&self, index: usize) -> &SubgroupClass {
        &self.classes[index]
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    /// Covering pairs `(smaller, larger)` of the containment order.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }

    /// True if some conjugate of class `a` lies in class `b`'s members.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        self.below[b][a]
    }

    /// Total number of subgroups, counting conjugates separately.
    pub fn total_subgroups(&self) -> usize {
        self.classes.iter().map(|c| c.class_size).sum()
    }

    /// The class containing `h`.
    ///
    /// # Panics
    /// If `h` is not a subgroup of the lattice's group.
    pub fn identify_class(&self, h: &Subgroup) -> usize {
        *self
            .lookup
            .get(h.set())
            .expect("argument is a subgroup of the lattice's group")
    }

    /// True if `a` and `b` together generate the whole group.
    pub fn generates(&self, a: &Subgroup, b: &Subgroup) -> bool {
        let mut seed = a.generator_ids().to_vec();
        seed.extend_from_slice(b.generator_ids());
        subgroup_closure(&self.group, &seed).order() == self.group.order()
    }

    /// Class of the concrete intersection `a ∩ b`.
    pub fn intersection_class(&self, a: &Subgroup, b: &Subgroup) -> usize {
        self.identify_class(&a.intersection(&self.group, b))
    }

    /// Intersection of all subgroups of index at most two.
    pub fn index_two_core(&self) -> Subgroup {
        let order = self.group.order();
        let mut core = ElemSet::from_ids(order, 0..order);
        for c in self.classes.iter().filter(|c| c.order() * 2 >= order) {
            core = core.intersection(c.representative.set());
        }
        Subgroup::from_members(&self.group, core)
    }

    pub fn trivial_class(&self) -> usize {
        0
    }

    pub fn whole_class(&self) -> usize {
        self.classes.len() - 1
    }

    /// Every subgroup of `class`'s representative.
    pub fn subgroups_of(&self, class: usize) -> Vec<Subgroup> {
        self.subgroups_within(&self.classes[class].representative)
    }

    /// Every subgroup of `x`, in class order.
    pub fn subgroups_within(&self, x: &Subgroup) -> Vec<Subgroup> {
        self.classes
            .iter()
            .filter(|c| x.order().is_multiple_of(c.order()))
            .flat_map(|c| c.conjugates.iter())
            .filter(|s| s.set().is_subset(x.set()))
            .cloned()
            .collect()
    }
}
