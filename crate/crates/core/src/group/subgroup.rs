use std::collections::{BTreeMap, HashSet, VecDeque};

use super::{ElemSet, FiniteGroup, Permutation};

/// A subgroup of a parent [`FiniteGroup`], stored as a member bitset over the
/// parent's element ids together with a small generating set.
#[derive(Clone, Debug)]
pub struct Subgroup {
    set: ElemSet,
    generators: Vec<usize>,
}

impl PartialEq for Subgroup {
    fn eq(&self, other: &Self) -> bool {
        self.set == other.set
    }
}

impl Eq for Subgroup {}

impl Subgroup {
    pub(crate) fn from_parts(set: ElemSet, generators: Vec<usize>) -> Self {
        Subgroup { set, generators }
    }

    /// Wraps a member set already known to be a subgroup, deriving a
    /// generating set greedily.
    pub fn from_members(group: &FiniteGroup, set: ElemSet) -> Self {
        let mut gens = Vec::new();
        let mut current = ElemSet::from_ids(group.order(), [FiniteGroup::IDENTITY]);
        for id in set.iter() {
            if !current.contains(id) {
                gens.push(id);
                current = close(group, &gens);
            }
        }
        debug_assert_eq!(current, set);
        Subgroup {
            set,
            generators: gens,
        }
    }

    pub fn order(&self) -> usize {
        self.set.len()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.set.contains(id)
    }

    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        self.set.iter()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.set.to_vec()
    }

    pub fn set(&self) -> &ElemSet {
        &self.set
    }

    pub fn generator_ids(&self) -> &[usize] {
        &self.generators
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.set.is_subset(&other.set)
    }

    pub fn intersection(&self, group: &FiniteGroup, other: &Subgroup) -> Subgroup {
        Subgroup::from_members(group, self.set.intersection(&other.set))
    }

    /// `g⁻¹ H g`.
    pub fn conjugate_by(&self, group: &FiniteGroup, g: usize) -> Subgroup {
        let set = ElemSet::from_ids(
            group.order(),
            self.set.iter().map(|h| group.conjugate(h, g)),
        );
        let generators = self
            .generators
            .iter()
            .map(|&h| group.conjugate(h, g))
            .collect();
        Subgroup { set, generators }
    }

    /// Normal in `group` iff conjugation by each generator of the group
    /// keeps each generator of the subgroup inside it.
    pub fn is_normal(&self, group: &FiniteGroup) -> bool {
        group.generator_ids().iter().all(|&g| {
            self.generators
                .iter()
                .all(|&h| self.contains(group.conjugate(h, g)))
        })
    }

    /// Normal in the subgroup `over` (which must contain `self`).
    pub fn is_normal_in(&self, group: &FiniteGroup, over: &Subgroup) -> bool {
        over.generators.iter().all(|&g| {
            self.generators
                .iter()
                .all(|&h| self.contains(group.conjugate(h, g)))
        })
    }

    pub fn is_cyclic(&self, group: &FiniteGroup) -> bool {
        self.members()
            .any(|h| group.element_order(h) as usize == self.order())
    }

    /// All distinct conjugates `g⁻¹Hg`, found as the orbit under conjugation
    /// by the parent's generators. The first entry is `self`.
    pub fn conjugates(&self, group: &FiniteGroup) -> Vec<Subgroup> {
        let mut seen: HashSet<ElemSet> = HashSet::from([self.set.clone()]);
        let mut out = vec![self.clone()];
        let mut queue = VecDeque::from([0usize]);
        while let Some(i) = queue.pop_front() {
            for &g in group.generator_ids() {
                let c = out[i].conjugate_by(group, g);
                if seen.insert(c.set.clone()) {
                    queue.push_back(out.len());
                    out.push(c);
                }
            }
        }
        out
    }

    /// The subgroup as a standalone permutation group, together with the
    /// map from the new group's element ids to parent ids.
    pub fn to_group(&self, group: &FiniteGroup) -> (FiniteGroup, Vec<usize>) {
        let gens: Vec<Permutation> = if self.generators.is_empty() {
            vec![Permutation::identity(group.degree())]
        } else {
            self.generators
                .iter()
                .map(|&g| group.element(g).clone())
                .collect()
        };
        let sub = FiniteGroup::generate(&gens, self.order().max(1))
            .expect("subgroup closure fits its own order");
        let embed = sub
            .elements()
            .iter()
            .map(|p| group.id_of(p).expect("subgroup element lies in parent"))
            .collect();
        (sub, embed)
    }
}

fn close(group: &FiniteGroup, gens: &[usize]) -> ElemSet {
    let mut set = ElemSet::from_ids(group.order(), [FiniteGroup::IDENTITY]);
    let mut queue = VecDeque::from([FiniteGroup::IDENTITY]);
    while let Some(x) = queue.pop_front() {
        for &g in gens {
            let y = group.mul(x, g);
            if set.insert(y) {
                queue.push_back(y);
            }
        }
    }
    set
}

/// Smallest subgroup containing `seed`.
pub fn subgroup_closure(group: &FiniteGroup, seed: &[usize]) -> Subgroup {
    let mut gens: Vec<usize> = Vec::new();
    let mut current = ElemSet::from_ids(group.order(), [FiniteGroup::IDENTITY]);
    for &s in seed {
        if !current.contains(s) {
            gens.push(s);
            current = close(group, &gens);
        }
    }
    Subgroup {
        set: current,
        generators: gens,
    }
}

pub fn element_order_histogram(group: &FiniteGroup, h: &Subgroup) -> BTreeMap<u32, usize> {
    let mut hist = BTreeMap::new();
    for m in h.members() {
        *hist.entry(group.element_order(m)).or_insert(0) += 1;
    }
    hist
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::generate_group;

    fn s4() -> FiniteGroup {
        generate_group(&[
            Permutation::parse_cycles("(1 2)", 4).unwrap(),
            Permutation::parse_cycles("(1 2 3 4)", 4).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn closure_basics() {
        let g = s4();
        let triv = subgroup_closure(&g, &[0]);
        assert_eq!(triv.order(), 1);
        let all: Vec<usize> = (0..g.order()).collect();
        let whole = subgroup_closure(&g, &all);
        assert_eq!(whole.order(), 24);
        assert!(whole.generator_ids().len() <= 3);
        let c = g
            .id_of(&Permutation::parse_cycles("(1 2 3)", 4).unwrap())
            .unwrap();
        assert_eq!(subgroup_closure(&g, &[c]).order(), 3);
    }

    #[test]
    fn closure_idempotent_and_monotone() {
        let g = s4();
        for a in 0..g.order() {
            let h = subgroup_closure(&g, &[a]);
            let again = subgroup_closure(&g, &h.to_vec());
            assert_eq!(h.set(), again.set());
            for b in [1usize, 5, 11] {
                let hb = subgroup_closure(&g, &[a, b]);
                assert!(h.is_subgroup_of(&hb));
            }
        }
    }

    #[test]
    fn normality_and_conjugates() {
        let g = s4();
        let a4 = subgroup_closure(
            &g,
            &[
                g.id_of(&Permutation::parse_cycles("(1 2 3)", 4).unwrap())
                    .unwrap(),
                g.id_of(&Permutation::parse_cycles("(2 3 4)", 4).unwrap())
                    .unwrap(),
            ],
        );
        assert_eq!(a4.order(), 12);
        assert!(a4.is_normal(&g));
        assert_eq!(a4.conjugates(&g).len(), 1);
        let t = g
            .id_of(&Permutation::parse_cycles("(1 2)", 4).unwrap())
            .unwrap();
        let c2 = subgroup_closure(&g, &[t]);
        assert!(!c2.is_normal(&g));
        assert_eq!(c2.conjugates(&g).len(), 6);
    }

    #[test]
    fn to_group_embeds() {
        let g = s4();
        let t = g
            .id_of(&Permutation::parse_cycles("(1 2 3 4)", 4).unwrap())
            .unwrap();
        let h = subgroup_closure(&g, &[t]);
        let (hg, embed) = h.to_group(&g);
        assert_eq!(hg.order(), 4);
        for (i, &e) in embed.iter().enumerate() {
            assert_eq!(hg.element(i), g.element(e));
        }
    }
}
