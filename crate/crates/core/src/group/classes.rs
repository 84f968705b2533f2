use std::collections::VecDeque;

use super::FiniteGroup;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    /// Member whose permutation is lexicographically smallest.
    pub representative: usize,
    /// Sorted element ids.
    pub members: Vec<usize>,
    pub order_of_rep: u32,
    /// Order of the representative, plus a capital letter when several
    /// classes share that order (`4A`, `4B`).
    pub label: String,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// The conjugacy classes of a group together with the element-to-class map.
#[derive(Clone, Debug)]
pub struct ClassPartition {
    pub classes: Vec<ConjugacyClass>,
    pub class_of: Vec<usize>,
}

/// Classes sorted by (representative order, class size, smallest member id).
pub fn conjugacy_classes(group: &FiniteGroup) -> Vec<ConjugacyClass> {
    group.classes().classes.clone()
}

impl ClassPartition {
    pub(super) fn compute(group: &FiniteGroup) -> Self {
        let n = group.order();
        let mut assigned = vec![false; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for start in 0..n {
            if assigned[start] {
                continue;
            }
            assigned[start] = true;
            let mut orbit = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(x) = queue.pop_front() {
                for &g in group.generator_ids() {
                    let y = group.conjugate(x, g);
                    if !assigned[y] {
                        assigned[y] = true;
                        orbit.push(y);
                        queue.push_back(y);
                    }
                }
            }
            orbit.sort_unstable();
            raw.push(orbit);
        }
        raw.sort_by_key(|m| (group.element_order(m[0]), m.len(), m[0]));

        let mut classes: Vec<ConjugacyClass> = Vec::with_capacity(raw.len());
        for members in raw {
            let order = group.element_order(members[0]);
            let representative = *members
                .iter()
                .min_by(|&&a, &&b| group.element(a).cmp(group.element(b)))
                .unwrap();
            classes.push(ConjugacyClass {
                representative,
                members,
                order_of_rep: order,
                label: String::new(),
            });
        }
        let mut i = 0;
        while i < classes.len() {
            let order = classes[i].order_of_rep;
            let j = classes[i..]
                .iter()
                .position(|c| c.order_of_rep != order)
                .map_or(classes.len(), |k| i + k);
            for (k, c) in classes[i..j].iter_mut().enumerate() {
                c.label = if j - i == 1 {
                    order.to_string()
                } else {
                    format!("{}{}", order, (b'A' + k as u8) as char)
                };
            }
            i = j;
        }

        let mut class_of = vec![0; n];
        for (ci, c) in classes.iter().enumerate() {
            for &m in &c.members {
                class_of[m] = ci;
            }
        }
        ClassPartition { classes, class_of }
    }

    /// For each class, the class containing the `p`-th power of its
    /// representative.
    pub fn power_map(&self, group: &FiniteGroup, p: u64) -> Vec<usize> {
        self.classes
            .iter()
            .map(|c| self.class_of[group.pow(c.representative, p)])
            .collect()
    }

    pub fn by_label(&self, label: &str) -> Option<usize> {
        self.classes.iter().position(|c| c.label == label)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, Permutation};

    fn s5() -> FiniteGroup {
        generate_group(&[
            Permutation::parse_cycles("(1 2)", 5).unwrap(),
            Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
        ])
        .unwrap()
    }

    /// Brute force: `b` is conjugate to `a` iff some `g` has `g⁻¹ag = b`.
    fn brute_force_class_size(g: &FiniteGroup, a: usize) -> usize {
        let mut seen = vec![false; g.order()];
        for x in 0..g.order() {
            seen[g.conjugate(a, x)] = true;
        }
        seen.iter().filter(|&&s| s).count()
    }

    #[test]
    fn s5_classes_match_brute_force() {
        let g = s5();
        let part = g.classes();
        assert_eq!(part.classes.len(), 7);
        let total: usize = part.classes.iter().map(|c| c.size()).sum();
        assert_eq!(total, 120);
        for c in &part.classes {
            assert_eq!(c.size(), brute_force_class_size(&g, c.representative));
            assert_eq!(120 % c.size(), 0);
        }
        let transp = g
            .id_of(&Permutation::parse_cycles("(1 2)", 5).unwrap())
            .unwrap();
        let five = g
            .id_of(&Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap())
            .unwrap();
        assert_eq!(part.classes[part.class_of[transp]].size(), 10);
        assert_eq!(part.classes[part.class_of[five]].size(), 24);
    }

    #[test]
    fn labels_and_representatives() {
        let g = s5();
        let labels: Vec<&str> = g
            .classes()
            .classes
            .iter()
            .map(|c| c.label.as_str())
            .collect();
        assert_eq!(labels, ["1", "2A", "2B", "3", "4", "5", "6"]);
        let c2a = &g.classes().classes[1];
        assert_eq!(c2a.size(), 10);
        assert_eq!(g.element(c2a.representative).to_string(), "(4 5)");
    }

    #[test]
    fn power_map_of_s5() {
        let g = s5();
        let part = g.classes();
        let sq = part.power_map(&g, 2);
        // 4-cycles square into double transpositions, 6-elements into 3-cycles.
        assert_eq!(sq[4], 2);
        assert_eq!(sq[6], 3);
    }
}
