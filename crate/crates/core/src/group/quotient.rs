use super::{FiniteGroup, GroupError, Permutation, Subgroup};

/// `G/N` for a normal subgroup `N`.
///
/// Cosets are indexed in order of their smallest element id, so coset `0`
/// is `N` itself.
#[derive(Debug)]
pub struct QuotientGroup {
    normal: Subgroup,
    cosets: Vec<Vec<usize>>,
    coset_of: Vec<usize>,
    table: Vec<usize>,
}

pub fn quotient(group: &FiniteGroup, normal: &Subgroup) -> Result<QuotientGroup, GroupError> {
    if !normal.is_normal(group) {
        return Err(GroupError::NotNormal);
    }
    let n = group.order();
    let mut coset_of = vec![usize::MAX; n];
    let mut cosets: Vec<Vec<usize>> = Vec::new();
    for g in 0..n {
        if coset_of[g] != usize::MAX {
            continue;
        }
        let mut coset: Vec<usize> = normal.members().map(|m| group.mul(g, m)).collect();
        coset.sort_unstable();
        for &x in &coset {
            coset_of[x] = cosets.len();
        }
        cosets.push(coset);
    }
    let k = cosets.len();
    let mut table = vec![0; k * k];
    for i in 0..k {
        for j in 0..k {
            table[i * k + j] = coset_of[group.mul(cosets[i][0], cosets[j][0])];
        }
    }
    Ok(QuotientGroup {
        normal: normal.clone(),
        cosets,
        coset_of,
        table,
    })
}

impl QuotientGroup {
    pub fn order(&self) -> usize {
        self.cosets.len()
    }

    pub fn normal_subgroup(&self) -> &Subgroup {
        &self.normal
    }

    pub fn cosets(&self) -> &[Vec<usize>] {
        &self.cosets
    }

    pub fn coset_of(&self, g: usize) -> usize {
        self.coset_of[g]
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.table[i * self.order() + j]
    }

    /// Order of coset `i` in the quotient.
    pub fn coset_order(&self, i: usize) -> usize {
        let mut x = i;
        let mut k = 1;
        while x != 0 {
            x = self.mul(x, i);
            k += 1;
        }
        k
    }

    pub fn is_cyclic(&self) -> bool {
        (0..self.order()).any(|i| self.coset_order(i) == self.order())
    }

    /// Left multiplication by `g` on the cosets.
    pub fn action_of(&self, group: &FiniteGroup, g: usize) -> Permutation {
        let images = self
            .cosets
            .iter()
            .map(|c| self.coset_of[group.mul(g, c[0])] as u32)
            .collect();
        Permutation::from_images(images).expect("left multiplication permutes cosets")
    }

    /// The quotient as a permutation group on its cosets, generated by the
    /// images of the parent's generators.
    pub fn to_group(&self, group: &FiniteGroup) -> FiniteGroup {
        let gens: Vec<Permutation> = group
            .generator_ids()
            .iter()
            .map(|&g| self.action_of(group, g))
            .collect();
        FiniteGroup::generate(&gens, self.order()).expect("quotient has order |G|/|N|")
    }

    /// Element ids of `image` (a group built by [`Self::to_group`]) for each
    /// parent element: the projection `G → G/N`.
    pub fn projection(&self, group: &FiniteGroup, image: &FiniteGroup) -> Vec<usize> {
        let by_coset: Vec<usize> = self
            .cosets
            .iter()
            .map(|c| {
                image
                    .id_of(&self.action_of(group, c[0]))
                    .expect("coset action lies in quotient")
            })
            .collect();
        (0..group.order())
            .map(|g| by_coset[self.coset_of[g]])
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, subgroup_closure};

    fn s4() -> FiniteGroup {
        generate_group(&[
            Permutation::parse_cycles("(1 2)", 4).unwrap(),
            Permutation::parse_cycles("(1 2 3 4)", 4).unwrap(),
        ])
        .unwrap()
    }

    #[test]
    fn s4_mod_klein_is_s3() {
        let g = s4();
        let v = subgroup_closure(
            &g,
            &[
                g.id_of(&Permutation::parse_cycles("(1 2)(3 4)", 4).unwrap())
                    .unwrap(),
                g.id_of(&Permutation::parse_cycles("(1 3)(2 4)", 4).unwrap())
                    .unwrap(),
            ],
        );
        let q = quotient(&g, &v).unwrap();
        assert_eq!(q.order(), 6);
        assert!(!q.is_cyclic());
        // well-defined on every pair of representatives
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(q.coset_of(g.mul(a, b)), q.mul(q.coset_of(a), q.coset_of(b)));
            }
        }
        let qg = q.to_group(&g);
        assert_eq!(qg.order(), 6);
        let proj = q.projection(&g, &qg);
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(proj[g.mul(a, b)], qg.mul(proj[a], proj[b]));
            }
        }
    }

    #[test]
    fn trivial_and_non_normal() {
        let g = s4();
        let q = quotient(&g, &g.whole()).unwrap();
        assert_eq!(q.order(), 1);
        assert!(q.is_cyclic());
        let t = g
            .id_of(&Permutation::parse_cycles("(1 2)", 4).unwrap())
            .unwrap();
        assert_eq!(
            quotient(&g, &subgroup_closure(&g, &[t])).unwrap_err(),
            GroupError::NotNormal
        );
    }
}
