use std::collections::BTreeMap;

use super::{ElemSet, FiniteGroup, GroupError};

/// Largest order for which [`isomorphism`] runs the backtracking search.
pub const ISO_BACKTRACK_LIMIT: usize = 256;

/// Isomorphism invariants. Equal fingerprints are necessary but not
/// sufficient for isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub abelian: bool,
    /// `(element order, class size) -> number of classes`.
    pub class_types: BTreeMap<(u32, usize), usize>,
    pub order_histogram: BTreeMap<u32, usize>,
    pub derived_series: Vec<usize>,
}

pub fn fingerprint(group: &FiniteGroup) -> Fingerprint {
    let mut class_types = BTreeMap::new();
    for c in &group.classes().classes {
        *class_types.entry((c.order_of_rep, c.size())).or_insert(0) += 1;
    }
    Fingerprint {
        order: group.order(),
        abelian: group.is_abelian(),
        class_types,
        order_histogram: group.order_histogram(),
        derived_series: group.derived_series_orders(),
    }
}

/// An isomorphism `g -> h` as a map from element ids of `g` to element ids
/// of `h`, or `None` if the groups are not isomorphic.
///
/// Groups with differing fingerprints are rejected at any order; otherwise
/// orders above [`ISO_BACKTRACK_LIMIT`] give [`GroupError::SizeLimit`].
pub fn isomorphism(g: &FiniteGroup, h: &FiniteGroup) -> Result<Option<Vec<usize>>, GroupError> {
    if fingerprint(g) != fingerprint(h) {
        return Ok(None);
    }
    if g.order() > ISO_BACKTRACK_LIMIT {
        return Err(GroupError::SizeLimit {
            limit: ISO_BACKTRACK_LIMIT,
            order: g.order(),
        });
    }
    let gens = small_generating_set(g);
    let g_classes = g.classes();
    let h_classes = h.classes();
    let candidates: Vec<Vec<usize>> = gens
        .iter()
        .map(|&s| {
            let size = g_classes.classes[g_classes.class_of[s]].size();
            (0..h.order())
                .filter(|&t| {
                    h.element_order(t) == g.element_order(s)
                        && h_classes.classes[h_classes.class_of[t]].size() == size
                })
                .collect()
        })
        .collect();
    let mut images = Vec::with_capacity(gens.len());
    Ok(search(g, h, &gens, &candidates, &mut images))
}

pub fn is_isomorphic(g: &FiniteGroup, h: &FiniteGroup) -> Result<bool, GroupError> {
    isomorphism(g, h).map(|m| m.is_some())
}

fn search(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    candidates: &[Vec<usize>],
    images: &mut Vec<usize>,
) -> Option<Vec<usize>> {
    let k = images.len();
    if k == gens.len() {
        return extend(g, h, gens, images, true);
    }
    for &t in &candidates[k] {
        images.push(t);
        if extend(g, h, &gens[..=k], images, false).is_some() {
            if let Some(map) = search(g, h, gens, candidates, images) {
                return Some(map);
            }
        }
        images.pop();
    }
    None
}

/// Extends `gens[i] -> images[i]` along the Cayley graph of the subgroup
/// generated by `gens`. Succeeds if the extension is a well-defined
/// injective homomorphism; with `full` the subgroup must be all of `g`.
fn extend(
    g: &FiniteGroup,
    h: &FiniteGroup,
    gens: &[usize],
    images: &[usize],
    full: bool,
) -> Option<Vec<usize>> {
    let mut map = vec![usize::MAX; g.order()];
    let mut used = ElemSet::new(h.order());
    map[FiniteGroup::IDENTITY] = FiniteGroup::IDENTITY;
    used.insert(FiniteGroup::IDENTITY);
    let mut queue = vec![FiniteGroup::IDENTITY];
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        for (&s, &t) in gens.iter().zip(images) {
            let y = g.mul(x, s);
            let fy = h.mul(map[x], t);
            if map[y] == usize::MAX {
                if !used.insert(fy) {
                    return None;
                }
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    (!full || queue.len() == g.order()).then_some(map)
}

/// Greedy generating set, preferring elements of large order.
fn small_generating_set(g: &FiniteGroup) -> Vec<usize> {
    let mut ids: Vec<usize> = (0..g.order()).collect();
    ids.sort_by_key(|&x| (std::cmp::Reverse(g.element_order(x)), x));
    let mut gens = Vec::new();
    let mut current = super::subgroup_closure(g, &[]);
    for x in ids {
        if current.order() == g.order() {
            break;
        }
        if !current.contains(x) {
            gens.push(x);
            current = super::subgroup_closure(g, &gens);
        }
    }
    gens
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{generate_group, Permutation};

    fn grp(degree: usize, specs: &[&str]) -> FiniteGroup {
        let gens: Vec<Permutation> = specs
            .iter()
            .map(|s| Permutation::parse_cycles(s, degree).unwrap())
            .collect();
        generate_group(&gens).unwrap()
    }

    fn assert_is_isomorphism(g: &FiniteGroup, h: &FiniteGroup, map: &[usize]) {
        let mut seen = vec![false; h.order()];
        for &m in map {
            assert!(!seen[m]);
            seen[m] = true;
        }
        for a in 0..g.order() {
            for b in 0..g.order() {
                assert_eq!(map[g.mul(a, b)], h.mul(map[a], map[b]));
            }
        }
    }

    #[test]
    fn s3_two_ways() {
        let a = grp(3, &["(1 2)", "(1 2 3)"]);
        let b = grp(6, &["(1 2)(3 6)(4 5)", "(1 3 5)(2 4 6)"]);
        let map = isomorphism(&a, &b).unwrap().expect("S3 twice");
        assert_is_isomorphism(&a, &b, &map);
    }

    #[test]
    fn c6_is_not_s3() {
        let a = grp(3, &["(1 2)", "(1 2 3)"]);
        let c6 = grp(5, &["(1 2)(3 4 5)"]);
        assert!(!is_isomorphic(&a, &c6).unwrap());
    }

    #[test]
    fn d8_and_q8_share_no_fingerprint() {
        let d8 = grp(4, &["(1 2 3 4)", "(1 3)"]);
        let q8 = grp(8, &["(1 2 3 4)(5 6 7 8)", "(1 5 3 7)(2 8 4 6)"]);
        assert_eq!(q8.order(), 8);
        assert_ne!(fingerprint(&d8), fingerprint(&q8));
        assert!(!is_isomorphic(&d8, &q8).unwrap());
    }

    #[test]
    fn size_limit_applies_only_to_matching_fingerprints() {
        let s6 = grp(6, &["(1 2)", "(1 2 3 4 5 6)"]);
        let s6b = grp(6, &["(1 2)", "(2 3 4 5 6)"]);
        assert_eq!(
            isomorphism(&s6, &s6b).unwrap_err(),
            GroupError::SizeLimit {
                limit: ISO_BACKTRACK_LIMIT,
                order: 720
            }
        );
        let a6 = grp(6, &["(1 2 3)", "(2 3 4 5 6)"]);
        assert_eq!(a6.order(), 360);
        assert!(!is_isomorphic(&s6, &a6).unwrap());
    }

    #[test]
    fn s4_on_different_points() {
        let a = grp(4, &["(1 2)", "(1 2 3 4)"]);
        // S4 acting on the six 2-subsets of {1,2,3,4}
        let b = grp(6, &["(2 4)(3 5)", "(1 4 6 3)(2 5)"]);
        assert_eq!(b.order(), 24);
        let map = isomorphism(&a, &b).unwrap().expect("S4 twice");
        assert_is_isomorphism(&a, &b, &map);
    }
}
