//! The Oliver property: a finite group is non-Oliver iff it has a chain
//! `P ⊴ H ⊴ X` with `|P|` and `[X:H]` prime powers and `H/P` cyclic.

use std::collections::HashSet;
use std::sync::Arc;

use thiserror::Error;

use crate::group::{is_prime_power, quotient, FiniteGroup, Permutation, Subgroup};
use crate::lattice::{enumerate_subgroups, LatticeError, SubgroupLattice};

/// A chain `P ⊴ H ⊴ X` certifying that `X` is not an Oliver group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OliverWitness {
    pub p: Subgroup,
    pub h: Subgroup,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OliverVerdict {
    pub is_oliver: bool,
    pub witness: Option<OliverWitness>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("witness rejected: {0}")]
pub struct WitnessError(pub String);

/// Scans normal subgroups `H` of `x` with prime-power index, largest
/// first, and inside each the normal subgroups `P` of prime-power order,
/// largest first, for a cyclic quotient `H/P`.
pub fn oliver_verdict(lattice: &SubgroupLattice, x: &Subgroup) -> OliverVerdict {
    let group = lattice.group();
    let subs = lattice.subgroups_within(x);
    let mut hs: Vec<&Subgroup> = subs
        .iter()
        .filter(|h| is_prime_power(x.order() / h.order()) && h.is_normal_in(group, x))
        .collect();
    hs.sort_by_key(|h| std::cmp::Reverse(h.order()));
    for h in hs {
        let (h_group, embed) = h.to_group(group);
        let local_id = |g: usize| embed.iter().position(|&e| e == g).expect("member of h");
        let mut ps: Vec<&Subgroup> = subs
            .iter()
            .filter(|p| {
                is_prime_power(p.order()) && p.is_subgroup_of(h) && p.is_normal_in(group, h)
            })
            .collect();
        ps.sort_by_key(|p| std::cmp::Reverse(p.order()));
        for p in ps {
            let local_p = crate::group::subgroup_closure(
                &h_group,
                &p.generator_ids()
                    .iter()
                    .map(|&g| local_id(g))
                    .collect::<Vec<_>>(),
            );
            let q = quotient(&h_group, &local_p).expect("p is normal in h");
            if q.is_cyclic() {
                return OliverVerdict {
                    is_oliver: false,
                    witness: Some(OliverWitness {
                        p: p.clone(),
                        h: h.clone(),
                    }),
                };
            }
        }
    }
    OliverVerdict {
        is_oliver: true,
        witness: None,
    }
}

/// Verdict for a whole group, building its lattice first.
pub fn is_oliver(group: Arc<FiniteGroup>) -> Result<OliverVerdict, LatticeError> {
    let lattice = enumerate_subgroups(group)?;
    let whole = lattice.group().whole();
    Ok(oliver_verdict(&lattice, &whole))
}

/// Re-checks a witness for `x ≤ group` directly on permutations, sharing
/// no code with the scan.
pub fn verify_witness(
    group: &FiniteGroup,
    x: &Subgroup,
    witness: &OliverWitness,
) -> Result<(), WitnessError> {
    let perms = |s: &Subgroup| -> Vec<Permutation> {
        s.members().map(|m| group.element(m).clone()).collect()
    };
    let xs = perms(x);
    let hs = perms(&witness.h);
    let ps = perms(&witness.p);
    let x_set: HashSet<&Permutation> = xs.iter().collect();
    let h_set: HashSet<&Permutation> = hs.iter().collect();
    let p_set: HashSet<&Permutation> = ps.iter().collect();
    let fail = |msg: &str| Err(WitnessError(msg.to_string()));

    for (name, set, list) in [("H", &h_set, &hs), ("P", &p_set, &ps)] {
        for a in list {
            for b in list {
                if !set.contains(&a.compose(b)) {
                    return fail(&format!("{name} is not closed"));
                }
            }
        }
    }
    if !hs.iter().all(|h| x_set.contains(h)) {
        return fail("H is not contained in X");
    }
    if !ps.iter().all(|p| h_set.contains(p)) {
        return fail("P is not contained in H");
    }
    if !is_prime_power(ps.len()) {
        return fail("|P| is not a prime power");
    }
    if xs.len() % hs.len() != 0 || !is_prime_power(xs.len() / hs.len()) {
        return fail("[X:H] is not a prime power");
    }
    for g in &xs {
        let gi = g.inverse();
        if !hs.iter().all(|h| h_set.contains(&gi.compose(h).compose(g))) {
            return fail("H is not normal in X");
        }
    }
    for g in &hs {
        let gi = g.inverse();
        if !ps.iter().all(|p| p_set.contains(&gi.compose(p).compose(g))) {
            return fail("P is not normal in H");
        }
    }
    let index = hs.len() / ps.len();
    let coset_order = |h: &Permutation| {
        let mut power = h.clone();
        let mut k = 1;
        while !p_set.contains(&power) {
            power = power.compose(h);
            k += 1;
        }
        k
    };
    if !hs.iter().any(|h| coset_order(h) == index) {
        return fail("H/P is not cyclic");
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::group::{generate_group, Permutation};

    #[test]
    fn p_groups_witness_themselves() {
        let d8 = Arc::new(
            generate_group(&[
                Permutation::parse_cycles("(1 2 3 4)", 4).unwrap(),
                Permutation::parse_cycles("(1 3)", 4).unwrap(),
            ])
            .unwrap(),
        );
        let v = is_oliver(Arc::clone(&d8)).unwrap();
        assert!(!v.is_oliver);
        let w = v.witness.unwrap();
        assert_eq!(w.p.order(), 8);
        assert_eq!(w.h.order(), 8);
        verify_witness(&d8, &d8.whole(), &w).unwrap();
    }

    #[test]
    fn s5_and_a5() {
        let l = enumerate_subgroups(Arc::new(fixtures::s5())).unwrap();
        let g = l.group();
        assert!(oliver_verdict(&l, &g.whole()).is_oliver);
        let a5 = l.class(l.by_label("A5").unwrap()).representative.clone();
        assert!(oliver_verdict(&l, &a5).is_oliver);
        let s4 = l.class(l.by_label("S4").unwrap()).representative.clone();
        let v = oliver_verdict(&l, &s4);
        assert!(!v.is_oliver);
        verify_witness(g, &s4, v.witness.as_ref().unwrap()).unwrap();
    }

    #[test]
    fn verifier_rejects_bad_chains() {
        let l = enumerate_subgroups(Arc::new(fixtures::s5())).unwrap();
        let g = l.group();
        let s5 = g.whole();
        // S5 / C1 is not cyclic
        let bad = OliverWitness {
            p: g.trivial(),
            h: s5.clone(),
        };
        assert!(verify_witness(g, &s5, &bad).is_err());
        // S4 is not normal in S5
        let s4 = l.class(l.by_label("S4").unwrap()).representative.clone();
        let bad = OliverWitness {
            p: l.class(l.by_label("C2^2_B").unwrap())
                .representative
                .clone(),
            h: s4,
        };
        assert!(verify_witness(g, &s5, &bad).is_err());
    }
}
