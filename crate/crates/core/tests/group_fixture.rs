mod common;

use std::collections::{BTreeMap, HashSet};

use common::{
    fixture, order_by_powers, preimage, projection, s5_test_subgroups, CLASS_LABELS, CLASS_ORDERS,
    CLASS_SIZES,
};
use sphex::fixtures;
use sphex::group::{generate_group, is_isomorphic, quotient, subgroup_closure, Permutation};

#[test]
fn classes_have_expected_sizes_and_orders() {
    let f = fixture();
    assert_eq!(f.group.order(), 240);
    let classes = &f.group.classes().classes;
    let sizes: Vec<usize> = classes.iter().map(|c| c.size()).collect();
    let orders: Vec<u32> = classes.iter().map(|c| c.order_of_rep).collect();
    assert_eq!(sizes, CLASS_SIZES);
    assert_eq!(orders, CLASS_ORDERS);
    assert_eq!(f.table.class_labels(), CLASS_LABELS);
}

#[test]
fn classes_agree_with_brute_force_orbits() {
    let f = fixture();
    let perms = f.group.elements();
    let mut seen: HashSet<&Permutation> = HashSet::new();
    let mut sizes = Vec::new();
    for x in perms {
        if seen.contains(x) {
            continue;
        }
        let orbit: HashSet<Permutation> = perms
            .iter()
            .map(|g| g.inverse().compose(x).compose(g))
            .collect();
        for y in &orbit {
            seen.insert(perms.iter().find(|p| *p == y).unwrap());
        }
        sizes.push((order_by_powers(x) as u32, orbit.len()));
    }
    sizes.sort_unstable();
    let mut expected: Vec<(u32, usize)> = CLASS_ORDERS.into_iter().zip(CLASS_SIZES).collect();
    expected.sort_unstable();
    assert_eq!(sizes, expected);
}

#[test]
fn element_order_histogram() {
    let f = fixture();
    let mut brute: BTreeMap<u32, usize> = BTreeMap::new();
    for p in f.group.elements() {
        *brute.entry(order_by_powers(p) as u32).or_default() += 1;
    }
    assert_eq!(f.group.order_histogram(), brute);
    // sums of the class sizes per order
    let mut from_table: BTreeMap<u32, usize> = BTreeMap::new();
    for (o, s) in CLASS_ORDERS.into_iter().zip(CLASS_SIZES) {
        *from_table.entry(o).or_default() += s;
    }
    assert_eq!(brute, from_table);
}

#[test]
fn subgroup_histograms_used_in_the_fixed_point_arguments() {
    let f = fixture();
    let hist = |label: &str| -> Vec<(u32, usize)> {
        let h = f.class(label);
        let mut m: BTreeMap<u32, usize> = BTreeMap::new();
        for x in h.members() {
            *m.entry(order_by_powers(f.group.element(x)) as u32)
                .or_default() += 1;
        }
        m.into_iter().collect()
    };
    assert_eq!(hist("SL(2,3)"), [(1, 1), (2, 1), (3, 8), (4, 6), (6, 8)]);
    assert_eq!(hist("Q8_A"), [(1, 1), (2, 1), (4, 6)]);
    assert_eq!(hist("Q16"), [(1, 1), (2, 1), (4, 10), (8, 4)]);
    assert_eq!(
        hist("[24,4]"),
        [(1, 1), (2, 1), (3, 2), (4, 14), (6, 2), (12, 4)]
    );
    assert_eq!(
        hist("SL(2,5)"),
        [(1, 1), (2, 1), (3, 20), (4, 30), (5, 24), (6, 20), (10, 24)]
    );
}

#[test]
fn center_and_index_two_subgroup() {
    let f = fixture();
    let g = &f.group;
    let perms = g.elements();
    let central = perms
        .iter()
        .filter(|z| perms.iter().all(|x| x.compose(z) == z.compose(x)))
        .count();
    assert_eq!(central, 2);
    assert_eq!(g.center().order(), 2);

    // every index-two subgroup contains all squares
    let squares: Vec<usize> = (0..g.order()).map(|x| g.mul(x, x)).collect();
    let core = subgroup_closure(g, &squares);
    assert_eq!(core.order(), 120);
    let index_two: Vec<_> = f
        .lattice
        .classes()
        .iter()
        .filter(|c| c.order() == 120)
        .collect();
    assert_eq!(index_two.len(), 1);
    assert!(index_two[0].is_normal);
    assert_eq!(index_two[0].representative, core);

    let commutators: Vec<usize> = core
        .members()
        .flat_map(|a| core.members().map(move |b| (a, b)))
        .map(|(a, b)| g.mul(g.mul(g.inv(a), g.inv(b)), g.mul(a, b)))
        .collect();
    assert_eq!(subgroup_closure(g, &commutators), core);
}

#[test]
fn quotient_by_center_is_s5() {
    let f = fixture();
    let q = quotient(&f.group, &f.group.center())
        .unwrap()
        .to_group(&f.group);
    let s5 = fixtures::s5();
    assert_eq!(q.order(), 120);
    assert_eq!(q.order_histogram(), s5.order_histogram());
    assert!(is_isomorphic(&q, &s5).unwrap());
}

#[test]
fn preimages_of_the_s5_subgroups() {
    let f = fixture();
    let s5 = fixtures::s5();
    let pi = projection();
    let [l, k1, k2] = s5_test_subgroups(&s5);

    let d8 = generate_group(&[
        Permutation::parse_cycles("(1 2 3 4)", 4).unwrap(),
        Permutation::parse_cycles("(1 3)", 4).unwrap(),
    ])
    .unwrap();
    assert!(is_isomorphic(&k2.to_group(&s5).0, &d8).unwrap());
    assert_eq!(k1.intersection(&s5, &k2), l);

    let (pl, pk1, pk2) = (preimage(&pi, &l), preimage(&pi, &k1), preimage(&pi, &k2));
    let label = |h| f.lattice.class(f.lattice.identify_class(h)).label.as_str();
    assert_eq!(label(&pl), "C4_A");
    assert_eq!(label(&pk1), "Q8_A");
    assert_eq!(label(&pk2), "Q16");
    assert_eq!(pk1.intersection(&f.group, &pk2), pl);
    assert!(f.lattice.generates(&pk1, &pk2));
}
