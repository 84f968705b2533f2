mod common;

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use common::{brute_force_subgroups, fixture, FIXTURE_EDGES, FIXTURE_NODES, S5_EDGES, S5_NODES};
use sphex::cli::load_or_build_lattice;
use sphex::fixtures;
use sphex::group::{ElemSet, Subgroup};
use sphex::lattice::{enumerate_subgroups, SubgroupLattice};

fn s5_lattice() -> SubgroupLattice {
    enumerate_subgroups(Arc::new(fixtures::s5())).unwrap()
}

fn edge_set(lattice: &SubgroupLattice) -> BTreeSet<(String, String)> {
    lattice.export().edges.into_iter().collect()
}

fn numbered_edges(nodes: &[&str], edges: &[(usize, usize)]) -> BTreeSet<(String, String)> {
    edges
        .iter()
        .map(|&(a, b)| (nodes[a - 1].to_string(), nodes[b - 1].to_string()))
        .collect()
}

fn normal_labels(lattice: &SubgroupLattice) -> Vec<&str> {
    lattice
        .classes()
        .iter()
        .filter(|c| c.is_normal)
        .map(|c| c.label.as_str())
        .collect()
}

#[test]
fn fixture_classes_and_edges() {
    let l = &fixture().lattice;
    assert_eq!(l.len(), 22);
    let labels: BTreeSet<&str> = l.classes().iter().map(|c| c.label.as_str()).collect();
    assert_eq!(labels, FIXTURE_NODES.iter().copied().collect());
    assert_eq!(l.edges().len(), 42);
    assert_eq!(edge_set(l), numbered_edges(&FIXTURE_NODES, &FIXTURE_EDGES));
    assert_eq!(normal_labels(l), ["C1", "C2", "SL(2,5)", "SL(2,5).C2"]);
}

#[test]
fn s5_classes_and_edges() {
    let l = s5_lattice();
    assert_eq!(l.len(), 19);
    assert_eq!(l.edges().len(), 37);
    assert_eq!(edge_set(&l), numbered_edges(&S5_NODES, &S5_EDGES));
    assert_eq!(normal_labels(&l), ["C1", "A5", "S5"]);
    assert_eq!(l.total_subgroups(), 156);
}

#[test]
fn s5_suffixes() {
    let l = s5_lattice();
    let g = l.group();
    let class = |label: &str| l.class(l.by_label(label).unwrap());
    let is_transposition = |x: usize| {
        let cycles = g.element(x).cycles();
        cycles.len() == 1 && cycles[0].len() == 2
    };
    let c2a = class("C2_A");
    assert_eq!(c2a.class_size, 10);
    assert!(c2a.representative.members().any(is_transposition));
    assert!(!class("C2_B").representative.members().any(is_transposition));
    assert_eq!(class("C2^2_A").class_size, 15);
    assert_eq!(class("C2^2_B").class_size, 5);
    let a4 = l.by_label("A4").unwrap();
    assert!(l.is_below(l.by_label("C2^2_B").unwrap(), a4));
    assert!(!l.is_below(l.by_label("C2^2_A").unwrap(), a4));
    assert!(class("S3_A").representative.members().any(is_transposition));
    assert!(!class("S3_B").representative.members().any(is_transposition));
}

#[test]
fn fixture_suffixes() {
    let l = &fixture().lattice;
    let idx = |label: &str| l.by_label(label).unwrap();
    // the A classes leave the index-two subgroup, the B classes stay inside
    assert!(l.is_below(idx("C4_B"), idx("SL(2,3)")));
    assert!(!l.is_below(idx("C4_A"), idx("SL(2,5)")));
    assert!(l.is_below(idx("Q8_B"), idx("SL(2,3)")));
    assert!(!l.is_below(idx("Q8_A"), idx("SL(2,5)")));
    assert!(l.is_below(idx("[12,1]_B"), idx("SL(2,5)")));
    assert!(!l.is_below(idx("[12,1]_A"), idx("SL(2,5)")));
}

#[test]
fn goldens() {
    assert_eq!(
        fixture().lattice.to_text(),
        include_str!("golden/sl25c2_lattice.txt")
    );
    assert_eq!(
        s5_lattice().to_text(),
        include_str!("golden/s5_lattice.txt")
    );
}

fn check_against_brute_force(lattice: &SubgroupLattice, max_order: usize) {
    let g = lattice.group();
    let brute = brute_force_subgroups(g.elements(), max_order);
    let mut per_class: BTreeMap<usize, usize> = BTreeMap::new();
    let mut per_order: BTreeMap<usize, usize> = BTreeMap::new();
    for members in &brute {
        let h = Subgroup::from_members(g, ElemSet::from_ids(g.order(), members.iter().copied()));
        *per_class.entry(lattice.identify_class(&h)).or_default() += 1;
        *per_order.entry(members.len()).or_default() += 1;
    }
    let mut expected_orders: BTreeMap<usize, usize> = BTreeMap::new();
    for (i, c) in lattice.classes().iter().enumerate() {
        if c.order() <= max_order {
            assert_eq!(
                per_class.get(&i).copied(),
                Some(c.class_size),
                "{}",
                c.label
            );
            *expected_orders.entry(c.order()).or_default() += c.class_size;
        }
    }
    assert_eq!(per_order, expected_orders);
}

#[test]
fn fixture_counts_agree_with_brute_force() {
    check_against_brute_force(&fixture().lattice, 48);
}

#[test]
fn s5_counts_agree_with_brute_force() {
    let l = s5_lattice();
    check_against_brute_force(&l, 120);
    assert_eq!(brute_force_subgroups(l.group().elements(), 120).len(), 156);
}

#[test]
fn cache_round_trip() {
    let dir = std::env::temp_dir().join(format!("sphex-lattice-test-{}", std::process::id()));
    let _ = std::fs::remove_dir_all(&dir);
    let group = Arc::clone(fixture().lattice.group());
    let first = load_or_build_lattice(Arc::clone(&group), 10_000, Some(&dir)).unwrap();
    let entries = std::fs::read_dir(&dir).unwrap().count();
    assert_eq!(entries, 1);
    let second = load_or_build_lattice(group, 10_000, Some(&dir)).unwrap();
    assert_eq!(first.export(), second.export());
    assert_eq!(second.export(), fixture().lattice.export());
    let _ = std::fs::remove_dir_all(&dir);
}
