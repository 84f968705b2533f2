#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::{Arc, OnceLock};

use sphex::chartab::CharacterTable;
use sphex::exactnum::CycloNum;
use sphex::exclusion::ExclusionContext;
use sphex::fixtures;
use sphex::group::{isomorphism, quotient, subgroup_closure, FiniteGroup, Permutation, Subgroup};
use sphex::lattice::{enumerate_subgroups, SubgroupLattice};

pub struct Fixture {
    pub group: Arc<FiniteGroup>,
    pub table: Arc<CharacterTable>,
    pub lattice: Arc<SubgroupLattice>,
    pub ctx: ExclusionContext,
}

pub fn fixture() -> &'static Fixture {
    static FIXTURE: OnceLock<Fixture> = OnceLock::new();
    FIXTURE.get_or_init(|| {
        let group = Arc::new(fixtures::sl25c2());
        let table =
            Arc::new(CharacterTable::load(Arc::clone(&group), fixtures::SL25C2_CHARTAB).unwrap());
        let lattice = Arc::new(enumerate_subgroups(Arc::clone(&group)).unwrap());
        let ctx = ExclusionContext::new(Arc::clone(&table), Arc::clone(&lattice)).unwrap();
        Fixture {
            group,
            table,
            lattice,
            ctx,
        }
    })
}

impl Fixture {
    pub fn class(&self, label: &str) -> &Subgroup {
        let c = self
            .lattice
            .by_label(label)
            .unwrap_or_else(|| panic!("no class {label}"));
        &self.lattice.class(c).representative
    }

    pub fn real(&self, name: &str) -> usize {
        self.table
            .real_index(name)
            .unwrap_or_else(|| panic!("no module {name}"))
    }
}

/// Complex value of an exact cyclotomic, by summing roots of unity.
pub fn to_complex(x: &CycloNum) -> (f64, f64) {
    let n = x.conductor() as f64;
    x.coeffs().iter().fold((0.0, 0.0), |(re, im), (&k, q)| {
        let q = q.numer().to_string().parse::<f64>().unwrap()
            / q.denom().to_string().parse::<f64>().unwrap();
        let t = std::f64::consts::TAU * k as f64 / n;
        (re + q * t.cos(), im + q * t.sin())
    })
}

/// Subgroups of `perms` reached from the trivial group by adjoining one
/// element at a time while the order stays at most `max_order`. Every
/// subgroup of order at most `max_order` has such a chain, so the result
/// is all of them. Uses its own multiplication table built from
/// permutation composition.
pub fn brute_force_subgroups(perms: &[Permutation], max_order: usize) -> Vec<Vec<usize>> {
    let index: HashMap<&Permutation, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    let n = perms.len();
    let mul: Vec<Vec<usize>> = perms
        .iter()
        .map(|a| perms.iter().map(|b| index[&a.compose(b)]).collect())
        .collect();
    let identity = perms.iter().position(Permutation::is_identity).unwrap();

    let close = |seed: &[usize]| -> Option<Vec<usize>> {
        let mut members: Vec<bool> = vec![false; n];
        let mut list = vec![identity];
        members[identity] = true;
        let mut queue: VecDeque<usize> = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for &s in seed {
                let y = mul[x][s];
                if !members[y] {
                    members[y] = true;
                    list.push(y);
                    if list.len() > max_order {
                        return None;
                    }
                    queue.push_back(y);
                }
            }
        }
        list.sort_unstable();
        Some(list)
    };

    let mut seen: HashSet<Vec<usize>> = HashSet::new();
    let start = vec![identity];
    seen.insert(start.clone());
    let mut frontier: Vec<(Vec<usize>, Vec<usize>)> = vec![(start, Vec::new())];
    while let Some((h, gens)) = frontier.pop() {
        for g in 0..n {
            if h.binary_search(&g).is_ok() {
                continue;
            }
            let mut seed = gens.clone();
            seed.push(g);
            if let Some(k) = close(&seed) {
                if seen.insert(k.clone()) {
                    frontier.push((k, seed));
                }
            }
        }
    }
    seen.into_iter().collect()
}

/// Order of a permutation by repeated composition.
pub fn order_by_powers(p: &Permutation) -> usize {
    let mut q = p.clone();
    let mut k = 1;
    while !q.is_identity() {
        q = q.compose(p);
        k += 1;
    }
    k
}

pub const CLASS_SIZES: [usize; 12] = [1, 1, 20, 20, 30, 24, 20, 30, 30, 24, 20, 20];
pub const CLASS_ORDERS: [u32; 12] = [1, 2, 3, 4, 4, 5, 6, 8, 8, 10, 12, 12];
pub const CLASS_LABELS: [&str; 12] = [
    "1", "2", "3", "4A", "4B", "5", "6", "8A", "8B", "10", "12A", "12B",
];

/// Entries are integers, or `k*r2` / `k*r3` for multiples of the square
/// roots of 2 and 3.
#[rustfmt::skip]
pub const REAL_TABLE: [(&str, [&str; 12]); 11] = [
    ("U1", ["1", "1", "1", "-1", "1", "1", "1", "-1", "-1", "1", "-1", "-1"]),
    ("U4_1", ["4", "4", "1", "-2", "0", "-1", "1", "0", "0", "-1", "1", "1"]),
    ("U4_2", ["4", "4", "1", "2", "0", "-1", "1", "0", "0", "-1", "-1", "-1"]),
    ("U5_1", ["5", "5", "-1", "-1", "1", "0", "-1", "1", "1", "0", "-1", "-1"]),
    ("U5_2", ["5", "5", "-1", "1", "1", "0", "-1", "-1", "-1", "0", "1", "1"]),
    ("U6", ["6", "6", "0", "0", "-2", "1", "0", "0", "0", "1", "0", "0"]),
    ("W8_1", ["8", "-8", "-4", "0", "0", "-2", "4", "0", "0", "2", "0", "0"]),
    ("W8_2", ["8", "-8", "2", "0", "0", "-2", "-2", "0", "0", "2", "2*r3", "-2*r3"]),
    ("W8_3", ["8", "-8", "2", "0", "0", "-2", "-2", "0", "0", "2", "-2*r3", "2*r3"]),
    ("W12_1", ["12", "-12", "0", "0", "0", "2", "0", "-2*r2", "2*r2", "-2", "0", "0"]),
    ("W12_2", ["12", "-12", "0", "0", "0", "2", "0", "2*r2", "-2*r2", "-2", "0", "0"]),
];

pub fn entry(text: &str) -> CycloNum {
    match text.split_once('*') {
        None => CycloNum::from_integer(text.parse().unwrap()),
        Some((k, root)) => {
            let r = match root {
                "r2" => CycloNum::sqrt2(),
                "r3" => CycloNum::sqrt3(),
                _ => panic!("bad entry {text}"),
            };
            &CycloNum::from_integer(k.parse().unwrap()) * &r
        }
    }
}

pub const TABLE_CLASSES: [&str; 4] = ["C4_A", "Q8_A", "Q16", "[24,4]"];

/// Expected rows over `TABLE_CLASSES`; `W8_i` stands for both `W8_2` and
/// `W8_3`, `W12_j` for both `W12_*`.
pub const SUMMARY: [(&[&str], [u64; 4]); 9] = [
    (&["U1"], [0, 0, 0, 0]),
    (&["U4_1"], [1, 0, 0, 0]),
    (&["U4_2"], [3, 2, 1, 1]),
    (&["U5_1"], [2, 1, 1, 0]),
    (&["U5_2"], [3, 2, 1, 1]),
    (&["U6"], [3, 1, 0, 0]),
    (&["W8_1"], [0, 0, 0, 0]),
    (&["W8_2", "W8_3"], [0, 0, 0, 0]),
    (&["W12_1", "W12_2"], [0, 0, 0, 0]),
];

/// Fixed node numbering of the fixture lattice; the edge lists use it.
pub const FIXTURE_NODES: [&str; 22] = [
    "C1",
    "C2",
    "C3",
    "C5",
    "C4_A",
    "C4_B",
    "C6",
    "C10",
    "Q8_B",
    "Q8_A",
    "C8",
    "[12,1]_A",
    "[12,1]_B",
    "C12",
    "[20,1]",
    "Q16",
    "SL(2,3)",
    "[24,4]",
    "C5:C8",
    "[48,28]",
    "SL(2,5)",
    "SL(2,5).C2",
];

#[rustfmt::skip]
pub const FIXTURE_EDGES: [(usize, usize); 42] = [
    (1, 2), (1, 3), (1, 4), (2, 5), (2, 6), (2, 7), (3, 7), (2, 8), (4, 8), (6, 9), (5, 10),
    (6, 10), (6, 11), (5, 12), (7, 12), (6, 13), (7, 13), (5, 14), (7, 14), (6, 15), (8, 15),
    (9, 16), (10, 16), (11, 16), (7, 17), (9, 17), (12, 18), (13, 18), (14, 18), (10, 18),
    (15, 19), (11, 19), (12, 20), (16, 20), (17, 20), (13, 21), (15, 21), (17, 21), (18, 22),
    (19, 22), (20, 22), (21, 22),
];

pub const S5_NODES: [&str; 19] = [
    "C1", "C2_A", "C2_B", "C3", "C5", "C2^2_B", "C2^2_A", "C4", "C6", "S3_A", "S3_B", "D10", "D8",
    "A4", "D12", "F5", "S4", "A5", "S5",
];

#[rustfmt::skip]
pub const S5_EDGES: [(usize, usize); 37] = [
    (1, 2), (1, 3), (1, 4), (1, 5), (3, 6), (2, 7), (3, 7), (3, 8), (2, 9), (4, 9), (2, 10),
    (4, 10), (3, 11), (4, 11), (3, 12), (5, 12), (6, 13), (7, 13), (8, 13), (4, 14), (6, 14),
    (7, 15), (9, 15), (10, 15), (11, 15), (12, 16), (8, 16), (13, 17), (14, 17), (10, 17),
    (12, 18), (14, 18), (11, 18), (15, 19), (16, 19), (17, 19), (18, 19),
];

/// The projection `G -> S5` as element ids of the bundled `S5`.
pub fn projection() -> Vec<usize> {
    let f = fixture();
    let quot = quotient(&f.group, &f.group.center()).unwrap();
    let q = quot.to_group(&f.group);
    let s5 = fixtures::s5();
    let iso = isomorphism(&q, &s5).unwrap().unwrap();
    let onto_q = quot.projection(&f.group, &q);
    onto_q.into_iter().map(|i| iso[i]).collect()
}

/// `(module, class, dim)` on the subgroups of prime order and on `SL(2,5)`.
pub const PRIME_ORDER_DIMS: &[(&str, &str, u64)] = &[
    ("W8_1", "C2", 0),
    ("W8_2", "C2", 0),
    ("W8_3", "C2", 0),
    ("W12_1", "C2", 0),
    ("W12_2", "C2", 0),
    ("W8_1", "C3", 0),
    ("W8_1", "C5", 0),
    ("W8_2", "C5", 0),
    ("W8_3", "C5", 0),
    ("U1", "C2", 1),
    ("U1", "C3", 1),
    ("U1", "C5", 1),
    ("U5_1", "C3", 1),
    ("U5_2", "C3", 1),
    ("U5_1", "C5", 1),
    ("U5_2", "C5", 1),
    ("U4_1", "C3", 2),
    ("U4_2", "C3", 2),
    ("U6", "C3", 2),
    ("U6", "C5", 2),
    ("U4_1", "C2", 4),
    ("U4_2", "C2", 4),
    ("W8_2", "C3", 4),
    ("W8_3", "C3", 4),
    ("W12_1", "C3", 4),
    ("W12_2", "C3", 4),
    ("W12_1", "C5", 4),
    ("W12_2", "C5", 4),
    ("U5_1", "C2", 5),
    ("U5_2", "C2", 5),
    ("U6", "C2", 6),
    ("U1", "SL(2,5)", 1),
];

/// `L = <(1 3)>`, `K1 = <(1 3), (4 5)>` and `K2 = <(1 2 3 4), (1 2)(3 4)>`
/// inside the bundled `S5`.
pub fn s5_test_subgroups(s5: &FiniteGroup) -> [Subgroup; 3] {
    let cyc = |t: &str| s5.id_of(&Permutation::parse_cycles(t, 5).unwrap()).unwrap();
    [
        subgroup_closure(s5, &[cyc("(1 3)")]),
        subgroup_closure(s5, &[cyc("(1 3)"), cyc("(4 5)")]),
        subgroup_closure(s5, &[cyc("(1 2 3 4)"), cyc("(1 2)(3 4)")]),
    ]
}

/// Full preimage of `h` under the projection `pi`.
pub fn preimage(pi: &[usize], h: &Subgroup) -> Subgroup {
    let g = &fixture().group;
    let ids: Vec<usize> = (0..g.order()).filter(|&x| h.contains(pi[x])).collect();
    subgroup_closure(g, &ids)
}
