mod common;

use common::{entry, fixture, to_complex, REAL_TABLE};
use proptest::prelude::*;
use sphex::exactnum::CycloNum;

#[test]
fn realified_table_matches_entry_for_entry() {
    let f = fixture();
    let real = f.table.real();
    assert_eq!(real.len(), 12);
    assert!(real[0].values().iter().all(|v| *v == CycloNum::one()));
    for (name, row) in REAL_TABLE {
        let chi = &real[f.real(name)];
        for (c, text) in row.iter().enumerate() {
            assert_eq!(
                *chi.value(c),
                entry(text),
                "{name} at class {}",
                f.table.class_labels()[c]
            );
        }
    }
}

#[test]
fn square_roots_are_the_stated_sums() {
    let r2 = &CycloNum::zeta(8, 1) + &CycloNum::zeta(8, -1);
    let r3 = &CycloNum::zeta(12, 1) + &CycloNum::zeta(12, -1);
    assert_eq!(r2, CycloNum::sqrt2());
    assert_eq!(r3, CycloNum::sqrt3());
    assert_eq!(&r2 * &r2, CycloNum::from_integer(2));
    assert_eq!(&r3 * &r3, CycloNum::from_integer(3));
    let (re, im) = to_complex(&r3);
    assert!((re - 3f64.sqrt()).abs() < 1e-12 && im.abs() < 1e-12);
}

#[test]
fn indicators_and_degrees() {
    let f = fixture();
    let inds = f.table.indicators();
    assert_eq!(inds.iter().filter(|&&i| i == 1).count(), 7);
    assert_eq!(inds.iter().filter(|&&i| i == -1).count(), 5);
    let sum: u64 = f.table.complex().iter().map(|c| c.degree().pow(2)).sum();
    assert_eq!(sum, 240);
    let degrees: Vec<u64> = f.table.real().iter().map(|c| c.degree()).collect();
    assert_eq!(degrees, [1, 1, 4, 4, 5, 5, 6, 8, 8, 8, 12, 12]);
}

#[test]
fn six_unfaithful_and_five_faithful() {
    let f = fixture();
    let faithful: Vec<&str> = f
        .table
        .real()
        .iter()
        .skip(1)
        .filter(|c| f.table.kernel(c).order() == 1)
        .map(|c| c.name())
        .collect();
    assert_eq!(faithful, ["W8_1", "W8_2", "W8_3", "W12_1", "W12_2"]);
    let center = f.group.center();
    for (name, order) in [
        ("U1", 120),
        ("U4_1", 2),
        ("U4_2", 2),
        ("U5_1", 2),
        ("U5_2", 2),
        ("U6", 2),
    ] {
        let k = f.table.kernel(&f.table.real()[f.real(name)]);
        assert!(center.is_subgroup_of(&k), "{name}");
        assert_eq!(k.order(), order, "{name}");
    }
}

#[test]
fn real_characters_are_orthogonal() {
    let f = fixture();
    let real = f.table.real();
    for (i, a) in real.iter().enumerate() {
        for (j, b) in real.iter().enumerate() {
            let ip = f.table.inner_product(a.values(), b.values());
            if i != j {
                assert!(ip.is_zero(), "{} {}", a.name(), b.name());
            } else {
                // 1 for real type, 2 for pairs, 4 for quaternionic doubles
                let n = ip.as_i64().unwrap();
                assert!([1, 2, 4].contains(&n));
            }
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn galois_conjugates_permute_rows(k in prop::sample::select(vec![1i64, 7, 11, 13, 17, 19, 23, 29])) {
        let f = fixture();
        let real = f.table.real();
        let rows: Vec<Vec<CycloNum>> = real.iter().map(|c| c.values().to_vec()).collect();
        for chi in real {
            let image: Vec<CycloNum> = chi.values().iter().map(|v| v.galois(k).unwrap()).collect();
            prop_assert!(rows.contains(&image));
        }
    }

    #[test]
    fn values_are_real_and_bounded(i in 0usize..12, c in 0usize..12) {
        let f = fixture();
        let chi = &f.table.real()[i];
        let (re, im) = to_complex(chi.value(c));
        prop_assert!(im.abs() < 1e-9);
        prop_assert!(re.abs() <= chi.degree() as f64 + 1e-9);
    }
}
