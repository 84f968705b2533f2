mod common;

use std::collections::BTreeSet;

use common::{fixture, to_complex};
use proptest::prelude::*;
use serde_json::Value;
use sphex::exclusion::{
    enumerate_candidates, exclude, pseudofree_scan, scan, verify_report, Constraints, Mode, Query,
    Scope,
};
use sphex::fixtures;

fn query(dimension: u64, mode: Mode, scope: Scope) -> Query {
    Query {
        dimension,
        mode,
        scope,
        effective: true,
        pseudofree: None,
    }
}

/// Float character values, one row per real irreducible.
fn float_rows() -> Vec<Vec<f64>> {
    fixture()
        .table
        .real()
        .iter()
        .map(|chi| chi.values().iter().map(|v| to_complex(v).0).collect())
        .collect()
}

/// Every multiplicity vector of total dimension `n` avoiding `skip`.
fn all_modules(degrees: &[u64], n: u64, skip: usize) -> Vec<Vec<u32>> {
    fn go(
        degrees: &[u64],
        skip: usize,
        i: usize,
        left: u64,
        cur: &mut Vec<u32>,
        out: &mut Vec<Vec<u32>>,
    ) {
        if i == degrees.len() {
            if left == 0 {
                out.push(cur.clone());
            }
            return;
        }
        let max = if i == skip { 0 } else { left / degrees[i] };
        for m in 0..=max {
            cur[i] = m as u32;
            go(degrees, skip, i + 1, left - m * degrees[i], cur, out);
        }
        cur[i] = 0;
    }
    let mut out = Vec::new();
    go(degrees, skip, 0, n, &mut vec![0; degrees.len()], &mut out);
    out
}

fn character(rows: &[Vec<f64>], m: &[u32]) -> Vec<f64> {
    (0..rows[0].len())
        .map(|c| rows.iter().zip(m).map(|(r, &k)| k as f64 * r[c]).sum())
        .collect()
}

#[test]
fn faithful_candidates_match_character_oracle() {
    let f = fixture();
    let rows = float_rows();
    let degrees: Vec<u64> = f.table.real().iter().map(|c| c.degree()).collect();
    let trivial = f.table.real_index("Triv").unwrap();
    for n in 0..=18 {
        let expected: BTreeSet<Vec<u32>> = all_modules(&degrees, n, trivial)
            .into_iter()
            .filter(|m| {
                let chi = character(&rows, m);
                chi.iter().skip(1).all(|&v| (v - n as f64).abs() > 1e-6)
            })
            .collect();
        let got: BTreeSet<Vec<u32>> = enumerate_candidates(
            &f.ctx,
            n,
            &Constraints {
                effective: true,
                ..Constraints::default()
            },
        )
        .into_iter()
        .map(|c| c.module.multiplicities().to_vec())
        .collect();
        assert_eq!(got, expected, "n = {n}");
        let all = enumerate_candidates(&f.ctx, n, &Constraints::default());
        assert_eq!(all.len(), all_modules(&degrees, n, trivial).len());
    }
}

#[test]
fn pseudofree_filter_matches_prime_order_oracle() {
    let f = fixture();
    let rows = float_rows();
    let degrees: Vec<u64> = f.table.real().iter().map(|c| c.degree()).collect();
    let trivial = f.table.real_index("Triv").unwrap();
    let class_of = &f.group.classes().class_of;
    // fixed dimensions only drop in larger subgroups, so prime order ones decide
    let primes: Vec<Vec<usize>> = ["C2", "C3", "C5"]
        .iter()
        .map(|l| f.class(l).members().map(|x| class_of[x]).collect())
        .collect();
    for k in [4u64, 6] {
        for n in [8u64, 14, 18, 22] {
            let expected: BTreeSet<Vec<u32>> = all_modules(&degrees, n, trivial)
                .into_iter()
                .filter(|m| {
                    let chi = character(&rows, m);
                    primes.iter().all(|h| {
                        let avg = h.iter().map(|&c| chi[c]).sum::<f64>() / h.len() as f64;
                        avg <= k as f64 + 1e-6
                    })
                })
                .collect();
            let got: BTreeSet<Vec<u32>> = enumerate_candidates(
                &f.ctx,
                n,
                &Constraints {
                    pseudofree: Some(k),
                    ..Constraints::default()
                },
            )
            .into_iter()
            .map(|c| c.module.multiplicities().to_vec())
            .collect();
            assert_eq!(got, expected, "k = {k}, n = {n}");
        }
    }
}

#[test]
fn pseudofree_scans_grow_with_k() {
    let f = fixture();
    let admissible = |k| pseudofree_scan(&f.ctx, k, true, Scope::Standard, 40).admissible;
    let sets: Vec<Vec<u64>> = (4..=7).map(admissible).collect();
    assert!(sets[0].is_empty());
    assert!(sets[1].is_empty());
    for pair in sets.windows(2) {
        assert!(pair[0].iter().all(|n| pair[1].contains(n)));
    }
    assert_eq!(sets[2], [14, 18, 22, 26, 30, 34, 38]);
    assert_eq!(sets[3], sets[2]);
}

#[test]
fn odd_exclusion_implies_one_exclusion() {
    let f = fixture();
    for n in 0..=20 {
        let odd = exclude(&f.ctx, &query(n, Mode::Odd, Scope::Homology));
        let one = exclude(&f.ctx, &query(n, Mode::One, Scope::Homology));
        if odd.is_excluded() {
            assert!(one.is_excluded(), "n = {n}");
        }
        let standard = exclude(&f.ctx, &query(n, Mode::One, Scope::Standard));
        if one.is_excluded() {
            assert!(standard.is_excluded(), "n = {n}");
        }
    }
}

#[test]
fn every_report_verifies() {
    let f = fixture();
    for mode in [Mode::One, Mode::Odd] {
        for scope in [Scope::Homology, Scope::Standard] {
            for effective in [true, false] {
                let template = Query {
                    effective,
                    ..query(0, mode, scope)
                };
                scan(&f.ctx, &template, 24, |r| {
                    verify_report(r, &f.table)
                        .unwrap_or_else(|e| panic!("{mode} {scope} n = {}: {e}", r.dimension));
                });
            }
        }
    }
}

fn validator() -> jsonschema::JSONSchema {
    let schema: Value = serde_json::from_str(fixtures::REPORT_SCHEMA).unwrap();
    jsonschema::JSONSchema::compile(&schema).unwrap()
}

fn assert_valid(validator: &jsonschema::JSONSchema, json: &str) {
    let value: Value = serde_json::from_str(json).unwrap();
    let messages: Vec<String> = match validator.validate(&value) {
        Ok(()) => return,
        Err(errors) => errors
            .map(|e| format!("{} at {}", e, e.instance_path))
            .collect(),
    };
    panic!("schema violations: {messages:?}");
}

#[test]
fn reports_match_schema() {
    let f = fixture();
    let v = validator();
    for n in [0, 3, 13, 14, 17, 18] {
        for mode in [Mode::One, Mode::Odd] {
            let r = exclude(&f.ctx, &query(n, mode, Scope::Standard));
            assert_valid(&v, &r.to_json());
            assert_valid(&v, &r.without_trace().to_json());
        }
    }
    let s = pseudofree_scan(&f.ctx, 6, true, Scope::Standard, 30);
    assert_valid(&v, &s.to_json());
    let mut bad: Value = serde_json::from_str(&s.to_json()).unwrap();
    bad["mode"] = Value::from("three");
    assert!(!v.is_valid(&bad));
}

#[test]
fn results_do_not_depend_on_thread_count() {
    let f = fixture();
    let run = |threads| {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .unwrap();
        pool.install(|| {
            (12..=22)
                .flat_map(|n| {
                    [Mode::One, Mode::Odd]
                        .map(|m| exclude(&f.ctx, &query(n, m, Scope::Homology)).to_json())
                })
                .collect::<Vec<_>>()
        })
    };
    assert_eq!(run(1), run(4));
}

#[test]
fn fourteen_survivors() {
    let f = fixture();
    let r = exclude(&f.ctx, &query(14, Mode::One, Scope::Standard));
    let survivors: Vec<&str> = r.survivors().map(|c| c.module.as_str()).collect();
    assert_eq!(survivors.len(), 3);
    assert!(survivors.iter().all(|m| m.starts_with("U6+W8_")));
    assert_eq!(r.surviving_families, ["U6+W8_*"]);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn tampered_verdicts_fail_verification(n in 0u64..=20, odd in any::<bool>(), pick in any::<prop::sample::Index>()) {
        let f = fixture();
        let mode = if odd { Mode::Odd } else { Mode::One };
        let mut r = exclude(&f.ctx, &query(n, mode, Scope::Homology));
        prop_assume!(!r.candidates.is_empty());
        let i = pick.index(r.candidates.len());
        let c = &mut r.candidates[i];
        c.excluded = !c.excluded;
        prop_assert!(verify_report(&r, &f.table).is_err());
    }
}
