//! Runs the exclusion rules in low dimensions and re-verifies each trace.
//!
//! ```sh
//! cargo run --release --example exclusion -- 14
//! ```

use std::sync::Arc;

use sphex::chartab::CharacterTable;
use sphex::exclusion::{exclude, verify_report, ExclusionContext, Mode, Query, Scope};
use sphex::fixtures;
use sphex::lattice::enumerate_subgroups;

fn main() {
    let max: u64 = std::env::args()
        .nth(1)
        .and_then(|a| a.parse().ok())
        .unwrap_or(17);
    let group = Arc::new(fixtures::sl25c2());
    let table =
        Arc::new(CharacterTable::load(Arc::clone(&group), fixtures::SL25C2_CHARTAB).unwrap());
    let lattice = Arc::new(enumerate_subgroups(group).unwrap());
    let ctx = ExclusionContext::new(Arc::clone(&table), lattice).unwrap();

    for (mode, scope) in [(Mode::Odd, Scope::Homology), (Mode::One, Scope::Standard)] {
        println!("mode {mode}, scope {scope}");
        for n in 0..=max {
            let query = Query {
                dimension: n,
                mode,
                scope,
                effective: true,
                pseudofree: None,
            };
            let report = exclude(&ctx, &query);
            verify_report(&report, &table).expect("trace verifies");
            println!("  n = {n:>2}: {report}");
            for c in report
                .candidates
                .iter()
                .filter_map(|c| Some((c, c.application.as_ref()?)))
            {
                let (cand, app) = c;
                let roles: Vec<String> = app
                    .subgroups
                    .iter()
                    .map(|r| format!("{}={}", r.role, r.class))
                    .collect();
                println!(
                    "      {:<24} {} via {}",
                    cand.module,
                    app.rule,
                    roles.join(" ")
                );
            }
        }
    }
}
