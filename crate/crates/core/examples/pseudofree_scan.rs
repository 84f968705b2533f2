//! Dimensions left open for k-pseudofree actions with one fixed point.

use std::sync::Arc;

use sphex::chartab::CharacterTable;
use sphex::exclusion::{pseudofree_scan, ExclusionContext, Scope, DEFAULT_SCAN_MAX};
use sphex::fixtures;
use sphex::lattice::enumerate_subgroups;

fn main() {
    let group = Arc::new(fixtures::sl25c2());
    let table =
        Arc::new(CharacterTable::load(Arc::clone(&group), fixtures::SL25C2_CHARTAB).unwrap());
    let lattice = Arc::new(enumerate_subgroups(group).unwrap());
    let ctx = ExclusionContext::new(table, lattice).unwrap();

    for k in 4..=7 {
        let scan = pseudofree_scan(&ctx, k, true, Scope::Standard, DEFAULT_SCAN_MAX);
        println!("k = {k}: admissible {:?}", scan.admissible);
        for entry in scan.entries.iter().take(4) {
            println!(
                "    n = {:>2}: {}",
                entry.dimension,
                entry.families.join(", ")
            );
        }
    }
}
