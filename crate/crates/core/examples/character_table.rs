//! Loads and verifies the bundled character table, then prints the
//! Frobenius-Schur indicators and the real irreducible degrees.

use std::sync::Arc;

use sphex::chartab::CharacterTable;
use sphex::fixtures;

fn main() {
    let group = Arc::new(fixtures::sl25c2());
    let table =
        CharacterTable::load(group, fixtures::SL25C2_CHARTAB).expect("bundled table verifies");

    println!(
        "{}: classes {}",
        table.name(),
        table.class_labels().join(" ")
    );
    for (chi, ind) in table.complex().iter().zip(table.indicators()) {
        println!(
            "{:<5} degree {:>2}  indicator {:+}",
            chi.name(),
            chi.degree(),
            ind
        );
    }
    println!();
    for chi in table.real() {
        let values: Vec<String> = chi.values().iter().map(ToString::to_string).collect();
        println!("{:<5} {}", chi.name(), values.join("  "));
    }
}
