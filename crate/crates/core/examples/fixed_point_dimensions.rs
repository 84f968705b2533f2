//! Fixed-point dimensions of real modules on a few subgroup classes.

use std::sync::Arc;

use sphex::chartab::CharacterTable;
use sphex::fixtures;
use sphex::lattice::enumerate_subgroups;

fn main() {
    let group = Arc::new(fixtures::sl25c2());
    let table = CharacterTable::load(Arc::clone(&group), fixtures::SL25C2_CHARTAB).unwrap();
    let lattice = enumerate_subgroups(group).unwrap();

    let classes = ["C4_A", "Q8_A", "Q16", "[24,4]"];
    println!("{:<6} {}", "", classes.map(|c| format!("{c:>7}")).join(""));
    for chi in table.real().iter().skip(1) {
        let dims: Vec<String> = classes
            .iter()
            .map(|&label| {
                let h = &lattice
                    .class(lattice.by_label(label).unwrap())
                    .representative;
                format!("{:>7}", table.fp_dim(chi, h).unwrap())
            })
            .collect();
        println!("{:<6} {}", chi.name(), dims.join(""));
    }

    let v = table.parse_module("U6+W8_1").unwrap();
    for c in lattice.classes() {
        let d = table.module_fp_dim(&v, &c.representative).unwrap();
        println!("dim (U6+W8_1)^{} = {d}", c.label);
    }
}
