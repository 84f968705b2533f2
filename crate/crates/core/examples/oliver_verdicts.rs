//! Oliver verdicts for every subgroup class, each witness re-checked.

use std::sync::Arc;

use sphex::fixtures;
use sphex::lattice::enumerate_subgroups;
use sphex::oliver::{oliver_verdict, verify_witness};

fn main() {
    let lattice = enumerate_subgroups(Arc::new(fixtures::sl25c2())).unwrap();
    for c in lattice.classes() {
        let x = &c.representative;
        let verdict = oliver_verdict(&lattice, x);
        match &verdict.witness {
            None => println!("{:<12} Oliver", c.label),
            Some(w) => {
                verify_witness(lattice.group(), x, w).expect("witness verifies");
                let name = |s| lattice.class(lattice.identify_class(s)).label.as_str();
                println!("{:<12} P = {}, H = {}", c.label, name(&w.p), name(&w.h));
            }
        }
    }
}
