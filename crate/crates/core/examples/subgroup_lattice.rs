//! Subgroup classes and covering edges of S5 and of the order-240 group.

use std::sync::Arc;

use sphex::fixtures;
use sphex::lattice::enumerate_subgroups;

fn main() {
    let s5 = enumerate_subgroups(Arc::new(fixtures::s5())).unwrap();
    println!(
        "S5: {} classes, {} subgroups",
        s5.len(),
        s5.total_subgroups()
    );
    print!("{}", s5.to_text());

    let g = enumerate_subgroups(Arc::new(fixtures::sl25c2())).unwrap();
    println!();
    println!(
        "SL(2,5).C2: {} classes, {} subgroups",
        g.len(),
        g.total_subgroups()
    );
    for c in g.classes() {
        println!(
            "{:<12} order {:>3}  conjugates {:>2}{}",
            c.label,
            c.order(),
            c.class_size,
            if c.is_normal { "  normal" } else { "" }
        );
    }
}
