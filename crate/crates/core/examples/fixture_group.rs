//! Structure of the bundled order-240 group: center, derived subgroup,
//! element orders and the quotient by the center.

use sphex::fixtures;
use sphex::group::{is_isomorphic, quotient};

fn main() {
    let g = fixtures::sl25c2();
    let z = g.center();
    let derived = g.derived_subgroup();
    println!("order {}, exponent {}", g.order(), g.exponent());
    println!("center order {}", z.order());
    println!("derived subgroup order {}", derived.order());

    for c in &g.classes().classes {
        println!("class {:>3}  size {:>2}", c.label, c.size());
    }
    println!("element orders {:?}", g.order_histogram());

    let q = quotient(&g, &z).expect("the center is normal").to_group(&g);
    let s5 = fixtures::s5();
    println!(
        "G/Z has order {} and is S5: {}",
        q.order(),
        is_isomorphic(&q, &s5).unwrap()
    );
}
