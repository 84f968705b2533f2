//! Rebuilds the bundled order-240 group file from its matrix construction.
//!
//! ```sh
//! cargo run --example regenerate_fixture > crates/core/data/sl25c2.group
//! ```

use sphex::fixtures::twisted_special_linear_regular;
use sphex::group::format_group_file;

fn main() {
    let gens = twisted_special_linear_regular(5);
    print!("{}", format_group_file(240, &gens));
}
