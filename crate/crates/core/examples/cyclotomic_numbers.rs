//! Exact arithmetic in cyclotomic fields.

use sphex::exactnum::{cyclotomic_polynomial, CycloNum};

fn main() {
    let r2 = CycloNum::sqrt2();
    let r3 = CycloNum::sqrt3();
    println!("sqrt2 = {r2}");
    println!("sqrt2^2 = {}", &r2 * &r2);
    println!("sqrt3^2 = {}", &r3 * &r3);

    // sum of all primitive 12th roots of unity is mu(12) = 0
    let sum: CycloNum = [1, 5, 7, 11]
        .into_iter()
        .map(|k| CycloNum::zeta(12, k))
        .sum();
    println!("sum of primitive 12th roots = {sum}");

    let z5 = CycloNum::zeta(5, 1);
    println!("zeta5 + conj(zeta5) = {}", &z5 + &z5.conj());
    println!("Galois image under k=2: {}", z5.galois(2).unwrap());
    println!("Phi_12 coefficients {:?}", cyclotomic_polynomial(12));
}
