//! Bundled groups and character tables, and the constructions that produce
//! the bundled group files.

use std::collections::HashMap;

use crate::group::{
    generate_group, parse_group_file, regular_representation, FiniteGroup, Permutation,
};

/// Generator file for the order-240 extension of `SL(2,5)` in its regular
/// representation. Regenerate with the `regenerate_fixture` example.
pub const SL25C2_GROUP: &str = include_str!("../data/sl25c2.group");

/// Complex character table of the order-240 fixture, with class binding,
/// power maps and real-irreducible names.
pub const SL25C2_CHARTAB: &str = include_str!("../data/sl25c2.chartab");

/// Character table of the trivial group.
pub const TRIVIAL_CHARTAB: &str = include_str!("../data/trivial.chartab");

/// JSON schema for exclusion reports.
pub const REPORT_SCHEMA: &str = include_str!("../data/report.schema.json");

/// The bundled order-240 group.
pub fn sl25c2() -> FiniteGroup {
    let (_, gens) = parse_group_file(SL25C2_GROUP).expect("bundled group file parses");
    generate_group(&gens).expect("bundled group fits the default cap")
}

/// `S5` on five points, generated by `(1 2)` and `(1 2 3 4 5)`.
pub fn s5() -> FiniteGroup {
    generate_group(&[
        Permutation::parse_cycles("(1 2)", 5).unwrap(),
        Permutation::parse_cycles("(1 2 3 4 5)", 5).unwrap(),
    ])
    .unwrap()
}

/// `F_{p²} = F_p[s]/(s² − ν)` with `ν` the least quadratic non-residue.
#[derive(Clone, Copy, Debug)]
struct Field {
    p: u32,
    nu: u32,
}

type Elt = (u32, u32);
type Mat = [Elt; 4];

impl Field {
    fn new(p: u32) -> Field {
        assert!(
            p > 2 && (2..p).all(|d| !p.is_multiple_of(d)),
            "p must be an odd prime"
        );
        let nu = (2..p)
            .find(|&a| (1..p).all(|x| x * x % p != a))
            .expect("odd primes have non-residues");
        Field { p, nu }
    }

    fn add(&self, x: Elt, y: Elt) -> Elt {
        ((x.0 + y.0) % self.p, (x.1 + y.1) % self.p)
    }

    fn mul(&self, x: Elt, y: Elt) -> Elt {
        let p = self.p;
        (
            (x.0 * y.0 + x.1 * y.1 % p * self.nu) % p,
            (x.0 * y.1 + x.1 * y.0) % p,
        )
    }

    fn inv_scalar(&self, a: u32) -> u32 {
        (1..self.p).find(|&x| x * a % self.p == 1).unwrap()
    }

    fn mat_mul(&self, a: &Mat, b: &Mat) -> Mat {
        let e = |i: usize, j: usize| {
            self.add(self.mul(a[2 * i], b[j]), self.mul(a[2 * i + 1], b[2 + j]))
        };
        [e(0, 0), e(0, 1), e(1, 0), e(1, 1)]
    }
}

/// Closes a set of invertible matrices under multiplication and returns the
/// regular representation of the generated group, one permutation per
/// generator.
fn matrix_group_regular(field: &Field, gens: &[Mat]) -> Vec<Permutation> {
    let one: Mat = [(1, 0), (0, 0), (0, 0), (1, 0)];
    let mut elements = vec![one];
    let mut index: HashMap<Mat, usize> = HashMap::from([(one, 0)]);
    let mut i = 0;
    while i < elements.len() {
        for g in gens {
            let y = field.mat_mul(&elements[i], g);
            if let std::collections::hash_map::Entry::Vacant(e) = index.entry(y) {
                e.insert(elements.len());
                elements.push(y);
            }
        }
        i += 1;
    }
    let gen_ids: Vec<usize> = gens.iter().map(|g| index[g]).collect();
    regular_representation(
        elements.len(),
        |a, b| index[&field.mat_mul(&elements[a], &elements[b])],
        &gen_ids,
    )
}

fn sl2_generators(field: &Field) -> [Mat; 2] {
    let m = field.p - 1;
    [
        [(1, 0), (1, 0), (0, 0), (1, 0)],
        [(0, 0), (m, 0), (1, 0), (0, 0)],
    ]
}

/// `SL(2,p)` in its regular representation.
pub fn special_linear_regular(p: u32) -> Vec<Permutation> {
    let field = Field::new(p);
    matrix_group_regular(&field, &sl2_generators(&field))
}

/// The subgroup of `SL(2,p²)` generated by `SL(2,p)` and
/// `(s/ν)·diag(ν, 1)`, where `s² = ν`. It has order `2·|SL(2,p)|` and
/// contains `−I` as its only involution.
pub fn twisted_special_linear_regular(p: u32) -> Vec<Permutation> {
    let field = Field::new(p);
    let alpha: Elt = (0, field.inv_scalar(field.nu));
    let twist: Mat = [field.mul(alpha, (field.nu, 0)), (0, 0), (0, 0), alpha];
    let [a, b] = sl2_generators(&field);
    matrix_group_regular(&field, &[a, b, twist])
}
