//! Named small groups used to label lattice nodes.

use std::sync::OnceLock;

use crate::fixtures::{special_linear_regular, twisted_special_linear_regular};
use crate::group::{
    fingerprint, generate_group, isomorphism, regular_representation, Fingerprint, FiniteGroup,
    Permutation,
};

/// Largest order at which a fingerprint match is confirmed by an explicit
/// isomorphism.
pub const CONFIRM_LIMIT: usize = 48;

struct Entry {
    label: &'static str,
    order: usize,
    build: fn() -> Vec<Permutation>,
    cache: OnceLock<(FiniteGroup, Fingerprint)>,
}

impl Entry {
    fn get(&self) -> &(FiniteGroup, Fingerprint) {
        self.cache.get_or_init(|| {
            let g = generate_group(&(self.build)()).expect("catalog groups are small");
            assert_eq!(g.order(), self.order, "catalog entry {}", self.label);
            let fp = fingerprint(&g);
            (g, fp)
        })
    }
}

fn perms(degree: usize, specs: &[&str]) -> Vec<Permutation> {
    specs
        .iter()
        .map(|s| Permutation::parse_cycles(s, degree).unwrap())
        .collect()
}

/// Dicyclic group of order `4n`: `a^k x^e` with `x² = a^n`, `xa = a⁻¹x`.
fn dicyclic(n: usize) -> Vec<Permutation> {
    let m = 2 * n;
    let mul = move |x: usize, y: usize| {
        let (k1, e1) = (x % m, x / m);
        let (k2, e2) = (y % m, y / m);
        let mut k = if e1 == 0 { k1 + k2 } else { k1 + m - k2 };
        if e1 == 1 && e2 == 1 {
            k += n;
        }
        k % m + m * ((e1 + e2) % 2)
    };
    regular_representation(2 * m, mul, &[1, m])
}

/// Dihedral group of order `2n`: `a^k b^e` with `b² = 1`, `ba = a⁻¹b`.
fn dihedral(n: usize) -> Vec<Permutation> {
    let mul = move |x: usize, y: usize| {
        let (k1, e1) = (x % n, x / n);
        let (k2, e2) = (y % n, y / n);
        let k = if e1 == 0 { k1 + k2 } else { k1 + n - k2 };
        k % n + n * ((e1 + e2) % 2)
    };
    regular_representation(2 * n, mul, &[1, n])
}

/// `C5 ⋊ C8` with the generator of `C8` acting by squaring: `a^k y^j`.
fn c5_c8() -> Vec<Permutation> {
    let mul = |x: usize, y: usize| {
        let (k1, j1) = (x % 5, x / 5);
        let (k2, j2) = (y % 5, y / 5);
        let twist = [1, 2, 4, 3][j1 % 4];
        (k1 + twist * k2) % 5 + 5 * ((j1 + j2) % 8)
    };
    regular_representation(40, mul, &[1, 5])
}

fn catalog() -> &'static [Entry] {
    static CATALOG: OnceLock<Vec<Entry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let e = |label, order, build: fn() -> Vec<Permutation>| Entry {
            label,
            order,
            build,
            cache: OnceLock::new(),
        };
        vec![
            e("C2^2", 4, || perms(4, &["(1 2)", "(3 4)"])),
            e("S3", 6, || dihedral(3)),
            e("D8", 8, || dihedral(4)),
            e("Q8", 8, || dicyclic(2)),
            e("D10", 10, || dihedral(5)),
            e("A4", 12, || perms(4, &["(1 2 3)", "(2 3 4)"])),
            e("[12,1]", 12, || dicyclic(3)),
            e("D12", 12, || dihedral(6)),
            e("Q16", 16, || dicyclic(4)),
            e("[20,1]", 20, || dicyclic(5)),
            e("F5", 20, || perms(5, &["(1 2 3 4 5)", "(2 3 5 4)"])),
            e("S4", 24, || perms(4, &["(1 2)", "(1 2 3 4)"])),
            e("SL(2,3)", 24, || special_linear_regular(3)),
            e("[24,4]", 24, || dicyclic(6)),
            e("C5:C8", 40, c5_c8),
            e("[48,28]", 48, || twisted_special_linear_regular(3)),
            e("A5", 60, || perms(5, &["(1 2 3)", "(3 4 5)"])),
            e("S5", 120, || perms(5, &["(1 2)", "(1 2 3 4 5)"])),
            e("SL(2,5)", 120, || special_linear_regular(5)),
            e("SL(2,5).C2", 240, || twisted_special_linear_regular(5)),
        ]
    })
}

/// Isomorphism-type label of `h`: `C<n>` for cyclic groups, a catalog name
/// when one matches, otherwise `[<order>,?]`.
pub fn iso_label(h: &FiniteGroup) -> String {
    let n = h.order();
    if (0..n).any(|x| h.element_order(x) as usize == n) {
        return format!("C{n}");
    }
    let fp = fingerprint(h);
    for entry in catalog().iter().filter(|e| e.order == n) {
        let (g, efp) = entry.get();
        if *efp != fp {
            continue;
        }
        if n > CONFIRM_LIMIT
            || isomorphism(h, g)
                .expect("orders within the confirmation limit")
                .is_some()
        {
            return entry.label.to_string();
        }
    }
    format!("[{n},?]")
}
