//! Finite permutation groups: element store, products, conjugacy classes,
//! subgroups, quotients and isomorphism testing.
//!
//! Elements are identified by their index in a breadth-first enumeration
//! over generator words, so id `0` is always the identity and the ids are
//! stable for a given generator list.

mod classes;
mod io;
mod iso;
mod perm;
mod quotient;
mod regular;
mod set;
mod subgroup;

use std::collections::{BTreeMap, HashMap, VecDeque};
use std::sync::OnceLock;

use thiserror::Error;

pub use classes::{conjugacy_classes, ClassPartition, ConjugacyClass};
pub use io::{format_group_file, parse_group_file};
pub use iso::{fingerprint, is_isomorphic, isomorphism, Fingerprint, ISO_BACKTRACK_LIMIT};
pub use perm::Permutation;
pub use quotient::{quotient, QuotientGroup};
pub use regular::regular_representation;
pub use set::ElemSet;
pub use subgroup::{element_order_histogram, subgroup_closure, Subgroup};

/// Default cap on the order of a generated group.
pub const DEFAULT_ORDER_CAP: usize = 10_000;

/// Groups up to this order get a precomputed multiplication table.
const CAYLEY_TABLE_LIMIT: usize = 1024;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("group order exceeds cap of {cap}")]
    CapExceeded { cap: usize },
    #[error("generator degree {found} does not match degree {expected}")]
    DegreeMismatch { expected: usize, found: usize },
    #[error("at least one generator is required")]
    NoGenerators,
    #[error("images do not form a bijection")]
    NotBijection,
    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("subgroup is not normal")]
    NotNormal,
    #[error("isomorphism search limited to order {limit}, got {order}")]
    SizeLimit { limit: usize, order: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A finite group given by permutation generators, with all elements
/// enumerated.
#[derive(Debug)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    generator_ids: Vec<usize>,
    elements: Vec<Permutation>,
    index: HashMap<Permutation, usize>,
    table: Option<Vec<u32>>,
    inverses: Vec<usize>,
    orders: Vec<u32>,
    classes: OnceLock<ClassPartition>,
}

/// Generates the group with the default order cap.
pub fn generate_group(gens: &[Permutation]) -> Result<FiniteGroup, GroupError> {
    FiniteGroup::generate(gens, DEFAULT_ORDER_CAP)
}

impl FiniteGroup {
    /// Closes `gens` under multiplication. Elements are enumerated
    /// breadth-first over words in the generators, extending each word by
    /// the generators in the given order.
    pub fn generate(gens: &[Permutation], cap: usize) -> Result<Self, GroupError> {
        let first = gens.first().ok_or(GroupError::NoGenerators)?;
        let degree = first.degree();
        if let Some(bad) = gens.iter().find(|g| g.degree() != degree) {
            return Err(GroupError::DegreeMismatch {
                expected: degree,
                found: bad.degree(),
            });
        }
        let identity = Permutation::identity(degree);
        let mut elements = vec![identity.clone()];
        let mut index = HashMap::new();
        index.insert(identity, 0usize);
        let mut queue = VecDeque::from([0usize]);
        while let Some(x) = queue.pop_front() {
            for g in gens {
                let y = elements[x].compose(g);
                if !index.contains_key(&y) {
                    if elements.len() >= cap {
                        return Err(GroupError::CapExceeded { cap });
                    }
                    index.insert(y.clone(), elements.len());
                    queue.push_back(elements.len());
                    elements.push(y);
                }
            }
        }
        let n = elements.len();
        let table = (n <= CAYLEY_TABLE_LIMIT).then(|| {
            let mut t = vec![0u32; n * n];
            for a in 0..n {
                for b in 0..n {
                    t[a * n + b] = index[&elements[a].compose(&elements[b])] as u32;
                }
            }
            t
        });
        let inverses = elements.iter().map(|e| index[&e.inverse()]).collect();
        let orders = elements.iter().map(|e| e.order() as u32).collect();
        let generator_ids = gens.iter().map(|g| index[g]).collect();
        Ok(FiniteGroup {
            degree,
            generators: gens.to_vec(),
            generator_ids,
            elements,
            index,
            table,
            inverses,
            orders,
            classes: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn generator_ids(&self) -> &[usize] {
        &self.generator_ids
    }

    pub fn element(&self, id: usize) -> &Permutation {
        &self.elements[id]
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn id_of(&self, p: &Permutation) -> Option<usize> {
        self.index.get(p).copied()
    }

    pub const IDENTITY: usize = 0;

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self.index[&self.elements[a].compose(&self.elements[b])],
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    #[inline]
    pub fn element_order(&self, a: usize) -> u32 {
        self.orders[a]
    }

    pub fn pow(&self, a: usize, k: u64) -> usize {
        let mut r = Self::IDENTITY;
        for _ in 0..k % self.orders[a] as u64 {
            r = self.mul(r, a);
        }
        r
    }

    /// `g⁻¹ a g`.
    #[inline]
    pub fn conjugate(&self, a: usize, g: usize) -> usize {
        self.mul(self.mul(self.inv(g), a), g)
    }

    pub fn exponent(&self) -> u64 {
        self.orders
            .iter()
            .fold(1u64, |acc, &o| num_integer::lcm(acc, o as u64))
    }

    pub fn is_abelian(&self) -> bool {
        let g = &self.generator_ids;
        g.iter()
            .all(|&a| g.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup::from_parts(
            ElemSet::from_ids(self.order(), 0..self.order()),
            self.generator_ids.clone(),
        )
    }

    pub fn trivial(&self) -> Subgroup {
        Subgroup::from_parts(ElemSet::from_ids(self.order(), [0]), Vec::new())
    }

    pub fn center(&self) -> Subgroup {
        let ids: Vec<usize> = (0..self.order())
            .filter(|&z| {
                self.generator_ids
                    .iter()
                    .all(|&g| self.mul(z, g) == self.mul(g, z))
            })
            .collect();
        subgroup_closure(self, &ids)
    }

    /// The subgroup generated by all commutators `[a, b] = a⁻¹b⁻¹ab` of
    /// elements of `h`.
    pub fn commutator_subgroup(&self, h: &Subgroup) -> Subgroup {
        let members = h.to_vec();
        let mut seeds = ElemSet::new(self.order());
        for &a in &members {
            for &b in &members {
                let c = self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b));
                seeds.insert(c);
            }
        }
        subgroup_closure(self, &seeds.to_vec())
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.commutator_subgroup(&self.whole())
    }

    /// Orders of the terms of the derived series, ending at the first
    /// repeated term.
    pub fn derived_series_orders(&self) -> Vec<usize> {
        let mut current = self.whole();
        let mut out = vec![current.order()];
        loop {
            let next = self.commutator_subgroup(&current);
            if next.order() == current.order() {
                return out;
            }
            out.push(next.order());
            current = next;
        }
    }

    pub fn is_perfect(&self) -> bool {
        self.derived_subgroup().order() == self.order()
    }

    pub fn order_histogram(&self) -> BTreeMap<u32, usize> {
        let mut h = BTreeMap::new();
        for &o in &self.orders {
            *h.entry(o).or_insert(0) += 1;
        }
        h
    }

    /// Conjugacy classes, computed on first use.
    pub fn classes(&self) -> &ClassPartition {
        self.classes.get_or_init(|| ClassPartition::compute(self))
    }
}

/// True if `n` is a power of a prime, counting `1 = p^0`.
pub fn is_prime_power(n: usize) -> bool {
    if n <= 1 {
        return true;
    }
    let p = (2..=n).find(|d| n.is_multiple_of(*d)).unwrap();
    let mut m = n;
    while m.is_multiple_of(p) {
        m /= p;
    }
    m == 1
}
