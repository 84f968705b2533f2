//! Character tables: loading and verification, Frobenius–Schur
//! realification, kernels, and fixed-point dimensions of real modules.

mod file;
mod module;

use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::exactnum::{CycloNum, ExactError, Rational};
use crate::group::{subgroup_closure, ConjugacyClass, FiniteGroup, Subgroup};

pub use module::RGModule;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ChartabError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("class mismatch: {0}")]
    ClassMismatch(String),
    #[error("characters {first} and {second} violate orthogonality")]
    OrthogonalityFailure { first: String, second: String },
    #[error("squared degrees sum to {sum}, group order is {order}")]
    DegreeSum { sum: u64, order: usize },
    #[error("character {name} has Frobenius-Schur value {value}")]
    NotAnIndicator { name: String, value: String },
    #[error("character {name} is not Galois-consistent at class {class} under k = {k}")]
    GaloisMismatch { name: String, class: String, k: u64 },
    #[error("character {name} exceeds its degree in absolute value at class {class}")]
    ValueBound { name: String, class: String },
    #[error("unknown character {0}")]
    UnknownCharacter(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CharacterKind {
    ComplexIngested,
    RealIrreducible,
}

/// Class function with one value per conjugacy class, in the order of the
/// group's computed classes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Character {
    name: String,
    values: Vec<CycloNum>,
    kind: CharacterKind,
}

impl Character {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn values(&self) -> &[CycloNum] {
        &self.values
    }

    pub fn value(&self, class: usize) -> &CycloNum {
        &self.values[class]
    }

    pub fn kind(&self) -> CharacterKind {
        self.kind
    }

    /// Value at the identity class.
    pub fn degree(&self) -> u64 {
        self.values[0]
            .to_natural()
            .expect("degrees are verified on load")
    }

    pub fn is_real_valued(&self) -> bool {
        self.values.iter().all(|v| v.conj() == *v)
    }

    fn conj(&self) -> Vec<CycloNum> {
        self.values.iter().map(CycloNum::conj).collect()
    }
}

/// A verified character table bound to a concrete group.
#[derive(Debug)]
pub struct CharacterTable {
    group: Arc<FiniteGroup>,
    name: String,
    labels: Vec<String>,
    power_maps: BTreeMap<u64, Vec<usize>>,
    complex: Vec<Character>,
    indicators: Vec<i8>,
    real: Vec<Character>,
}

/// Parses and verifies a character-table file against `group`.
pub fn load_table(group: Arc<FiniteGroup>, text: &str) -> Result<CharacterTable, ChartabError> {
    CharacterTable::load(group, text)
}

/// The real irreducible characters of a verified table.
pub fn realify(table: &CharacterTable) -> Vec<Character> {
    table.real.clone()
}

fn primes_dividing(n: u64) -> Vec<u64> {
    (2..=n)
        .filter(|&p| n.is_multiple_of(p) && (2..p).all(|d| p % d != 0))
        .collect()
}

impl CharacterTable {
    pub fn load(group: Arc<FiniteGroup>, text: &str) -> Result<Self, ChartabError> {
        let file = file::parse(text)?;
        let part = group.classes();
        let n = part.classes.len();
        if file.classes.len() != n {
            return Err(ChartabError::ClassMismatch(format!(
                "file lists {} classes, group has {n}",
                file.classes.len()
            )));
        }
        let binding = bind_classes(&file.classes, file.class_order.as_deref(), &part.classes)?;
        let labels: Vec<String> = binding
            .iter()
            .map(|&j| file.classes[j].label.clone())
            .collect();

        let exponent = group.exponent();
        if file.exponent != exponent {
            return Err(ChartabError::ClassMismatch(format!(
                "file exponent {} but group exponent {exponent}",
                file.exponent
            )));
        }

        let mut power_maps = BTreeMap::new();
        for p in primes_dividing(group.order() as u64) {
            power_maps.insert(p, part.power_map(&group, p));
        }
        for (p, file_map) in &file.power_maps {
            if file_map.len() != n {
                return Err(ChartabError::Parse(format!(
                    "power map {p} has wrong length"
                )));
            }
            let computed = part.power_map(&group, *p);
            for i in 0..n {
                if file_map[binding[i]] != labels[computed[i]] {
                    return Err(ChartabError::ClassMismatch(format!(
                        "power map {p} sends {} to {} in the file, computed {}",
                        labels[i], file_map[binding[i]], labels[computed[i]]
                    )));
                }
            }
        }

        if file.chars.len() != n {
            return Err(ChartabError::ClassMismatch(format!(
                "{} characters for {n} classes",
                file.chars.len()
            )));
        }
        let mut complex = Vec::with_capacity(n);
        for (name, values) in &file.chars {
            if values.len() != n {
                return Err(ChartabError::Parse(format!(
                    "character {name} has wrong length"
                )));
            }
            if complex.iter().any(|c: &Character| &c.name == name) {
                return Err(ChartabError::Parse(format!("duplicate character {name}")));
            }
            let values: Vec<CycloNum> = binding.iter().map(|&j| values[j].clone()).collect();
            if let Some(v) = values
                .iter()
                .find(|v| !exponent.is_multiple_of(v.conductor() as u64))
            {
                return Err(ChartabError::Parse(format!(
                    "character {name} has value {v} outside Q(z_{exponent})"
                )));
            }
            values[0].to_natural()?;
            complex.push(Character {
                name: name.clone(),
                values,
                kind: CharacterKind::ComplexIngested,
            });
        }

        let mut table = CharacterTable {
            group,
            name: file.name.clone(),
            labels,
            power_maps,
            complex,
            indicators: Vec::new(),
            real: Vec::new(),
        };
        table.verify_orthogonality()?;
        table.verify_galois()?;
        table.verify_bounds()?;
        table.indicators = table
            .complex
            .iter()
            .map(|c| table.frobenius_schur(c))
            .collect::<Result<_, _>>()?;
        table.real = table.realify_rows(&file.real_names)?;
        Ok(table)
    }

    pub fn group(&self) -> &Arc<FiniteGroup> {
        &self.group
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.group.classes().classes
    }

    /// Table labels of the classes, in computed class order.
    pub fn class_labels(&self) -> &[String] {
        &self.labels
    }

    pub fn class_index(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Computed `p`-power map for primes dividing the group order.
    pub fn power_map(&self, p: u64) -> Option<&[usize]> {
        self.power_maps.get(&p).map(Vec::as_slice)
    }

    pub fn complex(&self) -> &[Character] {
        &self.complex
    }

    /// Frobenius–Schur indicators of the complex characters.
    pub fn indicators(&self) -> &[i8] {
        &self.indicators
    }

    /// Real irreducible characters sorted by (degree, file order).
    pub fn real(&self) -> &[Character] {
        &self.real
    }

    pub fn real_index(&self, name: &str) -> Option<usize> {
        self.real.iter().position(|c| c.name == name)
    }

    pub fn parse_module(&self, text: &str) -> Result<RGModule, ChartabError> {
        RGModule::parse(self, text)
    }

    fn class_size(&self, c: usize) -> usize {
        self.classes()[c].size()
    }

    /// `(1/|G|) Σ_g a(g) · conj(b(g))`.
    pub fn inner_product(&self, a: &[CycloNum], b: &[CycloNum]) -> CycloNum {
        let sum: CycloNum = (0..a.len())
            .map(|c| {
                (&a[c] * &b[c].conj()).scale(&Rational::from_integer(self.class_size(c).into()))
            })
            .sum();
        sum.scale(&Rational::new(1.into(), (self.group.order() as i64).into()))
    }

    fn verify_orthogonality(&self) -> Result<(), ChartabError> {
        let mut degree_sum = 0u64;
        for (i, a) in self.complex.iter().enumerate() {
            degree_sum += a.degree() * a.degree();
            for (j, b) in self.complex.iter().enumerate().skip(i) {
                let expected = CycloNum::from_integer((i == j) as i64);
                if self.inner_product(&a.values, &b.values) != expected {
                    return Err(ChartabError::OrthogonalityFailure {
                        first: a.name.clone(),
                        second: b.name.clone(),
                    });
                }
            }
        }
        if degree_sum != self.group.order() as u64 {
            return Err(ChartabError::DegreeSum {
                sum: degree_sum,
                order: self.group.order(),
            });
        }
        Ok(())
    }

    fn units(&self) -> Vec<u64> {
        let e = self.group.exponent();
        (1..=e).filter(|k| k.gcd(&e) == 1).collect()
    }

    /// `χ(g^k) = σ_k(χ(g))` for every unit `k` modulo the exponent.
    fn verify_galois(&self) -> Result<(), ChartabError> {
        let part = self.group.classes();
        for k in self.units() {
            let image: Vec<usize> = part
                .classes
                .iter()
                .map(|c| part.class_of[self.group.pow(c.representative, k)])
                .collect();
            for chi in &self.complex {
                for (c, &d) in image.iter().enumerate() {
                    if chi.values[c].galois(k as i64)? != chi.values[d] {
                        return Err(ChartabError::GaloisMismatch {
                            name: chi.name.clone(),
                            class: self.labels[c].clone(),
                            k,
                        });
                    }
                }
            }
        }
        Ok(())
    }

    /// The Galois-averaged `|χ(g)|²` never exceeds `χ(1)²`.
    fn verify_bounds(&self) -> Result<(), ChartabError> {
        let units = self.units();
        let count = Rational::from_integer(BigInt::from(units.len()));
        for chi in &self.complex {
            let d2 = Rational::from_integer(BigInt::from(chi.degree() * chi.degree()));
            for (c, v) in chi.values.iter().enumerate() {
                let norm = v.norm_squared();
                let trace: CycloNum = units
                    .iter()
                    .map(|&k| norm.galois(k as i64))
                    .collect::<Result<Vec<_>, _>>()?
                    .into_iter()
                    .sum();
                let avg = trace
                    .as_rational()
                    .expect("a full Galois orbit sums to a rational")
                    / &count;
                if avg > d2 {
                    return Err(ChartabError::ValueBound {
                        name: chi.name.clone(),
                        class: self.labels[c].clone(),
                    });
                }
            }
        }
        Ok(())
    }

    /// `(1/|G|) Σ_g χ(g²)`, evaluated class-wise through the square map.
    pub fn frobenius_schur(&self, chi: &Character) -> Result<i8, ChartabError> {
        let part = self.group.classes();
        let sum: CycloNum = part
            .classes
            .iter()
            .map(|c| {
                let sq = part.class_of[self.group.mul(c.representative, c.representative)];
                chi.values[sq].scale(&Rational::from_integer(c.size().into()))
            })
            .sum();
        let value = sum.scale(&Rational::new(1.into(), (self.group.order() as i64).into()));
        let indicator = value
            .as_integer()
            .and_then(|v| v.to_i8())
            .filter(|v| (-1..=1).contains(v));
        match indicator {
            Some(i) if (i != 0) == chi.is_real_valued() => Ok(i),
            _ => Err(ChartabError::NotAnIndicator {
                name: chi.name.clone(),
                value: value.to_string(),
            }),
        }
    }

    fn realify_rows(
        &self,
        real_names: &[(String, String)],
    ) -> Result<Vec<Character>, ChartabError> {
        let mut names: HashMap<&str, &str> = HashMap::new();
        for (complex, real) in real_names {
            if !self.complex.iter().any(|c| &c.name == complex) {
                return Err(ChartabError::UnknownCharacter(complex.clone()));
            }
            names.insert(complex.as_str(), real.as_str());
        }
        let mut consumed = vec![false; self.complex.len()];
        let mut rows: Vec<(u64, usize, Character)> = Vec::new();
        for (i, chi) in self.complex.iter().enumerate() {
            if consumed[i] {
                continue;
            }
            consumed[i] = true;
            let values = match self.indicators[i] {
                1 => chi.values.clone(),
                -1 => chi.values.iter().map(|v| v + v).collect(),
                _ => {
                    let bar = chi.conj();
                    let j = self
                        .complex
                        .iter()
                        .position(|c| c.values == bar)
                        .ok_or_else(|| ChartabError::NotAnIndicator {
                            name: chi.name.clone(),
                            value: "0 without a conjugate row".into(),
                        })?;
                    consumed[j] = true;
                    chi.values.iter().zip(&bar).map(|(a, b)| a + b).collect()
                }
            };
            let name = names.get(chi.name.as_str()).copied().unwrap_or(&chi.name);
            let row = Character {
                name: name.to_string(),
                values,
                kind: CharacterKind::RealIrreducible,
            };
            rows.push((row.degree(), i, row));
        }
        rows.sort_by_key(|(d, i, _)| (*d, *i));
        Ok(rows.into_iter().map(|(_, _, r)| r).collect())
    }

    /// Classes on which `χ` takes the value `χ(1)`.
    fn kernel_classes(&self, chi: &Character) -> Vec<bool> {
        chi.values.iter().map(|v| *v == chi.values[0]).collect()
    }

    /// `{g : χ(g) = χ(1)}`, a normal subgroup.
    pub fn kernel(&self, chi: &Character) -> Subgroup {
        let in_kernel = self.kernel_classes(chi);
        let part = self.group.classes();
        let ids: Vec<usize> = (0..self.group.order())
            .filter(|&g| in_kernel[part.class_of[g]])
            .collect();
        let k = subgroup_closure(&self.group, &ids);
        assert_eq!(k.order(), ids.len(), "kernel classes form a subgroup");
        assert!(k.is_normal(&self.group), "kernels are normal");
        k
    }

    /// True iff the kernels of the summands of `v` meet trivially.
    pub fn is_faithful(&self, v: &RGModule) -> bool {
        let mut common = vec![true; self.labels.len()];
        for (i, _) in v.summands() {
            for (c, k) in self.kernel_classes(&self.real[i]).into_iter().enumerate() {
                common[c] &= k;
            }
        }
        common.iter().skip(1).all(|&k| !k)
    }

    /// Number of elements of `h` in each class.
    pub fn class_counts(&self, h: &Subgroup) -> Vec<usize> {
        let part = self.group.classes();
        let mut counts = vec![0; self.labels.len()];
        for m in h.members() {
            counts[part.class_of[m]] += 1;
        }
        counts
    }

    /// `dim V^H = (1/|H|) Σ_{h∈H} χ(h)`, summed over the elements of `h`.
    pub fn fp_dim(&self, chi: &Character, h: &Subgroup) -> Result<u64, ChartabError> {
        self.fp_dim_from_counts(chi, &self.class_counts(h), h.order())
    }

    pub fn fp_dim_from_counts(
        &self,
        chi: &Character,
        counts: &[usize],
        order: usize,
    ) -> Result<u64, ChartabError> {
        let sum: CycloNum = counts
            .iter()
            .enumerate()
            .filter(|(_, &n)| n > 0)
            .map(|(c, &n)| chi.values[c].scale(&Rational::from_integer(n.into())))
            .sum();
        let q = sum.scale(&Rational::new(1.into(), (order as i64).into()));
        Ok(q.to_natural()?)
    }

    pub fn module_fp_dim(&self, v: &RGModule, h: &Subgroup) -> Result<u64, ChartabError> {
        let counts = self.class_counts(h);
        v.summands().try_fold(0u64, |acc, (i, m)| {
            Ok(acc + m as u64 * self.fp_dim_from_counts(&self.real[i], &counts, h.order())?)
        })
    }
}

/// Maps each computed class to the file column carrying its values.
fn bind_classes(
    file_classes: &[file::FileClass],
    class_order: Option<&[String]>,
    computed: &[ConjugacyClass],
) -> Result<Vec<usize>, ChartabError> {
    let binding: Vec<usize> = match class_order {
        Some(order) => {
            if order.len() != computed.len() {
                return Err(ChartabError::ClassMismatch(
                    "class_order has wrong length".into(),
                ));
            }
            order
                .iter()
                .map(|label| {
                    file_classes
                        .iter()
                        .position(|f| &f.label == label)
                        .ok_or_else(|| {
                            ChartabError::ClassMismatch(format!("unknown label {label}"))
                        })
                })
                .collect::<Result<_, _>>()?
        }
        None => computed
            .iter()
            .map(|c| {
                let mut hits = file_classes
                    .iter()
                    .enumerate()
                    .filter(|(_, f)| f.order == c.order_of_rep && f.size == c.size());
                match (hits.next(), hits.next()) {
                    (Some((j, _)), None) => Ok(j),
                    (None, _) => Err(ChartabError::ClassMismatch(format!(
                        "no file class of order {} and size {}",
                        c.order_of_rep,
                        c.size()
                    ))),
                    _ => Err(ChartabError::ClassMismatch(format!(
                        "classes of order {} and size {} are ambiguous without class_order",
                        c.order_of_rep,
                        c.size()
                    ))),
                }
            })
            .collect::<Result<_, _>>()?,
    };
    let mut seen = vec![false; file_classes.len()];
    for (c, &j) in computed.iter().zip(&binding) {
        if std::mem::replace(&mut seen[j], true) {
            return Err(ChartabError::ClassMismatch(format!(
                "label {} bound twice",
                file_classes[j].label
            )));
        }
        let f = &file_classes[j];
        if f.order != c.order_of_rep || f.size != c.size() {
            return Err(ChartabError::ClassMismatch(format!(
                "file class {} has order {} and size {}, computed class has order {} and size {}",
                f.label,
                f.order,
                f.size,
                c.order_of_rep,
                c.size()
            )));
        }
    }
    if computed[0].size() != 1 || file_classes[binding[0]].order != 1 {
        return Err(ChartabError::ClassMismatch(
            "identity class must come first".into(),
        ));
    }
    Ok(binding)
}
