use std::collections::HashMap;
use std::sync::Arc;

use crate::chartab::CharacterTable;
use crate::group::{is_prime_power, ElemSet, Subgroup};
use crate::lattice::SubgroupLattice;
use crate::oliver::{oliver_verdict, OliverWitness};

use super::ExclusionError;

/// A concrete subgroup cited by a rule, with its lattice class.
#[derive(Clone, Debug)]
pub struct Witness {
    pub subgroup: Subgroup,
    pub class: usize,
}

/// Two subgroups that generate the group, both non-Oliver, and a
/// prime-power subgroup of their intersection. `classes` and `witnesses`
/// are ordered `[first, second, inner]`; `classes[0] <= classes[1]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Configuration {
    pub classes: [usize; 3],
    pub witnesses: [usize; 3],
}

/// Summands and subgroups named by the dichotomy rule.
#[derive(Clone, Copy, Debug)]
pub(crate) struct DichotomyData {
    pub u4_2: usize,
    pub u5_2: usize,
    pub u5_1: usize,
    pub u6: usize,
    /// `(Q16, [24,4], Q8_A)`.
    pub config: Configuration,
}

/// Everything the rules need about one group, computed once and shared by
/// every dimension of a scan.
pub struct ExclusionContext {
    table: Arc<CharacterTable>,
    lattice: Arc<SubgroupLattice>,
    /// `fp[i][c]`: fixed dimension of real irreducible `i` under class `c`.
    fp: Vec<Vec<u64>>,
    /// `kernel[i][c]`: class `c` lies in the kernel of irreducible `i`.
    kernel: Vec<Vec<bool>>,
    trivial_irreducible: usize,
    witnesses: Vec<Witness>,
    witness_ids: HashMap<ElemSet, usize>,
    /// Oliver chain `(P, H)` for each non-Oliver witness.
    chains: HashMap<usize, (usize, usize)>,
    generating: Vec<Configuration>,
    two_groups: Vec<Configuration>,
    core: usize,
    dichotomy: Option<DichotomyData>,
}

impl ExclusionContext {
    pub fn new(
        table: Arc<CharacterTable>,
        lattice: Arc<SubgroupLattice>,
    ) -> Result<Self, ExclusionError> {
        if !Arc::ptr_eq(table.group(), lattice.group())
            && table.group().elements() != lattice.group().elements()
        {
            return Err(ExclusionError::GroupMismatch);
        }
        let mut fp = Vec::with_capacity(table.real().len());
        for chi in table.real() {
            let mut row = Vec::with_capacity(lattice.len());
            for class in lattice.classes() {
                row.push(table.fp_dim(chi, &class.representative)?);
            }
            fp.push(row);
        }
        let kernel = table
            .real()
            .iter()
            .map(|chi| chi.values().iter().map(|v| *v == chi.values()[0]).collect())
            .collect();
        let trivial_irreducible = table
            .real()
            .iter()
            .position(|chi| chi.degree() == 1 && chi.values().iter().all(|v| *v == chi.values()[0]))
            .expect("every table has a trivial character");

        let mut ctx = ExclusionContext {
            table,
            lattice,
            fp,
            kernel,
            trivial_irreducible,
            witnesses: Vec::new(),
            witness_ids: HashMap::new(),
            chains: HashMap::new(),
            generating: Vec::new(),
            two_groups: Vec::new(),
            core: 0,
            dichotomy: None,
        };
        let core = ctx.lattice.index_two_core();
        ctx.core = ctx.register(&core);
        ctx.build_configurations();
        ctx.dichotomy = ctx.find_dichotomy();
        Ok(ctx)
    }

    pub fn table(&self) -> &Arc<CharacterTable> {
        &self.table
    }

    pub fn lattice(&self) -> &Arc<SubgroupLattice> {
        &self.lattice
    }

    /// Fixed dimension of real irreducible `irreducible` under `class`.
    pub fn fp_dim(&self, irreducible: usize, class: usize) -> u64 {
        self.fp[irreducible][class]
    }

    pub fn trivial_irreducible(&self) -> usize {
        self.trivial_irreducible
    }

    pub(crate) fn kernel_row(&self, irreducible: usize) -> &[bool] {
        &self.kernel[irreducible]
    }

    pub fn witness(&self, id: usize) -> &Witness {
        &self.witnesses[id]
    }

    pub(crate) fn chain(&self, id: usize) -> (usize, usize) {
        self.chains[&id]
    }

    /// Configurations of non-Oliver pairs, largest inner subgroup first.
    pub fn generating_configurations(&self) -> &[Configuration] {
        &self.generating
    }

    /// Configurations whose three subgroups are all 2-groups.
    pub fn two_group_configurations(&self) -> &[Configuration] {
        &self.two_groups
    }

    /// Witness id of the intersection of all subgroups of index at most two.
    pub fn index_two_core(&self) -> usize {
        self.core
    }

    pub(crate) fn dichotomy(&self) -> Option<&DichotomyData> {
        self.dichotomy.as_ref()
    }

    fn register(&mut self, h: &Subgroup) -> usize {
        if let Some(&id) = self.witness_ids.get(h.set()) {
            return id;
        }
        let id = self.witnesses.len();
        self.witnesses.push(Witness {
            subgroup: h.clone(),
            class: self.lattice.identify_class(h),
        });
        self.witness_ids.insert(h.set().clone(), id);
        id
    }

    /// Registers a non-Oliver subgroup together with an Oliver chain obtained
    /// by conjugating its class representative's chain.
    fn register_non_oliver(&mut self, h: &Subgroup, rep_chain: &OliverWitness) -> usize {
        let id = self.register(h);
        if self.chains.contains_key(&id) {
            return id;
        }
        let lattice = Arc::clone(&self.lattice);
        let group = lattice.group();
        let rep = &lattice.class(self.witnesses[id].class).representative;
        let g = (0..group.order())
            .find(|&g| rep.conjugate_by(group, g) == *h)
            .expect("h is conjugate to its class representative");
        let p = self.register(&rep_chain.p.conjugate_by(group, g));
        let hh = self.register(&rep_chain.h.conjugate_by(group, g));
        self.chains.insert(id, (p, hh));
        id
    }

    fn build_configurations(&mut self) {
        let lattice = Arc::clone(&self.lattice);
        let group = lattice.group();
        let chains: Vec<Option<OliverWitness>> = lattice
            .classes()
            .iter()
            .map(|c| oliver_verdict(&lattice, &c.representative).witness)
            .collect();
        let n = lattice.len();
        let mut inner_cache: HashMap<ElemSet, Vec<Subgroup>> = HashMap::new();
        let mut seen: HashMap<[usize; 3], Configuration> = HashMap::new();
        for a in (0..n).filter(|&a| chains[a].is_some()) {
            let h1 = &lattice.class(a).representative;
            for b in (a..n).filter(|&b| chains[b].is_some()) {
                for h2 in lattice.class(b).conjugates() {
                    if !lattice.generates(h1, h2) {
                        continue;
                    }
                    let meet = h1.intersection(group, h2);
                    let inner = inner_cache.entry(meet.set().clone()).or_insert_with(|| {
                        lattice
                            .subgroups_within(&meet)
                            .into_iter()
                            .filter(|s| is_prime_power(s.order()))
                            .collect()
                    });
                    for c in inner.clone() {
                        let key = [a, b, lattice.identify_class(&c)];
                        if seen.contains_key(&key) {
                            continue;
                        }
                        let w1 = self.register_non_oliver(h1, chains[a].as_ref().unwrap());
                        let w2 = self.register_non_oliver(h2, chains[b].as_ref().unwrap());
                        let w3 = self.register(&c);
                        seen.insert(
                            key,
                            Configuration {
                                classes: key,
                                witnesses: [w1, w2, w3],
                            },
                        );
                    }
                }
            }
        }
        let mut all: Vec<Configuration> = seen.into_values().collect();
        all.sort_by_key(|cfg| {
            let [a, b, c] = cfg.classes;
            (std::cmp::Reverse(lattice.class(c).order()), b, a, c)
        });
        let two_power = |c: usize| lattice.class(c).order().is_power_of_two();
        self.two_groups = all
            .iter()
            .filter(|cfg| cfg.classes.iter().all(|&c| two_power(c)))
            .copied()
            .collect();
        self.generating = all;
    }

    fn find_dichotomy(&self) -> Option<DichotomyData> {
        let idx = |name: &str| self.table.real_index(name);
        let cls = |label: &str| self.lattice.by_label(label);
        let (q16, d24, q8) = (cls("Q16")?, cls("[24,4]")?, cls("Q8_A")?);
        let key = [q16.min(d24), q16.max(d24), q8];
        let config = *self.generating.iter().find(|cfg| cfg.classes == key)?;
        Some(DichotomyData {
            u4_2: idx("U4_2")?,
            u5_2: idx("U5_2")?,
            u5_1: idx("U5_1")?,
            u6: idx("U6")?,
            config,
        })
    }
}

#[cfg(test)]
mod tests {
    use crate::exclusion::test_context;

    fn label(id: usize) -> String {
        let ctx = test_context();
        ctx.lattice().class(ctx.witness(id).class).label.clone()
    }

    #[test]
    fn configuration_counts() {
        let ctx = test_context();
        assert_eq!(ctx.generating_configurations().len(), 275);
        assert_eq!(ctx.two_group_configurations().len(), 32);
        let first = &ctx.generating_configurations()[0];
        let names: Vec<String> = first.witnesses.iter().map(|&w| label(w)).collect();
        assert_eq!(names, ["Q16", "[24,4]", "Q8_A"]);
    }

    #[test]
    fn configurations_are_sound() {
        let ctx = test_context();
        let lattice = ctx.lattice();
        for cfg in ctx.generating_configurations() {
            let [h1, h2, c] = cfg.witnesses.map(|w| &ctx.witness(w).subgroup);
            assert!(lattice.generates(h1, h2));
            assert!(c.is_subgroup_of(h1) && c.is_subgroup_of(h2));
            assert!(crate::group::is_prime_power(c.order()));
            for w in cfg.witnesses {
                assert_eq!(
                    lattice.identify_class(&ctx.witness(w).subgroup),
                    ctx.witness(w).class
                );
            }
        }
    }

    #[test]
    fn fp_matrix_agrees_with_table() {
        let ctx = test_context();
        let table = ctx.table();
        for (i, chi) in table.real().iter().enumerate() {
            for (c, class) in ctx.lattice().classes().iter().enumerate() {
                assert_eq!(
                    ctx.fp_dim(i, c),
                    table.fp_dim(chi, &class.representative).unwrap()
                );
            }
        }
        assert_eq!(table.real()[ctx.trivial_irreducible()].name(), "Triv");
    }

    #[test]
    fn index_two_core_is_perfect_half() {
        let ctx = test_context();
        let core = &ctx.witness(ctx.index_two_core()).subgroup;
        assert_eq!(core.order(), 120);
        assert_eq!(label(ctx.index_two_core()), "SL(2,5)");
    }
}
