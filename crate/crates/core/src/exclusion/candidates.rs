use crate::chartab::RGModule;

use super::ExclusionContext;

/// Filters applied while enumerating candidate modules.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Constraints {
    /// Keep only faithful modules.
    pub effective: bool,
    /// Keep only modules with `dim V^H <= k` for every nontrivial `H`.
    pub pseudofree: Option<u64>,
    /// Real irreducibles that may not occur.
    pub forbidden: Vec<usize>,
}

/// A possible tangent module at a global fixed point: a real module with no
/// trivial summand.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CandidateModule {
    pub module: RGModule,
    pub dimension: u64,
    pub faithful: bool,
    /// Fixed dimension under each lattice class.
    pub fixed_dims: Vec<u64>,
}

impl CandidateModule {
    pub fn new(ctx: &ExclusionContext, module: RGModule) -> Self {
        let classes = ctx.lattice().len();
        let mut fixed_dims = vec![0u64; classes];
        let mut common = vec![true; ctx.table().classes().len()];
        for (i, m) in module.summands() {
            for (c, d) in fixed_dims.iter_mut().enumerate() {
                *d += m as u64 * ctx.fp_dim(i, c);
            }
            for (c, k) in common.iter_mut().zip(ctx.kernel_row(i)) {
                *c &= *k;
            }
        }
        CandidateModule {
            dimension: module.dimension(ctx.table()),
            faithful: common.iter().skip(1).all(|&k| !k),
            module,
            fixed_dims,
        }
    }

    pub fn contains(&self, irreducible: usize) -> bool {
        self.module.multiplicity(irreducible) > 0
    }

    pub fn fixed_dim(&self, class: usize) -> u64 {
        self.fixed_dims[class]
    }
}

/// All modules of dimension `n` without trivial summand that satisfy
/// `constraints`, in increasing lexicographic order of multiplicity vectors.
pub fn enumerate_candidates(
    ctx: &ExclusionContext,
    n: u64,
    constraints: &Constraints,
) -> Vec<CandidateModule> {
    let table = ctx.table();
    let count = table.real().len();
    let degrees: Vec<u64> = table.real().iter().map(|chi| chi.degree()).collect();
    let allowed: Vec<bool> = (0..count)
        .map(|i| i != ctx.trivial_irreducible() && !constraints.forbidden.contains(&i))
        .collect();
    let nontrivial: Vec<usize> = (0..ctx.lattice().len())
        .filter(|&c| c != ctx.lattice().trivial_class())
        .collect();

    struct Search<'a> {
        ctx: &'a ExclusionContext,
        degrees: &'a [u64],
        allowed: &'a [bool],
        nontrivial: &'a [usize],
        bound: Option<u64>,
        effective: bool,
        mults: Vec<u32>,
        fixed: Vec<u64>,
        out: Vec<CandidateModule>,
    }

    impl Search<'_> {
        fn visit(&mut self, index: usize, remaining: u64) {
            if index == self.mults.len() {
                if remaining == 0 {
                    let c = CandidateModule::new(
                        self.ctx,
                        RGModule::from_multiplicities(self.mults.clone()),
                    );
                    if !self.effective || c.faithful {
                        self.out.push(c);
                    }
                }
                return;
            }
            if !self.allowed[index] {
                self.visit(index + 1, remaining);
                return;
            }
            let degree = self.degrees[index];
            let mut m = 0u32;
            loop {
                self.visit(index + 1, remaining - m as u64 * degree);
                if (m as u64 + 1) * degree > remaining {
                    break;
                }
                m += 1;
                self.mults[index] = m;
                for &c in self.nontrivial {
                    self.fixed[c] += self.ctx.fp_dim(index, c);
                }
                let over = self
                    .bound
                    .is_some_and(|k| self.nontrivial.iter().any(|&c| self.fixed[c] > k));
                if over {
                    break;
                }
            }
            for &c in self.nontrivial {
                self.fixed[c] -= m as u64 * self.ctx.fp_dim(index, c);
            }
            self.mults[index] = 0;
        }
    }

    let mut search = Search {
        ctx,
        degrees: &degrees,
        allowed: &allowed,
        nontrivial: &nontrivial,
        bound: constraints.pseudofree,
        effective: constraints.effective,
        mults: vec![0; count],
        fixed: vec![0; ctx.lattice().len()],
        out: Vec::new(),
    };
    search.visit(0, n);
    search.out
}
