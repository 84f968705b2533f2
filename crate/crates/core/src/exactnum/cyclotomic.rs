//! Cyclotomic polynomials and per-conductor reduction tables.

use std::collections::HashMap;
use std::sync::{Arc, OnceLock, RwLock};

/// Reduction data for `Q(ζ_N)` in the power basis `1, ζ, …, ζ^{φ(N)−1}`.
#[derive(Debug)]
pub(crate) struct Basis {
    pub(crate) phi: usize,
    /// `powers[e]` holds the coefficients of `x^e mod Φ_N`, for `0 ≤ e < N`.
    pub(crate) powers: Vec<Vec<i64>>,
}

/// Coefficients of `Φ_n`, lowest degree first.
pub fn cyclotomic_polynomial(n: u32) -> Vec<i64> {
    assert!(n >= 1, "cyclotomic polynomial index must be positive");
    // x^n - 1
    let mut num = vec![0i64; n as usize + 1];
    num[0] = -1;
    num[n as usize] = 1;
    for d in (1..n).filter(|d| n.is_multiple_of(*d)) {
        num = exact_div(&num, &cyclotomic_polynomial(d));
    }
    num
}

/// Quotient of `a` by the monic polynomial `b`; the remainder must vanish.
fn exact_div(a: &[i64], b: &[i64]) -> Vec<i64> {
    let db = b.len() - 1;
    debug_assert_eq!(b[db], 1);
    let mut rem = a.to_vec();
    let mut q = vec![0i64; a.len() - db];
    for i in (0..q.len()).rev() {
        let c = rem[i + db];
        q[i] = c;
        for (j, &bj) in b.iter().enumerate() {
            rem[i + j] -= c * bj;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

impl Basis {
    fn build(n: u32) -> Basis {
        let phi_poly = cyclotomic_polynomial(n);
        let phi = phi_poly.len() - 1;
        let mut powers = Vec::with_capacity(n as usize);
        let mut cur = vec![0i64; phi.max(1)];
        cur[0] = 1;
        for _ in 0..n {
            powers.push(cur.clone());
            // multiply by x, then fold the overflow term back with Φ_N
            let top = if phi == 0 { 0 } else { cur[phi - 1] };
            for i in (1..phi).rev() {
                cur[i] = cur[i - 1];
            }
            if phi > 0 {
                cur[0] = 0;
                for i in 0..phi {
                    cur[i] = cur[i]
                        .checked_sub(top.checked_mul(phi_poly[i]).expect("coefficient overflow"))
                        .expect("coefficient overflow");
                }
            }
        }
        Basis { phi, powers }
    }
}

static BASES: OnceLock<RwLock<HashMap<u32, Arc<Basis>>>> = OnceLock::new();

pub(crate) fn basis(n: u32) -> Arc<Basis> {
    let cache = BASES.get_or_init(|| RwLock::new(HashMap::new()));
    if let Some(b) = cache.read().expect("basis cache poisoned").get(&n) {
        return Arc::clone(b);
    }
    let built = Arc::new(Basis::build(n));
    let mut w = cache.write().expect("basis cache poisoned");
    Arc::clone(w.entry(n).or_insert(built))
}
