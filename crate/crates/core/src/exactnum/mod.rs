//! Exact arithmetic for character values.
//!
//! [`CycloNum`] is an element of a cyclotomic field `Q(ζ_N)`, stored in the
//! power basis `1, ζ_N, …, ζ_N^{φ(N)−1}`. Values of different conductors
//! combine by lifting both to the lcm of the conductors.

mod cyclotomic;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

pub use cyclotomic::cyclotomic_polynomial;

pub type Rational = BigRational;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("{k} is not coprime to conductor {n}")]
    NotCoprime { k: i64, n: u32 },
    #[error("value {0} is not a non-negative integer")]
    NotIntegral(String),
    #[error("cannot parse cyclotomic number: {0}")]
    Parse(String),
}

/// `Σ c_k ζ_N^k`, reduced modulo `Φ_N`.
///
/// Rational values always carry conductor 1, so `is_rational` is a
/// conductor check.
#[derive(Clone, Debug)]
pub struct CycloNum {
    conductor: u32,
    coeffs: BTreeMap<u32, Rational>,
}

impl CycloNum {
    pub fn zero() -> Self {
        CycloNum {
            conductor: 1,
            coeffs: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_rational(q: Rational) -> Self {
        let mut coeffs = BTreeMap::new();
        if !q.is_zero() {
            coeffs.insert(0, q);
        }
        CycloNum {
            conductor: 1,
            coeffs,
        }
    }

    /// `ζ_n^k`.
    pub fn zeta(n: u32, k: i64) -> Self {
        assert!(n >= 1, "conductor must be positive");
        let e = k.rem_euclid(n as i64) as u32;
        let b = cyclotomic::basis(n);
        Self::from_dense(
            n,
            b.powers[e as usize]
                .iter()
                .map(|&c| Rational::from_integer(c.into())),
        )
    }

    /// `√2 = ζ_8 + ζ_8⁻¹`.
    pub fn sqrt2() -> Self {
        &Self::zeta(8, 1) + &Self::zeta(8, -1)
    }

    /// `√3 = ζ_12 + ζ_12⁻¹`.
    pub fn sqrt3() -> Self {
        &Self::zeta(12, 1) + &Self::zeta(12, -1)
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Non-zero coefficients of the reduced power-basis expansion.
    pub fn coeffs(&self) -> &BTreeMap<u32, Rational> {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.conductor == 1
    }

    pub fn as_rational(&self) -> Option<Rational> {
        self.is_rational()
            .then(|| self.coeffs.get(&0).cloned().unwrap_or_else(Rational::zero))
    }

    pub fn as_integer(&self) -> Option<BigInt> {
        self.as_rational()
            .filter(|q| q.is_integer())
            .map(|q| q.to_integer())
    }

    pub fn as_i64(&self) -> Option<i64> {
        self.as_integer().and_then(|n| n.to_i64())
    }

    /// The value as a non-negative integer, or [`ExactError::NotIntegral`].
    pub fn to_natural(&self) -> Result<u64, ExactError> {
        self.as_integer()
            .filter(|n| !n.is_negative())
            .and_then(|n| n.to_u64())
            .ok_or_else(|| ExactError::NotIntegral(self.to_string()))
    }

    /// Applies `ζ_N ↦ ζ_N^k`.
    pub fn galois(&self, k: i64) -> Result<Self, ExactError> {
        let n = self.conductor;
        if (k.rem_euclid(n as i64)).gcd(&(n as i64)) != 1 {
            return Err(ExactError::NotCoprime { k, n });
        }
        let b = cyclotomic::basis(n);
        let mut acc = vec![Rational::zero(); b.phi];
        for (&i, c) in &self.coeffs {
            let e = (i as i64 * k).rem_euclid(n as i64) as usize;
            add_scaled(&mut acc, &b.powers[e], c);
        }
        Ok(Self::from_dense(n, acc))
    }

    /// Complex conjugate, `ζ ↦ ζ⁻¹`.
    pub fn conj(&self) -> Self {
        self.galois(-1).expect("-1 is a unit mod every conductor")
    }

    /// Re-expresses `self` over `Q(ζ_m)`; `m` must be a multiple of the
    /// current conductor.
    fn lift(&self, m: u32) -> Vec<Rational> {
        assert_eq!(m % self.conductor, 0, "lift target must be a multiple");
        let b = cyclotomic::basis(m);
        let step = m / self.conductor;
        let mut acc = vec![Rational::zero(); b.phi];
        for (&i, c) in &self.coeffs {
            add_scaled(&mut acc, &b.powers[(i * step) as usize], c);
        }
        acc
    }

    fn from_dense(conductor: u32, dense: impl IntoIterator<Item = Rational>) -> Self {
        let coeffs: BTreeMap<u32, Rational> = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (i as u32, c))
            .collect();
        let conductor = if coeffs.keys().all(|&k| k == 0) {
            1
        } else {
            conductor
        };
        CycloNum { conductor, coeffs }
    }

    fn combine(&self, other: &Self, f: impl Fn(&mut Rational, &Rational)) -> Self {
        let m = self.conductor.lcm(&other.conductor);
        let mut a = self.lift(m);
        let b = other.lift(m);
        for (x, y) in a.iter_mut().zip(&b) {
            f(x, y);
        }
        Self::from_dense(m, a)
    }

    pub fn scale(&self, q: &Rational) -> Self {
        if q.is_zero() {
            return Self::zero();
        }
        CycloNum {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|(&k, c)| (k, c * q)).collect(),
        }
    }

    /// `self · conj(self)`, a totally positive element whose rational part
    /// bounds `|χ(g)|²` from a single Galois orbit.
    pub fn norm_squared(&self) -> Self {
        self * &self.conj()
    }
}

fn add_scaled(acc: &mut [Rational], row: &[i64], c: &Rational) {
    for (a, &r) in acc.iter_mut().zip(row) {
        if r != 0 {
            *a += c * Rational::from_integer(r.into());
        }
    }
}

impl PartialEq for CycloNum {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        (self - other).is_zero()
    }
}

impl Eq for CycloNum {}

impl Default for CycloNum {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<i64> for CycloNum {
    fn from(n: i64) -> Self {
        Self::from_integer(n)
    }
}

impl From<Rational> for CycloNum {
    fn from(q: Rational) -> Self {
        Self::from_rational(q)
    }
}

impl Add for &CycloNum {
    type Output = CycloNum;
    fn add(self, rhs: &CycloNum) -> CycloNum {
        self.combine(rhs, |x, y| *x += y)
    }
}

impl Sub for &CycloNum {
    type Output = CycloNum;
    fn sub(self, rhs: &CycloNum) -> CycloNum {
        self.combine(rhs, |x, y| *x -= y)
    }
}

impl Mul for &CycloNum {
    type Output = CycloNum;
    fn mul(self, rhs: &CycloNum) -> CycloNum {
        let m = self.conductor.lcm(&rhs.conductor);
        let b = cyclotomic::basis(m);
        let a = self.lift(m);
        let c = rhs.lift(m);
        let mut acc = vec![Rational::zero(); b.phi];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in c.iter().enumerate().filter(|(_, y)| !y.is_zero()) {
                add_scaled(&mut acc, &b.powers[(i + j) % m as usize], &(x * y));
            }
        }
        CycloNum::from_dense(m, acc)
    }
}

impl Neg for &CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        self.scale(&-Rational::one())
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for CycloNum {
            type Output = CycloNum;
            fn $m(self, rhs: CycloNum) -> CycloNum {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for CycloNum {
    type Output = CycloNum;
    fn neg(self) -> CycloNum {
        -&self
    }
}

impl AddAssign<&CycloNum> for CycloNum {
    fn add_assign(&mut self, rhs: &CycloNum) {
        *self = &*self + rhs;
    }
}

impl std::iter::Sum for CycloNum {
    fn sum<I: Iterator<Item = CycloNum>>(iter: I) -> Self {
        iter.fold(CycloNum::zero(), |acc, x| &acc + &x)
    }
}

impl fmt::Display for CycloNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format(self))
    }
}

impl std::str::FromStr for CycloNum {
    type Err = ExactError;
    fn from_str(s: &str) -> Result<Self, ExactError> {
        text::parse(s)
    }
}
