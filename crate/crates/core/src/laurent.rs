//! Integer Laurent polynomials in a single variable `q`.
//!
//! Quantum integers, quantum factorials and quantum binomials live here, as
//! do all graded ranks and graded Euler characteristics computed elsewhere in
//! the crate. Coefficients are arbitrary precision.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::bigint_serde::JsonInt;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LaurentError {
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("polynomial division is not exact: ({dividend}) / ({divisor})")]
    InexactDivision { dividend: String, divisor: String },
}

/// A Laurent polynomial `sum c_e q^e` with integer coefficients.
///
/// Zero coefficients are never stored, so derived equality is mathematical
/// equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(0, 1)
    }

    /// The variable `q`.
    pub fn q() -> Self {
        Self::monomial(1, 1)
    }

    pub fn monomial(exp: i64, coeff: impl Into<BigInt>) -> Self {
        let mut p = Self::zero();
        p.add_term(exp, coeff.into());
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    fn add_term(&mut self, exp: i64, coeff: BigInt) {
        if coeff.is_zero() {
            return;
        }
        let slot = self.terms.entry(exp).or_insert_with(BigInt::zero);
        *slot += coeff;
        if slot.is_zero() {
            self.terms.remove(&exp);
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `q^exp`.
    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `q^d`.
    pub fn shift(&self, d: i64) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (e + d, c.clone())).collect() }
    }

    /// Substitutes `q -> q^{-1}`.
    pub fn mirror(&self) -> Self {
        Self { terms: self.terms.iter().map(|(e, c)| (-e, c.clone())).collect() }
    }

    pub fn is_symmetric(&self) -> bool {
        *self == self.mirror()
    }

    /// Value at `q = 1`, i.e. the sum of the coefficients.
    pub fn eval_at_one(&self) -> BigInt {
        self.terms.values().sum()
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::one(), |acc, _| &acc * self)
    }

    /// Exact division. Fails unless `divisor` divides `self` in `Z[q, q^-1]`.
    pub fn div_exact(&self, divisor: &Self) -> Result<Self, LaurentError> {
        let (d_min, d_max) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(LaurentError::DivisionByZero),
        };
        let Some(lowest) = self.min_exp() else {
            return Ok(Self::zero());
        };
        let lead = &divisor.terms[&d_max];
        let inexact = || LaurentError::InexactDivision { dividend: self.to_string(), divisor: divisor.to_string() };

        let mut rem = self.clone();
        let mut quot = Self::zero();
        while let Some(top) = rem.max_exp() {
            let e = top - d_max;
            if e < lowest - d_min {
                return Err(inexact());
            }
            let (c, r) = rem.terms[&top].div_rem(lead);
            if !r.is_zero() {
                return Err(inexact());
            }
            for (de, dc) in &divisor.terms {
                let slot = rem.terms.entry(e + de).or_insert_with(BigInt::zero);
                *slot -= &c * dc;
                if slot.is_zero() {
                    rem.terms.remove(&(e + de));
                }
            }
            quot.terms.insert(e, c);
        }
        Ok(quot)
    }
}

/// The quantum integer `[n] = q^{n-1} + q^{n-3} + ... + q^{1-n}`; `[0] = 0`.
pub fn qint(n: u32) -> LaurentPoly {
    let n = i64::from(n);
    LaurentPoly::from_terms((0..n).map(|i| (n - 1 - 2 * i, 1)))
}

/// `[n]! = [n][n-1]...[1]`.
pub fn qfactorial(n: u32) -> LaurentPoly {
    (1..=n).fold(LaurentPoly::one(), |acc, k| &acc * &qint(k))
}

/// The quantum binomial `[n]! / ([k]! [n-k]!)`, zero unless `0 <= k <= n`.
///
/// Built as `prod_{i=1..k} [n-k+i] / [i]`, dividing by one quantum integer
/// after each multiplication. Every division is checked; an inexact step is
/// a bug and panics.
pub fn qbinom(n: u32, k: i64) -> LaurentPoly {
    if k < 0 || k > i64::from(n) {
        return LaurentPoly::zero();
    }
    let k = (k as u32).min(n - k as u32);
    (1..=k).fold(LaurentPoly::one(), |acc, i| {
        (&acc * &qint(n - k + i)).div_exact(&qint(i)).expect("quantum binomial numerator must be divisible by each [d]")
    })
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        // highest power first
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            match (i, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let unit = abs.is_one();
            match *e {
                0 => write!(f, "{abs}")?,
                1 if unit => write!(f, "q")?,
                1 => write!(f, "{abs}q")?,
                _ if unit => write!(f, "q^{e}")?,
                _ => write!(f, "{abs}q^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

impl<'a> Add<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl<'a> Sub<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl<'a> Mul<&'a LaurentPoly> for &'a LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (e1, c1) in &self.terms {
            for (e2, c2) in &rhs.terms {
                out.add_term(e1 + e2, c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly { terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect() }
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (e, c) in &rhs.terms {
            self.add_term(*e, -c);
        }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<LaurentPoly> for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

impl std::iter::Sum for LaurentPoly {
    fn sum<I: Iterator<Item = LaurentPoly>>(iter: I) -> Self {
        iter.fold(LaurentPoly::zero(), |mut acc, p| {
            acc += &p;
            acc
        })
    }
}

#[derive(Serialize, Deserialize)]
struct LaurentJson {
    terms: Vec<(i64, JsonInt)>,
}

impl Serialize for LaurentPoly {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        LaurentJson { terms: self.terms.iter().map(|(e, c)| (*e, JsonInt(c.clone()))).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let raw = LaurentJson::deserialize(d)?;
        if raw.terms.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(serde::de::Error::custom("exponents must be strictly increasing"));
        }
        Ok(LaurentPoly::from_terms(raw.terms.into_iter().map(|(e, c)| (e, c.0))))
    }
}
