use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use super::{invariant_factors, IntMatrix};

/// A finitely generated abelian group `Z^free ⊕ Z/d_1 ⊕ ... ⊕ Z/d_k` with
/// `d_i | d_{i+1}` and every `d_i >= 2`.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AbGroup {
    pub free: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

impl AbGroup {
    pub fn trivial() -> Self {
        Self::default()
    }

    pub fn free(rank: usize) -> Self {
        Self { free: rank, torsion: Vec::new() }
    }

    /// Builds a group from arbitrary cyclic orders; units are dropped and the
    /// rest is brought into invariant-factor form.
    pub fn new<T: Into<BigInt> + Clone>(free: usize, cyclic_orders: &[T]) -> Self {
        let orders: Vec<BigInt> = cyclic_orders.iter().cloned().map(Into::into).collect();
        Self { free, torsion: canonical_torsion(orders) }
    }

    pub fn cyclic(order: impl Into<BigInt>) -> Self {
        Self::new(0, &[order.into()])
    }

    pub fn is_trivial(&self) -> bool {
        self.free == 0 && self.torsion.is_empty()
    }

    pub fn is_free(&self) -> bool {
        self.torsion.is_empty()
    }

    pub fn direct_sum(&self, other: &AbGroup) -> AbGroup {
        let orders = self.torsion.iter().chain(&other.torsion).cloned().collect();
        AbGroup { free: self.free + other.free, torsion: canonical_torsion(orders) }
    }

    /// Plain-text rendering such as `Z^4 + Z/2` or `Z^11 + (Z/3)^2`.
    pub fn to_ascii(&self) -> String {
        let mut parts = Vec::new();
        match self.free {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        let mut i = 0;
        while i < self.torsion.len() {
            let d = &self.torsion[i];
            let run = self.torsion[i..].iter().take_while(|x| *x == d).count();
            parts.push(if run == 1 { format!("Z/{d}") } else { format!("(Z/{d})^{run}") });
            i += run;
        }
        if parts.is_empty() {
            "0".to_string()
        } else {
            parts.join(" + ")
        }
    }
}

impl fmt::Display for AbGroup {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_ascii())
    }
}

impl std::iter::Sum for AbGroup {
    fn sum<I: Iterator<Item = AbGroup>>(iter: I) -> Self {
        let mut free = 0;
        let mut orders = Vec::new();
        for g in iter {
            free += g.free;
            orders.extend(g.torsion);
        }
        AbGroup { free, torsion: canonical_torsion(orders) }
    }
}

fn canonical_torsion(mut orders: Vec<BigInt>) -> Vec<BigInt> {
    orders.retain(|d| !d.is_zero());
    let orders: Vec<BigInt> = orders.into_iter().map(|d| if d < BigInt::zero() { -d } else { d }).collect();
    if orders.len() <= 1 || orders.windows(2).all(|w| (&w[1] % &w[0]).is_zero()) {
        return orders.into_iter().filter(|d| !d.is_one()).collect();
    }
    invariant_factors(&IntMatrix::diagonal(&orders)).into_iter().filter(|d| !d.is_one()).collect()
}
