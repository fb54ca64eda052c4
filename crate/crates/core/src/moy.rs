//! MOY evaluation of the closed ladder webs of `T(2,m)` and the sl(N)
//! polynomial by the skein expansion.

use num_bigint::BigInt;

use crate::laurent::{qbinom, qint, LaurentPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    One,
    Two,
}

/// Closure of a two-strand ladder with `rungs` thick rungs. Zero rungs is
/// two disjoint circles.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct LadderWeb {
    pub rungs: u32,
}

impl LadderWeb {
    /// Evaluates by local relations: a pair of adjacent rungs bounds a bigon
    /// (factor `[2]`), one rung is a theta web (digon on the thick edge,
    /// then a circle).
    pub fn evaluate(&self, n: usize) -> Result<LaurentPoly> {
        check_n(n)?;
        let circle = moy_circle(n, EdgeLabel::One)?;
        Ok(match self.rungs {
            0 => &circle * &circle,
            1 => &circle * &qint(n as u32 - 1),
            r => &qint(2) * &LadderWeb { rungs: r - 1 }.evaluate(n)?,
        })
    }
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(())
}

pub fn moy_circle(n: usize, label: EdgeLabel) -> Result<LaurentPoly> {
    check_n(n)?;
    Ok(match label {
        EdgeLabel::One => qint(n as u32),
        EdgeLabel::Two => qbinom(n as u32, 2),
    })
}

/// `[N]^2` for no rungs, `[2]^{j-1} [N] [N-1]` otherwise.
pub fn ladder_poly(n: usize, rungs: u32) -> Result<LaurentPoly> {
    check_n(n)?;
    let n32 = n as u32;
    Ok(match rungs {
        0 => qint(n32).pow(2),
        j => &(&qint(2).pow(j - 1) * &qint(n32)) * &qint(n32 - 1),
    })
}

fn binomial(m: u32, j: u32) -> BigInt {
    (0..j).fold(BigInt::from(1), |acc, i| acc * (m - i) / (i + 1))
}

/// The sl(N) polynomial of `T(2,m)` from the skein expansion of each
/// crossing into its oriented and thick resolutions.
pub fn sln_polynomial(n: usize, m: i64) -> Result<LaurentPoly> {
    check_n(n)?;
    let n_ = n as i64;
    let k = m.unsigned_abs() as u32;
    // (oriented weight, thick weight exponent); the thick weight is -q^e
    let (w_or, w_th) = if m >= 0 { (n_ - 1, n_) } else { (1 - n_, -n_) };
    let mut total = LaurentPoly::zero();
    for j in 0..=k {
        let sign = if j % 2 == 0 { 1 } else { -1 };
        let exp = w_or * i64::from(k - j) + w_th * i64::from(j);
        let coeff = LaurentPoly::monomial(exp, binomial(k, j) * sign);
        total += &(&coeff * &ladder_poly(n, j)?);
    }
    Ok(total)
}
