use std::collections::BTreeMap;

use num_traits::{One, Signed, Zero};

use super::{invariant_factors, AbGroup, IntMatrix, LinalgError};

/// Homology `ker(d_out) / im(d_in)` at the middle term of
/// `A --d_in--> B --d_out--> C`.
pub fn homology_at(d_in: &IntMatrix, d_out: &IntMatrix) -> Result<AbGroup, LinalgError> {
    if d_in.rows() != d_out.cols() {
        return Err(LinalgError::DimensionMismatch { incoming_rows: d_in.rows(), outgoing_cols: d_out.cols() });
    }
    if !(d_out * d_in).is_zero() {
        return Err(LinalgError::NotAComplex);
    }
    let middle = d_in.rows();
    let out_rank = invariant_factors(d_out).len();
    let in_factors = invariant_factors(d_in);
    // ker(d_out) is saturated, so every torsion element of coker(d_in) lies in it
    let free = middle - out_rank - in_factors.len();
    Ok(AbGroup::new(free, &in_factors))
}

/// A cochain complex of finitely generated free abelian groups on a
/// contiguous range of positions. Differentials raise the position by one.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreeChainComplex {
    start: i64,
    ranks: Vec<usize>,
    diffs: Vec<IntMatrix>,
}

impl FreeChainComplex {
    /// `diffs[k]` maps position `start + k` to `start + k + 1`.
    pub fn new(start: i64, ranks: Vec<usize>, diffs: Vec<IntMatrix>) -> Result<Self, LinalgError> {
        if ranks.is_empty() {
            return Err(LinalgError::EmptyComplex);
        }
        if diffs.len() + 1 != ranks.len() {
            return Err(LinalgError::DifferentialCount { positions: ranks.len(), differentials: diffs.len() });
        }
        for (k, d) in diffs.iter().enumerate() {
            if d.cols() != ranks[k] || d.rows() != ranks[k + 1] {
                return Err(LinalgError::DifferentialShape {
                    position: start + k as i64,
                    expected: (ranks[k + 1], ranks[k]),
                    found: (d.rows(), d.cols()),
                });
            }
        }
        for (k, w) in diffs.windows(2).enumerate() {
            if !(&w[1] * &w[0]).is_zero() {
                return Err(LinalgError::SquareNonZero { position: start + k as i64 });
            }
        }
        Ok(Self { start, ranks, diffs })
    }

    /// A complex with every differential zero.
    pub fn with_zero_differentials(start: i64, ranks: Vec<usize>) -> Self {
        let diffs = ranks.windows(2).map(|w| IntMatrix::zeros(w[1], w[0])).collect();
        Self { start, ranks, diffs }
    }

    pub fn start(&self) -> i64 {
        self.start
    }

    pub fn end(&self) -> i64 {
        self.start + self.ranks.len() as i64 - 1
    }

    pub fn positions(&self) -> std::ops::RangeInclusive<i64> {
        self.start..=self.end()
    }

    pub fn rank_at(&self, h: i64) -> usize {
        self.index(h).map_or(0, |k| self.ranks[k])
    }

    pub fn total_rank(&self) -> usize {
        self.ranks.iter().sum()
    }

    /// Differential out of position `h`; a zero matrix outside the support.
    pub fn differential(&self, h: i64) -> IntMatrix {
        match self.index(h) {
            Some(k) if k < self.diffs.len() => self.diffs[k].clone(),
            _ => IntMatrix::zeros(self.rank_at(h + 1), self.rank_at(h)),
        }
    }

    fn index(&self, h: i64) -> Option<usize> {
        let k = h - self.start;
        (0..self.ranks.len() as i64).contains(&k).then_some(k as usize)
    }

    /// Cancels the unit entry `(row, col)` of the differential out of
    /// `position`, removing generator `col` there and generator `row` at
    /// `position + 1`. The result is homotopy equivalent to `self`.
    pub fn gaussian_eliminate(&self, position: i64, row: usize, col: usize) -> Result<Self, LinalgError> {
        let k = match self.index(position) {
            Some(k) if k < self.diffs.len() => k,
            _ => return Err(LinalgError::PositionOutOfRange(position)),
        };
        let d = &self.diffs[k];
        if row >= d.rows() || col >= d.cols() {
            return Err(LinalgError::EntryOutOfRange { row, col });
        }
        let pivot = d[(row, col)].clone();
        if !pivot.abs().is_one() {
            return Err(LinalgError::NotAUnit { row, col, value: pivot.to_string() });
        }

        let keep_src: Vec<usize> = (0..d.cols()).filter(|&j| j != col).collect();
        let keep_dst: Vec<usize> = (0..d.rows()).filter(|&i| i != row).collect();

        // d' = delta - gamma * pivot^{-1} * beta, with pivot^{-1} = pivot
        let mut reduced = d.select(&keep_dst, &keep_src);
        for (a, &i) in keep_dst.iter().enumerate() {
            let gamma = &d[(i, col)] * &pivot;
            if gamma.is_zero() {
                continue;
            }
            for (b, &j) in keep_src.iter().enumerate() {
                let v = &gamma * &d[(row, j)];
                reduced[(a, b)] -= v;
            }
        }

        let mut ranks = self.ranks.clone();
        ranks[k] -= 1;
        ranks[k + 1] -= 1;
        let mut diffs = self.diffs.clone();
        diffs[k] = reduced;
        if k > 0 {
            let into = &self.diffs[k - 1];
            let all: Vec<usize> = (0..into.cols()).collect();
            diffs[k - 1] = into.select(&keep_src, &all);
        }
        if k + 1 < self.diffs.len() {
            let out = &self.diffs[k + 1];
            let all: Vec<usize> = (0..out.rows()).collect();
            diffs[k + 1] = out.select(&all, &keep_dst);
        }
        Ok(Self { start: self.start, ranks, diffs })
    }

    /// Repeatedly cancels unit entries until none is left.
    pub fn eliminate_all_units(&self) -> Self {
        let mut c = self.clone();
        'outer: loop {
            for (k, d) in c.diffs.iter().enumerate() {
                for i in 0..d.rows() {
                    for j in 0..d.cols() {
                        if d[(i, j)].abs().is_one() {
                            let pos = c.start + k as i64;
                            c = c.gaussian_eliminate(pos, i, j).expect("unit entry");
                            continue 'outer;
                        }
                    }
                }
            }
            return c;
        }
    }
}

/// Homology at every position of the complex.
pub fn complex_homology(c: &FreeChainComplex) -> Result<BTreeMap<i64, AbGroup>, LinalgError> {
    c.positions().map(|h| Ok((h, homology_at(&c.differential(h - 1), &c.differential(h))?))).collect()
}
