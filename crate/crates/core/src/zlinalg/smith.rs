use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::IntMatrix;

/// `U * M * V = S` with `U`, `V` unimodular and `S` diagonal in Smith form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SmithDecomposition {
    pub u: IntMatrix,
    pub s: IntMatrix,
    pub v: IntMatrix,
}

impl SmithDecomposition {
    /// Nonzero diagonal entries of `S`, each dividing the next.
    pub fn invariant_factors(&self) -> Vec<BigInt> {
        diagonal_nonzero(&self.s)
    }

    pub fn rank(&self) -> usize {
        self.invariant_factors().len()
    }
}

fn diagonal_nonzero(s: &IntMatrix) -> Vec<BigInt> {
    (0..s.rows().min(s.cols())).map(|i| s[(i, i)].clone()).take_while(|d| !d.is_zero()).collect()
}

/// Smith normal form with both transformation matrices.
pub fn smith_normal_form(m: &IntMatrix) -> SmithDecomposition {
    let mut s = m.clone();
    let mut u = IntMatrix::identity(m.rows());
    let mut v = IntMatrix::identity(m.cols());
    reduce(&mut s, Some((&mut u, &mut v)));
    SmithDecomposition { u, s, v }
}

/// Invariant factors only; skips the bookkeeping of `U` and `V`.
pub fn invariant_factors(m: &IntMatrix) -> Vec<BigInt> {
    let mut s = m.clone();
    reduce(&mut s, None);
    diagonal_nonzero(&s)
}

type Transforms<'a> = Option<(&'a mut IntMatrix, &'a mut IntMatrix)>;

fn reduce(s: &mut IntMatrix, mut tr: Transforms<'_>) {
    let (rows, cols) = (s.rows(), s.cols());
    for t in 0..rows.min(cols) {
        let Some((pi, pj)) = min_abs_entry(s, t..rows, t..cols) else {
            return;
        };
        swap_rows(s, &mut tr, t, pi);
        swap_cols(s, &mut tr, t, pj);

        loop {
            // clear column t below the pivot
            for i in t + 1..rows {
                if !s[(i, t)].is_zero() {
                    let q = s[(i, t)].div_floor(&s[(t, t)]);
                    add_row(s, &mut tr, i, t, &-q);
                }
            }
            // clear row t right of the pivot
            for j in t + 1..cols {
                if !s[(t, j)].is_zero() {
                    let q = s[(t, j)].div_floor(&s[(t, t)]);
                    add_col(s, &mut tr, j, t, &-q);
                }
            }

            let col_rest = (t + 1..rows).filter(|&i| !s[(i, t)].is_zero());
            let row_rest = (t + 1..cols).filter(|&j| !s[(t, j)].is_zero());
            let best_col = col_rest.min_by_key(|&i| s[(i, t)].abs());
            let best_row = row_rest.min_by_key(|&j| s[(t, j)].abs());
            match (best_col, best_row) {
                (Some(i), _) => {
                    swap_rows(s, &mut tr, t, i);
                    continue;
                }
                (None, Some(j)) => {
                    swap_cols(s, &mut tr, t, j);
                    continue;
                }
                (None, None) => {}
            }

            // pivot must divide the remaining block
            let p = s[(t, t)].clone();
            let bad = (t + 1..rows).find(|&i| (t + 1..cols).any(|j| !s[(i, j)].is_multiple_of(&p)));
            match bad {
                Some(i) => add_row(s, &mut tr, t, i, &BigInt::one()),
                None => break,
            }
        }

        if s[(t, t)].is_negative() {
            s.negate_row(t);
            if let Some((u, _)) = tr.as_mut() {
                u.negate_row(t);
            }
        }
    }
}

fn min_abs_entry(s: &IntMatrix, rows: std::ops::Range<usize>, cols: std::ops::Range<usize>) -> Option<(usize, usize)> {
    let mut best: Option<(usize, usize, BigInt)> = None;
    for i in rows {
        for j in cols.clone() {
            let a = s[(i, j)].abs();
            if a.is_zero() {
                continue;
            }
            if best.as_ref().is_none_or(|(_, _, b)| a < *b) {
                let unit = a.is_one();
                best = Some((i, j, a));
                if unit {
                    return best.map(|(i, j, _)| (i, j));
                }
            }
        }
    }
    best.map(|(i, j, _)| (i, j))
}

fn swap_rows(s: &mut IntMatrix, tr: &mut Transforms<'_>, a: usize, b: usize) {
    s.swap_rows(a, b);
    if let Some((u, _)) = tr.as_mut() {
        u.swap_rows(a, b);
    }
}

fn swap_cols(s: &mut IntMatrix, tr: &mut Transforms<'_>, a: usize, b: usize) {
    s.swap_cols(a, b);
    if let Some((_, v)) = tr.as_mut() {
        v.swap_cols(a, b);
    }
}

fn add_row(s: &mut IntMatrix, tr: &mut Transforms<'_>, dst: usize, src: usize, c: &BigInt) {
    s.add_row_multiple(dst, src, c);
    if let Some((u, _)) = tr.as_mut() {
        u.add_row_multiple(dst, src, c);
    }
}

fn add_col(s: &mut IntMatrix, tr: &mut Transforms<'_>, dst: usize, src: usize, c: &BigInt) {
    s.add_col_multiple(dst, src, c);
    if let Some((_, v)) = tr.as_mut() {
        v.add_col_multiple(dst, src, c);
    }
}
