#![allow(dead_code)]

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use sln_torus::zlinalg::{complex_homology, smith_normal_form, AbGroup, FreeChainComplex, IntMatrix};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn random_matrix(rng: &mut impl Rng, max_dim: usize, bound: i64) -> IntMatrix {
    let r = rng.gen_range(0..=max_dim);
    let c = rng.gen_range(0..=max_dim);
    IntMatrix::from_fn(r, c, |_, _| BigInt::from(rng.gen_range(-bound..=bound)))
}

/// Checks `U M V = S`, unimodularity, diagonal shape and the divisor chain.
pub fn snf_contract(m: &IntMatrix) -> Result<(), String> {
    let d = smith_normal_form(m);
    if &(&d.u * m) * &d.v != d.s {
        return Err(format!("UMV != S for {m:?}"));
    }
    if !d.u.determinant().abs().is_one() || !d.v.determinant().abs().is_one() {
        return Err(format!("transform not unimodular for {m:?}"));
    }
    let mut prev: Option<BigInt> = None;
    for i in 0..d.s.rows() {
        for j in 0..d.s.cols() {
            let x = &d.s[(i, j)];
            if i != j && !x.is_zero() {
                return Err(format!("off-diagonal entry in S for {m:?}"));
            }
        }
        if i < d.s.cols() {
            let x = d.s[(i, i)].clone();
            if x.is_negative() {
                return Err(format!("negative invariant factor for {m:?}"));
            }
            if let Some(p) = &prev {
                let ok = if p.is_zero() { x.is_zero() } else { x.is_multiple_of(p) };
                if !ok {
                    return Err(format!("divisor chain broken for {m:?}"));
                }
            }
            prev = Some(x);
        }
    }
    if d.rank() != m.rank() {
        return Err(format!("SNF rank {} != Bareiss rank {}", d.rank(), m.rank()));
    }
    Ok(())
}

/// A random complex with known homology and at least one unit entry.
pub struct RandomComplex {
    pub complex: FreeChainComplex,
    pub expected: BTreeMap<i64, AbGroup>,
}

// a unimodular matrix together with its inverse
fn random_unimodular(rng: &mut impl Rng, n: usize) -> (IntMatrix, IntMatrix) {
    let mut u = IntMatrix::identity(n);
    let mut inv = IntMatrix::identity(n);
    if n < 2 {
        if n == 1 && rng.gen_bool(0.5) {
            u.negate_row(0);
            inv.negate_col(0);
        }
        return (u, inv);
    }
    for _ in 0..3 * n {
        let i = rng.gen_range(0..n);
        let j = rng.gen_range(0..n);
        if i == j {
            continue;
        }
        if rng.gen_bool(0.2) {
            u.swap_rows(i, j);
            inv.swap_cols(i, j);
        } else {
            let c = BigInt::from(rng.gen_range(-2..=2));
            u.add_row_multiple(i, j, &c);
            inv.add_col_multiple(j, i, &-c);
        }
    }
    (u, inv)
}

fn has_unit(c: &FreeChainComplex) -> bool {
    c.positions().any(|h| {
        let d = c.differential(h);
        (0..d.rows()).any(|i| (0..d.cols()).any(|j| d[(i, j)].abs().is_one()))
    })
}

/// Direct sum of `Z` pieces and `Z --d--> Z` pieces, conjugated at every
/// position by a random unimodular change of basis.
pub fn random_complex(rng: &mut impl Rng, max_len: usize, max_rank: usize) -> RandomComplex {
    loop {
        let len = rng.gen_range(2..=max_len);
        let start = rng.gen_range(-3..=0i64);
        let mut ranks = vec![0usize; len];
        // (source position index, multiplier); None for a free piece
        let mut pieces: Vec<(usize, Option<i64>)> = Vec::new();
        let first = rng.gen_range(0..len - 1);
        pieces.push((first, Some(if rng.gen_bool(0.5) { 1 } else { -1 })));
        ranks[first] += 1;
        ranks[first + 1] += 1;
        for _ in 0..rng.gen_range(0..=3 * max_rank) {
            let p = rng.gen_range(0..len);
            if rng.gen_bool(0.3) || p + 1 == len {
                if ranks[p] < max_rank {
                    pieces.push((p, None));
                    ranks[p] += 1;
                }
            } else if ranks[p] < max_rank && ranks[p + 1] < max_rank {
                let mut d = rng.gen_range(-4..=4i64);
                if d == 0 {
                    d = 1;
                }
                pieces.push((p, Some(d)));
                ranks[p] += 1;
                ranks[p + 1] += 1;
            }
        }

        let mut diffs: Vec<IntMatrix> = (0..len - 1).map(|k| IntMatrix::zeros(ranks[k + 1], ranks[k])).collect();
        let mut next = vec![0usize; len];
        let mut expected: BTreeMap<i64, AbGroup> = BTreeMap::new();
        for &(p, d) in &pieces {
            let h = start + p as i64;
            match d {
                None => {
                    let g = expected.entry(h).or_default();
                    *g = g.direct_sum(&AbGroup::free(1));
                    next[p] += 1;
                }
                Some(d) => {
                    diffs[p][(next[p + 1], next[p])] = BigInt::from(d);
                    let g = expected.entry(h + 1).or_default();
                    *g = g.direct_sum(&AbGroup::cyclic(d));
                    next[p] += 1;
                    next[p + 1] += 1;
                }
            }
        }
        for h in start..start + len as i64 {
            expected.entry(h).or_default();
        }

        let bases: Vec<(IntMatrix, IntMatrix)> = ranks.iter().map(|&r| random_unimodular(rng, r)).collect();
        let diffs = diffs.iter().enumerate().map(|(k, d)| &(&bases[k + 1].0 * d) * &bases[k].1).collect();
        let complex = FreeChainComplex::new(start, ranks, diffs).expect("conjugated complex");
        if has_unit(&complex) {
            return RandomComplex { complex, expected };
        }
    }
}

/// Eliminates one randomly chosen unit entry, then all of them, and checks
/// the homology never changes.
pub fn gaussian_invariance(rng: &mut impl Rng, rc: &RandomComplex) -> Result<(), String> {
    let before = complex_homology(&rc.complex).map_err(|e| e.to_string())?;
    if before != rc.expected {
        return Err(format!("homology {before:?} differs from construction {:?}", rc.expected));
    }
    let units: Vec<(i64, usize, usize)> = rc
        .complex
        .positions()
        .flat_map(|h| {
            let d = rc.complex.differential(h);
            (0..d.rows())
                .flat_map(|i| (0..d.cols()).map(move |j| (i, j)))
                .filter(|&(i, j)| d[(i, j)].abs().is_one())
                .map(|(i, j)| (h, i, j))
                .collect::<Vec<_>>()
        })
        .collect();
    let (h, i, j) = units[rng.gen_range(0..units.len())];
    let once = rc.complex.gaussian_eliminate(h, i, j).map_err(|e| e.to_string())?;
    if once.total_rank() + 2 != rc.complex.total_rank() {
        return Err("elimination did not remove two generators".into());
    }
    if complex_homology(&once).map_err(|e| e.to_string())? != before {
        return Err(format!("homology changed after eliminating ({h}, {i}, {j})"));
    }
    let all = rc.complex.eliminate_all_units();
    if complex_homology(&all).map_err(|e| e.to_string())? != before {
        return Err("homology changed after eliminating every unit".into());
    }
    Ok(())
}
