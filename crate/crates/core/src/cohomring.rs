//! Integral cohomology rings of `CP^{N-1}`, `CP^{N-1} x CP^{N-1}` and the
//! partial flag manifold `F(1,1;N)`, with cup-product operators, the maps
//! induced by the two projections, and the Gysin computations of
//! `H*(UT CP^{N-1})`.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::laurent::LaurentPoly;
use crate::zlinalg::{homology_at, AbGroup, IntMatrix};
use crate::{Error, Result};

/// Global sign of the pushforward. Group-level results do not depend on it.
pub const PUSHFORWARD_SIGN: i64 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RingKind {
    /// `Z[X]/X^N`
    Cp,
    /// `Z[a,b]/(h_{N-1}(a,b), a^N)`
    Flag,
    /// `Z[X]/X^N ⊗ Z[Y]/Y^N`
    ProductCp,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub exps: Vec<u32>,
    /// Cohomological degree, twice the total exponent.
    pub degree: u32,
}

/// An element of a [`GradedRing`] as a dense coefficient vector in the
/// ring's monomial basis.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    pub coeffs: Vec<BigInt>,
}

impl RingElement {
    pub fn zero(rank: usize) -> Self {
        Self { coeffs: vec![BigInt::zero(); rank] }
    }

    pub fn basis(rank: usize, index: usize) -> Self {
        let mut x = Self::zero(rank);
        x.coeffs[index] = BigInt::one();
        x
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x + y).collect();
        Self { coeffs }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let coeffs = self.coeffs.iter().zip(&other.coeffs).map(|(x, y)| x - y).collect();
        Self { coeffs }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        Self { coeffs: self.coeffs.iter().map(|x| x * c).collect() }
    }

    fn as_column(&self) -> IntMatrix {
        IntMatrix::from_fn(self.coeffs.len(), 1, |i, _| self.coeffs[i].clone())
    }
}

/// A finite-rank graded commutative ring given by a monomial basis and a
/// normal-form rule.
#[derive(Clone, Debug)]
pub struct GradedRing {
    kind: RingKind,
    n: usize,
    basis: Vec<Monomial>,
    index: HashMap<Vec<u32>, usize>,
    // FLAG only: normal forms of a^i b^j for i < N and j <= 2N
    flag_table: Vec<Vec<Vec<BigInt>>>,
}

pub fn cp_ring(n: usize) -> Result<GradedRing> {
    check_n(n)?;
    let basis = (0..n as u32).map(|i| vec![i]).collect();
    Ok(GradedRing::new(RingKind::Cp, n, basis))
}

/// `H*(F(1,1;N))` with basis `a^i b^j`, `i <= N-1`, `j <= N-2`, reduced by
/// `b^{N-1} -> -(a b^{N-2} + ... + a^{N-1})` and `a^N -> 0`.
pub fn flag_ring(n: usize) -> Result<GradedRing> {
    check_n(n)?;
    let n32 = n as u32;
    let basis = (0..n32).flat_map(|i| (0..n32 - 1).map(move |j| vec![i, j])).collect();
    let mut ring = GradedRing::new(RingKind::Flag, n, basis);
    ring.flag_table = ring.build_flag_table();
    Ok(ring)
}

pub fn product_cp_ring(n: usize) -> Result<GradedRing> {
    check_n(n)?;
    let n32 = n as u32;
    let basis = (0..n32).flat_map(|i| (0..n32).map(move |j| vec![i, j])).collect();
    Ok(GradedRing::new(RingKind::ProductCp, n, basis))
}

fn check_n(n: usize) -> Result<()> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    Ok(())
}

impl GradedRing {
    fn new(kind: RingKind, n: usize, exps: Vec<Vec<u32>>) -> Self {
        let basis: Vec<Monomial> =
            exps.into_iter().map(|e| Monomial { degree: 2 * e.iter().sum::<u32>(), exps: e }).collect();
        let index = basis.iter().enumerate().map(|(k, m)| (m.exps.clone(), k)).collect();
        Self { kind, n, basis, index, flag_table: Vec::new() }
    }

    pub fn kind(&self) -> RingKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    pub fn index_of(&self, exps: &[u32]) -> Option<usize> {
        self.index.get(exps).copied()
    }

    pub fn top_degree(&self) -> u32 {
        self.basis.iter().map(|m| m.degree).max().unwrap_or(0)
    }

    /// Basis indices of the given cohomological degree, in basis order.
    pub fn indices_in_degree(&self, degree: i64) -> Vec<usize> {
        (0..self.rank()).filter(|&k| i64::from(self.basis[k].degree) == degree).collect()
    }

    /// `sum_k q^{deg b_k}` over the basis.
    pub fn poincare(&self) -> LaurentPoly {
        self.basis.iter().map(|m| LaurentPoly::monomial(i64::from(m.degree), 1)).sum()
    }

    pub fn one(&self) -> RingElement {
        self.monomial(&vec![0; self.basis[0].exps.len()])
    }

    /// Normal form of an arbitrary monomial in the ring's generators.
    pub fn monomial(&self, exps: &[u32]) -> RingElement {
        let n = self.n as u32;
        match self.kind {
            RingKind::Cp | RingKind::ProductCp => match self.index_of(exps) {
                Some(k) => RingElement::basis(self.rank(), k),
                None => {
                    assert!(exps.iter().any(|&e| e >= n), "malformed monomial {exps:?}");
                    RingElement::zero(self.rank())
                }
            },
            RingKind::Flag => self.reduce_flag(exps[0], exps[1]),
        }
    }

    fn reduce_flag(&self, i: u32, j: u32) -> RingElement {
        let n = self.n as u32;
        if i >= n {
            return RingElement::zero(self.rank());
        }
        if let Some(v) = self.flag_table.get(i as usize).and_then(|row| row.get(j as usize)) {
            return RingElement { coeffs: v.clone() };
        }
        // outside the table: peel off one copy of b^{N-1}
        let mut acc = RingElement::zero(self.rank());
        for k in 1..n {
            acc = acc.sub(&self.reduce_flag(i + k, j - k));
        }
        acc
    }

    fn build_flag_table(&self) -> Vec<Vec<Vec<BigInt>>> {
        let n = self.n;
        let j_max = 2 * n;
        let rank = self.rank();
        let mut table = vec![vec![Vec::new(); j_max + 1]; n];
        for i in (0..n).rev() {
            for j in 0..=j_max {
                table[i][j] = if j + 2 <= n {
                    RingElement::basis(rank, self.index[&vec![i as u32, j as u32]]).coeffs
                } else {
                    let mut acc = vec![BigInt::zero(); rank];
                    for k in 1..n {
                        if i + k >= n {
                            break;
                        }
                        for (a, t) in acc.iter_mut().zip(&table[i + k][j - k]) {
                            *a -= t;
                        }
                    }
                    acc
                };
            }
        }
        table
    }

    /// The ring generators: `[X]`, `[a, b]` or `[X, Y]`.
    pub fn generator(&self, which: usize) -> RingElement {
        let mut exps = vec![0; self.basis[0].exps.len()];
        exps[which] += 1;
        self.monomial(&exps)
    }

    pub fn element(&self, coeffs: Vec<BigInt>) -> Result<RingElement> {
        if coeffs.len() != self.rank() {
            return Err(Error::ElementLength { expected: self.rank(), found: coeffs.len() });
        }
        Ok(RingElement { coeffs })
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> RingElement {
        let mut out = RingElement::zero(self.rank());
        for (p, cx) in x.coeffs.iter().enumerate() {
            if cx.is_zero() {
                continue;
            }
            for (r, cy) in y.coeffs.iter().enumerate() {
                if cy.is_zero() {
                    continue;
                }
                let exps: Vec<u32> = self.basis[p].exps.iter().zip(&self.basis[r].exps).map(|(a, b)| a + b).collect();
                let c = cx * cy;
                for (o, t) in out.coeffs.iter_mut().zip(self.monomial(&exps).coeffs) {
                    if !t.is_zero() {
                        *o += &c * t;
                    }
                }
            }
        }
        out
    }

    pub fn pow(&self, x: &RingElement, k: u32) -> RingElement {
        (0..k).fold(self.one(), |acc, _| self.mul(&acc, x))
    }

    /// Degree of a nonzero homogeneous element; `None` for zero.
    pub fn homogeneous_degree(&self, x: &RingElement) -> Result<Option<u32>> {
        let mut deg = None;
        for (k, c) in x.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            match deg {
                None => deg = Some(self.basis[k].degree),
                Some(d) if d != self.basis[k].degree => return Err(Error::Inhomogeneous),
                _ => {}
            }
        }
        Ok(deg)
    }

    /// Matrix of `x -> c x` in the basis.
    pub fn cup_operator(&self, c: &RingElement) -> Result<IntMatrix> {
        if c.coeffs.len() != self.rank() {
            return Err(Error::ElementLength { expected: self.rank(), found: c.coeffs.len() });
        }
        self.homogeneous_degree(c)?;
        let cols: Vec<RingElement> =
            (0..self.rank()).map(|k| self.mul(c, &RingElement::basis(self.rank(), k))).collect();
        Ok(IntMatrix::from_fn(self.rank(), self.rank(), |i, j| cols[j].coeffs[i].clone()))
    }

    /// Coefficient of the top-degree basis monomial.
    pub fn top_coefficient(&self, x: &RingElement) -> BigInt {
        let top = self.top_degree();
        let k = self.basis.iter().position(|m| m.degree == top).expect("nonempty basis");
        x.coeffs[k].clone()
    }

    /// Matrix of the pairing `<x, y> = top coefficient of x y`.
    pub fn gram_matrix(&self) -> IntMatrix {
        let r = self.rank();
        let mut g = IntMatrix::zeros(r, r);
        for i in 0..r {
            for j in 0..r {
                let xy = self.mul(&RingElement::basis(r, i), &RingElement::basis(r, j));
                g[(i, j)] = self.top_coefficient(&xy);
            }
        }
        g
    }

    /// Multiplies a matrix by the coordinates of an element.
    pub fn apply(m: &IntMatrix, x: &RingElement) -> RingElement {
        let col = m * &x.as_column();
        RingElement { coeffs: (0..col.rows()).map(|i| col[(i, 0)].clone()).collect() }
    }

    /// Free graded group `degree -> Z^{rank}` underlying the ring.
    pub fn graded_group(&self) -> GradedAbGroup {
        let mut g = BTreeMap::new();
        for m in &self.basis {
            g.entry(i64::from(m.degree)).or_insert_with(AbGroup::trivial).free += 1;
        }
        GradedAbGroup::from_map(g)
    }
}

/// `e = a - b`.
pub fn euler_class(n: usize) -> Result<RingElement> {
    let f = flag_ring(n)?;
    Ok(f.generator(0).sub(&f.generator(1)))
}

/// The ring map `H*(CP x CP) -> H*(F(1,1;N))`, `X^i ⊗ Y^j -> a^i b^j`.
pub fn pullback_matrix(n: usize) -> Result<IntMatrix> {
    let f = flag_ring(n)?;
    let p = product_cp_ring(n)?;
    let cols: Vec<RingElement> = p.basis().iter().map(|m| f.monomial(&m.exps)).collect();
    Ok(IntMatrix::from_fn(f.rank(), p.rank(), |i, j| cols[j].coeffs[i].clone()))
}

/// Transpose of [`pullback_matrix`] for the Poincaré pairings, times
/// [`PUSHFORWARD_SIGN`]. Raises cohomological degree by 2.
pub fn pushforward_matrix(n: usize) -> Result<IntMatrix> {
    let f = flag_ring(n)?;
    let p = product_cp_ring(n)?;
    let pull = pullback_matrix(n)?;
    // the product pairing is the anti-diagonal permutation, its own inverse
    let last = p.rank() - 1;
    let g_p = IntMatrix::from_fn(p.rank(), p.rank(), |i, j| BigInt::from(i64::from(i + j == last)));
    let push = &(&g_p * &pull.transpose()) * &f.gram_matrix();
    Ok(push.scaled(&BigInt::from(PUSHFORWARD_SIGN)))
}

/// A graded abelian group, `degree -> AbGroup`, storing only nonzero degrees.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct GradedAbGroup {
    pub degrees: BTreeMap<i64, AbGroup>,
}

impl GradedAbGroup {
    pub fn from_map(degrees: BTreeMap<i64, AbGroup>) -> Self {
        Self { degrees: degrees.into_iter().filter(|(_, g)| !g.is_trivial()).collect() }
    }

    pub fn get(&self, degree: i64) -> AbGroup {
        self.degrees.get(&degree).cloned().unwrap_or_default()
    }

    pub fn total(&self) -> AbGroup {
        self.degrees.values().cloned().sum()
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut d = self.degrees.clone();
        for (k, g) in &other.degrees {
            let e = d.entry(*k).or_default();
            *e = e.direct_sum(g);
        }
        Self::from_map(d)
    }

    /// Graded tensor product, defined when both sides are torsion-free.
    pub fn tensor_free(&self, other: &Self) -> Result<Self> {
        let mut d: BTreeMap<i64, AbGroup> = BTreeMap::new();
        for (i, g) in &self.degrees {
            for (j, h) in &other.degrees {
                if !g.is_free() || !h.is_free() {
                    return Err(Error::TorsionTensor);
                }
                d.entry(i + j).or_default().free += g.free * h.free;
            }
        }
        Ok(Self::from_map(d))
    }
}

/// `H^d(E) = coker(e: R^{d-k} -> R^d) ⊕ ker(e: R^{d-k+1} -> R^{d+1})` for a
/// sphere bundle `E -> B` with `H*(B) = R` and Euler class of degree `k`.
/// The kernel part is free, so the extension splits.
fn gysin(ring: &GradedRing, cup_e: &IntMatrix, k: i64) -> Result<GradedAbGroup> {
    let block = |src: i64, dst: i64| {
        let s = ring.indices_in_degree(src);
        let t = ring.indices_in_degree(dst);
        cup_e.select(&t, &s)
    };
    let top = i64::from(ring.top_degree()) + k - 1;
    let mut out = BTreeMap::new();
    for d in 0..=top {
        let into = block(d - k, d);
        let coker = homology_at(&into, &IntMatrix::zeros(0, into.rows()))?;
        let from = block(d - k + 1, d + 1);
        let ker = homology_at(&IntMatrix::zeros(from.cols(), 0), &from)?;
        out.insert(d, coker.direct_sum(&ker));
    }
    Ok(GradedAbGroup::from_map(out))
}

/// `H*(UT CP^{N-1})` from the circle bundle over `F(1,1;N)` with Euler
/// class `a - b`.
pub fn gysin_circle_ut(n: usize) -> Result<GradedAbGroup> {
    gysin_circle_ut_with_class(n, &euler_class(n)?)
}

/// As [`gysin_circle_ut`] with an arbitrary degree-2 class in place of `e`.
pub fn gysin_circle_ut_with_class(n: usize, class: &RingElement) -> Result<GradedAbGroup> {
    let f = flag_ring(n)?;
    let cup = f.cup_operator(class)?;
    gysin(&f, &cup, 2)
}

/// `H*(UT CP^{N-1})` from the `S^{2N-3}` bundle over `CP^{N-1}` with Euler
/// class `N X^{N-1}`.
pub fn gysin_sphere_ut(n: usize) -> Result<GradedAbGroup> {
    let c = cp_ring(n)?;
    let e = c.generator(0);
    let e = c.pow(&e, n as u32 - 1).scaled(&BigInt::from(n));
    let cup = c.cup_operator(&e)?;
    gysin(&c, &cup, 2 * n as i64 - 2)
}
