//! Bigraded chain complexes for `T(2,m)`: the full reduced twist complex, its
//! splitting into small summands, and their bigraded homology.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::cohomring::{cp_ring, euler_class, flag_ring, product_cp_ring, pushforward_matrix, GradedRing, RingElement};
use crate::laurent::LaurentPoly;
use crate::zlinalg::{complex_homology, AbGroup, FreeChainComplex, IntMatrix};
use crate::{Error, Result};

/// A cochain complex of free abelian groups whose generators carry a
/// q-degree. Differentials raise `h` by one and preserve `q`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BigradedComplex {
    chain: FreeChainComplex,
    qdeg: Vec<Vec<i64>>,
}

impl BigradedComplex {
    /// `qdeg[k]` lists the q-degrees of the generators at position `start + k`.
    pub fn new(start: i64, qdeg: Vec<Vec<i64>>, diffs: Vec<IntMatrix>) -> Result<Self> {
        let ranks = qdeg.iter().map(Vec::len).collect();
        let chain = FreeChainComplex::new(start, ranks, diffs)?;
        let c = Self { chain, qdeg };
        for h in c.chain.positions() {
            let d = c.chain.differential(h);
            let (src, dst) = (c.q_degrees(h), c.q_degrees(h + 1));
            for i in 0..d.rows() {
                for j in 0..d.cols() {
                    if !d[(i, j)].is_zero() && src[j] != dst[i] {
                        return Err(Error::NotHomogeneous { position: h });
                    }
                }
            }
        }
        Ok(c)
    }

    pub fn start(&self) -> i64 {
        self.chain.start()
    }

    pub fn end(&self) -> i64 {
        self.chain.end()
    }

    pub fn chain(&self) -> &FreeChainComplex {
        &self.chain
    }

    pub fn q_degrees(&self, h: i64) -> &[i64] {
        let k = h - self.start();
        if (0..self.qdeg.len() as i64).contains(&k) {
            &self.qdeg[k as usize]
        } else {
            &[]
        }
    }

    pub fn differential(&self, h: i64) -> IntMatrix {
        self.chain.differential(h)
    }

    /// `Hom(-, Z)`: position `h` becomes `-h`, `q` becomes `-q`, and the
    /// differentials are transposed.
    pub fn dual(&self) -> Self {
        let qdeg = self.qdeg.iter().rev().map(|qs| qs.iter().map(|q| -q).collect()).collect();
        let diffs = (self.start()..self.end()).rev().map(|h| self.differential(h).transpose()).collect();
        Self::new(-self.end(), qdeg, diffs).expect("dual of a valid complex")
    }

    /// Subcomplex spanned by the generators of one q-degree.
    fn strand(&self, q: i64) -> FreeChainComplex {
        let picks: Vec<Vec<usize>> =
            self.qdeg.iter().map(|qs| (0..qs.len()).filter(|&i| qs[i] == q).collect()).collect();
        let diffs = (0..picks.len().saturating_sub(1))
            .map(|k| self.differential(self.start() + k as i64).select(&picks[k + 1], &picks[k]))
            .collect();
        let ranks = picks.iter().map(Vec::len).collect();
        FreeChainComplex::new(self.start(), ranks, diffs).expect("strand of a valid complex")
    }

    fn all_q(&self) -> Vec<i64> {
        let mut qs: Vec<i64> = self.qdeg.iter().flatten().copied().collect();
        qs.sort_unstable();
        qs.dedup();
        qs
    }
}

/// Finitely supported `(h, q) -> AbGroup`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BigradedGroup {
    groups: BTreeMap<(i64, i64), AbGroup>,
}

impl BigradedGroup {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn from_map(groups: BTreeMap<(i64, i64), AbGroup>) -> Self {
        Self { groups: groups.into_iter().filter(|(_, g)| !g.is_trivial()).collect() }
    }

    pub fn get(&self, h: i64, q: i64) -> AbGroup {
        self.groups.get(&(h, q)).cloned().unwrap_or_default()
    }

    pub fn insert_sum(&mut self, h: i64, q: i64, g: &AbGroup) {
        if g.is_trivial() {
            return;
        }
        let e = self.groups.entry((h, q)).or_default();
        *e = e.direct_sum(g);
    }

    pub fn iter(&self) -> impl Iterator<Item = (&(i64, i64), &AbGroup)> {
        self.groups.iter()
    }

    pub fn is_empty(&self) -> bool {
        self.groups.is_empty()
    }

    pub fn total(&self) -> AbGroup {
        self.groups.values().cloned().sum()
    }

    pub fn shift(&self, dh: i64, dq: i64) -> Self {
        Self { groups: self.groups.iter().map(|(&(h, q), g)| ((h + dh, q + dq), g.clone())).collect() }
    }

    pub fn direct_sum(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (&(h, q), g) in &other.groups {
            out.insert_sum(h, q, g);
        }
        out
    }

    /// Bigraded tensor product, defined when both sides are torsion-free.
    pub fn tensor_free(&self, other: &Self) -> Result<Self> {
        let mut out = Self::new();
        for (&(h1, q1), g) in &self.groups {
            for (&(h2, q2), k) in &other.groups {
                if !g.is_free() || !k.is_free() {
                    return Err(Error::TorsionTensor);
                }
                out.insert_sum(h1 + h2, q1 + q2, &AbGroup::free(g.free * k.free));
            }
        }
        Ok(out)
    }

    pub fn labeled(&self, n: usize, m: i64) -> LabeledBigradedGroup {
        let groups = self
            .groups
            .iter()
            .map(|(&(h, q), g)| GroupEntry { h, q, free: g.free, torsion: g.torsion.clone() })
            .collect();
        LabeledBigradedGroup { n, m, groups }
    }
}

impl FromIterator<((i64, i64), AbGroup)> for BigradedGroup {
    fn from_iter<I: IntoIterator<Item = ((i64, i64), AbGroup)>>(iter: I) -> Self {
        let mut out = Self::new();
        for ((h, q), g) in iter {
            out.insert_sum(h, q, &g);
        }
        out
    }
}

/// JSON form: `{"N":, "m":, "groups": [{"h":, "q":, "free":, "torsion": [...]}]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabeledBigradedGroup {
    #[serde(rename = "N")]
    pub n: usize,
    pub m: i64,
    pub groups: Vec<GroupEntry>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupEntry {
    pub h: i64,
    pub q: i64,
    pub free: usize,
    #[serde(with = "crate::bigint_serde::vec")]
    pub torsion: Vec<BigInt>,
}

impl LabeledBigradedGroup {
    pub fn group(&self) -> BigradedGroup {
        self.groups.iter().map(|e| ((e.h, e.q), AbGroup::new(e.free, &e.torsion))).collect()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum SummandKind {
    AComplex,
    Theta,
    Unknot,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SummandDescriptor {
    pub kind: SummandKind,
    pub h_shift: i64,
    pub q_shift: i64,
}

fn graded_q(ring: &GradedRing, shift: i64) -> Vec<i64> {
    ring.basis().iter().map(|m| i64::from(m.degree) + shift).collect()
}

/// Two-term complex `FLAG --(∪ e)--> FLAG` at positions -1 and 0.
pub fn build_a_complex(n: usize) -> Result<BigradedComplex> {
    build_a_complex_with_class(n, &euler_class(n)?)
}

pub fn build_a_complex_with_class(n: usize, class: &RingElement) -> Result<BigradedComplex> {
    let f = flag_ring(n)?;
    let n_ = n as i64;
    let cup = f.cup_operator(class)?;
    BigradedComplex::new(-1, vec![graded_q(&f, 4 - 2 * n_), graded_q(&f, 2 - 2 * n_)], vec![cup])
}

/// The reduced complex of `T(2,m)`, `m >= 1`, at positions `-m..=0`.
pub fn build_torus_complex(n: usize, m: i64) -> Result<BigradedComplex> {
    build_torus_complex_with_class(n, m, &euler_class(n)?)
}

pub fn build_torus_complex_with_class(n: usize, m: i64, class: &RingElement) -> Result<BigradedComplex> {
    if m < 1 {
        return Err(Error::TwistTooSmall(m));
    }
    let f = flag_ring(n)?;
    let p = product_cp_ring(n)?;
    let n_ = n as i64;
    let base = m * (n_ - 1);
    let cup = f.cup_operator(class)?;
    let zero = IntMatrix::zeros(f.rank(), f.rank());

    // positions -m, ..., -1, 0
    let mut qdeg: Vec<Vec<i64>> = (1..=m).rev().map(|j| graded_q(&f, base + 2 * j - 1 + 3 - 2 * n_)).collect();
    qdeg.push(graded_q(&p, base + 2 - 2 * n_));
    let mut diffs: Vec<IntMatrix> = (1..m).rev().map(|j| if j % 2 == 1 { zero.clone() } else { cup.clone() }).collect();
    diffs.push(pushforward_matrix(n)?);
    BigradedComplex::new(-m, qdeg, diffs)
}

/// The one-position complex of the two-component unlink.
pub fn build_unlink_complex(n: usize) -> Result<BigradedComplex> {
    let p = product_cp_ring(n)?;
    BigradedComplex::new(0, vec![graded_q(&p, 2 - 2 * n as i64)], vec![])
}

/// Direct-sum decomposition of the torus complex into shifted copies of the
/// A complex, one theta web (even `m`) and one unknot.
pub fn decompose_summands(n: usize, m: i64) -> Result<Vec<SummandDescriptor>> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    if m < 1 {
        return Err(Error::TwistTooSmall(m));
    }
    let norm = m * n as i64 - m;
    let k = m / 2;
    let a_count = if m % 2 == 1 { k } else { k - 1 };
    let mut out = Vec::new();
    if m % 2 == 0 {
        out.push(SummandDescriptor { kind: SummandKind::Theta, h_shift: -2 * k, q_shift: 4 * k - 1 + norm });
    }
    for i in (1..=a_count).rev() {
        out.push(SummandDescriptor { kind: SummandKind::AComplex, h_shift: -2 * i, q_shift: 4 * i + norm });
    }
    out.push(SummandDescriptor { kind: SummandKind::Unknot, h_shift: 0, q_shift: 1 - n as i64 + norm });
    Ok(out)
}

/// Homology of each q-strand, assembled into an `(h, q)` table.
pub fn bigraded_homology(c: &BigradedComplex) -> Result<BigradedGroup> {
    let mut out = BigradedGroup::new();
    for q in c.all_q() {
        for (h, g) in complex_homology(&c.strand(q))? {
            out.insert_sum(h, q, &g);
        }
    }
    Ok(out)
}

/// Free group on the basis of `ring`, with `q = degree + q_shift`, at `h`.
fn free_on(ring: &GradedRing, h: i64, q_shift: i64) -> BigradedGroup {
    graded_q(ring, q_shift).into_iter().map(|q| ((h, q), AbGroup::free(1))).collect()
}

/// Shifts in a descriptor apply to the state space of its web: `A` as
/// built, `q^{3-2N} H*(F(1,1;N))` for the theta web, `q^{1-N} H*(CP^{N-1})`
/// for the unknot.
pub fn summand_homology(n: usize, descs: &[SummandDescriptor]) -> Result<BigradedGroup> {
    summand_homology_with_class(n, descs, &euler_class(n)?)
}

pub fn summand_homology_with_class(
    n: usize,
    descs: &[SummandDescriptor],
    class: &RingElement,
) -> Result<BigradedGroup> {
    let n_ = n as i64;
    let a = bigraded_homology(&build_a_complex_with_class(n, class)?)?;
    let flag = flag_ring(n)?;
    let cp = cp_ring(n)?;
    let mut out = BigradedGroup::new();
    for d in descs {
        let piece = match d.kind {
            SummandKind::AComplex => a.shift(d.h_shift, d.q_shift),
            SummandKind::Theta => free_on(&flag, d.h_shift, d.q_shift + 3 - 2 * n_),
            SummandKind::Unknot => free_on(&cp, d.h_shift, d.q_shift + 1 - n_),
        };
        out = out.direct_sum(&piece);
    }
    Ok(out)
}

/// Homology of the unknot, `q^{1-N} H*(CP^{N-1})` at `h = 0`.
pub fn unknot_homology(n: usize) -> Result<BigradedGroup> {
    Ok(free_on(&cp_ring(n)?, 0, 1 - n as i64))
}

/// Homology of the two-component unlink as the tensor square of the unknot's.
pub fn unlink_homology(n: usize) -> Result<BigradedGroup> {
    let u = unknot_homology(n)?;
    u.tensor_free(&u)
}

/// Free part `(h, q) -> (-h, -q)`, torsion `(h, q) -> (-h + 1, -q)`.
pub fn dualize(g: &BigradedGroup) -> BigradedGroup {
    let mut out = BigradedGroup::new();
    for (&(h, q), grp) in g.iter() {
        out.insert_sum(-h, -q, &AbGroup::free(grp.free));
        out.insert_sum(-h + 1, -q, &AbGroup::new(0, &grp.torsion));
    }
    out
}

/// `KR_N(T(2,m))` for any integer `m`: the reduced complex for `m >= 1`,
/// the unlink complex for `m = 0`, and the dual of `T(2,-m)` for `m < 0`.
pub fn torus_homology(n: usize, m: i64) -> Result<BigradedGroup> {
    torus_homology_with_class(n, m, &euler_class(n)?)
}

pub fn torus_homology_with_class(n: usize, m: i64, class: &RingElement) -> Result<BigradedGroup> {
    match m {
        0 => bigraded_homology(&build_unlink_complex(n)?),
        m if m > 0 => bigraded_homology(&build_torus_complex_with_class(n, m, class)?),
        m => Ok(dualize(&torus_homology_with_class(n, -m, class)?)),
    }
}

/// The second route to `KR_N(T(2,m))`: summands for `m >= 1`, Künneth for
/// `m = 0`, duality for `m < 0`.
pub fn torus_homology_by_summands(n: usize, m: i64) -> Result<BigradedGroup> {
    torus_homology_by_summands_with_class(n, m, &euler_class(n)?)
}

pub fn torus_homology_by_summands_with_class(n: usize, m: i64, class: &RingElement) -> Result<BigradedGroup> {
    match m {
        0 => unlink_homology(n),
        m if m > 0 => summand_homology_with_class(n, &decompose_summands(n, m)?, class),
        m => Ok(dualize(&torus_homology_by_summands_with_class(n, -m, class)?)),
    }
}

/// `sum (-1)^h rank q^q`, torsion ignored.
pub trait EulerCharacteristic {
    fn euler_characteristic(&self) -> LaurentPoly;
}

fn sign(h: i64) -> i64 {
    if h.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

impl EulerCharacteristic for BigradedComplex {
    fn euler_characteristic(&self) -> LaurentPoly {
        (self.start()..=self.end())
            .flat_map(|h| self.q_degrees(h).iter().map(move |&q| LaurentPoly::monomial(q, sign(h))))
            .sum()
    }
}

impl EulerCharacteristic for BigradedGroup {
    fn euler_characteristic(&self) -> LaurentPoly {
        self.iter().map(|(&(h, q), g)| LaurentPoly::monomial(q, sign(h) * g.free as i64)).sum()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cohomring::gysin_circle_ut;
    use crate::laurent::qint;

    fn closed_form(n: usize, m: i64) -> AbGroup {
        let k = (m / 2) as usize;
        if m % 2 == 1 {
            AbGroup::new(n + 2 * k * (n - 1), &vec![n as i64; k])
        } else {
            AbGroup::new(n * n + (2 * k - 2) * (n - 1), &vec![n as i64; k - 1])
        }
    }

    #[test]
    fn a_complex_n2() {
        let a = build_a_complex(2).unwrap();
        assert_eq!(a.differential(-1), IntMatrix::from_rows(&[[0, 0], [2, 0]]));
        let h = bigraded_homology(&a).unwrap();
        assert_eq!(h.total(), AbGroup::new(2, &[2]));
    }

    #[test]
    fn a_complex_placement() {
        for n in 2..=6usize {
            let n_ = n as i64;
            let h = bigraded_homology(&build_a_complex(n).unwrap()).unwrap();
            let mut expected = BigradedGroup::new();
            for q in (2 - 2 * n_..=-2).step_by(2) {
                expected.insert_sum(0, q, &AbGroup::free(1));
            }
            expected.insert_sum(0, 0, &AbGroup::cyclic(n_));
            for q in (2..=2 * n_ - 2).step_by(2) {
                expected.insert_sum(-1, q, &AbGroup::free(1));
            }
            assert_eq!(h, expected, "N={n}");
            let gysin = gysin_circle_ut(n).unwrap();
            assert_eq!(h.total(), gysin.total());
        }
    }

    #[test]
    fn a_complex_euler() {
        for n in 2..=5usize {
            let n_ = n as i64;
            let p = flag_ring(n).unwrap().poincare();
            let expected = &p.shift(2 - 2 * n_) - &p.shift(4 - 2 * n_);
            assert_eq!(build_a_complex(n).unwrap().euler_characteristic(), expected);
        }
    }

    #[test]
    fn torus_rejects_small_m() {
        assert_eq!(build_torus_complex(3, 0).unwrap_err(), Error::TwistTooSmall(0));
        assert!(decompose_summands(3, -1).is_err());
        assert!(decompose_summands(1, 3).is_err());
    }

    #[test]
    fn torus_m1_is_unknot() {
        for n in 2..=6 {
            let c = build_torus_complex(n, 1).unwrap();
            assert_eq!(c.start(), -1);
            let h = bigraded_homology(&c).unwrap();
            assert_eq!(h, unknot_homology(n).unwrap());
            assert_eq!(h.euler_characteristic(), qint(n as u32));
        }
    }

    #[test]
    fn table_rows() {
        let h = |n, m| bigraded_homology(&build_torus_complex(n, m).unwrap()).unwrap().total();
        assert_eq!(h(2, 3), AbGroup::new(4, &[2]));
        assert_eq!(h(3, 4), AbGroup::new(13, &[3]));
        assert_eq!(h(4, 2), AbGroup::free(16));
        assert_eq!(h(3, 5), AbGroup::new(11, &[3, 3]));
    }

    #[test]
    fn closed_forms_and_pipelines() {
        for n in 2..=4 {
            for m in 1..=8 {
                let a = bigraded_homology(&build_torus_complex(n, m).unwrap()).unwrap();
                let b = summand_homology(n, &decompose_summands(n, m).unwrap()).unwrap();
                assert_eq!(a, b, "N={n} m={m}");
                assert_eq!(a.total(), closed_form(n, m), "N={n} m={m}");
            }
        }
    }

    #[test]
    fn summand_lists() {
        let kinds = |m| decompose_summands(3, m).unwrap().iter().map(|d| d.kind).collect::<Vec<_>>();
        use SummandKind::*;
        assert_eq!(kinds(1), vec![Unknot]);
        assert_eq!(kinds(4), vec![Theta, AComplex, Unknot]);
        assert_eq!(kinds(5), vec![AComplex, AComplex, Unknot]);
        assert_eq!(kinds(2), vec![Theta, Unknot]);
    }

    #[test]
    fn euler_of_complex_equals_euler_of_homology() {
        for n in 2..=4 {
            for m in 1..=6 {
                let c = build_torus_complex(n, m).unwrap();
                assert_eq!(c.euler_characteristic(), bigraded_homology(&c).unwrap().euler_characteristic());
            }
        }
    }

    #[test]
    fn euler_matches_skein() {
        for n in 2..=4 {
            for m in -6..=6 {
                let chi = torus_homology(n, m).unwrap().euler_characteristic();
                assert_eq!(chi, crate::moy::sln_polynomial(n, m).unwrap(), "N={n} m={m}");
            }
        }
    }

    #[test]
    fn dualize_examples() {
        let g: BigradedGroup = [((0, 3), AbGroup::free(1)), ((2, 5), AbGroup::new(1, &[4]))].into_iter().collect();
        let d = dualize(&g);
        assert_eq!(d.get(0, -3), AbGroup::free(1));
        assert_eq!(d.get(-2, -5), AbGroup::free(1));
        assert_eq!(d.get(-1, -5), AbGroup::cyclic(4));
        assert_eq!(dualize(&d), g);
    }

    #[test]
    fn dualize_matches_dual_complex() {
        for n in 2..=4 {
            for m in 1..=5 {
                let c = build_torus_complex(n, m).unwrap();
                let h = bigraded_homology(&c).unwrap();
                assert_eq!(bigraded_homology(&c.dual()).unwrap(), dualize(&h), "N={n} m={m}");
            }
        }
    }

    #[test]
    fn unlink_routes_agree() {
        for n in 2..=5 {
            let a = torus_homology(n, 0).unwrap();
            assert_eq!(a, unlink_homology(n).unwrap());
            assert_eq!(a.total(), AbGroup::free(n * n));
        }
    }

    #[test]
    fn rejects_inhomogeneous_differential() {
        let d = IntMatrix::from_rows(&[[1]]);
        assert_eq!(
            BigradedComplex::new(0, vec![vec![0], vec![2]], vec![d.clone()]),
            Err(Error::NotHomogeneous { position: 0 })
        );
        assert!(BigradedComplex::new(0, vec![vec![2], vec![2]], vec![d]).is_ok());
    }

    #[test]
    fn json_round_trip() {
        let g = torus_homology(3, 3).unwrap();
        let labeled = g.labeled(3, 3);
        let s = serde_json::to_string(&labeled).unwrap();
        assert!(s.starts_with(r#"{"N":3,"m":3,"groups":[{"h":-3,"q":12,"#), "{s}");
        let back: LabeledBigradedGroup = serde_json::from_str(&s).unwrap();
        assert_eq!(back, labeled);
        assert_eq!(back.group(), g);
    }
}
