//! Components of the SU(N) representation space of `T(2,m)` with meridians
//! sent to a fixed conjugacy class, and their integral cohomology.
//!
//! Components are indexed by angles `θ = πt/m` with `0 <= t <= m/2`: `t = 0`
//! gives `CP^{N-1}`, `2t = m` gives `F(1,1;N)`, every other `t` gives
//! `UT CP^{N-1}`.

use serde::{Deserialize, Serialize};

use crate::cohomring::{cp_ring, euler_class, flag_ring, gysin_circle_ut_with_class, GradedAbGroup, RingElement};
use crate::knotcomplex::{
    decompose_summands, summand_homology_with_class, torus_homology_with_class, SummandDescriptor, SummandKind,
};
use crate::zlinalg::AbGroup;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum ComponentKind {
    Cp,
    Ut,
    Flag,
    /// `CP^{N-1} x CP^{N-1}`, the whole space for the unlink `m = 0`.
    CpProduct,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ComponentLabel {
    pub kind: ComponentKind,
    pub angle_numerator: i64,
}

/// Components for `T(2,m)`. A mirror image has the same space, so `m` and
/// `-m` agree.
pub fn components(n: usize, m: i64) -> Result<Vec<ComponentLabel>> {
    if n < 2 {
        return Err(Error::RankTooSmall(n));
    }
    let m = m.abs();
    if m == 0 {
        return Ok(vec![ComponentLabel { kind: ComponentKind::CpProduct, angle_numerator: 0 }]);
    }
    Ok((0..=m / 2)
        .map(|t| {
            let kind = match t {
                0 => ComponentKind::Cp,
                t if 2 * t == m => ComponentKind::Flag,
                _ => ComponentKind::Ut,
            };
            ComponentLabel { kind, angle_numerator: t }
        })
        .collect())
}

pub fn component_cohomology(label: &ComponentLabel, n: usize) -> Result<GradedAbGroup> {
    component_cohomology_with_class(label, n, &euler_class(n)?)
}

/// As [`component_cohomology`], with `class` as the Euler class of the
/// circle bundle `UT CP^{N-1} -> F(1,1;N)`.
pub fn component_cohomology_with_class(label: &ComponentLabel, n: usize, class: &RingElement) -> Result<GradedAbGroup> {
    match label.kind {
        ComponentKind::Cp => Ok(cp_ring(n)?.graded_group()),
        ComponentKind::Flag => Ok(flag_ring(n)?.graded_group()),
        ComponentKind::Ut => gysin_circle_ut_with_class(n, class),
        ComponentKind::CpProduct => {
            let c = cp_ring(n)?.graded_group();
            c.tensor_free(&c)
        }
    }
}

pub fn total_cohomology(n: usize, m: i64) -> Result<GradedAbGroup> {
    total_cohomology_with_class(n, m, &euler_class(n)?)
}

pub fn total_cohomology_with_class(n: usize, m: i64, class: &RingElement) -> Result<GradedAbGroup> {
    let mut out = GradedAbGroup::default();
    for label in components(n, m)? {
        out = out.direct_sum(&component_cohomology_with_class(&label, n, class)?);
    }
    Ok(out)
}

/// One summand of the complex next to the component it corresponds to.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SummandRow {
    /// `None` for the unlink, whose homology is a tensor square.
    pub summand: Option<SummandDescriptor>,
    pub kr: AbGroup,
    pub component: ComponentLabel,
    pub rep: AbGroup,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub n: usize,
    pub m: i64,
    pub kr_total: AbGroup,
    pub rep_total: AbGroup,
    pub isomorphic: bool,
    pub summand_table: Vec<SummandRow>,
}

/// Compares the total homology of `T(2,m)` with the total cohomology of
/// its representation space, and lists the summand-component pairing.
pub fn compare(n: usize, m: i64) -> Result<VerificationReport> {
    compare_with_class(n, m, &euler_class(n)?)
}

/// As [`compare`], with `class` in place of the Euler class everywhere.
pub fn compare_with_class(n: usize, m: i64, class: &RingElement) -> Result<VerificationReport> {
    let kr_total = torus_homology_with_class(n, m, class)?.total();
    let rep_total = total_cohomology_with_class(n, m, class)?.total();
    let comps = components(n, m)?;
    let mut summand_table = Vec::new();
    if m == 0 {
        summand_table.push(SummandRow {
            summand: None,
            kr: kr_total.clone(),
            component: comps[0],
            rep: component_cohomology_with_class(&comps[0], n, class)?.total(),
        });
    } else {
        for d in decompose_summands(n, m.abs())? {
            let t = match d.kind {
                SummandKind::Unknot => 0,
                SummandKind::Theta => m.abs() / 2,
                SummandKind::AComplex => -d.h_shift / 2,
            };
            let component = comps[t as usize];
            summand_table.push(SummandRow {
                summand: Some(d),
                kr: summand_homology_with_class(n, &[d], class)?.total(),
                component,
                rep: component_cohomology_with_class(&component, n, class)?.total(),
            });
        }
    }
    Ok(VerificationReport { n, m, isomorphic: kr_total == rep_total, kr_total, rep_total, summand_table })
}
