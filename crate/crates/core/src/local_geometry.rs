//! Codimension-2 degenerations of an orbit closure, the surface singularity
//! transverse to each one, and how a finite cover behaves over it.
//!
//! The classification is only carried out under the hypotheses where it is
//! proved: rectangular sl types, sp types with conditions (i) and (ii), and
//! rather odd so types with conditions (i) and (iii). Outside those the
//! operations refuse rather than guess a minimal-degeneration table.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Algebra, OrbitId, Partition};
use crate::topology::{CoverKind, CoverSpec};

/// Transverse surface singularity along a codimension-2 degeneration.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SliceType {
    /// An `A_k` surface singularity, `C^2 / (Z/(k+1))`.
    A(u64),
    /// Two `A_1` surface singularities glued at the singular point; the
    /// closure is not normal along such a locus.
    A1UnionA1,
}

impl SliceType {
    /// Order of the local quotient group (per component).
    pub fn component_group_order(&self) -> u64 {
        match self {
            SliceType::A(k) => k + 1,
            SliceType::A1UnionA1 => 2,
        }
    }

    pub fn components(&self) -> u64 {
        match self {
            SliceType::A(_) => 1,
            SliceType::A1UnionA1 => 2,
        }
    }

    fn text(&self) -> String {
        match self {
            SliceType::A(k) => format!("A{k}"),
            SliceType::A1UnionA1 => "A1uA1".into(),
        }
    }

    fn parse(s: &str) -> Result<Self> {
        if s == "A1uA1" {
            return Ok(SliceType::A1UnionA1);
        }
        s.strip_prefix('A')
            .and_then(|k| k.parse::<u64>().ok())
            .map(SliceType::A)
            .ok_or_else(|| Error::InvalidPartition(format!("bad slice type `{s}`")))
    }
}

impl Serialize for SliceType {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

impl<'de> Deserialize<'de> for SliceType {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        SliceType::parse(&s).map_err(serde::de::Error::custom)
    }
}

/// One codimension-2 degeneration of the orbit closure, attached to a gap
/// member of the partition.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Codim2Locus {
    #[serde(rename = "gap")]
    pub gap_member: u64,
    pub degeneration: Partition,
    pub slice: SliceType,
    /// The degeneration partition is very even, so it names two orbits; one
    /// locus is emitted standing for both.
    pub very_even_split: bool,
}

/// How a gap member of a rather odd so-partition sits inside it.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SoGapClass {
    /// Odd gap `i >= 5` with three empty slots below; the slice is `A_3`.
    Exceptional,
    /// Even gap with `r_{i-2} = 0`, `r_{i-3} != 0`.
    EvenSparse,
    /// Even gap with `r_{i-2} != 0` (including `i = 2`).
    EvenCrowded,
    /// Odd gap with `r_{i-2} = 0` and `r_{i-3} != 0` (including `i = 3`).
    OddSparse,
    /// Odd gap with `r_{i-2} != 0`.
    OddCrowded,
}

/// Classify a gap member of a rather odd so-partition satisfying (i), (iii).
pub fn classify_so_gap(p: &Partition, gap: u64) -> SoGapClass {
    let r = |v: u64| if v == 0 { u64::MAX } else { p.multiplicity(v) };
    if gap.is_multiple_of(2) {
        if r(gap - 2) != 0 {
            SoGapClass::EvenCrowded
        } else {
            SoGapClass::EvenSparse
        }
    } else if r(gap - 2) != 0 {
        SoGapClass::OddCrowded
    } else if r(gap - 3) != 0 {
        SoGapClass::OddSparse
    } else {
        SoGapClass::Exceptional
    }
}

/// Apply additive multiplicity edits to a partition (negative removes).
fn edit(p: &Partition, edits: &[(u64, i64)]) -> Partition {
    let mut pairs: Vec<(u64, i64)> = p.pairs().iter().map(|&(v, m)| (v, m as i64)).collect();
    for &(v, dm) in edits {
        if v == 0 {
            continue;
        }
        if let Some(entry) = pairs.iter_mut().find(|(pv, _)| *pv == v) {
            entry.1 += dm;
        } else {
            pairs.push((v, dm));
        }
    }
    debug_assert!(pairs.iter().all(|&(_, m)| m >= 0), "negative multiplicity");
    Partition::from_value_mults(pairs.into_iter().map(|(v, m)| (v, m.max(0) as u64)))
}

/// The codimension-2 components of the singular locus of the orbit closure,
/// one per gap member, with their transverse slice types.
pub fn codim2_degenerations(orbit: &OrbitId) -> Result<Vec<Codim2Locus>> {
    orbit.ensure_valid()?;
    let p = &orbit.partition;
    match orbit.algebra {
        Algebra::Sl => {
            if p.pairs().len() > 1 {
                return Err(Error::UnsupportedHypotheses(format!(
                    "sl slice data is only classified for rectangular types, not [{p}]"
                )));
            }
            let Some(&(d, mult)) = p.pairs().first() else {
                return Ok(Vec::new());
            };
            if d == 1 {
                return Ok(Vec::new());
            }
            // [d^i] degenerates to [d^{i-1}, d-1, 1] across an A_{d-1} slice
            let degeneration = Partition::from_value_mults([(d, mult - 1), (d - 1, 1), (1, 1)]);
            Ok(vec![Codim2Locus {
                gap_member: d,
                degeneration,
                slice: SliceType::A(d - 1),
                very_even_split: false,
            }])
        }
        Algebra::Sp => {
            let c = orbit.conditions();
            if !(c.cond_i && c.cond_ii) {
                return Err(Error::UnsupportedHypotheses(format!(
                    "sp slice data needs conditions (i) and (ii); [{p}] fails {:?}",
                    c.witnesses
                )));
            }
            let mut out = Vec::new();
            for i in p.gap_members() {
                // one i and one (i-2) become two (i-1)
                let degeneration = edit(p, &[(i, -1), (i - 1, 2), (i.saturating_sub(2), -1)]);
                debug_assert_eq!(degeneration.sum(), p.sum());
                out.push(Codim2Locus {
                    gap_member: i,
                    degeneration,
                    slice: SliceType::A(1),
                    very_even_split: false,
                });
            }
            Ok(out)
        }
        Algebra::So => {
            let c = orbit.conditions();
            if !(p.is_rather_odd() && c.cond_i && c.cond_iii) {
                return Err(Error::UnsupportedHypotheses(format!(
                    "so slice data needs a rather odd type with conditions (i) and (iii); [{p}] does not qualify"
                )));
            }
            let very_even_ambient = p.is_very_even();
            let mut out = Vec::new();
            for i in p.gap_members() {
                let class = classify_so_gap(p, i);
                let (degeneration, slice) = match class {
                    SoGapClass::Exceptional => (
                        // one i and one (i-4) become two (i-2)
                        edit(p, &[(i, -1), (i - 2, 2), (i - 4, -1)]),
                        SliceType::A(3),
                    ),
                    SoGapClass::EvenSparse => (
                        // two i and one (i-3) become three (i-1)
                        edit(p, &[(i, -2), (i - 1, 3), (i - 3, -1)]),
                        SliceType::A(1),
                    ),
                    SoGapClass::EvenCrowded => {
                        // two i and two (i-2) become four (i-1); across a
                        // very even ambient type the two sheets fall into
                        // the separate labelled closures
                        let d = edit(p, &[(i, -2), (i - 1, 4), (i.saturating_sub(2), -2)]);
                        let slice = if very_even_ambient {
                            SliceType::A(1)
                        } else {
                            SliceType::A1UnionA1
                        };
                        (d, slice)
                    }
                    SoGapClass::OddSparse => (
                        // one i and two (i-3) become three (i-2)
                        edit(p, &[(i, -1), (i - 2, 3), (i.saturating_sub(3), -2)]),
                        SliceType::A(1),
                    ),
                    SoGapClass::OddCrowded => (
                        // one i and one (i-2) become two (i-1)
                        edit(p, &[(i, -1), (i - 1, 2), (i - 2, -1)]),
                        SliceType::A(1),
                    ),
                };
                debug_assert_eq!(degeneration.sum(), p.sum());
                let very_even_split = !degeneration.is_empty() && degeneration.is_very_even();
                out.push(Codim2Locus {
                    gap_member: i,
                    degeneration,
                    slice,
                    very_even_split,
                });
            }
            Ok(out)
        }
    }
}

/// Local model of one sheet of a cover fiber over a transverse slice.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LocalModel {
    SmoothC2,
    A(u64),
}

impl LocalModel {
    pub fn group_order(&self) -> u64 {
        match self {
            LocalModel::SmoothC2 => 1,
            LocalModel::A(k) => k + 1,
        }
    }

    pub fn text(&self) -> String {
        match self {
            LocalModel::SmoothC2 => "smooth_c2".into(),
            LocalModel::A(k) => format!("A{k}"),
        }
    }
}

impl Serialize for LocalModel {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&self.text())
    }
}

/// Shape of the preimage of a transverse slice in a cover.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CoverFiber {
    pub copies: u64,
    pub local_model: LocalModel,
}

/// How the chosen cover decomposes over a codimension-2 locus.
pub fn cover_fiber_over_codim2(
    orbit: &OrbitId,
    cover: &CoverSpec,
    locus: &Codim2Locus,
) -> Result<CoverFiber> {
    orbit.ensure_valid()?;
    let p = &orbit.partition;
    match (orbit.algebra, cover.kind) {
        (Algebra::Sl, CoverKind::CyclicSl { .. }) | (Algebra::Sl, CoverKind::Universal)
            if p.pairs().len() == 1 =>
        {
            let d = p.largest().unwrap_or(1);
            let e = match cover.kind {
                CoverKind::CyclicSl { e } => e,
                _ => d,
            };
            if e == 0 || !d.is_multiple_of(e) {
                return Err(Error::InvalidCoverDegree(format!(
                    "degree {e} does not divide {d}"
                )));
            }
            // the slice A_{d-1} pulls back to one connected sheet, the
            // quotient of the plane by the index-e subgroup
            let q = d / e;
            let model = if q == 1 {
                LocalModel::SmoothC2
            } else {
                LocalModel::A(q - 1)
            };
            Ok(CoverFiber {
                copies: 1,
                local_model: model,
            })
        }
        (Algebra::Sp, CoverKind::Universal) => {
            let b = p.count_even();
            Ok(CoverFiber {
                copies: 1 << b.saturating_sub(1),
                local_model: LocalModel::SmoothC2,
            })
        }
        (Algebra::So, CoverKind::Universal) => {
            if !(p.is_rather_odd() && orbit.conditions().cond_i && orbit.conditions().cond_iii) {
                return Err(Error::UnsupportedHypotheses(
                    "so cover fibers are classified for rather odd types with (i), (iii)".into(),
                ));
            }
            let a = p.count_odd();
            let copies = match locus.slice {
                SliceType::A(1) => 1 << a.saturating_sub(1),
                SliceType::A(3) => 1 << a.saturating_sub(2),
                SliceType::A1UnionA1 => 1 << (a.saturating_sub(1) + 1),
                SliceType::A(_) => {
                    return Err(Error::UnsupportedHypotheses(
                        "unexpected slice type for an so locus".into(),
                    ))
                }
            };
            Ok(CoverFiber {
                copies,
                local_model: LocalModel::SmoothC2,
            })
        }
        _ => Err(Error::UnsupportedHypotheses(format!(
            "no fiber classification for {} over {}",
            cover, orbit
        ))),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum TerminalityStatus {
    /// The singular locus of the cover has codimension at least 4, hence
    /// only terminal singularities.
    #[serde(rename = "terminal_codim_ge_4")]
    TerminalCodimGe4,
    #[serde(rename = "not_asserted")]
    NotAsserted,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TerminalityVerdict {
    pub status: TerminalityStatus,
    pub reason: String,
}

impl TerminalityVerdict {
    fn terminal(reason: &str) -> Self {
        TerminalityVerdict {
            status: TerminalityStatus::TerminalCodimGe4,
            reason: reason.into(),
        }
    }

    fn not_asserted(reason: &str) -> Self {
        TerminalityVerdict {
            status: TerminalityStatus::NotAsserted,
            reason: reason.into(),
        }
    }
}

/// Is the cover known to have singular locus of codimension >= 4 (hence
/// terminal singularities)? Exactly the proved hypothesis bundles are
/// recognized; everything else is `NotAsserted`.
pub fn terminality_verdict(orbit: &OrbitId, cover: &CoverSpec) -> TerminalityVerdict {
    if !orbit.validate_jordan_type() {
        return TerminalityVerdict::not_asserted("not a valid Jordan type");
    }
    if orbit.is_zero_orbit() {
        return TerminalityVerdict::terminal("the closure is a single point");
    }
    let p = &orbit.partition;
    let c = orbit.conditions();
    match (orbit.algebra, cover.kind) {
        (Algebra::Sl, CoverKind::CyclicSl { .. }) | (Algebra::Sl, CoverKind::Universal) => {
            let (_, _, g) = p.counts();
            let full = match cover.kind {
                CoverKind::CyclicSl { e } => e == g,
                _ => true,
            };
            if p.pairs().len() == 1 && full {
                TerminalityVerdict::terminal(
                    "universal cover of a rectangular orbit closure: the subregular slice lifts to smooth sheets",
                )
            } else if p.pairs().len() == 1 {
                TerminalityVerdict::not_asserted(
                    "a proper cyclic cover keeps a residual surface singularity in codimension 2",
                )
            } else {
                TerminalityVerdict::not_asserted(
                    "no slice classification for non-rectangular sl types",
                )
            }
        }
        (Algebra::Sp, CoverKind::Universal) => {
            if c.cond_i && c.cond_ii {
                TerminalityVerdict::terminal(
                    "even members complete: the universal cover splits every codimension-2 slice into smooth sheets",
                )
            } else {
                TerminalityVerdict::not_asserted(
                    "conditions (i), (ii) fail; slices are not known to smooth out in the cover",
                )
            }
        }
        (Algebra::So, CoverKind::Universal) => {
            if !p.is_rather_odd() && c.cond_i && c.cond_ii {
                TerminalityVerdict::terminal(
                    "odd members complete and no central extension: slices split into smooth sheets in the universal cover",
                )
            } else if p.is_rather_odd() && c.cond_i && c.cond_iii {
                TerminalityVerdict::terminal(
                    "rather odd with adjacent-member bounds: every slice preimage is a union of smooth planes",
                )
            } else {
                TerminalityVerdict::not_asserted(
                    "outside the rather-odd (i)+(iii) and general (i)+(ii) bundles",
                )
            }
        }
        (Algebra::So, CoverKind::YCoverSo) => {
            if p.is_rather_odd() && c.cond_i && c.cond_ii {
                TerminalityVerdict::terminal(
                    "odd members complete: every gap is odd with occupied lower slot, and the quotient cover splits each slice into smooth sheets",
                )
            } else {
                TerminalityVerdict::not_asserted(
                    "the quotient cover is only analyzed over odd gaps with occupied lower slots",
                )
            }
        }
        _ => TerminalityVerdict::not_asserted("no statement for this cover"),
    }
}
