//! Orchestrates a full terminalization pipeline for one orbit and one cover:
//! the canonical induction chain, the base orbit and its cover, the covering
//! group of the construction, the degree ledger and the final verdicts.
//!
//! The canonical strategy is: largest eligible pivot whose step preserves
//! the tracked member count. Stage 1 applies type I inductions until the
//! parity-completeness condition (ii) of the family holds; stage 2 applies
//! type II inductions at the members of multiplicity 2 of the pivot parity,
//! largest first, until none remain. Rather odd so-partitions instead apply
//! double type I inductions until the adjacency condition (iii) holds.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::induction::{
    double_eligible, induce_double_type_i, induce_type_i, induce_type_ii, sl_block_step,
    InductionChain, InductionStep, StepKind,
};
use crate::local_geometry::{terminality_verdict, TerminalityVerdict};
use crate::partition::{conditions, Algebra, OrbitId, Partition};
use crate::topology::{
    cover_in_menu, q_factorial_verdict, CoverKind, CoverSpec, QFactorialVerdict,
};

/// Pivot selection mode.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Strategy {
    Canonical,
    /// A user-supplied pivot sequence; each step is validated and the final
    /// base must land in the terminal bundle of its family.
    Explicit(Vec<ExplicitStep>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ExplicitStep {
    pub kind: StepKind,
    pub pivot: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StageKind {
    TypeIStage,
    TypeIIStage,
    DoubleStage,
}

/// The canonical pivot for one stage: the largest eligible member whose
/// step keeps the tracked count (every type II pivot does).
pub fn canonical_pivot(stage: StageKind, orbit: &OrbitId) -> Option<u64> {
    let p = &orbit.partition;
    match stage {
        StageKind::TypeIStage => p
            .gap_members()
            .into_iter()
            .filter(|&g| {
                induce_type_i(orbit, g)
                    .map(|s| s.preserves_count)
                    .unwrap_or(false)
            })
            .max(),
        StageKind::TypeIIStage => {
            let parity = match orbit.algebra {
                Algebra::Sp => 0,
                Algebra::So => 1,
                Algebra::Sl => return None,
            };
            p.members()
                .filter(|&v| v % 2 == parity && p.multiplicity(v) == 2)
                .max()
        }
        StageKind::DoubleStage => p
            .gap_members()
            .into_iter()
            .filter(|&g| double_eligible(p, g))
            .max(),
    }
}

/// Which cover of the base orbit closes the construction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum BaseCover {
    UniversalCover,
    YCover,
    /// Product of the factor covers, divided by the kernel subgroup `H`.
    ProductModH,
}

/// The finite group the product construction divides by.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum CoveringGroupKind {
    #[serde(rename = "trivial_group")]
    TrivialGroup,
    /// Tuples of e-th roots of unity with product 1 across `f` factors;
    /// order `e^{f-1}`.
    #[serde(rename = "s_zf")]
    SZf { e: u64, f: u64 },
    /// Kernel of the product-of-powers character on the block center;
    /// order `e^{r-1} * prod(blocks)` over the `r` listed blocks.
    #[serde(rename = "kernel_h")]
    KernelH { blocks: Vec<u64>, e: u64 },
    /// Kernel of the sum character `(Z/2)^{k+1} -> Z/2`; order `2^k`.
    #[serde(rename = "sum_kernel_2")]
    SumKernel2 { k: u64 },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoveringGroupDescriptor {
    #[serde(flatten)]
    pub kind: CoveringGroupKind,
    pub order: u64,
}

impl CoveringGroupDescriptor {
    pub fn trivial() -> Self {
        CoveringGroupDescriptor {
            kind: CoveringGroupKind::TrivialGroup,
            order: 1,
        }
    }

    pub fn s_zf(e: u64, f: u64) -> Self {
        CoveringGroupDescriptor {
            kind: CoveringGroupKind::SZf { e, f },
            order: e.pow((f - 1) as u32),
        }
    }

    pub fn kernel_h(blocks: Vec<u64>, e: u64) -> Self {
        let order = e.pow((blocks.len() as u32).saturating_sub(1)) * blocks.iter().product::<u64>();
        CoveringGroupDescriptor {
            kind: CoveringGroupKind::KernelH { blocks, e },
            order,
        }
    }

    pub fn sum_kernel_2(k: u64) -> Self {
        CoveringGroupDescriptor {
            kind: CoveringGroupKind::SumKernel2 { k },
            order: 1 << k,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct DegreeLedger {
    pub cover_degree: u64,
    pub springer_total: u64,
    pub base_cover_degree: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CrepantVerdict {
    Yes,
    No,
    Unknown,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CrepantReport {
    pub verdict: CrepantVerdict,
    pub reason: String,
}

impl CrepantReport {
    fn new(verdict: CrepantVerdict, reason: &str) -> Self {
        CrepantReport {
            verdict,
            reason: reason.into(),
        }
    }
}

/// Everything the pipeline established about one cover of one orbit closure.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TerminalizationReport {
    pub orbit: OrbitId,
    pub cover: CoverSpec,
    pub chain: InductionChain,
    pub flag_type: Vec<u64>,
    /// `(block size, gl-orbit)` for every flag block; zero orbits for the
    /// type I/II blocks, `[2^s]` for double blocks, `[e^i]` for sl blocks.
    pub levi_blocks: Vec<(u64, Partition)>,
    pub base: OrbitId,
    pub base_cover: BaseCover,
    pub covering_group: CoveringGroupDescriptor,
    pub degrees: DegreeLedger,
    pub q_factorial: QFactorialVerdict,
    pub terminal: TerminalityVerdict,
    pub crepant: CrepantReport,
}

impl TerminalizationReport {
    /// The multiplicative degree bookkeeping of the construction.
    pub fn degree_ledger(&self) -> (u64, u64, u64) {
        (
            self.degrees.cover_degree,
            self.degrees.springer_total,
            self.degrees.base_cover_degree,
        )
    }
}

fn base_cover_spec(base_cover: BaseCover, degree: u64) -> CoverSpec {
    match base_cover {
        BaseCover::UniversalCover | BaseCover::ProductModH => CoverSpec::universal(degree),
        BaseCover::YCover => CoverSpec::y_cover(degree),
    }
}

/// Build the full report for one orbit and one cover from its menu.
pub fn build(orbit: &OrbitId, cover: &CoverSpec, strategy: &Strategy) -> Result<TerminalizationReport> {
    orbit.ensure_valid()?;
    cover_in_menu(orbit, cover)?;
    match orbit.algebra {
        Algebra::Sl => {
            if matches!(strategy, Strategy::Explicit(_)) {
                return Err(Error::InvalidPivot(
                    "explicit pivot sequences apply to sp/so chains only".into(),
                ));
            }
            build_sl(orbit, cover)
        }
        Algebra::So if orbit.partition.is_rather_odd() && !orbit.is_zero_orbit() => {
            build_so_rather_odd(orbit, cover, strategy)
        }
        _ => build_two_stage(orbit, cover, strategy),
    }
}

fn strategy_stuck(message: String, steps: &[InductionStep]) -> Error {
    Error::StrategyStuck {
        message,
        partial_pivots: steps.iter().map(|s| s.pivot).collect(),
    }
}

/// sp, and so with a non-rather-odd partition: type I until (ii), then
/// type II until no pivot of the tracked parity has multiplicity 2.
fn build_two_stage(
    orbit: &OrbitId,
    cover: &CoverSpec,
    strategy: &Strategy,
) -> Result<TerminalizationReport> {
    let alg = orbit.algebra;
    let mut steps: Vec<InductionStep> = Vec::new();
    let mut current = orbit.clone();

    match strategy {
        Strategy::Canonical => {
            while !conditions(alg, &current.partition).cond_ii {
                let Some(pivot) = canonical_pivot(StageKind::TypeIStage, &current) else {
                    return Err(strategy_stuck(
                        format!(
                            "no count-preserving type I step exists at [{}] while (ii) fails",
                            current.partition
                        ),
                        &steps,
                    ));
                };
                let step = induce_type_i(&current, pivot)?;
                current = step.target.clone();
                steps.push(step);
            }
            while let Some(pivot) = canonical_pivot(StageKind::TypeIIStage, &current) {
                let step = induce_type_ii(&current, pivot)?;
                current = step.target.clone();
                steps.push(step);
            }
        }
        Strategy::Explicit(list) => {
            for es in list {
                let step = match es.kind {
                    StepKind::TypeI => {
                        let step = induce_type_i(&current, es.pivot)?;
                        if !step.preserves_count {
                            return Err(strategy_stuck(
                                format!(
                                    "type I at {} collapses the tracked member count; the covering degree bookkeeping breaks",
                                    es.pivot
                                ),
                                &steps,
                            ));
                        }
                        step
                    }
                    StepKind::TypeII => induce_type_ii(&current, es.pivot)?,
                    other => {
                        return Err(Error::InvalidPivot(format!(
                            "step kind {other:?} is not part of a type I/II chain"
                        )))
                    }
                };
                current = step.target.clone();
                steps.push(step);
            }
            let c = conditions(alg, &current.partition);
            let leftover = canonical_pivot(StageKind::TypeIIStage, &current).is_some();
            if !c.cond_ii || leftover {
                return Err(strategy_stuck(
                    format!(
                        "explicit chain ends at [{}], which is not a terminal base",
                        current.partition
                    ),
                    &steps,
                ));
            }
        }
    }

    let base = current;
    let springer_total: u64 = steps.iter().map(|s| s.springer_degree).product();
    let chain = InductionChain::palindromic(steps, base.size);
    let levi_blocks: Vec<(u64, Partition)> = chain
        .steps
        .iter()
        .map(|s| {
            let width = s.flag_block();
            (width, Partition::from_value_mults([(1, width)]))
        })
        .collect();

    let (base_cover, base_degree) = match alg {
        Algebra::Sp => {
            let b2 = base.partition.count_even();
            (BaseCover::UniversalCover, 1u64 << b2)
        }
        Algebra::So => {
            // some odd member of the input with multiplicity >= 3 forces a
            // non-rather-odd base carrying its own universal cover; otherwise
            // the base is rather odd and the construction descends to its
            // quotient cover
            let case1 = orbit
                .partition
                .pairs()
                .iter()
                .any(|&(v, m)| v % 2 == 1 && m >= 3);
            let a2 = base.partition.count_odd();
            let degree = 1u64 << a2.saturating_sub(1);
            if case1 {
                debug_assert!(!base.partition.is_rather_odd() || base.partition.is_empty());
                (BaseCover::UniversalCover, degree)
            } else {
                debug_assert!(base.partition.is_rather_odd());
                (BaseCover::YCover, degree)
            }
        }
        Algebra::Sl => unreachable!(),
    };

    if cover.degree != springer_total * base_degree {
        return Err(Error::Internal(format!(
            "degree ledger mismatch at {}: {} != {} * {}",
            orbit, cover.degree, springer_total, base_degree
        )));
    }

    let bspec = base_cover_spec(base_cover, base_degree);
    let crepant = crepant_for_single_base(&base, base_cover);

    Ok(TerminalizationReport {
        orbit: orbit.clone(),
        cover: *cover,
        flag_type: chain.flag_type.clone(),
        levi_blocks,
        base: base.clone(),
        base_cover,
        covering_group: CoveringGroupDescriptor::trivial(),
        degrees: DegreeLedger {
            cover_degree: cover.degree,
            springer_total,
            base_cover_degree: base_degree,
        },
        q_factorial: q_factorial_verdict(&base, &bspec),
        terminal: terminality_verdict(&base, &bspec),
        crepant,
        chain,
    })
}

/// Rather odd so: double type I inductions until (iii) holds.
fn build_so_rather_odd(
    orbit: &OrbitId,
    cover: &CoverSpec,
    strategy: &Strategy,
) -> Result<TerminalizationReport> {
    let mut steps: Vec<InductionStep> = Vec::new();
    let mut current = orbit.clone();

    match strategy {
        Strategy::Canonical => {
            while !conditions(Algebra::So, &current.partition).cond_iii {
                let Some(pivot) = canonical_pivot(StageKind::DoubleStage, &current) else {
                    return Err(strategy_stuck(
                        format!(
                            "no eligible long gap at [{}] while (iii) fails",
                            current.partition
                        ),
                        &steps,
                    ));
                };
                let step = induce_double_type_i(&current, pivot)?;
                current = step.target.clone();
                steps.push(step);
            }
        }
        Strategy::Explicit(list) => {
            for es in list {
                if es.kind != StepKind::DoubleTypeI {
                    return Err(Error::InvalidPivot(
                        "a rather odd chain is built from double type I steps only".into(),
                    ));
                }
                let step = induce_double_type_i(&current, es.pivot)?;
                current = step.target.clone();
                steps.push(step);
            }
            if !conditions(Algebra::So, &current.partition).cond_iii {
                return Err(strategy_stuck(
                    format!(
                        "explicit chain ends at [{}], which still violates (iii)",
                        current.partition
                    ),
                    &steps,
                ));
            }
        }
    }

    let base = current;
    let k = steps.len() as u64;
    let block_sizes: Vec<u64> = steps.iter().map(|s| s.block).collect();
    let chain = InductionChain::palindromic(steps, base.size);
    let levi_blocks: Vec<(u64, Partition)> = block_sizes
        .iter()
        .map(|&s| (2 * s, Partition::from_value_mults([(2, s)])))
        .collect();
    let springer_total = 1u64;

    let report = match cover.kind {
        CoverKind::Universal => {
            let base_degree = cover.degree; // deg(pi') = deg(pi)
            let bspec = base_cover_spec(BaseCover::ProductModH, base_degree);
            let q_factorial = if k == 0 {
                q_factorial_verdict(&base, &bspec)
            } else {
                // product of covers certified factor by factor, then the
                // kernel quotient and the flag bundle keep the property
                QFactorialVerdict::ViaConstruction
            };
            let terminal = if k == 0 {
                terminality_verdict(&base, &bspec)
            } else {
                TerminalityVerdict {
                    status: crate::local_geometry::TerminalityStatus::TerminalCodimGe4,
                    reason: "each factor cover is terminal and the kernel group fixes only loci of codimension >= 4".into(),
                }
            };
            let crepant = crepant_for_rather_odd(&base, &block_sizes);
            TerminalizationReport {
                orbit: orbit.clone(),
                cover: *cover,
                flag_type: chain.flag_type.clone(),
                levi_blocks,
                base: base.clone(),
                base_cover: BaseCover::ProductModH,
                covering_group: CoveringGroupDescriptor::sum_kernel_2(k),
                degrees: DegreeLedger {
                    cover_degree: cover.degree,
                    springer_total,
                    base_cover_degree: base_degree,
                },
                q_factorial,
                terminal,
                crepant,
                chain,
            }
        }
        CoverKind::YCoverSo => {
            // the flag group action descends to the quotient cover of the
            // base, no auxiliary factor covers are needed
            let base_degree = cover.degree;
            let bspec = base_cover_spec(BaseCover::YCover, base_degree);
            let crepant = if base.is_zero_orbit() {
                CrepantReport::new(CrepantVerdict::Yes, "the base closure is a point")
            } else {
                CrepantReport::new(
                    CrepantVerdict::Unknown,
                    "smoothness of the quotient cover of the base is not settled",
                )
            };
            TerminalizationReport {
                orbit: orbit.clone(),
                cover: *cover,
                flag_type: chain.flag_type.clone(),
                levi_blocks,
                base: base.clone(),
                base_cover: BaseCover::YCover,
                covering_group: CoveringGroupDescriptor::trivial(),
                degrees: DegreeLedger {
                    cover_degree: cover.degree,
                    springer_total,
                    base_cover_degree: base_degree,
                },
                q_factorial: q_factorial_verdict(&base, &bspec),
                terminal: terminality_verdict(&base, &bspec),
                crepant,
                chain,
            }
        }
        CoverKind::CyclicSl { .. } => {
            return Err(Error::InvalidCover("cyclic covers belong to sl".into()))
        }
    };
    Ok(report)
}

/// sl: the flag comes off the dual partition in one stroke; the base object
/// is a product of rectangular-orbit covers divided by the kernel group.
fn build_sl(orbit: &OrbitId, cover: &CoverSpec) -> Result<TerminalizationReport> {
    let e = match cover.kind {
        CoverKind::CyclicSl { e } => e,
        _ => return Err(Error::InvalidCover("sl covers are the cyclic ones".into())),
    };
    let sb = sl_block_step(orbit, e)?;
    let chain = InductionChain {
        steps: sb.steps.clone(),
        flag_type: sb.flag_type.clone(),
    };
    let base = sb.steps[0].target.clone();

    let covering_group = if e == 1 {
        CoveringGroupDescriptor::trivial()
    } else if sb.blocks == [1] {
        CoveringGroupDescriptor::s_zf(e, sb.f)
    } else {
        let mut expanded = Vec::new();
        for &i_alpha in &sb.blocks {
            for _ in 0..sb.f {
                expanded.push(i_alpha);
            }
        }
        CoveringGroupDescriptor::kernel_h(expanded, e)
    };

    let single_factor = sb.blocks.len() == 1 && sb.f == 1;
    let q_factorial = if e == 1 || single_factor {
        QFactorialVerdict::Yes
    } else {
        QFactorialVerdict::ViaConstruction
    };
    let terminal = if e == 1 {
        TerminalityVerdict {
            status: crate::local_geometry::TerminalityStatus::TerminalCodimGe4,
            reason: "the flag bundle over zero orbits is smooth".into(),
        }
    } else {
        TerminalityVerdict {
            status: crate::local_geometry::TerminalityStatus::TerminalCodimGe4,
            reason: "universal covers of rectangular orbit closures are terminal and the kernel group fixes only loci of codimension >= 4".into(),
        }
    };
    let crepant = if e == 1 {
        CrepantReport::new(
            CrepantVerdict::Yes,
            "the dual-partition flag bundle resolves the normalization",
        )
    } else if orbit.partition.pairs() == [(2, 1)] && e == 2 {
        CrepantReport::new(CrepantVerdict::Yes, "the double cover of the sl(2) cone is the affine plane")
    } else {
        CrepantReport::new(
            CrepantVerdict::No,
            "every terminalization of a nontrivial cyclic cover of an sl orbit closure is singular",
        )
    };

    Ok(TerminalizationReport {
        orbit: orbit.clone(),
        cover: *cover,
        flag_type: sb.flag_type.clone(),
        levi_blocks: sb.levi_blocks.clone(),
        base,
        base_cover: BaseCover::ProductModH,
        covering_group,
        degrees: DegreeLedger {
            cover_degree: e,
            springer_total: 1,
            base_cover_degree: e,
        },
        q_factorial,
        terminal,
        crepant,
        chain,
    })
}

fn crepant_for_single_base(base: &OrbitId, _bc: BaseCover) -> CrepantReport {
    if base.is_zero_orbit() {
        return CrepantReport::new(
            CrepantVerdict::Yes,
            "the base closure is a point, so the flag bundle is smooth",
        );
    }
    if base.algebra == Algebra::Sp && base.partition.pairs() == [(2, 1)] {
        return CrepantReport::new(
            CrepantVerdict::Yes,
            "the universal cover of the sp(2) cone is the affine plane",
        );
    }
    CrepantReport::new(
        CrepantVerdict::Unknown,
        "smoothness of the base cover is not settled",
    )
}

fn crepant_for_rather_odd(base: &OrbitId, block_sizes: &[u64]) -> CrepantReport {
    let k = block_sizes.len();
    let tail_smooth = base.is_zero_orbit();
    if k == 0 {
        return if tail_smooth {
            CrepantReport::new(CrepantVerdict::Yes, "the closure is a point")
        } else {
            CrepantReport::new(
                CrepantVerdict::Unknown,
                "smoothness of the cover itself is not settled",
            )
        };
    }
    if k == 1 && block_sizes[0] == 1 && tail_smooth {
        // (plane x two points) / diagonal sign = plane
        return CrepantReport::new(
            CrepantVerdict::Yes,
            "one plane factor and a point tail: the kernel quotient is a smooth plane",
        );
    }
    CrepantReport::new(
        CrepantVerdict::Unknown,
        "smoothness of the quotient of the factor covers is not settled",
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::topology::cover_menu;

    fn orbit(alg: Algebra, s: &str) -> OrbitId {
        OrbitId::new(alg, Partition::parse_text(s).unwrap())
    }

    fn part(s: &str) -> Partition {
        Partition::parse_text(s).unwrap()
    }

    fn build_universal(alg: Algebra, s: &str) -> TerminalizationReport {
        let o = orbit(alg, s);
        let cover = cover_menu(&o).unwrap()[0];
        build(&o, &cover, &Strategy::Canonical).unwrap()
    }

    #[test]
    fn sp_chain_with_both_stages() {
        let r = build_universal(Algebra::Sp, "6^2,4^2");
        let kinds: Vec<(StepKind, u64)> = r.chain.steps.iter().map(|s| (s.kind, s.pivot)).collect();
        assert_eq!(
            kinds,
            vec![(StepKind::TypeI, 4), (StepKind::TypeII, 4), (StepKind::TypeII, 2)]
        );
        assert_eq!(r.flag_type, vec![4, 1, 3, 4, 3, 1, 4]);
        assert_eq!(r.base.partition, part("1^4"));
        assert_eq!(r.degree_ledger(), (4, 4, 1));
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
    }

    #[test]
    fn sp_chain_stage_one_only() {
        let r = build_universal(Algebra::Sp, "8,5^2,4,3^2");
        assert_eq!(r.flag_type, vec![1, 6, 14, 6, 1]);
        assert_eq!(r.base.partition, part("4,3^2,2,1^2"));
        assert!(r.base.conditions().all());
        assert_eq!(r.q_factorial, QFactorialVerdict::Yes);
        assert_eq!(r.degree_ledger(), (4, 1, 4));
    }

    #[test]
    fn sp_regular_orbit() {
        let r = build_universal(Algebra::Sp, "6");
        assert_eq!(r.flag_type, vec![1, 1, 2, 1, 1]);
        assert_eq!(r.base.partition, part("2"));
        assert_eq!(r.base.size, 2);
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
    }

    #[test]
    fn so_rather_odd_double_chain() {
        let r = build_universal(Algebra::So, "15,8^2,3");
        assert_eq!(r.flag_type, vec![2, 6, 18, 6, 2]);
        assert_eq!(
            r.levi_blocks,
            vec![(2, part("2")), (6, part("2^3"))]
        );
        assert_eq!(r.base.partition, part("7,4^2,3"));
        assert_eq!(r.base_cover, BaseCover::ProductModH);
        assert_eq!(r.covering_group, CoveringGroupDescriptor::sum_kernel_2(2));
        assert_eq!(r.covering_group.order, 4);
        assert_eq!(r.degree_ledger(), (4, 1, 4));
        assert_eq!(r.q_factorial, QFactorialVerdict::ViaConstruction);
    }

    #[test]
    fn so_two_stage_case_one() {
        let r = build_universal(Algebra::So, "11^3,3^2,1");
        assert_eq!(r.flag_type, vec![3, 3, 3, 4, 14, 4, 3, 3, 3]);
        assert_eq!(r.base.partition, part("3^3,2^2,1"));
        assert_eq!(r.base_cover, BaseCover::UniversalCover);
        assert_eq!(r.degree_ledger(), (4, 2, 2));
    }

    #[test]
    fn so_two_stage_case_two() {
        let r = build_universal(Algebra::So, "13^2,3,1");
        assert_eq!(r.flag_type, vec![2, 2, 2, 2, 1, 12, 1, 2, 2, 2, 2]);
        assert_eq!(r.base.partition, part("4^2,3,1"));
        assert_eq!(r.base_cover, BaseCover::YCover);
        assert_eq!(r.degree_ledger(), (4, 2, 2));
    }

    #[test]
    fn sl_double_cover_of_the_cone() {
        let o = orbit(Algebra::Sl, "4");
        let r = build(&o, &CoverSpec::cyclic_sl(2), &Strategy::Canonical).unwrap();
        assert_eq!(r.flag_type, vec![2, 2]);
        assert_eq!(r.covering_group, CoveringGroupDescriptor::s_zf(2, 2));
        assert_eq!(r.covering_group.order, 2);
        assert_eq!(r.crepant.verdict, CrepantVerdict::No);

        let o = orbit(Algebra::Sl, "2");
        let r = build(&o, &CoverSpec::cyclic_sl(2), &Strategy::Canonical).unwrap();
        assert_eq!(r.flag_type, vec![2]);
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
        assert_eq!(r.base.partition, part("2"));
    }

    #[test]
    fn sl_composite_universal() {
        let o = orbit(Algebra::Sl, "9,6");
        let r = build(&o, &CoverSpec::cyclic_sl(3), &Strategy::Canonical).unwrap();
        assert_eq!(r.flag_type, vec![6, 6, 3]);
        assert_eq!(
            r.covering_group,
            CoveringGroupDescriptor::kernel_h(vec![2, 2, 1], 3)
        );
        assert_eq!(r.covering_group.order, 36);
        assert_eq!(r.degree_ledger(), (3, 1, 3));
        assert_eq!(r.crepant.verdict, CrepantVerdict::No);

        // trivial cover: flag = the dual partition, crepant resolution
        let r = build(&o, &CoverSpec::cyclic_sl(1), &Strategy::Canonical).unwrap();
        assert_eq!(r.flag_type, vec![2, 2, 2, 2, 2, 2, 1, 1, 1]);
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
    }

    #[test]
    fn y_cover_build_for_rather_odd() {
        let o = orbit(Algebra::So, "15,8^2,3");
        let y = cover_menu(&o).unwrap()[1];
        assert_eq!(y.kind, CoverKind::YCoverSo);
        let r = build(&o, &y, &Strategy::Canonical).unwrap();
        assert_eq!(r.base_cover, BaseCover::YCover);
        assert_eq!(r.degree_ledger(), (2, 1, 2));
        assert_eq!(r.covering_group, CoveringGroupDescriptor::trivial());
        // same flag as the universal construction
        assert_eq!(r.flag_type, vec![2, 6, 18, 6, 2]);

        // but not offered for a partition that is not rather odd
        let o = orbit(Algebra::So, "13^2,3,1");
        assert_eq!(cover_menu(&o).unwrap().len(), 1);
        assert!(build(&o, &CoverSpec::y_cover(2), &Strategy::Canonical).is_err());
    }

    #[test]
    fn explicit_strategy_reproduces_canonical_and_rejects_bad_chains() {
        let o = orbit(Algebra::Sp, "6^2,4^2");
        let cover = cover_menu(&o).unwrap()[0];
        let explicit = Strategy::Explicit(vec![
            ExplicitStep { kind: StepKind::TypeI, pivot: 4 },
            ExplicitStep { kind: StepKind::TypeII, pivot: 4 },
            ExplicitStep { kind: StepKind::TypeII, pivot: 2 },
        ]);
        let r = build(&o, &cover, &explicit).unwrap();
        assert_eq!(r.flag_type, vec![4, 1, 3, 4, 3, 1, 4]);

        // a count-collapsing type I is refused
        let bad = Strategy::Explicit(vec![ExplicitStep { kind: StepKind::TypeI, pivot: 6 }]);
        assert!(matches!(
            build(&o, &cover, &bad),
            Err(Error::StrategyStuck { .. })
        ));

        // stopping early is refused
        let incomplete = Strategy::Explicit(vec![ExplicitStep { kind: StepKind::TypeI, pivot: 4 }]);
        assert!(matches!(
            build(&o, &cover, &incomplete),
            Err(Error::StrategyStuck { .. })
        ));
    }

    #[test]
    fn canonical_pivot_examples() {
        // merging 6 onto 4 would drop b, so stage 1 picks 4
        let o = orbit(Algebra::Sp, "6^2,4^2");
        assert_eq!(canonical_pivot(StageKind::TypeIStage, &o), Some(4));
        // both gaps preserve b: take the largest
        let o = orbit(Algebra::Sp, "8,5^2,4,3^2");
        assert_eq!(canonical_pivot(StageKind::TypeIStage, &o), Some(8));
        // the long gap at 11 is blocked by r_8 != 0, so 8 is the pivot
        let o = orbit(Algebra::So, "11,8^2,3");
        assert_eq!(canonical_pivot(StageKind::DoubleStage, &o), Some(8));
        // largest multiplicity-2 member of the pivot parity
        let o = orbit(Algebra::Sp, "4^2,2^2");
        assert_eq!(canonical_pivot(StageKind::TypeIIStage, &o), Some(4));
    }

    #[test]
    fn zero_orbits_build_trivially() {
        let r = build_universal(Algebra::Sp, "1^4");
        assert!(r.chain.steps.is_empty());
        assert_eq!(r.flag_type, vec![4]);
        assert_eq!(r.degree_ledger(), (1, 1, 1));
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);

        let r = build_universal(Algebra::So, "1^3");
        assert_eq!(r.degree_ledger(), (1, 1, 1));

        // [1^2] alone carries a forced degenerate step into the empty base
        let r = build_universal(Algebra::So, "1^2");
        assert_eq!(r.degree_ledger(), (1, 1, 1));
        assert!(r.base.partition.is_empty());
        assert_eq!(r.flag_type, vec![1, 1]);
    }
}
