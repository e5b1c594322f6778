//! Single induction steps: the exact partition rewrites realizing an orbit
//! as induced from a smaller Levi orbit, together with the flag block each
//! step contributes and the generic degree of the associated generalized
//! Springer map.
//!
//! Three rewrites cover sp and so:
//!
//! * type I, at a gap member `i`: parts `>= i` drop by 2 and merge into the
//!   `i - 2` slot; block `r = r_d + ... + r_i`; always birational.
//! * type II, at a member `i` of multiplicity 2 (even `i` for sp, odd for
//!   so): parts `> i` drop by 2 and the pair `i^2` becomes `(i-1)^2`;
//!   block `r = 1 + sum_{j > i} r_j`; generically of degree 2, except in so
//!   when the target is very even or the step consumes the whole space.
//! * double type I (so, rather odd), at a long gap: parts `>= i` drop by 4;
//!   block `s = r_d + ... + r_i` enters the flag as `2s` and carries the
//!   rectangular gl-orbit `[2^s]`; birational.
//!
//! For sl there is no chain: the flag is read off the dual partition in one
//! stroke ([`sl_block_step`]).

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{Algebra, OrbitId, Partition, VeryEvenLabel};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StepKind {
    #[serde(rename = "type_i")]
    TypeI,
    #[serde(rename = "type_ii")]
    TypeII,
    #[serde(rename = "double_type_i")]
    DoubleTypeI,
    #[serde(rename = "sl_block")]
    SlBlock,
}

/// One parabolic induction step `source <- target`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionStep {
    pub kind: StepKind,
    /// The member of the source partition the rewrite is anchored at.
    pub pivot: u64,
    /// Flag block contributed by the step: `r` for type I/II, `s` for a
    /// double step (the flag block is `2s`), `i_alpha * e` for an sl block.
    pub block: u64,
    pub source: OrbitId,
    pub target: OrbitId,
    /// Generic degree of the generalized Springer map of this step (1 or 2).
    pub springer_degree: u64,
    /// Whether the step keeps the tracked member count (distinct even
    /// members for sp, distinct odd members for so) unchanged.
    pub preserves_count: bool,
}

impl InductionStep {
    /// Width the step consumes from the ambient space: `2 * flag_block`.
    pub fn flag_block(&self) -> u64 {
        match self.kind {
            StepKind::DoubleTypeI => 2 * self.block,
            _ => self.block,
        }
    }
}

/// The count the canonical strategy must preserve through stage-1 steps.
pub fn tracked_count(algebra: Algebra, p: &Partition) -> u64 {
    match algebra {
        Algebra::Sp => p.count_even(),
        Algebra::So => p.count_odd(),
        Algebra::Sl => 0,
    }
}

fn make_target(algebra: Algebra, partition: Partition) -> OrbitId {
    let very_even = algebra == Algebra::So && !partition.is_empty() && partition.is_very_even();
    let orbit = OrbitId::new(algebra, partition);
    if very_even {
        // which of the two labelled orbits is induced is not computed
        orbit.with_label(VeryEvenLabel::Induced).expect("very even so-orbit")
    } else {
        orbit
    }
}

fn require_sp_so(orbit: &OrbitId, what: &str) -> Result<()> {
    if orbit.algebra == Algebra::Sl {
        return Err(Error::InvalidPivot(format!(
            "{what} induction applies to sp and so orbits only"
        )));
    }
    orbit.ensure_valid()
}

/// Type I induction at a gap member.
pub fn induce_type_i(orbit: &OrbitId, gap: u64) -> Result<InductionStep> {
    require_sp_so(orbit, "type I")?;
    let p = &orbit.partition;
    if !p.gap_members().contains(&gap) {
        return Err(Error::InvalidPivot(format!(
            "{gap} is not a gap member of [{p}]"
        )));
    }
    let block: u64 = p
        .pairs()
        .iter()
        .filter(|&&(v, _)| v >= gap)
        .map(|&(_, m)| m)
        .sum();
    let target = Partition::from_value_mults(
        p.pairs()
            .iter()
            .map(|&(v, m)| if v >= gap { (v - 2, m) } else { (v, m) }),
    );
    debug_assert_eq!(target.sum() + 2 * block, p.sum());
    let preserves_count =
        tracked_count(orbit.algebra, &target) == tracked_count(orbit.algebra, p);
    Ok(InductionStep {
        kind: StepKind::TypeI,
        pivot: gap,
        block,
        source: orbit.clone(),
        target: make_target(orbit.algebra, target),
        springer_degree: 1,
        preserves_count,
    })
}

/// Type II induction at a member of multiplicity exactly 2, even for sp and
/// odd for so.
pub fn induce_type_ii(orbit: &OrbitId, pivot: u64) -> Result<InductionStep> {
    require_sp_so(orbit, "type II")?;
    let p = &orbit.partition;
    let want_parity = match orbit.algebra {
        Algebra::Sp => 0,
        Algebra::So => 1,
        Algebra::Sl => unreachable!(),
    };
    if pivot % 2 != want_parity {
        return Err(Error::InvalidPivot(format!(
            "type II pivot must be {} for {}",
            if want_parity == 0 { "even" } else { "odd" },
            orbit.algebra
        )));
    }
    if p.multiplicity(pivot) != 2 {
        return Err(Error::InvalidPivot(format!(
            "type II pivot {pivot} must have multiplicity exactly 2 in [{p}]"
        )));
    }
    let block: u64 = 1 + p
        .pairs()
        .iter()
        .filter(|&&(v, _)| v > pivot)
        .map(|&(_, m)| m)
        .sum::<u64>();
    // parts > pivot shift down by 2, the pair pivot^2 becomes (pivot-1)^2;
    // both merges (onto pivot-1 from above, onto existing pivot-1 and below)
    // are handled by the grouping constructor
    let target = Partition::from_value_mults(
        p.pairs()
            .iter()
            .map(|&(v, m)| {
                if v > pivot {
                    (v - 2, m)
                } else if v == pivot {
                    (pivot - 1, 2)
                } else {
                    (v, m)
                }
            }),
    );
    debug_assert_eq!(target.sum() + 2 * block, p.sum());
    let springer_degree = match orbit.algebra {
        Algebra::Sp => 2,
        // so: birational when the target is very even (the second labelled
        // orbit absorbs the other flag) or when the flag swallows the whole
        // space (m = 2r)
        Algebra::So => {
            if (target.is_very_even() && !target.is_empty()) || p.sum() == 2 * block {
                1
            } else {
                2
            }
        }
        Algebra::Sl => unreachable!(),
    };
    let preserves_count =
        tracked_count(orbit.algebra, &target) == tracked_count(orbit.algebra, p);
    Ok(InductionStep {
        kind: StepKind::TypeII,
        pivot,
        block,
        source: orbit.clone(),
        target: make_target(orbit.algebra, target),
        springer_degree,
        preserves_count,
    })
}

/// Is `gap` a long gap at which a double type I step applies? Odd gaps need
/// `i >= 5` and four empty slots below; even gaps need `i >= 4` and three.
pub fn double_eligible(p: &Partition, gap: u64) -> bool {
    if !p.is_member(gap) || p.multiplicity(gap.wrapping_sub(1)) != 0 {
        return false;
    }
    if gap % 2 == 1 {
        gap >= 5 && (1..=4).all(|k| p.multiplicity(gap - k) == 0)
    } else {
        gap >= 4 && (1..=3).all(|k| p.multiplicity(gap - k) == 0)
    }
}

/// Double type I induction (so, rather odd) at a long gap member.
pub fn induce_double_type_i(orbit: &OrbitId, gap: u64) -> Result<InductionStep> {
    orbit.ensure_valid()?;
    if orbit.algebra != Algebra::So {
        return Err(Error::InvalidPivot(
            "double type I induction applies to so orbits only".into(),
        ));
    }
    let p = &orbit.partition;
    if !double_eligible(p, gap) {
        return Err(Error::InvalidPivot(format!(
            "{gap} is not an eligible long gap of [{p}]"
        )));
    }
    let block: u64 = p
        .pairs()
        .iter()
        .filter(|&&(v, _)| v >= gap)
        .map(|&(_, m)| m)
        .sum();
    let target = Partition::from_value_mults(
        p.pairs()
            .iter()
            .map(|&(v, m)| if v >= gap { (v - 4, m) } else { (v, m) }),
    );
    debug_assert_eq!(target.sum() + 4 * block, p.sum());
    let preserves_count = tracked_count(Algebra::So, &target) == tracked_count(Algebra::So, p);
    Ok(InductionStep {
        kind: StepKind::DoubleTypeI,
        pivot: gap,
        block,
        source: orbit.clone(),
        target: make_target(Algebra::So, target),
        springer_degree: 1,
        preserves_count,
    })
}

/// Flag and Levi data of the one-stroke sl construction for a cover of
/// degree `e`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SlBlockChain {
    /// Flag type: each block value `i_alpha * e`, repeated `f` times,
    /// descending. Not palindromic in general.
    pub flag_type: Vec<u64>,
    /// One entry per flag block: `(block size, gl-orbit [e^{i_alpha}])`.
    pub levi_blocks: Vec<(u64, Partition)>,
    /// Steps mirroring the blocks, for uniform chain reporting.
    pub steps: Vec<InductionStep>,
    pub d: u64,
    pub e: u64,
    pub f: u64,
    pub blocks: Vec<u64>,
}

/// Build the parabolic flag and Levi orbits realizing the degree-`e` cover
/// of an sl orbit closure: block values come from the dual partition, each
/// carrying the rectangular orbit `[e^{i_alpha}]` whose cover is the factor
/// of the product construction.
pub fn sl_block_step(orbit: &OrbitId, e: u64) -> Result<SlBlockChain> {
    if orbit.algebra != Algebra::Sl {
        return Err(Error::InvalidCoverDegree(
            "block construction applies to sl orbits only".into(),
        ));
    }
    orbit.ensure_valid()?;
    let sb = orbit.partition.sl_block_decomposition(e)?;
    let mut flag_type = Vec::new();
    let mut levi_blocks = Vec::new();
    let mut steps = Vec::new();
    for &i_alpha in &sb.blocks {
        for _ in 0..sb.f {
            let width = i_alpha * sb.e;
            let levi = Partition::from_value_mults([(sb.e, i_alpha)]);
            flag_type.push(width);
            levi_blocks.push((width, levi.clone()));
            steps.push(InductionStep {
                kind: StepKind::SlBlock,
                pivot: i_alpha,
                block: width,
                source: orbit.clone(),
                target: OrbitId::new(Algebra::Sl, levi),
                // birational onto the normalization
                springer_degree: 1,
                preserves_count: true,
            });
        }
    }
    debug_assert_eq!(flag_type.iter().sum::<u64>(), orbit.size);
    Ok(SlBlockChain {
        flag_type,
        levi_blocks,
        steps,
        d: sb.d,
        e: sb.e,
        f: sb.f,
        blocks: sb.blocks,
    })
}

/// A completed nest of induction steps, outermost first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InductionChain {
    pub steps: Vec<InductionStep>,
    /// For sp/so: the palindrome `(b_1, ..., b_k, q, b_k, ..., b_1)` with
    /// `b_j` the step flag blocks and `q` the terminal algebra size (omitted
    /// when zero). For sl: the block flag, unmirrored.
    pub flag_type: Vec<u64>,
}

impl InductionChain {
    /// Assemble the two-sided flag for an sp/so chain ending at size `q`.
    pub fn palindromic(steps: Vec<InductionStep>, q: u64) -> Self {
        let blocks: Vec<u64> = steps.iter().map(|s| s.flag_block()).collect();
        let mut flag_type = blocks.clone();
        if q > 0 {
            flag_type.push(q);
        }
        flag_type.extend(blocks.iter().rev());
        InductionChain { steps, flag_type }
    }

    pub fn is_palindrome(&self) -> bool {
        let n = self.flag_type.len();
        (0..n / 2).all(|i| self.flag_type[i] == self.flag_type[n - 1 - i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn sp(s: &str) -> OrbitId {
        OrbitId::new(Algebra::Sp, Partition::parse_text(s).unwrap())
    }

    fn so(s: &str) -> OrbitId {
        OrbitId::new(Algebra::So, Partition::parse_text(s).unwrap())
    }

    fn sl(s: &str) -> OrbitId {
        OrbitId::new(Algebra::Sl, Partition::parse_text(s).unwrap())
    }

    fn part(s: &str) -> Partition {
        Partition::parse_text(s).unwrap()
    }

    #[test]
    fn type_i_examples() {
        let s = induce_type_i(&sp("6^2,4^2"), 4).unwrap();
        assert_eq!(s.target.partition, part("4^2,2^2"));
        assert_eq!(s.block, 4);
        assert_eq!(s.springer_degree, 1);
        assert!(s.preserves_count);

        let s = induce_type_i(&sp("8,5^2,4,3^2"), 8).unwrap();
        assert_eq!(s.target.partition, part("6,5^2,4,3^2"));
        assert_eq!(s.block, 1);

        let s = induce_type_i(&so("11^3,3^2,1"), 11).unwrap();
        assert_eq!(s.target.partition, part("9^3,3^2,1"));
        assert_eq!(s.block, 3);

        // merging 6 onto the existing member 4 collapses the even count
        let s = induce_type_i(&sp("6^2,4^2"), 6).unwrap();
        assert_eq!(s.target.partition, part("4^4"));
        assert!(!s.preserves_count);

        assert!(induce_type_i(&sp("6^2,4^2"), 5).is_err());
        assert!(induce_type_i(&sl("4"), 4).is_err());
    }

    #[test]
    fn type_ii_examples() {
        let s = induce_type_ii(&sp("4^2,2^2"), 4).unwrap();
        assert_eq!(s.target.partition, part("3^2,2^2"));
        assert_eq!((s.block, s.springer_degree), (1, 2));

        let s = induce_type_ii(&sp("3^2,2^2"), 2).unwrap();
        assert_eq!(s.target.partition, part("1^4"));
        assert_eq!((s.block, s.springer_degree), (3, 2));

        let s = induce_type_ii(&so("5^2,3,1"), 5).unwrap();
        assert_eq!(s.target.partition, part("4^2,3,1"));
        assert_eq!((s.block, s.springer_degree), (1, 2));

        // so: very even target is birational and gets the induced label
        let s = induce_type_ii(&so("3^2,2^2"), 3).unwrap();
        assert_eq!(s.target.partition, part("2^4"));
        assert_eq!(s.springer_degree, 1);
        assert_eq!(s.target.very_even_label, Some(VeryEvenLabel::Induced));

        // so: the whole space consumed (m = 2r) is birational
        let s = induce_type_ii(&so("2^2,1^2"), 1).unwrap();
        assert!(s.target.partition.is_empty());
        assert_eq!(s.springer_degree, 1);
    }

    #[test]
    fn type_ii_pivot_validation() {
        // wrong parity
        assert!(induce_type_ii(&sp("3^2,2"), 3).is_err());
        assert!(induce_type_ii(&so("4^2,3,1"), 4).is_err());
        // wrong multiplicity
        assert!(induce_type_ii(&sp("4,2"), 4).is_err());
    }

    #[test]
    fn type_ii_decreases_tracked_count_by_one() {
        for (orbit, pivot) in [
            (sp("4^2,2^2"), 4),
            (sp("3^2,2^2"), 2),
            (so("5^2,3,1"), 5),
            (so("5^3,3^2,1"), 3),
        ] {
            let s = induce_type_ii(&orbit, pivot).unwrap();
            assert_eq!(
                tracked_count(orbit.algebra, &s.target.partition) + 1,
                tracked_count(orbit.algebra, &orbit.partition)
            );
        }
    }

    #[test]
    fn double_type_i_examples() {
        let s = induce_double_type_i(&so("15,8^2,3"), 15).unwrap();
        assert_eq!(s.target.partition, part("11,8^2,3"));
        assert_eq!(s.block, 1);
        assert_eq!(s.flag_block(), 2);

        let s = induce_double_type_i(&so("11,8^2,3"), 8).unwrap();
        assert_eq!(s.target.partition, part("7,4^2,3"));
        assert_eq!(s.block, 3);
        assert_eq!(s.flag_block(), 6);

        // no eligible long gap anywhere
        let o = so("7,6^2,3^2");
        for g in o.partition.gap_members() {
            assert!(induce_double_type_i(&o, g).is_err());
        }
    }

    #[test]
    fn sl_block_examples() {
        let c = sl_block_step(&sl("9,6"), 3).unwrap();
        assert_eq!(c.flag_type, vec![6, 6, 3]);
        let levis: Vec<Partition> = c.levi_blocks.iter().map(|(_, p)| p.clone()).collect();
        assert_eq!(levis, vec![part("3^2"), part("3^2"), part("3")]);

        let c = sl_block_step(&sl("4"), 2).unwrap();
        assert_eq!(c.flag_type, vec![2, 2]);
        assert_eq!(c.levi_blocks[0].1, part("2"));
        assert_eq!(c.levi_blocks[1].1, part("2"));

        let c = sl_block_step(&sl("2"), 2).unwrap();
        assert_eq!(c.flag_type, vec![2]);
        assert_eq!(c.levi_blocks[0].1, part("2"));

        assert!(sl_block_step(&sl("9,6"), 2).is_err());
        assert!(sl_block_step(&sp("6^2,4^2"), 2).is_err());
    }

    #[test]
    fn palindromic_flag_assembly() {
        let s1 = induce_type_i(&sp("6^2,4^2"), 4).unwrap();
        let s2 = induce_type_ii(&s1.target, 4).unwrap();
        let s3 = induce_type_ii(&s2.target, 2).unwrap();
        let q = s3.target.size;
        let chain = InductionChain::palindromic(vec![s1, s2, s3], q);
        assert_eq!(chain.flag_type, vec![4, 1, 3, 4, 3, 1, 4]);
        assert!(chain.is_palindrome());
        assert_eq!(chain.flag_type.iter().sum::<u64>(), 20);
    }
}
