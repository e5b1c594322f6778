//! Stable JSON schema (version 1) and text rendering for terminalization
//! reports.
//!
//! Chain steps serialize with their pivot, block, target partition and
//! Springer degree; the source orbit of each step is reconstructed on read
//! (it is the previous target, or the analyzed orbit for the first step), so
//! a report survives `parse(render(r)) == r`.

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::builder::{
    BaseCover, CoveringGroupDescriptor, CrepantReport, DegreeLedger, TerminalizationReport,
};
use crate::error::{Error, Result};
use crate::induction::{tracked_count, InductionChain, InductionStep, StepKind};
use crate::local_geometry::{Codim2Locus, CoverFiber, TerminalityVerdict};
use crate::partition::{Algebra, ConditionReport, OrbitId, Partition, VeryEvenLabel};
use crate::topology::{CoverSpec, FiniteGroupDescriptor, GroupKind, QFactorialVerdict};

pub const REPORT_SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Deserialize)]
struct StepDto {
    kind: StepKind,
    pivot: u64,
    block: u64,
    target: Partition,
    springer_degree: u64,
}

#[derive(Serialize, Deserialize)]
struct ChainDto {
    steps: Vec<StepDto>,
    flag_type: Vec<u64>,
}

#[derive(Serialize, Deserialize)]
struct ReportDto {
    schema: u32,
    orbit: OrbitId,
    cover: CoverSpec,
    chain: ChainDto,
    flag_type: Vec<u64>,
    levi_blocks: Vec<(u64, Partition)>,
    base: OrbitId,
    base_cover: BaseCover,
    covering_group: CoveringGroupDescriptor,
    degrees: DegreeLedger,
    q_factorial: QFactorialVerdict,
    terminal: TerminalityVerdict,
    crepant: CrepantReport,
}

impl From<&TerminalizationReport> for ReportDto {
    fn from(r: &TerminalizationReport) -> Self {
        ReportDto {
            schema: REPORT_SCHEMA_VERSION,
            orbit: r.orbit.clone(),
            cover: r.cover,
            chain: ChainDto {
                steps: r
                    .chain
                    .steps
                    .iter()
                    .map(|s| StepDto {
                        kind: s.kind,
                        pivot: s.pivot,
                        block: s.block,
                        target: s.target.partition.clone(),
                        springer_degree: s.springer_degree,
                    })
                    .collect(),
                flag_type: r.chain.flag_type.clone(),
            },
            flag_type: r.flag_type.clone(),
            levi_blocks: r.levi_blocks.clone(),
            base: r.base.clone(),
            base_cover: r.base_cover,
            covering_group: r.covering_group.clone(),
            degrees: r.degrees,
            q_factorial: r.q_factorial,
            terminal: r.terminal.clone(),
            crepant: r.crepant.clone(),
        }
    }
}

fn rebuild_step(dto: &StepDto, source: &OrbitId) -> InductionStep {
    let algebra = match dto.kind {
        StepKind::SlBlock => Algebra::Sl,
        _ => source.algebra,
    };
    let mut target = OrbitId::new(algebra, dto.target.clone());
    if algebra == Algebra::So && !target.partition.is_empty() && target.partition.is_very_even() {
        target = target
            .with_label(VeryEvenLabel::Induced)
            .expect("very even so-orbit");
    }
    let preserves_count =
        tracked_count(algebra, &source.partition) == tracked_count(algebra, &target.partition);
    InductionStep {
        kind: dto.kind,
        pivot: dto.pivot,
        block: dto.block,
        source: source.clone(),
        target,
        springer_degree: dto.springer_degree,
        preserves_count,
    }
}

impl ReportDto {
    fn into_report(self) -> Result<TerminalizationReport> {
        if self.schema != REPORT_SCHEMA_VERSION {
            return Err(Error::InvalidPartition(format!(
                "unsupported report schema {}",
                self.schema
            )));
        }
        let mut steps = Vec::with_capacity(self.chain.steps.len());
        let mut cursor = self.orbit.clone();
        for dto in &self.chain.steps {
            let step = rebuild_step(dto, &cursor);
            // sl blocks all hang off the analyzed orbit; sp/so steps chain
            if dto.kind != StepKind::SlBlock {
                cursor = step.target.clone();
            }
            steps.push(step);
        }
        Ok(TerminalizationReport {
            orbit: self.orbit,
            cover: self.cover,
            chain: InductionChain {
                steps,
                flag_type: self.chain.flag_type,
            },
            flag_type: self.flag_type,
            levi_blocks: self.levi_blocks,
            base: self.base,
            base_cover: self.base_cover,
            covering_group: self.covering_group,
            degrees: self.degrees,
            q_factorial: self.q_factorial,
            terminal: self.terminal,
            crepant: self.crepant,
        })
    }
}

pub fn report_to_json(report: &TerminalizationReport) -> Value {
    serde_json::to_value(ReportDto::from(report)).expect("report serializes")
}

pub fn report_from_json_str(s: &str) -> Result<TerminalizationReport> {
    let dto: ReportDto = serde_json::from_str(s)
        .map_err(|e| Error::InvalidPartition(format!("bad report JSON: {e}")))?;
    dto.into_report()
}

pub fn report_from_json(v: Value) -> Result<TerminalizationReport> {
    let dto: ReportDto = serde_json::from_value(v)
        .map_err(|e| Error::InvalidPartition(format!("bad report JSON: {e}")))?;
    dto.into_report()
}

/// Everything `analyze` prints: the report plus the orbit-level context.
#[derive(Serialize)]
pub struct AnalysisEnvelope {
    pub report: Value,
    pub fundamental_group: FiniteGroupDescriptor,
    /// Shape of the reductive centralizer the component group is read from.
    pub centralizer: String,
    pub conditions: ConditionReport,
    /// Present when the slice classification applies to this orbit.
    pub codim2_loci: Option<Vec<Codim2Locus>>,
    /// Sheet counts of the chosen cover over each locus, when classified.
    pub cover_fibers: Option<Vec<FiberLine>>,
}

#[derive(Serialize)]
pub struct FiberLine {
    pub gap: u64,
    pub copies: u64,
    pub local_model: String,
}

pub fn group_text(g: &FiniteGroupDescriptor) -> String {
    match g.kind {
        GroupKind::Cyclic(n) => format!("Z/{n} (order {})", g.order),
        GroupKind::ElemAbelian2(k) => format!("(Z/2)^{k} (order {})", g.order),
        GroupKind::CentralExtBy2(k) => format!(
            "central extension of (Z/2)^{k} by Z/2 (order {})",
            g.order
        ),
    }
}

fn covering_group_text(g: &CoveringGroupDescriptor) -> String {
    use crate::builder::CoveringGroupKind::*;
    match &g.kind {
        TrivialGroup => "trivial".into(),
        SZf { e, f } => format!("norm-one tuples of {f} cyclic factors of order {e}"),
        KernelH { blocks, e } => format!(
            "kernel of the product-of-powers character on blocks {blocks:?} (order-{e} roots)"
        ),
        SumKernel2 { k } => format!("kernel of the sum character (Z/2)^{} -> Z/2", k + 1),
    }
}

fn yesno(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn join(xs: &[u64]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Plain-text rendering of an analysis; carries the same numbers as the
/// JSON form.
pub fn render_text(
    report: &TerminalizationReport,
    group: &FiniteGroupDescriptor,
    conds: &ConditionReport,
    loci: Option<&[(Codim2Locus, Option<CoverFiber>)]>,
) -> String {
    let mut out = String::new();
    let mut line = |s: String| {
        out.push_str(&s);
        out.push('\n');
    };

    line(format!("orbit:             {}", report.orbit));
    line(format!("fundamental group: {}", group_text(group)));
    line(format!(
        "centralizer:       {}",
        crate::topology::centralizer_note(&report.orbit)
    ));
    let witnesses = if conds.witnesses.is_empty() {
        String::new()
    } else {
        format!(
            "; witnesses: {}",
            conds
                .witnesses
                .iter()
                .map(|(c, v)| format!("({c:?}) {v}"))
                .collect::<Vec<_>>()
                .join(", ")
        )
    };
    line(format!(
        "conditions:        (i) {}  (ii) {}  (iii) {}{}",
        yesno(conds.cond_i),
        yesno(conds.cond_ii),
        yesno(conds.cond_iii),
        witnesses
    ));
    line(format!("cover:             {}", report.cover));
    line(String::new());

    if report.chain.steps.is_empty() {
        line("induction chain:   (none: the orbit itself is a terminal base)".into());
    } else {
        line("induction chain:".into());
        for (i, s) in report.chain.steps.iter().enumerate() {
            let kind = match s.kind {
                StepKind::TypeI => "type I",
                StepKind::TypeII => "type II",
                StepKind::DoubleTypeI => "double type I",
                StepKind::SlBlock => "sl block",
            };
            // block convention for type II spelled out: 1 + number of parts
            // strictly above the pivot
            let note = match s.kind {
                StepKind::TypeII => " [block = 1 + #parts above the pivot]",
                _ => "",
            };
            line(format!(
                "  {}. {kind} at {}: {} -> {}   (block {}, springer degree {}){note}",
                i + 1,
                s.pivot,
                s.source,
                s.target,
                s.block,
                s.springer_degree
            ));
        }
    }
    line(format!("flag type:         ({})", join(&report.flag_type)));
    if report.orbit.algebra == crate::partition::Algebra::So {
        line(
            "parabolic:         preimage in the spin group of the isotropic-flag stabilizer"
                .into(),
        );
    }
    if !report.levi_blocks.is_empty() {
        line(format!(
            "levi blocks:       {}",
            report
                .levi_blocks
                .iter()
                .map(|(w, p)| format!("{w}:[{p}]"))
                .collect::<Vec<_>>()
                .join("  ")
        ));
    }
    line(format!("base orbit:        {}", report.base));
    let bc = match report.base_cover {
        BaseCover::UniversalCover => "universal cover of the base",
        BaseCover::YCover => "quotient (Y) cover of the base",
        BaseCover::ProductModH => "product of factor covers mod the kernel group",
    };
    line(format!(
        "base cover:        {} (degree {})",
        bc, report.degrees.base_cover_degree
    ));
    line(format!(
        "covering group:    {} (order {})",
        covering_group_text(&report.covering_group),
        report.covering_group.order
    ));
    line(format!(
        "degree ledger:     cover {} = springer {} x base {}",
        report.degrees.cover_degree,
        report.degrees.springer_total,
        report.degrees.base_cover_degree
    ));
    let qf = match report.q_factorial {
        QFactorialVerdict::Yes => "yes",
        QFactorialVerdict::ViaConstruction => "via construction",
        QFactorialVerdict::Unknown => "unknown",
    };
    line(format!("q-factorial:       {qf}"));
    let term = match report.terminal.status {
        crate::local_geometry::TerminalityStatus::TerminalCodimGe4 => {
            "terminal (singular locus in codimension >= 4)"
        }
        crate::local_geometry::TerminalityStatus::NotAsserted => "not asserted",
    };
    line(format!(
        "terminal:          {} -- {}",
        term, report.terminal.reason
    ));
    let crep = match report.crepant.verdict {
        crate::builder::CrepantVerdict::Yes => "yes",
        crate::builder::CrepantVerdict::No => "no",
        crate::builder::CrepantVerdict::Unknown => "unknown",
    };
    line(format!(
        "crepant:           {} -- {}",
        crep, report.crepant.reason
    ));

    match loci {
        None => line("codim-2 loci:      (not classified under these hypotheses)".into()),
        Some([]) => {
            line("codim-2 loci:      none (no gap members)".into());
        }
        Some(ls) => {
            line("codim-2 loci:".into());
            for (l, fiber) in ls {
                let fiber_txt = match fiber {
                    Some(f) => format!(", fiber {} x {}", f.copies, f.local_model.text()),
                    None => String::new(),
                };
                let split = if l.very_even_split {
                    " (very even: both labelled orbits)"
                } else {
                    ""
                };
                line(format!(
                    "  gap {}: degeneration [{}], slice {}{}{}",
                    l.gap_member,
                    l.degeneration,
                    serde_json::to_value(l.slice)
                        .ok()
                        .and_then(|v| v.as_str().map(String::from))
                        .unwrap_or_default(),
                    fiber_txt,
                    split
                ));
            }
        }
    }
    out
}
