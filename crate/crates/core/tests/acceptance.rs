//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (run with `cargo test --test acceptance -- --nocapture` to see them all).
//!
//! Criteria 1-6 pin the fully worked construction on six reference orbits;
//! 7 pins the crepant-resolution census for sl covers; 8 pins the
//! fundamental-group formulas; 9 and 10 run the exhaustive property sweeps.

use std::panic::{catch_unwind, UnwindSafe};
use std::time::{Duration, Instant};

use orbit_covers::builder::{BaseCover, CoveringGroupDescriptor, CrepantVerdict, Strategy};
use orbit_covers::corpus::parse_cover_arg;
use orbit_covers::scan;
use orbit_covers::topology::{CoverSpec, FiniteGroupDescriptor, GroupKind};
use orbit_covers::{
    build, fundamental_group, Algebra, OrbitId, Partition, QFactorialVerdict, StepKind,
    TerminalityStatus, TerminalizationReport,
};

fn criterion<F: FnOnce() + UnwindSafe>(number: u32, what: &str, deadline: Duration, f: F) {
    let start = Instant::now();
    let outcome = catch_unwind(f);
    let elapsed = start.elapsed();
    let within = elapsed <= deadline;
    match (&outcome, within) {
        (Ok(()), true) => println!("ACCEPTANCE {number} {what}: PASS ({elapsed:.2?})"),
        (Ok(()), false) => println!(
            "ACCEPTANCE {number} {what}: FAIL (over the {deadline:.0?} budget: {elapsed:.2?})"
        ),
        (Err(_), _) => println!("ACCEPTANCE {number} {what}: FAIL ({elapsed:.2?})"),
    }
    if let Err(e) = outcome {
        std::panic::resume_unwind(e);
    }
    assert!(
        within,
        "criterion {number} exceeded its {deadline:?} budget: {elapsed:?}"
    );
}

fn orbit(alg: Algebra, text: &str) -> OrbitId {
    OrbitId::new(alg, Partition::parse_text(text).unwrap())
}

fn part(text: &str) -> Partition {
    Partition::parse_text(text).unwrap()
}

fn universal(o: &OrbitId) -> TerminalizationReport {
    let cover = parse_cover_arg(o, "universal").unwrap();
    build(o, &cover, &Strategy::Canonical).unwrap()
}

#[test]
fn acceptance_01_sp20_full_chain() {
    criterion(1, "sp(20) [6^2,4^2] universal", Duration::from_secs(1), || {
        let r = universal(&orbit(Algebra::Sp, "6^2,4^2"));
        let chain: Vec<(StepKind, u64)> =
            r.chain.steps.iter().map(|s| (s.kind, s.pivot)).collect();
        assert_eq!(
            chain,
            vec![
                (StepKind::TypeI, 4),
                (StepKind::TypeII, 4),
                (StepKind::TypeII, 2)
            ]
        );
        assert_eq!(r.flag_type, vec![4, 1, 3, 4, 3, 1, 4]);
        assert_eq!(r.base.partition, part("1^4"));
        assert_eq!(r.degree_ledger(), (4, 4, 1));
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
    });
}

#[test]
fn acceptance_02_sp28_terminal_base() {
    criterion(2, "sp(28) [8,5^2,4,3^2] universal", Duration::from_secs(1), || {
        let r = universal(&orbit(Algebra::Sp, "8,5^2,4,3^2"));
        assert_eq!(r.flag_type, vec![1, 6, 14, 6, 1]);
        assert_eq!(r.base.partition, part("4,3^2,2,1^2"));
        let c = r.base.conditions();
        assert!(c.cond_i && c.cond_ii && c.cond_iii);
        assert_eq!(r.q_factorial, QFactorialVerdict::Yes);
        assert_eq!(r.terminal.status, TerminalityStatus::TerminalCodimGe4);
    });
}

#[test]
fn acceptance_03_so34_double_induction() {
    criterion(3, "so(34) [15,8^2,3] universal", Duration::from_secs(5), || {
        let r = universal(&orbit(Algebra::So, "15,8^2,3"));
        assert_eq!(r.flag_type, vec![2, 6, 18, 6, 2]);
        assert_eq!(r.levi_blocks, vec![(2, part("2")), (6, part("2^3"))]);
        assert_eq!(r.base.partition, part("7,4^2,3"));
        assert_eq!(r.covering_group, CoveringGroupDescriptor::sum_kernel_2(2));
        assert_eq!(r.covering_group.order, 4);
    });
}

#[test]
fn acceptance_04_so40_universal_base_cover() {
    criterion(4, "so(40) [11^3,3^2,1] universal", Duration::from_secs(5), || {
        let r = universal(&orbit(Algebra::So, "11^3,3^2,1"));
        assert_eq!(r.flag_type, vec![3, 3, 3, 4, 14, 4, 3, 3, 3]);
        assert_eq!(r.base.partition, part("3^3,2^2,1"));
        assert_eq!(r.base_cover, BaseCover::UniversalCover);
        assert_eq!(r.degree_ledger(), (4, 2, 2));
    });
}

#[test]
fn acceptance_05_so30_quotient_base_cover() {
    criterion(5, "so(30) [13^2,3,1] universal", Duration::from_secs(5), || {
        let r = universal(&orbit(Algebra::So, "13^2,3,1"));
        assert_eq!(
            r.flag_type,
            vec![2, 2, 2, 2, 1, 12, 1, 2, 2, 2, 2]
        );
        assert_eq!(r.base.partition, part("4^2,3,1"));
        assert_eq!(r.base_cover, BaseCover::YCover);
        assert_eq!(r.degrees.base_cover_degree, 2);
        assert_eq!(r.degree_ledger(), (4, 2, 2));
    });
}

#[test]
fn acceptance_06_sp6_regular_resolution() {
    criterion(6, "sp(6) [6] universal", Duration::from_secs(1), || {
        let r = universal(&orbit(Algebra::Sp, "6"));
        assert_eq!(r.flag_type, vec![1, 1, 2, 1, 1]);
        assert_eq!(r.base.partition, part("2"));
        assert_eq!(r.base.algebra, Algebra::Sp);
        assert_eq!(r.base.size, 2);
        assert_eq!(r.crepant.verdict, CrepantVerdict::Yes);
    });
}

#[test]
fn acceptance_07_sl_crepant_census() {
    criterion(
        7,
        "sl crepant exceptions over n <= 8, e > 1",
        Duration::from_secs(30),
        || {
            let s = scan::suite_sl_crepant(8);
            assert!(s.violations.is_empty(), "{:?}", s.violations);
            assert!(s
                .notes
                .iter()
                .any(|n| n.contains("([2], e=2)")), "{:?}", s.notes);
        },
    );
}

#[test]
fn acceptance_08_fundamental_groups() {
    criterion(8, "fundamental group formulas", Duration::from_secs(30), || {
        let g = fundamental_group(&orbit(Algebra::Sl, "9,6")).unwrap();
        assert_eq!(g.order, 3);
        let g = fundamental_group(&orbit(Algebra::Sp, "6^2,4^2")).unwrap();
        assert_eq!(g.order, 4);
        let g = fundamental_group(&orbit(Algebra::So, "4^2,3,1")).unwrap();
        assert_eq!(
            g,
            FiniteGroupDescriptor::central_ext_by_2(1)
        );
        assert_eq!(g.order, 4);
        assert!(matches!(g.kind, GroupKind::CentralExtBy2(1)));
        // |pi1| = universal cover degree, exhaustively
        let s = scan::suite_fundamental_groups(12);
        assert!(s.violations.is_empty(), "{:?}", s.violations);
    });
}

#[test]
fn acceptance_09_property_sweep() {
    criterion(9, "exhaustive invariants up to size 14", Duration::from_secs(120), || {
        for s in [
            scan::suite_dual_involution(14),
            scan::suite_induction_steps(14),
            scan::suite_builder_reports(14),
        ] {
            assert!(
                s.violations.is_empty(),
                "suite `{}`: {:?}",
                s.name,
                s.violations
            );
        }
    });
}

#[test]
fn acceptance_10_slice_classification() {
    criterion(10, "slice classification up to size 12", Duration::from_secs(60), || {
        let s = scan::suite_slices(12);
        assert!(s.violations.is_empty(), "{:?}", s.violations);
    });
}

#[test]
fn acceptance_cover_menu_consistency() {
    // supporting check for criterion 8: menu degrees and the trivial entry
    let s = scan::suite_fundamental_groups(12);
    assert!(s.violations.is_empty(), "{:?}", s.violations);
    let menu = orbit_covers::cover_menu(&orbit(Algebra::Sl, "4")).unwrap();
    let degrees: Vec<u64> = menu.iter().map(|c| c.degree).collect();
    assert_eq!(degrees, vec![1, 2, 4]);
    assert_eq!(menu[1], CoverSpec::cyclic_sl(2));
}
