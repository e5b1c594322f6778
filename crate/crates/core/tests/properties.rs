//! Randomized invariants complementing the exhaustive small-size scans.

use proptest::prelude::*;

use orbit_covers::builder::Strategy as BuildStrategy;
use orbit_covers::report::{report_from_json_str, report_to_json};
use orbit_covers::{build, cover_menu, Algebra, OrbitId, Partition};

fn raw_parts() -> impl Strategy<Value = Vec<u64>> {
    prop::collection::vec(1u64..=18, 1..=14)
}

fn algebra() -> impl Strategy<Value = Algebra> {
    prop_oneof![
        Just(Algebra::Sl),
        Just(Algebra::Sp),
        Just(Algebra::So)
    ]
}

proptest! {
    #[test]
    fn dual_is_an_involution(raw in raw_parts()) {
        let p = Partition::canonicalize(&raw).unwrap();
        prop_assert_eq!(p.dual().dual(), p);
    }

    #[test]
    fn dual_preserves_size(raw in raw_parts()) {
        let p = Partition::canonicalize(&raw).unwrap();
        prop_assert_eq!(p.dual().sum(), p.sum());
    }

    #[test]
    fn text_form_round_trips(raw in raw_parts()) {
        let p = Partition::canonicalize(&raw).unwrap();
        let text = p.to_string();
        prop_assert_eq!(Partition::parse_text(&text).unwrap(), p);
    }

    #[test]
    fn canonical_form_is_order_independent(raw in raw_parts(), seed in any::<u64>()) {
        let p = Partition::canonicalize(&raw).unwrap();
        let mut shuffled = raw.clone();
        // cheap deterministic shuffle
        let n = shuffled.len();
        for i in 0..n {
            let j = ((seed as usize).wrapping_mul(31).wrapping_add(i * 17)) % n;
            shuffled.swap(i, j);
        }
        prop_assert_eq!(Partition::canonicalize(&shuffled).unwrap(), p);
    }

    #[test]
    fn gap_members_sit_above_empty_slots(raw in raw_parts()) {
        let p = Partition::canonicalize(&raw).unwrap();
        for g in p.gap_members() {
            prop_assert!(p.is_member(g));
            prop_assert!(g > 1);
            prop_assert_eq!(p.multiplicity(g - 1), 0);
        }
    }

    #[test]
    fn witnesses_exactly_when_a_condition_fails(raw in raw_parts(), alg in algebra()) {
        let p = Partition::canonicalize(&raw).unwrap();
        let r = orbit_covers::conditions(alg, &p);
        use orbit_covers::Condition;
        let has = |c: Condition| r.witnesses.iter().any(|w| w.0 == c);
        prop_assert_eq!(!r.cond_i, has(Condition::I));
        prop_assert_eq!(!r.cond_ii, has(Condition::II));
        prop_assert_eq!(!r.cond_iii, has(Condition::III));
    }

    #[test]
    fn reports_round_trip_through_json(raw in raw_parts(), alg in algebra()) {
        let p = Partition::canonicalize(&raw).unwrap();
        let orbit = OrbitId::new(alg, p);
        prop_assume!(orbit.validate_jordan_type());
        for cover in cover_menu(&orbit).unwrap() {
            let report = build(&orbit, &cover, &BuildStrategy::Canonical).unwrap();
            let text = serde_json::to_string(&report_to_json(&report)).unwrap();
            prop_assert_eq!(report_from_json_str(&text).unwrap(), report);
        }
    }

    #[test]
    fn ledger_identity_on_random_orbits(raw in raw_parts(), alg in algebra()) {
        let p = Partition::canonicalize(&raw).unwrap();
        let orbit = OrbitId::new(alg, p);
        prop_assume!(orbit.validate_jordan_type());
        for cover in cover_menu(&orbit).unwrap() {
            let report = build(&orbit, &cover, &BuildStrategy::Canonical).unwrap();
            let (c, s, b) = report.degree_ledger();
            prop_assert_eq!(c, s * b);
            prop_assert_eq!(report.flag_type.iter().sum::<u64>(), orbit.size);
        }
    }
}
