#![no_main]

use libfuzzer_sys::fuzz_target;

use orbit_covers::builder::Strategy;
use orbit_covers::{build, cover_menu, fundamental_group, Algebra, OrbitId, Partition};

// Drive the whole pipeline from raw text: any partition the parser accepts
// must flow through every downstream operation without panicking, and the
// degree ledger must hold on every report that builds.
fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let Some((alg, rest)) = text.split_once(' ') else {
        return;
    };
    let Ok(algebra) = alg.parse::<Algebra>() else {
        return;
    };
    let Ok(p) = Partition::parse_text(rest) else {
        return;
    };
    if p.sum() > 60 {
        return;
    }
    let orbit = OrbitId::new(algebra, p);
    if !orbit.validate_jordan_type() {
        return;
    }
    let _ = fundamental_group(&orbit).expect("valid orbit has a group");
    let _ = orbit.conditions();
    let _ = orbit_covers::codim2_degenerations(&orbit);
    for cover in cover_menu(&orbit).expect("valid orbit has a menu") {
        let report = build(&orbit, &cover, &Strategy::Canonical).expect("canonical build");
        let (c, s, b) = report.degree_ledger();
        assert_eq!(c, s * b);
        assert_eq!(report.flag_type.iter().sum::<u64>(), orbit.size);
    }
});
