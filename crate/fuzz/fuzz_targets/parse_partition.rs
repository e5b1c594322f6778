#![no_main]

use libfuzzer_sys::fuzz_target;

use orbit_covers::Partition;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(p) = Partition::parse_text(text) {
        // whatever parses must re-emit and re-parse to the same value
        let round = Partition::parse_text(&p.to_string()).expect("emitted text parses");
        assert_eq!(round, p);
        assert!(p.sum() > 0);
        // exercise the pure partition calculus on arbitrary accepted input
        let _ = p.dual().dual() == p;
        let _ = p.gap_members();
        let _ = p.counts();
    }
});
