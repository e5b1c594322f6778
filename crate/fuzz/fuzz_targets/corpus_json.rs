#![no_main]

use libfuzzer_sys::fuzz_target;

use orbit_covers::corpus::{parse_corpus, run_corpus};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(cases) = parse_corpus(text) {
        // running arbitrary well-formed cases must never panic; size-capped
        // to keep malformed giant partitions from dominating the run
        let small = cases
            .into_iter()
            .filter(|c| c.input.partition.len() <= 64)
            .take(4)
            .collect::<Vec<_>>();
        let _ = run_corpus(&small);
    }
});
