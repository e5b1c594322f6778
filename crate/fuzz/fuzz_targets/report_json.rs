#![no_main]

use libfuzzer_sys::fuzz_target;

use orbit_covers::report::{report_from_json_str, report_to_json};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = report_from_json_str(text) {
        // anything accepted must survive a serialize/parse cycle
        let json = serde_json::to_string(&report_to_json(&report)).expect("serializes");
        let back = report_from_json_str(&json).expect("round trip parses");
        assert_eq!(back, report);
    }
});
