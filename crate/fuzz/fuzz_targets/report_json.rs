#![no_main]

use basel::harness::parse_report;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    if let Ok(report) = parse_report(text) {
        // whatever parses must survive a write and a second read unchanged
        let json = report.to_json();
        let again = parse_report(&json).expect("re-reading an emitted report");
        assert_eq!(again.to_json(), json);
    }
});
