#![no_main]

use basel::harness::{parse_figure_csv, Figure};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    let _ = text.trim().parse::<Figure>();
    if let Ok(rows) = parse_figure_csv(text) {
        for row in rows {
            assert!(row.x.is_finite() && row.y.is_finite());
        }
    }
});
