#![no_main]

use libfuzzer_sys::fuzz_target;

use dsp_core::formats::{parse_score_records, write_score_records};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // must never panic; accepted records round-trip through the writer
    if let Ok(records) = parse_score_records(text) {
        let rewritten = write_score_records(&records);
        let back = parse_score_records(&rewritten).expect("writer output parses");
        assert_eq!(back, records);
    }
});
