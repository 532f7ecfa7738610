#![no_main]

use libfuzzer_sys::fuzz_target;

use dsp_core::formats::{parse_manifest, write_manifest};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // must never panic; accepted manifests round-trip through the writer
    if let Ok(records) = parse_manifest(text) {
        let rewritten = write_manifest(&records);
        let back = parse_manifest(&rewritten).expect("writer output parses");
        assert_eq!(back, records);
    }
});
