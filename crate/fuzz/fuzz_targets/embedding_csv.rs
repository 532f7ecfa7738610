#![no_main]

use libfuzzer_sys::fuzz_target;

use dsp_core::formats::{read_embedding_csv, write_embedding_csv, FormatError};

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else {
        return;
    };
    // must never panic; accepted matrices either survive a write/read
    // cycle or fail the write only because a value exceeds binary32
    if let Ok(seq) = read_embedding_csv(text) {
        match write_embedding_csv(&seq) {
            Ok(rewritten) => {
                let back = read_embedding_csv(&rewritten).expect("writer output parses");
                assert_eq!(back.n(), seq.n());
                assert_eq!(back.d(), seq.d());
            }
            Err(FormatError::Binary32Range { .. }) => {}
            Err(other) => panic!("unexpected write error: {other}"),
        }
    }
});
