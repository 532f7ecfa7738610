#![no_main]

use libfuzzer_sys::fuzz_target;

use dsp_core::formats::{read_embedding_binary, write_embedding_binary};

fuzz_target!(|data: &[u8]| {
    // must never panic; accepted input must re-encode byte-identically
    if let Ok(seq) = read_embedding_binary(data) {
        let bytes = write_embedding_binary(&seq).expect("values came from binary32");
        assert_eq!(bytes, data);
    }
});
