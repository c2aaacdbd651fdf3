#![no_main]

use fishburn::seqperm::{parse_ints, transpose};
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if let Ok(v) = parse_ints(text, "sequence") {
        if v.len() <= 64 {
            let p = transpose(&v);
            assert_eq!(p.len(), v.len());
        }
    }
});
