#![no_main]

use fishburn::seqperm::WordPattern;
use fishburn::Pattern;
use libfuzzer_sys::fuzz_target;

fuzz_target!(|data: &[u8]| {
    let Ok(text) = std::str::from_utf8(data) else { return };
    if text.len() > 64 {
        return;
    }
    if let Ok(q) = text.parse::<Pattern>() {
        if q.size() <= 10 {
            assert!(fishburn::pattern::contains(&q.matching, &q));
        }
    }
    let _ = text.parse::<WordPattern>();
    let _ = text.parse::<fishburn::poset::InducedPattern>();
});
